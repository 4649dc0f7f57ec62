//! JSON documents for Hopf algebras, cocycles, admissible pairs, YD modules
//! and projective representations.
//!
//! Tensor conventions, all indices 0-based:
//! - `mult [i,j,k,c]`: `eᵢeⱼ` has coefficient `c` at `e_k`.
//! - `comult [i,j,k,c]`: `Δ(eᵢ)` has coefficient `c` at `eⱼ⊗e_k`.
//! - `antipode [i,j,c]`: `S(eᵢ)` has coefficient `c` at `eⱼ`.
//! - cocycle `matrix [i,j,c]`: `σ(eᵢ,eⱼ) = c`.
//! - pair `action [h,b,b',c]` and `coaction [b,h,b',c]`: `h·b` and `ρ(b)`
//!   have coefficient `c` at `b'` and `h⊗b'` respectively.
//! - YD `action [h,m,m',c]` and `coaction [m,m',h,c]`: `h·m` and `δ(m)`
//!   have coefficient `c` at `m'` and `m'⊗h` respectively.

use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::biproduct::AdmissiblePair;
use crate::cocycle::Cocycle2;
use crate::error::{Error, Result};
use crate::fixtures::hopf_by_name;
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra};
use crate::lift::ProjectiveRep;
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::scalar::{expect_field, Field, FieldSpec};
use crate::yd::YdModule;

/// A scalar in the text syntax; bare integers are accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    fn of<F: Field>(x: &F) -> Self {
        ScalarText::Text(x.to_string())
    }

    fn parse<F: Field>(&self, at: &str) -> Result<F> {
        match self {
            ScalarText::Int(v) => Ok(F::from_i64(*v)),
            ScalarText::Text(t) => F::parse_scalar(t).map_err(|e| Error::Document(format!("{at}: {e}"))),
        }
    }
}

pub type Entry2 = (usize, usize, ScalarText);
pub type Entry3 = (usize, usize, usize, ScalarText);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfDocument {
    #[serde(default)]
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<ScalarText>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<ScalarText>,
    pub antipode: Vec<Entry2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

/// An associative algebra alone, for constructions without a coalgebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    #[serde(default)]
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<ScalarText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

/// A fixture by name, or an inline document. A bare name takes the field
/// from the caller; written documents always record it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Name(String),
    Fixture { fixture: String, field: FieldSpec },
    Inline(Box<HopfDocument>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocycleDocument {
    pub hopf: HopfRef,
    pub matrix: Vec<Entry2>,
}

/// Algebra and coalgebra tensors of `B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BialgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<ScalarText>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<ScalarText>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDocument {
    pub hopf: HopfRef,
    pub b: BialgebraDocument,
    pub action: Vec<Entry3>,
    pub coaction: Vec<Entry3>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YdDocument {
    pub sigma: CocycleDocument,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub action: Vec<Entry3>,
    pub coaction: Vec<Entry3>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectiveRepDocument {
    pub hopf: HopfRef,
    pub dim: usize,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Vec<ScalarText>>>,
    pub alpha: CocycleDocument,
}

/// Parses JSON text, reporting syntax and shape errors with their line and
/// column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.strip_suffix(&format!(" at line {} column {}", e.line(), e.column())).unwrap_or(&msg);
        Error::Document(format!("line {}, column {}: {msg}", e.line(), e.column()))
    })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn check_index(i: usize, bound: usize, at: &str) -> Result<()> {
    if i < bound {
        Ok(())
    } else {
        Err(Error::Document(format!("{at}: index {i} out of range 0..{bound}")))
    }
}

fn check_len(len: usize, expected: usize, at: &str) -> Result<()> {
    if len == expected {
        Ok(())
    } else {
        Err(Error::Document(format!("{at}: expected {expected} entries, found {len}")))
    }
}

fn entries3<F: Field>(map: &LinMap<F>, n: usize) -> Vec<Entry3> {
    map.triplets().map(|(s, t, v)| (s / n, s % n, t, ScalarText::of(v))).collect()
}

/// `[a,b,c,v]` into a map on `a*n + b → c`.
fn map_from3<F: Field>(entries: &[Entry3], (na, nb, nc): (usize, usize, usize), at: &str) -> Result<LinMap<F>> {
    let mut out = Vec::with_capacity(entries.len());
    for (k, (a, b, c, v)) in entries.iter().enumerate() {
        let here = format!("{at}[{k}]");
        check_index(*a, na, &here)?;
        check_index(*b, nb, &here)?;
        check_index(*c, nc, &here)?;
        out.push((a * nb + b, *c, v.parse::<F>(&here)?));
    }
    Ok(LinMap::from_triplets(na * nb, nc, out))
}

/// `[a,b,c,v]` into a map on `a → b*nc + c`.
fn map_to3<F: Field>(entries: &[Entry3], (na, nb, nc): (usize, usize, usize), at: &str) -> Result<LinMap<F>> {
    let mut out = Vec::with_capacity(entries.len());
    for (k, (a, b, c, v)) in entries.iter().enumerate() {
        let here = format!("{at}[{k}]");
        check_index(*a, na, &here)?;
        check_index(*b, nb, &here)?;
        check_index(*c, nc, &here)?;
        out.push((*a, b * nc + c, v.parse::<F>(&here)?));
    }
    Ok(LinMap::from_triplets(na, nb * nc, out))
}

fn vector<F: Field>(v: &[ScalarText], n: usize, at: &str) -> Result<Vec<F>> {
    check_len(v.len(), n, at)?;
    v.iter().enumerate().map(|(k, x)| x.parse(&format!("{at}[{k}]"))).collect()
}

fn texts<F: Field>(v: &[F]) -> Vec<ScalarText> {
    v.iter().map(ScalarText::of).collect()
}

fn comult_entries<F: Field>(c: &Coalgebra<F>) -> Vec<Entry3> {
    let n = c.dim();
    c.comult().triplets().map(|(s, t, v)| (s, t / n, t % n, ScalarText::of(v))).collect()
}

pub fn hopf_to_document<F: Field>(h: &HopfAlgebra<F>) -> HopfDocument {
    let n = h.dim();
    HopfDocument {
        name: h.name().to_string(),
        field: F::spec(),
        dim: n,
        basis: h.basis().to_vec(),
        mult: entries3(h.algebra().mult(), n),
        unit: texts(h.algebra().unit()),
        comult: comult_entries(h.coalgebra()),
        counit: texts(h.coalgebra().counit()),
        antipode: h.antipode().triplets().map(|(s, t, v)| (s, t, ScalarText::of(v))).collect(),
        provenance: h.provenance().cloned(),
    }
}

pub fn algebra_to_document<F: Field>(name: &str, a: &Algebra<F>, provenance: Option<Value>) -> AlgebraDocument {
    let n = a.dim();
    AlgebraDocument {
        name: name.to_string(),
        field: F::spec(),
        dim: n,
        basis: a.basis().to_vec(),
        mult: entries3(a.mult(), n),
        unit: texts(a.unit()),
        provenance,
    }
}

pub fn algebra_from_document<F: Field>(doc: &AlgebraDocument) -> Result<Algebra<F>> {
    expect_field::<F>(doc.field).map_err(|e| Error::Document(e.to_string()))?;
    let n = doc.dim;
    check_len(doc.basis.len(), n, "basis")?;
    Algebra::new(doc.basis.clone(), map_from3(&doc.mult, (n, n, n), "mult")?, vector(&doc.unit, n, "unit")?)
}

/// Builds the Hopf algebra without running its axiom suite.
pub fn hopf_from_document<F: Field>(doc: &HopfDocument) -> Result<HopfAlgebra<F>> {
    expect_field::<F>(doc.field).map_err(|e| Error::Document(e.to_string()))?;
    let n = doc.dim;
    check_len(doc.basis.len(), n, "basis")?;
    let mult = map_from3::<F>(&doc.mult, (n, n, n), "mult")?;
    let comult = map_to3::<F>(&doc.comult, (n, n, n), "comult")?;
    let mut s = Vec::with_capacity(doc.antipode.len());
    for (k, (i, j, v)) in doc.antipode.iter().enumerate() {
        let here = format!("antipode[{k}]");
        check_index(*i, n, &here)?;
        check_index(*j, n, &here)?;
        s.push((*i, *j, v.parse::<F>(&here)?));
    }
    let algebra = Algebra::new(doc.basis.clone(), mult, vector(&doc.unit, n, "unit")?)?;
    let coalgebra = Coalgebra::new(doc.basis.clone(), comult, vector(&doc.counit, n, "counit")?)?;
    let name = if doc.name.is_empty() { "H" } else { &doc.name };
    let mut h = HopfAlgebra::new(name, algebra, coalgebra, LinMap::from_triplets(n, n, s))?;
    if let Some(p) = &doc.provenance {
        h = h.with_provenance(p.clone());
    }
    Ok(h)
}

/// A fixture name when `h` is that fixture, otherwise the inline document.
pub fn hopf_ref<F: Field>(h: &HopfAlgebra<F>) -> HopfRef {
    match hopf_by_name::<F>(h.name()) {
        Ok(f) if f == *h => HopfRef::Fixture { fixture: h.name().to_string(), field: F::spec() },
        _ => HopfRef::Inline(Box::new(hopf_to_document(h))),
    }
}

/// Resolves a reference to a verified Hopf algebra.
pub fn resolve_hopf<F: Field>(r: &HopfRef) -> Result<Arc<HopfAlgebra<F>>> {
    match r {
        HopfRef::Name(name) => Ok(Arc::new(hopf_by_name(name)?)),
        HopfRef::Fixture { fixture, field } => {
            expect_field::<F>(*field).map_err(|e| Error::Document(e.to_string()))?;
            Ok(Arc::new(hopf_by_name(fixture)?))
        }
        HopfRef::Inline(doc) => Ok(Arc::new(hopf_from_document::<F>(doc)?.verified()?)),
    }
}

pub fn cocycle_to_document<F: Field>(sigma: &Cocycle2<F>) -> CocycleDocument {
    let n = sigma.dim();
    let mut matrix = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = sigma.value(i, j);
            if !v.is_zero() {
                matrix.push((i, j, ScalarText::of(v)));
            }
        }
    }
    CocycleDocument { hopf: hopf_ref(sigma.hopf()), matrix }
}

pub fn cocycle_from_document<F: Field>(doc: &CocycleDocument) -> Result<Cocycle2<F>> {
    let h = resolve_hopf::<F>(&doc.hopf)?;
    let n = h.dim();
    let mut m = Matrix::zeros(n, n);
    for (k, (i, j, v)) in doc.matrix.iter().enumerate() {
        let here = format!("matrix[{k}]");
        check_index(*i, n, &here)?;
        check_index(*j, n, &here)?;
        m[(*i, *j)] += v.parse::<F>(&here)?;
    }
    Cocycle2::new(h, m)
}

pub fn pair_to_document<F: Field>(pair: &AdmissiblePair<F>) -> PairDocument {
    let m = pair.algebra().dim();
    PairDocument {
        hopf: hopf_ref(pair.hopf()),
        b: BialgebraDocument {
            dim: m,
            basis: pair.algebra().basis().to_vec(),
            mult: entries3(pair.algebra().mult(), m),
            unit: texts(pair.algebra().unit()),
            comult: comult_entries(pair.coalgebra()),
            counit: texts(pair.coalgebra().counit()),
        },
        action: entries3(pair.action(), m),
        coaction: pair.coaction().triplets().map(|(b, t, v)| (b, t / m, t % m, ScalarText::of(v))).collect(),
    }
}

pub fn pair_from_document<F: Field>(doc: &PairDocument) -> Result<AdmissiblePair<F>> {
    let h = resolve_hopf::<F>(&doc.hopf)?;
    let n = h.dim();
    let b = &doc.b;
    let m = b.dim;
    check_len(b.basis.len(), m, "b.basis")?;
    let algebra = Algebra::new(b.basis.clone(), map_from3(&b.mult, (m, m, m), "b.mult")?, vector(&b.unit, m, "b.unit")?)?;
    let coalgebra =
        Coalgebra::new(b.basis.clone(), map_to3(&b.comult, (m, m, m), "b.comult")?, vector(&b.counit, m, "b.counit")?)?;
    let action = map_from3(&doc.action, (n, m, m), "action")?;
    let coaction = map_to3(&doc.coaction, (m, n, m), "coaction")?;
    AdmissiblePair::new(h, algebra, coalgebra, action, coaction)
}

pub fn yd_to_document<F: Field>(module: &YdModule<F>) -> YdDocument {
    let d = module.dim();
    let n = module.hopf().dim();
    YdDocument {
        sigma: cocycle_to_document(module.sigma()),
        dim: d,
        basis: module.basis().to_vec(),
        action: entries3(module.action(), d),
        coaction: module.coaction().triplets().map(|(m, t, v)| (m, t / n, t % n, ScalarText::of(v))).collect(),
    }
}

pub fn yd_from_document<F: Field>(doc: &YdDocument) -> Result<YdModule<F>> {
    let sigma = cocycle_from_document::<F>(&doc.sigma)?;
    let n = sigma.dim();
    let d = doc.dim;
    let basis = if doc.basis.is_empty() {
        (0..d).map(|k| format!("m{k}")).collect()
    } else {
        check_len(doc.basis.len(), d, "basis")?;
        doc.basis.clone()
    };
    let action = map_from3(&doc.action, (n, d, d), "action")?;
    let coaction = map_to3(&doc.coaction, (d, d, n), "coaction")?;
    YdModule::new(sigma, basis, action, coaction)
}

pub fn rep_to_document<F: Field>(rep: &ProjectiveRep<F>) -> ProjectiveRepDocument {
    let t = rep
        .matrices()
        .iter()
        .map(|m| (0..m.rows()).map(|i| texts(m.row(i))).collect())
        .collect();
    ProjectiveRepDocument { hopf: hopf_ref(rep.hopf()), dim: rep.dim(), t, alpha: cocycle_to_document(rep.alpha()) }
}

pub fn rep_from_document<F: Field>(doc: &ProjectiveRepDocument) -> Result<ProjectiveRep<F>> {
    let h = resolve_hopf::<F>(&doc.hopf)?;
    let alpha = cocycle_from_document::<F>(&doc.alpha)?;
    let (n, d) = (h.dim(), doc.dim);
    check_len(doc.t.len(), n, "T")?;
    let mut mats = Vec::with_capacity(n);
    for (k, rows) in doc.t.iter().enumerate() {
        check_len(rows.len(), d, &format!("T[{k}]"))?;
        let mut m = Matrix::zeros(d, d);
        for (i, row) in rows.iter().enumerate() {
            let r = vector::<F>(row, d, &format!("T[{k}][{i}]"))?;
            for (j, v) in r.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        mats.push(m);
    }
    ProjectiveRep::new(h, mats, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::Cocycle1;
    use crate::fixtures::{sweedler_h4, sweedler_lazy_cocycle, taft9, yd_pair_h4};
    use crate::scalar::{Cyclotomic, Fp};

    type F7 = Fp<7>;
    type F5 = Fp<5>;

    #[test]
    fn hopf_round_trip_for_fixtures() {
        let h: HopfAlgebra<F5> = sweedler_h4().unwrap();
        let doc = hopf_to_document(&h);
        let back: HopfAlgebra<F5> = hopf_from_document(&parse_json(&to_json(&doc)).unwrap()).unwrap();
        assert_eq!(back, h);
        assert_eq!(hopf_to_document(&back), doc);
        let t: HopfAlgebra<Cyclotomic<3>> = taft9().unwrap();
        let doc = hopf_to_document(&t);
        let back: HopfAlgebra<Cyclotomic<3>> = hopf_from_document(&parse_json(&to_json(&doc)).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn algebra_round_trip() {
        let h: HopfAlgebra<F5> = sweedler_h4().unwrap();
        let doc = algebra_to_document("H4", h.algebra(), None);
        let back: Algebra<F5> = algebra_from_document(&parse_json(&to_json(&doc)).unwrap()).unwrap();
        assert_eq!(&back, h.algebra());
    }

    #[test]
    fn field_mismatch_is_a_document_error() {
        let doc = hopf_to_document(&sweedler_h4::<F5>().unwrap());
        assert!(matches!(hopf_from_document::<Fp<7>>(&doc), Err(Error::Document(_))));
    }

    #[test]
    fn syntax_errors_carry_a_location() {
        let text = to_json(&hopf_to_document(&sweedler_h4::<F5>().unwrap())).replacen("\"mult\": [", "\"mult\": [[0,", 1);
        match parse_json::<HopfDocument>(&text) {
            Err(Error::Document(msg)) => assert!(msg.starts_with("line "), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_index_and_scalar_name_their_entry() {
        let mut doc = hopf_to_document(&sweedler_h4::<F5>().unwrap());
        doc.mult[3].2 = 9;
        let err = hopf_from_document::<F5>(&doc).unwrap_err().to_string();
        assert!(err.contains("mult[3]"), "{err}");
        let mut doc = hopf_to_document(&sweedler_h4::<F5>().unwrap());
        doc.counit[1] = ScalarText::Text("x/".into());
        let err = hopf_from_document::<F5>(&doc).unwrap_err().to_string();
        assert!(err.contains("counit[1]"), "{err}");
    }

    #[test]
    fn cocycle_pair_yd_and_rep_round_trip() {
        let h = Arc::new(sweedler_h4::<F5>().unwrap());
        let s = sweedler_lazy_cocycle(&h, F5::new(2)).unwrap();
        let doc = cocycle_to_document(&s);
        assert_eq!(doc.hopf, HopfRef::Fixture { fixture: "H4".into(), field: F5::spec() });
        let text = to_json(&doc);
        assert!(cocycle_from_document::<F7>(&doc).is_err());
        let bare = CocycleDocument { hopf: HopfRef::Name("H4".into()), ..doc.clone() };
        assert_eq!(cocycle_from_document::<F5>(&bare).unwrap(), s);
        assert_eq!(cocycle_from_document::<F5>(&parse_json(&text).unwrap()).unwrap(), s);
        assert_eq!(to_json(&cocycle_to_document(&cocycle_from_document::<F5>(&doc).unwrap())), text);

        let pair = yd_pair_h4::<F5>().unwrap();
        let pdoc = pair_to_document(&pair);
        let back = pair_from_document::<F5>(&parse_json(&to_json(&pdoc)).unwrap()).unwrap();
        assert_eq!(pair_to_document(&back), pdoc);

        let m = YdModule::regular(s.clone()).unwrap();
        let ydoc = yd_to_document(&m);
        let back = yd_from_document::<F5>(&parse_json(&to_json(&ydoc)).unwrap()).unwrap();
        assert_eq!(back.action(), m.action());
        assert_eq!(back.coaction(), m.coaction());

        let rep = ProjectiveRep::regular_twisted(&s).unwrap();
        let rdoc = rep_to_document(&rep);
        let back = rep_from_document::<F5>(&parse_json(&to_json(&rdoc)).unwrap()).unwrap();
        assert_eq!(back.matrices(), rep.matrices());
        assert_eq!(rep_to_document(&back), rdoc);

        // Non-fixture Hopf algebras are inlined.
        let gamma = Cocycle1::new(h.clone(), vec![F5::new(1), F5::new(1), F5::new(1), F5::new(0)]).unwrap();
        let renamed = Arc::new((*h).clone().with_name("K"));
        let d = Cocycle2::new(renamed, gamma.d1().unwrap().matrix().clone()).unwrap();
        assert!(matches!(cocycle_to_document(&d).hopf, HopfRef::Inline(_)));
    }

    #[test]
    fn integers_are_accepted_as_scalars() {
        let text = r#"{"hopf": "kZ2", "matrix": [[0,0,1],[0,1,"1"],[1,0,1],[1,1,"2"]]}"#;
        let s = cocycle_from_document::<Fp<3>>(&parse_json(text).unwrap()).unwrap();
        assert_eq!(s.value(1, 1), &Fp::<3>::new(2));
    }
}
