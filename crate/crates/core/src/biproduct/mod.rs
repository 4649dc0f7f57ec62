//! Admissible pairs `(H, B)`, Radford biproducts `B×H`, generalized smash
//! products and cocycles for `B` inside Yetter-Drinfeld modules over `H`.

mod yd;

use std::sync::{Arc, OnceLock};

use serde_json::json;

pub use yd::{
    extend_yd_cocycle, extend_yd_gamma, extension_homomorphism, theta_family_map, ThetaImage, YdCocycle1,
    YdCocycle2, YdExtension,
};

use crate::cocycle::{Cocycle2, TwistMode};
use crate::error::{require, Error, Result};
use crate::hopf::{
    add_scaled, convolution_inverse, kron, power_names, tensor_names, unit_vector, Algebra, Coalgebra,
    ComoduleAlgebra, ConvElement, HopfAlgebra,
};
use crate::linmap::LinMap;
use crate::report::{format_vector, Check, Report, Status, Witness};
use crate::scalar::Field;

/// `H` together with an algebra and coalgebra `B`, an action
/// `h⊗b ↦ h·b` (source index `h·m + b`) and a coaction
/// `b ↦ b^(−1)⊗b^(0)` (target index `h·m + b`).
#[derive(Clone, Debug)]
pub struct AdmissiblePair<F> {
    hopf: Arc<HopfAlgebra<F>>,
    algebra: Algebra<F>,
    coalgebra: Coalgebra<F>,
    action: LinMap<F>,
    coaction: LinMap<F>,
    antipode: OnceLock<Option<LinMap<F>>>,
}

impl<F: Field> AdmissiblePair<F> {
    pub fn new(
        hopf: Arc<HopfAlgebra<F>>,
        algebra: Algebra<F>,
        coalgebra: Coalgebra<F>,
        action: LinMap<F>,
        coaction: LinMap<F>,
    ) -> Result<Self> {
        hopf.require_verified()?;
        let (n, m) = (hopf.dim(), algebra.dim());
        if coalgebra.dim() != m {
            return Err(Error::DimensionMismatch(format!(
                "B has algebra dimension {m} and coalgebra dimension {}",
                coalgebra.dim()
            )));
        }
        if action.source() != n * m || action.target() != m {
            return Err(Error::DimensionMismatch(format!(
                "action is {}→{}, expected {}→{m}",
                action.source(),
                action.target(),
                n * m
            )));
        }
        if coaction.source() != m || coaction.target() != n * m {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}→{}, expected {m}→{}",
                coaction.source(),
                coaction.target(),
                n * m
            )));
        }
        Ok(AdmissiblePair {
            hopf,
            algebra,
            coalgebra,
            action,
            coaction,
            antipode: OnceLock::new(),
        })
    }

    /// `(H, k)` with trivial action and coaction.
    pub fn trivial(hopf: Arc<HopfAlgebra<F>>) -> Result<Self> {
        let n = hopf.dim();
        let eps = hopf.coalgebra().counit().to_vec();
        let action = LinMap::from_fn(n, 1, |h| vec![eps[h].clone()]);
        let coaction = LinMap::from_columns(n, vec![hopf.one()]);
        AdmissiblePair::new(hopf, Algebra::ground(), Coalgebra::ground(), action, coaction)
    }

    /// `(k, B)` for an ordinary Hopf algebra `B`.
    pub fn over_ground_field(b: &HopfAlgebra<F>) -> Result<Self> {
        let k = Arc::new(crate::fixtures::group_algebra(1)?);
        let m = b.dim();
        AdmissiblePair::new(
            k,
            b.algebra().clone(),
            b.coalgebra().clone(),
            LinMap::identity(m),
            LinMap::identity(m),
        )
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }

    pub fn action(&self) -> &LinMap<F> {
        &self.action
    }

    pub fn coaction(&self) -> &LinMap<F> {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra.basis()
    }

    /// `e_h · e_b`.
    pub fn act(&self, h: usize, b: usize) -> &[(usize, F)] {
        self.action.column(h * self.dim() + b)
    }

    /// `x · v` for vectors.
    pub fn act_vec(&self, x: &[F], v: &[F]) -> Vec<F> {
        let m = self.dim();
        let mut out = vec![F::zero(); m];
        for (h, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (b, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                self.action.accumulate_column(h * m + b, &(a.clone() * c.clone()), &mut out);
            }
        }
        out
    }

    /// `b ↦ b^(−1) ⊗ b^(0)` as `(h, b', c)`.
    pub fn coact(&self, b: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let m = self.dim();
        self.coaction.column(b).iter().map(move |(t, c)| (t / m, t % m, c))
    }

    pub fn eps(&self, b: usize) -> F {
        self.coalgebra.counit()[b].clone()
    }

    /// `S_B`, the convolution inverse of `id_B`, when it exists.
    pub fn antipode(&self) -> Option<&LinMap<F>> {
        self.antipode
            .get_or_init(|| {
                let id = ConvElement::new(&self.coalgebra, &self.algebra, LinMap::identity(self.dim())).ok()?;
                convolution_inverse(&id).ok().map(|inv| inv.map)
            })
            .as_ref()
    }

    pub fn is_hopf_admissible(&self) -> bool {
        self.antipode().is_some()
    }

    /// `b(h·b')` with `h` acting on the second factor, as a vector in `B`.
    fn b_mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.algebra.mul(x, y)
    }
}

/// Axiom groups (1)–(6) of an admissible pair plus the algebra and coalgebra
/// laws of `B`; a last leaf records whether `id_B` is convolution invertible.
pub fn check_admissible<F: Field>(pair: &AdmissiblePair<F>) -> Report {
    let h = pair.hopf();
    let (n, m) = (h.dim(), pair.dim());
    let alg = pair.algebra();
    let co = pair.coalgebra();
    let bn = |i: usize| alg.basis()[i].clone();
    let hn = |i: usize| h.basis()[i].clone();
    let hb_names = tensor_names(h.basis(), alg.basis());
    let bb_names = power_names(alg.basis(), 2);
    let hbb_names = tensor_names(h.basis(), &bb_names);
    let ev = |i: usize| unit_vector::<F>(m, i);
    let hv = |i: usize| unit_vector::<F>(n, i);
    let coact_vec = |v: &[F]| pair.coaction.apply(v);

    let mut base = alg.check_algebra();
    base.extend(co.check_coalgebra());
    let base = Report::group("B is an algebra and a coalgebra", base);

    // (1) module algebra
    let mut unit_act = Check::new("1·b = b");
    let mut assoc_act = Check::new("(hk)·b = h·(k·b)");
    let mut mult_act = Check::new("h·(bc) = (h1·b)(h2·c)");
    let mut one_act = Check::new("h·1 = ε(h)1");
    for b in 0..m {
        let v = pair.act_vec(&h.one(), &ev(b));
        unit_act.record(v == ev(b), || Witness::new(vec![bn(b)], alg.format(&v), bn(b)));
    }
    for x in 0..n {
        for y in 0..n {
            let xy = h.algebra().mult().column_dense(x * n + y);
            for b in 0..m {
                let lhs = pair.act_vec(&xy, &ev(b));
                let rhs = pair.act_vec(&hv(x), &pair.act_vec(&hv(y), &ev(b)));
                assoc_act.record(lhs == rhs, || Witness::new(vec![hn(x), hn(y), bn(b)], alg.format(&lhs), alg.format(&rhs)));
            }
        }
        for b in 0..m {
            for c in 0..m {
                let lhs = pair.act_vec(&hv(x), &alg.mult().column_dense(b * m + c));
                let mut rhs = vec![F::zero(); m];
                for (x1, x2, u) in h.coalgebra().coproduct(x) {
                    let l = pair.act_vec(&hv(x1), &ev(b));
                    let r = pair.act_vec(&hv(x2), &ev(c));
                    add_scaled(&mut rhs, u, &alg.mul(&l, &r));
                }
                mult_act.record(lhs == rhs, || Witness::new(vec![hn(x), bn(b), bn(c)], alg.format(&lhs), alg.format(&rhs)));
            }
        }
        let lhs = pair.act_vec(&hv(x), alg.unit());
        let rhs: Vec<F> = alg.unit().iter().map(|u| u.clone() * h.counit(x)).collect();
        one_act.record(lhs == rhs, || Witness::new(vec![hn(x), "1".into()], alg.format(&lhs), alg.format(&rhs)));
    }
    let g1 = Report::group(
        "B is a left H-module algebra",
        vec![unit_act.finish(), assoc_act.finish(), mult_act.finish(), one_act.finish()],
    );

    // (2) comodule algebra
    let as_comodule = ComoduleAlgebra::new(h.clone(), alg.clone(), pair.coaction.clone());
    let g2 = match as_comodule {
        Ok(c) => {
            let r = c.check();
            // the algebra laws of B are reported once, under `base`
            let children = r.children.into_iter().filter(|c| c.name.starts_with("coaction")).collect();
            Report::group("B is a left H-comodule algebra", children)
        }
        Err(e) => Report::verdict("B is a left H-comodule algebra", false, || Witness::new(vec![], e, "")),
    };

    // (3) comodule coalgebra, (4) module coalgebra
    let mut r1 = Check::new("b1^(-1)b2^(-1)⊗b1^(0)⊗b2^(0) = b^(-1)⊗Δ(b^(0))");
    let mut r2 = Check::new("b^(-1)ε(b^(0)) = ε(b)1");
    for b in 0..m {
        let mut lhs = vec![F::zero(); n * m * m];
        for (b1, b2, u) in co.coproduct(b) {
            for (x, c1, v) in pair.coact(b1) {
                for (y, c2, w) in pair.coact(b2) {
                    let coef = u.clone() * v.clone() * w.clone();
                    for (z, p) in h.product(x, y) {
                        lhs[z * m * m + c1 * m + c2] += coef.clone() * p.clone();
                    }
                }
            }
        }
        let mut rhs = vec![F::zero(); n * m * m];
        let mut eps = vec![F::zero(); n];
        for (x, b0, u) in pair.coact(b) {
            for (c1, c2, v) in co.coproduct(b0) {
                rhs[x * m * m + c1 * m + c2] += u.clone() * v.clone();
            }
            eps[x] += u.clone() * pair.eps(b0);
        }
        r1.record(lhs == rhs, || {
            Witness::new(vec![bn(b)], format_vector(&lhs, &hbb_names), format_vector(&rhs, &hbb_names))
        });
        let expected: Vec<F> = h.one().into_iter().map(|u| u * pair.eps(b)).collect();
        r2.record(eps == expected, || Witness::new(vec![bn(b)], h.format(&eps), h.format(&expected)));
    }
    let g3 = Report::group("B is a left H-comodule coalgebra", vec![r1.finish(), r2.finish()]);

    let mut r3 = Check::new("Δ(h·b) = h1·b1⊗h2·b2");
    let mut r4 = Check::new("ε(h·b) = ε(h)ε(b)");
    for x in 0..n {
        for b in 0..m {
            let hb = pair.act_vec(&hv(x), &ev(b));
            let lhs = co.comul(&hb);
            let mut rhs = vec![F::zero(); m * m];
            for (x1, x2, u) in h.coalgebra().coproduct(x) {
                for (b1, b2, v) in co.coproduct(b) {
                    let l = pair.act_vec(&hv(x1), &ev(b1));
                    let r = pair.act_vec(&hv(x2), &ev(b2));
                    add_scaled(&mut rhs, &(u.clone() * v.clone()), &kron(&l, &r));
                }
            }
            r3.record(lhs == rhs, || {
                Witness::new(vec![hn(x), bn(b)], format_vector(&lhs, &bb_names), format_vector(&rhs, &bb_names))
            });
            let e = co.eps(&hb);
            let f = h.counit(x) * pair.eps(b);
            r4.record(e == f, || Witness::new(vec![hn(x), bn(b)], &e, &f));
        }
    }
    let g4 = Report::group("B is a left H-module coalgebra", vec![r3.finish(), r4.finish()]);

    // (5)
    let mut eps_alg = Check::new("ε_B(bc) = ε_B(b)ε_B(c)");
    for b in 0..m {
        for c in 0..m {
            let e = co.eps(&alg.mult().column_dense(b * m + c));
            let f = pair.eps(b) * pair.eps(c);
            eps_alg.record(e == f, || Witness::new(vec![bn(b), bn(c)], &e, &f));
        }
    }
    let e1 = co.eps(alg.unit());
    eps_alg.record(e1.is_one(), || Witness::new(vec!["1".into()], &e1, 1));
    let d1 = co.comul(alg.unit());
    let one_one = kron(alg.unit(), alg.unit());
    let delta_one = Report::verdict("Δ_B(1) = 1⊗1", d1 == one_one, || {
        Witness::new(vec!["1".into()], format_vector(&d1, &bb_names), format_vector(&one_one, &bb_names))
    });
    let g5 = Report::group("ε_B is an algebra map and Δ_B(1) = 1⊗1", vec![eps_alg.finish(), delta_one]);

    // (6)
    let mut r5 = Check::new("Δ(bc) = b1(b2^(-1)·c1)⊗b2^(0)c2");
    for b in 0..m {
        for c in 0..m {
            let lhs = co.comul(&alg.mult().column_dense(b * m + c));
            let mut rhs = vec![F::zero(); m * m];
            for (b1, b2, u) in co.coproduct(b) {
                for (x, b0, v) in pair.coact(b2) {
                    for (c1, c2, w) in co.coproduct(c) {
                        let left = pair.b_mul(&ev(b1), &pair.act_vec(&hv(x), &ev(c1)));
                        let right = alg.mul(&ev(b0), &ev(c2));
                        add_scaled(&mut rhs, &(u.clone() * v.clone() * w.clone()), &kron(&left, &right));
                    }
                }
            }
            r5.record(lhs == rhs, || {
                Witness::new(vec![bn(b), bn(c)], format_vector(&lhs, &bb_names), format_vector(&rhs, &bb_names))
            });
        }
    }
    let mut r6 = Check::new("(h1·b)^(-1)h2⊗(h1·b)^(0) = h1b^(-1)⊗h2·b^(0)");
    for x in 0..n {
        for b in 0..m {
            let mut lhs = vec![F::zero(); n * m];
            let mut rhs = vec![F::zero(); n * m];
            for (x1, x2, u) in h.coalgebra().coproduct(x) {
                let rho = coact_vec(&pair.act_vec(&hv(x1), &ev(b)));
                for (t, v) in rho.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let (y, b0) = (t / m, t % m);
                    for (z, p) in h.product(y, x2) {
                        lhs[z * m + b0] += u.clone() * v.clone() * p.clone();
                    }
                }
                for (y, b0, v) in pair.coact(b) {
                    let hb = pair.act_vec(&hv(x2), &ev(b0));
                    for (z, p) in h.product(x1, y) {
                        add_scaled(&mut rhs, &(u.clone() * v.clone() * p.clone()), &kron(&hv(*z), &hb));
                    }
                }
            }
            r6.record(lhs == rhs, || {
                Witness::new(vec![hn(x), bn(b)], format_vector(&lhs, &hb_names), format_vector(&rhs, &hb_names))
            });
        }
    }
    let g6 = Report::group("compatibility of Δ_B with the product and of the action with the coaction", vec![r5.finish(), r6.finish()]);

    let hopf_admissible = if pair.is_hopf_admissible() {
        Report::leaf("Hopf admissible", Status::Pass)
    } else {
        Report::skip("Hopf admissible", "id_B has no convolution inverse")
    };
    Report::group("admissible pair", vec![base, g1, g2, g3, g4, g5, g6, hopf_admissible])
}

/// The Radford biproduct `B×H` on the basis `b×h`, index `b·n + h`.
#[derive(Clone, Debug)]
pub struct Biproduct<F> {
    pub pair: Arc<AdmissiblePair<F>>,
    pub hopf: Arc<HopfAlgebra<F>>,
}

impl<F: Field> Biproduct<F> {
    pub fn index(&self, b: usize, h: usize) -> usize {
        b * self.pair.hopf().dim() + h
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// `π(b×h) = ε(b)h`.
    pub fn projection(&self) -> LinMap<F> {
        let n = self.pair.hopf().dim();
        LinMap::from_fn(self.dim(), n, |i| {
            let (b, h) = (i / n, i % n);
            let mut out = unit_vector(n, h);
            out[h] = self.pair.eps(b);
            out
        })
    }
}

/// `(b×h)(b'×h') = b(h₁·b')×h₂h'` on `B⊗H` for any algebra structure on `B`.
pub(crate) fn smash_algebra<F: Field>(pair: &AdmissiblePair<F>, b_alg: &Algebra<F>) -> Algebra<F> {
    let h = pair.hopf();
    let (n, m) = (h.dim(), pair.dim());
    let basis: Vec<String> = b_alg
        .basis()
        .iter()
        .flat_map(|b| h.basis().iter().map(move |x| format!("{b}×{x}")))
        .collect();
    Algebra::from_fn(basis, kron(b_alg.unit(), &h.one()), |s, t| {
        let (b, x) = (s / n, s % n);
        let (c, y) = (t / n, t % n);
        let mut out = vec![F::zero(); m * n];
        for (x1, x2, u) in h.coalgebra().coproduct(x) {
            let hc = pair.act_vec(&unit_vector(n, x1), &unit_vector(m, c));
            let bc = b_alg.mul(&unit_vector(m, b), &hc);
            for (z, p) in h.product(x2, y) {
                add_scaled(&mut out, &(u.clone() * p.clone()), &kron(&bc, &unit_vector(n, *z)));
            }
        }
        out
    })
}

/// Smash product algebra, smash coproduct `Δ(b×h) = (b₁×b₂^(−1)h₁)⊗(b₂^(0)×h₂)`
/// and antipode `S(b×h) = (1×S_H(b^(−1)h))(S_B(b^(0))×1)`.
pub fn radford_biproduct<F: Field>(pair: &Arc<AdmissiblePair<F>>) -> Result<Biproduct<F>> {
    let report = check_admissible(pair);
    if !report.passed() {
        return Err(Error::axioms("admissible pair", report));
    }
    let s_b = pair
        .antipode()
        .ok_or_else(|| Error::Precondition("the pair is not Hopf admissible".into()))?;
    let h = pair.hopf();
    let (n, m) = (h.dim(), pair.dim());
    let nm = n * m;
    let algebra = smash_algebra(pair, pair.algebra());
    let co = pair.coalgebra();
    let coalgebra = Coalgebra::from_fn(algebra.basis().to_vec(), kron(co.counit(), h.coalgebra().counit()), |i| {
        let (b, x) = (i / n, i % n);
        let mut out = vec![F::zero(); nm * nm];
        for (b1, b2, u) in co.coproduct(b) {
            for (y, b0, v) in pair.coact(b2) {
                for (x1, x2, w) in h.coalgebra().coproduct(x) {
                    for (z, p) in h.product(y, x1) {
                        out[(b1 * n + z) * nm + b0 * n + x2] += u.clone() * v.clone() * w.clone() * p.clone();
                    }
                }
            }
        }
        out
    });
    let antipode = LinMap::from_fn(nm, nm, |i| {
        let (b, x) = (i / n, i % n);
        let mut out = vec![F::zero(); nm];
        for (y, b0, v) in pair.coact(b) {
            let mut yx = vec![F::zero(); n];
            for (z, p) in h.product(y, x) {
                yx[*z] += p.clone();
            }
            let left = kron(pair.algebra().unit(), &h.antipode().apply(&yx));
            let right = kron(&s_b.column_dense(b0), &h.one());
            add_scaled(&mut out, v, &algebra.mul(&left, &right));
        }
        out
    });
    let name = format!("B×{}", h.name());
    let hopf = HopfAlgebra::new(name, algebra, coalgebra, antipode)?
        .with_provenance(json!({"construction": "radford_biproduct", "of": h.name()}))
        .verified()?;
    Ok(Biproduct {
        pair: pair.clone(),
        hopf: Arc::new(hopf),
    })
}

/// Compares two Hopf algebras along a linear map `f: src → tgt`.
pub fn hopf_map_report<F: Field>(src: &HopfAlgebra<F>, tgt: &HopfAlgebra<F>, f: &LinMap<F>) -> Report {
    let n = src.dim();
    let cols: Vec<Vec<F>> = (0..n).map(|i| f.column_dense(i)).collect();
    let mut mult = Check::new("f(xy) = f(x)f(y)");
    for a in 0..n {
        for b in 0..n {
            let lhs = f.apply(&src.algebra().mult().column_dense(a * n + b));
            let rhs = tgt.mul(&cols[a], &cols[b]);
            mult.record(lhs == rhs, || Witness::new(src.names(&[a, b]), tgt.format(&lhs), tgt.format(&rhs)));
        }
    }
    let f1 = f.apply(&src.one());
    mult.record(f1 == tgt.one(), || Witness::new(vec!["1".into()], tgt.format(&f1), "1"));
    let mut comult = Check::new("Δ(f(x)) = f(x1)⊗f(x2)");
    let mut counit = Check::new("ε(f(x)) = ε(x)");
    let mut anti = Check::new("S(f(x)) = f(S(x))");
    for i in 0..n {
        let lhs = tgt.coalgebra().comul(&cols[i]);
        let mut rhs = vec![F::zero(); tgt.dim() * tgt.dim()];
        for (a, b, c) in src.coalgebra().coproduct(i) {
            add_scaled(&mut rhs, c, &kron(&cols[a], &cols[b]));
        }
        comult.record(lhs == rhs, || {
            Witness::new(
                src.names(&[i]),
                tgt.coalgebra().format_tensor(&lhs, 2),
                tgt.coalgebra().format_tensor(&rhs, 2),
            )
        });
        let e = tgt.eps(&cols[i]);
        counit.record(e == src.counit(i), || Witness::new(src.names(&[i]), &e, src.counit(i)));
        let l = tgt.antipode().apply(&cols[i]);
        let r = f.apply(&src.s_vec(i));
        anti.record(l == r, || Witness::new(src.names(&[i]), tgt.format(&l), tgt.format(&r)));
    }
    let bij = Report::verdict("bijective", f.is_bijective(), || Witness::new(vec![], "singular", "invertible"));
    Report::group(
        format!("{} → {}", src.name(), tgt.name()),
        vec![mult.finish(), comult.finish(), counit.finish(), anti.finish(), bij],
    )
}

/// `B▶<A` with `(b▶<a)(b'▶<a') = b(a(−1)·b')▶<a(0)a'`; for a Hopf-admissible
/// pair also the coaction `λ(b▶<a) = (b₁×b₂^(−1)a(−1))⊗(b₂^(0)▶<a(0))`.
#[derive(Clone, Debug)]
pub struct GeneralizedSmash<F> {
    pub algebra: Algebra<F>,
    pub coaction: Option<ComoduleAlgebra<F>>,
    pub report: Report,
}

pub fn generalized_smash<F: Field>(
    pair: &Arc<AdmissiblePair<F>>,
    biproduct: Option<&Biproduct<F>>,
    a: &ComoduleAlgebra<F>,
) -> Result<GeneralizedSmash<F>> {
    let h = pair.hopf();
    if **a.hopf() != **h {
        return Err(Error::Precondition("comodule algebra over a different Hopf algebra".into()));
    }
    let pair_report = check_admissible(pair);
    let module = pair_report
        .find("B is a left H-module algebra")
        .cloned()
        .expect("module algebra group");
    let module = require("B as module algebra", module)?;
    let comodule = require("A as comodule algebra", a.check())?;
    let (n, m, d) = (h.dim(), pair.dim(), a.dim());
    let md = m * d;
    let basis: Vec<String> = pair
        .basis()
        .iter()
        .flat_map(|b| a.algebra().basis().iter().map(move |x| format!("{b}▶<{x}")))
        .collect();
    let algebra = Algebra::from_fn(basis, kron(pair.algebra().unit(), a.algebra().unit()), |s, t| {
        let (b, x) = (s / d, s % d);
        let (c, y) = (t / d, t % d);
        let mut out = vec![F::zero(); md];
        for (hm, x0, u) in a.coact(x) {
            let hc = pair.act_vec(&unit_vector(n, hm), &unit_vector(m, c));
            let bc = pair.algebra().mul(&unit_vector(m, b), &hc);
            for (z, p) in a.algebra().product(x0, y) {
                add_scaled(&mut out, &(u.clone() * p.clone()), &kron(&bc, &unit_vector(d, *z)));
            }
        }
        out
    });
    let mut children = vec![module, comodule];
    let assoc = Report::group("B▶<A", algebra.check_algebra());
    children.push(require("B▶<A", assoc)?);
    let coaction = match biproduct {
        None => None,
        Some(bp) => {
            let bh = bp.dim();
            let co = pair.coalgebra();
            let lambda = LinMap::from_fn(md, bh * md, |s| {
                let (b, x) = (s / d, s % d);
                let mut out = vec![F::zero(); bh * md];
                for (b1, b2, u) in co.coproduct(b) {
                    for (y, b0, v) in pair.coact(b2) {
                        for (hm, x0, w) in a.coact(x) {
                            for (z, p) in h.product(y, hm) {
                                out[(b1 * n + z) * md + b0 * d + x0] += u.clone() * v.clone() * w.clone() * p.clone();
                            }
                        }
                    }
                }
                out
            });
            let c = ComoduleAlgebra::new(bp.hopf.clone(), algebra.clone(), lambda)?;
            children.push(require("λ", c.check())?);
            Some(c)
        }
    };
    Ok(GeneralizedSmash {
        algebra,
        coaction,
        report: Report::group("generalized smash product", children),
    })
}

/// `σ̃(b×h, b'×h') = ε(b)ε(b')σ(h,h')` with `(B×H)_σ̃ = B▶<H_σ`.
#[derive(Clone)]
pub struct Pullback<F> {
    pub sigma: Cocycle2<F>,
    pub lazy: bool,
    pub report: Report,
}

pub fn pullback_cocycle<F: Field>(bp: &Biproduct<F>, sigma: &Cocycle2<F>) -> Result<Pullback<F>> {
    let pair = &bp.pair;
    let h = pair.hopf();
    if **sigma.hopf() != **h {
        return Err(Error::Precondition("σ lives on a different Hopf algebra".into()));
    }
    if !sigma.is_normalized() || !sigma.is_right_cocycle() {
        return Err(Error::Precondition("σ must be a normalized right 2-cocycle".into()));
    }
    sigma.inverse()?;
    let n = h.dim();
    let tilde = Cocycle2::from_fn(bp.hopf.clone(), |s, t| {
        pair.eps(s / n) * pair.eps(t / n) * sigma.value(s % n, t % n).clone()
    })?;
    let h_sigma = sigma.twist(TwistMode::Right)?;
    let a = ComoduleAlgebra::new(h.clone(), h_sigma.algebra, h.coalgebra().comult().clone())?;
    let smash = generalized_smash(pair, Some(bp), &a)?;
    let d = &bp.hopf;
    let nn = d.dim();
    let mut products = Check::new("(B×H)_σ̃ = B▶<H_σ as algebras");
    let mut rederived = Check::new("σ̃(x,y) = (ε_B⊗ε_H)(x▶<y)");
    for x in 0..nn {
        for y in 0..nn {
            let lhs = smash.algebra.mult().column_dense(x * nn + y);
            let rhs = tilde.right_product(x, y);
            products.record(lhs == rhs, || Witness::new(d.names(&[x, y]), d.format(&lhs), d.format(&rhs)));
            let e = d.eps(&lhs);
            let v = tilde.value(x, y).clone();
            rederived.record(e == v, || Witness::new(d.names(&[x, y]), &e, &v));
        }
    }
    let lambda = smash.coaction.as_ref().expect("biproduct supplied");
    let comodules = Report::verdict("λ = Δ_{B×H}", lambda.coaction() == d.coalgebra().comult(), || {
        Witness::new(vec![], "λ", "Δ")
    });
    let lazy = tilde.is_lazy();
    let implication = Report::verdict("σ̃ lazy ⇒ σ lazy", !lazy || sigma.is_lazy(), || {
        Witness::new(vec![], "σ̃ lazy", "σ not lazy")
    });
    let flags = Report::group(
        "σ̃ flags",
        vec![
            tilde.normalization_report().clone(),
            tilde.right_cocycle_report().clone(),
            Report::verdict("σ̃ convolution invertible", tilde.is_invertible(), || Witness::new(vec![], "singular", "invertible")),
        ],
    );
    let report = Report::group(
        "pullback cocycle",
        vec![flags, products.finish(), comodules, rederived.finish(), implication],
    )
    .with_note(format!("σ̃ lazy: {lazy}"));
    let report = require("σ̃", report)?;
    Ok(Pullback {
        sigma: tilde,
        lazy,
        report,
    })
}


impl<F: Field> std::fmt::Debug for Pullback<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pullback").field("sigma", &self.sigma).field("passed", &self.report.passed()).finish()
    }
}

#[cfg(test)]
mod tests;
