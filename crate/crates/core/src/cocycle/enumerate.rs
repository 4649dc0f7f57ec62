use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{solve_linear_system, LinearSolution, Matrix};
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

use super::{Cocycle1, Cocycle2};

fn field_order<F: Field>() -> Result<u64> {
    F::order().ok_or_else(|| Error::InfiniteField(F::spec()))
}

/// `p^d`, or `None` past `u64`.
fn space_size(p: u64, d: usize) -> Option<u64> {
    p.checked_pow(u32::try_from(d).ok()?)
}

fn too_large(p: u64, d: usize, bound: u64) -> Error {
    let size = match space_size(p, d) {
        Some(s) => s.to_string(),
        None => format!("{p}^{d}"),
    };
    Error::EnumerationTooLarge { p, dim: d, size, bound }
}

/// Lexicographic sweep over an affine solution space, first parameter most
/// significant. The callback returns `false` to stop early.
fn sweep<F: Field>(solution: &LinearSolution<F>, p: u64, count: u64, mut visit: impl FnMut(Vec<F>) -> bool) {
    let d = solution.kernel_dim();
    for index in 0..count {
        let mut params = vec![F::zero(); d];
        let mut rest = index;
        for slot in params.iter_mut().rev() {
            *slot = F::nth_element(rest % p);
            rest /= p;
        }
        let point = solution.point(&params).expect("consistent system");
        if !visit(point) {
            break;
        }
    }
}

/// Normalization `σ(1,h) = σ(h,1) = ε(h)` and laziness as one linear system
/// in the `n²` unknowns `σ(e_i, e_j)`.
fn lazy_cocycle_system<F: Field>(h: &HopfAlgebra<F>) -> LinearSolution<F> {
    let n = h.dim();
    let one = h.one();
    let mut rows: Vec<(Vec<F>, F)> = Vec::new();
    for j in 0..n {
        let mut left = vec![F::zero(); n * n];
        let mut right = vec![F::zero(); n * n];
        for (k, u) in one.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            left[k * n + j] += u.clone();
            right[j * n + k] += u.clone();
        }
        rows.push((left, h.counit(j)));
        rows.push((right, h.counit(j)));
    }
    for a in 0..n {
        for b in 0..n {
            // Σ σ(a₁,b₁)a₂b₂ − Σ a₁b₁σ(a₂,b₂), coordinate by coordinate
            let mut eqs = vec![vec![F::zero(); n * n]; n];
            for (a1, a2, c) in h.coalgebra().coproduct(a) {
                for (b1, b2, d) in h.coalgebra().coproduct(b) {
                    let cd = c.clone() * d.clone();
                    for (t, v) in h.product(a2, b2) {
                        eqs[*t][a1 * n + b1] += cd.clone() * v.clone();
                    }
                    for (t, v) in h.product(a1, b1) {
                        eqs[*t][a2 * n + b2] -= cd.clone() * v.clone();
                    }
                }
            }
            rows.extend(eqs.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).map(|r| (r, F::zero())));
        }
    }
    solve_rows(rows, n * n)
}

fn solve_rows<F: Field>(rows: Vec<(Vec<F>, F)>, unknowns: usize) -> LinearSolution<F> {
    let m = Matrix::from_fn(rows.len(), unknowns, |i, j| rows[i].0[j].clone());
    let rhs: Vec<F> = rows.into_iter().map(|(_, b)| b).collect();
    solve_linear_system(&m, &rhs)
}

/// `γ(1) = 1`, plus laziness `γ(h₁)h₂ = h₁γ(h₂)` when asked.
fn gamma_system<F: Field>(h: &HopfAlgebra<F>, lazy: bool) -> LinearSolution<F> {
    let n = h.dim();
    let mut rows = vec![(h.one(), F::one())];
    if lazy {
        for i in 0..n {
            let mut eqs = vec![vec![F::zero(); n]; n];
            for (a, b, c) in h.coalgebra().coproduct(i) {
                eqs[b][a] += c.clone();
                eqs[a][b] -= c.clone();
            }
            rows.extend(eqs.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).map(|r| (r, F::zero())));
        }
    }
    solve_rows(rows, n)
}

fn enumerate_gammas<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64, lazy: bool) -> Result<Vec<Cocycle1<F>>> {
    let p = field_order::<F>()?;
    let solution = gamma_system(hopf, lazy);
    let d = solution.kernel_dim();
    let count = space_size(p, d).filter(|&s| s <= bound).ok_or_else(|| too_large(p, d, bound))?;
    let mut out = Vec::new();
    let mut failure = None;
    sweep(&solution, p, count, |values| match Cocycle1::new(hopf.clone(), values) {
        Ok(g) => {
            if g.is_invertible() {
                out.push(g);
            }
            true
        }
        Err(e) => {
            failure = Some(e);
            false
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// All lazy normalized invertible `γ`, in lexicographic parameter order.
pub fn enumerate_lazy_gammas<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64) -> Result<Vec<Cocycle1<F>>> {
    enumerate_gammas(hopf, bound, true)
}

/// All normalized invertible `γ`, in lexicographic parameter order.
pub fn enumerate_normalized_gammas<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64) -> Result<Vec<Cocycle1<F>>> {
    enumerate_gammas(hopf, bound, false)
}

/// The group of normalized invertible lazy 2-cocycles with its convolution
/// Cayley table: `table[i][j]` is the index of `elements[i] * elements[j]`.
#[derive(Clone)]
pub struct LazyGroup<F> {
    pub elements: Vec<Cocycle2<F>>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// Dimension of the affine space of normalized lazy forms.
    pub subspace_dim: usize,
    /// Number of forms examined.
    pub candidates: u64,
    pub report: Report,
}

impl<F: Field> LazyGroup<F> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, sigma: &Cocycle2<F>) -> Option<usize> {
        self.elements.iter().position(|e| e == sigma)
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.table[i][j] == self.identity)
            .expect("group table has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != self.identity {
            x = self.table[x][i];
            k += 1;
        }
        k
    }

    /// Abelian with every non-identity element of order `p`, and of order `p`:
    /// the additive group of `𝔽_p`.
    pub fn is_isomorphic_to_prime_field(&self, p: u64) -> bool {
        self.order() as u64 == p
            && self.is_abelian()
            && (0..self.order()).all(|i| i == self.identity || self.element_order(i) as u64 == p)
    }

    /// `D¹(γ)` for every lazy `γ` lies in the group and commutes with every
    /// element.
    pub fn coboundary_report(&self, gammas: &[Cocycle1<F>]) -> Result<Report> {
        let mut member = Check::new("D¹(γ) is a lazy 2-cocycle");
        let mut central = Check::new("D¹(γ) is central");
        for g in gammas {
            let d = g.d1()?;
            let found = self.position(&d);
            member.record(found.is_some(), || Witness::new(vec![g.to_string()], &d, "an element of the group"));
            if let Some(i) = found {
                for j in 0..self.order() {
                    let ok = self.table[i][j] == self.table[j][i];
                    central.record(ok, || {
                        Witness::new(vec![g.to_string(), self.elements[j].to_string()], "σ*D¹(γ)", "D¹(γ)*σ")
                    });
                }
            }
        }
        Ok(Report::group("lazy coboundaries", vec![member.finish(), central.finish()]))
    }
}

/// Enumerates `Z²_L(H)` over a prime field.
///
/// Normalization and laziness are linear in `σ`; the affine solution space
/// of dimension `d` is swept in lexicographic order when `p^d ≤ bound`, and
/// the quadratic left cocycle condition and invertibility filter it.
pub fn enumerate_lazy_cocycles<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64) -> Result<LazyGroup<F>> {
    hopf.require_verified()?;
    let p = field_order::<F>()?;
    let solution = lazy_cocycle_system(hopf);
    let d = solution.kernel_dim();
    let count = space_size(p, d).filter(|&s| s <= bound).ok_or_else(|| too_large(p, d, bound))?;
    let n = hopf.dim();
    let mut elements = Vec::new();
    sweep(&solution, p, count, |values| {
        let sigma = Cocycle2::new(hopf.clone(), Matrix::from_fn(n, n, |i, j| values[i * n + j].clone()))
            .expect("verified Hopf algebra");
        if sigma.is_left_cocycle() && sigma.is_invertible() {
            elements.push(sigma);
        }
        true
    });
    let index: HashMap<Vec<F>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, s)| (s.matrix().as_slice().to_vec(), i))
        .collect();
    let trivial = Cocycle2::trivial(hopf.clone())?;

    let mut closure = Check::new("closed under convolution");
    let mut table = vec![vec![usize::MAX; elements.len()]; elements.len()];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let c = a.convolve(b)?;
            match index.get(c.matrix().as_slice()) {
                Some(&k) => {
                    table[i][j] = k;
                    closure.record(true, || unreachable!());
                }
                None => {
                    closure.record(false, || Witness::new(vec![a.to_string(), b.to_string()], &c, "a lazy 2-cocycle"));
                }
            }
        }
    }
    let identity = index.get(trivial.matrix().as_slice()).copied();
    let mut children = vec![closure.finish()];
    children.push(Report::verdict("identity ε⊗ε present", identity.is_some(), || {
        Witness::new(vec![], "missing", &trivial)
    }));
    let complete = children.iter().all(Report::passed);

    let mut inverses = Check::new("inverses in the group");
    let mut right = Check::new("lazy left cocycles are right cocycles");
    for (i, a) in elements.iter().enumerate() {
        right.record(a.is_right_cocycle(), || Witness::new(vec![a.to_string()], "left only", "both"));
        let inv = a.inverse()?;
        let ok = match (index.get(inv.matrix().as_slice()), identity) {
            (Some(&j), Some(e)) if complete => table[i][j] == e && table[j][i] == e && inv.is_left_cocycle(),
            _ => false,
        };
        inverses.record(ok, || Witness::new(vec![a.to_string()], inv, "an element of the group"));
    }
    children.push(inverses.finish());
    children.push(right.finish());
    if complete {
        let m = elements.len();
        let mut assoc = Check::new("table associative");
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let l = table[table[i][j]][k];
                    let r = table[i][table[j][k]];
                    assoc.record(l == r, || Witness::new(vec![i.to_string(), j.to_string(), k.to_string()], l, r));
                }
            }
        }
        children.push(assoc.finish());
    }
    let report = Report::group(format!("lazy 2-cocycles of {}", hopf.name()), children).with_note(format!(
        "{} elements from {count} candidates in an affine space of dimension {d} over F{p}",
        elements.len()
    ));
    if !report.passed() {
        return Err(Error::axioms(format!("lazy cocycle group of {}", hopf.name()), report));
    }
    Ok(LazyGroup {
        elements,
        table,
        identity: identity.expect("checked"),
        subspace_dim: d,
        candidates: count,
        report,
    })
}

/// Searches the lazy normalized invertible `γ` for one with `D¹(γ) = σ`.
pub fn is_lazy_coboundary<F: Field>(sigma: &Cocycle2<F>, bound: u64) -> Result<Option<Cocycle1<F>>> {
    for g in enumerate_lazy_gammas(sigma.hopf(), bound)? {
        if &g.d1()? == sigma {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// First basis element where `Σ σ(h₁,S(h₂)) ≠ Σ σ(S(h₁),h₂)`.
pub(crate) fn antipode_symmetry_violation<F: Field>(sigma: &Cocycle2<F>) -> Option<usize> {
    let h = sigma.hopf();
    (0..h.dim()).find(|&i| {
        let (mut l, mut r) = (F::zero(), F::zero());
        for (a, b, c) in h.coalgebra().coproduct(i) {
            l += c.clone() * sigma.eval_right(a, &h.s_vec(b));
            r += c.clone() * sigma.eval_left(&h.s_vec(a), b);
        }
        l != r
    })
}

#[derive(Clone)]
pub struct CounterexampleOutcome<F> {
    /// A non-lazy normalized invertible left 2-cocycle and a basis element
    /// where `σ(h₁,S(h₂)) = σ(S(h₁),h₂)` fails.
    pub witness: Option<(Cocycle2<F>, usize)>,
    pub origin: Option<String>,
    pub examined: u64,
    pub note: String,
}

/// Looks for a normalized invertible left 2-cocycle that is not lazy and
/// breaks `σ(h₁,S(h₂)) = σ(S(h₁),h₂)`.
///
/// First sweeps `D¹(γ)` over normalized `γ`, then the normalized forms
/// themselves, both in lexicographic order, examining at most `bound`
/// candidates in total.
pub fn counterexample_search<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64) -> Result<CounterexampleOutcome<F>> {
    hopf.require_verified()?;
    let p = field_order::<F>()?;
    let n = hopf.dim();
    let mut examined = 0u64;
    let exhausted = |examined: u64| CounterexampleOutcome {
        witness: None,
        origin: None,
        examined,
        note: "budget exhausted".into(),
    };

    let gammas = gamma_system(hopf, false);
    let d = gammas.kernel_dim();
    let total = space_size(p, d).ok_or_else(|| too_large(p, d, u64::MAX))?;
    let mut found: Option<CounterexampleOutcome<F>> = None;
    let mut failure = None;
    sweep(&gammas, p, total.min(bound), |values| {
        examined += 1;
        let g = match Cocycle1::new(hopf.clone(), values) {
            Ok(g) => g,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        let Ok(sigma) = g.d1() else { return true };
        if sigma.is_lazy() {
            return true;
        }
        if let Some(i) = antipode_symmetry_violation(&sigma) {
            found = Some(CounterexampleOutcome {
                witness: Some((sigma, i)),
                origin: Some(format!("D¹(γ) with {g}")),
                examined,
                note: format!("found after {examined} candidates"),
            });
            return false;
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(f) = found {
        return Ok(f);
    }
    if examined >= bound {
        return Ok(exhausted(examined));
    }

    // normalized bilinear forms: σ(1,−) = σ(−,1) = ε
    let one = hopf.one();
    let mut rows = Vec::new();
    for j in 0..n {
        let mut left = vec![F::zero(); n * n];
        let mut right = vec![F::zero(); n * n];
        for (k, u) in one.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            left[k * n + j] += u.clone();
            right[j * n + k] += u.clone();
        }
        rows.push((left, hopf.counit(j)));
        rows.push((right, hopf.counit(j)));
    }
    let forms = solve_rows(rows, n * n);
    let d = forms.kernel_dim();
    let remaining = bound - examined;
    let total = space_size(p, d).unwrap_or(u64::MAX);
    sweep(&forms, p, total.min(remaining), |values| {
        examined += 1;
        let sigma = Cocycle2::new(hopf.clone(), Matrix::from_fn(n, n, |i, j| values[i * n + j].clone()))
            .expect("verified Hopf algebra");
        if sigma.is_lazy() || !sigma.is_left_cocycle() || !sigma.is_invertible() {
            return true;
        }
        if let Some(i) = antipode_symmetry_violation(&sigma) {
            found = Some(CounterexampleOutcome {
                witness: Some((sigma, i)),
                origin: Some("normalized bilinear form".into()),
                examined,
                note: format!("found after {examined} candidates"),
            });
            return false;
        }
        true
    });
    if let Some(f) = found {
        return Ok(f);
    }
    if total > remaining {
        return Ok(exhausted(examined));
    }
    Ok(CounterexampleOutcome {
        witness: None,
        origin: None,
        examined,
        note: "search space exhausted without a counterexample".into(),
    })
}
