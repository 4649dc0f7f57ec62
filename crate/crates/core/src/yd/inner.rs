//! Strongly inner actions on `End(M)` when `σ = D¹(γ)`.

use crate::cocycle::Cocycle1;
use crate::error::{Error, Result};
use crate::hopf::{add_scaled, unit_vector};
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

use crate::report::format_vector;

use super::{end_compose, end_identity, end_names, YdModule};

/// `F(h)(m) = h·m` as a map `H → End(M)`.
fn action_map<F: Field>(m: &YdModule<F>) -> LinMap<F> {
    let (n, d) = (m.hopf().dim(), m.dim());
    LinMap::from_fn(n, d * d, |x| {
        let mut out = vec![F::zero(); d * d];
        for k in 0..d {
            let v = m.act_basis(x, &unit_vector(d, k));
            for a in 0..d {
                out[a * d + k] = v[a].clone();
            }
        }
        out
    })
}

fn algebra_map_check<F: Field>(m: &YdModule<F>, g: &LinMap<F>) -> Report {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let names = end_names(m.basis());
    let mut check = Check::new("G(hl) = G(h)∘G(l)");
    for x in 0..n {
        for y in 0..n {
            let lhs = g.apply(&h.algebra().mult().column_dense(x * n + y));
            let rhs = end_compose(d, &g.column_dense(x), &g.column_dense(y));
            check.record(lhs == rhs, || Witness::new(h.names(&[x, y]), format_vector(&lhs, &names), format_vector(&rhs, &names)));
        }
    }
    let g1 = g.apply(&h.one());
    check.record(g1 == end_identity(d), || Witness::new(vec!["1".into()], "G(1)", "id"));
    check.finish()
}

/// `h·f = G(h₁)∘f∘G(S(h₂))` against `(h·f)(m) = h₁·f(S₁(h₂)·m)`.
fn implements_check<F: Field>(m: &YdModule<F>, g: &LinMap<F>) -> Result<Report> {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let dd = d * d;
    let action = super::end_action(m, false)?;
    let gs: Vec<Vec<F>> = (0..n).map(|x| g.apply(&h.s_vec(x))).collect();
    let names = end_names(m.basis());
    let mut check = Check::new("h·f = G(h1)∘f∘G(S(h2))");
    for x in 0..n {
        for f in 0..dd {
            let lhs = action.column_dense(x * dd + f);
            let mut rhs = vec![F::zero(); dd];
            for (x1, x2, c) in h.coalgebra().coproduct(x) {
                let t = end_compose(d, &end_compose(d, &g.column_dense(x1), &unit_vector(dd, f)), &gs[x2]);
                add_scaled(&mut rhs, c, &t);
            }
            check.record(lhs == rhs, || Witness::new(vec![h.basis()[x].clone(), names[f].clone()], format_vector(&lhs, &names), format_vector(&rhs, &names)));
        }
    }
    Ok(check.finish())
}

/// `G = F∘φ⁻¹` with `φ(h) = γ(h₁)h₂`.
#[derive(Clone, Debug)]
pub struct StronglyInner<F> {
    pub g: LinMap<F>,
    pub f: LinMap<F>,
    pub report: Report,
}

pub fn strongly_inner<F: Field>(gamma: &Cocycle1<F>, m: &YdModule<F>) -> Result<StronglyInner<F>> {
    if !gamma.is_lazy() {
        return Err(Error::Precondition("γ is not lazy".into()));
    }
    if gamma.d1()? != *m.sigma() {
        return Err(Error::CocycleMismatch("σ is not D¹(γ)".into()));
    }
    let h = m.hopf();
    let n = h.dim();
    let phi = LinMap::from_fn(n, n, |x| {
        let mut out = vec![F::zero(); n];
        for (x1, x2, c) in h.coalgebra().coproduct(x) {
            out[x2] += c.clone() * gamma.value(x1).clone();
        }
        out
    });
    let phi_inv = phi.inverse().ok_or(Error::NoInverse)?;
    let f = action_map(m);
    let g = f.compose(&phi_inv);
    let alg = algebra_map_check(m, &g);
    let inner = implements_check(m, &g)?;
    let report = Report::group("strongly inner action on End(M)", vec![alg, inner]);
    Ok(StronglyInner { g, f, report })
}

/// `γ(h) = G(S(h₁))∘F(h₂)`, a scalar when `G` implements the action.
#[derive(Clone)]
pub struct Recovered<F> {
    pub gamma: Cocycle1<F>,
    /// Whether the extracted `γ` is lazy; not guaranteed in general.
    pub lazy: bool,
    pub report: Report,
}

pub fn recover_gamma<F: Field>(g: &LinMap<F>, m: &YdModule<F>) -> Result<Recovered<F>> {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    if g.source() != n || g.target() != d * d {
        return Err(Error::DimensionMismatch(format!("G must map {n} → {}", d * d)));
    }
    let alg = algebra_map_check(m, g);
    if !alg.passed() {
        return Err(Error::Precondition("G is not an algebra map".into()));
    }
    let inner = implements_check(m, g)?;
    if !inner.passed() {
        return Err(Error::Precondition("G does not implement the action on End(M)".into()));
    }
    let f = action_map(m);
    let mut values = Vec::with_capacity(n);
    for x in 0..n {
        let mut v = vec![F::zero(); d * d];
        for (x1, x2, c) in h.coalgebra().coproduct(x) {
            let t = end_compose(d, &g.apply(&h.s_vec(x1)), &f.column_dense(x2));
            add_scaled(&mut v, c, &t);
        }
        let scalar = v[0].clone();
        let id: Vec<F> = end_identity::<F>(d).into_iter().map(|e| e * scalar.clone()).collect();
        if v != id {
            return Err(Error::Precondition(format!(
                "G(S(h1))∘F(h2) is not scalar at {}",
                h.basis()[x]
            )));
        }
        values.push(scalar);
    }
    let gamma = Cocycle1::new(h.clone(), values)?;
    let d1 = gamma.d1()?;
    let matches = Report::verdict("σ = D¹(γ)", d1 == *m.sigma(), || Witness::new(vec![], &d1, m.sigma()));
    let lazy = gamma.is_lazy();
    let report = Report::group("recovered γ", vec![alg, inner, matches]).with_note(format!("γ lazy: {lazy}"));
    Ok(Recovered { gamma, lazy, report })
}

impl<F: Field> std::fmt::Debug for Recovered<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Recovered").field("gamma", &self.gamma).field("lazy", &self.lazy).finish()
    }
}
