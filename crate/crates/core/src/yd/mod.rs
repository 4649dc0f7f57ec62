//! Yetter-Drinfeld modules over the datum `(H, H(σ), H)` for a lazy
//! 2-cocycle `σ`: left `H(σ)`-modules with a right `H`-coaction satisfying
//! `h₁·m₍₀₎⊗h₂m₍₁₎ = (h₂·m)₍₀₎⊗(h₂·m)₍₁₎h₁`.
//!
//! Tensors on `M⊗H` use index `m·n + h`. `End(M)` has the matrix-unit
//! basis `E[i,j]: e_j ↦ e_i`, index `i·d + j`.

mod inner;

use std::sync::Arc;

pub use inner::{recover_gamma, strongly_inner, Recovered, StronglyInner};

use crate::cocycle::{s1_map, s2_map, Cocycle2, TwistMode};
use crate::double::{diagonal_crossed_product, drinfeld_double, extend_cocycle_to_double, DrinfeldDouble};
use crate::error::{require, Error, Result};
use crate::hopf::{add_scaled, kron, tensor_mul, tensor_names, unit_vector, Algebra, HopfAlgebra, ModuleData};
use crate::linmap::LinMap;
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

/// An object of `_{H(σ)}YD(H)^H`.
#[derive(Clone)]
pub struct YdModule<F> {
    sigma: Cocycle2<F>,
    module: ModuleData<F>,
    coaction: LinMap<F>,
}

impl<F: Field> YdModule<F> {
    /// `action` maps `H(σ)⊗M → M` (index `h·d + m`), `coaction` maps
    /// `M → M⊗H`.
    pub fn new(sigma: Cocycle2<F>, basis: Vec<String>, action: LinMap<F>, coaction: LinMap<F>) -> Result<Self> {
        let algebra = sigma.twist(TwistMode::Lazy)?.algebra;
        let n = sigma.dim();
        let d = basis.len();
        if coaction.source() != d || coaction.target() != d * n {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}→{}, expected {d}→{}",
                coaction.source(),
                coaction.target(),
                d * n
            )));
        }
        let module = ModuleData::new(algebra, basis, action)?;
        Ok(YdModule { sigma, module, coaction })
    }

    /// `k` with action `ε` and coaction `1 ↦ 1⊗1`.
    pub fn trivial(sigma: Cocycle2<F>) -> Result<Self> {
        let h = sigma.hopf().clone();
        let n = h.dim();
        let action = LinMap::from_fn(n, 1, |x| vec![h.counit(x)]);
        let coaction = LinMap::from_columns(n, vec![h.one()]);
        YdModule::new(sigma, vec!["1".into()], action, coaction)
    }

    /// `H(σ)` acting on itself by the twisted product, with coaction
    /// `h ↦ h₂⊗h₃S⁻¹(h₁)`.
    pub fn regular(sigma: Cocycle2<F>) -> Result<Self> {
        let h = sigma.hopf().clone();
        let n = h.dim();
        let action = sigma.twist(TwistMode::Lazy)?.algebra.mult().clone();
        let coaction = LinMap::from_fn(n, n * n, |i| {
            let mut out = vec![F::zero(); n * n];
            for (t, c) in h.legs(i, 3) {
                let right = h.mul(&unit_vector(n, t[2]), &h.s_inv_vec(t[0]));
                add_scaled(&mut out, &c, &kron(&unit_vector(n, t[1]), &right));
            }
            out
        });
        YdModule::new(sigma, h.basis().to_vec(), action, coaction)
    }

    pub fn with_coaction(&self, coaction: LinMap<F>) -> Result<Self> {
        YdModule::new(self.sigma.clone(), self.basis().to_vec(), self.module.action().clone(), coaction)
    }

    pub fn with_action(&self, action: LinMap<F>) -> Result<Self> {
        YdModule::new(self.sigma.clone(), self.basis().to_vec(), action, self.coaction.clone())
    }

    pub fn sigma(&self) -> &Cocycle2<F> {
        &self.sigma
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        self.sigma.hopf()
    }

    pub fn module(&self) -> &ModuleData<F> {
        &self.module
    }

    pub fn action(&self) -> &LinMap<F> {
        self.module.action()
    }

    pub fn coaction(&self) -> &LinMap<F> {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.module.basis()
    }

    /// `x·v` for vectors `x ∈ H(σ)`, `v ∈ M`.
    pub fn act(&self, x: &[F], v: &[F]) -> Vec<F> {
        self.module.act(x, v)
    }

    fn act_basis(&self, x: usize, v: &[F]) -> Vec<F> {
        self.module.act(&unit_vector(self.hopf().dim(), x), v)
    }

    /// `m ↦ m₍₀₎⊗m₍₁₎` as `(m', h, c)`.
    pub fn coact(&self, i: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n = self.hopf().dim();
        self.coaction.column(i).iter().map(move |(t, c)| (t / n, t % n, c))
    }

    fn coact_vec(&self, v: &[F]) -> Vec<F> {
        self.coaction.apply(v)
    }

    fn mh_names(&self) -> Vec<String> {
        tensor_names(self.basis(), self.hopf().basis())
    }
}

impl<F: Field> std::fmt::Debug for YdModule<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("YdModule")
            .field("sigma", &self.sigma)
            .field("basis", &self.basis())
            .finish()
    }
}

/// Nonzero `(m, h, c)` of a vector in `M⊗H`.
fn mh_terms<F: Field>(v: &[F], n: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(t, c)| (t / n, t % n, c))
}

/// Module, comodule and both forms of the compatibility condition.
pub fn check_yd<F: Field>(m: &YdModule<F>) -> Report {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let names = m.mh_names();
    let fmt = |v: &[F]| format_vector(v, &names);
    let em = |i: usize| unit_vector::<F>(d, i);

    let mut coassoc = Check::new("m(0)(0)⊗m(0)(1)⊗m(1) = m(0)⊗Δ(m(1))");
    let mut counit = Check::new("m(0)ε(m(1)) = m");
    for i in 0..d {
        let mut lhs = vec![F::zero(); d * n * n];
        let mut rhs = vec![F::zero(); d * n * n];
        let mut eps = vec![F::zero(); d];
        for (a, x, u) in m.coact(i) {
            for (b, y, v) in m.coact(a) {
                lhs[(b * n + y) * n + x] += u.clone() * v.clone();
            }
            for (x1, x2, v) in h.coalgebra().coproduct(x) {
                rhs[(a * n + x1) * n + x2] += u.clone() * v.clone();
            }
            eps[a] += u.clone() * h.counit(x);
        }
        coassoc.record(lhs == rhs, || Witness::new(vec![m.basis()[i].clone()], "(ρ⊗id)ρ", "(id⊗Δ)ρ"));
        counit.record(eps == em(i), || {
            Witness::new(vec![m.basis()[i].clone()], format_vector(&eps, m.basis()), &m.basis()[i])
        });
    }
    let comodule = Report::group("right H-comodule", vec![coassoc.finish(), counit.finish()]);

    let mut c2 = Check::new("h1·m(0)⊗h2m(1) = (h2·m)(0)⊗(h2·m)(1)h1");
    let mut c3 = Check::new("(h·m)(0)⊗(h·m)(1) = h2·m(0)⊗h3m(1)S⁻¹(h1)");
    for x in 0..n {
        for i in 0..d {
            let mut lhs = vec![F::zero(); d * n];
            let mut rhs = vec![F::zero(); d * n];
            for (x1, x2, c) in h.coalgebra().coproduct(x) {
                for (a, y, u) in m.coact(i) {
                    let left = m.act_basis(x1, &em(a));
                    let right = h.mul(&unit_vector(n, x2), &unit_vector(n, y));
                    add_scaled(&mut lhs, &(c.clone() * u.clone()), &kron(&left, &right));
                }
                let rho = m.coact_vec(&m.act_basis(x2, &em(i)));
                for (a, y, u) in mh_terms(&rho, n) {
                    let right = h.mul(&unit_vector(n, y), &unit_vector(n, x1));
                    add_scaled(&mut rhs, &(c.clone() * u.clone()), &kron(&em(a), &right));
                }
            }
            c2.record(lhs == rhs, || Witness::new(vec![h.basis()[x].clone(), m.basis()[i].clone()], fmt(&lhs), fmt(&rhs)));

            let lhs = m.coact_vec(&m.act_basis(x, &em(i)));
            let mut rhs = vec![F::zero(); d * n];
            for (t, c) in h.legs(x, 3) {
                for (a, y, u) in m.coact(i) {
                    let left = m.act_basis(t[1], &em(a));
                    let right = h.mul(&h.mul(&unit_vector(n, t[2]), &unit_vector(n, y)), &h.s_inv_vec(t[0]));
                    add_scaled(&mut rhs, &(c.clone() * u.clone()), &kron(&left, &right));
                }
            }
            c3.record(lhs == rhs, || Witness::new(vec![h.basis()[x].clone(), m.basis()[i].clone()], fmt(&lhs), fmt(&rhs)));
        }
    }
    let (c2, c3) = (c2.finish(), c3.finish());
    let equiv = Report::verdict("both compatibility forms agree", c2.passed() == c3.passed(), || {
        Witness::new(vec![], format!("{:?}", c2.status), format!("{:?}", c3.status))
    });
    Report::group(
        "Yetter-Drinfeld module",
        vec![m.module.check_module(), comodule, c2, c3, equiv],
    )
}

fn require_yd<F: Field>(m: &YdModule<F>) -> Result<Report> {
    require("Yetter-Drinfeld module", check_yd(m))
}

fn dual<F: Field>(m: &YdModule<F>, type2: bool) -> Result<YdModule<F>> {
    require_yd(m)?;
    let sigma = m.sigma();
    let inv = sigma.inverse()?.clone();
    let s = if type2 { s2_map(sigma)? } else { s1_map(sigma)? };
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let basis: Vec<String> = m.basis().iter().map(|b| format!("{b}*")).collect();
    // (h·e^j)(e_i) = e^j(S(h)·e_i)
    let images: Vec<Vec<Vec<F>>> = (0..n)
        .map(|x| {
            let sx = s.column_dense(x);
            (0..d).map(|i| m.act(&sx, &unit_vector(d, i))).collect()
        })
        .collect();
    let action = LinMap::from_fn(n * d, d, |t| {
        let (x, j) = (t / d, t % d);
        (0..d).map(|i| images[x][i][j].clone()).collect()
    });
    // e^j ↦ Σ_i e^i ⊗ e^j(e_i(0)) S^{∓1}(e_i(1))
    let coaction = LinMap::from_fn(d, d * n, |j| {
        let mut out = vec![F::zero(); d * n];
        for i in 0..d {
            for (a, y, u) in m.coact(i) {
                if a == j {
                    let sy = if type2 { h.s_vec(y) } else { h.s_inv_vec(y) };
                    add_scaled(&mut out, u, &kron(&unit_vector(d, i), &sy));
                }
            }
        }
        out
    });
    let out = YdModule::new(inv, basis, action, coaction)?;
    require_yd(&out)?;
    Ok(out)
}

/// `M*` over `σ⁻¹` with `(h·m*)(m) = m*(S₁(h)·m)` and coaction through
/// `S⁻¹(m₍₁₎)`.
pub fn dual_type1<F: Field>(m: &YdModule<F>) -> Result<YdModule<F>> {
    dual(m, false)
}

/// `M*` over `σ⁻¹` with `(h·m*)(m) = m*(S₂(h)·m)` and coaction through
/// `S(m₍₁₎)`.
pub fn dual_type2<F: Field>(m: &YdModule<F>) -> Result<YdModule<F>> {
    dual(m, true)
}

/// `Δ: H → H(σ)⊗H(σ⁻¹)` is an algebra map.
pub fn delta_algebra_map_report<F: Field>(sigma: &Cocycle2<F>) -> Result<Report> {
    let inv = sigma.inverse()?;
    let left = sigma.twist(TwistMode::Lazy)?.algebra;
    let right = inv.twist(TwistMode::Lazy)?.algebra;
    let h = sigma.hopf();
    let n = h.dim();
    let co = h.coalgebra();
    let mut check = Check::new("Δ(hl) = Δ(h)Δ(l) in H(σ)⊗H(σ⁻¹)");
    for x in 0..n {
        for y in 0..n {
            let lhs = co.comul(&h.algebra().mult().column_dense(x * n + y));
            let rhs = tensor_mul(&left, &right, &co.comult().column_dense(x), &co.comult().column_dense(y));
            check.record(lhs == rhs, || {
                Witness::new(h.names(&[x, y]), co.format_tensor(&lhs, 2), co.format_tensor(&rhs, 2))
            });
        }
    }
    Ok(check.finish())
}

/// `M⊗N` for `M` over `σ` and `N` over `σ⁻¹`: a usual Yetter-Drinfeld
/// module with `h·(m⊗n) = h₁·m⊗h₂·n` and coaction
/// `m⊗n ↦ (m₍₀₎⊗n₍₀₎)⊗n₍₁₎m₍₁₎`.
pub fn tensor_yd<F: Field>(m: &YdModule<F>, other: &YdModule<F>) -> Result<YdModule<F>> {
    if *other.sigma() != *m.sigma().inverse()? {
        return Err(Error::CocycleMismatch(
            "the second factor must live over the convolution inverse of the first factor's cocycle".into(),
        ));
    }
    require_yd(m)?;
    require_yd(other)?;
    let h = m.hopf();
    let (n, d, e) = (h.dim(), m.dim(), other.dim());
    let action = LinMap::from_fn(n * d * e, d * e, |t| {
        let (x, a, b) = (t / (d * e), (t / e) % d, t % e);
        let mut out = vec![F::zero(); d * e];
        for (x1, x2, c) in h.coalgebra().coproduct(x) {
            let l = m.act_basis(x1, &unit_vector(d, a));
            let r = other.act_basis(x2, &unit_vector(e, b));
            add_scaled(&mut out, c, &kron(&l, &r));
        }
        out
    });
    let coaction = LinMap::from_fn(d * e, d * e * n, |t| {
        let (a, b) = (t / e, t % e);
        let mut out = vec![F::zero(); d * e * n];
        for (a0, y, u) in m.coact(a) {
            for (b0, z, v) in other.coact(b) {
                for (w, p) in h.product(z, y) {
                    out[(a0 * e + b0) * n + w] += u.clone() * v.clone() * p.clone();
                }
            }
        }
        out
    });
    let trivial = Cocycle2::trivial(h.clone())?;
    let out = YdModule::new(trivial, tensor_names(m.basis(), other.basis()), action, coaction)?;
    require_yd(&out)?;
    Ok(out)
}

/// `f∘g` on the matrix-unit basis.
pub(crate) fn end_compose<F: Field>(d: usize, f: &[F], g: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); d * d];
    for i in 0..d {
        for j in 0..d {
            let a = &f[i * d + j];
            if a.is_zero() {
                continue;
            }
            for l in 0..d {
                let b = &g[j * d + l];
                if !b.is_zero() {
                    out[i * d + l] += a.clone() * b.clone();
                }
            }
        }
    }
    out
}

pub(crate) fn end_names(basis: &[String]) -> Vec<String> {
    basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| format!("E[{a},{b}]")))
        .collect()
}

fn end_identity<F: Field>(d: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d * d];
    for i in 0..d {
        v[i * d + i] = F::one();
    }
    v
}

/// `(h·f)(m) = h₁·f(S₁(h₂)·m)`, or `h₂·f(S₂(h₁)·m)` for the opposite algebra.
fn end_action<F: Field>(m: &YdModule<F>, op: bool) -> Result<LinMap<F>> {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let s = if op { s2_map(m.sigma())? } else { s1_map(m.sigma())? };
    let dd = d * d;
    Ok(LinMap::from_fn(n * dd, dd, |t| {
        let (x, f) = (t / dd, t % dd);
        let (i, j) = (f / d, f % d);
        let mut out = vec![F::zero(); dd];
        for (x1, x2, c) in h.coalgebra().coproduct(x) {
            let (outer, inner) = if op { (x2, x1) } else { (x1, x2) };
            let hi = m.act_basis(outer, &unit_vector(d, i));
            let sx = s.column_dense(inner);
            for k in 0..d {
                let w = m.act(&sx, &unit_vector(d, k));
                let coef = c.clone() * w[j].clone();
                if coef.is_zero() {
                    continue;
                }
                for a in 0..d {
                    out[a * d + k] += coef.clone() * hi[a].clone();
                }
            }
        }
        out
    }))
}

/// `f ↦ f(m₍₀₎)₍₀₎⊗S⁻¹(m₍₁₎)f(m₍₀₎)₍₁₎`, or `f(m₍₀₎)₍₀₎⊗f(m₍₀₎)₍₁₎S(m₍₁₎)`
/// for the opposite algebra.
fn end_coaction<F: Field>(m: &YdModule<F>, op: bool) -> LinMap<F> {
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let dd = d * d;
    LinMap::from_fn(dd, dd * n, |f| {
        let (i, j) = (f / d, f % d);
        let mut out = vec![F::zero(); dd * n];
        for k in 0..d {
            for (a, y, u) in m.coact(k) {
                if a != j {
                    continue;
                }
                for (b, z, v) in m.coact(i) {
                    let hz = if op {
                        h.mul(&unit_vector(n, z), &h.s_vec(y))
                    } else {
                        h.mul(&h.s_inv_vec(y), &unit_vector(n, z))
                    };
                    add_scaled(&mut out, &(u.clone() * v.clone()), &kron(&unit_vector(dd, b * d + k), &hz));
                }
            }
        }
        out
    })
}

/// `End(M)` or `End(M)^op` as an algebra in `_H YD^H`.
#[derive(Clone)]
pub struct YdAlgebra<F> {
    pub algebra: Algebra<F>,
    /// The structure as a usual Yetter-Drinfeld module (trivial cocycle).
    pub module: YdModule<F>,
    pub report: Report,
}

impl<F: Field> std::fmt::Debug for YdAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("YdAlgebra").field("algebra", &self.algebra).field("module", &self.module).finish()
    }
}

/// `h·(ab) = (h₁·a)(h₂·b)`, `h·1 = ε(h)1`, `ρ(ab) = a₍₀₎b₍₀₎⊗b₍₁₎a₍₁₎`,
/// `ρ(1) = 1⊗1` and the compatibility condition.
pub fn check_yd_algebra<F: Field>(algebra: &Algebra<F>, module: &YdModule<F>) -> Report {
    let h = module.hopf();
    let (n, dd) = (h.dim(), algebra.dim());
    let names = algebra.basis();
    let mut mod_alg = Check::new("h·(ab) = (h1·a)(h2·b)");
    let mut mod_unit = Check::new("h·1 = ε(h)1");
    for x in 0..n {
        let acted: Vec<(usize, usize, F, Vec<Vec<F>>, Vec<Vec<F>>)> = h
            .coalgebra()
            .coproduct(x)
            .map(|(x1, x2, c)| {
                let l = (0..dd).map(|a| module.act_basis(x1, &unit_vector(dd, a))).collect();
                let r = (0..dd).map(|b| module.act_basis(x2, &unit_vector(dd, b))).collect();
                (x1, x2, c.clone(), l, r)
            })
            .collect();
        for a in 0..dd {
            for b in 0..dd {
                let lhs = module.act_basis(x, &algebra.mult().column_dense(a * dd + b));
                let mut rhs = vec![F::zero(); dd];
                for (_, _, c, l, r) in &acted {
                    add_scaled(&mut rhs, c, &algebra.mul(&l[a], &r[b]));
                }
                mod_alg.record(lhs == rhs, || {
                    Witness::new(
                        vec![h.basis()[x].clone(), names[a].clone(), names[b].clone()],
                        algebra.format(&lhs),
                        algebra.format(&rhs),
                    )
                });
            }
        }
        let lhs = module.act_basis(x, algebra.unit());
        let rhs: Vec<F> = algebra.unit().iter().map(|u| u.clone() * h.counit(x)).collect();
        mod_unit.record(lhs == rhs, || Witness::new(vec![h.basis()[x].clone()], algebra.format(&lhs), algebra.format(&rhs)));
    }
    let mut co_alg = Check::new("ρ(ab) = a(0)b(0)⊗b(1)a(1)");
    let rho: Vec<Vec<F>> = (0..dd).map(|a| module.coaction().column_dense(a)).collect();
    let mh = module.mh_names();
    for a in 0..dd {
        for b in 0..dd {
            let lhs = module.coact_vec(&algebra.mult().column_dense(a * dd + b));
            let mut rhs = vec![F::zero(); dd * n];
            for (a0, y, u) in mh_terms(&rho[a], n) {
                for (b0, z, v) in mh_terms(&rho[b], n) {
                    let prod = algebra.mult().column_dense(a0 * dd + b0);
                    let hz = h.product(z, y);
                    for (w, p) in hz {
                        add_scaled(&mut rhs, &(u.clone() * v.clone() * p.clone()), &kron(&prod, &unit_vector(n, *w)));
                    }
                }
            }
            co_alg.record(lhs == rhs, || {
                Witness::new(vec![names[a].clone(), names[b].clone()], format_vector(&lhs, &mh), format_vector(&rhs, &mh))
            });
        }
    }
    let r1 = module.coact_vec(algebra.unit());
    let one_one = kron(algebra.unit(), &h.one());
    co_alg.record(r1 == one_one, || Witness::new(vec!["1".into()], format_vector(&r1, &mh), format_vector(&one_one, &mh)));
    Report::group(
        "algebra in the Yetter-Drinfeld category",
        vec![
            Report::group("algebra", algebra.check_algebra()),
            check_yd(module),
            Report::group("module algebra", vec![mod_alg.finish(), mod_unit.finish()]),
            Report::group("comodule algebra", vec![co_alg.finish()]),
        ],
    )
}

fn end_impl<F: Field>(m: &YdModule<F>, op: bool) -> Result<YdAlgebra<F>> {
    require_yd(m)?;
    let d = m.dim();
    let dd = d * d;
    let basis = end_names(m.basis());
    let algebra = Algebra::from_fn(basis.clone(), end_identity(d), |a, b| {
        let (x, y) = (unit_vector(dd, a), unit_vector(dd, b));
        if op {
            end_compose(d, &y, &x)
        } else {
            end_compose(d, &x, &y)
        }
    });
    let trivial = Cocycle2::trivial(m.hopf().clone())?;
    let module = YdModule::new(trivial, basis, end_action(m, op)?, end_coaction(m, op))?;
    let name = if op { "End(M)^op" } else { "End(M)" };
    let report = require(name, check_yd_algebra(&algebra, &module))?;
    Ok(YdAlgebra { algebra, module, report })
}

/// `End(M)` with `(h·f)(m) = h₁·f(S₁(h₂)·m)` and
/// `f₍₀₎(m)⊗f₍₁₎ = f(m₍₀₎)₍₀₎⊗S⁻¹(m₍₁₎)f(m₍₀₎)₍₁₎`.
pub fn end_algebra<F: Field>(m: &YdModule<F>) -> Result<YdAlgebra<F>> {
    end_impl(m, false)
}

/// `End(M)^op` with `(h·f)(m) = h₂·f(S₂(h₁)·m)` and
/// `f₍₀₎(m)⊗f₍₁₎ = f(m₍₀₎)₍₀₎⊗f(m₍₀₎)₍₁₎S(m₍₁₎)`.
pub fn end_op_algebra<F: Field>(m: &YdModule<F>) -> Result<YdAlgebra<F>> {
    end_impl(m, true)
}

/// `M` as a module over `H*⋈H(σ)` with `(p⋈h)·m = p((h·m)₍₁₎)(h·m)₍₀₎`.
pub fn to_diagonal_module_over<F: Field>(m: &YdModule<F>, double: &DrinfeldDouble<F>) -> Result<ModuleData<F>> {
    require_yd(m)?;
    if *double.base != **m.hopf() {
        return Err(Error::Precondition("the double is built on a different Hopf algebra".into()));
    }
    let a = m
        .sigma()
        .twist(TwistMode::Lazy)?
        .bicomodule
        .expect("lazy twist carries its bicomodule structure");
    let product = diagonal_crossed_product(double, &a)?;
    let (n, d) = (m.hopf().dim(), m.dim());
    let action = LinMap::from_fn(n * n * d, d, |t| {
        let (s, k) = (t / d, t % d);
        let (p, x) = (s / n, s % n);
        let rho = m.coact_vec(&m.act_basis(x, &unit_vector(d, k)));
        (0..d).map(|a| rho[a * n + p].clone()).collect()
    });
    let module = ModuleData::new(product.algebra().clone(), m.basis().to_vec(), action)?;
    require("module over H*⋈H(σ)", module.check_module())?;
    Ok(module)
}

pub fn to_diagonal_module<F: Field>(m: &YdModule<F>) -> Result<ModuleData<F>> {
    to_diagonal_module_over(m, &drinfeld_double(m.hopf())?)
}

/// Compares the `D(H)`-actions on `End(M)` and `End(M)^op` obtained from
/// `D(H)(σ̄)` through `S̄₁`, `S̄₂` with those obtained from the structure in
/// `_H YD^H`, and both with their closed forms.
pub fn dh_action_coincide<F: Field>(m: &YdModule<F>) -> Result<Report> {
    let double = drinfeld_double(m.hopf())?;
    let bar = extend_cocycle_to_double(&double, m.sigma())?;
    let s1 = s1_map(&bar)?;
    let s2 = s2_map(&bar)?;
    dh_actions_with(m, &double, &s1, &s2)
}

/// [`dh_action_coincide`] with explicit maps `S̄₁`, `S̄₂` on `D(H)`.
pub fn dh_actions_with<F: Field>(
    m: &YdModule<F>,
    double: &DrinfeldDouble<F>,
    s1_bar: &LinMap<F>,
    s2_bar: &LinMap<F>,
) -> Result<Report> {
    let dm = to_diagonal_module_over(m, double)?;
    let h = m.hopf();
    let (n, d) = (h.dim(), m.dim());
    let dd = d * d;
    let nn = n * n;
    let dh = &double.hopf;
    let s1 = s1_map(m.sigma())?;
    let s2 = s2_map(m.sigma())?;
    let mut children = Vec::new();
    for op in [false, true] {
        let end = end_impl(m, op)?;
        let sbar = if op { s2_bar } else { s1_bar };
        let s = if op { &s2 } else { &s1 };
        let label = if op { "End(M)^op" } else { "End(M)" };
        let mut via_bar = Check::new(format!("{label}: action through D(H)(σ̄) = action through _H YD^H"));
        let mut closed = Check::new(format!("{label}: closed form"));
        for x in 0..nn {
            let (p, y) = (x / n, x % n);
            for f in 0..dd {
                let (i, j) = (f / d, f % d);
                // through S̄
                let mut a = vec![F::zero(); dd];
                for (x1, x2, c) in dh.coalgebra().coproduct(x) {
                    let (outer, inner) = if op { (x2, x1) } else { (x1, x2) };
                    let sx = sbar.column_dense(inner);
                    let hi = dm.act(&unit_vector(nn, outer), &unit_vector(d, i));
                    for k in 0..d {
                        let w = dm.act(&sx, &unit_vector(d, k));
                        let coef = c.clone() * w[j].clone();
                        if coef.is_zero() {
                            continue;
                        }
                        for r in 0..d {
                            a[r * d + k] += coef.clone() * hi[r].clone();
                        }
                    }
                }
                // through the coaction of h·f
                let hf = end.module.act_basis(y, &unit_vector(dd, f));
                let rho = end.module.coact_vec(&hf);
                let b: Vec<F> = (0..dd).map(|g| rho[g * n + p].clone()).collect();
                // closed form
                let mut c_form = vec![F::zero(); dd];
                for (t, c) in h.legs(y, 4) {
                    for k in 0..d {
                        for (a0, z, u) in m.coact(k) {
                            let inner = if op { t[0] } else { t[3] };
                            let w = m.act(&s.column_dense(inner), &unit_vector(d, a0));
                            let coef = c.clone() * u.clone() * w[j].clone();
                            if coef.is_zero() {
                                continue;
                            }
                            for (bi, zz, v) in m.coact(i) {
                                let hv = |q: usize| unit_vector::<F>(n, q);
                                let elt = if op {
                                    // h4 f(..)(1) S⁻¹(h2) S(m(1))
                                    h.mul(&h.mul(&h.mul(&hv(t[3]), &hv(zz)), &h.s_inv_vec(t[1])), &h.s_vec(z))
                                } else {
                                    // S⁻¹(m(1)) h3 f(..)(1) S⁻¹(h1)
                                    h.mul(&h.mul(&h.mul(&h.s_inv_vec(z), &hv(t[2])), &hv(zz)), &h.s_inv_vec(t[0]))
                                };
                                let pv = elt[p].clone() * v.clone() * coef.clone();
                                if pv.is_zero() {
                                    continue;
                                }
                                let actor = if op { t[2] } else { t[1] };
                                let out = m.act_basis(actor, &unit_vector(d, bi));
                                for r in 0..d {
                                    c_form[r * d + k] += pv.clone() * out[r].clone();
                                }
                            }
                        }
                    }
                }
                let at = || vec![dh.basis()[x].clone(), end.algebra.basis()[f].clone()];
                via_bar.record(a == b, || Witness::new(at(), end.algebra.format(&a), end.algebra.format(&b)));
                closed.record(b == c_form, || Witness::new(at(), end.algebra.format(&b), end.algebra.format(&c_form)));
            }
        }
        children.push(via_bar.finish());
        children.push(closed.finish());
    }
    Ok(Report::group("D(H)-module algebra structures on End(M)", children))
}
