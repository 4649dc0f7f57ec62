//! The Drinfeld double `D(H)`, diagonal crossed products `H*⋈A` and the
//! extension of lazy 2-cocycles from `H` to `D(H)`.

use std::sync::Arc;

use serde_json::json;

use crate::cocycle::{s1_map, s2_map, Cocycle2};
use crate::error::{require, Error, Result};
use crate::hopf::{add_scaled, dot, kron, tensor_names, unit_vector, Algebra, BicomoduleAlgebra, HopfAlgebra};
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

/// Tables for `h ⇀ q ↼ S⁻¹(h')`: entry `[a][c][x]` is `S⁻¹(e_c)·e_x·e_a`, so
/// that `(e_a ⇀ q ↼ S⁻¹(e_c))(e_x) = q(S⁻¹(e_c) e_x e_a)`.
struct Harpoons<F> {
    n: usize,
    table: Vec<Vec<F>>,
}

impl<F: Field> Harpoons<F> {
    fn new(h: &HopfAlgebra<F>) -> Self {
        let n = h.dim();
        let mut table = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for c in 0..n {
                let left = h.s_inv_vec(c);
                for x in 0..n {
                    let lx = h.mul(&left, &h.basis_vector(x));
                    table.push(h.mul(&lx, &h.basis_vector(a)));
                }
            }
        }
        Harpoons { n, table }
    }

    /// `e_a ⇀ q ↼ S⁻¹(e_c)` in the dual basis.
    fn apply(&self, a: usize, c: usize, q: &[F]) -> Vec<F> {
        let n = self.n;
        (0..n).map(|x| dot(q, &self.table[(a * n + c) * n + x])).collect()
    }
}

/// `(pq)(h) = p(h₁)q(h₂)`.
fn dual_mul<F: Field>(h: &HopfAlgebra<F>, p: &[F], q: &[F]) -> Vec<F> {
    let n = h.dim();
    let mut out = vec![F::zero(); n];
    for (y, slot) in out.iter_mut().enumerate() {
        for (a, b, c) in h.coalgebra().coproduct(y) {
            if !p[a].is_zero() && !q[b].is_zero() {
                *slot += c.clone() * p[a].clone() * q[b].clone();
            }
        }
    }
    out
}

/// `Δ(p_i) = Σ p_i(e_k e_l) p_k ⊗ p_l` as `(k, l, c)`.
fn dual_coproduct<F: Field>(h: &HopfAlgebra<F>, i: usize) -> Vec<(usize, usize, F)> {
    let n = h.dim();
    let mut out = Vec::new();
    for k in 0..n {
        for l in 0..n {
            for (t, c) in h.product(k, l) {
                if *t == i {
                    out.push((k, l, c.clone()));
                }
            }
        }
    }
    out
}

/// `S*⁻¹(p_i)`, i.e. `h ↦ p_i(S⁻¹h)`.
fn dual_s_inv<F: Field>(h: &HopfAlgebra<F>, i: usize) -> Vec<F> {
    (0..h.dim()).map(|x| h.antipode_inverse().entry(i, x)).collect()
}

/// `S*(p_i)`, i.e. `h ↦ p_i(Sh)`.
fn dual_s<F: Field>(h: &HopfAlgebra<F>, i: usize) -> Vec<F> {
    (0..h.dim()).map(|x| h.antipode().entry(i, x)).collect()
}

/// `D(H)` on the basis `p_i ⊗ e_j`, index `i·n + j`, with coalgebra
/// `H^{*cop} ⊗ H`.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble<F> {
    pub base: Arc<HopfAlgebra<F>>,
    pub hopf: Arc<HopfAlgebra<F>>,
    pub report: Report,
}

impl<F: Field> DrinfeldDouble<F> {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn index(&self, p: usize, h: usize) -> usize {
        p * self.base.dim() + h
    }

    /// `ε ⊗ h`.
    pub fn embed_h(&self, h: &[F]) -> Vec<F> {
        kron(self.base.coalgebra().counit(), h)
    }

    /// `p ⊗ 1`.
    pub fn embed_p(&self, p: &[F]) -> Vec<F> {
        kron(p, &self.base.one())
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.hopf.mul(x, y)
    }
}

/// `(ε⊗f(h))(g(p)⊗1)` for linear maps `f` on `H` and `g` on `H*`; the shape
/// shared by `S̄`, `S̄⁻¹` and the closed forms of `S̄₁`, `S̄₂`.
fn s_shape<F: Field>(h: &HopfAlgebra<F>, d: &Algebra<F>, f: &LinMap<F>, g: impl Fn(usize) -> Vec<F>) -> LinMap<F> {
    let n = h.dim();
    let one = h.one();
    LinMap::from_fn(n * n, n * n, |i| {
        let (p, x) = (i / n, i % n);
        d.mul(&kron(h.coalgebra().counit(), &f.column_dense(x)), &kron(&g(p), &one))
    })
}

/// `(p⊗h)(q⊗l) = p(h₁⇀q↼S⁻¹(h₃)) ⊗ h₂l`, with antipode
/// `S̄(p⊗h) = (ε⊗S(h))(S*⁻¹(p)⊗1)`.
pub fn drinfeld_double<F: Field>(h: &Arc<HopfAlgebra<F>>) -> Result<DrinfeldDouble<F>> {
    h.require_verified()?;
    let n = h.dim();
    let nn = n * n;
    let hp = Harpoons::new(h);
    let legs: Vec<_> = (0..n).map(|j| h.legs(j, 3)).collect();
    let mut cols = Vec::with_capacity(nn * nn);
    for x in 0..nn {
        let (i, j) = (x / n, x % n);
        let pi = unit_vector::<F>(n, i);
        for y in 0..nn {
            let (k, l) = (y / n, y % n);
            let qk = unit_vector::<F>(n, k);
            let mut out = vec![F::zero(); nn];
            for (t, c) in &legs[j] {
                let pq = dual_mul(h, &pi, &hp.apply(t[0], t[2], &qk));
                for (z, u) in h.product(t[1], l) {
                    add_scaled(&mut out, &(c.clone() * u.clone()), &kron(&pq, &unit_vector(n, *z)));
                }
            }
            cols.push(out);
        }
    }
    let dual = h.dual_hopf()?;
    let names = tensor_names(dual.basis(), h.basis());
    let unit = kron(h.coalgebra().counit(), &h.one());
    let algebra = Algebra::new(names.clone(), LinMap::from_columns(nn, cols), unit)?;
    let coalgebra = dual.coalgebra().co_opposite().tensor(h.coalgebra());

    let antipode = s_shape(h, &algebra, h.antipode(), |p| dual_s_inv(h, p));
    let inv_formula = s_shape(h, &algebra, h.antipode_inverse(), |p| dual_s(h, p));
    let mut hopf = HopfAlgebra::new(format!("D({})", h.name()), algebra, coalgebra, antipode)?
        .with_provenance(json!({"construction": "drinfeld_double", "of": h.name()}));
    let axioms = hopf.check_hopf();
    let axioms = require(hopf.name(), axioms)?;
    let inv = Report::verdict(
        "S̄⁻¹(p⊗h) = (ε⊗S⁻¹(h))(S*(p)⊗1)",
        &inv_formula == hopf.antipode_inverse(),
        || Witness::new(vec![], "closed form", "inverse of S̄"),
    );
    let report = require("Drinfeld double", Report::group("Drinfeld double", vec![axioms, inv]))?;
    Ok(DrinfeldDouble {
        base: h.clone(),
        hopf: Arc::new(hopf),
        report,
    })
}

/// `H*⋈A` with its `D(H)`-bicomodule algebra structure.
#[derive(Clone, Debug)]
pub struct DiagonalProduct<F> {
    pub bicomodule: BicomoduleAlgebra<F>,
    pub report: Report,
}

impl<F: Field> DiagonalProduct<F> {
    pub fn algebra(&self) -> &Algebra<F> {
        self.bicomodule.algebra()
    }
}

/// `(p⋈a)(q⋈b) = p(a{-1}⇀q↼S⁻¹(a{1})) ⋈ a{0}b` on `H*⊗A`, index `i·dim A + a`,
/// with coactions `p⋈a ↦ (p₂⋈a<0>)⊗(p₁⊗a<1>)` and
/// `p⋈a ↦ (p₂⊗a[-1])⊗(p₁⋈a[0])`.
pub fn diagonal_crossed_product<F: Field>(
    double: &DrinfeldDouble<F>,
    a: &BicomoduleAlgebra<F>,
) -> Result<DiagonalProduct<F>> {
    let h = &double.base;
    if **a.hopf() != **h {
        return Err(Error::Precondition("bicomodule algebra over a different Hopf algebra".into()));
    }
    let input = require("bicomodule algebra", a.check())?;
    let (n, d) = (h.dim(), a.dim());
    let nd = n * d;
    let nn = n * n;
    let hp = Harpoons::new(h);
    let sides: Vec<_> = (0..d).map(|x| a.two_sided(x)).collect();
    let mut cols = Vec::with_capacity(nd * nd);
    for x in 0..nd {
        let (i, ax) = (x / d, x % d);
        let pi = unit_vector::<F>(n, i);
        for y in 0..nd {
            let (k, bx) = (y / d, y % d);
            let qk = unit_vector::<F>(n, k);
            let mut out = vec![F::zero(); nd];
            for (hm, a0, h1, c) in &sides[ax] {
                let pq = dual_mul(h, &pi, &hp.apply(*hm, *h1, &qk));
                for (z, u) in a.algebra().product(*a0, bx) {
                    add_scaled(&mut out, &(c.clone() * u.clone()), &kron(&pq, &unit_vector(d, *z)));
                }
            }
            cols.push(out);
        }
    }
    let names = diagonal_names(h, a.algebra());
    let unit = kron(h.coalgebra().counit(), a.algebra().unit());
    let algebra = Algebra::new(names, LinMap::from_columns(nd, cols), unit)?;

    let mut right = Vec::new();
    let mut left = Vec::new();
    for x in 0..nd {
        let (i, ax) = (x / d, x % d);
        for (k, l, c) in dual_coproduct(h, i) {
            for (a0, h1, e) in a.right_coaction(ax) {
                right.push((x, (l * d + a0) * nn + k * n + h1, c.clone() * e.clone()));
            }
            for (hm, a0, e) in a.left_coaction(ax) {
                left.push((x, (l * n + hm) * nd + k * d + a0, c.clone() * e.clone()));
            }
        }
    }
    let bicomodule = BicomoduleAlgebra::new(
        double.hopf.clone(),
        algebra,
        LinMap::from_triplets(nd, nn * nd, left),
        LinMap::from_triplets(nd, nd * nn, right),
    )?;
    let output = require("H*⋈A", bicomodule.check())?;
    Ok(DiagonalProduct {
        bicomodule,
        report: Report::group("diagonal crossed product", vec![input, output]),
    })
}

fn require_lazy<F: Field>(sigma: &Cocycle2<F>) -> Result<&Cocycle2<F>> {
    if !sigma.is_normalized() {
        return Err(Error::Precondition("σ is not normalized".into()));
    }
    if !sigma.is_lazy() {
        return Err(Error::Precondition("σ is not lazy".into()));
    }
    if !sigma.is_left_cocycle() {
        return Err(Error::Precondition("σ is not a left 2-cocycle".into()));
    }
    sigma.inverse()
}

/// `τ̄(p⊗h, q⊗l) = p(1) q(S⁻¹(h₃)h₁) τ(h₂, l)` for any bilinear form `τ`.
fn bar_shape<F: Field>(double: &DrinfeldDouble<F>, tau: &Cocycle2<F>) -> Result<Cocycle2<F>> {
    let h = &double.base;
    let n = h.dim();
    let one = h.one();
    // q(S⁻¹(h₃)h₁) τ(h₂, l) summed over the legs of e_j, tabulated per (j, k, l)
    let mut table = vec![F::zero(); n * n * n];
    for j in 0..n {
        for (t, c) in h.legs(j, 3) {
            let v = h.mul(&h.s_inv_vec(t[2]), &h.basis_vector(t[0]));
            for l in 0..n {
                let s = tau.value(t[1], l);
                if s.is_zero() {
                    continue;
                }
                for (k, vk) in v.iter().enumerate() {
                    table[(j * n + k) * n + l] += c.clone() * vk.clone() * s.clone();
                }
            }
        }
    }
    Cocycle2::from_fn(double.hopf.clone(), |x, y| {
        let (i, j) = (x / n, x % n);
        let (k, l) = (y / n, y % n);
        one[i].clone() * table[(j * n + k) * n + l].clone()
    })
}

/// `σ̄(p⊗h, q⊗l) = p(1) q(S⁻¹(h₃)h₁) σ(h₂, l)`, asserted normalized, lazy and
/// a left 2-cocycle, with inverse of the same shape built from `σ⁻¹`.
pub fn extend_cocycle_to_double<F: Field>(double: &DrinfeldDouble<F>, sigma: &Cocycle2<F>) -> Result<Cocycle2<F>> {
    let inv = require_lazy(sigma)?;
    let bar = bar_shape(double, sigma)?;
    let bar_inv = bar_shape(double, inv)?;
    let trivial = Cocycle2::trivial(double.hopf.clone())?;
    let left_inverse = bar.convolve(&bar_inv)? == trivial;
    let right_inverse = bar_inv.convolve(&bar)? == trivial;
    let report = Report::group(
        "extended cocycle σ̄",
        vec![
            bar.normalization_report().clone(),
            bar.lazy_report().clone(),
            bar.left_cocycle_report().clone(),
            Report::verdict("σ̄ * σ̄⁻¹ = ε", left_inverse, || Witness::new(vec![], "σ̄ * σ̄⁻¹", "ε⊗ε")),
            Report::verdict("σ̄⁻¹ * σ̄ = ε", right_inverse, || Witness::new(vec![], "σ̄⁻¹ * σ̄", "ε⊗ε")),
        ],
    );
    require("σ̄", report)?;
    Ok(bar)
}

/// The extension of `σ⁻¹` by the same formula.
pub fn extended_inverse<F: Field>(double: &DrinfeldDouble<F>, sigma: &Cocycle2<F>) -> Result<Cocycle2<F>> {
    let inv = require_lazy(sigma)?;
    bar_shape(double, inv)
}

/// `H*⋈H(σ) = D(H)(σ̄)`, the re-derivation of `σ̄` through the counit of
/// `D(H)`, and `(ε⊗h)·σ̄(p⊗1) = (ε⊗h)(p⊗1)`.
pub fn verify_exte<F: Field>(double: &DrinfeldDouble<F>, sigma: &Cocycle2<F>) -> Report {
    match extend_cocycle_to_double(double, sigma) {
        Ok(bar) => compare_exte(double, sigma, &bar),
        Err(e) => Report::verdict("σ̄ extends σ", false, || Witness::new(vec![], e, "normalized invertible lazy σ")),
    }
}

/// [`verify_exte`] against a given candidate for `σ̄`.
pub fn compare_exte<F: Field>(double: &DrinfeldDouble<F>, sigma: &Cocycle2<F>, bar: &Cocycle2<F>) -> Report {
    let d = &double.hopf;
    let nn = d.dim();
    let n = double.base.dim();
    let twisted = match sigma.twist(crate::cocycle::TwistMode::Lazy) {
        Ok(t) => t,
        Err(e) => return Report::verdict("H(σ)", false, || Witness::new(vec![], e, "bicomodule algebra")),
    };
    let a = twisted.bicomodule.expect("lazy twist carries coactions");
    let diag = match diagonal_crossed_product(double, &a) {
        Ok(p) => p,
        Err(e) => return Report::verdict("H*⋈H(σ)", false, || Witness::new(vec![], e, "bicomodule algebra")),
    };
    let mult = diag.algebra().mult();

    let mut products = Check::new("H*⋈H(σ) = D(H)(σ̄) as algebras");
    let mut rederived = Check::new("σ̄(x,y) = ε_D(x⋈y)");
    for x in 0..nn {
        for y in 0..nn {
            let lhs = mult.column_dense(x * nn + y);
            let rhs = bar.left_product(x, y);
            products.record(lhs == rhs, || Witness::new(d.names(&[x, y]), d.format(&lhs), d.format(&rhs)));
            let e = d.eps(&lhs);
            let v = bar.value(x, y).clone();
            rederived.record(e == v, || Witness::new(d.names(&[x, y]), &e, &v));
        }
    }
    let coactions = Report::verdict(
        "coactions of H*⋈H(σ) are Δ_D(H)",
        diag.bicomodule.left() == d.coalgebra().comult() && diag.bicomodule.right() == d.coalgebra().comult(),
        || Witness::new(vec![], "diagonal coactions", "Δ_D(H)"),
    );

    let mut lulu = Check::new("(ε⊗h)·σ̄(p⊗1) = (ε⊗h)(p⊗1)");
    for hi in 0..n {
        let x = double.embed_h(&unit_vector(n, hi));
        for p in 0..n {
            let y = double.embed_p(&unit_vector(n, p));
            let mut lhs = vec![F::zero(); nn];
            for (s, u) in x.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                for (t, v) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    add_scaled(&mut lhs, &(u.clone() * v.clone()), &bar.left_product(s, t));
                }
            }
            let rhs = d.mul(&x, &y);
            lulu.record(lhs == rhs, || {
                Witness::new(
                    vec![format!("ε⊗{}", double.base.basis()[hi]), format!("p_{}⊗1", double.base.basis()[p])],
                    d.format(&lhs),
                    d.format(&rhs),
                )
            });
        }
    }
    Report::group(
        "H*⋈H(σ) = D(H)(σ̄)",
        vec![products.finish(), coactions, rederived.finish(), lulu.finish()],
    )
}

/// `S̄₁`, `S̄₂` of `σ̄` on `D(H)` against `(ε⊗S₁(h))(S*⁻¹(p)⊗1)` and
/// `(ε⊗S₂(h))(S*(p)⊗1)`.
pub fn double_s1_s2<F: Field>(double: &DrinfeldDouble<F>, sigma: &Cocycle2<F>) -> Result<Report> {
    let bar = extend_cocycle_to_double(double, sigma)?;
    let h = &double.base;
    let s1 = s1_map(sigma)?;
    let s2 = s2_map(sigma)?;
    let bar_s1 = s1_map(&bar)?;
    let bar_s2 = s2_map(&bar)?;
    let closed1 = s_shape(h, double.hopf.algebra(), &s1, |p| dual_s_inv(h, p));
    let closed2 = s_shape(h, double.hopf.algebra(), &s2, |p| dual_s(h, p));
    let d = &double.hopf;
    let compare = |name: &str, lhs: &LinMap<F>, rhs: &LinMap<F>| {
        let mut check = Check::new(name);
        for x in 0..d.dim() {
            let l = lhs.column_dense(x);
            let r = rhs.column_dense(x);
            check.record(l == r, || Witness::new(d.names(&[x]), d.format(&l), d.format(&r)));
        }
        check.finish()
    };
    Ok(Report::group(
        "S̄₁, S̄₂ on D(H)",
        vec![
            compare("S̄₁(p⊗h) = (ε⊗S₁(h))(S*⁻¹(p)⊗1)", &bar_s1, &closed1),
            compare("S̄₂(p⊗h) = (ε⊗S₂(h))(S*(p)⊗1)", &bar_s2, &closed2),
        ],
    ))
}

/// Basis names `p_b ⋈ a` for a diagonal crossed product.
pub fn diagonal_names<F: Field>(h: &HopfAlgebra<F>, a: &Algebra<F>) -> Vec<String> {
    let mut out = Vec::new();
    for p in h.basis() {
        for b in a.basis() {
            out.push(format!("p_{p}⋈{b}"));
        }
    }
    out
}

#[cfg(test)]
mod tests;
