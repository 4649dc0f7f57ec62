use crate::error::{Error, Result};
use crate::hopf::{add_scaled, kron, HopfAlgebra};
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

use super::{eps_one, Cocycle2};

fn require_regular<F: Field>(sigma: &Cocycle2<F>) -> Result<&Cocycle2<F>> {
    if !sigma.is_normalized() {
        return Err(Error::Precondition("σ is not normalized".into()));
    }
    if !sigma.is_left_cocycle() {
        return Err(Error::Precondition("σ is not a left 2-cocycle".into()));
    }
    sigma.inverse()
}

/// `h ↦ Σ τ(h₁, S(h₂)) S(h₃)` for any bilinear form `τ`.
pub(crate) fn phi_of<F: Field>(tau: &Cocycle2<F>) -> LinMap<F> {
    let h = tau.hopf();
    let n = h.dim();
    LinMap::from_fn(n, n, |i| {
        let mut out = vec![F::zero(); n];
        for (t, c) in h.legs(i, 3) {
            let coef = tau.eval_right(t[0], &h.s_vec(t[1])) * c;
            add_scaled(&mut out, &coef, &h.s_vec(t[2]));
        }
        out
    })
}

/// `φ_σ(h) = Σ σ(h₁, S(h₂)) S(h₃)`.
pub fn phi_sigma<F: Field>(sigma: &Cocycle2<F>) -> Result<LinMap<F>> {
    require_regular(sigma)?;
    Ok(phi_of(sigma))
}

/// `S₁(h) = Σ σ⁻¹(S(h₂), h₃) S(h₁)`.
pub fn s1_map<F: Field>(sigma: &Cocycle2<F>) -> Result<LinMap<F>> {
    let inv = require_regular(sigma)?;
    let h = sigma.hopf();
    let n = h.dim();
    Ok(LinMap::from_fn(n, n, |i| {
        let mut out = vec![F::zero(); n];
        for (t, c) in h.legs(i, 3) {
            let coef = inv.eval_left(&h.s_vec(t[1]), t[2]) * c;
            add_scaled(&mut out, &coef, &h.s_vec(t[0]));
        }
        out
    }))
}

/// `S₂(h) = Σ σ⁻¹(h₃, S⁻¹(h₂)) S⁻¹(h₁)`.
pub fn s2_map<F: Field>(sigma: &Cocycle2<F>) -> Result<LinMap<F>> {
    let inv = require_regular(sigma)?;
    let h = sigma.hopf();
    let n = h.dim();
    Ok(LinMap::from_fn(n, n, |i| {
        let mut out = vec![F::zero(); n];
        for (t, c) in h.legs(i, 3) {
            let coef = inv.eval_right(t[2], &h.s_inv_vec(t[1])) * c;
            add_scaled(&mut out, &coef, &h.s_inv_vec(t[0]));
        }
        out
    }))
}

/// Bilinear extension of a table of basis products.
struct Product<'a, F> {
    n: usize,
    table: &'a [Vec<F>],
}

impl<F: Field> Product<'_, F> {
    fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.n];
        for (a, u) in x.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            for (b, v) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                add_scaled(&mut out, &(u.clone() * v.clone()), &self.table[a * self.n + b]);
            }
        }
        out
    }
}

struct Suite<'a, F: Field> {
    h: &'a HopfAlgebra<F>,
    s: Vec<Vec<F>>,
    si: Vec<Vec<F>>,
}

impl<'a, F: Field> Suite<'a, F> {
    fn at(&self, i: usize) -> Vec<String> {
        self.h.names(&[i])
    }

    /// A scalar identity checked on every basis element.
    fn scalar(&self, name: &str, mut f: impl FnMut(usize) -> (F, F)) -> Report {
        let mut check = Check::new(name);
        for i in 0..self.h.dim() {
            let (l, r) = f(i);
            check.record(l == r, || Witness::new(self.at(i), &l, &r));
        }
        check.finish()
    }

    /// A vector identity checked on every basis element.
    fn vector(&self, name: &str, mut f: impl FnMut(usize) -> (Vec<F>, Vec<F>)) -> Report {
        let mut check = Check::new(name);
        for i in 0..self.h.dim() {
            let (l, r) = f(i);
            check.record(l == r, || Witness::new(self.at(i), self.format(&l), self.format(&r)));
        }
        check.finish()
    }

    fn format(&self, v: &[F]) -> String {
        if v.len() == self.h.dim() {
            self.h.format(v)
        } else {
            self.h.coalgebra().format_tensor(v, 2)
        }
    }

    fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.h.mul(x, y)
    }

    fn basis(&self, i: usize) -> Vec<F> {
        self.h.basis_vector(i)
    }
}

/// Evaluates every identity on every basis element.
///
/// Identities that need laziness are skipped with a note when `σ` is not
/// lazy; the rest hold for any normalized invertible left 2-cocycle.
pub fn identity_suite<F: Field>(sigma: &Cocycle2<F>) -> Result<Report> {
    let inv = require_regular(sigma)?;
    let h = sigma.hopf().as_ref();
    let n = h.dim();
    let lazy = sigma.is_lazy();
    let st = Suite {
        h,
        s: (0..n).map(|i| h.s_vec(i)).collect(),
        si: (0..n).map(|i| h.s_inv_vec(i)).collect(),
    };
    let (s, si) = (&st.s, &st.si);
    let eps = |i: usize| h.counit(i);

    let mut unconditional = Vec::new();
    unconditional.push(st.scalar("σ(h1,S(h2))σ⁻¹(S(h3),h4) = ε(h)", |i| {
        let mut acc = F::zero();
        for (t, c) in h.legs(i, 4) {
            acc += c * sigma.eval_right(t[0], &s[t[1]]) * inv.eval_left(&s[t[2]], t[3]);
        }
        (acc, eps(i))
    }));
    unconditional.push(st.scalar("σ(S⁻¹(h2),h1)σ⁻¹(h4,S⁻¹(h3)) = ε(h)", |i| {
        let mut acc = F::zero();
        for (t, c) in h.legs(i, 4) {
            acc += c * sigma.eval_left(&si[t[1]], t[0]) * inv.eval_right(t[3], &si[t[2]]);
        }
        (acc, eps(i))
    }));

    let phi = phi_of(sigma);
    let s1 = s1_map(sigma)?;
    let s2 = s2_map(sigma)?;
    let id = LinMap::identity(n);
    unconditional.push(st.vector("S2∘φ_σ = id", |i| (s2.compose(&phi).column_dense(i), id.column_dense(i))));
    unconditional.push(st.vector("φ_σ∘S2 = id", |i| (phi.compose(&s2).column_dense(i), id.column_dense(i))));

    // φ_σ: ₛH → H_{σ⁻¹} is an anti-morphism with φ_σ(h1)·h2 = ε(h)1 = h1·φ_σ(h2)
    let left_tab: Vec<Vec<F>> = (0..n * n).map(|ab| sigma.left_product(ab / n, ab % n)).collect();
    let right_inv_tab: Vec<Vec<F>> = (0..n * n).map(|ab| inv.right_product(ab / n, ab % n)).collect();
    let right_inv = Product { n, table: &right_inv_tab };
    let mut anti = Check::new("φ_σ(a·b) = φ_σ(b)·φ_σ(a) from ₛH to H_σ⁻¹");
    for a in 0..n {
        for b in 0..n {
            let lhs = phi.apply(&left_tab[a * n + b]);
            let rhs = right_inv.mul(&phi.column_dense(b), &phi.column_dense(a));
            anti.record(lhs == rhs, || Witness::new(h.names(&[a, b]), h.format(&lhs), h.format(&rhs)));
        }
    }
    unconditional.push(anti.finish());
    unconditional.push(st.vector("φ_σ(h1)·h2 = ε(h)1 = h1·φ_σ(h2) in H_σ⁻¹", |i| {
        let mut l = vec![F::zero(); n];
        let mut r = vec![F::zero(); n];
        for (a, b, c) in h.coalgebra().coproduct(i) {
            add_scaled(&mut l, c, &right_inv.mul(&phi.column_dense(a), &st.basis(b)));
            add_scaled(&mut r, c, &right_inv.mul(&st.basis(a), &phi.column_dense(b)));
        }
        let e = eps_one(h, i);
        if l == e {
            (r, e)
        } else {
            (l, e)
        }
    }));

    let nn = n * n;
    let comult_of = |m: &LinMap<F>, i: usize| h.coalgebra().comul(&m.column_dense(i));
    unconditional.push(st.vector("Δ(S1(h)) = S1(h2)⊗S(h1)", |i| {
        let mut r = vec![F::zero(); nn];
        for (a, b, c) in h.coalgebra().coproduct(i) {
            add_scaled(&mut r, c, &kron(&s1.column_dense(b), &s[a]));
        }
        (comult_of(&s1, i), r)
    }));
    unconditional.push(st.vector("Δ(S2(h)) = S2(h2)⊗S⁻¹(h1)", |i| {
        let mut r = vec![F::zero(); nn];
        for (a, b, c) in h.coalgebra().coproduct(i) {
            add_scaled(&mut r, c, &kron(&s2.column_dense(b), &si[a]));
        }
        (comult_of(&s2, i), r)
    }));

    let lazy_names = [
        "σ(h1,S(h2)) = σ(S(h1),h2)",
        "σ(S⁻¹(h2),h1) = σ(h2,S⁻¹(h1))",
        "σ⁻¹(h3,S⁻¹(h2))h4S⁻¹(h1) = σ⁻¹(h2,S⁻¹(h1))1",
        "σ⁻¹(S⁻¹(h3),h2)S⁻¹(h4)h1 = σ⁻¹(S⁻¹(h2),h1)1",
        "σ⁻¹(S(h2),h3)S(h1)h4 = σ⁻¹(S(h1),h2)1",
        "σ⁻¹(S(h2),h3)S(h1) = σ⁻¹(S(h1),h2)S(h3)",
        "σ⁻¹(h2,S(h3))h1S(h4) = σ⁻¹(h1,S(h2))1",
        "σ⁻¹(S(h2),h3)h4S⁻¹(h1) = σ⁻¹(S(h1),h2)1",
        "S1 = φ_σ⁻¹",
        "S1(h1)·h2 = ε(h)1 = h1·S1(h2) in H(σ)",
        "S2(h2)·h1 = ε(h)1 = h2·S2(h1) in H(σ)",
        "S1, S2 are anti-isomorphisms H(σ⁻¹) → H(σ)",
    ];
    let mut gated = Vec::new();
    if lazy {
        gated.push(st.scalar(lazy_names[0], |i| {
            let (mut l, mut r) = (F::zero(), F::zero());
            for (a, b, c) in h.coalgebra().coproduct(i) {
                l += c.clone() * sigma.eval_right(a, &s[b]);
                r += c.clone() * sigma.eval_left(&s[a], b);
            }
            (l, r)
        }));
        gated.push(st.scalar(lazy_names[1], |i| {
            let (mut l, mut r) = (F::zero(), F::zero());
            for (a, b, c) in h.coalgebra().coproduct(i) {
                l += c.clone() * sigma.eval_left(&si[b], a);
                r += c.clone() * sigma.eval_right(b, &si[a]);
            }
            (l, r)
        }));
        let one = h.one();
        // the six four-leg identities: (left sum over Δ³, right scalar over Δ)
        let two_leg = |i: usize, f: &dyn Fn(usize, usize) -> F| {
            let mut acc = F::zero();
            for (a, b, c) in h.coalgebra().coproduct(i) {
                acc += c.clone() * f(a, b);
            }
            acc
        };
        gated.push(st.vector(lazy_names[2], |i| {
            let mut l = vec![F::zero(); n];
            for (t, c) in h.legs(i, 4) {
                let coef = c * inv.eval_right(t[2], &si[t[1]]);
                add_scaled(&mut l, &coef, &st.mul(&st.basis(t[3]), &si[t[0]]));
            }
            let r = two_leg(i, &|a, b| inv.eval_right(b, &si[a]));
            (l, crate::hopf::scaled(&r, &one))
        }));
        gated.push(st.vector(lazy_names[3], |i| {
            let mut l = vec![F::zero(); n];
            for (t, c) in h.legs(i, 4) {
                let coef = c * inv.eval_left(&si[t[2]], t[1]);
                add_scaled(&mut l, &coef, &st.mul(&si[t[3]], &st.basis(t[0])));
            }
            let r = two_leg(i, &|a, b| inv.eval_left(&si[b], a));
            (l, crate::hopf::scaled(&r, &one))
        }));
        gated.push(st.vector(lazy_names[4], |i| {
            let mut l = vec![F::zero(); n];
            for (t, c) in h.legs(i, 4) {
                let coef = c * inv.eval_left(&s[t[1]], t[2]);
                add_scaled(&mut l, &coef, &st.mul(&s[t[0]], &st.basis(t[3])));
            }
            let r = two_leg(i, &|a, b| inv.eval_left(&s[a], b));
            (l, crate::hopf::scaled(&r, &one))
        }));
        gated.push(st.vector(lazy_names[5], |i| {
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (t, c) in h.legs(i, 3) {
                add_scaled(&mut l, &(c.clone() * inv.eval_left(&s[t[1]], t[2])), &s[t[0]]);
                add_scaled(&mut r, &(c * inv.eval_left(&s[t[0]], t[1])), &s[t[2]]);
            }
            (l, r)
        }));
        gated.push(st.vector(lazy_names[6], |i| {
            let mut l = vec![F::zero(); n];
            for (t, c) in h.legs(i, 4) {
                let coef = c * inv.eval_right(t[1], &s[t[2]]);
                add_scaled(&mut l, &coef, &st.mul(&st.basis(t[0]), &s[t[3]]));
            }
            let r = two_leg(i, &|a, b| inv.eval_right(a, &s[b]));
            (l, crate::hopf::scaled(&r, &one))
        }));
        gated.push(st.vector(lazy_names[7], |i| {
            let mut l = vec![F::zero(); n];
            for (t, c) in h.legs(i, 4) {
                let coef = c * inv.eval_left(&s[t[1]], t[2]);
                add_scaled(&mut l, &coef, &st.mul(&st.basis(t[3]), &si[t[0]]));
            }
            let r = two_leg(i, &|a, b| inv.eval_left(&s[a], b));
            (l, crate::hopf::scaled(&r, &one))
        }));

        let phi_inv = phi_of(inv);
        gated.push(st.vector(lazy_names[8], |i| (s1.column_dense(i), phi_inv.column_dense(i))));

        // H(σ) and H(σ⁻¹) are the left twists
        let sig_tab = Product { n, table: &left_tab };
        let inv_left_tab: Vec<Vec<F>> = (0..n * n).map(|ab| inv.left_product(ab / n, ab % n)).collect();
        gated.push(st.vector(lazy_names[9], |i| {
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (a, b, c) in h.coalgebra().coproduct(i) {
                add_scaled(&mut l, c, &sig_tab.mul(&s1.column_dense(a), &st.basis(b)));
                add_scaled(&mut r, c, &sig_tab.mul(&st.basis(a), &s1.column_dense(b)));
            }
            let e = eps_one(h, i);
            if l == e {
                (r, e)
            } else {
                (l, e)
            }
        }));
        gated.push(st.vector(lazy_names[10], |i| {
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (a, b, c) in h.coalgebra().coproduct(i) {
                add_scaled(&mut l, c, &sig_tab.mul(&s2.column_dense(b), &st.basis(a)));
                add_scaled(&mut r, c, &sig_tab.mul(&st.basis(b), &s2.column_dense(a)));
            }
            let e = eps_one(h, i);
            if l == e {
                (r, e)
            } else {
                (l, e)
            }
        }));
        let mut anti = Check::new(lazy_names[11]);
        for (label, m) in [("S1", &s1), ("S2", &s2)] {
            anti.record(m.is_bijective(), || Witness::new(vec![label.into()], "singular", "bijective"));
            for a in 0..n {
                for b in 0..n {
                    let lhs = m.apply(&inv_left_tab[a * n + b]);
                    let rhs = sig_tab.mul(&m.column_dense(b), &m.column_dense(a));
                    anti.record(lhs == rhs, || {
                        let mut at = vec![label.to_string()];
                        at.extend(h.names(&[a, b]));
                        Witness::new(at, h.format(&lhs), h.format(&rhs))
                    });
                }
            }
        }
        gated.push(anti.finish());
    } else {
        gated = lazy_names
            .iter()
            .map(|name| Report::skip(*name, "σ is not lazy"))
            .collect();
    }

    Ok(Report::group(
        "identity suite",
        vec![
            Report::group("any normalized invertible left 2-cocycle", unconditional),
            Report::group("lazy 2-cocycles", gated),
        ],
    ))
}
