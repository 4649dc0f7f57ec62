use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

use super::algebra::{kron, tensor_names, unit_vector};
use super::{power_names, Algebra, HopfAlgebra};

/// Product in `L ⊗ R` of two row-major flattened tensors.
pub fn tensor_mul<F: Field>(left: &Algebra<F>, right: &Algebra<F>, x: &[F], y: &[F]) -> Vec<F> {
    let (n, m) = (left.dim(), right.dim());
    let mut out = vec![F::zero(); n * m];
    for (s, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (t, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let c = a.clone() * b.clone();
            for (p, u) in left.product(s / m, t / m) {
                for (q, v) in right.product(s % m, t % m) {
                    out[p * m + q] += c.clone() * u.clone() * v.clone();
                }
            }
        }
    }
    out
}

/// An algebra `A` with a left coaction `A → H ⊗ A` (index `h·d + a`) and a
/// right coaction `A → A ⊗ H` (index `a·n + h`).
#[derive(Clone, Debug)]
pub struct BicomoduleAlgebra<F> {
    hopf: Arc<HopfAlgebra<F>>,
    algebra: Algebra<F>,
    left: LinMap<F>,
    right: LinMap<F>,
}

impl<F: Field> BicomoduleAlgebra<F> {
    pub fn new(hopf: Arc<HopfAlgebra<F>>, algebra: Algebra<F>, left: LinMap<F>, right: LinMap<F>) -> Result<Self> {
        let (n, d) = (hopf.dim(), algebra.dim());
        if left.source() != d || left.target() != n * d || right.source() != d || right.target() != d * n {
            return Err(Error::DimensionMismatch(format!(
                "coactions of a {d}-dimensional algebra over a {n}-dimensional Hopf algebra"
            )));
        }
        Ok(BicomoduleAlgebra {
            hopf,
            algebra,
            left,
            right,
        })
    }

    /// `H` itself, both coactions given by `Δ`.
    pub fn regular(hopf: Arc<HopfAlgebra<F>>) -> Self {
        let delta = hopf.coalgebra().comult().clone();
        let algebra = hopf.algebra().clone();
        BicomoduleAlgebra {
            hopf,
            algebra,
            left: delta.clone(),
            right: delta,
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn left(&self) -> &LinMap<F> {
        &self.left
    }

    pub fn right(&self) -> &LinMap<F> {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `a ↦ a[-1] ⊗ a[0]` as `(h, a', c)` triples.
    pub fn left_coaction(&self, a: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let d = self.dim();
        self.left.column(a).iter().map(move |(t, c)| (t / d, t % d, c))
    }

    /// `a ↦ a<0> ⊗ a<1>` as `(a', h, c)` triples.
    pub fn right_coaction(&self, a: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n = self.hopf.dim();
        self.right.column(a).iter().map(move |(t, c)| (t / n, t % n, c))
    }

    /// `a{-1} ⊗ a{0} ⊗ a{1}` in `H ⊗ A ⊗ H`, index `(h·d + a')·n + h'`.
    pub fn two_sided(&self, a: usize) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (a0, h1, c) in self.right_coaction(a) {
            for (hm, a00, e) in self.left_coaction(a0) {
                out.push((hm, a00, h1, c.clone() * e.clone()));
            }
        }
        out
    }

    /// Algebra axioms, comodule axioms on both sides, compatibility of the
    /// two coactions and multiplicativity of each.
    pub fn check(&self) -> Report {
        let (n, d) = (self.hopf.dim(), self.dim());
        let h = &self.hopf;
        let mut children = self.algebra.check_algebra();
        let ha_names = tensor_names(h.basis(), self.algebra.basis());
        let ah_names = tensor_names(self.algebra.basis(), h.basis());
        let hah_names = tensor_names(&ha_names, h.basis());
        let hha_names = tensor_names(&power_names(h.basis(), 2), self.algebra.basis());
        let ahh_names = tensor_names(&ah_names, h.basis());
        let at = |a: usize| vec![self.algebra.basis()[a].clone()];

        let mut lco = Check::new("left coaction coassociative");
        let mut lcu = Check::new("left coaction counit");
        let mut rco = Check::new("right coaction coassociative");
        let mut rcu = Check::new("right coaction counit");
        let mut compat = Check::new("coactions commute");
        for a in 0..d {
            let mut lhs = vec![F::zero(); n * n * d];
            let mut rhs = vec![F::zero(); n * n * d];
            let mut eps = vec![F::zero(); d];
            for (hm, a0, c) in self.left_coaction(a) {
                for (h1, h2, e) in h.coalgebra().coproduct(hm) {
                    lhs[(h1 * n + h2) * d + a0] += c.clone() * e.clone();
                }
                for (hm2, a00, e) in self.left_coaction(a0) {
                    rhs[(hm * n + hm2) * d + a00] += c.clone() * e.clone();
                }
                eps[a0] += h.counit(hm) * c.clone();
            }
            lco.record(lhs == rhs, || {
                Witness::new(at(a), format_vector(&lhs, &hha_names), format_vector(&rhs, &hha_names))
            });
            let e = unit_vector(d, a);
            lcu.record(eps == e, || Witness::new(at(a), self.algebra.format(&eps), self.algebra.format(&e)));

            let mut lhs = vec![F::zero(); d * n * n];
            let mut rhs = vec![F::zero(); d * n * n];
            let mut eps = vec![F::zero(); d];
            for (a0, h1, c) in self.right_coaction(a) {
                for (a00, h0, e) in self.right_coaction(a0) {
                    lhs[(a00 * n + h0) * n + h1] += c.clone() * e.clone();
                }
                for (x, y, e) in h.coalgebra().coproduct(h1) {
                    rhs[(a0 * n + x) * n + y] += c.clone() * e.clone();
                }
                eps[a0] += h.counit(h1) * c.clone();
            }
            rco.record(lhs == rhs, || {
                Witness::new(at(a), format_vector(&lhs, &ahh_names), format_vector(&rhs, &ahh_names))
            });
            rcu.record(eps == e, || Witness::new(at(a), self.algebra.format(&eps), self.algebra.format(&e)));

            // (λ⊗id)ρ = (id⊗ρ)λ
            let mut lhs = vec![F::zero(); n * d * n];
            for (hm, a0, h1, c) in self.two_sided(a) {
                lhs[(hm * d + a0) * n + h1] += c;
            }
            let mut rhs = vec![F::zero(); n * d * n];
            for (hm, a0, c) in self.left_coaction(a) {
                for (a00, h1, e) in self.right_coaction(a0) {
                    rhs[(hm * d + a00) * n + h1] += c.clone() * e.clone();
                }
            }
            compat.record(lhs == rhs, || {
                Witness::new(at(a), format_vector(&lhs, &hah_names), format_vector(&rhs, &hah_names))
            });
        }
        children.extend([lco.finish(), lcu.finish(), rco.finish(), rcu.finish(), compat.finish()]);

        let mut lmul = Check::new("left coaction multiplicative");
        let mut rmul = Check::new("right coaction multiplicative");
        let lcols: Vec<Vec<F>> = (0..d).map(|a| self.left.column_dense(a)).collect();
        let rcols: Vec<Vec<F>> = (0..d).map(|a| self.right.column_dense(a)).collect();
        for a in 0..d {
            for b in 0..d {
                let ab = self.algebra.mult().column_dense(a * d + b);
                let lhs = self.left.apply(&ab);
                let rhs = tensor_mul(h.algebra(), &self.algebra, &lcols[a], &lcols[b]);
                lmul.record(lhs == rhs, || {
                    Witness::new(
                        self.algebra.names(&[a, b]),
                        format_vector(&lhs, &ha_names),
                        format_vector(&rhs, &ha_names),
                    )
                });
                let lhs = self.right.apply(&ab);
                let rhs = tensor_mul(&self.algebra, h.algebra(), &rcols[a], &rcols[b]);
                rmul.record(lhs == rhs, || {
                    Witness::new(
                        self.algebra.names(&[a, b]),
                        format_vector(&lhs, &ah_names),
                        format_vector(&rhs, &ah_names),
                    )
                });
            }
        }
        let one = self.algebra.unit();
        let l1 = self.left.apply(one);
        let expected = kron(&h.one(), one);
        lmul.record(l1 == expected, || {
            Witness::new(vec!["1".into()], format_vector(&l1, &ha_names), format_vector(&expected, &ha_names))
        });
        let r1 = self.right.apply(one);
        let expected = kron(one, &h.one());
        rmul.record(r1 == expected, || {
            Witness::new(vec!["1".into()], format_vector(&r1, &ah_names), format_vector(&expected, &ah_names))
        });
        children.extend([lmul.finish(), rmul.finish()]);
        Report::group("bicomodule algebra axioms", children)
    }
}

/// An algebra `A` with a left coaction `A → H ⊗ A` (index `h·d + a`) that is
/// an algebra map.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra<F> {
    hopf: Arc<HopfAlgebra<F>>,
    algebra: Algebra<F>,
    coaction: LinMap<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(hopf: Arc<HopfAlgebra<F>>, algebra: Algebra<F>, coaction: LinMap<F>) -> Result<Self> {
        let (n, d) = (hopf.dim(), algebra.dim());
        if coaction.source() != d || coaction.target() != n * d {
            return Err(Error::DimensionMismatch(format!(
                "coaction of a {d}-dimensional algebra over a {n}-dimensional Hopf algebra"
            )));
        }
        Ok(ComoduleAlgebra {
            hopf,
            algebra,
            coaction,
        })
    }

    /// `H` with `Δ`.
    pub fn regular(hopf: Arc<HopfAlgebra<F>>) -> Self {
        let coaction = hopf.coalgebra().comult().clone();
        let algebra = hopf.algebra().clone();
        ComoduleAlgebra {
            hopf,
            algebra,
            coaction,
        }
    }

    /// The left half of a bicomodule algebra.
    pub fn from_bicomodule(b: &BicomoduleAlgebra<F>) -> Self {
        ComoduleAlgebra {
            hopf: b.hopf.clone(),
            algebra: b.algebra.clone(),
            coaction: b.left.clone(),
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn coaction(&self) -> &LinMap<F> {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `a ↦ a(-1) ⊗ a(0)` as `(h, a', c)` triples.
    pub fn coact(&self, a: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let d = self.dim();
        self.coaction.column(a).iter().map(move |(t, c)| (t / d, t % d, c))
    }

    /// Algebra axioms, comodule axioms and multiplicativity of the coaction.
    pub fn check(&self) -> Report {
        let (n, d) = (self.hopf.dim(), self.dim());
        let h = &self.hopf;
        let mut children = self.algebra.check_algebra();
        let ha_names = tensor_names(h.basis(), self.algebra.basis());
        let hha_names = tensor_names(&power_names(h.basis(), 2), self.algebra.basis());
        let mut co = Check::new("coaction coassociative");
        let mut cu = Check::new("coaction counit");
        for a in 0..d {
            let mut lhs = vec![F::zero(); n * n * d];
            let mut rhs = vec![F::zero(); n * n * d];
            let mut eps = vec![F::zero(); d];
            for (hm, a0, c) in self.coact(a) {
                for (h1, h2, e) in h.coalgebra().coproduct(hm) {
                    lhs[(h1 * n + h2) * d + a0] += c.clone() * e.clone();
                }
                for (hm2, a00, e) in self.coact(a0) {
                    rhs[(hm * n + hm2) * d + a00] += c.clone() * e.clone();
                }
                eps[a0] += h.counit(hm) * c.clone();
            }
            let at = vec![self.algebra.basis()[a].clone()];
            co.record(lhs == rhs, || {
                Witness::new(at.clone(), format_vector(&lhs, &hha_names), format_vector(&rhs, &hha_names))
            });
            let e = unit_vector(d, a);
            cu.record(eps == e, || Witness::new(at, self.algebra.format(&eps), self.algebra.format(&e)));
        }
        let mut mult = Check::new("coaction multiplicative");
        let cols: Vec<Vec<F>> = (0..d).map(|a| self.coaction.column_dense(a)).collect();
        for a in 0..d {
            for b in 0..d {
                let lhs = self.coaction.apply(&self.algebra.mult().column_dense(a * d + b));
                let rhs = tensor_mul(h.algebra(), &self.algebra, &cols[a], &cols[b]);
                mult.record(lhs == rhs, || {
                    Witness::new(
                        self.algebra.names(&[a, b]),
                        format_vector(&lhs, &ha_names),
                        format_vector(&rhs, &ha_names),
                    )
                });
            }
        }
        let one = self.algebra.unit();
        let l1 = self.coaction.apply(one);
        let expected = kron(&h.one(), one);
        mult.record(l1 == expected, || {
            Witness::new(vec!["1".into()], format_vector(&l1, &ha_names), format_vector(&expected, &ha_names))
        });
        children.extend([co.finish(), cu.finish(), mult.finish()]);
        Report::group("comodule algebra axioms", children)
    }
}
