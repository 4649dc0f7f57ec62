use crate::error::{Error, Result};
use crate::linmap::{flip_permutation, LinMap};
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

use super::algebra::{kron, tensor_names, unit_vector};

/// A finite-dimensional counital coalgebra given by structure constants.
///
/// `comult` is the map `C → C ⊗ C`; the coefficient of `e_j ⊗ e_k` in
/// `Δ(e_i)` sits at target index `j·n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<F> {
    basis: Vec<String>,
    comult: LinMap<F>,
    counit: Vec<F>,
}

/// A Sweedler expansion: index tuples `(h_1, …, h_k)` with coefficients.
pub type Legs<F> = Vec<(Vec<usize>, F)>;

impl<F: Field> Coalgebra<F> {
    pub fn new(basis: Vec<String>, comult: LinMap<F>, counit: Vec<F>) -> Result<Self> {
        let n = basis.len();
        if comult.source() != n || comult.target() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {}→{}, expected {}→{}",
                comult.source(),
                comult.target(),
                n,
                n * n
            )));
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch(format!("counit has length {}, expected {n}", counit.len())));
        }
        Ok(Coalgebra { basis, comult, counit })
    }

    pub fn from_fn(basis: Vec<String>, counit: Vec<F>, mut coproduct: impl FnMut(usize) -> Vec<F>) -> Self {
        let n = basis.len();
        let comult = LinMap::from_fn(n, n * n, &mut coproduct);
        Coalgebra::new(basis, comult, counit).expect("consistent dimensions")
    }

    pub fn ground() -> Self {
        Coalgebra::from_fn(vec!["1".into()], vec![F::one()], |_| vec![F::one()])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn comult(&self) -> &LinMap<F> {
        &self.comult
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    /// `Δ(e_i)` as `(j, k, c)` triples for `c · e_j ⊗ e_k`.
    pub fn coproduct(&self, i: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n = self.dim();
        self.comult.column(i).iter().map(move |(t, c)| (t / n, t % n, c))
    }

    /// Iterated coproduct `Δ^{(k-1)}(e_i)` as `k`-tuples, expanding the last
    /// leg repeatedly.
    pub fn legs(&self, i: usize, k: usize) -> Legs<F> {
        assert!(k >= 1);
        let mut out: Legs<F> = vec![(vec![i], F::one())];
        for _ in 1..k {
            let mut next = Vec::new();
            for (tuple, c) in out {
                let last = *tuple.last().unwrap();
                for (a, b, d) in self.coproduct(last) {
                    let mut t = tuple[..tuple.len() - 1].to_vec();
                    t.push(a);
                    t.push(b);
                    next.push((t, c.clone() * d.clone()));
                }
            }
            out = next;
        }
        out
    }

    /// Iterated coproduct of a vector.
    pub fn legs_vec(&self, x: &[F], k: usize) -> Legs<F> {
        let mut out = Vec::new();
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, d) in self.legs(i, k) {
                out.push((t, c.clone() * d));
            }
        }
        out
    }

    pub fn comul(&self, x: &[F]) -> Vec<F> {
        self.comult.apply(x)
    }

    pub fn eps(&self, x: &[F]) -> F {
        super::algebra::dot(&self.counit, x)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn co_opposite(&self) -> Self {
        let n = self.dim();
        let perm = flip_permutation(n, n);
        let ident: Vec<usize> = (0..n).collect();
        Coalgebra {
            basis: self.basis.clone(),
            comult: self.comult.relabel(&ident, &perm),
            counit: self.counit.clone(),
        }
    }

    /// `C ⊗ D` with `Δ(c⊗d) = (c₁⊗d₁)⊗(c₂⊗d₂)` and `ε(c⊗d) = ε(c)ε(d)`;
    /// `c_i ⊗ d_j` has index `i·dim(D) + j`.
    pub fn tensor(&self, other: &Coalgebra<F>) -> Coalgebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let nm = n * m;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..m {
                for (a, b, u) in self.coproduct(i) {
                    for (c, d, v) in other.coproduct(j) {
                        let t = (a * m + c) * nm + (b * m + d);
                        entries.push((i * m + j, t, u.clone() * v.clone()));
                    }
                }
            }
        }
        Coalgebra::new(
            tensor_names(&self.basis, &other.basis),
            LinMap::from_triplets(nm, nm * nm, entries),
            kron(&self.counit, &other.counit),
        )
        .expect("consistent dimensions")
    }

    pub fn format(&self, v: &[F]) -> String {
        format_vector(v, &self.basis)
    }

    pub fn format_tensor(&self, v: &[F], legs: usize) -> String {
        let names = power_names(&self.basis, legs);
        format_vector(v, &names)
    }

    /// Coassociativity and counit laws on all basis elements.
    pub fn check_coalgebra(&self) -> Vec<Report> {
        let n = self.dim();
        let mut coassoc = Check::new("coassociativity");
        let mut counit = Check::new("counit");
        for i in 0..n {
            let mut left = vec![F::zero(); n * n * n];
            let mut right = vec![F::zero(); n * n * n];
            for (a, b, c) in self.coproduct(i) {
                for (a1, a2, d) in self.coproduct(a) {
                    left[(a1 * n + a2) * n + b] += c.clone() * d.clone();
                }
                for (b1, b2, d) in self.coproduct(b) {
                    right[(a * n + b1) * n + b2] += c.clone() * d.clone();
                }
            }
            coassoc.record(left == right, || {
                Witness::new(vec![self.basis[i].clone()], self.format_tensor(&left, 3), self.format_tensor(&right, 3))
            });
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (a, b, c) in self.coproduct(i) {
                l[b] += self.counit[a].clone() * c.clone();
                r[a] += self.counit[b].clone() * c.clone();
            }
            let e = self.basis_vector(i);
            counit.record(l == e && r == e, || {
                Witness::new(vec![self.basis[i].clone()], self.format(&l), self.format(&r))
            });
        }
        vec![coassoc.finish(), counit.finish()]
    }
}

/// Basis names of the `k`-fold tensor power.
pub fn power_names(basis: &[String], k: usize) -> Vec<String> {
    let mut names = basis.to_vec();
    for _ in 1..k {
        names = tensor_names(&names, basis);
    }
    names
}
