use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::{flip_permutation, LinMap};
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

/// A finite-dimensional unital algebra given by structure constants.
///
/// `mult` is the map `A ⊗ A → A`, with `e_i ⊗ e_j` at flat index `i·n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    basis: Vec<String>,
    mult: LinMap<F>,
    unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    pub fn new(basis: Vec<String>, mult: LinMap<F>, unit: Vec<F>) -> Result<Self> {
        let n = basis.len();
        if mult.source() != n * n || mult.target() != n {
            return Err(Error::DimensionMismatch(format!(
                "multiplication is {}→{}, expected {}→{}",
                mult.source(),
                mult.target(),
                n * n,
                n
            )));
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {n}", unit.len())));
        }
        Ok(Algebra { basis, mult, unit })
    }

    /// Builds the algebra from the products of basis elements.
    pub fn from_fn(basis: Vec<String>, unit: Vec<F>, mut product: impl FnMut(usize, usize) -> Vec<F>) -> Self {
        let n = basis.len();
        let mult = LinMap::from_fn(n * n, n, |ij| product(ij / n, ij % n));
        Algebra::new(basis, mult, unit).expect("consistent dimensions")
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Algebra::from_fn(vec!["1".into()], vec![F::one()], |_, _| vec![F::one()])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &LinMap<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// `e_i e_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        self.mult.column(i * self.dim() + j)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                self.mult.accumulate_column(i * n + j, &(a.clone() * b.clone()), &mut out);
            }
        }
        out
    }

    /// Product in `A ⊗ A` of two flattened tensors.
    pub fn mul_tensor2(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n * n];
        for (s, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let (s1, s2) = (s / n, s % n);
            for (t, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let (t1, t2) = (t / n, t % n);
                let c = a.clone() * b.clone();
                for (p, u) in self.product(s1, t1) {
                    for (q, v) in self.product(s2, t2) {
                        out[p * n + q] += c.clone() * u.clone() * v.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let perm = flip_permutation(n, n);
        let ident: Vec<usize> = (0..n).collect();
        Algebra {
            basis: self.basis.clone(),
            mult: self.mult.relabel(&perm, &ident),
            unit: self.unit.clone(),
        }
    }

    /// `A ⊗ B` with componentwise multiplication, row-major basis.
    pub fn tensor(&self, other: &Algebra<F>) -> Algebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let basis = tensor_names(&self.basis, &other.basis);
        let unit = kron(&self.unit, &other.unit);
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        let src = (i * m + j) * (n * m) + (k * m + l);
                        for (p, u) in self.product(i, k) {
                            for (q, v) in other.product(j, l) {
                                entries.push((src, p * m + q, u.clone() * v.clone()));
                            }
                        }
                    }
                }
            }
        }
        let mult = LinMap::from_triplets(n * m * n * m, n * m, entries);
        Algebra::new(basis, mult, unit).expect("consistent dimensions")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn format(&self, v: &[F]) -> String {
        format_vector(v, &self.basis)
    }

    /// Associativity and unit laws on all basis triples.
    pub fn check_algebra(&self) -> Vec<Report> {
        let n = self.dim();
        let mut assoc = Check::new("associativity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult.column_dense(i * n + j);
                for k in 0..n {
                    let jk = self.mult.column_dense(j * n + k);
                    let lhs = self.mul(&ij, &self.basis_vector(k));
                    let rhs = self.mul(&self.basis_vector(i), &jk);
                    assoc.record(lhs == rhs, || {
                        Witness::new(self.names(&[i, j, k]), self.format(&lhs), self.format(&rhs))
                    });
                }
            }
        }
        let mut unit = Check::new("unit");
        for i in 0..n {
            let e = self.basis_vector(i);
            let left = self.mul(&self.unit, &e);
            let right = self.mul(&e, &self.unit);
            unit.record(left == e && right == e, || {
                Witness::new(self.names(&[i]), self.format(&left), self.format(&right))
            });
        }
        vec![assoc.finish(), unit.finish()]
    }

    pub fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.basis[i].clone()).collect()
    }
}

pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Kronecker product of coordinate vectors.
pub fn kron<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a.clone() * b.clone());
        }
    }
    out
}

pub fn tensor_names(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

pub fn add_scaled<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c.clone() * b.clone();
        }
    }
}

pub fn scaled<F: Field>(c: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn dot<F: Field>(x: &[F], y: &[F]) -> F {
    let mut acc = F::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += a.clone() * b.clone();
        }
    }
    acc
}
