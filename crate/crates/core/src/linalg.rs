//! Dense matrices and exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// `self += c * rhs`
    pub fn add_scaled(&mut self, c: &F, rhs: &Self) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += c.clone() * b.clone();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    /// `Some(c)` when the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<F> {
        if self.rows != self.cols {
            return None;
        }
        let c = if self.rows == 0 { F::one() } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected = if i == j { c.clone() } else { F::zero() };
                if self[(i, j)] != expected {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.clone()).pivots.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let reduced = row_reduce(aug);
        if reduced.pivots.len() < n || reduced.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| reduced.matrix[(i, n + j)].clone()))
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

struct Reduced<F> {
    matrix: Matrix<F>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form with first-nonzero pivoting.
fn row_reduce<F: Field>(mut m: Matrix<F>) -> Reduced<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m[(r, c)].inverse().expect("pivot is nonzero");
        for j in c..m.cols {
            let v = m[(r, j)].clone();
            m[(r, j)] = v * inv.clone();
        }
        for i in 0..m.rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..m.cols {
                let pv = m[(r, j)].clone();
                if !pv.is_zero() {
                    m[(i, j)] -= factor.clone() * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { matrix: m, pivots }
}

/// Outcome of [`solve_linear_system`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution<F> {
    Inconsistent,
    /// `particular + span(kernel)`; the solution is unique when `kernel` is empty.
    Affine { particular: Vec<F>, kernel: Vec<Vec<F>> },
}

impl<F: Field> LinearSolution<F> {
    pub fn is_consistent(&self) -> bool {
        matches!(self, LinearSolution::Affine { .. })
    }

    pub fn unique(&self) -> Option<&[F]> {
        match self {
            LinearSolution::Affine { particular, kernel } if kernel.is_empty() => Some(particular),
            _ => None,
        }
    }

    pub fn particular(&self) -> Option<&[F]> {
        match self {
            LinearSolution::Affine { particular, .. } => Some(particular),
            LinearSolution::Inconsistent => None,
        }
    }

    pub fn kernel_dim(&self) -> usize {
        match self {
            LinearSolution::Affine { kernel, .. } => kernel.len(),
            LinearSolution::Inconsistent => 0,
        }
    }

    /// The point `particular + Σ params[i] * kernel[i]`.
    pub fn point(&self, params: &[F]) -> Option<Vec<F>> {
        let LinearSolution::Affine { particular, kernel } = self else {
            return None;
        };
        assert_eq!(params.len(), kernel.len());
        let mut x = particular.clone();
        for (t, k) in params.iter().zip(kernel) {
            if t.is_zero() {
                continue;
            }
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += t.clone() * ki.clone();
            }
        }
        Some(x)
    }
}

/// Solves `a · x = b` exactly.
///
/// Under-determined systems return the particular solution with all free
/// variables set to zero, and a kernel basis whose vectors are scaled so that
/// their first nonzero entry is one.
pub fn solve_linear_system<F: Field>(a: &Matrix<F>, b: &[F]) -> LinearSolution<F> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let Reduced { matrix, pivots } = row_reduce(aug);
    if pivots.last() == Some(&n) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![F::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = matrix[(r, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -matrix[(r, f)].clone();
            }
            let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("kernel vector is nonzero");
            let inv = lead.inverse().unwrap();
            v.into_iter().map(|x| x * inv.clone()).collect()
        })
        .collect();
    LinearSolution::Affine { particular, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Fp, Rational};

    type F5 = Fp<5>;

    fn f5(v: &[i64]) -> Vec<F5> {
        v.iter().map(|&x| F5::new(x)).collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let b = f5(&[1, 2, 3]);
        let sol = solve_linear_system(&Matrix::identity(3), &b);
        assert_eq!(sol.unique().unwrap(), b.as_slice());
    }

    #[test]
    fn zero_matrix_inconsistent() {
        let sol = solve_linear_system(&Matrix::<F5>::zeros(2, 2), &f5(&[1, 0]));
        assert_eq!(sol, LinearSolution::Inconsistent);
    }

    #[test]
    fn one_equation_two_unknowns() {
        let a = Matrix::from_rows(vec![f5(&[1, 1])]);
        let sol = solve_linear_system(&a, &f5(&[1]));
        assert_eq!(
            sol,
            LinearSolution::Affine {
                particular: f5(&[1, 0]),
                kernel: vec![f5(&[1, -1])],
            }
        );
    }

    #[test]
    fn rational_inverse() {
        let q = |s: &str| Rational::parse_scalar(s).unwrap();
        let a = Matrix::from_rows(vec![vec![q("1"), q("2")], vec![q("3"), q("4")]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Matrix::identity(2));
        assert!(Matrix::from_rows(vec![vec![q("1"), q("2")], vec![q("2"), q("4")]])
            .inverse()
            .is_none());
    }
}
