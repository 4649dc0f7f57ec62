use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

use super::algebra::unit_vector;
use super::Algebra;

/// A left module over a finite-dimensional algebra.
///
/// `action` maps `A ⊗ M → M`, with `e_a ⊗ m_i` at flat index `a·d + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData<F> {
    algebra: Algebra<F>,
    basis: Vec<String>,
    action: LinMap<F>,
}

impl<F: Field> ModuleData<F> {
    pub fn new(algebra: Algebra<F>, basis: Vec<String>, action: LinMap<F>) -> Result<Self> {
        let (n, d) = (algebra.dim(), basis.len());
        if action.source() != n * d || action.target() != d {
            return Err(Error::DimensionMismatch(format!(
                "action is {}→{}, expected {}→{}",
                action.source(),
                action.target(),
                n * d,
                d
            )));
        }
        Ok(ModuleData { algebra, basis, action })
    }

    /// Builds the action from `e_a · m_i`.
    pub fn from_fn(algebra: Algebra<F>, basis: Vec<String>, mut act: impl FnMut(usize, usize) -> Vec<F>) -> Self {
        let d = basis.len();
        let action = LinMap::from_fn(algebra.dim() * d, d, |s| act(s / d, s % d));
        ModuleData::new(algebra, basis, action).expect("consistent dimensions")
    }

    pub fn regular(algebra: &Algebra<F>) -> Self {
        let basis = algebra.basis().to_vec();
        let action = algebra.mult().clone();
        ModuleData::new(algebra.clone(), basis, action).expect("consistent dimensions")
    }

    /// The one-dimensional module through a character `χ: A → k`.
    pub fn through_character(algebra: &Algebra<F>, chi: &[F]) -> Self {
        ModuleData::from_fn(algebra.clone(), vec!["1".into()], |a, _| vec![chi[a].clone()])
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn action(&self) -> &LinMap<F> {
        &self.action
    }

    /// `e_a · m_i` as a sparse vector.
    pub fn act_basis(&self, a: usize, i: usize) -> &[(usize, F)] {
        self.action.column(a * self.dim() + i)
    }

    pub fn act(&self, x: &[F], m: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (i, mi) in m.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                self.action.accumulate_column(a * d + i, &(xa.clone() * mi.clone()), &mut out);
            }
        }
        out
    }

    /// Matrix of `x·−` on M.
    pub fn action_matrix(&self, x: &[F]) -> Matrix<F> {
        let d = self.dim();
        let cols: Vec<Vec<F>> = (0..d).map(|j| self.act(x, &unit_vector(d, j))).collect();
        Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
    }

    pub fn with_action(&self, action: LinMap<F>) -> Result<Self> {
        ModuleData::new(self.algebra.clone(), self.basis.clone(), action)
    }

    /// `(ab)·m = a·(b·m)` on all basis triples and `1·m = m`.
    pub fn check_module(&self) -> Report {
        let (n, d) = (self.algebra.dim(), self.dim());
        let fmt = |v: &[F]| format_vector(v, &self.basis);
        let mut assoc = Check::new("module associativity");
        for a in 0..n {
            for b in 0..n {
                let ab = self.algebra.mult().column_dense(a * n + b);
                for i in 0..d {
                    let m = unit_vector(d, i);
                    let lhs = self.act(&ab, &m);
                    let bm = self.act(&unit_vector(n, b), &m);
                    let rhs = self.act(&unit_vector(n, a), &bm);
                    assoc.record(lhs == rhs, || {
                        Witness::new(
                            vec![
                                self.algebra.basis()[a].clone(),
                                self.algebra.basis()[b].clone(),
                                self.basis[i].clone(),
                            ],
                            fmt(&lhs),
                            fmt(&rhs),
                        )
                    });
                }
            }
        }
        let mut unit = Check::new("module unit");
        for i in 0..d {
            let m = unit_vector(d, i);
            let lhs = self.act(self.algebra.unit(), &m);
            unit.record(lhs == m, || Witness::new(vec![self.basis[i].clone()], fmt(&lhs), fmt(&m)));
        }
        Report::group("module axioms", vec![assoc.finish(), unit.finish()])
    }
}
