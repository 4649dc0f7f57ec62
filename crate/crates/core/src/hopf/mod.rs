//! Finite-dimensional Hopf algebras as structure-constant tensors.

mod algebra;
mod coalgebra;
mod comodule;
mod convolution;
mod module;

use serde_json::Value;

pub use algebra::{add_scaled, dot, kron, scaled, tensor_names, unit_vector, Algebra};
pub use coalgebra::{power_names, Coalgebra, Legs};
pub use comodule::{tensor_mul, BicomoduleAlgebra, ComoduleAlgebra};
pub use convolution::{convolution_inverse, convolve, ConvElement};
pub use module::ModuleData;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

/// A finite-dimensional Hopf algebra with bijective antipode.
///
/// Constructions only accept algebras that passed [`HopfAlgebra::check_hopf`];
/// the `verified` flag is private and set only there.
#[derive(Clone, Debug)]
pub struct HopfAlgebra<F> {
    name: String,
    algebra: Algebra<F>,
    coalgebra: Coalgebra<F>,
    antipode: LinMap<F>,
    antipode_inv: Option<LinMap<F>>,
    verified: bool,
    provenance: Option<Value>,
}

impl<F: Field> PartialEq for HopfAlgebra<F> {
    /// Structural equality of the tensors; names and provenance are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.algebra.mult() == other.algebra.mult()
            && self.algebra.unit() == other.algebra.unit()
            && self.coalgebra.comult() == other.coalgebra.comult()
            && self.coalgebra.counit() == other.coalgebra.counit()
            && self.antipode == other.antipode
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(name: impl Into<String>, algebra: Algebra<F>, coalgebra: Coalgebra<F>, antipode: LinMap<F>) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {n}, coalgebra {}",
                coalgebra.dim()
            )));
        }
        if antipode.source() != n || antipode.target() != n {
            return Err(Error::DimensionMismatch(format!(
                "antipode is {}→{}, expected {n}→{n}",
                antipode.source(),
                antipode.target()
            )));
        }
        Ok(HopfAlgebra {
            name: name.into(),
            algebra,
            coalgebra,
            antipode,
            antipode_inv: None,
            verified: false,
            provenance: None,
        })
    }

    /// Runs [`check_hopf`](Self::check_hopf) and fails unless every axiom holds.
    pub fn verified(mut self) -> Result<Self> {
        let report = self.check_hopf();
        if self.verified {
            Ok(self)
        } else {
            Err(Error::axioms(self.name.clone(), report))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn provenance(&self) -> Option<&Value> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, provenance: Value) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn require_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(Error::Unverified(self.name.clone()))
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra.basis()
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &LinMap<F> {
        &self.antipode
    }

    /// `S⁻¹`; available once the axiom suite has run.
    pub fn antipode_inverse(&self) -> &LinMap<F> {
        self.antipode_inv
            .as_ref()
            .expect("antipode inverse is computed by check_hopf")
    }

    pub fn s(&self, i: usize) -> &[(usize, F)] {
        self.antipode.column(i)
    }

    pub fn s_inv(&self, i: usize) -> &[(usize, F)] {
        self.antipode_inverse().column(i)
    }

    pub fn s_vec(&self, i: usize) -> Vec<F> {
        self.antipode.column_dense(i)
    }

    pub fn s_inv_vec(&self, i: usize) -> Vec<F> {
        self.antipode_inverse().column_dense(i)
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        self.algebra.product(i, j)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.algebra.mul(x, y)
    }

    pub fn one(&self) -> Vec<F> {
        self.algebra.unit().to_vec()
    }

    pub fn counit(&self, i: usize) -> F {
        self.coalgebra.counit()[i].clone()
    }

    pub fn eps(&self, x: &[F]) -> F {
        self.coalgebra.eps(x)
    }

    pub fn legs(&self, i: usize, k: usize) -> Legs<F> {
        self.coalgebra.legs(i, k)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn format(&self, v: &[F]) -> String {
        self.algebra.format(v)
    }

    pub fn names(&self, idx: &[usize]) -> Vec<String> {
        self.algebra.names(idx)
    }

    /// Index of the basis element with the given name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis().iter().position(|b| b == name)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.co_opposite().comult() == self.coalgebra.comult()
    }

    /// The full axiom suite. Stores `S⁻¹` and sets the verified flag when
    /// everything passes.
    pub fn check_hopf(&mut self) -> Report {
        let n = self.dim();
        let mut children = self.algebra.check_algebra();
        children.extend(self.coalgebra.check_coalgebra());

        let mut delta_mult = Check::new("comultiplication multiplicative");
        let mut eps_mult = Check::new("counit multiplicative");
        for i in 0..n {
            let di = self.coalgebra.comult().column_dense(i);
            for j in 0..n {
                let ij = self.algebra.mult().column_dense(i * n + j);
                let lhs = self.coalgebra.comul(&ij);
                let rhs = self.algebra.mul_tensor2(&di, &self.coalgebra.comult().column_dense(j));
                delta_mult.record(lhs == rhs, || {
                    Witness::new(
                        self.names(&[i, j]),
                        self.coalgebra.format_tensor(&lhs, 2),
                        self.coalgebra.format_tensor(&rhs, 2),
                    )
                });
                let e = self.eps(&ij);
                let f = self.counit(i) * self.counit(j);
                eps_mult.record(e == f, || Witness::new(self.names(&[i, j]), &e, &f));
            }
        }
        let one = self.one();
        let d1 = self.coalgebra.comul(&one);
        let one_one = kron(&one, &one);
        delta_mult.record(d1 == one_one, || {
            Witness::new(
                vec!["1".into()],
                self.coalgebra.format_tensor(&d1, 2),
                self.coalgebra.format_tensor(&one_one, 2),
            )
        });
        let e1 = self.eps(&one);
        eps_mult.record(e1.is_one(), || Witness::new(vec!["1".into()], &e1, 1));
        children.push(delta_mult.finish());
        children.push(eps_mult.finish());

        let mut left = Check::new("antipode law S(h1)h2 = eps(h)1");
        let mut right = Check::new("antipode law h1S(h2) = eps(h)1");
        for i in 0..n {
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (a, b, c) in self.coalgebra.coproduct(i) {
                let sa = self.antipode.column_dense(a);
                let sb = self.antipode.column_dense(b);
                add_scaled(&mut l, c, &self.mul(&sa, &self.basis_vector(b)));
                add_scaled(&mut r, c, &self.mul(&self.basis_vector(a), &sb));
            }
            let expected = scaled(&self.counit(i), &one);
            left.record(l == expected, || {
                Witness::new(self.names(&[i]), self.format(&l), self.format(&expected))
            });
            right.record(r == expected, || {
                Witness::new(self.names(&[i]), self.format(&r), self.format(&expected))
            });
        }
        children.push(left.finish());
        children.push(right.finish());

        self.antipode_inv = self.antipode.inverse();
        let bijective = self.antipode_inv.is_some();
        children.push(Report::verdict("antipode bijective", bijective, || {
            Witness::new(vec![], format!("rank {}", self.antipode.to_matrix().rank()), format!("rank {n}"))
        }));

        let report = Report::group(format!("hopf axioms of {}", self.name), children);
        self.verified = report.passed();
        report
    }

    /// Dual Hopf algebra on the dual basis `p_i`: the product is the
    /// transposed coproduct, the coproduct the transposed product, and the
    /// antipode the transposed antipode.
    pub fn dual_hopf(&self) -> Result<Self> {
        self.require_verified()?;
        let basis: Vec<String> = self.basis().iter().map(|b| format!("p_{b}")).collect();
        let algebra = Algebra::new(
            basis.clone(),
            self.coalgebra.comult().transpose(),
            self.coalgebra.counit().to_vec(),
        )?;
        let coalgebra = Coalgebra::new(basis, self.algebra.mult().transpose(), self.algebra.unit().to_vec())?;
        HopfAlgebra::new(format!("{}*", self.name), algebra, coalgebra, self.antipode.transpose())?
            .with_provenance(serde_json::json!({"construction": "dual", "of": self.name}))
            .verified()
    }

    /// `H^op`, `H^cop` or `H^{op,cop}`; the first two carry `S⁻¹` as antipode.
    pub fn op_cop_variant(&self, which: Variant) -> Result<Self> {
        self.require_verified()?;
        let (algebra, coalgebra, antipode, suffix) = match which {
            Variant::Op => (
                self.algebra.opposite(),
                self.coalgebra.clone(),
                self.antipode_inverse().clone(),
                "op",
            ),
            Variant::Cop => (
                self.algebra.clone(),
                self.coalgebra.co_opposite(),
                self.antipode_inverse().clone(),
                "cop",
            ),
            Variant::OpCop => (
                self.algebra.opposite(),
                self.coalgebra.co_opposite(),
                self.antipode.clone(),
                "op-cop",
            ),
        };
        HopfAlgebra::new(format!("{}^{suffix}", self.name), algebra, coalgebra, antipode)?
            .with_provenance(serde_json::json!({"construction": suffix, "of": self.name}))
            .verified()
    }

    pub fn s_matrix(&self) -> Matrix<F> {
        self.antipode.to_matrix()
    }

    /// Basis renaming, used when transporting structures along a bijection.
    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch("basis name count".into()));
        }
        self.algebra = Algebra::new(names.clone(), self.algebra.mult().clone(), self.algebra.unit().to_vec())?;
        self.coalgebra = Coalgebra::new(names, self.coalgebra.comult().clone(), self.coalgebra.counit().to_vec())?;
        Ok(self)
    }

    /// Replaces the antipode (dropping the verified flag); used by mutation tests.
    pub fn with_antipode(mut self, antipode: LinMap<F>) -> Self {
        self.antipode = antipode;
        self.antipode_inv = None;
        self.verified = false;
        self
    }

    /// Replaces the product tensor (dropping the verified flag).
    pub fn with_mult(mut self, mult: LinMap<F>) -> Result<Self> {
        self.algebra = Algebra::new(self.basis().to_vec(), mult, self.algebra.unit().to_vec())?;
        self.antipode_inv = None;
        self.verified = false;
        Ok(self)
    }
}

/// `C ⊗ D` as a coalgebra, basis index `i·dim(D) + j`.
pub fn tensor_coalgebra<F: Field>(c: &Coalgebra<F>, d: &Coalgebra<F>) -> Coalgebra<F> {
    c.tensor(d)
}

#[cfg(test)]
mod tests;
