//! Bilinear and linear forms on a Hopf algebra: cocycle and laziness
//! predicates, twisted products, `D¹`, the lazy cocycle group and the
//! antipode-like maps `φ_σ`, `S₁`, `S₂`.

mod coinner;
mod enumerate;
mod identities;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use coinner::{ad_gamma, coinner_from_character, is_character, is_hopf_automorphism, HopfMap};
pub use enumerate::{
    counterexample_search, enumerate_lazy_cocycles, enumerate_lazy_gammas, enumerate_normalized_gammas,
    is_lazy_coboundary, CounterexampleOutcome, LazyGroup,
};
pub use identities::{identity_suite, phi_sigma, s1_map, s2_map};

use crate::error::{Error, Result};
use crate::hopf::{
    convolution_inverse, scaled, Algebra, BicomoduleAlgebra, ConvElement, HopfAlgebra,
};
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

fn same_hopf<F: Field>(a: &Arc<HopfAlgebra<F>>, b: &Arc<HopfAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone)]
struct Cache<F> {
    normalized: OnceLock<Report>,
    left: OnceLock<Report>,
    right: OnceLock<Report>,
    lazy: OnceLock<Report>,
    inverse: OnceLock<Option<Box<Cocycle2<F>>>>,
}

impl<F> Default for Cache<F> {
    fn default() -> Self {
        Cache {
            normalized: OnceLock::new(),
            left: OnceLock::new(),
            right: OnceLock::new(),
            lazy: OnceLock::new(),
            inverse: OnceLock::new(),
        }
    }
}

/// A bilinear form `σ: H ⊗ H → k`, stored as the matrix `σ(e_i, e_j)`.
///
/// Immutable; predicate results are cached on first use.
#[derive(Clone)]
pub struct Cocycle2<F> {
    hopf: Arc<HopfAlgebra<F>>,
    matrix: Matrix<F>,
    cache: Cache<F>,
}

impl<F: Field> PartialEq for Cocycle2<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && same_hopf(&self.hopf, &other.hopf)
    }
}

impl<F: Field> Eq for Cocycle2<F> {}

impl<F: Field> fmt::Debug for Cocycle2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle2 on {} {{ {self} }}", self.hopf.name())
    }
}

impl<F: Field> Cocycle2<F> {
    pub fn new(hopf: Arc<HopfAlgebra<F>>, matrix: Matrix<F>) -> Result<Self> {
        hopf.require_verified()?;
        let n = hopf.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "bilinear form is {}×{}, expected {n}×{n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Cocycle2 {
            hopf,
            matrix,
            cache: Cache::default(),
        })
    }

    pub fn from_fn(hopf: Arc<HopfAlgebra<F>>, f: impl FnMut(usize, usize) -> F) -> Result<Self> {
        let n = hopf.dim();
        Cocycle2::new(hopf, Matrix::from_fn(n, n, f))
    }

    /// `ε ⊗ ε`.
    pub fn trivial(hopf: Arc<HopfAlgebra<F>>) -> Result<Self> {
        let eps = hopf.coalgebra().counit().to_vec();
        Cocycle2::from_fn(hopf, |i, j| eps[i].clone() * eps[j].clone())
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn value(&self, i: usize, j: usize) -> &F {
        &self.matrix[(i, j)]
    }

    /// `σ(x, y)` for coordinate vectors.
    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let s = &self.matrix[(i, j)];
                if !s.is_zero() {
                    acc += a.clone() * b.clone() * s.clone();
                }
            }
        }
        acc
    }

    /// `σ(x, e_j)` for a coordinate vector `x`.
    fn eval_left(&self, x: &[F], j: usize) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            acc += a.clone() * self.matrix[(i, j)].clone();
        }
        acc
    }

    /// `σ(e_i, y)` for a coordinate vector `y`.
    fn eval_right(&self, i: usize, y: &[F]) -> F {
        let mut acc = F::zero();
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            acc += self.matrix[(i, j)].clone() * b.clone();
        }
        acc
    }

    fn name_of(&self, idx: &[usize]) -> Vec<String> {
        self.hopf.names(idx)
    }

    /// `σ(1, h) = ε(h) = σ(h, 1)` on all basis elements.
    pub fn normalization_report(&self) -> &Report {
        self.cache.normalized.get_or_init(|| {
            let h = &self.hopf;
            let one = h.one();
            let mut check = Check::new("normalized");
            for i in 0..self.dim() {
                let l = self.eval_left(&one, i);
                let r = self.eval_right(i, &one);
                let e = h.counit(i);
                check.record(l == e && r == e, || {
                    Witness::new(self.name_of(&[i]), format!("σ(1,h) = {l}, σ(h,1) = {r}"), &e)
                });
            }
            check.finish()
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_report().passed()
    }

    /// `Σ σ(a₁, b₁) a₂b₂`, the product of the left twist.
    pub fn left_product(&self, a: usize, b: usize) -> Vec<F> {
        let h = &self.hopf;
        let mut out = vec![F::zero(); self.dim()];
        for (a1, a2, c) in h.coalgebra().coproduct(a) {
            for (b1, b2, d) in h.coalgebra().coproduct(b) {
                let s = c.clone() * d.clone() * self.matrix[(a1, b1)].clone();
                if s.is_zero() {
                    continue;
                }
                h.algebra().mult().accumulate_column(a2 * self.dim() + b2, &s, &mut out);
            }
        }
        out
    }

    /// `Σ a₁b₁ σ(a₂, b₂)`, the product of the right twist.
    pub fn right_product(&self, a: usize, b: usize) -> Vec<F> {
        let h = &self.hopf;
        let mut out = vec![F::zero(); self.dim()];
        for (a1, a2, c) in h.coalgebra().coproduct(a) {
            for (b1, b2, d) in h.coalgebra().coproduct(b) {
                let s = c.clone() * d.clone() * self.matrix[(a2, b2)].clone();
                if s.is_zero() {
                    continue;
                }
                h.algebra().mult().accumulate_column(a1 * self.dim() + b1, &s, &mut out);
            }
        }
        out
    }

    fn all_products(&self, right: bool) -> Vec<Vec<F>> {
        let n = self.dim();
        (0..n * n)
            .map(|ab| {
                if right {
                    self.right_product(ab / n, ab % n)
                } else {
                    self.left_product(ab / n, ab % n)
                }
            })
            .collect()
    }

    fn cocycle_report(&self, name: &str, products: &[Vec<F>]) -> Report {
        let n = self.dim();
        let mut check = Check::new(name);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.eval_left(&products[a * n + b], c);
                    let rhs = self.eval_right(a, &products[b * n + c]);
                    check.record(lhs == rhs, || Witness::new(self.name_of(&[a, b, c]), &lhs, &rhs));
                }
            }
        }
        check.finish()
    }

    /// `σ(a₁,b₁)σ(a₂b₂,c) = σ(b₁,c₁)σ(a,b₂c₂)` on all basis triples.
    pub fn left_cocycle_report(&self) -> &Report {
        self.cache.left.get_or_init(|| {
            self.cocycle_report("left cocycle σ(a1,b1)σ(a2b2,c) = σ(b1,c1)σ(a,b2c2)", &self.all_products(false))
        })
    }

    /// `σ(a₁b₁,c)σ(a₂,b₂) = σ(a,b₁c₁)σ(b₂,c₂)` on all basis triples.
    pub fn right_cocycle_report(&self) -> &Report {
        self.cache.right.get_or_init(|| {
            self.cocycle_report("right cocycle σ(a1b1,c)σ(a2,b2) = σ(a,b1c1)σ(b2,c2)", &self.all_products(true))
        })
    }

    pub fn is_left_cocycle(&self) -> bool {
        self.left_cocycle_report().passed()
    }

    pub fn is_right_cocycle(&self) -> bool {
        self.right_cocycle_report().passed()
    }

    /// `Σ σ(a₁,b₁)a₂b₂ = Σ a₁b₁σ(a₂,b₂)` on all basis pairs.
    pub fn lazy_report(&self) -> &Report {
        self.cache.lazy.get_or_init(|| {
            let n = self.dim();
            let mut check = Check::new("lazy σ(a1,b1)a2b2 = a1b1σ(a2,b2)");
            for a in 0..n {
                for b in 0..n {
                    let l = self.left_product(a, b);
                    let r = self.right_product(a, b);
                    check.record(l == r, || {
                        Witness::new(self.name_of(&[a, b]), self.hopf.format(&l), self.hopf.format(&r))
                    });
                }
            }
            check.finish()
        })
    }

    pub fn is_lazy(&self) -> bool {
        self.lazy_report().passed()
    }

    /// Normalization, both cocycle conditions, laziness and invertibility.
    pub fn flags_report(&self) -> Report {
        let invertible = self.is_invertible();
        Report::group(
            "cocycle flags",
            vec![
                self.normalization_report().clone(),
                self.left_cocycle_report().clone(),
                self.right_cocycle_report().clone(),
                self.lazy_report().clone(),
                Report::verdict("convolution invertible", invertible, || {
                    Witness::new(vec![], "no inverse", "inverse")
                }),
            ],
        )
    }

    /// The convolution inverse in `Hom(H ⊗ H, k)`.
    pub fn inverse(&self) -> Result<&Cocycle2<F>> {
        let inv = self.cache.inverse.get_or_init(|| {
            let n = self.dim();
            let coalgebra = self.hopf.coalgebra().tensor(self.hopf.coalgebra());
            let ground = Algebra::ground();
            let map = LinMap::from_fn(n * n, 1, |ij| vec![self.matrix[(ij / n, ij % n)].clone()]);
            let f = ConvElement::new(&coalgebra, &ground, map).expect("dimensions match");
            let g = convolution_inverse(&f).ok()?;
            let m = Matrix::from_fn(n, n, |i, j| g.map.entry(0, i * n + j));
            Some(Box::new(Cocycle2::new(self.hopf.clone(), m).expect("same Hopf algebra")))
        });
        inv.as_deref().ok_or(Error::NoInverse)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// `(σ*τ)(a,b) = Σ σ(a₁,b₁)τ(a₂,b₂)`.
    pub fn convolve(&self, other: &Cocycle2<F>) -> Result<Cocycle2<F>> {
        if !same_hopf(&self.hopf, &other.hopf) {
            return Err(Error::ConvolutionMismatch);
        }
        let h = &self.hopf;
        Cocycle2::from_fn(self.hopf.clone(), |a, b| {
            let mut acc = F::zero();
            for (a1, a2, c) in h.coalgebra().coproduct(a) {
                for (b1, b2, d) in h.coalgebra().coproduct(b) {
                    let s = &self.matrix[(a1, b1)];
                    let t = &other.matrix[(a2, b2)];
                    if !s.is_zero() && !t.is_zero() {
                        acc += c.clone() * d.clone() * s.clone() * t.clone();
                    }
                }
            }
            acc
        })
    }

    /// The twisted algebra in the given mode.
    ///
    /// Needs a normalized form satisfying the cocycle condition of the mode.
    /// Associativity of the result is
    /// re-checked, not assumed.
    pub fn twist(&self, mode: TwistMode) -> Result<TwistedAlgebra<F>> {
        if !self.is_normalized() {
            return Err(Error::Precondition("twisting needs a normalized form".into()));
        }
        let n = self.dim();
        let h = &self.hopf;
        let cols: Vec<Vec<F>> = match mode {
            TwistMode::Left => {
                if !self.is_left_cocycle() {
                    return Err(Error::Precondition("left twist needs a left 2-cocycle".into()));
                }
                self.all_products(false)
            }
            TwistMode::Right => {
                if !self.is_right_cocycle() {
                    return Err(Error::Precondition("right twist needs a right 2-cocycle".into()));
                }
                self.all_products(true)
            }
            TwistMode::Lazy => {
                if !(self.is_left_cocycle() && self.is_lazy()) {
                    return Err(Error::Precondition("H(σ) needs a lazy 2-cocycle".into()));
                }
                self.all_products(false)
            }
        };
        let algebra = Algebra::new(h.basis().to_vec(), LinMap::from_columns(n, cols), h.one())?;
        let mut children = algebra.check_algebra();
        let bicomodule = if mode == TwistMode::Lazy {
            let b = BicomoduleAlgebra::new(
                h.clone(),
                algebra.clone(),
                h.coalgebra().comult().clone(),
                h.coalgebra().comult().clone(),
            )?;
            children = vec![b.check()];
            Some(b)
        } else {
            None
        };
        let report = Report::group(format!("{mode} twist"), children);
        if !report.passed() {
            return Err(Error::axioms(format!("{mode} twist"), report));
        }
        Ok(TwistedAlgebra {
            mode,
            algebra,
            bicomodule,
            report,
        })
    }
}

impl<F: Field> fmt::Display for Cocycle2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let mut first = true;
        for i in 0..n {
            for j in 0..n {
                let v = &self.matrix[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "σ({},{}) = {v}", self.hopf.basis()[i], self.hopf.basis()[j])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistMode {
    /// `ₛH`: `a·b = Σ σ(a₁,b₁)a₂b₂`.
    Left,
    /// `H_σ`: `a·b = Σ a₁b₁σ(a₂,b₂)`.
    Right,
    /// `H(σ)`: for lazy `σ` the left and right twists coincide.
    Lazy,
}

impl fmt::Display for TwistMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistMode::Left => "left",
            TwistMode::Right => "right",
            TwistMode::Lazy => "lazy",
        })
    }
}

/// The algebra `(H, ·_σ)`; in the lazy mode also an `H`-bicomodule algebra
/// via `Δ` on both sides.
#[derive(Clone, Debug)]
pub struct TwistedAlgebra<F> {
    pub mode: TwistMode,
    pub algebra: Algebra<F>,
    pub bicomodule: Option<BicomoduleAlgebra<F>>,
    pub report: Report,
}

/// A linear form `γ: H → k`.
#[derive(Clone)]
pub struct Cocycle1<F> {
    hopf: Arc<HopfAlgebra<F>>,
    values: Vec<F>,
    inverse: OnceLock<Option<Vec<F>>>,
}

impl<F: Field> PartialEq for Cocycle1<F> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_hopf(&self.hopf, &other.hopf)
    }
}

impl<F: Field> Eq for Cocycle1<F> {}

impl<F: Field> fmt::Debug for Cocycle1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle1 on {} {{ {self} }}", self.hopf.name())
    }
}

impl<F: Field> Cocycle1<F> {
    pub fn new(hopf: Arc<HopfAlgebra<F>>, values: Vec<F>) -> Result<Self> {
        hopf.require_verified()?;
        if values.len() != hopf.dim() {
            return Err(Error::DimensionMismatch(format!(
                "linear form has {} values, expected {}",
                values.len(),
                hopf.dim()
            )));
        }
        Ok(Cocycle1 {
            hopf,
            values,
            inverse: OnceLock::new(),
        })
    }

    pub fn epsilon(hopf: Arc<HopfAlgebra<F>>) -> Result<Self> {
        let eps = hopf.coalgebra().counit().to_vec();
        Cocycle1::new(hopf, eps)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &F {
        &self.values[i]
    }

    pub fn eval(&self, x: &[F]) -> F {
        crate::hopf::dot(&self.values, x)
    }

    /// `γ(1) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.eval(&self.hopf.one()).is_one()
    }

    /// `Σ γ(h₁)h₂ = Σ h₁γ(h₂)` on all basis elements.
    pub fn lazy_report(&self) -> Report {
        let h = &self.hopf;
        let n = h.dim();
        let mut check = Check::new("lazy γ(h1)h2 = h1γ(h2)");
        for i in 0..n {
            let mut l = vec![F::zero(); n];
            let mut r = vec![F::zero(); n];
            for (a, b, c) in h.coalgebra().coproduct(i) {
                l[b] += c.clone() * self.values[a].clone();
                r[a] += c.clone() * self.values[b].clone();
            }
            check.record(l == r, || Witness::new(h.names(&[i]), h.format(&l), h.format(&r)));
        }
        check.finish()
    }

    pub fn is_lazy(&self) -> bool {
        self.lazy_report().passed()
    }

    pub fn inverse(&self) -> Result<Cocycle1<F>> {
        let inv = self.inverse.get_or_init(|| {
            let ground = Algebra::ground();
            let map = LinMap::from_fn(self.hopf.dim(), 1, |i| vec![self.values[i].clone()]);
            let f = ConvElement::new(self.hopf.coalgebra(), &ground, map).expect("dimensions match");
            let g = convolution_inverse(&f).ok()?;
            Some((0..self.hopf.dim()).map(|i| g.map.entry(0, i)).collect())
        });
        let values = inv.clone().ok_or(Error::NoInverse)?;
        Cocycle1::new(self.hopf.clone(), values)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// `(γ*δ)(h) = Σ γ(h₁)δ(h₂)`.
    pub fn convolve(&self, other: &Cocycle1<F>) -> Result<Cocycle1<F>> {
        if !same_hopf(&self.hopf, &other.hopf) {
            return Err(Error::ConvolutionMismatch);
        }
        let h = &self.hopf;
        let values = (0..h.dim())
            .map(|i| {
                let mut acc = F::zero();
                for (a, b, c) in h.coalgebra().coproduct(i) {
                    acc += c.clone() * self.values[a].clone() * other.values[b].clone();
                }
                acc
            })
            .collect();
        Cocycle1::new(self.hopf.clone(), values)
    }

    /// `D¹(γ)(h,h') = Σ γ(h₁)γ(h'₁)γ⁻¹(h₂h'₂)`, a normalized invertible left
    /// 2-cocycle.
    pub fn d1(&self) -> Result<Cocycle2<F>> {
        if !self.is_normalized() {
            return Err(Error::Precondition("D¹ needs a normalized linear form".into()));
        }
        let inv = self.inverse()?;
        let h = &self.hopf;
        Cocycle2::from_fn(self.hopf.clone(), |a, b| {
            let mut acc = F::zero();
            for (a1, a2, c) in h.coalgebra().coproduct(a) {
                for (b1, b2, d) in h.coalgebra().coproduct(b) {
                    let g = self.values[a1].clone() * self.values[b1].clone();
                    if g.is_zero() {
                        continue;
                    }
                    let mut gi = F::zero();
                    for (k, v) in h.product(a2, b2) {
                        gi += v.clone() * inv.values[*k].clone();
                    }
                    acc += c.clone() * d.clone() * g * gi;
                }
            }
            acc
        })
    }
}

impl<F: Field> fmt::Display for Cocycle1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .zip(self.hopf.basis())
            .map(|(v, b)| format!("γ({b}) = {v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// `σ'(h,h') = Σ γ(h₁)γ(h'₁)σ(h₂,h'₂)γ⁻¹(h₃h'₃)` on all basis pairs.
pub fn is_cohomologous_via<F: Field>(sigma: &Cocycle2<F>, other: &Cocycle2<F>, gamma: &Cocycle1<F>) -> Result<bool> {
    if !same_hopf(sigma.hopf(), other.hopf()) || !same_hopf(sigma.hopf(), gamma.hopf()) {
        return Err(Error::ConvolutionMismatch);
    }
    let inv = gamma.inverse()?;
    let h = sigma.hopf();
    let n = h.dim();
    for a in 0..n {
        let la = h.legs(a, 3);
        for b in 0..n {
            let lb = h.legs(b, 3);
            let mut acc = F::zero();
            for (ta, c) in &la {
                for (tb, d) in &lb {
                    let s = gamma.values[ta[0]].clone() * gamma.values[tb[0]].clone() * sigma.value(ta[1], tb[1]).clone();
                    if s.is_zero() {
                        continue;
                    }
                    let mut gi = F::zero();
                    for (k, v) in h.product(ta[2], tb[2]) {
                        gi += v.clone() * inv.values[*k].clone();
                    }
                    acc += s * gi * c.clone() * d.clone();
                }
            }
            if &acc != other.value(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ε(h)1` as a vector.
pub(crate) fn eps_one<F: Field>(h: &HopfAlgebra<F>, i: usize) -> Vec<F> {
    scaled(&h.counit(i), &h.one())
}

#[cfg(test)]
mod tests;
