//! Cocycles on a Hopf algebra `B` in the category of Yetter-Drinfeld
//! modules over `H`, and their extension to `B×H`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cocycle::{Cocycle1, Cocycle2, LazyGroup};
use crate::error::{Error, Result};
use crate::hopf::{add_scaled, unit_vector, Algebra};
use crate::linalg::{solve_linear_system, Matrix};
use crate::linmap::LinMap;
use crate::report::{Check, Report, Witness};
use crate::scalar::Field;

use super::{smash_algebra, AdmissiblePair, Biproduct};

/// Terms `(x, y, u, v, c)` of the braided coproduct
/// `Δ(b⊗b') = (b₁⊗b₂^(−1)·b'₁)⊗(b₂^(0)⊗b'₂)`.
fn braided<F: Field>(pair: &AdmissiblePair<F>, b: usize, c: usize) -> Vec<(usize, usize, usize, usize, F)> {
    let co = pair.coalgebra();
    let mut out = Vec::new();
    for (b1, b2, w) in co.coproduct(b) {
        for (hm, b0, w2) in pair.coact(b2) {
            for (c1, c2, w3) in co.coproduct(c) {
                for (y, w4) in pair.act(hm, c1) {
                    out.push((b1, *y, b0, c2, w.clone() * w2.clone() * w3.clone() * w4.clone()));
                }
            }
        }
    }
    out
}

fn names<F: Field>(pair: &AdmissiblePair<F>, idx: &[usize]) -> Vec<String> {
    pair.algebra().names(idx)
}

/// A bilinear form `σ: B⊗B → k`.
#[derive(Clone)]
pub struct YdCocycle2<F> {
    pair: Arc<AdmissiblePair<F>>,
    matrix: Matrix<F>,
    inverse: OnceLock<Option<Box<YdCocycle2<F>>>>,
}

impl<F: Field> fmt::Debug for YdCocycle2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YdCocycle2").field("matrix", &self.matrix).finish()
    }
}

impl<F: Field> PartialEq for YdCocycle2<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix.as_slice() == other.matrix.as_slice()
    }
}

impl<F: Field> fmt::Display for YdCocycle2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.dim();
        let mut parts = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let v = &self.matrix[(i, j)];
                if !v.is_zero() {
                    parts.push(format!("σ({},{}) = {v}", self.pair.basis()[i], self.pair.basis()[j]));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

impl<F: Field> YdCocycle2<F> {
    pub fn new(pair: Arc<AdmissiblePair<F>>, matrix: Matrix<F>) -> Result<Self> {
        let m = pair.dim();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::DimensionMismatch(format!("form on B needs a {m}×{m} table")));
        }
        Ok(YdCocycle2 {
            pair,
            matrix,
            inverse: OnceLock::new(),
        })
    }

    pub fn from_fn(pair: Arc<AdmissiblePair<F>>, f: impl FnMut(usize, usize) -> F) -> Result<Self> {
        let m = pair.dim();
        YdCocycle2::new(pair, Matrix::from_fn(m, m, f))
    }

    /// `ε⊗ε`.
    pub fn trivial(pair: Arc<AdmissiblePair<F>>) -> Result<Self> {
        let eps = pair.coalgebra().counit().to_vec();
        YdCocycle2::from_fn(pair, |i, j| eps[i].clone() * eps[j].clone())
    }

    pub fn pair(&self) -> &Arc<AdmissiblePair<F>> {
        &self.pair
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.pair.dim()
    }

    pub fn value(&self, i: usize, j: usize) -> &F {
        &self.matrix[(i, j)]
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                acc += a.clone() * b.clone() * self.matrix[(i, j)].clone();
            }
        }
        acc
    }

    pub fn normalization_report(&self) -> Report {
        let one = self.pair.algebra().unit().to_vec();
        let m = self.dim();
        let mut check = Check::new("σ(1,b) = ε(b) = σ(b,1)");
        for b in 0..m {
            let e = unit_vector(m, b);
            let l = self.eval(&one, &e);
            let r = self.eval(&e, &one);
            let eps = self.pair.eps(b);
            check.record(l == eps && r == eps, || {
                Witness::new(names(&self.pair, &[b]), format!("{l}, {r}"), &eps)
            });
        }
        check.finish()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_report().passed()
    }

    /// `σ(h₁·b⊗h₂·b') = ε(h)σ(b⊗b')` and `σ(b^(0)⊗b'^(0))b^(−1)b'^(−1) = σ(b⊗b')1`.
    pub fn morphism_report(&self) -> Report {
        let pair = &self.pair;
        let h = pair.hopf();
        let (n, m) = (h.dim(), self.dim());
        let mut linear = Check::new("σ(h1·b⊗h2·b') = ε(h)σ(b⊗b')");
        let mut colinear = Check::new("σ(b^(0)⊗b'^(0))b^(-1)b'^(-1) = σ(b⊗b')1");
        for b in 0..m {
            for c in 0..m {
                for x in 0..n {
                    let mut lhs = F::zero();
                    for (x1, x2, u) in h.coalgebra().coproduct(x) {
                        let l = pair.act_vec(&unit_vector(n, x1), &unit_vector(m, b));
                        let r = pair.act_vec(&unit_vector(n, x2), &unit_vector(m, c));
                        lhs += u.clone() * self.eval(&l, &r);
                    }
                    let rhs = h.counit(x) * self.value(b, c).clone();
                    linear.record(lhs == rhs, || {
                        Witness::new(vec![h.basis()[x].clone(), pair.basis()[b].clone(), pair.basis()[c].clone()], &lhs, &rhs)
                    });
                }
                let mut lhs = vec![F::zero(); n];
                for (y, b0, u) in pair.coact(b) {
                    for (z, c0, v) in pair.coact(c) {
                        let s = self.value(b0, c0).clone() * u.clone() * v.clone();
                        for (t, p) in h.product(y, z) {
                            lhs[*t] += s.clone() * p.clone();
                        }
                    }
                }
                let rhs: Vec<F> = h.one().into_iter().map(|u| u * self.value(b, c).clone()).collect();
                colinear.record(lhs == rhs, || Witness::new(names(pair, &[b, c]), h.format(&lhs), h.format(&rhs)));
            }
        }
        Report::group("σ is a morphism of Yetter-Drinfeld modules", vec![linear.finish(), colinear.finish()])
    }

    pub fn is_morphism(&self) -> bool {
        self.morphism_report().passed()
    }

    /// `σ(b₁⊗b₂^(−1)·b'₁)b₂^(0)b'₂ = σ(b₂^(0)⊗b'₂)b₁(b₂^(−1)·b'₁)`.
    pub fn lazy_report(&self) -> Report {
        let pair = &self.pair;
        let alg = pair.algebra();
        let m = self.dim();
        let mut check = Check::new("σ(b1⊗b2^(-1)·b'1)b2^(0)b'2 = σ(b2^(0)⊗b'2)b1(b2^(-1)·b'1)");
        for b in 0..m {
            for c in 0..m {
                let mut lhs = vec![F::zero(); m];
                let mut rhs = vec![F::zero(); m];
                for (x, y, u, v, w) in braided(pair, b, c) {
                    let l = self.value(x, y).clone() * w.clone();
                    if !l.is_zero() {
                        add_scaled(&mut lhs, &l, &alg.mul(&unit_vector(m, u), &unit_vector(m, v)));
                    }
                    let r = self.value(u, v).clone() * w;
                    if !r.is_zero() {
                        add_scaled(&mut rhs, &r, &alg.mul(&unit_vector(m, x), &unit_vector(m, y)));
                    }
                }
                check.record(lhs == rhs, || Witness::new(names(pair, &[b, c]), alg.format(&lhs), alg.format(&rhs)));
            }
        }
        check.finish()
    }

    pub fn is_lazy(&self) -> bool {
        self.lazy_report().passed()
    }

    /// `σ(a₁⊗a₂^(−1)·b₁)σ(a₂^(0)b₂⊗c) = σ(b₁⊗b₂^(−1)·c₁)σ(a⊗b₂^(0)c₂)`.
    pub fn left_cocycle_report(&self) -> Report {
        let pair = &self.pair;
        let alg = pair.algebra();
        let m = self.dim();
        let mut check = Check::new("σ(a1⊗a2^(-1)·b1)σ(a2^(0)b2⊗c) = σ(b1⊗b2^(-1)·c1)σ(a⊗b2^(0)c2)");
        let pairs: Vec<Vec<_>> = (0..m * m).map(|t| braided(pair, t / m, t % m)).collect();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let mut lhs = F::zero();
                    for (x, y, u, v, w) in &pairs[a * m + b] {
                        let s = self.value(*x, *y).clone();
                        if s.is_zero() {
                            continue;
                        }
                        let uv = alg.mult().column_dense(u * m + v);
                        lhs += w.clone() * s * self.eval(&uv, &unit_vector(m, c));
                    }
                    let mut rhs = F::zero();
                    for (x, y, u, v, w) in &pairs[b * m + c] {
                        let s = self.value(*x, *y).clone();
                        if s.is_zero() {
                            continue;
                        }
                        let uv = alg.mult().column_dense(u * m + v);
                        rhs += w.clone() * s * self.eval(&unit_vector(m, a), &uv);
                    }
                    check.record(lhs == rhs, || Witness::new(names(pair, &[a, b, c]), &lhs, &rhs));
                }
            }
        }
        check.finish()
    }

    pub fn is_left_cocycle(&self) -> bool {
        self.left_cocycle_report().passed()
    }

    pub fn flags_report(&self) -> Report {
        Report::group(
            "Yetter-Drinfeld cocycle flags",
            vec![
                self.normalization_report(),
                self.morphism_report(),
                self.left_cocycle_report(),
                self.lazy_report(),
            ],
        )
    }

    /// `(σ*τ)(b⊗b') = σ(b₁⊗b₂^(−1)·b'₁)τ(b₂^(0)⊗b'₂)`.
    pub fn convolve(&self, other: &YdCocycle2<F>) -> Result<YdCocycle2<F>> {
        if !Arc::ptr_eq(&self.pair, &other.pair) && self.pair.dim() != other.pair.dim() {
            return Err(Error::ConvolutionMismatch);
        }
        let m = self.dim();
        YdCocycle2::from_fn(self.pair.clone(), |b, c| {
            let mut acc = F::zero();
            for (x, y, u, v, w) in braided(&self.pair, b, c) {
                acc += w * self.value(x, y).clone() * other.value(u, v).clone();
            }
            acc
        })
        .inspect(|s| {
            debug_assert_eq!(s.dim(), m);
        })
    }

    /// The two-sided convolution inverse for `*`, solved as a linear
    /// system in the `m²` unknown values.
    pub fn inverse(&self) -> Result<&YdCocycle2<F>> {
        let inv = self.inverse.get_or_init(|| {
            let m = self.dim();
            let mm = m * m;
            let eps = self.pair.coalgebra().counit().to_vec();
            // (σ*τ)(b,c) = Σ w σ(x,y) τ(u,v): row (b,c), column (u,v)
            let mut a = Matrix::zeros(mm, mm);
            let mut rhs = vec![F::zero(); mm];
            for b in 0..m {
                for c in 0..m {
                    for (x, y, u, v, w) in braided(&self.pair, b, c) {
                        a[(b * m + c, u * m + v)] += w * self.value(x, y).clone();
                    }
                    rhs[b * m + c] = eps[b].clone() * eps[c].clone();
                }
            }
            let sol = solve_linear_system(&a, &rhs);
            let values = sol.unique()?.to_vec();
            let tau = YdCocycle2::from_fn(self.pair.clone(), |i, j| values[i * m + j].clone()).ok()?;
            let unit = YdCocycle2::trivial(self.pair.clone()).ok()?;
            (tau.convolve(self).ok()? == unit).then(|| Box::new(tau))
        });
        inv.as_deref().ok_or(Error::NoInverse)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// `ₛB` with `b·b' = σ(b₁⊗b₂^(−1)·b'₁)b₂^(0)b'₂`; associativity is
    /// asserted.
    pub fn crossed_product(&self) -> Result<Algebra<F>> {
        if !self.is_normalized() {
            return Err(Error::Precondition("crossed product needs a normalized form".into()));
        }
        let pair = &self.pair;
        let alg = pair.algebra();
        let m = self.dim();
        let product = Algebra::from_fn(alg.basis().to_vec(), alg.unit().to_vec(), |b, c| {
            let mut out = vec![F::zero(); m];
            for (x, y, u, v, w) in braided(pair, b, c) {
                let s = w * self.value(x, y).clone();
                if !s.is_zero() {
                    add_scaled(&mut out, &s, &alg.mul(&unit_vector(m, u), &unit_vector(m, v)));
                }
            }
            out
        });
        let report = Report::group("crossed product ₛB", product.check_algebra());
        if !report.passed() {
            return Err(Error::axioms("ₛB", report));
        }
        Ok(product)
    }
}

/// A linear form `γ: B → k`.
#[derive(Clone)]
pub struct YdCocycle1<F> {
    pair: Arc<AdmissiblePair<F>>,
    values: Vec<F>,
}

impl<F: Field> fmt::Debug for YdCocycle1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YdCocycle1").field("values", &self.values).finish()
    }
}

impl<F: Field> YdCocycle1<F> {
    pub fn new(pair: Arc<AdmissiblePair<F>>, values: Vec<F>) -> Result<Self> {
        if values.len() != pair.dim() {
            return Err(Error::DimensionMismatch(format!("form on B needs {} values", pair.dim())));
        }
        Ok(YdCocycle1 { pair, values })
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

    pub fn is_normalized(&self) -> bool {
        self.eval(self.pair.algebra().unit()).is_one()
    }

    /// `γ(h·b) = ε(h)γ(b)` and `γ(b^(0))b^(−1) = γ(b)1`.
    pub fn morphism_report(&self) -> Report {
        let pair = &self.pair;
        let h = pair.hopf();
        let (n, m) = (h.dim(), pair.dim());
        let mut linear = Check::new("γ(h·b) = ε(h)γ(b)");
        let mut colinear = Check::new("γ(b^(0))b^(-1) = γ(b)1");
        for b in 0..m {
            for x in 0..n {
                let l = self.eval(&pair.act_vec(&unit_vector(n, x), &unit_vector(m, b)));
                let r = h.counit(x) * self.values[b].clone();
                linear.record(l == r, || Witness::new(vec![h.basis()[x].clone(), pair.basis()[b].clone()], &l, &r));
            }
            let mut lhs = vec![F::zero(); n];
            for (y, b0, u) in pair.coact(b) {
                lhs[y] += u.clone() * self.values[b0].clone();
            }
            let rhs: Vec<F> = h.one().into_iter().map(|u| u * self.values[b].clone()).collect();
            colinear.record(lhs == rhs, || Witness::new(names(pair, &[b]), h.format(&lhs), h.format(&rhs)));
        }
        Report::group("γ is a morphism of Yetter-Drinfeld modules", vec![linear.finish(), colinear.finish()])
    }

    pub fn is_morphism(&self) -> bool {
        self.morphism_report().passed()
    }

    /// `γ(b₁)b₂ = b₁γ(b₂)`.
    pub fn lazy_report(&self) -> Report {
        let pair = &self.pair;
        let m = pair.dim();
        let mut check = Check::new("γ(b1)b2 = b1γ(b2)");
        for b in 0..m {
            let mut l = vec![F::zero(); m];
            let mut r = vec![F::zero(); m];
            for (b1, b2, c) in pair.coalgebra().coproduct(b) {
                l[b2] += c.clone() * self.values[b1].clone();
                r[b1] += c.clone() * self.values[b2].clone();
            }
            check.record(l == r, || {
                Witness::new(names(pair, &[b]), pair.algebra().format(&l), pair.algebra().format(&r))
            });
        }
        check.finish()
    }

    pub fn is_lazy(&self) -> bool {
        self.lazy_report().passed()
    }

    pub fn inverse(&self) -> Result<YdCocycle1<F>> {
        let ground = Algebra::ground();
        let map = LinMap::from_fn(self.pair.dim(), 1, |i| vec![self.values[i].clone()]);
        let f = crate::hopf::ConvElement::new(self.pair.coalgebra(), &ground, map)?;
        let inv = crate::hopf::convolution_inverse(&f)?;
        YdCocycle1::new(self.pair.clone(), (0..self.pair.dim()).map(|i| inv.map.entry(0, i)).collect())
    }

    /// `D¹(γ)(b⊗b') = γ(b₁)γ(b₂^(−1)·b'₁)γ⁻¹(b₂^(0)b'₂)`, checked against the
    /// reduced form `γ(b₁)γ(b'₁)γ⁻¹(b₂b'₂)`.
    pub fn d1(&self) -> Result<(YdCocycle2<F>, Report)> {
        if !self.is_normalized() {
            return Err(Error::Precondition("D¹ needs a normalized linear form".into()));
        }
        let inv = self.inverse()?;
        let pair = &self.pair;
        let alg = pair.algebra();
        let co = pair.coalgebra();
        let m = pair.dim();
        let full = YdCocycle2::from_fn(pair.clone(), |b, c| {
            let mut acc = F::zero();
            for (x, y, u, v, w) in braided(pair, b, c) {
                acc += w * self.values[x].clone() * self.values[y].clone() * inv.eval(&alg.mult().column_dense(u * m + v));
            }
            acc
        })?;
        let reduced = YdCocycle2::from_fn(pair.clone(), |b, c| {
            let mut acc = F::zero();
            for (b1, b2, u) in co.coproduct(b) {
                for (c1, c2, v) in co.coproduct(c) {
                    acc += u.clone()
                        * v.clone()
                        * self.values[b1].clone()
                        * self.values[c1].clone()
                        * inv.eval(&alg.mult().column_dense(b2 * m + c2));
                }
            }
            acc
        })?;
        let report = Report::verdict("D¹(γ) = γ(b1)γ(b'1)γ⁻¹(b2b'2)", full == reduced, || {
            Witness::new(vec![], &full, &reduced)
        });
        Ok((full, report))
    }
}

/// `τ̄(b×h, b'×h') = τ(b⊗h·b')ε(h')`, without any gate.
fn bar<F: Field>(bp: &Biproduct<F>, tau: &YdCocycle2<F>) -> Result<Cocycle2<F>> {
    let pair = &bp.pair;
    let h = pair.hopf();
    let (n, m) = (h.dim(), pair.dim());
    Cocycle2::from_fn(bp.hopf.clone(), |s, t| {
        let (b, x) = (s / n, s % n);
        let (c, y) = (t / n, t % n);
        let hc = pair.act_vec(&unit_vector(n, x), &unit_vector(m, c));
        tau.eval(&unit_vector(m, b), &hc) * h.counit(y)
    })
}

/// `σ̄` on `B×H` and the checks of the extension theorem for it.
#[derive(Clone)]
pub struct YdExtension<F> {
    pub sigma: Cocycle2<F>,
    pub report: Report,
}

/// `σ̄(b×h, b'×h') = σ(b⊗h·b')ε(h')` for a normalized left 2-cocycle `σ` in
/// Yetter-Drinfeld modules.
///
/// The report covers: `σ̄` is a normalized left 2-cocycle with
/// `ₛB#H = _σ̄(B×H)`, re-derived through `ε_B⊗ε_H`; the inverse formula when
/// `σ` is invertible; laziness when `σ` is lazy.
pub fn extend_yd_cocycle<F: Field>(bp: &Biproduct<F>, sigma: &YdCocycle2<F>) -> Result<YdExtension<F>> {
    if !sigma.is_normalized() {
        return Err(Error::Precondition("σ is not normalized".into()));
    }
    if !sigma.is_morphism() {
        return Err(Error::Precondition("σ is not a morphism of Yetter-Drinfeld modules".into()));
    }
    if !sigma.is_left_cocycle() {
        return Err(Error::Precondition("σ is not a left 2-cocycle in Yetter-Drinfeld modules".into()));
    }
    let ext = bar(bp, sigma)?;
    let d = &bp.hopf;
    let nn = d.dim();
    let crossed = sigma.crossed_product()?;
    let smash = smash_algebra(&bp.pair, &crossed);
    let mut products = Check::new("ₛB#H = _σ̄(B×H) as algebras");
    let mut rederived = Check::new("σ̄(x,y) = (ε_B⊗ε_H)(x·y in ₛB#H)");
    for x in 0..nn {
        for y in 0..nn {
            let lhs = smash.mult().column_dense(x * nn + y);
            let rhs = ext.left_product(x, y);
            products.record(lhs == rhs, || Witness::new(d.names(&[x, y]), d.format(&lhs), d.format(&rhs)));
            let e = d.eps(&lhs);
            let v = ext.value(x, y).clone();
            rederived.record(e == v, || Witness::new(d.names(&[x, y]), &e, &v));
        }
    }
    let part_i = Report::group(
        "σ̄ is a normalized left 2-cocycle with ₛB#H = _σ̄(B×H)",
        vec![
            ext.normalization_report().clone(),
            ext.left_cocycle_report().clone(),
            products.finish(),
            rederived.finish(),
        ],
    );
    let part_ii = match sigma.inverse() {
        Ok(inv) => {
            let formula = bar(bp, inv)?;
            let ok = ext.inverse().map(|i| *i == formula).unwrap_or(false);
            Report::verdict("σ̄⁻¹(b×h, b'×h') = σ⁻¹(b⊗h·b')ε(h')", ok, || {
                Witness::new(vec![], &formula, "convolution inverse of σ̄")
            })
        }
        Err(_) => Report::skip("σ̄⁻¹(b×h, b'×h') = σ⁻¹(b⊗h·b')ε(h')", "σ is not invertible"),
    };
    let part_iii = if sigma.is_lazy() {
        let mut r = ext.lazy_report().clone();
        r.name = format!("σ lazy ⇒ σ̄ lazy: {}", r.name);
        r
    } else {
        Report::skip("σ lazy ⇒ σ̄ lazy", "σ is not lazy")
    };
    let report = Report::group("extension to B×H", vec![part_i, part_ii, part_iii]);
    Ok(YdExtension { sigma: ext, report })
}

/// `(σ*τ)‾ = σ̄*τ̄`.
pub fn extension_homomorphism<F: Field>(bp: &Biproduct<F>, sigma: &YdCocycle2<F>, tau: &YdCocycle2<F>) -> Result<Report> {
    let lhs = bar(bp, &sigma.convolve(tau)?)?;
    let rhs = bar(bp, sigma)?.convolve(&bar(bp, tau)?)?;
    let d = &bp.hopf;
    let mut check = Check::new("(σ*τ)‾ = σ̄*τ̄");
    for x in 0..d.dim() {
        for y in 0..d.dim() {
            let (l, r) = (lhs.value(x, y), rhs.value(x, y));
            check.record(l == r, || Witness::new(d.names(&[x, y]), l, r));
        }
    }
    Ok(check.finish())
}

/// `γ̄(b×h) = γ(b)ε(h)`: normalized, invertible with inverse `γ⁻¹(b)ε(h)`,
/// `D¹(γ)‾ = D¹(γ̄)`, laziness preserved, and so coboundaries go to
/// coboundaries.
pub fn extend_yd_gamma<F: Field>(bp: &Biproduct<F>, gamma: &YdCocycle1<F>) -> Result<(Cocycle1<F>, Report)> {
    if !gamma.is_normalized() {
        return Err(Error::Precondition("γ is not normalized".into()));
    }
    if !gamma.is_morphism() {
        return Err(Error::Precondition("γ is not a morphism of Yetter-Drinfeld modules".into()));
    }
    let inv = gamma.inverse()?;
    let pair = &bp.pair;
    let h = pair.hopf();
    let n = h.dim();
    let lift = |g: &YdCocycle1<F>| -> Result<Cocycle1<F>> {
        let values = (0..bp.dim()).map(|i| g.value(i / n).clone() * h.counit(i % n)).collect();
        Cocycle1::new(bp.hopf.clone(), values)
    };
    let ext = lift(gamma)?;
    let ext_inv = lift(&inv)?;
    let normalized = Report::verdict("γ̄ normalized", ext.is_normalized(), || Witness::new(vec![], ext.eval(&bp.hopf.one()), 1));
    let inverse = Report::verdict(
        "γ̄⁻¹(b×h) = γ⁻¹(b)ε(h)",
        ext.inverse().map(|i| i.values() == ext_inv.values()).unwrap_or(false),
        || Witness::new(vec![], &ext_inv, "convolution inverse of γ̄"),
    );
    let (d1, d1_reduced) = gamma.d1()?;
    let d1_bar = bar(bp, &d1)?;
    let bar_d1 = ext.d1()?;
    let d1_compat = Report::verdict("D¹(γ)‾ = D¹(γ̄)", d1_bar == bar_d1, || Witness::new(vec![], &d1_bar, &bar_d1));
    let lazy = if gamma.is_lazy() {
        Report::verdict("γ lazy ⇒ γ̄ lazy", ext.is_lazy(), || Witness::new(vec![], "γ̄ not lazy", "lazy"))
    } else {
        Report::skip("γ lazy ⇒ γ̄ lazy", "γ is not lazy")
    };
    let cobound = if gamma.is_lazy() {
        Report::verdict("lazy coboundary ↦ lazy coboundary", d1_bar == bar_d1 && ext.is_lazy(), || {
            Witness::new(vec![], &d1_bar, "D¹ of a lazy form on B×H")
        })
    } else {
        Report::skip("lazy coboundary ↦ lazy coboundary", "γ is not lazy")
    };
    let report = Report::group(
        "extension of γ to B×H",
        vec![normalized, inverse, d1_reduced, d1_compat, lazy, cobound],
    );
    Ok((ext, report))
}

/// Images of a family of Yetter-Drinfeld cocycles in an enumerated lazy
/// group, after transport along `f: B×H → K`.
#[derive(Clone, Debug)]
pub struct ThetaImage {
    /// Position of the image of each family member in the group.
    pub images: Vec<usize>,
    pub homomorphism: bool,
    pub injective: bool,
    pub report: Report,
}

/// Sends each `θ` to `θ̄`, transports it along the Hopf isomorphism `f`, and
/// looks it up in `group`. The family must be closed under `*`.
pub fn theta_family_map<F: Field>(
    bp: &Biproduct<F>,
    f: &LinMap<F>,
    family: &[YdCocycle2<F>],
    group: &LazyGroup<F>,
) -> Result<ThetaImage> {
    let f_inv = f
        .inverse()
        .ok_or_else(|| Error::Precondition("transport map is not invertible".into()))?;
    let target = group
        .elements
        .first()
        .map(|s| s.hopf().clone())
        .ok_or_else(|| Error::Precondition("empty lazy group".into()))?;
    let k = target.dim();
    let cols: Vec<Vec<F>> = (0..k).map(|i| f_inv.column_dense(i)).collect();
    let mut images = Vec::with_capacity(family.len());
    for theta in family {
        let ext = extend_yd_cocycle(bp, theta)?;
        let moved = Cocycle2::from_fn(target.clone(), |i, j| ext.sigma.eval(&cols[i], &cols[j]))?;
        let pos = group
            .elements
            .iter()
            .position(|s| s.matrix().as_slice() == moved.matrix().as_slice())
            .ok_or_else(|| Error::CocycleMismatch(format!("image of {theta} is not in the enumerated group")))?;
        images.push(pos);
    }
    let mut hom = Check::new("image(θ*θ') = image(θ)image(θ')");
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            let ab = a.convolve(b)?;
            let Some(p) = family.iter().position(|t| *t == ab) else {
                return Err(Error::Precondition("family is not closed under convolution".into()));
            };
            let lhs = images[p];
            let rhs = group.table[images[i]][images[j]];
            hom.record(lhs == rhs, || Witness::new(vec![a.to_string(), b.to_string()], lhs, rhs));
        }
    }
    let mut seen = images.clone();
    seen.sort_unstable();
    seen.dedup();
    let injective = seen.len() == images.len();
    let hom = hom.finish();
    let homomorphism = hom.passed();
    let inj = Report::verdict("injective", injective, || Witness::new(vec![], format!("{images:?}"), "distinct images"));
    Ok(ThetaImage {
        images,
        homomorphism,
        injective,
        report: Report::group("θ ↦ θ̄", vec![hom, inj]),
    })
}

#[cfg(test)]
pub(super) fn bar_for_tests<F: Field>(bp: &Biproduct<F>, tau: &YdCocycle2<F>) -> Cocycle2<F> {
    bar(bp, tau).unwrap()
}

impl<F: Field> std::fmt::Debug for YdExtension<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("YdExtension").field("sigma", &self.sigma).field("passed", &self.report.passed()).finish()
    }
}
