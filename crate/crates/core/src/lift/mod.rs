//! Projective representations afforded by lazy 2-cocycles, the central
//! extension `A#_σH` over a finite group of lazy cocycles, and lifting.

use std::fmt;
use std::sync::Arc;

use crate::biproduct::hopf_map_report;
use crate::cocycle::{enumerate_lazy_cocycles, s1_map, Cocycle1, Cocycle2, LazyGroup, TwistMode};
use crate::error::{Error, Result};
use crate::hopf::{add_scaled, convolution_inverse, kron, unit_vector, Algebra, Coalgebra, ConvElement, HopfAlgebra};
use crate::linalg::{solve_linear_system, Matrix};
use crate::linmap::LinMap;
use crate::report::{format_vector, Check, Report, Witness};
use crate::scalar::Field;

/// Renders a square matrix row by row.
pub fn format_matrix<F: Field>(m: &Matrix<F>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// `Σ cᵢ Tᵢ` for a coefficient vector over the family.
fn combine<F: Field>(family: &[Matrix<F>], coeffs: &[F], d: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(d, d);
    for (c, t) in coeffs.iter().zip(family) {
        if !c.is_zero() {
            out.add_scaled(c, t);
        }
    }
    out
}

/// A map `T: H → End(V)` with `T(1) = id` and
/// `T(h)T(l) = Σ α(h₁,l₁)T(h₂l₂)`.
#[derive(Clone)]
pub struct ProjectiveRep<F> {
    hopf: Arc<HopfAlgebra<F>>,
    dim: usize,
    t: Vec<Matrix<F>>,
    alpha: Cocycle2<F>,
    pub report: Report,
}

impl<F: Field> ProjectiveRep<F> {
    /// `V = ₛH` with `T(h)` the matrix of `h ·_σ −`.
    pub fn regular_twisted(sigma: &Cocycle2<F>) -> Result<Self> {
        if !(sigma.is_normalized() && sigma.is_lazy()) {
            return Err(Error::Precondition("the regular twisted representation needs a normalized lazy σ".into()));
        }
        let twisted = sigma.twist(TwistMode::Left)?;
        let n = sigma.dim();
        let t = (0..n).map(|i| twisted.algebra.left_mult_matrix(&unit_vector(n, i))).collect();
        Self::new(sigma.hopf().clone(), t, sigma.clone())
    }

    /// Validates a supplied family against the supplied cocycle.
    pub fn new(hopf: Arc<HopfAlgebra<F>>, t: Vec<Matrix<F>>, alpha: Cocycle2<F>) -> Result<Self> {
        hopf.require_verified()?;
        let n = hopf.dim();
        if t.len() != n {
            return Err(Error::DimensionMismatch(format!("{} matrices for a basis of size {n}", t.len())));
        }
        let d = t.first().map_or(0, Matrix::rows);
        if t.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::DimensionMismatch(format!("every T(h) must be {d}×{d}")));
        }
        if *alpha.hopf() != hopf {
            return Err(Error::CocycleMismatch("α lives on a different Hopf algebra".into()));
        }
        if !(alpha.is_normalized() && alpha.is_left_cocycle() && alpha.is_invertible()) {
            return Err(Error::Precondition("α is not a normalized invertible left 2-cocycle".into()));
        }
        let rep = ProjectiveRep { hopf, dim: d, t, alpha, report: Report::skip("projective representation", "pending") };
        let axioms = Report::group("projective representation", vec![rep.unit_check(), rep.product_check()]);
        if !axioms.passed() {
            return Err(Error::axioms("projective representation", axioms));
        }
        let derived = rep.derived_cocycle()?;
        let unique = Report::verdict("α is determined by T", derived == rep.alpha, || {
            Witness::new(vec![], &derived, &rep.alpha)
        });
        let inverse = rep.inverse_check()?;
        let mut children = axioms.children;
        children.push(unique);
        children.push(inverse);
        let report = Report::group("projective representation", children);
        if !report.passed() {
            return Err(Error::axioms("projective representation", report));
        }
        Ok(ProjectiveRep { report, ..rep })
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra<F>> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.t
    }

    pub fn matrix(&self, i: usize) -> &Matrix<F> {
        &self.t[i]
    }

    pub fn alpha(&self) -> &Cocycle2<F> {
        &self.alpha
    }

    /// `T` extended linearly.
    pub fn eval(&self, x: &[F]) -> Matrix<F> {
        combine(&self.t, x, self.dim)
    }

    fn unit_check(&self) -> Report {
        let t1 = self.eval(&self.hopf.one());
        Report::verdict("T(1) = id", t1 == Matrix::identity(self.dim), || {
            Witness::new(vec!["1".into()], format_matrix(&t1), "id")
        })
    }

    fn twisted_product(&self, alpha: &Cocycle2<F>, a: usize, b: usize) -> Matrix<F> {
        combine(&self.t, &alpha.left_product(a, b), self.dim)
    }

    fn product_check(&self) -> Report {
        let n = self.hopf.dim();
        let mut check = Check::new("T(h)T(l) = α(h1,l1)T(h2l2)");
        for a in 0..n {
            for b in 0..n {
                let lhs = self.t[a].matmul(&self.t[b]);
                let rhs = self.twisted_product(&self.alpha, a, b);
                check.record(lhs == rhs, || {
                    Witness::new(self.hopf.names(&[a, b]), format_matrix(&lhs), format_matrix(&rhs))
                });
            }
        }
        check.finish()
    }

    /// Solves `T(h)T(l) = Σ α(h₁,l₁)T(h₂l₂)` for `α`, independently of the
    /// stored cocycle.
    pub fn derived_cocycle(&self) -> Result<Cocycle2<F>> {
        let h = &self.hopf;
        let n = h.dim();
        let dd = self.dim * self.dim;
        let mut a = Matrix::zeros(n * n * dd, n * n);
        let mut rhs = vec![F::zero(); n * n * dd];
        for x in 0..n {
            for y in 0..n {
                let row0 = (x * n + y) * dd;
                let prod = self.t[x].matmul(&self.t[y]);
                rhs[row0..row0 + dd].clone_from_slice(prod.as_slice());
                for (x1, x2, c) in h.coalgebra().coproduct(x) {
                    for (y1, y2, e) in h.coalgebra().coproduct(y) {
                        let m = self.eval(&h.algebra().mult().column_dense(x2 * n + y2));
                        let coef = c.clone() * e.clone();
                        for (k, v) in m.as_slice().iter().enumerate() {
                            a[(row0 + k, x1 * n + y1)] += coef.clone() * v.clone();
                        }
                    }
                }
            }
        }
        let solution = solve_linear_system(&a, &rhs);
        let values = solution
            .unique()
            .ok_or_else(|| Error::Precondition("T does not determine a unique cocycle".into()))?;
        Cocycle2::from_fn(h.clone(), |i, j| values[i * n + j].clone())
    }

    /// `T⁻¹ = T∘S₁`, checked as a two-sided convolution inverse. The formula
    /// is only claimed for lazy `α`.
    fn inverse_check(&self) -> Result<Report> {
        if !self.alpha.is_lazy() {
            return Ok(Report::skip("T⁻¹ = T∘S1", "α is not lazy"));
        }
        let inv = self.inverse_family()?;
        let h = &self.hopf;
        let mut check = Check::new("T⁻¹ = T∘S1");
        for i in 0..h.dim() {
            let mut left = Matrix::zeros(self.dim, self.dim);
            let mut right = Matrix::zeros(self.dim, self.dim);
            for (a, b, c) in h.coalgebra().coproduct(i) {
                left.add_scaled(c, &self.t[a].matmul(&inv[b]));
                right.add_scaled(c, &inv[a].matmul(&self.t[b]));
            }
            let expected = Matrix::identity(self.dim).scale(&h.counit(i));
            check.record(left == expected && right == expected, || {
                Witness::new(h.names(&[i]), format!("{} / {}", format_matrix(&left), format_matrix(&right)), format_matrix(&expected))
            });
        }
        Ok(check.finish())
    }

    /// `h ↦ T(S₁(h))`.
    pub fn inverse_family(&self) -> Result<Vec<Matrix<F>>> {
        let s1 = s1_map(&self.alpha)?;
        Ok((0..self.hopf.dim()).map(|i| self.eval(&s1.column_dense(i))).collect())
    }
}

impl<F: Field> fmt::Debug for ProjectiveRep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProjectiveRep").field("dim", &self.dim).field("alpha", &self.alpha.to_string()).finish()
    }
}

/// `δ(u)(h,l) = Σ u(h₁)u(l₁)u⁻¹(h₂l₂)`.
pub fn delta_u<F: Field>(u: &Cocycle1<F>) -> Result<Cocycle2<F>> {
    let h = u.hopf();
    let inv = u.inverse()?;
    let n = h.dim();
    Cocycle2::from_fn(h.clone(), |a, b| {
        let mut acc = F::zero();
        for (a1, a2, c) in h.coalgebra().coproduct(a) {
            for (b1, b2, e) in h.coalgebra().coproduct(b) {
                let prod = h.algebra().mult().column_dense(a2 * n + b2);
                acc += c.clone() * e.clone() * u.value(a1).clone() * u.value(b1).clone() * inv.eval(&prod);
            }
        }
        acc
    })
}

/// `W(h) = Σ u(h₁)T(h₂)`, a projective representation with cocycle `δ(u)*α`.
pub fn twist_by_u<F: Field>(rep: &ProjectiveRep<F>, u: &Cocycle1<F>) -> Result<ProjectiveRep<F>> {
    if !rep.alpha.is_lazy() {
        return Err(Error::Precondition("twisting by u needs a lazy α".into()));
    }
    if *u.hopf() != rep.hopf {
        return Err(Error::CocycleMismatch("u lives on a different Hopf algebra".into()));
    }
    if !u.is_normalized() {
        return Err(Error::Precondition("u is not normalized".into()));
    }
    let h = &rep.hopf;
    let w: Vec<Matrix<F>> = (0..h.dim())
        .map(|i| {
            let mut m = Matrix::zeros(rep.dim, rep.dim);
            for (a, b, c) in h.coalgebra().coproduct(i) {
                m.add_scaled(&(c.clone() * u.value(a).clone()), &rep.t[b]);
            }
            m
        })
        .collect();
    let alpha = delta_u(u)?.convolve(&rep.alpha)?;
    ProjectiveRep::new(h.clone(), w, alpha)
}

/// A finite group of lazy cocycles given by its elements; closure under
/// convolution is verified.
pub fn lazy_subgroup<F: Field>(hopf: &Arc<HopfAlgebra<F>>, elements: Vec<Cocycle2<F>>) -> Result<LazyGroup<F>> {
    hopf.require_verified()?;
    let mut member = Check::new("element is a normalized invertible lazy 2-cocycle");
    for e in &elements {
        if e.hopf() != hopf {
            return Err(Error::CocycleMismatch("element on a different Hopf algebra".into()));
        }
        let ok = e.is_normalized() && e.is_left_cocycle() && e.is_lazy() && e.is_invertible();
        member.record(ok, || Witness::new(vec![e.to_string()], "fails", "lazy 2-cocycle"));
    }
    let identity = elements
        .iter()
        .position(|e| *e == Cocycle2::trivial(hopf.clone()).expect("trivial cocycle"))
        .ok_or_else(|| Error::Precondition("ε⊗ε is not among the elements".into()))?;
    let mut closed = Check::new("closed under convolution");
    let mut table = Vec::with_capacity(elements.len());
    for a in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in &elements {
            let c = a.convolve(b)?;
            match elements.iter().position(|e| *e == c) {
                Some(k) => row.push(k),
                None => {
                    closed.record(false, || Witness::new(vec![a.to_string(), b.to_string()], &c, "an element"));
                    row.push(usize::MAX);
                }
            }
        }
        table.push(row);
    }
    let report = Report::group("lazy subgroup", vec![member.finish(), closed.finish()]);
    if !report.passed() {
        return Err(Error::axioms("lazy subgroup", report));
    }
    let candidates = elements.len() as u64;
    Ok(LazyGroup { elements, table, identity, subspace_dim: 0, candidates, report })
}

/// `B = A#_σH` for `A = (kG)*` on the Dirac basis `δ_α` and the universal
/// cocycle `σ(h,l) = Σ α(h,l)δ_α`.
#[derive(Clone)]
pub struct CentralExtension<F> {
    pub group: LazyGroup<F>,
    pub h: Arc<HopfAlgebra<F>>,
    pub a: Arc<HopfAlgebra<F>>,
    /// `σ(h,l)` at column `h*n + l`.
    pub sigma: LinMap<F>,
    pub sigma_inv: LinMap<F>,
    /// Basis `δ_α#h` at index `α*n + h`.
    pub b: Arc<HopfAlgebra<F>>,
    pub pi: LinMap<F>,
    pub inclusion: LinMap<F>,
    pub report: Report,
}

impl<F: Field> fmt::Debug for CentralExtension<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CentralExtension")
            .field("order", &self.group.order())
            .field("dim_b", &self.b.dim())
            .finish()
    }
}

/// `(kG)*` on the Dirac basis: pointwise product, `Δ(δ_γ) = Σ_{αβ=γ} δ_α⊗δ_β`.
pub fn dual_group_algebra<F: Field>(group: &LazyGroup<F>) -> Result<HopfAlgebra<F>> {
    let g = group.order();
    let basis: Vec<String> = (0..g).map(|k| format!("δ{k}")).collect();
    let algebra = Algebra::from_fn(basis.clone(), vec![F::one(); g], |a, b| {
        if a == b {
            unit_vector(g, a)
        } else {
            vec![F::zero(); g]
        }
    });
    let counit = (0..g).map(|k| if k == group.identity { F::one() } else { F::zero() }).collect();
    let coalgebra = Coalgebra::from_fn(basis, counit, |c| {
        let mut out = vec![F::zero(); g * g];
        for a in 0..g {
            for b in 0..g {
                if group.table[a][b] == c {
                    out[a * g + b] = F::one();
                }
            }
        }
        out
    });
    let antipode = LinMap::from_fn(g, g, |k| unit_vector(g, group.inverse_of(k)));
    HopfAlgebra::new("(kG)*", algebra, coalgebra, antipode)?.verified()
}

pub fn central_extension<F: Field>(hopf: &Arc<HopfAlgebra<F>>, bound: u64) -> Result<CentralExtension<F>> {
    let group = enumerate_lazy_cocycles(hopf, bound)?;
    central_extension_over(hopf, group)
}

pub fn central_extension_over<F: Field>(hopf: &Arc<HopfAlgebra<F>>, group: LazyGroup<F>) -> Result<CentralExtension<F>> {
    hopf.require_verified()?;
    let n = hopf.dim();
    let g = group.order();
    let a = Arc::new(dual_group_algebra(&group)?);
    let sigma = LinMap::from_fn(n * n, g, |hl| {
        group.elements.iter().map(|e| e.value(hl / n, hl % n).clone()).collect()
    });
    let inverses: Vec<&Cocycle2<F>> = group.elements.iter().map(Cocycle2::inverse).collect::<Result<_>>()?;
    let sigma_inv = LinMap::from_fn(n * n, g, |hl| inverses.iter().map(|e| e.value(hl / n, hl % n).clone()).collect());
    let sigma_report = universal_cocycle_report(hopf, &a, &sigma, &sigma_inv);
    if !sigma_report.passed() {
        return Err(Error::axioms("universal cocycle", sigma_report));
    }

    let mut b = crossed_product(hopf, &a, &sigma, &sigma_inv)?;
    let hopf_report = Report::group("A#σH is a Hopf algebra", vec![b.check_hopf()]);
    if !hopf_report.passed() {
        return Err(Error::axioms("A#σH", hopf_report));
    }
    let b = Arc::new(b);
    let nb = b.dim();
    let pi = LinMap::from_fn(nb, n, |i| {
        let mut out = vec![F::zero(); n];
        out[i % n] = a.counit(i / n);
        out
    });
    let inclusion = LinMap::from_fn(g, nb, |k| {
        let mut out = vec![F::zero(); nb];
        for (h, c) in hopf.one().iter().enumerate() {
            out[k * n + h] = c.clone();
        }
        out
    });
    let children = vec![
        sigma_report,
        hopf_report,
        epimorphism_report(&b, hopf, &pi),
        kernel_report(&b, &a, &pi, &inclusion),
        central_report(&b, &a, &inclusion),
        coinvariants_report(&b, hopf, &pi, &inclusion),
    ];
    let report = Report::group("central extension", children);
    if !report.passed() {
        return Err(Error::axioms("central extension", report));
    }
    Ok(CentralExtension { group, h: hopf.clone(), a, sigma, sigma_inv, b, pi, inclusion, report })
}

/// Coalgebra map, normalized, left cocycle, invertible and lazy, all with
/// values in `A`.
fn universal_cocycle_report<F: Field>(h: &HopfAlgebra<F>, a: &HopfAlgebra<F>, sigma: &LinMap<F>, sigma_inv: &LinMap<F>) -> Report {
    let n = h.dim();
    let g = a.dim();
    let at = |x: usize, y: usize| sigma.column_dense(x * n + y);
    let a_names = a.basis();
    let mut comult = Check::new("Δ(σ(h,l)) = σ(h1,l1)⊗σ(h2,l2)");
    let mut counit = Check::new("ε(σ(h,l)) = ε(h)ε(l)");
    let mut normal = Check::new("σ(1,h) = σ(h,1) = ε(h)1");
    let mut inverse = Check::new("σ*σ⁻¹ = σ⁻¹*σ = ε⊗ε 1");
    let mut lazy = Check::new("σ(h1,l1)⊗h2l2 = σ(h2,l2)⊗h1l1");
    let one = h.one();
    for x in 0..n {
        let e = h.counit(x);
        let unit_e: Vec<F> = a.one().into_iter().map(|v| v * e.clone()).collect();
        let l = sigma.apply(&kron(&one, &h.basis_vector(x)));
        let r = sigma.apply(&kron(&h.basis_vector(x), &one));
        normal.record(l == unit_e && r == unit_e, || Witness::new(h.names(&[x]), format_vector(&l, a_names), format_vector(&unit_e, a_names)));
        for y in 0..n {
            let v = at(x, y);
            let lhs = a.coalgebra().comul(&v);
            let mut rhs = vec![F::zero(); g * g];
            let mut conv_l = vec![F::zero(); g];
            let mut conv_r = vec![F::zero(); g];
            let mut lazy_l = vec![F::zero(); g * n];
            let mut lazy_r = vec![F::zero(); g * n];
            for (x1, x2, c) in h.coalgebra().coproduct(x) {
                for (y1, y2, d) in h.coalgebra().coproduct(y) {
                    let cd = c.clone() * d.clone();
                    add_scaled(&mut rhs, &cd, &kron(&at(x1, y1), &at(x2, y2)));
                    add_scaled(&mut conv_l, &cd, &a.mul(&at(x1, y1), &sigma_inv.column_dense(x2 * n + y2)));
                    add_scaled(&mut conv_r, &cd, &a.mul(&sigma_inv.column_dense(x1 * n + y1), &at(x2, y2)));
                    let p2 = h.algebra().mult().column_dense(x2 * n + y2);
                    let p1 = h.algebra().mult().column_dense(x1 * n + y1);
                    add_scaled(&mut lazy_l, &cd, &kron(&at(x1, y1), &p2));
                    add_scaled(&mut lazy_r, &cd, &kron(&at(x2, y2), &p1));
                }
            }
            let at_names = h.names(&[x, y]);
            comult.record(lhs == rhs, || {
                Witness::new(at_names.clone(), a.coalgebra().format_tensor(&lhs, 2), a.coalgebra().format_tensor(&rhs, 2))
            });
            let ev = a.eps(&v);
            let ee = e.clone() * h.counit(y);
            counit.record(ev == ee, || Witness::new(at_names.clone(), &ev, &ee));
            let expected: Vec<F> = a.one().into_iter().map(|u| u * ee.clone()).collect();
            inverse.record(conv_l == expected && conv_r == expected, || {
                Witness::new(at_names.clone(), format_vector(&conv_l, a_names), format_vector(&expected, a_names))
            });
            lazy.record(lazy_l == lazy_r, || Witness::new(at_names.clone(), "σ(h1,l1)⊗h2l2", "σ(h2,l2)⊗h1l1"));
        }
    }
    let mut cocycle = Check::new("σ(h1,l1)σ(h2l2,m) = σ(l1,m1)σ(h,l2m2)");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut lhs = vec![F::zero(); g];
                for (x1, x2, c) in h.coalgebra().coproduct(x) {
                    for (y1, y2, d) in h.coalgebra().coproduct(y) {
                        let p = h.algebra().mult().column_dense(x2 * n + y2);
                        let t = a.mul(&at(x1, y1), &sigma.apply(&kron(&p, &h.basis_vector(z))));
                        add_scaled(&mut lhs, &(c.clone() * d.clone()), &t);
                    }
                }
                let mut rhs = vec![F::zero(); g];
                for (y1, y2, c) in h.coalgebra().coproduct(y) {
                    for (z1, z2, d) in h.coalgebra().coproduct(z) {
                        let p = h.algebra().mult().column_dense(y2 * n + z2);
                        let t = a.mul(&at(y1, z1), &sigma.apply(&kron(&h.basis_vector(x), &p)));
                        add_scaled(&mut rhs, &(c.clone() * d.clone()), &t);
                    }
                }
                cocycle.record(lhs == rhs, || {
                    Witness::new(h.names(&[x, y, z]), format_vector(&lhs, a_names), format_vector(&rhs, a_names))
                });
            }
        }
    }
    Report::group(
        "A-valued σ",
        vec![comult.finish(), counit.finish(), normal.finish(), cocycle.finish(), inverse.finish(), lazy.finish()],
    )
}

/// `(a#h)(c#l) = acσ(h₁,l₁)#h₂l₂`, `Δ(a#h) = (a₁#h₁)⊗(a₂#h₂)`,
/// `ε(a#h) = ε(a)ε(h)` and `S(a#h) = (σ⁻¹(S(h₂),h₃)#S(h₁))(S(a)#1)`.
fn crossed_product<F: Field>(
    h: &HopfAlgebra<F>,
    a: &HopfAlgebra<F>,
    sigma: &LinMap<F>,
    sigma_inv: &LinMap<F>,
) -> Result<HopfAlgebra<F>> {
    let n = h.dim();
    let g = a.dim();
    let nb = g * n;
    let basis: Vec<String> = (0..nb).map(|i| format!("{}#{}", a.basis()[i / n], h.basis()[i % n])).collect();
    let smash = |av: &[F], hv: &[F]| kron(av, hv);
    let unit = smash(&a.one(), &h.one());
    let algebra = Algebra::from_fn(basis.clone(), unit, |i, j| {
        let (x, y) = (i % n, j % n);
        let ac = a.mul(&a.basis_vector(i / n), &a.basis_vector(j / n));
        let mut out = vec![F::zero(); nb];
        for (x1, x2, c) in h.coalgebra().coproduct(x) {
            for (y1, y2, d) in h.coalgebra().coproduct(y) {
                let coef = a.mul(&ac, &sigma.column_dense(x1 * n + y1));
                let p = h.algebra().mult().column_dense(x2 * n + y2);
                add_scaled(&mut out, &(c.clone() * d.clone()), &smash(&coef, &p));
            }
        }
        out
    });
    let counit = (0..nb).map(|i| a.counit(i / n) * h.counit(i % n)).collect();
    let coalgebra = Coalgebra::from_fn(basis, counit, |i| {
        let mut out = vec![F::zero(); nb * nb];
        for (a1, a2, c) in a.coalgebra().coproduct(i / n) {
            for (h1, h2, d) in h.coalgebra().coproduct(i % n) {
                out[(a1 * n + h1) * nb + a2 * n + h2] += c.clone() * d.clone();
            }
        }
        out
    });
    let antipode = LinMap::from_fn(nb, nb, |i| {
        let s_a = smash(&a.s_vec(i / n), &h.one());
        let mut out = vec![F::zero(); nb];
        for (t, c) in h.legs(i % n, 3) {
            let inv = sigma_inv.apply(&kron(&h.s_vec(t[1]), &h.basis_vector(t[2])));
            let left = smash(&inv, &h.s_vec(t[0]));
            add_scaled(&mut out, &c, &algebra.mul(&left, &s_a));
        }
        out
    });
    HopfAlgebra::new(format!("(kG)*#σ{}", h.name()), algebra, coalgebra, antipode)
}

fn without_bijective(r: Report) -> Vec<Report> {
    r.children.into_iter().filter(|c| c.name != "bijective").collect()
}

/// (5): `π(a#h) = ε(a)h` is a surjective Hopf map.
fn epimorphism_report<F: Field>(b: &HopfAlgebra<F>, h: &HopfAlgebra<F>, pi: &LinMap<F>) -> Report {
    let mut children = without_bijective(hopf_map_report(b, h, pi));
    let rank = pi.to_matrix().rank();
    children.push(Report::verdict("π surjective", rank == h.dim(), || {
        Witness::new(vec![], format!("rank {rank}"), format!("rank {}", h.dim()))
    }));
    Report::group("π is a Hopf epimorphism", children)
}

/// (5): `ker π = BA⁺` by ideal membership and a dimension count.
fn kernel_report<F: Field>(b: &HopfAlgebra<F>, a: &HopfAlgebra<F>, pi: &LinMap<F>, inclusion: &LinMap<F>) -> Report {
    let nb = b.dim();
    let mut spanning = Vec::new();
    let mut member = Check::new("π(BA⁺) = 0");
    for k in 0..a.dim() {
        // δ_k − ε(δ_k)1 spans A⁺ as k varies.
        let mut plus = a.basis_vector(k);
        add_scaled(&mut plus, &-a.counit(k), &a.one());
        let ip = inclusion.apply(&plus);
        for i in 0..nb {
            let v = b.mul(&b.basis_vector(i), &ip);
            let image = pi.apply(&v);
            member.record(image.iter().all(F::is_zero), || {
                Witness::new(vec![b.basis()[i].clone(), a.basis()[k].clone()], "nonzero", 0)
            });
            spanning.push(v);
        }
    }
    let span = Matrix::from_fn(nb, spanning.len(), |r, c| spanning[c][r].clone()).rank();
    let kernel = nb - pi.to_matrix().rank();
    let count = Report::verdict("dim BA⁺ = dim ker π", span == kernel, || {
        Witness::new(vec![], span, kernel)
    });
    Report::group("ker π = BA⁺", vec![member.finish(), count])
}

/// (6): `A ↪ B` is an injective Hopf map with central image.
fn central_report<F: Field>(b: &HopfAlgebra<F>, a: &HopfAlgebra<F>, inclusion: &LinMap<F>) -> Report {
    let mut children = without_bijective(hopf_map_report(a, b, inclusion));
    let rank = inclusion.to_matrix().rank();
    children.push(Report::verdict("A → B injective", rank == a.dim(), || {
        Witness::new(vec![], format!("rank {rank}"), format!("rank {}", a.dim()))
    }));
    let mut central = Check::new("ab = ba for a in A");
    for k in 0..a.dim() {
        let x = inclusion.column_dense(k);
        for i in 0..b.dim() {
            let y = b.basis_vector(i);
            let (l, r) = (b.mul(&x, &y), b.mul(&y, &x));
            central.record(l == r, || {
                Witness::new(vec![a.basis()[k].clone(), b.basis()[i].clone()], b.format(&l), b.format(&r))
            });
        }
    }
    children.push(central.finish());
    Report::group("A is a central Hopf subalgebra", children)
}

/// (6): `B^{co H} = {b : b₁⊗π(b₂) = b⊗1}` equals the image of `A`.
fn coinvariants_report<F: Field>(b: &HopfAlgebra<F>, h: &HopfAlgebra<F>, pi: &LinMap<F>, inclusion: &LinMap<F>) -> Report {
    let (nb, n) = (b.dim(), h.dim());
    let one = h.one();
    let cols: Vec<Vec<F>> = (0..nb)
        .map(|i| {
            let mut out = vec![F::zero(); nb * n];
            for (x, y, c) in b.coalgebra().coproduct(i) {
                add_scaled(&mut out, c, &kron(&b.basis_vector(x), &pi.column_dense(y)));
            }
            add_scaled(&mut out, &-F::one(), &kron(&b.basis_vector(i), &one));
            out
        })
        .collect();
    let phi = Matrix::from_fn(nb * n, nb, |r, c| cols[c][r].clone());
    let coinv_dim = nb - phi.rank();
    let a_dim = inclusion.source();
    let dim = Report::verdict("dim B^co(H) = dim A", coinv_dim == a_dim, || Witness::new(vec![], coinv_dim, a_dim));
    let mut contained = Check::new("A ⊆ B^co(H)");
    for k in 0..a_dim {
        let v = phi.mul_vec(&inclusion.column_dense(k));
        contained.record(v.iter().all(F::is_zero), || Witness::new(vec![format!("δ{k}")], "nonzero", 0));
    }
    Report::group("A = B^co(H)", vec![contained.finish(), dim])
}

/// A lift `X: B → End(V)` of `T` with `X = γ*(T∘π)`.
#[derive(Clone)]
pub struct Lift<F> {
    /// Position of `α` in the group.
    pub alpha_index: usize,
    /// `λ(δ_β) = [β = α]`.
    pub lambda: Vec<F>,
    pub x: Vec<Matrix<F>>,
    pub gamma: Vec<F>,
    pub report: Report,
}

impl<F: Field> fmt::Debug for Lift<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lift").field("alpha_index", &self.alpha_index).field("dim_b", &self.x.len()).finish()
    }
}

pub fn lift<F: Field>(rep: &ProjectiveRep<F>, ext: &CentralExtension<F>) -> Result<Lift<F>> {
    if ext.h != rep.hopf {
        return Err(Error::CocycleMismatch("the extension is over a different Hopf algebra".into()));
    }
    if !rep.alpha.is_lazy() {
        return Err(Error::Precondition("lifting needs a lazy α".into()));
    }
    let pos = ext.group.position(&rep.alpha).ok_or_else(|| {
        Error::Precondition(
            "α is not in G; T lifts to B iff α is cohomologous to λ∘σ for some algebra map λ: A → k".into(),
        )
    })?;
    let (a, b, h) = (&ext.a, &ext.b, &ext.h);
    let (g, n, nb, d) = (a.dim(), h.dim(), b.dim(), rep.dim);
    let lambda: Vec<F> = (0..g).map(|k| if k == pos { F::one() } else { F::zero() }).collect();
    let lam = |v: &[F]| crate::hopf::dot(&lambda, v);

    let mut character = Check::new("λ(ac) = λ(a)λ(c)");
    for i in 0..g {
        for j in 0..g {
            let l = lam(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
            let r = lambda[i].clone() * lambda[j].clone();
            character.record(l == r, || Witness::new(a.names(&[i, j]), &l, &r));
        }
    }
    let l1 = lam(&a.one());
    character.record(l1.is_one(), || Witness::new(vec!["1".into()], &l1, 1));

    let x: Vec<Matrix<F>> = (0..nb).map(|i| rep.t[i % n].scale(&lambda[i / n])).collect();
    let mut algebra_map = Check::new("X(bb') = X(b)X(b')");
    for i in 0..nb {
        for j in 0..nb {
            let l = combine(&x, &b.algebra().mult().column_dense(i * nb + j), d);
            let r = x[i].matmul(&x[j]);
            algebra_map.record(l == r, || Witness::new(b.names(&[i, j]), format_matrix(&l), format_matrix(&r)));
        }
    }
    let x1 = combine(&x, &b.one(), d);
    algebra_map.record(x1 == Matrix::identity(d), || Witness::new(vec!["1".into()], format_matrix(&x1), "id"));

    let gamma: Vec<F> = (0..nb).map(|i| lambda[i / n].clone() * h.counit(i % n)).collect();
    let g1 = crate::hopf::dot(&gamma, &b.one());
    let unit = Report::verdict("γ(1) = 1", g1.is_one(), || Witness::new(vec![], &g1, 1));
    let ground = Algebra::ground();
    let gamma_map = LinMap::from_fn(nb, 1, |i| vec![gamma[i].clone()]);
    let invertible = ConvElement::new(b.coalgebra(), &ground, gamma_map).and_then(|f| convolution_inverse(&f).map(|_| ()));
    let inv = Report::verdict("γ convolution invertible", invertible.is_ok(), || Witness::new(vec![], "singular", "invertible"));

    let mut factor = Check::new("X = γ*(T∘π)");
    for i in 0..nb {
        let mut r = Matrix::zeros(d, d);
        for (b1, b2, c) in b.coalgebra().coproduct(i) {
            let t = rep.eval(&ext.pi.column_dense(b2));
            r.add_scaled(&(c.clone() * gamma[b1].clone()), &t);
        }
        factor.record(r == x[i], || Witness::new(b.names(&[i]), format_matrix(&x[i]), format_matrix(&r)));
    }

    let mut recovers = Check::new("α = λ∘σ");
    for p in 0..n {
        for q in 0..n {
            let v = lam(&ext.sigma.column_dense(p * n + q));
            recovers.record(v == *rep.alpha.value(p, q), || Witness::new(h.names(&[p, q]), &v, rep.alpha.value(p, q)));
        }
    }

    let mut scalar = Check::new("X restricted to A is scalar");
    for k in 0..g {
        let xa = combine(&x, &ext.inclusion.column_dense(k), d);
        let ok = xa.as_scalar() == Some(lambda[k].clone());
        scalar.record(ok, || Witness::new(vec![a.basis()[k].clone()], format_matrix(&xa), format!("{} id", lambda[k])));
    }

    let report = Report::group(
        "lift",
        vec![character.finish(), algebra_map.finish(), unit, inv, factor.finish(), recovers.finish(), scalar.finish()],
    );
    if !report.passed() {
        return Err(Error::axioms("lift", report));
    }
    Ok(Lift { alpha_index: pos, lambda, x, gamma, report })
}
