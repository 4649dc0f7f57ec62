//! Built-in Hopf algebras: group algebras of cyclic groups, Sweedler's
//! four-dimensional algebra and the nine-dimensional Taft algebra.

use std::sync::Arc;

use crate::biproduct::{AdmissiblePair, YdCocycle2};
use crate::cocycle::Cocycle2;
use crate::error::{Error, Result};
use crate::hopf::{kron, unit_vector, Algebra, Coalgebra, HopfAlgebra};
use crate::linmap::LinMap;
use crate::scalar::Field;

/// Generator data for building a Hopf algebra whose basis elements are
/// words in generators: `Δ` and `ε` are extended multiplicatively, `S`
/// anti-multiplicatively.
struct Generators<F> {
    /// For each basis element, the generator word whose product it is.
    words: Vec<Vec<usize>>,
    delta: Vec<Vec<F>>,
    eps: Vec<F>,
    antipode: Vec<Vec<F>>,
}

fn from_generators<F: Field>(name: &str, algebra: Algebra<F>, gens: Generators<F>) -> Result<HopfAlgebra<F>> {
    let n = algebra.dim();
    let one = algebra.unit().to_vec();
    let mut comult_cols = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut s_cols = Vec::with_capacity(n);
    for word in &gens.words {
        let mut d = kron(&one, &one);
        let mut e = F::one();
        let mut s = one.clone();
        for &g in word {
            d = algebra.mul_tensor2(&d, &gens.delta[g]);
            e *= gens.eps[g].clone();
            s = algebra.mul(&gens.antipode[g], &s);
        }
        comult_cols.push(d);
        counit.push(e);
        s_cols.push(s);
    }
    let basis = algebra.basis().to_vec();
    let coalgebra = Coalgebra::new(basis, LinMap::from_columns(n * n, comult_cols), counit)?;
    let antipode = LinMap::from_columns(n, s_cols);
    HopfAlgebra::new(name, algebra, coalgebra, antipode)?.verified()
}

/// The group algebra `kℤ_n` on the basis `1, g, …, g^{n-1}`.
pub fn group_algebra<F: Field>(n: usize) -> Result<HopfAlgebra<F>> {
    assert!(n >= 1);
    let basis: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let algebra = Algebra::from_fn(basis.clone(), unit_vector(n, 0), |i, j| unit_vector(n, (i + j) % n));
    let coalgebra = Coalgebra::from_fn(basis, vec![F::one(); n], |i| unit_vector(n * n, i * n + i));
    let antipode = LinMap::from_fn(n, n, |i| unit_vector(n, (n - i) % n));
    HopfAlgebra::new(format!("kZ{n}"), algebra, coalgebra, antipode)?.verified()
}

/// Sweedler's `H₄ = k⟨G, X | G² = 1, X² = 0, GX = −XG⟩` on the basis
/// `1, G, X, GX` (index `a + 2b` for `G^a X^b`), with `Δ(G) = G⊗G`,
/// `Δ(X) = 1⊗X + X⊗G`, `S(G) = G`, `S(X) = GX`.
pub fn sweedler_h4<F: Field>() -> Result<HopfAlgebra<F>> {
    let basis: Vec<String> = ["1", "G", "X", "GX"].iter().map(|s| s.to_string()).collect();
    let idx = |a: usize, b: usize| a + 2 * b;
    let algebra = Algebra::from_fn(basis, unit_vector(4, 0), |i, j| {
        let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
        let mut v = vec![F::zero(); 4];
        if b + d < 2 {
            let sign = if b * c % 2 == 1 { -F::one() } else { F::one() };
            v[idx((a + c) % 2, b + d)] = sign;
        }
        v
    });
    let e = |i: usize, j: usize| unit_vector::<F>(16, i * 4 + j);
    let mut dx = e(0, 2);
    dx[2 * 4 + 1] = F::one();
    let gens = Generators {
        words: vec![vec![], vec![0], vec![1], vec![0, 1]],
        delta: vec![e(1, 1), dx],
        eps: vec![F::one(), F::zero()],
        antipode: vec![unit_vector(4, 1), unit_vector(4, 3)],
    };
    from_generators("H4", algebra, gens)
}

/// The Taft algebra `H₉ = k⟨X, Y | X³ = 1, Y³ = 0, YX = qXY⟩` on the basis
/// `X^a Y^b` (index `3a + b`), with `Δ(X) = X⊗X`, `Δ(Y) = 1⊗Y + Y⊗X`,
/// `S(X) = X²`, `S(Y) = −q²X²Y`, where `q` is a primitive cube root of unity.
pub fn taft9<F: Field>() -> Result<HopfAlgebra<F>> {
    let q = F::primitive_root_of_unity(3)?;
    let name = |a: usize, b: usize| {
        let x = match a {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{a}"),
        };
        let y = match b {
            0 => String::new(),
            1 => "Y".to_string(),
            _ => format!("Y^{b}"),
        };
        if a == 0 && b == 0 {
            "1".to_string()
        } else {
            x + &y
        }
    };
    let basis: Vec<String> = (0..9).map(|i| name(i / 3, i % 3)).collect();
    let idx = |a: usize, b: usize| 3 * a + b;
    let algebra = Algebra::from_fn(basis, unit_vector(9, 0), |i, j| {
        let (a, b, c, d) = (i / 3, i % 3, j / 3, j % 3);
        let mut v = vec![F::zero(); 9];
        if b + d < 3 {
            v[idx((a + c) % 3, b + d)] = q.pow((b * c) as u64);
        }
        v
    });
    let e = |i: usize, j: usize| unit_vector::<F>(81, i * 9 + j);
    let x = idx(1, 0);
    let y = idx(0, 1);
    let mut dy = e(0, y);
    dy[y * 9 + x] = F::one();
    let mut sy = vec![F::zero(); 9];
    sy[idx(2, 1)] = -(q.clone() * q.clone());
    let words = (0..9)
        .map(|i| {
            let (a, b) = (i / 3, i % 3);
            std::iter::repeat_n(0, a).chain(std::iter::repeat_n(1, b)).collect()
        })
        .collect();
    let gens = Generators {
        words,
        delta: vec![e(x, x), dy],
        eps: vec![F::one(), F::zero()],
        antipode: vec![unit_vector(9, idx(2, 0)), sy],
    };
    from_generators("H9", algebra, gens)
}

fn sweedler_table<F: Field>(h: &Arc<HopfAlgebra<F>>, t: F, gx_gx: F) -> Result<Cocycle2<F>> {
    let half = F::from_i64(2)
        .inverse()
        .ok_or_else(|| Error::Precondition("σ_t needs characteristic ≠ 2".into()))?;
    let idx = |s: &str| {
        h.index_of(s)
            .ok_or_else(|| Error::Precondition(format!("{} has no basis element {s}", h.name())))
    };
    let (x, gx) = (idx("X")?, idx("GX")?);
    let v = t * half;
    Cocycle2::from_fn(h.clone(), |i, j| match (i, j) {
        _ if i == x && j == x => v.clone(),
        _ if i == x && j == gx => -v.clone(),
        _ if i == gx && j == x => v.clone(),
        _ if i == gx && j == gx => gx_gx.clone() * v.clone(),
        _ => h.counit(i) * h.counit(j),
    })
}

/// The lazy 2-cocycle `σ_t` of `H₄`: `ε`-values on rows and columns of `1`
/// and `G`, and `σ(X,X) = t/2`, `σ(X,GX) = −t/2`, `σ(GX,X) = t/2`,
/// `σ(GX,GX) = −t/2`.
pub fn sweedler_lazy_cocycle<F: Field>(h: &Arc<HopfAlgebra<F>>, t: F) -> Result<Cocycle2<F>> {
    sweedler_table(h, t, -F::one())
}

/// The same table with `σ(GX,GX) = +t/2`; for `t ≠ 0` this is not a left
/// 2-cocycle.
pub fn sweedler_table_with_positive_corner<F: Field>(h: &Arc<HopfAlgebra<F>>, t: F) -> Result<Cocycle2<F>> {
    sweedler_table(h, t, F::one())
}

/// `H = kℤ₂` acting on `B = k[x]/(x²)` by `g·x = −x`, with `ρ(x) = g⊗x`,
/// `Δ(x) = 1⊗x + x⊗1` and `ε(x) = 0`. Its biproduct is `H₄`.
pub fn yd_pair_h4<F: Field>() -> Result<AdmissiblePair<F>> {
    let h = Arc::new(group_algebra::<F>(2)?);
    let basis = vec!["1".to_string(), "x".to_string()];
    let algebra = Algebra::from_fn(basis.clone(), unit_vector(2, 0), |i, j| {
        if i + j < 2 {
            unit_vector(2, i + j)
        } else {
            vec![F::zero(); 2]
        }
    });
    let coalgebra = Coalgebra::from_fn(basis, vec![F::one(), F::zero()], |i| {
        if i == 0 {
            unit_vector(4, 0)
        } else {
            let mut v = unit_vector(4, 1);
            v[2] = F::one();
            v
        }
    });
    let action = LinMap::from_fn(4, 2, |t| {
        let (g, b) = (t / 2, t % 2);
        let sign = if g * b == 1 { -F::one() } else { F::one() };
        let mut v = vec![F::zero(); 2];
        v[b] = sign;
        v
    });
    let coaction = LinMap::from_columns(4, vec![unit_vector(4, 0), unit_vector(4, 3)]);
    AdmissiblePair::new(h, algebra, coalgebra, action, coaction)
}

/// `θ_s(1,1) = 1`, `θ_s(1,x) = θ_s(x,1) = 0`, `θ_s(x,x) = s` on `k[x]/(x²)`.
pub fn theta<F: Field>(pair: &Arc<AdmissiblePair<F>>, s: F) -> Result<YdCocycle2<F>> {
    YdCocycle2::from_fn(pair.clone(), |i, j| match (i, j) {
        (0, 0) => F::one(),
        (1, 1) => s.clone(),
        _ => F::zero(),
    })
}

/// `B×kℤ₂ → H₄` on the pair of [`yd_pair_h4`]: `1×1 ↦ 1`, `1×g ↦ G`,
/// `x×g ↦ X`, `x×1 = (x×g)(1×g) ↦ XG`.
pub fn h4_from_biproduct<F: Field>(h4: &HopfAlgebra<F>) -> Result<LinMap<F>> {
    let idx = |s: &str| {
        h4.index_of(s)
            .ok_or_else(|| Error::Precondition(format!("{} has no basis element {s}", h4.name())))
    };
    let (one, g, x) = (idx("1")?, idx("G")?, idx("X")?);
    let xg = h4.mul(&unit_vector(4, x), &unit_vector(4, g));
    // biproduct index b·2 + h
    Ok(LinMap::from_columns(
        4,
        vec![unit_vector(4, one), unit_vector(4, g), xg, unit_vector(4, x)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::scalar::{Cyclotomic, Fp, Rational};

    #[test]
    fn h4_antipode_values() {
        let h = sweedler_h4::<Rational>().unwrap();
        let x = h.index_of("X").unwrap();
        let gx = h.index_of("GX").unwrap();
        assert_eq!(h.s_vec(x), unit_vector(4, gx));
        // S²(X) = S(GX) = −X, so S² ≠ id
        let s2 = h.antipode().compose(h.antipode());
        assert_ne!(s2, LinMap::identity(4));
    }

    #[test]
    fn taft_values_from_the_counterexample_discussion() {
        type K = Cyclotomic<3>;
        let h = taft9::<K>().unwrap();
        let q = K::zeta();
        let i = |s: &str| h.index_of(s).unwrap();
        // Δ(Y²) = 1⊗Y² + (1+q)Y⊗XY + Y²⊗X²
        let mut expected = vec![K::zero(); 81];
        expected[i("1") * 9 + i("Y^2")] = K::one();
        expected[i("Y") * 9 + i("XY")] = K::one() + q.clone();
        expected[i("Y^2") * 9 + i("X^2")] = K::one();
        assert_eq!(h.coalgebra().comult().column_dense(i("Y^2")), expected);
        // S(Y²) = XY², S(XY) = −qXY, S(X²) = X
        let mut sxy = vec![K::zero(); 9];
        sxy[i("XY")] = -q.clone();
        assert_eq!(h.s_vec(i("Y^2")), unit_vector(9, i("XY^2")));
        assert_eq!(h.s_vec(i("XY")), sxy);
        assert_eq!(h.s_vec(i("X^2")), unit_vector(9, i("X")));
    }

    #[test]
    fn all_fixtures_verify() {
        group_algebra::<Fp<3>>(2).unwrap();
        group_algebra::<Rational>(3).unwrap();
        sweedler_h4::<Fp<5>>().unwrap();
        taft9::<Fp<7>>().unwrap();
        assert!(taft9::<Rational>().is_err());
    }
}

/// Looks a Hopf algebra up by name: `kZ<n>`, `H4` (or `sweedler_h4`), `H9`
/// (or `taft9`), and `D(<name>)` for the Drinfeld double of another entry.
pub fn hopf_by_name<F: Field>(name: &str) -> Result<HopfAlgebra<F>> {
    let name = name.trim();
    if let Some(inner) = name.strip_prefix("D(").and_then(|r| r.strip_suffix(')')) {
        let base = Arc::new(hopf_by_name::<F>(inner)?);
        let double = crate::double::drinfeld_double(&base)?;
        return Ok((*double.hopf).clone());
    }
    match name {
        "H4" | "h4" | "sweedler_h4" => sweedler_h4(),
        "H9" | "h9" | "taft9" => taft9(),
        _ => {
            let n = name
                .strip_prefix("kZ")
                .or_else(|| name.strip_prefix("group_algebra"))
                .and_then(|r| r.trim_matches(|c| c == '(' || c == ')').parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Document(format!("unknown fixture {name:?}")))?;
            group_algebra(n)
        }
    }
}
