//! Sparse linear maps between finite-dimensional spaces.
//!
//! Rank-3 structure tensors are stored as linear maps between flattened
//! tensor spaces: the product `μ` is a map `n² → n` whose column `i·n + j`
//! holds `e_i e_j`, and the coproduct `Δ` is a map `n → n²` whose column `i`
//! lists `Δ(e_i)` with target index `j·n + k` for `e_j ⊗ e_k`. All product
//! spaces use this row-major flattening.

use std::collections::BTreeMap;

use crate::linalg::Matrix;
use crate::scalar::Field;

/// A linear map stored column by column; each column is the image of one
/// source basis vector, sorted by target index with zero entries removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap<F> {
    source: usize,
    target: usize,
    cols: Vec<Vec<(usize, F)>>,
}

impl<F: Field> LinMap<F> {
    pub fn zero(source: usize, target: usize) -> Self {
        LinMap {
            source,
            target,
            cols: vec![Vec::new(); source],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            source: n,
            target: n,
            cols: (0..n).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    /// Builds a map from `(source index, target index, value)` triples;
    /// duplicates are summed.
    pub fn from_triplets(
        source: usize,
        target: usize,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); source];
        for (s, t, v) in entries {
            assert!(s < source && t < target, "entry ({s},{t}) out of range {source}x{target}");
            if v.is_zero() {
                continue;
            }
            let slot = acc[s].entry(t).or_insert_with(F::zero);
            *slot += v;
        }
        LinMap {
            source,
            target,
            cols: acc
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    /// Builds a map from dense image vectors, one per source basis element.
    pub fn from_columns(target: usize, columns: Vec<Vec<F>>) -> Self {
        let source = columns.len();
        let cols = columns
            .into_iter()
            .map(|c| {
                assert_eq!(c.len(), target, "column length mismatch");
                c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        LinMap { source, target, cols }
    }

    pub fn from_fn(source: usize, target: usize, mut image: impl FnMut(usize) -> Vec<F>) -> Self {
        Self::from_columns(target, (0..source).map(&mut image).collect())
    }

    /// From a dense `target × source` matrix.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        Self::from_columns(m.rows(), (0..m.cols()).map(|j| m.column(j)).collect())
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.target, self.source);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn column(&self, j: usize) -> &[(usize, F)] {
        &self.cols[j]
    }

    pub fn column_dense(&self, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.target];
        for (i, c) in &self.cols[j] {
            v[*i] = c.clone();
        }
        v
    }

    pub fn entry(&self, target: usize, source: usize) -> F {
        self.cols[source]
            .binary_search_by_key(&target, |(i, _)| *i)
            .map(|k| self.cols[source][k].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// Iterates `(source, target, value)` over nonzero entries in canonical order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(s, col)| col.iter().map(move |(t, v)| (s, *t, v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.source, "dimension mismatch");
        let mut out = vec![F::zero(); self.target];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.cols[j] {
                out[*i] += c.clone() * x.clone();
            }
        }
        out
    }

    /// `out += scale · self(e_j)`
    pub fn accumulate_column(&self, j: usize, scale: &F, out: &mut [F]) {
        if scale.is_zero() {
            return;
        }
        for (i, c) in &self.cols[j] {
            out[*i] += c.clone() * scale.clone();
        }
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &LinMap<F>) -> LinMap<F> {
        assert_eq!(rhs.target, self.source, "composition dimension mismatch");
        let cols = (0..rhs.source)
            .map(|j| {
                let mut acc = vec![F::zero(); self.target];
                for (k, c) in &rhs.cols[j] {
                    self.accumulate_column(*k, c, &mut acc);
                }
                acc
            })
            .collect();
        LinMap::from_columns(self.target, cols)
    }

    /// `self ⊗ rhs` on row-major flattened spaces.
    pub fn tensor(&self, rhs: &LinMap<F>) -> LinMap<F> {
        let mut entries = Vec::new();
        for (a, ta, va) in self.triplets() {
            for (b, tb, vb) in rhs.triplets() {
                entries.push((a * rhs.source + b, ta * rhs.target + tb, va.clone() * vb.clone()));
            }
        }
        LinMap::from_triplets(self.source * rhs.source, self.target * rhs.target, entries)
    }

    pub fn transpose(&self) -> LinMap<F> {
        LinMap::from_triplets(
            self.target,
            self.source,
            self.triplets().map(|(s, t, v)| (t, s, v.clone())),
        )
    }

    pub fn add(&self, rhs: &LinMap<F>) -> LinMap<F> {
        assert_eq!((self.source, self.target), (rhs.source, rhs.target));
        LinMap::from_triplets(
            self.source,
            self.target,
            self.triplets()
                .chain(rhs.triplets())
                .map(|(s, t, v)| (s, t, v.clone())),
        )
    }

    pub fn scale(&self, c: &F) -> LinMap<F> {
        LinMap::from_triplets(
            self.source,
            self.target,
            self.triplets().map(|(s, t, v)| (s, t, v.clone() * c.clone())),
        )
    }

    /// Relabels source and target indices through the given permutations.
    pub fn relabel(&self, source_perm: &[usize], target_perm: &[usize]) -> LinMap<F> {
        LinMap::from_triplets(
            self.source,
            self.target,
            self.triplets()
                .map(|(s, t, v)| (source_perm[s], target_perm[t], v.clone())),
        )
    }

    /// Returns a copy with one entry replaced; used by mutation tests.
    pub fn with_entry(&self, target: usize, source: usize, value: F) -> LinMap<F> {
        let mut entries: Vec<_> = self
            .triplets()
            .filter(|&(s, t, _)| (s, t) != (source, target))
            .map(|(s, t, v)| (s, t, v.clone()))
            .collect();
        entries.push((source, target, value));
        LinMap::from_triplets(self.source, self.target, entries)
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && self.to_matrix().rank() == self.source
    }

    pub fn inverse(&self) -> Option<LinMap<F>> {
        self.to_matrix().inverse().map(|m| LinMap::from_matrix(&m))
    }
}

/// Swaps the two factors of a flattened `a ⊗ b` space, giving the
/// permutation `i·b + j ↦ j·a + i`.
pub fn flip_permutation(a: usize, b: usize) -> Vec<usize> {
    let mut perm = vec![0; a * b];
    for i in 0..a {
        for j in 0..b {
            perm[i * b + j] = j * a + i;
        }
    }
    perm
}

/// The flip `V ⊗ W → W ⊗ V` as a linear map.
pub fn flip<F: Field>(a: usize, b: usize) -> LinMap<F> {
    let perm = flip_permutation(a, b);
    LinMap::from_triplets(a * b, a * b, (0..a * b).map(|s| (s, perm[s], F::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use proptest::prelude::*;

    type F7 = Fp<7>;

    fn arb_map(source: usize, target: usize) -> impl Strategy<Value = LinMap<F7>> {
        proptest::collection::vec(0i64..7, source * target).prop_map(move |vals| {
            LinMap::from_columns(
                target,
                vals.chunks(target)
                    .map(|c| c.iter().map(|&v| F7::new(v)).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn dense_round_trip(m in arb_map(3, 4)) {
            prop_assert_eq!(LinMap::from_matrix(&m.to_matrix()), m);
        }

        #[test]
        fn composition_matches_matrix_product(a in arb_map(3, 2), b in arb_map(4, 3)) {
            prop_assert_eq!(a.compose(&b).to_matrix(), a.to_matrix().matmul(&b.to_matrix()));
        }

        #[test]
        fn tensor_is_kronecker(a in arb_map(2, 2), b in arb_map(3, 2), x in proptest::collection::vec(0i64..7, 6)) {
            // (a ⊗ b)(u ⊗ v) = a(u) ⊗ b(v) on pure tensors
            let u: Vec<F7> = x[..2].iter().map(|&v| F7::new(v)).collect();
            let v: Vec<F7> = x[2..5].iter().map(|&v| F7::new(v)).collect();
            let uv: Vec<F7> = u.iter().flat_map(|p| v.iter().map(move |q| *p * *q)).collect();
            let au = a.apply(&u);
            let bv = b.apply(&v);
            let expected: Vec<F7> = au.iter().flat_map(|p| bv.iter().map(move |q| *p * *q)).collect();
            prop_assert_eq!(a.tensor(&b).apply(&uv), expected);
        }
    }

    #[test]
    fn flip_is_involution() {
        let f = flip::<F7>(2, 3);
        let g = flip::<F7>(3, 2);
        assert_eq!(g.compose(&f), LinMap::identity(6));
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let m = LinMap::from_triplets(2, 2, vec![(0, 1, F7::new(3)), (0, 1, F7::new(4))]);
        assert_eq!(m, LinMap::zero(2, 2));
    }
}
