use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::cocycle::enumerate_lazy_cocycles;
use crate::fixtures::{group_algebra, sweedler_h4, sweedler_lazy_cocycle};
use crate::hopf::Coalgebra;
use crate::scalar::{Fp, Rational};

type F3 = Fp<3>;
type F5 = Fp<5>;
type F7 = Fp<7>;
type Q = Rational;

fn h4<F: Field>() -> Arc<HopfAlgebra<F>> {
    Arc::new(sweedler_h4().unwrap())
}

fn d4<F: Field>() -> DrinfeldDouble<F> {
    drinfeld_double(&h4()).unwrap()
}

#[test]
fn double_of_kz2_is_the_group_algebra_of_z2_squared() {
    let h = Arc::new(group_algebra::<Q>(2).unwrap());
    let d = drinfeld_double(&h).unwrap();
    assert_eq!(d.dim(), 4);
    assert!(d.hopf.is_verified());
    assert!(d.hopf.algebra().is_commutative());
    // (p_a⊗g)(p_b⊗h) = δ_ab p_a⊗gh for an abelian group
    for x in 0..4 {
        for y in 0..4 {
            let (a, g) = (x / 2, x % 2);
            let (b, k) = (y / 2, y % 2);
            let mut expected = vec![Q::zero(); 4];
            if a == b {
                expected[a * 2 + (g + k) % 2] = Q::one();
            }
            assert_eq!(d.hopf.algebra().mult().column_dense(x * 4 + y), expected);
        }
    }
}

#[test]
fn double_coalgebra_is_cop_dual_tensor_h() {
    let h = h4::<Q>();
    let d = drinfeld_double(&h).unwrap();
    let dual = h.dual_hopf().unwrap();
    let expected: Coalgebra<Q> = crate::hopf::tensor_coalgebra(&dual.coalgebra().co_opposite(), h.coalgebra());
    assert_eq!(d.hopf.coalgebra().comult(), expected.comult());
    assert_eq!(d.hopf.coalgebra().counit(), expected.counit());
    assert_eq!(d.hopf.provenance().unwrap()["construction"], "drinfeld_double");
}

#[test]
fn double_of_h4_is_a_hopf_algebra() {
    let d = d4::<F5>();
    assert_eq!(d.dim(), 16);
    assert!(d.hopf.is_verified());
    assert!(d.report.passed());
    assert!(!d.hopf.algebra().is_commutative());
}

/// `R = Σ (ε⊗e_i) ⊗ (p_i⊗1)` intertwines `Δ` and `Δ^cop`; this uses no
/// part of the construction beyond the product and coproduct tensors.
#[test]
fn canonical_element_intertwines_the_coproducts() {
    let d = d4::<Q>();
    let n = 4;
    let nn = 16;
    let dd = d.hopf.algebra().tensor(d.hopf.algebra());
    let mut r = vec![Q::zero(); nn * nn];
    for i in 0..n {
        let left = d.embed_h(&unit_vector(n, i));
        let right = d.embed_p(&unit_vector(n, i));
        add_scaled(&mut r, &Q::one(), &kron(&left, &right));
    }
    let cop = d.hopf.coalgebra().co_opposite();
    for x in 0..nn {
        let lhs = dd.mul(&r, &d.hopf.coalgebra().comult().column_dense(x));
        let rhs = dd.mul(&cop.comult().column_dense(x), &r);
        assert_eq!(lhs, rhs, "at {}", d.hopf.basis()[x]);
    }
}

#[test]
fn unverified_input_is_rejected() {
    let h = sweedler_h4::<Q>().unwrap();
    let bad = h.clone().with_antipode(LinMap::identity(4));
    assert!(matches!(drinfeld_double(&Arc::new(bad)), Err(Error::Unverified(_))));
}

#[test]
fn diagonal_product_over_h_is_the_double() {
    let d = d4::<Q>();
    let a = BicomoduleAlgebra::regular(d.base.clone());
    let p = diagonal_crossed_product(&d, &a).unwrap();
    assert_eq!(p.algebra().mult(), d.hopf.algebra().mult());
    assert_eq!(p.bicomodule.left(), d.hopf.coalgebra().comult());
    assert_eq!(p.bicomodule.right(), d.hopf.coalgebra().comult());
    assert!(p.report.passed());
}

#[test]
fn diagonal_product_over_a_lazy_twist() {
    let d = d4::<F5>();
    let s = sweedler_lazy_cocycle(&d.base, F5::new(1)).unwrap();
    let a = s.twist(crate::cocycle::TwistMode::Lazy).unwrap().bicomodule.unwrap();
    let p = diagonal_crossed_product(&d, &a).unwrap();
    assert_eq!(p.algebra().dim(), 16);
    assert!(p.report.passed());
}

#[test]
fn diagonal_product_over_the_ground_field_is_the_dual() {
    let d = d4::<Q>();
    let h = d.base.clone();
    let one = unit_vector::<Q>(4, 0);
    let coact = LinMap::from_columns(4, vec![one]);
    let a = BicomoduleAlgebra::new(h.clone(), Algebra::ground(), coact.clone(), coact).unwrap();
    let p = diagonal_crossed_product(&d, &a).unwrap();
    let dual = h.dual_hopf().unwrap();
    assert_eq!(p.algebra().mult(), dual.algebra().mult());
}

#[test]
fn diagonal_product_rejects_a_broken_bicomodule_algebra() {
    let d = d4::<Q>();
    let h = d.base.clone();
    let zero = LinMap::zero(4, 16);
    let a = BicomoduleAlgebra::new(h.clone(), h.algebra().clone(), zero, h.coalgebra().comult().clone()).unwrap();
    assert!(matches!(diagonal_crossed_product(&d, &a), Err(Error::AxiomFailure { .. })));
}

#[test]
fn trivial_cocycle_extends_to_the_trivial_cocycle() {
    let d = d4::<Q>();
    let e = Cocycle2::trivial(d.base.clone()).unwrap();
    let bar = extend_cocycle_to_double(&d, &e).unwrap();
    assert_eq!(bar, Cocycle2::trivial(d.hopf.clone()).unwrap());
    assert!(verify_exte(&d, &e).passed());
    let r = double_s1_s2(&d, &e).unwrap();
    assert!(r.passed());
    // S̄₁ = S̄ and S̄₂ = S̄⁻¹ in the trivial case
    assert_eq!(&s1_map(&bar).unwrap(), d.hopf.antipode());
    assert_eq!(&s2_map(&bar).unwrap(), d.hopf.antipode_inverse());
}

#[test]
fn extension_of_sigma_one_is_lazy_and_restricts_to_sigma() {
    let d = d4::<F5>();
    let s = sweedler_lazy_cocycle(&d.base, F5::new(1)).unwrap();
    let bar = extend_cocycle_to_double(&d, &s).unwrap();
    assert!(bar.is_lazy());
    assert!(bar.is_left_cocycle());
    assert!(bar.is_normalized());
    for i in 0..4 {
        for j in 0..4 {
            let x = d.embed_h(&unit_vector(4, i));
            let y = d.embed_h(&unit_vector(4, j));
            assert_eq!(bar.eval(&x, &y), *s.value(i, j));
        }
    }
    let inv = extended_inverse(&d, &s).unwrap();
    assert_eq!(bar.inverse().unwrap(), &inv);
}

#[test]
fn extension_needs_a_lazy_cocycle() {
    let d = d4::<F5>();
    let bad = crate::fixtures::sweedler_table_with_positive_corner(&d.base, F5::new(1)).unwrap();
    assert!(matches!(extend_cocycle_to_double(&d, &bad), Err(Error::Precondition(_))));
    assert!(!verify_exte(&d, &bad).passed());
}

#[test]
fn exte_holds_for_sigma_one_and_two() {
    let d = d4::<F5>();
    for t in [1, 2] {
        let s = sweedler_lazy_cocycle(&d.base, F5::new(t)).unwrap();
        let r = verify_exte(&d, &s);
        assert!(r.passed(), "{}", r.render_text());
    }
}

#[test]
fn mutated_extension_is_caught_with_its_basis_pair() {
    let d = d4::<F5>();
    let s = sweedler_lazy_cocycle(&d.base, F5::new(1)).unwrap();
    let bar = extend_cocycle_to_double(&d, &s).unwrap();
    let (x, y) = (d.index(1, 2), d.index(0, 3));
    let mut m = bar.matrix().clone();
    m[(x, y)] += F5::one();
    let mutated = Cocycle2::new(d.hopf.clone(), m).unwrap();
    let r = compare_exte(&d, &s, &mutated);
    assert!(!r.passed());
    let leaf = r.find("H*⋈H(σ) = D(H)(σ̄) as algebras").unwrap();
    assert!(!leaf.passed());
    let rederived = r.find("σ̄(x,y) = ε_D(x⋈y)").unwrap();
    assert_eq!(rederived.failures, 1);
    assert_eq!(rederived.witnesses[0].at, d.hopf.names(&[x, y]));
}

#[test]
fn closed_forms_of_the_extended_s1_s2() {
    let d = d4::<F5>();
    let s = sweedler_lazy_cocycle(&d.base, F5::new(1)).unwrap();
    let r = double_s1_s2(&d, &s).unwrap();
    assert!(r.passed(), "{}", r.render_text());

    let h = Arc::new(group_algebra::<F3>(2).unwrap());
    let d = drinfeld_double(&h).unwrap();
    let lazy = enumerate_lazy_cocycles(&h, 1000).unwrap();
    for s in &lazy.elements {
        assert!(double_s1_s2(&d, s).unwrap().passed());
    }
}

#[test]
fn exte_for_every_lazy_cocycle_of_h4_over_f5_and_f7() {
    let d = d4::<F5>();
    for s in enumerate_lazy_cocycles(&d.base, 10_000).unwrap().elements {
        assert!(verify_exte(&d, &s).passed(), "{s}");
    }
    let d = d4::<F7>();
    for s in enumerate_lazy_cocycles(&d.base, 10_000).unwrap().elements {
        assert!(verify_exte(&d, &s).passed(), "{s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn extension_respects_convolution(t in 0i64..5, u in 0i64..5) {
        let d = d4::<F5>();
        let s = sweedler_lazy_cocycle(&d.base, F5::new(t)).unwrap();
        let v = sweedler_lazy_cocycle(&d.base, F5::new(u)).unwrap();
        let sv = s.convolve(&v).unwrap();
        let lhs = extend_cocycle_to_double(&d, &sv).unwrap();
        let rhs = extend_cocycle_to_double(&d, &s).unwrap()
            .convolve(&extend_cocycle_to_double(&d, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs.matrix().as_slice(), rhs.matrix().as_slice());
    }
}
