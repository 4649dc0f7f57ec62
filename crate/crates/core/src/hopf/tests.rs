use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::fixtures::{group_algebra, sweedler_h4};
use crate::scalar::{Fp, Rational};

type Q = Rational;

fn h4() -> HopfAlgebra<Q> {
    sweedler_h4().unwrap()
}

#[test]
fn group_algebra_passes() {
    let mut h = group_algebra::<Fp<3>>(2).unwrap();
    let report = h.check_hopf();
    assert!(report.passed(), "{}", report.render_text());
    assert!(h.is_cocommutative());
}

#[test]
fn h4_passes_with_non_involutive_antipode() {
    let mut h = h4();
    let report = h.check_hopf();
    assert!(report.passed());
    assert!(!h.is_cocommutative());
    assert!(!h.algebra().is_commutative());
    assert_ne!(h.antipode().compose(h.antipode()), LinMap::identity(4));
    assert_eq!(h.antipode().compose(h.antipode_inverse()), LinMap::identity(4));
}

#[test]
fn identity_antipode_fails_at_x() {
    let mut bad = h4().with_antipode(LinMap::identity(4));
    let report = bad.check_hopf();
    assert!(!report.passed());
    assert!(!bad.is_verified());
    let law = report.find("antipode law S(h1)h2 = eps(h)1").unwrap();
    assert!(law.witnesses.iter().any(|w| w.at == vec!["X".to_string()]));
    assert!(matches!(bad.dual_hopf(), Err(Error::Unverified(_))));
}

#[test]
fn tensor_coalgebra_of_h4() {
    let h = h4();
    let c = tensor_coalgebra(h.coalgebra(), h.coalgebra());
    assert_eq!(c.dim(), 16);
    assert!(c.check_coalgebra().iter().all(Report::passed));
    let x = h.index_of("X").unwrap();
    // Δ(X⊗X) = (1⊗X + X⊗G) ⊗ (1⊗X + X⊗G), shuffled: four terms
    assert_eq!(c.comult().column(x * 4 + x).len(), 4);
}

#[test]
fn convolution_unit_and_antipode() {
    let h = h4();
    let (c, a) = (h.coalgebra(), h.algebra());
    let id = ConvElement::new(c, a, LinMap::identity(4)).unwrap();
    let s = ConvElement::new(c, a, h.antipode().clone()).unwrap();
    let u = ConvElement::unit(c, a);
    assert_eq!(convolve(&id, &u).unwrap().map, id.map);
    assert_eq!(convolve(&u, &s).unwrap().map, s.map);
    assert!(convolve(&id, &s).unwrap().is_unit());
    assert!(convolve(&s, &id).unwrap().is_unit());
    assert_eq!(convolution_inverse(&id).unwrap().map, s.map);
}

#[test]
fn convolution_rejects_mismatched_domains() {
    let h = h4();
    let k = group_algebra::<Q>(4).unwrap();
    let f = ConvElement::unit(h.coalgebra(), h.algebra());
    let g = ConvElement::unit(k.coalgebra(), k.algebra());
    assert!(matches!(convolve(&f, &g), Err(Error::ConvolutionMismatch)));
}

#[test]
fn functional_vanishing_on_grouplike_has_no_inverse() {
    let h = h4();
    let ground = Algebra::ground();
    // γ(1) = 1, γ(G) = 0: γ*γ'(G) = γ(G)γ'(G) = 0 ≠ 1
    let gamma = LinMap::from_columns(1, vec![vec![Q::one()], vec![Q::zero()], vec![Q::one()], vec![Q::zero()]]);
    let f = ConvElement::new(h.coalgebra(), &ground, gamma).unwrap();
    assert!(matches!(convolution_inverse(&f), Err(Error::NoInverse)));
}

#[test]
fn duals() {
    let k = group_algebra::<Q>(2).unwrap();
    let kd = k.dual_hopf().unwrap();
    assert!(kd.algebra().is_commutative());
    assert_eq!(kd.basis()[1], "p_g");
    let h = h4();
    let hd = h.dual_hopf().unwrap();
    assert!(hd.is_verified());
    assert_eq!(hd.provenance().unwrap()["construction"], "dual");
    assert_eq!(hd.dual_hopf().unwrap(), h);
}

#[test]
fn co_opposite_coproduct_of_x() {
    let h = h4();
    let cop = h.op_cop_variant(Variant::Cop).unwrap();
    let x = h.index_of("X").unwrap();
    let g = h.index_of("G").unwrap();
    let mut expected = vec![Q::zero(); 16];
    expected[x * 4] = Q::one();
    expected[g * 4 + x] = Q::one();
    assert_eq!(cop.coalgebra().comult().column_dense(x), expected);
    assert_eq!(cop.antipode(), h.antipode_inverse());
}

#[test]
fn op_and_op_cop_pass() {
    let h = h4();
    for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
        assert!(h.op_cop_variant(v).unwrap().is_verified());
    }
    assert_eq!(h.op_cop_variant(Variant::OpCop).unwrap().antipode(), h.antipode());
}

#[test]
fn module_checks() {
    let h = h4();
    assert!(ModuleData::regular(h.algebra()).check_module().passed());
    let trivial = ModuleData::through_character(h.algebra(), h.coalgebra().counit());
    assert!(trivial.check_module().passed());
    // G acting by 2 is not a module: G² = 1 acts by 4
    let mut chi = h.coalgebra().counit().to_vec();
    chi[1] = Q::from_i64(2);
    let bad = ModuleData::through_character(h.algebra(), &chi);
    let report = bad.check_module();
    assert!(!report.passed());
    assert_eq!(report.failing_leaves()[0].name, "module associativity");
}

fn arb_map(n: usize) -> impl Strategy<Value = LinMap<Fp<5>>> {
    proptest::collection::vec(0i64..5, n * n)
        .prop_map(move |v| LinMap::from_fn(n, n, |j| (0..n).map(|i| Fp::new(v[i * n + j])).collect()))
}

proptest! {
    #[test]
    fn convolution_is_associative(f in arb_map(4), g in arb_map(4), k in arb_map(4)) {
        let h = sweedler_h4::<Fp<5>>().unwrap();
        let (c, a) = (h.coalgebra(), h.algebra());
        let f = ConvElement::new(c, a, f).unwrap();
        let g = ConvElement::new(c, a, g).unwrap();
        let k = ConvElement::new(c, a, k).unwrap();
        let left = convolve(&convolve(&f, &g).unwrap(), &k).unwrap();
        let right = convolve(&f, &convolve(&g, &k).unwrap()).unwrap();
        prop_assert_eq!(left.map, right.map);
    }
}
