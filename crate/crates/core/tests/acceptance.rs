//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::sync::Arc;

use lazy_hopf::biproduct::{
    check_admissible, extend_yd_cocycle, extend_yd_gamma, extension_homomorphism, hopf_map_report, pullback_cocycle,
    radford_biproduct, theta_family_map, AdmissiblePair, YdCocycle1,
};
use lazy_hopf::cocycle::{enumerate_lazy_cocycles, enumerate_lazy_gammas, identity_suite, Cocycle1, Cocycle2};
use lazy_hopf::double::{compare_exte, double_s1_s2, drinfeld_double, extend_cocycle_to_double, verify_exte};
use lazy_hopf::fixtures::{
    group_algebra, h4_from_biproduct, sweedler_h4, sweedler_lazy_cocycle, sweedler_table_with_positive_corner, taft9,
    theta, yd_pair_h4,
};
use lazy_hopf::hopf::{dot, HopfAlgebra};
use lazy_hopf::lift::{central_extension, lift, twist_by_u, ProjectiveRep};
use lazy_hopf::yd::{check_yd, dh_action_coincide, dual_type1, dual_type2, end_algebra, end_op_algebra, YdModule};
use lazy_hopf::{Field, LinMap, Report, F3, F5, F7, Q, QZeta3};
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok(r: &Report) -> Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        Err(r.render_text())
    }
}

fn leaf<'a>(r: &'a Report, name: &str) -> Result<&'a Report, String> {
    r.find(name).ok_or_else(|| format!("no check named {name:?}"))
}

/// A failing leaf that carries a witness.
fn caught(r: &Report) -> bool {
    !r.passed() && r.failing_leaves().iter().any(|l| !l.witnesses.is_empty())
}

fn h4<F: Field>() -> Arc<HopfAlgebra<F>> {
    Arc::new(sweedler_h4().unwrap())
}

fn axioms<F: Field>(label: &str, mut h: HopfAlgebra<F>) -> Result<usize, String> {
    let r = h.check_hopf();
    ensure!(r.passed(), "{label}: {}", r.render_text());
    Ok(r.total_checked())
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    checked += axioms("kZ2", group_algebra::<Q>(2).unwrap())?;
    checked += axioms("kZ3", group_algebra::<Q>(3).unwrap())?;
    checked += axioms("H4/Q", sweedler_h4::<Q>().unwrap())?;
    checked += axioms("H4/F5", sweedler_h4::<F5>().unwrap())?;
    checked += axioms("H9/Q(ζ3)", taft9::<QZeta3>().unwrap())?;
    checked += axioms("H9/F7", taft9::<F7>().unwrap())?;
    let kz2 = Arc::new(group_algebra::<Q>(2).unwrap());
    checked += axioms("D(kZ2)", (*drinfeld_double(&kz2).unwrap().hopf).clone())?;
    checked += axioms("D(H4)", (*drinfeld_double(&h4::<Q>()).unwrap().hopf).clone())?;
    let bp = radford_biproduct(&Arc::new(yd_pair_h4::<Q>().unwrap())).unwrap();
    checked += axioms("biproduct", (*bp.hopf).clone())?;
    let ext = central_extension(&h4::<F5>(), 10_000).map_err(|e| e.to_string())?;
    ensure!(ext.b.dim() == 20, "central extension has dim {}", ext.b.dim());
    checked += axioms("central extension", (*ext.b).clone())?;
    Ok(format!("10 Hopf algebras, {checked} checks"))
}

fn criterion_2() -> Outcome {
    let h = h4::<F5>();
    let g = enumerate_lazy_cocycles(&h, 10_000).map_err(|e| e.to_string())?;
    ensure!(g.order() == 5, "found {} lazy cocycles", g.order());
    ensure!(g.is_isomorphic_to_prime_field(5), "group is not (F5,+)");
    let gammas = enumerate_lazy_gammas(&h, 10_000).map_err(|e| e.to_string())?;
    ok(&g.coboundary_report(&gammas).map_err(|e| e.to_string())?)?;
    ensure!(gammas.len() == 1, "{} lazy 1-cochains, expected only ε", gammas.len());
    // The enumerated family is σ_t with σ(GX,GX) = −t/2. The table with
    // +t/2 in that corner is not a cocycle for t ≠ 0.
    let (gx, half) = (3, F5::from_i64(3));
    for t in 0..5 {
        let s = sweedler_lazy_cocycle(&h, F5::from_i64(t)).unwrap();
        ensure!(g.position(&s).is_some(), "σ_{t} missing from the enumeration");
        ensure!(*s.value(gx, gx) == -(F5::from_i64(t) * half), "σ_{t}(GX,GX) is not −t/2");
    }
    let plus = sweedler_table_with_positive_corner(&h, F5::one()).unwrap();
    ensure!(!plus.is_left_cocycle() && g.position(&plus).is_none(), "the +t/2 corner table is a cocycle");
    Ok("order 5, ≅ (F5,+), B²_L trivial; sign discrepancy: enumeration has σ(GX,GX) = −t/2, the +t/2 corner table fails the cocycle law".into())
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let h = h4::<F5>();
    for s in enumerate_lazy_cocycles(&h, 10_000).unwrap().elements {
        let r = identity_suite(&s).map_err(|e| e.to_string())?;
        ok(&r)?;
        checked += r.total_checked();
    }
    let z2 = Arc::new(group_algebra::<F3>(2).unwrap());
    let lazy = enumerate_lazy_cocycles(&z2, 1_000).unwrap();
    for s in &lazy.elements {
        let r = identity_suite(s).map_err(|e| e.to_string())?;
        ok(&r)?;
        checked += r.total_checked();
    }
    Ok(format!("5 + {} cocycles, {checked} checks", lazy.order()))
}

fn criterion_4() -> Outcome {
    let d = drinfeld_double(&h4::<F5>()).unwrap();
    for t in 0..5 {
        let s = sweedler_lazy_cocycle(&d.base, F5::from_i64(t)).unwrap();
        let r = verify_exte(&d, &s);
        ok(&r)?;
        ensure!(leaf(&r, "H*⋈H(σ) = D(H)(σ̄) as algebras")?.checked == 256, "t = {t}: not every basis pair compared");
        ensure!(leaf(&r, "σ̄(x,y) = ε_D(x⋈y)")?.passed(), "t = {t}: re-derived σ̄ differs");
        ok(&double_s1_s2(&d, &s).map_err(|e| e.to_string())?)?;
    }
    Ok("σ_t for t ∈ F5 on D(H4), 256 basis pairs each".into())
}

fn criterion_5() -> Outcome {
    let pair = Arc::new(yd_pair_h4::<F5>().unwrap());
    ok(&check_admissible(&pair))?;
    let bp = radford_biproduct(&pair).map_err(|e| e.to_string())?;
    let h = h4::<F5>();
    let phi = h4_from_biproduct(&h).unwrap();
    ok(&hopf_map_report(&bp.hopf, &h, &phi))?;
    let family: Vec<_> = (0..5).map(|s| theta(&pair, F5::from_i64(s)).unwrap()).collect();
    for t in &family {
        let e = extend_yd_cocycle(&bp, t).map_err(|e| e.to_string())?;
        ok(&e.report)?;
        for u in &family {
            ok(&extension_homomorphism(&bp, t, u).map_err(|e| e.to_string())?)?;
        }
    }
    let gamma = YdCocycle1::new(pair.clone(), vec![F5::one(), F5::zero()]).unwrap();
    let (_, r) = extend_yd_gamma(&bp, &gamma).map_err(|e| e.to_string())?;
    ok(&r)?;
    let group = enumerate_lazy_cocycles(&h, 10_000).unwrap();
    let img = theta_family_map(&bp, &phi, &family, &group).map_err(|e| e.to_string())?;
    ok(&img.report)?;
    ensure!(img.homomorphism && img.injective, "θ ↦ σ̄ is not an injective homomorphism");
    Ok("transport exact, extension bundle for θ_s, s ∈ F5, θ ↦ σ̄ injective".into())
}

fn criterion_6() -> Outcome {
    let pair = Arc::new(yd_pair_h4::<F3>().unwrap());
    let bp = radford_biproduct(&pair).unwrap();
    let lazy = enumerate_lazy_cocycles(pair.hopf(), 1_000).unwrap();
    for s in &lazy.elements {
        let p = pullback_cocycle(&bp, s).map_err(|e| e.to_string())?;
        ok(&p.report)?;
        ensure!(leaf(&p.report, "(B×H)_σ̃ = B▶<H_σ as algebras")?.checked == 16, "not every basis pair compared");
    }
    Ok(format!("{} lazy cocycles on kZ2 over F3", lazy.order()))
}

fn criterion_7() -> Outcome {
    let h = h4::<F5>();
    for s in enumerate_lazy_cocycles(&h, 10_000).unwrap().elements {
        let m = YdModule::regular(s.clone()).map_err(|e| e.to_string())?;
        ok(&check_yd(&m))?;
        let inv = s.inverse().map_err(|e| e.to_string())?;
        for d in [dual_type1(&m), dual_type2(&m)] {
            let d = d.map_err(|e| e.to_string())?;
            ok(&check_yd(&d))?;
            ensure!(d.sigma() == inv, "dual does not live over σ⁻¹");
        }
        ok(&end_algebra(&m).map_err(|e| e.to_string())?.report)?;
        ok(&end_op_algebra(&m).map_err(|e| e.to_string())?.report)?;
        ok(&dh_action_coincide(&m).map_err(|e| e.to_string())?)?;
    }
    Ok("regular object, both duals, End and End^op, D(H) actions for 5 cocycles".into())
}

fn criterion_8() -> Outcome {
    let h = h4::<F5>();
    let e = central_extension(&h, 10_000).map_err(|e| e.to_string())?;
    ok(&e.report)?;
    ensure!(e.group.order() == 5 && e.a.dim() == 5 && e.b.dim() == 20, "wrong sizes");
    for t in 0..5 {
        let s = sweedler_lazy_cocycle(&h, F5::from_i64(t)).unwrap();
        let rep = ProjectiveRep::regular_twisted(&s).map_err(|e| e.to_string())?;
        let l = lift(&rep, &e).map_err(|e| e.to_string())?;
        ok(&l.report)?;
        // 400 basis pairs plus X(1) = id.
        ensure!(leaf(&l.report, "X(bb') = X(b)X(b')")?.checked == 401, "t = {t}: not 400 pairs");
        ensure!(leaf(&l.report, "X = γ*(T∘π)")?.checked == 20, "t = {t}: not 20 elements");
        let lam_sigma = Cocycle2::from_fn(h.clone(), |p, q| dot(&l.lambda, &e.sigma.column_dense(p * 4 + q))).unwrap();
        ensure!(lam_sigma == *rep.alpha(), "t = {t}: λ∘σ ≠ α");
    }
    Ok("|G| = 5, dim A = 5, dim B = 20, five lifts".into())
}

fn criterion_9() -> Outcome {
    let h = h4::<F5>();
    let s = sweedler_lazy_cocycle(&h, F5::one()).unwrap();
    let rep = ProjectiveRep::regular_twisted(&s).map_err(|e| e.to_string())?;
    let u = Cocycle1::new(h.clone(), [1, -1, 2, 3].map(F5::from_i64).to_vec()).unwrap();
    let w = twist_by_u(&rep, &u).map_err(|e| e.to_string())?;
    let expected = u.d1().unwrap().convolve(&s).unwrap();
    ensure!(*w.alpha() == expected, "twist_by_u cocycle differs from d1(u)*α");
    ensure!(w.derived_cocycle().unwrap() == expected, "cocycle solved from W differs");
    for t in 0..5 {
        let st = sweedler_lazy_cocycle(&h, F5::from_i64(t)).unwrap();
        let minus = sweedler_lazy_cocycle(&h, F5::from_i64(-t)).unwrap();
        ensure!(*st.inverse().unwrap() == minus, "σ_{t}⁻¹ ≠ σ_{}", -t);
    }

    let mut caught_in = Vec::new();
    // Hopf axioms: G·G = 2·1.
    let mut bad = (*h).clone().with_mult(h.algebra().mult().with_entry(0, 5, F5::from_i64(2))).unwrap();
    ensure!(caught(&bad.check_hopf()), "hopf suite missed a corrupted product");
    caught_in.push("hopf");
    // Cocycle law: flip σ(GX,GX).
    let mut m = s.matrix().clone();
    m[(3, 3)] = -m[(3, 3)];
    let broken = Cocycle2::new(h.clone(), m).unwrap();
    ensure!(caught(&broken.flags_report()), "cocycle suite missed a flipped entry");
    caught_in.push("cocycle");
    // Admissibility: ρ(x) = 1⊗x.
    let pair = yd_pair_h4::<F5>().unwrap();
    let coaction = LinMap::from_triplets(2, 4, [(0, 0, F5::one()), (1, 1, F5::one())]);
    let bad_pair = AdmissiblePair::new(
        pair.hopf().clone(),
        pair.algebra().clone(),
        pair.coalgebra().clone(),
        pair.action().clone(),
        coaction,
    )
    .unwrap();
    ensure!(caught(&check_admissible(&bad_pair)), "admissible suite missed a changed coaction");
    caught_in.push("admissible");
    // YD compatibility: one coaction entry moved.
    let reg = YdModule::regular(s.clone()).unwrap();
    let moved = reg.coaction().with_entry(0, 2, F5::one());
    ensure!(caught(&check_yd(&reg.with_coaction(moved).unwrap())), "yd suite missed a changed coaction");
    caught_in.push("yd");
    // Drinfeld extension: one entry of σ̄ bumped.
    let d = drinfeld_double(&h).unwrap();
    let bar = extend_cocycle_to_double(&d, &s).unwrap();
    let (x, y) = (d.index(1, 2), d.index(0, 3));
    let mut m = bar.matrix().clone();
    m[(x, y)] += F5::one();
    let bumped = Cocycle2::new(d.hopf.clone(), m).unwrap();
    ensure!(caught(&compare_exte(&d, &s, &bumped)), "extension check missed a bumped entry");
    caught_in.push("exte");
    // Projective representation: one matrix entry of T(X).
    let mut t = rep.matrices().to_vec();
    t[2][(0, 1)] += F5::one();
    match ProjectiveRep::new(h.clone(), t, s.clone()) {
        Err(lazy_hopf::Error::AxiomFailure { report, .. }) => ensure!(caught(&report), "no witness for corrupted T"),
        _ => return Err("corrupted T was accepted".into()),
    }
    caught_in.push("projective");
    Ok(format!("twist and inverses agree; mutations caught in {}", caught_in.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suites", criterion_1),
        ("lazy group of H4 over F5", criterion_2),
        ("identity suite", criterion_3),
        ("Drinfeld double extension", criterion_4),
        ("biproduct", criterion_5),
        ("pullback cocycle", criterion_6),
        ("Yetter-Drinfeld suite", criterion_7),
        ("lifting", criterion_8),
        ("cross-module consistency", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("PASS criterion {}: {name} ({note})", k + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}\n{why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
