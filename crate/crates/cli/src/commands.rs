use std::fs;
use std::sync::Arc;

use lazy_hopf::biproduct::{
    check_admissible, extend_yd_cocycle, hopf_map_report, radford_biproduct, theta_family_map, AdmissiblePair,
};
use lazy_hopf::cocycle::{enumerate_lazy_cocycles, identity_suite, Cocycle2, LazyGroup, TwistMode};
use lazy_hopf::double::{
    diagonal_crossed_product, double_s1_s2, drinfeld_double, extend_cocycle_to_double, verify_exte,
};
use lazy_hopf::fixtures::{h4_from_biproduct, sweedler_h4, theta, yd_pair_h4};
use lazy_hopf::hopf::HopfAlgebra;
use lazy_hopf::io::{self, ScalarText};
use lazy_hopf::lift::{central_extension, lift, ProjectiveRep};
use lazy_hopf::scalar::FieldSpec;
use lazy_hopf::yd::{check_yd, dh_action_coincide, dual_type1, dual_type2, end_algebra, end_op_algebra, YdModule};
use lazy_hopf::{Check, Cyclotomic, Error, Field, Fp, Rational, Report, Status, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::targets::{load, Source, Target};
use crate::{Action, Cli, Command, Failure, Kind, Suite};

/// Runs `$body` with `$t` bound to the scalar type of a built-in field.
macro_rules! with_field {
    ($spec:expr, $t:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                type $t = Rational;
                $body
            }
            FieldSpec::PrimeField(2) => {
                type $t = Fp<2>;
                $body
            }
            FieldSpec::PrimeField(3) => {
                type $t = Fp<3>;
                $body
            }
            FieldSpec::PrimeField(5) => {
                type $t = Fp<5>;
                $body
            }
            FieldSpec::PrimeField(7) => {
                type $t = Fp<7>;
                $body
            }
            FieldSpec::PrimeField(11) => {
                type $t = Fp<11>;
                $body
            }
            FieldSpec::PrimeField(13) => {
                type $t = Fp<13>;
                $body
            }
            FieldSpec::Cyclotomic(3) => {
                type $t = Cyclotomic<3>;
                $body
            }
            FieldSpec::Cyclotomic(4) => {
                type $t = Cyclotomic<4>;
                $body
            }
            FieldSpec::Cyclotomic(6) => {
                type $t = Cyclotomic<6>;
                $body
            }
            FieldSpec::Cyclotomic(8) => {
                type $t = Cyclotomic<8>;
                $body
            }
            other => Err(Failure::usage(format!(
                "field {other} is not built in; use q, f2, f3, f5, f7, f11, f13, zeta3, zeta4, zeta6 or zeta8"
            ))),
        }
    };
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Verify { target, suite } => {
            let src = Source::open(target)?;
            with_field!(src.field(cli.field)?, K => verify::<K>(cli, target, load(&src)?, *suite))
        }
        Command::Construct { kind, input, output } => {
            let src = Source::open(input)?;
            let (report, doc) = with_field!(src.field(cli.field)?, K => construct::<K>(cli, *kind, load(&src)?))?;
            if report.passed() {
                match output {
                    Some(path) => fs::write(path, doc).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
                    None => print!("{doc}"),
                }
            }
            Ok(report)
        }
        Command::Cocycles { fixture, action } => {
            let src = Source::open(fixture)?;
            with_field!(src.field(cli.field)?, K => cocycles::<K>(cli, fixture, load(&src)?, *action))
        }
    }
}

/// Multiplicativity of `Δ`, `ε` and anti-multiplicativity of `S` on random
/// linear combinations.
fn spot_checks<F: Field>(h: &HopfAlgebra<F>, seed: u64) -> Report {
    let n = h.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = || -> Vec<F> { (0..n).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect() };
    let mut check = Check::new(format!("random elements (seed {seed})"));
    for k in 0..8 {
        let (x, y) = (random(), random());
        let xy = h.mul(&x, &y);
        let lhs = h.coalgebra().comul(&xy);
        let rhs = h.algebra().mul_tensor2(&h.coalgebra().comul(&x), &h.coalgebra().comul(&y));
        let s = |v: &[F]| h.antipode().apply(v);
        let anti = s(&xy) == h.mul(&s(&y), &s(&x));
        let eps = h.eps(&xy) == h.eps(&x) * h.eps(&y);
        check.record(lhs == rhs && anti && eps, || {
            Witness::new(vec![format!("sample {k}"), h.format(&x), h.format(&y)], "Δ, ε or S fails", "multiplicative")
        });
    }
    check.finish()
}

fn hopf_suite<F: Field>(h: &HopfAlgebra<F>, seed: u64) -> Report {
    let mut h = h.clone();
    let axioms = h.check_hopf();
    Report::group("hopf", vec![axioms, spot_checks(&h, seed)])
}

fn yd_suite<F: Field>(m: &YdModule<F>) -> Result<Report, Failure> {
    let duals = [("type 1 dual", dual_type1(m)?), ("type 2 dual", dual_type2(m)?)];
    let mut children = vec![check_yd(m)];
    for (name, d) in &duals {
        children.push(Report::group(*name, vec![check_yd(d)]));
    }
    children.push(end_algebra(m)?.report);
    children.push(end_op_algebra(m)?.report);
    children.push(dh_action_coincide(m)?);
    Ok(Report::group("yd", children))
}

fn not_applicable<F: Field>(target: &Target<F>, suite: Suite) -> Failure {
    Failure::usage(format!("suite {suite:?} does not apply to a {}", target.kind()).to_lowercase())
}

fn verify<F: Field>(cli: &Cli, name: &str, target: Target<F>, suite: Suite) -> Result<Report, Failure> {
    use Suite::*;
    let wants = |s: Suite| suite == s || suite == All;
    let mut children = Vec::new();
    match &target {
        Target::Hopf(h) => {
            if !matches!(suite, Hopf | All) {
                return Err(not_applicable(&target, suite));
            }
            children.push(hopf_suite(h, cli.seed));
        }
        Target::Cocycle(s) => {
            if suite == Admissible {
                return Err(not_applicable(&target, suite));
            }
            if wants(Hopf) {
                children.push(hopf_suite(s.hopf(), cli.seed));
            }
            if wants(Cocycle) {
                children.push(s.flags_report());
            }
            if wants(Identities) {
                children.push(identity_suite(s)?);
            }
            if wants(Yd) {
                children.push(yd_suite(&YdModule::regular(s.clone())?)?);
            }
        }
        Target::Pair(p) => {
            if !matches!(suite, Hopf | Admissible | All) {
                return Err(not_applicable(&target, suite));
            }
            if wants(Hopf) {
                children.push(hopf_suite(p.hopf(), cli.seed));
            }
            if wants(Admissible) {
                children.push(check_admissible(p));
            }
        }
        Target::YdCocycle(s) => {
            if !matches!(suite, Admissible | Cocycle | All) {
                return Err(not_applicable(&target, suite));
            }
            if wants(Admissible) {
                children.push(check_admissible(s.pair()));
            }
            if wants(Cocycle) {
                children.push(s.flags_report());
            }
        }
        Target::Yd(m) => {
            if !matches!(suite, Hopf | Cocycle | Yd | All) {
                return Err(not_applicable(&target, suite));
            }
            if wants(Hopf) {
                children.push(hopf_suite(m.hopf(), cli.seed));
            }
            if wants(Cocycle) {
                children.push(m.sigma().flags_report());
            }
            if wants(Yd) {
                children.push(yd_suite(m)?);
            }
        }
        Target::Rep(r) => {
            if !matches!(suite, Hopf | Cocycle | All) {
                return Err(not_applicable(&target, suite));
            }
            if wants(Hopf) {
                children.push(hopf_suite(r.hopf(), cli.seed));
            }
            if wants(Cocycle) {
                children.push(Report::group("cocycle", vec![r.report.clone(), r.alpha().flags_report()]));
            }
        }
    }
    Ok(Report::group(format!("verify {name} over {}", F::spec()), children))
}

fn hopf_input<F: Field>(target: Target<F>) -> Result<Arc<HopfAlgebra<F>>, Failure> {
    match target {
        Target::Hopf(h) => Ok(Arc::new(h.verified()?)),
        other => Err(Failure::usage(format!("expected a Hopf algebra, found a {}", other.kind()))),
    }
}

fn pair_input<F: Field>(target: Target<F>) -> Result<Arc<AdmissiblePair<F>>, Failure> {
    match target {
        Target::Pair(p) => Ok(p),
        // H₄ stands for the pair whose biproduct it is.
        Target::Hopf(h) if h == sweedler_h4()? => Ok(Arc::new(yd_pair_h4()?)),
        other => Err(Failure::usage(format!("expected an admissible pair, found a {}", other.kind()))),
    }
}

fn cocycle_input<F: Field>(target: Target<F>) -> Result<Cocycle2<F>, Failure> {
    match target {
        Target::Cocycle(s) => Ok(s),
        other => Err(Failure::usage(format!("expected a cocycle, found a {}", other.kind()))),
    }
}

fn construct<F: Field>(cli: &Cli, kind: Kind, target: Target<F>) -> Result<(Report, String), Failure> {
    match kind {
        Kind::Double => {
            let d = drinfeld_double(&hopf_input(target)?)?;
            Ok((d.report.clone(), io::to_json(&io::hopf_to_document(&d.hopf))))
        }
        Kind::Dual => {
            let h = hopf_input(target)?.dual_hopf()?;
            Ok((hopf_suite(&h, cli.seed), io::to_json(&io::hopf_to_document(&h))))
        }
        Kind::Diagonal => {
            let s = cocycle_input(target)?;
            let double = drinfeld_double(s.hopf())?;
            let twisted = s.twist(TwistMode::Lazy)?;
            let a = twisted.bicomodule.expect("lazy twists carry their coactions");
            let dp = diagonal_crossed_product(&double, &a)?;
            let provenance = json!({"construction": "diagonal_crossed_product", "of": s.hopf().name(), "sigma": io::cocycle_to_document(&s)});
            let doc = io::algebra_to_document(&format!("{}*⋈{}(σ)", s.hopf().name(), s.hopf().name()), dp.algebra(), Some(provenance));
            Ok((dp.report.clone(), io::to_json(&doc)))
        }
        Kind::Biproduct => {
            let pair = pair_input(target)?;
            let bp = radford_biproduct(&pair)?;
            let mut children = vec![check_admissible(&pair), hopf_suite(&bp.hopf, cli.seed)];
            if io::pair_to_document(&pair) == io::pair_to_document(&yd_pair_h4::<F>()?) {
                let h4 = sweedler_h4::<F>()?;
                let f = h4_from_biproduct(&h4)?;
                let transported = hopf_map_report(&bp.hopf, &h4, &f);
                children.push(Report::group("transported tensors equal H4 under 1×g↦G, x×g↦X", vec![transported]));
            }
            Ok((Report::group("biproduct", children), io::to_json(&io::hopf_to_document(&bp.hopf))))
        }
        Kind::Smash => {
            let pair = pair_input(target)?;
            let bp = radford_biproduct(&pair)?;
            let algebra = bp.hopf.algebra();
            let provenance = json!({"construction": "smash_product", "of": pair.hopf().name()});
            let doc = io::algebra_to_document(&format!("B#{}", pair.hopf().name()), algebra, Some(provenance));
            Ok((Report::group("smash product", algebra.check_algebra()), io::to_json(&doc)))
        }
        Kind::Extension => match target {
            Target::YdCocycle(s) => {
                let bp = radford_biproduct(s.pair())?;
                let ext = extend_yd_cocycle(&bp, &s)?;
                Ok((ext.report.clone(), io::to_json(&io::cocycle_to_document(&ext.sigma))))
            }
            other => {
                let s = cocycle_input(other)?;
                let double = drinfeld_double(s.hopf())?;
                let bar = extend_cocycle_to_double(&double, &s)?;
                let report = Report::group("extension to D(H)", vec![verify_exte(&double, &s), bar.flags_report()]);
                Ok((report, io::to_json(&io::cocycle_to_document(&bar))))
            }
        },
        Kind::Twist => {
            let s = cocycle_input(target)?;
            let twisted = s.twist(TwistMode::Lazy)?;
            let provenance = json!({"construction": "lazy_twist", "sigma": io::cocycle_to_document(&s)});
            let doc = io::algebra_to_document(&format!("{}(σ)", s.hopf().name()), &twisted.algebra, Some(provenance));
            Ok((twisted.report.clone(), io::to_json(&doc)))
        }
        Kind::CentralExtension => {
            let h = hopf_input(target)?;
            let ext = central_extension(&h, cli.bound)?;
            let pi: Vec<(usize, usize, ScalarText)> =
                ext.pi.triplets().map(|(s, t, v)| (s, t, ScalarText::Text(v.to_string()))).collect();
            let provenance = json!({
                "construction": "central_extension",
                "of": h.name(),
                "group_order": ext.group.order(),
                "pi": pi,
            });
            let b = (*ext.b).clone().with_provenance(provenance);
            Ok((ext.report.clone(), io::to_json(&io::hopf_to_document(&b))))
        }
    }
}

fn require_finite<F: Field>() -> Result<u64, Failure> {
    F::order().ok_or_else(|| Failure::from(Error::InfiniteField(F::spec())))
}

fn group_table<F: Field>(group: &LazyGroup<F>) -> Report {
    let p = F::order().unwrap_or(0);
    let rows = (0..group.order())
        .map(|i| {
            let row: Vec<String> = group.table[i].iter().map(|j| j.to_string()).collect();
            Report::leaf(format!("{i}: {}", row.join(" ")), Status::Pass)
        })
        .collect();
    Report::group("Cayley table", rows).with_note(format!(
        "order {}, identity {}, abelian {}, isomorphic to (F{p},+): {}",
        group.order(),
        group.identity,
        group.is_abelian(),
        group.is_isomorphic_to_prime_field(p)
    ))
}

fn cocycles<F: Field>(cli: &Cli, name: &str, target: Target<F>, action: Action) -> Result<Report, Failure> {
    require_finite::<F>()?;
    let title = format!("cocycles {name} over {}", F::spec());
    if action == Action::ExtendBiproduct {
        return extend_biproduct(&title, pair_input(target)?);
    }
    let h = hopf_input(target)?;
    let group = enumerate_lazy_cocycles(&h, cli.bound)?;
    let children = match action {
        Action::Enumerate => {
            let list = group
                .elements
                .iter()
                .enumerate()
                .map(|(i, s)| Report::leaf(format!("{i}: {s}"), Status::Pass))
                .collect();
            vec![
                group.report.clone(),
                Report::group("lazy 2-cocycles", list).with_note(format!("{} found", group.order())),
            ]
        }
        Action::GroupTable => vec![group.report.clone(), group_table(&group)],
        Action::ExtendDouble => {
            let double = drinfeld_double(&h)?;
            let mut out = vec![double.report.clone()];
            for (i, s) in group.elements.iter().enumerate() {
                out.push(Report::group(format!("σ{i}"), vec![verify_exte(&double, s), double_s1_s2(&double, s)?]));
            }
            out
        }
        Action::LiftDemo => {
            let ext = central_extension(&h, cli.bound)?;
            let mut out = vec![ext.report.clone()];
            for (i, s) in ext.group.elements.iter().enumerate() {
                let rep = ProjectiveRep::regular_twisted(s)?;
                let l = lift(&rep, &ext)?;
                out.push(Report::group(format!("σ{i}"), vec![rep.report.clone(), l.report]));
            }
            out
        }
        Action::ExtendBiproduct => unreachable!(),
    };
    Ok(Report::group(title, children))
}

fn extend_biproduct<F: Field>(title: &str, pair: Arc<AdmissiblePair<F>>) -> Result<Report, Failure> {
    let p = require_finite::<F>()?;
    let bp = radford_biproduct(&pair)?;
    let is_h4_pair = io::pair_to_document(&pair) == io::pair_to_document(&yd_pair_h4::<F>()?);
    if !is_h4_pair {
        return Err(Failure::usage("extend-biproduct runs the θ_s family of yd_pair_h4"));
    }
    let family = (0..p).map(|s| theta(&pair, F::nth_element(s))).collect::<lazy_hopf::Result<Vec<_>>>()?;
    let mut children = Vec::new();
    for (s, t) in family.iter().enumerate() {
        children.push(Report::group(format!("θ{s}"), vec![extend_yd_cocycle(&bp, t)?.report]));
    }
    let h4 = Arc::new(sweedler_h4::<F>()?);
    let group = enumerate_lazy_cocycles(&h4, u64::MAX)?;
    let f = h4_from_biproduct(&h4)?;
    let image = theta_family_map(&bp, &f, &family, &group)?;
    children.push(image.report);
    Ok(Report::group(title.to_string(), children))
}
