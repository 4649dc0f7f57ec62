//! Resolving a command-line target into a document or fixture.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use lazy_hopf::biproduct::{AdmissiblePair, YdCocycle2};
use lazy_hopf::cocycle::Cocycle2;
use lazy_hopf::fixtures::{hopf_by_name, sweedler_h4, sweedler_lazy_cocycle, theta, yd_pair_h4};
use lazy_hopf::hopf::HopfAlgebra;
use lazy_hopf::io::{self, CocycleDocument, HopfDocument, PairDocument, ProjectiveRepDocument, YdDocument};
use lazy_hopf::lift::ProjectiveRep;
use lazy_hopf::scalar::FieldSpec;
use lazy_hopf::yd::YdModule;
use lazy_hopf::Field;
use serde_json::Value;

use crate::Failure;

pub enum Source {
    File { path: String, text: String, value: Value },
    Fixture(String),
}

impl Source {
    pub fn open(arg: &str) -> Result<Source, Failure> {
        if arg.ends_with(".json") || Path::new(arg).is_file() {
            let text = fs::read_to_string(arg).map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
            let value: Value = io::parse_json(&text).map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
            Ok(Source::File { path: arg.to_string(), text, value })
        } else {
            Ok(Source::Fixture(arg.to_string()))
        }
    }

    /// The explicit field, else the first `"field"` declared in the
    /// document, else `q`.
    pub fn field(&self, explicit: Option<FieldSpec>) -> Result<FieldSpec, Failure> {
        if let Some(f) = explicit {
            return Ok(f);
        }
        match self {
            Source::File { value, path, .. } => match find_field(value) {
                Some(s) => s.parse().map_err(|e| Failure::usage(format!("{path}: {e}"))),
                None => Ok(FieldSpec::Rationals),
            },
            Source::Fixture(_) => Ok(FieldSpec::Rationals),
        }
    }
}

fn find_field(v: &Value) -> Option<&str> {
    match v {
        Value::Object(map) => {
            if let Some(Value::String(s)) = map.get("field") {
                return Some(s);
            }
            map.values().find_map(find_field)
        }
        _ => None,
    }
}

pub enum Target<F> {
    /// Possibly unverified, so that `verify` can report what fails.
    Hopf(HopfAlgebra<F>),
    Cocycle(Cocycle2<F>),
    Pair(Arc<AdmissiblePair<F>>),
    YdCocycle(YdCocycle2<F>),
    Yd(YdModule<F>),
    Rep(ProjectiveRep<F>),
}

impl<F: Field> Target<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Target::Hopf(_) => "Hopf algebra",
            Target::Cocycle(_) => "cocycle",
            Target::Pair(_) => "admissible pair",
            Target::YdCocycle(_) => "Yetter-Drinfeld cocycle",
            Target::Yd(_) => "Yetter-Drinfeld module",
            Target::Rep(_) => "projective representation",
        }
    }
}

fn in_file<T>(path: &str, r: lazy_hopf::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let f = Failure::from(e);
        Failure { message: format!("{path}: {}", f.message), ..f }
    })
}

/// `name(arg)` into `arg`.
fn call_arg<'a>(name: &'a str, fun: &str) -> Option<&'a str> {
    name.strip_prefix(fun)?.strip_prefix('(')?.strip_suffix(')')
}

fn scalar<F: Field>(text: &str) -> Result<F, Failure> {
    F::parse_scalar(text).map_err(|e| Failure::usage(e.to_string()))
}

pub fn load<F: Field>(src: &Source) -> Result<Target<F>, Failure> {
    match src {
        Source::File { path, text, value } => {
            let has = |k: &str| value.get(k).is_some();
            if has("T") {
                let doc: ProjectiveRepDocument = in_file(path, io::parse_json(text))?;
                Ok(Target::Rep(in_file(path, io::rep_from_document(&doc))?))
            } else if has("sigma") && has("coaction") {
                let doc: YdDocument = in_file(path, io::parse_json(text))?;
                Ok(Target::Yd(in_file(path, io::yd_from_document(&doc))?))
            } else if has("b") && has("action") {
                let doc: PairDocument = in_file(path, io::parse_json(text))?;
                Ok(Target::Pair(Arc::new(in_file(path, io::pair_from_document(&doc))?)))
            } else if has("matrix") {
                let doc: CocycleDocument = in_file(path, io::parse_json(text))?;
                Ok(Target::Cocycle(in_file(path, io::cocycle_from_document(&doc))?))
            } else if has("antipode") {
                let doc: HopfDocument = in_file(path, io::parse_json(text))?;
                Ok(Target::Hopf(in_file(path, io::hopf_from_document(&doc))?))
            } else {
                Err(Failure::usage(format!("{path}: not a recognized document")))
            }
        }
        Source::Fixture(name) => fixture(name),
    }
}

fn fixture<F: Field>(name: &str) -> Result<Target<F>, Failure> {
    if name == "yd_pair_h4" {
        return Ok(Target::Pair(Arc::new(yd_pair_h4()?)));
    }
    if let Some(t) = call_arg(name, "sigma_t") {
        let h = Arc::new(sweedler_h4()?);
        return Ok(Target::Cocycle(sweedler_lazy_cocycle(&h, scalar(t)?)?));
    }
    if let Some(s) = call_arg(name, "theta") {
        let pair = Arc::new(yd_pair_h4()?);
        return Ok(Target::YdCocycle(theta(&pair, scalar(s)?)?));
    }
    Ok(Target::Hopf(hopf_by_name(name)?))
}
