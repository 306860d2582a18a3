//! Implementations behind the `stanley` subcommands. Each returns the
//! JSON value to print; property violations surface as `CliError` with
//! the certificate attached so the process can exit 1.

use std::path::Path;

use serde_json::{json, Value};

use stanley_core::filtration::{
    classify, filtration_from_shelling, filtration_to_decomposition, substitute_filtration,
    verify_filtration,
};
use stanley_core::gorenstein::{
    build_template, facet_triples, instantiate, lex_less, lex_shelling, recognize,
    shelling_witness,
};
use stanley_core::homology::{depth_ideal, is_cohen_macaulay, CoefficientField};
use stanley_core::ideal::{MonomialIdeal, VarTable};
use stanley_core::partitions::{
    count_top_spaces, is_nice, r_vector, validate_decomposition, validate_partition,
};
use stanley_core::shelling::verify_shelling;
use stanley_core::complex::SimplicialComplex;

use crate::formats;
use crate::report::{self, AnalyzeOptions};
use crate::{fixtures, random, CliError, CliResult};

/// What the user pointed the command at.
pub enum Artifact {
    Fixture(String),
    ComplexFile(String),
    IdealFile(String),
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))
}

fn is_json_path(path: &str) -> bool {
    Path::new(path).extension().is_some_and(|e| e == "json")
}

pub fn load_complex(artifact: &Artifact) -> Result<(SimplicialComplex, Value), CliError> {
    match artifact {
        Artifact::Fixture(name) => {
            let fx = fixtures::lookup(name).map_err(CliError::Usage)?;
            Ok((fx.complex, json!({"kind": "fixture", "name": name})))
        }
        Artifact::ComplexFile(path) => {
            let text = read_file(path)?;
            let c = if is_json_path(path) {
                let v: Value = serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                formats::parse_complex_json(&v).map_err(CliError::Usage)?
            } else {
                formats::parse_complex_text(&text).map_err(CliError::Usage)?
            };
            Ok((c, json!({"kind": "complex", "path": path})))
        }
        Artifact::IdealFile(path) => {
            let (ideal, input) = load_ideal(artifact)?;
            let c = stanley_core::ideal::stanley_reisner_complex(&ideal)
                .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            Ok((c, input))
        }
    }
}

pub fn load_ideal(artifact: &Artifact) -> Result<(MonomialIdeal, Value), CliError> {
    match artifact {
        Artifact::Fixture(name) => {
            let fx = fixtures::lookup(name).map_err(CliError::Usage)?;
            Ok((fx.ideal, json!({"kind": "fixture", "name": name})))
        }
        Artifact::IdealFile(path) => {
            let text = read_file(path)?;
            let ideal = if is_json_path(path) {
                let v: Value = serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                formats::parse_ideal_json(&v).map_err(CliError::Usage)?
            } else {
                formats::parse_ideal_text(&text).map_err(CliError::Usage)?
            };
            Ok((ideal, json!({"kind": "ideal", "path": path})))
        }
        Artifact::ComplexFile(_) => {
            let (c, input) = load_complex(artifact)?;
            Ok((stanley_core::ideal::stanley_reisner_ideal(&c), input))
        }
    }
}

pub fn cmd_analyze(artifact: &Artifact, opts: AnalyzeOptions) -> CliResult {
    let (mut value, input) = match artifact {
        Artifact::IdealFile(_) => {
            let (ideal, input) = load_ideal(artifact)?;
            (report::analyze_ideal(&ideal, opts)?, input)
        }
        _ => {
            let (c, input) = load_complex(artifact)?;
            (report::analyze_complex(&c, opts)?, input)
        }
    };
    if let Value::Object(map) = &mut value {
        map.insert("input".into(), input);
    }
    Ok(value)
}

pub fn cmd_verify(kind: &str, artifact: &Artifact, object_path: &str) -> CliResult {
    let object_text = read_file(object_path)?;
    match kind {
        "partition" => {
            let (c, input) = load_complex(artifact)?;
            let p = formats::parse_partition_text(&object_text, &c).map_err(CliError::Usage)?;
            match validate_partition(&p) {
                Ok(()) => Ok(json!({
                    "kind": "partition",
                    "input": input,
                    "valid": true,
                    "intervals": p.intervals.len(),
                    "nice": is_nice(&p),
                    "r_vector": r_vector(&p).map_err(|e| CliError::Usage(e.to_string()))?.0,
                })),
                Err(v) => Err(CliError::Violation(json!({
                    "kind": "partition",
                    "input": input,
                    "valid": false,
                    "violation": v.to_string(),
                }))),
            }
        }
        "shelling" => {
            let (c, input) = load_complex(artifact)?;
            let order =
                formats::parse_shelling_text(&object_text, &c).map_err(CliError::Usage)?;
            match verify_shelling(&c, &order) {
                Ok(()) => Ok(json!({
                    "kind": "shelling",
                    "input": input,
                    "valid": true,
                    "facets": order.facets.len(),
                })),
                Err(v) => Err(CliError::Violation(json!({
                    "kind": "shelling",
                    "input": input,
                    "valid": false,
                    "violation": v.to_string(),
                }))),
            }
        }
        "decomposition" => {
            let (ideal, input) = load_ideal(artifact)?;
            let v: Value = serde_json::from_str(&object_text)
                .map_err(|e| CliError::Usage(format!("{object_path}: {e}")))?;
            let d = formats::parse_decomposition_json(&v, ideal.vars())
                .map_err(CliError::Usage)?;
            match validate_decomposition(&d, &ideal)
                .map_err(|e| CliError::Usage(e.to_string()))?
            {
                Ok(()) => Ok(json!({
                    "kind": "decomposition",
                    "input": input,
                    "valid": true,
                    "spaces": d.spaces.len(),
                    "sdepth": d.sdepth(),
                    "top_spaces": count_top_spaces(&d, &ideal),
                    "multiplicity": ideal.multiplicity(),
                })),
                Err(violation) => Err(CliError::Violation(json!({
                    "kind": "decomposition",
                    "input": input,
                    "valid": false,
                    "violation": violation.to_string(),
                    "multidegree": violation.multidegree,
                }))),
            }
        }
        "filtration" => {
            let (ideal, input) = load_ideal(artifact)?;
            let v: Value = serde_json::from_str(&object_text)
                .map_err(|e| CliError::Usage(format!("{object_path}: {e}")))?;
            let f = formats::parse_filtration_json(&v, &ideal).map_err(CliError::Usage)?;
            match verify_filtration(&f) {
                Ok(()) => {
                    let class = classify(&f).map_err(|e| CliError::Usage(e.to_string()))?;
                    Ok(json!({
                        "kind": "filtration",
                        "input": input,
                        "valid": true,
                        "steps": f.steps.len(),
                        "classification": class.label(),
                    }))
                }
                Err(violation) => Err(CliError::Violation(json!({
                    "kind": "filtration",
                    "input": input,
                    "valid": false,
                    "violation": violation.to_string(),
                }))),
            }
        }
        other => Err(CliError::Usage(format!(
            "unknown verification kind `{other}` (partition, decomposition, shelling, filtration)"
        ))),
    }
}

/// Parse a comma-separated monomial list like `x1^2,x2,x3*x4,x5,x6` into
/// monomials over a variable table inferred from the names used.
fn parse_substitution(s: &str) -> Result<(Vec<stanley_core::ideal::Monomial>, VarTable), CliError> {
    let pieces: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    let pseudo_ideal = pieces.join("\n");
    let parsed = formats::parse_ideal_text(&pseudo_ideal).map_err(CliError::Usage)?;
    // Reparse each piece against the inferred table so duplicates and
    // order are preserved exactly as written.
    let table = parsed.vars().clone();
    let mut us = Vec::new();
    for p in &pieces {
        us.push(formats::parse_monomial(p, &table).map_err(CliError::Usage)?);
    }
    Ok((us, table))
}

pub fn cmd_gorenstein(m: u32, subst: Option<&str>, check_witnesses: bool) -> CliResult {
    let (ideal, complex) =
        build_template(m).map_err(|e| CliError::Usage(e.to_string()))?;
    let order = lex_shelling(m).map_err(|e| CliError::Usage(e.to_string()))?;
    let shelling_ok = verify_shelling(&complex, &order).is_ok();
    let triples = facet_triples(m).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut out = serde_json::Map::new();
    out.insert("m".into(), json!(m));
    out.insert("ideal".into(), formats::ideal_to_json(&ideal));
    out.insert("complex".into(), formats::complex_to_json(&complex));
    out.insert(
        "facet_triples".into(),
        json!(triples.iter().map(|t| t.a.to_vec()).collect::<Vec<_>>()),
    );
    out.insert("lex_shelling".into(), json!(formats::shelling_lines(&complex, &order)));
    out.insert("shelling_verified".into(), json!(shelling_ok));

    if check_witnesses {
        let mut checked = 0u64;
        for f in &triples {
            for g in &triples {
                if lex_less(f, g) {
                    shelling_witness(f, g, m)
                        .map_err(|e| CliError::Violation(json!({"witness_gap": e.to_string()})))?;
                    checked += 1;
                }
            }
        }
        out.insert("witness_pairs_checked".into(), json!(checked));
        out.insert("witness_total".into(), json!(true));
    }

    let q = CoefficientField::Rationals;
    let cm = is_cohen_macaulay(&complex, q).map_err(|e| CliError::Usage(e.to_string()))?;
    out.insert("cohen_macaulay".into(), json!(cm));
    let h = complex.h_vector().map_err(|e| CliError::Usage(e.to_string()))?;
    let symmetric = h.0.iter().eq(h.0.iter().rev());
    out.insert("h_vector".into(), json!(h.0));
    out.insert("h_symmetric".into(), json!(symmetric));
    out.insert(
        "codimension".into(),
        json!(ideal.n_vars() as i64 - ideal.krull_dim().unwrap_or(0)),
    );

    if let Some(s) = subst {
        let (us, table) = parse_substitution(s)?;
        let image = instantiate(m, &us, &table).map_err(|e| CliError::Usage(e.to_string()))?;
        let template_filtration = filtration_from_shelling(&complex, &order)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let transported = substitute_filtration(&template_filtration, &us, &table)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let verified = verify_filtration(&transported).is_ok();
        let class = classify(&transported).map_err(|e| CliError::Usage(e.to_string()))?;
        let d = filtration_to_decomposition(&transported)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let decomposition_valid = validate_decomposition(&d, &image)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .is_ok();
        let depth = depth_ideal(&image, q).map_err(|e| CliError::Usage(e.to_string()))?;
        let sdepth = d.sdepth() as i64;
        let recognized = recognize(&image).map(|r| {
            json!({
                "m": r.m,
                "u": r.us.iter().map(|u| u.to_string_with(&table)).collect::<Vec<_>>(),
            })
        });
        out.insert(
            "instantiation".into(),
            json!({
                "u": us.iter().map(|u| u.to_string_with(&table)).collect::<Vec<_>>(),
                "ideal": formats::ideal_to_json(&image),
                "filtration": formats::filtration_to_json(&transported),
                "filtration_verified": verified,
                "classification": class.label(),
                "decomposition_valid": decomposition_valid,
                "decomposition_sdepth": sdepth,
                "depth": depth,
                "stanley_certified": class.pretty_clean && decomposition_valid && sdepth >= depth,
                "top_spaces": count_top_spaces(&d, &image),
                "multiplicity": image.multiplicity(),
                "recognized": recognized,
            }),
        );
    }
    Ok(Value::Object(out))
}

pub fn cmd_random(seed: u64, n: usize, model: &str) -> CliResult {
    let model = random::Model::parse(model).map_err(CliError::Usage)?;
    let ideal = random::generate(model, seed, n).map_err(CliError::Usage)?;
    Ok(json!({
        "model": model.name(),
        "seed": seed,
        "n": n,
        "ideal": formats::ideal_to_json(&ideal),
    }))
}
