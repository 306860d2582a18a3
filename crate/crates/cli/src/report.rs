//! The `analyze` report: every invariant the engine computes for a
//! complex (or monomial ideal), bundled into one JSON object. The same
//! object backs both the machine output and the human rendering.

use serde_json::{json, Map, Value};

use stanley_core::complex::SimplicialComplex;
use stanley_core::filtration::{
    filtration_to_decomposition, find_pretty_clean_filtration, is_pretty_clean_via_polarization,
    FiltrationError, SearchLimits,
};
use stanley_core::homology::{
    depth_ideal, depth_ring, is_buchsbaum, is_cohen_macaulay, multiplicity, CoefficientField,
};
use stanley_core::ideal::{stanley_reisner_complex, stanley_reisner_ideal, MonomialIdeal};
use stanley_core::partitions::{
    count_top_spaces, find_nice_partition, is_stanley_ideal, r_vector, sdepth,
    sdepth_upper_bound, validate_decomposition, NicePartitionOutcome, PartitionError,
    partition_with_floor,
};
use stanley_core::shelling::{is_shellable, ShellabilityOutcome, ShellingError};

use crate::formats;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub field: CoefficientField,
    pub target: Option<i64>,
    pub facet_cap: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            field: CoefficientField::Rationals,
            target: None,
            facet_cap: stanley_core::shelling::DEFAULT_FACET_CAP,
        }
    }
}

pub fn parse_field(s: &str) -> Result<CoefficientField, CliError> {
    if s == "q" || s == "Q" {
        return Ok(CoefficientField::Rationals);
    }
    if let Some(p) = s.strip_prefix("p:") {
        let p: u64 = p.parse().map_err(|_| CliError::Usage(format!("bad prime `{p}`")))?;
        return CoefficientField::Prime(p)
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()));
    }
    Err(CliError::Usage(format!("bad field `{s}` (expected q or p:<prime>)")))
}

fn field_json(field: CoefficientField) -> Value {
    match field {
        CoefficientField::Rationals => json!("Q"),
        CoefficientField::Prime(p) => json!(format!("F_{p}")),
    }
}

fn cap_error<E: std::fmt::Display>(e: E) -> CliError {
    CliError::CapExceeded(e.to_string())
}

fn shelling_to_cli(e: ShellingError) -> CliError {
    match e {
        ShellingError::CapExceeded { .. } => cap_error(e),
        other => CliError::Usage(other.to_string()),
    }
}

fn partition_to_cli(e: PartitionError) -> CliError {
    match e {
        PartitionError::CapExceeded { .. } => cap_error(e),
        other => CliError::Usage(other.to_string()),
    }
}

fn filtration_to_cli(e: FiltrationError) -> CliError {
    match e {
        FiltrationError::BoxCap { .. } => cap_error(e),
        FiltrationError::Shelling(ShellingError::CapExceeded { .. }) => cap_error(e),
        other => CliError::Usage(other.to_string()),
    }
}

/// Full report for a complex together with its Stanley-Reisner ideal.
pub fn analyze_complex(
    c: &SimplicialComplex,
    opts: AnalyzeOptions,
) -> CliResult {
    let mut out = Map::new();
    let mut notes: Vec<String> = Vec::new();
    out.insert("n".into(), json!(c.n_vertices()));
    out.insert("labels".into(), json!(c.labels()));
    out.insert("facet_count".into(), json!(c.facets().len()));
    out.insert(
        "facets".into(),
        json!(c.facets().iter().map(|f| c.face_string(*f)).collect::<Vec<_>>()),
    );
    out.insert("field".into(), field_json(opts.field));
    if c.is_void() {
        out.insert("dim_complex".into(), Value::Null);
        out.insert("dim_ring".into(), Value::Null);
        notes.push("void complex: no further invariants".into());
        out.insert("notes".into(), json!(notes));
        return Ok(Value::Object(out));
    }
    out.insert("dim_complex".into(), json!(c.dim_complex().unwrap()));
    out.insert("dim_ring".into(), json!(c.dim_ring().unwrap()));
    let f = c.f_vector().map_err(|e| CliError::Usage(e.to_string()))?;
    let h = c.h_vector().map_err(|e| CliError::Usage(e.to_string()))?;
    out.insert("f_vector".into(), json!(f.0));
    out.insert("h_vector".into(), json!(h.0));
    out.insert("pure".into(), json!(c.is_pure()));
    let cm = is_cohen_macaulay(c, opts.field).map_err(|e| CliError::Usage(e.to_string()))?;
    out.insert("cohen_macaulay".into(), json!(cm));
    let bb = is_buchsbaum(c, opts.field).map_err(|e| CliError::Usage(e.to_string()))?;
    out.insert("buchsbaum".into(), json!(bb.value));
    if let Some(reason) = bb.reason {
        notes.push(format!("not Buchsbaum: {reason}"));
    }
    out.insert(
        "depth".into(),
        json!(depth_ring(c, opts.field).map_err(|e| CliError::Usage(e.to_string()))?),
    );
    out.insert(
        "multiplicity".into(),
        json!(multiplicity(c).map_err(|e| CliError::Usage(e.to_string()))?),
    );

    match is_shellable(c, opts.facet_cap).map_err(shelling_to_cli)? {
        ShellabilityOutcome::Shellable(order) => {
            out.insert("shellable".into(), json!(true));
            out.insert("shelling".into(), json!(formats::shelling_lines(c, &order)));
        }
        ShellabilityOutcome::NotShellable { states } => {
            out.insert("shellable".into(), json!(false));
            out.insert("shelling".into(), Value::Null);
            out.insert("shelling_states_exhausted".into(), json!(states));
        }
    }

    match find_nice_partition(c).map_err(partition_to_cli)? {
        NicePartitionOutcome::Found(p) => {
            out.insert("partitionable".into(), json!(true));
            out.insert("nice_partition".into(), json!(formats::partition_lines(&p)));
            out.insert(
                "r_vector".into(),
                json!(r_vector(&p).map_err(partition_to_cli)?.0),
            );
        }
        NicePartitionOutcome::Infeasible { nodes } => {
            out.insert("partitionable".into(), json!(false));
            out.insert("nice_partition".into(), Value::Null);
            out.insert("partition_states_exhausted".into(), json!(nodes));
        }
    }

    let ideal = stanley_reisner_ideal(c);
    out.insert("ideal".into(), formats::ideal_to_json(&ideal));
    if ideal.is_zero() || ideal.is_unit() {
        notes.push("Stanley depth undefined for the zero/unit ideal".into());
        out.insert("notes".into(), json!(notes));
        return Ok(Value::Object(out));
    }
    out.insert(
        "sdepth_upper_bound".into(),
        json!(sdepth_upper_bound(&ideal).map_err(partition_to_cli)?),
    );
    let verdict = is_stanley_ideal(&ideal, opts.field).map_err(partition_to_cli)?;
    out.insert("sdepth".into(), json!(verdict.sdepth));
    out.insert(
        "sdepth_witness".into(),
        json!(formats::partition_lines(&verdict.witness)),
    );
    out.insert("stanley_ideal".into(), json!(verdict.value));

    if let Some(k) = opts.target {
        let witness = partition_with_floor(c, k).map_err(partition_to_cli)?;
        out.insert(
            "target".into(),
            json!({
                "k": k,
                "feasible": witness.is_some(),
                "witness": witness.map(|p| json!(formats::partition_lines(&p))).unwrap_or(Value::Null),
            }),
        );
    }
    out.insert("notes".into(), json!(notes));
    Ok(Value::Object(out))
}

/// Report for a monomial ideal. Squarefree ideals route through the
/// complex report; otherwise the exact Stanley depth is out of reach and
/// the report carries the polarization / pretty-cleanness evidence
/// instead.
pub fn analyze_ideal(ideal: &MonomialIdeal, opts: AnalyzeOptions) -> CliResult {
    if ideal.is_squarefree() && !ideal.is_unit() {
        let c = stanley_reisner_complex(ideal).map_err(|e| CliError::Usage(e.to_string()))?;
        let mut v = analyze_complex(&c, opts)?;
        if let Value::Object(map) = &mut v {
            map.insert("input_ideal".into(), formats::ideal_to_json(ideal));
        }
        return Ok(v);
    }
    let mut out = Map::new();
    let mut notes: Vec<String> = Vec::new();
    out.insert("ideal".into(), formats::ideal_to_json(ideal));
    out.insert("squarefree".into(), json!(false));
    out.insert("field".into(), field_json(opts.field));
    if ideal.is_unit() {
        notes.push("unit ideal: the quotient is the zero ring".into());
        out.insert("notes".into(), json!(notes));
        return Ok(Value::Object(out));
    }
    out.insert("dim_ring".into(), json!(ideal.krull_dim()));
    out.insert("multiplicity".into(), json!(ideal.multiplicity()));
    out.insert(
        "depth".into(),
        json!(depth_ideal(ideal, opts.field).map_err(|e| CliError::Usage(e.to_string()))?),
    );
    let ev = is_pretty_clean_via_polarization(ideal, opts.facet_cap).map_err(filtration_to_cli)?;
    out.insert(
        "polarization".into(),
        json!({
            "added_variables": ev.polarization.added,
            "gens": ev.polarization.ideal.gens_string(),
            "complex_facets": ev.complex.facets().len(),
            "shellable": ev.clean_polarization,
        }),
    );
    out.insert("pretty_clean".into(), json!(ev.pretty_clean));
    if ev.pretty_clean {
        // A pretty clean ideal is a Stanley ideal; exhibit the filtration
        // and its decomposition as the certificate.
        let search = find_pretty_clean_filtration(ideal, SearchLimits::default())
            .map_err(filtration_to_cli)?;
        match search.filtration {
            Some(f) => {
                let d = filtration_to_decomposition(&f).map_err(filtration_to_cli)?;
                let valid = validate_decomposition(&d, ideal).map_err(partition_to_cli)?;
                out.insert("pretty_clean_filtration".into(), formats::filtration_to_json(&f));
                out.insert(
                    "decomposition".into(),
                    formats::decomposition_to_json(&d, ideal.vars()),
                );
                out.insert("decomposition_valid".into(), json!(valid.is_ok()));
                out.insert("decomposition_sdepth".into(), json!(d.sdepth()));
                out.insert(
                    "top_spaces".into(),
                    json!(count_top_spaces(&d, ideal)),
                );
                out.insert("stanley_ideal".into(), json!(true));
            }
            None => {
                notes.push(
                    "polarization is shellable but no filtration was found in the divisor box"
                        .into(),
                );
                out.insert("stanley_ideal".into(), Value::Null);
            }
        }
    } else {
        out.insert("stanley_ideal".into(), Value::Null);
        notes.push(
            "not pretty clean via polarization; the sufficient path is unavailable and exact \
             Stanley depth is computed only for squarefree ideals"
                .into(),
        );
    }
    out.insert("sdepth".into(), Value::Null);
    notes.push("exact Stanley depth is computed only for squarefree ideals".into());
    out.insert("notes".into(), json!(notes));
    Ok(Value::Object(out))
}

/// Quick sanity accessors used by the verify command.
pub fn sdepth_of(ideal: &MonomialIdeal) -> Result<i64, CliError> {
    Ok(sdepth(ideal).map_err(partition_to_cli)?.0)
}
