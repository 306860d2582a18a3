//! Text and JSON formats for complexes, ideals, partitions,
//! decompositions, filtrations and shelling orders.
//!
//! Complex text: one facet per line, whitespace-separated vertex labels,
//! `#` starts a comment, a lone `-` is the empty facet. The vertex set is
//! the sorted set of labels that appear (numeric labels sort numerically).
//! Complex JSON: `{"n": ..., "labels": [...], "facets": [[...]]}` with
//! facet entries given as labels or as 0-based indices.
//!
//! Ideal text: one monomial per line, either `x1^2*x3` or the repeated
//! token form `x1 x1 x3`; `1` is the unit monomial. Ideal JSON:
//! `{"vars": [...], "gens": [[[var, exp], ...], ...]}`.
//!
//! Partition text: one interval per line, `F : G`, with `-` for the empty
//! face. Decomposition JSON: `[{"u": "x1*x3", "Z": ["x1", "x3"]}]`.
//! Filtration JSON: `[{"w": "x1", "P": ["x2"]}]`. Shelling text: one
//! facet per line.

use serde_json::{json, Value};

use stanley_core::complex::SimplicialComplex;
use stanley_core::ideal::{Monomial, MonomialIdeal, MonomialPrime, VarTable};
use stanley_core::partitions::{Interval, Partition, StanleyDecomposition, StanleySpace};
use stanley_core::shelling::ShellingOrder;
use stanley_core::filtration::{FiltrationStep, PrimeFiltration};
use stanley_core::vset::{Face, VertexSet};

/// Numeric-aware label order: labels that are both integers compare
/// numerically, otherwise lexicographically.
fn label_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex, String> {
    let mut facet_tokens: Vec<Vec<String>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if line == "-" {
            facet_tokens.push(Vec::new());
            continue;
        }
        let toks: Vec<String> = line.split_whitespace().map(|s| s.to_string()).collect();
        if toks.is_empty() {
            return Err(format!("line {}: empty facet", lineno + 1));
        }
        facet_tokens.push(toks);
    }
    let mut labels: Vec<String> = facet_tokens.iter().flatten().cloned().collect();
    labels.sort_by(|a, b| label_cmp(a, b));
    labels.dedup();
    let n = labels.len();
    let faces: Vec<Face> = facet_tokens
        .iter()
        .map(|toks| {
            VertexSet::from_iter(
                toks.iter().map(|t| labels.iter().position(|l| l == t).expect("known label")),
            )
        })
        .collect();
    let c = SimplicialComplex::from_facets(&faces, n).map_err(|e| e.to_string())?;
    c.with_labels(labels).map_err(|e| e.to_string())
}

pub fn parse_complex_json(v: &Value) -> Result<SimplicialComplex, String> {
    let obj = v.as_object().ok_or("complex JSON must be an object")?;
    let labels: Vec<String> = match obj.get("labels") {
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| x.as_str().map(|s| s.to_string()).ok_or("labels must be strings"))
            .collect::<Result<_, _>>()?,
        _ => {
            let n = obj.get("n").and_then(Value::as_u64).ok_or("missing n or labels")? as usize;
            (1..=n).map(|i| i.to_string()).collect()
        }
    };
    let n = match obj.get("n").and_then(Value::as_u64) {
        Some(k) => k as usize,
        None => labels.len(),
    };
    if n != labels.len() {
        return Err("n does not match the number of labels".into());
    }
    let facets_json = obj.get("facets").and_then(Value::as_array).ok_or("missing facets")?;
    let mut faces = Vec::new();
    for f in facets_json {
        let arr = f.as_array().ok_or("each facet must be an array")?;
        let mut face = VertexSet::EMPTY;
        for entry in arr {
            let idx = match entry {
                Value::Number(k) => {
                    k.as_u64().ok_or("vertex index must be a nonnegative integer")? as usize
                }
                Value::String(s) => labels
                    .iter()
                    .position(|l| l == s)
                    .ok_or_else(|| format!("unknown vertex label `{s}`"))?,
                _ => return Err("facet entries must be labels or indices".into()),
            };
            if idx >= n {
                return Err(format!("vertex index {idx} out of range"));
            }
            face = face.with(idx);
        }
        faces.push(face);
    }
    let c = SimplicialComplex::from_facets(&faces, n).map_err(|e| e.to_string())?;
    c.with_labels(labels).map_err(|e| e.to_string())
}

pub fn complex_to_json(c: &SimplicialComplex) -> Value {
    json!({
        "n": c.n_vertices(),
        "labels": c.labels(),
        "facets": c.facets().iter().map(|f| face_labels(c, *f)).collect::<Vec<_>>(),
    })
}

pub fn face_labels(c: &SimplicialComplex, f: Face) -> Vec<String> {
    f.iter().map(|v| c.label(v).to_string()).collect()
}

/// Parse one monomial against a variable table: `x1^2*x3`, `x1 x1 x3`, or
/// `1`.
pub fn parse_monomial(text: &str, vars: &VarTable) -> Result<Monomial, String> {
    let t = text.trim();
    if t == "1" {
        return Ok(Monomial::unit());
    }
    let tokens: Vec<&str> = if t.contains('*') {
        t.split('*').map(str::trim).collect()
    } else {
        t.split_whitespace().collect()
    };
    let mut exps: Vec<(usize, u32)> = Vec::new();
    for tok in tokens {
        if tok.is_empty() {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                (n.trim(), e.trim().parse::<u32>().map_err(|_| format!("bad exponent in `{tok}`"))?)
            }
            None => (tok, 1),
        };
        let var = (0..vars.len())
            .find(|&v| vars.label(v) == name)
            .ok_or_else(|| format!("unknown variable `{name}`"))?;
        exps.push((var, exp));
    }
    Ok(Monomial::from_exps(exps))
}

/// Collect variable names appearing in monomial text lines.
fn scan_variable_names(lines: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for line in lines {
        let stripped: String = line.replace('*', " ");
        for tok in stripped.split_whitespace() {
            let name = tok.split('^').next().unwrap_or(tok).trim().to_string();
            if !name.is_empty() && name != "1" {
                names.push(name);
            }
        }
    }
    names.sort_by(|a, b| {
        // Sort x2 before x10: compare any shared alphabetic prefix, then
        // numerically on the numeric suffix.
        let split = |s: &str| -> (String, Option<u64>) {
            let pos = s.find(|c: char| c.is_ascii_digit());
            match pos {
                Some(i) => (s[..i].to_string(), s[i..].parse::<u64>().ok()),
                None => (s.to_string(), None),
            }
        };
        let (pa, na) = split(a);
        let (pb, nb) = split(b);
        pa.cmp(&pb).then(na.cmp(&nb)).then(a.cmp(b))
    });
    names.dedup();
    names
}

pub fn parse_ideal_text(text: &str) -> Result<MonomialIdeal, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(strip_comment)
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    let vars = VarTable(scan_variable_names(&lines));
    let gens: Vec<Monomial> =
        lines.iter().map(|l| parse_monomial(l, &vars)).collect::<Result<_, _>>()?;
    MonomialIdeal::new(vars, gens).map_err(|e| e.to_string())
}

pub fn parse_ideal_json(v: &Value) -> Result<MonomialIdeal, String> {
    let obj = v.as_object().ok_or("ideal JSON must be an object")?;
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(Value::as_array)
        .ok_or("missing vars")?
        .iter()
        .map(|x| x.as_str().map(|s| s.to_string()).ok_or("vars must be strings"))
        .collect::<Result<_, _>>()?;
    let table = VarTable(vars);
    let gens_json = obj.get("gens").and_then(Value::as_array).ok_or("missing gens")?;
    let mut gens = Vec::new();
    for g in gens_json {
        match g {
            Value::String(s) => gens.push(parse_monomial(s, &table)?),
            Value::Array(pairs) => {
                let mut exps = Vec::new();
                for p in pairs {
                    let pair = p.as_array().filter(|a| a.len() == 2).ok_or("bad [var, exp] pair")?;
                    let var =
                        pair[0].as_u64().ok_or("var index must be an integer")? as usize;
                    let exp = pair[1].as_u64().ok_or("exponent must be an integer")? as u32;
                    exps.push((var, exp));
                }
                gens.push(Monomial::from_exps(exps));
            }
            _ => return Err("each generator must be a string or an exponent list".into()),
        }
    }
    MonomialIdeal::new(table, gens).map_err(|e| e.to_string())
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": ideal.vars().0,
        "gens": ideal
            .gens()
            .iter()
            .map(|g| Value::Array(
                g.exps()
                    .iter()
                    .map(|&(v, e)| json!([v, e]))
                    .collect()
            ))
            .collect::<Vec<_>>(),
        "gens_pretty": ideal.gens_string(),
    })
}

pub fn parse_partition_text(
    text: &str,
    ambient: &SimplicialComplex,
) -> Result<Partition, String> {
    let mut intervals = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: expected `F : G`", lineno + 1))?;
        let lower = ambient
            .face_from_labels(lhs)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let upper = ambient
            .face_from_labels(rhs)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        intervals.push(Interval::new(lower, upper));
    }
    Ok(Partition { ambient: ambient.clone(), intervals })
}

pub fn partition_lines(p: &Partition) -> Vec<String> {
    p.intervals
        .iter()
        .map(|iv| {
            format!(
                "{} : {}",
                p.ambient.face_string(iv.lower),
                p.ambient.face_string(iv.upper)
            )
        })
        .collect()
}

pub fn parse_shelling_text(
    text: &str,
    ambient: &SimplicialComplex,
) -> Result<ShellingOrder, String> {
    let mut facets = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        facets.push(
            ambient
                .face_from_labels(line)
                .map_err(|e| format!("line {}: {e}", lineno + 1))?,
        );
    }
    Ok(ShellingOrder { facets })
}

pub fn shelling_lines(c: &SimplicialComplex, order: &ShellingOrder) -> Vec<String> {
    order.facets.iter().map(|f| c.face_string(*f)).collect()
}

fn var_index(vars: &VarTable, name: &str) -> Result<usize, String> {
    (0..vars.len())
        .find(|&v| vars.label(v) == name)
        .ok_or_else(|| format!("unknown variable `{name}`"))
}

pub fn parse_decomposition_json(
    v: &Value,
    vars: &VarTable,
) -> Result<StanleyDecomposition, String> {
    let arr = v.as_array().ok_or("decomposition JSON must be an array")?;
    let mut spaces = Vec::new();
    for item in arr {
        let obj = item.as_object().ok_or("each space must be an object")?;
        let u = match obj.get("u") {
            Some(Value::String(s)) => parse_monomial(s, vars)?,
            None => Monomial::unit(),
            _ => return Err("u must be a monomial string".into()),
        };
        let z_names = obj.get("Z").and_then(Value::as_array).ok_or("missing Z")?;
        let mut z = VertexSet::EMPTY;
        for name in z_names {
            let s = name.as_str().ok_or("Z entries must be variable names")?;
            z = z.with(var_index(vars, s)?);
        }
        spaces.push(StanleySpace { u, z });
    }
    Ok(StanleyDecomposition { spaces })
}

pub fn decomposition_to_json(d: &StanleyDecomposition, vars: &VarTable) -> Value {
    Value::Array(
        d.spaces
            .iter()
            .map(|s| {
                json!({
                    "u": s.u.to_string_with(vars),
                    "Z": s.z.iter().map(|v| vars.label(v).to_string()).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn parse_filtration_json(
    v: &Value,
    base: &MonomialIdeal,
) -> Result<PrimeFiltration, String> {
    let arr = v.as_array().ok_or("filtration JSON must be an array")?;
    let mut steps = Vec::new();
    for item in arr {
        let obj = item.as_object().ok_or("each step must be an object")?;
        let w = match obj.get("w") {
            Some(Value::String(s)) => parse_monomial(s, base.vars())?,
            _ => return Err("each step needs a monomial string `w`".into()),
        };
        let p_names = obj.get("P").and_then(Value::as_array).ok_or("missing P")?;
        let mut vars = VertexSet::EMPTY;
        for name in p_names {
            let s = name.as_str().ok_or("P entries must be variable names")?;
            vars = vars.with(var_index(base.vars(), s)?);
        }
        steps.push(FiltrationStep { w, prime: MonomialPrime { vars } });
    }
    Ok(PrimeFiltration { base: base.clone(), steps })
}

pub fn filtration_to_json(f: &PrimeFiltration) -> Value {
    let vars = f.base.vars();
    Value::Array(
        f.steps
            .iter()
            .map(|s| {
                json!({
                    "w": s.w.to_string_with(vars),
                    "P": s.prime.vars.iter().map(|v| vars.label(v).to_string()).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}
