use clap::{Parser, Subcommand};
use serde_json::Value;

use stanley_cli::commands::{self, Artifact};
use stanley_cli::report::{parse_field, AnalyzeOptions};
use stanley_cli::CliError;

/// Exact computations on simplicial complexes and monomial ideals:
/// partitions, Stanley depth, shellability, cleanness certificates.
#[derive(Parser)]
#[command(name = "stanley", version, about)]
struct Cli {
    /// Emit the raw JSON report instead of the human rendering.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads (reserved; all computations are deterministic and
    /// currently run sequentially).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ArtifactArgs {
    /// Built-in instance: dunce-hat, cylinder, hachimori, gorenstein-<m>.
    #[arg(long)]
    fixture: Option<String>,
    /// Complex file (text: one facet per line; or .json).
    #[arg(long)]
    complex: Option<String>,
    /// Monomial ideal file (text: one monomial per line; or .json).
    #[arg(long)]
    ideal: Option<String>,
}

impl ArtifactArgs {
    fn resolve(&self) -> Result<Artifact, CliError> {
        match (&self.fixture, &self.complex, &self.ideal) {
            (Some(f), None, None) => Ok(Artifact::Fixture(f.clone())),
            (None, Some(c), None) => Ok(Artifact::ComplexFile(c.clone())),
            (None, None, Some(i)) => Ok(Artifact::IdealFile(i.clone())),
            _ => Err(CliError::Usage(
                "give exactly one of --fixture, --complex, --ideal".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report: f/h-vectors, Cohen-Macaulayness, depth,
    /// shellability, partitionability, Stanley depth, Stanley-ideal
    /// verdict.
    Analyze {
        #[command(flatten)]
        artifact: ArtifactArgs,
        /// Coefficient field: q (exact rationals) or p:<prime>.
        #[arg(long, default_value = "q")]
        field: String,
        /// Also test for a partition with all upper faces of at least
        /// this many vertices.
        #[arg(long)]
        target: Option<i64>,
        /// Cap on facet count for the exhaustive shellability search.
        #[arg(long, default_value_t = stanley_core::shelling::DEFAULT_FACET_CAP)]
        facet_cap: usize,
    },
    /// Check a certificate against an instance; exit 0 if it validates,
    /// 1 with a counterexample otherwise.
    Verify {
        /// One of: partition, decomposition, shelling, filtration.
        kind: String,
        #[command(flatten)]
        artifact: ArtifactArgs,
        /// File holding the object to verify (text for partitions and
        /// shellings, JSON for decompositions and filtrations).
        #[arg(long)]
        object: String,
    },
    /// Build the cyclic-window template, verify its lexicographic
    /// shelling, and optionally push a regular sequence through the
    /// whole pipeline.
    Gorenstein {
        #[arg(long)]
        m: u32,
        /// Comma-separated monomials, e.g. `x1^2,x2,x3*x4,x5,x6`.
        #[arg(long)]
        subst: Option<String>,
        /// Check the exchange witness on every comparable facet pair.
        #[arg(long)]
        verify_shelling: bool,
    },
    /// Reproducible random instance for the property suites.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// One of: squarefree, ci, codim2-cm.
        #[arg(long)]
        model: String,
    },
}

fn render_human(value: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) if !is_short(v) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&render_human(v, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(v))),
                }
            }
            out
        }
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                if is_short(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    out.push_str(&render_human(item, indent + 1));
                }
            }
            out
        }
        other => format!("{pad}{}\n", inline(other)),
    }
}

fn is_short(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !matches!(x, Value::Object(_) | Value::Array(_))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(inline).collect();
            format!("[{}]", items.join(", "))
        }
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Analyze { artifact, field, target, facet_cap } => {
            let opts = AnalyzeOptions {
                field: parse_field(field)?,
                target: *target,
                facet_cap: *facet_cap,
            };
            commands::cmd_analyze(&artifact.resolve()?, opts)
        }
        Command::Verify { kind, artifact, object } => {
            commands::cmd_verify(kind, &artifact.resolve()?, object)
        }
        Command::Gorenstein { m, subst, verify_shelling } => {
            commands::cmd_gorenstein(*m, subst.as_deref(), *verify_shelling)
        }
        Command::Random { seed, n, model } => commands::cmd_random(*seed, *n, model),
    }
}

fn emit(value: &Value, as_json: bool) {
    use std::io::Write;
    let text = if as_json {
        format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"))
    } else {
        render_human(value, 0)
    };
    // A closed pipe downstream is not our error.
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => emit(&value, cli.json),
        Err(err) => {
            let code = err.exit_code();
            match err {
                CliError::Violation(cert) => emit(&cert, cli.json),
                CliError::Usage(msg) | CliError::CapExceeded(msg) => {
                    eprintln!("error: {msg}");
                }
            }
            std::process::exit(code);
        }
    }
}
