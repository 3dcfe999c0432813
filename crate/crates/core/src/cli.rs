//! Subcommands of the `maxlin` binary, independent of argument parsing.
//!
//! [`run`] never panics on bad input and never touches stdout itself; it
//! returns the exit status together with the text to print.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{
    evaluate_at_distribution, format_rational, hibi_generators, parse_polynomial, Polynomial,
    VariableId,
};
use crate::dag::{parse_dag, DagSpec};
use crate::error::{Error, Result};
use crate::model::{
    cbn_distribution, full_distribution, state_lattice, Distribution, ParamTable,
    DEFAULT_ORACLE_LIMIT,
};
use crate::poset::{chain_product, ideal_lattice, parse_poset, PosetRel, StateLattice};
use crate::report::Report;
use crate::transforms::{alpha_params, x_params, zeta_transform};
use crate::verify;

/// Environment variable overriding [`DEFAULT_ORACLE_LIMIT`].
pub const ORACLE_LIMIT_VAR: &str = "MAXLIN_ORACLE_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Vanishing,
    Theorem31,
    Oracle,
    Moebius,
    Eq5,
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    /// The state lattice `G(D, k)`.
    Lattice,
    /// Order ideals of `D^tr`, or of a poset file.
    Ideals,
    /// The transitive closure, optionally times a chain.
    Poset,
    Distribution,
    Zeta,
    /// `theta`, `alpha` and `x` parameter tables.
    Params,
    Generators,
    Eval,
    Verify(Suite),
}

#[derive(Clone, Debug)]
pub struct CommandConfig {
    pub command: Command,
    pub dag: Option<PathBuf>,
    pub poset: Option<PathBuf>,
    pub theta: Option<PathBuf>,
    pub poly: Option<PathBuf>,
    pub k: Option<usize>,
    pub chain: Option<usize>,
    pub symbolic: bool,
    pub seed: u64,
    pub trials: usize,
    pub format: Format,
    pub oracle_limit: u128,
}

impl CommandConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            dag: None,
            poset: None,
            theta: None,
            poly: None,
            k: None,
            chain: None,
            symbolic: false,
            seed: 0,
            trials: 100,
            format: Format::Json,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// The oracle limit from [`ORACLE_LIMIT_VAR`], or the default.
pub fn oracle_limit_from_env() -> Result<u128> {
    match std::env::var(ORACLE_LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "{ORACLE_LIMIT_VAR}={v} is not a nonnegative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

/// Runs one subcommand. Status 0 on success, 1 when a verification suite
/// reports failures, 2 on invalid input; errors are reported as JSON.
pub fn run(config: &CommandConfig) -> Outcome {
    match execute(config) {
        Ok(out) => out,
        Err(e) => Outcome {
            status: 2,
            output: pretty(&json!({ "error": e.kind(), "message": e.to_string() })),
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ok(output: String) -> Result<Outcome> {
    Ok(Outcome { status: 0, output })
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn load_dag(config: &CommandConfig) -> Result<DagSpec> {
    let path = config
        .dag
        .as_ref()
        .ok_or_else(|| Error::Usage("--dag FILE is required".into()))?;
    let dag = parse_dag(&read(path)?)?;
    match config.k {
        Some(k) => dag.with_k(k),
        None => Ok(dag),
    }
}

fn load_poset(config: &CommandConfig) -> Result<Option<PosetRel>> {
    match &config.poset {
        Some(path) => Ok(Some(parse_poset(&read(path)?)?)),
        None => Ok(None),
    }
}

fn load_theta(config: &CommandConfig) -> Result<ParamTable> {
    let path = config
        .theta
        .as_ref()
        .ok_or_else(|| Error::Usage("--theta FILE is required".into()))?;
    ParamTable::from_json(&read(path)?)
}

/// The model named by `--poset` (a CBN on `J(P)`) or `--dag`.
enum Model {
    Dag(DagSpec),
    Cbn(PosetRel),
}

impl Model {
    fn load(config: &CommandConfig) -> Result<Self> {
        match load_poset(config)? {
            Some(p) => Ok(Model::Cbn(p)),
            None => Ok(Model::Dag(load_dag(config)?)),
        }
    }

    fn lattice(&self) -> StateLattice {
        match self {
            Model::Dag(d) => state_lattice(d),
            Model::Cbn(p) => ideal_lattice(p),
        }
    }

    fn distribution(&self, config: &CommandConfig) -> Result<Distribution<Polynomial>> {
        let (n, k) = match self {
            Model::Dag(d) => (d.n(), d.k()),
            Model::Cbn(p) => (p.len(), 2),
        };
        let theta = if config.symbolic {
            ParamTable::symbolic(n, k)
        } else {
            load_theta(config)?.to_polynomial()
        };
        match self {
            Model::Dag(d) => full_distribution(d, &theta),
            Model::Cbn(p) => cbn_distribution(p, &theta),
        }
    }
}

fn emit_states(lattice: &StateLattice, format: Format) -> String {
    let states: Vec<String> = lattice.states().iter().map(ToString::to_string).collect();
    match format {
        Format::Json => pretty(&json!({ "count": states.len(), "states": states })),
        Format::Text => states.iter().map(|s| format!("{s}\n")).collect(),
    }
}

// rational values as "num/den", symbolic ones as polynomial text
fn emit_map<'a>(
    prefix: &str,
    entries: impl Iterator<Item = (String, &'a Polynomial)>,
    format: Format,
) -> String {
    let render = |p: &Polynomial| match p.as_constant() {
        Some(c) => format_rational(&c),
        None => p.to_string(),
    };
    match format {
        Format::Json => {
            let map: BTreeMap<String, String> = entries.map(|(g, p)| (g, render(p))).collect();
            pretty(&json!(map))
        }
        Format::Text => entries
            .map(|(g, p)| format!("{prefix}[{g}] = {}\n", render(p)))
            .collect(),
    }
}

fn emit_report(report: &Report, format: Format) -> Outcome {
    let status = if report.passed() { 0 } else { 1 };
    let output = match format {
        Format::Json => pretty(&report.to_json()),
        Format::Text => {
            let mut s = format!(
                "{} {}: {}\n",
                if report.passed() { "PASS" } else { "FAIL" },
                report.suite,
                report.summary
            );
            for f in &report.failures {
                let _ = writeln!(s, "  {f}");
            }
            s
        }
    };
    Outcome { status, output }
}

fn execute(config: &CommandConfig) -> Result<Outcome> {
    let format = config.format;
    match config.command {
        Command::Lattice => ok(emit_states(&state_lattice(&load_dag(config)?), format)),
        Command::Ideals => {
            let poset = match load_poset(config)? {
                Some(p) => p,
                None => load_dag(config)?.transitive_closure(),
            };
            ok(emit_states(&ideal_lattice(&poset), format))
        }
        Command::Poset => {
            let mut poset = match load_poset(config)? {
                Some(p) => p,
                None => load_dag(config)?.transitive_closure(),
            };
            if let Some(m) = config.chain {
                poset = chain_product(&poset, m);
            }
            ok(match format {
                Format::Json => pretty(&poset.to_json()),
                Format::Text => poset
                    .strict_pairs()
                    .map(|(a, b)| format!("{} < {}\n", poset.labels()[a], poset.labels()[b]))
                    .collect(),
            })
        }
        Command::Distribution => {
            let dist = Model::load(config)?.distribution(config)?;
            ok(emit_map(
                "p",
                dist.iter().map(|(g, p)| (g.to_string(), p)),
                format,
            ))
        }
        Command::Zeta => {
            let model = Model::load(config)?;
            let q = zeta_transform(&model.distribution(config)?, &model.lattice())?;
            ok(emit_map(
                "q",
                q.iter().map(|(g, p)| (g.to_string(), p)),
                format,
            ))
        }
        Command::Params => {
            let theta = load_theta(config)?;
            let alpha = alpha_params(&theta);
            let x = x_params(&alpha)?;
            ok(match format {
                Format::Json => pretty(&json!({
                    "theta": theta.to_json()["theta"],
                    "alpha": alpha.to_json(),
                    "x": x.to_json(),
                })),
                Format::Text => {
                    let mut s = String::new();
                    for (i, row) in theta.rows().iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            let _ = writeln!(
                                s,
                                "{} = {}",
                                VariableId::theta(i + 1, j),
                                format_rational(v)
                            );
                        }
                    }
                    for (i, row) in alpha.rows().iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            let _ = writeln!(
                                s,
                                "{} = {}",
                                VariableId::alpha(i + 1, j),
                                format_rational(v)
                            );
                        }
                    }
                    for (i, row) in x.rows().iter().enumerate() {
                        for (r, v) in row.iter().enumerate() {
                            let _ =
                                writeln!(s, "{} = {}", VariableId::x(i + 1, r), format_rational(v));
                        }
                    }
                    s
                }
            })
        }
        Command::Generators => {
            let gens = hibi_generators(&Model::load(config)?.lattice());
            ok(match format {
                Format::Json => pretty(&Value::Array(gens.iter().map(|g| g.to_json()).collect())),
                Format::Text => gens.iter().map(|g| format!("{g}\n")).collect(),
            })
        }
        Command::Eval => eval(config),
        Command::Verify(suite) => verify_suite(config, suite),
    }
}

fn eval(config: &CommandConfig) -> Result<Outcome> {
    let path = config
        .poly
        .as_ref()
        .ok_or_else(|| Error::Usage("--poly FILE is required".into()))?;
    let text = read(path)?;
    let model = Model::load(config)?;
    let lattice = model.lattice();
    let theta = load_theta(config)?;
    let dist = match &model {
        Model::Dag(d) => full_distribution(d, &theta)?,
        Model::Cbn(p) => cbn_distribution(p, &theta)?,
    };
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let poly = parse_polynomial(line).map_err(|e| match e {
            Error::Syntax { message, .. } => Error::Syntax {
                line: lineno + 1,
                message,
            },
            other => other,
        })?;
        // q coordinates are rewritten as sums of p coordinates
        let poly = poly.try_substitute(|v| match v {
            VariableId::Q(g) if lattice.contains(g) => Ok(Some(
                lattice
                    .below(g)
                    .map(|h| Polynomial::var(VariableId::P(lattice.states()[h].clone())))
                    .fold(Polynomial::zero(), |a, b| a + b),
            )),
            VariableId::Q(_) => Err(Error::UnmappedVariable(v.to_string())),
            _ => Ok(None),
        })?;
        let value = evaluate_at_distribution(&poly, &dist)?;
        rows.push((line.to_string(), format_rational(&value)));
    }
    ok(match config.format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(p, v)| json!({ "polynomial": p, "value": v }))
                .collect(),
        )),
        Format::Text => rows.iter().map(|(p, v)| format!("{p} = {v}\n")).collect(),
    })
}

fn verify_suite(config: &CommandConfig, suite: Suite) -> Result<Outcome> {
    let (seed, trials) = (config.seed, config.trials);
    let report = match suite {
        Suite::Vanishing => match Model::load(config)? {
            Model::Dag(d) => verify::vanishing(&d)?,
            Model::Cbn(p) => verify::vanishing_ideals(&p),
        },
        Suite::Groebner => verify::groebner(&Model::load(config)?.lattice()),
        Suite::Theorem31 => verify::theorem31(&load_dag(config)?, trials, seed)?,
        Suite::Oracle => verify::oracle(&load_dag(config)?, trials, seed, config.oracle_limit)?,
        Suite::Moebius => verify::moebius(&load_dag(config)?, trials, seed)?,
        Suite::Eq5 => verify::eq5(&load_dag(config)?, trials, seed)?,
    };
    Ok(emit_report(&report, config.format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    fn config(command: Command, dag: &tempfile::NamedTempFile) -> CommandConfig {
        let mut c = CommandConfig::new(command);
        c.dag = Some(dag.path().to_path_buf());
        c
    }

    #[test]
    fn lattice_text_and_json() {
        let dag = file(crate::catalog::FIG2_DAG);
        let mut c = config(Command::Lattice, &dag);
        c.format = Format::Text;
        let out = run(&c);
        assert_eq!(out.status, 0);
        assert_eq!(out.output.lines().count(), 9);
        c.format = Format::Json;
        let v: Value = serde_json::from_str(&run(&c).output).unwrap();
        assert_eq!(v["count"], 9);
        assert_eq!(v["states"][5], "01011");
    }

    #[test]
    fn errors_are_machine_readable() {
        let bad = file("2 2\n1 2\n2 1\n");
        let out = run(&config(Command::Lattice, &bad));
        assert_eq!(out.status, 2);
        let v: Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["error"], "CyclicGraph");

        let out = run(&CommandConfig::new(Command::Lattice));
        assert_eq!(out.status, 2);
        assert!(out.output.contains("Usage"));
    }

    #[test]
    fn distribution_requires_theta() {
        let dag = file(crate::catalog::FIG2_DAG);
        let c = config(Command::Distribution, &dag);
        assert_eq!(run(&c).status, 2);
        let mut c = config(Command::Distribution, &dag);
        c.symbolic = true;
        c.format = Format::Text;
        let out = run(&c);
        assert!(
            out.output.contains("p[11111] = theta1^(1)*theta1^(2)"),
            "{}",
            out.output
        );
    }

    #[test]
    fn verify_failure_sets_status() {
        let dag = file(crate::catalog::FIG2_DAG);
        let mut c = config(Command::Verify(Suite::Oracle), &dag);
        c.trials = 2;
        c.oracle_limit = 5;
        assert_eq!(run(&c).status, 2);
        c.oracle_limit = DEFAULT_ORACLE_LIMIT;
        let out = run(&c);
        assert_eq!(out.status, 0);
        assert!(out
            .output
            .contains("2/2 trials, 9 states each, exact match"));
    }
}
