//! The `edge-ideals` command line: JSON in, JSON out.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or input
//! errors, 3 when the cost gate refuses a computation. Errors are printed on
//! standard output as `{"error": {"kind": ..., "message": ...}}`.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::betti::{self, BettiTable, View};
use crate::complex::FieldTag;
use crate::cost::CostGate;
use crate::error::Error;
use crate::graph::{Family, Graph};
use crate::ideal::{self, MonomialIdeal};
use crate::report::{invariant_report_with, FieldChoice};
use crate::suite::{self, DepthTarget, MultTarget, Settings, SuiteKind, SweepCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COST: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "edge-ideals", version, about = "Invariants of edge ideals of graphs")]
struct Cli {
    /// Lift the cost gate on exponential computations.
    #[arg(long, global = true)]
    unlimited: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph from a named family, or `construct <kind> ...` for a graph
    /// realizing a pair of invariants (reg-dim R D | mult-pair E TARGET V | depth-pair DELTA TARGET V).
    Gen {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Invariant report of a graph.
    Invariants {
        /// Graph JSON file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = FieldArg::Both)]
        field: FieldArg,
    },
    /// Betti table of a graph or of a monomial ideal.
    Betti {
        /// Graph or ideal JSON file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Hochster)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = SingleField::Q)]
        field: SingleField,
    },
    /// Symbolic power of an edge ideal and its regularity.
    Sympow {
        input: String,
        #[arg(long)]
        s: u32,
        /// Also compute the ordinary power and compare regularities.
        #[arg(long)]
        compare_ordinary: bool,
        #[arg(long, value_enum, default_value_t = SingleField::Q)]
        field: SingleField,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Default)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = SingleField::Q)]
        field: SingleField,
    },
    /// Exhaustive checks over all labeled graphs on at most `n` vertices.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value_t = SingleField::F2)]
        field: SingleField,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FieldArg {
    Q,
    F2,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SingleField {
    Q,
    F2,
}

impl SingleField {
    fn tag(self) -> FieldTag {
        match self {
            SingleField::Q => FieldTag::Q,
            SingleField::F2 => FieldTag::F2,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Algorithm {
    Hochster,
    Koszul,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    Default,
    Joins,
    Constructions,
    Minh,
}

/// A failed invocation: exit status plus the JSON printed for it.
struct Failure {
    code: i32,
    body: serde_json::Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::CostExceeded { .. } => (EXIT_COST, "cost"),
            Error::Malformed(_) => (EXIT_USAGE, "input"),
            _ => (EXIT_USAGE, "invalid"),
        };
        Failure {
            code,
            body: json!({"error": {"kind": kind, "message": e.to_string()}}),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        body: json!({"error": {"kind": "usage", "message": msg.into()}}),
    }
}

/// Runs one invocation (`argv[0]` is the program name), writing JSON to `out`
/// and returning the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            return emit(out, &usage(e.to_string().trim_end()).body, EXIT_USAGE);
        }
    };
    let gate = if cli.unlimited {
        CostGate::unlimited()
    } else {
        CostGate::default()
    };
    match dispatch(cli.command, gate) {
        Ok((body, code)) => emit(out, &body, code),
        Err(f) => emit(out, &f.body, f.code),
    }
}

fn emit(out: &mut dyn Write, body: &serde_json::Value, code: i32) -> i32 {
    let text = serde_json::to_string(body).expect("json values serialize");
    if writeln!(out, "{text}").is_err() {
        return EXIT_USAGE;
    }
    code
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut s)).map(|_| ())
    };
    res.map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

enum Input {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

fn parse_input(text: &str) -> Result<Input, Failure> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Failure::from(Error::Malformed(e.to_string())))?;
    if v.get("edges").is_some() {
        Ok(Input::Graph(Graph::from_json(text)?))
    } else if v.get("gens").is_some() {
        serde_json::from_value(v)
            .map(Input::Ideal)
            .map_err(|e| Error::Malformed(e.to_string()).into())
    } else {
        Err(Error::Malformed("expected a graph {\"n\", \"edges\"} or an ideal {\"n\", \"gens\"}".into()).into())
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    match parse_input(&read_input(path)?)? {
        Input::Graph(g) => Ok(g),
        Input::Ideal(_) => Err(Error::Malformed("expected a graph, got an ideal".into()).into()),
    }
}

fn numbers(params: &[String]) -> Result<Vec<usize>, Failure> {
    params
        .iter()
        .map(|p| p.parse().map_err(|_| usage(format!("expected a non-negative integer, got `{p}`"))))
        .collect()
}

fn gen(family: &str, params: &[String], gate: CostGate) -> Result<(serde_json::Value, i32), Failure> {
    if family != "construct" {
        let g = Family::parse(family, &numbers(params)?)?.build()?;
        return Ok((to_value(&g), EXIT_OK));
    }
    let settings = Settings {
        gate,
        ..Settings::default()
    };
    let (kind, rest) = params
        .split_first()
        .ok_or_else(|| usage("construct needs a kind: reg-dim, mult-pair, depth-pair"))?;
    let arity = |k: usize| {
        if rest.len() == k {
            Ok(())
        } else {
            Err(usage(format!("construct {kind} takes {k} arguments")))
        }
    };
    let c = match kind.as_str() {
        "reg-dim" => {
            arity(2)?;
            let v = numbers(rest)?;
            suite::construct_reg_dim(v[0], v[1], &settings)?
        }
        "mult-pair" => {
            arity(3)?;
            let target = MultTarget::parse(&rest[1])?;
            let (e, v) = (numbers(&rest[..1])?[0], numbers(&rest[2..])?[0]);
            suite::construct_mult_pair(e, target, v, &settings)?
        }
        "depth-pair" => {
            arity(3)?;
            let target = DepthTarget::parse(&rest[1])?;
            let (d, v) = (numbers(&rest[..1])?[0], numbers(&rest[2..])?[0]);
            suite::construct_depth_pair(d, target, v, &settings)?
        }
        other => return Err(usage(format!("unknown construction `{other}`"))),
    };
    let code = if c.checks.iter().any(|r| r.is_failure()) {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    };
    Ok((to_value(&c), code))
}

fn betti_json(t: &BettiTable) -> serde_json::Value {
    json!({
        "n": t.n,
        "field": t.field,
        "reg_SmodI": t.regularity(View::Quotient),
        "pd": t.pd_depth().0,
        "table": t,
    })
}

fn betti_cmd(path: &str, algorithm: Algorithm, field: FieldTag, gate: CostGate) -> Result<(serde_json::Value, i32), Failure> {
    let input = parse_input(&read_input(path)?)?;
    let ideal = match &input {
        Input::Graph(g) => ideal::edge_ideal(g),
        Input::Ideal(i) => i.clone(),
    };
    let hochster = || -> Result<BettiTable, Failure> {
        match &input {
            Input::Graph(g) => Ok(betti::betti_hochster_gated(g, field, &gate)?),
            Input::Ideal(i) => {
                gate.check_hochster(i.n())?;
                Ok(betti::betti_hochster_squarefree(i, field)?)
            }
        }
    };
    let koszul = || -> Result<BettiTable, Failure> { Ok(betti::betti_koszul_gated(&ideal, field, &gate)?) };
    Ok(match algorithm {
        Algorithm::Hochster => (betti_json(&hochster()?), EXIT_OK),
        Algorithm::Koszul => (betti_json(&koszul()?), EXIT_OK),
        Algorithm::Both => {
            let (h, k) = (hochster()?, koszul()?);
            let agree = h == k;
            if !agree {
                log::error!("Hochster and upper-Koszul tables disagree");
            }
            let mut body = betti_json(&h);
            body["agree"] = json!(agree);
            if !agree {
                body["koszul_table"] = to_value(&k);
            }
            (body, if agree { EXIT_OK } else { EXIT_VERIFICATION })
        }
    })
}

fn dispatch(cmd: Command, gate: CostGate) -> Result<(serde_json::Value, i32), Failure> {
    match cmd {
        Command::Gen { family, params } => gen(&family, &params, gate),
        Command::Invariants { input, field } => {
            let g = read_graph(&input)?;
            let choice = match field {
                FieldArg::Q => FieldChoice::Q,
                FieldArg::F2 => FieldChoice::F2,
                FieldArg::Both => FieldChoice::Both,
            };
            let r = invariant_report_with(&g, choice, &gate)?;
            Ok((to_value(&r), EXIT_OK))
        }
        Command::Betti { input, algorithm, field } => betti_cmd(&input, algorithm, field.tag(), gate),
        Command::Sympow {
            input,
            s,
            compare_ordinary,
            field,
        } => {
            let g = read_graph(&input)?;
            if s == 0 {
                return Err(usage("--s must be at least 1"));
            }
            let settings = Settings {
                field: field.tag(),
                gate,
            };
            let sym = ideal::symbolic_power(&g, s)?;
            let reg_sym = betti::betti_koszul_gated(&sym, settings.field, &gate)?.regularity(View::Ideal);
            let mut body = json!({
                "s": s,
                "field": settings.field,
                "ideal": sym,
                "reg_symbolic": reg_sym,
            });
            if compare_ordinary {
                let ord = ideal::power(&ideal::edge_ideal(&g), s)?;
                let reg_ord = betti::betti_koszul_gated(&ord, settings.field, &gate)?.regularity(View::Ideal);
                body["reg_ordinary"] = json!(reg_ord);
                body["equal"] = json!(reg_ord == reg_sym);
                body["ideals_equal"] = json!(ord == sym);
            }
            Ok((body, EXIT_OK))
        }
        Command::Verify { suite: which, field } => {
            let kind = match which {
                SuiteArg::Default => SuiteKind::Default,
                SuiteArg::Joins => SuiteKind::Joins,
                SuiteArg::Constructions => SuiteKind::Constructions,
                SuiteArg::Minh => SuiteKind::Minh,
            };
            let settings = Settings {
                field: field.tag(),
                gate,
            };
            log::info!("running {kind:?} suite over {:?}", settings.field);
            let report = suite::run_suite(kind, &settings);
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok((to_value(&report), code))
        }
        Command::Sweep { n, checks, field } => {
            let checks = SweepCheck::parse_list(&checks)?;
            let settings = Settings {
                field: field.tag(),
                gate,
            };
            let report = suite::sweep_small_graphs(n, &checks, &settings)?;
            let code = if report.failed() == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok((to_value(&report), code))
        }
    }
}
