//! Command-line front end: problem files in, bases, verdicts, syzygies and
//! resolutions out.
//!
//! Exit codes: 0 on success, 1 on a negative verdict (not a member, criterion
//! fails), 2 when the input could not be read, parsed or computed.

pub mod render;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pirgb::groebner::{buchberger, criterion_check, minimize, BuchbergerConfig};
use pirgb::oracle::{member_bruteforce, DegreeBound, OracleVerdict};
use pirgb::resolution::{resolve, ResolveOptions};
use pirgb::syzygy::{collapse_same_lm, syzygy_basis};
use pirgb::text::{parse_element, parse_problem};
use pirgb::{BigFreeModule, BigModuleElement, BigProblemFile};
use serde_json::{json, Value};

use render::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pirgb",
    version,
    about = "Groebner bases, syzygies and free resolutions over products of Z and Z/N"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a Groebner basis of the generators.
    Groebner {
        file: PathBuf,
        /// Drop elements whose leading terms are redundant.
        #[arg(long)]
        minimize: bool,
        #[arg(long)]
        json: bool,
        /// Log every critical element with its division trace.
        #[arg(long)]
        trace: bool,
    },
    /// Test whether the generators already form a Groebner basis.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Divide a target element by a Groebner basis of the generators.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Decide membership of a target element in the generated submodule.
    Member {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Syzygy relations of a minimized Groebner basis of the generators.
    Syzygy {
        file: PathBuf,
        /// Merge relations sharing a leading module monomial.
        #[arg(long)]
        collapse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Free resolution by iterated syzygies.
    Resolve {
        file: PathBuf,
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        collapse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force membership with bounded multiplier degree.
    #[command(hide = true)]
    OracleMember {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

/// Output of one command: rendered text and exit code.
pub struct Report {
    pub code: u8,
    pub output: String,
}

impl Report {
    fn ok(output: String) -> Self {
        Report { code: EXIT_OK, output }
    }

    fn verdict(positive: bool, output: String) -> Self {
        Report {
            code: if positive { EXIT_OK } else { EXIT_NEGATIVE },
            output,
        }
    }
}

/// An input error, already formatted for stderr.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Outcome = Result<Report, InputError>;

fn load(path: &Path) -> Result<BigProblemFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| InputError(format!("{}:{e}", path.display())))
}

fn target(m: &BigFreeModule, text: &str) -> Result<BigModuleElement, InputError> {
    parse_element(m, text).map_err(|e| InputError(format!("--target:{e}")))
}

fn engine<T>(r: pirgb::Result<T>) -> Result<T, InputError> {
    r.map_err(|e| InputError(format!("error: {e}")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn groebner_cmd(p: &BigProblemFile, minimized: bool, json: bool, trace: bool) -> Outcome {
    let config = BuchbergerConfig {
        record_log: trace,
        ..BuchbergerConfig::default()
    };
    let full = engine(buchberger(&p.module, &p.generators, &config))?;
    let gb = if minimized {
        engine(minimize(&full))?
    } else {
        full.clone()
    };
    let m = &p.module;
    if json {
        let mut v = json!({
            "command": "groebner",
            "ring": ring_json(m),
            "certified": gb.is_certified(),
            "minimized": minimized,
            "basis": elements_json(m, gb.elements()),
        });
        if trace {
            v["log"] = Value::Array(
                full.log()
                    .iter()
                    .map(|e| {
                        let mut ev = kind_json(&e.kind);
                        ev["outcome"] = Value::String(format!("{:?}", e.outcome));
                        ev["trace"] = trace_json(&e.trace);
                        ev
                    })
                    .collect(),
            );
        }
        return Ok(Report::ok(pretty(&v)));
    }
    let mut out = String::new();
    if trace {
        for e in full.log() {
            out.push_str(&format!("# {}: {:?}\n", kind_label(&e.kind), e.outcome));
            for line in trace_text(m, &e.trace) {
                out.push_str(&format!("#   {line}\n"));
            }
        }
    }
    out.push_str(&format!(
        "# groebner basis, {} elements, certified {}\n",
        gb.len(),
        gb.is_certified()
    ));
    let file = BigProblemFile {
        module: m.clone(),
        generators: gb.into_elements(),
    };
    out.push_str(&file.render());
    Ok(Report::ok(out))
}

fn check_cmd(p: &BigProblemFile, json: bool) -> Outcome {
    let m = &p.module;
    let report = criterion_check(m, &p.generators);
    let passed = report.passed();
    if json {
        let witnesses: Vec<Value> = report
            .witnesses
            .iter()
            .map(|w| {
                let mut v = kind_json(&w.kind);
                v["remainder"] = element_json(m, &w.remainder);
                v
            })
            .collect();
        let v = json!({
            "command": "check",
            "groebner": passed,
            "checked": report.checked,
            "witnesses": witnesses,
        });
        return Ok(Report::verdict(passed, pretty(&v)));
    }
    let mut out = format!(
        "{} ({} critical elements checked)\n",
        if passed {
            "groebner basis"
        } else {
            "not a groebner basis"
        },
        report.checked
    );
    for w in &report.witnesses {
        out.push_str(&format!(
            "{} has remainder {}\n",
            kind_label(&w.kind),
            pirgb::text::render_element(m, &w.remainder)
        ));
    }
    Ok(Report::verdict(passed, out))
}

fn reduce_cmd(p: &BigProblemFile, text: &str, json: bool, trace: bool, membership: bool) -> Outcome {
    let m = &p.module;
    let f = target(m, text)?;
    let gb = engine(buchberger(m, &p.generators, &BuchbergerConfig::default()))?;
    let d = gb.reduce(&f);
    let member = d.remainder.is_zero();
    if json {
        let mut v = json!({
            "command": if membership { "member" } else { "reduce" },
            "target": element_json(m, &f),
            "basis": elements_json(m, gb.elements()),
            "quotients": d.quotients.iter().map(|q| poly_text(m, q)).collect::<Vec<_>>(),
            "remainder": element_json(m, &d.remainder),
        });
        if membership {
            v["member"] = Value::Bool(member);
        }
        if trace {
            v["trace"] = trace_json(&d.trace);
        }
        let report = if membership {
            Report::verdict(member, pretty(&v))
        } else {
            Report::ok(pretty(&v))
        };
        return Ok(report);
    }
    let mut out = String::new();
    if trace {
        for line in trace_text(m, &d.trace) {
            out.push_str(&format!("# {line}\n"));
        }
    }
    if membership {
        out.push_str(if member { "member\n" } else { "not a member\n" });
        out.push_str(&format!(
            "remainder: {}\n",
            pirgb::text::render_element(m, &d.remainder)
        ));
        return Ok(Report::verdict(member, out));
    }
    for (j, (q, g)) in d.quotients.iter().zip(gb.elements()).enumerate() {
        out.push_str(&format!(
            "q{} = {}    # f{} = {}\n",
            j + 1,
            poly_text(m, q),
            j + 1,
            pirgb::text::render_element(m, g)
        ));
    }
    out.push_str(&format!(
        "remainder: {}\n",
        pirgb::text::render_element(m, &d.remainder)
    ));
    Ok(Report::ok(out))
}

fn syzygy_cmd(p: &BigProblemFile, collapse: bool, json: bool) -> Outcome {
    let m = &p.module;
    let gb = engine(pirgb::groebner_basis(m, &p.generators).and_then(|g| minimize(&g)))?;
    let syz = engine(syzygy_basis(&gb))?;
    let l = syz.basis.module().clone();
    let rows: Vec<(Option<pirgb::groebner::CriticalKind>, BigModuleElement)> = if collapse {
        engine(collapse_same_lm(&syz.basis))?
            .into_elements()
            .into_iter()
            .map(|e| (None, e))
            .collect()
    } else {
        syz.relations
            .iter()
            .map(|r| (Some(r.kind), r.element.clone()))
            .collect()
    };
    if json {
        let relations: Vec<Value> = rows
            .iter()
            .map(|(kind, e)| {
                let mut v = kind.as_ref().map_or_else(|| json!({"kind": "merged"}), kind_json);
                v["element"] = element_json(&l, e);
                v["leading_term"] = Value::String(leading_text(&l, e));
                v
            })
            .collect();
        let v = json!({
            "command": "syzygy",
            "collapsed": collapse,
            "basis": elements_json(m, gb.elements()),
            "relations": relations,
        });
        return Ok(Report::ok(pretty(&v)));
    }
    let mut out = String::from("# basis\n");
    for (i, g) in gb.elements().iter().enumerate() {
        out.push_str(&format!("f{} = {}\n", i + 1, pirgb::text::render_element(m, g)));
    }
    out.push_str(&format!("# {} relations, leading terms in brackets\n", rows.len()));
    for (i, (kind, e)) in rows.iter().enumerate() {
        let label = kind.as_ref().map_or_else(|| format!("s{}", i + 1), kind_label);
        out.push_str(&format!(
            "{label} = {}    [{}]\n",
            pirgb::text::render_element(&l, e),
            leading_text(&l, e)
        ));
    }
    Ok(Report::ok(out))
}

fn resolve_cmd(p: &BigProblemFile, max_length: usize, collapse: bool, json: bool) -> Outcome {
    let m = &p.module;
    let res = engine(resolve(
        m,
        &p.generators,
        &ResolveOptions::new(max_length).collapse(collapse),
    ))?;
    let target = |k: usize| if k == 0 { m } else { &res.modules[k - 1] };
    if json {
        let differentials: Vec<Value> = res
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| elements_json(target(k), d))
            .collect();
        let v = json!({
            "command": "resolve",
            "ranks": res.ranks,
            "status": status_json(&res.status),
            "differentials": differentials,
        });
        return Ok(Report::ok(pretty(&v)));
    }
    let ranks: Vec<String> = res.ranks.iter().map(|r| r.to_string()).collect();
    let mut out = format!("ranks: {}\nstatus: {}\n", ranks.join(" "), status_text(&res.status));
    for (k, d) in res.differentials.iter().enumerate() {
        out.push_str(&format!("d{k}:\n"));
        for e in d {
            out.push_str(&format!("  {}\n", pirgb::text::render_element(target(k), e)));
        }
    }
    Ok(Report::ok(out))
}

fn oracle_cmd(p: &BigProblemFile, text: &str, bound: u32) -> Outcome {
    let m = &p.module;
    let f = target(m, text)?;
    let verdict = engine(member_bruteforce(m, &f, &p.generators, DegreeBound::new(bound)))?;
    Ok(match verdict {
        OracleVerdict::Member { witness } => {
            let mut out = String::from("member\n");
            for (j, q) in witness.iter().enumerate() {
                out.push_str(&format!("c{} = {}\n", j + 1, poly_text(m, q)));
            }
            Report::verdict(true, out)
        }
        OracleVerdict::NotMemberUpToBound { bound } => {
            Report::verdict(false, format!("not a member up to degree {}\n", bound.max_total_degree))
        }
    })
}

/// Runs one command without touching stdout or stderr.
pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Groebner {
            file,
            minimize,
            json,
            trace,
        } => groebner_cmd(&load(file)?, *minimize, *json, *trace),
        Command::Check { file, json } => check_cmd(&load(file)?, *json),
        Command::Reduce {
            file,
            target,
            json,
            trace,
        } => reduce_cmd(&load(file)?, target, *json, *trace, false),
        Command::Member {
            file,
            target,
            json,
            trace,
        } => reduce_cmd(&load(file)?, target, *json, *trace, true),
        Command::Syzygy { file, collapse, json } => syzygy_cmd(&load(file)?, *collapse, *json),
        Command::Resolve {
            file,
            max_length,
            collapse,
            json,
        } => {
            if *max_length == 0 {
                return Err(InputError("error: --max-length must be positive".into()));
            }
            resolve_cmd(&load(file)?, *max_length, *collapse, *json)
        }
        Command::OracleMember { file, target, bound } => oracle_cmd(&load(file)?, target, *bound),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli) {
        Ok(report) => {
            let _ = out.write_all(report.output.as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            EXIT_INPUT
        }
    }
}
