//! Command-line front end: parse a disjunctive program, compute the
//! requested semantics, and emit text or JSON.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use ndaft::fixpoint::{
    consistent_stable_fixpoints, fixpoints, kk_interpretations, kk_state, stable_fixpoints,
    wf_state, wfsd, IterationTrace,
};
use ndaft::json::{
    interpretation_to_json, state_to_json, trace_to_json, InterpretationJson, StateJson,
    TraceStepJson,
};
use ndaft::lattice::{FiniteLattice, State};
use ndaft::operators::{check_properties, DmtNdao, IcMinNdao, IcNdao, Ndao, PropertyReport};
use ndaft::oracle::{run_theorem_suite, OperatorChoice, TheoremResult, TheoremStatus};
use ndaft::semantics::{
    enumerate_interpretations, is_model, is_supported, is_three_valued_stable,
    is_weakly_supported,
};
use ndaft::{Error, Program};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Models,
    WeaklySupported,
    Supported,
    StableModels,
    Fixpoints,
    KkInterpretations,
    StableFixpoints,
    KkState,
    WfState,
    Wfsd,
    CheckOperator,
    Theorems,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Models => "models",
            Mode::WeaklySupported => "weakly-supported",
            Mode::Supported => "supported",
            Mode::StableModels => "stable-models",
            Mode::Fixpoints => "fixpoints",
            Mode::KkInterpretations => "kk-interpretations",
            Mode::StableFixpoints => "stable-fixpoints",
            Mode::KkState => "kk-state",
            Mode::WfState => "wf-state",
            Mode::Wfsd => "wfsd",
            Mode::CheckOperator => "check-operator",
            Mode::Theorems => "theorems",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operator {
    Ic,
    IcMin,
    Dmt,
}

impl Operator {
    fn name(self) -> &'static str {
        match self {
            Operator::Ic => "ic",
            Operator::IcMin => "ic-min",
            Operator::Dmt => "dmt",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Fixpoint semantics for propositional disjunctive logic programs.
#[derive(Debug, Parser)]
#[command(name = "ndaft", version, about)]
struct Cli {
    /// Program file; `-` reads from stdin.
    input: String,

    /// What to compute.
    #[arg(long, value_enum)]
    mode: Mode,

    /// Approximating operator for the operator-based modes.
    #[arg(long, value_enum, default_value_t = Operator::Ic)]
    operator: Operator,

    /// Restrict pair enumeration to consistent interpretations.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    consistent_only: bool,

    /// Also list the members of computed convex states.
    #[arg(long)]
    convex_members: bool,

    /// Include the iteration trace for state modes.
    #[arg(long)]
    trace: bool,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Atom-count guard for exhaustive enumeration (env: NDAFT_GUARD_ATOMS).
    #[arg(long)]
    guard_atoms: Option<usize>,
}

#[derive(Serialize)]
struct PropertyCheckJson {
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct PropertyReportJson {
    ai_monotone: PropertyCheckJson,
    exact: PropertyCheckJson,
    symmetric: PropertyCheckJson,
    consistent: PropertyCheckJson,
    pairs_checked: u64,
    comparisons: u64,
    exhaustive: bool,
}

#[derive(Serialize)]
struct Output {
    mode: &'static str,
    atoms: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    operator: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interpretations: Option<Vec<InterpretationJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    state: Option<StateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceStepJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<PropertyReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorems: Option<Vec<TheoremResult>>,
    #[serde(skip)]
    member_count: Option<usize>,
}

impl Output {
    fn new(mode: Mode, atoms: Vec<String>) -> Output {
        Output {
            mode: mode.name(),
            atoms,
            operator: None,
            interpretations: None,
            state: None,
            trace: None,
            report: None,
            theorems: None,
            member_count: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => ExitCode::from(3),
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::domain(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))
    }
}

fn guard_atoms(cli: &Cli) -> Result<usize, Error> {
    if let Some(n) = cli.guard_atoms {
        return Ok(n);
    }
    match std::env::var("NDAFT_GUARD_ATOMS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| Error::domain(format!("NDAFT_GUARD_ATOMS is not a number: {v}"))),
        Err(_) => Ok(ndaft::semantics::DEFAULT_ATOM_GUARD),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let text = read_input(&cli.input)?;
    let program = Program::parse(&text)?;
    let atom_guard = guard_atoms(cli)?;
    if program.atom_count() > atom_guard {
        return Err(Error::capacity(format!(
            "program has {} atoms, exceeding the guard of {atom_guard} \
             (raise it with --guard-atoms or NDAFT_GUARD_ATOMS)",
            program.atom_count()
        )));
    }
    let scan_guard: u64 = 1u64 << atom_guard.min(62);
    if cli.operator == Operator::Dmt && !cli.consistent_only {
        return Err(Error::domain(
            "the interval operator is defined on consistent pairs only; \
             --consistent-only false cannot be combined with --operator dmt",
        ));
    }

    let lattice = program.lattice();
    let mut out = Output::new(cli.mode, program.atoms().to_vec());

    match cli.mode {
        Mode::Models | Mode::WeaklySupported | Mode::Supported | Mode::StableModels => {
            if !cli.consistent_only && cli.mode != Mode::Models {
                return Err(Error::domain(format!(
                    "{} is defined for consistent interpretations only",
                    cli.mode.name()
                )));
            }
            let pairs = enumerate_interpretations(&program, cli.consistent_only, atom_guard)?;
            let mut hits = Vec::new();
            for i in pairs {
                let keep = match cli.mode {
                    Mode::Models => is_model(i, &program, !cli.consistent_only)?,
                    Mode::WeaklySupported => is_weakly_supported(i, &program)?,
                    Mode::Supported => is_supported(i, &program)?,
                    Mode::StableModels => is_three_valued_stable(i, &program)?,
                    _ => unreachable!(),
                };
                if keep {
                    hits.push(i);
                }
            }
            out.interpretations =
                Some(hits.iter().map(|&i| interpretation_to_json(&lattice, i)).collect());
        }
        Mode::Fixpoints | Mode::KkInterpretations | Mode::StableFixpoints => {
            let op = build_operator(cli.operator, &program);
            out.operator = Some(cli.operator.name());
            let pairs = match cli.mode {
                Mode::Fixpoints => fixpoints(op.as_ref(), cli.consistent_only, scan_guard)?,
                Mode::KkInterpretations => {
                    kk_interpretations(op.as_ref(), cli.consistent_only, scan_guard)?
                }
                // The consistent route agrees with the stable-models mode
                // on every program; the unrestricted operator route stays
                // available for inconsistent-pair exploration.
                Mode::StableFixpoints => {
                    if cli.consistent_only {
                        consistent_stable_fixpoints(op.as_ref(), scan_guard)?
                    } else {
                        stable_fixpoints(op.as_ref(), false, scan_guard)?
                    }
                }
                _ => unreachable!(),
            };
            out.interpretations =
                Some(pairs.iter().map(|&i| interpretation_to_json(&lattice, i)).collect());
        }
        Mode::KkState | Mode::WfState => {
            let op = build_operator(cli.operator, &program);
            out.operator = Some(cli.operator.name());
            let (state, trace) = match cli.mode {
                Mode::KkState => kk_state(op.as_ref())?,
                _ => wf_state(op.as_ref(), scan_guard)?,
            };
            fill_state(&mut out, &lattice, &state, &trace, cli)?;
        }
        Mode::Wfsd => {
            // The alternating reduct semantics is operator-independent.
            let (state, trace) = wfsd(&program)?;
            fill_state(&mut out, &lattice, &state, &trace, cli)?;
        }
        Mode::CheckOperator => {
            let op = build_operator(cli.operator, &program);
            out.operator = Some(cli.operator.name());
            let report = check_properties(op.as_ref(), scan_guard.saturating_mul(scan_guard))?;
            out.report = Some(report_to_json(&report));
        }
        Mode::Theorems => {
            let choice = match cli.operator {
                Operator::Ic => OperatorChoice::Ic,
                Operator::IcMin => OperatorChoice::IcMin,
                Operator::Dmt => OperatorChoice::Dmt,
            };
            out.operator = Some(cli.operator.name());
            out.theorems = Some(run_theorem_suite(&program, choice)?);
        }
    }

    let rendered = match cli.format {
        Format::Json => {
            let mut doc = serde_json::to_string_pretty(&out).expect("serializable output");
            doc.push('\n');
            doc
        }
        Format::Text => render_text(&out),
    };
    // Tolerate a closed pipe (e.g. `ndaft ... | head`).
    use std::io::Write;
    if let Err(e) = std::io::stdout().write_all(rendered.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(Error::internal(format!("cannot write output: {e}")));
        }
    }
    Ok(())
}

fn build_operator(operator: Operator, program: &Program) -> Box<dyn Ndao> {
    match operator {
        Operator::Ic => Box::new(IcNdao::new(program.clone())),
        Operator::IcMin => Box::new(IcMinNdao::new(program.clone())),
        Operator::Dmt => Box::new(DmtNdao::new(program.clone())),
    }
}

fn fill_state(
    out: &mut Output,
    lattice: &FiniteLattice,
    state: &State,
    trace: &IterationTrace,
    cli: &Cli,
) -> Result<(), Error> {
    out.member_count = Some(lattice.convex_members(state)?.len());
    out.state = Some(state_to_json(lattice, state, cli.convex_members)?);
    if cli.trace {
        out.trace = Some(trace_to_json(lattice, trace)?);
    }
    Ok(())
}

fn report_to_json(report: &PropertyReport) -> PropertyReportJson {
    let conv = |c: &ndaft::operators::PropertyCheck| PropertyCheckJson {
        holds: c.holds,
        witness: c.witness.clone(),
    };
    PropertyReportJson {
        ai_monotone: conv(&report.ai_monotone),
        exact: conv(&report.exact),
        symmetric: conv(&report.symmetric),
        consistent: conv(&report.consistent),
        pairs_checked: report.pairs_checked,
        comparisons: report.comparisons,
        exhaustive: report.exhaustive,
    }
}

fn set_name(atoms: &[String]) -> String {
    format!("{{{}}}", atoms.join(","))
}


fn render_text(out: &Output) -> String {
    use std::fmt::Write;
    let mut buf = String::new();
    let _ = writeln!(buf, "mode: {}", out.mode);
    if let Some(op) = out.operator {
        let _ = writeln!(buf, "operator: {op}");
    }
    let _ = writeln!(buf, "atoms: {}", out.atoms.join(" "));
    if let Some(interps) = &out.interpretations {
        let _ = writeln!(buf, "count: {}", interps.len());
        for i in interps {
            let _ = writeln!(buf, "({}, {})", set_name(&i.lower), set_name(&i.upper));
        }
    }
    if let Some(state) = &out.state {
        let lower: Vec<String> = state.lower_antichain.iter().map(|s| set_name(s)).collect();
        let upper: Vec<String> = state.upper_antichain.iter().map(|s| set_name(s)).collect();
        let _ = writeln!(buf, "lower antichain (minimal elements): {}", lower.join(", "));
        let _ = writeln!(buf, "upper antichain (maximal elements): {}", upper.join(", "));
        if let Some(n) = out.member_count {
            let _ = writeln!(buf, "convex members: {n}");
        }
        if let Some(listed) = &state.convex_members {
            let names: Vec<String> = listed.iter().map(|s| set_name(s)).collect();
            let _ = writeln!(buf, "members: {}", names.join(", "));
        }
    }
    if let Some(trace) = &out.trace {
        for step in trace {
            let lower: Vec<String> =
                step.state.lower_antichain.iter().map(|s| set_name(s)).collect();
            let upper: Vec<String> =
                step.state.upper_antichain.iter().map(|s| set_name(s)).collect();
            let _ = writeln!(
                buf,
                "step {}: lower {} upper {}",
                step.step,
                lower.join(", "),
                upper.join(", ")
            );
        }
    }
    if let Some(report) = &out.report {
        let mut show = |name: &str, c: &PropertyCheckJson| match (&c.holds, &c.witness) {
            (true, _) => {
                let _ = writeln!(buf, "{name}: holds");
            }
            (false, Some(w)) => {
                let _ = writeln!(buf, "{name}: fails ({w})");
            }
            (false, None) => {
                let _ = writeln!(buf, "{name}: fails");
            }
        };
        show("ai-monotone", &report.ai_monotone);
        show("exact", &report.exact);
        show("symmetric", &report.symmetric);
        show("consistent", &report.consistent);
        let _ = writeln!(
            buf,
            "checked: {} pairs, {} comparisons, exhaustive: {}",
            report.pairs_checked, report.comparisons, report.exhaustive
        );
    }
    if let Some(theorems) = &out.theorems {
        for t in theorems {
            let status = match t.status {
                TheoremStatus::Pass => "pass",
                TheoremStatus::Fail => "FAIL",
                TheoremStatus::Skipped => "skipped",
            };
            match &t.counterexample {
                Some(detail) if t.status != TheoremStatus::Pass => {
                    let _ = writeln!(buf, "{}: {status} ({detail})", t.name);
                }
                _ => {
                    let _ = writeln!(buf, "{}: {status} [{} pairs]", t.name, t.pairs_checked);
                }
            }
        }
    }
    buf
}
