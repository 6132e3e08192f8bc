use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use strandtrace_core::diagrams::{
    closed_form_single_crossing, closed_form_single_crossing_raw, diagram_csf, evaluate_diagram,
    full_trace, generate_diagrams, iterate_trace_partial, reduce_to_h, CsfMode, SearchMode,
    StrandDiagram,
};
use strandtrace_core::identities::{double_sum_identity_check, factorial_h_check, newton_check};
use strandtrace_core::oracle::ch_gamma;
use strandtrace_core::orders::{enumerate_shapes, find_pattern, ShapeFilter, StaircaseShape};
use strandtrace_core::{Basis, Positivity, SymFun};

use crate::format::{coeff_string, step_json, terms_json, DiagramJson, SearchLine};
use crate::report::Report;
use crate::CliError;

/// Caps the rayon pool at `STRAND_TRACE_THREADS` workers when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("STRAND_TRACE_THREADS") else {
        return Ok(());
    };
    let threads = value
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Input(format!(
                "STRAND_TRACE_THREADS={value:?} is not a positive integer"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn lambda_string(shape: &StaircaseShape) -> String {
    let parts: Vec<String> = shape
        .lambda()
        .parts()
        .iter()
        .map(usize::to_string)
        .collect();
    parts.join(",")
}

fn term_record(report: &mut Report, f: &SymFun) {
    for (l, c) in f.terms() {
        let mut m = Map::new();
        m.insert("partition".into(), json!(l.parts()));
        m.insert("coeff".into(), coeff_string(c).into());
        report.push(m, vec![l.to_string(), c.to_string()]);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Via {
    Trace,
    Oracle,
    Both,
}

#[derive(Clone, Debug)]
pub struct ComputeArgs {
    pub shape: StaircaseShape,
    pub basis: Basis,
    pub via: Via,
    pub step_log: Option<PathBuf>,
}

struct TraceSide {
    value: SymFun,
    method: &'static str,
    steps: Option<usize>,
    /// Set when the reduction and the plain iterated trace disagree.
    conflict: Option<String>,
}

fn trace_side(shape: &StaircaseShape, step_log: Option<&PathBuf>) -> Result<TraceSide, CliError> {
    if !shape.is_211_avoiding() {
        eprintln!(
            "notice: λ=({}) in stair({}) contains 2+1+1, so the reduction does not apply; \
             using the colored-diagram sum instead",
            lambda_string(shape),
            shape.n()
        );
        return Ok(TraceSide {
            value: diagram_csf(&shape.diagram(), CsfMode::Distinct)?,
            method: "colored-diagram",
            steps: None,
            conflict: None,
        });
    }
    let reduction = reduce_to_h(shape, true)?;
    if let Some(path) = step_log {
        let mut w = BufWriter::new(File::create(path)?);
        for (k, step) in reduction.steps.iter().enumerate() {
            serde_json::to_writer(&mut w, &step_json(k, step))?;
            writeln!(w)?;
        }
        w.flush()?;
    }
    let traced = full_trace(&shape.diagram())?.to_basis(Basis::Homogeneous);
    let conflict = (traced != reduction.value).then(|| {
        format!(
            "iterated trace gives {traced}, reduction gives {}",
            reduction.value
        )
    });
    Ok(TraceSide {
        value: reduction.value,
        method: "reduction",
        steps: Some(reduction.steps.len()),
        conflict,
    })
}

pub fn compute(args: &ComputeArgs) -> Result<Report, CliError> {
    compute_with(args, |f| f)
}

/// As [`compute`], with `perturb` applied to the trace-side value before any
/// comparison. Used to check that mismatches are caught.
pub fn compute_with(
    args: &ComputeArgs,
    perturb: impl Fn(SymFun) -> SymFun,
) -> Result<Report, CliError> {
    let shape = &args.shape;
    let mut report = Report::new("compute", &["partition", "coeff"]);
    report.param("lambda", lambda_string(shape));
    report.param("n", shape.n());
    report.param("basis", args.basis.tag().to_string());
    report.param("via", value_name(args.via));

    let traced = match args.via {
        Via::Oracle => None,
        _ => Some(trace_side(shape, args.step_log.as_ref())?),
    };
    let traced = traced.map(|t| TraceSide {
        value: perturb(t.value),
        ..t
    });
    let oracle = match args.via {
        Via::Trace => None,
        _ => Some(ch_gamma(shape)?),
    };

    let value = match (&traced, &oracle) {
        (Some(t), Some(o)) => {
            let t_h = t.value.to_basis(Basis::Homogeneous);
            let o_h = o.to_basis(Basis::Homogeneous);
            let agree = t_h == o_h;
            report.summarize("agree", agree);
            if !agree {
                report.summarize("trace", t_h.to_string());
                report.summarize("oracle", o_h.to_string());
                report.fail();
            }
            o.clone()
        }
        (Some(t), None) => t.value.clone(),
        (None, Some(o)) => o.clone(),
        (None, None) => unreachable!("at least one side runs"),
    };
    if let Some(t) = &traced {
        report.summarize("method", t.method);
        if let Some(steps) = t.steps {
            report.summarize("steps", steps);
        }
        if let Some(conflict) = &t.conflict {
            report.summarize("conflict", conflict.clone());
            report.fail();
        }
    }
    let value = value.to_basis(args.basis);
    report.summarize("value", value.to_string());
    report.summarize("h_positive", value.is_h_positive().is_positive());
    term_record(&mut report, &value);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    ClosedForm,
    Trace,
    All,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    pub max_n: usize,
    pub max_k: usize,
    pub max_i: usize,
}

pub const VERIFY_MAX_N: usize = 10;
pub const VERIFY_MAX_K: usize = 12;
pub const VERIFY_MAX_I: usize = 40;

#[derive(Clone, Debug)]
enum Case {
    FactorialH(usize),
    Newton(usize),
    DoubleSum(usize, usize),
    ClosedForm(usize, usize),
    Trace(StaircaseShape),
}

impl Case {
    fn suite(&self) -> &'static str {
        match self {
            Case::FactorialH(_) | Case::Newton(_) | Case::DoubleSum(..) => "identities",
            Case::ClosedForm(..) => "closed-form",
            Case::Trace(_) => "trace",
        }
    }

    fn name(&self) -> String {
        match self {
            Case::FactorialH(n) => format!("n! h_n, n={n}"),
            Case::Newton(i) => format!("h_i from power sums, i={i}"),
            Case::DoubleSum(a, b) => format!("double sum, a={a} b={b}"),
            Case::ClosedForm(n, k) => format!("single crossing, n={n} k={k}"),
            Case::Trace(s) => format!("λ=({}) n={}", lambda_string(s), s.n()),
        }
    }

    /// `None` on success, otherwise a description of the failure.
    fn run(&self) -> Option<String> {
        let ok = |b: bool| {
            if b {
                None
            } else {
                Some("sides differ".to_string())
            }
        };
        match self {
            Case::FactorialH(n) => ok(factorial_h_check(*n)),
            Case::Newton(i) => ok(newton_check(*i)),
            Case::DoubleSum(a, b) => ok(double_sum_identity_check(*a, *b)),
            Case::ClosedForm(n, k) => closed_form_case(*n, *k).err(),
            Case::Trace(shape) => trace_case(shape).err(),
        }
    }
}

fn closed_form_case(n: usize, k: usize) -> Result<(), String> {
    let d = StrandDiagram::from_pairs(n, &[(1, n)]).map_err(|e| e.to_string())?;
    let brute = iterate_trace_partial(&d, k, n - 1).map_err(|e| e.to_string())?;
    let closed = closed_form_single_crossing(n, k).map_err(|e| e.to_string())?;
    let raw = closed_form_single_crossing_raw(n, k).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if !closed.is_h_nonnegative() {
        problems.push(format!("negative net coefficient in {closed:?}"));
    }
    if closed.expand().map_err(|e| e.to_string())? != brute {
        problems.push(format!(
            "closed form {closed:?} differs from brute force {brute:?}"
        ));
    }
    if raw != brute {
        problems.push(format!(
            "raw form {raw:?} differs from brute force {brute:?}"
        ));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn trace_case(shape: &StaircaseShape) -> Result<(), String> {
    let d = shape.diagram();
    let oracle = ch_gamma(shape).map_err(|e| e.to_string())?;
    let traced = full_trace(&d).map_err(|e| e.to_string())?;
    let distinct = diagram_csf(&d, CsfMode::Distinct).map_err(|e| e.to_string())?;
    let reduction = reduce_to_h(shape, true).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if traced != oracle {
        problems.push(format!("trace {traced} vs oracle {oracle}"));
    }
    if distinct != oracle {
        problems.push(format!("colored diagram {distinct} vs oracle {oracle}"));
    }
    if reduction.value != oracle.to_basis(Basis::Homogeneous) {
        problems.push(format!("reduction {} vs oracle", reduction.value));
    }
    if !reduction.all_steps_h_nonnegative() || !reduction.value.is_nonnegative() {
        problems.push("negative h coefficient during reduction".to_string());
    }
    if !reduction.degrees_consistent() {
        problems.push("degree bookkeeping broken".to_string());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn cases(args: &VerifyArgs) -> Result<Vec<Case>, CliError> {
    let mut out = Vec::new();
    let wants = |s: Suite| args.suite == s || args.suite == Suite::All;
    if wants(Suite::Identities) {
        out.extend((0..=args.max_n).map(Case::FactorialH));
        out.extend((1..=args.max_i).map(Case::Newton));
        for a in 0..=args.max_k {
            out.extend((0..=args.max_k).map(|b| Case::DoubleSum(a, b)));
        }
    }
    if wants(Suite::ClosedForm) {
        for n in 2..=args.max_n {
            out.extend((0..=args.max_k).map(|k| Case::ClosedForm(n, k)));
        }
    }
    if wants(Suite::Trace) {
        for n in 1..=args.max_n {
            out.extend(
                enumerate_shapes(n, ShapeFilter::Avoiding211)?
                    .into_iter()
                    .map(Case::Trace),
            );
        }
    }
    Ok(out)
}

pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    if args.max_n > VERIFY_MAX_N || args.max_k > VERIFY_MAX_K || args.max_i > VERIFY_MAX_I {
        return Err(CliError::Input(format!(
            "bounds must satisfy max-n ≤ {VERIFY_MAX_N}, max-k ≤ {VERIFY_MAX_K}, max-i ≤ {VERIFY_MAX_I}"
        )));
    }
    let mut report = Report::new("verify", &["suite", "case", "result", "detail"]);
    report.param("suite", value_name(args.suite));
    report.param("max_n", args.max_n);
    report.param("max_k", args.max_k);
    report.param("max_i", args.max_i);

    let cases = cases(args)?;
    let outcomes: Vec<Option<String>> = cases.par_iter().map(Case::run).collect();
    let failed = outcomes.iter().filter(|o| o.is_some()).count();
    for (case, outcome) in cases.iter().zip(outcomes) {
        let mut m = Map::new();
        m.insert("suite".into(), case.suite().into());
        m.insert("case".into(), case.name().into());
        m.insert("pass".into(), outcome.is_none().into());
        m.insert(
            "detail".into(),
            outcome.clone().map_or(Value::Null, Value::from),
        );
        let result = if outcome.is_none() { "pass" } else { "FAIL" };
        report.push(
            m,
            vec![
                case.suite().to_string(),
                case.name(),
                result.to_string(),
                outcome.unwrap_or_default(),
            ],
        );
    }
    report.summarize("cases", cases.len());
    report.summarize("passed", cases.len() - failed);
    report.summarize("failed", failed);
    if failed > 0 {
        report.fail();
    }
    Ok(report)
}

fn witness_string(chains: &[Vec<usize>]) -> String {
    let chains: Vec<String> = chains
        .iter()
        .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join("≺"))
        .collect();
    format!("({})", chains.join("; "))
}

pub fn classify(shape: &StaircaseShape) -> Result<Report, CliError> {
    let mut report = Report::new(
        "classify",
        &["pattern", "corner rule", "brute force", "witness"],
    );
    report.param("lambda", lambda_string(shape));
    report.param("n", shape.n());
    let corners: Vec<[usize; 2]> = shape.corners().iter().map(|c| [c.column, c.row]).collect();
    report.summarize("corners", json!(corners));
    let d = shape.diagram();
    report.summarize("crossings", d.to_string());
    report.summarize("diagram", serde_json::to_value(DiagramJson::from(&d))?);

    let order = shape.poset();
    let verdict = |avoids: bool| if avoids { "avoids" } else { "contains" };
    for (name, pattern, by_corners) in [
        ("3+1", &[3, 1][..], true),
        ("2+2", &[2, 2][..], true),
        ("2+1+1", &[2, 1, 1][..], shape.is_211_avoiding()),
    ] {
        let witness = find_pattern(&order, pattern)?;
        let brute = witness.is_none();
        if brute != by_corners {
            report.fail();
        }
        let mut m = Map::new();
        m.insert("pattern".into(), name.into());
        m.insert("corner_rule_avoids".into(), by_corners.into());
        m.insert("brute_force_avoids".into(), brute.into());
        m.insert(
            "witness".into(),
            witness.as_ref().map_or(Value::Null, |w| json!(w)),
        );
        report.push(
            m,
            vec![
                name.to_string(),
                verdict(by_corners).to_string(),
                verdict(brute).to_string(),
                witness.as_deref().map(witness_string).unwrap_or_default(),
            ],
        );
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct SearchArgs {
    pub strands: usize,
    pub max_crossings: usize,
    pub mode: SearchMode,
    pub out: Option<PathBuf>,
}

pub fn search(args: &SearchArgs) -> Result<Report, CliError> {
    let mut report = Report::new("search", &["diagram", "h", "verdict"]);
    report.param("strands", args.strands);
    report.param("max_crossings", args.max_crossings);
    match args.mode {
        SearchMode::Exhaustive => report.param("mode", "exhaustive"),
        SearchMode::Random { seed, samples } => {
            report.param("mode", "random");
            report.param("seed", seed);
            report.param("samples", samples);
        }
    }

    let diagrams = generate_diagrams(args.strands, args.max_crossings, args.mode)?;
    let records = diagrams
        .par_iter()
        .map(evaluate_diagram)
        .collect::<Result<Vec<_>, _>>()?;

    let mut log = match &args.out {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let mut negative = Vec::new();
    for r in &records {
        let d = DiagramJson::from(&r.diagram);
        let line = SearchLine {
            n: d.n,
            crossings: d.crossings,
            h: terms_json(&r.h),
            positive: r.verdict.is_positive(),
        };
        if let Some(w) = log.as_mut() {
            serde_json::to_writer(&mut *w, &line)?;
            writeln!(w)?;
        }
        let verdict = match &r.verdict {
            Positivity::Positive(_) => "positive".to_string(),
            Positivity::Negative { witness, coeff } => {
                negative.push(r.diagram.to_string());
                format!("negative: {coeff} at h{witness}")
            }
        };
        let Value::Object(m) = serde_json::to_value(&line)? else {
            unreachable!("search lines serialize to objects")
        };
        report.push(m, vec![r.diagram.to_string(), r.h.to_string(), verdict]);
    }
    if let Some(mut w) = log {
        w.flush()?;
    }
    report.summarize("diagrams", records.len());
    report.summarize("counterexamples", negative.len());
    if let Some(first) = negative.first() {
        report.summarize("first_counterexample", first.clone());
        report.fail();
    }
    Ok(report)
}
