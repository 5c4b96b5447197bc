//! The `complete`, `basis` and `check` subcommands.

use std::io::Write;
use std::time::Duration;

use involutive::{
    buchberger, involutive_basis, is_involutively_autoreduced, minimal_involutive_basis,
    minimal_monomial_completion, same_ideal, verify_groebner, verify_involutive, BasisStatus,
    CompletionStatus, DivisionKind, EngineConfig, EngineError, Monomial, MonomialOrder, Outcome,
    Polynomial, Stats, TraceEvent, VarSet, VariableContext, Verification, VerifyMode,
};
use serde::Serialize;

use crate::input::{self, read_source};
use crate::{
    io_error, Algorithm, BasisArgs, CheckArgs, CliError, CompleteArgs, Format, EXIT_CAP_EXCEEDED,
    EXIT_OK, EXIT_VERIFICATION,
};

pub fn complete(
    args: &CompleteArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let common = &args.common;
    let text = read_source(&common.input)?;
    let input = input::monomials(&text, common.vars.as_ref(), common.order)?;
    if input.inferred {
        warn_inferred(err, &input.context)?;
    }
    let result =
        minimal_monomial_completion(common.division, &input.monomials, input.order, args.cap);
    for m in result.sorted_basis(input.order) {
        writeln!(out, "{}", m.display(&input.context)).map_err(io_error)?;
    }
    writeln!(
        out,
        "# status: {} steps: {}",
        result.status.name(),
        result.steps
    )
    .map_err(io_error)?;
    Ok(match result.status {
        CompletionStatus::Complete => EXIT_OK,
        CompletionStatus::CapExceeded => EXIT_CAP_EXCEEDED,
    })
}

/// Everything that determines the output of `basis` besides the input text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub division: DivisionKind,
    pub order: MonomialOrder,
    pub algorithm: Algorithm,
    pub cap: usize,
    pub trace: bool,
    pub verify: bool,
    pub reset_processed_on_demotion: bool,
}

impl RunConfig {
    pub fn engine(&self) -> EngineConfig {
        let mut config = EngineConfig::new(self.division).with_cap(self.cap);
        config.trace = self.trace;
        config.reset_processed_on_demotion = self.reset_processed_on_demotion;
        config
    }

    /// Runs the selected algorithm on `input`.
    pub fn execute(&self, input: &[Polynomial]) -> Result<Computed, EngineError> {
        let run = match self.algorithm {
            Algorithm::Buchberger => {
                if input.iter().all(Polynomial::is_zero) {
                    return Err(EngineError::EmptyInput);
                }
                return Ok(Computed {
                    basis: buchberger(input),
                    status: BasisStatus::Complete,
                    stats: None,
                    trace: Vec::new(),
                });
            }
            Algorithm::Involutive => involutive_basis,
            Algorithm::Minimal => minimal_involutive_basis,
        };
        let result = run(input, &self.engine())?;
        Ok(Computed {
            basis: result.basis,
            status: result.status,
            stats: Some(result.stats),
            trace: result.trace,
        })
    }
}

/// Output of one algorithm run.
#[derive(Debug, Clone)]
pub struct Computed {
    /// Monic, ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub status: BasisStatus,
    /// Absent for the Buchberger algorithm.
    pub stats: Option<Stats>,
    pub trace: Vec<TraceEvent>,
}

/// One line of `--format records` output.
#[derive(Debug, Serialize)]
struct Record {
    polynomial: String,
    lm: String,
    multiplicative: Vec<String>,
    nonmultiplicative: Vec<String>,
}

pub fn basis(args: &BasisArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let common = &args.common;
    let text = read_source(&common.input)?;
    let input = input::polynomials(&text, common.vars.as_ref(), common.order)?;
    if input.inferred {
        warn_inferred(err, &input.context)?;
    }
    let config = RunConfig {
        division: common.division,
        order: input.order,
        algorithm: args.algorithm,
        cap: args.cap,
        trace: args.trace,
        verify: args.verify,
        reset_processed_on_demotion: args.reset_processed_on_demotion,
    };
    let computed = config.execute(&input.polynomials)?;
    let ctx = &input.context;

    let mut notes: Vec<String> = Vec::new();
    notes.push(format!("status: {}", computed.status));
    let algorithm = match config.algorithm {
        Algorithm::Involutive => "involutive",
        Algorithm::Minimal => "minimal",
        Algorithm::Buchberger => "buchberger",
    };
    notes.push(format!(
        "algorithm: {algorithm} division: {} order: {}",
        config.division, config.order
    ));
    if let Some(s) = &computed.stats {
        notes.push(format!(
            "prolongations: {} criterion_hits: {} zero_reductions: {} nonzero_reductions: {} demotions: {}",
            s.prolongations, s.criterion_hits, s.zero_reductions, s.nonzero_reductions, s.demotions
        ));
    }
    notes.push(format!("size: {}", computed.basis.len()));
    for event in &computed.trace {
        notes.push(format!("trace: {}", trace_line(event, ctx)));
    }

    let mut code = match computed.status {
        BasisStatus::Complete => EXIT_OK,
        BasisStatus::CapExceeded => EXIT_CAP_EXCEEDED,
    };
    if config.verify {
        if computed.status == BasisStatus::CapExceeded {
            notes.push("verify: skipped, cap exceeded".into());
        } else {
            let report = verify_report(&computed.basis, &input.polynomials, &config, ctx)?;
            if !report.passed {
                code = EXIT_VERIFICATION;
            }
            notes.push(format!("verify: {}", report.summary));
        }
    }

    match args.format {
        Format::Text => {
            for p in &computed.basis {
                writeln!(out, "{}", p.display(ctx)).map_err(io_error)?;
            }
            for note in &notes {
                writeln!(out, "# {note}").map_err(io_error)?;
            }
        }
        Format::Records => {
            write_records(&computed.basis, config.division, ctx, out)?;
            for note in &notes {
                writeln!(err, "# {note}").map_err(io_error)?;
            }
        }
    }
    Ok(code)
}

struct VerifyReport {
    passed: bool,
    summary: String,
}

fn verify_report(
    basis: &[Polynomial],
    input: &[Polynomial],
    config: &RunConfig,
    ctx: &VariableContext,
) -> Result<VerifyReport, CliError> {
    let mut passed = true;
    let mut parts = Vec::new();
    if config.algorithm != Algorithm::Buchberger {
        match verify_involutive(basis, config.division, VerifyMode::Local)? {
            Verification::Involutive => parts.push("involutive yes".to_string()),
            failure => {
                passed = false;
                parts.push(format!(
                    "involutive no ({})",
                    failure_text(&failure, basis, ctx)
                ));
            }
        }
    }
    let groebner = verify_groebner(basis);
    passed &= groebner;
    parts.push(format!("groebner {}", yes_no(groebner)));
    let ideal = same_ideal(basis, input);
    passed &= ideal;
    parts.push(format!("same ideal {}", yes_no(ideal)));
    Ok(VerifyReport {
        passed,
        summary: parts.join(", "),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn failure_text(v: &Verification, set: &[Polynomial], ctx: &VariableContext) -> String {
    match v {
        Verification::Involutive => "holds".into(),
        Verification::Fails {
            element,
            multiplier,
            normal_form,
        } => format!(
            "{} * {} has normal form {}",
            set[*element].display(ctx),
            multiplier.display(ctx),
            normal_form.display(ctx)
        ),
    }
}

fn write_records(
    basis: &[Polynomial],
    division: DivisionKind,
    ctx: &VariableContext,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let lms: Vec<Monomial> = basis
        .iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect();
    let names =
        |set: VarSet| -> Vec<String> { set.iter().map(|i| ctx.name(i).to_string()).collect() };
    for (p, lm) in basis.iter().zip(&lms) {
        let part = division
            .partition(lm, &lms)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let record = Record {
            polynomial: p.display(ctx).to_string(),
            lm: lm.display(ctx).to_string(),
            multiplicative: names(part.multiplicative),
            nonmultiplicative: names(part.nonmultiplicative),
        };
        let line = serde_json::to_string(&record).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(())
}

fn trace_line(event: &TraceEvent, ctx: &VariableContext) -> String {
    let outcome = |o: &Outcome| match o {
        Outcome::CriterionSkip => "criterion".to_string(),
        Outcome::Zero => "zero".to_string(),
        Outcome::Added(lm) => format!("added {}", lm.display(ctx)),
    };
    match event {
        TraceEvent::Prolongation {
            parent,
            var,
            product,
            outcome: o,
        } => format!(
            "prolong {} by {} = {}: {}",
            parent.display(ctx),
            ctx.name(*var),
            product.display(ctx),
            outcome(o)
        ),
        TraceEvent::Queued { lm, outcome: o } => {
            format!("queued {}: {}", lm.display(ctx), outcome(o))
        }
        TraceEvent::Demoted { lm } => format!("demoted {}", lm.display(ctx)),
        TraceEvent::Pass => "pass".into(),
    }
}

/// Reports the partition of every element and whether the set is an
/// involutive basis. Exit code 4 when any check fails.
pub fn check(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let common = &args.common;
    let text = read_source(&common.input)?;
    let input = input::polynomials(&text, common.vars.as_ref(), common.order)?;
    if input.inferred {
        warn_inferred(err, &input.context)?;
    }
    let ctx = &input.context;
    let set: Vec<Polynomial> = input
        .polynomials
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    if set.is_empty() {
        return Err(EngineError::EmptyInput.into());
    }
    let kind = common.division;
    let lms: Vec<Monomial> = set
        .iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect();
    for (p, lm) in set.iter().zip(&lms) {
        let part = kind
            .partition(lm, &lms)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        writeln!(out, "{}  # {}", p.display(ctx), part.display(ctx)).map_err(io_error)?;
    }
    let mut passed = true;
    let autoreduced = is_involutively_autoreduced(&set, kind);
    writeln!(out, "# involutively autoreduced: {}", yes_no(autoreduced)).map_err(io_error)?;
    if autoreduced {
        let mut modes = vec![("involutive", VerifyMode::Local)];
        if let Some(degree) = args.degree {
            modes.push((
                "involutive up to degree",
                VerifyMode::BoundedGlobal { degree },
            ));
        }
        for (label, mode) in modes {
            let v = verify_involutive(&set, kind, mode)?;
            passed &= v.holds();
            let label = match mode {
                VerifyMode::BoundedGlobal { degree } => format!("{label} {degree}"),
                VerifyMode::Local => label.to_string(),
            };
            match v {
                Verification::Involutive => writeln!(out, "# {label}: yes"),
                failure => writeln!(out, "# {label}: no ({})", failure_text(&failure, &set, ctx)),
            }
            .map_err(io_error)?;
        }
    } else {
        passed = false;
    }
    let groebner = verify_groebner(&set);
    passed &= groebner;
    writeln!(out, "# groebner: {}", yes_no(groebner)).map_err(io_error)?;
    Ok(if passed { EXIT_OK } else { EXIT_VERIFICATION })
}

fn warn_inferred(err: &mut dyn Write, ctx: &VariableContext) -> Result<(), CliError> {
    writeln!(
        err,
        "invbasis: warning: no variables declared, using {} in order of appearance",
        ctx.names().join(",")
    )
    .map_err(io_error)
}

/// Wall time in milliseconds with three decimals.
pub(crate) fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}
