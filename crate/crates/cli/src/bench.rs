//! Runs every division with both completion algorithms on each file of a
//! corpus. A complete result is checked against the Buchberger basis before
//! its time is reported, and only checked results are ranked.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use involutive::{
    buchberger, same_ideal, verify_groebner, verify_involutive, BasisStatus, DivisionKind,
    Polynomial, VerifyMode,
};
use serde::Serialize;

use crate::commands::{millis, RunConfig};
use crate::input::{self, read_source};
use crate::{
    io_error, Algorithm, BenchArgs, CliError, Format, EXIT_OK, EXIT_PARSE, EXIT_VERIFICATION,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub case: String,
    pub division: String,
    pub algorithm: String,
    /// `complete`, `cap_exceeded` or `error`.
    pub status: String,
    pub basis_size: usize,
    pub prolongations: usize,
    pub criterion_hits: usize,
    pub zero_reductions: usize,
    pub nonzero_reductions: usize,
    pub wall_ms: f64,
    /// Set for complete runs only.
    pub verified: Option<bool>,
    /// Position by wall time among the verified runs of the case, from 1.
    pub rank: Option<usize>,
    pub error: Option<String>,
}

impl BenchRecord {
    fn failed(case: &str, error: String) -> Self {
        Self {
            case: case.to_string(),
            division: String::new(),
            algorithm: String::new(),
            status: "error".into(),
            basis_size: 0,
            prolongations: 0,
            criterion_hits: 0,
            zero_reductions: 0,
            nonzero_reductions: 0,
            wall_ms: 0.0,
            verified: None,
            rank: None,
            error: Some(error),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.status == BasisStatus::Complete.name()
    }
}

/// Input files of `corpus`, sorted by name; hidden files are skipped.
pub fn corpus_files(corpus: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries =
        fs::read_dir(corpus).map_err(|e| CliError::Io(format!("{}: {e}", corpus.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(io_error)?.path();
        let hidden = path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.starts_with('.'));
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

const ALGORITHMS: [Algorithm; 2] = [Algorithm::Involutive, Algorithm::Minimal];

/// One record per (case, division, algorithm), in corpus order.
pub fn collect(corpus: &Path, cap: usize) -> Result<Vec<BenchRecord>, CliError> {
    let mut records = Vec::new();
    for path in corpus_files(corpus)? {
        let case = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let parsed = read_source(&path).and_then(|text| input::polynomials(&text, None, None));
        let input = match parsed {
            Ok(input) => input,
            Err(e) => {
                records.push(BenchRecord::failed(&case, e.to_string()));
                continue;
            }
        };
        let oracle = buchberger(&input.polynomials);
        let start = records.len();
        for division in DivisionKind::ALL {
            for algorithm in ALGORITHMS {
                let config = RunConfig {
                    division,
                    order: input.order,
                    algorithm,
                    cap,
                    trace: false,
                    verify: true,
                    reset_processed_on_demotion: false,
                };
                records.push(measure(&case, &config, &input.polynomials, &oracle));
            }
        }
        rank(&mut records[start..]);
    }
    Ok(records)
}

fn measure(
    case: &str,
    config: &RunConfig,
    input: &[Polynomial],
    oracle: &[Polynomial],
) -> BenchRecord {
    let started = Instant::now();
    let computed = config.execute(input);
    let wall_ms = millis(started.elapsed());
    let algorithm = match config.algorithm {
        Algorithm::Involutive => "involutive",
        Algorithm::Minimal => "minimal",
        Algorithm::Buchberger => "buchberger",
    };
    let computed = match computed {
        Ok(c) => c,
        Err(e) => {
            let mut r = BenchRecord::failed(case, e.to_string());
            r.division = config.division.to_string();
            r.algorithm = algorithm.into();
            return r;
        }
    };
    let stats = computed.stats.unwrap_or_default();
    let verified = (computed.status == BasisStatus::Complete).then(|| {
        same_ideal(&computed.basis, oracle)
            && verify_groebner(&computed.basis)
            && verify_involutive(&computed.basis, config.division, VerifyMode::Local)
                .is_ok_and(|v| v.holds())
    });
    BenchRecord {
        case: case.to_string(),
        division: config.division.to_string(),
        algorithm: algorithm.into(),
        status: computed.status.to_string(),
        basis_size: computed.basis.len(),
        prolongations: stats.prolongations,
        criterion_hits: stats.criterion_hits,
        zero_reductions: stats.zero_reductions,
        nonzero_reductions: stats.nonzero_reductions,
        wall_ms,
        verified,
        rank: None,
        error: None,
    }
}

fn rank(records: &mut [BenchRecord]) {
    let mut order: Vec<usize> = (0..records.len())
        .filter(|&i| records[i].verified == Some(true))
        .collect();
    order.sort_by(|&a, &b| {
        records[a]
            .wall_ms
            .total_cmp(&records[b].wall_ms)
            .then(a.cmp(&b))
    });
    for (k, i) in order.into_iter().enumerate() {
        records[i].rank = Some(k + 1);
    }
}

pub fn run(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let records = collect(&args.corpus, args.cap)?;
    match args.format {
        Format::Text => write_table(&records, out)?,
        Format::Records => {
            for r in &records {
                let line = serde_json::to_string(r).map_err(|e| CliError::Io(e.to_string()))?;
                writeln!(out, "{line}").map_err(io_error)?;
            }
        }
    }
    for r in &records {
        if let Some(e) = &r.error {
            writeln!(err, "invbasis: {}: {e}", r.case).map_err(io_error)?;
        }
    }
    Ok(if records.iter().any(|r| r.verified == Some(false)) {
        EXIT_VERIFICATION
    } else if records.iter().any(|r| r.error.is_some()) {
        EXIT_PARSE
    } else {
        EXIT_OK
    })
}

fn write_table(records: &[BenchRecord], out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        out,
        "{:<24} {:<10} {:<10} {:<12} {:>6} {:>8} {:>6} {:>6} {:>8} {:>10} {:>8} {:>4}",
        "case",
        "division",
        "algorithm",
        "status",
        "size",
        "prolong",
        "crit",
        "zero",
        "nonzero",
        "ms",
        "verified",
        "rank"
    )
    .map_err(io_error)?;
    for r in records {
        let verified = match r.verified {
            Some(true) => "yes",
            Some(false) => "FAILED",
            None => "-",
        };
        let rank = r.rank.map_or("-".to_string(), |k| k.to_string());
        writeln!(
            out,
            "{:<24} {:<10} {:<10} {:<12} {:>6} {:>8} {:>6} {:>6} {:>8} {:>10.3} {:>8} {:>4}",
            r.case,
            r.division,
            r.algorithm,
            r.status,
            r.basis_size,
            r.prolongations,
            r.criterion_hits,
            r.zero_reductions,
            r.nonzero_reductions,
            r.wall_ms,
            verified,
            rank
        )
        .map_err(io_error)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(ms: f64, verified: Option<bool>) -> BenchRecord {
        BenchRecord {
            wall_ms: ms,
            verified,
            status: "complete".into(),
            error: None,
            ..BenchRecord::failed("c", String::new())
        }
    }

    #[test]
    fn only_verified_runs_are_ranked() {
        let mut rs = vec![
            record(3.0, Some(true)),
            record(1.0, None),
            record(2.0, Some(true)),
            record(0.5, Some(false)),
        ];
        rank(&mut rs);
        let ranks: Vec<Option<usize>> = rs.iter().map(|r| r.rank).collect();
        assert_eq!(ranks, [Some(2), None, Some(1), None]);
    }
}
