//! Timing and memory harness for setup, prove and verify.

use std::io::Write;
use std::time::Instant;

use rand::rngs::OsRng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use sans_core::circuit::build_circuit;
use sans_core::primitives::keygen;
use sans_core::proofsys::{setup, verify, with_thread_budget};
use sans_core::protocol::{authenticate_prove, issue_credential, Clock, SystemClock, DAY_SECONDS};

/// Column order of the CSV output. Changing it breaks consumers.
pub const CSV_COLUMNS: [&str; 8] =
    ["operation", "iterations", "mean_ms", "p95_ms", "peak_rss_mib", "constraint_count", "thread_count", "curve"];

pub const CURVE_ID: &str = "bn254";
pub const REFERENCE_CONSTRAINTS: usize = 7565;
pub const MIN_TIMED_ITERATIONS: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub operation: String,
    pub iterations: usize,
    pub mean_ms: f64,
    pub p95_ms: f64,
    pub peak_rss_mib: f64,
    pub constraint_count: usize,
    pub thread_count: usize,
    pub curve: String,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub constraint_count: usize,
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub fn record(&self, op: &str) -> Option<&BenchRecord> {
        self.records.iter().find(|r| r.operation == op)
    }
}

/// Resets the kernel's peak-RSS counter for this process. Returns false
/// where that is not supported, in which case peaks cover the whole run.
pub fn reset_peak_rss() -> bool {
    std::fs::write("/proc/self/clear_refs", "5").is_ok()
}

/// `VmHWM` of this process in MiB.
pub fn peak_rss_mib() -> Option<f64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kib: f64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kib / 1024.0)
}

/// Arithmetic mean and nearest-rank 95th percentile, in milliseconds.
pub fn mean_p95(samples_ms: &[f64]) -> (f64, f64) {
    if samples_ms.is_empty() {
        return (0.0, 0.0);
    }
    let mean = samples_ms.iter().sum::<f64>() / samples_ms.len() as f64;
    let mut sorted = samples_ms.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let rank = ((0.95 * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    (mean, sorted[rank - 1])
}

fn timed<T>(iterations: usize, mut f: impl FnMut() -> Result<T, CliError>) -> Result<(Vec<f64>, f64), CliError> {
    reset_peak_rss();
    let mut samples = Vec::with_capacity(iterations);
    for _ in 0..iterations {
        let start = Instant::now();
        let out = f()?;
        samples.push(start.elapsed().as_secs_f64() * 1e3);
        drop(out);
    }
    Ok((samples, peak_rss_mib().unwrap_or(0.0)))
}

/// Runs one setup, then `iterations` proofs and verifications on `threads`
/// workers. Key material stays in memory; nothing is read from disk.
pub fn run(iterations: usize, threads: usize) -> Result<BenchReport, CliError> {
    if iterations < MIN_TIMED_ITERATIONS {
        return Err(CliError::Usage(format!("--iterations must be at least {MIN_TIMED_ITERATIONS}")));
    }
    let threads = threads.max(1);
    with_thread_budget(threads, || {
        let layout = build_circuit()?;
        let constraint_count = layout.constraint_count();
        let record = |operation: &str, iterations: usize, samples: &[f64], rss: f64| {
            let (mean_ms, p95_ms) = mean_p95(samples);
            BenchRecord {
                operation: operation.into(),
                iterations,
                mean_ms,
                p95_ms,
                peak_rss_mib: rss,
                constraint_count,
                thread_count: threads,
                curve: CURVE_ID.into(),
            }
        };

        let mut artifacts = None;
        let (setup_samples, setup_rss) = timed(1, || {
            artifacts = Some(setup(&layout, &mut OsRng)?);
            Ok(())
        })?;
        let artifacts = artifacts.expect("setup ran");

        let now = SystemClock.now().map_err(|e| CliError::Internal(e.to_string()))?;
        let operator = keygen(&rand::random());
        let cred = issue_credential(&operator, 30 * DAY_SECONDS, now, &mut OsRng)?;

        let mut last = None;
        let (prove_samples, prove_rss) = timed(iterations, || {
            last = Some(authenticate_prove(&cred, now, &layout, &artifacts.proving_key, &mut OsRng)?);
            Ok(())
        })?;
        let req = last.expect("at least one proof");
        let inputs = req.public_inputs();

        let (verify_samples, verify_rss) =
            timed(iterations, || match verify(&artifacts.verifying_key, &inputs, &req.proof)? {
                true => Ok(()),
                false => Err(CliError::Internal("benchmark proof failed to verify".into())),
            })?;

        Ok(BenchReport {
            constraint_count,
            records: vec![
                record("setup", 1, &setup_samples, setup_rss),
                record("prove", iterations, &prove_samples, prove_rss),
                record("verify", iterations, &verify_samples, verify_rss),
            ],
        })
    })
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Internal(e.to_string()))
}

pub fn summary(report: &BenchReport) -> String {
    let mut s = format!("constraints: {} (reference circuit: {REFERENCE_CONSTRAINTS})\n", report.constraint_count);
    for r in &report.records {
        s += &format!(
            "{:<7} n={:<4} mean {:>10.3} ms  p95 {:>10.3} ms  peak RSS {:>7.1} MiB  threads {}\n",
            r.operation, r.iterations, r.mean_ms, r.p95_ms, r.peak_rss_mib, r.thread_count
        );
    }
    if let Some(p) = report.record("prove") {
        let verdict = if p.mean_ms <= 5000.0 { "within" } else { "above" };
        s += &format!("prove mean is {verdict} the 5 s desktop reference\n");
    }
    s += "timings are native; browser measurements are not comparable\n";
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percentile_nearest_rank() {
        let xs: Vec<f64> = (1..=20).map(f64::from).collect();
        assert_eq!(mean_p95(&xs), (10.5, 19.0));
        assert_eq!(mean_p95(&[3.0]), (3.0, 3.0));
        assert_eq!(mean_p95(&[]), (0.0, 0.0));
    }

    #[test]
    fn csv_header_matches_columns() {
        let rec = BenchRecord {
            operation: "prove".into(),
            iterations: 10,
            mean_ms: 1.5,
            p95_ms: 2.0,
            peak_rss_mib: 30.25,
            constraint_count: 1,
            thread_count: 2,
            curve: CURVE_ID.into(),
        };
        let mut buf = Vec::new();
        write_csv(&[rec], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
        assert_eq!(lines.next().unwrap(), "prove,10,1.5,2.0,30.25,1,2,bn254");
    }

    #[test]
    fn rejects_too_few_iterations() {
        assert!(matches!(run(3, 1), Err(CliError::Usage(_))));
    }
}
