use sans_cli::bench::{self, BenchRecord, CSV_COLUMNS};

#[test]
fn csv_schema_is_stable() {
    assert_eq!(
        CSV_COLUMNS,
        ["operation", "iterations", "mean_ms", "p95_ms", "peak_rss_mib", "constraint_count", "thread_count", "curve"]
    );
    let dir = tempfile::tempdir().unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_sans"))
        .current_dir(dir.path())
        .args(["bench", "--iterations", "10", "--threads", "1", "--out", "b.csv", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<BenchRecord> = reader.deserialize().map(Result::unwrap).collect();
    let ops: Vec<_> = rows.iter().map(|r| r.operation.as_str()).collect();
    assert_eq!(ops, ["setup", "prove", "verify"]);
    for r in &rows {
        assert_eq!(r.curve, "bn254");
        assert_eq!(r.thread_count, 1);
        assert!(r.mean_ms > 0.0 && r.p95_ms >= r.mean_ms * 0.5);
        if r.operation != "setup" {
            assert!(r.iterations >= 10);
        }
    }
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["reference_constraints"], 7565);
}

#[test]
fn timings_constraint_count_and_threads() {
    let one = bench::run(10, 1).unwrap();
    let two = bench::run(10, 2).unwrap();
    assert_eq!(one.constraint_count, two.constraint_count);
    for r in one.records.iter().chain(&two.records) {
        assert_eq!(r.constraint_count, one.constraint_count);
    }
    let prove1 = one.record("prove").unwrap();
    let verify1 = one.record("verify").unwrap();
    assert!(verify1.mean_ms * 10.0 <= prove1.mean_ms, "verify {} prove {}", verify1.mean_ms, prove1.mean_ms);

    let prove2 = two.record("prove").unwrap();
    assert_eq!(prove2.thread_count, 2);
    // Non-degradation only, with room for scheduler noise when the host has
    // a single core.
    let margin = if std::thread::available_parallelism().map_or(1, |n| n.get()) >= 2 { 1.05 } else { 1.15 };
    assert!(
        prove2.mean_ms <= prove1.mean_ms * margin,
        "1 thread {:.1} ms, 2 threads {:.1} ms",
        prove1.mean_ms,
        prove2.mean_ms
    );
}
