//! The `report-summary` subcommand: aggregate a JSON-lines report stream
//! into per-inequality counts and worst margins.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use entroq::InequalityReport;

#[derive(Debug, Args)]
pub struct SummaryArgs {
    /// Report stream to aggregate (one JSON report per line).
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Default)]
struct Bucket {
    total: usize,
    passed: usize,
    min_margin: f64,
}

pub fn run(args: &SummaryArgs) -> Result<i32> {
    let text = std::fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let mut buckets: BTreeMap<String, Bucket> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let report: InequalityReport = serde_json::from_str(line)
            .with_context(|| format!("line {} is not a report", lineno + 1))?;
        let bucket = buckets.entry(report.name.clone()).or_insert(Bucket {
            total: 0,
            passed: 0,
            min_margin: f64::INFINITY,
        });
        bucket.total += 1;
        if report.pass {
            bucket.passed += 1;
        }
        bucket.min_margin = bucket.min_margin.min(report.margin);
    }

    let mut all_pass = true;
    println!("{:<34} {:>8} {:>8} {:>14}", "inequality", "total", "passed", "min margin");
    for (name, b) in &buckets {
        println!(
            "{:<34} {:>8} {:>8} {:>14.3e}",
            name, b.total, b.passed, b.min_margin
        );
        if b.passed != b.total {
            all_pass = false;
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}
