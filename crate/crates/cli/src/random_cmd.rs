//! The `random` subcommand: reproducible generation of sweep inputs.

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use entroq::random;

use crate::io::{write_batch, MatrixFile, VectorFile};

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// What to generate: "state", "hermitian", or "observable".
    #[arg(long)]
    pub kind: String,

    #[arg(long, default_value_t = 4)]
    pub dim: usize,

    #[arg(long, default_value_t = 1)]
    pub count: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output file (single JSON object for count 1, array otherwise).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &RandomArgs) -> Result<i32> {
    if args.dim == 0 || args.dim > 64 {
        bail!("dim must be between 1 and 64");
    }
    if args.count == 0 || args.count > 1_000_000 {
        bail!("count must be between 1 and 1000000");
    }
    let mut rng = random::seeded_rng(args.seed);
    match args.kind.as_str() {
        "state" => {
            let batch: Vec<MatrixFile> = (0..args.count)
                .map(|i| {
                    MatrixFile::from_matrix(
                        &random::density_matrix(&mut rng, args.dim),
                        Some(format!("state-{}-{i}", args.seed)),
                    )
                })
                .collect();
            write_batch(&args.out, &batch)?;
        }
        "hermitian" => {
            let mut floor = f64::INFINITY;
            let batch: Vec<MatrixFile> = (0..args.count)
                .map(|i| {
                    let h = random::hermitian(&mut rng, args.dim);
                    floor = floor.min(h.min_eigenvalue().expect("random matrix decomposes"));
                    MatrixFile::from_matrix(&h, Some(format!("hermitian-{}-{i}", args.seed)))
                })
                .collect();
            write_batch(&args.out, &batch)?;
            eprintln!(
                "spectral floor over batch: lambda_min = {floor}; shifts x >= {} are admissible for every record",
                (-floor).max(0.0)
            );
        }
        "observable" => {
            let batch: Vec<VectorFile> = (0..args.count)
                .map(|_| VectorFile {
                    values: random::observable_values(&mut rng, args.dim),
                    kind: Some("observable".into()),
                })
                .collect();
            write_batch(&args.out, &batch)?;
        }
        other => bail!("unknown kind {other:?}; use state, hermitian, or observable"),
    }
    eprintln!(
        "wrote {} {} record(s) to {} (seed {})",
        args.count,
        args.kind,
        args.out.display(),
        args.seed
    );
    Ok(0)
}
