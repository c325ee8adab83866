use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropical_bt::commands::{self, Context, Group, VerifyArgs};
use tropical_bt::error::Error;
use tropical_bt::suites::parse_spec;
use tropical_bt::tableaux::Partition;

#[derive(Parser)]
#[command(name = "tropical-bt", version, about = "Tropical stabilizers and compactified apartments over valued fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Field: rationals with the p-adic valuation, or F_p(T) with the T-adic one.
    #[arg(long, global = true, value_enum, default_value = "qp")]
    field: FieldArg,
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,
    #[arg(long, global = true, value_enum, default_value = "sln")]
    group: GroupArg,
    /// Required by every randomized command.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Qp,
    Fpt,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sln,
    Sp2n,
}

#[derive(Args)]
struct RepArgs {
    /// identity, sp or schur.
    #[arg(long, default_value = "identity")]
    rep: String,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated partition for --rep schur.
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Does g_trop fix the point? Several --matrix flags compare the product
    /// with the composite of the tropicalizations.
    Stabilize {
        /// Inline JSON or a path; repeatable.
        #[arg(long, required = true)]
        matrix: Vec<String>,
        #[arg(long)]
        point: String,
        /// Treat the point as a boundary point with -inf entries.
        #[arg(long)]
        boundary: bool,
    },
    /// Runs a property suite and exits nonzero on any failure.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Points per matrix for prop24.
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Maximal cones of the fan of a representation.
    Fan(RepArgs),
    /// Schur polynomial by tableaux and by the bialternant.
    Schur {
        #[arg(long)]
        lambda: String,
        /// Comma-separated rationals.
        #[arg(long)]
        z: String,
    },
    /// Sampled points with hypersurface and skeleton membership.
    Hypersurface {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 100)]
        sample: usize,
    },
    /// Stabilization of a boundary point.
    BoundaryStabilize {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        point: String,
        /// Fan direction for sp2n, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
    },
    /// SVG of a rank-two fan.
    Plot {
        #[command(flatten)]
        rep: RepArgs,
        /// Overlay this many sampled hypersurface points.
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
}

enum Output {
    Json(serde_json::Value),
    Text(String),
}

fn run(cli: Cli) -> Result<(Output, bool), Error> {
    let g = &cli.global;
    let spec = parse_spec(
        match g.field {
            FieldArg::Qp => "qp",
            FieldArg::Fpt => "fpt",
        },
        g.p,
    )?;
    let group = match g.group {
        GroupArg::Sln => Group::Sln,
        GroupArg::Sp2n => Group::Sp2n,
    };
    let ctx = Context { spec, group, seed: g.seed };
    let rep = |r: &RepArgs| commands::parse_rep(&r.rep, r.n, r.lambda.as_deref());
    let json = |v| Ok((Output::Json(v), true));
    match &cli.command {
        Command::Stabilize { matrix, point, boundary } => {
            let ms = matrix.iter().map(|m| commands::load_json(m)).collect::<Result<Vec<_>, _>>()?;
            json(commands::cmd_stabilize(&ctx, &ms, &commands::load_json(point)?, *boundary)?)
        }
        Command::Verify { suite, n, count, points, rep: kind, lambda } => {
            let rep = match kind {
                Some(k) => Some(commands::parse_rep(k, Some(*n), lambda.as_deref())?),
                None => None,
            };
            let args = VerifyArgs { suite: suite.clone(), n: *n, count: *count, points: *points, rep };
            let report = commands::cmd_verify(&ctx, &args)?;
            Ok((Output::Json(report.to_json()), report.passed()))
        }
        Command::Fan(r) => json(commands::cmd_fan(&rep(r)?)?),
        Command::Schur { lambda, z } => {
            let lambda = Partition::new(commands::parse_list(lambda)?)?;
            json(commands::cmd_schur(&lambda, &commands::parse_rationals(z)?)?)
        }
        Command::Hypersurface { rep: r, sample } => json(commands::cmd_hypersurface(&ctx, &rep(r)?, *sample)?),
        Command::BoundaryStabilize { matrix, point, direction } => json(commands::cmd_boundary_stabilize(
            &ctx,
            &commands::load_json(matrix)?,
            &commands::load_json(point)?,
            direction.as_deref(),
        )?),
        Command::Plot { rep: r, sample } => Ok((Output::Text(commands::cmd_plot(&ctx, &rep(r)?, *sample)?), true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out_path = cli.global.out.clone();
    match run(cli) {
        Ok((output, passed)) => {
            let text = match output {
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Output::Text(s) => s,
            };
            let written = match &out_path {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(3);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::UnknownSuite(_) => 2,
                _ => 3,
            })
        }
    }
}
