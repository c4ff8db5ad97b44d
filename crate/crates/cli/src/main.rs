use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cmsz_core::exact_ring::PadicConfig;
use cmsz_core::finite_unitary::enumerate_u0;
use cmsz_core::report::{run, Context, SUITES};

#[derive(Parser)]
#[command(name = "cmsz", version, about = "Exact verification of a unitary lattice group and its mod-3 data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Relative 2-adic precision in bits.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(16..=128))]
    padic_precision: u32,
    /// Radius of the building ball used by the local checks.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=3))]
    ball_radius: u32,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for sorted element-key dumps of the enumerated groups.
    #[arg(long, global = true)]
    dump_groups: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Generator relations, triangle presentation and similitude factors
    VerifyGenerators,
    /// Neighbours, labelling and transitivity on a ball of the building
    VerifyBuilding,
    /// The twisted mod-3 reduction of the form and generators
    VerifyReduction,
    /// Finite unitary group orders, special elements and relations
    VerifyUnitary,
    /// Index-3 subgroups of the mod-3 image up to conjugacy
    ClassifySubgroups,
    /// Torsion and determinant-image certificates for J1 to J4
    VerifyTorsion,
    /// Short-vector enumeration and the stabilizer of the base lattice
    AppendixSearch,
    /// The cyclic division algebra, its involutions and pairing
    VerifyAlgebra,
    /// Every suite in order
    VerifyAll,
}

impl Command {
    fn suites(self) -> Vec<&'static str> {
        match self {
            Command::VerifyGenerators => vec!["verify-generators"],
            Command::VerifyBuilding => vec!["verify-building"],
            Command::VerifyReduction => vec!["verify-reduction"],
            Command::VerifyUnitary => vec!["verify-unitary"],
            Command::ClassifySubgroups => vec!["classify-subgroups"],
            Command::VerifyTorsion => vec!["verify-torsion"],
            Command::AppendixSearch => vec!["appendix-search"],
            Command::VerifyAlgebra => vec!["verify-algebra"],
            Command::VerifyAll => SUITES.to_vec(),
        }
    }
}

fn dump_groups(ctx: &Context, dir: &Path) -> cmsz_core::Result<()> {
    let io = |e: std::io::Error| cmsz_core::Error::Invalid(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let en = ctx.u1()?;
    let mut groups = vec![
        ("u0".to_string(), enumerate_u0()),
        ("u1".to_string(), en.u1.clone()),
        ("u1_plus".to_string(), en.u1_plus.clone()),
        ("image".to_string(), ctx.model().image.clone()),
    ];
    for (name, j) in ctx.j_groups() {
        groups.push((name.to_lowercase(), j.clone()));
    }
    for (name, g) in groups {
        fs::write(dir.join(format!("{name}.txt")), g.dump()).map_err(io)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let cfg = match PadicConfig::new(cli.padic_precision, PadicConfig::default().guard) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = Context::new(cfg, cli.ball_radius).and_then(|ctx| {
        let report = run(&ctx, &cli.command.suites())?;
        if let Some(dir) = &cli.dump_groups {
            dump_groups(&ctx, dir)?;
        }
        Ok(report)
    });
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
                for (suite, id) in report.failures() {
                    eprintln!("failed: {suite} / {id}");
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
