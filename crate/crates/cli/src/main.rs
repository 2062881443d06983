use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ev_cli::commands::{self, Failure, Format, Output, Suite};
use ev_cli::{exit, Config};

#[derive(Parser)]
#[command(name = "ev", version, about = "Exact T-system lattice, Painleve VI orbit and modular numerics")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sample points.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one exact object.
    #[command(subcommand)]
    Compute(Compute),
    /// Build or reload the m = 0 lattice.
    #[command(subcommand)]
    Lattice(Lattice),
    /// Painleve VI solutions along the translation lattice.
    #[command(subcommand)]
    Pvi(Pvi),
    /// High-precision numerical checks.
    #[command(subcommand)]
    Num(Num),
    /// Run every verification suite.
    VerifyAll(VerifyAll),
}

#[derive(Subcommand)]
enum Compute {
    /// `t^(k)`, the m = 0 value.
    #[command(name = "t")]
    SmallT {
        #[arg(short, num_args = 4, required = true, allow_negative_numbers = true)]
        k: Vec<i64>,
    },
    /// `T_n^(k)` in `m = 2n - |k|` variables.
    #[command(name = "T")]
    BigT {
        #[arg(short, allow_negative_numbers = true)]
        n: i64,
        #[arg(short, num_args = 4, required = true, allow_negative_numbers = true)]
        k: Vec<i64>,
    },
    /// The integer sequence `Y_k`.
    #[command(name = "Y")]
    Y {
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
    },
    /// A named polynomial family (S_n, P_n, p_n, y_n, ptilde_n, s_n, sbar_n,
    /// H_2n, zj_p_n, zj_q_n, f_n).
    Family {
        name: String,
        #[arg(short, allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum Lattice {
    /// Build the box `|k_j| <= N` from the seeds.
    Build {
        #[arg(long = "box", default_value_t = 2)]
        radius: i64,
    },
    /// Read a lattice file and print it again.
    Load { file: PathBuf },
}

#[derive(Subcommand)]
enum Pvi {
    /// The solution `q_l`.
    Q {
        #[arg(short, num_args = 4, required = true, allow_negative_numbers = true)]
        l: Vec<i64>,
    },
    /// Exact Painleve VI, Hamiltonian and E_VI residuals at `l`.
    VerifyEvi {
        #[arg(short, num_args = 4, required = true, allow_negative_numbers = true)]
        l: Vec<i64>,
    },
    /// Match the factors of `q_l` against lattice values.
    FactorMatch {
        #[arg(short, num_args = 4, required = true, allow_negative_numbers = true)]
        l: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum Num {
    /// Run one numerical suite at one `tau`.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, num_args = 2, value_names = ["RE", "IM"], allow_negative_numbers = true,
              default_values = ["0", "1.1"])]
        tau: Vec<String>,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        /// Translation vector for the trt and qd suites.
        #[arg(short, num_args = 4, allow_negative_numbers = true, default_values_t = [0, 0, 0, 0])]
        l: Vec<i64>,
    },
}

#[derive(Args)]
struct VerifyAll {
    #[arg(long = "box", default_value_t = 2)]
    radius: i64,
    #[arg(long, default_value_t = 60)]
    digits: u32,
    /// Restrict the numerical suites to this `tau`.
    #[arg(long, num_args = 2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    tau: Option<Vec<String>>,
}

fn tau_pair(v: &[String]) -> (String, String) {
    (v[0].clone(), v[1].clone())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.global.format;
    let mut cfg = Config {
        seed: cli.global.seed,
        ..Config::default()
    };
    match &cli.command {
        Command::Compute(c) => match c {
            Compute::SmallT { k } => commands::compute_t(k, &cfg.limits, fmt),
            Compute::BigT { n, k } => commands::compute_big_t(*n, k, &cfg.limits, fmt),
            Compute::Y { k } => commands::compute_y(*k, fmt),
            Compute::Family { name, n } => commands::compute_family(name, *n, &cfg.limits, fmt),
        },
        Command::Lattice(c) => match c {
            Lattice::Build { radius } => commands::lattice_build(*radius, fmt),
            Lattice::Load { file } => {
                let text = std::fs::read_to_string(file)
                    .map_err(|e| Failure::new(exit::IO, format!("{}: {e}", file.display())))?;
                commands::lattice_load(&text, fmt)
            }
        },
        Command::Pvi(c) => match c {
            Pvi::Q { l } => commands::pvi_q(l, fmt),
            Pvi::VerifyEvi { l } => commands::pvi_verify(l, fmt),
            Pvi::FactorMatch { l } => commands::pvi_factor_match(l, fmt),
        },
        Command::Num(Num::Verify { suite, tau, digits, l }) => {
            cfg.digits = *digits;
            commands::num_verify(*suite, &tau_pair(tau), l, &cfg, fmt)
        }
        Command::VerifyAll(v) => {
            if v.radius < 1 {
                return Err(Failure::new(exit::BAD_FLAGS, "--box must be at least 1"));
            }
            cfg.radius = v.radius;
            cfg.digits = v.digits;
            if let Some(t) = &v.tau {
                cfg.taus = vec![tau_pair(t)];
            }
            Ok(commands::verify_all(&cfg, fmt))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(exit::BAD_FLAGS as u8);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::IO as u8);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let mut text = out.text;
            text.push('\n');
            match &cli.global.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(exit::IO as u8);
                    }
                }
                None => print!("{text}"),
            }
            if out.ok {
                ExitCode::from(exit::OK as u8)
            } else {
                ExitCode::from(exit::CONTRACT as u8)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
