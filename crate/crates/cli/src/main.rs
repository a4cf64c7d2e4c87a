use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use hermite_asymptotics::charlier_asym::CharlierRegionTag;
use hermite_asymptotics::hermite_asym::HermiteRegionTag;
use hermite_asymptotics::Fidelity;
use hermite_asymptotics_cli::{self as cmd, CliError, EvalMethod, Format, Globals, ZerosMethod};

#[derive(Parser)]
#[command(name = "hermasym", version, about = "Hermite asymptotics against exact oracles")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long, global = true, value_enum, default_value_t = FidelityArg::Corrected)]
    fidelity: FidelityArg,
    /// Airy band half-width constant
    #[arg(long, global = true, default_value_t = 1.0)]
    band_width: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FidelityArg {
    Corrected,
    AsPrinted,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalMethodArg {
    Auto,
    #[value(name = "II")]
    Ii,
    #[value(name = "III")]
    Iii,
    #[value(name = "IV")]
    Iv,
    #[value(name = "V")]
    V,
    #[value(name = "VI")]
    Vi,
    Monomial,
    Szego,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharlierMethodArg {
    Auto,
    SmallN,
    Below,
    Above,
    NearMinus,
    Oscillatory,
    NearPlus,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZerosMethodArg {
    Newton,
    Kapteyn,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compare one regional approximation of H_n(xi) with the exact value
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        xi: f64,
        #[arg(long, value_enum, default_value_t = EvalMethodArg::Auto, ignore_case = true)]
        method: EvalMethodArg,
    },
    /// Auto-dispatched comparison on an equally spaced xi grid
    Sweep {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        xi_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        xi_max: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Estimated Hermite zeros
    Zeros {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ZerosMethodArg::Newton)]
        method: ZerosMethodArg,
        /// Kapteyn truncation tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Kapteyn term budget
        #[arg(long)]
        max_terms: Option<usize>,
        /// Add true zeros and absolute errors
        #[arg(long)]
        compare_exact: bool,
    },
    /// Error of the scaled Charlier polynomial against H_n(xi) for several a
    Limit {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        xi: f64,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        a_list: Vec<f64>,
    },
    /// Compare the Charlier approximation with the exact value
    Charlier {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Force a region instead of classifying
        #[arg(long, value_enum, default_value_t = CharlierMethodArg::Auto)]
        method: CharlierMethodArg,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = Globals {
        format: match cli.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        },
        fidelity: match cli.fidelity {
            FidelityArg::Corrected => Fidelity::Corrected,
            FidelityArg::AsPrinted => Fidelity::AsPrinted,
        },
        band_width: cli.band_width,
    };
    if !(g.band_width > 0.0 && g.band_width.is_finite()) {
        return Err(CliError::Usage(format!("--band-width must be positive, got {}", g.band_width)));
    }
    let out = BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Eval { n, xi, method } => {
            let method = match method {
                EvalMethodArg::Auto => EvalMethod::Auto,
                EvalMethodArg::Ii => EvalMethod::Region(HermiteRegionTag::IILeftOuter),
                EvalMethodArg::Iii => EvalMethod::Region(HermiteRegionTag::IIIRightOuter),
                EvalMethodArg::Iv => EvalMethod::Region(HermiteRegionTag::IVLeftAiry),
                EvalMethodArg::V => EvalMethod::Region(HermiteRegionTag::VRightAiry),
                EvalMethodArg::Vi => EvalMethod::Region(HermiteRegionTag::VIOscillatory),
                EvalMethodArg::Monomial => EvalMethod::Region(HermiteRegionTag::ISmallN),
                EvalMethodArg::Szego => EvalMethod::Szego,
            };
            cmd::write_records(&[cmd::eval(n, xi, method, &g)?], g.format, out)
        }
        Command::Sweep { n, xi_min, xi_max, steps } => {
            cmd::write_records(&cmd::sweep(n, xi_min, xi_max, steps, &g)?, g.format, out)
        }
        Command::Zeros { n, method, tol, max_terms, compare_exact } => {
            let method = match method {
                ZerosMethodArg::Newton => ZerosMethod::Newton,
                ZerosMethodArg::Kapteyn => ZerosMethod::Kapteyn,
                ZerosMethodArg::Both => ZerosMethod::Both,
            };
            cmd::write_records(&cmd::zeros(n, method, tol, max_terms, compare_exact)?, g.format, out)
        }
        Command::Limit { n, xi, a_list } => cmd::write_records(&cmd::limit(n, xi, &a_list)?, g.format, out),
        Command::Charlier { n, a, x, method } => {
            let forced = match method {
                CharlierMethodArg::Auto => None,
                CharlierMethodArg::SmallN => Some(CharlierRegionTag::SmallN),
                CharlierMethodArg::Below => Some(CharlierRegionTag::BelowOmegaMinus),
                CharlierMethodArg::Above => Some(CharlierRegionTag::AboveOmegaPlus),
                CharlierMethodArg::NearMinus => Some(CharlierRegionTag::NearOmegaMinus),
                CharlierMethodArg::Oscillatory => Some(CharlierRegionTag::Oscillatory),
                CharlierMethodArg::NearPlus => Some(CharlierRegionTag::NearOmegaPlus),
            };
            cmd::write_records(&[cmd::charlier(n, a, x, forced, &g)?], g.format, out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            // Same presentation and exit status as clap's own argument errors.
            Cli::command().error(clap::error::ErrorKind::ValueValidation, msg).exit()
        }
        Err(e) => {
            let _ = io::stdout().flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
