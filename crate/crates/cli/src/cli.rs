use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cosserat", version, about = "Micropolar (Cosserat) elasticity toolkit")]
pub struct Cli {
    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Unit system for emitted records: MPa_mm or SI.
    #[arg(long, global = true, env = "COSSERAT_UNITS")]
    pub units: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a material record to another notation.
    Convert {
        #[command(flatten)]
        input: Input,
        /// Target notation.
        #[arg(long)]
        to: String,
    },
    /// Check the constitutive condition sets; exits 1 unless well-posed.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate energy and stresses for a strain state.
    Energy {
        #[command(flatten)]
        input: Input,
        /// Elastic strain e = Du - A as a JSON 3x3 array.
        #[arg(long, default_value = "[[0,0,0],[0,0,0],[0,0,0]]")]
        strain: String,
        /// Curvature K = D(axl A) as a JSON 3x3 array.
        #[arg(long, default_value = "[[0,0,0],[0,0,0],[0,0,0]]")]
        curvature: String,
    },
    /// Sweep the plane-wave dispersion relation (CSV plus JSON sidecar).
    Dispersion {
        #[command(flatten)]
        input: Input,
        /// Smallest wavenumber in 1/m (default 1e-2 / L_c).
        #[arg(long)]
        k_min: Option<f64>,
        /// Largest wavenumber in 1/m (default 1e2 / L_c).
        #[arg(long)]
        k_max: Option<f64>,
        /// Number of log-spaced wavenumbers.
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// CSV destination; the sidecar goes next to it with a .json extension.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Explicit sidecar path.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Verify Nye's formula on a polynomial skew field.
    NyeVerify {
        /// Polynomial degree of the random field.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random sample points in the unit cube.
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long, value_enum, default_value_t = NyeField::Random)]
        field: NyeField,
    },
    /// Recompute the built-in reference table from its inputs.
    Reproduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NyeField {
    Random,
    /// A = anti(x).
    AntiX,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Material JSON file ("-" for stdin).
    #[arg(required_unless_present = "json", conflicts_with = "json")]
    pub path: Option<PathBuf>,
    /// Inline material JSON.
    #[arg(long)]
    pub json: Option<String>,
    /// Characteristic length L_c in the record's length unit.
    #[arg(long = "l-c")]
    pub l_c: Option<f64>,
}
