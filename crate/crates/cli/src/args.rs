use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Toeplitz kernels, maximal vectors and multipliers for rational symbols.
///
/// Expressions use the variable z (or s for half-plane input), zbar,
/// conj(...), B(a) for the Blaschke factor (z-a)/(1-conj(a)z), integer
/// powers and complex literals such as 0.5, 2i or (1-2i).
#[derive(Parser, Debug, Clone)]
#[command(name = "tk", version)]
pub struct Cli {
    /// Emit the JSON report (default)
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable report
    #[arg(long, global = true)]
    pub text: bool,
    /// Tolerance for numerical cross-checks
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Also write the JSON report to this file
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Cross-check the result against the numerical oracle
    #[arg(long, global = true)]
    pub verify_inline: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Kernel of T_symbol with its ladder basis
    Kernel {
        #[arg(long)]
        symbol: String,
    },
    /// Dimension of ker T_symbol
    Dim {
        #[arg(long)]
        symbol: String,
    },
    /// Smallest Toeplitz kernel containing a vector
    Minkernel {
        #[arg(long)]
        vector: String,
    },
    /// Whether a kernel vector is maximal
    Maximal {
        #[arg(long)]
        vector: String,
        #[arg(long)]
        symbol: String,
    },
    /// Inner-outer or Wiener-Hopf factorization
    Factor {
        #[arg(long, value_enum)]
        mode: FactorMode,
        #[arg(long = "f")]
        f: String,
    },
    /// Whether w multiplies ker T_g into ker T_h
    Mult {
        #[arg(long)]
        w: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Decision route: maximal-vector or smirnov
        #[arg(long, default_value = toeplitz_core::multipliers::DEFAULT_ROUTE)]
        route: String,
    },
    /// Square-integrable multipliers from ker T_g to ker T_h
    M2 {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Bounded multipliers from ker T_g to ker T_h
    Minf {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Whether ker T_g is contained in ker T_h
    Include {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Whether ker T_g equals ker T_h
    Equal {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Equivalence g1 = h_minus g2 h_plus
    Equiv {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Companion inner function of a Crofoot multiplier
    Crofoot {
        #[arg(long)]
        w: String,
        #[arg(long)]
        theta: String,
    },
    /// Whether w maps ker T_g onto ker T_h
    Surjective {
        #[arg(long)]
        w: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Whether an outer function spans a one-dimensional kernel
    Rigid {
        #[arg(long)]
        p: String,
    },
    /// Transfer a half-plane function or symbol to the disc
    Cayley {
        #[arg(long, value_enum)]
        mode: CayleyMode,
        #[arg(long = "f")]
        f: String,
    },
    /// Run a named verification suite
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMode {
    InnerOuter,
    WienerHopf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyMode {
    Function,
    Symbol,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Kernel { .. } => "kernel",
            Command::Dim { .. } => "dim",
            Command::Minkernel { .. } => "minkernel",
            Command::Maximal { .. } => "maximal",
            Command::Factor { .. } => "factor",
            Command::Mult { .. } => "mult",
            Command::M2 { .. } => "m2",
            Command::Minf { .. } => "minf",
            Command::Include { .. } => "include",
            Command::Equal { .. } => "equal",
            Command::Equiv { .. } => "equiv",
            Command::Crofoot { .. } => "crofoot",
            Command::Surjective { .. } => "surjective",
            Command::Rigid { .. } => "rigid",
            Command::Cayley { .. } => "cayley",
            Command::Verify { .. } => "verify",
        }
    }
}
