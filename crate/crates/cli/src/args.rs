use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use majmeter_core::exact::Side;
use majmeter_core::families::Family;

use crate::config::Format;

#[derive(Debug, Parser)]
#[command(name = "majmeter", version, about = "Exact and asymptotic laws of the major index of random standard tableaux")]
pub struct Cli {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Gauss–Legendre nodes per panel.
    #[arg(long, global = true)]
    pub quad_nodes: Option<usize>,
    /// Relative tolerance between successive node doublings.
    #[arg(long, global = true)]
    pub quad_tol: Option<f64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest |λ| handled by the exact polynomial layer.
    #[arg(long, global = true)]
    pub exact_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PartitionInput {
    /// Rows separated by commas, e.g. 4,2,2,1.
    #[arg(short = 'p', long)]
    pub partition: Option<String>,
    #[arg(long)]
    pub partition_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct OmegaInput {
    /// Thoma parameter as JSON, e.g. '{"alpha":[0.5,0.5],"beta":[]}'.
    #[arg(long)]
    pub omega: Option<String>,
    #[arg(long)]
    pub omega_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Upper,
    Lower,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Upper => Side::Upper,
            SideArg::Lower => Side::Lower,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact distribution of maj for one shape.
    Dist {
        #[command(flatten)]
        input: PartitionInput,
    },
    /// Exact cumulants, the two-term prediction and the α/β/γ decomposition.
    Cumulants {
        #[command(flatten)]
        input: PartitionInput,
        #[arg(long, default_value_t = 8)]
        max_order: u32,
    },
    /// Monte Carlo histogram of maj by the hook walk.
    Sample {
        #[command(flatten)]
        input: PartitionInput,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
    /// Exact tails against the strong large-deviation estimate along a family.
    Ld {
        /// two-row, staircase, hook, rect:K, rows:f1,f2,… or cols:f1,f2,…
        #[arg(long, default_value = "two-row")]
        family: Family,
        /// Limit parameter for the prefactor; defaults to the family's limit.
        #[command(flatten)]
        limit: OmegaInput,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        /// Sizes, e.g. 20,40,60 or 20..80:20.
        #[arg(long, value_parser = parse_sizes)]
        n: Sizes,
        #[arg(long, value_enum, default_value = "upper")]
        side: SideArg,
        /// Evaluate the prefactor at the finite-n parameter as well.
        #[arg(long)]
        all_at_n: bool,
    },
    /// Exact Kolmogorov distance to the normal law along a family.
    Bkol {
        #[arg(long, default_value = "two-row")]
        family: Family,
        #[arg(long, value_parser = parse_sizes, default_value = "")]
        n: Sizes,
    },
    /// Positive-definiteness test for ξ ↦ exp Λ(iξ).
    Bochner {
        #[command(flatten)]
        omega: OmegaInput,
        /// Frequencies, e.g. 0,3,6.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        xi: Vec<f64>,
    },
    /// Oracle and identity checks over all shapes up to a size.
    Validate {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=14))]
        max_n: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

/// Comma-separated sizes or inclusive ranges `a..b[:step]`; positive and increasing.
pub fn parse_sizes(s: &str) -> Result<Sizes, String> {
    let mut out: Vec<usize> = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad size {t:?}"));
        if let Some((a, rest)) = item.split_once("..") {
            let (b, step) = match rest.split_once(':') {
                Some((b, st)) => (num(b)?, num(st)?),
                None => (num(rest)?, 1),
            };
            if step == 0 {
                return Err("range step must be positive".into());
            }
            out.extend((num(a)?..=b).step_by(step));
        } else {
            out.push(num(item)?);
        }
    }
    if out.first() == Some(&0) {
        return Err("sizes must be positive".into());
    }
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return Err("sizes must be strictly increasing".into());
    }
    Ok(Sizes(out))
}
