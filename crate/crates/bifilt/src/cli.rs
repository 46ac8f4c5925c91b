use std::path::PathBuf;

use bifilt_core::metric::Norm;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (",
    env!("BIFILT_BUILD_HASH"),
    ")"
);

/// Degree-Rips style bifiltrations from nerve models.
#[derive(Parser, Debug)]
#[command(name = "bifilt", version = VERSION)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Nerve semifiltration of the Rips clique filtration.
    RipsNerve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        output: PathBuf,
        /// Omit the generator section.
        #[arg(long)]
        no_generators: bool,
    },
    /// Nerve semifiltration of the intrinsic Čech filtration.
    Cech {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, value_enum, default_value_t = Rescale::Sqrt2)]
        rescale: Rescale,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        no_generators: bool,
    },
    /// Nerve semifiltration of a polytope-homothet intersection filtration.
    Polytope {
        /// Point cloud (CSV).
        #[arg(long)]
        input: PathBuf,
        /// Exponent of the ambient norm: a real or fraction ≥ 1, or `inf`.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        /// Use the exact unit box (p = inf only).
        #[arg(long)]
        exact_box: bool,
        /// Write the template halfspaces as `a_1 … a_d b` lines to this file.
        #[arg(long)]
        dump_template: Option<PathBuf>,
        #[arg(long)]
        max_points: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        no_generators: bool,
    },
    /// Convert a SEMIFIL file to a 1-critical BIFIL file.
    Bifiltrate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Also write `<output>.scc` in scc2020 format.
        #[arg(long, value_enum)]
        export: Option<Export>,
        /// Compare Betti numbers of both models at every bigrade up to this degree.
        #[arg(long)]
        check: Option<usize>,
    },
    /// Compare the nerve model against the brute-force subdivision oracle.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Model::Rips)]
        model: Model,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = 2)]
        imax: usize,
        /// Largest depth checked; defaults to the largest maximal simplex.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = bifilt_core::subdivision::DEFAULT_CELL_CAP)]
        cell_cap: usize,
    },
    /// Dump the subdivision oracle at one bigrade, one cell per line.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Model::Rips)]
        model: Model,
        #[arg(long)]
        k: usize,
        /// Scale grade index.
        #[arg(long)]
        t: usize,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, default_value_t = bifilt_core::subdivision::DEFAULT_CELL_CAP)]
        cell_cap: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Size statistics, or maximal-clique counts on random point sets.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Model::Rips)]
        model: Model,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Print `quantity,value` CSV instead of aligned text.
        #[arg(long)]
        csv: bool,
        /// Sample sizes for uniform points in the unit square (CSV output).
        #[arg(long, value_delimiter = ',')]
        random_n: Vec<usize>,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seeds: Vec<u64>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Point cloud (CSV) or distance file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// l1, l2, linf or lp:<p>.
    #[arg(long, default_value = "l2", value_parser = parse_metric)]
    pub metric: Norm,
    /// Accept distance files that violate the triangle inequality.
    #[arg(long)]
    pub allow_semimetric: bool,
    /// Keep only the first N points.
    #[arg(long)]
    pub max_points: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// `.dist` files are distance files, anything else a point cloud.
    Auto,
    Points,
    Distance,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rescale {
    Sqrt2,
    None,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Export {
    Scc,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Rips,
    Cech,
}

pub fn parse_exponent(s: &str) -> Result<Norm, String> {
    let invalid = || format!("invalid exponent `{s}`");
    let p = match s {
        "inf" | "infinity" => f64::INFINITY,
        _ => match s.split_once('/') {
            Some((num, den)) => {
                let num: f64 = num.parse().map_err(|_| invalid())?;
                let den: f64 = den.parse().map_err(|_| invalid())?;
                num / den
            }
            None => s.parse::<f64>().map_err(|_| invalid())?,
        },
    };
    Norm::new(p).map_err(|e| e.to_string())
}

pub fn parse_metric(s: &str) -> Result<Norm, String> {
    match s {
        "l1" => Ok(Norm::L1),
        "l2" => Ok(Norm::L2),
        "linf" => Ok(Norm::LINF),
        _ => match s.strip_prefix("lp:") {
            Some(p) => parse_exponent(p),
            None => Err(format!(
                "unknown metric `{s}`; expected l1, l2, linf or lp:<p>"
            )),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn metrics() {
        assert_eq!(parse_metric("lp:3").unwrap().exponent(), 3.0);
        assert!(parse_metric("lp:inf").unwrap().is_infinite());
        assert!(parse_metric("lp:0.5").is_err());
        assert_eq!(parse_exponent("3/2").unwrap().exponent(), 1.5);
        assert!(parse_exponent("1/2").is_err());
        assert!(parse_exponent("x/2").is_err());
        assert!(parse_metric("l3").is_err());
    }
}
