use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zsl_core::Budget;

#[derive(Parser, Debug)]
#[command(
    name = "zsl",
    version,
    about = "Harborth constants and product-set checks for dihedral groups"
)]
pub struct Cli {
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Cache directory (defaults to $ZSL_CACHE_DIR, then ~/.cache/zsl).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupChoice {
    Dihedral,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Harborth constant of a group.
    Harborth(HarborthArgs),
    /// Permutation-product set of a subset, with witness orderings.
    ProductSet(ProductSetArgs),
    /// Exhaustive verification runs.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[arg(long, value_enum, default_value_t = GroupChoice::Dihedral)]
    pub group: GroupChoice,

    /// `n` for the dihedral group of order 2n.
    #[arg(long)]
    pub n: Option<u32>,

    /// JSON file `{"label": ..., "table": [[...], ...]}` for `--group table`.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct HarborthArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,

    /// Scan only canonical subsets under the automorphism group.
    #[arg(long)]
    pub symmetry: bool,

    /// Write the JSON certificate here.
    #[arg(long)]
    pub json: Option<PathBuf>,

    #[arg(long)]
    pub max_subsets: Option<u64>,

    #[arg(long)]
    pub max_seconds: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct ProductSetArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    /// Comma-separated elements, e.g. `s0,s1,r2`.
    #[arg(long)]
    pub elements: String,

    /// Print JSON instead of the table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Covering property of sumsets in Z_n.
    Lemma1 {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Product-set bound for 2s reflections.
    Lemma2(LemmaArgs),
    /// Product-set bound for 2s+1 reflections.
    Lemma3(LemmaArgs),
    /// Brute force against the closed form over a range of n.
    Theorem {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Every (n+1)-subset of D_2n (n odd) has a one-product subsequence of length n.
    RemarkOdd {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct LemmaArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Enumerate sets containing 0 only and expand by translation.
    #[arg(long)]
    pub quotient_translation: bool,
    /// Lift the 10^6 subset guard.
    #[arg(long)]
    pub force: bool,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub jobs: usize,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub budget: Budget,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, String> {
        if cli.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        let budget = match &cli.command {
            Command::Harborth(h) => {
                if h.max_subsets == Some(0) {
                    return Err("--max-subsets must be positive".into());
                }
                if h.max_seconds.is_some_and(|s| s.is_nan() || s <= 0.0) {
                    return Err("--max-seconds must be positive".into());
                }
                Budget {
                    max_subsets: h.max_subsets,
                    max_seconds: h.max_seconds,
                }
            }
            _ => Budget::UNLIMITED,
        };
        let cache_dir = if cli.no_cache {
            None
        } else {
            cli.cache_dir.clone().or_else(default_cache_dir)
        };
        Ok(RunConfig {
            jobs: cli.jobs,
            format: cli.format,
            cache_dir,
            budget,
        })
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("ZSL_CACHE_DIR") {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("zsl"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("zsl"))
}
