use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hda", version, about = "Nerves and integral homology of precubical sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cap on enumerated elements per category.
    #[arg(long, global = true, default_value_t = hda_core::omega_complex::DEFAULT_ELEMENT_CAP, value_parser = positive)]
    pub cap_elements: usize,
    /// Cap on enumerated functors per nerve level.
    #[arg(long, global = true, default_value_t = hda_core::nerves::DEFAULT_FUNCTOR_CAP, value_parser = positive)]
    pub cap_functors: usize,
    /// Include wall-clock timing; the report is then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a precubical set file.
    Validate { path: PathBuf },
    /// Homology table of one theory.
    Homology {
        path: PathBuf,
        #[arg(long, default_value = "br")]
        theory: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Quotient by thin simplices.
        #[arg(long)]
        reduced: bool,
        /// Skip the germ oracle; needs the token of a passed oracle run.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        oracle_token: Option<String>,
    },
    /// Dump a nerve with its simplicial identity checks.
    Nerve {
        path: PathBuf,
        #[arg(long, default_value = "br")]
        theory: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Run a named check suite.
    Check {
        suite_name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "br")]
        nerve: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// H, HR and HF side by side for every theory.
    Compare {
        path: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}
