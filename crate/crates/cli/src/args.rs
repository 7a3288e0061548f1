use std::path::PathBuf;

use artin_epi_core::{build_graph, CoxeterGraph, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug, Clone)]
#[command(name = "artin-epi", version, about = "Epimorphisms from Artin groups of spherical type onto their Coxeter groups")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for the binary group cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Permit groups with more than a million elements (E7).
    #[arg(long, global = true)]
    pub allow_large: bool,
    /// Seed for randomized checks; censuses use no randomness.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProbeMode {
    /// The recorded probe list and lifts of the worked examples.
    #[value(name = "paper")]
    Recorded,
    /// All reflections, least reduced words as lifts.
    Full,
}

/// A Coxeter type: `--type B --rank 5`, `--type B5`, `--type H3`, `--type I2 --m 8`.
#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub m: Option<u32>,
}

impl TypeArgs {
    pub fn graph(&self) -> Result<CoxeterGraph, CliError> {
        parse_type(&self.family, self.rank, self.m)
    }
}

/// Parses `B5`, `H3`, `I2(8)`, or a family name with a separate rank.
pub fn parse_type(text: &str, rank: Option<usize>, m: Option<u32>) -> Result<CoxeterGraph, CliError> {
    let text = text.trim();
    let bad = || CliError::Usage(format!("unknown Coxeter type `{text}`"));
    if let Some(inner) = text.strip_prefix("I2(").and_then(|s| s.strip_suffix(')')) {
        let m: u32 = inner.parse().map_err(|_| bad())?;
        return Ok(build_graph(Family::I2, 2, Some(m))?);
    }
    if let Ok(family) = text.parse::<Family>() {
        let rank = match (family.fixed_rank(), rank) {
            (Some(r), None) => r,
            (Some(r), Some(given)) if r == given => r,
            (Some(_), Some(_)) => return Err(CliError::Usage(format!("{family} has a fixed rank"))),
            (None, Some(r)) => r,
            (None, None) => return Err(CliError::Usage(format!("--rank is required for type {family}"))),
        };
        if family == Family::I2 && m.is_none() {
            return Err(CliError::Usage("--m is required for type I2".into()));
        }
        return Ok(build_graph(family, rank, m)?);
    }
    let split = text.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let family: Family = text[..split].parse().map_err(|_| bad())?;
    let n: usize = text[split..].parse().map_err(|_| bad())?;
    if rank.is_some_and(|r| r != n) {
        return Err(CliError::Usage(format!("rank {n} in `{text}` conflicts with --rank")));
    }
    Ok(build_graph(family, n, m)?)
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Order, reflections, conjugacy classes and longest element.
    GroupInfo {
        #[command(flatten)]
        ty: TypeArgs,
        /// Lower the element limit for enumeration (it cannot be raised).
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Checks every named map, automorphism and word for a type.
    VerifyCatalog {
        #[command(flatten)]
        ty: TypeArgs,
        /// Random words for the wall-crossing compatibility check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Runs a census and compares it with the expected values.
    Census {
        /// f4, h4, e6, e7, e8, b6-lift, b4-lift, d6-lift, d4-lift, h3,
        /// rank2:M, rank2:all, zinde:B:N, zinde:D:N, small:TYPE.
        #[arg(long)]
        case: String,
    },
    /// Wall-crossing obstruction for a named map.
    Obstruct {
        #[command(flatten)]
        ty: TypeArgs,
        /// Catalog name of the map, e.g. nu1, nu2, standard.
        #[arg(long)]
        nu: String,
        /// 1-based edge `a,b`; default: every edge.
        #[arg(long)]
        edge: Option<String>,
        #[arg(long, value_enum, default_value_t = ProbeMode::Full)]
        probe: ProbeMode,
        /// Also compare with the recorded tables and equations.
        #[arg(long)]
        reproduce: bool,
    },
    /// Verifies every row of the table of extraordinary epimorphisms.
    Table1,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GroupInfo { .. } => "group-info",
            Command::VerifyCatalog { .. } => "verify-catalog",
            Command::Census { .. } => "census",
            Command::Obstruct { .. } => "obstruct",
            Command::Table1 => "table1",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_spellings() {
        assert_eq!(parse_type("B5", None, None).unwrap().label(), "B5");
        assert_eq!(parse_type("B", Some(5), None).unwrap().label(), "B5");
        assert_eq!(parse_type("h3", None, None).unwrap().label(), "H3");
        assert_eq!(parse_type("I2(8)", None, None).unwrap().label(), "I2(8)");
        assert_eq!(parse_type("I2", None, Some(4)).unwrap().label(), "I2(4)");
        assert!(parse_type("B", None, None).is_err());
        assert!(parse_type("Q7", None, None).is_err());
        assert!(parse_type("B5", Some(4), None).is_err());
    }
}
