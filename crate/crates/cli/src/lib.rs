//! Batch front end for `artin-epi-core`: argument handling, reports in JSON
//! and text, expected values, and the on-disk group cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod expected;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use artin_epi_core::{build_group, CoxeterGraph, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
use serde_json::Value;

use crate::args::{Cli, Command};
use crate::report::{CacheDigest, Report};

/// Groups above this order need `--allow-large`.
pub const LARGE_ORDER: u128 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] artin_epi_core::Error),
    #[error(transparent)]
    Cache(#[from] cache::CacheError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Process exit codes.
pub mod exit {
    pub const MATCH: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const ERROR: i32 = 2;
}

/// Settings shared by all commands, and the cache digests they produce.
pub struct RunContext {
    pub cache_dir: Option<PathBuf>,
    pub allow_large: bool,
    pub seed: u64,
    digests: Mutex<Vec<CacheDigest>>,
}

impl RunContext {
    pub fn new(cache_dir: Option<PathBuf>, allow_large: bool, seed: u64) -> Self {
        RunContext { cache_dir, allow_large, seed, digests: Mutex::new(Vec::new()) }
    }

    /// Builds `W(graph)`, through the cache when one is configured.
    pub fn group(&self, graph: &CoxeterGraph) -> Result<Arc<FiniteCoxeterGroup>, CliError> {
        self.group_with_limit(graph, DEFAULT_ELEMENT_LIMIT)
    }

    pub fn group_with_limit(&self, graph: &CoxeterGraph, limit: u128) -> Result<Arc<FiniteCoxeterGroup>, CliError> {
        let order = graph.group_order();
        if order > limit {
            return Err(artin_epi_core::Error::OrderExceedsLimit { order, limit }.into());
        }
        if order > LARGE_ORDER && !self.allow_large {
            return Err(CliError::Usage(format!("{} has {order} elements; pass --allow-large", graph.label())));
        }
        let build = || build_group(graph, limit);
        let group = match &self.cache_dir {
            Some(dir) => {
                let (group, entry) = cache::load_or_build(dir, graph, build)?;
                if let Some(e) = entry {
                    let digest = CacheDigest { label: graph.label(), sha256: e.sha256, hit: e.hit };
                    self.digests.lock().expect("digest lock").push(digest);
                }
                group
            }
            None => build()?,
        };
        Ok(Arc::new(group))
    }

    pub fn take_digests(&self) -> Vec<CacheDigest> {
        std::mem::take(&mut *self.digests.lock().expect("digest lock"))
    }
}

/// Parameters of a command as recorded in the manifest.
pub fn parameters(cli: &Cli) -> BTreeMap<String, Value> {
    use serde_json::json;
    let mut p = BTreeMap::new();
    match &cli.command {
        Command::GroupInfo { ty, limit } => {
            p.insert("type".into(), json!(ty.family));
            p.insert("rank".into(), json!(ty.rank));
            p.insert("m".into(), json!(ty.m));
            p.insert("limit".into(), json!(limit));
        }
        Command::VerifyCatalog { ty, samples } => {
            p.insert("type".into(), json!(ty.family));
            p.insert("rank".into(), json!(ty.rank));
            p.insert("m".into(), json!(ty.m));
            p.insert("samples".into(), json!(samples));
            p.insert("seed".into(), json!(cli.seed));
        }
        Command::Census { case } => {
            p.insert("case".into(), json!(case));
        }
        Command::Obstruct { ty, nu, edge, probe, reproduce } => {
            p.insert("type".into(), json!(ty.family));
            p.insert("rank".into(), json!(ty.rank));
            p.insert("m".into(), json!(ty.m));
            p.insert("nu".into(), json!(nu));
            p.insert("edge".into(), json!(edge));
            p.insert("probe".into(), json!(format!("{probe:?}").to_lowercase()));
            p.insert("reproduce".into(), json!(reproduce));
        }
        Command::Table1 => {}
    }
    p.insert("allow_large".into(), json!(cli.allow_large));
    p
}

/// Runs one command to a report. Thread-pool setup is the caller's job.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let ctx = RunContext::new(cli.cache_dir.clone(), cli.allow_large, cli.seed);
    let outcome = match &cli.command {
        Command::GroupInfo { ty, limit } => commands::group_info(&ctx, &ty.graph()?, *limit)?,
        Command::VerifyCatalog { ty, samples } => commands::verify_catalog(&ctx, &ty.graph()?, *samples)?,
        Command::Census { case } => commands::census(&ctx, case)?,
        Command::Obstruct { ty, nu, edge, probe, reproduce } => {
            commands::obstruct(&ctx, &ty.graph()?, nu, edge.as_deref(), *probe, *reproduce)?
        }
        Command::Table1 => commands::table1(&ctx)?,
    };
    let duration_ms = start.elapsed().as_millis() as u64;
    Ok(Report::build(
        cli.command.name(),
        parameters(cli),
        outcome,
        ctx.take_digests(),
        duration_ms,
        rayon::current_num_threads(),
    ))
}
