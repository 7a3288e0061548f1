use artin_epi_core::catalog::{Catalog, CatalogEntry};
use artin_epi_core::reproduce::{default_rank, reproduce_in};
use artin_epi_core::wall::{braid_obstruction, format_equation, parse_equation, ObstructionReport, ObstructionVerdict, WorkedExample};
use artin_epi_core::{CoxeterGraph, Family, FiniteCoxeterGroup};
use serde_json::{json, Value};

use super::words;
use crate::args::ProbeMode;
use crate::expected::expected;
use crate::report::{Check, Outcome};
use crate::{CliError, RunContext};

/// The worked example for a type and map, if there is one.
pub fn worked_example(family: Family, nu: &str) -> Option<WorkedExample> {
    match (family, nu) {
        (Family::B, "nu1") => Some(WorkedExample::B),
        (Family::D, "nu1") => Some(WorkedExample::D),
        (Family::H3, "nu1") => Some(WorkedExample::H3Nu1),
        (Family::H3, "nu2") => Some(WorkedExample::H3Nu2),
        _ => None,
    }
}

fn parse_edge(text: &str, rank: usize) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--edge expects two distinct nodes `a,b` in 1..={rank}, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || b == 0 || a > rank || b > rank || a == b {
        return Err(bad());
    }
    Ok((a - 1, b - 1))
}

pub fn verdict_name(r: &ObstructionReport) -> &'static str {
    if r.is_contradiction() {
        "contradiction"
    } else {
        "undecided"
    }
}

pub fn report_json(group: &FiniteCoxeterGroup, r: &ObstructionReport, letters: [char; 2]) -> Value {
    let name = |id: u32| r.unknown_name(id, letters);
    let (certificate, combined) = match &r.verdict {
        ObstructionVerdict::Contradiction { certificate } => {
            let (c, rhs) = r.system.combine(certificate);
            (json!(certificate), json!(format_equation(&c, rhs, &name)))
        }
        ObstructionVerdict::Undecided { .. } => (Value::Null, Value::Null),
    };
    json!({
        "edge": [r.edge.0 + 1, r.edge.1 + 1],
        "m": r.m,
        "probe": words(group, &r.probe),
        "lifts": [r.lifts.0.to_string(), r.lifts.1.to_string()],
        "equations": r.system.rows.iter().map(|(c, rhs)| format_equation(c, *rhs, &name)).collect::<Vec<_>>(),
        "verdict": verdict_name(r),
        "certificate": certificate,
        "combined": combined,
    })
}

pub fn obstruct(
    ctx: &RunContext,
    graph: &CoxeterGraph,
    nu_name: &str,
    edge: Option<&str>,
    probe: ProbeMode,
    reproduce: bool,
) -> Result<Outcome, CliError> {
    let group = ctx.group(graph)?;
    let catalog = Catalog::new(group.clone());
    let nu = catalog.map_named(nu_name)?;
    let rank = graph.rank();
    let case = worked_example(graph.family(), nu_name);
    let letters = case.map_or(['x', 'y'], WorkedExample::letters);

    let edges: Vec<(usize, usize)> = match (edge, probe) {
        (Some(e), _) => vec![parse_edge(e, rank)?],
        (None, ProbeMode::Recorded) => vec![(1, 2)],
        (None, ProbeMode::Full) => {
            (0..rank).flat_map(|a| (a + 1..rank).map(move |b| (a, b))).filter(|&(a, b)| graph.m(a, b) >= 3).collect()
        }
    };
    let mut reports = Vec::with_capacity(edges.len());
    for &e in &edges {
        let r = match probe {
            ProbeMode::Full => braid_obstruction(&nu, e, None, None)?,
            ProbeMode::Recorded => {
                let case = case.ok_or_else(|| {
                    CliError::Usage(format!("no recorded probe list for {nu_name} on {}", graph.label()))
                })?;
                if e != (1, 2) {
                    return Err(CliError::Usage("the recorded probe lists belong to the edge 2,3".into()));
                }
                let (probe_name, tau) = match case {
                    WorkedExample::B => ("probe_b", Some("tau_b")),
                    WorkedExample::D => ("probe_d", Some("tau_d")),
                    WorkedExample::H3Nu1 => ("probe_h3", Some("tau_h3")),
                    WorkedExample::H3Nu2 => ("probe_h3", None),
                };
                let CatalogEntry::Elements(p) = catalog.get(probe_name)? else { unreachable!("probe lists elements") };
                let lifts = tau.map(|t| catalog.taus(t)).transpose()?;
                braid_obstruction(&nu, e, Some(&p), lifts)?
            }
        };
        reports.push(r);
    }
    let verdict = if reports.iter().any(ObstructionReport::is_contradiction) { "contradiction" } else { "undecided" };

    let mut out = Outcome::new(Value::Null);
    if let Some(exp) = expected().obstruct(&graph.label(), nu_name) {
        out.check(Check::eq("verdict", exp.verdict.as_str(), verdict));
    }

    let mut reproduction = Value::Null;
    if reproduce {
        let case = case
            .ok_or_else(|| CliError::Usage(format!("no recorded example for {nu_name} on {}", graph.label())))?;
        if rank != default_rank(case) {
            return Err(CliError::Usage(format!("the recorded example for {case} has rank {}", default_rank(case))));
        }
        let rep = reproduce_in(case, &group)?;
        let exp = expected()
            .reproduce(case.name())
            .ok_or_else(|| CliError::Usage(format!("no expected values for {case}")))?;
        out.check(Check::eq("table entries matching", exp.tables, rep.table_matches()));
        out.check(Check::eq("table entries", exp.tables, rep.tables.len()));
        out.check(Check::eq("equations found", exp.equations, rep.equations_found()));
        let name = |id: u32| rep.report.unknown_name(id, letters);
        let sum = rep.computed_sum.as_ref().map(|(c, rhs)| format_equation(c, *rhs, &name));
        let expected_sum = parse_equation(&exp.sum, letters, rep.report.probe.len())?;
        out.check(Check::holds("sum equals expected sum", rep.computed_sum.as_ref() == Some(&expected_sum)));
        out.check(Check::holds("sum matches recorded sum", rep.sum_matches));
        out.check(Check::eq("reproduced verdict", "contradiction", verdict_name(&rep.report)));
        let mismatched: Vec<Value> = rep
            .tables
            .iter()
            .filter(|t| !t.matches())
            .map(|t| json!({"generator": t.generator, "probe": t.probe, "expected": t.expected, "actual": t.actual}))
            .collect();
        reproduction = json!({
            "case": case.name(),
            "table_entries": rep.tables.len(),
            "table_matches": rep.table_matches(),
            "mismatched_entries": mismatched,
            "equations": rep.equations.iter().map(|e| json!({
                "text": e.text,
                "row": e.row.map(|(i, _)| i + 1),
                "sign": e.row.map(|(_, s)| s),
            })).collect::<Vec<_>>(),
            "recorded_sum": rep.sum,
            "computed_sum": sum,
        });
    }

    out.data = json!({
        "label": graph.label(),
        "nu": nu_name,
        "images": words(&group, nu.images()),
        "probe_mode": format!("{probe:?}").to_lowercase(),
        "verdict": verdict,
        "edges": reports.iter().map(|r| report_json(&group, r, letters)).collect::<Vec<_>>(),
        "reproduction": reproduction,
    });
    Ok(out)
}
