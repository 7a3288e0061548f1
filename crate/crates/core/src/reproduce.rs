//! Recomputes the worked obstruction examples and compares them with the
//! recorded tables and equations in [`crate::wall::reference`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::catalog::{Catalog, CatalogEntry};
use crate::error::Error;
use crate::graph::{build_graph, Family};
use crate::group::{build_group, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
use crate::wall::{braid_obstruction, parse_equation, wall_table, ObstructionReport, WorkedExample};

/// One recorded entry `U(τ_j)(0, r_i) = (k, r_l)` next to its recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    /// 2 or 3, the generator whose lift is tabulated.
    pub generator: usize,
    /// 1-based probe position `i`.
    pub probe: usize,
    pub expected: (i64, usize),
    pub actual: (i64, usize),
}

impl TableEntry {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

/// A recorded equation and the system row it was found as, with the sign
/// that turns the row into the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCheck {
    pub text: String,
    pub row: Option<(usize, i64)>,
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub case: WorkedExample,
    pub rank: usize,
    pub report: ObstructionReport,
    /// Empty when no table is recorded for the case.
    pub tables: Vec<TableEntry>,
    pub equations: Vec<EquationCheck>,
    pub sum: String,
    /// The signed sum of the matched rows, taken from the computed system.
    pub computed_sum: Option<(BTreeMap<u32, i64>, i64)>,
    pub sum_matches: bool,
}

impl Reproduction {
    pub fn table_matches(&self) -> usize {
        self.tables.iter().filter(|e| e.matches()).count()
    }

    pub fn equations_found(&self) -> usize {
        self.equations.iter().filter(|e| e.row.is_some()).count()
    }

    pub fn all_match(&self) -> bool {
        self.table_matches() == self.tables.len()
            && self.equations_found() == self.equations.len()
            && self.sum_matches
            && self.report.is_contradiction()
    }
}

/// Rank used when none is given: `B_3`, `D_5`, `H_3`.
pub fn default_rank(case: WorkedExample) -> usize {
    match case {
        WorkedExample::B => 3,
        WorkedExample::D => 5,
        _ => 3,
    }
}

pub fn reproduce(case: WorkedExample) -> Result<Reproduction, Error> {
    let rank = default_rank(case);
    let group = Arc::new(build_group(&build_graph(case.family(), rank, None)?, DEFAULT_ELEMENT_LIMIT)?);
    reproduce_in(case, &group)
}

/// Runs the obstruction for `case` on the edge `(σ_2, σ_3)` with the recorded
/// probe list. `H3-nu2` has no recorded lifts and uses the least reduced words.
pub fn reproduce_in(case: WorkedExample, group: &Arc<FiniteCoxeterGroup>) -> Result<Reproduction, Error> {
    if group.graph().family() != case.family() {
        return Err(Error::TypeMismatch(alloc::format!("{case} needs type {}", case.family().name())));
    }
    let catalog = Catalog::new(group.clone());
    let (nu_name, probe_name, tau_name) = match case {
        WorkedExample::B => ("nu1", "probe_b", Some("tau_b")),
        WorkedExample::D => ("nu1", "probe_d", Some("tau_d")),
        WorkedExample::H3Nu1 => ("nu1", "probe_h3", Some("tau_h3")),
        WorkedExample::H3Nu2 => ("nu2", "probe_h3", None),
    };
    let nu = catalog.map_named(nu_name)?;
    let CatalogEntry::Elements(probe) = catalog.get(probe_name)? else {
        return Err(Error::TypeMismatch(probe_name.into()));
    };
    let lifts = tau_name.map(|t| catalog.taus(t)).transpose()?;
    let report = braid_obstruction(&nu, (1, 2), Some(&probe), lifts)?;

    let mut tables = Vec::new();
    if tau_name.is_some() {
        for (j, (lift, expected)) in [&report.lifts.0, &report.lifts.1].into_iter().zip(case.reference_tables()).enumerate() {
            let table = wall_table(lift, group)?;
            for (k, (&r, &exp)) in probe.iter().zip(expected).enumerate() {
                let t = group.reflection_index(r).expect("probe lists reflections");
                let (offset, image) = table.entry(t);
                let image = group.reflections()[image];
                let pos = probe.iter().position(|&p| p == image).ok_or(Error::ProbeNotClosed { generator: j + 1 })?;
                tables.push(TableEntry { generator: j + 2, probe: k + 1, expected: exp, actual: (offset, pos + 1) });
            }
        }
    }

    let letters = case.letters();
    let (texts, sum) = case.reference_equations();
    let mut equations = Vec::with_capacity(texts.len());
    for &text in texts {
        let (coeffs, rhs) = parse_equation(text, letters, probe.len())?;
        let row = report.system.rows.iter().enumerate().find_map(|(i, (c, r))| {
            if *c == coeffs && *r == rhs {
                Some((i, 1))
            } else if c.iter().all(|(k, v)| coeffs.get(k) == Some(&-v)) && c.len() == coeffs.len() && -*r == rhs {
                Some((i, -1))
            } else {
                None
            }
        });
        equations.push(EquationCheck { text: text.into(), row });
    }
    let computed_sum = equations.iter().map(|e| e.row).collect::<Option<Vec<_>>>().map(|rows| {
        let mut coeffs = BTreeMap::new();
        let mut rhs = 0;
        for (i, s) in rows {
            let (c, r) = &report.system.rows[i];
            for (&k, &v) in c {
                *coeffs.entry(k).or_insert(0) += s * v;
            }
            rhs += s * r;
        }
        coeffs.retain(|_, v: &mut i64| *v != 0);
        (coeffs, rhs)
    });
    let expected_sum = parse_equation(sum, letters, probe.len())?;
    let sum_matches = computed_sum.as_ref() == Some(&expected_sum);
    Ok(Reproduction { case, rank: group.rank(), report, tables, equations, sum: sum.into(), computed_sum, sum_matches })
}

/// Ranks covered by the general statements behind each case.
pub fn supported_rank(case: WorkedExample, rank: usize) -> bool {
    match case.family() {
        Family::B => rank >= 3,
        Family::D => rank >= 5 && rank % 2 == 1,
        _ => rank == 3,
    }
}
