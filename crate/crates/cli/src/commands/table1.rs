use std::collections::HashSet;
use std::sync::Arc;

use artin_epi_core::catalog::{aut_generators, Catalog};
use artin_epi_core::classification::{classify_rank2, classify_small, f4_census, Classification, SearchContext};
use artin_epi_core::maps::{Canonicalizer, GeneratorMap};
use artin_epi_core::wall::braid_obstruction;
use artin_epi_core::{build_graph, Elem, Family, FiniteCoxeterGroup};
use serde_json::{json, Value};

use super::{extraordinary_names, words};
use crate::args::parse_type;
use crate::expected::expected;
use crate::report::{Check, Outcome};
use crate::{CliError, RunContext};

/// Groups up to this order are classified outright; larger ones only
/// compare orbits under the declared automorphisms.
const CLASSIFY_ORDER: usize = 1000;

/// Canonical forms reachable from `start` under the declared automorphisms
/// and conjugation.
fn declared_orbit(canon: &mut Canonicalizer, auts: &[artin_epi_core::Automorphism], start: &[Elem]) -> HashSet<Vec<Elem>> {
    let first = canon.canonical(start).0;
    let mut seen = HashSet::from([first.clone()]);
    let mut queue = vec![first];
    while let Some(f) = queue.pop() {
        for a in auts {
            let image: Vec<Elem> = f.iter().map(|&x| a.apply(x)).collect();
            let c = canon.canonical(&image).0;
            if seen.insert(c.clone()) {
                queue.push(c);
            }
        }
    }
    seen
}

/// Index of the equivalence class holding `map`, from a full classification.
fn class_of(c: &Classification, canon: &mut Canonicalizer, map: &GeneratorMap) -> Option<usize> {
    let form = canon.canonical(map.images()).0;
    c.classes.iter().position(|e| e.conjugacy_classes.iter().any(|t| canon.canonical(t).0 == form))
}

fn instance(ctx: &RunContext, label: &str, maps: &[String], out: &mut Outcome) -> Result<Value, CliError> {
    let graph = parse_type(label, None, None)?;
    let group: Arc<FiniteCoxeterGroup> = ctx.group(&graph)?;
    let catalog = Catalog::new(group.clone());
    let nus: Vec<GeneratorMap> = maps.iter().map(|m| catalog.map_named(m)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for (name, nu) in maps.iter().zip(&nus) {
        out.check(Check::holds(format!("{label} {name} is an epimorphism"), nu.is_epimorphism()));
        out.check(Check::holds(format!("{label} {name} has a non-involution image"), !nu.all_involutions()));
        let mut obstruction = Value::Null;
        if let Some(e) = expected().obstruct(label, name) {
            let edges: Vec<(usize, usize)> = (0..graph.rank())
                .flat_map(|a| (a + 1..graph.rank()).map(move |b| (a, b)))
                .filter(|&(a, b)| graph.m(a, b) >= 3)
                .collect();
            let mut verdict = "undecided";
            for e in edges {
                if braid_obstruction(nu, e, None, None)?.is_contradiction() {
                    verdict = "contradiction";
                    break;
                }
            }
            out.check(Check::eq(format!("{label} {name} obstruction"), e.verdict.as_str(), verdict));
            obstruction = json!(verdict);
        }
        rows.push(json!({"nu": name, "images": words(&group, nu.images()), "obstruction": obstruction}));
    }

    let mut canon = Canonicalizer::new(group.clone());
    let method;
    let classes: Vec<Option<usize>>;
    let ordinary: Option<usize>;
    if graph.family() == Family::I2 || group.order() <= CLASSIFY_ORDER {
        let c = if graph.family() == Family::I2 {
            classify_rank2(graph.dihedral_m().expect("I2 has m"))?
        } else {
            classify_small(&group)?
        };
        method = "classification";
        classes = nus.iter().map(|nu| class_of(&c, &mut canon, nu)).collect();
        ordinary = c.classes.iter().position(|e| e.ordinary);
    } else {
        let auts = aut_generators(&group)?;
        method = "declared automorphisms";
        let mut orbits: Vec<HashSet<Vec<Elem>>> = Vec::new();
        let mut index = Vec::new();
        let standard = GeneratorMap::standard(&group);
        for nu in std::iter::once(&standard).chain(&nus) {
            let form = canon.canonical(nu.images()).0;
            match orbits.iter().position(|o| o.contains(&form)) {
                Some(k) => index.push(Some(k)),
                None => {
                    orbits.push(declared_orbit(&mut canon, &auts, nu.images()));
                    index.push(Some(orbits.len() - 1));
                }
            }
        }
        ordinary = index[0];
        classes = index[1..].to_vec();
    }
    for (k, name) in maps.iter().enumerate() {
        out.check(Check::holds(format!("{label} {name} is not equivalent to the standard map"), classes[k] != ordinary));
        for (l, other) in maps.iter().enumerate().skip(k + 1) {
            out.check(Check::holds(format!("{label} {name} and {other} are inequivalent"), classes[k] != classes[l]));
        }
    }
    Ok(json!({ "instance": label, "order": group.order(), "method": method, "maps": rows }))
}

pub fn table1(ctx: &RunContext) -> Result<Outcome, CliError> {
    let t = &expected().table1;
    let mut out = Outcome::new(Value::Null);
    let mut rows = Vec::new();
    for row in &t.rows {
        let instances =
            row.instances.iter().map(|i| instance(ctx, i, &row.maps, &mut out)).collect::<Result<Vec<_>, _>>()?;
        rows.push(json!({ "row": row.row, "maps": row.maps, "instances": instances }));
    }

    let mut absent = Vec::new();
    for label in &t.absent {
        let graph = parse_type(label, None, None)?;
        let (method, found) = match graph.family() {
            Family::I2 => ("classification", extraordinary_names(&classify_rank2(graph.dihedral_m().expect("I2 has m"))?).len()),
            Family::F4 => {
                let group = ctx.group(&build_graph(Family::F4, 4, None)?)?;
                ("f4 census", f4_census(&SearchContext::new(group))?.generating)
            }
            _ => ("classification", extraordinary_names(&classify_small(&ctx.group(&graph)?)?).len()),
        };
        out.check(Check::eq(format!("{label} has no extraordinary epimorphisms"), 0, found));
        absent.push(json!({ "instance": label, "method": method, "found": found }));
    }
    out.data = json!({ "rows": rows, "absent": absent });
    Ok(out)
}
