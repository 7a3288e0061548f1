use std::collections::BTreeSet;
use std::sync::Arc;

use artin_epi_core::catalog::Catalog;
use artin_epi_core::classification::{
    classify_rank2, classify_small, CensusResult, f4_census, h3_procedure, lift_search_in, reverify_final, xj_census, zinde_census,
    LiftCase, SearchContext,
};
use artin_epi_core::maps::center_obstruction_rank2;
use artin_epi_core::{build_graph, build_group, Family, FiniteCoxeterGroup, DEFAULT_ELEMENT_LIMIT};
use serde_json::{json, Value};

use super::{classification_json, extraordinary_names, words};
use crate::args::parse_type;
use crate::expected::expected;
use crate::report::{Check, Outcome};
use crate::{CliError, RunContext};

/// Runs a census case. Every report carries `type`, `expected` and `match`.
pub fn census(ctx: &RunContext, case: &str) -> Result<Outcome, CliError> {
    let mut out = dispatch(ctx, case)?;
    let matched = out.checks.iter().all(|c| c.pass);
    if let Value::Object(map) = &mut out.data {
        map.insert("match".into(), json!(matched));
    }
    Ok(out)
}

/// Up to this many representatives are printed per stage.
const SAMPLE_REPS: usize = 3;

fn stages_json(group: &FiniteCoxeterGroup, census: &CensusResult) -> Value {
    census
        .stages
        .iter()
        .map(|s| {
            let reps: Vec<Vec<String>> = s.tuples.iter().take(SAMPLE_REPS).map(|t| words(group, t)).collect();
            json!({"node": s.node + 1, "count": s.count, "sample_reps": reps})
        })
        .collect()
}

fn dispatch(ctx: &RunContext, case: &str) -> Result<Outcome, CliError> {
    let lower = case.trim().to_ascii_lowercase();
    let unknown = || CliError::Usage(format!("unknown census case `{case}`"));
    match lower.as_str() {
        "f4" => f4(ctx),
        "h4" | "e6" | "e7" | "e8" => xj(ctx, &lower),
        "h3" => h3(),
        "rank2:all" => rank2_all(),
        _ => {
            if let Some(rest) = lower.strip_suffix("-lift") {
                let cases: Vec<LiftCase> =
                    LiftCase::ALL.into_iter().filter(|c| c.name().to_ascii_lowercase().starts_with(&format!("{rest}-"))).collect();
                if cases.is_empty() {
                    return Err(unknown());
                }
                return lift(ctx, &cases);
            }
            if let Some(c) = LiftCase::parse(&lower) {
                return lift(ctx, &[c]);
            }
            if let Some(m) = lower.strip_prefix("rank2:") {
                return rank2(m.parse().map_err(|_| unknown())?);
            }
            if let Some(rest) = lower.strip_prefix("zinde:") {
                let (f, n) = rest.split_once(':').ok_or_else(unknown)?;
                let family: Family = f.parse().map_err(|_| unknown())?;
                return zinde(family, n.parse().map_err(|_| unknown())?);
            }
            if let Some(ty) = case.trim().get("small:".len()..).filter(|_| lower.starts_with("small:")) {
                return small(ctx, ty);
            }
            Err(unknown())
        }
    }
}

fn reverify_check(out: &mut Outcome, ctx: &SearchContext, census: &CensusResult) -> Value {
    let r = reverify_final(ctx, census);
    if let Some(ok) = r {
        out.check(Check::holds("final representatives pairwise non-conjugate", ok));
    }
    json!(r)
}

fn f4(ctx: &RunContext) -> Result<Outcome, CliError> {
    let group = ctx.group(&build_graph(Family::F4, 4, None)?)?;
    let sc = SearchContext::new(group.clone());
    let f = f4_census(&sc)?;
    let e = &expected().f4;
    let mut out = Outcome::new(Value::Null);
    out.check(Check::eq("conjugacy classes", e.classes, f.classes));
    out.check(Check::eq("classes of order >= 3", e.order_ge3, f.classes_order_ge3));
    out.check(Check::eq("pairs", e.pairs, f.pairs));
    out.check(Check::eq("triples", e.triples, f.triples));
    out.check(Check::eq("quadruples", e.quadruples, f.quadruples));
    out.check(Check::eq("generating quadruples", e.generating, f.generating));
    let reverified = reverify_check(&mut out, &sc, &f.census);
    out.data = json!({
        "case": "f4",
        "type": "F4",
        "spec": {"order": [1, 2, 3, 4], "quotient": "conjugacy"},
        "stages": stages_json(&group, &f.census),
        "expected": e,
        "conjugacy_classes": f.classes,
        "classes_order_ge3": f.classes_order_ge3,
        "pairs": f.pairs,
        "triples": f.triples,
        "quadruples": f.quadruples,
        "generating": f.generating,
        "reverified": reverified,
    });
    Ok(out)
}

fn xj(ctx: &RunContext, ty: &str) -> Result<Outcome, CliError> {
    let family: Family = ty.parse().map_err(|_| CliError::Usage(format!("unknown type {ty}")))?;
    let rank = family.fixed_rank().expect("exceptional types have a fixed rank");
    let group = ctx.group(&build_graph(family, rank, None)?)?;
    let e = expected().xj(ty).ok_or_else(|| CliError::Usage(format!("no X_J expectations for {ty}")))?;
    let sc = SearchContext::new(group.clone());
    let order: Vec<usize> = e.order.iter().map(|v| v - 1).collect();
    let census = xj_census(&sc, &order)?;
    let stages = census.counts();
    let mut out = Outcome::new(Value::Null);
    out.check(Check::eq("conjugacy classes", e.classes, sc.classes().len()));
    let mut rows = Vec::new();
    for c in &e.counts {
        let j: BTreeSet<usize> = c.j.iter().map(|v| v - 1).collect();
        let prefix = (1..=order.len()).find(|&k| order[..k].iter().copied().collect::<BTreeSet<_>>() == j);
        let count = match prefix {
            Some(k) => stages[k - 1],
            None => {
                let own: Vec<usize> = j.iter().copied().collect();
                *xj_census(&sc, &own)?.counts().last().unwrap_or(&0)
            }
        };
        let label = format!("X_{{{}}}", c.j.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        out.check(Check::eq(format!("|{label}|"), c.count, count));
        rows.push(json!({"j": c.j, "count": count, "from_stage": prefix}));
    }
    let reverified = reverify_check(&mut out, &sc, &census);
    out.data = json!({
        "case": ty,
        "type": family.name(),
        "spec": {"order": e.order, "quotient": "conjugacy", "strong_injective": true, "min_order": 3, "sign": -1},
        "stages": stages_json(&group, &census),
        "expected": e,
        "conjugacy_classes": sc.classes().len(),
        "stage_counts": stages,
        "counts": rows,
        "reverified": reverified,
    });
    Ok(out)
}

fn lift(ctx: &RunContext, cases: &[LiftCase]) -> Result<Outcome, CliError> {
    let mut out = Outcome::new(Value::Null);
    let mut rows = Vec::new();
    for &case in cases {
        let (ty, zeta) = case.name().split_once('-').expect("lift case names are TYPE-zeta");
        let group = ctx.group(&parse_type(ty, None, None)?)?;
        let s = lift_search_in(&group, zeta)?;
        let name = case.name();
        if let Some(e) = expected().lift(name) {
            if let Some(x) = &e.x_sizes {
                out.check(Check::eq(format!("{name} |X_i|"), x, &s.x_sizes));
            }
            if let Some(y) = &e.y_sizes {
                out.check(Check::eq(format!("{name} |Y|"), y, &s.y_sizes));
            }
            out.check(Check::eq(format!("{name} epimorphisms"), e.epimorphisms, s.epimorphisms));
        }
        rows.push(json!({
            "case": name,
            "nodes": s.nodes.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "x_sizes": s.x_sizes,
            "y_sizes": s.y_sizes,
            "complete": s.complete,
            "epimorphisms": s.epimorphisms,
        }));
    }
    let expected: Vec<_> = cases.iter().filter_map(|c| expected().lift(c.name())).collect();
    out.data = json!({ "case": "lift", "type": cases[0].name().split('-').next(), "searches": rows, "expected": expected });
    Ok(out)
}

fn h3() -> Result<Outcome, CliError> {
    let p = h3_procedure()?;
    let e = &expected().h3;
    let mut out = Outcome::new(Value::Null);
    out.check(Check::eq("|C2|", e.c2, p.c2));
    out.check(Check::eq("|X1|", e.x1, p.x1));
    out.check(Check::eq("|X2|", e.x2, p.x2));
    out.check(Check::eq("|Y|", e.y, p.y));
    out.check(Check::eq("every triple generates", e.all_generate, p.all_generate));
    let mut matched: Vec<String> = p.matches.iter().flatten().cloned().collect();
    matched.sort();
    out.check(Check::eq("representatives match", e.matches.clone(), matched));
    let group = build_group(&build_graph(Family::H3, 3, None)?, DEFAULT_ELEMENT_LIMIT)?;
    let reps: Vec<Value> = p
        .representatives
        .iter()
        .zip(&p.matches)
        .map(|(r, m)| json!({"images": words(&group, r), "matches": m}))
        .collect();
    out.data = json!({
        "case": "h3",
        "type": "H3",
        "expected": e,
        "c2": p.c2,
        "x1": p.x1,
        "x2": p.x2,
        "y": p.y,
        "all_generate": p.all_generate,
        "representatives": reps,
    });
    Ok(out)
}

/// Classification of `I2(m)` with the center argument on its extraordinary maps.
fn rank2_one(m: u32, out: &mut Outcome) -> Result<Value, CliError> {
    let c = classify_rank2(m)?;
    let label = format!("I2({m})");
    let names = extraordinary_names(&c);
    if let Some(e) = expected().small(&label) {
        out.check(Check::eq(format!("{label} extraordinary classes"), e.extraordinary.clone(), names.clone()));
    }
    out.check(Check::holds(format!("{label} all-involution maps are ordinary"), c.involution_check));
    let group = Arc::new(build_group(&build_graph(Family::I2, 2, Some(m))?, DEFAULT_ELEMENT_LIMIT)?);
    let catalog = Catalog::new(group.clone());
    let mut center = Vec::new();
    if m.is_multiple_of(4) {
        for name in &expected().rank2.names {
            let verdict = center_obstruction_rank2(&catalog.map_named(name)?)?;
            out.check(Check::holds(format!("{label} {name} center obstruction"), verdict.is_contradiction()));
            center.push(json!({"nu": name, "contradiction": verdict.is_contradiction()}));
        }
    }
    let mut v = classification_json(&group, &c);
    v["center_obstruction"] = json!(center);
    Ok(v)
}

fn rank2(m: u32) -> Result<Outcome, CliError> {
    let mut out = Outcome::new(Value::Null);
    let v = rank2_one(m, &mut out)?;
    let label = format!("I2({m})");
    out.data = json!({
        "case": format!("rank2:{m}"),
        "type": label,
        "expected": expected().small(&label),
        "classification": v,
    });
    Ok(out)
}

fn rank2_all() -> Result<Outcome, CliError> {
    let e = &expected().rank2;
    let mut out = Outcome::new(Value::Null);
    let mut rows = Vec::new();
    let mut extraordinary_m = Vec::new();
    for m in 3..=e.max_m {
        let v = rank2_one(m, &mut out)?;
        let k = v["extraordinary_classes"].as_u64().unwrap_or(0) as usize;
        if k > 0 {
            extraordinary_m.push(m);
            out.check(Check::eq(format!("I2({m}) number of extraordinary classes"), e.classes_each, k));
        }
        rows.push(v);
    }
    out.check(Check::eq("m with extraordinary epimorphisms", e.extraordinary_m.clone(), extraordinary_m.clone()));
    out.data = json!({ "case": "rank2:all", "type": "I2", "expected": e, "extraordinary_m": extraordinary_m, "classifications": rows });
    Ok(out)
}

fn zinde(family: Family, n: usize) -> Result<Outcome, CliError> {
    let z = zinde_census(family, n)?;
    let mut out = Outcome::new(Value::Null);
    if let Some(e) = expected().zinde(family.name(), n) {
        if let Some(c) = e.classes {
            out.check(Check::eq("classes", c, z.classes));
        }
        if let Some(j) = e.joint_classes {
            out.check(Check::eq("joint classes", Some(j), z.joint_classes));
        }
    }
    let sym = build_group(&build_graph(Family::A, n - 1, None)?, DEFAULT_ELEMENT_LIMIT)?;
    let reps: Vec<Value> = z
        .representatives
        .iter()
        .zip(&z.matches)
        .map(|(r, m)| json!({"images": words(&sym, r), "matches": m}))
        .collect();
    out.data = json!({
        "case": format!("zinde:{}:{n}", family.name()),
        "type": format!("{}{n}", family.name()),
        "expected": expected().zinde(family.name(), n),
        "classes": z.classes,
        "joint_classes": z.joint_classes,
        "representatives": reps,
    });
    Ok(out)
}

fn small(ctx: &RunContext, ty: &str) -> Result<Outcome, CliError> {
    let graph = parse_type(ty, None, None)?;
    let group = ctx.group(&graph)?;
    let c = classify_small(&group)?;
    let label = graph.label();
    let mut out = Outcome::new(Value::Null);
    if let Some(e) = expected().small(&label) {
        out.check(Check::eq("extraordinary classes", e.extraordinary.clone(), extraordinary_names(&c)));
    }
    out.check(Check::holds("all-involution maps are ordinary", c.involution_check));
    out.check(Check::holds("declared automorphisms reach every ordinary map", c.declared_automorphisms_complete));
    out.data = json!({
        "case": format!("small:{label}"),
        "type": label,
        "expected": expected().small(&label),
        "classification": classification_json(&group, &c),
    });
    Ok(out)
}
