use artin_epi_core::maps::element_word;
use artin_epi_core::{CoxeterGraph, DEFAULT_ELEMENT_LIMIT};
use serde_json::json;

use crate::report::{Check, Outcome};
use crate::{CliError, RunContext};

pub fn group_info(ctx: &RunContext, graph: &CoxeterGraph, limit: Option<u64>) -> Result<Outcome, CliError> {
    let limit = limit.map_or(DEFAULT_ELEMENT_LIMIT, |l| u128::from(l).min(DEFAULT_ELEMENT_LIMIT));
    let group = ctx.group_with_limit(graph, limit)?;
    let g = group.as_ref();
    let classes = g.conjugacy_classes();
    let class_rows: Vec<_> = (0..classes.len())
        .map(|c| {
            let rep = classes.class_reps[c];
            json!({
                "representative": element_word(g, rep),
                "size": classes.class_sizes[c],
                "order": g.element_order(rep),
                "sign": g.sign(rep),
            })
        })
        .collect();
    let w0 = g.longest_element();
    let longest = g.reduced_word(w0).iter().map(|i| i + 1).collect::<Vec<_>>();
    let mut out = Outcome::new(json!({
        "label": graph.label(),
        "rank": graph.rank(),
        "coxeter_matrix": graph.matrix(),
        "backend": format!("{:?}", g.backend()),
        "order": g.order(),
        "reflections": g.reflections().len(),
        "conjugacy_classes": classes.len(),
        "classes": class_rows,
        "longest_element": {
            "word": longest,
            "length": g.length(w0),
            "central": g.generators().iter().all(|&s| g.commute(s, w0)),
        },
    }));
    out.check(Check::eq("order", graph.group_order(), g.order() as u128));
    out.check(Check::eq("reflections", graph.reflection_count(), g.reflections().len()));
    out.check(Check::eq("longest length", graph.reflection_count(), g.length(w0)));
    out.check(Check::eq("class sizes sum", g.order(), classes.class_sizes.iter().sum::<usize>()));
    Ok(out)
}
