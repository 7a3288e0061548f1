//! One function per subcommand, each returning an [`Outcome`](crate::report::Outcome).

mod census;
mod group_info;
mod obstruct;
mod table1;
mod verify_catalog;

pub use census::census;
pub use group_info::group_info;
pub use obstruct::obstruct;
pub use table1::table1;
pub use verify_catalog::verify_catalog;

use artin_epi_core::classification::Classification;
use artin_epi_core::maps::element_word;
use artin_epi_core::{Elem, FiniteCoxeterGroup};
use serde_json::{json, Value};

pub(crate) fn words(group: &FiniteCoxeterGroup, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| element_word(group, x)).collect()
}

/// Names matched by each extraordinary class, sorted, in class order.
pub(crate) fn extraordinary_names(c: &Classification) -> Vec<Vec<String>> {
    c.extraordinary()
        .map(|e| {
            let mut m = e.matches.clone();
            m.sort();
            m
        })
        .collect()
}

pub(crate) fn classification_json(group: &FiniteCoxeterGroup, c: &Classification) -> Value {
    let classes: Vec<Value> = c
        .classes
        .iter()
        .map(|e| {
            json!({
                "conjugacy_classes": e.conjugacy_classes.len(),
                "ordinary": e.ordinary,
                "all_involutions": e.all_involutions,
                "matches": e.matches,
                "representative": words(group, e.representative()),
            })
        })
        .collect();
    json!({
        "label": c.label,
        "epimorphism_classes": c.epimorphism_classes,
        "outer_automorphisms": c.outer_automorphisms,
        "extraordinary_classes": c.extraordinary().count(),
        "involution_check": c.involution_check,
        "declared_automorphisms_complete": c.declared_automorphisms_complete,
        "classes": classes,
    })
}
