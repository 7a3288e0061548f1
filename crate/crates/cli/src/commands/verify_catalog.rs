use artin_epi_core::catalog::{delta_word, Catalog, CatalogEntry};
use artin_epi_core::maps::{verify_intertwining, GeneratorMap};
use artin_epi_core::wall::{compatibility_check, total_offset};
use artin_epi_core::{ArtinWord, CoxeterGraph, Family};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};

use super::words;
use crate::report::{Check, Outcome};
use crate::{CliError, RunContext};

const MAX_WORD_LEN: usize = 24;

pub fn verify_catalog(ctx: &RunContext, graph: &CoxeterGraph, samples: usize) -> Result<Outcome, CliError> {
    let group = ctx.group(graph)?;
    let g = group.as_ref();
    let catalog = Catalog::new(group.clone());
    let mut out = Outcome::new(Value::Null);
    let mut entries = Map::new();

    for name in catalog.names() {
        let entry = catalog.get(name)?;
        let value = match &entry {
            CatalogEntry::Map(m) => {
                out.check(Check::holds(format!("{name} is an epimorphism"), m.is_epimorphism()));
                json!({
                    "kind": "map",
                    "target": m.target().graph().label(),
                    "images": words(m.target(), m.images()),
                    "all_involutions": m.all_involutions(),
                })
            }
            CatalogEntry::Automorphism(a) => json!({
                "kind": "automorphism",
                "images": words(g, a.generator_images()),
                "inner": a.inner_witness().is_some(),
            }),
            CatalogEntry::Word(w) => json!({ "kind": "word", "word": w.to_string(), "length": w.len() }),
            CatalogEntry::Endomorphism(ws) => {
                json!({ "kind": "endomorphism", "words": ws.iter().map(|w| w.to_string()).collect::<Vec<_>>() })
            }
            CatalogEntry::Elements(xs) => json!({ "kind": "elements", "elements": words(g, xs) }),
        };
        entries.insert(name.to_string(), value);
    }

    let mu = GeneratorMap::standard(&group);
    out.check(Check::holds("delta_word evaluates to w0", mu.evaluate(&delta_word(g))? == g.longest_element()));

    match graph.family() {
        Family::B => {
            let pairs: &[(&str, &str)] =
                if graph.rank().is_multiple_of(2) { &[("psi0", "alpha0"), ("psi1", "alpha1")] } else { &[("psi0", "alpha0")] };
            for &(psi, alpha) in pairs {
                let CatalogEntry::Endomorphism(ws) = catalog.get(psi)? else { unreachable!("psi is an endomorphism") };
                let alpha_map = catalog.automorphism_named(alpha)?;
                out.check(Check::holds(format!("mu o {psi} = {alpha} o mu"), verify_intertwining(&ws, &alpha_map)?));
            }
            if graph.rank() == 6 {
                let eta = catalog.map_named("eta")?;
                let zeta = catalog.map_named("zeta6")?;
                let sym = Catalog::new(catalog.sym()?);
                let alpha = sym.automorphism_named("alpha_sym6")?;
                let composed: Vec<_> = eta.images().iter().map(|&x| alpha.apply(x)).collect();
                out.check(Check::holds("alpha_sym6 o eta = zeta6", composed == zeta.images()));
                let CatalogEntry::Elements(r) = sym.get("r_sym6")? else { unreachable!("r_sym6 lists elements") };
                out.check(Check::holds("r_sym6 words give zeta6", r == zeta.images()));
                out.check(Check::holds("alpha_sym6 is outer", alpha.inner_witness().is_none()));
            }
        }
        Family::H3 => {
            let nu1 = catalog.map_named("nu1")?;
            let nu2 = catalog.map_named("nu2")?;
            let alpha = catalog.automorphism_named("alpha_h3")?;
            out.check(Check::holds("alpha_h3 o nu1 = nu2", nu1.composed(&alpha)? == nu2));
            out.check(Check::holds("alpha_h3 is outer", alpha.inner_witness().is_none()));
        }
        _ => {}
    }

    let mut rng = StdRng::seed_from_u64(ctx.seed);
    let (mut compatible, mut conserved) = (0usize, 0usize);
    for _ in 0..samples {
        let len = rng.gen_range(0..=MAX_WORD_LEN);
        let letters =
            (0..len).map(|_| (rng.gen_range(0..graph.rank()), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        let word = ArtinWord::from_letters(letters);
        compatible += usize::from(compatibility_check(&word, g)?);
        conserved += usize::from(total_offset(&word, g)? == word.exponent_sum());
    }
    out.check(Check::eq("random words compatible with u", samples, compatible));
    out.check(Check::eq("total offset equals exponent sum", samples, conserved));

    out.data = json!({
        "label": graph.label(),
        "names": catalog.names(),
        "entries": entries,
        "samples": samples,
        "seed": ctx.seed,
    });
    Ok(out)
}
