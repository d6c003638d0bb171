use std::fmt::Write;
use std::path::Path;

use serde_json::{json, Value};

use primsync::catalog;
use primsync::graphs::{chromatic_number_capped, clique_number_capped, is_pseudo_core};
use primsync::sync::{
    almost_sync_sample, is_regular_section, is_synchronizing_group, nonsync_search, sync_params, SyncReport,
};
use primsync::transform::{letter_names, min_rank, synchronizes};
use primsync::{io, Caps, Dfa, Error, Graph, PermGroup, Transformation};

use crate::{CatalogAction, Command, Opts};

type Res<T> = Result<T, Box<dyn std::error::Error>>;

pub struct Outcome {
    pub code: u8,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    fn new(code: u8, json: Value, text: String) -> Self {
        Outcome { code, json, text }
    }
}

fn caps(o: &Opts) -> Caps {
    Caps {
        monoid: o.cap_monoid as usize,
        nodes: o.cap_nodes,
        sections: o.cap_sections as usize,
    }
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn parse_file<T>(path: &Path, parse: fn(&str) -> primsync::Result<T>) -> Res<T> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_group(o: &Opts) -> Res<PermGroup> {
    match (&o.catalog, &o.group) {
        (Some(name), None) => Ok(catalog::entry(name)?.group),
        (None, Some(path)) => parse_file(path, io::parse_group),
        _ => Err("give exactly one of --catalog NAME or --group FILE".into()),
    }
}

fn load_graph(o: &Opts) -> Res<Graph> {
    match (&o.catalog, &o.graph) {
        (Some(name), None) => Ok(catalog::graph(name)?),
        (None, Some(path)) => parse_file(path, io::parse_graph),
        _ => Err("give exactly one of --catalog NAME or --graph FILE".into()),
    }
}

fn load_map(o: &Opts) -> Res<Option<Transformation>> {
    o.map.as_deref().map(|p| parse_file(p, io::parse_transformation)).transpose()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

pub fn run(cmd: &Command, o: &Opts) -> Res<Outcome> {
    match cmd {
        Command::SyncGroup => sync_group(o),
        Command::NonsyncPartitions => partitions(o, false),
        Command::Params => partitions(o, true),
        Command::AlmostSync { trials } => almost_sync(o, *trials),
        Command::Synchronizes => synchronizes_cmd(o),
        Command::ResetWord { path, check, shortest } => reset_word(o, path.as_deref(), check.as_deref(), *shortest),
        Command::GraphStats => graph_stats(o),
        Command::PseudoCore => pseudo_core(o),
        Command::Catalog { action } => catalog_cmd(action),
    }
}

fn sync_group(o: &Opts) -> Res<Outcome> {
    let g = load_group(o)?;
    let primitive = g.is_primitive()?;
    let v = is_synchronizing_group(&g, &caps(o))?;
    let mut text = format!(
        "degree {}, order {}, pair orbits {}, primitive {primitive}\n",
        g.degree(),
        g.order(),
        g.rank_on_pairs()
    );
    for x in &v.graphs {
        let _ = writeln!(text, "graph mask {:#b}: omega {} chi {}", x.mask, x.omega, x.chi);
    }
    let synchronizing = v.synchronizing && primitive;
    let _ = writeln!(text, "verdict: {}", if synchronizing { "synchronizing" } else { "non-synchronizing" });
    let mut verified = Value::Null;
    if let Some(w) = &v.witness {
        let _ = writeln!(text, "witness graph mask {:#b}: clique {:?}", w.mask, one_based(&w.clique));
        if o.verify {
            let ok = w.graph.is_invariant(&g)?
                && w.graph.is_clique(&w.clique)
                && w.clique.len() == w.omega
                && w.graph.is_proper_coloring(&w.coloring)
                && w.coloring.iter().max().map_or(0, |c| c + 1) == w.chi;
            let _ = writeln!(text, "witness verified: {ok}");
            verified = json!(ok);
        }
    }
    let json = json!({
        "degree": g.degree(),
        "order": g.order().to_string(),
        "pair_orbits": g.rank_on_pairs(),
        "primitive": primitive,
        "verdict": if synchronizing { "synchronizing" } else { "non-synchronizing" },
        "graphs": v.graphs.iter().map(|x| json!({"mask": x.mask, "omega": x.omega, "chi": x.chi})).collect::<Vec<_>>(),
        "witness": v.witness.as_ref().map(|w| json!({
            "mask": w.mask,
            "clique": one_based(&w.clique),
            "coloring": one_based(&w.coloring),
        })),
        "verified": verified,
    });
    Ok(Outcome::new(if synchronizing { 0 } else { 1 }, json, text))
}

fn partitions(o: &Opts, with_params: bool) -> Res<Outcome> {
    let g = load_group(o)?;
    let caps = caps(o);
    let search = nonsync_search(&g, &caps)?;
    let params = if with_params && !search.witnesses.is_empty() {
        Some(sync_params(&g, &search.witnesses)?)
    } else {
        None
    };
    let report = SyncReport::new(g.degree(), g.rank_on_pairs(), &search, params.as_ref());
    let mut text = format!("verdict: {}\npartitions: {}\n", report.verdict, report.partitions.len());
    if !with_params {
        for (p, s) in report.partitions.iter().zip(&report.sections) {
            let _ = writeln!(text, "  {p:?} ({} regular sections, e.g. {:?})", s.len(), s.first());
        }
    }
    if let Some(p) = &params {
        let _ = writeln!(text, "m_G = {}{}", p.m_g, if p.m_exact { "" } else { " (sections truncated)" });
        let _ = writeln!(text, "M_G = {}{}", p.big_m, if p.big_m_vacuous { " (vacuous)" } else { "" });
    } else if with_params {
        let _ = writeln!(text, "m_G, M_G undefined: the group is synchronizing");
    }
    if !report.caps_hit.is_empty() {
        let _ = writeln!(text, "caps hit: {}", report.caps_hit.join(", "));
    }
    let mut json = serde_json::to_value(&report)?;
    if o.verify {
        let mut ok = true;
        for w in &search.witnesses {
            ok &= w.partition.is_uniform();
            for s in &w.sections {
                ok &= is_regular_section(&g, s, &w.partition, caps.monoid)?;
            }
        }
        let _ = writeln!(text, "witnesses verified: {ok}");
        json["verified"] = json!(ok);
    }
    let code = if with_params && params.is_none() { 1 } else { 0 };
    Ok(Outcome::new(code, json, text))
}

fn almost_sync(o: &Opts, trials: usize) -> Res<Outcome> {
    let seed = o.seed.ok_or("almost-sync needs --seed")?;
    let g = load_group(o)?;
    let forced: Vec<Transformation> = load_map(o)?.into_iter().collect();
    let r = almost_sync_sample(&g, trials, seed, &forced)?;
    let names = letter_names(g.generators().len());
    let mut text = format!(
        "trials {} (+{} forced), seed {}: {} synchronized, {} failures\n",
        r.trials,
        r.forced,
        r.seed,
        r.successes,
        r.failures.len()
    );
    for f in &r.failures {
        let _ = writeln!(text, "  failure {}: minimal rank {} via {}", f.map, f.min_rank, f.word.render(&names));
    }
    let json = json!({
        "trials": r.trials,
        "forced": r.forced,
        "seed": r.seed,
        "successes": r.successes,
        "failures": r.failures.iter().map(|f| json!({
            "map": f.map.to_string(),
            "min_rank": f.min_rank,
            "word": f.word.render(&names),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(if r.failures.is_empty() { 0 } else { 1 }, json, text))
}

fn synchronizes_cmd(o: &Opts) -> Res<Outcome> {
    let g = load_group(o)?;
    let t = load_map(o)?.ok_or("synchronizes needs --map FILE")?;
    let names = letter_names(g.generators().len());
    match synchronizes(&g, &t)? {
        Some(w) => {
            let mut text = format!("synchronizes: true\nword: {}\n", w.render(&names));
            let mut json = json!({"synchronizes": true, "word": w.render(&names), "length": w.len()});
            if o.verify {
                let mut gens: Vec<Transformation> = g.generators().iter().map(|p| p.as_transformation()).collect();
                gens.push(t.clone());
                let ok = w.evaluate(&gens).is_constant();
                let _ = writeln!(text, "witness verified: {ok}");
                json["verified"] = json!(ok);
            }
            Ok(Outcome::new(0, json, text))
        }
        None => {
            let mr = min_rank(&g, &t)?;
            let text = format!(
                "synchronizes: false\nminimal rank {} via {}\n",
                mr.k,
                mr.word.render(&mr.names)
            );
            let json = json!({"synchronizes": false, "min_rank": mr.k, "word": mr.word.render(&mr.names)});
            Ok(Outcome::new(1, json, text))
        }
    }
}

fn reset_word(o: &Opts, path: Option<&Path>, check: Option<&str>, shortest: bool) -> Res<Outcome> {
    let a: Dfa = match (path.or(o.dfa.as_deref()), &o.catalog) {
        (Some(p), None) => parse_file(p, io::parse_dfa)?,
        (None, Some(name)) => catalog::dfa(name)?,
        _ => return Err("give exactly one automaton: a path, --dfa FILE or --catalog NAME".into()),
    };
    let mut text = String::new();
    let mut json = json!({"states": a.states(), "letters": a.letters()});
    let synchronizing = a.is_synchronizing();
    json["synchronizing"] = json!(synchronizing);
    let mut code = if synchronizing { 0 } else { 1 };
    if let Some(c) = check {
        let w = a.parse_word(c)?;
        let target = a.reset_target(&w);
        match target {
            Some(s) => {
                let _ = writeln!(text, "{} resets to state {}", a.render(&w), s + 1);
            }
            None => {
                let _ = writeln!(text, "{} is not a reset word (image {:?})", a.render(&w), one_based(&a.image(&w)));
            }
        }
        json["check"] = json!({"word": a.render(&w), "target": target.map(|s| s + 1)});
        code = if target.is_some() { 0 } else { 1 };
    } else if synchronizing {
        let w = a.reset_word()?;
        let target = a.reset_target(&w).expect("greedy word resets");
        let _ = writeln!(text, "reset word: {} (length {}, target state {})", a.render(&w), w.len(), target + 1);
        json["word"] = json!({"word": a.render(&w), "length": w.len(), "target": target + 1});
    } else {
        let _ = writeln!(text, "not synchronizing");
    }
    if shortest && synchronizing {
        let w = a.shortest_reset_word(o.cap_monoid as usize)?;
        let target = a.reset_target(&w).expect("subset search word resets");
        let _ = writeln!(text, "shortest reset word: {} (length {}, target state {})", a.render(&w), w.len(), target + 1);
        json["shortest"] = json!({"word": a.render(&w), "length": w.len(), "target": target + 1});
    }
    Ok(Outcome::new(code, json, text))
}

fn graph_stats(o: &Opts) -> Res<Outcome> {
    let g = load_graph(o)?;
    let clique = clique_number_capped(&g, o.cap_nodes)?;
    let col = chromatic_number_capped(&g, o.cap_nodes)?;
    let mut text = format!(
        "vertices {}, edges {}\nomega {} (clique {:?})\nchi {} (colouring {:?})\n",
        g.order(),
        g.edge_count(),
        clique.size,
        one_based(&clique.vertices),
        col.colors,
        one_based(&col.assignment)
    );
    let mut json = json!({
        "vertices": g.order(),
        "edges": g.edge_count(),
        "omega": clique.size,
        "clique": one_based(&clique.vertices),
        "chi": col.colors,
        "coloring": one_based(&col.assignment),
    });
    if o.verify {
        let ok = g.is_clique(&clique.vertices) && g.is_proper_coloring(&col.assignment);
        let _ = writeln!(text, "witnesses verified: {ok}");
        json["verified"] = json!(ok);
    }
    Ok(Outcome::new(0, json, text))
}

fn pseudo_core(o: &Opts) -> Res<Outcome> {
    let g = load_graph(o)?;
    let r = is_pseudo_core(&g, o.cap_nodes)?;
    let mut text = format!(
        "pseudo-core: {}\nautomorphisms {}, colouring endomorphisms {}\n",
        r.is_pseudo_core, r.automorphisms, r.colorings
    );
    if let Some(m) = &r.counterexample {
        let _ = writeln!(text, "counterexample: {:?}", one_based(&m.images));
    }
    let mut json = json!({
        "pseudo_core": r.is_pseudo_core,
        "automorphisms": r.automorphisms,
        "colorings": r.colorings,
        "counterexample": r.counterexample.as_ref().map(|m| one_based(&m.images)),
    });
    if o.verify {
        let ok = r.counterexample.as_ref().is_none_or(|m| m.is_homomorphism(&g, &g) && !m.is_bijective());
        let _ = writeln!(text, "witness verified: {ok}");
        json["verified"] = json!(ok);
    }
    Ok(Outcome::new(if r.is_pseudo_core { 0 } else { 1 }, json, text))
}

fn catalog_cmd(action: &CatalogAction) -> Res<Outcome> {
    match action {
        CatalogAction::List => {
            let mut text = String::from("groups:\n");
            let mut groups = Vec::new();
            for name in catalog::GROUPS {
                let e = catalog::entry(name)?;
                let _ = writeln!(text, "  {name:<14} degree {:<3} {}", e.facts.degree, e.description);
                groups.push(json!({"name": name, "degree": e.facts.degree, "description": e.description}));
            }
            let _ = writeln!(text, "graphs: {}", catalog::GRAPHS.join(" "));
            let _ = writeln!(text, "automata: {}", catalog::DFAS.join(" "));
            let json = json!({"groups": groups, "graphs": catalog::GRAPHS, "automata": catalog::DFAS});
            Ok(Outcome::new(0, json, text))
        }
        CatalogAction::Emit { name } => {
            let (kind, body) = if catalog::GROUPS.contains(&name.as_str()) {
                ("group", io::write_group(&catalog::entry(name)?.group))
            } else if catalog::GRAPHS.contains(&name.as_str()) {
                ("graph", io::write_graph(&catalog::graph(name)?))
            } else if catalog::DFAS.contains(&name.as_str()) {
                ("automaton", io::write_dfa(&catalog::dfa(name)?))
            } else {
                return Err(Error::UnknownName(name.clone()).into());
            };
            let json = json!({"name": name, "kind": kind, "text": body});
            Ok(Outcome::new(0, json, body))
        }
    }
}
