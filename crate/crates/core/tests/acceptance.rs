//! The eight acceptance criteria, each run at its stated limits. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any criterion fails
//! other than the known ones. Criteria 2 and 4 state facts that exhaustive
//! computation contradicts; they are run as stated and expected to fail.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_rational::Ratio;
use primsync::catalog::*;
use primsync::graphs::{chromatic_number, clique_number, endomorphisms, is_pseudo_core};
use primsync::sync::{almost_sync_sample, find_nonsync_partitions, is_synchronizing_group, sync_params};
use primsync::{Caps, Dfa, Graph, Partition};

const KNOWN_FAILURES: &[usize] = &[2, 4];

struct Check {
    ok: bool,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { ok: true, notes: Vec::new() }
    }

    fn expect(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        if cond {
            self.notes.push(what);
        } else {
            self.ok = false;
            self.notes.push(format!("MISMATCH {what}"));
        }
    }
}

fn timed(c: &mut Check, label: &str, limit: Option<Duration>, body: impl FnOnce(&mut Check)) {
    let start = Instant::now();
    body(c);
    let took = start.elapsed().as_secs_f64();
    match limit {
        Some(l) => c.expect(took < l.as_secs_f64(), format!("{label}runtime {took:.2}s < {}s", l.as_secs())),
        None => c.notes.push(format!("{label}runtime {took:.2}s")),
    }
}

fn run(id: usize, title: &str, limit: Option<Duration>, body: impl FnOnce(&mut Check)) -> bool {
    let mut c = Check::new();
    timed(&mut c, "", limit, body);
    println!("{} criterion {id}: {title}", if c.ok { "PASS" } else { "FAIL" });
    for n in &c.notes {
        println!("    {n}");
    }
    c.ok
}

fn omega_chi(x: &Graph) -> (usize, usize) {
    (clique_number(x).size, chromatic_number(x).colors)
}

fn grid_partition(f: impl Fn(usize, usize) -> usize) -> Partition {
    Partition::from_labels(&(0..9).map(|p| f(p / 3, p % 3)).collect::<Vec<_>>())
}

fn criterion1(c: &mut Check) {
    let g = grid_group(true).unwrap();
    let w = find_nonsync_partitions(&g, &Caps::default()).unwrap();
    c.expect(w.len() == 4, format!("{} non-synchronizing partitions (expected 4)", w.len()));
    let expected = [
        grid_partition(|r, _| r),
        grid_partition(|_, c| c),
        grid_partition(|r, c| (r + c) % 3),
        grid_partition(|r, c| (r + 3 - c) % 3),
    ];
    let all = expected.iter().all(|p| w.iter().any(|x| &x.partition == p));
    c.expect(all, "rows, columns and both diagonal classes present");
    let p = sync_params(&g, &w).unwrap();
    c.expect(p.m_g == 2, format!("m_G = {}", p.m_g));
    c.expect(p.big_m == Ratio::from_integer(0) && !p.big_m_vacuous, format!("M_G = {}", p.big_m));
}

fn criterion2(c: &mut Check) {
    let g = flags_group().unwrap();
    c.expect(g.rank_on_pairs() == 3, format!("{} pair orbits", g.rank_on_pairs()));
    let w = find_nonsync_partitions(&g, &Caps::default()).unwrap();
    c.expect(w.len() == 2, format!("{} non-synchronizing partitions (expected 2)", w.len()));
    let ranks: Vec<usize> = w.iter().map(|x| x.partition.rank()).collect();
    c.notes.push(format!("partition ranks {ranks:?}"));
    let p = sync_params(&g, &w).unwrap();
    c.expect(p.m_g == 2, format!("m_G = {} (expected 2)", p.m_g));
    c.expect(p.big_m == Ratio::from_integer(0), format!("M_G = {}", p.big_m));
}

fn criterion3_s6(c: &mut Check) {
    let lk6 = line_graph_complete(6);
    c.expect(omega_chi(&lk6) == (5, 5), format!("L(K6) ω,χ = {:?}", omega_chi(&lk6)));
    c.expect(omega_chi(&lk6.complement()) == (3, 4), format!("complement ω,χ = {:?}", omega_chi(&lk6.complement())));
    let s6 = s_m_on_2sets(6).unwrap();
    let v = is_synchronizing_group(&s6, &Caps::default()).unwrap();
    c.expect(!v.synchronizing, "S6 on 2-sets non-synchronizing");
    let r = almost_sync_sample(&s6, 1000, 1, &[]).unwrap();
    c.expect(r.failures.is_empty(), format!("almost-sync 1000 trials seed 1: {} failures", r.failures.len()));
}

fn criterion3(c: &mut Check) {
    timed(c, "S6: ", Some(Duration::from_secs(30)), criterion3_s6);
    timed(c, "S5: ", Some(Duration::from_secs(5)), criterion3_s5);
}

fn criterion3_s5(c: &mut Check) {
    let s5 = s_m_on_2sets(5).unwrap();
    let v = is_synchronizing_group(&s5, &Caps::default()).unwrap();
    c.expect(v.synchronizing, "S5 on 2-sets synchronizing");
    c.expect(omega_chi(&petersen()) == (2, 3), format!("Petersen ω,χ = {:?}", omega_chi(&petersen())));
    let lk5 = line_graph_complete(5);
    c.expect(omega_chi(&lk5) == (4, 5), format!("L(K5) ω,χ = {:?}", omega_chi(&lk5)));
}

fn criterion4(c: &mut Check) {
    let o = octahedron();
    let r = is_pseudo_core(&o, 1_000_000).unwrap();
    c.expect(r.is_pseudo_core, format!("pseudo-core verdict {}", r.is_pseudo_core));
    let endos = endomorphisms(&o, 1_000_000).unwrap();
    let autos = endos.iter().filter(|m| m.is_bijective()).count();
    let triangles = endos.iter().filter(|m| !m.is_bijective() && o.is_clique(&m.image()) && m.image().len() == 3).count();
    let other = endos.len() - autos - triangles;
    c.notes.push(format!("{} endomorphisms: {autos} automorphisms, {triangles} onto triangles", endos.len()));
    c.expect(other == 0, format!("{other} non-bijective endomorphisms whose image is not a triangle"));
}

fn criterion5(c: &mut Check) {
    let a = w2_analysis(10_000_000).unwrap();
    c.expect(!a.ovoids.is_empty() && a.ovoids.iter().all(|o| o.len() == 5), format!("{} ovoids of size 5", a.ovoids.len()));
    c.expect(!a.spreads.is_empty(), format!("{} spreads", a.spreads.len()));
    c.expect(a.max_ovoid_intersection <= 1, format!("max ovoid intersection {} <= q(q-1)/2 = 1", a.max_ovoid_intersection));
    c.expect(a.ovoid_partitions == 0, format!("{} partitions into ovoids", a.ovoid_partitions));
    let g = symplectic_w2().unwrap();
    let w = find_nonsync_partitions(&g, &Caps::default()).unwrap();
    let p = sync_params(&g, &w).unwrap();
    let bound = p.big_m <= Ratio::new(1, 5) && p.big_m < Ratio::new(1, 2);
    c.expect(bound, format!("M_G = {} <= 1/5 < 1/2", p.big_m));
}

fn criterion6(c: &mut Check) {
    let d = Dfa::dungeon();
    let w = d.parse_word("BLUE,RED,BLUE,BLUE").unwrap();
    let target = d.reset_target(&w);
    let shown = target.map_or("nothing".to_string(), |s| (s + 1).to_string());
    c.expect(target == Some(2), format!("BLUE RED BLUE BLUE resets to state {shown}"));
    let s = d.shortest_reset_word(1 << 20).unwrap();
    c.expect(s.len() <= 4, format!("shortest reset word {} of length {}", d.render(&s), s.len()));
    let from_file = primsync::io::parse_dfa(include_str!("../../../data/dungeon.dfa")).unwrap();
    c.expect(from_file == d, "data/dungeon.dfa matches the built-in automaton");
}

fn criterion7(c: &mut Check) {
    for p in [3, 5] {
        let start = Instant::now();
        let r = redei_check(p).unwrap();
        c.expect(
            r.violations.is_empty() && r.min_nonline_directions >= (p + 3) / 2,
            format!(
                "p={p}: {} subsets, {} lines, non-lines determine >= {} directions ({:.2}s)",
                r.subsets,
                r.lines,
                r.min_nonline_directions,
                start.elapsed().as_secs_f64()
            ),
        );
    }
}

fn criterion8(c: &mut Check) {
    let caps = Caps::default();
    let suites: [(&str, Outcome); 7] = [
        ("collapsible_pairs", collapsible_suite(200, 1)),
        ("clique_number", clique_suite(200, 2)),
        ("chromatic_number", chromatic_suite(200, 3)),
        ("Gr(M)", gr_suite(100, 4)),
        ("conjugation identity", conjugation_suite(500, 5)),
        ("witness neighbourhoods and shared sections", witness_suite(&caps)),
        ("kernel block structure on the grid", grid_scenarios(&caps)),
    ];
    for (name, r) in suites {
        match r {
            Ok(msg) => c.expect(true, format!("{name}: {msg}")),
            Err(msg) => c.expect(false, format!("{name}: {msg}")),
        }
    }
}

fn grid_scenarios(caps: &Caps) -> Outcome {
    let g = grid_group(true).map_err(|e| e.to_string())?;
    let s = block_structure_scenarios(&g, caps)?;
    let mut msg = format!(
        "{} uniform rank-3 maps, {} with k_U > 1, {} admit q, {} block reports",
        s.maps, s.k_above_one, s.with_q, s.reports
    );
    if s.with_q == 0 {
        msg.push_str(" (vacuous: every such map already has minimal rank)");
    }
    Ok(msg)
}

fn main() {
    let s = |secs| Some(Duration::from_secs(secs));
    let results = [
        (1, run(1, "grid group partitions and parameters", s(5), criterion1)),
        (2, run(2, "flags q=2 partitions and parameters", s(60), criterion2)),
        (3, run(3, "S6 and S5 on 2-sets", None, criterion3)),
        (4, run(4, "octahedron pseudo-core", s(1), criterion4)),
        (5, run(5, "W(2) ovoids and spreads", s(60), criterion5)),
        (6, run(6, "dungeon reset word", s(1), criterion6)),
        (7, run(7, "direction sets in AG(2,p)", s(120), criterion7)),
        (8, run(8, "property suites", None, criterion8)),
    ];
    let unexpected: Vec<usize> = results
        .iter()
        .filter(|(id, ok)| !ok && !KNOWN_FAILURES.contains(id))
        .map(|(id, _)| *id)
        .collect();
    for (id, ok) in results {
        if ok && KNOWN_FAILURES.contains(&id) {
            println!("note: criterion {id} passed although listed as a known failure");
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}

