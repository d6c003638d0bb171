//! The example groups, graphs and automata, built from first principles.

mod geometry;
mod gf;
mod groups;

pub use geometry::{
    direction, directions_determined, projective_lines_analysis, redei_check, w2_analysis,
    ProjectiveLinesAnalysis, RedeiReport, W2Analysis,
};
pub use gf::Gf;
pub use groups::{
    affine_difference_graph, affine_half_group, concurrence_graph, flag_duality, flags,
    flags_group, flags_o1, flags_o2, flags_o3, grid_character, grid_decompose, grid_group,
    grid_map, line_graph_complete, octahedron, petersen, projective_lines,
    projective_lines_group, projective_points, rook_graph, s_m_on_2sets, singer_cycle,
    singer_flag_orbit, symplectic_form, symplectic_w2, w2_collinearity, w2_lines, LinesAndPoints,
};

use crate::dfa::Dfa;
use crate::graphs::Graph;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// Facts about an entry that the test suite checks against the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facts {
    pub degree: usize,
    pub order: u128,
    pub pair_orbits: usize,
    pub primitive: bool,
    /// `None` for intransitive or imprimitive groups.
    pub synchronizing: Option<bool>,
    pub nonsync_partitions: Option<usize>,
    pub m_g: Option<usize>,
    /// `M(G)` as numerator and denominator.
    pub big_m: Option<(u64, u64)>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub group: PermGroup,
    pub graphs: Vec<(&'static str, Graph)>,
    pub facts: Facts,
}

/// Names accepted by [`entry`].
pub const GROUPS: &[&str] = &[
    "grid",
    "grid-index2",
    "s5-on-2sets",
    "s6-on-2sets",
    "flags-q2",
    "affine-half-3",
    "affine-half-5",
    "w2",
    "pg3-2-lines",
    "c4",
];

/// Names accepted by [`graph`].
pub const GRAPHS: &[&str] = &["octahedron", "petersen", "rook-3x3", "l-k5", "l-k6", "flags-o1", "w2-collinearity"];

/// Names accepted by [`dfa`].
pub const DFAS: &[&str] = &["dungeon", "cerny-4", "cerny-5"];

#[allow(clippy::too_many_arguments)]
fn facts(
    degree: usize,
    order: u128,
    pair_orbits: usize,
    primitive: bool,
    synchronizing: Option<bool>,
    nonsync_partitions: Option<usize>,
    m_g: Option<usize>,
    big_m: Option<(u64, u64)>,
) -> Facts {
    Facts { degree, order, pair_orbits, primitive, synchronizing, nonsync_partitions, m_g, big_m }
}

/// Builds the named catalog group.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    let e = match name {
        "grid" => CatalogEntry {
            name: "grid",
            description: "automorphism group of the 3x3 grid (S3 wr S2, product action)",
            group: grid_group(true)?,
            graphs: vec![("rook", rook_graph()), ("rook-complement", rook_graph().complement())],
            facts: facts(9, 72, 2, true, Some(false), Some(4), Some(2), Some((0, 1))),
        },
        "grid-index2" => CatalogEntry {
            name: "grid-index2",
            description: "index-2 subgroup of the grid group: kernel of sign(row)sign(col)sign(swap)",
            group: grid_group(false)?,
            graphs: vec![("rook", rook_graph()), ("rook-complement", rook_graph().complement())],
            facts: facts(9, 36, 2, true, Some(false), Some(4), Some(2), Some((0, 1))),
        },
        "s5-on-2sets" => CatalogEntry {
            name: "s5-on-2sets",
            description: "S5 acting on the 10 2-subsets of a 5-set",
            group: s_m_on_2sets(5)?,
            graphs: vec![("l-k5", line_graph_complete(5)), ("petersen", petersen())],
            facts: facts(10, 120, 2, true, Some(true), Some(0), None, None),
        },
        "s6-on-2sets" => CatalogEntry {
            name: "s6-on-2sets",
            description: "S6 acting on the 15 2-subsets of a 6-set",
            group: s_m_on_2sets(6)?,
            graphs: vec![("l-k6", line_graph_complete(6)), ("l-k6-complement", line_graph_complete(6).complement())],
            facts: facts(15, 720, 2, true, Some(false), Some(6), Some(2), Some((1, 5))),
        },
        "flags-q2" => CatalogEntry {
            name: "flags-q2",
            description: "PGL(3,2) extended by the inverse-transpose duality, on the 21 flags of PG(2,2)",
            group: flags_group()?,
            graphs: vec![("o1", flags_o1()), ("o2", flags_o2()), ("o3", flags_o3())],
            facts: facts(21, 336, 3, true, Some(false), Some(10), Some(6), Some((0, 1))),
        },
        "affine-half-3" | "affine-half-5" => {
            let p = if name == "affine-half-3" { 3 } else { 5 };
            let (group, f) = affine_half_group(p)?;
                        CatalogEntry {
                name: if p == 3 { "affine-half-3" } else { "affine-half-5" },
                description: "translations of GF(p^2) extended by the nonzero squares",
                group,
                graphs: vec![
                    ("square-differences", affine_difference_graph(&f, true)),
                    ("nonsquare-differences", affine_difference_graph(&f, false)),
                ],
                facts: if p == 3 {
                    facts(9, 36, 2, true, Some(false), Some(4), Some(2), Some((0, 1)))
                } else {
                    facts(25, 300, 2, true, Some(false), Some(6), Some(3), Some((0, 1)))
                },
            }
        }
        "w2" => CatalogEntry {
            name: "w2",
            description: "Sp(4,2) on the 15 points of the symplectic quadrangle W(2)",
            group: symplectic_w2()?,
            graphs: vec![("collinearity", w2_collinearity()), ("non-collinearity", w2_collinearity().complement())],
            facts: facts(15, 720, 2, true, Some(false), Some(6), Some(2), Some((1, 5))),
        },
        "pg3-2-lines" => {
            let f = Gf::new(2, 1)?;
            let (group, (lines, _)) = projective_lines_group(4, &f)?;
            let g = concurrence_graph(&lines);
            CatalogEntry {
                name: "pg3-2-lines",
                description: "SL(4,2) on the 35 lines of PG(3,2)",
                group,
                graphs: vec![("concurrence", g.clone()), ("skew", g.complement())],
                facts: facts(35, 20160, 2, true, Some(false), Some(240), None, None),
            }
        }
        "c4" => CatalogEntry {
            name: "c4",
            description: "cyclic group of order 4 (imprimitive)",
            group: PermGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]])?])?,
            graphs: vec![],
            facts: facts(4, 4, 2, false, None, Some(3), Some(2), Some((0, 1))),
        },
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(e)
}

/// Builds the named graph.
pub fn graph(name: &str) -> Result<Graph> {
    Ok(match name {
        "octahedron" => octahedron(),
        "petersen" => petersen(),
        "rook-3x3" => rook_graph(),
        "l-k5" => line_graph_complete(5),
        "l-k6" => line_graph_complete(6),
        "flags-o1" => flags_o1(),
        "w2-collinearity" => w2_collinearity(),
        other => return Err(Error::UnknownName(other.to_string())),
    })
}

/// Builds the named automaton.
pub fn dfa(name: &str) -> Result<Dfa> {
    match name {
        "dungeon" => Ok(Dfa::dungeon()),
        "cerny-4" => Dfa::cerny(4),
        "cerny-5" => Dfa::cerny(5),
        other => Err(Error::UnknownName(other.to_string())),
    }
}
