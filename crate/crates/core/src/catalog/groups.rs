use crate::graphs::Graph;
use crate::pairs::{all_pairs, pair_index};
use crate::perm::{PermGroup, Permutation};
use crate::Result;

use super::gf::Gf;

fn perm_from_fn(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(f).collect()).expect("constructed map is a bijection")
}

fn graph_from_fn(n: usize, adj: impl Fn(usize, usize) -> bool) -> Graph {
    let mut g = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if adj(x, y) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

// ---- 3x3 grid ----

/// The grid map `(r, c) ↦ (row[r], col[c])`, followed by the transpose if
/// `swap`. Point `(r, c)` is `3r + c`.
pub fn grid_map(row: [usize; 3], col: [usize; 3], swap: bool) -> Permutation {
    perm_from_fn(9, |x| {
        let (r, c) = (row[x / 3], col[x % 3]);
        if swap {
            3 * c + r
        } else {
            3 * r + c
        }
    })
}

/// Decomposes a grid automorphism into `(row, col, swap)`; `None` if `g`
/// does not preserve the grid.
pub fn grid_decompose(g: &Permutation) -> Option<([usize; 3], [usize; 3], bool)> {
    if g.degree() != 9 {
        return None;
    }
    let swap = g.apply(0) / 3 != g.apply(1) / 3;
    let (mut row, mut col) = ([0; 3], [0; 3]);
    for i in 0..3 {
        let (r, c) = (g.apply(3 * i), g.apply(i));
        if swap {
            row[i] = r % 3;
            col[i] = c / 3;
        } else {
            row[i] = r / 3;
            col[i] = c % 3;
        }
    }
    (grid_map(row, col, swap) == *g).then_some((row, col, swap))
}

fn sign3(p: [usize; 3]) -> i32 {
    let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sign(row)·sign(col)·sign(swap)` of a grid automorphism.
pub fn grid_character(g: &Permutation) -> Option<i32> {
    let (row, col, swap) = grid_decompose(g)?;
    Some(sign3(row) * sign3(col) * if swap { -1 } else { 1 })
}

/// Automorphism group of the 3×3 grid (order 72) or, if `!full`, the kernel
/// of [`grid_character`] (order 36).
pub fn grid_group(full: bool) -> Result<PermGroup> {
    let id = [0, 1, 2];
    let cyc = [1, 2, 0];
    let tr = [1, 0, 2];
    let gens = if full {
        vec![
            grid_map(cyc, id, false),
            grid_map(tr, id, false),
            grid_map(id, cyc, false),
            grid_map(id, tr, false),
            grid_map(id, id, true),
        ]
    } else {
        vec![
            grid_map(cyc, id, false),
            grid_map(id, cyc, false),
            grid_map(tr, tr, false),
            grid_map(tr, id, true),
        ]
    };
    PermGroup::new(9, gens)
}

/// Same row or same column.
pub fn rook_graph() -> Graph {
    graph_from_fn(9, |x, y| x / 3 == y / 3 || x % 3 == y % 3)
}

// ---- S_m on 2-sets ----

/// `S_m` acting on the 2-subsets of `{0..m}`, indexed as in [`all_pairs`].
pub fn s_m_on_2sets(m: usize) -> Result<PermGroup> {
    let pairs = all_pairs(m);
    let induced = |s: &dyn Fn(usize) -> usize| {
        perm_from_fn(pairs.len(), |i| {
            let (a, b) = pairs[i];
            pair_index(m, s(a), s(b))
        })
    };
    let gens = vec![induced(&|a| (a + 1) % m), induced(&|a| [1, 0].get(a).copied().unwrap_or(a))];
    PermGroup::new(pairs.len(), gens)
}

/// The line graph `L(K_m)`: 2-sets sharing a point.
pub fn line_graph_complete(m: usize) -> Graph {
    let pairs = all_pairs(m);
    graph_from_fn(pairs.len(), |i, j| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        a == c || a == d || b == c || b == d
    })
}

/// Kneser graph `K(5, 2)`, the complement of `L(K_5)`.
pub fn petersen() -> Graph {
    line_graph_complete(5).complement()
}

/// The six 2-subsets of a 4-set, joined when they meet.
pub fn octahedron() -> Graph {
    line_graph_complete(4)
}

// ---- flags of PG(2,2) ----

fn parity(x: usize) -> bool {
    x.count_ones() % 2 == 1
}

/// Flags `(point, line)` of `PG(2,2)`. Points and lines are nonzero vectors
/// of `GF(2)³` as bit masks; point `v` lies on line `f` iff `f·v = 0`.
pub fn flags() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..8 {
        for f in 1..8 {
            if !parity(v & f) {
                out.push((v, f));
            }
        }
    }
    out
}

fn flag_perm(fl: &[(usize, usize)], map: impl Fn((usize, usize)) -> (usize, usize)) -> Permutation {
    perm_from_fn(fl.len(), |i| {
        let img = map(fl[i]);
        fl.iter().position(|&x| x == img).expect("image is a flag")
    })
}

/// `PGL(3,2)` extended by the inverse-transpose duality, on the 21 flags.
/// Linear generators are the elementary maps `I + e_ij`; on a point they act
/// as `v ↦ (I + e_ij)v`, on a line as `f ↦ f(I + e_ij)` (the map is an involution).
pub fn flags_group() -> Result<PermGroup> {
    let fl = flags();
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                gens.push(flag_perm(&fl, |(v, f)| {
                    (v ^ if v >> j & 1 == 1 { 1 << i } else { 0 }, f ^ if f >> i & 1 == 1 { 1 << j } else { 0 })
                }));
            }
        }
    }
    gens.push(flag_duality());
    PermGroup::new(fl.len(), gens)
}

/// The duality `(v, f) ↦ (f, v)` on flags.
pub fn flag_duality() -> Permutation {
    flag_perm(&flags(), |(v, f)| (f, v))
}

/// Pairs of distinct flags sharing a point or a line.
pub fn flags_o1() -> Graph {
    let fl = flags();
    graph_from_fn(fl.len(), |x, y| fl[x].0 == fl[y].0 || fl[x].1 == fl[y].1)
}

/// Non-`O1` pairs where one point lies on the other line.
pub fn flags_o2() -> Graph {
    let fl = flags();
    let o1 = flags_o1();
    graph_from_fn(fl.len(), |x, y| {
        let ((p, l), (q, m)) = (fl[x], fl[y]);
        !o1.has_edge(x, y) && (!parity(p & m) || !parity(q & l))
    })
}

/// Opposite flags: the remaining pairs.
pub fn flags_o3() -> Graph {
    flags_o1().union(&flags_o2()).expect("same order").complement()
}

/// Multiplication by `x` in `GF(8) = GF(2)[x]/(x³ + x + 1)`, acting on
/// points and (by inverse transpose) on lines.
pub fn singer_cycle() -> Permutation {
    let times_x = |v: usize| {
        let w = v << 1;
        if w & 8 != 0 {
            w ^ 0b1011
        } else {
            w
        }
    };
    // inverse of multiplication by x is multiplication by x⁶
    let inv = |v: usize| (0..6).fold(v, |a, _| times_x(a));
    flag_perm(&flags(), |(v, f)| {
        let g = (0..3).filter(|&k| parity(f & inv(1 << k))).fold(0, |a, k| a | 1 << k);
        (times_x(v), g)
    })
}

/// The orbit of the first flag under [`singer_cycle`].
pub fn singer_flag_orbit() -> Vec<usize> {
    let s = singer_cycle();
    let mut orbit = vec![0];
    let mut x = s.apply(0);
    while x != 0 {
        orbit.push(x);
        x = s.apply(x);
    }
    orbit.sort_unstable();
    orbit
}

// ---- affine group on GF(p²) ----

/// Translations of `GF(p²)` by 1 and `α`, and multiplication by `ω²` for
/// the least primitive element `ω`. Order `p²(p² − 1)/2`.
pub fn affine_half_group(p: usize) -> Result<(PermGroup, Gf)> {
    if p == 2 || p > 7 {
        return Err(crate::Error::Precondition(format!("p = {p} must be an odd prime at most 7")));
    }
    let f = Gf::new(p, 2)?;
    let q = f.order();
    let w = f.primitive_element();
    let w2 = f.mul(w, w);
    let gens = vec![
        perm_from_fn(q, |x| f.add(x, 1)),
        perm_from_fn(q, |x| f.add(x, p)),
        perm_from_fn(q, |x| f.mul(x, w2)),
    ];
    Ok((PermGroup::new(q, gens)?, f))
}

/// `x ~ y` iff `x − y` is a nonzero square (`square = true`) or a non-square.
pub fn affine_difference_graph(f: &Gf, square: bool) -> Graph {
    graph_from_fn(f.order(), |x, y| f.is_square(f.sub(x, y)) == square)
}

// ---- W(2) ----

/// The symplectic form `u0v1 + u1v0 + u2v3 + u3v2` on `GF(2)⁴`.
pub fn symplectic_form(u: usize, v: usize) -> bool {
    let swapped = (u & 0b0101) << 1 | (u & 0b1010) >> 1;
    parity(swapped & v)
}

/// `Sp(4,2)` generated by the 15 transvections `v ↦ v + B(v,a)a`, on the
/// nonzero vectors (point `i` is vector `i + 1`).
pub fn symplectic_w2() -> Result<PermGroup> {
    let gens = (1..16)
        .map(|a| {
            perm_from_fn(15, |i| {
                let v = i + 1;
                (if symplectic_form(v, a) { v ^ a } else { v }) - 1
            })
        })
        .collect();
    PermGroup::new(15, gens)
}

/// Totally isotropic lines `{u, v, u+v}` as sorted point indices.
pub fn w2_lines() -> Vec<Vec<usize>> {
    let mut lines = Vec::new();
    for u in 1..16 {
        for v in u + 1..16 {
            let w = u ^ v;
            if w > v && !symplectic_form(u, v) {
                lines.push(vec![u - 1, v - 1, w - 1]);
            }
        }
    }
    lines
}

/// Distinct points joined when orthogonal.
pub fn w2_collinearity() -> Graph {
    graph_from_fn(15, |x, y| !symplectic_form(x + 1, y + 1))
}

// ---- lines of PG(n−1, q) ----

/// Points of `PG(n−1, q)` as normalized coordinate vectors.
pub fn projective_points(n: usize, f: &Gf) -> Vec<Vec<usize>> {
    let q = f.order();
    let mut out = Vec::new();
    let mut v = vec![0; n];
    for code in 1..q.pow(n as u32) {
        let mut c = code;
        for x in v.iter_mut() {
            *x = c % q;
            c /= q;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v.clone());
        }
    }
    out
}

fn normalize(f: &Gf, v: &[usize]) -> Vec<usize> {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let inv = f.inv(lead).expect("nonzero");
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

/// Lines of `PG(n−1, q)` as sorted lists of point indices, and the points.
pub fn projective_lines(n: usize, f: &Gf) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let pts = projective_points(n, f);
    let index = |v: &[usize]| pts.iter().position(|p| p == v).expect("normalized point");
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let mut line: Vec<usize> = (0..f.order())
                .map(|s| {
                    let v: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| f.add(f.mul(s, x), y)).collect();
                    index(&normalize(f, &v))
                })
                .chain(std::iter::once(i))
                .collect();
            line.sort_unstable();
            line.dedup();
            lines.push(line);
        }
    }
    lines.sort();
    lines.dedup();
    (lines, pts)
}

/// Lines (as sorted point indices) and points (as coordinate vectors).
pub type LinesAndPoints = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// `SL(n, q)` on the lines of `PG(n−1, q)`, generated by `I + e_ij`.
pub fn projective_lines_group(n: usize, f: &Gf) -> Result<(PermGroup, LinesAndPoints)> {
    let (lines, pts) = projective_lines(n, f);
    let index = |v: &[usize]| pts.iter().position(|p| p == v).expect("normalized point");
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let on_points: Vec<usize> = pts
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w[i] = f.add(w[i], v[j]);
                    index(&normalize(f, &w))
                })
                .collect();
            gens.push(perm_from_fn(lines.len(), |l| {
                let mut img: Vec<usize> = lines[l].iter().map(|&x| on_points[x]).collect();
                img.sort_unstable();
                lines.binary_search(&img).expect("image is a line")
            }));
        }
    }
    Ok((PermGroup::new(lines.len(), gens)?, (lines, pts)))
}

/// Lines joined when they meet.
pub fn concurrence_graph(lines: &[Vec<usize>]) -> Graph {
    graph_from_fn(lines.len(), |a, b| lines[a].iter().any(|x| lines[b].binary_search(x).is_ok()))
}
