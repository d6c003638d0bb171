//! Text formats. Points are 1-based in every file.
//!
//! * group: header `degree N`, then one generator per line, in cycle
//!   notation `(1 2 3)(4 5)` or as an image list `[2,3,1,4,5]`;
//! * transformation: image list `[1,1,2,3]`;
//! * graph: header `vertices N`, then one edge `u v` per line;
//! * automaton: `states N`, `letters A B ...`, then one image row per letter
//!   in letter order, optionally prefixed by the letter name.
//!
//! Blank lines and `#` comments are ignored everywhere.

use std::fmt::Write;

use crate::dfa::Dfa;
use crate::graphs::Graph;
use crate::perm::{PermGroup, Permutation};
use crate::transform::Transformation;
use crate::{Error, Result};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_point(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a positive integer")))?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("point {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn header(line: usize, l: &str, key: &str) -> Result<usize> {
    let rest = l
        .strip_prefix(key)
        .ok_or_else(|| Error::parse(line, format!("expected `{key} N` header")))?
        .trim();
    rest.parse()
        .map_err(|_| Error::parse(line, format!("bad {key} `{rest}`")))
}

/// Parses `[a,b,...]` (1-based images); `n` is checked when given.
fn parse_image_list(line: usize, l: &str, n: Option<usize>) -> Result<Vec<usize>> {
    let inner = l
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(line, "expected an image list `[..]`"))?;
    let toks: Vec<&str> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    let len = n.unwrap_or(toks.len());
    if toks.len() != len {
        return Err(Error::parse(line, format!("expected {len} images, found {}", toks.len())));
    }
    toks.iter().map(|t| parse_point(line, t, len)).collect()
}

fn parse_cycles(line: usize, l: &str, n: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = l;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(line, "expected `(` in cycle notation"))?;
        let end = body
            .find(')')
            .ok_or_else(|| Error::parse(line, "unclosed cycle"))?;
        let cycle = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_point(line, t, n))
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        rest = body[end + 1..].trim_start();
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_permutation(line: usize, l: &str, n: usize) -> Result<Permutation> {
    if l.starts_with('[') {
        let images = parse_image_list(line, l, Some(n))?;
        Permutation::from_images(images).map_err(|e| Error::parse(line, e.to_string()))
    } else {
        parse_cycles(line, l, n)
    }
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| Error::parse(1, "empty group file"))?;
    let n = header(hl, h, "degree")?;
    if n == 0 {
        return Err(Error::parse(hl, "degree must be positive"));
    }
    let gens = lines
        .map(|(i, l)| parse_permutation(i, l, n))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(n, gens)
}

pub fn write_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.generators() {
        let _ = writeln!(out, "{p}");
    }
    out
}

/// Parses a transformation in image-list form; the first content line is used.
pub fn parse_transformation(text: &str) -> Result<Transformation> {
    let (i, l) = content_lines(text)
        .next()
        .ok_or_else(|| Error::parse(1, "empty transformation file"))?;
    let images = parse_image_list(i, l, None)?;
    Transformation::new(images).map_err(|e| Error::parse(i, e.to_string()))
}

pub fn write_transformation(t: &Transformation) -> String {
    format!("{t}\n")
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    let n = header(hl, h, "vertices")?;
    let mut g = Graph::new(n);
    for (i, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(Error::parse(i, "expected an edge `u v`"));
        };
        let (x, y) = (parse_point(i, a, n)?, parse_point(i, b, n)?);
        if x == y {
            return Err(Error::parse(i, "loops are not allowed"));
        }
        g.add_edge(x, y);
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.order());
    for (x, y) in g.edges() {
        let _ = writeln!(out, "{} {}", x + 1, y + 1);
    }
    out
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| Error::parse(1, "empty automaton file"))?;
    let n = header(hl, h, "states")?;
    let (ll, l) = lines
        .next()
        .ok_or_else(|| Error::parse(hl + 1, "expected `letters ...`"))?;
    let letters: Vec<String> = l
        .strip_prefix("letters")
        .ok_or_else(|| Error::parse(ll, "expected `letters ...`"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if letters.is_empty() {
        return Err(Error::parse(ll, "no letters"));
    }
    let mut rows = Vec::new();
    let mut last = ll;
    for (i, l) in lines {
        last = i;
        let Some(name) = letters.get(rows.len()) else {
            return Err(Error::parse(i, "more rows than letters"));
        };
        let body = match l.strip_prefix(name.as_str()) {
            Some(rest) => rest.trim_start().trim_start_matches(':').trim(),
            None => l,
        };
        let row = if body.starts_with('[') {
            parse_image_list(i, body, Some(n))?
        } else {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != n {
                return Err(Error::parse(i, format!("expected {n} images, found {}", toks.len())));
            }
            toks.iter().map(|t| parse_point(i, t, n)).collect::<Result<_>>()?
        };
        rows.push(row);
    }
    if rows.len() != letters.len() {
        return Err(Error::parse(last, format!("{} letters but {} rows", letters.len(), rows.len())));
    }
    Dfa::new(letters, rows)
}

pub fn write_dfa(a: &Dfa) -> String {
    let mut out = format!("states {}\nletters {}\n", a.states(), a.letters().join(" "));
    for (name, row) in a.letters().iter().zip(a.rows()) {
        let images: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
        let _ = writeln!(out, "{name} [{}]", images.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_round_trip() {
        let text = "# grid rows\ndegree 5\n(1 2 3)(4 5)\n\n[2,1,3,4,5]\n";
        let g = parse_group(text).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.order_u128(), Some(12));
        let again = parse_group(&write_group(&g)).unwrap();
        assert_eq!(again.generators(), g.generators());
    }

    #[test]
    fn group_errors_carry_lines() {
        assert_eq!(
            parse_group("degree 3\n(1 2 4)\n").unwrap_err(),
            Error::Parse { line: 2, msg: "point 4 outside 1..=3".into() }
        );
        assert!(matches!(parse_group("degree 3\n\n(1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_group("deg 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("degree 3\n[1,1,2]\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn transformation_and_graph() {
        let t = parse_transformation("[1,1,2,3]").unwrap();
        assert_eq!(t.images(), &[0, 0, 1, 2]);
        assert_eq!(write_transformation(&t), "[1,1,2,3]\n");
        let g = parse_graph("vertices 3\n1 2\n2 3 # path\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(matches!(parse_graph("vertices 3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn dfa_formats() {
        let text = "states 4\nletters RED BLUE\n3 1 4 2\nBLUE: [3,3,1,1]\n";
        let a = parse_dfa(text).unwrap();
        assert_eq!(a, Dfa::dungeon());
        assert_eq!(parse_dfa(&write_dfa(&a)).unwrap(), a);
        assert!(matches!(
            parse_dfa("states 4\nletters RED BLUE\n3 1 4 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
