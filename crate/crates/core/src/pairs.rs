//! Indexing of unordered pairs `{x, y}` with `x < y` on `{0..n}`.

/// Number of 2-subsets of an `n`-set.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Dense index of `{x, y}`; argument order does not matter. `x != y` required.
#[inline]
pub fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x != y && x < n && y < n);
    let (a, b) = if x < y { (x, y) } else { (y, x) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// All pairs in index order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(pair_count(n));
    for x in 0..n {
        for y in x + 1..n {
            v.push((x, y));
        }
    }
    v
}
