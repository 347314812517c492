//! Slow reference implementations used as oracles by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Cell = (i32, i32);

/// Boxes left of the word's path, computed by walking it.
pub fn diagram(word: &str) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    let (mut x, mut y) = (0, 0);
    for c in word.chars() {
        if c == 'N' {
            for i in 0..x {
                out.insert((i, y));
            }
            y += 1;
        } else {
            x += 1;
        }
    }
    out
}

/// Whether `word` stays weakly above the line of slope a/b.
pub fn is_dyck(word: &str, a: i64, b: i64) -> bool {
    let (mut x, mut y) = (0i64, 0i64);
    for c in word.chars() {
        if c == 'N' { y += 1 } else { x += 1 }
        if b * y < a * x {
            return false;
        }
    }
    true
}

/// All words over {N,E} with the given counts.
pub fn words(n: usize, e: usize) -> Vec<String> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n + e)) {
        if mask.count_ones() as usize == e {
            out.push((0..n + e).map(|i| if mask >> (n + e - 1 - i) & 1 == 1 { 'E' } else { 'N' }).collect());
        }
    }
    out
}

pub fn dyck_words(a: usize, b: usize, n: usize) -> Vec<String> {
    words(a * n, b * n).into_iter().filter(|w| is_dyck(w, a as i64, b as i64)).collect()
}

/// Size of the tile if `boxes` is a ribbon tracing an enlarged Dyck path.
pub fn tile_size(boxes: &BTreeSet<Cell>, a: usize, b: usize) -> Option<usize> {
    let mut v: Vec<Cell> = boxes.iter().copied().collect();
    v.sort_by_key(|&(x, y)| (x + y, x));
    let mut word = String::new();
    for w in v.windows(2) {
        match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
            (0, 1) => word.push('N'),
            (1, 0) => word.push('E'),
            _ => return None,
        }
    }
    // Undo the enlargement letter by letter and check the Dyck property.
    let mut p = String::new();
    let mut rest = word.as_str();
    while !rest.is_empty() {
        let na = "N".repeat(a);
        let eb = "E".repeat(b);
        if let Some(r) = rest.strip_prefix(na.as_str()) {
            p.push('N');
            rest = r;
        } else {
            let r = rest.strip_prefix(eb.as_str())?;
            p.push('E');
            rest = r;
        }
    }
    let n = p.matches('N').count();
    (p.len() == 2 * n && is_dyck(&p, 1, 1)).then_some(n)
}

/// Every partition of `region` into Dyck tiles, by brute force over blocks
/// containing the smallest remaining box.
pub fn all_tilings(region: &BTreeSet<Cell>, a: usize, b: usize) -> Vec<Vec<(usize, BTreeSet<Cell>)>> {
    let mut out = Vec::new();
    fn rec(rem: Vec<Cell>, a: usize, b: usize, acc: &mut Vec<(usize, BTreeSet<Cell>)>, out: &mut Vec<Vec<(usize, BTreeSet<Cell>)>>) {
        if rem.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = rem[0];
        let others = &rem[1..];
        for mask in 0u64..(1 << others.len()) {
            let mut block: BTreeSet<Cell> = BTreeSet::from([first]);
            let mut left = Vec::new();
            for (k, c) in others.iter().enumerate() {
                if mask >> k & 1 == 1 { block.insert(*c); } else { left.push(*c); }
            }
            if let Some(s) = tile_size(&block, a, b) {
                acc.push((s, block));
                rec(left, a, b, acc, out);
                acc.pop();
            }
        }
    }
    rec(region.iter().copied().collect(), a, b, &mut Vec::new(), &mut out);
    out
}

fn owners(t: &[(usize, BTreeSet<Cell>)]) -> BTreeMap<Cell, usize> {
    t.iter().enumerate().flat_map(|(i, (_, s))| s.iter().map(move |c| (*c, i))).collect()
}

/// Condition (I), read directly: each tile shifted by (1,-1) is a subset of
/// one other tile, or misses the region altogether.
pub fn inclusive(t: &[(usize, BTreeSet<Cell>)], region: &BTreeSet<Cell>) -> bool {
    for (i, (_, s)) in t.iter().enumerate() {
        let shifted: BTreeSet<Cell> = s.iter().map(|&(x, y)| (x + 1, y - 1)).collect();
        let below = shifted.iter().all(|c| !region.contains(c));
        let inside = t.iter().enumerate().any(|(k, (_, d))| k != i && shifted.is_subset(d));
        if !below && !inside {
            return false;
        }
    }
    true
}

/// Condition (II), read directly, with out-of-region neighbours counting
/// as belonging to neither tile.
pub fn exclusive(t: &[(usize, BTreeSet<Cell>)], _region: &BTreeSet<Cell>) -> bool {
    let own = owners(t);
    let nbrs = |s: &BTreeSet<Cell>| -> BTreeSet<Cell> {
        s.iter().flat_map(|&(x, y)| [(x, y + 1), (x - 1, y), (x - 1, y + 1)]).collect()
    };
    for (j, (_, d2)) in t.iter().enumerate() {
        let around = nbrs(d2);
        for (i, (_, d1)) in t.iter().enumerate() {
            if i == j || !d1.iter().any(|c| around.contains(c)) {
                continue;
            }
            for c in &around {
                match own.get(c) {
                    Some(&k) if k == i || k == j => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Coefficient list of `sum sign * q^stat` over the selected tilings.
pub fn gf(lower: &str, upper: &str, a: usize, b: usize, inclusive_variant: bool, stat: &dyn Fn(usize) -> usize, signed: bool) -> Vec<i64> {
    let big = diagram(lower);
    let small = diagram(upper);
    if !small.is_subset(&big) {
        return Vec::new();
    }
    let region: BTreeSet<Cell> = big.difference(&small).copied().collect();
    let mut coeffs = vec![0i64; region.len() + 2];
    for t in all_tilings(&region, a, b) {
        let ok = if inclusive_variant { inclusive(&t, &region) } else { exclusive(&t, &region) };
        if ok {
            let k: usize = t.iter().map(|(s, _)| stat(*s)).sum();
            let sign = if signed && t.len() % 2 == 1 { -1 } else { 1 };
            coeffs[k] += sign;
        }
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Insertion history computed from its definition.
pub fn insertion_history(w: &[usize]) -> Vec<usize> {
    (1..=w.len()).map(|j| w.iter().filter(|&&v| v <= j).position(|&v| v == j).unwrap()).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}
