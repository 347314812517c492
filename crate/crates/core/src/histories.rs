//! Chords, Hermite histories and the Dyck tiling strip bijection for
//! `(1,1)`-tilings, and insertion histories of permutations.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::paths::{self, Cell, LatticeWord, PathError, Step};
use crate::tilings::{self, DyckTile, Tiling, TilingError, Variant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HistoryError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error("tiling is not a cover-inclusive (1,1)-tiling")]
    NotInclusive,
    #[error("trajectory starting at edge ({0},{1}) does not land on an N step of the lower path")]
    Unattached(i32, i32),
    #[error("two trajectories attach to N step {0}")]
    DoubleAttachment(usize),
    #[error("{0:?} is not an insertion history")]
    BadHistory(Vec<usize>),
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("labels {0:?} do not increase from roots to leaves")]
    NotIncreasing(Vec<usize>),
    #[error("{0:?} is not a step sequence")]
    NotAStepSequence(Vec<i64>),
    #[error("tiling has {0} strip decodings")]
    Ambiguous(usize),
}

/// A matched N/E pair of a `(1,1)`-Dyck word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub open: usize,
    pub close: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Chords indexed in pre-order, which is the order of their N steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordForest {
    pub chords: Vec<Chord>,
}

impl ChordForest {
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.chords[i].parent.is_none()).collect()
    }

    /// Children left to right, then the chord itself.
    pub fn post_order(&self) -> Vec<usize> {
        fn visit(f: &ChordForest, i: usize, out: &mut Vec<usize>) {
            for &c in &f.chords[i].children {
                visit(f, c, out);
            }
            out.push(i);
        }
        let mut out = Vec::new();
        for r in self.roots() {
            visit(self, r, &mut out);
        }
        out
    }

    /// Number of chords in the subtree of each chord.
    pub fn hooks(&self) -> Vec<usize> {
        self.chords.iter().map(|c| (c.close - c.open).div_ceil(2)).collect()
    }

    /// Whether labels strictly increase from every parent to its children.
    pub fn is_increasing(&self, labels: &[usize]) -> bool {
        self.chords
            .iter()
            .enumerate()
            .all(|(i, c)| c.parent.is_none_or(|p| labels[p] < labels[i]))
    }
}

pub fn chords(p: &LatticeWord) -> Result<ChordForest, HistoryError> {
    if !paths::is_dyck(p, 1, 1)? {
        return Err(PathError::NotDyck(p.to_string(), 1, 1).into());
    }
    let mut chords: Vec<Chord> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for (pos, &s) in p.steps().iter().enumerate() {
        match s {
            Step::N => {
                let idx = chords.len();
                let parent = stack.last().copied();
                if let Some(par) = parent {
                    chords[par].children.push(idx);
                }
                chords.push(Chord { open: pos, close: usize::MAX, parent, children: Vec::new() });
                stack.push(idx);
            }
            Step::E => {
                let idx = stack.pop().expect("Dyck words are balanced");
                chords[idx].close = pos;
            }
        }
    }
    Ok(ChordForest { chords })
}

/// `h_j` is the 0-based position of `j` among the letters `1..=j` of `w`.
pub fn insertion_history(w: &[usize]) -> Result<Vec<usize>, HistoryError> {
    check_permutation(w)?;
    let mut out = Vec::with_capacity(w.len());
    for j in 1..=w.len() {
        out.push(w.iter().filter(|&&v| v <= j).position(|&v| v == j).expect("permutation"));
    }
    Ok(out)
}

/// The permutation with the given insertion history.
pub fn permutation_from_history(h: &[usize]) -> Result<Vec<usize>, HistoryError> {
    let mut w = Vec::with_capacity(h.len());
    for (j, &pos) in h.iter().enumerate() {
        if pos > j {
            return Err(HistoryError::BadHistory(h.to_vec()));
        }
        w.insert(pos, j + 1);
    }
    Ok(w)
}

pub fn check_permutation(w: &[usize]) -> Result<(), HistoryError> {
    let set: BTreeSet<usize> = w.iter().copied().collect();
    if set.len() != w.len() || w.iter().any(|&v| v == 0 || v > w.len()) {
        return Err(HistoryError::NotAPermutation(w.to_vec()));
    }
    Ok(())
}

pub fn inverse_permutation(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// For each N step of the lower path, the total art of the tiles on the
/// trajectory attached to it (zero when none is attached).
///
/// A trajectory runs from the right edge of a tile's last box to the left
/// edge of its first box, and continues into the tile whose last box sits
/// immediately to the left. A trajectory that starts away from the lower
/// path is carried along `(1,-1)` until it meets an N step of that path.
pub fn hermite_vector(t: &Tiling) -> Result<Vec<usize>, HistoryError> {
    let u = paths::u_seq(&t.lower);
    let mut l = vec![0; u.len()];
    let mut attached = vec![false; u.len()];
    let by_last: std::collections::BTreeMap<Cell, usize> =
        t.tiles.iter().enumerate().map(|(i, d)| (d.last(), i)).collect();
    let firsts: BTreeSet<Cell> = t.tiles.iter().map(DyckTile::first).collect();
    for d in &t.tiles {
        let (lx, ly) = d.last();
        if firsts.contains(&(lx + 1, ly)) {
            continue;
        }
        let mut art = 0;
        let mut cur = Some(d);
        while let Some(tile) = cur {
            art += tile.stat(tilings::Statistic::Art, t.a, t.b);
            let (fx, fy) = tile.first();
            cur = by_last.get(&(fx - 1, fy)).map(|&i| &t.tiles[i]);
        }
        let (mut x, mut y) = (lx + 1, ly);
        loop {
            if y < 0 {
                return Err(HistoryError::Unattached(lx + 1, ly));
            }
            let ux = u[y as usize] as i32;
            if x == ux {
                break;
            }
            if x > ux {
                return Err(HistoryError::Unattached(lx + 1, ly));
            }
            x += 1;
            y -= 1;
        }
        let row = y as usize;
        if std::mem::replace(&mut attached[row], true) {
            return Err(HistoryError::DoubleAttachment(row));
        }
        l[row] = art;
    }
    Ok(l)
}

fn require_inclusive_11(t: &Tiling) -> Result<(), HistoryError> {
    if t.a != 1 || t.b != 1 {
        return Err(HistoryError::NotInclusive);
    }
    let region = tilings::region_of(&t.lower, &t.upper)?;
    if !tilings::is_cover_inclusive(&t.tiles, &region) || !paths::is_dyck(&t.lower, 1, 1)? {
        return Err(HistoryError::NotInclusive);
    }
    Ok(())
}

/// Hermite label of each chord, in pre-order.
pub fn hermite_labels(t: &Tiling) -> Result<Vec<usize>, HistoryError> {
    let omega = hermite_word(t)?;
    Ok(inverse_permutation(&omega))
}

/// The permutation `omega` of a cover-inclusive `(1,1)`-tiling. Its insertion
/// history is the trajectory vector, and its inverse is the pre-order
/// reading of the chord labels.
pub fn hermite_word(t: &Tiling) -> Result<Vec<usize>, HistoryError> {
    require_inclusive_11(t)?;
    permutation_from_history(&hermite_vector(t)?)
}

/// `u(p) - h(w)`, which is the top path's step sequence when the tiling has
/// single boxes only.
pub fn top_path_from_hermite(p: &LatticeWord, w: &[usize]) -> Result<Vec<usize>, HistoryError> {
    let u = paths::step_sequence(p, 1, 1)?;
    let h = insertion_history(w)?;
    if h.len() != u.len() {
        return Err(HistoryError::NotAPermutation(w.to_vec()));
    }
    let diff: Vec<i64> = u.iter().zip(&h).map(|(&a, &b)| a as i64 - b as i64).collect();
    if diff.iter().any(|&d| d < 0) || diff.windows(2).any(|p| p[0] > p[1]) {
        return Err(HistoryError::NotAStepSequence(diff));
    }
    Ok(diff.into_iter().map(|d| d as usize).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// Spread along the line `x + y = m`, then grow one strip.
pub fn dts_step(t: &Tiling, m: usize, side: Side) -> Tiling {
    let p = t.lower.steps();
    let q = t.upper.steps();
    let lower = LatticeWord::concat(&[&p[..m], &[Step::N, Step::E], &p[m..]]);
    let spread_upper = LatticeWord::concat(&[&q[..m], &[Step::N, Step::E], &q[m..]]);
    let upper = match side {
        Side::Right => LatticeWord::concat(&[&q[..m], &[Step::N], &q[m..], &[Step::E]]),
        Side::Left => LatticeWord::concat(&[&[Step::N], &q[..m], &[Step::E], &q[m..]]),
    };
    let cut = m as i32 - 1;
    let mut tiles: Vec<DyckTile> = t
        .tiles
        .iter()
        .map(|d| {
            let mut boxes = Vec::new();
            let mut size = d.size;
            for &(x, y) in &d.boxes {
                match (x + y).cmp(&cut) {
                    std::cmp::Ordering::Less => boxes.push((x, y)),
                    std::cmp::Ordering::Equal => {
                        boxes.extend([(x, y), (x, y + 1), (x + 1, y + 1)]);
                        size += 1;
                    }
                    std::cmp::Ordering::Greater => boxes.push((x + 1, y + 1)),
                }
            }
            DyckTile { size, boxes }
        })
        .collect();
    let before = paths::young_boxes(&spread_upper);
    let after = paths::young_boxes(&upper);
    tiles.extend(before.difference(&after).map(|&c| DyckTile::single(c)));
    Tiling::new(1, 1, lower, upper, tiles, Variant::Inclusive)
}

/// Inverse of `dts_step` at `m`, when the tiling is in its image.
fn undo_step(t: &Tiling, m: usize, side: Side) -> Option<Tiling> {
    let p = t.lower.steps();
    let q = t.upper.steps();
    let len = q.len();
    if m + 1 >= len || p[m] != Step::N || p[m + 1] != Step::E {
        return None;
    }
    let (a_part, b_part): (Vec<Step>, Vec<Step>) = match side {
        Side::Right => {
            if q[m] != Step::N || q[len - 1] != Step::E {
                return None;
            }
            (q[..m].to_vec(), q[m + 1..len - 1].to_vec())
        }
        Side::Left => {
            if q[0] != Step::N || q[m + 1] != Step::E {
                return None;
            }
            (q[1..m + 1].to_vec(), q[m + 2..].to_vec())
        }
    };
    let spread_upper = LatticeWord::concat(&[&a_part, &[Step::N, Step::E], &b_part]);
    let grown: BTreeSet<Cell> = paths::young_boxes(&spread_upper)
        .difference(&paths::young_boxes(&t.upper))
        .copied()
        .collect();
    let cut = m as i32;
    let mut tiles = Vec::new();
    for d in &t.tiles {
        if d.is_single() && grown.contains(&d.first()) {
            continue;
        }
        let mut boxes = Vec::new();
        let mut size = d.size;
        let mut skip_next = false;
        for &(x, y) in &d.boxes {
            if grown.contains(&(x, y)) {
                return None;
            }
            if skip_next {
                skip_next = false;
                continue;
            }
            match (x + y).cmp(&cut) {
                std::cmp::Ordering::Less => boxes.push((x, y)),
                std::cmp::Ordering::Equal => {
                    if size == 0 {
                        return None;
                    }
                    size -= 1;
                    skip_next = true;
                }
                std::cmp::Ordering::Greater => boxes.push((x - 1, y - 1)),
            }
        }
        if boxes.is_empty() {
            return None;
        }
        tiles.push(DyckTile { size, boxes });
    }
    let lower = t.lower.without(m..m + 2);
    let upper = LatticeWord::concat(&[&a_part, &b_part]);
    let prev = Tiling::new(1, 1, lower, upper, tiles, Variant::Inclusive);
    (dts_step(&prev, m, side) == *t).then_some(prev)
}

/// Every label vector (pre-order) that builds `t` by strip steps.
pub fn dts_decodings(t: &Tiling, side: Side) -> Vec<Vec<usize>> {
    let n = t.lower.n_count();
    if n == 0 {
        return if t.tiles.is_empty() { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let p = t.lower.steps();
    for m in 0..p.len() - 1 {
        if let Some(prev) = undo_step(t, m, side) {
            let before = p[..m].iter().filter(|&&s| s == Step::N).count();
            for mut labels in dts_decodings(&prev, side) {
                labels.insert(before, n);
                out.push(labels);
            }
        }
    }
    out
}

/// Strip labels of the chords, in pre-order.
pub fn dts_labels(t: &Tiling, side: Side) -> Result<Vec<usize>, HistoryError> {
    require_inclusive_11(t)?;
    let mut all = dts_decodings(t, side);
    match all.len() {
        0 => Err(HistoryError::NotInclusive),
        1 => Ok(all.pop().expect("one decoding")),
        k => Err(HistoryError::Ambiguous(k)),
    }
}

/// Post-order reading of the labels for the right strip; for the left
/// strip, the pre-order reading taken from right to left.
pub fn read_labels(forest: &ChordForest, labels: &[usize], side: Side) -> Vec<usize> {
    match side {
        Side::Right => forest.post_order().iter().map(|&i| labels[i]).collect(),
        Side::Left => labels.iter().rev().copied().collect(),
    }
}

/// Inverse of `read_labels`.
pub fn labels_from_word(forest: &ChordForest, word: &[usize], side: Side) -> Vec<usize> {
    let mut labels = vec![0; word.len()];
    match side {
        Side::Right => {
            for (k, &i) in forest.post_order().iter().enumerate() {
                labels[i] = word[k];
            }
        }
        Side::Left => {
            for (k, &v) in word.iter().rev().enumerate() {
                labels[k] = v;
            }
        }
    }
    labels
}

/// `nu` (right) or `upsilon` (left) of a cover-inclusive `(1,1)`-tiling.
pub fn dts_word(t: &Tiling, side: Side) -> Result<Vec<usize>, HistoryError> {
    let labels = dts_labels(t, side)?;
    Ok(read_labels(&chords(&t.lower)?, &labels, side))
}

/// The tiling above `lower` whose strip word is `word`. With no lower path
/// given, `(NE)^n` is used, whose chords carry every labelling.
pub fn dts_inverse(word: &[usize], side: Side, lower: Option<&LatticeWord>) -> Result<Tiling, HistoryError> {
    check_permutation(word)?;
    let n = word.len();
    let lower = match lower {
        Some(l) => l.clone(),
        None => LatticeWord::new([Step::N, Step::E].repeat(n)),
    };
    let forest = chords(&lower)?;
    if forest.len() != n {
        return Err(HistoryError::NotAPermutation(word.to_vec()));
    }
    let labels = labels_from_word(&forest, word, side);
    if !forest.is_increasing(&labels) {
        return Err(HistoryError::NotIncreasing(word.to_vec()));
    }
    let empty = LatticeWord::default();
    let mut t = Tiling::new(1, 1, empty.clone(), empty, Vec::new(), Variant::Inclusive);
    for k in 1..=n {
        let c = labels.iter().position(|&l| l == k).expect("labels are a permutation");
        let open = forest.chords[c].open;
        // Letters of earlier chords that precede this chord's N step.
        let m = forest
            .chords
            .iter()
            .enumerate()
            .filter(|&(i, _)| labels[i] < k)
            .map(|(_, ch)| (ch.open < open) as usize + (ch.close < open) as usize)
            .sum();
        t = dts_step(&t, m, side);
    }
    debug_assert_eq!(t.lower, lower);
    Ok(t)
}

/// Whether every chord's Hermite and right-strip labels add up to `n + 1`.
pub fn duality_check(t: &Tiling) -> Result<bool, HistoryError> {
    let n = t.lower.n_count();
    let h = hermite_labels(t)?;
    let d = dts_labels(t, Side::Right)?;
    Ok(h.iter().zip(&d).all(|(x, y)| x + y == n + 1))
}
