//! Strip decompositions of rational Dyck paths, b-Stirling permutations,
//! and the splitting of `(a,b)`-tilings into grids of `(1,1)`-tilings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::histories::{self, HistoryError, Side};
use crate::paths::{self, Cell, LatticeWord, PathError, Step};
use crate::tilings::{self, DyckTile, Tiling, TilingError, Variant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    History(#[from] HistoryError),
    #[error("sequence {0:?} is out of range for multiplicity {1}")]
    OutOfRange(Vec<usize>, usize),
    #[error("{0:?} is not a {1}-Stirling permutation")]
    NotStirling(Vec<usize>, usize),
    #[error("tiling is not cover-inclusive")]
    NotInclusive,
    #[error("component tilings do not fit together")]
    IncompatibleComponents,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

/// Heights of the columns `i, i+b, i+2b, ...` for each `i`.
fn split_columns(w: &LatticeWord, b: usize) -> Result<Vec<LatticeWord>, PathError> {
    let h = paths::h_seq(w);
    (0..b)
        .map(|i| {
            let part: Vec<usize> = h.iter().skip(i).step_by(b).copied().collect();
            paths::from_height_sequence(&part, w.n_count())
        })
        .collect()
}

/// Step positions of the rows `j, j+a, j+2a, ...` for each `j`.
fn split_rows(w: &LatticeWord, a: usize) -> Result<Vec<LatticeWord>, PathError> {
    let u = paths::u_seq(w);
    (0..a)
        .map(|j| {
            let part: Vec<usize> = u.iter().skip(j).step_by(a).copied().collect();
            paths::from_step_sequence(&part, w.e_count())
        })
        .collect()
}

fn require_dyck(pi: &LatticeWord, a: usize, b: usize) -> Result<usize, DecompError> {
    if !paths::is_dyck(pi, a, b)? {
        return Err(PathError::NotDyck(pi.to_string(), a, b).into());
    }
    Ok(pi.frame(a, b).unwrap_or(0))
}

/// Horizontal strip decomposition `(p_1, ..., p_b)`.
pub fn theta_h(pi: &LatticeWord, a: usize, b: usize) -> Result<Vec<LatticeWord>, DecompError> {
    require_dyck(pi, a, b)?;
    Ok(split_columns(pi, b)?)
}

/// Vertical strip decomposition `(q_1, ..., q_a)`.
pub fn theta_v(pi: &LatticeWord, a: usize, b: usize) -> Result<Vec<LatticeWord>, DecompError> {
    require_dyck(pi, a, b)?;
    Ok(split_rows(pi, a)?)
}

/// `a x b` array of `(1,1)` lattice words; `paths[j][i]` is `r_{i+1,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompGrid {
    pub a: usize,
    pub b: usize,
    pub paths: Vec<Vec<LatticeWord>>,
}

impl DecompGrid {
    /// `r_{i,j}` with 1-based indices.
    pub fn r(&self, i: usize, j: usize) -> &LatticeWord {
        &self.paths[j - 1][i - 1]
    }

    pub fn size(&self) -> usize {
        self.paths[0][0].n_count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .paths
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }

    /// Every imposed row and column relation, wrap-around included.
    pub fn relations_hold(&self) -> bool {
        let (a, b) = (self.a, self.b);
        let row_ok = (0..a).all(|j| {
            (0..b.saturating_sub(1)).all(|i| rel_h(&self.paths[j][i], &self.paths[j][i + 1]))
                && rel_h(&self.paths[j][0], &self.paths[j][b - 1])
        });
        let col_ok = (0..b).all(|i| {
            (0..a.saturating_sub(1)).all(|j| rel_v(&self.paths[j + 1][i], &self.paths[j][i]))
                && rel_v(&self.paths[a - 1][i], &self.paths[0][i])
        });
        row_ok && col_ok
    }

    /// The `(a,b)` word whose decomposition is this grid.
    pub fn assemble(&self) -> LatticeWord {
        let n = self.size();
        let mut u = Vec::with_capacity(self.a * n);
        let seqs: Vec<Vec<Vec<usize>>> =
            self.paths.iter().map(|row| row.iter().map(paths::u_seq).collect()).collect();
        for k in 0..n {
            for row in &seqs {
                u.push(row.iter().map(|s| s[k]).sum());
            }
        }
        paths::from_step_sequence(&u, self.b * n).expect("grid sums are monotone")
    }
}

impl fmt::Display for DecompGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.paths.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Dyck path decomposition: `theta_v` applied to each part of `theta_h`.
pub fn vartheta(pi: &LatticeWord, a: usize, b: usize) -> Result<DecompGrid, DecompError> {
    let cols = theta_h(pi, a, b)?;
    let mut paths = vec![Vec::with_capacity(b); a];
    for p in &cols {
        for (j, r) in split_rows(p, a)?.into_iter().enumerate() {
            paths[j].push(r);
        }
    }
    Ok(DecompGrid { a, b, paths })
}

/// The same grid computed by splitting rows first.
pub fn vartheta_rows_first(pi: &LatticeWord, a: usize, b: usize) -> Result<DecompGrid, DecompError> {
    let rows = theta_v(pi, a, b)?;
    let paths = rows.iter().map(|q| split_columns(q, b)).collect::<Result<Vec<_>, _>>()?;
    Ok(DecompGrid { a, b, paths })
}

/// Reverse the word and swap N with E.
pub fn sharp(w: &LatticeWord) -> LatticeWord {
    LatticeWord::new(
        w.steps().iter().rev().map(|&s| if s == Step::N { Step::E } else { Step::N }).collect(),
    )
}

/// `lambda^t_i = #{j : lambda_j >= i}` for `i = 1..=len`.
pub fn transpose(seq: &[usize], len: usize) -> Vec<usize> {
    (1..=len).map(|i| seq.iter().filter(|&&v| v >= i).count()).collect()
}

/// Peel off `b` sequences by repeated ceiling division.
pub fn algorithm_a(u: &[usize], b: usize) -> Vec<Vec<usize>> {
    let mut rest = u.to_vec();
    let mut out = Vec::with_capacity(b);
    for i in (1..=b).rev() {
        let v: Vec<usize> = rest.iter().map(|&x| x.div_ceil(i)).collect();
        for (r, x) in rest.iter_mut().zip(&v) {
            *r -= x;
        }
        out.push(v);
    }
    out
}

/// A permutation of `{1^b, ..., n^b}` in which every letter between two
/// copies of `i` exceeds `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StirlingPerm {
    pub word: Vec<usize>,
    pub b: usize,
    pub n: usize,
}

impl StirlingPerm {
    pub fn new(word: Vec<usize>, b: usize) -> Result<Self, DecompError> {
        let bad = || DecompError::NotStirling(word.clone(), b);
        if b == 0 || !word.len().is_multiple_of(b) {
            return Err(bad());
        }
        let n = word.len() / b;
        for i in 1..=n {
            let pos: Vec<usize> = (0..word.len()).filter(|&k| word[k] == i).collect();
            if pos.len() != b {
                return Err(bad());
            }
            if word[pos[0]..=pos[b - 1]].iter().any(|&v| v < i) {
                return Err(bad());
            }
        }
        if word.iter().any(|&v| v == 0 || v > n) {
            return Err(bad());
        }
        Ok(StirlingPerm { word, b, n })
    }
}

impl fmt::Display for StirlingPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// `mu`: insert `i^b` right after the first `u_i` letters.
pub fn stirling_from_steps(u: &[usize], b: usize) -> Result<StirlingPerm, DecompError> {
    if b == 0 || u.iter().enumerate().any(|(i, &x)| x > b * i) {
        return Err(DecompError::OutOfRange(u.to_vec(), b));
    }
    let mut word = Vec::with_capacity(b * u.len());
    for (i, &pos) in u.iter().enumerate() {
        word.splice(pos..pos, std::iter::repeat_n(i + 1, b));
    }
    Ok(StirlingPerm { word, b, n: u.len() })
}

/// `mu^{-1}`.
pub fn steps_from_stirling(p: &StirlingPerm) -> Vec<usize> {
    (1..=p.n)
        .map(|i| p.word.iter().filter(|&&v| v <= i).position(|&v| v == i).expect("every letter occurs"))
        .collect()
}

/// `nu^i_j = mu_{(j-1)b+i}`.
pub fn nu_sequences(mu: &StirlingPerm) -> Vec<Vec<usize>> {
    (0..mu.b).map(|i| mu.word.iter().skip(i).step_by(mu.b).copied().collect()).collect()
}

/// `xi^i`: insertion histories of the `nu^i`.
pub fn xi_sequences(nus: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, DecompError> {
    Ok(nus.iter().map(|nu| histories::insertion_history(nu)).collect::<Result<_, _>>()?)
}

/// `rho[j][i] = rho^{i+1,j+1}`, with `rho^{i,j}_k = xi^i_{a(k-1)+j}`.
pub fn rho_sequences(xis: &[Vec<usize>], a: usize) -> Vec<Vec<Vec<usize>>> {
    (0..a)
        .map(|j| xis.iter().map(|xi| xi.iter().skip(j).step_by(a).copied().collect()).collect())
        .collect()
}

/// `r ⪯_h s`: each step position of `s` is that of `r` or one less.
pub fn rel_h(r: &LatticeWord, s: &LatticeWord) -> bool {
    if r.n_count() != s.n_count() || r.e_count() != s.e_count() {
        return false;
    }
    paths::u_seq(r).iter().zip(paths::u_seq(s)).all(|(&x, y)| y <= x && y + 1 >= x)
}

/// `r ⪯_v s`: each height of `s` is that of `r` or one more, capped at the top.
pub fn rel_v(r: &LatticeWord, s: &LatticeWord) -> bool {
    if r.n_count() != s.n_count() || r.e_count() != s.e_count() {
        return false;
    }
    let top = r.n_count();
    paths::h_seq(r).iter().zip(paths::h_seq(s)).all(|(&x, y)| y >= x && y <= (x + 1).min(top))
}

/// Number of grids above `vartheta(pi)` satisfying every imposed relation.
pub fn count_paths_above_via_grids(pi: &LatticeWord, a: usize, b: usize) -> Result<usize, DecompError> {
    let base = vartheta(pi, a, b)?;
    let n = base.size();
    let words = paths::all_words(n, n);
    let cells: Vec<(usize, usize)> = (0..a).flat_map(|j| (0..b).map(move |i| (j, i))).collect();
    let choices: Vec<Vec<LatticeWord>> = cells
        .iter()
        .map(|&(j, i)| {
            words.iter().filter(|w| paths::path_leq(&base.paths[j][i], w).unwrap_or(false)).cloned().collect()
        })
        .collect();

    fn fits(grid: &[Vec<Option<LatticeWord>>], j: usize, i: usize, a: usize, b: usize) -> bool {
        let w = grid[j][i].as_ref().expect("just placed");
        let get = |jj: usize, ii: usize| grid[jj][ii].as_ref();
        let mut ok = true;
        if i > 0 {
            ok &= get(j, i - 1).is_none_or(|l| rel_h(l, w));
        }
        if i == b - 1 && b > 1 {
            ok &= get(j, 0).is_none_or(|f| rel_h(f, w));
        }
        if b == 1 {
            ok &= rel_h(w, w);
        }
        if j > 0 {
            ok &= get(j - 1, i).is_none_or(|up| rel_v(w, up));
        }
        if j == a - 1 && a > 1 {
            ok &= get(0, i).is_none_or(|f| rel_v(w, f));
        }
        ok
    }

    fn search(
        k: usize,
        cells: &[(usize, usize)],
        choices: &[Vec<LatticeWord>],
        grid: &mut Vec<Vec<Option<LatticeWord>>>,
        a: usize,
        b: usize,
    ) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (j, i) = cells[k];
        let mut total = 0;
        for w in &choices[k] {
            grid[j][i] = Some(w.clone());
            if fits(grid, j, i, a, b) {
                total += search(k + 1, cells, choices, grid, a, b);
            }
        }
        grid[j][i] = None;
        total
    }

    let mut grid = vec![vec![None; b]; a];
    Ok(search(0, &cells, &choices, &mut grid, a, b))
}

/// Grid cell `(i, j)` (0-based column, row) and coarse box of a box of `Y(pi)`.
pub fn box_to_cell(c: Cell, a: usize, b: usize) -> ((usize, usize), Cell) {
    let (a, b) = (a as i32, b as i32);
    let (x, y) = c;
    ((x.rem_euclid(b) as usize, y.rem_euclid(a) as usize), (x.div_euclid(b), y.div_euclid(a)))
}

pub fn cell_to_box(cell: (usize, usize), coarse: Cell, a: usize, b: usize) -> Cell {
    (coarse.0 * b as i32 + cell.0 as i32, coarse.1 * a as i32 + cell.1 as i32)
}

/// An `(a,b)`-tiling split into `(1,1)`-tilings, `cells[j][i]` over `r_{i+1,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: usize,
    pub b: usize,
    pub cells: Vec<Vec<Tiling>>,
}

impl Decomposition {
    pub fn lower_grid(&self) -> DecompGrid {
        let paths = self.cells.iter().map(|row| row.iter().map(|t| t.lower.clone()).collect()).collect();
        DecompGrid { a: self.a, b: self.b, paths }
    }

    pub fn upper_grid(&self) -> DecompGrid {
        let paths = self.cells.iter().map(|row| row.iter().map(|t| t.upper.clone()).collect()).collect();
        DecompGrid { a: self.a, b: self.b, paths }
    }

    pub fn has_nontrivial_tile(&self) -> bool {
        self.cells.iter().flatten().any(Tiling::has_nontrivial_tile)
    }
}

/// Each tile keeps the boxes lying in the grid cell of its first box as one
/// `(1,1)`-tile; its remaining boxes become single boxes of their cells.
pub fn decompose_tiling(t: &Tiling) -> Result<Decomposition, DecompError> {
    let (a, b) = (t.a, t.b);
    let region = tilings::region_of(&t.lower, &t.upper)?;
    if !tilings::is_cover_inclusive(&t.tiles, &region) {
        return Err(DecompError::NotInclusive);
    }
    let lower = vartheta(&t.lower, a, b)?;
    let upper = vartheta(&t.upper, a, b)?;
    let mut parts: Vec<Vec<Vec<DyckTile>>> = vec![vec![Vec::new(); b]; a];
    for d in &t.tiles {
        let (anchor, _) = box_to_cell(d.first(), a, b);
        let mut kept = Vec::new();
        for &c in &d.boxes {
            let (cell, coarse) = box_to_cell(c, a, b);
            if cell == anchor {
                kept.push(coarse);
            } else {
                parts[cell.1][cell.0].push(DyckTile::single(coarse));
            }
        }
        parts[anchor.1][anchor.0].push(DyckTile::from_boxes(kept, 1, 1)?);
    }
    let mut cells = Vec::with_capacity(a);
    for (j, row) in parts.into_iter().enumerate() {
        let mut out = Vec::with_capacity(b);
        for (i, tiles) in row.into_iter().enumerate() {
            out.push(Tiling::new(
                1,
                1,
                lower.paths[j][i].clone(),
                upper.paths[j][i].clone(),
                tiles,
                Variant::Inclusive,
            ));
        }
        cells.push(out);
    }
    Ok(Decomposition { a, b, cells })
}

/// Inverse of `decompose_tiling`: each non-single `(1,1)`-tile is enlarged
/// back into an `(a,b)`-tile, absorbing single boxes of the other cells.
pub fn reassemble_tiling(dec: &Decomposition) -> Result<Tiling, DecompError> {
    let (a, b) = (dec.a, dec.b);
    let lower = dec.lower_grid().assemble();
    let upper = dec.upper_grid().assemble();
    let mut singles: BTreeSet<Cell> = BTreeSet::new();
    let mut big = Vec::new();
    for (j, row) in dec.cells.iter().enumerate() {
        for (i, t) in row.iter().enumerate() {
            for d in &t.tiles {
                if d.is_single() {
                    singles.insert(cell_to_box((i, j), d.first(), a, b));
                } else {
                    big.push(((i, j), d));
                }
            }
        }
    }
    let mut tiles = Vec::new();
    for (cell, d) in big {
        let start = cell_to_box(cell, d.first(), a, b);
        let word = paths::enlarge(&d.shape(), a, b)?;
        let mut boxes = vec![start];
        let (mut x, mut y) = start;
        for &s in word.steps() {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            boxes.push((x, y));
        }
        for &c in &boxes {
            if box_to_cell(c, a, b).0 != cell && !singles.remove(&c) {
                return Err(DecompError::IncompatibleComponents);
            }
        }
        tiles.push(DyckTile::from_boxes(boxes, a, b)?);
    }
    tiles.extend(singles.into_iter().map(DyckTile::single));
    let t = Tiling::new(a, b, lower, upper, tiles, Variant::Inclusive);
    t.validate().map_err(|_| DecompError::IncompatibleComponents)?;
    Ok(t)
}

/// Lattice points of a word, starting at the origin.
fn vertices(w: &LatticeWord) -> Vec<Cell> {
    let mut out = vec![(0, 0)];
    let (mut x, mut y) = (0, 0);
    for &s in w.steps() {
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
        }
        out.push((x, y));
    }
    out
}

/// Peaks of a word: the points entered by an N step and left by an E step.
pub fn peaks(w: &LatticeWord) -> Vec<Cell> {
    let v = vertices(w);
    let s = w.steps();
    (1..s.len()).filter(|&k| s[k - 1] == Step::N && s[k] == Step::E).map(|k| v[k]).collect()
}

/// Whether a peak `v` of `r_{i+1,j+1}` in `vartheta(pi)` is admissible, or
/// `None` when no box sits up-left of `v`.
pub fn peak_is_admissible(
    pi: &LatticeWord,
    a: usize,
    b: usize,
    cell: (usize, usize),
    v: Cell,
) -> Result<Option<bool>, DecompError> {
    let grid = vartheta(pi, a, b)?;
    let r = &grid.paths[cell.1][cell.0];
    let (vx, vy) = v;
    if vx < 1 || vy as usize >= r.n_count() {
        return Ok(None);
    }
    let coarse = (vx - 1, vy);
    if !paths::young_boxes(r).contains(&coarse) {
        return Ok(None);
    }
    let (bx, by) = cell_to_box(cell, coarse, a, b);
    let (xbar, ybar) = (bx + 1, by);
    let verts = vertices(pi);
    let steps = pi.steps();
    let hits: Vec<usize> = (0..verts.len())
        .filter(|&k| {
            let (px, py) = verts[k];
            px >= xbar && px - xbar == ybar - py
        })
        .collect();
    assert_eq!(hits.len(), 1, "the diagonal through a box meets the path once");
    let k = hits[0];
    Ok(Some(k > 0 && k < steps.len() && steps[k - 1] == Step::N && steps[k] == Step::E))
}

/// Condition (♥): at every non-admissible peak of a lower grid path, the box
/// up-left of the peak is a single box whenever it lies in the region.
pub fn heart_condition(pi: &LatticeWord, dec: &Decomposition) -> Result<bool, DecompError> {
    for (j, row) in dec.cells.iter().enumerate() {
        for (i, t) in row.iter().enumerate() {
            let owners = t.owners();
            for v in peaks(&t.lower) {
                if peak_is_admissible(pi, dec.a, dec.b, (i, j), v)? != Some(false) {
                    continue;
                }
                if let Some(&k) = owners.get(&(v.0 - 1, v.1)) {
                    if !t.tiles[k].is_single() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `Y(P)`: the number of boxes in the diagram of the lower path.
fn lower_area(t: &Tiling) -> usize {
    paths::young_size(&t.lower)
}

fn history_sum(word: &[usize]) -> Result<usize, DecompError> {
    Ok(histories::insertion_history(word)?.iter().sum())
}

/// `Y(P) - N(nu^1, ..., nu^b)` for a `(1,b)`-tiling, with `nu^i` the right
/// strip word of the i-th horizontal component.
pub fn weight_via_words_h(t: &Tiling) -> Result<usize, DecompError> {
    if t.a != 1 {
        return Err(DecompError::PreconditionViolated("expected a (1,b)-tiling"));
    }
    let dec = decompose_tiling(t)?;
    let mut n = 0;
    for d in &dec.cells[0] {
        n += history_sum(&histories::dts_word(d, Side::Right)?)?;
    }
    lower_area(t).checked_sub(n).ok_or(DecompError::IncompatibleComponents)
}

/// `Y(P) - N(upsilon_1, ..., upsilon_a) - M(a-1)` for an `(a,1)`-tiling,
/// with `upsilon_j` the left strip word of the j-th vertical component and
/// `M` the total size of the tiles.
pub fn weight_via_words_v(t: &Tiling) -> Result<usize, DecompError> {
    if t.b != 1 {
        return Err(DecompError::PreconditionViolated("expected an (a,1)-tiling"));
    }
    let dec = decompose_tiling(t)?;
    let mut n = 0;
    for row in &dec.cells {
        n += history_sum(&histories::dts_word(&row[0], Side::Left)?)?;
    }
    let m: usize = t.tiles.iter().map(|d| d.size).sum();
    lower_area(t).checked_sub(n + m * (t.a - 1)).ok_or(DecompError::IncompatibleComponents)
}

/// The `(1,b)`-tiling between the assembled lower and upper paths whose
/// trajectory vector is the sum of those of the horizontal components `ds`.
pub fn reassemble_hermite(ds: &[Tiling]) -> Result<Tiling, DecompError> {
    let b = ds.len();
    if b == 0 {
        return Err(DecompError::IncompatibleComponents);
    }
    let mut g = vec![0; ds[0].lower.n_count()];
    for d in ds {
        let l = histories::hermite_vector(d)?;
        if l.len() != g.len() {
            return Err(DecompError::IncompatibleComponents);
        }
        for (x, y) in g.iter_mut().zip(l) {
            *x += y;
        }
    }
    let lower = DecompGrid { a: 1, b, paths: vec![ds.iter().map(|d| d.lower.clone()).collect()] }.assemble();
    let upper = DecompGrid { a: 1, b, paths: vec![ds.iter().map(|d| d.upper.clone()).collect()] }.assemble();
    let mut found: Vec<Tiling> = tilings::enumerate_tilings(&lower, &upper, 1, b, Variant::Inclusive)?
        .into_iter()
        .filter(|t| histories::hermite_vector(t).is_ok_and(|l| l == g))
        .collect();
    match found.len() {
        1 => Ok(found.pop().expect("one match")),
        _ => Err(DecompError::IncompatibleComponents),
    }
}

/// Whether `nu(D_{i+1}) <= nu(D_i)` lexicographically, for single-box
/// tilings over `p_i ⪯_h p_{i+1}` sharing an upper path.
pub fn lex_monotonicity_check(d_i: &Tiling, d_next: &Tiling) -> Result<bool, DecompError> {
    if !rel_h(&d_i.lower, &d_next.lower) {
        return Err(DecompError::PreconditionViolated("lower paths are not related"));
    }
    if d_i.upper != d_next.upper {
        return Err(DecompError::PreconditionViolated("upper paths differ"));
    }
    if d_i.has_nontrivial_tile() || d_next.has_nontrivial_tile() {
        return Err(DecompError::PreconditionViolated("tilings must consist of single boxes"));
    }
    let w0 = histories::dts_word(d_i, Side::Right)?;
    let w1 = histories::dts_word(d_next, Side::Right)?;
    Ok(w1 <= w0)
}

/// Counts of tilings above `pi` by their decomposition: how many contain a
/// non-single tile and how many decompositions contain one.
pub fn nontrivial_counts(pi: &LatticeWord, a: usize, b: usize) -> Result<(usize, usize), DecompError> {
    let mut tilings_count = 0;
    let mut tuples = BTreeSet::new();
    for t in tilings::tilings_above(pi, a, b)? {
        let dec = decompose_tiling(&t)?;
        if t.has_nontrivial_tile() {
            tilings_count += 1;
        }
        if dec.has_nontrivial_tile() {
            let key: BTreeMap<(usize, usize), Vec<DyckTile>> = dec
                .cells
                .iter()
                .enumerate()
                .flat_map(|(j, row)| row.iter().enumerate().map(move |(i, c)| ((i, j), c.tiles.clone())))
                .collect();
            tuples.insert((dec.upper_grid().paths, key));
        }
    }
    Ok((tilings_count, tuples.len()))
}
