//! Rational Dyck tiles, tilings of skew regions and their generating functions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::paths::{self, Cell, LatticeWord, PathError, Step};
use crate::qpoly::QPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("{lower} is not below {upper}")]
    NotComparable { lower: String, upper: String },
    #[error("boxes {0:?} do not form an ({1},{2})-Dyck tile")]
    BadTile(Vec<Cell>, usize, usize),
    #[error("tiles do not partition the region")]
    NotAPartition,
    #[error("tiling is not cover-inclusive")]
    NotInclusive,
    #[error("tiling is not cover-exclusive")]
    NotExclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Inclusive,
    Exclusive,
    Unconstrained,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Inclusive => "inclusive",
            Variant::Exclusive => "exclusive",
            Variant::Unconstrained => "unconstrained",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Tiles,
    Area,
    /// `b n + 1`
    Art,
    /// `a n + 1`, the reflected convention.
    ArtAlt,
}

/// A ribbon whose box sequence, read from its south-west end, moves by
/// `N^a` and `E^b` blocks of a `(1,1)`-Dyck path of length `2 size`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckTile {
    pub size: usize,
    pub boxes: Vec<Cell>,
}

impl DyckTile {
    pub fn single(c: Cell) -> Self {
        DyckTile { size: 0, boxes: vec![c] }
    }

    pub fn from_boxes(boxes: Vec<Cell>, a: usize, b: usize) -> Result<Self, TilingError> {
        let bad = || TilingError::BadTile(boxes.clone(), a, b);
        if boxes.is_empty() {
            return Err(bad());
        }
        let mut steps = Vec::new();
        for w in boxes.windows(2) {
            match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
                (0, 1) => steps.push(Step::N),
                (1, 0) => steps.push(Step::E),
                _ => return Err(bad()),
            }
        }
        let size = paths::enlarged_size(&steps, a, b).ok_or_else(bad)?;
        Ok(DyckTile { size, boxes })
    }

    pub fn first(&self) -> Cell {
        self.boxes[0]
    }

    pub fn last(&self) -> Cell {
        *self.boxes.last().expect("tiles are nonempty")
    }

    pub fn is_single(&self) -> bool {
        self.size == 0
    }

    pub fn stat(&self, stat: Statistic, a: usize, b: usize) -> usize {
        match stat {
            Statistic::Tiles => 1,
            Statistic::Area => (a + b) * self.size + 1,
            Statistic::Art => b * self.size + 1,
            Statistic::ArtAlt => a * self.size + 1,
        }
    }

    /// Box path read as a word of N and E moves.
    pub fn shape(&self) -> LatticeWord {
        LatticeWord::new(
            self.boxes
                .windows(2)
                .map(|w| if w[1].1 > w[0].1 { Step::N } else { Step::E })
                .collect(),
        )
    }
}

/// `(tiles, area, art)` of a tile.
pub fn tile_stats(d: &DyckTile, a: usize, b: usize) -> (usize, usize, usize) {
    (1, d.stat(Statistic::Area, a, b), d.stat(Statistic::Art, a, b))
}

/// Box offsets of every tile shape of size at most `max_size`.
pub fn tile_shapes(a: usize, b: usize, max_size: usize) -> Vec<(usize, Vec<Cell>)> {
    let mut out = Vec::new();
    for s in 0..=max_size {
        for p in paths::dyck_paths(1, 1, s).expect("(1,1) is coprime") {
            let mut cells = vec![(0, 0)];
            let (mut x, mut y) = (0, 0);
            for st in paths::enlarge_unchecked(&p, a, b).steps() {
                match st {
                    Step::N => y += 1,
                    Step::E => x += 1,
                }
                cells.push((x, y));
            }
            out.push((s, cells));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub a: usize,
    pub b: usize,
    pub lower: LatticeWord,
    pub upper: LatticeWord,
    /// Sorted by first box.
    pub tiles: Vec<DyckTile>,
    pub variant: Variant,
}

#[derive(Serialize, Deserialize)]
struct TilingJson {
    a: usize,
    b: usize,
    lower: LatticeWord,
    upper: LatticeWord,
    tiles: Vec<Vec<[i32; 2]>>,
    variant: Variant,
    weight: usize,
}

impl Tiling {
    pub fn new(
        a: usize,
        b: usize,
        lower: LatticeWord,
        upper: LatticeWord,
        mut tiles: Vec<DyckTile>,
        variant: Variant,
    ) -> Self {
        tiles.sort();
        Tiling { a, b, lower, upper, tiles, variant }
    }

    /// Check shapes, the partition of the region, and the variant condition.
    pub fn validate(&self) -> Result<(), TilingError> {
        let region = region_of(&self.lower, &self.upper)?;
        let mut seen = BTreeSet::new();
        for t in &self.tiles {
            let again = DyckTile::from_boxes(t.boxes.clone(), self.a, self.b)?;
            if again.size != t.size {
                return Err(TilingError::BadTile(t.boxes.clone(), self.a, self.b));
            }
            for c in &t.boxes {
                if !region.contains(c) || !seen.insert(*c) {
                    return Err(TilingError::NotAPartition);
                }
            }
        }
        if seen.len() != region.len() {
            return Err(TilingError::NotAPartition);
        }
        match self.variant {
            Variant::Inclusive if !is_cover_inclusive(&self.tiles, &region) => Err(TilingError::NotInclusive),
            Variant::Exclusive if !is_cover_exclusive(&self.tiles, &region) => Err(TilingError::NotExclusive),
            _ => Ok(()),
        }
    }

    pub fn statistic(&self, stat: Statistic) -> usize {
        self.tiles.iter().map(|t| t.stat(stat, self.a, self.b)).sum()
    }

    /// Sum of art over all tiles.
    pub fn weight(&self) -> usize {
        self.statistic(Statistic::Art)
    }

    pub fn has_nontrivial_tile(&self) -> bool {
        self.tiles.iter().any(|t| !t.is_single())
    }

    /// Tile containing each box.
    pub fn owners(&self) -> BTreeMap<Cell, usize> {
        let mut m = BTreeMap::new();
        for (i, t) in self.tiles.iter().enumerate() {
            for c in &t.boxes {
                m.insert(*c, i);
            }
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TilingJson {
            a: self.a,
            b: self.b,
            lower: self.lower.clone(),
            upper: self.upper.clone(),
            tiles: self
                .tiles
                .iter()
                .map(|t| t.boxes.iter().map(|&(x, y)| [2 * x + 1, 2 * y + 1]).collect())
                .collect(),
            variant: self.variant,
            weight: self.weight(),
        })
        .expect("tiling serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Tiling, String> {
        let j: TilingJson = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let mut tiles = Vec::new();
        for t in j.tiles {
            let boxes = t.iter().map(|&[x, y]| ((x - 1) / 2, (y - 1) / 2)).collect();
            tiles.push(DyckTile::from_boxes(boxes, j.a, j.b).map_err(|e| e.to_string())?);
        }
        let t = Tiling::new(j.a, j.b, j.lower, j.upper, tiles, j.variant);
        t.validate().map_err(|e| e.to_string())?;
        Ok(t)
    }
}

pub fn region_of(lower: &LatticeWord, upper: &LatticeWord) -> Result<BTreeSet<Cell>, TilingError> {
    if !paths::path_leq(lower, upper)? {
        return Err(TilingError::NotComparable { lower: lower.to_string(), upper: upper.to_string() });
    }
    Ok(paths::skew_region(lower, upper)?)
}

fn owner_map(tiles: &[DyckTile]) -> BTreeMap<Cell, usize> {
    let mut m = BTreeMap::new();
    for (i, t) in tiles.iter().enumerate() {
        for c in &t.boxes {
            m.insert(*c, i);
        }
    }
    m
}

/// Condition (I): each tile moved by `(1,-1)` lies wholly inside a single
/// other tile or wholly below the lower path.
pub fn is_cover_inclusive(tiles: &[DyckTile], region: &BTreeSet<Cell>) -> bool {
    let owner = owner_map(tiles);
    tiles.iter().enumerate().all(|(i, t)| {
        let hosts: Vec<Option<usize>> = t
            .boxes
            .iter()
            .map(|&(x, y)| region.get(&(x + 1, y - 1)).map(|s| owner[s]))
            .collect();
        match hosts[0] {
            None => hosts.iter().all(Option::is_none),
            Some(h) => h != i && hosts.iter().all(|&o| o == Some(h)),
        }
    })
}

/// Condition (II): whenever a box of `d1` is N, W or NW of a box of `d2`,
/// every N, W and NW neighbour of `d2` belongs to `d1` or `d2`.
pub fn is_cover_exclusive(tiles: &[DyckTile], region: &BTreeSet<Cell>) -> bool {
    let owner = owner_map(tiles);
    let neighbours = |t: &DyckTile| -> Vec<Cell> {
        t.boxes
            .iter()
            .flat_map(|&(x, y)| [(x, y + 1), (x - 1, y), (x - 1, y + 1)])
            .filter(|c| !t.boxes.contains(c))
            .collect()
    };
    for (j, d2) in tiles.iter().enumerate() {
        let around = neighbours(d2);
        let touching: BTreeSet<usize> = around
            .iter()
            .filter(|c| region.contains(c))
            .map(|c| owner[c])
            .filter(|&i| i != j)
            .collect();
        for &i in &touching {
            let ok = around.iter().all(|c| region.contains(c) && (owner[c] == i || owner[c] == j));
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every tiling of the region by `(a,b)`-Dyck tiles.
pub fn tilings_of_region(region: &BTreeSet<Cell>, a: usize, b: usize) -> Vec<Vec<DyckTile>> {
    let max_size = region.len().saturating_sub(1) / (a + b);
    let shapes = tile_shapes(a, b, max_size);
    let mut out = Vec::new();
    fn rec(
        rem: &mut BTreeSet<Cell>,
        shapes: &[(usize, Vec<Cell>)],
        acc: &mut Vec<DyckTile>,
        out: &mut Vec<Vec<DyckTile>>,
    ) {
        let Some(&first) = rem.iter().min_by_key(|&&(x, y)| (x + y, x)) else {
            let mut t = acc.clone();
            t.sort();
            out.push(t);
            return;
        };
        for (size, offs) in shapes {
            let boxes: Vec<Cell> = offs.iter().map(|&(dx, dy)| (first.0 + dx, first.1 + dy)).collect();
            if boxes.iter().all(|c| rem.contains(c)) {
                for c in &boxes {
                    rem.remove(c);
                }
                acc.push(DyckTile { size: *size, boxes: boxes.clone() });
                rec(rem, shapes, acc, out);
                acc.pop();
                rem.extend(boxes);
            }
        }
    }
    rec(&mut region.clone(), &shapes, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All tilings of `lower / upper` of the given variant, in canonical order.
pub fn enumerate_tilings(
    lower: &LatticeWord,
    upper: &LatticeWord,
    a: usize,
    b: usize,
    variant: Variant,
) -> Result<Vec<Tiling>, TilingError> {
    paths::check_coprime(a, b)?;
    let region = region_of(lower, upper)?;
    Ok(tilings_of_region(&region, a, b)
        .into_iter()
        .filter(|t| match variant {
            Variant::Inclusive => is_cover_inclusive(t, &region),
            Variant::Exclusive => is_cover_exclusive(t, &region),
            Variant::Unconstrained => true,
        })
        .map(|t| Tiling::new(a, b, lower.clone(), upper.clone(), t, variant))
        .collect())
}

/// `sum q^{stat}` over the tilings of `lower / upper`; with `signed`, each
/// tiling also carries `(-1)^{#tiles}`.
pub fn generating_function(
    lower: &LatticeWord,
    upper: &LatticeWord,
    a: usize,
    b: usize,
    variant: Variant,
    stat: Statistic,
    signed: bool,
) -> Result<QPoly, TilingError> {
    Ok(enumerate_tilings(lower, upper, a, b, variant)?
        .iter()
        .map(|t| {
            let sign = if signed && t.tiles.len() % 2 == 1 { -1 } else { 1 };
            QPoly::monomial(t.statistic(stat), sign)
        })
        .sum())
}

/// All cover-inclusive tilings above `lam`, over every upper path.
pub fn tilings_above(lam: &LatticeWord, a: usize, b: usize) -> Result<Vec<Tiling>, TilingError> {
    let mut out = Vec::new();
    for mu in paths::paths_above(lam, a, b)? {
        out.extend(enumerate_tilings(lam, &mu, a, b, Variant::Inclusive)?);
    }
    Ok(out)
}

/// `sum q^{wt}` over cover-inclusive tilings above `lam`.
pub fn zeta(lam: &LatticeWord, a: usize, b: usize, stat: Statistic) -> Result<QPoly, TilingError> {
    Ok(tilings_above(lam, a, b)?.iter().map(|t| QPoly::monomial(t.statistic(stat), 1)).sum())
}
