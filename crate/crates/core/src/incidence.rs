//! Incidence matrices built from NE-flips, and their comparison with tiling enumeration.

use std::fmt;

use thiserror::Error;

use crate::paths::{self, LatticeWord, PathError};
use crate::qpoly::{QPoly, QPolyError, QPolyMatrix};
use crate::tilings::{self, Statistic, TilingError, Variant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IncidenceError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    QPoly(#[from] QPolyError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Each flip weighs `-q`.
    I,
    /// A flip whose interior holds `n_E` east steps weighs `-q^{n_E + 1}`.
    II,
}

impl WeightKind {
    pub fn statistic(self) -> Statistic {
        match self {
            WeightKind::I => Statistic::Tiles,
            WeightKind::II => Statistic::Art,
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightKind::I => "I",
            WeightKind::II => "II",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncidenceSpec {
    pub a: usize,
    pub b: usize,
    pub n_count: usize,
    pub e_count: usize,
    pub kind: WeightKind,
}

impl IncidenceSpec {
    pub fn new(a: usize, b: usize, n_count: usize, e_count: usize, kind: WeightKind) -> Self {
        IncidenceSpec { a, b, n_count, e_count, kind }
    }

    pub fn basis(&self) -> Vec<LatticeWord> {
        paths::all_words(self.n_count, self.e_count)
    }
}

/// Weight of flipping the pairs of a chain, all taken in the source word.
fn chain_weight(source: &LatticeWord, chain: &[paths::AdmissiblePair], kind: WeightKind) -> QPoly {
    chain.iter().fold(QPoly::one(), |acc, p| {
        let k = match kind {
            WeightKind::I => 1,
            WeightKind::II => {
                source.steps()[p.i + 1..p.j].iter().filter(|&&s| s == paths::Step::E).count() + 1
            }
        };
        &acc * &QPoly::monomial(k, -1)
    })
}

/// `M` (kind I) or `N` (kind II): entry `(target, source)` sums the weights
/// of flip chains from `source` to `target`.
pub fn build_matrix(spec: &IncidenceSpec) -> Result<QPolyMatrix, IncidenceError> {
    paths::check_coprime(spec.a, spec.b)?;
    let basis = spec.basis();
    let labels = basis.iter().map(|w| w.to_string()).collect();
    let mut m = QPolyMatrix::zeros(labels);
    for (col, source) in basis.iter().enumerate() {
        let pairs = paths::admissible_pairs(source, spec.a, spec.b);
        for mask in 0u64..(1 << pairs.len()) {
            let chain: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| *p)
                .collect();
            let target = paths::flip_all(source, &chain);
            let row = basis.iter().position(|w| *w == target).expect("flips keep letter counts");
            m.entries[row][col] = &m.entries[row][col] + &chain_weight(source, &chain, spec.kind);
        }
    }
    Ok(m)
}

/// Basis indices sorted so that flips only ever move down the list.
pub fn flip_order(m: &QPolyMatrix) -> Result<Vec<usize>, IncidenceError> {
    let mut order: Vec<usize> = (0..m.dim()).collect();
    let sizes: Vec<usize> = m
        .basis
        .iter()
        .map(|w| paths::parse_word(w).map(|w| paths::young_size(&w)))
        .collect::<Result<_, _>>()?;
    order.sort_by_key(|&i| (sizes[i], i));
    Ok(order)
}

pub fn invert_incidence(m: &QPolyMatrix) -> Result<QPolyMatrix, IncidenceError> {
    Ok(m.invert_unitriangular(&flip_order(m)?)?)
}

/// A disagreement between a matrix entry and the corresponding enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub matrix: &'static str,
    pub row: String,
    pub col: String,
    pub expected: QPoly,
    pub found: QPoly,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub entries_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare every entry of the matrix against signed cover-exclusive
/// enumeration, and every entry of its inverse against cover-inclusive
/// enumeration, in the statistic belonging to the weight kind.
pub fn verify_inverse_vs_enumeration(spec: &IncidenceSpec) -> Result<VerifyReport, IncidenceError> {
    let m = build_matrix(spec)?;
    let inv = invert_incidence(&m)?;
    let basis = spec.basis();
    let stat = spec.kind.statistic();
    let (name, inv_name) = match spec.kind {
        WeightKind::I => ("M", "M^-1"),
        WeightKind::II => ("N", "N^-1"),
    };
    let mut report = VerifyReport::default();
    for (r, lower) in basis.iter().enumerate() {
        for (c, upper) in basis.iter().enumerate() {
            let comparable = paths::path_leq(lower, upper)?;
            let (exc, inc) = if comparable {
                (
                    tilings::generating_function(lower, upper, spec.a, spec.b, Variant::Exclusive, stat, true)?,
                    tilings::generating_function(lower, upper, spec.a, spec.b, Variant::Inclusive, stat, false)?,
                )
            } else {
                (QPoly::zero(), QPoly::zero())
            };
            for (mname, mat, enumerated) in [(name, &m, exc), (inv_name, &inv, inc)] {
                report.entries_checked += 1;
                if mat.entries[r][c] != enumerated {
                    report.mismatches.push(Mismatch {
                        matrix: mname,
                        row: lower.to_string(),
                        col: upper.to_string(),
                        expected: enumerated,
                        found: mat.entries[r][c].clone(),
                    });
                }
            }
        }
    }
    Ok(report)
}
