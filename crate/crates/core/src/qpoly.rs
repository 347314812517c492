//! Integer polynomials in `q` and square matrices over them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QPolyError {
    #[error("matrix is not unitriangular in the requested order (entry {row},{col})")]
    NotUnitriangular { row: usize, col: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("order is not a permutation of 0..{0}")]
    BadOrder(usize),
}

/// Dense coefficients, `coeffs[k]` multiplies `q^k`. No trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// `c * q^k`
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn to_latex(&self) -> String {
        self.render(|k| format!("q^{{{k}}}"))
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.unsigned_abs();
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => power(k),
            };
            let body = match (mag, k) {
                (_, 0) => mag.to_string(),
                (1, _) => var,
                _ => format!("{mag}{var}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("q^{k}")))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial {0:?}")]
pub struct ParseQPolyError(pub String);

/// Parses sums of signed terms `c`, `cq`, `cq^k`, as printed by `Display`.
impl std::str::FromStr for QPoly {
    type Err = ParseQPolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseQPolyError(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        let mut acc = QPoly::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let (coef, power) = match body.find('q') {
                None => (body, 0),
                Some(k) => {
                    let rest = &body[k + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|r| r.parse().ok()).ok_or_else(err)?
                    };
                    (&body[..k], power)
                }
            };
            let c: i64 = if coef.is_empty() && power > 0 { 1 } else { coef.parse().map_err(|_| err())? };
            acc = &acc + &QPoly::monomial(power, sign * c);
        }
        Ok(acc)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            for (j, &y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        QPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

pub fn qpoly_add(p: &QPoly, r: &QPoly) -> QPoly {
    p + r
}

pub fn qpoly_mul(p: &QPoly, r: &QPoly) -> QPoly {
    p * r
}

/// Square matrix over `Z[q]` whose rows and columns are labelled by words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolyMatrix {
    pub basis: Vec<String>,
    pub entries: Vec<Vec<QPoly>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    basis: Vec<String>,
    entries: Vec<Vec<Vec<i64>>>,
}

impl QPolyMatrix {
    pub fn zeros(basis: Vec<String>) -> Self {
        let n = basis.len();
        QPolyMatrix { basis, entries: vec![vec![QPoly::zero(); n]; n] }
    }

    pub fn identity(basis: Vec<String>) -> Self {
        let mut m = Self::zeros(basis);
        for i in 0..m.dim() {
            m.entries[i][i] = QPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &QPoly {
        &self.entries[row][col]
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.basis.iter().position(|w| w == word)
    }

    /// Entry addressed by row and column labels.
    pub fn entry(&self, row: &str, col: &str) -> Option<&QPoly> {
        Some(self.get(self.index_of(row)?, self.index_of(col)?))
    }

    pub fn mul(&self, rhs: &QPolyMatrix) -> Result<QPolyMatrix, QPolyError> {
        if self.dim() != rhs.dim() {
            return Err(QPolyError::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let n = self.dim();
        let mut out = QPolyMatrix::zeros(self.basis.clone());
        for i in 0..n {
            for j in 0..n {
                out.entries[i][j] = (0..n).map(|k| &self.entries[i][k] * &rhs.entries[k][j]).sum();
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let e = &self.entries[i][j];
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }

    /// Inverse of a matrix that is lower unitriangular once rows and columns
    /// are both listed in `order`.
    pub fn invert_unitriangular(&self, order: &[usize]) -> Result<QPolyMatrix, QPolyError> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(QPolyError::BadOrder(n));
        }
        for (a, &i) in order.iter().enumerate() {
            if !self.entries[i][i].is_one() {
                return Err(QPolyError::NotUnitriangular { row: i, col: i });
            }
            for &j in &order[a + 1..] {
                if !self.entries[i][j].is_zero() {
                    return Err(QPolyError::NotUnitriangular { row: i, col: j });
                }
            }
        }
        // Forward substitution, one column of the inverse at a time.
        let mut inv = QPolyMatrix::zeros(self.basis.clone());
        for (cpos, &c) in order.iter().enumerate() {
            inv.entries[c][c] = QPoly::one();
            for (rpos, &r) in order.iter().enumerate().skip(cpos + 1) {
                let acc: QPoly = order[cpos..rpos]
                    .iter()
                    .map(|&k| &self.entries[r][k] * &inv.entries[k][c])
                    .sum();
                inv.entries[r][c] = -acc;
            }
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson {
            basis: self.basis.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.coeffs().to_vec()).collect())
                .collect(),
        })
        .expect("matrix serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<QPolyMatrix, serde_json::Error> {
        let m: MatrixJson = serde_json::from_value(v.clone())?;
        Ok(QPolyMatrix {
            basis: m.basis,
            entries: m
                .entries
                .into_iter()
                .map(|row| row.into_iter().map(QPoly::new).collect())
                .collect(),
        })
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{pmatrix}\n");
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|p| p.to_latex()).collect();
            s.push_str(&cells.join(" & "));
            s.push_str(" \\\\\n");
        }
        s.push_str("\\end{pmatrix}");
        s
    }

    pub fn to_plain(&self) -> String {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|p| p.to_string().len())
            .chain(self.basis.iter().map(|b| b.len()))
            .max()
            .unwrap_or(1);
        let label = self.basis.iter().map(|b| b.len()).max().unwrap_or(0);
        let mut s = format!("{:label$} ", "");
        for b in &self.basis {
            s.push_str(&format!(" {b:>width$}"));
        }
        s.push('\n');
        for (b, row) in self.basis.iter().zip(&self.entries) {
            s.push_str(&format!("{b:label$} "));
            for p in row {
                s.push_str(&format!(" {:>width$}", p.to_string()));
            }
            s.push('\n');
        }
        s
    }
}
