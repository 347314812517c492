//! Lattice words in `{N, E}` and rational Dyck paths.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("unexpected character {0:?} in word")]
    BadCharacter(char),
    #[error("bad exponent in {0:?}")]
    BadExponent(String),
    #[error("({0},{1}) is not a pair of coprime positive integers")]
    NotCoprime(usize, usize),
    #[error("{0} is not an ({1},{2})-Dyck path")]
    NotDyck(String, usize, usize),
    #[error("{0} has no ({1},{2}) frame")]
    Unframed(String, usize, usize),
    #[error("{0} and {1} have different letter counts")]
    IncomparableCounts(String, String),
    #[error("({0},{1}) is not an admissible pair of {2}")]
    PairNotAdmissible(usize, usize, String),
    #[error("invalid step sequence {0:?}")]
    BadSequence(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// A box of the plane, named by its lower-left lattice corner.
pub type Cell = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWord {
    steps: Vec<Step>,
}

impl LatticeWord {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticeWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn n_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn e_count(&self) -> usize {
        self.len() - self.n_count()
    }

    /// The `n` with `#N = a n` and `#E = b n`, if any.
    pub fn frame(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.n_count() / a;
        (self.n_count() == a * n && self.e_count() == b * n).then_some(n)
    }

    /// Exponent shorthand such as `NEN^2E^3NE^2`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.steps.len() {
            let s = self.steps[i];
            let mut j = i;
            while j < self.steps.len() && self.steps[j] == s {
                j += 1;
            }
            out.push(s.letter());
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }

    /// Word with the steps in `range` removed.
    pub fn without(&self, range: std::ops::Range<usize>) -> LatticeWord {
        let mut steps = self.steps[..range.start].to_vec();
        steps.extend_from_slice(&self.steps[range.end..]);
        LatticeWord::new(steps)
    }

    pub fn concat(parts: &[&[Step]]) -> LatticeWord {
        LatticeWord::new(parts.concat())
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for LatticeWord {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for LatticeWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

/// Parse a word, expanding `^k` exponents and ignoring whitespace.
pub fn parse_word(text: &str) -> Result<LatticeWord, PathError> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut steps = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let step = match chars[i] {
            'N' | 'n' => Step::N,
            'E' | 'e' => Step::E,
            c => return Err(PathError::BadCharacter(c)),
        };
        i += 1;
        let mut reps = 1;
        if i < chars.len() && chars[i] == '^' {
            let start = i + 1;
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            let digits: String = chars[start..end].iter().collect();
            reps = digits.parse().map_err(|_| PathError::BadExponent(text.to_string()))?;
            i = end;
        }
        steps.extend(std::iter::repeat_n(step, reps));
    }
    Ok(LatticeWord::new(steps))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn check_coprime(a: usize, b: usize) -> Result<(), PathError> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return Err(PathError::NotCoprime(a, b));
    }
    Ok(())
}

/// Prefix condition `b y >= a x` everywhere. Only the letter sequence is
/// inspected, so non-framed words may also be tested.
pub fn stays_above(w: &LatticeWord, a: usize, b: usize) -> bool {
    let (mut x, mut y) = (0usize, 0usize);
    for &s in w.steps() {
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
        }
        if b * y < a * x {
            return false;
        }
    }
    true
}

pub fn is_dyck(w: &LatticeWord, a: usize, b: usize) -> Result<bool, PathError> {
    check_coprime(a, b)?;
    if w.frame(a, b).is_none() {
        return Err(PathError::Unframed(w.to_string(), a, b));
    }
    Ok(stays_above(w, a, b))
}

fn require_dyck(w: &LatticeWord, a: usize, b: usize) -> Result<usize, PathError> {
    if !is_dyck(w, a, b)? {
        return Err(PathError::NotDyck(w.to_string(), a, b));
    }
    Ok(w.frame(a, b).unwrap_or(0))
}

/// x-coordinates of the N steps, in order. Defined for any word.
pub fn u_seq(w: &LatticeWord) -> Vec<usize> {
    let mut x = 0;
    let mut out = Vec::new();
    for &s in w.steps() {
        match s {
            Step::N => out.push(x),
            Step::E => x += 1,
        }
    }
    out
}

/// y-coordinates of the E steps, in order. Defined for any word.
pub fn h_seq(w: &LatticeWord) -> Vec<usize> {
    let mut y = 0;
    let mut out = Vec::new();
    for &s in w.steps() {
        match s {
            Step::N => y += 1,
            Step::E => out.push(y),
        }
    }
    out
}

pub fn step_sequence(w: &LatticeWord, a: usize, b: usize) -> Result<Vec<usize>, PathError> {
    require_dyck(w, a, b)?;
    Ok(u_seq(w))
}

pub fn height_sequence(w: &LatticeWord, a: usize, b: usize) -> Result<Vec<usize>, PathError> {
    require_dyck(w, a, b)?;
    Ok(h_seq(w))
}

/// Word whose N steps sit at x-coordinates `u`, ending with `e_count` E steps in total.
pub fn from_step_sequence(u: &[usize], e_count: usize) -> Result<LatticeWord, PathError> {
    if u.windows(2).any(|p| p[0] > p[1]) || u.last().is_some_and(|&l| l > e_count) {
        return Err(PathError::BadSequence(u.to_vec()));
    }
    let mut steps = Vec::new();
    let mut x = 0;
    for &ui in u {
        while x < ui {
            steps.push(Step::E);
            x += 1;
        }
        steps.push(Step::N);
    }
    steps.extend(std::iter::repeat_n(Step::E, e_count - x));
    Ok(LatticeWord::new(steps))
}

/// Word whose E steps sit at y-coordinates `h`, with `n_count` N steps in total.
pub fn from_height_sequence(h: &[usize], n_count: usize) -> Result<LatticeWord, PathError> {
    if h.windows(2).any(|p| p[0] > p[1]) || h.last().is_some_and(|&l| l > n_count) {
        return Err(PathError::BadSequence(h.to_vec()));
    }
    let mut steps = Vec::new();
    let mut y = 0;
    for &hi in h {
        while y < hi {
            steps.push(Step::N);
            y += 1;
        }
        steps.push(Step::E);
    }
    steps.extend(std::iter::repeat_n(Step::N, n_count - y));
    Ok(LatticeWord::new(steps))
}

/// Replace every N by `N^a` and every E by `E^b`.
pub fn enlarge(p: &LatticeWord, a: usize, b: usize) -> Result<LatticeWord, PathError> {
    require_dyck(p, 1, 1)?;
    Ok(enlarge_unchecked(p, a, b))
}

pub(crate) fn enlarge_unchecked(p: &LatticeWord, a: usize, b: usize) -> LatticeWord {
    let mut steps = Vec::new();
    for &s in p.steps() {
        let k = if s == Step::N { a } else { b };
        steps.extend(std::iter::repeat_n(s, k));
    }
    LatticeWord::new(steps)
}

/// The size `n` when `w = p^{(a,b)}` for a `(1,1)`-Dyck path `p` of size `n`.
pub fn enlarged_size(w: &[Step], a: usize, b: usize) -> Option<usize> {
    let mut i = 0;
    let mut height = 0i64;
    let mut n = 0;
    while i < w.len() {
        let s = w[i];
        let k = if s == Step::N { a } else { b };
        if i + k > w.len() || w[i..i + k].iter().any(|&t| t != s) {
            return None;
        }
        i += k;
        if s == Step::N {
            height += 1;
            n += 1;
        } else {
            height -= 1;
            if height < 0 {
                return None;
            }
        }
    }
    (height == 0).then_some(n)
}

/// Young diagram of `w`: the boxes left of the path, below the line `y = #N`.
pub fn young_boxes(w: &LatticeWord) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for (k, &x) in u_seq(w).iter().enumerate() {
        for i in 0..x {
            out.insert((i as i32, k as i32));
        }
    }
    out
}

pub fn young_size(w: &LatticeWord) -> usize {
    u_seq(w).iter().sum()
}

/// `lam <= mu`: `mu` lies weakly above `lam`, so the diagram of `lam` contains that of `mu`.
pub fn path_leq(lam: &LatticeWord, mu: &LatticeWord) -> Result<bool, PathError> {
    if lam.n_count() != mu.n_count() || lam.e_count() != mu.e_count() {
        return Err(PathError::IncomparableCounts(lam.to_string(), mu.to_string()));
    }
    Ok(u_seq(mu).iter().zip(u_seq(lam)).all(|(m, l)| *m <= l))
}

/// Skew region between `lam` (below) and `mu` (above).
pub fn skew_region(lam: &LatticeWord, mu: &LatticeWord) -> Result<BTreeSet<Cell>, PathError> {
    if !path_leq(lam, mu)? {
        return Err(PathError::IncomparableCounts(lam.to_string(), mu.to_string()));
    }
    let top = young_boxes(mu);
    Ok(young_boxes(lam).difference(&top).copied().collect())
}

/// All words with the given letter counts, lexicographic with N < E.
pub fn all_words(n_count: usize, e_count: usize) -> Vec<LatticeWord> {
    fn rec(n: usize, e: usize, acc: &mut Vec<Step>, out: &mut Vec<LatticeWord>) {
        if n == 0 && e == 0 {
            out.push(LatticeWord::new(acc.clone()));
            return;
        }
        for (s, left) in [(Step::N, n), (Step::E, e)] {
            if left > 0 {
                acc.push(s);
                if s == Step::N { rec(n - 1, e, acc, out) } else { rec(n, e - 1, acc, out) }
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n_count, e_count, &mut Vec::new(), &mut out);
    out
}

/// All `(a,b)`-Dyck paths of size `n`, lexicographic with N < E.
pub fn dyck_paths(a: usize, b: usize, n: usize) -> Result<Vec<LatticeWord>, PathError> {
    check_coprime(a, b)?;
    fn rec(a: usize, b: usize, nl: usize, el: usize, x: usize, y: usize, acc: &mut Vec<Step>, out: &mut Vec<LatticeWord>) {
        if nl == 0 && el == 0 {
            out.push(LatticeWord::new(acc.clone()));
            return;
        }
        if nl > 0 {
            acc.push(Step::N);
            rec(a, b, nl - 1, el, x, y + 1, acc, out);
            acc.pop();
        }
        if el > 0 && b * y >= a * (x + 1) {
            acc.push(Step::E);
            rec(a, b, nl, el - 1, x + 1, y, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, a * n, b * n, 0, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The highest path `N^{an} E^{bn}`.
pub fn top_path(a: usize, b: usize, n: usize) -> LatticeWord {
    let mut steps = vec![Step::N; a * n];
    steps.extend(vec![Step::E; b * n]);
    LatticeWord::new(steps)
}

/// Dyck paths weakly above `lam`, lexicographic with N < E.
pub fn paths_above(lam: &LatticeWord, a: usize, b: usize) -> Result<Vec<LatticeWord>, PathError> {
    require_dyck(lam, a, b)?;
    let cap = u_seq(lam);
    let e_count = lam.e_count();
    fn rec(k: usize, lo: usize, cap: &[usize], a: usize, b: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cap.len() {
            out.push(acc.clone());
            return;
        }
        let hi = cap[k].min(b * k / a);
        for v in lo..=hi {
            acc.push(v);
            rec(k + 1, v, cap, a, b, acc, out);
            acc.pop();
        }
    }
    let mut seqs = Vec::new();
    rec(0, 0, &cap, a, b, &mut Vec::new(), &mut seqs);
    let mut out: Vec<LatticeWord> = seqs
        .iter()
        .map(|u| from_step_sequence(u, e_count).expect("bounded sequence"))
        .collect();
    out.sort();
    Ok(out)
}

/// A pair of positions (0-based) holding an N and a later E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AdmissiblePair {
    pub i: usize,
    pub j: usize,
}

/// Pairs each N with the first later E whose interior is an enlarged Dyck path.
pub fn admissible_pairs(w: &LatticeWord, a: usize, b: usize) -> Vec<AdmissiblePair> {
    let s = w.steps();
    let mut out = Vec::new();
    for i in 0..s.len() {
        if s[i] != Step::N {
            continue;
        }
        if let Some(j) = (i + 1..s.len()).find(|&j| s[j] == Step::E && enlarged_size(&s[i + 1..j], a, b).is_some()) {
            out.push(AdmissiblePair { i, j });
        }
    }
    out
}

pub fn ne_flip(w: &LatticeWord, pair: AdmissiblePair, a: usize, b: usize) -> Result<LatticeWord, PathError> {
    if !admissible_pairs(w, a, b).contains(&pair) {
        return Err(PathError::PairNotAdmissible(pair.i + 1, pair.j + 1, w.to_string()));
    }
    Ok(flip_all(w, &[pair]))
}

pub(crate) fn flip_all(w: &LatticeWord, pairs: &[AdmissiblePair]) -> LatticeWord {
    let mut steps = w.steps().to_vec();
    for p in pairs {
        steps.swap(p.i, p.j);
    }
    LatticeWord::new(steps)
}

/// Every increasing selection of admissible pairs of `source` whose flips produce `target`.
pub fn flip_chains(source: &LatticeWord, target: &LatticeWord, a: usize, b: usize) -> Vec<Vec<AdmissiblePair>> {
    let pairs = admissible_pairs(source, a, b);
    let mut out = Vec::new();
    if source.len() != target.len() {
        return out;
    }
    // Each pair is flipped exactly when the target disagrees with the source there.
    let mut chosen = Vec::new();
    for p in &pairs {
        let differs = target.steps()[p.i] != source.steps()[p.i];
        if differs {
            chosen.push(*p);
        }
    }
    if flip_all(source, &chosen) == *target {
        out.push(chosen);
    }
    out
}
