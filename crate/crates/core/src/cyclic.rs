//! Total cyclic orders on `{0,…,n}` stored as words starting at `0`, the
//! chain classes `A_{I,n}` and the cyclic descent classes `Ã_s`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::error::{domain, Result};
use crate::poly::IntPolynomial;

/// A total cyclic order on `{0,…,n}`, read clockwise starting from `0`.
///
/// `(x, y, z)` belongs to the order iff `y` is met before `z` when turning
/// clockwise from `x`. Positions are cached so triple queries are O(1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<usize>,
    pos: Vec<usize>,
}

impl CyclicWord {
    /// Builds a word from its letters. They must be a permutation of
    /// `{0,…,n}` with `letters[0] == 0`.
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.first() != Some(&0) {
            return Err(domain!("cyclic word must start with 0: {letters:?}"));
        }
        let m = letters.len();
        let mut pos = alloc::vec![usize::MAX; m];
        for (p, &x) in letters.iter().enumerate() {
            if x >= m || pos[x] != usize::MAX {
                return Err(domain!("not a permutation of 0..={}: {letters:?}", m - 1));
            }
            pos[x] = p;
        }
        Ok(Self { letters, pos })
    }

    /// The increasing word `(0,1,…,n)`.
    pub fn identity(n: usize) -> Self {
        let letters: Vec<usize> = (0..=n).collect();
        Self {
            pos: letters.clone(),
            letters,
        }
    }

    pub(crate) fn from_parts(letters: Vec<usize>, pos: Vec<usize>) -> Self {
        Self { letters, pos }
    }

    /// Largest element `n`; the order lives on `{0,…,n}`.
    pub fn n(&self) -> usize {
        self.letters.len() - 1
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.pos.get(x).copied()
    }

    /// Clockwise distance from `x` to `y`, in `0..=n`.
    #[inline]
    pub(crate) fn offset(&self, x: usize, y: usize) -> usize {
        offset(&self.pos, x, y)
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x > self.n() {
            return Err(domain!("element {x} outside 0..={}", self.n()));
        }
        Ok(())
    }

    pub fn contains_triple(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        for e in [x, y, z] {
            self.check_element(e)?;
        }
        if x == y || y == z || x == z {
            return Err(domain!("triple ({x},{y},{z}) has repeated elements"));
        }
        Ok(self.offset(x, y) < self.offset(x, z))
    }

    /// Whether `t` is a chain: walking clockwise from `t[0]` meets
    /// `t[1], t[2], …` in that order. Every pair of distinct elements is a chain.
    pub fn is_chain(&self, t: &[usize]) -> Result<bool> {
        if t.len() < 2 {
            return Err(domain!("a chain needs at least two elements"));
        }
        for (i, &a) in t.iter().enumerate() {
            self.check_element(a)?;
            if t[..i].contains(&a) {
                return Err(domain!("chain {t:?} repeats {a}"));
            }
        }
        Ok(t.windows(2)
            .skip(1)
            .all(|w| self.offset(t[0], w[0]) < self.offset(t[0], w[1])))
    }

    /// Number of positions `i` with `w_{i+1} < w_i`.
    pub fn descents(&self) -> usize {
        descents(&self.letters)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[inline]
fn offset(pos: &[usize], x: usize, y: usize) -> usize {
    let m = pos.len();
    (pos[y] + m - pos[x]) % m
}

pub(crate) fn descents(letters: &[usize]) -> usize {
    letters.windows(2).filter(|w| w[1] < w[0]).count()
}

/// `(i, i+1, …, j)` is a chain: the clockwise offsets from `i` increase.
#[inline]
fn run_is_chain(pos: &[usize], i: usize, j: usize) -> bool {
    let mut last = 0;
    for h in i + 1..=j {
        let o = offset(pos, i, h);
        if o <= last {
            return false;
        }
        last = o;
    }
    true
}

/// A set `I` of pairs `(i, j)` with `0 ≤ i < j ≤ n`, kept sorted and deduplicated.
///
/// Each pair asks for `(i, i+1, …, j)` to be a chain (on the order side) and
/// for `x_{i+1} + ⋯ + x_j ≤ 1` (on the polytope side).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainSet {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl ChainSet {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(domain!("chain sets need n >= 1"));
        }
        for &(i, j) in &pairs {
            if i >= j || j > n {
                return Err(domain!("pair ({i},{j}) violates 0 <= i < j <= {n}"));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self { n, pairs })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// The pairs `{(i, i+k)}` for `0 ≤ i ≤ n-k`, defining `Â_{k,n}` and `B̂_{k,n}`.
    pub fn hat(k: usize, n: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(domain!("hat family needs 1 <= k <= n, got k={k}, n={n}"));
        }
        Self::new(n, (0..=n - k).map(|i| (i, i + k)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Drops every pair nested inside another pair of the set. The result
    /// describes the same chain class and the same polytope.
    pub fn normalized(&self) -> Self {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&p| !self.pairs.iter().any(|&q| nested(p, q)))
            .collect();
        Self { n: self.n, pairs }
    }

    /// No pair is nested in another.
    pub fn is_antichain(&self) -> bool {
        self.pairs
            .iter()
            .all(|&p| !self.pairs.iter().any(|&q| nested(p, q)))
    }

    /// Every antichain of pairs for the given `n`, ordered by pair list.
    pub fn antichains(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(domain!("chain sets need n >= 1"));
        }
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        extend_antichains(&all, 0, &mut current, n, &mut out);
        out.sort();
        Ok(out)
    }

    pub fn contains_order(&self, w: &CyclicWord) -> bool {
        w.n() == self.n && self.pairs.iter().all(|&(i, j)| run_is_chain(&w.pos, i, j))
    }
}

fn extend_antichains(
    all: &[(usize, usize)],
    from: usize,
    current: &mut Vec<(usize, usize)>,
    n: usize,
    out: &mut Vec<ChainSet>,
) {
    out.push(ChainSet {
        n,
        pairs: current.clone(),
    });
    for idx in from..all.len() {
        let p = all[idx];
        if current.iter().any(|&q| nested(p, q) || nested(q, p)) {
            continue;
        }
        current.push(p);
        extend_antichains(all, idx + 1, current, n, out);
        current.pop();
    }
}

/// `p` lies inside `q` as an interval of coordinates, `p ≠ q`.
fn nested(p: (usize, usize), q: (usize, usize)) -> bool {
    p != q && q.0 <= p.0 && p.1 <= q.1
}

impl fmt::Display for ChainSet {
    /// The `i-j,i-j` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (i, j)) in self.pairs.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A word in `{+,-}^n` selecting a cyclic descent class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignWord(pub Vec<Sign>);

impl SignWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn all_plus(n: usize) -> Self {
        Self(alloc::vec![Sign::Plus; n])
    }

    /// All `2^n` words of length `n`, `+` before `-` lexicographically.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1usize << n)
            .map(|mask| {
                Self(
                    (0..n)
                        .map(|i| {
                            if mask >> (n - 1 - i) & 1 == 0 {
                                Sign::Plus
                            } else {
                                Sign::Minus
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Whether the order on `{0,…,len+1}` matches the pattern: `(i-1,i,i+1)`
    /// is a triple for `+` and `(i+1,i,i-1)` is a triple for `-`.
    pub fn contains_order(&self, w: &CyclicWord) -> bool {
        w.n() == self.len() + 1 && sign_pattern_holds(&self.0, &w.pos)
    }
}

fn sign_pattern_holds(signs: &[Sign], pos: &[usize]) -> bool {
    signs.iter().enumerate().all(|(idx, s)| {
        let i = idx + 1;
        let (a, c) = match s {
            Sign::Plus => (i - 1, i + 1),
            Sign::Minus => (i + 1, i - 1),
        };
        offset(pos, a, i) < offset(pos, a, c)
    })
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl core::str::FromStr for SignWord {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(domain!(
                    "sign word may only contain '+' and '-', found {other:?}"
                )),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignWord)
    }
}

/// In-place lexicographic walk over words with a fixed prefix.
struct Cursor {
    letters: Vec<usize>,
    pos: Vec<usize>,
    fixed: usize,
    started: bool,
}

impl Cursor {
    fn new(n: usize, prefix: &[usize]) -> Result<Self> {
        if prefix.first() != Some(&0) {
            return Err(domain!("word prefix must start with 0"));
        }
        let mut used = alloc::vec![false; n + 1];
        for &x in prefix {
            if x > n || used[x] {
                return Err(domain!("invalid word prefix {prefix:?} for n={n}"));
            }
            used[x] = true;
        }
        let mut letters = prefix.to_vec();
        letters.extend((0..=n).filter(|&x| !used[x]));
        let mut pos = alloc::vec![0; n + 1];
        for (p, &x) in letters.iter().enumerate() {
            pos[x] = p;
        }
        Ok(Self {
            letters,
            pos,
            fixed: prefix.len(),
            started: false,
        })
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let l = &mut self.letters;
        let len = l.len();
        if len < self.fixed + 2 {
            return false;
        }
        let mut i = len - 2;
        loop {
            if l[i] < l[i + 1] {
                break;
            }
            if i == self.fixed {
                return false;
            }
            i -= 1;
        }
        let mut j = len - 1;
        while l[j] <= l[i] {
            j -= 1;
        }
        l.swap(i, j);
        l[i + 1..].reverse();
        for p in i..len {
            self.pos[l[p]] = p;
        }
        true
    }
}

/// All total cyclic orders on `{0,…,n}` in lexicographic word order.
pub struct Orders {
    cursor: Cursor,
}

impl Orders {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(domain!("orders need n >= 1"));
        }
        Self::with_prefix(n, &[0])
    }

    /// Only the words beginning with `prefix` (which must start with `0`).
    /// Prefixes of equal length partition the orders.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self> {
        Ok(Self {
            cursor: Cursor::new(n, prefix)?,
        })
    }
}

impl Iterator for Orders {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        self.cursor
            .advance()
            .then(|| CyclicWord::from_parts(self.cursor.letters.clone(), self.cursor.pos.clone()))
    }
}

/// Descent tallies over the words with a given prefix satisfying `keep`.
fn tally_descents(
    n: usize,
    prefix: &[usize],
    mut keep: impl FnMut(&[usize]) -> bool,
) -> Result<Vec<u64>> {
    let mut cursor = Cursor::new(n, prefix)?;
    let mut tally = alloc::vec![0u64; n + 1];
    while cursor.advance() {
        if keep(&cursor.pos) {
            tally[descents(&cursor.letters)] += 1;
        }
    }
    Ok(tally)
}

pub fn tally_to_polynomial(tally: &[u64]) -> IntPolynomial {
    IntPolynomial::new(tally.iter().map(|&c| BigInt::from(c)).collect())
}

/// Descent tallies of the chain class restricted to words with `prefix`.
/// Summing over a partition of prefixes gives the full tally.
pub fn chain_class_tally(cs: &ChainSet, prefix: &[usize]) -> Result<Vec<u64>> {
    tally_descents(cs.n, prefix, |pos| {
        cs.pairs.iter().all(|&(i, j)| run_is_chain(pos, i, j))
    })
}

/// `#A_{I,n}`.
pub fn count_chain_class(cs: &ChainSet) -> BigUint {
    chain_class_descent_polynomial(cs)
        .eval_one()
        .to_biguint()
        .unwrap_or_default()
}

/// `Σ_{π ∈ A_{I,n}} z^{des(π)}`.
pub fn chain_class_descent_polynomial(cs: &ChainSet) -> IntPolynomial {
    let tally = chain_class_tally(cs, &[0]).expect("[0] is a valid prefix");
    tally_to_polynomial(&tally)
}

/// Descent tallies of `Ã_s` restricted to words with `prefix`; words live on `{0,…,len+1}`.
pub fn sign_class_tally(s: &SignWord, prefix: &[usize]) -> Result<Vec<u64>> {
    tally_descents(s.len() + 1, prefix, |pos| sign_pattern_holds(&s.0, pos))
}

/// `#Ã_s`.
pub fn count_sign_class(s: &SignWord) -> BigUint {
    sign_class_descent_polynomial(s)
        .eval_one()
        .to_biguint()
        .unwrap_or_default()
}

/// Descent generating polynomial of `Ã_s`. No identity with an h*-polynomial
/// is claimed for mixed sign words.
pub fn sign_class_descent_polynomial(s: &SignWord) -> IntPolynomial {
    let tally = sign_class_tally(s, &[0]).expect("[0] is a valid prefix");
    tally_to_polynomial(&tally)
}

/// Parses the `i-j,i-j` form. The empty string is the empty set.
pub fn parse_chain_set(text: &str, n: usize) -> Result<ChainSet> {
    let text = text.trim();
    let mut pairs = Vec::new();
    if !text.is_empty() {
        for item in text.split(',') {
            let item = item.trim();
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| domain!("expected `i-j`, found {item:?}"))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| domain!("bad integer {s:?} in pair {item:?}"))
            };
            pairs.push((parse(a)?, parse(b)?));
        }
    }
    ChainSet::new(n, pairs)
}

/// Renders a word with `sep` between letters.
pub fn join_letters(letters: &[usize], sep: &str) -> String {
    let mut out = String::new();
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        out.push_str(&alloc::format!("{x}"));
    }
    out
}
