//! Lattice paths, bitstrings, and modified Catalan paths.
//!
//! A `{0,1}`-sequence of length `n` is read as a northeast lattice path
//! (0 = north, 1 = east) and simultaneously as the exponent vector of a
//! square-free monomial. Positions are 1-based throughout, matching the
//! usual combinatorial indexing.

mod tableau;

pub use tableau::{enumerate_syt_two_rows, tableau_to_path, Tableau, TableauError};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("`{0}` is not a modified Catalan path")]
    NotAnMcp(String),
    #[error("position {k} of `{path}` is not an east step")]
    PositionNotOne { k: usize, path: String },
    #[error("position {k} must satisfy 1 < k <= d = {d}")]
    PositionOutOfRange { k: usize, d: usize },
    #[error("r = {r} out of range 1..={ell1}")]
    ROutOfRange { r: usize, ell1: usize },
    #[error("child path needs d + 2 = {needed} steps but the ambient length is {n}")]
    ChildDoesNotFit { needed: usize, n: usize },
    #[error("invalid path character `{0}` (expected '0' or '1')")]
    BadChar(char),
}

/// A fixed-length `{0,1}`-sequence, i.e. a northeast lattice path.
///
/// Bits are packed big-endian into `u64` words so that comparing word
/// slices is exactly the left-to-right lexicographic comparison of the
/// bitstring; paths of length <= 64 occupy a single word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitPath {
    n: usize,
    words: Vec<u64>,
}

impl BitPath {
    /// The all-zero (all-north) path of length `n`.
    pub fn zeros(n: usize) -> Self {
        BitPath {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut p = BitPath::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                p.set(i + 1);
            }
        }
        p
    }

    /// Builds the path of length `n` with east steps exactly at the given
    /// 1-based positions.
    pub fn from_one_positions(n: usize, ones: &[usize]) -> Self {
        let mut p = BitPath::zeros(n);
        for &i in ones {
            assert!(
                (1..=n).contains(&i),
                "one-position {i} out of range 1..={n}"
            );
            p.set(i);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> u8 {
        assert!((1..=self.n).contains(&i), "position {i} out of range");
        let w = (i - 1) / 64;
        let off = 63 - ((i - 1) % 64);
        ((self.words[w] >> off) & 1) as u8
    }

    fn set(&mut self, i: usize) {
        let w = (i - 1) / 64;
        let off = 63 - ((i - 1) % 64);
        self.words[w] |= 1 << off;
    }

    /// Number of east steps (1s).
    pub fn ell1(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of north steps (0s).
    pub fn ell0(&self) -> usize {
        self.n - self.ell1()
    }

    /// Number of 1s among the first `j` positions.
    pub fn prefix_ones(&self, j: usize) -> usize {
        assert!(j <= self.n);
        let full = j / 64;
        let mut count: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rem = j % 64;
        if rem > 0 {
            let mask = !0u64 << (64 - rem);
            count += (self.words[full] & mask).count_ones() as usize;
        }
        count
    }

    /// 1-based position of the last east step, if any.
    pub fn last_one_pos(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate().rev() {
            if word != 0 {
                let off = word.trailing_zeros() as usize;
                return Some(w * 64 + (64 - off));
            }
        }
        None
    }

    /// Ascending list of 1-based east-step positions.
    pub fn one_positions(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.bit(i) == 1).collect()
    }

    /// The sub-path formed by the first `d` steps.
    pub fn prefix(&self, d: usize) -> BitPath {
        assert!(d <= self.n);
        let mut p = BitPath::zeros(d);
        for i in 1..=d {
            if self.bit(i) == 1 {
                p.set(i);
            }
        }
        p
    }

    /// True iff the path is a staircase walk from `(0,0)` to `(l,l)` staying
    /// weakly above the diagonal: balanced step counts and every prefix has
    /// at least as many north steps as east steps.
    pub fn is_catalan(&self) -> bool {
        if self.ell0() != self.ell1() {
            return false;
        }
        self.stays_above_diagonal()
    }

    /// True iff every prefix has `ell0 >= ell1`.
    pub fn stays_above_diagonal(&self) -> bool {
        let mut ones = 0usize;
        for i in 1..=self.n {
            ones += self.bit(i) as usize;
            if 2 * ones > i {
                return false;
            }
        }
        true
    }

    /// True iff the path decomposes as `w 1 0^m` with `w` a Catalan path.
    pub fn is_mcp(&self) -> bool {
        match self.last_one_pos() {
            None => false,
            Some(d) => self.prefix(d - 1).is_catalan(),
        }
    }
}

impl fmt::Display for BitPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "{}", self.bit(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPath({self})")
    }
}

impl FromStr for BitPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(PathError::BadChar(other)),
            }
        }
        Ok(BitPath::from_bits(&bits))
    }
}

impl Ord for BitPath {
    /// Left-to-right lexicographic order on the bits; among equal prefixes
    /// the shorter path compares smaller. All enumerations in this crate
    /// compare paths of equal length only.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .cmp(&other.words)
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for BitPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A modified Catalan path `w 1 0^m`: a Catalan path with one extra east
/// step, followed by north steps. `d` is the 1-based position of the last
/// east step; `d = 2*ell1 - 1` always holds.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McpPath {
    path: BitPath,
    d: usize,
}

impl McpPath {
    pub fn new(path: BitPath) -> Result<Self, PathError> {
        if !path.is_mcp() {
            return Err(PathError::NotAnMcp(path.to_string()));
        }
        let d = path.last_one_pos().expect("an MCP has an east step");
        debug_assert_eq!(d, 2 * path.ell1() - 1);
        Ok(McpPath { path, d })
    }

    pub fn parse(s: &str) -> Result<Self, PathError> {
        McpPath::new(s.parse()?)
    }

    pub fn path(&self) -> &BitPath {
        &self.path
    }

    /// Ambient length of the path.
    pub fn n(&self) -> usize {
        self.path.len()
    }

    /// Position of the last east step.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ell1(&self) -> usize {
        self.path.ell1()
    }

    /// Ascending 1-based positions of east steps; all lie in `1..=d`.
    pub fn one_positions(&self) -> Vec<usize> {
        self.path.one_positions()
    }
}

impl fmt::Display for McpPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.path.fmt(f)
    }
}

impl fmt::Debug for McpPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "McpPath({} d={})", self.path, self.d)
    }
}

/// Exact binomial coefficient; `k > n` gives 0.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The `k`-th Catalan number.
pub fn catalan(k: usize) -> u128 {
    binomial(2 * k, k) / (k as u128 + 1)
}

fn catalan_paths(l: usize) -> Vec<BitPath> {
    fn rec(cur: &mut Vec<u8>, zeros: usize, ones: usize, l: usize, out: &mut Vec<BitPath>) {
        if cur.len() == 2 * l {
            out.push(BitPath::from_bits(cur));
            return;
        }
        if ones < zeros {
            cur.push(1);
            rec(cur, zeros, ones + 1, l, out);
            cur.pop();
        }
        if zeros < l {
            cur.push(0);
            rec(cur, zeros + 1, ones, l, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 0, 0, l, &mut out);
    out
}

/// All MCPs of length `n` with `ell1(alpha) - 1 <= ell`, lex-descending.
///
/// The count is the partial Catalan sum over `k <= min(ell, (n-1)/2)`.
pub fn enumerate_mcps(n: usize, ell: i64) -> Vec<McpPath> {
    assert!(n >= 1, "ambient length must be positive");
    let mut out = Vec::new();
    if ell < 0 {
        return out;
    }
    let k_max = ((n - 1) / 2).min(ell as usize);
    for k in 0..=k_max {
        for w in catalan_paths(k) {
            let mut ones = w.one_positions();
            ones.push(2 * k + 1);
            let path = BitPath::from_one_positions(n, &ones);
            out.push(McpPath::new(path).expect("w 1 0^m is an MCP"));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The set `P_alpha`: all paths `beta != alpha` with the same number of
/// east steps whose first `d` steps stay weakly above `alpha` (east steps
/// only where `alpha` has them). Lex-descending.
pub fn p_alpha(alpha: &McpPath) -> Vec<BitPath> {
    let n = alpha.n();
    let d = alpha.d();
    let ell1 = alpha.ell1();
    let ones = alpha.one_positions();
    let mut out = Vec::new();
    for prefix_ones in ones.iter().copied().powerset() {
        let r = ell1 - prefix_ones.len();
        if r > n - d {
            continue;
        }
        for tail in (d + 1..=n).combinations(r) {
            let mut all = prefix_ones.clone();
            all.extend(tail);
            let beta = BitPath::from_one_positions(n, &all);
            if &beta != alpha.path() {
                out.push(beta);
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The subset `P_alpha^(k)` of `p_alpha` with `beta_k = 0`.
pub fn p_alpha_k(alpha: &McpPath, k: usize) -> Result<Vec<BitPath>, PathError> {
    check_one_position(alpha, k)?;
    Ok(p_alpha(alpha)
        .into_iter()
        .filter(|beta| beta.bit(k) == 0)
        .collect())
}

fn check_one_position(alpha: &McpPath, k: usize) -> Result<(), PathError> {
    if !(2..=alpha.d()).contains(&k) {
        return Err(PathError::PositionOutOfRange { k, d: alpha.d() });
    }
    if alpha.path().bit(k) != 1 {
        return Err(PathError::PositionNotOne {
            k,
            path: alpha.to_string(),
        });
    }
    Ok(())
}

/// The set `U_{alpha,r}`: length-`d` prefixes with east steps only where
/// `alpha` has them and exactly `ell1(alpha) - r` of them. Lex-descending.
pub fn u_alpha_r(alpha: &McpPath, r: usize) -> Result<Vec<BitPath>, PathError> {
    let ell1 = alpha.ell1();
    if !(1..=ell1).contains(&r) {
        return Err(PathError::ROutOfRange { r, ell1 });
    }
    let d = alpha.d();
    let mut out: Vec<BitPath> = alpha
        .one_positions()
        .into_iter()
        .combinations(ell1 - r)
        .map(|sel| BitPath::from_one_positions(d, &sel))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `u(alpha, k)`: the length-`d` prefix of `alpha` with position `k` zeroed.
/// Always a member of `U_{alpha,1}`.
pub fn u_alpha_one_k(alpha: &McpPath, k: usize) -> Result<BitPath, PathError> {
    if alpha.path().bit(k.min(alpha.d())) != 1 || k > alpha.d() {
        return Err(PathError::PositionNotOne {
            k,
            path: alpha.to_string(),
        });
    }
    let ones: Vec<usize> = alpha.one_positions().into_iter().filter(|&i| i != k).collect();
    Ok(BitPath::from_one_positions(alpha.d(), &ones))
}

/// The child MCP `u(alpha,k) 1 1 0^(n-d-2)`: zero the east step at `k` and
/// append two east steps right after position `d`.
pub fn alpha_child(alpha: &McpPath, k: usize) -> Result<McpPath, PathError> {
    check_one_position(alpha, k)?;
    let n = alpha.n();
    let d = alpha.d();
    if d + 2 > n {
        return Err(PathError::ChildDoesNotFit { needed: d + 2, n });
    }
    let mut ones: Vec<usize> = alpha.one_positions().into_iter().filter(|&i| i != k).collect();
    ones.push(d + 1);
    ones.push(d + 2);
    McpPath::new(BitPath::from_one_positions(n, &ones))
}
