//! Subsets of `[m]`, their statistics, and the Gale-type orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `[m] = {1, ..., m}`, `m ≤ 63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    ambient: usize,
}

impl Subset {
    pub fn new(ambient: usize, elems: &[usize]) -> Result<Self> {
        if ambient > 63 {
            return Err(Error::Invalid(format!("ambient {ambient} exceeds 63")));
        }
        let mut bits = 0u64;
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Invalid(format!(
                    "subset elements must increase: {elems:?}"
                )));
            }
        }
        for &e in elems {
            if e == 0 || e > ambient {
                return Err(Error::Invalid(format!(
                    "element {e} outside [1, {ambient}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset { bits, ambient })
    }

    /// Bit `i` set means `i+1` is an element.
    pub fn from_bits(ambient: usize, bits: u64) -> Self {
        assert!(
            ambient <= 63 && bits >> ambient == 0,
            "bits outside [1, {ambient}]"
        );
        Subset { bits, ambient }
    }

    pub fn empty(ambient: usize) -> Self {
        Self::from_bits(ambient, 0)
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_bits(ambient, (1u64 << ambient) - 1)
    }

    /// All `2^m` subsets in bitmask order.
    pub fn all(ambient: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << ambient).map(move |b| Subset::from_bits(ambient, b))
    }

    /// The `r`-element subsets in lexicographic order.
    pub fn of_size(ambient: usize, r: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = Subset::all(ambient).filter(|s| s.len() == r).collect();
        out.sort();
        out
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ambient && self.bits & (1 << (e - 1)) != 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=self.ambient).filter(|&e| self.contains(e)).collect()
    }

    /// Σ(S).
    pub fn sum(&self) -> i64 {
        self.elements().iter().map(|&e| e as i64).sum()
    }

    pub fn complement(&self) -> Subset {
        Subset::from_bits(self.ambient, !self.bits & ((1u64 << self.ambient) - 1))
    }

    /// `S^inv = { m+1-s : s ∈ S }`.
    pub fn inverse(&self) -> Subset {
        let m = self.ambient;
        let mut bits = 0u64;
        for e in self.elements() {
            bits |= 1 << (m - e);
        }
        Subset::from_bits(m, bits)
    }

    /// Elements of the given parity (1 = odd).
    pub fn slice(&self, parity: usize) -> Subset {
        let mut bits = 0u64;
        for e in self.elements() {
            if e % 2 == parity % 2 {
                bits |= 1 << (e - 1);
            }
        }
        Subset::from_bits(self.ambient, bits)
    }

    pub fn odd_slice(&self) -> Subset {
        self.slice(1)
    }

    pub fn even_slice(&self) -> Subset {
        self.slice(0)
    }

    pub fn is_subset_of(&self, o: &Subset) -> bool {
        self.bits & !o.bits == 0
    }

    /// Type A rank `Σ(S) − n(n+1)/2`, defined for `|S| = n`.
    pub fn rank_a(&self, n: usize) -> Result<i64> {
        if self.len() != n {
            return Err(Error::Invalid(format!(
                "rank_a needs |S| = {n}, got {}",
                self.len()
            )));
        }
        Ok(self.sum() - (n * (n + 1) / 2) as i64)
    }

    /// Extended Gale rank `Σ(S)`.
    pub fn rank_ext(&self) -> i64 {
        self.sum()
    }

    /// Semi-extended Gale rank `Σ(S) − |S|`.
    pub fn rank_semi_ext(&self) -> i64 {
        self.sum() - self.len() as i64
    }

    pub fn stats(&self, n: Option<usize>) -> SubsetStats {
        SubsetStats {
            sum: self.sum(),
            complement: self.complement(),
            inverse: self.inverse(),
            odd_slice: self.odd_slice(),
            even_slice: self.even_slice(),
            rank_a: n.and_then(|n| self.rank_a(n).ok()),
            rank_ext: self.rank_ext(),
            rank_semi_ext: self.rank_semi_ext(),
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, o: &Self) -> Ordering {
        self.ambient
            .cmp(&o.ambient)
            .then_with(|| self.elements().cmp(&o.elements()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

/// Statistics of a subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetStats {
    pub sum: i64,
    pub complement: Subset,
    pub inverse: Subset,
    pub odd_slice: Subset,
    pub even_slice: Subset,
    pub rank_a: Option<i64>,
    pub rank_ext: i64,
    pub rank_semi_ext: i64,
}

/// The three Gale-type orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GaleOrder {
    Fixed,
    Extended,
    SemiExtended,
}

/// `A ≤ B` in the given order. Fixed-order comparisons between subsets of
/// different sizes are `false`.
pub fn gale_leq(kind: GaleOrder, a: &Subset, b: &Subset) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::Invalid(format!(
            "ambient mismatch: {} vs {}",
            a.ambient, b.ambient
        )));
    }
    let (ea, eb) = (a.elements(), b.elements());
    Ok(match kind {
        GaleOrder::Fixed => ea.len() == eb.len() && ea.iter().zip(&eb).all(|(x, y)| x <= y),
        GaleOrder::Extended => embeds(&ea, &eb),
        GaleOrder::SemiExtended => ea.len() % 2 == eb.len() % 2 && embeds(&ea, &eb),
    })
}

/// Greedy order-embedding: match each element of `a` to the smallest unused
/// element of `b` not below it.
fn embeds(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() {
            return false;
        }
        j += 1;
    }
    true
}

/// Rank function matching each order.
pub fn gale_rank(kind: GaleOrder, s: &Subset) -> i64 {
    match kind {
        GaleOrder::Fixed => s.rank_a(s.len()).unwrap(),
        GaleOrder::Extended => s.rank_ext(),
        GaleOrder::SemiExtended => s.rank_semi_ext(),
    }
}
