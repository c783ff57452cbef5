//! Partitions and the subset-to-partition dictionaries.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subsets::Subset;
use crate::weights::Family;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Drops trailing zeros; rejects increasing sequences.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "partition parts must weakly decrease: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0) as usize;
        Partition(
            (1..=w)
                .map(|c| self.0.iter().filter(|&&p| p as usize >= c).count() as u32)
                .collect(),
        )
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.transpose()
    }

    /// Side of the Durfee square.
    pub fn durfee_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) as usize <= cols
    }

    /// Complement inside the `rows × cols` rectangle, rotated to a partition.
    pub fn box_complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits_in(rows, cols) {
            return Err(Error::Invalid(format!(
                "{self} does not fit in {rows}x{cols}"
            )));
        }
        Partition::new(
            (0..rows)
                .map(|i| cols as u32 - self.part(rows - 1 - i))
                .collect(),
        )
    }

    /// Builds a partition from Frobenius coordinates (strictly decreasing
    /// arms and legs of equal length).
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition> {
        let r = arms.len();
        if legs.len() != r
            || arms.windows(2).any(|w| w[0] <= w[1])
            || legs.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(Error::Invalid(format!(
                "bad Frobenius coordinates {arms:?} | {legs:?}"
            )));
        }
        let height = legs.first().map(|&b| b as usize + 1).unwrap_or(0);
        let mut parts: Vec<u32> = (0..r).map(|i| arms[i] + i as u32 + 1).collect();
        for row in r + 1..=height.max(r) {
            parts.push((0..r).filter(|&j| legs[j] as usize + j + 1 >= row).count() as u32);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", p.join(","))
    }
}

/// Nests the family's hook of size index `m+1-s` for each `s ∈ S`, outermost
/// first. Hooks are `(i+1, 1^{i-1})` for C, `(i-1, 1^{i-1})` for D (empty at
/// `i = 1`) and `(i, 1^{i-1})` for B.
pub fn hook_partition(family: Family, s: &Subset) -> Partition {
    let m = s.ambient();
    let mut arms = Vec::new();
    let mut legs = Vec::new();
    for e in s.elements() {
        let i = (m + 1 - e) as i64;
        let (arm, leg) = match family {
            Family::C => (i, i - 1),
            Family::D => (i - 2, i - 1),
            Family::B => (i - 1, i - 1),
        };
        if arm < 0 {
            continue;
        }
        arms.push(arm as u32);
        legs.push(leg as u32);
    }
    Partition::from_frobenius(&arms, &legs).expect("nested hooks have decreasing coordinates")
}

/// `α(S) = (s_n − n, ..., s_1 − 1)` for `S ⊆ [2n]` with `|S| = n`.
pub fn path_partition(s: &Subset, n: usize) -> Result<Partition> {
    if s.len() != n || s.ambient() != 2 * n {
        return Err(Error::Invalid(format!(
            "path partitions need |S| = n = {n} inside [2n], got {s}"
        )));
    }
    let e = s.elements();
    Partition::new((0..n).rev().map(|i| (e[i] - i - 1) as u32).collect())
}

/// Self-conjugate partitions inside the `m × m` box, sorted.
pub fn enumerate_self_conjugate(m: usize, even_rank_only: bool) -> Vec<Partition> {
    // A self-conjugate partition is fixed by its arm sequence, a strictly
    // decreasing sequence drawn from {m-1, ..., 0}.
    let mut out: Vec<Partition> = Subset::all(m)
        .map(|s| {
            let arms: Vec<u32> = s.elements().iter().rev().map(|&e| e as u32 - 1).collect();
            Partition::from_frobenius(&arms, &arms).unwrap()
        })
        .filter(|p| !even_rank_only || p.durfee_rank() % 2 == 0)
        .collect();
    out.sort();
    out
}
