//! Integer partitions, the bounded families `Par(h)` and `Par(h,w)`, and the
//! cylindric transpose `Tr(λ; h, w)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spread bound of a bounded family. `None` stands for an unbounded spread.
pub type Width = Option<usize>;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; `part(i)` returns 0 past the length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects increasing input
    /// and zeros followed by positive parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts known to be valid. Panics otherwise.
    pub fn from_parts(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("parts are 1-indexed");
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to exactly `h` entries. Panics if the
    /// partition is longer than `h`.
    pub fn padded(&self, h: usize) -> Vec<usize> {
        assert!(self.len() <= h, "partition {self} longer than {h}");
        let mut v = self.0.clone();
        v.resize(h, 0);
        v
    }

    /// Whether the Young diagram of `self` is contained in that of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }
}

/// The conjugate partition, `λ'_j = #{i : λ_i ≥ j}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(1);
    let parts = (1..=first)
        .map(|j| lambda.parts().iter().filter(|&&p| p >= j).count())
        .collect();
    Partition(parts)
}

/// Membership in `Par(h, w)`: at most `h` parts and `λ_1 − λ_h ≤ w`.
pub fn in_family(lambda: &Partition, h: usize, w: Width) -> bool {
    if lambda.len() > h {
        return false;
    }
    match w {
        None => true,
        Some(w) => lambda.part(1) - lambda.part(h) <= w,
    }
}

/// All partitions of `n` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(n: usize, max_len: usize) -> Vec<Partition> {
    fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every member of `Par(h, w)` of size at most `max_size`.
///
/// The order is graded by size; within one size, partitions come in
/// decreasing lexicographic order, so `(2)` precedes `(1,1)`.
pub fn iter_family(h: usize, w: Width, max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |n| {
        partitions_of(n, h)
            .into_iter()
            .filter(move |p| in_family(p, h, w))
    })
}

/// `μ ⊆ λ` and `λ/μ` has at most one cell in every row.
pub fn is_vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    if !mu.contained_in(lambda) {
        return false;
    }
    (1..=lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1)
}

/// The `(h,w)`-cylindric transpose of a shape, an element of `Par(w, h)`.
///
/// The cylinder over `λ` is the cell set `{(i + kh, j − kw)}` for the cells
/// `(i, j)` of `λ` and all integers `k`. We transpose a finite window of
/// periods and read rows `1..=w` in columns `≥ 1`. A cell `(i, j)` with
/// `1 ≤ j ≤ λ_1` lands in transposed row `j − kw`; that row is in `1..=w` only
/// when `|k| ≤ λ_1 / w + 1`, so the window `|k| ≤ |λ| + h + w` covers every
/// cell that can land in the rows we read.
pub fn cyl_transpose(lambda: &Partition, h: usize, w: usize) -> Result<Partition> {
    if w == 0 || !in_family(lambda, h, Some(w)) {
        return Err(Error::NotInFamily {
            partition: lambda.to_string(),
            h,
            w: w.to_string(),
        });
    }
    let window = (lambda.size() + h + w) as i64;
    let (hi, wi) = (h as i64, w as i64);
    let mut cells: BTreeSet<(i64, i64)> = BTreeSet::new();
    for k in -window..=window {
        for i in 1..=h {
            for j in 1..=lambda.part(i) {
                // the cell (i + kh, j - kw) transposed
                cells.insert((j as i64 - k * wi, i as i64 + k * hi));
            }
        }
    }
    let mut parts = Vec::with_capacity(w);
    for r in 1..=wi {
        let len = cells.range((r, 1)..(r + 1, i64::MIN)).count();
        debug_assert!(
            (1..=len as i64).all(|c| cells.contains(&(r, c))),
            "transposed row {r} is not left-justified"
        );
        parts.push(len);
    }
    Partition::new(parts)
}
