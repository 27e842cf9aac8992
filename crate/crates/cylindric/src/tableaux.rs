//! Cylindric semistandard and row-strict tableaux, cylindric Schur
//! functions, quantum Kostka numbers and counts of cylindric standard
//! tableaux.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::epoly::{determinant, EPoly, Matrix, XPoly};
use crate::error::{Error, Result};
use crate::partitions::{cyl_transpose, in_family, iter_family, partitions_of, Partition};

/// A filling of a Young diagram by positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// Monotonicity pattern of a tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Rows weakly increasing, columns strictly increasing.
    Ssyt,
    /// Rows strictly increasing, columns weakly increasing.
    Rst,
}

impl Tableau {
    /// Validates that the rows form a Young diagram filled with positive
    /// integers. Empty trailing rows are dropped.
    pub fn new(mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::MalformedTableau("row lengths must weakly decrease".into()));
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::MalformedTableau("interior empty row".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::MalformedTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("validated shape")
    }

    /// Entry at 1-based `(row, col)`, if the cell exists.
    pub fn at(&self, row: usize, col: usize) -> Option<u32> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1).and_then(|r| r.get(col - 1)).copied()
    }

    /// Number of occurrences of each entry `1..=max`.
    pub fn content(&self, max: usize) -> Vec<usize> {
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            if (x as usize) <= max {
                c[x as usize - 1] += 1;
            }
        }
        c
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_kind(&self, kind: Kind) -> bool {
        let (row_ok, col_ok): (fn(u32, u32) -> bool, fn(u32, u32) -> bool) = match kind {
            Kind::Ssyt => (|a, b| a <= b, |a, b| a < b),
            Kind::Rst => (|a, b| a < b, |a, b| a <= b),
        };
        let rows_fine = self.rows.iter().all(|r| r.windows(2).all(|w| row_ok(w[0], w[1])));
        let cols_fine = self
            .rows
            .windows(2)
            .all(|p| p[1].iter().zip(&p[0]).all(|(&below, &above)| col_ok(above, below)));
        rows_fine && cols_fine
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Whether `T ∪ (T + (h, −w))` is again a tableau of the given kind on a
/// skew shape.
///
/// The shifted copy puts `T(1, c + w)` directly below `T(h, c)`. The union
/// is a skew shape exactly when the shape lies in `Par(h, w)`, and the only
/// new column relations are `T(h, c)` versus `T(1, c + w)` for
/// `1 ≤ c ≤ min(λ_h, λ_1 − w)`.
pub fn is_cylindric(t: &Tableau, h: usize, w: usize, kind: Kind) -> Result<bool> {
    if !t.is_kind(kind) {
        return Err(Error::MalformedTableau(format!("not a valid {kind:?}")));
    }
    let lam = t.shape();
    if !in_family(&lam, h, Some(w)) {
        return Ok(false);
    }
    let overlap = lam.part(h).min(lam.part(1).saturating_sub(w));
    Ok((1..=overlap).all(|c| {
        let above = t.at(h, c).expect("cell in row h");
        let below = t.at(1, c + w).expect("cell in row 1");
        match kind {
            Kind::Ssyt => above < below,
            Kind::Rst => above <= below,
        }
    }))
}

/// Every `(h, w)`-cylindric tableau of shape `λ` with entries at most
/// `max_entry`, in lexicographic order of the row words.
pub fn enumerate_cylindric(lambda: &Partition, h: usize, w: usize, kind: Kind, max_entry: u32) -> Vec<Tableau> {
    if !in_family(lambda, h, Some(w)) {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|i| (1..=lambda.part(i)).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &mut grid, kind, max_entry, h, w, lambda, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<u32>>,
    kind: Kind,
    max_entry: u32,
    h: usize,
    w: usize,
    lambda: &Partition,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau { rows: grid.clone() });
        return;
    }
    let (i, j) = cells[idx];
    let (row_strict, col_strict) = match kind {
        Kind::Ssyt => (0, 1),
        Kind::Rst => (1, 0),
    };
    let mut lo = 1u32;
    if j > 1 {
        lo = lo.max(grid[i - 1][j - 2] + row_strict);
    }
    if i > 1 {
        lo = lo.max(grid[i - 2][j - 1] + col_strict);
    }
    // the cylindric relation: T(h, c) against T(1, c + w)
    let mut hi = max_entry;
    if h == 1 {
        if j > w {
            lo = lo.max(grid[0][j - w - 1] + col_strict);
        }
    } else if i == h && j + w <= lambda.part(1) {
        match grid[0][j + w - 1].checked_sub(col_strict) {
            Some(b) => hi = hi.min(b),
            None => return,
        }
    }
    for v in lo..=hi {
        grid[i - 1][j - 1] = v;
        fill(cells, idx + 1, grid, kind, max_entry, h, w, lambda, out);
    }
    grid[i - 1][j - 1] = 0;
}

/// `Σ_{k_1+…+k_h=0} det(e_{λ_i−i+j+(h+w)k_i})` in `n` variables.
///
/// Row `i` has indices in `[λ_i − i + 1 + Nk_i, λ_i − i + h + Nk_i]`, and it
/// vanishes unless that window meets `[0, n]`; this bounds every `k_i`.
pub fn jacobi_trudi_sum(lambda: &Partition, h: usize, w: usize, n: usize, cap: Option<u32>) -> Result<EPoly> {
    if !in_family(lambda, h, Some(w)) {
        return Err(Error::NotInFamily { partition: lambda.to_string(), h, w: w.to_string() });
    }
    let big_n = (h + w) as i64;
    let rows: Vec<i64> = (1..=h).map(|i| lambda.part(i) as i64 - i as i64).collect();
    Ok(periodic_det_sum(&rows, h, big_n, n, cap, true))
}

/// `Σ_k det(e_{r_i + j + N k_i})` with row offsets `r_i`, over the `k`
/// vectors that keep every row nonzero (and with `Σ k_i = 0` when
/// `balanced`).
pub(crate) fn periodic_det_sum(rows: &[i64], size: usize, big_n: i64, n: usize, cap: Option<u32>, balanced: bool) -> EPoly {
    let one = EPoly::one(n, cap);
    let ranges: Vec<(i64, i64)> = rows
        .iter()
        .map(|&r| {
            // need r + 1 + Nk ≤ n and r + size + Nk ≥ 0
            let lo = -(r + size as i64).div_euclid(big_n);
            let hi = (n as i64 - r - 1).div_euclid(big_n);
            (lo, hi)
        })
        .collect();
    let mut total = EPoly::zero(n, cap);
    let mut k = vec![0i64; rows.len()];
    let mut visit = |k: &[i64]| {
        if balanced && k.iter().sum::<i64>() != 0 {
            return;
        }
        let m = Matrix::from_fn(size, size, |i, j| EPoly::e(rows[i] + j as i64 + 1 + big_n * k[i], n, cap));
        total = &total + &determinant(&m, &one).expect("square");
    };
    for_each_vector(&ranges, &mut k, 0, &mut visit);
    total
}

/// Calls `f` on every integer vector inside the box `ranges`.
pub(crate) fn for_each_vector(ranges: &[(i64, i64)], cur: &mut [i64], idx: usize, f: &mut dyn FnMut(&[i64])) {
    if idx == ranges.len() {
        f(cur);
        return;
    }
    let (lo, hi) = ranges[idx];
    for v in lo..=hi {
        cur[idx] = v;
        for_each_vector(ranges, cur, idx + 1, f);
    }
}

/// Generating function `Σ x^T` over `CRST(λ; h, w)` with entries `≤ n`,
/// truncated at total degree `cap`.
pub fn crst_generating_function(lambda: &Partition, h: usize, w: usize, n: usize, cap: Option<i32>) -> Result<XPoly> {
    if !in_family(lambda, h, Some(w)) {
        return Err(Error::NotInFamily { partition: lambda.to_string(), h, w: w.to_string() });
    }
    let mut p = XPoly::zero(n, cap);
    for t in enumerate_cylindric(lambda, h, w, Kind::Rst, n as u32) {
        let key: Vec<i32> = t.content(n).into_iter().map(|c| c as i32).collect();
        p.add_term(key, BigInt::one());
    }
    Ok(p)
}

/// How to compute a cylindric Schur function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    Tableaux,
    JacobiTrudi,
}

/// A cylindric Schur function, either as an explicit monomial sum or as a
/// polynomial in the elementary symmetric functions.
#[derive(Clone, Debug, PartialEq)]
pub enum SchurValue {
    Monomial(XPoly),
    Elementary(EPoly),
}

impl SchurValue {
    /// The monomial form, expanding if necessary.
    pub fn to_monomial(&self, cap: Option<i32>) -> XPoly {
        match self {
            SchurValue::Monomial(p) => p.truncate(cap),
            SchurValue::Elementary(p) => crate::epoly::monomial_expand(p, cap),
        }
    }
}

/// `s_{λ[h,w]'}` in `n` variables through degree `cap`.
pub fn cylindric_schur(lambda: &Partition, h: usize, w: usize, method: SchurMethod, n: usize, cap: Option<u32>) -> Result<SchurValue> {
    match method {
        SchurMethod::Tableaux => {
            crst_generating_function(lambda, h, w, n, cap.map(|c| c as i32)).map(SchurValue::Monomial)
        }
        SchurMethod::JacobiTrudi => jacobi_trudi_sum(lambda, h, w, n, cap).map(SchurValue::Elementary),
    }
}

/// How to compute a quantum Kostka number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KostkaMethod {
    Tableaux,
    Paths,
}

/// The number of `T ∈ CRST(λ; h, w)` with content `α`.
pub fn quantum_kostka(lambda: &Partition, h: usize, w: usize, alpha: &[usize], method: KostkaMethod) -> Result<BigInt> {
    if !in_family(lambda, h, Some(w)) {
        return Err(Error::NotInFamily { partition: lambda.to_string(), h, w: w.to_string() });
    }
    if alpha.iter().sum::<usize>() != lambda.size() {
        return Ok(BigInt::zero());
    }
    Ok(match method {
        KostkaMethod::Tableaux => {
            let count = enumerate_cylindric(lambda, h, w, Kind::Rst, alpha.len() as u32)
                .into_iter()
                .filter(|t| t.content(alpha.len()) == alpha)
                .count();
            BigInt::from(count)
        }
        KostkaMethod::Paths => kostka_paths(lambda, h, w, alpha),
    })
}

fn in_region(x: &[usize], w: usize) -> bool {
    x.windows(2).all(|p| p[0] >= p[1]) && x[0] - x[x.len() - 1] <= w
}

/// Walks from the origin to `λ`; step `i` adds 1 to exactly `α_i`
/// coordinates and every point satisfies `x_1 ≥ … ≥ x_h ≥ x_1 − w`.
fn kostka_paths(lambda: &Partition, h: usize, w: usize, alpha: &[usize]) -> BigInt {
    let target = lambda.padded(h);
    let mut layer: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    layer.insert(vec![0; h], BigInt::one());
    for &a in alpha {
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (pt, c) in &layer {
            for mask in 0u32..(1 << h) {
                if mask.count_ones() as usize != a {
                    continue;
                }
                let q: Vec<usize> = (0..h).map(|i| pt[i] + ((mask >> i) & 1) as usize).collect();
                if in_region(&q, w) && q.iter().zip(&target).all(|(x, t)| x <= t) {
                    *next.entry(q).or_default() += c;
                }
            }
        }
        layer = next;
    }
    layer.get(&target).cloned().unwrap_or_default()
}

/// The content path of a cylindric row-strict tableau: the row lengths of
/// the subtableau of entries `≤ i`, for `i = 0, 1, …, max`.
pub fn content_path(t: &Tableau, h: usize) -> Vec<Vec<usize>> {
    (0..=t.max_entry())
        .map(|i| {
            (1..=h)
                .map(|r| t.rows.get(r - 1).map_or(0, |row| row.iter().filter(|&&x| x <= i).count()))
                .collect()
        })
        .collect()
}

/// The `(h, w)`-transpose of a cylindric tableau.
///
/// Row `r` of the result, column `i + kh` (`1 ≤ i ≤ h`, `k ≥ 0`) holds
/// `T(i, r + kw)`. A cylindric RST maps to a `(w, h)`-cylindric SSYT and a
/// cylindric SSYT to a `(w, h)`-cylindric RST.
pub fn transpose_tableau(t: &Tableau, h: usize, w: usize) -> Result<Tableau> {
    let cyl = |k| t.is_kind(k) && is_cylindric(t, h, w, k).unwrap_or(false);
    if !cyl(Kind::Rst) && !cyl(Kind::Ssyt) {
        return Err(Error::NotCylindric { h, w });
    }
    let shape = cyl_transpose(&t.shape(), h, w)?;
    let rows = (1..=shape.len())
        .map(|r| {
            (1..=shape.part(r))
                .map(|c| {
                    let (k, i) = ((c - 1) / h, (c - 1) % h + 1);
                    t.at(i, r + k * w).expect("cell of the cylinder")
                })
                .collect()
        })
        .collect();
    Tableau::new(rows)
}

/// Standard Young tableaux of shape `λ`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(shape: &mut Vec<usize>, grid: &mut Vec<Vec<u32>>, next: u32, total: u32, out: &mut Vec<Tableau>, target: &[usize]) {
        if next > total {
            out.push(Tableau { rows: grid.clone() });
            return;
        }
        for r in 0..target.len() {
            let ok = shape[r] < target[r] && (r == 0 || shape[r - 1] > shape[r]);
            if ok {
                grid[r][shape[r]] = next;
                shape[r] += 1;
                rec(shape, grid, next + 1, total, out, target);
                shape[r] -= 1;
                grid[r][shape[r]] = 0;
            }
        }
    }
    let target = lambda.parts().to_vec();
    let mut grid: Vec<Vec<u32>> = target.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(&mut vec![0; target.len()], &mut grid, 1, lambda.size() as u32, &mut out, &target);
    out
}

/// How to count cylindric standard Young tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsytMethod {
    ChainDp,
    Brute,
    FactorialFormula,
}

/// `|CSYT_n(h, w)|`.
pub fn csyt_count(n: usize, h: usize, w: usize, method: CsytMethod) -> Result<BigInt> {
    if h == 0 || w == 0 {
        return Err(Error::Unsupported("h and w must be positive".into()));
    }
    match method {
        CsytMethod::ChainDp => Ok(csyt_chain_dp(n, h, w)),
        CsytMethod::Brute => Ok(csyt_brute(n, h, w)),
        CsytMethod::FactorialFormula => csyt_factorial_formula(n, h, w),
    }
}

/// Counts chains `∅ = λ^0 ⊂ … ⊂ λ^n` inside `Par(h, w)` adding one cell at a
/// time, memoized on `(steps left, shape)`.
fn csyt_chain_dp(n: usize, h: usize, w: usize) -> BigInt {
    fn go(left: usize, shape: &mut Vec<usize>, w: usize, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        if left == 0 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&(left, shape.clone())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for r in 0..shape.len() {
            shape[r] += 1;
            if in_region(shape, w) {
                total += go(left - 1, shape, w, memo);
            }
            shape[r] -= 1;
        }
        memo.insert((left, shape.clone()), total.clone());
        total
    }
    go(n, &mut vec![0; h], w, &mut HashMap::new())
}

fn csyt_brute(n: usize, h: usize, w: usize) -> BigInt {
    let mut count = 0usize;
    for lam in partitions_of(n, h) {
        for t in standard_tableaux(&lam) {
            if is_cylindric(&t, h, w, Kind::Ssyt).expect("standard tableaux are SSYT") {
                count += 1;
            }
        }
    }
    BigInt::from(count)
}

fn factorial_rational(k: i64) -> BigRational {
    let f = (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    BigRational::from_integer(f)
}

/// `Σ_{|λ|=n, λ_1−λ_h ≤ w} Σ_{Σk=0} n!·det(1/(λ_i−i+j+(h+w)k_i)!)` for odd
/// `h` and `w`, with `1/m! = 0` for negative `m`.
fn csyt_factorial_formula(n: usize, h: usize, w: usize) -> Result<BigInt> {
    if h % 2 == 0 || w % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "the factorial determinant count is only available for odd parameters, got ({h},{w})"
        )));
    }
    let big_n = (h + w) as i64;
    let one = BigRational::one();
    let mut total = BigRational::zero();
    for lam in partitions_of(n, h).into_iter().filter(|l| in_family(l, h, Some(w))) {
        let rows: Vec<i64> = (1..=h).map(|i| lam.part(i) as i64 - i as i64).collect();
        let ranges: Vec<(i64, i64)> = rows
            .iter()
            .map(|&r| (-(r + h as i64).div_euclid(big_n), (n as i64 - r - 1).div_euclid(big_n)))
            .collect();
        let mut k = vec![0i64; h];
        let mut visit = |k: &[i64]| {
            if k.iter().sum::<i64>() != 0 {
                return;
            }
            let m = Matrix::from_fn(h, h, |i, j| {
                let a = rows[i] + j as i64 + 1 + big_n * k[i];
                if a < 0 {
                    BigRational::zero()
                } else {
                    factorial_rational(a).recip()
                }
            });
            total += determinant(&m, &one).expect("square");
        };
        for_each_vector(&ranges, &mut k, 0, &mut visit);
    }
    let scaled = total * factorial_rational(n as i64);
    if !scaled.is_integer() {
        return Err(Error::Unsupported("factorial determinant sum is not an integer".into()));
    }
    Ok(scaled.to_integer())
}

/// All members of `Par(h, w)` with size exactly `n`.
pub fn family_of_size(n: usize, h: usize, w: usize) -> Vec<Partition> {
    iter_family(h, Some(w), n).filter(|l| l.size() == n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epoly::monomial_expand;
    use crate::partitions::iter_family;
    use std::collections::BTreeSet;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn figure_one_verdicts() {
        let tab = t(&[&[1, 1, 3, 5], &[2, 2, 4], &[3, 4]]);
        assert!(is_cylindric(&tab, 3, 3, Kind::Ssyt).unwrap());
        assert!(!is_cylindric(&tab, 3, 2, Kind::Ssyt).unwrap());
        assert!(!is_cylindric(&tab, 3, 1, Kind::Ssyt).unwrap());
        assert!(is_cylindric(&tab, 3, 2, Kind::Rst).is_err());
    }

    /// Direct check of the definition: overlay the shifted copy on a grid
    /// and test every row and column adjacency of the union.
    fn cylindric_by_overlay(t: &Tableau, h: usize, w: usize, kind: Kind) -> bool {
        let lam = t.shape();
        if lam.len() > h {
            return false;
        }
        let mut cells: BTreeMap<(i64, i64), u32> = BTreeMap::new();
        for (i, row) in t.rows().iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                cells.insert((i as i64 + 1, j as i64 + 1), v);
                cells.insert((i as i64 + 1 + h as i64, j as i64 + 1 - w as i64), v);
            }
        }
        // skew shape: every row is an interval, left and right ends weakly decrease
        let rows: Vec<i64> = (1..=2 * h as i64).collect();
        let mut bounds: Vec<Option<(i64, i64)>> = Vec::new();
        for &r in &rows {
            let cols: Vec<i64> = cells.keys().filter(|k| k.0 == r).map(|k| k.1).collect();
            if cols.is_empty() {
                bounds.push(None);
                continue;
            }
            let (lo, hi) = (cols[0], *cols.last().unwrap());
            if hi - lo + 1 != cols.len() as i64 {
                return false;
            }
            bounds.push(Some((lo, hi)));
        }
        let nonempty: Vec<(i64, i64)> = bounds.iter().flatten().copied().collect();
        if nonempty.windows(2).any(|w| w[1].0 > w[0].0 || w[1].1 > w[0].1) {
            return false;
        }
        for (&(r, c), &v) in &cells {
            if let Some(&right) = cells.get(&(r, c + 1)) {
                let ok = match kind {
                    Kind::Ssyt => v <= right,
                    Kind::Rst => v < right,
                };
                if !ok {
                    return false;
                }
            }
            if let Some(&below) = cells.get(&(r + 1, c)) {
                let ok = match kind {
                    Kind::Ssyt => v < below,
                    Kind::Rst => v <= below,
                };
                if !ok {
                    return false;
                }
            }
        }
        // columns of a skew shape have no gaps
        let mut by_col: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for &(r, c) in cells.keys() {
            by_col.entry(c).or_default().push(r);
        }
        by_col.values().all(|rs| rs.last().unwrap() - rs[0] + 1 == rs.len() as i64)
    }

    #[test]
    fn cylindric_check_matches_overlay() {
        for h in 1..=3 {
            for w in 1..=3 {
                for lam in iter_family(h, None, 5) {
                    for kind in [Kind::Ssyt, Kind::Rst] {
                        for tab in enumerate_cylindric(&lam, h, 50, kind, 4) {
                            assert_eq!(
                                is_cylindric(&tab, h, w, kind).unwrap(),
                                cylindric_by_overlay(&tab, h, w, kind),
                                "{tab:?} h={h} w={w} {kind:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_cylindric(&p(&[1]), 3, 3, Kind::Ssyt, 2).len(), 2);
        for n in 0..6u32 {
            for m in 0..=n as usize {
                let want = (0..m).fold(1u64, |acc, i| acc * (n as u64 - i as u64) / (i as u64 + 1));
                assert_eq!(enumerate_cylindric(&p(&[m]), 1, 2, Kind::Rst, n).len() as u64, want);
            }
        }
        let partner = t(&[&[1, 2, 3, 4, 5], &[1, 2, 4, 5]]);
        assert!(enumerate_cylindric(&p(&[5, 4]), 2, 3, Kind::Rst, 5).contains(&partner));
        assert!(enumerate_cylindric(&p(&[4, 3, 2]), 3, 1, Kind::Rst, 5).is_empty());
    }

    #[test]
    fn enumeration_matches_filter() {
        for h in 1..=3 {
            for w in 1..=2 {
                for lam in iter_family(h, Some(w), 4) {
                    for kind in [Kind::Ssyt, Kind::Rst] {
                        let all = enumerate_cylindric(&lam, h, 99, kind, 3);
                        let want: Vec<_> =
                            all.into_iter().filter(|x| is_cylindric(x, h, w, kind).unwrap()).collect();
                        assert_eq!(enumerate_cylindric(&lam, h, w, kind, 3), want);
                    }
                }
            }
        }
    }

    /// Vertices of the path family of a row-strict tableau: row `i` runs
    /// from `(1 − i, i − 1)` and its `c`-th horizontal edge ends at
    /// `(c + 1 − i, b)` with `T(i,c) = c + 1 − i + b`. Paths are cut at `top`.
    fn path_family(t: &Tableau, h: usize, top: i64) -> Vec<BTreeSet<(i64, i64)>> {
        (1..=h as i64)
            .map(|i| {
                let row = t.rows().get(i as usize - 1).cloned().unwrap_or_default();
                let (mut x, mut y) = (1 - i, i - 1);
                let mut pts = BTreeSet::from([(x, y)]);
                for (c, &entry) in row.iter().enumerate() {
                    let b = entry as i64 + i - c as i64 - 2;
                    while y < b {
                        y += 1;
                        pts.insert((x, y));
                    }
                    x += 1;
                    pts.insert((x, y));
                }
                while y < top {
                    y += 1;
                    pts.insert((x, y));
                }
                pts
            })
            .collect()
    }

    #[test]
    fn path_family_encodes_cylindricity() {
        for h in 1..=3usize {
            for w in 1..=3usize {
                for lam in iter_family(h, Some(w), 5) {
                    for t in enumerate_cylindric(&lam, h, 99, Kind::Rst, 4) {
                        let top = (4 + 2 * h + w + 2) as i64;
                        let fam = path_family(&t, h, top);
                        for a in 0..h {
                            for b in a + 1..h {
                                assert!(fam[a].is_disjoint(&fam[b]), "{t:?}");
                            }
                        }
                        let shift = (h + w) as i64;
                        let moved: BTreeSet<(i64, i64)> =
                            fam[0].iter().map(|&(x, y)| (x - shift, y + shift)).filter(|p| p.1 <= top).collect();
                        let clear = moved.is_disjoint(&fam[h - 1]);
                        assert_eq!(clear, is_cylindric(&t, h, w, Kind::Rst).unwrap(), "{t:?} h={h} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn figure_four_transpose() {
        let tab = t(&[&[1, 1, 4, 5], &[2, 2, 5], &[3, 4]]);
        assert!(is_cylindric(&tab, 3, 2, Kind::Ssyt).unwrap());
        let tr = transpose_tableau(&tab, 3, 2).unwrap();
        assert_eq!(tr, t(&[&[1, 2, 3, 4, 5], &[1, 2, 4, 5]]));
        assert_eq!(tr.shape(), p(&[5, 4]));
        assert!(is_cylindric(&tr, 2, 3, Kind::Rst).unwrap());
        assert_eq!(
            content_path(&tr, 2),
            vec![vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 2], vec![4, 3], vec![5, 4]]
        );
        assert_eq!(transpose_tableau(&tr, 2, 3).unwrap(), tab);
    }

    #[test]
    fn transpose_round_trips_and_preserves_content() {
        let single = t(&[&[4]]);
        assert_eq!(transpose_tableau(&single, 2, 2).unwrap(), single);
        for h in 1..=3 {
            for w in 1..=3 {
                for lam in iter_family(h, Some(w), 6) {
                    for kind in [Kind::Rst, Kind::Ssyt] {
                        let other = if kind == Kind::Rst { Kind::Ssyt } else { Kind::Rst };
                        for tab in enumerate_cylindric(&lam, h, w, kind, 3) {
                            let tr = transpose_tableau(&tab, h, w).unwrap();
                            assert!(is_cylindric(&tr, w, h, other).unwrap());
                            assert_eq!(tr.content(3), tab.content(3));
                            assert_eq!(transpose_tableau(&tr, w, h).unwrap(), tab);
                        }
                    }
                }
            }
        }
        assert!(transpose_tableau(&t(&[&[1, 1, 3, 5], &[2, 2, 4], &[3, 4]]), 3, 2).is_err());
    }

    #[test]
    fn jacobi_trudi_examples() {
        for m in 0..5 {
            let jt = jacobi_trudi_sum(&p(&[m]), 1, 3, 4, None).unwrap();
            assert_eq!(jt, EPoly::e(m as i64, 4, None));
        }
        for w in 1..4 {
            let jt = jacobi_trudi_sum(&p(&[1, 1]), 2, w, 3, None).unwrap();
            let want = &EPoly::e(1, 3, None).pow(2) - &EPoly::e(2, 3, None);
            assert_eq!(jt, want);
        }
    }

    #[test]
    fn jacobi_trudi_matches_tableaux_on_figure_shape() {
        let lam = p(&[4, 3, 2]);
        let jt = jacobi_trudi_sum(&lam, 3, 2, 5, None).unwrap();
        let tab = crst_generating_function(&lam, 3, 2, 5, None).unwrap();
        assert_eq!(monomial_expand(&jt, None), tab);
    }

    #[test]
    fn jacobi_trudi_matches_tableaux_small_grid() {
        for h in 1..=3 {
            for w in 1..=3 {
                for lam in iter_family(h, Some(w), 5) {
                    for n in 1..=3 {
                        let jt = jacobi_trudi_sum(&lam, h, w, n, None).unwrap();
                        let tab = crst_generating_function(&lam, h, w, n, None).unwrap();
                        assert_eq!(monomial_expand(&jt, None), tab, "{lam} h={h} w={w} n={n}");
                        for (k, _) in jt.terms() {
                            assert_eq!(crate::epoly::key_degree(k) as usize, lam.size());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn large_width_is_classical() {
        for lam in iter_family(3, None, 5) {
            let w = lam.size().max(1);
            let jt = jacobi_trudi_sum(&lam, 3, w, 4, None).unwrap();
            let m = Matrix::from_fn(3, 3, |i, j| EPoly::e(lam.part(i + 1) as i64 - i as i64 + j as i64, 4, None));
            assert_eq!(jt, determinant(&m, &EPoly::one(4, None)).unwrap());
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(quantum_kostka(&p(&[1]), 2, 1, &[1], KostkaMethod::Tableaux).unwrap(), BigInt::one());
        assert_eq!(quantum_kostka(&p(&[1]), 2, 1, &[1], KostkaMethod::Paths).unwrap(), BigInt::one());
        let lam = p(&[5, 4]);
        let alpha = [2, 2, 1, 2, 2];
        let a = quantum_kostka(&lam, 2, 3, &alpha, KostkaMethod::Tableaux).unwrap();
        assert_eq!(a, quantum_kostka(&lam, 2, 3, &alpha, KostkaMethod::Paths).unwrap());
        assert!(a >= BigInt::one());
    }

    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn kostka_methods_agree() {
        for h in 1..=3 {
            for w in 1..=3 {
                for lam in iter_family(h, Some(w), 6) {
                    for len in 1..=3 {
                        for alpha in compositions(lam.size(), len) {
                            if alpha.iter().any(|&a| a > h) {
                                continue;
                            }
                            let a = quantum_kostka(&lam, h, w, &alpha, KostkaMethod::Tableaux).unwrap();
                            let b = quantum_kostka(&lam, h, w, &alpha, KostkaMethod::Paths).unwrap();
                            assert_eq!(a, b, "{lam} {alpha:?} h={h} w={w}");
                        }
                    }
                    let ones = vec![1; lam.size()];
                    let std = quantum_kostka(&lam, h, w, &ones, KostkaMethod::Paths).unwrap();
                    let chains = standard_tableaux(&lam)
                        .into_iter()
                        .filter(|x| is_cylindric(x, h, w, Kind::Rst).unwrap())
                        .count();
                    assert_eq!(std, BigInt::from(chains));
                }
            }
        }
    }

    #[test]
    fn csyt_examples() {
        for h in 1..=4 {
            for w in 1..=4 {
                assert_eq!(csyt_count(1, h, w, CsytMethod::ChainDp).unwrap(), BigInt::one());
            }
        }
        assert_eq!(csyt_count(2, 3, 3, CsytMethod::Brute).unwrap(), BigInt::from(2));
        assert!(csyt_count(3, 2, 3, CsytMethod::FactorialFormula).is_err());
    }

    #[test]
    fn csyt_methods_agree_and_are_symmetric() {
        for n in 0..=7 {
            for h in 1..=4 {
                for w in 1..=4 {
                    let dp = csyt_count(n, h, w, CsytMethod::ChainDp).unwrap();
                    assert_eq!(dp, csyt_count(n, h, w, CsytMethod::Brute).unwrap());
                    assert_eq!(dp, csyt_count(n, w, h, CsytMethod::ChainDp).unwrap());
                    if h % 2 == 1 && w % 2 == 1 {
                        assert_eq!(dp, csyt_count(n, h, w, CsytMethod::FactorialFormula).unwrap(), "n={n} h={h} w={w}");
                    }
                }
            }
        }
    }
}
