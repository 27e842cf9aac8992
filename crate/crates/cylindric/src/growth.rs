//! Fomin growth diagrams on a square or a staircase triangle of cells.
//!
//! Cells are `(x, y)` with `x` the column and `y` the row, both counted from
//! 1 at the bottom-left. Lattice points `(a, b)` are cell corners; the cell
//! `(x, y)` has corners `(x−1, y−1)` (SW), `(x−1, y)` (NW), `(x, y−1)` (SE)
//! and `(x, y)` (NE). Labels grow to the north and to the east.
//!
//! A matching on `{1, …, n}` is drawn in a triangle with a cross at
//! `(i, n+1−j)` for every arc `(i, j)`. The plain triangle has the cells with
//! `x + y ≤ n`; its right-down staircase `λ⁰, λ¹, …, λ^{2n}` has `λ^{2k}` at
//! `(k, n−k)` and `λ^{2k+1}` at the inner corner `(k, n−k−1)`. The triangle
//! with diagonal adds the cells `x + y = n + 1`, where every fixed point `v`
//! gets a cross at `(v, n+1−v)`; there `λ^{2k+1}` sits at the outer corner
//! `(k+1, n−k)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{conjugate, Partition};
use crate::tableaux::Tableau;
use crate::walks_matchings::{crossing_nesting_profile, Half, Matching, VacillatingTableau, VtVariant};

pub type Cell = (usize, usize);
pub type Point = (usize, usize);

/// The cell arrangement a diagram lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "region", content = "n", rename_all = "snake_case")]
pub enum Region {
    /// `n × n` cells.
    Square(usize),
    /// Cells with `x + y ≤ n`.
    Triangle(usize),
    /// Cells with `x + y ≤ n + 1`.
    TriangleWithDiagonal(usize),
}

impl Region {
    pub fn n(self) -> usize {
        match self {
            Region::Square(n) | Region::Triangle(n) | Region::TriangleWithDiagonal(n) => n,
        }
    }

    pub fn contains_cell(self, (x, y): Cell) -> bool {
        match self {
            Region::Square(n) => (1..=n).contains(&x) && (1..=n).contains(&y),
            Region::Triangle(n) => x >= 1 && y >= 1 && x + y <= n,
            Region::TriangleWithDiagonal(n) => x >= 1 && y >= 1 && x + y <= n + 1,
        }
    }

    /// Cells in column-major order, each column bottom to top.
    fn cells(self) -> Vec<Cell> {
        let n = self.n();
        let mut out = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                if self.contains_cell((x, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// A growth diagram after a forward or backward pass: the crosses and a
/// partition at every lattice point of the region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    region: Region,
    crosses: BTreeSet<Cell>,
    labels: BTreeMap<Point, Partition>,
}

#[derive(Serialize)]
struct DiagramDump<'a> {
    #[serde(flatten)]
    region: Region,
    crosses: Vec<[usize; 2]>,
    labels: Vec<([usize; 2], &'a Partition)>,
}

impl GrowthDiagram {
    pub fn region(&self) -> Region {
        self.region
    }

    pub fn crosses(&self) -> &BTreeSet<Cell> {
        &self.crosses
    }

    pub fn label(&self, p: Point) -> Option<&Partition> {
        self.labels.get(&p)
    }

    pub fn labels(&self) -> &BTreeMap<Point, Partition> {
        &self.labels
    }

    /// Labels `(x, n)` for `x = 0..=n` of a square diagram.
    pub fn top(&self) -> Vec<Partition> {
        let n = self.region.n();
        (0..=n).map(|x| self.labels[&(x, n)].clone()).collect()
    }

    /// Labels `(n, y)` for `y = 0..=n` of a square diagram.
    pub fn right(&self) -> Vec<Partition> {
        let n = self.region.n();
        (0..=n).map(|y| self.labels[&(n, y)].clone()).collect()
    }

    /// The `2n + 1` labels along the right-down boundary of a triangle.
    pub fn staircase(&self) -> Vec<Partition> {
        staircase_points(self.region).into_iter().map(|p| self.labels[&p].clone()).collect()
    }

    pub fn to_json(&self) -> String {
        let dump = DiagramDump {
            region: self.region,
            crosses: self.crosses.iter().map(|&(x, y)| [x, y]).collect(),
            labels: self.labels.iter().map(|(&(a, b), p)| ([a, b], p)).collect(),
        };
        serde_json::to_string(&dump).expect("diagrams serialize")
    }
}

fn staircase_points(region: Region) -> Vec<Point> {
    let n = region.n();
    let mut out = vec![(0, n)];
    for k in 1..=n {
        match region {
            Region::TriangleWithDiagonal(_) => out.push((k, n + 1 - k)),
            _ => out.push((k - 1, n - k)),
        }
        out.push((k, n - k));
    }
    out
}

/// `shape` plus one cell at the end of 1-based row `r`.
fn add_cell(shape: &Partition, r: usize) -> Result<Partition> {
    let mut parts = shape.padded(r.max(shape.len()));
    parts[r - 1] += 1;
    Partition::new(parts)
}

fn remove_cell(shape: &Partition, r: usize) -> Result<Partition> {
    let mut parts = shape.parts().to_vec();
    match parts.get_mut(r - 1) {
        Some(p) if *p > 0 => *p -= 1,
        _ => return Err(Error::InvalidPartition(format!("{shape} has no cell in row {r}"))),
    }
    Partition::new(parts)
}

/// Row of the single cell of `big / small`, if `big` covers `small`.
fn added_row(small: &Partition, big: &Partition) -> Option<usize> {
    if big.size() != small.size() + 1 || !small.contained_in(big) {
        return None;
    }
    (1..=big.len()).find(|&r| big.part(r) != small.part(r))
}

fn covers_or_equal(small: &Partition, big: &Partition) -> bool {
    small == big || added_row(small, big).is_some()
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    let parts = a.padded(len).into_iter().zip(b.padded(len)).map(|(p, q)| p.max(q)).collect();
    Partition::new(parts).expect("union of partitions")
}

fn intersection(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    let parts = a.padded(len).into_iter().zip(b.padded(len)).map(|(p, q)| p.min(q)).collect();
    Partition::new(parts).expect("intersection of partitions")
}

/// Forward local rule: the NE label of a cell from its SW (`rho`), NW
/// (`mu`) and SE (`nu`) labels and whether the cell holds a cross.
pub fn forward_rule(rho: &Partition, mu: &Partition, nu: &Partition, cross: bool) -> Result<Partition> {
    if !covers_or_equal(rho, mu) || !covers_or_equal(rho, nu) {
        return Err(Error::Shape(format!("labels {rho}, {mu}, {nu} do not grow by single cells")));
    }
    if cross {
        if mu != rho || nu != rho {
            return Err(Error::Shape("a cross shares its row or column with another cross".into()));
        }
        return add_cell(rho, 1);
    }
    if mu != nu {
        return Ok(union(mu, nu));
    }
    match added_row(rho, mu) {
        None => Ok(rho.clone()),
        Some(r) => add_cell(mu, r + 1),
    }
}

/// Backward local rule: the SW label and the cross flag from the NE
/// (`lambda`), NW (`mu`) and SE (`nu`) labels. A pinned cell is forced to
/// carry a cross with SW equal to NW.
pub fn backward_rule(lambda: &Partition, mu: &Partition, nu: &Partition, pinned: bool) -> Result<(Partition, bool)> {
    if !covers_or_equal(mu, lambda) || !covers_or_equal(nu, lambda) {
        return Err(Error::Shape(format!("labels {mu}, {nu}, {lambda} do not grow by single cells")));
    }
    if pinned {
        if mu != nu {
            return Err(Error::Shape(format!("pinned cell between different labels {mu} and {nu}")));
        }
        return Ok((mu.clone(), true));
    }
    if mu != nu {
        return Ok((intersection(mu, nu), false));
    }
    let out = match added_row(mu, lambda) {
        None => (lambda.clone(), false),
        Some(1) => (mu.clone(), true),
        Some(r) => (remove_cell(mu, r - 1)?, false),
    };
    debug_assert_eq!(&forward_rule(&out.0, mu, nu, out.1)?, lambda);
    Ok(out)
}

/// Labels every lattice point of the region, starting from empty labels on
/// the south and west sides.
pub fn growth_forward(region: Region, crosses: &BTreeSet<Cell>) -> Result<GrowthDiagram> {
    let n = region.n();
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for &(x, y) in crosses {
        if !region.contains_cell((x, y)) {
            return Err(Error::Shape(format!("cross ({x},{y}) outside the region")));
        }
        if !cols.insert(x) || !rows.insert(y) {
            return Err(Error::Shape(format!("two crosses in the row or column of ({x},{y})")));
        }
    }
    let mut labels = BTreeMap::new();
    for a in 0..=n + 1 {
        labels.insert((a, 0), Partition::empty());
        labels.insert((0, a), Partition::empty());
    }
    for (x, y) in region.cells() {
        let ne = forward_rule(&labels[&(x - 1, y - 1)], &labels[&(x - 1, y)], &labels[&(x, y - 1)], crosses.contains(&(x, y)))?;
        labels.insert((x, y), ne);
    }
    labels.retain(|&(a, b), _| a == 0 && b <= n || b == 0 && a <= n || a > 0 && b > 0 && region.contains_cell((a, b)));
    Ok(GrowthDiagram { region, crosses: crosses.clone(), labels })
}

/// Labels on the north-east boundary of a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Labels `(x, n)` for `x = 0..=n` and `(n, y)` for `y = 0..=n`.
    Square { top: Vec<Partition>, right: Vec<Partition> },
    /// The `2n + 1` labels of the right-down staircase of a triangle.
    Staircase { diagonal: bool, labels: Vec<Partition> },
}

/// Recovers the crosses and the interior labels from the boundary. Every
/// label on the south and west sides must come out empty.
pub fn growth_backward(boundary: &Boundary, pinned: &BTreeSet<Cell>) -> Result<GrowthDiagram> {
    let mut labels = BTreeMap::new();
    let region = match boundary {
        Boundary::Square { top, right } => {
            let n = top.len().checked_sub(1).ok_or_else(|| Error::Shape("empty boundary".into()))?;
            if right.len() != n + 1 || top[n] != right[n] {
                return Err(Error::Shape("top and right boundaries do not meet".into()));
            }
            for k in 0..=n {
                labels.insert((k, n), top[k].clone());
                labels.insert((n, k), right[k].clone());
            }
            Region::Square(n)
        }
        Boundary::Staircase { diagonal, labels: chain } => {
            if chain.len() % 2 == 0 {
                return Err(Error::Shape("a staircase has an odd number of labels".into()));
            }
            let n = chain.len() / 2;
            let region = if *diagonal { Region::TriangleWithDiagonal(n) } else { Region::Triangle(n) };
            for (p, shape) in staircase_points(region).into_iter().zip(chain) {
                labels.insert(p, shape.clone());
            }
            region
        }
    };
    let mut cells = region.cells();
    cells.reverse();
    let mut crosses = BTreeSet::new();
    for (x, y) in cells {
        let (sw, cross) = backward_rule(&labels[&(x, y)], &labels[&(x - 1, y)], &labels[&(x, y - 1)], pinned.contains(&(x, y)))?;
        if cross {
            crosses.insert((x, y));
        }
        match labels.get(&(x - 1, y - 1)) {
            Some(old) if *old != sw => return Err(Error::Shape(format!("inconsistent labels at ({},{})", x - 1, y - 1))),
            _ => labels.insert((x - 1, y - 1), sw),
        };
    }
    if let Some((p, _)) = labels.iter().find(|(&(a, b), l)| (a == 0 || b == 0) && !l.is_empty()) {
        return Err(Error::Shape(format!("boundary does not close: label at {p:?} is not empty")));
    }
    Ok(GrowthDiagram { region, crosses, labels })
}

/// Whether the SYT/matching bijection uses `2h + 1` or `2h` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    /// `SYT_n(2h+1) ↔ NNest_n(h+1)`; fixed points are dropped in triangles.
    Odd,
    /// `SYT_n(2h) ↔ NNest_n(h+1/2)`; fixed points stay on the diagonal.
    Even,
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            _ => Err(Error::Parse(format!("parity must be odd or even, got {s:?}"))),
        }
    }
}

impl Parity {
    fn row_bound(self, h: usize) -> usize {
        match self {
            Parity::Odd => 2 * h + 1,
            Parity::Even => 2 * h,
        }
    }

    /// The nesting bound `h + 1` or `h + 1/2`.
    fn nesting_bound(self, h: usize) -> Half {
        match self {
            Parity::Odd => Half::int(h as u32 + 1),
            Parity::Even => Half::plus_half(h as u32),
        }
    }
}

fn check_nesting(m: &Matching, parity: Parity, h: usize) -> Result<()> {
    let bound = parity.nesting_bound(h);
    if crossing_nesting_profile(m).in_ncnn(None, Some(bound)) {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("{m} has a {bound}-nesting")))
    }
}

fn standard_chain(t: &Tableau) -> Result<Vec<Partition>> {
    let n = t.shape().size();
    let mut seen = vec![false; n + 1];
    for &e in t.rows().iter().flatten() {
        let e = e as usize;
        if e > n || std::mem::replace(&mut seen[e], true) {
            return Err(Error::MalformedTableau("entries must be 1..n, each once".into()));
        }
    }
    if !t.is_kind(crate::tableaux::Kind::Ssyt) {
        return Err(Error::MalformedTableau("rows and columns must increase".into()));
    }
    Ok((0..=n)
        .map(|k| Partition::new(t.rows().iter().map(|r| r.iter().filter(|&&e| e as usize <= k).count()).collect()).expect("standard"))
        .collect())
}

fn tableau_from_chain(chain: &[Partition]) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, pair) in chain.windows(2).enumerate() {
        let r = added_row(&pair[0], &pair[1]).expect("a growing chain");
        if rows.len() < r {
            rows.push(Vec::new());
        }
        rows[r - 1].push(k as u32 + 1);
    }
    Tableau::new(rows).expect("standard tableau")
}

/// The standard tableau `T` with at most `2h + 1` (odd) or `2h` (even)
/// rows, sent to the matching whose involution has `T` as its
/// Robinson-Schensted tableau.
pub fn syt_to_matching(t: &Tableau, parity: Parity, h: usize) -> Result<Matching> {
    let chain = standard_chain(t)?;
    if t.shape().len() > parity.row_bound(h) {
        return Err(Error::OutOfDomain(format!("{} rows exceed {}", t.shape().len(), parity.row_bound(h))));
    }
    let n = chain.len() - 1;
    let d = growth_backward(&Boundary::Square { top: chain.clone(), right: chain }, &BTreeSet::new())?;
    let arcs = d
        .crosses()
        .iter()
        .map(|&(x, y)| (n + 1 - y, n + 1 - x))
        .filter(|(i, j)| i < j)
        .collect();
    Matching::new(n, arcs)
}

fn square_crosses(m: &Matching) -> BTreeSet<Cell> {
    let n = m.n();
    let mut crosses: BTreeSet<Cell> = m.fixed_points().into_iter().map(|v| (n + 1 - v, n + 1 - v)).collect();
    for &(i, j) in m.arcs() {
        crosses.insert((n + 1 - j, n + 1 - i));
        crosses.insert((n + 1 - i, n + 1 - j));
    }
    crosses
}

/// Inverse of [`syt_to_matching`].
pub fn matching_to_syt(m: &Matching, parity: Parity, h: usize) -> Result<Tableau> {
    check_nesting(m, parity, h)?;
    let d = growth_forward(Region::Square(m.n()), &square_crosses(m))?;
    Ok(tableau_from_chain(&d.top()))
}

/// Crosses of a matching in the triangle, with or without the diagonal
/// crosses of its fixed points.
pub fn triangle_crosses(m: &Matching, keep_fixed: bool) -> BTreeSet<Cell> {
    let n = m.n();
    let mut crosses: BTreeSet<Cell> = m.arcs().iter().map(|&(i, j)| (i, n + 1 - j)).collect();
    if keep_fixed {
        crosses.extend(m.fixed_points().into_iter().map(|v| (v, n + 1 - v)));
    }
    crosses
}

/// Forward pass over the plain triangle, or over the triangle with
/// diagonal when fixed points are kept.
pub fn triangle_diagram(m: &Matching, keep_fixed: bool) -> Result<GrowthDiagram> {
    let region = if keep_fixed { Region::TriangleWithDiagonal(m.n()) } else { Region::Triangle(m.n()) };
    growth_forward(region, &triangle_crosses(m, keep_fixed))
}

/// The full staircase `λ⁰, …, λ^{2n}` of the forward pass.
pub fn triangle_staircase(m: &Matching, keep_fixed: bool) -> Result<Vec<Partition>> {
    Ok(triangle_diagram(m, keep_fixed)?.staircase())
}

/// `λ⁰, λ², …, λ^{2n}`. These do not depend on the diagonal crosses.
pub(crate) fn even_staircase(m: &Matching, keep_fixed: bool) -> Result<Vec<Partition>> {
    Ok(triangle_staircase(m, keep_fixed)?.into_iter().step_by(2).collect())
}

/// Rebuilds the odd staircase labels from the even ones. Where neighbours
/// differ, the inner corner carries the smaller one and the outer corner the
/// larger. A repeated label is kept, except on the diagonal where the fixed
/// point's cross adds a cell to the first row.
fn full_staircase(even: &[Partition], diagonal: bool) -> Result<Vec<Partition>> {
    let mut out = vec![even.first().cloned().ok_or_else(|| Error::Shape("empty staircase".into()))?];
    for pair in even.windows(2) {
        let (small, big) = if pair[0].size() <= pair[1].size() { (&pair[0], &pair[1]) } else { (&pair[1], &pair[0]) };
        let odd = if small == big {
            if diagonal {
                add_cell(small, 1)?
            } else {
                small.clone()
            }
        } else if covers_or_equal(small, big) {
            if diagonal { big.clone() } else { small.clone() }
        } else {
            return Err(Error::Shape(format!("{} and {} differ by more than one cell", pair[0], pair[1])));
        };
        out.push(odd);
        out.push(pair[1].clone());
    }
    Ok(out)
}

fn matching_from_crosses(n: usize, crosses: &BTreeSet<Cell>) -> Result<Matching> {
    let arcs = crosses.iter().filter(|&&(x, y)| x + y <= n).map(|&(x, y)| (x, n + 1 - y)).collect();
    Matching::new(n, arcs)
}

pub(crate) fn matching_from_even_staircase(even: &[Partition], keep_fixed: bool) -> Result<Matching> {
    let labels = full_staircase(even, keep_fixed)?;
    let d = growth_backward(&Boundary::Staircase { diagonal: keep_fixed, labels }, &BTreeSet::new())?;
    matching_from_crosses(even.len() - 1, d.crosses())
}

/// `NNest_n(h+1) → VT_n(h)` (odd) or `NNest_n(h+1/2) → VT_n(h*)` (even):
/// the even staircase labels of the forward pass, conjugated.
pub fn matching_vt(m: &Matching, parity: Parity, h: usize) -> Result<VacillatingTableau> {
    check_nesting(m, parity, h)?;
    let chain = even_staircase(m, parity == Parity::Even)?.iter().map(conjugate).collect();
    let variant = match parity {
        Parity::Odd => VtVariant::Plain,
        Parity::Even => VtVariant::HStar,
    };
    VacillatingTableau::new(chain, h, None, variant)
}

/// Inverse of [`matching_vt`].
pub fn vt_matching(t: &VacillatingTableau, parity: Parity) -> Result<Matching> {
    let even: Vec<Partition> = t.chain().iter().map(conjugate).collect();
    let m = matching_from_even_staircase(&even, parity == Parity::Even)?;
    check_nesting(&m, parity, t.h())?;
    Ok(m)
}

/// Exchanges crossings and nestings: forward pass with the fixed points on
/// the diagonal, conjugate the staircase, and run the backward pass with the
/// fixed-point cells pinned.
pub fn ncnn_symmetry(m: &Matching) -> Result<Matching> {
    let n = m.n();
    let labels: Vec<Partition> = triangle_staircase(m, true)?.iter().map(conjugate).collect();
    let pinned: BTreeSet<Cell> = m.fixed_points().into_iter().map(|v| (v, n + 1 - v)).collect();
    let d = growth_backward(&Boundary::Staircase { diagonal: true, labels }, &pinned)?;
    matching_from_crosses(n, d.crosses())
}

/// Longest chains of crosses inside the rectangle `[1, a] × [1, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NEChainStats {
    /// Both coordinates strictly increasing.
    pub ne: usize,
    /// `x` increasing, `y` decreasing.
    pub se: usize,
}

pub fn greene_chains(crosses: &BTreeSet<Cell>, a: usize, b: usize) -> NEChainStats {
    let inside: Vec<Cell> = crosses.iter().copied().filter(|&(x, y)| x <= a && y <= b).collect();
    let longest = |up: bool| {
        let mut best = vec![1usize; inside.len()];
        for k in 0..inside.len() {
            for l in 0..k {
                let (p, q) = (inside[l], inside[k]);
                if p.0 < q.0 && (if up { p.1 < q.1 } else { p.1 > q.1 }) {
                    best[k] = best[k].max(best[l] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    };
    NEChainStats { ne: longest(true), se: longest(false) }
}
