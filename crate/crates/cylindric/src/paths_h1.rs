//! Lattice paths for a single row pair: walks in a triangle, bounded
//! Motzkin paths and their subfamilies, Dyck prefixes and up-down paths,
//! with the maps that connect them.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tableaux::{is_cylindric, Kind, Tableau};
use crate::walks_matchings::{crossing_nesting_profile, Matching};

fn parse_steps<S>(s: &str, letters: &[(char, S)]) -> Result<Vec<S>>
where
    S: Copy,
{
    s.chars()
        .map(|c| {
            letters
                .iter()
                .find(|(l, _)| *l == c.to_ascii_uppercase())
                .map(|&(_, st)| st)
                .ok_or_else(|| Error::Parse(format!("unexpected step letter {c:?} in {s:?}")))
        })
        .collect()
}

/// Steps of a triangle walk: `R = (1,0)`, `U = (0,1)`, `B = (−1,−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TStep {
    R,
    U,
    B,
}

const T_LETTERS: [(char, TStep); 3] = [('R', TStep::R), ('U', TStep::U), ('B', TStep::B)];

/// A walk from the origin with steps `R`, `U`, `B`, inside
/// `{m ≥ x₁ ≥ x₂ ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleWalk {
    steps: Vec<TStep>,
    m: usize,
}

impl TriangleWalk {
    pub fn new(steps: Vec<TStep>, m: usize) -> Result<Self> {
        let (mut x1, mut x2) = (0i64, 0i64);
        for (k, s) in steps.iter().enumerate() {
            match s {
                TStep::R => x1 += 1,
                TStep::U => x2 += 1,
                TStep::B => {
                    x1 -= 1;
                    x2 -= 1;
                }
            }
            if !(m as i64 >= x1 && x1 >= x2 && x2 >= 0) {
                return Err(Error::InvalidPath(format!("step {} leaves the triangle of size {m}", k + 1)));
            }
        }
        Ok(TriangleWalk { steps, m })
    }

    pub fn parse(s: &str, m: usize) -> Result<Self> {
        TriangleWalk::new(parse_steps(s, &T_LETTERS)?, m)
    }

    pub fn steps(&self) -> &[TStep] {
        &self.steps
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

impl fmt::Display for TriangleWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{s:?}"))
    }
}

/// Steps of a Motzkin path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MStep {
    U,
    D,
    H,
}

const M_LETTERS: [(char, MStep); 3] = [('U', MStep::U), ('D', MStep::D), ('H', MStep::H)];

impl MStep {
    fn delta(self) -> i64 {
        match self {
            MStep::U => 1,
            MStep::D => -1,
            MStep::H => 0,
        }
    }
}

/// Subfamilies of `Mot_n(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MotzkinVariant {
    /// `Mot_n(w)`.
    All,
    /// `Mot'_n(w)`: no horizontal step at height `w`.
    NoTopH,
    /// `Mot¹_n(w)`: horizontal steps only at height 0.
    BottomH,
    /// `Mot²_n(w)`: horizontal steps only at heights 0 and `w`.
    BottomOrTopH,
    /// `Mot³_n(w)`: members of `Mot²` without special horizontal steps.
    NoSpecial,
}

impl MotzkinVariant {
    pub const ALL: [MotzkinVariant; 5] = [
        MotzkinVariant::All,
        MotzkinVariant::NoTopH,
        MotzkinVariant::BottomH,
        MotzkinVariant::BottomOrTopH,
        MotzkinVariant::NoSpecial,
    ];
}

/// A Motzkin path of height at most `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<MStep>,
    w: usize,
}

impl MotzkinPath {
    pub fn new(steps: Vec<MStep>, w: usize) -> Result<Self> {
        let mut y = 0i64;
        for (k, s) in steps.iter().enumerate() {
            y += s.delta();
            if y < 0 || y > w as i64 {
                return Err(Error::InvalidPath(format!("step {} leaves the strip 0..={w}", k + 1)));
            }
        }
        if y != 0 {
            return Err(Error::InvalidPath("a Motzkin path ends on the axis".into()));
        }
        Ok(MotzkinPath { steps, w })
    }

    pub fn parse(s: &str, w: usize) -> Result<Self> {
        MotzkinPath::new(parse_steps(s, &M_LETTERS)?, w)
    }

    pub fn steps(&self) -> &[MStep] {
        &self.steps
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn heights(&self) -> Vec<usize> {
        heights_of(&self.steps)
    }

    /// Number of horizontal steps at height `w`.
    pub fn k(&self) -> usize {
        let h = self.heights();
        self.steps.iter().zip(&h).filter(|&(&s, &y)| s == MStep::H && y == self.w).count()
    }

    /// 0-based indices `j` of the special horizontal steps `p_j → p_{j+1}`.
    ///
    /// A step at height `w` is special. A step at height 0 is special when
    /// the path before it has only bottom horizontal steps, an even number
    /// of them, and the path after it climbs to `w` by up and down steps
    /// alone.
    pub fn special_steps(&self) -> Vec<usize> {
        let h = self.heights();
        let w = self.w;
        let n = self.steps.len();
        let mut out = Vec::new();
        for j in 0..n {
            if self.steps[j] != MStep::H {
                continue;
            }
            if h[j] == w {
                out.push(j);
                continue;
            }
            if h[j] != 0 {
                continue;
            }
            let prefix_h: Vec<usize> = (0..j).filter(|&t| self.steps[t] == MStep::H).collect();
            if prefix_h.iter().any(|&t| h[t] != 0) || prefix_h.len() % 2 == 1 {
                continue;
            }
            if climbs_to(&self.steps, &h, j + 1, w).is_some() {
                out.push(j);
            }
        }
        out
    }

    pub fn is_in(&self, variant: MotzkinVariant) -> bool {
        let h = self.heights();
        let flats = || self.steps.iter().zip(&h).filter(|(&s, _)| s == MStep::H).map(|(_, &y)| y);
        match variant {
            MotzkinVariant::All => true,
            MotzkinVariant::NoTopH => flats().all(|y| y != self.w),
            MotzkinVariant::BottomH => flats().all(|y| y == 0),
            MotzkinVariant::BottomOrTopH => flats().all(|y| y == 0 || y == self.w),
            MotzkinVariant::NoSpecial => self.is_in(MotzkinVariant::BottomOrTopH) && self.special_steps().is_empty(),
        }
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{s:?}"))
    }
}

fn heights_of(steps: &[MStep]) -> Vec<usize> {
    let mut out = vec![0usize];
    for s in steps {
        let y = *out.last().expect("starts at 0") as i64 + s.delta();
        out.push(y as usize);
    }
    out
}

/// First index `i + 1 > start` such that the steps from `start` to `i + 1`
/// are all up or down and end at height `w`.
fn climbs_to(steps: &[MStep], h: &[usize], start: usize, w: usize) -> Option<usize> {
    (start..steps.len()).take_while(|&t| steps[t] != MStep::H).map(|t| t + 1).find(|&e| h[e] == w)
}

/// Up or down step of a Dyck prefix or an up-down path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ud {
    U,
    D,
}

const UD_LETTERS: [(char, Ud); 2] = [('U', Ud::U), ('D', Ud::D)];

fn ud_heights(steps: &[Ud]) -> Vec<i64> {
    let mut out = vec![0i64];
    for s in steps {
        let y = out.last().expect("starts at 0") + if *s == Ud::U { 1 } else { -1 };
        out.push(y);
    }
    out
}

fn ud_string(steps: &[Ud]) -> String {
    steps.iter().map(|s| if *s == Ud::U { 'U' } else { 'D' }).collect()
}

/// A prefix of a Dyck path with heights in `0..=w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPrefix {
    steps: Vec<Ud>,
    w: usize,
}

impl DyckPrefix {
    pub fn new(steps: Vec<Ud>, w: usize) -> Result<Self> {
        if ud_heights(&steps).iter().any(|&y| y < 0 || y > w as i64) {
            return Err(Error::InvalidPath(format!("a Dyck prefix stays in 0..={w}")));
        }
        Ok(DyckPrefix { steps, w })
    }

    pub fn parse(s: &str, w: usize) -> Result<Self> {
        DyckPrefix::new(parse_steps(s, &UD_LETTERS)?, w)
    }

    pub fn steps(&self) -> &[Ud] {
        &self.steps
    }

    pub fn heights(&self) -> Vec<i64> {
        ud_heights(&self.steps)
    }
}

impl fmt::Display for DyckPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ud_string(&self.steps))
    }
}

fn gd_bounds(w: usize) -> (i64, i64) {
    (-((w / 2) as i64), w.div_ceil(2) as i64)
}

/// An up-down path of length `n` ending at height `n mod 2`, with heights
/// in `[−⌊w/2⌋, ⌊(w+1)/2⌋]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownPath {
    steps: Vec<Ud>,
    w: usize,
}

impl UpDownPath {
    pub fn new(steps: Vec<Ud>, w: usize) -> Result<Self> {
        let h = ud_heights(&steps);
        let (lo, hi) = gd_bounds(w);
        if h.iter().any(|&y| y < lo || y > hi) {
            return Err(Error::InvalidPath(format!("an up-down path stays in {lo}..={hi}")));
        }
        if *h.last().expect("nonempty") != (steps.len() % 2) as i64 {
            return Err(Error::InvalidPath("an up-down path ends at height n mod 2".into()));
        }
        Ok(UpDownPath { steps, w })
    }

    pub fn parse(s: &str, w: usize) -> Result<Self> {
        UpDownPath::new(parse_steps(s, &UD_LETTERS)?, w)
    }

    pub fn steps(&self) -> &[Ud] {
        &self.steps
    }

    pub fn heights(&self) -> Vec<i64> {
        ud_heights(&self.steps)
    }
}

impl fmt::Display for UpDownPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ud_string(&self.steps))
    }
}

/// The path families that can be counted and listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `T_n(m)`.
    Triangle,
    Motzkin(MotzkinVariant),
    /// `DP_n(w)`.
    DyckPrefix,
    /// `GD_n(w)`.
    UpDown,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Triangle,
        Family::Motzkin(MotzkinVariant::All),
        Family::Motzkin(MotzkinVariant::NoTopH),
        Family::Motzkin(MotzkinVariant::BottomH),
        Family::Motzkin(MotzkinVariant::BottomOrTopH),
        Family::Motzkin(MotzkinVariant::NoSpecial),
        Family::DyckPrefix,
        Family::UpDown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Triangle => "T",
            Family::Motzkin(MotzkinVariant::All) => "Mot",
            Family::Motzkin(MotzkinVariant::NoTopH) => "Mot'",
            Family::Motzkin(MotzkinVariant::BottomH) => "Mot1",
            Family::Motzkin(MotzkinVariant::BottomOrTopH) => "Mot2",
            Family::Motzkin(MotzkinVariant::NoSpecial) => "Mot3",
            Family::DyckPrefix => "DP",
            Family::UpDown => "GD",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s.to_ascii_lowercase().as_str() {
            "triangle" => Some(Family::Triangle),
            "motzkin" => Some(Family::Motzkin(MotzkinVariant::All)),
            "mot_prime" => Some(Family::Motzkin(MotzkinVariant::NoTopH)),
            "dyck_prefix" => Some(Family::DyckPrefix),
            "up_down" => Some(Family::UpDown),
            _ => None,
        };
        alias
            .or_else(|| Family::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s)))
            .ok_or_else(|| Error::Parse(format!("unknown path family {s:?}")))
    }
}

/// Sums `weight` over all step sequences of length `n` by a transfer over
/// states. `step` returns the successor state and a sign, or `None` when
/// the step is forbidden.
fn transfer<St, S>(
    n: usize,
    start: St,
    letters: &[S],
    step: impl Fn(&St, S) -> Option<(St, i32)>,
    accept: impl Fn(&St) -> bool,
) -> BigInt
where
    St: Clone + Eq + Hash,
    S: Copy,
{
    let mut layer: HashMap<St, BigInt> = HashMap::from([(start, BigInt::one())]);
    for _ in 0..n {
        let mut next: HashMap<St, BigInt> = HashMap::new();
        for (st, c) in &layer {
            for &l in letters {
                if let Some((to, sign)) = step(st, l) {
                    let e = next.entry(to).or_insert_with(BigInt::zero);
                    if sign < 0 {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
        }
        layer = next;
    }
    layer.into_iter().filter(|(st, _)| accept(st)).map(|(_, c)| c).sum()
}

fn motzkin_transfer(n: usize, w: usize, variant: MotzkinVariant, signed: bool) -> BigInt {
    let w = w as i64;
    let letters = [MStep::U, MStep::D, MStep::H];
    if variant == MotzkinVariant::NoSpecial {
        // State: height, parity of the number of horizontal steps, and
        // whether the last horizontal step had an even number before it
        // (then reaching `w` before the next one would make it special).
        return transfer(
            n,
            (0i64, false, false),
            &letters,
            |&(y, odd, armed), s| match s {
                MStep::H if y == 0 && y != w => Some(((0, !odd, !odd), 1)),
                MStep::H => None,
                _ => {
                    let y2 = y + s.delta();
                    (y2 >= 0 && y2 <= w && !(armed && y2 == w)).then_some(((y2, odd, armed), 1))
                }
            },
            |st| st.0 == 0,
        );
    }
    transfer(
        n,
        0i64,
        &letters,
        |&y, s| {
            let y2 = y + s.delta();
            if y2 < 0 || y2 > w {
                return None;
            }
            if s != MStep::H {
                return Some((y2, 1));
            }
            let (bottom, top) = (y == 0, y == w);
            let allowed = match variant {
                MotzkinVariant::All => true,
                MotzkinVariant::NoTopH => !top,
                MotzkinVariant::BottomH => bottom,
                MotzkinVariant::BottomOrTopH => bottom || top,
                MotzkinVariant::NoSpecial => unreachable!("handled above"),
            };
            let sign = if signed && top { -1 } else { 1 };
            allowed.then_some((y, sign))
        },
        |&y| y == 0,
    )
}

/// Size of a family of paths of length `n`, by a transfer over heights (or
/// points of the triangle).
pub fn count_family(family: Family, n: usize, bound: usize) -> BigInt {
    let b = bound as i64;
    match family {
        Family::Triangle => transfer(
            n,
            (0i64, 0i64),
            &[TStep::R, TStep::U, TStep::B],
            |&(x1, x2), s| {
                let (a, c) = match s {
                    TStep::R => (x1 + 1, x2),
                    TStep::U => (x1, x2 + 1),
                    TStep::B => (x1 - 1, x2 - 1),
                };
                (b >= a && a >= c && c >= 0).then_some(((a, c), 1))
            },
            |_| true,
        ),
        Family::Motzkin(v) => motzkin_transfer(n, bound, v, false),
        Family::DyckPrefix => transfer(
            n,
            0i64,
            &[Ud::U, Ud::D],
            |&y, s| {
                let y2 = y + if s == Ud::U { 1 } else { -1 };
                (0..=b).contains(&y2).then_some((y2, 1))
            },
            |_| true,
        ),
        Family::UpDown => {
            let (lo, hi) = gd_bounds(bound);
            transfer(
                n,
                0i64,
                &[Ud::U, Ud::D],
                |&y, s| {
                    let y2 = y + if s == Ud::U { 1 } else { -1 };
                    (lo..=hi).contains(&y2).then_some((y2, 1))
                },
                |&y| y == (n % 2) as i64,
            )
        }
    }
}

/// `Σ (−1)^{k(p)}` over `Mot²_n(w)`.
pub fn motzkin_signed_sum(n: usize, w: usize) -> BigInt {
    motzkin_transfer(n, w, MotzkinVariant::BottomOrTopH, true)
}

/// Every step word of length `n` over `letters` accepted by `valid`, with
/// pruning on prefixes.
fn words<S: Copy>(n: usize, letters: &[S], prefix_ok: &dyn Fn(&[S]) -> bool) -> Vec<Vec<S>> {
    fn go<S: Copy>(n: usize, letters: &[S], cur: &mut Vec<S>, ok: &dyn Fn(&[S]) -> bool, out: &mut Vec<Vec<S>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for &l in letters {
            cur.push(l);
            if ok(cur) {
                go(n, letters, cur, ok, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, letters, &mut Vec::new(), prefix_ok, &mut out);
    out
}

pub fn enumerate_triangle(n: usize, m: usize) -> Vec<TriangleWalk> {
    words(n, &[TStep::R, TStep::U, TStep::B], &|p| TriangleWalk::new(p.to_vec(), m).is_ok())
        .into_iter()
        .map(|s| TriangleWalk { steps: s, m })
        .collect()
}

pub fn enumerate_motzkin(n: usize, w: usize, variant: MotzkinVariant) -> Vec<MotzkinPath> {
    let ok = |p: &[MStep]| {
        let mut y = 0i64;
        p.iter().all(|s| {
            y += s.delta();
            y >= 0 && y <= w as i64
        }) && y <= (n - p.len()) as i64
    };
    words(n, &[MStep::U, MStep::D, MStep::H], &ok)
        .into_iter()
        .filter_map(|s| MotzkinPath::new(s, w).ok())
        .filter(|p| p.is_in(variant))
        .collect()
}

pub fn enumerate_dyck_prefixes(n: usize, w: usize) -> Vec<DyckPrefix> {
    words(n, &[Ud::U, Ud::D], &|p| DyckPrefix::new(p.to_vec(), w).is_ok())
        .into_iter()
        .map(|s| DyckPrefix { steps: s, w })
        .collect()
}

pub fn enumerate_updown(n: usize, w: usize) -> Vec<UpDownPath> {
    let (lo, hi) = gd_bounds(w);
    let ok = |p: &[Ud]| ud_heights(p).iter().all(|y| (lo..=hi).contains(y));
    words(n, &[Ud::U, Ud::D], &ok).into_iter().filter_map(|s| UpDownPath::new(s, w).ok()).collect()
}

/// A walk produced from a cylindric standard tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CsytWalk {
    Triangle(TriangleWalk),
    DyckPrefix(DyckPrefix),
}

/// Which walk to build from a cylindric standard tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkTarget {
    /// Three rows, steps `R`, `U`, `B` by row.
    Triangle,
    /// Two rows, steps `U`, `D` by row.
    DyckPrefix,
}

/// Row of each entry `1..=n` of a standard tableau.
fn rows_of_entries(t: &Tableau) -> Result<Vec<usize>> {
    let n = t.shape().size();
    let mut row = vec![0usize; n];
    for (r, cells) in t.rows().iter().enumerate() {
        for &e in cells {
            let e = e as usize;
            if e == 0 || e > n || row[e - 1] != 0 {
                return Err(Error::MalformedTableau("entries must be 1..n, each once".into()));
            }
            row[e - 1] = r + 1;
        }
    }
    if !t.is_kind(Kind::Ssyt) {
        return Err(Error::MalformedTableau("rows and columns must increase".into()));
    }
    Ok(row)
}

/// Records the row of each entry as a step.
pub fn csyt_to_walk(t: &Tableau, w: usize, target: WalkTarget) -> Result<CsytWalk> {
    let rows = rows_of_entries(t)?;
    let h = match target {
        WalkTarget::Triangle => 3,
        WalkTarget::DyckPrefix => 2,
    };
    if t.rows().len() > h {
        return Err(Error::OutOfDomain(format!("{} rows, expected at most {h}", t.rows().len())));
    }
    if !is_cylindric(t, h, w, Kind::Ssyt)? {
        return Err(Error::NotCylindric { h, w });
    }
    Ok(match target {
        WalkTarget::Triangle => {
            let steps = rows.iter().map(|r| [TStep::R, TStep::U, TStep::B][r - 1]).collect();
            CsytWalk::Triangle(TriangleWalk::new(steps, w)?)
        }
        WalkTarget::DyckPrefix => {
            let steps = rows.iter().map(|r| [Ud::U, Ud::D][r - 1]).collect();
            CsytWalk::DyckPrefix(DyckPrefix::new(steps, w)?)
        }
    })
}

fn tableau_from_rows(rows: impl Iterator<Item = usize>, h: usize) -> Tableau {
    let mut out = vec![Vec::new(); h];
    for (k, r) in rows.enumerate() {
        out[r].push(k as u32 + 1);
    }
    Tableau::new(out).expect("a walk in the region gives a tableau")
}

/// Inverse of [`csyt_to_walk`].
pub fn walk_to_csyt(walk: &CsytWalk) -> Tableau {
    match walk {
        CsytWalk::Triangle(p) => tableau_from_rows(p.steps.iter().map(|&s| s as usize), 3),
        CsytWalk::DyckPrefix(p) => tableau_from_rows(p.steps.iter().map(|&s| s as usize), 2),
    }
}

/// Openers up, closers down, fixed points flat.
pub fn matching_to_motzkin(m: &Matching, w: usize) -> Result<MotzkinPath> {
    let profile = crossing_nesting_profile(m);
    if profile.max_crossing >= 2 {
        return Err(Error::OutOfDomain(format!("{m} has a 2-crossing")));
    }
    let mut steps = vec![MStep::H; m.n()];
    for &(i, j) in m.arcs() {
        steps[i - 1] = MStep::U;
        steps[j - 1] = MStep::D;
    }
    MotzkinPath::new(steps, w).map_err(|_| Error::OutOfDomain(format!("{m} has a {}-nesting", w + 1)))
}

/// Inverse of [`matching_to_motzkin`]: each down step closes the most
/// recent open arc.
pub fn motzkin_to_matching(p: &MotzkinPath) -> Matching {
    let mut open = Vec::new();
    let mut arcs = Vec::new();
    for (k, s) in p.steps.iter().enumerate() {
        match s {
            MStep::U => open.push(k + 1),
            MStep::D => arcs.push((open.pop().expect("path stays nonnegative"), k + 1)),
            MStep::H => {}
        }
    }
    Matching::new(p.steps.len(), arcs).expect("noncrossing arcs")
}

/// Sign-reversing involution on `Mot²_n(w)` fixing exactly `Mot³_n(w)`.
///
/// At the first special step, a bottom step `j` is traded with the stretch
/// that climbs to `w` right after it; a top step `j` is traded with the
/// climb from the last visit to 0 before it. The stretch is reversed and
/// flipped upside down, which moves the horizontal step to the other end
/// and to the other line. Defined for `w ≥ 1`.
pub fn special_involution(p: &MotzkinPath) -> Result<MotzkinPath> {
    if !p.is_in(MotzkinVariant::BottomOrTopH) {
        return Err(Error::OutOfDomain(format!("{p} has a horizontal step strictly inside the strip")));
    }
    if p.w == 0 {
        return Err(Error::OutOfDomain("the strip has width 0, so its two lines coincide".into()));
    }
    let Some(&j) = p.special_steps().first() else {
        return Ok(p.clone());
    };
    let h = p.heights();
    let w = p.w;
    let (lo, hi) = if h[j] == w {
        let i = (0..j)
            .rev()
            .take_while(|&t| p.steps[t] != MStep::H)
            .find(|&t| h[t] == 0)
            .expect("the climb to w starts on the axis");
        (i, j)
    } else {
        let end = climbs_to(&p.steps, &h, j + 1, w).expect("special bottom step");
        (j, end - 1)
    };
    let mut q = h.clone();
    for t in lo + 1..=hi {
        q[t] = w - h[lo + hi + 1 - t];
    }
    let steps = q
        .windows(2)
        .map(|s| match s[1] as i64 - s[0] as i64 {
            1 => MStep::U,
            -1 => MStep::D,
            _ => MStep::H,
        })
        .collect();
    MotzkinPath::new(steps, w)
}

/// `T` (true) when the step from `a` to `b` moves towards the line at
/// height `c2 / 2`; a step across the line counts as towards.
fn towards(a: i64, b: i64, c2: i64) -> bool {
    (2 * a < c2) == (b > a)
}

fn ta_word(h: &[i64], c2: i64) -> Vec<bool> {
    h.windows(2).map(|s| towards(s[0], s[1], c2)).collect()
}

fn from_ta_word(word: &[bool], c2: i64) -> Vec<Ud> {
    let mut y = 0i64;
    word.iter()
        .map(|&t| {
            let up = (2 * y < c2) == t;
            y += if up { 1 } else { -1 };
            if up {
                Ud::U
            } else {
                Ud::D
            }
        })
        .collect()
}

/// Reference line `⌈h/2⌉ − 1/2`, doubled, and the split height `⌊h/2⌋`.
fn dershowitz_params(max: i64) -> (i64, i64) {
    (2 * ((max + 1) / 2) - 1, max / 2)
}

/// Dershowitz's bijection `DP_n(w) → GD_n(w)`.
pub fn dershowitz(p: &DyckPrefix) -> UpDownPath {
    let h = p.heights();
    let max = *h.iter().max().expect("nonempty");
    let (c2, half) = dershowitz_params(max);
    let r = ta_word(&h, c2);
    let j = h.iter().position(|&y| y == half).expect("the path passes ⌊h/2⌋");
    let word: Vec<bool> = r[j..].iter().chain(r[..j].iter().rev()).copied().collect();
    UpDownPath::new(from_ta_word(&word, 1), p.w).expect("the image is an up-down path in the strip")
}

/// Inverse of [`dershowitz`]: the unique Dyck prefix, over all candidate
/// heights and split points, that maps to `q`.
pub fn dershowitz_inverse(q: &UpDownPath) -> Result<DyckPrefix> {
    let n = q.steps.len();
    let s = ta_word(&q.heights(), 1);
    let mut found = None;
    for max in 0..=q.w as i64 {
        let (c2, half) = dershowitz_params(max);
        for j in 0..=n {
            let r: Vec<bool> = s[n - j..].iter().rev().chain(&s[..n - j]).copied().collect();
            let Ok(p) = DyckPrefix::new(from_ta_word(&r, c2), q.w) else { continue };
            let h = p.heights();
            let matches = h.iter().max() == Some(&max) && h.iter().position(|&y| y == half) == Some(j);
            if matches && found.replace(p).is_some() {
                return Err(Error::InvalidPath(format!("{q} has two preimages")));
            }
        }
    }
    found.ok_or_else(|| Error::OutOfDomain(format!("{q} has no preimage")))
}

/// Folds an up-down path onto the nonnegative half-plane: points above
/// height 1/2 move down by one, the others are reflected.
pub fn psi(p: &UpDownPath) -> Result<MotzkinPath> {
    let q: Vec<i64> = p.heights().into_iter().map(|y| if y >= 1 { y - 1 } else { -y }).collect();
    let steps = q
        .windows(2)
        .map(|s| match s[1] - s[0] {
            1 => MStep::U,
            -1 => MStep::D,
            _ => MStep::H,
        })
        .collect();
    MotzkinPath::new(steps, p.w / 2)
}

/// Inverse of [`psi`]; `bound` is the strip parameter of the up-down path.
pub fn psi_inverse(q: &MotzkinPath, bound: usize) -> Result<UpDownPath> {
    let mut y = 0i64;
    let mut steps = Vec::new();
    for &t in &q.heights()[1..] {
        let t = t as i64;
        let next = [t + 1, -t]
            .into_iter()
            .find(|c| (c - y).abs() == 1)
            .ok_or_else(|| Error::OutOfDomain(format!("{q} is not a folded up-down path")))?;
        steps.push(if next > y { Ud::U } else { Ud::D });
        y = next;
    }
    UpDownPath::new(steps, bound)
}

/// The four single-row-pair identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H1Check {
    /// `|T_n(2w+1)| = |Mot_n(w)|`.
    TMot1,
    /// `|T_n(2w)| = |Mot'_n(w)|`.
    TMot2,
    /// `|DP_n(2w+1)| = |Mot¹_n(w)|`.
    DpMot1,
    /// `|DP_n(2w)| = Σ_{Mot²_n(w)} (−1)^k`.
    DpMot2,
}

impl H1Check {
    pub const ALL: [H1Check; 4] = [H1Check::TMot1, H1Check::TMot2, H1Check::DpMot1, H1Check::DpMot2];

    pub fn name(self) -> &'static str {
        match self {
            H1Check::TMot1 => "t_Mot1",
            H1Check::TMot2 => "t_Mot2",
            H1Check::DpMot1 => "DP_Mot1",
            H1Check::DpMot2 => "DP_Mot2",
        }
    }
}

impl fmt::Display for H1Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for H1Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        H1Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

pub fn h1_sides(which: H1Check, n: usize, w: usize) -> (BigInt, BigInt) {
    match which {
        H1Check::TMot1 => (count_family(Family::Triangle, n, 2 * w + 1), count_family(Family::Motzkin(MotzkinVariant::All), n, w)),
        H1Check::TMot2 => (count_family(Family::Triangle, n, 2 * w), count_family(Family::Motzkin(MotzkinVariant::NoTopH), n, w)),
        H1Check::DpMot1 => (count_family(Family::DyckPrefix, n, 2 * w + 1), count_family(Family::Motzkin(MotzkinVariant::BottomH), n, w)),
        H1Check::DpMot2 => (count_family(Family::DyckPrefix, n, 2 * w), motzkin_signed_sum(n, w)),
    }
}

pub fn verify_h1(which: H1Check, n: usize, w: usize) -> bool {
    let (a, b) = h1_sides(which, n, w);
    a == b
}

/// `Σ_j (−1)^j C(n, ⌊(n + (w+2) j)/2⌋)`.
pub fn dyck_prefix_reflection_count(n: usize, w: usize) -> BigInt {
    let n_i = n as i64;
    let period = w as i64 + 2;
    let mut total = BigInt::zero();
    let reach = n_i / period + 2;
    for j in -reach..=reach {
        let k = (n_i + period * j).div_euclid(2);
        if (0..=n_i).contains(&k) {
            let c = num_integer::binomial(BigInt::from(n), BigInt::from(k));
            if j % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    }
    total
}
