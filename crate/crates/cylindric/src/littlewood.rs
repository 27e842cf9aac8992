//! Affine bounded Littlewood identities and their classical limits, checked
//! as exact identities of truncated polynomials in `e_1, …, e_n`.
//!
//! Each identity has a left side `Σ_λ u(λ) s_{λ[m,w]'}` over `Par(m, w)` and
//! a determinant right side built from the periodic kernels `F` and `F̄`.
//! The module also exposes the structure matrices behind the Pfaffian
//! framework and the kernel identities used by the direct proof.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::epoly::{
    big_f, big_f_bar, determinant, e_alt, e_sum, f, key_degree, pfaffian_upper, EKey, EPoly, Matrix,
};
use crate::error::{Error, Result};
use crate::partitions::{iter_family, Partition, Width};
use crate::tableaux::jacobi_trudi_sum;

/// The identities that can be verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    AblOdd,
    AblEven,
    CPlus,
    CMinus,
    D1,
    D2,
    D3,
    D4,
    ClassicalOdd,
    ClassicalEven,
    ClassicalSp,
    ClassicalD1,
    ClassicalD2,
    ClassicalD3,
    ClassicalD4,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::AblOdd,
        IdentityId::AblEven,
        IdentityId::CPlus,
        IdentityId::CMinus,
        IdentityId::D1,
        IdentityId::D2,
        IdentityId::D3,
        IdentityId::D4,
        IdentityId::ClassicalOdd,
        IdentityId::ClassicalEven,
        IdentityId::ClassicalSp,
        IdentityId::ClassicalD1,
        IdentityId::ClassicalD2,
        IdentityId::ClassicalD3,
        IdentityId::ClassicalD4,
    ];

    pub const AFFINE: [IdentityId; 8] = [
        IdentityId::AblOdd,
        IdentityId::AblEven,
        IdentityId::CPlus,
        IdentityId::CMinus,
        IdentityId::D1,
        IdentityId::D2,
        IdentityId::D3,
        IdentityId::D4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::AblOdd => "abl_odd",
            IdentityId::AblEven => "abl_even",
            IdentityId::CPlus => "c_plus",
            IdentityId::CMinus => "c_minus",
            IdentityId::D1 => "d1",
            IdentityId::D2 => "d2",
            IdentityId::D3 => "d3",
            IdentityId::D4 => "d4",
            IdentityId::ClassicalOdd => "classical_odd",
            IdentityId::ClassicalEven => "classical_even",
            IdentityId::ClassicalSp => "classical_sp",
            IdentityId::ClassicalD1 => "classical_d1",
            IdentityId::ClassicalD2 => "classical_d2",
            IdentityId::ClassicalD3 => "classical_d3",
            IdentityId::ClassicalD4 => "classical_d4",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            IdentityId::ClassicalOdd
                | IdentityId::ClassicalEven
                | IdentityId::ClassicalSp
                | IdentityId::ClassicalD1
                | IdentityId::ClassicalD2
                | IdentityId::ClassicalD3
                | IdentityId::ClassicalD4
        )
    }

    /// The `w → ∞` limit of an affine identity.
    pub fn classical_limit(self) -> IdentityId {
        match self {
            IdentityId::AblOdd => IdentityId::ClassicalOdd,
            IdentityId::AblEven => IdentityId::ClassicalEven,
            IdentityId::CPlus | IdentityId::CMinus => IdentityId::ClassicalSp,
            IdentityId::D1 => IdentityId::ClassicalD1,
            IdentityId::D2 => IdentityId::ClassicalD2,
            IdentityId::D3 => IdentityId::ClassicalD3,
            IdentityId::D4 => IdentityId::ClassicalD4,
            other => other,
        }
    }

    /// Number of rows `m` of the summation family.
    pub fn rows(self, h: usize) -> usize {
        match self {
            IdentityId::AblOdd
            | IdentityId::D3
            | IdentityId::D4
            | IdentityId::ClassicalOdd
            | IdentityId::ClassicalD3
            | IdentityId::ClassicalD4 => 2 * h + 1,
            _ => 2 * h,
        }
    }

    pub fn statistic(self) -> Statistic {
        match self {
            IdentityId::AblOdd | IdentityId::AblEven | IdentityId::ClassicalOdd | IdentityId::ClassicalEven => {
                Statistic::Unit
            }
            IdentityId::CPlus | IdentityId::ClassicalSp => Statistic::CPlus,
            IdentityId::CMinus => Statistic::CMinus,
            IdentityId::D1 | IdentityId::D3 | IdentityId::ClassicalD1 | IdentityId::ClassicalD3 => Statistic::DPlus,
            IdentityId::D2 | IdentityId::D4 | IdentityId::ClassicalD2 | IdentityId::ClassicalD4 => Statistic::DMinus,
        }
    }

    /// The left side is compared after multiplication by this factor.
    pub fn lhs_multiplier(self) -> i64 {
        match self {
            IdentityId::D1 | IdentityId::ClassicalD1 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Weights attached to partitions in the summation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Unit,
    CPlus,
    CMinus,
    DPlus,
    DMinus,
}

/// `u(λ)` for `λ ∈ Par(m, w)`. With `w = None` the spread condition of the
/// symplectic weights never applies.
pub fn statistic_weight(kind: Statistic, lambda: &Partition, m: usize, w: Width) -> i64 {
    let p = lambda.padded(m);
    let at = |i: usize| p[i - 1];
    match kind {
        Statistic::Unit => 1,
        Statistic::CPlus | Statistic::CMinus => {
            let h = m / 2;
            if (1..=h).all(|i| at(2 * i - 1) == at(2 * i)) {
                return 1;
            }
            let spread_full = w.is_some_and(|w| m >= 1 && at(1) - at(m) == w);
            if spread_full && (1..h).all(|i| at(2 * i) == at(2 * i + 1)) {
                return if kind == Statistic::CPlus { 1 } else { -1 };
            }
            0
        }
        Statistic::DPlus | Statistic::DMinus => {
            if p.iter().all(|x| x % 2 == 0) {
                1
            } else if p.iter().all(|x| x % 2 == 1) {
                if kind == Statistic::DPlus {
                    1
                } else {
                    -1
                }
            } else {
                0
            }
        }
    }
}

fn classical_schur(lambda: &Partition, m: usize, n: usize, cap: Option<u32>) -> EPoly {
    let mat = Matrix::from_fn(m, m, |i, j| EPoly::e(lambda.part(i + 1) as i64 - i as i64 + j as i64, n, cap));
    determinant(&mat, &EPoly::one(n, cap)).expect("square")
}

/// `Σ_{λ} u(λ) s_{λ[m,w]'}` through degree `d`, or its classical version
/// `Σ_{λ ∈ Par(m)} u(λ) s_{λ'}`.
///
/// Only `|λ| ≤ d` is summed: every determinant in the cylindric
/// Jacobi–Trudi sum for `λ` is homogeneous of degree `|λ|` because the
/// shifts `k_i` sum to zero, so larger `λ` vanish under the truncation.
pub fn lhs_sum(id: IdentityId, h: usize, w: usize, n: usize, d: u32) -> Result<EPoly> {
    check_params(id, h, w, n)?;
    let m = id.rows(h);
    let cap = Some(d);
    let stat = id.statistic();
    let mut total = EPoly::zero(n, cap);
    let width = if id.is_classical() { None } else { Some(w) };
    for lambda in iter_family(m, width, d as usize) {
        let u = statistic_weight(stat, &lambda, m, width);
        if u == 0 {
            continue;
        }
        let s = match width {
            Some(w) => jacobi_trudi_sum(&lambda, m, w, n, cap)?,
            None => classical_schur(&lambda, m, n, cap),
        };
        total = &total + &s.scale(&BigInt::from(u));
    }
    Ok(total)
}

fn check_params(id: IdentityId, h: usize, w: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfDomain("at least one variable is required".into()));
    }
    if h == 0 && !matches!(id, IdentityId::ClassicalOdd) {
        return Err(Error::OutOfDomain(format!("{id} needs h ≥ 1")));
    }
    if w == 0 && !id.is_classical() {
        return Err(Error::OutOfDomain("w must be positive".into()));
    }
    Ok(())
}

/// The right side of the identity through degree `d`. For `d1` this is the
/// determinant without the factor ½.
pub fn rhs_det(id: IdentityId, h: usize, w: usize, n: usize, d: u32) -> Result<EPoly> {
    check_params(id, h, w, n)?;
    let cap = Some(d);
    let big_n = (id.rows(h) + w) as i64;
    let one = EPoly::one(n, cap);
    let classical = id.is_classical();
    let kf = |r: i64| if classical { f(r, n, cap) } else { big_f(r, big_n, n, cap) };
    let kfb = |r: i64| if classical { f(r, n, cap) } else { big_f_bar(r, big_n, n, cap) };
    let det = |size: usize, entry: &dyn Fn(i64, i64) -> EPoly| {
        let mat = Matrix::from_fn(size, size, |i, j| entry(i as i64 + 1, j as i64 + 1));
        determinant(&mat, &one).expect("square")
    };
    let es = e_sum(n, cap);
    let ea = e_alt(n, cap);
    Ok(match id {
        IdentityId::AblOdd | IdentityId::ClassicalOdd => &es * &det(h, &|i, j| &kf(j - i) - &kf(i + j)),
        IdentityId::AblEven | IdentityId::ClassicalEven => det(h, &|i, j| &kfb(j - i) + &kfb(i + j - 1)),
        IdentityId::CPlus => det(h, &|i, j| &kfb(j - i) - &kfb(i + j)),
        IdentityId::CMinus | IdentityId::ClassicalSp => det(h, &|i, j| &kf(j - i) - &kf(i + j)),
        IdentityId::D1 | IdentityId::ClassicalD1 => det(h, &|i, j| &kfb(j - i) + &kfb(i + j - 2)),
        IdentityId::D2 | IdentityId::ClassicalD2 => &(&es * &ea) * &det(h - 1, &|i, j| &kf(j - i) - &kf(i + j)),
        IdentityId::D3 | IdentityId::ClassicalD3 => &es * &det(h, &|i, j| &kf(j - i) - &kf(i + j - 1)),
        IdentityId::D4 | IdentityId::ClassicalD4 => &ea * &det(h, &|i, j| &kfb(j - i) + &kfb(i + j - 1)),
    })
}

/// The first coefficient on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Discrepancy {
    pub e: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing both sides of one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub identity: String,
    pub h: usize,
    pub w: usize,
    pub vars: usize,
    pub deg: u32,
    pub equal: bool,
    pub discrepancy: Option<Discrepancy>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn parse_json(s: &str) -> Result<Self> {
        let r: VerificationReport = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if r.equal == r.discrepancy.is_some() {
            return Err(Error::Parse("equal must hold exactly when there is no discrepancy".into()));
        }
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// The first key, in graded order, on which `a` and `b` differ.
pub fn first_difference(a: &EPoly, b: &EPoly) -> Option<(EKey, BigInt, BigInt)> {
    let keys: BTreeSet<(u32, &EKey)> =
        a.terms().keys().chain(b.terms().keys()).map(|k| (key_degree(k), k)).collect();
    keys.into_iter().find_map(|(_, k)| {
        let (x, y) = (a.coeff(k), b.coeff(k));
        (x != y).then(|| (k.clone(), x, y))
    })
}

/// Compares both sides of `id` coefficient by coefficient through degree
/// `d`. For `d1` the left side is doubled before comparison and the
/// discrepancy reports the doubled value.
pub fn verify_identity(id: IdentityId, h: usize, w: usize, n: usize, d: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = lhs_sum(id, h, w, n, d)?.scale(&BigInt::from(id.lhs_multiplier()));
    let rhs = rhs_det(id, h, w, n, d)?;
    let discrepancy = first_difference(&lhs, &rhs).map(|(e, l, r)| Discrepancy {
        e,
        lhs: l.to_string(),
        rhs: r.to_string(),
    });
    Ok(VerificationReport {
        identity: id.name().to_string(),
        h,
        w,
        vars: n,
        deg: d,
        equal: discrepancy.is_none(),
        discrepancy,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Skew-symmetric integer matrices that encode each weight in the Pfaffian
/// framework.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    B,
    BBar,
    CPlus,
    CMinus,
    DPlusEven,
    DMinusEven,
    DPlusOdd,
    DMinusOdd,
}

impl StructureKind {
    pub const ALL: [StructureKind; 8] = [
        StructureKind::B,
        StructureKind::BBar,
        StructureKind::CPlus,
        StructureKind::CMinus,
        StructureKind::DPlusEven,
        StructureKind::DMinusEven,
        StructureKind::DPlusOdd,
        StructureKind::DMinusOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::B => "B",
            StructureKind::BBar => "Bbar",
            StructureKind::CPlus => "Cplus",
            StructureKind::CMinus => "Cminus",
            StructureKind::DPlusEven => "Dplus_even",
            StructureKind::DMinusEven => "Dminus_even",
            StructureKind::DPlusOdd => "Dplus_odd",
            StructureKind::DMinusOdd => "Dminus_odd",
        }
    }

    fn odd_rows(self) -> bool {
        matches!(self, StructureKind::B | StructureKind::DPlusOdd | StructureKind::DMinusOdd)
    }

    /// Number of border indices placed before `1, 2, …`.
    pub fn border(self) -> usize {
        match self {
            StructureKind::B | StructureKind::DPlusOdd | StructureKind::DMinusOdd => 1,
            StructureKind::DMinusEven => 2,
            _ => 0,
        }
    }

    /// Scalar by which the framework weights exceed `u(λ)` for `m` rows, so
    /// that the Pfaffian sum equals this multiple of the identity's left side.
    pub fn scalar_factor(self, m: usize) -> i64 {
        let h = (m / 2) as u32;
        match self {
            StructureKind::DPlusEven => 2i64.pow(h.saturating_sub(1)),
            StructureKind::DMinusEven => 2i64.pow(h),
            _ => 1,
        }
    }

    /// The identity whose left side this matrix produces.
    pub fn identity(self) -> IdentityId {
        match self {
            StructureKind::B => IdentityId::AblOdd,
            StructureKind::BBar => IdentityId::AblEven,
            StructureKind::CPlus => IdentityId::CPlus,
            StructureKind::CMinus => IdentityId::CMinus,
            StructureKind::DPlusEven => IdentityId::D1,
            StructureKind::DMinusEven => IdentityId::D2,
            StructureKind::DPlusOdd => IdentityId::D3,
            StructureKind::DMinusOdd => IdentityId::D4,
        }
    }
}

impl FromStr for StructureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown structure matrix {s:?}")))
    }
}

/// Row/column index of a structure matrix: border indices come first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Index {
    Border(usize),
    Pos(i64),
}

/// A structure matrix for fixed `m` and `w`, with `N = m + w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureMatrix {
    kind: StructureKind,
    m: usize,
    w: usize,
    big_n: i64,
}

/// Splits `ℓ = kN + r` with `0 ≤ r < N`.
fn split(l: i64, big_n: i64) -> (i64, i64) {
    (l.div_euclid(big_n), l.rem_euclid(big_n))
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The structure matrix of `kind` for `m` rows and spread bound `w`.
pub fn structure_matrix(kind: StructureKind, m: usize, w: usize) -> Result<StructureMatrix> {
    if m == 0 || w == 0 {
        return Err(Error::OutOfDomain("m and w must be positive".into()));
    }
    if kind.odd_rows() != (m % 2 == 1) {
        return Err(Error::OutOfDomain(format!("{} needs m of the other parity, got {m}", kind.name())));
    }
    let d_kind = matches!(
        kind,
        StructureKind::DPlusEven | StructureKind::DMinusEven | StructureKind::DPlusOdd | StructureKind::DMinusOdd
    );
    if d_kind && w % 2 == 1 {
        return Err(Error::OutOfDomain(format!("{} is defined for even w only", kind.name())));
    }
    Ok(StructureMatrix { kind, m, w, big_n: (m + w) as i64 })
}

impl StructureMatrix {
    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn period(&self) -> i64 {
        self.big_n
    }

    /// The sequence `a_ℓ` with `a_{r,s} = a_{s−r}` between positive indices.
    pub fn sequence(&self, l: i64) -> i64 {
        let n = self.big_n;
        let (k, r) = split(l, n);
        match self.kind {
            StructureKind::B => {
                if r == 0 {
                    2 * k
                } else {
                    2 * k + 1
                }
            }
            StructureKind::BBar => {
                if r == 0 {
                    0
                } else {
                    sign(k)
                }
            }
            StructureKind::CPlus => {
                if r == 1 || r == n - 1 {
                    sign(k)
                } else {
                    0
                }
            }
            StructureKind::CMinus => {
                if r == 1 {
                    1
                } else if r == n - 1 {
                    -1
                } else {
                    0
                }
            }
            StructureKind::DPlusEven => {
                if l % 2 != 0 && r != 0 {
                    sign(k)
                } else {
                    0
                }
            }
            StructureKind::DMinusEven => {
                if l % 2 != 0 && r != 0 {
                    2 * k + 1
                } else {
                    0
                }
            }
            StructureKind::DPlusOdd | StructureKind::DMinusOdd => {
                let half = (n + 1) / 2;
                let plus = if r == 0 { k * half } else { k * half + (r + 1) / 2 };
                if self.kind == StructureKind::DPlusOdd {
                    plus
                } else {
                    sign(l + 1) * plus
                }
            }
        }
    }

    /// Entry `a_{r,s}`; antisymmetric by construction.
    pub fn entry(&self, r: Index, s: Index) -> i64 {
        match (r, s) {
            (Index::Pos(a), Index::Pos(b)) => self.sequence(b - a),
            (Index::Border(_), Index::Border(_)) => 0,
            (Index::Pos(_), Index::Border(_)) => -self.entry(s, r),
            (Index::Border(z), Index::Pos(b)) => match (self.kind, z) {
                (StructureKind::DMinusOdd, _) => sign(b - 1),
                (StructureKind::DMinusEven, 1) => sign(b - 1),
                _ => 1,
            },
        }
    }

    /// The weight reproduced by Pfaffians of the framework, including the
    /// scalar factors of the even-orthogonal matrices.
    pub fn weight(&self, lambda: &Partition) -> i64 {
        let stat = self.kind.identity().statistic();
        statistic_weight(stat, lambda, self.m, Some(self.w)) * self.kind.scalar_factor(self.m)
    }

    /// `Pf A^{I_0 ⊔ seq}` for a (not necessarily increasing) sequence of
    /// positive indices.
    pub fn minor_pfaffian(&self, seq: &[i64]) -> i64 {
        let idx: Vec<Index> =
            (0..self.kind.border()).map(Index::Border).chain(seq.iter().map(|&i| Index::Pos(i))).collect();
        pfaffian_upper(idx.len(), |i, j| self.entry(idx[i], idx[j]), &1i64).expect("even size")
    }
}

/// `I_m(λ) = (λ_m + 1, λ_{m−1} + 2, …, λ_1 + m)`.
pub fn index_sequence(lambda: &Partition, m: usize) -> Vec<i64> {
    (1..=m).map(|t| (lambda.part(m + 1 - t) + t) as i64).collect()
}

fn increasing(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(start: i64, len: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=bound {
            if bound - v + 1 < (len - cur.len()) as i64 {
                break;
            }
            cur.push(v);
            rec(v + 1, len, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, len, bound, &mut Vec::new(), &mut out);
    out
}

/// Outcome of the three framework conditions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FrameworkCheck {
    pub weights: bool,
    pub shift: bool,
    pub congruence: bool,
}

impl FrameworkCheck {
    pub fn all(&self) -> bool {
        self.weights && self.shift && self.congruence
    }
}

/// Exhaustively checks, over index sequences inside `[1, index_bound]`:
/// minors at `I_m(λ)` give the weight, shifting the outer indices by `N`
/// preserves the minor when they are more than `N` apart, and minors with
/// two congruent indices vanish.
pub fn check_framework_conditions(kind: StructureKind, m: usize, w: usize, index_bound: i64) -> Result<FrameworkCheck> {
    let a = structure_matrix(kind, m, w)?;
    let n = a.period();
    if index_bound < m as i64 + 2 * n {
        return Err(Error::OutOfDomain(format!("index bound must be at least m + 2N = {}", m as i64 + 2 * n)));
    }
    let mut out = FrameworkCheck { weights: true, shift: true, congruence: true };
    for lambda in iter_family(m, Some(w), (index_bound as usize).saturating_mul(m)) {
        let seq = index_sequence(&lambda, m);
        if *seq.last().expect("m ≥ 1") > index_bound {
            continue;
        }
        if a.minor_pfaffian(&seq) != a.weight(&lambda) {
            out.weights = false;
        }
    }
    for seq in increasing(m, index_bound) {
        let (first, last) = (seq[0], seq[m - 1]);
        if last - first > n {
            let mut shifted = seq.clone();
            shifted[0] += n;
            shifted[m - 1] -= n;
            if a.minor_pfaffian(&shifted) != a.minor_pfaffian(&seq) {
                out.shift = false;
            }
        }
        let congruent = (0..m).any(|i| (i + 1..m).any(|j| (seq[j] - seq[i]) % n == 0));
        if congruent && a.minor_pfaffian(&seq) != 0 {
            out.congruence = false;
        }
    }
    Ok(out)
}

/// `Pf(T_p A T_pᵗ)`, where `T_p` borders `(e_{j−i})_{1≤i≤m, j≥1}` with an
/// identity block. Columns beyond `m + n` are dropped since `e_k = 0` for
/// `k > n`.
pub fn general_pfaffian_sum(kind: StructureKind, p: usize, m: usize, w: usize, n: usize, d: u32) -> Result<EPoly> {
    let a = structure_matrix(kind, m, w)?;
    if p != kind.border() {
        return Err(Error::OutOfDomain(format!("{} has border size {}, not {p}", kind.name(), kind.border())));
    }
    if (p + m) % 2 == 1 {
        return Err(Error::OutOfDomain("p + m must be even".into()));
    }
    let cap = Some(d);
    let last = (m + n) as i64;
    let e = |k: i64| EPoly::e(k, n, cap);
    let mut q: Vec<Vec<EPoly>> = vec![vec![EPoly::zero(n, cap); p + m]; p + m];
    for i in 0..p + m {
        for j in i + 1..p + m {
            let v = match (i < p, j < p) {
                (true, true) => EPoly::constant(n, cap, BigInt::from(a.entry(Index::Border(i), Index::Border(j)))),
                (true, false) => {
                    let col = (j - p + 1) as i64;
                    let mut acc = EPoly::zero(n, cap);
                    for s in 1..=last {
                        let c = a.entry(Index::Border(i), Index::Pos(s));
                        if c != 0 {
                            acc = &acc + &e(s - col).scale(&BigInt::from(c));
                        }
                    }
                    acc
                }
                _ => {
                    let (ri, rj) = ((i - p + 1) as i64, (j - p + 1) as i64);
                    let mut acc = EPoly::zero(n, cap);
                    for r in ri..=(ri + n as i64).min(last) {
                        for s in rj..=(rj + n as i64).min(last) {
                            let c = a.entry(Index::Pos(r), Index::Pos(s));
                            if c != 0 {
                                acc = &acc + &(&e(r - ri) * &e(s - rj)).scale(&BigInt::from(c));
                            }
                        }
                    }
                    acc
                }
            };
            q[j][i] = -&v;
            q[i][j] = v;
        }
    }
    pfaffian_upper(p + m, |i, j| q[i][j].clone(), &EPoly::one(n, cap))
}

/// `d_N(i, j)`, or its signed variant `d̄_N(i, j)` when `signed`: the sum of
/// `±e_a e_b` over `a, b ∈ [0, n]`, positive when `R_N(a−i) > R_N(b−j)`,
/// negative when `<`.
pub fn kernel_d(i: i64, j: i64, big_n: i64, signed: bool, n: usize, cap: Option<u32>) -> EPoly {
    let mut acc = EPoly::zero(n, cap);
    for a in 0..=n as i64 {
        for b in 0..=n as i64 {
            let (ka, ra) = split(a - i, big_n);
            let (kb, rb) = split(b - j, big_n);
            let mut s = match ra.cmp(&rb) {
                std::cmp::Ordering::Greater => 1,
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
            };
            if s == 0 {
                continue;
            }
            if signed {
                s *= sign(ka + kb);
            }
            acc = &acc + &(&EPoly::e(a, n, cap) * &EPoly::e(b, n, cap)).scale(&BigInt::from(s));
        }
    }
    acc
}

/// `Σ_{μ, k} det(e_{μ_i + N k_i + j})` over strictly decreasing `μ ∈ Z^m`
/// with `μ_1 − μ_m < N` and `Σ k_i = 0`, through degree `d`.
///
/// With `β_i = μ_i + N k_i`, a row is nonzero only if `β_i ∈ [−m, n−1]`.
/// Since `Σ β_i = Σ μ_i`, this also confines `μ_m` to `[−m−N+1, n−1]`.
pub fn shifted_window_sum(m: usize, big_n: i64, n: usize, d: u32) -> EPoly {
    let cap = Some(d);
    let one = EPoly::one(n, cap);
    let (lo, hi) = (-(m as i64), n as i64 - 1);
    let mut total = EPoly::zero(n, cap);
    let tri = (m * (m + 1) / 2) as i64;
    for last in (lo - big_n + 1)..=hi {
        // the other entries are distinct offsets in (last, last + N)
        let offsets: Vec<Vec<i64>> = increasing(m - 1, big_n - 1);
        for off in offsets {
            let mut mu: Vec<i64> = off.iter().rev().map(|o| last + o).collect();
            mu.push(last);
            let deg = mu.iter().sum::<i64>() + tri;
            if deg < 0 || deg > d as i64 {
                continue;
            }
            let ranges: Vec<(i64, i64)> = mu
                .iter()
                .map(|&x| ((lo - x).div_euclid(big_n) + i64::from((lo - x).rem_euclid(big_n) != 0), (hi - x).div_euclid(big_n)))
                .collect();
            if ranges.iter().any(|(a, b)| a > b) {
                continue;
            }
            let mut k = vec![0; m];
            crate::tableaux::for_each_vector(&ranges, &mut k, 0, &mut |k: &[i64]| {
                if k.iter().sum::<i64>() != 0 {
                    return;
                }
                let mat = Matrix::from_fn(m, m, |i, j| EPoly::e(mu[i] + big_n * k[i] + j as i64 + 1, n, cap));
                total = &total + &determinant(&mat, &one).expect("square");
            });
        }
    }
    total
}

/// `Σ_α (±1) det(e_{α_i + j})` over `α ∈ Z^m` with
/// `R_N(α_1) > … > R_N(α_m)`, with sign `(−1)^{Σ ⌊α_i/N⌋}` when `signed`.
pub fn remainder_sum(m: usize, big_n: i64, signed: bool, n: usize, d: u32) -> EPoly {
    let cap = Some(d);
    let one = EPoly::one(n, cap);
    let ranges = vec![(-(m as i64), n as i64 - 1); m];
    let tri = (m * (m + 1) / 2) as i64;
    let mut total = EPoly::zero(n, cap);
    let mut cur = vec![0; m];
    crate::tableaux::for_each_vector(&ranges, &mut cur, 0, &mut |alpha: &[i64]| {
        let rems: Vec<i64> = alpha.iter().map(|&a| a.rem_euclid(big_n)).collect();
        if rems.windows(2).any(|p| p[0] <= p[1]) {
            return;
        }
        let deg = alpha.iter().sum::<i64>() + tri;
        if deg < 0 || deg > d as i64 {
            return;
        }
        let mat = Matrix::from_fn(m, m, |i, j| EPoly::e(alpha[i] + j as i64 + 1, n, cap));
        let mut det = determinant(&mat, &one).expect("square");
        if signed && sign(alpha.iter().map(|&a| a.div_euclid(big_n)).sum()) < 0 {
            det = -&det;
        }
        total = &total + &det;
    });
    total
}

/// Each step of the direct proof as a named equality.
pub fn section5_steps(h: usize, big_n: i64, n: usize, d: u32) -> Result<Vec<(&'static str, bool)>> {
    if h == 0 || big_n <= 0 || n == 0 {
        return Err(Error::OutOfDomain("h, N and n must be positive".into()));
    }
    let cap = Some(d);
    let one = EPoly::one(n, cap);
    let odd = 2 * h + 1;
    let even = 2 * h;
    let mut steps = Vec::new();
    let dn = |i: i64, j: i64| kernel_d(i, j, big_n, false, n, cap);
    let dbar = |i: i64, j: i64| kernel_d(i, j, big_n, true, n, cap);
    let kf = |r: i64| big_f(r, big_n, n, cap);
    let kfb = |r: i64| big_f_bar(r, big_n, n, cap);
    let es = e_sum(n, cap);

    let size = odd as i64 + 1;
    let antisym = (1..=size).all(|i| dn(i, i).is_zero() && (1..=size).all(|j| dn(j, i) == -&dn(i, j)))
        && (1..=size).all(|i| dbar(i, i).is_zero() && (1..=size).all(|j| dbar(j, i) == -&dbar(i, j)));
    steps.push(("kernel antisymmetry", antisym));

    // odd case
    let alpha_odd = remainder_sum(odd, big_n, false, n, d);
    if big_n > odd as i64 {
        let window = shifted_window_sum(odd, big_n, n, d);
        steps.push(("odd window reindexing", window == alpha_odd));
        let lhs = lhs_sum(IdentityId::AblOdd, h, big_n as usize - odd, n, d)?;
        steps.push(("odd window equals cylindric sum", window == lhs));
    }
    let bordered = pfaffian_upper(
        odd + 1,
        |i, j| if i == 0 { es.clone() } else { dn(i as i64, j as i64) },
        &one,
    )?;
    steps.push(("odd minor summation", alpha_odd == bordered));
    let reduced = pfaffian_upper(even, |i, j| &kf(j as i64 - i as i64 - 1) - &kf(j as i64 - i as i64 + 1), &one)?;
    steps.push(("odd bordered reduction", bordered == &es * &reduced));
    let claim = (1..=odd as i64).all(|i| {
        (1..=odd as i64).all(|j| {
            let mut top = EPoly::zero(n, cap);
            for a in 0..=n as i64 {
                if (a - i).rem_euclid(big_n) == big_n - 1 {
                    for b in 0..=n as i64 {
                        top = &top + &(&EPoly::e(a, n, cap) * &EPoly::e(b, n, cap));
                    }
                }
            }
            let rhs = &(&top.scale(&BigInt::from(2)) - &kf(j - i)) - &kf(j - i + 1);
            &dn(i, j) - &dn(i - 1, j) == rhs
        })
    });
    steps.push(("odd kernel difference", claim));
    let det_odd = {
        let mat = Matrix::from_fn(h, h, |i, j| {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            &kf(j - i) - &kf(i + j)
        });
        determinant(&mat, &one)?
    };
    steps.push(("odd Gordon step", reduced == det_odd));

    // even case
    let alpha_even = remainder_sum(even, big_n, true, n, d);
    if big_n > even as i64 {
        let window = shifted_window_sum(even, big_n, n, d);
        steps.push(("even window reindexing", window == alpha_even));
        let lhs = lhs_sum(IdentityId::AblEven, h, big_n as usize - even, n, d)?;
        steps.push(("even window equals cylindric sum", window == lhs));
    }
    let pf_dbar = pfaffian_upper(even, |i, j| dbar(i as i64 + 1, j as i64 + 1), &one)?;
    steps.push(("even minor summation", alpha_even == pf_dbar));
    let window_sum = |i: i64, j: i64| {
        let mut acc = EPoly::zero(n, cap);
        for r in (i - j + 1)..=(j - i) {
            acc = &acc + &kfb(r);
        }
        acc
    };
    let kernel_ok = (1..=size).all(|i| (i..=size).all(|j| dbar(i, j) == window_sum(i, j)));
    steps.push(("signed kernel as window sum", kernel_ok));
    let pf_window = pfaffian_upper(even, |i, j| window_sum(i as i64 + 1, j as i64 + 1), &one)?;
    steps.push(("signed kernel Pfaffian", pf_dbar == pf_window));
    let det_even = {
        let mat = Matrix::from_fn(h, h, |i, j| {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            &kfb(j - i) + &kfb(i + j - 1)
        });
        determinant(&mat, &one)?
    };
    steps.push(("even Gordon step", pf_window == det_even));
    Ok(steps)
}

/// True when every applicable step of the direct proof holds.
pub fn verify_section5(h: usize, big_n: i64, n: usize, d: u32) -> Result<bool> {
    Ok(section5_steps(h, big_n, n, d)?.iter().all(|(_, ok)| *ok))
}
