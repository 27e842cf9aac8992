//! Polynomials in the elementary symmetric functions `e_1, ..., e_n`, their
//! monomial expansions, and division-free determinants and Pfaffians.
//!
//! An [`EPoly`] is a sparse map from exponent vectors over `e_1..e_n` to
//! big-integer coefficients. The grading is `deg e_k = k`. A polynomial may
//! carry a degree cap; products drop every term above the smaller cap of
//! their operands, so truncation happens eagerly and memory stays bounded.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The operations the determinant and Pfaffian kernels need.
///
/// Constants are produced from an existing element so that ring parameters
/// (variable count, degree cap) carry over.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    fn neg_ref(&self) -> Self {
        self.zero_like().sub_ref(self)
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for i64 {
    fn zero_like(&self) -> Self {
        0
    }
    fn one_like(&self) -> Self {
        1
    }
    fn is_zero_elem(&self) -> bool {
        *self == 0
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// A dense row-major matrix over any [`Ring`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

/// A matrix of [`EPoly`] entries.
pub type EMatrix = Matrix<EPoly>;

impl<R: Clone> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    /// The submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

impl<R: Ring> Matrix<R> {
    pub fn mul(&self, other: &Matrix<R>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let proto = self.entries.first().or(other.entries.first()).cloned();
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = match &proto {
                Some(p) => p.zero_like(),
                None => unreachable!("non-empty product of empty matrices"),
            };
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(other.get(k, j)));
            }
            acc
        }))
    }

    fn check_skew(&self) -> Result<()> {
        for i in 0..self.rows {
            if !self.get(i, i).is_zero_elem() {
                return Err(Error::NotSkew(i, i));
            }
            for j in i + 1..self.cols {
                if !self.get(i, j).add_ref(self.get(j, i)).is_zero_elem() {
                    return Err(Error::NotSkew(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Division-free determinant.
///
/// Rows are expanded one at a time; the state is the set of columns used so
/// far, so the cost is `O(2^n · n)` ring multiplications. Appending column
/// `c` to a partial permutation adds one inversion for every used column
/// larger than `c`. The empty matrix has determinant `one`.
pub fn determinant<R: Ring>(m: &Matrix<R>, one: &R) -> Result<R> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(one.clone());
    }
    assert!(n < 26, "determinant kernel is exponential in the size");
    let zero = one.zero_like();
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(one.clone());
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        if mask.count_ones() as usize == n {
            dp[mask] = Some(cur);
            continue;
        }
        let row = mask.count_ones() as usize;
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let a = m.get(row, c);
            if a.is_zero_elem() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let term = cur.mul_ref(a);
            let slot = &mut dp[mask | (1 << c)];
            let prev = slot.take().unwrap_or_else(|| zero.clone());
            *slot = Some(if above % 2 == 0 { prev.add_ref(&term) } else { prev.sub_ref(&term) });
        }
    }
    Ok(dp[(1 << n) - 1].take().unwrap_or(zero))
}

/// Division-free Pfaffian of a skew-symmetric matrix of even size.
///
/// Expands along the smallest unused index: pairing it with the `t`-th
/// remaining index contributes sign `(-1)^t`. The state is the set of used
/// indices. The empty matrix has Pfaffian `one`.
pub fn pfaffian<R: Ring>(m: &Matrix<R>, one: &R) -> Result<R> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!("Pfaffian of a {}x{} matrix", m.rows, m.cols)));
    }
    if m.rows % 2 == 1 {
        return Err(Error::Shape(format!("Pfaffian of odd size {}", m.rows)));
    }
    m.check_skew()?;
    pfaffian_upper(m.rows, |i, j| m.get(i, j).clone(), one)
}

/// Pfaffian of the upper triangular array `a(i, j)`, `i < j < size`.
pub fn pfaffian_upper<R: Ring>(size: usize, a: impl Fn(usize, usize) -> R, one: &R) -> Result<R> {
    if size % 2 == 1 {
        return Err(Error::Shape(format!("Pfaffian of odd size {size}")));
    }
    if size == 0 {
        return Ok(one.clone());
    }
    assert!(size < 28, "Pfaffian kernel is exponential in the size");
    let zero = one.zero_like();
    let full = (1usize << size) - 1;
    let mut dp: Vec<Option<R>> = vec![None; 1 << size];
    dp[0] = Some(one.clone());
    for mask in 0usize..full {
        let Some(cur) = dp[mask].take() else { continue };
        let i = (!mask).trailing_zeros() as usize;
        let mut between = 0;
        for j in i + 1..size {
            if mask & (1 << j) != 0 {
                continue;
            }
            let aij = a(i, j);
            if !aij.is_zero_elem() {
                let term = cur.mul_ref(&aij);
                let slot = &mut dp[mask | (1 << i) | (1 << j)];
                let prev = slot.take().unwrap_or_else(|| zero.clone());
                *slot = Some(if between % 2 == 0 { prev.add_ref(&term) } else { prev.sub_ref(&term) });
            }
            between += 1;
        }
    }
    Ok(dp[full].take().unwrap_or(zero))
}

/// Exponent vector `(m_1, ..., m_n)` of the monomial `e_1^{m_1} ··· e_n^{m_n}`.
pub type EKey = Vec<u32>;

/// Graded degree of an exponent vector, with `deg e_k = k`.
pub fn key_degree(key: &[u32]) -> u32 {
    key.iter().enumerate().map(|(i, &m)| (i as u32 + 1) * m).sum()
}

/// A polynomial in `e_1, ..., e_n` with big-integer coefficients.
#[derive(Clone, Debug)]
pub struct EPoly {
    n: usize,
    cap: Option<u32>,
    terms: BTreeMap<EKey, BigInt>,
}

impl PartialEq for EPoly {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for EPoly {}

fn min_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl EPoly {
    pub fn zero(n: usize, cap: Option<u32>) -> Self {
        EPoly { n, cap, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, cap: Option<u32>) -> Self {
        Self::constant(n, cap, BigInt::one())
    }

    pub fn constant(n: usize, cap: Option<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(n, cap);
        if !c.is_zero() {
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    /// The generator `e_k`; `e_0 = 1`, and `e_k = 0` for `k < 0` or `k > n`.
    pub fn e(k: i64, n: usize, cap: Option<u32>) -> Self {
        if k == 0 {
            return Self::one(n, cap);
        }
        if k < 0 || k as usize > n || cap.is_some_and(|c| k as u32 > c) {
            return Self::zero(n, cap);
        }
        let mut key = vec![0; n];
        key[k as usize - 1] = 1;
        let mut p = Self::zero(n, cap);
        p.terms.insert(key, BigInt::one());
        p
    }

    /// Builds a polynomial from explicit terms, dropping zero coefficients
    /// and terms above the cap.
    pub fn from_terms(n: usize, cap: Option<u32>, terms: impl IntoIterator<Item = (EKey, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(n, cap);
        for (k, c) in terms {
            if k.len() != n {
                return Err(Error::VarMismatch(n, k.len()));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, key: EKey, c: BigInt) {
        if c.is_zero() || self.cap.is_some_and(|cap| key_degree(&key) > cap) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<EKey, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[u32]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Largest graded degree of a stored term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| key_degree(k)).max()
    }

    /// The same polynomial with a new cap; terms above it are dropped.
    pub fn truncate(&self, cap: Option<u32>) -> Self {
        let mut p = Self::zero(self.n, cap);
        for (k, c) in &self.terms {
            p.add_term(k.clone(), c.clone());
        }
        p
    }

    /// The homogeneous component of graded degree `d`.
    pub fn component(&self, d: u32) -> Self {
        let mut p = Self::zero(self.n, self.cap);
        for (k, c) in &self.terms {
            if key_degree(k) == d {
                p.terms.insert(k.clone(), c.clone());
            }
        }
        p
    }

    /// Terms sorted by `(degree, key)`, the order used in reports.
    pub fn graded_terms(&self) -> Vec<(&EKey, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| key_degree(a.0).cmp(&key_degree(b.0)).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.n, self.cap);
        if c.is_zero() {
            return p;
        }
        for (k, v) in &self.terms {
            p.terms.insert(k.clone(), v * c);
        }
        p
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VarMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut p = self.clone();
        p.cap = min_cap(self.cap, other.cap);
        if p.cap != self.cap {
            p = p.truncate(p.cap);
        }
        for (k, c) in &other.terms {
            p.add_term(k.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.checked_add(&other.scale(&BigInt::from(-1)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let cap = min_cap(self.cap, other.cap);
        let mut p = Self::zero(self.n, cap);
        for (ka, ca) in &self.terms {
            let da = key_degree(ka);
            if cap.is_some_and(|c| da > c) {
                continue;
            }
            for (kb, cb) in &other.terms {
                if cap.is_some_and(|c| da + key_degree(kb) > c) {
                    continue;
                }
                let key: EKey = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                p.add_term(key, ca * cb);
            }
        }
        Ok(p)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n, self.cap);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let raw: EPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EPolyJson::from(self)).expect("serializable")
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in self.graded_terms() {
            let mono: Vec<String> = key
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| if m == 1 { format!("e{}", i + 1) } else { format!("e{}^{}", i + 1, m) })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ETermJson {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EPolyJson {
    n: usize,
    terms: Vec<ETermJson>,
}

impl From<&EPoly> for EPolyJson {
    fn from(p: &EPoly) -> Self {
        EPolyJson {
            n: p.n,
            terms: p
                .graded_terms()
                .into_iter()
                .map(|(k, c)| ETermJson { e: k.clone(), c: c.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<EPolyJson> for EPoly {
    type Error = Error;

    fn try_from(raw: EPolyJson) -> Result<Self> {
        if raw.n > 64 {
            return Err(Error::Parse(format!("too many variables: {}", raw.n)));
        }
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            terms.push((t.e, c));
        }
        EPoly::from_terms(raw.n, None, terms)
    }
}

impl Ring for EPoly {
    fn zero_like(&self) -> Self {
        EPoly::zero(self.n, self.cap)
    }
    fn one_like(&self) -> Self {
        EPoly::one(self.n, self.cap)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

macro_rules! forward_ops {
    ($t:ty, $($tr:ident $m:ident $checked:ident),*) => {$(
        impl $tr<&$t> for &$t {
            type Output = $t;
            /// Panics if the operands live in different rings.
            fn $m(self, rhs: &$t) -> $t {
                self.$checked(rhs).expect("operands in the same ring")
            }
        }
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_ops!(EPoly, Add add checked_add, Sub sub checked_sub, Mul mul checked_mul);
forward_ops!(XPoly, Add add checked_add, Sub sub checked_sub, Mul mul checked_mul);

impl Neg for &EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// `f_r = Σ_i e_i e_{i+r}`; zero unless `|r| ≤ n`.
pub fn f(r: i64, n: usize, cap: Option<u32>) -> EPoly {
    let mut acc = EPoly::zero(n, cap);
    let lo = 0.max(-r);
    let hi = (n as i64).min(n as i64 - r);
    for i in lo..=hi {
        acc = &acc + &(&EPoly::e(i, n, cap) * &EPoly::e(i + r, n, cap));
    }
    acc
}

/// `Σ_k s(k) f_{r+Nk}` over the finitely many `k` with `|r + Nk| ≤ n`.
fn periodic_f(r: i64, big_n: i64, n: usize, cap: Option<u32>, signed: bool) -> EPoly {
    assert!(big_n >= 1, "period must be positive");
    let n_i = n as i64;
    let k_lo = -Integer::div_floor(&(n_i + r), &big_n);
    let k_hi = Integer::div_floor(&(n_i - r), &big_n);
    let mut acc = EPoly::zero(n, cap);
    for k in k_lo..=k_hi {
        let t = f(r + big_n * k, n, cap);
        acc = if signed && k.rem_euclid(2) == 1 { &acc - &t } else { &acc + &t };
    }
    acc
}

/// `F_{r,N} = Σ_k f_{r+Nk}`.
pub fn big_f(r: i64, big_n: i64, n: usize, cap: Option<u32>) -> EPoly {
    periodic_f(r, big_n, n, cap, false)
}

/// `F̄_{r,N} = Σ_k (−1)^k f_{r+Nk}`.
pub fn big_f_bar(r: i64, big_n: i64, n: usize, cap: Option<u32>) -> EPoly {
    periodic_f(r, big_n, n, cap, true)
}

/// `e(x) = Σ_{i≥0} e_i`.
pub fn e_sum(n: usize, cap: Option<u32>) -> EPoly {
    (0..=n as i64).fold(EPoly::zero(n, cap), |acc, i| &acc + &EPoly::e(i, n, cap))
}

/// `ē(x) = Σ_{i≥0} (−1)^i e_i`.
pub fn e_alt(n: usize, cap: Option<u32>) -> EPoly {
    (0..=n as i64).fold(EPoly::zero(n, cap), |acc, i| {
        let t = EPoly::e(i, n, cap);
        if i % 2 == 0 {
            &acc + &t
        } else {
            &acc - &t
        }
    })
}

/// The named generators of the right-hand sides, for the command line and
/// for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E(i64),
    SmallF(i64),
    BigF { r: i64, period: i64 },
    BigFBar { r: i64, period: i64 },
    ESum,
    EAlt,
}

pub fn generator(kind: Generator, n: usize, cap: Option<u32>) -> EPoly {
    match kind {
        Generator::E(k) => EPoly::e(k, n, cap),
        Generator::SmallF(r) => f(r, n, cap),
        Generator::BigF { r, period } => big_f(r, period, n, cap),
        Generator::BigFBar { r, period } => big_f_bar(r, period, n, cap),
        Generator::ESum => e_sum(n, cap),
        Generator::EAlt => e_alt(n, cap),
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// The coefficient of `x_1 x_2 ··· x_n` in the monomial expansion.
///
/// A product of factors `e_{k_1} ··· e_{k_r}` with `Σ k_j = n` contains the
/// square-free monomial `n! / (k_1! ··· k_r!)` times: each variable chooses
/// the factor it comes from. Other degrees contribute nothing.
pub fn squarefree_coeff(p: &EPoly) -> BigInt {
    let n = p.n as u32;
    let mut total = BigInt::zero();
    for (key, c) in &p.terms {
        if key_degree(key) != n {
            continue;
        }
        let mut denom = BigInt::one();
        for (i, &m) in key.iter().enumerate() {
            denom *= factorial(i as u32 + 1).pow(m);
        }
        total += c * (factorial(n) / denom);
    }
    total
}

/// Exponent vector of a monomial in `x_1..x_n`. Exponents may be negative
/// for Laurent monomials.
pub type XKey = Vec<i32>;

/// A Laurent polynomial in `x_1..x_n` with big-integer coefficients and an
/// optional cap on the total degree.
#[derive(Clone, Debug)]
pub struct XPoly {
    n: usize,
    cap: Option<i32>,
    terms: BTreeMap<XKey, BigInt>,
}

impl PartialEq for XPoly {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for XPoly {}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mono: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl XPoly {
    pub fn zero(n: usize, cap: Option<i32>) -> Self {
        XPoly { n, cap, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, cap: Option<i32>) -> Self {
        Self::monomial(n, cap, vec![0; n], BigInt::one())
    }

    pub fn monomial(n: usize, cap: Option<i32>, key: XKey, c: BigInt) -> Self {
        let mut p = Self::zero(n, cap);
        p.add_term(key, c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(i: usize, n: usize, cap: Option<i32>) -> Self {
        let mut key = vec![0; n];
        key[i - 1] = 1;
        Self::monomial(n, cap, key, BigInt::one())
    }

    pub fn add_term(&mut self, key: XKey, c: BigInt) {
        assert_eq!(key.len(), self.n, "monomial arity");
        if c.is_zero() || self.cap.is_some_and(|cap| key.iter().sum::<i32>() > cap) {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<XKey, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[i32]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, cap: Option<i32>) -> Self {
        let mut p = Self::zero(self.n, cap);
        for (k, c) in &self.terms {
            p.add_term(k.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.n, self.cap);
        for (k, v) in &self.terms {
            p.add_term(k.clone(), v * c);
        }
        p
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VarMismatch(self.n, other.n));
        }
        let cap = match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut p = self.truncate(cap);
        for (k, c) in &other.terms {
            p.add_term(k.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&BigInt::from(-1)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VarMismatch(self.n, other.n));
        }
        let cap = match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut p = Self::zero(self.n, cap);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key: XKey = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                p.add_term(key, ca * cb);
            }
        }
        Ok(p)
    }
}

impl Ring for XPoly {
    fn zero_like(&self) -> Self {
        XPoly::zero(self.n, self.cap)
    }
    fn one_like(&self) -> Self {
        XPoly::one(self.n, self.cap)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// `e_k(x_1..x_n)` as an explicit sum of square-free monomials.
pub fn e_monomials(k: usize, n: usize, cap: Option<i32>) -> XPoly {
    let mut p = XPoly::zero(n, cap);
    if k > n {
        return p;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let key = (0..n).map(|i| ((mask >> i) & 1) as i32).collect();
            p.add_term(key, BigInt::one());
        }
    }
    p
}

/// Expands every `e`-monomial into `x`-monomials, keeping total degree at
/// most `cap`.
pub fn monomial_expand(p: &EPoly, cap: Option<i32>) -> XPoly {
    let n = p.n;
    let gens: Vec<XPoly> = (1..=n).map(|k| e_monomials(k, n, cap)).collect();
    let mut out = XPoly::zero(n, cap);
    for (key, c) in &p.terms {
        let mut mono = XPoly::one(n, cap);
        for (i, &m) in key.iter().enumerate() {
            for _ in 0..m {
                mono = &mono * &gens[i];
            }
        }
        out = &out + &mono.scale(c);
    }
    out
}

/// The four forms of the Pfaffian-to-determinant reduction for
/// `Pf(z_{j−i})` with `z_{−i} = −z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GordonVariant {
    Base,
    Var1,
    Var2,
    Var3,
}

/// Entry `(i, j)` (1-based) of the `h × h` matrix in the chosen variant.
pub fn gordon_entry<R: Ring>(z: &dyn Fn(i64) -> R, i: i64, j: i64, variant: GordonVariant) -> R {
    let zero = z(0).zero_like();
    match variant {
        GordonVariant::Base => {
            let mut acc = zero;
            let mut t = (j - i).abs() + 1;
            while t < i + j {
                acc = acc.add_ref(&z(t));
                t += 2;
            }
            acc
        }
        GordonVariant::Var1 | GordonVariant::Var2 => {
            let mut acc = zero;
            for s in 0..=2 * i.min(j) - 2 {
                let a = z(i + j - 1 - s);
                let b = z(i + j - 2 - s);
                let t = if variant == GordonVariant::Var1 { a.sub_ref(&b) } else { a.add_ref(&b) };
                acc = if variant == GordonVariant::Var1 && s % 2 == 1 { acc.sub_ref(&t) } else { acc.add_ref(&t) };
            }
            acc
        }
        GordonVariant::Var3 => match (i, j) {
            (1, 1) => z(1),
            (_, 1) => z(i).sub_ref(&z(i - 2)),
            (1, _) => z(j).sub_ref(&z(j - 2)),
            _ => z(i + j - 1)
                .sub_ref(&z(i + j - 3))
                .add_ref(&z((j - i).abs() + 1))
                .sub_ref(&z((j - i).abs() - 1)),
        },
    }
}

/// `Pf_{1≤i,j≤2h}(z_{j−i})`.
pub fn gordon_pfaffian<R: Ring>(z: &dyn Fn(i64) -> R, h: usize) -> R {
    let one = z(0).one_like();
    pfaffian_upper(2 * h, |i, j| z(j as i64 - i as i64), &one).expect("even size")
}

/// The `h × h` determinant side of the chosen variant.
pub fn gordon_determinant<R: Ring>(z: &dyn Fn(i64) -> R, h: usize, variant: GordonVariant) -> R {
    let one = z(0).one_like();
    let m = Matrix::from_fn(h, h, |i, j| gordon_entry(z, i as i64 + 1, j as i64 + 1, variant));
    determinant(&m, &one).expect("square")
}

/// Checks `Pf(z_{j−i}) = det(...)` for the chosen variant. The oracle must
/// satisfy `z_{−i} = −z_i`.
pub fn verify_gordon<R: Ring + PartialEq>(z: &dyn Fn(i64) -> R, h: usize, variant: GordonVariant) -> bool {
    gordon_pfaffian(z, h) == gordon_determinant(z, h, variant)
}

/// Which half of the minor summation formula to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

fn increasing_sequences(len: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in start..p {
            if p - k < len - cur.len() {
                break;
            }
            cur.push(k);
            rec(k + 1, len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, p, &mut Vec::new(), &mut out);
    out
}

/// Both sides of the minor summation formula: the sum over `K` of
/// `Pf(A_K^K) det(M_K)` and the Pfaffian of the compressed matrix.
///
/// For [`Parity::Odd`], `A` is `(p+1) × (p+1)` with index 0 as the border.
pub fn minor_summation_sides<R: Ring>(m: &Matrix<R>, a: &Matrix<R>, parity: Parity, one: &R) -> Result<(R, R)> {
    let (rows, p) = (m.rows(), m.cols());
    let border = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    if a.rows() != p + border || a.cols() != p + border {
        return Err(Error::Shape(format!("A must be {0}x{0}", p + border)));
    }
    if (rows + border) % 2 == 1 {
        return Err(Error::Shape(format!("row count {rows} has the wrong parity")));
    }
    a.check_skew()?;
    let mut lhs = one.zero_like();
    for k in increasing_sequences(rows, p) {
        let mut idx: Vec<usize> = (0..border).collect();
        idx.extend(k.iter().map(|&c| c + border));
        let pf = pfaffian(&a.select(&idx, &idx), one)?;
        if pf.is_zero_elem() {
            continue;
        }
        let all_rows: Vec<usize> = (0..rows).collect();
        let d = determinant(&m.select(&all_rows, &k), one)?;
        lhs = lhs.add_ref(&pf.mul_ref(&d));
    }
    let size = rows + border;
    let entry = |i: usize, j: usize| -> R {
        let mut acc = one.zero_like();
        if border == 1 && i == 0 {
            for r in 0..p {
                acc = acc.add_ref(&a.get(0, r + 1).mul_ref(m.get(j - 1, r)));
            }
            return acc;
        }
        let (ii, jj) = (i - border, j - border);
        for r in 0..p {
            for s in 0..p {
                let ars = a.get(r + border, s + border);
                if ars.is_zero_elem() {
                    continue;
                }
                acc = acc.add_ref(&ars.mul_ref(m.get(ii, r)).mul_ref(m.get(jj, s)));
            }
        }
        acc
    };
    let rhs = pfaffian_upper(size, entry, one)?;
    Ok((lhs, rhs))
}

pub fn verify_minor_summation<R: Ring + PartialEq>(m: &Matrix<R>, a: &Matrix<R>, parity: Parity, one: &R) -> Result<bool> {
    let (l, r) = minor_summation_sides(m, a, parity, one)?;
    Ok(l == r)
}

/// The skew-symmetric matrix with every entry above the diagonal equal to 1.
pub fn all_ones_skew<R: Ring>(size: usize, one: &R) -> Matrix<R> {
    Matrix::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => one.clone(),
        std::cmp::Ordering::Equal => one.zero_like(),
        std::cmp::Ordering::Greater => one.neg_ref(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn e(k: i64, n: usize) -> EPoly {
        EPoly::e(k, n, None)
    }

    #[test]
    fn ring_examples() {
        let p = &e(1, 2) * &e(1, 2);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coeff(&[2, 0]), bi(1));
        let q = &e(0, 2) + &e(1, 2);
        assert!((&q - &q).is_zero());
        assert!((&e(2, 1) * &e(2, 1)).is_zero());
        assert!(e(1, 2).checked_add(&e(1, 3)).is_err());
    }

    #[test]
    fn truncation_is_eager() {
        let p = EPoly::e(1, 2, Some(4));
        assert_eq!(p.pow(5).degree(), None);
        assert_eq!(p.pow(4).degree(), Some(4));
        let q = &EPoly::e(2, 2, Some(3)) * &EPoly::e(2, 2, Some(3));
        assert!(q.is_zero());
    }

    #[test]
    fn generators() {
        // f_0 in one variable is e_0^2 + e_1^2
        let f0 = f(0, 1, None);
        assert_eq!(f0, &EPoly::one(1, None) + &(&e(1, 1) * &e(1, 1)));
        for n in 1..=4 {
            for r in -5..=5 {
                assert_eq!(f(r, n, None), f(-r, n, None));
                if r.unsigned_abs() as usize > n {
                    assert!(f(r, n, None).is_zero());
                }
            }
        }
        assert!(big_f(2, 6, 1, None).is_zero());
    }

    #[test]
    fn periodic_symmetry_and_degeneration() {
        for n in 1..=4usize {
            for big_n in 1..=10i64 {
                for r in -(n as i64 + big_n)..=(n as i64 + big_n) {
                    assert_eq!(big_f(r, big_n, n, None), big_f(-r, big_n, n, None));
                    assert_eq!(big_f_bar(r, big_n, n, None), big_f_bar(-r, big_n, n, None));
                    if big_n > n as i64 + r.abs() {
                        assert_eq!(big_f(r, big_n, n, None), f(r, n, None));
                        assert_eq!(big_f_bar(r, big_n, n, None), f(r, n, None));
                    }
                }
            }
        }
    }

    #[test]
    fn determinant_examples() {
        let one = EPoly::one(2, None);
        let empty: EMatrix = Matrix::from_fn(0, 0, |_, _| unreachable!());
        assert_eq!(determinant(&empty, &one).unwrap(), one);
        let m = Matrix::from_rows(vec![vec![e(1, 2), e(2, 2)], vec![e(0, 2), e(1, 2)]]).unwrap();
        let want = &(&e(1, 2) * &e(1, 2)) - &e(2, 2);
        assert_eq!(determinant(&m, &one).unwrap(), want);
        let d = Matrix::from_fn(3, 3, |i, j| if i == j { e(1, 3) } else { EPoly::zero(3, None) });
        assert_eq!(determinant(&d, &EPoly::one(3, None)).unwrap(), e(1, 3).pow(3));
        assert!(determinant(&Matrix::from_fn(2, 3, |_, _| 0i64), &1).is_err());
    }

    #[test]
    fn pfaffian_examples() {
        let a = Matrix::from_rows(vec![vec![0i64, 7], vec![-7, 0]]).unwrap();
        assert_eq!(pfaffian(&a, &1).unwrap(), 7);
        for p in 0..5 {
            assert_eq!(pfaffian(&all_ones_skew(2 * p, &1i64), &1).unwrap(), 1);
        }
        // generic 4x4 with distinct primes as entries
        let v = [2i64, 3, 5, 7, 11, 13];
        let mut idx = 0;
        let mut up = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                up[i][j] = v[idx];
                idx += 1;
            }
        }
        let a = Matrix::from_fn(4, 4, |i, j| if i < j { up[i][j] } else if i > j { -up[j][i] } else { 0 });
        let want = up[0][1] * up[2][3] - up[0][2] * up[1][3] + up[0][3] * up[1][2];
        assert_eq!(pfaffian(&a, &1).unwrap(), want);
        assert!(pfaffian(&Matrix::from_fn(3, 3, |_, _| 0i64), &1).is_err());
        assert!(pfaffian(&Matrix::from_rows(vec![vec![0i64, 1], vec![1, 0]]).unwrap(), &1).is_err());
    }

    fn random_skew(rng: &mut impl Rng, size: usize) -> Matrix<BigInt> {
        let mut up = vec![vec![0i64; size]; size];
        for (i, row) in up.iter_mut().enumerate() {
            for x in row.iter_mut().skip(i + 1) {
                *x = rng.gen_range(-5..=5);
            }
        }
        Matrix::from_fn(size, size, |i, j| {
            bi(if i < j { up[i][j] } else if i > j { -up[j][i] } else { 0 })
        })
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let one = BigInt::one();
        for trial in 0..100 {
            let size = 2 * (trial % 3 + 1);
            let a = random_skew(&mut rng, size);
            let pf = pfaffian(&a, &one).unwrap();
            assert_eq!(&pf * &pf, determinant(&a, &one).unwrap());
        }
    }

    /// Leibniz formula over all permutations, the reference determinant.
    fn leibniz(m: &Matrix<BigInt>) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut total = BigInt::zero();
        for p in perms(n) {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let prod = (0..n).fold(BigInt::one(), |acc, i| acc * m.get(i, p[i]));
            total += if inv % 2 == 0 { prod } else { -prod };
        }
        total
    }

    proptest! {
        #[test]
        fn determinant_matches_leibniz(vals in proptest::collection::vec(-6i64..=6, 25), n in 1usize..=5) {
            let m = Matrix::from_fn(n, n, |i, j| bi(vals[i * 5 + j]));
            prop_assert_eq!(determinant(&m, &BigInt::one()).unwrap(), leibniz(&m));
        }

        #[test]
        fn determinant_alternates_under_row_swap(vals in proptest::collection::vec(-4i64..=4, 9), a in 0usize..3, b in 0usize..3) {
            prop_assume!(a != b);
            let n = 2;
            let polys: Vec<EPoly> = vals.iter().enumerate().map(|(i, &v)| {
                &EPoly::constant(n, None, bi(v)) + &EPoly::e((i % 3) as i64, n, None)
            }).collect();
            let m = Matrix::from_fn(3, 3, |i, j| polys[i * 3 + j].clone());
            let swapped = Matrix::from_fn(3, 3, |i, j| {
                let r = if i == a { b } else if i == b { a } else { i };
                polys[r * 3 + j].clone()
            });
            let one = EPoly::one(n, None);
            prop_assert_eq!(determinant(&m, &one).unwrap(), -&determinant(&swapped, &one).unwrap());
        }

        #[test]
        fn determinant_is_linear_in_a_row(vals in proptest::collection::vec(-4i64..=4, 12), row in 0usize..3) {
            let n = 2;
            let poly = |v: i64, k: usize| &EPoly::constant(n, None, bi(v)) + &EPoly::e((k % 3) as i64, n, None);
            let base = Matrix::from_fn(3, 3, |i, j| poly(vals[i * 3 + j], i + j));
            let extra: Vec<EPoly> = (0..3).map(|j| poly(vals[9 + j], j + 1)).collect();
            let sum = Matrix::from_fn(3, 3, |i, j| if i == row { base.get(i, j) + &extra[j] } else { base.get(i, j).clone() });
            let other = Matrix::from_fn(3, 3, |i, j| if i == row { extra[j].clone() } else { base.get(i, j).clone() });
            let one = EPoly::one(n, None);
            let lhs = determinant(&sum, &one).unwrap();
            let rhs = &determinant(&base, &one).unwrap() + &determinant(&other, &one).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn expansion_is_multiplicative(a in proptest::collection::vec(-3i64..=3, 6), b in proptest::collection::vec(-3i64..=3, 6)) {
            let n = 3;
            let build = |c: &[i64]| {
                let terms = vec![
                    (vec![0, 0, 0], bi(c[0])), (vec![1, 0, 0], bi(c[1])), (vec![0, 1, 0], bi(c[2])),
                    (vec![0, 0, 1], bi(c[3])), (vec![2, 0, 0], bi(c[4])), (vec![1, 1, 0], bi(c[5])),
                ];
                EPoly::from_terms(n, None, terms).unwrap()
            };
            let (p, q) = (build(&a), build(&b));
            let cap = Some(5);
            let lhs = monomial_expand(&(&p * &q), cap);
            let rhs = &monomial_expand(&p, cap) * &monomial_expand(&q, cap);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_coeff(&(&e(2, 3) * &e(1, 3))), bi(3));
        for n in 1..=5 {
            assert_eq!(squarefree_coeff(&e(n as i64, n)), bi(1));
        }
        assert_eq!(squarefree_coeff(&e(1, 3).pow(3)), bi(6));
    }

    #[test]
    fn squarefree_agrees_with_expansion() {
        let n = 4;
        let p = &(&e(2, n) * &e(1, n).pow(2)) + &(&e(3, n) * &e(1, n)).scale(&bi(-2));
        let x = monomial_expand(&p, None);
        assert_eq!(squarefree_coeff(&p), x.coeff(&[1, 1, 1, 1]));
    }

    #[test]
    fn expansion_examples() {
        let e2 = monomial_expand(&e(2, 3), None);
        assert_eq!(e2.terms().len(), 3);
        for k in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
            assert_eq!(e2.coeff(&k), bi(1));
        }
        let sq = monomial_expand(&e(1, 2).pow(2), None);
        assert_eq!(sq.coeff(&[2, 0]), bi(1));
        assert_eq!(sq.coeff(&[1, 1]), bi(2));
        assert_eq!(sq.coeff(&[0, 2]), bi(1));
        let f0 = monomial_expand(&f(0, 1, None), Some(2));
        let want = &XPoly::one(1, None) + &XPoly::monomial(1, None, vec![2], bi(1));
        assert_eq!(f0, want);
    }

    fn int_z(i: i64) -> BigInt {
        bi(i)
    }

    #[test]
    fn gordon_small_cases() {
        let z = |i: i64| bi(3 * i * i * i - i);
        for v in [GordonVariant::Base, GordonVariant::Var1, GordonVariant::Var2, GordonVariant::Var3] {
            assert_eq!(gordon_pfaffian(&z, 1), z(1));
            assert!(verify_gordon(&z, 1, v));
            assert!(verify_gordon(&int_z, 2, v), "{v:?}");
        }
        let n = 2;
        let zf = move |i: i64| &f(i - 1, n, None) - &f(i + 1, n, None);
        for v in [GordonVariant::Base, GordonVariant::Var1, GordonVariant::Var2, GordonVariant::Var3] {
            assert!(verify_gordon(&zf, 2, v), "{v:?}");
        }
    }

    #[test]
    fn minor_summation_small_cases() {
        let one = BigInt::one();
        let a = Matrix::from_rows(vec![vec![bi(0), bi(1)], vec![bi(-1), bi(0)]]).unwrap();
        let m = Matrix::from_rows(vec![vec![bi(2), bi(3)], vec![bi(5), bi(-7)]]).unwrap();
        let (l, r) = minor_summation_sides(&m, &a, Parity::Even, &one).unwrap();
        assert_eq!(l, determinant(&m, &one).unwrap());
        assert_eq!(r, l);
        let m = Matrix::from_fn(2, 4, |i, j| bi((i as i64 + 2) * (j as i64 + 1) - 3 * (j as i64 % 2)));
        assert!(verify_minor_summation(&m, &all_ones_skew(4, &one), Parity::Even, &one).unwrap());
        let m = Matrix::from_fn(3, 4, |i, j| bi(((i * 7 + j * 3) % 5) as i64 - 2));
        assert!(verify_minor_summation(&m, &all_ones_skew(5, &one), Parity::Odd, &one).unwrap());
        assert!(minor_summation_sides(&m, &all_ones_skew(4, &one), Parity::Odd, &one).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = &(&e(2, 3) * &e(1, 3)).scale(&bi(-5)) + &EPoly::one(3, None);
        let s = p.to_json();
        assert_eq!(s, r#"{"n":3,"terms":[{"e":[0,0,0],"c":"1"},{"e":[1,1,0],"c":"-5"}]}"#);
        assert_eq!(EPoly::parse_json(&s).unwrap(), p);
        assert!(EPoly::parse_json(r#"{"n":2,"terms":[{"e":[1],"c":"1"}]}"#).is_err());
        assert!(EPoly::parse_json(r#"{"n":1,"terms":[{"e":[1],"c":"x"}]}"#).is_err());
    }
}
