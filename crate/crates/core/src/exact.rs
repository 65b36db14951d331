//! Exact arithmetic shared by every engine: binomials, dense truncated power
//! series over the rationals, and partitions in a box.
//!
//! Nothing in this crate rounds. Coefficients are `BigRational` throughout
//! even where they are known to be integral, and conversions back to
//! integers are checked.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Integer value of an exact rational, or `None` if it has a denominator.
pub fn to_integer(q: &BigRat) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(n, k)` as a machine integer, for sizes and ranks.
pub fn choose(n: usize, k: usize) -> usize {
    binomial(n as u64, k as i64)
        .to_usize()
        .expect("binomial coefficient overflows usize")
}

/// Dense power series `c_0 + c_1 t + ... + c_T t^T` truncated at order `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// coefficients above the order are dropped.
    pub fn new(mut coeffs: Vec<BigRat>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRat::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRat::one()], order)
    }

    /// `c * t^k`.
    pub fn monomial(c: BigRat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Exact coefficient of `t^k`; asking above the truncation order is an error.
    pub fn coefficient(&self, k: usize) -> Result<&BigRat> {
        self.coeffs.get(k).ok_or(Error::OutOfRange {
            index: k,
            order: self.order(),
        })
    }

    /// Coefficient of `t^k` as an integer.
    pub fn integer_coefficient(&self, k: usize) -> Result<BigInt> {
        let c = self.coefficient(k)?;
        to_integer(c).ok_or_else(|| Error::Consistency(format!("coefficient of t^{k} is {c}")))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out = vec![BigRat::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for k in 1..out.len() {
            let mut acc = BigRat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_palindromic(&self, degree: usize) -> bool {
        degree <= self.order() && (0..=degree).all(|k| self.coeffs[k] == self.coeffs[degree - k])
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

/// Expands `prod(1 - t^a_i) / prod(1 - t^b_j)` to order `order`.
pub fn geometric_quotient_series(
    numerator_exps: &[i64],
    denominator_exps: &[i64],
    order: usize,
) -> Result<TruncSeries> {
    if let Some(b) = denominator_exps.iter().find(|&&b| b <= 0) {
        return Err(Error::InvalidInput(format!(
            "denominator exponent {b} must be positive"
        )));
    }
    if let Some(a) = numerator_exps.iter().find(|&&a| a <= 0) {
        return Err(Error::InvalidInput(format!(
            "numerator exponent {a} must be positive"
        )));
    }
    let mut c: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for &a in numerator_exps {
        let a = a as usize;
        for k in (a..=order).rev() {
            let prev = c[k - a].clone();
            c[k] -= prev;
        }
    }
    // 1/(1 - t^b) is a running sum with stride b
    for &b in denominator_exps {
        let b = b as usize;
        for k in b..=order {
            let prev = c[k - b].clone();
            c[k] += prev;
        }
    }
    Ok(TruncSeries::new(
        c.into_iter().map(BigRat::from_integer).collect(),
        order,
    ))
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.parts.len() <= rows && self.part(0) <= cols
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self {
            parts: (0..width)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Complement inside the `rows x cols` box, rotated by 180 degrees.
    pub fn complement(&self, rows: usize, cols: usize) -> Option<Self> {
        if !self.fits(rows, cols) {
            return None;
        }
        Some(Self::new(
            (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect(),
        ))
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, ordered by
/// size and then reverse-lexicographically.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn extend(rows: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()));
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max_part {
            prefix.push(p);
            extend(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(rows, cols, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    out
}
