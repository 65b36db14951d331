//! Invariants of smooth complete intersections `X_(d_1..d_r)` in `P^{n+r}`.
//!
//! The Euler characteristic comes from the total Chern class
//! `(1+h)^{n+r+1} / prod(1 + d_i h)`; the full Hodge diamond comes from
//! Hirzebruch's generating series for the chi_y genus. For hypersurfaces the
//! diamond is checked against the Jacobian-ring route in [`crate::cover`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cover::WeightedHypersurface;
use crate::diamond::{BettiTable, HodgeDiamond, HodgeLevel};
use crate::error::{Error, Result};
use crate::exact::{binomial, rat, to_integer, BigRat, TruncSeries};

/// A smooth complete intersection of dimension `dim` cut out by forms of the
/// given degrees. Degree-one entries are dropped at construction and the
/// remaining degrees are kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CompleteIntersection {
    dim: usize,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    pub fn new(dim: usize, degrees: &[u32]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidInput("degrees must be positive".into()));
        }
        let mut degrees: Vec<u32> = degrees.iter().copied().filter(|&d| d > 1).collect();
        degrees.sort_unstable();
        Ok(Self { dim, degrees })
    }

    /// Projective space `P^n`.
    pub fn projective_space(dim: usize) -> Result<Self> {
        Self::new(dim, &[])
    }

    pub fn hypersurface(dim: usize, degree: u32) -> Result<Self> {
        Self::new(dim, &[degree])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim + self.codim()
    }

    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "P^{}", self.dim);
        }
        let degs: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "X({}) in P^{}", degs.join(","), self.ambient_dim())
    }
}

/// `(-1)^k` times the complete homogeneous symmetric polynomial of degree `k`
/// in the degrees.
pub fn signed_power_sum(k: usize, degrees: &[u32]) -> BigInt {
    // h[j] accumulates h_j over the degrees processed so far
    let mut h = vec![BigInt::zero(); k + 1];
    h[0] = BigInt::one();
    for &d in degrees {
        for j in 1..=k {
            let prev = &h[j - 1] * d;
            h[j] += prev;
        }
    }
    let v = std::mem::take(&mut h[k]);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `(1+h)^{n+r+1} / prod(1 + d_i h)` truncated at `h^n`.
pub fn chern_series(x: &CompleteIntersection) -> TruncSeries {
    chern_series_raw(x.dim, &x.degrees)
}

fn chern_series_raw(dim: usize, degrees: &[u32]) -> TruncSeries {
    let ambient = (dim + degrees.len() + 1) as u64;
    let numerator = TruncSeries::new(
        (0..=dim)
            .map(|i| BigRat::from_integer(binomial(ambient, i as i64)))
            .collect(),
        dim,
    );
    degrees.iter().fold(numerator, |acc, &d| {
        let factor = TruncSeries::from_integers(&[1, i64::from(d)], dim);
        &acc * &factor.inverse().expect("constant term is one")
    })
}

/// Topological Euler characteristic, evaluated as
/// `prod(d_i) * sum_i C(n+r+1, i) p_{n-i}(d)`.
pub fn euler_characteristic(x: &CompleteIntersection) -> BigInt {
    euler_characteristic_raw(x.dim, &x.degrees)
}

/// Same formula, also valid in dimension zero (a set of `prod(d_i)` points).
pub(crate) fn euler_characteristic_raw(dim: usize, degrees: &[u32]) -> BigInt {
    let ambient = (dim + degrees.len() + 1) as u64;
    let sum: BigInt = (0..=dim)
        .map(|i| binomial(ambient, i as i64) * signed_power_sum(dim - i, degrees))
        .sum();
    let product: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    product * sum
}

/// Middle Betti number from the Euler characteristic and the unit classes in
/// the other even degrees.
pub fn middle_betti(x: &CompleteIntersection) -> Result<u64> {
    middle_betti_from_euler(x.dim, &euler_characteristic(x))
}

pub(crate) fn middle_betti_from_euler(dim: usize, euler: &BigInt) -> Result<u64> {
    let n = BigInt::from(dim);
    let b = if dim % 2 == 1 {
        &n + 1 - euler
    } else {
        euler - &n
    };
    b.to_u64().ok_or_else(|| {
        Error::Consistency(format!(
            "middle Betti number {b} is negative or too large (dimension {dim}, euler {euler})"
        ))
    })
}

pub fn betti_table(x: &CompleteIntersection) -> Result<BettiTable> {
    let n = x.dim;
    let mid = middle_betti(x)?;
    Ok(BettiTable::new(
        (0..=2 * n)
            .map(|k| if k == n { mid } else { u64::from(k % 2 == 0) })
            .collect(),
    ))
}

/// Dense truncated series in two variables `z`, `y`.
#[derive(Clone)]
struct BiSeries {
    /// `c[i][j]` is the coefficient of `z^i y^j`
    c: Vec<Vec<BigRat>>,
}

impl BiSeries {
    fn zero(zmax: usize, ymax: usize) -> Self {
        Self {
            c: vec![vec![BigRat::zero(); ymax + 1]; zmax + 1],
        }
    }

    fn zmax(&self) -> usize {
        self.c.len() - 1
    }

    fn ymax(&self) -> usize {
        self.c[0].len() - 1
    }

    fn add_term(&mut self, i: usize, j: usize, v: BigRat) {
        if i <= self.zmax() && j <= self.ymax() {
            self.c[i][j] += v;
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let (zm, ym) = (self.zmax(), self.ymax());
        let mut out = Self::zero(zm, ym);
        for i1 in 0..=zm {
            for j1 in 0..=ym {
                let a = &self.c[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=zm - i1 {
                    for j2 in 0..=ym - j1 {
                        let b = &other.c[i2][j2];
                        if !b.is_zero() {
                            out.c[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Inverse of a series with constant term one.
    fn inverse(&self) -> Self {
        debug_assert!(self.c[0][0].is_one());
        let (zm, ym) = (self.zmax(), self.ymax());
        let mut out = Self::zero(zm, ym);
        for i in 0..=zm {
            for j in 0..=ym {
                if i == 0 && j == 0 {
                    out.c[0][0] = BigRat::one();
                    continue;
                }
                let mut acc = BigRat::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if (i1, j1) == (0, 0) || self.c[i1][j1].is_zero() {
                            continue;
                        }
                        acc += &self.c[i1][j1] * &out.c[i - i1][j - j1];
                    }
                }
                out.c[i][j] = -acc;
            }
        }
        out
    }
}

/// chi_y genus coefficients `chi^p = sum_q (-1)^q h^{p,q}` for `p = 0..=n`,
/// read off from Hirzebruch's series
/// `1/((1+zy)(1-z)) prod_i ((1+zy)^{d_i} - (1-z)^{d_i}) / ((1+zy)^{d_i} + y(1-z)^{d_i})`
/// at `z^{n+r}`.
fn chi_y_coefficients(dim: usize, degrees: &[u32]) -> Vec<BigRat> {
    let zmax = dim + degrees.len();
    let ymax = dim;

    let mut base = BiSeries::zero(zmax, ymax);
    // (1 + zy)(1 - z) = 1 - z + zy - z^2 y
    base.add_term(0, 0, rat(1));
    base.add_term(1, 0, rat(-1));
    base.add_term(1, 1, rat(1));
    base.add_term(2, 1, rat(-1));
    let mut h = base.inverse();

    for &d in degrees {
        let d = u64::from(d);
        let mut num = BiSeries::zero(zmax + 1, ymax);
        let mut den = BiSeries::zero(zmax, ymax);
        for j in 0..=d as usize {
            let c = BigRat::from_integer(binomial(d, j as i64));
            let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
            // (1 + zy)^d
            num.add_term(j, j, c.clone());
            den.add_term(j, j, c.clone());
            // (1 - z)^d
            num.add_term(j, 0, -(&c * &sign));
            den.add_term(j, 1, &c * &sign);
        }
        // the numerator vanishes at z = 0 and the denominator is 1 + y there;
        // divide the numerator by z and normalize the denominator to 1 + ...
        let mut shifted = BiSeries::zero(zmax, ymax);
        for i in 1..=zmax + 1 {
            for j in 0..=ymax {
                shifted.c[i - 1][j] = num.c[i][j].clone();
            }
        }
        // 1/(1+y) as a series in y
        let mut inv_one_plus_y = BiSeries::zero(zmax, ymax);
        for j in 0..=ymax {
            inv_one_plus_y.c[0][j] = if j % 2 == 0 { rat(1) } else { rat(-1) };
        }
        let den_normalized = den.mul(&inv_one_plus_y);
        let factor = shifted.mul(&inv_one_plus_y).mul(&den_normalized.inverse());
        // restore the factor of z removed above
        let mut z_factor = BiSeries::zero(zmax, ymax);
        for i in 0..zmax {
            z_factor.c[i + 1] = factor.c[i].clone();
        }
        h = h.mul(&z_factor);
    }
    h.c[zmax].clone()
}

/// Full Hodge diamond, cross-checked against the Euler route and, for
/// hypersurfaces, against the Jacobian-ring route.
pub fn hodge_diamond(x: &CompleteIntersection) -> Result<HodgeDiamond> {
    let n = x.dim;
    let chi = chi_y_coefficients(n, &x.degrees);
    let mut middle = vec![0u64; n + 1];
    for (p, chi_p) in chi.iter().enumerate() {
        let q = n - p;
        let mut v = chi_p.clone();
        if 2 * p != n {
            v -= if p % 2 == 0 { rat(1) } else { rat(-1) };
        }
        if q % 2 == 1 {
            v = -v;
        }
        let h = to_integer(&v)
            .and_then(|z| z.to_u64())
            .ok_or_else(|| Error::Consistency(format!("h^{{{p},{q}}} evaluates to {v}")))?;
        middle[q] = h;
    }
    let diamond = HodgeDiamond::from_middle_row(n, &middle)?;

    let expected = middle_betti(x)?;
    let got = diamond.betti(n);
    if got != expected {
        return Err(Error::RouteDisagreement {
            quantity: format!("middle Betti number of {x}"),
            detail: format!("Hodge route {got}, Euler route {expected}"),
        });
    }
    if x.codim() == 1 {
        let jacobian = WeightedHypersurface::new(vec![1; n + 2], x.degrees[0])?.hodge_diamond()?;
        if jacobian != diamond {
            return Err(Error::RouteDisagreement {
                quantity: format!("Hodge diamond of {x}"),
                detail: format!(
                    "generating series gives {:?}, Jacobian ring gives {:?}",
                    diamond.middle_row(),
                    jacobian.middle_row()
                ),
            });
        }
    }
    Ok(diamond)
}

/// Odd-dimensional complete intersections with degree sum at most
/// `max_degree_sum` and dimension in `3..=max_dim` whose middle cohomology is
/// nonzero of level at most one. Sorted by dimension, then degrees.
pub fn classify_level_one(
    max_dim: usize,
    max_degree_sum: u32,
) -> Result<Vec<CompleteIntersection>> {
    if max_dim < 3 {
        return Err(Error::InvalidInput(format!(
            "max_dim must be at least 3, got {max_dim}"
        )));
    }
    let mut found = Vec::new();
    for n in (3..=max_dim).step_by(2) {
        for degrees in degree_multisets(max_degree_sum) {
            let x = CompleteIntersection::new(n, &degrees)?;
            if is_level_one(&x)? {
                found.push(x);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Nonzero middle cohomology of level at most one.
pub fn is_level_one(x: &CompleteIntersection) -> Result<bool> {
    let level = hodge_diamond(x)?.level(x.dim)?;
    Ok(matches!(level, HodgeLevel::Level(0) | HodgeLevel::Level(1)))
}

/// All multisets of integers `>= 2` with sum at most `max_sum`, ascending.
fn degree_multisets(max_sum: u32) -> Vec<Vec<u32>> {
    fn extend(min: u32, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        for d in min..=remaining {
            prefix.push(d);
            extend(d, remaining - d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(2, max_sum, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(dim: usize, degrees: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(dim, degrees).unwrap()
    }

    /// Oracle: brute-force sum over non-decreasing index sequences.
    fn brute_power_sum(k: usize, degrees: &[u32]) -> i64 {
        fn rec(k: usize, start: usize, degrees: &[u32]) -> i64 {
            if k == 0 {
                return 1;
            }
            (start..degrees.len())
                .map(|i| i64::from(degrees[i]) * rec(k - 1, i, degrees))
                .sum()
        }
        let v = rec(k, 0, degrees);
        if k % 2 == 1 {
            -v
        } else {
            v
        }
    }

    #[test]
    fn construction_normalizes() {
        let x = ci(3, &[3, 1, 2]);
        assert_eq!(x.degrees(), &[2, 3]);
        assert_eq!(x.ambient_dim(), 5);
        assert_eq!(x.to_string(), "X(2,3) in P^5");
        assert!(CompleteIntersection::new(0, &[3]).is_err());
        assert!(CompleteIntersection::new(3, &[0]).is_err());
        assert_eq!(ci(2, &[]).to_string(), "P^2");
    }

    #[test]
    fn power_sums() {
        assert_eq!(signed_power_sum(0, &[5, 7]), BigInt::one());
        assert_eq!(signed_power_sum(3, &[3]), BigInt::from(-27));
        assert_eq!(brute_power_sum(2, &[2, 3]), 19);
        assert_eq!(signed_power_sum(2, &[2, 3]), BigInt::from(19));
        for k in 0..7 {
            for degs in [&[2u32, 3, 4][..], &[5], &[2, 2, 2, 2], &[]] {
                assert_eq!(
                    signed_power_sum(k, degs),
                    BigInt::from(brute_power_sum(k, degs))
                );
            }
        }
    }

    #[test]
    fn chern_series_examples() {
        let cubic3 = chern_series(&ci(3, &[3]));
        assert_eq!(cubic3.coefficient(3).unwrap(), &rat(-2));
        let p3 = chern_series(&ci(3, &[]));
        assert_eq!(p3, TruncSeries::from_integers(&[1, 4, 6, 4], 3));
        let quartic4 = chern_series(&ci(4, &[4]));
        assert_eq!(quartic4.coefficient(4).unwrap(), &rat(47));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&ci(3, &[3])), BigInt::from(-6));
        assert_eq!(euler_characteristic(&ci(3, &[2, 2])), BigInt::zero());
        assert_eq!(euler_characteristic(&ci(4, &[4])), BigInt::from(188));
        assert_eq!(euler_characteristic(&ci(3, &[4])), BigInt::from(-56));
        assert_eq!(euler_characteristic(&ci(5, &[2, 2, 2])), BigInt::from(-48));
        assert_eq!(euler_characteristic(&ci(2, &[])), BigInt::from(3));
        // plane quartic curve and K3
        assert_eq!(euler_characteristic(&ci(1, &[4])), BigInt::from(-4));
        assert_eq!(euler_characteristic(&ci(2, &[4])), BigInt::from(24));
        // points
        assert_eq!(euler_characteristic_raw(0, &[4]), BigInt::from(4));
    }

    #[test]
    fn middle_betti_examples() {
        assert_eq!(middle_betti(&ci(3, &[4])).unwrap(), 60);
        assert_eq!(middle_betti(&ci(5, &[3])).unwrap(), 42);
        assert_eq!(middle_betti(&ci(5, &[2, 2, 2])).unwrap(), 54);
        assert_eq!(middle_betti(&ci(4, &[4])).unwrap(), 184);
        assert_eq!(middle_betti(&ci(3, &[2])).unwrap(), 0);
        assert_eq!(middle_betti(&ci(4, &[2])).unwrap(), 2);
    }

    #[test]
    fn negative_middle_betti_is_a_consistency_failure() {
        assert!(matches!(
            middle_betti_from_euler(3, &BigInt::from(10)),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn betti_tables() {
        assert_eq!(
            betti_table(&ci(3, &[3])).unwrap().numbers(),
            &[1, 0, 1, 10, 1, 0, 1]
        );
        assert_eq!(
            betti_table(&ci(2, &[])).unwrap().numbers(),
            &[1, 0, 1, 0, 1]
        );
        assert_eq!(
            betti_table(&ci(3, &[2, 2])).unwrap().numbers(),
            &[1, 0, 1, 4, 1, 0, 1]
        );
    }

    #[test]
    fn diamonds() {
        assert_eq!(hodge_diamond(&ci(3, &[3])).unwrap().get(2, 1), 5);
        assert_eq!(hodge_diamond(&ci(3, &[2, 3])).unwrap().get(2, 1), 20);
        let q4 = hodge_diamond(&ci(4, &[4])).unwrap();
        assert_eq!(q4.get(3, 1), 21);
        assert_eq!(q4.get(2, 2), 142);
        assert_eq!(q4.middle_row(), vec![0, 21, 142, 21, 0]);
        let p3 = hodge_diamond(&ci(3, &[])).unwrap();
        assert_eq!(p3.betti_table().numbers(), &[1, 0, 1, 0, 1, 0, 1]);
        let k3 = hodge_diamond(&ci(2, &[4])).unwrap();
        assert_eq!(k3.middle_row(), vec![1, 20, 1]);
        let curve = hodge_diamond(&ci(1, &[2, 3])).unwrap();
        assert_eq!(curve.middle_row(), vec![4, 4]);
    }

    #[test]
    fn levels() {
        assert_eq!(
            hodge_diamond(&ci(3, &[3])).unwrap().level(3).unwrap(),
            HodgeLevel::Level(1)
        );
        assert_eq!(
            hodge_diamond(&ci(3, &[2])).unwrap().level(3).unwrap(),
            HodgeLevel::Empty
        );
        assert_eq!(
            hodge_diamond(&ci(4, &[3])).unwrap().level(4).unwrap(),
            HodgeLevel::Level(2)
        );
        assert_eq!(
            hodge_diamond(&ci(3, &[5])).unwrap().level(3).unwrap(),
            HodgeLevel::Level(3)
        );
    }

    #[test]
    fn jacobian_dimensions() {
        assert_eq!(
            hodge_diamond(&ci(5, &[3]))
                .unwrap()
                .jacobian_dimension(3)
                .unwrap(),
            21
        );
        // two quadrics in P^11, m = 4
        assert_eq!(
            hodge_diamond(&ci(9, &[2, 2]))
                .unwrap()
                .jacobian_dimension(5)
                .unwrap(),
            5
        );
        assert_eq!(
            hodge_diamond(&ci(5, &[2, 2, 2]))
                .unwrap()
                .jacobian_dimension(3)
                .unwrap(),
            27
        );
    }

    #[test]
    fn classification_windows() {
        let got = classify_level_one(5, 6).unwrap();
        let want: Vec<_> = [
            (3, &[3][..]),
            (3, &[4]),
            (3, &[2, 3]),
            (3, &[2, 2]),
            (3, &[2, 2, 2]),
            (5, &[2, 2]),
            (5, &[2, 2, 2]),
            (5, &[3]),
        ]
        .iter()
        .map(|(n, d)| ci(*n, d))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(got, want);

        assert_eq!(classify_level_one(3, 3).unwrap(), vec![ci(3, &[3])]);
        assert!(classify_level_one(3, 1).unwrap().is_empty());
        assert!(classify_level_one(1, 6).is_err());
    }

    #[test]
    fn degree_one_normalization_is_invisible() {
        let a = ci(3, &[2, 3]);
        let b = ci(3, &[1, 2, 3]);
        assert_eq!(a, b);
        assert_eq!(
            euler_characteristic_raw(3, &[1, 2, 3]),
            euler_characteristic(&a)
        );
        assert_eq!(chern_series_raw(3, &[1, 2, 3]), chern_series(&a));
    }

    #[test]
    fn degree_multiset_enumeration() {
        let m = degree_multisets(4);
        assert_eq!(m, vec![vec![], vec![2], vec![2, 2], vec![3], vec![4]]);
    }
}
