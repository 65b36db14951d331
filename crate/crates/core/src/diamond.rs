//! Hodge diamonds and the views derived from them.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Level of a pure Hodge structure: the largest `|p - q|` with `h^{p,q} != 0`,
/// or `Empty` for the zero structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HodgeLevel {
    Empty,
    Level(usize),
}

impl HodgeLevel {
    pub fn value(self) -> Option<usize> {
        match self {
            HodgeLevel::Empty => None,
            HodgeLevel::Level(l) => Some(l),
        }
    }
}

impl fmt::Display for HodgeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HodgeLevel::Empty => write!(f, "EMPTY"),
            HodgeLevel::Level(l) => write!(f, "{l}"),
        }
    }
}

impl Serialize for HodgeLevel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HodgeLevel::Empty => s.serialize_str("EMPTY"),
            HodgeLevel::Level(l) => s.serialize_u64(*l as u64),
        }
    }
}

/// Betti numbers `b_0 .. b_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BettiTable {
    b: Vec<u64>,
}

impl BettiTable {
    pub fn new(b: Vec<u64>) -> Self {
        Self { b }
    }

    pub fn numbers(&self) -> &[u64] {
        &self.b
    }

    pub fn get(&self, k: usize) -> u64 {
        self.b.get(k).copied().unwrap_or(0)
    }

    pub fn alternating_sum(&self) -> i64 {
        self.b
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_poincare_symmetric(&self) -> bool {
        let top = self.b.len().saturating_sub(1);
        (0..self.b.len()).all(|k| self.b[k] == self.b[top - k])
    }
}

/// The table `h^{p,q}`, `0 <= p, q <= n`, of a smooth projective variety of
/// dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HodgeDiamond {
    dim: usize,
    /// `h[p][q]`
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    /// Builds a diamond, rejecting tables of the wrong shape or violating
    /// Hodge or Serre symmetry.
    pub fn new(dim: usize, h: Vec<Vec<u64>>) -> Result<Self> {
        if h.len() != dim + 1 || h.iter().any(|row| row.len() != dim + 1) {
            return Err(Error::InvalidInput(format!(
                "Hodge table must be {0}x{0}",
                dim + 1
            )));
        }
        let d = Self { dim, h };
        d.check_symmetries()?;
        Ok(d)
    }

    /// Diamond with `h^{p,p} = 1` off the middle row and the given middle row
    /// `(h^{n,0}, h^{n-1,1}, ..., h^{0,n})`. In even dimension the entry
    /// `h^{n/2,n/2}` of `middle` is taken as given.
    pub fn from_middle_row(dim: usize, middle: &[u64]) -> Result<Self> {
        if middle.len() != dim + 1 {
            return Err(Error::InvalidInput(format!(
                "middle row must have {} entries",
                dim + 1
            )));
        }
        let mut h = vec![vec![0u64; dim + 1]; dim + 1];
        for (p, row) in h.iter_mut().enumerate() {
            if 2 * p != dim {
                row[p] = 1;
            }
        }
        for (i, &v) in middle.iter().enumerate() {
            h[dim - i][i] = v;
        }
        Self::new(dim, h)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        if p > self.dim || q > self.dim {
            return 0;
        }
        self.h[p][q]
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.h
    }

    /// `(h^{n,0}, h^{n-1,1}, ..., h^{0,n})`.
    pub fn middle_row(&self) -> Vec<u64> {
        (0..=self.dim).map(|q| self.h[self.dim - q][q]).collect()
    }

    pub fn betti(&self, k: usize) -> u64 {
        (0..=self.dim)
            .filter(|&p| k >= p && k - p <= self.dim)
            .map(|p| self.h[p][k - p])
            .sum()
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::new((0..=2 * self.dim).map(|k| self.betti(k)).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti_table().alternating_sum()
    }

    /// Level of the weight-`k` Hodge structure.
    pub fn level(&self, k: usize) -> Result<HodgeLevel> {
        if k > 2 * self.dim {
            return Err(Error::InvalidInput(format!(
                "cohomological degree {k} exceeds 2n = {}",
                2 * self.dim
            )));
        }
        Ok((0..=self.dim)
            .filter(|&p| k >= p && k - p <= self.dim && self.h[p][k - p] > 0)
            .map(|p| p.abs_diff(k - p))
            .max()
            .map_or(HodgeLevel::Empty, HodgeLevel::Level))
    }

    /// Maximum level over all degrees with nonzero cohomology.
    pub fn variety_level(&self) -> HodgeLevel {
        (0..=2 * self.dim)
            .filter_map(|k| self.level(k).ok())
            .max()
            .unwrap_or(HodgeLevel::Empty)
    }

    /// Dimension of the intermediate Jacobian `J^{2i-1}`, i.e. `b_{2i-1} / 2`.
    pub fn jacobian_dimension(&self, i: usize) -> Result<u64> {
        if i < 1 || i > self.dim {
            return Err(Error::InvalidInput(format!(
                "Jacobian index {i} outside 1..={}",
                self.dim
            )));
        }
        let k = 2 * i - 1;
        Ok((i..=k.min(self.dim)).map(|p| self.h[p][k - p]).sum())
    }

    pub fn check_symmetries(&self) -> Result<()> {
        let n = self.dim;
        for p in 0..=n {
            for q in 0..=n {
                if self.h[p][q] != self.h[q][p] {
                    return Err(Error::Consistency(format!(
                        "Hodge symmetry fails: h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                        self.h[p][q], self.h[q][p]
                    )));
                }
                if self.h[p][q] != self.h[n - p][n - q] {
                    return Err(Error::Consistency(format!(
                        "Serre symmetry fails at h^{{{p},{q}}}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `h^{p,q} = [p = q]` whenever `p + q != n`.
    pub fn has_lefschetz_shape(&self) -> bool {
        let n = self.dim;
        (0..=n).all(|p| (0..=n).all(|q| p + q == n || self.h[p][q] == u64::from(p == q)))
    }
}

impl fmt::Display for HodgeDiamond {
    /// Rows by total degree, `h^{k,0}` first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let width = self
            .h
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for k in 0..=2 * n {
            let entries: Vec<String> = (0..=n)
                .rev()
                .filter(|&p| k >= p && k - p <= n)
                .map(|p| format!("{:>width$}", self.h[p][k - p]))
                .collect();
            let pad = (n + 1 - entries.len()) * (width + 1) / 2;
            writeln!(f, "{}{}", " ".repeat(pad), entries.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_threefold() -> HodgeDiamond {
        HodgeDiamond::from_middle_row(3, &[0, 5, 5, 0]).unwrap()
    }

    #[test]
    fn views_of_a_threefold() {
        let d = cubic_threefold();
        assert_eq!(d.betti_table().numbers(), &[1, 0, 1, 10, 1, 0, 1]);
        assert_eq!(d.euler_characteristic(), -6);
        assert_eq!(d.level(3).unwrap(), HodgeLevel::Level(1));
        assert_eq!(d.level(1).unwrap(), HodgeLevel::Empty);
        assert_eq!(d.level(2).unwrap(), HodgeLevel::Level(0));
        assert!(d.level(7).is_err());
        assert_eq!(d.jacobian_dimension(2).unwrap(), 5);
        assert_eq!(d.jacobian_dimension(1).unwrap(), 0);
        assert!(d.jacobian_dimension(0).is_err());
        assert_eq!(d.variety_level(), HodgeLevel::Level(1));
        assert!(d.has_lefschetz_shape());
    }

    #[test]
    fn symmetry_is_enforced() {
        assert!(HodgeDiamond::from_middle_row(3, &[0, 5, 4, 0]).is_err());
        let bad = vec![vec![1, 2], vec![0, 1]];
        assert!(HodgeDiamond::new(1, bad).is_err());
    }

    #[test]
    fn even_middle_entry_taken_as_given() {
        let k3 = HodgeDiamond::from_middle_row(2, &[1, 20, 1]).unwrap();
        assert_eq!(k3.betti(2), 22);
        assert_eq!(k3.euler_characteristic(), 24);
        assert_eq!(k3.level(2).unwrap(), HodgeLevel::Level(2));
    }
}
