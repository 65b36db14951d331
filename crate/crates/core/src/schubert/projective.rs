use std::sync::Arc;

use num_bigint::BigInt;

use super::bundle::BundleData;
use super::ring::{GrassmannClass, GrassmannRing};
use crate::error::{Error, Result};

/// Cohomology of the projectivization `P(E) -> G` of lines in a rank `e`
/// bundle, as a free module over `H*(G)` on `1, z, .., z^{e-1}` where
/// `z = c_1(O(1))`, subject to `z^e + c_1(E) z^{e-1} + .. + c_e(E) = 0`.
///
/// With this convention `push(z^{e-1+j}) = s_j(E)` where `s(E) c(E) = 1`.
#[derive(Debug, Clone)]
pub struct ProjBundleRing {
    bundle: BundleData,
}

/// Element of a [`ProjBundleRing`]: `levels[j]` is the coefficient of `z^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjClass {
    levels: Vec<GrassmannClass>,
}

impl ProjClass {
    pub fn levels(&self) -> &[GrassmannClass] {
        &self.levels
    }

    /// Coefficient of `z^j`.
    pub fn level(&self, j: usize) -> Option<&GrassmannClass> {
        self.levels.get(j)
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(GrassmannClass::is_zero)
    }

    /// Builds an element from raw coefficients, which need not be reduced.
    pub fn from_levels(levels: Vec<GrassmannClass>) -> Self {
        Self { levels }
    }
}

impl ProjBundleRing {
    pub fn new(bundle: BundleData) -> Result<Self> {
        if bundle.rank() == 0 {
            return Err(Error::InvalidInput(
                "cannot projectivize a rank zero bundle".into(),
            ));
        }
        Ok(Self { bundle })
    }

    pub fn base(&self) -> &Arc<GrassmannRing> {
        self.bundle.ring()
    }

    pub fn bundle(&self) -> &BundleData {
        &self.bundle
    }

    pub fn fiber_rank(&self) -> usize {
        self.bundle.rank()
    }

    /// Dimension of the total space.
    pub fn dim(&self) -> usize {
        self.base().dim() + self.fiber_rank() - 1
    }

    pub fn zero(&self) -> ProjClass {
        ProjClass {
            levels: vec![GrassmannClass::zero(self.base()); self.fiber_rank()],
        }
    }

    /// Pullback of a base class.
    pub fn from_base(&self, c: &GrassmannClass) -> ProjClass {
        let mut x = self.zero();
        x.levels[0] = c.clone();
        x
    }

    /// `c * z^j`, reduced.
    pub fn monomial(&self, c: &GrassmannClass, j: usize) -> Result<ProjClass> {
        let mut levels = vec![GrassmannClass::zero(self.base()); j.max(self.fiber_rank() - 1) + 1];
        levels[j] = c.clone();
        self.reduce(&ProjClass { levels })
    }

    pub fn zeta_power(&self, j: usize) -> Result<ProjClass> {
        self.monomial(&GrassmannClass::one(self.base()), j)
    }

    /// Rewrites powers `z^j`, `j >= e`, using the Grothendieck relation.
    pub fn reduce(&self, x: &ProjClass) -> Result<ProjClass> {
        let e = self.fiber_rank();
        let mut levels = x.levels.clone();
        levels.resize(levels.len().max(e), GrassmannClass::zero(self.base()));
        for j in (e..levels.len()).rev() {
            let a = std::mem::replace(&mut levels[j], GrassmannClass::zero(self.base()));
            if a.is_zero() {
                continue;
            }
            let minus_a = a.scale(&BigInt::from(-1));
            for i in 1..=e {
                let ci = self.bundle.chern(i);
                if ci.is_zero() {
                    continue;
                }
                levels[j - i] = levels[j - i].add(&minus_a.mul(&ci)?)?;
            }
        }
        levels.truncate(e);
        Ok(ProjClass { levels })
    }

    pub fn add(&self, x: &ProjClass, y: &ProjClass) -> Result<ProjClass> {
        let len = x.levels.len().max(y.levels.len());
        let zero = GrassmannClass::zero(self.base());
        let levels = (0..len)
            .map(|j| {
                x.levels
                    .get(j)
                    .unwrap_or(&zero)
                    .add(y.levels.get(j).unwrap_or(&zero))
            })
            .collect::<Result<Vec<_>>>()?;
        self.reduce(&ProjClass { levels })
    }

    pub fn mul(&self, x: &ProjClass, y: &ProjClass) -> Result<ProjClass> {
        let mut levels = vec![GrassmannClass::zero(self.base()); x.levels.len() + y.levels.len()];
        for (i, a) in x.levels.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.levels.iter().enumerate() {
                if !b.is_zero() {
                    levels[i + j] = levels[i + j].add(&a.mul(b)?)?;
                }
            }
        }
        self.reduce(&ProjClass { levels })
    }

    /// Pushforward to the base: the coefficient of `z^{e-1}` of a reduced class.
    pub fn push(&self, x: &ProjClass) -> Result<GrassmannClass> {
        let e = self.fiber_rank();
        if let Some(j) = (e..x.levels.len()).rev().find(|&j| !x.levels[j].is_zero()) {
            return Err(Error::Unreduced(j));
        }
        Ok(x.levels
            .get(e - 1)
            .cloned()
            .unwrap_or_else(|| GrassmannClass::zero(self.base())))
    }
}
