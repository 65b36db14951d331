use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::{GrassmannClass, GrassmannRing};
use super::symmetric::{sym_power_root_product, to_elementary};
use crate::error::{Error, Result};
use crate::exact::{binomial, choose, BigRat};

/// Default cap on the rank of a symmetric power expanded by Chern roots.
pub const DEFAULT_SYM_BUDGET: usize = 70;

/// Rank and Chern classes `c_1..c_e` of a vector bundle on a Grassmannian.
#[derive(Debug, Clone)]
pub struct BundleData {
    ring: Arc<GrassmannRing>,
    rank: usize,
    /// `chern[i]` is `c_i`, `0 <= i <= rank`
    chern: Vec<GrassmannClass>,
}

impl BundleData {
    /// `classes[i]` is `c_{i+1}`; missing classes are zero.
    pub fn new(
        ring: &Arc<GrassmannRing>,
        rank: usize,
        classes: Vec<GrassmannClass>,
    ) -> Result<Self> {
        if classes.len() > rank {
            return Err(Error::InvalidInput(format!(
                "{} Chern classes given for a bundle of rank {rank}",
                classes.len()
            )));
        }
        let mut chern = Vec::with_capacity(rank + 1);
        chern.push(GrassmannClass::one(ring));
        for (i, c) in classes.into_iter().enumerate() {
            if c.ring().plane_dim() != ring.plane_dim()
                || c.ring().ambient_dim() != ring.ambient_dim()
            {
                return Err(Error::RingMismatch);
            }
            if !c.is_homogeneous_of(i + 1) {
                return Err(Error::InvalidInput(format!(
                    "c_{} is not of codimension {}",
                    i + 1,
                    i + 1
                )));
            }
            chern.push(c);
        }
        chern.resize(rank + 1, GrassmannClass::zero(ring));
        Ok(Self {
            ring: Arc::clone(ring),
            rank,
            chern,
        })
    }

    pub fn trivial(ring: &Arc<GrassmannRing>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("trivial bundle")
    }

    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_i`, with `c_0 = 1` and zero above the rank.
    pub fn chern(&self, i: usize) -> GrassmannClass {
        self.chern
            .get(i)
            .cloned()
            .unwrap_or_else(|| GrassmannClass::zero(&self.ring))
    }

    /// `c_0 .. c_dim`, padded with zeros to the ring dimension.
    pub fn total_chern(&self) -> Vec<GrassmannClass> {
        (0..=self.ring.dim()).map(|i| self.chern(i)).collect()
    }

    /// Segre classes `s_0 .. s_dim`, the graded inverse of the total Chern class.
    pub fn segre(&self) -> Vec<GrassmannClass> {
        graded_inverse(&self.total_chern())
    }

    pub fn dual(&self) -> BundleData {
        let chern = self
            .chern
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 1 {
                    c.scale(&BigInt::from(-1))
                } else {
                    c.clone()
                }
            })
            .collect();
        Self {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            chern,
        }
    }

    pub fn direct_sum(&self, other: &BundleData) -> Result<BundleData> {
        let total = graded_product(&self.total_chern(), &other.total_chern())?;
        let rank = self.rank + other.rank;
        Self::new(
            &self.ring,
            rank,
            total.into_iter().skip(1).take(rank).collect(),
        )
    }

    /// `E (x) L` for a line bundle with first Chern class `line`:
    /// `c_i(E (x) L) = sum_j C(e - i + j, j) c_{i-j}(E) c_1(L)^j`.
    pub fn twist(&self, line: &GrassmannClass) -> Result<BundleData> {
        if !line.is_homogeneous_of(1) {
            return Err(Error::InvalidInput(
                "twisting class must have codimension one".into(),
            ));
        }
        let e = self.rank;
        let mut powers = vec![GrassmannClass::one(&self.ring)];
        for j in 1..=e {
            powers.push(powers[j - 1].mul(line)?);
        }
        let mut classes = Vec::with_capacity(e);
        for i in 1..=e {
            let mut c = GrassmannClass::zero(&self.ring);
            for (j, power) in powers.iter().enumerate().take(i + 1) {
                let coeff = binomial((e - i + j) as u64, j as i64);
                c = c.add(&self.chern(i - j).mul(power)?.scale(&coeff))?;
            }
            classes.push(c);
        }
        Self::new(&self.ring, e, classes)
    }
}

impl PartialEq for BundleData {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.chern == other.chern
    }
}

impl Eq for BundleData {}

/// Graded product of total classes indexed by codimension.
pub fn graded_product(a: &[GrassmannClass], b: &[GrassmannClass]) -> Result<Vec<GrassmannClass>> {
    let ring = a[0].ring();
    let top = ring.dim();
    let mut out = vec![GrassmannClass::zero(ring); top + 1];
    for (i, x) in a.iter().enumerate().take(top + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(top + 1 - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y)?)?;
            }
        }
    }
    Ok(out)
}

/// Inverse of a total class with unit constant term.
pub fn graded_inverse(c: &[GrassmannClass]) -> Vec<GrassmannClass> {
    let ring = c[0].ring();
    let top = ring.dim();
    let mut s = vec![GrassmannClass::one(ring)];
    for j in 1..=top {
        let mut acc = GrassmannClass::zero(ring);
        for i in 1..=j {
            if let Some(ci) = c.get(i) {
                if !ci.is_zero() {
                    acc = acc
                        .add(&ci.mul(&s[j - i]).expect("same ring"))
                        .expect("same ring");
                }
            }
        }
        s.push(acc.scale(&BigInt::from(-1)));
    }
    s
}

/// Tautological bundles on `G(r, n)`: the rank `r+1` subbundle `S`, its dual,
/// and the rank `n-r` quotient `Q`, with `c(S^v) = sum sigma_{1^i}` and
/// `c(Q) = sum sigma_i`.
#[derive(Debug, Clone)]
pub struct Tautological {
    pub sub: BundleData,
    pub sub_dual: BundleData,
    pub quotient: BundleData,
}

pub fn tautological_bundles(ring: &Arc<GrassmannRing>) -> Tautological {
    let k = ring.rows();
    let sub_dual = BundleData::new(
        ring,
        k,
        (1..=k)
            .map(|i| GrassmannClass::special_column(ring, i))
            .collect(),
    )
    .expect("special classes are homogeneous");
    let quotient = BundleData::new(
        ring,
        ring.cols(),
        (1..=ring.cols())
            .map(|i| GrassmannClass::special(ring, i))
            .collect(),
    )
    .expect("special classes are homogeneous");
    Tautological {
        sub: sub_dual.dual(),
        sub_dual,
        quotient,
    }
}

/// Chern classes of `Sym^k E (x) L`, from formal Chern roots of `E`.
pub fn sym_power_chern(
    bundle: &BundleData,
    k: usize,
    twist: Option<&GrassmannClass>,
) -> Result<BundleData> {
    sym_power_chern_with_budget(bundle, k, twist, DEFAULT_SYM_BUDGET)
}

pub fn sym_power_chern_with_budget(
    bundle: &BundleData,
    k: usize,
    twist: Option<&GrassmannClass>,
    budget: usize,
) -> Result<BundleData> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "symmetric power must be at least 1".into(),
        ));
    }
    let e = bundle.rank();
    let ring = bundle.ring();
    if e == 0 {
        return Ok(BundleData::trivial(ring, 0));
    }
    let rank = choose(e + k - 1, k);
    if rank > budget {
        return Err(Error::BudgetExceeded { rank, budget });
    }
    let top = ring.dim().min(rank);
    let roots = sym_power_root_product(e, k, top);

    let mut monomials: HashMap<Vec<u32>, GrassmannClass> = HashMap::new();
    let mut classes = Vec::with_capacity(rank);
    for j in 1..=rank {
        if j > top {
            classes.push(GrassmannClass::zero(ring));
            continue;
        }
        let mut c = GrassmannClass::zero(ring);
        for (exps, coeff) in to_elementary(&roots, j) {
            let m = match monomials.get(&exps) {
                Some(m) => m.clone(),
                None => {
                    let m = chern_monomial(bundle, &exps)?;
                    monomials.insert(exps, m.clone());
                    m
                }
            };
            c = c.add(&m.scale(&coeff))?;
        }
        classes.push(c);
    }
    let sym = BundleData::new(ring, rank, classes)?;
    match twist {
        Some(line) => sym.twist(line),
        None => Ok(sym),
    }
}

fn chern_monomial(bundle: &BundleData, exps: &[u32]) -> Result<GrassmannClass> {
    let mut acc = GrassmannClass::one(bundle.ring());
    for (i, &n) in exps.iter().enumerate() {
        for _ in 0..n {
            acc = acc.mul(&bundle.chern(i + 1))?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// `c_1(Sym^k E) = mult * c_1(E)` for `E` of rank `m`, where
/// `mult = k C(m-1+k, k) / m`.
pub fn det_sym_multiplier(m: usize, k: usize) -> Result<BigRat> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidInput(
            "rank and power must be positive".into(),
        ));
    }
    let numerator = binomial((m - 1 + k) as u64, k as i64) * k;
    let q = BigRat::new(numerator, BigInt::from(m));
    debug_assert!(q.is_integer() && !q.numer().is_zero());
    Ok(q)
}
