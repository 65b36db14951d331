//! Fano schemes of `r`-planes in double and cyclic covers of `P^n`.
//!
//! A cover `X -> P^n` of order `m` branched along a hypersurface of degree
//! `m d` sits in `P = P(1^{n+1}, d)`. Its `r`-planes are parametrized by
//! `G_P(r) = P(O + Sym^d S^v)` over `G(r, n)`, and `F_r(X)` is the zero locus
//! of a section of `O(m) (x) Sym^{md} S^v` there.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{choose, BigRat};
use crate::schubert::{
    det_sym_multiplier, serialize_bigint, sym_power_chern_with_budget, tautological_bundles,
    BundleData, GrassmannClass, GrassmannRing, ProjBundleRing, ProjClass, DEFAULT_SYM_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoverTarget {
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub r: usize,
}

impl CoverTarget {
    pub fn new(n: usize, d: usize, r: usize, m: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidInput(format!(
                "plane dimension must satisfy 1 <= r < n, got r = {r}, n = {n}"
            )));
        }
        if d == 0 {
            return Err(Error::InvalidInput("d must be at least 1".into()));
        }
        if m < 2 {
            return Err(Error::InvalidInput(format!(
                "cover order must be at least 2, got {m}"
            )));
        }
        Ok(Self { n, d, m, r })
    }

    /// Double cover branched in degree `2d`.
    pub fn double(n: usize, d: usize, r: usize) -> Result<Self> {
        Self::new(n, d, r, 2)
    }

    pub fn branch_degree(&self) -> usize {
        self.m * self.d
    }

    /// Output beyond the double-cover case is an extrapolation.
    pub fn is_extrapolated(&self) -> bool {
        self.m > 2
    }

    /// Rank of `Sym^{md} S^v`, the codimension of `F_r(X)` in `G_P(r)`.
    pub fn codim(&self) -> usize {
        choose(self.branch_degree() + self.r, self.r)
    }

    fn grassmannian_dim(&self) -> usize {
        (self.r + 1) * (self.n - self.r)
    }
}

impl fmt::Display for CoverTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, d={}, r={}, m={})",
            self.n, self.d, self.r, self.m
        )
    }
}

pub fn gp_dimension(t: &CoverTarget) -> usize {
    t.grassmannian_dim() + choose(t.d + t.r, t.d)
}

pub fn expected_dimension(t: &CoverTarget) -> i64 {
    gp_dimension(t) as i64 - t.codim() as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EmptinessVerdict {
    ExpectEmpty,
    Nonempty,
    Boundary,
}

impl fmt::Display for EmptinessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExpectEmpty => "EXPECT_EMPTY",
            Self::Nonempty => "NONEMPTY",
            Self::Boundary => "BOUNDARY",
        })
    }
}

pub fn emptiness_prediction(t: &CoverTarget) -> EmptinessVerdict {
    match expected_dimension(t).cmp(&0) {
        Ordering::Less => EmptinessVerdict::ExpectEmpty,
        Ordering::Equal => EmptinessVerdict::Boundary,
        Ordering::Greater => EmptinessVerdict::Nonempty,
    }
}

/// `h^0(O_{P^r}(k))`, counted as monomials of degree `k` in `r + 1` variables.
fn sections(r: usize, k: usize) -> i64 {
    // ways[j] = monomials of degree j in the variables seen so far
    let mut ways = vec![0i64; k + 1];
    ways[0] = 1;
    for _ in 0..=r {
        for j in 1..=k {
            ways[j] += ways[j - 1];
        }
    }
    ways[k]
}

/// `chi(N)` for a plane `h` in `X`, from
/// `0 -> N -> O(d) + O(1)^{n-r} -> O(md) -> 0` on `P^r`.
pub fn normal_bundle_euler(t: &CoverTarget) -> Result<i64> {
    let r = t.r;
    let chi = sections(r, t.d) + (t.n - r) as i64 * sections(r, 1) - sections(r, t.branch_degree());
    let delta = expected_dimension(t);
    if chi != delta {
        return Err(Error::Consistency(format!(
            "chi(N) = {chi} but expected dimension is {delta} at {t}"
        )));
    }
    Ok(chi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Positivity {
    GeneralType,
    Fano,
    CalabiYauLike,
    Indeterminate,
}

impl Positivity {
    fn from_signs(x: i64, y: i64) -> Self {
        match (x.signum(), y.signum()) {
            (1, 1) => Self::GeneralType,
            (-1, -1) => Self::Fano,
            (0, 0) => Self::CalabiYauLike,
            _ => Self::Indeterminate,
        }
    }
}

/// `omega = gamma^* O(grassmann_coeff) (x) O_{G_P}(fiber_coeff)` restricted to
/// `F_r(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalDescriptor {
    pub a: i64,
    pub b: i64,
    pub grassmann_coeff: i64,
    pub fiber_coeff: i64,
    pub positivity: Positivity,
    pub extrapolated: bool,
}

fn integral(q: BigRat) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::Consistency(format!("non-integral multiplier {q}")));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("multiplier does not fit in 64 bits".into()))
}

pub fn canonical_descriptor(t: &CoverTarget) -> Result<CanonicalDescriptor> {
    let a = integral(det_sym_multiplier(t.r + 1, t.d)?)?;
    let b = integral(det_sym_multiplier(t.r + 1, t.branch_degree())?)?;
    let grassmann_coeff = a + b - t.n as i64 - 1;
    let fiber_coeff = (t.m * t.codim()) as i64 - choose(t.d + t.r, t.d) as i64 - 1;
    Ok(CanonicalDescriptor {
        a,
        b,
        grassmann_coeff,
        fiber_coeff,
        positivity: Positivity::from_signs(grassmann_coeff, fiber_coeff),
        extrapolated: t.is_extrapolated(),
    })
}

/// Published closed form for `c_1(Sym^k S^v) / c_1(S^v)` on `G(r, n)`:
/// `(r^{k+1} - r(k+1) + k) / (r-1)^2`, or `k(k+1)/2` when `r = 1`.
pub fn published_multiplier(r: usize, k: usize) -> Result<BigRat> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    if r == 1 {
        return Ok(BigRat::new(BigInt::from(k * (k + 1)), BigInt::from(2)));
    }
    let rb = BigInt::from(r);
    let num = rb.pow(k as u32 + 1) - &rb * (k + 1) + k;
    let den = (rb - 1u32).pow(2);
    Ok(BigRat::new(num, den))
}

/// Side-by-side comparison of a multiplier with its published closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplierCheck {
    pub name: &'static str,
    pub k: usize,
    pub engine: String,
    pub published: String,
    pub agree: bool,
}

pub fn multiplier_checks(t: &CoverTarget) -> Result<Vec<MultiplierCheck>> {
    [("a", t.d), ("b", t.branch_degree())]
        .into_iter()
        .map(|(name, k)| {
            let engine = det_sym_multiplier(t.r + 1, k)?;
            let published = published_multiplier(t.r, k)?;
            Ok(MultiplierCheck {
                name,
                k,
                agree: engine == published,
                engine: engine.to_string(),
                published: published.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoSchemeProfile {
    pub target: CoverTarget,
    pub gp_dim: usize,
    pub codim: usize,
    pub delta: i64,
    pub normal_chi: i64,
    pub canonical: CanonicalDescriptor,
    pub emptiness_verdict: EmptinessVerdict,
}

pub fn profile(t: &CoverTarget) -> Result<FanoSchemeProfile> {
    Ok(FanoSchemeProfile {
        target: *t,
        gp_dim: gp_dimension(t),
        codim: t.codim(),
        delta: expected_dimension(t),
        normal_chi: normal_bundle_euler(t)?,
        canonical: canonical_descriptor(t)?,
        emptiness_verdict: emptiness_prediction(t),
    })
}

/// Class of `F_r(X)` in `H*(G_P(r))`, written as `sum_j zeta^j gamma^*(levels[j])`.
#[derive(Debug, Clone, Serialize)]
pub struct FanoClass {
    pub target: CoverTarget,
    pub codim: usize,
    pub levels: Vec<GrassmannClass>,
    /// `gamma_*` of the class to `G(r, n)`.
    pub pushforward: GrassmannClass,
    /// Number of planes when the expected dimension is zero.
    #[serde(serialize_with = "serialize_count")]
    pub count: Option<BigInt>,
    pub extrapolated: bool,
}

fn serialize_count<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_bigint(x, s),
        None => s.serialize_none(),
    }
}

impl FanoClass {
    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(GrassmannClass::is_zero)
    }
}

pub fn fano_class(t: &CoverTarget, truncate_at: Option<usize>) -> Result<FanoClass> {
    fano_class_with_budget(t, truncate_at, DEFAULT_SYM_BUDGET)
}

/// `c_R(O(m) (x) Sym^{md} S^v)` on `P(O + Sym^d S^v)`, `R` the rank. Levels
/// whose base class has codimension above `truncate_at` are dropped from the
/// reported expansion; the pushforward and count always use the full class.
pub fn fano_class_with_budget(
    t: &CoverTarget,
    truncate_at: Option<usize>,
    budget: usize,
) -> Result<FanoClass> {
    let ring = GrassmannRing::new(t.r, t.n)?;
    let top = t.codim();
    if top > gp_dimension(t) {
        let rank = choose(t.d + t.r, t.r) + 1;
        return Ok(FanoClass {
            target: *t,
            codim: top,
            levels: vec![GrassmannClass::zero(&ring); rank],
            pushforward: GrassmannClass::zero(&ring),
            count: None,
            extrapolated: t.is_extrapolated(),
        });
    }
    let s_dual = tautological_bundles(&ring).sub_dual;
    let fiber = BundleData::trivial(&ring, 1)
        .direct_sum(&sym_power_chern_with_budget(&s_dual, t.d, None, budget)?)?;
    let pb = ProjBundleRing::new(fiber)?;
    let sym = sym_power_chern_with_budget(&s_dual, t.branch_degree(), None, budget)?;

    let mut raw = vec![GrassmannClass::zero(&ring); top + 1];
    let m = BigInt::from(t.m);
    let mut m_pow = BigInt::one();
    for (j, slot) in raw.iter_mut().enumerate() {
        let c = sym.chern(top - j);
        if !c.is_zero() {
            *slot = c.scale(&m_pow);
        }
        m_pow *= &m;
    }
    let class = pb.reduce(&ProjClass::from_levels(raw))?;
    let pushforward = pb.push(&class)?;
    let count = (expected_dimension(t) == 0).then(|| pushforward.degree());
    if let Some(c) = &count {
        if c.is_negative() {
            return Err(Error::Consistency(format!(
                "negative plane count {c} at {t}"
            )));
        }
    }
    let levels = class
        .levels()
        .iter()
        .map(|c| match truncate_at {
            Some(k) => (0..=k.min(ring.dim())).fold(GrassmannClass::zero(&ring), |acc, i| {
                acc.add(&c.homogeneous_part(i)).expect("same ring")
            }),
            None => c.clone(),
        })
        .collect();
    Ok(FanoClass {
        target: *t,
        codim: top,
        levels,
        pushforward,
        count,
        extrapolated: t.is_extrapolated(),
    })
}
