//! Hodge numbers of quasi-smooth weighted projective hypersurfaces and of
//! cyclic covers of projective space.
//!
//! Two routes are kept apart on purpose. The Jacobian-ring route reads
//! primitive Hodge numbers off the Poincare series of the Milnor algebra; the
//! Euler route only uses `chi(X) = m chi(P^n) - (m-1) chi(B)` for the branch
//! divisor `B`, computed in [`crate::ci`].
//!
//! Quasi-smoothness of the generic member is assumed, not verified.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::ci::{self, CompleteIntersection};
use crate::diamond::{HodgeDiamond, HodgeLevel};
use crate::error::{Error, Result};
use crate::exact::{geometric_quotient_series, TruncSeries};

/// Hypersurface of the given degree in the weighted projective space with
/// weights `w_0..w_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightedHypersurface {
    weights: Vec<u32>,
    degree: u32,
}

impl WeightedHypersurface {
    pub fn new(weights: Vec<u32>, degree: u32) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidInput(
                "need at least two weights for a hypersurface".into(),
            ));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        Ok(Self { weights, degree })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.weights.len() - 2
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    /// Factors `(1 - t^{D-w}) / (1 - t^w)` that actually contribute; weights
    /// with `D <= w` are skipped.
    fn factors(&self) -> (Vec<i64>, Vec<i64>) {
        let d = i64::from(self.degree);
        self.weights
            .iter()
            .map(|&w| i64::from(w))
            .filter(|&w| d > w && d != 2 * w)
            .map(|w| (d - w, w))
            .unzip()
    }

    /// Degree of the Milnor-algebra Poincare polynomial, `sum (D - 2 w_i)`
    /// over contributing weights.
    pub fn socle_degree(&self) -> i64 {
        let (a, b) = self.factors();
        a.iter().sum::<i64>() - b.iter().sum::<i64>()
    }

    /// Poincare series `prod (1 - t^{D - w_i}) / (1 - t^{w_i})` of the
    /// Jacobian ring, truncated at `order`.
    pub fn milnor_poincare(&self, order: usize) -> TruncSeries {
        let (a, b) = self.factors();
        geometric_quotient_series(&a, &b, order).expect("exponents are positive")
    }

    /// `h^{n-q,q}_prim`: the coefficient of `t^{(q+1)D - sum w}`.
    pub fn primitive_hodge(&self, q: usize) -> Result<u64> {
        let n = self.dim();
        if q > n {
            return Err(Error::InvalidInput(format!(
                "q = {q} exceeds dimension {n}"
            )));
        }
        let exponent = (q as i64 + 1) * i64::from(self.degree) - self.weight_sum() as i64;
        if exponent < 0 {
            return Ok(0);
        }
        let k = exponent as usize;
        let c = self.milnor_poincare(k).integer_coefficient(k)?;
        c.to_u64()
            .ok_or_else(|| Error::Consistency(format!("negative Jacobian-ring dimension {c}")))
    }

    /// Diamond with `h^{p,p} = 1` off the middle and the primitive middle
    /// row from the Jacobian ring, plus the hyperplane power in even dimension.
    pub fn hodge_diamond(&self) -> Result<HodgeDiamond> {
        let n = self.dim();
        let middle = (0..=n)
            .map(|q| Ok(self.primitive_hodge(q)? + u64::from(2 * q == n)))
            .collect::<Result<Vec<_>>>()?;
        HodgeDiamond::from_middle_row(n, &middle)
    }

    pub fn is_calabi_yau_degree(&self) -> bool {
        u64::from(self.degree) == self.weight_sum()
    }
}

impl fmt::Display for WeightedHypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "X_{} in P({})", self.degree, w.join(","))
    }
}

/// An `m:1` cyclic cover of `P^n` totally branched along a smooth
/// hypersurface of degree `b`, with `m | b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicCover {
    base_dim: usize,
    order: u32,
    branch_degree: u32,
}

impl CyclicCover {
    pub fn new(base_dim: usize, order: u32, branch_degree: u32) -> Result<Self> {
        if base_dim == 0 {
            return Err(Error::InvalidInput(
                "base dimension must be at least 1".into(),
            ));
        }
        if order < 2 {
            return Err(Error::InvalidInput(format!(
                "cover order {order} must be at least 2"
            )));
        }
        if branch_degree < order || !branch_degree.is_multiple_of(order) {
            return Err(Error::InvalidInput(format!(
                "branch degree {branch_degree} must be a positive multiple of the order {order}"
            )));
        }
        Ok(Self {
            base_dim,
            order,
            branch_degree,
        })
    }

    pub fn double(base_dim: usize, branch_degree: u32) -> Result<Self> {
        Self::new(base_dim, 2, branch_degree)
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn branch_degree(&self) -> u32 {
        self.branch_degree
    }

    /// Degree `b` hypersurface in `P(1^{n+1}, b/m)`.
    pub fn weighted_model(&self) -> WeightedHypersurface {
        let mut weights = vec![1; self.base_dim + 1];
        weights.push(self.branch_degree / self.order);
        WeightedHypersurface::new(weights, self.branch_degree).expect("valid cover data")
    }

    /// The branch divisor as a hypersurface in `P^n` (absent when `n = 1`).
    pub fn branch_divisor(&self) -> Option<CompleteIntersection> {
        CompleteIntersection::hypersurface(self.base_dim - 1, self.branch_degree).ok()
    }

    /// `chi(X) = m (n+1) - (m-1) chi(B)`.
    pub fn euler_via_cover(&self) -> BigInt {
        let n = self.base_dim;
        let chi_branch = ci::euler_characteristic_raw(n - 1, &[self.branch_degree]);
        BigInt::from(self.order) * (n + 1) - BigInt::from(self.order - 1) * chi_branch
    }

    /// Middle Betti number from the Euler route alone.
    pub fn middle_betti_via_euler(&self) -> Result<u64> {
        ci::middle_betti_from_euler(self.base_dim, &self.euler_via_cover())
    }

    /// Jacobian-ring diamond, required to agree with the Euler route on the
    /// middle Betti number.
    pub fn hodge_diamond(&self) -> Result<HodgeDiamond> {
        let diamond = self.weighted_model().hodge_diamond()?;
        let jacobian = diamond.betti(self.base_dim);
        let euler = self.middle_betti_via_euler()?;
        if jacobian != euler {
            return Err(Error::RouteDisagreement {
                quantity: format!("middle Betti number of {self}"),
                detail: format!("Jacobian ring {jacobian}, Euler characteristic {euler}"),
            });
        }
        Ok(diamond)
    }

    /// Level of the middle cohomology and the dimension of the middle
    /// intermediate Jacobian (zero in even dimension).
    pub fn level_and_jacobian(&self) -> Result<(HodgeLevel, u64)> {
        let d = self.hodge_diamond()?;
        let n = self.base_dim;
        let level = d.level(n)?;
        let jac = if n % 2 == 1 {
            d.jacobian_dimension(n.div_ceil(2))?
        } else {
            0
        };
        Ok((level, jac))
    }
}

impl fmt::Display for CyclicCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:1 cover of P^{} branched in degree {}",
            self.order, self.base_dim, self.branch_degree
        )
    }
}

/// What a published claim is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimSubject {
    Cover {
        n: usize,
        m: u32,
        b: u32,
    },
    Hypersurface {
        weights: &'static [u32],
        degree: u32,
    },
    CompleteIntersection {
        dim: usize,
        degrees: &'static [u32],
    },
}

/// A value stated in the literature, kept for report-only comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedClaim {
    pub subject: ClaimSubject,
    pub quantity: &'static str,
    pub value: i64,
    pub citation: &'static str,
}

pub const CLAIMS_VERSION: u32 = 1;

/// Published values compared against in `--compare-paper` mode. Mismatches
/// are warnings, never failures.
pub const PUBLISHED_CLAIMS: &[PublishedClaim] = &[
    PublishedClaim {
        subject: ClaimSubject::Cover { n: 5, m: 2, b: 4 },
        quantity: "middle_betti",
        value: 284,
        citation: "published value for the quartic double fivefold: H^5(X,Z) = Z^284",
    },
    PublishedClaim {
        subject: ClaimSubject::Cover { n: 5, m: 2, b: 4 },
        quantity: "jacobian_dimension",
        value: 142,
        citation:
            "published value for the quartic double fivefold: J(X) is a ppav of dimension 142",
    },
    PublishedClaim {
        subject: ClaimSubject::Cover { n: 5, m: 2, b: 4 },
        quantity: "middle_level",
        value: 1,
        citation: "published value for the quartic double fivefold: Fano fivefold of Hodge level 1",
    },
    PublishedClaim {
        subject: ClaimSubject::Hypersurface {
            weights: &[1, 1, 1, 1, 1],
            degree: 3,
        },
        quantity: "jacobian_dimension",
        value: 5,
        citation: "level-one threefolds: cubic threefold, dim J = 5",
    },
    PublishedClaim {
        subject: ClaimSubject::Hypersurface {
            weights: &[1, 1, 1, 1, 1],
            degree: 4,
        },
        quantity: "jacobian_dimension",
        value: 30,
        citation: "level-one threefolds: quartic threefold, dim J = 30",
    },
    PublishedClaim {
        subject: ClaimSubject::Hypersurface {
            weights: &[1, 1, 1, 1, 1, 1, 1],
            degree: 3,
        },
        quantity: "jacobian_dimension",
        value: 21,
        citation: "cubic fivefold: J is a 21-dimensional ppav",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 3,
            degrees: &[2, 3],
        },
        quantity: "jacobian_dimension",
        value: 20,
        citation: "level-one threefolds: X(2,3), dim J = 20",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 5,
            degrees: &[2, 2, 2],
        },
        quantity: "jacobian_dimension",
        value: 27,
        citation: "three quadrics in P^8: J is a Prym of dimension 27",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 3,
            degrees: &[2, 2],
        },
        quantity: "jacobian_dimension",
        value: 2,
        citation: "two quadrics in P^5: J is the Jacobian of a genus 2 hyperelliptic curve",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 5,
            degrees: &[2, 2],
        },
        quantity: "jacobian_dimension",
        value: 3,
        citation: "two quadrics in P^7: J is the Jacobian of a genus 3 hyperelliptic curve",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 7,
            degrees: &[2, 2],
        },
        quantity: "jacobian_dimension",
        value: 4,
        citation: "two quadrics in P^9: J is the Jacobian of a genus 4 hyperelliptic curve",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 9,
            degrees: &[2, 2],
        },
        quantity: "jacobian_dimension",
        value: 5,
        citation: "two quadrics in P^11: J is the Jacobian of a genus 5 hyperelliptic curve",
    },
    PublishedClaim {
        subject: ClaimSubject::CompleteIntersection {
            dim: 11,
            degrees: &[2, 2],
        },
        quantity: "jacobian_dimension",
        value: 6,
        citation: "two quadrics in P^13: J is the Jacobian of a genus 6 hyperelliptic curve",
    },
];

/// The published value of `quantity` for `subject`, if one is recorded.
pub fn published_claim(subject: &ClaimSubject, quantity: &str) -> Option<&'static PublishedClaim> {
    PUBLISHED_CLAIMS
        .iter()
        .find(|c| &c.subject == subject && c.quantity == quantity)
}

/// Values of one quantity computed by several routes, plus an optional
/// published value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub quantity: String,
    pub route_values: BTreeMap<String, i64>,
    pub agree: bool,
    pub paper_claim: Option<PublishedClaim>,
    pub matches_paper: Option<bool>,
}

impl ConsistencyReport {
    pub fn new(
        quantity: &str,
        routes: impl IntoIterator<Item = (&'static str, i64)>,
        claim: Option<&PublishedClaim>,
    ) -> Self {
        let route_values: BTreeMap<String, i64> = routes
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let mut values = route_values.values();
        let first = values.next().copied();
        let agree = values.all(|v| Some(*v) == first);
        let matches_paper = claim.map(|c| Some(c.value) == first && agree);
        Self {
            quantity: quantity.to_string(),
            route_values,
            agree,
            paper_claim: claim.copied(),
            matches_paper,
        }
    }

    /// The agreed value, if all routes agree.
    pub fn value(&self) -> Option<i64> {
        if self.agree {
            self.route_values.values().next().copied()
        } else {
            None
        }
    }

    pub fn ensure_agreement(&self) -> Result<()> {
        if self.agree {
            return Ok(());
        }
        Err(Error::RouteDisagreement {
            quantity: self.quantity.clone(),
            detail: format!("{:?}", self.route_values),
        })
    }
}

fn as_i64(v: u64) -> i64 {
    i64::try_from(v).expect("invariant fits in i64")
}

/// Middle Betti number, intermediate Jacobian and middle level of a cyclic
/// cover, each computed by every available route.
///
/// The Jacobian-ring route is evaluated without the internal agreement check
/// so that a disagreement is reported here rather than masked.
pub fn cross_validate(cover: &CyclicCover) -> Result<Vec<ConsistencyReport>> {
    let n = cover.base_dim();
    let subject = ClaimSubject::Cover {
        n,
        m: cover.order(),
        b: cover.branch_degree(),
    };
    let diamond = cover.weighted_model().hodge_diamond()?;
    let euler_b = cover.middle_betti_via_euler()?;

    let mut reports = vec![ConsistencyReport::new(
        "middle_betti",
        [
            ("jacobian", as_i64(diamond.betti(n))),
            ("euler", as_i64(euler_b)),
        ],
        published_claim(&subject, "middle_betti"),
    )];
    if n % 2 == 1 {
        reports.push(ConsistencyReport::new(
            "jacobian_dimension",
            [
                (
                    "jacobian",
                    as_i64(diamond.jacobian_dimension(n.div_ceil(2))?),
                ),
                ("euler", as_i64(euler_b / 2)),
            ],
            published_claim(&subject, "jacobian_dimension"),
        ));
    }
    if let HodgeLevel::Level(l) = diamond.level(n)? {
        reports.push(ConsistencyReport::new(
            "middle_level",
            [("jacobian", l as i64)],
            published_claim(&subject, "middle_level"),
        ));
    }
    for r in &reports {
        r.ensure_agreement()?;
    }
    Ok(reports)
}

/// Cross-validation for a weighted hypersurface; with all weights one the
/// generating-series and Euler routes of [`crate::ci`] join in.
pub fn cross_validate_hypersurface(w: &WeightedHypersurface) -> Result<Vec<ConsistencyReport>> {
    let n = w.dim();
    let subject_weights = PUBLISHED_CLAIMS.iter().find_map(|c| match c.subject {
        ClaimSubject::Hypersurface { weights, degree }
            if weights == w.weights() && degree == w.degree() =>
        {
            Some(c.subject)
        }
        _ => None,
    });
    let claim = |q: &str| subject_weights.and_then(|s| published_claim(&s, q));

    let diamond = w.hodge_diamond()?;
    let mut betti_routes = vec![("jacobian", as_i64(diamond.betti(n)))];
    let mut jac_routes = Vec::new();
    if n % 2 == 1 {
        jac_routes.push((
            "jacobian",
            as_i64(diamond.jacobian_dimension(n.div_ceil(2))?),
        ));
    }
    let projective = w.weights().iter().all(|&x| x == 1);
    if projective && n >= 1 {
        let x = CompleteIntersection::hypersurface(n, w.degree())?;
        let series = ci::hodge_diamond(&x)?;
        let euler_b = ci::middle_betti(&x)?;
        betti_routes.push(("series", as_i64(series.betti(n))));
        betti_routes.push(("euler", as_i64(euler_b)));
        if n % 2 == 1 {
            jac_routes.push(("series", as_i64(series.jacobian_dimension(n.div_ceil(2))?)));
            jac_routes.push(("euler", as_i64(euler_b / 2)));
        }
    }
    let mut reports = vec![ConsistencyReport::new(
        "middle_betti",
        betti_routes,
        claim("middle_betti"),
    )];
    if !jac_routes.is_empty() {
        reports.push(ConsistencyReport::new(
            "jacobian_dimension",
            jac_routes,
            claim("jacobian_dimension"),
        ));
    }
    for r in &reports {
        r.ensure_agreement()?;
    }
    Ok(reports)
}

/// Cross-validation for a complete intersection: generating-series and Euler
/// routes, plus the Jacobian ring for hypersurfaces.
pub fn cross_validate_ci(x: &CompleteIntersection) -> Result<Vec<ConsistencyReport>> {
    let n = x.dim();
    if x.codim() == 1 {
        return cross_validate_hypersurface(&WeightedHypersurface::new(
            vec![1; n + 2],
            x.degrees()[0],
        )?);
    }
    let claim = |q: &str| {
        PUBLISHED_CLAIMS.iter().find(|c| {
            c.quantity == q
                && matches!(c.subject, ClaimSubject::CompleteIntersection { dim, degrees }
                    if dim == n && degrees == x.degrees())
        })
    };
    let series = ci::hodge_diamond(x)?;
    let euler_b = ci::middle_betti(x)?;
    let mut reports = vec![ConsistencyReport::new(
        "middle_betti",
        [
            ("series", as_i64(series.betti(n))),
            ("euler", as_i64(euler_b)),
        ],
        claim("middle_betti"),
    )];
    if n % 2 == 1 {
        reports.push(ConsistencyReport::new(
            "jacobian_dimension",
            [
                ("series", as_i64(series.jacobian_dimension(n.div_ceil(2))?)),
                ("euler", as_i64(euler_b / 2)),
            ],
            claim("jacobian_dimension"),
        ));
    }
    for r in &reports {
        r.ensure_agreement()?;
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_pow(base: &[i64], e: u32) -> Vec<i64> {
        let mut acc = vec![1i64];
        for _ in 0..e {
            let mut next = vec![0; acc.len() + base.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in base.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            acc = next;
        }
        acc
    }

    fn wh(weights: &[u32], degree: u32) -> WeightedHypersurface {
        WeightedHypersurface::new(weights.to_vec(), degree).unwrap()
    }

    #[test]
    fn poincare_series_examples() {
        let double_solid = wh(&[1, 1, 1, 1, 2], 4);
        let oracle = poly_pow(&[1, 1, 1], 4);
        assert_eq!(
            double_solid.milnor_poincare(8),
            TruncSeries::from_integers(&oracle, 8)
        );
        assert_eq!(double_solid.socle_degree(), 8);

        let conic = wh(&[1, 1], 2);
        assert_eq!(conic.milnor_poincare(3), TruncSeries::one(3));

        let sextic = wh(&[1, 1, 1, 3], 6);
        let oracle = poly_pow(&[1, 1, 1, 1, 1], 3);
        assert_eq!(
            sextic.milnor_poincare(12),
            TruncSeries::from_integers(&oracle, 12)
        );
        assert!(sextic.milnor_poincare(12).is_palindromic(12));
    }

    #[test]
    fn primitive_hodge_examples() {
        assert_eq!(wh(&[1, 1, 1, 1, 2], 4).primitive_hodge(1).unwrap(), 10);
        assert_eq!(poly_pow(&[1, 1, 1, 1, 1], 3)[6], 19);
        assert_eq!(wh(&[1, 1, 1, 3], 6).primitive_hodge(1).unwrap(), 19);
        assert_eq!(wh(&[1, 1, 2], 4).primitive_hodge(0).unwrap(), 1);
        assert!(wh(&[1, 1, 2], 4).primitive_hodge(2).is_err());
    }

    #[test]
    fn quartic_double_fivefold() {
        let c = CyclicCover::double(5, 4).unwrap();
        let oracle = poly_pow(&[1, 1, 1], 6);
        assert_eq!(
            (oracle[0], oracle[4], oracle[8], oracle[12]),
            (1, 90, 90, 1)
        );
        let d = c.hodge_diamond().unwrap();
        assert_eq!(d.middle_row(), vec![0, 1, 90, 90, 1, 0]);
        assert_eq!(c.euler_via_cover(), BigInt::from(-176));
        assert_eq!(c.middle_betti_via_euler().unwrap(), 182);
        assert_eq!(c.level_and_jacobian().unwrap(), (HodgeLevel::Level(3), 91));
    }

    #[test]
    fn small_double_covers() {
        let solid = CyclicCover::double(3, 4).unwrap();
        assert_eq!(solid.hodge_diamond().unwrap().get(2, 1), 10);
        assert_eq!(solid.euler_via_cover(), BigInt::from(-16));
        assert_eq!(
            solid.level_and_jacobian().unwrap(),
            (HodgeLevel::Level(1), 10)
        );

        let dp2 = CyclicCover::double(2, 4).unwrap();
        assert_eq!(dp2.hodge_diamond().unwrap().get(1, 1), 8);
        assert_eq!(dp2.euler_via_cover(), BigInt::from(10));
        assert_eq!(dp2.level_and_jacobian().unwrap(), (HodgeLevel::Level(0), 0));

        let k3 = CyclicCover::double(2, 6).unwrap();
        let d = k3.hodge_diamond().unwrap();
        assert_eq!(d.betti(2), 22);
        assert_eq!(d.get(2, 0), 1);

        let elliptic = CyclicCover::double(1, 4).unwrap();
        assert_eq!(elliptic.hodge_diamond().unwrap().middle_row(), vec![1, 1]);
    }

    #[test]
    fn calabi_yau_boundary() {
        let octic = wh(&[1, 1, 1, 1, 4], 8);
        assert!(octic.is_calabi_yau_degree());
        assert_eq!(octic.hodge_diamond().unwrap().get(3, 0), 1);
        let quintic = wh(&[1, 1, 1, 1, 1], 5);
        assert_eq!(quintic.hodge_diamond().unwrap().get(3, 0), 1);
        assert_eq!(quintic.hodge_diamond().unwrap().get(2, 1), 101);
    }

    #[test]
    fn degenerate_weight_contributes_one() {
        let w = wh(&[1, 1, 1, 1, 2], 4);
        let without = wh(&[1, 1, 1, 1], 4);
        assert_eq!(w.milnor_poincare(10), without.milnor_poincare(10));
    }

    #[test]
    fn cover_validation() {
        assert!(CyclicCover::new(3, 1, 4).is_err());
        assert!(CyclicCover::new(3, 2, 5).is_err());
        assert!(CyclicCover::new(0, 2, 4).is_err());
        assert!(CyclicCover::new(3, 3, 6).is_ok());
        assert_eq!(
            CyclicCover::new(3, 3, 6).unwrap().weighted_model(),
            wh(&[1, 1, 1, 1, 2], 6)
        );
    }

    #[test]
    fn reports_flag_published_mismatch() {
        let reports = cross_validate(&CyclicCover::double(5, 4).unwrap()).unwrap();
        let betti = &reports[0];
        assert_eq!(betti.quantity, "middle_betti");
        assert_eq!(betti.route_values["jacobian"], 182);
        assert_eq!(betti.route_values["euler"], 182);
        assert!(betti.agree);
        assert_eq!(betti.paper_claim.unwrap().value, 284);
        assert_eq!(betti.matches_paper, Some(false));

        let solid = cross_validate(&CyclicCover::double(3, 4).unwrap()).unwrap();
        assert_eq!(solid[0].value(), Some(20));
        assert!(solid[0].paper_claim.is_none());
        assert_eq!(solid[0].matches_paper, None);

        let cubic5 = cross_validate_hypersurface(&wh(&[1; 7], 3)).unwrap();
        let jac = cubic5
            .iter()
            .find(|r| r.quantity == "jacobian_dimension")
            .unwrap();
        assert_eq!(jac.value(), Some(21));
        assert_eq!(jac.route_values.len(), 3);
        assert_eq!(jac.matches_paper, Some(true));
    }

    #[test]
    fn complete_intersection_claims_agree() {
        for (dim, degs, j) in [
            (3, vec![2, 3], 20),
            (5, vec![2, 2, 2], 27),
            (9, vec![2, 2], 5),
            (3, vec![4], 30),
        ] {
            let x = CompleteIntersection::new(dim, &degs).unwrap();
            let reports = cross_validate_ci(&x).unwrap();
            let jac = reports
                .iter()
                .find(|r| r.quantity == "jacobian_dimension")
                .unwrap();
            assert_eq!(jac.value(), Some(j), "{x}");
            assert_eq!(jac.matches_paper, Some(true), "{x}");
        }
        let even = cross_validate_ci(&CompleteIntersection::new(4, &[2, 2]).unwrap()).unwrap();
        assert_eq!(even.len(), 1);
    }

    #[test]
    fn disagreement_is_detected() {
        let r = ConsistencyReport::new("x", [("a", 1), ("b", 2)], None);
        assert!(!r.agree);
        assert_eq!(r.value(), None);
        assert!(matches!(
            r.ensure_agreement(),
            Err(Error::RouteDisagreement { .. })
        ));
    }

    #[test]
    fn ci_and_jacobian_ring_agree_on_hypersurfaces() {
        for n in 1..=6 {
            for d in 2..=6u32 {
                let x = CompleteIntersection::hypersurface(n, d).unwrap();
                let w = wh(&vec![1; n + 2], d);
                assert_eq!(
                    ci::hodge_diamond(&x).unwrap(),
                    w.hodge_diamond().unwrap(),
                    "{x}"
                );
            }
        }
    }
}
