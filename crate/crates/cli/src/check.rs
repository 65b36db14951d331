use levelone_core::ci::{self, CompleteIntersection};
use levelone_core::cover::{cross_validate, CyclicCover, WeightedHypersurface};
use levelone_core::fano::{self, CoverTarget, EmptinessVerdict};
use levelone_core::schubert::{
    sym_power_chern, tautological_bundles, BundleData, GrassmannClass, GrassmannRing,
    ProjBundleRing,
};
use levelone_core::{Error, Partition};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub kind: &'static str,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

pub const SUITES: &[&str] = &["default"];

/// Level-one complete intersections with `dim <= 11` and degree sum `<= 8`.
pub fn expected_window() -> Vec<(usize, Vec<u32>)> {
    let mut out = vec![
        (3, vec![2, 2]),
        (3, vec![2, 2, 2]),
        (3, vec![2, 3]),
        (3, vec![3]),
        (3, vec![4]),
    ];
    out.extend([(5, vec![2, 2]), (5, vec![2, 2, 2]), (5, vec![3])]);
    for n in [7, 9, 11] {
        out.extend([(n, vec![2, 2]), (n, vec![2, 2, 2])]);
    }
    out
}

struct Collector {
    name: &'static str,
    instances: usize,
    failures: Vec<String>,
}

impl Collector {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, label: impl FnOnce() -> String, outcome: Result<bool, Error>) {
        self.instances += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(label()),
            Err(e) => self.failures.push(format!("{}: {e}", label())),
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            instances: self.instances,
            passed: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

fn ci_vs_cover() -> CheckResult {
    let mut c = Collector::new("ci_jacobian_ring_agreement");
    for n in 1..=7usize {
        for d in 2..=6u32 {
            c.record(
                || format!("hypersurface of degree {d} in P^{}", n + 1),
                (|| {
                    let x = CompleteIntersection::hypersurface(n, d)?;
                    let w = WeightedHypersurface::new(vec![1; n + 2], d)?;
                    Ok(ci::hodge_diamond(&x)? == w.hodge_diamond()?)
                })(),
            );
        }
    }
    c.finish()
}

fn euler_vs_jacobian() -> CheckResult {
    let mut c = Collector::new("cover_euler_jacobian_agreement");
    let mut cases: Vec<(usize, u32, u32)> = Vec::new();
    for n in 1..=5 {
        for b in [2, 4, 6, 8] {
            cases.push((n, 2, b));
        }
        for b in [3, 6] {
            cases.push((n, 3, b));
        }
    }
    for (n, m, b) in cases {
        c.record(
            || format!("cover n={n} m={m} b={b}"),
            CyclicCover::new(n, m, b)
                .and_then(|cv| cross_validate(&cv))
                .map(|rs| rs.iter().all(|r| r.agree)),
        );
    }
    c.finish()
}

fn delta_sweep() -> CheckResult {
    let mut c = Collector::new("expected_dimension_normal_euler");
    for n in 2..=8 {
        for d in 1..=4 {
            for r in 1..n.min(4) {
                for m in [2, 3] {
                    c.record(
                        || format!("target n={n} d={d} r={r} m={m}"),
                        (|| {
                            let t = CoverTarget::new(n, d, r, m)?;
                            let delta = fano::expected_dimension(&t);
                            let chi = fano::normal_bundle_euler(&t)?;
                            let verdict_ok = (delta < 0)
                                == (fano::emptiness_prediction(&t)
                                    == EmptinessVerdict::ExpectEmpty);
                            Ok(chi == delta && verdict_ok)
                        })(),
                    );
                }
            }
        }
    }
    c.finish()
}

fn schubert_normalization() -> CheckResult {
    let mut c = Collector::new("schubert_normalization");
    let g = GrassmannRing::new(1, 3).expect("G(1,3)");
    let s1 = GrassmannClass::special(&g, 1);
    c.record(
        || "sigma_1^4 = 2 sigma_22 on G(1,3)".into(),
        GrassmannClass::sigma(&g, &Partition::new(vec![2, 2]))
            .map(|p| s1.pow(4) == p.scale(&BigInt::from(2))),
    );
    let s_dual = tautological_bundles(&g).sub_dual;
    c.record(
        || "c_4(Sym^3 S^v) = 27 on G(1,3)".into(),
        sym_power_chern(&s_dual, 3, None).map(|b| b.chern(4).degree() == BigInt::from(27)),
    );
    let push = (|| {
        let e = BundleData::trivial(&g, 1).direct_sum(&s_dual)?;
        let pb = ProjBundleRing::new(e.clone())?;
        let r = pb.fiber_rank();
        Ok::<_, Error>((
            pb.push(&pb.zeta_power(r - 1)?)? == GrassmannClass::one(&g),
            pb.push(&pb.zeta_power(r - 2)?)?.is_zero(),
            pb.push(&pb.zeta_power(r)?)? == e.chern(1).scale(&BigInt::from(-1)),
        ))
    })();
    c.record(|| "push(z^{e-1}) = 1".into(), push.clone().map(|p| p.0));
    c.record(|| "push(z^{e-2}) = 0".into(), push.clone().map(|p| p.1));
    c.record(|| "push(z^e) = -c_1(E)".into(), push.map(|p| p.2));
    c.record(
        || "56 lines on the double plane branched in a quartic".into(),
        CoverTarget::double(2, 2, 1)
            .and_then(|t| fano::fano_class(&t, None))
            .map(|f| f.count == Some(BigInt::from(56))),
    );
    c.finish()
}

fn classification_window() -> CheckResult {
    let mut c = Collector::new("classification_window");
    c.record(
        || "level-one complete intersections, dim <= 11, degree sum <= 8".into(),
        ci::classify_level_one(11, 8).map(|found| {
            let got: Vec<(usize, Vec<u32>)> = found
                .iter()
                .map(|x| (x.dim(), x.degrees().to_vec()))
                .collect();
            got == expected_window()
        }),
    );
    c.finish()
}

pub fn run_suite(suite: &str) -> Result<SuiteReport, Error> {
    if !SUITES.contains(&suite) {
        return Err(Error::InvalidInput(format!(
            "unknown suite {suite:?}; available: {}",
            SUITES.join(", ")
        )));
    }
    let checks = vec![
        ci_vs_cover(),
        euler_vs_jacobian(),
        delta_sweep(),
        schubert_normalization(),
        classification_window(),
    ];
    Ok(SuiteReport {
        kind: "check",
        suite: suite.to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
