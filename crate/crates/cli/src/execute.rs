use levelone_core::ci::{self, CompleteIntersection};
use levelone_core::cover::{
    cross_validate, cross_validate_ci, cross_validate_hypersurface, ConsistencyReport, CyclicCover,
    WeightedHypersurface,
};
use levelone_core::fano::{self, CoverTarget};
use levelone_core::{Error, HodgeDiamond};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::check;
use crate::request::Request;

/// Flags that change what a request reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub compare_paper: bool,
    pub strict: bool,
    pub timing: bool,
}

/// What one request produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub warnings: Vec<Value>,
    /// A check suite found a route disagreement.
    pub failed: bool,
}

pub(crate) fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn diamond_fields(out: &mut Map<String, Value>, d: &HodgeDiamond) {
    let n = d.dim();
    out.insert("hodge_diamond".into(), json!(d.table()));
    out.insert("middle_hodge_row".into(), json!(d.middle_row()));
    out.insert("betti".into(), json!(d.betti_table().numbers()));
    out.insert("level".into(), json!(d.variety_level()));
    out.insert(
        "middle_level".into(),
        d.level(n).map(|l| json!(l)).unwrap_or(Value::Null),
    );
}

fn route_records(
    reports: &[ConsistencyReport],
    opts: &Options,
    warnings: &mut Vec<Value>,
    subject: &str,
) -> Value {
    let mut out = Vec::new();
    for r in reports {
        let mut rec = json!({
            "quantity": r.quantity,
            "routes": r.route_values,
            "agree": r.agree,
            "value": r.value(),
        });
        if opts.compare_paper {
            if let Some(claim) = &r.paper_claim {
                rec["published"] = json!(claim.value);
                rec["matches_published"] = json!(r.matches_paper);
                if r.matches_paper == Some(false) {
                    warnings.push(json!({
                        "kind": "paper_mismatch",
                        "subject": subject,
                        "quantity": r.quantity,
                        "computed": r.value(),
                        "claimed": claim.value,
                        "citation": claim.citation,
                    }));
                }
            }
        }
        out.push(rec);
    }
    Value::Array(out)
}

fn jacobian_value(d: &HodgeDiamond) -> Result<Value, Error> {
    let n = d.dim();
    if n % 2 == 1 {
        Ok(json!(d.jacobian_dimension(n.div_ceil(2))?))
    } else {
        Ok(Value::Null)
    }
}

pub fn execute(req: &Request, opts: &Options) -> Result<Outcome, Error> {
    let mut warnings = Vec::new();
    let mut failed = false;
    let result = match req {
        Request::Ci {
            dim,
            degrees,
            jacobian,
        } => {
            let x = CompleteIntersection::new(*dim, degrees)?;
            let d = ci::hodge_diamond(&x)?;
            let reports = cross_validate_ci(&x)?;
            let mut out = Map::new();
            out.insert("kind".into(), json!("ci"));
            out.insert("variety".into(), json!(x.to_string()));
            out.insert("dim".into(), json!(x.dim()));
            out.insert("degrees".into(), json!(x.degrees()));
            out.insert("ambient_dim".into(), json!(x.ambient_dim()));
            out.insert(
                "euler_characteristic".into(),
                big(&ci::euler_characteristic(&x)),
            );
            diamond_fields(&mut out, &d);
            if *jacobian {
                if x.dim() % 2 == 0 {
                    warnings.push(json!({
                        "kind": "note",
                        "message": format!("{x} has even dimension; no intermediate Jacobian"),
                    }));
                }
                out.insert("dim_J".into(), jacobian_value(&d)?);
            }
            out.insert(
                "routes".into(),
                route_records(&reports, opts, &mut warnings, &x.to_string()),
            );
            Value::Object(out)
        }
        Request::Cover { n, m, b } => {
            let cover = CyclicCover::new(*n, *m, *b)?;
            let d = cover.hodge_diamond()?;
            let reports = cross_validate(&cover)?;
            let w = cover.weighted_model();
            let mut out = Map::new();
            out.insert("kind".into(), json!("cover"));
            out.insert("variety".into(), json!(cover.to_string()));
            out.insert("n".into(), json!(n));
            out.insert("m".into(), json!(m));
            out.insert("b".into(), json!(b));
            out.insert(
                "weighted_model".into(),
                json!({"weights": w.weights(), "degree": w.degree()}),
            );
            out.insert("euler_characteristic".into(), big(&cover.euler_via_cover()));
            out.insert("middle_betti".into(), json!(d.betti(*n)));
            diamond_fields(&mut out, &d);
            out.insert("dim_J".into(), jacobian_value(&d)?);
            out.insert(
                "routes".into(),
                route_records(&reports, opts, &mut warnings, &cover.to_string()),
            );
            if *m > 2 {
                warnings.push(json!({
                    "kind": "extrapolated",
                    "message": format!("{cover}: cover order above 2"),
                }));
            }
            Value::Object(out)
        }
        Request::Wps { weights, degree } => {
            let w = WeightedHypersurface::new(weights.clone(), *degree)?;
            let d = w.hodge_diamond()?;
            let reports = cross_validate_hypersurface(&w)?;
            let label = format!("degree {degree} in P{weights:?}");
            let mut out = Map::new();
            out.insert("kind".into(), json!("wps"));
            out.insert("weights".into(), json!(w.weights()));
            out.insert("degree".into(), json!(w.degree()));
            out.insert("dim".into(), json!(w.dim()));
            out.insert("socle_degree".into(), json!(w.socle_degree()));
            out.insert("calabi_yau_degree".into(), json!(w.is_calabi_yau_degree()));
            diamond_fields(&mut out, &d);
            out.insert("dim_J".into(), jacobian_value(&d)?);
            out.insert(
                "routes".into(),
                route_records(&reports, opts, &mut warnings, &label),
            );
            Value::Object(out)
        }
        Request::Fano { n, d, r, m, class } => fano_result(*n, *d, *r, *m, *class, &mut warnings)?,
        Request::Classify {
            max_dim,
            max_degree_sum,
        } => {
            let found = ci::classify_level_one(*max_dim, *max_degree_sum)?;
            let mut rows = Vec::new();
            for x in &found {
                let d = ci::hodge_diamond(x)?;
                rows.push(json!({
                    "variety": x.to_string(),
                    "dim": x.dim(),
                    "degrees": x.degrees(),
                    "middle_level": d.level(x.dim())?,
                    "dim_J": jacobian_value(&d)?,
                }));
            }
            json!({
                "kind": "classify",
                "max_dim": max_dim,
                "max_degree_sum": max_degree_sum,
                "count": found.len(),
                "found": rows,
            })
        }
        Request::Check { suite } => {
            let report = check::run_suite(suite)?;
            failed = !report.passed;
            serde_json::to_value(&report).expect("check report serializes")
        }
    };
    Ok(Outcome {
        result,
        warnings,
        failed,
    })
}

fn fano_result(
    n: usize,
    d: usize,
    r: usize,
    m: usize,
    with_class: bool,
    warnings: &mut Vec<Value>,
) -> Result<Value, Error> {
    let t = CoverTarget::new(n, d, r, m)?;
    let profile = fano::profile(&t)?;
    let checks = fano::multiplier_checks(&t)?;
    for c in checks.iter().filter(|c| !c.agree) {
        warnings.push(json!({
            "kind": "closed_form_mismatch",
            "target": t,
            "multiplier": c.name,
            "k": c.k,
            "engine": c.engine,
            "published": c.published,
            "citation": "published closed form for c_1(Sym^k S^v) on G(r,n)",
        }));
    }
    if t.is_extrapolated() {
        warnings.push(json!({
            "kind": "extrapolated",
            "message": format!("{t}: canonical bundle and class for cover order above 2"),
        }));
    }
    let mut out = Map::new();
    out.insert("kind".into(), json!("fano"));
    out.insert("target".into(), json!(t));
    out.insert("gp_dim".into(), json!(profile.gp_dim));
    out.insert("codim".into(), json!(profile.codim));
    out.insert("delta".into(), json!(profile.delta));
    out.insert("normal_chi".into(), json!(profile.normal_chi));
    out.insert("verdict".into(), json!(profile.emptiness_verdict));
    out.insert("canonical".into(), json!(profile.canonical));
    out.insert("closed_forms".into(), json!(checks));
    out.insert("extrapolated".into(), json!(t.is_extrapolated()));

    let mut count = Value::Null;
    if with_class || profile.delta == 0 {
        match fano::fano_class(&t, None) {
            Ok(f) => {
                if let Some(c) = &f.count {
                    count = big(c);
                }
                if with_class {
                    out.insert("class".into(), json!(f.levels));
                    out.insert("pushforward".into(), json!(f.pushforward));
                }
            }
            Err(Error::BudgetExceeded { rank, budget }) => warnings.push(json!({
                "kind": "budget_exceeded",
                "message": format!("{t}: symmetric power of rank {rank} exceeds budget {budget}"),
            })),
            Err(e) => return Err(e),
        }
    }
    out.insert("count".into(), count);
    Ok(Value::Object(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(req: Request, compare: bool) -> Outcome {
        execute(
            &req,
            &Options {
                compare_paper: compare,
                ..Options::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn cubic_threefold_jacobian() {
        let out = run(
            Request::Ci {
                dim: 3,
                degrees: vec![3],
                jacobian: true,
            },
            false,
        );
        assert_eq!(out.result["dim_J"], json!(5));
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn fano_example() {
        let out = run(
            Request::Fano {
                n: 5,
                d: 2,
                r: 1,
                m: 2,
                class: false,
            },
            false,
        );
        assert_eq!(out.result["delta"], json!(6));
        assert_eq!(out.result["verdict"], json!("NONEMPTY"));
        assert_eq!(out.result["count"], Value::Null);
    }

    #[test]
    fn closed_form_mismatch_is_a_warning() {
        let out = run(
            Request::Fano {
                n: 5,
                d: 3,
                r: 2,
                m: 2,
                class: false,
            },
            false,
        );
        assert_eq!(out.result["canonical"]["a"], json!(10));
        let w = out
            .warnings
            .iter()
            .find(|w| w["multiplier"] == "a")
            .unwrap();
        assert_eq!(w["published"], json!("11"));
        assert!(!out.failed);
    }

    #[test]
    fn paper_comparison_only_on_request() {
        let req = Request::Cover { n: 5, m: 2, b: 4 };
        assert!(run(req.clone(), false).warnings.is_empty());
        let out = run(req, true);
        assert_eq!(out.warnings.len(), 3);
        assert!(out.warnings.iter().all(|w| w["kind"] == "paper_mismatch"));
        assert_eq!(out.result["middle_betti"], json!(182));
    }

    #[test]
    fn invalid_input_is_an_error() {
        let err = execute(
            &Request::Fano {
                n: 3,
                d: 1,
                r: 3,
                m: 2,
                class: false,
            },
            &Options::default(),
        );
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }
}
