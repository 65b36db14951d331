//! Intersection theory on Grassmannians `G(r, n)` and on projective bundles
//! over them.
//!
//! Conventions: `S` is the rank `r+1` tautological subbundle, `Q` the rank
//! `n-r` universal quotient. Then `c_i(Q) = sigma_i`, `c_i(S^v) = sigma_{1^i}`
//! and `c_1(S^v) = sigma_1` is the Plucker hyperplane class.

mod bundle;
mod lr;
mod projective;
mod ring;
mod symmetric;

pub use bundle::{
    det_sym_multiplier, graded_inverse, graded_product, sym_power_chern,
    sym_power_chern_with_budget, tautological_bundles, BundleData, Tautological,
    DEFAULT_SYM_BUDGET,
};
pub use lr::lr_coefficient;
pub use projective::{ProjBundleRing, ProjClass};
pub use ring::{serialize_bigint, GrassmannClass, GrassmannRing};

use crate::error::Result;

/// `a * b` in the Schubert basis.
pub fn lr_multiply(a: &GrassmannClass, b: &GrassmannClass) -> Result<GrassmannClass> {
    a.mul(b)
}
