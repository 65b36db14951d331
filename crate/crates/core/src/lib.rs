//! Exact invariants of smooth complete intersections, cyclic covers of
//! projective space, and Fano schemes of planes in double covers.

pub mod ci;
pub mod cover;
pub mod diamond;
pub mod error;
pub mod exact;
pub mod fano;
pub mod schubert;

pub use ci::CompleteIntersection;
pub use cover::{ConsistencyReport, CyclicCover, WeightedHypersurface};
pub use diamond::{BettiTable, HodgeDiamond, HodgeLevel};
pub use error::{Error, Result};
pub use exact::{BigRat, Partition, TruncSeries};
pub use fano::{
    CanonicalDescriptor, CoverTarget, EmptinessVerdict, FanoClass, FanoSchemeProfile, Positivity,
};
pub use schubert::{GrassmannClass, GrassmannRing};
