//! Exact digital discs on the integer plane under the taxicab (L1) metric.
//!
//! * [`lattice`]: pixels, the rotated `(u, v)` frame, circle and disc
//!   enumeration, closed-form cardinalities.
//! * [`metrics`]: symmetric-difference and Hausdorff proximity of pixel sets.
//! * [`proximity`]: classification of disc pairs, closed-form values of the
//!   symmetric-difference metric, and an enumeration oracle that checks them.
//! * [`cli`]: scene files, reports and renderers behind the `l1disc` binary.
//!
//! Everything is generic over the coordinate integer ([`Coord`]); the
//! aliases below fix it to `i64`.

pub mod cli;
pub mod error;
pub mod lattice;
pub mod metrics;
pub mod proximity;
pub mod scalar;

pub use error::GeometryError;
pub use lattice::{
    circle_cardinality_closed, circumference_closed, disc_cardinality_closed, enumerate_circle,
    enumerate_disc, l1_distance, EnumCap, DEFAULT_ENUM_CAP, PI_L1,
};
pub use metrics::{hausdorff_distance, symmetric_difference_metric, ProximityValue};
pub use proximity::{
    classify_pair, counterexample_search, verify_pair, Classification, Formula, Regime, SweepBounds,
};
pub use scalar::Coord;

pub type Pixel = lattice::PixelPoint<i64>;
pub type UvPoint = lattice::UvPoint<i64>;
pub type Circle = lattice::DigitalCircle<i64>;
pub type Disc = lattice::DigitalDisc<i64>;
pub type PixelSet = lattice::PixelSet<i64>;
pub type DiscPair = proximity::DiscPair<i64>;
pub type OverlapRect = proximity::OverlapRect<i64>;
pub type RectDims = proximity::RectDims<i64>;
pub type VerificationReport = proximity::VerificationReport<i64>;
pub type SweepSummary = proximity::SweepSummary<i64>;
