//! Matroids given by explicit base families, their base graphs and base
//! polytopes, and machinery for finding, constructing and certifying
//! hyperplane splits of those polytopes.
//!
//! Everything here is exact integer/rational combinatorics at desk scale:
//! ground sets are capped (20 elements by default, see [`guard`]) and all
//! searches are exhaustive, so results double as checkable certificates.

pub mod gf2;
pub mod graph;
mod lp;
pub mod matroid;
pub mod polytope;
pub mod split;
pub mod subset;
pub mod zoo;

pub use gf2::Gf2Matrix;
pub use graph::{BaseGraph, NeighborhoodClass, NeighborhoodKind};
pub use matroid::{Matroid, MatroidError, Restriction};
pub use polytope::{FacetCheck, IncidenceVector, SplitHyperplane};
pub use split::{
    Admission, Certificate, DistinctnessKey, GoodPartition, SplitCandidate, SplitSource,
    VerificationReport,
};
pub use subset::Subset;

/// Desk-scale guard: hard caps that make the exhaustive algorithms refuse
/// inputs they would choke on instead of hanging.
pub mod guard {
    use std::sync::OnceLock;

    /// Default cap on ground-set size.
    pub const DEFAULT_MAX_ELEMENTS: usize = 20;
    /// Default cap on base-family size for graph construction and searches.
    pub const DEFAULT_MAX_BASES: usize = 5000;

    /// Environment variable overriding the ground-set cap.
    pub const MAX_ELEMENTS_ENV: &str = "MSPLIT_MAX_ELEMENTS";

    fn env_limit() -> usize {
        static LIMIT: OnceLock<usize> = OnceLock::new();
        *LIMIT.get_or_init(|| {
            std::env::var(MAX_ELEMENTS_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(DEFAULT_MAX_ELEMENTS)
        })
    }

    /// Current cap on ground-set size. Never exceeds the bitmask width (32).
    pub fn max_elements() -> usize {
        env_limit().min(32)
    }

    /// Current cap on base-family size.
    pub fn max_bases() -> usize {
        DEFAULT_MAX_BASES
    }
}
