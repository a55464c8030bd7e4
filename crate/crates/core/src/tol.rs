//! Numerical thresholds. These are the single source of numerical truth for
//! every decision (rank, clustering, cone membership) made by the crate.

/// Eigenvalues closer than `CLUSTER_REL * max(1, ‖a‖)` are merged into one
/// spectral cluster.
pub const CLUSTER_REL: f64 = 1e-8;

/// Relative threshold for rank decisions: carriers, null spaces, projection
/// meets and "is this product zero" tests.
pub const RANK_REL: f64 = 1e-8;

/// A symmetric matrix is positive when its least eigenvalue is at least
/// `-PSD_REL * max(1, ‖a‖)`.
pub const PSD_REL: f64 = 1e-9;

/// Pointwise slack for the function-algebra cone.
pub const FUNCTION_CONE: f64 = 1e-12;

/// Largest symmetrization correction accepted when building a symmetric
/// matrix, relative to `max(1, max |entry|)`.
pub const SYMMETRIZE_MAX: f64 = 1e-10;

/// Default tolerance used when reporting residuals.
pub const REPORT: f64 = 1e-9;

/// `max(1, x)`, the scale factor used by every relative threshold.
#[inline]
pub fn scale(x: f64) -> f64 {
    if x > 1.0 {
        x
    } else {
        1.0
    }
}
