//! Exact verification and transformation of simplicial fans.
//!
//! The crate encodes the singular simplicial fan over the Barnette sphere,
//! checks completeness and smoothness with exact integer arithmetic, replays
//! the ten stellar subdivisions that turn it into a smooth complete fan,
//! classifies the lattice points of a box against a fan, and generates an
//! infinite family of smooth complete fans by further subdivision and
//! suspension.
//!
//! ```
//! use toricfan::{datasets::barnette_fan, subdivision::desingularize_barnette};
//!
//! let delta = barnette_fan();
//! assert!(!delta.smoothness_report().smooth);
//! let (smooth, steps) = desingularize_barnette();
//! assert_eq!((smooth.rays().len(), smooth.cones().len(), steps.len()), (18, 55, 10));
//! assert!(smooth.smoothness_report().smooth && smooth.is_complete().unwrap());
//! ```

pub mod certify;
pub mod commands;
pub mod complex;
pub mod datasets;
pub mod elimination;
pub mod fan;
pub mod formats;
pub mod linalg;
pub mod scan;
pub mod subdivision;

pub use certify::{certify_realization, convex_position, CertificateReport, Realization};
pub use complex::{underlying_complex, verify_barnette_obstruction, FVector, SimplicialComplex};
pub use fan::{CompletenessReport, Containment, Fan, FanError, Ray, SimplicialCone};
pub use linalg::{determinant, make_primitive, solve_coefficients, IntVector, RatVector, SquareMatrix};
pub use scan::{classify_point, scan_box, scan_box_with_workers, PointClass, ScanReport};
pub use subdivision::{desingularize_barnette, generate_family, refines, stellar_subdivide, suspend_fan};
