//! Conic-to-Bézier conversion built on the conjugate-diameter representation.
//!
//! An ellipse is stored as three points: its center `C` and the end points
//! `P`, `Q` of two conjugate diameters. The affine map sending the unit
//! circle's `(1,0)` to `P − C` and `(0,1)` to `Q − C` (plus the translation
//! by `C`) carries the circle onto the ellipse, so every construction here —
//! rotation in the conjugate basis, arc subdivision, the cubic control-point
//! recurrence — happens on the unit circle and transfers to arbitrary
//! ellipses for free.
//!
//! The crate provides:
//!
//! - [`ConjugateEllipse`], [`Point2`], [`AffineMap2`]: the representation and
//!   the affine algebra it rides on.
//! - [`ellipse_to_beziers`] / [`arc_to_beziers`]: piecewise-cubic chains for
//!   full ellipses and arbitrary elliptical arcs, with G1 joints and a
//!   per-segment sweep cap.
//! - [`eps_max`], [`psi_max`], [`profile_unit_arc`], [`table1_report`]: the
//!   radial error model for circular-arc segments, both in closed form and by
//!   brute-force sampling.
//! - [`parse_scene`] / [`emit_svg`]: a small JSON scene format rendered to
//!   deterministic SVG using `M`/`C`/`L`/`Z` commands only.
//!
//! ```
//! use conic2bezier::{arc_to_beziers, ArcRequest, ConjugateEllipse, Point2};
//!
//! let circle = ConjugateEllipse::new(
//!     Point2::new(0.0, 0.0),
//!     Point2::new(1.0, 0.0),
//!     Point2::new(0.0, 1.0),
//! )
//! .unwrap();
//! let chain = arc_to_beziers(
//!     &ArcRequest { ellipse: circle, astart: 0.0, asweep: std::f64::consts::FRAC_PI_2 },
//!     std::f64::consts::FRAC_PI_2,
//! )
//! .unwrap();
//! assert_eq!(chain.segments.len(), 1);
//! assert!((chain.segments[0].p2.y - 1.0).abs() < 1e-15);
//! ```

mod bezier;
mod error;
mod geometry;
mod radial_error;
mod scene;
mod svg;

pub use bezier::{
    arc_to_beziers, clamp_maxphi, ellipse_to_beziers, eval_cubic, segments_for_tolerance,
    segments_for_tolerance_with_radius, tau, unit_arc_segment, ArcRequest, BezierChain,
    CubicSegment, MAXPHI_FLOOR, MAXPHI_LIMIT,
};
pub use error::{Error, Result};
pub use geometry::{rotate_conjugate_pair, AffineMap2, ConjugateEllipse, Point2};
pub use radial_error::{
    eps_max, eps_pointwise, profile_unit_arc, psi_max, psi_pointwise, table1_report, ErrorProfile,
    TableRow,
};
pub use scene::{
    parse_scene, parse_scene_with_default_precision, ItemKind, Scene, SceneItem,
    DEFAULT_PRECISION,
};
pub use svg::{
    emit_svg, lower_item, path_data, render_scene_bytes, LoweredPath, RenderOptions,
    DEFAULT_NSEGS_ELLIPSE,
};
