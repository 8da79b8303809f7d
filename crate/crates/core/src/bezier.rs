//! Lowering of full ellipses and elliptical arcs to cubic Bézier chains.
//!
//! A `φ`-radian arc of the unit circle starting at `(1, 0)` is approximated by
//! one cubic segment whose control points sit at distance `τ = (4/3)tan(φ/4)`
//! along the tangents: `c1 = p1 + τ·Q` and `c2 = p2 − τ·Q'`, with `Q` and `Q'`
//! the conjugate partners at the two end points. The same construction carried
//! through the unit-circle→ellipse map yields elliptical arcs directly, and a
//! full ellipse is a closed chain of uniform arcs in which each segment's `c1`
//! is obtained by reflecting the previous segment's `c2` through the shared
//! on-curve point.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geometry::{rotate_pair_with, ConjugateEllipse, Point2};
use crate::radial_error::eps_max;

/// One cubic Bézier curve: start point, two control points, end point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicSegment {
    pub p1: Point2,
    pub c1: Point2,
    pub c2: Point2,
    pub p2: Point2,
}

impl CubicSegment {
    /// Bernstein-form evaluation at `t`. The caller is expected to keep
    /// `t ∈ [0, 1]`; use [`eval_cubic`] for a validating entry point.
    pub fn eval(&self, t: f64) -> Point2 {
        let mt = 1.0 - t;
        let a = mt * mt * mt;
        let b = 3.0 * t * (mt * mt);
        let c = 3.0 * (t * t) * mt;
        let d = t * t * t;
        Point2::new(
            a * self.p1.x + b * self.c1.x + c * self.c2.x + d * self.p2.x,
            a * self.p1.y + b * self.c1.y + c * self.c2.y + d * self.p2.y,
        )
    }
}

/// Evaluates `s` at `t`, rejecting parameters outside `[0, 1]`.
pub fn eval_cubic(s: &CubicSegment, t: f64) -> Result<Point2> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidInput(format!(
            "cubic parameter t must be in [0, 1], got {t}"
        )));
    }
    Ok(s.eval(t))
}

/// An elliptical arc: the host ellipse plus start and sweep angles in radians.
///
/// Both angles are meaningful over `[−2π, 2π]`. The sweep's sign selects the
/// drawing direction; its magnitude is clamped to a full revolution during
/// lowering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcRequest {
    pub ellipse: ConjugateEllipse,
    pub astart: f64,
    pub asweep: f64,
}

/// A piecewise cubic curve. `segments[i].p2` and `segments[i+1].p1` hold the
/// same value (assigned, never recomputed); for a closed chain the last end
/// point returns to `start` up to floating-point accumulation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BezierChain {
    pub start: Point2,
    pub segments: Vec<CubicSegment>,
}

/// Control-point distance `(4/3)·tan(phi/4)` for an arc of `phi` radians.
pub fn tau(phi: f64) -> Result<f64> {
    if !(phi > 0.0 && phi < 2.0 * PI) {
        return Err(Error::InvalidInput(format!(
            "arc angle must be in (0, 2*pi), got {phi}"
        )));
    }
    Ok((4.0 / 3.0) * (phi / 4.0).tan())
}

/// Largest subarc angle accepted by [`arc_to_beziers`]; equal to the
/// single-segment quarter-circle limit.
pub const MAXPHI_LIMIT: f64 = FRAC_PI_2;

/// Smallest effective subarc angle; smaller requests are clamped up to avoid
/// degenerate `tau` values.
pub const MAXPHI_FLOOR: f64 = 1e-3;

/// Validates a maximum-subarc angle and applies the lower clamp.
pub fn clamp_maxphi(maxphi: f64) -> Result<f64> {
    if !(maxphi > 0.0 && maxphi <= MAXPHI_LIMIT) {
        return Err(Error::InvalidInput(format!(
            "maxphi must be in (0, pi/2], got {maxphi}"
        )));
    }
    Ok(maxphi.max(MAXPHI_FLOOR))
}

/// Converts a full ellipse into a closed chain of `nsegs` uniform segments,
/// starting at `P` and sweeping toward `Q`.
///
/// `nsegs = 4` and `nsegs = 8` take specialized constant-folded paths (the
/// quarter-turn rotation is exact and `τ` is a fixed constant); other counts
/// run the general rotation recurrence. All paths share the same structure:
/// advance the conjugate pair by `φ = 2π/nsegs` per segment, place `c2` from
/// the new pair, and reflect the previous `c2` through the shared point to get
/// `c1`.
pub fn ellipse_to_beziers(e: &ConjugateEllipse, nsegs: u32) -> Result<BezierChain> {
    match nsegs {
        0 | 1 => Err(Error::InvalidInput(format!(
            "a closed ellipse needs at least 2 segments, got {nsegs}"
        ))),
        4 => Ok(four_segment_chain(e)),
        8 => Ok(eight_segment_chain(e)),
        n => general_chain(e, n),
    }
}

/// General uniform-subdivision recurrence for any `nsegs ≥ 2`.
pub(crate) fn general_chain(e: &ConjugateEllipse, nsegs: u32) -> Result<BezierChain> {
    let phi = 2.0 * PI / f64::from(nsegs);
    let (cosp, sinp) = (phi.cos(), phi.sin());
    let tau = tau(phi)?;

    let start = e.p;
    let mut p = e.p - e.c;
    let mut q = e.q - e.c;
    let mut p2 = start;
    let mut c2 = p2 - q * tau;

    let mut segments = Vec::with_capacity(nsegs as usize);
    for _ in 0..nsegs {
        let p1 = p2;
        let c1 = p1 + (p1 - c2);
        (p, q) = rotate_pair_with(p, q, cosp, sinp);
        p2 = p + e.c;
        c2 = p2 - q * tau;
        segments.push(CubicSegment { p1, c1, c2, p2 });
    }
    Ok(BezierChain { start, segments })
}

/// Four quarter-circle segments: the rotation degenerates to the swap
/// `(P, Q) ← (Q, −P)` and `τ` is the quarter-circle constant
/// `κ = (4/3)·tan(π/8)`.
fn four_segment_chain(e: &ConjugateEllipse) -> BezierChain {
    const TAU: f64 = 0.5522847498307934;

    let start = e.p;
    let mut p = e.p - e.c;
    let mut q = e.q - e.c;
    let mut p2 = start;
    let mut c2 = p2 - q * TAU;

    let mut segments = Vec::with_capacity(4);
    for _ in 0..4 {
        let p1 = p2;
        let c1 = p1 + (p1 - c2);
        let tmp = q;
        q = -p;
        p = tmp;
        p2 = p + e.c;
        c2 = p2 - q * TAU;
        segments.push(CubicSegment { p1, c1, c2, p2 });
    }
    BezierChain { start, segments }
}

/// Eight eighth-circle segments: with `sin φ = cos φ = √2/2` the rotation
/// needs two multiplications instead of four.
fn eight_segment_chain(e: &ConjugateEllipse) -> BezierChain {
    // Full 16-digit value, trailing zero included.
    #[allow(clippy::excessive_precision)]
    const TAU: f64 = 0.2652164898395440;
    const SINCOS: f64 = 0.7071067811865475;

    let start = e.p;
    let mut p = e.p - e.c;
    let mut q = e.q - e.c;
    let mut p2 = start;
    let mut c2 = p2 - q * TAU;

    let mut segments = Vec::with_capacity(8);
    for _ in 0..8 {
        let p1 = p2;
        let c1 = p1 + (p1 - c2);
        let tmp = Point2::new(SINCOS * (p.x + q.x), SINCOS * (p.y + q.y));
        q = Point2::new(SINCOS * (q.x - p.x), SINCOS * (q.y - p.y));
        p = tmp;
        p2 = p + e.c;
        c2 = p2 - q * TAU;
        segments.push(CubicSegment { p1, c1, c2, p2 });
    }
    BezierChain { start, segments }
}

/// Lowers an elliptical arc to a chain of at most quarter-turn segments.
///
/// The flow, in order: rotate the center-relative conjugate pair by `astart`
/// (the rotated `P` is the arc's start point, reported even for an empty
/// sweep); for a negative sweep, negate `Q` and the sweep so the construction
/// runs in the opposite direction; clamp the sweep to a full revolution; split
/// into `ceil(asweep/maxphi)` uniform subarcs and emit one segment per subarc.
pub fn arc_to_beziers(req: &ArcRequest, maxphi: f64) -> Result<BezierChain> {
    if !req.astart.is_finite() || !req.asweep.is_finite() {
        return Err(Error::InvalidInput(
            "astart and asweep must be finite".to_string(),
        ));
    }
    let maxphi = clamp_maxphi(maxphi)?;

    let e = &req.ellipse;
    let mut p = e.p - e.c;
    let mut q = e.q - e.c;
    if req.astart != 0.0 {
        (p, q) = rotate_pair_with(p, q, req.astart.cos(), req.astart.sin());
    }
    let start = p + e.c;

    let mut asweep = req.asweep;
    if asweep == 0.0 {
        return Ok(BezierChain {
            start,
            segments: Vec::new(),
        });
    }
    if asweep < 0.0 {
        q = -q;
        asweep = -asweep;
    }
    if asweep > 2.0 * PI {
        asweep = 2.0 * PI;
    }

    let mut nsegs = 1u32;
    let mut phi = asweep;
    if asweep > maxphi {
        nsegs = (asweep / maxphi).ceil() as u32;
        phi = asweep / f64::from(nsegs);
    }

    let tau = tau(phi)?;
    let (cosp, sinp) = (phi.cos(), phi.sin());
    let mut p2 = start;
    let mut c2 = p2 - q * tau;

    let mut segments = Vec::with_capacity(nsegs as usize);
    for _ in 0..nsegs {
        let p1 = p2;
        let c1 = p1 + (p1 - c2);
        (p, q) = rotate_pair_with(p, q, cosp, sinp);
        p2 = p + e.c;
        c2 = p2 - q * tau;
        segments.push(CubicSegment { p1, c1, c2, p2 });
    }
    Ok(BezierChain { start, segments })
}

/// Single-segment approximation of a `phi`-radian arc of the unit circle
/// starting at `(1, 0)`: the direct two-tangent construction, usable for any
/// `phi` in `(0, 2π)` (unlike [`arc_to_beziers`], no quarter-turn cap). This is
/// the segment the error model analyzes.
pub fn unit_arc_segment(phi: f64) -> Result<CubicSegment> {
    let tau = tau(phi)?;
    let p1 = Point2::new(1.0, 0.0);
    let c1 = Point2::new(1.0, tau);
    let (p, q) = rotate_pair_with(p1, Point2::new(0.0, 1.0), phi.cos(), phi.sin());
    let p2 = p;
    let c2 = p2 - q * tau;
    Ok(CubicSegment { p1, c1, c2, p2 })
}

/// Number of uniform segments needed to keep the radial error of a `sweep`
/// arc of ellipse `e` within `tol` user units: the smallest `n ≥ 1` with
/// `R_eff · ε_max(sweep/n) ≤ tol`.
///
/// `R_eff = ‖P−C‖ + ‖Q−C‖` is a safe overestimate of the semi-major axis (the
/// exact axis would need an eigendecomposition), so the returned count can be
/// one higher than an exact-radius computation would give. When the
/// representation is exactly circular, [`segments_for_tolerance_with_radius`]
/// with [`ConjugateEllipse::circle_radius`] tightens the bound.
pub fn segments_for_tolerance(e: &ConjugateEllipse, sweep: f64, tol: f64) -> Result<u32> {
    let r_eff = (e.p - e.c).norm() + (e.q - e.c).norm();
    segments_for_tolerance_with_radius(r_eff, sweep, tol)
}

/// [`segments_for_tolerance`] against an explicit circle radius (or any other
/// bound on the largest radius the caller can vouch for).
pub fn segments_for_tolerance_with_radius(radius: f64, sweep: f64, tol: f64) -> Result<u32> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !(sweep > 0.0 && sweep <= 2.0 * PI) {
        return Err(Error::InvalidInput(format!(
            "sweep must be in (0, 2*pi], got {sweep}"
        )));
    }
    if !(radius.is_finite() && radius >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "radius must be non-negative and finite, got {radius}"
        )));
    }

    const MAX_SEGMENTS: u32 = 1 << 24;
    let mut n = 1u32;
    loop {
        let phi = sweep / f64::from(n);
        // A full revolution cannot be a single segment (tau is singular at
        // 2*pi); skip counts whose subarc is not a proper arc.
        if phi < 2.0 * PI && radius * eps_max(phi)? <= tol {
            return Ok(n);
        }
        n += 1;
        if n > MAX_SEGMENTS {
            return Err(Error::InvalidInput(format!(
                "tolerance {tol} needs more than {MAX_SEGMENTS} segments"
            )));
        }
    }
}
