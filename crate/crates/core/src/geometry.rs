//! Points, affine maps, and the three-point ellipse model.
//!
//! An ellipse (or circle) is stored as its center `C` plus the end points `P`
//! and `Q` of a pair of conjugate diameters. The center-relative vectors
//! `P − C` and `Q − C` are the columns of the linear map that carries the unit
//! circle onto the ellipse, which makes the representation closed under affine
//! transformation: transforming the three defining points transforms the curve.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A 2-D coordinate pair in user space (also used for unit-circle frame
/// coordinates).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Euclidean norm of the point treated as a vector from the origin.
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn midpoint(a: Point2, b: Point2) -> Point2 {
        Point2::new((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    }

    /// Cross product z-component of two vectors, `self × other`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// A 2×2 linear part plus translation.
///
/// Applied to a point as `x' = m11·x + m12·y + tx`, `y' = m21·x + m22·y + ty`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineMap2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl AffineMap2 {
    pub const IDENTITY: AffineMap2 = AffineMap2 {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
        tx: 0.0,
        ty: 0.0,
    };

    pub const fn new(m11: f64, m12: f64, m21: f64, m22: f64, tx: f64, ty: f64) -> Self {
        AffineMap2 {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
        }
    }

    /// Builds the map from the SVG `matrix(a b c d e f)` entry order
    /// `[m11, m21, m12, m22, tx, ty]`.
    pub const fn from_svg_matrix(m: [f64; 6]) -> Self {
        AffineMap2::new(m[0], m[2], m[1], m[3], m[4], m[5])
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn is_finite(&self) -> bool {
        self.m11.is_finite()
            && self.m12.is_finite()
            && self.m21.is_finite()
            && self.m22.is_finite()
            && self.tx.is_finite()
            && self.ty.is_finite()
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::new(
            self.m11 * p.x + self.m12 * p.y + self.tx,
            self.m21 * p.x + self.m22 * p.y + self.ty,
        )
    }

    /// Transforms an ellipse by transforming its three defining points,
    /// componentwise and nothing else. Any start/sweep angles attached to the
    /// ellipse elsewhere keep their values.
    pub fn apply_ellipse(&self, e: &ConjugateEllipse) -> ConjugateEllipse {
        ConjugateEllipse {
            c: self.apply(e.c),
            p: self.apply(e.p),
            q: self.apply(e.q),
        }
    }
}

/// An ellipse described by its center and one pair of conjugate-diameter end
/// points.
///
/// Degenerate configurations (collinear `C`, `P`, `Q`, or coincident points)
/// are representable; segment generation still terminates on them, and only
/// [`ConjugateEllipse::membership`] — which has to invert the unit-circle map —
/// rejects them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugateEllipse {
    pub c: Point2,
    pub p: Point2,
    pub q: Point2,
}

/// Relative threshold on `|det M|` below which the unit-circle map is treated
/// as non-invertible.
const DEGENERACY_EPS: f64 = 1e-12;

impl ConjugateEllipse {
    pub fn new(c: Point2, p: Point2, q: Point2) -> Result<Self> {
        if !c.is_finite() || !p.is_finite() || !q.is_finite() {
            return Err(Error::InvalidInput(
                "ellipse points must be finite".to_string(),
            ));
        }
        Ok(ConjugateEllipse { c, p, q })
    }

    /// The ellipse inscribed in a parallelogram given by three consecutive
    /// vertices: it touches each side at the side's midpoint, so the center is
    /// the parallelogram center and the two adjacent side midpoints are
    /// conjugate-diameter end points. The fourth vertex is implied by symmetry.
    pub fn from_parallelogram(v0: Point2, v1: Point2, v2: Point2) -> Result<Self> {
        ConjugateEllipse::new(
            Point2::midpoint(v0, v2),
            Point2::midpoint(v0, v1),
            Point2::midpoint(v1, v2),
        )
    }

    /// The ellipse through adjacent vertices `w0`, `w1` of an inscribed
    /// parallelogram centered at `c`; such vertices are conjugate-diameter end
    /// points directly.
    pub fn from_inscribed_parallelogram(c: Point2, w0: Point2, w1: Point2) -> Result<Self> {
        ConjugateEllipse::new(c, w0, w1)
    }

    /// Bridge from the conventional center / radii / rotation description.
    /// The principal axes are a conjugate pair.
    pub fn from_axes(c: Point2, rx: f64, ry: f64, rot: f64) -> Result<Self> {
        // NaN radii must fail this test too, hence the negated form.
        if !(rx >= 0.0 && ry >= 0.0) {
            return Err(Error::InvalidInput("radii must be non-negative".to_string()));
        }
        if !rot.is_finite() {
            return Err(Error::InvalidInput("rotation must be finite".to_string()));
        }
        let (sin, cos) = rot.sin_cos();
        ConjugateEllipse::new(
            c,
            Point2::new(c.x + rx * cos, c.y + rx * sin),
            Point2::new(c.x - ry * sin, c.y + ry * cos),
        )
    }

    /// Maps a unit-circle frame point `u` into user space: `C + M·u` where the
    /// columns of `M` are `P − C` and `Q − C`.
    pub fn map_unit(&self, u: Point2) -> Point2 {
        let p = self.p - self.c;
        let q = self.q - self.c;
        Point2::new(
            self.c.x + p.x * u.x + q.x * u.y,
            self.c.y + p.y * u.x + q.y * u.y,
        )
    }

    /// Signed radial residual of `pt` against the ellipse: `‖M⁻¹(pt − C)‖ − 1`.
    /// Zero on the curve, negative inside, positive outside. For the unit
    /// circle this is exactly the radial error of a point.
    pub fn membership(&self, pt: Point2) -> Result<f64> {
        let p = self.p - self.c;
        let q = self.q - self.c;
        let det = p.cross(q);
        let scale = (p.x * p.x + p.y * p.y).max(q.x * q.x + q.y * q.y);
        // Written so NaN (from non-finite fields) lands on the error path.
        let well_conditioned = det.abs() > DEGENERACY_EPS * scale;
        if !well_conditioned {
            return Err(Error::DegenerateEllipse);
        }
        let r = pt - self.c;
        let u = (q.y * r.x - q.x * r.y) / det;
        let v = (-p.y * r.x + p.x * r.y) / det;
        Ok(u.hypot(v) - 1.0)
    }

    /// Radius of the ellipse when its conjugate pair is exactly a circle's
    /// (perpendicular, equal length); `None` otherwise. Exactness is
    /// deliberate: the tightening only applies when the representation is
    /// bit-for-bit circular, as produced by [`ConjugateEllipse::from_axes`]
    /// with equal radii.
    pub fn circle_radius(&self) -> Option<f64> {
        let p = self.p - self.c;
        let q = self.q - self.c;
        let dot = p.x * q.x + p.y * q.y;
        let np = p.norm();
        let nq = q.norm();
        if dot == 0.0 && np == nq {
            Some(np)
        } else {
            None
        }
    }
}

/// Rotates a center-relative conjugate pair by `phi` radians along the
/// ellipse: `P' = P·cosφ + Q·sinφ`, `Q' = Q·cosφ − P·sinφ`. The result is a
/// new conjugate pair on the same ellipse.
pub fn rotate_conjugate_pair(p: Point2, q: Point2, phi: f64) -> (Point2, Point2) {
    rotate_pair_with(p, q, phi.cos(), phi.sin())
}

/// Rotation step with precomputed cosine and sine, shared by the chain
/// generators so a chain's per-segment advance rounds identically to a direct
/// call of [`rotate_conjugate_pair`].
pub(crate) fn rotate_pair_with(p: Point2, q: Point2, cosp: f64, sinp: f64) -> (Point2, Point2) {
    let np = Point2::new(p.x * cosp + q.x * sinp, p.y * cosp + q.y * sinp);
    let nq = Point2::new(q.x * cosp - p.x * sinp, q.y * cosp - p.y * sinp);
    (np, nq)
}
