//! Lowering scene items to Bézier chains and emitting deterministic SVG.
//!
//! Every path is written with absolute `M`, `C`, `L`, and `Z` commands only —
//! no `A` (elliptical arc) commands, so the output exercises nothing but the
//! cubic approximation. Output is byte-for-byte reproducible: coordinates are
//! rounded half-to-even at the scene's precision and style attributes are
//! emitted in sorted key order.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;

use crate::bezier::{
    arc_to_beziers, clamp_maxphi, ellipse_to_beziers, segments_for_tolerance, ArcRequest,
    BezierChain,
};
use crate::error::Result;
use crate::geometry::{ConjugateEllipse, Point2};
use crate::scene::{ItemKind, Scene, SceneItem};

/// Knobs controlling how items are lowered to cubics.
///
/// `tolerance`, when set, overrides `nsegs_ellipse` and tightens `maxphi` so
/// that every emitted chain keeps its radial error within the given distance
/// (in scene units, after any item transform).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    /// Largest per-segment sweep for arcs and pies, radians in (0, π/2].
    pub maxphi: f64,
    /// Segment count for full ellipses (≥ 2).
    pub nsegs_ellipse: u32,
    /// Geometric error budget in scene units; `None` uses the fixed knobs.
    pub tolerance: Option<f64>,
}

pub const DEFAULT_NSEGS_ELLIPSE: u32 = 5;

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            maxphi: FRAC_PI_2,
            nsegs_ellipse: DEFAULT_NSEGS_ELLIPSE,
            tolerance: None,
        }
    }
}

/// A lowered item: the chain plus what the path outline needs beyond it.
#[derive(Clone, Debug, PartialEq)]
pub enum LoweredPath {
    /// Closed full ellipse (`Z` terminated).
    Ellipse(BezierChain),
    /// Open arc; a zero-sweep arc carries its start point and no segments.
    Arc(BezierChain),
    /// Pie slice: straight edges center → arc start and arc end → center.
    Pie { center: Point2, chain: BezierChain },
}

impl LoweredPath {
    pub fn chain(&self) -> &BezierChain {
        match self {
            LoweredPath::Ellipse(c) | LoweredPath::Arc(c) => c,
            LoweredPath::Pie { chain, .. } => chain,
        }
    }
}

/// Lowers one scene item, applying its transform to (C, P, Q) first; the
/// angles are expressed in the conjugate basis and are never transformed.
pub fn lower_item(item: &SceneItem, opts: &RenderOptions) -> Result<LoweredPath> {
    let ellipse = match item.transform {
        Some(t) => t.apply_ellipse(&item.ellipse),
        None => item.ellipse,
    };

    match item.kind {
        ItemKind::Ellipse => {
            let nsegs = match opts.tolerance {
                None => opts.nsegs_ellipse,
                Some(tol) => segments_for_tolerance(&ellipse, TAU, tol)?.max(2),
            };
            Ok(LoweredPath::Ellipse(ellipse_to_beziers(&ellipse, nsegs)?))
        }
        ItemKind::Arc | ItemKind::Pie => {
            let maxphi = effective_maxphi(opts, &ellipse, item.asweep)?;
            let req = ArcRequest {
                ellipse,
                astart: item.astart,
                asweep: item.asweep,
            };
            let chain = arc_to_beziers(&req, maxphi)?;
            match item.kind {
                ItemKind::Arc => Ok(LoweredPath::Arc(chain)),
                _ => Ok(LoweredPath::Pie {
                    center: ellipse.c,
                    chain,
                }),
            }
        }
    }
}

fn effective_maxphi(opts: &RenderOptions, ellipse: &ConjugateEllipse, asweep: f64) -> Result<f64> {
    clamp_maxphi(opts.maxphi)?;
    let tol = match opts.tolerance {
        None => return Ok(opts.maxphi),
        Some(tol) => tol,
    };
    let sweep = asweep.abs().min(TAU);
    if sweep == 0.0 {
        // Zero-sweep arcs emit no curve; any maxphi will do.
        return Ok(opts.maxphi);
    }
    let nsegs = segments_for_tolerance(ellipse, sweep, tol)?;
    Ok((sweep / nsegs as f64).min(opts.maxphi))
}

/// Formats one coordinate: fixed-point at `precision` decimals (Rust's float
/// formatting rounds ties to even), then trailing zeros and a bare trailing
/// dot are trimmed, and negative zero collapses to "0".
fn fmt_coord(value: f64, precision: usize) -> String {
    let mut s = format!("{value:.precision$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s.remove(0);
    }
    s
}

fn push_point(d: &mut String, pt: Point2, precision: usize) {
    let _ = write!(d, " {} {}", fmt_coord(pt.x, precision), fmt_coord(pt.y, precision));
}

fn chain_curves(d: &mut String, chain: &BezierChain, precision: usize) {
    for seg in &chain.segments {
        d.push_str(" C");
        push_point(d, seg.c1, precision);
        push_point(d, seg.c2, precision);
        push_point(d, seg.p2, precision);
    }
}

/// Builds the `d` attribute for a lowered path.
pub fn path_data(path: &LoweredPath, precision: u32) -> String {
    let p = precision as usize;
    let mut d = String::from("M");
    match path {
        LoweredPath::Ellipse(chain) => {
            push_point(&mut d, chain.start, p);
            chain_curves(&mut d, chain, p);
            d.push_str(" Z");
        }
        LoweredPath::Arc(chain) => {
            push_point(&mut d, chain.start, p);
            chain_curves(&mut d, chain, p);
        }
        LoweredPath::Pie { center, chain } => {
            push_point(&mut d, *center, p);
            d.push_str(" L");
            push_point(&mut d, chain.start, p);
            chain_curves(&mut d, chain, p);
            d.push_str(" L");
            push_point(&mut d, *center, p);
            d.push_str(" Z");
        }
    }
    d
}

fn escape_attr(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

/// Renders a whole scene to SVG bytes. Identical scenes and options yield
/// identical bytes.
pub fn emit_svg(scene: &Scene, opts: &RenderOptions) -> Result<Vec<u8>> {
    let p = scene.precision as usize;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let w = fmt_coord(scene.width, p);
    let h = fmt_coord(scene.height, p);
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );

    for item in &scene.items {
        let lowered = lower_item(item, opts)?;
        let d = path_data(&lowered, scene.precision);
        let _ = write!(out, "\n  <path d=\"{d}\"");
        for (key, value) in &item.style {
            let _ = write!(out, " {key}=\"{}\"", escape_attr(value));
        }
        out.push_str("/>");
    }

    if scene.items.is_empty() {
        out.push_str("</svg>\n");
    } else {
        out.push_str("\n</svg>\n");
    }
    Ok(out.into_bytes())
}

/// Convenience wrapper mirroring the CLI's render flow: parse, then emit.
pub fn render_scene_bytes(text: &[u8], opts: &RenderOptions) -> Result<Vec<u8>> {
    let scene = crate::scene::parse_scene(text)?;
    emit_svg(&scene, opts)
}
