//! Shared fixtures for the criterion benchmarks.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use conic2bezier::{ConjugateEllipse, ItemKind, Point2, Scene, SceneItem};

/// A generic (rotated, anisotropic) ellipse with no special structure, so
/// benchmarks don't accidentally measure an axis-aligned fast case.
pub fn skewed_ellipse() -> ConjugateEllipse {
    ConjugateEllipse {
        c: Point2::new(37.0, -12.0),
        p: Point2::new(142.5, 33.0),
        q: Point2::new(9.0, 71.25),
    }
}

/// A pie-chart scene with `slices` wedges, matching how the renderer is used
/// in anger: many small arcs on one shared ellipse.
pub fn pie_scene(slices: u32) -> Scene {
    let ellipse = ConjugateEllipse {
        c: Point2::new(128.0, 128.0),
        p: Point2::new(240.0, 128.0),
        q: Point2::new(128.0, 40.0),
    };
    let sweep = TAU / f64::from(slices);
    let items = (0..slices)
        .map(|i| SceneItem {
            kind: ItemKind::Pie,
            ellipse,
            astart: sweep * f64::from(i),
            asweep: sweep,
            transform: None,
            style: BTreeMap::new(),
        })
        .collect();
    Scene {
        width: 256.0,
        height: 256.0,
        precision: 6,
        items,
    }
}
