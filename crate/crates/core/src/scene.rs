//! Declarative scene documents: JSON in, validated [`Scene`] out.
//!
//! ```json
//! {
//!   "width": 200, "height": 100, "precision": 6,
//!   "items": [
//!     {"kind": "ellipse", "C": [50, 50], "P": [90, 50], "Q": [50, 30]},
//!     {"kind": "pie", "C": [150, 50], "P": [190, 50], "Q": [150, 10],
//!      "astart": 0, "asweep": 1.5707963267948966,
//!      "transform": [1, 0, 0, 1, 0, 0], "style": {"fill": "#4477aa"}}
//!   ]
//! }
//! ```
//!
//! `transform` uses the SVG matrix entry order `[m11, m21, m12, m22, tx, ty]`
//! and is applied to the item's defining points before lowering; start/sweep
//! angles are never altered by a transform.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{AffineMap2, ConjugateEllipse, Point2};

/// What an item draws: a closed ellipse, an open arc, or a pie slice (arc plus
/// straight edges to the center).
#[derive(Clone, Copy, Debug, Eq, PartialEq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemKind {
    Ellipse,
    Arc,
    Pie,
}

/// A validated scene item. For `kind = ellipse` the angles are unused and held
/// at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SceneItem {
    pub kind: ItemKind,
    pub ellipse: ConjugateEllipse,
    pub astart: f64,
    pub asweep: f64,
    pub transform: Option<AffineMap2>,
    pub style: BTreeMap<String, String>,
}

/// A validated scene: viewport, coordinate output precision, and items in
/// drawing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub width: f64,
    pub height: f64,
    pub precision: u32,
    pub items: Vec<SceneItem>,
}

pub const DEFAULT_PRECISION: u32 = 6;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    width: f64,
    height: f64,
    #[serde(default)]
    precision: Option<i64>,
    items: Vec<RawItem>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawItem {
    kind: ItemKind,
    #[serde(rename = "C")]
    c: [f64; 2],
    #[serde(rename = "P")]
    p: [f64; 2],
    #[serde(rename = "Q")]
    q: [f64; 2],
    #[serde(default)]
    astart: Option<f64>,
    #[serde(default)]
    asweep: Option<f64>,
    #[serde(default)]
    transform: Option<[f64; 6]>,
    #[serde(default)]
    style: Option<BTreeMap<String, String>>,
}

/// Parses and validates a UTF-8 JSON scene document, with output precision
/// defaulting to [`DEFAULT_PRECISION`] when the document does not set it.
pub fn parse_scene(text: &[u8]) -> Result<Scene> {
    parse_scene_with_default_precision(text, DEFAULT_PRECISION)
}

/// [`parse_scene`] with a caller-supplied default precision (still overridden
/// by an explicit `"precision"` field in the document).
pub fn parse_scene_with_default_precision(text: &[u8], default_precision: u32) -> Result<Scene> {
    let raw: RawScene = serde_json::from_slice(text).map_err(|e| {
        if e.is_data() {
            // Schema-level problem (unknown/missing field, wrong type); the
            // serde message names the field and position.
            Error::Validation(e.to_string())
        } else {
            Error::Parse(e)
        }
    })?;

    if !(raw.width.is_finite() && raw.width > 0.0) {
        return Err(Error::Validation(format!(
            "\"width\" must be a positive finite number, got {}",
            raw.width
        )));
    }
    if !(raw.height.is_finite() && raw.height > 0.0) {
        return Err(Error::Validation(format!(
            "\"height\" must be a positive finite number, got {}",
            raw.height
        )));
    }
    let precision = match raw.precision {
        None => default_precision,
        Some(p) if (1..=12).contains(&p) => p as u32,
        Some(p) => {
            return Err(Error::Validation(format!(
                "\"precision\" must be an integer in 1..=12, got {p}"
            )))
        }
    };
    if !(1..=12).contains(&precision) {
        return Err(Error::Validation(format!(
            "default precision must be in 1..=12, got {precision}"
        )));
    }

    let items = raw
        .items
        .into_iter()
        .enumerate()
        .map(|(i, item)| validate_item(i, item))
        .collect::<Result<Vec<_>>>()?;

    Ok(Scene {
        width: raw.width,
        height: raw.height,
        precision,
        items,
    })
}

fn point_from(i: usize, name: &str, xy: [f64; 2]) -> Result<Point2> {
    if !(xy[0].is_finite() && xy[1].is_finite()) {
        return Err(Error::Validation(format!(
            "items[{i}].{name} must have finite coordinates"
        )));
    }
    Ok(Point2::new(xy[0], xy[1]))
}

fn angle_from(i: usize, kind: &str, name: &str, value: Option<f64>) -> Result<f64> {
    let v = value.ok_or_else(|| {
        Error::Validation(format!("items[{i}] with kind \"{kind}\" requires \"{name}\""))
    })?;
    if !v.is_finite() {
        return Err(Error::Validation(format!(
            "items[{i}].{name} must be finite"
        )));
    }
    Ok(v)
}

fn valid_style_key(key: &str) -> bool {
    let mut chars = key.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
}

fn validate_item(i: usize, raw: RawItem) -> Result<SceneItem> {
    let ellipse = ConjugateEllipse {
        c: point_from(i, "C", raw.c)?,
        p: point_from(i, "P", raw.p)?,
        q: point_from(i, "Q", raw.q)?,
    };

    let (astart, asweep) = match raw.kind {
        ItemKind::Ellipse => (0.0, 0.0),
        ItemKind::Arc => (
            angle_from(i, "arc", "astart", raw.astart)?,
            angle_from(i, "arc", "asweep", raw.asweep)?,
        ),
        ItemKind::Pie => (
            angle_from(i, "pie", "astart", raw.astart)?,
            angle_from(i, "pie", "asweep", raw.asweep)?,
        ),
    };

    let transform = match raw.transform {
        None => None,
        Some(m) => {
            if m.iter().any(|v| !v.is_finite()) {
                return Err(Error::Validation(format!(
                    "items[{i}].transform must have six finite entries"
                )));
            }
            Some(AffineMap2::from_svg_matrix(m))
        }
    };

    let style = raw.style.unwrap_or_default();
    for key in style.keys() {
        if !valid_style_key(key) {
            return Err(Error::Validation(format!(
                "items[{i}].style key {key:?} is not a valid attribute name"
            )));
        }
    }

    Ok(SceneItem {
        kind: raw.kind,
        ellipse,
        astart,
        asweep,
        transform,
        style,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let scene = parse_scene(br#"{"width":100,"height":100,"items":[]}"#).unwrap();
        assert_eq!(scene.width, 100.0);
        assert_eq!(scene.height, 100.0);
        assert_eq!(scene.precision, DEFAULT_PRECISION);
        assert!(scene.items.is_empty());
    }

    #[test]
    fn ellipse_item_is_perpendicular_pair() {
        let scene = parse_scene(
            br#"{"width":100,"height":100,"items":[
                {"kind":"ellipse","C":[50,50],"P":[90,50],"Q":[50,30]}]}"#,
        )
        .unwrap();
        let e = scene.items[0].ellipse;
        assert_eq!(e.c, Point2::new(50.0, 50.0));
        // Semi-axes 40 and 20, axis-aligned.
        assert_eq!((e.p - e.c).norm(), 40.0);
        assert_eq!((e.q - e.c).norm(), 20.0);
        let dot = (e.p - e.c).x * (e.q - e.c).x + (e.p - e.c).y * (e.q - e.c).y;
        assert_eq!(dot, 0.0);
    }

    #[test]
    fn transform_and_style_roundtrip() {
        let scene = parse_scene(
            br#"{"width":10,"height":10,"precision":3,"items":[
                {"kind":"arc","C":[0,0],"P":[1,0],"Q":[0,1],
                 "astart":0.5,"asweep":-1.25,
                 "transform":[0.5,0,0,1,0,0],
                 "style":{"stroke":"black","fill":"none"}}]}"#,
        )
        .unwrap();
        assert_eq!(scene.precision, 3);
        let item = &scene.items[0];
        assert_eq!(item.astart, 0.5);
        assert_eq!(item.asweep, -1.25);
        let t = item.transform.unwrap();
        assert_eq!(t.apply(Point2::new(1.0, 0.0)), Point2::new(0.5, 0.0));
        assert_eq!(item.style["stroke"], "black");
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_scene(b"{\"width\": 100,\n\"height\": }").unwrap_err();
        match err {
            Error::Parse(e) => {
                let msg = e.to_string();
                assert!(msg.contains("line 2"), "message was {msg:?}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_field_names_the_field() {
        let err = parse_scene(
            br#"{"width":100,"height":100,"items":[],"wdith":3}"#,
        )
        .unwrap_err();
        match err {
            Error::Validation(msg) => assert!(msg.contains("wdith"), "message was {msg:?}"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn missing_angles_name_item_and_field() {
        let err = parse_scene(
            br#"{"width":100,"height":100,"items":[
                {"kind":"pie","C":[0,0],"P":[1,0],"Q":[0,1],"astart":0}]}"#,
        )
        .unwrap_err();
        match err {
            Error::Validation(msg) => {
                assert!(msg.contains("items[0]"), "message was {msg:?}");
                assert!(msg.contains("asweep"), "message was {msg:?}");
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn ellipse_ignores_angles() {
        let scene = parse_scene(
            br#"{"width":100,"height":100,"items":[
                {"kind":"ellipse","C":[0,0],"P":[1,0],"Q":[0,1],"astart":9,"asweep":9}]}"#,
        )
        .unwrap();
        assert_eq!(scene.items[0].astart, 0.0);
        assert_eq!(scene.items[0].asweep, 0.0);
    }

    #[test]
    fn non_finite_numbers_rejected() {
        // JSON has no literal infinity, but oversized numbers parse to a
        // serde error and huge exponents overflow to infinity.
        let err = parse_scene(
            br#"{"width":1e400,"height":100,"items":[]}"#,
        );
        assert!(err.is_err());
        let err = parse_scene(br#"{"width":0,"height":100,"items":[]}"#).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn unknown_kind_rejected() {
        let err = parse_scene(
            br#"{"width":100,"height":100,"items":[
                {"kind":"wedge","C":[0,0],"P":[1,0],"Q":[0,1]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn bad_precision_rejected() {
        for doc in [
            br#"{"width":1,"height":1,"precision":0,"items":[]}"#.as_slice(),
            br#"{"width":1,"height":1,"precision":13,"items":[]}"#.as_slice(),
            br#"{"width":1,"height":1,"precision":-2,"items":[]}"#.as_slice(),
        ] {
            assert!(matches!(parse_scene(doc), Err(Error::Validation(_))));
        }
    }

    #[test]
    fn bad_style_key_rejected() {
        let err = parse_scene(
            br#"{"width":1,"height":1,"items":[
                {"kind":"ellipse","C":[0,0],"P":[1,0],"Q":[0,1],
                 "style":{"bad key":"x"}}]}"#,
        )
        .unwrap_err();
        match err {
            Error::Validation(msg) => assert!(msg.contains("bad key"), "message was {msg:?}"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }
}
