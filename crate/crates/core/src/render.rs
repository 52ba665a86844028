//! SVG scenes for root diagrams, weight zig-zags, alcove shapes and Golden
//! Pair tilings. Output is byte-stable: coordinates are written with six
//! decimals and elements in a fixed order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alcove::{
    fundamental_image, shape_classes, AlcoveError, Frame, GoldenKind, GoldenTiling, PlanarPoint,
};
use crate::chordring::odd_ring_g;
use crate::coxeter::{roots_odd, CoxeterError};

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Alcove(#[from] AlcoveError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Target {
    RootDiagram { m: usize },
    WeightDiagram { n: usize },
    Tiling,
    AlcoveShapes,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Palette {
    pub background: String,
    pub stroke: String,
    pub node: String,
    /// Fill colours, cycled by polygon class.
    pub fills: Vec<String>,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            background: "#ffffff".into(),
            stroke: "#222222".into(),
            node: "#1f4e9c".into(),
            fills: vec!["#f2c14e".into(), "#5b8e7d".into(), "#d9d2c5".into(), "#c8553d".into()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub target: Target,
    /// Pixels per unit length.
    pub scale: f64,
    pub palette: Palette,
}

impl RenderSpec {
    pub fn new(target: Target) -> RenderSpec {
        RenderSpec {
            target,
            scale: 60.0,
            palette: Palette::default(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Polygon {
    pub points: Vec<[f64; 2]>,
    /// Index into the palette fills.
    pub class: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Node {
    pub at: [f64; 2],
    pub label: Option<String>,
}

/// What gets drawn, in plane coordinates with y pointing up.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Scene {
    pub polygons: Vec<Polygon>,
    /// Open polylines.
    pub paths: Vec<Vec<[f64; 2]>>,
    pub nodes: Vec<Node>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}

fn check_finite(p: &[f64; 2]) -> Result<(), RenderError> {
    if p[0].is_finite() && p[1].is_finite() {
        Ok(())
    } else {
        Err(RenderError::Malformed(format!("non-finite point {p:?}")))
    }
}

/// Write the scene as an SVG document.
pub fn render_svg(spec: &RenderSpec, scene: &Scene) -> Result<String, RenderError> {
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(RenderError::Malformed(format!("scale {}", spec.scale)));
    }
    let mut pts: Vec<[f64; 2]> = Vec::new();
    for p in &scene.polygons {
        if p.points.len() < 3 {
            return Err(RenderError::Malformed("polygon with fewer than 3 points".into()));
        }
        pts.extend(&p.points);
    }
    for p in &scene.paths {
        pts.extend(p);
    }
    pts.extend(scene.nodes.iter().map(|n| n.at));
    for p in &pts {
        check_finite(p)?;
    }
    let (mut lo, mut hi) = ([0.0f64, 0.0], [0.0f64, 0.0]);
    if let Some(first) = pts.first() {
        lo = *first;
        hi = *first;
    }
    for p in &pts {
        lo = [lo[0].min(p[0]), lo[1].min(p[1])];
        hi = [hi[0].max(p[0]), hi[1].max(p[1])];
    }
    let s = spec.scale;
    let margin = 20.0;
    let width = (hi[0] - lo[0]) * s + 2.0 * margin;
    let height = (hi[1] - lo[1]) * s + 2.0 * margin;
    let tx = |p: &[f64; 2]| -> String {
        format!(
            "{},{}",
            num((p[0] - lo[0]) * s + margin),
            num((hi[1] - p[1]) * s + margin)
        )
    };
    let pal = &spec.palette;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="{}"/>"#, pal.background);
    let _ = writeln!(out, r#"<g id="polygons" stroke="{}" stroke-width="1">"#, pal.stroke);
    for p in &scene.polygons {
        let fill = if pal.fills.is_empty() {
            "none"
        } else {
            pal.fills[p.class % pal.fills.len()].as_str()
        };
        let ps: Vec<String> = p.points.iter().map(tx).collect();
        let _ = writeln!(out, r#"<polygon class="c{}" points="{}" fill="{}"/>"#, p.class, ps.join(" "), fill);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="paths" stroke="{}" stroke-width="1" fill="none">"#, pal.stroke);
    for p in &scene.paths {
        let ps: Vec<String> = p.iter().map(tx).collect();
        let _ = writeln!(out, r#"<polyline points="{}"/>"#, ps.join(" "));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="nodes" fill="{}">"#, pal.node);
    for n in &scene.nodes {
        let xy = tx(&n.at);
        let (x, y) = xy.split_once(',').expect("pair");
        let _ = writeln!(out, r#"<circle class="node" cx="{x}" cy="{y}" r="3"/>"#);
        if let Some(l) = &n.label {
            let _ = writeln!(out, r#"<text x="{x}" y="{y}" dx="4" dy="-4" font-size="10">{}</text>"#, escape(l));
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Roots of odd m as nodes; each set of equal-length roots is joined into a
/// closed ring in angular order.
pub fn root_diagram(m: usize) -> Result<Scene, RenderError> {
    let roots = roots_odd(m)?;
    let ring = odd_ring_g(m).map_err(CoxeterError::from)?;
    let n = ring.rank();
    let pts: Vec<PlanarPoint> = roots
        .iter()
        .map(|v| {
            PlanarPoint::new(
                Frame::Root,
                ring.elem(v[..n].to_vec()).expect("arity"),
                ring.elem(v[n..].to_vec()).expect("arity"),
            )
        })
        .collect();
    let mut layers: BTreeMap<Vec<i64>, Vec<[f64; 2]>> = BTreeMap::new();
    for p in &pts {
        layers.entry(p.norm2().coords().to_vec()).or_default().push(p.xy());
    }
    let mut scene = Scene::default();
    for layer in layers.values() {
        let mut ring_pts = layer.clone();
        ring_pts.sort_by(|a, b| a[1].atan2(a[0]).partial_cmp(&b[1].atan2(b[0])).expect("finite"));
        ring_pts.push(ring_pts[0]);
        scene.paths.push(ring_pts);
    }
    scene.nodes = pts.iter().map(|p| Node { at: p.xy(), label: None }).collect();
    Ok(scene)
}

/// The zig-zag through `x_0, ..., x_{2n+1}` and the image of the
/// fundamental alcove.
pub fn weight_diagram(n: usize) -> Result<Scene, RenderError> {
    let x = fundamental_image(n)?;
    let mut scene = Scene::default();
    let hull = [x[0].xy(), x[n].xy(), x[n + 1].xy()];
    scene.polygons.push(Polygon {
        points: hull.to_vec(),
        class: 2,
    });
    scene.paths.push(x.iter().map(PlanarPoint::xy).collect());
    scene.nodes = x[..=2 * n]
        .iter()
        .enumerate()
        .map(|(i, p)| Node {
            at: p.xy(),
            label: Some(format!("x{i}")),
        })
        .collect();
    Ok(scene)
}

fn convex_order(mut pts: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    let c = pts.iter().fold([0.0, 0.0], |a, p| [a[0] + p[0], a[1] + p[1]]);
    let c = [c[0] / pts.len() as f64, c[1] / pts.len() as f64];
    pts.sort_by(|a, b| {
        (a[1] - c[1])
            .atan2(a[0] - c[0])
            .partial_cmp(&(b[1] - c[1]).atan2(b[0] - c[0]))
            .expect("finite")
    });
    pts
}

/// One representative of each of the twelve classes, laid out in a row of
/// cells, with the origin of each marked by its label.
pub fn alcove_shapes() -> Scene {
    let sc = shape_classes();
    let ring = odd_ring_g(5).expect("m = 5");
    let mut scene = Scene::default();
    for (i, class) in sc.classes.iter().enumerate() {
        let a = sc.alcoves[class.members[0]];
        let img = a.image(&ring);
        let off = [(i % 6) as f64 * 4.0, -((i / 6) as f64) * 4.0];
        let shift = |p: [f64; 2]| [p[0] + off[0], p[1] + off[1]];
        let pts: Vec<[f64; 2]> = img.iter().map(|p| shift(p.xy())).collect();
        // side points of triangles lie on hull edges and are kept in order
        scene.polygons.push(Polygon {
            points: convex_order(pts.clone()),
            class: class.label.kind as usize,
        });
        scene.nodes.extend(pts.iter().enumerate().map(|(k, p)| Node {
            at: *p,
            label: (k == 0).then(|| class.label.to_string()),
        }));
    }
    scene
}

/// Each Golden Pair triangle as a polygon, coloured by kind.
pub fn tiling_scene(t: &GoldenTiling) -> Scene {
    Scene {
        polygons: t
            .tiles
            .iter()
            .map(|tile| Polygon {
                points: tile.verts.iter().map(PlanarPoint::xy).collect(),
                class: match tile.kind {
                    GoldenKind::T1 => 0,
                    GoldenKind::T2 => 1,
                },
            })
            .collect(),
        paths: Vec::new(),
        nodes: Vec::new(),
    }
}

/// Count `<polygon` and `<circle` elements, for checks on rendered output.
pub fn count_elements(svg: &str) -> (usize, usize) {
    (svg.matches("<polygon ").count(), svg.matches("<circle ").count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scene_is_a_document() {
        let svg = render_svg(&RenderSpec::new(Target::Tiling), &Scene::default()).unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(count_elements(&svg), (0, 0));
    }

    #[test]
    fn pentagon_roots() {
        let scene = root_diagram(5).unwrap();
        assert_eq!(scene.nodes.len(), 20);
        assert_eq!(scene.paths.len(), 2);
        let svg = render_svg(&RenderSpec::new(Target::RootDiagram { m: 5 }), &scene).unwrap();
        assert_eq!(count_elements(&svg).1, 20);
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(num(-0.0000001), "0.000000");
        assert_eq!(num(-1.5), "-1.500000");
    }
}
