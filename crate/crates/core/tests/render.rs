use chordcrystal::alcove::{aperiodic_tile, find_tiling25, Region, Walk};
use chordcrystal::render::{
    alcove_shapes, count_elements, render_svg, root_diagram, tiling_scene, weight_diagram, Polygon, RenderError,
    RenderSpec, Scene, Target,
};

fn golden(name: &str, svg: &str) {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, svg).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert!(want == svg, "{name} differs from the frozen copy");
}

#[test]
fn pentagon_root_diagram_is_stable() {
    let spec = RenderSpec::new(Target::RootDiagram { m: 5 });
    let svg = render_svg(&spec, &root_diagram(5).unwrap()).unwrap();
    assert_eq!(count_elements(&svg), (0, 20));
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert_eq!(svg, render_svg(&spec, &root_diagram(5).unwrap()).unwrap());
    golden("roots5.svg", &svg);
}

#[test]
fn weight_and_shape_pictures_are_stable() {
    let svg = render_svg(&RenderSpec::new(Target::WeightDiagram { n: 2 }), &weight_diagram(2).unwrap()).unwrap();
    assert_eq!(count_elements(&svg), (1, 5));
    golden("weights2.svg", &svg);
    let svg = render_svg(&RenderSpec::new(Target::AlcoveShapes), &alcove_shapes()).unwrap();
    assert_eq!(count_elements(&svg), (12, 60));
    golden("shapes.svg", &svg);
}

#[test]
fn fundamental_tiling_has_75_polygons() {
    let base = find_tiling25().unwrap();
    let region = Region::new(1, &base).unwrap();
    let t = aperiodic_tile(&Walk::seeded(&region, 1).unwrap(), &region).unwrap();
    let mut spec = RenderSpec::new(Target::Tiling);
    spec.scale = 20.0;
    let svg = render_svg(&spec, &tiling_scene(&t)).unwrap();
    assert_eq!(count_elements(&svg), (75, 0));
    golden("tiling_e1_s1.svg", &svg);
}

#[test]
fn malformed_input_is_rejected() {
    let bad = Scene {
        polygons: vec![Polygon {
            points: vec![[0.0, 0.0], [1.0, f64::NAN], [0.0, 1.0]],
            class: 0,
        }],
        ..Scene::default()
    };
    assert!(matches!(render_svg(&RenderSpec::new(Target::Tiling), &bad), Err(RenderError::Malformed(_))));
    let mut spec = RenderSpec::new(Target::Tiling);
    spec.scale = 0.0;
    assert!(render_svg(&spec, &Scene::default()).is_err());
    assert!(root_diagram(6).is_err());
}

#[test]
fn spec_round_trips_through_json() {
    let spec = RenderSpec::new(Target::RootDiagram { m: 7 });
    let text = serde_json::to_string(&spec).unwrap();
    assert!(text.contains(r#""kind":"root-diagram""#));
    let back: RenderSpec = serde_json::from_str(&text).unwrap();
    assert_eq!(back, spec);
}
