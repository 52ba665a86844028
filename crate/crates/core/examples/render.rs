//! Write SVG pictures of the pentagon roots, a weight zig-zag, the alcove
//! shapes and a Golden Pair tiling into a directory.
//!
//! Run with `cargo run --release --example render -- out/`.

use std::path::PathBuf;

use chordcrystal::alcove::{aperiodic_tile, find_tiling25, Region, Walk};
use chordcrystal::render::{
    alcove_shapes, count_elements, render_svg, root_diagram, tiling_scene, weight_diagram, RenderSpec, Target,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "render-out".into()));
    std::fs::create_dir_all(&dir)?;

    let base = find_tiling25()?;
    let region = Region::new(2, &base)?;
    let tiling = aperiodic_tile(&Walk::seeded(&region, 1)?, &region)?;

    let jobs = [
        ("roots5.svg", Target::RootDiagram { m: 5 }, root_diagram(5)?),
        ("roots7.svg", Target::RootDiagram { m: 7 }, root_diagram(7)?),
        ("weights3.svg", Target::WeightDiagram { n: 3 }, weight_diagram(3)?),
        ("shapes.svg", Target::AlcoveShapes, alcove_shapes()),
        ("tiling.svg", Target::Tiling, tiling_scene(&tiling)),
    ];
    for (name, target, scene) in jobs {
        let mut spec = RenderSpec::new(target);
        if name == "tiling.svg" {
            spec.scale = 12.0;
        }
        let svg = render_svg(&spec, &scene)?;
        let (polygons, nodes) = count_elements(&svg);
        std::fs::write(dir.join(name), &svg)?;
        println!("{name}: {polygons} polygons, {nodes} nodes");
    }
    Ok(())
}
