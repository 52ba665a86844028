//! Search for a derivation of a scaled triangle from a set of generator
//! triangles, using the decomposition recipes.
//!
//! Run with `cargo run --release --example reach`.

use chordcrystal::tiling::{all_triangles, closure_reach, Derivation, Reach, ScaledTriangle, Triangle};

fn print(d: &Derivation, indent: usize) {
    match d {
        Derivation::Leaf(t) => println!("{:indent$}{t}", ""),
        Derivation::Node { target, method, parts, .. } => {
            println!("{:indent$}{target} by {}", "", method.name());
            for p in parts {
                print(p, indent + 2);
            }
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gens = vec![Triangle::indexed(5, 1)?, Triangle::indexed(5, 2)?];
    let target = ScaledTriangle::chord_scaled(Triangle::indexed(5, 1)?, 1)?;
    match closure_reach(&target, &gens, 6, &[]) {
        Reach::Derived(d) => print(&d, 0),
        other => println!("{target}: {other:?}"),
    }

    let t333 = Triangle::new(9, [3, 3, 3])?;
    let target = ScaledTriangle::chord_scaled(t333, 2)?;
    let all9 = all_triangles(9);
    for exclude in [&[][..], &["nine"][..]] {
        let r = closure_reach(&target, &all9, 4, exclude);
        let how = match &r {
            Reach::Derived(d) => format!("derived, first step {:?}", d.root_method()),
            Reach::Unreachable { exhausted } => format!("not derived (search exhausted: {exhausted})"),
        };
        println!("{target} without {exclude:?}: {how}");
    }
    Ok(())
}
