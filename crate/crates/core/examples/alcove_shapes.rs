//! The 120 alcoves of the finite Weyl group of A_4, their planar images
//! and the twelve shape classes.
//!
//! Run with `cargo run --example alcove_shapes`.

use chordcrystal::alcove::{classify, fundamental_alcove, fundamental_image, shape_classes};
use chordcrystal::chordring::odd_ring_g;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let image = fundamental_image(2)?;
    println!("image of the fundamental alcove:");
    for (i, p) in image.iter().enumerate() {
        println!("  x{i} = {p}");
    }

    let sc = shape_classes();
    println!("\n{} alcoves in {} classes", sc.alcoves.len(), sc.classes.len());
    let ring = odd_ring_g(5)?;
    for c in &sc.classes {
        let rep = sc.alcoves[c.members[0]];
        let pts: Vec<String> = rep.image(&ring).iter().map(|p| format!("({:.3}, {:.3})", p.xy()[0], p.xy()[1])).collect();
        println!("{:<3} x{:<3} {}", c.label.to_string(), c.members.len(), pts.join(" "));
    }

    let a0 = fundamental_alcove();
    println!("\nfundamental alcove {a0} is {}", classify(&a0).expect("in the orbit"));
    let moved = a0.reflect(2);
    println!("reflected in face 2: {moved} is {}", classify(&moved).expect("in the orbit"));
    Ok(())
}
