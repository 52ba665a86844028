//! Decompose chord-scaled triangles of the m-gon into smaller triangles
//! and check the pieces exactly.
//!
//! Run with `cargo run --example tiling`.

use chordcrystal::tiling::{decompose, product_identity_holds, verify, Method, ScaledTriangle, Triangle};

fn show(whole: &ScaledTriangle, method: Method) -> Result<(), Box<dyn std::error::Error>> {
    let d = decompose(whole, method)?;
    let r = verify(&d);
    let parts: Vec<String> = d.part_triangles().iter().map(|t| t.to_string()).collect();
    println!("{whole} by {}: {} pieces, passed {}", method.name(), parts.len(), r.passed());
    println!("  {}", parts.join(" "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let golden_a = Triangle::new(5, [1, 2, 2])?;
    let golden_b = Triangle::new(5, [1, 1, 3])?;
    show(&ScaledTriangle::chord_scaled(golden_a, 1)?, Method::Pair { rotation: 0, t: 1 })?;
    show(&ScaledTriangle::chord_scaled(golden_b, 2)?, Method::Pair { rotation: 0, t: 2 })?;

    let t333 = Triangle::new(9, [3, 3, 3])?;
    show(&ScaledTriangle::chord_scaled(t333, 2)?, Method::Nine { rotation: 0 })?;
    show(&ScaledTriangle::chord_scaled(Triangle::new(11, [3, 4, 4])?, 2)?, Method::Pt { rotation: 0, t: 2 })?;

    let unit = ScaledTriangle::unit(golden_a)?;
    let three = ScaledTriangle::new(golden_a, unit.scale.scale(3));
    show(&three, Method::Square { rotation: 0, n: 3 })?;

    for m in 3..=9 {
        println!("chord product identity for m = {m}: {}", product_identity_holds(m)?);
    }
    Ok(())
}
