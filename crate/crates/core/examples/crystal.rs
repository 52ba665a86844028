//! Lowering operators on the rank-two module-valued crystal for odd m.
//!
//! Run with `cargo run --example crystal -- 7 5` (m, then depth).

use chordcrystal::crystal::{odd_spec, Crystal, CrystalElt, JSeq};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(Ok(7), |s| s.parse())?;
    let depth: usize = args.next().map_or(Ok(5), |s| s.parse())?;

    let spec = odd_spec(m)?;
    let c = Crystal::new(spec.clone(), JSeq::Periodic(vec![0, 1]));
    println!("roots {:?}, {} operators per root", spec.roots(), spec.rank());

    // one explicit path from the highest element
    let mut b = CrystalElt::highest();
    for (root, comp) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        b = c.f(&b, root, comp)?;
        println!("f_({root},{comp}) -> {b:?}  weight {:?}", c.weight(&b));
    }

    let cl = c.closure(depth)?;
    for (d, layer) in cl.layers.iter().enumerate() {
        println!("degree {d}: {} elements", layer.len());
    }
    Ok(())
}
