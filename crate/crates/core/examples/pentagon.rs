//! The golden crystal: membership inequalities, normal forms, transport to
//! the opposite sequence and the full check suite.
//!
//! Run with `cargo run --release --example pentagon -- 8`.

use chordcrystal::pentagon::{crystal_j, is_member, normal_form, transport, verify_suite, GoldenOp, ALPHA, BETA};
use chordcrystal::crystal::CrystalElt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let depth: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;

    let c = crystal_j();
    let b = c.f(&c.f(&c.f(&CrystalElt::highest(), ALPHA, 0)?, BETA, 1)?, ALPHA, 1)?;
    let (ok, params) = is_member(&b);
    println!("b = {b:?}\nmember: {ok}, parameters {params:?}");
    for op in GoldenOp::ALL {
        let (r, i) = op.index();
        println!("  e_{{{}}} kills b: {}", op.name(), c.e(&b, r, i).is_none());
    }
    println!("normal form: {:?}", normal_form(&b)?);
    println!("transported: {:?}", transport(&b)?);

    let r = verify_suite(depth)?;
    println!("\ndegree  closure  inequalities");
    for row in &r.layers {
        println!("{:>6}  {:>7}  {:>12}", row.degree, row.closure, row.members);
    }
    println!(
        "membership {}, annihilation mismatches {}, character mismatches {}, transport mismatches {}",
        r.membership, r.annihilation_mismatches, r.character_mismatches, r.transport_mismatches
    );
    Ok(())
}
