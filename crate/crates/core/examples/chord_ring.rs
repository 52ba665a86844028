//! Exact arithmetic with the chord lengths of a regular polygon.
//!
//! Run with `cargo run --example chord_ring -- 7`.

use chordcrystal::chordring::{chord_in, chord_ring, BasisKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let ring = chord_ring(m)?;
    println!("{}", ring.describe());

    let chords: Vec<_> = (0..m - 1).map(|i| chord_in(&ring, i)).collect();
    for (i, c) in chords.iter().enumerate() {
        println!("p{i} = {c:<12} {:.6}", c.eval_f64());
    }

    // products of chords are again integer combinations of chords
    let prod = &chords[1] * &chords[2];
    println!("\np1 * p2 = {prod}  ({:.6})", prod.eval_f64());

    let power = ring.rebased(BasisKind::Power);
    println!("same ring in the power basis: {}", power.describe());
    println!("p1 * p2 = {}", prod.convert(&power)?);
    Ok(())
}
