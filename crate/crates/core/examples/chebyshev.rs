//! The four Chebyshev families, their identity suite and irreducibility.
//!
//! Run with `cargo run --example chebyshev`.

use chordcrystal::chordring::{cheb, factor, identity_suite, is_irreducible, ChebKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [ChebKind::Chord, ChebKind::Classical, ChebKind::OddModulus, ChebKind::EvenModulus] {
        println!("{}_5 = {}", kind.short_name(), cheb(kind, 5)?);
    }

    let checks = identity_suite(20);
    let failed = checks.iter().filter(|c| !c.holds).count();
    println!("\n{} identity instances up to n = 20, {failed} failed", checks.len());

    println!("\n n  Q_n irreducible  S_n irreducible");
    for n in 1..=12 {
        let q = is_irreducible(&cheb(ChebKind::OddModulus, n)?)?;
        let s = is_irreducible(&cheb(ChebKind::EvenModulus, n)?)?;
        println!("{n:>2}  {q:<15}  {s}");
    }

    let parts = factor(&cheb(ChebKind::OddModulus, 7)?)?;
    println!("\nQ_7 factors as:");
    for p in parts {
        println!("  {p}");
    }
    Ok(())
}
