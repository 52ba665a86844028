//! Compare the module-valued crystal with the classical crystal of type
//! A_2n through the basis dictionary.
//!
//! Run with `cargo run --release --example bridge -- 2 5` (n, then depth).

use chordcrystal::bridge::{intertwine_check, kostant_a};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(2), |s| s.parse())?;
    let depth: usize = args.next().map_or(Ok(5), |s| s.parse())?;

    let r = intertwine_check(n, depth)?;
    println!("n = {n}, depth {depth}");
    println!("module elements      {}", r.module_elements);
    println!("operator comparisons {}", r.operator_checks);
    println!("mismatches           {}", r.mismatches.len());
    println!("module layers        {:?}", r.module_layers);
    println!("classical layers     {:?}", r.classical_layers);
    println!("Kostant layers       {:?}", r.kostant_layers);
    println!("passed               {}", r.passed());

    // the highest root of A_4 can be written as a sum of positive roots in 8 ways
    println!("\nKostant count at (1,1,1,1): {}", kostant_a(&[1, 1, 1, 1]));
    Ok(())
}
