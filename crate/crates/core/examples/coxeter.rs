//! Augmented Weyl groups: closure orders, Coxeter relations, the golden
//! roots and the dodecahedron scalar products.
//!
//! Run with `cargo run --release --example coxeter`.

use chordcrystal::coxeter::{check_m, dodeca_check, golden_action_table, golden_label, root_orbit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in [5, 6, 7, 8, 10] {
        let r = check_m(m)?;
        println!(
            "m = {m:>2}: type {:<3} order {:>5} (expected {:>5}) relations {}",
            r.target, r.order, r.expected_order, r.relations_hold
        );
    }

    let roots = root_orbit(5)?;
    println!(
        "\n{} roots for m = 5, W-orbits {:?}, augmented orbits {:?}",
        roots.count, roots.w_orbit_sizes, roots.wa_orbit_sizes
    );
    for row in golden_action_table() {
        let fixed: Vec<String> = row.fixed.iter().map(|v| golden_label(v)).collect();
        println!("{} fixes {}", row.generator, fixed.join(", "));
    }

    println!();
    for (name, ok) in dodeca_check().checks {
        println!("{name}: {ok}");
    }
    Ok(())
}
