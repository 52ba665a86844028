//! Golden Pair tilings: the 25 alcoves under the fundamental triangle, a
//! seeded walk over a larger region, and the exact checks.
//!
//! Run with `cargo run --release --example golden_tiling -- 3 7` (extent,
//! then seed).

use chordcrystal::alcove::{aperiodic_tile, find_tiling25, verify_golden, Region, Walk};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let extent: usize = args.next().map_or(Ok(2), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;

    let base = find_tiling25()?;
    println!(
        "{} alcoves, candidates per cell {:?}, checks passed {}",
        base.alcoves.len(),
        base.candidates,
        base.passed()
    );

    let region = Region::new(extent, &base)?;
    let walk = Walk::seeded(&region, seed)?;
    println!("region of extent {extent}: {} alcoves, walk of {} steps", region.alcoves.len(), walk.steps.len());

    let tiling = aperiodic_tile(&walk, &region)?;
    let check = verify_golden(&tiling);
    println!(
        "{} triangles: {} of the first kind, {} of the second, passed {}",
        check.tiles,
        check.t1,
        check.t2,
        check.passed()
    );

    let other = aperiodic_tile(&Walk::seeded(&region, seed + 1)?, &region)?;
    let differ = tiling.diagonals.iter().zip(&other.diagonals).filter(|(a, b)| a != b).count();
    println!("seed {} splits {differ} quadrilaterals differently", seed + 1);
    Ok(())
}
