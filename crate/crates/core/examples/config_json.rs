//! Load a configuration, run a check and emit a versioned JSON document.
//!
//! Run with `cargo run --example config_json -- path/to/config.toml`.

use chordcrystal::coxeter::check_m;
use chordcrystal::io::{Config, Envelope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = match std::env::args().nth(1) {
        Some(path) => Config::load(path.as_ref())?,
        None => Config::from_toml("closure_cap = 50000\nseed = 3\n")?,
    };
    println!("{cfg:#?}");

    let report = check_m(7)?;
    println!("{}", Envelope::new("coxeter-check", &report).to_json()?);
    Ok(())
}
