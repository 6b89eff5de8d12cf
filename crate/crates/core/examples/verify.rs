//! Run the built-in battery of checks for one value of n.
//!
//! cargo run --release --example verify -- 6

use partmorse::verify::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let checks = verify(n)?;
    for c in &checks {
        println!("{} {:<20} {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    if checks.iter().any(|c| !c.passed) {
        std::process::exit(1);
    }
    Ok(())
}
