//! Cycle representatives from the Morse flow and dual cochains on the
//! critical top cells, with their pairing matrix.
//!
//! cargo run --release --example cohomology_basis -- 5

use partmorse::construction::build_main_matching;
use partmorse::homology::determinant;
use partmorse::morse::{cohomology_representatives, morse_data, pairing_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let level = build_main_matching(n)?;
    let k = level.complex();
    let top = n - 3;

    let md = morse_data(k, level.matching())?;
    println!("critical counts {:?}", md.critical_counts());
    let cycles: Vec<_> = (0..md.critical(top).len()).map(|i| md.cycle_representative(top, i).clone()).collect();
    let cochains = cohomology_representatives(k, level.matching(), top)?;
    println!(
        "first cycle has {} terms, first cochain {} terms",
        cycles[0].len(),
        cochains[0].len()
    );

    let pairing = pairing_matrix(&cochains, &cycles);
    if pairing.len() <= 8 {
        for row in &pairing {
            println!("  {row:?}");
        }
    }
    println!("det = {}", determinant(&pairing));
    println!("morse boundary into dim {top} zero: {}", md.boundary(top).map_or(true, |b| b.is_zero()));
    Ok(())
}
