//! Build the equivariant acyclic matching on the partition nerve level by
//! level, certify it and optionally dump it.
//!
//! cargo run --release --example main_matching -- 6 [dump.txt]

use partmorse::construction::MatchingTower;
use partmorse::morse::dump_matching;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let dump = args.next();

    let tower = MatchingTower::build(n)?;
    for level in tower.levels() {
        let certs = level.certify()?;
        println!(
            "n = {}: {} cells, {} pairs, critical {:?}, certified {}",
            level.n(),
            level.complex().num_cells(),
            level.matching().len(),
            level.matching().critical_counts(level.complex()),
            certs.all()
        );
    }

    let top = tower.level(n).expect("built");
    let sets = top.sets();
    println!("critical cells of n = {n}:");
    for c in top.matching().critical_cells().iter().take(4) {
        println!("  {}", top.complex().format_cell(*c));
    }
    println!("  … {} in total, expected {}", top.matching().critical_cells().len(), sets.expected_critical().len());

    if let Some(path) = dump {
        std::fs::write(&path, dump_matching(top.complex(), top.matching()))?;
        println!("wrote {path}");
    }
    println!("{}", serde_json::to_string_pretty(&top.report()?)?);
    Ok(())
}
