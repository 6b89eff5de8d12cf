//! Integral homology of the partition nerve and of orbit complexes, by Smith
//! normal form.
//!
//! cargo run --release --example homology -- 5

use partmorse::complex::{CellComplex, PartitionComplex};
use partmorse::homology::{ChainComplex, HomologyResult};
use partmorse::perm::{PermGroup, QuotientComplex};

fn show(name: &str, h: &HomologyResult) {
    let parts: Vec<String> = h
        .groups()
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(d, g)| format!("H~{d} = Z^{} torsion {:?}", g.betti, g.torsion))
        .collect();
    println!("{name}: {}", if parts.is_empty() { "acyclic".into() } else { parts.join(", ") });
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let k = PartitionComplex::partition_nerve(n)?;
    show("nerve", &ChainComplex::of(&k).reduced_homology());

    for (name, g) in [
        ("stabilizer of 1", PermGroup::point_stabilizer(n)),
        ("symmetric group", PermGroup::symmetric(n)),
        ("cyclic group", PermGroup::cyclic(n)),
    ] {
        let q = QuotientComplex::new(&k, &g)?;
        show(&format!("{name} quotient ({} cells)", q.cell_count()), &ChainComplex::of(&q).reduced_homology());
    }
    Ok(())
}
