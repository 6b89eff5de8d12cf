//! Generate permutation groups from cycle notation and compute orbits on set
//! partitions and on chains.
//!
//! cargo run --example permutation_groups -- 5 "(2 3),(2 3 4 5)"

use partmorse::complex::PartitionComplex;
use partmorse::perm::{orbits_and_stabilizers, parse_generators, PermGroup};
use partmorse::setpart::enumerate_proper;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let gens = args.next().unwrap_or_else(|| "(1 2 3 4)".into());

    let group = PermGroup::generate(n, &parse_generators(n, &gens)?)?;
    println!("<{gens}> has order {}, fixes 1: {}", group.order(), group.fixes_point(1));
    let g = &group.generators()[0];
    println!("{g} squared is {}, inverse {}", g.compose(g), g.inverse());

    let parts = enumerate_proper(n)?;
    let orbits = orbits_and_stabilizers(&group, &parts, |h, p| h.act_partition(p).unwrap());
    println!("{} orbits on {} proper partitions", orbits.len(), parts.len());
    for o in orbits.iter().take(5) {
        println!("  {} (size {}, stabilizer {})", o.members[0], o.members.len(), o.stabilizer_order);
    }

    let k = PartitionComplex::partition_nerve(n)?;
    let (orbit_of, reps) = k.cell_action(&group)?.orbits(k.num_cells());
    println!("{} chains fall into {} orbits", orbit_of.len(), reps.len());
    Ok(())
}
