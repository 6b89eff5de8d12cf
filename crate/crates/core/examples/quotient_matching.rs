//! Push the main matching down to orbit complexes of subgroups fixing 1 and
//! read off the critical orbits.
//!
//! cargo run --example quotient_matching -- 5

use partmorse::complex::CellComplex;
use partmorse::construction::{build_main_matching, number_partition_label, number_partition_label_of, quotient_main_matching};
use partmorse::perm::{parse_generators, PermGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let level = build_main_matching(n)?;

    let groups = [
        ("trivial", PermGroup::trivial(n)),
        ("<(2 3)>", PermGroup::generate(n, &parse_generators(n, "(2 3)")?)?),
        ("stabilizer of 1", PermGroup::point_stabilizer(n)),
    ];
    for (name, g) in &groups {
        let (q, m) = quotient_main_matching(&level, g)?;
        let crit = m.critical_cells();
        println!("{name} (order {}): {} orbit cells, {} critical", g.order(), q.cell_count(), crit.len());
        if name.starts_with("stab") {
            for &c in &crit {
                let label = if q.dim(c) == 0 {
                    number_partition_label(&q, c)?
                } else {
                    let chain = q.base().vertices_of(q.representative(c));
                    let labels: Vec<String> =
                        chain.iter().map(|&v| number_partition_label_of(q.base().partition(v))).collect();
                    labels.join(" < ")
                };
                println!("  {}  label {label}", q.describe(c));
            }
        }
    }
    Ok(())
}
