//! Build the order complex of the proper part of the partition lattice and
//! print its f-vector, Euler characteristic and a few chains.
//!
//! cargo run --example order_complex -- 5

use partmorse::complex::{CellComplex, CellId, PartitionComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);

    let k = PartitionComplex::partition_nerve(n)?;
    println!("vertices: {}", k.poset().len());
    println!("f-vector: {:?}", k.f_vector());
    println!("euler characteristic: {}", k.euler_characteristic());

    let top = k.top_dim().unwrap_or(0);
    let first = CellId::from(k.cells_of_dim(top).start);
    println!("first maximal chain: {}", k.format_cell(first));
    for (face, sign) in k.faces(first) {
        println!("  {sign:+} {}", k.format_cell(face));
    }

    let text = k.format_cell(first);
    let chain = k.parse_chain(&text)?;
    println!("lookup by text: cell {} of dimension {}", chain.index(), k.dim(chain));
    Ok(())
}
