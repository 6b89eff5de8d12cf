//! Enumerate set partitions, refine and meet them, and count the proper part
//! of the lattice.
//!
//! cargo run --example partition_lattice -- 5

use partmorse::setpart::{enumerate_all, enumerate_proper, Partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);

    let all = enumerate_all(n);
    let proper = enumerate_proper(n)?;
    println!("n = {n}: {} partitions, {} proper", all.len(), proper.len());

    let p: Partition = "1,2|3,4".parse()?;
    let q: Partition = "1,3|2,4".parse()?;
    let m = p.meet(&q)?;
    println!("{p} ∧ {q} = {m}");
    println!("{m} refines {p}: {}", m.refines(&p)?);
    println!("rgs of {p}: {:?}, blocks {:?}", p.rgs(), p.blocks());

    let mut by_blocks = vec![0usize; n + 1];
    for x in &all {
        by_blocks[x.block_count()] += 1;
    }
    println!("partitions by block count (Stirling numbers): {:?}", &by_blocks[1..]);
    Ok(())
}
