//! Acyclic matchings from a cone point and from a closure operator on the
//! partition nerve.
//!
//! cargo run --example closure_collapse -- 5

use partmorse::complex::{CellComplex, PartitionComplex};
use partmorse::construction::alpha;
use partmorse::morse::{closure_matching, cone_matching, validate_matching};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let k = PartitionComplex::partition_nerve(n)?;
    let a = alpha(n);
    let apex = k.vertex_of(&a).expect("1|2…n is proper");
    let size = k.poset().len() as u32;

    // everything below or comparable to α is a cone with apex α
    let cone: Vec<bool> = (0..size).map(|v| k.poset().comparable(v, apex) || v == apex).collect();
    let m = cone_matching(&k, Some(&cone), apex)?;
    let cert = validate_matching(&k, &m)?;
    println!("cone on {a}: {} pairs, acyclic {}", m.len(), cert.is_acyclic);

    // x ↦ x ∧ α, defined where the meet is still proper
    let mut domain = vec![true; size as usize];
    let mut down = Vec::with_capacity(size as usize);
    for x in 0..size {
        match k.vertex_of(&k.partition(x).meet(&a)?) {
            Some(v) => down.push(v),
            None => {
                domain[x as usize] = false;
                down.push(x);
            }
        }
    }
    let m = closure_matching(&k, Some(&domain), &down)?;
    let cert = validate_matching(&k, &m)?;
    println!("meet with {a}: {} pairs, acyclic {}", m.len(), cert.is_acyclic);
    println!("critical counts: {:?} of f-vector {:?}", cert.critical_counts, k.f_vector());
    Ok(())
}
