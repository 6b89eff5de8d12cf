//! Reassemble the main matching from one fibre per orbit with
//! `equivariant_patchwork`, and check it against the library's result.
//!
//! cargo run --example equivariant_patchwork -- 5

use partmorse::complex::CellId;
use partmorse::construction::{build_main_matching, target_poset, FiberLabel};
use partmorse::morse::{equivariant_patchwork, patchwork, Matching};
use partmorse::perm::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let level = build_main_matching(n)?;
    let k = level.complex();
    let fibers = level.fiber_map();
    let fiber_of: Vec<Option<u32>> = fibers.iter().map(|&q| Some(q)).collect();
    let target = target_poset(n)?;

    let restrict = |q: u32| -> Result<Matching, Box<dyn std::error::Error>> {
        let mut m = Matching::new(k.num_cells());
        for (a, b) in level.matching().pairs() {
            if fibers[a.index()] == q {
                m.insert(a, b)?;
            }
        }
        Ok(m)
    };
    let top = FiberLabel::Atom(n).index();
    let reps = [(0, restrict(0)?), (top, restrict(top)?)];
    for (q, m) in &reps {
        println!("fibre {}: {} pairs", target.element(*q), m.len());
    }

    // 0 is fixed, atom index q stands for v_{q+1}
    let act = |g: &Permutation, q: u32| if q == 0 { 0 } else { g.apply(q as usize + 1) as u32 - 1 };
    let glued = equivariant_patchwork(k, &level.group(), &target, &act, &fiber_of, &reps)?;
    println!("glued {} pairs, same as main matching: {}", glued.len(), &glued == level.matching());

    // the plain version needs every fibre spelled out
    let mut all = Vec::new();
    for q in 0..target.len() as u32 {
        all.push((q, restrict(q)?));
    }
    let plain = patchwork(k, &target, &fiber_of, &all)?;
    println!("plain patchwork agrees: {}", &plain == level.matching());
    let critical: Vec<CellId> = plain.critical_cells();
    println!("{} critical cells", critical.len());
    Ok(())
}
