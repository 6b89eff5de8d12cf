//! Gluing matchings fibre by fibre along an order-preserving map to a poset.

use std::collections::{HashMap, VecDeque};

use crate::complex::{CellComplex, CellId, FinitePoset, PartitionComplex};
use crate::error::{invalid_arg, Error, Result};
use crate::morse::{check_equivariance, validate_matching, Matching};
use crate::perm::{PermGroup, Permutation};

/// An action of permutations on the elements of a target poset, by index.
pub type TargetAction<'a> = dyn Fn(&Permutation, u32) -> u32 + 'a;

/// Union of acyclic matchings, one per fibre of an order-preserving map
/// from the face poset to `target`. `fiber_of[c]` is the element cell `c`
/// maps to, or `None` for cells outside the map's domain. Each matching must
/// pair cells of its own fibre only.
///
/// The union of acyclic matchings on the fibres of a poset map is acyclic;
/// the result is validated anyway and an error is returned if it is not.
pub fn patchwork<C: CellComplex + ?Sized, Q>(
    complex: &C,
    target: &FinitePoset<Q>,
    fiber_of: &[Option<u32>],
    fibers: &[(u32, Matching)],
) -> Result<Matching> {
    let n = complex.cell_count();
    if fiber_of.len() != n {
        return Err(invalid_arg(format!(
            "fibre map has {} entries for {n} cells",
            fiber_of.len()
        )));
    }
    if let Some(q) = fiber_of.iter().flatten().find(|&&q| q as usize >= target.len()) {
        return Err(invalid_arg(format!("fibre {q} is not an element of the target")));
    }
    for b in 0..n {
        let Some(qb) = fiber_of[b] else { continue };
        for (a, _) in complex.faces(CellId::from(b)) {
            if let Some(qa) = fiber_of[a.index()] {
                if !target.le(qa, qb) {
                    return Err(invalid_arg(format!(
                        "fibre map is not order preserving at {}",
                        complex.describe(CellId::from(b))
                    )));
                }
            }
        }
    }
    let mut seen = vec![false; target.len()];
    let mut out = Matching::new(n);
    for (q, m) in fibers {
        let q = *q;
        if q as usize >= target.len() {
            return Err(invalid_arg(format!("fibre {q} is not an element of the target")));
        }
        if std::mem::replace(&mut seen[q as usize], true) {
            return Err(invalid_arg(format!("two matchings given for fibre {q}")));
        }
        if m.cell_count() != n {
            return Err(Error::InvalidMatching(format!(
                "matching on fibre {q} has {} cells, complex has {n}",
                m.cell_count()
            )));
        }
        for (a, b) in m.pairs() {
            if fiber_of[a.index()] != Some(q) || fiber_of[b.index()] != Some(q) {
                return Err(invalid_arg(format!(
                    "matching on fibre {q} pairs {} -> {} outside the fibre",
                    complex.describe(a),
                    complex.describe(b)
                )));
            }
            out.insert(a, b)?;
        }
    }
    let cert = validate_matching(complex, &out)?;
    if !cert.is_valid() {
        return Err(Error::InvalidMatching(format!(
            "glued matching fails validation: {cert:?}"
        )));
    }
    Ok(out)
}

/// For each element of the orbit of `r`, a group element carrying `r` to it.
fn transversal(group: &PermGroup, act: &TargetAction<'_>, r: u32) -> Vec<(u32, Permutation)> {
    let mut found: HashMap<u32, Permutation> = HashMap::from([(r, Permutation::identity(group.n()))]);
    let mut order = vec![r];
    let mut queue = VecDeque::from([r]);
    while let Some(q) = queue.pop_front() {
        let g = found[&q].clone();
        for s in group.generators() {
            let t = act(s, q);
            if let std::collections::hash_map::Entry::Vacant(e) = found.entry(t) {
                e.insert(s.compose(&g));
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    order.into_iter().map(|q| {
        let g = found.remove(&q).unwrap();
        (q, g)
    }).collect()
}

fn transport(complex: &PartitionComplex, g: &Permutation, m: &Matching) -> Result<Vec<(CellId, CellId)>> {
    let vp = complex.vertex_permutation(g)?;
    let mut buf = Vec::new();
    let mut image = |c: CellId| {
        buf.clear();
        buf.extend(complex.vertices_of(c).iter().map(|&v| vp[v as usize]));
        complex.find(&buf).expect("automorphisms map chains to chains")
    };
    let mut pairs: Vec<(CellId, CellId)> = m.pairs().into_iter().map(|(a, b)| (image(a), image(b))).collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// Equivariant version of [`patchwork`]. `group` acts on the nerve and, via
/// `act`, on `target`; `fiber_of` must intertwine the two actions. `reps`
/// gives one element per orbit of the target together with a matching on
/// its fibre that is invariant under the stabilizer of that element. The
/// matching of every other fibre `g·r` is `g` applied to the matching of
/// `r`, which does not depend on the choice of `g`.
///
/// The result is acyclic and invariant under `group`.
pub fn equivariant_patchwork<Q>(
    complex: &PartitionComplex,
    group: &PermGroup,
    target: &FinitePoset<Q>,
    act: &TargetAction<'_>,
    fiber_of: &[Option<u32>],
    reps: &[(u32, Matching)],
) -> Result<Matching> {
    let action = complex.cell_action(group)?;
    let size = target.len() as u32;
    for g in group.generators() {
        for q in 0..size {
            if act(g, q) >= size {
                return Err(invalid_arg(format!("{g} maps target element {q} out of range")));
            }
        }
    }
    if fiber_of.len() != complex.num_cells() {
        return Err(invalid_arg(format!(
            "fibre map has {} entries for {} cells",
            fiber_of.len(),
            complex.num_cells()
        )));
    }
    for (g, table) in group.generators().iter().zip(action.generator_tables()) {
        for (c, &img) in table.iter().enumerate() {
            if fiber_of[img.index()] != fiber_of[c].map(|q| act(g, q)) {
                return Err(invalid_arg(format!(
                    "fibre map does not commute with {g} at {}",
                    complex.format_cell(CellId::from(c))
                )));
            }
        }
    }

    let mut covered: Vec<Option<u32>> = vec![None; size as usize];
    let mut pieces = Vec::new();
    for (r, m) in reps {
        let r = *r;
        if r >= size {
            return Err(Error::InvalidRepresentatives(format!("{r} is not a target element")));
        }
        if m.cell_count() != complex.num_cells() {
            return Err(Error::InvalidMatching(format!("matching for {r} is on another complex")));
        }
        if let Some((a, b)) = m
            .pairs()
            .into_iter()
            .find(|&(a, b)| fiber_of[a.index()] != Some(r) || fiber_of[b.index()] != Some(r))
        {
            return Err(invalid_arg(format!(
                "matching for {r} pairs {} -> {} outside its fibre",
                complex.format_cell(a),
                complex.format_cell(b)
            )));
        }
        let stabilizer = group.subgroup_where(|g| act(g, r) == r);
        if !check_equivariance(m, &complex.cell_action(&stabilizer)?) {
            return Err(Error::PreconditionViolation(format!(
                "matching for {r} is not invariant under the stabilizer of {r}"
            )));
        }
        for (q, g) in transversal(group, act, r) {
            if let Some(prev) = covered[q as usize] {
                return Err(Error::InvalidRepresentatives(format!(
                    "{r} and {prev} lie in the same orbit"
                )));
            }
            covered[q as usize] = Some(r);
            let mut moved = Matching::new(complex.num_cells());
            for (a, b) in transport(complex, &g, m)? {
                moved.insert(a, b)?;
            }
            pieces.push((q, moved));
        }
    }
    if let Some(q) = covered.iter().position(Option::is_none) {
        return Err(Error::InvalidRepresentatives(format!(
            "no representative for the orbit of {q}"
        )));
    }
    let glued = patchwork(complex, target, fiber_of, &pieces)?;
    if !check_equivariance(&glued, &action) {
        return Err(Error::InvalidMatching("glued matching is not invariant".into()));
    }
    Ok(glued)
}

/// `true` iff every group element carrying `r` to `q` transports `m` to the
/// same matching. Checks all elements, so intended for small groups.
pub fn transport_is_well_defined(
    complex: &PartitionComplex,
    group: &PermGroup,
    act: &TargetAction<'_>,
    r: u32,
    m: &Matching,
    q: u32,
) -> Result<bool> {
    let mut first: Option<Vec<(CellId, CellId)>> = None;
    for g in group.elements() {
        if act(g, r) != q {
            continue;
        }
        let pairs = transport(complex, g, m)?;
        match &first {
            None => first = Some(pairs),
            Some(p) if *p != pairs => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn target() -> FinitePoset<u8> {
        FinitePoset::from_relations(vec![0, 1], &[(0, 1)]).unwrap()
    }

    #[test]
    fn patchwork_checks_confinement_and_order() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        // fibre 1 = chains through 1,2|3,4 only; everything else in fibre 0
        let top = k.vertex_of(&"1,2|3,4".parse().unwrap()).unwrap();
        let fiber_of: Vec<Option<u32>> = k
            .cells()
            .map(|c| Some(u32::from(k.vertices_of(c).contains(&top))))
            .collect();
        let empty = Matching::new(k.num_cells());
        let m = patchwork(&k, &target(), &fiber_of, &[(0, empty.clone()), (1, empty.clone())]).unwrap();
        assert!(m.is_empty());
        assert!(patchwork(&k, &target(), &fiber_of, &[(0, empty.clone()), (0, empty.clone())]).is_err());
        // reversed labels are not order preserving
        let flipped: Vec<Option<u32>> = fiber_of.iter().map(|q| q.map(|x| 1 - x)).collect();
        assert!(patchwork(&k, &target(), &flipped, &[]).is_err());
        // a pair straddling fibres is rejected
        let mut bad = Matching::new(k.num_cells());
        let a = k.parse_chain("1,2|3|4").unwrap();
        let b = k.parse_chain("1,2|3|4 < 1,2|3,4").unwrap();
        bad.insert(a, b).unwrap();
        assert!(patchwork(&k, &target(), &fiber_of, &[(0, bad)]).is_err());
    }

    #[test]
    fn equivariant_gluing_under_a_swap() {
        // S_2 swapping 3 and 4 acts on Π̄_4; map chains to whether they
        // contain a vertex separating 1 from 2, a fixed target element.
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let g = PermGroup::generate(4, &[Permutation::parse_cycles(4, "(3 4)").unwrap()]).unwrap();
        let fiber_of: Vec<Option<u32>> = k
            .cells()
            .map(|c| {
                let joined = k.vertices_of(c).iter().all(|&v| k.partition(v).same_block(1, 2));
                Some(u32::from(!joined))
            })
            .collect();
        let trivial = |_: &Permutation, q: u32| q;
        let empty = Matching::new(k.num_cells());
        let m = equivariant_patchwork(&k, &g, &target(), &trivial, &fiber_of, &[(0, empty.clone()), (1, empty.clone())])
            .unwrap();
        assert!(m.is_empty());
        assert!(matches!(
            equivariant_patchwork(&k, &g, &target(), &trivial, &fiber_of, &[(0, empty.clone())]),
            Err(Error::InvalidRepresentatives(_))
        ));
        // a pair that the swap moves breaks stabilizer invariance
        let mut m0 = Matching::new(k.num_cells());
        m0.insert(k.parse_chain("1,2|3|4").unwrap(), k.parse_chain("1,2|3|4 < 1,2,3|4").unwrap())
            .unwrap();
        assert!(matches!(
            equivariant_patchwork(&k, &g, &target(), &trivial, &fiber_of, &[(0, m0.clone()), (1, empty.clone())]),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(transport_is_well_defined(&k, &g, &trivial, 0, &empty, 0).unwrap());
        assert!(!transport_is_well_defined(&k, &g, &trivial, 0, &m0, 0).unwrap());
    }
}
