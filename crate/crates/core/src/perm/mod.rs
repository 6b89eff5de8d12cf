//! Permutations of `[n]`, finite permutation groups, and their actions on
//! partitions and on chains of the partition lattice.

mod quotient;

pub use quotient::QuotientComplex;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::complex::{CellId, PartitionComplex, Simplex};
use crate::error::{invalid_arg, Error, Result};
use crate::setpart::Partition;

/// A bijection of `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based: images[i] is the image of element i + 1, minus one
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// `images[i]` is the image of `i + 1`, all 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(invalid_arg("permutation too large"));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(invalid_arg(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Self { images: out.into() })
    }

    /// Product of cycles, applied right to left.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut result = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let cycle = cycle.as_ref();
            let mut images: Vec<usize> = (1..=n).collect();
            let mut seen = HashSet::new();
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(invalid_arg(format!("cycle element {x} outside 1..={n}")));
                }
                if !seen.insert(x) {
                    return Err(invalid_arg(format!("cycle repeats element {x}")));
                }
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
            result = Self::from_images(&images)?.compose(&result);
        }
        Ok(result)
    }

    /// Parses cycle notation such as `"(2 3)(4 5)"` or `"(1,2,3)"`. The empty
    /// string and `"()"` give the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut pos = 0;
        let perr = |position: usize, message: String| Error::Parse { position, message };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(perr(pos, "expected '('".into()));
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                    pos += 1;
                }
                match bytes.get(pos) {
                    None => return Err(perr(pos, "unterminated cycle".into())),
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let x: usize = text[start..pos]
                            .parse()
                            .map_err(|_| perr(start, "number too large".into()))?;
                        if x == 0 || x > n {
                            return Err(perr(start, format!("element {x} outside 1..={n}")));
                        }
                        cycle.push(x);
                    }
                    Some(&c) => {
                        return Err(perr(pos, format!("unexpected character {:?}", c as char)))
                    }
                }
            }
            cycles.push(cycle);
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based element `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw_images(&self) -> &[u8] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv.into() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.apply(i) == i
    }

    /// Acts on a partition of the same ground set, blockwise.
    pub fn act_partition(&self, p: &Partition) -> Result<Partition> {
        if p.n() != self.n() {
            return Err(invalid_arg(format!(
                "permutation of [{}] acting on a partition of [{}]",
                self.n(),
                p.n()
            )));
        }
        Ok(p.permuted(&self.images))
    }

    /// Disjoint cycles of length at least two, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Splits a generator list like `"(2 3),(2 3 4 5)"` at top-level commas and
/// parses each entry as a product of cycles.
pub fn parse_generators(n: usize, text: &str) -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let push = |s: &str, offset: usize, gens: &mut Vec<Permutation>| -> Result<()> {
        if s.trim().is_empty() {
            return Ok(());
        }
        let g = Permutation::parse_cycles(n, s).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            other => other,
        })?;
        gens.push(g);
        Ok(())
    };
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                push(&text[start..i], start, &mut gens)?;
                start = i + 1;
            }
            _ => {}
        }
    }
    push(&text[start..], start, &mut gens)?;
    Ok(gens)
}

/// A finite permutation group with all of its elements materialized.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl PermGroup {
    /// The subgroup of `S_n` generated by `gens`.
    pub fn generate(n: usize, gens: &[Permutation]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(invalid_arg(format!("generator {g} is not a permutation of [{n}]")));
        }
        let generators: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Permutation::identity(n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        Ok(Self {
            n,
            generators,
            elements,
            index,
        })
    }

    pub fn trivial(n: usize) -> Self {
        Self::generate(n, &[]).expect("identity generates")
    }

    /// `S_1 × S_{n-1}`: every permutation fixing 1.
    pub fn point_stabilizer(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[vec![2, 3]]).unwrap());
            gens.push(Permutation::from_cycles(n, &[(2..=n).collect::<Vec<_>>()]).unwrap());
        }
        Self::generate(n, &gens).unwrap()
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap());
        }
        Self::generate(n, &gens).unwrap()
    }

    /// The cyclic group generated by `(1 2 … n)`.
    pub fn cyclic(n: usize) -> Self {
        Self::generate(n, &[Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap()])
            .unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in lexicographic order of their image lists; the
    /// identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains(g))
    }

    /// `[other : self]`, requiring `self ⊆ other`.
    pub fn index_in(&self, other: &PermGroup) -> Result<usize> {
        if !self.is_subgroup_of(other) {
            return Err(invalid_arg("not a subgroup"));
        }
        Ok(other.order() / self.order())
    }

    /// `true` iff every element fixes the 1-based point `i`.
    pub fn fixes_point(&self, i: usize) -> bool {
        self.generators.iter().all(|g| g.fixes(i))
    }

    /// The subgroup of elements satisfying `pred`, which must describe a
    /// subgroup (e.g. a stabilizer). Generators are chosen greedily.
    pub fn subgroup_where(&self, pred: impl Fn(&Permutation) -> bool) -> PermGroup {
        let members: Vec<&Permutation> = self.elements.iter().filter(|g| pred(g)).collect();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.n);
        for g in members.iter() {
            if !current.contains(g) {
                gens.push((*g).clone());
                current = PermGroup::generate(self.n, &gens).unwrap();
            }
        }
        debug_assert_eq!(current.order(), members.len(), "predicate is not a subgroup");
        current
    }
}

/// One orbit of a group action on a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<T> {
    /// Smallest member.
    pub representative: T,
    /// Members in increasing order.
    pub members: Vec<T>,
    /// Order of the stabilizer of the representative, counted directly.
    pub stabilizer_order: usize,
}

/// Splits `items` into orbits under `group`, where `act` is the action.
/// Images of items that are not themselves listed still join the orbit.
pub fn orbits_and_stabilizers<T, F>(group: &PermGroup, items: &[T], act: F) -> Vec<Orbit<T>>
where
    T: Clone + Ord + Hash,
    F: Fn(&Permutation, &T) -> T,
{
    let mut assigned: HashSet<T> = HashSet::new();
    let mut orbits = Vec::new();
    for x in items {
        if assigned.contains(x) {
            continue;
        }
        let mut members = vec![x.clone()];
        assigned.insert(x.clone());
        let mut k = 0;
        while k < members.len() {
            for g in group.generators() {
                let y = act(g, &members[k]);
                if assigned.insert(y.clone()) {
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort();
        let representative = members[0].clone();
        let stabilizer_order = group
            .elements()
            .iter()
            .filter(|g| act(g, &representative) == representative)
            .count();
        orbits.push(Orbit {
            representative,
            members,
            stabilizer_order,
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    orbits
}

impl PartitionComplex {
    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.n() != self.n() {
            return Err(invalid_arg(format!(
                "permutation of [{}] acting on the nerve of Π̄_{}",
                g.n(),
                self.n()
            )));
        }
        Ok(())
    }

    /// The permutation of ground-poset vertices induced by `g`.
    pub fn vertex_permutation(&self, g: &Permutation) -> Result<Vec<u32>> {
        self.check_degree(g)?;
        Ok(self
            .poset()
            .elements()
            .iter()
            .map(|p| {
                self.vertex_of(&p.permuted(g.raw_images()))
                    .expect("the proper part is closed under permutations")
            })
            .collect())
    }

    /// Acts on a chain vertexwise. The action is by poset automorphisms, so
    /// the vertex order is preserved.
    pub fn act_simplex(&self, g: &Permutation, s: &Simplex) -> Result<Simplex> {
        let vp = self.vertex_permutation(g)?;
        Ok(Simplex::new(s.vertices().iter().map(|&v| vp[v as usize]).collect()))
    }

    /// The permutation of cells induced by `g`, indexed by cell id.
    pub fn cell_permutation(&self, g: &Permutation) -> Result<Vec<CellId>> {
        let vp = self.vertex_permutation(g)?;
        let mut buf = Vec::new();
        Ok(self
            .cells()
            .map(|c| {
                buf.clear();
                buf.extend(self.vertices_of(c).iter().map(|&v| vp[v as usize]));
                self.find(&buf).expect("automorphisms map chains to chains")
            })
            .collect())
    }

    /// Cell permutations for each generator of `group`.
    pub fn cell_action(&self, group: &PermGroup) -> Result<CellAction> {
        if group.n() != self.n() {
            return Err(invalid_arg(format!(
                "group on [{}] acting on the nerve of Π̄_{}",
                group.n(),
                self.n()
            )));
        }
        let generators = group
            .generators()
            .iter()
            .map(|g| self.cell_permutation(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(CellAction { generators })
    }
}

/// Precomputed action of a group's generators on the cells of a complex.
#[derive(Clone, Debug)]
pub struct CellAction {
    generators: Vec<Vec<CellId>>,
}

impl CellAction {
    pub fn generator_tables(&self) -> &[Vec<CellId>] {
        &self.generators
    }

    /// Orbit index of every cell together with the orbit representatives
    /// (smallest cell id of each orbit, ascending).
    pub fn orbits(&self, cell_count: usize) -> (Vec<u32>, Vec<CellId>) {
        let mut parent: Vec<u32> = (0..cell_count as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for table in &self.generators {
            for (c, &img) in table.iter().enumerate() {
                let a = find(&mut parent, c as u32);
                let b = find(&mut parent, img.0);
                if a != b {
                    // keep the smaller id as root
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
        let mut orbit_of = vec![0u32; cell_count];
        let mut reps = Vec::new();
        let mut slot: HashMap<u32, u32> = HashMap::new();
        for c in 0..cell_count as u32 {
            let root = find(&mut parent, c);
            let id = *slot.entry(root).or_insert_with(|| {
                reps.push(CellId(root));
                reps.len() as u32 - 1
            });
            orbit_of[c as usize] = id;
        }
        (orbit_of, reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::enumerate_all;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn group_orders() {
        let g = PermGroup::generate(5, &[cyc(5, "(2 3)"), cyc(5, "(2 3 4 5)")]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(PermGroup::trivial(5).order(), 1);
        assert_eq!(PermGroup::cyclic(5).order(), 5);
        assert_eq!(PermGroup::point_stabilizer(4).order(), 6);
        assert_eq!(PermGroup::point_stabilizer(5).order(), 24);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert!(PermGroup::point_stabilizer(5).elements().iter().all(|g| g.fixes(1)));
        assert!(PermGroup::generate(4, &[cyc(5, "(1 2)")]).is_err());
    }

    #[test]
    fn cycle_notation() {
        let g = cyc(5, "(2 3)(4 5)");
        assert_eq!(g.images(), vec![1, 3, 2, 5, 4]);
        assert_eq!(g.to_string(), "(2 3)(4 5)");
        // right to left: (1 2) first, then (2 3)
        assert_eq!(cyc(3, "(2 3)(1 2)").images(), vec![3, 1, 2]);
        assert_eq!(cyc(5, "(1,2,3,4,5)").to_string(), "(1 2 3 4 5)");
        assert!(cyc(3, "").is_identity());
        assert!(cyc(3, "()").is_identity());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
        let gens = parse_generators(5, "(2 3),(2 3 4 5)").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_generators(5, "").unwrap().is_empty());
        assert!(matches!(
            parse_generators(5, "(2 3),(2 9)"),
            Err(Error::Parse { position: 9, .. })
        ));
    }

    #[test]
    fn composition_and_inverse() {
        let a = cyc(4, "(1 2 3)");
        let b = cyc(4, "(3 4)");
        let ab = a.compose(&b);
        for i in 1..=4 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn partition_action() {
        let p: Partition = "1,2|3,4".parse().unwrap();
        assert_eq!(cyc(4, "(2 3)").act_partition(&p).unwrap().to_string(), "1,3|2,4");
        assert_eq!(Permutation::identity(4).act_partition(&p).unwrap(), p);
        let alpha: Partition = "1|2,3,4".parse().unwrap();
        assert_eq!(cyc(4, "(2 3 4)").act_partition(&alpha).unwrap(), alpha);
        assert!(cyc(5, "(1 2)").act_partition(&p).is_err());
    }

    #[test]
    fn action_is_compatible_with_composition_and_order() {
        let s4 = PermGroup::symmetric(4);
        let parts = enumerate_all(4);
        for g in s4.elements() {
            for h in s4.elements().iter().step_by(5) {
                for p in &parts {
                    let lhs = g.compose(h).act_partition(p).unwrap();
                    let rhs = g.act_partition(&h.act_partition(p).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for n in 3..=5 {
            let sn = PermGroup::symmetric(n);
            let parts = enumerate_all(n);
            for g in sn.elements() {
                for p in &parts {
                    let gp = g.act_partition(p).unwrap();
                    for q in &parts {
                        let gq = g.act_partition(q).unwrap();
                        assert_eq!(p.refines_unchecked(q), gp.refines_unchecked(&gq));
                    }
                }
            }
        }
    }

    #[test]
    fn orbits_on_vertices_of_n3() {
        let k = PartitionComplex::partition_nerve(3).unwrap();
        let g = PermGroup::point_stabilizer(3);
        let orbits = orbits_and_stabilizers(&g, k.poset().elements(), |g, p| {
            g.act_partition(p).unwrap()
        });
        assert_eq!(orbits.len(), 2);
        let mut shapes: Vec<Vec<String>> = orbits
            .iter()
            .map(|o| o.members.iter().map(ToString::to_string).collect())
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![vec!["1,2|3".to_string(), "1,3|2".to_string()], vec!["1|2,3".to_string()]]);
        let trivial = orbits_and_stabilizers(&PermGroup::trivial(3), k.poset().elements(), |g, p| {
            g.act_partition(p).unwrap()
        });
        assert_eq!(trivial.len(), 3);
    }

    #[test]
    fn orbit_stabilizer_identity() {
        for n in 3..=5 {
            let g = PermGroup::point_stabilizer(n);
            let parts = crate::setpart::enumerate_proper(n).unwrap();
            for o in orbits_and_stabilizers(&g, &parts, |g, p| g.act_partition(p).unwrap()) {
                assert_eq!(o.members.len() * o.stabilizer_order, g.order());
            }
        }
    }

    #[test]
    fn stabilizer_subgroups() {
        let g = PermGroup::point_stabilizer(5);
        let h = g.subgroup_where(|s| s.fixes(5));
        assert_eq!(h.order(), 6);
        assert!(h.is_subgroup_of(&g));
        assert_eq!(h.index_in(&g).unwrap(), 4);
        assert!(g.index_in(&h).is_err());
    }

    #[test]
    fn cell_orbits_under_generators() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let action = k.cell_action(&PermGroup::point_stabilizer(4)).unwrap();
        let (orbit_of, reps) = action.orbits(k.num_cells());
        assert_eq!(orbit_of.len(), 31);
        let vertex_orbits = reps.iter().filter(|c| c.index() < 13).count();
        assert_eq!(vertex_orbits, 5);
    }
}
