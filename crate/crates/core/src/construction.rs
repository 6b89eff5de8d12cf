//! An explicit acyclic matching on the nerve of `Π̄_n`, invariant under the
//! permutations fixing 1, whose critical cells are one vertex and `(n−1)!`
//! chains of top dimension.
//!
//! Notation used throughout:
//!
//! * `A`: proper partitions whose blocks not containing 1 are singletons.
//! * `C_n`: chains of top dimension `n−3` all of whose vertices lie in `A`.
//! * `α_n = 1|2,…,n`, the only critical vertex.
//! * `v_k = 1,k|…` with every other element a singleton, `2 ≤ k ≤ n`.
//!
//! Every chain contains at most one `v_k`, since they are atoms. Sending a
//! chain to that atom, or to a bottom element `0` when there is none, is a
//! poset map to `{0} ∪ {v_2,…,v_n}`. The fibre over `0` is collapsed onto
//! `α_n` directly; the fibre over `v_n` is a copy of the face poset of the
//! nerve for `n−1` (plus the vertex `v_n`), so it inherits the matching one
//! level down. The other atom fibres are obtained by permuting.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::complex::{CellComplex, CellId, FinitePoset, PartitionComplex};
use crate::error::{invalid_arg, Error, Result};
use crate::morse::{
    check_equivariance, closure_matching, cone_matching, equivariant_patchwork, patchwork, quotient_matching,
    validate_matching, Matching,
};
use crate::perm::{orbits_and_stabilizers, PermGroup, Permutation, QuotientComplex};
use crate::setpart::Partition;

fn check_n(n: usize) -> Result<()> {
    if !(3..=255).contains(&n) {
        return Err(invalid_arg(format!("n must be at least 3, got {n}")));
    }
    Ok(())
}

/// `1|2,…,n`.
pub fn alpha(n: usize) -> Partition {
    let mut rgs = vec![1u8; n];
    rgs[0] = 0;
    Partition::from_rgs(rgs).expect("valid growth string")
}

/// `1,k|…` with all other elements singletons.
pub fn atom(n: usize, k: usize) -> Result<Partition> {
    if !(2..=n).contains(&k) {
        return Err(invalid_arg(format!("atom index {k} outside 2..={n}")));
    }
    let mut blocks: Vec<Vec<usize>> = vec![vec![1, k]];
    blocks.extend((2..=n).filter(|&e| e != k).map(|e| vec![e]));
    Partition::from_blocks(n, &blocks)
}

/// Whether every block not containing 1 is a singleton.
pub fn in_a(p: &Partition) -> bool {
    let sizes = p.block_sizes();
    sizes[1..].iter().all(|&s| s == 1)
}

/// The distinguished vertices and chains of one nerve.
#[derive(Clone, Debug)]
pub struct SpecialSets {
    n: usize,
    a: Vec<u32>,
    cn: Vec<CellId>,
    alpha: u32,
    // atoms[k - 2] is the vertex of v_k
    atoms: Vec<u32>,
}

impl SpecialSets {
    pub fn new(complex: &PartitionComplex) -> Result<Self> {
        let n = complex.n();
        check_n(n)?;
        let poset = complex.poset();
        let a: Vec<u32> = (0..poset.len() as u32).filter(|&v| in_a(complex.partition(v))).collect();
        let alpha = complex.vertex_of(&alpha(n)).expect("α is proper");
        let atoms = (2..=n)
            .map(|k| Ok(complex.vertex_of(&atom(n, k)?).expect("atoms are proper")))
            .collect::<Result<Vec<u32>>>()?;
        let cn = complex
            .cells_of_dim(n - 3)
            .map(CellId::from)
            .filter(|&c| complex.vertices_of(c).iter().all(|&v| in_a(complex.partition(v))))
            .collect();
        Ok(Self { n, a, cn, alpha, atoms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in `A`, ascending.
    pub fn a(&self) -> &[u32] {
        &self.a
    }

    /// Cells of `C_n`, ascending.
    pub fn cn(&self) -> &[CellId] {
        &self.cn
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// Vertex of `v_k`.
    pub fn atom(&self, k: usize) -> u32 {
        self.atoms[k - 2]
    }

    /// Vertices `v_2, …, v_n` in order.
    pub fn atoms(&self) -> &[u32] {
        &self.atoms
    }

    /// `C_n ∪ {α_n}`, ascending.
    pub fn expected_critical(&self) -> Vec<CellId> {
        let mut out = self.cn.clone();
        out.push(CellId(self.alpha));
        out.sort_unstable();
        out
    }
}

/// Element of the poset `{0} ∪ {v_2,…,v_n}` that chains map to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberLabel {
    Zero,
    Atom(usize),
}

impl FiberLabel {
    /// Index in [`target_poset`]: 0 for `Zero`, `k − 1` for `v_k`.
    pub fn index(self) -> u32 {
        match self {
            FiberLabel::Zero => 0,
            FiberLabel::Atom(k) => k as u32 - 1,
        }
    }

    /// Image under a permutation fixing 1.
    pub fn act(self, g: &Permutation) -> FiberLabel {
        match self {
            FiberLabel::Zero => FiberLabel::Zero,
            FiberLabel::Atom(k) => FiberLabel::Atom(g.apply(k)),
        }
    }
}

impl fmt::Display for FiberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLabel::Zero => write!(f, "0"),
            FiberLabel::Atom(k) => write!(f, "v{k}"),
        }
    }
}

/// `{0} ∪ {v_2,…,v_n}` with `0` below every atom.
pub fn target_poset(n: usize) -> Result<FinitePoset<FiberLabel>> {
    check_n(n)?;
    let mut elements = vec![FiberLabel::Zero];
    elements.extend((2..=n).map(FiberLabel::Atom));
    FinitePoset::new(elements, |a, b| *a == FiberLabel::Zero && *b != FiberLabel::Zero)
}

/// Atoms `v_k` occurring in a chain.
pub fn atoms_in(complex: &PartitionComplex, sets: &SpecialSets, cell: CellId) -> Vec<usize> {
    complex
        .vertices_of(cell)
        .iter()
        .filter_map(|v| sets.atoms.iter().position(|a| a == v).map(|i| i + 2))
        .collect()
}

/// The atom a chain contains, or `Zero`.
pub fn phi(complex: &PartitionComplex, sets: &SpecialSets, cell: CellId) -> FiberLabel {
    // atoms cover the bottom, so one can only sit at the start of a chain
    match complex.vertices_of(cell).first() {
        Some(&v) => match sets.atoms.iter().position(|&a| a == v) {
            Some(i) => FiberLabel::Atom(i + 2),
            None => FiberLabel::Zero,
        },
        None => FiberLabel::Zero,
    }
}

/// The embedding of the nerve for `n−1` into the nerve for `n`: put `n` in
/// the block of 1 of every vertex and prepend `v_n`.
#[derive(Clone, Debug)]
pub struct Psi<'a> {
    small: &'a PartitionComplex,
    big: &'a PartitionComplex,
    vertex_map: Vec<u32>,
    inverse: Vec<Option<u32>>,
    top_atom: u32,
}

/// Adds element `n + 1` to the block containing 1.
pub fn extend_partition(p: &Partition) -> Partition {
    let mut rgs = p.rgs().to_vec();
    rgs.push(0);
    Partition::from_rgs(rgs).expect("appending the label of 1 keeps a growth string")
}

impl<'a> Psi<'a> {
    pub fn new(small: &'a PartitionComplex, big: &'a PartitionComplex) -> Result<Self> {
        let n = big.n();
        if small.n() + 1 != n {
            return Err(invalid_arg(format!(
                "embedding needs nerves for consecutive n, got {} and {n}",
                small.n()
            )));
        }
        let vertex_map: Vec<u32> = small
            .poset()
            .elements()
            .iter()
            .map(|p| big.vertex_of(&extend_partition(p)).expect("image is proper"))
            .collect();
        let mut inverse = vec![None; big.poset().len()];
        for (i, &v) in vertex_map.iter().enumerate() {
            inverse[v as usize] = Some(i as u32);
        }
        let top_atom = big.vertex_of(&atom(n, n)?).expect("atoms are proper");
        Ok(Self {
            small,
            big,
            vertex_map,
            inverse,
            top_atom,
        })
    }

    pub fn apply(&self, cell: CellId) -> CellId {
        let mut buf = Vec::with_capacity(self.small.dim(cell) + 2);
        buf.push(self.top_atom);
        buf.extend(self.small.vertices_of(cell).iter().map(|&v| self.vertex_map[v as usize]));
        self.big.find(&buf).expect("v_n lies below every extended partition")
    }

    /// Inverse on the fibre of `v_n` minus the vertex `v_n` itself.
    pub fn invert(&self, cell: CellId) -> Result<CellId> {
        let verts = self.big.vertices_of(cell);
        if verts.len() < 2 || verts[0] != self.top_atom {
            return Err(invalid_arg(format!(
                "{} is not in the image of the embedding",
                self.big.format_cell(cell)
            )));
        }
        let small: Option<Vec<u32>> = verts[1..].iter().map(|&v| self.inverse[v as usize]).collect();
        let small = small.ok_or_else(|| {
            invalid_arg(format!(
                "{} is not in the image of the embedding",
                self.big.format_cell(cell)
            ))
        })?;
        Ok(self.small.find(&small).expect("preimages of a chain form a chain"))
    }

    pub fn top_atom(&self) -> u32 {
        self.top_atom
    }
}

/// Restriction of a permutation of `[n]` fixing 1 and `n` to `[n−1]`.
pub fn restrict_permutation(g: &Permutation) -> Result<Permutation> {
    let n = g.n();
    if n < 2 || !g.fixes(1) || !g.fixes(n) {
        return Err(invalid_arg(format!("{g} does not fix both 1 and {n}")));
    }
    Permutation::from_images(&g.images()[..n - 1])
}

/// Acyclic matching on the chains avoiding every atom, leaving only the
/// vertex `α_n` critical.
///
/// First every chain is paired along `x ↦ x ∧ α_n` (split 1 off its block),
/// which leaves the chains of partitions with `{1}` a block; those are then
/// coned off towards their maximum `α_n`. Both steps commute with every
/// permutation fixing 1.
pub fn fiber_zero_matching(complex: &PartitionComplex, sets: &SpecialSets) -> Result<Matching> {
    let size = complex.poset().len();
    let mut domain = vec![true; size];
    for &v in sets.atoms() {
        domain[v as usize] = false;
    }
    let alpha_p = complex.partition(sets.alpha()).clone();
    let down: Vec<u32> = (0..size as u32)
        .map(|x| {
            if !domain[x as usize] {
                return x;
            }
            let m = complex.partition(x).meet(&alpha_p).expect("same ground set");
            complex.vertex_of(&m).expect("only atoms meet α in the bottom")
        })
        .collect();
    let image: Vec<bool> = (0..size).map(|x| domain[x] && down[x] == x as u32).collect();
    let split = closure_matching(complex, Some(&domain), &down)?;
    let cone = cone_matching(complex, Some(&image), sets.alpha())?;

    let two = FinitePoset::from_relations(vec![0u8, 1], &[(0, 1)])?;
    let fiber_of: Vec<Option<u32>> = complex
        .cells()
        .map(|c| {
            let verts = complex.vertices_of(c);
            if !verts.iter().all(|&v| domain[v as usize]) {
                None
            } else if verts.iter().all(|&v| image[v as usize]) {
                Some(0)
            } else {
                Some(1)
            }
        })
        .collect();
    patchwork(complex, &two, &fiber_of, &[(0, cone), (1, split)])
}

/// One level of the construction.
#[derive(Clone, Debug)]
pub struct MainMatching {
    complex: PartitionComplex,
    sets: SpecialSets,
    fiber_zero: Matching,
    matching: Matching,
}

impl MainMatching {
    pub fn n(&self) -> usize {
        self.sets.n
    }

    pub fn complex(&self) -> &PartitionComplex {
        &self.complex
    }

    pub fn sets(&self) -> &SpecialSets {
        &self.sets
    }

    /// Matching of the chains without atoms.
    pub fn fiber_zero(&self) -> &Matching {
        &self.fiber_zero
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    /// Permutations fixing 1.
    pub fn group(&self) -> PermGroup {
        PermGroup::point_stabilizer(self.n())
    }

    /// Fibre index of every cell, see [`FiberLabel::index`].
    pub fn fiber_map(&self) -> Vec<u32> {
        self.complex
            .cells()
            .map(|c| phi(&self.complex, &self.sets, c).index())
            .collect()
    }

    /// Acyclicity, invariance and the critical set, each checked from scratch.
    pub fn certify(&self) -> Result<Certificates> {
        let cert = validate_matching(&self.complex, &self.matching)?;
        let action = self.complex.cell_action(&self.group())?;
        Ok(Certificates {
            acyclic: cert.is_valid(),
            equivariant: check_equivariance(&self.matching, &action),
            critical_set_matches: self.matching.critical_cells() == self.sets.expected_critical(),
        })
    }

    /// Certificates plus counts, in the shape of the JSON report.
    pub fn report(&self) -> Result<LevelReport> {
        let certificates = self.certify()?;
        let group = self.group();
        let vp: Vec<Vec<u32>> = group
            .elements()
            .iter()
            .map(|g| self.complex.vertex_permutation(g))
            .collect::<Result<_>>()?;
        let index_of = |g: &Permutation| group.elements().binary_search(g).expect("group element");
        let cells: Vec<CellId> = self.sets.cn().to_vec();
        let orbits = orbits_and_stabilizers(&group, &cells, |g, c| {
            let table = &vp[index_of(g)];
            let image: Vec<u32> = self.complex.vertices_of(*c).iter().map(|&v| table[v as usize]).collect();
            self.complex.find(&image).expect("chains map to chains")
        });
        Ok(LevelReport {
            n: self.n(),
            critical_counts: self.matching.critical_counts(&self.complex),
            cardinality_cn: self.sets.cn().len(),
            certificates,
            orbit_data: OrbitData {
                orbits: orbits.len(),
                stabilizer_order: orbits.iter().map(|o| o.stabilizer_order).max().unwrap_or(0),
            },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificates {
    pub acyclic: bool,
    pub equivariant: bool,
    pub critical_set_matches: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.acyclic && self.equivariant && self.critical_set_matches
    }
}

/// Orbits of the permutations fixing 1 on `C_n`, and the largest stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitData {
    pub orbits: usize,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LevelReport {
    pub n: usize,
    pub critical_counts: Vec<usize>,
    pub cardinality_cn: usize,
    pub certificates: Certificates,
    pub orbit_data: OrbitData,
}

/// Main matchings for every `n` from 3 up to a bound, each built from the
/// one below.
#[derive(Clone, Debug)]
pub struct MatchingTower {
    levels: Vec<MainMatching>,
}

impl MatchingTower {
    pub fn build(max_n: usize) -> Result<Self> {
        check_n(max_n)?;
        let mut levels = vec![base_level()?];
        for n in 4..=max_n {
            let next = next_level(levels.last().unwrap(), n)?;
            levels.push(next);
        }
        Ok(Self { levels })
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() + 2
    }

    pub fn level(&self, n: usize) -> Option<&MainMatching> {
        n.checked_sub(3).and_then(|i| self.levels.get(i))
    }

    pub fn levels(&self) -> &[MainMatching] {
        &self.levels
    }

    pub fn into_top(mut self) -> MainMatching {
        self.levels.pop().expect("at least one level")
    }
}

/// The main matching for a single `n`.
pub fn build_main_matching(n: usize) -> Result<MainMatching> {
    Ok(MatchingTower::build(n)?.into_top())
}

fn base_level() -> Result<MainMatching> {
    let complex = PartitionComplex::partition_nerve(3)?;
    let sets = SpecialSets::new(&complex)?;
    let fiber_zero = fiber_zero_matching(&complex, &sets)?;
    let matching = Matching::new(complex.num_cells());
    Ok(MainMatching {
        complex,
        sets,
        fiber_zero,
        matching,
    })
}

fn next_level(prev: &MainMatching, n: usize) -> Result<MainMatching> {
    let complex = PartitionComplex::partition_nerve(n)?;
    let sets = SpecialSets::new(&complex)?;
    let fiber_zero = fiber_zero_matching(&complex, &sets)?;
    let psi = Psi::new(&prev.complex, &complex)?;

    let mut top_fiber = Matching::new(complex.num_cells());
    for (a, b) in prev.matching.pairs() {
        top_fiber.insert(psi.apply(a), psi.apply(b))?;
    }
    let v_n = CellId(sets.atom(n));
    let s_n = psi.apply(CellId(prev.sets.alpha()));
    top_fiber.insert(v_n, s_n)?;

    let group = PermGroup::point_stabilizer(n);
    check_critical_transport(&complex, &sets, &group, &psi, &prev.sets)?;
    let target = target_poset(n)?;
    let fiber_of: Vec<Option<u32>> = complex.cells().map(|c| Some(phi(&complex, &sets, c).index())).collect();
    let act = |g: &Permutation, q: u32| if q == 0 { 0 } else { g.apply(q as usize + 1) as u32 - 1 };
    let top = FiberLabel::Atom(n).index();
    let matching = equivariant_patchwork(
        &complex,
        &group,
        &target,
        &act,
        &fiber_of,
        &[(0, fiber_zero.clone()), (top, top_fiber)],
    )?;
    Ok(MainMatching {
        complex,
        sets,
        fiber_zero,
        matching,
    })
}

/// Checks that the translates of `ψ[C_{n−1}]` are exactly `C_n`.
fn check_critical_transport(
    complex: &PartitionComplex,
    sets: &SpecialSets,
    group: &PermGroup,
    psi: &Psi<'_>,
    prev: &SpecialSets,
) -> Result<()> {
    let lifted: Vec<CellId> = prev.cn().iter().map(|&c| psi.apply(c)).collect();
    let mut seen = HashSet::new();
    let mut buf = Vec::new();
    for g in group.elements() {
        let vp = complex.vertex_permutation(g)?;
        for &c in &lifted {
            buf.clear();
            buf.extend(complex.vertices_of(c).iter().map(|&v| vp[v as usize]));
            seen.insert(complex.find(&buf).expect("chains map to chains"));
        }
    }
    let mut seen: Vec<CellId> = seen.into_iter().collect();
    seen.sort_unstable();
    if seen != sets.cn() {
        return Err(Error::PreconditionViolation(format!(
            "translates of the lifted chains give {} cells, expected {}",
            seen.len(),
            sets.cn().len()
        )));
    }
    Ok(())
}

/// The main matching pushed down to the orbit complex of a group fixing 1.
pub fn quotient_main_matching<'a>(level: &'a MainMatching, group: &PermGroup) -> Result<(QuotientComplex<'a>, Matching)> {
    if group.n() != level.n() {
        return Err(invalid_arg(format!(
            "group on [{}] for n = {}",
            group.n(),
            level.n()
        )));
    }
    if !group.fixes_point(1) {
        return Err(Error::PreconditionViolation("the group does not fix 1".into()));
    }
    let q = QuotientComplex::new(level.complex(), group)?;
    let m = quotient_matching(&q, level.matching())?;
    Ok((q, m))
}

/// `v_0⊕v_1+…+v_r`: size of the block of 1, then the other block sizes in
/// decreasing order.
pub fn number_partition_label_of(p: &Partition) -> String {
    let sizes = p.block_sizes();
    let mut rest = sizes[1..].to_vec();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let rest: Vec<String> = rest.iter().map(usize::to_string).collect();
    format!("{}⊕{}", sizes[0], rest.join("+"))
}

/// Label of a vertex of the orbit complex by all permutations fixing 1.
pub fn number_partition_label(q: &QuotientComplex<'_>, orbit: CellId) -> Result<String> {
    let n = q.base().n();
    let full = q.group().fixes_point(1) && q.group().order() == PermGroup::point_stabilizer(n).order();
    if !full {
        return Err(Error::Unsupported(
            "labels are defined for the orbit complex by all permutations fixing 1".into(),
        ));
    }
    if q.dim(orbit) != 0 {
        return Err(invalid_arg(format!("{} is not a vertex", q.describe(orbit))));
    }
    let v = q.base().vertices_of(q.representative(orbit))[0];
    Ok(number_partition_label_of(q.base().partition(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn special_sets_small() {
        let k3 = PartitionComplex::partition_nerve(3).unwrap();
        let s3 = SpecialSets::new(&k3).unwrap();
        assert_eq!(s3.a().len(), 2);
        assert_eq!(s3.cn().len(), 2);
        assert_eq!(k3.partition(s3.alpha()), &p("1|2,3"));
        assert!(!s3.a().contains(&s3.alpha()));
        let k4 = PartitionComplex::partition_nerve(4).unwrap();
        let s4 = SpecialSets::new(&k4).unwrap();
        assert_eq!(s4.a().len(), 6);
        assert_eq!(s4.cn().len(), 6);
        assert_eq!(k4.partition(s4.atom(3)), &p("1,3|2|4"));
    }

    #[test]
    fn phi_examples() {
        let k = PartitionComplex::partition_nerve(5).unwrap();
        let s = SpecialSets::new(&k).unwrap();
        assert_eq!(phi(&k, &s, CellId(s.alpha())), FiberLabel::Zero);
        let c = k.parse_chain("1,5|2|3|4 < 1,2,5|3|4").unwrap();
        assert_eq!(phi(&k, &s, c), FiberLabel::Atom(5));
        let c = k.parse_chain("1,2,3|4|5 < 1,2,3|4,5").unwrap();
        assert_eq!(phi(&k, &s, c), FiberLabel::Zero);
    }

    #[test]
    fn psi_examples() {
        let k4 = PartitionComplex::partition_nerve(4).unwrap();
        let k5 = PartitionComplex::partition_nerve(5).unwrap();
        let psi = Psi::new(&k4, &k5).unwrap();
        let a = psi.apply(k4.parse_chain("1,2|3|4").unwrap());
        assert_eq!(k5.format_cell(a), "1,5|2|3|4 < 1,2,5|3|4");
        let b = psi.apply(k4.parse_chain("1,2|3|4 < 1,2|3,4").unwrap());
        assert_eq!(k5.format_cell(b), "1,5|2|3|4 < 1,2,5|3|4 < 1,2,5|3,4");
        assert_eq!(k4.format_cell(psi.invert(b).unwrap()), "1,2|3|4 < 1,2|3,4");
        assert!(psi.invert(CellId(psi.top_atom())).is_err());
        assert!(psi.invert(k5.parse_chain("1,2|3|4|5").unwrap()).is_err());
    }

    #[test]
    fn restriction() {
        let g = Permutation::parse_cycles(5, "(2 3 4)").unwrap();
        assert_eq!(restrict_permutation(&g).unwrap().to_string(), "(2 3 4)");
        assert!(restrict_permutation(&Permutation::identity(5)).unwrap().is_identity());
        assert!(restrict_permutation(&Permutation::parse_cycles(5, "(4 5)").unwrap()).is_err());
        assert!(restrict_permutation(&Permutation::parse_cycles(5, "(1 2)").unwrap()).is_err());
    }

    #[test]
    fn main_matching_small_levels() {
        let tower = MatchingTower::build(5).unwrap();
        for (n, expected) in [(3, vec![3]), (4, vec![1, 6]), (5, vec![1, 0, 24])] {
            let level = tower.level(n).unwrap();
            assert_eq!(level.matching().critical_counts(level.complex()), expected);
            assert!(level.certify().unwrap().all());
            let fz = level.fiber_zero();
            assert_eq!(fz.critical_cells().iter().filter(|&&c| phi(level.complex(), level.sets(), c) == FiberLabel::Zero).count(), 1);
        }
    }

    #[test]
    fn labels() {
        assert_eq!(number_partition_label_of(&alpha(4)), "1⊕3");
        assert_eq!(number_partition_label_of(&p("1,2|3|4")), "2⊕1+1");
        assert_eq!(number_partition_label_of(&p("1,2|3,4")), "2⊕2");
        let level = build_main_matching(4).unwrap();
        let g = level.group();
        let (q, m) = quotient_main_matching(&level, &g).unwrap();
        let crit = m.critical_cells();
        assert_eq!(crit.len(), 2);
        assert_eq!(number_partition_label(&q, crit[0]).unwrap(), "1⊕3");
        let t = PermGroup::trivial(4);
        let (qt, mt) = quotient_main_matching(&level, &t).unwrap();
        assert_eq!(mt.critical_cells().len(), 7);
        assert!(matches!(number_partition_label(&qt, CellId(0)), Err(Error::Unsupported(_))));
        assert!(matches!(
            quotient_main_matching(&level, &PermGroup::symmetric(4)),
            Err(Error::PreconditionViolation(_))
        ));
    }
}
