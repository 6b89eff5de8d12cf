//! Acyclic matchings on face posets and the discrete Morse machinery built
//! on them.
//!
//! A [`Matching`] pairs a cell with one of its codimension-1 cofaces. It is
//! acyclic when the face digraph, with every matched edge reversed, has no
//! directed cycle. Any such cycle alternates between two consecutive
//! dimensions, so acyclicity is decided one dimension pair at a time.

mod collapse;
mod flow;
mod patchwork;

pub use collapse::{closure_matching, cone_matching};
pub use flow::{cohomology_representatives, morse_data, pairing_matrix, Cochain, MorseData};
pub use patchwork::{equivariant_patchwork, patchwork, transport_is_well_defined, TargetAction};

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{CellComplex, CellId, PartitionComplex};
use crate::error::{Error, Result};
use crate::perm::{CellAction, PermGroup, QuotientComplex};

const NONE: u32 = u32::MAX;

/// A partial matching on the cells of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    up: Vec<u32>,
    down: Vec<u32>,
}

impl Matching {
    /// The empty matching on a complex with `cell_count` cells.
    pub fn new(cell_count: usize) -> Self {
        Self {
            up: vec![NONE; cell_count],
            down: vec![NONE; cell_count],
        }
    }

    pub fn cell_count(&self) -> usize {
        self.up.len()
    }

    /// Pairs `lower` with its coface `upper`. Fails if either cell is out of
    /// range or already matched. Incidence is checked by [`validate_matching`].
    pub fn insert(&mut self, lower: CellId, upper: CellId) -> Result<()> {
        let n = self.cell_count();
        if lower.index() >= n || upper.index() >= n {
            return Err(Error::InvalidMatching(format!(
                "pair ({}, {}) references a cell outside 0..{n}",
                lower.0, upper.0
            )));
        }
        if lower == upper {
            return Err(Error::InvalidMatching(format!("cell {} paired with itself", lower.0)));
        }
        for c in [lower, upper] {
            if self.is_matched(c) {
                return Err(Error::InvalidMatching(format!("cell {} is already matched", c.0)));
            }
        }
        self.up[lower.index()] = upper.0;
        self.down[upper.index()] = lower.0;
        Ok(())
    }

    /// The coface `lower` is matched with, if any.
    pub fn up(&self, lower: CellId) -> Option<CellId> {
        let v = self.up[lower.index()];
        (v != NONE).then_some(CellId(v))
    }

    /// The face `upper` is matched with, if any.
    pub fn down(&self, upper: CellId) -> Option<CellId> {
        let v = self.down[upper.index()];
        (v != NONE).then_some(CellId(v))
    }

    pub fn partner(&self, c: CellId) -> Option<CellId> {
        self.up(c).or_else(|| self.down(c))
    }

    pub fn is_matched(&self, c: CellId) -> bool {
        self.up[c.index()] != NONE || self.down[c.index()] != NONE
    }

    pub fn contains(&self, lower: CellId, upper: CellId) -> bool {
        self.up[lower.index()] == upper.0
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.up.iter().filter(|&&v| v != NONE).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs `(lower, upper)` ordered by the lower cell.
    pub fn pairs(&self) -> Vec<(CellId, CellId)> {
        self.up
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != NONE)
            .map(|(c, &v)| (CellId::from(c), CellId(v)))
            .collect()
    }

    /// Unmatched cells, ascending.
    pub fn critical_cells(&self) -> Vec<CellId> {
        (0..self.cell_count())
            .map(CellId::from)
            .filter(|&c| !self.is_matched(c))
            .collect()
    }

    /// Unmatched cells grouped by dimension.
    pub fn critical_by_dim<C: CellComplex + ?Sized>(&self, complex: &C) -> Vec<Vec<CellId>> {
        let top = complex.top_dim().map_or(0, |t| t + 1);
        (0..top)
            .map(|d| {
                complex
                    .cells_of_dim(d)
                    .map(CellId::from)
                    .filter(|&c| !self.is_matched(c))
                    .collect()
            })
            .collect()
    }

    pub fn critical_counts<C: CellComplex + ?Sized>(&self, complex: &C) -> Vec<usize> {
        self.critical_by_dim(complex).iter().map(Vec::len).collect()
    }

    /// Adds every pair of `other`, failing on conflicts.
    pub fn extend(&mut self, other: &Matching) -> Result<()> {
        if other.cell_count() != self.cell_count() {
            return Err(Error::InvalidMatching("matchings on different complexes".into()));
        }
        for (a, b) in other.pairs() {
            self.insert(a, b)?;
        }
        Ok(())
    }
}

/// Outcome of [`validate_matching`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub is_matching: bool,
    pub is_acyclic: bool,
    pub critical_counts: Vec<usize>,
    /// Cells of a directed cycle `b_0 → a_1 → b_1 → …` when not acyclic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cycle: Option<Vec<CellId>>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.is_matching && self.is_acyclic
    }
}

/// Checks that every pair is a codimension-1 incidence and that the
/// modified face digraph has no directed cycle.
pub fn validate_matching<C: CellComplex + ?Sized>(complex: &C, m: &Matching) -> Result<Certificate> {
    if m.cell_count() != complex.cell_count() {
        return Err(Error::InvalidMatching(format!(
            "matching on {} cells, complex has {}",
            m.cell_count(),
            complex.cell_count()
        )));
    }
    let mut is_matching = true;
    for (a, b) in m.pairs() {
        let incident = complex.dim(b) == complex.dim(a) + 1
            && complex.faces(b).iter().any(|&(f, _)| f == a);
        is_matching &= incident;
    }
    let mut witness = None;
    if let Some(top) = complex.top_dim() {
        for d in 0..top {
            if let Some(cycle) = find_cycle(complex, m, d) {
                witness = Some(cycle);
                break;
            }
        }
    }
    Ok(Certificate {
        is_matching,
        is_acyclic: witness.is_none(),
        critical_counts: m.critical_counts(complex),
        witness_cycle: witness,
    })
}

/// Searches the digraph on cells of dimensions `d` and `d + 1` for a
/// directed cycle by iterative depth-first search.
fn find_cycle<C: CellComplex + ?Sized>(complex: &C, m: &Matching, d: usize) -> Option<Vec<CellId>> {
    let lower = complex.cells_of_dim(d);
    let upper = complex.cells_of_dim(d + 1);
    let base = lower.start;
    let size = upper.end - base;
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; size];
    let successors = |c: CellId| -> Vec<CellId> {
        if complex.dim(c) == d {
            match m.up(c) {
                Some(b) if complex.dim(b) == d + 1 => vec![b],
                _ => Vec::new(),
            }
        } else {
            let matched = m.down(c);
            let mut out: Vec<CellId> = complex
                .faces(c)
                .into_iter()
                .map(|(f, _)| f)
                .filter(|&f| Some(f) != matched)
                .collect();
            out.dedup();
            out
        }
    };
    for start in base..upper.end {
        if state[start - base] != 0 {
            continue;
        }
        let mut stack: Vec<(CellId, Vec<CellId>, usize)> = Vec::new();
        let s = CellId::from(start);
        state[start - base] = 1;
        stack.push((s, successors(s), 0));
        while let Some((node, succ, next)) = stack.last_mut() {
            if *next < succ.len() {
                let t = succ[*next];
                *next += 1;
                let ti = t.index() - base;
                match state[ti] {
                    0 => {
                        state[ti] = 1;
                        let st = successors(t);
                        stack.push((t, st, 0));
                    }
                    1 => {
                        let pos = stack.iter().position(|(c, _, _)| *c == t).unwrap();
                        let mut cycle: Vec<CellId> = stack[pos..].iter().map(|(c, _, _)| *c).collect();
                        cycle.push(t);
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[node.index() - base] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// `true` iff every generator of the action maps pairs to pairs. For a
/// finite group this is equivalent to invariance under every element.
pub fn check_equivariance(m: &Matching, action: &CellAction) -> bool {
    let pairs = m.pairs();
    action.generator_tables().iter().all(|table| {
        pairs
            .iter()
            .all(|&(a, b)| m.contains(table[a.index()], table[b.index()]))
    })
}

/// Equivariance checked against every element of `group`, not just its
/// generators.
pub fn check_equivariance_exhaustive(
    complex: &PartitionComplex,
    m: &Matching,
    group: &PermGroup,
) -> Result<bool> {
    let pairs = m.pairs();
    for g in group.elements() {
        let table = complex.cell_permutation(g)?;
        if !pairs
            .iter()
            .all(|&(a, b)| m.contains(table[a.index()], table[b.index()]))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The matching `M/H` on the orbit complex, for a matching invariant under
/// the quotient's group.
pub fn quotient_matching(q: &QuotientComplex<'_>, m: &Matching) -> Result<Matching> {
    if m.cell_count() != q.base().num_cells() {
        return Err(Error::InvalidMatching("matching is not on the base complex".into()));
    }
    if !check_equivariance(m, q.action()) {
        return Err(Error::PreconditionViolation(
            "matching is not invariant under the quotient group".into(),
        ));
    }
    let mut out = Matching::new(q.cell_count());
    for (a, b) in m.pairs() {
        let (qa, qb) = (q.orbit_of(a), q.orbit_of(b));
        if out.contains(qa, qb) {
            continue;
        }
        out.insert(qa, qb)?;
    }
    let cert = validate_matching(q, &out)?;
    if !cert.is_valid() {
        return Err(Error::InvalidMatching(format!(
            "quotient matching fails validation: {cert:?}"
        )));
    }
    Ok(out)
}

/// One line per pair: `LOWER -> UPPER` in the cells' text form.
pub fn dump_matching<C: CellComplex + ?Sized>(complex: &C, m: &Matching) -> String {
    let mut out = String::new();
    for (a, b) in m.pairs() {
        let _ = writeln!(out, "{} -> {}", complex.describe(a), complex.describe(b));
    }
    out
}

/// Reads a dump produced by [`dump_matching`] on a partition nerve.
pub fn parse_matching_dump(complex: &PartitionComplex, text: &str) -> Result<Matching> {
    let mut m = Matching::new(complex.num_cells());
    let mut seen = HashSet::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Parse {
            position: lineno,
            message: "expected 'A -> B'".into(),
        })?;
        let a = complex.parse_chain(lhs.trim())?;
        let b = complex.parse_chain(rhs.trim())?;
        if !seen.insert((a, b)) {
            continue;
        }
        m.insert(a, b)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ExplicitComplex;

    #[test]
    fn empty_matching_is_acyclic() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let m = Matching::new(k.num_cells());
        let cert = validate_matching(&k, &m).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.critical_counts, vec![13, 18]);
    }

    #[test]
    fn single_pair() {
        let c = ExplicitComplex::new(&[vec![0, 1]]);
        let a = c.find(&[0]).unwrap();
        let b = c.find(&[1]).unwrap();
        let ab = c.find(&[0, 1]).unwrap();
        let mut m = Matching::new(c.cell_count());
        m.insert(a, ab).unwrap();
        let cert = validate_matching(&c, &m).unwrap();
        assert!(cert.is_valid());
        assert_eq!(m.critical_cells(), vec![b]);
        assert!(m.insert(b, ab).is_err());
    }

    #[test]
    fn triangle_boundary_cycle_is_detected() {
        let c = ExplicitComplex::new(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let id = |v: &[usize]| c.find(v).unwrap();
        let mut m = Matching::new(c.cell_count());
        m.insert(id(&[0]), id(&[0, 1])).unwrap();
        m.insert(id(&[1]), id(&[1, 2])).unwrap();
        m.insert(id(&[2]), id(&[0, 2])).unwrap();
        let cert = validate_matching(&c, &m).unwrap();
        assert!(cert.is_matching);
        assert!(!cert.is_acyclic);
        let w = cert.witness_cycle.unwrap();
        assert_eq!(w.first(), w.last());
        assert_eq!(w.len(), 7);
        // consecutive cells follow digraph edges
        for pair in w.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            if c.dim(x) == 0 {
                assert_eq!(m.up(x), Some(y));
            } else {
                assert!(c.faces(x).iter().any(|&(f, _)| f == y));
                assert_ne!(m.down(x), Some(y));
            }
        }
    }

    #[test]
    fn non_incident_pair_is_not_a_matching() {
        let c = ExplicitComplex::new(&[vec![0, 1], vec![2]]);
        let mut m = Matching::new(c.cell_count());
        m.insert(c.find(&[2]).unwrap(), c.find(&[0, 1]).unwrap()).unwrap();
        let cert = validate_matching(&c, &m).unwrap();
        assert!(!cert.is_matching);
    }

    #[test]
    fn dangling_ids_rejected() {
        let c = ExplicitComplex::new(&[vec![0, 1]]);
        let m = Matching::new(2);
        assert!(matches!(validate_matching(&c, &m), Err(Error::InvalidMatching(_))));
        let mut m = Matching::new(3);
        assert!(m.insert(CellId(0), CellId(7)).is_err());
    }

    #[test]
    fn equivariance_trivial_cases() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let empty = Matching::new(k.num_cells());
        let g = PermGroup::point_stabilizer(4);
        assert!(check_equivariance(&empty, &k.cell_action(&g).unwrap()));
        let mut m = Matching::new(k.num_cells());
        let a = k.parse_chain("1,2|3|4").unwrap();
        let b = k.parse_chain("1,2|3|4 < 1,2|3,4").unwrap();
        m.insert(a, b).unwrap();
        assert!(check_equivariance(&m, &k.cell_action(&PermGroup::trivial(4)).unwrap()));
        assert!(!check_equivariance(&m, &k.cell_action(&g).unwrap()));
        assert!(!check_equivariance_exhaustive(&k, &m, &g).unwrap());
    }

    #[test]
    fn dump_round_trip() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let mut m = Matching::new(k.num_cells());
        m.insert(
            k.parse_chain("1,2|3|4").unwrap(),
            k.parse_chain("1,2|3|4 < 1,2|3,4").unwrap(),
        )
        .unwrap();
        let text = dump_matching(&k, &m);
        assert_eq!(text, "1,2|3|4 -> 1,2|3|4 < 1,2|3,4\n");
        assert_eq!(parse_matching_dump(&k, &text).unwrap(), m);
    }
}
