//! Morse complex of an acyclic matching.
//!
//! For a critical `d`-cell `c` the cycle representative is built by
//! repeatedly cancelling, in the boundary of the running chain, every
//! `(d−1)`-cell that is matched upward: its coface is subtracted with the
//! coefficient that kills the entry. Processing `(d−1)`-cells in a
//! topological order of the gradient relation (`a → a'` when `a'` is a face
//! of the partner of `a`) touches each one at most once. What is left on the
//! critical `(d−1)`-cells is the Morse boundary of `c`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::homology::ChainComplex;
use crate::matrix::SparseMatrix;
use crate::morse::{validate_matching, Matching};

/// Sparse integer chain or cochain, sorted by cell.
pub type Cochain = Vec<(CellId, i64)>;

#[derive(Clone, Debug)]
pub struct MorseData {
    critical: Vec<Vec<CellId>>,
    // boundaries[d - 1]: critical d-cells -> critical (d-1)-cells
    boundaries: Vec<SparseMatrix>,
    cycle_reps: Vec<Vec<Cochain>>,
}

impl MorseData {
    /// Critical cells of dimension `d`, ascending.
    pub fn critical(&self, d: usize) -> &[CellId] {
        self.critical.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn critical_counts(&self) -> Vec<usize> {
        self.critical.iter().map(Vec::len).collect()
    }

    /// Morse boundary `∂_d`, rows and columns indexed like [`Self::critical`].
    pub fn boundary(&self, d: usize) -> Option<&SparseMatrix> {
        d.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    /// The chain in the original complex that the critical cell `k` of
    /// dimension `d` flows to. It is a cycle whenever the Morse boundary of
    /// that cell vanishes.
    pub fn cycle_representative(&self, d: usize, k: usize) -> &Cochain {
        &self.cycle_reps[d][k]
    }

    pub fn chain_complex(&self) -> Result<ChainComplex> {
        ChainComplex::new(self.critical_counts(), self.boundaries.clone())
    }
}

fn overflow() -> Error {
    Error::InvalidComplex("coefficient overflow in gradient flow".into())
}

fn add_scaled(map: &mut HashMap<CellId, i64>, cell: CellId, delta: i64) -> Result<()> {
    let e = map.entry(cell).or_insert(0);
    *e = e.checked_add(delta).ok_or_else(overflow)?;
    Ok(())
}

fn incidence<C: CellComplex + ?Sized>(complex: &C, upper: CellId, lower: CellId) -> i64 {
    complex
        .boundary(upper)
        .iter()
        .find(|&&(f, _)| f == lower)
        .map_or(0, |&(_, s)| s)
}

/// Critical cells, Morse boundary maps and cycle representatives of an
/// acyclic matching. Every matched pair must have incidence `±1`.
pub fn morse_data<C: CellComplex + ?Sized>(complex: &C, m: &Matching) -> Result<MorseData> {
    let cert = validate_matching(complex, m)?;
    if !cert.is_valid() {
        return Err(Error::PreconditionViolation(
            "the matching is not an acyclic matching of the complex".into(),
        ));
    }
    let mut weight = vec![0i64; complex.cell_count()];
    for (a, b) in m.pairs() {
        let w = incidence(complex, b, a);
        if w.abs() != 1 {
            return Err(Error::PreconditionViolation(format!(
                "matched pair {} -> {} has incidence {w}",
                complex.describe(a),
                complex.describe(b)
            )));
        }
        weight[a.index()] = w;
    }
    let critical = m.critical_by_dim(complex);
    let top = critical.len();
    let mut boundaries = Vec::with_capacity(top.saturating_sub(1));
    let mut cycle_reps = Vec::with_capacity(top);
    cycle_reps.push(critical.first().map_or(Vec::new(), |cs| {
        cs.iter().map(|&c| vec![(c, 1)]).collect()
    }));
    for d in 1..top {
        let rank = topological_rank(complex, m, d - 1);
        let position: HashMap<CellId, u32> = critical[d - 1]
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        let mut columns = Vec::with_capacity(critical[d].len());
        let mut reps = Vec::with_capacity(critical[d].len());
        for &c in &critical[d] {
            let (chain, bd) = flow(complex, m, &weight, &rank, c)?;
            let mut col: Vec<(u32, i64)> = bd
                .into_iter()
                .filter_map(|(f, s)| position.get(&f).map(|&i| (i, s)))
                .collect();
            col.sort_unstable();
            columns.push(col);
            reps.push(chain);
        }
        boundaries.push(SparseMatrix::from_columns(critical[d - 1].len(), columns));
        cycle_reps.push(reps);
    }
    Ok(MorseData {
        critical,
        boundaries,
        cycle_reps,
    })
}

/// Position of every `d`-cell in a topological order of the gradient
/// relation; indexed by `cell - first cell of dimension d`.
fn topological_rank<C: CellComplex + ?Sized>(complex: &C, m: &Matching, d: usize) -> Vec<u32> {
    let range = complex.cells_of_dim(d);
    let base = range.start;
    let len = range.len();
    let successors = |a: CellId| -> Vec<CellId> {
        match m.up(a) {
            Some(b) => complex
                .faces(b)
                .into_iter()
                .map(|(f, _)| f)
                .filter(|&f| f != a)
                .collect(),
            None => Vec::new(),
        }
    };
    let mut indegree = vec![0u32; len];
    for a in range.clone() {
        for f in successors(CellId::from(a)) {
            indegree[f.index() - base] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..len).filter(|&i| indegree[i] == 0).collect();
    let mut rank = vec![0u32; len];
    let mut next = 0u32;
    while let Some(i) = queue.pop() {
        rank[i] = next;
        next += 1;
        for f in successors(CellId::from(base + i)) {
            let j = f.index() - base;
            indegree[j] -= 1;
            if indegree[j] == 0 {
                queue.push(j);
            }
        }
    }
    debug_assert_eq!(next as usize, len, "gradient relation of an acyclic matching has a cycle");
    rank
}

type Flowed = (Cochain, Vec<(CellId, i64)>);

fn flow<C: CellComplex + ?Sized>(
    complex: &C,
    m: &Matching,
    weight: &[i64],
    rank: &[u32],
    c: CellId,
) -> Result<Flowed> {
    let base = complex.cells_of_dim(complex.dim(c) - 1).start;
    let mut chain: HashMap<CellId, i64> = HashMap::from([(c, 1)]);
    let mut bd: HashMap<CellId, i64> = HashMap::new();
    let mut heap = BinaryHeap::new();
    for (f, s) in complex.boundary(c) {
        add_scaled(&mut bd, f, s)?;
        heap.push(Reverse((rank[f.index() - base], f)));
    }
    while let Some(Reverse((_, a))) = heap.pop() {
        let coef = bd.get(&a).copied().unwrap_or(0);
        if coef == 0 {
            continue;
        }
        let Some(b) = m.up(a) else { continue };
        // weight is ±1, so coef·weight cancels the entry at a
        let t = coef.checked_mul(weight[a.index()]).ok_or_else(overflow)?;
        add_scaled(&mut chain, b, -t)?;
        for (f, s) in complex.boundary(b) {
            add_scaled(&mut bd, f, -t.checked_mul(s).ok_or_else(overflow)?)?;
            if f != a {
                heap.push(Reverse((rank[f.index() - base], f)));
            }
        }
    }
    let mut chain: Cochain = chain.into_iter().filter(|&(_, s)| s != 0).collect();
    chain.sort_unstable();
    let mut rest: Vec<(CellId, i64)> = bd.into_iter().filter(|&(_, s)| s != 0).collect();
    rest.sort_unstable();
    Ok((chain, rest))
}

/// Cocycle representatives for the critical cells of dimension `d`, as
/// signed counts of gradient paths `σ ↘ a ↗ b ↘ … ↗ c` from a `d`-cell `σ` to
/// the critical cell `c`. Only the top dimension is supported; there every
/// cochain is a cocycle.
pub fn cohomology_representatives<C: CellComplex + ?Sized>(
    complex: &C,
    m: &Matching,
    d: usize,
) -> Result<Vec<Cochain>> {
    if complex.top_dim() != Some(d) {
        return Err(Error::Unsupported(format!(
            "cohomology representatives are only computed in the top dimension, not {d}"
        )));
    }
    let cert = validate_matching(complex, m)?;
    if !cert.is_valid() {
        return Err(Error::PreconditionViolation(
            "the matching is not an acyclic matching of the complex".into(),
        ));
    }
    let range = complex.cells_of_dim(d);
    let base = range.start;
    // gradient steps out of each d-cell: (next d-cell, weight)
    let steps: Vec<Vec<(CellId, i64)>> = range
        .clone()
        .map(|s| {
            let sigma = CellId::from(s);
            complex
                .boundary(sigma)
                .into_iter()
                .filter_map(|(a, s_sa)| {
                    let b = m.up(a)?;
                    (b != sigma).then(|| (b, -s_sa * incidence(complex, b, a)))
                })
                .collect()
        })
        .collect();
    let order = {
        // reverse topological order of the step relation, sinks first
        let mut order = Vec::with_capacity(range.len());
        let mut state = vec![0u8; range.len()];
        for s in 0..range.len() {
            if state[s] != 0 {
                continue;
            }
            let mut stack = vec![(s, 0usize)];
            state[s] = 1;
            while let Some((node, next)) = stack.last_mut() {
                let node_v = *node;
                if *next < steps[node_v].len() {
                    let t = steps[node_v][*next].0.index() - base;
                    *next += 1;
                    if state[t] == 0 {
                        state[t] = 1;
                        stack.push((t, 0));
                    }
                } else {
                    state[node_v] = 2;
                    order.push(node_v);
                    stack.pop();
                }
            }
        }
        order
    };
    let criticals: Vec<CellId> = range.clone().map(CellId::from).filter(|&c| !m.is_matched(c)).collect();
    let mut out = Vec::with_capacity(criticals.len());
    for &c in &criticals {
        let mut value = vec![0i64; range.len()];
        for &s in &order {
            let mut v = i64::from(s + base == c.index());
            for &(b, w) in &steps[s] {
                let term = w.checked_mul(value[b.index() - base]).ok_or_else(overflow)?;
                v = v.checked_add(term).ok_or_else(overflow)?;
            }
            value[s] = v;
        }
        out.push(
            value
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v != 0)
                .map(|(i, &v)| (CellId::from(base + i), v))
                .collect(),
        );
    }
    Ok(out)
}

/// Matrix of evaluations `⟨z_i, r_j⟩` of cochains on chains.
pub fn pairing_matrix(cochains: &[Cochain], chains: &[Cochain]) -> Vec<Vec<i64>> {
    cochains
        .iter()
        .map(|z| {
            let zmap: HashMap<CellId, i64> = z.iter().copied().collect();
            chains
                .iter()
                .map(|r| r.iter().map(|(c, s)| zmap.get(c).map_or(0, |v| v * s)).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ExplicitComplex, PartitionComplex};
    use crate::homology::{determinant, verify_wedge};
    use crate::morse::cone_matching;

    fn circle_matching() -> (ExplicitComplex, Matching) {
        let c = ExplicitComplex::new(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let id = |v: &[usize]| c.find(v).unwrap();
        let mut m = Matching::new(c.cell_count());
        m.insert(id(&[1]), id(&[0, 1])).unwrap();
        m.insert(id(&[2]), id(&[1, 2])).unwrap();
        (c, m)
    }

    #[test]
    fn circle_flows_to_its_fundamental_cycle() {
        let (c, m) = circle_matching();
        let md = morse_data(&c, &m).unwrap();
        assert_eq!(md.critical_counts(), vec![1, 1]);
        assert!(md.boundary(1).unwrap().is_zero());
        let rep = md.cycle_representative(1, 0);
        assert_eq!(rep.len(), 3);
        let cc = ChainComplex::of(&c);
        let bd = cc.boundary(1).unwrap();
        let mut acc = vec![0i64; 3];
        for &(e, s) in rep {
            let col = e.index() - c.cells_of_dim(1).start;
            for &(r, v) in bd.column(col) {
                acc[r as usize] += v * s;
            }
        }
        assert!(acc.iter().all(|&x| x == 0));
        let z = cohomology_representatives(&c, &m, 1).unwrap();
        let p = pairing_matrix(&z, &[rep.clone()]);
        assert_eq!(determinant(&p).magnitude().to_string(), "1");
    }

    #[test]
    fn partial_cone_preserves_homology() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        // cone on the partitions joining 1 and 2, all above 12|3|4
        let mask: Vec<bool> = (0..k.poset().len() as u32)
            .map(|v| k.partition(v).same_block(1, 2))
            .collect();
        let apex = k.vertex_of(&"1,2|3|4".parse().unwrap()).unwrap();
        let m = cone_matching(&k, Some(&mask), apex).unwrap();
        assert!(validate_matching(&k, &m).unwrap().is_valid());
        let md = morse_data(&k, &m).unwrap();
        let h = md.chain_complex().unwrap().reduced_homology();
        assert_eq!(h, ChainComplex::of(&k).reduced_homology());
        assert!(verify_wedge(&h, 1, 6));
    }

    #[test]
    fn rejects_cyclic_and_non_top() {
        let (c, m) = circle_matching();
        assert!(matches!(
            cohomology_representatives(&c, &m, 0),
            Err(Error::Unsupported(_))
        ));
        let id = |v: &[usize]| c.find(v).unwrap();
        let mut bad = m.clone();
        bad.insert(id(&[0]), id(&[0, 2])).unwrap();
        assert!(matches!(morse_data(&c, &bad), Err(Error::PreconditionViolation(_))));
    }
}
