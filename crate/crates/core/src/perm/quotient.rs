use std::ops::Range;

use crate::complex::{CellComplex, CellId, PartitionComplex};
use crate::error::Result;
use crate::perm::{CellAction, PermGroup};

/// The orbit complex `Δ/H` of a nerve under a permutation group.
///
/// Cells are orbits of chains, indexed in increasing order of their smallest
/// member; the faces of an orbit are the orbits of the faces of any member.
/// This is well defined because a group element mapping a chain to itself
/// fixes it vertex by vertex, so face positions are preserved.
#[derive(Clone, Debug)]
pub struct QuotientComplex<'a> {
    base: &'a PartitionComplex,
    group: PermGroup,
    action: CellAction,
    orbit_of: Vec<u32>,
    reps: Vec<CellId>,
    orbit_sizes: Vec<u32>,
    dim_start: Vec<usize>,
}

impl<'a> QuotientComplex<'a> {
    pub fn new(base: &'a PartitionComplex, group: &PermGroup) -> Result<Self> {
        let action = base.cell_action(group)?;
        let (orbit_of, reps) = action.orbits(base.num_cells());
        let mut orbit_sizes = vec![0u32; reps.len()];
        for &o in &orbit_of {
            orbit_sizes[o as usize] += 1;
        }
        let top = base.top_dim().unwrap_or(0);
        let mut dim_start = Vec::with_capacity(top + 2);
        for d in 0..=top + 1 {
            let start = base.cells_of_dim(d).start;
            dim_start.push(reps.partition_point(|r| r.index() < start));
        }
        Ok(Self {
            base,
            group: group.clone(),
            action,
            orbit_of,
            reps,
            orbit_sizes,
            dim_start,
        })
    }

    pub fn base(&self) -> &'a PartitionComplex {
        self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn action(&self) -> &CellAction {
        &self.action
    }

    /// The orbit cell containing a base cell.
    pub fn orbit_of(&self, cell: CellId) -> CellId {
        CellId(self.orbit_of[cell.index()])
    }

    /// Smallest base cell in an orbit.
    pub fn representative(&self, orbit: CellId) -> CellId {
        self.reps[orbit.index()]
    }

    pub fn orbit_size(&self, orbit: CellId) -> usize {
        self.orbit_sizes[orbit.index()] as usize
    }

    /// Counts pairs `(g, σ)` where `g` maps the chain `σ` onto itself as a
    /// vertex set without fixing each vertex. Always zero for an action by
    /// poset automorphisms; exposed for verification.
    pub fn pointwise_fixing_violations(&self) -> Result<usize> {
        let mut violations = 0;
        for g in self.group.elements() {
            let vp = self.base.vertex_permutation(g)?;
            for c in self.base.cells() {
                let verts = self.base.vertices_of(c);
                let mut image: Vec<u32> = verts.iter().map(|&v| vp[v as usize]).collect();
                let in_order = image.as_slice() == verts;
                image.sort_unstable();
                let mut sorted = verts.to_vec();
                sorted.sort_unstable();
                if image == sorted && !in_order {
                    violations += 1;
                }
            }
        }
        Ok(violations)
    }
}

impl CellComplex for QuotientComplex<'_> {
    fn cell_count(&self) -> usize {
        self.reps.len()
    }

    fn dim(&self, cell: CellId) -> usize {
        self.base.dim(self.reps[cell.index()])
    }

    fn top_dim(&self) -> Option<usize> {
        self.base.top_dim()
    }

    fn cells_of_dim(&self, d: usize) -> Range<usize> {
        let end = self.reps.len();
        if d + 1 >= self.dim_start.len() {
            return end..end;
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    fn faces(&self, cell: CellId) -> Vec<(CellId, i64)> {
        self.base
            .faces(self.reps[cell.index()])
            .into_iter()
            .map(|(f, s)| (self.orbit_of(f), s))
            .collect()
    }

    fn describe(&self, cell: CellId) -> String {
        format!("[{}]", self.base.format_cell(self.reps[cell.index()]))
    }
}
