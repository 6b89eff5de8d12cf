//! Order complexes (nerves) of finite posets, stored explicitly.
//!
//! Cells are the nonempty chains `x_0 < … < x_d` of the ground poset. They
//! are kept grouped by dimension and sorted lexicographically by vertex id
//! within each dimension; a cell's [`CellId`] is its position in that global
//! order. The empty chain (the bottom of the face poset) is never stored.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::Range;

use crate::error::{invalid_arg, Error, Result};
use crate::matrix::SparseMatrix;
use crate::setpart::{enumerate_proper, Partition};

/// Index of a cell in a [`CellComplex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct CellId(pub u32);

impl CellId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for CellId {
    fn from(i: usize) -> Self {
        CellId(i as u32)
    }
}

/// A finite regular cell complex given by its cells and signed face lists.
///
/// Implementors store cells contiguously by dimension: the cells of
/// dimension `d` occupy the id range [`cells_of_dim(d)`](Self::cells_of_dim).
pub trait CellComplex {
    fn cell_count(&self) -> usize;

    fn dim(&self, cell: CellId) -> usize;

    /// Highest dimension carrying a cell, `None` for the empty complex.
    fn top_dim(&self) -> Option<usize>;

    fn cells_of_dim(&self, d: usize) -> Range<usize>;

    /// The codimension-1 faces of `cell` by position, with sign `(-1)^i`.
    /// A face may repeat when distinct positions are identified.
    fn faces(&self, cell: CellId) -> Vec<(CellId, i64)>;

    /// Human-readable form of a cell.
    fn describe(&self, cell: CellId) -> String;

    /// Cellular boundary with coefficients of repeated faces summed.
    fn boundary(&self, cell: CellId) -> Vec<(CellId, i64)> {
        let mut acc: Vec<(CellId, i64)> = Vec::new();
        for (f, s) in self.faces(cell) {
            match acc.iter_mut().find(|(g, _)| *g == f) {
                Some(entry) => entry.1 += s,
                None => acc.push((f, s)),
            }
        }
        acc.retain(|&(_, s)| s != 0);
        acc.sort_unstable();
        acc
    }

    fn f_vector(&self) -> Vec<usize> {
        match self.top_dim() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.cells_of_dim(d).len()).collect(),
        }
    }

    fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Matrix of `∂_d`: one column per `d`-cell, one row per `(d-1)`-cell,
    /// both in cell order.
    fn boundary_matrix(&self, d: usize) -> Result<SparseMatrix> {
        let top = self.top_dim().unwrap_or(0);
        if d == 0 || d > top.max(1) {
            return Err(invalid_arg(format!(
                "boundary dimension {d} outside 1..={}",
                top.max(1)
            )));
        }
        let rows = self.cells_of_dim(d - 1);
        let cols = self
            .cells_of_dim(d)
            .map(|c| {
                self.boundary(CellId::from(c))
                    .into_iter()
                    .map(|(f, s)| ((f.index() - rows.start) as u32, s))
                    .collect()
            })
            .collect();
        Ok(SparseMatrix::from_columns(rows.len(), cols))
    }
}

/// A chain of a poset, as strictly increasing vertex ids of its ground poset
/// listed from bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Simplex(Box<[u32]>);

impl Simplex {
    pub fn new(vertices: Vec<u32>) -> Self {
        Simplex(vertices.into())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Dimension; the empty chain reports `-1`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(&v)
    }

    /// The `i`-th entry is the chain with vertex `i` removed, signed `(-1)^i`.
    /// A single vertex has no faces here.
    pub fn faces(&self) -> Vec<(Simplex, i64)> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.to_vec();
                v.remove(i);
                (Simplex::new(v), if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }
}

/// A finite poset with a dense strict-order table.
#[derive(Clone, Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    less: Vec<bool>,
    up: Vec<Vec<u32>>,
    index: HashMap<T, u32>,
}

impl<T: Clone + Eq + Hash> FinitePoset<T> {
    /// Builds the poset from its elements and a strict order predicate,
    /// validating that the predicate is a strict partial order.
    pub fn new(elements: Vec<T>, less: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let m = elements.len();
        let mut table = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = less(&elements[i], &elements[j]);
            }
        }
        Self::from_table(elements, table)
    }

    /// Builds the poset from explicit strict relations `(a, b)` meaning
    /// `elements[a] < elements[b]`. The relation must already be transitive.
    pub fn from_relations(elements: Vec<T>, relations: &[(usize, usize)]) -> Result<Self> {
        let m = elements.len();
        let mut table = vec![false; m * m];
        for &(a, b) in relations {
            if a >= m || b >= m {
                return Err(Error::InvalidPoset(format!("relation ({a}, {b}) out of range")));
            }
            table[a * m + b] = true;
        }
        Self::from_table(elements, table)
    }

    fn from_table(elements: Vec<T>, table: Vec<bool>) -> Result<Self> {
        let m = elements.len();
        let mut index = HashMap::with_capacity(m);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i as u32).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element at {i}")));
            }
        }
        let up: Vec<Vec<u32>> = (0..m)
            .map(|i| (0..m).filter(|&j| table[i * m + j]).map(|j| j as u32).collect())
            .collect();
        for i in 0..m {
            if table[i * m + i] {
                return Err(Error::InvalidPoset(format!("element {i} is below itself")));
            }
            for &j in &up[i] {
                let j = j as usize;
                if table[j * m + i] {
                    return Err(Error::InvalidPoset(format!(
                        "elements {i} and {j} are mutually below each other"
                    )));
                }
                for &k in &up[j] {
                    if !table[i * m + k as usize] {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive: {i} < {j} < {k} but not {i} < {k}"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            elements,
            less: table,
            up,
            index,
        })
    }
}

impl<T> FinitePoset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &T {
        &self.elements[i as usize]
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        self.less[a as usize * self.elements.len() + b as usize]
    }

    pub fn le(&self, a: u32, b: u32) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: u32, b: u32) -> bool {
        self.le(a, b) || self.less(b, a)
    }

    /// Elements strictly above `a`, ascending by id.
    pub fn above(&self, a: u32) -> &[u32] {
        &self.up[a as usize]
    }
}

impl<T: Eq + Hash> FinitePoset<T> {
    pub fn index_of(&self, e: &T) -> Option<u32> {
        self.index.get(e).copied()
    }
}

impl FinitePoset<Partition> {
    /// The proper part of the partition lattice, in enumeration order.
    pub fn proper_partitions(n: usize) -> Result<Self> {
        let elements = enumerate_proper(n)?;
        Self::new(elements, |p, q| p != q && p.refines_unchecked(q))
    }
}

/// The nerve of a finite poset with every chain stored explicitly.
#[derive(Clone, Debug)]
pub struct OrderComplex<T> {
    poset: FinitePoset<T>,
    dim_start: Vec<usize>,
    vertices: Vec<u32>,
    vertex_offset: Vec<usize>,
    face_ids: Vec<u32>,
    face_offset: Vec<usize>,
    lookup: HashMap<Box<[u32]>, CellId>,
}

/// The nerve of `Π̄_n`.
pub type PartitionComplex = OrderComplex<Partition>;

impl<T> OrderComplex<T> {
    /// Enumerates all chains of `poset`.
    pub fn build(poset: FinitePoset<T>) -> Self {
        let mut dim_start = vec![0usize];
        let mut vertex_offset = vec![0usize];
        let mut vertices: Vec<u32> = (0..poset.len() as u32).collect();
        let mut level_start = 0usize;
        let mut level_len = poset.len();
        let mut d = 0usize;
        while level_len > 0 {
            dim_start.push(dim_start[d] + level_len);
            vertex_offset.push(vertices.len());
            let width = d + 1;
            let mut next_len = 0usize;
            for k in 0..level_len {
                let off = level_start + k * width;
                let top = vertices[off + d];
                for &y in poset.above(top) {
                    vertices.extend_from_within(off..off + width);
                    vertices.push(y);
                    next_len += 1;
                }
            }
            level_start = vertex_offset[d + 1];
            level_len = next_len;
            d += 1;
        }
        // dim_start has one entry past the last nonempty dimension
        dim_start.truncate(d + 1);
        vertex_offset.truncate(d + 1);

        let mut lookup = HashMap::with_capacity(*dim_start.last().unwrap_or(&0));
        let mut face_ids = Vec::new();
        let mut face_offset = Vec::with_capacity(d + 1);
        let mut complex = Self {
            poset,
            dim_start,
            vertices,
            vertex_offset,
            face_ids: Vec::new(),
            face_offset: Vec::new(),
            lookup: HashMap::new(),
        };
        for c in 0..complex.num_cells() {
            lookup.insert(complex.vertices_of(CellId::from(c)).into(), CellId::from(c));
        }
        for dim in 0..d {
            face_offset.push(face_ids.len());
            if dim == 0 {
                continue;
            }
            for c in complex.dim_start[dim]..complex.dim_start[dim + 1] {
                let verts = complex.vertices_of(CellId::from(c));
                let mut buf = Vec::with_capacity(dim);
                for i in 0..=dim {
                    buf.clear();
                    buf.extend(verts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                    face_ids.push(lookup[buf.as_slice()].0);
                }
            }
        }
        complex.face_ids = face_ids;
        complex.face_offset = face_offset;
        complex.lookup = lookup;
        complex
    }

    pub fn poset(&self) -> &FinitePoset<T> {
        &self.poset
    }

    /// Vertex ids of a cell, bottom to top.
    pub fn vertices_of(&self, cell: CellId) -> &[u32] {
        let d = self.dim_of(cell.index());
        let width = d + 1;
        let off = self.vertex_offset[d] + (cell.index() - self.dim_start[d]) * width;
        &self.vertices[off..off + width]
    }

    pub fn simplex(&self, cell: CellId) -> Simplex {
        Simplex::new(self.vertices_of(cell).to_vec())
    }

    /// Looks up a chain given by its vertex ids, bottom to top.
    pub fn find(&self, vertices: &[u32]) -> Option<CellId> {
        self.lookup.get(vertices).copied()
    }

    pub fn cell_of(&self, simplex: &Simplex) -> Option<CellId> {
        self.find(simplex.vertices())
    }

    /// The cell consisting of the single vertex `v`.
    pub fn vertex_cell(&self, v: u32) -> CellId {
        CellId(v)
    }

    fn dim_of(&self, idx: usize) -> usize {
        self.dim_start.partition_point(|&s| s <= idx) - 1
    }

    pub fn face_ids(&self, cell: CellId) -> &[u32] {
        let d = self.dim_of(cell.index());
        if d == 0 {
            return &[];
        }
        let off = self.face_offset[d] + (cell.index() - self.dim_start[d]) * (d + 1);
        &self.face_ids[off..off + d + 1]
    }

    pub fn num_cells(&self) -> usize {
        *self.dim_start.last().unwrap_or(&0)
    }

    pub fn cells(&self) -> impl Iterator<Item = CellId> {
        (0..self.num_cells()).map(CellId::from)
    }
}

impl<T: Clone + Eq + Hash> OrderComplex<T> {
    /// Builds the nerve of the given elements under a strict order.
    pub fn from_elements(elements: Vec<T>, less: impl Fn(&T, &T) -> bool) -> Result<Self> {
        Ok(Self::build(FinitePoset::new(elements, less)?))
    }
}

impl PartitionComplex {
    /// The nerve `Δ(Π̄_n)`.
    pub fn partition_nerve(n: usize) -> Result<Self> {
        Ok(Self::build(FinitePoset::proper_partitions(n)?))
    }

    pub fn n(&self) -> usize {
        self.poset.element(0).n()
    }

    pub fn partition(&self, v: u32) -> &Partition {
        self.poset.element(v)
    }

    pub fn vertex_of(&self, p: &Partition) -> Option<u32> {
        self.poset.index_of(p)
    }

    /// Finds the chain whose vertices are the given partitions (any order).
    pub fn find_chain(&self, chain: &[Partition]) -> Result<CellId> {
        let mut ids = chain
            .iter()
            .map(|p| {
                self.vertex_of(p)
                    .ok_or_else(|| invalid_arg(format!("{p} is not in the ground poset")))
            })
            .collect::<Result<Vec<_>>>()?;
        // finer partitions have more blocks, so a chain sorts bottom to top
        ids.sort_by_key(|&v| (std::cmp::Reverse(self.partition(v).block_count()), v));
        self.find(&ids)
            .ok_or_else(|| invalid_arg("the given partitions do not form a chain"))
    }

    /// Parses the `p_0 < p_1 < …` text form of a chain.
    pub fn parse_chain(&self, text: &str) -> Result<CellId> {
        let parts = text
            .split('<')
            .map(|s| Partition::parse_with_n(s.trim(), self.n()))
            .collect::<Result<Vec<_>>>()?;
        self.find_chain(&parts)
    }
}

impl<T: fmt::Display> OrderComplex<T> {
    /// Text form: vertex labels joined by `" < "`.
    pub fn format_cell(&self, cell: CellId) -> String {
        self.vertices_of(cell)
            .iter()
            .map(|&v| self.poset.element(v).to_string())
            .collect::<Vec<_>>()
            .join(" < ")
    }
}

impl<T: fmt::Display> CellComplex for OrderComplex<T> {
    fn cell_count(&self) -> usize {
        self.num_cells()
    }

    fn dim(&self, cell: CellId) -> usize {
        self.dim_of(cell.index())
    }

    fn top_dim(&self) -> Option<usize> {
        (self.dim_start.len() >= 2).then(|| self.dim_start.len() - 2)
    }

    fn cells_of_dim(&self, d: usize) -> Range<usize> {
        let end = self.num_cells();
        if d + 1 >= self.dim_start.len() {
            return end..end;
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    fn faces(&self, cell: CellId) -> Vec<(CellId, i64)> {
        self.face_ids(cell)
            .iter()
            .enumerate()
            .map(|(i, &f)| (CellId(f), if i % 2 == 0 { 1 } else { -1 }))
            .collect()
    }

    fn describe(&self, cell: CellId) -> String {
        self.format_cell(cell)
    }

    fn boundary(&self, cell: CellId) -> Vec<(CellId, i64)> {
        let mut b = self.faces(cell);
        b.sort_unstable();
        b
    }
}

/// A finite simplicial complex given by a list of simplices on integer
/// vertices, closed under taking nonempty faces.
#[derive(Clone, Debug)]
pub struct ExplicitComplex {
    cells: Vec<Vec<usize>>,
    dim_start: Vec<usize>,
    lookup: HashMap<Vec<usize>, CellId>,
}

impl ExplicitComplex {
    pub fn new<S: AsRef<[usize]>>(simplices: &[S]) -> Self {
        let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for s in simplices {
            let mut verts = s.as_ref().to_vec();
            verts.sort_unstable();
            verts.dedup();
            let k = verts.len();
            if k == 0 {
                continue;
            }
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| verts[i])
                    .collect();
                all.insert((face.len() - 1, face));
            }
        }
        let mut cells = Vec::with_capacity(all.len());
        let mut dim_start = vec![0];
        for (d, face) in all {
            while dim_start.len() <= d {
                dim_start.push(cells.len());
            }
            cells.push(face);
        }
        dim_start.push(cells.len());
        if cells.is_empty() {
            dim_start = vec![0];
        }
        let lookup = cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), CellId::from(i)))
            .collect();
        Self {
            cells,
            dim_start,
            lookup,
        }
    }

    pub fn find(&self, vertices: &[usize]) -> Option<CellId> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        self.lookup.get(&v).copied()
    }

    pub fn vertices_of(&self, cell: CellId) -> &[usize] {
        &self.cells[cell.index()]
    }
}

impl CellComplex for ExplicitComplex {
    fn cell_count(&self) -> usize {
        self.cells.len()
    }

    fn dim(&self, cell: CellId) -> usize {
        self.cells[cell.index()].len() - 1
    }

    fn top_dim(&self) -> Option<usize> {
        (self.dim_start.len() >= 2).then(|| self.dim_start.len() - 2)
    }

    fn cells_of_dim(&self, d: usize) -> Range<usize> {
        let end = self.cells.len();
        if d + 1 >= self.dim_start.len() {
            return end..end;
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    fn faces(&self, cell: CellId) -> Vec<(CellId, i64)> {
        let verts = &self.cells[cell.index()];
        if verts.len() < 2 {
            return Vec::new();
        }
        (0..verts.len())
            .map(|i| {
                let mut f = verts.clone();
                f.remove(i);
                (self.lookup[&f], if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    fn describe(&self, cell: CellId) -> String {
        format!("{:?}", self.cells[cell.index()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts chains by brute force over all subsets of the ground poset.
    fn brute_force_f_vector(n: usize) -> Vec<usize> {
        let elems = enumerate_proper(n).unwrap();
        let m = elems.len();
        let lt = |a: usize, b: usize| a != b && elems[a].refines_unchecked(&elems[b]);
        let mut counts = vec![0usize; n];
        // extend chains greedily by depth-first search over increasing ids,
        // accepting a subset iff it is totally ordered
        fn rec(
            start: usize,
            chosen: &mut Vec<usize>,
            m: usize,
            lt: &dyn Fn(usize, usize) -> bool,
            counts: &mut Vec<usize>,
        ) {
            for x in start..m {
                if chosen.iter().all(|&y| lt(x, y) || lt(y, x)) {
                    chosen.push(x);
                    counts[chosen.len() - 1] += 1;
                    rec(x + 1, chosen, m, lt, counts);
                    chosen.pop();
                }
            }
        }
        rec(0, &mut Vec::new(), m, &lt, &mut counts);
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    #[test]
    fn f_vectors_match_brute_force() {
        assert_eq!(brute_force_f_vector(3), vec![3]);
        assert_eq!(brute_force_f_vector(4), vec![13, 18]);
        for n in 3..=5 {
            let k = PartitionComplex::partition_nerve(n).unwrap();
            assert_eq!(k.f_vector(), brute_force_f_vector(n), "n = {n}");
        }
    }

    #[test]
    fn top_cell_count_identity() {
        // n!(n-1)!/2^(n-1) maximal chains of Π_n
        let expect = |n: u64| -> u64 {
            let f: u64 = (1..=n).product();
            let g: u64 = (1..n).product();
            f * g / (1 << (n - 1))
        };
        for n in 3..=6 {
            let k = PartitionComplex::partition_nerve(n).unwrap();
            let top = k.top_dim().unwrap();
            assert_eq!(top, n - 3);
            assert_eq!(k.cells_of_dim(top).len() as u64, expect(n as u64));
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(PartitionComplex::partition_nerve(3).unwrap().euler_characteristic(), 3);
        assert_eq!(PartitionComplex::partition_nerve(4).unwrap().euler_characteristic(), -5);
        let single = OrderComplex::from_elements(vec!["a"], |_, _| false).unwrap();
        assert_eq!(single.f_vector(), vec![1]);
        assert_eq!(single.euler_characteristic(), 1);
    }

    #[test]
    fn cells_are_sorted_and_face_closed() {
        let k = PartitionComplex::partition_nerve(5).unwrap();
        for d in 0..=k.top_dim().unwrap() {
            let r = k.cells_of_dim(d);
            for c in r.clone().skip(1) {
                assert!(k.vertices_of(CellId::from(c - 1)) < k.vertices_of(CellId::from(c)));
            }
            for c in r {
                let verts = k.vertices_of(CellId::from(c));
                assert!(verts.windows(2).all(|w| k.poset().less(w[0], w[1])));
                for (f, _) in k.faces(CellId::from(c)) {
                    assert_eq!(k.dim(f), d - 1);
                }
            }
        }
    }

    #[test]
    fn simplex_faces() {
        let s = Simplex::new(vec![0, 1]);
        assert_eq!(
            s.faces(),
            vec![(Simplex::new(vec![1]), 1), (Simplex::new(vec![0]), -1)]
        );
        let t = Simplex::new(vec![0, 1, 2]);
        assert_eq!(
            t.faces(),
            vec![
                (Simplex::new(vec![1, 2]), 1),
                (Simplex::new(vec![0, 2]), -1),
                (Simplex::new(vec![0, 1]), 1)
            ]
        );
        assert!(Simplex::new(vec![4]).faces().is_empty());
        assert_eq!(Simplex::new(vec![]).dim(), -1);
    }

    #[test]
    fn boundary_matrices() {
        let k = PartitionComplex::partition_nerve(4).unwrap();
        let d1 = k.boundary_matrix(1).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (13, 18));
        for col in d1.columns() {
            let mut vals: Vec<i64> = col.iter().map(|&(_, v)| v).collect();
            vals.sort_unstable();
            assert_eq!(vals, vec![-1, 1]);
        }
        assert!(k.boundary_matrix(0).is_err());
        assert!(k.boundary_matrix(3).is_err());
        let k3 = PartitionComplex::partition_nerve(3).unwrap();
        assert_eq!(k3.boundary_matrix(1).unwrap().ncols(), 0);
        for n in 4..=6 {
            let k = PartitionComplex::partition_nerve(n).unwrap();
            for d in 2..=k.top_dim().unwrap() {
                let prod = k.boundary_matrix(d - 1).unwrap().mul(&k.boundary_matrix(d).unwrap());
                assert!(prod.is_zero(), "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn invalid_poset_rejected() {
        let cyclic = FinitePoset::from_relations(vec![0, 1], &[(0, 1), (1, 0)]);
        assert!(matches!(cyclic, Err(Error::InvalidPoset(_))));
        let intransitive = FinitePoset::from_relations(vec![0, 1, 2], &[(0, 1), (1, 2)]);
        assert!(matches!(intransitive, Err(Error::InvalidPoset(_))));
        let reflexive = FinitePoset::from_relations(vec![0], &[(0, 0)]);
        assert!(reflexive.is_err());
    }

    #[test]
    fn chain_text_form() {
        let k = PartitionComplex::partition_nerve(5).unwrap();
        let c = k.parse_chain("1,2|3|4|5 < 1,2,5|3|4").unwrap();
        assert_eq!(k.format_cell(c), "1,2|3|4|5 < 1,2,5|3|4");
        let same = k.parse_chain("1,2,5|3|4 < 1,2|3|4|5").unwrap();
        assert_eq!(c, same);
        assert!(k.parse_chain("1,2|3|4|5 < 1,3|2|4|5").is_err());
    }

    #[test]
    fn explicit_complex_closure() {
        let tri = ExplicitComplex::new(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(tri.f_vector(), vec![3, 3]);
        assert_eq!(tri.euler_characteristic(), 0);
        let solid = ExplicitComplex::new(&[vec![0, 1, 2]]);
        assert_eq!(solid.f_vector(), vec![3, 3, 1]);
        let p = solid.boundary_matrix(1).unwrap().mul(&solid.boundary_matrix(2).unwrap());
        assert!(p.is_zero());
    }
}
