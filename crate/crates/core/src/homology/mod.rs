//! Integral homology of finite chain complexes.

mod snf;

pub use snf::{determinant, invariant_factors, invariant_factors_dense, rank};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;

/// A bounded chain complex `C_top → … → C_0` of free abelian groups.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    // boundaries[d - 1] is ∂_d : C_d → C_{d-1}
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `ranks[d]` is the rank of `C_d`; `boundaries[d - 1]` is `∂_d`.
    /// Shapes are checked and `∂_{d-1} ∂_d = 0` is required.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(Error::InvalidComplex(format!(
                "{} chain groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let d = k + 1;
            if b.ncols() != ranks[d] || b.nrows() != ranks[d - 1] {
                return Err(Error::InvalidComplex(format!(
                    "∂_{d} is {}x{}, expected {}x{}",
                    b.nrows(),
                    b.ncols(),
                    ranks[d - 1],
                    ranks[d]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "∂_{} ∘ ∂_{} is not zero",
                    k,
                    k + 1
                )));
            }
        }
        Ok(Self { ranks, boundaries })
    }

    /// The cellular chain complex of a cell complex.
    pub fn of<C: CellComplex + ?Sized>(complex: &C) -> Self {
        let Some(top) = complex.top_dim() else {
            return Self {
                ranks: Vec::new(),
                boundaries: Vec::new(),
            };
        };
        let ranks = (0..=top).map(|d| complex.cells_of_dim(d).len()).collect();
        let boundaries = (1..=top)
            .map(|d| complex.boundary_matrix(d).expect("dimension in range"))
            .collect();
        Self { ranks, boundaries }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_d` for `1 ≤ d ≤ top`.
    pub fn boundary(&self, d: usize) -> Option<&SparseMatrix> {
        d.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn homology(&self) -> HomologyResult {
        self.compute(false)
    }

    /// Homology of the complex augmented by `C_0 → ℤ`, every cell to 1.
    pub fn reduced_homology(&self) -> HomologyResult {
        self.compute(true)
    }

    fn compute(&self, reduced: bool) -> HomologyResult {
        let top = self.ranks.len();
        // factors[d] = invariant factors of ∂_d, d = 0 being the augmentation
        let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); top + 1];
        if reduced && top > 0 && self.ranks[0] > 0 {
            factors[0] = vec![BigInt::one()];
        }
        for (k, b) in self.boundaries.iter().enumerate() {
            factors[k + 1] = invariant_factors(b);
        }
        let per_dim = (0..top)
            .map(|d| {
                let betti = self.ranks[d] - factors[d].len() - factors[d + 1].len();
                let torsion = factors[d + 1]
                    .iter()
                    .filter(|f| !f.is_one())
                    .map(snf::to_u64)
                    .collect();
                HomologyGroup {
                    dim: d,
                    betti,
                    torsion,
                }
            })
            .collect();
        HomologyResult { reduced, per_dim }
    }
}

/// `H_d ≅ ℤ^betti ⊕ ⊕ ℤ/t` for the listed torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology in every dimension of a chain complex. Serializes as the list
/// of per-dimension groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyResult {
    #[serde(skip)]
    reduced: bool,
    per_dim: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn groups(&self) -> &[HomologyGroup] {
        &self.per_dim
    }

    pub fn get(&self, dim: usize) -> Option<&HomologyGroup> {
        self.per_dim.get(dim)
    }

    pub fn betti(&self, dim: usize) -> usize {
        self.get(dim).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, dim: usize) -> &[u64] {
        self.get(dim).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn is_acyclic(&self) -> bool {
        self.per_dim.iter().all(HomologyGroup::is_zero)
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.per_dim
            .iter()
            .map(|g| if g.dim % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// `dim,betti,torsion` rows, torsion coefficients separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,betti,torsion\n");
        for g in &self.per_dim {
            let t: Vec<String> = g.torsion.iter().map(u64::to_string).collect();
            out.push_str(&format!("{},{},{}\n", g.dim, g.betti, t.join(";")));
        }
        out
    }
}

/// `true` iff `h` (taken as reduced homology) is free of rank `count` in
/// dimension `dim` and zero in every other dimension.
pub fn verify_wedge(h: &HomologyResult, dim: usize, count: usize) -> bool {
    let in_range = h.per_dim.len() > dim || count == 0;
    in_range
        && h.per_dim.iter().all(|g| {
            if g.dim == dim {
                g.betti == count && g.torsion.is_empty()
            } else {
                g.is_zero()
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ExplicitComplex, PartitionComplex};

    #[test]
    fn spheres_and_disks() {
        let circle = ExplicitComplex::new(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = ChainComplex::of(&circle).reduced_homology();
        assert!(verify_wedge(&h, 1, 1));
        let disk = ExplicitComplex::new(&[vec![0, 1, 2]]);
        assert!(ChainComplex::of(&disk).reduced_homology().is_acyclic());
        let two_points = ExplicitComplex::new(&[vec![0], vec![1]]);
        let h = ChainComplex::of(&two_points).reduced_homology();
        assert!(verify_wedge(&h, 0, 1));
        let u = ChainComplex::of(&two_points).homology();
        assert_eq!(u.betti(0), 2);
    }

    #[test]
    fn torsion_in_a_chain_complex() {
        // C_1 = ℤ --(5)--> C_0 = ℤ
        let cc = ChainComplex::new(vec![1, 1], vec![SparseMatrix::from_dense(&[vec![5]])]).unwrap();
        let h = cc.homology();
        assert_eq!(h.torsion(0), &[5]);
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 0);
        assert!(!verify_wedge(&h, 0, 0));
        assert_eq!(h.to_json(), r#"[{"dim":0,"betti":0,"torsion":[5]},{"dim":1,"betti":0,"torsion":[]}]"#);
        assert_eq!(h.to_csv(), "dim,betti,torsion\n0,0,5\n1,0,\n");
    }

    #[test]
    fn rejects_non_complexes() {
        let d1 = SparseMatrix::from_dense(&[vec![1]]);
        let d2 = SparseMatrix::from_dense(&[vec![1]]);
        assert!(matches!(
            ChainComplex::new(vec![1, 1, 1], vec![d1.clone(), d2]),
            Err(Error::InvalidComplex(_))
        ));
        assert!(ChainComplex::new(vec![1, 2], vec![d1]).is_err());
    }

    #[test]
    fn nerve_of_small_partition_lattices() {
        let h3 = ChainComplex::of(&PartitionComplex::partition_nerve(3).unwrap()).reduced_homology();
        assert!(verify_wedge(&h3, 0, 2));
        let k4 = PartitionComplex::partition_nerve(4).unwrap();
        let cc = ChainComplex::of(&k4);
        let h4 = cc.reduced_homology();
        assert_eq!(h4.betti(0), 0);
        assert_eq!(h4.betti(1), 6);
        assert!(verify_wedge(&h4, 1, 6));
        assert!(!verify_wedge(&h4, 1, 5));
        assert_eq!(cc.homology().euler_characteristic(), cc.euler_characteristic());
    }
}
