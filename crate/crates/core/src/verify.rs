//! End-to-end checks of the construction for one `n`, each reported as a
//! named pass/fail line.

use serde::Serialize;

use crate::complex::{CellComplex, CellId, PartitionComplex};
use crate::construction::{
    atoms_in, number_partition_label, phi, quotient_main_matching, restrict_permutation, FiberLabel, MainMatching,
    MatchingTower, Psi,
};
use crate::error::Result;
use crate::homology::{determinant, verify_wedge, ChainComplex, HomologyResult};
use crate::morse::{
    check_equivariance, cohomology_representatives, morse_data, pairing_matrix, transport_is_well_defined,
    validate_matching, Matching,
};
use crate::perm::{PermGroup, Permutation, QuotientComplex};

/// Largest `n` for which homology is computed by [`verify`].
pub const HOMOLOGY_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Subgroups of the stabilizer of 1 used for quotient checks: trivial,
/// `⟨(2 3)⟩`, the even permutations of `{2,…,n}`, and the full stabilizer.
pub fn sample_subgroups(n: usize) -> Vec<(String, PermGroup)> {
    let swap = Permutation::parse_cycles(n, "(2 3)").expect("n ≥ 3");
    let three_cycles: Vec<Permutation> = (4..=n)
        .map(|k| Permutation::from_cycles(n, &[[2, 3, k]]).expect("valid cycle"))
        .collect();
    vec![
        ("trivial".into(), PermGroup::trivial(n)),
        ("<(2 3)>".into(), PermGroup::generate(n, &[swap]).expect("valid generator")),
        ("even".into(), PermGroup::generate(n, &three_cycles).expect("valid generators")),
        ("stabilizer".into(), PermGroup::point_stabilizer(n)),
    ]
}

/// Homology of the Morse complex equals homology of the complex.
pub fn morse_agrees<C: CellComplex + ?Sized>(complex: &C, m: &Matching, expected: &HomologyResult) -> Result<bool> {
    let md = morse_data(complex, m)?;
    Ok(&md.chain_complex()?.reduced_homology() == expected)
}

/// Determinant of the pairing between top-dimensional cocycle and cycle
/// representatives is `±1`.
pub fn cohomology_pairing_is_unimodular<C: CellComplex + ?Sized>(complex: &C, m: &Matching) -> Result<bool> {
    let top = complex.top_dim().unwrap_or(0);
    let md = morse_data(complex, m)?;
    let cochains = cohomology_representatives(complex, m, top)?;
    let chains: Vec<_> = (0..md.critical(top).len()).map(|k| md.cycle_representative(top, k).clone()).collect();
    let det = determinant(&pairing_matrix(&cochains, &chains));
    Ok(det.magnitude() == &num_bigint::BigUint::from(1u8))
}

/// `ψ` is a bijection onto the fibre of `v_n` minus the vertex `v_n`, and
/// faces correspond on both sides. Cells are taken with the given stride.
pub fn psi_is_isomorphism(psi: &Psi<'_>, small: &PartitionComplex, big: &PartitionComplex, stride: usize) -> Result<bool> {
    let n = big.n();
    let mut image = vec![false; big.num_cells()];
    for c in small.cells() {
        image[psi.apply(c).index()] = true;
    }
    let sets = crate::construction::SpecialSets::new(big)?;
    let fibre: Vec<CellId> = big
        .cells()
        .filter(|&c| phi(big, &sets, c) == FiberLabel::Atom(n) && c != CellId(psi.top_atom()))
        .collect();
    if fibre.len() != small.num_cells() || !fibre.iter().all(|c| image[c.index()]) {
        return Ok(false);
    }
    for c in small.cells().step_by(stride.max(1)) {
        let p = psi.apply(c);
        if psi.invert(p)? != c {
            return Ok(false);
        }
        let mut expected: Vec<CellId> = small.faces(c).iter().map(|&(f, _)| psi.apply(f)).collect();
        expected.sort_unstable();
        let mut got: Vec<CellId> = big
            .faces(p)
            .iter()
            .map(|&(f, _)| f)
            .filter(|&f| image[f.index()])
            .collect();
        got.sort_unstable();
        if got != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g·ψ(c) = ψ(g̃·c)` for the given permutations fixing 1 and `n`.
pub fn psi_intertwines(
    psi: &Psi<'_>,
    small: &PartitionComplex,
    big: &PartitionComplex,
    perms: &[Permutation],
    stride: usize,
) -> Result<bool> {
    for g in perms {
        let small_table = small.cell_permutation(&restrict_permutation(g)?)?;
        let big_table = big.cell_permutation(g)?;
        for c in small.cells().step_by(stride.max(1)) {
            if big_table[psi.apply(c).index()] != psi.apply(small_table[c.index()]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every chain holds at most one atom; the fibre map is order preserving
/// and commutes with the given permutations.
pub fn phi_is_well_behaved(level: &MainMatching, perms: &[Permutation]) -> Result<bool> {
    let k = level.complex();
    let sets = level.sets();
    for c in k.cells() {
        let atoms = atoms_in(k, sets, c);
        if atoms.len() > 1 {
            return Ok(false);
        }
        let label = phi(k, sets, c);
        if atoms.first().map(|&a| FiberLabel::Atom(a)).unwrap_or(FiberLabel::Zero) != label {
            return Ok(false);
        }
        for (f, _) in k.faces(c) {
            let lf = phi(k, sets, f);
            if lf != label && lf != FiberLabel::Zero {
                return Ok(false);
            }
        }
    }
    for g in perms {
        let table = k.cell_permutation(g)?;
        for c in k.cells() {
            if phi(k, sets, table[c.index()]) != phi(k, sets, c).act(g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Transport of the `v_n` fibre matching to every other atom fibre does not
/// depend on the chosen group element.
pub fn transport_well_defined(level: &MainMatching) -> Result<bool> {
    let n = level.n();
    let k = level.complex();
    let fiber = level.fiber_map();
    let top = FiberLabel::Atom(n).index();
    let mut top_matching = Matching::new(k.num_cells());
    for (a, b) in level.matching().pairs() {
        if fiber[a.index()] == top {
            top_matching.insert(a, b)?;
        }
    }
    let act = |g: &Permutation, q: u32| if q == 0 { 0 } else { g.apply(q as usize + 1) as u32 - 1 };
    let group = level.group();
    for q in 1..n as u32 {
        if !transport_is_well_defined(k, &group, &act, top, &top_matching, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_full_structure(q: &QuotientComplex<'_>, m: &Matching, n: usize) -> Result<(bool, String)> {
    let crit = m.critical_cells();
    if crit.len() != 2 || q.dim(crit[0]) != 0 || q.dim(crit[1]) != n - 3 {
        return Ok((false, format!("{} critical cells", crit.len())));
    }
    let label = number_partition_label(q, crit[0])?;
    let top = q.base().vertices_of(q.representative(crit[1]));
    let mut labels: Vec<String> = top
        .iter()
        .map(|&v| crate::construction::number_partition_label_of(q.base().partition(v)))
        .collect();
    labels.sort();
    let mut expected: Vec<String> = (2..n)
        .map(|v0| format!("{v0}⊕{}", vec!["1"; n - v0].join("+")))
        .collect();
    expected.sort();
    let ok = label == format!("1⊕{}", n - 1) && labels == expected;
    Ok((ok, format!("vertex {label}, top cell {}", labels.join(" < "))))
}

/// Runs every check that applies to `n`, building the matchings from 3 up.
pub fn verify(n: usize) -> Result<Vec<Check>> {
    let tower = MatchingTower::build(n)?;
    let level = tower.level(n).expect("top level");
    verify_level(&tower, level)
}

fn verify_level(tower: &MatchingTower, level: &MainMatching) -> Result<Vec<Check>> {
    let n = level.n();
    let k = level.complex();
    let sets = level.sets();
    let group = level.group();
    let action = k.cell_action(&group)?;
    let mut out = Vec::new();

    let cn = sets.cn().len();
    out.push(Check::new("chain-count", cn == factorial(n - 1), format!("|C_{n}| = {cn}")));

    let report = level.report()?;
    let c = report.certificates;
    out.push(Check::new(
        "main-matching",
        c.all(),
        format!(
            "acyclic={} equivariant={} criticalSetMatches={} criticalCounts={:?}",
            c.acyclic, c.equivariant, c.critical_set_matches, report.critical_counts
        ),
    ));

    let fz = level.fiber_zero();
    let fiber = level.fiber_map();
    let fz_cert = validate_matching(k, fz)?;
    let fz_crit: Vec<CellId> = fz.critical_cells().into_iter().filter(|c| fiber[c.index()] == 0).collect();
    out.push(Check::new(
        "fiber-zero",
        fz_cert.is_valid() && check_equivariance(fz, &action) && fz_crit == [CellId(sets.alpha())],
        format!("{} critical cells without atoms", fz_crit.len()),
    ));

    let od = report.orbit_data;
    out.push(Check::new(
        "free-transitive",
        od.orbits == 1 && od.stabilizer_order == 1,
        format!("{} orbit(s), stabilizer order {}", od.orbits, od.stabilizer_order),
    ));

    if n >= 4 {
        let prev = tower.level(n - 1).expect("lower level");
        let psi = Psi::new(prev.complex(), k)?;
        let fixing_n: Vec<Permutation> = group.elements().iter().filter(|g| g.fixes(n)).cloned().collect();
        let stride = if n <= 5 { 1 } else { 7 };
        let perms: Vec<Permutation> = fixing_n.iter().step_by(stride).cloned().collect();
        let iso = psi_is_isomorphism(&psi, prev.complex(), k, stride)?;
        let inter = psi_intertwines(&psi, prev.complex(), k, &perms, stride)?;
        let phi_ok = phi_is_well_behaved(level, group.generators())?;
        let transport = transport_well_defined(level)?;
        out.push(Check::new(
            "properties",
            iso && inter && phi_ok && transport,
            format!("psi-isomorphism={iso} intertwining={inter} phi={phi_ok} transport={transport}"),
        ));
    }

    if n > HOMOLOGY_LIMIT {
        out.push(Check::new("homology", true, format!("skipped for n > {HOMOLOGY_LIMIT}")));
        return Ok(out);
    }

    let full = ChainComplex::of(k).reduced_homology();
    let spheres = factorial(n - 1);
    out.push(Check::new(
        "wedge-homology",
        verify_wedge(&full, n - 3, spheres),
        format!("rank in dimension {}: {}", n - 3, full.betti(n - 3)),
    ));

    let mut ok = true;
    let mut details = Vec::new();
    let mut agree = morse_agrees(k, level.matching(), &full)? && morse_agrees(k, fz, &full)?;
    for (name, g) in sample_subgroups(n) {
        let index = g.index_in(&group)?;
        let (q, m) = quotient_main_matching(level, &g)?;
        let h = ChainComplex::of(&q).reduced_homology();
        let crit = m.critical_cells().len();
        ok &= verify_wedge(&h, n - 3, index) && crit == index + 1;
        agree &= morse_agrees(&q, &m, &h)?;
        details.push(format!("{name}: index {index}, {crit} critical"));
    }
    out.push(Check::new("quotient-homology", ok, details.join("; ")));

    if n >= 4 {
        let (q, m) = quotient_main_matching(level, &group)?;
        let (ok, detail) = is_full_structure(&q, &m, n)?;
        out.push(Check::new("full-quotient", ok, detail));
    }

    let sym = QuotientComplex::new(k, &PermGroup::symmetric(n))?;
    let h = ChainComplex::of(&sym).reduced_homology();
    out.push(Check::new("symmetric-quotient", h.is_acyclic(), "reduced homology of the orbit complex by S_n"));

    if n == 5 {
        let q = QuotientComplex::new(k, &PermGroup::cyclic(5))?;
        let h = ChainComplex::of(&q).reduced_homology();
        out.push(Check::new(
            "cyclic-torsion",
            h.torsion(1) == [5],
            format!("H1 torsion {:?}", h.torsion(1)),
        ));
    }

    out.push(Check::new("morse-agreement", agree, "main, atom-free and quotient matchings"));

    let unimodular = cohomology_pairing_is_unimodular(k, level.matching())?;
    out.push(Check::new("cohomology-basis", unimodular, "pairing determinant ±1"));
    Ok(out)
}
