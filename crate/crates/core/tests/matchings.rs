use partmorse::complex::{CellComplex, CellId, PartitionComplex};
use partmorse::construction::{alpha, build_main_matching, MatchingTower};
use partmorse::homology::ChainComplex;
use partmorse::morse::{
    closure_matching, cone_matching, dump_matching, morse_data, parse_matching_dump, quotient_matching,
    validate_matching, Matching,
};
use partmorse::perm::{PermGroup, QuotientComplex};
use partmorse::verify::transport_well_defined;

/// `x ↦ x ∧ α_n` as a vertex map, atoms sent to themselves.
fn split_one_off(k: &PartitionComplex) -> (Vec<bool>, Vec<u32>) {
    let a = alpha(k.n());
    let size = k.poset().len() as u32;
    let mut domain = vec![true; size as usize];
    let down = (0..size)
        .map(|x| {
            let m = k.partition(x).meet(&a).unwrap();
            match k.vertex_of(&m) {
                Some(v) => v,
                None => {
                    domain[x as usize] = false;
                    x
                }
            }
        })
        .collect();
    (domain, down)
}

#[test]
fn split_operator_leaves_chains_with_one_isolated() {
    for n in 3..=5 {
        let k = PartitionComplex::partition_nerve(n).unwrap();
        let (domain, down) = split_one_off(&k);
        let m = closure_matching(&k, Some(&domain), &down).unwrap();
        assert!(validate_matching(&k, &m).unwrap().is_valid());
        let in_domain = |c: CellId| k.vertices_of(c).iter().all(|&v| domain[v as usize]);
        let isolated = |c: CellId| k.vertices_of(c).iter().all(|&v| k.partition(v).block_sizes()[0] == 1);
        for c in k.cells().filter(|&c| in_domain(c)) {
            assert_eq!(!m.is_matched(c), isolated(c), "n={n} {}", k.format_cell(c));
        }
    }
}

#[test]
fn cone_on_the_isolated_partitions_of_four() {
    let k = PartitionComplex::partition_nerve(4).unwrap();
    let mask: Vec<bool> = (0..k.poset().len() as u32)
        .map(|v| k.partition(v).block_sizes()[0] == 1)
        .collect();
    let apex = k.vertex_of(&alpha(4)).unwrap();
    let m = cone_matching(&k, Some(&mask), apex).unwrap();
    assert!(validate_matching(&k, &m).unwrap().is_valid());
    let inside: Vec<CellId> = k
        .cells()
        .filter(|&c| k.vertices_of(c).iter().all(|&v| mask[v as usize]))
        .filter(|&c| !m.is_matched(c))
        .collect();
    assert_eq!(inside, vec![CellId(apex)]);
}

#[test]
fn identity_closure_matches_nothing() {
    let k = PartitionComplex::partition_nerve(4).unwrap();
    let id: Vec<u32> = (0..k.poset().len() as u32).collect();
    assert!(closure_matching(&k, None, &id).unwrap().is_empty());
}

#[test]
fn quotient_by_trivial_group_is_the_matching_itself() {
    let level = build_main_matching(5).unwrap();
    let q = QuotientComplex::new(level.complex(), &PermGroup::trivial(5)).unwrap();
    let m = quotient_matching(&q, level.matching()).unwrap();
    assert_eq!(m.pairs(), level.matching().pairs());
    // not invariant under the whole symmetric group
    let s = QuotientComplex::new(level.complex(), &PermGroup::symmetric(5)).unwrap();
    assert!(quotient_matching(&s, level.matching()).is_err());
}

#[test]
fn weak_morse_inequalities() {
    let tower = MatchingTower::build(6).unwrap();
    for level in tower.levels() {
        let k = level.complex();
        let h = ChainComplex::of(k).homology();
        for m in [level.matching(), level.fiber_zero(), &Matching::new(k.num_cells())] {
            let counts = m.critical_counts(k);
            for (d, c) in counts.iter().enumerate() {
                assert!(*c >= h.betti(d));
            }
        }
    }
}

#[test]
fn morse_data_of_four() {
    let level = build_main_matching(4).unwrap();
    let md = morse_data(level.complex(), level.matching()).unwrap();
    assert_eq!(md.critical_counts(), vec![1, 6]);
    let b = md.boundary(1).unwrap();
    assert_eq!((b.nrows(), b.ncols()), (1, 6));
    assert!(b.is_zero());
    let cc = ChainComplex::of(level.complex());
    let d1 = cc.boundary(1).unwrap();
    let start = level.complex().cells_of_dim(1).start;
    for k in 0..6 {
        let mut acc = vec![0i64; d1.nrows()];
        for &(c, s) in md.cycle_representative(1, k) {
            for &(r, v) in d1.column(c.index() - start) {
                acc[r as usize] += v * s;
            }
        }
        assert!(acc.iter().all(|&x| x == 0));
    }
}

#[test]
fn empty_matching_morse_data_is_the_complex() {
    let k = PartitionComplex::partition_nerve(4).unwrap();
    let md = morse_data(&k, &Matching::new(k.num_cells())).unwrap();
    assert_eq!(md.boundary(1).unwrap(), &k.boundary_matrix(1).unwrap());
    assert_eq!(md.cycle_representative(1, 0), &vec![(CellId::from(13), 1)]);
}

#[test]
fn transport_is_exhaustively_well_defined() {
    let tower = MatchingTower::build(5).unwrap();
    for n in 4..=5 {
        assert!(transport_well_defined(tower.level(n).unwrap()).unwrap());
    }
}

#[test]
fn dump_round_trip_for_main_matching() {
    let level = build_main_matching(5).unwrap();
    let text = dump_matching(level.complex(), level.matching());
    assert_eq!(text.lines().count(), level.matching().len());
    let back = parse_matching_dump(level.complex(), &text).unwrap();
    assert_eq!(&back, level.matching());
}
