use gabdyn::report::{catalog_groups, checks, run_checks, stages};
use gabdyn::symmetry::{compute_stats, enumerate_symmetry_groups};
use gabdyn::{Case, CuspTriple, Error, GroupElement, SymmetryGroup};

fn group(gamma: [u32; 3], gens: &[([i64; 3], i64)]) -> SymmetryGroup {
    let t = CuspTriple::new(gamma).unwrap();
    let gens: Vec<_> = gens
        .iter()
        .map(|&(n, d)| GroupElement::from_fractions(n, d).unwrap())
        .collect();
    SymmetryGroup::generate(&t, &gens).unwrap()
}

#[test]
fn every_small_catalog_case_passes_all_checks() {
    let registry = checks();
    for g in catalog_groups(12).unwrap() {
        let report = run_checks(&Case::new(g).unwrap(), &registry);
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn order_identity_holds_beyond_the_catalog() {
    for gamma in [[2, 4, 8], [3, 6, 6], [2, 6, 6], [5, 5, 5]] {
        let t = CuspTriple::new(gamma).unwrap();
        for g in enumerate_symmetry_groups(&t, 60) {
            let s = compute_stats(&g).unwrap();
            assert_eq!(s.order, 1 + 2 * s.j_g + s.stabilizer_excess(), "{g}");
        }
    }
}

#[test]
fn resolution_graph_is_a_star_with_gabrielov_arms() {
    let case = Case::new(group([6, 6, 6], &[([1, 5, 0], 6)])).unwrap();
    let graph = stages().get("resolution").unwrap().graph(&case).unwrap();
    let mut arms = case.gabrielov.multiset.clone();
    arms.sort_unstable();
    let centre = &graph.vertices[0];
    assert_eq!(graph.degree(&centre.id), arms.len());
    assert_eq!(
        graph.vertices.len(),
        1 + arms.iter().map(|&a| a as usize - 1).sum::<usize>()
    );
}

#[test]
fn trivial_group_keeps_the_milnor_quotient() {
    let case = Case::new(group([3, 3, 4], &[])).unwrap();
    let registry = stages();
    let quotient = registry
        .get("milnor-quotient")
        .unwrap()
        .graph(&case)
        .unwrap();
    let orbit = registry.get("orbit").unwrap().graph(&case).unwrap();
    let labels = |g: &gabdyn::report::DynkinGraph| -> Vec<String> {
        g.vertices
            .iter()
            .map(|v| v.self_intersection.to_string())
            .collect()
    };
    assert_eq!(quotient.vertices.len(), orbit.vertices.len());
    assert_eq!(labels(&quotient), labels(&orbit));
    assert_eq!(quotient.edges.len(), orbit.edges.len());
}

#[test]
fn bad_generators_are_rejected_with_distinct_errors() {
    assert!(matches!(
        GroupElement::from_fractions([1, 1, 0], 4),
        Err(Error::NotSpecialLinear(..))
    ));
    let t = CuspTriple::new([4, 4, 4]).unwrap();
    let g = GroupElement::from_fractions([1, 2, 3], 6).unwrap();
    assert!(matches!(
        SymmetryGroup::generate(&t, &[g]),
        Err(Error::NotSymmetry(_))
    ));
    assert!(CuspTriple::new([3, 3, 4]).is_ok());
    assert!(matches!(
        CuspTriple::new([3, 3, 3]),
        Err(Error::InvalidTriple(..))
    ));
}
