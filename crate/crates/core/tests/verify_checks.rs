use margalg::complex::{minimal_prime_candidates, Minimality};
use margalg::poly::Budget;
use margalg::verify::{run_all, run_check_with, CheckOptions, CHECK_IDS};
use margalg::{FaceSet, Shape, SimplicialComplex};

fn triangle_at(dims: &[usize]) -> (Shape, SimplicialComplex) {
    let f = |v: &[usize]| FaceSet::new(v.to_vec());
    (
        Shape::new(dims.to_vec()).unwrap(),
        SimplicialComplex::new(3, vec![f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]).unwrap(),
    )
}

#[test]
fn every_check_passes_and_reports_are_reproducible() {
    let opts = CheckOptions::new(Budget::default(), 5);
    let first = run_all(opts);
    assert_eq!(first.len(), CHECK_IDS.len());
    for r in &first {
        assert!(r.passed(), "{}", r.to_json_line());
    }
    let second = run_all(opts);
    let lines = |rs: &[margalg::verify::CheckReport]| rs.iter().map(|r| r.to_json_line()).collect::<Vec<_>>();
    assert_eq!(lines(&first), lines(&second));
}

#[test]
fn four_facet_intersection_equals_i_delta() {
    let opts = CheckOptions { full_intersection: true, ..CheckOptions::new(Budget::default(), 0) };
    let r = run_check_with("decomposition-4facet", opts).unwrap();
    assert!(r.passed(), "{}", r.to_json_line());
    assert_eq!(r.witness["full_intersection_equal"], true);
}

#[test]
fn trivial_partition_component_is_redundant_with_a_binary_axis() {
    let (sh, c) = triangle_at(&[2, 3, 3]);
    let cands = minimal_prime_candidates(&sh, &c).unwrap();
    assert_eq!(cands.len(), 5);
    let last = cands.iter().find(|c| c.descriptor.partition.len() == 3).unwrap();
    assert!(matches!(last.minimality, Minimality::NotMinimal { .. }));
}

// About a minute in an optimized build.
#[test]
#[ignore]
fn all_five_components_are_minimal_without_a_binary_axis() {
    let (sh, c) = triangle_at(&[3, 3, 3]);
    let cands = minimal_prime_candidates(&sh, &c).unwrap();
    assert_eq!(cands.len(), 5);
    assert!(cands.iter().all(|c| c.minimality == Minimality::Minimal));
}
