use skein::algebra::special::{circle_int, delta_int};
use skein::algebra::{coeff_window, IntPoly, Step};
use skein::diagram::*;
use skein::invariants::*;
use skein::SkeinError;

const HOPF: &str = "PD[X[1,4,2,3],X[3,2,4,1]]";
const FIGURE_EIGHT: &str = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

fn poly(terms: &[(i64, i64)]) -> IntPoly {
    IntPoly::from_terms(terms.iter().copied())
}

fn window(d: &LinkDiagram, big_n: usize, len: usize) -> Vec<i64> {
    let q = reduced_jones(d, big_n).unwrap().to_laurent();
    coeff_window(&q, len, Step::Quarter).unwrap().normalize().unwrap().coeffs().to_vec()
}

#[test]
fn bracket_of_small_diagrams() {
    let empty = LinkDiagram::new("empty", vec![], vec![], 0).unwrap();
    assert!(bracket_state_sum(&empty).unwrap().value().is_one());
    assert_eq!(bracket_state_sum(&LinkDiagram::unknot()).unwrap().value(), &circle_int());
    let kink = parse_pd("PD[X[1,1,2,2]]").unwrap();
    assert_eq!(bracket_state_sum(&kink).unwrap().value(), &(&poly(&[(3, -1)]) * &circle_int()));
}

#[test]
fn bracket_of_classical_knots() {
    let delta = circle_int();
    let hopf = parse_pd(HOPF).unwrap();
    assert_eq!(bracket_state_sum(&hopf).unwrap().value(), &(&poly(&[(4, -1), (-4, -1)]) * &delta));
    let eight = parse_pd(FIGURE_EIGHT).unwrap();
    let expected = &poly(&[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)]) * &delta;
    assert_eq!(bracket_state_sum(&eight).unwrap().value(), &expected);
    // The trefoil as the pretzel P(1,1,1).
    let trefoil = &poly(&[(-7, 1), (-3, -1), (5, -1)]) * &delta;
    assert_eq!(bracket_state_sum(&pretzel(&[1, 1, 1])).unwrap().value(), &trefoil);
}

#[test]
fn colored_state_sum_reduces_to_the_bracket() {
    for d in [parse_pd(HOPF).unwrap(), parse_pd(FIGURE_EIGHT).unwrap(), pretzel(&[2, 1, 3])] {
        assert_eq!(colored_state_sum(&d, 1).unwrap().value(), bracket_state_sum(&d).unwrap().value());
    }
    for n in 1..=3 {
        assert_eq!(colored_state_sum(&LinkDiagram::unknot(), n).unwrap().value(), &delta_int(n as u32));
    }
}

#[test]
fn pipelines_agree() {
    for c in [[2, 2, 2], [2, 2, 0], [1, 2, 3], [0, 0, 0]] {
        let d = pretzel(&c);
        let fused = colored_bracket_fused(&d, 2).unwrap();
        assert_eq!(fused, colored_state_sum(&d, 2).unwrap(), "{c:?}");
    }
    for k in 1..=3 {
        let d = pretzel(&[8, 6, k]);
        assert_eq!(colored_bracket_fused(&d, 1).unwrap(), bracket_state_sum(&d).unwrap());
    }
    assert_eq!(pipeline_for(&pretzel(&[1, 2])), Pipeline::Fused);
    assert_eq!(pipeline_for(&parse_pd(HOPF).unwrap()), Pipeline::StateSum);
    assert!(colored_bracket_fused(&parse_pd(HOPF).unwrap(), 2).is_err());
}

#[test]
fn colored_figure_eight_via_state_sum() {
    // The figure-eight is amphichiral with writhe zero, so its colored bracket is palindromic.
    let v = unreduced_colored_jones(&parse_pd(FIGURE_EIGHT).unwrap(), 2).unwrap();
    assert_eq!(v.value(), &v.value().mirror());
}

#[test]
fn reduced_jones_windows() {
    assert!(reduced_jones(&LinkDiagram::unknot(), 3).unwrap().to_laurent().is_one());
    assert_eq!(window(&pretzel(&[8, 6, 1]), 2, 2), [1, -1]);
    assert_eq!(window(&pretzel(&[8, 6, 2]), 2, 3), [1, -1, 3]);
    assert_eq!(window(&pretzel(&[3, 3, 2]), 2, 4), [1, -1, 3, -3]);
    // The third-color table is indexed by the cable color, so it is J_4 here.
    assert_eq!(window(&pretzel(&[3, 5, 2]), 4, 4), [1, -1, -1, 0]);
    assert!(reduced_jones(&LinkDiagram::unknot(), 1).is_err());
}

#[test]
fn min_degree_predictions() {
    let d = pretzel(&[2, 3, 2]);
    let s = d.s_minus() as i64;
    assert_eq!(predicted_min_degree(&d, 1).unwrap(), -7 - 2 * s);
    assert_eq!(bracket_state_sum(&d).unwrap().min_degree().unwrap(), -7 - 2 * s);
    let d = pretzel(&[2, 2, 2]);
    let s = d.s_minus() as i64;
    assert_eq!(predicted_min_degree(&d, 2).unwrap(), -24 - 4 * s);
    assert_eq!(colored_bracket_fused(&d, 2).unwrap().min_degree().unwrap(), -24 - 4 * s);
    assert!(matches!(predicted_min_degree(&parse_pd("PD[X[1,1,2,2]]").unwrap(), 1), Err(SkeinError::NotAdequate(_))));
}

#[test]
fn upsilon_networks() {
    let d = pretzel(&[1, 1, 1]);
    assert!(!build_upsilon(&d, 1, 0).unwrap().evaluate_frac().unwrap().is_zero());
    assert!(matches!(build_upsilon(&d, 2, 2), Err(SkeinError::IndexOutOfRange { .. })));
    let d = pretzel(&[2, 3, 2]);
    for (n, p) in [(1, 0), (2, 0), (2, 1)] {
        let direct = build_upsilon(&d, n, p).unwrap().evaluate_frac().unwrap();
        assert_eq!(direct, upsilon_fused(&d, n, p).unwrap());
        let (n, p, c, k1, s) = (n as i64, p as i64, 7, 2, d.s_minus() as i64);
        assert_eq!(direct.min_degree().unwrap(), -n * n * (c - k1) - 2 * (s * n - (n - p)));
    }
}

#[test]
fn budgets_are_enforced() {
    let tight = Limits { max_crossings: 2, max_networks: 10, max_fusion_terms: 4 };
    let d = pretzel(&[1, 1, 1]);
    assert!(matches!(bracket_state_sum_with(&d, &tight), Err(SkeinError::Budget { cap: 2, needed: 3, .. })));
    assert!(matches!(colored_state_sum_with(&d, 2, &tight), Err(SkeinError::Budget { cap: 10, needed: 27, .. })));
    assert!(matches!(colored_bracket_fused_with(&d, 2, &tight), Err(SkeinError::Budget { .. })));
}
