use proptest::prelude::*;
use skein::algebra::{coeff_window, IntPoly, Step};
use skein::diagram::pretzel;
use skein::invariants::{bracket_state_sum, colored_bracket_fused, Limits};
use skein::stability::*;
use skein::verify::framing_invariant;

fn list(c: &[i64]) -> CoeffList {
    CoeffList::from_slice(c)
}

fn jones(regions: &str, color: &str, start: i64, end: i64) -> FamilySpec {
    FamilySpec::parse(regions, Quantity::Jones(FamilyExpr::parse(color).unwrap()), start, end).unwrap()
}

#[test]
fn shifted_and_negated_lists_are_equivalent() {
    // -q^-4 + 4q^-3 - 6 + 11q against 1 - 4q + 6q^4, both read from their lowest term.
    let a = CoeffList::new(-4, vec![-1, 4, 0, 0, -6, 11], Step::Quarter);
    let b = CoeffList::new(0, vec![1, -4, 0, 0, 6], Step::Quarter);
    assert!(n_equivalent(&a, &b, 5).unwrap());
    assert_eq!(stable_prefix(&a, &b), 5);
}

#[test]
fn maximality_pair() {
    let l = Limits::default();
    let a = Member::new(&[8, 6, 2], 2, Grading::QUnits).window(5, &l).unwrap();
    let b = Member::new(&[8, 6, 3], 2, Grading::QUnits).window(5, &l).unwrap();
    assert!(n_equivalent(&a, &b, 3).unwrap());
    assert!(!n_equivalent(&a, &b, 4).unwrap());
    assert_eq!(a.normalize().unwrap().prefix(4).unwrap().coeffs(), &[1, -1, 3, -3]);
    assert_eq!(b.normalize().unwrap().prefix(4).unwrap().coeffs(), &[1, -1, 3, -4]);
}

#[test]
fn tails_of_the_first_two_tables() {
    let l = Limits::default();
    let k1 = FamilyExpr::parse("k+1").unwrap();
    let r = family_tail(&jones("8,6,k", "2", 1, 10), &k1, &l).unwrap();
    assert!(r.passed);
    assert_eq!(r.tail.unwrap(), [1, -1, 3, -4, 6, -8, 10, -11, 13, -13, 14]);
    let r = family_tail(&jones("k,k,2", "2", 1, 10), &k1, &l).unwrap();
    assert!(r.passed);
    assert_eq!(r.tail.unwrap(), [1, -1, 3, -3, 5, -6, 7, -8, 9, -10, 11]);
}

#[test]
fn third_table_tail_at_rate_3k_plus_1() {
    let r = family_tail(&jones("k+2,k+4,k+1", "4", 1, 7), &FamilyExpr::parse("3*k+1").unwrap(), &Limits::default())
        .unwrap();
    assert!(r.passed, "{r}");
    assert_eq!(&r.tail.unwrap()[..10], &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6]);
}

#[test]
fn colored_rate_for_several_regions() {
    // Two regions grow together; the rate is driven by the smaller one.
    let spec = FamilySpec::parse("k,k+1,2", Quantity::Bracket(FamilyExpr::constant(2)), 1, 3).unwrap();
    let r = check_colored_rate(&spec, 0, &Limits::default()).unwrap();
    assert!(r.passed, "{r}");
    assert_eq!(r.steps.iter().map(|s| s.claimed).collect::<Vec<_>>(), [12, 20]);
}

#[test]
fn jones_rate_with_colour_and_twists() {
    // J_3 of P(k,k+1,2) at rate (n-1)k + i + 1 with n = 3, i = 0.
    let r =
        family_tail(&jones("k,k+1,2", "3", 1, 4), &FamilyExpr::parse("2*k+1").unwrap(), &Limits::default()).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn inflated_rates_fail() {
    let spec = FamilySpec::parse("2,2,k", Quantity::Bracket(FamilyExpr::constant(2)), 1, 4).unwrap();
    let r = check_colored_rate(&spec, 1, &Limits::default()).unwrap();
    assert!(!r.passed);
    assert!(r.steps.iter().all(|s| s.witness.is_some()));
}

#[test]
fn diagonal_family_has_a_tail() {
    let r = check_diagonal(&[2, 3, 2], 1, 2, &Limits::default()).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn color_stability_and_cross_twists() {
    let l = Limits::default();
    assert!(check_color_stability(&[2, 3, 2], (2, 3), &l).unwrap().passed);
    assert!(check_cross_twist(&[2, 3, 2], &[2, 0, 3], 2, &l).unwrap().pass);
    assert!(check_cross_twist(&[3, 3, 2], &[-2, 1, 0], 2, &l).unwrap().pass);
}

#[test]
fn reports_serialize() {
    let r = family_tail(&jones("8,6,k", "2", 1, 3), &FamilyExpr::parse("k+1").unwrap(), &Limits::default()).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: TailReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert!(text.contains("\"grading\":\"q-units\""));
}

#[test]
fn framing_does_not_move_windows() {
    for c in [[2, 3, 2], [8, 6, 1]] {
        let v = bracket_state_sum(&pretzel(&c)).unwrap().into_value();
        for (shift, negate) in [(4, false), (-12, true), (3, true)] {
            assert!(framing_invariant(&v, shift, negate, 12).unwrap());
        }
        let w = colored_bracket_fused(&pretzel(&c), 2).unwrap().into_value();
        assert!(framing_invariant(&w, -7, true, 16).unwrap());
    }
}

fn small_lists() -> impl Strategy<Value = Vec<i64>> {
    (1i64..4, prop::collection::vec(-2i64..3, 5)).prop_map(|(lead, mut rest)| {
        rest.insert(0, lead);
        rest
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equivalence_is_an_equivalence(a in small_lists(), b in small_lists(), c in small_lists(), n in 0usize..6, flip in any::<bool>()) {
        let (a, b, c) = (list(&a), list(&b), list(&c));
        prop_assert!(n_equivalent(&a, &a, n).unwrap());
        prop_assert_eq!(n_equivalent(&a, &b, n).unwrap(), n_equivalent(&b, &a, n).unwrap());
        if n_equivalent(&a, &b, n).unwrap() && n_equivalent(&b, &c, n).unwrap() {
            prop_assert!(n_equivalent(&a, &c, n).unwrap());
        }
        let neg: Vec<i64> = a.coeffs().iter().map(|x| if flip { -x } else { *x }).collect();
        prop_assert!(n_equivalent(&a, &CoeffList::new(17, neg, Step::Quarter), n).unwrap());
    }

    #[test]
    fn windows_of_shifted_polynomials(terms in prop::collection::vec((-20i64..20, -3i64..4), 1..8), s in -9i64..9) {
        let p = IntPoly::from_terms(terms.iter().copied());
        prop_assume!(!p.is_zero());
        prop_assert!(framing_invariant(&p, 4 * s, s % 2 == 0, 6).unwrap());
        let w = coeff_window(&p, 6, Step::Raw).unwrap();
        prop_assert_eq!(stable_prefix(&w, &w), 6);
    }
}

#[test]
fn lower_rates_pass_when_higher_rates_do() {
    let l = Limits::default();
    let spec = jones("8,6,k", "2", 1, 5);
    let base = FamilyExpr::parse("k+1").unwrap();
    let full = family_tail(&spec, &base, &l).unwrap();
    assert!(full.passed);
    for slack in [-1, -2] {
        let r = check_family(&spec, &RateRule::Lower(base.clone()), slack, &l).unwrap();
        assert!(r.passed);
    }
    // A different passing rate gives the same tail on the overlap.
    let slower = family_tail(&spec, &FamilyExpr::parse("k").unwrap(), &l).unwrap();
    let (a, b) = (full.tail.unwrap(), slower.tail.unwrap());
    assert_eq!(&a[..b.len()], &b[..]);
}
