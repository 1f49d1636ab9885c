use std::collections::{BTreeMap, HashMap};

use skein::diagram::*;
use skein::SkeinError;

/// Circle count by walking the smoothed diagram, independent of the library's union-find.
fn traced_circles(d: &LinkDiagram, choices: &[Smoothing]) -> usize {
    // Nodes are crossing corners (crossing, position); each arc label joins its two corners,
    // each smoothing joins corner pairs inside a crossing.
    let xs = d.crossings();
    let mut adj: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    let mut at: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (i, x) in xs.iter().enumerate() {
        for (k, &l) in x.iter().enumerate() {
            at.entry(l).or_default().push((i, k));
        }
        let pairs: &[(usize, usize)] = match choices[i] {
            Smoothing::Positive => &[(0, 1), (2, 3)],
            Smoothing::Negative => &[(0, 3), (1, 2)],
        };
        for &(a, b) in pairs {
            adj.entry((i, a)).or_default().push((i, b));
            adj.entry((i, b)).or_default().push((i, a));
        }
    }
    for ends in at.values() {
        adj.entry(ends[0]).or_default().push(ends[1]);
        adj.entry(ends[1]).or_default().push(ends[0]);
    }
    let mut seen = std::collections::HashSet::new();
    let mut circles = 0;
    for &start in adj.keys() {
        if seen.insert(start) {
            circles += 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    circles + d.free_loops()
}

fn all_states(c: usize) -> impl Iterator<Item = Vec<Smoothing>> {
    (0..1u32 << c).map(move |mask| {
        (0..c).map(|i| if mask >> i & 1 == 1 { Smoothing::Positive } else { Smoothing::Negative }).collect()
    })
}

#[test]
fn pretzel_builder_shapes() {
    let d = pretzel(&[1, 1, 1]);
    assert_eq!((d.crossing_count(), d.regions().len()), (3, 3));
    let d = pretzel(&[8, 6, 3]);
    assert_eq!(d.crossing_count(), 17);
    assert!(d.is_alternating());
    let d = pretzel(&[2, 0, 2]);
    assert_eq!(d.regions()[1].count(), 0);
    assert_eq!(d.crossing_count(), 4);
}

#[test]
fn pd_parsing() {
    let hopf = parse_pd("PD[X[1,4,2,3],X[3,2,4,1]]").unwrap();
    assert_eq!(hopf.crossing_count(), 2);
    assert_eq!(hopf.regions().len(), 1);
    assert_eq!(hopf.regions()[0].count(), 2);
    assert!(matches!(parse_pd("PD[X[1,2,3]]"), Err(SkeinError::Parse { .. })));
    assert!(matches!(parse_pd("PD[X[1,2,3,4]"), Err(SkeinError::Parse { .. })));
    let kink = parse_pd("PD[X[1,1,2,2]]").unwrap();
    assert_eq!(kink.crossing_count(), 1);
}

#[test]
fn pd_round_trip() {
    let d = pretzel(&[2, 3, 1]);
    let e = parse_pd(&d.to_pd()).unwrap();
    assert_eq!(e.crossings(), d.crossings());
    let j = LinkDiagram::from_json(&d.to_json().unwrap()).unwrap();
    assert_eq!(j, d);
}

#[test]
fn state_circles_match_a_traced_count() {
    for d in
        [pretzel(&[1, 1, 1]), pretzel(&[2, 1, 3]), pretzel(&[2, 0, 2]), parse_pd("PD[X[1,4,2,3],X[3,2,4,1]]").unwrap()]
    {
        for choices in all_states(d.crossing_count()) {
            let s = State::from_choices(choices.clone());
            assert_eq!(d.apply_state(&s).unwrap(), traced_circles(&d, &choices), "{}", d.name);
        }
    }
}

#[test]
fn basic_state_counts() {
    assert_eq!(LinkDiagram::unknot().apply_state(&State::partial(0)).unwrap(), 1);
    let kink = parse_pd("PD[X[1,1,2,2]]").unwrap();
    assert_eq!((kink.s_plus(), kink.s_minus()), (2, 1));
    let d = pretzel(&[1, 1, 1]);
    let neg = vec![Smoothing::Negative; 3];
    assert_eq!(d.s_minus(), traced_circles(&d, &neg));
    assert_eq!(d.s_minus(), d.minus_graph().vertices);
}

#[test]
fn states_ignore_arc_names() {
    let d = pretzel(&[3, 2, 2]);
    let e = d.relabel(|l| 1000 - 7 * l);
    for choices in all_states(d.crossing_count()).step_by(37) {
        let s = State::from_choices(choices);
        assert_eq!(d.apply_state(&s).unwrap(), e.apply_state(&s).unwrap());
    }
}

#[test]
fn minus_graphs() {
    let g = pretzel(&[2, 2, 2]).minus_graph();
    assert_eq!(g.edge_count(), 6);
    assert!(pretzel(&[2, 2, 2]).reduced_minus_graph().edge_count() <= 3);
    let reference = pretzel(&[2, 2, 2]).reduced_minus_graph();
    for c in [[3, 4, 2], [5, 2, 3]] {
        assert!(pretzel(&c).reduced_minus_graph().is_isomorphic(&reference), "{c:?}");
    }
    // Unreduced graphs remember the region sizes.
    assert!(!pretzel(&[3, 4, 2]).minus_graph().is_isomorphic(&g));
}

#[test]
fn dot_output() {
    let dot = pretzel(&[2, 2, 2]).minus_graph().to_dot();
    assert_eq!(dot.matches(" -- ").count(), 6);
    let reduced = pretzel(&[2, 2, 2]).reduced_minus_graph().to_dot();
    assert_eq!(reduced.matches(" -- ").count(), 3);
    let empty = LinkDiagram::new("empty", vec![], vec![], 0).unwrap().minus_graph().to_dot();
    assert!(empty.starts_with("graph ") && empty.trim_end().ends_with('}'));
}

#[test]
fn adequacy() {
    assert!(pretzel(&[2, 3, 2]).is_adequate());
    let kink = parse_pd("PD[X[1,1,2,2]]").unwrap();
    assert!(kink.is_minus_adequate() ^ kink.is_plus_adequate());
    assert!(LinkDiagram::unknot().is_adequate());
}

#[test]
fn twist_editing() {
    let d = pretzel(&[8, 6, 3]);
    assert_eq!(d.set_twists(&BTreeMap::from([(3, 1)])).unwrap(), pretzel(&[8, 6, 4]));
    let d = pretzel(&[2, 2, 2]);
    assert_eq!(d.set_twists(&BTreeMap::from([(2, -2)])).unwrap(), pretzel(&[2, 0, 2]));
    assert!(matches!(
        pretzel(&[2, 3, 2]).set_twists(&BTreeMap::from([(2, -5)])),
        Err(SkeinError::NegativeTwist { region: 2, count: -2 })
    ));
    assert!(parse_pd("PD[X[1,1,2,2]]").unwrap().set_twists(&BTreeMap::new()).is_err());
}

#[test]
fn negative_state_survives_added_twists() {
    for c in [[2, 3, 2], [8, 6, 1], [1, 1, 4]] {
        let d = pretzel(&c);
        for region in 1..=3 {
            let e = d.set_twists(&BTreeMap::from([(region, 1)])).unwrap();
            assert_eq!(e.s_minus(), d.s_minus());
        }
    }
}

#[test]
fn smoothing_a_marked_crossing_drops_one_circle() {
    // Positively smoothing one crossing of a marked region and undoing the resulting kinks
    // is the same as replacing the region by a single positively smoothed crossing.
    for c in [[2, 3, 2], [8, 6, 3], [1, 2, 5]] {
        for region in 0..3 {
            let mut one = c;
            one[region] = 1;
            let base = pretzel(&one);
            let x = base.regions()[region].crossings[0];
            let smoothed = base.smooth_crossing(x, Smoothing::Positive).unwrap();
            assert_eq!(smoothed.s_minus() + 1, pretzel(&c).s_minus(), "{c:?}, region {region}");
        }
    }
}
