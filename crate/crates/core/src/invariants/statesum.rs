//! State-sum oracles evaluated by gluing local pieces one at a time.
//!
//! Every crossing (and, for colors above one, every arc projector) is a
//! weighted sum of planar matchings on its own boundary points. Pieces are
//! glued in a fixed order; the running state records, for each boundary point
//! that is still open, the other open end of the strand through it. Equal
//! states are merged, so the cost is governed by the width of the open
//! frontier rather than by the number of states `2^c` or `(n+1)^c`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{BracketValue, Limits};
use crate::algebra::special::{circle_int, delta_int, fusion_coeff_int};
use crate::algebra::{IntPoly, QFrac};
use crate::diagram::LinkDiagram;
use crate::error::{Result, SkeinError};
use crate::planar::jones_wenzl;

type Pairs = Vec<(u32, u32)>;

struct Piece {
    points: Vec<u32>,
    alternatives: Vec<(IntPoly, Pairs)>,
}

struct Network {
    pieces: Vec<Piece>,
    /// Point glued to each point across a piece boundary.
    glue: Vec<u32>,
}

/// Open-end table of a partial gluing, kept sorted for hashing.
type Frontier = Vec<(u32, u32)>;

fn step(frontier: &Frontier, piece: &Piece, pairs: &Pairs, glue: &[u32], added: &[bool]) -> (Frontier, u32) {
    let mut fr: HashMap<u32, u32> = frontier.iter().copied().collect();
    for &(x, y) in pairs {
        fr.insert(x, y);
        fr.insert(y, x);
    }
    let mut loops = 0;
    for &p in &piece.points {
        let g = glue[p as usize];
        let g_new = piece.points.contains(&g);
        if g_new && g < p {
            continue;
        }
        if !g_new && !added[g as usize] {
            continue;
        }
        let u = fr[&p];
        let v = fr[&g];
        fr.remove(&p);
        fr.remove(&g);
        if u == g {
            loops += 1;
        } else {
            fr.insert(u, v);
            fr.insert(v, u);
        }
    }
    let mut out: Frontier = fr.into_iter().collect();
    out.sort_unstable();
    (out, loops)
}

fn contract(net: &Network, loop_value: &IntPoly) -> IntPoly {
    let total_points = net.glue.len();
    let mut added = vec![false; total_points];
    let mut states: HashMap<Frontier, IntPoly> = HashMap::from([(Vec::new(), IntPoly::one())]);
    let max_loops = net.pieces.iter().map(|p| p.points.len()).max().unwrap_or(0);
    let loop_powers: Vec<IntPoly> = (0..=max_loops as u32).map(|k| loop_value.pow(k)).collect();
    for piece in &net.pieces {
        let entries: Vec<(Frontier, IntPoly)> = states.into_iter().collect();
        states = entries
            .par_iter()
            .fold(HashMap::new, |mut acc: HashMap<Frontier, IntPoly>, (frontier, coeff)| {
                for (weight, pairs) in &piece.alternatives {
                    let (next, loops) = step(frontier, piece, pairs, &net.glue, &added);
                    let term = &(coeff * weight) * &loop_powers[loops as usize];
                    *acc.entry(next).or_insert_with(IntPoly::zero) += &term;
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert_with(IntPoly::zero) += &v;
                }
                a
            });
        states.retain(|_, v| !v.is_zero());
        for &p in &piece.points {
            added[p as usize] = true;
        }
    }
    states.remove(&Vec::new()).unwrap_or_else(IntPoly::zero)
}

/// Crossing order that keeps the open frontier small: each next crossing
/// shares as many arcs as possible with those already placed.
fn crossing_order(d: &LinkDiagram) -> Vec<usize> {
    let xs = d.crossings();
    let mut placed = vec![false; xs.len()];
    let mut seen_labels = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(xs.len());
    for _ in 0..xs.len() {
        let best = (0..xs.len())
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let shared = xs[i].iter().filter(|l| seen_labels.contains(*l)).count();
                (shared, std::cmp::Reverse(i))
            })
            .expect("an unplaced crossing remains");
        placed[best] = true;
        seen_labels.extend(xs[best].iter().copied());
        order.push(best);
    }
    order
}

/// Builds the glued network of `n`-cabled crossings; each crossing is a sum of
/// clasps, and for `n > 1` every arc carries a projector.
fn cabled_network(d: &LinkDiagram, n: usize) -> Result<Network> {
    let xs = d.crossings();
    let crossing_points = 4 * n;
    let labels = d.labels();
    let label_index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let arc_base = xs.len() * crossing_points;
    let total = arc_base + if n > 1 { labels.len() * 2 * n } else { 0 };
    let leg = |x: usize, k: usize, j: usize| (x * crossing_points + k * n + j) as u32;

    // The two ends of every arc, in crossing order.
    let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); labels.len()];
    for (x, c) in xs.iter().enumerate() {
        for (k, l) in c.iter().enumerate() {
            ends[label_index[l]].push((x, k));
        }
    }

    let mut glue = vec![u32::MAX; total];
    let mut join = |p: u32, q: u32| {
        glue[p as usize] = q;
        glue[q as usize] = p;
    };
    for (e, both) in ends.iter().enumerate() {
        let [(x0, k0), (x1, k1)] = [both[0], both[1]];
        for j in 0..n {
            if n == 1 {
                join(leg(x0, k0, 0), leg(x1, k1, 0));
            } else {
                let base = arc_base + e * 2 * n;
                join(leg(x0, k0, j), (base + n - 1 - j) as u32);
                join(leg(x1, k1, j), (base + n + j) as u32);
            }
        }
    }

    let clasps: Vec<(IntPoly, Pairs)> =
        (0..=n).map(|i| Ok((fusion_coeff_int(n as u32, i as u32)?, clasp_pairs(n, i)))).collect::<Result<_>>()?;
    let projector: Vec<(IntPoly, Pairs)> = if n > 1 {
        jones_wenzl(n)?
            .numerators()
            .map(|(m, c)| {
                let pairs = (0..2 * n).filter(|&i| m.partner(i) > i).map(|i| (i as u32, m.partner(i) as u32)).collect();
                (c.clone(), pairs)
            })
            .collect()
    } else {
        Vec::new()
    };

    let mut pieces = Vec::new();
    let mut placed = vec![false; xs.len()];
    for x in crossing_order(d) {
        let offset = (x * crossing_points) as u32;
        pieces.push(Piece {
            points: (0..crossing_points as u32).map(|p| p + offset).collect(),
            alternatives: clasps
                .iter()
                .map(|(w, pairs)| (w.clone(), pairs.iter().map(|&(a, b)| (a + offset, b + offset)).collect()))
                .collect(),
        });
        placed[x] = true;
        if n == 1 {
            continue;
        }
        // Projectors on arcs whose ends are both in place.
        for (e, both) in ends.iter().enumerate() {
            if both.iter().any(|&(y, _)| y == x) && both.iter().all(|&(y, _)| placed[y]) {
                let base = (arc_base + e * 2 * n) as u32;
                pieces.push(Piece {
                    points: (0..2 * n as u32).map(|p| p + base).collect(),
                    alternatives: projector
                        .iter()
                        .map(|(w, pairs)| (w.clone(), pairs.iter().map(|&(a, b)| (a + base, b + base)).collect()))
                        .collect(),
                });
            }
        }
    }
    Ok(Network { pieces, glue })
}

/// Local pairs of the `i`-th clasp on legs `a, b, c, d` (strand `j` of leg `k`
/// is point `k n + j`, strands counted counterclockwise around the crossing):
/// `n - i` nested turnbacks along each positive pair and `i` along each
/// negative pair.
fn clasp_pairs(n: usize, i: usize) -> Pairs {
    let p = |k: usize, j: usize| (k * n + j) as u32;
    let (a, b, c, d) = (0, 1, 2, 3);
    let mut out = Vec::with_capacity(2 * n);
    for t in 0..n - i {
        out.push((p(a, n - 1 - t), p(b, t)));
        out.push((p(c, n - 1 - t), p(d, t)));
    }
    for t in 0..i {
        out.push((p(d, n - 1 - t), p(a, t)));
        out.push((p(b, n - 1 - t), p(c, t)));
    }
    out
}

/// Kauffman bracket by state sum, with `<empty> = 1` and `<O> = δ`.
pub fn bracket_state_sum_with(d: &LinkDiagram, limits: &Limits) -> Result<BracketValue> {
    let c = d.crossing_count();
    if c > limits.max_crossings {
        return Err(SkeinError::Budget {
            what: "crossings for the bracket state sum".into(),
            cap: limits.max_crossings as u64,
            needed: c as u64,
        });
    }
    let delta = circle_int();
    let body = contract(&cabled_network(d, 1)?, &delta);
    let value = &body * &delta.pow(d.free_loops() as u32);
    Ok(BracketValue::new(value, 1))
}

pub fn bracket_state_sum(d: &LinkDiagram) -> Result<BracketValue> {
    bracket_state_sum_with(d, &Limits::default())
}

/// `<S_n(D)>` by summing over colored states: each crossing becomes
/// `Σ_i C_{n,i}` times its `i`-th clasp, every arc carries `f_n`.
pub fn colored_state_sum_with(d: &LinkDiagram, n: usize, limits: &Limits) -> Result<BracketValue> {
    if n == 0 {
        return Ok(BracketValue::new(IntPoly::one(), 0));
    }
    let c = d.crossing_count() as u32;
    let needed = ((n + 1) as u64).checked_pow(c).unwrap_or(u64::MAX);
    if needed > limits.max_networks {
        return Err(SkeinError::Budget { what: "colored states".into(), cap: limits.max_networks, needed });
    }
    let circle = circle_int();
    let body = contract(&cabled_network(d, n)?, &circle);
    let mut value = &body * &delta_int(n as u32).pow(d.free_loops() as u32);
    if n > 1 && c > 0 {
        let scale = jones_wenzl(n)?.scale().clone();
        let arcs = d.labels().len();
        let mut s = QFrac::one();
        for _ in 0..arcs {
            s = s.mul(&scale);
        }
        value = s.mul_poly(&value).to_int_poly()?;
    }
    Ok(BracketValue::new(value, n))
}

pub fn colored_state_sum(d: &LinkDiagram, n: usize) -> Result<BracketValue> {
    colored_state_sum_with(d, n, &Limits::default())
}
