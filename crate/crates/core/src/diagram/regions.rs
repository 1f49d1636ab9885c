//! Twist-region detection by bigon adjacency.
//!
//! Two crossings bound a bigon when they share two arcs that sit next to each
//! other around both crossings. In a negative twist region every such bigon is
//! cut off as a circle by the positive smoothing of its two crossings, so the
//! shared arcs form a positive pair (`{a,b}` or `{c,d}`) at both ends. Negative
//! chains are found first; crossings left alone are then grouped through
//! bigons of the opposite kind, so a positive twist such as the Hopf link still
//! forms a single region.

use super::pretzel::UnionFind;
use super::states::Smoothing;
use super::TwistRegion;

fn pair_kind(x: &[u32; 4], e: u32, f: u32) -> Option<Smoothing> {
    let i = x.iter().position(|&l| l == e)?;
    let j = x.iter().position(|&l| l == f)?;
    let (lo, hi) = (i.min(j), i.max(j));
    match (lo, hi) {
        (0, 1) | (2, 3) => Some(Smoothing::Positive),
        (1, 2) | (0, 3) => Some(Smoothing::Negative),
        _ => None,
    }
}

/// Whether crossings `x` and `y` bound a bigon of the given kind.
fn bigon(x: &[u32; 4], y: &[u32; 4], kind: Smoothing) -> bool {
    let shared: Vec<u32> = {
        let mut v: Vec<u32> = x.iter().copied().filter(|l| y.contains(l)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for (i, &e) in shared.iter().enumerate() {
        for &f in &shared[i + 1..] {
            if pair_kind(x, e, f) == Some(kind) && pair_kind(y, e, f) == Some(kind) {
                return true;
            }
        }
    }
    false
}

fn chains(crossings: &[[u32; 4]], members: &[usize], kind: Smoothing) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(crossings.len());
    let mut adj = vec![Vec::new(); crossings.len()];
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            if bigon(&crossings[i], &crossings[j], kind) {
                uf.union(i, j);
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &i in members {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    groups.into_values().map(|g| order_chain(&g, &adj)).collect()
}

/// Walks a chain from its smallest endpoint (or smallest member for a cycle).
fn order_chain(group: &[usize], adj: &[Vec<usize>]) -> Vec<usize> {
    let start = group.iter().copied().filter(|&i| adj[i].len() <= 1).min().unwrap_or(group[0]);
    let mut order = vec![start];
    let mut seen = vec![start];
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().filter(|j| !seen.contains(j)).min() {
        order.push(next);
        seen.push(next);
        cur = next;
    }
    // Branching adjacency (not a 2-strand twist) keeps the remaining members in index order.
    for &i in group {
        if !seen.contains(&i) {
            order.push(i);
        }
    }
    order
}

/// Maximal twist regions of a PD diagram, numbered by their first crossing.
pub fn detect_twist_regions(crossings: &[[u32; 4]]) -> Vec<TwistRegion> {
    let all: Vec<usize> = (0..crossings.len()).collect();
    let mut groups = Vec::new();
    let mut singles = Vec::new();
    for g in chains(crossings, &all, Smoothing::Positive) {
        if g.len() > 1 {
            groups.push(g);
        } else {
            singles.extend(g);
        }
    }
    groups.extend(chains(crossings, &singles, Smoothing::Negative));
    groups.sort_by_key(|g| *g.iter().min().expect("nonempty"));
    groups.into_iter().enumerate().map(|(i, crossings)| TwistRegion { id: i + 1, crossings }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::pretzel;

    #[test]
    fn pretzel_columns_are_recovered() {
        for c in [vec![2, 3, 2], vec![8, 6, 3], vec![1, 2, 2], vec![2, 1, 3, 4]] {
            let d = pretzel(&c);
            assert_eq!(detect_twist_regions(d.crossings()), d.regions().to_vec(), "{c:?}");
        }
    }

    #[test]
    fn neighbouring_single_crossings_twist_sideways() {
        // P(1,1,1) is the trefoil drawn as one horizontal twist.
        let r = detect_twist_regions(pretzel(&[1, 1, 1]).crossings());
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].count(), 3);
    }
}
