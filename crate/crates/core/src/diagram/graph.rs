use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::states::{Smoothing, State};
use super::LinkDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StateGraphKind {
    Minus,
    Plus,
}

/// The graph of an all-negative or all-positive state: one vertex per circle,
/// one edge per crossing joining the circles on either side of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateGraph {
    pub kind: StateGraphKind,
    pub vertices: usize,
    /// Edges as unordered pairs `(u, v)` with `u <= v`.
    pub edges: Vec<(usize, usize)>,
    /// Whether parallel edges have been merged.
    pub reduced: bool,
}

impl StateGraph {
    pub fn of(d: &LinkDiagram, kind: StateGraphKind) -> StateGraph {
        let s = match kind {
            StateGraphKind::Minus => Smoothing::Negative,
            StateGraphKind::Plus => Smoothing::Positive,
        };
        let circles = d.circles(&State::uniform(d.crossing_count(), s)).expect("total state");
        let [(i, _), (j, _)] = s.pairs();
        let edges = d
            .crossings()
            .iter()
            .map(|x| {
                let (u, v) = (circles.of_label[&x[i]], circles.of_label[&x[j]]);
                (u.min(v), u.max(v))
            })
            .collect();
        StateGraph { kind, vertices: circles.total(), edges, reduced: false }
    }

    /// Merges parallel edges.
    pub fn reduce(&self) -> StateGraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        StateGraph { edges, reduced: true, ..self.clone() }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(u, v)| u == v)
    }

    fn multiplicities(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &e in &self.edges {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    /// Graph isomorphism (respecting edge multiplicities) by backtracking.
    pub fn is_isomorphic(&self, other: &StateGraph) -> bool {
        if self.vertices != other.vertices || self.edges.len() != other.edges.len() {
            return false;
        }
        let n = self.vertices;
        let (ma, mb) = (self.multiplicities(), other.multiplicities());
        let mult = |m: &BTreeMap<(usize, usize), usize>, u: usize, v: usize| -> usize {
            m.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
        };
        let degree = |m: &BTreeMap<(usize, usize), usize>, u: usize| -> usize {
            m.iter().map(|(&(a, b), &c)| c * (usize::from(a == u) + usize::from(b == u))).sum()
        };
        let da: Vec<usize> = (0..n).map(|u| degree(&ma, u)).collect();
        let db: Vec<usize> = (0..n).map(|u| degree(&mb, u)).collect();
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }

        fn extend(
            k: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        ) -> bool {
            if k == used.len() {
                return true;
            }
            for w in 0..used.len() {
                if !used[w] && ok(k, w, map) {
                    used[w] = true;
                    map.push(w);
                    if extend(k + 1, map, used, ok) {
                        return true;
                    }
                    map.pop();
                    used[w] = false;
                }
            }
            false
        }
        let ok = |k: usize, w: usize, map: &[usize]| -> bool {
            da[k] == db[w]
                && mult(&ma, k, k) == mult(&mb, w, w)
                && map.iter().enumerate().all(|(u, &x)| mult(&ma, u, k) == mult(&mb, x, w))
        };
        extend(0, &mut Vec::with_capacity(n), &mut vec![false; n], &ok)
    }

    /// Graphviz text for the graph.
    pub fn to_dot(&self) -> String {
        let name = match (self.kind, self.reduced) {
            (StateGraphKind::Minus, false) => "G_minus",
            (StateGraphKind::Minus, true) => "G_minus_reduced",
            (StateGraphKind::Plus, false) => "G_plus",
            (StateGraphKind::Plus, true) => "G_plus_reduced",
        };
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.vertices {
            writeln!(out, "  v{v};").expect("write to string");
        }
        for (u, v) in &self.edges {
            writeln!(out, "  v{u} -- v{v};").expect("write to string");
        }
        out.push_str("}\n");
        out
    }
}

impl LinkDiagram {
    pub fn minus_graph(&self) -> StateGraph {
        StateGraph::of(self, StateGraphKind::Minus)
    }

    pub fn reduced_minus_graph(&self) -> StateGraph {
        self.minus_graph().reduce()
    }

    pub fn plus_graph(&self) -> StateGraph {
        StateGraph::of(self, StateGraphKind::Plus)
    }

    /// The all-negative state graph has no loop.
    pub fn is_minus_adequate(&self) -> bool {
        !self.minus_graph().has_loop()
    }

    pub fn is_plus_adequate(&self) -> bool {
        !self.plus_graph().has_loop()
    }

    pub fn is_adequate(&self) -> bool {
        self.is_minus_adequate() && self.is_plus_adequate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, pretzel};

    #[test]
    fn pretzel_minus_graph_counts() {
        let g = pretzel(&[2, 2, 2]).minus_graph();
        assert_eq!(g.vertices, 3);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.reduce().edge_count(), 3);
    }

    #[test]
    fn nugatory_crossing_is_inadequate_on_one_side() {
        let d = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert!(d.is_minus_adequate() != d.is_plus_adequate());
        assert!(!d.is_adequate());
    }

    #[test]
    fn empty_graph_dot() {
        let d = LinkDiagram::new("empty", vec![], vec![], 0).unwrap();
        assert_eq!(d.minus_graph().to_dot(), "graph G_minus {\n}\n");
        assert!(d.is_adequate());
    }

    #[test]
    fn isomorphism_respects_multiplicity() {
        let a = pretzel(&[2, 2, 2]).minus_graph();
        let b = pretzel(&[3, 4, 2]).minus_graph();
        assert!(!a.is_isomorphic(&b));
        assert!(a.reduce().is_isomorphic(&b.reduce()));
    }
}
