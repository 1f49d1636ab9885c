use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::pretzel::UnionFind;
use super::LinkDiagram;
use crate::error::{Result, SkeinError};

/// One of the two ways to smooth a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    /// The A-smoothing, weighted by `A`.
    Positive,
    /// The B-smoothing, weighted by `A^-1`.
    Negative,
}

impl Smoothing {
    /// The two arc pairs the smoothing joins at `X[a,b,c,d]`, as index pairs.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::Positive => [(0, 1), (2, 3)],
            Smoothing::Negative => [(0, 3), (1, 2)],
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Smoothing::Positive => 1,
            Smoothing::Negative => -1,
        }
    }
}

/// An assignment of smoothings to crossings; entries may be missing while a
/// state is being built, but only total states can be applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    choices: Vec<Option<Smoothing>>,
}

impl State {
    /// A state with no crossing assigned yet.
    pub fn partial(crossings: usize) -> Self {
        State { choices: vec![None; crossings] }
    }

    pub fn uniform(crossings: usize, s: Smoothing) -> Self {
        State { choices: vec![Some(s); crossings] }
    }

    pub fn from_choices(choices: Vec<Smoothing>) -> Self {
        State { choices: choices.into_iter().map(Some).collect() }
    }

    pub fn set(&mut self, crossing: usize, s: Smoothing) {
        self.choices[crossing] = Some(s);
    }

    pub fn get(&self, crossing: usize) -> Option<Smoothing> {
        self.choices.get(crossing).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    /// `#positive - #negative`.
    pub fn exponent(&self) -> i64 {
        self.choices.iter().flatten().map(|s| s.sign()).sum()
    }

    fn total(&self, crossings: usize) -> Result<Vec<Smoothing>> {
        let assigned = self.choices.iter().filter(|c| c.is_some()).count();
        if self.choices.len() != crossings || assigned != crossings {
            return Err(SkeinError::PartialState { assigned, total: crossings });
        }
        Ok(self.choices.iter().map(|c| c.expect("checked")).collect())
    }
}

/// Circles of a smoothed diagram: a circle index for every arc label.
#[derive(Clone, Debug)]
pub struct Circles {
    pub of_label: HashMap<u32, usize>,
    /// Circles through at least one crossing.
    pub count: usize,
    /// Crossingless components of the diagram.
    pub free: usize,
}

impl Circles {
    pub fn total(&self) -> usize {
        self.count + self.free
    }
}

impl LinkDiagram {
    /// Smooths every crossing as `state` says and finds the resulting circles.
    pub fn circles(&self, state: &State) -> Result<Circles> {
        let choices = state.total(self.crossing_count())?;
        let labels = self.labels();
        let dense: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut uf = UnionFind::new(labels.len());
        for (x, s) in self.crossings().iter().zip(choices) {
            for (i, j) in s.pairs() {
                uf.union(dense[&x[i]], dense[&x[j]]);
            }
        }
        let mut roots: HashMap<usize, usize> = HashMap::new();
        let mut of_label = HashMap::with_capacity(labels.len());
        for (&l, &i) in &dense {
            let r = uf.find(i);
            let next = roots.len();
            of_label.insert(l, *roots.entry(r).or_insert(next));
        }
        Ok(Circles { of_label, count: roots.len(), free: self.free_loops() })
    }

    /// `|s(D)|`, the number of circles of the smoothed diagram.
    pub fn apply_state(&self, state: &State) -> Result<usize> {
        Ok(self.circles(state)?.total())
    }

    /// `|s_+(D)|`: circles of the all-positive state.
    pub fn s_plus(&self) -> usize {
        self.apply_state(&State::uniform(self.crossing_count(), Smoothing::Positive)).expect("total state")
    }

    /// `|s_-(D)|`: circles of the all-negative state.
    pub fn s_minus(&self) -> usize {
        self.apply_state(&State::uniform(self.crossing_count(), Smoothing::Negative)).expect("total state")
    }

    /// The diagram with crossing `index` replaced by the given smoothing.
    ///
    /// Arcs joined by the smoothing merge; a merged arc that no longer meets
    /// any crossing becomes a free loop. Regions lose the crossing and the
    /// pretzel shape is dropped.
    pub fn smooth_crossing(&self, index: usize, s: Smoothing) -> Result<LinkDiagram> {
        let xs = self.crossings();
        if index >= xs.len() {
            return Err(SkeinError::IndexOutOfRange { index: index as i64, max: xs.len() as i64 - 1 });
        }
        let labels = self.labels();
        let dense: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut uf = UnionFind::new(labels.len());
        for (i, j) in s.pairs() {
            uf.union(dense[&xs[index][i]], dense[&xs[index][j]]);
        }
        let mut crossings = Vec::with_capacity(xs.len() - 1);
        let mut used = std::collections::HashSet::new();
        for (k, x) in xs.iter().enumerate() {
            if k == index {
                continue;
            }
            let mut y = [0u32; 4];
            for (slot, l) in y.iter_mut().zip(x) {
                let root = uf.find(dense[l]);
                used.insert(root);
                *slot = labels[root];
            }
            crossings.push(y);
        }
        let closed = (0..labels.len()).filter(|&i| uf.find(i) == i && !used.contains(&i)).count();
        let regions = self
            .regions()
            .iter()
            .map(|r| super::TwistRegion {
                id: r.id,
                crossings: r
                    .crossings
                    .iter()
                    .filter(|&&c| c != index)
                    .map(|&c| if c > index { c - 1 } else { c })
                    .collect(),
            })
            .collect();
        LinkDiagram::new(
            format!("{} smoothed at {}", self.name, index + 1),
            crossings,
            regions,
            self.free_loops() + closed,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, pretzel};

    #[test]
    fn smoothing_a_kink_leaves_circles() {
        let d = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert_eq!(d.smooth_crossing(0, Smoothing::Positive).unwrap().free_loops(), 2);
        assert_eq!(d.smooth_crossing(0, Smoothing::Negative).unwrap().free_loops(), 1);
    }

    #[test]
    fn kink_states() {
        let d = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert_eq!(d.s_plus(), 2);
        assert_eq!(d.s_minus(), 1);
    }

    #[test]
    fn unknot_and_partial_states() {
        assert_eq!(LinkDiagram::unknot().apply_state(&State::partial(0)).unwrap(), 1);
        let d = pretzel(&[1, 1, 1]);
        let mut s = State::partial(3);
        s.set(0, Smoothing::Positive);
        assert!(matches!(d.apply_state(&s), Err(SkeinError::PartialState { assigned: 1, total: 3 })));
    }

    #[test]
    fn negative_state_of_pretzels_ignores_region_sizes() {
        // Each column smooths into two vertical strands, leaving r circles between columns.
        for c in [[1, 1, 1], [2, 3, 2], [8, 6, 3], [0, 2, 0]] {
            assert_eq!(pretzel(&c).s_minus(), 3, "{c:?}");
        }
    }
}
