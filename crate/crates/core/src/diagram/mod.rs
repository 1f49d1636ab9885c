//! Link diagrams in planar-diagram (PD) form with labeled twist regions.
//!
//! A crossing `X[a,b,c,d]` lists its four arc labels counterclockwise,
//! starting from the incoming under-strand. Its A-smoothing joins `a` with
//! `b` and `c` with `d`; the B-smoothing joins `a` with `d` and `b` with `c`.

mod graph;
mod pd;
mod pretzel;
mod regions;
mod states;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SkeinError};

pub use graph::{StateGraph, StateGraphKind};
pub use pd::parse_pd;
pub use pretzel::pretzel;
pub use regions::detect_twist_regions;
pub use states::{Circles, Smoothing, State};

/// A maximal chain of bigon-adjacent crossings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRegion {
    /// 1-based region label.
    pub id: usize,
    /// Crossing indices in the region, in chain order.
    pub crossings: Vec<usize>,
}

impl TwistRegion {
    pub fn count(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub name: String,
    crossings: Vec<[u32; 4]>,
    regions: Vec<TwistRegion>,
    /// Crossingless unknotted components.
    free_loops: usize,
    /// Region sizes when the diagram is a standard pretzel diagram.
    pretzel_shape: Option<Vec<usize>>,
}

impl LinkDiagram {
    /// Validates arc multiplicities and region data.
    pub fn new(
        name: impl Into<String>,
        crossings: Vec<[u32; 4]>,
        regions: Vec<TwistRegion>,
        free_loops: usize,
    ) -> Result<Self> {
        let d = LinkDiagram { name: name.into(), crossings, regions, free_loops, pretzel_shape: None };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn with_pretzel_shape(mut self, shape: Vec<usize>) -> Self {
        self.pretzel_shape = Some(shape);
        self
    }

    /// The unknot drawn without crossings.
    pub fn unknot() -> Self {
        LinkDiagram {
            name: "unknot".into(),
            crossings: Vec::new(),
            regions: Vec::new(),
            free_loops: 1,
            pretzel_shape: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &l in x {
                *counts.entry(l).or_insert(0) += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(SkeinError::ArcMultiplicity { label: label as i64, count });
        }
        let mut seen = vec![false; self.crossings.len()];
        for r in &self.regions {
            for &c in &r.crossings {
                if c >= self.crossings.len() || seen[c] {
                    return Err(SkeinError::Unsupported(format!(
                        "region {} lists crossing {} twice or out of range",
                        r.id,
                        c + 1
                    )));
                }
                seen[c] = true;
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn regions(&self) -> &[TwistRegion] {
        &self.regions
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn pretzel_shape(&self) -> Option<&[usize]> {
        self.pretzel_shape.as_deref()
    }

    /// Distinct arc labels in increasing order.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Whether over- and under-passes alternate along every arc.
    pub fn is_alternating(&self) -> bool {
        // Positions 0 and 2 of `X[a,b,c,d]` are on the under-strand.
        let mut under: BTreeMap<u32, Vec<bool>> = BTreeMap::new();
        for x in &self.crossings {
            for (k, &l) in x.iter().enumerate() {
                under.entry(l).or_default().push(k % 2 == 0);
            }
        }
        under.values().all(|v| v[0] != v[1])
    }

    /// Whether every crossing belongs to some labeled region.
    pub fn fully_regioned(&self) -> bool {
        let covered: usize = self.regions.iter().map(|r| r.count()).sum();
        covered == self.crossings.len()
    }

    /// Changes region sizes by the given amounts (region id to change).
    ///
    /// Only standard pretzel diagrams can be edited; a region brought to zero
    /// crossings is replaced by its negative smoothing.
    pub fn set_twists(&self, deltas: &BTreeMap<usize, i64>) -> Result<LinkDiagram> {
        let shape = self
            .pretzel_shape
            .as_ref()
            .ok_or_else(|| SkeinError::Unsupported("twist editing needs a pretzel-shaped diagram".into()))?;
        let mut new_shape = shape.clone();
        for (&region, &delta) in deltas {
            if region == 0 || region > shape.len() {
                return Err(SkeinError::IndexOutOfRange { index: region as i64, max: shape.len() as i64 });
            }
            let count = shape[region - 1] as i64 + delta;
            if count < 0 {
                return Err(SkeinError::NegativeTwist { region, count });
            }
            new_shape[region - 1] = count as usize;
        }
        Ok(pretzel(&new_shape))
    }

    /// Writes the diagram in PD notation.
    pub fn to_pd(&self) -> String {
        let xs: Vec<String> =
            self.crossings.iter().map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])).collect();
        format!("PD[{}]", xs.join(", "))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| SkeinError::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<LinkDiagram> {
        let d: LinkDiagram =
            serde_json::from_str(text).map_err(|e| SkeinError::Parse { pos: e.column(), msg: e.to_string() })?;
        d.validate()?;
        Ok(d)
    }

    /// Relabels arcs through `f` (which must be injective).
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> LinkDiagram {
        let mut d = self.clone();
        for x in &mut d.crossings {
            for l in x.iter_mut() {
                *l = f(*l);
            }
        }
        d
    }
}
