//! Kauffman bracket and colored Jones evaluation.
//!
//! Two independent pipelines compute `<S_n(D)>`: a state sum over (colored)
//! smoothings, and the fusion path for pretzel diagrams. Values are
//! unreduced, normalized so that the empty diagram is 1, and carry the
//! framing monomial of the diagram as drawn.

mod fused;
mod statesum;
mod upsilon;

use serde::{Deserialize, Serialize};

use crate::algebra::special::delta_int;
use crate::algebra::{substitute_quarter, IntPoly, LaurentPoly, QPoly};
use crate::diagram::LinkDiagram;
use crate::error::{Result, SkeinError};

pub use fused::{colored_bracket_fused, colored_bracket_fused_with};
pub use statesum::{bracket_state_sum, bracket_state_sum_with, colored_state_sum, colored_state_sum_with};
pub use upsilon::{build_upsilon, upsilon_fused};

/// Work caps for the evaluators. Exceeding one is an error, never a silent fallback.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest crossing count for the classical state sum.
    pub max_crossings: usize,
    /// Largest number `(n+1)^c` of colored states.
    pub max_networks: u64,
    /// Largest number `(n+1)^r` of fusion terms.
    pub max_fusion_terms: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_crossings: 20, max_networks: 100_000, max_fusion_terms: 1_000_000 }
    }
}

/// An unreduced bracket value `<S_n(D)>` in `Z[A, A^-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketValue {
    value: IntPoly,
    color: usize,
}

impl BracketValue {
    pub fn new(value: IntPoly, color: usize) -> Self {
        BracketValue { value, color }
    }

    pub fn value(&self) -> &IntPoly {
        &self.value
    }

    pub fn into_value(self) -> IntPoly {
        self.value
    }

    pub fn color(&self) -> usize {
        self.color
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from(&self.value)
    }

    pub fn min_degree(&self) -> Result<i64> {
        self.value.min_degree()
    }
}

/// Which evaluator [`unreduced_colored_jones`] picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pipeline {
    Fused,
    StateSum,
}

/// The pipeline used for `d`: fused when the diagram is a labeled pretzel.
pub fn pipeline_for(d: &LinkDiagram) -> Pipeline {
    if d.pretzel_shape().is_some() {
        Pipeline::Fused
    } else {
        Pipeline::StateSum
    }
}

pub fn unreduced_colored_jones_with(d: &LinkDiagram, n: usize, limits: &Limits) -> Result<BracketValue> {
    match pipeline_for(d) {
        Pipeline::Fused => colored_bracket_fused_with(d, n, limits),
        Pipeline::StateSum if n == 1 => bracket_state_sum_with(d, limits),
        Pipeline::StateSum => colored_state_sum_with(d, n, limits),
    }
}

/// `<S_n(D)>`, routed to the fastest applicable pipeline.
pub fn unreduced_colored_jones(d: &LinkDiagram, n: usize) -> Result<BracketValue> {
    unreduced_colored_jones_with(d, n, &Limits::default())
}

pub fn reduced_jones_with(d: &LinkDiagram, big_n: usize, limits: &Limits) -> Result<QPoly> {
    if big_n < 2 {
        return Err(SkeinError::IndexOutOfRange { index: big_n as i64, max: i64::MAX });
    }
    let n = big_n - 1;
    let raw = unreduced_colored_jones_with(d, n, limits)?;
    let reduced = raw.value.exact_div(&delta_int(n as u32))?;
    substitute_quarter(&reduced)
}

/// The reduced colored Jones polynomial `J_N = <S_{N-1}(D)> / Δ_{N-1}` in `q = A^4`,
/// up to the framing monomial and a global sign.
pub fn reduced_jones(d: &LinkDiagram, big_n: usize) -> Result<QPoly> {
    reduced_jones_with(d, big_n, &Limits::default())
}

/// The lowest degree `-c n^2 - 2 n |s_-(D)|` of `<S_n(D)>`.
///
/// For `n = 1` the diagram must be minus-adequate; for larger colors it must
/// be alternating and adequate (a reduced alternating diagram).
pub fn predicted_min_degree(d: &LinkDiagram, n: usize) -> Result<i64> {
    if !d.is_minus_adequate() {
        return Err(SkeinError::NotAdequate(format!("{}: the all-negative state graph has a loop", d.name)));
    }
    if n > 1 && !(d.is_alternating() && d.is_adequate()) {
        return Err(SkeinError::NotAdequate(format!("{}: not a reduced alternating diagram", d.name)));
    }
    let c = d.crossing_count() as i64;
    let n = n as i64;
    Ok(-c * n * n - 2 * n * d.s_minus() as i64)
}
