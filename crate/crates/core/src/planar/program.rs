//! Closed skein pictures as bottom-to-top sequences of slices.

use std::collections::BTreeMap;

use super::matching::Matching;
use super::morphism::TLMorphism;
use crate::algebra::{internal_colors, IntPoly, QFrac, RationalFn};
use crate::error::{Result, SkeinError};

/// The two resolutions of a crossing between strands at positions `pos`, `pos+1`.
///
/// `Positive` has its A-smoothing vertical (`A·id + A⁻¹·e`); `Negative` has
/// its A-smoothing horizontal (`A·e + A⁻¹·id`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingSign {
    Positive,
    Negative,
}

#[derive(Clone, Debug)]
pub enum Slice {
    /// Asserts the current width without changing anything.
    Identity(usize),
    Cup(usize),
    Cap(usize),
    /// `count` nested cups centred at `pos`; produces `2 * count` points.
    NestedCups {
        pos: usize,
        count: usize,
    },
    /// `count` nested caps on `pos..pos + 2 * count`.
    NestedCaps {
        pos: usize,
        count: usize,
    },
    Projector {
        n: usize,
        pos: usize,
    },
    Crossing {
        sign: CrossingSign,
        pos: usize,
    },
    /// Trivalent vertex joining `a + b` strands into `c` (no projectors attached).
    Merge {
        a: usize,
        b: usize,
        c: usize,
        pos: usize,
    },
    /// Trivalent vertex splitting `c` strands into `a + b` (no projectors attached).
    Split {
        a: usize,
        b: usize,
        c: usize,
        pos: usize,
    },
    /// An arbitrary morphism glued onto `pos..`.
    Block {
        pos: usize,
        morphism: TLMorphism,
    },
}

impl Slice {
    /// Number of points consumed and produced.
    fn arity(&self) -> (usize, usize, usize) {
        match self {
            Slice::Identity(w) => (0, *w, *w),
            Slice::Cup(p) => (*p, 0, 2),
            Slice::Cap(p) => (*p, 2, 0),
            Slice::NestedCups { pos, count } => (*pos, 0, 2 * count),
            Slice::NestedCaps { pos, count } => (*pos, 2 * count, 0),
            Slice::Projector { n, pos } => (*pos, *n, *n),
            Slice::Crossing { pos, .. } => (*pos, 2, 2),
            Slice::Merge { a, b, c, pos } => (*pos, a + b, *c),
            Slice::Split { a, b, c, pos } => (*pos, *c, a + b),
            Slice::Block { pos, morphism } => (*pos, morphism.bottom(), morphism.top()),
        }
    }
}

/// An ordered list of slices read from the bottom (empty boundary) upwards.
#[derive(Clone, Debug, Default)]
pub struct SliceProgram {
    slices: Vec<Slice>,
}

impl SliceProgram {
    pub fn new() -> Self {
        SliceProgram::default()
    }

    pub fn push(&mut self, s: Slice) -> &mut Self {
        self.slices.push(s);
        self
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn extend(&mut self, other: &SliceProgram) -> &mut Self {
        self.slices.extend(other.slices.iter().cloned());
        self
    }

    /// Width after each slice, or the first slice whose arity does not fit.
    pub fn widths(&self) -> Result<Vec<usize>> {
        let mut w = 0usize;
        let mut out = Vec::with_capacity(self.slices.len());
        for (index, s) in self.slices.iter().enumerate() {
            if let Slice::Identity(k) = s {
                if *k != w {
                    return Err(SkeinError::ArityBreak { index, msg: format!("width is {w}, slice expects {k}") });
                }
            }
            let (pos, consumed, produced) = s.arity();
            if pos + consumed > w {
                return Err(SkeinError::ArityBreak {
                    index,
                    msg: format!("slice needs points {pos}..{} but width is {w}", pos + consumed),
                });
            }
            w = w - consumed + produced;
            out.push(w);
        }
        Ok(out)
    }

    /// Largest number of simultaneously open points.
    pub fn max_width(&self) -> Result<usize> {
        Ok(self.widths()?.into_iter().max().unwrap_or(0))
    }

    /// Evaluates a closed program to an exact fraction.
    pub fn evaluate_frac(&self) -> Result<QFrac> {
        let widths = self.widths()?;
        if let Some(&w) = widths.last() {
            if w != 0 {
                return Err(SkeinError::NotClosed(w));
            }
        }
        let mut state = TLMorphism::from_matching(Matching::identity(0));
        for (index, s) in self.slices.iter().enumerate() {
            state = apply_slice(&state, s).map_err(|e| match e {
                SkeinError::ArityMismatch { .. } => SkeinError::ArityBreak { index, msg: e.to_string() },
                other => other,
            })?;
        }
        state.closure_frac()
    }

    pub fn evaluate(&self) -> Result<RationalFn> {
        Ok(self.evaluate_frac()?.to_rational_fn())
    }

    /// Evaluates and asserts the result is a Laurent polynomial.
    pub fn evaluate_poly(&self) -> Result<IntPoly> {
        self.evaluate_frac()?.to_int_poly()
    }
}

/// Generic front end for [`SliceProgram::evaluate`].
pub fn evaluate(program: &SliceProgram) -> Result<RationalFn> {
    program.evaluate()
}

fn nested_cups(count: usize) -> Matching {
    let n = 2 * count;
    let partner = (0..n).map(|i| (n - 1 - i) as u16).collect();
    Matching::new_unchecked(0, n, partner)
}

fn nested_caps(count: usize) -> Matching {
    let n = 2 * count;
    let partner = (0..n).map(|i| (n - 1 - i) as u16).collect();
    Matching::new_unchecked(n, 0, partner)
}

/// The bare vertex as a matching from `a + b` bottom points to `c` top points.
pub fn merge_matching(a: usize, b: usize, c: usize) -> Result<Matching> {
    let (x, y, _z) = internal_colors(a as i64, b as i64, c as i64)?;
    let (x, y) = (x as usize, y as usize);
    let mut arcs = Vec::new();
    // The last x strands of the a-leg turn back into the first x strands of the b-leg.
    for j in 0..x {
        arcs.push((a - 1 - j, a + j));
    }
    for j in 0..y {
        arcs.push((j, a + b + j));
    }
    for j in x..b {
        arcs.push((a + j, a + b + y + (j - x)));
    }
    Matching::from_arcs(a + b, c, &arcs)
}

pub(crate) fn crossing_morphism(sign: CrossingSign) -> TLMorphism {
    let id = Matching::identity(2);
    let e = Matching::e(2, 0);
    let (on_id, on_e) = match sign {
        CrossingSign::Positive => (1, -1),
        CrossingSign::Negative => (-1, 1),
    };
    let mut terms = BTreeMap::new();
    terms.insert(id, IntPoly::monomial(1, on_id));
    terms.insert(e, IntPoly::monomial(1, on_e));
    TLMorphism::from_parts(2, 2, QFrac::one(), terms)
}

fn apply_slice(state: &TLMorphism, s: &Slice) -> Result<TLMorphism> {
    let block = |pos: usize, m: Matching| state.apply_at_top(pos, &TLMorphism::from_matching(m));
    match s {
        Slice::Identity(_) => Ok(state.clone()),
        Slice::Cup(p) => block(*p, nested_cups(1)),
        Slice::Cap(p) => block(*p, nested_caps(1)),
        Slice::NestedCups { pos, count } => block(*pos, nested_cups(*count)),
        Slice::NestedCaps { pos, count } => block(*pos, nested_caps(*count)),
        Slice::Projector { n, pos } => state.apply_projector(*pos, *n),
        Slice::Crossing { sign, pos } => state.apply_at_top(*pos, &crossing_morphism(*sign)),
        Slice::Merge { a, b, c, pos } => block(*pos, merge_matching(*a, *b, *c)?),
        Slice::Split { a, b, c, pos } => block(*pos, flip(&merge_matching(*a, *b, *c)?)),
        Slice::Block { pos, morphism } => state.apply_at_top(*pos, morphism),
    }
}

/// Upside-down mirror image (bottom and top exchanged, left-right order kept).
pub fn flip(m: &Matching) -> Matching {
    let (b, t) = (m.bottom(), m.top());
    let map = |p: usize| if p < b { t + p } else { p - b };
    let mut partner = vec![0u16; b + t];
    for p in 0..b + t {
        partner[map(p)] = map(m.partner(p)) as u16;
    }
    Matching::new_unchecked(t, b, partner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::special::circle_int;

    #[test]
    fn cup_then_cap_is_a_circle() {
        let mut p = SliceProgram::new();
        p.push(Slice::Cup(0)).push(Slice::Cap(0));
        assert_eq!(p.evaluate_poly().unwrap(), circle_int());
    }

    #[test]
    fn open_program_rejected() {
        let mut p = SliceProgram::new();
        p.push(Slice::Cup(0));
        assert_eq!(p.evaluate_frac(), Err(SkeinError::NotClosed(2)));
    }

    #[test]
    fn arity_break_reports_index() {
        let mut p = SliceProgram::new();
        p.push(Slice::Cup(0)).push(Slice::Cap(1));
        assert!(matches!(p.evaluate_frac(), Err(SkeinError::ArityBreak { index: 1, .. })));
    }

    #[test]
    fn merge_vertex_is_planar() {
        for (a, b, c) in [(1, 1, 2), (2, 2, 2), (3, 1, 2), (2, 3, 1), (1, 1, 0)] {
            let m = merge_matching(a, b, c).unwrap();
            assert_eq!((m.bottom(), m.top()), (a + b, c));
        }
        assert!(merge_matching(1, 1, 3).is_err());
    }
}
