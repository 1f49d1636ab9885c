//! Colored trivalent networks built from slices and projectors.
//!
//! Morphisms here live in the "vertical" frame: a pair of `n`-cables enters
//! at the bottom (`[left, right]`, `2n` points) and leaves at the top.

use super::matching::Matching;
use super::morphism::TLMorphism;
use super::program::{crossing_morphism, flip, merge_matching, CrossingSign, Slice, SliceProgram};
use crate::algebra::internal_colors;
use crate::algebra::special::fusion_coeff_int;
use crate::error::{Result, SkeinError};

/// A trivalent vertex with colors `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrivalentVertex {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TrivalentVertex {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        internal_colors(a as i64, b as i64, c as i64)?;
        Ok(TrivalentVertex { a, b, c })
    }

    /// `(x, y, z)`: strands between the a/b, a/c and b/c legs.
    pub fn internal(&self) -> (usize, usize, usize) {
        let (x, y, z) = internal_colors(self.a as i64, self.b as i64, self.c as i64).expect("checked in new");
        (x as usize, y as usize, z as usize)
    }
}

/// Whether the `a + b` legs sit below (`Merge`) or above (`Split`) the `c` leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrientation {
    Merge,
    Split,
}

/// The vertex with projectors on all three legs.
pub fn vertex_morphism(v: TrivalentVertex, orientation: VertexOrientation) -> Result<TLMorphism> {
    let m = merge_matching(v.a, v.b, v.c)?;
    match orientation {
        VertexOrientation::Merge => TLMorphism::identity(v.a + v.b)
            .apply_projector(0, v.a)?
            .apply_projector(v.a, v.b)?
            .apply_at_top(0, &TLMorphism::from_matching(m))?
            .apply_projector(0, v.c),
        VertexOrientation::Split => TLMorphism::identity(v.c)
            .apply_projector(0, v.c)?
            .apply_at_top(0, &TLMorphism::from_matching(flip(&m)))?
            .apply_projector(0, v.a)?
            .apply_projector(v.a, v.b),
    }
}

/// The theta graph: a `c`-edge split into `a` and `b` and merged again, closed up.
pub fn theta_program(a: usize, b: usize, c: usize) -> Result<SliceProgram> {
    TrivalentVertex::new(a, b, c)?;
    let mut p = SliceProgram::new();
    p.push(Slice::NestedCups { pos: 0, count: c })
        .push(Slice::Projector { n: c, pos: 0 })
        .push(Slice::Split { a, b, c, pos: 0 })
        .push(Slice::Projector { n: a, pos: 0 })
        .push(Slice::Projector { n: b, pos: a })
        .push(Slice::Merge { a, b, c, pos: 0 })
        .push(Slice::NestedCaps { pos: 0, count: c });
    Ok(p)
}

/// `n - p` nested caps joining the inner strands of the two cables, `f_{2p}`
/// on what is left, and `n - p` nested cups reopening the cables. No leg projectors.
pub fn rung_element(n: usize, p: usize) -> Result<TLMorphism> {
    if p > n {
        return Err(SkeinError::IndexOutOfRange { index: p as i64, max: n as i64 });
    }
    let turn = n - p;
    let caps = nested(turn, false);
    let cups = nested(turn, true);
    let mut t = TLMorphism::identity(2 * n).apply_at_top(p, &caps)?;
    t = t.apply_projector(0, 2 * p)?;
    t = t.apply_at_top(p, &cups)?;
    t.prune_bottom(0, n);
    t.prune_bottom(n, n);
    t.prune_top(0, n);
    t.prune_top(n, n);
    Ok(t)
}

fn nested(count: usize, cups: bool) -> TLMorphism {
    let n = 2 * count;
    let partner: Vec<u16> = (0..n).map(|i| (n - 1 - i) as u16).collect();
    let m = if cups { Matching::new_unchecked(0, n, partner) } else { Matching::new_unchecked(n, 0, partner) };
    TLMorphism::from_matching(m)
}

fn with_leg_projectors(n: usize, t: &TLMorphism) -> Result<TLMorphism> {
    let legs = TLMorphism::identity(2 * n).apply_projector(0, n)?.apply_projector(n, n)?;
    legs.compose(t)?.compose(&legs)
}

/// The fusion element `T_{n,p}` with projectors on all four legs.
pub fn fusion_element(n: usize, p: usize) -> Result<TLMorphism> {
    with_leg_projectors(n, &rung_element(n, p)?)
}

/// Applies the `n^2` strand crossings of two adjacent `n`-cables at `pos`, `pos + n`.
pub fn apply_cable_crossing(t: &TLMorphism, pos: usize, n: usize, sign: CrossingSign) -> Result<TLMorphism> {
    let x = crossing_morphism(sign);
    let mut t = t.clone();
    for i in (0..n).rev() {
        for j in 0..n {
            t = t.apply_at_top(pos + i + j, &x)?;
        }
    }
    Ok(t)
}

/// Two `n`-cables crossing once, every strand crossing of the given type.
pub fn cabled_crossing(n: usize, sign: CrossingSign) -> Result<TLMorphism> {
    with_leg_projectors(n, &apply_cable_crossing(&TLMorphism::identity(2 * n), 0, n, sign)?)
}

/// The `i`-th clasp smoothing of a cabled crossing: `n - i` strands turned back
/// horizontally and `i` running straight through, projectors on the legs.
pub fn clasp(n: usize, i: usize) -> Result<TLMorphism> {
    if i > n {
        return Err(SkeinError::IndexOutOfRange { index: i as i64, max: n as i64 });
    }
    let turn = n - i;
    let t = TLMorphism::identity(2 * n).apply_at_top(i, &nested(turn, false))?.apply_at_top(i, &nested(turn, true))?;
    with_leg_projectors(n, &t)
}

/// `Σ_i C_{n,i} · clasp(n, i)`.
pub fn clasp_expansion(n: usize) -> Result<TLMorphism> {
    let mut sum = TLMorphism::zero(2 * n, 2 * n);
    for i in 0..=n {
        let c = fusion_coeff_int(n as u32, i as u32)?;
        sum = sum.add(&clasp(n, i)?.scaled_poly(&c))?;
    }
    Ok(sum)
}

/// An `n`-cable with one kink: `f_n` followed by a cabled crossing with its own return path.
pub fn curl(n: usize) -> Result<TLMorphism> {
    let mut t = TLMorphism::identity(n).apply_projector(0, n)?;
    t = t.apply_at_top(n, &nested(n, true))?;
    t = apply_cable_crossing(&t, 0, n, CrossingSign::Negative)?;
    t.apply_at_top(n, &nested(n, false))
}

/// The vertical-frame element of a fused twist region, `Σ_p w_p μ_p^k T_{n,p}`.
pub fn fused_twist(n: usize, k: u32) -> Result<TLMorphism> {
    let mut sum = TLMorphism::zero(2 * n, 2 * n);
    for p in 0..=n {
        let w = crate::algebra::special::fusion_weight(n as u32, p as u32)?;
        let mu = crate::algebra::special::twist_coeff_int(n as i64, n as i64, 2 * p as i64)?.pow(k);
        sum = sum.add(&fusion_element(n, p)?.scaled(&w.mul_poly(&mu)))?;
    }
    Ok(sum)
}

/// Raises a vertical-frame morphism to the `k`-th power by stacking.
pub fn power(t: &TLMorphism, k: u32) -> Result<TLMorphism> {
    let mut out = TLMorphism::identity(t.bottom());
    for _ in 0..k {
        out = out.compose(t)?;
    }
    Ok(out)
}
