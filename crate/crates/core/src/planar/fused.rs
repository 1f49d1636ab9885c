//! Fused evaluation of pretzel-type networks.
//!
//! A fused twist region is a morphism between two pairs of `n`-cables, and
//! every leg of it ends on a projector. In the "sweep" frame (the vertical
//! frame turned a quarter turn counterclockwise) the regions are stacked and
//! closed up, so the whole network is the closure of a product of such
//! morphisms with `f_n ⊗ f_n` between consecutive factors.
//!
//! Because every boundary block carries a projector, only matchings without
//! an arc inside a block survive. There are exactly `n + 1` of them, indexed
//! by the number `a` of arcs between the two bottom blocks, so each region
//! becomes a vector of length `n + 1` and the product reduces to bilinear
//! structure constants computed once per color.

use std::collections::HashMap;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rayon::prelude::*;

use super::matching::Matching;
use super::morphism::TLMorphism;
use super::network::rung_element;
use super::program::{Slice, SliceProgram};
use crate::algebra::special::{fusion_weight, twist_coeff_int};
use crate::algebra::{IntPoly, QFrac};
use crate::error::{Result, SkeinError};

/// A vector in the good basis.
pub type GoodVector = Vec<QFrac>;

static BASES: Lazy<RwLock<HashMap<usize, Arc<GoodBasis>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Turns a vertical-frame morphism of two cable pairs into the sweep frame.
pub fn to_sweep_frame(t: &TLMorphism, n: usize) -> Result<TLMorphism> {
    t.reshape(3 * n, 2 * n)
}

/// The good matching with `a` arcs between the bottom blocks, in the sweep frame.
pub fn good_matching(n: usize, a: usize) -> Matching {
    assert!(a <= n);
    let mut cyc = vec![0usize; 4 * n];
    let mut join = |x: usize, y: usize| {
        cyc[x] = y;
        cyc[y] = x;
    };
    for j in 0..a {
        join(n - 1 - j, n + j);
        join(3 * n - 1 - j, 3 * n + j);
    }
    for j in 0..n - a {
        join(2 * n - 1 - j, 2 * n + j);
        join(4 * n - 1 - j, j);
    }
    let proto = Matching::identity(2 * n);
    let mut partner = vec![0u16; 4 * n];
    for (c, &d) in cyc.iter().enumerate() {
        partner[proto.point_at_cyclic(c)] = proto.point_at_cyclic(d) as u16;
    }
    Matching::new(2 * n, 2 * n, partner).expect("good matchings are planar")
}

/// Precomputed data for one color `n`.
pub struct GoodBasis {
    n: usize,
    index: HashMap<Matching, usize>,
    basis: Vec<Matching>,
    /// `structure[a][b]`: good vector of `G_a`, then `f_n ⊗ f_n`, then `G_b`.
    structure: Vec<Vec<GoodVector>>,
    /// Closure of `G_a` followed by `f_n ⊗ f_n`.
    closures: Vec<QFrac>,
    /// Sweep-frame vectors of the rung elements `T_{n,p}`.
    rungs: Vec<GoodVector>,
    weights: Vec<QFrac>,
    twists: Vec<IntPoly>,
}

impl GoodBasis {
    /// The (memoized) basis data for color `n`.
    pub fn get(n: usize) -> Result<Arc<GoodBasis>> {
        if let Some(b) = BASES.read().get(&n) {
            return Ok(b.clone());
        }
        let b = Arc::new(GoodBasis::build(n)?);
        BASES.write().entry(n).or_insert_with(|| b.clone());
        Ok(b)
    }

    fn build(n: usize) -> Result<GoodBasis> {
        if n == 0 {
            return Err(SkeinError::Unsupported("color 0 has no cables".into()));
        }
        let basis: Vec<Matching> = (0..=n).map(|a| good_matching(n, a)).collect();
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut gb = GoodBasis {
            n,
            index,
            basis,
            structure: Vec::new(),
            closures: Vec::new(),
            rungs: Vec::new(),
            weights: Vec::new(),
            twists: Vec::new(),
        };
        let legs: Vec<TLMorphism> = (0..=n)
            .into_par_iter()
            .map(|a| TLMorphism::from_matching(gb.basis[a].clone()).apply_projector(0, n)?.apply_projector(n, n))
            .collect::<Result<_>>()?;
        gb.closures = legs.par_iter().map(|t| t.closure_frac()).collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|a| (0..=n).map(move |b| (a, b))).collect();
        let flat: Vec<GoodVector> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let t = legs[a].compose(&TLMorphism::from_matching(gb.basis[b].clone()))?;
                Ok(gb.vector_of(&t))
            })
            .collect::<Result<_>>()?;
        gb.structure = flat.chunks(n + 1).map(|c| c.to_vec()).collect();
        gb.rungs = (0..=n)
            .into_par_iter()
            .map(|p| Ok(gb.vector_of(&to_sweep_frame(&rung_element(n, p)?, n)?)))
            .collect::<Result<_>>()?;
        gb.weights = (0..=n).map(|p| fusion_weight(n as u32, p as u32)).collect::<Result<_>>()?;
        gb.twists = (0..=n).map(|p| twist_coeff_int(n as i64, n as i64, 2 * p as i64)).collect::<Result<_>>()?;
        Ok(gb)
    }

    pub fn color(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Matching] {
        &self.basis
    }

    /// Coefficients of the good matchings in a sweep-frame morphism.
    pub fn vector_of(&self, t: &TLMorphism) -> GoodVector {
        let mut v = vec![QFrac::zero(); self.n + 1];
        for (m, c) in t.numerators() {
            if let Some(&i) = self.index.get(m) {
                v[i] = t.scale().mul_poly(c);
            }
        }
        v
    }

    pub fn rung(&self, p: usize) -> &GoodVector {
        &self.rungs[p]
    }

    pub fn weight(&self, p: usize) -> &QFrac {
        &self.weights[p]
    }

    pub fn twist(&self, p: usize) -> &IntPoly {
        &self.twists[p]
    }

    /// The fused region with `k` crossings: `Σ_p w_p μ_p^k v_p`.
    pub fn twist_region(&self, k: u32) -> GoodVector {
        let mut out = vec![QFrac::zero(); self.n + 1];
        for p in 0..=self.n {
            let coeff = self.weights[p].mul_poly(&self.twists[p].pow(k));
            for (slot, x) in out.iter_mut().zip(&self.rungs[p]) {
                *slot = slot.add(&x.mul(&coeff));
            }
        }
        out
    }

    /// Stacks `upper` on top of `lower` (projectors in between).
    pub fn product(&self, lower: &GoodVector, upper: &GoodVector) -> GoodVector {
        let mut out = vec![QFrac::zero(); self.n + 1];
        for (a, x) in lower.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in upper.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul(y);
                for (slot, s) in out.iter_mut().zip(&self.structure[a][b]) {
                    if !s.is_zero() {
                        *slot = slot.add(&s.mul(&xy));
                    }
                }
            }
        }
        out
    }

    /// Closure of a product vector (with the final `f_n ⊗ f_n`).
    pub fn close(&self, v: &GoodVector) -> QFrac {
        v.iter().zip(&self.closures).fold(QFrac::zero(), |acc, (x, c)| acc.add(&x.mul(c)))
    }

    /// Closes the product of the given columns, bottom to top.
    pub fn close_columns(&self, columns: &[GoodVector]) -> Result<QFrac> {
        let mut it = columns.iter();
        let first = it.next().ok_or(SkeinError::EmptyList)?;
        let prod = it.fold(first.clone(), |acc, c| self.product(&acc, c));
        Ok(self.close(&prod))
    }
}

/// The prism network of a fused pretzel: two `n`-colored cycles joined by
/// rungs of colors `2 p_i`, written as a slice program of width `4n`.
pub fn drum(n: usize, rung_colors: &[usize]) -> Result<SliceProgram> {
    let mut prog = SliceProgram::new();
    prog.push(Slice::NestedCups { pos: 0, count: 2 * n });
    for &c in rung_colors {
        if c % 2 != 0 || c > 2 * n {
            return Err(SkeinError::Inadmissible(n as i64, n as i64, c as i64));
        }
        let rung = to_sweep_frame(&rung_element(n, c / 2)?, n)?;
        push_column(&mut prog, n, rung);
    }
    prog.push(Slice::NestedCaps { pos: 0, count: 2 * n });
    Ok(prog)
}

/// Appends a sweep-frame column followed by the projectors on both cables.
pub fn push_column(prog: &mut SliceProgram, n: usize, column: TLMorphism) {
    prog.push(Slice::Block { pos: 0, morphism: column })
        .push(Slice::Projector { n, pos: 0 })
        .push(Slice::Projector { n, pos: n });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_matchings_are_distinct_and_clean() {
        for n in 1..=4 {
            let gb = GoodBasis::get(n).unwrap();
            assert_eq!(gb.basis().len(), n + 1);
            for m in gb.basis() {
                assert!(!m.bottom_arc_within(0, n) && !m.bottom_arc_within(n, n));
                assert!(!m.top_arc_within(0, n) && !m.top_arc_within(n, n));
            }
        }
    }

    #[test]
    fn sweep_frame_rotates_cups_into_strands() {
        // The turnback rung in the vertical frame is two straight cables in the sweep frame.
        let n = 2;
        let t = to_sweep_frame(&TLMorphism::from_matching(good_matching(n, n)), n).unwrap();
        let (m, _) = t.numerators().next().unwrap();
        assert_eq!(*m, good_matching(n, 0));
    }
}
