use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::matching::Matching;
use crate::algebra::cyclo::cyclotomic_a4;
use crate::algebra::special::circle_int;
use crate::algebra::{IntPoly, QFrac, RationalFn};
use crate::error::{Result, SkeinError};

/// A linear combination of planar matchings with coefficients in Q(A).
///
/// Coefficients are stored as Laurent polynomials times one shared scale
/// factor, so composition and tensoring never touch fractions term by term.
#[derive(Clone)]
pub struct TLMorphism {
    bottom: usize,
    top: usize,
    scale: QFrac,
    terms: BTreeMap<Matching, IntPoly>,
}

impl TLMorphism {
    pub fn zero(bottom: usize, top: usize) -> Self {
        TLMorphism { bottom, top, scale: QFrac::one(), terms: BTreeMap::new() }
    }

    pub fn from_matching(m: Matching) -> Self {
        let (bottom, top) = (m.bottom(), m.top());
        let mut terms = BTreeMap::new();
        terms.insert(m, IntPoly::one());
        TLMorphism { bottom, top, scale: QFrac::one(), terms }
    }

    pub fn identity(n: usize) -> Self {
        TLMorphism::from_matching(Matching::identity(n))
    }

    /// Builds from numerators and a shared scale.
    pub fn from_parts(bottom: usize, top: usize, scale: QFrac, terms: BTreeMap<Matching, IntPoly>) -> Self {
        let mut t = TLMorphism { bottom, top, scale, terms };
        t.terms.retain(|_, c| !c.is_zero());
        t
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn scale(&self) -> &QFrac {
        &self.scale
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.scale.is_zero()
    }

    /// Numerators (to be multiplied by [`TLMorphism::scale`]).
    pub fn numerators(&self) -> impl Iterator<Item = (&Matching, &IntPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Matching) -> RationalFn {
        match self.terms.get(m) {
            Some(c) => self.scale.mul_poly(c).to_rational_fn(),
            None => RationalFn::zero(),
        }
    }

    pub fn coefficient_frac(&self, m: &Matching) -> QFrac {
        match self.terms.get(m) {
            Some(c) => self.scale.mul_poly(c),
            None => QFrac::zero(),
        }
    }

    pub fn add_term(&mut self, m: Matching, c: &IntPoly) {
        debug_assert_eq!((m.bottom(), m.top()), (self.bottom, self.top));
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scaled(&self, s: &QFrac) -> TLMorphism {
        TLMorphism { scale: self.scale.mul(s), ..self.clone() }
    }

    pub fn scaled_poly(&self, p: &IntPoly) -> TLMorphism {
        TLMorphism {
            bottom: self.bottom,
            top: self.top,
            scale: self.scale.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * p)).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn rescaled(&self, new_scale: &QFrac) -> Result<TLMorphism> {
        let factor = self.scale.over(new_scale)?;
        Ok(TLMorphism {
            bottom: self.bottom,
            top: self.top,
            scale: new_scale.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * &factor)).collect(),
        })
    }

    /// Linear combination `self + c * other`.
    pub fn add_scaled(&self, other: &TLMorphism, c: &BigInt) -> Result<TLMorphism> {
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(SkeinError::ArityMismatch {
                expected: self.bottom + self.top,
                found: other.bottom + other.top,
            });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            let mut o = other.clone();
            o.terms.values_mut().for_each(|v| *v = v.scale(c));
            return Ok(o);
        }
        let common = self.scale.common_scale(&other.scale);
        let mut a = self.rescaled(&common)?;
        let b = other.rescaled(&common)?;
        for (m, v) in b.terms {
            let slot = a.terms.entry(m).or_default();
            slot.add_scaled(&v, c, 0);
        }
        a.terms.retain(|_, v| !v.is_zero());
        Ok(a)
    }

    pub fn add(&self, other: &TLMorphism) -> Result<TLMorphism> {
        self.add_scaled(other, &BigInt::from(1))
    }

    pub fn sub(&self, other: &TLMorphism) -> Result<TLMorphism> {
        self.add_scaled(other, &BigInt::from(-1))
    }

    /// Vertical stacking with `upper` placed on top of `self`.
    pub fn compose(&self, upper: &TLMorphism) -> Result<TLMorphism> {
        if self.top != upper.bottom {
            return Err(SkeinError::ArityMismatch { expected: self.top, found: upper.bottom });
        }
        let delta = circle_int();
        let mut loop_pows: Vec<IntPoly> = vec![IntPoly::one()];
        let mut terms: BTreeMap<Matching, IntPoly> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &upper.terms {
                let (m, loops) = m1.compose(m2)?;
                while loop_pows.len() <= loops {
                    let next = loop_pows.last().unwrap() * &delta;
                    loop_pows.push(next);
                }
                let coeff = &(c1 * c2) * &loop_pows[loops];
                *terms.entry(m).or_default() += &coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TLMorphism { bottom: self.bottom, top: upper.top, scale: self.scale.mul(&upper.scale), terms })
    }

    /// Side-by-side placement with `right` to the right of `self`.
    pub fn tensor(&self, right: &TLMorphism) -> TLMorphism {
        let mut terms: BTreeMap<Matching, IntPoly> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &right.terms {
                *terms.entry(m1.tensor(m2)).or_default() += &(c1 * c2);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TLMorphism {
            bottom: self.bottom + right.bottom,
            top: self.top + right.top,
            scale: self.scale.mul(&right.scale),
            terms,
        }
    }

    /// Markov closure, each loop worth `δ`.
    pub fn closure_frac(&self) -> Result<QFrac> {
        if self.bottom != self.top {
            return Err(SkeinError::ArityMismatch { expected: self.bottom, found: self.top });
        }
        let delta = circle_int();
        let mut sum = IntPoly::zero();
        for (m, c) in &self.terms {
            sum += &(c * &delta.pow(m.closure_loops()? as u32));
        }
        Ok(self.scale.mul_poly(&sum))
    }

    pub fn closure(&self) -> Result<RationalFn> {
        Ok(self.closure_frac()?.to_rational_fn())
    }

    /// Rotates the boundary (see [`Matching::reshape`]).
    pub fn reshape(&self, shift: usize, new_bottom: usize) -> Result<TLMorphism> {
        let n = self.bottom + self.top;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.reshape(shift, new_bottom)?, c.clone());
        }
        Ok(TLMorphism { bottom: new_bottom, top: n - new_bottom, scale: self.scale.clone(), terms })
    }

    /// Composes `local` onto the top points `pos..pos + local.bottom()`.
    pub fn apply_at_top(&self, pos: usize, local: &TLMorphism) -> Result<TLMorphism> {
        if pos + local.bottom > self.top {
            return Err(SkeinError::ArityMismatch { expected: self.top, found: pos + local.bottom });
        }
        let right = self.top - pos - local.bottom;
        let full = TLMorphism::identity(pos).tensor(local).tensor(&TLMorphism::identity(right));
        self.compose(&full)
    }

    /// Drops every term in which two top points of `pos..pos+len` are joined.
    pub fn prune_top(&mut self, pos: usize, len: usize) {
        self.terms.retain(|m, _| !m.top_arc_within(pos, len));
    }

    /// Drops every term in which two bottom points of `pos..pos+len` are joined.
    pub fn prune_bottom(&mut self, pos: usize, len: usize) {
        self.terms.retain(|m, _| !m.bottom_arc_within(pos, len));
    }

    /// Moves cyclotomic factors shared by every numerator into the scale.
    pub fn tidy(&mut self) {
        if self.terms.is_empty() {
            self.scale = QFrac::one();
            return;
        }
        let factors: Vec<u32> = self.scale.denominator_factors().keys().copied().collect();
        for d in factors {
            let phi = cyclotomic_a4(d);
            while self.scale.denominator_factors().contains_key(&d) {
                let divided: Result<Vec<IntPoly>> = self.terms.values().map(|c| c.exact_div(&phi)).collect();
                match divided {
                    Ok(vals) => {
                        for (slot, v) in self.terms.values_mut().zip(vals) {
                            *slot = v;
                        }
                        self.scale = self.scale.mul_poly(&phi);
                    }
                    Err(_) => break,
                }
            }
        }
    }

    pub(crate) fn from_raw(bottom: usize, top: usize, scale: QFrac, terms: BTreeMap<Matching, IntPoly>) -> Self {
        TLMorphism { bottom, top, scale, terms }
    }

    pub(crate) fn into_parts(self) -> (QFrac, BTreeMap<Matching, IntPoly>) {
        (self.scale, self.terms)
    }

    /// Exact equality of the represented elements.
    pub fn equals(&self, other: &TLMorphism) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Coefficients written out as fractions, in matching order.
    pub fn expanded(&self) -> Vec<(Matching, QFrac)> {
        self.terms.iter().map(|(m, c)| (m.clone(), self.scale.mul_poly(c))).collect()
    }
}

impl fmt::Debug for TLMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TLMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TL({} -> {}) scale {}", self.bottom, self.top, self.scale)?;
        for (m, c) in &self.terms {
            writeln!(f, "  {m}: {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_squared_is_delta_e() {
        let e = TLMorphism::from_matching(Matching::e(2, 0));
        let ee = e.compose(&e).unwrap();
        assert!(ee.equals(&e.scaled_poly(&circle_int())).unwrap());
    }

    #[test]
    fn tensor_of_identities() {
        let id = TLMorphism::identity(1);
        assert!(id.tensor(&id).equals(&TLMorphism::identity(2)).unwrap());
    }

    #[test]
    fn closure_of_one_strand() {
        let c = TLMorphism::identity(1).closure_frac().unwrap();
        assert_eq!(c.to_int_poly().unwrap(), circle_int());
    }
}
