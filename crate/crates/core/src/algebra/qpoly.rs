use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::intpoly::{write_terms, IntPoly};
use super::laurent::LaurentPoly;
use crate::error::{Result, SkeinError};

/// Polynomial in `q = A^4`, possibly shifted by a fractional power of `q`.
///
/// A term `c * A^e` of the source polynomial becomes `c * q^(e/4)`. All
/// exponents of the source share a residue `r` modulo the step (4 for integral
/// q-powers, 2 for half-integral); the stored exponents are `(e - r) / 4` and
/// the common factor `q^(r/4)` is recorded in `residue`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<i64, BigInt>,
    /// A-exponent residue that was factored out (0..4).
    residue: i64,
    /// Set when exponents only agree modulo 2, so steps are half powers of q.
    half_step: bool,
}

impl QPoly {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn half_step(&self) -> bool {
        self.half_step
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest q-exponent index (in steps of the grading).
    pub fn min_index(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(SkeinError::ZeroPolynomial)
    }

    /// Dense coefficient list from the lowest to the highest term.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let (Some(lo), Some(hi)) = (self.terms.keys().next(), self.terms.keys().next_back()) else {
            return Vec::new();
        };
        (*lo..=*hi).map(|e| self.terms.get(&e).cloned().unwrap_or_default()).collect()
    }

    /// Inverse of [`substitute_quarter`].
    pub fn to_laurent(&self) -> IntPoly {
        let step = if self.half_step { 2 } else { 4 };
        IntPoly::from_terms(self.terms.iter().map(|(e, c)| (e * step + self.residue, c.clone())))
    }
}

/// The change of variable `A = q^(1/4)`.
pub fn substitute_quarter(f: &IntPoly) -> Result<QPoly> {
    let exps: Vec<i64> = f.terms().map(|(e, _)| e).collect();
    if exps.is_empty() {
        return Ok(QPoly { terms: BTreeMap::new(), residue: 0, half_step: false });
    }
    let r4 = exps[0].rem_euclid(4);
    if exps.iter().all(|e| e.rem_euclid(4) == r4) {
        let terms = f.terms().map(|(e, c)| ((e - r4).div_euclid(4), c.clone())).collect();
        return Ok(QPoly { terms, residue: r4, half_step: false });
    }
    let r2 = exps[0].rem_euclid(2);
    if exps.iter().all(|e| e.rem_euclid(2) == r2) {
        let terms = f.terms().map(|(e, c)| ((e - r2).div_euclid(2), c.clone())).collect();
        return Ok(QPoly { terms, residue: r2, half_step: true });
    }
    Err(SkeinError::Grading(exps))
}

/// Rational-coefficient front end; the input must be integral.
pub fn substitute_quarter_laurent(f: &LaurentPoly) -> Result<QPoly> {
    substitute_quarter(&f.to_int_poly()?)
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residue != 0 {
            let g = num_integer::gcd(self.residue, 4);
            write!(f, "q^({}/{}) * (", self.residue / g, 4 / g)?;
        }
        if self.half_step {
            let terms = self.terms.iter().map(|(e, c)| (*e, c.to_string(), c.is_negative()));
            write_terms(f, terms, "q^(1/2)")?;
        } else {
            let terms = self.terms.iter().map(|(e, c)| (*e, c.to_string(), c.is_negative()));
            write_terms(f, terms, "q")?;
        }
        if self.residue != 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_grading() {
        let f = IntPoly::from_terms([(-4i64, 1i64), (0, -1), (4, 1)]);
        let q = substitute_quarter(&f).unwrap();
        assert_eq!(q.to_string(), "q^-1 - 1 + q");
        assert_eq!(q.to_laurent(), f);
    }

    #[test]
    fn residue_is_factored_out() {
        let f = IntPoly::from_terms([(-3i64, 1i64), (1, 1)]);
        let q = substitute_quarter(&f).unwrap();
        assert_eq!(q.coefficients(), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(q.residue(), 1);
        assert!(!q.half_step());
    }

    #[test]
    fn half_steps_and_failures() {
        let f = IntPoly::from_terms([(0i64, 1i64), (2, 1)]);
        assert!(substitute_quarter(&f).unwrap().half_step());
        let g = IntPoly::from_terms([(0i64, 1i64), (1, 1)]);
        assert!(matches!(substitute_quarter(&g), Err(SkeinError::Grading(_))));
    }
}
