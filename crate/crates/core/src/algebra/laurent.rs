use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::{write_terms, IntPoly};
use crate::error::{Result, SkeinError};

/// Exact Laurent polynomial in `A` with rational coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigRational::one(), 0)
    }

    /// The variable `A` itself.
    pub fn a() -> Self {
        LaurentPoly::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn int_monomial(c: i64, e: i64) -> Self {
        LaurentPoly::monomial(BigRational::from_integer(c.into()), e)
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        let mut out = LaurentPoly::zero();
        for &(e, c) in terms {
            out.add_term(e, BigRational::from_integer(c.into()));
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_degree(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(SkeinError::ZeroPolynomial)
    }

    pub fn max_degree(&self) -> Result<i64> {
        self.terms.keys().next_back().copied().ok_or(SkeinError::ZeroPolynomial)
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient over Q; a nonzero remainder is an error.
    pub fn exact_div(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        if g.is_zero() {
            return Err(SkeinError::InexactDivision("division by zero".into()));
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let (g_low, g_lc) = g.terms.iter().next().map(|(e, c)| (*e, c.clone())).unwrap();
        let g_high = g.max_degree()?;
        while let Some((&e, c)) = rem.terms.iter().next() {
            let high = rem.max_degree()?;
            if high - e < g_high - g_low {
                return Err(SkeinError::InexactDivision(format!("({self}) / ({g})")));
            }
            let q = c / &g_lc;
            let qe = e - g_low;
            for (ge, gc) in &g.terms {
                rem.add_term(qe + ge, -(&q * gc));
            }
            quot.add_term(qe, q);
        }
        Ok(quot)
    }

    /// Converts to the integer ring, failing if any coefficient is fractional.
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return Err(SkeinError::NonIntegral(c.to_string()));
            }
            terms.push((*e, c.to_integer()));
        }
        Ok(IntPoly::from_terms(terms))
    }

    /// Clears denominators: returns `(m, p)` with `self = p / m` and `p` integral.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let p = IntPoly::from_terms(
            self.terms.iter().map(|(e, c)| (*e, (c * BigRational::from_integer(lcm.clone())).to_integer())),
        );
        (lcm, p)
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        LaurentPoly { terms: p.terms().map(|(e, c)| (e, BigRational::from_integer(c.clone()))).collect() }
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        LaurentPoly::from(&p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(e, c)| {
            let s = if c.is_integer() { c.to_integer().to_string() } else { format!("({c})") };
            let s = if c.is_negative() && !c.is_integer() { format!("-({})", c.abs()) } else { s };
            (*e, s, c.is_negative())
        });
        write_terms(f, terms, "A")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_degree_of_mixed_signs() {
        let f = LaurentPoly::from_int_terms(&[(-3, -1), (5, 1)]);
        assert_eq!(f.min_degree().unwrap(), -3);
        assert!(LaurentPoly::zero().min_degree().is_err());
    }

    #[test]
    fn rational_division_and_integrality() {
        let f = LaurentPoly::from_int_terms(&[(0, 1), (4, 1)]);
        let g = LaurentPoly::from_int_terms(&[(0, 1), (2, 1)]);
        assert!(f.exact_div(&g).is_err());
        let two = LaurentPoly::int_monomial(2, 0);
        let half = LaurentPoly::one().exact_div(&two).unwrap();
        assert!(half.to_int_poly().is_err());
        assert_eq!((&half * &two).to_int_poly().unwrap(), IntPoly::one());
    }

    #[test]
    fn display_with_fractions() {
        let half = LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), -1);
        assert_eq!(half.to_string(), "(1/2)*A^-1");
    }
}
