use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Result, SkeinError};

/// A quotient of two Laurent polynomials.
///
/// Only the monomial part is cancelled on construction (the denominator is
/// shifted to start at degree 0); [`RationalFn::reduce`] runs a full GCD when a
/// canonical representative is wanted. Equality compares cross products.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(SkeinError::InexactDivision("zero denominator".into()));
        }
        let s = den.min_degree()?;
        Ok(RationalFn { num: num.shift(-s), den: den.shift(-s) })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        RationalFn::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `m(num) - m(den)`; independent of the representative.
    pub fn min_degree(&self) -> Result<i64> {
        Ok(self.num.min_degree()? - self.den.min_degree()?)
    }

    /// Exact conversion back to a Laurent polynomial.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    pub fn recip(&self) -> Result<RationalFn> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn mirror(&self) -> RationalFn {
        RationalFn::new(self.num.mirror(), self.den.mirror()).expect("mirror keeps denominator nonzero")
    }

    /// Reduces to lowest terms with a monic-at-bottom denominator.
    pub fn reduce(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn::zero();
        }
        let g = poly_gcd(&self.num, &self.den);
        let num = self.num.exact_div(&g).expect("gcd divides numerator");
        let den = self.den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.terms().next().map(|(_, c)| c.clone()).unwrap();
        let inv = BigRational::one() / lc;
        RationalFn::new(num.scale(&inv), den.scale(&inv)).expect("nonzero denominator")
    }
}

/// Euclid over Q[A] after shifting both inputs into ordinary polynomials.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let norm = |p: &LaurentPoly| -> LaurentPoly {
        if p.is_zero() {
            return p.clone();
        }
        let p = p.shift(-p.min_degree().unwrap());
        let top = p.max_degree().unwrap();
        let lc = p.coeff(top);
        p.scale(&(BigRational::one() / lc))
    };
    let mut x = norm(a);
    let mut y = norm(b);
    while !y.is_zero() {
        let r = poly_rem(&x, &y);
        x = y;
        y = norm(&r);
    }
    x
}

/// Remainder of ordinary (nonnegative-degree) polynomial division.
fn poly_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let bd = b.max_degree().unwrap();
    let blc = b.coeff(bd);
    let mut r = a.clone();
    while !r.is_zero() && r.max_degree().unwrap() >= bd {
        let rd = r.max_degree().unwrap();
        let q = r.coeff(rd) / &blc;
        r = &r - &b.shift(rd - bd).scale(&q);
    }
    r
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RationalFn::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &RationalFn {
    type Output = Result<RationalFn>;
    fn div(self, rhs: &RationalFn) -> Result<RationalFn> {
        if rhs.is_zero() {
            return Err(SkeinError::InexactDivision("division by zero".into()));
        }
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: RationalFn) -> RationalFn {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(t)
    }

    #[test]
    fn equality_ignores_representative() {
        let a = RationalFn::new(lp(&[(0, 1), (2, 1)]), lp(&[(0, 1)])).unwrap();
        let b = RationalFn::new(lp(&[(0, 1), (2, 2), (4, 1)]), lp(&[(0, 1), (2, 1)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.reduce().den(), &LaurentPoly::one());
    }

    #[test]
    fn min_degree_subtracts() {
        let r = RationalFn::new(lp(&[(-3, 1)]), lp(&[(2, 1), (6, 1)])).unwrap();
        assert_eq!(r.min_degree().unwrap(), -5);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }
}
