//! Dense Laurent polynomials in `A` with integer coefficients.
//!
//! This is the workhorse ring for diagram expansion: every coefficient that
//! appears while sweeping a planar network lives in Z[A, A^-1] once the
//! projector denominators have been pulled out.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, SkeinError};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    /// Exponent of `coeffs[0]`. Meaningless for the zero polynomial (kept at 0).
    low: i64,
    /// Never has a zero at either end.
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { low: e, coeffs: vec![c] }
    }

    /// `±A^e` with the sign given as a boolean (`true` = negative).
    pub fn signed_monomial(negative: bool, e: i64) -> Self {
        IntPoly::monomial(if negative { -1 } else { 1 }, e)
    }

    /// Builds from a dense coefficient vector whose first entry sits at exponent `low`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = IntPoly::zero();
        for (e, c) in terms {
            out.add_term(e, &c.into());
        }
        out
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_degree(&self) -> Result<i64> {
        if self.is_zero() {
            Err(SkeinError::ZeroPolynomial)
        } else {
            Ok(self.low)
        }
    }

    pub fn max_degree(&self) -> Result<i64> {
        if self.is_zero() {
            Err(SkeinError::ZeroPolynomial)
        } else {
            Ok(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// Number of stored slots between min and max degree (0 for zero).
    pub fn span_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() || e < self.low {
            return BigInt::zero();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn highest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.is_zero() {
            self.low = e;
            self.coeffs.push(c.clone());
            return;
        }
        if e < self.low {
            let pad = (self.low - e) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = e;
        }
        let idx = (e - self.low) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, BigInt::zero());
        }
        self.coeffs[idx] += c;
        self.trim();
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `self += c * A^k * other`, the inner loop of every sweep.
    pub fn add_scaled(&mut self, other: &IntPoly, c: &BigInt, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.scale(c).shift(k);
            return;
        }
        let olow = other.low + k;
        let new_low = self.low.min(olow);
        let new_high = (self.low + self.coeffs.len() as i64).max(olow + other.coeffs.len() as i64);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = new_low;
        }
        let len = (new_high - self.low) as usize;
        if len > self.coeffs.len() {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (olow - self.low) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            if c.is_one() {
                self.coeffs[off + i] += x;
            } else {
                self.coeffs[off + i] += x * c;
            }
        }
        self.trim();
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The substitution `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let high = self.low + self.coeffs.len() as i64 - 1;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly { low: -high, coeffs }
    }

    /// The substitution `A -> A^m` for a positive `m`.
    pub fn inflate(&self, m: i64) -> Self {
        assert!(m > 0, "inflate needs a positive factor");
        IntPoly::from_terms(self.terms().map(|(e, c)| (e * m, c.clone())))
    }

    /// Exact quotient `self / g`, failing loudly when a remainder would remain.
    pub fn exact_div(&self, g: &IntPoly) -> Result<IntPoly> {
        if g.is_zero() {
            return Err(SkeinError::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        // Schoolbook division from the lowest term; Laurent shifts are free.
        let glen = g.coeffs.len();
        let g0 = &g.coeffs[0];
        let mut rem = self.coeffs.clone();
        if rem.len() < glen {
            return Err(SkeinError::InexactDivision(format!("{self} / {g}")));
        }
        let qlen = rem.len() - glen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in 0..qlen {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(g0);
            if !r.is_zero() {
                return Err(SkeinError::InexactDivision(format!("{self} / {g}")));
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                if !gj.is_zero() {
                    rem[i + j] -= &q * gj;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(SkeinError::InexactDivision(format!("{self} / {g}")));
        }
        Ok(IntPoly::from_coeffs(self.low - g.low, quot))
    }

    /// Greatest common divisor of the coefficients (content), nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides every coefficient by the integer `c`, requiring exactness.
    pub fn div_integer(&self, c: &BigInt) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(SkeinError::InexactDivision(format!("{self} / {c}")));
            }
            out.push(q);
        }
        Ok(IntPoly::from_coeffs(self.low, out))
    }

    /// Coefficient vector with `i64` entries, erroring on overflow.
    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64().ok_or_else(|| SkeinError::Overflow(c.to_string()))).collect()
    }

    pub fn dense_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when the lowest coefficient is negative.
    pub fn leading_negative(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_negative())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(e, c)| (e, c.to_string(), c.is_negative())), "A")
    }
}

/// Shared pretty-printer: `3*A^-2 - A + 5`.
pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: Iterator<Item = (i64, String, bool)>,
{
    let mut first = true;
    for (e, c, neg) in terms {
        let mag = if neg { c.trim_start_matches('-').to_string() } else { c };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let unit = mag == "1";
        match (e, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{e}")?,
            (_, false) => write!(f, "{mag}*{var}^{e}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one(), 0);
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::from(-1), 0);
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(self.low + rhs.low, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled(rhs, &BigInt::one(), 0);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled(rhs, &BigInt::from(-1), 0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(low, c)
    }

    #[test]
    fn canonical_form_trims_both_ends() {
        let q = p(-2, &[0, 0, 1, 0, 3, 0]);
        assert_eq!(q.min_degree().unwrap(), 0);
        assert_eq!(q.max_degree().unwrap(), 2);
        assert_eq!(q, p(0, &[1, 0, 3]));
        assert!(p(4, &[0, 0]).is_zero());
    }

    #[test]
    fn multiplication_and_division_round_trip() {
        let f = p(-3, &[2, 0, -1, 5]);
        let g = p(1, &[1, 1]);
        let h = &f * &g;
        assert_eq!(h.exact_div(&g).unwrap(), f);
        assert!(p(0, &[1, 0, 0, 0, 1]).exact_div(&p(0, &[1, 0, 1])).is_err());
    }

    #[test]
    fn mirror_is_an_involution() {
        let f = p(-3, &[2, 0, -1, 5]);
        assert_eq!(f.mirror().mirror(), f);
        assert_eq!(p(3, &[1]).mirror(), p(-3, &[1]));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(-2, &[-1, 0, 0, 0, 1]).to_string(), "-A^-2 + A^2");
        assert_eq!(p(0, &[3, -2]).to_string(), "3 - 2*A");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntPoly::zero().min_degree(), Err(SkeinError::ZeroPolynomial));
    }
}
