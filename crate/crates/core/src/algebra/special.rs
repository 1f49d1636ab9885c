//! Closed-form quantities of Kauffman bracket skein theory.
//!
//! Each quantity comes in two flavours: an `IntPoly` version for internal use
//! and a `LaurentPoly` version for the public API.

use super::cyclo::QFrac;
use super::intpoly::IntPoly;
use super::laurent::LaurentPoly;
use super::rational::RationalFn;
use crate::error::{Result, SkeinError};

/// Internal colors `(x, y, z)` of a trivalent vertex with legs `(a, b, c)`.
///
/// `x` strands run between the `a` and `b` legs, `y` between `a` and `c`,
/// `z` between `b` and `c`. Admissible exactly when all three are
/// nonnegative integers.
pub fn internal_colors(a: i64, b: i64, c: i64) -> Result<(i64, i64, i64)> {
    let sum = a + b + c;
    if a < 0 || b < 0 || c < 0 || sum % 2 != 0 {
        return Err(SkeinError::Inadmissible(a, b, c));
    }
    let (x, y, z) = ((a + b - c) / 2, (a + c - b) / 2, (b + c - a) / 2);
    if x < 0 || y < 0 || z < 0 {
        return Err(SkeinError::Inadmissible(a, b, c));
    }
    Ok((x, y, z))
}

pub fn is_admissible(a: i64, b: i64, c: i64) -> bool {
    internal_colors(a, b, c).is_ok()
}

/// `(A^4; A^4)_n`.
pub fn qpoch4_int(n: u32) -> IntPoly {
    let mut p = IntPoly::one();
    for j in 1..=n as i64 {
        p = &p * &IntPoly::from_terms([(0i64, 1i64), (4 * j, -1)]);
    }
    p
}

/// The loop value of the `n`-th projector, `(-1)^n [n+1]`.
pub fn delta_int(n: u32) -> IntPoly {
    // (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2}) = sum_{j=0}^{n} A^{2n - 4j}
    let n = n as i64;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    IntPoly::from_terms((0..=n).map(|j| (2 * n - 4 * j, sign)))
}

/// The circle value `δ = -A^2 - A^-2`.
pub fn circle_int() -> IntPoly {
    delta_int(1)
}

fn theta_parts(a: i64, b: i64, c: i64) -> Result<(IntPoly, IntPoly, i64, bool)> {
    let (x, y, z) = internal_colors(a, b, c)?;
    let q = |k: i64| qpoch4_int(k as u32);
    let num = &(&(&q(x) * &q(y)) * &q(z)) * &q(x + y + z + 1);
    let den = &(&(&q(1) * &q(x + y)) * &q(y + z)) * &q(x + z);
    let s = x + y + z;
    Ok((num, den, -2 * s, s % 2 != 0))
}

/// The theta network value for admissible colors.
pub fn theta_int(a: i64, b: i64, c: i64) -> Result<IntPoly> {
    let (num, den, shift, neg) = theta_parts(a, b, c)?;
    let q = num.exact_div(&den)?;
    let q = q.shift(shift);
    Ok(if neg { -q } else { q })
}

/// `C_{n,i} = A^{n^2 + 2i^2 - 4in} (A^4;A^4)_n / ((A^4;A^4)_i (A^4;A^4)_{n-i})`.
pub fn fusion_coeff_int(n: u32, i: u32) -> Result<IntPoly> {
    if i > n {
        return Err(SkeinError::IndexOutOfRange { index: i as i64, max: n as i64 });
    }
    let gauss = qpoch4_int(n).exact_div(&(&qpoch4_int(i) * &qpoch4_int(n - i)))?;
    let (n, i) = (n as i64, i as i64);
    Ok(gauss.shift(n * n + 2 * i * i - 4 * i * n))
}

/// Twist coefficient `μ_c^{a,b} = (-1)^{(a+b-c)/2} A^{a+b-c + (a^2+b^2-c^2)/2}`.
pub fn twist_coeff_int(a: i64, b: i64, c: i64) -> Result<IntPoly> {
    internal_colors(a, b, c)?;
    let k = (a + b - c) / 2;
    let e = a + b - c + (a * a + b * b - c * c) / 2;
    Ok(IntPoly::signed_monomial(k % 2 != 0, e))
}

/// The theta value as an exact fraction. It is a Laurent polynomial only for
/// some triples; `(2, 2, 2)` already gives `-[4][3]/[2]^2`.
pub fn theta_frac(a: i64, b: i64, c: i64) -> Result<QFrac> {
    let (num, den, shift, neg) = theta_parts(a, b, c)?;
    let num = num.shift(shift);
    QFrac::from_int(if neg { -num } else { num }).div_poly(&den)
}

/// Fusion weight `Δ_{2p} / θ(n, n, 2p)` as a cyclotomic fraction.
pub fn fusion_weight(n: u32, p: u32) -> Result<QFrac> {
    let th = theta_frac(n as i64, n as i64, 2 * p as i64)?;
    QFrac::from_int(delta_int(2 * p)).div(&th)
}

pub fn qpoch4(n: u32) -> LaurentPoly {
    qpoch4_int(n).into()
}

pub fn delta(n: u32) -> LaurentPoly {
    delta_int(n).into()
}

pub fn theta(a: i64, b: i64, c: i64) -> Result<LaurentPoly> {
    theta_int(a, b, c).map(Into::into)
}

/// Numerator and denominator of the closed theta formula, before division.
pub fn theta_fraction(a: i64, b: i64, c: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let (num, den, shift, neg) = theta_parts(a, b, c)?;
    let num = num.shift(shift);
    let num = if neg { -num } else { num };
    Ok((num.into(), den.into()))
}

pub fn fusion_coeff(n: u32, i: u32) -> Result<LaurentPoly> {
    fusion_coeff_int(n, i).map(Into::into)
}

pub fn twist_coeff(a: i64, b: i64, c: i64) -> Result<LaurentPoly> {
    twist_coeff_int(a, b, c).map(Into::into)
}

/// `Δ_{2j} / θ(n, n, 2j)` as a plain rational function.
pub fn fusion_weight_rational(n: u32, j: u32) -> Result<RationalFn> {
    let (num, den) = theta_fraction(n as i64, n as i64, 2 * j as i64)?;
    RationalFn::new(&delta(2 * j) * &den, num)
}

/// The theta value as a rational function (always defined for admissible triples).
pub fn theta_rational(a: i64, b: i64, c: i64) -> Result<RationalFn> {
    let (num, den) = theta_fraction(a, b, c)?;
    RationalFn::new(num, den)
}

/// Quantum integer `[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2})`.
pub fn quantum_int(m: u32) -> IntPoly {
    if m == 0 {
        return IntPoly::zero();
    }
    let d = delta_int(m - 1);
    if (m - 1) % 2 == 1 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(t: &[(i64, i64)]) -> IntPoly {
        IntPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(qpoch4_int(0), IntPoly::one());
        assert_eq!(qpoch4_int(1), ip(&[(0, 1), (4, -1)]));
        assert_eq!(qpoch4_int(2), ip(&[(0, 1), (4, -1), (8, -1), (12, 1)]));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_int(0), IntPoly::one());
        assert_eq!(delta_int(1), ip(&[(2, -1), (-2, -1)]));
        assert_eq!(delta_int(2), ip(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_int(1, 1, 2).unwrap(), ip(&[(-4, 1), (0, 1), (4, 1)]));
        for n in 1..=3 {
            assert_eq!(theta_int(n, n, 0).unwrap(), delta_int(n as u32));
        }
        assert_eq!(theta_int(1, 2, 4), Err(SkeinError::Inadmissible(1, 2, 4)));
        assert!(theta_int(2, 2, 2).is_err());
        let t = theta_frac(2, 2, 2).unwrap();
        let q = |m| QFrac::from_int(quantum_int(m));
        let expect = q(4).mul(&q(3)).div(&q(2).mul(&q(2))).unwrap().neg();
        assert_eq!(t, expect);
    }

    #[test]
    fn fusion_coefficients() {
        assert_eq!(fusion_coeff_int(1, 0).unwrap(), ip(&[(1, 1)]));
        assert_eq!(fusion_coeff_int(1, 1).unwrap(), ip(&[(-1, 1)]));
        assert_eq!(fusion_coeff_int(2, 0).unwrap(), ip(&[(4, 1)]));
        assert_eq!(fusion_coeff_int(2, 1).unwrap(), ip(&[(-2, 1), (2, 1)]));
        assert!(fusion_coeff_int(2, 3).is_err());
    }

    #[test]
    fn twist_coefficients() {
        assert_eq!(twist_coeff_int(1, 1, 0).unwrap(), ip(&[(3, -1)]));
        for n in 1..=4 {
            assert_eq!(twist_coeff_int(n, n, 2 * n).unwrap(), ip(&[(-n * n, 1)]));
        }
    }

    #[test]
    fn quantum_integers_are_positive() {
        assert_eq!(quantum_int(2), ip(&[(2, 1), (-2, 1)]));
        assert_eq!(quantum_int(1), IntPoly::one());
    }
}
