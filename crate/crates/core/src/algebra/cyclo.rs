//! Fractions whose denominators are products of cyclotomic polynomials in `A^4`.
//!
//! Every denominator met in this crate (projector coefficients, inverse theta
//! values, quantum integers) factors this way, so keeping the denominator as a
//! multiset of cyclotomic indices gives cheap least common multiples and keeps
//! numerators small without ever running a polynomial GCD.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::intpoly::IntPoly;
use super::laurent::LaurentPoly;
use super::rational::RationalFn;
use crate::error::{Result, SkeinError};

static CYCLO: Lazy<RwLock<HashMap<u32, IntPoly>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// `Φ_d(x)` as an ordinary polynomial in `x`.
pub fn cyclotomic(d: u32) -> IntPoly {
    assert!(d >= 1);
    if let Some(p) = CYCLO.read().get(&d) {
        return p.clone();
    }
    // x^d - 1 = prod_{e | d} Φ_e(x)
    let mut p = IntPoly::from_terms([(d as i64, 1i64), (0, -1)]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.exact_div(&cyclotomic(e)).expect("cyclotomic factor divides x^d - 1");
        }
    }
    CYCLO.write().insert(d, p.clone());
    p
}

/// `Φ_d(A^4)`.
pub fn cyclotomic_a4(d: u32) -> IntPoly {
    cyclotomic(d).inflate(4)
}

fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| num_integer::gcd(*k, d) == 1).count() as u32
}

/// `num / prod_d Φ_d(A^4)^{den[d]}`.
#[derive(Clone, PartialEq, Eq)]
pub struct QFrac {
    num: IntPoly,
    den: BTreeMap<u32, u32>,
}

impl QFrac {
    pub fn zero() -> Self {
        QFrac { num: IntPoly::zero(), den: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QFrac::from_int(IntPoly::one())
    }

    pub fn from_int(num: IntPoly) -> Self {
        QFrac { num, den: BTreeMap::new() }
    }

    /// Reassembles a fraction from [`QFrac::numerator`] and [`QFrac::denominator_factors`].
    pub fn from_parts(num: IntPoly, den: BTreeMap<u32, u32>) -> Self {
        let mut f = QFrac { num, den };
        f.den.retain(|_, m| *m > 0);
        f.reduce();
        f
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cyclotomic indices and multiplicities of the denominator.
    pub fn denominator_factors(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    pub fn denominator_poly(&self) -> IntPoly {
        let mut d = IntPoly::one();
        for (&k, &m) in &self.den {
            d = &d * &cyclotomic_a4(k).pow(m);
        }
        d
    }

    /// Writes a polynomial as `±A^s * prod Φ_d(A^4)^m`; fails if it does not factor that way.
    fn factor(p: &IntPoly) -> Result<(IntPoly, BTreeMap<u32, u32>)> {
        if p.is_zero() {
            return Err(SkeinError::InexactDivision("inverse of zero".into()));
        }
        let mut rest = p.clone();
        let mut facs = BTreeMap::new();
        let span0 = rest.max_degree()? - rest.min_degree()?;
        // phi(d) >= sqrt(d/2), so no factor of degree <= span0 has d beyond this bound.
        let bound = (2 * (span0 / 4 + 1) * (span0 / 4 + 1) + 2) as u32;
        let mut d = 1u32;
        while d <= bound && rest.max_degree()? > rest.min_degree()? {
            let span = rest.max_degree()? - rest.min_degree()?;
            if 4 * euler_phi(d) as i64 > span {
                d += 1;
                continue;
            }
            match rest.exact_div(&cyclotomic_a4(d)) {
                Ok(q) => {
                    rest = q;
                    *facs.entry(d).or_insert(0) += 1;
                }
                Err(_) => d += 1,
            }
        }
        if rest.max_degree()? > rest.min_degree()? {
            return Err(SkeinError::Unsupported(format!(
                "denominator {p} is not a product of cyclotomic factors in A^4"
            )));
        }
        let lc = rest.lowest_coeff().cloned().unwrap();
        if !lc.abs().is_one() {
            return Err(SkeinError::Unsupported(format!("denominator {p} has integer content {lc}")));
        }
        Ok((rest, facs))
    }

    /// `1 / p` for a polynomial built from quantum integers.
    pub fn inverse_of(p: &IntPoly) -> Result<QFrac> {
        let (unit, facs) = QFrac::factor(p)?;
        let e = unit.min_degree()?;
        let neg = unit.lowest_coeff().unwrap().is_negative();
        Ok(QFrac { num: IntPoly::signed_monomial(neg, -e), den: facs })
    }

    pub fn div_poly(&self, p: &IntPoly) -> Result<QFrac> {
        Ok(self.mul(&QFrac::inverse_of(p)?))
    }

    pub fn mul(&self, other: &QFrac) -> QFrac {
        if self.is_zero() || other.is_zero() {
            return QFrac::zero();
        }
        let mut den = self.den.clone();
        for (&k, &m) in &other.den {
            *den.entry(k).or_insert(0) += m;
        }
        let mut out = QFrac { num: &self.num * &other.num, den };
        out.reduce();
        out
    }

    /// `self / other`; the numerator of `other` must factor into cyclotomic pieces.
    pub fn div(&self, other: &QFrac) -> Result<QFrac> {
        Ok(self.mul(&QFrac::inverse_of(&other.num)?).mul_poly(&other.denominator_poly()))
    }

    pub fn mul_poly(&self, p: &IntPoly) -> QFrac {
        let mut out = QFrac { num: &self.num * p, den: self.den.clone() };
        out.reduce();
        out
    }

    pub fn shift(&self, k: i64) -> QFrac {
        QFrac { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn neg(&self) -> QFrac {
        QFrac { num: -&self.num, den: self.den.clone() }
    }

    pub fn add(&self, other: &QFrac) -> QFrac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut lcm = self.den.clone();
        for (&k, &m) in &other.den {
            let e = lcm.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &QFrac| -> IntPoly {
            let mut n = f.num.clone();
            for (&k, &m) in &lcm {
                let have = f.den.get(&k).copied().unwrap_or(0);
                if m > have {
                    n = &n * &cyclotomic_a4(k).pow(m - have);
                }
            }
            n
        };
        let mut out = QFrac { num: &lift(self) + &lift(other), den: lcm };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &QFrac) -> QFrac {
        self.add(&other.neg())
    }

    /// Cancels cyclotomic factors shared by numerator and denominator.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<u32> = self.den.keys().copied().collect();
        for k in keys {
            let c = cyclotomic_a4(k);
            while self.den.get(&k).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&c) {
                    Ok(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&k).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&k);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    /// `1 / lcm(den(self), den(other))`, the natural common scale of two fractions.
    pub fn common_scale(&self, other: &QFrac) -> QFrac {
        let mut lcm = self.den.clone();
        for (&k, &m) in &other.den {
            let e = lcm.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        QFrac { num: IntPoly::one(), den: lcm }
    }

    /// `self / scale`, which must be a Laurent polynomial.
    pub fn over(&self, scale: &QFrac) -> Result<IntPoly> {
        self.mul(&QFrac::from_int(scale.denominator_poly())).mul(&QFrac::inverse_of(&scale.num)?).to_int_poly()
    }

    /// Exact conversion to Z[A, A^-1].
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        let mut f = self.clone();
        f.reduce();
        if f.den.is_empty() {
            Ok(f.num)
        } else {
            Err(SkeinError::InexactDivision(format!("{f} is not a Laurent polynomial")))
        }
    }

    pub fn to_rational_fn(&self) -> RationalFn {
        RationalFn::new(LaurentPoly::from(&self.num), LaurentPoly::from(&self.denominator_poly()))
            .expect("cyclotomic denominators are nonzero")
    }

    /// `m(num) - m(den)`.
    pub fn min_degree(&self) -> Result<i64> {
        Ok(self.num.min_degree()? - self.denominator_poly().min_degree()?)
    }

    pub fn scale_int(&self, c: &BigInt) -> QFrac {
        let mut out = QFrac { num: self.num.scale(c), den: self.den.clone() };
        out.reduce();
        out
    }
}

impl fmt::Debug for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFrac({self})")
    }
}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (i, (k, m)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "Phi{k}(A^4)^{m}")?;
        }
        write!(f, ")")
    }
}
