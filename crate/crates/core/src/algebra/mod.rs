//! Exact arithmetic over the Kauffman variable `A`.

pub mod cyclo;
pub mod intpoly;
pub mod laurent;
pub mod qpoly;
pub mod rational;
pub mod special;

pub use cyclo::QFrac;
pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use qpoly::{substitute_quarter, substitute_quarter_laurent, QPoly};
pub use rational::RationalFn;
pub use special::{
    delta, fusion_coeff, fusion_weight_rational, internal_colors, is_admissible, qpoch4, theta, twist_coeff,
};

use crate::error::Result;
use crate::stability::CoeffList;

/// Anything with a lowest exponent.
pub trait MinDegree {
    fn min_degree(&self) -> Result<i64>;
}

impl MinDegree for IntPoly {
    fn min_degree(&self) -> Result<i64> {
        IntPoly::min_degree(self)
    }
}

impl MinDegree for LaurentPoly {
    fn min_degree(&self) -> Result<i64> {
        LaurentPoly::min_degree(self)
    }
}

impl MinDegree for RationalFn {
    fn min_degree(&self) -> Result<i64> {
        RationalFn::min_degree(self)
    }
}

pub fn min_degree<T: MinDegree + ?Sized>(f: &T) -> Result<i64> {
    f.min_degree()
}

/// Exact quotient `f / g`.
pub fn exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.exact_div(g)
}

/// `A -> A^-1`.
pub fn mirror(f: &LaurentPoly) -> LaurentPoly {
    f.mirror()
}

/// Grading step of a coefficient window, in powers of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Step {
    /// One power of `A`.
    Raw,
    /// Four powers of `A`, i.e. one power of `q`.
    Quarter,
}

impl Step {
    pub fn a_units(self) -> i64 {
        match self {
            Step::Raw => 1,
            Step::Quarter => 4,
        }
    }
}

/// The `n` coefficients at `m(f), m(f)+step, ...`, zero padded.
pub fn coeff_window(f: &IntPoly, n: usize, step: Step) -> Result<CoeffList> {
    let m = f.min_degree()?;
    let s = step.a_units();
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n as i64 {
        let c = f.coeff(m + i * s);
        coeffs.push(num_traits::ToPrimitive::to_i64(&c).ok_or_else(|| crate::SkeinError::Overflow(c.to_string()))?);
    }
    let anchor = if s == 4 { m.div_euclid(4) } else { m };
    Ok(CoeffList::new(anchor, coeffs, step))
}

/// [`coeff_window`] for rational-coefficient input (must be integral).
pub fn coeff_window_laurent(f: &LaurentPoly, n: usize, step: Step) -> Result<CoeffList> {
    coeff_window(&f.to_int_poly()?, n, step)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_pad_with_zeros() {
        let f = IntPoly::from_terms([(0i64, 1i64), (4, -1), (8, 3)]);
        assert_eq!(coeff_window(&f, 4, Step::Quarter).unwrap().coeffs(), &[1, -1, 3, 0]);
        let g = IntPoly::monomial(1, -4);
        assert_eq!(coeff_window(&g, 2, Step::Quarter).unwrap().coeffs(), &[1, 0]);
        assert!(coeff_window(&IntPoly::zero(), 2, Step::Raw).is_err());
    }
}
