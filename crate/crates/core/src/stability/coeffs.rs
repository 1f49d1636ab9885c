use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Step;
use crate::error::{Result, SkeinError};

/// A window of integer coefficients starting at the lowest-degree term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffList {
    /// Degree of the first entry, in units of `step`.
    pub anchor: i64,
    coeffs: Vec<i64>,
    pub step: Step,
    pub normalized: bool,
}

impl CoeffList {
    pub fn new(anchor: i64, coeffs: Vec<i64>, step: Step) -> Self {
        CoeffList { anchor, coeffs, step, normalized: false }
    }

    /// A bare list in q-units anchored at 0.
    pub fn from_slice(coeffs: &[i64]) -> Self {
        CoeffList::new(0, coeffs.to_vec(), Step::Quarter)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Shift-and-sign normal form: anchor 0 and a positive first coefficient.
    pub fn normalize(&self) -> Result<CoeffList> {
        let first = *self.coeffs.first().ok_or(SkeinError::EmptyList)?;
        if first == 0 {
            return Err(SkeinError::LeadingZero);
        }
        let sign = first.signum();
        Ok(CoeffList {
            anchor: 0,
            coeffs: self.coeffs.iter().map(|c| c * sign).collect(),
            step: self.step,
            normalized: true,
        })
    }

    /// The first `n` entries.
    pub fn prefix(&self, n: usize) -> Result<CoeffList> {
        if n > self.len() {
            return Err(SkeinError::InsufficientWindow { needed: n, available: self.len() });
        }
        Ok(CoeffList { coeffs: self.coeffs[..n].to_vec(), ..self.clone() })
    }
}

impl fmt::Display for CoeffList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `P1 ≐_n P2`: the first `n` coefficients agree up to one global sign.
pub fn n_equivalent(p1: &CoeffList, p2: &CoeffList, n: usize) -> Result<bool> {
    for p in [p1, p2] {
        if p.len() < n {
            return Err(SkeinError::InsufficientWindow { needed: n, available: p.len() });
        }
    }
    if n == 0 {
        return Ok(true);
    }
    let a = p1.normalize()?;
    let b = p2.normalize()?;
    Ok(a.coeffs[..n] == b.coeffs[..n])
}

/// Largest `n` with `P1 ≐_n P2`, capped by the shorter window.
pub fn stable_prefix(p1: &CoeffList, p2: &CoeffList) -> usize {
    let (Ok(a), Ok(b)) = (p1.normalize(), p2.normalize()) else {
        return 0;
    };
    a.coeffs.iter().zip(&b.coeffs).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_flips_one_global_sign() {
        let c = CoeffList::from_slice(&[-1, 4, 0, 0, -6]);
        assert_eq!(c.normalize().unwrap().coeffs(), &[1, -4, 0, 0, 6]);
        assert_eq!(CoeffList::from_slice(&[]).normalize(), Err(SkeinError::EmptyList));
        assert_eq!(CoeffList::from_slice(&[0, 1]).normalize(), Err(SkeinError::LeadingZero));
    }

    #[test]
    fn equivalence_needs_a_window() {
        let a = CoeffList::from_slice(&[1, -1, 3]);
        assert!(n_equivalent(&a, &a, 3).unwrap());
        assert!(n_equivalent(&a, &a, 4).is_err());
    }

    #[test]
    fn prefix_lengths() {
        let a = CoeffList::from_slice(&[1, -1, 3, -3]);
        let b = CoeffList::from_slice(&[1, -1, 3, -4, 5]);
        assert_eq!(stable_prefix(&a, &b), 3);
        assert_eq!(stable_prefix(&a, &a), 4);
        assert_eq!(stable_prefix(&a, &CoeffList::from_slice(&[2, 1])), 0);
    }
}
