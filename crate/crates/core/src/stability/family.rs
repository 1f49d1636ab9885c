//! Parameterized pretzel families and their coefficient windows.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::coeffs::CoeffList;
use super::expr::FamilyExpr;
use crate::algebra::{coeff_window, IntPoly, Step};
use crate::diagram::{pretzel, LinkDiagram};
use crate::error::{Result, SkeinError};
use crate::invariants::{reduced_jones_with, unreduced_colored_jones_with, Limits};

/// The unit in which a coefficient window advances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grading {
    /// One power of `A`; used for colored brackets.
    AUnits,
    /// One power of `q = A^4`; used for reduced colored Jones polynomials.
    QUnits,
}

impl Grading {
    pub fn step(self) -> Step {
        match self {
            Grading::AUnits => Step::Raw,
            Grading::QUnits => Step::Quarter,
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grading::AUnits => "A-units",
            Grading::QUnits => "q-units",
        })
    }
}

/// What is computed for each member of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// The reduced colored Jones polynomial `J_N`, with `N` given by the expression.
    Jones(FamilyExpr),
    /// The colored bracket `<S_n(D)>`, with cable color `n` given by the expression.
    Bracket(FamilyExpr),
}

impl Quantity {
    pub fn grading(&self) -> Grading {
        match self {
            Quantity::Jones(_) => Grading::QUnits,
            Quantity::Bracket(_) => Grading::AUnits,
        }
    }

    fn color_expr(&self) -> &FamilyExpr {
        match self {
            Quantity::Jones(e) | Quantity::Bracket(e) => e,
        }
    }

    fn min_color(&self) -> i64 {
        match self {
            Quantity::Jones(_) => 2,
            Quantity::Bracket(_) => 1,
        }
    }
}

/// A pretzel family `P(e_1(k), ..., e_r(k))` over `k in start..=end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub regions: Vec<FamilyExpr>,
    pub quantity: Quantity,
    pub start: i64,
    pub end: i64,
}

/// One diagram of a family with its color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub k: i64,
    pub shape: Vec<usize>,
    pub color: usize,
    pub grading: Grading,
}

impl Member {
    pub fn new(shape: &[usize], color: usize, grading: Grading) -> Member {
        Member { k: 0, shape: shape.to_vec(), color, grading }
    }

    pub fn diagram(&self) -> LinkDiagram {
        pretzel(&self.shape)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.shape.iter().map(|c| c.to_string()).collect();
        let p = format!("P({})", parts.join(","));
        match self.grading {
            Grading::QUnits => format!("J_{}({p})", self.color),
            Grading::AUnits => format!("<S_{}>({p})", self.color),
        }
    }

    /// The exact polynomial behind the member's windows, in `A`.
    pub fn polynomial(&self, limits: &Limits) -> Result<IntPoly> {
        let d = self.diagram();
        match self.grading {
            Grading::QUnits => Ok(reduced_jones_with(&d, self.color, limits)?.to_laurent()),
            Grading::AUnits => Ok(unreduced_colored_jones_with(&d, self.color, limits)?.into_value()),
        }
    }

    /// The lowest `len` coefficients, not yet sign-normalized.
    pub fn window(&self, len: usize, limits: &Limits) -> Result<CoeffList> {
        coeff_window(&self.polynomial(limits)?, len, self.grading.step())
    }
}

impl FamilySpec {
    /// Builds a spec from comma-separated region expressions such as `"8,6,k"`.
    pub fn parse(regions: &str, quantity: Quantity, start: i64, end: i64) -> Result<FamilySpec> {
        let mut exprs = Vec::new();
        let mut offset = 0;
        for part in regions.split(',') {
            let e = FamilyExpr::parse(part).map_err(|err| match err {
                SkeinError::Parse { pos, msg } => SkeinError::Parse { pos: pos + offset, msg },
                other => other,
            })?;
            exprs.push(e);
            offset += part.len() + 1;
        }
        Ok(FamilySpec { regions: exprs, quantity, start, end })
    }

    pub fn grading(&self) -> Grading {
        self.quantity.grading()
    }

    /// Indices of regions whose size depends on `k`.
    pub fn varying_regions(&self) -> Vec<usize> {
        (0..self.regions.len()).filter(|&i| !self.regions[i].is_constant()).collect()
    }

    pub fn name(&self) -> String {
        let parts: Vec<&str> = self.regions.iter().map(|e| e.source()).collect();
        let p = format!("P({})", parts.join(","));
        match &self.quantity {
            Quantity::Jones(c) => format!("J_{c}({p})"),
            Quantity::Bracket(c) => format!("<S_{c}>({p})"),
        }
    }

    pub fn member(&self, k: i64) -> Result<Member> {
        let shape = self.regions.iter().map(|e| e.eval_at_least(k, 0, "region size")).collect::<Result<Vec<_>>>()?;
        let q = &self.quantity;
        let color = q.color_expr().eval_at_least(k, q.min_color(), "color")?;
        Ok(Member { k, shape, color, grading: self.grading() })
    }

    /// Every member over the range, validated up front.
    pub fn members(&self) -> Result<Vec<Member>> {
        if self.start > self.end {
            return Err(SkeinError::EmptyRange { start: self.start, end: self.end });
        }
        (self.start..=self.end).map(|k| self.member(k)).collect()
    }
}

/// Computes each member's window of the requested length in parallel; the
/// output keeps member order.
pub fn member_windows(members: &[Member], lens: &[usize], limits: &Limits) -> Result<Vec<CoeffList>> {
    members.par_iter().zip(lens.par_iter()).map(|(m, &len)| m.window(len, limits)).collect()
}

/// One row of a coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: i64,
    pub label: String,
    /// Lowest degree before normalization, in the grading's units.
    pub anchor: i64,
    pub coeffs: Vec<i64>,
}

impl TableRow {
    fn from_window(m: &Member, w: &CoeffList, len: usize) -> Result<TableRow> {
        let normal = w.normalize()?.prefix(len.min(w.len()))?;
        Ok(TableRow { k: m.k, label: m.label(), anchor: w.anchor, coeffs: normal.coeffs().to_vec() })
    }
}

/// The normalized lowest `window(k)` coefficients of every member.
pub fn family_table(spec: &FamilySpec, window: &FamilyExpr, limits: &Limits) -> Result<Vec<TableRow>> {
    let members = spec.members()?;
    let lens = members.iter().map(|m| window.eval_at_least(m.k, 1, "window")).collect::<Result<Vec<_>>>()?;
    let windows = member_windows(&members, &lens, limits)?;
    members.iter().zip(&windows).zip(&lens).map(|((m, w), &len)| TableRow::from_window(m, w, len)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_follow_the_expressions() {
        let spec = FamilySpec::parse("k+2, k+4,k+1", Quantity::Jones(FamilyExpr::constant(3)), 1, 2).unwrap();
        let ms = spec.members().unwrap();
        assert_eq!(ms[1].shape, [4, 6, 3]);
        assert_eq!(ms[1].label(), "J_3(P(4,6,3))");
        assert_eq!(spec.varying_regions(), [0, 1, 2]);
        assert_eq!(spec.name(), "J_3(P(k+2,k+4,k+1))");
    }

    #[test]
    fn invalid_families_are_rejected() {
        let jones2 = Quantity::Jones(FamilyExpr::constant(2));
        let spec = FamilySpec::parse("8,6,k-3", jones2.clone(), 1, 3).unwrap();
        assert!(matches!(spec.members(), Err(SkeinError::Unsupported(_))));
        let spec = FamilySpec::parse("8,6,k", jones2, 5, 3).unwrap();
        assert_eq!(spec.members(), Err(SkeinError::EmptyRange { start: 5, end: 3 }));
        let spec = FamilySpec::parse("8,6,k", Quantity::Jones(FamilyExpr::parse("k").unwrap()), 1, 2).unwrap();
        assert!(spec.members().is_err(), "J_1 is not a colored Jones polynomial here");
        assert!(matches!(
            FamilySpec::parse("8,6,k+", Quantity::Bracket(FamilyExpr::constant(1)), 1, 2),
            Err(SkeinError::Parse { pos: 6, .. })
        ));
    }

    #[test]
    fn first_table_rows() {
        let spec = FamilySpec::parse("8,6,k", Quantity::Jones(FamilyExpr::constant(2)), 1, 3).unwrap();
        let rows = family_table(&spec, &FamilyExpr::parse("k+1").unwrap(), &Limits::default()).unwrap();
        let coeffs: Vec<Vec<i64>> = rows.into_iter().map(|r| r.coeffs).collect();
        assert_eq!(coeffs, vec![vec![1, -1], vec![1, -1, 3], vec![1, -1, 3, -4]]);
    }
}
