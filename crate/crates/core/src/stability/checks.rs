//! Stepwise `≐_n` verification over families, and the resulting tail reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::coeffs::{stable_prefix, CoeffList};
use super::expr::FamilyExpr;
use super::family::{member_windows, FamilySpec, Grading, Member, Quantity, TableRow};
use crate::error::{Result, SkeinError};
use crate::invariants::Limits;

/// How the claimed agreement depth of a step `(k, k+1)` is computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RateRule {
    /// `f(k)` at the lower member, as for tails.
    Lower(FamilyExpr),
    /// `f(k+1)` at the upper member.
    Upper(FamilyExpr),
    /// `4m` where `m` is the smallest varying region of the upper member.
    TwistBracket,
    /// `4n(m-1)+4` with `m` as above and `n` the cable color.
    TwistColored,
}

impl fmt::Display for RateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RateRule::Lower(e) => write!(f, "{e} at the lower member"),
            RateRule::Upper(e) => write!(f, "{e} at the upper member"),
            RateRule::TwistBracket => f.write_str("4*min(k_i)"),
            RateRule::TwistColored => f.write_str("4*n*(min(k_i)-1)+4"),
        }
    }
}

/// The first position where two normalized windows differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub position: usize,
    pub left: i64,
    pub right: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCheck {
    pub left: String,
    pub right: String,
    pub claimed: usize,
    /// Verified agreement depth, capped by the computed windows.
    pub agreed: usize,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl StepCheck {
    /// Compares two windows against a claimed depth.
    pub fn compare(left: String, a: &CoeffList, right: String, b: &CoeffList, claimed: usize) -> Result<StepCheck> {
        let available = a.len().min(b.len());
        if available < claimed {
            return Err(SkeinError::InsufficientWindow { needed: claimed, available });
        }
        let agreed = stable_prefix(a, b);
        let witness = if agreed < available {
            let (na, nb) = (a.normalize()?, b.normalize()?);
            Some(Witness { position: agreed, left: na.coeffs()[agreed], right: nb.coeffs()[agreed] })
        } else {
            None
        };
        Ok(StepCheck { left, right, claimed, agreed, pass: agreed >= claimed, witness })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailReport {
    pub family: String,
    pub grading: Grading,
    pub rate: String,
    /// Each member's window, cut to the depth claimed for it.
    pub rows: Vec<TableRow>,
    pub steps: Vec<StepCheck>,
    /// Prefix of the last member, as long as the rate at that member.
    pub tail: Option<Vec<i64>>,
    pub passed: bool,
}

impl fmt::Display for TailReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {} ({})", self.family, self.grading)?;
        writeln!(f, "rate:   {}", self.rate)?;
        for s in &self.steps {
            let mark = if s.pass { "ok  " } else { "FAIL" };
            write!(f, "{mark} {} ~ {}: claimed {}, agreed {}", s.left, s.right, s.claimed, s.agreed)?;
            if let (false, Some(w)) = (s.pass, &s.witness) {
                write!(f, " (position {}: {} vs {})", w.position, w.left, w.right)?;
            }
            writeln!(f)?;
        }
        if let Some(t) = &self.tail {
            let parts: Vec<String> = t.iter().map(|c| c.to_string()).collect();
            writeln!(f, "tail:   {}", parts.join(","))?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn claimed_depth(spec: &FamilySpec, rule: &RateRule, lower: &Member, upper: &Member) -> Result<i64> {
    let min_varying = || -> Result<i64> {
        spec.varying_regions()
            .iter()
            .map(|&i| upper.shape[i] as i64)
            .min()
            .ok_or_else(|| SkeinError::Unsupported(format!("{} has no varying region", spec.name())))
    };
    match rule {
        RateRule::Lower(e) => e.eval(lower.k),
        RateRule::Upper(e) => e.eval(upper.k),
        RateRule::TwistBracket => Ok(4 * min_varying()?),
        RateRule::TwistColored => Ok(4 * upper.color as i64 * (min_varying()? - 1) + 4),
    }
}

/// Verifies `P_k ≐_{rate} P_{k+1}` for every consecutive pair of members.
///
/// `slack` is added to every claimed depth, so a positive slack probes
/// beyond the stated rate. Windows are computed two terms past the largest
/// claim that involves each member. The tail is reported only for rules
/// evaluated at the lower member.
pub fn check_family(spec: &FamilySpec, rule: &RateRule, slack: i64, limits: &Limits) -> Result<TailReport> {
    let members = spec.members()?;
    let mut claims = Vec::with_capacity(members.len().saturating_sub(1));
    for pair in members.windows(2) {
        let c = claimed_depth(spec, rule, &pair[0], &pair[1])? + slack;
        if c < 0 {
            return Err(SkeinError::Unsupported(format!("rate {rule} is {c} at k = {}", pair[0].k)));
        }
        claims.push(c as usize);
    }
    let tail_len = match rule {
        RateRule::Lower(e) => Some((e.eval(spec.end)? + slack).max(0) as usize),
        _ => None,
    };
    let mut depth = vec![0usize; members.len()];
    for (i, &c) in claims.iter().enumerate() {
        depth[i] = depth[i].max(c);
        depth[i + 1] = depth[i + 1].max(c);
    }
    if let (Some(t), Some(last)) = (tail_len, depth.last_mut()) {
        *last = (*last).max(t);
    }
    let lens: Vec<usize> = depth.iter().map(|d| d.max(&1) + 2).collect();
    let windows = member_windows(&members, &lens, limits)?;

    let mut steps = Vec::with_capacity(claims.len());
    for (i, &c) in claims.iter().enumerate() {
        steps.push(StepCheck::compare(members[i].label(), &windows[i], members[i + 1].label(), &windows[i + 1], c)?);
    }
    let rows = members
        .iter()
        .zip(&windows)
        .zip(&depth)
        .map(|((m, w), &d)| {
            let normal = w.normalize()?;
            Ok(TableRow { k: m.k, label: m.label(), anchor: w.anchor, coeffs: normal.coeffs()[..d.max(1)].to_vec() })
        })
        .collect::<Result<Vec<_>>>()?;
    let tail = match (tail_len, windows.last()) {
        (Some(t), Some(w)) => Some(w.normalize()?.coeffs()[..t].to_vec()),
        _ => None,
    };
    let passed = steps.iter().all(|s| s.pass);
    let rate = if slack == 0 { rule.to_string() } else { format!("{rule} {slack:+}") };
    Ok(TailReport { family: spec.name(), grading: spec.grading(), rate, rows, steps, tail, passed })
}

/// Tail of a family at rate `f(k)` per step `(k, k+1)`.
pub fn family_tail(spec: &FamilySpec, rate: &FamilyExpr, limits: &Limits) -> Result<TailReport> {
    check_family(spec, &RateRule::Lower(rate.clone()), 0, limits)
}

fn require_bracket(spec: &FamilySpec) -> Result<()> {
    match spec.quantity {
        Quantity::Bracket(_) => Ok(()),
        Quantity::Jones(_) => Err(SkeinError::Unsupported("twist-rate checks are stated for colored brackets".into())),
    }
}

/// Brackets of a twist family agree on `4 min(k_i)` A-coefficients when every
/// varying region loses one crossing.
pub fn check_bracket_rate(spec: &FamilySpec, slack: i64, limits: &Limits) -> Result<TailReport> {
    require_bracket(spec)?;
    check_family(spec, &RateRule::TwistBracket, slack, limits)
}

/// Colored brackets of a twist family agree on `4n(k-1)+4` A-coefficients.
pub fn check_colored_rate(spec: &FamilySpec, slack: i64, limits: &Limits) -> Result<TailReport> {
    require_bracket(spec)?;
    check_family(spec, &RateRule::TwistColored, slack, limits)
}

/// `<S_n(D)> ≐_{4n} <S_{n-1}(D)>` for `n` in `colors` (each at least 2).
pub fn check_color_stability(shape: &[usize], colors: (usize, usize), limits: &Limits) -> Result<TailReport> {
    let regions = shape.iter().map(|&c| FamilyExpr::constant(c as i64)).collect();
    let spec = FamilySpec {
        regions,
        quantity: Quantity::Bracket(FamilyExpr::parse("k")?),
        start: colors.0 as i64 - 1,
        end: colors.1 as i64,
    };
    check_family(&spec, &RateRule::Upper(FamilyExpr::parse("4*k")?), 0, limits)
}

/// The diagonal family `<S_{n+i}(P(k_1+i, ..., k_r+i))>` for `i = 0..=steps`,
/// each step at depth `4` times the upper color.
pub fn check_diagonal(shape: &[usize], n: usize, steps: usize, limits: &Limits) -> Result<TailReport> {
    let regions = shape.iter().map(|&c| FamilyExpr::parse(&format!("{c}+k"))).collect::<Result<Vec<_>>>()?;
    let spec = FamilySpec {
        regions,
        quantity: Quantity::Bracket(FamilyExpr::parse(&format!("{n}+k"))?),
        start: 0,
        end: steps as i64,
    };
    check_family(&spec, &RateRule::Upper(FamilyExpr::parse(&format!("4*({n}+k)"))?), 0, limits)
}

/// Compares two arbitrary members at a claimed depth.
pub fn compare_members(a: &Member, b: &Member, claimed: usize, limits: &Limits) -> Result<StepCheck> {
    if a.grading != b.grading {
        return Err(SkeinError::Unsupported("members use different gradings".into()));
    }
    let windows = member_windows(&[a.clone(), b.clone()], &[claimed + 2, claimed + 2], limits)?;
    StepCheck::compare(a.label(), &windows[0], b.label(), &windows[1], claimed)
}

/// `<S_n(P(k))> ≐_{4n} <S_{n-1}(P(k+b))>` with every `k_i + b_i ≥ 1`.
pub fn check_cross_twist(shape: &[usize], shifts: &[i64], n: usize, limits: &Limits) -> Result<StepCheck> {
    if shape.len() != shifts.len() {
        return Err(SkeinError::ArityMismatch { expected: shape.len(), found: shifts.len() });
    }
    if n < 2 {
        return Err(SkeinError::Unsupported(format!("cross-twist comparison needs n >= 2, got {n}")));
    }
    let mut shifted = Vec::with_capacity(shape.len());
    for (i, (&k, &b)) in shape.iter().zip(shifts).enumerate() {
        let v = k as i64 + b;
        if v < 1 {
            return Err(SkeinError::NegativeTwist { region: i + 1, count: v });
        }
        shifted.push(v as usize);
    }
    let a = Member::new(shape, n, Grading::AUnits);
    let b = Member::new(&shifted, n - 1, Grading::AUnits);
    compare_members(&a, &b, 4 * n, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jones2(regions: &str, start: i64, end: i64) -> FamilySpec {
        FamilySpec::parse(regions, Quantity::Jones(FamilyExpr::constant(2)), start, end).unwrap()
    }

    #[test]
    fn first_family_tail() {
        let spec = jones2("8,6,k", 1, 4);
        let report = family_tail(&spec, &FamilyExpr::parse("k+1").unwrap(), &Limits::default()).unwrap();
        assert!(report.passed, "{report}");
        assert_eq!(report.tail.as_deref(), Some(&[1, -1, 3, -4, 6][..]));
        assert_eq!(report.rows[1].coeffs, [1, -1, 3]);
    }

    #[test]
    fn inflated_rate_fails_with_a_witness() {
        let spec = jones2("8,6,k", 1, 3);
        let report =
            check_family(&spec, &RateRule::Lower(FamilyExpr::parse("k+1").unwrap()), 1, &Limits::default()).unwrap();
        assert!(!report.passed);
        let bad = report.steps.iter().find(|s| !s.pass).unwrap();
        assert_eq!(bad.agreed, bad.claimed - 1);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn constant_family_passes() {
        let spec = jones2("2,3,2", 1, 3);
        let report = family_tail(&spec, &FamilyExpr::parse("5").unwrap(), &Limits::default()).unwrap();
        assert!(report.passed);
        assert!(report.steps.iter().all(|s| s.witness.is_none()));
    }

    #[test]
    fn twist_rules_need_brackets_and_varying_regions() {
        let limits = Limits::default();
        assert!(check_bracket_rate(&jones2("8,6,k", 1, 2), 0, &limits).is_err());
        let spec = FamilySpec::parse("2,2,2", Quantity::Bracket(FamilyExpr::constant(1)), 1, 2).unwrap();
        assert!(matches!(check_bracket_rate(&spec, 0, &limits), Err(SkeinError::Unsupported(_))));
    }

    #[test]
    fn cross_twist_arguments() {
        let limits = Limits::default();
        assert!(matches!(check_cross_twist(&[2, 3, 2], &[0, 0], 2, &limits), Err(SkeinError::ArityMismatch { .. })));
        assert!(matches!(
            check_cross_twist(&[2, 3, 2], &[0, -3, 0], 2, &limits),
            Err(SkeinError::NegativeTwist { region: 2, count: 0 })
        ));
    }
}
