//! Self-checking suites: reference tables, Temperley-Lieb identities,
//! minimum-degree formulas, stability rates and agreement of the evaluators.
//!
//! Every check returns a [`CheckResult`] instead of an error, so a suite
//! always runs to the end and reports each failure by name.

pub mod tables;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::special::{delta_int, fusion_weight, theta_frac, twist_coeff_int};
use crate::algebra::{coeff_window, IntPoly, Step};
use crate::diagram::{parse_pd, pretzel, LinkDiagram};
use crate::error::{Result, SkeinError};
use crate::invariants::{
    bracket_state_sum_with, build_upsilon, colored_bracket_fused_with, colored_state_sum_with, predicted_min_degree,
    upsilon_fused, Limits,
};
use crate::planar::{
    cabled_crossing, clasp_expansion, curl, fusion_element, jones_wenzl, theta_program, CrossingSign, Matching,
    TLMorphism,
};
use crate::stability::{
    check_bracket_rate, check_color_stability, check_colored_rate, check_cross_twist, compare_members, family_table,
    stable_prefix, FamilyExpr, FamilySpec, Grading, Member, Quantity, TailReport,
};
pub use tables::{GoldenTable, GOLDEN_TABLES, MAXIMALITY, TABLE_1, TABLE_2, TABLE_3, TABLE_4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PaperTables,
    TlIdentities,
    MinDegrees,
    RateTheorems,
    OracleEquivalence,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::PaperTables, Suite::TlIdentities, Suite::MinDegrees, Suite::RateTheorems, Suite::OracleEquivalence];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperTables => "paper-tables",
            Suite::TlIdentities => "tl-identities",
            Suite::MinDegrees => "min-degrees",
            Suite::RateTheorems => "rate-theorems",
            Suite::OracleEquivalence => "oracle-equivalence",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SkeinError;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SkeinError::Unsupported(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Also check table rows that are expensive to compute.
    pub stretch: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_outcome(name: impl Into<String>, outcome: Result<std::result::Result<String, String>>) -> CheckResult {
        let name = name.into();
        match outcome {
            Ok(Ok(detail)) => CheckResult { name, pass: true, detail },
            Ok(Err(detail)) => CheckResult { name, pass: false, detail },
            Err(e) => CheckResult { name, pass: false, detail: format!("error: {e}") },
        }
    }

    fn of_report(name: impl Into<String>, report: Result<TailReport>) -> CheckResult {
        CheckResult::from_outcome(
            name,
            report.map(|r| {
                let depths: Vec<String> = r.steps.iter().map(|s| format!("{}/{}", s.agreed, s.claimed)).collect();
                let detail = format!("{} [{}] agreed/claimed {}", r.family, r.grading, depths.join(" "));
                if r.passed {
                    Ok(detail)
                } else {
                    Err(detail)
                }
            }),
        )
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let checks = match suite {
        Suite::PaperTables => {
            let mut v: Vec<CheckResult> = GOLDEN_TABLES.iter().map(|t| golden_table(t, opts)).collect();
            v.push(maximality_witness(&opts.limits));
            v
        }
        Suite::TlIdentities => tl_identities(),
        Suite::MinDegrees => {
            let mut v = vec![bracket_min_degrees(&opts.limits), colored_min_degrees(&opts.limits)];
            v.push(upsilon_min_degrees());
            v.push(degree_steps(4));
            v
        }
        Suite::RateTheorems => stability_rates(&opts.limits),
        Suite::OracleEquivalence => vec![fused_matches_state_sum(&opts.limits), fused_matches_bracket(&opts.limits)],
    };
    let passed = checks.iter().all(|c| c.pass);
    SuiteReport { suite, checks, passed }
}

fn show(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

/// Recomputes a reference table row by row.
pub fn golden_table(t: &GoldenTable, opts: &VerifyOptions) -> CheckResult {
    let rows = if opts.stretch { t.rows.len() } else { t.stretch_from.min(t.rows.len()) };
    let outcome = (|| {
        let spec = FamilySpec::parse(t.regions, Quantity::Jones(FamilyExpr::parse(t.jones)?), 1, rows as i64)?;
        let got = family_table(&spec, &FamilyExpr::parse(t.window)?, &opts.limits)?;
        for (row, expected) in got.iter().zip(t.rows) {
            if row.coeffs != *expected {
                return Ok(Err(format!("k = {}: got {}, expected {}", row.k, show(&row.coeffs), show(expected))));
            }
        }
        Ok(Ok(format!("rows 1..={rows} match")))
    })();
    CheckResult::from_outcome(t.title, outcome)
}

/// `J_2(P(8,6,2))` and `J_2(P(8,6,3))` agree on exactly three terms.
pub fn maximality_witness(limits: &Limits) -> CheckResult {
    let outcome = (|| {
        let a = Member::new(&[8, 6, 2], 2, Grading::QUnits).window(6, limits)?;
        let b = Member::new(&[8, 6, 3], 2, Grading::QUnits).window(6, limits)?;
        let p = stable_prefix(&a, &b);
        let detail = format!("stable prefix {p} ({} vs {})", a.normalize()?, b.normalize()?);
        Ok(if p == 3 { Ok(detail) } else { Err(detail) })
    })();
    CheckResult::from_outcome("maximality of the k+1 rate", outcome)
}

fn identity(name: &str, f: impl FnOnce() -> Result<Option<String>>) -> CheckResult {
    CheckResult::from_outcome(
        name,
        f().map(|failure| match failure {
            None => Ok("exact".to_string()),
            Some(msg) => Err(msg),
        }),
    )
}

fn jw(n: usize) -> Result<TLMorphism> {
    Ok((*jones_wenzl(n)?).clone())
}

pub fn tl_identities() -> Vec<CheckResult> {
    vec![
        identity("idempotency (n <= 6)", || {
            for n in 1..=6 {
                let f = jw(n)?;
                if !f.compose(&f)?.equals(&f)? {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        }),
        identity("turnbacks annihilate (n <= 6)", || {
            for n in 2..=6 {
                let f = jw(n)?;
                for i in 0..n - 1 {
                    let e = TLMorphism::from_matching(Matching::e(n, i));
                    if !e.compose(&f)?.is_zero() || !f.compose(&e)?.is_zero() {
                        return Ok(Some(format!("n = {n}, i = {i}")));
                    }
                }
            }
            Ok(None)
        }),
        identity("absorption (n <= 6)", || {
            for total in 2..=6 {
                let f = jw(total)?;
                for m in 1..total {
                    let small = jw(m)?.tensor(&jw(total - m)?);
                    if !small.compose(&f)?.equals(&f)? || !f.compose(&small)?.equals(&f)? {
                        return Ok(Some(format!("{m} + {} in {total}", total - m)));
                    }
                }
            }
            Ok(None)
        }),
        identity("closure is Delta_n (n <= 6)", || {
            for n in 1..=6 {
                if jw(n)?.closure_frac()?.to_int_poly()? != delta_int(n as u32) {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        }),
        identity("twist coefficient (n <= 4)", || {
            for n in 1..=4usize {
                let mu = IntPoly::signed_monomial(n % 2 == 1, -((n * n + 2 * n) as i64));
                if !curl(n)?.equals(&jw(n)?.scaled_poly(&mu))? {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        }),
        identity("theta networks (colors <= 4)", || {
            for a in 0..=4usize {
                for b in 0..=4usize {
                    for c in 0..=4usize {
                        match (theta_frac(a as i64, b as i64, c as i64), theta_program(a, b, c)) {
                            (Ok(v), Ok(p)) if p.evaluate_frac()? == v => {}
                            (Err(_), Err(_)) => {}
                            _ => return Ok(Some(format!("({a},{b},{c})"))),
                        }
                    }
                }
            }
            Ok(None)
        }),
        identity("fusion (n <= 2)", || {
            for n in 1..=2 {
                let mut sum = TLMorphism::zero(2 * n, 2 * n);
                for p in 0..=n {
                    sum = sum.add(&fusion_element(n, p)?.scaled(&fusion_weight(n as u32, p as u32)?))?;
                }
                if !sum.equals(&jw(n)?.tensor(&jw(n)?))? {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        }),
        identity("colored Kauffman relation (n <= 2)", || {
            for n in 1..=2 {
                if !cabled_crossing(n, CrossingSign::Negative)?.equals(&clasp_expansion(n)?)? {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        }),
    ]
}

const HOPF: &str = "PD[X[1,4,2,3],X[3,2,4,1]]";
const FIGURE_EIGHT: &str = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

/// Minus-adequate diagrams used for the bracket degree formula.
pub fn assorted_diagrams() -> Result<Vec<LinkDiagram>> {
    let mut v = vec![parse_pd(HOPF)?, parse_pd(FIGURE_EIGHT)?];
    for c in [&[1, 1, 1][..], &[2, 3, 2], &[8, 6, 3], &[3, 3, 3], &[1, 2], &[2, 2, 2, 2], &[4, 1, 2], &[3, 4]] {
        v.push(pretzel(c));
    }
    Ok(v)
}

fn min_degree_mismatch(d: &LinkDiagram, n: usize, limits: &Limits) -> Result<Option<String>> {
    let predicted = predicted_min_degree(d, n)?;
    let actual = if n == 1 {
        bracket_state_sum_with(d, limits)?.min_degree()?
    } else {
        colored_bracket_fused_with(d, n, limits)?.min_degree()?
    };
    Ok((predicted != actual).then(|| format!("{} at n = {n}: predicted {predicted}, got {actual}", d.name)))
}

/// `m(<D>) = -c - 2|s_-|` on minus-adequate diagrams.
pub fn bracket_min_degrees(limits: &Limits) -> CheckResult {
    identity("bracket minimum degree on 10 diagrams", || {
        for d in assorted_diagrams()? {
            if let Some(msg) = min_degree_mismatch(&d, 1, limits)? {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    })
}

/// Three-column pretzels with positive regions and at most `max` crossings, up to order.
pub fn small_pretzels(max: usize) -> Vec<[usize; 3]> {
    let mut v = Vec::new();
    for a in 1..=max {
        for b in a..=max {
            for c in b..=max {
                if a + b + c <= max {
                    v.push([a, b, c]);
                }
            }
        }
    }
    v
}

/// `m(<S_n(D)>) = -c n^2 - 2n|s_-|` on adequate pretzels.
pub fn colored_min_degrees(limits: &Limits) -> CheckResult {
    identity("colored minimum degree, pretzels up to 9 crossings, n <= 3", || {
        let shapes = small_pretzels(9);
        let failures: Vec<String> = shapes
            .par_iter()
            .map(|c| -> Result<Option<String>> {
                let d = pretzel(c);
                for n in 1..=3 {
                    if let Some(msg) = min_degree_mismatch(&d, n, limits)? {
                        return Ok(Some(msg));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(failures.into_iter().next())
    })
}

/// `m(Υ(n,p)) = -n^2(c - k_1) - 2(n|s_-| - (n - p))`.
pub fn upsilon_min_degrees() -> CheckResult {
    identity("minimum degree of the fused-region networks, n <= 2", || {
        for c in [[2, 3, 2], [1, 1, 1], [3, 2, 4], [2, 2, 2]] {
            let d = pretzel(&c);
            let total = d.crossing_count() as i64;
            let s = d.s_minus() as i64;
            for n in 1..=2usize {
                for p in 0..n {
                    let value = upsilon_fused(&d, n, p)?;
                    if value != build_upsilon(&d, n, p)?.evaluate_frac()? {
                        return Ok(Some(format!("{c:?}: fused and direct networks differ")));
                    }
                    let (ni, pi) = (n as i64, p as i64);
                    let expected = -ni * ni * (total - c[0] as i64) - 2 * (s * ni - (ni - pi));
                    let got = value.min_degree()?;
                    if got != expected {
                        return Ok(Some(format!("{c:?}, n = {n}, p = {p}: expected {expected}, got {got}")));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Lowest degrees of the twist coefficients `μ_{2j}^{n,n}` drop by `4j`, and
/// those of the fusion weights `Δ_{2j}/θ(n,n,2j)` by 2, as `j` increases.
pub fn degree_steps(max_n: u32) -> CheckResult {
    identity(&format!("degree steps of twist and fusion coefficients, n <= {max_n}"), || {
        for n in 1..=max_n {
            for j in 1..=n {
                let (ni, ji) = (n as i64, j as i64);
                let mu = twist_coeff_int(ni, ni, 2 * ji)?.min_degree()?;
                let mu_prev = twist_coeff_int(ni, ni, 2 * ji - 2)?.min_degree()?;
                if mu != mu_prev - 4 * ji {
                    return Ok(Some(format!("twist step at n = {n}, j = {j}: {mu_prev} -> {mu}")));
                }
                let w = fusion_weight(n, j)?.min_degree()?;
                let w_prev = fusion_weight(n, j - 1)?.min_degree()?;
                if w != w_prev - 2 {
                    return Ok(Some(format!("fusion step at n = {n}, j = {j}: {w_prev} -> {w}")));
                }
            }
        }
        Ok(None)
    })
}

fn bracket_family(regions: &str, color: i64, start: i64, end: i64) -> Result<FamilySpec> {
    FamilySpec::parse(regions, Quantity::Bracket(FamilyExpr::constant(color)), start, end)
}

pub fn stability_rates(limits: &Limits) -> Vec<CheckResult> {
    let step = |name: &str, check: Result<crate::stability::StepCheck>| {
        CheckResult::from_outcome(
            name,
            check.map(|s| {
                let detail = format!("{} ~ {}: agreed {} of {}", s.left, s.right, s.agreed, s.claimed);
                if s.pass {
                    Ok(detail)
                } else {
                    Err(detail)
                }
            }),
        )
    };
    vec![
        CheckResult::of_report(
            "bracket rate 4k, P(8,6,k), k = 2..5",
            bracket_family("8,6,k", 1, 1, 5).and_then(|s| check_bracket_rate(&s, 0, limits)),
        ),
        CheckResult::of_report(
            "simultaneous bracket rate 4 min k_i, P(k,k,2), k = 2..5",
            bracket_family("k,k,2", 1, 1, 5).and_then(|s| check_bracket_rate(&s, 0, limits)),
        ),
        CheckResult::of_report(
            "colored rate 4n(k-1)+4, P(2,2,k), n = 2, k = 2..4",
            bracket_family("2,2,k", 2, 1, 4).and_then(|s| check_colored_rate(&s, 0, limits)),
        ),
        CheckResult::of_report("color rate 4n, P(2,3,2), n = 2..3", check_color_stability(&[2, 3, 2], (2, 3), limits)),
        step("cross-twist rate 4n, P(2,3,2) vs P(4,3,5), n = 2", check_cross_twist(&[2, 3, 2], &[2, 0, 3], 2, limits)),
        step(
            "equal minus-graphs, P(2,2,2) vs P(4,5,3), 8 terms at n = 2",
            compare_members(
                &Member::new(&[2, 2, 2], 2, Grading::AUnits),
                &Member::new(&[4, 5, 3], 2, Grading::AUnits),
                8,
                limits,
            ),
        ),
    ]
}

/// Both colored evaluators on `P(a,b,c)`, `a,b,c <= 3`, `n <= 2`.
pub fn fused_matches_state_sum(limits: &Limits) -> CheckResult {
    identity("fused = state sum on P(a,b,c), a,b,c <= 3, n <= 2", || {
        let shapes: Vec<[usize; 3]> = (0..64).map(|i| [i % 4, i / 4 % 4, i / 16]).collect();
        let failures = shapes
            .par_iter()
            .map(|c| -> Result<Option<String>> {
                let d = pretzel(c);
                for n in 1..=2 {
                    if colored_bracket_fused_with(&d, n, limits)? != colored_state_sum_with(&d, n, limits)? {
                        return Ok(Some(format!("{c:?} at n = {n}")));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(failures.into_iter().flatten().next())
    })
}

/// The fused path at `n = 1` against the bracket state sum, up to 20 crossings.
pub fn fused_matches_bracket(limits: &Limits) -> CheckResult {
    identity("fused = bracket state sum at n = 1, up to 20 crossings", || {
        let shapes: Vec<Vec<usize>> = vec![
            vec![8, 6, 6],
            vec![7, 7, 6],
            vec![5, 5, 5, 5],
            vec![10, 10],
            vec![4, 3, 5, 2, 6],
            vec![20],
            vec![9, 1, 9],
        ];
        for c in shapes {
            let d = pretzel(&c);
            if colored_bracket_fused_with(&d, 1, limits)? != bracket_state_sum_with(&d, limits)? {
                return Ok(Some(format!("{c:?}")));
            }
        }
        Ok(None)
    })
}

/// Multiplies by `±A^shift` and checks that normalized windows do not move.
pub fn framing_invariant(p: &IntPoly, shift: i64, negate: bool, len: usize) -> Result<bool> {
    let unit = IntPoly::signed_monomial(negate, shift);
    let moved = &unit * p;
    for step in [Step::Raw, Step::Quarter] {
        let a = coeff_window(p, len, step)?.normalize()?;
        let b = coeff_window(&moved, len, step)?.normalize()?;
        if a.coeffs() != b.coeffs() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn degree_steps_hold() {
        assert!(degree_steps(4).pass);
    }

    #[test]
    fn small_pretzel_count() {
        assert!(small_pretzels(9).iter().all(|c| c.iter().sum::<usize>() <= 9 && c[0] >= 1));
        assert_eq!(small_pretzels(3), vec![[1, 1, 1]]);
    }
}
