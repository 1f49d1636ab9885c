//! Jones-Wenzl projectors.
//!
//! The projector is applied to existing diagrams through the string form of
//! Wenzl's recursion,
//!
//! ```text
//! f_m = (f_{m-1} ⊗ 1) · (1 + Σ_{i=1}^{m-1} (-1)^{m-i} Δ_{i-1}/Δ_{m-1} · e_{m-1} ⋯ e_i),
//! ```
//!
//! read right to left from the bottom. Each stage multiplies numerators by
//! integer polynomials and pushes `1/Δ_{m-1}` into the shared scale, and any
//! term with a turnback inside the block is discarded as soon as it appears
//! because the projector kills it.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::matching::Matching;
use super::morphism::TLMorphism;
use crate::algebra::special::{circle_int, delta_int};
use crate::algebra::{IntPoly, QFrac};
use crate::error::{Result, SkeinError};

const CACHE_HEADER: &str = "skein-jones-wenzl v1";
const CACHE_DELTA_TAG: &str = "delta -A^-2 - A^2";

static MEMO: Lazy<RwLock<HashMap<usize, Arc<TLMorphism>>>> = Lazy::new(|| RwLock::new(HashMap::new()));
static CACHE_DIR: Lazy<RwLock<Option<PathBuf>>> = Lazy::new(|| RwLock::new(None));

/// Directory where projector expansions are persisted (`None` disables the file cache).
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().clone()
}

impl TLMorphism {
    /// Applies `f_m` to the top points `pos..pos+m`.
    pub fn apply_projector(&self, pos: usize, m: usize) -> Result<TLMorphism> {
        if pos + m > self.top() {
            return Err(SkeinError::ArityMismatch { expected: self.top(), found: pos + m });
        }
        if m <= 1 {
            return Ok(self.clone());
        }
        let (bottom, top) = (self.bottom(), self.top());
        let (mut scale, terms) = self.clone().into_parts();
        let mut v: BTreeMap<Matching, IntPoly> =
            terms.into_iter().filter(|(mat, _)| !mat.top_arc_within(pos, m)).collect();
        let delta = circle_int();
        for k in (2..=m).rev() {
            // Integer weights of the string terms at this stage.
            let weights: Vec<IntPoly> = (1..k)
                .map(|i| {
                    let d = delta_int((i - 1) as u32);
                    if (k - i) % 2 == 1 {
                        -d
                    } else {
                        d
                    }
                })
                .collect();
            let lead = delta_int((k - 1) as u32);
            let mut w: BTreeMap<Matching, IntPoly> = BTreeMap::new();
            for (mat, c) in &v {
                *w.entry(mat.clone()).or_default() += &(c * &lead);
                for i in 1..k {
                    let mut cur = mat.clone();
                    let mut loops = 0u32;
                    for j in i..k {
                        let (next, closed) = cur.e_top(pos + j - 1);
                        cur = next;
                        loops += closed as u32;
                    }
                    if cur.top_arc_within(pos, k - 1) {
                        continue;
                    }
                    let mut coeff = c * &weights[i - 1];
                    if loops > 0 {
                        coeff = &coeff * &delta.pow(loops);
                    }
                    *w.entry(cur).or_default() += &coeff;
                }
            }
            w.retain(|mat, c| !c.is_zero() && !mat.top_arc_within(pos, k - 1));
            scale = scale.div_poly(&lead)?;
            v = w;
        }
        let mut out = TLMorphism::from_raw(bottom, top, scale, v);
        out.tidy();
        Ok(out)
    }
}

/// The projector `f_n` as an element of `TL_n` (memoized, optionally file-cached).
pub fn jones_wenzl(n: usize) -> Result<Arc<TLMorphism>> {
    if let Some(f) = MEMO.read().get(&n) {
        return Ok(f.clone());
    }
    let dir = cache_dir();
    let loaded = dir.as_deref().and_then(|d| load_cached(d, n).ok());
    let f = match loaded {
        Some(f) => f,
        None => {
            let f = TLMorphism::identity(n).apply_projector(0, n)?;
            if let Some(d) = dir.as_deref() {
                // A failed write only costs a recomputation next time.
                let _ = store_cached(d, n, &f);
            }
            f
        }
    };
    let f = Arc::new(f);
    MEMO.write().entry(n).or_insert_with(|| f.clone());
    Ok(f)
}

/// Wenzl's original recursion `f_n = f_{n-1}⊗1 - (Δ_{n-2}/Δ_{n-1}) (f_{n-1}⊗1) e_{n-1} (f_{n-1}⊗1)`,
/// kept as an independent reference.
pub fn jones_wenzl_classic(n: usize) -> Result<TLMorphism> {
    let mut f = TLMorphism::identity(n.min(1));
    for k in 2..=n {
        let g = f.tensor(&TLMorphism::identity(1));
        let e = TLMorphism::from_matching(Matching::e(k, k - 2));
        let hook = g.compose(&e)?.compose(&g)?;
        let ratio = QFrac::from_int(delta_int((k - 2) as u32)).div_poly(&delta_int((k - 1) as u32))?;
        f = g.sub(&hook.scaled(&ratio))?;
        f.tidy();
    }
    Ok(f)
}

fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("jones-wenzl-{n}.txt"))
}

fn poly_text(p: &IntPoly) -> String {
    let mut s = match p.min_degree() {
        Ok(low) => low.to_string(),
        Err(_) => return "0".into(),
    };
    for c in p.dense_coeffs() {
        s.push(' ');
        s.push_str(&c.to_string());
    }
    s
}

fn parse_poly(s: &str) -> Option<IntPoly> {
    let mut it = s.split_whitespace();
    let low: i64 = it.next()?.parse().ok()?;
    let coeffs: Option<Vec<BigInt>> = it.map(|t| t.parse().ok()).collect();
    let coeffs = coeffs?;
    if coeffs.is_empty() {
        return Some(IntPoly::zero());
    }
    Some(IntPoly::from_coeffs(low, coeffs))
}

fn render(n: usize, f: &TLMorphism) -> String {
    let mut out = format!("{CACHE_HEADER}\n{CACHE_DELTA_TAG}\nn {n}\n");
    let den: Vec<String> = f.scale().denominator_factors().iter().map(|(d, m)| format!("{d}:{m}")).collect();
    out.push_str(&format!("scale {} | {}\n", poly_text(f.scale().numerator()), den.join(",")));
    out.push_str(&format!("terms {}\n", f.len()));
    for (m, c) in f.numerators() {
        let ps: Vec<String> = m.partners().iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("{} ; {}\n", ps.join(","), poly_text(c)));
    }
    out
}

fn parse(text: &str, n: usize) -> Option<TLMorphism> {
    let mut lines = text.lines();
    if lines.next()? != CACHE_HEADER || lines.next()? != CACHE_DELTA_TAG {
        return None;
    }
    if lines.next()?.strip_prefix("n ")?.parse::<usize>().ok()? != n {
        return None;
    }
    let (num, den) = lines.next()?.strip_prefix("scale ")?.split_once(" | ")?;
    let mut factors = BTreeMap::new();
    for part in den.split(',').filter(|p| !p.is_empty()) {
        let (d, m) = part.split_once(':')?;
        factors.insert(d.parse().ok()?, m.parse().ok()?);
    }
    let scale = QFrac::from_parts(parse_poly(num)?, factors);
    let count: usize = lines.next()?.strip_prefix("terms ")?.parse().ok()?;
    let mut terms = BTreeMap::new();
    for _ in 0..count {
        let (ps, c) = lines.next()?.split_once(" ; ")?;
        let partner: Option<Vec<u16>> = ps.split(',').map(|p| p.parse().ok()).collect();
        let m = Matching::new(n, n, partner?).ok()?;
        terms.insert(m, parse_poly(c)?);
    }
    if lines.next().is_some() {
        return None;
    }
    Some(TLMorphism::from_parts(n, n, scale, terms))
}

fn load_cached(dir: &Path, n: usize) -> Result<TLMorphism> {
    let text = fs::read_to_string(cache_path(dir, n)).map_err(|e| SkeinError::Io(e.to_string()))?;
    parse(&text, n).ok_or_else(|| SkeinError::Io(format!("corrupt projector cache for n = {n}")))
}

fn store_cached(dir: &Path, n: usize, f: &TLMorphism) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| SkeinError::Io(e.to_string()))?;
    fs::write(cache_path(dir, n), render(n, f)).map_err(|e| SkeinError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form_matches_wenzl_recursion() {
        for n in 1..=5 {
            let a = jones_wenzl(n).unwrap();
            let b = jones_wenzl_classic(n).unwrap();
            assert!(a.equals(&b).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn second_projector_explicit() {
        let f = jones_wenzl(2).unwrap();
        let e = Matching::e(2, 0);
        // 1/(A^2 + A^-2) = A^2 / (1 + A^4)
        let expect = QFrac::inverse_of(&IntPoly::from_terms([(2i64, 1i64), (-2, 1)])).unwrap();
        assert_eq!(f.coefficient_frac(&e), expect);
        assert_eq!(f.coefficient_frac(&Matching::identity(2)), QFrac::one());
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let f = jones_wenzl_classic(3).unwrap();
        store_cached(dir.path(), 3, &f).unwrap();
        assert!(load_cached(dir.path(), 3).unwrap().equals(&f).unwrap());
        fs::write(cache_path(dir.path(), 3), "garbage").unwrap();
        assert!(load_cached(dir.path(), 3).is_err());
    }
}
