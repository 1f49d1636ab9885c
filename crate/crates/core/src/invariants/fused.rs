//! The fusion fast path for pretzel diagrams.
//!
//! Each twist region with `k` crossings becomes `Σ_p w_p μ_p^k T_{n,p}`, and
//! the whole bracket is the closure of the product of those columns (see
//! [`GoodBasis`]). The (n+1)^r terms of the multi-sum are never expanded one
//! by one; the product is taken column by column in the good basis.

use super::{BracketValue, Limits};
use crate::algebra::IntPoly;
use crate::diagram::LinkDiagram;
use crate::error::{Result, SkeinError};
use crate::planar::GoodBasis;

pub fn colored_bracket_fused_with(d: &LinkDiagram, n: usize, limits: &Limits) -> Result<BracketValue> {
    let shape = d.pretzel_shape().ok_or_else(|| {
        SkeinError::Unsupported(format!("{}: the fused path needs every crossing in a labeled pretzel column", d.name))
    })?;
    if n == 0 {
        return Ok(BracketValue::new(IntPoly::one(), 0));
    }
    if shape.is_empty() {
        return Ok(BracketValue::new(IntPoly::one(), n));
    }
    let needed = ((n + 1) as u64).checked_pow(shape.len() as u32).unwrap_or(u64::MAX);
    if needed > limits.max_fusion_terms {
        return Err(SkeinError::Budget { what: "fusion terms".into(), cap: limits.max_fusion_terms, needed });
    }
    let gb = GoodBasis::get(n)?;
    let columns: Vec<_> = shape.iter().map(|&k| gb.twist_region(k as u32)).collect();
    let value = gb.close_columns(&columns)?.to_int_poly().map_err(|e| {
        SkeinError::InexactDivision(format!(
            "fused bracket of {} at color {n} is not a Laurent polynomial: {e}",
            d.name
        ))
    })?;
    Ok(BracketValue::new(value, n))
}

pub fn colored_bracket_fused(d: &LinkDiagram, n: usize) -> Result<BracketValue> {
    colored_bracket_fused_with(d, n, &Limits::default())
}
