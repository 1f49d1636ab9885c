//! The network `Υ(n, p)`: a pretzel diagram whose first region is replaced by
//! the fusion element `T_{n,p}` while every other region keeps its cabled
//! crossings.

use crate::algebra::QFrac;
use crate::diagram::LinkDiagram;
use crate::error::{Result, SkeinError};
use crate::planar::{
    apply_cable_crossing, push_column, rung_element, to_sweep_frame, CrossingSign, GoodBasis, Slice, SliceProgram,
    TLMorphism,
};

fn checked_shape(d: &LinkDiagram, n: usize, p: usize) -> Result<&[usize]> {
    let shape = d
        .pretzel_shape()
        .ok_or_else(|| SkeinError::Unsupported(format!("{}: the replaced region must be a pretzel column", d.name)))?;
    if shape.is_empty() {
        return Err(SkeinError::Unsupported("a diagram without regions has no first region".into()));
    }
    if n == 0 || p >= n {
        return Err(SkeinError::IndexOutOfRange { index: p as i64, max: n as i64 - 1 });
    }
    Ok(shape)
}

/// `Υ(n, p)` as a closed slice program of width `4n`. The crossings of the
/// remaining regions are expanded when the program is evaluated.
pub fn build_upsilon(d: &LinkDiagram, n: usize, p: usize) -> Result<SliceProgram> {
    let shape = checked_shape(d, n, p)?;
    let mut prog = SliceProgram::new();
    prog.push(Slice::NestedCups { pos: 0, count: 2 * n });
    push_column(&mut prog, n, to_sweep_frame(&rung_element(n, p)?, n)?);
    for &k in &shape[1..] {
        let mut column = TLMorphism::identity(2 * n);
        for _ in 0..k {
            column = apply_cable_crossing(&column, 0, n, CrossingSign::Negative)?;
        }
        push_column(&mut prog, n, to_sweep_frame(&column, n)?);
    }
    prog.push(Slice::NestedCaps { pos: 0, count: 2 * n });
    Ok(prog)
}

/// The value of `Υ(n, p)` with the remaining regions fused.
pub fn upsilon_fused(d: &LinkDiagram, n: usize, p: usize) -> Result<QFrac> {
    let shape = checked_shape(d, n, p)?;
    let gb = GoodBasis::get(n)?;
    let mut columns = vec![gb.rung(p).clone()];
    columns.extend(shape[1..].iter().map(|&k| gb.twist_region(k as u32)));
    gb.close_columns(&columns)
}
