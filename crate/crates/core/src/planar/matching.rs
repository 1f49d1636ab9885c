//! Planar matchings between `bottom` and `top` boundary points.
//!
//! Points are numbered `0..bottom` along the bottom edge (left to right) and
//! `bottom..bottom+top` along the top edge (also left to right). Going around
//! the disk counterclockwise from the bottom-left corner visits the bottom
//! points in order and then the top points from right to left; that cyclic
//! order is what planarity and [`Matching::reshape`] refer to.

use std::fmt;

use crate::error::{Result, SkeinError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    bottom: u16,
    top: u16,
    partner: Box<[u16]>,
}

impl Matching {
    /// Builds and validates a matching from a partner table.
    pub fn new(bottom: usize, top: usize, partner: Vec<u16>) -> Result<Self> {
        let m = Matching { bottom: bottom as u16, top: top as u16, partner: partner.into() };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(bottom: usize, top: usize, partner: Vec<u16>) -> Self {
        Matching { bottom: bottom as u16, top: top as u16, partner: partner.into() }
    }

    /// Builds from a list of arcs given as point pairs.
    pub fn from_arcs(bottom: usize, top: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = bottom + top;
        let mut partner = vec![u16::MAX; n];
        for &(a, b) in arcs {
            if a >= n || b >= n || a == b || partner[a] != u16::MAX || partner[b] != u16::MAX {
                return Err(SkeinError::Unsupported(format!("bad arc ({a}, {b})")));
            }
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        Matching::new(bottom, top, partner)
    }

    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u16; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u16;
            partner[n + i] = i as u16;
        }
        Matching::new_unchecked(n, n, partner)
    }

    /// The generator `e_i` of TL_n (0-based: caps points `i, i+1` below and cups them above).
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut m = Matching::identity(n);
        let p = &mut m.partner;
        p[i] = (i + 1) as u16;
        p[i + 1] = i as u16;
        p[n + i] = (n + i + 1) as u16;
        p[n + i + 1] = (n + i) as u16;
        m
    }

    pub fn bottom(&self) -> usize {
        self.bottom as usize
    }

    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    pub fn partners(&self) -> &[u16] {
        &self.partner
    }

    /// Position of point `i` in the counterclockwise cyclic order.
    pub fn cyclic_index(&self, i: usize) -> usize {
        let (m, k) = (self.bottom(), self.top());
        if i < m {
            i
        } else {
            m + (k - 1 - (i - m))
        }
    }

    /// Inverse of [`Matching::cyclic_index`].
    pub fn point_at_cyclic(&self, c: usize) -> usize {
        let (m, k) = (self.bottom(), self.top());
        if c < m {
            c
        } else {
            m + (k - 1 - (c - m))
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.partner.len();
        if n != self.bottom() + self.top() || !n.is_multiple_of(2) {
            return Err(SkeinError::ArityMismatch { expected: self.bottom() + self.top(), found: n });
        }
        for i in 0..n {
            let j = self.partner(i);
            if j >= n || j == i || self.partner(j) != i {
                return Err(SkeinError::Unsupported(format!("point {i} is not properly paired")));
            }
        }
        // Planarity: arcs on the cyclic order must nest like parentheses.
        let mut stack = Vec::new();
        for c in 0..n {
            let p = self.point_at_cyclic(c);
            let q = self.cyclic_index(self.partner(p));
            if q > c {
                stack.push(c);
            } else if stack.pop() != Some(q) {
                return Err(SkeinError::Unsupported("matching is not planar".into()));
            }
        }
        Ok(())
    }

    /// Stacks `upper` on top of `self`; returns the result and the number of closed loops.
    pub fn compose(&self, upper: &Matching) -> Result<(Matching, usize)> {
        if self.top() != upper.bottom() {
            return Err(SkeinError::ArityMismatch { expected: self.top(), found: upper.bottom() });
        }
        let (m, k, l) = (self.bottom(), self.top(), upper.top());
        let mut out = vec![u16::MAX; m + l];
        let mut mid_seen = vec![false; k];
        // Walk from every outer point; `side` false = lower diagram, true = upper.
        for start in 0..m + l {
            if out[start] != u16::MAX {
                continue;
            }
            let (mut upper_side, mut pt) = if start < m { (false, start) } else { (true, k + (start - m)) };
            let end = loop {
                if !upper_side {
                    let q = self.partner(pt);
                    if q < m {
                        break q;
                    }
                    let mid = q - m;
                    mid_seen[mid] = true;
                    upper_side = true;
                    pt = mid;
                } else {
                    let q = upper.partner(pt);
                    if q >= k {
                        break m + (q - k);
                    }
                    mid_seen[q] = true;
                    upper_side = false;
                    pt = m + q;
                }
            };
            out[start] = end as u16;
            out[end] = start as u16;
        }
        let mut loops = 0;
        for s in 0..k {
            if mid_seen[s] {
                continue;
            }
            loops += 1;
            let mut mid = s;
            loop {
                mid_seen[mid] = true;
                let a = upper.partner(mid); // a < k (closed loop stays in the middle)
                mid_seen[a] = true;
                let b = self.partner(m + a) - m;
                if b == s {
                    break;
                }
                mid = b;
            }
        }
        Ok((Matching::new_unchecked(m, l, out), loops))
    }

    /// Side-by-side placement (`self` on the left).
    pub fn tensor(&self, right: &Matching) -> Matching {
        let (m1, k1, m2, k2) = (self.bottom(), self.top(), right.bottom(), right.top());
        let (m, k) = (m1 + m2, k1 + k2);
        let map_left = |p: usize| if p < m1 { p } else { m + (p - m1) };
        let map_right = |p: usize| if p < m2 { m1 + p } else { m + k1 + (p - m2) };
        let mut out = vec![0u16; m + k];
        for p in 0..m1 + k1 {
            out[map_left(p)] = map_left(self.partner(p)) as u16;
        }
        for p in 0..m2 + k2 {
            out[map_right(p)] = map_right(right.partner(p)) as u16;
        }
        Matching::new_unchecked(m, k, out)
    }

    /// Number of loops in the Markov closure (top `i` joined to bottom `i`).
    pub fn closure_loops(&self) -> Result<usize> {
        let n = self.bottom();
        if n != self.top() {
            return Err(SkeinError::ArityMismatch { expected: n, found: self.top() });
        }
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                // Leave through the closing strand.
                p = if q < n { q + n } else { q - n };
                if p == s {
                    break;
                }
            }
        }
        Ok(loops)
    }

    /// Re-reads the boundary after rotating the cyclic order by `shift`
    /// positions, with `new_bottom` points on the new bottom edge.
    pub fn reshape(&self, shift: usize, new_bottom: usize) -> Result<Matching> {
        let n = self.len();
        if new_bottom > n {
            return Err(SkeinError::ArityMismatch { expected: n, found: new_bottom });
        }
        let new_top = n - new_bottom;
        let point_new = |c: usize| -> usize {
            if c < new_bottom {
                c
            } else {
                new_bottom + (new_top - 1 - (c - new_bottom))
            }
        };
        let mut out = vec![0u16; n];
        for c_new in 0..n {
            let old_pt = self.point_at_cyclic((c_new + shift) % n);
            let old_partner_c = self.cyclic_index(self.partner(old_pt));
            let partner_new_c = (old_partner_c + n - shift % n) % n;
            out[point_new(c_new)] = point_new(partner_new_c) as u16;
        }
        Ok(Matching::new_unchecked(new_bottom, new_top, out))
    }

    /// Applies `e_i` on top (0-based top positions `i`, `i+1`); the flag reports a closed loop.
    pub fn e_top(&self, i: usize) -> (Matching, bool) {
        let m = self.bottom();
        let (s, t) = (m + i, m + i + 1);
        if self.partner(s) == t {
            return (self.clone(), true);
        }
        let (a, b) = (self.partner(s), self.partner(t));
        let mut p = self.partner.to_vec();
        p[a] = b as u16;
        p[b] = a as u16;
        p[s] = t as u16;
        p[t] = s as u16;
        (Matching::new_unchecked(m, self.top(), p), false)
    }

    /// True if two of the top points `pos..pos+len` are joined to each other.
    pub fn top_arc_within(&self, pos: usize, len: usize) -> bool {
        let lo = self.bottom() + pos;
        (lo..lo + len).any(|i| {
            let j = self.partner(i);
            j > i && j < lo + len
        })
    }

    /// True if two of the bottom points `pos..pos+len` are joined to each other.
    pub fn bottom_arc_within(&self, pos: usize, len: usize) -> bool {
        (pos..pos + len).any(|i| {
            let j = self.partner(i);
            j > i && j < pos + len
        })
    }

    /// Number of arcs joining two bottom points (caps).
    pub fn cap_count(&self) -> usize {
        (0..self.bottom()).filter(|&i| self.partner(i) < self.bottom()).count() / 2
    }

    /// Every planar matching with the given arities.
    pub fn all(bottom: usize, top: usize) -> Vec<Matching> {
        let n = bottom + top;
        if !n.is_multiple_of(2) {
            return Vec::new();
        }
        fn gen(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
            if lo >= hi {
                return vec![Vec::new()];
            }
            let mut res = Vec::new();
            for j in (lo + 1..hi).step_by(2) {
                for inner in gen(lo + 1, j) {
                    for outer in gen(j + 1, hi) {
                        let mut v = Vec::with_capacity(inner.len() + outer.len() + 1);
                        v.push((lo, j));
                        v.extend_from_slice(&inner);
                        v.extend_from_slice(&outer);
                        res.push(v);
                    }
                }
            }
            res
        }
        let mut out = Vec::new();
        let proto = Matching::new_unchecked(bottom, top, vec![0; n]);
        for arcs in gen(0, n) {
            let mut partner = vec![0u16; n];
            for (a, b) in arcs {
                let (pa, pb) = (proto.point_at_cyclic(a), proto.point_at_cyclic(b));
                partner[pa] = pb as u16;
                partner[pb] = pa as u16;
            }
            out.push(Matching::new_unchecked(bottom, top, partner));
        }
        out.sort();
        out
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    /// Arc list such as `[0-3 1-2 | b2 t2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> =
            (0..self.len()).filter(|&i| self.partner(i) > i).map(|i| format!("{}-{}", i, self.partner(i))).collect();
        write!(f, "[{} | b{} t{}]", arcs.join(" "), self.bottom, self.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        assert_eq!(Matching::all(3, 3).len(), 5);
        assert_eq!(Matching::all(4, 4).len(), 14);
        assert_eq!(Matching::all(0, 6).len(), 5);
    }

    #[test]
    fn e_squared_makes_a_loop() {
        let e = Matching::e(2, 0);
        let (m, loops) = e.compose(&e).unwrap();
        assert_eq!(m, e);
        assert_eq!(loops, 1);
    }

    #[test]
    fn identity_composes_trivially() {
        let id = Matching::identity(3);
        for m in Matching::all(3, 3) {
            assert_eq!(id.compose(&m).unwrap(), (m.clone(), 0));
            assert_eq!(m.compose(&id).unwrap(), (m.clone(), 0));
        }
    }

    #[test]
    fn closure_counts() {
        assert_eq!(Matching::identity(1).closure_loops().unwrap(), 1);
        assert_eq!(Matching::identity(3).closure_loops().unwrap(), 3);
        assert_eq!(Matching::e(2, 0).closure_loops().unwrap(), 1);
    }

    #[test]
    fn reshape_round_trip() {
        for m in Matching::all(2, 4) {
            let r = m.reshape(3, 4).unwrap();
            assert_eq!(r.reshape(3, 2).unwrap(), m);
        }
    }

    #[test]
    fn crossing_arcs_rejected() {
        assert!(Matching::from_arcs(4, 0, &[(0, 2), (1, 3)]).is_err());
    }
}
