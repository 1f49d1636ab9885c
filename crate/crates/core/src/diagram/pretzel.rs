use std::collections::HashMap;

use super::{LinkDiagram, TwistRegion};

/// Minimal union-find over dense indices.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// The standard pretzel diagram with vertical twist regions of the given sizes.
///
/// Region `i` is a column of `c_i` crossings; the strands leaving the top
/// (bottom) right of one column enter the top (bottom) left of the next,
/// cyclically. A column with no crossings is two vertical strands, which is
/// the negative smoothing of the region.
pub fn pretzel(c: &[usize]) -> LinkDiagram {
    // Slot ids: for column i and level j there is a left and a right slot.
    let mut offsets = Vec::with_capacity(c.len());
    let mut total = 0;
    for &k in c {
        offsets.push(total);
        total += 2 * (k + 1);
    }
    let left = |i: usize, j: usize| offsets[i] + 2 * j;
    let right = |i: usize, j: usize| offsets[i] + 2 * j + 1;

    let mut uf = UnionFind::new(total);
    let r = c.len();
    for i in 0..r {
        let next = (i + 1) % r;
        uf.union(right(i, c[i]), left(next, c[next]));
        uf.union(right(i, 0), left(next, 0));
    }

    let mut raw = Vec::new();
    let mut regions = Vec::with_capacity(r);
    for (i, &count) in c.iter().enumerate() {
        let mut ids = Vec::with_capacity(count);
        for j in 0..count {
            ids.push(raw.len());
            raw.push([left(i, j), right(i, j), right(i, j + 1), left(i, j + 1)]);
        }
        regions.push(TwistRegion { id: i + 1, crossings: ids });
    }

    let mut labels: HashMap<usize, u32> = HashMap::new();
    let mut crossings = Vec::with_capacity(raw.len());
    for x in &raw {
        let mut out = [0u32; 4];
        for (slot, &s) in out.iter_mut().zip(x) {
            let root = uf.find(s);
            let next = labels.len() as u32 + 1;
            *slot = *labels.entry(root).or_insert(next);
        }
        crossings.push(out);
    }
    // Classes that no crossing touches are circles between two empty columns.
    let free_loops = uf.classes() - labels.len();

    let name = format!("P({})", c.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
    LinkDiagram::new(name, crossings, regions, free_loops)
        .expect("pretzel diagrams are well formed")
        .with_pretzel_shape(c.to_vec())
}
