//! Products of two chains, built directly from coordinates.
//!
//! `[k] × [n-k]` is realized as the points `(b - a, b + a)` with
//! `1 ≤ a ≤ k`, `1 ≤ b ≤ n - k`, ordered by `a ≤ a'` and `b ≤ b'`. The
//! points with `x = b - a` form a column, and column `x` corresponds to the
//! simple root `α_{x + k}` of `A_{n-1}` when the weight is `ω_k`.

use crate::heap::Heap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoset {
    rows: usize,
    cols: usize,
    points: Vec<(usize, usize)>,
}

impl GridPoset {
    pub fn new(rows: usize, cols: usize) -> Self {
        let mut points: Vec<(usize, usize)> = (1..=rows)
            .flat_map(|a| (1..=cols).map(move |b| (a, b)))
            .collect();
        points.sort_by_key(|&(a, b)| (a + b, a));
        GridPoset { rows, cols, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(a, b)` of point `p`.
    pub fn point(&self, p: usize) -> (usize, usize) {
        self.points[p]
    }

    /// The `(b - a, b + a)` planar coordinates of point `p`.
    pub fn planar(&self, p: usize) -> (i64, i64) {
        let (a, b) = self.points[p];
        (b as i64 - a as i64, (b + a) as i64)
    }

    pub fn leq(&self, p: usize, q: usize) -> bool {
        let (a, b) = self.points[p];
        let (a2, b2) = self.points[q];
        a <= a2 && b <= b2
    }

    /// Points of the column `x = label - rows` for a 1-based label, sorted
    /// bottom to top.
    pub fn column(&self, label: usize) -> Vec<usize> {
        let x = label as i64 - self.rows as i64;
        let mut col: Vec<usize> = (0..self.len()).filter(|&p| self.planar(p).0 == x).collect();
        col.sort_by_key(|&p| self.planar(p).1);
        col
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
}

/// Looks for a labeled isomorphism sending `P_λ^i` onto column `i + 1` of
/// the grid. Label classes and columns are chains, so the only candidate
/// maps the `j`-th element of each class to the `j`-th point of the
/// matching column; returns it if it preserves and reflects the order.
pub fn label_preserving_isomorphism(heap: &Heap, grid: &GridPoset) -> Option<Vec<usize>> {
    if heap.len() != grid.len() {
        return None;
    }
    let mut map = vec![usize::MAX; heap.len()];
    for i in 0..heap.root_system().rank() {
        let class = heap.by_label(i);
        let col = grid.column(i + 1);
        if class.len() != col.len() {
            return None;
        }
        for (&p, &g) in class.iter().zip(&col) {
            map[p] = g;
        }
    }
    for p in 0..heap.len() {
        for q in 0..heap.len() {
            let heap_le = p == q || heap.less_than(p, q);
            if heap_le != grid.leq(map[p], map[q]) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_grid() {
        let g = GridPoset::new(2, 2);
        assert_eq!(g.len(), 4);
        assert_eq!(g.planar(0), (0, 2));
        assert_eq!(g.column(2), vec![0, 3]);
        assert_eq!(g.column(1).len(), 1);
        assert_eq!(g.column(3).len(), 1);
        assert!(g.leq(0, 3) && !g.leq(1, 2) && !g.leq(2, 1));
    }

    #[test]
    fn columns_partition() {
        let g = GridPoset::new(3, 4);
        let total: usize = (1..=6).map(|l| g.column(l).len()).sum();
        assert_eq!(total, 12);
        assert!(g.column(0).is_empty() && g.column(7).is_empty());
    }
}
