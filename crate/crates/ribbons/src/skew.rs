use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ribbon::RibbonShape;

/// A skew shape `outer/inner`: the boxes of `outer`'s Young diagram with
/// `inner`'s removed from the top-left corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Length of row `r` (0-based).
    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// 1-based column range `lo..=hi` occupied by row `r`; empty rows give
    /// `lo > hi`.
    pub fn row_cols(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r) + 1, self.outer.part(r))
    }

    pub fn num_boxes(&self) -> usize {
        self.outer.sum() - self.inner.sum()
    }

    /// Heights of the occupied columns, leftmost first. Used by tests and
    /// the rectangle-count cross-checks.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.outer.part(0);
        (1..=width)
            .map(|c| {
                (0..self.num_rows())
                    .filter(|&r| {
                        let (lo, hi) = self.row_cols(r);
                        lo <= c && c <= hi
                    })
                    .count()
            })
            .filter(|&h| h > 0)
            .collect()
    }

    /// Occupancy grid, row-major, `grid[r][c]` for 0-based row and column.
    pub fn occupancy(&self) -> Vec<Vec<bool>> {
        let width = self.outer.part(0);
        (0..self.num_rows())
            .map(|r| {
                let (lo, hi) = self.row_cols(r);
                (1..=width).map(|c| lo <= c && c <= hi).collect()
            })
            .collect()
    }

    /// Recovers the row-length composition if this shape is a ribbon:
    /// every row nonempty and consecutive rows overlapping in exactly one
    /// column.
    pub fn to_ribbon(&self) -> Option<RibbonShape> {
        let m = self.num_rows();
        if m == 0 {
            return None;
        }
        let mut rows = Vec::with_capacity(m);
        for r in 0..m {
            let len = self.row_len(r);
            if len == 0 {
                return None;
            }
            rows.push(len);
            if r + 1 < m {
                let (lo, _) = self.row_cols(r);
                let (lo_next, hi_next) = self.row_cols(r + 1);
                // Overlap columns of rows r and r+1: lo..=hi_next.
                if lo_next > lo || hi_next != lo {
                    return None;
                }
            }
        }
        RibbonShape::from_rows(rows).ok()
    }

    pub fn is_ribbon(&self) -> bool {
        self.to_ribbon().is_some()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn containment_is_enforced() {
        assert!(SkewShape::new(part(&[3, 2]), part(&[1])).is_ok());
        assert_eq!(
            SkewShape::new(part(&[3, 2]), part(&[4])),
            Err(Error::InnerNotContained)
        );
        assert_eq!(
            SkewShape::new(part(&[3]), part(&[1, 1])),
            Err(Error::InnerNotContained)
        );
    }

    #[test]
    fn ribbon_recognition() {
        let r = RibbonShape::from_rows(vec![4, 3, 2]).unwrap();
        assert_eq!(r.to_skew().to_ribbon(), Some(r));

        // A 2x2 block is not a ribbon.
        let block = SkewShape::straight(part(&[2, 2]));
        assert!(!block.is_ribbon());

        // Disconnected rows are not a ribbon.
        let disconnected = SkewShape::new(part(&[4, 1]), part(&[2])).unwrap();
        assert!(!disconnected.is_ribbon());

        // A single row with any offset still is.
        let offset_row = SkewShape::new(part(&[4]), part(&[1])).unwrap();
        assert_eq!(
            offset_row.to_ribbon(),
            Some(RibbonShape::from_rows(vec![3]).unwrap())
        );
    }

    #[test]
    fn box_count_and_rows() {
        let s = SkewShape::new(part(&[7, 6, 4]), part(&[5, 3])).unwrap();
        assert_eq!(s.num_boxes(), 9);
        assert_eq!(s.row_len(0), 2);
        assert_eq!(s.row_len(1), 3);
        assert_eq!(s.row_len(2), 4);
        assert_eq!(s.row_cols(2), (1, 4));
    }
}
