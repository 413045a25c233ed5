use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::skew::SkewShape;

/// A composition: a finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// A ribbon: the connected skew shape without 2x2 blocks determined by a
/// composition of row lengths, row 1 on top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RibbonShape {
    rows: Composition,
}

impl RibbonShape {
    pub fn new(rows: Composition) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyRibbon);
        }
        Ok(RibbonShape { rows })
    }

    pub fn from_rows(rows: Vec<usize>) -> Result<Self> {
        RibbonShape::new(Composition::new(rows)?)
    }

    /// Row lengths, top to bottom.
    pub fn rows(&self) -> &[usize] {
        self.rows.parts()
    }

    /// Number of rows.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Total number of boxes.
    pub fn num_boxes(&self) -> usize {
        self.rows.sum()
    }

    /// The canonical skew embedding: the bottom row starts at column 1 and
    /// each row starts in the column where the row below it ends, so
    /// consecutive rows overlap in exactly one column.
    pub fn to_skew(&self) -> SkewShape {
        let rows = self.rows();
        let m = rows.len();
        // start[i] is the 1-based leftmost column of row i.
        let mut start = vec![0usize; m];
        start[m - 1] = 1;
        for i in (0..m - 1).rev() {
            start[i] = start[i + 1] + rows[i + 1] - 1;
        }
        let outer: Vec<usize> = (0..m).map(|i| start[i] + rows[i] - 1).collect();
        let inner: Vec<usize> = (0..m).map(|i| start[i] - 1).collect();
        let outer = Partition::new(outer).expect("ribbon outer shape is a partition");
        let mut inner = inner;
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let inner = Partition::new(inner).expect("ribbon inner shape is a partition");
        SkewShape::new(outer, inner).expect("ribbon inner fits in outer")
    }

    /// The 180-degree rotation: row lengths reversed.
    pub fn antipodal(&self) -> RibbonShape {
        let mut rows = self.rows().to_vec();
        rows.reverse();
        RibbonShape {
            rows: Composition { parts: rows },
        }
    }

    /// Applies a permutation given in one-line form on 0-based indices:
    /// row `i` of `self` becomes row `pi[i]` of the result.
    pub fn permute_rows(&self, pi: &[usize]) -> Result<RibbonShape> {
        let m = self.num_rows();
        if pi.len() != m {
            return Err(Error::InvalidPermutation { m });
        }
        let mut seen = vec![false; m];
        for &img in pi {
            if img >= m || seen[img] {
                return Err(Error::InvalidPermutation { m });
            }
            seen[img] = true;
        }
        let mut rows = vec![0usize; m];
        for (i, &img) in pi.iter().enumerate() {
            rows[img] = self.rows()[i];
        }
        Ok(RibbonShape {
            rows: Composition { parts: rows },
        })
    }

    /// Swaps rows `j` and `j+1` (1-based), yielding the ribbon written
    /// `alpha_(j j+1)`.
    pub fn swap_adjacent(&self, j: usize) -> Result<RibbonShape> {
        let m = self.num_rows();
        if j == 0 || j >= m {
            return Err(Error::RowIndexOutOfRange { j, max: m - 1 });
        }
        let mut rows = self.rows().to_vec();
        rows.swap(j - 1, j);
        Ok(RibbonShape {
            rows: Composition { parts: rows },
        })
    }

    /// Rows sorted weakly decreasing.
    pub fn sorted_desc(&self) -> RibbonShape {
        let mut rows = self.rows().to_vec();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        RibbonShape {
            rows: Composition { parts: rows },
        }
    }

    pub fn is_sorted_desc(&self) -> bool {
        self.rows().windows(2).all(|w| w[0] >= w[1])
    }

    /// All distinct row-length permutations, in ascending lexicographic
    /// order. The count is m! divided by the product of multiplicities'
    /// factorials.
    pub fn distinct_permutations(&self) -> Vec<RibbonShape> {
        let mut rows = self.rows().to_vec();
        rows.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(RibbonShape {
                rows: Composition { parts: rows.clone() },
            });
            if !next_permutation(&mut rows) {
                break;
            }
        }
        out
    }

    /// The lexicographically smaller of `self` and its antipodal rotation.
    /// Ribbons in the same antipodal pair have equal Schur support, so this
    /// is a canonical representative for support computations.
    pub fn antipodal_representative(&self) -> RibbonShape {
        let rev = self.antipodal();
        if rev.rows() < self.rows() {
            rev
        } else {
            self.clone()
        }
    }

    /// Number of k-by-l all-box subrectangles of the ribbon diagram.
    ///
    /// A ribbon has no 2x2 block, so any rectangle with both sides >= 2
    /// counts zero; 1-by-l rectangles live inside single rows and k-by-1
    /// rectangles inside single columns. Columns have height 2 except where
    /// length-1 rows stack, so the column heights are computed rather than
    /// assumed.
    pub fn count_rectangles(&self, k: usize, l: usize) -> Result<usize> {
        if k == 0 || l == 0 {
            return Err(Error::EmptyRectangle);
        }
        Ok(if k == 1 {
            self.rows().iter().map(|&r| r.saturating_sub(l - 1)).sum()
        } else if l == 1 {
            self.to_skew()
                .column_heights()
                .into_iter()
                .map(|h| (h + 1).saturating_sub(k))
                .sum()
        } else {
            0
        })
    }
}

impl Serialize for RibbonShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl fmt::Display for RibbonShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Advances `a` to its next lexicographic permutation, returning false once
/// `a` is the last one. Visits each distinct multiset permutation once.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
