use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::skew::SkewShape;
use crate::weight::Weight;
use crate::word::{is_yamanouchi, Word};

/// A filling of a skew shape with positive integers, stored row by row.
///
/// Construction only checks box counts and positivity; semistandardness and
/// the Yamanouchi property are predicates, since intermediate fillings in
/// the row-swap repair are deliberately invalid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::RowLengthMismatch {
                row: rows.len().min(shape.num_rows()) + 1,
                expected: shape.num_rows(),
                got: rows.len(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::RowLengthMismatch {
                    row: r + 1,
                    expected: shape.row_len(r),
                    got: row.len(),
                });
            }
            if row.iter().any(|&e| e == 0) {
                return Err(Error::NonPositiveEntry);
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r]
    }

    pub fn num_boxes(&self) -> usize {
        self.shape.num_boxes()
    }

    /// The reverse reading word: right-to-left across each row, rows top to
    /// bottom.
    pub fn rrw(&self) -> Word {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// The content of the filling: multiplicity of each value.
    pub fn content(&self) -> Weight {
        Weight::from_values(self.rows.iter().flatten().copied())
    }

    /// Rows weakly increase and columns strictly increase downward,
    /// accounting for the skew offsets.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            let (lo_above, hi_above) = self.shape.row_cols(r - 1);
            let (lo, hi) = self.shape.row_cols(r);
            for c in lo_above.max(lo)..=hi_above.min(hi) {
                let above = self.rows[r - 1][c - lo_above];
                let below = self.rows[r][c - lo];
                if above >= below {
                    return false;
                }
            }
        }
        true
    }

    /// Semistandard with Yamanouchi reverse reading word.
    pub fn is_littlewood_richardson(&self) -> bool {
        self.is_semistandard() && is_yamanouchi(&self.rrw())
    }

    /// Swaps the entries at two positions given as (row, index-within-row).
    pub(crate) fn swap_entries(&mut self, a: (usize, usize), b: (usize, usize)) {
        let v = self.rows[a.0][a.1];
        self.rows[a.0][a.1] = self.rows[b.0][b.1];
        self.rows[b.0][b.1] = v;
    }

    /// Serializes to the line-oriented text form: one line per row, a run of
    /// `.` per inner box, then space-separated entries. Every line ends with
    /// a newline.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let inner = self.shape.inner().part(r);
            let mut tokens: Vec<String> = Vec::new();
            if inner > 0 {
                tokens.push(".".repeat(inner));
            }
            tokens.extend(row.iter().map(|e| e.to_string()));
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form produced by [`Tableau::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let mut tokens = line.split_whitespace().peekable();
            let inner_len = match tokens.peek() {
                Some(tok) if tok.chars().all(|c| c == '.') => {
                    let n = tok.len();
                    tokens.next();
                    n
                }
                _ => 0,
            };
            let mut row = Vec::new();
            for tok in tokens {
                let entry: usize = tok.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad entry {tok:?}", lineno + 1))
                })?;
                if entry == 0 {
                    return Err(Error::NonPositiveEntry);
                }
                row.push(entry);
            }
            if inner_len == 0 && row.is_empty() {
                return Err(Error::Parse(format!("line {} is empty", lineno + 1)));
            }
            outer.push(inner_len + row.len());
            inner.push(inner_len);
            rows.push(row);
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let outer = Partition::new(outer).map_err(|_| {
            Error::Parse("row lengths do not stack into a skew shape".into())
        })?;
        let inner = Partition::new(inner).map_err(|_| {
            Error::Parse("inner offsets do not stack into a skew shape".into())
        })?;
        let shape = SkewShape::new(outer, inner)
            .map_err(|_| Error::Parse("inner shape does not fit in outer".into()))?;
        Tableau::new(shape, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::RibbonShape;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// The 9-box LR tableau of the ribbon (2,3,4) with RRW 112213321.
    fn figure3() -> Tableau {
        let shape = RibbonShape::from_rows(vec![2, 3, 4]).unwrap().to_skew();
        Tableau::new(
            shape,
            vec![vec![1, 1], vec![1, 2, 2], vec![1, 2, 3, 3]],
        )
        .unwrap()
    }

    /// The straight-shape semistandard example of shape (8,7,3).
    fn straight_example() -> Tableau {
        Tableau::new(
            SkewShape::straight(part(&[8, 7, 3])),
            vec![
                vec![1, 1, 1, 1, 1, 2, 2, 4],
                vec![2, 2, 3, 3, 4, 5, 5],
                vec![3, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rrw_examples() {
        assert_eq!(
            figure3().rrw().letters(),
            &[1, 1, 2, 2, 1, 3, 3, 2, 1]
        );
        assert_eq!(figure3().rrw().to_string(), "112213321");

        let single = Tableau::new(SkewShape::straight(part(&[1])), vec![vec![1]]).unwrap();
        assert_eq!(single.rrw().letters(), &[1]);

        assert!(Tableau::empty().rrw().is_empty());
    }

    #[test]
    fn content_examples() {
        assert_eq!(straight_example().content(), Weight::new(vec![5, 4, 3, 3, 3]));
        assert_eq!(figure3().content(), Weight::new(vec![4, 3, 2]));
        assert_eq!(Tableau::empty().content(), Weight::empty());
    }

    #[test]
    fn semistandard_examples() {
        assert!(straight_example().is_semistandard());

        let r22 = RibbonShape::from_rows(vec![2, 2]).unwrap().to_skew();
        let t = Tableau::new(r22.clone(), vec![vec![1, 1], vec![2, 2]]).unwrap();
        assert!(t.is_semistandard());

        // A descent within a row.
        let bad = Tableau::new(r22, vec![vec![3, 2], vec![1, 1]]).unwrap();
        assert!(!bad.is_semistandard());

        // Equal entries stacked in the overlap column.
        let r22 = RibbonShape::from_rows(vec![2, 2]).unwrap().to_skew();
        let stacked = Tableau::new(r22, vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(!stacked.is_semistandard());
    }

    #[test]
    fn figure3_is_lr() {
        assert!(figure3().is_littlewood_richardson());
    }

    #[test]
    fn text_round_trip_matches_golden_lines() {
        let text = figure3().to_text();
        assert_eq!(text, "..... 1 1\n... 1 2 2\n1 2 3 3\n");
        assert_eq!(Tableau::from_text(&text).unwrap(), figure3());
    }

    #[test]
    fn text_parses_rows_with_no_entries() {
        let s = SkewShape::new(part(&[3, 3]), part(&[3, 1])).unwrap();
        let t = Tableau::new(s, vec![vec![], vec![1, 2]]).unwrap();
        let text = t.to_text();
        assert_eq!(text, "...\n. 1 2\n");
        assert_eq!(Tableau::from_text(&text).unwrap(), t);
    }

    #[test]
    fn text_rejects_garbage() {
        assert!(matches!(Tableau::from_text("1 x"), Err(Error::Parse(_))));
        assert!(matches!(Tableau::from_text("1 1\n\n"), Err(Error::Parse(_))));
        // Inner offsets must weakly decrease down the rows.
        assert!(matches!(
            Tableau::from_text(". 1\n.. 1\n"),
            Err(Error::Parse(_))
        ));
        assert_eq!(Tableau::from_text("0 1"), Err(Error::NonPositiveEntry));
    }

    #[test]
    fn empty_text_is_the_empty_tableau() {
        assert_eq!(Tableau::from_text("").unwrap(), Tableau::empty());
        assert_eq!(Tableau::empty().to_text(), "");
    }

    #[test]
    fn construction_validates_row_lengths() {
        let shape = RibbonShape::from_rows(vec![2, 2]).unwrap().to_skew();
        assert!(matches!(
            Tableau::new(shape.clone(), vec![vec![1], vec![1, 2]]),
            Err(Error::RowLengthMismatch { row: 1, .. })
        ));
        assert!(matches!(
            Tableau::new(shape, vec![vec![1, 0], vec![1, 2]]),
            Err(Error::NonPositiveEntry)
        ));
    }
}
