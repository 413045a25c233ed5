//! The combinatorial R-matrix on two adjacent ribbon rows, and the
//! swap-and-repair that turns it into a support-containment tool.
//!
//! The two rows are read as a box-ball system: the upper row's entries are
//! balls on the left, the lower row's on the right. Each right ball is
//! connected to an unmatched left ball of the largest value strictly below
//! its own, falling back to the largest-valued unmatched left ball, and the
//! unmatched left balls then shift over to the right. The matched values
//! form the new upper row and everything on the right the new lower row, so
//! the rows trade lengths while the pair's content and in-pair
//! semistandardness are preserved. When the upper row is the shorter one,
//! the swap runs on the antipodal rotation instead and rotates back.

use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::weight::Weight;
use crate::word::is_yamanouchi;

/// A two-row box-ball pairing: which left ball each right ball connects to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxBallState {
    left: Weight,
    right: Weight,
    /// Matched (left value, right value) pairs with multiplicity, sorted.
    matches: Vec<(usize, usize)>,
    unmatched_left: Weight,
}

impl BoxBallState {
    pub fn left(&self) -> &Weight {
        &self.left
    }

    pub fn right(&self) -> &Weight {
        &self.right
    }

    pub fn matches(&self) -> &[(usize, usize)] {
        &self.matches
    }

    /// Multiset of left values consumed by the matching.
    pub fn matched_left(&self) -> Weight {
        Weight::from_values(self.matches.iter().map(|&(l, _)| l))
    }

    /// Left balls that no right ball connected to.
    pub fn unmatched_left(&self) -> &Weight {
        &self.unmatched_left
    }
}

/// Connects every right ball to a left ball: the largest-valued unmatched
/// left ball strictly below the right ball's value, or failing that the
/// largest-valued unmatched left ball overall. Right balls are processed in
/// descending value order; the resulting rows do not depend on this choice,
/// which the property tests exercise.
pub fn box_ball_pairing(left: &Weight, right: &Weight) -> Result<BoxBallState> {
    if left.total() < right.total() {
        return Err(Error::PairingSizeMismatch);
    }
    let mut unmatched = left.counts().to_vec();
    let mut matches = pair_in_order(&mut unmatched, right.values().into_iter().rev());
    matches.sort_unstable();
    Ok(BoxBallState {
        left: left.clone(),
        right: right.clone(),
        matches,
        unmatched_left: Weight::new(unmatched),
    })
}

/// Core pairing loop over right-ball values in the given order.
/// `unmatched` holds left multiplicities indexed by value-1 and is consumed
/// in place.
fn pair_in_order(
    unmatched: &mut [usize],
    right_values: impl Iterator<Item = usize>,
) -> Vec<(usize, usize)> {
    let mut matches = Vec::new();
    for v in right_values {
        let below = (1..v.min(unmatched.len() + 1))
            .rev()
            .find(|&w| unmatched[w - 1] > 0);
        let chosen = below.or_else(|| {
            (1..=unmatched.len()).rev().find(|&w| unmatched[w - 1] > 0)
        });
        let w = chosen.expect("left row holds at least as many balls as the right");
        unmatched[w - 1] -= 1;
        matches.push((w, v));
    }
    matches
}

/// Swaps the lengths of rows `j` and `j+1` (1-based) of a ribbon tableau
/// via the box-ball R-matrix. The pair's content is preserved and the two
/// rows stay semistandard between themselves; rows of equal length are left
/// untouched. Requires the pair of rows to be semistandard on input.
pub fn rmatrix_swap(t: &Tableau, j: usize) -> Result<Tableau> {
    let ribbon = t.shape().to_ribbon().ok_or(Error::NotRibbon)?;
    let m = ribbon.num_rows();
    if j == 0 || j >= m {
        return Err(Error::RowIndexOutOfRange {
            j,
            max: m.saturating_sub(1),
        });
    }
    let upper = t.row(j - 1);
    let lower = t.row(j);
    let pair_ok = upper.windows(2).all(|w| w[0] <= w[1])
        && lower.windows(2).all(|w| w[0] <= w[1])
        && upper[0] < lower[lower.len() - 1];
    if !pair_ok {
        return Err(Error::PairNotSemistandard { j });
    }

    if upper.len() == lower.len() {
        return Ok(t.clone());
    }

    let (new_upper, new_lower) = if upper.len() > lower.len() {
        let state = box_ball_pairing(
            &Weight::from_values(upper.iter().copied()),
            &Weight::from_values(lower.iter().copied()),
        )?;
        let mut new_lower = state.right().values();
        new_lower.extend(state.unmatched_left().values());
        new_lower.sort_unstable();
        (state.matched_left().values(), new_lower)
    } else {
        // Antipodal route: rotating the pair 180 degrees puts the lower row
        // first and complements entries (largest value becomes smallest),
        // which keeps the rotated rows weakly increasing. The algorithm
        // then applies directly and the result rotates back. This makes the
        // two directions mutually inverse.
        let n_max = upper.iter().chain(lower.iter()).max().copied().unwrap_or(1);
        let comp = |v: usize| n_max + 1 - v;
        let state = box_ball_pairing(
            &Weight::from_values(lower.iter().map(|&v| comp(v))),
            &Weight::from_values(upper.iter().map(|&v| comp(v))),
        )?;
        let mut new_upper = upper.to_vec();
        new_upper.extend(state.unmatched_left().values().iter().map(|&v| comp(v)));
        new_upper.sort_unstable();
        let mut new_lower: Vec<usize> =
            state.matches().iter().map(|&(l, _)| comp(l)).collect();
        new_lower.sort_unstable();
        (new_upper, new_lower)
    };

    let swapped = ribbon.swap_adjacent(j)?;
    let mut rows: Vec<Vec<usize>> = t.rows().to_vec();
    rows[j - 1] = new_upper;
    rows[j] = new_lower;
    Tableau::new(swapped.to_skew(), rows)
}

/// Produces an LR tableau of shape `alpha_(i i+1)` with the content of `a`,
/// given an LR ribbon tableau `a` whose row `i` (1-based) is longer than row
/// `i+1` but shorter than its neighbours combined (`alpha_0` reads as
/// infinite).
///
/// The R-matrix swap keeps the result Yamanouchi and semistandard except
/// possibly between rows `i-1` and `i`; a fixed sequence of local entry
/// swaps repairs that seam. Every candidate is fully re-checked and the
/// first genuinely LR tableau is returned, so a logic gap surfaces as
/// [`Error::RepairExhausted`] rather than a bad tableau.
pub fn swap_to_lr(a: &Tableau, i: usize) -> Result<Tableau> {
    let ribbon = a.shape().to_ribbon().ok_or(Error::NotRibbon)?;
    let rows = ribbon.rows();
    let m = rows.len();
    if i == 0 || i >= m {
        return Err(Error::RowIndexOutOfRange {
            j: i,
            max: m.saturating_sub(1),
        });
    }
    if !a.is_littlewood_richardson() {
        return Err(Error::NotLittlewoodRichardson);
    }
    if rows[i - 1] <= rows[i] {
        return Err(Error::SwapRowsNotDecreasing { i });
    }
    if i >= 2 && rows[i - 1] >= rows[i - 2] + rows[i] {
        return Err(Error::SwapTriangleViolated { i });
    }

    let b = rmatrix_swap(a, i)?;
    debug_assert!(is_yamanouchi(&b.rrw()), "R-matrix lost the Yamanouchi property");
    debug_assert_eq!(b.content(), a.content());

    let expected_content = a.content();
    let accept = |cand: Tableau| -> Option<Tableau> {
        debug_assert_eq!(cand.content(), expected_content);
        cand.is_littlewood_richardson().then_some(cand)
    };

    if let Some(ok) = accept(b.clone()) {
        return Ok(ok);
    }
    if i == 1 {
        // With no row above the pair the R-matrix output is always LR.
        return Err(Error::RepairExhausted);
    }

    // 0-based row indices around the seam: `up` above the swapped pair,
    // `r1`/`r2` the swapped pair itself.
    let up = i - 2;
    let r1 = i - 1;
    let r2 = i;
    let last = |row: &[usize]| row.len() - 1;

    let rp = *b.row(r1).last().expect("ribbon rows are nonempty");

    let mut candidates: Vec<Tableau> = Vec::new();
    let swap1 = |x: (usize, usize), y: (usize, usize)| {
        let mut c = b.clone();
        c.swap_entries(x, y);
        c
    };

    // Unequal seam entries: trade them directly.
    candidates.push(swap1((up, 0), (r1, last(b.row(r1)))));

    // w: leftmost entry above the seam exceeding the seam value.
    if let Some(pw) = b.row(up).iter().position(|&e| e > rp) {
        if pw != last(b.row(up)) {
            candidates.push(swap1((up, pw), (r1, last(b.row(r1)))));
        }
    }

    // x: rightmost entry of the swapped upper row below the seam value.
    if let Some(px) = b.row(r1).iter().rposition(|&e| e < rp) {
        if px != 0 {
            candidates.push(swap1((r1, px), (up, 0)));
        }
    }

    // y: the swapped upper row's leftmost entry, when it differs.
    if b.row(r1)[0] != rp {
        candidates.push(swap1((r1, 0), (up, 0)));
    }

    // z: leftmost entry of the lower row exceeding the seam value.
    if let Some(pz) = b.row(r2).iter().position(|&e| e > rp) {
        if pz != last(b.row(r2)) {
            candidates.push(swap1((r2, pz), (r1, last(b.row(r1)))));
        }
    }

    if i >= 3 {
        let up2 = up - 1;
        // s/t: rotate the seam entry through the rows above.
        candidates.push(swap1((up, last(b.row(up))), (r1, last(b.row(r1)))));
        let mut c = swap1((up, last(b.row(up))), (r1, last(b.row(r1))));
        c.swap_entries((up, last(b.row(up))), (up2, 0));
        candidates.push(c);
    }

    // Upward scan: walk over "trivial" two-box rows reading `rp, rp+1` and
    // swap at the first row above them that breaks the pattern. The topmost
    // row of a Yamanouchi tableau cannot be trivial, so the scan finds one
    // whenever it applies.
    if i >= 3 {
        let z = rp + 1;
        let jj = (0..up)
            .rev()
            .find(|&r| !(b.row(r).len() == 2 && b.row(r) == [rp, z]));
        if let Some(jj) = jj {
            candidates.push(swap1((jj + 1, last(b.row(jj + 1))), (r1, last(b.row(r1)))));
            if b.row(jj).len() >= 2 {
                candidates.push(swap1((jj, 1), (r1, last(b.row(r1)))));
                if jj >= 1 {
                    let mut c = swap1((jj, 1), (r1, last(b.row(r1))));
                    c.swap_entries((jj, 1), (jj - 1, 0));
                    candidates.push(c);
                }
            }
        }
    }

    for cand in candidates {
        if let Some(ok) = accept(cand) {
            return Ok(ok);
        }
    }
    Err(Error::RepairExhausted)
}
