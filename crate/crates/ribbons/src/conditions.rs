//! Conditions for a ribbon to keep its Schur support under every
//! permutation of its row lengths, and the machinery that checks them.
//!
//! The sufficient condition asks every three row lengths to satisfy the
//! strict triangle inequality. The necessary condition bounds, for each
//! cut point `j`, the quantity `N_j` (the largest value whose total deficit
//! against the first `j` rows fits in the `m-j-2` boxes available below)
//! by the boxes remaining under the cut. When the necessary condition fails
//! at some `j`, an explicit witness tableau of the swapped shape carries a
//! content the original shape cannot, separating the two supports. The two
//! conditions are conjectured to coincide with the classification, which
//! `check_conjecture` tests by brute force.
//!
//! Row indices `j` here are 1-based throughout, matching the report format.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::lr::{contains_content, has_full_equivalence_class_within};
use crate::ribbon::RibbonShape;
use crate::tableau::Tableau;
use crate::weight::Weight;
use crate::word::is_yamanouchi;

/// Per-cut-point record of the necessary condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JRecord {
    pub j: usize,
    #[serde(rename = "Nj")]
    pub nj: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// Outcome of the necessary condition over every cut point, for the rows
/// sorted weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub ribbon: RibbonShape,
    #[serde(rename = "perJ")]
    pub per_j: Vec<JRecord>,
    pub overall: bool,
}

/// A certificate that a ribbon and one of its adjacent-row swaps have
/// different supports: an LR tableau of the swapped shape whose content the
/// base ribbon cannot carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    /// The base ribbon, rows weakly decreasing.
    pub base_ribbon: RibbonShape,
    /// The cut point (1-based) where the necessary condition fails.
    pub j: usize,
    /// The base ribbon with rows `j` and `j+1` swapped.
    pub swapped_shape: RibbonShape,
    /// An LR tableau of the swapped shape.
    pub witness_tableau: Tableau,
    /// Its content; not in the base ribbon's support.
    pub witness_content: Weight,
}

fn require_classifiable(r: &RibbonShape) -> Result<()> {
    if r.rows().iter().any(|&a| a < 2) {
        return Err(Error::RowTooShort);
    }
    if r.num_rows() < 3 {
        return Err(Error::TooFewRows);
    }
    Ok(())
}

/// The strict-triangle sufficient condition: every three rows `x <= y <= z`
/// (by index, so equal lengths count separately) satisfy `z < x + y`.
///
/// All triples satisfy it exactly when the single largest row is shorter
/// than the two smallest rows combined, so only that triple is tested.
pub fn satisfies_sufficient(r: &RibbonShape) -> Result<bool> {
    require_classifiable(r)?;
    let sorted = r.sorted_desc();
    let rows = sorted.rows();
    let m = rows.len();
    Ok(rows[0] < rows[m - 2] + rows[m - 1])
}

/// `N_j`: the largest `k` whose total deficit over the first `j` rows,
/// `sum(k - a_i)` over rows `a_i < k`, stays within `m - j - 2`. Computed
/// by the incremental loop: start at `k = a_j` (deficit zero) and raise `k`
/// until the deficit overflows.
///
/// Rows must already be weakly decreasing; `j` is 1-based with
/// `1 <= j <= m-2`.
pub fn compute_nj(r_sorted: &RibbonShape, j: usize) -> Result<usize> {
    if !r_sorted.is_sorted_desc() {
        return Err(Error::UnsortedRows);
    }
    let rows = r_sorted.rows();
    let m = rows.len();
    if j == 0 || m < 2 || j > m - 2 {
        return Err(Error::RowIndexOutOfRange {
            j,
            max: m.saturating_sub(2),
        });
    }
    let slack = m - j - 2;
    let mut k = rows[j - 1];
    loop {
        let deficit: usize = rows[..j]
            .iter()
            .filter(|&&a| a < k)
            .map(|&a| k - a)
            .sum();
        if deficit > slack {
            return Ok(k - 1);
        }
        k += 1;
    }
}

/// The necessary condition: for every `1 <= j <= m-2` over the sorted rows,
/// `N_j` must stay strictly below the number of boxes under the cut less
/// the reserved ones, `sum(a_i for i > j) - (m - j - 2)`. Rows are sorted
/// internally, so the report is invariant under permuting the input.
pub fn satisfies_necessary(r: &RibbonShape) -> Result<ConditionReport> {
    require_classifiable(r)?;
    let sorted = r.sorted_desc();
    let rows = sorted.rows().to_vec();
    let m = rows.len();
    let mut per_j = Vec::with_capacity(m - 2);
    for j in 1..=m - 2 {
        let nj = compute_nj(&sorted, j)?;
        let rhs = rows[j..].iter().sum::<usize>() - (m - j - 2);
        per_j.push(JRecord {
            j,
            nj,
            rhs,
            holds: nj < rhs,
        });
    }
    let overall = per_j.iter().all(|rec| rec.holds);
    Ok(ConditionReport {
        ribbon: sorted,
        per_j,
        overall,
    })
}

/// The much weaker comparison `a_i < sum(a_k for k > i)` for every
/// `1 <= i <= m-2` over the sorted rows.
pub fn weak_necessary(r: &RibbonShape) -> bool {
    let sorted = r.sorted_desc();
    let rows = sorted.rows();
    let m = rows.len();
    (0..m.saturating_sub(2)).all(|i| rows[i] < rows[i + 1..].iter().sum())
}

/// Builds the separating certificate for a sorted ribbon whose necessary
/// condition fails at `j` (`N_j >= sum(a_i for i > j) - (m-j-2)`).
///
/// The witness fills the swapped shape with `i`'s through row `j`, packs
/// row `j+1` with `j+1`'s on the right and `j`'s on the left, gives every
/// remaining row all `j+1`'s except a leftmost critical box, and fills the
/// critical boxes top-down with the largest value `<= j` keeping the
/// reverse-reading-word prefix Yamanouchi. The result carries `N_j` copies
/// of `j`, and more `j+1`'s than any LR filling of the base shape can hold.
pub fn build_witness(r_sorted: &RibbonShape, j: usize) -> Result<WitnessCertificate> {
    require_classifiable(r_sorted)?;
    if !r_sorted.is_sorted_desc() {
        return Err(Error::UnsortedRows);
    }
    let rows = r_sorted.rows();
    let m = rows.len();
    if j == 0 || j > m - 2 {
        return Err(Error::RowIndexOutOfRange { j, max: m - 2 });
    }
    let nj = compute_nj(r_sorted, j)?;
    let rhs = rows[j..].iter().sum::<usize>() - (m - j - 2);
    if nj < rhs {
        return Err(Error::WitnessHypothesisNotMet { j });
    }
    // Under the failure hypothesis row j is strictly longer than row j+1.
    assert!(
        rows[j - 1] > rows[j],
        "failure hypothesis forces a strict length drop at j"
    );

    let swapped = r_sorted.swap_adjacent(j)?;
    let lens = swapped.rows();
    let mut built: Vec<Vec<usize>> = Vec::with_capacity(m);
    for t in 1..=m {
        let len = lens[t - 1];
        built.push(if t <= j {
            vec![t; len]
        } else if t == j + 1 {
            let mut row = vec![j; len - rows[j]];
            row.extend(vec![j + 1; rows[j]]);
            row
        } else if t < m {
            let mut row = vec![0; 1];
            row.extend(vec![j + 1; len - 1]);
            row
        } else {
            vec![j + 1; len]
        });
    }

    // Greedy critical fill, tracking reverse-reading-word prefix counts.
    let mut counts = vec![0usize; m + 2];
    for t in 1..=m {
        let row = &mut built[t - 1];
        if (j + 2..m).contains(&t) {
            for &e in row[1..].iter() {
                counts[e] += 1;
            }
            let v = (1..=j)
                .rev()
                .find(|&v| v == 1 || counts[v - 1] > counts[v])
                .expect("value 1 always keeps the prefix Yamanouchi");
            row[0] = v;
            counts[v] += 1;
        } else {
            for &e in row.iter() {
                counts[e] += 1;
            }
        }
    }

    let witness_tableau = Tableau::new(swapped.to_skew(), built)?;
    if !witness_tableau.is_semistandard() || !is_yamanouchi(&witness_tableau.rrw()) {
        return Err(Error::WitnessConstruction);
    }
    let witness_content = witness_tableau.content();
    if witness_content.count(j) != nj || witness_content.count(j + 1) != rhs {
        return Err(Error::WitnessConstruction);
    }
    let nu = witness_content
        .to_partition()
        .expect("LR content is a partition");
    if contains_content(&r_sorted.to_skew(), &nu)? {
        return Err(Error::WitnessConstruction);
    }

    Ok(WitnessCertificate {
        base_ribbon: r_sorted.clone(),
        j,
        swapped_shape: swapped,
        witness_tableau,
        witness_content,
    })
}

/// Result of comparing the conjectured classification against brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureCheck {
    /// What the necessary condition predicts.
    pub predicted: bool,
    pub outcome: ConjectureOutcome,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureOutcome {
    Checked { actual: bool, agree: bool },
    TimedOut,
}

impl ConjectureCheck {
    pub fn actual(&self) -> Option<bool> {
        match self.outcome {
            ConjectureOutcome::Checked { actual, .. } => Some(actual),
            ConjectureOutcome::TimedOut => None,
        }
    }

    pub fn agree(&self) -> Option<bool> {
        match self.outcome {
            ConjectureOutcome::Checked { agree, .. } => Some(agree),
            ConjectureOutcome::TimedOut => None,
        }
    }
}

/// Compares the necessary condition's verdict with the brute-force
/// classification, within a time budget. Running out of budget is reported
/// as an explicit outcome, never silently truncated.
pub fn check_conjecture(r: &RibbonShape, budget: Duration) -> Result<ConjectureCheck> {
    let predicted = satisfies_necessary(r)?.overall;
    let start = Instant::now();
    let outcome = match has_full_equivalence_class_within(r, Deadline::after(budget)) {
        Ok(actual) => ConjectureOutcome::Checked {
            actual,
            agree: predicted == actual,
        },
        Err(Error::Timeout) => ConjectureOutcome::TimedOut,
        Err(e) => return Err(e),
    };
    Ok(ConjectureCheck {
        predicted,
        outcome,
        elapsed: start.elapsed(),
    })
}
