//! An independent Schur-support computation used to cross-check the LR
//! engine.
//!
//! Instead of Littlewood-Richardson tableaux, this path expands the skew
//! Schur function into monomials by enumerating every semistandard filling
//! with entries up to the box count, then recovers the Schur expansion by
//! eliminating with Kostka numbers. The Kostka matrix is unitriangular with
//! respect to dominance order, so processing partitions in descending
//! lexicographic order (a linear extension of dominance) solves the system
//! without division. Nothing here touches reading words, so the two support
//! computations share no logic.
//!
//! The enumeration is exponential by design; inputs above the configured
//! box limit are refused rather than left to run.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lr::SupportSet;
use crate::partition::{partitions_of, Partition};
use crate::skew::SkewShape;

/// Default cap on the number of boxes the oracle accepts.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

pub fn support_oracle(shape: &SkewShape) -> Result<SupportSet> {
    support_oracle_with_limit(shape, DEFAULT_ORACLE_LIMIT)
}

pub fn support_oracle_with_limit(shape: &SkewShape, limit: usize) -> Result<SupportSet> {
    let n = shape.num_boxes();
    if n > limit {
        return Err(Error::OracleLimitExceeded { boxes: n, limit });
    }

    // Monomial coefficients of the skew Schur function: for each partition
    // content, the number of semistandard fillings carrying exactly it.
    // n variables suffice, since every partition of n has at most n parts.
    let mut residual: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_ssyt(shape, n, None, &mut |counts| {
        if let Ok(p) = partition_from_counts(counts) {
            *residual.entry(p).or_insert(0) += 1;
        }
    });

    // Unitriangular elimination: subtract each discovered Schur term's
    // monomial expansion (its row of Kostka numbers) from the residual.
    let all = partitions_of(n);
    let mut positive = Vec::new();
    for (idx, nu) in all.iter().enumerate() {
        let c = residual.get(nu).copied().unwrap_or(0);
        assert!(c >= 0, "negative residual for {nu}: not Schur-positive");
        if c == 0 {
            continue;
        }
        positive.push(nu.clone());
        for lam in &all[idx..] {
            let k = kostka(nu, lam);
            if k > 0 {
                *residual.entry(lam.clone()).or_insert(0) -= c * k as i64;
            }
        }
    }
    assert!(
        residual.values().all(|&v| v == 0),
        "monomial residual did not clear"
    );
    Ok(positive.into_iter().collect())
}

fn partition_from_counts(counts: &[usize]) -> Result<Partition> {
    let mut trimmed = counts.to_vec();
    while trimmed.last() == Some(&0) {
        trimmed.pop();
    }
    Partition::new(trimmed)
}

/// The Kostka number: semistandard fillings of the straight shape `nu`
/// with content exactly `lam`.
fn kostka(nu: &Partition, lam: &Partition) -> usize {
    if nu.sum() != lam.sum() {
        return 0;
    }
    let shape = SkewShape::straight(nu.clone());
    let mut count = 0usize;
    for_each_ssyt(&shape, lam.len(), Some(lam.parts()), &mut |_| count += 1);
    count
}

/// Enumerates semistandard fillings of a skew shape box by box in row-major
/// order, entries in `1..=max_entry`, optionally capped per value. Calls
/// `visit` with the content counts of each complete filling.
fn for_each_ssyt(
    shape: &SkewShape,
    max_entry: usize,
    caps: Option<&[usize]>,
    visit: &mut impl FnMut(&[usize]),
) {
    struct Slot {
        left: Option<usize>,
        above: Option<usize>,
    }
    let m = shape.num_rows();
    let mut slots = Vec::with_capacity(shape.num_boxes());
    let mut row_start = vec![0usize; m];
    for r in 0..m {
        row_start[r] = slots.len();
        let (lo, hi) = shape.row_cols(r);
        for c in lo..=hi {
            let left = (c > lo).then(|| slots.len() - 1);
            let above = if r > 0 {
                let (alo, ahi) = shape.row_cols(r - 1);
                (alo <= c && c <= ahi).then(|| row_start[r - 1] + (c - alo))
            } else {
                None
            };
            slots.push(Slot { left, above });
        }
    }

    fn rec(
        slots: &[Slot],
        k: usize,
        max_entry: usize,
        caps: Option<&[usize]>,
        values: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if k == slots.len() {
            visit(&counts[1..]);
            return;
        }
        let slot = &slots[k];
        let mut lo = 1;
        if let Some(l) = slot.left {
            lo = lo.max(values[l]);
        }
        if let Some(a) = slot.above {
            lo = lo.max(values[a] + 1);
        }
        for v in lo..=max_entry {
            if let Some(caps) = caps {
                if counts[v] >= caps[v - 1] {
                    continue;
                }
            }
            values[k] = v;
            counts[v] += 1;
            rec(slots, k + 1, max_entry, caps, values, counts, visit);
            counts[v] -= 1;
        }
    }

    let n = slots.len();
    let mut values = vec![0usize; n];
    let mut counts = vec![0usize; max_entry + 1];
    rec(
        &slots,
        0,
        max_entry,
        caps,
        &mut values,
        &mut counts,
        visit,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::support;
    use crate::ribbon::RibbonShape;

    fn ribbon(rows: &[usize]) -> SkewShape {
        RibbonShape::from_rows(rows.to_vec()).unwrap().to_skew()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_spot_values() {
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(kostka(&part(&[2, 1]), &part(&[2, 1])), 1);
        assert_eq!(kostka(&part(&[2, 1]), &part(&[3])), 0);
        assert_eq!(kostka(&part(&[4]), &part(&[2, 1, 1])), 1);
        assert_eq!(kostka(&part(&[1, 1]), &part(&[2])), 0);
        assert_eq!(kostka(&part(&[3, 2]), &part(&[2, 2, 1])), 2);
    }

    #[test]
    fn oracle_small_golden_values() {
        assert_eq!(
            support_oracle(&ribbon(&[2, 2])).unwrap(),
            [part(&[3, 1]), part(&[2, 2])].into_iter().collect()
        );
        assert_eq!(
            support_oracle(&ribbon(&[3])).unwrap(),
            [part(&[3])].into_iter().collect()
        );
    }

    #[test]
    fn oracle_agrees_with_engine_on_small_ribbons() {
        for rows in [
            vec![2, 2, 2],
            vec![3, 2],
            vec![2, 3],
            vec![1, 1, 1],
            vec![4, 3],
            vec![2, 2, 2, 2],
        ] {
            let shape = ribbon(&rows);
            assert_eq!(
                support_oracle(&shape).unwrap(),
                support(&shape),
                "disagreement on {rows:?}"
            );
        }
    }

    #[test]
    fn oracle_agrees_on_general_skew_shapes() {
        let shapes = [
            SkewShape::new(part(&[3, 2, 1]), part(&[1])).unwrap(),
            SkewShape::new(part(&[4, 2]), part(&[2, 1])).unwrap(),
            SkewShape::straight(part(&[3, 3])),
            SkewShape::new(part(&[4, 4]), part(&[2])).unwrap(),
            // Disconnected.
            SkewShape::new(part(&[3, 1, 1]), part(&[1, 1])).unwrap(),
        ];
        for shape in &shapes {
            assert_eq!(
                support_oracle(shape).unwrap(),
                support(shape),
                "disagreement on {shape}"
            );
        }
    }

    #[test]
    fn oracle_refuses_large_inputs() {
        let shape = ribbon(&[6, 5]);
        assert_eq!(
            support_oracle(&shape),
            Err(Error::OracleLimitExceeded {
                boxes: 11,
                limit: 10
            })
        );
        assert!(support_oracle_with_limit(&shape, 11).is_ok());
    }

    #[test]
    fn empty_shape_supports_the_empty_partition() {
        let shape = SkewShape::straight(Partition::empty());
        assert_eq!(
            support_oracle(&shape).unwrap(),
            [Partition::empty()].into_iter().collect()
        );
    }
}
