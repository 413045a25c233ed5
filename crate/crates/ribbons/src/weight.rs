use std::fmt;

use serde::{Serialize, Serializer};

use crate::partition::Partition;

/// The weight (content) of a filling: `count(i)` is the number of boxes
/// holding the value `i`.
///
/// Stored in canonical form with trailing zeros trimmed, so `(4,3,2)` and
/// `(4,3,2,0)` compare equal. Interior zeros are meaningful: `(2,0,1)`
/// records two 1's and one 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight { counts }
    }

    pub fn empty() -> Self {
        Weight { counts: Vec::new() }
    }

    /// Tallies a sequence of positive values.
    pub fn from_values<I: IntoIterator<Item = usize>>(values: I) -> Self {
        let mut counts = Vec::new();
        for v in values {
            debug_assert!(v >= 1);
            if v > counts.len() {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Weight::new(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Multiplicity of the value `v` (1-based).
    pub fn count(&self, v: usize) -> usize {
        if v == 0 {
            0
        } else {
            self.counts.get(v - 1).copied().unwrap_or(0)
        }
    }

    /// Total number of tallied boxes.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The multiset expanded into a weakly increasing sequence of values.
    pub fn values(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat(i + 1).take(c));
        }
        out
    }

    /// Reads the counts as a partition, if they are weakly decreasing.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Weight::new(vec![4, 3, 2, 0]), Weight::new(vec![4, 3, 2]));
        assert_eq!(Weight::new(vec![0, 0]), Weight::empty());
        // An interior zero is preserved.
        assert_ne!(Weight::new(vec![2, 0, 1]), Weight::new(vec![2, 1]));
    }

    #[test]
    fn from_values_tallies() {
        let w = Weight::from_values([1, 1, 2, 1, 3, 1]);
        assert_eq!(w.counts(), &[4, 1, 1]);
        assert_eq!(w.total(), 6);
        assert_eq!(w.values(), vec![1, 1, 1, 1, 2, 3]);
    }

    #[test]
    fn partition_view() {
        assert_eq!(
            Weight::new(vec![4, 3, 2]).to_partition(),
            Some(Partition::new(vec![4, 3, 2]).unwrap())
        );
        assert_eq!(Weight::new(vec![2, 3]).to_partition(), None);
        assert_eq!(Weight::empty().to_partition(), Some(Partition::empty()));
    }
}
