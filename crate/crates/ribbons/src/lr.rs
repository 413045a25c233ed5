//! Littlewood-Richardson tableau enumeration and Schur supports.
//!
//! The search fills boxes in reverse-reading-word order (right to left along
//! each row, rows top to bottom), which makes every constraint incremental:
//! the right neighbour and the box above are already placed when a box is
//! filled, the Yamanouchi prefix check only involves the value being placed,
//! and the entry-in-row-`i`-is-at-most-`i` bound caps the alphabet.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ribbon::RibbonShape;
use crate::skew::SkewShape;
use crate::tableau::Tableau;

/// The Schur support of a skew shape: the set of partitions whose
/// Littlewood-Richardson coefficient for the shape is positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportSet {
    elements: BTreeSet<Partition>,
}

impl SupportSet {
    pub fn contains(&self, nu: &Partition) -> bool {
        self.elements.contains(nu)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in descending lexicographic order, the canonical listing.
    pub fn iter_desc(&self) -> impl Iterator<Item = &Partition> {
        self.elements.iter().rev()
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.elements.is_subset(&other.elements)
    }

    fn insert(&mut self, nu: Partition) {
        self.elements.insert(nu);
    }
}

impl FromIterator<Partition> for SupportSet {
    fn from_iter<T: IntoIterator<Item = Partition>>(iter: T) -> Self {
        SupportSet {
            elements: iter.into_iter().collect(),
        }
    }
}

impl Serialize for SupportSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter_desc())
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter_desc().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A Littlewood-Richardson coefficient together with the data it counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrCount {
    pub shape: SkewShape,
    pub nu: Partition,
    pub count: usize,
}

/// One box slot in reverse-reading-word order.
struct BoxSlot {
    /// Entries in row `r` (0-based) are at most `r + 1`.
    max_entry: usize,
    /// Slot index of the box directly above, if occupied.
    above: Option<usize>,
    /// Slot index of the right neighbour within the row, if any.
    right: Option<usize>,
}

pub(crate) struct LrSearch {
    shape: SkewShape,
    slots: Vec<BoxSlot>,
    row_start: Vec<usize>,
    /// Target multiplicity per value (1-based index), when filtering.
    filter: Option<Vec<usize>>,
    deadline: Deadline,
    values: Vec<usize>,
    counts: Vec<usize>,
    depth: usize,
    candidate: usize,
    steps: u32,
    started: bool,
    done: bool,
}

impl LrSearch {
    pub(crate) fn new(shape: &SkewShape, filter: Option<&Partition>, deadline: Deadline) -> Self {
        let m = shape.num_rows();
        let mut slots = Vec::with_capacity(shape.num_boxes());
        let mut row_start = Vec::with_capacity(m);
        for r in 0..m {
            row_start.push(slots.len());
            let (lo, hi) = shape.row_cols(r);
            for c in (lo..=hi).rev() {
                let above = if r > 0 {
                    let (alo, ahi) = shape.row_cols(r - 1);
                    (alo <= c && c <= ahi).then(|| row_start[r - 1] + (ahi - c))
                } else {
                    None
                };
                let right = (c < hi).then(|| slots.len() - 1);
                slots.push(BoxSlot {
                    max_entry: r + 1,
                    above,
                    right,
                });
            }
        }
        let filter_counts = filter.map(|f| f.parts().to_vec());
        // A filter of the wrong total can never be met exactly.
        let done = matches!(&filter_counts, Some(f) if f.iter().sum::<usize>() != slots.len());
        let n_slots = slots.len();
        LrSearch {
            shape: shape.clone(),
            slots,
            row_start,
            filter: filter_counts,
            deadline,
            values: vec![0; n_slots],
            counts: vec![0; m + 2],
            depth: 0,
            candidate: 0,
            steps: 0,
            started: false,
            done,
        }
    }

    fn lo(&self, k: usize) -> usize {
        match self.slots[k].above {
            Some(a) => self.values[a] + 1,
            None => 1,
        }
    }

    fn hi(&self, k: usize) -> usize {
        let slot = &self.slots[k];
        let mut hi = slot.max_entry;
        if let Some(r) = slot.right {
            hi = hi.min(self.values[r]);
        }
        if let Some(f) = &self.filter {
            hi = hi.min(f.len());
        }
        hi
    }

    /// Whether value `v` can be appended: the Yamanouchi prefix must stay
    /// valid and any filter cap must not be exceeded.
    fn admissible(&self, v: usize) -> bool {
        if v >= 2 && self.counts[v] >= self.counts[v - 1] {
            return false;
        }
        match &self.filter {
            Some(f) => self.counts[v] < f[v - 1],
            None => true,
        }
    }

    /// Backtracks one box; returns false when the whole search is spent.
    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            self.done = true;
            return false;
        }
        self.depth -= 1;
        let v = self.values[self.depth];
        self.counts[v] -= 1;
        self.candidate = v + 1;
        true
    }

    fn materialize(&self) -> Tableau {
        let rows: Vec<Vec<usize>> = (0..self.shape.num_rows())
            .map(|r| {
                let start = self.row_start[r];
                let len = self.shape.row_len(r);
                self.values[start..start + len]
                    .iter()
                    .rev()
                    .copied()
                    .collect()
            })
            .collect();
        Tableau::new(self.shape.clone(), rows).expect("search fillings are shape-valid")
    }

    /// The next LR tableau in ascending lexicographic order of reverse
    /// reading words, or `Ok(None)` when exhausted.
    pub(crate) fn try_next(&mut self) -> Result<Option<Tableau>> {
        if self.done {
            return Ok(None);
        }
        self.deadline.check()?;
        if !self.started {
            self.started = true;
            if self.slots.is_empty() {
                self.done = true;
                return Ok(Some(self.materialize()));
            }
            self.candidate = self.lo(0);
        }
        loop {
            self.steps = self.steps.wrapping_add(1);
            if self.steps % 4096 == 0 {
                self.deadline.check()?;
            }
            let k = self.depth;
            let hi = self.hi(k);
            let mut placed = false;
            while self.candidate <= hi {
                let v = self.candidate;
                if self.admissible(v) {
                    self.values[k] = v;
                    self.counts[v] += 1;
                    self.depth += 1;
                    placed = true;
                    break;
                }
                self.candidate += 1;
            }
            if placed {
                if self.depth == self.slots.len() {
                    let t = self.materialize();
                    self.backtrack();
                    return Ok(Some(t));
                }
                self.candidate = self.lo(self.depth);
            } else if !self.backtrack() {
                return Ok(None);
            }
        }
    }

    /// Runs the rest of the search, feeding the content of each complete
    /// filling to `sink`. Contents of LR tableaux are partitions.
    fn drain_contents(&mut self, mut sink: impl FnMut(Partition)) -> Result<()> {
        while let Some(t) = self.try_next()? {
            let nu = t
                .content()
                .to_partition()
                .expect("LR tableau content is a partition");
            sink(nu);
        }
        Ok(())
    }
}

/// Streams every Littlewood-Richardson tableau (semistandard with
/// Yamanouchi reverse reading word) of the shape, in ascending
/// lexicographic order of reverse reading words. With a filter, only
/// tableaux of exactly that content are produced.
pub struct LrTableaux {
    search: LrSearch,
}

impl Iterator for LrTableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        self.search
            .try_next()
            .expect("search without deadline cannot time out")
    }
}

pub fn enumerate_lr_tableaux(shape: &SkewShape, filter: Option<&Partition>) -> LrTableaux {
    LrTableaux {
        search: LrSearch::new(shape, filter, Deadline::none()),
    }
}

/// The Littlewood-Richardson coefficient of `nu` for the shape: the number
/// of LR tableaux of that shape and content.
pub fn lr_coefficient(shape: &SkewShape, nu: &Partition) -> LrCount {
    let count = enumerate_lr_tableaux(shape, Some(nu)).count();
    LrCount {
        shape: shape.clone(),
        nu: nu.clone(),
        count,
    }
}

/// Whether some LR tableau of the shape has content `nu`; stops at the
/// first witness. The content must have as many boxes as the shape.
pub fn contains_content(shape: &SkewShape, nu: &Partition) -> Result<bool> {
    contains_content_within(shape, nu, Deadline::none())
}

pub fn contains_content_within(
    shape: &SkewShape,
    nu: &Partition,
    deadline: Deadline,
) -> Result<bool> {
    if nu.sum() != shape.num_boxes() {
        return Err(Error::ContentSizeMismatch {
            expected: shape.num_boxes(),
            got: nu.sum(),
        });
    }
    let mut search = LrSearch::new(shape, Some(nu), deadline);
    Ok(search.try_next()?.is_some())
}

/// The full Schur support, by complete enumeration with content
/// deduplication.
pub fn support(shape: &SkewShape) -> SupportSet {
    support_within(shape, Deadline::none()).expect("no deadline set")
}

pub fn support_within(shape: &SkewShape, deadline: Deadline) -> Result<SupportSet> {
    let mut set = SupportSet::default();
    let mut search = LrSearch::new(shape, None, deadline);
    search.drain_contents(|nu| {
        debug_assert!(nu.len() <= shape.num_rows());
        set.insert(nu);
    })?;
    Ok(set)
}

pub fn supports_equal(a: &SkewShape, b: &SkewShape) -> bool {
    support(a) == support(b)
}

/// The lexicographically greatest partition in exactly one of the two
/// supports, tagged `true` when it lies in `a`'s support. `None` when the
/// supports are equal.
pub fn support_difference(a: &SkewShape, b: &SkewShape) -> Option<(Partition, bool)> {
    let sa = support(a);
    let sb = support(b);
    let mut best: Option<(Partition, bool)> = None;
    for p in sa.elements.symmetric_difference(&sb.elements) {
        if best.as_ref().is_none_or(|(q, _)| p > q) {
            best = Some((p.clone(), sa.contains(p)));
        }
    }
    best
}

/// Whether the ribbon's support is unchanged under every permutation of its
/// row lengths. Antipodal rotation preserves support, so only one
/// representative per antipodal pair is enumerated.
pub fn has_full_equivalence_class(r: &RibbonShape) -> bool {
    has_full_equivalence_class_within(r, Deadline::none()).expect("no deadline set")
}

pub fn has_full_equivalence_class_within(r: &RibbonShape, deadline: Deadline) -> Result<bool> {
    let reps: BTreeSet<RibbonShape> = r
        .distinct_permutations()
        .into_iter()
        .map(|p| p.antipodal_representative())
        .collect();
    let mut iter = reps.iter();
    let first = iter.next().expect("a ribbon has at least one permutation");
    let base = support_within(&first.to_skew(), deadline)?;
    for rep in iter {
        if support_within(&rep.to_skew(), deadline)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}
