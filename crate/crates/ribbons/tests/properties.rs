//! Property tests for the shape, word, and tableau layers.

use proptest::collection::vec;
use proptest::prelude::*;

use ribbons::{
    is_yamanouchi, Partition, RibbonShape, SkewShape, Tableau, Weight, Word,
};

fn ribbon_rows() -> impl Strategy<Value = Vec<usize>> {
    vec(1usize..=6, 1..=6)
}

/// A random skew shape with at most `max_boxes` boxes.
fn skew_shape(max_boxes: usize) -> impl Strategy<Value = SkewShape> {
    (vec(1usize..=5, 1..=4), proptest::num::u64::ANY).prop_map(move |(mut outer, seed)| {
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let outer = Partition::new(outer).unwrap();
        // Carve a deterministic pseudo-random inner shape.
        let mut inner = Vec::new();
        let mut prev = outer.part(0);
        let mut state = seed;
        for i in 0..outer.len() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let cap = prev.min(outer.part(i));
            let pick = (state >> 33) as usize % (cap + 1);
            inner.push(pick);
            prev = pick;
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let inner = Partition::new(inner).unwrap();
        let shape = SkewShape::new(outer, inner).unwrap();
        if shape.num_boxes() > max_boxes {
            // Shrink by using the inner as a floor: fall back to a straight
            // shape of bounded size.
            SkewShape::straight(Partition::new(vec![max_boxes.max(1)]).unwrap())
        } else {
            shape
        }
    })
}

/// An arbitrary (not necessarily semistandard) filling of a shape.
fn filled(shape: SkewShape) -> impl Strategy<Value = Tableau> {
    let lens: Vec<usize> = (0..shape.num_rows()).map(|r| shape.row_len(r)).collect();
    let rows: Vec<_> = lens.into_iter().map(|l| vec(1usize..=7, l..=l)).collect();
    rows.prop_map(move |rows| Tableau::new(shape.clone(), rows).unwrap())
}

proptest! {
    #[test]
    fn antipodal_is_an_involution(rows in ribbon_rows()) {
        let r = RibbonShape::from_rows(rows).unwrap();
        prop_assert_eq!(r.antipodal().antipodal(), r);
    }

    #[test]
    fn permutation_inverse_round_trips(rows in ribbon_rows(), seed in any::<u64>()) {
        let r = RibbonShape::from_rows(rows).unwrap();
        let m = r.num_rows();
        let pi = pseudo_shuffle(m, seed);
        let mut inv = vec![0; m];
        for (i, &img) in pi.iter().enumerate() {
            inv[img] = i;
        }
        let permuted = r.permute_rows(&pi).unwrap();
        prop_assert_eq!(permuted.permute_rows(&inv).unwrap(), r);
    }

    #[test]
    fn antipodal_commutes_with_reversed_permutation(rows in ribbon_rows(), seed in any::<u64>()) {
        let r = RibbonShape::from_rows(rows).unwrap();
        let m = r.num_rows();
        let pi = pseudo_shuffle(m, seed);
        // Conjugating the permutation by index reversal matches rotating
        // first and permuting after.
        let conj: Vec<usize> = (0..m).map(|i| m - 1 - pi[m - 1 - i]).collect();
        prop_assert_eq!(
            r.permute_rows(&pi).unwrap().antipodal(),
            r.antipodal().permute_rows(&conj).unwrap()
        );
    }

    #[test]
    fn rectangle_counts_match_a_grid_scan(rows in vec(1usize..=4, 1..=4), k in 1usize..=12, l in 1usize..=12) {
        let r = RibbonShape::from_rows(rows).unwrap();
        prop_assert_eq!(
            r.count_rectangles(k, l).unwrap(),
            grid_scan(&r.to_skew(), k, l)
        );
    }

    #[test]
    fn distinct_permutations_have_multinomial_size(rows in vec(1usize..=3, 1..=5)) {
        let r = RibbonShape::from_rows(rows.clone()).unwrap();
        let perms = r.distinct_permutations();
        // Expected count: m! / prod(multiplicity!).
        let mut mult = std::collections::HashMap::new();
        for &x in &rows {
            *mult.entry(x).or_insert(0usize) += 1;
        }
        let fact = |n: usize| (1..=n).product::<usize>();
        let expected = fact(rows.len()) / mult.values().map(|&c| fact(c)).product::<usize>();
        prop_assert_eq!(perms.len(), expected);
        // All distinct, all permutations of the multiset.
        for w in perms.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn yamanouchi_is_prefix_monotone(letters in vec(1usize..=4, 0..=12)) {
        let w = Word::new(letters.clone());
        if is_yamanouchi(&w) {
            for cut in 0..=letters.len() {
                prop_assert!(is_yamanouchi(&Word::new(letters[..cut].to_vec())));
            }
        }
    }

    #[test]
    fn rrw_and_content_have_box_count_length(t in skew_shape(16).prop_flat_map(filled)) {
        prop_assert_eq!(t.rrw().len(), t.num_boxes());
        prop_assert_eq!(t.content().total(), t.num_boxes());
    }

    #[test]
    fn tableau_text_round_trips(t in skew_shape(16).prop_flat_map(filled)) {
        let text = t.to_text();
        let parsed = Tableau::from_text(&text).unwrap();
        prop_assert_eq!(&parsed, &t);
        // Writing again reproduces the bytes exactly.
        prop_assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn weight_trims_to_canonical_form(counts in vec(0usize..=5, 0..=6), pad in 0usize..=3) {
        let mut padded = counts.clone();
        padded.extend(std::iter::repeat(0).take(pad));
        prop_assert_eq!(Weight::new(padded), Weight::new(counts));
    }
}

/// Fisher-Yates with a tiny deterministic generator, for permutations.
fn pseudo_shuffle(m: usize, seed: u64) -> Vec<usize> {
    let mut pi: Vec<usize> = (0..m).collect();
    let mut state = seed | 1;
    for i in (1..m).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = ((state >> 33) as usize) % (i + 1);
        pi.swap(i, j);
    }
    pi
}

/// Counts k-by-l all-box rectangles directly on the occupancy grid.
fn grid_scan(shape: &SkewShape, k: usize, l: usize) -> usize {
    let grid = shape.occupancy();
    let height = grid.len();
    let width = grid.first().map_or(0, |row| row.len());
    if k > height || l > width {
        return 0;
    }
    let mut count = 0;
    for top in 0..=height - k {
        for left in 0..=width - l {
            if (top..top + k).all(|r| (left..left + l).all(|c| grid[r][c])) {
                count += 1;
            }
        }
    }
    count
}
