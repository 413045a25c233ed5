use std::fmt;

/// A word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l <= 9) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", strs.join(" "))
        }
    }
}

/// True iff every prefix of `w` contains, for each `i >= 1`, at least as
/// many `i`'s as `(i+1)`'s.
pub fn is_yamanouchi(w: &Word) -> bool {
    let max = w.letters.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &l in &w.letters {
        counts[l] += 1;
        if l >= 2 && counts[l] > counts[l - 1] {
            return false;
        }
    }
    true
}
