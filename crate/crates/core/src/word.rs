//! Words over integer ground sets and the three descent statistics.
//!
//! A `Word` is a sequence of nonzero integers with pairwise-distinct absolute
//! values. This one representation covers plain permutations, signed
//! permutations in window notation, and permutations of arbitrary ground
//! sets. All statistics here are pure functions of immutable values.

use std::collections::HashSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("zero entry at position {0}")]
    ZeroEntry(usize),
    #[error("repeated absolute value {0}")]
    RepeatedAbs(i32),
    #[error("negative entry {0} where positives are required")]
    NegativeEntry(i32),
    #[error("word of length {0} is too short (need at least {1})")]
    TooShort(usize, usize),
}

/// A sequence of nonzero integers with pairwise-distinct absolute values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    entries: Vec<i32>,
}

impl Word {
    pub fn new(entries: Vec<i32>) -> Result<Self, WordError> {
        let mut seen = HashSet::new();
        for (pos, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(WordError::ZeroEntry(pos));
            }
            if !seen.insert(e.abs()) {
                return Err(WordError::RepeatedAbs(e.abs()));
            }
        }
        Ok(Self { entries })
    }

    /// Constructor for generators that produce valid words by construction.
    pub(crate) fn new_unchecked(entries: Vec<i32>) -> Self {
        debug_assert!(Word::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last(&self) -> Option<i32> {
        self.entries.last().copied()
    }

    /// Number of positions `i` with `w_i > w_{i+1}`.
    pub fn des(&self) -> usize {
        self.entries.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// Type B statistic: a virtual 0 precedes the word, so a negative first
    /// entry contributes one extra descent. Computed directly rather than by
    /// reducing first; the equivalence is covered by tests.
    pub fn des_b(&self) -> usize {
        let head = usize::from(self.entries.first().is_some_and(|&e| e < 0));
        head + self.des()
    }

    /// Type D statistic: position 0 counts exactly when `w_1 + w_2 < 0`.
    /// For words of length < 2 the index-0 condition is treated as false.
    pub fn des_d(&self) -> usize {
        let head = match self.entries {
            ref e if e.len() >= 2 => usize::from(e[0] + e[1] < 0),
            _ => 0,
        };
        head + self.des()
    }

    /// Order-isomorphic relabeling onto `[len]`; entries must be positive.
    pub fn red_plain(&self) -> Result<Word, WordError> {
        if let Some(&e) = self.entries.iter().find(|&&e| e < 0) {
            return Err(WordError::NegativeEntry(e));
        }
        let mut sorted: Vec<i32> = self.entries.clone();
        sorted.sort_unstable();
        let rank = |e: i32| (sorted.binary_search(&e).unwrap() + 1) as i32;
        Ok(Word::new_unchecked(
            self.entries.iter().map(|&e| rank(e)).collect(),
        ))
    }

    /// Signed relabeling: the entry with `i`-th smallest absolute value maps
    /// to `i` or `-i` matching its sign.
    pub fn red_signed(&self) -> Word {
        let mut abs: Vec<i32> = self.entries.iter().map(|e| e.abs()).collect();
        abs.sort_unstable();
        let rank = |e: i32| {
            let r = (abs.binary_search(&e.abs()).unwrap() + 1) as i32;
            if e < 0 {
                -r
            } else {
                r
            }
        };
        Word::new_unchecked(self.entries.iter().map(|&e| rank(e)).collect())
    }

    pub fn negate(&self) -> Word {
        Word::new_unchecked(self.entries.iter().map(|&e| -e).collect())
    }

    /// `true` iff the first two entries share a sign; words shorter than 2
    /// are rejected.
    pub fn is_smooth(&self) -> Result<bool, WordError> {
        if self.entries.len() < 2 {
            return Err(WordError::TooShort(self.entries.len(), 2));
        }
        Ok(self.entries[0].signum() == self.entries[1].signum())
    }

    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    /// A signed permutation of `[n]`: absolute values are exactly `1..=n`.
    pub fn is_signed_perm(&self) -> bool {
        let mut abs: Vec<i32> = self.entries.iter().map(|e| e.abs()).collect();
        abs.sort_unstable();
        abs.iter().enumerate().all(|(i, &a)| a == (i + 1) as i32)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", comma_join(&self.entries))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", comma_join(&self.entries))
    }
}

pub(crate) fn comma_join(entries: &[i32]) -> String {
    entries
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A finite set of nonzero integers with pairwise-distinct absolute values.
/// Elements are kept sorted ascending by value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    elements: Vec<i32>,
}

impl GroundSet {
    pub fn new(mut elements: Vec<i32>) -> Result<Self, WordError> {
        let mut seen = HashSet::new();
        for (pos, &e) in elements.iter().enumerate() {
            if e == 0 {
                return Err(WordError::ZeroEntry(pos));
            }
            if !seen.insert(e.abs()) {
                return Err(WordError::RepeatedAbs(e.abs()));
            }
        }
        elements.sort_unstable();
        Ok(Self { elements })
    }

    pub(crate) fn new_unchecked(mut elements: Vec<i32>) -> Self {
        elements.sort_unstable();
        debug_assert!(GroundSet::new(elements.clone()).is_ok());
        Self { elements }
    }

    /// Elements sorted ascending by value.
    pub fn elements(&self) -> &[i32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: i32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// The element of strictly smallest absolute value.
    pub fn min_abs_element(&self) -> Option<i32> {
        self.elements.iter().copied().min_by_key(|e| e.abs())
    }

    /// Absolute values, sorted ascending.
    pub fn abs_values(&self) -> Vec<i32> {
        let mut abs: Vec<i32> = self.elements.iter().map(|e| e.abs()).collect();
        abs.sort_unstable();
        abs
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", comma_join(&self.elements))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i32]) -> Word {
        Word::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(Word::new(vec![1, 0]), Err(WordError::ZeroEntry(1))));
        assert!(matches!(
            Word::new(vec![2, -2]),
            Err(WordError::RepeatedAbs(2))
        ));
    }

    #[test]
    fn des_examples() {
        assert_eq!(w(&[1, 2, 3]).des(), 0);
        assert_eq!(w(&[8, 2, 1, 6, 7, 4, 5, 3]).des(), 4);
        assert_eq!(w(&[2, 1, 3]).des(), 1);
        assert_eq!(Word::empty().des(), 0);
    }

    #[test]
    fn des_b_examples() {
        assert_eq!(w(&[-4, 2, 1, -7, -6, 5, 8, 3]).des_b(), 4);
        assert_eq!(w(&[1, 2, 3, 4, 5]).des_b(), 0);
        assert_eq!(w(&[-3, 4, -1, 5, 9, -7, 2, -8, 6]).des_b(), 4);
        assert_eq!(Word::empty().des_b(), 0);
    }

    #[test]
    fn des_d_examples() {
        assert_eq!(w(&[2, 1]).des_d(), 1);
        assert_eq!(w(&[-1, -2]).des_d(), 2);
        assert_eq!(w(&[1]).des_d(), 0);
    }

    #[test]
    fn red_plain_examples() {
        assert_eq!(w(&[5, 9, 7]).red_plain().unwrap(), w(&[1, 3, 2]));
        assert_eq!(w(&[1, 2, 3]).red_plain().unwrap(), w(&[1, 2, 3]));
        assert_eq!(w(&[8, 3]).red_plain().unwrap(), w(&[2, 1]));
        assert!(w(&[-1, 2]).red_plain().is_err());
    }

    #[test]
    fn red_signed_examples() {
        assert_eq!(w(&[4, -5, -2, 9]).red_signed(), w(&[2, -3, -1, 4]));
        assert_eq!(
            w(&[-5, -3, 1, 8, -6, 7, 2]).red_signed(),
            w(&[-4, -3, 1, 7, -5, 6, 2])
        );
        assert_eq!(w(&[1, -2]).red_signed(), w(&[1, -2]));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(w(&[2, -1, 3]).negate(), w(&[-2, 1, -3]));
        assert_eq!(w(&[1]).negate(), w(&[-1]));
        assert_eq!(w(&[-4, 2]).negate(), w(&[4, -2]));
        // des_B(w) + des_B(-w) = n
        let v = w(&[2, -1, 3]);
        assert_eq!(v.des_b() + v.negate().des_b(), 3);
    }

    #[test]
    fn smoothness() {
        assert!(w(&[-1, -2, 3]).is_smooth().unwrap());
        assert!(!w(&[4, -5, -3, 1, 8, -6, 7, 2]).is_smooth().unwrap());
        assert!(w(&[1, 2]).is_smooth().unwrap());
        assert!(w(&[1]).is_smooth().is_err());
    }

    #[test]
    fn ground_set_basics() {
        let x = GroundSet::new(vec![3, -7, 2]).unwrap();
        assert_eq!(x.elements(), &[-7, 2, 3]);
        assert_eq!(x.min_abs_element(), Some(2));
        assert!(x.contains(-7));
        assert!(!x.contains(7));
        assert!(GroundSet::new(vec![1, -1]).is_err());
    }
}
