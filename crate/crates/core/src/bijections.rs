//! The five explicit maps behind the identities, as executable invertible
//! transformations: ground-set relabelings, the block decomposition into
//! signed set partitions, the smooth and non-smooth maps between signed and
//! even-signed permutations, and entrywise negation.

use crate::enumerate::SignedSetPartition;
use crate::word::{GroundSet, Word};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("input is not smooth")]
    NotSmooth,
    #[error("input is smooth")]
    Smooth,
    #[error("word of length {0} is too short (need at least {1})")]
    TooShort(usize, usize),
    #[error("input is not a signed permutation of [n]")]
    NotSignedPerm,
    #[error("word entries do not match the ground set")]
    GroundSetMismatch,
    #[error("ground set violates the required conditions: {0}")]
    InvalidGroundSet(String),
    #[error("invalid last entry: {0}")]
    InvalidLastEntry(String),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("input has odd negative count, not an even-signed permutation")]
    OddNegativeCount,
}

fn check_word_over(x: &GroundSet, w: &Word) -> Result<(), BijectionError> {
    if w.len() != x.len() || !w.entries().iter().all(|&e| x.contains(e)) {
        return Err(BijectionError::GroundSetMismatch);
    }
    Ok(())
}

fn check_abs_full(x: &GroundSet) -> Result<(), BijectionError> {
    let n = x.len() as i32;
    if x.abs_values() != (1..=n).collect::<Vec<_>>() {
        return Err(BijectionError::InvalidGroundSet(
            "absolute values must be exactly 1..=n".into(),
        ));
    }
    Ok(())
}

fn apply_map(map: &HashMap<i32, i32>, w: &Word) -> Word {
    Word::new_unchecked(w.entries().iter().map(|e| map[e]).collect())
}

fn invert_map(map: &HashMap<i32, i32>) -> HashMap<i32, i32> {
    map.iter().map(|(&k, &v)| (v, k)).collect()
}

/// The relabeling sending the elements of `X` to `[n]`: positives ascending
/// first, then negatives ascending. Requires `{1,...,i}` to sit inside `X`
/// positively, where `i` is determined by the caller's context; the map
/// itself depends only on `X`.
fn lemma21_map(x: &GroundSet) -> HashMap<i32, i32> {
    let mut positives: Vec<i32> = x.elements().iter().copied().filter(|&e| e > 0).collect();
    let negatives: Vec<i32> = x.elements().iter().copied().filter(|&e| e < 0).collect();
    positives.extend(negatives);
    positives
        .into_iter()
        .zip(1..)
        .map(|(e, r)| (e, r))
        .collect()
}

fn check_lemma21_set(x: &GroundSet, i: i32) -> Result<(), BijectionError> {
    check_abs_full(x)?;
    if i <= 0 {
        return Err(BijectionError::InvalidLastEntry(format!(
            "word must end with a positive entry, got {i}"
        )));
    }
    if !(1..=i).all(|r| x.contains(r)) {
        return Err(BijectionError::InvalidGroundSet(format!(
            "1..={i} must all belong to the set positively"
        )));
    }
    Ok(())
}

/// Descent-transferring relabeling from permutations of `X` ending at `i`
/// (with `des_B`) onto plain permutations of `[n]` ending at `i` (with
/// `des`): positives keep their relative order, negatives are sent above
/// them in ascending order.
pub fn phi_lemma21(x: &GroundSet, w: &Word) -> Result<Word, BijectionError> {
    check_word_over(x, w)?;
    let i = w.last().ok_or(BijectionError::TooShort(0, 1))?;
    check_lemma21_set(x, i)?;
    Ok(apply_map(&lemma21_map(x), w))
}

/// Inverse of [`phi_lemma21`] for the same ground set.
pub fn phi_lemma21_inv(x: &GroundSet, w: &Word) -> Result<Word, BijectionError> {
    if w.len() != x.len() || w.entries().iter().any(|&e| e <= 0 || e > x.len() as i32) {
        return Err(BijectionError::GroundSetMismatch);
    }
    let inv = invert_map(&lemma21_map(x));
    let out = apply_map(&inv, w);
    let i = out.last().ok_or(BijectionError::TooShort(0, 1))?;
    check_lemma21_set(x, i)?;
    Ok(out)
}

/// The relabeling of a set `X` carrying `j` negatives below `i`: negatives
/// below `i` map to `-i..=-(i-j+1)` ascending, positives up to `i` map to
/// `1..=i-j`, entries of larger absolute value stay fixed.
fn lemma22_map(x: &GroundSet, i: i32) -> Result<HashMap<i32, i32>, BijectionError> {
    check_abs_full(x)?;
    if i <= 0 || !x.contains(i) {
        return Err(BijectionError::InvalidGroundSet(format!(
            "{i} must belong to the set positively"
        )));
    }
    let mut map = HashMap::new();
    let below: Vec<i32> = x
        .elements()
        .iter()
        .copied()
        .filter(|e| e.abs() <= i)
        .collect();
    let j = below.iter().filter(|&&e| e < 0).count() as i32;
    // `below` is sorted ascending: negatives first, then positives up to i.
    for (r, &e) in below.iter().enumerate() {
        let r = r as i32 + 1;
        if e < 0 {
            map.insert(e, r - i - 1);
        } else {
            map.insert(e, r - j);
        }
    }
    for &e in x.elements().iter().filter(|e| e.abs() > i) {
        map.insert(e, e);
    }
    Ok(map)
}

/// Relabeling from permutations of a signed set ending at `i` onto a
/// Lemma 2.1 ground set, ending at `i - j`; preserves `des_B`.
pub fn phi_lemma22(x: &GroundSet, w: &Word) -> Result<Word, BijectionError> {
    check_word_over(x, w)?;
    let i = w.last().ok_or(BijectionError::TooShort(0, 1))?;
    if i <= 0 {
        return Err(BijectionError::InvalidLastEntry(format!(
            "word must end with a positive entry, got {i}"
        )));
    }
    Ok(apply_map(&lemma22_map(x, i)?, w))
}

/// Inverse of [`phi_lemma22`]: the original index `i` is recovered from the
/// image's last entry (`i - j` is strictly increasing over the positive
/// elements of `X`, so the preimage index is unique).
pub fn phi_lemma22_inv(x: &GroundSet, w: &Word) -> Result<Word, BijectionError> {
    let m = w.last().ok_or(BijectionError::TooShort(0, 1))?;
    check_abs_full(x)?;
    let mut found = None;
    for &p in x.elements().iter().filter(|&&e| e > 0) {
        let j = x.elements().iter().filter(|&&e| e < 0 && -e < p).count() as i32;
        if p - j == m {
            found = Some(p);
            break;
        }
    }
    let i = found.ok_or_else(|| {
        BijectionError::InvalidLastEntry(format!("no element of the set maps onto last entry {m}"))
    })?;
    let inv = invert_map(&lemma22_map(x, i)?);
    if w.len() != x.len() || w.entries().iter().any(|e| !inv.contains_key(e)) {
        return Err(BijectionError::GroundSetMismatch);
    }
    Ok(apply_map(&inv, w))
}

/// Cut a word after every right-to-left absolute minimum. Each block then
/// ends at its entry of smallest absolute value, and block-final absolute
/// values increase left to right.
pub fn decompose_blocks(w: &Word) -> Vec<Word> {
    let e = w.entries();
    let mut blocks = Vec::new();
    let mut start = 0;
    let mut min_after = i32::MAX;
    let mut cuts = vec![false; e.len()];
    for (p, &x) in e.iter().enumerate().rev() {
        if x.abs() < min_after {
            min_after = x.abs();
            cuts[p] = true;
        }
    }
    for (p, &cut) in cuts.iter().enumerate() {
        if cut {
            blocks.push(Word::new_unchecked(e[start..=p].to_vec()));
            start = p + 1;
        }
    }
    blocks
}

/// The signed permutation to signed set partition map: decompose into
/// blocks, forget the concatenation order. `des_B` splits additively over
/// the blocks.
pub fn phi_partition(w: &Word) -> Result<SignedSetPartition, BijectionError> {
    if !w.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    let blocks = decompose_blocks(w)
        .into_iter()
        .map(|b| b.entries().to_vec())
        .collect();
    SignedSetPartition::new(blocks)
        .map_err(|e| BijectionError::ParamRange(e.to_string()))
}

/// Inverse: concatenate the blocks in increasing order of smallest absolute
/// value (the stored order).
pub fn psi_partition(p: &SignedSetPartition) -> Word {
    Word::new_unchecked(p.blocks().iter().flatten().copied().collect())
}

/// Lemma 3.1's map on smooth signed permutations: identity when the
/// negative count is even, otherwise negate the first entry. Lands in the
/// even-signed group with `des_D` equal to the input's `des_B`.
pub fn phi_smooth(w: &Word) -> Result<Word, BijectionError> {
    if !w.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    if w.len() < 2 {
        return Err(BijectionError::TooShort(w.len(), 2));
    }
    if !w.is_smooth().expect("len >= 2") {
        return Err(BijectionError::NotSmooth);
    }
    Ok(if w.negative_count() % 2 == 0 {
        w.clone()
    } else {
        let mut e = w.entries().to_vec();
        e[0] = -e[0];
        Word::new_unchecked(e)
    })
}

/// Inverse of [`phi_smooth`], branching on the sign of the product of the
/// first two entries.
pub fn phi_smooth_inv(w: &Word) -> Result<Word, BijectionError> {
    if !w.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    if w.len() < 2 {
        return Err(BijectionError::TooShort(w.len(), 2));
    }
    if w.negative_count() % 2 != 0 {
        return Err(BijectionError::OddNegativeCount);
    }
    Ok(if w.is_smooth().expect("len >= 2") {
        w.clone()
    } else {
        let mut e = w.entries().to_vec();
        e[0] = -e[0];
        Word::new_unchecked(e)
    })
}

/// The letter complement inside `[n]`: flips sign and reflects the absolute
/// value to `n - |x|`. An involution on letters with absolute value in
/// `1..n`.
fn complement(n: i32, x: i32) -> i32 {
    let a = n - x.abs();
    if x < 0 {
        a
    } else {
        -a
    }
}

/// Lemma 3.2's map on non-smooth signed permutations: strip the first
/// entry, reduce the rest, and complement every letter. Returns the first
/// entry's absolute value together with the resulting word one rank down.
/// Preserves `des_B` when the input ends positively and lowers it by one
/// when it ends negatively.
pub fn phi_nonsmooth(w: &Word) -> Result<(i32, Word), BijectionError> {
    if !w.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    if w.len() < 2 {
        return Err(BijectionError::TooShort(w.len(), 2));
    }
    if w.is_smooth().expect("len >= 2") {
        return Err(BijectionError::Smooth);
    }
    let n = w.len() as i32;
    let u = w.entries()[0].abs();
    let tail = Word::new_unchecked(w.entries()[1..].to_vec()).red_signed();
    let v = Word::new_unchecked(tail.entries().iter().map(|&x| complement(n, x)).collect());
    Ok((u, v))
}

/// Inverse of [`phi_nonsmooth`]: undo the complement, re-insert the gap at
/// `u`, and prepend `u` with the sign forced by non-smoothness.
pub fn phi_nonsmooth_inv(u: i32, v: &Word) -> Result<Word, BijectionError> {
    if !v.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    if v.is_empty() {
        return Err(BijectionError::TooShort(1, 2));
    }
    let n = v.len() as i32 + 1;
    if u < 1 || u > n {
        return Err(BijectionError::ParamRange(format!(
            "first-entry value must satisfy 1 <= u <= {n}, got {u}"
        )));
    }
    let tail: Vec<i32> = v
        .entries()
        .iter()
        .map(|&x| complement(n, x))
        .map(|x| if x.abs() < u { x } else { x + x.signum() })
        .collect();
    let first = if tail[0] > 0 { -u } else { u };
    let mut e = Vec::with_capacity(n as usize);
    e.push(first);
    e.extend(tail);
    let w = Word::new(e).map_err(|_| BijectionError::NotSignedPerm)?;
    if !w.is_signed_perm() {
        return Err(BijectionError::NotSignedPerm);
    }
    Ok(w)
}

/// Entrywise negation, an involution sending words ending at `i` to words
/// ending at `-i` with complementary type-B descent count.
pub fn negation_map(w: &Word) -> Word {
    w.negate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: &[i32]) -> Word {
        Word::new(e.to_vec()).unwrap()
    }

    fn gs(e: &[i32]) -> GroundSet {
        GroundSet::new(e.to_vec()).unwrap()
    }

    #[test]
    fn lemma21_examples() {
        let x = gs(&[1, 2, 3, 5, 8, -7, -6, -4]);
        let input = w(&[-4, 2, 1, -7, -6, 5, 8, 3]);
        let out = phi_lemma21(&x, &input).unwrap();
        assert_eq!(out, w(&[8, 2, 1, 6, 7, 4, 5, 3]));
        assert_eq!(out.des(), input.des_b());
        assert_eq!(phi_lemma21_inv(&x, &out).unwrap(), input);

        let x = gs(&[1, 2, 3]);
        assert_eq!(phi_lemma21(&x, &w(&[2, 1, 3])).unwrap(), w(&[2, 1, 3]));

        let x = gs(&[1, -2]);
        assert_eq!(phi_lemma21(&x, &w(&[-2, 1])).unwrap(), w(&[2, 1]));
    }

    #[test]
    fn lemma21_rejects_bad_sets() {
        let x = gs(&[-1, 2]);
        assert!(phi_lemma21(&x, &w(&[2, -1])).is_err());
        let x = gs(&[1, 3]);
        assert!(matches!(
            phi_lemma21(&x, &w(&[3, 1])),
            Err(BijectionError::InvalidGroundSet(_))
        ));
    }

    #[test]
    fn lemma22_examples() {
        let x = gs(&[-1, 2, 3]);
        let input = w(&[-1, 3, 2]);
        let out = phi_lemma22(&x, &input).unwrap();
        assert_eq!(out, w(&[-2, 3, 1]));
        assert_eq!(out.des_b(), input.des_b());
        assert_eq!(phi_lemma22_inv(&x, &out).unwrap(), input);

        assert_eq!(phi_lemma22(&x, &w(&[3, -1, 2])).unwrap(), w(&[3, -2, 1]));

        // j = 0: identity relabeling below i.
        let x = gs(&[1, 2, 3]);
        assert_eq!(phi_lemma22(&x, &w(&[3, 1, 2])).unwrap(), w(&[3, 1, 2]));
    }

    #[test]
    fn block_decomposition() {
        let blocks = decompose_blocks(&w(&[-3, 4, -1, 5, 9, -7, 2, -8, 6]));
        assert_eq!(
            blocks,
            vec![w(&[-3, 4, -1]), w(&[5, 9, -7, 2]), w(&[-8, 6])]
        );
        assert_eq!(
            decompose_blocks(&w(&[1, 2, 3])),
            vec![w(&[1]), w(&[2]), w(&[3])]
        );
        assert_eq!(decompose_blocks(&w(&[3, 2, 1])), vec![w(&[3, 2, 1])]);
    }

    #[test]
    fn partition_roundtrip() {
        let input = w(&[-3, 4, -1, 5, 9, -7, 2, -8, 6]);
        let p = phi_partition(&input).unwrap();
        let des_sum: usize = p
            .blocks()
            .iter()
            .map(|b| Word::new_unchecked(b.clone()).des_b())
            .sum();
        assert_eq!(des_sum, 4);
        assert_eq!(psi_partition(&p), input);
    }

    #[test]
    fn smooth_examples() {
        assert_eq!(phi_smooth(&w(&[-1, -2, 3])).unwrap(), w(&[-1, -2, 3]));
        assert_eq!(phi_smooth(&w(&[-1, -2, -3, 4])).unwrap(), w(&[1, -2, -3, 4]));
        assert_eq!(phi_smooth(&w(&[1, 2])).unwrap(), w(&[1, 2]));
        assert!(matches!(
            phi_smooth(&w(&[1, -2, 3])),
            Err(BijectionError::NotSmooth)
        ));
        let input = w(&[-1, -2, -3, 4]);
        assert_eq!(phi_smooth_inv(&phi_smooth(&input).unwrap()).unwrap(), input);
    }

    #[test]
    fn nonsmooth_examples() {
        let input = w(&[4, -5, -3, 1, 8, -6, 7, 2]);
        let (u, v) = phi_nonsmooth(&input).unwrap();
        assert_eq!(u, 4);
        assert_eq!(v, w(&[4, 5, -7, -1, 3, -2, -6]));
        assert_eq!(v.des_b(), input.des_b());
        assert_eq!(phi_nonsmooth_inv(u, &v).unwrap(), input);

        let (u, v) = phi_nonsmooth(&w(&[-2, 1])).unwrap();
        assert_eq!((u, v.clone()), (2, w(&[-1])));
        assert_eq!(phi_nonsmooth_inv(u, &v).unwrap(), w(&[-2, 1]));

        assert!(matches!(
            phi_nonsmooth(&w(&[1, 2])),
            Err(BijectionError::Smooth)
        ));
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negation_map(&w(&[2, -1, 3])), w(&[-2, 1, -3]));
        assert_eq!(negation_map(&w(&[1])), w(&[-1]));
        let v = w(&[2, -1, 3]);
        assert_eq!(negation_map(&negation_map(&v)), v);
    }
}
