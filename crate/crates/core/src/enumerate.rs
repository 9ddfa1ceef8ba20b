//! Brute-force enumeration streams: permutations, signed permutations, their
//! restricted and half subsets, ground sets, multiplicity vectors, and signed
//! set partitions.
//!
//! Streams are constant-memory where it matters (the full type-B family at
//! n = 9 has ~1.86e8 members). Signed permutations are generated as
//! (permutation, sign-mask) pairs in lexicographic order of the pair, which
//! fixes a deterministic stream order for reproducible sharding. Type-D
//! streams filter type-B streams on negative-entry parity.

use crate::comb::factorial;
use crate::word::{GroundSet, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("element {0} is not in the ground set")]
    NotInSet(i32),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
}

/// The eight polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FamilyKind {
    A,
    B,
    D,
    #[serde(rename = "A_restricted")]
    ARestricted,
    #[serde(rename = "B_restricted")]
    BRestricted,
    #[serde(rename = "D_restricted")]
    DRestricted,
    #[serde(rename = "B_half")]
    BHalf,
    #[serde(rename = "D_half")]
    DHalf,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::A,
        FamilyKind::B,
        FamilyKind::D,
        FamilyKind::ARestricted,
        FamilyKind::BRestricted,
        FamilyKind::DRestricted,
        FamilyKind::BHalf,
        FamilyKind::DHalf,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::A => "A",
            FamilyKind::B => "B",
            FamilyKind::D => "D",
            FamilyKind::ARestricted => "A_restricted",
            FamilyKind::BRestricted => "B_restricted",
            FamilyKind::DRestricted => "D_restricted",
            FamilyKind::BHalf => "B_half",
            FamilyKind::DHalf => "D_half",
        }
    }

    pub fn is_restricted(&self) -> bool {
        matches!(
            self,
            FamilyKind::ARestricted | FamilyKind::BRestricted | FamilyKind::DRestricted
        )
    }

    pub fn is_half(&self) -> bool {
        matches!(self, FamilyKind::BHalf | FamilyKind::DHalf)
    }

    /// Families whose words carry signs.
    pub fn is_signed(&self) -> bool {
        !matches!(self, FamilyKind::A | FamilyKind::ARestricted)
    }

    /// Families filtered to an even number of negative entries.
    pub fn is_type_d(&self) -> bool {
        matches!(
            self,
            FamilyKind::D | FamilyKind::DRestricted | FamilyKind::DHalf
        )
    }
}

impl FromStr for FamilyKind {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| EnumError::InvalidSpec(format!("unknown family kind '{s}'")))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign of the last entry, for half families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl FromStr for Sign {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(EnumError::InvalidSpec(format!("unknown sign '{s}'"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A validated family descriptor: kind, rank, and the kind-specific
/// parameters (`last` for restricted kinds, `sign` for half kinds).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    kind: FamilyKind,
    n: u32,
    last: Option<i32>,
    sign: Option<Sign>,
}

impl FamilySpec {
    pub fn new(
        kind: FamilyKind,
        n: u32,
        last: Option<i32>,
        sign: Option<Sign>,
    ) -> Result<Self, EnumError> {
        if kind.is_restricted() {
            let last = last.ok_or_else(|| {
                EnumError::InvalidSpec(format!("{kind} requires a last-entry parameter"))
            })?;
            if last == 0 || last.unsigned_abs() > n {
                return Err(EnumError::InvalidSpec(format!(
                    "last entry {last} out of range for n = {n}"
                )));
            }
            if kind == FamilyKind::ARestricted && last < 0 {
                return Err(EnumError::InvalidSpec(
                    "A_restricted requires a positive last entry".into(),
                ));
            }
            if n == 0 {
                return Err(EnumError::InvalidSpec("restricted kinds require n >= 1".into()));
            }
        } else if last.is_some() {
            return Err(EnumError::InvalidSpec(format!(
                "{kind} takes no last-entry parameter"
            )));
        }
        if kind.is_half() {
            if sign.is_none() {
                return Err(EnumError::InvalidSpec(format!(
                    "{kind} requires a sign parameter"
                )));
            }
            if n == 0 {
                return Err(EnumError::InvalidSpec("half kinds require n >= 1".into()));
            }
        } else if sign.is_some() {
            return Err(EnumError::InvalidSpec(format!("{kind} takes no sign parameter")));
        }
        Ok(Self { kind, n, last, sign })
    }

    pub fn plain(kind: FamilyKind, n: u32) -> Result<Self, EnumError> {
        Self::new(kind, n, None, None)
    }

    pub fn restricted(kind: FamilyKind, n: u32, last: i32) -> Result<Self, EnumError> {
        Self::new(kind, n, Some(last), None)
    }

    pub fn half(kind: FamilyKind, n: u32, sign: Sign) -> Result<Self, EnumError> {
        Self::new(kind, n, None, Some(sign))
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn last(&self) -> Option<i32> {
        self.last
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }
}

/// Lexicographic permutations of a base slice (which is sorted first).
struct LexPermutations {
    current: Vec<i32>,
    exhausted: bool,
    started: bool,
}

impl LexPermutations {
    fn new(mut base: Vec<i32>) -> Self {
        base.sort_unstable();
        Self {
            current: base,
            exhausted: false,
            started: false,
        }
    }

    fn advance(&mut self) -> bool {
        let v = &mut self.current;
        if v.len() < 2 {
            return false;
        }
        let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<i32>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        if self.advance() {
            Some(self.current.clone())
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// Signed words over `[n]`: for each permutation (lex order), every sign
/// mask `0..2^n`; mask bit `p` negates position `p`.
struct SignedWords {
    perms: LexPermutations,
    current: Option<Vec<i32>>,
    mask: u64,
    limit: u64,
}

impl SignedWords {
    fn new(n: u32) -> Self {
        let mut perms = LexPermutations::new((1..=n as i32).collect());
        let current = perms.next();
        Self {
            perms,
            current,
            mask: 0,
            limit: 1u64 << n,
        }
    }
}

impl Iterator for SignedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Self::Item> {
        let perm = self.current.as_ref()?;
        let word: Vec<i32> = perm
            .iter()
            .enumerate()
            .map(|(p, &e)| if self.mask >> p & 1 == 1 { -e } else { e })
            .collect();
        self.mask += 1;
        if self.mask == self.limit {
            self.mask = 0;
            self.current = self.perms.next();
        }
        Some(Word::new_unchecked(word))
    }
}

/// Yields every member of the family exactly once, in a deterministic order.
pub fn stream_family(spec: &FamilySpec) -> Box<dyn Iterator<Item = Word>> {
    stream_family_sharded(spec, None)
}

/// Sharded variant: yields only words whose first entry falls in the given
/// shard; shard results combine by polynomial addition. The empty word
/// belongs to shard 0.
pub fn stream_family_sharded(
    spec: &FamilySpec,
    shard: Option<(u32, u32)>,
) -> Box<dyn Iterator<Item = Word>> {
    let n = spec.n;
    let base: Box<dyn Iterator<Item = Word>> = if spec.kind.is_signed() {
        Box::new(SignedWords::new(n))
    } else {
        Box::new(LexPermutations::new((1..=n as i32).collect()).map(Word::new_unchecked))
    };
    let kind = spec.kind;
    let last = spec.last;
    let sign = spec.sign;
    let filtered = base.filter(move |w| {
        if kind.is_type_d() && w.negative_count() % 2 != 0 {
            return false;
        }
        if let Some(last) = last {
            if w.last() != Some(last) {
                return false;
            }
        }
        if let Some(sign) = sign {
            let positive = w.last().map(|e| e > 0).unwrap_or(false);
            if (sign == Sign::Plus) != positive {
                return false;
            }
        }
        true
    });
    match shard {
        None => Box::new(filtered),
        Some((index, count)) => Box::new(filtered.filter(move |w| {
            let slot = match w.entries().first() {
                None => 0,
                Some(&e) => (e.unsigned_abs() - 1) * 2 + u32::from(e < 0),
            };
            slot % count.max(1) == index
        })),
    }
}

/// All `(|X|-1)!` arrangements of `X \ {a}` followed by `a`.
pub fn perms_ending_with(
    x: &GroundSet,
    a: i32,
) -> Result<Box<dyn Iterator<Item = Word>>, EnumError> {
    if !x.contains(a) {
        return Err(EnumError::NotInSet(a));
    }
    let rest: Vec<i32> = x.elements().iter().copied().filter(|&e| e != a).collect();
    Ok(Box::new(LexPermutations::new(rest).map(move |mut prefix| {
        prefix.push(a);
        Word::new_unchecked(prefix)
    })))
}

/// The `2^(n-i)` ground sets with `{1,..,i}` forced positive and one free
/// sign choice for each `r > i`.
pub fn ground_sets_xi(n: u32, i: u32) -> Result<Vec<GroundSet>, EnumError> {
    if i < 1 || i > n {
        return Err(EnumError::ParamRange(format!("need 1 <= i <= n, got i={i}, n={n}")));
    }
    let free: Vec<i32> = (i as i32 + 1..=n as i32).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..1 << free.len() {
        let mut elems: Vec<i32> = (1..=i as i32).collect();
        for (p, &r) in free.iter().enumerate() {
            elems.push(if mask >> p & 1 == 1 { -r } else { r });
        }
        out.push(GroundSet::new_unchecked(elems));
    }
    Ok(out)
}

/// Ground sets containing `i`, with exactly one of `{r, -r}` for every other
/// `r` and exactly `j` negative choices below `i`. There are
/// `C(i-1, j) * 2^(n-i)` of them.
pub fn ground_sets_xij(n: u32, i: u32, j: u32) -> Result<Vec<GroundSet>, EnumError> {
    if i < 1 || i > n {
        return Err(EnumError::ParamRange(format!("need 1 <= i <= n, got i={i}, n={n}")));
    }
    if j >= i {
        return Err(EnumError::ParamRange(format!("need 0 <= j < i, got j={j}, i={i}")));
    }
    let below: Vec<i32> = (1..i as i32).collect();
    let above: Vec<i32> = (i as i32 + 1..=n as i32).collect();
    let mut out = Vec::new();
    for neg_subset in combinations(&below, j as usize) {
        for mask in 0u64..1 << above.len() {
            let mut elems = vec![i as i32];
            for &r in &below {
                elems.push(if neg_subset.contains(&r) { -r } else { r });
            }
            for (p, &r) in above.iter().enumerate() {
                elems.push(if mask >> p & 1 == 1 { -r } else { r });
            }
            out.push(GroundSet::new_unchecked(elems));
        }
    }
    Ok(out)
}

/// All `2^|T|` sign assignments of a set of positive integers.
pub fn signed_subsets(t: &[i32]) -> Vec<GroundSet> {
    let mut out = Vec::with_capacity(1 << t.len());
    for mask in 0u64..1 << t.len() {
        let elems: Vec<i32> = t
            .iter()
            .enumerate()
            .map(|(p, &e)| if mask >> p & 1 == 1 { -e } else { e })
            .collect();
        out.push(GroundSet::new_unchecked(elems));
    }
    out
}

fn combinations(items: &[i32], k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let first = items[0];
    for mut with_first in combinations(&items[1..], k - 1) {
        with_first.insert(0, first);
        out.push(with_first);
    }
    out.extend(combinations(&items[1..], k));
    out
}

/// A solution of `m_1 + 2 m_2 + ... + n m_n = n`: the type of a set
/// partition of `[n]` by block-size multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    m: Vec<u32>,
}

impl MultiplicityVector {
    pub fn new(n: u32, m: Vec<u32>) -> Result<Self, EnumError> {
        if m.len() != n as usize {
            return Err(EnumError::ParamRange(format!(
                "multiplicity vector has length {}, expected {n}",
                m.len()
            )));
        }
        let weighted: u32 = m.iter().enumerate().map(|(i, &c)| (i as u32 + 1) * c).sum();
        if weighted != n {
            return Err(EnumError::ParamRange(format!(
                "multiplicities sum to {weighted}, expected {n}"
            )));
        }
        Ok(Self { m })
    }

    /// `m[i]` is the multiplicity of part size `i + 1`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.m
    }
}

/// Every solution of `sum i*m_i = n`, exactly once; there are `p(n)` of them.
pub fn multiplicity_vectors(n: u32) -> Vec<MultiplicityVector> {
    let mut out = Vec::new();
    let mut m = vec![0u32; n as usize];
    fn rec(remaining: u32, size: u32, m: &mut Vec<u32>, out: &mut Vec<MultiplicityVector>) {
        if remaining == 0 {
            out.push(MultiplicityVector { m: m.clone() });
            return;
        }
        if size == 0 {
            return;
        }
        for count in 0..=remaining / size {
            m[size as usize - 1] = count;
            rec(remaining - size * count, size - 1, m, out);
            m[size as usize - 1] = 0;
        }
    }
    rec(n, n, &mut m, &mut out);
    out
}

/// `n! / (prod_j j!^{m_j} m_j!)`, the number of set partitions of `[n]` of
/// the given type. The division is always exact; a remainder means a bug.
pub fn count_partitions_of_type(n: u32, m: &MultiplicityVector) -> BigInt {
    let mut denom = BigInt::one();
    for (idx, &mult) in m.multiplicities().iter().enumerate() {
        let j = idx as u32 + 1;
        denom *= factorial(j).pow(mult) * factorial(mult);
    }
    let num = factorial(n);
    debug_assert!((&num % &denom).is_zero());
    num / denom
}

/// All set partitions of `[n]` as sorted blocks of positive integers.
pub fn set_partitions(n: u32) -> Vec<Vec<Vec<i32>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    fn rec(next: i32, n: i32, blocks: &mut Vec<Vec<i32>>, out: &mut Vec<Vec<Vec<i32>>>) {
        if next > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(next);
            rec(next + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![next]);
        rec(next + 1, n, blocks, out);
        blocks.pop();
    }
    rec(1, n as i32, &mut blocks, &mut out);
    out
}

/// A member of the signed-set-partition family: blocks are sign-decorated
/// ordered sequences, each ending at its entry of smallest absolute value.
/// Blocks are kept sorted by that minimal absolute value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedSetPartition {
    blocks: Vec<Vec<i32>>,
}

impl SignedSetPartition {
    pub fn new(mut blocks: Vec<Vec<i32>>) -> Result<Self, EnumError> {
        let mut abs_seen: Vec<i32> = Vec::new();
        for block in &blocks {
            let Some(&last) = block.last() else {
                return Err(EnumError::InvalidSpec("empty block".into()));
            };
            for &e in block {
                if e == 0 {
                    return Err(EnumError::InvalidSpec("zero entry in block".into()));
                }
                if e != last && e.abs() <= last.abs() {
                    return Err(EnumError::InvalidSpec(format!(
                        "block does not end with its minimal absolute value: {block:?}"
                    )));
                }
                abs_seen.push(e.abs());
            }
        }
        abs_seen.sort_unstable();
        let n = abs_seen.len() as i32;
        if abs_seen.iter().enumerate().any(|(i, &a)| a != i as i32 + 1) {
            return Err(EnumError::InvalidSpec(format!(
                "absolute values do not partition [{n}]"
            )));
        }
        blocks.sort_by_key(|b| b.last().map(|e| e.abs()));
        Ok(Self { blocks })
    }

    pub(crate) fn new_unchecked(mut blocks: Vec<Vec<i32>>) -> Self {
        blocks.sort_by_key(|b| b.last().map(|e| e.abs()));
        Self { blocks }
    }

    /// Blocks sorted by the absolute value of their last entry.
    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    /// Sum of the type-B descent statistics of the blocks.
    pub fn des_b_sum(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| Word::new_unchecked(b.clone()).des_b())
            .sum()
    }
}

impl fmt::Debug for SignedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("({})", crate::word::comma_join(b)))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every signed set partition of `[n]`; there are `2^n n!` of them.
pub fn signed_set_partitions(n: u32) -> Vec<SignedSetPartition> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        // Per block: the minimal element goes last, the rest permute freely,
        // and every entry takes either sign.
        let block_variants: Vec<Vec<Vec<i32>>> = partition
            .iter()
            .map(|block| {
                let min = *block.iter().min().unwrap();
                let rest: Vec<i32> = block.iter().copied().filter(|&e| e != min).collect();
                let mut variants = Vec::new();
                for mut perm in LexPermutations::new(rest) {
                    perm.push(min);
                    for mask in 0u64..1 << perm.len() {
                        let signed: Vec<i32> = perm
                            .iter()
                            .enumerate()
                            .map(|(p, &e)| if mask >> p & 1 == 1 { -e } else { e })
                            .collect();
                        variants.push(signed);
                    }
                }
                variants
            })
            .collect();
        let mut acc: Vec<Vec<Vec<i32>>> = vec![Vec::new()];
        for variants in &block_variants {
            let mut next = Vec::with_capacity(acc.len() * variants.len());
            for partial in &acc {
                for v in variants {
                    let mut grown = partial.clone();
                    grown.push(v.clone());
                    next.push(grown);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(SignedSetPartition::new_unchecked));
    }
    out
}
