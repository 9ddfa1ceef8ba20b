//! Every polynomial family two ways: a brute-force enumeration oracle over
//! the streams in [`crate::enumerate`], and fast identity/recurrence paths.
//!
//! All fast paths hang off a [`Context`] that memoizes the heavily reused
//! low-index results (type-A triangle, type-B pipeline, half families,
//! restricted rows) behind a mutex, so a context can be shared across
//! worker threads.

use crate::comb::{binomial, factorial, pow2};
use crate::enumerate::{
    self, count_partitions_of_type, multiplicity_vectors, perms_ending_with, stream_family,
    EnumError, FamilyKind, FamilySpec, Sign,
};
use crate::poly::{IntPolynomial, PolyError, Subst};
use crate::word::GroundSet;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EulerianError {
    #[error("enumeration cap exceeded: {kind} at n = {n} (cap {cap})")]
    CapExceeded { kind: FamilyKind, n: u32, cap: u32 },
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("element {0} does not have minimal absolute value in the set")]
    NotMinimalAbs(i32),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Polynomial(#[from] PolyError),
}

/// Upper bounds on brute-force enumeration. `2^9 * 9!` type-B words take
/// minutes single-threaded; anything larger is a deliberate opt-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Cap for the unsigned families (A, A_restricted).
    pub type_a: u32,
    /// Cap for the signed families (B, D, and their variants).
    pub type_b: u32,
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self { type_a: 11, type_b: 9 }
    }
}

#[derive(Default)]
struct Memo {
    a_fast: HashMap<u32, IntPolynomial>,
    b_triangle: HashMap<u32, IntPolynomial>,
    b_from_a: HashMap<u32, IntPolynomial>,
    bhalf_plus: HashMap<u32, IntPolynomial>,
    /// Enumerated restricted type-A rows: `arest_rows[n][i-1] = A_{n,i}`.
    arest_rows: HashMap<u32, Vec<IntPolynomial>>,
    /// Recurrence-computed restricted type-A rows, same layout.
    arest_rec_rows: HashMap<u32, Vec<IntPolynomial>>,
    /// Last-entry transfer rows for type B: `brest_rows[n][j]` for signed `j`.
    brest_rows: HashMap<u32, HashMap<i32, IntPolynomial>>,
}

/// Shared computation context: enumeration caps plus memo tables.
pub struct Context {
    caps: EnumCaps,
    memo: Mutex<Memo>,
}

impl Default for Context {
    fn default() -> Self {
        Self::new()
    }
}

impl Context {
    pub fn new() -> Self {
        Self::with_caps(EnumCaps::default())
    }

    pub fn with_caps(caps: EnumCaps) -> Self {
        Self {
            caps,
            memo: Mutex::new(Memo::default()),
        }
    }

    pub fn caps(&self) -> EnumCaps {
        self.caps
    }

    /// The brute-force oracle: sums `t^stat` over the full stream, where the
    /// statistic is `des` for A kinds, `des_B` for B kinds, and `des_D` for
    /// D kinds.
    pub fn poly_by_enumeration(&self, spec: &FamilySpec) -> Result<IntPolynomial, EulerianError> {
        let cap = if spec.kind().is_signed() {
            self.caps.type_b
        } else {
            self.caps.type_a
        };
        if spec.n() > cap {
            return Err(EulerianError::CapExceeded {
                kind: spec.kind(),
                n: spec.n(),
                cap,
            });
        }
        let kind = spec.kind();
        let mut counts = vec![0u64; spec.n() as usize + 2];
        for w in stream_family(spec) {
            let stat = match kind {
                FamilyKind::A | FamilyKind::ARestricted => w.des(),
                FamilyKind::B | FamilyKind::BRestricted | FamilyKind::BHalf => w.des_b(),
                FamilyKind::D | FamilyKind::DRestricted | FamilyKind::DHalf => w.des_d(),
            };
            counts[stat] += 1;
        }
        Ok(IntPolynomial::from_coeffs(
            counts.into_iter().map(BigInt::from).collect(),
        ))
    }

    /// The closed-form counterpart of [`Context::poly_by_enumeration`]:
    /// routes each family to its identity or recurrence path. Not subject
    /// to the enumeration caps.
    pub fn poly_by_identity(&self, spec: &FamilySpec) -> Result<IntPolynomial, EulerianError> {
        let n = spec.n();
        match spec.kind() {
            FamilyKind::A => Ok(self.a_fast(n)),
            FamilyKind::B => Ok(self.b_from_a_or_one(n)),
            FamilyKind::D => Ok(self.d_poly(n)),
            FamilyKind::ARestricted => {
                let i = spec.last().expect("validated") as u32;
                self.arest_rec(n, i)
            }
            FamilyKind::BRestricted => self.brest_dp(n, spec.last().expect("validated")),
            FamilyKind::DRestricted => {
                let last = spec.last().expect("validated");
                if last > 0 {
                    self.drest_table(n, last as u32)
                } else if n == 1 {
                    // The only length-1 word ending negatively has odd
                    // negative count, so the family is empty.
                    Ok(IntPolynomial::zero())
                } else {
                    self.drest_negative(n, last.unsigned_abs())
                }
            }
            FamilyKind::BHalf => self.bhalf_hyatt(n, spec.sign().expect("validated")),
            FamilyKind::DHalf => self.dhalf_poly(n, spec.sign().expect("validated")),
        }
    }

    /// Type-A Eulerian polynomial via the classical triangle recurrence
    /// `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`, with `A_0 = 1`.
    pub fn a_fast(&self, n: u32) -> IntPolynomial {
        let mut memo = self.memo.lock().unwrap();
        if let Some(p) = memo.a_fast.get(&n) {
            return p.clone();
        }
        let mut m = (0..n).rev().find_map(|k| memo.a_fast.get(&k).map(|_| k));
        if memo.a_fast.is_empty() {
            memo.a_fast.insert(0, IntPolynomial::one());
            m = Some(0);
        }
        let mut m = m.unwrap_or(0);
        while m < n {
            let prev = memo.a_fast[&m].clone();
            m += 1;
            let mut coeffs = vec![BigInt::from(0); m as usize];
            for k in 0..m as usize {
                let mut c = prev.coeff(k) * (k as u32 + 1);
                if k >= 1 {
                    c += prev.coeff(k - 1) * (m - k as u32);
                }
                coeffs[k] = c;
            }
            memo.a_fast.insert(m, IntPolynomial::from_coeffs(coeffs));
        }
        memo.a_fast[&n].clone()
    }

    /// Type-B Eulerian polynomial via the classical triangle recurrence
    /// `B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)`, with `B_0 = 1`.
    /// Used as an independent cross-route against the type-A pipeline.
    pub fn b_triangle(&self, n: u32) -> IntPolynomial {
        let mut memo = self.memo.lock().unwrap();
        if memo.b_triangle.is_empty() {
            memo.b_triangle.insert(0, IntPolynomial::one());
        }
        let mut m = (0..=n).rev().find(|k| memo.b_triangle.contains_key(k)).unwrap_or(0);
        while m < n {
            let prev = memo.b_triangle[&m].clone();
            m += 1;
            let mut coeffs = vec![BigInt::from(0); m as usize + 1];
            for k in 0..=m as usize {
                let mut c = prev.coeff(k) * (2 * k as u32 + 1);
                if k >= 1 {
                    c += prev.coeff(k - 1) * (2 * (m - k as u32) + 1);
                }
                coeffs[k] = c;
            }
            memo.b_triangle.insert(m, IntPolynomial::from_coeffs(coeffs));
        }
        memo.b_triangle[&n].clone()
    }

    /// `B_n` recovered from `A_n` via
    /// `2 B_n(t^2) = (1+t)^{n+1} A_n(t) + (1-t)^{n+1} A_n(-t)`.
    pub fn b_from_a(&self, n: u32) -> IntPolynomial {
        if let Some(p) = self.memo.lock().unwrap().b_from_a.get(&n) {
            return p.clone();
        }
        let a = self.a_fast(n);
        let plus = IntPolynomial::from_i64s(&[1, 1]).pow(n + 1).mul(&a);
        let minus = IntPolynomial::from_i64s(&[1, -1])
            .pow(n + 1)
            .mul(&a.substitute(Subst::NegT));
        let rhs = plus.add(&minus);
        // Odd coefficients must vanish and evens be divisible by 2; a failure
        // here is an implementation bug, not a data condition.
        let b = rhs
            .even_part()
            .expect("odd coefficient in type-B pipeline")
            .exact_div_int(&BigInt::from(2))
            .expect("inexact division in type-B pipeline");
        self.memo.lock().unwrap().b_from_a.insert(n, b.clone());
        b
    }

    /// `D_n = B_n - n 2^(n-1) t A_(n-1)`.
    pub fn d_from_ba(&self, n: u32) -> Result<IntPolynomial, EulerianError> {
        if n < 2 {
            return Err(EulerianError::ParamRange(format!(
                "type-D decomposition requires n >= 2, got {n}"
            )));
        }
        let correction = self
            .a_fast(n - 1)
            .shift(1)
            .scale(&(pow2(n - 1) * BigInt::from(n)));
        Ok(self.b_from_a(n).sub(&correction))
    }

    /// `D_n` for any `n`, routing small ranks to their trivial values.
    pub fn d_poly(&self, n: u32) -> IntPolynomial {
        match n {
            0 | 1 => IntPolynomial::one(),
            _ => self.d_from_ba(n).expect("n >= 2"),
        }
    }

    /// `B_n` as a multinomial sum over partition types:
    /// `sum over (m_1..m_n) with sum i*m_i = n` of
    /// `|Pi_n(m)| (t+1)^(m_1) prod_i (2^(i+1) t A_i)^(m_(i+1))`.
    pub fn b_zhang(&self, n: u32) -> Result<IntPolynomial, EulerianError> {
        if n < 1 {
            return Err(EulerianError::ParamRange("b_zhang requires n >= 1".into()));
        }
        let mut total = IntPolynomial::zero();
        for mv in multiplicity_vectors(n) {
            let count = count_partitions_of_type(n, &mv);
            let mut term = IntPolynomial::from_coeffs(vec![count]);
            let m = mv.multiplicities();
            term = term.mul(&IntPolynomial::from_i64s(&[1, 1]).pow(m[0]));
            for i in 1..n {
                let mult = m[i as usize];
                if mult == 0 {
                    continue;
                }
                let factor = self.a_fast(i).shift(1).scale(&pow2(i + 1));
                term = term.mul(&factor.pow(mult));
            }
            total = total.add(&term);
        }
        Ok(total)
    }

    /// Restricted type-A polynomial `A_{n,i}` by enumeration, one full sweep
    /// of the symmetric group per `n` (bucketed by last entry and cached).
    pub fn arest_enum(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        if i < 1 || i > n {
            return Err(EulerianError::ParamRange(format!(
                "need 1 <= i <= n, got i={i}, n={n}"
            )));
        }
        if n > self.caps.type_a {
            return Err(EulerianError::CapExceeded {
                kind: FamilyKind::ARestricted,
                n,
                cap: self.caps.type_a,
            });
        }
        if let Some(row) = self.memo.lock().unwrap().arest_rows.get(&n) {
            return Ok(row[i as usize - 1].clone());
        }
        let mut buckets = vec![vec![0u64; n as usize + 1]; n as usize];
        let spec = FamilySpec::plain(FamilyKind::A, n)?;
        for w in stream_family(&spec) {
            let last = w.last().expect("n >= 1") as usize;
            buckets[last - 1][w.des()] += 1;
        }
        let row: Vec<IntPolynomial> = buckets
            .into_iter()
            .map(|c| IntPolynomial::from_coeffs(c.into_iter().map(BigInt::from).collect()))
            .collect();
        let result = row[i as usize - 1].clone();
        self.memo.lock().unwrap().arest_rows.insert(n, row);
        Ok(result)
    }

    /// Restricted type-A polynomial `A_{n,i}` by the last-entry removal
    /// recurrence `A_{n,i} = sum_(m=1)^(n-1) t^[m >= i] A_(n-1,m)`: deleting
    /// the final entry and reducing leaves a shorter restricted permutation,
    /// with a trailing descent exactly when the reduced next-to-last entry
    /// is at least `i`. No enumeration, so no cap.
    pub fn arest_rec(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        if i < 1 || i > n {
            return Err(EulerianError::ParamRange(format!(
                "need 1 <= i <= n, got i={i}, n={n}"
            )));
        }
        let mut memo = self.memo.lock().unwrap();
        if memo.arest_rec_rows.is_empty() {
            memo.arest_rec_rows.insert(1, vec![IntPolynomial::one()]);
        }
        let mut m = (1..=n)
            .rev()
            .find(|k| memo.arest_rec_rows.contains_key(k))
            .unwrap_or(1);
        while m < n {
            let prev = memo.arest_rec_rows[&m].clone();
            m += 1;
            let mut row = Vec::with_capacity(m as usize);
            for i in 1..=m {
                let mut acc = IntPolynomial::zero();
                for (idx, p) in prev.iter().enumerate() {
                    let reduced_last = idx as u32 + 1;
                    if reduced_last >= i {
                        acc = acc.add(&p.shift(1));
                    } else {
                        acc = acc.add(p);
                    }
                }
                row.push(acc);
            }
            memo.arest_rec_rows.insert(m, row);
        }
        Ok(memo.arest_rec_rows[&n][i as usize - 1].clone())
    }

    /// `B_{n,i} = 2^(n-i) sum_(j=0)^(i-1) C(i-1,j) A_{n,i-j}` for positive `i`.
    pub fn brest_from_arest(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        if i < 1 || i > n {
            return Err(EulerianError::ParamRange(format!(
                "need 1 <= i <= n, got i={i}, n={n}"
            )));
        }
        let mut sum = IntPolynomial::zero();
        for j in 0..i {
            sum = sum.add(&self.arest_enum(n, i - j)?.scale(&binomial(i - 1, j)));
        }
        Ok(sum.scale(&pow2(n - i)))
    }

    /// `B_{n,-i} = t^n B_{n,i}(1/t)` for positive `i`.
    pub fn brest_negative(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        Ok(self.brest_from_arest(n, i)?.reverse(n as usize)?)
    }

    /// `B_{n,j}` for any signed `j` via the last-entry transfer recurrence:
    /// removing the last entry and reducing the prefix maps `B_{n,j}` onto
    /// the full rank-(n-1) row, with a `t` factor exactly when the original
    /// next-to-last entry exceeds `j`. Independent of the restricted type-A
    /// route, so the two can cross-check each other.
    pub fn brest_dp(&self, n: u32, j: i32) -> Result<IntPolynomial, EulerianError> {
        if j == 0 || j.unsigned_abs() > n || n < 1 {
            return Err(EulerianError::ParamRange(format!(
                "need 1 <= |j| <= n, got j={j}, n={n}"
            )));
        }
        let mut memo = self.memo.lock().unwrap();
        if memo.brest_rows.is_empty() {
            let base = HashMap::from([
                (1, IntPolynomial::one()),
                (-1, IntPolynomial::monomial(1)),
            ]);
            memo.brest_rows.insert(1, base);
        }
        let mut m = (1..=n).rev().find(|k| memo.brest_rows.contains_key(k)).unwrap_or(1);
        while m < n {
            let prev = memo.brest_rows[&m].clone();
            m += 1;
            let mut row = HashMap::new();
            for abs_j in 1..=m as i32 {
                for target in [abs_j, -abs_j] {
                    let mut acc = IntPolynomial::zero();
                    for (&last, poly) in &prev {
                        // The reduced last entry `last` stands for the
                        // original value with the gap at |target| restored.
                        let orig = if last.abs() < target.abs() {
                            last
                        } else {
                            last + last.signum()
                        };
                        let contribution = if orig > target { poly.shift(1) } else { poly.clone() };
                        acc = acc.add(&contribution);
                    }
                    row.insert(target, acc);
                }
            }
            memo.brest_rows.insert(m, row);
        }
        Ok(memo.brest_rows[&n][&j].clone())
    }

    /// Half type-B polynomials via the binomial expansions
    /// `B_n^+ = sum_(j=0)^(n-1) C(n,j) B_j (t-1)^(n-j-1)` and
    /// `B_n^- = t^n B_n^+(1/t)`.
    pub fn bhalf_hyatt(&self, n: u32, sign: Sign) -> Result<IntPolynomial, EulerianError> {
        if n < 1 {
            return Err(EulerianError::ParamRange("half families require n >= 1".into()));
        }
        let cached = self.memo.lock().unwrap().bhalf_plus.get(&n).cloned();
        let plus = match cached {
            Some(p) => p,
            None => {
                let t_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
                let mut sum = IntPolynomial::zero();
                for j in 0..n {
                    let term = self
                        .b_from_a_or_one(j)
                        .mul(&t_minus_1.pow(n - j - 1))
                        .scale(&binomial(n, j));
                    sum = sum.add(&term);
                }
                self.memo.lock().unwrap().bhalf_plus.insert(n, sum.clone());
                sum
            }
        };
        match sign {
            Sign::Plus => Ok(plus),
            Sign::Minus => Ok(plus.reverse(n as usize)?),
        }
    }

    /// `B_n` with the `B_0 = 1` base handled.
    pub fn b_from_a_or_one(&self, n: u32) -> IntPolynomial {
        if n == 0 {
            IntPolynomial::one()
        } else {
            self.b_from_a(n)
        }
    }

    /// `D_n^+ = B_n^+ - n B_(n-1)^-` and `D_n^- = B_n^- - n t B_(n-1)^+`.
    pub fn dhalf_from_bhalf(&self, n: u32, sign: Sign) -> Result<IntPolynomial, EulerianError> {
        if n < 2 {
            return Err(EulerianError::ParamRange(format!(
                "half type-D decomposition requires n >= 2, got {n}"
            )));
        }
        match sign {
            Sign::Plus => {
                let correction = self.bhalf_hyatt(n - 1, Sign::Minus)?.scale_i64(n as i64);
                Ok(self.bhalf_hyatt(n, Sign::Plus)?.sub(&correction))
            }
            Sign::Minus => {
                let correction = self
                    .bhalf_hyatt(n - 1, Sign::Plus)?
                    .shift(1)
                    .scale_i64(n as i64);
                Ok(self.bhalf_hyatt(n, Sign::Minus)?.sub(&correction))
            }
        }
    }

    /// `D_n^(+/-)` for any `n >= 1`, routing rank 1 to its trivial values
    /// (the only member of the rank-1 group ends positively).
    pub fn dhalf_poly(&self, n: u32, sign: Sign) -> Result<IntPolynomial, EulerianError> {
        if n == 1 {
            return Ok(match sign {
                Sign::Plus => IntPolynomial::one(),
                Sign::Minus => IntPolynomial::zero(),
            });
        }
        self.dhalf_from_bhalf(n, sign)
    }

    /// `A_n` recovered from the half type-B pair:
    /// `2^n t A_n = B_n^- + t B_n^+`.
    pub fn a_from_bhalf(&self, n: u32) -> Result<IntPolynomial, EulerianError> {
        if n < 1 {
            return Err(EulerianError::ParamRange("a_from_bhalf requires n >= 1".into()));
        }
        let sum = self
            .bhalf_hyatt(n, Sign::Minus)?
            .add(&self.bhalf_hyatt(n, Sign::Plus)?.shift(1));
        // The factor t is forced; then divide by 2^n exactly.
        if !sum.is_zero() && sum.coeff(0) != BigInt::from(0) {
            return Err(EulerianError::Polynomial(PolyError::InexactDivision(0)));
        }
        let stripped = IntPolynomial::from_coeffs(sum.coeffs().iter().skip(1).cloned().collect());
        Ok(stripped.exact_div_int(&pow2(n))?)
    }

    /// `A_n` from the parity-split binomial sum over type-B polynomials,
    /// divided by `2^(n-1)`.
    pub fn a_parity_formula(&self, n: u32) -> Result<IntPolynomial, EulerianError> {
        if n < 1 {
            return Err(EulerianError::ParamRange("a_parity_formula requires n >= 1".into()));
        }
        let t_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
        let mut sum = IntPolynomial::zero();
        if n % 2 == 0 {
            for r in 0..=(n - 2) / 2 {
                let term = self
                    .b_from_a_or_one(2 * r + 1)
                    .mul(&t_minus_1.pow(n - 2 * r - 2))
                    .scale(&binomial(n, 2 * r + 1));
                sum = sum.add(&term);
            }
        } else {
            for r in 0..=(n - 1) / 2 {
                let term = self
                    .b_from_a_or_one(2 * r)
                    .mul(&t_minus_1.pow(n - 2 * r - 1))
                    .scale(&binomial(n, 2 * r));
                sum = sum.add(&term);
            }
        }
        Ok(sum.exact_div_int(&pow2(n - 1))?)
    }

    /// Generating function of permutations of `X` ending with its entry of
    /// minimal absolute value: `1` or `t` for singletons depending on sign,
    /// `t A_(k-1)` otherwise.
    pub fn gf_rx(&self, x: &GroundSet, a: i32) -> Result<IntPolynomial, EulerianError> {
        if x.min_abs_element() != Some(a) {
            return Err(EulerianError::NotMinimalAbs(a));
        }
        let k = x.len() as u32;
        Ok(match (k, a > 0) {
            (1, true) => IntPolynomial::one(),
            (1, false) => IntPolynomial::monomial(1),
            _ => self.a_fast(k - 1).shift(1),
        })
    }

    /// Weight of a block `T` of positive integers: the double sum of
    /// `t^des_B` over all sign choices of `T` and all arrangements ending at
    /// the minimal absolute value. Closed form: `1 + t` for singletons,
    /// `2^|T| t A_(|T|-1)` otherwise.
    pub fn block_weight(&self, t_set: &[i32]) -> Result<IntPolynomial, EulerianError> {
        if t_set.is_empty() {
            return Err(EulerianError::ParamRange("block must be nonempty".into()));
        }
        if t_set.iter().any(|&e| e <= 0) {
            return Err(EulerianError::ParamRange("block entries must be positive".into()));
        }
        let k = t_set.len() as u32;
        Ok(if k == 1 {
            IntPolynomial::from_i64s(&[1, 1])
        } else {
            self.a_fast(k - 1).shift(1).scale(&pow2(k))
        })
    }

    /// The double sum defining the block weight, computed literally; the
    /// oracle counterpart of [`Context::block_weight`].
    pub fn block_weight_by_enumeration(&self, t_set: &[i32]) -> Result<IntPolynomial, EulerianError> {
        if t_set.is_empty() {
            return Err(EulerianError::ParamRange("block must be nonempty".into()));
        }
        let mut sum = IntPolynomial::zero();
        for x in enumerate::signed_subsets(t_set) {
            let a = x.min_abs_element().expect("nonempty");
            for w in perms_ending_with(&x, a)? {
                sum = sum.add(&IntPolynomial::monomial(w.des_b()));
            }
        }
        Ok(sum)
    }

    /// `D_{n,1} = t (2^(n-1) A_(n-1) - (n-1) B_(n-2))` for `n >= 2`.
    pub fn d1_closed(&self, n: u32) -> Result<IntPolynomial, EulerianError> {
        if n < 2 {
            return Err(EulerianError::ParamRange(format!(
                "closed form for the first restricted type-D column requires n >= 2, got {n}"
            )));
        }
        let inner = self
            .a_fast(n - 1)
            .scale(&pow2(n - 1))
            .sub(&self.b_from_a_or_one(n - 2).scale_i64(n as i64 - 1));
        Ok(inner.shift(1))
    }

    /// First restricted type-D column with the `n = 1` base case folded in:
    /// the rank-1 group's only member contributes a constant.
    fn d_n1(&self, n: u32) -> IntPolynomial {
        if n == 1 {
            IntPolynomial::one()
        } else {
            self.d1_closed(n).expect("n >= 2")
        }
    }

    /// `D_{n,i}` for positive `i` via the ascending column recurrence
    /// `D_{m,i} = D_{m,i-1} - (t-1) D_{m-1,i-1}` seeded by the closed-form
    /// first column.
    pub fn drest_table(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        if i < 1 || i > n || n < 1 {
            return Err(EulerianError::ParamRange(format!(
                "need 1 <= i <= n, got i={i}, n={n}"
            )));
        }
        let t_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
        // col[m-1] holds D_{m,c}; entries below the current column index are
        // stale and never read.
        let mut col: Vec<IntPolynomial> = (1..=n).map(|m| self.d_n1(m)).collect();
        for c in 2..=i {
            for m in (c..=n).rev() {
                let idx = m as usize - 1;
                col[idx] = col[idx].sub(&t_minus_1.mul(&col[idx - 1]));
            }
        }
        Ok(col[n as usize - 1].clone())
    }

    /// `D_{n,-i} = t^n D_{n,i}(1/t)` for positive `i`; a checked claim, to
    /// be compared against enumeration.
    pub fn drest_negative(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        Ok(self.drest_table(n, i)?.reverse(n as usize)?)
    }

    /// The literal iterated closed form for `D_{n,i}`, with a uniform factor
    /// `(i-1)` on the middle sum. Kept verbatim as a claim under test; the
    /// column recurrence is the ground truth.
    pub fn drest_iterated_display(&self, n: u32, i: u32) -> Result<IntPolynomial, EulerianError> {
        if i < 2 || i > n {
            return Err(EulerianError::ParamRange(format!(
                "need 2 <= i <= n, got i={i}, n={n}"
            )));
        }
        let one_minus_t = IntPolynomial::from_i64s(&[1, -1]);
        let mut sum = self.d_n1(n);
        let mut middle = IntPolynomial::zero();
        for r in 1..=i.saturating_sub(2) {
            middle = middle.add(&one_minus_t.pow(r).mul(&self.d_n1(n - r)));
        }
        sum = sum.add(&middle.scale_i64(i as i64 - 1));
        sum = sum.add(&one_minus_t.pow(i - 1).mul(&self.d_n1(n - i + 1)));
        Ok(sum)
    }
}

/// Cardinality checksum helpers used by the invariants: `A_n(1) = n!`,
/// `B_n(1) = 2^n n!`, `D_n(1) = 2^(n-1) n!`.
pub fn expected_cardinality(kind: FamilyKind, n: u32) -> BigInt {
    match kind {
        FamilyKind::A => factorial(n),
        FamilyKind::B => pow2(n) * factorial(n),
        FamilyKind::D => {
            if n == 0 {
                BigInt::from(1)
            } else {
                pow2(n - 1) * factorial(n)
            }
        }
        FamilyKind::ARestricted => factorial(n - 1),
        FamilyKind::BRestricted => pow2(n - 1) * factorial(n - 1),
        FamilyKind::DRestricted => {
            assert!(n >= 2);
            pow2(n - 2) * factorial(n - 1)
        }
        FamilyKind::BHalf => pow2(n - 1) * factorial(n),
        FamilyKind::DHalf => unimplemented!("split depends on the sign"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    fn ctx() -> Context {
        Context::new()
    }

    fn enum_poly(ctx: &Context, spec: FamilySpec) -> IntPolynomial {
        ctx.poly_by_enumeration(&spec).unwrap()
    }

    #[test]
    fn enumeration_golden_values() {
        let c = ctx();
        assert_eq!(enum_poly(&c, FamilySpec::plain(FamilyKind::A, 3).unwrap()), p(&[1, 4, 1]));
        assert_eq!(enum_poly(&c, FamilySpec::plain(FamilyKind::B, 2).unwrap()), p(&[1, 6, 1]));
        assert_eq!(
            enum_poly(&c, FamilySpec::restricted(FamilyKind::DRestricted, 3, 1).unwrap()),
            p(&[0, 2, 2])
        );
    }

    #[test]
    fn enumeration_cap() {
        let c = Context::with_caps(EnumCaps { type_a: 11, type_b: 3 });
        let spec = FamilySpec::plain(FamilyKind::B, 4).unwrap();
        assert!(matches!(
            c.poly_by_enumeration(&spec),
            Err(EulerianError::CapExceeded { .. })
        ));
    }

    #[test]
    fn a_fast_values() {
        let c = ctx();
        assert_eq!(c.a_fast(0), p(&[1]));
        assert_eq!(c.a_fast(3), p(&[1, 4, 1]));
        assert_eq!(c.a_fast(4), p(&[1, 11, 11, 1]));
    }

    #[test]
    fn b_from_a_values() {
        let c = ctx();
        assert_eq!(c.b_from_a(1), p(&[1, 1]));
        assert_eq!(c.b_from_a(2), p(&[1, 6, 1]));
        assert_eq!(c.b_from_a(3), p(&[1, 23, 23, 1]));
        assert_eq!(c.b_triangle(3), p(&[1, 23, 23, 1]));
    }

    #[test]
    fn d_from_ba_values() {
        let c = ctx();
        assert_eq!(c.d_from_ba(2).unwrap(), p(&[1, 2, 1]));
        assert_eq!(c.d_from_ba(3).unwrap(), p(&[1, 11, 11, 1]));
        assert_eq!(
            c.d_from_ba(4).unwrap(),
            enum_poly(&c, FamilySpec::plain(FamilyKind::D, 4).unwrap())
        );
    }

    #[test]
    fn b_zhang_values() {
        let c = ctx();
        assert_eq!(c.b_zhang(1).unwrap(), p(&[1, 1]));
        assert_eq!(c.b_zhang(2).unwrap(), p(&[1, 6, 1]));
        assert_eq!(c.b_zhang(3).unwrap(), p(&[1, 23, 23, 1]));
    }

    #[test]
    fn arest_rec_matches_enumeration() {
        let c = ctx();
        for n in 1..=7u32 {
            for i in 1..=n {
                assert_eq!(
                    c.arest_rec(n, i).unwrap(),
                    c.arest_enum(n, i).unwrap(),
                    "n={n} i={i}"
                );
            }
        }
        assert!(c.arest_rec(3, 4).is_err());
    }

    #[test]
    fn brest_values() {
        let c = ctx();
        assert_eq!(c.brest_from_arest(2, 1).unwrap(), p(&[0, 2]));
        assert_eq!(c.brest_from_arest(2, 2).unwrap(), p(&[1, 1]));
        assert_eq!(c.brest_from_arest(3, 3).unwrap(), p(&[1, 6, 1]));
        assert_eq!(c.brest_negative(3, 2).unwrap(), p(&[0, 2, 6]));
        assert_eq!(c.brest_negative(3, 3).unwrap(), p(&[0, 1, 6, 1]));
        assert_eq!(c.brest_negative(1, 1).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn brest_dp_matches_restricted_route() {
        let c = ctx();
        for n in 1..=6u32 {
            for i in 1..=n {
                assert_eq!(
                    c.brest_dp(n, i as i32).unwrap(),
                    c.brest_from_arest(n, i).unwrap(),
                    "n={n} i={i}"
                );
                assert_eq!(
                    c.brest_dp(n, -(i as i32)).unwrap(),
                    c.brest_negative(n, i).unwrap(),
                    "n={n} i=-{i}"
                );
            }
        }
    }

    #[test]
    fn bhalf_values() {
        let c = ctx();
        assert_eq!(c.bhalf_hyatt(2, Sign::Plus).unwrap(), p(&[1, 3]));
        assert_eq!(c.bhalf_hyatt(2, Sign::Minus).unwrap(), p(&[0, 3, 1]));
        assert_eq!(c.bhalf_hyatt(1, Sign::Plus).unwrap(), p(&[1]));
    }

    #[test]
    fn dhalf_values() {
        let c = ctx();
        assert_eq!(c.dhalf_from_bhalf(2, Sign::Plus).unwrap(), p(&[1, 1]));
        assert_eq!(c.dhalf_from_bhalf(2, Sign::Minus).unwrap(), p(&[0, 1, 1]));
        assert_eq!(
            c.dhalf_from_bhalf(3, Sign::Plus).unwrap(),
            enum_poly(&c, FamilySpec::half(FamilyKind::DHalf, 3, Sign::Plus).unwrap())
        );
    }

    #[test]
    fn a_from_bhalf_values() {
        let c = ctx();
        assert_eq!(c.a_from_bhalf(1).unwrap(), p(&[1]));
        assert_eq!(c.a_from_bhalf(2).unwrap(), p(&[1, 1]));
        assert_eq!(c.a_from_bhalf(3).unwrap(), p(&[1, 4, 1]));
    }

    #[test]
    fn a_parity_values() {
        let c = ctx();
        assert_eq!(c.a_parity_formula(2).unwrap(), p(&[1, 1]));
        assert_eq!(c.a_parity_formula(3).unwrap(), p(&[1, 4, 1]));
        assert_eq!(c.a_parity_formula(4).unwrap(), p(&[1, 11, 11, 1]));
    }

    #[test]
    fn gf_rx_cases() {
        let c = ctx();
        let single = GroundSet::new(vec![3]).unwrap();
        assert_eq!(c.gf_rx(&single, 3).unwrap(), p(&[1]));
        let single_neg = GroundSet::new(vec![-2]).unwrap();
        assert_eq!(c.gf_rx(&single_neg, -2).unwrap(), p(&[0, 1]));
        let x = GroundSet::new(vec![2, -5, 7]).unwrap();
        assert_eq!(c.gf_rx(&x, 2).unwrap(), p(&[0, 1, 1]));
        assert!(matches!(c.gf_rx(&x, 7), Err(EulerianError::NotMinimalAbs(7))));
    }

    #[test]
    fn block_weight_cases() {
        let c = ctx();
        assert_eq!(c.block_weight(&[4]).unwrap(), p(&[1, 1]));
        assert_eq!(c.block_weight(&[1, 3]).unwrap(), p(&[0, 4]));
        assert_eq!(c.block_weight(&[2, 5, 6]).unwrap(), p(&[0, 8, 8]));
        assert_eq!(
            c.block_weight(&[2, 5, 6]).unwrap(),
            c.block_weight_by_enumeration(&[2, 5, 6]).unwrap()
        );
        assert!(c.block_weight(&[]).is_err());
    }

    #[test]
    fn d1_closed_values() {
        let c = ctx();
        assert_eq!(c.d1_closed(2).unwrap(), p(&[0, 1]));
        assert_eq!(c.d1_closed(3).unwrap(), p(&[0, 2, 2]));
        assert!(c.d1_closed(1).is_err());
    }

    #[test]
    fn drest_values() {
        let c = ctx();
        assert_eq!(c.drest_table(3, 2).unwrap(), p(&[0, 3, 1]));
        assert_eq!(c.drest_table(3, 3).unwrap(), p(&[1, 2, 1]));
        assert_eq!(c.drest_table(2, 2).unwrap(), p(&[1]));
        assert_eq!(c.drest_table(1, 1).unwrap(), p(&[1]));
        assert_eq!(c.drest_negative(2, 1).unwrap(), p(&[0, 1]));
        assert_eq!(c.drest_negative(3, 2).unwrap(), p(&[0, 1, 3]));
        assert_eq!(c.drest_negative(3, 3).unwrap(), p(&[0, 1, 2, 1]));
    }

    #[test]
    fn drest_iterated_display_values() {
        let c = ctx();
        assert_eq!(c.drest_iterated_display(3, 2).unwrap(), p(&[0, 3, 1]));
        assert_eq!(
            c.drest_iterated_display(4, 3).unwrap(),
            c.drest_table(4, 3).unwrap()
        );
        // The uniform factor disagrees with the binomial iteration at i >= 5.
        assert_ne!(
            c.drest_iterated_display(7, 5).unwrap(),
            c.drest_table(7, 5).unwrap()
        );
    }
}
