//! Skein recurrences for the torus family T(n,2).
//!
//! A skein pair `(l1, l2)` gives the full recurrence
//! `P(n+1) = l1 P(n) + l2 P(n-1)`. Eliminating the even indices gives the
//! odd-step recurrence `P(n+2) = k1 P(n) + k2 P(n-2)` with
//! `k1 = l1^2 + 2 l2` and `k2 = -l2^2`, anchored at `P(1) = 1` and
//! `P(3) = k1 + k2`.
//!
//! The derivation procedure runs the other way: start from a `(k1, k2)` pair
//! read off a deformed-number recurrence, recover `(l1, l2)` by exact square
//! roots, then fit `P(2m+1) = a1 [m+1] - a2 [m]` in the matching deformed
//! numbers.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Monomial};
use crate::qnumbers::qp_number_at;
use crate::report::IdentityReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("cannot recover (l1, l2) from (k1, k2): {0}")]
    NotInvertible(String),
    #[error("step pair is not of the form k1 = u + v, k2 = -u*v: {0}")]
    NotTwoParameterForm(String),
    #[error("ansatz fails at n={n}: sequence has {actual}, ansatz gives {expected}")]
    AnsatzMismatch { n: u32, expected: LaurentPoly, actual: LaurentPoly },
    #[error("sequence has no entry for n={0}")]
    MissingEntry(u32),
    #[error("index {0} is not a valid odd index")]
    InvalidIndex(u32),
}

pub type Result<T> = std::result::Result<T, SkeinError>;

/// Coefficients of the full recurrence `P(n+1) = l1 P(n) + l2 P(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinPair {
    pub l1: LaurentPoly,
    pub l2: LaurentPoly,
}

impl SkeinPair {
    pub fn new(l1: LaurentPoly, l2: LaurentPoly) -> Result<Self> {
        l1.checked_add(&l2)?;
        Ok(SkeinPair { l1, l2 })
    }
}

/// Coefficients of the odd-step recurrence `P(n+2) = k1 P(n) + k2 P(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotStepPair {
    pub k1: LaurentPoly,
    pub k2: LaurentPoly,
}

impl KnotStepPair {
    pub fn new(k1: LaurentPoly, k2: LaurentPoly) -> Result<Self> {
        k1.checked_add(&k2)?;
        Ok(KnotStepPair { k1, k2 })
    }
}

/// Invariants of the knots T(1,2), T(3,2), ..., T(n_max,2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSequence {
    label: String,
    // entries[m] is the value at n = 2m + 1
    entries: Vec<LaurentPoly>,
}

impl TorusSequence {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn get(&self, n: u32) -> Option<&LaurentPoly> {
        if n.is_multiple_of(2) {
            return None;
        }
        self.entries.get((n / 2) as usize)
    }

    pub fn n_max(&self) -> u32 {
        2 * self.entries.len() as u32 - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.entries.iter().enumerate().map(|(m, p)| (2 * m as u32 + 1, p))
    }

    pub fn into_entries(self) -> Vec<LaurentPoly> {
        self.entries
    }
}

/// Values `P(1), ..., P(n_max)` of the full recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSequence {
    entries: Vec<LaurentPoly>,
}

impl FullSequence {
    pub fn get(&self, n: u32) -> Option<&LaurentPoly> {
        n.checked_sub(1).and_then(|i| self.entries.get(i as usize))
    }

    pub fn n_max(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.entries.iter().enumerate().map(|(i, p)| (i as u32 + 1, p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzCoefficients {
    pub a1: LaurentPoly,
    pub a2: LaurentPoly,
}

impl AnsatzCoefficients {
    /// `a1 [m+1]_{u,v} - a2 [m]_{u,v}`.
    pub fn evaluate(&self, m: u32, u: &Monomial, v: &Monomial) -> Result<LaurentPoly> {
        let hi = self.a1.checked_mul(&qp_number_at(m + 1, u, v)?)?;
        let lo = self.a2.checked_mul(&qp_number_at(m, u, v)?)?;
        Ok(hi.checked_sub(&lo)?)
    }
}

pub fn l_to_k(pair: &SkeinPair) -> Result<KnotStepPair> {
    let SkeinPair { l1, l2 } = pair;
    let k1 = l1.checked_mul(l1)?.checked_add(&l2.scale(&BigInt::from(2)))?;
    let k2 = -l2.checked_mul(l2)?;
    Ok(KnotStepPair { k1, k2 })
}

/// Inverts [`l_to_k`].
///
/// `l2` is the canonical-positive square root of `-k2` unless only its
/// negation makes `k1 - 2 l2` a perfect square; `l1` is the
/// canonical-positive root of `k1 - 2 l2`. Both signs of `l1` give the same
/// step pair.
pub fn k_to_l(pair: &KnotStepPair) -> Result<SkeinPair> {
    let KnotStepPair { k1, k2 } = pair;
    k1.checked_add(k2)?;
    let l2 = (-k2)
        .exact_sqrt()
        .map_err(|_| SkeinError::NotInvertible(format!("-k2 = {} is not a perfect square", -k2)))?;
    for l2 in [l2.clone(), -&l2] {
        let l1_sq = k1 - &l2.scale(&BigInt::from(2));
        if let Ok(l1) = l1_sq.exact_sqrt() {
            return Ok(SkeinPair { l1, l2 });
        }
    }
    Err(SkeinError::NotInvertible(format!("k1 - 2*l2 is not a perfect square for l2 = ±({l2})")))
}

/// Runs the odd-step recurrence from `P(1) = 1`, `P(3) = k1 + k2`.
pub fn gen_odd_sequence(pair: &KnotStepPair, n_max: u32) -> Result<TorusSequence> {
    if n_max.is_multiple_of(2) {
        return Err(SkeinError::InvalidIndex(n_max));
    }
    let KnotStepPair { k1, k2 } = pair;
    let ctx = k1.context();
    let count = (n_max / 2 + 1) as usize;
    let mut entries = Vec::with_capacity(count);
    entries.push(LaurentPoly::one(ctx));
    if count > 1 {
        entries.push(k1.checked_add(k2)?);
    }
    while entries.len() < count {
        let m = entries.len();
        let next = k1.checked_mul(&entries[m - 1])?.checked_add(&k2.checked_mul(&entries[m - 2])?)?;
        entries.push(next);
    }
    Ok(TorusSequence { label: String::new(), entries })
}

/// Runs the full recurrence from caller-supplied `P(1) = base1`, `P(2) = base2`.
pub fn gen_full_sequence(
    pair: &SkeinPair,
    base1: &LaurentPoly,
    base2: &LaurentPoly,
    n_max: u32,
) -> Result<FullSequence> {
    let SkeinPair { l1, l2 } = pair;
    l1.checked_add(base1)?;
    l1.checked_add(base2)?;
    let mut entries = Vec::with_capacity(n_max as usize);
    if n_max >= 1 {
        entries.push(base1.clone());
    }
    if n_max >= 2 {
        entries.push(base2.clone());
    }
    while entries.len() < n_max as usize {
        let i = entries.len();
        let next = &(l1 * &entries[i - 1]) + &(l2 * &entries[i - 2]);
        entries.push(next);
    }
    Ok(FullSequence { entries })
}

/// Splits `k1 = u + v`, `k2 = -u v` into two unit monomials, returned in
/// canonical order. This identifies the odd-step recurrence with the
/// q,p-number recurrence at `q = u`, `p = v`.
pub fn solve_parameters(pair: &KnotStepPair) -> Result<(Monomial, Monomial)> {
    let KnotStepPair { k1, k2 } = pair;
    k1.checked_add(k2)?;
    let terms: Vec<Monomial> = k1.terms().collect();
    if terms.len() != 2 {
        return Err(SkeinError::NotTwoParameterForm(format!("k1 = {k1} does not have exactly two terms")));
    }
    if !terms.iter().all(|m| m.coeff().is_one()) {
        return Err(SkeinError::NotTwoParameterForm(format!("k1 = {k1} has a non-unit coefficient")));
    }
    let product = terms[0].to_poly().checked_mul(&terms[1].to_poly())?;
    if product != -k2 {
        return Err(SkeinError::NotTwoParameterForm(format!("u*v = {product} but -k2 = {}", -k2)));
    }
    let mut it = terms.into_iter();
    let u = it.next().expect("two terms");
    let v = it.next().expect("two terms");
    Ok((u, v))
}

/// Fits `P(2m+1) = a1 [m+1]_{u,v} - a2 [m]_{u,v}` from the `n = 1` and
/// `n = 3` entries, then checks the fit against every entry of `seq`.
pub fn fit_ansatz(seq: &TorusSequence, u: &Monomial, v: &Monomial) -> Result<AnsatzCoefficients> {
    let p1 = seq.get(1).ok_or(SkeinError::MissingEntry(1))?;
    let p3 = seq.get(3).ok_or(SkeinError::MissingEntry(3))?;
    // m = 0: P(1) = a1 [1] - a2 [0] = a1
    let a1 = p1.clone();
    // m = 1: P(3) = a1 [2] - a2 [1] = a1 (u + v) - a2
    let a2 = a1.checked_mul(&u.to_poly().checked_add(&v.to_poly())?)?.checked_sub(p3)?;
    let fit = AnsatzCoefficients { a1, a2 };
    for (n, actual) in seq.iter() {
        let expected = fit.evaluate(n / 2, u, v)?;
        if &expected != actual {
            return Err(SkeinError::AnsatzMismatch { n, expected, actual: actual.clone() });
        }
    }
    Ok(fit)
}

/// Compares the odd entries of the full recurrence (from `1`, `base2`) with
/// the odd-step recurrence of `l_to_k(pair)`.
pub fn verify_interleave(pair: &SkeinPair, base2: &LaurentPoly, n_max: u32) -> Result<IdentityReport> {
    if n_max.is_multiple_of(2) {
        return Err(SkeinError::InvalidIndex(n_max));
    }
    let one = LaurentPoly::one(pair.l1.context());
    let full = gen_full_sequence(pair, &one, base2, n_max)?;
    let odd = gen_odd_sequence(&l_to_k(pair)?, n_max)?;
    let mut report = IdentityReport::new("full-vs-odd-step");
    for (n, p) in odd.iter() {
        report.check(n, full.get(n).expect("same range").clone(), p.clone());
    }
    Ok(report)
}

/// The `P(2)` value that makes the full recurrence reproduce
/// `P(3) = k1 + k2`, multiplied by `l1`: `l1 P(2) = l1^2 + l2 - l2^2`.
///
/// This is always a polynomial even when `P(2)` itself is not.
pub fn scaled_link_base(pair: &SkeinPair) -> LaurentPoly {
    let SkeinPair { l1, l2 } = pair;
    &(&(l1 * l1) + l2) - &(l2 * l2)
}

/// Checks the odd-index agreement of [`verify_interleave`] on the sequence
/// scaled by `l1`, which needs no division: starting from `l1`,
/// `l1 P(2)`, every odd entry must equal `l1` times the odd-step value.
pub fn verify_interleave_scaled(pair: &SkeinPair, n_max: u32) -> Result<IdentityReport> {
    if n_max.is_multiple_of(2) {
        return Err(SkeinError::InvalidIndex(n_max));
    }
    let full = gen_full_sequence(pair, &pair.l1, &scaled_link_base(pair), n_max)?;
    let odd = gen_odd_sequence(&l_to_k(pair)?, n_max)?;
    let mut report = IdentityReport::new("scaled-full-vs-odd-step");
    for (n, p) in odd.iter() {
        report.check(n, full.get(n).expect("same range").clone(), &pair.l1 * p);
    }
    Ok(report)
}
