//! Sparse Laurent polynomials in one or two named variables.
//!
//! Exponents are rational with denominator dividing 4 and are stored as an
//! integer count of quarter units ([`QuarterExp`]). Coefficients are
//! arbitrary-precision integers. Every value is kept in canonical form: no
//! zero coefficients and one entry per exponent tuple, so structural equality
//! is polynomial equality.
//!
//! The canonical term order is descending lexicographic on the exponent
//! tuple (first variable's quarters, then the second's). The first term in
//! that order is the *leading* term.

mod eval;
mod json;
mod sqrt;
mod subst;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use json::{JsonPoly, JsonTerm};

/// Number of exponent units per integer power.
pub const EXP_DENOMINATOR: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable contexts differ: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("no assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("variable `{0}` is assigned a multi-term polynomial but occurs with a negative exponent")]
    NegativePowerOfPolynomial(String),
    #[error("variable `{0}` is assigned a multi-term polynomial but occurs with a fractional exponent")]
    FractionalPowerOfPolynomial(String),
    #[error("invalid assignment for `{var}`: {reason}")]
    InvalidAssignment { var: String, reason: String },
    #[error("exponent finer than 1/4 produced")]
    ExponentTooFine,
    #[error("not a perfect square")]
    NotAPerfectSquare,
    #[error("exponent of `{0}` is not integral")]
    NonIntegralExponent(String),
    #[error("evaluation point for `{0}` is zero")]
    ZeroBase(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid JSON polynomial: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, LaurentError>;

/// An exponent measured in quarter units: `QuarterExp(2)` is the power 1/2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarterExp(pub i64);

impl QuarterExp {
    pub const ZERO: QuarterExp = QuarterExp(0);

    pub fn from_int(power: i64) -> Self {
        QuarterExp(power * EXP_DENOMINATOR)
    }

    pub fn quarters(self) -> i64 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % EXP_DENOMINATOR == 0
    }

    pub fn is_half_integral(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer power, if the exponent is integral.
    pub fn as_int(self) -> Option<i64> {
        self.is_integral().then_some(self.0 / EXP_DENOMINATOR)
    }
}

impl Add for QuarterExp {
    type Output = QuarterExp;
    fn add(self, rhs: QuarterExp) -> QuarterExp {
        QuarterExp(self.0 + rhs.0)
    }
}

impl Sub for QuarterExp {
    type Output = QuarterExp;
    fn sub(self, rhs: QuarterExp) -> QuarterExp {
        QuarterExp(self.0 - rhs.0)
    }
}

impl Neg for QuarterExp {
    type Output = QuarterExp;
    fn neg(self) -> QuarterExp {
        QuarterExp(-self.0)
    }
}

/// Ordered list of one or two distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<VarContext>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() || names.len() > 2 {
            return Err(LaurentError::InvalidContext(format!(
                "expected 1 or 2 variables, got {}",
                names.len()
            )));
        }
        for name in &names {
            let mut chars = name.chars();
            let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(LaurentError::InvalidContext(format!("`{name}` is not a valid variable name")));
            }
        }
        if names.len() == 2 && names[0] == names[1] {
            return Err(LaurentError::InvalidContext(format!("duplicate variable `{}`", names[0])));
        }
        Ok(Arc::new(VarContext { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

/// Exponent tuple. One-variable contexts keep the second slot at zero.
pub(crate) type Exps = [QuarterExp; 2];

/// A single nonzero term `coeff * x^e0 * y^e1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    ctx: Arc<VarContext>,
    exps: Exps,
    coeff: BigInt,
}

impl Monomial {
    pub fn new(ctx: &Arc<VarContext>, exps: &[QuarterExp], coeff: impl Into<BigInt>) -> Result<Self> {
        let coeff = coeff.into();
        if exps.len() != ctx.arity() {
            return Err(LaurentError::InvalidContext(format!(
                "monomial has {} exponents for context [{}]",
                exps.len(),
                ctx
            )));
        }
        if coeff.is_zero() {
            return Err(LaurentError::InvalidAssignment {
                var: ctx.to_string(),
                reason: "monomial coefficient must be nonzero".into(),
            });
        }
        let mut full = [QuarterExp::ZERO; 2];
        full[..exps.len()].copy_from_slice(exps);
        Ok(Monomial { ctx: ctx.clone(), exps: full, coeff })
    }

    pub(crate) fn from_parts(ctx: Arc<VarContext>, exps: Exps, coeff: BigInt) -> Self {
        Monomial { ctx, exps, coeff }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn exps(&self) -> &[QuarterExp] {
        &self.exps[..self.ctx.arity()]
    }

    pub(crate) fn raw_exps(&self) -> Exps {
        self.exps
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        terms.insert(self.exps, self.coeff.clone());
        LaurentPoly { ctx: self.ctx.clone(), terms }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

/// Exact sparse Laurent polynomial with quarter-integer exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: Arc<VarContext>,
    // ascending key order; canonical (descending) order is `.iter().rev()`
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: &Arc<VarContext>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term([QuarterExp::ZERO; 2], c.into());
        p
    }

    /// The variable `name` raised to the first power.
    pub fn var(ctx: &Arc<VarContext>, name: &str) -> Result<Self> {
        Self::var_pow(ctx, name, QuarterExp::from_int(1))
    }

    pub fn var_pow(ctx: &Arc<VarContext>, name: &str, exp: QuarterExp) -> Result<Self> {
        let idx = ctx.index_of(name).ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))?;
        let mut exps = [QuarterExp::ZERO; 2];
        exps[idx] = exp;
        let mut p = Self::zero(ctx);
        p.add_term(exps, BigInt::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I, C>(ctx: &Arc<VarContext>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<QuarterExp>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(ctx);
        for (exps, c) in terms {
            if exps.len() != ctx.arity() {
                return Err(LaurentError::InvalidContext(format!(
                    "term has {} exponents for context [{}]",
                    exps.len(),
                    ctx
                )));
            }
            let mut full = [QuarterExp::ZERO; 2];
            full[..exps.len()].copy_from_slice(&exps);
            p.add_term(full, c.into());
        }
        Ok(p)
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[QuarterExp::ZERO; 2]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().rev().map(|(e, c)| Monomial::from_parts(self.ctx.clone(), *e, c.clone()))
    }

    pub(crate) fn raw_terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<Monomial> {
        self.terms.iter().next_back().map(|(e, c)| Monomial::from_parts(self.ctx.clone(), *e, c.clone()))
    }

    pub(crate) fn leading_raw(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn trailing_raw(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next()
    }

    /// Coefficient of the term with the given exponents (zero if absent).
    pub fn coeff(&self, exps: &[QuarterExp]) -> BigInt {
        let mut full = [QuarterExp::ZERO; 2];
        full[..exps.len().min(2)].copy_from_slice(&exps[..exps.len().min(2)]);
        self.terms.get(&full).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, exps: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn from_raw(ctx: &Arc<VarContext>, terms: BTreeMap<Exps, BigInt>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    fn check_context(&self, other: &LaurentPoly) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(LaurentError::ContextMismatch { left: self.ctx.to_string(), right: other.ctx.to_string() })
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_context(other)?;
        let mut out = LaurentPoly::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1]], ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.ctx);
        }
        LaurentPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by a single term given in this polynomial's context.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<LaurentPoly> {
        self.checked_mul(&m.to_poly())
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exchanges the two variables' exponents (identity on one-variable polynomials).
    pub fn swap_variables(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            out.add_term([e[1], e[0]], c.clone());
        }
        out
    }

    /// Negates every exponent, i.e. substitutes each variable by its inverse.
    pub fn invert_variables(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            out.add_term([-e[0], -e[1]], c.clone());
        }
        out
    }

    /// True when the leading coefficient is positive (zero counts as positive).
    pub fn is_canonical_positive(&self) -> bool {
        self.leading_raw().is_none_or(|(_, c)| c.is_positive())
    }
}

fn expect_same<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

// Operator forms panic on context mismatch; use the `checked_*` methods
// where contexts are not known to agree.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        expect_same(self.checked_add(rhs))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        expect_same(self.checked_sub(rhs))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        expect_same(self.checked_mul(rhs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> Arc<VarContext> {
        VarContext::new(&["q", "p"]).unwrap()
    }

    fn parse(s: &str, ctx: &Arc<VarContext>) -> LaurentPoly {
        LaurentPoly::parse(s, ctx).unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(VarContext::new::<&str>(&[]).is_err());
        assert!(VarContext::new(&["q", "q"]).is_err());
        assert!(VarContext::new(&["q", "p", "r"]).is_err());
        assert!(VarContext::new(&["1q"]).is_err());
        assert_eq!(VarContext::new(&["a", "z"]).unwrap().arity(), 2);
    }

    #[test]
    fn add_examples() {
        let ctx = qp();
        let q = parse("q", &ctx);
        assert!((&q + &(-&q)).is_zero());
        assert_eq!(parse("q + p", &ctx) + parse("q*p", &ctx), parse("q + p + q*p", &ctx));
        // [2]_{q,p} + qp [1]_{q,p}
        let two = parse("q + p", &ctx);
        let qp1 = parse("q*p", &ctx) * LaurentPoly::one(&ctx);
        assert_eq!(two + qp1, parse("q + p + q*p", &ctx));
    }

    #[test]
    fn mul_examples() {
        let ctx = qp();
        let l1 = parse("q^(1/2) - p^(1/2)", &ctx);
        assert_eq!(&l1 * &l1, parse("q - 2*q^(1/2)*p^(1/2) + p", &ctx));
        assert_eq!(&l1 * &LaurentPoly::one(&ctx), l1);
        let three = parse("q^2 + q*p + p^2", &ctx);
        assert_eq!(parse("q - p", &ctx) * three, parse("q^3 - p^3", &ctx));
    }

    #[test]
    fn pow_examples() {
        let ctx = qp();
        assert_eq!(parse("q + p", &ctx).pow(2), parse("q^2 + 2*q*p + p^2", &ctx));
        assert!(parse("q - 7*p", &ctx).pow(0).is_one());
        let z = parse("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)", &ctx);
        assert_eq!(z.pow(2), parse("q^(1/2)*p^(-1/2) - 2 + q^(-1/2)*p^(1/2)", &ctx));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = LaurentPoly::one(&qp());
        let b = LaurentPoly::one(&VarContext::new(&["t"]).unwrap());
        assert!(matches!(a.checked_add(&b), Err(LaurentError::ContextMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(LaurentError::ContextMismatch { .. })));
    }

    #[test]
    fn equal_contexts_built_separately_are_compatible() {
        let a = LaurentPoly::var(&qp(), "q").unwrap();
        let b = LaurentPoly::var(&qp(), "p").unwrap();
        assert_eq!(a.checked_add(&b).unwrap().len(), 2);
    }

    #[test]
    fn leading_term_is_descending_lex() {
        let ctx = qp();
        let f = parse("p^5 + q*p^(-3) + q", &ctx);
        let lead = f.leading_term().unwrap();
        assert_eq!(lead.exps(), &[QuarterExp(4), QuarterExp(0)]);
        let order: Vec<_> = f.terms().map(|m| m.exps().to_vec()).collect();
        assert_eq!(
            order,
            vec![
                vec![QuarterExp(4), QuarterExp(0)],
                vec![QuarterExp(4), QuarterExp(-12)],
                vec![QuarterExp(0), QuarterExp(20)],
            ]
        );
    }

    #[test]
    fn quarter_exp_classification() {
        assert!(QuarterExp(8).is_integral());
        assert!(QuarterExp(-2).is_half_integral());
        assert!(!QuarterExp(-2).is_integral());
        assert!(!QuarterExp(1).is_half_integral());
        assert_eq!(QuarterExp(-12).as_int(), Some(-3));
        assert_eq!(QuarterExp(3) + QuarterExp(-5), QuarterExp(-2));
    }
}
