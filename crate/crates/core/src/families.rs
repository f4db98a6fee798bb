//! The Alexander, generalized Alexander, Jones and HOMFLY families on
//! T(n,2), and the substitutions between them.
//!
//! Each family is fixed by its skein relation as written,
//! `c+ P+ - c- P- = c0 P0` with `c+` a monomial, which rearranges to the
//! full recurrence `P+ = (c0/c+) P0 + (c-/c+) P-`:
//!
//! | family                | c+            | c-          | c0                            |
//! |-----------------------|---------------|-------------|-------------------------------|
//! | alexander             | 1             | 1           | t^(1/2) - t^(-1/2)            |
//! | generalized-alexander | (qp)^(-1/4)   | (qp)^(1/4)  | q^(1/4)p^(-1/4) - q^(-1/4)p^(1/4) |
//! | jones                 | t^(-1)        | t           | t^(1/2) - t^(-1/2)            |
//! | homfly                | a^(-1)        | a           | z                             |
//!
//! Only odd n (knots) are computed: the unknot `P(1) = 1` is the sole base
//! value, and the odd-step recurrence needs nothing else.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Monomial, QuarterExp, VarContext};
use crate::qnumbers::{jones_q_number, q_number, qp_number};
use crate::skein::{self, AnsatzCoefficients, KnotStepPair, SkeinError, SkeinPair, TorusSequence};
use crate::vars;

pub const ALEXANDER: &str = "alexander";
pub const GENERALIZED_ALEXANDER: &str = "generalized-alexander";
pub const JONES: &str = "jones";
pub const HOMFLY: &str = "homfly";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("n = {0} is even: torus links T(n,2) with even n have no base value")]
    EvenIndexUnsupported(u32),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family definition: {0}")]
    Definition(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

pub type Result<T> = std::result::Result<T, FamilyError>;

/// A skein relation as written: `plus * P+ - minus * P- = zero * P0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinRelation {
    pub plus: Monomial,
    pub minus: LaurentPoly,
    pub zero: LaurentPoly,
}

impl SkeinRelation {
    /// Solves the relation for `P+`: `l1 = zero / plus`, `l2 = minus / plus`.
    pub fn to_pair(&self) -> Result<SkeinPair> {
        let c = self.plus.coeff();
        if c != &BigInt::from(1) && c != &BigInt::from(-1) {
            return Err(FamilyError::Definition(format!(
                "leading skein coefficient {} is not a unit monomial",
                self.plus
            )));
        }
        let inv_exps: Vec<QuarterExp> = self.plus.exps().iter().map(|e| -*e).collect();
        let inv = Monomial::new(self.plus.context(), &inv_exps, c.clone())?;
        let l1 = self.zero.mul_monomial(&inv)?;
        let l2 = self.minus.mul_monomial(&inv)?;
        Ok(SkeinPair::new(l1, l2)?)
    }

    /// `plus * P+ - minus * P- - zero * P0`, zero exactly when the triple
    /// satisfies the relation.
    pub fn residual(
        &self,
        p_plus: &LaurentPoly,
        p_zero: &LaurentPoly,
        p_minus: &LaurentPoly,
    ) -> Result<LaurentPoly> {
        let lhs = self.plus.to_poly().checked_mul(p_plus)?;
        let lhs = lhs.checked_sub(&self.minus.checked_mul(p_minus)?)?;
        Ok(lhs.checked_sub(&self.zero.checked_mul(p_zero)?)?)
    }
}

/// Closed form for `P(2m+1)`.
#[derive(Debug, Clone)]
pub enum ClosedForm {
    /// A dedicated formula taking `m`.
    Formula(fn(u32) -> LaurentPoly),
    /// `a1 [m+1]_{u,v} - a2 [m]_{u,v}`.
    Ansatz { coefficients: AnsatzCoefficients, u: Monomial, v: Monomial },
}

impl ClosedForm {
    pub fn at(&self, m: u32) -> Result<LaurentPoly> {
        match self {
            ClosedForm::Formula(f) => Ok(f(m)),
            ClosedForm::Ansatz { coefficients, u, v } => Ok(coefficients.evaluate(m, u, v)?),
        }
    }
}

/// A named invariant family.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub name: String,
    pub context: Arc<VarContext>,
    pub relation: SkeinRelation,
    pub skein: SkeinPair,
    pub knot_step: KnotStepPair,
    pub closed_form: Option<ClosedForm>,
    /// Expected ansatz coefficients `(a1, a2)` when the step pair is in
    /// two-parameter form.
    pub expected_ansatz: Option<AnsatzCoefficients>,
    /// The T(2,2) value consistent with `P(3) = k1 + k2`, when it is a
    /// Laurent polynomial.
    pub link_base: Option<LaurentPoly>,
}

impl FamilySpec {
    /// Builds a family from its skein relation; the step pair is derived.
    pub fn from_relation(name: &str, relation: SkeinRelation) -> Result<Self> {
        let skein = relation.to_pair()?;
        let knot_step = skein::l_to_k(&skein)?;
        Ok(FamilySpec {
            name: name.to_string(),
            context: skein.l1.context().clone(),
            relation,
            skein,
            knot_step,
            closed_form: None,
            expected_ansatz: None,
            link_base: None,
        })
    }

    /// Builds a family from explicit coefficients without requiring
    /// `knot_step == l_to_k(skein)`; the verification suite reports any
    /// disagreement.
    pub fn from_parts(name: &str, skein: SkeinPair, knot_step: KnotStepPair) -> Result<Self> {
        skein.l1.checked_add(&knot_step.k1)?;
        let ctx = skein.l1.context().clone();
        let one = Monomial::new(&ctx, &vec![QuarterExp::ZERO; ctx.arity()], 1)?;
        let relation = SkeinRelation { plus: one, minus: skein.l2.clone(), zero: skein.l1.clone() };
        Ok(FamilySpec {
            name: name.to_string(),
            context: ctx,
            relation,
            skein,
            knot_step,
            closed_form: None,
            expected_ansatz: None,
            link_base: None,
        })
    }

    pub fn with_closed_form(mut self, form: ClosedForm) -> Self {
        self.closed_form = Some(form);
        self
    }

    pub fn with_expected_ansatz(mut self, a1: LaurentPoly, a2: LaurentPoly) -> Self {
        self.expected_ansatz = Some(AnsatzCoefficients { a1, a2 });
        self
    }

    pub fn with_link_base(mut self, base: LaurentPoly) -> Self {
        self.link_base = Some(base);
        self
    }

    /// Odd-step recurrence values for n = 1, 3, ..., n_max.
    pub fn sequence(&self, n_max: u32) -> Result<TorusSequence> {
        check_odd(n_max)?;
        Ok(skein::gen_odd_sequence(&self.knot_step, n_max)?.with_label(self.name.clone()))
    }

    /// Invariant of T(n,2) from the odd-step recurrence.
    pub fn invariant(&self, n: u32) -> Result<LaurentPoly> {
        let seq = self.sequence(n)?;
        Ok(seq.get(n).expect("sequence reaches n_max").clone())
    }
}

fn check_odd(n: u32) -> Result<()> {
    if n.is_multiple_of(2) {
        Err(FamilyError::EvenIndexUnsupported(n))
    } else {
        Ok(())
    }
}

fn lit(s: &str, ctx: &Arc<VarContext>) -> LaurentPoly {
    LaurentPoly::parse(s, ctx).expect("valid literal")
}

fn mono(ctx: &Arc<VarContext>, quarters: &[i64]) -> Monomial {
    let exps: Vec<QuarterExp> = quarters.iter().map(|&q| QuarterExp(q)).collect();
    Monomial::new(ctx, &exps, 1).expect("valid monomial")
}

fn alexander_closed(m: u32) -> LaurentPoly {
    let t = vars::t();
    let rename = [("q", mono(&t, &[4]))];
    let hi = q_number(m + 1).substitute_monomial(&t, &rename).expect("q -> t");
    let lo = q_number(m).substitute_monomial(&t, &rename).expect("q -> t");
    &hi - &lo
}

fn generalized_closed(m: u32) -> LaurentPoly {
    let qp = vars::qp();
    &qp_number(m + 1) - &(&lit("q*p", &qp) * &qp_number(m))
}

fn jones_closed(m: u32) -> LaurentPoly {
    let t = vars::t();
    &jones_q_number(m + 1) - &(&lit("t^4", &t) * &jones_q_number(m))
}

pub fn alexander() -> FamilySpec {
    let t = vars::t();
    let relation =
        SkeinRelation { plus: mono(&t, &[0]), minus: lit("1", &t), zero: lit("t^(1/2) - t^(-1/2)", &t) };
    FamilySpec::from_relation(ALEXANDER, relation)
        .expect("alexander relation")
        .with_closed_form(ClosedForm::Formula(alexander_closed))
        .with_expected_ansatz(lit("1", &t), lit("1", &t))
        .with_link_base(lit("t^(1/2) - t^(-1/2)", &t))
}

pub fn generalized_alexander() -> FamilySpec {
    let qp = vars::qp();
    let relation = SkeinRelation {
        plus: mono(&qp, &[-1, -1]),
        minus: lit("q^(1/4)*p^(1/4)", &qp),
        zero: lit("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)", &qp),
    };
    // P(2) = (l1^2 + l2 - l2^2)/l1 is not a Laurent polynomial here
    FamilySpec::from_relation(GENERALIZED_ALEXANDER, relation)
        .expect("generalized alexander relation")
        .with_closed_form(ClosedForm::Formula(generalized_closed))
        .with_expected_ansatz(lit("1", &qp), lit("q*p", &qp))
}

/// Multiplying `t^-1 V+ - t V- = (t^(1/2) - t^(-1/2)) V0` through by `t`
/// gives `V+ = (t^(3/2) - t^(1/2)) V0 + t^2 V-`, so `l1 = t^(3/2) - t^(1/2)`,
/// `l2 = t^2`, `k1 = t^3 + t`, `k2 = -t^4`.
pub fn jones() -> FamilySpec {
    let t = vars::t();
    let relation =
        SkeinRelation { plus: mono(&t, &[-4]), minus: lit("t", &t), zero: lit("t^(1/2) - t^(-1/2)", &t) };
    FamilySpec::from_relation(JONES, relation)
        .expect("jones relation")
        .with_closed_form(ClosedForm::Formula(jones_closed))
        .with_expected_ansatz(lit("1", &t), lit("t^4", &t))
        .with_link_base(lit("-t^(1/2) - t^(5/2)", &t))
}

/// `a^-1 H+ - a H- = z H0` gives `l1 = a z`, `l2 = a^2`.
pub fn homfly() -> FamilySpec {
    let az = vars::az();
    let relation = SkeinRelation { plus: mono(&az, &[-4, 0]), minus: lit("a", &az), zero: lit("z", &az) };
    FamilySpec::from_relation(HOMFLY, relation)
        .expect("homfly relation")
        .with_link_base(lit("a*z + a*z^(-1) - a^3*z^(-1)", &az))
}

/// The built-in families, in a fixed order.
pub fn registry() -> &'static [FamilySpec] {
    static REGISTRY: OnceLock<Vec<FamilySpec>> = OnceLock::new();
    REGISTRY.get_or_init(|| vec![alexander(), generalized_alexander(), jones(), homfly()])
}

pub fn lookup(name: &str) -> Result<&'static FamilySpec> {
    registry().iter().find(|f| f.name == name).ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))
}

/// `[m+1]_t - [m]_t` with `m = (n-1)/2`.
pub fn alexander_torus(n: u32) -> Result<LaurentPoly> {
    check_odd(n)?;
    Ok(alexander_closed(n / 2))
}

/// `[m+1]_{q,p} - qp [m]_{q,p}` with `m = (n-1)/2`.
pub fn generalized_alexander_torus(n: u32) -> Result<LaurentPoly> {
    check_odd(n)?;
    Ok(generalized_closed(n / 2))
}

/// Jones polynomial from the odd-step recurrence `k1 = t^3 + t`, `k2 = -t^4`.
pub fn jones_torus(n: u32) -> Result<LaurentPoly> {
    check_odd(n)?;
    let t = vars::t();
    let step = KnotStepPair::new(lit("t^3 + t", &t), lit("-t^4", &t))?;
    let seq = skein::gen_odd_sequence(&step, n)?;
    Ok(seq.get(n).expect("sequence reaches n").clone())
}

/// HOMFLY polynomial from the odd-step recurrence `k1 = a^2 z^2 + 2a^2`, `k2 = -a^4`.
pub fn homfly_torus(n: u32) -> Result<LaurentPoly> {
    check_odd(n)?;
    let az = vars::az();
    let step = KnotStepPair::new(lit("a^2*z^2 + 2*a^2", &az), lit("-a^4", &az))?;
    let seq = skein::gen_odd_sequence(&step, n)?;
    Ok(seq.get(n).expect("sequence reaches n").clone())
}

fn require_context(f: &LaurentPoly, expected: &Arc<VarContext>) -> Result<()> {
    if f.context().as_ref() == expected.as_ref() {
        Ok(())
    } else {
        Err(LaurentError::ContextMismatch { left: f.context().to_string(), right: expected.to_string() }
            .into())
    }
}

/// `p -> q^-1`, with the surviving variable named `t` so the result is
/// directly comparable with [`alexander_torus`].
pub fn to_alexander(f: &LaurentPoly) -> Result<LaurentPoly> {
    require_context(f, &vars::qp())?;
    let t = vars::t();
    Ok(f.substitute_monomial(&t, &[("q", mono(&t, &[4])), ("p", mono(&t, &[-4]))])?)
}

/// `q -> t^3`, `p -> t`.
pub fn to_jones(f: &LaurentPoly) -> Result<LaurentPoly> {
    require_context(f, &vars::qp())?;
    let t = vars::t();
    Ok(f.substitute_monomial(&t, &[("q", mono(&t, &[12])), ("p", mono(&t, &[4]))])?)
}

/// `a -> (qp)^(1/4)`, `z -> q^(1/4) p^(-1/4) - q^(-1/4) p^(1/4)`.
pub fn homfly_to_generalized(f: &LaurentPoly) -> Result<LaurentPoly> {
    require_context(f, &vars::az())?;
    let qp = vars::qp();
    let a = lit("q^(1/4)*p^(1/4)", &qp);
    let z = lit("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)", &qp);
    Ok(f.substitute_poly(&[("a", a), ("z", z)])?)
}

/// Definition of an extra family, read from JSON.
///
/// ```json
/// {"name": "my-family", "vars": ["q", "p"],
///  "l1": "q^(1/2) - p^(1/2)", "l2": "q^(1/2)*p^(1/2)",
///  "k1": "q + p", "k2": "-q*p",
///  "closed_form": {"a1": "1", "a2": "q*p", "u": "q", "v": "p"},
///  "link_base": null}
/// ```
///
/// `k1`/`k2` default to the values derived from `l1`/`l2`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub name: String,
    pub vars: Vec<String>,
    pub l1: String,
    pub l2: String,
    #[serde(default)]
    pub k1: Option<String>,
    #[serde(default)]
    pub k2: Option<String>,
    #[serde(default)]
    pub closed_form: Option<AnsatzFile>,
    #[serde(default)]
    pub link_base: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnsatzFile {
    pub a1: String,
    pub a2: String,
    pub u: String,
    pub v: String,
}

impl FamilyFile {
    pub fn from_json_str(s: &str) -> Result<FamilyFile> {
        serde_json::from_str(s).map_err(|e| FamilyError::Definition(e.to_string()))
    }

    pub fn build(&self) -> Result<FamilySpec> {
        let ctx = VarContext::new(&self.vars)?;
        let parse = |s: &str| LaurentPoly::parse(s, &ctx);
        let skein = SkeinPair::new(parse(&self.l1)?, parse(&self.l2)?)?;
        let derived = skein::l_to_k(&skein)?;
        let k1 = self.k1.as_deref().map(parse).transpose()?.unwrap_or(derived.k1);
        let k2 = self.k2.as_deref().map(parse).transpose()?.unwrap_or(derived.k2);
        let mut family = FamilySpec::from_parts(&self.name, skein, KnotStepPair::new(k1, k2)?)?;
        if let Some(form) = &self.closed_form {
            let single = |s: &str| -> Result<Monomial> {
                let p = parse(s)?;
                match (p.len(), p.leading_term()) {
                    (1, Some(m)) => Ok(m),
                    _ => Err(FamilyError::Definition(format!("`{s}` is not a single term"))),
                }
            };
            let coefficients = AnsatzCoefficients { a1: parse(&form.a1)?, a2: parse(&form.a2)? };
            family.expected_ansatz = Some(coefficients.clone());
            family.closed_form =
                Some(ClosedForm::Ansatz { coefficients, u: single(&form.u)?, v: single(&form.v)? });
        }
        if let Some(base) = &self.link_base {
            family.link_base = Some(parse(base)?);
        }
        Ok(family)
    }
}
