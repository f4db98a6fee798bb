//! JSON form:
//! `{"vars":["q","p"],"exp_denominator":4,"terms":[{"exp":[4,4],"coeff":"-1"}]}`.
//!
//! `exp` entries are quarter counts, `coeff` is a decimal string, and terms
//! are listed in canonical order.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{LaurentError, LaurentPoly, QuarterExp, Result, VarContext, EXP_DENOMINATOR};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonPoly {
    pub vars: Vec<String>,
    pub exp_denominator: i64,
    pub terms: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonTerm {
    pub exp: Vec<i64>,
    pub coeff: String,
}

impl LaurentPoly {
    pub fn to_json(&self) -> JsonPoly {
        let arity = self.context().arity();
        JsonPoly {
            vars: self.context().names().to_vec(),
            exp_denominator: EXP_DENOMINATOR,
            terms: self
                .raw_terms()
                .rev()
                .map(|(e, c)| JsonTerm {
                    exp: e[..arity].iter().map(|x| x.quarters()).collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    /// Rejects zero coefficients and repeated exponent tuples; accepts
    /// terms in any order.
    pub fn from_json(json: &JsonPoly) -> Result<LaurentPoly> {
        if json.exp_denominator != EXP_DENOMINATOR {
            return Err(LaurentError::Json(format!(
                "exp_denominator must be {EXP_DENOMINATOR}, got {}",
                json.exp_denominator
            )));
        }
        let ctx = VarContext::new(&json.vars)?;
        let mut poly = LaurentPoly::zero(&ctx);
        for term in &json.terms {
            if term.exp.len() != ctx.arity() {
                return Err(LaurentError::Json(format!(
                    "term has {} exponents for {} variables",
                    term.exp.len(),
                    ctx.arity()
                )));
            }
            let coeff: BigInt = term
                .coeff
                .parse()
                .map_err(|_| LaurentError::Json(format!("bad coefficient `{}`", term.coeff)))?;
            if coeff.is_zero() {
                return Err(LaurentError::Json("zero coefficient".into()));
            }
            let mut exps = [QuarterExp::ZERO; 2];
            for (slot, q) in exps.iter_mut().zip(&term.exp) {
                *slot = QuarterExp(*q);
            }
            if poly.raw_terms().any(|(e, _)| *e == exps) {
                return Err(LaurentError::Json(format!("duplicate exponent {:?}", term.exp)));
            }
            poly.add_term(exps, coeff);
        }
        Ok(poly)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<LaurentPoly> {
        let json: JsonPoly = serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        Self::from_json(&json)
    }
}
