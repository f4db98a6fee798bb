use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Exps, LaurentError, LaurentPoly, QuarterExp, Result};

fn half(e: QuarterExp) -> Option<QuarterExp> {
    (e.quarters() % 2 == 0).then(|| QuarterExp(e.quarters() / 2))
}

fn sqrt_term(exps: &Exps, c: &BigInt) -> Option<(Exps, BigInt)> {
    if !c.is_positive() {
        return None;
    }
    let r = c.sqrt();
    if &(&r * &r) != c {
        return None;
    }
    Some(([half(exps[0])?, half(exps[1])?], r))
}

impl LaurentPoly {
    /// Exact square root with positive leading coefficient.
    ///
    /// Long-division style: the leading term of the root is the square root
    /// of the leading term of `self`; each further term is the leading term
    /// of the remainder divided by twice the root's leading term. `sqrt(0)`
    /// is `0`.
    pub fn exact_sqrt(&self) -> Result<LaurentPoly> {
        let ctx = self.context();
        let Some((lead_exps, lead_coeff)) = self.leading_raw() else {
            return Ok(LaurentPoly::zero(ctx));
        };
        let (g_exps, g_coeff) = sqrt_term(lead_exps, lead_coeff).ok_or(LaurentError::NotAPerfectSquare)?;
        // every root term lies at or above sqrt(trailing term) in the order
        let (low_exps, low_coeff) = self.trailing_raw().expect("nonzero");
        let (floor, _) = sqrt_term(low_exps, &low_coeff.abs()).ok_or(LaurentError::NotAPerfectSquare)?;

        let mut root = LaurentPoly::from_raw(ctx, [(g_exps, g_coeff.clone())].into_iter().collect());
        let mut remainder = self - &(&root * &root);

        let support = self.len();
        let max_steps = 4 * support * support;
        let mut last = g_exps;
        for _ in 0..max_steps {
            let Some((r_exps, r_coeff)) = remainder.leading_raw() else {
                return Ok(root);
            };
            let (q, rem) = r_coeff.div_rem(&(&g_coeff * 2));
            if !rem.is_zero() {
                return Err(LaurentError::NotAPerfectSquare);
            }
            let t_exps = [r_exps[0] - g_exps[0], r_exps[1] - g_exps[1]];
            if t_exps >= last || t_exps < floor {
                return Err(LaurentError::NotAPerfectSquare);
            }
            last = t_exps;
            let term = LaurentPoly::from_raw(ctx, [(t_exps, q)].into_iter().collect());
            // (root + t)^2 - (root)^2 = 2*root*t + t^2
            let delta = &(&root * &term).scale(&BigInt::from(2)) + &(&term * &term);
            remainder = &remainder - &delta;
            root = &root + &term;
        }
        if remainder.is_zero() {
            Ok(root)
        } else {
            Err(LaurentError::NotAPerfectSquare)
        }
    }
}
