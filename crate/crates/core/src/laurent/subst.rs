use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Exps, LaurentError, LaurentPoly, Monomial, QuarterExp, Result, VarContext};

/// `base` quarters raised to the power `e` quarters, in quarters.
fn scale_exp(e: QuarterExp, base: QuarterExp) -> Result<QuarterExp> {
    let prod = e.quarters() * base.quarters();
    if prod % 4 != 0 {
        return Err(LaurentError::ExponentTooFine);
    }
    Ok(QuarterExp(prod / 4))
}

fn monomial_power(var: &str, m: &Monomial, e: QuarterExp) -> Result<(Exps, BigInt)> {
    let raw = m.raw_exps();
    let exps = [scale_exp(e, raw[0])?, scale_exp(e, raw[1])?];
    let c = m.coeff();
    let coeff = if c.is_one() || e.quarters() == 0 {
        BigInt::one()
    } else {
        let k = e.as_int().ok_or_else(|| LaurentError::InvalidAssignment {
            var: var.to_string(),
            reason: format!("coefficient {c} cannot be raised to a fractional power"),
        })?;
        if c == &BigInt::from(-1) {
            if k % 2 == 0 {
                BigInt::one()
            } else {
                BigInt::from(-1)
            }
        } else if k >= 0 {
            num_traits::pow(c.clone(), k as usize)
        } else {
            return Err(LaurentError::InvalidAssignment {
                var: var.to_string(),
                reason: format!("coefficient {c} cannot be raised to a negative power"),
            });
        }
    };
    Ok((exps, coeff))
}

fn assignment_for<'a, V>(ctx: &VarContext, assignments: &'a [(&str, V)]) -> Result<Vec<&'a V>> {
    ctx.names()
        .iter()
        .map(|name| {
            assignments
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v)
                .ok_or_else(|| LaurentError::MissingAssignment(name.clone()))
        })
        .collect()
}

impl LaurentPoly {
    /// Substitutes every variable by a signed unit monomial of `target`.
    ///
    /// `assignments` pairs each variable name of this polynomial's context
    /// with a monomial in the target context whose coefficient is `1` or `-1`.
    /// Exponents multiply in quarter units.
    pub fn substitute_monomial(
        &self,
        target: &Arc<VarContext>,
        assignments: &[(&str, Monomial)],
    ) -> Result<LaurentPoly> {
        let images = assignment_for(self.context(), assignments)?;
        for (name, m) in self.context().names().iter().zip(&images) {
            if m.context().as_ref() != target.as_ref() {
                return Err(LaurentError::ContextMismatch {
                    left: m.context().to_string(),
                    right: target.to_string(),
                });
            }
            if !m.coeff().abs().is_one() {
                return Err(LaurentError::InvalidAssignment {
                    var: name.clone(),
                    reason: format!("coefficient must be 1 or -1, got {}", m.coeff()),
                });
            }
        }
        let names = self.context().names();
        let mut out = LaurentPoly::zero(target);
        for (exps, c) in self.raw_terms() {
            let mut img_exps = [QuarterExp::ZERO; 2];
            let mut coeff = c.clone();
            for (i, m) in images.iter().enumerate() {
                let (e, s) = monomial_power(&names[i], m, exps[i])?;
                img_exps = [img_exps[0] + e[0], img_exps[1] + e[1]];
                coeff *= s;
            }
            out.add_term(img_exps, coeff);
        }
        Ok(out)
    }

    /// Substitutes every variable by an arbitrary polynomial of a common
    /// target context.
    ///
    /// A multi-term image may only be raised to nonnegative integral powers.
    /// Single-term images follow the rules of
    /// [`LaurentPoly::substitute_monomial`], except that a non-unit
    /// coefficient is allowed under a nonnegative integral power.
    pub fn substitute_poly(&self, assignments: &[(&str, LaurentPoly)]) -> Result<LaurentPoly> {
        let images = assignment_for(self.context(), assignments)?;
        let target = images[0].context().clone();
        for img in &images[1..] {
            if img.context().as_ref() != target.as_ref() {
                return Err(LaurentError::ContextMismatch {
                    left: target.to_string(),
                    right: img.context().to_string(),
                });
            }
        }
        let names = self.context().names();
        let mut powers: Vec<HashMap<i64, LaurentPoly>> = vec![HashMap::new(); images.len()];
        let mut out = LaurentPoly::zero(&target);
        for (exps, c) in self.raw_terms() {
            let mut acc = LaurentPoly::constant(&target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = exps[i];
                if e.quarters() == 0 {
                    continue;
                }
                let factor = if img.len() == 1 {
                    let m = img.leading_term().expect("single term");
                    let (pe, pc) = monomial_power(&names[i], &m, e)?;
                    LaurentPoly::from_raw(&target, [(pe, pc)].into_iter().collect())
                } else {
                    if e.quarters() < 0 {
                        return Err(LaurentError::NegativePowerOfPolynomial(names[i].clone()));
                    }
                    let k = e
                        .as_int()
                        .ok_or_else(|| LaurentError::FractionalPowerOfPolynomial(names[i].clone()))?;
                    powers[i].entry(k).or_insert_with(|| img.pow(k as u32)).clone()
                };
                acc = &acc * &factor;
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(names: &[&str]) -> Arc<VarContext> {
        VarContext::new(names).unwrap()
    }

    fn mono(c: &Arc<VarContext>, exps: &[i64], coeff: i64) -> Monomial {
        let e: Vec<_> = exps.iter().map(|&q| QuarterExp(q)).collect();
        Monomial::new(c, &e, coeff).unwrap()
    }

    #[test]
    fn jones_specialization_of_trefoil() {
        let qp = ctx(&["q", "p"]);
        let t = ctx(&["t"]);
        let f = LaurentPoly::parse("q + p - q*p", &qp).unwrap();
        let g = f.substitute_monomial(&t, &[("q", mono(&t, &[12], 1)), ("p", mono(&t, &[4], 1))]).unwrap();
        assert_eq!(g, LaurentPoly::parse("t^3 + t - t^4", &t).unwrap());
    }

    #[test]
    fn identity_assignment() {
        let qp = ctx(&["q", "p"]);
        let f = LaurentPoly::parse("q^(3/4)*p^(-1/2) - 5*q + 2", &qp).unwrap();
        let g = f
            .substitute_monomial(&qp, &[("q", mono(&qp, &[4, 0], 1)), ("p", mono(&qp, &[0, 4], 1))])
            .unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn single_variable_passthrough() {
        let q = ctx(&["q"]);
        let f = LaurentPoly::parse("q - 1 + q^(-1)", &q).unwrap();
        let g = f.substitute_monomial(&q, &[("q", mono(&q, &[4], 1)), ("p", mono(&q, &[0], 1))]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn missing_and_invalid_assignments() {
        let qp = ctx(&["q", "p"]);
        let f = LaurentPoly::parse("q + p", &qp).unwrap();
        assert_eq!(
            f.substitute_monomial(&qp, &[("q", mono(&qp, &[4, 0], 1))]),
            Err(LaurentError::MissingAssignment("p".into()))
        );
        assert!(matches!(
            f.substitute_monomial(&qp, &[("q", mono(&qp, &[4, 0], 2)), ("p", mono(&qp, &[0, 4], 1))]),
            Err(LaurentError::InvalidAssignment { .. })
        ));
        let half = LaurentPoly::parse("q^(1/2)", &qp).unwrap();
        assert!(matches!(
            half.substitute_monomial(&qp, &[("q", mono(&qp, &[4, 0], -1)), ("p", mono(&qp, &[0, 4], 1))]),
            Err(LaurentError::InvalidAssignment { .. })
        ));
        let quarter = LaurentPoly::parse("q^(1/4)", &qp).unwrap();
        assert_eq!(
            quarter.substitute_monomial(&qp, &[("q", mono(&qp, &[1, 0], 1)), ("p", mono(&qp, &[0, 4], 1))]),
            Err(LaurentError::ExponentTooFine)
        );
    }

    #[test]
    fn negative_unit_signs() {
        let q = ctx(&["q"]);
        let f = LaurentPoly::parse("q^3 + q^2 + q^(-1)", &q).unwrap();
        let g = f.substitute_monomial(&q, &[("q", mono(&q, &[4], -1))]).unwrap();
        assert_eq!(g, LaurentPoly::parse("-q^3 + q^2 - q^(-1)", &q).unwrap());
    }

    #[test]
    fn homfly_trefoil_to_two_parameter() {
        let az = ctx(&["a", "z"]);
        let qp = ctx(&["q", "p"]);
        let f = LaurentPoly::parse("a^2*z^2 + 2*a^2 - a^4", &az).unwrap();
        let a = LaurentPoly::parse("q^(1/4)*p^(1/4)", &qp).unwrap();
        let z = LaurentPoly::parse("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)", &qp).unwrap();
        let g = f.substitute_poly(&[("a", a), ("z", z)]).unwrap();
        assert_eq!(g, LaurentPoly::parse("q + p - q*p", &qp).unwrap());
    }

    #[test]
    fn substitute_poly_identity() {
        let az = ctx(&["a", "z"]);
        let f = LaurentPoly::parse("a^(-3)*z^2 - 4*z + a^(1/2)", &az).unwrap();
        let a = LaurentPoly::var(&az, "a").unwrap();
        let z = LaurentPoly::var(&az, "z").unwrap();
        assert_eq!(f.substitute_poly(&[("a", a), ("z", z)]).unwrap(), f);
    }

    #[test]
    fn negative_power_of_polynomial() {
        let a = ctx(&["a"]);
        let q = ctx(&["q"]);
        let f = LaurentPoly::parse("a^(-1)", &a).unwrap();
        let img = LaurentPoly::parse("1 + q", &q).unwrap();
        assert_eq!(
            f.substitute_poly(&[("a", img.clone())]),
            Err(LaurentError::NegativePowerOfPolynomial("a".into()))
        );
        let h = LaurentPoly::parse("a^(1/2)", &a).unwrap();
        assert_eq!(
            h.substitute_poly(&[("a", img)]),
            Err(LaurentError::FractionalPowerOfPolynomial("a".into()))
        );
    }

    #[test]
    fn non_unit_monomial_images() {
        let a = ctx(&["a"]);
        let q = ctx(&["q"]);
        let f = LaurentPoly::parse("a^2 + a", &a).unwrap();
        let img = LaurentPoly::parse("3*q", &q).unwrap();
        assert_eq!(
            f.substitute_poly(&[("a", img.clone())]).unwrap(),
            LaurentPoly::parse("9*q^2 + 3*q", &q).unwrap()
        );
        let inv = LaurentPoly::parse("a^(-1)", &a).unwrap();
        assert!(matches!(inv.substitute_poly(&[("a", img)]), Err(LaurentError::InvalidAssignment { .. })));
    }
}
