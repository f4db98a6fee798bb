use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LaurentError, LaurentPoly, Result};

/// `base^0, base^1, ..., base^max`.
fn powers(base: &BigInt, max: i64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BigInt::one());
    for k in 1..=max as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl LaurentPoly {
    /// Exact value at a rational point. All exponents must be integral;
    /// clear quarter powers first with a substitution such as `q -> s^4`.
    ///
    /// Works over a common denominator: with `x = n/d` and exponents in
    /// `[lo, hi]` (widened to contain 0), `x^e = n^(e-lo) d^(hi-e) / (n^-lo d^hi)`,
    /// so the sum is accumulated in integers and reduced once.
    pub fn eval_rational(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let ctx = self.context();
        let mut values = Vec::with_capacity(ctx.arity());
        for name in ctx.names() {
            let v = point
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v)
                .ok_or_else(|| LaurentError::MissingAssignment(name.clone()))?;
            if v.is_zero() {
                return Err(LaurentError::ZeroBase(name.clone()));
            }
            values.push(v);
        }
        let mut terms = Vec::with_capacity(self.len());
        let mut lo = vec![0i64; values.len()];
        let mut hi = vec![0i64; values.len()];
        for (exps, c) in self.raw_terms() {
            let mut ints = [0i64; 2];
            for i in 0..values.len() {
                let k = exps[i]
                    .as_int()
                    .ok_or_else(|| LaurentError::NonIntegralExponent(ctx.names()[i].clone()))?;
                lo[i] = lo[i].min(k);
                hi[i] = hi[i].max(k);
                ints[i] = k;
            }
            terms.push((ints, c));
        }
        let numer_pows: Vec<_> =
            values.iter().zip(&lo).zip(&hi).map(|((v, l), h)| powers(v.numer(), h - l)).collect();
        let denom_pows: Vec<_> =
            values.iter().zip(&lo).zip(&hi).map(|((v, l), h)| powers(v.denom(), h - l)).collect();
        let mut numer = BigInt::zero();
        for (ints, c) in terms {
            let mut term = c.clone();
            for i in 0..values.len() {
                term *= &numer_pows[i][(ints[i] - lo[i]) as usize];
                term *= &denom_pows[i][(hi[i] - ints[i]) as usize];
            }
            numer += term;
        }
        let mut denom = BigInt::one();
        for i in 0..values.len() {
            denom *= &numer_pows[i][(-lo[i]) as usize];
            denom *= &denom_pows[i][hi[i] as usize];
        }
        Ok(BigRational::new(numer, denom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarContext;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn alexander_trefoil_at_two() {
        let q = VarContext::new(&["q"]).unwrap();
        let f = LaurentPoly::parse("q - 1 + q^(-1)", &q).unwrap();
        assert_eq!(f.eval_rational(&[("q", r(2, 1))]).unwrap(), r(3, 2));
    }

    #[test]
    fn zero_polynomial() {
        let q = VarContext::new(&["q"]).unwrap();
        assert!(LaurentPoly::zero(&q).eval_rational(&[("q", r(-7, 3))]).unwrap().is_zero());
    }

    #[test]
    fn two_parameter_trefoil() {
        let qp = VarContext::new(&["q", "p"]).unwrap();
        let f = LaurentPoly::parse("q + p - q*p", &qp).unwrap();
        assert_eq!(f.eval_rational(&[("q", r(2, 1)), ("p", r(3, 1))]).unwrap(), r(-1, 1));
    }

    #[test]
    fn negative_bases_and_exponents() {
        let qp = VarContext::new(&["q", "p"]).unwrap();
        let f = LaurentPoly::parse("3*q^(-2)*p^3 - q^5 + 2*p^(-1) + 7", &qp).unwrap();
        let (x, y) = (r(-2, 3), r(5, -7));
        let expected = r(3, 1) * r(9, 4) * r(-125, 343) - r(-32, 243) + r(2, 1) * r(-7, 5) + r(7, 1);
        assert_eq!(f.eval_rational(&[("q", x), ("p", y)]).unwrap(), expected);
    }

    #[test]
    fn errors() {
        let qp = VarContext::new(&["q", "p"]).unwrap();
        let f = LaurentPoly::parse("q^(1/2) + p", &qp).unwrap();
        assert_eq!(
            f.eval_rational(&[("q", r(4, 1)), ("p", r(1, 1))]),
            Err(LaurentError::NonIntegralExponent("q".into()))
        );
        assert_eq!(
            f.eval_rational(&[("q", r(0, 1)), ("p", r(1, 1))]),
            Err(LaurentError::ZeroBase("q".into()))
        );
        assert_eq!(f.eval_rational(&[("q", r(1, 1))]), Err(LaurentError::MissingAssignment("p".into())));
    }
}
