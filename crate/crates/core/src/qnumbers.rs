//! Deformed integers.
//!
//! * symmetric q-numbers `[n]_q = (q^n - q^-n)/(q - q^-1)`,
//! * two-parameter q,p-numbers `[n]_{q,p} = (q^n - p^n)/(q - p)`,
//! * the Jones specialization `[n]_{t^3,t}`.
//!
//! All are built as explicit finite sums; the quotient forms are checked as
//! identities in the tests, never used for construction.

use std::sync::Arc;

use crate::laurent::{LaurentPoly, Monomial, QuarterExp, Result, VarContext};
use crate::report::IdentityReport;
use crate::vars;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QNumberKind {
    /// `[n]_q`, in the variable `q`.
    SymmetricQ,
    /// `[n]_{q,p}`, in the variables `q, p`.
    TwoParameter,
    /// `[n]_{t^3,t}`, in the variable `t`.
    JonesSpecial,
}

impl QNumberKind {
    pub fn build(self, n: u32) -> LaurentPoly {
        match self {
            QNumberKind::SymmetricQ => q_number(n),
            QNumberKind::TwoParameter => qp_number(n),
            QNumberKind::JonesSpecial => jones_q_number(n),
        }
    }
}

/// `[n]_q = sum_{j=0}^{n-1} q^{n-1-2j}`.
pub fn q_number(n: u32) -> LaurentPoly {
    let ctx = vars::q();
    let n = i64::from(n);
    let terms = (0..n).map(|j| (vec![QuarterExp::from_int(n - 1 - 2 * j)], 1));
    LaurentPoly::from_terms(&ctx, terms).expect("one exponent per term")
}

/// `[n]_{q,p} = sum_{j=0}^{n-1} q^{n-1-j} p^j`.
pub fn qp_number(n: u32) -> LaurentPoly {
    let ctx = vars::qp();
    let n = i64::from(n);
    let terms = (0..n).map(|j| (vec![QuarterExp::from_int(n - 1 - j), QuarterExp::from_int(j)], 1));
    LaurentPoly::from_terms(&ctx, terms).expect("two exponents per term")
}

/// `[n]_{t^3,t} = sum_{j=0}^{n-1} t^{3(n-1-j)+j}`.
pub fn jones_q_number(n: u32) -> LaurentPoly {
    let ctx = vars::t();
    let n = i64::from(n);
    let terms = (0..n).map(|j| (vec![QuarterExp::from_int(3 * (n - 1 - j) + j)], 1));
    LaurentPoly::from_terms(&ctx, terms).expect("one exponent per term")
}

/// `[n]_{u,v}` for two signed unit monomials `u`, `v` of a common context:
/// `[n]_{q,p}` under `q -> u`, `p -> v`.
pub fn qp_number_at(n: u32, u: &Monomial, v: &Monomial) -> Result<LaurentPoly> {
    let ctx: &Arc<VarContext> = u.context();
    qp_number(n).substitute_monomial(ctx, &[("q", u.clone()), ("p", v.clone())])
}

/// Checks `[n+1]_q = (q + q^-1)[n]_q - [n-1]_q` for `1 <= n <= n_max`.
pub fn verify_q_recurrence(n_max: u32) -> IdentityReport {
    let ctx = vars::q();
    let step = LaurentPoly::parse("q + q^(-1)", &ctx).expect("literal");
    let mut report = IdentityReport::new("q-recurrence");
    for n in 1..=n_max {
        let lhs = q_number(n + 1);
        let rhs = &(&step * &q_number(n)) - &q_number(n - 1);
        report.check(n, lhs, rhs);
    }
    report
}

/// Checks `[n+1]_{q,p} = (q + p)[n]_{q,p} - qp[n-1]_{q,p}` for `1 <= n <= n_max`.
pub fn verify_qp_recurrence(n_max: u32) -> IdentityReport {
    let ctx = vars::qp();
    let sum = LaurentPoly::parse("q + p", &ctx).expect("literal");
    let prod = LaurentPoly::parse("q*p", &ctx).expect("literal");
    let mut report = IdentityReport::new("qp-recurrence");
    for n in 1..=n_max {
        let lhs = qp_number(n + 1);
        let rhs = &(&sum * &qp_number(n)) - &(&prod * &qp_number(n - 1));
        report.check(n, lhs, rhs);
    }
    report
}

/// Checks that `[n]_{q,p}` at `p = q^-1` equals `[n]_q` for `0 <= n <= n_max`.
pub fn verify_symmetric_reduction(n_max: u32) -> IdentityReport {
    let q = vars::q();
    let to_q = Monomial::new(&q, &[QuarterExp::from_int(1)], 1).expect("monomial");
    let to_inv = Monomial::new(&q, &[QuarterExp::from_int(-1)], 1).expect("monomial");
    let mut report = IdentityReport::new("qp-reduction-to-q");
    for n in 0..=n_max {
        let lhs = qp_number(n)
            .substitute_monomial(&q, &[("q", to_q.clone()), ("p", to_inv.clone())])
            .expect("total assignment");
        report.check(n, lhs, q_number(n));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str, ctx: &Arc<VarContext>) -> LaurentPoly {
        LaurentPoly::parse(s, ctx).unwrap()
    }

    #[test]
    fn listed_q_numbers() {
        let q = vars::q();
        assert!(q_number(0).is_zero());
        assert!(q_number(1).is_one());
        assert_eq!(q_number(2), p("q + q^(-1)", &q));
        assert_eq!(q_number(3), p("q^2 + 1 + q^(-2)", &q));
        assert_eq!(q_number(4), p("q^3 + q + q^(-1) + q^(-3)", &q));
    }

    #[test]
    fn listed_qp_numbers() {
        let qp = vars::qp();
        assert!(qp_number(0).is_zero());
        assert!(qp_number(1).is_one());
        assert_eq!(qp_number(2), p("q + p", &qp));
        assert_eq!(qp_number(3), p("q^2 + q*p + p^2", &qp));
        assert_eq!(qp_number(4), p("q^3 + q^2*p + q*p^2 + p^3", &qp));
    }

    #[test]
    fn quotient_identities() {
        let q = vars::q();
        let qp = vars::qp();
        let t = vars::t();
        for n in 0..30u32 {
            let k = i64::from(n);
            // (q - q^-1)[n]_q = q^n - q^-n
            let lhs = &p("q - q^(-1)", &q) * &q_number(n);
            let rhs = LaurentPoly::from_terms(
                &q,
                [(vec![QuarterExp::from_int(k)], 1), (vec![QuarterExp::from_int(-k)], -1)],
            )
            .unwrap();
            assert_eq!(lhs, rhs, "q-number {n}");
            // (q - p)[n]_{q,p} = q^n - p^n
            let lhs = &p("q - p", &qp) * &qp_number(n);
            let rhs = LaurentPoly::from_terms(
                &qp,
                [
                    (vec![QuarterExp::from_int(k), QuarterExp::ZERO], 1),
                    (vec![QuarterExp::ZERO, QuarterExp::from_int(k)], -1),
                ],
            )
            .unwrap();
            assert_eq!(lhs, rhs, "q,p-number {n}");
            // (t^3 - t)[n]_{t^3,t} = t^{3n} - t^n
            let lhs = &p("t^3 - t", &t) * &jones_q_number(n);
            let rhs = LaurentPoly::from_terms(
                &t,
                [(vec![QuarterExp::from_int(3 * k)], 1), (vec![QuarterExp::from_int(k)], -1)],
            )
            .unwrap();
            assert_eq!(lhs, rhs, "jones q-number {n}");
        }
    }

    #[test]
    fn recurrences_hold() {
        let r = verify_q_recurrence(1);
        assert!(r.passed());
        assert_eq!(r.checked, 1);
        assert!(verify_q_recurrence(50).passed());
        assert!(verify_qp_recurrence(1).passed());
        assert!(verify_qp_recurrence(50).passed());
        assert!(verify_symmetric_reduction(100).passed());
    }

    #[test]
    fn jones_special_is_two_parameter_specialization() {
        let t = vars::t();
        let t3 = Monomial::new(&t, &[QuarterExp::from_int(3)], 1).unwrap();
        let t1 = Monomial::new(&t, &[QuarterExp::from_int(1)], 1).unwrap();
        for n in 0..40 {
            let sub = qp_number(n).substitute_monomial(&t, &[("q", t3.clone()), ("p", t1.clone())]).unwrap();
            assert_eq!(sub, jones_q_number(n));
            assert_eq!(qp_number_at(n, &t3, &t1).unwrap(), sub);
            assert_eq!(QNumberKind::JonesSpecial.build(n), sub);
        }
    }

    #[test]
    fn structure() {
        for n in 0..60u32 {
            let f = q_number(n);
            assert_eq!(f.len(), n as usize);
            assert!(f.terms().all(|m| m.coeff().is_one()));
            assert_eq!(f.invert_variables(), f);

            let g = qp_number(n);
            assert_eq!(g.swap_variables(), g);
            assert!(g
                .terms()
                .all(|m| m.exps()[0].quarters() + m.exps()[1].quarters() == 4 * (i64::from(n) - 1)));
        }
    }
}
