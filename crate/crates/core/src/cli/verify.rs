//! The identity suite behind `torkit verify`.

use crate::families::{self, FamilyError, FamilySpec};
use crate::laurent::LaurentPoly;
use crate::qnumbers;
use crate::report::{IdentityReport, Mismatch};
use crate::skein::{self, SkeinError};

/// Per-family and global checks, sorted by name.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub checks: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityReport::passed)
    }

    /// The failing instance with the smallest index (index-free failures
    /// first), ties broken by check name.
    pub fn first_counterexample(&self) -> Option<(&str, &Mismatch)> {
        self.checks
            .iter()
            .flat_map(|c| c.failures.iter().map(move |m| (c.name.as_str(), m)))
            .min_by(|a, b| (a.1.n, a.0).cmp(&(b.1.n, b.0)))
    }
}

fn closed_form_check(f: &FamilySpec, n_max: u32) -> Option<IdentityReport> {
    let form = f.closed_form.as_ref()?;
    let mut report = IdentityReport::new(format!("closed-form-vs-recurrence/{}", f.name));
    let seq = match f.sequence(n_max) {
        Ok(s) => s,
        Err(e) => {
            report.error(Some(n_max), e);
            return Some(report);
        }
    };
    for (n, value) in seq.iter() {
        match form.at(n / 2) {
            Ok(closed) => report.check(n, closed, value.clone()),
            Err(e) => report.error(Some(n), e),
        }
    }
    Some(report)
}

/// The full skein recurrence reproduces the odd-step values, and every
/// consecutive triple satisfies the relation as written. Without a
/// polynomial T(2,2) value the sequence is scaled by `l1`.
fn skein_checks(f: &FamilySpec, n_max: u32) -> Vec<IdentityReport> {
    let mut odd_vs_full = IdentityReport::new(format!("full-vs-odd-step/{}", f.name));
    let mut relation = IdentityReport::new(format!("skein-relation/{}", f.name));
    let ctx = f.context.clone();
    let (base1, base2, scale) = match &f.link_base {
        Some(b) => (LaurentPoly::one(&ctx), b.clone(), LaurentPoly::one(&ctx)),
        None => (f.skein.l1.clone(), skein::scaled_link_base(&f.skein), f.skein.l1.clone()),
    };
    let full = skein::gen_full_sequence(&f.skein, &base1, &base2, n_max);
    let odd = skein::gen_odd_sequence(&f.knot_step, n_max);
    match (full, odd) {
        (Ok(full), Ok(odd)) => {
            for (n, p) in odd.iter() {
                odd_vs_full.check(n, full.get(n).expect("same range").clone(), &scale * p);
            }
            for n in 2..n_max {
                let triple = (full.get(n + 1), full.get(n), full.get(n - 1));
                if let (Some(plus), Some(zero), Some(minus)) = triple {
                    match f.relation.residual(plus, zero, minus) {
                        Ok(r) => relation.check(n + 1, r, LaurentPoly::zero(&ctx)),
                        Err(e) => relation.error(Some(n + 1), e),
                    }
                }
            }
        }
        (Err(e), _) | (_, Err(e)) => odd_vs_full.error(Some(n_max), e),
    }
    vec![odd_vs_full, relation]
}

fn round_trip_check(f: &FamilySpec) -> IdentityReport {
    let mut report = IdentityReport::new(format!("l-k-round-trip/{}", f.name));
    let result: Result<_, SkeinError> = (|| {
        let k = skein::l_to_k(&f.skein)?;
        let back = skein::l_to_k(&skein::k_to_l(&k)?)?;
        Ok((k, back))
    })();
    match result {
        Ok((k, back)) => {
            report.check_identity(back.k1, k.k1);
            report.check_identity(back.k2, k.k2);
        }
        Err(e) => report.error(None, e),
    }
    report
}

fn ansatz_check(f: &FamilySpec, n_max: u32) -> Option<IdentityReport> {
    let (u, v) = skein::solve_parameters(&f.knot_step).ok()?;
    let mut report = IdentityReport::new(format!("ansatz-fit/{}", f.name));
    let seq = match f.sequence(n_max) {
        Ok(s) => s,
        Err(e) => {
            report.error(Some(n_max), e);
            return Some(report);
        }
    };
    match skein::fit_ansatz(&seq, &u, &v) {
        Ok(fit) => {
            report.checked += seq.iter().count();
            if let Some(expected) = &f.expected_ansatz {
                report.check_identity(fit.a1, expected.a1.clone());
                report.check_identity(fit.a2, expected.a2.clone());
            }
        }
        Err(SkeinError::AnsatzMismatch { n, expected, actual }) => report.check(n, expected, actual),
        Err(e) => report.error(Some(3), e),
    }
    Some(report)
}

fn family_result(
    name: &str,
    n_max: u32,
    mut pair: impl FnMut(u32) -> Result<(LaurentPoly, LaurentPoly), FamilyError>,
) -> IdentityReport {
    let mut report = IdentityReport::new(name);
    for n in (1..=n_max).step_by(2) {
        match pair(n) {
            Ok((lhs, rhs)) => report.check(n, lhs, rhs),
            Err(e) => report.error(Some(n), e),
        }
    }
    report
}

fn global_checks(n_max: u32) -> Vec<IdentityReport> {
    use families::*;
    let mut checks = vec![
        qnumbers::verify_q_recurrence(n_max),
        qnumbers::verify_qp_recurrence(n_max),
        qnumbers::verify_symmetric_reduction(n_max),
    ];
    checks.push(family_result("square/generalized-to-alexander", n_max, |n| {
        Ok((to_alexander(&generalized_alexander_torus(n)?)?, alexander_torus(n)?))
    }));
    checks.push(family_result("square/generalized-to-jones", n_max, |n| {
        Ok((to_jones(&generalized_alexander_torus(n)?)?, jones_torus(n)?))
    }));
    checks.push(family_result("square/homfly-to-generalized", n_max, |n| {
        Ok((homfly_to_generalized(&homfly_torus(n)?)?, generalized_alexander_torus(n)?))
    }));
    checks.push(family_result("symmetry/generalized-alexander-q-p", n_max, |n| {
        let f = generalized_alexander_torus(n)?;
        Ok((f.swap_variables(), f))
    }));
    checks.push(family_result("symmetry/alexander-t-inverse", n_max, |n| {
        let f = alexander_torus(n)?;
        Ok((f.invert_variables(), f))
    }));
    checks
}

/// Runs every check for the built-in families plus `extra`.
pub fn run_suite(n_max: u32, extra: &[FamilySpec]) -> SuiteReport {
    let mut checks = global_checks(n_max);
    for f in families::registry().iter().chain(extra) {
        checks.extend(closed_form_check(f, n_max));
        checks.extend(skein_checks(f, n_max));
        checks.push(round_trip_check(f));
        checks.extend(ansatz_check(f, n_max));
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    SuiteReport { checks }
}
