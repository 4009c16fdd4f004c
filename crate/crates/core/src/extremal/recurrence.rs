//! The comparison sequence a_n and the growth root α.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use crate::surd::QuadSurd;

/// α = ((PQ−2) + √((PQ−2)² − 4)) / 2, the larger root of x² − (PQ−2)x + 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaValue {
    pub trace: i64,
    pub discriminant: i64,
    pub approx: f64,
}

impl AlphaValue {
    pub fn new(p: u32, q: u32) -> Self {
        let pq = (p as i64 - 2) * (q as i64 - 2);
        let trace = pq - 2;
        let discriminant = trace * trace - 4;
        let approx = (trace as f64 + (discriminant.max(0) as f64).sqrt()) / 2.0;
        AlphaValue { trace, discriminant, approx }
    }

    pub fn as_surd(&self) -> QuadSurd {
        QuadSurd::new(ExactScalar::ratio(self.trace, 2), ExactScalar::ratio(1, 2), BigInt::from(self.discriminant.max(0)))
    }

    pub fn exceeds_one(&self) -> bool {
        self.as_surd().cmp_rational(&ExactScalar::one()) == Ordering::Greater
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceSeq {
    pub p: u32,
    pub q: u32,
    pub big_p: i64,
    pub big_q: i64,
    pub alpha: AlphaValue,
    pub t0: ExactScalar,
    pub terms: Vec<ExactScalar>,
    pub observed: Vec<i64>,
    /// s_0 + … + s_k ≤ a_0 + … + a_k for every k < N.
    pub dominated: bool,
    /// a_0 + … + a_{N−1} ≤ a_N / (α − 1).
    pub telescoped: bool,
    /// a_n − (PQ−2)a_{n−1} + a_{n−2} = 0 for n ≥ 3.
    pub linear: bool,
}

/// a_0 = t, a_1 = (PQ−3)t + 2q − 1, a_n = a_{n−1} + (PQ−4)(a_0 + … + a_{n−1}) + 2q.
fn terms(t: &ExactScalar, pq4: i64, q: i64, len: usize) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(len);
    let mut sum = ExactScalar::zero();
    for n in 0..len {
        let a = match n {
            0 => t.clone(),
            1 => &(t * &ExactScalar::from_int(pq4 + 1)) + &ExactScalar::from_int(2 * q - 1),
            _ => &(&out[n - 1] + &(&sum * &ExactScalar::from_int(pq4))) + &ExactScalar::from_int(2 * q),
        };
        sum += a.clone();
        out.push(a);
    }
    out
}

/// Solves for t₀ with a_N = s_N and checks the comparison inequalities exactly.
pub fn solve_recurrence(p: u32, q: u32, observed: &[i64]) -> Result<RecurrenceSeq> {
    let (big_p, big_q) = (p as i64 - 2, q as i64 - 2);
    match (big_p * big_q).cmp(&4) {
        Ordering::Less => return Err(Error::SphericalParameters(p, q)),
        Ordering::Equal => return Err(Error::ParabolicParameters(p, q)),
        Ordering::Greater => {}
    }
    if observed.is_empty() {
        return Err(Error::Input("empty layer sequence".into()));
    }
    let pq4 = big_p * big_q - 4;
    let n = observed.len() - 1;
    let at0 = terms(&ExactScalar::zero(), pq4, q as i64, n + 1);
    let at1 = terms(&ExactScalar::one(), pq4, q as i64, n + 1);
    // a_N is affine in t with positive slope.
    let slope = &at1[n] - &at0[n];
    let t0 = &(&ExactScalar::from_int(observed[n]) - &at0[n]) / &slope;
    let a = terms(&t0, pq4, q as i64, n + 1);

    let mut dominated = true;
    let (mut ss, mut sa) = (0i64, ExactScalar::zero());
    for k in 0..n {
        ss += observed[k];
        sa += a[k].clone();
        if ExactScalar::from_int(ss) > sa {
            dominated = false;
        }
    }
    let alpha = AlphaValue::new(p, q);
    // a_N/(α−1) − Σ_{k<N} a_k ≥ 0
    let am1 = alpha.as_surd().sub(&QuadSurd::rational(ExactScalar::one()));
    let head: ExactScalar = a[..n].iter().fold(ExactScalar::zero(), |acc, x| &acc + x);
    let gap = QuadSurd::rational(a[n].clone()).div(&am1).sub(&QuadSurd::rational(head));
    let telescoped = gap.signum() >= 0;
    let tr = ExactScalar::from_int(alpha.trace);
    let linear = (3..=n).all(|k| (&(&a[k] - &(&tr * &a[k - 1])) + &a[k - 2]).is_zero());
    Ok(RecurrenceSeq { p, q, big_p, big_q, alpha, t0, terms: a, observed: observed.to_vec(), dominated, telescoped, linear })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heptagonal_layers_saturate() {
        let r = solve_recurrence(7, 3, &[1, 7, 21]).unwrap();
        assert_eq!(r.t0, ExactScalar::one());
        let ints: Vec<ExactScalar> = [1, 7, 21].iter().map(|&x| ExactScalar::from_int(x)).collect();
        assert_eq!(r.terms, ints);
        assert!(r.dominated && r.telescoped && r.linear);
        assert!((r.alpha.approx - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_values() {
        assert!((AlphaValue::new(4, 6).approx - 5.828_427_1).abs() < 1e-7);
        assert!(AlphaValue::new(7, 3).exceeds_one());
        assert!(!AlphaValue::new(6, 3).exceeds_one());
    }

    #[test]
    fn parabolic_rejected() {
        assert!(matches!(solve_recurrence(6, 3, &[1, 6]), Err(Error::ParabolicParameters(6, 3))));
        assert!(matches!(solve_recurrence(4, 4, &[1]), Err(Error::ParabolicParameters(4, 4))));
    }

    #[test]
    fn longer_runs_stay_linear() {
        let r = solve_recurrence(7, 3, &[1, 7, 21, 56, 147, 385]).unwrap();
        assert!(r.linear && r.dominated && r.telescoped);
        assert_eq!(r.t0, ExactScalar::one());
    }
}
