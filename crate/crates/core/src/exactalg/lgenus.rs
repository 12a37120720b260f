//! Hirzebruch L-polynomials from the characteristic series `x / tanh(x)`.
//!
//! Writing `z = x^2`, the series is `Q(z) = cosh(x) / (sinh(x)/x)`. The degree-k
//! part of `prod_j Q(z_j)` is symmetric in the `z_j`, and we need it in the
//! elementary basis `p_i = e_i(z_1, ..., z_k)`. Taking logs turns the product
//! into `sum_r c_r P_r` over power sums `P_r = sum_j z_j^r`; Newton's identities
//! rewrite each `P_r` in the `p_i`, and the graded exponential recovers the
//! product.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat, ExactRational, Partition, PontryaginPolynomial};
use crate::error::{Error, Result};

/// Largest L-polynomial degree offered by [`l_genus`].
pub const MAX_L_DEGREE: u32 = 5;

type Graded = BTreeMap<Partition, ExactRational>;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Coefficients `q_0..=q_k` of `x / tanh(x)` as a series in `z = x^2`.
pub fn multiplicative_series_coefficients(k: usize) -> Vec<ExactRational> {
    let cosh: Vec<ExactRational> = (0..=k)
        .map(|i| ExactRational::new(BigInt::one(), factorial(2 * i as u32)))
        .collect();
    let sinh_over_x: Vec<ExactRational> = (0..=k)
        .map(|i| ExactRational::new(BigInt::one(), factorial(2 * i as u32 + 1)))
        .collect();
    series_div(&cosh, &sinh_over_x)
}

// Truncated power-series quotient; `den[0]` must be nonzero.
fn series_div(num: &[ExactRational], den: &[ExactRational]) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let mut acc = num[n].clone();
        for i in 1..=n.min(den.len() - 1) {
            acc -= &den[i] * &out[n - i];
        }
        out.push(acc / &den[0]);
    }
    out
}

fn graded_mul(a: &Graded, b: &Graded) -> Graded {
    let mut out = Graded::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            *out.entry(ka.merge(kb)).or_insert_with(ExactRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn graded_add_scaled(acc: &mut Graded, term: &Graded, scale: &ExactRational) {
    for (k, c) in term {
        *acc.entry(k.clone()).or_insert_with(ExactRational::zero) += c * scale;
    }
    acc.retain(|_, c| !c.is_zero());
}

/// Power sums `P_1..=P_k` written in the elementary functions `p_i`.
fn power_sums_in_elementary(k: u32) -> Vec<Graded> {
    // index 0 is unused so that power[r] is P_r
    let mut power: Vec<Graded> = vec![Graded::new()];
    for r in 1..=k {
        let mut pr = Graded::new();
        for i in 1..r {
            let e_i: Graded = [(Partition::single(i), rat(1))].into_iter().collect();
            let sign = if i % 2 == 1 { rat(1) } else { rat(-1) };
            graded_add_scaled(&mut pr, &graded_mul(&e_i, &power[(r - i) as usize]), &sign);
        }
        let sign = if r % 2 == 1 { 1 } else { -1 };
        let last: Graded = [(Partition::single(r), rat(sign * i64::from(r)))]
            .into_iter()
            .collect();
        graded_add_scaled(&mut pr, &last, &rat(1));
        power.push(pr);
    }
    power
}

/// The k-th Hirzebruch L-polynomial, `1 <= k <= MAX_L_DEGREE`.
pub fn l_genus(k: u32) -> Result<PontryaginPolynomial> {
    if !(1..=MAX_L_DEGREE).contains(&k) {
        return Err(Error::Argument(format!(
            "L-polynomial degree must lie in 1..={MAX_L_DEGREE}, got {k}"
        )));
    }
    let q = multiplicative_series_coefficients(k as usize);

    // log Q: (log Q)' = Q'/Q, so c_r = [z^{r-1}](Q'/Q) / r.
    let q_prime: Vec<ExactRational> = (1..q.len()).map(|i| &q[i] * rat(i as i64)).collect();
    let log_derivative = series_div(&q_prime, &q);
    let c: Vec<ExactRational> = std::iter::once(ExactRational::zero())
        .chain(
            log_derivative
                .iter()
                .enumerate()
                .map(|(i, d)| d / rat(i as i64 + 1)),
        )
        .collect();

    let power = power_sums_in_elementary(k);

    // Graded exp: E_0 = 1, E_m = (1/m) sum_{r=1..m} r c_r P_r E_{m-r}.
    let mut exp: Vec<Graded> = vec![[(Partition::empty(), rat(1))].into_iter().collect()];
    for m in 1..=k as usize {
        let mut em = Graded::new();
        for r in 1..=m {
            if c[r].is_zero() {
                continue;
            }
            let scale = &c[r] * rat(r as i64) / rat(m as i64);
            graded_add_scaled(&mut em, &graded_mul(&power[r], &exp[m - r]), &scale);
        }
        exp.push(em);
    }

    PontryaginPolynomial::new(k, exp.pop().unwrap_or_default())
}
