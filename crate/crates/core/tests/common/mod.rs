//! Oracles shared by the integration tests. Nothing here calls into the
//! localization or L-genus code of the crate.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `p_I[CP^n]` read off the total class `(1 + x²)^{n+1}`: `∏ C(n+1, i_k)`.
pub fn cp_pontryagin(n: u64, parts: &[u64]) -> BigInt {
    parts.iter().map(|&i| binomial(n + 1, i)).product()
}

/// Power series coefficients of `x / tanh x` in `x`, up to `x^(len-1)`,
/// as `cosh x` divided by `sinh x / x`.
pub fn x_over_tanh(len: usize) -> Vec<BigRational> {
    let mut fact = vec![BigInt::one()];
    for i in 1..=len + 1 {
        let next = &fact[i - 1] * BigInt::from(i);
        fact.push(next);
    }
    let even = |k: usize, f: &BigInt| {
        if k.is_multiple_of(2) {
            BigRational::new(BigInt::one(), f.clone())
        } else {
            BigRational::zero()
        }
    };
    let cosh: Vec<BigRational> = (0..len).map(|k| even(k, &fact[k])).collect();
    let sinh_over_x: Vec<BigRational> = (0..len).map(|k| even(k, &fact[k + 1])).collect();
    let mut out: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = cosh[k].clone();
        for j in 0..k {
            acc -= &out[j] * &sinh_over_x[k - j];
        }
        out.push(acc);
    }
    out
}

pub fn series_pow(a: &[BigRational], e: usize) -> Vec<BigRational> {
    let len = a.len();
    let mut out = vec![BigRational::zero(); len];
    out[0] = q(1);
    for _ in 0..e {
        let mut next = vec![BigRational::zero(); len];
        for i in 0..len {
            for j in 0..len - i {
                next[i + j] += &out[i] * &a[j];
            }
        }
        out = next;
    }
    out
}

/// Signature of `CP^n` from the coefficient of `x^n` in `(x / tanh x)^{n+1}`.
pub fn cp_signature(n: usize) -> BigRational {
    series_pow(&x_over_tanh(n + 1), n + 1)[n].clone()
}
