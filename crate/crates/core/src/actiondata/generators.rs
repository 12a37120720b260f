use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::{validate, CircleActionData, IsolatedFixedPoint, Sign};
use crate::error::{Error, Result};

/// Linear action `z.[z_0 : ... : z_n] = [z^{a_0} z_0 : ... : z^{a_n} z_n]` on
/// `CP^n`, for pairwise distinct weights `a_0..a_n`.
///
/// Fixed point `j` has exponents `|a_k - a_j|` (k != j, in order of k) and sign
/// `prod_{k != j} sign(a_k - a_j)`, the sign of the signed tangent weights
/// against the complex orientation.
pub fn cp_action<W: Clone + Into<BigInt>>(weights: &[W]) -> Result<CircleActionData> {
    let weights: Vec<BigInt> = weights.iter().cloned().map(Into::into).collect();
    if weights.len() < 2 {
        return Err(Error::Argument(format!(
            "CP^n needs n+1 >= 2 weights, got {}",
            weights.len()
        )));
    }
    let distinct: HashSet<&BigInt> = weights.iter().collect();
    if distinct.len() != weights.len() {
        return Err(Error::Argument(
            "repeated weights: positive-dimensional fixed set; use blow_up semantics instead"
                .into(),
        ));
    }

    let isolated = weights
        .iter()
        .enumerate()
        .map(|(j, aj)| {
            let mut sign = Sign::Plus;
            let mut exponents: Vec<BigUint> = Vec::with_capacity(weights.len() - 1);
            for (k, ak) in weights.iter().enumerate() {
                if k == j {
                    continue;
                }
                let w = ak - aj;
                if w.is_negative() {
                    sign = -sign;
                }
                exponents.push(w.magnitude().clone());
            }
            IsolatedFixedPoint { exponents, sign }
        })
        .collect();

    let label = weights
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(CircleActionData::new(weights.len() - 1, isolated)
        .with_label(format!("CP^{}({label})", weights.len() - 1)))
}

/// Rotation of `S^{2n} ⊂ C^n ⊕ R` with the given exponents: two poles with
/// identical exponents and opposite signs.
pub fn sphere_action<E: Clone + Into<BigUint>>(exponents: &[E]) -> Result<CircleActionData> {
    let exponents: Vec<BigUint> = exponents.iter().cloned().map(Into::into).collect();
    let n = exponents.len();
    let data = CircleActionData::new(
        n,
        vec![
            IsolatedFixedPoint {
                exponents: exponents.clone(),
                sign: Sign::Plus,
            },
            IsolatedFixedPoint {
                exponents: exponents.clone(),
                sign: Sign::Minus,
            },
        ],
    )
    .with_label(format!("S^{}", 2 * n));
    let violations = validate(&data);
    if violations.is_empty() {
        Ok(data)
    } else {
        Err(Error::Invalid(violations))
    }
}
