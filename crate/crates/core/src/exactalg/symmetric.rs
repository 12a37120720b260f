use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{ExactRational, Partition};
use crate::error::{Error, Result};

/// `e_k(values)`, the k-th elementary symmetric function. `e_0 = 1`.
pub fn elementary_symmetric(k: usize, values: &[ExactRational]) -> Result<ExactRational> {
    if k > values.len() {
        return Err(Error::Argument(format!(
            "e_{k} needs at least {k} values, got {}",
            values.len()
        )));
    }
    // e[j] after processing a prefix of values; only the first k+1 are needed.
    let mut e = vec![ExactRational::zero(); k + 1];
    e[0] = ExactRational::one();
    for (seen, v) in values.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            let term = &e[j - 1] * v;
            e[j] += term;
        }
    }
    Ok(e.swap_remove(k))
}

/// A homogeneous polynomial in Pontryagin classes with exact coefficients.
///
/// Every key has weight equal to `degree`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginPolynomial {
    terms: BTreeMap<Partition, ExactRational>,
    degree: u32,
}

impl PontryaginPolynomial {
    pub fn new(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, ExactRational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Partition, ExactRational> = BTreeMap::new();
        for (key, coeff) in terms {
            if key.weight() != degree {
                return Err(Error::Argument(format!(
                    "monomial {} has weight {}, expected {degree}",
                    key.monomial_name(),
                    key.weight()
                )));
            }
            *map.entry(key).or_insert_with(ExactRational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(PontryaginPolynomial { terms: map, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ExactRational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &Partition) -> ExactRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Evaluates with monomial values supplied by `lookup`; `None` means the
    /// value is unknown and aborts the evaluation.
    pub fn evaluate_with<F>(&self, mut lookup: F) -> Result<ExactRational>
    where
        F: FnMut(&Partition) -> Option<ExactRational>,
    {
        let mut total = ExactRational::zero();
        for (key, coeff) in &self.terms {
            let value = lookup(key).ok_or_else(|| {
                Error::UnknownValue(format!("no value assigned to {}", key.monomial_name()))
            })?;
            total += coeff * value;
        }
        Ok(total)
    }
}

impl fmt::Display for PontryaginPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            let sign = if coeff.is_negative() { "-" } else { "+" };
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = coeff.abs();
            if magnitude.is_one() {
                write!(f, "{}", key.monomial_name())?;
            } else {
                write!(f, "({magnitude})*{}", key.monomial_name())?;
            }
        }
        Ok(())
    }
}

/// Sum over terms of coefficient times the assigned monomial value.
pub fn evaluate(
    poly: &PontryaginPolynomial,
    values: &BTreeMap<Partition, ExactRational>,
) -> Result<ExactRational> {
    poly.evaluate_with(|key| values.get(key).cloned())
}
