use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{partitions_of, ExactRational, Partition};

/// Characteristic numbers of a closed oriented manifold, each possibly unknown.
///
/// The Pontryagin map always holds exactly the partitions of `dimension / 4`
/// as keys (none when 4 does not divide the dimension); a `None` value means
/// unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldInvariants {
    dimension: usize,
    euler: Option<BigInt>,
    signature: Option<BigInt>,
    pontryagin: BTreeMap<Partition, Option<ExactRational>>,
    label: Option<String>,
    notes: Vec<String>,
}

impl ManifoldInvariants {
    /// Everything unknown.
    pub fn new(dimension: usize) -> Self {
        let pontryagin = if dimension.is_multiple_of(4) && dimension > 0 {
            partitions_of((dimension / 4) as i64)
                .expect("positive weight")
                .into_iter()
                .map(|p| (p, None))
                .collect()
        } else {
            BTreeMap::new()
        };
        ManifoldInvariants {
            dimension,
            euler: None,
            signature: None,
            pontryagin,
            label: None,
            notes: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn euler(&self) -> Option<&BigInt> {
        self.euler.as_ref()
    }

    pub fn signature(&self) -> Option<&BigInt> {
        self.signature.as_ref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn pontryagin_numbers(&self) -> &BTreeMap<Partition, Option<ExactRational>> {
        &self.pontryagin
    }

    /// Value of `p_I`, `None` if unknown or if `I` is not a partition of `dimension/4`.
    pub fn pontryagin(&self, key: &Partition) -> Option<&ExactRational> {
        self.pontryagin.get(key).and_then(Option::as_ref)
    }

    pub fn all_pontryagin_known(&self) -> bool {
        self.pontryagin.values().all(Option::is_some)
    }

    pub fn set_euler(&mut self, value: Option<BigInt>) {
        self.euler = value;
    }

    pub fn set_signature(&mut self, value: Option<BigInt>) {
        self.signature = value;
    }

    pub fn set_label(&mut self, label: Option<String>) {
        self.label = label;
    }

    pub fn set_pontryagin(&mut self, key: &Partition, value: Option<ExactRational>) -> Result<()> {
        match self.pontryagin.get_mut(key) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::Argument(format!(
                "{} is not a Pontryagin number of a {}-manifold",
                key.monomial_name(),
                self.dimension
            ))),
        }
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn with_euler(mut self, value: impl Into<BigInt>) -> Self {
        self.euler = Some(value.into());
        self
    }

    pub fn with_signature(mut self, value: impl Into<BigInt>) -> Self {
        self.signature = Some(value.into());
        self
    }

    pub fn with_pontryagin(mut self, key: &Partition, value: ExactRational) -> Result<Self> {
        self.set_pontryagin(key, Some(value))?;
        Ok(self)
    }

    /// Every Pontryagin number set to zero.
    pub fn with_vanishing_pontryagin(mut self) -> Self {
        for v in self.pontryagin.values_mut() {
            *v = Some(ExactRational::from_integer(0.into()));
        }
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Same manifold with the opposite orientation: signature and every
    /// Pontryagin number change sign, the Euler number does not.
    pub fn reversed(&self) -> ManifoldInvariants {
        let mut out = self.clone();
        out.signature = self.signature.as_ref().map(|s| -s);
        for q in out.pontryagin.values_mut().flatten() {
            *q = -q.clone();
        }
        out.label = self.label.as_ref().map(|l| format!("-{l}"));
        out
    }
}

impl fmt::Display for ManifoldInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show =
            |v: Option<&BigInt>| v.map_or_else(|| "unknown".to_string(), ToString::to_string);
        if let Some(label) = &self.label {
            writeln!(f, "manifold:  {label}")?;
        }
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "euler:     {}", show(self.euler.as_ref()))?;
        write!(f, "signature: {}", show(self.signature.as_ref()))?;
        for (key, value) in &self.pontryagin {
            let v = value
                .as_ref()
                .map_or_else(|| "unknown".to_string(), ToString::to_string);
            write!(f, "\n{:<10} {v}", format!("{}:", key.monomial_name()))?;
        }
        for note in &self.notes {
            write!(f, "\nnote:      {note}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn keys_follow_dimension() {
        assert_eq!(ManifoldInvariants::new(4).pontryagin_numbers().len(), 1);
        assert_eq!(ManifoldInvariants::new(8).pontryagin_numbers().len(), 2);
        assert!(ManifoldInvariants::new(6).pontryagin_numbers().is_empty());
        assert!(ManifoldInvariants::new(0).pontryagin_numbers().is_empty());
    }

    #[test]
    fn rejects_foreign_keys() {
        let mut inv = ManifoldInvariants::new(4);
        assert!(inv
            .set_pontryagin(&Partition::single(2), Some(rat(1)))
            .is_err());
        assert!(inv
            .set_pontryagin(&Partition::single(1), Some(rat(3)))
            .is_ok());
        assert_eq!(inv.pontryagin(&Partition::single(1)), Some(&rat(3)));
    }

    #[test]
    fn reversal() {
        let inv = ManifoldInvariants::new(4)
            .with_euler(3)
            .with_signature(1)
            .with_pontryagin(&Partition::single(1), rat(3))
            .unwrap();
        let r = inv.reversed();
        assert_eq!(r.euler(), Some(&3.into()));
        assert_eq!(r.signature(), Some(&(-1).into()));
        assert_eq!(r.pontryagin(&Partition::single(1)), Some(&rat(-3)));
    }
}
