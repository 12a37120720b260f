use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, parts stored weakly decreasing.
///
/// Keys Pontryagin monomials: `(2,1,1)` stands for `p_2 p_1^2`. The empty
/// partition exists only as the monomial `1` (weight 0); [`Partition::new`]
/// never produces it.
///
/// Ordering is lexicographic *descending*, so `(4) < (3,1) < (2,2) < ...`.
/// Maps keyed by partitions therefore iterate in the same order as
/// [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Rejects zero parts and an
    /// empty list.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::Argument(
                "a partition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::Argument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition, i.e. the constant monomial `1`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(k)`, i.e. the monomial `p_k`.
    pub fn single(k: u32) -> Self {
        assert!(k > 0, "partition parts must be positive");
        Partition { parts: vec![k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Union of parts: the partition of the product monomial.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Monomial name such as `p2p1^2`; `1` for the empty partition.
    pub fn monomial_name(&self) -> String {
        if self.parts.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == part).count();
            out.push_str(&format!("p{part}"));
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `2,1,1`, `(2,1,1)` or the monomial form `p2p1^2`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Argument(format!("cannot read partition from {s:?}"));
        if s == "1" || s == "()" {
            return Ok(Partition::empty());
        }
        if let Some(rest) = s.strip_prefix('p') {
            let mut parts = Vec::new();
            for factor in rest.split('p') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let base: u32 = base.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat_n(base, exp));
            }
            return Partition::new(parts);
        }
        let inner = s.trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `p`, in lexicographic descending order.
pub fn partitions_of(p: i64) -> Result<Vec<Partition>> {
    if p <= 0 {
        return Err(Error::Argument(format!(
            "partitions_of needs a positive integer, got {p}"
        )));
    }
    let p = u32::try_from(p).map_err(|_| Error::Argument(format!("{p} is too large")))?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(p, p, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
