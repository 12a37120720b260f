//! Necessary conditions on a compact oriented manifold that is the domain of
//! a non-constant harmonic morphism with one-dimensional fibres.
//!
//! In dimension four: `p_1 = 0` (so signature zero), and the Euler number is
//! even and non-negative; it then equals the number of critical points. In
//! dimension five and above: every Pontryagin number and the Euler number
//! vanish. Passing these checks does not prove that such a map exists.
//!
//! Unknown invariants never default to zero: a verdict is `inconclusive`
//! when a needed value is missing and nothing known already rules the
//! manifold out.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::actiondata::{cp_action, sphere_action, ManifoldInvariants};
use crate::error::{Error, Result};
use crate::exactalg::{l_genus, rat, ExactRational, Partition, MAX_L_DEGREE};
use crate::json::rational_value;
use crate::localize::invariants;

/// Anchor cited by every obstruction.
pub const ANCHOR: &str = "Theorem 3.3";

/// Largest dimension accepted by parametrized catalog names.
pub const MAX_CATALOG_DIMENSION: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissible {
    Yes,
    No,
    Inconclusive,
}

impl Admissible {
    pub fn as_str(self) -> &'static str {
        match self {
            Admissible::Yes => "yes",
            Admissible::No => "no",
            Admissible::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionViolation {
    pub condition: String,
    pub anchor: &'static str,
    pub observed: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub admissible: Admissible,
    pub violations: Vec<ObstructionViolation>,
    /// Unknown invariants that kept the verdict from being decided.
    pub missing: Vec<String>,
    /// Dimension four only: the number of critical points any such map has.
    pub critical_points: Option<BigInt>,
}

impl ObstructionVerdict {
    pub fn blocked(&self) -> bool {
        self.admissible == Admissible::No
    }

    pub fn to_json(&self) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                let mut m = Map::new();
                m.insert("condition".into(), Value::String(v.condition.clone()));
                m.insert("anchor".into(), Value::String(v.anchor.into()));
                m.insert("observed".into(), rational_value(&v.observed));
                Value::Object(m)
            })
            .collect();
        let mut root = Map::new();
        root.insert(
            "admissible".into(),
            Value::String(self.admissible.as_str().into()),
        );
        root.insert("violations".into(), Value::Array(violations));
        root.insert(
            "critical_points".into(),
            self.critical_points
                .as_ref()
                .map_or(Value::Null, crate::json::int_value),
        );
        if !self.missing.is_empty() {
            root.insert(
                "missing".into(),
                Value::Array(self.missing.iter().cloned().map(Value::String).collect()),
            );
        }
        Value::Object(root)
    }
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.admissible {
            Admissible::Yes => "admissible: necessary conditions hold",
            Admissible::No => "blocked: cannot be the domain of a non-constant harmonic morphism with one-dimensional fibres",
            Admissible::Inconclusive => "inconclusive: needed invariants are unknown",
        };
        write!(f, "{head}")?;
        for v in &self.violations {
            write!(
                f,
                "\n  violated {} ({}): observed {}",
                v.condition, v.anchor, v.observed
            )?;
        }
        if !self.missing.is_empty() {
            write!(f, "\n  unknown: {}", self.missing.join(", "))?;
        }
        if let Some(c) = &self.critical_points {
            write!(f, "\n  critical points: {c}")?;
        }
        Ok(())
    }
}

/// Signature implied by the Pontryagin numbers, when they determine it.
fn derived_signature(inv: &ManifoldInvariants) -> Result<Option<ExactRational>> {
    let dim = inv.dimension();
    if !dim.is_multiple_of(4) || dim == 0 || !inv.all_pontryagin_known() {
        return Ok(None);
    }
    let k = (dim / 4) as u32;
    if k > MAX_L_DEGREE {
        return Ok(None);
    }
    let value = l_genus(k)?.evaluate_with(|key| inv.pontryagin(key).cloned())?;
    Ok(Some(value))
}

/// Stored signature, or the one forced by the Pontryagin numbers; the two must
/// agree when both exist.
fn effective_signature(inv: &ManifoldInvariants) -> Result<Option<ExactRational>> {
    if !inv.dimension().is_multiple_of(4) {
        return Ok(Some(rat(0)));
    }
    let stored = inv.signature().map(|s| rat(s.clone()));
    let derived = derived_signature(inv)?;
    match (stored, derived) {
        (Some(s), Some(d)) if s != d => Err(Error::Inconsistent(format!(
            "stored signature {s} disagrees with {d} forced by the Pontryagin numbers"
        ))),
        (Some(s), _) => Ok(Some(s)),
        (None, d) => Ok(d),
    }
}

pub fn check_domain(inv: &ManifoldInvariants) -> Result<ObstructionVerdict> {
    let dim = inv.dimension();
    if dim < 4 {
        return Err(Error::OutOfScope(format!(
            "domains of dimension {dim} < 4 are not covered"
        )));
    }
    let sigma = effective_signature(inv)?;
    let mut violations = Vec::new();
    let mut missing = Vec::new();
    let violation = |condition: String, observed: ExactRational| ObstructionViolation {
        condition,
        anchor: ANCHOR,
        observed,
    };

    if dim == 4 {
        match &sigma {
            Some(s) if !s.is_zero() => violations.push(violation("signature=0".into(), s.clone())),
            Some(_) => {}
            None => missing.push("signature (or p1)".to_string()),
        }
        match inv.euler() {
            Some(e) => {
                if !(e % 2u32).is_zero() {
                    violations.push(violation("euler even".into(), rat(e.clone())));
                }
                if *e < BigInt::zero() {
                    violations.push(violation("euler>=0".into(), rat(e.clone())));
                }
            }
            None => missing.push("euler".to_string()),
        }
    } else {
        for (key, value) in inv.pontryagin_numbers() {
            match value {
                Some(v) if !v.is_zero() => {
                    violations.push(violation(format!("{}=0", key.monomial_name()), v.clone()))
                }
                Some(_) => {}
                None => missing.push(key.monomial_name()),
            }
        }
        if let Some(s) = &sigma {
            if !s.is_zero() {
                violations.push(violation("signature=0".into(), s.clone()));
            }
        }
        match inv.euler() {
            Some(e) if !e.is_zero() => violations.push(violation("euler=0".into(), rat(e.clone()))),
            Some(_) => {}
            None => missing.push("euler".to_string()),
        }
    }

    let admissible = if !violations.is_empty() {
        Admissible::No
    } else if !missing.is_empty() {
        Admissible::Inconclusive
    } else {
        Admissible::Yes
    };
    let critical_points = (dim == 4 && admissible == Admissible::Yes)
        .then(|| inv.euler().cloned())
        .flatten();
    Ok(ObstructionVerdict {
        admissible,
        violations,
        missing,
        critical_points,
    })
}

fn join_labels(a: &ManifoldInvariants, b: &ManifoldInvariants, op: &str) -> Option<String> {
    match (a.label(), b.label()) {
        (Some(l), Some(r)) => Some(format!("{l}{op}{r}")),
        _ => None,
    }
}

/// Invariants of the connected sum `A # B` of two manifolds of the same even
/// dimension: signature and Pontryagin numbers add, `χ = χ(A) + χ(B) − 2`.
pub fn combine_connected_sum(
    a: &ManifoldInvariants,
    b: &ManifoldInvariants,
) -> Result<ManifoldInvariants> {
    if a.dimension() != b.dimension() || !a.dimension().is_multiple_of(2) {
        return Err(Error::Argument(format!(
            "connected sum needs equal even dimensions, got {} and {}",
            a.dimension(),
            b.dimension()
        )));
    }
    let mut out = ManifoldInvariants::new(a.dimension());
    out.set_euler(match (a.euler(), b.euler()) {
        (Some(x), Some(y)) => Some(x + y - BigInt::from(2)),
        _ => None,
    });
    out.set_signature(match (a.signature(), b.signature()) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    });
    for key in a.pontryagin_numbers().keys() {
        let sum = match (a.pontryagin(key), b.pontryagin(key)) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        out.set_pontryagin(key, sum)?;
    }
    out.set_label(join_labels(a, b, "#"));
    Ok(out)
}

/// Splits the monomial `I` of `A × B` along `p_k(A×B) = Σ_{s+t=k} p_s(A) p_t(B)`
/// and keeps the terms of bidegree `(weight_a, weight_b)`.
fn product_pontryagin(
    key: &Partition,
    a: &ManifoldInvariants,
    b: &ManifoldInvariants,
    weight_a: u32,
) -> Option<ExactRational> {
    fn walk(
        parts: &[u32],
        left: &mut Vec<u32>,
        right: &mut Vec<u32>,
        budget: u32,
        a: &ManifoldInvariants,
        b: &ManifoldInvariants,
        total: &mut Option<ExactRational>,
    ) {
        if total.is_none() {
            return;
        }
        let Some((&first, rest)) = parts.split_first() else {
            if budget != 0 {
                return;
            }
            let ka = Partition::new(left.iter().copied()).ok();
            let kb = Partition::new(right.iter().copied()).ok();
            let value = match (ka, kb) {
                (Some(ka), Some(kb)) => match (a.pontryagin(&ka), b.pontryagin(&kb)) {
                    (Some(x), Some(y)) => Some(x * y),
                    _ => None,
                },
                _ => None,
            };
            *total = match (total.take(), value) {
                (Some(t), Some(v)) => Some(t + v),
                _ => None,
            };
            return;
        };
        for s in 0..=first.min(budget) {
            if s > 0 {
                left.push(s);
            }
            if first - s > 0 {
                right.push(first - s);
            }
            walk(rest, left, right, budget - s, a, b, total);
            if first - s > 0 {
                right.pop();
            }
            if s > 0 {
                left.pop();
            }
        }
    }
    let mut total = Some(ExactRational::zero());
    walk(
        key.parts(),
        &mut Vec::new(),
        &mut Vec::new(),
        weight_a,
        a,
        b,
        &mut total,
    );
    total
}

/// Invariants of the product `A × B`.
///
/// Euler numbers and signatures multiply (a factor whose dimension is not a
/// multiple of four counts as signature zero). Pontryagin numbers all vanish
/// unless both dimensions are multiples of four; otherwise each is expanded
/// from the factors' numbers and is unknown if any needed factor number is.
pub fn combine_product(
    a: &ManifoldInvariants,
    b: &ManifoldInvariants,
) -> Result<ManifoldInvariants> {
    let dim = a.dimension() + b.dimension();
    let mut out = ManifoldInvariants::new(dim);
    out.set_euler(match (a.euler(), b.euler()) {
        (Some(x), Some(y)) => Some(x * y),
        _ => None,
    });
    let factor_sigma = |m: &ManifoldInvariants| {
        if !m.dimension().is_multiple_of(4) {
            Some(BigInt::zero())
        } else {
            m.signature().cloned()
        }
    };
    out.set_signature(if !dim.is_multiple_of(4) {
        Some(BigInt::zero())
    } else {
        match (factor_sigma(a), factor_sigma(b)) {
            (Some(x), _) if x.is_zero() => Some(x),
            (_, Some(y)) if y.is_zero() => Some(y),
            (Some(x), Some(y)) => Some(x * y),
            _ => None,
        }
    });
    if dim.is_multiple_of(4) && dim > 0 {
        let both_quaternionic = a.dimension().is_multiple_of(4) && b.dimension().is_multiple_of(4);
        let keys: Vec<Partition> = out.pontryagin_numbers().keys().cloned().collect();
        for key in keys {
            let value = if both_quaternionic && a.dimension() > 0 && b.dimension() > 0 {
                product_pontryagin(&key, a, b, (a.dimension() / 4) as u32)
            } else if both_quaternionic {
                // a point factor
                let other = if a.dimension() == 0 { b } else { a };
                other.pontryagin(&key).cloned()
            } else {
                Some(ExactRational::zero())
            };
            out.set_pontryagin(&key, value)?;
        }
    }
    out.set_label(join_labels(a, b, "x"));
    Ok(out)
}

/// Names understood by [`catalog`], with an example instance of each.
pub const CATALOG_TEMPLATES: &[(&str, &str)] = &[
    ("CP^n", "CP^2"),
    ("K3", "K3"),
    ("S^{2n}xP_g", "S^4xP_2"),
    ("T^m", "T^4"),
    ("S^{2n}", "S^4"),
    ("CP2#-CP2", "CP2#-CP2"),
];

fn parse_param(text: &str, name: &str) -> Result<usize> {
    text.trim_start_matches('{')
        .trim_end_matches('}')
        .parse::<usize>()
        .map_err(|_| Error::Lookup(name.to_string()))
}

fn check_dimension(dim: usize, name: &str) -> Result<()> {
    if dim > MAX_CATALOG_DIMENSION {
        return Err(Error::Argument(format!(
            "{name} has dimension {dim}; the catalog stops at {MAX_CATALOG_DIMENSION}"
        )));
    }
    Ok(())
}

fn projective_space(n: usize) -> Result<ManifoldInvariants> {
    let name = format!("CP^{n}");
    if n == 0 {
        return Err(Error::Lookup(name));
    }
    check_dimension(2 * n, &name)?;
    let weights: Vec<i64> = (0..=n as i64).collect();
    let mut inv = invariants(&cp_action(&weights)?)?.invariants;
    inv.set_label(Some(name));
    inv.add_note("euler = n+1");
    inv.add_note("signature and Pontryagin numbers localized from the linear action");
    Ok(inv)
}

fn sphere(dim: usize) -> Result<ManifoldInvariants> {
    let name = format!("S^{dim}");
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(Error::Lookup(name));
    }
    check_dimension(dim, &name)?;
    let mut inv = invariants(&sphere_action(&vec![1u32; dim / 2])?)?.invariants;
    inv.set_label(Some(name));
    inv.add_note("localized from the rotation action");
    Ok(inv)
}

fn closed_surface(genus: usize) -> ManifoldInvariants {
    ManifoldInvariants::new(2)
        .with_euler(2 - 2 * genus as i64)
        .with_signature(0)
        .with_label(format!("P_{genus}"))
}

fn torus(m: usize) -> Result<ManifoldInvariants> {
    let name = format!("T^{m}");
    if m == 0 {
        return Err(Error::Lookup(name));
    }
    check_dimension(m, &name)?;
    Ok(ManifoldInvariants::new(m)
        .with_euler(0)
        .with_signature(0)
        .with_vanishing_pontryagin()
        .with_label(name)
        .with_note("flat torus: free circle action, every invariant vanishes"))
}

/// Invariants of a named manifold. Values not forced by the computations in
/// this crate are left unknown.
pub fn catalog(name: &str) -> Result<ManifoldInvariants> {
    let trimmed = name.trim();
    let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "K3" => {
            return Ok(ManifoldInvariants::new(4)
                .with_signature(-16)
                .with_label("K3")
                .with_note("signature -16; Euler number not recorded"))
        }
        "CP2#-CP2" => {
            let cp2 = projective_space(2)?;
            let mut inv = combine_connected_sum(&cp2, &cp2.reversed())?;
            inv.set_label(Some("CP2#-CP2".into()));
            inv.add_note("connected-sum combinator on CP^2 and its reverse");
            return Ok(inv);
        }
        _ => {}
    }
    if let Some(rest) = compact.strip_prefix("CP") {
        let n = parse_param(rest.trim_start_matches('^'), trimmed)?;
        return projective_space(n);
    }
    if let Some(rest) = compact.strip_prefix("T^") {
        return torus(parse_param(rest, trimmed)?);
    }
    if let Some(rest) = compact.strip_prefix("S^") {
        if let Some((sphere_part, surface_part)) = rest.split_once(['x', 'X', '×']) {
            let dim = parse_param(sphere_part, trimmed)?;
            let genus = surface_part
                .strip_prefix("P_")
                .ok_or_else(|| Error::Lookup(trimmed.to_string()))?;
            let genus = parse_param(genus, trimmed)?;
            let mut inv = combine_product(&sphere(dim)?, &closed_surface(genus))?;
            inv.set_label(Some(format!("S^{dim}xP_{genus}")));
            inv.add_note("product combinator on the sphere and the genus-g surface");
            return Ok(inv);
        }
        return sphere(parse_param(rest, trimmed)?);
    }
    Err(Error::Lookup(trimmed.to_string()))
}

/// Convenience for [`check_domain`] on a list of invariants keyed by label.
pub fn check_all<'a>(
    entries: impl IntoIterator<Item = &'a ManifoldInvariants>,
) -> Result<BTreeMap<String, ObstructionVerdict>> {
    entries
        .into_iter()
        .map(|inv| {
            let label = inv.label().unwrap_or("?").to_string();
            Ok((label, check_domain(inv)?))
        })
        .collect()
}
