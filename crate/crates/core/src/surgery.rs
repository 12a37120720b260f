//! Equivariant connected sum and blow-up, acting on fixed-point data.
//!
//! Nothing smooth is represented: a surgery rewrites the list of fixed points
//! and [`bookkeeping`] compares the localized invariants before and after with
//! the additivity rules for connected sums.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::actiondata::{
    cp_action, validate, CircleActionData, IsolatedFixedPoint, Sign, SurfaceComponent,
};
use crate::error::{Error, Result};
use crate::exactalg::{rat, ExactRational, Partition};
use crate::json::rational_value;
use crate::localize::{euler_number, pontryagin_number, signature};

const CONNECTED_SUM: &str = "Definition 2.1";

fn ensure_valid(data: &CircleActionData) -> Result<()> {
    let violations = validate(data);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(violations))
    }
}

fn point_at(data: &CircleActionData, index: usize, what: &str) -> Result<IsolatedFixedPoint> {
    data.isolated.get(index).cloned().ok_or_else(|| {
        Error::Argument(format!(
            "{what} has {} isolated points, index {index} is out of range",
            data.isolated.len()
        ))
    })
}

fn without(points: &[IsolatedFixedPoint], index: usize) -> Vec<IsolatedFixedPoint> {
    points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, p)| p.clone())
        .collect()
}

/// Equivariant connected sum of `a` and `b` about `a.isolated[ia]` and
/// `b.isolated[ib]`, which must share their exponent multiset and carry
/// opposite signs. Both points disappear; everything else is kept.
pub fn connected_sum(
    a: &CircleActionData,
    ia: usize,
    b: &CircleActionData,
    ib: usize,
) -> Result<CircleActionData> {
    ensure_valid(a)?;
    ensure_valid(b)?;
    if a.half_dimension != b.half_dimension {
        return Err(Error::Hypothesis {
            anchor: CONNECTED_SUM,
            message: format!(
                "dimensions differ ({} and {})",
                a.dimension(),
                b.dimension()
            ),
        });
    }
    let x = point_at(a, ia, "first dataset")?;
    let y = point_at(b, ib, "second dataset")?;
    if x.exponent_multiset() != y.exponent_multiset() {
        return Err(Error::Hypothesis {
            anchor: CONNECTED_SUM,
            message: format!("exponents of {x} and {y} differ"),
        });
    }
    if x.sign == y.sign {
        return Err(Error::Hypothesis {
            anchor: CONNECTED_SUM,
            message: format!("points {x} and {y} must have opposite signs"),
        });
    }
    let mut isolated = without(&a.isolated, ia);
    isolated.extend(without(&b.isolated, ib));
    let mut surfaces = a.surfaces.clone();
    surfaces.extend(b.surfaces.iter().cloned());
    let label = match (&a.label, &b.label) {
        (Some(l), Some(r)) => Some(format!("{l}#{r}")),
        (Some(l), None) => Some(format!("{l}#?")),
        (None, Some(r)) => Some(format!("?#{r}")),
        (None, None) => None,
    };
    Ok(CircleActionData {
        half_dimension: a.half_dimension,
        isolated,
        surfaces,
        label,
    })
}

/// How [`blow_up`] treats a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowUpRegime {
    /// Dimension four, equal exponents: the point becomes a fixed sphere.
    ExceptionalSphere,
    /// Distinct exponents: the point is replaced by the other fixed points
    /// of the weighted projective action.
    WeightedPoints,
}

/// Which regime applies to `data.isolated[index]`, or why none does.
pub fn blow_up_regime(data: &CircleActionData, index: usize) -> Result<BlowUpRegime> {
    let x = point_at(data, index, "dataset")?;
    if data.half_dimension == 2 && x.has_equal_exponents() {
        return Ok(BlowUpRegime::ExceptionalSphere);
    }
    let mut seen = x.exponent_multiset();
    seen.dedup();
    if seen.len() == x.exponents.len() {
        return Ok(BlowUpRegime::WeightedPoints);
    }
    if x.has_equal_exponents() {
        Err(Error::UnsupportedDegeneracy(format!(
            "equal exponents in dimension {} would create a fixed CP^{} of dimension >= 4",
            data.dimension(),
            data.half_dimension - 1
        )))
    } else {
        Err(Error::UnsupportedDegeneracy(format!(
            "point {x} has partly repeated exponents"
        )))
    }
}

/// Blow-up at `data.isolated[index]`: connected sum with `-ε(x) CP^r`
/// carrying the weighted action `[z_0 : z^{m_1} z_1 : … : z^{m_r} z_r]`.
pub fn blow_up(data: &CircleActionData, index: usize) -> Result<CircleActionData> {
    ensure_valid(data)?;
    let regime = blow_up_regime(data, index)?;
    let x = point_at(data, index, "dataset")?;
    let mut out = data.clone();
    out.isolated = without(&data.isolated, index);
    out.label = data.label.as_ref().map(|l| format!("Bl[{index}]({l})"));
    match regime {
        BlowUpRegime::ExceptionalSphere => {
            out.surfaces.push(SurfaceComponent {
                genus: BigUint::zero(),
                normal_euler: BigInt::from(-x.sign.as_i64()),
                label: Some("exceptional".into()),
            });
        }
        BlowUpRegime::WeightedPoints => {
            let mut weights = vec![BigInt::zero()];
            weights.extend(x.exponents.iter().cloned().map(BigInt::from));
            let projective = cp_action(&weights)?;
            // -ε(x) CP^r: reversed orientation exactly when ε(x) = +1
            let flip = x.sign == Sign::Plus;
            out.isolated
                .extend(projective.isolated.into_iter().skip(1).map(|mut p| {
                    if flip {
                        p.sign = -p.sign;
                    }
                    p
                }));
        }
    }
    Ok(out)
}

/// A surgery step, with whatever [`bookkeeping`] needs to predict its effect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryOp {
    ConnectedSum {
        point: usize,
        partner: CircleActionData,
        partner_point: usize,
    },
    BlowUp {
        point: usize,
        sign: Sign,
        exponents: Vec<BigUint>,
    },
}

impl SurgeryOp {
    pub fn blow_up_of(data: &CircleActionData, point: usize) -> Result<SurgeryOp> {
        let x = point_at(data, point, "dataset")?;
        Ok(SurgeryOp::BlowUp {
            point,
            sign: x.sign,
            exponents: x.exponents,
        })
    }

    pub fn describe(&self) -> String {
        match self {
            SurgeryOp::ConnectedSum {
                point,
                partner,
                partner_point,
            } => format!(
                "connected sum: isolated[{point}] joined to isolated[{partner_point}] of {}",
                partner.label.as_deref().unwrap_or("partner")
            ),
            SurgeryOp::BlowUp {
                point,
                sign,
                exponents,
            } => {
                let exps: Vec<String> = exponents.iter().map(ToString::to_string).collect();
                format!("blow-up at isolated[{point}] (({}),{sign})", exps.join(","))
            }
        }
    }
}

/// One invariant before and after a surgery, with the predicted after-value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantityRow {
    pub name: &'static str,
    pub before: Option<ExactRational>,
    pub after: Option<ExactRational>,
    pub predicted: Option<ExactRational>,
}

impl QuantityRow {
    /// `None` when a value could not be computed (e.g. unrealizable data).
    pub fn matches(&self) -> Option<bool> {
        match (&self.after, &self.predicted) {
            (Some(a), Some(p)) => Some(a == p),
            _ => None,
        }
    }

    pub fn delta(&self) -> Option<ExactRational> {
        match (&self.before, &self.after) {
            (Some(b), Some(a)) => Some(a - b),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookkeepingReport {
    pub operation: String,
    pub rows: Vec<QuantityRow>,
}

impl BookkeepingReport {
    pub fn row(&self, name: &str) -> Option<&QuantityRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// True when every computable prediction agrees with the localized value.
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(|r| r.matches() != Some(false))
    }

    pub fn to_json(&self) -> Value {
        let opt = |q: &Option<ExactRational>| q.as_ref().map_or(Value::Null, rational_value);
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert("quantity".into(), Value::String(r.name.into()));
                m.insert("before".into(), opt(&r.before));
                m.insert("after".into(), opt(&r.after));
                m.insert("delta".into(), opt(&r.delta()));
                m.insert("predicted".into(), opt(&r.predicted));
                m.insert(
                    "matches".into(),
                    r.matches().map_or(Value::Null, Value::Bool),
                );
                Value::Object(m)
            })
            .collect();
        let mut root = Map::new();
        root.insert("operation".into(), Value::String(self.operation.clone()));
        root.insert("rows".into(), Value::Array(rows));
        root.insert("consistent".into(), Value::Bool(self.consistent()));
        Value::Object(root)
    }
}

impl std::fmt::Display for BookkeepingReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.operation)?;
        let show = |q: &Option<ExactRational>| {
            q.as_ref()
                .map_or_else(|| "?".to_string(), ToString::to_string)
        };
        for r in &self.rows {
            let status = match r.matches() {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "n/a",
            };
            writeln!(
                f,
                "  {:<9} {} -> {} (delta {}, predicted {}) {status}",
                r.name,
                show(&r.before),
                show(&r.after),
                show(&r.delta()),
                show(&r.predicted)
            )?;
        }
        Ok(())
    }
}

struct Snapshot {
    euler: ExactRational,
    signature: Option<ExactRational>,
    p1: Option<ExactRational>,
}

fn snapshot(data: &CircleActionData) -> Snapshot {
    Snapshot {
        euler: rat(euler_number(data)),
        signature: signature(data).ok().map(|s| rat(s.value)),
        p1: if data.half_dimension == 2 {
            pontryagin_number(data, &Partition::single(1)).ok()
        } else {
            None
        },
    }
}

fn add(a: &Option<ExactRational>, b: &Option<ExactRational>) -> Option<ExactRational> {
    Some(a.as_ref()? + b.as_ref()?)
}

/// Localized Euler number, signature and (in dimension four) `p_1` before and
/// after a surgery, next to the values the surgery should produce:
/// a connected sum adds signatures and `p_1` and has `χ = χ_a + χ_b − 2`; a
/// blow-up at a point of sign `ε` and complex dimension `r` adds
/// `−ε·σ(CP^r)` to the signature and `r − 1` to the Euler number.
pub fn bookkeeping(
    before: &CircleActionData,
    after: &CircleActionData,
    op: &SurgeryOp,
) -> BookkeepingReport {
    let b = snapshot(before);
    let a = snapshot(after);
    let four = before.half_dimension == 2;
    let (euler, sig, p1) = match op {
        SurgeryOp::ConnectedSum { partner, .. } => {
            let o = snapshot(partner);
            (
                Some(&b.euler + &o.euler - rat(2)),
                add(&b.signature, &o.signature),
                add(&b.p1, &o.p1),
            )
        }
        SurgeryOp::BlowUp {
            sign, exponents, ..
        } => {
            let r = exponents.len() as i64;
            let eps = rat(sign.as_i64());
            let cp_signature = if r % 2 == 0 { rat(1) } else { rat(0) };
            (
                Some(&b.euler + rat(r - 1)),
                b.signature.as_ref().map(|s| s - &eps * cp_signature),
                b.p1.as_ref().map(|p| p - &eps * rat(3)),
            )
        }
    };
    let mut rows = vec![
        QuantityRow {
            name: "euler",
            before: Some(b.euler),
            after: Some(a.euler),
            predicted: euler,
        },
        QuantityRow {
            name: "signature",
            before: b.signature,
            after: a.signature,
            predicted: sig,
        },
    ];
    if four {
        rows.push(QuantityRow {
            name: "p1",
            before: b.p1,
            after: a.p1,
            predicted: p1,
        });
    }
    BookkeepingReport {
        operation: op.describe(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actiondata::sphere_action;
    use crate::localize::{admissible_monomials, vanishing_sum, verify_equal_exponent_signature};

    fn pt(exps: &[u32], sign: i64) -> IsolatedFixedPoint {
        IsolatedFixedPoint::new(exps.iter().copied(), Sign::from_i64(sign).unwrap())
    }

    fn s4() -> CircleActionData {
        sphere_action(&[1u32, 1]).unwrap()
    }

    #[test]
    fn sphere_sum_is_a_sphere() {
        let s = connected_sum(&s4(), 0, &s4(), 1).unwrap();
        assert!(s.same_fixed_points(&s4()));
        assert_eq!(s.label.as_deref(), Some("S^4#S^4"));
        let op = SurgeryOp::ConnectedSum {
            point: 0,
            partner: s4(),
            partner_point: 1,
        };
        let report = bookkeeping(&s4(), &s, &op);
        assert!(report.consistent());
        let euler = report.row("euler").unwrap();
        assert_eq!(euler.delta(), Some(rat(0)));
        assert_eq!(report.row("signature").unwrap().after, Some(rat(0)));
        assert_eq!(report.row("p1").unwrap().after, Some(rat(0)));
    }

    #[test]
    fn equal_signs_rejected() {
        let err = connected_sum(&s4(), 0, &s4(), 0).unwrap_err();
        assert!(matches!(
            err,
            Error::Hypothesis {
                anchor: CONNECTED_SUM,
                ..
            }
        ));
        let other = sphere_action(&[1u32, 2]).unwrap();
        assert!(matches!(
            connected_sum(&s4(), 0, &other, 1),
            Err(Error::Hypothesis { .. })
        ));
        let s6 = sphere_action(&[1u32, 1, 1]).unwrap();
        assert!(connected_sum(&s4(), 0, &s6, 1).is_err());
        assert!(matches!(
            connected_sum(&s4(), 5, &s4(), 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn exponent_order_does_not_matter() {
        let a = CircleActionData::new(2, vec![pt(&[1, 2], 1), pt(&[2, 1], -1)]);
        let b = CircleActionData::new(2, vec![pt(&[2, 1], 1), pt(&[1, 2], -1)]);
        assert!(connected_sum(&a, 0, &b, 1).is_ok());
    }

    #[test]
    fn sphere_blow_up() {
        let out = blow_up(&s4(), 0).unwrap();
        assert_eq!(out.isolated, vec![pt(&[1, 1], -1)]);
        assert_eq!(out.surfaces.len(), 1);
        assert_eq!(out.surfaces[0].normal_euler, (-1).into());
        assert_eq!(out.surfaces[0].genus, 0u32.into());
        assert_eq!(euler_number(&out), 3.into());
        assert!(verify_equal_exponent_signature(&out).unwrap().passed());

        let report = bookkeeping(&s4(), &out, &SurgeryOp::blow_up_of(&s4(), 0).unwrap());
        assert!(report.consistent(), "{report}");
        assert_eq!(report.row("signature").unwrap().delta(), Some(rat(-1)));
        assert_eq!(report.row("euler").unwrap().delta(), Some(rat(1)));
        assert_eq!(report.row("p1").unwrap().after, Some(rat(-3)));
    }

    #[test]
    fn double_blow_up() {
        let once = blow_up(&s4(), 0).unwrap();
        let twice = blow_up(&once, 0).unwrap();
        assert!(twice.isolated.is_empty());
        assert_eq!(euler_number(&twice), 4.into());
        assert_eq!(signature(&twice).unwrap().value, 0.into());
        let report = bookkeeping(&once, &twice, &SurgeryOp::blow_up_of(&once, 0).unwrap());
        assert!(report.consistent());
        assert_eq!(report.row("signature").unwrap().delta(), Some(rat(1)));
    }

    #[test]
    fn cp3_weighted_blow_up() {
        let cp3 = cp_action(&[0, 1, 2, 3]).unwrap();
        assert_eq!(
            blow_up_regime(&cp3, 0).unwrap(),
            BlowUpRegime::WeightedPoints
        );
        let out = blow_up(&cp3, 0).unwrap();
        assert_eq!(out.isolated.len(), 6);
        assert_eq!(euler_number(&out), 6.into());
        // the three new points: cp_action(0,1,2,3) at e_1..e_3, negated
        assert_eq!(
            &out.isolated[3..],
            &[pt(&[1, 1, 2], 1), pt(&[2, 1, 1], -1), pt(&[3, 2, 1], 1)]
        );
        for m in admissible_monomials(3) {
            assert_eq!(vanishing_sum(&out, &m).unwrap(), rat(0), "{m}");
        }
        let report = bookkeeping(&cp3, &out, &SurgeryOp::blow_up_of(&cp3, 0).unwrap());
        assert!(report.consistent(), "{report}");
        assert_eq!(report.row("signature").unwrap().after, Some(rat(0)));
    }

    #[test]
    fn cp2_unequal_blow_up() {
        let cp2 = cp_action(&[0, 1, 2]).unwrap();
        let out = blow_up(&cp2, 0).unwrap();
        let report = bookkeeping(&cp2, &out, &SurgeryOp::blow_up_of(&cp2, 0).unwrap());
        assert!(report.consistent(), "{report}");
        assert_eq!(report.row("signature").unwrap().after, Some(rat(0)));
        assert_eq!(report.row("p1").unwrap().after, Some(rat(0)));
        assert_eq!(vanishing_sum(&out, &Partition::empty()).unwrap(), rat(0));
    }

    #[test]
    fn unsupported_degeneracies() {
        let s6 = sphere_action(&[1u32, 1, 1]).unwrap();
        assert!(matches!(
            blow_up(&s6, 0),
            Err(Error::UnsupportedDegeneracy(_))
        ));
        let mixed = sphere_action(&[1u32, 1, 2]).unwrap();
        assert!(matches!(
            blow_up(&mixed, 0),
            Err(Error::UnsupportedDegeneracy(_))
        ));
        assert!(matches!(blow_up(&s4(), 2), Err(Error::Argument(_))));
    }

    #[test]
    fn surface_blow_up_in_dimension_two_is_harmless() {
        let s2 = sphere_action(&[3u32]).unwrap();
        let out = blow_up(&s2, 0).unwrap();
        assert!(out.same_fixed_points(&s2));
    }
}
