//! Characteristic numbers of a circle action read off its fixed points.
//!
//! Every number here is a finite sum over fixed points. An isolated point with
//! exponents `m_1..m_n` and sign `ε` contributes
//!
//! ```text
//!     ε · f(m_1², …, m_n²) / (m_1 ⋯ m_n)
//! ```
//!
//! for a symmetric `f` written in the elementary functions `e_i(m²)`. When
//! `deg f < n` the sum vanishes for every genuine action; with `f` a Pontryagin
//! monomial of weight `n/2` it is that Pontryagin number. A fixed surface in
//! dimension four adds its normal Euler number to `p_1`.
//!
//! The global sign is fixed so that `CP^2` with its linear action has
//! `p_1 = +3`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::actiondata::{validate, CircleActionData, IsolatedFixedPoint, ManifoldInvariants};
use crate::error::{Error, Result};
use crate::exactalg::{
    elementary_symmetric, l_genus, partitions_of, rat, ExactRational, Partition, MAX_L_DEGREE,
};
use crate::json::{int_value, rational_value};

fn ensure_valid(data: &CircleActionData) -> Result<()> {
    let violations = validate(data);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(violations))
    }
}

/// `ε · prod_k e_{i_k}(m²) / prod_j m_j` for one isolated point.
fn point_term(point: &IsolatedFixedPoint, monomial: &Partition) -> Result<ExactRational> {
    let squares: Vec<ExactRational> = point
        .exponents
        .iter()
        .map(|m| {
            let m = BigInt::from(m.clone());
            rat(&m * &m)
        })
        .collect();
    let mut numerator = rat(1);
    for &part in monomial.parts() {
        numerator *= elementary_symmetric(part as usize, &squares)?;
    }
    let denominator: BigInt = point
        .exponents
        .iter()
        .map(|m| BigInt::from(m.clone()))
        .product();
    Ok(numerator / rat(denominator) * rat(point.sign.as_i64()))
}

fn isolated_sum(data: &CircleActionData, monomial: &Partition) -> Result<ExactRational> {
    data.isolated
        .iter()
        .try_fold(ExactRational::zero(), |acc, p| {
            Ok(acc + point_term(p, monomial)?)
        })
}

/// Localized sum for an invariant polynomial of degree below `n`; zero for
/// every genuine action. The empty partition stands for `f = 1`.
pub fn vanishing_sum(data: &CircleActionData, monomial: &Partition) -> Result<ExactRational> {
    ensure_valid(data)?;
    if !data.surfaces.is_empty() {
        return Err(Error::UnsupportedData(
            "vanishing sums over fixed surfaces are not implemented; only isolated points are supported"
                .into(),
        ));
    }
    let n = data.half_dimension as u64;
    if 2 * u64::from(monomial.weight()) >= n {
        return Err(Error::Argument(format!(
            "monomial {} has degree {} >= {n}; use pontryagin_number for top-degree monomials",
            monomial.monomial_name(),
            2 * monomial.weight()
        )));
    }
    isolated_sum(data, monomial)
}

/// Every monomial for which [`vanishing_sum`] is defined on data of half
/// dimension `n`, starting with the empty one.
pub fn admissible_monomials(n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    // 2w < n
    let max_weight = (n.saturating_sub(1)) / 2;
    for w in 1..=max_weight {
        out.extend(partitions_of(w as i64).expect("positive weight"));
    }
    out
}

/// The Pontryagin number `p_I[M]`, with `weight(I) = n/2`.
pub fn pontryagin_number(data: &CircleActionData, key: &Partition) -> Result<ExactRational> {
    ensure_valid(data)?;
    let n = data.half_dimension;
    if !n.is_multiple_of(2) || 2 * key.weight() as usize != n {
        return Err(Error::Argument(format!(
            "{} is not a Pontryagin number of a {}-manifold",
            key.monomial_name(),
            data.dimension()
        )));
    }
    let mut total = isolated_sum(data, key)?;
    if !data.surfaces.is_empty() {
        // validation already pins n = 2, hence key = (1)
        if n != 2 {
            return Err(Error::UnsupportedData(
                "fixed surfaces are only supported in dimension 4".into(),
            ));
        }
        total += rat(data.normal_euler_sum());
    }
    Ok(total)
}

/// All Pontryagin numbers, keyed in partition order; empty when `4 ∤ dim`.
pub fn pontryagin_numbers(data: &CircleActionData) -> Result<BTreeMap<Partition, ExactRational>> {
    ensure_valid(data)?;
    let n = data.half_dimension;
    if !n.is_multiple_of(2) {
        return Ok(BTreeMap::new());
    }
    partitions_of((n / 2) as i64)?
        .into_iter()
        .map(|key| {
            let value = pontryagin_number(data, &key)?;
            Ok((key, value))
        })
        .collect()
}

/// Number of isolated fixed points plus the Euler characteristics of the
/// fixed surfaces.
pub fn euler_number(data: &CircleActionData) -> BigInt {
    let surfaces: BigInt = data.surfaces.iter().map(|s| s.euler_characteristic()).sum();
    BigInt::from(data.isolated.len()) + surfaces
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureMethod {
    /// Dimension not divisible by four.
    TrivialDimension,
    /// Hirzebruch L-polynomial at the localized Pontryagin numbers.
    LGenus,
    /// Equal-exponent data in dimension four: the sign sum, cross-checked
    /// against the normal Euler sum and `p_1/3`.
    EqualExponents,
}

impl SignatureMethod {
    pub fn tag(self) -> &'static str {
        match self {
            SignatureMethod::TrivialDimension => "trivial-dimension",
            SignatureMethod::LGenus => "L-genus",
            SignatureMethod::EqualExponents => "theorem-2.8",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub value: BigInt,
    pub method: SignatureMethod,
}

fn integral(q: &ExactRational) -> Option<BigInt> {
    q.denom().is_one().then(|| q.numer().clone())
}

pub fn signature(data: &CircleActionData) -> Result<Signature> {
    ensure_valid(data)?;
    let n = data.half_dimension;
    if !n.is_multiple_of(2) {
        return Ok(Signature {
            value: BigInt::zero(),
            method: SignatureMethod::TrivialDimension,
        });
    }

    if !data.surfaces.is_empty() && data.isolated.iter().all(|p| p.has_equal_exponents()) {
        let sign_sum = data.sign_sum();
        let normal = data.normal_euler_sum();
        let p1 = pontryagin_number(data, &Partition::single(1))?;
        if sign_sum != normal || p1 != rat(&sign_sum * 3) {
            return Err(Error::NotRealizable {
                anchor: "Theorem 2.8",
                message: format!(
                    "sign sum {sign_sum}, normal Euler sum {normal} and p_1/3 = {} must coincide",
                    p1 / rat(3)
                ),
            });
        }
        return Ok(Signature {
            value: sign_sum,
            method: SignatureMethod::EqualExponents,
        });
    }

    let k = (n / 2) as u32;
    if k > MAX_L_DEGREE {
        return Err(Error::Argument(format!(
            "signature by L-genus is available up to dimension {}, got {}",
            4 * MAX_L_DEGREE,
            data.dimension()
        )));
    }
    let numbers = pontryagin_numbers(data)?;
    let value = l_genus(k)?.evaluate_with(|key| numbers.get(key).cloned())?;
    let value = integral(&value).ok_or_else(|| Error::NotRealizable {
        anchor: "Hirzebruch signature theorem",
        message: format!("L-genus evaluates to the non-integer {value}"),
    })?;
    Ok(Signature {
        value,
        method: SignatureMethod::LGenus,
    })
}

/// Everything localization says about one dataset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationReport {
    pub invariants: ManifoldInvariants,
    pub signature_method: Option<SignatureMethod>,
    /// False when some Pontryagin number came out non-integral, which no
    /// genuine action produces.
    pub integral: bool,
}

impl LocalizationReport {
    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("convention".into(), Value::String(crate::CONVENTION.into()));
        root.insert("integral".into(), Value::Bool(self.integral));
        root.insert(
            "invariants".into(),
            crate::actiondata::invariants_to_value(&self.invariants),
        );
        root.insert(
            "signature_method".into(),
            self.signature_method
                .map_or(Value::Null, |m| Value::String(m.tag().into())),
        );
        Value::Object(root)
    }
}

/// Euler number, signature and all Pontryagin numbers of the data.
///
/// Signatures beyond the supported L-genus degree are left unknown with a
/// note; unrealizable data is an error.
pub fn invariants(data: &CircleActionData) -> Result<LocalizationReport> {
    ensure_valid(data)?;
    let mut inv = ManifoldInvariants::new(data.dimension());
    if let Some(label) = &data.label {
        inv.set_label(Some(label.clone()));
    }
    inv.set_euler(Some(euler_number(data)));
    let numbers = pontryagin_numbers(data)?;
    let integral = numbers.values().all(|q| q.denom().is_one());
    for (key, value) in &numbers {
        inv.set_pontryagin(key, Some(value.clone()))?;
    }
    let signature_method = match signature(data) {
        Ok(sig) => {
            inv.set_signature(Some(sig.value));
            Some(sig.method)
        }
        Err(Error::Argument(msg)) => {
            inv.add_note(format!("signature unknown: {msg}"));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(LocalizationReport {
        invariants: inv,
        signature_method,
        integral,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// Isolated fixed points with all exponents one: every Pontryagin number
    /// and the sign sum vanish, the Euler number is even.
    Vanishing,
    /// Dimension four with equal exponents at every isolated point:
    /// `p_1/3 = Σ ε = Σ normal Euler`.
    EqualExponentSignature,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Vanishing => "1.1",
            Theorem::EqualExponentSignature => "2.8",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Theorem> {
        match tag {
            "1.1" => Some(Theorem::Vanishing),
            "2.8" => Some(Theorem::EqualExponentSignature),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// The hypothesis does not hold for this data; not a failure.
    Inapplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictDetails {
    Vanishing {
        sign_sum: BigInt,
        pontryagin: BTreeMap<Partition, ExactRational>,
        euler: BigInt,
        fixed_points: usize,
    },
    EqualExponentSignature {
        p1_over_3: ExactRational,
        sign_sum: BigInt,
        normal_euler_sum: BigInt,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: Theorem,
    pub outcome: Outcome,
    pub details: VerdictDetails,
}

impl Verdict {
    pub fn applicable(&self) -> bool {
        !matches!(self.outcome, Outcome::Inapplicable(_))
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    fn inapplicable(theorem: Theorem, reason: impl Into<String>) -> Verdict {
        Verdict {
            theorem,
            outcome: Outcome::Inapplicable(reason.into()),
            details: VerdictDetails::None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("theorem".into(), Value::String(self.theorem.tag().into()));
        root.insert("applicable".into(), Value::Bool(self.applicable()));
        root.insert(
            "pass".into(),
            if self.applicable() {
                Value::Bool(self.passed())
            } else {
                Value::Null
            },
        );
        if let Outcome::Inapplicable(reason) = &self.outcome {
            root.insert("reason".into(), Value::String(reason.clone()));
        }
        let mut details = Map::new();
        match &self.details {
            VerdictDetails::Vanishing {
                sign_sum,
                pontryagin,
                euler,
                fixed_points,
            } => {
                details.insert("sign_sum".into(), int_value(sign_sum));
                let p: Map<String, Value> = pontryagin
                    .iter()
                    .map(|(k, v)| (k.monomial_name(), rational_value(v)))
                    .collect();
                details.insert("pontryagin".into(), Value::Object(p));
                details.insert("euler".into(), int_value(euler));
                details.insert("euler_even".into(), Value::Bool(is_even(euler)));
                details.insert("fixed_points".into(), Value::from(*fixed_points));
            }
            VerdictDetails::EqualExponentSignature {
                p1_over_3,
                sign_sum,
                normal_euler_sum,
            } => {
                details.insert("p1_over_3".into(), rational_value(p1_over_3));
                details.insert("sign_sum".into(), int_value(sign_sum));
                details.insert("normal_euler_sum".into(), int_value(normal_euler_sum));
            }
            VerdictDetails::None => {}
        }
        root.insert("details".into(), Value::Object(details));
        Value::Object(root)
    }
}

fn is_even(n: &BigInt) -> bool {
    (n % 2u32).is_zero()
}

/// Checks the vanishing statement for actions whose isolated fixed points all
/// have exponents one: `Σ ε = 0`, every Pontryagin number zero, Euler number
/// even and equal to the number of fixed points.
pub fn verify_vanishing(data: &CircleActionData) -> Result<Verdict> {
    ensure_valid(data)?;
    let theorem = Theorem::Vanishing;
    if !data.surfaces.is_empty() {
        return Ok(Verdict::inapplicable(
            theorem,
            "fixed set has surface components",
        ));
    }
    if let Some(i) = data.isolated.iter().position(|p| !p.all_exponents_one()) {
        return Ok(Verdict::inapplicable(
            theorem,
            format!("isolated[{i}] has an exponent other than 1"),
        ));
    }
    let sign_sum = data.sign_sum();
    let pontryagin = pontryagin_numbers(data)?;
    let euler = euler_number(data);
    let fixed_points = data.isolated.len();
    let pass = sign_sum.is_zero()
        && pontryagin.values().all(Zero::is_zero)
        && is_even(&euler)
        && euler == BigInt::from(fixed_points);
    Ok(Verdict {
        theorem,
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        details: VerdictDetails::Vanishing {
            sign_sum,
            pontryagin,
            euler,
            fixed_points,
        },
    })
}

/// Checks that `p_1/3`, `Σ ε` and the normal Euler sum agree for a 4-manifold
/// action with equal exponents at every isolated point.
pub fn verify_equal_exponent_signature(data: &CircleActionData) -> Result<Verdict> {
    ensure_valid(data)?;
    let theorem = Theorem::EqualExponentSignature;
    if data.half_dimension != 2 {
        return Ok(Verdict::inapplicable(
            theorem,
            format!("dimension {} is not 4", data.dimension()),
        ));
    }
    if let Some(i) = data.isolated.iter().position(|p| !p.has_equal_exponents()) {
        return Ok(Verdict::inapplicable(
            theorem,
            format!("isolated[{i}] has unequal exponents"),
        ));
    }
    let p1_over_3 = pontryagin_number(data, &Partition::single(1))? / rat(3);
    let sign_sum = data.sign_sum();
    let normal_euler_sum = data.normal_euler_sum();
    let pass = p1_over_3 == rat(sign_sum.clone()) && sign_sum == normal_euler_sum;
    Ok(Verdict {
        theorem,
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        details: VerdictDetails::EqualExponentSignature {
            p1_over_3,
            sign_sum,
            normal_euler_sum,
        },
    })
}

pub fn verify(data: &CircleActionData, theorem: Theorem) -> Result<Verdict> {
    match theorem {
        Theorem::Vanishing => verify_vanishing(data),
        Theorem::EqualExponentSignature => verify_equal_exponent_signature(data),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actiondata::{cp_action, sphere_action, IsolatedFixedPoint, Sign, SurfaceComponent};
    use crate::exactalg::ratio;

    fn p1() -> Partition {
        Partition::single(1)
    }

    fn blown_up_s4() -> CircleActionData {
        CircleActionData::new(2, vec![IsolatedFixedPoint::new([1u32, 1], Sign::Minus)])
            .with_surfaces(vec![SurfaceComponent::new(0u32, -1)])
    }

    #[test]
    fn cp2_sums() {
        let d = cp_action(&[0, 1, 2]).unwrap();
        assert_eq!(vanishing_sum(&d, &Partition::empty()).unwrap(), rat(0));
        assert_eq!(pontryagin_number(&d, &p1()).unwrap(), rat(3));
        assert_eq!(euler_number(&d), 3.into());
        let sig = signature(&d).unwrap();
        assert_eq!(sig.value, 1.into());
        assert_eq!(sig.method, SignatureMethod::LGenus);
    }

    #[test]
    fn cp3_first_degree_sum() {
        let d = cp_action(&[0, 1, 2, 3]).unwrap();
        let terms: Vec<ExactRational> = d
            .isolated
            .iter()
            .map(|p| point_term(p, &p1()).unwrap())
            .collect();
        assert_eq!(terms, vec![ratio(14, 6), rat(-3), rat(3), ratio(-14, 6)]);
        assert_eq!(vanishing_sum(&d, &p1()).unwrap(), rat(0));
        assert_eq!(
            signature(&d).unwrap().method,
            SignatureMethod::TrivialDimension
        );
    }

    #[test]
    fn spheres_cancel() {
        for exps in [
            vec![1u32, 1],
            vec![2, 3],
            vec![1, 2, 5],
            vec![3, 1, 4, 1, 5],
        ] {
            let d = sphere_action(&exps).unwrap();
            for m in admissible_monomials(exps.len()) {
                assert_eq!(vanishing_sum(&d, &m).unwrap(), rat(0));
            }
            assert_eq!(euler_number(&d), 2.into());
            for v in pontryagin_numbers(&d).unwrap().values() {
                assert!(v.is_zero());
            }
        }
        let d = sphere_action(&[2u32, 3]).unwrap();
        assert_eq!(
            point_term(&d.isolated[0], &Partition::empty()).unwrap(),
            ratio(1, 6)
        );
    }

    #[test]
    fn blown_up_sphere() {
        let d = blown_up_s4();
        assert_eq!(pontryagin_number(&d, &p1()).unwrap(), rat(-3));
        assert_eq!(euler_number(&d), 3.into());
        let sig = signature(&d).unwrap();
        assert_eq!(sig.value, (-1).into());
        assert_eq!(sig.method, SignatureMethod::EqualExponents);
        let v = verify_equal_exponent_signature(&d).unwrap();
        assert!(v.passed());
        assert_eq!(
            v.details,
            VerdictDetails::EqualExponentSignature {
                p1_over_3: rat(-1),
                sign_sum: (-1).into(),
                normal_euler_sum: (-1).into(),
            }
        );
    }

    #[test]
    fn both_poles_blown_up() {
        let d = CircleActionData::new(2, vec![]).with_surfaces(vec![
            SurfaceComponent::new(0u32, -1),
            SurfaceComponent::new(0u32, 1),
        ]);
        let v = verify_equal_exponent_signature(&d).unwrap();
        assert!(v.passed());
        assert_eq!(euler_number(&d), 4.into());
        assert_eq!(signature(&d).unwrap().value, 0.into());
    }

    #[test]
    fn inconsistent_surfaces_are_unrealizable() {
        let d = CircleActionData::new(2, vec![IsolatedFixedPoint::new([1u32, 1], Sign::Minus)])
            .with_surfaces(vec![SurfaceComponent::new(0u32, 2)]);
        assert!(matches!(signature(&d), Err(Error::NotRealizable { .. })));
        let v = verify_equal_exponent_signature(&d).unwrap();
        assert_eq!(v.outcome, Outcome::Fail);
    }

    #[test]
    fn argument_errors() {
        let d = cp_action(&[0, 1, 2]).unwrap();
        assert!(matches!(vanishing_sum(&d, &p1()), Err(Error::Argument(_))));
        assert!(matches!(
            pontryagin_number(&d, &Partition::single(2)),
            Err(Error::Argument(_))
        ));
        let d3 = cp_action(&[0, 1, 2, 3]).unwrap();
        assert!(matches!(
            pontryagin_number(&d3, &p1()),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            vanishing_sum(&blown_up_s4(), &Partition::empty()),
            Err(Error::UnsupportedData(_))
        ));
    }

    #[test]
    fn vanishing_verdicts() {
        let s4 = sphere_action(&[1u32, 1]).unwrap();
        let v = verify_vanishing(&s4).unwrap();
        assert!(v.passed());
        let json = v.to_json();
        assert_eq!(json["theorem"], "1.1");
        assert_eq!(json["pass"], true);
        assert_eq!(json["details"]["euler"], 2);

        let lone = CircleActionData::new(2, vec![IsolatedFixedPoint::new([1u32, 1], Sign::Plus)]);
        let v = verify_vanishing(&lone).unwrap();
        assert_eq!(v.outcome, Outcome::Fail);
        match v.details {
            VerdictDetails::Vanishing { sign_sum, .. } => assert_eq!(sign_sum, 1.into()),
            other => panic!("{other:?}"),
        }

        let cp2 = cp_action(&[0, 1, 2]).unwrap();
        let v = verify_vanishing(&cp2).unwrap();
        assert!(!v.applicable());
        assert_eq!(v.to_json()["pass"], Value::Null);
        assert!(!verify_vanishing(&blown_up_s4()).unwrap().applicable());
    }

    #[test]
    fn equal_exponent_verdict_inapplicable() {
        let cp2 = cp_action(&[0, 1, 2]).unwrap();
        assert!(!verify_equal_exponent_signature(&cp2).unwrap().applicable());
        let s6 = sphere_action(&[1u32, 1, 1]).unwrap();
        assert!(!verify_equal_exponent_signature(&s6).unwrap().applicable());
    }

    #[test]
    fn non_equal_exponents_with_surface() {
        // CP^2 with its middle point blown up: CP^2 # CP^2
        let d = CircleActionData::new(
            2,
            vec![
                IsolatedFixedPoint::new([1u32, 2], Sign::Plus),
                IsolatedFixedPoint::new([2u32, 1], Sign::Plus),
            ],
        )
        .with_surfaces(vec![SurfaceComponent::new(0u32, 1)]);
        assert_eq!(pontryagin_number(&d, &p1()).unwrap(), rat(6));
        let sig = signature(&d).unwrap();
        assert_eq!((sig.value, sig.method), (2.into(), SignatureMethod::LGenus));
    }

    #[test]
    fn report_fields() {
        let report = invariants(&cp_action(&[0, 1, 2, 3, 4]).unwrap()).unwrap();
        assert!(report.integral);
        assert_eq!(report.invariants.euler(), Some(&5.into()));
        assert_eq!(report.invariants.signature(), Some(&1.into()));
        let json = report.to_json();
        assert_eq!(json["invariants"]["pontryagin"]["p1^2"], 25);
        assert_eq!(json["invariants"]["pontryagin"]["p2"], 10);
        assert_eq!(json["signature_method"], "L-genus");
        assert_eq!(json["convention"], crate::CONVENTION);
    }

    #[test]
    fn non_integral_data_flagged() {
        let d = CircleActionData::new(2, vec![IsolatedFixedPoint::new([1u32, 2], Sign::Plus)]);
        assert_eq!(pontryagin_number(&d, &p1()).unwrap(), ratio(5, 2));
        assert!(matches!(invariants(&d), Err(Error::NotRealizable { .. })));
    }

    #[test]
    fn huge_dimension_leaves_signature_unknown() {
        let d = sphere_action(&[1u32; 12]).unwrap();
        let report = invariants(&d).unwrap();
        assert_eq!(report.invariants.signature(), None);
        assert!(report.signature_method.is_none());
        assert!(!report.invariants.notes().is_empty());
    }

    #[test]
    fn orientation_reversal() {
        for d in [cp_action(&[0, 1, 2]).unwrap(), blown_up_s4()] {
            let r = d.reversed();
            assert_eq!(signature(&r).unwrap().value, -signature(&d).unwrap().value);
            assert_eq!(
                pontryagin_number(&r, &p1()).unwrap(),
                -pontryagin_number(&d, &p1()).unwrap()
            );
        }
    }
}
