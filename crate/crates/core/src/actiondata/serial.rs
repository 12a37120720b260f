//! Canonical JSON documents for action data and manifold invariants.
//!
//! Object keys are emitted sorted and list order is preserved, so equal data
//! always produces identical bytes and `parse(serialize(d)) == d`.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde_json::{Map, Value};

use super::{
    validate, CircleActionData, IsolatedFixedPoint, ManifoldInvariants, Sign, SurfaceComponent,
};
use crate::error::{Error, Result};
use crate::exactalg::Partition;
use crate::json::{as_bigint, as_rational, int_value, rational_value, to_pretty, uint_value};

pub fn serialize(data: &CircleActionData) -> String {
    to_pretty(&action_to_value(data))
}

pub(crate) fn action_to_value(data: &CircleActionData) -> Value {
    let mut root = Map::new();
    root.insert("half_dimension".into(), Value::from(data.half_dimension));
    let isolated = data
        .isolated
        .iter()
        .map(|p| {
            let mut m = Map::new();
            m.insert(
                "exponents".into(),
                Value::Array(p.exponents.iter().map(uint_value).collect()),
            );
            m.insert("sign".into(), Value::from(p.sign.as_i64()));
            Value::Object(m)
        })
        .collect();
    root.insert("isolated".into(), Value::Array(isolated));
    if let Some(label) = &data.label {
        root.insert("label".into(), Value::String(label.clone()));
    }
    if !data.surfaces.is_empty() {
        let surfaces = data
            .surfaces
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("genus".into(), uint_value(&s.genus));
                m.insert("normal_euler".into(), int_value(&s.normal_euler));
                if let Some(label) = &s.label {
                    m.insert("label".into(), Value::String(label.clone()));
                }
                Value::Object(m)
            })
            .collect();
        root.insert("surfaces".into(), Value::Array(surfaces));
    }
    Value::Object(root)
}

fn field_err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        location: if path.is_empty() {
            "document root".into()
        } else {
            path.into()
        },
        message: message.into(),
    }
}

fn read_json(bytes: &[u8]) -> Result<Value> {
    serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| field_err(path, "expected a JSON object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| field_err(path, "expected a JSON array"))
}

fn check_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            let at = if path.is_empty() {
                key.clone()
            } else {
                format!("{path}.{key}")
            };
            return Err(field_err(&at, format!("unknown field {key:?}")));
        }
    }
    Ok(())
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| field_err(path, format!("missing field {key:?}")))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn read_label(obj: &Map<String, Value>, path: &str) -> Result<Option<String>> {
    match obj.get("label") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(field_err(&join(path, "label"), "label must be a string")),
    }
}

fn read_int(v: &Value, path: &str) -> Result<BigInt> {
    as_bigint(v).ok_or_else(|| field_err(path, "expected an integer"))
}

fn read_nonneg(v: &Value, path: &str, what: &str) -> Result<BigUint> {
    let n = read_int(v, path)?;
    n.to_biguint()
        .ok_or_else(|| field_err(path, format!("{what} must not be negative")))
}

fn read_point(v: &Value, path: &str) -> Result<IsolatedFixedPoint> {
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["exponents", "sign"])?;
    let exp_path = join(path, "exponents");
    let exponents = as_array(required(obj, "exponents", path)?, &exp_path)?
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let at = format!("{exp_path}[{j}]");
            let n = read_int(e, &at)?;
            if n.is_negative() {
                return Err(field_err(&at, "exponents must be positive"));
            }
            Ok(n.magnitude().clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let sign_path = join(path, "sign");
    let sign = as_bigint(required(obj, "sign", path)?)
        .and_then(|s| i64::try_from(s).ok())
        .and_then(Sign::from_i64)
        .ok_or_else(|| field_err(&sign_path, "sign must be 1 or -1"))?;
    Ok(IsolatedFixedPoint { exponents, sign })
}

fn read_surface(v: &Value, path: &str) -> Result<SurfaceComponent> {
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["genus", "normal_euler", "label"])?;
    let genus = read_nonneg(required(obj, "genus", path)?, &join(path, "genus"), "genus")?;
    let normal_euler = read_int(
        required(obj, "normal_euler", path)?,
        &join(path, "normal_euler"),
    )?;
    Ok(SurfaceComponent {
        genus,
        normal_euler,
        label: read_label(obj, path)?,
    })
}

pub(crate) fn action_from_value(root: &Value) -> Result<CircleActionData> {
    let obj = as_object(root, "")?;
    check_keys(
        obj,
        "",
        &["half_dimension", "isolated", "surfaces", "label"],
    )?;
    let half_dimension = as_bigint(required(obj, "half_dimension", "")?)
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| field_err("half_dimension", "expected a non-negative integer"))?;
    let isolated = as_array(required(obj, "isolated", "")?, "isolated")?
        .iter()
        .enumerate()
        .map(|(i, p)| read_point(p, &format!("isolated[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let surfaces = match obj.get("surfaces") {
        None | Some(Value::Null) => Vec::new(),
        Some(v) => as_array(v, "surfaces")?
            .iter()
            .enumerate()
            .map(|(i, s)| read_surface(s, &format!("surfaces[{i}]")))
            .collect::<Result<Vec<_>>>()?,
    };
    let data = CircleActionData {
        half_dimension,
        isolated,
        surfaces,
        label: read_label(obj, "")?,
    };
    let violations = validate(&data);
    if violations.is_empty() {
        Ok(data)
    } else {
        Err(Error::Invalid(violations))
    }
}

/// Reads an action-data document. Syntax errors carry line and column,
/// schema errors the field path; well-formed documents that break a data
/// invariant yield [`Error::Invalid`] with every violation.
pub fn parse(bytes: &[u8]) -> Result<CircleActionData> {
    action_from_value(&read_json(bytes)?)
}

pub fn serialize_invariants(inv: &ManifoldInvariants) -> String {
    to_pretty(&invariants_to_value(inv))
}

pub(crate) fn invariants_to_value(inv: &ManifoldInvariants) -> Value {
    let mut root = Map::new();
    root.insert("dimension".into(), Value::from(inv.dimension()));
    root.insert("euler".into(), inv.euler().map_or(Value::Null, int_value));
    root.insert(
        "signature".into(),
        inv.signature().map_or(Value::Null, int_value),
    );
    let mut p = Map::new();
    for (key, value) in inv.pontryagin_numbers() {
        p.insert(
            key.monomial_name(),
            value.as_ref().map_or(Value::Null, rational_value),
        );
    }
    root.insert("pontryagin".into(), Value::Object(p));
    if let Some(label) = inv.label() {
        root.insert("label".into(), Value::String(label.to_string()));
    }
    if !inv.notes().is_empty() {
        root.insert(
            "notes".into(),
            Value::Array(inv.notes().iter().cloned().map(Value::String).collect()),
        );
    }
    Value::Object(root)
}

pub(crate) fn invariants_from_value(root: &Value) -> Result<ManifoldInvariants> {
    let obj = as_object(root, "")?;
    check_keys(
        obj,
        "",
        &[
            "dimension",
            "euler",
            "signature",
            "pontryagin",
            "label",
            "notes",
        ],
    )?;
    let dimension = as_bigint(required(obj, "dimension", "")?)
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| field_err("dimension", "expected a non-negative integer"))?;
    let mut inv = ManifoldInvariants::new(dimension);
    let opt_int = |key: &str| -> Result<Option<BigInt>> {
        match obj.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => read_int(v, key).map(Some),
        }
    };
    inv.set_euler(opt_int("euler")?);
    inv.set_signature(opt_int("signature")?);
    if let Some(v) = obj.get("pontryagin").filter(|v| !v.is_null()) {
        let map = as_object(v, "pontryagin")?;
        for (name, value) in map {
            let at = format!("pontryagin.{name}");
            let key: Partition = name
                .parse()
                .map_err(|_| field_err(&at, "key must name a Pontryagin monomial such as p1^2"))?;
            let value = match value {
                Value::Null => None,
                v => Some(as_rational(v).ok_or_else(|| {
                    field_err(&at, "expected an integer, a \"p/q\" string or null")
                })?),
            };
            inv.set_pontryagin(&key, value)
                .map_err(|e| field_err(&at, e.to_string()))?;
        }
    }
    inv.set_label(read_label(obj, "")?);
    if let Some(notes) = obj.get("notes").filter(|v| !v.is_null()) {
        for (i, n) in as_array(notes, "notes")?.iter().enumerate() {
            let s = n
                .as_str()
                .ok_or_else(|| field_err(&format!("notes[{i}]"), "notes must be strings"))?;
            inv.add_note(s);
        }
    }
    Ok(inv)
}

/// Reads a manifold-invariants document. A report object carrying the
/// invariants under an `"invariants"` key is accepted as well.
pub fn parse_invariants(bytes: &[u8]) -> Result<ManifoldInvariants> {
    let root = read_json(bytes)?;
    match root.get("invariants") {
        Some(inner) if root.get("dimension").is_none() => invariants_from_value(inner),
        _ => invariants_from_value(&root),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actiondata::{cp_action, sphere_action};
    use crate::exactalg::{rat, ratio};
    use proptest::prelude::*;

    const S4_DOC: &str = r#"{"label": "S4-rotation", "half_dimension": 2,
     "isolated": [{"exponents": [1,1], "sign": 1}, {"exponents": [1,1], "sign": -1}],
     "surfaces": [{"genus": 0, "normal_euler": -1, "label": "E"}]}"#;

    #[test]
    fn reads_reference_document() {
        let d = parse(S4_DOC.as_bytes()).unwrap();
        assert_eq!(d.label.as_deref(), Some("S4-rotation"));
        assert_eq!(d.isolated.len(), 2);
        assert_eq!(
            d.surfaces,
            vec![SurfaceComponent::new(0u32, -1).with_label("E")]
        );
        assert_eq!(parse(serialize(&d).as_bytes()).unwrap(), d);
    }

    #[test]
    fn sphere_round_trip_and_canonical_text() {
        let d = sphere_action(&[1u32, 1]).unwrap();
        let text = serialize(&d);
        assert_eq!(
            text,
            "{\n  \"half_dimension\": 2,\n  \"isolated\": [\n    {\n      \"exponents\": [\n        1,\n        1\n      ],\n      \"sign\": 1\n    },\n    {\n      \"exponents\": [\n        1,\n        1\n      ],\n      \"sign\": -1\n    }\n  ],\n  \"label\": \"S^4\"\n}\n"
        );
        assert_eq!(parse(text.as_bytes()).unwrap(), d);
    }

    #[test]
    fn bad_sign() {
        let doc = r#"{"half_dimension": 1, "isolated": [{"exponents": [1], "sign": 2}]}"#;
        match parse(doc.as_bytes()) {
            Err(Error::Parse { location, message }) => {
                assert_eq!(location, "isolated[0].sign");
                assert_eq!(message, "sign must be 1 or -1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn surfaces_in_dimension_six() {
        let doc = r#"{"half_dimension": 3, "isolated": [],
            "surfaces": [{"genus": 0, "normal_euler": 1}]}"#;
        match parse(doc.as_bytes()) {
            Err(Error::Invalid(v)) => assert_eq!(v[0].path, "surfaces"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse(b"{\n  \"half_dimension\": 2,\n  \"isolated\": [\n}").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.starts_with("line 4"), "{location}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        let cases = [
            (r#"{"isolated": []}"#, "document root"),
            (
                r#"{"half_dimension": 2, "isolated": [], "extra": 1}"#,
                "extra",
            ),
            (
                r#"{"half_dimension": 1, "isolated": [{"exponents": [-1], "sign": 1}]}"#,
                "isolated[0].exponents[0]",
            ),
            (
                r#"{"half_dimension": 1, "isolated": [{"exponents": [1.5], "sign": 1}]}"#,
                "isolated[0].exponents[0]",
            ),
            (
                r#"{"half_dimension": 2, "isolated": [], "surfaces": [{"genus": -1, "normal_euler": 0}]}"#,
                "surfaces[0].genus",
            ),
            (r#"[1, 2]"#, "document root"),
        ];
        for (doc, loc) in cases {
            match parse(doc.as_bytes()) {
                Err(Error::Parse { location, .. }) => assert_eq!(location, loc, "{doc}"),
                other => panic!("{doc}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn zero_exponent_is_a_violation() {
        let doc = r#"{"half_dimension": 1, "isolated": [{"exponents": [0], "sign": 1}]}"#;
        assert!(matches!(parse(doc.as_bytes()), Err(Error::Invalid(_))));
    }

    #[test]
    fn arbitrary_precision_exponents() {
        let doc = r#"{"half_dimension": 1, "isolated": [{"exponents": [340282366920938463463374607431768211457], "sign": 1}]}"#;
        let d = parse(doc.as_bytes()).unwrap();
        assert_eq!(
            d.isolated[0].exponents[0].to_string(),
            "340282366920938463463374607431768211457"
        );
        assert!(serialize(&d).contains("340282366920938463463374607431768211457"));
    }

    #[test]
    fn invariants_round_trip() {
        let mut inv = ManifoldInvariants::new(8).with_euler(5).with_label("CP^4");
        inv.set_pontryagin(&Partition::single(2), Some(rat(10)))
            .unwrap();
        inv.set_pontryagin(&Partition::new([1, 1]).unwrap(), Some(ratio(7, 3)))
            .unwrap();
        inv.add_note("test");
        let text = serialize_invariants(&inv);
        assert!(text.contains("\"p1^2\": \"7/3\""));
        assert!(text.contains("\"signature\": null"));
        assert_eq!(parse_invariants(text.as_bytes()).unwrap(), inv);

        let wrapped = format!("{{\"invariants\": {text}, \"integral\": false}}");
        assert_eq!(parse_invariants(wrapped.as_bytes()).unwrap(), inv);
    }

    #[test]
    fn invariants_reject_wrong_monomial() {
        let doc = r#"{"dimension": 4, "pontryagin": {"p2": 1}}"#;
        assert!(matches!(
            parse_invariants(doc.as_bytes()),
            Err(Error::Parse { .. })
        ));
    }

    fn arb_data() -> impl Strategy<Value = CircleActionData> {
        (1usize..5).prop_flat_map(|n| {
            let point = (prop::collection::vec(1u64..1000, n), any::<bool>()).prop_map(|(e, s)| {
                IsolatedFixedPoint::new(e, if s { Sign::Plus } else { Sign::Minus })
            });
            let surface = (0u64..5, -10i64..10, prop::option::of("[a-zA-Z0-9 ]{0,6}")).prop_map(
                |(g, e, l)| SurfaceComponent {
                    genus: g.into(),
                    normal_euler: e.into(),
                    label: l,
                },
            );
            let surfaces = if n == 2 {
                prop::collection::vec(surface, 0..3).boxed()
            } else {
                Just(Vec::new()).boxed()
            };
            (
                prop::collection::vec(point, 0..6),
                surfaces,
                prop::option::of("[a-zA-Z0-9^#\"\\\\ -]{0,10}"),
            )
                .prop_map(move |(isolated, surfaces, label)| CircleActionData {
                    half_dimension: n,
                    isolated,
                    surfaces,
                    label,
                })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(d in arb_data()) {
            let text = serialize(&d);
            prop_assert_eq!(parse(text.as_bytes()).unwrap(), d.clone());
            prop_assert_eq!(serialize(&parse(text.as_bytes()).unwrap()), text);
        }
    }

    #[test]
    fn generated_data_round_trips() {
        let d = cp_action(&[-2, 0, 5, 9]).unwrap();
        assert_eq!(parse(serialize(&d).as_bytes()).unwrap(), d);
    }
}
