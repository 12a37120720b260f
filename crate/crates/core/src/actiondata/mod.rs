//! Fixed-point data of circle actions, its validation and JSON form, and
//! generators for the linear actions on projective spaces and spheres.

mod generators;
mod invariants;
mod serial;

pub use generators::{cp_action, sphere_action};
pub use invariants::ManifoldInvariants;
pub(crate) use serial::invariants_to_value;
pub use serial::{parse, parse_invariants, serialize, serialize_invariants};

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Violation;

/// Orientation sign of an isolated fixed point: whether the orientation
/// induced by the rotation frame agrees with that of the manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        -self
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An isolated fixed point: its exponents `m_1..m_n` and sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatedFixedPoint {
    pub exponents: Vec<BigUint>,
    pub sign: Sign,
}

impl IsolatedFixedPoint {
    pub fn new<E: Into<BigUint>>(exponents: impl IntoIterator<Item = E>, sign: Sign) -> Self {
        IsolatedFixedPoint {
            exponents: exponents.into_iter().map(Into::into).collect(),
            sign,
        }
    }

    /// Exponents sorted ascending, the point's exponent multiset.
    pub fn exponent_multiset(&self) -> Vec<BigUint> {
        let mut m = self.exponents.clone();
        m.sort();
        m
    }

    pub fn has_equal_exponents(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] == w[1])
    }

    pub fn all_exponents_one(&self) -> bool {
        self.exponents.iter().all(|m| *m == BigUint::from(1u32))
    }
}

impl fmt::Display for IsolatedFixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exponents.iter().map(ToString::to_string).collect();
        write!(f, "(({}),{})", exps.join(","), self.sign)
    }
}

/// A two-dimensional fixed component of an action on a 4-manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceComponent {
    pub genus: BigUint,
    /// Euler number of the normal bundle.
    pub normal_euler: BigInt,
    pub label: Option<String>,
}

impl SurfaceComponent {
    pub fn new(genus: impl Into<BigUint>, normal_euler: impl Into<BigInt>) -> Self {
        SurfaceComponent {
            genus: genus.into(),
            normal_euler: normal_euler.into(),
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `2 - 2g`.
    pub fn euler_characteristic(&self) -> BigInt {
        BigInt::from(2) - BigInt::from(2) * BigInt::from(self.genus.clone())
    }
}

/// Complete fixed-point description of a circle action on a closed oriented
/// `2n`-manifold.
///
/// The point lists are multisets; their order carries no meaning beyond giving
/// each point a stable index for surgeries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleActionData {
    pub half_dimension: usize,
    pub isolated: Vec<IsolatedFixedPoint>,
    pub surfaces: Vec<SurfaceComponent>,
    pub label: Option<String>,
}

impl CircleActionData {
    pub fn new(half_dimension: usize, isolated: Vec<IsolatedFixedPoint>) -> Self {
        CircleActionData {
            half_dimension,
            isolated,
            surfaces: Vec::new(),
            label: None,
        }
    }

    pub fn with_surfaces(mut self, surfaces: Vec<SurfaceComponent>) -> Self {
        self.surfaces = surfaces;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dimension(&self) -> usize {
        2 * self.half_dimension
    }

    /// Same action on the manifold with the opposite orientation.
    pub fn reversed(&self) -> CircleActionData {
        CircleActionData {
            half_dimension: self.half_dimension,
            isolated: self
                .isolated
                .iter()
                .map(|p| IsolatedFixedPoint {
                    exponents: p.exponents.clone(),
                    sign: -p.sign,
                })
                .collect(),
            surfaces: self
                .surfaces
                .iter()
                .map(|s| SurfaceComponent {
                    normal_euler: -s.normal_euler.clone(),
                    ..s.clone()
                })
                .collect(),
            label: self.label.as_ref().map(|l| format!("-{l}")),
        }
    }

    /// Copy with points and surfaces in a canonical order, for comparing
    /// datasets as multisets.
    pub fn canonical(&self) -> CircleActionData {
        let mut out = self.clone();
        for p in &mut out.isolated {
            p.exponents.sort();
        }
        out.isolated
            .sort_by(|a, b| (&a.exponents, a.sign).cmp(&(&b.exponents, b.sign)));
        out.surfaces.sort_by(|a, b| {
            (&a.genus, &a.normal_euler, &a.label).cmp(&(&b.genus, &b.normal_euler, &b.label))
        });
        out
    }

    /// Multiset equality of the fixed-point data; labels are ignored.
    pub fn same_fixed_points(&self, other: &CircleActionData) -> bool {
        let strip = |d: &CircleActionData| {
            let mut c = d.canonical();
            c.label = None;
            for s in &mut c.surfaces {
                s.label = None;
            }
            c.canonical()
        };
        strip(self) == strip(other)
    }

    pub fn sign_sum(&self) -> BigInt {
        self.isolated
            .iter()
            .map(|p| BigInt::from(p.sign.as_i64()))
            .sum()
    }

    pub fn normal_euler_sum(&self) -> BigInt {
        self.surfaces.iter().map(|s| s.normal_euler.clone()).sum()
    }
}

impl fmt::Display for CircleActionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            write!(f, "{label}: ")?;
        }
        write!(f, "dim {} ", self.dimension())?;
        let pts: Vec<String> = self.isolated.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", pts.join(", "))?;
        for s in &self.surfaces {
            write!(f, " + surface(g={}, e={})", s.genus, s.normal_euler)?;
        }
        Ok(())
    }
}

/// Every broken invariant of `data`; empty iff the data is well formed.
pub fn validate(data: &CircleActionData) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = data.half_dimension;
    if n == 0 {
        out.push(Violation::new(
            "half_dimension",
            "half_dimension must be at least 1",
        ));
    }
    for (i, p) in data.isolated.iter().enumerate() {
        if p.exponents.len() != n {
            out.push(Violation::new(
                format!("isolated[{i}].exponents"),
                format!(
                    "expected {n} exponents (half_dimension), found {}",
                    p.exponents.len()
                ),
            ));
        }
        for (j, m) in p.exponents.iter().enumerate() {
            if m.is_zero() {
                out.push(Violation::new(
                    format!("isolated[{i}].exponents[{j}]"),
                    "exponents must be positive",
                ));
            }
        }
    }
    if !data.surfaces.is_empty() && n != 2 {
        out.push(Violation::new(
            "surfaces",
            format!(
                "surfaces require dimension 4, but half_dimension is {n} (dimension {})",
                2 * n
            ),
        ));
    }
    out
}
