//! JSON schemas and the deterministic writer.
//!
//! Floats are written as `{:.16e}` (17 significant digits), which round-trips
//! every finite double. Field order follows struct declaration order.

use std::io;

use serde::ser::Serialize;
use serde::{Deserialize, Serialize as SerializeDerive};
use serde_json::ser::{Formatter, PrettyFormatter};

use quatmotion::{ComplexScalar, DualScalar, Quaternion};

use crate::error::{CliError, CliResult};

/// Pretty printer with fixed float formatting.
struct FixedFloat<'a>(PrettyFormatter<'a>);

impl Formatter for FixedFloat<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Serializes `value` with a trailing newline. Non-finite floats are
/// rejected rather than written as `null`.
pub fn to_string<T: Serialize>(value: &T) -> CliResult<String> {
    let v = serde_json::to_value(value)?;
    if !all_finite(&v) {
        return Err(CliError::Numeric(quatmotion::Error::ConstraintViolated("result contains a non-finite number")));
    }
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloat(PrettyFormatter::with_indent(b"  ")));
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(|e| CliError::Schema(e.to_string()))
}

fn all_finite(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Null => false,
        serde_json::Value::Number(n) => n.as_f64().is_none_or(f64::is_finite),
        serde_json::Value::Array(a) => a.iter().all(all_finite),
        serde_json::Value::Object(o) => o.values().all(all_finite),
        _ => true,
    }
}

pub fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> CliResult<T> {
    serde_json::from_str(s).map_err(|e| CliError::Schema(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuatJ {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<Quaternion<f64>> for QuatJ {
    fn from(q: Quaternion<f64>) -> Self {
        Self { w: q.w, x: q.x, y: q.y, z: q.z }
    }
}

impl From<QuatJ> for Quaternion<f64> {
    fn from(q: QuatJ) -> Self {
        Quaternion::new(q.w, q.x, q.y, q.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualQuatJ {
    pub real: QuatJ,
    pub dual: QuatJ,
}

impl From<Quaternion<DualScalar>> for DualQuatJ {
    fn from(q: Quaternion<DualScalar>) -> Self {
        let (p, r) = quatmotion::rigid::dual_parts(q);
        Self { real: p.into(), dual: r.into() }
    }
}

impl From<DualQuatJ> for Quaternion<DualScalar> {
    fn from(q: DualQuatJ) -> Self {
        quatmotion::rigid::dual_quat(q.real.into(), q.dual.into())
    }
}

/// Complex number as `[re, im]`.
pub type ComplexJ = [f64; 2];

pub fn complex_j(z: ComplexScalar) -> ComplexJ {
    [z.re, z.im]
}

pub fn complex_from_j(z: ComplexJ) -> ComplexScalar {
    ComplexScalar::new(z[0], z[1])
}

/// Complex quaternion with `[re, im]` components.
#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexQuatJ {
    pub w: ComplexJ,
    pub x: ComplexJ,
    pub y: ComplexJ,
    pub z: ComplexJ,
}

impl From<Quaternion<ComplexScalar>> for ComplexQuatJ {
    fn from(q: Quaternion<ComplexScalar>) -> Self {
        Self { w: complex_j(q.w), x: complex_j(q.x), y: complex_j(q.y), z: complex_j(q.z) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScrewJ {
    pub u: [f64; 3],
    pub m: [f64; 3],
    pub theta: f64,
    pub s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EulerJ {
    pub roll: f64,
    pub pitch: f64,
    pub yaw: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RigidJ {
    pub a: [f64; 3],
    #[serde(rename = "R")]
    pub r: [[f64; 3]; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlueckerJ {
    pub u: [f64; 3],
    pub m: [f64; 3],
}

pub type Mat3J = [[f64; 3]; 3];
pub type Mat4J = [[f64; 4]; 4];
pub type Complex2J = [[ComplexJ; 2]; 2];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        let q = QuatJ { w: 1.0, x: -0.1, y: 1.0 / 3.0, z: 0.0 };
        let s = to_string(&q).unwrap();
        assert!(s.contains("\"w\": 1.0000000000000000e0"));
        assert!(s.contains("\"x\": -1.0000000000000001e-1"));
        let back: QuatJ = from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn rejects_non_finite_and_unknown_fields() {
        assert!(to_string(&QuatJ { w: f64::NAN, x: 0.0, y: 0.0, z: 0.0 }).is_err());
        assert!(from_str::<QuatJ>(r#"{"w":1,"x":0,"y":0,"z":0,"k":1}"#).is_err());
        assert!(from_str::<QuatJ>(r#"{"w":1,"x":0,"y":0}"#).is_err());
    }
}
