//! Fixed 17-significant-digit float text, used for every JSON and CSV float
//! this crate emits. Non-finite values become JSON `null`.

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

/// `-1.7320508075688772e0` style; round-trips every finite `f64`.
pub fn format(x: f64) -> String {
    if x == 0.0 {
        // drop the sign of negative zero
        return format!("{:.16e}", 0.0f64);
    }
    format!("{x:.16e}")
}

pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return s.serialize_none();
    }
    let raw = RawValue::from_string(format(*x)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

/// `null` reads back as `+inf` (an unbounded margin).
pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}
