//! Serde adapters rendering big integers as bare JSON numbers of any length.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n: Number = v
        .to_string()
        .parse()
        .map_err(|e| serde::ser::Error::custom(format!("{e}")))?;
    n.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let n = Number::deserialize(d)?;
    n.to_string()
        .parse()
        .map_err(|_| serde::de::Error::custom(format!("{n} is not an integer")))
}
