//! Serde adapters writing unbounded integers as decimal strings, so the
//! JSON output survives readers whose numbers are doubles.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let text = String::deserialize(d)?;
    BigInt::from_str(&text).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| BigInt::from_str(t).map_err(D::Error::custom))
            .collect()
    }
}
