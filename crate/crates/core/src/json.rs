//! JSON encoding for arbitrary-precision integers.
//!
//! Values that fit in 64 bits are written as plain JSON numbers; anything
//! larger is written as a decimal string. Both forms are accepted on input.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A `BigInt` with the number-or-string JSON encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Big(pub BigInt);

impl From<BigInt> for Big {
    fn from(v: BigInt) -> Self {
        Big(v)
    }
}

impl From<BigUint> for Big {
    fn from(v: BigUint) -> Self {
        Big(v.into())
    }
}

impl fmt::Display for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some(v) = self.0.to_i64() {
            s.serialize_i64(v)
        } else if let Some(v) = self.0.to_u64() {
            s.serialize_u64(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

struct BigVisitor;

impl Visitor<'_> for BigVisitor {
    type Value = Big;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Big, E> {
        Ok(Big(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Big, E> {
        Ok(Big(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Big, E> {
        v.parse().map(Big).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Big {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Big, D::Error> {
        d.deserialize_any(BigVisitor)
    }
}

/// `#[serde(with = "foxcol_core::json::big_uint")]`
pub mod big_uint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        Big(v.clone().into()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let Big(v) = Big::deserialize(d)?;
        v.to_biguint()
            .ok_or_else(|| de::Error::custom("expected a nonnegative integer"))
    }
}

/// `#[serde(with = "foxcol_core::json::big_uint_vec")]`
pub mod big_uint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| Big(x.clone().into())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Big>::deserialize(d)?
            .into_iter()
            .map(|Big(v)| {
                v.to_biguint()
                    .ok_or_else(|| de::Error::custom("expected a nonnegative integer"))
            })
            .collect()
    }
}
