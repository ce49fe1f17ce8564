//! Serde helpers encoding rationals as `["numerator", "denominator"]` string pairs.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Q;

fn encode(x: &Q) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

fn decode<E: serde::de::Error>(p: [String; 2]) -> Result<Q, E> {
    let n: BigInt = p[0].parse().map_err(E::custom)?;
    let d: BigInt = p[1].parse().map_err(E::custom)?;
    if d == BigInt::from(0) {
        return Err(E::custom("zero denominator"));
    }
    Ok(Q::new(n, d))
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    encode(x).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
    decode(<[String; 2]>::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(encode).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<[String; 2]>::deserialize(d)?.into_iter().map(decode::<D::Error>).collect()
    }
}
