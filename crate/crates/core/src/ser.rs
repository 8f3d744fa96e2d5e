//! Serde helpers: exact numbers are written as decimal-free strings.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::Serializer;

use crate::exact::{BigInt, BigRat};

pub fn rat<S: Serializer>(v: &BigRat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn rat_map<S: Serializer>(m: &BTreeMap<u32, BigRat>, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    map.end()
}
