//! Wire types shared by every subcommand.
//!
//! Integers are JSON numbers while they fit in 53 bits and decimal strings
//! beyond that; either form is accepted on input. Rationals are always
//! strings, `"p/q"` or `"p"`.

use std::fmt;

use perron_core::{BigInt, BigRational, BigUint, NatVec, Step, Trace};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

const MAX_SAFE: i64 = (1 << 53) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nat(pub BigUint);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub BigRational);

impl Serialize for Nat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(v) if v <= MAX_SAFE as u64 => s.serialize_u64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.trim()
            .parse()
            .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor).map(Int)
    }
}

impl<'de> Deserialize<'de> for Nat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = d.deserialize_any(IntVisitor)?;
        v.to_biguint()
            .map(Nat)
            .ok_or_else(|| de::Error::custom(format!("expected a natural number, found {v}")))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RationalVisitor;
        impl Visitor<'_> for RationalVisitor {
            type Value = BigRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational \"p/q\" or an integer")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigRational, E> {
                Ok(BigRational::from_integer(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigRational, E> {
                Ok(BigRational::from_integer(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigRational, E> {
                let t: String = v.chars().filter(|c| !c.is_whitespace()).collect();
                t.parse()
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(RationalVisitor).map(Rational)
    }
}

pub fn nats(v: &NatVec) -> Vec<Nat> {
    v.entries().iter().cloned().map(Nat).collect()
}

pub fn to_natvec(v: &[Nat]) -> Vec<BigUint> {
    v.iter().map(|n| n.0.clone()).collect()
}

/// `{"kind": …, "seed"?: …, "choices"?: […]}`
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdversaryDescriptor {
    pub kind: AdversaryKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choices: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdversaryKind {
    #[default]
    First,
    Random,
    MaxGrowth,
    Scripted,
    Interactive,
}

/// One round of a trace, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    #[serde(rename = "J")]
    pub set: Vec<usize>,
    pub j: usize,
}

impl TraceEntry {
    pub fn to_step(&self, dim: usize) -> Option<Step> {
        if self.j == 0 || self.set.contains(&0) {
            return None;
        }
        Step::new(dim, self.set.iter().map(|i| i - 1), self.j - 1).ok()
    }
}

pub fn trace_entries(trace: &Trace) -> Vec<TraceEntry> {
    trace
        .iter()
        .map(|s| TraceEntry {
            set: s.set().iter().map(|i| i + 1).collect(),
            j: s.pivot() + 1,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub status: Status,
    pub payload: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
    pub diagnostics: Vec<String>,
}

impl ResultDocument {
    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

// Payloads.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparePayload {
    pub relation: Relation,
    pub final_alpha: Vec<Nat>,
    pub final_beta: Vec<Nat>,
    pub matrix: Vec<Vec<Nat>>,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GamePayload {
    pub winner_index: usize,
    pub final_vectors: Vec<Vec<Nat>>,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivizePayload {
    pub basis_in_original: Vec<Vec<Int>>,
    pub basis_images: Vec<Vec<Rational>>,
    pub coords: Vec<Vec<Nat>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: Rational,
    pub exponents: Vec<Nat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomializePayload {
    pub substitution: Vec<Vec<Nat>>,
    pub new_values: Vec<Vec<Rational>>,
    pub factor_exponents: Vec<Nat>,
    pub unit: Vec<Term>,
}

// Inputs.

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareInput {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub alpha: Vec<Nat>,
    pub beta: Vec<Nat>,
    #[serde(default)]
    pub adversary: Option<AdversaryDescriptor>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameInput {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub vectors: Vec<Vec<Nat>>,
    #[serde(default)]
    pub adversary: Option<AdversaryDescriptor>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositivizeInput {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub generator_images: Vec<Vec<Rational>>,
    pub elements: Vec<Vec<Int>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomializeInput {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub num_vars: usize,
    pub num_toric: usize,
    pub values: Vec<Vec<Rational>>,
    pub polynomial: Vec<Term>,
}
