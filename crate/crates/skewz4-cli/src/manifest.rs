//! Reference-code manifest: generator polynomials with the parameters
//! their derived Z4 codes are expected to have.
//!
//! The manifest is a JSON data file so corrections never require a
//! rebuild. A copy is compiled in as the default for `verify` runs that
//! pass no --manifest path.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use skewz4::{CodeParams, DerivationKind, SkewPoly};

use crate::parse;

/// The manifest shipped with the repository.
pub const BUNDLED: &str = include_str!("../../../manifests/reference_codes.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<Entry>,
}

/// One reference code: a generator, how to build the code from it, and
/// expected parameters keyed by derived-code selector.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub label: String,
    pub generator: String,
    pub n: usize,
    pub k: KSpec,
    pub derivation: String,
    pub expected: Expectations,
}

/// Module size: the full free code of a right divisor, or the span of the
/// first k twisted shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KSpec {
    Free,
    Shifts(usize),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gray: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub res: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tor: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plotkin: Option<Expected>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: u32,
    /// Which Z4 code feeds both halves of the Plotkin sum; only present
    /// on plotkin expectations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operand: Option<Operand>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operand {
    Res,
    Tor,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operand::Res => "res",
            Operand::Tor => "tor",
        })
    }
}

impl Expected {
    pub fn params(&self) -> CodeParams {
        CodeParams {
            n: self.n,
            k1: self.k1,
            k2: self.k2,
            d_lee: self.d_lee,
        }
    }
}

impl Serialize for KSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            KSpec::Free => ser.serialize_str("free"),
            KSpec::Shifts(k) => ser.serialize_u64(*k as u64),
        }
    }
}

impl<'de> Deserialize<'de> for KSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(k) => Ok(KSpec::Shifts(k as usize)),
            Raw::Text(s) if s == "free" => Ok(KSpec::Free),
            Raw::Text(s) => Err(serde::de::Error::custom(format!(
                "k must be \"free\" or an integer, got \"{s}\""
            ))),
        }
    }
}

impl fmt::Display for KSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSpec::Free => f.write_str("free"),
            KSpec::Shifts(k) => write!(f, "{k}"),
        }
    }
}

impl Entry {
    pub fn derivation_kind(&self) -> Result<DerivationKind, parse::ParseError> {
        parse::derivation(&self.derivation)
    }

    pub fn generator_poly(&self) -> Result<SkewPoly, parse::ParseError> {
        parse::poly(&self.generator, self.derivation_kind()?)
    }
}

impl Manifest {
    /// Parse and sanity check: every generator must already be readable
    /// here so a typo surfaces as a load error naming the entry, not as
    /// a confusing per-row verification error later.
    pub fn from_json(text: &str) -> Result<Self, String> {
        let manifest: Manifest =
            serde_json::from_str(text).map_err(|e| format!("manifest JSON: {e}"))?;
        let mut seen = std::collections::BTreeSet::new();
        for entry in &manifest.entries {
            let label = &entry.label;
            if !seen.insert(label.clone()) {
                return Err(format!("duplicate label '{label}'"));
            }
            entry
                .generator_poly()
                .map_err(|e| format!("entry '{label}': {e}"))?;
            if entry.n == 0 {
                return Err(format!("entry '{label}': n must be positive"));
            }
            if let KSpec::Shifts(k) = entry.k {
                if k == 0 || k > entry.n {
                    return Err(format!("entry '{label}': k must be in 1..={}", entry.n));
                }
            }
            let ex = &entry.expected;
            if ex.gray.is_none() && ex.res.is_none() && ex.tor.is_none() && ex.plotkin.is_none() {
                return Err(format!("entry '{label}': no expected parameters"));
            }
            for (name, slot) in [("gray", &ex.gray), ("res", &ex.res), ("tor", &ex.tor)] {
                if slot.is_some_and(|e| e.operand.is_some()) {
                    return Err(format!(
                        "entry '{label}': operand is only meaningful on plotkin, not {name}"
                    ));
                }
            }
            if ex.plotkin.is_some_and(|e| e.operand.is_none()) {
                return Err(format!("entry '{label}': plotkin expectation needs an operand"));
            }
        }
        Ok(manifest)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("reading {}: {e}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn bundled() -> Self {
        Self::from_json(BUNDLED).expect("bundled manifest is valid")
    }
}
