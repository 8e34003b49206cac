//! Verdict records shared by the checks and the command line.

use serde::{Deserialize, Serialize};

use crate::linalg::Q;
use crate::numbering::{marks_in, Numbering};
use crate::orbits::OrbitRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// A failure dominates, then an inconclusive result.
    pub fn combine(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
        vs.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        })
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    pub evidence: String,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, verdict: Verdict, evidence: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            verdict,
            evidence: evidence.into(),
        }
    }
}

/// One check run on one diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub diagram: Vec<u8>,
    pub check: String,
    pub verdict: Verdict,
    pub evidence: String,
    pub seed: u64,
}

/// The exported form of an orbit, diagrams written in a chosen numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub diagram: Vec<u8>,
    pub dim_orbit: usize,
    pub height: i64,
    pub even: bool,
    pub divisible: bool,
    pub half: Option<Vec<u8>>,
    #[serde(with = "qserde")]
    pub index: Q,
    pub checks: Vec<CheckRecord>,
}

impl OrbitReport {
    pub fn new(r: &OrbitRecord, numbering: Numbering) -> Self {
        OrbitReport {
            ty: r.diagram.simple_type.to_string(),
            diagram: marks_in(&r.diagram, numbering),
            dim_orbit: r.dim_orbit,
            height: r.height,
            even: r.even,
            divisible: r.divisible,
            half: r.half.as_ref().map(|h| marks_in(h, numbering)),
            index: r.dynkin_index.clone(),
            checks: Vec::new(),
        }
    }

    pub fn verdict(&self) -> Verdict {
        let vs = self.checks.iter().map(|c| c.verdict);
        Verdict::combine(vs)
    }
}

/// Rationals as JSON integers when integral, otherwise as `"a/b"` strings.
pub mod qserde {
    use crate::linalg::Q;
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        if v.is_integer() {
            if let Ok(n) = i64::try_from(v.numer()) {
                return n.serialize(s);
            }
        }
        v.to_string().serialize(s)
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Q::from_integer(BigInt::from(n))),
            Raw::Str(s) => s.parse::<Q>().map_err(D::Error::custom),
        }
    }
}
