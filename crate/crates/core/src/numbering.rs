//! Conversion between Bourbaki node labels and the Vinberg–Onishchik labels.
//!
//! Both are 0-based permutations here: `vo_order(t)[k]` is the Bourbaki
//! index of VO node `k`. Classical types use the same labels in both.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::WeightedDiagram;
use crate::rootsys::{Series, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Numbering {
    #[default]
    Bourbaki,
    Vo,
}

impl std::str::FromStr for Numbering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bourbaki" => Ok(Numbering::Bourbaki),
            "vo" => Ok(Numbering::Vo),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

pub fn vo_order(t: SimpleType) -> Vec<usize> {
    let n = t.rank;
    match t.series {
        // VO numbers the long chain from the far end and puts the branch node last.
        Series::E => {
            let mut chain: Vec<usize> = (2..n).rev().collect();
            chain.push(0);
            chain.push(1);
            chain
        }
        Series::F => vec![3, 2, 1, 0],
        _ => (0..n).collect(),
    }
}

/// Marks of `d` listed in the requested order.
pub fn marks_in(d: &WeightedDiagram, numbering: Numbering) -> Vec<u8> {
    match numbering {
        Numbering::Bourbaki => d.marks.clone(),
        Numbering::Vo => vo_order(d.simple_type)
            .iter()
            .map(|&b| d.marks[b])
            .collect(),
    }
}

/// Inverse of [`marks_in`].
pub fn diagram_from(t: SimpleType, marks: &[u8], numbering: Numbering) -> Result<WeightedDiagram> {
    if marks.len() != t.rank {
        return Err(Error::DiagramLength {
            ty: t.to_string(),
            expected: t.rank,
            got: marks.len(),
        });
    }
    let bourbaki = match numbering {
        Numbering::Bourbaki => marks.to_vec(),
        Numbering::Vo => {
            let mut m = vec![0; t.rank];
            for (k, &b) in vo_order(t).iter().enumerate() {
                m[b] = marks[k];
            }
            m
        }
    };
    WeightedDiagram::new(t, bourbaki)
}

pub fn parse_diagram(t: SimpleType, s: &str, numbering: Numbering) -> Result<WeightedDiagram> {
    let d = WeightedDiagram::parse(t, s)?;
    diagram_from(t, &d.marks, numbering)
}

pub fn format_marks(marks: &[u8]) -> String {
    marks
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
