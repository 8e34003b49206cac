//! Reference list of friendly pairs in the exceptional algebras with the
//! reachability and A2-pair columns. Upper diagrams are stored in VO order.

use crate::numbering::{diagram_from, Numbering};
use crate::orbits::WeightedDiagram;
use crate::rootsys::SimpleType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub ty: &'static str,
    pub lower_label: &'static str,
    pub upper_label: &'static str,
    pub upper_vo: &'static [u8],
    pub reachable: bool,
    pub a2_pair: bool,
}

impl ReferenceRow {
    pub fn simple_type(&self) -> SimpleType {
        self.ty.parse().expect("valid type")
    }

    pub fn upper(&self) -> WeightedDiagram {
        diagram_from(self.simple_type(), self.upper_vo, Numbering::Vo).expect("valid row")
    }

    pub fn lower(&self) -> WeightedDiagram {
        crate::orbits::half(&self.upper()).expect("even row")
    }
}

macro_rules! row {
    ($t:literal, $lo:literal, $up:literal, [$($m:literal),*], $r:literal, $a:literal) => {
        ReferenceRow {
            ty: $t,
            lower_label: $lo,
            upper_label: $up,
            upper_vo: &[$($m),*],
            reachable: $r,
            a2_pair: $a,
        }
    };
}

pub const ROWS: &[ReferenceRow] = &[
    row!("E6", "A1", "A2", [0, 0, 0, 0, 0, 2], true, true),
    row!("E6", "2A1", "2A2", [2, 0, 0, 0, 2, 0], true, true),
    row!("E6", "3A1", "D4(a1)", [0, 0, 2, 0, 0, 0], true, true),
    row!("E6", "A2+A1", "A4", [2, 0, 0, 0, 2, 2], true, true),
    row!("E6", "2A2+A1", "E6(a3)", [2, 0, 2, 0, 2, 0], true, true),
    row!("E6", "A4+A1", "E6(a1)", [2, 2, 0, 2, 2, 2], false, false),
    row!("E7", "A1", "A2", [0, 0, 0, 0, 0, 2, 0], true, true),
    row!("E7", "2A1", "2A2", [0, 2, 0, 0, 0, 0, 0], true, true),
    row!("E7", "(3A1)'", "D4(a1)", [0, 0, 0, 0, 2, 0, 0], true, true),
    row!("E7", "A2+A1", "A4", [0, 2, 0, 0, 0, 2, 0], true, true),
    row!("E7", "A2+2A1", "A4+A2", [0, 0, 0, 2, 0, 0, 0], true, true),
    row!("E7", "2A2+A1", "E6(a3)", [0, 2, 0, 0, 2, 0, 0], true, true),
    row!("E7", "A3+A2", "A6", [0, 2, 0, 2, 0, 0, 0], false, false),
    row!("E7", "A4+A1", "E6(a1)", [0, 2, 0, 2, 0, 2, 0], true, true),
    row!("E8", "A1", "A2", [2, 0, 0, 0, 0, 0, 0, 0], true, true),
    row!("E8", "2A1", "2A2", [0, 0, 0, 0, 0, 0, 2, 0], true, true),
    row!("E8", "3A1", "D4(a1)", [0, 2, 0, 0, 0, 0, 0, 0], true, true),
    row!(
        "E8",
        "4A1",
        "D4(a1)+A2",
        [0, 0, 0, 0, 0, 0, 0, 2],
        true,
        true
    ),
    row!("E8", "A2+A1", "A4", [2, 0, 0, 0, 0, 0, 2, 0], true, true),
    row!(
        "E8",
        "A2+2A1",
        "A4+A2",
        [0, 0, 2, 0, 0, 0, 0, 0],
        true,
        true
    ),
    row!(
        "E8",
        "2A2+A1",
        "E6(a3)",
        [0, 2, 0, 0, 0, 0, 2, 0],
        true,
        true
    ),
    row!(
        "E8",
        "2A2+2A1",
        "E8(a7)",
        [0, 0, 0, 2, 0, 0, 0, 0],
        true,
        true
    ),
    row!("E8", "A3+A2", "A6", [0, 0, 2, 0, 0, 0, 2, 0], false, false),
    row!(
        "E8",
        "A4+A1",
        "E6(a1)",
        [2, 0, 2, 0, 0, 0, 2, 0],
        true,
        true
    ),
    row!(
        "E8",
        "A4+2A1",
        "E8(b6)",
        [2, 0, 0, 0, 2, 0, 0, 0],
        true,
        false
    ),
    row!(
        "E8",
        "A4+A3",
        "E8(a6)",
        [0, 2, 0, 0, 2, 0, 0, 0],
        true,
        false
    ),
    row!(
        "E8",
        "D7(a2)",
        "E8(a4)",
        [2, 0, 2, 0, 2, 0, 2, 0],
        false,
        false
    ),
    row!("F4", "A1", "A2", [0, 0, 0, 2], true, true),
    row!("F4", "Ã1", "Ã2", [2, 0, 0, 0], true, true),
    row!("F4", "A1+Ã1", "F4(a3)", [0, 0, 2, 0], true, true),
    row!("F4", "A1+Ã2", "F4(a2)", [2, 0, 2, 0], false, false),
    row!("G2", "A1", "G2(a1)", [0, 2], true, true),
];

pub fn rows_for(t: SimpleType) -> Vec<&'static ReferenceRow> {
    let name = t.to_string();
    ROWS.iter().filter(|r| r.ty == name).collect()
}

pub fn lookup(d: &WeightedDiagram) -> Option<&'static ReferenceRow> {
    ROWS.iter()
        .find(|r| r.simple_type() == d.simple_type && (r.upper() == *d || r.lower() == *d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let counts: Vec<usize> = SimpleType::exceptional()
            .iter()
            .map(|&t| rows_for(t).len())
            .collect();
        assert_eq!(counts, vec![6, 8, 13, 4, 1]);
        assert_eq!(ROWS.iter().filter(|r| !r.reachable).count(), 5);
        assert_eq!(ROWS.iter().filter(|r| !r.a2_pair).count(), 7);
    }

    #[test]
    fn rows_are_even_and_nonzero() {
        for r in ROWS {
            let u = r.upper();
            assert!(u.is_even() && !u.is_zero(), "{}", r.upper_label);
        }
    }
}
