use nilorb::centralizers::{
    self, centralizer_of_diagram, element_height, kernel_dim_of_power, very_friendly_check,
    FingerprintIndex, VeryFriendlyBudget, VeryFriendlyEvidence,
};
use nilorb::classical::{self, ClassicalAlgebra, Family, LeviDecomposition};
use nilorb::numbering::{marks_in, parse_diagram, Numbering};
use nilorb::orbits::{diagram_height, dynkin_index};
use nilorb::{
    reference, sl3, CheckRecord, ChevalleyAlgebra, Error, OrbitCatalog, OrbitRecord, OrbitReport,
    Partition, Result, SearchConfig, SimpleType, Verdict, VerdictRecord, WeightedDiagram,
};
use serde::Serialize;

use crate::render::{marks, Rendered, Table};

pub struct Run {
    pub cfg: SearchConfig,
    pub numbering: Numbering,
}

pub const MAX_RANK: usize = 8;

pub fn parse_type(s: &str) -> Result<SimpleType> {
    let t: SimpleType = s.parse()?;
    if t.rank > MAX_RANK {
        return Err(Error::InvalidType {
            series: t.series.letter(),
            rank: t.rank,
        });
    }
    Ok(t)
}

fn algebra(t: SimpleType) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(t).expect("validated type")
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

impl Run {
    fn show(&self, d: &WeightedDiagram) -> String {
        marks(&marks_in(d, self.numbering))
    }

    pub fn orbits(&self, t: SimpleType) -> (Rendered, Verdict) {
        let g = algebra(t);
        let catalog = OrbitCatalog::build(&g, &self.cfg);
        let reports: Vec<OrbitReport> = catalog
            .records
            .iter()
            .map(|r| OrbitReport::new(r, self.numbering))
            .collect();
        let mut table = Table::new(vec![
            "diagram",
            "dim",
            "height",
            "even",
            "divisible",
            "half",
            "index",
        ]);
        for r in &reports {
            table.push(vec![
                marks(&r.diagram),
                r.dim_orbit.to_string(),
                r.height.to_string(),
                yes(r.even),
                yes(r.divisible),
                r.half.as_deref().map(marks).unwrap_or_else(|| "-".into()),
                r.index.to_string(),
            ]);
        }
        let mut out = Rendered::new(&reports, table);
        out.notes.push(format!("{t}: {} orbits", reports.len()));
        (out, Verdict::Pass)
    }

    pub fn pairs(&self, t: SimpleType) -> (Rendered, Verdict) {
        let g = algebra(t);
        let catalog = OrbitCatalog::build(&g, &self.cfg);
        let index = FingerprintIndex::from_catalog(&g, &catalog).ok();
        let mut rows = Vec::new();
        for p in catalog.friendly_pairs() {
            let vf = very_friendly_check(
                &g,
                &p.upper.diagram,
                &self.cfg,
                &VeryFriendlyBudget::default(),
                index.as_ref(),
            );
            let lower = centralizer_of_diagram(&g, &p.lower.diagram, &self.cfg).ok();
            let row = reference::lookup(&p.upper.diagram);
            rows.push(PairRow {
                ty: t.to_string(),
                upper: marks_in(&p.upper.diagram, self.numbering),
                lower: marks_in(&p.lower.diagram, self.numbering),
                upper_label: row.map(|r| r.upper_label.to_string()),
                lower_label: row.map(|r| r.lower_label.to_string()),
                very_friendly: vf
                    .as_ref()
                    .map(|v| v.verdict)
                    .unwrap_or(Verdict::Inconclusive),
                very_friendly_evidence: match &vf {
                    Ok(v) => evidence_text(&v.evidence),
                    Err(e) => e.to_string(),
                },
                lower_reachable: lower.as_ref().map(|c| c.is_reachable(&g)),
                a2_pair: row.map(|r| r.a2_pair),
                a2_source: row.map(|_| "reference".to_string()),
            });
        }
        let mut table = Table::new(vec![
            "upper",
            "lower",
            "labels",
            "very-friendly",
            "reachable",
            "a2-pair (ref)",
        ]);
        for r in &rows {
            table.push(vec![
                marks(&r.upper),
                marks(&r.lower),
                match (&r.upper_label, &r.lower_label) {
                    (Some(u), Some(l)) => format!("{u} / {l}"),
                    _ => "-".into(),
                },
                r.very_friendly.to_string(),
                r.lower_reachable.map(yes).unwrap_or_else(|| "-".into()),
                r.a2_pair.map(yes).unwrap_or_else(|| "-".into()),
            ]);
        }
        let mut out = Rendered::new(&rows, table);
        out.notes.push(format!(
            "{t}: {} friendly pairs; the a2-pair column is reference data",
            rows.len()
        ));
        // A pair that is not very friendly is a finding, not a failure of the command.
        let verdict = if rows
            .iter()
            .any(|r| r.very_friendly == Verdict::Inconclusive)
        {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        (out, verdict)
    }

    pub fn verify(
        &self,
        t: SimpleType,
        diagram: &str,
        checks: &[Check],
    ) -> Result<(Rendered, Verdict)> {
        let g = algebra(t);
        let d = parse_diagram(t, diagram, self.numbering)?;
        let record = OrbitRecord::new(&g, &d, &self.cfg).map_err(|e| match e {
            Error::InvalidDiagram(_) => Error::InvalidDiagram(self.show(&d)),
            e => e,
        })?;
        let mut report = OrbitReport::new(&record, self.numbering);
        for &c in checks {
            report.checks.push(self.check(&g, &record, c)?);
        }
        let mut table = Table::new(vec!["diagram", "check", "verdict", "evidence", "seed"]);
        let records: Vec<VerdictRecord> = report
            .checks
            .iter()
            .map(|c| VerdictRecord {
                diagram: report.diagram.clone(),
                check: c.name.clone(),
                verdict: c.verdict,
                evidence: c.evidence.clone(),
                seed: self.cfg.seed,
            })
            .collect();
        for r in &records {
            table.push(vec![
                marks(&r.diagram),
                r.check.clone(),
                r.verdict.to_string(),
                r.evidence.clone(),
                r.seed.to_string(),
            ]);
        }
        let v = report.verdict();
        Ok((Rendered::new(&report, table), v))
    }

    fn check(&self, g: &ChevalleyAlgebra, r: &OrbitRecord, c: Check) -> Result<CheckRecord> {
        let rs = g.root_system();
        let d = &r.diagram;
        let name = c.name();
        if d.is_zero() {
            return Ok(CheckRecord::new(name, Verdict::Pass, "zero orbit"));
        }
        Ok(match c {
            Check::Dims => {
                let gc = centralizer_of_diagram(g, d, &self.cfg)?;
                let (g0, g1, g2) = (r.dim_piece(0), r.dim_piece(1), r.dim_piece(2));
                let ker2 = kernel_dim_of_power(g, &gc.grading, &gc.base_point, 2);
                let ok = gc.dims() == r.centralizer_dims()
                    && gc.dim() == g0 + g1
                    && ker2 == g0 + 2 * g1 + g2;
                let mut ev = format!(
                    "dim g^e = dim g(0) + dim g(1) = {g0} + {g1} = {}; exact pieces {:?}; dim ker (ad e)^2 = {ker2} = {g0} + 2*{g1} + {g2}",
                    gc.dim(),
                    gc.dims()
                );
                if let Some(h) = &r.half {
                    let low = OrbitRecord::new(g, h, &self.cfg)?;
                    let ok2 = low.centralizer_dim() == r.centralizer_dim() + r.nilradical_dim();
                    ev += &format!(
                        "; dim g^(e<2>) = {} = dim g^e + dim g^e_nil = {} + {}",
                        low.centralizer_dim(),
                        r.centralizer_dim(),
                        r.nilradical_dim()
                    );
                    return Ok(CheckRecord::new(name, Verdict::from_bool(ok && ok2), ev));
                }
                CheckRecord::new(name, Verdict::from_bool(ok), ev)
            }
            Check::Index => {
                let idx = dynkin_index(rs, d);
                match &r.half {
                    Some(h) => {
                        let low = dynkin_index(rs, h);
                        let ok = idx == low.clone() * nilorb::linalg::q(4);
                        CheckRecord::new(
                            name,
                            Verdict::from_bool(ok),
                            format!("index {idx}, half {low}, ratio 4"),
                        )
                    }
                    None => CheckRecord::new(name, Verdict::Pass, format!("index {idx}")),
                }
            }
            Check::Height => {
                let e = centralizers::representative(g, d, &self.cfg)?;
                let ht = element_height(g, &e)?;
                let want = diagram_height(rs, d);
                let mut ok = ht as i64 == want;
                let mut ev = format!("ht(e) = {ht}, diagram height {want}");
                if let Some(h) = &r.half {
                    let low = diagram_height(rs, h);
                    ok &= want == 2 * low;
                    ev += &format!(", half {low}");
                }
                CheckRecord::new(name, Verdict::from_bool(ok), ev)
            }
            Check::Reachable => {
                let gc = centralizer_of_diagram(g, d, &self.cfg)?;
                let reach = gc.is_reachable(g);
                CheckRecord::new(
                    name,
                    Verdict::from_bool(reach),
                    format!("e in [g^e, g^e]: {reach}"),
                )
            }
            Check::Nilgen => {
                let gc = centralizer_of_diagram(g, d, &self.cfg)?;
                let gen = gc.nilradical_generated_by_degree_one(g);
                CheckRecord::new(
                    name,
                    Verdict::from_bool(gen),
                    format!(
                        "g^e(>=1) generated by g^e(1): {gen}; pieces {:?}",
                        gc.dims()
                    ),
                )
            }
            Check::VeryFriendly => {
                if !r.divisible {
                    return Ok(CheckRecord::new(
                        name,
                        Verdict::Fail,
                        "diagram is not divisible",
                    ));
                }
                let catalog = OrbitCatalog::build(g, &self.cfg);
                let index = FingerprintIndex::from_catalog(g, &catalog).ok();
                let v = very_friendly_check(
                    g,
                    d,
                    &self.cfg,
                    &VeryFriendlyBudget::default(),
                    index.as_ref(),
                )?;
                CheckRecord::new(name, v.verdict, evidence_text(&v.evidence))
            }
        })
    }

    pub fn classical(
        &self,
        family: Family,
        partition: &str,
        action: Action,
    ) -> Result<(Rendered, Verdict)> {
        let p: Partition = partition.parse()?;
        let alg = ClassicalAlgebra::new(family, p.total())?;
        if !classical::validate_partition(&alg, &p)? {
            return Err(Error::InvalidPartition(format!(
                "{p} in {family}({})",
                p.total()
            )));
        }
        match action {
            Action::Classify => {
                let diagrams = classical::diagrams_from_partition(&alg, &p)?;
                let divisible = !p.is_zero_orbit() && classical::is_divisible_partition(&alg, &p)?;
                let half = divisible
                    .then(|| classical::half_partition(&p))
                    .transpose()?;
                let out = ClassifyReport {
                    family: family.to_string(),
                    dim_v: p.total(),
                    partition: p.to_string(),
                    diagrams: diagrams
                        .iter()
                        .map(|d| marks_in(d, self.numbering))
                        .collect(),
                    height: classical::partition_height(&alg, &p)?,
                    divisible,
                    half: half.as_ref().map(Partition::to_string),
                };
                let mut table = Table::new(vec![
                    "family",
                    "partition",
                    "diagrams",
                    "height",
                    "divisible",
                    "half",
                ]);
                table.push(vec![
                    format!("{family}({})", out.dim_v),
                    out.partition.clone(),
                    out.diagrams
                        .iter()
                        .map(|m| marks(m))
                        .collect::<Vec<_>>()
                        .join(" | "),
                    out.height.to_string(),
                    yes(divisible),
                    out.half.clone().unwrap_or_else(|| "-".into()),
                ]);
                Ok((Rendered::new(&out, table), Verdict::Pass))
            }
            Action::Divide => {
                if p.is_zero_orbit() {
                    return Err(Error::ZeroOrbit);
                }
                if !classical::is_divisible_partition(&alg, &p)? {
                    return Err(Error::NotDivisible(p.to_string()));
                }
                let t = classical::build_triple(&alg, &p)?;
                let e2 = classical::build_e2(&alg, &p, &t)?;
                let (report, _) = classical::verify_e2(&t, &e2)?;
                let checks: Vec<CheckRecord> = report
                    .checks()
                    .into_iter()
                    .map(|(n, ok)| CheckRecord::new(n, Verdict::from_bool(ok), ""))
                    .collect();
                let out = DivideReport {
                    family: family.to_string(),
                    partition: p.to_string(),
                    half: report.half.clone(),
                    jordan_type: report.found.clone(),
                    checks,
                };
                let mut table = Table::new(vec!["partition", "half", "check", "verdict"]);
                for c in &out.checks {
                    table.push(vec![
                        out.partition.clone(),
                        out.half.clone(),
                        c.name.clone(),
                        c.verdict.to_string(),
                    ]);
                }
                let v = Verdict::combine(out.checks.iter().map(|c| c.verdict));
                Ok((Rendered::new(&out, table), v))
            }
            Action::Matrices => {
                let t = classical::build_triple(&alg, &p)?;
                let divisible = !p.is_zero_orbit() && classical::is_divisible_partition(&alg, &p)?;
                let e2 = divisible
                    .then(|| classical::build_e2(&alg, &p, &t))
                    .transpose()?;
                let out = MatrixReport {
                    family: family.to_string(),
                    partition: p.to_string(),
                    e: classical::matrix_strings(&t.e),
                    h: classical::matrix_strings(&t.h),
                    f: classical::matrix_strings(&t.f),
                    e2: e2.as_ref().map(classical::matrix_strings),
                    phi: t.phi.as_ref().map(classical::matrix_strings),
                };
                let mut table = Table::new(vec!["name", "row", "entries"]);
                let mut add = |n: &'static str, m: &Vec<Vec<String>>| {
                    for (i, row) in m.iter().enumerate() {
                        table.push(vec![n.into(), i.to_string(), row.join(" ")]);
                    }
                };
                add("e", &out.e);
                add("h", &out.h);
                add("f", &out.f);
                if let Some(m) = &out.e2 {
                    add("e2", m);
                }
                if let Some(m) = &out.phi {
                    add("phi", m);
                }
                Ok((Rendered::new(&out, table), Verdict::Pass))
            }
            Action::Levi => {
                let levi: LeviDecomposition = classical::minimal_levi(&alg, &p)?;
                let mut table = Table::new(vec!["factor", "partition", "divisible"]);
                for f in &levi.factors {
                    table.push(vec![f.label.clone(), f.partition.clone(), yes(f.divisible)]);
                }
                let mut out = Rendered::new(&levi, table);
                out.notes
                    .push(format!("all factors divisible: {}", yes(levi.divisible)));
                Ok((out, Verdict::Pass))
            }
        }
    }
}

pub fn sl3(a: i64, b: i64) -> Result<(Rendered, Verdict)> {
    let arr = sl3::MonomialArray::new(a, b)?;
    let (a, b) = (arr.a as u64, arr.b as u64);
    let profile = sl3::branching_profile(a, b);
    let mut table = Table::new(vec!["k", "multiplicity"]);
    for (k, m) in profile.iter().enumerate() {
        table.push(vec![k.to_string(), m.to_string()]);
    }
    let mut out = Rendered::new(&profile, table);
    out.notes.push(format!(
        "dim R({a},{b}) = {}; invariants {}; cyclic {}",
        sl3::weyl_dim(a, b),
        arr.len(),
        yes(arr.is_cyclic())
    ));
    Ok((out, Verdict::Pass))
}

fn evidence_text(e: &VeryFriendlyEvidence) -> String {
    match e {
        VeryFriendlyEvidence::Witness {
            x,
            draw,
            identified,
            height,
            centralizer_dim,
        } => {
            format!(
            "witness after {draw} draws: x = {x}; ht(x) = {height}, dim g^x = {centralizer_dim}{}",
            identified.as_ref().map(|m| format!(", identified as {}", marks(m))).unwrap_or_default()
        )
        }
        VeryFriendlyEvidence::Obstruction {
            dim_ge4,
            generator_height,
            lower_height,
        } => match generator_height {
            Some(h) => format!("dim g^e(4) = {dim_ge4}; generator height {h} < {lower_height}"),
            None => format!("dim g^e(4) = {dim_ge4}"),
        },
        VeryFriendlyEvidence::Budget { draws } => format!("no witness in {draws} draws"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Dims,
    Index,
    Height,
    Reachable,
    VeryFriendly,
    Nilgen,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Dims,
        Check::Index,
        Check::Height,
        Check::Reachable,
        Check::VeryFriendly,
        Check::Nilgen,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Dims => "dims",
            Check::Index => "index",
            Check::Height => "height",
            Check::Reachable => "reachable",
            Check::VeryFriendly => "very-friendly",
            Check::Nilgen => "nilgen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Action {
    Classify,
    Divide,
    Matrices,
    Levi,
}

#[derive(Serialize)]
struct PairRow {
    #[serde(rename = "type")]
    ty: String,
    upper: Vec<u8>,
    lower: Vec<u8>,
    upper_label: Option<String>,
    lower_label: Option<String>,
    very_friendly: Verdict,
    very_friendly_evidence: String,
    lower_reachable: Option<bool>,
    a2_pair: Option<bool>,
    a2_source: Option<String>,
}

#[derive(Serialize)]
struct ClassifyReport {
    family: String,
    dim_v: usize,
    partition: String,
    diagrams: Vec<Vec<u8>>,
    height: usize,
    divisible: bool,
    half: Option<String>,
}

#[derive(Serialize)]
struct DivideReport {
    family: String,
    partition: String,
    half: String,
    jordan_type: String,
    checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct MatrixReport {
    family: String,
    partition: String,
    e: Vec<Vec<String>>,
    h: Vec<Vec<String>>,
    f: Vec<Vec<String>>,
    e2: Option<Vec<Vec<String>>>,
    phi: Option<Vec<Vec<String>>>,
}
