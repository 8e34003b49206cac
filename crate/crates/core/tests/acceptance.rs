use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use nilorb::centralizers::{
    self, centralizer_of_diagram, very_friendly_check, FingerprintIndex, VeryFriendlyBudget,
    VeryFriendlyEvidence,
};
use nilorb::classical::{self, ClassicalAlgebra};
use nilorb::orbits::{self, diagram_height, dynkin_index};
use nilorb::{
    reference, sl3, ChevalleyAlgebra, OrbitCatalog, SearchConfig, Series, SimpleType, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CLASSICAL: [&str; 12] = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
];

fn classical_types() -> Vec<SimpleType> {
    let set: BTreeSet<SimpleType> = CLASSICAL.iter().map(|s| s.parse().unwrap()).collect();
    set.into_iter().collect()
}

fn classical_model(t: SimpleType) -> ClassicalAlgebra {
    let n = t.rank;
    match t.series {
        Series::A => ClassicalAlgebra::sl(n + 1),
        Series::B => ClassicalAlgebra::so(2 * n + 1),
        Series::C => ClassicalAlgebra::sp(2 * n),
        Series::D => ClassicalAlgebra::so(2 * n),
        _ => unreachable!(),
    }
}

struct Ctx {
    cfg: SearchConfig,
    algebras: BTreeMap<SimpleType, ChevalleyAlgebra>,
    catalogs: BTreeMap<SimpleType, OrbitCatalog>,
}

impl Ctx {
    fn new() -> Self {
        let cfg = SearchConfig::default();
        let types: Vec<SimpleType> = classical_types()
            .into_iter()
            .chain(SimpleType::exceptional())
            .collect();
        let built: Vec<_> = types
            .par_iter()
            .map(|&t| {
                let g = ChevalleyAlgebra::new(t).unwrap();
                let c = OrbitCatalog::build(&g, &cfg);
                (t, g, c)
            })
            .collect();
        let mut algebras = BTreeMap::new();
        let mut catalogs = BTreeMap::new();
        for (t, g, c) in built {
            algebras.insert(t, g);
            catalogs.insert(t, c);
        }
        Ctx {
            cfg,
            algebras,
            catalogs,
        }
    }
}

type Outcome = (bool, String);

fn classical_enumeration(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    for t in classical_types() {
        let alg = classical_model(t);
        let mut oracle = BTreeSet::new();
        for p in classical::valid_partitions(&alg) {
            for d in classical::diagrams_from_partition(&alg, &p).unwrap() {
                oracle.insert(d.marks);
            }
        }
        let found: BTreeSet<Vec<u8>> = ctx.catalogs[&t]
            .diagrams()
            .map(|d| d.marks.clone())
            .collect();
        if found != oracle {
            bad.push(format!("{t}: {} vs {}", found.len(), oracle.len()));
        }
    }
    let a3 = ctx.catalogs[&"A3".parse().unwrap()].records.len();
    (
        bad.is_empty() && a3 == 5,
        format!("12 types, A3 has {a3} orbits {bad:?}"),
    )
}

fn table_reproduction(ctx: &Ctx) -> Outcome {
    let mut counts = Vec::new();
    let mut ok = true;
    for t in SimpleType::exceptional() {
        let pairs: BTreeSet<(Vec<u8>, Vec<u8>)> = ctx.catalogs[&t]
            .friendly_pairs()
            .into_iter()
            .map(|p| (p.upper.diagram.marks, p.lower.diagram.marks))
            .collect();
        let rows: BTreeSet<(Vec<u8>, Vec<u8>)> = reference::rows_for(t)
            .into_iter()
            .map(|r| (r.upper().marks, r.lower().marks))
            .collect();
        ok &= pairs == rows;
        counts.push(format!("{t}:{}", pairs.len()));
    }
    let want = ["E6:6", "E7:8", "E8:13", "F4:4", "G2:1"];
    ok &= counts == want;
    (ok, counts.join(" "))
}

fn families() -> Vec<ClassicalAlgebra> {
    let mut v = Vec::new();
    for n in 2..=13 {
        v.push(ClassicalAlgebra::sl(n));
        if n % 2 == 0 {
            v.push(ClassicalAlgebra::sp(n));
        }
        if n >= 3 {
            v.push(ClassicalAlgebra::so(n));
        }
    }
    v
}

fn divisibility_vs_brute_force() -> Outcome {
    let results: Vec<(usize, usize, Vec<String>)> = families()
        .par_iter()
        .map(|alg| {
            let (mut n, mut div, mut bad) = (0, 0, Vec::new());
            for p in classical::valid_partitions(alg) {
                if p.is_zero_orbit() {
                    continue;
                }
                n += 1;
                let crit = classical::is_divisible_partition(alg, &p).unwrap();
                let brute = classical::divisible_by_diagrams(alg, &p).unwrap();
                let agree = crit == !brute.is_empty()
                    && (!crit || brute.contains(&classical::half_partition(&p).unwrap()));
                div += crit as usize;
                if !agree {
                    bad.push(format!("{} {p}", alg.family));
                }
            }
            (n, div, bad)
        })
        .collect();
    let n: usize = results.iter().map(|r| r.0).sum();
    let div: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.2).collect();
    (
        bad.is_empty(),
        format!("{n} partitions, {div} divisible, disagreements {bad:?}"),
    )
}

fn construction_soundness() -> Outcome {
    let results: Vec<(usize, Vec<String>)> = families()
        .par_iter()
        .map(|alg| {
            let (mut n, mut bad) = (0, Vec::new());
            for p in classical::valid_partitions(alg) {
                if p.is_zero_orbit() || !classical::is_divisible_partition(alg, &p).unwrap() {
                    continue;
                }
                n += 1;
                let t = classical::build_triple(alg, &p).unwrap();
                let e2 = classical::build_e2(alg, &p, &t).unwrap();
                let (report, _) = classical::verify_e2(&t, &e2).unwrap();
                if !(classical::verify_triple(&t) && report.all()) {
                    bad.push(format!("{} {p}: {report:?}", alg.family));
                }
            }
            (n, bad)
        })
        .collect();
    let n: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    (
        bad.is_empty(),
        format!("{n} constructions, failures {bad:?}"),
    )
}

fn dimension_identities(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (t, catalog) in &ctx.catalogs {
        for p in catalog.friendly_pairs() {
            pairs += 1;
            let (u, l) = (&p.upper, &p.lower);
            let ucd = u.centralizer_dims();
            let lcd = l.centralizer_dims();
            let get = |m: &BTreeMap<i64, usize>, i: i64| m.get(&i).copied().unwrap_or(0);
            let top = ucd.keys().max().copied().unwrap_or(0) + 2;
            let ok = l.centralizer_dim() == u.centralizer_dim() + u.nilradical_dim()
                && u.nilradical_dim() % 2 == 0
                && (0..=top).all(|i| get(&ucd, 2 * i) + get(&ucd, 2 * i + 2) == get(&lcd, i))
                && (1..=top).all(|j| (get(&ucd, 4 * j - 2) + get(&ucd, 4 * j)) % 2 == 0);
            if !ok {
                bad.push(format!("{t} {}", u.diagram));
            }
        }
    }
    // Exact kernels against the graded dimension formula on the exceptional upper orbits.
    let exact: Vec<String> = SimpleType::exceptional()
        .par_iter()
        .flat_map(|t| {
            let g = &ctx.algebras[t];
            ctx.catalogs[t]
                .friendly_pairs()
                .into_iter()
                .filter_map(|p| {
                    let gc = centralizer_of_diagram(g, &p.upper.diagram, &ctx.cfg).unwrap();
                    (gc.dims() != p.upper.centralizer_dims())
                        .then(|| format!("{t} {} exact", p.upper.diagram))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    bad.extend(exact);
    (
        bad.is_empty(),
        format!(
            "{pairs} pairs over {} types, failures {bad:?}",
            ctx.catalogs.len()
        ),
    )
}

fn index_and_height(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for (t, catalog) in &ctx.catalogs {
        let rs = ctx.algebras[t].root_system();
        for p in catalog.friendly_pairs() {
            n += 1;
            let (u, l) = (&p.upper.diagram, &p.lower.diagram);
            let idx = dynkin_index(rs, u) == dynkin_index(rs, l) * nilorb::linalg::q(4);
            let ht = diagram_height(rs, u) == 2 * diagram_height(rs, l);
            if !(idx && ht) {
                bad.push(format!("{t} {u}"));
            }
        }
    }
    (bad.is_empty(), format!("{n} pairs, failures {bad:?}"))
}

struct PairRun {
    ty: SimpleType,
    upper: Vec<u8>,
    verdict: Verdict,
    evidence: VeryFriendlyEvidence,
    expected_centralizer: usize,
    lower_marks: Vec<u8>,
    reachable: bool,
    nilgen: bool,
    nil_derived: bool,
}

fn run_pairs(ctx: &Ctx) -> Vec<PairRun> {
    SimpleType::exceptional()
        .par_iter()
        .flat_map(|t| {
            let g = &ctx.algebras[t];
            let catalog = &ctx.catalogs[t];
            let index = FingerprintIndex::from_catalog(g, catalog).expect("fingerprints injective");
            catalog
                .friendly_pairs()
                .into_par_iter()
                .map(|p| {
                    let v = very_friendly_check(
                        g,
                        &p.upper.diagram,
                        &ctx.cfg,
                        &VeryFriendlyBudget::default(),
                        Some(&index),
                    )
                    .unwrap();
                    let lc = centralizer_of_diagram(g, &p.lower.diagram, &ctx.cfg).unwrap();
                    PairRun {
                        ty: *t,
                        upper: p.upper.diagram.marks.clone(),
                        verdict: v.verdict,
                        evidence: v.evidence,
                        expected_centralizer: p.upper.centralizer_dim() + p.upper.nilradical_dim(),
                        lower_marks: p.lower.diagram.marks.clone(),
                        reachable: lc.is_reachable(g),
                        nilgen: lc.nilradical_generated_by_degree_one(g),
                        nil_derived: lc.nilradical_in_derived(g),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn f4_exception(runs: &[PairRun]) -> Outcome {
    let f4: SimpleType = "F4".parse().unwrap();
    let mut bad = Vec::new();
    let mut cert = String::new();
    for r in runs {
        if r.ty == f4 && r.upper == [0, 2, 0, 2] {
            match &r.evidence {
                VeryFriendlyEvidence::Obstruction {
                    dim_ge4: 1,
                    generator_height: Some(h),
                    lower_height: 5,
                } if *h <= 3 && r.verdict == Verdict::Fail => {
                    cert = format!("F4(a2): generator height {h} < 5")
                }
                e => bad.push(format!("F4(a2) {:?} {e:?}", r.verdict)),
            }
        } else {
            match &r.evidence {
                VeryFriendlyEvidence::Witness {
                    identified: Some(m),
                    centralizer_dim,
                    ..
                } if r.verdict == Verdict::Pass
                    && *m == r.lower_marks
                    && *centralizer_dim == r.expected_centralizer => {}
                e => bad.push(format!("{} {:?}: {:?} {e:?}", r.ty, r.upper, r.verdict)),
            }
        }
    }
    let ok = bad.is_empty() && !cert.is_empty() && runs.len() == 32;
    (
        ok,
        format!("{} pairs; {cert}; others witnessed {bad:?}", runs.len()),
    )
}

fn reachability(ctx: &Ctx, runs: &[PairRun]) -> Outcome {
    let mut bad = Vec::new();
    let mut unreachable = Vec::new();
    for r in runs {
        let d = nilorb::WeightedDiagram::new(r.ty, r.upper.clone()).unwrap();
        let row = reference::lookup(&d).unwrap();
        if r.reachable != row.reachable {
            bad.push(format!("{} {}", r.ty, row.lower_label));
        }
        if !r.reachable {
            unreachable.push(format!("{} {}", r.ty, row.lower_label));
        }
    }
    // Ungraded cross-check on E6 A4+A1.
    let e6: SimpleType = "E6".parse().unwrap();
    let g = &ctx.algebras[&e6];
    let lower =
        orbits::half(&nilorb::WeightedDiagram::new(e6, vec![2, 2, 2, 0, 2, 2]).unwrap()).unwrap();
    let e = centralizers::representative(g, &lower, &ctx.cfg).unwrap();
    let ungraded = centralizers::is_reachable(g, &e).unwrap();
    if ungraded {
        bad.push("E6 A4+A1 ungraded".into());
    }
    (
        bad.is_empty() && runs.len() == 32,
        format!("not reachable: {unreachable:?}; mismatches {bad:?}"),
    )
}

fn low_a2(runs: &[PairRun]) -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for r in runs {
        let d = nilorb::WeightedDiagram::new(r.ty, r.upper.clone()).unwrap();
        let row = reference::lookup(&d).unwrap();
        if row.a2_pair {
            n += 1;
            if !(r.nilgen && r.nil_derived) {
                bad.push(format!("{} {}", r.ty, row.lower_label));
            }
        }
    }
    (
        bad.is_empty() && n == 25,
        format!("{n} low-A2 orbits, failures {bad:?}"),
    )
}

fn sl3_suite() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            let prof = sl3::branching_profile(a, b);
            let (hi, lo) = (a.max(b), a.min(b));
            let expect: Vec<u64> = (0..=a + b)
                .map(|k| (k.min(lo) + 1).min(a + b - k + 1).min(lo + 1))
                .collect();
            let weyl: u64 = prof
                .iter()
                .enumerate()
                .map(|(k, m)| m * (k as u64 + 1))
                .sum();
            let arr = sl3::MonomialArray::new(a as i64, b as i64).unwrap();
            ok &= prof == expect
                && prof == sl3::branching_profile(hi, lo)
                && weyl == sl3::weyl_dim(a, b)
                && prof.iter().sum::<u64>() == sl3::invariant_dim(a as i64, b as i64).unwrap()
                && arr.len() as u64 == (a + 1) * (b + 1)
                && arr.is_cyclic();
        }
    }
    ok &= sl3::branching_profile(1, 1) == [1, 2, 1];
    let t = start.elapsed();
    (
        ok && t.as_secs_f64() < 1.0,
        format!("0 ≤ a,b ≤ 6 in {t:?}; (1,1) → R0 + 2R1 + R2"),
    )
}

fn algebra_soundness(ctx: &Ctx) -> Outcome {
    let small = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
    ];
    let exhaustive: Vec<(String, usize, usize)> = small
        .par_iter()
        .map(|s| {
            let t: SimpleType = s.parse().unwrap();
            let g = &ctx.algebras[&t];
            let d = g.dim();
            let mut fails = 0;
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        fails += !g.jacobi_holds(a, b, c) as usize;
                    }
                }
            }
            (s.to_string(), d * d * d, fails)
        })
        .collect();
    let mut fails: usize = exhaustive.iter().map(|r| r.2).sum();
    let checked: usize = exhaustive.iter().map(|r| r.1).sum();
    let mut random = 0;
    for t in ["E6", "E7", "E8"] {
        let t: SimpleType = t.parse().unwrap();
        let g = &ctx.algebras[&t];
        let mut rng = ChaCha8Rng::seed_from_u64(orbits::derive_seed(
            ctx.cfg.seed,
            &[0x1AC0B1, t.rank as u64],
        ));
        for _ in 0..10_000 {
            let (a, b, c) = (
                rng.gen_range(0..g.dim()),
                rng.gen_range(0..g.dim()),
                rng.gen_range(0..g.dim()),
            );
            fails += !g.jacobi_holds(a, b, c) as usize;
            random += 1;
        }
    }
    (
        fails == 0,
        format!("{checked} exhaustive and {random} random triples, {fails} failures"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let ctx = Ctx::new();
    let runs = run_pairs(&ctx);
    let results: Vec<(&str, Outcome)> = vec![
        ("classical enumeration", classical_enumeration(&ctx)),
        ("friendly pair table", table_reproduction(&ctx)),
        ("divisibility vs brute force", divisibility_vs_brute_force()),
        ("construction soundness", construction_soundness()),
        ("dimension identities", dimension_identities(&ctx)),
        ("index and height", index_and_height(&ctx)),
        ("F4 exception", f4_exception(&runs)),
        ("reachability column", reachability(&ctx, &runs)),
        ("low-A2 consequences", low_a2(&runs)),
        ("SL3 suite", sl3_suite()),
        ("algebra soundness", algebra_soundness(&ctx)),
    ];
    let mut all = true;
    for (i, (name, (ok, detail))) in results.iter().enumerate() {
        all &= ok;
        println!(
            "criterion {:>2} {}: {name}: {detail}",
            i + 1,
            if *ok { "PASS" } else { "FAIL" }
        );
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
