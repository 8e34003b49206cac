use nilorb::orbits::{self, diagram_height, dynkin_index, is_characteristic, is_divisible};
use nilorb::{
    ChevalleyAlgebra, OrbitCatalog, OrbitRecord, SearchConfig, SimpleType, WeightedDiagram, Q,
};

fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn diagram(t: SimpleType, s: &str) -> WeightedDiagram {
    WeightedDiagram::parse(t, s).unwrap()
}

#[test]
fn small_catalog_sizes() {
    let cfg = SearchConfig::default();
    for (t, n) in [
        ("A1", 2),
        ("A2", 3),
        ("A3", 5),
        ("B2", 4),
        ("G2", 5),
        ("D4", 12),
    ] {
        let g = ChevalleyAlgebra::new(ty(t)).unwrap();
        assert_eq!(OrbitCatalog::build(&g, &cfg).records.len(), n, "{t}");
    }
}

#[test]
fn a2_rejects_non_characteristic() {
    let cfg = SearchConfig::default();
    let t = ty("A2");
    let g = ChevalleyAlgebra::new(t).unwrap();
    assert!(
        is_characteristic(&g, &diagram(t, "2,2"), &cfg)
            .unwrap()
            .valid
    );
    assert!(
        is_characteristic(&g, &diagram(t, "1,1"), &cfg)
            .unwrap()
            .valid
    );
    assert!(
        !is_characteristic(&g, &diagram(t, "2,1"), &cfg)
            .unwrap()
            .valid
    );
    assert!(
        !is_characteristic(&g, &diagram(t, "2,0"), &cfg)
            .unwrap()
            .valid
    );
    assert!(OrbitRecord::new(&g, &diagram(t, "2,1"), &cfg).is_err());
}

#[test]
fn divisibility_and_half() {
    let cfg = SearchConfig::default();
    let t = ty("A2");
    let g = ChevalleyAlgebra::new(t).unwrap();
    let reg = diagram(t, "2,2");
    assert!(is_divisible(&g, &reg, &cfg).unwrap());
    assert_eq!(orbits::half(&reg).unwrap(), diagram(t, "1,1"));
    let r = OrbitRecord::new(&g, &reg, &cfg).unwrap();
    assert_eq!((r.dim_orbit, r.height, r.even), (6, 4, true));
    assert_eq!(r.dynkin_index, Q::from_integer(4.into()));

    let t = ty("E8");
    let g = ChevalleyAlgebra::new(t).unwrap();
    let up = diagram(t, "2,0,0,0,0,2,0,0");
    let low = orbits::half(&up).unwrap();
    let rs = g.root_system();
    assert_eq!(
        dynkin_index(rs, &up),
        dynkin_index(rs, &low) * Q::from_integer(4.into())
    );
    assert_eq!(diagram_height(rs, &up), 2 * diagram_height(rs, &low));
}

#[test]
fn pair_counts() {
    let cfg = SearchConfig::default();
    for (t, n) in [("G2", 1), ("F4", 4), ("E6", 6)] {
        let g = ChevalleyAlgebra::new(ty(t)).unwrap();
        let pairs = OrbitCatalog::build(&g, &cfg).friendly_pairs();
        assert_eq!(pairs.len(), n, "{t}");
        for p in pairs {
            assert_eq!(orbits::half(&p.upper.diagram).unwrap(), p.lower.diagram);
        }
    }
}

#[test]
fn seed_does_not_change_the_catalog() {
    let g = ChevalleyAlgebra::new(ty("F4")).unwrap();
    let a = OrbitCatalog::build(&g, &SearchConfig::default());
    let b = OrbitCatalog::build(
        &g,
        &SearchConfig {
            seed: 99,
            ..SearchConfig::default()
        },
    );
    assert_eq!(a.records, b.records);
}
