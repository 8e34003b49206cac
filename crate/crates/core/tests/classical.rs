use nilorb::classical::{
    build_e2, build_triple, diagram_from_partition, half_partition, is_divisible_partition,
    jordan_type, minimal_levi, valid_partitions, verify_e2, verify_triple,
};
use nilorb::{ClassicalAlgebra, Partition};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn so8_divide() {
    let g = ClassicalAlgebra::so(8);
    let x = p(&[5, 3]);
    assert!(is_divisible_partition(&g, &x).unwrap());
    assert_eq!(half_partition(&x).unwrap(), p(&[3, 2, 2, 1]));
    let t = build_triple(&g, &x).unwrap();
    assert!(verify_triple(&t));
    let e2 = build_e2(&g, &x, &t).unwrap();
    let (report, f2) = verify_e2(&t, &e2).unwrap();
    assert!(report.all(), "{report:?}");
    assert!(f2.is_some());
    assert_eq!(jordan_type(&e2).unwrap(), p(&[3, 2, 2, 1]));
}

#[test]
fn invalid_partitions() {
    assert!(!nilorb::classical::validate_partition(&ClassicalAlgebra::sp(4), &p(&[3, 1])).unwrap());
    assert!(
        !nilorb::classical::validate_partition(&ClassicalAlgebra::so(4), &p(&[2, 1, 1])).unwrap()
    );
    assert!(!is_divisible_partition(&ClassicalAlgebra::sl(3), &p(&[1, 1, 1])).unwrap_or(false));
}

#[test]
fn sl_divisible_iff_odd_parts() {
    let g = ClassicalAlgebra::sl(6);
    for x in valid_partitions(&g)
        .into_iter()
        .filter(|x| !x.is_zero_orbit())
    {
        let odd = x.parts().iter().all(|l| l % 2 == 1);
        assert_eq!(is_divisible_partition(&g, &x).unwrap(), odd, "{x}");
        assert_eq!(minimal_levi(&g, &x).unwrap().divisible, odd, "{x}");
    }
}

#[test]
fn regular_diagram() {
    let g = ClassicalAlgebra::sp(6);
    let d = diagram_from_partition(&g, &p(&[6])).unwrap();
    assert_eq!(d.marks, vec![2, 2, 2]);
}
