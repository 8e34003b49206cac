//! Shared fixtures for the benchmarks.

use nilorb::{ChevalleyAlgebra, OrbitCatalog, SearchConfig, SimpleType, WeightedDiagram};

pub fn algebra(t: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(t.parse::<SimpleType>().expect("type")).expect("algebra")
}

pub fn catalog(g: &ChevalleyAlgebra) -> OrbitCatalog {
    OrbitCatalog::build(g, &SearchConfig::default())
}

pub fn diagram(t: &str, marks: &str) -> WeightedDiagram {
    WeightedDiagram::parse(t.parse().expect("type"), marks).expect("diagram")
}
