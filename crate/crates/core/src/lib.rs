pub mod centralizers;
pub mod chevalley;
pub mod classical;
pub mod error;
pub mod linalg;
pub mod numbering;
pub mod orbits;
pub mod reference;
pub mod report;
pub mod rootsys;
pub mod sl3;

pub use centralizers::{
    FingerprintIndex, GradedCentralizer, OrbitFingerprint, VeryFriendlyVerdict,
};
pub use chevalley::{AlgebraElement, ChevalleyAlgebra, DefiningElement, Grading};
pub use classical::{ClassicalAlgebra, Family, MatrixTriple, Partition};
pub use error::{Error, Result};
pub use linalg::Q;
pub use numbering::Numbering;
pub use orbits::{FriendlyPair, OrbitCatalog, OrbitRecord, SearchConfig, WeightedDiagram};
pub use report::{CheckRecord, OrbitReport, Verdict, VerdictRecord};
pub use rootsys::{RootSystem, Series, SimpleType};
pub use sl3::MonomialArray;
