//! Root systems of the simple types A–G.
//!
//! Nodes are numbered as in Bourbaki. Roots are integer vectors in the basis
//! of simple roots; the invariant form is normalized so that long roots have
//! squared length 2, which makes `(θ, θ) = 2`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.series, Series::E | Series::F | Series::G)
    }

    /// All exceptional types, in the order E6, E7, E8, F4, G2.
    pub fn exceptional() -> Vec<SimpleType> {
        vec![
            SimpleType {
                series: Series::E,
                rank: 6,
            },
            SimpleType {
                series: Series::E,
                rank: 7,
            },
            SimpleType {
                series: Series::E,
                rank: 8,
            },
            SimpleType {
                series: Series::F,
                rank: 4,
            },
            SimpleType {
                series: Series::G,
                rank: 2,
            },
        ]
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 2),
            Series::B | Series::C => n * (2 * n + 1),
            Series::D => n * (2 * n - 1),
            Series::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Series::F => 52,
            Series::G => 14,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        SimpleType::new(series, rank)
    }
}

/// Gram matrix of the simple roots, long roots of squared length 2.
fn gram_matrix(t: SimpleType) -> Vec<Vec<Q>> {
    let n = t.rank;
    let int = |v: i64| Q::from_integer(BigInt::from(v));
    let frac = |a: i64, b: i64| Q::new(BigInt::from(a), BigInt::from(b));
    let mut g = vec![vec![Q::zero(); n]; n];
    let link = |g: &mut Vec<Vec<Q>>, i: usize, j: usize, v: Q| {
        g[i][j] = v.clone();
        g[j][i] = v;
    };
    match t.series {
        Series::A => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            for i in 1..n {
                link(&mut g, i - 1, i, int(-1));
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                g[i][i] = int(2);
            }
            g[n - 1][n - 1] = int(1);
            for i in 1..n {
                link(&mut g, i - 1, i, int(-1));
            }
        }
        Series::C => {
            for i in 0..n - 1 {
                g[i][i] = int(1);
            }
            g[n - 1][n - 1] = int(2);
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, frac(-1, 2));
            }
            link(&mut g, n - 2, n - 1, int(-1));
        }
        Series::D => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, int(-1));
            }
            link(&mut g, n - 3, n - 1, int(-1));
        }
        Series::E => {
            for i in 0..n {
                g[i][i] = int(2);
            }
            // 1-3-4-5-..., with 2 attached to 4
            link(&mut g, 0, 2, int(-1));
            link(&mut g, 1, 3, int(-1));
            for i in 3..n {
                link(&mut g, i - 1, i, int(-1));
            }
        }
        Series::F => {
            g[0][0] = int(2);
            g[1][1] = int(2);
            g[2][2] = int(1);
            g[3][3] = int(1);
            link(&mut g, 0, 1, int(-1));
            link(&mut g, 1, 2, int(-1));
            link(&mut g, 2, 3, frac(-1, 2));
        }
        Series::G => {
            g[0][0] = frac(2, 3);
            g[1][1] = int(2);
            link(&mut g, 0, 1, int(-1));
        }
    }
    g
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    /// `cartan[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by height then lexicographically, followed by
    /// their negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    pub positives: Vec<usize>,
    pub highest_root: Vec<i64>,
    /// Gram matrix of the simple roots.
    pub form: Vec<Vec<Q>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Result<Self> {
        let t = SimpleType::new(t.series, t.rank)?;
        let n = t.rank;
        let form = gram_matrix(t);
        let two = Q::from_integer(BigInt::from(2));
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = &two * &form[i][j] / &form[i][i];
                        debug_assert!(c.is_integer());
                        i64::try_from(c.to_integer()).expect("small cartan entry")
                    })
                    .collect()
            })
            .collect();

        // Orbit of the simple roots under simple reflections.
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut a = vec![0; n];
            a[i] = 1;
            seen.insert(a.clone(), ());
            queue.push_back(a);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                // <r, α_i^∨> = Σ_j r_j cartan[i][j]
                let pairing: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), ());
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .into_keys()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positive.len();
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()),
        );
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let highest_root = positive[npos - 1].clone();
        Ok(RootSystem {
            simple_type: t,
            cartan,
            roots,
            positives: (0..npos).collect(),
            highest_root,
            form,
            index,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Index of `-roots[i]`.
    pub fn negative_index(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn root_height(&self, root: &[i64]) -> Result<i64> {
        if !self.is_root(root) {
            return Err(Error::NotARoot(root.to_vec()));
        }
        Ok(root.iter().sum())
    }

    /// `(x, y)` for vectors given in simple-root coordinates.
    pub fn form_value(&self, x: &[Q], y: &[Q]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || self.form[i][j].is_zero() {
                    continue;
                }
                acc += &x[i] * &self.form[i][j] * &y[j];
            }
        }
        acc
    }

    pub fn form_int(&self, x: &[i64], y: &[i64]) -> Q {
        let xq: Vec<Q> = x.iter().map(|&v| Q::from_integer(v.into())).collect();
        let yq: Vec<Q> = y.iter().map(|&v| Q::from_integer(v.into())).collect();
        self.form_value(&xq, &yq)
    }

    /// `<x, α_i^∨>` for an integer vector `x`.
    pub fn pairing_with_coroot(&self, x: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| x[j] * self.cartan[i][j]).sum()
    }

    /// Coefficients of the coroot `γ^∨` in the basis of simple coroots.
    pub fn coroot_coords(&self, root: &[i64]) -> Vec<i64> {
        let len = self.form_int(root, root);
        (0..self.rank())
            .map(|i| {
                let c = Q::from_integer(root[i].into()) * &self.form[i][i] / &len;
                debug_assert!(c.is_integer());
                i64::try_from(c.to_integer()).expect("small coroot coefficient")
            })
            .collect()
    }

    /// The `n_α` with `θ = Σ n_α α`.
    pub fn theta_coefficients(&self) -> &[i64] {
        &self.highest_root
    }

    /// Whether the root is long (squared length 2).
    pub fn is_long(&self, root: &[i64]) -> bool {
        self.form_int(root, root) == Q::from_integer(2.into())
    }

    pub fn reflect(&self, root: &[i64], i: usize) -> Vec<i64> {
        let mut s = root.to_vec();
        s[i] -= self.pairing_with_coroot(root, i);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn root_counts() {
        for (t, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A5", 30),
            ("B3", 18),
            ("C4", 32),
            ("D4", 24),
            ("D5", 40),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
            ("F4", 48),
            ("G2", 12),
        ] {
            let r = rs(t);
            assert_eq!(r.roots.len(), n, "{t}");
            assert_eq!(r.roots.len() + r.rank(), r.simple_type.dim(), "{t}");
        }
    }

    #[test]
    fn invalid_types() {
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("Z9".parse::<SimpleType>().is_err());
        assert!("D2".parse::<SimpleType>().is_err());
        assert!("B1".parse::<SimpleType>().is_err());
        assert!("F5".parse::<SimpleType>().is_err());
        assert!("A0".parse::<SimpleType>().is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A2").highest_root, vec![1, 1]);
        assert_eq!(rs("F4").highest_root, vec![2, 3, 4, 2]);
        assert_eq!(rs("G2").highest_root, vec![3, 2]);
        assert_eq!(rs("E8").highest_root, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("B3").highest_root, vec![1, 2, 2]);
        assert_eq!(rs("C3").highest_root, vec![2, 2, 1]);
    }

    #[test]
    fn heights() {
        let a2 = rs("A2");
        assert_eq!(a2.root_height(&[1, 0]).unwrap(), 1);
        assert_eq!(a2.root_height(&[1, 1]).unwrap(), 2);
        assert!(a2.root_height(&[2, 1]).is_err());
        let f4 = rs("F4");
        assert_eq!(f4.root_height(&f4.highest_root.clone()).unwrap(), 11);
    }

    #[test]
    fn form_values() {
        let a2 = rs("A2");
        let th = [q(1, 1), q(1, 1)];
        assert_eq!(a2.form_value(&th, &th), q(2, 1));
        assert_eq!(
            a2.form_value(&[q(1, 1), q(0, 1)], &[q(0, 1), q(1, 1)]),
            q(-1, 1)
        );
        let g2 = rs("G2");
        assert_eq!(g2.form_int(&[1, 0], &[1, 0]), q(2, 3));
        for t in ["A4", "B4", "C4", "D5", "E6", "F4", "G2", "E8"] {
            let r = rs(t);
            let th = r.highest_root.clone();
            assert_eq!(r.form_int(&th, &th), q(2, 1), "{t}");
        }
    }

    #[test]
    fn closure_and_negation() {
        for t in ["B4", "C3", "F4", "G2", "E7"] {
            let r = rs(t);
            for root in &r.roots {
                let neg: Vec<i64> = root.iter().map(|c| -c).collect();
                assert!(r.is_root(&neg));
                for i in 0..r.rank() {
                    assert!(r.is_root(&r.reflect(root, i)));
                }
            }
            assert_eq!(r.positives.len() * 2, r.roots.len());
        }
    }

    #[test]
    fn cartan_matches_form() {
        let two = q(2, 1);
        for t in ["B3", "C3", "F4", "G2", "D4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let v = &two * &r.form[i][j] / &r.form[i][i];
                    assert_eq!(v, q(r.cartan[i][j], 1));
                }
            }
        }
    }

    #[test]
    fn height_counts_decrease() {
        for t in ["A5", "B4", "C4", "D5", "E6", "E8", "F4", "G2"] {
            let r = rs(t);
            let mut counts = std::collections::BTreeMap::new();
            for &i in &r.positives {
                *counts
                    .entry(r.roots[i].iter().sum::<i64>())
                    .or_insert(0usize) += 1;
            }
            let v: Vec<usize> = counts.values().copied().collect();
            assert!(v.windows(2).all(|w| w[0] >= w[1]), "{t}: {v:?}");
        }
    }
}
