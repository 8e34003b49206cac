//! Invariant combinatorics of the SL3 model algebra restricted to the
//! principal `𝔰𝔩₂`: monomials `m(i, j) = x₁^i x₂^{a−i} ξ₂^{b−j} ξ₃^j`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

fn check(a: i64, b: i64) -> Result<(usize, usize)> {
    if a < 0 || b < 0 {
        return Err(Error::Negative);
    }
    Ok((a as usize, b as usize))
}

/// Dimension of the invariants of `R(a, b)` under the unipotent radical.
pub fn invariant_dim(a: i64, b: i64) -> Result<u64> {
    let (a, b) = check(a, b)?;
    Ok((a as u64 + 1) * (b as u64 + 1))
}

/// Weyl dimension of `R(a, b)`.
pub fn weyl_dim(a: u64, b: u64) -> u64 {
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Multiplicity of `R_k` in `R(a, b)` restricted to the principal `𝔰𝔩₂`.
pub fn branching_multiplicity(a: u64, b: u64, k: i64) -> u64 {
    if k < 0 || k as u64 > a + b {
        return 0;
    }
    let k = k as u64;
    (0..=a).filter(|&i| i <= k && k - i <= b).count() as u64
}

pub fn branching_profile(a: u64, b: u64) -> Vec<u64> {
    (0..=(a + b) as i64)
        .map(|k| branching_multiplicity(a, b, k))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialArray {
    pub a: usize,
    pub b: usize,
}

/// Exponents of `(x₁, x₂, ξ₂, ξ₃)` in `m(i, j)`.
pub type Monomial = [usize; 4];

impl MonomialArray {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let (a, b) = check(a, b)?;
        Ok(MonomialArray { a, b })
    }

    pub fn len(&self) -> usize {
        (self.a + 1) * (self.b + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn in_range(&self, i: usize, j: usize) -> Result<()> {
        if i > self.a {
            return Err(Error::OutOfRange(i, self.a));
        }
        if j > self.b {
            return Err(Error::OutOfRange(j, self.b));
        }
        Ok(())
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Monomial> {
        self.in_range(i, j)?;
        Ok([i, self.a - i, self.b - j, j])
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.a).flat_map(move |i| (0..=self.b).map(move |j| (i, j)))
    }

    /// `e₁·m(i, j) = m(i+1, j)`, zero when `i = a`.
    pub fn act_e1(&self, i: usize, j: usize) -> Result<Option<(usize, usize)>> {
        self.in_range(i, j)?;
        Ok((i < self.a).then_some((i + 1, j)))
    }

    /// `e₂·m(i, j) = m(i, j+1)`, zero when `j = b`.
    pub fn act_e2(&self, i: usize, j: usize) -> Result<Option<(usize, usize)>> {
        self.in_range(i, j)?;
        Ok((j < self.b).then_some((i, j + 1)))
    }

    /// Every entry is reached from `m(0, 0)` by `e₁` and `e₂` moves.
    pub fn is_cyclic(&self) -> bool {
        let mut seen = vec![vec![false; self.b + 1]; self.a + 1];
        let mut queue = VecDeque::from([(0, 0)]);
        seen[0][0] = true;
        let mut count = 1;
        while let Some((i, j)) = queue.pop_front() {
            for next in [self.act_e1(i, j), self.act_e2(i, j)] {
                if let Ok(Some((x, y))) = next {
                    if !seen[x][y] {
                        seen[x][y] = true;
                        count += 1;
                        queue.push_back((x, y));
                    }
                }
            }
        }
        count == self.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn invariants() {
        assert_eq!(invariant_dim(1, 0), Ok(2));
        assert_eq!(invariant_dim(0, 0), Ok(1));
        assert_eq!(invariant_dim(1, 1), Ok(4));
        assert_eq!(invariant_dim(-1, 0), Err(Error::Negative));
    }

    #[test]
    fn profiles() {
        assert_eq!(branching_profile(1, 1), vec![1, 2, 1]);
        assert_eq!(branching_profile(3, 0), vec![1, 1, 1, 1]);
        assert_eq!(branching_profile(2, 1), vec![1, 2, 2, 1]);
        assert_eq!(branching_multiplicity(2, 1, -1), 0);
        assert_eq!(branching_multiplicity(2, 1, 4), 0);
    }

    #[test]
    fn actions() {
        let m = MonomialArray::new(2, 1).unwrap();
        assert_eq!(m.act_e1(0, 0), Ok(Some((1, 0))));
        assert_eq!(m.act_e1(2, 1), Ok(None));
        assert_eq!(m.act_e2(1, 1), Ok(None));
        assert_eq!(m.act_e1(3, 0), Err(Error::OutOfRange(3, 2)));
        assert_eq!(m.entry(0, 0), Ok([0, 2, 1, 0]));
        assert!(MonomialArray::new(0, 0).unwrap().is_cyclic());
        assert!(MonomialArray::new(3, 2).unwrap().is_cyclic());
        assert!(MonomialArray::new(6, 6).unwrap().is_cyclic());
    }

    proptest! {
        #[test]
        fn dimension_identity(a in 0u64..=10, b in 0u64..=10) {
            let total: u64 = branching_profile(a, b).iter().enumerate().map(|(k, m)| m * (k as u64 + 1)).sum();
            prop_assert_eq!(total, weyl_dim(a, b));
            prop_assert_eq!(branching_multiplicity(a, b, 0), 1);
            prop_assert_eq!(branching_profile(a, b), branching_profile(b, a));
            let count: u64 = branching_profile(a, b).iter().sum();
            prop_assert_eq!(count, invariant_dim(a as i64, b as i64).unwrap());
        }

        #[test]
        fn plateau(a in 0u64..=10, b in 0u64..=10) {
            let (hi, lo) = (a.max(b), a.min(b));
            for k in 0..=(a + b) {
                let want = (k.min(lo) + 1).min(a + b - k + 1).min(lo + 1);
                prop_assert_eq!(branching_multiplicity(hi, lo, k as i64), want);
            }
        }
    }
}
