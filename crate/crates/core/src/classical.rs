//! Nilpotent orbits of sl(V), sp(V) and so(V) by partitions, with explicit
//! matrix realizations of `e`, `h`, `f` and of `e⟨2⟩`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Matrix, Q};
use crate::orbits::WeightedDiagram;
use crate::rootsys::{Series, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl,
    Sp,
    So,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl" => Ok(Family::Sl),
            "sp" => Ok(Family::Sp),
            "so" => Ok(Family::So),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl => "sl",
            Family::Sp => "sp",
            Family::So => "so",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalAlgebra {
    pub family: Family,
    pub dim_v: usize,
}

impl ClassicalAlgebra {
    pub fn new(family: Family, dim_v: usize) -> Result<Self> {
        if dim_v == 0 || (family == Family::Sp && dim_v % 2 == 1) {
            return Err(Error::InvalidPartition(format!(
                "{family}({dim_v}) is not defined"
            )));
        }
        Ok(ClassicalAlgebra { family, dim_v })
    }

    pub fn sl(n: usize) -> Self {
        Self::new(Family::Sl, n).expect("valid")
    }

    pub fn sp(n: usize) -> Self {
        Self::new(Family::Sp, n).expect("valid")
    }

    pub fn so(n: usize) -> Self {
        Self::new(Family::So, n).expect("valid")
    }

    /// Number of nodes of the Dynkin diagram.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Sl => self.dim_v - 1,
            Family::Sp | Family::So => self.dim_v / 2,
        }
    }

    /// The Cartan type, when it is one of the standard series.
    pub fn simple_type(&self) -> Option<SimpleType> {
        let n = self.rank();
        let series = match self.family {
            Family::Sl => Series::A,
            Family::Sp => Series::C,
            Family::So if self.dim_v % 2 == 1 => Series::B,
            Family::So => Series::D,
        };
        SimpleType::new(series, n).ok()
    }
}

impl fmt::Display for ClassicalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.dim_v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Eigenvalues of `h` on `V`, sorted in decreasing order.
    pub fn h_eigenvalues(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&l| (0..l).map(move |k| l as i64 - 1 - 2 * k as i64))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

fn check_size(alg: &ClassicalAlgebra, p: &Partition) -> Result<()> {
    if p.total() != alg.dim_v {
        return Err(Error::PartitionSize {
            expected: alg.dim_v,
            got: p.total(),
        });
    }
    Ok(())
}

fn is_valid(alg: &ClassicalAlgebra, p: &Partition) -> bool {
    let bad_parity = match alg.family {
        Family::Sl => return true,
        Family::Sp => 1,
        Family::So => 0,
    };
    p.multiplicities()
        .iter()
        .all(|(&v, &m)| v % 2 != bad_parity || m % 2 == 0)
}

pub fn validate_partition(alg: &ClassicalAlgebra, p: &Partition) -> Result<bool> {
    check_size(alg, p)?;
    Ok(is_valid(alg, p))
}

pub fn valid_partitions(alg: &ClassicalAlgebra) -> Vec<Partition> {
    partitions(alg.dim_v)
        .into_iter()
        .filter(|p| is_valid(alg, p))
        .collect()
}

fn require_valid(alg: &ClassicalAlgebra, p: &Partition) -> Result<()> {
    if !validate_partition(alg, p)? {
        return Err(Error::InvalidPartition(format!("{p} for {alg}")));
    }
    Ok(())
}

fn require_nonzero(alg: &ClassicalAlgebra, p: &Partition) -> Result<()> {
    require_valid(alg, p)?;
    if p.is_zero_orbit() {
        return Err(Error::ZeroOrbit);
    }
    Ok(())
}

fn so_criterion(parts: &[usize]) -> bool {
    if parts.iter().any(|l| l % 2 == 0) {
        return false;
    }
    let at = |i: usize| parts.get(i).copied().unwrap_or(0);
    (0..parts.len()).step_by(2).all(|i| {
        let (a, b) = (at(i), at(i + 1));
        match a % 4 {
            _ if a == 1 => true,
            3 => b == a,
            _ => b == a || b + 2 == a,
        }
    })
}

pub fn is_divisible_partition(alg: &ClassicalAlgebra, p: &Partition) -> Result<bool> {
    require_nonzero(alg, p)?;
    Ok(match alg.family {
        Family::Sl | Family::Sp => p.parts.iter().all(|l| l % 2 == 1),
        Family::So => so_criterion(&p.parts),
    })
}

/// Replaces every part `2l+1 ≥ 3` with `l+1, l`.
pub fn half_partition(p: &Partition) -> Result<Partition> {
    if let Some(&even) = p.parts.iter().find(|&&l| l % 2 == 0) {
        return Err(Error::InvalidPartition(format!(
            "{p} has the even part {even}"
        )));
    }
    let parts = p
        .parts
        .iter()
        .flat_map(|&l| {
            if l == 1 {
                vec![1]
            } else {
                vec![l / 2 + 1, l / 2]
            }
        })
        .collect();
    Partition::new(parts)
}

/// All marks of the orbits with partition `p`: one list, or two for very
/// even partitions in even orthogonal dimension.
pub fn partition_marks(alg: &ClassicalAlgebra, p: &Partition) -> Result<Vec<Vec<u8>>> {
    require_valid(alg, p)?;
    let ev = p.h_eigenvalues();
    let n = alg.rank();
    let diffs = |h: &[i64]| -> Vec<i64> { h.windows(2).map(|w| w[0] - w[1]).collect() };
    let to_u8 = |v: Vec<i64>| -> Vec<u8> { v.into_iter().map(|m| m as u8).collect() };
    if alg.family == Family::Sl {
        return Ok(vec![to_u8(diffs(&ev))]);
    }
    let h = &ev[..n];
    let mut out = Vec::new();
    let mut base = diffs(h);
    match alg.family {
        Family::Sp => base.push(2 * h[n - 1]),
        Family::So if alg.dim_v % 2 == 1 => base.push(h[n - 1]),
        _ => {
            // D_n: the last two nodes are ε_{n−1} ∓ ε_n.
            if n == 1 {
                return Ok(vec![vec![]]);
            }
            base.pop();
            let (a, b) = (h[n - 2], h[n - 1]);
            let mut first = base.clone();
            first.extend([a - b, a + b]);
            out.push(to_u8(first));
            if b != 0 {
                base.extend([a + b, a - b]);
                out.push(to_u8(base));
            }
            return Ok(out);
        }
    }
    out.push(to_u8(base));
    Ok(out)
}

pub fn diagrams_from_partition(
    alg: &ClassicalAlgebra,
    p: &Partition,
) -> Result<Vec<WeightedDiagram>> {
    let t = alg
        .simple_type()
        .ok_or_else(|| Error::InvalidPartition(format!("{alg} has no standard Cartan type")))?;
    partition_marks(alg, p)?
        .into_iter()
        .map(|m| WeightedDiagram::new(t, m))
        .collect()
}

/// The diagram of `p`; for very even partitions, the one with the larger
/// mark on the last node.
pub fn diagram_from_partition(alg: &ClassicalAlgebra, p: &Partition) -> Result<WeightedDiagram> {
    let mut ds = diagrams_from_partition(alg, p)?;
    Ok(ds.remove(0))
}

pub fn partition_height(alg: &ClassicalAlgebra, p: &Partition) -> Result<usize> {
    require_nonzero(alg, p)?;
    let (l1, l2) = (p.part(0), p.part(1));
    Ok(match alg.family {
        Family::Sl | Family::Sp => 2 * (l1 - 1),
        Family::So if l2 + 1 >= l1 => l1 + l2 - 2,
        Family::So => 2 * l1 - 4,
    })
}

/// How Jordan blocks are grouped for the form: a single block carries a
/// nondegenerate form, a pair of equal blocks carries a form for which both
/// blocks are isotropic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockGroup {
    Single(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixTriple {
    pub algebra: ClassicalAlgebra,
    pub partition: Partition,
    pub e: Matrix,
    pub h: Matrix,
    pub f: Matrix,
    pub phi: Option<Matrix>,
    pub blocks: Vec<Range<usize>>,
    pub groups: Vec<BlockGroup>,
}

fn group_blocks(alg: &ClassicalAlgebra, parts: &[usize]) -> Vec<BlockGroup> {
    let mut groups = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let l = parts[i];
        let pairable = match alg.family {
            Family::Sl => false,
            Family::Sp => l % 2 == 1,
            Family::So => l.is_multiple_of(2) || parts.get(i + 1) == Some(&l),
        };
        if pairable {
            groups.push(BlockGroup::Pair(i, i + 1));
            i += 2;
        } else {
            groups.push(BlockGroup::Single(i));
            i += 1;
        }
    }
    groups
}

pub fn build_triple(alg: &ClassicalAlgebra, p: &Partition) -> Result<MatrixTriple> {
    require_valid(alg, p)?;
    let n = alg.dim_v;
    let groups = group_blocks(alg, &p.parts);
    let mut blocks = Vec::new();
    let mut start = 0;
    for &l in &p.parts {
        blocks.push(start..start + l);
        start += l;
    }
    let (mut e, mut h, mut f) = (
        linalg::zeros(n, n),
        linalg::zeros(n, n),
        linalg::zeros(n, n),
    );
    for (b, &l) in blocks.iter().zip(&p.parts) {
        let s = b.start;
        for i in 0..l {
            // 1-based position i+1 carries weight 2(i+1) − l − 1.
            h[s + i][s + i] = q(2 * i as i64 + 1 - l as i64);
            if i + 1 < l {
                e[s + i + 1][s + i] = Q::one();
                f[s + i][s + i + 1] = q(((i + 1) * (l - i - 1)) as i64);
            }
        }
    }
    let phi = match alg.family {
        Family::Sl => None,
        fam => {
            let sign = if fam == Family::So {
                Q::one()
            } else {
                -Q::one()
            };
            let mut phi = linalg::zeros(n, n);
            for g in &groups {
                match *g {
                    BlockGroup::Single(k) => {
                        let b = &blocks[k];
                        let l = b.len();
                        for i in 0..l {
                            phi[b.start + i][b.start + l - 1 - i] = alternating(i);
                        }
                    }
                    BlockGroup::Pair(a, c) => {
                        let (ba, bc) = (&blocks[a], &blocks[c]);
                        let l = ba.len();
                        for i in 0..l {
                            let v = alternating(i);
                            phi[bc.start + l - 1 - i][ba.start + i] = &sign * &v;
                            phi[ba.start + i][bc.start + l - 1 - i] = v;
                        }
                    }
                }
            }
            Some(phi)
        }
    };
    Ok(MatrixTriple {
        algebra: *alg,
        partition: p.clone(),
        e,
        h,
        f,
        phi,
        blocks,
        groups,
    })
}

fn alternating(i: usize) -> Q {
    if i.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

fn square(m: &Matrix) -> Matrix {
    linalg::mat_mul(m, m)
}

/// `e²` restricted to the rows and columns of a block, times `sign`.
fn put_square(e2: &mut Matrix, esq: &Matrix, b: &Range<usize>, sign: &Q) {
    for r in b.clone() {
        for c in b.clone() {
            if !esq[r][c].is_zero() {
                e2[r][c] = sign * &esq[r][c];
            }
        }
    }
}

pub fn build_e2(alg: &ClassicalAlgebra, p: &Partition, t: &MatrixTriple) -> Result<Matrix> {
    if !is_divisible_partition(alg, p)? {
        return Err(Error::NotDivisible(p.to_string()));
    }
    if t.partition != *p || t.algebra != *alg {
        return Err(Error::InvalidPartition(format!(
            "triple was built for {}",
            t.partition
        )));
    }
    let esq = square(&t.e);
    if alg.family == Family::Sl {
        return Ok(esq);
    }
    let n = alg.dim_v;
    let mut e2 = linalg::zeros(n, n);
    let mut singles = Vec::new();
    for g in &t.groups {
        match *g {
            BlockGroup::Pair(a, c) => {
                put_square(&mut e2, &esq, &t.blocks[a], &Q::one());
                put_square(&mut e2, &esq, &t.blocks[c], &-Q::one());
            }
            BlockGroup::Single(k) => singles.push(k),
        }
    }
    // Leftover odd blocks in so(V) come as (4m+1, 4m−1) plus at most one 1.
    singles.sort_by_key(|&k| std::cmp::Reverse(t.blocks[k].len()));
    let mut it = singles.chunks(2);
    for chunk in &mut it {
        let v = &t.blocks[chunk[0]];
        let Some(&wk) = chunk.get(1) else {
            if v.len() == 1 {
                continue;
            }
            return Err(Error::NotDivisible(p.to_string()));
        };
        let w = &t.blocks[wk];
        if v.len() % 4 != 1 || w.len() + 2 != v.len() {
            if v.len() == 1 && w.len() == 1 {
                continue;
            }
            return Err(Error::NotDivisible(p.to_string()));
        }
        // v_i ↦ −w_{i+2} and w_j ↦ −v_{j+2}, where w is indexed from 2.
        let vi = |i: usize| v.start + i - 1;
        let wj = |j: usize| w.start + j - 2;
        let top = v.len();
        for i in 1..=top {
            if (2..top).contains(&(i + 2)) {
                e2[wj(i + 2)][vi(i)] = -Q::one();
            }
        }
        for j in 2..top {
            if j + 2 <= top {
                e2[vi(j + 2)][wj(j)] = -Q::one();
            }
        }
    }
    Ok(e2)
}

/// Ranks of powers give the Jordan type of a nilpotent matrix.
pub fn jordan_type(m: &Matrix) -> Result<Partition> {
    let n = m.len();
    let mut ranks = vec![n];
    let mut power = linalg::identity(n);
    loop {
        power = linalg::mat_mul(&power, m);
        let r = linalg::rank(&power);
        if r == *ranks.last().expect("nonempty") {
            if r != 0 {
                return Err(Error::NotNilpotent);
            }
            break;
        }
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    // #blocks of size ≥ k is ranks[k−1] − ranks[k].
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in 0..at_least.len() {
        let exact = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, exact));
    }
    Partition::new(parts)
}

/// `XᵀΦ + ΦX = 0`.
pub fn preserves_form(x: &Matrix, phi: &Matrix) -> bool {
    let lhs = linalg::mat_add(
        &linalg::mat_mul(&linalg::transpose(x), phi),
        &linalg::mat_mul(phi, x),
    );
    linalg::is_zero_matrix(&lhs)
}

/// The form adjoint `−Φ⁻¹XᵀΦ`, an involution of gl(V) fixing exactly g(Φ).
fn form_reflection(x: &Matrix, phi: &Matrix, phi_inv: &Matrix) -> Matrix {
    let t = linalg::mat_mul(&linalg::mat_mul(phi_inv, &linalg::transpose(x)), phi);
    linalg::mat_scale(&t, &-Q::one())
}

fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = linalg::rref(&mut aug, n);
    if piv.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Given `e` and a diagonal `h` with `[h, e] = 2e`, finds `f` with
/// `[e, f] = h` and `[h, f] = −2f`, inside g(Φ) when a form is given.
pub fn complete_with_diagonal(e: &Matrix, h: &Matrix, phi: Option<&Matrix>) -> Option<Matrix> {
    let n = e.len();
    let w: Vec<&Q> = (0..n).map(|i| &h[i][i]).collect();
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| w[a] - w[b] == q(-2))
        .collect();
    // Column for E_ab holds [e, E_ab] = e·E_ab − E_ab·e.
    let mut m = linalg::zeros(n * n, unknowns.len());
    for (c, &(a, b)) in unknowns.iter().enumerate() {
        for i in 0..n {
            if !e[i][a].is_zero() {
                m[i * n + b][c] += &e[i][a];
            }
        }
        for j in 0..n {
            if !e[b][j].is_zero() {
                m[a * n + j][c] -= &e[b][j];
            }
        }
    }
    let rhs: Vec<Q> = h.iter().flatten().cloned().collect();
    let x = linalg::solve(&m, unknowns.len(), &rhs)?;
    let mut f = linalg::zeros(n, n);
    for (&(a, b), v) in unknowns.iter().zip(x) {
        f[a][b] = v;
    }
    if let Some(phi) = phi {
        let phi_inv = inverse(phi)?;
        let r = form_reflection(&f, phi, &phi_inv);
        f = linalg::mat_scale(&linalg::mat_add(&f, &r), &crate::linalg::qf(1, 2));
    }
    Some(f)
}

/// Completes a nilpotent matrix to an sl2-triple without knowing `h`.
pub fn complete_sl2_matrix(e: &Matrix) -> Result<(Matrix, Matrix)> {
    let n = e.len();
    if linalg::is_zero_matrix(e) {
        return Err(Error::ZeroElement);
    }
    jordan_type(e)?;
    // h = [e, X] with [h, e] = 2e: linear in X.
    let unit_bracket = |a: usize, b: usize| -> Matrix {
        let mut x = linalg::zeros(n, n);
        x[a][b] = Q::one();
        linalg::commutator(e, &x)
    };
    let mut m = linalg::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let c = a * n + b;
            let hx = unit_bracket(a, b);
            let g = linalg::commutator(&hx, e);
            for (k, v) in g.iter().flatten().enumerate() {
                m[k][c] = v.clone();
            }
        }
    }
    let rhs: Vec<Q> = linalg::mat_scale(e, &q(2)).into_iter().flatten().collect();
    let x = linalg::solve(&m, n * n, &rhs).ok_or(Error::Inconsistent)?;
    let xm: Matrix = x.chunks(n).map(|r| r.to_vec()).collect();
    let h = linalg::commutator(e, &xm);
    // [e, f] = h and [h, f] = −2f.
    let mut m = linalg::zeros(2 * n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let c = a * n + b;
            let mut x = linalg::zeros(n, n);
            x[a][b] = Q::one();
            let ef = linalg::commutator(e, &x);
            let hf = linalg::mat_add(&linalg::commutator(&h, &x), &linalg::mat_scale(&x, &q(2)));
            for (k, v) in ef.iter().flatten().chain(hf.iter().flatten()).enumerate() {
                m[k][c] = v.clone();
            }
        }
    }
    let mut rhs: Vec<Q> = h.iter().flatten().cloned().collect();
    rhs.extend(std::iter::repeat_n(Q::zero(), n * n));
    let y = linalg::solve(&m, n * n, &rhs).ok_or(Error::Inconsistent)?;
    let f: Matrix = y.chunks(n).map(|r| r.to_vec()).collect();
    Ok((h, f))
}

pub fn is_sl2_triple(e: &Matrix, h: &Matrix, f: &Matrix) -> bool {
    linalg::commutator(e, f) == *h
        && linalg::commutator(h, e) == linalg::mat_scale(e, &q(2))
        && linalg::commutator(h, f) == linalg::mat_scale(f, &q(-2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Report {
    pub form_compatible: bool,
    pub grading: bool,
    pub characteristic: bool,
    pub jordan_type: bool,
    pub commutes: bool,
    pub half: String,
    pub found: String,
}

impl E2Report {
    pub fn all(&self) -> bool {
        self.form_compatible
            && self.grading
            && self.characteristic
            && self.jordan_type
            && self.commutes
    }

    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("form-compatible", self.form_compatible),
            ("grading", self.grading),
            ("characteristic", self.characteristic),
            ("jordan-type", self.jordan_type),
            ("commutes", self.commutes),
        ]
    }
}

/// Runs every check on `e⟨2⟩` and returns the completed `f⟨2⟩` when there is one.
pub fn verify_e2(t: &MatrixTriple, e2: &Matrix) -> Result<(E2Report, Option<Matrix>)> {
    let h2 = linalg::mat_scale(&t.h, &crate::linalg::qf(1, 2));
    let form_compatible = t.phi.as_ref().is_none_or(|phi| preserves_form(e2, phi));
    let grading = linalg::commutator(&h2, e2) == linalg::mat_scale(e2, &q(2));
    let f2 = complete_with_diagonal(e2, &h2, t.phi.as_ref()).filter(|f2| {
        is_sl2_triple(e2, &h2, f2) && t.phi.as_ref().is_none_or(|phi| preserves_form(f2, phi))
    });
    let half = half_partition(&t.partition)?;
    let found = jordan_type(e2)?;
    let report = E2Report {
        form_compatible,
        grading,
        characteristic: f2.is_some(),
        jordan_type: found == half,
        commutes: linalg::is_zero_matrix(&linalg::commutator(&t.e, e2)),
        half: half.to_string(),
        found: found.to_string(),
    };
    Ok((report, f2))
}

/// Checks the triple's own invariants.
pub fn verify_triple(t: &MatrixTriple) -> bool {
    let forms_ok = t.phi.as_ref().is_none_or(|phi| {
        inverse(phi).is_some()
            && [&t.e, &t.h, &t.f].iter().all(|x| preserves_form(x, phi))
            && symmetric_sign(phi)
                == Some(if t.algebra.family == Family::So {
                    1
                } else {
                    -1
                })
    });
    forms_ok && is_sl2_triple(&t.e, &t.h, &t.f) && jordan_type(&t.e).is_ok_and(|j| j == t.partition)
}

fn symmetric_sign(phi: &Matrix) -> Option<i32> {
    let pt = linalg::transpose(phi);
    if pt == *phi {
        Some(1)
    } else if pt == linalg::mat_scale(phi, &-Q::one()) {
        Some(-1)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviFactor {
    pub label: String,
    /// Partition of the piece of `e` in this factor.
    pub partition: String,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDecomposition {
    pub factors: Vec<LeviFactor>,
    pub divisible: bool,
}

fn a_factor(size: usize) -> Option<LeviFactor> {
    (size > 1).then(|| LeviFactor {
        label: format!("A{}", size - 1),
        partition: size.to_string(),
        divisible: size % 2 == 1,
    })
}

/// Derived algebra of a minimal Levi subalgebra meeting the orbit, each
/// simple factor tagged with the divisibility of the piece of `e` in it.
pub fn minimal_levi(alg: &ClassicalAlgebra, p: &Partition) -> Result<LeviDecomposition> {
    require_valid(alg, p)?;
    let mut factors = Vec::new();
    if alg.family == Family::Sl {
        factors.extend(p.parts.iter().filter_map(|&l| a_factor(l)));
    } else {
        let mut rest = Vec::new();
        for (&v, &m) in p.multiplicities().iter().rev() {
            for _ in 0..m / 2 {
                factors.extend(a_factor(v));
            }
            if m % 2 == 1 {
                rest.push(v);
            }
        }
        let dim: usize = rest.iter().sum();
        if !rest.iter().all(|&v| v == 1) {
            let divisible = match alg.family {
                Family::Sp => rest.iter().all(|l| l % 2 == 1),
                _ => so_criterion(&rest),
            };
            let label = match alg.family {
                Family::Sp => format!("C{}", dim / 2),
                _ if dim % 2 == 1 => format!("B{}", dim / 2),
                _ => format!("D{}", dim / 2),
            };
            factors.push(LeviFactor {
                label,
                partition: Partition::new(rest)?.to_string(),
                divisible,
            });
        }
    }
    let divisible = !p.is_zero_orbit() && factors.iter().all(|f| f.divisible);
    Ok(LeviDecomposition { factors, divisible })
}

/// Brute-force divisibility: some diagram of `p` is nonzero, even, and its
/// half is the diagram of a valid partition `q`. Returns all such `q`.
pub fn divisible_by_diagrams(alg: &ClassicalAlgebra, p: &Partition) -> Result<Vec<Partition>> {
    require_valid(alg, p)?;
    let mut table: BTreeMap<Vec<u8>, Vec<Partition>> = BTreeMap::new();
    for r in valid_partitions(alg) {
        for m in partition_marks(alg, &r)? {
            table.entry(m).or_default().push(r.clone());
        }
    }
    let mut out = Vec::new();
    for m in partition_marks(alg, p)? {
        if m.iter().all(|&x| x == 0) || m.contains(&1) {
            continue;
        }
        let half: Vec<u8> = m.iter().map(|x| x / 2).collect();
        if let Some(qs) = table.get(&half) {
            out.extend(qs.iter().cloned());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Exact rationals as strings for JSON export.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}
