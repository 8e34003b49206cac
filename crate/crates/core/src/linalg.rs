//! Exact linear algebra over the rationals, plus a prime-field shadow used
//! only to screen candidates before an exact computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    c[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    c
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, s: &Q) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|x| x * s).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Incrementally maintained row-echelon basis of a subspace of `Q^dim`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        if self.is_full() {
            return false;
        }
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].recip();
                let v: Vec<Q> = v.into_iter().map(|x| x * &inv).collect();
                self.rows.push((p, v));
                true
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<Q>> {
        self.rows.iter().map(|(_, r)| r)
    }
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut b = EchelonBasis::new(rows[0].len());
    for r in rows {
        b.insert(r.clone());
        if b.is_full() {
            break;
        }
    }
    b.len()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(a: &mut Matrix, cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : A x = 0}` where `A` has `cols` columns.
pub fn kernel(a: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `A x = b`, if one exists.
pub fn solve(a: &Matrix, cols: usize, b: &[Q]) -> Option<Vec<Q>> {
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][cols].clone();
    }
    Some(x)
}

/// Solves a square integer system by fraction-free elimination; `None` if singular.
pub fn solve_integer_square(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Q>> {
    solve_integer_square_multi(a, &[b.to_vec()]).map(|mut xs| xs.remove(0))
}

/// Same as [`solve_integer_square`] for several right-hand sides at once.
pub fn solve_integer_square_multi(a: &[Vec<BigInt>], bs: &[Vec<BigInt>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let w = n + bs.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(bs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..w {
                row[j] = (&pivot[k] * &row[j] - &row[k] * &pivot[j]) / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let solutions = (0..bs.len())
        .map(|c| {
            let mut x = vec![Q::zero(); n];
            for i in (0..n).rev() {
                let mut acc = Q::from_integer(m[i][n + c].clone());
                for j in i + 1..n {
                    if !m[i][j].is_zero() {
                        acc -= Q::from_integer(m[i][j].clone()) * &x[j];
                    }
                }
                x[i] = acc / Q::from_integer(m[i][i].clone());
            }
            x
        })
        .collect();
    Some(solutions)
}

/// Kernel of an integer matrix: pivots are chosen modulo `P`, each free
/// column is solved exactly and every vector is checked against all rows.
/// Since reduction can only lower rank, `cols − rank_P` checked vectors are
/// a basis. Falls back to [`kernel`] otherwise.
pub fn kernel_integer(a: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    let ints: Option<Vec<Vec<BigInt>>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect()
        })
        .collect();
    let Some(ints) = ints else {
        return kernel(a, cols);
    };
    let reduced: Vec<Vec<u64>> = ints
        .iter()
        .map(|row| row.iter().map(modp::from_bigint).collect())
        .collect();
    let (prow, pcol) = modp::pivots(&reduced);
    let mut is_pivot = vec![false; cols];
    for &c in &pcol {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    if free.is_empty() {
        return Vec::new();
    }
    let square: Vec<Vec<BigInt>> = prow
        .iter()
        .map(|&r| pcol.iter().map(|&c| ints[r][c].clone()).collect())
        .collect();
    let rhs: Vec<Vec<BigInt>> = free
        .iter()
        .map(|&f| prow.iter().map(|&r| -ints[r][f].clone()).collect())
        .collect();
    let Some(sols) = solve_integer_square_multi(&square, &rhs) else {
        return kernel(a, cols);
    };
    let mut basis = Vec::with_capacity(free.len());
    for (&f, x) in free.iter().zip(sols) {
        let mut v = vec![Q::zero(); cols];
        v[f] = Q::one();
        for (&c, xi) in pcol.iter().zip(x) {
            v[c] = xi;
        }
        let ok = a.iter().all(|row| {
            row.iter()
                .zip(&v)
                .filter(|(r, x)| !r.is_zero() && !x.is_zero())
                .fold(Q::zero(), |acc, (r, x)| acc + r * x)
                .is_zero()
        });
        if !ok {
            return kernel(a, cols);
        }
        basis.push(v);
    }
    basis
}

/// Smallest positive integer multiple of a rational vector with coprime
/// integer entries.
pub fn primitive_integer_vector(v: &[Q]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Computations modulo the Mersenne prime `2^61 - 1`.
pub mod modp {
    use super::*;

    pub const P: u64 = (1u64 << 61) - 1;

    #[inline]
    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    #[inline]
    pub fn add(a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= P {
            s - P
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    pub fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    pub fn from_i64(v: i64) -> u64 {
        let m = v.rem_euclid(P as i64);
        m as u64
    }

    pub fn from_bigint(v: &BigInt) -> u64 {
        let p = BigInt::from(P);
        let r = ((v % &p) + &p) % &p;
        r.to_u64().expect("reduced residue")
    }

    /// `None` when the denominator vanishes modulo `P`.
    pub fn from_q(v: &Q) -> Option<u64> {
        let d = from_bigint(v.denom());
        if d == 0 {
            return None;
        }
        Some(mul(from_bigint(v.numer()), inv(d)))
    }

    /// Rank of a matrix given as rows; destroys its argument.
    pub fn rank(mut a: Vec<Vec<u64>>) -> usize {
        let rows = a.len();
        if rows == 0 {
            return 0;
        }
        let cols = a[0].len();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, p);
            let inv_p = inv(a[r][c]);
            for x in a[r].iter_mut().skip(c) {
                *x = mul(*x, inv_p);
            }
            let pivot_row = a[r].clone();
            for row in a.iter_mut().skip(r + 1) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if y != 0 {
                        *x = sub(*x, mul(f, y));
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Row and column indices of a maximal nonsingular square submatrix.
    pub fn pivots(a: &[Vec<u64>]) -> (Vec<usize>, Vec<usize>) {
        let mut m: Vec<(usize, Vec<u64>)> = a.iter().cloned().enumerate().collect();
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.1.len());
        let (mut pr, mut pc) = (Vec::new(), Vec::new());
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i].1[c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let inv_p = inv(m[r].1[c]);
            let pivot_row: Vec<u64> = m[r].1.iter().map(|&x| mul(x, inv_p)).collect();
            for (_, row) in m.iter_mut().skip(r + 1) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if y != 0 {
                        *x = sub(*x, mul(f, y));
                    }
                }
            }
            pr.push(m[r].0);
            pc.push(c);
            r += 1;
        }
        (pr, pc)
    }

    /// Whether `A x = b` is solvable.
    pub fn solvable(a: &[Vec<u64>], b: &[u64]) -> bool {
        let aug: Vec<Vec<u64>> = a
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                let mut r = row.clone();
                r.push(bi);
                r
            })
            .collect();
        rank(a.to_vec()) == rank(aug)
    }
}
