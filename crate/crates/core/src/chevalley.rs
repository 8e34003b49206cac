//! Simple Lie algebras on a Chevalley basis.
//!
//! The basis consists of root vectors `e_γ` (in the order of
//! [`RootSystem::roots`]) followed by the simple coroots `h_1, …, h_r`.
//! Structure constants are integers `N(γ, δ) = ±(p + 1)`; their signs are
//! fixed by declaring `N = +(p + 1)` on every extraspecial pair and
//! propagating through the standard relations between the constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, zeros, Matrix, Q};
use crate::rootsys::{RootSystem, SimpleType};

/// Sparse vector over the Chevalley basis of a fixed algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    ty: SimpleType,
    coeffs: BTreeMap<usize, Q>,
}

impl AlgebraElement {
    pub fn zero(ty: SimpleType) -> Self {
        AlgebraElement {
            ty,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(ty: SimpleType, i: usize) -> Self {
        Self::from_terms(ty, [(i, Q::one())])
    }

    pub fn from_terms(ty: SimpleType, terms: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut x = Self::zero(ty);
        for (i, c) in terms {
            x.add_term(i, &c);
        }
        x
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn scaled(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.ty);
        }
        AlgebraElement {
            ty: self.ty,
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (i, c) in other.terms() {
            r.add_term(i, c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (i, c) in other.terms() {
            r.add_term(i, &-c);
        }
        r
    }

    /// Dense coordinates restricted to the listed basis indices.
    pub fn coords_on(&self, indices: &[usize]) -> Vec<Q> {
        indices.iter().map(|&i| self.coeff(i)).collect()
    }

    pub fn from_coords_on(ty: SimpleType, indices: &[usize], coords: &[Q]) -> Self {
        Self::from_terms(ty, indices.iter().copied().zip(coords.iter().cloned()))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("{c}*b{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Semisimple element of the Cartan subalgebra given by its values on the
/// simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningElement {
    pub values: Vec<Q>,
}

impl DefiningElement {
    pub fn from_marks(marks: &[u8]) -> Self {
        DefiningElement {
            values: marks.iter().map(|&m| q(m as i64)).collect(),
        }
    }

    pub fn halved(&self) -> Self {
        let two = q(2);
        DefiningElement {
            values: self.values.iter().map(|v| v / &two).collect(),
        }
    }

    pub fn eigenvalue(&self, root: &[i64]) -> Q {
        root.iter()
            .zip(&self.values)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, v)| q(c) * v)
            .sum()
    }

    /// Coordinates in the basis of simple coroots: solves `Σ_j c_j α_i(h_j) = values[i]`.
    pub fn coroot_coords(&self, rs: &RootSystem) -> Vec<Q> {
        let n = rs.rank();
        // α_i(h_j) = cartan[j][i]
        let a: Matrix = (0..n)
            .map(|i| (0..n).map(|j| q(rs.cartan[j][i])).collect())
            .collect();
        crate::linalg::solve(&a, n, &self.values).expect("cartan matrix is invertible")
    }
}

/// The integer grading of an algebra by `ad h` for a [`DefiningElement`].
#[derive(Clone, Debug)]
pub struct Grading {
    pub h: DefiningElement,
    pub degrees: Vec<i64>,
    pub pieces: BTreeMap<i64, Vec<usize>>,
    position: Vec<usize>,
}

impl Grading {
    pub fn piece(&self, i: i64) -> &[usize] {
        self.pieces.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn piece_dim(&self, i: i64) -> usize {
        self.piece(i).len()
    }

    /// Position of basis index `b` inside its graded piece.
    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }

    pub fn max_degree(&self) -> i64 {
        *self.pieces.keys().next_back().unwrap_or(&0)
    }

    /// Degree of a homogeneous element, `None` for zero or mixed elements.
    pub fn degree_of(&self, x: &AlgebraElement) -> Option<i64> {
        let mut it = x.support().map(|b| self.degrees[b]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

pub struct ChevalleyAlgebra {
    rs: RootSystem,
    dim: usize,
    n_roots: usize,
    /// Bracket of basis elements, `dim * dim` entries.
    table: Vec<Vec<(usize, i64)>>,
    constants: HashMap<(usize, usize), i64>,
}

impl fmt::Debug for ChevalleyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChevalleyAlgebra({})", self.rs.simple_type)
    }
}

struct ConstantSolver<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, usize), i64>,
    lengths: Vec<Q>,
}

impl ConstantSolver<'_> {
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> = self.rs.roots[a]
            .iter()
            .zip(&self.rs.roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.rs.index_of(&v)
    }

    fn diff(&self, a: usize, b: usize) -> Option<usize> {
        self.sum(a, self.rs.negative_index(b))
    }

    /// Largest `p` with `b - p a` a root.
    fn string_p(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.diff(cur, a) {
            p += 1;
            cur = next;
        }
        p
    }

    fn ratio(&self, num: usize, den: usize, n: i64) -> i64 {
        let v = &self.lengths[num] / &self.lengths[den] * q(n);
        assert!(v.is_integer(), "non-integral structure constant");
        i64::try_from(v.to_integer()).unwrap()
    }

    /// `N(a, b)` for arbitrary roots with `a + b` a root.
    fn get(&mut self, a: usize, b: usize) -> i64 {
        let pa = self.rs.is_positive_index(a);
        let pb = self.rs.is_positive_index(b);
        match (pa, pb) {
            (true, true) => self.positive(a, b),
            (false, false) => {
                let (na, nb) = (self.rs.negative_index(a), self.rs.negative_index(b));
                -self.positive(na, nb)
            }
            (true, false) => {
                let s = self.sum(a, b).expect("a + b is a root");
                let c = self.rs.negative_index(s);
                if self.rs.is_positive_index(s) {
                    // N(a,b) = (c,c)/(a,a) N(b,c), with b and c negative.
                    let nbc = self.get(b, c);
                    self.ratio(c, a, nbc)
                } else {
                    // N(a,b) = (c,c)/(b,b) N(c,a), with c and a positive.
                    let nca = self.positive(c, a);
                    self.ratio(c, b, nca)
                }
            }
            (false, true) => -self.get(b, a),
        }
    }

    fn positive(&mut self, a: usize, b: usize) -> i64 {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let xi = self.sum(a, b).expect("a + b is a root");
        // Extraspecial pair: smallest positive α' with ξ - α' positive.
        let (ea, eb) = (0..self.rs.num_positive())
            .find_map(|c| {
                self.diff(xi, c)
                    .filter(|&d| self.rs.is_positive_index(d))
                    .map(|d| (c, d))
            })
            .expect("non-simple root has an extraspecial pair");
        let pe = self.string_p(ea, eb) + 1;
        let value = if (a, b) == (ea, eb) {
            pe
        } else if (a, b) == (eb, ea) {
            -pe
        } else {
            let (nea, neb) = (self.rs.negative_index(ea), self.rs.negative_index(eb));
            let mut acc = Q::zero();
            if let Some(r) = self.diff(b, ea) {
                let t = q(self.get(b, nea) * self.get(a, neb)) / &self.lengths[r];
                acc += t;
            }
            if let Some(r) = self.diff(a, ea) {
                let t = q(self.get(nea, a) * self.get(b, neb)) / &self.lengths[r];
                acc += t;
            }
            let v = acc * &self.lengths[xi] / q(pe);
            assert!(v.is_integer(), "non-integral structure constant");
            i64::try_from(v.to_integer()).unwrap()
        };
        self.memo.insert((a, b), value);
        value
    }
}

impl ChevalleyAlgebra {
    pub fn new(t: SimpleType) -> Result<Self> {
        Ok(Self::from_root_system(RootSystem::new(t)?))
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        let n_roots = rs.roots.len();
        let rank = rs.rank();
        let dim = n_roots + rank;
        let lengths: Vec<Q> = rs.roots.iter().map(|r| rs.form_int(r, r)).collect();
        let mut solver = ConstantSolver {
            rs: &rs,
            memo: HashMap::new(),
            lengths,
        };
        let mut constants = HashMap::new();
        for a in 0..n_roots {
            for b in 0..n_roots {
                if solver.sum(a, b).is_some() {
                    constants.insert((a, b), solver.get(a, b));
                }
            }
        }
        drop(solver);

        let mut table = vec![Vec::new(); dim * dim];
        let coroots: Vec<Vec<i64>> = rs.roots.iter().map(|r| rs.coroot_coords(r)).collect();
        for a in 0..n_roots {
            for b in 0..n_roots {
                let entry = &mut table[a * dim + b];
                if let Some(&n) = constants.get(&(a, b)) {
                    let s: Vec<i64> = rs.roots[a]
                        .iter()
                        .zip(&rs.roots[b])
                        .map(|(x, y)| x + y)
                        .collect();
                    entry.push((rs.index_of(&s).unwrap(), n));
                } else if b == rs.negative_index(a) {
                    for (i, &c) in coroots[a].iter().enumerate() {
                        if c != 0 {
                            entry.push((n_roots + i, c));
                        }
                    }
                }
            }
            for j in 0..rank {
                let w = rs.pairing_with_coroot(&rs.roots[a], j);
                if w != 0 {
                    table[(n_roots + j) * dim + a].push((a, w));
                    table[a * dim + n_roots + j].push((a, -w));
                }
            }
        }
        ChevalleyAlgebra {
            rs,
            dim,
            n_roots,
            table,
            constants,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.rs.simple_type
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.n_roots
    }

    pub fn is_cartan_index(&self, i: usize) -> bool {
        i >= self.n_roots
    }

    /// `N(γ, δ)` for root indices, zero when `γ + δ` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.constants.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim + j]
    }

    /// Jacobi identity on three basis elements, in integer arithmetic.
    pub fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for &(k, s) in self.basis_bracket(x, y) {
                for &(l, t) in self.basis_bracket(k, z) {
                    *acc.entry(l).or_insert(0) += s * t;
                }
            }
        }
        acc.values().all(|&v| v == 0)
    }

    pub fn root_vector(&self, root: &[i64]) -> Result<AlgebraElement> {
        let i = self
            .rs
            .index_of(root)
            .ok_or_else(|| Error::NotARoot(root.to_vec()))?;
        Ok(AlgebraElement::basis(self.simple_type(), i))
    }

    /// The simple coroot `h_i`.
    pub fn coroot(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.simple_type(), self.n_roots + i)
    }

    pub fn defining_element(&self, h: &DefiningElement) -> AlgebraElement {
        let coords = h.coroot_coords(&self.rs);
        AlgebraElement::from_terms(
            self.simple_type(),
            coords
                .into_iter()
                .enumerate()
                .map(|(i, c)| (self.n_roots + i, c)),
        )
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.simple_type() != self.simple_type() {
            return Err(Error::AlgebraMismatch(
                x.simple_type().to_string(),
                self.simple_type().to_string(),
            ));
        }
        Ok(())
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    pub(crate) fn bracket_unchecked(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> AlgebraElement {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, ca) in a.terms() {
            for (j, cb) in b.terms() {
                let entry = self.basis_bracket(i, j);
                if entry.is_empty() {
                    continue;
                }
                let prod = ca * cb;
                for &(k, n) in entry {
                    let slot = acc.entry(k).or_insert_with(Q::zero);
                    *slot += &prod * Q::from_integer(BigInt::from(n));
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        AlgebraElement {
            ty: self.simple_type(),
            coeffs: acc,
        }
    }

    /// Bracket with a single basis vector.
    pub(crate) fn bracket_basis(&self, a: &AlgebraElement, j: usize) -> AlgebraElement {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, ca) in a.terms() {
            for &(k, n) in self.basis_bracket(i, j) {
                let slot = acc.entry(k).or_insert_with(Q::zero);
                *slot += ca * Q::from_integer(BigInt::from(n));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        AlgebraElement {
            ty: self.simple_type(),
            coeffs: acc,
        }
    }

    /// Matrix of `ad x`; column `j` holds the coordinates of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        self.check(x)?;
        let mut m = zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(x, j).terms() {
                m[k][j] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn grading(&self, h: &DefiningElement) -> Result<Grading> {
        let mut degrees = vec![0i64; self.dim];
        let mut pieces: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, root) in self.rs.roots.iter().enumerate() {
            let v = h.eigenvalue(root);
            if !v.is_integer() {
                return Err(Error::NonIntegralGrading(root.clone()));
            }
            let d = i64::try_from(v.to_integer()).expect("small degree");
            degrees[i] = d;
            pieces.entry(d).or_default().push(i);
        }
        let zero = pieces.entry(0).or_default();
        zero.extend(self.n_roots..self.dim);
        zero.sort_unstable();
        let mut position = vec![0; self.dim];
        for idx in pieces.values() {
            for (p, &b) in idx.iter().enumerate() {
                position[b] = p;
            }
        }
        Ok(Grading {
            h: h.clone(),
            degrees,
            pieces,
            position,
        })
    }

    /// Basis indices of `g(i)` for the grading defined by `h`.
    pub fn graded_piece(&self, h: &DefiningElement, i: i64) -> Result<Vec<usize>> {
        Ok(self.grading(h)?.piece(i).to_vec())
    }

    /// Whether `(ad x)^k = 0` for some `k ≤ dim`.
    pub fn is_ad_nilpotent(&self, x: &AlgebraElement) -> bool {
        let mut vecs: Vec<AlgebraElement> =
            (0..self.dim).map(|j| self.bracket_basis(x, j)).collect();
        for _ in 0..self.dim {
            vecs.retain(|v| !v.is_zero());
            if vecs.is_empty() {
                return true;
            }
            vecs = vecs.iter().map(|v| self.bracket_unchecked(x, v)).collect();
        }
        false
    }
}
