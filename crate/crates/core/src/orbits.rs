//! Weighted Dynkin diagrams computed from root data.
//!
//! A diagram with marks `l_α ∈ {0,1,2}` defines `h₊ ∈ 𝔱` with `α(h₊) = l_α`
//! and hence a grading `𝔤 = ⊕ 𝔤(i)`. The diagram is a characteristic of a
//! nilpotent orbit iff some `e ∈ 𝔤(2)` and `f ∈ 𝔤(-2)` satisfy `[e, f] = h₊`;
//! such a pair is the certificate returned by [`is_characteristic`].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{AlgebraElement, ChevalleyAlgebra, DefiningElement, Grading};
use crate::error::{Error, Result};
use crate::linalg::{self, modp, q, Matrix, Q};
use crate::rootsys::{RootSystem, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDiagram {
    pub simple_type: SimpleType,
    pub marks: Vec<u8>,
}

impl WeightedDiagram {
    pub fn new(simple_type: SimpleType, marks: Vec<u8>) -> Result<Self> {
        if marks.len() != simple_type.rank {
            return Err(Error::DiagramLength {
                ty: simple_type.to_string(),
                expected: simple_type.rank,
                got: marks.len(),
            });
        }
        if let Some(&m) = marks.iter().find(|&&m| m > 2) {
            return Err(Error::BadMark(m as i64));
        }
        Ok(WeightedDiagram { simple_type, marks })
    }

    /// Parses comma-separated marks, e.g. `"2,0,2,0"`.
    pub fn parse(simple_type: SimpleType, s: &str) -> Result<Self> {
        let marks = s
            .split(',')
            .map(|p| {
                let v: i64 = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
                if !(0..=2).contains(&v) {
                    return Err(Error::BadMark(v));
                }
                Ok(v as u8)
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(simple_type, marks)
    }

    pub fn zero(simple_type: SimpleType) -> Self {
        WeightedDiagram {
            simple_type,
            marks: vec![0; simple_type.rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.marks.iter().all(|&m| m == 0)
    }

    pub fn is_even(&self) -> bool {
        self.marks.iter().all(|&m| m != 1)
    }

    pub fn defining_element(&self) -> DefiningElement {
        DefiningElement::from_marks(&self.marks)
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// `ht(e) = Σ l_α n_α`.
pub fn diagram_height(rs: &RootSystem, d: &WeightedDiagram) -> i64 {
    d.marks
        .iter()
        .zip(rs.theta_coefficients())
        .map(|(&l, &n)| l as i64 * n)
        .sum()
}

/// Divides every mark by two.
pub fn half(d: &WeightedDiagram) -> Result<WeightedDiagram> {
    if !d.is_even() {
        return Err(Error::NotEven(d.to_string()));
    }
    Ok(WeightedDiagram {
        simple_type: d.simple_type,
        marks: d.marks.iter().map(|m| m / 2).collect(),
    })
}

/// `dim 𝔤(i)` for every `i` with `𝔤(i) ≠ 0`.
pub fn graded_dims(rs: &RootSystem, d: &WeightedDiagram) -> BTreeMap<i64, usize> {
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank());
    for root in &rs.roots {
        let v: i64 = root.iter().zip(&d.marks).map(|(&c, &l)| c * l as i64).sum();
        *dims.entry(v).or_insert(0) += 1;
    }
    dims
}

fn dim_at(dims: &BTreeMap<i64, usize>, i: i64) -> usize {
    dims.get(&i).copied().unwrap_or(0)
}

/// `dim 𝔤ᵉ(i) = dim 𝔤(i) − dim 𝔤(i+2)` for `0 ≤ i ≤ ht(e)`.
pub fn graded_centralizer_dims(rs: &RootSystem, d: &WeightedDiagram) -> BTreeMap<i64, usize> {
    let dims = graded_dims(rs, d);
    let top = diagram_height(rs, d);
    (0..=top)
        .map(|i| (i, dim_at(&dims, i).saturating_sub(dim_at(&dims, i + 2))))
        .collect()
}

/// `(h₊, h₊)/2` with `(θ, θ) = 2`.
pub fn dynkin_index(rs: &RootSystem, d: &WeightedDiagram) -> Q {
    let coords = d.defining_element().coroot_coords(rs);
    // h_j corresponds to 2α_j/(α_j, α_j) under the form.
    let weight: Vec<Q> = coords
        .iter()
        .enumerate()
        .map(|(j, c)| c * q(2) / &rs.form[j][j])
        .collect();
    rs.form_value(&weight, &weight) / q(2)
}

/// Necessary condition: `ad e : 𝔤(i−2) → 𝔤(i)` is onto for `i ≥ 1`.
fn passes_dimension_filter(dims: &BTreeMap<i64, usize>) -> bool {
    dims.iter()
        .filter(|(&i, _)| i >= 1)
        .all(|(&i, &n)| dim_at(dims, i - 2) >= n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: usize,
    /// Random coefficients are drawn from `[1, coeff_max]`.
    pub coeff_max: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trials: 8,
            coeff_max: 1 << 16,
        }
    }
}

/// splitmix64 over a seed and a tag.
pub fn derive_seed(seed: u64, tag: &[u64]) -> u64 {
    let mut x = seed ^ 0x9E37_79B9_7F4A_7C15;
    for &t in tag {
        x = x
            .wrapping_add(t.wrapping_mul(0xBF58_476D_1CE4_E5B9))
            .wrapping_add(0x94D0_49BB_1331_11EB);
        x ^= x >> 30;
        x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 27;
        x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
        x ^= x >> 31;
    }
    x
}

pub(crate) fn rng_for(seed: u64, tag: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag))
}

pub(crate) fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, max: u64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(1..=max) as i64).collect()
}

pub(crate) fn marks_tag(tag: u64, d: &WeightedDiagram) -> Vec<u64> {
    let mut v = vec![tag];
    v.extend(d.marks.iter().map(|&m| m as u64));
    v
}

/// Certificate that a diagram is a characteristic: `[h₊, e] = 2e`,
/// `[e, f] = h₊`, and `ad e : 𝔤(0) → 𝔤(2)` has full rank.
#[derive(Debug, Clone)]
pub struct CharacteristicWitness {
    pub e: AlgebraElement,
    pub f: AlgebraElement,
    pub image_rank: usize,
    pub trial: usize,
}

#[derive(Debug, Clone)]
pub struct CharacteristicVerdict {
    pub valid: bool,
    pub witness: Option<CharacteristicWitness>,
    pub trials_used: usize,
}

/// Matrix of `ad x` from the piece `src` to the piece `dst`, in local coordinates.
pub(crate) fn piece_map(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    x: &AlgebraElement,
    src: i64,
    dst: i64,
) -> Matrix {
    let cols = gr.piece(src);
    let rows = gr.piece(dst);
    let mut m = linalg::zeros(rows.len(), cols.len());
    for (c, &b) in cols.iter().enumerate() {
        for (k, v) in alg.bracket_basis(x, b).terms() {
            debug_assert_eq!(gr.degrees[k], dst);
            m[gr.position(k)][c] = v.clone();
        }
    }
    m
}

/// `ad x : 𝔤(src) → 𝔤(dst)` reduced mod p, for `x` with integer coefficients.
pub(crate) fn piece_map_modp(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    x: &[(usize, i64)],
    src: i64,
    dst: i64,
) -> Vec<Vec<u64>> {
    let cols = gr.piece(src);
    let mut m = vec![vec![0u64; cols.len()]; gr.piece_dim(dst)];
    for (c, &b) in cols.iter().enumerate() {
        for &(i, ci) in x {
            for &(k, n) in alg.basis_bracket(i, b) {
                let r = gr.position(k);
                m[r][c] = modp::add(m[r][c], modp::from_i64(ci * n));
            }
        }
    }
    m
}

/// Tests whether `h` (with `[h, e] = 2e` for `e` in degree `deg`) lies in
/// `[e, 𝔤(−deg)]`; returns the preimage when it does. The mod-p test runs
/// first and only a consistent system is solved exactly.
pub(crate) fn solve_characteristic(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    e: &[(usize, i64)],
    h: &AlgebraElement,
    deg: i64,
) -> Option<AlgebraElement> {
    let t = alg.simple_type();
    let rhs = h.coords_on(gr.piece(0));
    let ex = AlgebraElement::from_terms(t, e.iter().map(|&(b, c)| (b, q(c))));
    if let Some(rp) = rhs.iter().map(modp::from_q).collect::<Option<Vec<u64>>>() {
        let mp = piece_map_modp(alg, gr, e, -deg, 0);
        if !modp::solvable(&mp, &rp) {
            return None;
        }
        if let Some(f) = solve_on_pivots(alg, gr, e, &mp, &rhs, deg) {
            if alg.bracket_unchecked(&ex, &f) == *h {
                return Some(f);
            }
        }
    }
    let m = piece_map(alg, gr, &ex, -deg, 0);
    let x = linalg::solve(&m, gr.piece_dim(-deg), &rhs)?;
    let f = AlgebraElement::from_coords_on(t, gr.piece(-deg), &x);
    (alg.bracket_unchecked(&ex, &f) == *h).then_some(f)
}

/// Solves the square subsystem picked out by the mod-p pivots.
fn solve_on_pivots(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    e: &[(usize, i64)],
    mp: &[Vec<u64>],
    rhs: &[Q],
    deg: i64,
) -> Option<AlgebraElement> {
    let (rows, cols) = modp::pivots(mp);
    let src = gr.piece(-deg);
    let row_of: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut a = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (c, &col) in cols.iter().enumerate() {
        for &(i, ci) in e {
            for &(k, n) in alg.basis_bracket(i, src[col]) {
                if let Some(&r) = row_of.get(&gr.position(k)) {
                    a[r][c] += BigInt::from(ci * n);
                }
            }
        }
    }
    let denom = rows
        .iter()
        .fold(BigInt::one(), |l, &r| l.lcm(rhs[r].denom()));
    let b: Vec<BigInt> = rows
        .iter()
        .map(|&r| (&rhs[r] * Q::from_integer(denom.clone())).to_integer())
        .collect();
    let x = linalg::solve_integer_square(&a, &b)?;
    let d = Q::from_integer(denom);
    Some(AlgebraElement::from_terms(
        alg.simple_type(),
        cols.iter().zip(x).map(|(&c, v)| (src[c], v / &d)),
    ))
}

pub fn is_characteristic(
    alg: &ChevalleyAlgebra,
    d: &WeightedDiagram,
    cfg: &SearchConfig,
) -> Result<CharacteristicVerdict> {
    check_type(alg, d)?;
    let t = alg.simple_type();
    if d.is_zero() {
        return Ok(CharacteristicVerdict {
            valid: true,
            witness: Some(CharacteristicWitness {
                e: AlgebraElement::zero(t),
                f: AlgebraElement::zero(t),
                image_rank: 0,
                trial: 0,
            }),
            trials_used: 0,
        });
    }
    let dims = graded_dims(alg.root_system(), d);
    if !passes_dimension_filter(&dims) || dim_at(&dims, 2) == 0 {
        return Ok(CharacteristicVerdict {
            valid: false,
            witness: None,
            trials_used: 0,
        });
    }
    let h = d.defining_element();
    let gr = alg.grading(&h)?;
    let hx = alg.defining_element(&h);
    for trial in 0..cfg.trials {
        let mut rng = rng_for(
            cfg.seed,
            &[marks_tag(0xC4A7, d), vec![trial as u64]].concat(),
        );
        let coeffs = random_coeffs(&mut rng, gr.piece_dim(2), cfg.coeff_max);
        let terms: Vec<(usize, i64)> = gr.piece(2).iter().copied().zip(coeffs).collect();
        let Some(f) = solve_characteristic(alg, &gr, &terms, &hx, 2) else {
            continue;
        };
        // The rank mod p bounds the rational rank from below.
        let image_rank = modp::rank(piece_map_modp(alg, &gr, &terms, 0, 2));
        if image_rank < gr.piece_dim(2) {
            continue;
        }
        let e = AlgebraElement::from_terms(t, terms.iter().map(|&(b, c)| (b, q(c))));
        return Ok(CharacteristicVerdict {
            valid: true,
            witness: Some(CharacteristicWitness {
                e,
                f,
                image_rank,
                trial,
            }),
            trials_used: trial + 1,
        });
    }
    Ok(CharacteristicVerdict {
        valid: false,
        witness: None,
        trials_used: cfg.trials,
    })
}

fn check_type(alg: &ChevalleyAlgebra, d: &WeightedDiagram) -> Result<()> {
    if d.simple_type != alg.simple_type() {
        return Err(Error::AlgebraMismatch(
            d.simple_type.to_string(),
            alg.simple_type().to_string(),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub diagram: WeightedDiagram,
    pub dim_orbit: usize,
    pub height: i64,
    pub even: bool,
    pub divisible: bool,
    pub half: Option<WeightedDiagram>,
    #[serde(with = "crate::report::qserde")]
    pub dynkin_index: Q,
    pub graded_dims: BTreeMap<i64, usize>,
}

impl OrbitRecord {
    /// Record of a single diagram; errors if it is not a characteristic.
    pub fn new(alg: &ChevalleyAlgebra, d: &WeightedDiagram, cfg: &SearchConfig) -> Result<Self> {
        if !is_characteristic(alg, d, cfg)?.valid {
            return Err(Error::InvalidDiagram(d.to_string()));
        }
        let divisible = !d.is_zero() && is_divisible(alg, d, cfg)?;
        Ok(Self::build(alg.root_system(), d, divisible))
    }

    fn build(rs: &RootSystem, d: &WeightedDiagram, divisible: bool) -> Self {
        let dims = graded_dims(rs, d);
        let dim_g = rs.simple_type.dim();
        let centralizer = dim_at(&dims, 0) + dim_at(&dims, 1);
        OrbitRecord {
            diagram: d.clone(),
            dim_orbit: dim_g - centralizer,
            height: diagram_height(rs, d),
            even: d.is_even(),
            divisible,
            half: divisible.then(|| half(d).expect("divisible diagrams are even")),
            dynkin_index: dynkin_index(rs, d),
            graded_dims: dims,
        }
    }

    pub fn centralizer_dim(&self) -> usize {
        dim_at(&self.graded_dims, 0) + dim_at(&self.graded_dims, 1)
    }

    /// `dim 𝔤ᵉ_nil = dim 𝔤(1) + dim 𝔤(2)`.
    pub fn nilradical_dim(&self) -> usize {
        dim_at(&self.graded_dims, 1) + dim_at(&self.graded_dims, 2)
    }

    pub fn dim_piece(&self, i: i64) -> usize {
        dim_at(&self.graded_dims, i)
    }

    pub fn centralizer_dims(&self) -> BTreeMap<i64, usize> {
        (0..=self.height)
            .map(|i| (i, self.dim_piece(i).saturating_sub(self.dim_piece(i + 2))))
            .filter(|&(_, d)| d > 0)
            .collect()
    }
}

/// All weighted Dynkin diagrams of a type together with their certificates.
#[derive(Debug, Clone)]
pub struct OrbitCatalog {
    pub simple_type: SimpleType,
    pub records: Vec<OrbitRecord>,
    pub witnesses: HashMap<Vec<u8>, CharacteristicWitness>,
    pub config: SearchConfig,
}

impl OrbitCatalog {
    pub fn build(alg: &ChevalleyAlgebra, cfg: &SearchConfig) -> Self {
        let t = alg.simple_type();
        let rs = alg.root_system();
        let n = t.rank;
        let candidates: Vec<WeightedDiagram> = (0..3usize.pow(n as u32))
            .map(|mut code| {
                let marks = (0..n)
                    .map(|_| {
                        let m = (code % 3) as u8;
                        code /= 3;
                        m
                    })
                    .collect();
                WeightedDiagram {
                    simple_type: t,
                    marks,
                }
            })
            .filter(|d| passes_dimension_filter(&graded_dims(rs, d)))
            .collect();
        let mut found: Vec<(WeightedDiagram, CharacteristicWitness)> = candidates
            .par_iter()
            .filter_map(|d| {
                let v = is_characteristic(alg, d, cfg).expect("candidate has the right type");
                v.witness.map(|w| (d.clone(), w))
            })
            .collect();
        found.sort_by(|a, b| a.0.marks.cmp(&b.0.marks));
        let valid: HashSet<Vec<u8>> = found.iter().map(|(d, _)| d.marks.clone()).collect();
        let records = found
            .iter()
            .map(|(d, _)| {
                let divisible =
                    !d.is_zero() && d.is_even() && valid.contains(&half(d).expect("even").marks);
                OrbitRecord::build(rs, d, divisible)
            })
            .collect();
        OrbitCatalog {
            simple_type: t,
            records,
            witnesses: found.into_iter().map(|(d, w)| (d.marks, w)).collect(),
            config: *cfg,
        }
    }

    pub fn get(&self, d: &WeightedDiagram) -> Option<&OrbitRecord> {
        self.records.iter().find(|r| r.diagram == *d)
    }

    pub fn contains(&self, d: &WeightedDiagram) -> bool {
        self.witnesses.contains_key(&d.marks)
    }

    pub fn witness(&self, d: &WeightedDiagram) -> Option<&CharacteristicWitness> {
        self.witnesses.get(&d.marks)
    }

    pub fn diagrams(&self) -> impl Iterator<Item = &WeightedDiagram> {
        self.records.iter().map(|r| &r.diagram)
    }

    pub fn friendly_pairs(&self) -> Vec<FriendlyPair> {
        self.records
            .iter()
            .filter(|r| r.divisible)
            .map(|upper| {
                let lower_d = upper.half.clone().expect("divisible");
                let lower = self.get(&lower_d).expect("half is in the catalog").clone();
                FriendlyPair {
                    upper: upper.clone(),
                    lower,
                    very_friendly: None,
                    a2_pair: None,
                    lower_reachable: None,
                }
            })
            .collect()
    }
}

pub fn enumerate_orbits(alg: &ChevalleyAlgebra, cfg: &SearchConfig) -> Vec<OrbitRecord> {
    OrbitCatalog::build(alg, cfg).records
}

pub fn friendly_pairs(alg: &ChevalleyAlgebra, cfg: &SearchConfig) -> Vec<FriendlyPair> {
    OrbitCatalog::build(alg, cfg).friendly_pairs()
}

/// `d` is divisible iff it is a nonzero even characteristic whose half is
/// again a characteristic.
pub fn is_divisible(
    alg: &ChevalleyAlgebra,
    d: &WeightedDiagram,
    cfg: &SearchConfig,
) -> Result<bool> {
    if !is_characteristic(alg, d, cfg)?.valid {
        return Err(Error::InvalidDiagram(d.to_string()));
    }
    if d.is_zero() || !d.is_even() {
        return Ok(false);
    }
    Ok(is_characteristic(alg, &half(d)?, cfg)?.valid)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlyPair {
    pub upper: OrbitRecord,
    pub lower: OrbitRecord,
    pub very_friendly: Option<bool>,
    pub a2_pair: Option<bool>,
    pub lower_reachable: Option<bool>,
}
