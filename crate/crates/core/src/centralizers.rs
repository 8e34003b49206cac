//! Centralizers of nilpotent elements in the Chevalley model: graded pieces,
//! reachability, generation of the nilradical, orbit fingerprints and the
//! search for a commuting `e⟨2⟩`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chevalley::{AlgebraElement, ChevalleyAlgebra, DefiningElement, Grading};
use crate::error::{Error, Result};
use crate::linalg::{self, modp, q, EchelonBasis, Matrix, Q};
use crate::orbits::{
    self, diagram_height, rng_for, solve_characteristic, OrbitCatalog, SearchConfig,
    WeightedDiagram,
};
use crate::report::Verdict;
use crate::rootsys::{RootSystem, SimpleType};

/// A certified element of the orbit with diagram `d`. Small coefficients
/// are tried first (all ones, then draws from `[1, 3]`) since they keep the
/// centralizer bases small; the catalog witness is the fallback.
pub fn representative(
    alg: &ChevalleyAlgebra,
    d: &WeightedDiagram,
    cfg: &SearchConfig,
) -> Result<AlgebraElement> {
    if !d.is_zero() && d.simple_type == alg.simple_type() {
        let gr = alg.grading(&d.defining_element())?;
        let h = alg.defining_element(&d.defining_element());
        let idx = gr.piece(2);
        let mut rng = rng_for(cfg.seed, &orbits::marks_tag(0x5A11, d));
        for attempt in 0..cfg.trials.max(1) + 1 {
            let coeffs: Vec<i64> = if attempt == 0 {
                vec![1; idx.len()]
            } else {
                orbits::random_coeffs(&mut rng, idx.len(), 3)
            };
            let terms: Vec<(usize, i64)> = idx.iter().copied().zip(coeffs).collect();
            if solve_characteristic(alg, &gr, &terms, &h, 2).is_some() {
                return Ok(AlgebraElement::from_terms(
                    alg.simple_type(),
                    terms.iter().map(|&(b, c)| (b, q(c))),
                ));
            }
        }
    }
    orbits::is_characteristic(alg, d, cfg)?
        .witness
        .map(|w| w.e)
        .ok_or_else(|| Error::InvalidDiagram(d.to_string()))
}

fn check_nonzero_nilpotent(alg: &ChevalleyAlgebra, e: &AlgebraElement) -> Result<()> {
    if e.simple_type() != alg.simple_type() {
        return Err(Error::AlgebraMismatch(
            e.simple_type().to_string(),
            alg.simple_type().to_string(),
        ));
    }
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !alg.is_ad_nilpotent(e) {
        return Err(Error::NotNilpotent);
    }
    Ok(())
}

fn to_matrix(alg: &ChevalleyAlgebra, x: &AlgebraElement) -> Matrix {
    alg.ad_matrix(x).expect("same algebra")
}

fn all_indices(alg: &ChevalleyAlgebra) -> Vec<usize> {
    (0..alg.dim()).collect()
}

/// Completes `e` to an sl2-triple `(e, h′, f′)` without a grading: first
/// `h′ ∈ [e, 𝔤]` with `[h′, e] = 2e`, then `f′` with `[e, f′] = h′` and
/// `[h′, f′] = −2f′`.
pub fn complete_sl2(
    alg: &ChevalleyAlgebra,
    e: &AlgebraElement,
) -> Result<(AlgebraElement, AlgebraElement)> {
    check_nonzero_nilpotent(alg, e)?;
    let t = alg.simple_type();
    let n = alg.dim();
    let ad_e = to_matrix(alg, e);
    // [[e, X], e] = 2e  ⇔  (ad e)² X = −2e.
    let ad2 = linalg::mat_mul(&ad_e, &ad_e);
    let rhs: Vec<Q> = e
        .coords_on(&all_indices(alg))
        .into_iter()
        .map(|c| c * q(-2))
        .collect();
    let x = linalg::solve(&ad2, n, &rhs).ok_or(Error::Inconsistent)?;
    let h = alg.bracket_unchecked(e, &AlgebraElement::from_coords_on(t, &all_indices(alg), &x));
    let ad_h = to_matrix(alg, &h);
    let mut m = ad_e.clone();
    for (i, row) in ad_h.iter().enumerate() {
        let mut r = row.clone();
        r[i] += q(2);
        m.push(r);
    }
    let mut rhs = h.coords_on(&all_indices(alg));
    rhs.extend(std::iter::repeat_n(Q::zero(), n));
    let y = linalg::solve(&m, n, &rhs).ok_or(Error::Inconsistent)?;
    Ok((h, AlgebraElement::from_coords_on(t, &all_indices(alg), &y)))
}

/// Ranks of `(ad x)^k` for `k = 0, 1, …` until zero, when `x` is
/// homogeneous of nonzero degree for `gr`.
fn graded_power_ranks(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    x: &AlgebraElement,
    deg: i64,
) -> Vec<usize> {
    let t = alg.simple_type();
    let mut ranks = vec![alg.dim()];
    let mut current: Vec<(i64, Vec<AlgebraElement>)> = gr
        .pieces
        .iter()
        .map(|(&i, idx)| {
            (
                i,
                idx.iter().map(|&b| AlgebraElement::basis(t, b)).collect(),
            )
        })
        .collect();
    loop {
        let mut next = Vec::new();
        let mut total = 0;
        for (i, vs) in &current {
            let target = gr.piece(i + deg);
            if target.is_empty() {
                continue;
            }
            let mut eb = EchelonBasis::new(target.len());
            for v in vs {
                let w = alg.bracket_unchecked(x, v);
                if !w.is_zero() {
                    eb.insert(w.coords_on(target));
                }
                if eb.is_full() {
                    break;
                }
            }
            if !eb.is_empty() {
                total += eb.len();
                let img = eb
                    .rows()
                    .map(|r| AlgebraElement::from_coords_on(t, target, r))
                    .collect();
                next.push((i + deg, img));
            }
        }
        if total == 0 {
            break;
        }
        ranks.push(total);
        current = next;
    }
    ranks
}

/// Ranks of `(ad x)^k` without a grading; `None` if `x` is not nilpotent.
fn power_ranks(alg: &ChevalleyAlgebra, x: &AlgebraElement) -> Option<Vec<usize>> {
    let t = alg.simple_type();
    let idx = all_indices(alg);
    let mut ranks = vec![alg.dim()];
    let mut current: Vec<AlgebraElement> =
        idx.iter().map(|&b| AlgebraElement::basis(t, b)).collect();
    loop {
        let mut eb = EchelonBasis::new(alg.dim());
        for v in &current {
            let w = alg.bracket_unchecked(x, v);
            if !w.is_zero() {
                eb.insert(w.coords_on(&idx));
            }
        }
        if eb.len() == *ranks.last().expect("nonempty") {
            return None;
        }
        if eb.is_empty() {
            return Some(ranks);
        }
        ranks.push(eb.len());
        current = eb
            .rows()
            .map(|r| AlgebraElement::from_coords_on(t, &idx, r))
            .collect();
    }
}

fn modp_i128(x: i128) -> u64 {
    x.rem_euclid(modp::P as i128) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitFingerprint {
    pub centralizer_dim: usize,
    pub height: usize,
    /// Eigenvalue ↦ multiplicity of `ad h′`.
    pub ad_spectrum: BTreeMap<i64, usize>,
}

impl OrbitFingerprint {
    /// A Jordan block of size k of `ad x` is an irreducible sl2-module of
    /// dimension k, contributing eigenvalues k−1, k−3, …, 1−k.
    fn from_ranks(ranks: &[usize]) -> Self {
        let mut padded = ranks.to_vec();
        padded.push(0);
        let at_least: Vec<usize> = padded.windows(2).map(|w| w[0] - w[1]).collect();
        let mut spectrum = BTreeMap::new();
        for k in 1..=at_least.len() {
            let blocks = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            if blocks == 0 {
                continue;
            }
            for j in 0..k {
                *spectrum.entry(k as i64 - 1 - 2 * j as i64).or_insert(0) += blocks;
            }
        }
        OrbitFingerprint {
            centralizer_dim: ranks[0] - ranks.get(1).copied().unwrap_or(0),
            height: ranks.len() - 1,
            ad_spectrum: spectrum,
        }
    }

    /// The fingerprint every element of the orbit with diagram `d` has.
    pub fn expected(rs: &RootSystem, d: &WeightedDiagram) -> Self {
        let mut spectrum = BTreeMap::new();
        spectrum.insert(0, rs.rank());
        for root in &rs.roots {
            let v: i64 = root.iter().zip(&d.marks).map(|(&c, &l)| c * l as i64).sum();
            *spectrum.entry(v).or_insert(0) += 1;
        }
        let dims = orbits::graded_dims(rs, d);
        let get = |i: i64| dims.get(&i).copied().unwrap_or(0);
        OrbitFingerprint {
            centralizer_dim: get(0) + get(1),
            height: diagram_height(rs, d) as usize,
            ad_spectrum: spectrum,
        }
    }
}

pub fn fingerprint(alg: &ChevalleyAlgebra, x: &AlgebraElement) -> Result<OrbitFingerprint> {
    check_nonzero_nilpotent(alg, x)?;
    Ok(OrbitFingerprint::from_ranks(
        &power_ranks(alg, x).ok_or(Error::NotNilpotent)?,
    ))
}

/// Fingerprint of an element homogeneous of nonzero degree for `gr`.
pub fn fingerprint_graded(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    x: &AlgebraElement,
) -> Result<OrbitFingerprint> {
    let deg = gr.degree_of(x).ok_or(Error::GradingMismatch)?;
    if deg == 0 {
        return Err(Error::GradingMismatch);
    }
    Ok(OrbitFingerprint::from_ranks(&graded_power_ranks(
        alg, gr, x, deg,
    )))
}

/// Largest `m` with `(ad x)^m ≠ 0`.
pub fn element_height(alg: &ChevalleyAlgebra, x: &AlgebraElement) -> Result<usize> {
    if x.is_zero() {
        return Ok(0);
    }
    Ok(fingerprint(alg, x)?.height)
}

/// Fingerprints of all orbits of one type, refusing to build on a collision.
#[derive(Debug, Clone)]
pub struct FingerprintIndex {
    pub simple_type: SimpleType,
    map: HashMap<OrbitFingerprint, WeightedDiagram>,
}

impl FingerprintIndex {
    pub fn new(
        rs: &RootSystem,
        diagrams: impl IntoIterator<Item = WeightedDiagram>,
    ) -> Result<Self> {
        let mut map: HashMap<OrbitFingerprint, WeightedDiagram> = HashMap::new();
        for d in diagrams {
            let fp = OrbitFingerprint::expected(rs, &d);
            if let Some(prev) = map.get(&fp) {
                return Err(Error::FingerprintCollision {
                    ty: rs.simple_type.to_string(),
                    a: prev.to_string(),
                    b: d.to_string(),
                });
            }
            map.insert(fp, d);
        }
        Ok(FingerprintIndex {
            simple_type: rs.simple_type,
            map,
        })
    }

    pub fn from_catalog(alg: &ChevalleyAlgebra, catalog: &OrbitCatalog) -> Result<Self> {
        Self::new(alg.root_system(), catalog.diagrams().cloned())
    }

    pub fn identify(&self, fp: &OrbitFingerprint) -> Option<&WeightedDiagram> {
        self.map.get(fp)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

pub fn identify(
    alg: &ChevalleyAlgebra,
    fp: &OrbitFingerprint,
    cfg: &SearchConfig,
) -> Result<Option<WeightedDiagram>> {
    let catalog = OrbitCatalog::build(alg, cfg);
    Ok(FingerprintIndex::from_catalog(alg, &catalog)?
        .identify(fp)
        .cloned())
}

#[derive(Debug, Clone)]
pub struct GradedCentralizer {
    pub base_point: AlgebraElement,
    pub grading_element: DefiningElement,
    pub grading: Grading,
    pub pieces: BTreeMap<i64, Vec<AlgebraElement>>,
}

pub fn graded_centralizer(
    alg: &ChevalleyAlgebra,
    e: &AlgebraElement,
    h: &DefiningElement,
) -> Result<GradedCentralizer> {
    let gr = alg.grading(h)?;
    let hx = alg.defining_element(h);
    if alg.bracket(&hx, e)? != e.scaled(&q(2)) {
        return Err(Error::GradingMismatch);
    }
    let t = alg.simple_type();
    let mut pieces = BTreeMap::new();
    for &i in gr.pieces.keys() {
        let m = orbits::piece_map(alg, &gr, e, i, i + 2);
        let ker = if gr.piece_dim(i + 2) == 0 {
            (0..gr.piece_dim(i))
                .map(|k| {
                    let mut v = vec![Q::zero(); gr.piece_dim(i)];
                    v[k] = q(1);
                    v
                })
                .collect()
        } else {
            linalg::kernel_integer(&m, gr.piece_dim(i))
        };
        if !ker.is_empty() {
            let basis = ker
                .iter()
                .map(|v| {
                    let ints: Vec<Q> = linalg::primitive_integer_vector(v)
                        .into_iter()
                        .map(Q::from_integer)
                        .collect();
                    AlgebraElement::from_coords_on(t, gr.piece(i), &ints)
                })
                .collect();
            pieces.insert(i, basis);
        }
    }
    Ok(GradedCentralizer {
        base_point: e.clone(),
        grading_element: h.clone(),
        grading: gr,
        pieces,
    })
}

/// Graded centralizer of the certified representative of `d`.
pub fn centralizer_of_diagram(
    alg: &ChevalleyAlgebra,
    d: &WeightedDiagram,
    cfg: &SearchConfig,
) -> Result<GradedCentralizer> {
    let e = representative(alg, d, cfg)?;
    graded_centralizer(alg, &e, &d.defining_element())
}

impl GradedCentralizer {
    pub fn piece(&self, i: i64) -> &[AlgebraElement] {
        self.pieces.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.pieces.iter().map(|(&i, v)| (i, v.len())).collect()
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn nil_dim(&self) -> usize {
        self.pieces
            .iter()
            .filter(|(&i, _)| i >= 1)
            .map(|(_, v)| v.len())
            .sum()
    }

    pub fn top(&self) -> i64 {
        self.pieces.keys().next_back().copied().unwrap_or(0)
    }

    fn target(&self, i: i64) -> &[usize] {
        self.grading.piece(i)
    }

    /// Span of brackets `[a, b]` with `a ∈ 𝔤ᵉ(i)`, `b ∈ 𝔤ᵉ(j)`, `i + j = k`,
    /// inside `𝔤(k)`. Random combinations go first; the basis pairs follow
    /// only when the span is not yet `stop`.
    fn bracket_span(
        &self,
        alg: &ChevalleyAlgebra,
        k: i64,
        stop: impl Fn(&EchelonBasis) -> bool,
        seed: u64,
    ) -> EchelonBasis {
        let target = self.target(k);
        let mut eb = EchelonBasis::new(target.len());
        let splits: Vec<(i64, i64)> = (0..=k / 2)
            .map(|i| (i, k - i))
            .filter(|&(i, j)| !self.piece(i).is_empty() && !self.piece(j).is_empty())
            .collect();
        if splits.is_empty() || stop(&eb) {
            return eb;
        }
        let mut rng = rng_for(seed, &[0x5EED, k as u64]);
        let t = alg.simple_type();
        let combo = |rng: &mut rand_chacha::ChaCha8Rng, v: &[AlgebraElement]| {
            v.iter().fold(AlgebraElement::zero(t), |acc, b| {
                acc.add(&b.scaled(&q(rng.gen_range(1..=97))))
            })
        };
        for _ in 0..target.len() + 4 {
            let (i, j) = splits[rng.gen_range(0..splits.len())];
            let a = combo(&mut rng, self.piece(i));
            let b = combo(&mut rng, self.piece(j));
            let w = alg.bracket_unchecked(&a, &b);
            if !w.is_zero() {
                eb.insert(w.coords_on(target));
            }
            if stop(&eb) {
                return eb;
            }
        }
        for &(i, j) in &splits {
            for a in self.piece(i) {
                for b in self.piece(j) {
                    let w = alg.bracket_unchecked(a, b);
                    if !w.is_zero() {
                        eb.insert(w.coords_on(target));
                    }
                    if stop(&eb) {
                        return eb;
                    }
                }
            }
        }
        eb
    }

    /// `e ∈ [𝔤ᵉ, 𝔤ᵉ]`; only `[𝔤ᵉ(0), 𝔤ᵉ(2)] + [𝔤ᵉ(1), 𝔤ᵉ(1)]` can reach degree 2.
    pub fn is_reachable(&self, alg: &ChevalleyAlgebra) -> bool {
        let ev = self.base_point.coords_on(self.target(2));
        self.span_contains(alg, 2, &[ev], 0)
    }

    /// Iterated brackets of `𝔤ᵉ(1)` span `𝔤ᵉ(≥1)`.
    pub fn nilradical_generated_by_degree_one(&self, alg: &ChevalleyAlgebra) -> bool {
        let t = alg.simple_type();
        let one = self.piece(1);
        let mut layer: Vec<AlgebraElement> = one.to_vec();
        for k in 2..=self.top() {
            let need = self.piece(k).len();
            let target = self.target(k);
            let mut eb = EchelonBasis::new(target.len());
            'outer: for a in one {
                for b in &layer {
                    let w = alg.bracket_unchecked(a, b);
                    if !w.is_zero() {
                        eb.insert(w.coords_on(target));
                    }
                    if eb.len() == need {
                        break 'outer;
                    }
                }
            }
            if eb.len() < need {
                return false;
            }
            layer = eb
                .rows()
                .map(|r| AlgebraElement::from_coords_on(t, target, r))
                .collect();
        }
        true
    }

    /// All brackets of basis pairs landing in degree `k`, as distinct
    /// integer rows over the basis of `𝔤(k)`; `None` on overflow.
    fn bracket_rows(&self, alg: &ChevalleyAlgebra, k: i64) -> Option<Vec<Vec<i128>>> {
        let target = self.target(k);
        let ints = |x: &AlgebraElement| -> Option<Vec<(usize, i128)>> {
            x.terms()
                .map(|(b, c)| {
                    c.is_integer()
                        .then(|| c.to_integer().to_i128())
                        .flatten()
                        .map(|v| (b, v))
                })
                .collect()
        };
        let mut rows = std::collections::BTreeSet::new();
        for i in 0..=k / 2 {
            let left: Vec<_> = self.piece(i).iter().map(ints).collect::<Option<_>>()?;
            let right: Vec<_> = self.piece(k - i).iter().map(ints).collect::<Option<_>>()?;
            for a in &left {
                for b in &right {
                    let mut row = vec![0i128; target.len()];
                    for &(x, cx) in a {
                        for &(y, cy) in b {
                            let c = cx.checked_mul(cy)?;
                            for &(z, st) in alg.basis_bracket(x, y) {
                                let pos = self.grading.position(z);
                                row[pos] = row[pos].checked_add(c.checked_mul(st as i128)?)?;
                            }
                        }
                    }
                    if let Some(lead) = row.iter().copied().find(|&v| v != 0) {
                        let g =
                            row.iter().fold(0i128, |g, &v| num_integer::gcd(g, v)) * lead.signum();
                        rows.insert(row.into_iter().map(|v| v / g).collect::<Vec<_>>());
                    }
                }
            }
        }
        Some(rows.into_iter().collect())
    }

    /// Exact test of `v ∈ span(rows)` for each `v`, through the annihilator
    /// of the rows. The annihilator comes from [`linalg::kernel_integer`],
    /// whose vectors are checked exactly.
    fn all_in_span(rows: &[Vec<i128>], width: usize, vs: &[Vec<Q>]) -> bool {
        if rows.is_empty() {
            return vs.iter().all(|v| v.iter().all(Zero::is_zero));
        }
        let reduced: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| modp_i128(x)).collect())
            .collect();
        if modp::rank(reduced) == width {
            return true;
        }
        let m: Matrix = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        let ann = linalg::kernel_integer(&m, width);
        vs.iter().all(|v| {
            ann.iter().all(|y| {
                y.iter()
                    .zip(v)
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
                    .is_zero()
            })
        })
    }

    fn span_contains(&self, alg: &ChevalleyAlgebra, k: i64, vs: &[Vec<Q>], seed: u64) -> bool {
        let width = self.target(k).len();
        match self.bracket_rows(alg, k) {
            Some(rows) => Self::all_in_span(&rows, width, vs),
            None => {
                let span = self.bracket_span(alg, k, |_| false, seed);
                vs.iter().all(|v| span.contains(v))
            }
        }
    }

    /// `𝔤ᵉ(k) ⊆ Σ_{i+j=k} [𝔤ᵉ(i), 𝔤ᵉ(j)]` for every `k ≥ 1`.
    pub fn nilradical_in_derived(&self, alg: &ChevalleyAlgebra) -> bool {
        (1..=self.top()).all(|k| {
            let target = self.target(k);
            let vs: Vec<Vec<Q>> = self.piece(k).iter().map(|v| v.coords_on(target)).collect();
            vs.is_empty() || self.span_contains(alg, k, &vs, 1)
        })
    }

    /// `𝔤ᵉ(i) = [𝔤ᵉ(i−1), e₁] + [𝔤ᵉ(i−1), e₂]` for `1 ≤ i ≤ top`.
    pub fn check_spade(
        &self,
        alg: &ChevalleyAlgebra,
        e1: &AlgebraElement,
        e2: &AlgebraElement,
    ) -> Result<bool> {
        for x in [e1, e2] {
            let inside =
                self.grading.degree_of(x) == Some(1) && alg.bracket(&self.base_point, x)?.is_zero();
            if !inside {
                return Err(Error::NotInDegreeOne);
            }
        }
        for i in 1..=self.top() {
            let target = self.target(i);
            let mut eb = EchelonBasis::new(target.len());
            for a in self.piece(i - 1) {
                for x in [e1, e2] {
                    let w = alg.bracket_unchecked(a, x);
                    if !w.is_zero() {
                        eb.insert(w.coords_on(target));
                    }
                }
            }
            if eb.len() != self.piece(i).len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_reachable(alg: &ChevalleyAlgebra, e: &AlgebraElement) -> Result<bool> {
    check_nonzero_nilpotent(alg, e)?;
    let idx = all_indices(alg);
    let ker = linalg::kernel_integer(&to_matrix(alg, e), alg.dim());
    let t = alg.simple_type();
    let basis: Vec<AlgebraElement> = ker
        .iter()
        .map(|v| AlgebraElement::from_coords_on(t, &idx, v))
        .collect();
    let ev = e.coords_on(&idx);
    let mut eb = EchelonBasis::new(alg.dim());
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            eb.insert(alg.bracket_unchecked(a, b).coords_on(&idx));
            if eb.contains(&ev) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `dim ker (ad e)^k`, computed piece by piece.
pub fn kernel_dim_of_power(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    e: &AlgebraElement,
    k: usize,
) -> usize {
    let ranks = graded_power_ranks(alg, gr, e, 2);
    alg.dim() - ranks.get(k).copied().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum VeryFriendlyEvidence {
    /// `x ∈ 𝔤ᵉ(4)` with `[e, x] = 0` whose characteristic is `h₊/2`.
    Witness {
        x: String,
        draw: usize,
        identified: Option<Vec<u8>>,
        height: usize,
        centralizer_dim: usize,
    },
    /// `𝔤ᵉ(4)` is at most a line and misses the lower orbit.
    Obstruction {
        dim_ge4: usize,
        generator_height: Option<usize>,
        lower_height: i64,
    },
    Budget {
        draws: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryFriendlyVerdict {
    pub verdict: Verdict,
    pub evidence: VeryFriendlyEvidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryFriendlyBudget {
    pub random_draws: usize,
    pub sweep_max_dim: usize,
}

impl Default for VeryFriendlyBudget {
    fn default() -> Self {
        VeryFriendlyBudget {
            random_draws: 64,
            sweep_max_dim: 6,
        }
    }
}

fn integer_terms(x: &AlgebraElement) -> Option<Vec<(usize, i64)>> {
    x.terms()
        .map(|(b, c)| {
            if !c.is_integer() {
                return None;
            }
            c.to_integer().to_i64().map(|v| (b, v))
        })
        .collect()
}

/// Whether `x ∈ 𝔤(4)` has characteristic `h₊/2`, i.e. `h₊/2 ∈ [x, 𝔤(−4)]`.
fn has_half_characteristic(
    alg: &ChevalleyAlgebra,
    gr: &Grading,
    half_h: &AlgebraElement,
    x: &AlgebraElement,
) -> bool {
    match integer_terms(x) {
        Some(terms) => solve_characteristic(alg, gr, &terms, half_h, 4).is_some(),
        None => {
            let m = orbits::piece_map(alg, gr, x, -4, 0);
            let rhs = half_h.coords_on(gr.piece(0));
            linalg::solve(&m, gr.piece_dim(-4), &rhs).is_some()
        }
    }
}

/// Searches `𝔤ᵉ(4)` for an element of the orbit with diagram `half(upper)`.
pub fn very_friendly_check(
    alg: &ChevalleyAlgebra,
    upper: &WeightedDiagram,
    cfg: &SearchConfig,
    budget: &VeryFriendlyBudget,
    index: Option<&FingerprintIndex>,
) -> Result<VeryFriendlyVerdict> {
    let lower = orbits::half(upper)?;
    let rs = alg.root_system();
    let lower_height = diagram_height(rs, &lower);
    let gc = centralizer_of_diagram(alg, upper, cfg)?;
    let gr = &gc.grading;
    let half_h = alg.defining_element(&upper.defining_element().halved());
    let basis = gc.piece(4);
    let t = alg.simple_type();
    let witness = |x: AlgebraElement, draw: usize| -> Result<VeryFriendlyVerdict> {
        let fp = fingerprint_graded(alg, gr, &x)?;
        let identified = index
            .and_then(|ix| ix.identify(&fp))
            .map(|d| d.marks.clone());
        if let Some(m) = &identified {
            if *m != lower.marks {
                return Err(Error::Inconsistent);
            }
        }
        Ok(VeryFriendlyVerdict {
            verdict: Verdict::Pass,
            evidence: VeryFriendlyEvidence::Witness {
                x: x.to_string(),
                draw,
                identified,
                height: fp.height,
                centralizer_dim: fp.centralizer_dim,
            },
        })
    };
    if basis.len() <= 1 {
        let generator_height = match basis.first() {
            Some(x) if has_half_characteristic(alg, gr, &half_h, x) => {
                return witness(x.clone(), 0)
            }
            Some(x) => Some(fingerprint_graded(alg, gr, x)?.height),
            None => None,
        };
        return Ok(VeryFriendlyVerdict {
            verdict: Verdict::Fail,
            evidence: VeryFriendlyEvidence::Obstruction {
                dim_ge4: basis.len(),
                generator_height,
                lower_height,
            },
        });
    }
    let mut rng = rng_for(cfg.seed, &orbits::marks_tag(0xF41E, upper));
    for draw in 0..budget.random_draws {
        let x = basis.iter().fold(AlgebraElement::zero(t), |acc, b| {
            acc.add(&b.scaled(&q(rng.gen_range(1..=cfg.coeff_max) as i64)))
        });
        if has_half_characteristic(alg, gr, &half_h, &x) {
            return witness(x, draw + 1);
        }
    }
    let mut draws = budget.random_draws;
    if basis.len() <= budget.sweep_max_dim {
        let total = 3usize.pow(basis.len() as u32);
        for code in 1..total {
            let mut c = code;
            let x = basis.iter().fold(AlgebraElement::zero(t), |acc, b| {
                let coeff = (c % 3) as i64 - 1;
                c /= 3;
                acc.add(&b.scaled(&q(coeff)))
            });
            draws += 1;
            if !x.is_zero() && has_half_characteristic(alg, gr, &half_h, &x) {
                return witness(x, draws);
            }
        }
    }
    Ok(VeryFriendlyVerdict {
        verdict: Verdict::Inconclusive,
        evidence: VeryFriendlyEvidence::Budget { draws },
    })
}
