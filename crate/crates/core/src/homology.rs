//! Exact simplicial homology and the ring invariants built on it:
//! Reisner's Cohen-Macaulay criterion, ring depth via the skeleton
//! formula, the Buchsbaum test, and multiplicity.
//!
//! Ranks of boundary matrices are computed exactly. Over the rationals a
//! fixed-prime modular rank is used as a vanishing certificate (a zero
//! reduced Betti number mod p forces the rational one to vanish, since
//! modular rank never exceeds rational rank); whenever the modular count
//! is nonzero the rank is recomputed by fraction-free elimination with
//! 128-bit and then arbitrary-precision integers, so the reported numbers
//! are the exact rational Betti numbers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::ideal::{polarize, stanley_reisner_complex, IdealError, MonomialIdeal};
use crate::vset::Face;

/// Prime used for the fast vanishing certificate on the rational path.
const FILTER_PRIME: u64 = 1_000_003;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    Void,
    NotPrime { p: u64 },
    Complex(ComplexError),
    Ideal(IdealError),
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::Void => write!(f, "homology undefined on the void complex"),
            HomologyError::NotPrime { p } => write!(f, "{p} is not prime"),
            HomologyError::Complex(e) => write!(f, "{e}"),
            HomologyError::Ideal(e) => write!(f, "{e}"),
        }
    }
}

impl From<ComplexError> for HomologyError {
    fn from(e: ComplexError) -> Self {
        HomologyError::Complex(e)
    }
}

impl From<IdealError> for HomologyError {
    fn from(e: IdealError) -> Self {
        HomologyError::Ideal(e)
    }
}

/// Coefficient field: exact rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientField {
    Rationals,
    Prime(u64),
}

impl CoefficientField {
    pub fn validate(self) -> Result<Self, HomologyError> {
        match self {
            CoefficientField::Rationals => Ok(self),
            CoefficientField::Prime(p) => {
                if is_prime(p) {
                    Ok(self)
                } else {
                    Err(HomologyError::NotPrime { p })
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced Betti numbers by dimension, for dimensions `-1 ..= dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub reduced_betti: BTreeMap<i64, u64>,
}

impl HomologyProfile {
    pub fn betti(&self, dim: i64) -> u64 {
        self.reduced_betti.get(&dim).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced_betti.values().all(|&b| b == 0)
    }

    /// Reduced Euler characteristic `sum (-1)^i betti_i`.
    pub fn euler(&self) -> i64 {
        self.reduced_betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

// ---------------------------------------------------------------------------
// Exact rank computation
// ---------------------------------------------------------------------------

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over F_p by Gaussian elimination. Requires `p < 2^31`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let nr = rows.len();
    if nr == 0 {
        return 0;
    }
    let nc = rows[0].len();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..nc {
        let Some(piv) = (row..nr).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, piv);
        let inv = mod_pow(m[row][col], p - 2, p);
        for i in row + 1..nr {
            if m[i][col] == 0 {
                continue;
            }
            let factor = m[i][col] * inv % p;
            for j in col..nc {
                let sub = factor * m[row][j] % p;
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        row += 1;
        if row == nr {
            break;
        }
    }
    rank
}

/// Fraction-free (Bareiss) rank over the integers with 128-bit arithmetic;
/// `None` signals overflow.
fn rank_bareiss_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let nr = rows.len();
    if nr == 0 {
        return Some(0);
    }
    let nc = rows[0].len();
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut row = 0;
    let mut prev = 1i128;
    for col in 0..nc {
        let Some(piv) = (row..nr).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, piv);
        for i in row + 1..nr {
            for j in col + 1..nc {
                let x = m[row][col].checked_mul(m[i][j])?;
                let y = m[i][col].checked_mul(m[row][j])?;
                m[i][j] = x.checked_sub(y)? / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        rank += 1;
        row += 1;
        if row == nr {
            break;
        }
    }
    Some(rank)
}

/// Bareiss rank with arbitrary-precision integers (always succeeds).
fn rank_bareiss_bigint(rows: &[Vec<i64>]) -> usize {
    let nr = rows.len();
    if nr == 0 {
        return 0;
    }
    let nc = rows[0].len();
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut rank = 0;
    let mut row = 0;
    let mut prev = BigInt::from(1);
    for col in 0..nc {
        let Some(piv) = (row..nr).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, piv);
        for i in row + 1..nr {
            for j in col + 1..nc {
                let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == nr {
            break;
        }
    }
    rank
}

/// Exact rank over the rationals.
pub fn rank_exact(rows: &[Vec<i64>]) -> usize {
    match rank_bareiss_i128(rows) {
        Some(r) => r,
        None => rank_bareiss_bigint(rows),
    }
}

// ---------------------------------------------------------------------------
// Boundary matrices and reduced homology
// ---------------------------------------------------------------------------

/// Faces bucketed by cardinality: `buckets[k]` = faces with `k` vertices,
/// in canonical order; `buckets[0] = [∅]`.
fn face_buckets(c: &SimplicialComplex) -> Vec<Vec<Face>> {
    let d = c.dim_complex().expect("nonvoid") + 1;
    let mut buckets: Vec<Vec<Face>> = vec![Vec::new(); d as usize + 1];
    for f in c.all_faces() {
        buckets[f.card()].push(f);
    }
    buckets
}

/// The boundary matrix from cardinality-`k` faces to cardinality-`k-1`
/// faces; rows are indexed by the smaller faces.
fn boundary_matrix(buckets: &[Vec<Face>], k: usize) -> Vec<Vec<i64>> {
    let rows_faces = &buckets[k - 1];
    let cols_faces = &buckets[k];
    let index: BTreeMap<Face, usize> =
        rows_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; cols_faces.len()]; rows_faces.len()];
    for (j, &f) in cols_faces.iter().enumerate() {
        for (pos, v) in f.iter().enumerate() {
            let sub = f.without(v);
            let i = index[&sub];
            m[i][j] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Ranks of all boundary maps; `ranks[k]` is the rank of the map from
/// cardinality-`k` faces, `k = 1 ..= d+1`, with a trailing 0.
fn boundary_ranks(buckets: &[Vec<Face>], field: CoefficientField) -> Vec<usize> {
    let top = buckets.len() - 1;
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let m = boundary_matrix(buckets, k);
        ranks[k] = match field {
            CoefficientField::Prime(p) => rank_mod_p(&m, p),
            CoefficientField::Rationals => rank_mod_p(&m, FILTER_PRIME),
        };
    }
    if field == CoefficientField::Rationals {
        // Certify: a zero Betti number mod p is zero over Q. Where the
        // modular count is nonzero, recompute the two adjacent ranks
        // exactly.
        let mut exact: Vec<Option<usize>> = vec![None; top + 2];
        for k in 0..=top {
            let betti_p = buckets[k].len() as i64 - ranks[k] as i64 - ranks[k + 1] as i64;
            if betti_p != 0 {
                for kk in [k, k + 1] {
                    if kk >= 1 && kk <= top && exact[kk].is_none() {
                        exact[kk] = Some(rank_exact(&boundary_matrix(buckets, kk)));
                    }
                }
            }
        }
        for k in 1..=top {
            if let Some(r) = exact[k] {
                ranks[k] = r;
            }
        }
    }
    ranks
}

/// Exact reduced homology ranks of a nonvoid complex over `field`.
pub fn reduced_homology(
    c: &SimplicialComplex,
    field: CoefficientField,
) -> Result<HomologyProfile, HomologyError> {
    field.validate()?;
    if c.is_void() {
        return Err(HomologyError::Void);
    }
    let buckets = face_buckets(c);
    let ranks = boundary_ranks(&buckets, field);
    let mut betti = BTreeMap::new();
    for (k, bucket) in buckets.iter().enumerate() {
        let b = bucket.len() as i64 - ranks[k] as i64 - ranks[k + 1] as i64;
        debug_assert!(b >= 0);
        betti.insert(k as i64 - 1, b as u64);
    }
    Ok(HomologyProfile { reduced_betti: betti })
}

/// Reisner's criterion: every link (the link of `∅` included) has vanishing
/// reduced homology below its own dimension.
pub fn is_cohen_macaulay(
    c: &SimplicialComplex,
    field: CoefficientField,
) -> Result<bool, HomologyError> {
    Ok(cohen_macaulay_witness(c, field)?.is_none())
}

/// As `is_cohen_macaulay`, but on failure names an offending face and the
/// dimension where its link has homology.
pub fn cohen_macaulay_witness(
    c: &SimplicialComplex,
    field: CoefficientField,
) -> Result<Option<(Face, i64)>, HomologyError> {
    field.validate()?;
    if c.is_void() {
        return Err(HomologyError::Void);
    }
    for f in c.all_faces() {
        let link = c.link(f)?;
        let dl = link.dim_complex().expect("link of a face is nonvoid");
        if dl <= -1 {
            continue;
        }
        let profile = reduced_homology(&link, field)?;
        for (&i, &b) in &profile.reduced_betti {
            if i < dl && b != 0 {
                return Ok(Some((f, i)));
            }
        }
    }
    Ok(None)
}

/// Ring depth of the Stanley-Reisner ring via the skeleton formula:
/// `depth = 1 + max { j : the j-skeleton is Cohen-Macaulay }`, with the
/// `(-1)`-skeleton `{∅}` always Cohen-Macaulay.
pub fn depth_ring(c: &SimplicialComplex, field: CoefficientField) -> Result<i64, HomologyError> {
    field.validate()?;
    let d = c.dim_complex().ok_or(HomologyError::Void)?;
    let mut j = d;
    while j >= -1 {
        let skel = c.skeleton(j)?;
        if is_cohen_macaulay(&skel, field)? {
            return Ok(j + 1);
        }
        j -= 1;
    }
    unreachable!("the (-1)-skeleton {{∅}} is always Cohen-Macaulay")
}

/// Depth of `S/I` for a monomial ideal: depth of the polarization's
/// Stanley-Reisner ring minus the number of added variables.
pub fn depth_ideal(ideal: &MonomialIdeal, field: CoefficientField) -> Result<i64, HomologyError> {
    if ideal.is_unit() {
        return Err(HomologyError::Void);
    }
    let pol = polarize(ideal)?;
    let complex = stanley_reisner_complex(&pol.ideal)?;
    Ok(depth_ring(&complex, field)? - pol.added as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchsbaumVerdict {
    pub value: bool,
    /// Set when the answer is `false`.
    pub reason: Option<String>,
}

/// Combinatorial Buchsbaum criterion: pure and every vertex link is
/// Cohen-Macaulay. Non-pure input is reported as `false` with the reason,
/// not as an error.
pub fn is_buchsbaum(
    c: &SimplicialComplex,
    field: CoefficientField,
) -> Result<BuchsbaumVerdict, HomologyError> {
    field.validate()?;
    if c.is_void() {
        return Err(HomologyError::Void);
    }
    if !c.is_pure() {
        return Ok(BuchsbaumVerdict {
            value: false,
            reason: Some(String::from("complex is not pure")),
        });
    }
    for v in 0..c.n_vertices() {
        let vf = Face::singleton(v);
        if !c.contains_face(vf) {
            continue;
        }
        if !is_cohen_macaulay(&c.link(vf)?, field)? {
            let mut reason = String::from("link of vertex ");
            reason.push_str(c.label(v));
            reason.push_str(" is not Cohen-Macaulay");
            return Ok(BuchsbaumVerdict { value: false, reason: Some(reason) });
        }
    }
    Ok(BuchsbaumVerdict { value: true, reason: None })
}

/// Multiplicity of the Stanley-Reisner ring: the number of facets of
/// maximal dimension.
pub fn multiplicity(c: &SimplicialComplex) -> Result<i64, HomologyError> {
    c.multiplicity().map_err(HomologyError::from)
}
