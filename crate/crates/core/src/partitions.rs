//! Interval partitions of simplicial complexes, Stanley spaces and Stanley
//! decompositions, the bijection between the two in the squarefree case,
//! exact Stanley depth by exact-cover search, and the Stanley-ideal verdict.
//!
//! Validation of a Stanley decomposition is exact: after clearing the
//! common denominator of the multigraded Hilbert series, each space
//! `u K[Z]` contributes the polynomial `u * prod_{j not in Z} (1 - x_j)`,
//! and the sum must equal the numerator polynomial of the complement of
//! the ideal. Polynomial equality over the integers is checked term by
//! term, so the certificate is exact even though the monomial complement
//! itself is infinite.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComplexError, RVector, SimplicialComplex};
use crate::homology::{depth_ideal, CoefficientField, HomologyError};
use crate::ideal::{
    stanley_reisner_complex, IdealError, Monomial, MonomialIdeal,
};
use crate::poly::{MPoly, Poly1};
use crate::vset::{Face, VertexSet};

/// Inclusion-exclusion over generator subsets is capped here; squarefree
/// ideals take the face-expansion route instead and never hit the cap.
const INCLUSION_EXCLUSION_CAP: usize = 20;

/// Universe cap for the exact-cover searches (one bit per face).
const FACE_UNIVERSE_CAP: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    Complex(ComplexError),
    Ideal(IdealError),
    Homology(HomologyError),
    /// Interval bounds are not nested or not faces.
    BadInterval { lower: Face, upper: Face, why: &'static str },
    /// Too many faces or generators for an exact search.
    CapExceeded { what: &'static str, size: usize, cap: usize },
    /// A squarefree ideal was required.
    NotSquarefree,
    /// The zero or unit ideal where a proper nonzero one was required.
    NotProper,
    /// A space violates the squarefree Stanley space shape.
    NotSquarefreeSpace { index: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::Complex(e) => write!(f, "{e}"),
            PartitionError::Ideal(e) => write!(f, "{e}"),
            PartitionError::Homology(e) => write!(f, "{e}"),
            PartitionError::BadInterval { lower, upper, why } => {
                write!(f, "bad interval [{lower:?}, {upper:?}]: {why}")
            }
            PartitionError::CapExceeded { what, size, cap } => {
                write!(f, "{what} has size {size}, above the exact-search cap {cap}")
            }
            PartitionError::NotSquarefree => write!(f, "ideal is not squarefree"),
            PartitionError::NotProper => write!(f, "ideal must be nonzero and proper"),
            PartitionError::NotSquarefreeSpace { index } => {
                write!(f, "space #{index} is not a squarefree Stanley space")
            }
        }
    }
}

impl From<ComplexError> for PartitionError {
    fn from(e: ComplexError) -> Self {
        PartitionError::Complex(e)
    }
}

impl From<IdealError> for PartitionError {
    fn from(e: IdealError) -> Self {
        PartitionError::Ideal(e)
    }
}

impl From<HomologyError> for PartitionError {
    fn from(e: HomologyError) -> Self {
        PartitionError::Homology(e)
    }
}

/// The interval `[F, G] = { H : F ⊆ H ⊆ G }` of a complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lower: Face,
    pub upper: Face,
}

impl Interval {
    pub fn new(lower: Face, upper: Face) -> Interval {
        Interval { lower, upper }
    }

    /// `dim G - dim F = |G| - |F|`.
    pub fn rank(&self) -> usize {
        self.upper.card() - self.lower.card()
    }

    pub fn contains(&self, h: Face) -> bool {
        self.lower.is_subset(h) && h.is_subset(self.upper)
    }

    /// All member faces, in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        self.upper
            .minus(self.lower)
            .subsets()
            .into_iter()
            .map(|s| s.union(self.lower))
            .collect()
    }
}

/// A claimed disjoint interval cover of a complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    pub ambient: SimplicialComplex,
    pub intervals: Vec<Interval>,
}

/// Why a partition is not a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    NotNested { interval: Interval },
    NotAFace { interval: Interval, face: Face },
    Uncovered { face: Face },
    CoveredTwice { face: Face, first: usize, second: usize },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::NotNested { interval } => {
                write!(f, "interval has F ⊄ G: [{:?}, {:?}]", interval.lower, interval.upper)
            }
            PartitionViolation::NotAFace { face, .. } => {
                write!(f, "interval endpoint {face:?} is not a face")
            }
            PartitionViolation::Uncovered { face } => write!(f, "face {face:?} is uncovered"),
            PartitionViolation::CoveredTwice { face, first, second } => {
                write!(f, "face {face:?} covered by intervals #{first} and #{second}")
            }
        }
    }
}

/// Check disjointness and exact cover; on failure return a face covered
/// zero or at least two times (or a malformed interval).
pub fn validate_partition(p: &Partition) -> Result<(), PartitionViolation> {
    for iv in &p.intervals {
        if !iv.lower.is_subset(iv.upper) {
            return Err(PartitionViolation::NotNested { interval: *iv });
        }
        for face in [iv.lower, iv.upper] {
            if !p.ambient.contains_face(face) {
                return Err(PartitionViolation::NotAFace { interval: *iv, face });
            }
        }
    }
    for face in p.ambient.all_faces() {
        let mut owner: Option<usize> = None;
        for (i, iv) in p.intervals.iter().enumerate() {
            if iv.contains(face) {
                match owner {
                    None => owner = Some(i),
                    Some(first) => {
                        return Err(PartitionViolation::CoveredTwice { face, first, second: i })
                    }
                }
            }
        }
        if owner.is_none() {
            return Err(PartitionViolation::Uncovered { face });
        }
    }
    Ok(())
}

/// `r_i` = number of intervals of rank `i`, indexed `0 ..= d` where
/// `d = dim Δ + 1`.
pub fn r_vector(p: &Partition) -> Result<RVector, PartitionError> {
    let d = p.ambient.dim_ring().ok_or(ComplexError::Void)?;
    let mut r = alloc::vec![0i64; d as usize + 1];
    for iv in &p.intervals {
        r[iv.rank()] += 1;
    }
    Ok(RVector(r))
}

/// A partition is nice when every upper face is a facet and every facet
/// occurs as an upper face.
pub fn is_nice(p: &Partition) -> bool {
    let facets = p.ambient.facets();
    p.intervals.iter().all(|iv| facets.contains(&iv.upper))
        && facets.iter().all(|f| p.intervals.iter().any(|iv| iv.upper == *f))
}

/// `sum_i t^{|F_i|} (1+t)^{|G_i|-|F_i|}`: the face census of the partition
/// as a polynomial. For a valid partition this equals the f-polynomial of
/// the ambient complex, and for nice partitions of pure complexes it
/// collapses to `sum_i r_i t^{d-i} (1+t)^i`.
pub fn interval_census_polynomial(p: &Partition) -> Poly1 {
    let mut acc = Poly1::zero();
    for iv in &p.intervals {
        acc = acc.add(&Poly1::term(1, iv.lower.card()).mul(&Poly1::one_plus_t_pow(iv.rank())));
    }
    acc
}

/// `sum_i r_i t^{d-i} (1+t)^i` for the r-vector of the partition.
pub fn r_polynomial(p: &Partition) -> Result<Poly1, PartitionError> {
    let r = r_vector(p)?;
    let d = r.0.len() - 1;
    let mut acc = Poly1::zero();
    for (i, &ri) in r.0.iter().enumerate() {
        acc = acc.add(&Poly1::term(ri, d - i).mul(&Poly1::one_plus_t_pow(i)));
    }
    Ok(acc)
}

/// A Stanley space `u K[Z]`: all monomials `u * v` with `v` supported on
/// the variable set `z`. Its dimension is `|z|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StanleySpace {
    pub u: Monomial,
    pub z: VertexSet,
}

impl StanleySpace {
    pub fn dimension(&self) -> usize {
        self.z.card()
    }

    /// Squarefree Stanley space: `u` squarefree and `supp(u) ⊆ Z`.
    pub fn is_squarefree(&self) -> bool {
        self.u.is_squarefree() && self.u.support().is_subset(self.z)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.u.divides(m) && m.div_exact(&self.u).support().is_subset(self.z)
    }

    pub fn to_string_with(&self, vars: &crate::ideal::VarTable) -> String {
        let mut s = self.u.to_string_with(vars);
        s.push_str("*K[");
        for (i, v) in self.z.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(vars.label(v));
        }
        s.push(']');
        s
    }
}

/// A claimed direct-sum decomposition of the monomial complement of an
/// ideal into Stanley spaces. Nothing is assumed: run
/// [`validate_decomposition`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StanleyDecomposition {
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    /// `sdepth` of the decomposition: minimal space dimension.
    pub fn sdepth(&self) -> usize {
        self.spaces.iter().map(|s| s.dimension()).min().unwrap_or(0)
    }
}

/// `[F, G] -> x_F K[Z_G]`.
pub fn partition_to_decomposition(p: &Partition) -> StanleyDecomposition {
    StanleyDecomposition {
        spaces: p
            .intervals
            .iter()
            .map(|iv| StanleySpace { u: Monomial::squarefree(iv.lower), z: iv.upper })
            .collect(),
    }
}

/// Inverse of [`partition_to_decomposition`] on squarefree-space
/// decompositions: `x_F K[Z_G] -> [F, G]`.
pub fn decomposition_to_partition(
    d: &StanleyDecomposition,
    ambient: &SimplicialComplex,
) -> Result<Partition, PartitionError> {
    let mut intervals = Vec::with_capacity(d.spaces.len());
    for (index, s) in d.spaces.iter().enumerate() {
        if !s.is_squarefree() {
            return Err(PartitionError::NotSquarefreeSpace { index });
        }
        intervals.push(Interval::new(s.u.support(), s.z));
    }
    Ok(Partition { ambient: ambient.clone(), intervals })
}

/// Numerator of the multigraded Hilbert series of the monomial complement
/// of `I`, after clearing `prod_j (1 - x_j)`.
///
/// Squarefree ideals use the face expansion (every monomial outside the
/// ideal has its support among the faces): `sum_{F in Δ} x_F prod_{j not
/// in F} (1 - x_j)`. General ideals use inclusion-exclusion over the lcms
/// of generator subsets.
pub fn complement_numerator(ideal: &MonomialIdeal) -> Result<MPoly, PartitionError> {
    let n = ideal.n_vars();
    if ideal.is_unit() {
        return Ok(MPoly::zero(n));
    }
    if ideal.is_squarefree() {
        let c = stanley_reisner_complex(ideal)?;
        let faces = c.all_faces();
        // This is a plain sum over faces, not a bitmask search; the cap
        // only guards memory.
        if faces.len() > 1 << 20 {
            return Err(PartitionError::CapExceeded {
                what: "face count",
                size: faces.len(),
                cap: 1 << 20,
            });
        }
        let mut acc = MPoly::zero(n);
        for f in faces {
            let mut term = MPoly::zero(n);
            let mut exps = alloc::vec![0u16; n];
            for v in f.iter() {
                exps[v] = 1;
            }
            term.add_term(&exps, 1);
            for j in 0..n {
                if !f.contains(j) {
                    term.mul_one_minus_var(j);
                }
            }
            acc.add_assign(&term);
        }
        return Ok(acc);
    }
    let g = ideal.gens();
    if g.len() > INCLUSION_EXCLUSION_CAP {
        return Err(PartitionError::CapExceeded {
            what: "generator count",
            size: g.len(),
            cap: INCLUSION_EXCLUSION_CAP,
        });
    }
    let mut acc = MPoly::zero(n);
    for mask in 0u32..(1 << g.len()) {
        let mut lcm = Monomial::unit();
        for (i, gen) in g.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(gen);
            }
        }
        let mut exps = alloc::vec![0u16; n];
        for &(v, e) in lcm.exps() {
            exps[v] = e as u16;
        }
        acc.add_term(&exps, if mask.count_ones() % 2 == 0 { 1 } else { -1 });
    }
    Ok(acc)
}

/// Contribution of the decomposition to the cleared Hilbert series:
/// `sum_i u_i prod_{j not in Z_i} (1 - x_j)`.
fn decomposition_numerator(d: &StanleyDecomposition, n: usize) -> MPoly {
    let mut acc = MPoly::zero(n);
    for s in &d.spaces {
        let mut term = MPoly::zero(n);
        let mut exps = alloc::vec![0u16; n];
        for &(v, e) in s.u.exps() {
            exps[v] = e as u16;
        }
        term.add_term(&exps, 1);
        for j in 0..n {
            if !s.z.contains(j) {
                term.mul_one_minus_var(j);
            }
        }
        acc.add_assign(&term);
    }
    acc
}

/// Certificate of a failed decomposition: the earliest multidegree (in
/// total degree, then lex order) covered the wrong number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionViolation {
    pub multidegree: Vec<u16>,
    /// How many spaces contain the monomial.
    pub covered: usize,
    /// Whether the monomial lies outside the ideal (so the correct count
    /// is 1 if true, 0 if false).
    pub in_complement: bool,
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "multidegree {:?} covered {} times but lies {} the complement",
            self.multidegree,
            self.covered,
            if self.in_complement { "in" } else { "outside" }
        )
    }
}

/// Exact verification of `Mon(I^c) = disjoint union of Mon(u_i K[Z_i])`
/// via the cleared Hilbert series identity.
pub fn validate_decomposition(
    d: &StanleyDecomposition,
    ideal: &MonomialIdeal,
) -> Result<Result<(), DecompositionViolation>, PartitionError> {
    let n = ideal.n_vars();
    let lhs = decomposition_numerator(d, n);
    let rhs = complement_numerator(ideal)?;
    let diff = lhs.sub(&rhs);
    if diff.is_zero() {
        return Ok(Ok(()));
    }
    // The minimal term of the difference pinpoints the first multidegree
    // with the wrong multiplicity.
    let (exps, _) = diff.min_term().expect("nonzero difference");
    let m = Monomial::from_exps(exps.iter().enumerate().map(|(v, &e)| (v, e as u32)));
    let covered = d.spaces.iter().filter(|s| s.contains(&m)).count();
    let in_complement = !ideal.contains(&m);
    Ok(Err(DecompositionViolation { multidegree: exps.clone(), covered, in_complement }))
}

/// Number of spaces of maximal dimension `dim S/I`; for a valid
/// decomposition this equals the multiplicity `e(S/I)`.
pub fn count_top_spaces(d: &StanleyDecomposition, ideal: &MonomialIdeal) -> Option<i64> {
    let dim = ideal.krull_dim()?;
    Some(d.spaces.iter().filter(|s| s.dimension() as i64 == dim).count() as i64)
}

/// `min { dim S/P : P minimal prime }` = minimal facet cardinality of the
/// associated complex; an upper bound for the Stanley depth of `S/I`.
pub fn sdepth_upper_bound(ideal: &MonomialIdeal) -> Result<i64, PartitionError> {
    if !ideal.is_squarefree() {
        return Err(PartitionError::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(PartitionError::NotProper);
    }
    let c = stanley_reisner_complex(ideal)?;
    Ok(c.facets().iter().map(|f| f.card() as i64).min().expect("nonvoid"))
}

// ---------------------------------------------------------------------------
// Exact-cover search over intervals
// ---------------------------------------------------------------------------

struct CoverSearch {
    faces: Vec<Face>,
    /// `(lower, upper, member bitmask)`, in branch order: larger upper
    /// faces first, ties by canonical face order.
    candidates: Vec<(Face, Face, u128)>,
    /// For each face index, the candidates containing it.
    covering: Vec<Vec<u32>>,
    nodes: u64,
}

impl CoverSearch {
    /// Universe = all faces of `c`; candidate intervals `[F, G]` with `G`
    /// drawn from `uppers` and `F ⊆ G` arbitrary.
    fn new(c: &SimplicialComplex, uppers: &[Face]) -> Result<CoverSearch, PartitionError> {
        let faces = c.all_faces();
        if faces.len() > FACE_UNIVERSE_CAP {
            return Err(PartitionError::CapExceeded {
                what: "face count",
                size: faces.len(),
                cap: FACE_UNIVERSE_CAP,
            });
        }
        let index = |f: Face| faces.binary_search(&f).expect("member face");
        let mut candidates: Vec<(Face, Face, u128)> = Vec::new();
        for &g in uppers {
            for f in g.subsets() {
                let mut mask = 0u128;
                for h in Interval::new(f, g).faces() {
                    mask |= 1u128 << index(h);
                }
                candidates.push((f, g, mask));
            }
        }
        candidates.sort_by(|a, b| {
            b.1.card().cmp(&a.1.card()).then_with(|| a.1.cmp(&b.1)).then_with(|| a.0.cmp(&b.0))
        });
        let mut covering = alloc::vec![Vec::new(); faces.len()];
        for (ci, cand) in candidates.iter().enumerate() {
            for fi in 0..faces.len() {
                if cand.2 & (1u128 << fi) != 0 {
                    covering[fi].push(ci as u32);
                }
            }
        }
        Ok(CoverSearch { faces, candidates, covering, nodes: 0 })
    }

    fn full_mask(&self) -> u128 {
        if self.faces.len() == 128 {
            !0
        } else {
            (1u128 << self.faces.len()) - 1
        }
    }

    fn search(&mut self) -> Option<Vec<Interval>> {
        let mut chosen = Vec::new();
        if self.dfs(0, &mut chosen) {
            Some(
                chosen
                    .iter()
                    .map(|&ci| {
                        let (f, g, _) = self.candidates[ci as usize];
                        Interval::new(f, g)
                    })
                    .collect(),
            )
        } else {
            None
        }
    }

    fn dfs(&mut self, covered: u128, chosen: &mut Vec<u32>) -> bool {
        self.nodes += 1;
        if covered == self.full_mask() {
            return true;
        }
        // Fail-first: branch on the uncovered face with the fewest active
        // candidates; faces are scanned in canonical order so ties are
        // deterministic.
        let mut best: Option<(usize, usize)> = None;
        for fi in 0..self.faces.len() {
            if covered & (1u128 << fi) != 0 {
                continue;
            }
            let active = self.covering[fi]
                .iter()
                .filter(|&&ci| self.candidates[ci as usize].2 & covered == 0)
                .count();
            if active == 0 {
                return false;
            }
            if best.is_none_or(|(_, cnt)| active < cnt) {
                best = Some((fi, active));
                if active == 1 {
                    break;
                }
            }
        }
        let (fi, _) = best.expect("some face uncovered");
        let options: Vec<u32> = self.covering[fi]
            .iter()
            .copied()
            .filter(|&ci| self.candidates[ci as usize].2 & covered == 0)
            .collect();
        for ci in options {
            chosen.push(ci);
            if self.dfs(covered | self.candidates[ci as usize].2, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Outcome of the nice-partition search: a witness or a proof of
/// infeasibility by exhausted search.
#[derive(Clone, Debug)]
pub enum NicePartitionOutcome {
    Found(Partition),
    Infeasible { nodes: u64 },
}

/// Exact-cover search restricted to intervals whose upper face is a facet.
pub fn find_nice_partition(
    c: &SimplicialComplex,
) -> Result<NicePartitionOutcome, PartitionError> {
    if c.is_void() {
        return Err(PartitionError::Complex(ComplexError::Void));
    }
    let mut search = CoverSearch::new(c, c.facets())?;
    match search.search() {
        Some(intervals) => {
            Ok(NicePartitionOutcome::Found(Partition { ambient: c.clone(), intervals }))
        }
        None => Ok(NicePartitionOutcome::Infeasible { nodes: search.nodes }),
    }
}

/// Is there a partition all of whose upper faces have at least `k`
/// vertices? Returns a witness if so.
pub fn partition_with_floor(
    c: &SimplicialComplex,
    k: i64,
) -> Result<Option<Partition>, PartitionError> {
    if c.is_void() {
        return Err(PartitionError::Complex(ComplexError::Void));
    }
    let uppers: Vec<Face> =
        c.all_faces().into_iter().filter(|f| f.card() as i64 >= k).collect();
    let mut search = CoverSearch::new(c, &uppers)?;
    Ok(search
        .search()
        .map(|intervals| Partition { ambient: c.clone(), intervals }))
}

/// Exact Stanley depth of `S/I` for a squarefree proper nonzero ideal,
/// with a witness partition attaining it.
///
/// This is the largest `k` at most the associated-prime upper bound such
/// that the complex of `I` admits a partition with every upper face of
/// cardinality at least `k`; squarefree Stanley depth equals Stanley
/// depth, so the search is exact.
pub fn sdepth(ideal: &MonomialIdeal) -> Result<(i64, Partition), PartitionError> {
    if !ideal.is_squarefree() {
        return Err(PartitionError::NotSquarefree);
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(PartitionError::NotProper);
    }
    let c = stanley_reisner_complex(ideal)?;
    let ub = sdepth_upper_bound(ideal)?;
    let mut k = ub;
    while k >= 0 {
        if let Some(p) = partition_with_floor(&c, k)? {
            return Ok((k, p));
        }
        k -= 1;
    }
    unreachable!("the singleton partition always realizes k = 0")
}

/// The Stanley-ideal verdict for a squarefree proper ideal: does
/// `sdepth(S/I) >= depth(S/I)` hold, with both numbers and the witness.
#[derive(Clone, Debug)]
pub struct StanleyVerdict {
    pub value: bool,
    pub sdepth: i64,
    pub depth: i64,
    pub witness: Partition,
}

pub fn is_stanley_ideal(
    ideal: &MonomialIdeal,
    field: CoefficientField,
) -> Result<StanleyVerdict, PartitionError> {
    let (sd, witness) = sdepth(ideal)?;
    let depth = depth_ideal(ideal, field)?;
    Ok(StanleyVerdict { value: sd >= depth, sdepth: sd, depth, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{stanley_reisner_ideal, VarTable};

    fn complex(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists, n).unwrap()
    }

    fn iv(lower: &[usize], upper: &[usize]) -> Interval {
        Interval::new(
            VertexSet::from_iter(lower.iter().copied()),
            VertexSet::from_iter(upper.iter().copied()),
        )
    }

    /// Facets 13,14,24,25,35 on five vertices (0-indexed internally).
    fn pentagon() -> SimplicialComplex {
        complex(&[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]], 5)
    }

    fn pentagon_partition() -> Partition {
        Partition {
            ambient: pentagon(),
            intervals: alloc::vec![
                iv(&[], &[0, 2]),
                iv(&[3], &[0, 3]),
                iv(&[1], &[1, 3]),
                iv(&[4], &[1, 4]),
                iv(&[2, 4], &[2, 4]),
            ],
        }
    }

    #[test]
    fn pentagon_partition_is_valid_and_nice() {
        let p = pentagon_partition();
        assert_eq!(validate_partition(&p), Ok(()));
        assert!(is_nice(&p));
        assert_eq!(interval_census_polynomial(&p), p.ambient.f_vector().unwrap().polynomial());
    }

    #[test]
    fn deleting_an_interval_breaks_the_cover() {
        let mut p = pentagon_partition();
        p.intervals.remove(1);
        match validate_partition(&p) {
            Err(PartitionViolation::Uncovered { face }) => {
                assert_eq!(face, VertexSet::singleton(3));
            }
            other => panic!("expected uncovered face, got {other:?}"),
        }
    }

    #[test]
    fn duplicated_interval_is_caught() {
        let mut p = pentagon_partition();
        let dup = p.intervals[0];
        p.intervals.push(dup);
        assert!(matches!(
            validate_partition(&p),
            Err(PartitionViolation::CoveredTwice { .. })
        ));
    }

    #[test]
    fn trivial_partition_of_simplex_is_nice() {
        let c = complex(&[&[0, 1, 2]], 3);
        let p = Partition {
            ambient: c.clone(),
            intervals: alloc::vec![iv(&[], &[0, 1, 2])],
        };
        assert_eq!(validate_partition(&p), Ok(()));
        assert!(is_nice(&p));
        let r = r_vector(&p).unwrap();
        assert_eq!(r.0, alloc::vec![0, 0, 0, 1]);
    }

    #[test]
    fn pentagon_decomposition_round_trip() {
        let p = pentagon_partition();
        let d = partition_to_decomposition(&p);
        // x4 K[x1,x4] style spaces: check one of them explicitly.
        assert_eq!(d.spaces[1].u, Monomial::squarefree(VertexSet::singleton(3)));
        assert_eq!(d.spaces[1].z, VertexSet::from_iter([0, 3]));
        let back = decomposition_to_partition(&d, &p.ambient).unwrap();
        assert_eq!(back.intervals, p.intervals);
        // And the decomposition validates against the edge ideal.
        let ideal = stanley_reisner_ideal(&p.ambient);
        assert_eq!(validate_decomposition(&d, &ideal).unwrap(), Ok(()));
        assert_eq!(d.sdepth(), 2);
    }

    fn edge_ideal_x1x2() -> MonomialIdeal {
        MonomialIdeal::new(
            VarTable::standard(2),
            alloc::vec![Monomial::from_exps([(0, 1), (1, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn validate_decomposition_examples() {
        let ideal = edge_ideal_x1x2();
        // K[x2] ⊕ x1 K[x1]: valid, sdepth 1.
        let good = StanleyDecomposition {
            spaces: alloc::vec![
                StanleySpace { u: Monomial::unit(), z: VertexSet::singleton(1) },
                StanleySpace { u: Monomial::var(0), z: VertexSet::singleton(0) },
            ],
        };
        assert_eq!(validate_decomposition(&good, &ideal).unwrap(), Ok(()));
        assert_eq!(good.sdepth(), 1);

        // The staircase family with k = 2: K[x2] ⊕ x1 K ⊕ x1^2 K ⊕ x1^3 K[x1].
        let dk = StanleyDecomposition {
            spaces: alloc::vec![
                StanleySpace { u: Monomial::unit(), z: VertexSet::singleton(1) },
                StanleySpace { u: Monomial::var(0), z: VertexSet::EMPTY },
                StanleySpace { u: Monomial::from_exps([(0, 2)]), z: VertexSet::EMPTY },
                StanleySpace { u: Monomial::from_exps([(0, 3)]), z: VertexSet::singleton(0) },
            ],
        };
        assert_eq!(validate_decomposition(&dk, &ideal).unwrap(), Ok(()));
        assert_eq!(dk.sdepth(), 0);

        // K[x2] ⊕ x1 K[x1,x2]: covers x1*x2 which lies in the ideal.
        let bad = StanleyDecomposition {
            spaces: alloc::vec![
                StanleySpace { u: Monomial::unit(), z: VertexSet::singleton(1) },
                StanleySpace { u: Monomial::var(0), z: VertexSet::from_iter([0, 1]) },
            ],
        };
        let violation = validate_decomposition(&bad, &ideal).unwrap().unwrap_err();
        assert_eq!(violation.multidegree, alloc::vec![1, 1]);
        assert_eq!(violation.covered, 1);
        assert!(!violation.in_complement);
    }

    #[test]
    fn count_top_spaces_equals_multiplicity() {
        let ideal = edge_ideal_x1x2();
        let good = StanleyDecomposition {
            spaces: alloc::vec![
                StanleySpace { u: Monomial::unit(), z: VertexSet::singleton(1) },
                StanleySpace { u: Monomial::var(0), z: VertexSet::singleton(0) },
            ],
        };
        assert_eq!(count_top_spaces(&good, &ideal), Some(2));
        assert_eq!(ideal.multiplicity(), Some(2));
        // The k = 2 staircase also has exactly 2 top spaces.
        let dk = StanleyDecomposition {
            spaces: alloc::vec![
                StanleySpace { u: Monomial::unit(), z: VertexSet::singleton(1) },
                StanleySpace { u: Monomial::var(0), z: VertexSet::EMPTY },
                StanleySpace { u: Monomial::from_exps([(0, 2)]), z: VertexSet::EMPTY },
                StanleySpace { u: Monomial::from_exps([(0, 3)]), z: VertexSet::singleton(0) },
            ],
        };
        assert_eq!(count_top_spaces(&dk, &ideal), Some(2));
    }

    #[test]
    fn sdepth_of_an_edge_ideal_is_one() {
        let ideal = edge_ideal_x1x2();
        assert_eq!(sdepth_upper_bound(&ideal).unwrap(), 1);
        let (k, p) = sdepth(&ideal).unwrap();
        assert_eq!(k, 1);
        assert_eq!(validate_partition(&p), Ok(()));
        assert!(p.intervals.iter().all(|iv| iv.upper.card() >= 1));
    }

    #[test]
    fn sdepth_of_pentagon_ideal() {
        let ideal = stanley_reisner_ideal(&pentagon());
        assert_eq!(sdepth_upper_bound(&ideal).unwrap(), 2);
        let (k, p) = sdepth(&ideal).unwrap();
        assert_eq!(k, 2);
        assert_eq!(validate_partition(&p), Ok(()));
    }

    #[test]
    fn nice_partition_of_shellable_complex_found() {
        // A shellable 2-complex.
        let c = complex(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]], 5);
        match find_nice_partition(&c).unwrap() {
            NicePartitionOutcome::Found(p) => {
                assert_eq!(validate_partition(&p), Ok(()));
                assert!(is_nice(&p));
            }
            NicePartitionOutcome::Infeasible { .. } => panic!("should be partitionable"),
        }
    }

    #[test]
    fn stanley_verdict_for_pentagon() {
        let ideal = stanley_reisner_ideal(&pentagon());
        let v = is_stanley_ideal(&ideal, CoefficientField::Rationals).unwrap();
        assert!(v.value);
        assert_eq!(v.sdepth, 2);
        assert_eq!(v.depth, 2);
    }

    #[test]
    fn squarefree_spaces_cannot_decompose_nonsquarefree_ideals() {
        // Exhaustive check in 2 variables: no set of squarefree Stanley
        // spaces validates against (x1^2), while one does for (x1x2).
        let n = 2;
        let mut spaces = Vec::new();
        for g in VertexSet::full(n).subsets() {
            for f in g.subsets() {
                spaces.push(StanleySpace { u: Monomial::squarefree(f), z: g });
            }
        }
        let nonsq = MonomialIdeal::new(
            VarTable::standard(n),
            alloc::vec![Monomial::from_exps([(0, 2)])],
        )
        .unwrap();
        let sq = edge_ideal_x1x2();
        let mut nonsq_ok = 0;
        let mut sq_ok = 0;
        for mask in 0u32..(1 << spaces.len()) {
            let d = StanleyDecomposition {
                spaces: (0..spaces.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| spaces[i].clone())
                    .collect(),
            };
            if validate_decomposition(&d, &nonsq).unwrap().is_ok() {
                nonsq_ok += 1;
            }
            if validate_decomposition(&d, &sq).unwrap().is_ok() {
                sq_ok += 1;
            }
        }
        assert_eq!(nonsq_ok, 0, "no squarefree decomposition of a non-squarefree ideal");
        assert!(sq_ok > 0);
    }

    #[test]
    fn decomposition_to_partition_rejects_nonsquarefree() {
        let d = StanleyDecomposition {
            spaces: alloc::vec![StanleySpace {
                u: Monomial::from_exps([(0, 2)]),
                z: VertexSet::singleton(0),
            }],
        };
        let c = complex(&[&[0]], 1);
        assert_eq!(
            decomposition_to_partition(&d, &c).unwrap_err(),
            PartitionError::NotSquarefreeSpace { index: 0 }
        );
    }
}
