//! Shellings (non-pure, in the sense of Björner and Wachs), the exact
//! shellability decision, shelling-induced partitions, linear quotients,
//! the Alexander-dual route to cleanness, and the gluing principle for
//! partitions along a codimension-one intersection.
//!
//! A facet order `G_1, ..., G_s` is a shelling when for all `i < j` there
//! are `k < j` and a vertex `c` with `G_i ∩ G_j ⊆ G_k ∩ G_j = G_j \ {c}`.
//! Whether a facet can be appended depends only on the *set* of facets
//! already placed, so the search for an order is a DFS over subsets with
//! memoized failures: exhausting `2^s` states is a proof that no shelling
//! exists. The same engine decides linear quotients of a monomial ideal.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::ideal::{stanley_reisner_complex, IdealError, Monomial, MonomialIdeal};
use crate::partitions::{validate_partition, Interval, Partition, PartitionError};
use crate::vset::{Face, VertexSet};

/// Default cap on the subset-DP state space (2^24 states).
pub const DEFAULT_FACET_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingError {
    Complex(ComplexError),
    Ideal(IdealError),
    /// The order is not a permutation of the facets.
    NotPermutation,
    /// Item count exceeds the subset-DP cap.
    CapExceeded { items: usize, cap: usize },
}

impl fmt::Display for ShellingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellingError::Complex(e) => write!(f, "{e}"),
            ShellingError::Ideal(e) => write!(f, "{e}"),
            ShellingError::NotPermutation => {
                write!(f, "order is not a permutation of the facets")
            }
            ShellingError::CapExceeded { items, cap } => {
                write!(f, "{items} items exceed the exhaustive-search cap {cap}")
            }
        }
    }
}

impl From<ComplexError> for ShellingError {
    fn from(e: ComplexError) -> Self {
        ShellingError::Complex(e)
    }
}

impl From<IdealError> for ShellingError {
    fn from(e: IdealError) -> Self {
        ShellingError::Ideal(e)
    }
}

/// An ordered listing of all facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    pub facets: Vec<Face>,
}

/// Where a shelling check fails: the attachment of `order[j]` does not
/// cover the intersection with `order[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingViolation {
    NotPermutation,
    FailsAt { i: usize, j: usize },
}

impl fmt::Display for ShellingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellingViolation::NotPermutation => {
                write!(f, "order is not a permutation of the facets")
            }
            ShellingViolation::FailsAt { i, j } => write!(
                f,
                "attachment fails at pair (i={i}, j={j}): no earlier facet meets facet #{j} in a \
                 face of codimension one containing its intersection with facet #{i}"
            ),
        }
    }
}

fn is_permutation_of_facets(c: &SimplicialComplex, order: &ShellingOrder) -> bool {
    let mut sorted = order.facets.clone();
    sorted.sort();
    sorted.dedup();
    sorted.len() == order.facets.len() && sorted.as_slice() == c.facets()
}

/// Accepts iff for every `j > 0` and `i < j` there are `k < j` and
/// `c ∈ G_j \ G_i` with `G_i ∩ G_j ⊆ G_k ∩ G_j = G_j \ {c}`.
pub fn verify_shelling(
    c: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<(), ShellingViolation> {
    if !is_permutation_of_facets(c, order) {
        return Err(ShellingViolation::NotPermutation);
    }
    let fs = &order.facets;
    for j in 1..fs.len() {
        for i in 0..j {
            let ok = (0..j).any(|k| {
                let diff = fs[j].minus(fs[k]);
                if diff.card() != 1 {
                    return false;
                }
                let cvert = diff.min_vertex().unwrap();
                !fs[i].contains(cvert)
            });
            if !ok {
                return Err(ShellingViolation::FailsAt { i, j });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Subset-DFS engine with memoized failure states
// ---------------------------------------------------------------------------

/// Finds the lexicographically first admissible order of `s` items, where
/// item `j` may follow the placed set `S` iff for every `i ∈ S` the
/// precomputed witness mask `masks[j][i]` meets `S`. Failed states are
/// memoized, so exhaustion visits each of the `2^s` subsets at most once.
struct OrderSearch {
    s: usize,
    masks: Vec<Vec<u32>>,
    failed: Vec<u64>,
    nodes: u64,
}

impl OrderSearch {
    fn new(masks: Vec<Vec<u32>>) -> OrderSearch {
        let s = masks.len();
        let words = ((1usize << s) + 63) / 64;
        OrderSearch { s, masks, failed: vec![0u64; words], nodes: 0 }
    }

    fn is_failed(&self, state: u32) -> bool {
        self.failed[(state >> 6) as usize] & (1u64 << (state & 63)) != 0
    }

    fn mark_failed(&mut self, state: u32) {
        self.failed[(state >> 6) as usize] |= 1u64 << (state & 63);
    }

    fn admissible(&self, j: usize, placed: u32) -> bool {
        let mut rest = placed;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if self.masks[j][i] & placed == 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    fn first_order(&mut self) -> Option<Vec<usize>> {
        let mut order = Vec::with_capacity(self.s);
        if self.dfs(0, &mut order) {
            Some(order)
        } else {
            None
        }
    }

    fn dfs(&mut self, placed: u32, order: &mut Vec<usize>) -> bool {
        if order.len() == self.s {
            return true;
        }
        if self.is_failed(placed) {
            return false;
        }
        self.nodes += 1;
        for j in 0..self.s {
            if placed & (1 << j) != 0 || !self.admissible(j, placed) {
                continue;
            }
            order.push(j);
            if self.dfs(placed | (1 << j), order) {
                return true;
            }
            order.pop();
        }
        self.mark_failed(placed);
        false
    }
}

/// Decision of shellability with a witness order or a proof by exhaustion.
#[derive(Clone, Debug)]
pub enum ShellabilityOutcome {
    Shellable(ShellingOrder),
    NotShellable { states: u64 },
}

impl ShellabilityOutcome {
    pub fn is_shellable(&self) -> bool {
        matches!(self, ShellabilityOutcome::Shellable(_))
    }
}

/// Exact shellability decision by subset DFS over at most `2^s` states.
/// The returned order is the first one the deterministic sequential
/// search finds. Complexes with more than `cap` facets are refused.
pub fn is_shellable(
    c: &SimplicialComplex,
    cap: usize,
) -> Result<ShellabilityOutcome, ShellingError> {
    let fs = c.facets();
    let s = fs.len();
    if s > cap || s > 32 {
        return Err(ShellingError::CapExceeded { items: s, cap: cap.min(32) });
    }
    if s <= 1 {
        return Ok(ShellabilityOutcome::Shellable(ShellingOrder { facets: fs.to_vec() }));
    }
    // masks[j][i]: the set of facets k with |G_j \ G_k| = 1 whose missing
    // vertex c avoids G_i, i.e. appending j after k covers i.
    let mut masks = vec![vec![0u32; s]; s];
    for j in 0..s {
        for k in 0..s {
            let diff = fs[j].minus(fs[k]);
            if diff.card() != 1 {
                continue;
            }
            let cvert = diff.min_vertex().unwrap();
            for (i, mask_ji) in masks[j].iter_mut().enumerate() {
                if !fs[i].contains(cvert) {
                    *mask_ji |= 1 << k;
                }
            }
        }
    }
    let mut search = OrderSearch::new(masks);
    match search.first_order() {
        Some(order) => {
            let facets: Vec<Face> = order.into_iter().map(|j| fs[j]).collect();
            let so = ShellingOrder { facets };
            debug_assert_eq!(verify_shelling(c, &so), Ok(()));
            Ok(ShellabilityOutcome::Shellable(so))
        }
        None => Ok(ShellabilityOutcome::NotShellable { states: search.nodes }),
    }
}

/// The restriction face of `G_i`: vertices `v` with `G_i \ {v}` inside an
/// earlier facet. For a shelling this is the unique minimal subface of
/// `G_i` not contained in any earlier facet.
fn restriction_face(fs: &[Face], i: usize) -> Face {
    let mut r = VertexSet::EMPTY;
    for v in fs[i].iter() {
        if fs[..i].iter().any(|&g| fs[i].without(v).is_subset(g)) {
            r = r.with(v);
        }
    }
    r
}

/// The nice partition induced by a shelling: `[R_i, G_i]` with `R_i` the
/// restriction face.
pub fn shelling_to_partition(
    c: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<Partition, ShellingError> {
    if verify_shelling(c, order).is_err() {
        return Err(ShellingError::NotPermutation);
    }
    let intervals: Vec<Interval> = (0..order.facets.len())
        .map(|i| Interval::new(restriction_face(&order.facets, i), order.facets[i]))
        .collect();
    Ok(Partition { ambient: c.clone(), intervals })
}

// ---------------------------------------------------------------------------
// Linear quotients
// ---------------------------------------------------------------------------

/// Outcome of the linear-quotients check: an order with the colon ideals
/// as certificates, a counterexample step for a supplied order, or proof
/// by exhaustion that no order works.
#[derive(Clone, Debug)]
pub enum LinearQuotientOutcome {
    HasOrder { order: Vec<usize>, colons: Vec<MonomialIdeal> },
    FailsAt { position: usize, colon: MonomialIdeal },
    None { states: u64 },
}

impl LinearQuotientOutcome {
    pub fn has(&self) -> bool {
        matches!(self, LinearQuotientOutcome::HasOrder { .. })
    }
}

fn colons_for_order(ideal: &MonomialIdeal, order: &[usize]) -> Result<Vec<MonomialIdeal>, (usize, MonomialIdeal)> {
    let gens = ideal.gens();
    let mut colons = Vec::with_capacity(order.len());
    for (pos, &j) in order.iter().enumerate() {
        let prefix: Vec<Monomial> = order[..pos].iter().map(|&k| gens[k].clone()).collect();
        let prefix_ideal = MonomialIdeal::new(ideal.vars().clone(), prefix).expect("same ring");
        let colon = prefix_ideal.colon(&gens[j]);
        let variable_generated =
            pos == 0 || colon.gens().iter().all(|g| g.degree() == 1);
        if !variable_generated {
            return Err((pos, colon));
        }
        colons.push(colon);
    }
    Ok(colons)
}

/// Does `I` have linear quotients? With an order given, verify it; without
/// one, search over generator orders with the subset-DFS engine (an order
/// exists among the first `2^s` reachable prefix sets or not at all).
pub fn has_linear_quotients(
    ideal: &MonomialIdeal,
    order: Option<&[usize]>,
    cap: usize,
) -> Result<LinearQuotientOutcome, ShellingError> {
    let gens = ideal.gens();
    let s = gens.len();
    if let Some(ord) = order {
        let mut sorted = ord.to_vec();
        sorted.sort_unstable();
        if sorted != (0..s).collect::<Vec<_>>() {
            return Err(ShellingError::NotPermutation);
        }
        return Ok(match colons_for_order(ideal, ord) {
            Ok(colons) => LinearQuotientOutcome::HasOrder { order: ord.to_vec(), colons },
            Err((position, colon)) => LinearQuotientOutcome::FailsAt { position, colon },
        });
    }
    if s > cap || s > 32 {
        return Err(ShellingError::CapExceeded { items: s, cap: cap.min(32) });
    }
    if s <= 1 {
        let order: Vec<usize> = (0..s).collect();
        let colons = colons_for_order(ideal, &order).expect("single generator");
        return Ok(LinearQuotientOutcome::HasOrder { order, colons });
    }
    // v[k][j] = g_k : g_j, the contribution of an earlier generator k to
    // the colon at g_j. That colon is generated by variables iff every
    // v[i][j] is divisible by some degree-one v[k][j] with k in the prefix.
    let mut quot = vec![vec![Monomial::unit(); s]; s];
    for (k, gk) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            quot[k][j] = gk.colon_by(gj);
        }
    }
    let mut masks = vec![vec![0u32; s]; s];
    for j in 0..s {
        for i in 0..s {
            for k in 0..s {
                if k != j && quot[k][j].degree() == 1 && quot[k][j].divides(&quot[i][j]) {
                    masks[j][i] |= 1 << k;
                }
            }
        }
    }
    let mut search = OrderSearch::new(masks);
    match search.first_order() {
        Some(order) => {
            let colons = colons_for_order(ideal, &order)
                .expect("search admissibility matches the colon test");
            Ok(LinearQuotientOutcome::HasOrder { order, colons })
        }
        None => Ok(LinearQuotientOutcome::None { states: search.nodes }),
    }
}

// ---------------------------------------------------------------------------
// Cleanness via the Alexander dual
// ---------------------------------------------------------------------------

/// Evidence chain for the cleanness of a squarefree ideal: generators of
/// the dual ideal, a linear-quotient order when one exists, and the
/// induced (or directly searched) shelling of the complex. By Dress's
/// theorem the complex is shellable iff the ideal is clean.
#[derive(Clone, Debug)]
pub struct CleanEvidence {
    pub dual: MonomialIdeal,
    pub dual_linear_quotients: Option<Vec<usize>>,
    pub shelling: Option<ShellingOrder>,
    pub via: &'static str,
    pub clean: bool,
}

/// The Stanley-Reisner ideal of the Alexander dual: minimally generated by
/// the products over the minimal primes of `I`, i.e. the complements of
/// the facets.
pub fn dual_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal, ShellingError> {
    if !ideal.is_squarefree() {
        return Err(ShellingError::Ideal(IdealError::NotSquarefree));
    }
    let c = stanley_reisner_complex(ideal)?;
    let n = c.n_vertices();
    let gens: Vec<Monomial> = c
        .facets()
        .iter()
        .map(|f| Monomial::squarefree(f.complement_in(n)))
        .collect();
    Ok(MonomialIdeal::new(ideal.vars().clone(), gens)?)
}

/// Decide cleanness of a squarefree ideal: try linear quotients on the
/// Alexander dual (sufficient: a linear-quotient order of the dual induces
/// a shelling), and fall back to the direct shellability search (linear
/// quotients of the dual is not necessary).
pub fn check_clean_via_dual(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<CleanEvidence, ShellingError> {
    let c = stanley_reisner_complex(ideal)?;
    let dual = dual_ideal(ideal)?;
    let n = c.n_vertices();
    if let LinearQuotientOutcome::HasOrder { order, .. } =
        has_linear_quotients(&dual, None, cap)?
    {
        let facets: Vec<Face> = order
            .iter()
            .map(|&i| dual.gens()[i].support().complement_in(n))
            .collect();
        let induced = ShellingOrder { facets };
        if verify_shelling(&c, &induced).is_ok() {
            return Ok(CleanEvidence {
                dual,
                dual_linear_quotients: Some(order),
                shelling: Some(induced),
                via: "dual-linear-quotients",
                clean: true,
            });
        }
    }
    match is_shellable(&c, cap)? {
        ShellabilityOutcome::Shellable(order) => Ok(CleanEvidence {
            dual,
            dual_linear_quotients: None,
            shelling: Some(order),
            via: "direct-search",
            clean: true,
        }),
        ShellabilityOutcome::NotShellable { .. } => Ok(CleanEvidence {
            dual,
            dual_linear_quotients: None,
            shelling: None,
            via: "direct-search",
            clean: false,
        }),
    }
}

// ---------------------------------------------------------------------------
// Gluing partitions along a codimension-one intersection
// ---------------------------------------------------------------------------

/// Result of the gluing construction. `Failed` names the interval of the
/// second partition whose complement in the intersection has two or more
/// minimal elements; this is the documented failure mode, not an error.
#[derive(Clone, Debug)]
pub enum GlueOutcome {
    Glued(Partition),
    Failed { interval: Interval, minimals: Vec<Face> },
}

/// Glue nice partitions of `Δ1` and `Δ2` along `Γ = Δ1 ∩ Δ2`: keep the
/// first partition, and replace each interval `[F, G]` of the second by
/// `[H, G]` where `H` is the unique minimal element of `[F, G] \ Γ` (when
/// it exists).
pub fn glue_partitions(
    p1: &Partition,
    p2: &Partition,
    gamma: &SimplicialComplex,
) -> Result<GlueOutcome, PartitionError> {
    for (p, which) in [(p1, "first"), (p2, "second")] {
        if validate_partition(p).is_err() || !crate::partitions::is_nice(p) {
            return Err(PartitionError::BadInterval {
                lower: VertexSet::EMPTY,
                upper: VertexSet::EMPTY,
                why: if which == "first" {
                    "first partition must be valid and nice"
                } else {
                    "second partition must be valid and nice"
                },
            });
        }
    }
    let expected_gamma = p1.ambient.intersection(&p2.ambient);
    if gamma.facets() != expected_gamma.facets() {
        return Err(PartitionError::BadInterval {
            lower: VertexSet::EMPTY,
            upper: VertexSet::EMPTY,
            why: "gamma is not the intersection complex",
        });
    }
    let union = p1.ambient.union(&p2.ambient);
    let mut intervals = p1.intervals.clone();
    for iv in &p2.intervals {
        let outside: Vec<Face> =
            iv.faces().into_iter().filter(|&h| !gamma.contains_face(h)).collect();
        let minimals: Vec<Face> = outside
            .iter()
            .filter(|&&h| !outside.iter().any(|&o| o != h && o.is_subset(h)))
            .copied()
            .collect();
        match minimals.as_slice() {
            [h] => intervals.push(Interval::new(*h, iv.upper)),
            _ => return Ok(GlueOutcome::Failed { interval: *iv, minimals }),
        }
    }
    Ok(GlueOutcome::Glued(Partition { ambient: union, intervals }))
}
