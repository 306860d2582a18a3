//! Prime filtrations of monomial quotient rings: verification,
//! classification as clean / pretty clean, exhaustive search with
//! memoization, the polarization route, the induced Stanley
//! decomposition, and transport along a substitution by a monomial
//! regular sequence.
//!
//! A prime filtration is a chain `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_m = S` of
//! monomial ideals with `I_{j+1} = I_j + (w_j)` and `(I_j : w_j) = P_j` a
//! monomial prime; then `I_{j+1}/I_j ≅ S/P_j`. The filtration is clean
//! when every `P_j` is a minimal prime of `I`, and pretty clean when no
//! earlier prime is strictly contained in a later one. By Dress's theorem
//! a squarefree ideal is clean iff its complex is shellable, which the
//! search reproduces independently; and an ideal is pretty clean iff its
//! polarization is clean.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::ideal::{
    is_regular_sequence, polarize, stanley_reisner_complex, substitute_monomial, IdealError,
    Monomial, MonomialIdeal, MonomialPrime, Polarization, VarTable,
};
use crate::partitions::{StanleyDecomposition, StanleySpace};
use crate::shelling::{
    is_shellable, verify_shelling, ShellabilityOutcome, ShellingError, ShellingOrder,
};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationError {
    Ideal(IdealError),
    Shelling(ShellingError),
    /// Search requires a proper nonzero base ideal.
    NotProper,
    /// The candidate box is larger than the configured cap.
    BoxCap { size: usize, cap: usize },
    /// The filtration does not verify.
    Invalid(FiltrationViolation),
    /// The filtration verifies but is not pretty clean.
    NotPrettyClean,
}

impl fmt::Display for FiltrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationError::Ideal(e) => write!(f, "{e}"),
            FiltrationError::Shelling(e) => write!(f, "{e}"),
            FiltrationError::NotProper => write!(f, "base ideal must be nonzero and proper"),
            FiltrationError::BoxCap { size, cap } => {
                write!(f, "candidate box has {size} monomials, above the cap {cap}")
            }
            FiltrationError::Invalid(v) => write!(f, "invalid filtration: {v}"),
            FiltrationError::NotPrettyClean => write!(f, "filtration is not pretty clean"),
        }
    }
}

impl From<IdealError> for FiltrationError {
    fn from(e: IdealError) -> Self {
        FiltrationError::Ideal(e)
    }
}

impl From<ShellingError> for FiltrationError {
    fn from(e: ShellingError) -> Self {
        FiltrationError::Shelling(e)
    }
}

/// One step of a prime filtration: the monomial generating the next
/// quotient and the prime it is claimed to colon to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub w: Monomial,
    pub prime: MonomialPrime,
}

/// An ordered chain witnessing cleanness or pretty cleanness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFiltration {
    pub base: MonomialIdeal,
    pub steps: Vec<FiltrationStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationViolation {
    /// `w_j` already lies in `I_j`.
    StepInIdeal { step: usize },
    /// `(I_j : w_j)` differs from the claimed prime (or is not prime).
    ColonMismatch { step: usize, colon: MonomialIdeal },
    /// The chain does not end at the unit ideal.
    NotUnitAtEnd,
}

impl fmt::Display for FiltrationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationViolation::StepInIdeal { step } => {
                write!(f, "step {step}: the monomial already lies in the current ideal")
            }
            FiltrationViolation::ColonMismatch { step, colon } => write!(
                f,
                "step {step}: colon ideal ({}) is not the claimed prime",
                colon.gens_string().join(", ")
            ),
            FiltrationViolation::NotUnitAtEnd => {
                write!(f, "the chain does not terminate at the unit ideal")
            }
        }
    }
}

/// Check the chain invariants step by step.
pub fn verify_filtration(f: &PrimeFiltration) -> Result<(), FiltrationViolation> {
    let mut current = f.base.clone();
    for (j, step) in f.steps.iter().enumerate() {
        if current.contains(&step.w) {
            return Err(FiltrationViolation::StepInIdeal { step: j });
        }
        let colon = current.colon(&step.w);
        let matches = colon
            .as_prime()
            .is_some_and(|p| p.vars == step.prime.vars);
        if !matches {
            return Err(FiltrationViolation::ColonMismatch { step: j, colon });
        }
        current = current.plus(&step.w);
    }
    if !current.is_unit() {
        return Err(FiltrationViolation::NotUnitAtEnd);
    }
    Ok(())
}

/// Classification of a verified filtration. Clean implies pretty clean.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub clean: bool,
    pub pretty_clean: bool,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        if self.clean {
            "clean"
        } else if self.pretty_clean {
            "pretty-clean"
        } else {
            "neither"
        }
    }
}

/// Classify a filtration; the input must verify.
pub fn classify(f: &PrimeFiltration) -> Result<Classification, FiltrationError> {
    verify_filtration(f).map_err(FiltrationError::Invalid)?;
    let minimal: BTreeSet<VertexSet> =
        f.base.minimal_primes().into_iter().map(|p| p.vars).collect();
    let clean = f.steps.iter().all(|s| minimal.contains(&s.prime.vars));
    let mut pretty = true;
    for i in 0..f.steps.len() {
        for j in i + 1..f.steps.len() {
            let pi = f.steps[i].prime.vars;
            let pj = f.steps[j].prime.vars;
            if pi != pj && pi.is_subset(pj) {
                pretty = false;
            }
        }
    }
    // A clean filtration is pretty clean: minimal primes are incomparable.
    Ok(Classification { clean, pretty_clean: pretty || clean })
}

/// The clean filtration induced by a shelling: intervals of the induced
/// partition in reverse shelling order, each contributing the step
/// `(x_{R_i}, complement of G_i)`.
pub fn filtration_from_shelling(
    c: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<PrimeFiltration, FiltrationError> {
    if verify_shelling(c, order).is_err() {
        return Err(FiltrationError::Shelling(ShellingError::NotPermutation));
    }
    let partition = crate::shelling::shelling_to_partition(c, order)?;
    let n = c.n_vertices();
    let base = crate::ideal::stanley_reisner_ideal(c);
    let steps: Vec<FiltrationStep> = partition
        .intervals
        .iter()
        .rev()
        .map(|iv| FiltrationStep {
            w: Monomial::squarefree(iv.lower),
            prime: MonomialPrime { vars: iv.upper.complement_in(n) },
        })
        .collect();
    Ok(PrimeFiltration { base, steps })
}

/// Clean filtration of a monomial complete intersection, built as the
/// tensor composition of divisor chains: each generator contributes the
/// chain dividing its variables out one at a time, and the steps of the
/// composite run over tuples of chain positions in lexicographic order.
/// The step count is the product of the generator degrees, which is the
/// multiplicity.
pub fn clean_filtration_of_ci(ideal: &MonomialIdeal) -> Result<PrimeFiltration, FiltrationError> {
    if !is_regular_sequence(ideal.gens())? {
        return Err(FiltrationError::Ideal(IdealError::NotRegularSequence));
    }
    // Divisor chain of one generator: m_0 = g, each m_{l+1} = m_l / v for
    // the smallest variable still present; steps (m_{l+1}, (v)).
    struct FactorStep {
        w: Monomial,
        var: usize,
    }
    let factors: Vec<Vec<FactorStep>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut chain = Vec::new();
            let mut current = g.clone();
            while !current.is_unit() {
                let v = current.support().min_vertex().unwrap();
                let next = current.div_exact(&Monomial::var(v));
                chain.push(FactorStep { w: next.clone(), var: v });
                current = next;
            }
            chain
        })
        .collect();
    let mut steps = Vec::new();
    let mut index = alloc::vec![0usize; factors.len()];
    loop {
        let mut w = Monomial::unit();
        let mut vars = VertexSet::EMPTY;
        for (i, chain) in factors.iter().enumerate() {
            let st = &chain[index[i]];
            w = w.mul(&st.w);
            vars = vars.with(st.var);
        }
        steps.push(FiltrationStep { w, prime: MonomialPrime { vars } });
        // Lexicographic increment, first factor most significant.
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                return Ok(PrimeFiltration { base: ideal.clone(), steps });
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < factors[pos].len() {
                break;
            }
            index[pos] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive search for clean / pretty clean filtrations
// ---------------------------------------------------------------------------

/// Limits for the filtration search.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Cap on the number of candidate monomials (the divisor box).
    pub box_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { box_cap: 4096 }
    }
}

/// Result of a filtration search: the witness (if any) and how many
/// search nodes were expanded before returning.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub filtration: Option<PrimeFiltration>,
    pub nodes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SearchMode {
    Clean,
    PrettyClean,
}

struct FiltrationSearch {
    base: MonomialIdeal,
    /// All candidate step monomials (divisors of the per-variable
    /// max-degree box of the generators), in (degree, lex) order.
    boxed: Vec<Monomial>,
    minimal: BTreeSet<VertexSet>,
    mode: SearchMode,
    /// Memoized dead states: box-membership mask of the current ideal,
    /// plus (for the pretty-clean mode) the minimal earlier primes.
    failed: BTreeSet<(Vec<u64>, Vec<u128>)>,
    nodes: u64,
}

/// Specialized search for squarefree ideals. Candidate steps are the
/// faces of the complex; the current ideal is fully described by the
/// bitmask of faces still outside it, transitions clear the up-set of
/// the chosen face, and the memo key is that single `u128` word (plus
/// the minimal earlier primes in the pretty-clean mode).
struct SquarefreeSearch {
    n: usize,
    /// Faces of the complex in canonical order.
    faces: Vec<VertexSet>,
    /// `up_mask[i]`: faces containing `faces[i]`.
    up_mask: Vec<u128>,
    base_gens: Vec<VertexSet>,
    minimal: BTreeSet<VertexSet>,
    mode: SearchMode,
    failed: BTreeSet<(u128, Vec<u128>)>,
    nodes: u64,
}

impl SquarefreeSearch {
    fn new(
        ideal: &MonomialIdeal,
        mode: SearchMode,
    ) -> Result<SquarefreeSearch, FiltrationError> {
        let complex = stanley_reisner_complex(ideal)?;
        let faces = complex.all_faces();
        if faces.len() > 128 {
            return Err(FiltrationError::BoxCap { size: faces.len(), cap: 128 });
        }
        let up_mask: Vec<u128> = faces
            .iter()
            .map(|&f| {
                let mut m = 0u128;
                for (j, &g) in faces.iter().enumerate() {
                    if f.is_subset(g) {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect();
        Ok(SquarefreeSearch {
            n: ideal.n_vars(),
            faces,
            up_mask,
            base_gens: ideal.gens().iter().map(|g| g.support()).collect(),
            minimal: ideal.minimal_primes().into_iter().map(|p| p.vars).collect(),
            mode,
            failed: BTreeSet::new(),
            nodes: 0,
        })
    }

    fn face_bit(&self, f: VertexSet) -> Option<usize> {
        self.faces.binary_search(&f).ok()
    }

    /// Degree-one part of the colon at `x_F`: variables `v` with
    /// `F ∪ {v}` already in the current ideal (a non-face, or a face
    /// whose bit has been cleared).
    fn colon_vars(&self, f: VertexSet, remaining: u128) -> VertexSet {
        let mut vars = VertexSet::EMPTY;
        for v in 0..self.n {
            if f.contains(v) {
                continue;
            }
            let fv = f.with(v);
            let in_ideal = match self.face_bit(fv) {
                None => true,
                Some(bit) => remaining & (1 << bit) == 0,
            };
            if in_ideal {
                vars = vars.with(v);
            }
        }
        vars
    }

    /// The colon at `x_F` equals the prime on `vars` iff every generator
    /// of the current ideal loses all of `F` into `vars`.
    fn colon_is_prime(
        &self,
        f: VertexSet,
        vars: VertexSet,
        added: &[VertexSet],
    ) -> bool {
        self.base_gens.iter().chain(added.iter()).all(|g| !g.minus(f).is_disjoint(vars))
    }

    fn memo_key(&self, remaining: u128, earlier: &[VertexSet]) -> (u128, Vec<u128>) {
        let primes = match self.mode {
            SearchMode::Clean => Vec::new(),
            SearchMode::PrettyClean => {
                let mut min: Vec<u128> = earlier
                    .iter()
                    .filter(|&&p| !earlier.iter().any(|&q| q != p && q.is_subset(p)))
                    .map(|p| p.bits())
                    .collect();
                min.sort_unstable();
                min.dedup();
                min
            }
        };
        (remaining, primes)
    }

    fn dfs(
        &mut self,
        remaining: u128,
        added: &mut Vec<VertexSet>,
        earlier: &mut Vec<VertexSet>,
        steps: &mut Vec<FiltrationStep>,
    ) -> bool {
        if remaining == 0 {
            // All faces absorbed; in particular x_∅ = 1, so the chain has
            // reached the unit ideal.
            return true;
        }
        let key = self.memo_key(remaining, earlier);
        if self.failed.contains(&key) {
            return false;
        }
        self.nodes += 1;
        let mut rest = remaining;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let f = self.faces[bit];
            let vars = self.colon_vars(f, remaining);
            let admissible = match self.mode {
                SearchMode::Clean => self.minimal.contains(&vars),
                SearchMode::PrettyClean => {
                    !earlier.iter().any(|&p| p != vars && p.is_subset(vars))
                }
            };
            if !admissible || !self.colon_is_prime(f, vars, added) {
                continue;
            }
            added.push(f);
            earlier.push(vars);
            steps.push(FiltrationStep {
                w: Monomial::squarefree(f),
                prime: MonomialPrime { vars },
            });
            if self.dfs(remaining & !self.up_mask[bit], added, earlier, steps) {
                return true;
            }
            steps.pop();
            earlier.pop();
            added.pop();
        }
        self.failed.insert(key);
        false
    }
}

fn box_monomials(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>, FiltrationError> {
    let n = ideal.n_vars();
    let bound: Vec<u32> =
        (0..n).map(|v| ideal.gens().iter().map(|g| g.exponent(v)).max().unwrap_or(0)).collect();
    let size: usize = bound.iter().map(|&b| b as usize + 1).product();
    if size > cap {
        return Err(FiltrationError::BoxCap { size, cap });
    }
    let mut exps = alloc::vec![0u32; n];
    let mut out = Vec::with_capacity(size);
    loop {
        out.push(Monomial::from_exps(exps.iter().copied().enumerate()));
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return Ok(out);
            }
            exps[pos] += 1;
            if exps[pos] <= bound[pos] {
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
    // Unreachable: n = 0 yields exactly the unit monomial via the first
    // iteration and returns inside the increment loop.
}

impl FiltrationSearch {
    fn state_key(&self, current: &MonomialIdeal, earlier: &[VertexSet]) -> (Vec<u64>, Vec<u128>) {
        let mut mask = alloc::vec![0u64; (self.boxed.len() + 63) / 64];
        for (i, m) in self.boxed.iter().enumerate() {
            if !current.contains(m) {
                mask[i / 64] |= 1 << (i % 64);
            }
        }
        let primes = match self.mode {
            SearchMode::Clean => Vec::new(),
            SearchMode::PrettyClean => {
                // Only the inclusion-minimal earlier primes constrain the
                // future.
                let mut min: Vec<u128> = earlier
                    .iter()
                    .filter(|&&p| !earlier.iter().any(|&q| q != p && q.is_subset(p)))
                    .map(|p| p.bits())
                    .collect();
                min.sort_unstable();
                min.dedup();
                min
            }
        };
        (mask, primes)
    }

    fn dfs(
        &mut self,
        current: &MonomialIdeal,
        earlier: &mut Vec<VertexSet>,
        steps: &mut Vec<FiltrationStep>,
    ) -> bool {
        if current.is_unit() {
            return true;
        }
        let key = self.state_key(current, earlier);
        if self.failed.contains(&key) {
            return false;
        }
        self.nodes += 1;
        for idx in 0..self.boxed.len() {
            let w = self.boxed[idx].clone();
            if current.contains(&w) {
                continue;
            }
            let colon = current.colon(&w);
            let Some(prime) = colon.as_prime() else { continue };
            let admissible = match self.mode {
                SearchMode::Clean => self.minimal.contains(&prime.vars),
                SearchMode::PrettyClean => !earlier
                    .iter()
                    .any(|&p| p != prime.vars && p.is_subset(prime.vars)),
            };
            if !admissible {
                continue;
            }
            let next = current.plus(&w);
            earlier.push(prime.vars);
            steps.push(FiltrationStep { w, prime });
            if self.dfs(&next, earlier, steps) {
                return true;
            }
            steps.pop();
            earlier.pop();
        }
        self.failed.insert(key);
        false
    }
}

fn find_filtration(
    ideal: &MonomialIdeal,
    mode: SearchMode,
    limits: SearchLimits,
) -> Result<SearchOutcome, FiltrationError> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(FiltrationError::NotProper);
    }
    if ideal.is_squarefree() {
        let mut search = SquarefreeSearch::new(ideal, mode)?;
        let all = if search.faces.len() == 128 { !0u128 } else { (1u128 << search.faces.len()) - 1 };
        let mut added = Vec::new();
        let mut earlier = Vec::new();
        let mut steps = Vec::new();
        let found = search.dfs(all, &mut added, &mut earlier, &mut steps);
        return Ok(SearchOutcome {
            filtration: found.then(|| PrimeFiltration { base: ideal.clone(), steps }),
            nodes: search.nodes,
        });
    }
    let boxed = box_monomials(ideal, limits.box_cap)?;
    let minimal: BTreeSet<VertexSet> =
        ideal.minimal_primes().into_iter().map(|p| p.vars).collect();
    let mut search = FiltrationSearch {
        base: ideal.clone(),
        boxed,
        minimal,
        mode,
        failed: BTreeSet::new(),
        nodes: 0,
    };
    let mut earlier = Vec::new();
    let mut steps = Vec::new();
    let found = search.dfs(&search.base.clone(), &mut earlier, &mut steps);
    Ok(SearchOutcome {
        filtration: found.then(|| PrimeFiltration { base: ideal.clone(), steps }),
        nodes: search.nodes,
    })
}

/// Exhaustive search for a clean filtration; exact within the divisor
/// box of the generators. The first witness in the deterministic
/// candidate order is returned.
pub fn find_clean_filtration(
    ideal: &MonomialIdeal,
    limits: SearchLimits,
) -> Result<SearchOutcome, FiltrationError> {
    find_filtration(ideal, SearchMode::Clean, limits)
}

/// Exhaustive search for a pretty clean filtration, same contract.
pub fn find_pretty_clean_filtration(
    ideal: &MonomialIdeal,
    limits: SearchLimits,
) -> Result<SearchOutcome, FiltrationError> {
    find_filtration(ideal, SearchMode::PrettyClean, limits)
}

// ---------------------------------------------------------------------------
// Polarization route
// ---------------------------------------------------------------------------

/// Evidence for pretty cleanness via polarization: an ideal is pretty
/// clean iff its polarization is clean, and the polarization (being
/// squarefree) is clean iff its complex is shellable.
#[derive(Clone, Debug)]
pub struct PolarizationEvidence {
    pub polarization: Polarization,
    pub complex: SimplicialComplex,
    pub shelling: Option<ShellingOrder>,
    pub states: Option<u64>,
    pub clean_polarization: bool,
    pub pretty_clean: bool,
}

pub fn is_pretty_clean_via_polarization(
    ideal: &MonomialIdeal,
    facet_cap: usize,
) -> Result<PolarizationEvidence, FiltrationError> {
    let pol = polarize(ideal)?;
    let complex = stanley_reisner_complex(&pol.ideal)?;
    let (shelling, states, clean) = match is_shellable(&complex, facet_cap)? {
        ShellabilityOutcome::Shellable(order) => (Some(order), None, true),
        ShellabilityOutcome::NotShellable { states } => (None, Some(states), false),
    };
    Ok(PolarizationEvidence {
        polarization: pol,
        complex,
        shelling,
        states,
        clean_polarization: clean,
        pretty_clean: clean,
    })
}

/// The Stanley decomposition induced by a verified pretty clean
/// filtration: step `j` contributes `w_j K[variables outside P_j]`.
pub fn filtration_to_decomposition(
    f: &PrimeFiltration,
) -> Result<StanleyDecomposition, FiltrationError> {
    let class = classify(f)?;
    if !class.pretty_clean {
        return Err(FiltrationError::NotPrettyClean);
    }
    let n = f.base.n_vars();
    Ok(StanleyDecomposition {
        spaces: f
            .steps
            .iter()
            .map(|s| StanleySpace { u: s.w.clone(), z: s.prime.vars.complement_in(n) })
            .collect(),
    })
}

/// Transport a (pretty) clean filtration along the substitution
/// `y_j -> u_j` by a monomial regular sequence: each step `(w, P)` over
/// the source ring expands through the clean filtration of the complete
/// intersection `(u_i : y_i ∈ P)`, shifted by the image of `w`. The
/// output has one step per (step, local chain position) pair and
/// verifies and classifies at least as well as the input.
pub fn substitute_filtration(
    f: &PrimeFiltration,
    us: &[Monomial],
    target: &VarTable,
) -> Result<PrimeFiltration, FiltrationError> {
    verify_filtration(f).map_err(FiltrationError::Invalid)?;
    if us.len() != f.base.n_vars() {
        return Err(FiltrationError::Ideal(IdealError::WrongArity {
            expected: f.base.n_vars(),
            got: us.len(),
        }));
    }
    if !is_regular_sequence(us)? {
        return Err(FiltrationError::Ideal(IdealError::NotRegularSequence));
    }
    let base = crate::ideal::substitute(&f.base, us, target)?;
    let mut steps = Vec::new();
    for step in &f.steps {
        let w_image = substitute_monomial(&step.w, us);
        let ci_gens: Vec<Monomial> = step.prime.vars.iter().map(|y| us[y].clone()).collect();
        if ci_gens.is_empty() {
            // The zero prime: the quotient is the whole target ring.
            steps.push(FiltrationStep {
                w: w_image,
                prime: MonomialPrime { vars: VertexSet::EMPTY },
            });
            continue;
        }
        let ci = MonomialIdeal::new(target.clone(), ci_gens)?;
        let local = clean_filtration_of_ci(&ci)?;
        for lstep in local.steps {
            steps.push(FiltrationStep { w: w_image.mul(&lstep.w), prime: lstep.prime });
        }
    }
    Ok(PrimeFiltration { base, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::stanley_reisner_ideal;
    use crate::partitions::validate_decomposition;
    use crate::shelling::DEFAULT_FACET_CAP;

    fn ideal(n: usize, gens: &[&[(usize, u32)]]) -> MonomialIdeal {
        MonomialIdeal::new(
            VarTable::standard(n),
            gens.iter().map(|g| Monomial::from_exps(g.iter().copied())).collect(),
        )
        .unwrap()
    }

    fn complex(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists, n).unwrap()
    }

    fn step(w: Monomial, vars: &[usize]) -> FiltrationStep {
        FiltrationStep {
            w,
            prime: MonomialPrime { vars: VertexSet::from_iter(vars.iter().copied()) },
        }
    }

    #[test]
    fn canonical_edge_filtration_verifies() {
        // (x1x2): steps (x1, (x2)), (1, (x1)).
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let f = PrimeFiltration {
            base: i.clone(),
            steps: alloc::vec![step(Monomial::var(0), &[1]), step(Monomial::unit(), &[0])],
        };
        assert_eq!(verify_filtration(&f), Ok(()));
        let class = classify(&f).unwrap();
        assert!(class.clean && class.pretty_clean);

        // Reordered: w = 1 first makes the chain jump to the unit ideal
        // with the wrong colon.
        let bad = PrimeFiltration {
            base: i,
            steps: alloc::vec![step(Monomial::unit(), &[0]), step(Monomial::var(0), &[1])],
        };
        assert!(matches!(
            verify_filtration(&bad),
            Err(FiltrationViolation::ColonMismatch { step: 0, .. })
        ));
    }

    #[test]
    fn classification_examples() {
        // (x1^2, x1x2) with P-sequence (x1,x2) then (x1): pretty clean but
        // not clean (the first prime is embedded).
        let i = ideal(2, &[&[(0, 2)], &[(0, 1), (1, 1)]]);
        let pretty = PrimeFiltration {
            base: i.clone(),
            steps: alloc::vec![step(Monomial::var(0), &[0, 1]), step(Monomial::unit(), &[0])],
        };
        assert_eq!(verify_filtration(&pretty), Ok(()));
        let c = classify(&pretty).unwrap();
        assert!(!c.clean && c.pretty_clean);

        // With the embedded prime after a strictly smaller one: neither.
        let neither = PrimeFiltration {
            base: i,
            steps: alloc::vec![
                step(Monomial::var(1), &[0]),
                step(Monomial::var(0), &[0, 1]),
                step(Monomial::unit(), &[0, 1]),
            ],
        };
        assert_eq!(verify_filtration(&neither), Ok(()));
        let c2 = classify(&neither).unwrap();
        assert!(!c2.clean && !c2.pretty_clean);
        assert_eq!(c2.label(), "neither");
    }

    #[test]
    fn shelling_induced_filtration_is_clean() {
        let c = complex(&[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]], 5);
        let order = ShellingOrder {
            facets: [[0usize, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
                .iter()
                .map(|p| VertexSet::from_iter(p.iter().copied()))
                .collect(),
        };
        let f = filtration_from_shelling(&c, &order).unwrap();
        assert_eq!(verify_filtration(&f), Ok(()));
        assert!(classify(&f).unwrap().clean);
        assert_eq!(f.steps.len(), 5);
        // The induced decomposition is the one of the shelling partition.
        let d = filtration_to_decomposition(&f).unwrap();
        let ideal = stanley_reisner_ideal(&c);
        assert_eq!(validate_decomposition(&d, &ideal).unwrap(), Ok(()));
        assert_eq!(d.sdepth(), 2);
    }

    #[test]
    fn ci_filtration_steps_count_multiplicity() {
        // (x1^2, x2x3): 4 steps (= product of degrees), clean.
        let ci = ideal(3, &[&[(0, 2)], &[(1, 1), (2, 1)]]);
        let f = clean_filtration_of_ci(&ci).unwrap();
        assert_eq!(verify_filtration(&f), Ok(()));
        assert!(classify(&f).unwrap().clean);
        assert_eq!(f.steps.len() as i64, ci.multiplicity().unwrap());

        // A single squared variable gives the two-step chain.
        let sq = ideal(1, &[&[(0, 2)]]);
        let fsq = clean_filtration_of_ci(&sq).unwrap();
        assert_eq!(fsq.steps.len(), 2);
        assert_eq!(verify_filtration(&fsq), Ok(()));
    }

    #[test]
    fn ci_filtration_rejects_non_regular() {
        let i = ideal(3, &[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]]);
        assert!(clean_filtration_of_ci(&i).is_err());
    }

    #[test]
    fn clean_search_finds_path_filtration() {
        // (x1x3): the path complex 1-2-3 is shellable, so a clean
        // filtration exists.
        let i = ideal(3, &[&[(0, 1), (2, 1)]]);
        let out = find_clean_filtration(&i, SearchLimits::default()).unwrap();
        let f = out.filtration.expect("clean filtration exists");
        assert_eq!(verify_filtration(&f), Ok(()));
        assert!(classify(&f).unwrap().clean);
    }

    #[test]
    fn clean_search_exhausts_on_disjoint_edges() {
        // (x1x2, x3x4)'s complex is two disjoint edges: not shellable,
        // hence not clean; the memoized search proves it by exhaustion.
        let sr = stanley_reisner_ideal(&complex(&[&[0, 1], &[2, 3]], 4));
        let out = find_clean_filtration(&sr, SearchLimits::default()).unwrap();
        assert!(out.filtration.is_none());
        assert!(out.nodes > 0);
    }

    #[test]
    fn pretty_search_succeeds_where_clean_fails() {
        // (x1^2, x1x2) has an embedded prime, so it cannot be clean, but
        // a pretty clean filtration exists.
        let i = ideal(2, &[&[(0, 2)], &[(0, 1), (1, 1)]]);
        let clean = find_clean_filtration(&i, SearchLimits::default()).unwrap();
        assert!(clean.filtration.is_none());
        let pretty = find_pretty_clean_filtration(&i, SearchLimits::default()).unwrap();
        let f = pretty.filtration.expect("pretty clean filtration exists");
        let c = classify(&f).unwrap();
        assert!(c.pretty_clean && !c.clean);
    }

    #[test]
    fn pretty_search_on_mixed_ideal() {
        // (x1x2, x2x3^2): its polarization complex is shellable.
        let i = ideal(3, &[&[(0, 1), (1, 1)], &[(1, 1), (2, 2)]]);
        let out = find_pretty_clean_filtration(&i, SearchLimits::default()).unwrap();
        let f = out.filtration.expect("pretty clean filtration exists");
        assert_eq!(verify_filtration(&f), Ok(()));
        assert!(classify(&f).unwrap().pretty_clean);
    }

    #[test]
    fn polarization_route_examples() {
        // A complete intersection is pretty clean.
        let ci = ideal(3, &[&[(0, 2)], &[(1, 1), (2, 1)]]);
        let ev = is_pretty_clean_via_polarization(&ci, DEFAULT_FACET_CAP).unwrap();
        assert!(ev.pretty_clean);
        assert!(ev.shelling.is_some());

        // Two disjoint edges: squarefree, its own polarization, and not
        // shellable, hence not pretty clean by this route.
        let sr = stanley_reisner_ideal(&complex(&[&[0, 1], &[2, 3]], 4));
        let ev2 = is_pretty_clean_via_polarization(&sr, DEFAULT_FACET_CAP).unwrap();
        assert!(!ev2.pretty_clean);
        assert_eq!(ev2.polarization.added, 0);
    }

    #[test]
    fn edge_filtration_decomposition() {
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let f = PrimeFiltration {
            base: i.clone(),
            steps: alloc::vec![step(Monomial::var(0), &[1]), step(Monomial::unit(), &[0])],
        };
        let d = filtration_to_decomposition(&f).unwrap();
        // x1 K[x1] ⊕ K[x2].
        assert_eq!(d.spaces.len(), 2);
        assert_eq!(d.sdepth(), 1);
        assert_eq!(validate_decomposition(&d, &i).unwrap(), Ok(()));
    }

    #[test]
    fn substitute_filtration_identity() {
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let f = PrimeFiltration {
            base: i.clone(),
            steps: alloc::vec![step(Monomial::var(0), &[1]), step(Monomial::unit(), &[0])],
        };
        let us = alloc::vec![Monomial::var(0), Monomial::var(1)];
        let g = substitute_filtration(&f, &us, i.vars()).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn substitute_filtration_expands_ci_steps() {
        // (y1 y2) under u = (x1x2, x3^2): the two steps expand into the
        // local chains of (x3^2) and (x1x2) respectively.
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let f = PrimeFiltration {
            base: i.clone(),
            steps: alloc::vec![step(Monomial::var(0), &[1]), step(Monomial::unit(), &[0])],
        };
        let us = alloc::vec![
            Monomial::from_exps([(0, 1), (1, 1)]),
            Monomial::from_exps([(2, 2)]),
        ];
        let target = VarTable::standard(3);
        let g = substitute_filtration(&f, &us, &target).unwrap();
        assert_eq!(verify_filtration(&g), Ok(()));
        let class = classify(&g).unwrap();
        assert!(class.clean);
        // Lengths: step 1 expands to deg(x3^2) = 2, step 2 to deg(x1x2) = 2.
        assert_eq!(g.steps.len(), 4);
        // The decomposition certifies the image ideal.
        let d = filtration_to_decomposition(&g).unwrap();
        assert_eq!(validate_decomposition(&d, &g.base).unwrap(), Ok(()));
    }
}
