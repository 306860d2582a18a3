//! Monomials, monomial ideals, monomial primes, and the Stanley-Reisner
//! bridge between squarefree ideals and simplicial complexes.
//!
//! Ideals are kept minimalized (pairwise non-dividing generators) and in a
//! canonical (degree, then lex) order, so equal ideals compare equal. The
//! zero ideal has no generators; the unit ideal is generated by `1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealError {
    /// Operands live in different ambient rings.
    AmbientMismatch,
    /// A squarefree ideal was required.
    NotSquarefree,
    /// A unit monomial where a nonunit was required.
    UnitMonomial,
    /// The given monomials do not form a regular sequence.
    NotRegularSequence,
    /// Variable id out of range for the ambient ring.
    VarOutOfRange { var: usize, n: usize },
    /// Ambient ring wider than the bitset cap.
    TooManyVars { n: usize },
    /// Substitution arity does not match the source ring.
    WrongArity { expected: usize, got: usize },
    Complex(ComplexError),
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::AmbientMismatch => write!(f, "ambient rings differ"),
            IdealError::NotSquarefree => write!(f, "ideal is not squarefree"),
            IdealError::UnitMonomial => write!(f, "unit monomial not allowed here"),
            IdealError::NotRegularSequence => {
                write!(f, "monomials do not form a regular sequence")
            }
            IdealError::VarOutOfRange { var, n } => {
                write!(f, "variable id {var} out of range for ring with {n} variables")
            }
            IdealError::TooManyVars { n } => {
                write!(f, "{n} variables exceeds the supported maximum {MAX_VERTICES}")
            }
            IdealError::WrongArity { expected, got } => {
                write!(f, "substitution expects {expected} monomials, got {got}")
            }
            IdealError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl From<ComplexError> for IdealError {
    fn from(e: ComplexError) -> Self {
        IdealError::Complex(e)
    }
}

/// Ambient polynomial ring: just the variable display names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarTable(pub Vec<String>);

impl VarTable {
    pub fn standard(n: usize) -> VarTable {
        VarTable((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn named(prefix: &str, n: usize) -> VarTable {
        VarTable((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.0[v]
    }
}

/// A monomial as a sparse exponent vector; no zero exponents are stored,
/// so the unit monomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: usize) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_exps<I: IntoIterator<Item = (usize, u32)>>(exps: I) -> Monomial {
        let mut m: Vec<(usize, u32)> = exps.into_iter().filter(|&(_, e)| e > 0).collect();
        m.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(usize, u32)> = Vec::new();
        for (v, e) in m {
            match out.last_mut() {
                Some((w, acc)) if *w == v => *acc += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { exps: out }
    }

    /// `x_F` for a vertex set `F`.
    pub fn squarefree(f: VertexSet) -> Monomial {
        Monomial { exps: f.iter().map(|v| (v, 1)).collect() }
    }

    pub fn exps(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_iter(self.exps.iter().map(|&(v, _)| v))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial::squarefree(self.support())
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(self.exps.iter().chain(other.exps.iter()).copied())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_exps(self.exps.iter().map(|&(v, e)| (v, e * k)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps.iter().map(|&(v, e)| (v, e.min(other.exponent(v)))),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<usize> = self
            .exps
            .iter()
            .map(|&(v, _)| v)
            .chain(other.exps.iter().map(|&(v, _)| v))
            .collect();
        Monomial::from_exps(
            vars.into_iter().map(|v| (v, self.exponent(v).max(other.exponent(v)))),
        )
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::from_exps(self.exps.iter().map(|&(v, e)| (v, e - other.exponent(v))))
    }

    /// `self / gcd(self, other)`, the colon quotient of one generator.
    pub fn colon_by(&self, other: &Monomial) -> Monomial {
        self.div_exact(&self.gcd(other))
    }

    /// Display against a variable table, e.g. `x1^2*x3`; the unit is `1`.
    pub fn to_string_with(&self, vars: &VarTable) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(vars.label(v));
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        s
    }
}

/// Canonical order: total degree, then lexicographic with the earlier
/// variable's higher power first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut i = 0;
            let mut j = 0;
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return core::cmp::Ordering::Equal,
                    // The one still holding a variable has the earlier
                    // variable with positive power => lex-bigger start.
                    (Some(_), None) => return core::cmp::Ordering::Less,
                    (None, Some(_)) => return core::cmp::Ordering::Greater,
                    (Some(&(v1, e1)), Some(&(v2, e2))) => {
                        if v1 != v2 {
                            // Smaller variable id has positive exponent only
                            // on one side; that side is lex-earlier.
                            return if v1 < v2 {
                                core::cmp::Ordering::Less
                            } else {
                                core::cmp::Ordering::Greater
                            };
                        }
                        if e1 != e2 {
                            return e2.cmp(&e1);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial prime ideal `(x_i : i ∈ vars)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MonomialPrime {
    pub vars: VertexSet,
}

impl MonomialPrime {
    pub fn height(&self) -> usize {
        self.vars.card()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        !m.support().is_disjoint(self.vars)
    }
}

/// A monomial ideal given by its minimal generating set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    vars: VarTable,
    gens: Vec<Monomial>,
}

/// Drop generators divisible by another; sort canonically.
fn minimalize_gens(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in &gens {
        if !out.iter().any(|h| h.divides(g)) {
            out.push(g.clone());
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(vars: VarTable, gens: Vec<Monomial>) -> Result<MonomialIdeal, IdealError> {
        let n = vars.len();
        if n > MAX_VERTICES {
            return Err(IdealError::TooManyVars { n });
        }
        for g in &gens {
            if let Some(v) = g.max_var() {
                if v >= n {
                    return Err(IdealError::VarOutOfRange { var: v, n });
                }
            }
        }
        Ok(MonomialIdeal { vars, gens: minimalize_gens(gens) })
    }

    pub fn zero(vars: VarTable) -> MonomialIdeal {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: VarTable) -> MonomialIdeal {
        MonomialIdeal { vars, gens: vec![Monomial::unit()] }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_unit())
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Membership: divisibility by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_prime_gens(&self, p: &MonomialPrime) -> bool {
        // I ⊆ P iff every generator has support meeting P.
        self.gens.iter().all(|g| p.contains_monomial(g))
    }

    /// `(I : u)`, minimalized.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon_by(u)).collect();
        MonomialIdeal { vars: self.vars.clone(), gens: minimalize_gens(gens) }
    }

    /// `I + (u)`, minimalized.
    pub fn plus(&self, u: &Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(u.clone());
        MonomialIdeal { vars: self.vars.clone(), gens: minimalize_gens(gens) }
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.squarefree_part()).collect();
        MonomialIdeal { vars: self.vars.clone(), gens: minimalize_gens(gens) }
    }

    /// If the colon-style set of generators is exactly a set of variables,
    /// return the corresponding prime.
    pub fn as_prime(&self) -> Option<MonomialPrime> {
        if self.gens.iter().all(|g| g.degree() == 1) {
            Some(MonomialPrime {
                vars: VertexSet::from_iter(self.gens.iter().map(|g| g.max_var().unwrap())),
            })
        } else {
            None
        }
    }

    /// Minimal primes: minimal hitting sets of the generator supports
    /// (splitting recursion on the radical).
    pub fn minimal_primes(&self) -> Vec<MonomialPrime> {
        let mut supports: Vec<VertexSet> = self.gens.iter().map(|g| g.support()).collect();
        if supports.iter().any(|s| s.is_empty()) {
            // Unit ideal: no primes contain it.
            return Vec::new();
        }
        // Keep inclusion-minimal supports: hitting a subset hits the set.
        supports = min_sets(&supports);
        supports.sort();
        let mut acc: BTreeSet<VertexSet> = BTreeSet::new();
        let mut current = VertexSet::EMPTY;
        min_covers_rec(&supports, &mut current, &mut acc);
        // Filter to inclusion-minimal covers.
        let covers: Vec<VertexSet> = acc.iter().copied().collect();
        let minimal: Vec<VertexSet> = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&o| o != c && o.is_subset(c)))
            .copied()
            .collect();
        minimal.into_iter().map(|vars| MonomialPrime { vars }).collect()
    }

    /// Krull dimension of `S/I`; `None` for the unit ideal (zero ring).
    pub fn krull_dim(&self) -> Option<i64> {
        if self.is_unit() {
            return None;
        }
        let n = self.n_vars() as i64;
        if self.is_zero() {
            return Some(n);
        }
        self.minimal_primes().iter().map(|p| n - p.height() as i64).max()
    }

    /// Multiplicity of `S/I`: sum over top-dimensional minimal primes of the
    /// local staircase length.
    pub fn multiplicity(&self) -> Option<i64> {
        if self.is_unit() {
            return None;
        }
        if self.is_zero() {
            return Some(1);
        }
        let n = self.n_vars() as i64;
        let dim = self.krull_dim().unwrap();
        let mut e = 0i64;
        for p in self.minimal_primes() {
            if n - p.height() as i64 != dim {
                continue;
            }
            e += self.local_length_at(&p);
        }
        Some(e)
    }

    /// Length of the localization at a minimal prime: the number of standard
    /// monomials of the ideal obtained by setting all variables outside `p`
    /// to 1.
    fn local_length_at(&self, p: &MonomialPrime) -> i64 {
        let restricted: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_exps(
                    g.exps().iter().copied().filter(|&(v, _)| p.vars.contains(v)),
                )
            })
            .collect();
        let restricted = minimalize_gens(restricted);
        let pvars: Vec<usize> = p.vars.to_vec();
        let bound: Vec<u32> = pvars
            .iter()
            .map(|&v| restricted.iter().map(|g| g.exponent(v)).max().unwrap_or(0))
            .collect();
        // Standard monomials live strictly under the componentwise max box.
        let mut count = 0i64;
        let mut exps = vec![0u32; pvars.len()];
        loop {
            let m = Monomial::from_exps(
                pvars.iter().copied().zip(exps.iter().copied()),
            );
            if !restricted.iter().any(|g| g.divides(&m)) {
                count += 1;
            }
            // Mixed-radix increment over the box.
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return count;
                }
                exps[i] += 1;
                if exps[i] < bound[i].max(1) {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    pub fn gens_string(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with(&self.vars)).collect()
    }
}

fn min_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    sets.iter()
        .filter(|&&s| !sets.iter().any(|&o| o != s && o.is_subset(s)))
        .copied()
        .collect()
}

fn min_covers_rec(supports: &[VertexSet], current: &mut VertexSet, acc: &mut BTreeSet<VertexSet>) {
    match supports.iter().find(|s| s.is_disjoint(*current)) {
        None => {
            acc.insert(*current);
        }
        Some(&s) => {
            for v in s.iter() {
                let saved = *current;
                *current = current.with(v);
                min_covers_rec(supports, current, acc);
                *current = saved;
            }
        }
    }
}

/// `supp(u)` as a vertex set.
pub fn support(u: &Monomial) -> VertexSet {
    u.support()
}

/// Monomials form a regular sequence iff none is a unit and their supports
/// are pairwise disjoint.
pub fn is_regular_sequence(us: &[Monomial]) -> Result<bool, IdealError> {
    if us.iter().any(|u| u.is_unit()) {
        return Err(IdealError::UnitMonomial);
    }
    let mut seen = VertexSet::EMPTY;
    for u in us {
        let s = u.support();
        if !s.is_disjoint(seen) {
            return Ok(false);
        }
        seen = seen.union(s);
    }
    Ok(true)
}

/// The Stanley-Reisner ideal of a complex: generated by the monomials of
/// the minimal non-faces. Vertex labels become variable labels.
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    let gens: Vec<Monomial> =
        c.minimal_nonfaces().into_iter().map(Monomial::squarefree).collect();
    MonomialIdeal {
        vars: VarTable(c.labels().to_vec()),
        gens: minimalize_gens(gens),
    }
}

/// The complex of a squarefree ideal: facets are the complements of the
/// minimal primes.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex, IdealError> {
    if !ideal.is_squarefree() {
        return Err(IdealError::NotSquarefree);
    }
    let n = ideal.n_vars();
    let facets: Vec<VertexSet> =
        ideal.minimal_primes().iter().map(|p| p.vars.complement_in(n)).collect();
    let c = SimplicialComplex::from_facets(&facets, n)?;
    Ok(c.with_labels(ideal.vars.0.clone())?)
}

/// Result of polarization: the squarefree ideal, the map from original
/// variables to their polarized copies, and how many variables were added.
#[derive(Clone, Debug)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `var_map[i]` lists the polarized ids standing for `x_i`.
    pub var_map: Vec<Vec<usize>>,
    pub added: usize,
}

/// Standard polarization `x_i^a -> x_{i,1} ... x_{i,a}`; each variable gets
/// as many copies as its maximal exponent over the generators (at least 1).
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization, IdealError> {
    let n = ideal.n_vars();
    let width: Vec<u32> = (0..n)
        .map(|v| ideal.gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0).max(1))
        .collect();
    let total: usize = width.iter().map(|&w| w as usize).sum();
    if total > MAX_VERTICES {
        return Err(IdealError::TooManyVars { n: total });
    }
    let mut var_map: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut labels: Vec<String> = Vec::with_capacity(total);
    let mut next = 0usize;
    for v in 0..n {
        let w = width[v] as usize;
        let ids: Vec<usize> = (next..next + w).collect();
        if w == 1 {
            labels.push(ideal.vars.label(v).to_string());
        } else {
            for k in 1..=w {
                labels.push(format!("{}_{k}", ideal.vars.label(v)));
            }
        }
        var_map.push(ids);
        next += w;
    }
    let gens: Vec<Monomial> = ideal
        .gens
        .iter()
        .map(|g| {
            let mut exps: Vec<(usize, u32)> = Vec::new();
            for &(v, e) in g.exps() {
                for k in 0..e as usize {
                    exps.push((var_map[v][k], 1));
                }
            }
            Monomial::from_exps(exps)
        })
        .collect();
    Ok(Polarization {
        ideal: MonomialIdeal { vars: VarTable(labels), gens: minimalize_gens(gens) },
        var_map,
        added: total - n,
    })
}

/// Collapse polarized variables back: `x_{i,k} -> x_i`.
pub fn depolarize_monomial(m: &Monomial, var_map: &[Vec<usize>]) -> Monomial {
    let mut exps: Vec<(usize, u32)> = Vec::new();
    for (orig, ids) in var_map.iter().enumerate() {
        let e: u32 = ids.iter().map(|&id| m.exponent(id)).sum();
        if e > 0 {
            exps.push((orig, e));
        }
    }
    Monomial::from_exps(exps)
}

/// Image of `ideal` (over `y_1..y_r`) under `y_j -> u_j`, minimalized.
/// The `u_j` must form a regular sequence of monomials in the target ring.
pub fn substitute(
    ideal: &MonomialIdeal,
    us: &[Monomial],
    target: &VarTable,
) -> Result<MonomialIdeal, IdealError> {
    if us.len() != ideal.n_vars() {
        return Err(IdealError::WrongArity { expected: ideal.n_vars(), got: us.len() });
    }
    if !is_regular_sequence(us)? {
        return Err(IdealError::NotRegularSequence);
    }
    let gens: Vec<Monomial> = ideal.gens.iter().map(|g| substitute_monomial(g, us)).collect();
    MonomialIdeal::new(target.clone(), gens)
}

pub fn substitute_monomial(m: &Monomial, us: &[Monomial]) -> Monomial {
    let mut out = Monomial::unit();
    for &(v, e) in m.exps() {
        out = out.mul(&us[v].pow(e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[(usize, u32)]]) -> MonomialIdeal {
        MonomialIdeal::new(
            VarTable::standard(n),
            gens.iter().map(|g| Monomial::from_exps(g.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(3, &[&[(0, 1), (1, 1)], &[(0, 2), (1, 1)], &[(2, 1)]]);
        assert_eq!(i.gens().len(), 2);
        assert!(i.contains(&Monomial::from_exps([(0, 2), (1, 1)])));
    }

    #[test]
    fn contains_is_divisibility() {
        // x1^2*x2 ∈ (x1x2).
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        assert!(i.contains(&Monomial::from_exps([(0, 2), (1, 1)])));
        assert!(!i.contains(&Monomial::from_exps([(0, 5)])));
    }

    #[test]
    fn contains_brute_force_small() {
        // Divisibility vs explicit membership on all monomials with
        // exponents <= 4 in <= 4 variables, for a bundle of ideals.
        let ideals = [
            ideal(4, &[&[(0, 1), (1, 1)], &[(2, 3)]]),
            ideal(4, &[&[(0, 2)], &[(1, 1), (2, 1), (3, 1)]]),
            ideal(4, &[&[(0, 1)], &[(1, 2)], &[(2, 2), (3, 2)]]),
        ];
        for i in &ideals {
            for a in 0..=4u32 {
                for b in 0..=4u32 {
                    for c in 0..=4u32 {
                        for d in 0..=4u32 {
                            let m = Monomial::from_exps([(0, a), (1, b), (2, c), (3, d)]);
                            // Oracle: m ∈ I iff m is a monomial multiple of a
                            // generator, checked by explicit quotient scan.
                            let oracle = i.gens().iter().any(|g| {
                                g.exps().iter().all(|&(v, e)| m.exponent(v) >= e)
                            });
                            assert_eq!(i.contains(&m), oracle);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn colon_examples() {
        // (x1x2, x2x3^2) : x2 = (x1, x3^2).
        let i = ideal(3, &[&[(0, 1), (1, 1)], &[(1, 1), (2, 2)]]);
        let q = i.colon(&Monomial::var(1));
        assert_eq!(
            q.gens(),
            &[Monomial::var(0), Monomial::from_exps([(2, 2)])]
        );
        // Colon by 1 is the identity.
        assert_eq!(i.colon(&Monomial::unit()), i);
    }

    #[test]
    fn regular_sequence_is_disjoint_support() {
        let u1 = Monomial::from_exps([(0, 1), (1, 1)]);
        let u2 = Monomial::var(2);
        let u3 = Monomial::from_exps([(3, 1), (4, 2)]);
        assert!(is_regular_sequence(&[u1.clone(), u2.clone(), u3]).unwrap());
        let v = Monomial::from_exps([(1, 1), (2, 1)]);
        assert!(!is_regular_sequence(&[u1, v]).unwrap());
        assert_eq!(
            is_regular_sequence(&[Monomial::unit()]).unwrap_err(),
            IdealError::UnitMonomial
        );
    }

    #[test]
    fn support_example() {
        let m = Monomial::from_exps([(0, 2), (2, 1)]);
        assert_eq!(m.support(), VertexSet::from_iter([0, 2]));
    }

    #[test]
    fn minimal_primes_small() {
        // (x1x2) -> {(x1), (x2)}.
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let primes = i.minimal_primes();
        assert_eq!(primes.len(), 2);
        // (x1^2 x2) -> radical split -> {(x1), (x2)}.
        let j = ideal(2, &[&[(0, 2), (1, 1)]]);
        assert_eq!(j.minimal_primes(), primes);
    }

    #[test]
    fn minimal_primes_brute_force() {
        // Every prime from the 2^n sweep containing I contains a listed one,
        // and listed ones are pairwise incomparable primes containing I.
        let ideals = [
            ideal(5, &[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)], &[(3, 2)]]),
            ideal(5, &[&[(0, 1), (2, 1), (4, 1)], &[(1, 1), (3, 1)]]),
            ideal(4, &[&[(0, 2)], &[(1, 1), (2, 1)]]),
        ];
        for i in &ideals {
            let primes = i.minimal_primes();
            for p in &primes {
                assert!(i.contains_prime_gens(p));
            }
            for a in &primes {
                for b in &primes {
                    if a != b {
                        assert!(!a.vars.is_subset(b.vars));
                    }
                }
            }
            let n = i.n_vars();
            for mask in 0u32..(1 << n) {
                let vars = VertexSet::from_bits(mask as u128);
                let p = MonomialPrime { vars };
                if i.contains_prime_gens(&p) {
                    assert!(
                        primes.iter().any(|q| q.vars.is_subset(vars)),
                        "prime {vars:?} misses all minimal primes"
                    );
                }
            }
        }
    }

    #[test]
    fn stanley_reisner_round_trip_small() {
        // All complexes on up to 4 vertices: downsets generated by facet
        // subsets; round-trip ideal <-> complex is the identity.
        let n = 4;
        let all_subsets = VertexSet::full(n).subsets();
        // Enumerate antichains by brute force over families of subsets.
        // 2^16 families is fine at n=4 if we filter quickly.
        for mask in 0u32..(1 << all_subsets.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let family: Vec<VertexSet> = (0..all_subsets.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| all_subsets[i])
                .collect();
            let c = SimplicialComplex::from_facets(&family, n).unwrap();
            let i = stanley_reisner_ideal(&c);
            let back = stanley_reisner_complex(&i).unwrap();
            assert_eq!(back.facets(), c.facets(), "round trip fails for {family:?}");
        }
    }

    #[test]
    fn cyclic_ideal_gives_pentagon_complex() {
        // (x1x2, x2x3, x3x4, x4x5, x5x1): complex = independence complex of
        // the 5-cycle, facets {13,14,24,25,35}.
        let gens: Vec<&[(usize, u32)]> = vec![
            &[(0, 1), (1, 1)],
            &[(1, 1), (2, 1)],
            &[(2, 1), (3, 1)],
            &[(3, 1), (4, 1)],
            &[(4, 1), (0, 1)],
        ];
        let i = ideal(5, &gens);
        let c = stanley_reisner_complex(&i).unwrap();
        let expect: Vec<VertexSet> = [
            [0usize, 2],
            [0, 3],
            [1, 3],
            [1, 4],
            [2, 4],
        ]
        .iter()
        .map(|p| VertexSet::from_iter(p.iter().copied()))
        .collect();
        let mut sorted = expect.clone();
        sorted.sort();
        assert_eq!(c.facets(), sorted.as_slice());
        assert_eq!(stanley_reisner_ideal(&c), i);
    }

    #[test]
    fn polarize_examples() {
        // (x1^2) -> (x1_1 x1_2), one variable added.
        let i = ideal(1, &[&[(0, 2)]]);
        let p = polarize(&i).unwrap();
        assert_eq!(p.added, 1);
        assert!(p.ideal.is_squarefree());
        assert_eq!(p.ideal.gens().len(), 1);
        assert_eq!(p.ideal.gens()[0].degree(), 2);

        // Squarefree ideals are fixed points.
        let j = ideal(3, &[&[(0, 1), (1, 1)], &[(2, 1)]]);
        let pj = polarize(&j).unwrap();
        assert_eq!(pj.added, 0);
        assert_eq!(pj.ideal.gens(), j.gens());

        // (x1^2 x2, x2^2) -> (x1_1 x1_2 x2_1, x2_1 x2_2), 2 added.
        let k = ideal(2, &[&[(0, 2), (1, 1)], &[(1, 2)]]);
        let pk = polarize(&k).unwrap();
        assert_eq!(pk.added, 2);
        assert!(pk.ideal.is_squarefree());
        // Depolarizing recovers the original generators.
        let back: Vec<Monomial> = pk
            .ideal
            .gens()
            .iter()
            .map(|g| depolarize_monomial(g, &pk.var_map))
            .collect();
        assert_eq!(minimalize_gens(back), k.gens().to_vec());
    }

    #[test]
    fn substitute_examples() {
        // Identity substitution is the identity.
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        let id = substitute(
            &i,
            &[Monomial::var(0), Monomial::var(1)],
            &VarTable::standard(2),
        )
        .unwrap();
        assert_eq!(id, i);

        // (y1y2) under u = (x1x2, x3^2) -> (x1x2x3^2).
        let s = substitute(
            &i,
            &[Monomial::from_exps([(0, 1), (1, 1)]), Monomial::from_exps([(2, 2)])],
            &VarTable::standard(3),
        )
        .unwrap();
        assert_eq!(s.gens(), &[Monomial::from_exps([(0, 1), (1, 1), (2, 2)])]);

        // Non-regular sequences are rejected.
        let err = substitute(
            &i,
            &[Monomial::var(0), Monomial::var(0)],
            &VarTable::standard(2),
        )
        .unwrap_err();
        assert_eq!(err, IdealError::NotRegularSequence);
    }

    #[test]
    fn substitute_preserves_generator_count() {
        let i = ideal(3, &[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)], &[(0, 1), (2, 1)]]);
        let us = [
            Monomial::from_exps([(0, 2)]),
            Monomial::from_exps([(1, 1), (2, 1)]),
            Monomial::from_exps([(3, 1)]),
        ];
        let s = substitute(&i, &us, &VarTable::standard(4)).unwrap();
        assert_eq!(s.gens().len(), i.gens().len());
    }

    #[test]
    fn krull_dim_and_multiplicity() {
        // (x1x2) in 2 vars: dim 1, e = 2 (two minimal primes, reduced).
        let i = ideal(2, &[&[(0, 1), (1, 1)]]);
        assert_eq!(i.krull_dim(), Some(1));
        assert_eq!(i.multiplicity(), Some(2));

        // Complete intersection (x1^2, x2x3): e = product of degrees = 4.
        let ci = ideal(3, &[&[(0, 2)], &[(1, 1), (2, 1)]]);
        assert_eq!(ci.krull_dim(), Some(1));
        assert_eq!(ci.multiplicity(), Some(4));

        // Unit and zero ideals.
        assert_eq!(MonomialIdeal::unit(VarTable::standard(2)).krull_dim(), None);
        assert_eq!(MonomialIdeal::zero(VarTable::standard(2)).krull_dim(), Some(2));
        assert_eq!(MonomialIdeal::zero(VarTable::standard(2)).multiplicity(), Some(1));
    }

    #[test]
    fn monomial_order_degree_then_lex() {
        let a = Monomial::var(0);
        let b = Monomial::var(1);
        let ab = a.mul(&b);
        let a2 = Monomial::from_exps([(0, 2)]);
        assert!(a < b);
        assert!(b < a2);
        assert!(a2 < ab);
    }
}
