//! Codimension-3 Gorenstein monomial structure: the cyclic window
//! template, its facet characterization by triples, the lexicographic
//! shelling with an explicit exchange witness for every facet pair, and
//! recognition of ideals of this shape.
//!
//! The template on `2m+1` variables is generated by the cyclic window
//! products `y_i y_{i+1} ... y_{i+m-1}`. Facets of its complex are the
//! complements of the triples `(a_1, a_2, a_3)` with
//! `a_2 - a_1 < m+1`, `a_3 - a_2 < m+1`, `a_3 - a_1 > m`,
//! and the lexicographic facet order is a shelling; `shelling_witness`
//! realizes the exchange condition by an explicit case analysis over the
//! interleaving patterns of two triples and is total over all comparable
//! pairs (checked exhaustively in the tests).

use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::ideal::{
    is_regular_sequence, stanley_reisner_complex, substitute, IdealError, Monomial, MonomialIdeal,
    VarTable,
};
use crate::shelling::ShellingOrder;
use crate::vset::{Face, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinError {
    BadParameter { m: u32 },
    Ideal(IdealError),
    /// The case analysis did not match; must be unreachable for valid
    /// comparable facet pairs.
    CaseFallThrough { f: FacetTriple, g: FacetTriple },
    /// The pair is not comparable the right way around.
    NotLexLess { f: FacetTriple, g: FacetTriple },
}

impl fmt::Display for GorensteinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GorensteinError::BadParameter { m } => write!(f, "parameter m={m} must be >= 1"),
            GorensteinError::Ideal(e) => write!(f, "{e}"),
            GorensteinError::CaseFallThrough { f: a, g: b } => {
                write!(f, "exchange case analysis fell through on {a:?} < {b:?}")
            }
            GorensteinError::NotLexLess { f: a, g: b } => {
                write!(f, "{a:?} is not lexicographically before {b:?}")
            }
        }
    }
}

impl From<IdealError> for GorensteinError {
    fn from(e: IdealError) -> Self {
        GorensteinError::Ideal(e)
    }
}

/// The facet `[2m+1] \ {a_1, a_2, a_3}` of the template complex, stored by
/// its removed triple (1-indexed values).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FacetTriple {
    pub a: [u32; 3],
    pub m: u32,
}

impl FacetTriple {
    pub fn new(a1: u32, a2: u32, a3: u32, m: u32) -> Option<FacetTriple> {
        let n = 2 * m + 1;
        let valid = a1 >= 1
            && a1 < a2
            && a2 < a3
            && a3 <= n
            && a2 - a1 < m + 1
            && a3 - a2 < m + 1
            && a3 - a1 > m;
        valid.then_some(FacetTriple { a: [a1, a2, a3], m })
    }

    fn from_sorted(mut vals: [u32; 3], m: u32) -> Option<FacetTriple> {
        vals.sort_unstable();
        FacetTriple::new(vals[0], vals[1], vals[2], m)
    }

    /// The facet as a 0-indexed vertex set.
    pub fn facet(&self) -> Face {
        let n = (2 * self.m + 1) as usize;
        let removed = VertexSet::from_iter(self.a.iter().map(|&x| (x - 1) as usize));
        removed.complement_in(n)
    }
}

/// `F(a) < F(b)` in the lexicographic facet order: true iff `b_1 < a_1`,
/// or `b_1 = a_1` and `b_2 < a_2`, or `a_1 = b_1`, `a_2 = b_2` and
/// `b_3 < a_3`. (Complementation reverses the triple comparison, so this
/// is the ordinary lex order on the facet vertex sets.)
pub fn lex_less(fa: &FacetTriple, fb: &FacetTriple) -> bool {
    let [a1, a2, a3] = fa.a;
    let [b1, b2, b3] = fb.a;
    b1 < a1 || (b1 == a1 && b2 < a2) || (a1 == b1 && a2 == b2 && b3 < a3)
}

/// The cyclic window ideal on `y_1 .. y_{2m+1}` together with its complex.
pub fn build_template(m: u32) -> Result<(MonomialIdeal, SimplicialComplex), GorensteinError> {
    if m < 1 {
        return Err(GorensteinError::BadParameter { m });
    }
    let n = (2 * m + 1) as usize;
    let vars = VarTable::named("y", n);
    let gens: Vec<Monomial> = (0..n)
        .map(|i| {
            Monomial::from_exps((0..m as usize).map(|k| (((i + k) % n), 1u32)))
        })
        .collect();
    let ideal = MonomialIdeal::new(vars, gens)?;
    let complex = stanley_reisner_complex(&ideal)?;
    Ok((ideal, complex))
}

/// All facet triples for parameter `m`, sorted so that the induced facet
/// order is lexicographic (earlier facet first).
pub fn facet_triples(m: u32) -> Result<Vec<FacetTriple>, GorensteinError> {
    if m < 1 {
        return Err(GorensteinError::BadParameter { m });
    }
    let n = 2 * m + 1;
    let mut out = Vec::new();
    for a1 in 1..=n {
        for a2 in a1 + 1..=n {
            for a3 in a2 + 1..=n {
                if let Some(t) = FacetTriple::new(a1, a2, a3, m) {
                    out.push(t);
                }
            }
        }
    }
    out.sort_by(|x, y| {
        if lex_less(x, y) {
            core::cmp::Ordering::Less
        } else if x == y {
            core::cmp::Ordering::Equal
        } else {
            core::cmp::Ordering::Greater
        }
    });
    Ok(out)
}

/// The lexicographic shelling order of the template complex.
pub fn lex_shelling(m: u32) -> Result<ShellingOrder, GorensteinError> {
    let triples = facet_triples(m)?;
    Ok(ShellingOrder { facets: triples.iter().map(|t| t.facet()).collect() })
}

/// Given comparable facets `F < G`, produce a vertex `c ∈ G \ F` and a
/// facet `H < G` with `G \ H = {c}` (set operations on the facets, i.e.
/// on the complements of the triples).
///
/// The dispatch is an exhaustive pattern match on the interleaving of the
/// two triples plus the `a_3 - b_2` threshold; the two branches guarded by
/// `b_2 < a_2 < b_3` and `a_2 < b_2` in the three-element case are
/// distinct cases. Fall-through is an error and is checked unreachable
/// over all comparable pairs for small `m`.
pub fn shelling_witness(
    f: &FacetTriple,
    g: &FacetTriple,
    m: u32,
) -> Result<(usize, FacetTriple), GorensteinError> {
    if !lex_less(f, g) {
        return Err(GorensteinError::NotLexLess { f: *f, g: *g });
    }
    let [a1, a2, a3] = f.a;
    let [b1, b2, b3] = g.a;
    let aset = [a1, a2, a3];
    let bset = [b1, b2, b3];
    let shared = aset.iter().filter(|x| bset.contains(x)).count();
    // Number of facet-level differences |G \ F| = |A \ B|.
    let diff = 3 - shared;

    // Replace `drop` (an element of B) by `add` (an element of A) in G's
    // triple; the witness vertex is `add`.
    let replace = |drop: u32, add: u32| -> Result<(usize, FacetTriple), GorensteinError> {
        let mut vals = bset;
        for v in vals.iter_mut() {
            if *v == drop {
                *v = add;
            }
        }
        let h = FacetTriple::from_sorted(vals, m)
            .ok_or(GorensteinError::CaseFallThrough { f: *f, g: *g })?;
        if !lex_less(&h, g) {
            return Err(GorensteinError::CaseFallThrough { f: *f, g: *g });
        }
        // G \ H on facets is H's triple minus G's triple = {add}; the
        // vertex must also avoid F's facet, i.e. lie in A \ B.
        debug_assert!(aset.contains(&add) && !bset.contains(&add));
        Ok(((add - 1) as usize, h))
    };

    match diff {
        1 => {
            // A single exchange: H = F works directly.
            let add = *aset.iter().find(|x| !bset.contains(x)).expect("one difference");
            let c = (add - 1) as usize;
            Ok((c, *f))
        }
        2 => {
            // One shared element.
            if b1 == a1 && b1 < b2 && b2 < a2 {
                replace(b2, a2)
            } else if (b1 < b2 && b2 == a1) || (b1 < b2 && b2 < a1 && a2 == b3) {
                replace(b1, a3)
            } else if b1 < a1 && a1 < b2 && b2 < a2 && a2 == b3 {
                if a3 - b2 < m + 1 {
                    replace(b3, a3)
                } else {
                    replace(b1, a3)
                }
            } else if b1 < a1 && a2 == b2 && b3 < a3 {
                replace(b3, a3)
            } else if (b1 < a1 && a2 == b2 && a3 < b3)
                || (b1 < a1 && a3 == b2)
                || (b1 < a1 && a3 == b3)
            {
                // The last disjunct covers triples sharing their largest
                // element: (a1, b2, b3) is always a valid facet there,
                // since b2 - a1 <= b2 - b1 - 1 <= m - 1 and
                // b3 - a1 = a3 - a1 > m.
                replace(b1, a1)
            } else {
                Err(GorensteinError::CaseFallThrough { f: *f, g: *g })
            }
        }
        3 => {
            // Disjoint triples; b1 < a1 always, since F < G.
            if b1 < a1 && a1 < b2 && b2 < b3 && b3 < a2 {
                replace(b3, a2)
            } else if b1 < a1 && a1 < b2 && b2 < a2 && a2 < b3 && b3 < a3 {
                if a3 - b2 < m + 1 {
                    replace(b3, a3)
                } else {
                    replace(b1, a3)
                }
            } else if b1 < a1 && a2 < b2 && b3 < a3 {
                replace(b3, a3)
            } else if b1 < a1 && a3 < b3 && b2 > a1 {
                replace(b1, a1)
            } else if b3 < a1 || (b2 < a1 && a1 < b3) {
                replace(b2, a1)
            } else {
                Err(GorensteinError::CaseFallThrough { f: *f, g: *g })
            }
        }
        _ => Err(GorensteinError::CaseFallThrough { f: *f, g: *g }),
    }
}

/// Substitute a regular sequence of `2m+1` monomials into the template.
pub fn instantiate(
    m: u32,
    us: &[Monomial],
    target: &VarTable,
) -> Result<MonomialIdeal, GorensteinError> {
    let (ideal, _) = build_template(m)?;
    if us.len() != ideal.n_vars() {
        return Err(GorensteinError::Ideal(IdealError::WrongArity {
            expected: ideal.n_vars(),
            got: us.len(),
        }));
    }
    Ok(substitute(&ideal, us, target)?)
}

/// A successful recognition: the parameter, the cyclic arrangement of the
/// generators, and the recovered regular sequence (up to the dihedral
/// symmetry of the cycle).
#[derive(Clone, Debug)]
pub struct Recognition {
    pub m: u32,
    /// `order[i]` is the index into `gens()` placed at cyclic position `i`.
    pub order: Vec<usize>,
    pub us: Vec<Monomial>,
}

/// Search for a cyclic-window presentation of `I`. Exact for up to 11
/// generators; returns `None` when no presentation exists.
pub fn recognize(ideal: &MonomialIdeal) -> Option<Recognition> {
    let gens = ideal.gens();
    let count = gens.len();
    if count < 3 || count % 2 == 0 || count > 11 {
        // A single generator is the m = 1, n = 3 shape only when there are
        // three; even counts never fit.
        if count == 1 {
            return None;
        }
        if count % 2 == 0 || count > 11 {
            return None;
        }
    }
    let m = ((count - 1) / 2) as u32;
    if m == 0 {
        return None;
    }
    if m == 1 {
        // Windows of length one: the generators themselves must form a
        // regular sequence.
        if is_regular_sequence(gens).ok()? {
            let order: Vec<usize> = (0..count).collect();
            return verify_arrangement(ideal, m, &order);
        }
        return None;
    }
    // Fix generator 0 at position 0 to quotient out rotations; adjacent
    // windows must share a nontrivial gcd.
    let mut order = alloc::vec![0usize];
    let mut used = alloc::vec![false; count];
    used[0] = true;
    fn dfs(
        ideal: &MonomialIdeal,
        m: u32,
        used: &mut Vec<bool>,
        order: &mut Vec<usize>,
    ) -> Option<Recognition> {
        let gens = ideal.gens();
        let count = gens.len();
        if order.len() == count {
            if gens[order[count - 1]].gcd(&gens[order[0]]).is_unit() {
                return None;
            }
            return verify_arrangement(ideal, m, order);
        }
        let prev = order[order.len() - 1];
        for next in 0..count {
            if used[next] || gens[prev].gcd(&gens[next]).is_unit() {
                continue;
            }
            used[next] = true;
            order.push(next);
            if let Some(r) = dfs(ideal, m, used, order) {
                return Some(r);
            }
            order.pop();
            used[next] = false;
        }
        None
    }
    dfs(ideal, m, &mut used, &mut order)
}

/// Check one cyclic arrangement: recover `u_i` as the gcd of the two
/// windows overlapping exactly in position `i`, then re-instantiate and
/// compare.
fn verify_arrangement(ideal: &MonomialIdeal, m: u32, order: &[usize]) -> Option<Recognition> {
    let gens = ideal.gens();
    let count = gens.len();
    let mi = m as usize;
    let us: Vec<Monomial> = (0..count)
        .map(|i| {
            if m == 1 {
                gens[order[i]].clone()
            } else {
                // Windows starting at i-m+1 and at i overlap exactly in {i}.
                let first = order[(i + count - (mi - 1)) % count];
                gens[first].gcd(&gens[order[i]])
            }
        })
        .collect();
    if us.iter().any(|u| u.is_unit()) || !is_regular_sequence(&us).ok()? {
        return None;
    }
    let rebuilt = instantiate(m, &us, ideal.vars()).ok()?;
    if rebuilt == *ideal {
        Some(Recognition { m, order: order.to_vec(), us })
    } else {
        None
    }
}
