//! Seeded random instance models for the property suites. The generator
//! is a fixed splitmix64 stream, so an instance is fully determined by
//! the model, the seed, and the variable count, across platforms and
//! versions.

use stanley_core::complex::SimplicialComplex;
use stanley_core::homology::{is_cohen_macaulay, CoefficientField};
use stanley_core::ideal::{stanley_reisner_ideal, Monomial, MonomialIdeal, VarTable};
use stanley_core::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Squarefree,
    CompleteIntersection,
    Codim2Cm,
}

impl Model {
    pub fn parse(s: &str) -> Result<Model, String> {
        match s {
            "squarefree" => Ok(Model::Squarefree),
            "ci" => Ok(Model::CompleteIntersection),
            "codim2-cm" => Ok(Model::Codim2Cm),
            other => Err(format!("invalid model `{other}` (squarefree, ci, codim2-cm)")),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::Squarefree => "squarefree",
            Model::CompleteIntersection => "ci",
            Model::Codim2Cm => "codim2-cm",
        }
    }
}

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    /// splitmix64 step.
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// A proper nonzero squarefree monomial ideal on `n` variables.
pub fn squarefree_ideal(rng: &mut Rng, n: usize) -> MonomialIdeal {
    loop {
        let count = rng.range(2, 5) as usize;
        let gens: Vec<Monomial> = (0..count)
            .map(|_| {
                let size = rng.range(1, 3.min(n as u64 - 1)) as usize;
                let mut f = VertexSet::EMPTY;
                while f.card() < size {
                    f = f.with(rng.below(n as u64) as usize);
                }
                Monomial::squarefree(f)
            })
            .collect();
        let ideal = MonomialIdeal::new(VarTable::standard(n), gens).unwrap();
        if !ideal.is_zero() && !ideal.is_unit() {
            return ideal;
        }
    }
}

/// A monomial complete intersection on at most `n` variables, with the
/// product of generator degrees kept small enough for the exhaustive
/// pipelines downstream.
pub fn complete_intersection(rng: &mut Rng, n: usize) -> MonomialIdeal {
    loop {
        let mut free: Vec<usize> = (0..n).collect();
        let groups = rng.range(1, 3.min(n as u64)) as usize;
        let mut gens = Vec::new();
        for _ in 0..groups {
            if free.is_empty() {
                break;
            }
            let size = rng.range(1, 2.min(free.len() as u64)) as usize;
            let mut exps = Vec::new();
            for _ in 0..size {
                let pick = rng.below(free.len() as u64) as usize;
                let var = free.swap_remove(pick);
                exps.push((var, rng.range(1, 3) as u32));
            }
            gens.push(Monomial::from_exps(exps));
        }
        let degree_product: u64 = gens.iter().map(|g| g.degree()).product();
        if gens.is_empty() || degree_product > 20 {
            continue;
        }
        return MonomialIdeal::new(VarTable::standard(n), gens).unwrap();
    }
}

/// A Cohen-Macaulay codimension-2 squarefree ideal on `n >= 4` variables:
/// the Stanley-Reisner ideal of a random pure complex of codimension 2
/// that passes the Reisner test, by rejection.
pub fn codim2_cm_ideal(rng: &mut Rng, n: usize) -> MonomialIdeal {
    assert!((4..=8).contains(&n), "codim2-cm model needs 4 <= n <= 8");
    let facet_size = n - 2;
    // All (n-2)-subsets of the vertex set.
    let all: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .into_iter()
        .filter(|f| f.card() == facet_size)
        .collect();
    loop {
        let count = rng.range(2, all.len() as u64) as usize;
        let mut chosen: Vec<VertexSet> = Vec::new();
        while chosen.len() < count {
            let f = all[rng.below(all.len() as u64) as usize];
            if !chosen.contains(&f) {
                chosen.push(f);
            }
        }
        let complex = SimplicialComplex::from_facets(&chosen, n).unwrap();
        // Codimension exactly 2 needs every vertex present (otherwise a
        // height-1 prime appears) and the complex pure of the right size,
        // which holds by construction.
        if (0..n).any(|v| !complex.contains_face(VertexSet::singleton(v))) {
            continue;
        }
        if !is_cohen_macaulay(&complex, CoefficientField::Rationals).unwrap() {
            continue;
        }
        let ideal = stanley_reisner_ideal(&complex);
        let dim = ideal.krull_dim().unwrap();
        if dim == n as i64 - 2 {
            return ideal;
        }
    }
}

pub fn generate(model: Model, seed: u64, n: usize) -> Result<MonomialIdeal, String> {
    let mut rng = Rng::new(seed);
    match model {
        Model::Squarefree => {
            if !(2..=20).contains(&n) {
                return Err("squarefree model needs 2 <= n <= 20".into());
            }
            Ok(squarefree_ideal(&mut rng, n))
        }
        Model::CompleteIntersection => {
            if !(1..=12).contains(&n) {
                return Err("ci model needs 1 <= n <= 12".into());
            }
            Ok(complete_intersection(&mut rng, n))
        }
        Model::Codim2Cm => {
            if !(4..=8).contains(&n) {
                return Err("codim2-cm model needs 4 <= n <= 8".into());
            }
            Ok(codim2_cm_ideal(&mut rng, n))
        }
    }
}
