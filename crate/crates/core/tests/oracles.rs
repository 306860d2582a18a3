//! Independent oracles for the operation-level claims: brute-force subset
//! enumeration for face counts, the raw link definition, homology
//! cross-checks on the embedded instances, and the negative cleanness
//! verdicts on the dunce hat.

use stanley_core::complex::SimplicialComplex;
use stanley_core::filtration::{is_pretty_clean_via_polarization, substitute_filtration};
use stanley_core::fixtures;
use stanley_core::homology::{reduced_homology, CoefficientField};
use stanley_core::ideal::{stanley_reisner_complex, Monomial, MonomialIdeal, VarTable};
use stanley_core::partitions::{
    find_nice_partition, is_stanley_ideal, validate_partition, NicePartitionOutcome,
    PartitionViolation,
};
use stanley_core::shelling::{
    check_clean_via_dual, dual_ideal, has_linear_quotients, is_shellable, shelling_to_partition,
    ShellabilityOutcome, DEFAULT_FACET_CAP,
};
use stanley_core::vset::VertexSet;

const Q: CoefficientField = CoefficientField::Rationals;

/// Brute-force face count: subsets of the vertex set contained in a facet.
fn face_count_oracle(c: &SimplicialComplex) -> usize {
    VertexSet::full(c.n_vertices())
        .subsets()
        .into_iter()
        .filter(|&s| c.contains_face(s))
        .count()
}

#[test]
fn face_counts_against_subset_enumeration() {
    let dunce = fixtures::dunce_hat();
    assert_eq!(dunce.complex.all_faces().len(), face_count_oracle(&dunce.complex));
    assert_eq!(dunce.complex.all_faces().len(), 50);
    // Edge count forced by Euler characteristic 1 of a contractible space:
    // 8 - f_1 + 17 = 1.
    assert_eq!(dunce.complex.f_vector().unwrap().0[2], 24);

    let pentagon = SimplicialComplex::from_vertex_lists(
        &[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]],
        5,
    )
    .unwrap();
    assert_eq!(pentagon.all_faces().len(), face_count_oracle(&pentagon));
    assert_eq!(pentagon.all_faces().len(), 11);

    let cyl = fixtures::cylinder();
    assert_eq!(cyl.complex.all_faces().len(), face_count_oracle(&cyl.complex));
    // Faces of every complex are closed under subsets.
    for f in cyl.complex.all_faces() {
        for s in f.subsets() {
            assert!(cyl.complex.contains_face(s));
        }
    }
}

#[test]
fn link_of_vertex_two_in_cylinder() {
    // Direct definition: G is in the link of v iff v ∉ G and G ∪ {v} is a
    // face.
    let cyl = fixtures::cylinder();
    let v = VertexSet::singleton(1); // label "2"
    let link = cyl.complex.link(v).unwrap();
    for g in VertexSet::full(6).subsets() {
        let expected = g.is_disjoint(v) && cyl.complex.contains_face(g.union(v));
        assert_eq!(link.contains_face(g), expected, "g = {g:?}");
    }
    // The link is the path on the neighbors of vertex 2: edges 13, 16, 34.
    let mut expect: Vec<VertexSet> = [[0usize, 2], [0, 5], [2, 3]]
        .iter()
        .map(|p| VertexSet::from_iter(p.iter().copied()))
        .collect();
    expect.sort();
    assert_eq!(link.facets(), expect.as_slice());
}

#[test]
fn dunce_skeleton_counts() {
    let dunce = fixtures::dunce_hat();
    let sk1 = dunce.complex.skeleton(1).unwrap();
    assert_eq!(sk1.dim_complex(), Some(1));
    let f = sk1.f_vector().unwrap().0;
    assert_eq!(f, vec![1, 8, 24]);
}

#[test]
fn dunce_hat_is_rationally_acyclic() {
    let dunce = fixtures::dunce_hat();
    let h = reduced_homology(&dunce.complex, Q).unwrap();
    assert!(h.is_acyclic(), "the dunce hat is contractible: {h:?}");
    assert_eq!(h.euler(), 0);
}

#[test]
fn cylinder_minimal_primes_are_facet_complements() {
    let cyl = fixtures::cylinder();
    let primes = cyl.ideal.minimal_primes();
    assert_eq!(primes.len(), 6);
    assert!(primes.iter().all(|p| p.height() == 3));
    let complements: Vec<VertexSet> =
        cyl.complex.facets().iter().map(|f| f.complement_in(6)).collect();
    for p in &primes {
        assert!(complements.contains(&p.vars));
    }
}

#[test]
fn dunce_partition_with_interval_removed_uncovers_vertex_3() {
    let fx = fixtures::dunce_hat();
    let mut broken = fx.partition.clone();
    // Remove [3, 234].
    let three = VertexSet::singleton(2);
    let pos = broken.intervals.iter().position(|iv| iv.lower == three).unwrap();
    broken.intervals.remove(pos);
    match validate_partition(&broken) {
        Err(PartitionViolation::Uncovered { face }) => assert_eq!(face, three),
        other => panic!("expected vertex 3 uncovered, got {other:?}"),
    }
}

#[test]
fn dunce_verdicts_negative_and_positive() {
    let fx = fixtures::dunce_hat();
    // Not clean: the dual lacks linear quotients and the complex is not
    // shellable, so the evidence chain reports false.
    let ev = check_clean_via_dual(&fx.ideal, DEFAULT_FACET_CAP).unwrap();
    assert!(!ev.clean);
    assert!(ev.shelling.is_none());
    let dual = dual_ideal(&fx.ideal).unwrap();
    assert!(!has_linear_quotients(&dual, None, DEFAULT_FACET_CAP).unwrap().has());
    // Not pretty clean via polarization (squarefree: the polarization is
    // the ideal itself and the complex is unshellable).
    let pev = is_pretty_clean_via_polarization(&fx.ideal, DEFAULT_FACET_CAP).unwrap();
    assert!(!pev.pretty_clean);
    assert_eq!(pev.polarization.added, 0);
    // Yet it is a Stanley ideal with sdepth = depth = 3.
    let verdict = is_stanley_ideal(&fx.ideal, Q).unwrap();
    assert!(verdict.value);
    assert_eq!((verdict.sdepth, verdict.depth), (3, 3));
}

#[test]
fn shellable_random_complexes_are_partitionable() {
    // Cross-check of the two searches: whenever a shelling exists, the
    // nice-partition search must succeed, and the shelling-induced
    // partition is one witness.
    let mut state = 0x0f1e2d3c4b5a6978u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut shellable_seen = 0;
    for _ in 0..60 {
        let n = 4 + (next() % 3) as usize;
        let nf = 2 + (next() % 4) as usize;
        let faces: Vec<VertexSet> = (0..nf)
            .map(|_| {
                let mut f = VertexSet::EMPTY;
                for _ in 0..2 + next() % 2 {
                    f = f.with((next() % n as u64) as usize);
                }
                f
            })
            .collect();
        let c = SimplicialComplex::from_facets(&faces, n).unwrap();
        if let ShellabilityOutcome::Shellable(order) = is_shellable(&c, DEFAULT_FACET_CAP).unwrap()
        {
            shellable_seen += 1;
            let induced = shelling_to_partition(&c, &order).unwrap();
            assert_eq!(validate_partition(&induced), Ok(()));
            match find_nice_partition(&c).unwrap() {
                NicePartitionOutcome::Found(p) => {
                    assert_eq!(validate_partition(&p), Ok(()));
                }
                NicePartitionOutcome::Infeasible { .. } => {
                    panic!("shellable but no nice partition found: {c:?}")
                }
            }
        }
    }
    assert!(shellable_seen > 10, "corpus should contain shellable instances");
}

#[test]
fn substitute_filtration_length_is_sum_of_local_multiplicities() {
    // Transporting a filtration expands each step into the clean
    // filtration of a complete intersection, whose length is the product
    // of the degrees of the images of the prime's variables.
    let (_, complex) = stanley_core::gorenstein::build_template(2).unwrap();
    let order = stanley_core::gorenstein::lex_shelling(2).unwrap();
    let f = stanley_core::filtration::filtration_from_shelling(&complex, &order).unwrap();
    let us = vec![
        Monomial::from_exps([(0, 2)]),
        Monomial::var(1),
        Monomial::from_exps([(2, 1), (3, 1)]),
        Monomial::var(4),
        Monomial::var(5),
    ];
    let target = VarTable::standard(6);
    let g = substitute_filtration(&f, &us, &target).unwrap();
    let expected: u64 = f
        .steps
        .iter()
        .map(|s| s.prime.vars.iter().map(|y| us[y].degree()).product::<u64>())
        .sum();
    assert_eq!(g.steps.len() as u64, expected);
    // For squarefree images the same number counts the minimal primes of
    // each complete intersection image.
    let identity: Vec<Monomial> = (0..5).map(Monomial::var).collect();
    let id5 = VarTable::standard(5);
    let gid = substitute_filtration(&f, &identity, &id5).unwrap();
    let expected_id: u64 = f
        .steps
        .iter()
        .map(|s| {
            let gens: Vec<Monomial> =
                s.prime.vars.iter().map(|y| identity[y].clone()).collect();
            if gens.is_empty() {
                1
            } else {
                MonomialIdeal::new(id5.clone(), gens).unwrap().minimal_primes().len() as u64
            }
        })
        .sum();
    assert_eq!(gid.steps.len() as u64, expected_id);
}

#[test]
fn filtration_primes_contain_base_and_min_cardinality_is_minimal() {
    // On squarefree instances, every prime of a found filtration contains
    // the ideal, and the smallest one is a minimal prime.
    let mut checked = 0;
    for seed in 0..25u64 {
        let mut state = 0xc0ffee ^ seed.wrapping_mul(0x9e3779b97f4a7c15);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let n = 3 + (next() % 3) as usize;
        let gens: Vec<Monomial> = (0..2 + next() % 2)
            .map(|_| {
                let mut f = VertexSet::EMPTY;
                for _ in 0..1 + next() % 2 {
                    f = f.with((next() % n as u64) as usize);
                }
                Monomial::squarefree(f)
            })
            .collect();
        let ideal = MonomialIdeal::new(VarTable::standard(n), gens).unwrap();
        if ideal.is_zero() || ideal.is_unit() {
            continue;
        }
        let out = stanley_core::filtration::find_pretty_clean_filtration(
            &ideal,
            stanley_core::filtration::SearchLimits::default(),
        )
        .unwrap();
        let Some(f) = out.filtration else { continue };
        let minimal: Vec<VertexSet> =
            ideal.minimal_primes().iter().map(|p| p.vars).collect();
        for step in &f.steps {
            assert!(
                ideal.gens().iter().all(|g| !g.support().is_disjoint(step.prime.vars)),
                "a filtration prime fails to contain the ideal"
            );
        }
        let smallest = f.steps.iter().map(|s| s.prime.vars).min_by_key(|v| v.card()).unwrap();
        assert!(minimal.contains(&smallest), "min-cardinality prime must be minimal");
        checked += 1;
    }
    assert!(checked > 5);
}

#[test]
fn squarefree_complexes_round_trip_through_ideals() {
    // Round trip on the embedded instances and random complexes.
    for c in [
        fixtures::dunce_hat().complex,
        fixtures::cylinder().complex,
        fixtures::two_piece().full,
    ] {
        let ideal = stanley_core::ideal::stanley_reisner_ideal(&c);
        let back = stanley_reisner_complex(&ideal).unwrap();
        assert_eq!(back.facets(), c.facets());
    }
}
