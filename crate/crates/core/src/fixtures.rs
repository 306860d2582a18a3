//! Built-in instances: the dunce hat triangulation, the cylinder
//! triangulation with its Stanley-Reisner ideal, and the two-piece
//! constructible complex with its shellings and partitions. The raw data
//! (facet lists, interval lists, shelling orders) is embedded verbatim so
//! that every test and the command line run against identical inputs.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::ideal::{stanley_reisner_ideal, Monomial, MonomialIdeal, VarTable};
use crate::partitions::{Interval, Partition};
use crate::shelling::ShellingOrder;
use crate::vset::{Face, VertexSet};

/// A self-contained complex instance with its Stanley-Reisner ideal and a
/// distinguished partition.
#[derive(Clone, Debug)]
pub struct ComplexFixture {
    pub complex: SimplicialComplex,
    pub ideal: MonomialIdeal,
    pub partition: Partition,
}

/// Parse a face from a digit string under the convention that label `d`
/// is vertex `d - 1` (so "148" is `{0, 3, 7}`).
fn face_digits(s: &str) -> Face {
    VertexSet::from_iter(s.chars().map(|c| c.to_digit(10).expect("digit") as usize - 1))
}

/// Same, with label "0" as an ordinary tenth label (vertex 9).
fn face_digits_zero_last(s: &str) -> Face {
    VertexSet::from_iter(s.chars().map(|c| {
        let d = c.to_digit(10).expect("digit") as usize;
        if d == 0 {
            9
        } else {
            d - 1
        }
    }))
}

fn intervals(pairs: &[(&str, &str)], parse: fn(&str) -> Face) -> Vec<Interval> {
    pairs
        .iter()
        .map(|&(lo, hi)| {
            Interval::new(if lo.is_empty() { VertexSet::EMPTY } else { parse(lo) }, parse(hi))
        })
        .collect()
}

/// An 8-vertex triangulation of the dunce hat: 17 facets, Cohen-Macaulay
/// but not shellable, with a 17-interval nice partition.
pub fn dunce_hat() -> ComplexFixture {
    const FACETS: [&str; 17] = [
        "124", "125", "145", "234", "348", "458", "568", "256", "236", "138", "128", "278",
        "678", "237", "137", "167", "136",
    ];
    const PARTITION: [(&str, &str); 17] = [
        ("", "124"),
        ("3", "234"),
        ("5", "145"),
        ("6", "236"),
        ("7", "137"),
        ("8", "348"),
        ("13", "138"),
        ("16", "136"),
        ("18", "128"),
        ("25", "125"),
        ("27", "237"),
        ("28", "278"),
        ("56", "256"),
        ("67", "167"),
        ("68", "568"),
        ("78", "678"),
        ("58", "458"),
    ];
    let facets: Vec<Face> = FACETS.iter().map(|s| face_digits(s)).collect();
    let complex = SimplicialComplex::from_facets(&facets, 8).unwrap();
    let ideal = stanley_reisner_ideal(&complex);
    let partition =
        Partition { ambient: complex.clone(), intervals: intervals(&PARTITION, face_digits) };
    ComplexFixture { complex, ideal, partition }
}

/// A 6-vertex triangulation of the cylinder, the complex of
/// `(x1x4, x2x5, x3x6, x1x3x5, x2x4x6)`: Buchsbaum, not Cohen-Macaulay,
/// not partitionable, with a 7-interval (non-nice) partition.
pub fn cylinder() -> ComplexFixture {
    const FACETS: [&str; 6] = ["123", "126", "156", "234", "345", "456"];
    const PARTITION: [(&str, &str); 7] = [
        ("", "123"),
        ("4", "234"),
        ("5", "345"),
        ("6", "456"),
        ("15", "156"),
        ("16", "126"),
        ("26", "26"),
    ];
    let facets: Vec<Face> = FACETS.iter().map(|s| face_digits(s)).collect();
    let complex = SimplicialComplex::from_facets(&facets, 6)
        .unwrap()
        .with_labels((1..=6).map(|i| i.to_string()).collect())
        .unwrap();
    let gens: Vec<Monomial> = ["14", "25", "36", "135", "246"]
        .iter()
        .map(|s| Monomial::squarefree(face_digits(s)))
        .collect();
    let ideal = MonomialIdeal::new(VarTable::standard(6), gens).unwrap();
    let partition =
        Partition { ambient: complex.clone(), intervals: intervals(&PARTITION, face_digits) };
    ComplexFixture { complex, ideal, partition }
}

/// The two-piece 2-dimensional complex (22 triangles on 10 vertices,
/// labels 1-9 and 0) that is constructible but not shellable: both pieces
/// with their shelling orders, the intersection path, the induced and the
/// adjusted partitions of the second piece, and the expected restricted
/// lower faces after gluing.
#[derive(Clone, Debug)]
pub struct TwoPieceFixture {
    pub full: SimplicialComplex,
    pub delta1: SimplicialComplex,
    pub delta2: SimplicialComplex,
    pub gamma: SimplicialComplex,
    pub shelling1: ShellingOrder,
    pub shelling2: ShellingOrder,
    pub partition1: Partition,
    pub partition2_from_shelling: Partition,
    pub partition2_adjusted: Partition,
    /// Lower faces of the adjusted intervals after restriction to the
    /// complement of `gamma`.
    pub glued_lowers: Vec<Face>,
}

pub fn two_piece() -> TwoPieceFixture {
    const SHELLING1: [&str; 14] = [
        "148", "149", "140", "150", "189", "348", "349", "378", "340", "390", "590", "569",
        "689", "678",
    ];
    const SHELLING2: [&str; 8] = ["125", "126", "127", "167", "235", "236", "237", "356"];
    const GAMMA: [&str; 4] = ["15", "56", "67", "37"];
    const PARTITION1: [(&str, &str); 14] = [
        ("", "148"),
        ("9", "149"),
        ("0", "140"),
        ("5", "150"),
        ("89", "189"),
        ("3", "348"),
        ("39", "349"),
        ("7", "378"),
        ("30", "340"),
        ("90", "390"),
        ("59", "590"),
        ("6", "569"),
        ("68", "689"),
        ("67", "678"),
    ];
    const PARTITION2_SHELLING: [(&str, &str); 8] = [
        ("", "125"),
        ("6", "126"),
        ("7", "127"),
        ("67", "167"),
        ("3", "235"),
        ("36", "236"),
        ("37", "237"),
        ("56", "356"),
    ];
    const PARTITION2_ADJUSTED: [(&str, &str); 8] = [
        ("", "237"),
        ("1", "125"),
        ("5", "356"),
        ("6", "167"),
        ("17", "127"),
        ("25", "235"),
        ("26", "126"),
        ("36", "236"),
    ];
    const GLUED_LOWERS: [&str; 8] = ["2", "12", "35", "16", "17", "25", "26", "36"];

    let labels: Vec<_> =
        ["1", "2", "3", "4", "5", "6", "7", "8", "9", "0"].iter().map(|s| s.to_string()).collect();
    let parse = face_digits_zero_last;
    let facets1: Vec<Face> = SHELLING1.iter().map(|s| parse(s)).collect();
    let facets2: Vec<Face> = SHELLING2.iter().map(|s| parse(s)).collect();
    let delta1 = SimplicialComplex::from_facets(&facets1, 10)
        .unwrap()
        .with_labels(labels.clone())
        .unwrap();
    let delta2 = SimplicialComplex::from_facets(&facets2, 10)
        .unwrap()
        .with_labels(labels.clone())
        .unwrap();
    let full = delta1.union(&delta2);
    let gamma_facets: Vec<Face> = GAMMA.iter().map(|s| parse(s)).collect();
    let gamma = SimplicialComplex::from_facets(&gamma_facets, 10)
        .unwrap()
        .with_labels(labels)
        .unwrap();
    TwoPieceFixture {
        full,
        delta1: delta1.clone(),
        delta2: delta2.clone(),
        gamma,
        shelling1: ShellingOrder { facets: facets1 },
        shelling2: ShellingOrder { facets: facets2 },
        partition1: Partition { ambient: delta1, intervals: intervals(&PARTITION1, parse) },
        partition2_from_shelling: Partition {
            ambient: delta2.clone(),
            intervals: intervals(&PARTITION2_SHELLING, parse),
        },
        partition2_adjusted: Partition {
            ambient: delta2,
            intervals: intervals(&PARTITION2_ADJUSTED, parse),
        },
        glued_lowers: GLUED_LOWERS.iter().map(|s| parse(s)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::stanley_reisner_complex;
    use crate::partitions::validate_partition;

    #[test]
    fn dunce_hat_counts() {
        let fx = dunce_hat();
        assert_eq!(fx.complex.facets().len(), 17);
        assert_eq!(fx.complex.dim_complex(), Some(2));
        assert_eq!(fx.partition.intervals.len(), 17);
        assert_eq!(fx.complex.all_faces().len(), 50);
        assert_eq!(fx.complex.f_vector().unwrap().0, alloc::vec![1, 8, 24, 17]);
    }

    #[test]
    fn cylinder_counts_and_ideal() {
        let fx = cylinder();
        assert_eq!(fx.complex.facets().len(), 6);
        assert_eq!(fx.partition.intervals.len(), 7);
        // The listed ideal is exactly the Stanley-Reisner ideal of the
        // listed facets.
        let from_complex = stanley_reisner_ideal(&fx.complex);
        assert_eq!(from_complex.gens(), fx.ideal.gens());
        let back = stanley_reisner_complex(&fx.ideal).unwrap();
        assert_eq!(back.facets(), fx.complex.facets());
    }

    #[test]
    fn two_piece_counts() {
        let fx = two_piece();
        assert_eq!(fx.delta1.facets().len(), 14);
        assert_eq!(fx.delta2.facets().len(), 8);
        assert_eq!(fx.full.facets().len(), 22);
        assert_eq!(fx.gamma.facets().len(), 4);
        assert_eq!(validate_partition(&fx.partition1), Ok(()));
        assert_eq!(validate_partition(&fx.partition2_from_shelling), Ok(()));
        assert_eq!(validate_partition(&fx.partition2_adjusted), Ok(()));
        // Gamma is the intersection of the two pieces.
        let inter = fx.delta1.intersection(&fx.delta2);
        assert_eq!(inter.facets(), fx.gamma.facets());
    }
}
