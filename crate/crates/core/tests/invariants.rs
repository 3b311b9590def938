//! Structural invariants over every admissible type of rank at most 8 and
//! the dihedral groups `I2(3..=30)`.

use coxinv_core::coxgroup::{is_central_longest, ParabolicSubset};
use coxinv_core::rootsystem::{central_by_type, CoxeterType, RootSystem, Subset};

fn admissible() -> Vec<CoxeterType> {
    use CoxeterType::*;
    let mut t = Vec::new();
    t.extend((1..=8).map(A));
    t.extend((2..=8).map(B));
    t.extend((2..=8).map(C));
    t.extend((4..=8).map(D));
    t.extend((6..=8).map(E));
    t.extend([F4, H(3), H(4)]);
    t.extend((3..=30).map(I2));
    t
}

#[test]
fn longest_elements_of_every_parabolic() {
    for t in admissible() {
        let rs = RootSystem::build(t).unwrap();
        for j in Subset::all(rs.rank()) {
            let p = ParabolicSubset::new(&rs, j).unwrap();
            let w = &p.longest;
            let phi_j: Vec<usize> = rs.parabolic_roots(j);
            let phi_j_pos = phi_j.iter().filter(|&&r| rs.is_positive(r)).count();
            assert_eq!(w.length(&rs), phi_j_pos, "{t} J={j}");
            for r in 0..rs.num_positive() {
                let img = w.apply(r);
                if phi_j.contains(&r) {
                    assert!(!rs.is_positive(img) && phi_j.contains(&img), "{t} J={j}");
                } else {
                    assert!(rs.is_positive(img) && !phi_j.contains(&img), "{t} J={j}");
                }
            }
            assert!(w.is_involution_or_identity(), "{t} J={j}");
            assert_eq!(is_central_longest(&rs, j), p.central, "{t} J={j}");
            assert_eq!(central_by_type(&p.components), p.central, "{t} J={j}");
        }
    }
}

#[test]
fn longest_element_of_w_is_central_exactly_for_the_known_types() {
    for t in admissible() {
        let rs = RootSystem::build(t).unwrap();
        assert_eq!(is_central_longest(&rs, Subset::full(rs.rank())), t.longest_is_central(), "{t}");
    }
}
