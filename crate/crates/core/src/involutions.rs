//! Involution classes `w_J` (with `w_J` central in `W_J`), their
//! `±1`-eigenspaces, and the special-involution test.

use std::collections::{HashSet, BTreeSet};

use serde::Serialize;

use crate::coxgroup::{subset_classes, GroupElement, GroupTable, ParabolicSubset, SubsetClasses};
use crate::error::{Error, Result};
use crate::exactfield::linalg::{self, direction, shift_diagonal};
use crate::exactfield::{kernel, Scalar, Vector};
use crate::rootsystem::{CoxeterType, RootSystem, Subset};

/// Which eigenspace of an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Eigen {
    Plus,
    Minus,
}

impl Eigen {
    pub const BOTH: [Eigen; 2] = [Eigen::Plus, Eigen::Minus];

    pub fn opposite(self) -> Eigen {
        match self {
            Eigen::Plus => Eigen::Minus,
            Eigen::Minus => Eigen::Plus,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Basis of `V_1`.
    pub basis_plus: Vec<Vector>,
    /// Basis of `V_{-1}`.
    pub basis_minus: Vec<Vector>,
    /// Root indices in `Φ_1 = Φ ∩ V_1`.
    pub phi_plus: Vec<usize>,
    /// Root indices in `Φ_{-1} = Φ ∩ V_{-1}`.
    pub phi_minus: Vec<usize>,
}

impl EigenDecomposition {
    pub fn basis(&self, e: Eigen) -> &[Vector] {
        match e {
            Eigen::Plus => &self.basis_plus,
            Eigen::Minus => &self.basis_minus,
        }
    }

    pub fn phi(&self, e: Eigen) -> &[usize] {
        match e {
            Eigen::Plus => &self.phi_plus,
            Eigen::Minus => &self.phi_minus,
        }
    }
}

fn check_involution(w: &GroupElement) -> Result<()> {
    if w.is_involution_or_identity() {
        Ok(())
    } else {
        Err(Error::NotInvolution)
    }
}

/// Roots `α` with `w(α) = ε·α`, read off the permutation.
fn fixed_roots(rs: &RootSystem, w: &GroupElement, e: Eigen) -> Vec<usize> {
    (0..rs.num_roots())
        .filter(|&i| match e {
            Eigen::Plus => w.apply(i) == i,
            Eigen::Minus => w.apply(i) == rs.negative_of(i),
        })
        .collect()
}

/// `V_1 = ker(M − I)` and `V_{−1} = ker(M + I)`, with `Φ_{±1}`.
pub fn eigenspaces(rs: &RootSystem, w: &GroupElement) -> Result<EigenDecomposition> {
    check_involution(w)?;
    let m = w.matrix(rs);
    let one = Scalar::one(rs.field());
    Ok(EigenDecomposition {
        basis_plus: kernel(&shift_diagonal(&m, &-&one))?,
        basis_minus: kernel(&shift_diagonal(&m, &one))?,
        phi_plus: fixed_roots(rs, w, Eigen::Plus),
        phi_minus: fixed_roots(rs, w, Eigen::Minus),
    })
}

/// `(v + ε·w(v)) / 2`, the component of `v` in `V_ε`.
pub fn project(rs: &RootSystem, w: &GroupElement, v: &[Scalar], e: Eigen) -> Result<Vector> {
    check_involution(w)?;
    let wv = w.act(rs, v);
    let sum = match e {
        Eigen::Plus => linalg::add(v, &wv),
        Eigen::Minus => linalg::sub(v, &wv),
    };
    Ok(sum.iter().map(Scalar::half).collect())
}

fn project_root(rs: &RootSystem, w: &GroupElement, i: usize, e: Eigen) -> Vector {
    let (a, b) = (rs.root(i), rs.root(w.apply(i)));
    let sum = match e {
        Eigen::Plus => linalg::add(a, b),
        Eigen::Minus => linalg::sub(a, b),
    };
    sum.iter().map(Scalar::half).collect()
}

/// Every root has a projection onto `V_1` or `V_{−1}` that is proportional
/// to a root lying in that eigenspace.
///
/// Proportionality is decided by comparing normalized directions; a zero
/// projection counts as proportional to any root, so it succeeds iff
/// `Φ_ε` is nonempty.
pub fn is_special(rs: &RootSystem, w: &GroupElement) -> Result<bool> {
    check_involution(w)?;
    let directions: Vec<HashSet<Vector>> = Eigen::BOTH
        .iter()
        .map(|&e| {
            fixed_roots(rs, w, e)
                .into_iter()
                .filter_map(|i| direction(rs.root(i)))
                .collect()
        })
        .collect();
    Ok((0..rs.num_roots()).all(|i| {
        Eigen::BOTH.iter().zip(&directions).any(|(&e, dirs)| {
            if dirs.is_empty() {
                return false;
            }
            match direction(&project_root(rs, w, i, e)) {
                None => true,
                Some(d) => dirs.contains(&d),
            }
        })
    }))
}

/// [`is_special`] evaluated literally: for each root, search both
/// eigenspaces for a root proportional to the projection using the
/// 2×2-minor test. Quadratic in `|Φ|`; used to cross-check the fast test.
pub fn is_special_by_definition(rs: &RootSystem, w: &GroupElement) -> Result<bool> {
    check_involution(w)?;
    let phis: Vec<Vec<usize>> = Eigen::BOTH.iter().map(|&e| fixed_roots(rs, w, e)).collect();
    Ok((0..rs.num_roots()).all(|i| {
        Eigen::BOTH.iter().zip(&phis).any(|(&e, phi)| {
            let p = project_root(rs, w, i, e);
            phi.iter().any(|&b| linalg::proportional(&p, rs.root(b)))
        })
    }))
}

/// One involution conjugacy class, represented by `w_J` for the
/// lexicographically least `J` in its subset class.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    pub parabolic: ParabolicSubset,
    pub eig: EigenDecomposition,
    pub special: bool,
    /// `det = +1` on `V`, i.e. `dim V_{−1}` is even.
    pub even: bool,
}

impl InvolutionClass {
    pub fn new(rs: &RootSystem, parabolic: ParabolicSubset) -> Result<Self> {
        let w = &parabolic.longest;
        let eig = eigenspaces(rs, w)?;
        if eig.basis_plus.len() + eig.basis_minus.len() != rs.rank() {
            return Err(Error::Internal(format!("{}: eigenspaces do not span V", rs.ctype())));
        }
        if eig.phi_minus != rs.parabolic_roots(parabolic.j) {
            return Err(Error::Internal(format!(
                "{}: Φ_(-1) of w_J differs from Φ_J for J = {}",
                rs.ctype(),
                parabolic.j
            )));
        }
        let special = is_special(rs, w)?;
        let even = eig.basis_minus.len() % 2 == 0;
        Ok(InvolutionClass {
            parabolic,
            eig,
            special,
            even,
        })
    }

    pub fn j(&self) -> Subset {
        self.parabolic.j
    }

    pub fn element(&self) -> &GroupElement {
        &self.parabolic.longest
    }

    pub fn components(&self) -> &[CoxeterType] {
        &self.parabolic.components
    }

    pub fn dim_plus(&self) -> usize {
        self.eig.basis_plus.len()
    }

    pub fn dim_minus(&self) -> usize {
        self.eig.basis_minus.len()
    }

    pub fn is_identity(&self) -> bool {
        self.parabolic.j.is_empty()
    }
}

/// Involution classes (identity included) from precomputed subset classes.
pub fn involution_classes_from(rs: &RootSystem, classes: &SubsetClasses) -> Result<Vec<InvolutionClass>> {
    let mut out = Vec::new();
    for j in classes.representatives() {
        let p = ParabolicSubset::new(rs, j)?;
        if p.central {
            out.push(InvolutionClass::new(rs, p)?);
        }
    }
    Ok(out)
}

pub fn involution_classes(rs: &RootSystem) -> Result<Vec<InvolutionClass>> {
    involution_classes_from(rs, &subset_classes(rs))
}

/// The representatives `X_W` of the special involution classes.
pub fn special_class_reps(rs: &RootSystem) -> Result<Vec<InvolutionClass>> {
    Ok(involution_classes(rs)?
        .into_iter()
        .filter(|c| c.special)
        .collect())
}

/// Brute-force check that the class representatives are pairwise
/// non-conjugate and that every involution of `W` is conjugate to one.
pub fn check_classes_exhaustive(
    rs: &RootSystem,
    group: &GroupTable,
    reps: &[InvolutionClass],
) -> Result<bool> {
    let involutions: BTreeSet<usize> = (0..group.len())
        .filter(|&i| group.get(i).is_involution_or_identity())
        .collect();
    let mut covered = BTreeSet::new();
    for c in reps {
        let idx = group
            .index_of(c.element())
            .ok_or_else(|| Error::Internal("w_J missing from the group table".into()))?;
        for k in group.conjugacy_class(rs, idx) {
            if !covered.insert(k) {
                return Ok(false);
            }
        }
    }
    Ok(covered == involutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::{enumerate_group, longest_element};
    use crate::exactfield::poly::{q, Q};

    fn build(t: CoxeterType) -> RootSystem {
        RootSystem::build(t).unwrap()
    }

    fn reps(rs: &RootSystem) -> Vec<String> {
        involution_classes(rs)
            .unwrap()
            .iter()
            .map(|c| c.j().to_string())
            .collect()
    }

    #[test]
    fn class_lists() {
        assert_eq!(reps(&build(CoxeterType::A(1))), ["{}", "{1}"]);
        assert_eq!(reps(&build(CoxeterType::A(3))), ["{}", "{1}", "{1,3}"]);
        assert!(reps(&build(CoxeterType::D(5))).contains(&"{2,3,4,5}".to_string()));
    }

    #[test]
    fn classes_are_exhaustive_by_brute_force() {
        for t in [CoxeterType::A(3), CoxeterType::B(4), CoxeterType::D(5), CoxeterType::H(3), CoxeterType::I2(8)] {
            let rs = build(t);
            let group = enumerate_group(&rs, 60_000).unwrap();
            let classes = involution_classes(&rs).unwrap();
            assert!(check_classes_exhaustive(&rs, &group, &classes).unwrap(), "{t}");
        }
    }

    #[test]
    fn identity_eigenspaces() {
        let rs = build(CoxeterType::B(3));
        let e = eigenspaces(&rs, &GroupElement::identity(&rs)).unwrap();
        assert_eq!(e.basis_plus.len(), 3);
        assert!(e.basis_minus.is_empty());
        assert_eq!(e.phi_plus.len(), rs.num_roots());
        assert!(e.phi_minus.is_empty());
    }

    #[test]
    fn non_involution_is_rejected() {
        let rs = build(CoxeterType::A(2));
        let w = GroupElement::simple(&rs, 0).compose(&GroupElement::simple(&rs, 1));
        assert!(matches!(eigenspaces(&rs, &w), Err(Error::NotInvolution)));
        assert!(matches!(is_special(&rs, &w), Err(Error::NotInvolution)));
    }

    #[test]
    fn d5_counterexample() {
        let rs = build(CoxeterType::D(5));
        let w = longest_element(&rs, Subset::from_labels(&[2, 3, 4, 5]));
        let e = eigenspaces(&rs, &w).unwrap();
        assert_eq!(e.basis_plus.len(), 1);
        let v1 = rs.to_ambient(&e.basis_plus[0]).unwrap();
        assert!(v1[0] != q(0) && v1[1..].iter().all(|c| *c == q(0)), "V_1 is the ε1 line");
        assert!(e.phi_plus.is_empty());
        assert_eq!(e.basis_minus.len(), 4);
        let alpha = rs.root(0); // ε1 − ε2
        let p = project(&rs, &w, alpha, Eigen::Minus).unwrap();
        let expected: Vec<Q> = vec![q(0), q(-1), q(0), q(0), q(0)];
        assert_eq!(rs.to_ambient(&p).unwrap(), expected);
        assert!(!is_special(&rs, &w).unwrap());
    }

    #[test]
    fn d4_a1_cubed_fixes_one_root_pair() {
        let rs = build(CoxeterType::D(4));
        let w = longest_element(&rs, Subset::from_labels(&[1, 3, 4]));
        let e = eigenspaces(&rs, &w).unwrap();
        let fixed: Vec<Vec<Q>> = e.phi_plus.iter().map(|&i| rs.to_ambient(rs.root(i)).unwrap()).collect();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.contains(&vec![q(1), q(1), q(0), q(0)]));
        assert!(fixed.contains(&vec![q(-1), q(-1), q(0), q(0)]));
    }

    #[test]
    fn special_examples() {
        let a3 = build(CoxeterType::A(3));
        assert!(is_special(&a3, &GroupElement::identity(&a3)).unwrap());
        assert!(!is_special(&a3, &longest_element(&a3, Subset::from_labels(&[1, 3]))).unwrap());
        for t in [CoxeterType::A(4), CoxeterType::F4, CoxeterType::H(3), CoxeterType::I2(7)] {
            let rs = build(t);
            for r in 0..rs.rank() {
                let s = GroupElement::simple(&rs, r);
                assert!(is_special(&rs, &s).unwrap());
                // -s is special too, when -1 ∈ W
                let w0 = longest_element(&rs, Subset::full(rs.rank()));
                if t.longest_is_central() {
                    assert!(is_special(&rs, &w0.compose(&s)).unwrap());
                }
            }
        }
    }

    #[test]
    fn special_reps_in_type_a() {
        for n in 2..=6 {
            let rs = build(CoxeterType::A(n));
            let x = special_class_reps(&rs).unwrap();
            let shown: Vec<String> = x.iter().map(|c| c.j().to_string()).collect();
            assert_eq!(shown, ["{}", "{1}"], "A{n}");
        }
        assert_eq!(special_class_reps(&build(CoxeterType::A(1))).unwrap().len(), 2);
        let d5 = special_class_reps(&build(CoxeterType::D(5))).unwrap();
        assert!(d5.iter().all(|c| c.j() != Subset::from_labels(&[2, 3, 4, 5])));
    }

    #[test]
    fn fast_test_matches_definition() {
        for t in [
            CoxeterType::A(4),
            CoxeterType::B(4),
            CoxeterType::C(4),
            CoxeterType::D(5),
            CoxeterType::D(6),
            CoxeterType::F4,
            CoxeterType::H(3),
            CoxeterType::I2(10),
        ] {
            let rs = build(t);
            for c in involution_classes(&rs).unwrap() {
                assert_eq!(c.special, is_special_by_definition(&rs, c.element()).unwrap(), "{t} {}", c.j());
            }
        }
    }

    #[test]
    fn zero_projection_convention_is_immaterial() {
        for t in [CoxeterType::B(4), CoxeterType::D(5), CoxeterType::E(6), CoxeterType::H(4)] {
            let rs = build(t);
            for c in involution_classes(&rs).unwrap() {
                let w = c.element();
                for i in 0..rs.num_roots() {
                    for e in Eigen::BOTH {
                        let p = project(&rs, w, rs.root(i), e).unwrap();
                        if linalg::is_zero(&p) {
                            // then α ∈ V_{−ε}, so α itself witnesses the other side
                            assert!(c.eig.phi(e.opposite()).contains(&i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projections_sum_to_the_vector() {
        let rs = build(CoxeterType::E(6));
        for c in involution_classes(&rs).unwrap() {
            for v in rs.roots() {
                let plus = project(&rs, c.element(), v, Eigen::Plus).unwrap();
                let minus = project(&rs, c.element(), v, Eigen::Minus).unwrap();
                assert_eq!(&linalg::add(&plus, &minus), v);
                assert_eq!(project(&rs, c.element(), &plus, Eigen::Plus).unwrap(), plus);
            }
        }
        let id = GroupElement::identity(&rs);
        assert!(linalg::is_zero(&project(&rs, &id, rs.root(3), Eigen::Minus).unwrap()));
    }
}
