use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar, Vector};
use crate::rootsystem::{RootIdx, RootSystem, Subset};

/// A group element, stored as the permutation it induces on the root list:
/// `w(roots[i]) = roots[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Box<[RootIdx]>,
}

impl GroupElement {
    pub fn identity(rs: &RootSystem) -> Self {
        GroupElement {
            perm: (0..rs.num_roots() as RootIdx).collect(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        GroupElement {
            perm: rs.simple_reflection(i).into(),
        }
    }

    pub fn perm(&self) -> &[RootIdx] {
        &self.perm
    }

    /// Image of root `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        }
    }

    /// `self · s_i`.
    pub fn mul_simple(&self, rs: &RootSystem, i: usize) -> GroupElement {
        GroupElement {
            perm: rs
                .simple_reflection(i)
                .iter()
                .map(|&k| self.perm[k as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0 as RootIdx; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j as usize] = i as RootIdx;
        }
        GroupElement { perm: inv.into() }
    }

    /// `x · self · x⁻¹`.
    pub fn conjugate_by(&self, x: &GroupElement) -> GroupElement {
        x.compose(self).compose(&x.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn is_involution_or_identity(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &j)| self.perm[j as usize] as usize == i)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        let n = rs.num_positive();
        self.perm[..n].iter().filter(|&&j| j as usize >= n).count()
    }

    /// `l(w·s_i) < l(w)`, i.e. `w(α_i) < 0`.
    #[inline]
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        !rs.is_positive(self.perm[i] as usize)
    }

    /// A reduced word, read left to right as a product of simple reflections.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..rs.rank()).find(|&i| w.has_right_descent(rs, i)) {
            w = w.mul_simple(rs, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Matrix in the basis of simple roots; column `j` holds `w(α_j)`.
    pub fn matrix(&self, rs: &RootSystem) -> Matrix {
        let rank = rs.rank();
        (0..rank)
            .map(|i| (0..rank).map(|j| rs.root(self.apply(j))[i].clone()).collect())
            .collect()
    }

    /// Image of an arbitrary vector in simple-root coordinates.
    pub fn act(&self, rs: &RootSystem, v: &[Scalar]) -> Vector {
        let mut out = crate::exactfield::linalg::zero_vector(rs.field(), rs.rank());
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(rs.root(self.apply(j))) {
                *o = &*o + &(c * a);
            }
        }
        out
    }
}

/// Product `s_{i1} · s_{i2} ⋯` of simple reflections.
pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<GroupElement> {
    let mut w = GroupElement::identity(rs);
    for &i in word {
        if i >= rs.rank() {
            return Err(Error::InvalidIndex(i));
        }
        w = w.mul_simple(rs, i);
    }
    Ok(w)
}

/// The longest element `w_J` of the parabolic subgroup `W_J`, built by
/// right-multiplying with the smallest non-descent `s ∈ J` until every
/// `s ∈ J` is a descent.
pub fn longest_element(rs: &RootSystem, j: Subset) -> GroupElement {
    let mut w = GroupElement::identity(rs);
    while let Some(s) = j.iter().find(|&s| !w.has_right_descent(rs, s)) {
        w = w.mul_simple(rs, s);
    }
    w
}

/// `w ∈ W_J`, by greedy `J`-descent down to the identity.
pub fn in_parabolic(rs: &RootSystem, w: &GroupElement, j: Subset) -> bool {
    let mut w = w.clone();
    while let Some(s) = j.iter().find(|&s| w.has_right_descent(rs, s)) {
        w = w.mul_simple(rs, s);
    }
    w.is_identity()
}

/// `w_J(α_s) = −α_s` for every `s ∈ J`.
pub fn is_central_longest(rs: &RootSystem, j: Subset) -> bool {
    let w = longest_element(rs, j);
    j.iter().all(|s| w.apply(s) == rs.negative_of(s))
}

/// `J^w = {w⁻¹·s·w : s ∈ J}` as a set of simple reflections, if it is one.
///
/// `w⁻¹·s_α·w = s_{w⁻¹(α)}`, so this succeeds iff `w⁻¹` maps each `α_s` to
/// a simple root up to sign.
pub fn conjugate_subset(rs: &RootSystem, j: Subset, w: &GroupElement) -> Option<Subset> {
    conjugate_subset_by_inverse(rs, j, &w.inverse())
}

/// As [`conjugate_subset`], but takes `w⁻¹` directly.
pub fn conjugate_subset_by_inverse(
    rs: &RootSystem,
    j: Subset,
    w_inv: &GroupElement,
) -> Option<Subset> {
    let rank = rs.rank();
    let mut k = Subset::EMPTY;
    for s in j.iter() {
        let image = w_inv.apply(s);
        let simple = if image < rank {
            image
        } else {
            let neg = rs.negative_of(image);
            if neg < rank {
                neg
            } else {
                return None;
            }
        };
        k = k.with(simple);
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::CoxeterType;

    fn labels(w: &[usize]) -> Vec<usize> {
        w.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn from_word_examples() {
        let a2 = RootSystem::build(CoxeterType::A(2)).unwrap();
        let w = from_word(&a2, &labels(&[1, 2, 1])).unwrap();
        assert_eq!(w.length(&a2), 3);
        assert_eq!(w, longest_element(&a2, Subset::full(2)));
        assert!(from_word(&a2, &[0, 0]).unwrap().is_identity());
        assert!(matches!(from_word(&a2, &[2]), Err(Error::InvalidIndex(2))));

        let c2 = RootSystem::build(CoxeterType::C(2)).unwrap();
        let a = from_word(&c2, &labels(&[1, 2, 1, 2])).unwrap();
        let b = from_word(&c2, &labels(&[2, 1, 2, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, longest_element(&c2, Subset::full(2)));
    }

    #[test]
    fn lengths() {
        let a2 = RootSystem::build(CoxeterType::A(2)).unwrap();
        assert_eq!(GroupElement::identity(&a2).length(&a2), 0);
        let d5 = RootSystem::build(CoxeterType::D(5)).unwrap();
        let wj = longest_element(&d5, Subset::from_labels(&[2, 3, 4, 5]));
        assert_eq!(wj.length(&d5), 12);
        let a3 = RootSystem::build(CoxeterType::A(3)).unwrap();
        assert_eq!(longest_element(&a3, Subset::full(3)).length(&a3), 6);
        assert!(longest_element(&a3, Subset::EMPTY).is_identity());
    }

    #[test]
    fn a3_longest_reverses_coordinates() {
        let a3 = RootSystem::build(CoxeterType::A(3)).unwrap();
        let w = longest_element(&a3, Subset::full(3));
        for i in 0..a3.num_roots() {
            let x = a3.to_ambient(a3.root(i)).unwrap();
            let y = a3.to_ambient(a3.root(w.apply(i))).unwrap();
            let reversed: Vec<_> = x.iter().rev().cloned().collect();
            assert_eq!(y, reversed);
        }
    }

    #[test]
    fn d5_longest_of_d4_negates_tail() {
        use crate::exactfield::poly::Q;
        let d5 = RootSystem::build(CoxeterType::D(5)).unwrap();
        let w = longest_element(&d5, Subset::from_labels(&[2, 3, 4, 5]));
        for i in 0..d5.num_roots() {
            let x = d5.to_ambient(d5.root(i)).unwrap();
            let y = d5.to_ambient(d5.root(w.apply(i))).unwrap();
            let mut expected: Vec<Q> = x.iter().map(|c| -c).collect();
            expected[0] = x[0].clone();
            assert_eq!(y, expected);
        }
    }

    #[test]
    fn centrality_examples() {
        let a2 = RootSystem::build(CoxeterType::A(2)).unwrap();
        assert!(!is_central_longest(&a2, Subset::full(2)));
        let d4 = RootSystem::build(CoxeterType::D(4)).unwrap();
        assert!(is_central_longest(&d4, Subset::full(4)));
        let a3 = RootSystem::build(CoxeterType::A(3)).unwrap();
        assert!(is_central_longest(&a3, Subset::from_labels(&[1, 3])));
    }

    #[test]
    fn conjugate_subset_examples() {
        let a2 = RootSystem::build(CoxeterType::A(2)).unwrap();
        let j = Subset::from_labels(&[1]);
        assert_eq!(conjugate_subset(&a2, j, &GroupElement::identity(&a2)), Some(j));
        let w = from_word(&a2, &labels(&[2, 1])).unwrap();
        assert_eq!(conjugate_subset(&a2, j, &w), Some(Subset::from_labels(&[2])));
        let s1 = GroupElement::simple(&a2, 0);
        assert_eq!(conjugate_subset(&a2, Subset::from_labels(&[2]), &s1), None);
        let w = from_word(&a2, &labels(&[1, 2])).unwrap();
        assert_eq!(conjugate_subset(&a2, j, &w), None);

        let c2 = RootSystem::build(CoxeterType::C(2)).unwrap();
        let w0 = longest_element(&c2, Subset::full(2));
        assert_eq!(conjugate_subset(&c2, j, &w0), Some(j));
    }

    #[test]
    fn parabolic_membership() {
        let a2 = RootSystem::build(CoxeterType::A(2)).unwrap();
        assert!(in_parabolic(&a2, &GroupElement::identity(&a2), Subset::EMPTY));
        assert!(!in_parabolic(&a2, &GroupElement::simple(&a2, 0), Subset::from_labels(&[2])));
        let d5 = RootSystem::build(CoxeterType::D(5)).unwrap();
        let j = Subset::from_labels(&[2, 3, 4, 5]);
        assert!(in_parabolic(&d5, &longest_element(&d5, j), j));
    }

    #[test]
    fn reduced_words_and_matrices() {
        let h3 = RootSystem::build(CoxeterType::H(3)).unwrap();
        let w0 = longest_element(&h3, Subset::full(3));
        let word = w0.reduced_word(&h3);
        assert_eq!(word.len(), 15);
        assert_eq!(from_word(&h3, &word).unwrap(), w0);
        // w0 = -1 in H3
        let m = w0.matrix(&h3);
        for (i, row) in m.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                assert_eq!(a.to_f64(), if i == j { -1.0 } else { 0.0 });
            }
        }
    }
}
