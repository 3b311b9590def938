use std::collections::HashMap;

use serde::Serialize;

use super::element::{conjugate_subset_by_inverse, longest_element, GroupElement};
use crate::error::{Error, Result};
use crate::rootsystem::{
    central_by_type, classify_components, CoxeterType, RootSystem, Subset,
};

/// A subset `J ⊆ S` together with the data derived from it.
#[derive(Clone, Debug)]
pub struct ParabolicSubset {
    pub j: Subset,
    pub longest: GroupElement,
    pub central: bool,
    pub components: Vec<CoxeterType>,
}

impl ParabolicSubset {
    pub fn new(rs: &RootSystem, j: Subset) -> Result<Self> {
        let longest = longest_element(rs, j);
        let central = j.iter().all(|s| longest.apply(s) == rs.negative_of(s));
        let components = classify_components(rs, j)?;
        if central != central_by_type(&components) {
            return Err(Error::Internal(format!(
                "{}: centrality of w_J for J = {j} disagrees with the type list",
                rs.ctype()
            )));
        }
        Ok(ParabolicSubset {
            j,
            longest,
            central,
            components,
        })
    }
}

/// A partition of all subsets of `S` into `W`-conjugacy classes.
///
/// Classes are ordered by their representative, the lexicographically
/// least member, and members within a class are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetClasses {
    classes: Vec<Vec<Subset>>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl SubsetClasses {
    fn from_union_find(rank: usize, mut parent: Vec<usize>) -> Self {
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let mut groups: HashMap<usize, Vec<Subset>> = HashMap::new();
        for j in Subset::all(rank) {
            let root = find(&mut parent, j.bits() as usize);
            groups.entry(root).or_default().push(j);
        }
        let mut classes: Vec<Vec<Subset>> = groups
            .into_values()
            .map(|mut members| {
                members.sort();
                members
            })
            .collect();
        classes.sort_by(|a, b| a[0].cmp(&b[0]));
        let mut class_of = vec![0; 1 << rank];
        for (k, members) in classes.iter().enumerate() {
            for j in members {
                class_of[j.bits() as usize] = k;
            }
        }
        SubsetClasses { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<Subset>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, j: Subset) -> usize {
        self.class_of[j.bits() as usize]
    }

    pub fn members(&self, j: Subset) -> &[Subset] {
        &self.classes[self.class_index(j)]
    }

    pub fn representative(&self, j: Subset) -> Subset {
        self.members(j)[0]
    }

    pub fn representatives(&self) -> impl Iterator<Item = Subset> + '_ {
        self.classes.iter().map(|c| c[0])
    }
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let find = |parent: &mut [usize], mut x: usize| {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    };
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Longest elements `w_K` for every `K ⊆ S`, computed on first use.
pub struct LongestCache<'a> {
    rs: &'a RootSystem,
    cache: Vec<Option<GroupElement>>,
}

impl<'a> LongestCache<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        LongestCache {
            rs,
            cache: vec![None; 1 << rs.rank()],
        }
    }

    pub fn get(&mut self, k: Subset) -> &GroupElement {
        let rs = self.rs;
        self.cache[k.bits() as usize].get_or_insert_with(|| longest_element(rs, k))
    }
}

/// Subset classes from the elementary moves `J ↦ w_K·J·w_K` with
/// `K = J ∪ {s}`, `s ∉ J`.
pub fn subset_classes(rs: &RootSystem) -> SubsetClasses {
    let rank = rs.rank();
    let mut parent: Vec<usize> = (0..1 << rank).collect();
    let mut longest = LongestCache::new(rs);
    for j in Subset::all(rank) {
        for s in (0..rank).filter(|&s| !j.contains(s)) {
            let k = j.with(s);
            // w_K is an involution
            let image = conjugate_subset_by_inverse(rs, j, longest.get(k))
                .expect("w_K maps the simple roots of K to negated simple roots of K");
            union(&mut parent, j.bits() as usize, image.bits() as usize);
        }
    }
    SubsetClasses::from_union_find(rank, parent)
}

/// Subset classes by conjugating every subset with every group element.
pub fn subset_classes_brute(rs: &RootSystem, group: &[GroupElement]) -> SubsetClasses {
    let rank = rs.rank();
    let mut parent: Vec<usize> = (0..1 << rank).collect();
    // every element occurs as some x⁻¹, so conjugating by x⁻¹ covers W
    for x in group {
        for j in Subset::all(rank) {
            if let Some(k) = conjugate_subset_by_inverse(rs, j, x) {
                union(&mut parent, j.bits() as usize, k.bits() as usize);
            }
        }
    }
    SubsetClasses::from_union_find(rank, parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::enumerate_group;

    fn classes_of(t: CoxeterType) -> (RootSystem, SubsetClasses) {
        let rs = RootSystem::build(t).unwrap();
        let c = subset_classes(&rs);
        (rs, c)
    }

    #[test]
    fn a3_reflections_are_conjugate() {
        let (_, c) = classes_of(CoxeterType::A(3));
        assert_eq!(
            c.members(Subset::from_labels(&[2])),
            &[Subset::from_labels(&[1]), Subset::from_labels(&[2]), Subset::from_labels(&[3])]
        );
    }

    #[test]
    fn c2_long_and_short_are_not_conjugate() {
        let (_, c) = classes_of(CoxeterType::C(2));
        assert_ne!(
            c.class_index(Subset::from_labels(&[1])),
            c.class_index(Subset::from_labels(&[2]))
        );
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn d5_d4_subset_is_alone() {
        let (_, c) = classes_of(CoxeterType::D(5));
        let j = Subset::from_labels(&[2, 3, 4, 5]);
        assert_eq!(c.members(j), &[j]);
    }

    #[test]
    fn moves_agree_with_brute_force_on_small_groups() {
        for t in [
            CoxeterType::A(3),
            CoxeterType::A(4),
            CoxeterType::B(3),
            CoxeterType::C(3),
            CoxeterType::D(4),
            CoxeterType::D(5),
            CoxeterType::F4,
            CoxeterType::H(3),
            CoxeterType::I2(5),
            CoxeterType::I2(6),
        ] {
            let (rs, fast) = classes_of(t);
            let group = enumerate_group(&rs, 60_000).unwrap();
            assert_eq!(fast, subset_classes_brute(&rs, group.elements()), "{t}");
        }
    }

    #[test]
    fn parabolic_subset_data() {
        let rs = RootSystem::build(CoxeterType::D(5)).unwrap();
        let p = ParabolicSubset::new(&rs, Subset::from_labels(&[2, 3, 4, 5])).unwrap();
        assert!(p.central);
        assert_eq!(p.components, vec![CoxeterType::D(4)]);
        assert_eq!(p.longest.length(&rs), 12);
    }
}
