//! Group elements as permutations of the root list, longest elements of
//! parabolic subgroups, and conjugacy of subsets of simple reflections.

mod classes;
mod element;
mod enumerate;

pub use classes::{
    subset_classes, subset_classes_brute, LongestCache, ParabolicSubset, SubsetClasses,
};
pub use element::{
    conjugate_subset, conjugate_subset_by_inverse, from_word, in_parabolic, is_central_longest, longest_element, GroupElement,
};
pub use enumerate::{enumerate_group, GroupTable, DEFAULT_ORACLE_THRESHOLD};
