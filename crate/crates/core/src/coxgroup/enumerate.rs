use std::collections::HashMap;

use super::element::GroupElement;
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;

/// Default cap on the number of elements enumerated for brute-force checks.
pub const DEFAULT_ORACLE_THRESHOLD: usize = 60_000;

/// All elements of a (small) group in breadth-first order from the
/// identity, with a reverse index.
pub struct GroupTable {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
}

impl GroupTable {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).map(|&i| i as usize)
    }

    /// Sorted indices of the conjugacy class of element `i`, closed under
    /// conjugation by the simple reflections.
    pub fn conjugacy_class(&self, rs: &RootSystem, i: usize) -> Vec<usize> {
        let mut seen = std::collections::HashSet::from([i]);
        let mut stack = vec![i];
        while let Some(k) = stack.pop() {
            for s in 0..rs.rank() {
                let sim = GroupElement::simple(rs, s);
                let c = sim.compose(&self.elements[k]).mul_simple(rs, s);
                let idx = self.index_of(&c).expect("closed under conjugation");
                if seen.insert(idx) {
                    stack.push(idx);
                }
            }
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// `inv[i]` is the index of the inverse of element `i`.
    pub fn inverse_indices(&self) -> Vec<usize> {
        self.elements
            .iter()
            .map(|w| self.index_of(&w.inverse()).expect("closed under inverses"))
            .collect()
    }
}

/// Breadth-first closure under right multiplication by simple reflections.
/// Fails with [`Error::SizeExceeded`] as soon as more than `limit`
/// elements are found.
pub fn enumerate_group(rs: &RootSystem, limit: usize) -> Result<GroupTable> {
    let id = GroupElement::identity(rs);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0u32)]);
    let mut head = 0;
    while head < elements.len() {
        for s in 0..rs.rank() {
            let next = elements[head].mul_simple(rs, s);
            if !index.contains_key(&next) {
                if elements.len() == limit {
                    return Err(Error::SizeExceeded { limit });
                }
                index.insert(next.clone(), elements.len() as u32);
                elements.push(next);
            }
        }
        head += 1;
    }
    Ok(GroupTable { elements, index })
}
