//! The virtual character `Σ_{σ ∈ X_W} (2·1^W_⟨σ⟩ − ρ)` and its twisted
//! variant over even `σ`, on groups small enough to enumerate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::coxgroup::{enumerate_group, GroupElement, GroupTable};
use crate::error::{Error, Result};
use crate::involutions::special_class_reps;
use crate::rootsystem::RootSystem;

/// Conjugacy classes of `W`. Representatives are the least elements in
/// breadth-first enumeration order, and classes are sorted by them.
pub struct ClassData {
    pub table: GroupTable,
    /// Table index of each representative.
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    /// `class_of[i]` is the class of table element `i`.
    pub class_of: Vec<usize>,
}

impl ClassData {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, c: usize) -> &GroupElement {
        self.table.get(self.reps[c])
    }

    pub fn class_of_element(&self, w: &GroupElement) -> Option<usize> {
        self.table.index_of(w).map(|i| self.class_of[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VirtualCharacter {
    pub values: Vec<i64>,
}

impl VirtualCharacter {
    /// Value at the identity class.
    pub fn degree(&self) -> i64 {
        self.values[0]
    }
}

pub fn conjugacy_classes(rs: &RootSystem, threshold: usize) -> Result<ClassData> {
    let table = enumerate_group(rs, threshold)?;
    let mut class_of = vec![usize::MAX; table.len()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for i in 0..table.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members = table.conjugacy_class(rs, i);
        for &k in &members {
            class_of[k] = reps.len();
        }
        reps.push(i);
        sizes.push(members.len());
    }
    Ok(ClassData {
        table,
        reps,
        sizes,
        class_of,
    })
}

/// `1^W_⟨σ⟩(w) = |C_W(w)| · |cl(w) ∩ ⟨σ⟩| / |⟨σ⟩|`, which equals
/// `|{x : x⁻¹ w x ∈ ⟨σ⟩}| / |⟨σ⟩|`.
pub fn induced_trivial(cd: &ClassData, sigma: &GroupElement) -> Result<VirtualCharacter> {
    if !sigma.is_involution_or_identity() {
        return Err(Error::NotInvolution);
    }
    let sigma_class = cd
        .class_of_element(sigma)
        .ok_or_else(|| Error::InvalidOperand("σ is not an element of W".into()))?;
    let subgroup_order = if sigma.is_identity() { 1 } else { 2 };
    let values = (0..cd.len())
        .map(|c| {
            let hits = usize::from(c == 0) + usize::from(c == sigma_class && c != 0);
            let centralizer = cd.order() / cd.sizes[c];
            let numerator = centralizer * hits;
            if numerator % subgroup_order != 0 {
                return Err(Error::Internal("induced character value is not an integer".into()));
            }
            Ok((numerator / subgroup_order) as i64)
        })
        .collect::<Result<_>>()?;
    Ok(VirtualCharacter { values })
}

/// The regular character `ρ`.
pub fn regular(cd: &ClassData) -> VirtualCharacter {
    let mut values = vec![0; cd.len()];
    values[0] = cd.order() as i64;
    VirtualCharacter { values }
}

pub fn trivial(cd: &ClassData) -> VirtualCharacter {
    VirtualCharacter {
        values: vec![1; cd.len()],
    }
}

/// Sum over special class representatives (only even ones if `twisted`).
pub fn fv_character(rs: &RootSystem, cd: &ClassData, twisted: bool) -> Result<VirtualCharacter> {
    let rho = regular(cd);
    let mut values = vec![0i64; cd.len()];
    for class in special_class_reps(rs)? {
        if twisted && !class.even {
            continue;
        }
        let ind = induced_trivial(cd, class.element())?;
        for (v, (i, r)) in values.iter_mut().zip(ind.values.iter().zip(&rho.values)) {
            *v += 2 * i - r;
        }
    }
    Ok(VirtualCharacter { values })
}

/// `(1/|W|) Σ_classes |cl|·χ1·χ2`; characters of `W` are real.
pub fn inner_product(cd: &ClassData, a: &VirtualCharacter, b: &VirtualCharacter) -> Result<BigRational> {
    if a.values.len() != cd.len() || b.values.len() != cd.len() {
        return Err(Error::DimensionMismatch {
            expected: cd.len(),
            found: a.values.len().min(b.values.len()),
        });
    }
    let mut sum = BigInt::zero();
    for ((s, x), y) in cd.sizes.iter().zip(&a.values).zip(&b.values) {
        sum += BigInt::from(*s) * BigInt::from(*x) * BigInt::from(*y);
    }
    Ok(BigRational::new(sum, BigInt::from(cd.order())))
}
