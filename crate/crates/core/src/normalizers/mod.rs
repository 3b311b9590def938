//! Bulky parabolic subgroups: `N_W(W_J) = W_J × N_J`.
//!
//! Bulkiness is decided by interchangeable strategies registered by name
//! (see [`StrategyRegistry`]). The brute strategy and the
//! centralizer/normalizer check need the full element table and therefore
//! only run inside the oracle band.

mod strategies;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coxgroup::{
    enumerate_group, longest_element, subset_classes, GroupElement, GroupTable, ParabolicSubset,
    SubsetClasses,
};
use crate::error::{Error, Result};
use crate::involutions::involution_classes_from;
use crate::rootsystem::{CoxeterType, RootSystem, Subset};

pub use strategies::{
    coset_reps_dj, groupoid_test, loop_test, normalizer_of_parabolic, BruteStrategy, FastStrategy,
    GroupoidStrategy, LoopStrategy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Loops,
    Groupoid,
    Brute,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Loops => "loops",
            Method::Groupoid => "groupoid",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that `N_J` acts non-trivially on `W_J`. Simple reflections are
/// given by their 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// `L ~ J`, `K = L ∪ {s}`, `L^{w_K} = L`, and `t^{w_L w_K} ≠ t` for `t ∈ L`.
    Generator { l: Subset, k: Subset, t: usize },
    /// An element `x` (as a reduced word) normalizing `W_J` with `t^x ≠ t`.
    Element { word: Vec<usize>, t: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Generator { l, k, t } => {
                write!(f, "L={l} K={k}: s{t}^(w_L w_K) ≠ s{t}")
            }
            Witness::Element { word, t } => {
                let w: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
                let w = if w.is_empty() { "1".to_string() } else { w.join("·") };
                write!(f, "x={w}: s{t}^x ≠ s{t}")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizerReport {
    pub j: Subset,
    pub components: Vec<CoxeterType>,
    pub bulky: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

/// Shared, immutable inputs for bulkiness decisions on one root system.
pub struct BulkyContext<'a> {
    rs: &'a RootSystem,
    classes: SubsetClasses,
    longest: Vec<GroupElement>,
    oracle: Option<Oracle>,
    oracle_threshold: usize,
}

/// The enumerated group together with the inverse of each element.
pub struct Oracle {
    pub table: GroupTable,
    pub inverses: Vec<usize>,
}

impl<'a> BulkyContext<'a> {
    /// Context without the element table; brute-force checks will report
    /// [`Error::SizeExceeded`].
    pub fn new(rs: &'a RootSystem) -> Self {
        let classes = subset_classes(rs);
        let longest = Subset::all(rs.rank())
            .map(|k| longest_element(rs, k))
            .collect();
        BulkyContext {
            rs,
            classes,
            longest,
            oracle: None,
            oracle_threshold: 0,
        }
    }

    /// Also enumerate `W` if `|W| ≤ threshold`.
    pub fn with_oracle(rs: &'a RootSystem, threshold: usize) -> Self {
        let mut ctx = Self::new(rs);
        ctx.oracle_threshold = threshold;
        if rs.ctype().group_order() <= threshold as u64 {
            if let Ok(table) = enumerate_group(rs, threshold) {
                let inverses = table.inverse_indices();
                ctx.oracle = Some(Oracle { table, inverses });
            }
        }
        ctx
    }

    pub fn rs(&self) -> &RootSystem {
        self.rs
    }

    pub fn classes(&self) -> &SubsetClasses {
        &self.classes
    }

    pub fn longest(&self, k: Subset) -> &GroupElement {
        &self.longest[k.bits() as usize]
    }

    pub fn oracle(&self) -> Result<&Oracle> {
        self.oracle.as_ref().ok_or(Error::SizeExceeded {
            limit: self.oracle_threshold,
        })
    }

    pub fn has_oracle(&self) -> bool {
        self.oracle.is_some()
    }

    fn report(&self, j: Subset, witness: Option<Witness>, method: Method) -> Result<NormalizerReport> {
        Ok(NormalizerReport {
            j,
            components: crate::rootsystem::classify_components(self.rs, j)?,
            bulky: witness.is_none(),
            witness,
            method,
        })
    }
}

/// A way of deciding whether `W_J` is bulky.
pub trait BulkyStrategy: Send + Sync {
    fn method(&self) -> Method;

    fn decide(&self, ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport>;

    fn name(&self) -> &'static str {
        self.method().name()
    }
}

/// Bulkiness strategies selectable by name.
pub struct StrategyRegistry {
    entries: BTreeMap<&'static str, Box<dyn BulkyStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, strategy: Box<dyn BulkyStrategy>) {
        self.entries.insert(strategy.name(), strategy);
    }

    pub fn get(&self, name: &str) -> Result<&dyn BulkyStrategy> {
        self.entries
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::InvalidOperand(format!("unknown bulky method `{name}`")))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(FastStrategy));
        r.register(Box::new(LoopStrategy));
        r.register(Box::new(GroupoidStrategy));
        r.register(Box::new(BruteStrategy));
        r
    }
}

pub fn bulky_fast(ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
    FastStrategy.decide(ctx, j)
}

pub fn bulky_brute(ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
    BruteStrategy.decide(ctx, j)
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop2Row {
    pub j: Subset,
    pub centralizer_order: usize,
    pub normalizer_order: usize,
    pub equal: bool,
}

/// `C_W(w_J) = N_W(W_J)` for every involution class representative.
pub fn verify_prop2(ctx: &BulkyContext) -> Result<Vec<Prop2Row>> {
    let oracle = ctx.oracle()?;
    let rs = ctx.rs;
    let mut rows = Vec::new();
    for j in ctx.classes.representatives() {
        let wj = ctx.longest(j);
        if !j.iter().all(|s| wj.apply(s) == rs.negative_of(s)) {
            continue;
        }
        let centralizer: Vec<usize> = (0..oracle.table.len())
            .filter(|&i| {
                let x = oracle.table.get(i);
                x.compose(wj) == wj.compose(x)
            })
            .collect();
        let normalizer = normalizer_of_parabolic(ctx, j)?;
        rows.push(Prop2Row {
            j,
            centralizer_order: centralizer.len(),
            normalizer_order: normalizer.len(),
            equal: centralizer == normalizer,
        });
    }
    Ok(rows)
}

/// One involution class with both verdicts.
#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub j: Subset,
    pub components: Vec<CoxeterType>,
    pub dim_plus: usize,
    pub dim_minus: usize,
    pub special: bool,
    pub bulky: bool,
    /// Brute-force verdict, when the oracle ran.
    pub bulky_brute: Option<bool>,
    pub even: bool,
    pub witness: Option<Witness>,
}

impl ClassVerdict {
    pub fn agrees(&self) -> bool {
        self.special == self.bulky && self.bulky_brute.is_none_or(|b| b == self.bulky)
    }
}

/// Special versus bulky on every involution class, bulkiness decided by
/// `strategy` and cross-checked by brute force inside the oracle band.
pub fn verify_theorem1(ctx: &BulkyContext, strategy: &dyn BulkyStrategy) -> Result<Vec<ClassVerdict>> {
    let mut rows = Vec::new();
    for class in involution_classes_from(ctx.rs, &ctx.classes)? {
        let j = class.j();
        let report = strategy.decide(ctx, j)?;
        let bulky_brute = if ctx.has_oracle() {
            Some(bulky_brute(ctx, j)?.bulky)
        } else {
            None
        };
        rows.push(ClassVerdict {
            j,
            components: class.components().to_vec(),
            dim_plus: class.dim_plus(),
            dim_minus: class.dim_minus(),
            special: class.special,
            bulky: report.bulky,
            bulky_brute,
            even: class.even,
            witness: report.witness,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct BulkyClass {
    pub j: Subset,
    pub components: Vec<CoxeterType>,
    pub central: bool,
    pub bulky: bool,
    pub witness: Option<Witness>,
}

/// Bulkiness of every subset class, central `w_J` or not.
pub fn classify_bulky_all(ctx: &BulkyContext, strategy: &dyn BulkyStrategy) -> Result<Vec<BulkyClass>> {
    ctx.classes
        .representatives()
        .map(|j| {
            let p = ParabolicSubset::new(ctx.rs, j)?;
            let r = strategy.decide(ctx, j)?;
            Ok(BulkyClass {
                j,
                components: p.components,
                central: p.central,
                bulky: r.bulky,
                witness: r.witness,
            })
        })
        .collect()
}

/// Outcome of the centrality remark for one type.
#[derive(Clone, Debug, Serialize)]
pub struct RemarkCheck {
    pub longest_central: bool,
    /// Bulky classes whose `w_J` is not central in `W_J`.
    pub noncentral_bulky: Vec<Subset>,
    pub holds: bool,
}

/// With `w_S` central every bulky class has central `w_J`; without it, some
/// bulky class has non-central `w_J`.
pub fn remark_check(rs: &RootSystem, classes: &[BulkyClass]) -> RemarkCheck {
    let longest_central = longest_element(rs, Subset::full(rs.rank()))
        .perm()
        .iter()
        .enumerate()
        .all(|(i, &k)| k as usize == rs.negative_of(i));
    let noncentral_bulky: Vec<Subset> = classes
        .iter()
        .filter(|c| c.bulky && !c.central)
        .map(|c| c.j)
        .collect();
    let holds = longest_central == noncentral_bulky.is_empty();
    RemarkCheck {
        longest_central,
        noncentral_bulky,
        holds,
    }
}
