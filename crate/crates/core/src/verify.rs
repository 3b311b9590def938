//! Sweep driver: every check of the theorem, the oracle band, the shape of
//! the classification, the remark on centrality and the character suite,
//! collected per type with failures as explicit rows.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxgroup::{from_word, longest_element, GroupElement, ParabolicSubset};
use crate::error::Result;
use crate::fvcharacters::{conjugacy_classes, fv_character, inner_product, trivial};
use crate::involutions::{is_special, InvolutionClass};
use crate::normalizers::{
    bulky_brute, classify_bulky_all, remark_check, verify_prop2, verify_theorem1, BulkyClass,
    BulkyContext, BulkyStrategy, ClassVerdict, Prop2Row, RemarkCheck,
};
use crate::rootsystem::{CoxeterType, RootSystem, Subset};

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub oracle_threshold: usize,
    pub seed: u64,
    /// Random conjugates tested per involution class.
    pub samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            oracle_threshold: crate::coxgroup::DEFAULT_ORACLE_THRESHOLD,
            seed: 0,
            samples: 100,
        }
    }
}

/// `A1–A7, B2–B7, C2–C7, D4–D8, E6–E8, F4, H3, H4, I2(5..12)`, keeping
/// ranks up to `max_rank`.
pub fn default_sweep(max_rank: usize) -> Vec<CoxeterType> {
    use CoxeterType::*;
    let mut types = Vec::new();
    types.extend((1..=7).map(A));
    types.extend((2..=7).map(B));
    types.extend((2..=7).map(C));
    types.extend((4..=8).map(D));
    types.extend((6..=8).map(E));
    types.extend([F4, H(3), H(4)]);
    types.extend((5..=12).map(I2));
    types.retain(|t| t.rank() <= max_rank);
    types.sort();
    types
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterCheck {
    pub order: usize,
    pub classes: usize,
    pub degree: i64,
    pub special_classes: usize,
    pub even_special_classes: usize,
    pub multiplicity_trivial: String,
    pub multiplicity_trivial_twisted: String,
}

/// Everything checked for one type.
#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub ctype: CoxeterType,
    pub field: String,
    #[serde(skip)]
    pub field_spec: crate::exactfield::Field,
    pub order: u64,
    pub oracle: bool,
    pub theorem1: Vec<ClassVerdict>,
    pub prop2: Option<Vec<Prop2Row>>,
    pub bulky_classes: Vec<BulkyClass>,
    pub remark: RemarkCheck,
    pub characters: Option<CharacterCheck>,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl TypeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn counterexamples(&self) -> usize {
        self.theorem1.iter().filter(|r| !r.agrees()).count()
    }
}

/// Bulky central classes of `C_n` are `C_m` or `C_m × A1` (`0 ≤ m ≤ n`),
/// where `C_m` is the component through the long simple root (`C_1` being a
/// long `A1`) and the optional `A1` is short.
pub fn c_shape_allows(rs: &RootSystem, j: Subset) -> bool {
    let n = rs.rank();
    let tail = (0..n).rev().take_while(|&i| j.contains(i)).count();
    let rest = j.iter().filter(|&i| i + tail < n).count();
    // a single node outside the tail is an isolated short A1
    rest <= 1
}

/// Non-trivial bulky central classes of `D_{2n}` have type `A1` or
/// `D_{2(n−1)} × A1` (with `D2 = A1×A1`).
pub fn d_even_shape_allows(n2: usize, components: &[CoxeterType]) -> bool {
    use CoxeterType::*;
    let mut sorted = components.to_vec();
    sorted.sort();
    let expected = if n2 == 4 {
        vec![A(1), A(1), A(1)]
    } else {
        vec![A(1), D(n2 - 2)]
    };
    sorted == [A(1)] || sorted == expected
}

fn shape_failures(rs: &RootSystem, rows: &[ClassVerdict], out: &mut Vec<String>) {
    let t = rs.ctype();
    let full = Subset::full(rs.rank());
    match t {
        CoxeterType::A(n) if n >= 2 => {
            let x = rows.iter().filter(|r| r.special).count();
            if x != 2 {
                out.push(format!("shape: |X_W| = {x}, expected 2"));
            }
        }
        CoxeterType::C(_) => {
            for r in rows {
                if r.bulky != c_shape_allows(rs, r.j) {
                    out.push(format!("shape: J={} bulky={} contradicts the C_m / C_m×A1 pattern", r.j, r.bulky));
                }
            }
        }
        CoxeterType::D(n) if n % 2 == 0 => {
            for r in rows.iter().filter(|r| r.bulky && !r.j.is_empty() && r.j != full) {
                if !d_even_shape_allows(n, &r.components) {
                    out.push(format!("shape: bulky J={} is neither A1 nor D{}×A1", r.j, n - 2));
                }
            }
        }
        _ => {}
    }
}

/// Special-ness is a class property and satisfies the one-dimensional
/// eigenspace criterion.
fn involution_failures(
    rs: &RootSystem,
    classes: &[InvolutionClass],
    cfg: &SweepConfig,
    out: &mut Vec<String>,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (rs.num_roots() as u64) << 8 ^ rs.rank() as u64);
    for c in classes {
        let one_dim = (c.dim_plus() == 1 && !c.eig.phi_plus.is_empty()) || c.dim_minus() == 1;
        if one_dim && !c.special {
            out.push(format!("eigenspace: J={} has a one-dimensional eigenspace but is not special", c.j()));
        }
        for _ in 0..cfg.samples {
            let len = rng.gen_range(0..=2 * rs.num_positive());
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rs.rank())).collect();
            let x = from_word(rs, &word)?;
            if is_special(rs, &c.element().conjugate_by(&x))? != c.special {
                out.push(format!("class function: special changes under conjugation for J={}", c.j()));
                break;
            }
        }
    }
    let w0 = longest_element(rs, Subset::full(rs.rank()));
    let minus_one = rs.ctype().longest_is_central();
    for i in 0..rs.rank() {
        let s = GroupElement::simple(rs, i);
        if !is_special(rs, &s)? || (minus_one && !is_special(rs, &w0.compose(&s))?) {
            out.push(format!("reflection: ±s{} is not special", i + 1));
        }
    }
    Ok(())
}

fn character_check(rs: &RootSystem, rows: &[ClassVerdict], cfg: &SweepConfig, out: &mut Vec<String>) -> Result<CharacterCheck> {
    let cd = conjugacy_classes(rs, cfg.oracle_threshold)?;
    let chi = fv_character(rs, &cd, false)?;
    let tw = fv_character(rs, &cd, true)?;
    let one = trivial(&cd);
    let m = inner_product(&cd, &chi, &one)?;
    let mt = inner_product(&cd, &tw, &one)?;
    let x = rows.iter().filter(|r| r.special).count();
    let xe = rows.iter().filter(|r| r.special && r.even).count();
    if chi.degree() != cd.order() as i64 {
        out.push(format!("character: degree {} ≠ |W| = {}", chi.degree(), cd.order()));
    }
    if m != num_rational::BigRational::from_integer(x.into()) {
        out.push(format!("character: ⟨χ, 1⟩ = {m} ≠ |X_W| = {x}"));
    }
    if mt != num_rational::BigRational::from_integer(xe.into()) {
        out.push(format!("character: ⟨χ_twisted, 1⟩ = {mt} ≠ |X_W even| = {xe}"));
    }
    Ok(CharacterCheck {
        order: cd.order(),
        classes: cd.len(),
        degree: chi.degree(),
        special_classes: x,
        even_special_classes: xe,
        multiplicity_trivial: m.to_string(),
        multiplicity_trivial_twisted: mt.to_string(),
    })
}

/// Runs every check for one type.
pub fn verify_type(t: CoxeterType, strategy: &dyn BulkyStrategy, cfg: &SweepConfig) -> Result<TypeReport> {
    let start = Instant::now();
    let rs = RootSystem::build(t)?;
    let ctx = BulkyContext::with_oracle(&rs, cfg.oracle_threshold);
    let mut failures = Vec::new();

    // centrality by action versus by type list, on every subset
    for j in Subset::all(rs.rank()) {
        if let Err(e) = ParabolicSubset::new(&rs, j) {
            failures.push(format!("centrality: {e}"));
        }
    }

    let theorem1 = verify_theorem1(&ctx, strategy)?;
    for r in theorem1.iter().filter(|r| !r.agrees()) {
        let witness = r.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default();
        failures.push(format!(
            "theorem: J={} special={} bulky={} brute={:?}{witness}",
            r.j, r.special, r.bulky, r.bulky_brute
        ));
    }
    for r in theorem1.iter().filter(|r| !r.bulky && r.witness.is_none()) {
        failures.push(format!("witness: J={} is not bulky but no witness was reported", r.j));
    }
    shape_failures(&rs, &theorem1, &mut failures);
    let classes = crate::involutions::involution_classes_from(&rs, ctx.classes())?;
    involution_failures(&rs, &classes, cfg, &mut failures)?;

    let bulky_classes = classify_bulky_all(&ctx, strategy)?;
    let remark = remark_check(&rs, &bulky_classes);
    if !remark.holds {
        failures.push(format!(
            "remark: w_S central = {}, non-central bulky classes {:?}",
            remark.longest_central,
            remark.noncentral_bulky.iter().map(ToString::to_string).collect::<Vec<_>>()
        ));
    }

    let (prop2, characters) = if ctx.has_oracle() {
        for c in &bulky_classes {
            let brute = bulky_brute(&ctx, c.j)?;
            if brute.bulky != c.bulky {
                failures.push(format!("oracle: J={} {} says {}, brute says {}", c.j, strategy.name(), c.bulky, brute.bulky));
            }
        }
        let prop2 = verify_prop2(&ctx)?;
        for r in prop2.iter().filter(|r| !r.equal) {
            failures.push(format!(
                "prop2: J={} |C_W(w_J)| = {} but |N_W(W_J)| = {}",
                r.j, r.centralizer_order, r.normalizer_order
            ));
        }
        let ch = character_check(&rs, &theorem1, cfg, &mut failures)?;
        (Some(prop2), Some(ch))
    } else {
        (None, None)
    };

    Ok(TypeReport {
        ctype: t,
        field: rs.field().descriptor(),
        field_spec: rs.field().clone(),
        order: t.group_order(),
        oracle: ctx.has_oracle(),
        theorem1,
        prop2,
        bulky_classes,
        remark,
        characters,
        failures,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Verdict profile of a rank-2 group, independent of node labels: sorted
/// `(|J|, central, bulky)` over subset classes and `(|J|, special, even)`
/// over involution classes.
pub type DihedralProfile = (Vec<(usize, bool, bool)>, Vec<(usize, bool, bool)>);

pub fn dihedral_profile(report: &TypeReport) -> DihedralProfile {
    let mut a: Vec<_> = report.bulky_classes.iter().map(|c| (c.j.len(), c.central, c.bulky)).collect();
    let mut b: Vec<_> = report.theorem1.iter().map(|r| (r.j.len(), r.special, r.even)).collect();
    a.sort();
    b.sort();
    (a, b)
}

/// `I2(3)`, `I2(4)` and `I2(6)` against `A2`, `C2` and `B2`.
pub fn dihedral_consistency(strategy: &dyn BulkyStrategy, cfg: &SweepConfig) -> Result<Vec<(CoxeterType, CoxeterType, bool)>> {
    use CoxeterType::*;
    [(I2(3), A(2)), (I2(4), C(2)), (I2(6), B(2))]
        .into_iter()
        .map(|(i, w)| {
            let a = verify_type(i, strategy, cfg)?;
            let b = verify_type(w, strategy, cfg)?;
            Ok((i, w, dihedral_profile(&a) == dihedral_profile(&b)))
        })
        .collect()
}

/// Verifies every type in parallel; the result follows the order of `types`.
pub fn sweep(types: &[CoxeterType], strategy: &dyn BulkyStrategy, cfg: &SweepConfig) -> Result<Vec<TypeReport>> {
    types
        .par_iter()
        .map(|&t| verify_type(t, strategy, cfg))
        .collect()
}
