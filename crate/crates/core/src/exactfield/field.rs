//! Real number fields `Q(γ)` with `γ = 2cos(π/m)`, and the minimal
//! polynomial search that realizes them.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::poly::{from_f64, q, sign, QPoly, Q};
use crate::error::{Error, Result};

/// Largest `m` accepted by [`minpoly_2cos`]. The factor search is
/// exponential in the number of distinct roots of the Chebyshev polynomial.
pub const MAX_COS_ORDER: u32 = 40;

/// Which real field the coordinates live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "m", rename_all = "kebab-case")]
pub enum FieldKind {
    Rational,
    QuadraticSqrt5,
    CosExtension(u32),
}

/// A field `Q(γ)` given by the monic minimal polynomial of `γ` and a
/// rational interval that isolates the intended real root.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    minpoly: QPoly,
    lo: Q,
    hi: Q,
}

pub type Field = Arc<FieldSpec>;

impl FieldSpec {
    pub fn rational() -> Field {
        Arc::new(FieldSpec {
            kind: FieldKind::Rational,
            minpoly: QPoly::x(),
            lo: q(-1),
            hi: q(1),
        })
    }

    /// `Q(√5)` generated by the golden ratio `2cos(π/5)`.
    pub fn sqrt5() -> Field {
        let mut spec = minpoly_2cos(5).expect("m = 5 is admissible");
        spec.kind = FieldKind::QuadraticSqrt5;
        Arc::new(spec)
    }

    /// `Q(2cos(π/m))`; degree 1 for `m = 3`.
    pub fn cos_extension(m: u32) -> Result<Field> {
        Ok(Arc::new(minpoly_2cos(m)?))
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(1)
    }

    /// Floating-point value of the generator. Display and sanity checks only.
    pub fn approx_generator(&self) -> f64 {
        match self.kind {
            FieldKind::Rational => 0.0,
            FieldKind::QuadraticSqrt5 => 2.0 * (PI / 5.0).cos(),
            FieldKind::CosExtension(m) => 2.0 * (PI / m as f64).cos(),
        }
    }

    pub(crate) fn isolating_interval(&self) -> (&Q, &Q) {
        (&self.lo, &self.hi)
    }

    pub fn descriptor(&self) -> String {
        match self.kind {
            FieldKind::Rational => "Q".to_string(),
            FieldKind::QuadraticSqrt5 => format!("Q(γ), γ = 2cos(π/5), {} = 0", self.minpoly),
            FieldKind::CosExtension(m) => {
                format!("Q(γ), γ = 2cos(π/{m}), {} = 0", self.minpoly)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// `C_k(x) = 2·T_k(x/2)`, so that `C_k(2cos θ) = 2cos(kθ)`.
pub(crate) fn chebyshev_2(k: u32) -> QPoly {
    let mut prev = QPoly::from_ints(&[2]);
    let mut cur = QPoly::x();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = QPoly::x().mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn numeric_poly(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    c
}

/// Rounds a numerically computed monic polynomial to an integer one if every
/// coefficient is within `1e-6` of an integer.
fn round_integral(coeffs: &[f64]) -> Option<QPoly> {
    let mut out = Vec::with_capacity(coeffs.len());
    for &c in coeffs {
        let r = c.round();
        if (c - r).abs() > 1e-6 {
            return None;
        }
        out.push(q(r as i64));
    }
    Some(QPoly::new(out))
}

fn divides(d: &QPoly, p: &QPoly) -> bool {
    p.rem(d).is_zero()
}

fn has_integer_root(p: &QPoly) -> bool {
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return true;
    }
    let c0 = c0.to_integer().abs();
    let limit = c0.to_u64().unwrap_or(u64::MAX).min(1 << 24);
    (1..=limit)
        .filter(|d| (&c0 % BigInt::from(*d)).is_zero())
        .any(|d| {
            let d = q(d as i64);
            p.eval(&d).is_zero() || p.eval(&-d).is_zero()
        })
}

/// Exhaustive search for a proper monic integer factor of `p`, whose real
/// roots are assumed to be listed in `roots`.
///
/// Returns `None` when `p` is certified irreducible. Any candidate factor
/// proposed by the floating-point products is confirmed by exact division.
fn find_proper_factor(p: &QPoly, roots: &[f64]) -> Option<QPoly> {
    let d = p.degree()?;
    if d <= 1 {
        return None;
    }
    if has_integer_root(p) {
        return Some(p.clone());
    }
    for size in 2..=d / 2 {
        for subset in roots.iter().copied().combinations(size) {
            if let Some(g) = round_integral(&numeric_poly(&subset)) {
                if divides(&g, p) {
                    return Some(g);
                }
            }
        }
    }
    None
}

/// Monic minimal polynomial of `2cos(π/m)` over `Q`.
///
/// The degree-`m` polynomial `C_m(x) + 2` has the roots `2cos((2k+1)π/m)`.
/// Its square-free part is searched for the smallest integer factor that
/// vanishes at `2cos(π/m)`, which is then certified irreducible and located
/// inside a Sturm-isolated rational interval.
pub fn minpoly_2cos(m: u32) -> Result<FieldSpec> {
    if m < 3 {
        return Err(Error::Domain(format!("2cos(π/m) needs m ≥ 3, got {m}")));
    }
    if m > MAX_COS_ORDER {
        return Err(Error::Domain(format!(
            "2cos(π/{m}) exceeds the supported order {MAX_COS_ORDER}"
        )));
    }
    let full = chebyshev_2(m).add(&QPoly::from_ints(&[2]));
    let sqfree = full.square_free();

    let mut roots: Vec<f64> = Vec::new();
    for k in 0..m {
        let r = 2.0 * ((2 * k + 1) as f64 * PI / m as f64).cos();
        if roots.iter().all(|&s| (s - r).abs() > 1e-9) {
            roots.push(r);
        }
    }
    assert_eq!(Some(roots.len()), sqfree.degree(), "root census of C_m + 2");
    let target = roots[0];
    let others = &roots[1..];

    let mut minpoly = None;
    'search: for size in 0..others.len() + 1 {
        for subset in others.iter().copied().combinations(size) {
            let mut rs = subset;
            rs.push(target);
            if let Some(g) = round_integral(&numeric_poly(&rs)) {
                if divides(&g, &sqfree) {
                    minpoly = Some((g, rs));
                    break 'search;
                }
            }
        }
    }
    let (minpoly, own_roots) = minpoly.expect("the square-free part itself vanishes at 2cos(π/m)");

    if let Some(f) = find_proper_factor(&minpoly, &own_roots) {
        return Err(Error::Internal(format!(
            "candidate minimal polynomial {minpoly} has factor {f}"
        )));
    }
    if minpoly.eval_f64(target).abs() > 1e-9 {
        return Err(Error::Internal(format!(
            "{minpoly} does not vanish at 2cos(π/{m})"
        )));
    }

    let (lo, hi) = if minpoly.degree() == Some(1) {
        let root = -minpoly.coeff(0);
        (root.clone() - q(1), root + q(1))
    } else {
        (from_f64(target - 1e-9), from_f64(target + 1e-9))
    };
    let (flo, fhi) = (minpoly.eval(&lo), minpoly.eval(&hi));
    if sign(&flo) * sign(&fhi) >= 0 || minpoly.sturm_count(&lo, &hi) != 1 {
        return Err(Error::Internal(format!(
            "could not isolate 2cos(π/{m}) as a root of {minpoly}"
        )));
    }

    Ok(FieldSpec {
        kind: FieldKind::CosExtension(m),
        minpoly,
        lo,
        hi,
    })
}

/// Euler's totient.
#[cfg(test)]
pub(crate) fn euler_phi(n: u64) -> u64 {
    use num_integer::Integer;
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}
