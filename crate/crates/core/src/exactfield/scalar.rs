use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::{q, sign, to_f64, QPoly, Q};
use crate::error::{Error, Result};

/// An element of `Q(γ)`, stored as the reduced residue `Σ c_i γ^i` with
/// `i < deg(minpoly)`.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary field operation; the only failure is division by zero.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.try_div(b)?,
    })
}

impl Scalar {
    pub fn zero(field: &Field) -> Self {
        Scalar {
            field: field.clone(),
            coeffs: vec![Q::zero(); field.degree()],
        }
    }

    pub fn from_rational(field: &Field, value: Q) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = value;
        s
    }

    pub fn from_int(field: &Field, value: i64) -> Self {
        Self::from_rational(field, q(value))
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    /// The generator `γ`.
    pub fn generator(field: &Field) -> Self {
        if field.degree() == 1 {
            Self::from_rational(field, -field.minpoly().coeff(0))
        } else {
            let mut s = Self::zero(field);
            s.coeffs[1] = Q::one();
            s
        }
    }

    /// Builds the residue of an arbitrary polynomial in `γ`.
    pub fn from_poly(field: &Field, poly: &QPoly) -> Self {
        let reduced = poly.rem(field.minpoly());
        let mut s = Self::zero(field);
        for (i, c) in reduced.coeffs().iter().enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Q> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn to_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    fn same_field(&self, other: &Scalar) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixed-field arithmetic"
        );
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::InvalidOperand("division by zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, r.recip()));
        }
        let (g, s, _) = self.to_poly().ext_gcd(self.field.minpoly());
        debug_assert!(g.degree() == Some(0), "minimal polynomial must be irreducible");
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn half(&self) -> Scalar {
        let h = Q::new(1.into(), 2.into());
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * &h).collect(),
        }
    }

    /// Exact sign in the real embedding fixed by the field's isolating
    /// interval.
    pub fn signum(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return sign(r);
        }
        let poly = self.to_poly();
        let minpoly = self.field.minpoly();
        let (lo, hi) = self.field.isolating_interval();
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        let lo_sign = sign(&minpoly.eval(&lo));
        loop {
            let (a, b) = interval_eval(&poly, &lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / q(2);
            let s = sign(&minpoly.eval(&mid));
            debug_assert_ne!(s, 0, "irreducible minimal polynomial has no rational root");
            if s == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let g = self.field.approx_generator();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * g + to_f64(c))
    }
}

/// Range of a polynomial over the rational interval `[lo, hi]` by Horner's
/// scheme in interval arithmetic.
fn interval_eval(poly: &QPoly, lo: &Q, hi: &Q) -> (Q, Q) {
    let mut acc = (Q::zero(), Q::zero());
    for c in poly.coeffs().iter().rev() {
        let products = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let min = products.iter().min().unwrap().clone();
        let max = products.iter().max().unwrap().clone();
        acc = (min + c, max + c);
    }
    acc
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other);
        self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let gamma = match i {
                0 => String::new(),
                1 => "γ".to_string(),
                _ => format!("γ^{i}"),
            };
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{gamma}")?,
                (_, false) => write!(f, "{abs}{gamma}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        let d = self.coeffs.len();
        if d == 1 {
            return Scalar {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Q::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        // Reduce with the monic minimal polynomial: γ^d = -Σ m_i γ^i.
        let minpoly = self.field.minpoly().coeffs();
        for k in (d..prod.len()).rev() {
            let top = std::mem::take(&mut prod[k]);
            if top.is_zero() {
                continue;
            }
            for (i, m) in minpoly[..d].iter().enumerate() {
                prod[k - d + i] -= &top * m;
            }
        }
        prod.truncate(d);
        Scalar {
            field: self.field.clone(),
            coeffs: prod,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
