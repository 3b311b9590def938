use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type, always admissible once constructed.
///
/// `B` and `C` have the same Coxeter group but different root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl CoxeterType {
    pub fn new(family: char, rank: usize, m: Option<u32>) -> Result<Self> {
        let t = match (family.to_ascii_uppercase(), m) {
            ('A', None) => CoxeterType::A(rank),
            ('B', None) => CoxeterType::B(rank),
            ('C', None) => CoxeterType::C(rank),
            ('D', None) => CoxeterType::D(rank),
            ('E', None) => CoxeterType::E(rank),
            ('F', None) if rank == 4 => CoxeterType::F4,
            ('H', None) => CoxeterType::H(rank),
            ('I', Some(m)) if rank == 2 => CoxeterType::I2(m),
            _ => {
                return Err(Error::InvalidType(format!(
                    "{family}{rank}{}",
                    m.map(|m| format!("({m})")).unwrap_or_default()
                )))
            }
        };
        t.check()?;
        Ok(t)
    }

    fn check(self) -> Result<()> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) | CoxeterType::C(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::E(n) => (6..=8).contains(&n),
            CoxeterType::F4 => true,
            CoxeterType::H(n) => (3..=4).contains(&n),
            CoxeterType::I2(m) => m >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidType(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n)
            | CoxeterType::B(n)
            | CoxeterType::C(n)
            | CoxeterType::D(n)
            | CoxeterType::E(n)
            | CoxeterType::H(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    pub fn is_crystallographic(self) -> bool {
        !matches!(self, CoxeterType::H(_) | CoxeterType::I2(_))
    }

    /// Group order from the product of the degrees.
    pub fn group_order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) | CoxeterType::C(n) => (1u64 << n) * fact(n),
            CoxeterType::D(n) => (1u64 << (n - 1)) * fact(n),
            CoxeterType::E(6) => 51_840,
            CoxeterType::E(7) => 2_903_040,
            CoxeterType::E(_) => 696_729_600,
            CoxeterType::F4 => 1_152,
            CoxeterType::H(3) => 120,
            CoxeterType::H(_) => 14_400,
            CoxeterType::I2(m) => 2 * m as u64,
        }
    }

    /// Number of positive roots, i.e. the length of the longest element.
    pub fn positive_root_count(self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) | CoxeterType::C(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::E(6) => 36,
            CoxeterType::E(7) => 63,
            CoxeterType::E(_) => 120,
            CoxeterType::F4 => 24,
            CoxeterType::H(3) => 15,
            CoxeterType::H(_) => 60,
            CoxeterType::I2(m) => m as usize,
        }
    }

    /// Whether the longest element is central, read off the type: it fails
    /// exactly for `A_n (n ≥ 2)`, `D_n` with `n` odd, `E6` and `I2(m)` with
    /// `m` odd.
    pub fn longest_is_central(self) -> bool {
        match self {
            CoxeterType::A(n) => n == 1,
            CoxeterType::D(n) => n % 2 == 0,
            CoxeterType::E(n) => n != 6,
            CoxeterType::I2(m) => m % 2 == 0,
            _ => true,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::C(n) => write!(f, "C{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A5`, `b4`, `E7`, `I2(7)` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        if family.eq_ignore_ascii_case(&'I') {
            let inner = rest
                .strip_prefix("2(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let m: u32 = inner.trim().parse().map_err(|_| bad())?;
            return CoxeterType::new('I', 2, Some(m));
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        CoxeterType::new(family, rank, None)
    }
}
