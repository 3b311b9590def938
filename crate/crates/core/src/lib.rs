//! Finite Coxeter groups in exact arithmetic: root systems, involution
//! classes, the special-involution and bulky-parabolic properties, and the
//! virtual character `Σ (2·Ind 1 − ρ)` over special involution classes.

pub mod coxgroup;
pub mod error;
pub mod exactfield;
pub mod fvcharacters;
pub mod involutions;
pub mod normalizers;
pub mod rootsystem;
pub mod verify;

pub use error::{Error, Result};
