//! Finite T0-spaces as posets, the 𝒰/ℱ/𝒞 constructions on them, beat
//! points and cores, and a decision procedure for the fixed point property.

pub mod catalog;
pub mod cspace;
pub mod error;
pub mod fpp;
pub mod grothendieck;
pub mod homotopy;
pub mod iso;
pub mod laws;
pub mod map;
pub mod poset;
pub mod random;
pub mod set;

pub use cspace::{CSpace, Family, Region, Side};
pub use error::{Error, Result};
pub use map::MonotoneMap;
pub use poset::FinitePoset;
pub use set::ElemSet;
