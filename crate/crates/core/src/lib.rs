//! Characters and dimensions of generalized Weyl modules for twisted current
//! algebras, computed from alcove paths in twisted quantum Bruhat graphs.
//!
//! * [`rootsys`]: finite root systems of the zero-level algebras.
//! * [`weyl`]: the finite Weyl group and the hat action on affine roots.
//! * [`affine`]: affine roots, `X x| W`, beta-sequences.
//! * [`tqbg`]: the twisted quantum Bruhat graph.
//! * [`oschar`]: path enumeration, characters, specializations, dimensions.
//! * [`cli`]: the command-line front end.
//!
//! All arithmetic is exact over the integers.

pub mod affine;
pub mod cli;
pub mod charpoly;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod oschar;
pub mod rootsys;
pub mod tqbg;
pub mod weyl;

pub use charpoly::CharPoly;
pub use error::{Error, Result};
pub use model::Model;
pub use rootsys::{AffineType, Coroot, Root, RootSystem, Weight};
