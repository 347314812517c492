//! Rational `(a,b)`-Dyck paths and Dyck tilings.
//!
//! Boxes are named by their lower-left lattice corner `(x, y)`. A word's
//! Young diagram is the set of boxes left of the path, so a lower path
//! `lam` sits below an upper path `mu` when the diagram of `lam` contains
//! that of `mu`, and tilings fill the difference.

pub mod decomp;
pub mod histories;
pub mod incidence;
pub mod paths;
pub mod qpoly;
pub mod tilings;
