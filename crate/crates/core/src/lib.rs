//! String cones and string polytopes of reduced words in type A.
//!
//! Reduced words of the longest element of S_{n+1} are handled through their
//! wiring diagrams. Rigorous paths give the string cone, λ-inequalities cut
//! out the string polytope, and words of Gelfand–Cetlin type come with an
//! explicit unimodular map onto GC(λ).

pub mod error;
pub mod gc;
pub mod inequalities;
pub mod paths;
pub mod polyhedra;
pub mod rep;
pub mod verify;
pub mod wiring;
pub mod words;

pub use error::{Error, Result};
pub use inequalities::{HPolyhedron, LinearForm, Origin, Weight};
pub use paths::RigorousPath;
pub use polyhedra::{AffineMap, Constraint, Polyhedron, VRep};
pub use wiring::{Side, WiringDiagram};
pub use words::{Bullet, ReducedWord, Sigma};
