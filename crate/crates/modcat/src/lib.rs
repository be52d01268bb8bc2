//! Exact-arithmetic toolkit for finite metric groups and integral
//! premodular fusion data.
//!
//! Everything is computed in cyclotomic fields: twists, S-matrix entries,
//! Gauss sums and central charges are exact values in `Q(zeta_N)`, never
//! floating point. Floats appear only in display approximations and as a
//! seed for Frobenius-Perron dimension candidates, which are then verified
//! exactly.
//!
//! The main layers, bottom up:
//!
//! * [`cyclotomic`] — roots of unity as rational exponents, field elements
//!   of `Q(zeta_N)` with canonical (minimal-conductor) representation,
//!   exact integer square roots.
//! * [`abelian`] — finite abelian groups as tuples of cyclic factors, with
//!   subgroup enumeration and quotients.
//! * [`metric`] — quadratic forms on finite abelian groups: Gauss sums,
//!   central charge, orthogonal complements, isotropic and Lagrangian
//!   subgroups, reduction, anisotropic kernels and minimal complements.
//!   `metric::sweep` holds the dense exhaustive-enumeration engine.
//! * [`fusion`] — fusion rings with Frobenius-Perron dimensions, subring
//!   lattice, adjoint subring and commutators.
//! * [`premodular`] — twists and integer dimensions on a fusion ring:
//!   S-matrix, modularity, centralizers, gradings, nilpotency,
//!   subcategory classification, group-theoreticality, Sylow
//!   decomposition and pointed complements.
//! * [`catalog`] — named constructors for the small standard families used
//!   by the test suites.
//! * [`io`] / [`cli`] — file formats and the command-line front end.

pub mod abelian;
pub mod caps;
pub mod catalog;
pub mod cli;
pub mod cyclotomic;
pub mod fusion;
pub mod io;
pub mod metric;
pub mod premodular;
pub mod report;
