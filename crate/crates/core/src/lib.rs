//! Exact-arithmetic toolkit for the algebraic boundaries of convex hulls of
//! low-degree rational surfaces in fourspace.
//!
//! The crate is organized around one exact kernel and a set of geometry
//! pipelines built on top of it:
//!
//! * [`rational`], [`poly`], [`unipoly`], [`interval`], [`matrix`],
//!   [`resultant`], [`roots`], [`elimination`] — exact rational arithmetic:
//!   sparse multivariate polynomials, Sylvester resultants and discriminants,
//!   Sturm real-root isolation, quadratic-form signatures and congruence
//!   diagonalization.
//! * [`counts`] — universal polynomials counting nodal and cuspidal curves in
//!   a linear system on a surface, with a self-certifying fitting oracle.
//! * [`duality`] — Plücker formulas, the genus–degree formula and
//!   tangent-developable degrees of space curves.
//! * [`veronese`] — projections of the Veronese surface, their tangency
//!   curves, dual sextics and sum-of-squares certificates.
//! * [`delpezzo`] — pencils of quadrics in P^4: singular members, signatures,
//!   real-type classification, admissible boundary pairs and the 40-point
//!   tangency configuration.
//! * [`bordiga`] — component censuses for degree-6 rational surfaces, the
//!   dual-curve invariant pipeline and nonnegative quartics with prescribed
//!   real node sets.
//! * [`convexity`] — the only non-exact module: seeded floating-point
//!   sampling of real loci, supporting-hyperplane tests and chart
//!   compactness checks.
//! * [`replay`], [`report`], [`config`] — the regression harness that checks
//!   every recorded claim end to end and emits JSON-lines reports.

pub mod bordiga;
pub mod config;
pub mod convexity;
pub mod counts;
pub mod delpezzo;
pub mod duality;
pub mod elimination;
pub mod interval;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod replay;
pub mod report;
pub mod resultant;
pub mod roots;
pub mod unipoly;
pub mod veronese;

pub use matrix::{Signature, SymMatrix};
pub use poly::RationalPoly;
pub use rational::Rational;
