//! Decides whether a polynomially-defined family of linear subspaces inside
//! a trivial vector bundle is a sub-bundle.
//!
//! Given a base variety `X` (cut out by an ideal in the base variables), a
//! family `F ⊆ X × k^n` (cut out by an ideal in base and fiber variables),
//! and an expected fiber dimension `d`, the library runs two exact tests:
//!
//! * per sampled base point, whether the fiber scheme is a reduced linear
//!   subspace — the fiber ideal must coincide with the linear ideal of
//!   `ker J(x)`, where `J` is the Jacobian of fiber-linear parts at the
//!   zero section;
//! * globally, whether `J` has constant rank `n − d` on all of `X` and `F`
//!   is the kernel of the bundle map `θ(x, y) = (x, J(x)y)`.
//!
//! All arithmetic is exact over ℚ or 𝔽_p. Groebner-basis formulations decide
//! emptiness and radical membership over the algebraic closure; per-point
//! analyses are restricted to points rational over the coefficient field.

pub mod bundle;
pub mod coeff;
pub mod famfile;
pub mod ideal;
pub mod poly;
pub mod report;
