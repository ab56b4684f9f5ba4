//! Octonions, the triality automorphisms of so(8), and the orbit geometry of
//! four cohomogeneity-one actions built from `G2` and `SO(7)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`octonion`]: the octonion algebra on the basis `e0..e7`.
//! * [`lie`], [`subspace`], [`eigen`]: dense 8x8 matrices, the `G_ij` and
//!   `V_i(λ, μ, ν)` elements of so(8), the invariant inner product, the matrix
//!   exponential, Gram-Schmidt subspaces and a Jacobi eigensolver.
//! * [`triality`]: the automorphisms α, β, γ of so(8), the named subalgebras
//!   (g2, su3, so4, u3, so3⊕so4, so7) and one-parameter lifts to Spin(7).
//! * [`orbit`]: tangent spaces, unit normals and shape operators of the
//!   `H × K` orbits through `g(t)` for the action types II to V.
//! * [`classify`]: minimal, austere and proper-biharmonic principal orbits,
//!   and comparison against the closed-form principal curvatures.
//! * [`cli`]: the report layer behind the `g2orbits` binary.

pub mod classify;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod lie;
pub mod octonion;
pub mod orbit;
pub mod roots;
pub mod subspace;
pub mod triality;
pub mod verify;

pub use error::{Error, Result};
pub use lie::{Mat8, VElement};
pub use octonion::Octonion;
pub use orbit::{ActionSpec, ActionType};
