//! Fifth-order finite-difference WENO solvers for hyperbolic conservation
//! laws, with selectable nonlinear weight families (classical, mapped,
//! global-indicator and root-based).
//!
//! The crate is organised bottom-up:
//!
//! * [`indicators`] / [`weights`] / [`reconstruct`] — pointwise kernels:
//!   smoothness indicators, the weight families, and face reconstruction;
//! * [`physics`] — flux functions, wave speeds and characteristic
//!   decompositions for the advection, Burgers and Euler models;
//! * [`mesh`] / [`field`] — grids, ghost-padded storage and boundary fill;
//! * [`evolve`] — semidiscrete right-hand sides and the third-order
//!   strong-stability-preserving Runge–Kutta loop;
//! * [`reference`] — exact and high-resolution reference solutions,
//!   including an exact Riemann solver for the Euler equations.

pub mod error;
pub mod evolve;
pub mod field;
pub mod indicators;
pub mod mesh;
pub mod physics;
pub mod reconstruct;
pub mod reference;
pub mod weights;

pub use error::{Error, Result};
pub use evolve::{
    advance_euler1, advance_euler2, advance_scalar, rhs_euler1, rhs_euler2, rhs_scalar, rk3_step,
    Euler2Workspace, Rk3Workspace, StepStats, TimeStepRule, N_GHOST,
};
pub use field::{Field1, Field2, RkState};
pub use indicators::{beta_js, phi, tau_z, tau_zr_pow, IndicatorTriple, StencilWindow};
pub use mesh::{
    fill2_fixed, fill2_outflow, fill2_periodic_x, fill2_periodic_y, fill2_reflect, fill_ghosts1,
    Bc1, BoundarySpec1, Centering, Edge, Grid1D, Grid2D,
};
pub use physics::{Euler, ScalarModel};
pub use reconstruct::{
    candidate_values, linear_face_value, weno_face, weno_face_detailed, FaceReconstruction,
};
pub use reference::{
    advection_exact, burgers_shock_exact, interp_linear, sample_riemann, solve_riemann_euler,
    RiemannFan, WaveKind,
};
pub use weights::{SchemeSpec, WeightFamily, WeightTriple, LINEAR_WEIGHTS};
