//! Grids and ghost-cell boundary fills.
//!
//! 1D grids come in two centerings. A *node* grid places `x_i = a + i Δx`
//! for `i = 0..n-1` with `Δx = (b-a)/n`; under periodic boundaries `x_n ≡
//! x_0`, which is the natural layout for smooth convergence studies. A
//! *cell* grid places `x_i = a + (i + 1/2) Δx`, the usual finite-volume
//! style layout used by the shock problems. 2D grids are always
//! cell-centred.
//!
//! Boundary fills write the `n_ghost` cells on each side. 1D fills are
//! driven by a validated [`BoundarySpec1`]; in 2D the building blocks
//! ([`fill2_outflow`], [`fill2_reflect`], …) are composed per problem,
//! since several 2D setups need bespoke time-dependent edges.

use crate::error::{Error, Result};
use crate::field::{Field1, Field2};

/// Sample-point placement of a 1D grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Centering {
    Node,
    Cell,
}

/// Uniform 1D grid on `[a, b]` with `n` evolved points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub centering: Centering,
}

impl Grid1D {
    pub fn new(a: f64, b: f64, n: usize, centering: Centering) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidGrid(format!(
                "need finite b > a, got [{a}, {b}]"
            )));
        }
        if n < 6 {
            return Err(Error::InvalidGrid(format!(
                "need at least 6 points for a five-point stencil, got {n}"
            )));
        }
        Ok(Grid1D { a, b, n, centering })
    }

    pub fn dx(&self) -> f64 {
        (self.b - self.a) / self.n as f64
    }

    /// Coordinate of evolved point `i`.
    pub fn x(&self, i: usize) -> f64 {
        match self.centering {
            Centering::Node => self.a + i as f64 * self.dx(),
            Centering::Cell => self.a + (i as f64 + 0.5) * self.dx(),
        }
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }
}

/// Uniform cell-centred 2D grid on `[ax, bx] × [ay, by]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid2D {
    pub ax: f64,
    pub bx: f64,
    pub ay: f64,
    pub by: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Grid2D {
    pub fn new(ax: f64, bx: f64, ay: f64, by: f64, nx: usize, ny: usize) -> Result<Self> {
        if !(bx > ax && by > ay) || ![ax, bx, ay, by].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "need finite bx > ax and by > ay, got [{ax}, {bx}] x [{ay}, {by}]"
            )));
        }
        if nx < 6 || ny < 6 {
            return Err(Error::InvalidGrid(format!(
                "need at least 6 cells per direction, got {nx} x {ny}"
            )));
        }
        Ok(Grid2D {
            ax,
            bx,
            ay,
            by,
            nx,
            ny,
        })
    }

    pub fn dx(&self) -> f64 {
        (self.bx - self.ax) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.by - self.ay) / self.ny as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.ax + (i as f64 + 0.5) * self.dx()
    }

    pub fn y(&self, j: usize) -> f64 {
        self.ay + (j as f64 + 0.5) * self.dy()
    }
}

/// One-sided 1D boundary condition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bc1<const M: usize> {
    /// Wrap around; both sides of the domain must agree on this.
    Periodic,
    /// Zeroth-order extrapolation of the outermost cell.
    Outflow,
    /// Ghosts pinned to a constant state.
    Fixed([f64; M]),
}

/// Validated pair of 1D boundary conditions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundarySpec1<const M: usize> {
    pub left: Bc1<M>,
    pub right: Bc1<M>,
}

impl<const M: usize> BoundarySpec1<M> {
    pub fn new(left: Bc1<M>, right: Bc1<M>) -> Result<Self> {
        let lp = matches!(left, Bc1::Periodic);
        let rp = matches!(right, Bc1::Periodic);
        if lp != rp {
            return Err(Error::InvalidBoundary(
                "periodic boundaries must be used on both sides".into(),
            ));
        }
        Ok(BoundarySpec1 { left, right })
    }

    pub fn periodic() -> Self {
        BoundarySpec1 {
            left: Bc1::Periodic,
            right: Bc1::Periodic,
        }
    }

    pub fn outflow() -> Self {
        BoundarySpec1 {
            left: Bc1::Outflow,
            right: Bc1::Outflow,
        }
    }
}

/// Fill the ghost cells of a 1D field.
pub fn fill_ghosts1<const M: usize>(u: &mut Field1<M>, bc: &BoundarySpec1<M>) {
    let n = u.n();
    let ng = u.n_ghost();
    debug_assert!(n >= ng);
    let p = u.padded_mut();
    match bc.left {
        Bc1::Periodic => {
            for g in 0..ng {
                p[g] = p[n + g];
            }
        }
        Bc1::Outflow => {
            for g in 0..ng {
                p[g] = p[ng];
            }
        }
        Bc1::Fixed(s) => {
            for g in 0..ng {
                p[g] = s;
            }
        }
    }
    match bc.right {
        Bc1::Periodic => {
            for g in 0..ng {
                p[ng + n + g] = p[ng + g];
            }
        }
        Bc1::Outflow => {
            for g in 0..ng {
                p[ng + n + g] = p[ng + n - 1];
            }
        }
        Bc1::Fixed(s) => {
            for g in 0..ng {
                p[ng + n + g] = s;
            }
        }
    }
}

/// One of the four edges of a 2D domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    Left,
    Right,
    Bottom,
    Top,
}

impl Edge {
    /// Index of the momentum component normal to this edge in a
    /// `(ρ, ρu, ρv, E)` state.
    pub fn normal_momentum(&self) -> usize {
        match self {
            Edge::Left | Edge::Right => 1,
            Edge::Bottom | Edge::Top => 2,
        }
    }
}

/// Zeroth-order extrapolation on one edge (corner ghosts included for the
/// y-edges, so fill x-edges first).
pub fn fill2_outflow<const M: usize>(u: &mut Field2<M>, edge: Edge) {
    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    match edge {
        Edge::Left => {
            for pj in 0..ny + 2 * ng {
                let src = u.at_padded(ng, pj);
                for g in 0..ng {
                    *u.at_padded_mut(g, pj) = src;
                }
            }
        }
        Edge::Right => {
            for pj in 0..ny + 2 * ng {
                let src = u.at_padded(ng + nx - 1, pj);
                for g in 0..ng {
                    *u.at_padded_mut(ng + nx + g, pj) = src;
                }
            }
        }
        Edge::Bottom => {
            for pi in 0..nx + 2 * ng {
                let src = u.at_padded(pi, ng);
                for g in 0..ng {
                    *u.at_padded_mut(pi, g) = src;
                }
            }
        }
        Edge::Top => {
            for pi in 0..nx + 2 * ng {
                let src = u.at_padded(pi, ng + ny - 1);
                for g in 0..ng {
                    *u.at_padded_mut(pi, ng + ny + g) = src;
                }
            }
        }
    }
}

/// Reflecting wall on one edge: ghosts mirror the interior about the wall
/// face with the normal momentum negated.
pub fn fill2_reflect(u: &mut Field2<4>, edge: Edge) {
    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    let m = edge.normal_momentum();
    match edge {
        Edge::Left => {
            for pj in 0..ny + 2 * ng {
                for g in 0..ng {
                    let mut s = u.at_padded(ng + g, pj);
                    s[m] = -s[m];
                    *u.at_padded_mut(ng - 1 - g, pj) = s;
                }
            }
        }
        Edge::Right => {
            for pj in 0..ny + 2 * ng {
                for g in 0..ng {
                    let mut s = u.at_padded(ng + nx - 1 - g, pj);
                    s[m] = -s[m];
                    *u.at_padded_mut(ng + nx + g, pj) = s;
                }
            }
        }
        Edge::Bottom => {
            for pi in 0..nx + 2 * ng {
                for g in 0..ng {
                    let mut s = u.at_padded(pi, ng + g);
                    s[m] = -s[m];
                    *u.at_padded_mut(pi, ng - 1 - g) = s;
                }
            }
        }
        Edge::Top => {
            for pi in 0..nx + 2 * ng {
                for g in 0..ng {
                    let mut s = u.at_padded(pi, ng + ny - 1 - g);
                    s[m] = -s[m];
                    *u.at_padded_mut(pi, ng + ny + g) = s;
                }
            }
        }
    }
}

/// Dirichlet ghosts pinned to a constant state on one edge.
pub fn fill2_fixed<const M: usize>(u: &mut Field2<M>, edge: Edge, s: [f64; M]) {
    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    match edge {
        Edge::Left => {
            for pj in 0..ny + 2 * ng {
                for g in 0..ng {
                    *u.at_padded_mut(g, pj) = s;
                }
            }
        }
        Edge::Right => {
            for pj in 0..ny + 2 * ng {
                for g in 0..ng {
                    *u.at_padded_mut(ng + nx + g, pj) = s;
                }
            }
        }
        Edge::Bottom => {
            for pi in 0..nx + 2 * ng {
                for g in 0..ng {
                    *u.at_padded_mut(pi, g) = s;
                }
            }
        }
        Edge::Top => {
            for pi in 0..nx + 2 * ng {
                for g in 0..ng {
                    *u.at_padded_mut(pi, ng + ny + g) = s;
                }
            }
        }
    }
}

/// Periodic wrap in x (left and right edges together).
pub fn fill2_periodic_x<const M: usize>(u: &mut Field2<M>) {
    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    for pj in 0..ny + 2 * ng {
        for g in 0..ng {
            *u.at_padded_mut(g, pj) = u.at_padded(nx + g, pj);
            *u.at_padded_mut(ng + nx + g, pj) = u.at_padded(ng + g, pj);
        }
    }
}

/// Periodic wrap in y (bottom and top edges together).
pub fn fill2_periodic_y<const M: usize>(u: &mut Field2<M>) {
    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    for pi in 0..nx + 2 * ng {
        for g in 0..ng {
            *u.at_padded_mut(pi, g) = u.at_padded(pi, ny + g);
            *u.at_padded_mut(pi, ng + ny + g) = u.at_padded(pi, ng + g);
        }
    }
}
