//! Solution storage: cell data plus ghost layers, in one and two dimensions.
//!
//! A field stores `M` conserved components per cell (`M = 1` for scalar
//! equations, 3 for 1D Euler, 4 for 2D Euler). Ghost cells surround the
//! interior on every side; boundary routines fill them, solvers read them,
//! and time integration treats the whole storage as a flat vector.

/// 1D field: `n` interior cells flanked by `n_ghost` cells on each side.
#[derive(Clone, Debug, PartialEq)]
pub struct Field1<const M: usize> {
    n: usize,
    n_ghost: usize,
    data: Vec<[f64; M]>,
}

impl<const M: usize> Field1<M> {
    pub fn new(n: usize, n_ghost: usize) -> Self {
        Field1 {
            n,
            n_ghost,
            data: vec![[0.0; M]; n + 2 * n_ghost],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_ghost(&self) -> usize {
        self.n_ghost
    }

    /// Interior cells, index 0..n.
    pub fn interior(&self) -> &[[f64; M]] {
        &self.data[self.n_ghost..self.n_ghost + self.n]
    }

    pub fn interior_mut(&mut self) -> &mut [[f64; M]] {
        &mut self.data[self.n_ghost..self.n_ghost + self.n]
    }

    /// Full storage including ghosts; interior cell `i` lives at `i + n_ghost`.
    pub fn padded(&self) -> &[[f64; M]] {
        &self.data
    }

    pub fn padded_mut(&mut self) -> &mut [[f64; M]] {
        &mut self.data
    }
}

/// 2D field stored row-major with ghost cells on all four sides.
///
/// The padded layout has `(ny + 2 n_ghost)` rows of `(nx + 2 n_ghost)` cells;
/// interior cell `(i, j)` (column i, row j) lives at padded position
/// `(i + n_ghost, j + n_ghost)`. Rows are contiguous, so x-direction sweeps
/// can borrow a padded row as a slice.
#[derive(Clone, Debug, PartialEq)]
pub struct Field2<const M: usize> {
    nx: usize,
    ny: usize,
    n_ghost: usize,
    data: Vec<[f64; M]>,
}

impl<const M: usize> Field2<M> {
    pub fn new(nx: usize, ny: usize, n_ghost: usize) -> Self {
        let w = nx + 2 * n_ghost;
        let h = ny + 2 * n_ghost;
        Field2 {
            nx,
            ny,
            n_ghost,
            data: vec![[0.0; M]; w * h],
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn n_ghost(&self) -> usize {
        self.n_ghost
    }

    /// Width of a padded row.
    pub fn stride(&self) -> usize {
        self.nx + 2 * self.n_ghost
    }

    fn pad_idx(&self, pi: usize, pj: usize) -> usize {
        pj * self.stride() + pi
    }

    /// Interior accessor (no ghost offset applied by the caller).
    pub fn at(&self, i: usize, j: usize) -> [f64; M] {
        debug_assert!(i < self.nx && j < self.ny);
        self.data[self.pad_idx(i + self.n_ghost, j + self.n_ghost)]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut [f64; M] {
        debug_assert!(i < self.nx && j < self.ny);
        let k = self.pad_idx(i + self.n_ghost, j + self.n_ghost);
        &mut self.data[k]
    }

    /// Padded accessor: `pi` in `0..nx + 2 n_ghost`, `pj` likewise for y.
    pub fn at_padded(&self, pi: usize, pj: usize) -> [f64; M] {
        self.data[self.pad_idx(pi, pj)]
    }

    pub fn at_padded_mut(&mut self, pi: usize, pj: usize) -> &mut [f64; M] {
        let k = self.pad_idx(pi, pj);
        &mut self.data[k]
    }

    /// One padded row (fixed `pj`), as a contiguous slice of length `stride()`.
    pub fn padded_row(&self, pj: usize) -> &[[f64; M]] {
        let s = self.stride();
        &self.data[pj * s..(pj + 1) * s]
    }

    pub fn padded_mut_slice(&mut self) -> &mut [[f64; M]] {
        &mut self.data
    }

    pub fn padded_slice(&self) -> &[[f64; M]] {
        &self.data
    }

    /// Interior cells row-major (row 0 first), for output and comparisons.
    pub fn interior_to_vec(&self) -> Vec<[f64; M]> {
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for j in 0..self.ny {
            for i in 0..self.nx {
                out.push(self.at(i, j));
            }
        }
        out
    }
}

/// State vectors that the SSP-RK3 integrator can combine linearly.
pub trait RkState: Clone {
    /// `self = a * self + b * other`, element-wise over the full storage.
    fn axpby(&mut self, a: f64, b: f64, other: &Self);
}

impl RkState for f64 {
    fn axpby(&mut self, a: f64, b: f64, other: &Self) {
        *self = a * *self + b * *other;
    }
}

fn axpby_cells<const M: usize>(dst: &mut [[f64; M]], a: f64, b: f64, src: &[[f64; M]]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        for c in 0..M {
            d[c] = a * d[c] + b * s[c];
        }
    }
}

impl<const M: usize> RkState for Field1<M> {
    fn axpby(&mut self, a: f64, b: f64, other: &Self) {
        axpby_cells(&mut self.data, a, b, &other.data);
    }
}

impl<const M: usize> RkState for Field2<M> {
    fn axpby(&mut self, a: f64, b: f64, other: &Self) {
        axpby_cells(&mut self.data, a, b, &other.data);
    }
}
