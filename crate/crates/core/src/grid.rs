//! Periodic-box discretisation of ℝⁿ and its dual frequency lattice.
//!
//! The box is `[−L/2, L/2)ⁿ` sampled at `N` points per axis,
//! `x_j = −L/2 + jL/N`. The dual lattice carries the frequencies
//! `ξ_k = k/L` for integer `k ∈ [−N/2, N/2)`, matching the
//! `e^{−2πi x·ξ}` transform convention. Arrays are row-major over axes
//! and spectral arrays use centered frequency indexing.

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    dim: usize,
    points_per_axis: usize,
    box_length: f64,
}

impl Grid {
    /// Build a grid for dimension `n ∈ {1,2,3}` with an even number
    /// `points ≥ 8` of samples per axis on a box of side `length > 0`.
    pub fn new(n: usize, points: usize, length: f64) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidGrid(format!(
                "dimension must be 1, 2 or 3, got {n}"
            )));
        }
        if points % 2 != 0 || points < 8 {
            return Err(Error::InvalidGrid(format!(
                "points per axis must be even and >= 8, got {points}"
            )));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "box length must be positive and finite, got {length}"
            )));
        }
        Ok(Grid {
            dim: n,
            points_per_axis: points,
            box_length: length,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn box_length(&self) -> f64 {
        self.box_length
    }

    pub fn total_points(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    /// Spatial lattice spacing L/N.
    pub fn spacing(&self) -> f64 {
        self.box_length / self.points_per_axis as f64
    }

    /// Frequency lattice spacing 1/L.
    pub fn freq_spacing(&self) -> f64 {
        1.0 / self.box_length
    }

    /// Quadrature weight (L/N)ⁿ of one spatial cell.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Quadrature weight (1/L)ⁿ of one frequency cell.
    pub fn freq_cell_volume(&self) -> f64 {
        self.freq_spacing().powi(self.dim as i32)
    }

    /// Largest frequency magnitude per axis, N/(2L).
    pub fn max_freq(&self) -> f64 {
        self.points_per_axis as f64 / (2.0 * self.box_length)
    }

    /// Row-major linear index from per-axis indices (first `dim` entries used).
    pub fn multi_to_index(&self, multi: &[usize]) -> usize {
        let n = self.points_per_axis;
        let mut idx = 0;
        for a in 0..self.dim {
            debug_assert!(multi[a] < n);
            idx = idx * n + multi[a];
        }
        idx
    }

    /// Per-axis indices of a row-major linear index.
    pub fn index_to_multi(&self, index: usize) -> [usize; MAX_DIM] {
        let n = self.points_per_axis;
        let mut multi = [0usize; MAX_DIM];
        let mut rest = index;
        for a in (0..self.dim).rev() {
            multi[a] = rest % n;
            rest /= n;
        }
        multi
    }

    /// Spatial point x_j for a linear index.
    pub fn position(&self, index: usize) -> [f64; MAX_DIM] {
        let multi = self.index_to_multi(index);
        let mut x = [0.0; MAX_DIM];
        let h = self.spacing();
        for a in 0..self.dim {
            x[a] = -0.5 * self.box_length + multi[a] as f64 * h;
        }
        x
    }

    /// Centered integer frequency k ∈ [−N/2, N/2) per axis for a linear index
    /// into a spectral array.
    pub fn freq_integer(&self, index: usize) -> [i64; MAX_DIM] {
        let multi = self.index_to_multi(index);
        let half = (self.points_per_axis / 2) as i64;
        let mut k = [0i64; MAX_DIM];
        for a in 0..self.dim {
            k[a] = multi[a] as i64 - half;
        }
        k
    }

    /// Frequency point ξ_k = k/L for a linear index into a spectral array.
    pub fn frequency(&self, index: usize) -> [f64; MAX_DIM] {
        let k = self.freq_integer(index);
        let d = self.freq_spacing();
        let mut xi = [0.0; MAX_DIM];
        for a in 0..self.dim {
            xi[a] = k[a] as f64 * d;
        }
        xi
    }

    /// Linear index of the spatial reflection x ↦ −x (periodic: j ↦ (N−j) mod N).
    pub fn reflect_index(&self, index: usize) -> usize {
        let n = self.points_per_axis;
        let multi = self.index_to_multi(index);
        let mut refl = [0usize; MAX_DIM];
        for a in 0..self.dim {
            refl[a] = (n - multi[a]) % n;
        }
        self.multi_to_index(&refl[..self.dim])
    }

    /// Linear index of the frequency reflection ξ ↦ −ξ, when the mirror lies
    /// on the lattice. The edge frequency k = −N/2 has no mirror.
    pub fn freq_reflect_index(&self, index: usize) -> Option<usize> {
        let n = self.points_per_axis;
        let multi = self.index_to_multi(index);
        let mut refl = [0usize; MAX_DIM];
        for a in 0..self.dim {
            if multi[a] == 0 {
                return None;
            }
            refl[a] = n - multi[a];
        }
        Some(self.multi_to_index(&refl[..self.dim]))
    }

    /// Euclidean norm |x| of the spatial point at a linear index.
    pub fn radius(&self, index: usize) -> f64 {
        let x = self.position(index);
        x[..self.dim].iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Euclidean norm |ξ| of the frequency point at a linear index.
    pub fn freq_radius(&self, index: usize) -> f64 {
        let xi = self.frequency(index);
        xi[..self.dim].iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// True when the point lies in the outermost cell layer of the box.
    pub fn on_boundary_layer(&self, index: usize) -> bool {
        let n = self.points_per_axis;
        let multi = self.index_to_multi(index);
        (0..self.dim).any(|a| multi[a] == 0 || multi[a] == n - 1)
    }
}
