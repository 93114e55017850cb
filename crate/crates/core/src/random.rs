//! Seeded construction of test fields. All randomness flows through a
//! counter-based ChaCha stream so runs are reproducible across platforms.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, SpectralField};
use crate::grid::Grid;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Band-limited random field: complex coefficients uniform in the unit
/// square on frequencies with |k|∞ ≤ `band`, zero elsewhere.
pub fn band_limited_field(grid: Grid, band: i64, seed: u64) -> Field {
    let mut rng = rng_from_seed(seed);
    let mut hat = SpectralField::zeros(grid);
    for idx in 0..grid.total_points() {
        let k = grid.freq_integer(idx);
        if (0..grid.dim()).all(|a| k[a].abs() <= band) {
            let re: f64 = rng.gen_range(-1.0..1.0);
            let im: f64 = rng.gen_range(-1.0..1.0);
            hat.coeffs_mut()[idx] = C64::new(re, im);
        }
    }
    hat.inverse()
}

/// Random real nonnegative bump supported on a centered index block of
/// half-width `half_extent` cells, shifted by `offset` cells per axis.
pub fn compact_bump(grid: Grid, half_extent: usize, offset: &[i64], seed: u64) -> Field {
    let mut rng = rng_from_seed(seed);
    let n = grid.points_per_axis();
    let mut f = Field::zeros(grid);
    let center = n / 2;
    let total = grid.total_points();
    for idx in 0..total {
        let multi = grid.index_to_multi(idx);
        let inside = (0..grid.dim()).all(|a| {
            let c = center as i64 + offset[a];
            (multi[a] as i64 - c).abs() <= half_extent as i64
        });
        if inside {
            f.values_mut()[idx] = C64::new(rng.gen_range(0.1..1.0), 0.0);
        }
    }
    f
}

/// Real Gaussian-like random direction with unit discrete L² norm.
pub fn unit_direction(grid: Grid, seed: u64) -> Field {
    let mut rng = rng_from_seed(seed);
    let mut f = Field::zeros(grid);
    for v in f.values_mut() {
        *v = C64::new(rng.gen_range(-1.0..1.0), 0.0);
    }
    let norm = f.l2_norm();
    f.scale(C64::new(1.0 / norm, 0.0))
}
