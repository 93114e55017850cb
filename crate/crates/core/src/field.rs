//! Complex-valued fields on the periodic box and their discrete transforms.
//!
//! The transform pair approximates the continuum convention
//! `f̂(ξ) = ∫ f(x) e^{−2πi x·ξ} dx` on the box. With `x_j = −L/2 + jL/N`
//! and `ξ_k = k/L` this reduces to a standard DFT with an alternating
//! sign per centered frequency index and the quadrature weight `(L/N)ⁿ`:
//!
//! `f̂(ξ_k) = (L/N)ⁿ (−1)^{Σk_a} Σ_j f(x_j) e^{−2πi j·k/N}`
//!
//! The inverse carries the dual weight `(1/L)ⁿ`, which makes the pair an
//! exact round trip and unitary between the weighted discrete L² norms
//! (Parseval at machine precision). Spectral arrays are stored in
//! centered frequency order, row-major over axes.

use std::cell::RefCell;
use std::sync::Arc;

use num_complex::Complex64 as C64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::symbols::Symbol;

/// Spatial samples of a function on the grid, row-major over axes.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<C64>,
}

/// Discrete Fourier coefficients on the centered frequency lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: Grid,
    coeffs: Vec<C64>,
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan(len: usize, direction: FftDirection) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| match direction {
        FftDirection::Forward => p.borrow_mut().plan_fft_forward(len),
        FftDirection::Inverse => p.borrow_mut().plan_fft_inverse(len),
    })
}

/// Unnormalised DFT along every axis of a row-major nD array.
fn dft_nd(values: &mut [C64], dim: usize, n: usize, direction: FftDirection) {
    let fft = plan(n, direction);
    let total = values.len();
    let mut line = vec![C64::new(0.0, 0.0); n];
    // Axis a has stride n^(dim-1-a) in row-major order.
    for a in 0..dim {
        let stride = n.pow((dim - 1 - a) as u32);
        let block = stride * n;
        for base in (0..total).step_by(block) {
            for off in 0..stride {
                let start = base + off;
                for i in 0..n {
                    line[i] = values[start + i * stride];
                }
                fft.process(&mut line);
                for i in 0..n {
                    values[start + i * stride] = line[i];
                }
            }
        }
    }
}

/// (−1)^k for the centered integer frequency sum of a spectral index.
fn centered_sign(grid: &Grid, index: usize) -> f64 {
    let k = grid.freq_integer(index);
    let mut parity = 0i64;
    for a in 0..grid.dim() {
        parity += k[a];
    }
    if parity.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Map a centered spectral index to the wrapped DFT bin index.
fn centered_to_dft_index(grid: &Grid, index: usize) -> usize {
    let n = grid.points_per_axis();
    let multi = grid.index_to_multi(index);
    let half = n / 2;
    let mut out = 0usize;
    for a in 0..grid.dim() {
        let m = (multi[a] + half) % n; // k mod N with k = multi − N/2
        out = out * n + m;
    }
    out
}

impl Field {
    /// Wrap spatial samples; the length must be N^n and all entries finite.
    pub fn new(grid: Grid, values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.total_points() {
            return Err(Error::InvalidField(format!(
                "expected {} samples, got {}",
                grid.total_points(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidField("non-finite sample".into()));
        }
        Ok(Field { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        Field {
            values: vec![C64::new(0.0, 0.0); grid.total_points()],
            grid,
        }
    }

    /// Sample a closed-form function of the spatial point.
    pub fn from_fn(grid: Grid, mut f: impl FnMut(&[f64]) -> C64) -> Self {
        let values = (0..grid.total_points())
            .map(|idx| {
                let x = grid.position(idx);
                f(&x[..grid.dim()])
            })
            .collect();
        Field { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    /// Discrete transform to centered Fourier coefficients.
    pub fn forward(&self) -> SpectralField {
        let grid = self.grid;
        let n = grid.points_per_axis();
        let mut buf = self.values.clone();
        dft_nd(&mut buf, grid.dim(), n, FftDirection::Forward);
        let scale = grid.cell_volume();
        let coeffs = (0..buf.len())
            .map(|c| buf[centered_to_dft_index(&grid, c)] * (scale * centered_sign(&grid, c)))
            .collect();
        SpectralField { grid, coeffs }
    }

    /// Box-rule Lᵖ norm, `(Σ|f|ᵖ (L/N)ⁿ)^{1/p}`; `p = ∞` gives the max modulus.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        if p.is_infinite() && p > 0.0 {
            return Ok(self
                .values
                .iter()
                .map(|v| v.norm())
                .fold(0.0f64, f64::max));
        }
        if !(p >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "Lp exponent must be >= 1 or infinite, got {p}"
            )));
        }
        let sum: f64 = self.values.iter().map(|v| v.norm().powf(p)).sum();
        Ok((sum * self.grid.cell_volume()).powf(1.0 / p))
    }

    /// Discrete L² norm with the (L/N)ⁿ weight.
    pub fn l2_norm(&self) -> f64 {
        let sum: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        (sum * self.grid.cell_volume()).sqrt()
    }

    /// Weighted inner product `Σ conj(a) b (L/N)ⁿ`.
    pub fn inner(&self, other: &Field) -> C64 {
        debug_assert_eq!(self.grid, other.grid);
        let mut acc = C64::new(0.0, 0.0);
        for (a, b) in self.values.iter().zip(&other.values) {
            acc += a.conj() * b;
        }
        acc * self.grid.cell_volume()
    }

    /// Max modulus over the outermost cell layer divided by the global max.
    /// Diagnostic for whether the box truncation is adequate.
    pub fn boundary_amplitude_ratio(&self) -> f64 {
        let max = self.values.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        if max == 0.0 {
            return 0.0;
        }
        let mut bmax = 0.0f64;
        for idx in 0..self.values.len() {
            if self.grid.on_boundary_layer(idx) {
                bmax = bmax.max(self.values[idx].norm());
            }
        }
        bmax / max
    }

    pub fn scale(&self, factor: C64) -> Field {
        Field {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add_scaled(&self, other: &Field, factor: C64) -> Field {
        debug_assert_eq!(self.grid, other.grid);
        Field {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b * factor)
                .collect(),
        }
    }
}

impl SpectralField {
    /// Wrap centered coefficients; the length must be N^n.
    pub fn new(grid: Grid, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != grid.total_points() {
            return Err(Error::InvalidField(format!(
                "expected {} coefficients, got {}",
                grid.total_points(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidField("non-finite coefficient".into()));
        }
        Ok(SpectralField { grid, coeffs })
    }

    pub fn zeros(grid: Grid) -> Self {
        SpectralField {
            coeffs: vec![C64::new(0.0, 0.0); grid.total_points()],
            grid,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [C64] {
        &mut self.coeffs
    }

    /// Inverse transform back to spatial samples; exact round trip with
    /// [`Field::forward`].
    pub fn inverse(&self) -> Field {
        let grid = self.grid;
        let n = grid.points_per_axis();
        let mut buf = vec![C64::new(0.0, 0.0); grid.total_points()];
        let scale = grid.freq_cell_volume();
        for c in 0..self.coeffs.len() {
            buf[centered_to_dft_index(&grid, c)] =
                self.coeffs[c] * (scale * centered_sign(&grid, c));
        }
        dft_nd(&mut buf, grid.dim(), n, FftDirection::Inverse);
        Field {
            grid,
            values: buf,
        }
    }

    /// Discrete L² norm with the (1/L)ⁿ weight; equals the L² norm of the
    /// spatial samples by Parseval.
    pub fn l2_norm(&self) -> f64 {
        let sum: f64 = self.coeffs.iter().map(|v| v.norm_sqr()).sum();
        (sum * self.grid.freq_cell_volume()).sqrt()
    }

    /// Quadratic form `⟨f, (P(D) + shift) f⟩ = Σ (p(ξ_k)+shift)|f̂_k|² (1/L)ⁿ`.
    /// Depends on the coefficients through their moduli only.
    pub fn quad_form(&self, symbol: &Symbol, shift: f64) -> f64 {
        let w = self.grid.freq_cell_volume();
        let mut acc = 0.0;
        for (idx, c) in self.coeffs.iter().enumerate() {
            let xi = self.grid.frequency(idx);
            acc += (symbol.eval(&xi[..self.grid.dim()]) + shift) * c.norm_sqr();
        }
        acc * w
    }

    /// Coefficient moduli as a new spectral field (`|f̂|`).
    pub fn modulus(&self) -> SpectralField {
        SpectralField {
            grid: self.grid,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| C64::new(c.norm(), 0.0))
                .collect(),
        }
    }

    /// Transform of the k-th pointwise power `f^k`, computed alias-free by
    /// zero-padding to ⌈(k+1)/2⌉·N per axis. `k = 1` is the identity.
    pub fn convolve_power(&self, k: usize) -> Result<SpectralField> {
        if k < 1 {
            return Err(Error::InvalidParameter(
                "convolution power must be >= 1".into(),
            ));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        dealiased_map(self, k, |u| {
            let mut acc = u;
            for _ in 1..k {
                acc *= u;
            }
            acc
        })
    }
}

/// Apply a pointwise polynomial map of total degree `degree` in physical
/// space without aliasing: pad to ⌈(degree+1)/2⌉·N per axis, transform,
/// map, transform back, truncate to the original window.
pub fn dealiased_map(
    f: &SpectralField,
    degree: usize,
    map: impl Fn(C64) -> C64,
) -> Result<SpectralField> {
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let factor = degree / 2 + 1; // ⌈(degree+1)/2⌉
    let m = factor * n;
    let padded_grid = Grid::new(grid.dim(), m, grid.box_length())?;

    let mut padded = SpectralField::zeros(padded_grid);
    let offset = (m - n) / 2;
    for idx in 0..grid.total_points() {
        let multi = grid.index_to_multi(idx);
        let mut pm = [0usize; crate::grid::MAX_DIM];
        for a in 0..grid.dim() {
            pm[a] = multi[a] + offset;
        }
        let pidx = padded_grid.multi_to_index(&pm[..grid.dim()]);
        padded.coeffs[pidx] = f.coeffs()[idx];
    }

    let mut phys = padded.inverse();
    for v in phys.values_mut() {
        *v = map(*v);
    }
    let mapped = phys.forward();

    let mut out = SpectralField::zeros(grid);
    for idx in 0..grid.total_points() {
        let multi = grid.index_to_multi(idx);
        let mut pm = [0usize; crate::grid::MAX_DIM];
        for a in 0..grid.dim() {
            pm[a] = multi[a] + offset;
        }
        let pidx = padded_grid.multi_to_index(&pm[..grid.dim()]);
        out.coeffs[idx] = mapped.coeffs()[pidx];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn gaussian_field(grid: Grid) -> Field {
        Field::from_fn(grid, |x| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            C64::new((-PI * r2).exp(), 0.0)
        })
    }

    #[test]
    fn gaussian_is_self_dual() {
        let grid = Grid::new(1, 256, 40.0).unwrap();
        let f = gaussian_field(grid);
        let hat = f.forward();
        for idx in 0..grid.total_points() {
            let xi = grid.frequency(idx)[0];
            let expect = (-PI * xi * xi).exp();
            let got = hat.coeffs()[idx];
            assert!(
                (got.re - expect).abs() < 1e-10 && got.im.abs() < 1e-10,
                "xi={xi}: got {got}, expected {expect}"
            );
        }
    }

    #[test]
    fn sech_transform_matches_closed_form() {
        // Oracle: ∫ sech(x) e^{−iωx} dx = π sech(πω/2), verified below by
        // Simpson quadrature before freezing the closed form.
        let quad = |xi: f64| {
            let omega = 2.0 * PI * xi;
            let a = -60.0;
            let steps = 240_000usize; // even
            let h = -2.0 * a / steps as f64;
            let g = |x: f64| (2.0f64.sqrt() / x.cosh()) * C64::new(0.0, -omega * x).exp();
            let mut acc = g(a) + g(-a);
            for i in 1..steps {
                let x = a + i as f64 * h;
                acc += g(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            acc * (h / 3.0)
        };
        for &xi in &[0.0, 0.17, 0.5] {
            let closed = 2.0f64.sqrt() * PI / (PI * PI * xi).cosh();
            let q = quad(xi);
            assert!((q.re - closed).abs() < 1e-11 && q.im.abs() < 1e-11);
        }

        let grid = Grid::new(1, 1024, 40.0 * PI).unwrap();
        let f = Field::from_fn(grid, |x| C64::new(2.0f64.sqrt() / x[0].cosh(), 0.0));
        let hat = f.forward();
        let mut worst = 0.0f64;
        for idx in 0..grid.total_points() {
            let xi = grid.frequency(idx)[0];
            let expect = 2.0f64.sqrt() * PI / (PI * PI * xi).cosh();
            worst = worst.max((hat.coeffs()[idx] - C64::new(expect, 0.0)).norm());
        }
        assert!(worst < 1e-8, "worst pointwise error {worst}");
    }

    #[test]
    fn zero_transforms_to_zero() {
        let grid = Grid::new(2, 16, 10.0).unwrap();
        let f = Field::zeros(grid);
        let hat = f.forward();
        assert!(hat.coeffs().iter().all(|c| c.norm() == 0.0));
        assert!(hat.inverse().values().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn round_trip_and_parseval() {
        for &(n, pts, len) in &[(1usize, 64usize, 20.0f64), (2, 16, 7.5), (3, 8, 5.0)] {
            let grid = Grid::new(n, pts, len).unwrap();
            let f = Field::from_fn(grid, |x| {
                let r2: f64 = x.iter().map(|v| v * v).sum();
                C64::new((-0.5 * r2).exp() * x[0].sin(), (0.3 * x[0]).cos())
            });
            let hat = f.forward();
            let back = hat.inverse();
            let mut diff = 0.0f64;
            for (a, b) in f.values().iter().zip(back.values()) {
                diff += (a - b).norm_sqr();
            }
            let rel = (diff * grid.cell_volume()).sqrt() / f.l2_norm();
            assert!(rel < 1e-12, "round trip rel error {rel} (n={n})");
            assert_relative_eq!(f.l2_norm(), hat.l2_norm(), max_relative = 1e-12);
        }
    }

    #[test]
    fn single_coefficient_is_plane_wave() {
        let grid = Grid::new(1, 16, 8.0).unwrap();
        let mut hat = SpectralField::zeros(grid);
        let pick = 11; // k = 3
        hat.coeffs_mut()[pick] = C64::new(1.0, 0.0);
        let f = hat.inverse();
        let xi = grid.frequency(pick)[0];
        let w = grid.freq_cell_volume();
        for idx in 0..grid.total_points() {
            let x = grid.position(idx)[0];
            let expect = C64::new(0.0, 2.0 * PI * x * xi).exp() * w;
            assert!((f.values()[idx] - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn lp_norm_oracles() {
        // ∫ e^{−2πx²} dx = 1/√2, verified by Simpson quadrature.
        let steps = 200_000usize;
        let (a, b) = (-30.0, 30.0);
        let h = (b - a) / steps as f64;
        let g = |x: f64| (-2.0 * PI * x * x).exp();
        let mut acc = g(a) + g(b);
        for i in 1..steps {
            acc += g(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let integral = acc * h / 3.0;
        assert!((integral - 1.0 / 2.0f64.sqrt()).abs() < 1e-13);

        let grid = Grid::new(1, 256, 40.0).unwrap();
        let f = gaussian_field(grid);
        let got = f.lp_norm(2.0).unwrap();
        assert_relative_eq!(got, 2.0f64.powf(-0.25), max_relative = 1e-12);

        assert_eq!(Field::zeros(grid).lp_norm(3.0).unwrap(), 0.0);
        let s = Field::from_fn(grid, |x| C64::new(2.0f64.sqrt() / x[0].cosh(), 0.0));
        assert_relative_eq!(
            s.lp_norm(f64::INFINITY).unwrap(),
            2.0f64.sqrt(),
            max_relative = 1e-12
        );
        assert!(f.lp_norm(0.5).is_err());
    }

    #[test]
    fn quad_form_oracles() {
        let grid = Grid::new(1, 256, 40.0).unwrap();
        let f = gaussian_field(grid);
        let hat = f.forward();
        let sym = Symbol::fractional_laplacian(1, 1.0).unwrap();

        // Finite-difference oracle for ⟨f, −f″⟩ with Richardson extrapolation,
        // computed on a fine auxiliary lattice; analytic value is π/√2.
        let fd_quad = |h: f64| {
            let m = (80.0 / h) as usize;
            let g = |x: f64| (-PI * x * x).exp();
            let mut acc = 0.0;
            for i in 1..m {
                let x = -40.0 + i as f64 * h;
                let lap = (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
                acc += g(x) * (-lap) * h;
            }
            acc
        };
        let c1 = fd_quad(1e-3);
        let c2 = fd_quad(5e-4);
        let oracle = (4.0 * c2 - c1) / 3.0;
        let analytic = PI / 2.0f64.sqrt();
        assert!((oracle - analytic).abs() < 1e-9);

        let got = hat.quad_form(&sym, 0.0);
        assert_relative_eq!(got, analytic, max_relative = 1e-10);

        // Pure shift on a normalised field.
        let norm = f.l2_norm();
        let unit = f.scale(C64::new(1.0 / norm, 0.0));
        let zero = Symbol::custom("zero", 2.0, true, |_| 0.0);
        let lam = 0.73;
        assert_relative_eq!(
            unit.forward().quad_form(&zero, lam),
            lam,
            max_relative = 1e-12
        );

        // Depends only on coefficient moduli.
        let skew = Field::from_fn(grid, |x| {
            C64::new(0.0, 1.3 * x[0]).exp() * C64::new((-0.2 * x[0] * x[0]).exp(), 0.0)
        });
        let sh = skew.forward();
        assert_relative_eq!(
            sh.quad_form(&sym, 0.5),
            sh.modulus().quad_form(&sym, 0.5),
            max_relative = 1e-12
        );
    }

    #[test]
    fn convolve_power_identity_and_gaussian() {
        let grid = Grid::new(1, 256, 40.0).unwrap();
        let hat = gaussian_field(grid).forward();
        let same = hat.convolve_power(1).unwrap();
        assert_eq!(same.coeffs(), hat.coeffs());

        // ĝ = e^{−πξ²}, square in physical space: e^{−2πx²} ↔ 2^{−1/2} e^{−πξ²/2}.
        let sq = hat.convolve_power(2).unwrap();
        for idx in 0..grid.total_points() {
            let xi = grid.frequency(idx)[0];
            let expect = (-PI * xi * xi / 2.0).exp() / 2.0f64.sqrt();
            assert!((sq.coeffs()[idx] - C64::new(expect, 0.0)).norm() < 1e-10);
        }

        assert!(hat.convolve_power(0).is_err());
    }

    /// Direct O(N²)-style k-fold discrete convolution with the (1/L)ⁿ weight,
    /// zero outside the centered window; the independent oracle.
    fn direct_self_convolution(f: &SpectralField, k: usize) -> Vec<C64> {
        let grid = *f.grid();
        let n = grid.points_per_axis() as i64;
        let half = n / 2;
        let w = grid.freq_cell_volume();
        // Centered window lookup by integer frequency.
        let get = |arr: &[C64], kk: i64| -> C64 {
            if kk < -half || kk >= half {
                C64::new(0.0, 0.0)
            } else {
                arr[(kk + half) as usize]
            }
        };
        let mut acc: Vec<C64> = f.coeffs().to_vec();
        let mut lo = -half;
        let mut hi = half - 1;
        for _ in 1..k {
            let nlo = lo - half;
            let nhi = hi + half - 1;
            let mut next = vec![C64::new(0.0, 0.0); (nhi - nlo + 1) as usize];
            for (i, slot) in next.iter_mut().enumerate() {
                let m = nlo + i as i64;
                let mut s = C64::new(0.0, 0.0);
                for kp in -half..half {
                    let other = m - kp;
                    if other >= lo && other <= hi {
                        s += get(f.coeffs(), kp) * acc[(other - lo) as usize];
                    }
                }
                *slot = s * w;
            }
            acc = next;
            lo = nlo;
            hi = nhi;
        }
        (0..grid.total_points())
            .map(|idx| {
                let m = idx as i64 - half;
                if m >= lo && m <= hi {
                    acc[(m - lo) as usize]
                } else {
                    C64::new(0.0, 0.0)
                }
            })
            .collect()
    }

    #[test]
    fn convolve_power_matches_direct_oracle() {
        let grid = Grid::new(1, 64, 16.0).unwrap();
        // Compactly-supported nonnegative coefficients on |k| ≤ 5 cells.
        let mut hat = SpectralField::zeros(grid);
        for (off, val) in [(-5i64, 0.3), (-2, 1.1), (0, 0.7), (1, 0.25), (5, 0.9)] {
            let idx = (off + 32) as usize;
            hat.coeffs_mut()[idx] = C64::new(val, 0.0);
        }
        for k in [2usize, 3] {
            let fast = hat.convolve_power(k).unwrap();
            let direct = direct_self_convolution(&hat, k);
            let scale = direct.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            for idx in 0..grid.total_points() {
                assert!(
                    (fast.coeffs()[idx] - direct[idx]).norm() <= 1e-10 * scale,
                    "k={k} idx={idx}"
                );
            }
        }

        // Support triples for k = 3 (coeffs on [−a, a] give [−3a, 3a]).
        let tri = hat.convolve_power(3).unwrap();
        for idx in 0..grid.total_points() {
            let m = idx as i64 - 32;
            if m.abs() > 15 {
                assert!(tri.coeffs()[idx].norm() < 1e-12);
            }
        }
        let idx_edge = (15i64 + 32) as usize;
        assert!(tri.coeffs()[idx_edge].norm() > 1e-12);
    }

    #[test]
    fn dense_random_round_trip_2d() {
        let grid = Grid::new(2, 12, 6.0).unwrap();
        // 12 is not a power of two; exercises the mixed-radix path.
        let f = Field::from_fn(grid, |x| C64::new((x[0] * 1.7).sin(), (x[1] * 0.9).cos()));
        let hat = f.forward();
        let back = hat.inverse();
        for (a, b) in f.values().iter().zip(back.values()) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
