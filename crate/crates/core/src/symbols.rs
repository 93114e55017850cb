//! Fourier multipliers p(ξ) with structural metadata and numerical checkers
//! for growth, ellipticity and sector conditions.
//!
//! All symbols are expressed in the `e^{−2πi x·ξ}` convention, so
//! −Δ ↔ 4π²|ξ|² and i v·∇ ↔ −2π v·ξ. Checks are performed on the finite
//! frequency lattice only and reported as "verified on grid".

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::grid::Grid;

type Evaluator = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Multi-index polynomial: list of (exponents per axis, coefficient).
pub type PolyCoeffs = Vec<(Vec<u32>, f64)>;

#[derive(Clone)]
pub struct Symbol {
    name: String,
    order_2s: f64,
    is_even: bool,
    coefficients: Option<PolyCoeffs>,
    eval: Evaluator,
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Symbol")
            .field("name", &self.name)
            .field("order_2s", &self.order_2s)
            .field("is_even", &self.is_even)
            .field("is_polynomial", &self.coefficients.is_some())
            .finish()
    }
}

/// Multiply two multi-index polynomials over n axes.
fn poly_mul(a: &PolyCoeffs, b: &PolyCoeffs, n: usize) -> PolyCoeffs {
    let mut out: Vec<(Vec<u32>, f64)> = Vec::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<u32> = (0..n).map(|i| ea[i] + eb[i]).collect();
            match out.iter_mut().find(|(e, _)| *e == exp) {
                Some((_, c)) => *c += ca * cb,
                None => out.push((exp, ca * cb)),
            }
        }
    }
    out.retain(|(_, c)| *c != 0.0);
    out
}

/// (|ξ|²)^m = (Σ ξ_a²)^m as a multi-index polynomial.
fn radial_power(n: usize, m: u32) -> PolyCoeffs {
    let base: PolyCoeffs = (0..n)
        .map(|a| {
            let mut e = vec![0u32; n];
            e[a] = 2;
            (e, 1.0)
        })
        .collect();
    let mut acc: PolyCoeffs = vec![(vec![0u32; n], 1.0)];
    for _ in 0..m {
        acc = poly_mul(&acc, &base, n);
    }
    acc
}

fn poly_eval(coeffs: &PolyCoeffs, xi: &[f64]) -> f64 {
    coeffs
        .iter()
        .map(|(exp, c)| {
            c * exp
                .iter()
                .zip(xi)
                .map(|(&e, &x)| x.powi(e as i32))
                .product::<f64>()
        })
        .sum()
}

fn poly_eval_complex(coeffs: &PolyCoeffs, z: &[C64]) -> C64 {
    coeffs
        .iter()
        .map(|(exp, c)| {
            z.iter()
                .zip(exp)
                .fold(C64::new(*c, 0.0), |acc, (zi, &e)| acc * zi.powu(e))
        })
        .sum()
}

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

impl Symbol {
    /// (4π²|ξ|²)^s, the multiplier of (−Δ)^s. Polynomial when s is an integer.
    pub fn fractional_laplacian(n: usize, s: f64) -> Result<Symbol> {
        if !(s > 0.0) {
            return Err(Error::InvalidSymbol(format!(
                "fractional_laplacian needs s > 0, got {s}"
            )));
        }
        let coefficients = if s.fract() == 0.0 && s <= 8.0 {
            let m = s as u32;
            let mut c = radial_power(n, m);
            let scale = (TWO_PI * TWO_PI).powi(m as i32);
            for (_, v) in &mut c {
                *v *= scale;
            }
            Some(c)
        } else {
            None
        };
        Ok(Symbol {
            name: format!("fractional_laplacian(s={s})"),
            order_2s: 2.0 * s,
            is_even: true,
            coefficients,
            eval: Arc::new(move |xi| {
                let r2: f64 = xi.iter().map(|v| v * v).sum();
                (TWO_PI * TWO_PI * r2).powf(s)
            }),
        })
    }

    /// (1 + 4π²|ξ|²)^s, the multiplier of (1−Δ)^s. Polynomial for integer s.
    pub fn bessel(n: usize, s: f64) -> Result<Symbol> {
        if !(s > 0.0) {
            return Err(Error::InvalidSymbol(format!(
                "bessel needs s > 0, got {s}"
            )));
        }
        let coefficients = if s.fract() == 0.0 && s <= 8.0 {
            let m = s as u32;
            let mut base: PolyCoeffs = radial_power(n, 1);
            for (_, v) in &mut base {
                *v *= TWO_PI * TWO_PI;
            }
            base.push((vec![0u32; n], 1.0));
            let mut acc: PolyCoeffs = vec![(vec![0u32; n], 1.0)];
            for _ in 0..m {
                acc = poly_mul(&acc, &base, n);
            }
            Some(acc)
        } else {
            None
        };
        Ok(Symbol {
            name: format!("bessel(s={s})"),
            order_2s: 2.0 * s,
            is_even: true,
            coefficients,
            eval: Arc::new(move |xi| {
                let r2: f64 = xi.iter().map(|v| v * v).sum();
                (1.0 + TWO_PI * TWO_PI * r2).powf(s)
            }),
        })
    }

    /// 16π⁴|ξ|⁴ + 4π²μ|ξ|², the multiplier of Δ² − μΔ.
    pub fn bilaplacian(n: usize, mu: f64) -> Result<Symbol> {
        if !mu.is_finite() {
            return Err(Error::InvalidSymbol("bilaplacian needs finite mu".into()));
        }
        let mut coeffs = radial_power(n, 2);
        for (_, v) in &mut coeffs {
            *v *= (TWO_PI * TWO_PI).powi(2);
        }
        if mu != 0.0 {
            for (e, v) in radial_power(n, 1) {
                coeffs.push((e, v * TWO_PI * TWO_PI * mu));
            }
        }
        Ok(Symbol {
            name: format!("bilaplacian(mu={mu})"),
            order_2s: 4.0,
            is_even: true,
            coefficients: Some(coeffs),
            eval: Arc::new(move |xi| {
                let r2: f64 = xi.iter().map(|v| v * v).sum();
                let w = TWO_PI * TWO_PI * r2;
                w * w + mu * w
            }),
        })
    }

    /// 2π|ξ| − 2π v·ξ, the multiplier of (−Δ)^{1/2} + i v·∇. Requires |v| < 1.
    pub fn boosted_halfwave(v: Vec<f64>) -> Result<Symbol> {
        let speed = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !(speed < 1.0) {
            return Err(Error::InvalidSymbol(format!(
                "boosted_halfwave needs |v| < 1, got {speed}"
            )));
        }
        let even = speed == 0.0;
        Ok(Symbol {
            name: format!("boosted_halfwave(v={v:?})"),
            order_2s: 1.0,
            is_even: even,
            coefficients: None,
            eval: Arc::new(move |xi| {
                let r: f64 = xi.iter().map(|c| c * c).sum::<f64>().sqrt();
                let dot: f64 = xi.iter().zip(&v).map(|(a, b)| a * b).sum();
                TWO_PI * (r - dot)
            }),
        })
    }

    /// Custom polynomial symbol from a multi-index coefficient list.
    pub fn polynomial(name: impl Into<String>, coeffs: PolyCoeffs) -> Result<Symbol> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSymbol("empty coefficient list".into()));
        }
        let n = coeffs[0].0.len();
        if coeffs.iter().any(|(e, _)| e.len() != n) {
            return Err(Error::InvalidSymbol(
                "inconsistent multi-index lengths".into(),
            ));
        }
        if coeffs.iter().any(|(_, c)| !c.is_finite()) {
            return Err(Error::InvalidSymbol("non-finite coefficient".into()));
        }
        let degree = coeffs
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0);
        let is_even = coeffs
            .iter()
            .all(|(e, _)| e.iter().sum::<u32>() % 2 == 0);
        let cl = coeffs.clone();
        Ok(Symbol {
            name: name.into(),
            order_2s: degree as f64,
            is_even,
            coefficients: Some(coeffs),
            eval: Arc::new(move |xi| poly_eval(&cl, xi)),
        })
    }

    /// Custom symbol from a closure; flags are taken as declared.
    pub fn custom(
        name: impl Into<String>,
        order_2s: f64,
        is_even: bool,
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Symbol {
        Symbol {
            name: name.into(),
            order_2s,
            is_even,
            coefficients: None,
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order_2s(&self) -> f64 {
        self.order_2s
    }

    pub fn is_even(&self) -> bool {
        self.is_even
    }

    pub fn is_polynomial(&self) -> bool {
        self.coefficients.is_some()
    }

    pub fn coefficients(&self) -> Option<&PolyCoeffs> {
        self.coefficients.as_ref()
    }

    pub fn eval(&self, xi: &[f64]) -> f64 {
        (self.eval)(xi)
    }

    /// Minimum of p over the grid's frequency lattice.
    pub fn min_on_grid(&self, grid: &Grid) -> f64 {
        (0..grid.total_points())
            .map(|idx| {
                let xi = grid.frequency(idx);
                self.eval(&xi[..grid.dim()])
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Fitted constants and verdicts for the growth/ellipticity conditions,
/// sampled on the frequency lattice.
#[derive(Debug, Clone, serde::Serialize)]
pub struct AssumptionReport {
    /// Greatest lower envelope A of p(ξ)/|ξ|^{2s} away from ξ = 0.
    pub a_lower: f64,
    /// Least upper envelope B of p(ξ)/|ξ|^{2s} away from ξ = 0.
    pub a_upper: f64,
    /// Largest c with A|ξ|^{2s} + c ≤ p(ξ) on the whole lattice.
    pub c_offset: f64,
    /// Whether A|ξ|^{2s} + c ≤ p(ξ) ≤ B|ξ|^{2s} holds on the whole lattice.
    pub bounds_ok: bool,
    /// Whether p(ξ) ≥ c|ξ|^{2s} with c > 0 holds for |ξ| ≥ R on the lattice.
    pub ellipticity_ok: bool,
    pub ellipticity_c: f64,
    pub ellipticity_r: f64,
    /// Whether the declared evenness flag is consistent with the samples.
    pub even_ok: bool,
    /// Sector verdict, when a shifted-symbol check was requested.
    pub sector: Option<SectorVerdict>,
    /// Minimum of p over the lattice.
    pub min_p: f64,
}

/// Result of the shifted-symbol sector check for a complex shift κ.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SectorVerdict {
    pub ok: bool,
    /// Vertex γ of the fitted sector |arg(p(ξ+κ) − γ)| ≤ θ.
    pub gamma: f64,
    /// Fitted half-angle θ ∈ [0, π/2).
    pub theta: f64,
    /// Constants of the fitted sandwich a₁|ξ|^{2s} − b₁ ≤ Re p(ξ+κ) ≤ a₂|ξ|^{2s} + b₂.
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
}

/// Relative tolerance for the structural verdicts.
pub const ASSUMPTION_TOL: f64 = 1e-9;

/// Fit the growth envelope, offset, ellipticity constants and evenness
/// verdict of a symbol by sampling the grid's frequency lattice. The
/// neighbourhood |ξ| < 2/L is excluded from the envelope ratios.
pub fn check_assumptions(symbol: &Symbol, grid: &Grid) -> AssumptionReport {
    check_assumptions_with_tol(symbol, grid, ASSUMPTION_TOL)
}

pub fn check_assumptions_with_tol(symbol: &Symbol, grid: &Grid, tol: f64) -> AssumptionReport {
    let n = grid.dim();
    let two_s = symbol.order_2s();
    let cutoff = 2.0 / grid.box_length();

    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(grid.total_points());
    let mut min_p = f64::INFINITY;
    let mut max_abs_p = 0.0f64;
    for idx in 0..grid.total_points() {
        let xi = grid.frequency(idx);
        let p = symbol.eval(&xi[..n]);
        let r = grid.freq_radius(idx);
        samples.push((r, p));
        min_p = min_p.min(p);
        max_abs_p = max_abs_p.max(p.abs());
    }

    let mut a_lower = f64::INFINITY;
    let mut a_upper = f64::NEG_INFINITY;
    for &(r, p) in &samples {
        if r >= cutoff {
            let ratio = p / r.powf(two_s);
            a_lower = a_lower.min(ratio);
            a_upper = a_upper.max(ratio);
        }
    }

    // Offset so the lower bound holds everywhere, then verify the sandwich.
    let mut c_offset = f64::INFINITY;
    for &(r, p) in &samples {
        c_offset = c_offset.min(p - a_lower * r.powf(two_s));
    }
    let slack = tol * (max_abs_p.max(1.0));
    let bounds_ok = a_lower > 0.0
        && samples
            .iter()
            .all(|&(r, p)| p <= a_upper * r.powf(two_s) + slack)
        && samples
            .iter()
            .all(|&(r, p)| a_lower * r.powf(two_s) + c_offset <= p + slack);

    // Ellipticity: smallest lattice radius R beyond which the ratio stays
    // positive, with the suffix minimum as the constant c.
    let mut by_radius = samples.clone();
    by_radius.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut ellipticity_ok = false;
    let mut ellipticity_c = 0.0;
    let mut ellipticity_r = 0.0;
    {
        let positive: Vec<(f64, f64)> = by_radius
            .iter()
            .filter(|&&(r, _)| r > 0.0)
            .map(|&(r, p)| (r, p / r.powf(two_s)))
            .collect();
        let mut suffix_min = vec![0.0f64; positive.len()];
        let mut run = f64::INFINITY;
        for i in (0..positive.len()).rev() {
            run = run.min(positive[i].1);
            suffix_min[i] = run;
        }
        for i in 0..positive.len() {
            if suffix_min[i] > slack {
                ellipticity_ok = true;
                ellipticity_c = suffix_min[i];
                ellipticity_r = positive[i].0;
                break;
            }
        }
    }

    // Evenness consistency against the declared flag.
    let even_ok = if symbol.is_even() {
        let mut worst = 0.0f64;
        for idx in 0..grid.total_points() {
            if let Some(mirror) = grid.freq_reflect_index(idx) {
                worst = worst.max((samples[idx].1 - samples[mirror].1).abs());
            }
        }
        worst <= 1e-12 * max_abs_p.max(1.0)
    } else {
        true
    };

    AssumptionReport {
        a_lower,
        a_upper,
        c_offset,
        bounds_ok,
        ellipticity_ok,
        ellipticity_c,
        ellipticity_r,
        even_ok,
        sector: None,
        min_p,
    }
}

/// Sector and real-part-sandwich check for a polynomial symbol shifted by a
/// complex vector κ; evaluated exactly on the frequency lattice.
pub fn check_sector(symbol: &Symbol, grid: &Grid, kappa: &[C64]) -> Result<SectorVerdict> {
    let coeffs = symbol.coefficients().ok_or_else(|| {
        Error::InvalidSymbol(format!(
            "sector check requires a polynomial symbol, got {}",
            symbol.name()
        ))
    })?;
    let n = grid.dim();
    if kappa.len() != n {
        return Err(Error::InvalidParameter(format!(
            "kappa has {} components, grid dimension is {n}",
            kappa.len()
        )));
    }
    let two_s = symbol.order_2s();

    let mut shifted: Vec<(f64, C64)> = Vec::with_capacity(grid.total_points());
    for idx in 0..grid.total_points() {
        let xi = grid.frequency(idx);
        let z: Vec<C64> = (0..n).map(|a| kappa[a] + xi[a]).collect();
        shifted.push((grid.freq_radius(idx), poly_eval_complex(coeffs, &z)));
    }

    // Vertex one unit left of the smallest real part keeps Re(w − γ) ≥ 1.
    let min_re = shifted
        .iter()
        .map(|(_, w)| w.re)
        .fold(f64::INFINITY, f64::min);
    let gamma = min_re - 1.0;
    let theta = shifted
        .iter()
        .map(|(_, w)| (w.im.abs()).atan2(w.re - gamma))
        .fold(0.0f64, f64::max);

    // Sandwich constants from the outer half of the lattice radii.
    let max_r = shifted.iter().map(|(r, _)| *r).fold(0.0f64, f64::max);
    let outer = 0.5 * max_r;
    let mut a1 = f64::INFINITY;
    let mut a2 = f64::NEG_INFINITY;
    for &(r, w) in &shifted {
        if r >= outer {
            let ratio = w.re / r.powf(two_s);
            a1 = a1.min(ratio);
            a2 = a2.max(ratio);
        }
    }
    let mut b1 = 0.0f64;
    let mut b2 = 0.0f64;
    for &(r, w) in &shifted {
        b1 = b1.max(a1 * r.powf(two_s) - w.re);
        b2 = b2.max(w.re - a2 * r.powf(two_s));
    }

    let ok = theta < std::f64::consts::FRAC_PI_2 - ASSUMPTION_TOL && a1 > 0.0;
    Ok(SectorVerdict {
        ok,
        gamma,
        theta,
        a1,
        a2,
        b1,
        b2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn builtin_point_values() {
        let lap = Symbol::fractional_laplacian(1, 1.0).unwrap();
        assert_relative_eq!(lap.eval(&[1.0 / (2.0 * PI)]), 1.0, max_relative = 1e-14);

        let bil = Symbol::bilaplacian(1, -1.0).unwrap();
        assert_eq!(bil.eval(&[0.0]), 0.0);
        // Closed-form vertex of 16π⁴t² − 4π²t over t = |ξ|² ≥ 0 is −1/4.
        let t_star = 1.0 / (8.0 * PI * PI);
        assert_relative_eq!(bil.eval(&[t_star.sqrt()]), -0.25, max_relative = 1e-12);

        let boost = Symbol::boosted_halfwave(vec![0.5]).unwrap();
        assert_relative_eq!(boost.eval(&[1.0]), PI, max_relative = 1e-14);
        assert!(!boost.is_even());
        assert!(Symbol::boosted_halfwave(vec![1.0]).is_err());
        assert!(Symbol::fractional_laplacian(1, 0.0).is_err());
        assert!(Symbol::bessel(2, -1.0).is_err());
    }

    #[test]
    fn polynomial_evaluator_agrees_with_coefficients() {
        let grid = Grid::new(2, 16, 9.0).unwrap();
        for sym in [
            Symbol::fractional_laplacian(2, 2.0).unwrap(),
            Symbol::bessel(2, 2.0).unwrap(),
            Symbol::bilaplacian(2, -3.0).unwrap(),
        ] {
            let coeffs = sym.coefficients().expect("polynomial");
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..100 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let idx = (state >> 33) as usize % grid.total_points();
                let xi = grid.frequency(idx);
                let direct = sym.eval(&xi[..2]);
                let from_map = poly_eval(coeffs, &xi[..2]);
                let scale = direct.abs().max(1.0);
                assert!(
                    (direct - from_map).abs() <= 1e-12 * scale,
                    "{}: {direct} vs {from_map}",
                    sym.name()
                );
            }
        }
    }

    #[test]
    fn homogeneous_symbol_has_tight_envelope() {
        let grid = Grid::new(1, 128, 25.0).unwrap();
        for s in [0.5, 1.0, 2.0] {
            let sym = Symbol::fractional_laplacian(1, s).unwrap();
            let rep = check_assumptions(&sym, &grid);
            let expect = (2.0 * PI).powf(2.0 * s);
            assert_relative_eq!(rep.a_lower, expect, max_relative = 1e-9);
            assert_relative_eq!(rep.a_upper, expect, max_relative = 1e-9);
            assert!(rep.c_offset.abs() <= 1e-9 * expect);
            assert!(rep.bounds_ok && rep.ellipticity_ok && rep.even_ok);
            assert_eq!(rep.min_p, 0.0);
        }
    }

    #[test]
    fn nonmonotone_symbol_is_still_elliptic() {
        // Lattice chosen so ξ = 9/80 = 0.1125 lands next to the closed-form
        // vertex |ξ*| = 1/(2π√2) of 16π⁴t² − 4π²t, where p = −1/4.
        let grid = Grid::new(1, 512, 80.0).unwrap();
        let sym = Symbol::bilaplacian(1, -1.0).unwrap();
        let rep = check_assumptions(&sym, &grid);
        assert!(rep.ellipticity_ok);
        assert!(rep.ellipticity_r > 0.0);
        assert!(rep.min_p < 0.0);
        assert!((rep.min_p + 0.25).abs() < 1e-4, "min_p = {}", rep.min_p);
    }

    #[test]
    fn boosted_envelope_matches_direction_extremes() {
        let grid = Grid::new(1, 256, 40.0).unwrap();
        let sym = Symbol::boosted_halfwave(vec![0.5]).unwrap();
        let rep = check_assumptions(&sym, &grid);
        assert_relative_eq!(rep.a_lower, PI, max_relative = 1e-9);
        assert_relative_eq!(rep.a_upper, 3.0 * PI, max_relative = 1e-9);
        assert!(rep.even_ok); // flag is cleared, so nothing to contradict
    }

    #[test]
    fn evenness_flag_consistency() {
        let grid = Grid::new(1, 64, 16.0).unwrap();
        for sym in [
            Symbol::fractional_laplacian(1, 1.0).unwrap(),
            Symbol::bessel(1, 1.0).unwrap(),
            Symbol::bilaplacian(1, 2.0).unwrap(),
        ] {
            let rep = check_assumptions(&sym, &grid);
            assert!(rep.even_ok, "{}", sym.name());
        }
        // A symbol wrongly declared even is caught.
        let bad = Symbol::custom("skew", 1.0, true, |xi| xi[0] + xi[0].abs());
        let rep = check_assumptions(&bad, &grid);
        assert!(!rep.even_ok);
    }

    #[test]
    fn sector_check_on_shifted_laplacian() {
        let grid = Grid::new(1, 256, 40.0).unwrap();
        let sym = Symbol::fractional_laplacian(1, 1.0).unwrap();
        let kappa = [C64::new(0.0, 0.1)];
        let v = check_sector(&sym, &grid, &kappa).unwrap();
        assert!(v.ok);
        assert!(v.theta < std::f64::consts::FRAC_PI_2);
        // Symbolic expansion: Re p(ξ + 0.1i) = 4π²(ξ² − 0.01), so the sandwich
        // holds with a₁ = a₂ = 4π² and b₁ = 0.04π² ≥ the shift.
        let four_pi2 = 4.0 * PI * PI;
        for idx in 0..grid.total_points() {
            let xi = grid.frequency(idx)[0];
            let re = four_pi2 * (xi * xi - 0.01);
            assert!(four_pi2 * xi * xi - 0.04 * PI * PI <= re + 1e-12);
        }
        assert!((v.a1 - four_pi2).abs() < 0.05 * four_pi2);
        assert!((v.a2 - four_pi2).abs() < 0.01 * four_pi2);
        assert!(v.b1 <= 0.04 * PI * PI + 1e-9);

        // Constant symbols are trivially sectorial with θ = 0.
        let constant = Symbol::polynomial("const", vec![(vec![0u32], 2.0)]).unwrap();
        let vc = check_sector(&constant, &grid, &kappa).unwrap();
        assert!(vc.theta.abs() < 1e-12);

        // Quartic-plus-quadratic polynomial stays sectorial.
        let quart = Symbol::polynomial(
            "quartic",
            vec![
                (vec![4u32], 16.0 * PI.powi(4)),
                (vec![2u32], 4.0 * PI * PI),
            ],
        )
        .unwrap();
        let vq = check_sector(&quart, &grid, &[C64::new(0.0, 0.05)]).unwrap();
        assert!(vq.ok);

        // Non-polynomial symbols are rejected.
        let frac = Symbol::fractional_laplacian(1, 0.5).unwrap();
        assert!(check_sector(&frac, &grid, &kappa).is_err());
    }
}
