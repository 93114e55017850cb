//! The Fourier-modulus operator `f ↦ ℱ⁻¹(|ℱf|)`, autocorrelation, majorant
//! comparisons, phase rigidity fitting, and the trigonometric-polynomial
//! counterexample machinery for the upper majorant property.
//!
//! Taking the modulus on the Fourier side preserves the L² norm and every
//! quadratic form in |f̂|², can only increase L^{2σ+2} norms for integer σ,
//! and produces a positive definite function. Equality of the norms forces
//! the phase of f̂ to be affine in ξ on the support — those facts are what
//! the checks below measure.

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{Field, SpectralField};
use crate::grid::{Grid, MAX_DIM};

/// `f^• = ℱ⁻¹(|ℱf|)`: replace every Fourier coefficient by its modulus.
pub fn bullet(f: &Field) -> Field {
    f.forward().modulus().inverse()
}

/// Discrete autocorrelation `Ψ_F(ξ_k) = Σ_{k'} F(ξ_{k+k'}) conj(F(ξ_{k'})) (1/L)ⁿ`,
/// with indices outside the centered window treated as zero (no wrap).
pub fn autocorrelation(f: &SpectralField) -> SpectralField {
    let grid = *f.grid();
    let n = grid.points_per_axis() as i64;
    let half = n / 2;
    let dim = grid.dim();
    let w = grid.freq_cell_volume();
    let coeffs = f.coeffs();

    let mut out = SpectralField::zeros(grid);
    for idx in 0..grid.total_points() {
        let k = grid.freq_integer(idx);
        let mut acc = C64::new(0.0, 0.0);
        for (jdx, c) in coeffs.iter().enumerate() {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            let kp = grid.freq_integer(jdx);
            let mut shifted = [0usize; MAX_DIM];
            let mut inside = true;
            for a in 0..dim {
                let s = k[a] + kp[a];
                if s < -half || s >= half {
                    inside = false;
                    break;
                }
                shifted[a] = (s + half) as usize;
            }
            if inside {
                let sidx = grid.multi_to_index(&shifted[..dim]);
                acc += coeffs[sidx] * c.conj();
            }
        }
        out.coeffs_mut()[idx] = acc * w;
    }
    out
}

/// Verdict of a pointwise majorant comparison `|f̂| ≤ ĝ` plus the Lᵖ norms.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MajorantVerdict {
    pub majorant_holds: bool,
    pub norm_f: f64,
    pub norm_g: f64,
    pub equality: bool,
    pub p: f64,
}

/// Check `|f̂(ξ)| ≤ ĝ(ξ)` on the lattice and compare the Lᵖ norms.
/// `ĝ` must be real and nonnegative up to tolerance.
pub fn majorant_check(f: &Field, g: &Field, p: f64) -> Result<MajorantVerdict> {
    let fh = f.forward();
    let gh = g.forward();
    let gmax = gh.coeffs().iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let tol = 1e-10 * gmax.max(1e-300);
    for c in gh.coeffs() {
        if c.im.abs() > tol || c.re < -tol {
            return Err(Error::InvalidField(
                "majorant must have a real nonnegative transform".into(),
            ));
        }
    }
    let majorant_holds = fh
        .coeffs()
        .iter()
        .zip(gh.coeffs())
        .all(|(a, b)| a.norm() <= b.re + tol);
    let norm_f = f.lp_norm(p)?;
    let norm_g = g.lp_norm(p)?;
    let equality = (norm_f - norm_g).abs() <= 1e-9 * norm_g.max(1e-300);
    Ok(MajorantVerdict {
        majorant_holds,
        norm_f,
        norm_g,
        equality,
        p,
    })
}

/// Affine phase fit `arg f̂(ξ) ≈ α + β·ξ` over the super-threshold support.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PhaseFit {
    pub alpha: f64,
    pub beta: Vec<f64>,
    /// Max over the fitted support of the principal-value phase defect.
    pub residual: f64,
}

impl PhaseFit {
    /// Spatial shift recovered from the linear phase slope, x₀ = −β/(2π).
    pub fn shift(&self) -> Vec<f64> {
        self.beta
            .iter()
            .map(|b| -b / (2.0 * std::f64::consts::PI))
            .collect()
    }
}

fn principal(angle: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut a = angle % two_pi;
    if a > std::f64::consts::PI {
        a -= two_pi;
    } else if a < -std::f64::consts::PI {
        a += two_pi;
    }
    a
}

/// Unwrap phases along lattice rays from the max-modulus point: axis 0 line
/// through the anchor first, then axis 1 lines, then axis 2 lines.
fn unwrap_phases(f: &SpectralField) -> Vec<f64> {
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let dim = grid.dim();
    let coeffs = f.coeffs();

    let anchor = coeffs
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())
        .map(|(i, _)| i)
        .unwrap_or(0);
    let am = grid.index_to_multi(anchor);

    let mut phase = vec![f64::NAN; coeffs.len()];
    phase[anchor] = coeffs[anchor].arg();

    // Walk one axis away from an already-phased anchor point.
    let walk_axis = |phase: &mut Vec<f64>, start: [usize; MAX_DIM], axis: usize| {
        let sidx = grid.multi_to_index(&start[..dim]);
        debug_assert!(!phase[sidx].is_nan());
        for dir in [1i64, -1] {
            let mut prev = start;
            loop {
                let next_c = prev[axis] as i64 + dir;
                if next_c < 0 || next_c >= n as i64 {
                    break;
                }
                let mut cur = prev;
                cur[axis] = next_c as usize;
                let pidx = grid.multi_to_index(&prev[..dim]);
                let cidx = grid.multi_to_index(&cur[..dim]);
                let step = principal(coeffs[cidx].arg() - coeffs[pidx].arg());
                phase[cidx] = phase[pidx] + step;
                prev = cur;
            }
        }
    };

    walk_axis(&mut phase, am, 0);
    if dim >= 2 {
        for c0 in 0..n {
            let mut start = am;
            start[0] = c0;
            walk_axis(&mut phase, start, 1);
        }
    }
    if dim >= 3 {
        for c0 in 0..n {
            for c1 in 0..n {
                let mut start = am;
                start[0] = c0;
                start[1] = c1;
                walk_axis(&mut phase, start, 2);
            }
        }
    }
    phase
}

/// Fit `arg f̂ ≈ α + β·ξ` over lattice points with `|f̂| > threshold`,
/// weighted by |f̂|². With `fit_slope = false` the slope is forced to zero
/// and α is the weighted circular mean phase.
pub fn phase_fit(f: &SpectralField, threshold: f64, fit_slope: bool) -> Result<PhaseFit> {
    let grid = *f.grid();
    let dim = grid.dim();
    let coeffs = f.coeffs();
    let support: Vec<usize> = (0..coeffs.len())
        .filter(|&i| coeffs[i].norm() > threshold)
        .collect();
    if support.len() < 2 {
        return Err(Error::InsufficientSupport(format!(
            "phase fit needs at least 2 points above threshold {threshold}, found {}",
            support.len()
        )));
    }

    if !fit_slope {
        let mut acc = C64::new(0.0, 0.0);
        for &i in &support {
            acc += C64::from_polar(coeffs[i].norm_sqr(), coeffs[i].arg());
        }
        let alpha = acc.arg();
        let mut residual = 0.0f64;
        for &i in &support {
            residual = residual.max(principal(coeffs[i].arg() - alpha).abs());
        }
        return Ok(PhaseFit {
            alpha,
            beta: vec![0.0; dim],
            residual,
        });
    }

    let phase = unwrap_phases(f);

    // Weighted least squares for (α, β) on φ ≈ α + β·ξ.
    let m = dim + 1;
    let mut ata = nalgebra::DMatrix::<f64>::zeros(m, m);
    let mut atb = nalgebra::DVector::<f64>::zeros(m);
    for &i in &support {
        let w = coeffs[i].norm_sqr();
        let xi = grid.frequency(i);
        let mut row = [0.0f64; 1 + MAX_DIM];
        row[0] = 1.0;
        row[1..=dim].copy_from_slice(&xi[..dim]);
        for r in 0..m {
            for c in 0..m {
                ata[(r, c)] += w * row[r] * row[c];
            }
            atb[r] += w * row[r] * phase[i];
        }
    }
    let sol = ata
        .lu()
        .solve(&atb)
        .ok_or_else(|| Error::InsufficientSupport("degenerate phase-fit system".into()))?;
    let alpha_raw = sol[0];
    let beta: Vec<f64> = (0..dim).map(|a| sol[1 + a]).collect();

    let mut residual = 0.0f64;
    for &i in &support {
        let xi = grid.frequency(i);
        let model: f64 = alpha_raw
            + beta
                .iter()
                .zip(&xi[..dim])
                .map(|(b, x)| b * x)
                .sum::<f64>();
        residual = residual.max(principal(coeffs[i].arg() - model).abs());
    }
    Ok(PhaseFit {
        alpha: principal(alpha_raw),
        beta,
        residual,
    })
}

/// Gaussian lift of a trigonometric polynomial to the line:
/// `q_λ(x) = λ^{1/(2p)} q(x) e^{−λx²}` with `q(x) = Σ_m c_m e^{2πimx}`,
/// and the companion with coefficient moduli. Returns `(q_λ, Q_λ)`.
pub fn lift_trig_poly(
    coeffs: &[(i64, C64)],
    lambda: f64,
    p: f64,
    grid: Grid,
) -> Result<(Field, Field)> {
    if grid.dim() != 1 {
        return Err(Error::InvalidParameter(
            "the Gaussian lift is one-dimensional".into(),
        ));
    }
    if !(lambda > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "lift needs lambda > 0, got {lambda}"
        )));
    }
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "lift needs p >= 1, got {p}"
        )));
    }
    let amp = lambda.powf(1.0 / (2.0 * p));
    let sample = |moduli: bool| {
        Field::from_fn(grid, |x| {
            let envelope = amp * (-lambda * x[0] * x[0]).exp();
            let mut acc = C64::new(0.0, 0.0);
            for &(m, c) in coeffs {
                let c = if moduli { C64::new(c.norm(), 0.0) } else { c };
                acc += c * C64::new(0.0, 2.0 * std::f64::consts::PI * m as f64 * x[0]).exp();
            }
            acc * envelope
        })
    };
    Ok((sample(false), sample(true)))
}

/// Lᵖ norm of `Σ_m c_m e^{2πimx}` on the unit torus by 4096-point quadrature.
pub fn torus_lp_norm(coeffs: &[(i64, C64)], p: f64) -> f64 {
    const POINTS: usize = 4096;
    let mut acc = 0.0f64;
    for j in 0..POINTS {
        let x = j as f64 / POINTS as f64;
        let mut v = C64::new(0.0, 0.0);
        for &(m, c) in coeffs {
            v += c * C64::new(0.0, 2.0 * std::f64::consts::PI * m as f64 * x).exp();
        }
        acc += v.norm().powf(p);
    }
    (acc / POINTS as f64).powf(1.0 / p)
}

/// One candidate from the sign-pattern search.
#[derive(Debug, Clone, serde::Serialize)]
pub struct UmpCandidate {
    /// Signs in {−1, 0, +1} for frequencies 0..=max_freq.
    pub pattern: Vec<i8>,
    /// ‖q‖_p / ‖Q‖_p with Q built from the coefficient moduli.
    pub ratio: f64,
}

fn pattern_coeffs(pattern: &[i8]) -> (Vec<(i64, C64)>, Vec<(i64, C64)>) {
    let signed: Vec<(i64, C64)> = pattern
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != 0)
        .map(|(m, &s)| (m as i64, C64::new(s as f64, 0.0)))
        .collect();
    let moduli: Vec<(i64, C64)> = signed
        .iter()
        .map(|&(m, c)| (m, C64::new(c.norm(), 0.0)))
        .collect();
    (signed, moduli)
}

/// Evaluate every sign pattern in {−1, 0, +1} on frequencies 0..=max_freq,
/// returning (pattern, torus-norm ratio) for each nontrivial pattern.
/// Works for any p > 2; the exhaustive scan is its own oracle.
pub fn ump_scan(p: f64, max_freq: usize) -> Result<Vec<UmpCandidate>> {
    if !(p > 2.0) {
        return Err(Error::InvalidParameter(format!(
            "majorant search needs p > 2, got {p}"
        )));
    }
    if max_freq > 6 {
        return Err(Error::InvalidParameter(format!(
            "max_freq capped at 6, got {max_freq}"
        )));
    }
    let len = max_freq + 1;
    let total = 3usize.pow(len as u32);
    let mut out: Vec<UmpCandidate> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut rest = code;
            let mut pattern = vec![0i8; len];
            for slot in pattern.iter_mut() {
                *slot = (rest % 3) as i8 - 1;
                rest /= 3;
            }
            if pattern.iter().all(|&s| s == 0) {
                return None;
            }
            let (signed, moduli) = pattern_coeffs(&pattern);
            let ratio = torus_lp_norm(&signed, p) / torus_lp_norm(&moduli, p);
            Some(UmpCandidate { pattern, ratio })
        })
        .collect();
    out.sort_by(|a, b| {
        b.ratio
            .partial_cmp(&a.ratio)
            .unwrap()
            .then_with(|| a.pattern.cmp(&b.pattern))
    });
    Ok(out)
}

/// Exhaustive search for a majorant-property violation at a non-even
/// exponent: returns the pattern maximising ‖q‖_p / ‖Q‖_p. Even integer
/// exponents are rejected — the modulus pattern always wins there.
pub fn ump_violation_search(p: f64, max_freq: usize) -> Result<UmpCandidate> {
    if p > 2.0 && p.fract() == 0.0 && (p as u64) % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is an even integer; the majorant property holds there and the search is futile"
        )));
    }
    let scan = ump_scan(p, max_freq)?;
    scan.into_iter()
        .next()
        .ok_or_else(|| Error::InvalidParameter("empty search space".into()))
}

/// Positive-definiteness probe: build the matrix `[f(x_k − x_l)]` on
/// `sample_count` seeded lattice points (differences wrapped periodically)
/// and report the smallest eigenvalue of its Hermitian part.
pub fn positive_definite_check(
    f: &Field,
    sample_count: usize,
    seed: u64,
) -> Result<(bool, f64)> {
    if sample_count < 2 {
        return Err(Error::InvalidParameter(
            "need at least 2 sample points".into(),
        ));
    }
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let dim = grid.dim();
    let mut rng = crate::random::rng_from_seed(seed);
    use rand::Rng;
    let points: Vec<[usize; MAX_DIM]> = (0..sample_count)
        .map(|_| {
            let mut m = [0usize; MAX_DIM];
            for slot in m.iter_mut().take(dim) {
                *slot = rng.gen_range(0..n);
            }
            m
        })
        .collect();

    let m = sample_count;
    let mut mat = nalgebra::DMatrix::<C64>::zeros(m, m);
    for k in 0..m {
        for l in 0..m {
            let mut diff = [0usize; MAX_DIM];
            for a in 0..dim {
                diff[a] = (points[k][a] + n - points[l][a]) % n;
            }
            // x_j − x_l re-wrapped lands on the lattice shifted by the box
            // origin; convert the index difference to a sample index.
            let mut sample = [0usize; MAX_DIM];
            for a in 0..dim {
                sample[a] = (diff[a] + n / 2) % n;
            }
            mat[(k, l)] = f.values()[grid.multi_to_index(&sample[..dim])];
        }
    }
    // Hermitian part, embedded as a real symmetric matrix [[A, −B], [B, A]].
    let mut emb = nalgebra::DMatrix::<f64>::zeros(2 * m, 2 * m);
    for k in 0..m {
        for l in 0..m {
            let h = 0.5 * (mat[(k, l)] + mat[(l, k)].conj());
            emb[(k, l)] = h.re;
            emb[(k + m, l + m)] = h.re;
            emb[(k, l + m)] = -h.im;
            emb[(k + m, l)] = h.im;
        }
    }
    let eig = emb.symmetric_eigen();
    let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let scale = f.values().iter().map(|v| v.norm()).fold(0.0f64, f64::max);
    Ok((min_eig >= -1e-9 * scale.max(1e-300), min_eig))
}

/// Verdict of the support identity `supp(f ∗ g) = supp f ⊕ supp g`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MinkowskiVerdict {
    pub ok: bool,
    /// Hausdorff distance (in cells, Chebyshev metric) between the support
    /// of the direct convolution and the Minkowski sum of the supports.
    pub hausdorff_cells: usize,
    /// Whether the Minkowski sum escaped the box (reported as failure).
    pub escaped_box: bool,
}

/// Compare the support of the direct (non-periodic) discrete convolution of
/// two nonnegative fields against the Minkowski sum of their supports.
/// Supports are `{value > tol}`; agreement within one lattice cell passes.
pub fn support_minkowski_check(f: &Field, g: &Field, tol: f64) -> Result<MinkowskiVerdict> {
    let grid = *f.grid();
    if g.grid() != &grid {
        return Err(Error::InvalidField("mismatched grids".into()));
    }
    for field in [f, g] {
        for v in field.values() {
            if v.im.abs() > tol || v.re < -tol {
                return Err(Error::InvalidField(
                    "supports are defined for nonnegative real fields".into(),
                ));
            }
        }
    }
    let n = grid.points_per_axis() as i64;
    let dim = grid.dim();

    let support = |field: &Field| -> Vec<[i64; MAX_DIM]> {
        (0..field.values().len())
            .filter(|&i| field.values()[i].re > tol)
            .map(|i| {
                let m = grid.index_to_multi(i);
                let mut c = [0i64; MAX_DIM];
                for a in 0..dim {
                    c[a] = m[a] as i64 - n / 2;
                }
                c
            })
            .collect()
    };
    let sf = support(f);
    let sg = support(g);

    // Minkowski sum on centered index vectors, no periodic wrap.
    let mut minkowski: HashSet<[i64; MAX_DIM]> = HashSet::new();
    let mut escaped_box = false;
    for a in &sf {
        for b in &sg {
            let mut s = [0i64; MAX_DIM];
            let mut inside = true;
            for ax in 0..dim {
                s[ax] = a[ax] + b[ax];
                if s[ax] < -n / 2 || s[ax] >= n / 2 {
                    inside = false;
                }
            }
            if inside {
                minkowski.insert(s);
            } else {
                escaped_box = true;
            }
        }
    }

    // Direct O(N²)-style convolution with zero extension outside the box.
    let w = grid.cell_volume();
    let conv_support: HashSet<[i64; MAX_DIM]> = {
        let mut set = HashSet::new();
        let fv = f.values();
        let gv = g.values();
        for out in 0..grid.total_points() {
            let om = grid.index_to_multi(out);
            let mut acc = 0.0f64;
            for (j, gval) in gv.iter().enumerate() {
                if gval.re <= tol {
                    continue;
                }
                let jm = grid.index_to_multi(j);
                let mut fm = [0usize; MAX_DIM];
                let mut inside = true;
                for a in 0..dim {
                    // Centered difference index: out − j + center.
                    let d = om[a] as i64 - jm[a] as i64 + n / 2;
                    if d < 0 || d >= n {
                        inside = false;
                        break;
                    }
                    fm[a] = d as usize;
                }
                if inside {
                    acc += fv[grid.multi_to_index(&fm[..dim])].re * gval.re;
                }
            }
            if acc * w > tol * tol {
                let mut c = [0i64; MAX_DIM];
                for a in 0..dim {
                    c[a] = om[a] as i64 - n / 2;
                }
                set.insert(c);
            }
        }
        set
    };

    let hausdorff = hausdorff_cells(&conv_support, &minkowski, dim);
    Ok(MinkowskiVerdict {
        ok: !escaped_box && hausdorff <= 1,
        hausdorff_cells: hausdorff,
        escaped_box,
    })
}

fn hausdorff_cells(
    a: &HashSet<[i64; MAX_DIM]>,
    b: &HashSet<[i64; MAX_DIM]>,
    dim: usize,
) -> usize {
    if a.is_empty() && b.is_empty() {
        return 0;
    }
    if a.is_empty() || b.is_empty() {
        return usize::MAX;
    }
    let directed = |from: &HashSet<[i64; MAX_DIM]>, to: &HashSet<[i64; MAX_DIM]>| -> usize {
        let mut worst = 0usize;
        for p in from {
            let mut best = usize::MAX;
            for q in to {
                let mut d = 0i64;
                for ax in 0..dim {
                    d = d.max((p[ax] - q[ax]).abs());
                }
                best = best.min(d as usize);
                if best == 0 {
                    break;
                }
            }
            worst = worst.max(best);
        }
        worst
    };
    directed(a, b).max(directed(b, a))
}
