//! Characteristic polynomial of the counting recurrence, its complex roots,
//! and the closed forms they induce: power sums of the roots give the
//! cyclic counts, complete homogeneous sums give the linear counts.

use crate::count::CountEngine;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// The degree-r polynomial `X^r - C_0 X^{r-1} - C_1 X^{r-2} - ... - C_{r-1}`
/// with exact integer coefficients, stored leading-first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    r: usize,
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn r(&self) -> usize {
        self.r
    }

    /// Coefficients `c_0..c_r` with `c_0 = 1` and `c_i = -C_{i-1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap()).collect()
    }
}

/// Numerically computed roots with per-root residuals and the minimum
/// pairwise distance, sorted by real part, then imaginary part.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub min_gap: f64,
}

/// Outcome of a closed-form comparison against the exact counts.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub r: u32,
    pub n_max: i64,
    pub max_rel_error: f64,
}

/// The homogeneous-sum check is only meaningful for pairwise distinct
/// roots; it is skipped when the minimum root gap is below the guard.
#[derive(Debug, Clone)]
pub enum HomogOutcome {
    Ran(CheckReport),
    Skipped { min_gap: f64 },
}

const DISTINCT_ROOT_GUARD: f64 = 1e-6;

pub fn char_poly(engine: &CountEngine, r: u32) -> Result<CharPoly> {
    if r == 0 {
        return Err(Error::InvalidInput("char_poly requires r >= 1".into()));
    }
    let mut coeffs = vec![BigInt::from(1)];
    for i in 1..=r as usize {
        coeffs.push(-BigInt::from(engine.catalan(i - 1)));
    }
    Ok(CharPoly { r: r as usize, coeffs })
}

fn horner(coeffs: &[f64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Aberth-Ehrlich simultaneous iteration from a fixed deterministic start.
pub fn find_roots(p: &CharPoly, tol: f64) -> Result<RootSet> {
    if tol <= 0.0 {
        return Err(Error::InvalidInput("root tolerance must be positive".into()));
    }
    let r = p.r;
    let coeffs = p.coeffs_f64();
    let max_coeff = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    // Cauchy bound: all roots lie within 1 + max |c_i| of the origin.
    let radius = 1.0 + max_coeff;
    let mut roots: Vec<Complex64> = (0..r)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / r as f64 + 0.4;
            Complex64::from_polar(radius * 0.5 + 0.1, angle)
        })
        .collect();
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for i in 0..r {
            let (value, deriv) = horner(&coeffs, roots[i]);
            if value.norm() == 0.0 {
                continue;
            }
            let ratio = if deriv.norm() == 0.0 {
                value / Complex64::new(f64::EPSILON, f64::EPSILON)
            } else {
                value / deriv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..r {
                if j != i {
                    repulsion += (roots[i] - roots[j]).inv();
                }
            }
            let correction = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            roots[i] -= correction;
            max_step = max_step.max(correction.norm() / (1.0 + roots[i].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    let residuals: Vec<f64> = roots.iter().map(|&z| horner(&coeffs, z).0.norm()).collect();
    let worst = residuals.iter().cloned().fold(0.0f64, f64::max);
    if worst > tol * max_coeff.max(1.0) {
        return Err(Error::NoConvergence { residual: worst });
    }
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| {
        roots[i]
            .re
            .total_cmp(&roots[j].re)
            .then(roots[i].im.total_cmp(&roots[j].im))
    });
    let roots: Vec<Complex64> = order.iter().map(|&i| roots[i]).collect();
    let residuals: Vec<f64> = order.iter().map(|&i| residuals[i]).collect();
    let mut min_gap = f64::INFINITY;
    for i in 0..r {
        for j in i + 1..r {
            min_gap = min_gap.min((roots[i] - roots[j]).norm());
        }
    }
    Ok(RootSet { roots, residuals, min_gap })
}

/// Maximum relative error when the monic product over the computed roots is
/// expanded back into coefficients (Vieta reconstruction).
pub fn reconstruction_error(p: &CharPoly, roots: &RootSet) -> f64 {
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for &root in &roots.roots {
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c * root;
        }
        poly = next;
    }
    let exact = p.coeffs_f64();
    poly.iter()
        .zip(&exact)
        .map(|(got, &want)| (got - want).norm() / want.abs().max(1.0))
        .fold(0.0, f64::max)
}

fn rel_err(approx: Complex64, exact: f64) -> f64 {
    let scale = exact.abs().max(1.0);
    ((approx.re - exact).abs() + approx.im.abs()) / scale
}

fn big_to_f64(v: &BigUint) -> f64 {
    v.to_f64().expect("count fits in f64 range")
}

/// Checks that the power sums of the roots reproduce the exact cyclic
/// counts for `1 <= n <= n_max`.
pub fn power_sum_check(engine: &CountEngine, r: u32, n_max: i64, tol: f64) -> Result<CheckReport> {
    let roots = find_roots(&char_poly(engine, r)?, 1e-12)?;
    let mut powers: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); roots.roots.len()];
    let mut max_rel = 0.0f64;
    for n in 1..=n_max {
        for (p, &root) in powers.iter_mut().zip(&roots.roots) {
            *p *= root;
        }
        let sum: Complex64 = powers.iter().sum();
        let exact = big_to_f64(&engine.t_cyc(r, n)?);
        let err = rel_err(sum, exact);
        max_rel = max_rel.max(err);
        if err > tol {
            return Err(Error::CheckFailed(format!(
                "power sum at r={r}, n={n}: got {sum}, exact {exact}, rel err {err:e}"
            )));
        }
    }
    Ok(CheckReport { r, n_max, max_rel_error: max_rel })
}

/// Checks that the complete homogeneous sums of the roots reproduce the
/// exact linear counts, via the partial-fraction form
/// `H_n = sum_i xi_i^{n+r-1} / prod_{j != i} (xi_i - xi_j)`.
pub fn homog_check(engine: &CountEngine, r: u32, n_max: i64, tol: f64) -> Result<HomogOutcome> {
    let roots = find_roots(&char_poly(engine, r)?, 1e-12)?;
    if roots.min_gap <= DISTINCT_ROOT_GUARD {
        return Ok(HomogOutcome::Skipped { min_gap: roots.min_gap });
    }
    let k = roots.roots.len();
    let weights: Vec<Complex64> = (0..k)
        .map(|i| {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..k {
                if j != i {
                    denom *= roots.roots[i] - roots.roots[j];
                }
            }
            denom.inv()
        })
        .collect();
    let mut powers: Vec<Complex64> = (0..k)
        .map(|i| roots.roots[i].powi(r as i32 - 1))
        .collect();
    let mut max_rel = 0.0f64;
    for n in 1..=n_max {
        for (p, &root) in powers.iter_mut().zip(&roots.roots) {
            *p *= root;
        }
        let sum: Complex64 = powers.iter().zip(&weights).map(|(&p, &w)| p * w).sum();
        let exact = big_to_f64(&engine.t_lin(r, n));
        let err = rel_err(sum, exact);
        max_rel = max_rel.max(err);
        if err > tol {
            return Err(Error::CheckFailed(format!(
                "homogeneous sum at r={r}, n={n}: got {sum}, exact {exact}, rel err {err:e}"
            )));
        }
    }
    Ok(HomogOutcome::Ran(CheckReport { r, n_max, max_rel_error: max_rel }))
}

/// Spectral radius of the recurrence: the largest root modulus.
pub fn dominant_growth(engine: &CountEngine, r: u32) -> Result<f64> {
    let roots = find_roots(&char_poly(engine, r)?, 1e-12)?;
    Ok(roots.roots.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn char_poly_coefficients() {
        let e = CountEngine::new();
        let p1 = char_poly(&e, 1).unwrap();
        assert_eq!(p1.coeffs(), &[BigInt::from(1), BigInt::from(-1)]);
        let p2 = char_poly(&e, 2).unwrap();
        assert_eq!(p2.coeffs(), &[BigInt::from(1), BigInt::from(-1), BigInt::from(-1)]);
        let p3 = char_poly(&e, 3).unwrap();
        assert_eq!(
            p3.coeffs(),
            &[BigInt::from(1), BigInt::from(-1), BigInt::from(-1), BigInt::from(-2)]
        );
        assert!(char_poly(&e, 0).is_err());
    }

    #[test]
    fn golden_ratio_roots() {
        let e = CountEngine::new();
        let roots = find_roots(&char_poly(&e, 2).unwrap(), 1e-12).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let psi = (1.0 - 5f64.sqrt()) / 2.0;
        assert!((roots.roots[0].re - psi).abs() < 1e-10);
        assert!((roots.roots[1].re - phi).abs() < 1e-10);
        assert!(roots.roots.iter().all(|z| z.im.abs() < 1e-10));

        let single = find_roots(&char_poly(&e, 1).unwrap(), 1e-12).unwrap();
        assert!((single.roots[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(single.min_gap.is_infinite());
    }

    #[test]
    fn conjugate_closure_and_reconstruction() {
        let e = CountEngine::new();
        for r in 1..=8u32 {
            let p = char_poly(&e, r).unwrap();
            let roots = find_roots(&p, 1e-12).unwrap();
            assert!(reconstruction_error(&p, &roots) < 1e-8, "r = {r}");
            for &z in &roots.roots {
                let conj = roots
                    .roots
                    .iter()
                    .map(|w| (w - z.conj()).norm())
                    .fold(f64::INFINITY, f64::min);
                assert!(conj < 1e-8, "conjugate of {z} missing for r = {r}");
            }
        }
    }

    #[test]
    fn closed_form_checks() {
        let e = CountEngine::new();
        for r in 1..=6u32 {
            let report = power_sum_check(&e, r, 20, 1e-8).unwrap();
            assert!(report.max_rel_error < 1e-8);
            match homog_check(&e, r, 20, 1e-8).unwrap() {
                HomogOutcome::Ran(report) => assert!(report.max_rel_error < 1e-8),
                HomogOutcome::Skipped { min_gap } => {
                    assert!(min_gap <= DISTINCT_ROOT_GUARD)
                }
            }
        }
    }

    #[test]
    fn unreachable_tolerance_reports_residual() {
        let e = CountEngine::new();
        let p = char_poly(&e, 6).unwrap();
        match find_roots(&p, 1e-30) {
            Err(crate::error::Error::NoConvergence { residual }) => assert!(residual > 0.0),
            other => panic!("expected a convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn dominant_root_growth() {
        let e = CountEngine::new();
        assert!((dominant_growth(&e, 1).unwrap() - 1.0).abs() < 1e-12);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((dominant_growth(&e, 2).unwrap() - phi).abs() < 1e-10);
        // ratio of consecutive exact counts approaches the dominant root
        for r in 2..=6u32 {
            let growth = dominant_growth(&e, r).unwrap();
            let a = big_to_f64(&e.t_cyc(r, 26).unwrap());
            let b = big_to_f64(&e.t_cyc(r, 25).unwrap());
            assert!((a / b - growth).abs() < 1e-3, "r = {r}");
        }
    }
}
