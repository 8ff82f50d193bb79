//! Branch-continued square roots along complex paths.
//!
//! The adiabatic gap E₊ - E₋ = √(g(u)) must be followed continuously along
//! contours that leave the real axis; the principal branch jumps whenever the
//! radicand crosses the negative real axis. Nodes along the path carry a sign
//! relative to the principal root, chosen to maximize continuity, and segments
//! are refined until adjacent samples differ by less than π/2 in argument.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::numerics::quadrature::integrate_complex;

/// Branch-consistent samples of √g along a polyline.
#[derive(Debug, Clone)]
pub struct PathContinuation {
    /// Refined node positions, including all original polyline vertices.
    pub nodes: Vec<Complex64>,
    /// Continued values of √g at the nodes.
    pub samples: Vec<Complex64>,
}

const MAX_NODES: usize = 1 << 16;
/// Interior radicand zeros below this fraction of the path scale abort.
const INTERIOR_ZERO_FRACTION: f64 = 1e-12;
/// Endpoint radicands below this fraction of the path scale trigger the
/// quadratic endpoint substitution.
const ENDPOINT_ZERO_FRACTION: f64 = 1e-6;

/// Sign of the starting value relative to the principal square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartBranch {
    Principal,
    Negated,
}

fn assign_signs(
    radicands: &[Complex64],
    start: StartBranch,
) -> (Vec<Complex64>, Vec<bool>) {
    let mut samples = Vec::with_capacity(radicands.len());
    let mut ok = vec![true; radicands.len().saturating_sub(1)];
    let mut prev_nonzero: Option<Complex64> = None;
    for (k, &r) in radicands.iter().enumerate() {
        let p = r.sqrt();
        let v = match prev_nonzero {
            None => match start {
                StartBranch::Principal => p,
                StartBranch::Negated => -p,
            },
            Some(prev) => {
                if (p - prev).norm() <= (p + prev).norm() {
                    p
                } else {
                    -p
                }
            }
        };
        if let (Some(prev), true) = (prev_nonzero, v.norm() > 0.0) {
            // continuity criterion against the previous nonzero sample
            let turn = (v / prev).arg().abs();
            if turn >= FRAC_PI_2 && k > 0 {
                ok[k - 1] = false;
            }
        }
        if v.norm() > 0.0 {
            prev_nonzero = Some(v);
        }
        samples.push(v);
    }
    (samples, ok)
}

/// Follow √g continuously along a polyline, refining nodes until adjacent
/// samples turn by less than π/2.
///
/// The radicand may vanish at the two path endpoints but not in the interior.
pub fn continue_sqrt_along<G>(
    path: &[Complex64],
    radicand: G,
    start: StartBranch,
) -> Result<PathContinuation>
where
    G: Fn(Complex64) -> Complex64,
{
    assert!(path.len() >= 2, "path needs at least two nodes");
    let mut nodes: Vec<Complex64> = path.to_vec();
    let mut radicands: Vec<Complex64> = nodes.iter().map(|&u| radicand(u)).collect();

    loop {
        let scale = radicands.iter().map(|r| r.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::PathThroughBranchPoint(nodes[0]));
        }
        for (k, r) in radicands.iter().enumerate() {
            let interior = k > 0 && k + 1 < radicands.len();
            if interior && r.norm() < INTERIOR_ZERO_FRACTION * scale {
                return Err(Error::PathThroughBranchPoint(nodes[k]));
            }
        }
        let (samples, ok) = assign_signs(&radicands, start);
        if ok.iter().all(|&b| b) {
            return Ok(PathContinuation { nodes, samples });
        }
        if nodes.len() >= MAX_NODES {
            let first_bad = ok.iter().position(|&b| !b).unwrap_or(0);
            return Err(Error::PathThroughBranchPoint(nodes[first_bad]));
        }
        let mut new_nodes = Vec::with_capacity(2 * nodes.len());
        let mut new_radicands = Vec::with_capacity(2 * nodes.len());
        for k in 0..nodes.len() - 1 {
            new_nodes.push(nodes[k]);
            new_radicands.push(radicands[k]);
            if !ok[k] {
                let mid = 0.5 * (nodes[k] + nodes[k + 1]);
                new_nodes.push(mid);
                new_radicands.push(radicand(mid));
            }
        }
        new_nodes.push(*nodes.last().unwrap());
        new_radicands.push(*radicands.last().unwrap());
        nodes = new_nodes;
        radicands = new_radicands;
    }
}

/// How the square root enters the path integrand.
#[derive(Debug, Clone, Copy)]
enum SqrtRole {
    Factor,
    Divisor,
}

/// ∫ √g(u) du along the polyline, with the branch continued from the
/// principal value at the start.
pub fn integrate_sqrt_along<G>(path: &[Complex64], radicand: G, tol: f64) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64 + Copy,
{
    integrate_with_sqrt(path, radicand, |_| Complex64::new(1.0, 0.0), SqrtRole::Factor, tol)
}

/// ∫ w(u)/√g(u) du along the polyline with the continued branch. The inverse
/// square root is integrable at endpoint zeros of g.
pub fn integrate_weighted_inverse_sqrt_along<G, W>(
    path: &[Complex64],
    radicand: G,
    weight: W,
    tol: f64,
) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64 + Copy,
    W: Fn(Complex64) -> Complex64 + Copy,
{
    integrate_with_sqrt(path, radicand, weight, SqrtRole::Divisor, tol)
}

fn integrate_with_sqrt<G, W>(
    path: &[Complex64],
    radicand: G,
    weight: W,
    role: SqrtRole,
    tol: f64,
) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64 + Copy,
    W: Fn(Complex64) -> Complex64 + Copy,
{
    let cont = continue_sqrt_along(path, radicand, StartBranch::Principal)?;
    let nodes = &cont.nodes;
    let samples = &cont.samples;
    let scale = samples.iter().map(|s| s.norm_sqr()).fold(0.0, f64::max);
    let seg_tol = tol / nodes.len() as f64;

    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..nodes.len() - 1 {
        let (a, b) = (nodes[k], nodes[k + 1]);
        // rotate the principal cut away from the radicand arc on this segment
        let r_mid = radicand(0.5 * (a + b));
        let phi = r_mid.arg();
        let rot = Complex64::from_polar(1.0, -phi);
        let half_rot = Complex64::from_polar(1.0, 0.5 * phi);
        let local_sqrt = move |u: Complex64| half_rot * (radicand(u) * rot).sqrt();

        // match the local analytic branch to the continued samples
        let (v_ref, t_ref) = if samples[k].norm() > 0.0 {
            (samples[k], 0.0)
        } else {
            (samples[k + 1], 1.0)
        };
        let probe = local_sqrt(a + (b - a) * t_ref);
        let sign = if (probe - v_ref).norm() <= (probe + v_ref).norm() { 1.0 } else { -1.0 };

        let seg = move |t: f64| {
            let u = a + (b - a) * t;
            let s = sign * local_sqrt(u);
            let w = weight(u);
            match role {
                SqrtRole::Factor => w * s,
                SqrtRole::Divisor => w / s,
            }
        };

        let zero_at_end =
            k + 2 == nodes.len() && samples[k + 1].norm_sqr() < ENDPOINT_ZERO_FRACTION * scale;
        let zero_at_start = k == 0 && samples[0].norm_sqr() < ENDPOINT_ZERO_FRACTION * scale;

        let val = if zero_at_end {
            // t = 1 - τ² regularizes both √ and 1/√ behavior at the endpoint
            integrate_complex(|tau| seg(1.0 - tau * tau) * 2.0 * tau, 1.0, 0.0, seg_tol).value
                * (-1.0)
        } else if zero_at_start {
            integrate_complex(|tau| seg(tau * tau) * 2.0 * tau, 0.0, 1.0, seg_tol).value
        } else {
            integrate_complex(seg, 0.0, 1.0, seg_tol).value
        };
        total += val * (b - a);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_radicand_stays_constant() {
        let path = [c(0.0, 0.0), c(1.0, 2.0), c(-3.0, 1.0)];
        let cont = continue_sqrt_along(&path, |_| c(1.0, 0.0), StartBranch::Principal).unwrap();
        for v in &cont.samples {
            assert!((v - c(1.0, 0.0)).norm() < 1e-15);
        }
        let cont = continue_sqrt_along(&path, |_| c(1.0, 0.0), StartBranch::Negated).unwrap();
        for v in &cont.samples {
            assert!((v + c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn continuation_matches_principal_when_no_cut_crossing() {
        // along [0, -0.05 + 2i] the radicand u²+1 dips just below the cut, so
        // the principal root remains continuous and no sign flips may appear
        let rad = |u: Complex64| u * u + 1.0;
        let path = [c(0.0, 0.0), c(-0.05, 2.0)];
        let cont = continue_sqrt_along(&path, rad, StartBranch::Principal).unwrap();
        for (u, v) in cont.nodes.iter().zip(&cont.samples) {
            assert!(
                (v - rad(*u).sqrt()).norm() < 1e-12,
                "sign flip artifact at {u}"
            );
        }
    }

    #[test]
    fn continuation_flips_against_principal_after_cut_crossing() {
        // along [0, 0.05 + 2i] the radicand crosses the negative real axis
        // from above; the continued branch must be -principal past u ≈ i
        let rad = |u: Complex64| u * u + 1.0;
        let path = [c(0.0, 0.0), c(0.05, 2.0)];
        let cont = continue_sqrt_along(&path, rad, StartBranch::Principal).unwrap();
        let end = cont.samples.last().unwrap();
        let principal_end = rad(c(0.05, 2.0)).sqrt();
        assert!((end + principal_end).norm() < 1e-12);
    }

    #[test]
    fn quarter_circle_rotated_to_the_imaginary_axis() {
        // ∫₀^i √(u²+1) du = i·π/4 with the endpoint exactly at a branch point
        let val = integrate_sqrt_along(&[c(0.0, 0.0), c(0.0, 1.0)], |u| u * u + 1.0, 1e-10)
            .unwrap();
        assert!((val - c(0.0, PI / 4.0)).norm() < 1e-8, "got {val}");
    }

    #[test]
    fn path_independence_for_homotopic_paths() {
        let rad = |u: Complex64| u * u + 1.0;
        let target = c(0.6, 0.7);
        let direct = integrate_sqrt_along(&[c(0.0, 0.0), target], rad, 1e-10).unwrap();
        let dogleg =
            integrate_sqrt_along(&[c(0.0, 0.0), c(0.6, 0.0), target], rad, 1e-10).unwrap();
        assert!((direct - dogleg).norm() < 1e-8);
    }

    #[test]
    fn interior_branch_point_is_an_error() {
        let r = integrate_sqrt_along(&[c(0.0, 0.0), c(0.0, 2.0)], |u| u * u + 1.0, 1e-9);
        assert!(matches!(r, Err(Error::PathThroughBranchPoint(_))));
    }

    #[test]
    fn inverse_sqrt_with_endpoint_zero() {
        // ∫₀^1 dt/√(1-t²) = π/2, cast as a path integral on the real axis
        let val = integrate_weighted_inverse_sqrt_along(
            &[c(0.0, 0.0), c(1.0, 0.0)],
            |u| 1.0 - u * u,
            |_| c(1.0, 0.0),
            1e-10,
        )
        .unwrap();
        assert!((val - c(PI / 2.0, 0.0)).norm() < 1e-8, "got {val}");
    }
}
