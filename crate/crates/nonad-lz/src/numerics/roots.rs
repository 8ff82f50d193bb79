//! Complex Newton iteration from seed grids and one-dimensional root
//! bracketing on the real line.

use num_complex::Complex64;

const NEWTON_MAX_ITER: usize = 60;
const DEDUP_RADIUS: f64 = 1e-8;

/// Newton iteration for roots of an analytic function.
///
/// Every seed is iterated independently; seeds that wander off or fail to
/// converge are dropped silently. Converged roots (|g| < tol) are deduplicated
/// by distance. The returned list may be empty.
pub fn complex_newton_roots<G, DG>(
    g: G,
    dg: DG,
    seeds: &[Complex64],
    tol: f64,
) -> Vec<Complex64>
where
    G: Fn(Complex64) -> Complex64,
    DG: Fn(Complex64) -> Complex64,
{
    let mut roots: Vec<Complex64> = Vec::new();
    for &seed in seeds {
        let mut z = seed;
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let gz = g(z);
            if gz.norm() < tol {
                converged = true;
                break;
            }
            let dgz = dg(z);
            if dgz.norm() == 0.0 || !dgz.is_finite() || !gz.is_finite() {
                break;
            }
            let step = gz / dgz;
            z -= step;
            if !z.is_finite() || z.norm() > 1e8 {
                break;
            }
            if step.norm() < 1e-16 * z.norm().max(1.0) {
                converged = g(z).norm() < tol;
                break;
            }
        }
        if converged && g(z).norm() < tol {
            // polish once more for good measure
            let dgz = dg(z);
            if dgz.norm() > 0.0 {
                let z2 = z - g(z) / dgz;
                if z2.is_finite() && g(z2).norm() <= g(z).norm() {
                    z = z2;
                }
            }
            if !roots.iter().any(|r| (*r - z).norm() < DEDUP_RADIUS) {
                roots.push(z);
            }
        }
    }
    roots
}

/// Rectangular grid of Newton seeds over [re_lo, re_hi] x [im_lo, im_hi].
pub fn seed_grid(
    re_lo: f64,
    re_hi: f64,
    im_lo: f64,
    im_hi: f64,
    per_side: usize,
) -> Vec<Complex64> {
    assert!(per_side >= 2);
    let mut seeds = Vec::with_capacity(per_side * per_side);
    for i in 0..per_side {
        for j in 0..per_side {
            let re = re_lo + (re_hi - re_lo) * i as f64 / (per_side - 1) as f64;
            let im = im_lo + (im_hi - im_lo) * j as f64 / (per_side - 1) as f64;
            seeds.push(Complex64::new(re, im));
        }
    }
    seeds
}

/// Real roots of f on [lo, hi]: sign changes on a uniform grid are refined by
/// bisection and polished by secant steps.
pub fn bracket_real_roots<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, grid: usize) -> Vec<f64> {
    assert!(grid >= 2 && hi > lo);
    let mut roots = Vec::new();
    let step = (hi - lo) / grid as f64;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=grid {
        let x1 = lo + step * i as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            roots.push(refine_bracket(&f, x0, x1, f0, f1));
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(x0);
    }
    roots
}

fn refine_bracket<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    // bisect to a narrow bracket
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
        if (b - a).abs() < 1e-13 * b.abs().max(1.0) {
            break;
        }
    }
    // secant polish
    let (mut x0, mut x1) = (a, b);
    let (mut f0, mut f1) = (fa, fb);
    for _ in 0..8 {
        let denom = f1 - f0;
        if denom == 0.0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / denom;
        if !x2.is_finite() || x2 < a.min(b) - 1.0 || x2 > a.max(b) + 1.0 {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x2);
        if f1.abs() < 1e-15 {
            break;
        }
    }
    x1
}

/// Golden-section search for a local minimum of f inside [a, b].
pub fn golden_minimum<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, xtol: f64) -> f64 {
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_circle_seeds_find_pm_i() {
        let seeds: Vec<Complex64> = (0..8)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 8.0 + 0.1))
            .collect();
        let roots = complex_newton_roots(|u| u * u + 1.0, |u| 2.0 * u, &seeds, 1e-12);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!((r.im.abs() - 1.0).abs() < 1e-10 && r.re.abs() < 1e-10);
        }
    }

    #[test]
    fn sextic_roots_on_two_circles() {
        // (u³ + 0.5i)² + 1 = 0  =>  u³ = -0.5i ± i, radii 0.5^{1/3} and 1.5^{1/3}
        let g = |u: Complex64| {
            let w = u * u * u + Complex64::new(0.0, 0.5);
            w * w + 1.0
        };
        let dg = |u: Complex64| {
            let w = u * u * u + Complex64::new(0.0, 0.5);
            2.0 * w * 3.0 * u * u
        };
        let roots = complex_newton_roots(g, dg, &seed_grid(-2.0, 2.0, -2.0, 2.0, 21), 1e-12);
        assert_eq!(roots.len(), 6);
        let (r_in, r_out) = (0.5f64.powf(1.0 / 3.0), 1.5f64.powf(1.0 / 3.0));
        let inner = roots.iter().filter(|r| (r.norm() - r_in).abs() < 1e-8).count();
        let outer = roots.iter().filter(|r| (r.norm() - r_out).abs() < 1e-8).count();
        assert_eq!((inner, outer), (3, 3));
    }

    #[test]
    fn duplicate_seeds_yield_one_root() {
        let seeds = vec![Complex64::new(0.3, 0.8); 5];
        let roots = complex_newton_roots(|u| u * u + 1.0, |u| 2.0 * u, &seeds, 1e-12);
        assert_eq!(roots.len(), 1);
    }

    #[test]
    fn cosine_roots() {
        let roots = bracket_real_roots(f64::cos, 0.0, 10.0, 200);
        let expect = [PI / 2.0, 3.0 * PI / 2.0, 5.0 * PI / 2.0];
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(expect) {
            assert!((r - e).abs() < 1e-10, "{r} vs {e}");
        }
    }

    #[test]
    fn monotone_function_has_no_roots() {
        let roots = bracket_real_roots(|x| x.exp() + 1.0, -3.0, 3.0, 64);
        assert!(roots.is_empty());
    }

    #[test]
    fn golden_finds_parabola_vertex() {
        let x = golden_minimum(|x| (x - 1.3) * (x - 1.3), 0.0, 3.0, 1e-10);
        assert!((x - 1.3).abs() < 1e-8);
    }
}
