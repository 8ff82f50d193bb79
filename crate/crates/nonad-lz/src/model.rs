//! Decaying two-level Hamiltonian and its adiabatic frame.
//!
//! Everything is expressed in dimensionless form: energies in units of the
//! coupling Δ, time as u = v t / Δ. The Hamiltonian matrix is pinned to
//!
//! ```text
//! H(u)/Δ = [ w(u)/2      1/2              ]
//!          [ 1/2        -w(u)/2 - i*γ̃     ]
//! ```
//!
//! so that the adiabatic eigenvalues are E±(u) = ½[-iγ̃ ± √((w(u)+iγ̃)² + 1)]
//! and the eigenvector component ratios are α±(u) = -(w(u)+iγ̃) ± √((w(u)+iγ̃)² + 1),
//! with the principal square root (√x ≥ 0 for x ≥ 0). The upper diabatic level
//! at u → -∞ is the damped one.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Physical (dimensionful) parameters of the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Tunnelling matrix element Δ > 0 (energy).
    pub delta_coupling: f64,
    /// Sweep rate v > 0 (energy / time).
    pub sweep_rate: f64,
    /// Damping γ ≥ 0 of the upper level (energy).
    pub gamma: f64,
    /// Reduced Planck constant (action).
    pub hbar: f64,
}

impl PhysicalParams {
    pub fn new(delta_coupling: f64, sweep_rate: f64, gamma: f64, hbar: f64) -> Result<Self> {
        if !(delta_coupling > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "delta_coupling must be > 0, got {delta_coupling}"
            )));
        }
        if !(sweep_rate > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "sweep_rate must be > 0, got {sweep_rate}"
            )));
        }
        if !(gamma >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma must be >= 0, got {gamma}"
            )));
        }
        if !(hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("hbar must be > 0, got {hbar}")));
        }
        Ok(Self { delta_coupling, sweep_rate, gamma, hbar })
    }

    /// Dimensionless damping and adiabaticity: (γ̃, ε̃) = (γ/Δ, Δ²/(ħv)).
    pub fn dimensionless(&self) -> (f64, f64) {
        (
            self.gamma / self.delta_coupling,
            self.delta_coupling * self.delta_coupling / (self.hbar * self.sweep_rate),
        )
    }
}

/// Dimensionless bias sweep w(u), evaluatable at complex u.
///
/// Only crossing sweeps qualify: w(0) = 0 and w(u) → ±∞ as u → ±∞, which
/// restricts polynomials to zero constant term, odd degree and a positive
/// leading coefficient. Polynomial sweeps beyond pure powers are accepted but
/// considered experimental.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepProfile {
    /// w(u) = u.
    Linear,
    /// w(u) = u^n with n odd and positive.
    PowerLaw { exponent: u32 },
    /// w(u) = Σ_k coefficients[k] u^k (ascending powers, coefficients[0] = 0).
    Polynomial { coefficients: Vec<f64> },
}

impl SweepProfile {
    pub fn power_law(exponent: u32) -> Result<Self> {
        if exponent == 0 || exponent % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "power-law exponent must be odd and positive, got {exponent}"
            )));
        }
        Ok(if exponent == 1 { Self::Linear } else { Self::PowerLaw { exponent } })
    }

    pub fn polynomial(coefficients: Vec<f64>) -> Result<Self> {
        let degree = coefficients
            .iter()
            .rposition(|&c| c != 0.0)
            .ok_or_else(|| Error::InvalidParameter("zero polynomial is not a sweep".into()))?;
        if coefficients.first().copied().unwrap_or(0.0) != 0.0 {
            return Err(Error::InvalidParameter("crossing sweep requires w(0) = 0".into()));
        }
        if degree % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "crossing sweep requires odd degree, got {degree}"
            )));
        }
        if coefficients[degree] <= 0.0 {
            return Err(Error::InvalidParameter(
                "crossing sweep requires a positive leading coefficient".into(),
            ));
        }
        Ok(Self::Polynomial { coefficients })
    }

    /// Leading exponent n.
    pub fn degree(&self) -> u32 {
        match self {
            Self::Linear => 1,
            Self::PowerLaw { exponent } => *exponent,
            Self::Polynomial { coefficients } => {
                coefficients.iter().rposition(|&c| c != 0.0).unwrap_or(0) as u32
            }
        }
    }

    /// True for a pure power law w(u) = u^n (including the linear sweep).
    pub fn is_pure_power(&self) -> bool {
        !matches!(self, Self::Polynomial { .. })
    }

    /// Polynomial sweeps beyond pure powers are accepted but experimental.
    pub fn is_experimental(&self) -> bool {
        matches!(self, Self::Polynomial { .. })
    }

    pub fn value(&self, u: Complex64) -> Complex64 {
        match self {
            Self::Linear => u,
            Self::PowerLaw { exponent } => u.powu(*exponent),
            Self::Polynomial { coefficients } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for &c in coefficients.iter().rev() {
                    acc = acc * u + c;
                }
                acc
            }
        }
    }

    pub fn derivative(&self, u: Complex64) -> Complex64 {
        match self {
            Self::Linear => Complex64::new(1.0, 0.0),
            Self::PowerLaw { exponent } => f64::from(*exponent) * u.powu(exponent - 1),
            Self::Polynomial { coefficients } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &c) in coefficients.iter().enumerate().skip(1).rev() {
                    acc = acc * u + k as f64 * c;
                }
                acc
            }
        }
    }

    pub fn value_real(&self, u: f64) -> f64 {
        match self {
            Self::Linear => u,
            Self::PowerLaw { exponent } => u.powi(*exponent as i32),
            Self::Polynomial { coefficients } => {
                let mut acc = 0.0;
                for &c in coefficients.iter().rev() {
                    acc = acc * u + c;
                }
                acc
            }
        }
    }

    /// ∫₀ᵘ w(s) ds, used to factor the diabatic phases in the interaction picture.
    pub fn antiderivative_real(&self, u: f64) -> f64 {
        match self {
            Self::Linear => 0.5 * u * u,
            Self::PowerLaw { exponent } => {
                u.powi(*exponent as i32 + 1) / f64::from(exponent + 1)
            }
            Self::Polynomial { coefficients } => {
                let mut acc = 0.0;
                for (k, &c) in coefficients.iter().enumerate().rev() {
                    acc = acc * u + c / (k as f64 + 1.0);
                }
                acc * u
            }
        }
    }

    /// Smallest U > 0 with |w(U)| ≥ target and |w(-U)| ≥ target.
    ///
    /// Used for integration windows and quadrature cutoffs.
    pub fn cutoff_for(&self, target: f64) -> f64 {
        assert!(target > 0.0, "cutoff target must be positive");
        if let Self::Linear = self {
            return target;
        }
        if let Self::PowerLaw { exponent } = self {
            return target.powf(1.0 / f64::from(*exponent));
        }
        // Polynomial: expand until both tails clear the target, then bisect the
        // later crossing of min(|w(U)|, |w(-U)|).
        let both = |x: f64| self.value_real(x).abs().min(self.value_real(-x).abs());
        let mut hi = 1.0;
        while both(hi) < target {
            hi *= 2.0;
            if hi > 1e12 {
                return hi;
            }
        }
        let mut lo = 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if both(mid) >= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }
}

/// Immutable dimensionless model: sweep profile, damping γ̃ = γ/Δ and
/// adiabaticity ε̃ = Δ²/(ħv). The adiabatic small parameter is δ = 1/ε̃.
#[derive(Debug, Clone, PartialEq)]
pub struct TlsModel {
    sweep: SweepProfile,
    gamma_tilde: f64,
    epsilon_tilde: f64,
}

/// Eigenvalue branch selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl TlsModel {
    pub fn new(sweep: SweepProfile, gamma_tilde: f64, epsilon_tilde: f64) -> Result<Self> {
        if !(gamma_tilde >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma_tilde must be >= 0, got {gamma_tilde}"
            )));
        }
        if !(epsilon_tilde > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon_tilde must be > 0, got {epsilon_tilde}"
            )));
        }
        Ok(Self { sweep, gamma_tilde, epsilon_tilde })
    }

    /// Power-law sweep w(u) = u^n.
    pub fn power_law(exponent: u32, gamma_tilde: f64, epsilon_tilde: f64) -> Result<Self> {
        Self::new(SweepProfile::power_law(exponent)?, gamma_tilde, epsilon_tilde)
    }

    pub fn from_physical(p: &PhysicalParams, sweep: SweepProfile) -> Result<Self> {
        let (gamma_tilde, epsilon_tilde) = p.dimensionless();
        Self::new(sweep, gamma_tilde, epsilon_tilde)
    }

    pub fn sweep(&self) -> &SweepProfile {
        &self.sweep
    }

    pub fn gamma_tilde(&self) -> f64 {
        self.gamma_tilde
    }

    pub fn epsilon_tilde(&self) -> f64 {
        self.epsilon_tilde
    }

    /// Adiabatic small parameter δ = 1/ε̃.
    pub fn delta(&self) -> f64 {
        1.0 / self.epsilon_tilde
    }

    /// ζ(u) = w(u) + iγ̃, the variable every closed form is written in.
    pub fn zeta(&self, u: Complex64) -> Complex64 {
        self.sweep.value(u) + Complex64::new(0.0, self.gamma_tilde)
    }

    /// Principal branch of √(ζ(u)² + 1) = E₊(u) - E₋(u).
    pub fn discriminant_sqrt(&self, u: Complex64) -> Complex64 {
        let z = self.zeta(u);
        (z * z + 1.0).sqrt()
    }

    /// Hamiltonian matrix H(u)/Δ.
    pub fn matrix_at(&self, u: Complex64) -> HamiltonianMatrix {
        let w = self.sweep.value(u);
        let half = Complex64::new(0.5, 0.0);
        HamiltonianMatrix {
            h11: 0.5 * w,
            h12: half,
            h21: half,
            h22: -0.5 * w - Complex64::new(0.0, self.gamma_tilde),
        }
    }

    /// Adiabatic eigenvalues E±(u) = ½[-iγ̃ ± √(ζ² + 1)], principal branch.
    pub fn adiabatic_eigen(&self, u: Complex64) -> (Complex64, Complex64) {
        let s = self.discriminant_sqrt(u);
        let t = Complex64::new(0.0, -self.gamma_tilde);
        (0.5 * (t + s), 0.5 * (t - s))
    }

    /// Component ratios α±(u) = -ζ ± √(ζ² + 1). Their product is -1.
    pub fn alpha_pm(&self, u: Complex64) -> (Complex64, Complex64) {
        let z = self.zeta(u);
        let s = (z * z + 1.0).sqrt();
        (-z + s, -z - s)
    }

    /// Eigenvalues, ratios and the sample point bundled together.
    pub fn adiabatic_frame(&self, u: Complex64) -> AdiabaticFrame {
        let (e_plus, e_minus) = self.adiabatic_eigen(u);
        let (alpha_plus, alpha_minus) = self.alpha_pm(u);
        AdiabaticFrame { u, e_plus, e_minus, alpha_plus, alpha_minus }
    }

    /// Three-term large-|w| expansion of E±(u) at real u, valid for |w(u)| ≥ 10.
    ///
    /// On the side where the branch behaves like +w/2 the expansion is
    /// ½[w + 1/(2w) - iγ̃/(2w²)]; on the other side ½[-w - 2iγ̃ - 1/(2w)].
    /// The relative deviation from `adiabatic_eigen` is O(w⁻³).
    pub fn tail_expansion(&self, u: f64, branch: Branch) -> Result<Complex64> {
        let w = self.sweep.value_real(u);
        if w.abs() < 10.0 {
            return Err(Error::OutOfDomain(format!(
                "tail expansion requires |w(u)| >= 10, got |w| = {}",
                w.abs()
            )));
        }
        // Branch::Plus concides with +w/2 where w > 0, Branch::Minus where w < 0.
        let outer = matches!(branch, Branch::Plus) == (w > 0.0);
        let g = self.gamma_tilde;
        let e = if outer {
            Complex64::new(0.5 * (w + 0.5 / w), -0.25 * g / (w * w))
        } else {
            Complex64::new(0.5 * (-w - 0.5 / w), -g)
        };
        Ok(e)
    }
}

/// 2x2 Hamiltonian matrix in units of Δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianMatrix {
    pub h11: Complex64,
    pub h12: Complex64,
    pub h21: Complex64,
    pub h22: Complex64,
}

impl HamiltonianMatrix {
    pub fn trace(&self) -> Complex64 {
        self.h11 + self.h22
    }

    pub fn det(&self) -> Complex64 {
        self.h11 * self.h22 - self.h12 * self.h21
    }

    /// General eigenvalues from trace and determinant:
    /// E± = ½[T ± √(T² - 4D)], principal branch.
    pub fn eigenvalues(&self) -> (Complex64, Complex64) {
        let t = self.trace();
        let s = (t * t - 4.0 * self.det()).sqrt();
        (0.5 * (t + s), 0.5 * (t - s))
    }

    /// General component ratios α± = [-h11 + h22 ± √(T² - 4D)] / (2 h12).
    pub fn component_ratios(&self) -> Result<(Complex64, Complex64)> {
        if self.h12.norm() == 0.0 {
            return Err(Error::DegenerateModel);
        }
        let t = self.trace();
        let s = (t * t - 4.0 * self.det()).sqrt();
        let d = -self.h11 + self.h22;
        let denom = 2.0 * self.h12;
        Ok(((d + s) / denom, (d - s) / denom))
    }
}

/// Adiabatic data at one (possibly complex) sample point.
#[derive(Debug, Clone, Copy)]
pub struct AdiabaticFrame {
    pub u: Complex64,
    pub e_plus: Complex64,
    pub e_minus: Complex64,
    pub alpha_plus: Complex64,
    pub alpha_minus: Complex64,
}

impl AdiabaticFrame {
    /// Residual of the eigenproblem, (h11 - E) + h12 α, for both branches.
    pub fn eigen_residuals(&self, h: &HamiltonianMatrix) -> (Complex64, Complex64) {
        (
            h.h11 - self.e_plus + h.h12 * self.alpha_plus,
            h.h11 - self.e_minus + h.h12 * self.alpha_minus,
        )
    }
}
