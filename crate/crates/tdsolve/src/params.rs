use serde::Serialize;

use crate::{Error, Result};

/// Relative tolerance used when deciding whether a parameter sits exactly on
/// a regime boundary (a = 1, b = a-2, t0 = |1-a|/2w). The boundary regimes
/// have different functional forms, so the resolution must be deterministic.
pub const CLASS_EPSILON: f64 = 1e-12;

/// Physical parameters of a system instance:
/// `H = (1/2)(t0/t)^a P^2 + (1/2) w^2 (t/t0)^b X^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    /// Kinetic power.
    pub a: f64,
    /// Potential power.
    pub b: f64,
    /// Frequency (1/time).
    pub omega: f64,
    /// Reference time, strictly positive.
    pub t_o: f64,
}

impl Params {
    pub fn new(a: f64, b: f64, omega: f64, t_o: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && omega.is_finite() && t_o.is_finite()) {
            return Err(Error::InvalidParams("a, b, omega, t_o must be finite".into()));
        }
        if t_o <= 0.0 {
            return Err(Error::InvalidParams(format!("t_o must be > 0, got {t_o}")));
        }
        if omega <= 0.0 {
            return Err(Error::InvalidParams(format!("omega must be > 0, got {omega}")));
        }
        Ok(Self { a, b, omega, t_o })
    }

    /// `b - a + 2`, the combination that controls the regime. Zero on the
    /// critical boundary; equals `b + 1` when `a = 1`.
    pub fn beta(&self) -> f64 {
        self.b - self.a + 2.0
    }

    /// True when `a` is (within classification tolerance) exactly 1.
    pub fn is_unit_a(&self) -> bool {
        rel_close(self.a, 1.0)
    }

    /// True when `a` is (within classification tolerance) exactly 0.
    pub fn is_zero_a(&self) -> bool {
        self.a.abs() <= CLASS_EPSILON
    }

    /// True on the critical boundary `b = a - 2`.
    pub fn is_critical(&self) -> bool {
        let scale = 1.0f64.max(self.b.abs()).max((self.a - 2.0).abs());
        self.beta().abs() <= CLASS_EPSILON * scale
    }

    /// True for the special constant-frequency systems `b = -a` (which
    /// include `{1;-1}`), where the TO equation is a plain oscillator.
    pub fn is_simple_oscillator(&self) -> bool {
        let scale = 1.0f64.max(self.a.abs()).max(self.b.abs());
        (self.a + self.b).abs() <= CLASS_EPSILON * scale
    }

    /// `Delta = sqrt(|1 - 4 w^2 t0^2 / (1-a)^2|)`, the critical-regime index.
    pub fn delta(&self) -> f64 {
        let r = 2.0 * self.omega * self.t_o / (1.0 - self.a);
        (1.0 - r * r).abs().sqrt()
    }

    /// Sign of `1 - a` as +-1.0 (critical subclass tag).
    pub fn sign_one_minus_a(&self) -> f64 {
        if 1.0 - self.a >= 0.0 {
            1.0
        } else {
            -1.0
        }
    }
}

pub(crate) fn rel_close(x: f64, y: f64) -> bool {
    (x - y).abs() <= CLASS_EPSILON * 1.0f64.max(x.abs()).max(y.abs())
}

/// Initial phase-space data plus squeeze parameters.
///
/// `r = 0` is a coherent state; `theta` is the squeeze phase entering through
/// `exp(-i theta)` in the uncertainty formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezeState {
    pub x_o: f64,
    pub p_o: f64,
    pub r: f64,
    pub theta: f64,
}

impl SqueezeState {
    pub fn new(x_o: f64, p_o: f64, r: f64, theta: f64) -> Result<Self> {
        if !(x_o.is_finite() && p_o.is_finite() && r.is_finite() && theta.is_finite()) {
            return Err(Error::InvalidParams("state fields must be finite".into()));
        }
        if r < 0.0 {
            return Err(Error::InvalidParams(format!("squeeze magnitude r must be >= 0, got {r}")));
        }
        Ok(Self { x_o, p_o, r, theta })
    }

    /// Coherent state centered at `(x_o, p_o)`.
    pub fn coherent(x_o: f64, p_o: f64) -> Self {
        Self { x_o, p_o, r: 0.0, theta: 0.0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_params() {
        assert!(Params::new(1.0, 0.0, 1.0, 0.0).is_err());
        assert!(Params::new(1.0, 0.0, 1.0, -2.0).is_err());
        assert!(Params::new(1.0, 0.0, 0.0, 1.0).is_err());
        assert!(Params::new(f64::NAN, 0.0, 1.0, 1.0).is_err());
        assert!(Params::new(3.0, 1.0, 2.0, 1.0).is_ok());
    }

    #[test]
    fn boundary_predicates() {
        let p = Params::new(1.0, -1.0, 2.0, 1.0).unwrap();
        assert!(p.is_unit_a());
        assert!(p.is_critical());
        assert!(p.is_simple_oscillator());

        let p = Params::new(3.0, 1.0, 2.0, 1.0).unwrap();
        assert!(!p.is_unit_a());
        assert!(p.is_critical());
        assert!(!p.is_simple_oscillator());

        // b = -a away from a = 1 is a simple oscillator but not critical
        let p = Params::new(0.5, -0.5, 1.0, 1.0).unwrap();
        assert!(p.is_simple_oscillator());
        assert!(!p.is_critical());
    }

    #[test]
    fn squeeze_state_validation() {
        assert!(SqueezeState::new(1.0, 1.0, -0.1, 0.0).is_err());
        assert!(SqueezeState::new(1.0, 1.0, 0.5, 1.0).is_ok());
    }
}
