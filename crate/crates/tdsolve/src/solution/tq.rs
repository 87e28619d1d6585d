//! TQ-picture functions: the mode pair `Xi_P = xi_hat e^{nu}`,
//! `Xi_X = xi_hat_dot e^{-nu}` and the symmetry coefficients over
//! `{T, D, X^2}`.
//!
//! The dressed pair keeps the pointwise pseudo-Wronskian
//! `Xi_P conj(Xi_X) - Xi_X conj(Xi_P) = -i`. (Both candidate dressings
//! `xi_hat e^{-nu}` and `xi_hat_dot e^{-nu}` for `Xi_X` are distinguished by
//! a verify-suite check; only the derivative-based one reproduces the
//! closed-form rows and closes the symmetry algebra.)

use crate::params::Params;
use crate::solution::{tm, XiPair};
use crate::time_map;
use crate::Result;

/// Coefficients of the TQ `M` generator over `{T, D, X^2}`, all real. The
/// operator is assembled as `C_T T - C_D D + C_X2 X^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TqCoeffs {
    pub c_t: f64,
    pub c_d: f64,
    pub c_x2: f64,
}

/// `(Xi_P, Xi_X)` at time `t`, returned as a [`XiPair`] with
/// `xi = Xi_P` and `xi_dot = Xi_X`.
pub fn xi(t: f64, p: &Params) -> Result<XiPair> {
    let pair = tm::xi(t, p)?;
    let env = time_map::nu(t, p)?.exp();
    Ok(XiPair { xi: pair.xi * env, xi_dot: pair.xi_dot / env })
}

/// The symmetry coefficients `C_T = phi3_hat e^{2 nu}`,
/// `C_D = (a/2t) C_T + (1/2) phi3_hat_dot`, `C_X2 = (1/4) phi3_hat_ddot e^{-2 nu}`.
pub fn coeffs(t: f64, p: &Params) -> Result<TqCoeffs> {
    let ps = tm::phi(t, p)?;
    let e2nu = (2.0 * time_map::nu(t, p)?).exp();
    let c_t = ps.phi3 * e2nu;
    let c_d = 0.5 * p.a / t * c_t + 0.5 * ps.phi3_dot;
    let c_x2 = 0.25 * ps.phi3_ddot / e2nu;
    Ok(TqCoeffs { c_t, c_d, c_x2 })
}

/// Initial values at `t = t0` (where `nu = 0`, so they equal the TM pair).
pub fn xi_initial(p: &Params) -> Result<XiPair> {
    xi(p.t_o, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel;
    use approx::assert_relative_eq;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn p(a: f64, b: f64, omega: f64, t_o: f64) -> Params {
        Params::new(a, b, omega, t_o).unwrap()
    }

    #[test]
    fn reference_time_values() {
        // {1;-1} at t = t0: Xi_P = sqrt(1/2w), Xi_X = i w sqrt(1/2w)
        let pr = p(1.0, -1.0, 2.0, 1.0);
        let pair = xi(pr.t_o, &pr).unwrap();
        let amp = (0.5 / pr.omega).sqrt();
        assert!((pair.xi - Complex64::new(amp, 0.0)).norm() < 1e-15);
        assert!((pair.xi_dot - Complex64::new(0.0, pr.omega * amp)).norm() < 1e-15);
    }

    #[test]
    fn dressing_relations() {
        // Xi_P = xi_hat e^nu and Xi_X = xi_hat_dot e^-nu across regimes
        for pr in [
            p(1.0, 1.0, 2.0, 1.0),
            p(2.0, 1.0, 1.0, 1.0),
            p(0.5, -2.0, 1.0, 1.0),
            p(3.0, 1.0, 2.0, 1.0),
            p(1.25, -0.75, 0.125, 1.0),
        ] {
            for t in [1.0, 1.6, 2.9] {
                let tq = xi(t, &pr).unwrap();
                let tm_pair = tm::xi(t, &pr).unwrap();
                let env = time_map::nu(t, &pr).unwrap().exp();
                assert!((tq.xi - tm_pair.xi * env).norm() < 1e-13 * tq.xi.norm().max(1.0));
                assert!(
                    (tq.xi_dot - tm_pair.xi_dot / env).norm() < 1e-13 * tq.xi_dot.norm().max(1.0)
                );
                // pointwise pseudo-Wronskian
                assert!((tq.wronskian() - Complex64::new(0.0, -1.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn rejected_dressing_is_distinguished() {
        // the competing candidate Xi_X = xi_hat e^{-nu} (instead of the
        // derivative-based dressing) differs grossly away from t0 and does
        // not keep the pseudo-Wronskian; this pins which identity the row
        // forms actually satisfy
        let pr = p(2.0, 1.0, 1.0, 1.0);
        let t = 2.5;
        let tq_pair = xi(t, &pr).unwrap();
        let tm_pair = tm::xi(t, &pr).unwrap();
        let env = time_map::nu(t, &pr).unwrap().exp();
        let adopted = (tq_pair.xi_dot - tm_pair.xi_dot / env).norm();
        let rejected = (tq_pair.xi_dot - tm_pair.xi / env).norm();
        assert!(adopted < 1e-12);
        assert!(rejected > 0.1, "candidates indistinguishable: {rejected}");
    }

    #[test]
    fn hankel_row_explicit_value() {
        // a=2, b=1, w=1, t0=1, t=2: Xi_P = sqrt(pi/2) 2^{1/2} H1_{-1}(2 sqrt 2)
        let pr = p(2.0, 1.0, 1.0, 1.0);
        let pair = xi(2.0, &pr).unwrap();
        let tau = 2.0 * 2.0f64.sqrt();
        let expect =
            (PI / 2.0).sqrt() * 2.0f64.sqrt() * bessel::hankel1(-1.0, tau).unwrap();
        assert!((pair.xi - expect).norm() < 1e-12 * expect.norm());
    }

    #[test]
    fn special_system_coeffs() {
        // b = -a: C_T = (1/w)(t/t0)^a, C_D = (a/(2 w t0))(t/t0)^(a-1), C_X2 = 0
        let pr = p(2.0, -2.0, 1.5, 1.0);
        for t in [1.0, 1.7, 3.2] {
            let c = coeffs(t, &pr).unwrap();
            let ratio = t / pr.t_o;
            assert_relative_eq!(c.c_t, ratio.powf(pr.a) / pr.omega, max_relative = 1e-12);
            assert_relative_eq!(
                c.c_d,
                0.5 * pr.a / (pr.omega * pr.t_o) * ratio.powf(pr.a - 1.0),
                max_relative = 1e-12
            );
            assert_eq!(c.c_x2, 0.0);
        }
    }

    #[test]
    fn unit_a_critical_coeffs() {
        // {1;-1}: C_T = (1/w)(t/t0), C_D = 1/(2 w t0) at all t, C_X2 = 0
        let pr = p(1.0, -1.0, 2.0, 1.0);
        let c0 = coeffs(pr.t_o, &pr).unwrap();
        assert_relative_eq!(c0.c_t, 1.0 / pr.omega, max_relative = 1e-14);
        assert_relative_eq!(c0.c_d, 1.0 / (2.0 * pr.omega * pr.t_o), max_relative = 1e-14);
        assert_eq!(c0.c_x2, 0.0);
        let c1 = coeffs(3.0, &pr).unwrap();
        assert_relative_eq!(c1.c_t, 3.0 / pr.omega, max_relative = 1e-13);
        assert_relative_eq!(c1.c_d, c0.c_d, max_relative = 1e-13);
    }

    #[test]
    fn noncritical_row_forms() {
        // {!=0;(a-2,inf)}: C_T = (pi t0/|b-a+2|)(t/t0) |H1_{1/q}(tau)|^2 and
        // C_X2 = (pi |b-a+2|/(8 t0))(t0/t) tau^2 (|H1_{1/q-1}|^2 - |H1_{1/q}|^2)
        let pr = p(2.0, 1.0, 1.0, 1.0);
        let t = 1.9;
        let c = coeffs(t, &pr).unwrap();
        let beta = pr.beta();
        let tau = 2.0 * pr.omega * pr.t_o / beta.abs() * (t / pr.t_o).powf(0.5 * beta);
        let q_inv = (1.0 - pr.a) / beta;
        let h = bessel::hankel1(q_inv, tau).unwrap();
        let hm = bessel::hankel1(q_inv - 1.0, tau).unwrap();
        let expect_t = PI * pr.t_o / beta.abs() * (t / pr.t_o) * h.norm_sqr();
        assert_relative_eq!(c.c_t, expect_t, max_relative = 1e-11);
        let expect_x2 = PI * beta.abs() / (8.0 * pr.t_o) * (pr.t_o / t) * tau * tau
            * (hm.norm_sqr() - h.norm_sqr());
        assert_relative_eq!(c.c_x2, expect_x2, max_relative = 1e-11);
    }

    #[test]
    fn c_t_is_phi3_with_envelope() {
        for pr in [p(2.0, 1.0, 1.0, 1.0), p(0.5, -2.0, 1.0, 1.0), p(1.0, 1.0, 2.0, 1.0)] {
            for t in [1.2, 2.6] {
                let c = coeffs(t, &pr).unwrap();
                let ps = tm::phi(t, &pr).unwrap();
                let e2nu = (t / pr.t_o).powf(pr.a);
                assert_relative_eq!(c.c_t, ps.phi3 * e2nu, max_relative = 1e-12);
            }
        }
    }
}
