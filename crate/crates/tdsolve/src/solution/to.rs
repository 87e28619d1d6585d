//! TO-picture mode functions, evaluated at the time offset `t' - t0'`.
//!
//! The mode function solves `d^2 xi/dt'^2 + 2 g2(t') xi = 0` with Wronskian
//! `-i`. Case 1 rows run on the exponential Bessel argument `sigma`, Case 2
//! rows on the power-law argument `tau` of the scaled time `v`; critical
//! rows become powers and logarithms of `v`.

use crate::params::Params;
use crate::solution::{self, PhiSet, Row, XiPair};
use crate::time_map;
use crate::{Error, Result};

/// Auxiliary regime variables at one offset. Fields that do not apply to the
/// regime are `None` (`sigma` exists only in Case 1, `tau`/`q` only in
/// non-critical Case 2, `delta` only on the critical boundary).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aux {
    /// Case-1 Bessel argument `sigma = (2 w t0/|b+1|) exp[(b+1)(t'-t0')/(2 t0)]`.
    pub sigma: Option<f64>,
    /// Its initial value `sigma_o = 2 w t0/|b+1|`.
    pub sigma_o: Option<f64>,
    /// Case-2 scaled time `v = 1 + (1-a)(t'-t0')/t0`.
    pub v: Option<f64>,
    /// Case-2 Bessel argument `tau = (2 w t0/|b-a+2|) v^(q/2)`.
    pub tau: Option<f64>,
    /// Its initial value `tau_o = 2 w t0/|b-a+2|`.
    pub tau_o: Option<f64>,
    /// `q = (b-a+2)/(1-a)`.
    pub q: Option<f64>,
    /// Critical index `Delta = sqrt(|1 - 4 w^2 t0^2/(1-a)^2|)`.
    pub delta: Option<f64>,
}

/// Compute the auxiliary variables for an offset.
pub fn aux(offset: f64, p: &Params) -> Result<Aux> {
    if !offset.is_finite() {
        return Err(Error::OutOfDomain("offset must be finite".into()));
    }
    let beta = p.beta();
    if p.is_unit_a() {
        let (sigma, sigma_o) = if p.is_critical() {
            (None, None)
        } else {
            let s_o = 2.0 * p.omega * p.t_o / beta.abs();
            (Some(s_o * (beta / (2.0 * p.t_o) * offset).exp()), Some(s_o))
        };
        Ok(Aux { sigma, sigma_o, v: None, tau: None, tau_o: None, q: None, delta: None })
    } else {
        let ln_v = time_map::ln_v_of_offset(offset, p)?;
        let v = time_map::v_of_offset(offset, p)?;
        if p.is_critical() {
            Ok(Aux {
                sigma: None,
                sigma_o: None,
                v: Some(v),
                tau: None,
                tau_o: None,
                q: None,
                delta: Some(p.delta()),
            })
        } else {
            let q = beta / (1.0 - p.a);
            let tau_o = 2.0 * p.omega * p.t_o / beta.abs();
            Ok(Aux {
                sigma: None,
                sigma_o: None,
                v: Some(v),
                tau: Some(tau_o * (0.5 * beta * (ln_v / (1.0 - p.a))).exp()),
                tau_o: Some(tau_o),
                q: Some(q),
                delta: None,
            })
        }
    }
}

/// Canonical row variables from an offset: `(root_v, half_ln_v, arg, phase)`.
/// Case-2 powers of `v` run through `ln_1p` so that near-unit `a` (huge
/// `q = beta/(1-a)` against `ln v -> 0`) keeps full precision.
fn canon(offset: f64, p: &Params) -> Result<(f64, f64, f64, f64)> {
    let phase = p.omega * offset;
    if p.is_unit_a() {
        let beta = p.beta();
        let arg = if p.is_critical() {
            0.0
        } else {
            2.0 * p.omega * p.t_o / beta.abs() * (beta / (2.0 * p.t_o) * offset).exp()
        };
        Ok((1.0, 0.0, arg, phase))
    } else {
        let ln_v = time_map::ln_v_of_offset(offset, p)?;
        let arg = if p.is_critical() {
            0.0
        } else {
            let q_half_ln_v = 0.5 * p.beta() * (ln_v / (1.0 - p.a));
            2.0 * p.omega * p.t_o / p.beta().abs() * q_half_ln_v.exp()
        };
        Ok(((0.5 * ln_v).exp(), 0.5 * ln_v, arg, phase))
    }
}

/// `xi(t')` and `d xi/dt'` at the offset.
pub fn xi(offset: f64, p: &Params) -> Result<XiPair> {
    let (root_v, half_ln_v, arg, phase) = canon(offset, p)?;
    match solution::resolve_row(p) {
        Row::Sho => Ok(solution::sho_pair(p, phase)),
        Row::Hankel { above } => solution::hankel_xi(p, above, arg, root_v),
        Row::Crit(sub) => Ok(solution::crit_xi(p, sub, root_v, half_ln_v)),
    }
}

/// `phi1`, `phi2`, `phi3` and the `phi3` derivatives at the offset.
pub fn phi(offset: f64, p: &Params) -> Result<PhiSet> {
    let (root_v, half_ln_v, arg, phase) = canon(offset, p)?;
    let (pair, triple) = match solution::resolve_row(p) {
        Row::Sho => (solution::sho_pair(p, phase), solution::sho_phi(p)),
        Row::Hankel { above } => (
            solution::hankel_xi(p, above, arg, root_v)?,
            solution::hankel_phi(p, above, arg, root_v)?,
        ),
        Row::Crit(sub) => (
            solution::crit_xi(p, sub, root_v, half_ln_v),
            solution::crit_phi(p, sub, root_v, half_ln_v),
        ),
    };
    debug_assert!((triple.0 - 2.0 * pair.xi.norm_sqr()).abs() <= 1e-9 * triple.0.abs().max(1.0));
    Ok(solution::phi_set(&pair, triple))
}

/// Initial values `(xi^o, xi_dot^o)` at offset zero.
pub fn xi_initial(p: &Params) -> Result<XiPair> {
    xi(0.0, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn p(a: f64, b: f64, omega: f64, t_o: f64) -> Params {
        Params::new(a, b, omega, t_o).unwrap()
    }

    #[test]
    fn aux_values() {
        // Case 1: sigma_o = 2 w t0/|b+1|
        let a1 = aux(0.0, &p(1.0, 1.0, 2.0, 1.0)).unwrap();
        assert_relative_eq!(a1.sigma_o.unwrap(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(a1.sigma.unwrap(), 2.0, max_relative = 1e-14);
        assert!(a1.v.is_none());

        // Case 2 at offset 0: v = 1, tau = tau_o
        let a2 = aux(0.0, &p(2.0, 1.0, 1.0, 1.0)).unwrap();
        assert_relative_eq!(a2.v.unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(a2.tau.unwrap(), a2.tau_o.unwrap(), max_relative = 1e-14);

        // worked Case-2 point
        let a3 = aux(2.0, &p(0.5, 0.5, 1.0, 1.0)).unwrap();
        assert_relative_eq!(a3.v.unwrap(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(a3.q.unwrap(), 4.0, max_relative = 1e-14);
        assert_relative_eq!(a3.tau.unwrap(), 4.0, max_relative = 1e-14);

        // critical: delta present, tau absent
        let a4 = aux(0.1, &p(3.0, 1.0, 2.0, 1.0)).unwrap();
        assert!(a4.delta.is_some());
        assert!(a4.tau.is_none());
    }

    #[test]
    fn sho_rows() {
        // {1;-1} at offset pi/(2w): xi = i sqrt(1/2w)
        let pr = p(1.0, -1.0, 2.0, 1.0);
        let off = PI / (2.0 * pr.omega);
        let pair = xi(off, &pr).unwrap();
        let expect = Complex64::new(0.0, (0.5 / pr.omega).sqrt());
        assert!((pair.xi - expect).norm() < 1e-14);

        let ps = phi(off, &pr).unwrap();
        assert_relative_eq!(ps.phi3, 1.0 / pr.omega, max_relative = 1e-14);
        assert_eq!(ps.phi3_dot, 0.0);
        assert_eq!(ps.phi3_ddot, 0.0);
    }

    #[test]
    fn hankel_row_explicit_value() {
        // {1;(-1,inf)}: xi = sqrt(pi t0/(2|b+1|)) H1_0(sigma)
        let pr = p(1.0, 1.0, 2.0, 1.0);
        for s in [0.0, 0.6, 1.4] {
            let sigma = 2.0 * pr.omega * pr.t_o / (pr.b + 1.0).abs()
                * ((pr.b + 1.0) / (2.0 * pr.t_o) * s).exp();
            let expect = (PI * pr.t_o / (2.0 * (pr.b + 1.0).abs())).sqrt()
                * crate::bessel::hankel1(0.0, sigma).unwrap();
            let got = xi(s, &pr).unwrap().xi;
            assert!((got - expect).norm() < 1e-12 * expect.norm());
        }
    }

    #[test]
    fn critical_row_value_against_rk4() {
        // T_GT row at a=0.5, w=2, t0=1: xi = sqrt(t0/(|1-a| Delta)) sqrt(v)
        // e^{i (Delta/2) ln v}, Delta = sqrt(63); cross-checked against RK4
        // from the row's own initial values
        let pr = p(0.5, -1.5, 2.0, 1.0);
        assert_relative_eq!(pr.delta(), 63.0f64.sqrt(), max_relative = 1e-14);
        let s = 1.0;
        let v = time_map::v_of_offset(s, &pr).unwrap();
        assert_relative_eq!(v, 1.5, max_relative = 1e-14);
        let delta = pr.delta();
        let expect = (pr.t_o / ((1.0 - pr.a).abs() * delta)).sqrt()
            * v.sqrt()
            * Complex64::from_polar(1.0, 0.5 * delta * v.ln());
        let got = xi(s, &pr).unwrap().xi;
        assert!((got - expect).norm() < 1e-13);

        let init = xi(0.0, &pr).unwrap();
        let cfg = crate::oracle::IntegratorConfig::default();
        let grid = [0.0, s];
        let re =
            crate::oracle::integrate_gamma(&pr, [init.xi.re, init.xi_dot.re], &grid, &cfg)
                .unwrap();
        let im =
            crate::oracle::integrate_gamma(&pr, [init.xi.im, init.xi_dot.im], &grid, &cfg)
                .unwrap();
        let rk = Complex64::new(re[1][0], im[1][0]);
        assert!((got - rk).norm() < 1e-7 * got.norm());
    }

    #[test]
    fn simple_oscillator_special_system_matches_hankel_row_up_to_phase() {
        // b = -a, a != 1: the half-order Hankel row equals the plain form up
        // to one fixed unit-modulus constant
        for pr in [p(0.5, -0.5, 1.3, 1.0), p(2.0, -2.0, 0.8, 1.2)] {
            let above = pr.beta() > 0.0;
            let ratio_at = |s: f64| {
                let (root_v, _, arg, _) = canon(s, &pr).unwrap();
                let hank = solution::hankel_xi(&pr, above, arg, root_v).unwrap();
                let plain = xi(s, &pr).unwrap();
                hank.xi / plain.xi
            };
            let r0 = ratio_at(0.0);
            assert_relative_eq!(r0.norm(), 1.0, max_relative = 1e-10);
            for s in offsets(&pr, &[0.2, 0.5, 0.8]) {
                let r = ratio_at(s);
                assert!((r - r0).norm() < 1e-9);
            }
        }
    }

    /// Offsets spread over the valid domain of the regime (bounded for a>1).
    fn offsets(pr: &Params, fracs: &[f64]) -> Vec<f64> {
        let span = if pr.a > 1.0 && !pr.is_unit_a() {
            0.9 * pr.t_o / (pr.a - 1.0)
        } else {
            3.0
        };
        fracs.iter().map(|f| f * span).collect()
    }

    #[test]
    fn wronskian_normalization() {
        let cases = [
            p(1.0, 1.0, 2.0, 1.0),
            p(1.0, -2.5, 1.5, 1.0),
            p(1.0, -1.0, 2.0, 1.0),
            p(0.5, 1.0, 1.0, 1.0),
            p(2.0, 1.0, 1.0, 1.0),
            p(0.5, -2.0, 1.0, 1.0),
            p(0.5, -1.5, 0.2, 1.0),
            p(0.5, -1.5, 0.25, 1.0),
            p(0.5, -1.5, 2.0, 1.0),
            p(1.25, -0.75, 0.05, 1.0),
            p(1.25, -0.75, 0.125, 1.0),
            p(1.25, -0.75, 2.0, 1.0),
        ];
        let minus_i = Complex64::new(0.0, -1.0);
        for pr in cases {
            for s in offsets(&pr, &[0.0, 0.1, 0.45, 0.9]) {
                let pair = xi(s, &pr).unwrap();
                assert!(
                    (pair.wronskian() - minus_i).norm() < 1e-10,
                    "wronskian off for a={} b={} w={} at s={s}: {:?}",
                    pr.a,
                    pr.b,
                    pr.omega,
                    pair.wronskian()
                );
            }
        }
    }

    #[test]
    fn xi_dot_matches_finite_difference() {
        let cases = [
            p(1.0, 1.0, 2.0, 1.0),
            p(1.0, -2.5, 1.5, 1.0),
            p(0.5, 1.0, 1.0, 1.0),
            p(2.0, 1.0, 1.0, 1.0),
            p(0.5, -1.5, 0.2, 1.0),
            p(0.5, -1.5, 0.25, 1.0),
            p(0.5, -1.5, 2.0, 1.0),
            p(1.25, -0.75, 2.0, 1.0),
        ];
        let h = 1e-6;
        for pr in cases {
            for s in offsets(&pr, &[0.05, 0.3, 0.7]) {
                let pair = xi(s, &pr).unwrap();
                let fd = (xi(s + h, &pr).unwrap().xi - xi(s - h, &pr).unwrap().xi) / (2.0 * h);
                let scale = pair.xi_dot.norm().max(1.0);
                assert!(
                    (pair.xi_dot - fd).norm() < 1e-6 * scale,
                    "xi_dot mismatch a={} b={} w={} s={s}",
                    pr.a,
                    pr.b,
                    pr.omega
                );
            }
        }
    }

    #[test]
    fn phi3_derivatives_match_finite_differences() {
        let cases = [
            p(1.0, 1.0, 2.0, 1.0),
            p(1.0, -2.5, 1.5, 1.0),
            p(0.5, 1.0, 1.0, 1.0),
            p(0.5, -2.0, 1.0, 1.0),
            p(0.5, -1.5, 0.2, 1.0),
            p(0.5, -1.5, 0.25, 1.0),
            p(0.5, -1.5, 2.0, 1.0),
            p(1.25, -0.75, 0.05, 1.0),
            p(1.25, -0.75, 0.125, 1.0),
            p(1.25, -0.75, 2.0, 1.0),
        ];
        let h = 1e-6;
        for pr in cases {
            for s in [0.2, 1.0, 2.5] {
                let ps = phi(s, &pr).unwrap();
                let plus = phi(s + h, &pr).unwrap();
                let minus = phi(s - h, &pr).unwrap();
                let fd1 = (plus.phi3 - minus.phi3) / (2.0 * h);
                let fd2 = (plus.phi3_dot - minus.phi3_dot) / (2.0 * h);
                assert_relative_eq!(ps.phi3_dot, fd1, max_relative = 1e-6, epsilon = 1e-8);
                assert_relative_eq!(ps.phi3_ddot, fd2, max_relative = 1e-6, epsilon = 1e-8);
                assert!(ps.phi3 > 0.0);
                assert_relative_eq!(ps.phi3, 2.0 * ps.phi1.norm(), max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn critical_phi_forms() {
        // T_GT: phi3 = 2 t0/(|1-a| Delta) v, phi3_ddot = 0
        let pr = p(0.5, -1.5, 2.0, 1.0);
        let s = 1.0;
        let v = time_map::v_of_offset(s, &pr).unwrap();
        let ps = phi(s, &pr).unwrap();
        let expect = 2.0 * pr.t_o / ((1.0 - pr.a).abs() * pr.delta()) * v;
        assert_relative_eq!(ps.phi3, expect, max_relative = 1e-12);
        assert_eq!(ps.phi3_ddot, 0.0);
    }

    #[test]
    fn solves_mode_equation() {
        // second central difference of xi + 2 g2 xi ~ 0
        let cases = [p(1.0, 1.0, 2.0, 1.0), p(0.5, -2.0, 1.0, 1.0), p(1.25, -0.75, 0.125, 1.0)];
        let h = 1e-4;
        for pr in cases {
            for s in [0.5, 1.5] {
                let f0 = xi(s, &pr).unwrap().xi;
                let fp = xi(s + h, &pr).unwrap().xi;
                let fm = xi(s - h, &pr).unwrap().xi;
                let second = (fp - 2.0 * f0 + fm) / (h * h);
                let g = time_map::g2(s, &pr).unwrap();
                let res = second + 2.0 * g * f0;
                // relative to the equation scale 2 g2 |xi|
                assert!(res.norm() < 1e-6 * (2.0 * g * f0.norm()).max(1.0));
            }
        }
    }

    #[test]
    fn endpoint_is_rejected() {
        let pr = p(3.0, 1.0, 2.0, 1.0);
        assert!(xi(0.49, &pr).is_ok());
        assert!(xi(0.51, &pr).is_err());
    }
}
