//! TM-picture mode functions `xi_hat(t)`, evaluated directly in the TM time
//! (not by numerically composing the TO forms with `t'(t)`, which would
//! stack inverse-map error; the composition identity is checked in tests).
//!
//! The hatted dot is still the TO-time derivative carried to `t`:
//! `xi_hat_dot(t) = (d xi/dt')(t'(t))`, so `d xi_hat/dt = e^{-2 nu} xi_hat_dot`.

use crate::params::Params;
use crate::solution::{self, PhiSet, Row, XiPair};
use crate::{Error, Result};

/// Canonical row variables from the TM time: `(root_v, chi, arg, phase)`
/// with `root_v = (t/t0)^((1-a)/2)`, `chi = (1/2)(1-a) ln(t/t0)`, the Bessel
/// argument `tau = (2 w t0/|b-a+2|)(t/t0)^((b-a+2)/2)` and the oscillator
/// phase `w (t'(t) - t0')`.
fn canon(t: f64, p: &Params) -> Result<(f64, f64, f64, f64)> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::OutOfDomain(format!("t must be > 0, got {t}")));
    }
    let ratio = t / p.t_o;
    let beta = p.beta();
    let (root_v, chi) = if p.is_unit_a() {
        (1.0, 0.0)
    } else {
        (ratio.powf(0.5 * (1.0 - p.a)), 0.5 * (1.0 - p.a) * ratio.ln())
    };
    let arg = if p.is_critical() {
        0.0
    } else {
        2.0 * p.omega * p.t_o / beta.abs() * ratio.powf(0.5 * beta)
    };
    let phase = if p.is_unit_a() {
        p.omega * p.t_o * ratio.ln()
    } else {
        // exp_m1 keeps precision when a is merely close to 1
        p.omega * p.t_o / (1.0 - p.a) * ((1.0 - p.a) * ratio.ln()).exp_m1()
    };
    Ok((root_v, chi, arg, phase))
}

/// `xi_hat(t)` and `xi_hat_dot(t)`.
pub fn xi(t: f64, p: &Params) -> Result<XiPair> {
    if p.is_zero_a() {
        return Err(Error::IdentityMap);
    }
    let (root_v, chi, arg, phase) = canon(t, p)?;
    match solution::resolve_row(p) {
        Row::Sho => Ok(solution::sho_pair(p, phase)),
        Row::Hankel { above } => solution::hankel_xi(p, above, arg, root_v),
        Row::Crit(sub) => Ok(solution::crit_xi(p, sub, root_v, chi)),
    }
}

/// `phi3_hat(t)` and its first two TO-time derivatives.
pub fn phi(t: f64, p: &Params) -> Result<PhiSet> {
    if p.is_zero_a() {
        return Err(Error::IdentityMap);
    }
    let (root_v, chi, arg, phase) = canon(t, p)?;
    let (pair, triple) = match solution::resolve_row(p) {
        Row::Sho => (solution::sho_pair(p, phase), solution::sho_phi(p)),
        Row::Hankel { above } => (
            solution::hankel_xi(p, above, arg, root_v)?,
            solution::hankel_phi(p, above, arg, root_v)?,
        ),
        Row::Crit(sub) => (
            solution::crit_xi(p, sub, root_v, chi),
            solution::crit_phi(p, sub, root_v, chi),
        ),
    };
    debug_assert!((triple.0 - 2.0 * pair.xi.norm_sqr()).abs() <= 1e-9 * triple.0.abs().max(1.0));
    Ok(solution::phi_set(&pair, triple))
}

/// Initial values at `t = t0`.
pub fn xi_initial(p: &Params) -> Result<XiPair> {
    xi(p.t_o, p)
}
