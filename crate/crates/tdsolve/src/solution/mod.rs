//! Closed-form mode functions for the three pictures.
//!
//! Each regime row is one functional form for the complex mode function and
//! its derivative, plus the real bilinear `phi3 = 2 xi conj(xi)` with two
//! derivatives. The TO and TM pictures share the same row algebra evaluated
//! on different canonical variables (`sqrt(v)`, `(1/2) ln v` and the Bessel
//! argument are computed from the offset `t' - t0'` for TO and directly from
//! `t` for TM); the TQ functions are the TM ones dressed with `exp(+-nu)`.
//!
//! All rows are normalized to the Wronskian
//! `xi conj(xi_dot) - xi_dot conj(xi) = -i`, where the dot is always the
//! TO-time derivative `d/dt'` (for the TM pair this makes the Wronskian a
//! pointwise identity, with `dt'/dt = (t0/t)^a` absorbed by the caller when
//! a true `d/dt` is needed).

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::bessel;
use crate::params::Params;
use crate::regime::Subclass;
use crate::Result;

pub mod tm;
pub mod to;
pub mod tq;

/// A complex mode function and its TO-time derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiPair {
    pub xi: Complex64,
    pub xi_dot: Complex64,
}

impl XiPair {
    /// `xi conj(xi_dot) - xi_dot conj(xi)`; equals `-i` for every row.
    pub fn wronskian(&self) -> Complex64 {
        self.xi * self.xi_dot.conj() - self.xi_dot * self.xi.conj()
    }
}

/// The bilinears `phi1 = xi^2`, `phi2 = conj(xi)^2`, `phi3 = 2 xi conj(xi)`
/// with the first two TO-time derivatives of `phi3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiSet {
    pub phi1: Complex64,
    pub phi2: Complex64,
    pub phi3: f64,
    pub phi3_dot: f64,
    pub phi3_ddot: f64,
}

/// Which closed-form row applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Row {
    /// `b = -a` (includes `{1;-1}`): plain oscillator of frequency `w`.
    Sho,
    /// Non-critical Hankel rows; `above` distinguishes `b > a-2` from `b < a-2`.
    Hankel { above: bool },
    /// Critical rows `b = a-2`, keyed by the `t0` vs `|1-a|/(2w)` subclass.
    Crit(Subclass),
}

/// Resolve the row for a parameter tuple. The special systems `b = -a` take
/// the simple-oscillator form even though they also sit inside the Hankel
/// classes (the half-order Hankel row equals it up to a unit-modulus
/// constant; the plain form is the preferred normalization).
pub(crate) fn resolve_row(p: &Params) -> Row {
    if p.is_simple_oscillator() {
        Row::Sho
    } else if p.is_critical() {
        let threshold = (1.0 - p.a).abs() / (2.0 * p.omega);
        let s = 1.0f64.max(p.t_o).max(threshold);
        if (p.t_o - threshold).abs() <= crate::params::CLASS_EPSILON * s {
            Row::Crit(Subclass::TEq)
        } else if p.t_o < threshold {
            Row::Crit(Subclass::TLt)
        } else {
            Row::Crit(Subclass::TGt)
        }
    } else {
        Row::Hankel { above: p.beta() > 0.0 }
    }
}

/// Hankel order `1/q = (1-a)/(b-a+2)`; zero in Case 1.
pub(crate) fn inv_q(p: &Params) -> f64 {
    if p.is_unit_a() {
        0.0
    } else {
        (1.0 - p.a) / p.beta()
    }
}

pub(crate) fn sho_pair(p: &Params, phase: f64) -> XiPair {
    let amp = (0.5 / p.omega).sqrt();
    let xi = Complex64::from_polar(amp, phase);
    XiPair { xi, xi_dot: Complex64::new(0.0, p.omega) * xi }
}

pub(crate) fn sho_phi(p: &Params) -> (f64, f64, f64) {
    (1.0 / p.omega, 0.0, 0.0)
}

pub(crate) fn hankel_xi(p: &Params, above: bool, arg: f64, root_v: f64) -> Result<XiPair> {
    let beta_abs = p.beta().abs();
    let order = inv_q(p);
    let h = bessel::hankel1(order, arg)?;
    let hm = bessel::hankel1(order - 1.0, arg)?;
    let c_xi = (PI * p.t_o / (2.0 * beta_abs)).sqrt() * root_v;
    let c_dot = 0.5 * (PI * beta_abs / (2.0 * p.t_o)).sqrt() * arg / root_v;
    Ok(if above {
        XiPair { xi: c_xi * h, xi_dot: c_dot * hm }
    } else {
        XiPair { xi: c_xi * h.conj(), xi_dot: -c_dot * hm.conj() }
    })
}

pub(crate) fn hankel_phi(
    p: &Params,
    above: bool,
    arg: f64,
    root_v: f64,
) -> Result<(f64, f64, f64)> {
    let beta_abs = p.beta().abs();
    let order = inv_q(p);
    let h = bessel::hankel1(order, arg)?;
    let hm = bessel::hankel1(order - 1.0, arg)?;
    let sign = if above { 1.0 } else { -1.0 };
    let v = root_v * root_v;
    let phi3 = PI * p.t_o / beta_abs * v * h.norm_sqr();
    let phi3_dot = sign * PI * arg * (hm * h.conj()).re;
    let phi3_ddot = PI * beta_abs / (2.0 * p.t_o) * arg * arg / v * (hm.norm_sqr() - h.norm_sqr());
    Ok((phi3, phi3_dot, phi3_ddot))
}

pub(crate) fn crit_xi(p: &Params, sub: Subclass, root_v: f64, half_ln_v: f64) -> XiPair {
    let am = (1.0 - p.a).abs();
    let sign = p.sign_one_minus_a();
    let delta = p.delta();
    let i = Complex64::new(0.0, 1.0);
    match sub {
        Subclass::TLt => {
            let u = delta * half_ln_v;
            let (em, ep) = ((-u).exp(), u.exp());
            let xi = (p.t_o / (2.0 * am * delta)).sqrt()
                * root_v
                * (Complex64::new(em, 0.0) + sign * i * ep);
            let xi_dot = 0.5 * (am / (2.0 * p.t_o * delta)).sqrt() / root_v
                * Complex64::new(sign * (1.0 - delta) * em, (1.0 + delta) * ep);
            XiPair { xi, xi_dot }
        }
        Subclass::TEq => {
            let l = 2.0 * half_ln_v;
            let xi = (p.t_o / (2.0 * am)).sqrt() * root_v * Complex64::new(1.0, sign * l);
            let xi_dot = (am / (2.0 * p.t_o)).sqrt() / root_v
                * Complex64::new(sign * 0.5, 1.0 + 0.5 * l);
            XiPair { xi, xi_dot }
        }
        Subclass::TGt => {
            let rot = Complex64::from_polar(1.0, sign * delta * half_ln_v);
            let xi = (p.t_o / (am * delta)).sqrt() * root_v * rot;
            let xi_dot = 0.5 * (am / (p.t_o * delta)).sqrt() / root_v
                * Complex64::new(sign, delta)
                * rot;
            XiPair { xi, xi_dot }
        }
    }
}

pub(crate) fn crit_phi(p: &Params, sub: Subclass, root_v: f64, half_ln_v: f64) -> (f64, f64, f64) {
    let am = (1.0 - p.a).abs();
    let sign = p.sign_one_minus_a();
    let delta = p.delta();
    let v = root_v * root_v;
    match sub {
        Subclass::TLt => {
            let u = 2.0 * delta * half_ln_v;
            let (em, ep) = ((-u).exp(), u.exp());
            (
                p.t_o / (am * delta) * v * (em + ep),
                sign / delta * ((1.0 - delta) * em + (1.0 + delta) * ep),
                am / p.t_o / v * (-(1.0 - delta) * em + (1.0 + delta) * ep),
            )
        }
        Subclass::TEq => {
            let l = 2.0 * half_ln_v;
            (
                p.t_o / am * v * (1.0 + l * l),
                sign * (1.0 + l) * (1.0 + l),
                2.0 * am / p.t_o / v * (1.0 + l),
            )
        }
        Subclass::TGt => (2.0 * p.t_o / (am * delta) * v, sign * 2.0 / delta, 0.0),
    }
}

/// Assemble a full [`PhiSet`] from a mode pair and the `phi3` triple.
pub(crate) fn phi_set(pair: &XiPair, triple: (f64, f64, f64)) -> PhiSet {
    let phi1 = pair.xi * pair.xi;
    PhiSet {
        phi1,
        phi2: phi1.conj(),
        phi3: triple.0,
        phi3_dot: triple.1,
        phi3_ddot: triple.2,
    }
}
