//! Expectation values, squeezed-state uncertainties, and phase-space traces.
//!
//! Every closed-form `<x>`/`<p>` row is the same bilinear in the initial
//! data: with the picture's mode pair `(m(t), md(t))` and its initial values
//! `(m0, md0)` (Wronskian `m0 conj(md0) - md0 conj(m0) = -i`),
//!
//! ```text
//!     <x>(t) = x0 * (-2 Im[conj(md0) m(t)]) + p0 * 2 Im[conj(m0) m(t)]
//!     <p>(t) = x0 * (-2 Im[conj(md0) md(t)]) + p0 * 2 Im[conj(m0) md(t)]
//! ```
//!
//! which is the classical trajectory through `(x0, p0)` at the reference
//! time. Squeezed-state uncertainties come from the same pair:
//!
//! ```text
//!     (dx)^2 = |m|^2 cosh 2r + Re[m^2 e^{-i theta}] sinh 2r
//!     (dp)^2 = |md|^2 cosh 2r + Re[md^2 e^{-i theta}] sinh 2r
//! ```
//!
//! For `r = 0` these reduce to `|m|^2`, `|md|^2` (coherent state), and the
//! product obeys the exact identity
//! `(dx)^2 (dp)^2 = 1/4 {1 + [2 Re(m conj(md)) cosh 2r + 2 Re(m md e^{-i theta}) sinh 2r]^2}`,
//! so it is bounded below by 1/4. Units: hbar = 1.

use num_complex::Complex64;
use serde::Serialize;

use crate::params::{Params, SqueezeState};
use crate::regime::Picture;
use crate::solution::{tm, to, tq, XiPair};
use crate::Result;

/// One point of a phase-space trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    /// The picture's time variable (`t' - t0'` for TO, `t` for TM/TQ).
    pub t: f64,
    pub x: f64,
    pub p: f64,
    pub dx: f64,
    pub dp: f64,
    pub product: f64,
}

/// Variances and their product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uncertainties {
    pub dx2: f64,
    pub dp2: f64,
    pub product: f64,
}

/// The picture's mode pair at the given time (`t' - t0'` offset for TO,
/// `t` for TM and TQ; the TQ pair is `(Xi_P, Xi_X)`).
pub fn mode_pair(picture: Picture, p: &Params, time: f64) -> Result<XiPair> {
    match picture {
        Picture::To => to::xi(time, p),
        Picture::Tm => tm::xi(time, p),
        Picture::Tq => tq::xi(time, p),
    }
}

/// The pair at the reference time (offset 0 / `t = t0`).
pub fn initial_pair(picture: Picture, p: &Params) -> Result<XiPair> {
    match picture {
        Picture::To => to::xi_initial(p),
        Picture::Tm => tm::xi_initial(p),
        Picture::Tq => tq::xi_initial(p),
    }
}

/// `(f_x, f_p)` such that `<x> = x0 f_x + p0 f_p` for the value `m(t)`
/// (pass `md(t)` instead to obtain the `<p>` coefficients).
fn coefficients(init: &XiPair, m: Complex64) -> (f64, f64) {
    (-2.0 * (init.xi_dot.conj() * m).im, 2.0 * (init.xi.conj() * m).im)
}

/// `<x>` at one time.
pub fn expval_x(picture: Picture, p: &Params, state: &SqueezeState, time: f64) -> Result<f64> {
    let init = initial_pair(picture, p)?;
    let pair = mode_pair(picture, p, time)?;
    let (fx, fp) = coefficients(&init, pair.xi);
    Ok(state.x_o * fx + state.p_o * fp)
}

/// `<p>` at one time.
pub fn expval_p(picture: Picture, p: &Params, state: &SqueezeState, time: f64) -> Result<f64> {
    let init = initial_pair(picture, p)?;
    let pair = mode_pair(picture, p, time)?;
    let (fx, fp) = coefficients(&init, pair.xi_dot);
    Ok(state.x_o * fx + state.p_o * fp)
}

fn variance(m: Complex64, r: f64, theta: f64) -> f64 {
    let ch = (2.0 * r).cosh();
    let sh = (2.0 * r).sinh();
    m.norm_sqr() * ch + (m * m * Complex64::from_polar(1.0, -theta)).re * sh
}

/// Squeezed-state variances `(dx)^2`, `(dp)^2` and their product.
pub fn uncertainties(
    picture: Picture,
    p: &Params,
    state: &SqueezeState,
    time: f64,
) -> Result<Uncertainties> {
    let pair = mode_pair(picture, p, time)?;
    let dx2 = variance(pair.xi, state.r, state.theta);
    let dp2 = variance(pair.xi_dot, state.r, state.theta);
    Ok(Uncertainties { dx2, dp2, product: dx2 * dp2 })
}

/// Evaluate `<x>`, `<p>`, `dx`, `dp`, and the uncertainty product over a
/// time grid. Points equal the corresponding single-time calls exactly.
pub fn trace(
    picture: Picture,
    p: &Params,
    state: &SqueezeState,
    grid: &[f64],
) -> Result<Vec<TracePoint>> {
    let init = initial_pair(picture, p)?;
    let mut out = Vec::with_capacity(grid.len());
    for &t in grid {
        let pair = mode_pair(picture, p, t)?;
        let (fxx, fxp) = coefficients(&init, pair.xi);
        let (fpx, fpp) = coefficients(&init, pair.xi_dot);
        let dx2 = variance(pair.xi, state.r, state.theta);
        let dp2 = variance(pair.xi_dot, state.r, state.theta);
        out.push(TracePoint {
            t,
            x: state.x_o * fxx + state.p_o * fxp,
            p: state.x_o * fpx + state.p_o * fpp,
            dx: dx2.sqrt(),
            dp: dp2.sqrt(),
            product: dx2 * dp2,
        });
    }
    Ok(out)
}
