//! The maps connecting the three pictures: the dilation exponent `nu(t)`,
//! the TO time substitution `t'(t)` and its inverse, and the TO potential
//! coefficient `g2(t')` (the Hamiltonian term is `g2 x^2`, the classical
//! spring constant `2 g2`).
//!
//! Case 1 (`a = 1`) uses the logarithmic map `t' - t0' = t0 ln(t/t0)`;
//! Case 2 uses `t' - t0' = (t0/(1-a)) [(t/t0)^(1-a) - 1]`. In Case 2 the
//! scaled time `v = 1 + (1-a)(t'-t0')/t0 = (t/t0)^(1-a)` must stay positive;
//! for `a > 1` that bounds the offsets by `t0/(a-1)`.

use crate::params::Params;
use crate::{Error, Result};

/// Smallest admissible `v`: nearer the Case-2 endpoint the coefficient
/// `g2 ~ v^((a+b)/(1-a))` diverges and evaluation is refused.
pub const V_MIN: f64 = 1e-12;

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::OutOfDomain(format!("t must be > 0, got {t}")));
    }
    Ok(())
}

/// Dilation exponent `nu = (a/2) ln(t/t0)` of the TQ <-> TM unitary map.
pub fn nu(t: f64, p: &Params) -> Result<f64> {
    check_t(t)?;
    Ok(0.5 * p.a * (t / p.t_o).ln())
}

/// TO time offset `t' - t0'` as a function of the TM time `t`.
///
/// `exp_m1` keeps full precision when `a` is merely close to 1, where the
/// naive `(t/t0)^(1-a) - 1` would cancel and the `1/(1-a)` factor would
/// amplify the loss.
pub fn t_prime(t: f64, p: &Params) -> Result<f64> {
    check_t(t)?;
    if p.is_unit_a() {
        Ok(p.t_o * (t / p.t_o).ln())
    } else {
        Ok(p.t_o / (1.0 - p.a) * ((1.0 - p.a) * (t / p.t_o).ln()).exp_m1())
    }
}

/// `v - 1 = (1-a)(t'-t0')/t0`, checked away from the singular endpoint.
fn u_of_offset(offset: f64, p: &Params) -> Result<f64> {
    if !offset.is_finite() {
        return Err(Error::OutOfDomain("offset must be finite".into()));
    }
    let u = (1.0 - p.a) / p.t_o * offset;
    if 1.0 + u < V_MIN {
        return Err(Error::OutOfDomain(format!(
            "offset {offset} reaches the singular endpoint (v = {:.3e} < {V_MIN:.0e})",
            1.0 + u
        )));
    }
    Ok(u)
}

/// Scaled Case-2 time `v = 1 + (1-a)(t'-t0')/t0`, checked positive.
pub fn v_of_offset(offset: f64, p: &Params) -> Result<f64> {
    Ok(1.0 + u_of_offset(offset, p)?)
}

/// `ln v`, computed through `ln_1p` so near-unit `a` keeps full precision.
pub(crate) fn ln_v_of_offset(offset: f64, p: &Params) -> Result<f64> {
    Ok(u_of_offset(offset, p)?.ln_1p())
}

/// Inverse of [`t_prime`]: the TM time for a TO offset.
pub fn t_from_tprime(offset: f64, p: &Params) -> Result<f64> {
    if !offset.is_finite() {
        return Err(Error::OutOfDomain("offset must be finite".into()));
    }
    if p.is_unit_a() {
        Ok(p.t_o * (offset / p.t_o).exp())
    } else {
        let ln_v = ln_v_of_offset(offset, p)?;
        Ok(p.t_o * (ln_v / (1.0 - p.a)).exp())
    }
}

/// TO potential coefficient `g2(t')` (offset argument).
pub fn g2(offset: f64, p: &Params) -> Result<f64> {
    if !offset.is_finite() {
        return Err(Error::OutOfDomain("offset must be finite".into()));
    }
    let w2 = 0.5 * p.omega * p.omega;
    if p.is_unit_a() {
        Ok(w2 * ((1.0 + p.b) / p.t_o * offset).exp())
    } else {
        let ln_v = ln_v_of_offset(offset, p)?;
        Ok(w2 * ((p.a + p.b) / (1.0 - p.a) * ln_v).exp())
    }
}

/// d g2 / dt' at the given offset.
pub fn g2_prime(offset: f64, p: &Params) -> Result<f64> {
    let g = g2(offset, p)?;
    if p.is_unit_a() {
        Ok((1.0 + p.b) / p.t_o * g)
    } else {
        let v = v_of_offset(offset, p)?;
        Ok((p.a + p.b) / (p.t_o * v) * g)
    }
}

/// `g2` composed with the time map, `g2(t'(t)) = (1/2) w^2 (t/t0)^(a+b)`,
/// evaluated directly in the TM time.
pub fn g2_hat(t: f64, p: &Params) -> Result<f64> {
    check_t(t)?;
    Ok(0.5 * p.omega * p.omega * (t / p.t_o).powf(p.a + p.b))
}

/// `(d g2/dt')` composed with the time map.
pub fn g2_hat_prime(t: f64, p: &Params) -> Result<f64> {
    let g = g2_hat(t, p)?;
    if p.is_unit_a() {
        Ok((1.0 + p.b) / p.t_o * g)
    } else {
        let v = (t / p.t_o).powf(1.0 - p.a);
        Ok((p.a + p.b) / (p.t_o * v) * g)
    }
}
