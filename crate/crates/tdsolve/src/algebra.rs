//! The os(1) symmetry generators as time-dependent coefficient vectors over
//! the operator basis `{T, D, X^2, P^2, X, P, I}`, and their commutators.
//!
//! With the picture's mode pair `(m, md)` (Wronskian `-i`) and `phi3`
//! bilinears, the generators are
//!
//! ```text
//!     M  = c_T T - (1/2) phi3_dot D + (1/4) phi3_ddot_slot X^2
//!     J- = i (m P - md X)
//!     J+ = i (-conj(m) P + conj(md) X)        (the adjoint of J-)
//! ```
//!
//! where `c_T` is `phi3` for TO, `phi3_hat e^{2 nu}` for TM/TQ, and the TQ
//! `D`/`X^2` slots carry the extra `nu`-derivative dressing. The commutation
//! relations `[M, J+-] = +-J+-`, `[J-, J+] = I` then hold identically
//! (off-shell): they need only the Wronskian normalization and the mode
//! equation, which the coefficient derivatives encode analytically.
//!
//! Commutators expand over canonical structure constants derived once from
//! `[X, P] = i I` with `D = (XP + PX)/2`, plus the time rule
//! `[T, c(t) A] = i c'(t) A`.

use num_complex::Complex64;

use crate::params::Params;
use crate::regime::Picture;
use crate::solution::{tm, to, tq};
use crate::time_map;
use crate::Result;

pub const BASIS_DIM: usize = 7;
pub const BASIS_LABELS: [&str; BASIS_DIM] = ["T", "D", "X^2", "P^2", "X", "P", "I"];

const T: usize = 0;
const D: usize = 1;
const X2: usize = 2;
const P2: usize = 3;
const X: usize = 4;
const P: usize = 5;
const I: usize = 6;

/// A symmetry operator evaluated at one time: coefficients over the basis
/// together with their analytic time derivatives (needed for commutators
/// with the `T` slot).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorCoeffs {
    pub value: [Complex64; BASIS_DIM],
    pub derivative: [Complex64; BASIS_DIM],
}

impl OperatorCoeffs {
    pub fn zero() -> Self {
        Self { value: [Complex64::ZERO; BASIS_DIM], derivative: [Complex64::ZERO; BASIS_DIM] }
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> f64 {
        self.value.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Which generator to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    M,
    JMinus,
    JPlus,
}

/// Structure constants: `[B_i, B_j] = sum_k sc(i,j)_k B_k` for the
/// time-independent basis elements. Derived from `[X,P] = iI`,
/// `D = (XP+PX)/2`.
fn structure_constant(i: usize, j: usize) -> Option<(usize, Complex64)> {
    let im = |v: f64| Complex64::new(0.0, v);
    let direct = |i: usize, j: usize| -> Option<(usize, Complex64)> {
        match (i, j) {
            (D, X2) => Some((X2, im(-2.0))),
            (D, P2) => Some((P2, im(2.0))),
            (D, X) => Some((X, im(-1.0))),
            (D, P) => Some((P, im(1.0))),
            (X2, P2) => Some((D, im(4.0))),
            (X2, P) => Some((X, im(2.0))),
            (P2, X) => Some((P, im(-2.0))),
            (X, P) => Some((I, im(1.0))),
            _ => None,
        }
    };
    if let Some(v) = direct(i, j) {
        Some(v)
    } else {
        direct(j, i).map(|(k, c)| (k, -c))
    }
}

/// Commutator `[A, B]` of two operators evaluated at the same time,
/// expanded over the basis.
#[allow(clippy::needless_range_loop)] // parallel arrays indexed by basis slot
pub fn commutator(a: &OperatorCoeffs, b: &OperatorCoeffs) -> [Complex64; BASIS_DIM] {
    let iu = Complex64::new(0.0, 1.0);
    let mut out = [Complex64::ZERO; BASIS_DIM];
    for i in 1..BASIS_DIM {
        for j in 1..BASIS_DIM {
            if let Some((k, c)) = structure_constant(i, j) {
                out[k] += a.value[i] * b.value[j] * c;
            }
        }
    }
    // [c_T T, c_j B_j] = i c_T c_j' B_j and the antisymmetric partner
    for j in 1..BASIS_DIM {
        out[j] += iu * a.value[T] * b.derivative[j];
        out[j] -= iu * b.value[T] * a.derivative[j];
    }
    out[T] += iu * (a.value[T] * b.derivative[T] - b.value[T] * a.derivative[T]);
    out
}

/// Build one generator of the picture's os(1) algebra at time `t`.
pub fn build_generator(
    kind: GeneratorKind,
    picture: Picture,
    p: &Params,
    t: f64,
) -> Result<OperatorCoeffs> {
    let iu = Complex64::new(0.0, 1.0);
    let mut op = OperatorCoeffs::zero();
    match picture {
        Picture::To => {
            let g2 = time_map::g2(t, p)?;
            match kind {
                GeneratorKind::M => {
                    let ps = to::phi(t, p)?;
                    let g2p = time_map::g2_prime(t, p)?;
                    let phi3_dddot = -4.0 * g2p * ps.phi3 - 8.0 * g2 * ps.phi3_dot;
                    op.value[T] = ps.phi3.into();
                    op.value[D] = (-0.5 * ps.phi3_dot).into();
                    op.value[X2] = (0.25 * ps.phi3_ddot).into();
                    op.derivative[T] = ps.phi3_dot.into();
                    op.derivative[D] = (-0.5 * ps.phi3_ddot).into();
                    op.derivative[X2] = (0.25 * phi3_dddot).into();
                }
                GeneratorKind::JMinus | GeneratorKind::JPlus => {
                    let pair = to::xi(t, p)?;
                    op.value[P] = iu * pair.xi;
                    op.value[X] = -iu * pair.xi_dot;
                    op.derivative[P] = iu * pair.xi_dot;
                    op.derivative[X] = 2.0 * iu * g2 * pair.xi;
                    if kind == GeneratorKind::JPlus {
                        conjugate_in_place(&mut op);
                    }
                }
            }
        }
        Picture::Tm => {
            let e2nu = (t / p.t_o).powf(p.a);
            let g2h = time_map::g2_hat(t, p)?;
            match kind {
                GeneratorKind::M => {
                    let ps = tm::phi(t, p)?;
                    let g2hp = time_map::g2_hat_prime(t, p)?;
                    let phi3_dddot = -4.0 * g2hp * ps.phi3 - 8.0 * g2h * ps.phi3_dot;
                    op.value[T] = (e2nu * ps.phi3).into();
                    op.value[D] = (-0.5 * ps.phi3_dot).into();
                    op.value[X2] = (0.25 * ps.phi3_ddot).into();
                    op.derivative[T] = (p.a / t * e2nu * ps.phi3 + ps.phi3_dot).into();
                    op.derivative[D] = (-0.5 * ps.phi3_ddot / e2nu).into();
                    op.derivative[X2] = (0.25 * phi3_dddot / e2nu).into();
                }
                GeneratorKind::JMinus | GeneratorKind::JPlus => {
                    let pair = tm::xi(t, p)?;
                    op.value[P] = iu * pair.xi;
                    op.value[X] = -iu * pair.xi_dot;
                    op.derivative[P] = iu * pair.xi_dot / e2nu;
                    op.derivative[X] = 2.0 * iu * g2h / e2nu * pair.xi;
                    if kind == GeneratorKind::JPlus {
                        conjugate_in_place(&mut op);
                    }
                }
            }
        }
        Picture::Tq => {
            let e2nu = (t / p.t_o).powf(p.a);
            let g2h = time_map::g2_hat(t, p)?;
            let nu_dot = 0.5 * p.a / t;
            match kind {
                GeneratorKind::M => {
                    let ps = tm::phi(t, p)?;
                    let c = tq::coeffs(t, p)?;
                    let g2hp = time_map::g2_hat_prime(t, p)?;
                    let phi3_dddot = -4.0 * g2hp * ps.phi3 - 8.0 * g2h * ps.phi3_dot;
                    let nu_ddot = -0.5 * p.a / (t * t);
                    let ct_dot = p.a / t * c.c_t + ps.phi3_dot;
                    op.value[T] = c.c_t.into();
                    op.value[D] = (-c.c_d).into();
                    op.value[X2] = c.c_x2.into();
                    op.derivative[T] = ct_dot.into();
                    op.derivative[D] =
                        (-(nu_ddot * c.c_t + nu_dot * ct_dot + 0.5 * ps.phi3_ddot / e2nu)).into();
                    op.derivative[X2] =
                        (0.25 / e2nu * (phi3_dddot / e2nu - 2.0 * nu_dot * ps.phi3_ddot)).into();
                }
                GeneratorKind::JMinus | GeneratorKind::JPlus => {
                    let pair = tq::xi(t, p)?;
                    op.value[P] = iu * pair.xi;
                    op.value[X] = -iu * pair.xi_dot;
                    op.derivative[P] = iu * (pair.xi_dot + nu_dot * pair.xi);
                    op.derivative[X] =
                        iu * (2.0 * g2h / (e2nu * e2nu) * pair.xi + nu_dot * pair.xi_dot);
                    if kind == GeneratorKind::JPlus {
                        conjugate_in_place(&mut op);
                    }
                }
            }
        }
    }
    Ok(op)
}

fn conjugate_in_place(op: &mut OperatorCoeffs) {
    for c in op.value.iter_mut().chain(op.derivative.iter_mut()) {
        *c = c.conj();
    }
}

/// All three generators `(M, J-, J+)` at time `t`.
pub fn build_generators(
    picture: Picture,
    p: &Params,
    t: f64,
) -> Result<(OperatorCoeffs, OperatorCoeffs, OperatorCoeffs)> {
    Ok((
        build_generator(GeneratorKind::M, picture, p, t)?,
        build_generator(GeneratorKind::JMinus, picture, p, t)?,
        build_generator(GeneratorKind::JPlus, picture, p, t)?,
    ))
}

/// Largest residual coefficient of `[M, J-] + J-`, `[M, J+] - J+` and
/// `[J-, J+] - I` at time `t`, normalized by the largest generator
/// coefficient. This is the os(1) closure check.
#[allow(clippy::needless_range_loop)] // parallel arrays indexed by basis slot
pub fn commutation_residual(picture: Picture, p: &Params, t: f64) -> Result<f64> {
    let (m, jm, jp) = build_generators(picture, p, t)?;
    let scale = m.max_norm().max(jm.max_norm()).max(1.0);
    let mut worst = 0.0f64;

    let c1 = commutator(&m, &jm);
    for k in 0..BASIS_DIM {
        worst = worst.max((c1[k] + jm.value[k]).norm());
    }
    let c2 = commutator(&m, &jp);
    for k in 0..BASIS_DIM {
        worst = worst.max((c2[k] - jp.value[k]).norm());
    }
    let c3 = commutator(&jm, &jp);
    for k in 0..BASIS_DIM {
        let expect = if k == I { Complex64::ONE } else { Complex64::ZERO };
        worst = worst.max((c3[k] - expect).norm());
    }
    Ok(worst / scale)
}
