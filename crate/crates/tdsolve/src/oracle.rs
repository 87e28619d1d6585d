//! Independent numerical ground truth: fixed-step classical RK4 for the
//! mode equation and for the three pictures' Hamilton equations.
//!
//! Fixed step rather than adaptive: runs are reproducible bit-for-bit and
//! the fourth-order convergence slope is directly measurable by halving the
//! step. Near the Case-2 singular endpoint the grid must stop at `v >= 1e-3`
//! (the coefficient `g2` diverges there and no fixed step is adequate).

use crate::params::Params;
use crate::regime::Picture;
use crate::time_map;
use crate::{Error, Result};

/// Integrator settings. `step` is the nominal step in the picture's time
/// variable; each grid interval is subdivided into an integer number of
/// steps no larger than it.
#[derive(Debug, Clone, Copy)]
pub struct IntegratorConfig {
    pub step: f64,
    pub max_steps: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self { step: 1e-4, max_steps: 50_000_000 }
    }
}

impl IntegratorConfig {
    pub fn with_step(step: f64) -> Self {
        Self { step, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(Error::InvalidParams(format!("step must be > 0, got {}", self.step)));
        }
        Ok(())
    }
}

/// One classical RK4 step for a 2-state system `y' = f(t, y)`.
fn rk4_step<F: Fn(f64, [f64; 2]) -> [f64; 2]>(f: &F, t: f64, y: [f64; 2], h: f64) -> [f64; 2] {
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * h, [y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]]);
    let k3 = f(t + 0.5 * h, [y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]]);
    let k4 = f(t + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
    [
        y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}

/// Integrate `y' = f(t, y)` from `grid[0]`, reporting the state at every
/// grid node. The grid must be strictly increasing.
pub fn integrate<F: Fn(f64, [f64; 2]) -> [f64; 2]>(
    f: F,
    init: [f64; 2],
    grid: &[f64],
    cfg: &IntegratorConfig,
) -> Result<Vec<[f64; 2]>> {
    cfg.validate()?;
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    for w in grid.windows(2) {
        if w[1] <= w[0] || w[0].is_nan() || w[1].is_nan() {
            return Err(Error::InvalidParams("grid must be strictly increasing".into()));
        }
    }
    let mut out = Vec::with_capacity(grid.len());
    let mut y = init;
    out.push(y);
    let mut total_steps = 0usize;
    for w in grid.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        let n = ((t1 - t0) / cfg.step).ceil().max(1.0) as usize;
        total_steps += n;
        if total_steps > cfg.max_steps {
            return Err(Error::InvalidParams(format!(
                "integration exceeds max_steps = {}",
                cfg.max_steps
            )));
        }
        let h = (t1 - t0) / n as f64;
        let mut t = t0;
        for _ in 0..n {
            y = rk4_step(&f, t, y, h);
            t += h;
        }
        out.push(y);
    }
    Ok(out)
}

/// Integrate the TO mode equation `gamma'' + 2 g2(t') gamma = 0` (one real
/// solution; integrate twice for a complex one). Grid values are offsets.
pub fn integrate_gamma(
    p: &Params,
    init: [f64; 2],
    grid: &[f64],
    cfg: &IntegratorConfig,
) -> Result<Vec<[f64; 2]>> {
    // Probe the grid ends so a domain breach is a clean error, not a panic
    // inside the derivative closure.
    for &s in [grid.first(), grid.last()].into_iter().flatten() {
        time_map::g2(s, p)?;
    }
    let pp = *p;
    integrate(
        move |s, y| {
            let g = time_map::g2(s, &pp).expect("grid checked within domain");
            [y[1], -2.0 * g * y[0]]
        },
        init,
        grid,
        cfg,
    )
}

/// Integrate the picture's classical Hamilton equations:
/// TO `x' = p, p' = -2 g2 x`; TM `x' = (t0/t)^a p, p' = -w^2 (t/t0)^b x`;
/// TQ `x' = p + (a/2t) x, p' = -w^2 (t/t0)^{b-a} x - (a/2t) p`.
pub fn integrate_classical(
    picture: Picture,
    p: &Params,
    init: [f64; 2],
    grid: &[f64],
    cfg: &IntegratorConfig,
) -> Result<Vec<[f64; 2]>> {
    if picture != Picture::To {
        if p.is_zero_a() {
            return Err(Error::IdentityMap);
        }
        for &t in [grid.first(), grid.last()].into_iter().flatten() {
            if t <= 0.0 {
                return Err(Error::OutOfDomain(format!("t must be > 0, got {t}")));
            }
        }
    }
    let pp = *p;
    match picture {
        Picture::To => {
            for &s in [grid.first(), grid.last()].into_iter().flatten() {
                time_map::g2(s, p)?;
            }
            integrate(
                move |s, y| {
                    let g = time_map::g2(s, &pp).expect("grid checked within domain");
                    [y[1], -2.0 * g * y[0]]
                },
                init,
                grid,
                cfg,
            )
        }
        Picture::Tm => integrate(
            move |t, y| {
                [
                    (pp.t_o / t).powf(pp.a) * y[1],
                    -pp.omega * pp.omega * (t / pp.t_o).powf(pp.b) * y[0],
                ]
            },
            init,
            grid,
            cfg,
        ),
        Picture::Tq => integrate(
            move |t, y| {
                let drag = 0.5 * pp.a / t;
                [
                    y[1] + drag * y[0],
                    -pp.omega * pp.omega * (t / pp.t_o).powf(pp.b - pp.a) * y[0] - drag * y[1],
                ]
            },
            init,
            grid,
            cfg,
        ),
    }
}

/// Measured convergence order from endpoint errors at steps `h` and `h/2`
/// against a reference solution.
pub fn convergence_order(err_h: f64, err_h2: f64) -> f64 {
    (err_h / err_h2).log2()
}
