//! Cross-validate the closed forms against the independent RK4 integrator:
//! the mode equation in the TO picture and the classical Hamilton equations
//! in all three pictures, plus the measured convergence order.
//!
//! ```bash
//! cargo run -p tdsolve --example ode_cross_check
//! ```

use tdsolve::observables::{expval_p, expval_x};
use tdsolve::oracle::{
    convergence_order, integrate_classical, integrate_gamma, IntegratorConfig,
};
use tdsolve::regime::Picture;
use tdsolve::solution::to;
use tdsolve::{Params, SqueezeState};

fn main() {
    let p = Params::new(1.0, 1.0, 2.0, 1.0).unwrap();
    let grid: Vec<f64> = (0..=30).map(|i| 0.1 * i as f64).collect();

    // integrate the real and imaginary parts of xi from shared initial data
    let init = to::xi(0.0, &p).unwrap();
    let cfg = IntegratorConfig::default();
    let re = integrate_gamma(&p, [init.xi.re, init.xi_dot.re], &grid, &cfg).unwrap();
    let im = integrate_gamma(&p, [init.xi.im, init.xi_dot.im], &grid, &cfg).unwrap();

    println!("closed-form xi vs RK4 (a={}, b={}, w={}):", p.a, p.b, p.omega);
    let mut worst = 0.0f64;
    for (i, &s) in grid.iter().enumerate() {
        let xi = to::xi(s, &p).unwrap().xi;
        let err = ((xi.re - re[i][0]).powi(2) + (xi.im - im[i][0]).powi(2)).sqrt();
        worst = worst.max(err / xi.norm().max(1e-3));
        if i % 6 == 0 {
            println!(
                "  t'-t0' = {s:>4.1}: xi = {:+.9}{:+.9}i, rk4 = {:+.9}{:+.9}i",
                xi.re, xi.im, re[i][0], im[i][0]
            );
        }
    }
    println!("  worst relative deviation: {worst:.2e}");
    println!();

    // classical motion in each picture against the tabulated expectations
    let state = SqueezeState::coherent(1.0, 1.0);
    for pic in [Picture::To, Picture::Tm, Picture::Tq] {
        let grid: Vec<f64> = match pic {
            Picture::To => (0..=20).map(|i| 0.15 * i as f64).collect(),
            _ => (0..=20).map(|i| 1.0 + 0.15 * i as f64).collect(),
        };
        let sol = integrate_classical(pic, &p, [1.0, 1.0], &grid, &cfg).unwrap();
        let mut worst = 0.0f64;
        for (i, &t) in grid.iter().enumerate() {
            let x = expval_x(pic, &p, &state, t).unwrap();
            let pv = expval_p(pic, &p, &state, t).unwrap();
            worst = worst.max((x - sol[i][0]).abs()).max((pv - sol[i][1]).abs());
        }
        println!("{} classical trajectory vs closed form: worst |diff| = {worst:.2e}", pic.label());
    }
    println!();

    // measured convergence order of the integrator
    let exact = |s: f64| (2.0 * s).cos();
    let pr = Params::new(1.0, -1.0, 2.0, 1.0).unwrap();
    let nodes: Vec<f64> = (0..=10).map(|i| 0.2 * i as f64).collect();
    let err = |h: f64| -> f64 {
        let sol = integrate_gamma(&pr, [1.0, 0.0], &nodes, &IntegratorConfig::with_step(h)).unwrap();
        nodes.iter().zip(&sol).map(|(&s, y)| (y[0] - exact(s)).abs()).fold(0.0, f64::max)
    };
    let (e1, e2) = (err(0.02), err(0.01));
    println!(
        "RK4 step-halving: E(0.02) = {e1:.3e}, E(0.01) = {e2:.3e}, order = {:.2}",
        convergence_order(e1, e2)
    );
}
