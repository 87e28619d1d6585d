//! Evaluate the mode functions of all three pictures for one system and
//! check the Wronskian normalization pointwise.
//!
//! ```bash
//! cargo run -p tdsolve --example picture_functions
//! ```

use num_complex::Complex64;
use tdsolve::solution::{tm, to, tq};
use tdsolve::time_map;
use tdsolve::Params;

fn main() {
    // power-law mass with a growing potential: Hankel-row regime
    let p = Params::new(2.0, 1.0, 1.0, 1.0).unwrap();
    println!("system: a={}, b={}, w={}, t0={}", p.a, p.b, p.omega, p.t_o);
    println!();

    println!("TO picture, xi(t') on the offset grid:");
    println!("{:>6} {:>22} {:>22} {:>14}", "t'-t0'", "xi", "xi_dot", "|W + i|");
    for i in 0..6 {
        let s = 0.15 * i as f64;
        let pair = to::xi(s, &p).unwrap();
        let w_err = (pair.wronskian() + Complex64::new(0.0, 1.0)).norm();
        println!(
            "{s:>6.2} {:>22} {:>22} {w_err:>14.2e}",
            format_c(pair.xi),
            format_c(pair.xi_dot)
        );
    }
    println!();

    println!("TM picture, xi_hat(t), with phi3_hat and derivatives:");
    println!("{:>6} {:>22} {:>12} {:>12} {:>12}", "t", "xi_hat", "phi3", "phi3'", "phi3''");
    for i in 0..6 {
        let t = 1.0 + 0.4 * i as f64;
        let pair = tm::xi(t, &p).unwrap();
        let phi = tm::phi(t, &p).unwrap();
        println!(
            "{t:>6.2} {:>22} {:>12.6} {:>12.6} {:>12.6}",
            format_c(pair.xi),
            phi.phi3,
            phi.phi3_dot,
            phi.phi3_ddot
        );
    }
    println!();

    println!("TQ picture, (Xi_P, Xi_X) and the symmetry coefficients:");
    println!("{:>6} {:>22} {:>22} {:>10} {:>10} {:>10}", "t", "Xi_P", "Xi_X", "C_T", "C_D", "C_X2");
    for i in 0..6 {
        let t = 1.0 + 0.4 * i as f64;
        let pair = tq::xi(t, &p).unwrap();
        let c = tq::coeffs(t, &p).unwrap();
        println!(
            "{t:>6.2} {:>22} {:>22} {:>10.5} {:>10.5} {:>10.5}",
            format_c(pair.xi),
            format_c(pair.xi_dot),
            c.c_t,
            c.c_d,
            c.c_x2
        );
    }
    println!();

    // the TO coefficient g2(t') that drives everything
    println!("TO potential coefficient g2 along the map t -> t'(t):");
    for t in [1.0, 1.5, 2.0, 3.0] {
        let s = time_map::t_prime(t, &p).unwrap();
        println!(
            "  t = {t:.1} -> t'-t0' = {s:.4}, g2 = {:.6}",
            time_map::g2(s, &p).unwrap()
        );
    }
}

fn format_c(z: Complex64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}
