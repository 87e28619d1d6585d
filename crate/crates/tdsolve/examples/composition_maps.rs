//! The picture maps in action: the time substitution `t'(t)`, its inverse,
//! the dilation exponent `nu`, and the identities that tie the pictures
//! together — `xi_hat(t) = xi(t'(t))`, `Xi_P = xi_hat e^nu`,
//! `Xi_X = xi_hat_dot e^-nu`.
//!
//! ```bash
//! cargo run -p tdsolve --example composition_maps
//! ```

use tdsolve::solution::{tm, to, tq};
use tdsolve::time_map;
use tdsolve::Params;

fn main() {
    for p in [
        Params::new(1.0, 1.0, 2.0, 1.0).unwrap(),  // logarithmic map
        Params::new(0.5, -2.0, 1.0, 1.0).unwrap(), // stretching map
        Params::new(3.0, 1.0, 2.0, 1.0).unwrap(),  // bounded offsets
    ] {
        println!("a={}, b={}, w={}, t0={}", p.a, p.b, p.omega, p.t_o);
        println!(
            "{:>6} {:>10} {:>10} {:>10} {:>12} {:>12} {:>12}",
            "t", "t'-t0'", "back", "nu", "|TM-TO.t'|", "|XiP-id|", "|XiX-id|"
        );
        for i in 0..6 {
            let t = 1.0 + 0.5 * i as f64;
            let s = time_map::t_prime(t, &p).unwrap();
            let back = time_map::t_from_tprime(s, &p).unwrap();
            let nu = time_map::nu(t, &p).unwrap();

            let direct = tm::xi(t, &p).unwrap();
            let composed = to::xi(s, &p).unwrap();
            let comp_err = (direct.xi - composed.xi).norm().max(
                (direct.xi_dot - composed.xi_dot).norm(),
            );

            let dressed = tq::xi(t, &p).unwrap();
            let p_err = (dressed.xi - direct.xi * nu.exp()).norm();
            let x_err = (dressed.xi_dot - direct.xi_dot * (-nu).exp()).norm();

            println!(
                "{t:>6.2} {s:>10.5} {back:>10.5} {nu:>10.5} {comp_err:>12.2e} {p_err:>12.2e} {x_err:>12.2e}"
            );
        }
        println!();
    }

    // chain consistency: g2 pulled back through t'(t) is a plain power law
    let p = Params::new(0.5, 0.5, 1.0, 1.0).unwrap();
    println!("chain rule check for a={}, b={}: g2(t'(t)) vs (w^2/2)(t/t0)^(a+b)", p.a, p.b);
    for t in [1.0, 2.0, 4.0] {
        let lhs = time_map::g2(time_map::t_prime(t, &p).unwrap(), &p).unwrap();
        let rhs = 0.5 * p.omega * p.omega * (t / p.t_o).powf(p.a + p.b);
        println!("  t = {t:.1}: {lhs:.12} vs {rhs:.12}");
    }
}
