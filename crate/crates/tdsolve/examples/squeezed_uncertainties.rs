//! Squeezed-state uncertainties: how `(dx)^2`, `(dp)^2` trade off with the
//! squeeze magnitude and phase while their product stays above 1/4.
//!
//! ```bash
//! cargo run -p tdsolve --example squeezed_uncertainties
//! ```

use std::f64::consts::PI;

use tdsolve::observables::uncertainties;
use tdsolve::regime::Picture;
use tdsolve::{Params, SqueezeState};

fn main() {
    // the constant-frequency system: coherent states stay minimum-uncertainty
    let p = Params::new(1.0, -1.0, 2.0, 1.0).unwrap();
    println!("constant-frequency system (a=1, b=-1, w=2): squeeze magnitude sweep at t'-t0'=0");
    println!("{:>6} {:>14} {:>14} {:>14}", "r", "(dx)^2", "(dp)^2", "product");
    for i in 0..6 {
        let r = 0.3 * i as f64;
        let st = SqueezeState::new(1.0, 1.0, r, 0.0).unwrap();
        let u = uncertainties(Picture::To, &p, &st, 0.0).unwrap();
        println!("{r:>6.2} {:>14.8} {:>14.8} {:>14.10}", u.dx2, u.dp2, u.product);
    }
    println!();

    println!("squeeze phase sweep at r = 0.8 (same system, offset pi/4):");
    println!("{:>8} {:>14} {:>14} {:>14}", "theta", "(dx)^2", "(dp)^2", "product");
    for i in 0..8 {
        let theta = PI / 4.0 * i as f64;
        let st = SqueezeState::new(1.0, 1.0, 0.8, theta).unwrap();
        let u = uncertainties(Picture::To, &p, &st, PI / 4.0).unwrap();
        println!("{theta:>8.4} {:>14.8} {:>14.8} {:>14.8}", u.dx2, u.dp2, u.product);
    }
    println!();

    // a Bessel-row system: the coherent product exceeds 1/4 once the
    // potential is time-dependent, but never dips below it
    let p = Params::new(1.0, 1.0, 2.0, 1.0).unwrap();
    println!("growing-potential system (a=1, b=1, w=2), coherent state along t:");
    println!("{:>6} {:>14} {:>14} {:>14}", "t", "(dx)^2", "(dp)^2", "product");
    let st = SqueezeState::coherent(1.0, 1.0);
    for t in [1.0, 2.0, 5.0, 10.0, 20.0, 50.0] {
        let u = uncertainties(Picture::Tm, &p, &st, t).unwrap();
        println!("{t:>6.1} {:>14.8} {:>14.8} {:>14.8}", u.dx2, u.dp2, u.product);
        assert!(u.product >= 0.25 - 1e-12);
    }
}
