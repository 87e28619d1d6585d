//! Walk the regime taxonomy: which closed-form row a parameter tuple
//! selects, and the valid time domain of the oscillator picture.
//!
//! ```bash
//! cargo run -p tdsolve --example classify_regimes
//! ```

use tdsolve::regime::{classify, tprime_domain, Picture};
use tdsolve::Params;

fn main() {
    let samples = [
        ("plain growing potential", Params::new(1.0, 0.5, 2.0, 1.0).unwrap()),
        ("decaying potential", Params::new(1.0, -2.5, 1.5, 1.0).unwrap()),
        ("constant-frequency special system", Params::new(1.0, -1.0, 2.0, 1.0).unwrap()),
        ("power-law mass, b above boundary", Params::new(2.0, 1.0, 1.0, 1.0).unwrap()),
        ("power-law mass, b below boundary", Params::new(0.5, -2.0, 1.0, 1.0).unwrap()),
        ("critical, low frequency", Params::new(3.0, 1.0, 0.5, 1.0).unwrap()),
        ("critical, resonant", Params::new(3.0, 1.0, 1.0, 1.0).unwrap()),
        ("critical, high frequency", Params::new(3.0, 1.0, 2.0, 1.0).unwrap()),
        ("simple oscillator in disguise (b = -a)", Params::new(0.5, -0.5, 1.0, 1.0).unwrap()),
    ];

    for (what, p) in samples {
        println!("{what}: a={}, b={}, w={}, t0={}", p.a, p.b, p.omega, p.t_o);
        for picture in [Picture::To, Picture::Tm, Picture::Tq] {
            match classify(&p, picture) {
                Ok(key) => println!(
                    "  {}: {}  ({})",
                    picture.label(),
                    key.key_string(),
                    key.report_string(&p)
                ),
                Err(e) => println!("  {}: rejected ({e})", picture.label()),
            }
        }
        let d = tprime_domain(&p).unwrap();
        if d.upper.is_finite() {
            println!("  offsets t'-t0' valid in [{}, {})", d.lower, d.upper);
        } else {
            println!("  offsets t'-t0' valid in [{}, inf)", d.lower);
        }
        println!();
    }

    // a = 0 is the identity map for TM/TQ and is refused there
    let p = Params::new(0.0, 1.0, 1.0, 1.0).unwrap();
    println!("a=0: TO accepts it, TM does not:");
    println!("  TO: {}", classify(&p, Picture::To).unwrap().key_string());
    println!("  TM: {}", classify(&p, Picture::Tm).unwrap_err());
}
