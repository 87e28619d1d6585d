//! The os(1) symmetry generators as coefficient vectors over
//! `{T, D, X^2, P^2, X, P, I}`, and a numerical check that
//! `[M, J+-] = +-J+-` and `[J-, J+] = I` close in every picture.
//!
//! ```bash
//! cargo run -p tdsolve --example oscillator_algebra
//! ```

use tdsolve::algebra::{
    build_generators, commutation_residual, commutator, GeneratorKind, BASIS_LABELS,
};
use tdsolve::regime::Picture;
use tdsolve::Params;

fn main() {
    let p = Params::new(2.0, 1.0, 1.0, 1.0).unwrap();
    let t = 1.8;

    println!("generators for the TM picture at a={}, b={}, t={t}:", p.a, p.b);
    let (m, jm, jp) = build_generators(Picture::Tm, &p, t).unwrap();
    for (name, op) in [("M ", &m), ("J-", &jm), ("J+", &jp)] {
        print!("  {name} =");
        for (k, label) in BASIS_LABELS.iter().enumerate() {
            let c = op.value[k];
            if c.norm() > 1e-14 {
                print!("  ({:.5}{:+.5}i) {label}", c.re, c.im);
            }
        }
        println!();
    }
    println!();

    println!("commutator [J-, J+] expanded over the basis:");
    let c = commutator(&jm, &jp);
    for (k, label) in BASIS_LABELS.iter().enumerate() {
        if c[k].norm() > 1e-12 {
            println!("  {label}: {:.12}{:+.12}i", c[k].re, c[k].im);
        }
    }
    println!();

    println!("closure residuals across pictures and times:");
    for (pic, pr) in [
        (Picture::To, Params::new(1.0, 1.0, 2.0, 1.0).unwrap()),
        (Picture::To, Params::new(1.0, -1.0, 2.0, 1.0).unwrap()),
        (Picture::Tm, Params::new(2.0, 1.0, 1.0, 1.0).unwrap()),
        (Picture::Tq, Params::new(2.0, 1.0, 1.0, 1.0).unwrap()),
        (Picture::Tq, Params::new(3.0, 1.0, 2.0, 1.0).unwrap()),
    ] {
        let mut worst = 0.0f64;
        for i in 1..=10 {
            let t = match pic {
                Picture::To => 0.25 * i as f64,
                _ => pr.t_o * (1.0 + 0.3 * i as f64),
            };
            worst = worst.max(commutation_residual(pic, &pr, t).unwrap());
        }
        println!(
            "  {} a={:>4} b={:>4}: worst residual {worst:.2e}",
            pic.label(),
            pr.a,
            pr.b
        );
    }

    // [M, J-] = -J- seen coefficient-wise
    println!();
    println!("[M, J-] + J- slot magnitudes (should all vanish):");
    let c = commutator(&m, &jm);
    for (k, label) in BASIS_LABELS.iter().enumerate() {
        println!("  {label:>4}: {:.2e}", (c[k] + jm.value[k]).norm());
    }
    let _ = GeneratorKind::M; // re-exported for callers building single generators
}
