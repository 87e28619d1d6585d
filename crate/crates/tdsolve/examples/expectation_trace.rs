//! Phase-space traces of `<x>` and `<p>`: the oscillation whose position
//! envelope decays while the momentum envelope grows, and how the
//! oscillation count rises with the potential power `b`.
//!
//! Writes the two traces as CSV files next to the current directory.
//!
//! ```bash
//! cargo run -p tdsolve --example expectation_trace
//! ```

use std::fs::File;
use std::io::Write;

use tdsolve::observables::trace;
use tdsolve::regime::Picture;
use tdsolve::{Params, SqueezeState};

fn main() -> std::io::Result<()> {
    let state = SqueezeState::coherent(1.0, 1.0);
    let grid: Vec<f64> = (0..2000).map(|i| 1.0 + 49.0 * i as f64 / 1999.0).collect();

    for b in [-0.5, 1.0] {
        let p = Params::new(1.0, b, 2.0, 1.0).unwrap();
        let rows = trace(Picture::Tm, &p, &state, &grid).unwrap();

        let crossings = rows.windows(2).filter(|w| w[0].x.signum() != w[1].x.signum()).count();
        let first = rows.first().unwrap();
        let last = rows.last().unwrap();
        println!("TM system a=1, b={b}, w=2, t0=1, x0=p0=1 over t in [1, 50]:");
        println!("  zero crossings of <x>: {crossings}");
        println!("  |<x>| at the ends: {:.3} -> {:.3}", first.x.abs(), last.x.abs());
        println!(
            "  |<p>| grows: p({:.0}) = {:.3}, p({:.0}) = {:.3}",
            first.t, first.p, last.t, last.p
        );

        let path = format!("trace_b{b}.csv");
        let mut f = File::create(&path)?;
        writeln!(f, "t,x_exp,p_exp,dx,dp,product")?;
        for r in &rows {
            writeln!(
                f,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                r.t, r.x, r.p, r.dx, r.dp, r.product
            )?;
        }
        println!("  wrote {path}");
        println!();
    }

    // a single point at the reference time returns the initial data exactly
    let p = Params::new(1.0, 1.0, 2.0, 1.0).unwrap();
    let at_ref = trace(Picture::Tm, &p, &state, &[p.t_o]).unwrap();
    println!(
        "at t = t0: <x> = {:.15}, <p> = {:.15} (the initial data)",
        at_ref[0].x, at_ref[0].p
    );
    Ok(())
}
