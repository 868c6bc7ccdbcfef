//! CRT decomposition of F_2[x]/<x^3 - x> and the trace pulled back from the
//! local pieces.

use fptrace::trace::{univariate_trace, TraceOptions};
use fptrace::{crt_decompose, Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let h = Poly::from_signed(f, &[0, -1, 0, 1]);
    let crt = crt_decompose(&h, 0)?;
    println!("{} splits into:", crt.parent);
    for c in &crt.components {
        println!(
            "  {}  (factor {}, multiplicity {})",
            c.algebra, c.factor, c.multiplicity
        );
    }

    let tau = univariate_trace(&h, &TraceOptions::default())?;
    let r = tau.algebra();
    for x in r.basis() {
        println!("τ({}) = {}", r.format_element(&x), tau.apply(&x));
    }
    Ok(())
}
