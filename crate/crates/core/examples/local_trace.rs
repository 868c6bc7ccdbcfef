//! A trace on F_2[x]/<(1+x)^2> and a functional that fails to be one.

use fptrace::trace::{local_trace, verify_trace, BaseFunctional};
use fptrace::{Functional, Poly, PrimeField, Verdict};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let g = Poly::new(f, [1, 1]);
    let tau = local_trace(&g, 2, &BaseFunctional::Coefficient)?;
    let r = tau.algebra();
    println!("R = {r}");
    for x in r.elements() {
        println!("  τ({}) = {}", r.format_element(&x), tau.apply(&x));
    }
    println!("Gram determinant {}", tau.gram().det);

    // σ(a + bu) = a + b
    let sigma = Functional::new(vec![1, 1]);
    match verify_trace(r, &sigma)? {
        Verdict::Verified(_) => println!("σ is a trace"),
        Verdict::Rejected { witness, .. } => {
            println!(
                "σ rejected: the ideal of {} lies in its kernel",
                r.format_element(&witness)
            )
        }
    }
    Ok(())
}
