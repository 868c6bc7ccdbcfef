//! The binary [6,3,3] code defined by six elements of F_2[x]/<x^3 - x>.

use fptrace::codes::defining_sequence_code;
use fptrace::trace::{univariate_trace, TraceOptions};
use fptrace::{Limits, Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let tau = univariate_trace(&Poly::new(f, [0, 1, 0, 1]), &TraceOptions::default())?;
    let r = tau.algebra();
    let d = [
        [1, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
    ]
    .iter()
    .map(|c| r.element(c.to_vec()))
    .collect::<fptrace::Result<Vec<_>>>()?;
    let shown: Vec<String> = d.iter().map(|e| r.format_element(e)).collect();
    println!("D = ({})", shown.join(", "));

    let code = defining_sequence_code(&tau, &d)?;
    println!("C_D: {}", code.params(&Limits::default())?);
    println!("quasicyclic index: {:?}", code.quasicyclic_index());
    for w in code.codewords() {
        println!("  {w:?}");
    }
    Ok(())
}
