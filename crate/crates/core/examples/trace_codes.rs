//! Trace code, subfield subcode and the duality between them for a code over
//! F_2[x]/<x^3 - x>.

use fptrace::codes::{check_duality, duality_sides, subfield_subcode, trace_code};
use fptrace::trace::{univariate_trace, TraceOptions};
use fptrace::{CodeOverR, Limits, Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let tau = univariate_trace(&Poly::new(f, [0, 1, 0, 1]), &TraceOptions::default())?;
    let r = tau.algebra().clone();
    let limits = Limits::default();

    let row = vec![
        r.one(),
        r.element(vec![1, 1, 0])?,
        r.element(vec![0, 0, 1])?,
    ];
    let code = CodeOverR::new(r, 3, vec![row])?;

    let tc = trace_code(&tau, &code, &limits)?;
    let sub = subfield_subcode(&code, &limits)?;
    println!("trace code        {}", tc.params(&limits)?);
    println!("subfield subcode  {}", sub.params(&limits)?);

    let (lhs, rhs) = duality_sides(&tau, &code, &limits)?;
    println!(
        "τ(C^⊥) has {} words, (C|F)^⊥ has {}",
        lhs.size(),
        rhs.size()
    );
    println!("duality holds: {}", check_duality(&tau, &code, &limits)?);
    Ok(())
}
