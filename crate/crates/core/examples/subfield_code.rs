//! Subfield code of a code over F_3[x]/<x^2 + 1>, from trace blocks and from
//! column expansion, for two different bases.

use fptrace::codes::{subfield_code, subfield_code_by_expansion};
use fptrace::trace::{univariate_trace, TraceOptions};
use fptrace::{CodeOverR, Limits, Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(3)?;
    let tau = univariate_trace(&Poly::new(f, [1, 0, 1]), &TraceOptions::default())?;
    let r = tau.algebra().clone();
    let row = vec![r.one(), r.element(vec![1, 1])?, r.element(vec![0, 2])?];
    let code = CodeOverR::new(r.clone(), 3, vec![row])?;

    let standard = r.basis();
    let other = vec![r.element(vec![1, 1])?, r.element(vec![1, 2])?];
    let limits = Limits::default();
    for (name, basis) in [("standard", &standard), ("other", &other)] {
        let blocks = subfield_code(&code, &tau, basis)?;
        let expanded = subfield_code_by_expansion(&code, basis)?;
        println!(
            "{name} basis: blocks {}, expansion {}, equal: {}",
            blocks.params(&limits)?,
            expanded.params(&limits)?,
            blocks == expanded
        );
    }
    Ok(())
}
