//! Dual bases, discriminants and representing functionals through a trace.

use fptrace::trace::{
    discriminant, dual_basis, represent_functional, univariate_trace, TraceOptions,
};
use fptrace::{Functional, Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let tau = univariate_trace(&Poly::new(f, [0, 1, 0, 1]), &TraceOptions::default())?;
    let r = tau.algebra();

    let basis = r.basis();
    println!(
        "discriminant of the monomial basis: {}",
        discriminant(&tau, &basis)?
    );
    let dual = dual_basis(&tau, &basis)?;
    for (a, b) in basis.iter().zip(&dual) {
        println!("  {}  <->  {}", r.format_element(a), r.format_element(b));
    }

    let u = r.basis_element(1);
    let dependent = vec![r.one(), u.clone(), r.add(&r.one(), &u)];
    println!(
        "discriminant of 1, x, 1 + x: {}",
        discriminant(&tau, &dependent)?
    );

    // the coefficient of 1 as τ(β ·)
    let pi0 = Functional::new(vec![1, 0, 0]);
    let beta = represent_functional(&tau, &pi0)?;
    println!("π_0(x) = τ(({}) x)", r.format_element(&beta));
    Ok(())
}
