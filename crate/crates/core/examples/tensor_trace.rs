//! Traces on tensor products: F_2[x,y]/<x^2, y^2>, and a multivariate
//! quotient over F_3.

use fptrace::trace::{multivariate_trace, tensor_trace, univariate_trace, TraceOptions};
use fptrace::{Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let opts = TraceOptions::default();
    let f2 = PrimeField::new(2)?;
    let sq = Poly::new(f2, [0, 0, 1]);
    let local = univariate_trace(&sq, &opts)?;
    println!("local factor: τ = {:?}", local.values());
    let t = tensor_trace(&local, &local)?;
    let uv = multivariate_trace(&[("u".into(), sq.clone()), ("v".into(), sq)], &opts)?;
    assert_eq!(uv.values(), t.values());
    let t = uv;
    let r = t.algebra();
    println!("{r}");
    for (label, v) in r.labels().iter().zip(t.values()) {
        println!("  T({label}) = {v}");
    }

    let f3 = PrimeField::new(3)?;
    let gens = vec![
        ("x".to_string(), Poly::new(f3, [2, 0, 1, 1])),
        ("y".to_string(), Poly::new(f3, [0, 0, 1])),
    ];
    let t = multivariate_trace(&gens, &opts)?;
    println!(
        "F_3[x,y]/<x^3 + x^2 + 2, y^2>: dim {}, τ = {:?}",
        t.algebra().dim(),
        t.values()
    );
    Ok(())
}
