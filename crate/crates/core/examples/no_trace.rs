//! An algebra without any F-valued trace: F_2[x,y]/<x^2, y^2, xy>, given by
//! its multiplication table.

use fptrace::trace::{ideal_oracle, search_traces, verify_trace};
use fptrace::{Algebra, Functional, Limits, PrimeField, Verdict};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(2)?;
    let (one, x, y, z) = (vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]);
    let table = vec![
        vec![one.clone(), x.clone(), y.clone()],
        vec![x, z.clone(), z.clone()],
        vec![y, z.clone(), z],
    ];
    let r = Algebra::from_table(
        f,
        table,
        None,
        Some(vec!["1".into(), "x".into(), "y".into()]),
    )?;
    let limits = Limits::default();

    for idx in 1..r.order() {
        let phi = Functional::new(r.element_at(idx).into_coords());
        let witness = match verify_trace(&r, &phi)? {
            Verdict::Rejected { witness, .. } => r.format_element(&witness),
            Verdict::Verified(_) => "-".into(),
        };
        println!(
            "{:?}: oracle {}, kernel contains the ideal of {witness}",
            phi.values(),
            ideal_oracle(&r, &phi, &limits)?
        );
    }
    println!("search: {:?}", search_traces(&r, &limits)?);
    Ok(())
}
