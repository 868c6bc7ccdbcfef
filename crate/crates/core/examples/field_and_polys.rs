//! Prime-field arithmetic, factorization and g-adic digits.

use fptrace::{Poly, PrimeField};

fn main() -> fptrace::Result<()> {
    let f = PrimeField::new(7)?;
    let a = f.elem(3);
    let b = f.elem(5);
    println!(
        "in F_7: 3 + 5 = {}, 3 * 5 = {}, 3^-1 = {}",
        a.add(&b)?,
        a.mul(&b)?,
        a.inv()?
    );

    let f2 = PrimeField::new(2)?;
    // x^6 + x^5 + x^3 + x^2 + x + 1 over F_2
    let h = Poly::new(f2, [1, 1, 1, 1, 0, 1, 1]);
    println!("{h} = {}", h.factor()?);
    for (g, e) in h.factor()?.factors {
        println!(
            "  factor {g} (multiplicity {e}) irreducible: {}",
            g.is_irreducible()?
        );
    }

    // x^5 written in base g = 1 + x + x^2, three digits
    let g = Poly::new(f2, [1, 1, 1]);
    let digits = Poly::monomial(f2, 1, 5).g_adic_digits(&g, 3)?;
    let shown: Vec<String> = digits.iter().map(ToString::to_string).collect();
    println!("x^5 in base {g}: digits [{}]", shown.join(", "));
    Ok(())
}
