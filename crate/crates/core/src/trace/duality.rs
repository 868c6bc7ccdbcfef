//! Consequences of a trace: dual bases, discriminants, and representing any
//! functional as `x ↦ τ(βx)`.

use super::{Functional, GramMatrix, Trace};
use crate::algebra::AlgElement;
use crate::error::{Error, Result};

fn check_count(trace: &Trace, elems: &[AlgElement]) -> Result<()> {
    let m = trace.algebra().dim();
    if elems.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: elems.len(),
        });
    }
    for e in elems {
        trace.algebra().check_elem(e)?;
    }
    Ok(())
}

/// `det [τ(a_i a_j)]` for exactly `dim` elements.
pub fn discriminant(trace: &Trace, elems: &[AlgElement]) -> Result<u32> {
    check_count(trace, elems)?;
    Ok(GramMatrix::of_elements(trace.algebra(), trace.functional(), elems).det)
}

/// The unique `β_1..β_m` with `τ(α_i β_j) = δ_ij`.
pub fn dual_basis(trace: &Trace, basis: &[AlgElement]) -> Result<Vec<AlgElement>> {
    check_count(trace, basis)?;
    let alg = trace.algebra();
    let f = alg.field();
    let gram = GramMatrix::of_elements(alg, trace.functional(), basis);
    let inv = gram.matrix.inverse(&f).ok_or(Error::NotABasis)?;
    // β_j = Σ_k inv[k][j] α_k
    Ok((0..basis.len())
        .map(|j| {
            basis.iter().enumerate().fold(alg.zero(), |acc, (k, a)| {
                alg.add(&acc, &alg.scale(a, inv[(k, j)]))
            })
        })
        .collect())
}

/// The unique `β` with `f(x) = τ(βx)` for all `x`.
pub fn represent_functional(trace: &Trace, f: &Functional) -> Result<AlgElement> {
    let alg = trace.algebra();
    if f.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: f.dim(),
        });
    }
    let coords = trace
        .gram()
        .matrix
        .solve(f.values(), &alg.field())
        .expect("a trace has a nonsingular Gram matrix");
    alg.element(coords)
}
