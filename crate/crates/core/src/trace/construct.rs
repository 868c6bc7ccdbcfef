//! Trace constructors: local (`F_p[x]/<g^r>`, `g` irreducible), direct
//! products, univariate quotients via CRT, tensor products, and multivariate
//! quotients `F_p[x_1..x_n]/<g_1(x_1), ..., g_n(x_n)>`.
//!
//! Every constructor returns a [`Trace`], so its output has already passed
//! the Gram-determinant check.

use super::{Functional, Trace};
use crate::algebra::{crt_decompose, Algebra};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{dot, Matrix};
use crate::poly::Poly;

/// Choice of the nonzero functional `T` on the residue field `F_p[x]/<g>`
/// that the local construction sums over the `g`-adic digits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BaseFunctional {
    /// Coefficient of `x^{deg g - 1}`; the identity when `deg g = 1`.
    #[default]
    Coefficient,
    /// The field trace: `a ↦ tr(multiplication by a)`.
    FieldTrace,
    /// Explicit values on `1, x, ..., x^{deg g - 1}`.
    Custom(Functional),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraceOptions {
    pub base: BaseFunctional,
    /// Seed for equal-degree splitting during factorization.
    pub seed: u64,
}

impl BaseFunctional {
    /// The vector `s` with `T(a) = s · a` on `F_p[x]/<g>`.
    fn vector(&self, g: &Poly) -> Result<Vec<u32>> {
        let n = g.degree().ok_or(Error::ConstantPolynomial)?;
        let s = match self {
            BaseFunctional::Coefficient => {
                let mut s = vec![0; n];
                s[n - 1] = 1;
                s
            }
            BaseFunctional::FieldTrace => {
                let residue = Algebra::from_univariate_quotient(g)?;
                let f = residue.field();
                residue
                    .basis()
                    .iter()
                    .map(|e| {
                        let m = residue.mult_matrix(e).expect("basis element");
                        (0..n).fold(0, |acc, i| f.add(acc, m[(i, i)]))
                    })
                    .collect()
            }
            BaseFunctional::Custom(t) => {
                if t.dim() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: t.dim(),
                    });
                }
                let p = g.field().p();
                t.values().iter().map(|v| v % p).collect()
            }
        };
        if s.iter().all(|&v| v == 0) {
            return Err(Error::ZeroFunctional);
        }
        Ok(s)
    }
}

/// Trace on `F_p[x]/<g^r>` for irreducible `g`:
/// `τ(p_0 + p_1 g + ... + p_{r-1} g^{r-1}) = Σ T(p_i)`.
pub fn local_trace(g: &Poly, r: usize, base: &BaseFunctional) -> Result<Trace> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity r must be at least 1".into(),
        ));
    }
    if !g.is_irreducible()? {
        return Err(Error::Reducible(g.field().p()));
    }
    let g = g.monic();
    let s = base.vector(&g)?;
    let algebra = Algebra::from_univariate_quotient(&g.pow(r as u64))?;
    let f = g.field();
    let n = s.len();
    let mut values = Vec::with_capacity(algebra.dim());
    for k in 0..algebra.dim() {
        let digits = Poly::monomial(f, 1, k).g_adic_digits(&g, r)?;
        let v = digits.iter().fold(0, |acc, d| {
            let coeffs: Vec<u32> = (0..n).map(|i| d.coeff(i)).collect();
            f.add(acc, dot(&s, &coeffs, &f))
        });
        values.push(v);
    }
    Trace::new(algebra, Functional::new(values))
}

/// Trace on the direct product: `τ(x_1, ..., x_s) = Σ τ_i(x_i)`.
pub fn product_trace(traces: &[Trace]) -> Result<Trace> {
    let parts: Vec<Algebra> = traces.iter().map(|t| t.algebra().clone()).collect();
    let algebra = Algebra::direct_product(&parts)?;
    let values = traces
        .iter()
        .flat_map(|t| t.values().iter().copied())
        .collect();
    Trace::new(algebra, Functional::new(values))
}

/// Trace on `F_p[x]/<h>`: local traces on the CRT components, summed and
/// pulled back along the projections.
pub fn univariate_trace(h: &Poly, opts: &TraceOptions) -> Result<Trace> {
    univariate_trace_in(h, "x", opts)
}

fn univariate_trace_in(h: &Poly, var: &str, opts: &TraceOptions) -> Result<Trace> {
    let crt = crt_decompose(h, opts.seed)?;
    let locals = crt
        .components
        .iter()
        .map(|c| local_trace(&c.factor, c.multiplicity, &opts.base))
        .collect::<Result<Vec<_>>>()?;
    let product = product_trace(&locals)?;
    let f = h.field();
    let values = crt
        .combined_projection()
        .transpose()
        .mul_vec(product.values(), &f);
    let algebra = Algebra::quotient(h, var)?;
    Trace::new(algebra, Functional::new(values))
}

/// Trace on `R ⊗ S`: `T(α_i ⊗ β_j) = τ_R(α_i) τ_S(β_j)`.
pub fn tensor_trace(left: &Trace, right: &Trace) -> Result<Trace> {
    let algebra = left.algebra().tensor_product(right.algebra())?;
    let f = algebra.field();
    let m = left.values().len();
    let mut values = vec![0; algebra.dim()];
    for (j, &sj) in right.values().iter().enumerate() {
        for (i, &ri) in left.values().iter().enumerate() {
            values[i + m * j] = f.mul(ri, sj);
        }
    }
    Trace::new(algebra, Functional::new(values))
}

/// Trace on `F_p[x_1, ..., x_n]/<g_1(x_1), ..., g_n(x_n)>`, the left fold of
/// [`tensor_trace`] over the univariate traces. The algebra matches
/// [`Algebra::from_generators`].
pub fn multivariate_trace(gens: &[(String, Poly)], opts: &TraceOptions) -> Result<Trace> {
    let ((var, first), rest) = gens.split_first().ok_or(Error::Empty("generator list"))?;
    let mut acc = univariate_trace_in(first, var, opts)?;
    for (var, g) in rest {
        acc = tensor_trace(&acc, &univariate_trace_in(g, var, opts)?)?;
    }
    Ok(acc)
}

/// Change of basis from the digit basis `x^i g^j` (ordered `j`-major: all
/// `i` for `j = 0`, then `j = 1`, ...) of `F_p[x]/<g^r>` to the monomial
/// basis. Column `i + n j` holds the monomial coordinates of `x^i g^j`.
pub fn digit_basis(g: &Poly, r: usize) -> Result<Matrix> {
    let n = g
        .degree()
        .filter(|&d| d > 0)
        .ok_or(Error::ConstantPolynomial)?;
    let f: PrimeField = g.field();
    let g = g.monic();
    let dim = n * r;
    let mut cols = Vec::with_capacity(dim);
    for j in 0..r {
        let gj = g.pow(j as u64);
        for i in 0..n {
            let e = Poly::monomial(f, 1, i).mul(&gj);
            cols.push((0..dim).map(|k| e.coeff(k)).collect());
        }
    }
    Ok(Matrix::from_columns(&cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::verify_trace;

    fn fld(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u32, c: &[i64]) -> Poly {
        Poly::from_signed(fld(p), c)
    }

    #[test]
    fn local_examples() {
        let t = local_trace(&poly(2, &[1, 1]), 2, &BaseFunctional::Coefficient).unwrap();
        assert_eq!(t.values(), &[1, 0]);
        let t = local_trace(&poly(2, &[0, 1]), 2, &BaseFunctional::Coefficient).unwrap();
        assert_eq!(t.values(), &[1, 1]);
        let t = local_trace(&poly(7, &[0, 1]), 1, &BaseFunctional::Coefficient).unwrap();
        assert_eq!(t.values(), &[1]);
    }

    #[test]
    fn local_errors() {
        let base = BaseFunctional::Coefficient;
        assert_eq!(
            local_trace(&poly(2, &[1, 0, 1]), 2, &base).unwrap_err(),
            Error::Reducible(2)
        );
        assert_eq!(
            local_trace(
                &poly(2, &[1, 1]),
                2,
                &BaseFunctional::Custom(Functional::zero(1))
            )
            .unwrap_err(),
            Error::ZeroFunctional
        );
        assert!(matches!(
            local_trace(&poly(2, &[1, 1]), 0, &base),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn local_with_custom_and_field_trace_bases() {
        let g = poly(3, &[1, 0, 1]);
        for base in [
            BaseFunctional::FieldTrace,
            BaseFunctional::Custom(Functional::new(vec![1, 2])),
            BaseFunctional::Custom(Functional::new(vec![1, 0])),
        ] {
            for r in 1..=3 {
                let t = local_trace(&g, r, &base).unwrap();
                assert_eq!(t.algebra().dim(), 2 * r);
            }
        }
        // Field trace of F_9 = F_3[x]/<x^2 + 1>: tr(1) = 2, tr(x) = 0.
        assert_eq!(BaseFunctional::FieldTrace.vector(&g).unwrap(), vec![2, 0]);
    }

    #[test]
    fn product_examples() {
        let id = local_trace(&poly(2, &[0, 1]), 1, &BaseFunctional::Coefficient).unwrap();
        assert_eq!(product_trace(std::slice::from_ref(&id)).unwrap(), id);
        let pair = product_trace(&[id.clone(), id.clone()]).unwrap();
        assert_eq!(pair.values(), &[1, 1]);
        let loc = local_trace(&poly(2, &[1, 1]), 2, &BaseFunctional::Coefficient).unwrap();
        assert_eq!(product_trace(&[id, loc]).unwrap().values(), &[1, 1, 0]);
    }

    #[test]
    fn univariate_examples() {
        let opts = TraceOptions::default();
        let t = univariate_trace(&poly(2, &[0, 1, 0, 1]), &opts).unwrap();
        assert_eq!(t.values(), &[0, 0, 1]);
        let t = univariate_trace(&poly(5, &[3, 1]), &opts).unwrap();
        assert_eq!(t.values(), &[1]);
        let t = univariate_trace(&poly(2, &[1, 1, 1]).pow(2), &opts).unwrap();
        assert_eq!(t.gram().matrix.rows(), 4);
        assert_ne!(t.gram().det, 0);
    }

    #[test]
    fn tensor_examples() {
        let opts = TraceOptions::default();
        let sq = poly(2, &[0, 0, 1]);
        let t = multivariate_trace(&[("u".into(), sq.clone()), ("v".into(), sq.clone())], &opts)
            .unwrap();
        assert_eq!(t.values(), &[1, 1, 1, 1]);

        let a = univariate_trace(&poly(3, &[1, 1, 0, 1]), &opts).unwrap();
        let id = univariate_trace(&poly(3, &[0, 1]), &opts).unwrap();
        assert_eq!(tensor_trace(&a, &id).unwrap().values(), a.values());
        assert_eq!(tensor_trace(&id, &a).unwrap().values(), a.values());

        let g = poly(2, &[1, 1, 1]);
        let fx = local_trace(&g, 1, &BaseFunctional::Coefficient).unwrap();
        let t = tensor_trace(&fx, &fx).unwrap();
        assert_eq!(t.algebra().dim(), 4);
    }

    #[test]
    fn multivariate_examples() {
        let opts = TraceOptions::default();
        let t = multivariate_trace(&[("x".into(), poly(2, &[0, 1]))], &opts).unwrap();
        assert_eq!(t.values(), &[1]);
        let t = multivariate_trace(
            &[
                ("x".into(), poly(2, &[0, 1, 0, 1])),
                ("y".into(), poly(2, &[1, 0, 1])),
            ],
            &opts,
        )
        .unwrap();
        assert_eq!(t.algebra().dim(), 6);
        assert!(verify_trace(t.algebra(), t.functional())
            .unwrap()
            .is_verified());
        assert_eq!(
            multivariate_trace(&[], &opts),
            Err(Error::Empty("generator list"))
        );
    }

    #[test]
    fn field_trace_option_flows_through() {
        let opts = TraceOptions {
            base: BaseFunctional::FieldTrace,
            seed: 7,
        };
        let t = univariate_trace(&poly(2, &[1, 1, 0, 1, 1, 0, 1]), &opts).unwrap();
        assert_eq!(t.algebra().dim(), 6);
    }

    #[test]
    fn tensor_trace_is_basis_independent() {
        // Rebase R, build the tensor trace there, and map it back to canonical
        // coordinates of R ⊗ S: the functional must not change.
        let opts = TraceOptions::default();
        let r = univariate_trace(&poly(3, &[2, 0, 1, 1]), &opts).unwrap();
        let s = univariate_trace(&poly(3, &[0, 0, 1]), &opts).unwrap();
        let direct = tensor_trace(&r, &s).unwrap();

        let ra = r.algebra();
        let basis = vec![
            ra.element(vec![1, 2, 0]).unwrap(),
            ra.element(vec![0, 1, 1]).unwrap(),
            ra.element(vec![2, 0, 1]).unwrap(),
        ];
        let rebased = ra.rebase(&basis).unwrap();
        let tau_new: Vec<u32> = basis.iter().map(|b| r.apply(b)).collect();
        let r_new = Trace::new(rebased, Functional::new(tau_new)).unwrap();
        let via_new = tensor_trace(&r_new, &s).unwrap();

        // canonical α_i ⊗ β_j = Σ_a Q[a][i] γ_a ⊗ β_j with Q = P^{-1}
        let f = ra.field();
        let q = Matrix::from_columns(
            &basis
                .iter()
                .map(|b| b.coords().to_vec())
                .collect::<Vec<_>>(),
        )
        .inverse(&f)
        .unwrap();
        let m = ra.dim();
        for j in 0..s.algebra().dim() {
            for i in 0..m {
                let v = (0..m).fold(0, |acc, a| {
                    f.add(acc, f.mul(q[(a, i)], via_new.values()[a + m * j]))
                });
                assert_eq!(v, direct.values()[i + m * j]);
            }
        }
    }

    #[test]
    fn digit_basis_shape() {
        let g = poly(2, &[1, 1]);
        let p = digit_basis(&g, 2).unwrap();
        // columns: 1, 1 + x
        assert_eq!(p, Matrix::from_rows(&[vec![1, 1], vec![0, 1]]));
    }
}
