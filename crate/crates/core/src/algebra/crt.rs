//! Chinese remainder splitting `F_p[x]/<h> ≅ ∏ F_p[x]/<h_i^{r_i}>`.

use super::{AlgElement, Algebra};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::poly::Poly;

/// One local factor `F_p[x]/<h_i^{r_i}>` of a univariate quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtComponent {
    pub algebra: Algebra,
    /// Monic irreducible `h_i`.
    pub factor: Poly,
    /// `r_i`.
    pub multiplicity: usize,
    /// Reduction map from the parent's coordinates, `dim_i × m`.
    pub projection: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtDecomposition {
    /// `F_p[x]/<h>` with `h` made monic.
    pub parent: Algebra,
    /// Ordered by `(deg h_i, coefficients of h_i, r_i)`.
    pub components: Vec<CrtComponent>,
}

/// Splits `F_p[x]/<h>` along the irreducible factorization of `h`.
pub fn crt_decompose(h: &Poly, seed: u64) -> Result<CrtDecomposition> {
    let parent = Algebra::from_univariate_quotient(h)?;
    let m = parent.dim();
    let fac = h.factor_with_seed(seed)?;
    let mut components = Vec::with_capacity(fac.factors.len());
    for (g, r) in fac.factors {
        let modulus = g.pow(r as u64);
        let algebra = Algebra::from_univariate_quotient(&modulus)?;
        let d = algebra.dim();
        // Column k: coordinates of x^k mod h_i^{r_i}.
        let mut proj = Matrix::zeros(d, m);
        let x = Poly::x(h.field());
        let mut cur = Poly::one(h.field()).rem(&modulus)?;
        for k in 0..m {
            for i in 0..d {
                proj[(i, k)] = cur.coeff(i);
            }
            cur = cur.mul(&x).rem(&modulus)?;
        }
        components.push(CrtComponent {
            algebra,
            factor: g,
            multiplicity: r,
            projection: proj,
        });
    }
    Ok(CrtDecomposition { parent, components })
}

impl CrtDecomposition {
    /// Images of `a` in each component.
    pub fn project(&self, a: &AlgElement) -> Result<Vec<AlgElement>> {
        self.parent.check_elem(a)?;
        let f = self.parent.field();
        self.components
            .iter()
            .map(|c| c.algebra.element(c.projection.mul_vec(a.coords(), &f)))
            .collect()
    }

    /// The direct product of the components.
    pub fn product_algebra(&self) -> Result<Algebra> {
        let parts: Vec<Algebra> = self.components.iter().map(|c| c.algebra.clone()).collect();
        Algebra::direct_product(&parts)
    }

    /// All projections stacked into one `m × m` map onto the product's
    /// coordinates.
    pub fn combined_projection(&self) -> Matrix {
        let rows: Vec<Vec<u32>> = self
            .components
            .iter()
            .flat_map(|c| c.projection.to_rows())
            .collect();
        Matrix::from_rows(&rows)
    }

    /// `∏ h_i^{r_i}`.
    pub fn modulus_product(&self) -> Poly {
        let f = self.parent.field();
        self.components.iter().fold(Poly::one(f), |acc, c| {
            acc.mul(&c.factor.pow(c.multiplicity as u64))
        })
    }
}
