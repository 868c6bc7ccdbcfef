//! `F_p`-valued traces: nonzero linear functionals whose kernel contains no
//! nonzero ideal, equivalently whose pairing `(x, y) ↦ τ(xy)` is
//! nondegenerate.
//!
//! [`verify_trace`] decides the property through the Gram determinant and
//! [`ideal_oracle`] decides it by brute force; the two must always agree.
//! The constructors in [`construct`] build traces for quotients, products
//! and tensor products, and [`duality`] holds what a trace buys you: dual
//! bases, discriminants and the representation of arbitrary functionals.

pub mod construct;
pub mod duality;

use crate::algebra::{AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::linalg::{dot, Matrix};

pub use construct::{
    digit_basis, local_trace, multivariate_trace, product_trace, tensor_trace, univariate_trace,
    BaseFunctional, TraceOptions,
};
pub use duality::{discriminant, dual_basis, represent_functional};

/// Values of a linear map `A → F_p` on the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional {
    values: Vec<u32>,
}

impl Functional {
    pub fn new(values: Vec<u32>) -> Self {
        Self { values }
    }

    /// Validated against `algebra`: right length, entries reduced.
    pub fn on(algebra: &Algebra, values: Vec<u32>) -> Result<Self> {
        if values.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: values.len(),
            });
        }
        let p = algebra.field().p();
        Ok(Self::new(values.into_iter().map(|v| v % p).collect()))
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `f(a)`. Panics on a dimension mismatch.
    pub fn apply(&self, algebra: &Algebra, a: &AlgElement) -> u32 {
        assert_eq!(a.dim(), self.dim(), "functional dimension");
        dot(&self.values, a.coords(), &algebra.field())
    }

    /// The functional `x ↦ f(b x)`.
    pub fn shifted(&self, algebra: &Algebra, b: &AlgElement) -> Functional {
        Functional::new(
            algebra
                .basis()
                .iter()
                .map(|e| self.apply(algebra, &algebra.mul(b, e)))
                .collect(),
        )
    }
}

/// `[f(α_i α_j)]`, symmetric for a commutative algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub matrix: Matrix,
    pub det: u32,
}

impl GramMatrix {
    /// Gram matrix of `f` over an arbitrary list of elements.
    pub fn of_elements(algebra: &Algebra, f: &Functional, elems: &[AlgElement]) -> Self {
        let n = elems.len();
        let mut matrix = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = f.apply(algebra, &algebra.mul(&elems[i], &elems[j]));
                matrix[(i, j)] = v;
                matrix[(j, i)] = v;
            }
        }
        let det = if n == 0 {
            1
        } else {
            matrix.det(&algebra.field())
        };
        Self { matrix, det }
    }

    /// Gram matrix over the canonical basis, straight from the structure
    /// constants.
    pub fn of(algebra: &Algebra, f: &Functional) -> Self {
        let m = algebra.dim();
        let fld = algebra.field();
        let mut matrix = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                matrix[(i, j)] = dot(algebra.structure_constants(i, j), f.values(), &fld);
            }
        }
        let det = matrix.det(&fld);
        Self { matrix, det }
    }

    pub fn is_nonsingular(&self) -> bool {
        self.det != 0
    }
}

/// Outcome of [`verify_trace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified(GramMatrix),
    /// `witness` is nonzero and `f(x · witness) = 0` for every `x`, so the
    /// ideal it generates lies in the kernel.
    Rejected {
        gram: GramMatrix,
        witness: AlgElement,
    },
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified(_))
    }

    pub fn gram(&self) -> &GramMatrix {
        match self {
            Verdict::Verified(g) | Verdict::Rejected { gram: g, .. } => g,
        }
    }
}

/// Decides the trace property via the Gram determinant.
pub fn verify_trace(algebra: &Algebra, f: &Functional) -> Result<Verdict> {
    if f.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            got: f.dim(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroFunctional);
    }
    let gram = GramMatrix::of(algebra, f);
    if gram.is_nonsingular() {
        return Ok(Verdict::Verified(gram));
    }
    let null = gram.matrix.nullspace(&algebra.field());
    let witness = algebra.element(null.into_iter().next().expect("singular Gram has a kernel"))?;
    Ok(Verdict::Rejected { gram, witness })
}

/// Brute-force ideal check: true iff no nonzero `y` has `f(α_i y) = 0` for
/// all basis elements `α_i`. Works from the multiplication alone.
pub fn ideal_oracle(algebra: &Algebra, f: &Functional, limits: &Limits) -> Result<bool> {
    if f.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            got: f.dim(),
        });
    }
    limits::check("ideal-oracle", algebra.order(), limits.ideal_oracle)?;
    let basis = algebra.basis();
    let degenerate = algebra.elements().skip(1).any(|y| {
        basis
            .iter()
            .all(|b| f.apply(algebra, &algebra.mul(b, &y)) == 0)
    });
    Ok(!degenerate)
}

/// First nonzero functional, in lexicographic order of value vectors, that
/// passes [`verify_trace`].
pub fn search_traces(algebra: &Algebra, limits: &Limits) -> Result<Option<Functional>> {
    limits::check("trace-search", algebra.order(), limits.trace_search)?;
    for idx in 1..algebra.order() {
        let f = Functional::new(algebra.element_at(idx).into_coords());
        if verify_trace(algebra, &f)?.is_verified() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// A functional together with the algebra it lives on and a certificate
/// (nonsingular Gram matrix) that it is a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    algebra: Algebra,
    functional: Functional,
    gram: GramMatrix,
}

impl Trace {
    /// Verifies `functional`; fails with [`Error::NotATrace`] on rejection.
    pub fn new(algebra: Algebra, functional: Functional) -> Result<Self> {
        match verify_trace(&algebra, &functional)? {
            Verdict::Verified(gram) => Ok(Self {
                algebra,
                functional,
                gram,
            }),
            Verdict::Rejected { .. } => Err(Error::NotATrace),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn functional(&self) -> &Functional {
        &self.functional
    }

    pub fn values(&self) -> &[u32] {
        self.functional.values()
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn apply(&self, a: &AlgElement) -> u32 {
        self.functional.apply(&self.algebra, a)
    }

    pub fn into_parts(self) -> (Algebra, Functional) {
        (self.algebra, self.functional)
    }
}
