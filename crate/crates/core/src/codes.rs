//! Linear codes over a trace-equipped algebra `R` and the ways down to codes
//! over `F_p`: trace codes, subfield subcodes, subfield codes and codes
//! from a defining sequence.
//!
//! Codes are materialized as sorted codeword sets; everything here is meant
//! for small instances where exhaustive enumeration is exact and cheap.

use std::fmt;

use crate::algebra::{AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::limits::{self, pow_sat, Limits};
use crate::linalg::{span, Matrix};
use crate::trace::{discriminant, Trace};

/// A codeword over `R`.
pub type Word = Vec<AlgElement>;

/// The `R`-submodule of `R^n` spanned by `rows`. Rows are kept as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeOverR {
    algebra: Algebra,
    length: usize,
    rows: Vec<Word>,
}

impl CodeOverR {
    pub fn new(algebra: Algebra, length: usize, rows: Vec<Word>) -> Result<Self> {
        for row in &rows {
            if row.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: row.len(),
                });
            }
            for e in row {
                algebra.check_elem(e)?;
            }
        }
        Ok(Self {
            algebra,
            length,
            rows,
        })
    }

    /// `R^n`, generated by the unit vectors.
    pub fn full(algebra: Algebra, length: usize) -> Self {
        let rows = (0..length)
            .map(|i| {
                (0..length)
                    .map(|j| {
                        if i == j {
                            algebra.one()
                        } else {
                            algebra.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            algebra,
            length,
            rows,
        }
    }

    pub fn zero(algebra: Algebra, length: usize) -> Self {
        let rows = vec![vec![algebra.zero(); length]];
        Self {
            algebra,
            length,
            rows,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    fn flatten(&self, w: &[AlgElement]) -> Vec<u32> {
        w.iter().flat_map(|e| e.coords().iter().copied()).collect()
    }

    fn unflatten(&self, v: &[u32]) -> Word {
        v.chunks(self.algebra.dim())
            .map(|c| {
                self.algebra
                    .element(c.to_vec())
                    .expect("chunk has algebra dimension")
            })
            .collect()
    }
}

/// A linear code over `F_p` with its full codeword set. Equality compares
/// codeword sets; generator matrices are not part of a code's identity.
#[derive(Debug, Clone)]
pub struct CodeOverF {
    field: PrimeField,
    length: usize,
    codewords: Vec<Vec<u32>>,
    generators: Option<Vec<Vec<u32>>>,
}

impl PartialEq for CodeOverF {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.length == other.length
            && self.codewords == other.codewords
    }
}

impl Eq for CodeOverF {}

/// `[n, k, d]`; `d` is `None` for the zero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{}, {}, {}]", self.n, self.k, d),
            None => write!(f, "[{}, {}, ∞]", self.n, self.k),
        }
    }
}

impl CodeOverF {
    /// Row space of `generators`.
    pub fn from_generators(
        field: PrimeField,
        length: usize,
        generators: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let p = field.p();
        let generators: Vec<Vec<u32>> = generators
            .into_iter()
            .map(|g| g.into_iter().map(|v| v % p).collect())
            .collect();
        for g in &generators {
            if g.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: g.len(),
                });
            }
        }
        let codewords = span(&generators, length, &field);
        Ok(Self {
            field,
            length,
            codewords,
            generators: Some(generators),
        })
    }

    /// A code given by its codeword set; the set is sorted and deduplicated
    /// but not closed up.
    pub fn from_codewords(
        field: PrimeField,
        length: usize,
        codewords: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let p = field.p();
        let mut cw: Vec<Vec<u32>> = codewords
            .into_iter()
            .map(|c| c.into_iter().map(|v| v % p).collect())
            .collect();
        for c in &cw {
            if c.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: c.len(),
                });
            }
        }
        cw.sort();
        cw.dedup();
        Ok(Self {
            field,
            length,
            codewords: cw,
            generators: None,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn codewords(&self) -> &[Vec<u32>] {
        &self.codewords
    }

    pub fn generators(&self) -> Option<&[Vec<u32>]> {
        self.generators.as_deref()
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn contains(&self, w: &[u32]) -> bool {
        self.codewords
            .binary_search_by(|c| c.as_slice().cmp(w))
            .is_ok()
    }

    /// Exhaustive closure check under addition and scalar multiplication.
    pub fn is_linear(&self) -> bool {
        let f = self.field;
        if !self.contains(&vec![0; self.length]) {
            return false;
        }
        for a in &self.codewords {
            for c in 1..f.p() {
                let s: Vec<u32> = a.iter().map(|&x| f.mul(c, x)).collect();
                if !self.contains(&s) {
                    return false;
                }
            }
            for b in &self.codewords {
                let s: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Euclidean dual, via the null space of the codeword matrix.
    pub fn dual(&self) -> CodeOverF {
        let mut rows = self.codewords.clone();
        if rows.is_empty() {
            rows.push(vec![0; self.length]);
        }
        let basis = Matrix::from_rows(&rows).nullspace(&self.field);
        Self::from_generators(self.field, self.length, basis)
            .expect("null space vectors have code length")
    }

    /// `(n, k, d)` with `k = log_p |C|`.
    pub fn params(&self, limits: &Limits) -> Result<CodeParams> {
        limits::check(
            "code-params",
            self.codewords.len() as u128,
            limits.code_params,
        )?;
        let p = self.field.p() as usize;
        let mut size = self.codewords.len();
        let mut k = 0;
        while size > 1 && size.is_multiple_of(p) {
            size /= p;
            k += 1;
        }
        if size != 1 {
            return Err(Error::NotLinear(self.codewords.len(), self.field.p()));
        }
        let d = self
            .codewords
            .iter()
            .map(|c| c.iter().filter(|&&v| v != 0).count())
            .filter(|&w| w > 0)
            .min();
        Ok(CodeParams {
            n: self.length,
            k,
            d,
        })
    }

    /// Whether shifting every codeword cyclically by `shift` positions maps
    /// the code onto itself.
    pub fn is_shift_invariant(&self, shift: usize) -> bool {
        let n = self.length;
        if n == 0 {
            return true;
        }
        self.codewords.iter().all(|c| {
            let shifted: Vec<u32> = (0..n).map(|j| c[(j + n - shift % n) % n]).collect();
            self.contains(&shifted)
        })
    }

    /// Smallest proper divisor `ℓ` of `n` such that the code is invariant
    /// under the cyclic shift by `ℓ`. A length-1 code reports 1.
    pub fn quasicyclic_index(&self) -> Option<usize> {
        let n = self.length;
        if n == 1 {
            return Some(1);
        }
        (1..n)
            .filter(|l| n.is_multiple_of(*l))
            .find(|&l| self.is_shift_invariant(l))
    }
}

/// All `R`-combinations of the rows, sorted lexicographically by coordinates.
/// Since `R` is spanned by its basis over `F_p`, this is the `F_p`-span of
/// `{α_a · row}`.
pub fn enumerate_codewords(code: &CodeOverR, limits: &Limits) -> Result<Vec<Word>> {
    let alg = &code.algebra;
    limits::check(
        "codeword-enumeration",
        pow_sat(alg.order(), code.rows.len()),
        limits.codeword_enumeration,
    )?;
    let gens: Vec<Vec<u32>> = code
        .rows
        .iter()
        .flat_map(|row| {
            alg.basis().into_iter().map(move |b| {
                let scaled: Word = row.iter().map(|e| alg.mul(&b, e)).collect();
                code.flatten(&scaled)
            })
        })
        .collect();
    let flat = span(&gens, code.length * alg.dim(), &alg.field());
    Ok(flat.iter().map(|v| code.unflatten(v)).collect())
}

/// `{x ∈ R^n : Σ x_i y_i = 0 for every row y}`, by exhaustive search.
pub fn dual_code(code: &CodeOverR, limits: &Limits) -> Result<Vec<Word>> {
    let alg = &code.algebra;
    let f = alg.field();
    let n = code.length;
    let m = alg.dim();
    limits::check("dual-code", pow_sat(alg.order(), n), limits.dual_code)?;
    // mats[r][i] = multiplication by rows[r][i]
    let mats: Vec<Vec<Matrix>> = code
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| alg.mult_matrix(e))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let total = pow_sat(alg.order(), n);
    let mut out = Vec::new();
    let mut x = vec![0u32; n * m];
    for idx in 0..total {
        if idx > 0 {
            // odometer increment, last coordinate fastest
            for slot in x.iter_mut().rev() {
                *slot += 1;
                if *slot < f.p() {
                    break;
                }
                *slot = 0;
            }
        }
        let orthogonal = mats.iter().all(|row| {
            let mut acc = vec![0u32; m];
            for (i, mat) in row.iter().enumerate() {
                let prod = mat.mul_vec(&x[i * m..(i + 1) * m], &f);
                for (a, b) in acc.iter_mut().zip(prod) {
                    *a = f.add(*a, b);
                }
            }
            acc.iter().all(|&v| v == 0)
        });
        if orthogonal {
            out.push(code.unflatten(&x));
        }
    }
    Ok(out)
}

/// `{(τ(c_1), ..., τ(c_n)) : c ∈ C}`.
pub fn trace_code(trace: &Trace, code: &CodeOverR, limits: &Limits) -> Result<CodeOverF> {
    check_same_algebra(trace, code)?;
    let words = enumerate_codewords(code, limits)?;
    apply_trace(trace, code.length, &words)
}

fn apply_trace(trace: &Trace, length: usize, words: &[Word]) -> Result<CodeOverF> {
    let image = words
        .iter()
        .map(|w| w.iter().map(|c| trace.apply(c)).collect())
        .collect();
    CodeOverF::from_codewords(trace.algebra().field(), length, image)
}

fn check_same_algebra(trace: &Trace, code: &CodeOverR) -> Result<()> {
    let (a, b) = (trace.algebra(), code.algebra());
    a.check_field(b)?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: a.dim(),
        });
    }
    if !a.same_structure(b) {
        return Err(Error::InvalidArgument(
            "trace and code live on different algebras".into(),
        ));
    }
    Ok(())
}

/// `C ∩ F_p^n`, with `F_p` embedded as the multiples of the unit.
pub fn subfield_subcode(code: &CodeOverR, limits: &Limits) -> Result<CodeOverF> {
    let alg = code.algebra();
    let words = enumerate_codewords(code, limits)?;
    let scalars = words
        .iter()
        .filter_map(|w| {
            w.iter()
                .map(|e| alg.as_scalar(e))
                .collect::<Option<Vec<u32>>>()
        })
        .collect();
    CodeOverF::from_codewords(alg.field(), code.length, scalars)
}

/// Compares `τ(C^⊥)` with `(C ∩ F_p^n)^⊥` as codeword sets.
pub fn check_duality(trace: &Trace, code: &CodeOverR, limits: &Limits) -> Result<bool> {
    duality_sides(trace, code, limits).map(|(l, r)| l == r)
}

/// Both sides of the trace/subfield-subcode duality: `(τ(C^⊥), (C|_F)^⊥)`.
pub fn duality_sides(
    trace: &Trace,
    code: &CodeOverR,
    limits: &Limits,
) -> Result<(CodeOverF, CodeOverF)> {
    check_same_algebra(trace, code)?;
    let dual = dual_code(code, limits)?;
    let lhs = apply_trace(trace, code.length, &dual)?;
    let rhs = subfield_subcode(code, limits)?.dual();
    Ok((lhs, rhs))
}

/// `C_D = {(τ(x d_1), ..., τ(x d_n)) : x ∈ R}`.
pub fn defining_sequence_code(trace: &Trace, sequence: &[AlgElement]) -> Result<CodeOverF> {
    if sequence.is_empty() {
        return Err(Error::Empty("defining sequence"));
    }
    let alg = trace.algebra();
    for d in sequence {
        alg.check_elem(d)?;
    }
    let gens = alg
        .basis()
        .iter()
        .map(|b| {
            sequence
                .iter()
                .map(|d| trace.apply(&alg.mul(b, d)))
                .collect()
        })
        .collect();
    CodeOverF::from_generators(alg.field(), sequence.len(), gens)
}

/// Subfield code from trace pairings: for every generator row `g_i` the block
/// with rows `(τ(g_i1 α_k), ..., τ(g_in α_k))`, `k = 1..m`.
pub fn subfield_code(code: &CodeOverR, trace: &Trace, basis: &[AlgElement]) -> Result<CodeOverF> {
    check_same_algebra(trace, code)?;
    if discriminant(trace, basis)? == 0 {
        return Err(Error::NotABasis);
    }
    let alg = trace.algebra();
    let gens = code
        .rows
        .iter()
        .flat_map(|row| {
            basis
                .iter()
                .map(move |b| row.iter().map(|g| trace.apply(&alg.mul(g, b))).collect())
        })
        .collect();
    CodeOverF::from_generators(alg.field(), code.length, gens)
}

/// Subfield code by definition: every generator entry replaced by its
/// coordinate column relative to `basis`.
pub fn subfield_code_by_expansion(code: &CodeOverR, basis: &[AlgElement]) -> Result<CodeOverF> {
    let alg = code.algebra();
    if basis.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: basis.len(),
        });
    }
    for b in basis {
        alg.check_elem(b)?;
    }
    let f = alg.field();
    let change = Matrix::from_columns(
        &basis
            .iter()
            .map(|b| b.coords().to_vec())
            .collect::<Vec<_>>(),
    );
    let inv = change.inverse(&f).ok_or(Error::NotABasis)?;
    let mut gens = Vec::with_capacity(code.rows.len() * alg.dim());
    for row in &code.rows {
        let cols: Vec<Vec<u32>> = row.iter().map(|g| inv.mul_vec(g.coords(), &f)).collect();
        for a in 0..alg.dim() {
            gens.push(cols.iter().map(|c| c[a]).collect());
        }
    }
    CodeOverF::from_generators(f, code.length, gens)
}
