//! Finite-dimensional commutative unital `F_p`-algebras in structure-constant
//! form.
//!
//! Every construction (univariate quotient, direct product, tensor product,
//! multivariate quotient, explicit table) lands in the same [`Algebra`]
//! representation: the coordinates of every product `α_i α_j` of basis
//! elements. How an algebra was built is kept in its [`Provenance`].

mod crt;

use std::fmt;

pub use crt::{crt_decompose, CrtComponent, CrtDecomposition};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::poly::Poly;

/// Coordinates of an element relative to its algebra's canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElement {
    coords: Vec<u32>,
}

impl AlgElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// How an algebra was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `F_p[var]/<modulus>`, modulus monic.
    Quotient { var: String, modulus: Poly },
    /// Direct product of the parts, bases concatenated in order.
    Product(Vec<Algebra>),
    /// Tensor product, basis index `i + dim(left) * j`.
    Tensor(Box<Algebra>, Box<Algebra>),
    /// Entered directly as a multiplication table.
    Table,
    /// `parent` re-expressed in a new basis; column `a` of `basis` holds the
    /// parent coordinates of new basis element `a`.
    Rebased { parent: Box<Algebra>, basis: Matrix },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` = coordinates of `α_i α_j`.
    table: Vec<Vec<u32>>,
    unit: Vec<u32>,
    provenance: Provenance,
}

impl Algebra {
    /// `F_p[var]/<h>`, basis `1, x, ..., x^{m-1}`. `h` is made monic.
    pub fn quotient(h: &Poly, var: &str) -> Result<Self> {
        let m = match h.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(m) => m,
        };
        let field = h.field();
        let h = h.monic();
        // x^k mod h for k < 2m - 1
        let mut powers = Vec::with_capacity(2 * m - 1);
        let mut cur = Poly::one(field);
        let x = Poly::x(field);
        for _ in 0..(2 * m - 1) {
            powers.push((0..m).map(|k| cur.coeff(k)).collect::<Vec<_>>());
            cur = cur.mul(&x).rem(&h)?;
        }
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(powers[i + j].clone());
            }
        }
        let mut unit = vec![0; m];
        unit[0] = 1;
        let labels = (0..m)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            })
            .collect();
        Ok(Self {
            field,
            dim: m,
            labels,
            table,
            unit,
            provenance: Provenance::Quotient {
                var: var.to_string(),
                modulus: h,
            },
        })
    }

    /// `F_p[x]/<h>`.
    pub fn from_univariate_quotient(h: &Poly) -> Result<Self> {
        Self::quotient(h, "x")
    }

    /// Algebra from an explicit multiplication table. `table[i][j]` holds the
    /// coordinates of `α_i α_j`. When `unit` is `None` it is solved for.
    /// Commutativity, associativity and the unit law are checked.
    pub fn from_table(
        field: PrimeField,
        table: Vec<Vec<Vec<u32>>>,
        unit: Option<Vec<u32>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let dim = table.len();
        if dim == 0 {
            return Err(Error::Empty("multiplication table"));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidAlgebra(format!(
                    "table row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, entry) in row.into_iter().enumerate() {
                if entry.len() != dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "table entry ({i},{j}) has {} coordinates, expected {dim}",
                        entry.len()
                    )));
                }
                flat.push(entry.into_iter().map(|v| v % field.p()).collect());
            }
        }
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: l.len(),
                })
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let mut alg = Self {
            field,
            dim,
            labels,
            table: flat,
            unit: vec![0; dim],
            provenance: Provenance::Table,
        };
        alg.unit = match unit {
            Some(u) if u.len() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: u.len(),
                })
            }
            Some(u) => u.into_iter().map(|v| v % field.p()).collect(),
            None => alg.solve_unit()?,
        };
        if !alg.is_commutative() {
            return Err(Error::InvalidAlgebra("table is not commutative".into()));
        }
        if !alg.is_associative() {
            return Err(Error::InvalidAlgebra("table is not associative".into()));
        }
        if !alg.satisfies_unit_law() {
            return Err(Error::InvalidAlgebra("unit law fails".into()));
        }
        Ok(alg)
    }

    /// Solve `e α_j = α_j` for all `j` as one linear system in `e`.
    fn solve_unit(&self) -> Result<Vec<u32>> {
        let m = self.dim;
        let mut sys = Matrix::zeros(m * m, m);
        let mut rhs = vec![0; m * m];
        for j in 0..m {
            for k in 0..m {
                for i in 0..m {
                    sys[(j * m + k, i)] = self.table[i * m + j][k];
                }
                rhs[j * m + k] = u32::from(j == k);
            }
        }
        sys.solve(&rhs, &self.field)
            .ok_or_else(|| Error::InvalidAlgebra("table has no multiplicative unit".into()))
    }

    /// Direct product; basis is the concatenation of the parts' bases.
    pub fn direct_product(parts: &[Algebra]) -> Result<Self> {
        let first = parts.first().ok_or(Error::Empty("direct product parts"))?;
        for a in parts {
            first.check_field(a)?;
        }
        if parts.len() == 1 {
            return Ok(first.clone());
        }
        let dim: usize = parts.iter().map(|a| a.dim).sum();
        let mut table = vec![vec![0; dim]; dim * dim];
        let mut unit = Vec::with_capacity(dim);
        let mut labels = Vec::with_capacity(dim);
        let mut off = 0;
        for (idx, a) in parts.iter().enumerate() {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let entry = &mut table[(off + i) * dim + off + j];
                    entry[off..off + a.dim].copy_from_slice(&a.table[i * a.dim + j]);
                }
            }
            unit.extend_from_slice(&a.unit);
            labels.extend(a.labels.iter().map(|l| format!("{l}@{idx}")));
            off += a.dim;
        }
        Ok(Self {
            field: first.field,
            dim,
            labels,
            table,
            unit,
            provenance: Provenance::Product(parts.to_vec()),
        })
    }

    /// `self ⊗ other`. Basis pair `(i, j)` sits at index `i + dim(self) * j`,
    /// so all of `self`'s basis is paired with `other`'s first element before
    /// moving on to the second.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Self> {
        self.check_field(other)?;
        let f = self.field;
        let (m, n) = (self.dim, other.dim);
        let dim = m * n;
        let idx = |i: usize, j: usize| i + m * j;
        let mut table = vec![vec![0; dim]; dim * dim];
        for j in 0..n {
            for i in 0..m {
                for l in 0..n {
                    for k in 0..m {
                        let left = &self.table[i * m + k];
                        let right = &other.table[j * n + l];
                        let entry = &mut table[idx(i, j) * dim + idx(k, l)];
                        for (b, &rb) in right.iter().enumerate() {
                            if rb == 0 {
                                continue;
                            }
                            for (a, &la) in left.iter().enumerate() {
                                let e = &mut entry[idx(a, b)];
                                *e = f.add(*e, f.mul(la, rb));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0; dim];
        let mut labels = Vec::with_capacity(dim);
        for j in 0..n {
            for i in 0..m {
                unit[idx(i, j)] = f.mul(self.unit[i], other.unit[j]);
                labels.push(match (self.labels[i].as_str(), other.labels[j].as_str()) {
                    ("1", r) => r.to_string(),
                    (l, "1") => l.to_string(),
                    (l, r) => format!("{l}*{r}"),
                });
            }
        }
        Ok(Self {
            field: f,
            dim,
            labels,
            table,
            unit,
            provenance: Provenance::Tensor(Box::new(self.clone()), Box::new(other.clone())),
        })
    }

    /// `F_p[x_1, ..., x_n]/<g_1(x_1), ..., g_n(x_n)>` as the left-folded tensor
    /// product of the univariate quotients.
    pub fn from_generators(gens: &[(String, Poly)]) -> Result<Self> {
        let ((var, first), rest) = gens.split_first().ok_or(Error::Empty("generator list"))?;
        let mut acc = Self::quotient(first, var)?;
        for (var, g) in rest {
            acc = acc.tensor_product(&Self::quotient(g, var)?)?;
        }
        Ok(acc)
    }

    /// Same as [`Algebra::from_generators`] with variables named `x` (one
    /// modulus) or `x1, x2, ...`.
    pub fn from_multivariate(moduli: &[Poly]) -> Result<Self> {
        let gens: Vec<(String, Poly)> = match moduli {
            [g] => vec![("x".to_string(), g.clone())],
            _ => moduli
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("x{}", i + 1), g.clone()))
                .collect(),
        };
        Self::from_generators(&gens)
    }

    /// The same algebra expressed in the basis `basis` (given in current
    /// coordinates).
    pub fn rebase(&self, basis: &[AlgElement]) -> Result<Self> {
        if basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: basis.len(),
            });
        }
        for b in basis {
            self.check_elem(b)?;
        }
        let cols: Vec<Vec<u32>> = basis.iter().map(|b| b.coords.clone()).collect();
        let change = Matrix::from_columns(&cols);
        let inv = change.inverse(&self.field).ok_or(Error::NotABasis)?;
        let m = self.dim;
        let mut table = Vec::with_capacity(m * m);
        for a in basis {
            for b in basis {
                table.push(inv.mul_vec(self.mul(a, b).coords(), &self.field));
            }
        }
        Ok(Self {
            field: self.field,
            dim: m,
            labels: (0..m).map(|i| format!("b{i}")).collect(),
            table,
            unit: inv.mul_vec(&self.unit, &self.field),
            provenance: Provenance::Rebased {
                parent: Box::new(self.clone()),
                basis: change,
            },
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Coordinates of `α_i α_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[u32] {
        &self.table[i * self.dim + j]
    }

    /// Full table as nested vectors, `[i][j] -> coords`.
    pub fn table(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.table[i * self.dim + j].clone())
                    .collect()
            })
            .collect()
    }

    /// `p^dim`, saturating.
    pub fn order(&self) -> u128 {
        (self.field.p() as u128).saturating_pow(self.dim as u32)
    }

    pub(crate) fn check_field(&self, other: &Algebra) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        Ok(())
    }

    /// Same field and structure constants, ignoring labels and provenance.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.table == other.table && self.unit == other.unit
    }

    pub fn check_elem(&self, a: &AlgElement) -> Result<()> {
        if a.coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.coords.len(),
            });
        }
        Ok(())
    }

    /// Validated element from raw coordinates (reduced mod `p`).
    pub fn element(&self, coords: Vec<u32>) -> Result<AlgElement> {
        let e = AlgElement {
            coords: coords.into_iter().map(|v| v % self.field.p()).collect(),
        };
        self.check_elem(&e)?;
        Ok(e)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement {
            coords: vec![0; self.dim],
        }
    }

    pub fn one(&self) -> AlgElement {
        AlgElement {
            coords: self.unit.clone(),
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut coords = vec![0; self.dim];
        coords[i] = 1;
        AlgElement { coords }
    }

    pub fn basis(&self) -> Vec<AlgElement> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    /// `c · 1`.
    pub fn scalar(&self, c: u32) -> AlgElement {
        self.scale(&self.one(), c)
    }

    /// `Some(c)` when `a = c · 1`.
    pub fn as_scalar(&self, a: &AlgElement) -> Option<u32> {
        let pivot = self.unit.iter().position(|&u| u != 0)?;
        let c = self
            .field
            .mul(a.coords[pivot], self.field.inv(self.unit[pivot]).ok()?);
        (self.scale(&self.one(), c) == *a).then_some(c)
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        AlgElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.field.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        AlgElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.field.sub(x, y))
                .collect(),
        }
    }

    pub fn scale(&self, a: &AlgElement, c: u32) -> AlgElement {
        AlgElement {
            coords: a.coords.iter().map(|&x| self.field.mul(x, c)).collect(),
        }
    }

    /// Product via structure constants. Panics on a dimension mismatch; use
    /// [`Algebra::element`] to validate foreign input first.
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        assert_eq!(a.coords.len(), self.dim, "element dimension");
        assert_eq!(b.coords.len(), self.dim, "element dimension");
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.dim];
        for (i, &ai) in a.coords.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as u64 * bj as u64 % p;
                for (k, &t) in self.table[i * self.dim + j].iter().enumerate() {
                    acc[k] = (acc[k] + c * t as u64) % p;
                }
            }
        }
        AlgElement {
            coords: acc.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn pow(&self, a: &AlgElement, mut e: u64) -> AlgElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates `g(a)` by Horner's rule.
    pub fn eval_poly(&self, g: &Poly, a: &AlgElement) -> AlgElement {
        g.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, a), &self.scalar(c))
        })
    }

    /// Element number `index` in the enumeration order of
    /// [`Algebra::elements`].
    pub fn element_at(&self, mut index: u128) -> AlgElement {
        let p = self.field.p() as u128;
        let mut coords = vec![0; self.dim];
        for c in coords.iter_mut().rev() {
            *c = (index % p) as u32;
            index /= p;
        }
        AlgElement { coords }
    }

    /// All `p^dim` elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = AlgElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// Matrix of `x ↦ a x`; column `j` holds the coordinates of `a α_j`.
    pub fn mult_matrix(&self, a: &AlgElement) -> Result<Matrix> {
        self.check_elem(a)?;
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_element(j)).coords)
            .collect();
        Ok(Matrix::from_columns(&cols))
    }

    /// Monic generator of the annihilator of the multiplication operator of
    /// `a`: the first linear dependency among `I, M, M^2, ...`.
    pub fn minimal_polynomial(&self, a: &AlgElement) -> Result<Poly> {
        let m = self.mult_matrix(a)?;
        Ok(matrix_minimal_polynomial(&m, &self.field))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i])
        })
    }

    pub fn is_associative(&self) -> bool {
        let basis = self.basis();
        for a in &basis {
            for b in &basis {
                let ab = self.mul(a, b);
                for c in &basis {
                    if self.mul(&ab, c) != self.mul(a, &self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn satisfies_unit_law(&self) -> bool {
        let one = self.one();
        self.basis().iter().all(|b| self.mul(&one, b) == *b)
    }

    /// Human-readable element using the basis labels, e.g. `1 + x^2`.
    pub fn format_element(&self, a: &AlgElement) -> String {
        let terms: Vec<String> = a
            .coords
            .iter()
            .zip(&self.labels)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, l)| match (c, l.as_str()) {
                (_, "1") => c.to_string(),
                (1, _) => l.clone(),
                _ => format!("{c}{l}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Provenance::Quotient { var, modulus } => {
                write!(f, "{}[{var}]/<{}>", self.field, modulus.display_with(var))
            }
            Provenance::Product(parts) => {
                let s: Vec<String> = parts.iter().map(|p| format!("({p})")).collect();
                f.write_str(&s.join(" x "))
            }
            Provenance::Tensor(a, b) => write!(f, "({a}) ⊗ ({b})"),
            Provenance::Table => write!(f, "{}-algebra of dimension {}", self.field, self.dim),
            Provenance::Rebased { parent, .. } => write!(f, "{parent} (rebased)"),
        }
    }
}

/// Minimal polynomial of a square matrix by searching for the first power
/// that is a linear combination of the lower ones.
pub fn matrix_minimal_polynomial(m: &Matrix, f: &PrimeField) -> Poly {
    let n = m.rows();
    let flatten = |a: &Matrix| a.to_rows().concat();
    let mut powers = vec![flatten(&Matrix::identity(n))];
    let mut cur = Matrix::identity(n);
    for d in 1..=n {
        cur = cur.mul(m, f);
        let target = flatten(&cur);
        let system = Matrix::from_columns(&powers);
        if let Some(c) = system.solve(&target, f) {
            // M^d = sum c_k M^k  =>  x^d - sum c_k x^k
            let mut coeffs: Vec<u32> = c.iter().map(|&v| f.neg(v)).collect();
            coeffs.push(1);
            debug_assert_eq!(coeffs.len(), d + 1);
            return Poly::new(*f, coeffs);
        }
        powers.push(target);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fld(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u32, c: &[i64]) -> Poly {
        Poly::from_signed(fld(p), c)
    }

    fn assert_axioms(a: &Algebra) {
        assert!(a.is_commutative(), "{a}");
        assert!(a.is_associative(), "{a}");
        assert!(a.satisfies_unit_law(), "{a}");
    }

    #[test]
    fn univariate_quotient_examples() {
        let a = Algebra::from_univariate_quotient(&poly(2, &[1, 0, 1])).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.structure_constants(1, 1), &[1, 0]);

        let r2 = Algebra::from_univariate_quotient(&poly(2, &[0, 1, 0, 1])).unwrap();
        assert_eq!(r2.dim(), 3);
        let u = r2.basis_element(1);
        assert_eq!(r2.pow(&u, 3), u);
        assert_axioms(&r2);

        let f3 = Algebra::from_univariate_quotient(&poly(3, &[0, 1])).unwrap();
        assert_eq!(f3.dim(), 1);
        assert_eq!(f3.structure_constants(0, 0), &[1]);

        assert_eq!(
            Algebra::from_univariate_quotient(&poly(3, &[2])),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            Algebra::from_univariate_quotient(&Poly::zero(fld(3))),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn non_monic_modulus_is_normalized() {
        let a = Algebra::from_univariate_quotient(&poly(5, &[1, 0, 2])).unwrap();
        let b = Algebra::from_univariate_quotient(&poly(5, &[3, 0, 1])).unwrap();
        assert_eq!(a.table(), b.table());
    }

    #[test]
    fn direct_product_examples() {
        let f2 = Algebra::from_univariate_quotient(&poly(2, &[0, 1])).unwrap();
        let prod = Algebra::direct_product(&[f2.clone(), f2.clone()]).unwrap();
        assert_eq!(prod.dim(), 2);
        assert_eq!(prod.structure_constants(0, 1), &[0, 0]);
        assert_eq!(prod.structure_constants(1, 1), &[0, 1]);
        assert_eq!(prod.one().coords(), &[1, 1]);

        let local = Algebra::from_univariate_quotient(&poly(2, &[1, 0, 1])).unwrap();
        let p3 = Algebra::direct_product(&[f2.clone(), local.clone()]).unwrap();
        assert_eq!(p3.dim(), 3);
        assert_axioms(&p3);

        assert_eq!(Algebra::direct_product(std::slice::from_ref(&local)).unwrap(), local);
        assert_eq!(
            Algebra::direct_product(&[]),
            Err(Error::Empty("direct product parts"))
        );
        let f3 = Algebra::from_univariate_quotient(&poly(3, &[0, 1])).unwrap();
        assert!(matches!(
            Algebra::direct_product(&[f2, f3]),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn tensor_of_dual_numbers() {
        let a = Algebra::from_generators(&[
            ("u".into(), poly(2, &[0, 0, 1])),
            ("v".into(), poly(2, &[0, 0, 1])),
        ])
        .unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.labels(), &["1", "u", "v", "u*v"]);
        let (u, v) = (a.basis_element(1), a.basis_element(2));
        assert!(a.mul(&u, &u).is_zero());
        assert!(a.mul(&v, &v).is_zero());
        assert_eq!(a.mul(&u, &v), a.basis_element(3));
        assert_axioms(&a);
    }

    #[test]
    fn tensor_with_base_field_is_identity() {
        let a = Algebra::from_univariate_quotient(&poly(3, &[1, 2, 0, 1])).unwrap();
        let f3 = Algebra::from_univariate_quotient(&poly(3, &[0, 1])).unwrap();
        assert_eq!(a.tensor_product(&f3).unwrap().table(), a.table());
        assert_eq!(f3.tensor_product(&a).unwrap().table(), a.table());
    }

    #[test]
    fn tensor_of_fields_and_triple_tensor() {
        let g = poly(2, &[1, 1, 1]);
        let a = Algebra::quotient(&g, "x")
            .unwrap()
            .tensor_product(&Algebra::quotient(&g, "y").unwrap())
            .unwrap();
        assert_eq!(a.dim(), 4);
        assert_axioms(&a);

        let sq = poly(2, &[0, 0, 1]);
        let b = Algebra::from_multivariate(&[sq.clone(), sq.clone(), sq]).unwrap();
        assert_eq!(b.dim(), 8);
        assert_axioms(&b);
        for gen in [1usize, 2, 4] {
            let e = b.basis_element(gen);
            assert!(b.mul(&e, &e).is_zero());
        }
        assert_eq!(
            Algebra::from_multivariate(&[]),
            Err(Error::Empty("generator list"))
        );
        assert_eq!(
            Algebra::from_multivariate(&[poly(2, &[0, 1]), poly(2, &[1])]),
            Err(Error::ConstantPolynomial)
        );
        let single = Algebra::from_multivariate(&[poly(5, &[0, 1])]).unwrap();
        assert_eq!(single.dim(), 1);
    }

    #[test]
    fn table_algebra_without_unit() {
        // F_2[x,y]/<x^2, y^2, xy>, basis 1, u, v
        let t = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
        ];
        let a = Algebra::from_table(fld(2), t, None, None).unwrap();
        assert_eq!(a.one().coords(), &[1, 0, 0]);
        let bad = vec![vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 1]]];
        assert!(matches!(
            Algebra::from_table(fld(2), bad, None, None),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn mult_matrix_examples() {
        let a = Algebra::from_univariate_quotient(&poly(2, &[1, 0, 1])).unwrap();
        assert_eq!(a.mult_matrix(&a.one()).unwrap(), Matrix::identity(2));
        assert_eq!(
            a.mult_matrix(&a.basis_element(1)).unwrap(),
            Matrix::from_rows(&[vec![0, 1], vec![1, 0]])
        );
        assert!(matches!(
            a.mult_matrix(&AlgElement { coords: vec![1] }),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let g = poly(2, &[1, 1, 1]);
        let a = Algebra::from_univariate_quotient(&g.pow(2)).unwrap();
        assert_eq!(a.minimal_polynomial(&a.basis_element(1)).unwrap(), g.pow(2));
        assert_eq!(a.minimal_polynomial(&a.one()).unwrap(), poly(2, &[-1, 1]));
        assert_eq!(a.minimal_polynomial(&a.zero()).unwrap(), poly(2, &[0, 1]));
    }

    #[test]
    fn minimal_polynomial_of_generator_is_modulus() {
        for (p, c) in [
            (2u32, vec![1i64, 0, 1, 1, 0, 1]),
            (3, vec![2, 0, 1, 1]),
            (5, vec![1, 1, 1]),
        ] {
            let h = poly(p, &c);
            let a = Algebra::from_univariate_quotient(&h).unwrap();
            assert_eq!(
                a.minimal_polynomial(&a.basis_element(1)).unwrap(),
                h.monic()
            );
        }
    }

    #[test]
    fn mult_matrix_is_multiplicative() {
        let a = Algebra::from_generators(&[
            ("x".into(), poly(3, &[1, 0, 1])),
            ("y".into(), poly(3, &[0, 0, 1])),
        ])
        .unwrap();
        let f = a.field();
        for i in (0..a.order()).step_by(7) {
            for j in (0..a.order()).step_by(11) {
                let (x, y) = (a.element_at(i), a.element_at(j));
                let lhs = a
                    .mult_matrix(&x)
                    .unwrap()
                    .mul(&a.mult_matrix(&y).unwrap(), &f);
                assert_eq!(lhs, a.mult_matrix(&a.mul(&x, &y)).unwrap());
            }
        }
    }

    #[test]
    fn rebase_preserves_multiplication() {
        let a = Algebra::from_univariate_quotient(&poly(3, &[1, 1, 0, 1])).unwrap();
        let basis = vec![
            a.element(vec![1, 1, 0]).unwrap(),
            a.element(vec![0, 2, 1]).unwrap(),
            a.element(vec![1, 0, 2]).unwrap(),
        ];
        let b = a.rebase(&basis).unwrap();
        assert_axioms(&b);
        assert_eq!(b.minimal_polynomial(&b.one()).unwrap(), poly(3, &[-1, 1]));
        let dependent = vec![a.one(), a.one(), a.basis_element(2)];
        assert_eq!(a.rebase(&dependent), Err(Error::NotABasis));
    }

    #[test]
    fn scalar_detection() {
        let a = Algebra::from_univariate_quotient(&poly(5, &[1, 0, 1])).unwrap();
        assert_eq!(a.as_scalar(&a.scalar(3)), Some(3));
        assert_eq!(a.as_scalar(&a.zero()), Some(0));
        assert_eq!(a.as_scalar(&a.basis_element(1)), None);
    }

    #[test]
    fn formatting() {
        let a = Algebra::from_univariate_quotient(&poly(3, &[0, 1, 0, 1])).unwrap();
        assert_eq!(
            a.format_element(&a.element(vec![1, 0, 2]).unwrap()),
            "1 + 2x^2"
        );
        assert_eq!(a.format_element(&a.zero()), "0");
        assert_eq!(a.to_string(), "F_3[x]/<x + x^3>");
    }
}
