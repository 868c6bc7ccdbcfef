//! Dense univariate polynomials over `F_p`.
//!
//! Besides ring arithmetic this module carries the pieces the trace
//! construction leans on: an irreducibility test, complete factorization
//! (square-free, distinct-degree, equal-degree), and the `g`-adic digit
//! expansion `p = p_0 + p_1 g + ... + p_{r-1} g^{r-1}`.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};

/// Polynomial with coefficients in ascending degree order. The zero polynomial
/// has no coefficients; no other polynomial has a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Coefficients are reduced mod `p` and trailing zeros trimmed.
    pub fn new(field: PrimeField, coeffs: impl IntoIterator<Item = u32>) -> Self {
        let p = field.p();
        let mut c: Vec<u32> = coeffs.into_iter().map(|v| v % p).collect();
        trim(&mut c);
        Self { field, coeffs: c }
    }

    pub fn from_signed(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&v| field.reduce(v)))
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, [c])
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: PrimeField, c: u32, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Splits off the leading coefficient: `self = unit * monic`.
    pub fn monic_parts(&self) -> (u32, Poly) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let lc = self.lead();
        let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
        (lc, self.scale(inv))
    }

    pub fn monic(&self) -> Poly {
        self.monic_parts().1
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field, "field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| self.field.add(self.coeff(i), other.coeff(i))),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field, "field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| self.field.sub(self.coeff(i), other.coeff(i))),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| self.field.neg(c)))
    }

    pub fn scale(&self, c: u32) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().map(|&a| self.field.mul(a, c)),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field, "field mismatch");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let p = self.field.p() as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Poly::new(self.field, out.into_iter().map(|v| v as u32))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = self.field;
        let inv_lead = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32)),
        )
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `g` monic and `u*a + v*b = g`.
    pub fn gcd_ext(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
        a.check_field(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::Empty("gcd of two zero polynomials"));
        }
        let f = a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = f.inv(r0.lead())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Canonical ordering used for factor lists: degree first, then the
    /// coefficient sequence lexicographically.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Irreducibility by the distinct-degree sieve: a degree-`n` polynomial is
    /// irreducible iff `gcd(x^{p^k} - x, g) = 1` for every `k <= n/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let g = self.monic();
        let x = Poly::x(self.field);
        let mut frob = x.clone();
        for _ in 1..=n / 2 {
            frob = frob.pow_mod(self.field.p() as u64, &g)?;
            if !frob.sub(&x).gcd(&g).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complete factorization with the default splitting seed 0.
    pub fn factor(&self) -> Result<Factorization> {
        self.factor_with_seed(0)
    }

    /// Complete factorization into monic irreducibles. The seed only drives
    /// the equal-degree splitting; the returned factor list is sorted, so the
    /// result does not depend on it.
    pub fn factor_with_seed(&self, seed: u64) -> Result<Factorization> {
        match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        let (lc, monic) = self.monic_parts();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (part, mult) in square_free(&monic) {
            for (block, d) in distinct_degree(&part) {
                for irr in equal_degree(&block, d, &mut rng) {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|(a, ma), (b, mb)| a.canonical_cmp(b).then(ma.cmp(mb)));
        Ok(Factorization {
            unit: self.field.elem(lc as i64),
            factors,
        })
    }

    /// Writes `self` as `sum_i digits[i] * g^i` with `deg digits[i] < deg g`.
    pub fn g_adic_digits(&self, g: &Poly, r: usize) -> Result<Vec<Poly>> {
        self.check_field(g)?;
        let dg = match g.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(d) => d,
        };
        if let Some(d) = self.degree() {
            if d >= r * dg {
                return Err(Error::DegreeBound {
                    degree: d,
                    bound: r * dg,
                });
            }
        }
        let mut digits = Vec::with_capacity(r);
        let mut rest = self.clone();
        for _ in 0..r {
            let (q, d) = rest.div_rem(g)?;
            digits.push(d);
            rest = q;
        }
        debug_assert!(rest.is_zero());
        Ok(digits)
    }

    /// Ascending human-readable form such as `1 + x^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                match (c, k) {
                    (_, 0) => c.to_string(),
                    (1, _) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

fn trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

/// Square-free decomposition of a monic polynomial: pairs `(part, i)` where
/// each `part` is square-free and the input is `prod part^i`.
fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field;
    let p = field.p() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).expect("gcd divides").0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).expect("gcd divides").0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).expect("gcd divides").0;
        i += 1;
    }
    if !c.is_one() {
        // Every exponent of c is divisible by p; a^p = a in F_p.
        let root = Poly::new(
            field,
            c.coeffs.iter().step_by(p).copied().collect::<Vec<_>>(),
        );
        for (g, m) in square_free(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic square-free polynomial into blocks whose irreducible
/// factors all share one degree.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(field.p() as u64, &rest).expect("nonzero");
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).expect("gcd divides").0;
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let dr = rest.degree().unwrap();
        out.push((rest, dr));
    }
    out
}

/// Equal-degree splitting of a monic square-free product of degree-`d`
/// irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field;
    let p = field.p();
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..p)));
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // Additive trace a + a^2 + ... + a^{2^{d-1}}.
            let mut acc = a.clone();
            let mut term = a.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f).expect("nonzero");
                acc = acc.add(&term);
            }
            acc
        } else {
            // a^{(p^d - 1)/2} = (a * a^p * ... * a^{p^{d-1}})^{(p-1)/2}
            let mut norm = a.clone();
            let mut frob = a.clone();
            for _ in 1..d {
                frob = frob.pow_mod(p as u64, f).expect("nonzero");
                norm = norm.mul(&frob).rem(f).expect("nonzero");
            }
            norm.pow_mod(((p - 1) / 2) as u64, f)
                .expect("nonzero")
                .sub(&Poly::one(field))
        };
        let g = candidate.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.div_rem(&g).expect("gcd divides").0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// `unit * prod factor^multiplicity`, factors monic, irreducible, distinct and
/// sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FpElement,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Poly {
        let field = self.unit.field();
        self.factors
            .iter()
            .fold(Poly::constant(field, self.unit.value()), |acc, (g, m)| {
                acc.mul(&g.pow(*m as u64))
            })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit.value() != 1 {
            write!(f, "{} * ", self.unit)?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, m)| match m {
                1 => format!("({g})"),
                _ => format!("({g})^{m}"),
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}
