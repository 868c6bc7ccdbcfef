//! Dense matrices over `F_p` and Gaussian elimination.
//!
//! Pivoting always takes the first nonzero entry in the column, so every
//! result (echelon form, null-space basis, solution) is deterministic.

use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Row echelon data produced by [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    /// Determinant when the input was square, otherwise `None`.
    pub det: Option<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<u32>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn add(&self, other: &Self, f: &PrimeField) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32, f: &PrimeField) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, f: &PrimeField) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let p = f.p() as u64;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = ((*cell as u64 + a * other[(k, j)] as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32], f: &PrimeField) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = f.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn pow(&self, mut exp: u64, f: &PrimeField) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            exp >>= 1;
        }
        acc
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self, f: &PrimeField) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = 1u32;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m[(i, c)] != 0) else {
                det = 0;
                continue;
            };
            if pr != r {
                m.swap_rows(pr, r);
                det = f.neg(det);
            }
            let pv = m[(r, c)];
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("pivot is nonzero");
            for j in 0..m.cols {
                m[(r, j)] = f.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != 0 {
                    let factor = m[(i, c)];
                    for j in 0..m.cols {
                        let v = f.mul(factor, m[(r, j)]);
                        m[(i, j)] = f.sub(m[(i, j)], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let det = (self.rows == self.cols).then_some(if pivots.len() == self.rows { det } else { 0 });
        Echelon {
            reduced: m,
            pivots,
            det,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.rref(f).pivots.len()
    }

    pub fn det(&self, f: &PrimeField) -> u32 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        self.rref(f).det.unwrap()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column, with that
    /// free coordinate set to 1.
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let ech = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = f.neg(ech.reduced[(r, fc)]);
                }
                v
            })
            .collect()
    }

    /// A solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[u32], f: &PrimeField) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let ech = aug.rref(f);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.reduced[(r, self.cols)];
        }
        Some(x)
    }

    pub fn inverse(&self, f: &PrimeField) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let ech = aug.rref(f);
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = ech.reduced[(i, n + j)];
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }
}

/// Dot product of two coordinate vectors.
pub fn dot(a: &[u32], b: &[u32], f: &PrimeField) -> u32 {
    let p = f.p() as u64;
    a.iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p) as u32
}

/// Every vector of `F_p`-linear combinations of `gens`, sorted and deduplicated.
pub fn span(gens: &[Vec<u32>], len: usize, f: &PrimeField) -> Vec<Vec<u32>> {
    let basis = if gens.is_empty() {
        Vec::new()
    } else {
        let ech = Matrix::from_rows(gens).rref(f);
        (0..ech.pivots.len())
            .map(|i| ech.reduced.row(i).to_vec())
            .collect::<Vec<_>>()
    };
    let mut out = vec![vec![0u32; len]];
    for b in &basis {
        let mut next = Vec::with_capacity(out.len() * f.p() as usize);
        for v in &out {
            for c in f.elements() {
                next.push(
                    v.iter()
                        .zip(b)
                        .map(|(&x, &y)| f.add(x, f.mul(c, y)))
                        .collect(),
                );
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}
