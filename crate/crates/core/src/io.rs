//! JSON documents read and written by the command-line front end.
//!
//! Polynomials are ascending coefficient arrays (`1 + x^2` over `F_2` is
//! `[1, 0, 1]`); algebra elements are coordinate arrays in the algebra's
//! canonical basis order.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElement, Algebra};
use crate::codes::{CodeOverF, CodeOverR, CodeParams};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::trace::Functional;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub var: String,
    pub modulus: Vec<i64>,
}

/// An algebra either as `F_p[x_1..x_n]/<g_1(x_1), ..., g_n(x_n)>` or as an
/// explicit multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Generators {
        p: u32,
        generators: Vec<GeneratorSpec>,
    },
    Table {
        p: u32,
        dim: usize,
        table: Vec<Vec<Vec<i64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl AlgebraSpec {
    pub fn p(&self) -> u32 {
        match self {
            AlgebraSpec::Generators { p, .. } | AlgebraSpec::Table { p, .. } => *p,
        }
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p())
    }

    /// Generator presentation as `(var, modulus)` pairs, if this is one.
    pub fn generators(&self) -> Result<Option<Vec<(String, Poly)>>> {
        match self {
            AlgebraSpec::Generators { generators, .. } => {
                let f = self.field()?;
                Ok(Some(
                    generators
                        .iter()
                        .map(|g| (g.var.clone(), Poly::from_signed(f, &g.modulus)))
                        .collect(),
                ))
            }
            AlgebraSpec::Table { .. } => Ok(None),
        }
    }

    pub fn build(&self) -> Result<Algebra> {
        let f = self.field()?;
        match self {
            AlgebraSpec::Generators { .. } => {
                let gens = self.generators()?.expect("generator spec");
                Algebra::from_generators(&gens)
            }
            AlgebraSpec::Table {
                dim,
                table,
                unit,
                labels,
                ..
            } => {
                if table.len() != *dim {
                    return Err(Error::DimensionMismatch {
                        expected: *dim,
                        got: table.len(),
                    });
                }
                let table = table
                    .iter()
                    .map(|row| row.iter().map(|e| reduce_all(f, e)).collect())
                    .collect();
                Algebra::from_table(
                    f,
                    table,
                    unit.as_ref().map(|u| reduce_all(f, u)),
                    labels.clone(),
                )
            }
        }
    }

    /// Table form of an algebra, accepted back by [`AlgebraSpec::build`].
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraSpec::Table {
            p: a.field().p(),
            dim: a.dim(),
            table: a
                .table()
                .into_iter()
                .map(|row| row.into_iter().map(widen).collect())
                .collect(),
            unit: Some(widen(a.one().into_coords())),
            labels: Some(a.labels().to_vec()),
        }
    }
}

pub fn reduce_all(f: PrimeField, v: &[i64]) -> Vec<u32> {
    v.iter().map(|&x| f.reduce(x)).collect()
}

fn widen(v: Vec<u32>) -> Vec<i64> {
    v.into_iter().map(i64::from).collect()
}

/// Parses a coordinate array as an element of `a`.
pub fn element(a: &Algebra, coords: &[i64]) -> Result<AlgElement> {
    a.element(reduce_all(a.field(), coords))
}

pub fn elements(a: &Algebra, list: &[Vec<i64>]) -> Result<Vec<AlgElement>> {
    list.iter().map(|c| element(a, c)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalDoc {
    pub algebra: AlgebraSpec,
    pub values: Vec<i64>,
}

impl FunctionalDoc {
    pub fn build(&self) -> Result<(Algebra, Functional)> {
        let a = self.algebra.build()?;
        let f = Functional::on(&a, reduce_all(a.field(), &self.values))?;
        Ok((a, f))
    }
}

/// Bare value array or an object carrying `values`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValuesDoc {
    Bare(Vec<i64>),
    Wrapped { values: Vec<i64> },
}

impl ValuesDoc {
    pub fn values(&self) -> &[i64] {
        match self {
            ValuesDoc::Bare(v) | ValuesDoc::Wrapped { values: v } => v,
        }
    }
}

/// Bare list of coordinate arrays or an object with an `elements` / `basis`
/// list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementsDoc {
    Bare(Vec<Vec<i64>>),
    Elements { elements: Vec<Vec<i64>> },
    Basis { basis: Vec<Vec<i64>> },
}

impl ElementsDoc {
    pub fn list(&self) -> &[Vec<i64>] {
        match self {
            ElementsDoc::Bare(v)
            | ElementsDoc::Elements { elements: v }
            | ElementsDoc::Basis { basis: v } => v,
        }
    }
}

/// A code over an algebra: generator rows of coordinate arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDoc {
    pub algebra: AlgebraSpec,
    pub rows: Vec<Vec<Vec<i64>>>,
    /// Length; only needed when `rows` is empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl CodeDoc {
    pub fn build(&self) -> Result<CodeOverR> {
        let a = self.algebra.build()?;
        self.build_on(a)
    }

    pub fn build_on(&self, a: Algebra) -> Result<CodeOverR> {
        let n = match (self.n, self.rows.first()) {
            (Some(n), _) => n,
            (None, Some(r)) => r.len(),
            (None, None) => {
                return Err(Error::Empty(
                    "code rows (give \"n\" for an empty generator list)",
                ))
            }
        };
        let rows = self
            .rows
            .iter()
            .map(|r| elements(&a, r))
            .collect::<Result<Vec<_>>>()?;
        CodeOverR::new(a, n, rows)
    }
}

/// One entry of a defining sequence: a coordinate array, optionally wrapped
/// in a one-element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SequenceEntry {
    Coords(Vec<i64>),
    Wrapped([Vec<i64>; 1]),
}

impl SequenceEntry {
    pub fn coords(&self) -> &[i64] {
        match self {
            SequenceEntry::Coords(c) | SequenceEntry::Wrapped([c]) => c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSequenceDoc {
    pub algebra: AlgebraSpec,
    pub d: Vec<SequenceEntry>,
}

impl DefiningSequenceDoc {
    /// The sequence as elements of `a`, order and repetitions kept.
    pub fn sequence(&self, a: &Algebra) -> Result<Vec<AlgElement>> {
        self.d.iter().map(|e| element(a, e.coords())).collect()
    }
}

/// A code over `F_p`, by generator rows and/or codewords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCodeDoc {
    pub p: u32,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub rows: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub codewords: Option<Vec<Vec<i64>>>,
}

impl FieldCodeDoc {
    pub fn build(&self) -> Result<CodeOverF> {
        let f = PrimeField::new(self.p)?;
        let first_len = self
            .rows
            .iter()
            .chain(self.codewords.iter())
            .flat_map(|l| l.first())
            .map(Vec::len)
            .next();
        let n = self
            .n
            .or(first_len)
            .ok_or(Error::Empty("code length (give \"n\")"))?;
        let conv = |l: &Vec<Vec<i64>>| l.iter().map(|r| reduce_all(f, r)).collect::<Vec<_>>();
        match (&self.rows, &self.codewords) {
            (Some(rows), _) => CodeOverF::from_generators(f, n, conv(rows)),
            (None, Some(cw)) => CodeOverF::from_codewords(f, n, conv(cw)),
            (None, None) => CodeOverF::from_generators(f, n, Vec::new()),
        }
    }
}

/// Summary of a code over `F_p`. `d` is `null` for the zero code. `rows` is a
/// reduced generator matrix, so the report itself is a valid code input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub quasicyclic: Option<usize>,
    pub size: usize,
    pub rows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<u32>>>,
}

impl CodeReport {
    pub fn new(code: &CodeOverF, params: CodeParams, with_codewords: bool) -> Self {
        let f = code.field();
        let rows = if code.size() <= 1 {
            Vec::new()
        } else {
            let ech = Matrix::from_rows(code.codewords()).rref(&f);
            (0..ech.pivots.len())
                .map(|i| ech.reduced.row(i).to_vec())
                .collect()
        };
        Self {
            p: f.p(),
            n: params.n,
            k: params.k,
            d: params.d,
            quasicyclic: code.quasicyclic_index(),
            size: code.size(),
            rows,
            codewords: with_codewords.then(|| code.codewords().to_vec()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator_spec() {
        let s: AlgebraSpec =
            serde_json::from_str(r#"{"p":2,"generators":[{"var":"x","modulus":[0,1,0,1]}]}"#)
                .unwrap();
        let a = s.build().unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn parses_table_spec_and_round_trips() {
        let s: AlgebraSpec = serde_json::from_str(
            r#"{"p":2,"dim":3,"table":[[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,0,0],[0,0,0]],[[0,0,1],[0,0,0],[0,0,0]]]}"#,
        )
        .unwrap();
        let a = s.build().unwrap();
        let back = AlgebraSpec::from_algebra(&a);
        let json = serde_json::to_string(&back).unwrap();
        let again: AlgebraSpec = serde_json::from_str(&json).unwrap();
        assert!(again.build().unwrap().same_structure(&a));
    }

    #[test]
    fn table_dimension_checked() {
        let s = AlgebraSpec::Table {
            p: 2,
            dim: 2,
            table: vec![vec![vec![1]]],
            unit: None,
            labels: None,
        };
        assert!(matches!(s.build(), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn negative_coefficients_are_reduced() {
        let s: AlgebraSpec =
            serde_json::from_str(r#"{"p":5,"generators":[{"var":"t","modulus":[-1,0,1]}]}"#)
                .unwrap();
        let a = s.build().unwrap();
        assert_eq!(a.labels(), &["1", "t"]);
        assert_eq!(a.structure_constants(1, 1), &[1, 0]);
    }

    #[test]
    fn sequence_entries_flat_or_wrapped() {
        let d: DefiningSequenceDoc = serde_json::from_str(
            r#"{"algebra":{"p":2,"generators":[{"var":"u","modulus":[0,0,1]}]},"d":[[1,0],[[0,1]]]}"#,
        )
        .unwrap();
        let a = d.algebra.build().unwrap();
        let seq = d.sequence(&a).unwrap();
        assert_eq!(seq, vec![a.one(), a.basis_element(1)]);
    }

    #[test]
    fn field_code_doc_variants() {
        let d: FieldCodeDoc = serde_json::from_str(r#"{"p":2,"rows":[[1,1,0]]}"#).unwrap();
        assert_eq!(d.build().unwrap().size(), 2);
        let d: FieldCodeDoc = serde_json::from_str(r#"{"p":2,"codewords":[[0,0],[1,1]]}"#).unwrap();
        assert_eq!(d.build().unwrap().size(), 2);
        let d: FieldCodeDoc = serde_json::from_str(r#"{"p":3,"n":4}"#).unwrap();
        assert_eq!(d.build().unwrap().size(), 1);
    }
}
