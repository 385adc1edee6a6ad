//! Dense matrices of polynomials with basis labels, and their determinants
//! and classical adjoints.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, Polynomial, Ring, TVar};

/// Largest matrix the symbolic cofactor routines accept in generic mode
/// (the catalecticant for `n = 3`).
pub const MAX_GENERIC_DIM: usize = 6;

/// A basis label for rows or columns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// The generator of a rank-one free module.
    One,
    /// A monomial `m` of a symmetric power.
    Sym(Monomial),
    /// A dual monomial `m*` of a divided power.
    Dual(Monomial),
}

impl Label {
    pub fn monomial(&self) -> Option<Monomial> {
        match self {
            Label::One => None,
            Label::Sym(m) | Label::Dual(m) => Some(*m),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One => f.write_str("1"),
            Label::Sym(m) => write!(f, "{m}"),
            Label::Dual(m) => write!(f, "({m})*"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: Ring, rows: Vec<Label>, cols: Vec<Label>) -> Self {
        let entries = vec![Polynomial::zero(ring); rows.len() * cols.len()];
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn<F>(ring: Ring, rows: Vec<Label>, cols: Vec<Label>, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in 0..rows.len() {
            for j in 0..cols.len() {
                let e = f(i, j);
                assert_eq!(e.ring(), ring, "entry ring does not match matrix ring");
                entries.push(e);
            }
        }
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    /// Square matrix of integers with unlabeled (`One`) basis; handy in tests.
    pub fn from_ints(ring: Ring, values: &[Vec<i64>]) -> Self {
        let n = values.len();
        let labels = vec![Label::One; n];
        let cols = vec![Label::One; values.first().map_or(0, Vec::len)];
        Self::from_fn(ring, labels, cols, |i, j| {
            Polynomial::from_int(ring, values[i][j])
        })
    }

    pub fn identity(ring: Ring, labels: Vec<Label>) -> Self {
        Self::from_fn(ring, labels.clone(), labels, |i, j| {
            Polynomial::from_int(ring, (i == j) as i64)
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        assert_eq!(
            value.ring(),
            self.ring,
            "entry ring does not match matrix ring"
        );
        let w = self.cols.len();
        self.entries[i * w + j] = value;
    }

    /// Adds `value` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, value: &Polynomial) {
        let w = self.cols.len();
        let slot = &mut self.entries[i * w + j];
        *slot = &*slot + value;
    }

    pub fn row_of(&self, label: &Label) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_of(&self, label: &Label) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }

    /// Entry addressed by labels.
    pub fn at(&self, row: &Label, col: &Label) -> Option<&Polynomial> {
        Some(self.get(self.row_of(row)?, self.col_of(col)?))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        let w = self.cols.len();
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, e)| (k / w, k % w, e))
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.ring, self.cols.clone(), self.rows.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Skew-symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Entries equal up to labels.
    pub fn same_entries(&self, other: &PolyMatrix) -> bool {
        self.nrows() == other.nrows()
            && self.ncols() == other.ncols()
            && self.entries == other.entries
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        if self.ring != other.ring {
            return Err(Error::input("ring mismatch in matrix product"));
        }
        Ok(Self::from_fn(
            self.ring,
            self.rows.clone(),
            other.cols.clone(),
            |i, j| {
                Polynomial::sum_of_products(
                    self.ring,
                    (0..self.ncols()).map(|k| (self.get(i, k), other.get(k, j))),
                )
            },
        ))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(
            self.ring,
            rows.iter().map(|&i| self.rows[i]).collect(),
            cols.iter().map(|&j| self.cols[j]).collect(),
            |i, j| self.get(rows[i], cols[j]).clone(),
        )
    }

    pub fn specialize(&self, assignment: &BTreeMap<TVar, BigRational>) -> PolyMatrix {
        PolyMatrix {
            ring: Ring::Specialized,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| e.specialize(assignment))
                .collect(),
        }
    }

    /// Entries as rationals when every entry is a constant.
    pub fn to_rational(&self) -> Option<linalg::RatMatrix> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| self.get(i, j).as_constant())
                    .collect()
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| self.get(i, j).to_string())
                    .collect()
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        self.check_square()?;
        if let Some(values) = self.to_rational() {
            let det = linalg::bareiss_determinant(&values);
            return Polynomial::constant(self.ring, det);
        }
        self.check_capacity()?;
        Ok(self.determinant_cofactor())
    }

    /// Classical adjoint `A` with `M A = A M = det(M) I`.
    pub fn adjoint(&self) -> Result<PolyMatrix> {
        self.check_square()?;
        if let Some(values) = self.to_rational() {
            return self.adjoint_rational(&values);
        }
        self.check_capacity()?;
        Ok(self.adjoint_cofactor())
    }

    fn check_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "expected a square matrix, got {}x{}",
                self.nrows(),
                self.ncols()
            )));
        }
        Ok(())
    }

    fn check_capacity(&self) -> Result<()> {
        if self.ring == Ring::Generic && self.nrows() > MAX_GENERIC_DIM {
            return Err(Error::Capacity(format!(
                "symbolic determinant of a {0}x{0} matrix is beyond the supported size {MAX_GENERIC_DIM}",
                self.nrows()
            )));
        }
        Ok(())
    }

    fn adjoint_rational(&self, values: &linalg::RatMatrix) -> Result<PolyMatrix> {
        let n = self.nrows();
        let det = linalg::bareiss_determinant(values);
        let adj: linalg::RatMatrix = if det.is_zero() {
            // Singular: fall back to signed cofactors, each a Bareiss minor.
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let minor: linalg::RatMatrix = (0..n)
                                .filter(|&r| r != j)
                                .map(|r| {
                                    (0..n)
                                        .filter(|&c| c != i)
                                        .map(|c| values[r][c].clone())
                                        .collect()
                                })
                                .collect();
                            let d = linalg::bareiss_determinant(&minor);
                            if (i + j) % 2 == 0 {
                                d
                            } else {
                                -d
                            }
                        })
                        .collect()
                })
                .collect()
        } else {
            let inv = linalg::inverse(values).expect("nonzero determinant");
            inv.into_iter()
                .map(|row| row.into_iter().map(|v| v * &det).collect())
                .collect()
        };
        let mut out = PolyMatrix::zeros(self.ring, self.cols.clone(), self.rows.clone());
        for (i, row) in adj.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.set(i, j, Polynomial::constant(self.ring, v)?);
            }
        }
        Ok(out)
    }

    /// Determinant by Laplace expansion, memoized over column subsets.
    pub fn determinant_cofactor(&self) -> Polynomial {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.nrows();
        let rows: Vec<usize> = (0..n).collect();
        let layer = self.minors_by_columns(&rows);
        layer
            .get(&((1u64 << n) - 1))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.ring))
    }

    /// Adjoint from signed cofactors computed symbolically.
    pub fn adjoint_cofactor(&self) -> PolyMatrix {
        assert!(self.is_square(), "adjoint of a non-square matrix");
        let n = self.nrows();
        let full = (1u64 << n) - 1;
        let mut out = PolyMatrix::zeros(self.ring, self.cols.clone(), self.rows.clone());
        if n == 1 {
            out.set(0, 0, Polynomial::one(self.ring));
            return out;
        }
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let layer = self.minors_by_columns(&rows);
            for i in 0..n {
                let minor = layer
                    .get(&(full & !(1u64 << i)))
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(self.ring));
                out.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        out
    }

    // For the given rows (in order), returns det of rows x cols for every
    // column subset of size rows.len() that has a nonzero minor.
    fn minors_by_columns(&self, rows: &[usize]) -> HashMap<u64, Polynomial> {
        let n = self.ncols();
        assert!(n < 64, "matrix too wide for subset expansion");
        let mut layer: HashMap<u64, Polynomial> = HashMap::new();
        layer.insert(0, Polynomial::one(self.ring));
        for &r in rows {
            let mut next: HashMap<u64, Polynomial> = HashMap::new();
            for (mask, val) in &layer {
                for c in 0..n {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let entry = self.get(r, c);
                    if entry.is_zero() {
                        continue;
                    }
                    // Sign of the permutation: count chosen columns to the right of c.
                    let inversions = (mask >> (c + 1)).count_ones();
                    let mut term = val * entry;
                    if inversions % 2 == 1 {
                        term = -term;
                    }
                    let key = mask | (1 << c);
                    match next.get_mut(&key) {
                        Some(acc) => *acc += &term,
                        None => {
                            next.insert(key, term);
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            layer = next;
        }
        layer
    }

    /// Aligned text rendering, one row per line.
    pub fn to_text(&self) -> String {
        let cells = self.to_strings();
        let ncols = self.ncols();
        let widths: Vec<usize> = (0..ncols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str("[ ");
            out.push_str(&line.join("  "));
            out.push_str(" ]\n");
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON mirror of a labeled matrix.
#[derive(Serialize)]
pub struct MatrixJson {
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    pub entries: Vec<Vec<String>>,
}

impl From<&PolyMatrix> for MatrixJson {
    fn from(m: &PolyMatrix) -> Self {
        MatrixJson {
            rows: m.rows.clone(),
            cols: m.cols.clone(),
            entries: m.to_strings(),
        }
    }
}
