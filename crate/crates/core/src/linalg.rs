//! Named bases, coordinate vectors, matrices and subspaces.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

/// An ordered basis with unique names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    names: Vec<String>,
}

impl Space {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() {
                return Err(Error::doc("empty basis name"));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateBasisName(n.clone()));
            }
        }
        Ok(Space { names })
    }

    /// `e1, ..., en`.
    pub fn standard(n: usize) -> Self {
        Self::with_prefix("e", n)
    }

    pub fn with_prefix(prefix: &str, n: usize) -> Self {
        Space {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownBasisName(name.to_string()))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Human-readable rendering such as `2*e1 - 1/3*e4`.
    pub fn render(&self, v: &Vector) -> String {
        render_with(&self.names, v)
    }
}

pub(crate) fn render_with(names: &[String], v: &Vector) -> String {
    let mut out = String::new();
    for (i, c) in v.iter_nonzero() {
        let neg = c < &Scalar::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_scalar(&mag));
            out.push('*');
        }
        out.push_str(&names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coordinates with respect to some basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_vec(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        self.0[i] = c;
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.len());
        }
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// `self += c * row` for a raw coordinate slice.
    pub(crate) fn add_scaled_slice(&mut self, c: &Scalar, row: &[Scalar]) {
        for (a, b) in self.0.iter_mut().zip(row) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        self.add_scaled(&Scalar::one(), rhs);
    }
}

impl SubAssign<&Vector> for Vector {
    fn sub_assign(&mut self, rhs: &Vector) {
        self.add_scaled(&-Scalar::one(), rhs);
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        self += &rhs;
        self
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        self -= &rhs;
        self
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -self.clone()
    }
}

/// A linear map given by its matrix. Column `j` holds the image of the
/// `j`-th source basis vector: `N(e_j) = sum_i entries[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::identity(n).scale(&c)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the matrix whose `j`-th column is `images[j]`.
    pub fn from_columns(rows: usize, images: &[Vector]) -> Result<Self> {
        let mut m = Self::zero(rows, images.len());
        for (j, v) in images.iter().enumerate() {
            if v.len() != rows {
                return Err(Error::dim("column length differs from row count"));
            }
            for (i, c) in v.iter_nonzero() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        self.data[i * self.cols + j] = c;
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix applied to vector of wrong length");
        let mut out = Vector::zeros(self.rows);
        for (j, c) in v.iter_nonzero() {
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.0[i] += a * c;
                }
            }
        }
        out
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols: Vec<Vector> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        Matrix::from_columns(self.rows, &cols)
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dim("power of a non-square matrix"));
        }
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dim("matrix sum of different shapes"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, c)| (k / self.cols, k % self.cols, c))
    }
}

/// A subspace stored as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let mut rows: Vec<Vector> = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::dim("spanning vector has the wrong length"));
            }
            rows.push(v.clone());
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ambient {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Scalar::one() / &rows[r].0[col];
            rows[r] = rows[r].scale(&inv);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row.0[col].is_zero() {
                    let c = -row.0[col].clone();
                    row.add_scaled(&c, &pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Ok(Subspace {
            ambient,
            rows,
            pivots,
        })
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| Vector::basis(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the echelon basis. Zero exactly when
    /// `v` lies in the subspace.
    pub fn residual(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out.0[p].is_zero() {
                let c = -out.0[p].clone();
                out.add_scaled(&c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.residual(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn column_convention() {
        // N(e1) = e1 + 2 e2
        let n = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(2), int(1)]]).unwrap();
        assert_eq!(n.apply(&Vector::basis(2, 0)), Vector::from_vec(vec![int(1), int(2)]));
    }

    #[test]
    fn echelon_residual() {
        let s = Subspace::span(3, &[Vector::from_vec(vec![int(1), int(1), int(0)])]).unwrap();
        assert!(s.contains(&Vector::from_vec(vec![int(2), int(2), int(0)])));
        assert!(!s.contains(&Vector::basis(3, 0)));
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(Space::new(["a", "a"]), Err(Error::DuplicateBasisName(_))));
    }
}
