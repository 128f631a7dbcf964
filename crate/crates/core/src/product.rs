//! Bilinear maps stored as dense structure constants.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    None,
    Symmetric,
    Skew,
}

impl Symmetry {
    pub fn tag(self) -> &'static str {
        match self {
            Symmetry::None => "none",
            Symmetry::Symmetric => "symmetric",
            Symmetry::Skew => "skew",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Symmetry::None),
            "symmetric" => Ok(Symmetry::Symmetric),
            "skew" => Ok(Symmetry::Skew),
            _ => Err(Error::doc(format!("unknown symmetry flag `{s}`"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A bilinear map `L x R -> O` with `x ⋄ y = sum x_i y_j c[i][j][k] f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    left: usize,
    right: usize,
    out: usize,
    c: Vec<Scalar>,
}

impl Product {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Product {
            left,
            right,
            out,
            c: vec![Scalar::zero(); left * right * out],
        }
    }

    /// The zero product on an `n`-dimensional space.
    pub fn square(n: usize) -> Self {
        Self::zero(n, n, n)
    }

    /// Builds a product from the images of basis pairs.
    pub fn from_fn(left: usize, right: usize, out: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut p = Self::zero(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "image has the wrong length");
                for (k, c) in v.iter_nonzero() {
                    p.set(i, j, k, c.clone());
                }
            }
        }
        p
    }

    /// Builds a product from `(i, j, k, c)` entries; repeated positions add.
    pub fn from_entries(
        left: usize,
        right: usize,
        out: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(left, right, out);
        for (i, j, k, c) in entries {
            if i >= left || j >= right || k >= out {
                return Err(Error::dim(format!("entry ({i},{j},{k}) out of range")));
            }
            let idx = p.index(i, j, k);
            p.c[idx] += c;
        }
        Ok(p)
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn is_square_on(&self, n: usize) -> bool {
        self.left == n && self.right == n && self.out == n
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right + j) * self.out + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let idx = self.index(i, j, k);
        self.c[idx] = c;
    }

    /// Coordinates of `e_i ⋄ e_j`.
    pub fn row(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.c[start..start + self.out]
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> Vector {
        Vector::from_vec(self.row(i, j).to_vec())
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        assert_eq!(x.len(), self.left, "left argument has the wrong length");
        assert_eq!(y.len(), self.right, "right argument has the wrong length");
        let mut out = Vector::zeros(self.out);
        for (i, a) in x.iter_nonzero() {
            for (j, b) in y.iter_nonzero() {
                out.add_scaled_slice(&(a * b), self.row(i, j));
            }
        }
        out
    }

    /// Nonzero entries in index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let (right, out) = (self.right, self.out);
        self.c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (right * out), (idx / out) % right, idx % out, c))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn is_square_domain(&self) -> bool {
        self.left == self.right
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square_domain()
            && (0..self.left).all(|i| (0..i).all(|j| self.row(i, j) == self.row(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square_domain()
            && (0..self.left).all(|i| {
                (0..=i).all(|j| {
                    self.row(i, j)
                        .iter()
                        .zip(self.row(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                })
            })
    }

    /// Symmetry read off the entries; the zero product reports symmetric.
    pub fn symmetry(&self) -> Symmetry {
        if self.is_symmetric() {
            Symmetry::Symmetric
        } else if self.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::None
        }
    }

    /// `(x, y) -> y ⋄ x`.
    pub fn flip(&self) -> Result<Product> {
        self.flip_with(|_, _| Scalar::from_integer(1.into()))
    }

    /// `e_i, e_j -> s(i, j) * (e_j ⋄ e_i)`, used for sign-twisted flips.
    pub fn flip_with(&self, s: impl Fn(usize, usize) -> Scalar) -> Result<Product> {
        if !self.is_square_domain() {
            return Err(Error::dim("flip needs equal argument spaces"));
        }
        Ok(Product::from_fn(self.left, self.right, self.out, |i, j| {
            self.eval_basis(j, i).scale(&s(i, j))
        }))
    }

    pub fn scale(&self, k: &Scalar) -> Product {
        Product {
            c: self.c.iter().map(|x| x * k).collect(),
            ..self.clone()
        }
    }

    fn same_shape(&self, other: &Product) -> bool {
        (self.left, self.right, self.out) == (other.left, other.right, other.out)
    }

    /// `sum_r k_r P_r` over products of one shape.
    pub fn combine(terms: &[(Scalar, &Product)]) -> Result<Product> {
        let (_, first) = terms.first().ok_or(Error::EmptyCombination)?;
        let mut out = Product::zero(first.left, first.right, first.out);
        for (k, p) in terms {
            if !p.same_shape(first) {
                return Err(Error::dim("combining products of different shapes"));
            }
            if k.is_zero() {
                continue;
            }
            for (a, b) in out.c.iter_mut().zip(&p.c) {
                if !b.is_zero() {
                    *a += k * b;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Product) -> Result<Product> {
        let one = Scalar::from_integer(1.into());
        Product::combine(&[(one.clone(), self), (one, other)])
    }

    pub fn sub(&self, other: &Product) -> Result<Product> {
        let one = Scalar::from_integer(1.into());
        Product::combine(&[(one.clone(), self), (-one, other)])
    }

    /// `(x, y) -> (L x) ⋄ (R y)`; a missing map means the identity.
    pub fn precompose(&self, left: Option<&Matrix>, right: Option<&Matrix>) -> Result<Product> {
        let ldim = match left {
            Some(m) if m.rows() != self.left => return Err(Error::dim("left precomposition")),
            Some(m) => m.cols(),
            None => self.left,
        };
        let rdim = match right {
            Some(m) if m.rows() != self.right => return Err(Error::dim("right precomposition")),
            Some(m) => m.cols(),
            None => self.right,
        };
        let image = |m: Option<&Matrix>, n: usize, i: usize| match m {
            Some(m) => m.column(i),
            None => Vector::basis(n, i),
        };
        Ok(Product::from_fn(ldim, rdim, self.out, |i, j| {
            self.eval(&image(left, self.left, i), &image(right, self.right, j))
        }))
    }

    /// `(x, y) -> M (x ⋄ y)`.
    pub fn postcompose(&self, m: &Matrix) -> Result<Product> {
        if m.cols() != self.out {
            return Err(Error::dim("postcomposition"));
        }
        Ok(Product::from_fn(self.left, self.right, m.rows(), |i, j| {
            m.apply(&self.eval_basis(i, j))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sample() -> Product {
        Product::from_entries(2, 2, 2, [(0, 1, 1, int(3)), (1, 0, 0, int(-1))]).unwrap()
    }

    #[test]
    fn flip_swaps_arguments() {
        let p = sample();
        let f = p.flip().unwrap();
        assert_eq!(f.get(1, 0, 1), &int(3));
        assert_eq!(f.get(0, 1, 0), &int(-1));
        assert_eq!(f.flip().unwrap(), p);
    }

    #[test]
    fn zero_product_reports_symmetric() {
        assert_eq!(Product::square(3).symmetry(), Symmetry::Symmetric);
    }

    #[test]
    fn skew_detected() {
        let p = Product::from_entries(2, 2, 1, [(0, 1, 0, int(2)), (1, 0, 0, int(-2))]).unwrap();
        assert_eq!(p.symmetry(), Symmetry::Skew);
    }

    #[test]
    fn combine_rejects_empty_and_mismatched() {
        assert!(matches!(Product::combine(&[]), Err(Error::EmptyCombination)));
        let a = Product::square(2);
        let b = Product::square(3);
        assert!(Product::combine(&[(int(1), &a), (int(1), &b)]).is_err());
    }
}
