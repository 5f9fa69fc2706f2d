// SPDX-License-Identifier: Apache-2.0

//! Structure-constant tensors for bilinear and trilinear maps.

use serde::{Serialize, Serializer};

use super::matrix::{vec_axpy, zero_vector, Matrix, Vector};
use super::rational::Rational;

/// A bilinear map `A x B -> Out`; `coeffs[k][i][j]` is the coefficient of
/// output basis vector `k` in the image of `(e_i, f_j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearMap {
    dim_a: usize,
    dim_b: usize,
    dim_out: usize,
    coeffs: Vec<Rational>,
}

impl BilinearMap {
    pub fn zeros(dim_a: usize, dim_b: usize, dim_out: usize) -> Self {
        BilinearMap {
            dim_a,
            dim_b,
            dim_out,
            coeffs: vec![Rational::zero(); dim_a * dim_b * dim_out],
        }
    }

    /// Builds the map from its values on basis pairs.
    pub fn from_basis_fn(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut m = BilinearMap::zeros(dim_a, dim_b, dim_out);
        for i in 0..dim_a {
            for j in 0..dim_b {
                let v = f(i, j);
                assert_eq!(v.len(), dim_out, "basis value has wrong length");
                for (k, x) in v.into_iter().enumerate() {
                    m.set(k, i, j, x);
                }
            }
        }
        m
    }

    /// Builds the map from a bilinear function on vectors by evaluating it
    /// on basis pairs.
    pub fn from_bilinear_fn(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        mut f: impl FnMut(&[Rational], &[Rational]) -> Vector,
    ) -> Self {
        use super::matrix::unit_vector;
        BilinearMap::from_basis_fn(dim_a, dim_b, dim_out, |i, j| {
            f(&unit_vector(dim_a, i), &unit_vector(dim_b, j))
        })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_a, self.dim_b, self.dim_out)
    }

    #[inline]
    fn offset(&self, k: usize, i: usize, j: usize) -> usize {
        debug_assert!(k < self.dim_out && i < self.dim_a && j < self.dim_b);
        (k * self.dim_a + i) * self.dim_b + j
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.coeffs[self.offset(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, x: Rational) {
        let o = self.offset(k, i, j);
        self.coeffs[o] = x;
    }

    pub fn add_to(&mut self, k: usize, i: usize, j: usize, x: &Rational) {
        let o = self.offset(k, i, j);
        self.coeffs[o] += x;
    }

    /// Value on the basis pair `(e_i, f_j)`.
    pub fn basis_value(&self, i: usize, j: usize) -> Vector {
        (0..self.dim_out).map(|k| self.get(k, i, j).clone()).collect()
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.dim_a);
        assert_eq!(y.len(), self.dim_b);
        let mut out = zero_vector(self.dim_out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let a = self.get(k, i, j);
                    if !a.is_zero() {
                        *o += &c * a;
                    }
                }
            }
        }
        out
    }

    /// The operator `y ↦ B(x, y)` for a fixed first argument.
    pub fn left_operator(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim_out, self.dim_b);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for k in 0..self.dim_out {
                for j in 0..self.dim_b {
                    let a = self.get(k, i, j);
                    if !a.is_zero() {
                        m[(k, j)] += xi * a;
                    }
                }
            }
        }
        m
    }

    /// The operator `y ↦ B(e_i, y)`.
    pub fn left_basis_operator(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim_out, self.dim_b, |k, j| self.get(k, i, j).clone())
    }

    /// The operator `x ↦ B(x, f_j)`.
    pub fn right_basis_operator(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.dim_out, self.dim_a, |k, i| self.get(k, i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.dim_a == self.dim_b && *self == self.swap_args()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.dim_a == self.dim_b && *self == self.swap_args().scale(&Rational::from_int(-1))
    }

    /// `(x, y) ↦ B(y, x)`.
    pub fn swap_args(&self) -> BilinearMap {
        let mut m = BilinearMap::zeros(self.dim_b, self.dim_a, self.dim_out);
        for k in 0..self.dim_out {
            for i in 0..self.dim_a {
                for j in 0..self.dim_b {
                    m.set(k, j, i, self.get(k, i, j).clone());
                }
            }
        }
        m
    }

    pub fn symmetric_part(&self) -> BilinearMap {
        self.add(&self.swap_args()).scale(&Rational::half())
    }

    pub fn antisymmetric_part(&self) -> BilinearMap {
        self.sub(&self.swap_args()).scale(&Rational::half())
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dims(), other.dims(), "bilinear map shape mismatch");
        BilinearMap {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..*self
        }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dims(), other.dims(), "bilinear map shape mismatch");
        BilinearMap {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            ..*self
        }
    }

    pub fn scale(&self, c: &Rational) -> BilinearMap {
        BilinearMap {
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
            ..*self
        }
    }

    /// Post-composition with a linear map `m: Out -> Out'`.
    pub fn map_output(&self, m: &Matrix) -> BilinearMap {
        assert_eq!(m.cols(), self.dim_out);
        BilinearMap::from_basis_fn(self.dim_a, self.dim_b, m.rows(), |i, j| {
            m.mul_vec(&self.basis_value(i, j))
        })
    }

    /// Pre-composition: `(x', y') ↦ B(pa x', pb y')`.
    pub fn pullback(&self, pa: &Matrix, pb: &Matrix) -> BilinearMap {
        assert_eq!(pa.rows(), self.dim_a);
        assert_eq!(pb.rows(), self.dim_b);
        let cols_a = pa.columns();
        let cols_b = pb.columns();
        BilinearMap::from_basis_fn(pa.cols(), pb.cols(), self.dim_out, |i, j| {
            self.apply(&cols_a[i], &cols_b[j])
        })
    }

    /// The `dim_out x (dim_a * dim_b)` matrix whose column `i * dim_b + j`
    /// is the value on `(e_i, f_j)`.
    pub fn unfold(&self) -> Matrix {
        Matrix::from_fn(self.dim_out, self.dim_a * self.dim_b, |k, c| {
            self.get(k, c / self.dim_b, c % self.dim_b).clone()
        })
    }

    pub fn fold(dim_a: usize, dim_b: usize, m: &Matrix) -> BilinearMap {
        assert_eq!(m.cols(), dim_a * dim_b);
        BilinearMap::from_basis_fn(dim_a, dim_b, m.rows(), |i, j| m.column(i * dim_b + j))
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim_out)
            .map(|k| {
                (0..self.dim_a)
                    .map(|i| (0..self.dim_b).map(|j| self.get(k, i, j).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// Inverse of `to_nested` with extent checking; the error names the
    /// offending index path relative to the tensor.
    pub fn from_nested(
        nested: &[Vec<Vec<Rational>>],
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
    ) -> Result<BilinearMap, String> {
        if nested.len() != dim_out {
            return Err(format!("expected {dim_out} output slices, found {}", nested.len()));
        }
        let mut m = BilinearMap::zeros(dim_a, dim_b, dim_out);
        for (k, slice) in nested.iter().enumerate() {
            if slice.len() != dim_a {
                return Err(format!("[{k}]: expected {dim_a} rows, found {}", slice.len()));
            }
            for (i, row) in slice.iter().enumerate() {
                if row.len() != dim_b {
                    return Err(format!("[{k}][{i}]: expected {dim_b} entries, found {}", row.len()));
                }
                for (j, x) in row.iter().enumerate() {
                    m.set(k, i, j, x.clone());
                }
            }
        }
        Ok(m)
    }
}

impl Serialize for BilinearMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_nested().serialize(serializer)
    }
}

/// A trilinear map; `coeffs[k][i][j][l]` is the coefficient of output basis
/// vector `k` on `(e_i, f_j, g_l)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TrilinearMap {
    dims: [usize; 3],
    dim_out: usize,
    coeffs: Vec<Rational>,
}

impl TrilinearMap {
    pub fn zeros(a: usize, b: usize, c: usize, dim_out: usize) -> Self {
        TrilinearMap {
            dims: [a, b, c],
            dim_out,
            coeffs: vec![Rational::zero(); a * b * c * dim_out],
        }
    }

    pub fn from_basis_fn(
        a: usize,
        b: usize,
        c: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Self {
        let mut m = TrilinearMap::zeros(a, b, c, dim_out);
        for i in 0..a {
            for j in 0..b {
                for l in 0..c {
                    let v = f(i, j, l);
                    assert_eq!(v.len(), dim_out, "basis value has wrong length");
                    for (k, x) in v.into_iter().enumerate() {
                        m.set(k, i, j, l, x);
                    }
                }
            }
        }
        m
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    #[inline]
    fn offset(&self, k: usize, i: usize, j: usize, l: usize) -> usize {
        let [a, b, c] = self.dims;
        debug_assert!(k < self.dim_out && i < a && j < b && l < c);
        ((k * a + i) * b + j) * c + l
    }

    pub fn get(&self, k: usize, i: usize, j: usize, l: usize) -> &Rational {
        &self.coeffs[self.offset(k, i, j, l)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, l: usize, x: Rational) {
        let o = self.offset(k, i, j, l);
        self.coeffs[o] = x;
    }

    pub fn basis_value(&self, i: usize, j: usize, l: usize) -> Vector {
        (0..self.dim_out).map(|k| self.get(k, i, j, l).clone()).collect()
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let [a, b, c] = self.dims;
        assert!(x.len() == a && y.len() == b && z.len() == c);
        let mut out = zero_vector(self.dim_out);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (l, zl) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    vec_axpy(&mut out, &(&xy * zl), &self.basis_value(i, j, l));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &TrilinearMap) -> TrilinearMap {
        assert!(self.dims == other.dims && self.dim_out == other.dim_out);
        TrilinearMap {
            dims: self.dims,
            dim_out: self.dim_out,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &TrilinearMap) -> TrilinearMap {
        assert!(self.dims == other.dims && self.dim_out == other.dim_out);
        TrilinearMap {
            dims: self.dims,
            dim_out: self.dim_out,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TrilinearMap {
        TrilinearMap {
            dims: self.dims,
            dim_out: self.dim_out,
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
        }
    }

    /// True when all three argument slots have the same dimension and
    /// swapping any two of them flips the sign.
    pub fn is_totally_antisymmetric(&self) -> bool {
        let [a, b, c] = self.dims;
        if a != b || b != c {
            return false;
        }
        for i in 0..a {
            for j in 0..a {
                for l in 0..a {
                    let v = self.basis_value(i, j, l);
                    let neg = |w: Vector| w.into_iter().map(|x| -x).collect::<Vector>();
                    if v != neg(self.basis_value(j, i, l)) || v != neg(self.basis_value(i, l, j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Vec<Rational>>>> {
        let [a, b, c] = self.dims;
        (0..self.dim_out)
            .map(|k| {
                (0..a)
                    .map(|i| {
                        (0..b)
                            .map(|j| (0..c).map(|l| self.get(k, i, j, l).clone()).collect())
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_nested(
        nested: &[Vec<Vec<Vec<Rational>>>],
        a: usize,
        b: usize,
        c: usize,
        dim_out: usize,
    ) -> Result<TrilinearMap, String> {
        if nested.len() != dim_out {
            return Err(format!("expected {dim_out} output slices, found {}", nested.len()));
        }
        let mut m = TrilinearMap::zeros(a, b, c, dim_out);
        for (k, s) in nested.iter().enumerate() {
            if s.len() != a {
                return Err(format!("[{k}]: expected {a} entries, found {}", s.len()));
            }
            for (i, s) in s.iter().enumerate() {
                if s.len() != b {
                    return Err(format!("[{k}][{i}]: expected {b} entries, found {}", s.len()));
                }
                for (j, s) in s.iter().enumerate() {
                    if s.len() != c {
                        return Err(format!(
                            "[{k}][{i}][{j}]: expected {c} entries, found {}",
                            s.len()
                        ));
                    }
                    for (l, x) in s.iter().enumerate() {
                        m.set(k, i, j, l, x.clone());
                    }
                }
            }
        }
        Ok(m)
    }
}

impl Serialize for TrilinearMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_nested().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ints;

    #[test]
    fn apply_matches_basis_values() {
        let b = BilinearMap::from_basis_fn(2, 2, 1, |i, j| ints(&[(i * 2 + j) as i64]));
        // 1*3*0 + 1*1*1 + 2*3*2 + 2*1*3
        assert_eq!(b.apply(&ints(&[1, 2]), &ints(&[3, 1])), ints(&[19]));
        assert_eq!(b.basis_value(1, 0), ints(&[2]));
    }

    #[test]
    fn symmetric_and_antisymmetric_parts_add_up() {
        let b = BilinearMap::from_basis_fn(2, 2, 2, |i, j| ints(&[i as i64, (j * 3 + i) as i64]));
        let s = b.symmetric_part();
        let a = b.antisymmetric_part();
        assert!(s.is_symmetric());
        assert!(a.is_antisymmetric());
        assert_eq!(s.add(&a), b);
    }

    #[test]
    fn nested_round_trip_and_extent_errors() {
        let b = BilinearMap::from_basis_fn(2, 3, 1, |i, j| ints(&[(i + j) as i64]));
        let n = b.to_nested();
        assert_eq!(BilinearMap::from_nested(&n, 2, 3, 1).unwrap(), b);
        let err = BilinearMap::from_nested(&n, 2, 2, 1).unwrap_err();
        assert!(err.starts_with("[0][0]"), "{err}");
    }

    #[test]
    fn unfold_fold_inverse() {
        let b = BilinearMap::from_basis_fn(2, 3, 2, |i, j| ints(&[i as i64, j as i64]));
        assert_eq!(BilinearMap::fold(2, 3, &b.unfold()), b);
    }
}
