use super::scalar::{Field, Scalar};
use super::subspace::{SpanBuilder, Subspace};
use super::vector::Vector;
use crate::error::{Error, Result};

/// A linear map `field^dim_in -> field^dim_out`, stored by the images of the
/// standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    dim_in: usize,
    dim_out: usize,
    field: Field,
    cols: Vec<Vector>,
}

impl LinearMap {
    pub fn from_columns(dim_out: usize, field: Field, cols: Vec<Vector>) -> Result<LinearMap> {
        for c in &cols {
            if c.dim() != dim_out {
                return Err(Error::DimensionError { expected: dim_out, found: c.dim() });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
            }
        }
        Ok(LinearMap { dim_in: cols.len(), dim_out, field, cols })
    }

    pub fn identity(dim: usize, field: Field) -> LinearMap {
        let cols = (0..dim).map(|i| Vector::unit(dim, i, field)).collect();
        LinearMap { dim_in: dim, dim_out: dim, field, cols }
    }

    pub fn zero(dim_in: usize, dim_out: usize, field: Field) -> LinearMap {
        LinearMap { dim_in, dim_out, field, cols: vec![Vector::zero(dim_out, field); dim_in] }
    }

    /// Sends basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(dim_out: usize, field: Field, perm: &[usize]) -> LinearMap {
        let cols = perm.iter().map(|&j| Vector::unit(dim_out, j, field)).collect();
        LinearMap { dim_in: perm.len(), dim_out, field, cols }
    }

    /// Row-major dense matrix `m[i][j]` = coefficient of output `i` on input `j`.
    pub fn from_rows(m: &[Vec<Scalar>], dim_in: usize, field: Field) -> Result<LinearMap> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim_in];
        for (i, row) in m.iter().enumerate() {
            if row.len() != dim_in {
                return Err(Error::DimensionError { expected: dim_in, found: row.len() });
            }
            for (j, c) in row.iter().enumerate() {
                if c.field() != field {
                    return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
                }
                if !c.is_zero() {
                    cols[j].push((i, c.clone()));
                }
            }
        }
        let dim_out = m.len();
        let cols = cols.into_iter().map(|t| Vector::from_terms(dim_out, field, t)).collect();
        Ok(LinearMap { dim_in, dim_out, field, cols })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn rows_dense(&self) -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![self.field.zero(); self.dim_in]; self.dim_out];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.entries() {
                m[*i][j] = x.clone();
            }
        }
        m
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.dim(), self.dim_in);
        let mut terms = Vec::new();
        for (j, c) in v.entries() {
            terms.extend(self.cols[*j].entries().iter().map(|(i, x)| (*i, x.mul(c))));
        }
        Vector::from_terms(self.dim_out, self.field, terms)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(other.dim_out, self.dim_in, "composition dimension mismatch");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        LinearMap { dim_in: other.dim_in, dim_out: self.dim_out, field: self.field, cols }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect();
        LinearMap { cols, ..self.clone() }
    }

    pub fn image(&self, s: &Subspace) -> Subspace {
        Subspace::span_of(self.dim_out, self.field, s.rows().iter().map(|r| self.apply(r)))
    }

    pub fn range(&self) -> Subspace {
        Subspace::span_of(self.dim_out, self.field, self.cols.iter().cloned())
    }

    pub fn rank(&self) -> usize {
        self.range().rank()
    }

    pub fn kernel(&self) -> Subspace {
        // kernel = annihilator of the row space
        let rows = self.rows_dense();
        let vecs = rows
            .into_iter()
            .map(|r| Vector::from_dense(r, self.field).expect("same field"));
        Subspace::span_of(self.dim_in, self.field, vecs).annihilator()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.dim_in
    }

    pub fn is_bijective(&self) -> bool {
        self.dim_in == self.dim_out && self.is_injective()
    }

    /// Preimage of the subspace `s`.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        // x ↦ class of self(x) modulo s; the kernel of that composite
        let k = s.annihilator();
        let funcs: Vec<Vector> = k
            .rows()
            .iter()
            .map(|f| {
                let terms = self
                    .cols
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (j, dot(f, c)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                Vector::from_terms(self.dim_in, self.field, terms)
            })
            .collect();
        Subspace::span_of(self.dim_in, self.field, funcs).annihilator()
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        if !self.is_bijective() {
            return Err(Error::PreconditionFailed("map is not invertible".into()));
        }
        let n = self.dim_in;
        let mut b = SpanBuilder::new(2 * n, self.field);
        for (j, c) in self.cols.iter().enumerate() {
            b.insert(&c.concat(&Vector::unit(n, j, self.field)));
        }
        // row i of the echelon form is (e_i | A^{-1} e_i)
        let cols = b.finish().rows().iter().map(|r| r.window(n, n)).collect();
        Ok(LinearMap { dim_in: n, dim_out: n, field: self.field, cols })
    }
}

pub fn dot(a: &Vector, b: &Vector) -> Scalar {
    let (x, y) = (a.entries(), b.entries());
    let (mut i, mut j) = (0, 0);
    let mut acc = a.field().zero();
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.add(&x[i].1.mul(&y[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn m(rows: &[&[i64]]) -> LinearMap {
        let d: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| q().from_i64(x)).collect()).collect();
        LinearMap::from_rows(&d, rows[0].len(), q()).unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), LinearMap::identity(2, q()));
        assert_eq!(inv, m(&[&[-5, 2], &[3, -1]]));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn kernel_and_preimage() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.kernel(), Subspace::span(&[Vector::from_i64(3, q(), &[1, -1, 0])], 3, q()).unwrap());
        let line = Subspace::coordinate(2, q(), [1]);
        let pre = a.preimage(&line);
        assert_eq!(pre.rank(), 2);
        assert!(pre.has(&Vector::from_i64(3, q(), &[0, 0, 1])));
    }
}
