use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A coordinate vector stored sparsely: sorted `(index, nonzero value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    dim: usize,
    field: Field,
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zero(dim: usize, field: Field) -> Vector {
        Vector { dim, field, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize, field: Field) -> Vector {
        assert!(i < dim, "unit vector index {i} out of range {dim}");
        Vector { dim, field, entries: vec![(i, field.one())] }
    }

    pub fn from_dense(coords: Vec<Scalar>, field: Field) -> Result<Vector> {
        let dim = coords.len();
        let mut entries = Vec::new();
        for (i, c) in coords.into_iter().enumerate() {
            if c.field() != field {
                return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
            }
            if !c.is_zero() {
                entries.push((i, c));
            }
        }
        Ok(Vector { dim, field, entries })
    }

    /// Builds a vector from unordered terms, combining repeated indices.
    pub fn from_terms(dim: usize, field: Field, mut terms: Vec<(usize, Scalar)>) -> Vector {
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            debug_assert!(i < dim);
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.add(&c),
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        Vector { dim, field, entries }
    }

    pub fn from_i64(dim: usize, field: Field, coords: &[i64]) -> Vector {
        assert_eq!(coords.len(), dim);
        let entries = coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, field.from_i64(c)))
            .collect();
        Vector { dim, field, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn check_compatible(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionError { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero(self.dim, self.field);
        }
        let entries = self.entries.iter().map(|(i, x)| (*i, x.mul(c))).collect();
        Vector { dim: self.dim, field: self.field, entries }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&self.field.from_i64(-1))
    }

    /// `self + c * other`, merging the sorted supports.
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, b[j].1.mul(c)));
                j += 1;
            } else {
                let v = a[i].1.add(&b[j].1.mul(c));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Vector { dim: self.dim, field: self.field, entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.axpy(&self.field.one(), other)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.axpy(&self.field.from_i64(-1), other)
    }

    /// Reindexes into a space of dimension `dim`, shifting every index by `offset`.
    pub fn shifted(&self, offset: usize, dim: usize) -> Vector {
        let entries = self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect();
        Vector { dim, field: self.field, entries }
    }

    /// Keeps the coordinates in `start..start + len`, reindexed from zero.
    pub fn window(&self, start: usize, len: usize) -> Vector {
        let entries = self
            .entries
            .iter()
            .filter(|(i, _)| *i >= start && *i < start + len)
            .map(|(i, c)| (i - start, c.clone()))
            .collect();
        Vector { dim: len, field: self.field, entries }
    }

    /// Rewrites indices through `map`, into a space of dimension `dim`.
    pub fn reindexed(&self, dim: usize, map: impl Fn(usize) -> usize) -> Vector {
        let terms = self.entries.iter().map(|(i, c)| (map(*i), c.clone())).collect();
        Vector::from_terms(dim, self.field, terms)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(i, c)| (i + self.dim, c.clone())));
        Vector { dim: self.dim + other.dim, field: self.field, entries }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let q = Field::Rationals;
        let u = Vector::from_i64(3, q, &[1, 2, 0]);
        let v = Vector::from_i64(3, q, &[1, 0, 5]);
        let w = u.axpy(&q.from_i64(-1), &v);
        assert_eq!(w, Vector::from_i64(3, q, &[0, 2, -5]));
        assert!(u.sub(&u).is_zero());
    }

    #[test]
    fn terms_combine() {
        let f = Field::Prime(5);
        let v = Vector::from_terms(4, f, vec![(2, f.from_i64(3)), (0, f.one()), (2, f.from_i64(2))]);
        assert_eq!(v.entries().len(), 1);
        assert_eq!(v.get(0), f.one());
    }

    #[test]
    fn window_and_shift_round_trip() {
        let q = Field::Rationals;
        let v = Vector::from_i64(2, q, &[3, -1]);
        assert_eq!(v.shifted(3, 6).window(3, 2), v);
        assert_eq!(v.concat(&v).dim(), 4);
    }
}
