use std::fmt;

use super::scalar::{Field, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Incremental reduced row-echelon form.
///
/// Rows stay fully reduced after every insertion, so reducing a vector is a
/// single pass over its support.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    dim: usize,
    field: Field,
    rows: Vec<Vector>,
    pivot_row: Vec<Option<usize>>,
}

impl SpanBuilder {
    pub fn new(dim: usize, field: Field) -> SpanBuilder {
        SpanBuilder { dim, field, rows: Vec::new(), pivot_row: vec![None; dim] }
    }

    pub fn from_subspace(s: &Subspace) -> SpanBuilder {
        let mut b = SpanBuilder::new(s.dim, s.field);
        for (k, (row, p)) in s.rows.iter().zip(&s.pivots).enumerate() {
            b.rows.push(row.clone());
            b.pivot_row[*p] = Some(k);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// `v` minus its projection onto the current span along pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut terms: Vec<(usize, Scalar)> = Vec::with_capacity(v.nnz() * 2);
        let mut touched = false;
        for (col, c) in v.entries() {
            match self.pivot_row[*col] {
                Some(r) => {
                    touched = true;
                    let neg = c.neg();
                    terms.extend(self.rows[r].entries().iter().map(|(j, x)| (*j, x.mul(&neg))));
                    terms.push((*col, c.clone()));
                }
                None => terms.push((*col, c.clone())),
            }
        }
        if !touched {
            return v.clone();
        }
        Vector::from_terms(self.dim, self.field, terms)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        if self.is_full() {
            return true;
        }
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        assert_eq!(v.dim(), self.dim, "span builder dimension mismatch");
        if self.is_full() {
            return false;
        }
        let r = self.reduce(v);
        let Some((q, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.inv());
        for row in self.rows.iter_mut() {
            let c = row.get(q);
            if !c.is_zero() {
                *row = row.axpy(&c.neg(), &r);
            }
        }
        self.pivot_row[q] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn finish(self) -> Subspace {
        let mut pairs: Vec<(usize, Vector)> = self
            .rows
            .into_iter()
            .map(|r| (r.leading().expect("nonzero row").0, r))
            .collect();
        pairs.sort_by_key(|p| p.0);
        let (pivots, rows) = pairs.into_iter().unzip();
        Subspace { dim: self.dim, field: self.field, rows, pivots }
    }
}

/// A linear subspace of `field^dim`, held in canonical reduced row-echelon form.
///
/// Two subspaces are equal exactly when their echelon matrices are identical.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    field: Field,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {}, rank {}, rows [", self.dim, self.rank())?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.dense().iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "])")
    }
}

impl Subspace {
    pub fn zero(dim: usize, field: Field) -> Subspace {
        Subspace { dim, field, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize, field: Field) -> Subspace {
        Subspace::coordinate(dim, field, 0..dim)
    }

    /// Span of the unit vectors at `indices`.
    pub fn coordinate(dim: usize, field: Field, indices: impl IntoIterator<Item = usize>) -> Subspace {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let rows = idx.iter().map(|&i| Vector::unit(dim, i, field)).collect();
        Subspace { dim, field, rows, pivots: idx }
    }

    pub fn span(vectors: &[Vector], dim: usize, field: Field) -> Result<Subspace> {
        let mut b = SpanBuilder::new(dim, field);
        for v in vectors {
            if v.dim() != dim {
                return Err(Error::DimensionError { expected: dim, found: v.dim() });
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
            b.insert(v);
        }
        Ok(b.finish())
    }

    /// Span of an iterator of vectors known to have the right shape.
    pub fn span_of(dim: usize, field: Field, vectors: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut b = SpanBuilder::new(dim, field);
        for v in vectors {
            b.insert(&v);
            if b.is_full() {
                break;
            }
        }
        b.finish()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionError { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.dim() != self.dim {
            return Err(Error::DimensionError { expected: self.dim, found: v.dim() });
        }
        Ok(self.coordinates(v).is_some())
    }

    /// Same as [`Subspace::contains`] for vectors already known to share the ambient space.
    pub fn has(&self, v: &Vector) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, read off the pivot columns.
    /// `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        debug_assert_eq!(v.dim(), self.dim);
        let terms: Vec<(usize, Scalar)> = self
            .pivots
            .iter()
            .enumerate()
            .map(|(k, &p)| (k, v.get(p)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let coords = Vector::from_terms(self.rank(), self.field, terms);
        if self.combine(&coords) == *v {
            Some(coords)
        } else {
            None
        }
    }

    /// `Σ c_k row_k`.
    pub fn combine(&self, coords: &Vector) -> Vector {
        let mut terms = Vec::new();
        for (k, c) in coords.entries() {
            terms.extend(self.rows[*k].entries().iter().map(|(j, x)| (*j, x.mul(c))));
        }
        Vector::from_terms(self.dim, self.field, terms)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.plus(other))
    }

    pub(crate) fn plus(&self, other: &Subspace) -> Subspace {
        if other.rank() > self.rank() {
            return other.plus(self);
        }
        let mut b = SpanBuilder::from_subspace(self);
        for r in &other.rows {
            b.insert(r);
        }
        b.finish()
    }

    /// Zassenhaus: echelonize `[u | u]` for u in U and `[v | 0]` for v in V;
    /// rows whose left half vanishes give a basis of U ∩ V.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.meet(other))
    }

    pub(crate) fn meet(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.dim, self.field);
        }
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        let n = self.dim;
        let mut b = SpanBuilder::new(2 * n, self.field);
        for u in &self.rows {
            b.insert(&u.concat(u));
        }
        let zero = Vector::zero(n, self.field);
        for v in &other.rows {
            b.insert(&v.concat(&zero));
        }
        let out = b.finish();
        let rows: Vec<Vector> = out
            .rows
            .iter()
            .zip(&out.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r.window(n, n))
            .collect();
        Subspace::span_of(n, self.field, rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rank() <= other.rank() && self.rows.iter().all(|r| other.has(r))
    }

    /// Solutions x of `⟨row, x⟩ = 0` for every row: the kernel of the matrix
    /// whose rows span `self`.
    pub fn annihilator(&self) -> Subspace {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.dim).filter(|&c| !is_pivot[c]) {
            let mut terms = vec![(f, self.field.one())];
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                let c = row.get(f);
                if !c.is_zero() {
                    terms.push((p, c.neg()));
                }
            }
            basis.push(Vector::from_terms(self.dim, self.field, terms));
        }
        Subspace::span_of(self.dim, self.field, basis)
    }

    /// Shifts the subspace into coordinates `offset..offset + self.dim` of a larger space.
    pub fn shifted(&self, offset: usize, dim: usize) -> Subspace {
        Subspace {
            dim,
            field: self.field,
            rows: self.rows.iter().map(|r| r.shifted(offset, dim)).collect(),
            pivots: self.pivots.iter().map(|p| p + offset).collect(),
        }
    }

    /// Coordinate projection onto `start..start + len`.
    pub fn window(&self, start: usize, len: usize) -> Subspace {
        Subspace::span_of(len, self.field, self.rows.iter().map(|r| r.window(start, len)))
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form of a dense matrix; zero rows are kept at the bottom.
pub fn rref(m: &[Vec<Scalar>]) -> Result<Echelon> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let field = m
        .iter()
        .flatten()
        .next()
        .map(|c| c.field())
        .unwrap_or(Field::Rationals);
    let mut b = SpanBuilder::new(ncols, field);
    for row in m {
        if row.len() != ncols {
            return Err(Error::DimensionError { expected: ncols, found: row.len() });
        }
        b.insert(&Vector::from_dense(row.clone(), field)?);
    }
    let s = b.finish();
    let mut matrix: Vec<Vec<Scalar>> = s.rows.iter().map(|r| r.dense()).collect();
    matrix.resize(nrows, vec![field.zero(); ncols]);
    Ok(Echelon { rank: s.rank(), pivots: s.pivots.clone(), matrix })
}

/// An arbitrary (not echelonized) basis together with a coordinate solver.
#[derive(Clone, Debug)]
pub struct Basis {
    vectors: Vec<Vector>,
    span: Subspace,
    /// Echelonized `[b_k | e_k]`; reducing `[v | 0]` leaves `[0 | -coords]`.
    graph: SpanBuilder,
}

impl Basis {
    pub fn new(vectors: Vec<Vector>, dim: usize, field: Field) -> Result<Basis> {
        let n = vectors.len();
        let mut graph = SpanBuilder::new(dim + n, field);
        for (k, v) in vectors.iter().enumerate() {
            if v.dim() != dim {
                return Err(Error::DimensionError { expected: dim, found: v.dim() });
            }
            graph.insert(&v.concat(&Vector::unit(n, k, field)));
        }
        let span = Subspace::span(&vectors, dim, field)?;
        if span.rank() != n {
            return Err(Error::PreconditionFailed("basis vectors are linearly dependent".into()));
        }
        Ok(Basis { vectors, span, graph })
    }

    pub fn from_subspace(s: &Subspace) -> Basis {
        Basis::new(s.rows.to_vec(), s.dim, s.field).expect("echelon rows are independent")
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let n = self.vectors.len();
        let r = self.graph.reduce(&v.concat(&Vector::zero(n, v.field())));
        if r.entries().iter().any(|(i, _)| *i < v.dim()) {
            return None;
        }
        Some(r.window(v.dim(), n).neg())
    }
}
