use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, SpanBuilder, Subspace, Vector};

/// A finite-dimensional algebra given by structure constants on a basis.
///
/// `table[i]` lists the nonzero products `b_i b_j` as `(j, coordinates)`, sorted by `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    field: Field,
    table: Vec<Vec<(usize, Vector)>>,
}

impl Algebra {
    /// Builds the algebra from `(i, j, b_i b_j)` triples; absent pairs multiply to zero.
    /// Associativity is not checked here, see [`Algebra::check_associative`].
    pub fn from_products(
        dim: usize,
        field: Field,
        products: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Algebra> {
        let mut table: Vec<Vec<(usize, Vector)>> = vec![Vec::new(); dim];
        for (i, j, v) in products {
            if i >= dim {
                return Err(Error::IndexOutOfRange(i));
            }
            if j >= dim {
                return Err(Error::IndexOutOfRange(j));
            }
            if v.dim() != dim {
                return Err(Error::DimensionError { expected: dim, found: v.dim() });
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
            if !v.is_zero() {
                table[i].push((j, v));
            }
        }
        for row in table.iter_mut() {
            row.sort_by_key(|e| e.0);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::PreconditionFailed(format!("product of basis pair with second index {} given twice", w[0].0)));
            }
        }
        Ok(Algebra { dim, field, table })
    }

    /// Same as [`Algebra::from_products`] and then checks associativity.
    pub fn validate(
        dim: usize,
        field: Field,
        products: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Algebra> {
        let a = Algebra::from_products(dim, field, products)?;
        a.check_associative()?;
        Ok(a)
    }

    pub fn zero_product(dim: usize, field: Field) -> Algebra {
        Algebra { dim, field, table: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Nonzero products `b_i b_j`, as `(j, b_i b_j)`.
    pub fn row(&self, i: usize) -> &[(usize, Vector)] {
        &self.table[i]
    }

    pub fn product(&self, i: usize, j: usize) -> Option<&Vector> {
        let row = &self.table[i];
        row.binary_search_by_key(&j, |e| e.0).ok().map(|k| &row[k].1)
    }

    /// All nonzero structure constants as `(i, j, b_i b_j)`.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> + '_ {
        self.table.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i, self.field)
    }

    pub fn multiply(&self, u: &Vector, v: &Vector) -> Vector {
        debug_assert_eq!(u.dim(), self.dim);
        debug_assert_eq!(v.dim(), self.dim);
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in u.entries() {
            let row = &self.table[*i];
            if row.is_empty() {
                continue;
            }
            for (j, b) in v.entries() {
                if let Ok(k) = row.binary_search_by_key(j, |e| e.0) {
                    let ab = a.mul(b);
                    terms.extend(row[k].1.entries().iter().map(|(m, c)| (*m, c.mul(&ab))));
                }
            }
        }
        Vector::from_terms(self.dim, self.field, terms)
    }

    pub fn checked_multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        for w in [u, v] {
            if w.dim() != self.dim {
                return Err(Error::DimensionError { expected: self.dim, found: w.dim() });
            }
            if w.field() != self.field {
                return Err(Error::FieldMismatch(w.field().to_string(), self.field.to_string()));
            }
        }
        Ok(self.multiply(u, v))
    }

    /// Exhaustive check of `(b_i b_j) b_k = b_i (b_j b_k)`; reports the first failing triple.
    pub fn check_associative(&self) -> Result<()> {
        match self.associativity_failure() {
            None => Ok(()),
            Some((i, j, k)) => Err(Error::NonAssociative(i, j, k)),
        }
    }

    /// First triple in lexicographic order where associativity fails.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                // (b_i b_j) b_k = Σ_m c_ij^m b_m b_k
                let mut lhs: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                if let Some(p) = self.product(i, j) {
                    for (m, c) in p.entries() {
                        for (k, v) in &self.table[*m] {
                            lhs.entry(*k)
                                .or_default()
                                .extend(v.entries().iter().map(|(n, x)| (*n, x.mul(c))));
                        }
                    }
                }
                // b_i (b_j b_k) = Σ_m c_jk^m b_i b_m
                let mut rhs: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                for (k, p) in &self.table[j] {
                    for (m, c) in p.entries() {
                        if let Some(v) = self.product(i, *m) {
                            rhs.entry(*k)
                                .or_default()
                                .extend(v.entries().iter().map(|(n, x)| (*n, x.mul(c))));
                        }
                    }
                }
                let finish = |m: BTreeMap<usize, Vec<(usize, Scalar)>>| -> BTreeMap<usize, Vector> {
                    m.into_iter()
                        .map(|(k, t)| (k, Vector::from_terms(self.dim, self.field, t)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                };
                let (lhs, rhs) = (finish(lhs), finish(rhs));
                if lhs != rhs {
                    let bad = lhs
                        .keys()
                        .chain(rhs.keys())
                        .copied()
                        .filter(|k| lhs.get(k) != rhs.get(k))
                        .min()
                        .expect("maps differ on some key");
                    return Some((i, j, bad));
                }
            }
        }
        None
    }

    /// The two-sided identity element, if there is one.
    pub fn unit(&self) -> Option<Vector> {
        let d = self.dim;
        // unknowns e_0..e_{d-1} and a homogenizing coordinate at index d
        let mut eqs = SpanBuilder::new(d + 1, self.field);
        for j in 0..d {
            for side in [false, true] {
                // coefficient of b_m in e b_j (or b_j e) minus δ_jm
                let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                for i in 0..d {
                    let p = if side { self.product(j, i) } else { self.product(i, j) };
                    if let Some(p) = p {
                        for (m, c) in p.entries() {
                            rows.entry(*m).or_default().push((i, c.clone()));
                        }
                    }
                }
                rows.entry(j).or_default().push((d, self.field.from_i64(-1)));
                for (_, t) in rows {
                    eqs.insert(&Vector::from_terms(d + 1, self.field, t));
                }
            }
        }
        let sol = eqs.finish().annihilator();
        let v = sol.rows().iter().find(|r| !r.get(d).is_zero())?;
        let v = v.scale(&v.get(d).inv());
        Some(v.window(0, d))
    }

    /// Structure constants of the subalgebra `sub`, on its echelon basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Algebra> {
        let rows = sub.rows();
        let n = rows.len();
        let mut products = Vec::new();
        for (a, u) in rows.iter().enumerate() {
            for (b, v) in rows.iter().enumerate() {
                let w = self.multiply(u, v);
                if w.is_zero() {
                    continue;
                }
                let c = sub.coordinates(&w).ok_or_else(|| {
                    Error::ClosureViolation(format!("product of basis vectors {a} and {b} leaves the subspace"))
                })?;
                products.push((a, b, c));
            }
        }
        Algebra::from_products(n, self.field, products)
    }

    /// `span{uv : u ∈ U, v ∈ V}`, stopping once the rank reaches `cap`.
    pub fn span_product(&self, u: &Subspace, v: &Subspace, cap: usize) -> Subspace {
        let mut b = SpanBuilder::new(self.dim, self.field);
        if cap == 0 {
            return b.finish();
        }
        for x in u.rows() {
            for y in v.rows() {
                let w = self.multiply(x, y);
                if !w.is_zero() && b.insert(&w) && b.rank() >= cap {
                    return b.finish();
                }
            }
        }
        b.finish()
    }

    pub fn span_mul(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.span_product(u, v, self.dim)
    }

    pub fn is_two_sided_ideal(&self, u: &Subspace) -> bool {
        let full = Subspace::full(self.dim, self.field);
        self.span_mul(&full, u).is_subspace_of(u) && self.span_mul(u, &full).is_subspace_of(u)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        self.span_mul(u, u).is_subspace_of(u)
    }

    /// Left multiplication by `u`, as a list of images of basis vectors.
    pub fn left_multiplication(&self, u: &Vector) -> Vec<Vector> {
        (0..self.dim).map(|j| self.multiply(u, &self.basis_vector(j))).collect()
    }

    pub fn right_multiplication(&self, u: &Vector) -> Vec<Vector> {
        (0..self.dim).map(|j| self.multiply(&self.basis_vector(j), u)).collect()
    }

    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        assert_eq!(self.field, other.field, "direct sum over different fields");
        let d = self.dim + other.dim;
        let mut table: Vec<Vec<(usize, Vector)>> = self
            .table
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v.shifted(0, d))).collect())
            .collect();
        table.extend(other.table.iter().map(|row| {
            row.iter().map(|(j, v)| (j + self.dim, v.shifted(self.dim, d))).collect()
        }));
        Algebra { dim: d, field: self.field, table }
    }

    /// The same algebra in the basis `new_basis[k]` (old coordinates), with
    /// `inverse[i]` the new coordinates of the old basis vector `i`.
    pub fn change_basis(&self, new_basis: &[Vector], inverse: &[Vector]) -> Algebra {
        let to_new = |v: &Vector| -> Vector {
            let mut terms = Vec::new();
            for (i, c) in v.entries() {
                terms.extend(inverse[*i].entries().iter().map(|(k, x)| (*k, x.mul(c))));
            }
            Vector::from_terms(self.dim, self.field, terms)
        };
        let mut products = Vec::new();
        for (a, u) in new_basis.iter().enumerate() {
            for (b, v) in new_basis.iter().enumerate() {
                let w = self.multiply(u, v);
                if !w.is_zero() {
                    products.push((a, b, to_new(&w)));
                }
            }
        }
        Algebra::from_products(self.dim, self.field, products).expect("well-formed products")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Whether `f` (images of basis vectors, in `target`) is multiplicative.
    pub fn is_homomorphism(&self, target: &Algebra, images: &[Vector]) -> Result<()> {
        let apply = |v: &Vector| -> Vector {
            let mut terms = Vec::new();
            for (i, c) in v.entries() {
                terms.extend(images[*i].entries().iter().map(|(k, x)| (*k, x.mul(c))));
            }
            Vector::from_terms(target.dim, target.field, terms)
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.product(i, j).map(apply).unwrap_or_else(|| Vector::zero(target.dim, target.field));
                let rhs = target.multiply(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(format!("f(b_{i} b_{j}) != f(b_{i}) f(b_{j})")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn kc2() -> Algebra {
        let e = |i| Vector::unit(2, i, q());
        Algebra::validate(2, q(), vec![(0, 0, e(0)), (0, 1, e(1)), (1, 0, e(1)), (1, 1, e(0))]).unwrap()
    }

    #[test]
    fn group_algebra_unit() {
        let a = kc2();
        assert_eq!(a.unit(), Some(Vector::unit(2, 0, q())));
        assert!(a.is_commutative());
    }

    #[test]
    fn non_associative_triple_reported() {
        // b0 b0 = b1, everything else zero except b1 b0 = b0
        let e = |i| Vector::unit(2, i, q());
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(1)), (1, 0, e(0))]).unwrap();
        // (b0 b0) b0 = b1 b0 = b0, b0 (b0 b0) = b0 b1 = 0
        assert_eq!(a.check_associative(), Err(Error::NonAssociative(0, 0, 0)));
    }

    #[test]
    fn zero_algebra_has_no_unit() {
        assert_eq!(Algebra::zero_product(1, q()).unit(), None);
        assert_eq!(Algebra::zero_product(0, q()).unit(), Some(Vector::zero(0, q())));
    }

    #[test]
    fn restrict_to_line() {
        let a = kc2();
        // 1 + u is an idempotent up to 2: (1+u)^2 = 2(1+u)
        let s = Subspace::span(&[Vector::from_i64(2, q(), &[1, 1])], 2, q()).unwrap();
        let r = a.restrict(&s).unwrap();
        assert_eq!(r.product(0, 0), Some(&Vector::from_i64(1, q(), &[2])));
        let bad = Subspace::coordinate(2, q(), [1]);
        assert!(matches!(a.restrict(&bad), Err(Error::ClosureViolation(_))));
    }

    #[test]
    fn duplicate_product_rejected() {
        let e = |i| Vector::unit(1, i, q());
        assert!(Algebra::from_products(1, q(), vec![(0, 0, e(0)), (0, 0, e(0))]).is_err());
    }
}
