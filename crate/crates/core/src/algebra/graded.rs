use super::structure::Algebra;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Field, SpanBuilder, Subspace, Vector};
use crate::report::VerificationReport;

/// An algebra with a homogeneous basis: basis vector `i` has degree `degree[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    algebra: Algebra,
    group: FiniteGroup,
    degree: Vec<usize>,
}

impl GradedAlgebra {
    /// Checks grading compatibility and associativity exhaustively.
    pub fn new(algebra: Algebra, group: FiniteGroup, degree: Vec<usize>) -> Result<GradedAlgebra> {
        GradedAlgebra::check_grading(&algebra, &group, &degree)?;
        algebra.check_associative()?;
        Ok(GradedAlgebra { algebra, group, degree })
    }

    /// For algebras that are associative and graded by construction
    /// (subalgebras, restrictions); the grading is still checked in debug builds.
    pub(crate) fn assemble(algebra: Algebra, group: FiniteGroup, degree: Vec<usize>) -> GradedAlgebra {
        debug_assert!(GradedAlgebra::check_grading(&algebra, &group, &degree).is_ok());
        GradedAlgebra { algebra, group, degree }
    }

    pub fn check_grading(algebra: &Algebra, group: &FiniteGroup, degree: &[usize]) -> Result<()> {
        if degree.len() != algebra.dim() {
            return Err(Error::DimensionError { expected: algebra.dim(), found: degree.len() });
        }
        if let Some(&bad) = degree.iter().find(|&&t| t >= group.order()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        for (i, j, v) in algebra.products() {
            let want = group.mul(degree[i], degree[j]);
            if let Some(k) = v.support().find(|&k| degree[k] != want) {
                return Err(Error::GradingViolation(i, j, k));
            }
        }
        Ok(())
    }

    /// Every basis vector in degree 1. The algebra is assumed associative.
    pub fn trivially_graded(algebra: Algebra, group: FiniteGroup) -> GradedAlgebra {
        let degree = vec![group.identity(); algebra.dim()];
        GradedAlgebra { algebra, group, degree }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    pub fn component_indices(&self, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree[i] == t).collect()
    }

    /// `B_t`.
    pub fn component(&self, t: usize) -> Subspace {
        Subspace::coordinate(self.dim(), self.field(), self.component_indices(t))
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim(), self.field())
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.dim(), self.field())
    }

    pub fn multiply(&self, u: &Vector, v: &Vector) -> Vector {
        self.algebra.multiply(u, v)
    }

    pub fn checked_multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.algebra.checked_multiply(u, v)
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &Vector) -> Option<usize> {
        let mut s = v.support();
        let t = self.degree[s.next()?];
        s.all(|k| self.degree[k] == t).then_some(t)
    }

    /// `span{uv : u ∈ U, v ∈ V}` from products of basis vectors.
    pub fn product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.product_capped(u, v, self.dim())
    }

    /// As [`GradedAlgebra::product`], stopping once the rank reaches `cap`.
    /// Only meaningful when the product is known to lie in a space of rank `cap`.
    pub fn product_capped(&self, u: &Subspace, v: &Subspace, cap: usize) -> Subspace {
        self.algebra.span_product(u, v, cap)
    }

    pub fn product3(&self, u: &Subspace, v: &Subspace, w: &Subspace) -> Subspace {
        self.product(&self.product(u, v), w)
    }

    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        for s in [u, v] {
            if s.dim() != self.dim() {
                return Err(Error::DimensionError { expected: self.dim(), found: s.dim() });
            }
            if s.field() != self.field() {
                return Err(Error::FieldMismatch(s.field().to_string(), self.field().to_string()));
            }
        }
        Ok(self.product(u, v))
    }

    /// `D_t = B_t B_{t⁻¹}`, unchecked.
    pub fn d(&self, t: usize) -> Subspace {
        let b1 = self.component(self.group.identity()).rank();
        self.product_capped(&self.component(t), &self.component(self.group.inv(t)), b1)
    }

    /// `D_t = B_t B_{t⁻¹}`, verified to be a two-sided ideal of `B_1`.
    pub fn ideal_d(&self, t: usize) -> Result<Subspace> {
        if t >= self.group.order() {
            return Err(Error::IndexOutOfRange(t));
        }
        let d = self.d(t);
        let b1 = self.component(self.group.identity());
        let closed = self.product(&b1, &d).is_subspace_of(&d) && self.product(&d, &b1).is_subspace_of(&d);
        if !closed {
            return Err(Error::NotIdeal(t));
        }
        Ok(d)
    }

    /// `B_r = Σ_s B_s B_{s⁻¹r}` for every `r`; the same as `B² = B`.
    pub fn is_idempotent_graded(&self) -> bool {
        let g = &self.group;
        g.elements().all(|r| {
            let br = self.component(r);
            let mut b = SpanBuilder::new(self.dim(), self.field());
            for s in g.elements() {
                let p = self.product_capped(&self.component(s), &self.component(g.mul(g.inv(s), r)), br.rank());
                for row in p.rows() {
                    b.insert(row);
                }
            }
            b.finish() == br
        })
    }

    /// `B_r = B_r B_{r⁻¹} B_r` for every `r`.
    pub fn is_partially_strongly_graded(&self) -> bool {
        self.group.elements().all(|r| self.psg_at(r))
    }

    fn psg_at(&self, r: usize) -> bool {
        let br = self.component(r);
        self.product_capped(&self.d(r), &br, br.rank()) == br
    }

    /// `B_r B_t = B_{rt}` for all `r, t`.
    pub fn is_strongly_graded(&self) -> bool {
        let g = &self.group;
        g.elements().all(|r| {
            g.elements().all(|t| {
                let target = self.component(g.mul(r, t));
                self.product_capped(&self.component(r), &self.component(t), target.rank()) == target
            })
        })
    }

    /// Identities that every partially strongly graded algebra satisfies.
    pub fn check_psg_identities(&self) -> Result<VerificationReport> {
        if !self.is_partially_strongly_graded() {
            return Err(Error::PreconditionFailed("algebra is not partially strongly graded".into()));
        }
        let g = &self.group;
        let one = g.identity();
        let c: Vec<Subspace> = g.elements().map(|t| self.component(t)).collect();
        let d: Vec<Subspace> = g.elements().map(|t| self.d(t)).collect();
        let mut rep = VerificationReport::new("psg-identities", "");
        for r in g.elements() {
            let ri = g.inv(r);
            for s in g.elements() {
                let lhs = self.product3(&c[ri], &c[r], &c[s]);
                let rhs = self.product(&c[ri], &c[g.mul(r, s)]);
                rep.span_eq(format!("A_r^-1 A_r A_s = A_r^-1 A_rs (r={r}, s={s})"), &lhs, &rhs);
                let lhs = self.product3(&c[s], &c[r], &c[ri]);
                let rhs = self.product(&c[g.mul(s, r)], &c[ri]);
                rep.span_eq(format!("A_s A_r A_r^-1 = A_sr A_r^-1 (r={r}, s={s})"), &lhs, &rhs);
            }
        }
        for t in g.elements() {
            for s in g.elements() {
                let lhs = self.product(&c[t], &d[s]);
                let rhs = self.product(&d[g.mul(t, s)], &c[t]);
                rep.span_eq(format!("A_t D_s = D_ts A_t (t={t}, s={s})"), &lhs, &rhs);
                let lhs = self.product(&d[t], &d[s]);
                let rhs = self.product(&d[s], &d[t]);
                rep.span_eq(format!("D_t D_s = D_s D_t (t={t}, s={s})"), &lhs, &rhs);
            }
            rep.span_eq(format!("A_1 A_t = A_t (t={t})"), &self.product(&c[one], &c[t]), &c[t]);
            rep.span_eq(format!("A_t A_1 = A_t (t={t})"), &self.product(&c[t], &c[one]), &c[t]);
            rep.span_eq(format!("D_t D_t = D_t (t={t})"), &self.product(&d[t], &d[t]), &d[t]);
        }
        Ok(rep)
    }

    pub fn is_graded_subspace(&self, u: &Subspace) -> bool {
        u.rows().iter().all(|r| self.degree_of(r).is_some())
    }

    /// `U ∩ B_t`.
    pub fn graded_piece(&self, u: &Subspace, t: usize) -> Subspace {
        if self.is_graded_subspace(u) {
            // the echelon basis of a graded subspace is homogeneous
            Subspace::span_of(
                self.dim(),
                self.field(),
                u.rows().iter().filter(|r| self.degree_of(r) == Some(t)).cloned(),
            )
        } else {
            u.meet(&self.component(t))
        }
    }

    /// `B U ⊆ U` and `U B ⊆ U`.
    pub fn is_two_sided_ideal(&self, u: &Subspace) -> bool {
        self.algebra.is_two_sided_ideal(u)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        self.algebra.is_subalgebra(u)
    }

    /// The graded subalgebra on `U`, with its echelon rows as basis.
    pub fn graded_subalgebra(&self, u: &Subspace) -> Result<GradedAlgebra> {
        let mut degree = Vec::with_capacity(u.rank());
        for (k, r) in u.rows().iter().enumerate() {
            match self.degree_of(r) {
                Some(t) => degree.push(t),
                None => return Err(Error::NotGraded(format!("basis vector {k} of the subspace is not homogeneous"))),
            }
        }
        let algebra = self.algebra.restrict(u)?;
        Ok(GradedAlgebra::assemble(algebra, self.group.clone(), degree))
    }

    pub fn direct_sum(&self, other: &GradedAlgebra) -> Result<GradedAlgebra> {
        if self.group != other.group {
            return Err(Error::PreconditionFailed("direct sum of algebras graded by different groups".into()));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()));
        }
        let mut degree = self.degree.clone();
        degree.extend_from_slice(&other.degree);
        Ok(GradedAlgebra::assemble(self.algebra.direct_sum(&other.algebra), self.group.clone(), degree))
    }

    /// The same algebra on a new homogeneous basis. `new_basis[k]` is given in old
    /// coordinates and `inverse[i]` expresses old basis vector `i` in the new one.
    pub fn change_basis(&self, new_basis: &[Vector], inverse: &[Vector]) -> Result<GradedAlgebra> {
        let mut degree = Vec::with_capacity(new_basis.len());
        for (k, v) in new_basis.iter().enumerate() {
            degree.push(
                self.degree_of(v)
                    .ok_or_else(|| Error::NotGraded(format!("new basis vector {k} is not homogeneous")))?,
            );
        }
        let algebra = self.algebra.change_basis(new_basis, inverse);
        Ok(GradedAlgebra::assemble(algebra, self.group.clone(), degree))
    }

    pub fn unit(&self) -> Option<Vector> {
        self.algebra.unit()
    }

    pub fn with_group_relabeled(&self, group: FiniteGroup) -> Result<GradedAlgebra> {
        GradedAlgebra::new(self.algebra.clone(), group, self.degree.clone())
    }

    /// Checks that `images` (images of basis vectors in `target`) define a
    /// degree-preserving algebra homomorphism.
    pub fn check_graded_homomorphism(&self, target: &GradedAlgebra, images: &[Vector]) -> Result<()> {
        if images.len() != self.dim() {
            return Err(Error::DimensionError { expected: self.dim(), found: images.len() });
        }
        for (i, v) in images.iter().enumerate() {
            if v.dim() != target.dim() {
                return Err(Error::DimensionError { expected: target.dim(), found: v.dim() });
            }
            if !v.is_zero() && target.degree_of(v) != Some(self.degree[i]) {
                return Err(Error::NotGraded(format!("image of basis vector {i} is not of degree {}", self.degree[i])));
            }
        }
        self.algebra.is_homomorphism(&target.algebra, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn e(d: usize, i: usize) -> Vector {
        Vector::unit(d, i, q())
    }

    fn kc2() -> GradedAlgebra {
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(2, 0)), (0, 1, e(2, 1)), (1, 0, e(2, 1)), (1, 1, e(2, 0))])
            .unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1]).unwrap()
    }

    fn dual_numbers() -> GradedAlgebra {
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(2, 0)), (0, 1, e(2, 1)), (1, 0, e(2, 1))]).unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1]).unwrap()
    }

    fn m2() -> GradedAlgebra {
        // basis e11, e12, e21, e22
        let idx = |r: usize, c: usize| 2 * r + c;
        let mut p = Vec::new();
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for s in 0..2 {
                p.push((idx(r, c), idx(c, s), e(4, idx(r, s))));
            }
        }
        let a = Algebra::from_products(4, q(), p).unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn regrading_kc2_is_rejected() {
        let b = kc2();
        let r = GradedAlgebra::new(b.algebra().clone(), FiniteGroup::cyclic(2), vec![0, 0]);
        assert!(r.is_ok());
        let r = GradedAlgebra::new(b.algebra().clone(), FiniteGroup::cyclic(2), vec![1, 0]);
        // 1·1 = 1 with deg 1 = g would need g·g = g
        assert!(matches!(r, Err(Error::GradingViolation(0, 0, 0))));
    }

    #[test]
    fn components_and_products() {
        let b = kc2();
        assert_eq!(b.component(1).rank(), 1);
        assert_eq!(b.product(&b.component(1), &b.component(1)), b.component(0));
        let f2 = dual_numbers();
        assert!(f2.product(&f2.component(1), &f2.component(1)).is_zero());
        assert!(f2.multiply(&e(2, 1), &e(2, 1)).is_zero());
        let f4 = m2();
        assert_eq!(f4.component(0), Subspace::coordinate(4, q(), [0, 3]));
    }

    #[test]
    fn hierarchy_on_small_examples() {
        for (b, sg, psg, idem) in [(kc2(), true, true, true), (m2(), true, true, true), (dual_numbers(), false, false, true)] {
            assert_eq!(b.is_strongly_graded(), sg);
            assert_eq!(b.is_partially_strongly_graded(), psg);
            assert_eq!(b.is_idempotent_graded(), idem);
        }
        let z = GradedAlgebra::trivially_graded(Algebra::zero_product(1, q()), FiniteGroup::cyclic(1));
        assert!(!z.is_idempotent_graded());
    }

    #[test]
    fn d_ideals() {
        assert_eq!(kc2().ideal_d(1).unwrap().rank(), 1);
        assert!(dual_numbers().ideal_d(1).unwrap().is_zero());
        let f4 = m2();
        assert_eq!(f4.ideal_d(1).unwrap(), f4.component(0));
    }

    #[test]
    fn psg_identities() {
        assert!(kc2().check_psg_identities().unwrap().pass);
        assert!(m2().check_psg_identities().unwrap().pass);
        assert!(matches!(dual_numbers().check_psg_identities(), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn graded_subalgebra_of_diagonal() {
        let f4 = m2();
        let s = f4.graded_subalgebra(&f4.component(0)).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.unit().is_some());
        let skew = Subspace::span(&[Vector::from_i64(4, q(), &[1, 1, 0, 0])], 4, q()).unwrap();
        assert!(matches!(f4.graded_subalgebra(&skew), Err(Error::NotGraded(_))));
    }
}
