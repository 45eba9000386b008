use super::global::GlobalAction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{LinearMap, SpanBuilder, Subspace, Vector};

/// Which definition a partial action has been checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Unchecked,
    /// Intersection axioms.
    Partial,
    /// Product axioms, with idempotent commuting domains.
    Product,
}

/// Ideals `D_t` of an algebra `A` with isomorphisms `α_t : D_{t⁻¹} → D_t`.
///
/// `images[t][k]` is `α_t` of the `k`-th echelon row of `D_{t⁻¹}`.
#[derive(Clone, Debug)]
pub struct PartialAction {
    group: FiniteGroup,
    algebra: Algebra,
    domains: Vec<Subspace>,
    images: Vec<Vec<Vector>>,
    partial_ok: bool,
    product_ok: bool,
}

/// Equality of the data; the cached validation verdicts are ignored.
impl PartialEq for PartialAction {
    fn eq(&self, other: &PartialAction) -> bool {
        self.group == other.group && self.algebra == other.algebra && self.domains == other.domains && self.images == other.images
    }
}

impl Eq for PartialAction {}

impl PartialAction {
    /// Builds from graphs: `graphs[t]` lists pairs `(x, α_t(x))` whose first entries span `D_{t⁻¹}`.
    /// The pairs are canonicalized by row reduction of `[x | α_t(x)]`.
    pub fn from_graphs(group: FiniteGroup, algebra: Algebra, graphs: Vec<Vec<(Vector, Vector)>>) -> Result<PartialAction> {
        let n = algebra.dim();
        let f = algebra.field();
        if graphs.len() != group.order() {
            return Err(Error::DimensionError { expected: group.order(), found: graphs.len() });
        }
        let mut domains = vec![Subspace::zero(n, f); group.order()];
        let mut images = vec![Vec::new(); group.order()];
        for (t, pairs) in graphs.iter().enumerate() {
            let mut b = SpanBuilder::new(2 * n, f);
            for (x, y) in pairs {
                for v in [x, y] {
                    if v.dim() != n {
                        return Err(Error::DimensionError { expected: n, found: v.dim() });
                    }
                    if v.field() != f {
                        return Err(Error::FieldMismatch(v.field().to_string(), f.to_string()));
                    }
                }
                b.insert(&x.concat(y));
            }
            let graph = b.finish();
            if graph.pivots().iter().any(|&p| p >= n) {
                // some x = 0 would be sent to a nonzero vector
                return Err(Error::NotBijective(t));
            }
            domains[group.inv(t)] = Subspace::span_of(n, f, graph.rows().iter().map(|r| r.window(0, n)));
            images[t] = graph.rows().iter().map(|r| r.window(n, n)).collect();
        }
        Ok(PartialAction { group, algebra, domains, images, partial_ok: false, product_ok: false })
    }

    /// Builds from domains and a map `α_t` given on `D_{t⁻¹}` by a closure; used by constructions.
    pub(crate) fn from_maps(
        group: FiniteGroup,
        algebra: Algebra,
        domains: Vec<Subspace>,
        alpha: impl Fn(usize, &Vector) -> Vector,
    ) -> PartialAction {
        let images = group
            .elements()
            .map(|t| domains[group.inv(t)].rows().iter().map(|r| alpha(t, r)).collect())
            .collect();
        PartialAction { group, algebra, domains, images, partial_ok: false, product_ok: false }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn domain(&self, t: usize) -> &Subspace {
        &self.domains[t]
    }

    pub fn domains(&self) -> &[Subspace] {
        &self.domains
    }

    pub fn images(&self, t: usize) -> &[Vector] {
        &self.images[t]
    }

    pub fn flavor(&self) -> Flavor {
        if self.product_ok {
            Flavor::Product
        } else if self.partial_ok {
            Flavor::Partial
        } else {
            Flavor::Unchecked
        }
    }

    pub fn passed_partial(&self) -> bool {
        self.partial_ok
    }

    pub fn passed_product(&self) -> bool {
        self.product_ok
    }

    /// `α_t(v)` for `v ∈ D_{t⁻¹}`.
    pub fn apply(&self, t: usize, v: &Vector) -> Option<Vector> {
        let dom = &self.domains[self.group.inv(t)];
        let c = dom.coordinates(v)?;
        let mut terms = Vec::new();
        for (k, x) in c.entries() {
            terms.extend(self.images[t][*k].entries().iter().map(|(i, y)| (*i, y.mul(x))));
        }
        Some(Vector::from_terms(self.algebra.dim(), self.algebra.field(), terms))
    }

    /// `α_t(U)` for `U ⊆ D_{t⁻¹}`.
    pub fn map_subspace(&self, t: usize, u: &Subspace) -> Option<Subspace> {
        let mut b = SpanBuilder::new(self.algebra.dim(), self.algebra.field());
        for r in u.rows() {
            b.insert(&self.apply(t, r)?);
        }
        Some(b.finish())
    }

    pub fn is_global(&self) -> bool {
        self.domains.iter().all(Subspace::is_full)
    }

    pub fn to_global(&self) -> Option<GlobalAction> {
        if !self.is_global() {
            return None;
        }
        let n = self.algebra.dim();
        let f = self.algebra.field();
        let auto = self
            .images
            .iter()
            .map(|cols| LinearMap::from_columns(n, f, cols.clone()).expect("shape"))
            .collect();
        Some(GlobalAction::assemble(self.group.clone(), self.algebra.clone(), auto))
    }

    fn check_common(&self) -> Result<()> {
        let g = &self.group;
        let full = Subspace::full(self.algebra.dim(), self.algebra.field());
        for t in g.elements() {
            if !self.algebra.is_two_sided_ideal(&self.domains[t]) {
                return Err(Error::NotIdeal(t));
            }
        }
        for t in g.elements() {
            let dom = &self.domains[g.inv(t)];
            let img = Subspace::span_of(self.algebra.dim(), self.algebra.field(), self.images[t].iter().cloned());
            if self.images[t].len() != dom.rank() || img.rank() != dom.rank() || img != self.domains[t] {
                return Err(Error::NotBijective(t));
            }
            let rows = dom.rows();
            for (a, x) in rows.iter().enumerate() {
                for (b, y) in rows.iter().enumerate() {
                    let lhs = self.apply(t, &self.algebra.multiply(x, y)).ok_or(Error::NotIdeal(g.inv(t)))?;
                    if lhs != self.algebra.multiply(&self.images[t][a], &self.images[t][b]) {
                        return Err(Error::NotMultiplicative(t));
                    }
                }
            }
        }
        let one = g.identity();
        if self.domains[one] != full || self.images[one].iter().zip(full.rows()).any(|(a, b)| a != b) {
            return Err(Error::IdentityAxiomFailed);
        }
        Ok(())
    }

    fn check_composition(&self, s: usize, t: usize, on: &Subspace) -> Result<()> {
        let st = self.group.mul(s, t);
        for x in on.rows() {
            let lhs = self.apply(t, x).and_then(|y| self.apply(s, &y));
            let rhs = self.apply(st, x);
            if lhs.is_none() || lhs != rhs {
                return Err(Error::CompositionFailed(s, t));
            }
        }
        Ok(())
    }

    /// Checks the intersection axioms and records the verdict.
    pub fn validate_partial(mut self) -> Result<PartialAction> {
        self.check_partial()?;
        self.partial_ok = true;
        Ok(self)
    }

    pub fn check_partial(&self) -> Result<()> {
        self.check_common()?;
        let g = &self.group;
        for s in g.elements() {
            for t in g.elements() {
                let dom = self.domains[g.inv(s)].meet(&self.domains[t]);
                let lhs = self.map_subspace(s, &dom).ok_or(Error::IntersectionAxiomFailed(s, t))?;
                let rhs = self.domains[s].meet(&self.domains[g.mul(s, t)]);
                if lhs != rhs {
                    return Err(Error::IntersectionAxiomFailed(s, t));
                }
            }
        }
        for s in g.elements() {
            for t in g.elements() {
                let on = self.domains[g.inv(t)].meet(&self.domains[g.inv(g.mul(s, t))]);
                self.check_composition(s, t, &on)?;
            }
        }
        Ok(())
    }

    /// Checks the product axioms and records the verdict.
    pub fn validate_product(mut self) -> Result<PartialAction> {
        self.check_product()?;
        self.product_ok = true;
        Ok(self)
    }

    pub fn check_product(&self) -> Result<()> {
        self.check_common()?;
        let g = &self.group;
        let a = &self.algebra;
        let d = &self.domains;
        for t in g.elements() {
            if a.span_mul(&d[t], &d[t]) != d[t] {
                return Err(Error::DomainNotIdempotent(t));
            }
        }
        for s in g.elements() {
            for t in g.elements() {
                if s < t && a.span_mul(&d[s], &d[t]) != a.span_mul(&d[t], &d[s]) {
                    return Err(Error::DomainsDontCommute(s, t));
                }
            }
        }
        for s in g.elements() {
            for t in g.elements() {
                let dom = a.span_mul(&d[g.inv(s)], &d[t]);
                let lhs = self.map_subspace(s, &dom).ok_or(Error::ProductAxiomFailed(s, t))?;
                if lhs != a.span_mul(&d[s], &d[g.mul(s, t)]) {
                    return Err(Error::ProductAxiomFailed(s, t));
                }
            }
        }
        for s in g.elements() {
            for t in g.elements() {
                let on = a.span_mul(&d[g.inv(t)], &d[g.inv(g.mul(s, t))]);
                self.check_composition(s, t, &on)?;
            }
        }
        Ok(())
    }

    /// Every domain is idempotent.
    pub fn has_idempotent_domains(&self) -> bool {
        self.domains.iter().all(|d| self.algebra.span_mul(d, d) == *d)
    }
}

impl GlobalAction {
    /// The global action as a product partial action with full domains.
    pub fn as_partial(&self) -> PartialAction {
        let n = self.algebra().dim();
        let f = self.algebra().field();
        let full = Subspace::full(n, f);
        let pa = PartialAction::from_maps(
            self.group().clone(),
            self.algebra().clone(),
            vec![full; self.group().order()],
            |t, v| self.apply(t, v),
        );
        PartialAction { partial_ok: true, product_ok: true, ..pa }
    }
}

/// A global action `β` on `B` together with an ideal `A` and the restricted partial action on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub beta: GlobalAction,
    /// `A` inside `B`; its echelon rows are the basis of `alpha`'s algebra.
    pub ideal: Subspace,
    pub alpha: PartialAction,
}

impl Restriction {
    /// Coordinates in `B` of a vector given in `A`'s basis.
    pub fn lift(&self, v: &Vector) -> Vector {
        self.ideal.combine(v)
    }

    /// `A`-coordinates of a vector of `B` lying in `A`.
    pub fn lower(&self, v: &Vector) -> Option<Vector> {
        self.ideal.coordinates(v)
    }

    pub fn lift_subspace(&self, u: &Subspace) -> Subspace {
        let n = self.beta.algebra().dim();
        Subspace::span_of(n, u.field(), u.rows().iter().map(|r| self.lift(r)))
    }

    pub fn lower_subspace(&self, u: &Subspace) -> Option<Subspace> {
        let mut b = SpanBuilder::new(self.ideal.rank(), u.field());
        for r in u.rows() {
            b.insert(&self.lower(r)?);
        }
        Some(b.finish())
    }
}

fn restrict_with(beta: &GlobalAction, ideal: &Subspace, domain_in_b: impl Fn(usize) -> Subspace) -> Result<Restriction> {
    let algebra = beta.algebra().restrict(ideal)?;
    let m = ideal.rank();
    let f = algebra.field();
    let to_a = |v: &Vector| ideal.coordinates(v).expect("domain lies in the ideal");
    let domains: Vec<Subspace> = beta
        .group()
        .elements()
        .map(|t| Subspace::span_of(m, f, domain_in_b(t).rows().iter().map(to_a)))
        .collect();
    let alpha = PartialAction::from_maps(beta.group().clone(), algebra, domains, |t, v| {
        to_a(&beta.apply(t, &ideal.combine(v)))
    });
    Ok(Restriction { beta: beta.clone(), ideal: ideal.clone(), alpha })
}

/// `D_t = Aβ_t(A)` and `α_t = β_t` on `D_{t⁻¹}`, for an idempotent ideal `A` with `Aβ_t(A) = β_t(A)A`.
pub fn restrict_global(beta: &GlobalAction, ideal: &Subspace) -> Result<Restriction> {
    let b = beta.algebra();
    if ideal.dim() != b.dim() {
        return Err(Error::DimensionError { expected: b.dim(), found: ideal.dim() });
    }
    if !b.is_two_sided_ideal(ideal) || b.span_mul(ideal, ideal) != *ideal {
        return Err(Error::NotIdempotentIdeal);
    }
    let mut dom = Vec::with_capacity(beta.group().order());
    for t in beta.group().elements() {
        let bt = beta.image(t, ideal);
        let left = b.span_mul(ideal, &bt);
        if left != b.span_mul(&bt, ideal) {
            return Err(Error::CommutationHypothesisFailed(t));
        }
        dom.push(left);
    }
    let mut r = restrict_with(beta, ideal, |t| dom[t].clone())?;
    r.alpha = r.alpha.validate_product()?;
    Ok(r)
}

/// `D_t = A ∩ β_t(A)` for an ideal `A`; this always gives a partial action.
pub fn restrict_global_intersection(beta: &GlobalAction, ideal: &Subspace) -> Result<Restriction> {
    let b = beta.algebra();
    if ideal.dim() != b.dim() {
        return Err(Error::DimensionError { expected: b.dim(), found: ideal.dim() });
    }
    if !b.is_two_sided_ideal(ideal) {
        return Err(Error::PreconditionFailed("subspace is not a two-sided ideal".into()));
    }
    let mut r = restrict_with(beta, ideal, |t| ideal.meet(&beta.image(t, ideal)))?;
    r.alpha = r.alpha.validate_partial()?;
    Ok(r)
}

/// Whether `Σ_t β_t(A)` is the whole algebra.
pub fn is_minimal_globalization(beta: &GlobalAction, ideal: &Subspace) -> Result<bool> {
    restrict_global(beta, ideal)?;
    Ok(beta.orbit_span(ideal).is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn diag(n: usize) -> Algebra {
        Algebra::from_products(n, q(), (0..n).map(|i| (i, i, Vector::unit(n, i, q())))).unwrap()
    }

    fn cycle3() -> GlobalAction {
        GlobalAction::permutation(FiniteGroup::cyclic(3), diag(3), &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn swap_restricted_to_a_line() {
        let beta = GlobalAction::permutation(FiniteGroup::cyclic(2), diag(2), &[vec![0, 1], vec![1, 0]]).unwrap();
        let a = Subspace::coordinate(2, q(), [0]);
        let r = restrict_global(&beta, &a).unwrap();
        assert_eq!(r.alpha.domain(0).rank(), 1);
        assert!(r.alpha.domain(1).is_zero());
        assert_eq!(r.alpha.flavor(), Flavor::Product);
        assert!(r.alpha.clone().validate_partial().is_ok());
        assert!(is_minimal_globalization(&beta, &a).unwrap());
    }

    #[test]
    fn cycle_restricted_to_two_coordinates() {
        let beta = cycle3();
        let a = Subspace::coordinate(3, q(), [0, 1]);
        let r = restrict_global(&beta, &a).unwrap();
        let dims: Vec<usize> = (0..3).map(|t| r.alpha.domain(t).rank()).collect();
        assert_eq!(dims, vec![2, 1, 1]);
        // β_g(e1) = e2, so D_g = A β_g(A) = span{e2}
        assert_eq!(r.lift_subspace(r.alpha.domain(1)), Subspace::coordinate(3, q(), [1]));
        assert_eq!(r.lift_subspace(r.alpha.domain(2)), Subspace::coordinate(3, q(), [0]));
    }

    #[test]
    fn orbit_not_spanning() {
        let beta = GlobalAction::permutation(FiniteGroup::cyclic(2), diag(3), &[vec![0, 1, 2], vec![1, 0, 2]]).unwrap();
        assert!(!is_minimal_globalization(&beta, &Subspace::coordinate(3, q(), [0])).unwrap());
        assert!(is_minimal_globalization(&beta, &Subspace::full(3, q())).unwrap());
    }

    #[test]
    fn nontrivial_identity_map_rejected() {
        let beta = GlobalAction::permutation(FiniteGroup::cyclic(2), diag(2), &[vec![0, 1], vec![1, 0]]).unwrap();
        let e = |i| Vector::unit(2, i, q());
        let graphs = vec![vec![(e(0), e(1)), (e(1), e(0))], vec![(e(0), e(1)), (e(1), e(0))]];
        let pa = PartialAction::from_graphs(FiniteGroup::cyclic(2), beta.algebra().clone(), graphs).unwrap();
        assert_eq!(pa.validate_partial(), Err(Error::IdentityAxiomFailed));
    }

    #[test]
    fn nilpotent_domain_not_product() {
        // k[x]/(x²) with D_g = span{x}, α_g = id
        let e = |i| Vector::unit(2, i, q());
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(0)), (0, 1, e(1)), (1, 0, e(1))]).unwrap();
        let graphs = vec![vec![(e(0), e(0)), (e(1), e(1))], vec![(e(1), e(1))]];
        let pa = PartialAction::from_graphs(FiniteGroup::cyclic(2), a, graphs).unwrap();
        assert_eq!(pa.clone().validate_product(), Err(Error::DomainNotIdempotent(1)));
        assert!(pa.validate_partial().is_ok());
    }

    #[test]
    fn global_as_partial_is_global() {
        let pa = cycle3().as_partial();
        assert!(pa.is_global());
        assert!(pa.check_product().is_ok());
        assert_eq!(pa.to_global().unwrap(), cycle3());
    }
}
