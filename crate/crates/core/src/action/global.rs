use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{LinearMap, Subspace, Vector};

/// An action of `G` on an algebra by automorphisms `β_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalAction {
    group: FiniteGroup,
    algebra: Algebra,
    auto: Vec<LinearMap>,
}

impl GlobalAction {
    /// Checks that each `β_t` is a bijective multiplicative map, `β_1 = id` and `β_s β_t = β_{st}`.
    pub fn new(group: FiniteGroup, algebra: Algebra, auto: Vec<LinearMap>) -> Result<GlobalAction> {
        let d = algebra.dim();
        if auto.len() != group.order() {
            return Err(Error::DimensionError { expected: group.order(), found: auto.len() });
        }
        for (t, m) in auto.iter().enumerate() {
            if m.dim_in() != d || m.dim_out() != d {
                return Err(Error::DimensionError { expected: d, found: m.dim_in() });
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(m.field().to_string(), algebra.field().to_string()));
            }
            if !m.is_bijective() {
                return Err(Error::NotAnAction(format!("beta_{t} is not bijective")));
            }
            if algebra.is_homomorphism(&algebra, m.columns()).is_err() {
                return Err(Error::NotAnAction(format!("beta_{t} is not multiplicative")));
            }
        }
        if auto[group.identity()] != LinearMap::identity(d, algebra.field()) {
            return Err(Error::NotAnAction("beta at the identity is not the identity map".into()));
        }
        for s in group.elements() {
            for t in group.elements() {
                if auto[s].compose(&auto[t]) != auto[group.mul(s, t)] {
                    return Err(Error::NotAnAction(format!("beta_{s} beta_{t} != beta_{}", group.mul(s, t))));
                }
            }
        }
        Ok(GlobalAction { group, algebra, auto })
    }

    pub(crate) fn assemble(group: FiniteGroup, algebra: Algebra, auto: Vec<LinearMap>) -> GlobalAction {
        GlobalAction { group, algebra, auto }
    }

    pub fn trivial(group: FiniteGroup, algebra: Algebra) -> GlobalAction {
        let id = LinearMap::identity(algebra.dim(), algebra.field());
        let auto = vec![id; group.order()];
        GlobalAction { group, algebra, auto }
    }

    /// The action permuting basis vectors, `β_t(b_i) = b_{perm[t][i]}`.
    pub fn permutation(group: FiniteGroup, algebra: Algebra, perm: &[Vec<usize>]) -> Result<GlobalAction> {
        let d = algebra.dim();
        let f = algebra.field();
        let auto = perm.iter().map(|p| LinearMap::permutation(d, f, p)).collect();
        GlobalAction::new(group, algebra, auto)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn map(&self, t: usize) -> &LinearMap {
        &self.auto[t]
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.auto
    }

    pub fn apply(&self, t: usize, v: &Vector) -> Vector {
        self.auto[t].apply(v)
    }

    pub fn image(&self, t: usize, s: &Subspace) -> Subspace {
        self.auto[t].image(s)
    }

    /// `Σ_t β_t(U)`.
    pub fn orbit_span(&self, u: &Subspace) -> Subspace {
        let mut acc = Subspace::zero(u.dim(), u.field());
        for t in self.group.elements() {
            acc = acc.plus(&self.image(t, u));
        }
        acc
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        self.group.elements().all(|t| self.image(t, u) == *u)
    }

    /// The action on an invariant subalgebra, in its echelon basis.
    pub fn restrict_invariant(&self, sub: &Subspace) -> Result<GlobalAction> {
        if !self.is_invariant(sub) {
            return Err(Error::PreconditionFailed("subspace is not invariant under the action".into()));
        }
        let algebra = self.algebra.restrict(sub)?;
        let n = sub.rank();
        let f = self.algebra.field();
        let auto = self
            .auto
            .iter()
            .map(|m| {
                let cols = sub
                    .rows()
                    .iter()
                    .map(|r| sub.coordinates(&m.apply(r)).expect("invariant subspace"))
                    .collect();
                LinearMap::from_columns(n, f, cols).expect("shape")
            })
            .collect();
        Ok(GlobalAction { group: self.group.clone(), algebra, auto })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn diag(n: usize) -> Algebra {
        let f = Field::Rationals;
        Algebra::from_products(n, f, (0..n).map(|i| (i, i, Vector::unit(n, i, f)))).unwrap()
    }

    #[test]
    fn swap_is_an_action() {
        let b = GlobalAction::permutation(FiniteGroup::cyclic(2), diag(2), &[vec![0, 1], vec![1, 0]]).unwrap();
        let line = Subspace::coordinate(2, Field::Rationals, [0]);
        assert_eq!(b.orbit_span(&line).rank(), 2);
        assert!(!b.is_invariant(&line));
    }

    #[test]
    fn non_action_rejected() {
        // a transposition cannot represent a generator of C3
        let r = GlobalAction::permutation(FiniteGroup::cyclic(3), diag(2), &[vec![0, 1], vec![1, 0], vec![1, 0]]);
        assert!(matches!(r, Err(Error::NotAnAction(_))));
    }
}
