use super::partial::PartialAction;
use crate::algebra::{Algebra, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

/// `A ⋊_α G = ⊕_t D_t δ_t`. Basis vector `offsets[t] + k` is the `k`-th echelon row of `D_t`, times `δ_t`.
#[derive(Clone, Debug)]
pub struct SkewAlgebra {
    pub algebra: GradedAlgebra,
    pub offsets: Vec<usize>,
    pub action: PartialAction,
}

impl SkewAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `aδ_t` for `a ∈ D_t`.
    pub fn delta(&self, t: usize, a: &Vector) -> Option<Vector> {
        let c = self.action.domain(t).coordinates(a)?;
        Some(c.shifted(self.offsets[t], self.dim()))
    }

    /// The `A`-coefficient of the `δ_t` part of `v`.
    pub fn coefficient(&self, t: usize, v: &Vector) -> Vector {
        let dom = self.action.domain(t);
        dom.combine(&v.window(self.offsets[t], dom.rank()))
    }

    /// `U δ_t` for `U ⊆ D_t`.
    pub fn delta_subspace(&self, t: usize, u: &Subspace) -> Option<Subspace> {
        let mut rows = Vec::with_capacity(u.rank());
        for r in u.rows() {
            rows.push(self.delta(t, r)?);
        }
        Some(Subspace::span_of(self.dim(), self.algebra.field(), rows))
    }
}

/// `(aδ_r)(bδ_s) = α_r(α_{r⁻¹}(a) b) δ_{rs}`; associativity is re-verified on every construction.
pub fn skew_group_algebra(alpha: &PartialAction) -> Result<SkewAlgebra> {
    let g = alpha.group();
    let a = alpha.algebra();
    let f = a.field();
    let mut offsets = Vec::with_capacity(g.order());
    let mut degree = Vec::new();
    for t in g.elements() {
        offsets.push(degree.len());
        degree.extend(std::iter::repeat(t).take(alpha.domain(t).rank()));
    }
    let n = degree.len();
    let mut products = Vec::new();
    for r in g.elements() {
        let ri = g.inv(r);
        let dr = alpha.domain(r);
        for (i, x) in dr.rows().iter().enumerate() {
            let pre = alpha.apply(ri, x).expect("row of D_r lies in D_r");
            for s in g.elements() {
                let rs = g.mul(r, s);
                for (j, y) in alpha.domain(s).rows().iter().enumerate() {
                    let ab = a.multiply(&pre, y);
                    if ab.is_zero() {
                        continue;
                    }
                    let closure = || Error::ClosureViolation(format!("skew product of degrees {r} and {s} leaves D_{rs}"));
                    let img = alpha.apply(r, &ab).ok_or_else(closure)?;
                    let c = alpha.domain(rs).coordinates(&img).ok_or_else(closure)?;
                    products.push((offsets[r] + i, offsets[s] + j, c.shifted(offsets[rs], n)));
                }
            }
        }
    }
    let skew = Algebra::from_products(n, f, products)?;
    if let Some((i, j, k)) = skew.associativity_failure() {
        return Err(Error::AssociativityFailed(i, j, k));
    }
    let algebra = GradedAlgebra::assemble(skew, g.clone(), degree);
    Ok(SkewAlgebra { algebra, offsets, action: alpha.clone() })
}

/// Runs the psg test on the skew algebra and compares it with the product-axiom verdict.
pub fn check_pa_prp_equivalence(alpha: &PartialAction) -> Result<bool> {
    alpha.check_partial()?;
    if let Some(t) = alpha.group().elements().find(|&t| {
        let d = alpha.domain(t);
        alpha.algebra().span_mul(d, d) != *d
    }) {
        return Err(Error::DomainNotIdempotent(t));
    }
    let psg = skew_group_algebra(alpha)?.algebra.is_partially_strongly_graded();
    let product = alpha.check_product().is_ok();
    if psg != product {
        return Err(Error::VerificationFailed(format!(
            "skew algebra psg = {psg} but product axioms hold = {product}"
        )));
    }
    Ok(psg)
}

/// A morphism of partial actions `φ : α → α'`, given by images of the basis of `α`'s algebra.
#[derive(Clone, Debug)]
pub struct ActionMorphism {
    pub images: Vec<Vector>,
}

impl ActionMorphism {
    pub fn apply(&self, v: &Vector, target_dim: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, c) in v.entries() {
            terms.extend(self.images[*i].entries().iter().map(|(k, x)| (*k, x.mul(c))));
        }
        Vector::from_terms(target_dim, v.field(), terms)
    }

    pub fn identity(alpha: &PartialAction) -> ActionMorphism {
        let a = alpha.algebra();
        ActionMorphism { images: (0..a.dim()).map(|i| a.basis_vector(i)).collect() }
    }

    pub fn compose(&self, then: &ActionMorphism, target_dim: usize) -> ActionMorphism {
        ActionMorphism { images: self.images.iter().map(|v| then.apply(v, target_dim)).collect() }
    }

    /// `φ` multiplicative, `φ(D_t) ⊆ D'_t` and `φα_t = α'_tφ` on `D_{t⁻¹}`.
    pub fn check(&self, source: &PartialAction, target: &PartialAction) -> Result<()> {
        let m = target.algebra().dim();
        source.algebra().is_homomorphism(target.algebra(), &self.images)?;
        let g = source.group();
        for t in g.elements() {
            for x in source.domain(t).rows() {
                if !target.domain(t).has(&self.apply(x, m)) {
                    return Err(Error::NotEquivariant(t));
                }
            }
            for x in source.domain(g.inv(t)).rows() {
                let lhs = self.apply(&source.apply(t, x).expect("domain row"), m);
                let rhs = target.apply(t, &self.apply(x, m));
                if rhs.as_ref() != Some(&lhs) {
                    return Err(Error::NotEquivariant(t));
                }
            }
        }
        Ok(())
    }
}

/// `φ^⋊(aδ_t) = φ(a)δ_t`, returned as images of the basis of `source`; multiplicativity is verified.
pub fn action_morphism_skew(phi: &ActionMorphism, source: &SkewAlgebra, target: &SkewAlgebra) -> Result<Vec<Vector>> {
    phi.check(&source.action, &target.action)?;
    let m = target.action.algebra().dim();
    let mut images = Vec::with_capacity(source.dim());
    for t in source.action.group().elements() {
        for x in source.action.domain(t).rows() {
            images.push(target.delta(t, &phi.apply(x, m)).ok_or(Error::NotEquivariant(t))?);
        }
    }
    source.algebra.check_graded_homomorphism(&target.algebra, &images)?;
    Ok(images)
}
