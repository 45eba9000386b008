//! `FMat_G(B)`, the smash product `B#G`, the dual action, the partial smash
//! product `I^B` with its canonical partial action, and the duality isomorphism.
//!
//! Labels `(i, r, s)` stand for `b_i e_{r,s}`. The degree of `b_i e_{r,s}` in
//! `FMat_G(B)` is `r·deg(b_i)·s⁻¹`, which makes `ψ_B` grade-preserving and puts
//! `B#G` in degree 1.

use crate::action::{restrict_global, skew_group_algebra, GlobalAction, Restriction, SkewAlgebra};
use crate::algebra::{Algebra, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SpanBuilder, Subspace, Vector};
use crate::report::VerificationReport;

/// All `G × G` matrices over `B`; label `(i, r, s)` sits at index `(r·n + s)·d + i`.
#[derive(Clone, Debug)]
pub struct FMat {
    pub base: GradedAlgebra,
    pub algebra: GradedAlgebra,
}

impl FMat {
    pub fn index(&self, i: usize, r: usize, s: usize) -> usize {
        (r * self.base.group().order() + s) * self.base.dim() + i
    }

    pub fn label(&self, k: usize) -> (usize, usize, usize) {
        let (n, d) = (self.base.group().order(), self.base.dim());
        (k % d, k / d / n, (k / d) % n)
    }

    /// `v e_{r,s}` for `v ∈ B`.
    pub fn place(&self, v: &Vector, r: usize, s: usize) -> Vector {
        v.reindexed(self.algebra.dim(), |i| self.index(i, r, s))
    }

    /// `⊕_{r,s} E(r, s) e_{r,s}`.
    pub fn blocks(&self, entry: impl Fn(usize, usize) -> Subspace) -> Subspace {
        let g = self.base.group();
        let mut b = SpanBuilder::new(self.algebra.dim(), self.algebra.field());
        for r in g.elements() {
            for s in g.elements() {
                for row in entry(r, s).rows() {
                    b.insert(&self.place(row, r, s));
                }
            }
        }
        b.finish()
    }
}

pub fn fmat(b: &GradedAlgebra) -> FMat {
    let g = b.group();
    let (n, d) = (g.order(), b.dim());
    let dim = n * n * d;
    let idx = |i: usize, r: usize, s: usize| (r * n + s) * d + i;
    let mut products = Vec::new();
    for (i, j, v) in b.algebra().products() {
        for r in g.elements() {
            for s in g.elements() {
                for w in g.elements() {
                    products.push((idx(i, r, s), idx(j, s, w), v.reindexed(dim, |m| idx(m, r, w))));
                }
            }
        }
    }
    let algebra = Algebra::from_products(dim, b.field(), products).expect("well-formed products");
    let mut degree = vec![0; dim];
    for r in g.elements() {
        for s in g.elements() {
            for i in 0..d {
                degree[idx(i, r, s)] = g.mul(g.mul(r, b.degree(i)), g.inv(s));
            }
        }
    }
    FMat { base: b.clone(), algebra: GradedAlgebra::assemble(algebra, g.clone(), degree) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashKind {
    Smash,
    PartialSmash,
}

/// A subalgebra of `FMat_G(B)` carried on its own basis. Each basis vector lives
/// in a single matrix position.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub kind: SmashKind,
    pub base: GradedAlgebra,
    /// Trivially graded: everything here has degree 1 in `FMat_G(B)`.
    pub carrier: GradedAlgebra,
    /// Basis vectors of `carrier` as vectors of `FMat_G(B)`.
    pub basis_in_fmat: Vec<Vector>,
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Matrix position `(r, s)` and entry in `B` of basis vector `k`.
    pub fn entry(&self, k: usize) -> (usize, usize, Vector) {
        let n = self.base.group().order();
        let d = self.base.dim();
        let v = &self.basis_in_fmat[k];
        let first = v.leading().expect("nonzero basis vector").0 / d;
        let entry = v.reindexed(d, |x| x % d);
        (first / n, first % n, entry)
    }
}

/// `B#G = span{b e_{r,s} : deg b = r⁻¹s}`.
pub fn smash(b: &GradedAlgebra) -> SmashAlgebra {
    let g = b.group();
    let (n, d) = (g.order(), b.dim());
    let fdim = n * n * d;
    let fidx = |i: usize, r: usize, s: usize| (r * n + s) * d + i;
    let mut pos = vec![usize::MAX; fdim];
    let mut labels = Vec::new();
    for r in g.elements() {
        for s in g.elements() {
            for i in 0..d {
                if b.degree(i) == g.mul(g.inv(r), s) {
                    pos[fidx(i, r, s)] = labels.len();
                    labels.push((i, r, s));
                }
            }
        }
    }
    let dim = labels.len();
    let mut by_pos: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for (k, &(_, r, s)) in labels.iter().enumerate() {
        by_pos[r * n + s].push(k);
    }
    let mut products = Vec::new();
    for (k, &(i, r, s)) in labels.iter().enumerate() {
        for w in g.elements() {
            for &l in &by_pos[s * n + w] {
                let j = labels[l].0;
                if let Some(v) = b.algebra().product(i, j) {
                    products.push((k, l, v.reindexed(dim, |m| pos[fidx(m, r, w)])));
                }
            }
        }
    }
    let algebra = Algebra::from_products(dim, b.field(), products).expect("well-formed products");
    let basis_in_fmat = labels.iter().map(|&(i, r, s)| Vector::unit(fdim, fidx(i, r, s), b.field())).collect();
    SmashAlgebra {
        kind: SmashKind::Smash,
        base: b.clone(),
        carrier: GradedAlgebra::trivially_graded(algebra, g.clone()),
        basis_in_fmat,
    }
}

/// Coordinates in `B#G` of `v e_{r,s}` for `v ∈ B_{r⁻¹s}`.
pub fn smash_place(sm: &SmashAlgebra, v: &Vector, r: usize, s: usize) -> Vector {
    let g = sm.base.group();
    let (n, d) = (g.order(), sm.base.dim());
    // smash labels are ordered by fmat index, so a position's labels are contiguous
    let start = sm
        .basis_in_fmat
        .iter()
        .position(|u| u.leading().map(|(x, _)| x / d) == Some(r * n + s));
    let mut terms = Vec::new();
    if let Some(start) = start {
        for (m, c) in v.entries() {
            let target = (r * n + s) * d + m;
            let k = (start..sm.dim())
                .find(|&k| sm.basis_in_fmat[k].leading().map(|(x, _)| x) == Some(target))
                .expect("entry has the degree of its position");
            terms.push((k, c.clone()));
        }
    } else {
        assert!(v.is_zero(), "entry has the degree of its position");
    }
    Vector::from_terms(sm.dim(), sm.base.field(), terms)
}

/// `⊕_{r,s} E(r, s) e_{r,s}` inside `B#G`, for `E(r, s) ⊆ B_{r⁻¹s}`.
pub fn smash_blocks(sm: &SmashAlgebra, entry: impl Fn(usize, usize) -> Subspace) -> Subspace {
    let g = sm.base.group();
    let mut b = SpanBuilder::new(sm.dim(), sm.base.field());
    for r in g.elements() {
        for s in g.elements() {
            for row in entry(r, s).rows() {
                b.insert(&smash_place(sm, row, r, s));
            }
        }
    }
    b.finish()
}

/// `β^B_t(b e_{r,s}) = b e_{tr,ts}` on `FMat_G(B)` and on `B#G`.
#[derive(Clone, Debug)]
pub struct DualAction {
    pub on_fmat: GlobalAction,
    pub on_smash: GlobalAction,
}

pub fn dual_action(b: &GradedAlgebra) -> DualAction {
    let fm = fmat(b);
    let sm = smash(b);
    dual_action_on(&fm, &sm)
}

pub fn dual_action_on(fm: &FMat, sm: &SmashAlgebra) -> DualAction {
    let g = fm.base.group();
    let f = fm.base.field();
    let fdim = fm.algebra.dim();
    let fperm: Vec<LinearMap> = g
        .elements()
        .map(|t| {
            let p: Vec<usize> = (0..fdim)
                .map(|k| {
                    let (i, r, s) = fm.label(k);
                    fm.index(i, g.mul(t, r), g.mul(t, s))
                })
                .collect();
            LinearMap::permutation(fdim, f, &p)
        })
        .collect();
    let lookup: std::collections::HashMap<usize, usize> = sm
        .basis_in_fmat
        .iter()
        .enumerate()
        .map(|(k, v)| (v.leading().expect("unit").0, k))
        .collect();
    let sperm: Vec<LinearMap> = fperm
        .iter()
        .map(|m| {
            let p: Vec<usize> = sm
                .basis_in_fmat
                .iter()
                .map(|v| lookup[&m.apply(v).leading().expect("unit").0])
                .collect();
            LinearMap::permutation(sm.dim(), f, &p)
        })
        .collect();
    DualAction {
        on_fmat: GlobalAction::assemble(g.clone(), fm.algebra.algebra().clone(), fperm),
        on_smash: GlobalAction::assemble(g.clone(), sm.carrier.algebra().clone(), sperm),
    }
}

/// `η(b)(r, s) = b_{r⁻¹s}`, as images of the basis of `B` in `B#G` coordinates.
pub fn eta(sm: &SmashAlgebra) -> Vec<Vector> {
    let b = &sm.base;
    let g = b.group();
    (0..b.dim())
        .map(|i| {
            let bi = b.basis_vector(i);
            let mut acc = Vector::zero(sm.dim(), b.field());
            for r in g.elements() {
                let s = g.mul(r, b.degree(i));
                acc = acc.add(&smash_place(sm, &bi, r, s));
            }
            acc
        })
        .collect()
}

/// `η` in `FMat_G(B)` coordinates.
pub fn eta_fmat(fm: &FMat) -> Vec<Vector> {
    let b = &fm.base;
    let g = b.group();
    (0..b.dim())
        .map(|i| {
            let terms = g
                .elements()
                .map(|r| (fm.index(i, r, g.mul(r, b.degree(i))), b.field().one()))
                .collect();
            Vector::from_terms(fm.algebra.dim(), b.field(), terms)
        })
        .collect()
}

/// Points of `B#G` fixed by every `β_t`.
pub fn fixed_subalgebra(beta: &GlobalAction) -> Subspace {
    let n = beta.algebra().dim();
    let f = beta.algebra().field();
    let id = LinearMap::identity(n, f);
    let mut acc = Subspace::full(n, f);
    for t in beta.group().elements() {
        acc = acc.meet(&beta.map(t).sub(&id).kernel());
    }
    acc
}

/// `φ^#(a e_{r,s}) = φ(a) e_{r,s}` for a graded homomorphism `φ : A → B` given by basis images.
pub fn smash_functor(a: &GradedAlgebra, b: &GradedAlgebra, phi: &[Vector]) -> Result<LinearMap> {
    a.check_graded_homomorphism(b, phi)?;
    let sa = smash(a);
    let sb = smash(b);
    let cols = (0..sa.dim())
        .map(|k| {
            let (r, s, entry) = sa.entry(k);
            let mut img = Vector::zero(b.dim(), b.field());
            for (i, c) in entry.entries() {
                img = img.axpy(c, &phi[*i]);
            }
            smash_place(&sb, &img, r, s)
        })
        .collect();
    let m = LinearMap::from_columns(sb.dim(), b.field(), cols)?;
    sa.carrier.algebra().is_homomorphism(sb.carrier.algebra(), m.columns())?;
    Ok(m)
}

/// Entry space `B_{r⁻¹}B_s` of `I^B` at `(r, s)`.
pub fn partial_entry(b: &GradedAlgebra, r: usize, s: usize) -> Subspace {
    let g = b.group();
    b.product(&b.component(g.inv(r)), &b.component(s))
}

/// `I^B = ⊕_{r,s} B_{r⁻¹}B_s e_{r,s}` as a subspace of `B#G`.
pub fn partial_smash_ideal(sm: &SmashAlgebra) -> Subspace {
    let b = &sm.base;
    smash_blocks(sm, |r, s| partial_entry(b, r, s))
}

/// `I^B` as an algebra, verified to be a two-sided ideal of `B#G`.
pub fn partial_smash(b: &GradedAlgebra) -> Result<SmashAlgebra> {
    let sm = smash(b);
    let ideal = partial_smash_ideal(&sm);
    if !sm.carrier.is_two_sided_ideal(&ideal) {
        return Err(Error::VerificationFailed("I^B is not an ideal of B#G".into()));
    }
    let carrier = sm.carrier.graded_subalgebra(&ideal)?;
    let basis_in_fmat = ideal
        .rows()
        .iter()
        .map(|row| {
            let mut acc = Vector::zero(sm.basis_in_fmat[0].dim(), b.field());
            for (k, c) in row.entries() {
                acc = acc.axpy(c, &sm.basis_in_fmat[*k]);
            }
            acc
        })
        .collect();
    Ok(SmashAlgebra { kind: SmashKind::PartialSmash, base: b.clone(), carrier, basis_in_fmat })
}

/// `γ^B`, the restriction of `β^B` to `I^B`, with the checks that go with it.
#[derive(Clone, Debug)]
pub struct CanonicalPartialAction {
    pub smash: SmashAlgebra,
    /// `I^B` inside `B#G`.
    pub ideal: Subspace,
    pub restriction: Restriction,
    pub report: VerificationReport,
}

pub fn canonical_partial_action(b: &GradedAlgebra) -> Result<CanonicalPartialAction> {
    if !b.is_partially_strongly_graded() {
        return Err(Error::PreconditionFailed("algebra is not partially strongly graded".into()));
    }
    let g = b.group();
    let sm = smash(b);
    let beta = dual_action_on(&fmat(b), &sm).on_smash;
    let ideal = partial_smash_ideal(&sm);
    let restriction = restrict_global(&beta, &ideal)?;
    let a = sm.carrier.algebra();
    let mut report = VerificationReport::new("restsmash", "");
    for t in g.elements() {
        let bt = beta.image(t, &ideal);
        let it = restriction.lift_subspace(restriction.alpha.domain(t));
        report.span_eq(format!("I_t = I beta_t(I) (t={t})"), &it, &a.span_mul(&ideal, &bt));
        report.span_eq(format!("I_t = beta_t(I) I (t={t})"), &it, &a.span_mul(&bt, &ideal));
        let displayed = smash_blocks(&sm, |r, s| {
            let left = b.product(&b.component(g.inv(r)), &b.d(t));
            b.product(&left, &b.component(s))
        });
        report.span_eq(format!("I_t = sum B_r^-1 B_t B_t^-1 B_s e_rs (t={t})"), &it, &displayed);
    }
    report.holds("gamma is a product partial action", restriction.alpha.passed_product());
    report.span_eq("sum_t beta_t(I) = B#G", &beta.orbit_span(&ideal), &sm.carrier.full());
    Ok(CanonicalPartialAction { smash: sm, ideal, restriction, report })
}

/// `ψ_B : (B#G) ⋊_{β^B} G → FMat_G(B)` with its verification.
#[derive(Clone, Debug)]
pub struct DualityIso {
    pub smash: SmashAlgebra,
    pub skew: SkewAlgebra,
    pub fmat: FMat,
    /// Images of the basis of the skew algebra.
    pub images: Vec<Vector>,
    pub report: VerificationReport,
}

/// `(b, r, s) δ_t ↦ b e_{r, t⁻¹s}`.
pub fn duality_iso(b: &GradedAlgebra) -> Result<DualityIso> {
    let g = b.group();
    let fm = fmat(b);
    let sm = smash(b);
    let beta = dual_action_on(&fm, &sm).on_smash;
    let skew = skew_group_algebra(&beta.as_partial())?;
    let mut images = Vec::with_capacity(skew.dim());
    for t in g.elements() {
        for k in 0..sm.dim() {
            let (r, s, entry) = sm.entry(k);
            images.push(fm.place(&entry, r, g.mul(g.inv(t), s)));
        }
    }
    let mut report = VerificationReport::new("duality", "");
    report.dim_eq("dim (B#G) x| G = dim FMat(B)", skew.dim(), fm.algebra.dim());
    report.dim_eq("dim FMat(B) = |G|^2 dim B", fm.algebra.dim(), g.order() * g.order() * b.dim());
    let image = Subspace::span_of(fm.algebra.dim(), b.field(), images.iter().cloned());
    report.holds("psi_B is bijective", image.rank() == skew.dim() && image.is_full());
    let graded = images
        .iter()
        .enumerate()
        .all(|(k, v)| fm.algebra.degree_of(v) == Some(skew.algebra.degree(k)));
    report.holds("psi_B preserves degrees", graded);
    let mult = skew.algebra.algebra().is_homomorphism(fm.algebra.algebra(), &images).is_ok();
    report.holds("psi_B is multiplicative", mult);
    Ok(DualityIso { smash: sm, skew, fmat: fm, images, report })
}

impl DualityIso {
    /// `ψ_B` applied to a vector of the skew algebra.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut acc = Vector::zero(self.fmat.algebra.dim(), v.field());
        for (k, c) in v.entries() {
            acc = acc.axpy(c, &self.images[*k]);
        }
        acc
    }
}

/// `⊕_{r,s} (Σ_t B_{r⁻¹}B_tB_s) e_{r,s}` inside `FMat_G(B)`.
pub fn partial_duality_target(fm: &FMat) -> Subspace {
    let b = &fm.base;
    let g = b.group();
    fm.blocks(|r, s| {
        let mut acc = b.zero();
        for t in g.elements() {
            let left = b.product(&b.component(g.inv(r)), &b.component(t));
            acc = acc.plus(&b.product(&left, &b.component(s)));
        }
        acc
    })
}

/// `ψ_B(I^B ⋊_{γ^B} G)`, checked against the displayed span.
pub fn partial_duality_image(b: &GradedAlgebra) -> Result<(Subspace, VerificationReport)> {
    let canon = canonical_partial_action(b)?;
    let iso = duality_iso(b)?;
    let g = b.group();
    let r = &canon.restriction;
    let mut bld = SpanBuilder::new(iso.fmat.algebra.dim(), b.field());
    for t in g.elements() {
        for x in r.alpha.domain(t).rows() {
            let in_smash = r.lift(x);
            let in_skew = iso.skew.delta(t, &in_smash).expect("full domain");
            bld.insert(&iso.apply(&in_skew));
        }
    }
    let image = bld.finish();
    let mut report = VerificationReport::new("partial-duality", "");
    report.span_eq("psi_B(I x| G) = sum B_r^-1 B_t B_s e_rs", &image, &partial_duality_target(&iso.fmat));
    report.holds("image is a subalgebra", iso.fmat.algebra.is_subalgebra(&image));
    report.holds("image is graded", iso.fmat.algebra.is_graded_subspace(&image));
    Ok((image, report))
}

/// `I^B` is `β^B`-invariant.
pub fn partial_smash_is_invariant(b: &GradedAlgebra) -> bool {
    let sm = smash(b);
    let beta = dual_action_on(&fmat(b), &sm).on_smash;
    beta.is_invariant(&partial_smash_ideal(&sm))
}

/// `ψ_B ∘ (φ^#)^⋊ = φ^fin ∘ ψ_A` for a graded homomorphism `φ : A → B`.
pub fn duality_naturality(a: &GradedAlgebra, b: &GradedAlgebra, phi: &[Vector]) -> Result<bool> {
    let sharp = smash_functor(a, b, phi)?;
    let ia = duality_iso(a)?;
    let ib = duality_iso(b)?;
    let g = a.group();
    let (da, db) = (ia.smash.dim(), ib.smash.dim());
    let fa = &ia.fmat;
    let fb = &ib.fmat;
    for t in g.elements() {
        for k in 0..da {
            let src = Vector::unit(ia.skew.dim(), t * da + k, a.field());
            let lifted = sharp.apply(&Vector::unit(da, k, a.field())).shifted(t * db, ib.skew.dim());
            let left = ib.apply(&lifted);
            let p = ia.apply(&src);
            let mut right = Vector::zero(fb.algebra.dim(), b.field());
            for (x, c) in p.entries() {
                let (i, r, s) = fa.label(*x);
                right = right.axpy(c, &fb.place(&phi[i], r, s));
            }
            if left != right {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::linalg::Field;

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

    #[test]
    fn fmat_dimensions_and_grading() {
        let f = fmat(&kc2());
        assert_eq!(f.algebra.dim(), 8);
        assert!(GradedAlgebra::new(f.algebra.algebra().clone(), f.algebra.group().clone(), f.algebra.degrees().to_vec()).is_ok());
        let f2 = fmat(&dual_numbers());
        assert_eq!(f2.algebra.component(0).rank(), 4);
        let trivial = GradedAlgebra::trivially_graded(kc2().algebra().clone(), FiniteGroup::trivial());
        assert_eq!(fmat(&trivial).algebra.dim(), 2);
    }

    #[test]
    fn smash_dims() {
        assert_eq!(smash(&kc2()).dim(), 4);
        let s2 = smash(&dual_numbers());
        assert_eq!(s2.dim(), 4);
        assert!(s2.carrier.algebra().check_associative().is_ok());
        assert_eq!(partial_smash(&dual_numbers()).unwrap().dim(), 3);
        assert_eq!(partial_smash(&kc2()).unwrap().dim(), 4);
    }

    #[test]
    fn eta_on_group_algebra() {
        let sm = smash(&kc2());
        let images = eta(&sm);
        let n = sm.basis_in_fmat[0].dim();
        let in_fmat = |v: &Vector| {
            let mut acc = Vector::zero(n, q());
            for (k, c) in v.entries() {
                acc = acc.axpy(c, &sm.basis_in_fmat[*k]);
            }
            acc
        };
        let fm = fmat(&kc2());
        // η(1) = e_{1,1} + e_{g,g}
        let one = fm.place(&e(2, 0), 0, 0).add(&fm.place(&e(2, 0), 1, 1));
        assert_eq!(in_fmat(&images[0]), one);
        // η(u_g) = u_g e_{1,g} + u_g e_{g,1}
        let ug = fm.place(&e(2, 1), 0, 1).add(&fm.place(&e(2, 1), 1, 0));
        assert_eq!(in_fmat(&images[1]), ug);
        assert_eq!(eta_fmat(&fm)[1], ug);
        let beta = dual_action(&kc2()).on_smash;
        assert_eq!(fixed_subalgebra(&beta), Subspace::span_of(4, q(), images));
    }

    #[test]
    fn dual_action_on_dual_numbers() {
        let b = dual_numbers();
        let fm = fmat(&b);
        let da = dual_action(&b);
        // β_g(x e_{1,g}) = x e_{g,1}
        assert_eq!(da.on_fmat.apply(1, &fm.place(&e(2, 1), 0, 1)), fm.place(&e(2, 1), 1, 0));
        assert!(GlobalAction::new(da.on_fmat.group().clone(), da.on_fmat.algebra().clone(), da.on_fmat.maps().to_vec()).is_ok());
    }

    #[test]
    fn duality_for_small_algebras() {
        for b in [kc2(), dual_numbers()] {
            let iso = duality_iso(&b).unwrap();
            assert!(iso.report.pass, "{:?}", iso.report.first_failure());
            assert_eq!(iso.skew.dim(), 8);
        }
    }

    #[test]
    fn partial_smash_invariance() {
        assert!(partial_smash_is_invariant(&kc2()));
        assert!(!partial_smash_is_invariant(&dual_numbers()));
    }

    #[test]
    fn canonical_action_on_group_algebra() {
        let c = canonical_partial_action(&kc2()).unwrap();
        assert!(c.report.pass);
        assert!(c.restriction.alpha.is_global());
        let (image, rep) = partial_duality_image(&kc2()).unwrap();
        assert!(rep.pass);
        assert!(image.is_full());
        assert!(canonical_partial_action(&dual_numbers()).is_err());
    }

    #[test]
    fn naturality_for_identity() {
        let b = kc2();
        let id: Vec<Vector> = (0..2).map(|i| e(2, i)).collect();
        assert!(duality_naturality(&b, &b, &id).unwrap());
        let sharp = smash_functor(&b, &b, &id).unwrap();
        assert_eq!(sharp, LinearMap::identity(4, q()));
    }
}
