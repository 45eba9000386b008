//! One routine per constructive theorem: each rebuilds its witness from scratch and checks the
//! span equalities that make it a witness.

use crate::action::{skew_group_algebra, PartialAction, Restriction, SkewAlgebra};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{SpanBuilder, Subspace, Vector};
use crate::morita::{
    action_equivalence_to_sge, compose_contexts, smash_context, AbstractContext, ActionMoritaEquivalence, EmbeddedContext,
};
use crate::report::VerificationReport;
use crate::smash::{canonical_partial_action, dual_action_on, duality_iso, duality_naturality, fmat, smash, smash_place, SmashAlgebra};

/// A verified context together with its report.
#[derive(Clone, Debug)]
pub struct Witness {
    pub context: EmbeddedContext,
    pub report: VerificationReport,
}

/// `(B#G) ⋊_{β^B} G` with helpers for building subspaces from matrix-unit descriptions.
struct Crossed {
    base: GradedAlgebra,
    sm: SmashAlgebra,
    skew: SkewAlgebra,
}

impl Crossed {
    fn new(b: &GradedAlgebra) -> Result<Crossed> {
        let sm = smash(b);
        let beta = dual_action_on(&fmat(b), &sm).on_smash;
        let skew = skew_group_algebra(&beta.as_partial())?;
        Ok(Crossed { base: b.clone(), sm, skew })
    }

    fn algebra(&self) -> &GradedAlgebra {
        &self.skew.algebra
    }

    /// `v e_{r,s} δ_t`.
    fn place(&self, v: &Vector, r: usize, s: usize, t: usize) -> Vector {
        self.skew.delta(t, &smash_place(&self.sm, v, r, s)).expect("full domain")
    }

    /// `⊕_{t,r,s} E(t, r, s) e_{r,s} δ_t` for `E(t, r, s) ⊆ B_{r⁻¹s}`.
    fn blocks(&self, entry: impl Fn(usize, usize, usize) -> Subspace) -> Subspace {
        let g = self.base.group();
        let mut b = SpanBuilder::new(self.skew.dim(), self.base.field());
        for t in g.elements() {
            for r in g.elements() {
                for s in g.elements() {
                    for row in entry(t, r, s).rows() {
                        b.insert(&self.place(row, r, s, t));
                    }
                }
            }
        }
        b.finish()
    }

    /// `⊕_t U_t δ_t` for subspaces `U_t` of `B#G`.
    fn graded(&self, u: impl Fn(usize) -> Subspace) -> Subspace {
        let mut b = SpanBuilder::new(self.skew.dim(), self.base.field());
        for t in self.base.group().elements() {
            for row in u(t).rows() {
                b.insert(&self.skew.delta(t, row).expect("full domain"));
            }
        }
        b.finish()
    }

    fn mul(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.algebra().algebra().span_mul(u, v)
    }

    /// `B_t e_{1,t} δ_t`.
    fn b_prime(&self) -> Subspace {
        let g = self.base.group();
        let b = &self.base;
        self.blocks(|t, r, s| if r == g.identity() && s == t { b.component(t) } else { b.zero() })
    }

    /// `b ↦ b e_{1,deg b} δ_{deg b}` on the basis of `B`.
    fn b_prime_iso(&self) -> Vec<Vector> {
        let b = &self.base;
        let one = b.group().identity();
        (0..b.dim()).map(|i| self.place(&b.basis_vector(i), one, b.degree(i), b.degree(i))).collect()
    }
}

fn entry_product(b: &GradedAlgebra, degrees: &[usize]) -> Subspace {
    let mut acc = b.component(degrees[0]);
    for &d in &degrees[1..] {
        acc = b.product(&acc, &b.component(d));
    }
    acc
}

fn check_iso_onto(r: &mut VerificationReport, name: &str, source: &GradedAlgebra, target: &GradedAlgebra, images: &[Vector], onto: &Subspace) {
    r.holds(format!("{name} is a graded homomorphism"), source.check_graded_homomorphism(target, images).is_ok());
    let span = Subspace::span_of(target.dim(), target.field(), images.iter().cloned());
    r.span_eq(format!("{name} is onto"), &span, onto);
    r.dim_eq(format!("{name} is injective"), span.rank(), source.dim());
}

/// `ψ_B` is a graded isomorphism onto `FMat_G(B)`, natural with respect to `φ : A → B` when given.
pub fn verify_duality(b: &GradedAlgebra, morphism: Option<(&GradedAlgebra, &[Vector])>) -> Result<VerificationReport> {
    let iso = duality_iso(b)?;
    let mut r = VerificationReport::new("duality", "");
    r.absorb("", iso.report);
    let id: Vec<Vector> = (0..b.dim()).map(|i| b.basis_vector(i)).collect();
    r.holds("naturality square for the identity", duality_naturality(b, b, &id)?);
    if let Some((a, phi)) = morphism {
        r.holds("naturality square for the supplied morphism", duality_naturality(a, b, phi)?);
    }
    Ok(r)
}

/// `(S, B', X, Y)` inside `S = (B#G) ⋊_{β^B} G`, for idempotent graded `B`.
pub fn verify_geq_smash(b: &GradedAlgebra) -> Result<Witness> {
    if !b.is_idempotent_graded() {
        return Err(Error::PreconditionFailed("algebra is not idempotent".into()));
    }
    let g = b.group();
    let one = g.identity();
    let s = Crossed::new(b)?;
    let x = s.blocks(|t, r, col| if col == t { b.component(g.mul(g.inv(r), t)) } else { b.zero() });
    let y = s.blocks(|_, r, col| if r == one { b.component(col) } else { b.zero() });
    let bp = s.b_prime();
    let full = s.algebra().full();
    let mut rep = VerificationReport::new("geq", "");
    rep.span_eq("XY = S", &s.mul(&x, &y), &full);
    rep.span_eq("SX = X", &s.mul(&full, &x), &x);
    rep.span_eq("YX = B'", &s.mul(&y, &x), &bp);
    rep.span_eq("XB' = X", &s.mul(&x, &bp), &x);
    rep.span_eq("B'Y = Y", &s.mul(&bp, &y), &y);
    rep.span_eq("YS = Y", &s.mul(&y, &full), &y);
    check_iso_onto(&mut rep, "B -> B'", b, s.algebra(), &s.b_prime_iso(), &bp);
    let context = EmbeddedContext::new(s.algebra().clone(), full, bp, x, y)?;
    rep.holds("context is a graded equivalence", context.is_graded_equivalence());
    Ok(Witness { context, report: rep })
}

/// `(B ⋊_β G, A ⋊_α G, ⊕β_t(A)δ_t, ⊕Aδ_t)` for a minimal globalization `β` of `α`.
pub fn verify_globalization_geq(res: &Restriction) -> Result<Witness> {
    let beta = &res.beta;
    if !beta.orbit_span(&res.ideal).is_full() {
        return Err(Error::NotMinimal);
    }
    let g = beta.group();
    let skew = skew_group_algebra(&beta.as_partial())?;
    let c = &skew.algebra;
    let graded = |u: &dyn Fn(usize) -> Subspace| {
        let mut bld = SpanBuilder::new(skew.dim(), c.field());
        for t in g.elements() {
            for row in u(t).rows() {
                bld.insert(&skew.delta(t, row).expect("full domain"));
            }
        }
        bld.finish()
    };
    let x = graded(&|t| beta.image(t, &res.ideal));
    let y = graded(&|_| res.ideal.clone());
    let axg = graded(&|t| res.lift_subspace(res.alpha.domain(t)));
    let full = c.full();
    let mul = |u: &Subspace, v: &Subspace| c.algebra().span_mul(u, v);
    let mut rep = VerificationReport::new("globalization", "");
    rep.span_eq("(B x| G) X = X", &mul(&full, &x), &x);
    rep.span_eq("Y (B x| G) = Y", &mul(&y, &full), &y);
    rep.span_eq("XY = B x| G", &mul(&x, &y), &full);
    rep.span_eq("YX = A x| G", &mul(&y, &x), &axg);
    rep.span_eq("X (A x| G) = X", &mul(&x, &axg), &x);
    rep.span_eq("(A x| G) Y = Y", &mul(&axg, &y), &y);
    let small = skew_group_algebra(&res.alpha)?;
    let mut images = Vec::with_capacity(small.dim());
    for t in g.elements() {
        for row in res.alpha.domain(t).rows() {
            images.push(skew.delta(t, &res.lift(row)).expect("full domain"));
        }
    }
    check_iso_onto(&mut rep, "A x| G -> B x| G", &small.algebra, c, &images, &axg);
    let context = EmbeddedContext::new(c.clone(), full, axg, x, y)?;
    rep.holds("context is a graded equivalence", context.is_graded_equivalence());
    Ok(Witness { context, report: rep })
}

/// `(I^B ⋊_γ G, B', X', Y')` inside `(B#G) ⋊_{β^B} G`, for psg `B`.
pub fn verify_sg(b: &GradedAlgebra) -> Result<Witness> {
    if !b.is_partially_strongly_graded() {
        return Err(Error::PreconditionFailed("algebra is not partially strongly graded".into()));
    }
    let g = b.group();
    let one = g.identity();
    let canon = canonical_partial_action(b)?;
    let res = &canon.restriction;
    let s = Crossed::new(b)?;
    let ig = s.graded(|t| res.lift_subspace(res.alpha.domain(t)));
    let mut rep = VerificationReport::new("sg", "");
    rep.absorb("restsmash", canon.report.clone());

    let small = skew_group_algebra(&res.alpha)?;
    let mut images = Vec::with_capacity(small.dim());
    for t in g.elements() {
        for row in res.alpha.domain(t).rows() {
            images.push(s.skew.delta(t, &res.lift(row)).expect("full domain"));
        }
    }
    check_iso_onto(&mut rep, "I x| G -> S", &small.algebra, s.algebra(), &images, &ig);

    let x = s.blocks(|t, r, col| if col == t { b.component(g.mul(g.inv(r), t)) } else { b.zero() });
    let y = s.blocks(|_, r, col| if r == one { b.component(col) } else { b.zero() });
    let bp = s.b_prime();
    let xp = s.blocks(|t, r, col| if col == t { entry_product(b, &[g.inv(r), t]) } else { b.zero() });
    let yp = s.blocks(|t, r, col| if r == one { b.product(&b.d(t), &b.component(col)) } else { b.zero() });
    rep.span_eq("X' = (I x| G) X", &xp, &s.mul(&ig, &x));
    rep.span_eq("Y' = Y (I x| G)", &yp, &s.mul(&y, &ig));
    rep.span_eq("X'Y' = I x| G", &s.mul(&xp, &yp), &ig);
    rep.span_eq("Y'X' = B'", &s.mul(&yp, &xp), &bp);
    rep.span_eq("X'B' = X'", &s.mul(&xp, &bp), &xp);
    rep.span_eq("B'Y' = Y'", &s.mul(&bp, &yp), &yp);
    rep.span_eq("(I x| G) X' = X'", &s.mul(&ig, &xp), &xp);
    rep.span_eq("Y' (I x| G) = Y'", &s.mul(&yp, &ig), &yp);
    check_iso_onto(&mut rep, "B -> B'", b, s.algebra(), &s.b_prime_iso(), &bp);
    let c = s.algebra();
    for t in g.elements() {
        let ti = g.inv(t);
        let it = ig.clone();
        let ig_t = c.graded_piece(&it, t);
        let ig_ti = c.graded_piece(&it, ti);
        let prod_i = s.mul(&ig_t, &ig_ti);
        let xy = s.mul(&c.graded_piece(&xp, t), &c.graded_piece(&yp, ti));
        let it_d1 = s.graded(|u| if u == one { res.lift_subspace(res.alpha.domain(t)) } else { Subspace::zero(s.sm.dim(), b.field()) });
        rep.span_eq(format!("X'_{t} Y'_{ti} = I_{t} d_1"), &xy, &it_d1);
        rep.span_eq(format!("I_{t} d_1 = (I_{t} d_{t})(I_{ti} d_{ti})"), &it_d1, &prod_i);
        let yx = s.mul(&c.graded_piece(&yp, t), &c.graded_piece(&xp, ti));
        let dt = s.blocks(|u, r, col| if u == one && r == one && col == one { b.d(t) } else { b.zero() });
        rep.span_eq(format!("Y'_{t} X'_{ti} = D_{t} e_11 d_1"), &yx, &dt);
        let bb = s.mul(&c.graded_piece(&bp, t), &c.graded_piece(&bp, ti));
        rep.span_eq(format!("D_{t} e_11 d_1 = B'_{t} B'_{ti}"), &dt, &bb);
    }
    let context = EmbeddedContext::new(s.algebra().clone(), ig, bp, xp, yp)?;
    rep.absorb("", context.sge_report());
    Ok(Witness { context, report: rep })
}

/// The canonical partial action of `B` and the globalization equivalence between
/// `(B#G) ⋊_{β^B} G` and `I^B ⋊_{γ^B} G`.
pub fn verify_partialrep(b: &GradedAlgebra) -> Result<Witness> {
    if !b.is_partially_strongly_graded() {
        return Err(Error::PreconditionFailed("algebra is not partially strongly graded".into()));
    }
    let canon = canonical_partial_action(b)?;
    let mut w = verify_globalization_geq(&canon.restriction)?;
    let mut rep = VerificationReport::new("partialrep", "");
    rep.absorb("restsmash", canon.report);
    rep.absorb("", w.report);
    w.report = rep;
    Ok(w)
}

/// Strong grading is invariant under strong-graded-equivalence.
pub fn verify_invsgeq(ctx: &EmbeddedContext) -> Result<VerificationReport> {
    if let Some(c) = ctx.sge_report().first_failure() {
        return Err(Error::PreconditionFailed(format!("not a strong-graded-equivalence: {}", c.name)));
    }
    let a = ctx.algebra_a()?;
    let b = ctx.algebra_b()?;
    let mut r = VerificationReport::new("invsgeq", "");
    r.holds("A partially strongly graded", a.is_partially_strongly_graded());
    r.holds("B partially strongly graded", b.is_partially_strongly_graded());
    r.holds("A strongly graded iff B strongly graded", a.is_strongly_graded() == b.is_strongly_graded());
    Ok(r)
}

/// For strongly graded `B`, `B'` and a graded equivalence `M : B ~ B'`, the strong-graded-equivalence
/// `B ~ (B#G) ⋊ G ~ (B'#G) ⋊ G ~ B'` assembled by composition.
pub fn verify_eq_strong_gr(m: &AbstractContext) -> Result<(AbstractContext, VerificationReport)> {
    let b = m.algebra_a();
    let bp = m.algebra_b();
    if !b.is_strongly_graded() || !bp.is_strongly_graded() {
        return Err(Error::PreconditionFailed("both algebras must be strongly graded".into()));
    }
    if let Some(c) = m.embedded().morita_report().first_failure() {
        return Err(Error::PreconditionFailed(format!("not a graded equivalence: {}", c.name)));
    }
    let mut r = VerificationReport::new("eq-strong-gr", "");
    let left = verify_sg(&b)?;
    r.absorb("sg(B)", left.report.clone());
    let right = verify_sg(&bp)?;
    r.absorb("sg(B')", right.report.clone());
    let sc = smash_context(m)?;
    r.absorb("M#G", sc.report.clone());
    let ame = ActionMoritaEquivalence::from_global(sc.context.clone(), &sc.theta)?;
    let middle = action_equivalence_to_sge(&ame)?;
    r.absorb("moritaeqs", middle.report.clone());
    let first = left.context.to_abstract()?.reversed();
    let second = middle.context.to_abstract()?;
    let third = right.context.to_abstract()?;
    let composite = compose_contexts(&compose_contexts(&first, &second)?, &third)?;
    let emb = composite.embedded();
    r.absorb("composite", emb.sge_report());
    r.absorb("composite", verify_invsgeq(&emb)?);
    Ok((composite, r))
}

/// The consequences available for a product partial action `α` with `B = A ⋊_α G`.
pub fn verify_moritaglob_consequences(alpha: &PartialAction) -> Result<VerificationReport> {
    let alpha = if alpha.passed_product() { alpha.clone() } else { alpha.clone().validate_product()? };
    let b = skew_group_algebra(&alpha)?.algebra;
    let mut r = VerificationReport::new("moritaglob", "");
    let canon = canonical_partial_action(&b)?;
    r.absorb("(a)", canon.report.clone());
    let sg = verify_sg(&b)?;
    r.absorb("(b)", sg.report.clone());
    r.absorb("(c)", verify_duality(&b, None)?);
    let glob = verify_partialrep(&b)?;
    r.absorb("(d)", glob.report.clone());
    let first = sg.context.to_abstract()?.reversed();
    let second = glob.context.to_abstract()?.reversed();
    let composite = compose_contexts(&first, &second)?;
    r.absorb("(d) composite", composite.embedded().morita_report());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{restrict_global, GlobalAction};
    use crate::algebra::Algebra;
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

    fn diag(n: usize) -> Algebra {
        Algebra::from_products(n, q(), (0..n).map(|i| (i, i, e(n, i)))).unwrap()
    }

    fn f3() -> Restriction {
        let swap = GlobalAction::permutation(FiniteGroup::cyclic(2), diag(2), &[vec![0, 1], vec![1, 0]]).unwrap();
        restrict_global(&swap, &Subspace::coordinate(2, q(), [0])).unwrap()
    }

    #[test]
    fn duality_and_geq_on_small_algebras() {
        for b in [kc2(), dual_numbers()] {
            let r = verify_duality(&b, None).unwrap();
            assert!(r.pass, "{:?}", r.first_failure());
            let w = verify_geq_smash(&b).unwrap();
            assert!(w.report.pass, "{:?}", w.report.first_failure());
        }
        let zero = GradedAlgebra::trivially_graded(Algebra::zero_product(1, q()), FiniteGroup::cyclic(2));
        assert!(matches!(verify_geq_smash(&zero), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn globalization_of_restricted_swap() {
        let w = verify_globalization_geq(&f3()).unwrap();
        assert!(w.report.pass, "{:?}", w.report.first_failure());
        assert_eq!(w.context.b.rank(), 1);
        assert_eq!(w.context.a.rank(), 4);
        assert_eq!(w.context.to_abstract().unwrap().linking().dim(), 9);
    }

    #[test]
    fn sg_on_group_algebra_and_skew() {
        let w = verify_sg(&kc2()).unwrap();
        assert!(w.report.pass, "{:?}", w.report.first_failure());
        let skew = skew_group_algebra(&f3().alpha).unwrap().algebra;
        let w = verify_sg(&skew).unwrap();
        assert!(w.report.pass, "{:?}", w.report.first_failure());
        assert!(matches!(verify_sg(&dual_numbers()), Err(Error::PreconditionFailed(_))));
        let r = verify_partialrep(&skew).unwrap();
        assert!(r.report.pass, "{:?}", r.report.first_failure());
    }

    #[test]
    fn eq_strong_gr_for_trivial_context() {
        let (c, r) = verify_eq_strong_gr(&AbstractContext::trivial(&kc2())).unwrap();
        assert!(r.pass, "{:?}", r.first_failure());
        assert!(c.embedded().is_strong_graded_equivalence());
        let bad = verify_eq_strong_gr(&AbstractContext::trivial(&dual_numbers()));
        assert!(matches!(bad, Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn moritaglob_for_restricted_swap() {
        let r = verify_moritaglob_consequences(&f3().alpha).unwrap();
        assert!(r.pass, "{:?}", r.first_failure());
    }
}
