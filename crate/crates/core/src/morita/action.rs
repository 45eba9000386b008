use super::context::{AbstractContext, EmbeddedContext, BLOCKS};
use super::linking::corner_context;
use crate::action::{restrict_global, skew_group_algebra, GlobalAction, PartialAction, SkewAlgebra};
use crate::algebra::{GradedAlgebra, Multiplier};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Subspace, Vector};
use crate::report::VerificationReport;
use crate::smash::{canonical_partial_action, dual_action_on, fmat, partial_smash_ideal, smash};

/// `M#G` carried on the blocks `A#G, X#G, Y#G, B#G` of `C#G`, with `β^C` moved to those coordinates.
#[derive(Clone, Debug)]
pub struct SmashContext {
    pub context: AbstractContext,
    pub theta: GlobalAction,
    pub report: VerificationReport,
}

pub fn smash_context(m: &AbstractContext) -> Result<SmashContext> {
    let c = m.linking();
    let g = c.group();
    let sm = smash(c);
    let beta = dual_action_on(&fmat(c), &sm).on_smash;
    let f = c.field();
    let n = sm.dim();
    let block_of_label: Vec<usize> = (0..n).map(|k| m.block_of(sm.entry(k).2.leading().expect("unit").0)).collect();
    let piece = |b: usize| Subspace::coordinate(n, f, (0..n).filter(|&k| block_of_label[k] == b));
    let emb = EmbeddedContext::new(sm.carrier.clone(), piece(0), piece(3), piece(1), piece(2))?;
    let context = emb.to_abstract()?;
    // new coordinate j of the block context is old smash label order[j]
    let labels = &block_of_label;
    let order: Vec<usize> = (0..4).flat_map(|b| (0..n).filter(move |&k| labels[k] == b)).collect();
    let mut position = vec![0; n];
    for (j, &k) in order.iter().enumerate() {
        position[k] = j;
    }
    let maps = g
        .elements()
        .map(|t| {
            let p: Vec<usize> = order.iter().map(|&k| position[beta.apply(t, &Vector::unit(n, k, f)).leading().expect("unit").0]).collect();
            LinearMap::permutation(n, f, &p)
        })
        .collect();
    let theta = GlobalAction::assemble(g.clone(), context.linking().algebra().clone(), maps);

    let mut report = VerificationReport::new("moritaE", "");
    let (a, b) = (m.algebra_a(), m.algebra_b());
    let (sa, sb) = (smash(&a), smash(&b));
    report.holds("C#G block A#G = smash(A)", context.algebra_a() == sa.carrier);
    report.holds("C#G block B#G = smash(B)", context.algebra_b() == sb.carrier);
    let o = context.offsets();
    let restricted = |blk: usize, t: usize| {
        let d = context.dims()[blk];
        let cols = (0..d).map(|i| theta.apply(t, &Vector::unit(n, o[blk] + i, f)).window(o[blk], d)).collect();
        LinearMap::from_columns(d, f, cols).expect("shape")
    };
    let beta_a = dual_action_on(&fmat(&a), &sa).on_smash;
    let beta_b = dual_action_on(&fmat(&b), &sb).on_smash;
    report.holds("beta^C restricts to beta^A", g.elements().all(|t| restricted(0, t) == *beta_a.map(t)));
    report.holds("beta^C restricts to beta^B", g.elements().all(|t| restricted(3, t) == *beta_b.map(t)));
    let blocks = context.embedded();
    for (name, k) in [("A#G", 0), ("X#G", 1), ("Y#G", 2), ("B#G", 3)] {
        report.holds(format!("{name} is beta^C-invariant"), theta.is_invariant(&context.block(k)));
    }
    if m.embedded().is_graded_equivalence() {
        report.absorb("M#G", blocks.morita_report());
    }
    Ok(SmashContext { context, theta, report })
}

/// A Morita context with a product partial action `θ` on its context algebra restricting to `α` and `α'`.
#[derive(Clone, Debug)]
pub struct ActionMoritaEquivalence {
    pub context: AbstractContext,
    pub theta: PartialAction,
    pub alpha: PartialAction,
    pub alpha_prime: PartialAction,
}

/// `θ` on block `k`, in block coordinates.
fn restrict_to_block(ctx: &AbstractContext, theta: &PartialAction, k: usize) -> Result<PartialAction> {
    let w = ctx.block(k);
    let o = ctx.offsets()[k];
    let d = ctx.dims()[k];
    let alg = ctx.linking().algebra().restrict(&w)?;
    let g = theta.group();
    let mut graphs = Vec::with_capacity(g.order());
    for t in g.elements() {
        let dom = theta.domain(g.inv(t)).meet(&w);
        let mut pairs = Vec::with_capacity(dom.rank());
        for x in dom.rows() {
            let y = theta.apply(t, x).expect("domain row");
            if !w.has(&y) {
                return Err(Error::NotEquivariant(t));
            }
            pairs.push((x.window(o, d), y.window(o, d)));
        }
        graphs.push(pairs);
    }
    PartialAction::from_graphs(g.clone(), alg, graphs)?.validate_product()
}

impl ActionMoritaEquivalence {
    /// Derives `α` and `α'` as the restrictions of `θ` to the corner blocks.
    pub fn new(context: AbstractContext, theta: PartialAction) -> Result<ActionMoritaEquivalence> {
        if theta.algebra() != context.linking().algebra() {
            return Err(Error::Unsupported("theta must act on the block-coordinate context algebra".into()));
        }
        let theta = if theta.passed_product() { theta } else { theta.validate_product()? };
        let alpha = restrict_to_block(&context, &theta, 0)?;
        let alpha_prime = restrict_to_block(&context, &theta, 3)?;
        Ok(ActionMoritaEquivalence { context, theta, alpha, alpha_prime })
    }

    pub fn from_global(context: AbstractContext, beta: &GlobalAction) -> Result<ActionMoritaEquivalence> {
        ActionMoritaEquivalence::new(context, beta.as_partial())
    }

    /// `α ~ α` through `(A, A, A, A)` with `θ = α` entrywise on `M_2(A)`.
    pub fn trivial(alpha: &PartialAction) -> Result<ActionMoritaEquivalence> {
        let g = alpha.group();
        let a = GradedAlgebra::trivially_graded(alpha.algebra().clone(), g.clone());
        let context = AbstractContext::trivial(&a);
        let d = a.dim();
        let n = 4 * d;
        let graphs = g
            .elements()
            .map(|t| {
                let mut pairs = Vec::new();
                for x in alpha.domain(g.inv(t)).rows() {
                    let y = alpha.apply(t, x).expect("domain row");
                    for b in 0..4 {
                        pairs.push((x.shifted(b * d, n), y.shifted(b * d, n)));
                    }
                }
                pairs
            })
            .collect();
        let theta = PartialAction::from_graphs(g.clone(), context.linking().algebra().clone(), graphs)?;
        ActionMoritaEquivalence::new(context, theta)
    }

    fn lift(&self, block: usize, u: &Subspace) -> Subspace {
        u.shifted(self.context.offsets()[block], self.context.linking().dim())
    }

    /// `D_t`, `X_t`, `Y_t`, `D'_t` as subspaces of the context algebra.
    pub fn domain_blocks(&self, t: usize) -> [Subspace; 4] {
        let dom = self.theta.domain(t);
        [
            self.lift(0, self.alpha.domain(t)),
            dom.meet(&self.context.block(1)),
            dom.meet(&self.context.block(2)),
            self.lift(3, self.alpha_prime.domain(t)),
        ]
    }
}

fn same_action(p: &PartialAction, q: &PartialAction) -> bool {
    p.domains() == q.domains() && p.group().elements().all(|t| p.images(t) == q.images(t))
}

pub fn validate_action_equivalence(ame: &ActionMoritaEquivalence) -> VerificationReport {
    let ctx = &ame.context;
    let emb = ctx.embedded();
    let g = ctx.group();
    let mut r = VerificationReport::new("action-equivalence", "");
    r.absorb("", emb.morita_report());
    r.holds("theta is a product partial action", ame.theta.passed_product());
    for t in g.elements() {
        let [d, xt, yt, dp] = ame.domain_blocks(t);
        let whole = ame.theta.domain(t);
        r.span_eq(format!("Y D_{t} X = D'_{t}"), &emb.mul3(&emb.y, &d, &emb.x), &dp);
        let mut blocks = d.plus(&xt);
        blocks = blocks.plus(&yt).plus(&dp);
        r.span_eq(format!("theta domain {t} has block form"), &blocks, whole);
        r.span_eq(format!("X_{t} Y_{t} = D_{t}"), &emb.mul(&xt, &yt), &d);
        r.span_eq(format!("Y_{t} X_{t} = D'_{t}"), &emb.mul(&yt, &xt), &dp);
        r.span_eq(format!("D_{t} X = X_{t}"), &emb.mul(&d, &emb.x), &xt);
        r.span_eq(format!("X D'_{t} = X_{t}"), &emb.mul(&emb.x, &dp), &xt);
        r.span_eq(format!("D'_{t} Y = Y_{t}"), &emb.mul(&dp, &emb.y), &yt);
        r.span_eq(format!("Y D_{t} = Y_{t}"), &emb.mul(&emb.y, &d), &yt);
        let ti = g.inv(t);
        for (k, name) in BLOCKS.iter().enumerate() {
            let block = ctx.block(k);
            let src = ame.theta.domain(ti).meet(&block);
            let inv = src.rows().iter().all(|x| ame.theta.apply(t, x).is_some_and(|y| block.has(&y)));
            r.holds(format!("theta_{t} preserves {name}"), inv);
        }
        let sub = EmbeddedContext::assemble(ctx.linking().clone(), d, dp, xt, yt);
        r.absorb(&format!("M_{t}"), sub.morita_report());
    }
    r.holds("alpha global iff alpha' global", ame.alpha.is_global() == ame.alpha_prime.is_global());
    r
}

/// `(C ⋊_θ G, e)` and the strong-graded-equivalence between `A ⋊_α G` and `A' ⋊_α' G` it cuts out.
#[derive(Clone, Debug)]
pub struct SgeWitness {
    pub skew: SkewAlgebra,
    pub e: Multiplier,
    pub context: EmbeddedContext,
    pub report: VerificationReport,
}

pub fn action_equivalence_to_sge(ame: &ActionMoritaEquivalence) -> Result<SgeWitness> {
    let ctx = &ame.context;
    let g = ctx.group();
    let cbar = skew_group_algebra(&ame.theta)?;
    let c = &cbar.algebra;
    let (n, f) = (c.dim(), c.field());
    let mut block = vec![0; n];
    for t in g.elements() {
        for (k, row) in ame.theta.domain(t).rows().iter().enumerate() {
            let mut blocks = row.support().map(|i| ctx.block_of(i));
            let first = blocks.next().expect("nonzero row");
            if blocks.any(|b| b != first) {
                return Err(Error::Unsupported("theta domain rows straddle blocks".into()));
            }
            block[cbar.offsets[t] + k] = first;
        }
    }
    let keep = |bs: [usize; 2]| {
        let cols = (0..n).map(|q| if bs.contains(&block[q]) { Vector::unit(n, q, f) } else { Vector::zero(n, f) }).collect();
        LinearMap::from_columns(n, f, cols).expect("shape")
    };
    let e = Multiplier { l: keep([0, 1]), r: keep([0, 2]) };
    let context = corner_context(c, &e)?;
    let mut r = VerificationReport::new("moritaeqs", "");
    r.absorb("", context.sge_report());
    let one = g.identity();
    let c1 = c.component(one);
    for t in g.elements() {
        let ct = c.component(t);
        r.span_eq(format!("C_{t} e C_1 = C_{t}"), &c.algebra().span_mul(&ct, &e.l.image(&c1)), &ct);
    }
    let o = ctx.offsets();
    let mut corner_iso = |side: &PartialAction, offset: usize, target: &Subspace, name: &str| -> Result<Vec<Vector>> {
        let skew = skew_group_algebra(side)?;
        let ld = ctx.linking().dim();
        let mut images = Vec::with_capacity(skew.dim());
        for t in g.elements() {
            for x in side.domain(t).rows() {
                let lifted = x.shifted(offset, ld);
                images.push(cbar.delta(t, &lifted).ok_or(Error::NotEquivariant(t))?);
            }
        }
        let hom = skew.algebra.check_graded_homomorphism(c, &images).is_ok();
        r.holds(format!("{name} x| G -> corner is a graded homomorphism"), hom);
        let span = Subspace::span_of(n, f, images.iter().cloned());
        r.span_eq(format!("{name} x| G onto its corner"), &span, target);
        r.dim_eq(format!("{name} x| G injective"), span.rank(), skew.dim());
        for t in g.elements() {
            let mapped = Subspace::span_of(
                n,
                f,
                skew.algebra.d(t).rows().iter().map(|v| {
                    let mut acc = Vector::zero(n, f);
                    for (k, a) in v.entries() {
                        acc = acc.axpy(a, &images[*k]);
                    }
                    acc
                }),
            );
            let (l, rr) = if offset == 0 { (&e.l, &e.r) } else { (&e.complement().l.clone(), &e.complement().r.clone()) };
            let cornered = l.compose(rr).image(&c.d(t));
            r.span_eq(format!("corner of D_{t} = D_{t} of {name} x| G"), &cornered, &mapped);
        }
        Ok(images)
    };
    corner_iso(&ame.alpha, o[0], &context.a, "A")?;
    corner_iso(&ame.alpha_prime, o[3], &context.b, "A'")?;
    let fe = e.complement();
    for t in g.elements() {
        let dt = c.d(t);
        r.span_eq(format!("D_{t} e D_{t} = D_{t}"), &c.algebra().span_mul(&dt, &e.l.image(&dt)), &dt);
        r.span_eq(format!("D_{t} (1-e) D_{t} = D_{t}"), &c.algebra().span_mul(&dt, &fe.l.image(&dt)), &dt);
    }
    Ok(SgeWitness { skew: cbar, e, context, report: r })
}

/// The equivalence between `β|_A` and `β'|_{A'}` with `A' = YAX`, for `θ` global.
pub fn restrict_action_equivalence(
    ame: &ActionMoritaEquivalence,
    ideal: &Subspace,
) -> Result<(ActionMoritaEquivalence, VerificationReport)> {
    let gamma = ame.theta.to_global().ok_or_else(|| Error::PreconditionFailed("theta must be a global action".into()))?;
    let beta = ame.alpha.to_global().expect("restriction of a global action");
    let beta_p = ame.alpha_prime.to_global().expect("restriction of a global action");
    let ctx = &ame.context;
    let emb = ctx.embedded();
    let g = ctx.group();
    let o = ctx.offsets();
    let dims = ctx.dims();
    let ld = ctx.linking().dim();
    let res_a = restrict_global(&beta, ideal)?;
    let a = ideal.shifted(0, ld);
    let ap = emb.mul3(&emb.y, &a, &emb.x);
    let x1 = emb.mul(&a, &emb.x);
    let y1 = emb.mul(&emb.y, &a);
    let mut r = VerificationReport::new("reseqppa", "");
    for s in g.elements() {
        for t in g.elements() {
            let lhs = emb.mul(&gamma.image(s, &ap), &gamma.image(t, &ap));
            let inner = emb.mul(&gamma.image(s, &a), &gamma.image(t, &a));
            let rhs = emb.mul3(&emb.y, &inner, &emb.x);
            r.span_eq(format!("beta'_{s}(A') beta'_{t}(A') = Y beta_{s}(A) beta_{t}(A) X"), &lhs, &rhs);
        }
    }
    let axa = emb.mul(&x1, &ap);
    let aya = emb.mul(&ap, &y1);
    r.span_eq("A X A' = A X", &axa, &x1);
    r.span_eq("A' Y A = Y A", &aya, &y1);
    let cn = a.plus(&axa).plus(&aya).plus(&ap);
    let alg = ctx.linking().algebra();
    r.holds("C_N is an ideal", alg.is_two_sided_ideal(&cn));
    r.span_eq("C_N idempotent", &alg.span_mul(&cn, &cn), &cn);
    for s in g.elements() {
        for t in g.elements() {
            let (gs, gt) = (gamma.image(s, &cn), gamma.image(t, &cn));
            r.span_eq(format!("gamma_{s}(C_N) gamma_{t}(C_N) commute"), &alg.span_mul(&gs, &gt), &alg.span_mul(&gt, &gs));
        }
    }
    let res_n = restrict_global(&gamma, &cn)?;
    let n_ctx = EmbeddedContext::new(ctx.linking().clone(), a, ap.clone(), axa, aya)?.to_abstract()?;
    if n_ctx.linking().algebra() != res_n.alpha.algebra() {
        return Err(Error::Unsupported("restricted context algebra is not in block order".into()));
    }
    let out = ActionMoritaEquivalence::new(n_ctx, res_n.alpha.clone())?;
    r.holds("theta restricted to A is beta|_A", same_action(&out.alpha, &res_a.alpha));
    let res_ap = restrict_global(&beta_p, &ap.window(o[3], dims[3]))?;
    r.holds("theta restricted to A' is beta'|_A'", same_action(&out.alpha_prime, &res_ap.alpha));
    r.absorb("", validate_action_equivalence(&out));
    Ok((out, r))
}

/// `γ^A ~ γ^B` for a strong-graded-equivalence `M` between psg algebras.
pub fn sge_to_canonical_action_equivalence(m: &AbstractContext) -> Result<(ActionMoritaEquivalence, VerificationReport)> {
    let a = m.algebra_a();
    let b = m.algebra_b();
    if !a.is_partially_strongly_graded() || !b.is_partially_strongly_graded() {
        return Err(Error::PreconditionFailed("both algebras must be partially strongly graded".into()));
    }
    if let Some(c) = m.embedded().sge_report().first_failure() {
        return Err(Error::PreconditionFailed(format!("not a strong-graded-equivalence: {}", c.name)));
    }
    let sc = smash_context(m)?;
    let mut r = VerificationReport::new("strongmoritaE", "");
    r.absorb("", sc.report.clone());
    let ame = ActionMoritaEquivalence::from_global(sc.context.clone(), &sc.theta)?;
    let ctx = &ame.context;
    let ld = ctx.linking().dim();
    let o = ctx.offsets();
    let ia = partial_smash_ideal(&smash(&a));
    let ib = partial_smash_ideal(&smash(&b)).shifted(o[3], ld);
    let emb = ctx.embedded();
    r.span_eq("(Y#G) I^A (X#G) = I^B", &emb.mul3(&emb.y, &ia.shifted(0, ld), &emb.x), &ib);
    let (out, rep) = restrict_action_equivalence(&ame, &ia)?;
    r.absorb("", rep);
    let ga = canonical_partial_action(&a)?;
    let gb = canonical_partial_action(&b)?;
    r.holds("alpha = gamma^A", same_action(&out.alpha, &ga.restriction.alpha));
    r.holds("alpha' = gamma^B", same_action(&out.alpha_prime, &gb.restriction.alpha));
    Ok((out, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::group::FiniteGroup;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn diag(n: usize) -> Algebra {
        Algebra::from_products(n, q(), (0..n).map(|i| (i, i, Vector::unit(n, i, q())))).unwrap()
    }

    fn swap() -> GlobalAction {
        GlobalAction::permutation(FiniteGroup::cyclic(2), diag(2), &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn f3() -> PartialAction {
        restrict_global(&swap(), &Subspace::coordinate(2, q(), [0])).unwrap().alpha
    }

    #[test]
    fn trivial_self_equivalence_of_restricted_swap() {
        let ame = ActionMoritaEquivalence::trivial(&f3()).unwrap();
        let r = validate_action_equivalence(&ame);
        assert!(r.pass, "{:?}", r.first_failure());
        let w = action_equivalence_to_sge(&ame).unwrap();
        assert!(w.report.pass, "{:?}", w.report.first_failure());
        assert_eq!(w.context.a.rank(), 1);
    }

    #[test]
    fn block_swapping_theta_rejected() {
        // conjugation by the antidiagonal permutation swaps A with B and X with Y
        let k = GradedAlgebra::trivially_graded(diag(1), FiniteGroup::cyclic(2));
        let ctx = AbstractContext::trivial(&k);
        let flip = GlobalAction::permutation(FiniteGroup::cyclic(2), ctx.linking().algebra().clone(), &[vec![0, 1, 2, 3], vec![3, 2, 1, 0]])
            .unwrap();
        assert!(matches!(ActionMoritaEquivalence::from_global(ctx, &flip), Err(Error::NotEquivariant(1))));
    }

    #[test]
    fn restricting_the_swap_self_equivalence() {
        let ame = ActionMoritaEquivalence::trivial(&swap().as_partial()).unwrap();
        let (out, r) = restrict_action_equivalence(&ame, &Subspace::coordinate(2, q(), [0])).unwrap();
        assert!(r.pass, "{:?}", r.first_failure());
        assert_eq!(out.alpha.algebra().dim(), 1);
        assert_eq!(out.alpha_prime.algebra().dim(), 1);
        let w = action_equivalence_to_sge(&out).unwrap();
        assert!(w.report.pass, "{:?}", w.report.first_failure());
    }

    fn kc2() -> GradedAlgebra {
        let e = |i| Vector::unit(2, i, q());
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(0)), (0, 1, e(1)), (1, 0, e(1)), (1, 1, e(0))]).unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1]).unwrap()
    }

    #[test]
    fn smash_of_trivial_context() {
        let sc = smash_context(&AbstractContext::trivial(&kc2())).unwrap();
        assert!(sc.report.pass, "{:?}", sc.report.first_failure());
        assert_eq!(sc.context.dims(), [4, 4, 4, 4]);
        let (ame, r) = sge_to_canonical_action_equivalence(&AbstractContext::trivial(&kc2())).unwrap();
        assert!(r.pass, "{:?}", r.first_failure());
        assert!(ame.alpha.is_global());
    }
}
