use super::context::{AbstractContext, EmbeddedContext};
use crate::algebra::{GradedAlgebra, Multiplier};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Subspace, Vector};
use crate::report::VerificationReport;

/// The context algebra of a graded equivalence with its corner multiplier `e`.
#[derive(Clone, Debug)]
pub struct LinkingAlgebra {
    pub context: AbstractContext,
    pub e: Multiplier,
    pub report: VerificationReport,
}

impl LinkingAlgebra {
    pub fn algebra(&self) -> &GradedAlgebra {
        self.context.linking()
    }
}

/// `L` keeps the `A` and `X` blocks, `R` keeps the `A` and `Y` blocks.
pub fn block_multiplier(ctx: &AbstractContext) -> Multiplier {
    let c = ctx.linking();
    let (n, f) = (c.dim(), c.field());
    let keep = |blocks: [usize; 2]| {
        let cols = (0..n)
            .map(|i| if blocks.contains(&ctx.block_of(i)) { Vector::unit(n, i, f) } else { Vector::zero(n, f) })
            .collect();
        LinearMap::from_columns(n, f, cols).expect("shape")
    };
    Multiplier { l: keep([0, 1]), r: keep([0, 2]) }
}

/// `CeC = span{c·L(c')}`.
fn sandwich(c: &GradedAlgebra, left: &Subspace, e: &Multiplier, right: &Subspace) -> Subspace {
    c.algebra().span_mul(left, &e.l.image(right))
}

/// `ece` for `c ∈ U`.
fn corner(e: &Multiplier, u: &Subspace) -> Subspace {
    e.l.compose(&e.r).image(u)
}

pub fn linking_algebra(ctx: &AbstractContext) -> Result<LinkingAlgebra> {
    let emb = ctx.embedded();
    if let Some(c) = emb.morita_report().first_failure() {
        return Err(Error::PreconditionFailed(format!("not a graded equivalence: {}", c.name)));
    }
    let c = ctx.linking();
    let g = c.group();
    let e = block_multiplier(ctx);
    let f = e.complement();
    let full = c.full();
    let mut r = VerificationReport::new("linking", "");
    r.holds("e is a multiplier", e.check(c).is_ok());
    r.holds("e^2 = e", e.is_idempotent());
    r.holds("e has degree 1", e.has_degree(c, g.identity()));
    r.span_eq("LeL = L", &sandwich(c, &full, &e, &full), &full);
    r.span_eq("L(1-e)L = L", &sandwich(c, &full, &f, &full), &full);
    r.span_eq("L idempotent", &c.algebra().span_mul(&full, &full), &full);
    for t in g.elements() {
        let ct = c.component(t);
        r.span_eq(format!("e L_{t} e = A_{t}"), &corner(&e, &ct), &emb.piece(&emb.a, t));
        r.span_eq(format!("(1-e) L_{t} (1-e) = B_{t}"), &corner(&f, &ct), &emb.piece(&emb.b, t));
    }
    let a = ctx.algebra_a();
    let b = ctx.algebra_b();
    if a.is_partially_strongly_graded() && b.is_partially_strongly_graded() && emb.is_strong_graded_equivalence() {
        r.holds("L partially strongly graded", c.is_partially_strongly_graded());
        for t in g.elements() {
            let dt = c.d(t);
            r.span_eq(format!("e D_{t} e = D^A_{t}"), &corner(&e, &dt), &emb.d_a(t));
            r.span_eq(format!("(1-e) D_{t} (1-e) = D^B_{t}"), &corner(&f, &dt), &emb.d_b(t));
            r.span_eq(format!("D_{t} e D_{t} = D_{t}"), &sandwich(c, &dt, &e, &dt), &dt);
            r.span_eq(format!("D_{t} (1-e) D_{t} = D_{t}"), &sandwich(c, &dt, &f, &dt), &dt);
        }
    }
    if let Some(c) = r.first_failure() {
        return Err(Error::PreconditionFailed(format!("linking algebra check failed: {}", c.name)));
    }
    Ok(LinkingAlgebra { context: ctx.clone(), e, report: r })
}

/// `(eCe, (1-e)C(1-e), eC(1-e), (1-e)Ce)` for an idempotent degree-1 multiplier with `CeC = C = C(1-e)C`.
pub fn corner_context(c: &GradedAlgebra, e: &Multiplier) -> Result<EmbeddedContext> {
    e.check(c)?;
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    if !e.has_degree(c, c.group().identity()) {
        return Err(Error::NotDegreeOne);
    }
    let f = e.complement();
    let full = c.full();
    if sandwich(c, &full, e, &full) != full {
        return Err(Error::FullnessFailed("CeC != C".into()));
    }
    if sandwich(c, &full, &f, &full) != full {
        return Err(Error::FullnessFailed("C(1-e)C != C".into()));
    }
    let a = e.l.compose(&e.r).range();
    let b = f.l.compose(&f.r).range();
    let x = e.l.compose(&f.r).range();
    let y = f.l.compose(&e.r).range();
    EmbeddedContext::new(c.clone(), a, b, x, y)
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

    fn e(d: usize, i: usize) -> Vector {
        Vector::unit(d, i, q())
    }

    fn kc2() -> GradedAlgebra {
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(2, 0)), (0, 1, e(2, 1)), (1, 0, e(2, 1)), (1, 1, e(2, 0))])
            .unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1]).unwrap()
    }

    /// `M_2(k)` with basis `e11, e12, e21, e22` and `deg e12 = deg e21 = g`.
    fn m2() -> GradedAlgebra {
        let mut p = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    p.push((2 * i + j, 2 * j + k, e(4, 2 * i + k)));
                }
            }
        }
        GradedAlgebra::new(Algebra::from_products(4, q(), p).unwrap(), FiniteGroup::cyclic(2), vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn linking_round_trip() {
        let ctx = AbstractContext::trivial(&kc2());
        let l = linking_algebra(&ctx).unwrap();
        assert!(l.report.pass);
        let back = corner_context(l.algebra(), &l.e).unwrap().to_abstract().unwrap();
        assert_eq!(back, ctx);
    }

    #[test]
    fn corner_of_matrix_algebra() {
        let b = m2();
        let em = Multiplier::of_element(&b, &e(4, 0));
        let ctx = corner_context(&b, &em).unwrap();
        assert_eq!(ctx.a, Subspace::coordinate(4, q(), [0]));
        assert_eq!(ctx.x, Subspace::coordinate(4, q(), [1]));
        assert_eq!(ctx.b, Subspace::coordinate(4, q(), [3]));
        assert!(ctx.is_graded_equivalence());
    }

    #[test]
    fn identity_multiplier_is_not_full() {
        let b = m2();
        let id = Multiplier::identity(4, q());
        assert!(matches!(corner_context(&b, &id), Err(Error::FullnessFailed(_))));
        let half = Multiplier::of_element(&b, &e(4, 0).scale(&q().from_i64(2)));
        assert!(matches!(corner_context(&b, &half), Err(Error::NotIdempotent)));
        let odd = Multiplier::of_element(&b, &e(4, 1));
        assert!(matches!(corner_context(&b, &odd), Err(Error::NotIdempotent) | Err(Error::NotDegreeOne)));
    }
}
