use super::context::AbstractContext;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, SpanBuilder, Subspace, Vector};

/// `X ⊗_A Y = (X ⊗ Y) / span{xa ⊗ y - x ⊗ ay}`; the basis is the set of non-pivot pure tensors `x_i ⊗ y_j`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    dx: usize,
    dy: usize,
    relations: Subspace,
    /// Pure-tensor index `i·dy + j` of each quotient basis vector.
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl TensorProduct {
    /// `xa[i][k] = x_i a_k` in `X`, `ay[k][j] = a_k y_j` in `Y`.
    pub fn new(dx: usize, dy: usize, da: usize, field: Field, xa: &[Vec<Vector>], ay: &[Vec<Vector>]) -> Result<TensorProduct> {
        if xa.len() != dx || ay.len() != da {
            return Err(Error::DimensionError { expected: dx, found: xa.len() });
        }
        let n = dx * dy;
        let mut rel = SpanBuilder::new(n, field);
        for i in 0..dx {
            for k in 0..da {
                let left = &xa[i][k];
                for j in 0..dy {
                    let right = &ay[k][j];
                    if left.dim() != dx || right.dim() != dy {
                        return Err(Error::DimensionError { expected: dx, found: left.dim() });
                    }
                    let r = pure(left, &Vector::unit(dy, j, field)).sub(&pure(&Vector::unit(dx, i, field), right));
                    if !r.is_zero() {
                        rel.insert(&r);
                    }
                }
            }
        }
        let relations = rel.finish();
        let mut is_pivot = vec![false; n];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let basis: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut position = vec![None; n];
        for (q, &c) in basis.iter().enumerate() {
            position[c] = Some(q);
        }
        Ok(TensorProduct { dx, dy, relations, basis, position })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The pure tensor `x_i ⊗ y_j` represented by quotient basis vector `q`.
    pub fn source(&self, q: usize) -> (usize, usize) {
        (self.basis[q] / self.dy, self.basis[q] % self.dy)
    }

    /// The class of a vector of `X ⊗ Y`.
    pub fn project(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &p) in self.relations.rows().iter().zip(self.relations.pivots()) {
            let c = v.get(p);
            if !c.is_zero() {
                r = r.axpy(&c.neg(), row);
            }
        }
        let terms = r.entries().iter().map(|(c, x)| (self.position[*c].expect("reduced"), x.clone())).collect();
        Vector::from_terms(self.dim(), v.field(), terms)
    }

    pub fn class_of(&self, x: &Vector, y: &Vector) -> Vector {
        self.project(&pure(x, y))
    }

    pub fn factors(&self) -> (usize, usize) {
        (self.dx, self.dy)
    }
}

fn pure(x: &Vector, y: &Vector) -> Vector {
    let dy = y.dim();
    let mut terms = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, a) in x.entries() {
        for (j, b) in y.entries() {
            terms.push((i * dy + j, a.mul(b)));
        }
    }
    Vector::from_terms(x.dim() * dy, x.field(), terms)
}

/// Bilinear extension of `f` on basis pairs.
fn bilinear(x: &Vector, y: &Vector, dim: usize, f: impl Fn(usize, usize) -> Vector) -> Vector {
    let mut acc = Vector::zero(dim, x.field());
    for (i, a) in x.entries() {
        for (j, b) in y.entries() {
            acc = acc.axpy(&a.mul(b), &f(*i, *j));
        }
    }
    acc
}

/// Products of a context algebra read off in block coordinates.
struct Blocks<'a> {
    alg: &'a Algebra,
    offsets: [usize; 4],
    dims: [usize; 4],
}

impl Blocks<'_> {
    fn of(ctx: &AbstractContext) -> Blocks<'_> {
        Blocks { alg: ctx.linking().algebra(), offsets: ctx.offsets(), dims: ctx.dims() }
    }

    fn lift(&self, block: usize, v: &Vector) -> Vector {
        v.shifted(self.offsets[block], self.alg.dim())
    }

    /// `u·v` for `u` in `left`, `v` in `right`, returned in the coordinates of `target`.
    fn mul(&self, left: usize, u: &Vector, right: usize, v: &Vector, target: usize) -> Vector {
        self.alg.multiply(&self.lift(left, u), &self.lift(right, v)).window(self.offsets[target], self.dims[target])
    }

    fn unit(&self, block: usize, i: usize) -> Vector {
        Vector::unit(self.dims[block], i, self.alg.field())
    }
}

/// Whether `M`'s `B` block and `N`'s `A` block carry the same graded algebra.
pub fn middle_matches(m: &AbstractContext, n: &AbstractContext) -> bool {
    m.algebra_b() == n.algebra_a()
}

/// `MN = (A, B, X ⊗_{A'} X', Y' ⊗_{A'} Y)` for `M : A ~ A'` and `N : A' ~ B`.
pub fn compose_contexts(m: &AbstractContext, n: &AbstractContext) -> Result<AbstractContext> {
    if !middle_matches(m, n) {
        return Err(Error::MiddleAlgebraMismatch(format!(
            "B block of the first context (dim {}) differs from A block of the second (dim {})",
            m.dims()[3],
            n.dims()[0]
        )));
    }
    let f = m.linking().field();
    let (bm, bn) = (Blocks::of(m), Blocks::of(n));
    let [da, dx, dy, dmid] = m.dims();
    let [_, dxp, dyp, db] = n.dims();
    // X ⊗_{A'} X'
    let xa: Vec<Vec<Vector>> = (0..dx).map(|i| (0..dmid).map(|k| bm.mul(1, &bm.unit(1, i), 3, &bm.unit(3, k), 1)).collect()).collect();
    let ax: Vec<Vec<Vector>> = (0..dmid).map(|k| (0..dxp).map(|j| bn.mul(0, &bn.unit(0, k), 1, &bn.unit(1, j), 1)).collect()).collect();
    let xt = TensorProduct::new(dx, dxp, dmid, f, &xa, &ax)?;
    // Y' ⊗_{A'} Y
    let ya: Vec<Vec<Vector>> = (0..dyp).map(|i| (0..dmid).map(|k| bn.mul(2, &bn.unit(2, i), 0, &bn.unit(0, k), 2)).collect()).collect();
    let ay: Vec<Vec<Vector>> = (0..dmid).map(|k| (0..dy).map(|j| bm.mul(3, &bm.unit(3, k), 2, &bm.unit(2, j), 2)).collect()).collect();
    let yt = TensorProduct::new(dyp, dy, dmid, f, &ya, &ay)?;

    let dims = [da, xt.dim(), yt.dim(), db];
    let o = super::context::offsets_of(dims);
    let total: usize = dims.iter().sum();
    let mut products = Vec::new();
    let mut push = |l: usize, i: usize, r: usize, j: usize, target: usize, v: Vector| {
        if !v.is_zero() {
            products.push((o[l] + i, o[r] + j, v.shifted(o[target], total)));
        }
    };
    for (i, j, v) in bm.alg.products() {
        if i < da && j < da {
            push(0, i, 0, j, 0, v.window(0, da));
        }
    }
    let nb = bn.offsets[3];
    for (i, j, v) in bn.alg.products() {
        if i >= nb && j >= nb {
            push(3, i - nb, 3, j - nb, 3, v.window(nb, db));
        }
    }
    for qx in 0..xt.dim() {
        let (i, j) = xt.source(qx);
        let (x, xp) = (bm.unit(1, i), bn.unit(1, j));
        for k in 0..da {
            let ax = bm.mul(0, &bm.unit(0, k), 1, &x, 1);
            push(0, k, 1, qx, 1, xt.class_of(&ax, &xp));
        }
        for k in 0..db {
            let xb = bn.mul(1, &xp, 3, &bn.unit(3, k), 1);
            push(1, qx, 3, k, 1, xt.class_of(&x, &xb));
        }
        for qy in 0..yt.dim() {
            let (p, l) = yt.source(qy);
            let (yp, y) = (bn.unit(2, p), bm.unit(2, l));
            // (x ⊗ x')(y' ⊗ y) = τ_A(x·τ'(x', y'), y)
            let mid = bn.mul(1, &xp, 2, &yp, 0);
            let xm = bilinear(&x, &mid, dx, |a, b| bm.mul(1, &bm.unit(1, a), 3, &bm.unit(3, b), 1));
            push(1, qx, 2, qy, 0, bm.mul(1, &xm, 2, &y, 0));
            // (y' ⊗ y)(x ⊗ x') = τ'_B(y'·τ(y, x), x')
            let mid = bm.mul(2, &y, 1, &x, 3);
            let ym = bilinear(&yp, &mid, dyp, |a, b| bn.mul(2, &bn.unit(2, a), 0, &bn.unit(0, b), 2));
            push(2, qy, 1, qx, 3, bn.mul(2, &ym, 1, &xp, 3));
        }
    }
    for qy in 0..yt.dim() {
        let (p, l) = yt.source(qy);
        let (yp, y) = (bn.unit(2, p), bm.unit(2, l));
        for k in 0..db {
            let by = bn.mul(3, &bn.unit(3, k), 2, &yp, 2);
            push(3, k, 2, qy, 2, yt.class_of(&by, &y));
        }
        for k in 0..da {
            let ya = bm.mul(2, &y, 0, &bm.unit(0, k), 2);
            push(2, qy, 0, k, 2, yt.class_of(&yp, &ya));
        }
    }
    let linking = Algebra::from_products(total, f, products)?;
    let md = m.linking().degrees();
    let nd = n.linking().degrees();
    let mo = m.offsets();
    let no = n.offsets();
    let g = m.group();
    let mut degree = md[..da].to_vec();
    degree.extend((0..xt.dim()).map(|q| {
        let (i, j) = xt.source(q);
        g.mul(md[mo[1] + i], nd[no[1] + j])
    }));
    degree.extend((0..yt.dim()).map(|q| {
        let (p, l) = yt.source(q);
        g.mul(nd[no[2] + p], md[mo[2] + l])
    }));
    degree.extend_from_slice(&nd[no[3]..]);
    AbstractContext::new(linking, g.clone(), degree, dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedAlgebra;
    use crate::group::FiniteGroup;

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

    #[test]
    fn tensor_over_the_field() {
        let one = vec![vec![e(1, 0)]];
        let t = TensorProduct::new(1, 1, 1, q(), &one, &one).unwrap();
        assert_eq!(t.dim(), 1);
        let xa = vec![vec![e(2, 0)], vec![e(2, 1)]];
        let t2 = TensorProduct::new(2, 1, 1, q(), &xa, &one).unwrap();
        assert_eq!(t2.dim(), 2);
    }

    #[test]
    fn group_algebra_over_itself() {
        let b = kc2();
        let mul: Vec<Vec<Vector>> =
            (0..2).map(|i| (0..2).map(|k| b.multiply(&e(2, i), &e(2, k))).collect()).collect();
        let t = TensorProduct::new(2, 2, 2, q(), &mul, &mul).unwrap();
        assert_eq!(t.dim(), 2);
    }

    #[test]
    fn composing_with_the_trivial_context() {
        let ctx = AbstractContext::trivial(&kc2());
        let c = compose_contexts(&ctx, &ctx).unwrap();
        assert_eq!(c.dims(), [2, 2, 2, 2]);
        assert!(c.embedded().is_graded_equivalence());
        assert!(c.embedded().is_strong_graded_equivalence());
    }

    #[test]
    fn mismatched_middle() {
        let a = AbstractContext::trivial(&kc2());
        let k = GradedAlgebra::trivially_graded(Algebra::from_products(1, q(), vec![(0, 0, e(1, 0))]).unwrap(), FiniteGroup::cyclic(2));
        let b = AbstractContext::trivial(&k);
        assert!(matches!(compose_contexts(&a, &b), Err(Error::MiddleAlgebraMismatch(_))));
    }
}
