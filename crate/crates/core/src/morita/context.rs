use crate::algebra::{Algebra, GradedAlgebra};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Subspace, Vector};
use crate::report::VerificationReport;

/// Names of the four blocks of a context algebra, in coordinate order.
pub const BLOCKS: [&str; 4] = ["A", "X", "Y", "B"];

/// Matrix position of a block: `A = (0,0)`, `X = (0,1)`, `Y = (1,0)`, `B = (1,1)`.
fn position(block: usize) -> (usize, usize) {
    (block / 2, block % 2)
}

fn block_at(row: usize, col: usize) -> usize {
    2 * row + col
}

fn products_within(alg: &Algebra, u: &Subspace, v: &Subspace, sup: &Subspace) -> bool {
    u.rows().iter().all(|x| v.rows().iter().all(|y| sup.has(&alg.multiply(x, y))))
}

/// A Morita context `(A, B, X, Y)` of subspaces of a graded algebra `C`; the pairings are products in `C`.
#[derive(Clone, Debug)]
pub struct EmbeddedContext {
    pub ambient: GradedAlgebra,
    pub a: Subspace,
    pub b: Subspace,
    pub x: Subspace,
    pub y: Subspace,
}

impl EmbeddedContext {
    /// Checks that each piece is graded and that the eight block products land where they should.
    pub fn new(ambient: GradedAlgebra, a: Subspace, b: Subspace, x: Subspace, y: Subspace) -> Result<EmbeddedContext> {
        for (name, s) in [("A", &a), ("B", &b), ("X", &x), ("Y", &y)] {
            if s.dim() != ambient.dim() {
                return Err(Error::DimensionError { expected: ambient.dim(), found: s.dim() });
            }
            if !ambient.is_graded_subspace(s) {
                return Err(Error::NotGraded(name.into()));
            }
        }
        let alg = ambient.algebra();
        let rules = [
            ("AA", &a, &a, &a),
            ("BB", &b, &b, &b),
            ("AX", &a, &x, &x),
            ("XB", &x, &b, &x),
            ("BY", &b, &y, &y),
            ("YA", &y, &a, &y),
            ("XY", &x, &y, &a),
            ("YX", &y, &x, &b),
        ];
        for (name, u, v, sup) in rules {
            if !products_within(alg, u, v, sup) {
                return Err(Error::ClosureViolation(format!("{name} leaves its block")));
            }
        }
        Ok(EmbeddedContext { ambient, a, b, x, y })
    }

    pub(crate) fn assemble(ambient: GradedAlgebra, a: Subspace, b: Subspace, x: Subspace, y: Subspace) -> EmbeddedContext {
        EmbeddedContext { ambient, a, b, x, y }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.ambient.group()
    }

    pub fn pieces(&self) -> [&Subspace; 4] {
        [&self.a, &self.x, &self.y, &self.b]
    }

    pub fn mul(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.ambient.algebra().span_mul(u, v)
    }

    pub fn mul3(&self, u: &Subspace, v: &Subspace, w: &Subspace) -> Subspace {
        self.mul(&self.mul(u, v), w)
    }

    pub fn piece(&self, u: &Subspace, t: usize) -> Subspace {
        self.ambient.graded_piece(u, t)
    }

    /// `D_t^A = A_t A_{t⁻¹}`.
    pub fn d_a(&self, t: usize) -> Subspace {
        let g = self.group();
        self.mul(&self.piece(&self.a, t), &self.piece(&self.a, g.inv(t)))
    }

    pub fn d_b(&self, t: usize) -> Subspace {
        let g = self.group();
        self.mul(&self.piece(&self.b, t), &self.piece(&self.b, g.inv(t)))
    }

    /// `(B, A, Y, X)`.
    pub fn reversed(&self) -> EmbeddedContext {
        EmbeddedContext {
            ambient: self.ambient.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn algebra_a(&self) -> Result<GradedAlgebra> {
        self.ambient.graded_subalgebra(&self.a)
    }

    pub fn algebra_b(&self) -> Result<GradedAlgebra> {
        self.ambient.graded_subalgebra(&self.b)
    }

    /// `XY = A`, `YX = B`, `AX = X = XB`, `BY = Y = YA`.
    pub fn morita_report(&self) -> VerificationReport {
        let mut r = VerificationReport::new("morita-equivalence", "");
        morita_checks(&mut r, "", self, &self.a, &self.b, &self.x, &self.y);
        r
    }

    pub fn is_graded_equivalence(&self) -> bool {
        self.morita_report().pass
    }

    /// Idempotent `D_t`'s, `X_t` unital over `(D_t^A, D_{t⁻¹}^B)` and `Y_t` over `(D_t^B, D_{t⁻¹}^A)`.
    pub fn strong_report(&self) -> VerificationReport {
        let g = self.group();
        let mut r = VerificationReport::new("strong-context", "");
        for t in g.elements() {
            let ti = g.inv(t);
            let (da, db) = (self.d_a(t), self.d_b(t));
            r.span_eq(format!("D^A_{t} idempotent"), &self.mul(&da, &da), &da);
            r.span_eq(format!("D^B_{t} idempotent"), &self.mul(&db, &db), &db);
            let (xt, yt) = (self.piece(&self.x, t), self.piece(&self.y, t));
            r.span_eq(format!("D^A_{t} X_{t} = X_{t}"), &self.mul(&da, &xt), &xt);
            r.span_eq(format!("X_{t} D^B_{ti} = X_{t}"), &self.mul(&xt, &self.d_b(ti)), &xt);
            r.span_eq(format!("D^B_{t} Y_{t} = Y_{t}"), &self.mul(&db, &yt), &yt);
            r.span_eq(format!("Y_{t} D^A_{ti} = Y_{t}"), &self.mul(&yt, &self.d_a(ti)), &yt);
        }
        r
    }

    pub fn is_strong(&self) -> bool {
        self.strong_report().pass
    }

    /// Strong context, surjective pairings, `X_tY_{t⁻¹} = D_t^A` and `Y_tX_{t⁻¹} = D_t^B`.
    pub fn sge_report(&self) -> VerificationReport {
        let g = self.group();
        let mut r = VerificationReport::new("strong-graded-equivalence", "");
        r.absorb("", self.morita_report());
        r.absorb("", self.strong_report());
        for t in g.elements() {
            let ti = g.inv(t);
            let xy = self.mul(&self.piece(&self.x, t), &self.piece(&self.y, ti));
            r.span_eq(format!("X_{t} Y_{ti} = D^A_{t}"), &xy, &self.d_a(t));
            let yx = self.mul(&self.piece(&self.y, t), &self.piece(&self.x, ti));
            r.span_eq(format!("Y_{t} X_{ti} = D^B_{t}"), &yx, &self.d_b(t));
        }
        r
    }

    pub fn is_strong_graded_equivalence(&self) -> bool {
        self.sge_report().pass
    }

    /// The identities that hold in a strong context between psg algebras, with the degreewise equivalences.
    pub fn check_strong_props(&self) -> Result<VerificationReport> {
        let a = self.algebra_a()?;
        let b = self.algebra_b()?;
        if !a.is_partially_strongly_graded() || !b.is_partially_strongly_graded() {
            return Err(Error::PreconditionFailed("both algebras must be partially strongly graded".into()));
        }
        if let Some(c) = self.strong_report().first_failure() {
            return Err(Error::PreconditionFailed(format!("context is not strong: {}", c.name)));
        }
        let g = self.group();
        let one = g.identity();
        let sge = self.is_strong_graded_equivalence();
        let mut r = VerificationReport::new("strong-props", "");
        let (x1, y1) = (self.piece(&self.x, one), self.piece(&self.y, one));
        let (a1, b1) = (self.piece(&self.a, one), self.piece(&self.b, one));
        let unital = g.elements().all(|t| {
            let (at, bt) = (self.piece(&self.a, t), self.piece(&self.b, t));
            self.mul(&a1, &at) == at && self.mul(&at, &a1) == at && self.mul(&b1, &bt) == bt && self.mul(&bt, &b1) == bt
        });
        for t in g.elements() {
            let (at, bt) = (self.piece(&self.a, t), self.piece(&self.b, t));
            let (xt, yt) = (self.piece(&self.x, t), self.piece(&self.y, t));
            r.span_eq(format!("A_{t} X_1 = X_{t}"), &self.mul(&at, &x1), &xt);
            r.span_eq(format!("X_1 B_{t} = X_{t}"), &self.mul(&x1, &bt), &xt);
            r.span_eq(format!("B_{t} Y_1 = Y_{t}"), &self.mul(&bt, &y1), &yt);
            r.span_eq(format!("Y_1 A_{t} = Y_{t}"), &self.mul(&y1, &at), &yt);
            let (da, db) = (self.d_a(t), self.d_b(t));
            r.span_eq(format!("D^A_{t} X_1 = X_1 D^B_{t}"), &self.mul(&da, &x1), &self.mul(&x1, &db));
            r.span_eq(format!("D^B_{t} Y_1 = Y_1 D^A_{t}"), &self.mul(&db, &y1), &self.mul(&y1, &da));
            let xy11 = self.mul(&x1, &y1);
            let yx11 = self.mul(&y1, &x1);
            for s in g.elements() {
                let (as_, bs) = (self.piece(&self.a, s), self.piece(&self.b, s));
                let xy = self.mul(&xt, &self.piece(&self.y, s));
                r.span_eq(format!("X_{t} Y_{s} = A_{t} (X_1 Y_1) A_{s}"), &xy, &self.mul3(&at, &xy11, &as_));
                r.span_le(format!("X_{t} Y_{s} in A_{t} A_{s}"), &xy, &self.mul(&at, &as_));
                let yx = self.mul(&yt, &self.piece(&self.x, s));
                r.span_eq(format!("Y_{t} X_{s} = B_{t} (Y_1 X_1) B_{s}"), &yx, &self.mul3(&bt, &yx11, &bs));
                r.span_le(format!("Y_{t} X_{s} in B_{t} B_{s}"), &yx, &self.mul(&bt, &bs));
                if sge && unital {
                    r.span_eq(format!("X_{t} Y_{s} = A_{t} A_{s}"), &xy, &self.mul(&at, &as_));
                    r.span_eq(format!("Y_{t} X_{s} = B_{t} B_{s}"), &yx, &self.mul(&bt, &bs));
                }
            }
            if sge {
                let ti = g.inv(t);
                let yti = self.piece(&self.y, ti);
                morita_checks(&mut r, &format!("M_{t}: "), self, &da, &self.d_b(ti), &xt, &yti);
                let zx = self.mul(&da, &x1);
                let zy = self.mul(&db, &y1);
                morita_checks(&mut r, &format!("D^A_{t} ~ D^B_{t}: "), self, &da, &db, &zx, &zy);
            }
        }
        r.span_eq("X_1 B_1 = X_1", &self.mul(&x1, &b1), &x1);
        Ok(r)
    }

    /// The same context with its own block coordinates; bases are the echelon rows of each piece.
    pub fn to_abstract(&self) -> Result<AbstractContext> {
        let pieces = self.pieces();
        let dims = pieces.map(|p| p.rank());
        let offsets = offsets_of(dims);
        let n: usize = dims.iter().sum();
        let f = self.ambient.field();
        let alg = self.ambient.algebra();
        let mut products = Vec::new();
        let mut degree = Vec::with_capacity(n);
        for p in pieces {
            for row in p.rows() {
                degree.push(self.ambient.degree_of(row).ok_or_else(|| Error::NotGraded("context piece".into()))?);
            }
        }
        for (bi, p) in pieces.iter().enumerate() {
            let (i0, j0) = position(bi);
            for (bk, q) in pieces.iter().enumerate() {
                let (i1, j1) = position(bk);
                if j0 != i1 {
                    continue;
                }
                let target = block_at(i0, j1);
                let tp = pieces[target];
                for (i, x) in p.rows().iter().enumerate() {
                    for (k, y) in q.rows().iter().enumerate() {
                        let v = alg.multiply(x, y);
                        if v.is_zero() {
                            continue;
                        }
                        let c = tp.coordinates(&v).ok_or_else(|| {
                            Error::ClosureViolation(format!("{}{} leaves {}", BLOCKS[bi], BLOCKS[bk], BLOCKS[target]))
                        })?;
                        products.push((offsets[bi] + i, offsets[bk] + k, c.shifted(offsets[target], n)));
                    }
                }
            }
        }
        let linking = Algebra::from_products(n, f, products)?;
        Ok(AbstractContext {
            linking: GradedAlgebra::assemble(linking, self.group().clone(), degree),
            dims,
        })
    }
}

fn morita_checks(
    r: &mut VerificationReport,
    prefix: &str,
    c: &EmbeddedContext,
    a: &Subspace,
    b: &Subspace,
    x: &Subspace,
    y: &Subspace,
) {
    r.span_eq(format!("{prefix}XY = A"), &c.mul(x, y), a);
    r.span_eq(format!("{prefix}YX = B"), &c.mul(y, x), b);
    r.span_eq(format!("{prefix}AX = X"), &c.mul(a, x), x);
    r.span_eq(format!("{prefix}XB = X"), &c.mul(x, b), x);
    r.span_eq(format!("{prefix}BY = Y"), &c.mul(b, y), y);
    r.span_eq(format!("{prefix}YA = Y"), &c.mul(y, a), y);
}

pub(crate) fn offsets_of(dims: [usize; 4]) -> [usize; 4] {
    [0, dims[0], dims[0] + dims[1], dims[0] + dims[1] + dims[2]]
}

/// Products between the blocks of a context; vectors are in the coordinates of the target block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContextTables {
    pub ax: Vec<(usize, usize, Vector)>,
    pub xb: Vec<(usize, usize, Vector)>,
    pub by: Vec<(usize, usize, Vector)>,
    pub ya: Vec<(usize, usize, Vector)>,
    pub xy: Vec<(usize, usize, Vector)>,
    pub yx: Vec<(usize, usize, Vector)>,
}

/// A graded Morita context carried by its context algebra on block coordinates `A ⊕ X ⊕ Y ⊕ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractContext {
    linking: GradedAlgebra,
    dims: [usize; 4],
}

impl AbstractContext {
    /// Validates the block pattern, the grading and associativity of the block product.
    /// Associativity of the block product is exactly the module axioms plus the four balance identities.
    pub fn new(linking: Algebra, group: FiniteGroup, degree: Vec<usize>, dims: [usize; 4]) -> Result<AbstractContext> {
        let n: usize = dims.iter().sum();
        if linking.dim() != n || degree.len() != n {
            return Err(Error::DimensionError { expected: n, found: linking.dim().max(degree.len()) });
        }
        let offsets = offsets_of(dims);
        let block = |i: usize| (0..4).rev().find(|&k| i >= offsets[k] && dims[k] > 0).expect("index in range");
        for (i, j, v) in linking.products() {
            let (r0, c0) = position(block(i));
            let (r1, c1) = position(block(j));
            let target = block_at(r0, c1);
            let ok = c0 == r1 && v.entries().iter().all(|(k, _)| block(*k) == target);
            if !ok {
                return Err(Error::ClosureViolation(format!(
                    "{}{} product leaves its block",
                    BLOCKS[block(i)],
                    BLOCKS[block(j)]
                )));
            }
        }
        GradedAlgebra::check_grading(&linking, &group, &degree)?;
        if let Some((i, j, k)) = linking.associativity_failure() {
            return Err(Error::BalanceViolation(format!(
                "({}{}){} != {}({}{}) at basis triple ({i}, {j}, {k})",
                BLOCKS[block(i)],
                BLOCKS[block(j)],
                BLOCKS[block(k)],
                BLOCKS[block(i)],
                BLOCKS[block(j)],
                BLOCKS[block(k)]
            )));
        }
        Ok(AbstractContext { linking: GradedAlgebra::assemble(linking, group, degree), dims })
    }

    /// Assembles the context algebra from `A`, `B`, degrees of the bimodule bases and the block tables.
    pub fn from_parts(
        a: &GradedAlgebra,
        b: &GradedAlgebra,
        x_degrees: &[usize],
        y_degrees: &[usize],
        tables: &ContextTables,
    ) -> Result<AbstractContext> {
        if a.group() != b.group() {
            return Err(Error::PreconditionFailed("algebras are graded by different groups".into()));
        }
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
        }
        let dims = [a.dim(), x_degrees.len(), y_degrees.len(), b.dim()];
        let o = offsets_of(dims);
        let n: usize = dims.iter().sum();
        let mut products = Vec::new();
        let mut put = |left: usize, right: usize, target: usize, table: &mut dyn Iterator<Item = (usize, usize, Vector)>| -> Result<()> {
            for (i, j, v) in table {
                if i >= dims[left] || j >= dims[right] || v.dim() != dims[target] {
                    return Err(Error::DimensionError { expected: dims[target], found: v.dim() });
                }
                products.push((o[left] + i, o[right] + j, v.shifted(o[target], n)));
            }
            Ok(())
        };
        let own = |alg: &GradedAlgebra| alg.algebra().products().map(|(i, j, v)| (i, j, v.clone())).collect::<Vec<_>>();
        put(0, 0, 0, &mut own(a).into_iter())?;
        put(3, 3, 3, &mut own(b).into_iter())?;
        put(0, 1, 1, &mut tables.ax.iter().cloned())?;
        put(1, 3, 1, &mut tables.xb.iter().cloned())?;
        put(3, 2, 2, &mut tables.by.iter().cloned())?;
        put(2, 0, 2, &mut tables.ya.iter().cloned())?;
        put(1, 2, 0, &mut tables.xy.iter().cloned())?;
        put(2, 1, 3, &mut tables.yx.iter().cloned())?;
        let linking = Algebra::from_products(n, a.field(), products)?;
        let degree = a.degrees().iter().chain(x_degrees).chain(y_degrees).chain(b.degrees()).copied().collect();
        AbstractContext::new(linking, a.group().clone(), degree, dims)
    }

    /// `(A, A, A, A)` with every pairing the product of `A`; its context algebra is `M_2(A)`.
    pub fn trivial(a: &GradedAlgebra) -> AbstractContext {
        let d = a.dim();
        let n = 4 * d;
        let mut products = Vec::new();
        for (i, j, v) in a.algebra().products() {
            for row in 0..2 {
                for mid in 0..2 {
                    for col in 0..2 {
                        let (l, r, t) = (block_at(row, mid), block_at(mid, col), block_at(row, col));
                        products.push((l * d + i, r * d + j, v.shifted(t * d, n)));
                    }
                }
            }
        }
        let linking = Algebra::from_products(n, a.field(), products).expect("well-formed products");
        let degree = (0..4).flat_map(|_| a.degrees().iter().copied()).collect();
        AbstractContext { linking: GradedAlgebra::assemble(linking, a.group().clone(), degree), dims: [d; 4] }
    }

    pub fn linking(&self) -> &GradedAlgebra {
        &self.linking
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    pub fn offsets(&self) -> [usize; 4] {
        offsets_of(self.dims)
    }

    pub fn group(&self) -> &FiniteGroup {
        self.linking.group()
    }

    /// Coordinate subspace of block `k` in `0..4` (`A, X, Y, B`).
    pub fn block(&self, k: usize) -> Subspace {
        let o = self.offsets();
        Subspace::coordinate(self.linking.dim(), self.linking.field(), o[k]..o[k] + self.dims[k])
    }

    /// Index of the block containing coordinate `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let o = self.offsets();
        (0..4).rev().find(|&k| i >= o[k] && self.dims[k] > 0).expect("index in range")
    }

    pub fn embedded(&self) -> EmbeddedContext {
        EmbeddedContext::assemble(self.linking.clone(), self.block(0), self.block(3), self.block(1), self.block(2))
    }

    fn block_algebra(&self, k: usize) -> GradedAlgebra {
        let o = self.offsets()[k];
        let d = self.dims[k];
        let products = self
            .linking
            .algebra()
            .products()
            .filter(|(i, j, _)| (o..o + d).contains(i) && (o..o + d).contains(j))
            .map(|(i, j, v)| (i - o, j - o, v.window(o, d)))
            .collect::<Vec<_>>();
        let alg = Algebra::from_products(d, self.linking.field(), products).expect("block table");
        GradedAlgebra::assemble(alg, self.group().clone(), self.linking.degrees()[o..o + d].to_vec())
    }

    pub fn algebra_a(&self) -> GradedAlgebra {
        self.block_algebra(0)
    }

    pub fn algebra_b(&self) -> GradedAlgebra {
        self.block_algebra(3)
    }

    /// `(B, A, Y, X)`, with the context algebra re-indexed blockwise.
    pub fn reversed(&self) -> AbstractContext {
        let o = self.offsets();
        let [da, dx, dy, db] = self.dims;
        let new_dims = [db, dy, dx, da];
        let no = offsets_of(new_dims);
        let n = self.linking.dim();
        // old block k goes to new block 3 - k
        let map = |i: usize| {
            let k = self.block_of(i);
            no[3 - k] + (i - o[k])
        };
        let products = self.linking.algebra().products().map(|(i, j, v)| (map(i), map(j), v.reindexed(n, map))).collect::<Vec<_>>();
        let linking = Algebra::from_products(n, self.linking.field(), products).expect("permuted table");
        let mut degree = vec![0; n];
        for i in 0..n {
            degree[map(i)] = self.linking.degree(i);
        }
        AbstractContext { linking: GradedAlgebra::assemble(linking, self.group().clone(), degree), dims: new_dims }
    }

    /// The block tables in block coordinates.
    pub fn tables(&self) -> ContextTables {
        let o = self.offsets();
        let mut t = ContextTables::default();
        for (i, j, v) in self.linking.algebra().products() {
            let (bi, bj) = (self.block_of(i), self.block_of(j));
            let target = block_at(position(bi).0, position(bj).1);
            let entry = (i - o[bi], j - o[bj], v.window(o[target], self.dims[target]));
            match (bi, bj) {
                (0, 1) => t.ax.push(entry),
                (1, 3) => t.xb.push(entry),
                (3, 2) => t.by.push(entry),
                (2, 0) => t.ya.push(entry),
                (1, 2) => t.xy.push(entry),
                (2, 1) => t.yx.push(entry),
                _ => {}
            }
        }
        t
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        let o = self.offsets();
        self.linking.degrees()[o[1]..o[2]].to_vec()
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        let o = self.offsets();
        self.linking.degrees()[o[2]..o[3]].to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn trivial_context_on_group_algebra() {
        let c = AbstractContext::trivial(&kc2());
        assert_eq!(c.linking().dim(), 8);
        let emb = c.embedded();
        assert!(emb.is_graded_equivalence());
        assert!(emb.is_strong_graded_equivalence());
        assert_eq!(c.algebra_a(), kc2());
        let back = emb.to_abstract().unwrap();
        assert_eq!(back, c);
        assert_eq!(c.reversed().reversed(), c);
        let rebuilt =
            AbstractContext::from_parts(&kc2(), &kc2(), &c.x_degrees(), &c.y_degrees(), &c.tables()).unwrap();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn shifted_bimodule_grading_rejected() {
        let c = AbstractContext::trivial(&kc2());
        let shifted: Vec<usize> = c.x_degrees().iter().map(|d| 1 - d).collect();
        let r = AbstractContext::from_parts(&kc2(), &kc2(), &shifted, &c.y_degrees(), &c.tables());
        assert!(matches!(r, Err(Error::GradingViolation(..))));
    }

    #[test]
    fn unbalanced_pairing_rejected() {
        let c = AbstractContext::trivial(&kc2());
        let mut t = c.tables();
        for entry in t.xy.iter_mut() {
            entry.2 = entry.2.scale(&q().from_i64(2));
        }
        let r = AbstractContext::from_parts(&kc2(), &kc2(), &c.x_degrees(), &c.y_degrees(), &t);
        assert!(matches!(r, Err(Error::BalanceViolation(_))));
    }

    #[test]
    fn zero_bimodules_are_not_an_equivalence() {
        let a = kc2();
        let c = AbstractContext::from_parts(&a, &a, &[], &[], &ContextTables::default()).unwrap();
        assert!(!c.embedded().is_graded_equivalence());
    }

    #[test]
    fn strong_props_on_trivial_context() {
        let r = AbstractContext::trivial(&kc2()).embedded().check_strong_props().unwrap();
        assert!(r.pass, "{:?}", r.first_failure());
    }
}
