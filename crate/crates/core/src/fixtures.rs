//! Named fixtures and seeded generators of graded algebras, product partial actions and contexts.
//!
//! Generators only use constructions that preserve validity: group algebras, graded matrix
//! algebras and their corners, direct sums, restrictions of permutation actions, skew group
//! algebras and degree-preserving basis changes. Nothing is sampled and then filtered for
//! associativity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{restrict_global, skew_group_algebra, GlobalAction, Restriction};
use crate::algebra::{Algebra, GradedAlgebra, Multiplier};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Field, LinearMap, Subspace, Vector};
use crate::morita::{corner_context, AbstractContext};
use crate::smash::fmat;

#[derive(Clone, Debug)]
pub enum Payload {
    Algebra(GradedAlgebra),
    /// A global action with an ideal and the partial action restricted to it.
    Restriction(Restriction),
    Context(AbstractContext),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub description: String,
    pub payload: Payload,
}

impl Fixture {
    pub fn algebra(&self) -> Option<&GradedAlgebra> {
        match &self.payload {
            Payload::Algebra(a) => Some(a),
            _ => None,
        }
    }

    pub fn restriction(&self) -> Option<&Restriction> {
        match &self.payload {
            Payload::Restriction(r) => Some(r),
            _ => None,
        }
    }

    pub fn context(&self) -> Option<&AbstractContext> {
        match &self.payload {
            Payload::Context(c) => Some(c),
            _ => None,
        }
    }
}

const REGISTRY: &[(&str, &str)] = &[
    ("F1", "group algebra kC2 graded by C2, strongly graded"),
    ("F2", "k[x]/(x^2) with deg x = g over C2, idempotent but not psg"),
    ("F3", "C2 swap on k x k restricted to k x 0, D_g = 0"),
    ("F4", "M_2(k) over C2 with e11, e22 in degree 1 and e12, e21 in degree g"),
    ("F5", "group algebra kC3 graded by C3"),
    ("F6", "C3 cycle on k^3 restricted to span{e1, e2}, domains of dims (2, 1, 1)"),
    ("K3PAD", "C2 swapping e1, e2 in k^3 restricted to span{e1}, not a minimal globalization"),
    ("SF3", "skew group algebra of F3"),
    ("SF6", "skew group algebra of F6"),
    ("F1M2", "row context F1 ~ M_2(F1) with row shifts (1, g)"),
];

/// `(id, description)` for every registered fixture.
pub fn list() -> Vec<(&'static str, &'static str)> {
    REGISTRY.to_vec()
}

pub fn fixture(id: &str, field: Field) -> Result<Fixture> {
    let description = REGISTRY
        .iter()
        .find(|(k, _)| *k == id)
        .map(|(_, d)| d.to_string())
        .ok_or_else(|| Error::UnknownFixture(id.into()))?;
    let c2 = FiniteGroup::cyclic(2);
    let payload = match id {
        "F1" => Payload::Algebra(group_algebra(&c2, field)),
        "F2" => Payload::Algebra(truncated_polynomial(&c2, 2, 1, field)),
        "F3" => Payload::Restriction(f3(field)),
        "F4" => Payload::Algebra(matrix_algebra(&base_field(&c2, field), &[0, 1])),
        "F5" => Payload::Algebra(group_algebra(&FiniteGroup::cyclic(3), field)),
        "F6" => Payload::Restriction(f6(field)),
        "K3PAD" => {
            let swap = GlobalAction::permutation(c2, diagonal(3, field), &[vec![0, 1, 2], vec![1, 0, 2]])?;
            Payload::Restriction(restrict_global(&swap, &Subspace::coordinate(3, field, [0]))?)
        }
        "SF3" => Payload::Algebra(skew_group_algebra(&f3(field).alpha)?.algebra),
        "SF6" => Payload::Algebra(skew_group_algebra(&f6(field).alpha)?.algebra),
        "F1M2" => Payload::Context(row_context(&group_algebra(&c2, field), &[0, 0, 1])?),
        _ => unreachable!("registry and match agree"),
    };
    Ok(Fixture { id: id.into(), description, payload })
}

fn f3(field: Field) -> Restriction {
    let swap = GlobalAction::permutation(FiniteGroup::cyclic(2), diagonal(2, field), &[vec![0, 1], vec![1, 0]])
        .expect("swap is an action");
    restrict_global(&swap, &Subspace::coordinate(2, field, [0])).expect("coordinate ideal")
}

fn f6(field: Field) -> Restriction {
    let cycle = GlobalAction::permutation(
        FiniteGroup::cyclic(3),
        diagonal(3, field),
        &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    )
    .expect("cycle is an action");
    restrict_global(&cycle, &Subspace::coordinate(3, field, [0, 1])).expect("coordinate ideal")
}

/// `k^n` with orthogonal idempotents `e_i`.
pub fn diagonal(n: usize, field: Field) -> Algebra {
    Algebra::from_products(n, field, (0..n).map(|i| (i, i, Vector::unit(n, i, field)))).expect("shape")
}

/// `k` in degree 1.
pub fn base_field(group: &FiniteGroup, field: Field) -> GradedAlgebra {
    GradedAlgebra::trivially_graded(diagonal(1, field), group.clone())
}

/// `kG` with `deg u_t = t`.
pub fn group_algebra(group: &FiniteGroup, field: Field) -> GradedAlgebra {
    let n = group.order();
    let mut p = Vec::with_capacity(n * n);
    for s in group.elements() {
        for t in group.elements() {
            p.push((s, t, Vector::unit(n, group.mul(s, t), field)));
        }
    }
    let a = Algebra::from_products(n, field, p).expect("shape");
    GradedAlgebra::new(a, group.clone(), group.elements().collect()).expect("group grading")
}

/// `k[x]/(x^m)` with `deg x = group element g`.
pub fn truncated_polynomial(group: &FiniteGroup, m: usize, g: usize, field: Field) -> GradedAlgebra {
    let mut p = Vec::new();
    for i in 0..m {
        for j in 0..m - i {
            p.push((i, j, Vector::unit(m, i + j, field)));
        }
    }
    let a = Algebra::from_products(m, field, p).expect("shape");
    let mut deg = vec![group.identity(); m];
    for i in 1..m {
        deg[i] = group.mul(deg[i - 1], g);
    }
    GradedAlgebra::new(a, group.clone(), deg).expect("monomial grading")
}

/// `M_m(B)` with `deg(b e_ij) = g_i deg(b) g_j⁻¹`; basis index `(i*m + j)*dim B + k`.
pub fn matrix_algebra(b: &GradedAlgebra, shifts: &[usize]) -> GradedAlgebra {
    let g = b.group();
    let (m, d) = (shifts.len(), b.dim());
    let n = m * m * d;
    let f = b.field();
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * d + k;
    let mut p = Vec::new();
    for (k, l, v) in b.algebra().products() {
        for i in 0..m {
            for j in 0..m {
                for h in 0..m {
                    p.push((idx(i, j, k), idx(j, h, l), v.reindexed(n, |c| idx(i, h, c))));
                }
            }
        }
    }
    let a = Algebra::from_products(n, f, p).expect("shape");
    let mut deg = vec![0; n];
    for i in 0..m {
        for j in 0..m {
            for k in 0..d {
                deg[idx(i, j, k)] = g.mul(g.mul(shifts[i], b.degree(k)), g.inv(shifts[j]));
            }
        }
    }
    GradedAlgebra::new(a, g.clone(), deg).expect("shifted matrix grading")
}

/// The corner context of `M_{n+1}(B)` at `1_B e_11`: `B ~ M_n(B)` with the last `n` shifts.
pub fn row_context(b: &GradedAlgebra, shifts: &[usize]) -> Result<AbstractContext> {
    let one = b.unit().ok_or(Error::NoIdentity)?;
    let c = matrix_algebra(b, shifts);
    let mut e = Vector::zero(c.dim(), c.field());
    for (k, x) in one.entries() {
        e = e.add(&Vector::unit(c.dim(), *k, c.field()).scale(x));
    }
    corner_context(&c, &Multiplier::of_element(&c, &e))?.to_abstract()
}

/// Size limits for the generators. `|G| ≤ 4` and `max_dim ≤ 12` are the supported range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_dim: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds { max_dim: 12 }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field, nonzero: bool) -> crate::linalg::Scalar {
    loop {
        let x = field.from_i64(rng.gen_range(-3..=3));
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

/// Conjugates by a random invertible map that is block triangular inside each homogeneous component.
fn twist(rng: &mut ChaCha8Rng, b: &GradedAlgebra) -> GradedAlgebra {
    let (n, f) = (b.dim(), b.field());
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = Vector::unit(n, j, f).scale(&random_scalar(rng, f, true));
        for i in b.component_indices(b.degree(j)) {
            if i < j && rng.gen_bool(0.5) {
                v = v.add(&Vector::unit(n, i, f).scale(&random_scalar(rng, f, false)));
            }
        }
        cols.push(v);
    }
    let p = LinearMap::from_columns(n, f, cols).expect("shape");
    let inv = p.inverse().expect("triangular with nonzero diagonal");
    let inverse: Vec<Vector> = inv.columns().to_vec();
    b.change_basis(p.columns(), &inverse).expect("degree-preserving change of basis")
}

fn random_shifts(rng: &mut ChaCha8Rng, g: &FiniteGroup, m: usize) -> Vec<usize> {
    (0..m).map(|_| rng.gen_range(0..g.order())).collect()
}

/// A small unital graded algebra of dimension at most `max_dim`.
fn unital(rng: &mut ChaCha8Rng, g: &FiniteGroup, max_dim: usize, field: Field) -> GradedAlgebra {
    let n = g.order();
    loop {
        let b = match rng.gen_range(0..5) {
            0 if n <= max_dim => group_algebra(g, field),
            1 => base_field(g, field),
            2 if max_dim >= 2 => {
                let m = rng.gen_range(2..=max_dim.min(3));
                truncated_polynomial(g, m, rng.gen_range(0..n), field)
            }
            3 if max_dim >= 4 => {
                let base = if n <= max_dim / 4 && rng.gen_bool(0.5) { group_algebra(g, field) } else { base_field(g, field) };
                let shifts = random_shifts(rng, g, 2);
                matrix_algebra(&base, &shifts)
            }
            4 if max_dim >= 2 => {
                let left = unital(rng, g, max_dim / 2, field);
                let right = unital(rng, g, max_dim - left.dim(), field);
                left.direct_sum(&right).expect("same group")
            }
            _ => continue,
        };
        return twist(rng, &b);
    }
}

/// A corner `eFMat_G(B)e` with `e = Σ_{r∈S} 1_B e_{r,r}` for a small unital `B`.
fn fmat_corner(rng: &mut ChaCha8Rng, g: &FiniteGroup, max_dim: usize, field: Field) -> Option<GradedAlgebra> {
    let base = unital(rng, g, (max_dim / 4).max(1), field);
    let mut elems: Vec<usize> = g.elements().collect();
    elems.shuffle(rng);
    let mut m = rng.gen_range(1..=g.order());
    while m > 1 && m * m * base.dim() > max_dim {
        m -= 1;
    }
    if m * m * base.dim() > max_dim {
        return None;
    }
    let fm = fmat(&base);
    let pick = &elems[..m];
    let mut coords = Vec::new();
    for &r in pick {
        for &s in pick {
            for i in 0..base.dim() {
                coords.push(fm.index(i, r, s));
            }
        }
    }
    coords.sort_unstable();
    let sub = Subspace::coordinate(fm.algebra.dim(), field, coords);
    Some(fm.algebra.graded_subalgebra(&sub).expect("corner is a graded subalgebra"))
}

fn zero_product(rng: &mut ChaCha8Rng, g: &FiniteGroup, max_dim: usize, field: Field) -> GradedAlgebra {
    let n = rng.gen_range(1..=max_dim.min(2));
    let deg = (0..n).map(|_| rng.gen_range(0..g.order())).collect();
    GradedAlgebra::new(Algebra::zero_product(n, field), g.clone(), deg).expect("zero product is graded")
}

fn graded_with(rng: &mut ChaCha8Rng, g: &FiniteGroup, max_dim: usize, field: Field, depth: usize) -> GradedAlgebra {
    loop {
        let b = match rng.gen_range(0..7) {
            0 | 1 => unital(rng, g, max_dim, field),
            2 => match fmat_corner(rng, g, max_dim, field) {
                Some(b) => twist(rng, &b),
                None => continue,
            },
            3 => zero_product(rng, g, max_dim, field),
            4 => {
                let pa = random_restriction(rng, g, Bounds { max_dim: max_dim.min(6) }, field).0;
                let s = skew_group_algebra(&pa.alpha).expect("product partial action").algebra;
                if s.dim() > max_dim {
                    continue;
                }
                s
            }
            5 | 6 if depth < 2 && max_dim >= 2 => {
                let left = graded_with(rng, g, max_dim / 2, field, depth + 1);
                let right = graded_with(rng, g, max_dim - left.dim(), field, depth + 1);
                left.direct_sum(&right).expect("same group")
            }
            _ => continue,
        };
        return b;
    }
}

/// A graded algebra over `group` determined by `seed`.
pub fn random_graded_algebra(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> GradedAlgebra {
    let mut rng = rng_for(seed, 1);
    graded_with(&mut rng, group, bounds.max_dim.max(1), field, 0)
}

/// The first partially strongly graded output of [`random_graded_algebra`] on the seeds
/// `seed·64, seed·64 + 1, …`, falling back to a skew group algebra of a generated product
/// partial action, which is always partially strongly graded.
pub fn random_psg_algebra(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> GradedAlgebra {
    for k in 0..64 {
        let b = random_graded_algebra(seed * 64 + k, group, bounds, field);
        if b.is_partially_strongly_graded() {
            return b;
        }
    }
    let mut rng = rng_for(seed, 6);
    loop {
        let r = random_restriction(&mut rng, group, Bounds { max_dim: bounds.max_dim.min(3) }, field).0;
        let s = skew_group_algebra(&r.alpha).expect("product partial action").algebra;
        if s.dim() <= bounds.max_dim {
            return s;
        }
    }
}

/// A unital graded algebra over `group` determined by `seed`.
pub fn random_unital_algebra(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> GradedAlgebra {
    let mut rng = rng_for(seed, 2);
    unital(&mut rng, group, bounds.max_dim.max(1), field)
}

/// A disjoint union of orbits `G/⟨h⟩` for random `h`, as `perm[t][point]`.
fn random_gset(rng: &mut ChaCha8Rng, g: &FiniteGroup, max_points: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut total = 0;
    loop {
        let h = rng.gen_range(0..g.order());
        let mut sub = vec![g.identity()];
        let mut x = h;
        while x != g.identity() {
            sub.push(x);
            x = g.mul(x, h);
        }
        if total == 0 && g.order() / sub.len() > max_points {
            sub = g.elements().collect();
        }
        let coset = |a: usize| {
            let mut c: Vec<usize> = sub.iter().map(|&s| g.mul(a, s)).collect();
            c.sort_unstable();
            c
        };
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for a in g.elements() {
            let c = coset(a);
            if !cosets.contains(&c) {
                cosets.push(c);
            }
        }
        if total + cosets.len() > max_points {
            return perm;
        }
        for t in g.elements() {
            for c in &cosets {
                let img = coset(g.mul(t, c[0]));
                perm[t].push(total + cosets.iter().position(|d| *d == img).expect("coset"));
            }
        }
        total += cosets.len();
        if rng.gen_bool(0.4) {
            return perm;
        }
    }
}

/// Restricts a permutation action on `k^n` or on `k^n ⊗ M_2(k)` to a random sum of blocks.
/// Returns the restriction and how many draws violated the hypotheses and were re-rolled.
fn random_restriction(rng: &mut ChaCha8Rng, g: &FiniteGroup, bounds: Bounds, field: Field) -> (Restriction, usize) {
    let mut rerolls = 0;
    loop {
        let noncommutative = bounds.max_dim >= 4 && rng.gen_bool(0.25);
        let block = if noncommutative { 4 } else { 1 };
        let points = random_gset(rng, g, (bounds.max_dim / block).max(1));
        let n = points[0].len();
        let (algebra, perm) = if noncommutative {
            let m2 = matrix_algebra(&base_field(&FiniteGroup::trivial(), field), &[0, 0]);
            let mut alg = m2.algebra().clone();
            for _ in 1..n {
                alg = alg.direct_sum(m2.algebra());
            }
            let perm: Vec<Vec<usize>> =
                points.iter().map(|p| (0..4 * n).map(|i| 4 * p[i / 4] + i % 4).collect()).collect();
            (alg, perm)
        } else {
            (diagonal(n, field), points.clone())
        };
        let beta = GlobalAction::permutation(g.clone(), algebra, &perm).expect("permutation of blocks");
        let mut chosen: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if chosen.is_empty() {
            chosen.push(rng.gen_range(0..n));
        }
        let coords: Vec<usize> = chosen.iter().flat_map(|&p| (0..block).map(move |i| block * p + i)).collect();
        let ideal = Subspace::coordinate(n * block, field, coords);
        match restrict_global(&beta, &ideal) {
            Ok(r) => return (r, rerolls),
            Err(_) => rerolls += 1,
        }
    }
}

/// A product partial action over `group` determined by `seed`, with its globalization.
pub fn random_product_partial_action(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> (Restriction, usize) {
    let mut rng = rng_for(seed, 3);
    random_restriction(&mut rng, group, bounds, field)
}

/// A graded equivalence: either `M_2(B)` seen as a context or a row context `B ~ M_n(B)`.
pub fn random_context(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> AbstractContext {
    let mut rng = rng_for(seed, 4);
    let b = unital(&mut rng, group, bounds.max_dim.clamp(1, 3), field);
    if rng.gen_bool(0.3) {
        return AbstractContext::trivial(&b);
    }
    let m = rng.gen_range(2..=3);
    let mut shifts = random_shifts(&mut rng, group, m);
    shifts[0] = group.identity();
    row_context(&b, &shifts).expect("B is unital")
}

/// Two contexts `M : A ~ B` and `N : B ~ C` whose middle algebras agree exactly.
pub fn random_composable_pair(seed: u64, group: &FiniteGroup, bounds: Bounds, field: Field) -> (AbstractContext, AbstractContext) {
    let mut rng = rng_for(seed, 5);
    let b = unital(&mut rng, group, bounds.max_dim.clamp(1, 3), field);
    let shifts = [group.identity(), rng.gen_range(0..group.order())];
    let m = row_context(&b, &shifts).expect("B is unital");
    let n = match rng.gen_range(0..3) {
        0 => m.reversed(),
        1 => AbstractContext::trivial(&m.algebra_b()),
        _ => row_context(&m.algebra_b(), &[group.identity(), rng.gen_range(0..group.order())]).expect("unital"),
    };
    (m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn registry_examples() {
        for (id, _) in list() {
            fixture(id, Q).unwrap();
        }
        assert_eq!(fixture("F1", Q).unwrap().algebra().unwrap().dim(), 2);
        let f6 = fixture("F6", Q).unwrap();
        let dims: Vec<usize> = f6.restriction().unwrap().alpha.domains().iter().map(|d| d.rank()).collect();
        assert_eq!(dims, vec![2, 1, 1]);
        assert!(!fixture("F2", Q).unwrap().algebra().unwrap().is_partially_strongly_graded());
        assert!(fixture("F4", Q).unwrap().algebra().unwrap().is_strongly_graded());
        assert!(matches!(fixture("F9", Q), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn generated_algebras_are_valid_and_deterministic() {
        let c2 = FiniteGroup::cyclic(2);
        let (mut strong, mut non_psg) = (0, 0);
        for seed in 0..100 {
            let b = random_graded_algebra(seed, &c2, Bounds::default(), Q);
            assert!(b.dim() <= 12);
            b.algebra().check_associative().unwrap();
            GradedAlgebra::check_grading(b.algebra(), b.group(), b.degrees()).unwrap();
            strong += usize::from(b.is_strongly_graded());
            non_psg += usize::from(!b.is_partially_strongly_graded());
            assert_eq!(b.algebra(), random_graded_algebra(seed, &c2, Bounds::default(), Q).algebra());
        }
        assert!(strong >= 1 && non_psg >= 1, "strong {strong}, non-psg {non_psg}");
        let b = random_graded_algebra(0, &FiniteGroup::trivial(), Bounds::default(), Q);
        b.algebra().check_associative().unwrap();
    }

    #[test]
    fn generated_actions_are_product_actions() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::klein4()] {
            for seed in 0..10 {
                let (r, _) = random_product_partial_action(seed, &g, Bounds::default(), Q);
                assert!(r.alpha.passed_product());
                assert!(r.beta.algebra().dim() <= 12);
            }
        }
    }

    #[test]
    fn generated_contexts_are_equivalences() {
        let c2 = FiniteGroup::cyclic(2);
        for seed in 0..5 {
            let m = random_context(seed, &c2, Bounds::default(), Q);
            assert!(m.embedded().is_graded_equivalence());
            let (a, b) = random_composable_pair(seed, &c2, Bounds::default(), Q);
            assert_eq!(a.algebra_b(), b.algebra_a());
        }
    }
}
