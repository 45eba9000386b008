use super::graded::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, LinearMap, Scalar, SpanBuilder, Subspace, Vector};

/// A pair of linear maps `(L, R)` on an algebra with `L(ab) = L(a)b`,
/// `R(ab) = aR(b)` and `R(a)b = aL(b)`. Think of `L` as `x ↦ wx` and `R` as `x ↦ xw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplier {
    pub l: LinearMap,
    pub r: LinearMap,
}

impl Multiplier {
    pub fn identity(dim: usize, field: Field) -> Multiplier {
        Multiplier { l: LinearMap::identity(dim, field), r: LinearMap::identity(dim, field) }
    }

    /// `μ(b) = (L_b, R_b)`.
    pub fn of_element(b: &GradedAlgebra, w: &Vector) -> Multiplier {
        let a = b.algebra();
        let l = LinearMap::from_columns(b.dim(), b.field(), a.left_multiplication(w)).expect("shape");
        let r = LinearMap::from_columns(b.dim(), b.field(), a.right_multiplication(w)).expect("shape");
        Multiplier { l, r }
    }

    /// `(L, R)(L', R') = (LL', R'R)`.
    pub fn compose(&self, other: &Multiplier) -> Multiplier {
        Multiplier { l: self.l.compose(&other.l), r: other.r.compose(&self.r) }
    }

    /// `1 - e`.
    pub fn complement(&self) -> Multiplier {
        let id = Multiplier::identity(self.l.dim_in(), self.l.field());
        Multiplier { l: id.l.sub(&self.l), r: id.r.sub(&self.r) }
    }

    pub fn check(&self, b: &GradedAlgebra) -> Result<()> {
        let d = b.dim();
        if self.l.dim_in() != d || self.l.dim_out() != d || self.r.dim_in() != d || self.r.dim_out() != d {
            return Err(Error::DimensionError { expected: d, found: self.l.dim_in() });
        }
        for i in 0..d {
            let bi = b.basis_vector(i);
            for j in 0..d {
                let bj = b.basis_vector(j);
                let bij = b.multiply(&bi, &bj);
                if self.l.apply(&bij) != b.multiply(self.l.column(i), &bj) {
                    return Err(Error::NotMultiplier(format!("L(b_{i} b_{j}) != L(b_{i}) b_{j}")));
                }
                if self.r.apply(&bij) != b.multiply(&bi, self.r.column(j)) {
                    return Err(Error::NotMultiplier(format!("R(b_{i} b_{j}) != b_{i} R(b_{j})")));
                }
                if b.multiply(self.r.column(i), &bj) != b.multiply(&bi, self.l.column(j)) {
                    return Err(Error::NotMultiplier(format!("R(b_{i}) b_{j} != b_{i} L(b_{j})")));
                }
            }
        }
        Ok(())
    }

    /// `L(B_s) ⊆ B_{ts}` and `R(B_s) ⊆ B_{st}` for every `s`.
    pub fn has_degree(&self, b: &GradedAlgebra, t: usize) -> bool {
        let g = b.group();
        (0..b.dim()).all(|i| {
            let s = b.degree(i);
            self.l.column(i).support().all(|k| b.degree(k) == g.mul(t, s))
                && self.r.column(i).support().all(|k| b.degree(k) == g.mul(s, t))
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    /// Flattened `(L, R)` coordinates: `L[k][i]` at `i·d + k`, `R[k][i]` at `d² + i·d + k`.
    pub fn to_coordinates(&self) -> Vector {
        let d = self.l.dim_in();
        let mut terms = Vec::new();
        for i in 0..d {
            terms.extend(self.l.column(i).entries().iter().map(|(k, c)| (i * d + k, c.clone())));
            terms.extend(self.r.column(i).entries().iter().map(|(k, c)| (d * d + i * d + k, c.clone())));
        }
        Vector::from_terms(2 * d * d, self.l.field(), terms)
    }

    pub fn from_coordinates(d: usize, v: &Vector) -> Multiplier {
        let f = v.field();
        let col = |base: usize, i: usize| v.window(base + i * d, d);
        let l = LinearMap::from_columns(d, f, (0..d).map(|i| col(0, i)).collect()).expect("shape");
        let r = LinearMap::from_columns(d, f, (0..d).map(|i| col(d * d, i)).collect()).expect("shape");
        Multiplier { l, r }
    }
}

/// The graded multiplier algebra: per degree `t` the space of multipliers of degree `t`,
/// in the flattened coordinates of [`Multiplier::to_coordinates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMultiplierAlgebra {
    pub dim: usize,
    pub components: Vec<Subspace>,
}

impl GradedMultiplierAlgebra {
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(Subspace::rank).sum()
    }

    pub fn component(&self, t: usize) -> &Subspace {
        &self.components[t]
    }

    pub fn contains(&self, t: usize, m: &Multiplier) -> bool {
        self.components[t].has(&m.to_coordinates())
    }

    pub fn basis(&self, t: usize) -> Vec<Multiplier> {
        self.components[t].rows().iter().map(|v| Multiplier::from_coordinates(self.dim, v)).collect()
    }
}

/// Solves the defining identities of a degree-`t` multiplier as one linear system.
pub fn multipliers_of_degree(b: &GradedAlgebra, t: usize) -> Subspace {
    let d = b.dim();
    let f = b.field();
    let g = b.group();
    let a = b.algebra();
    // unknown index for L[k][i] and R[k][i], restricted by degree
    let mut lvar = vec![None; d * d];
    let mut rvar = vec![None; d * d];
    let mut vars = Vec::new();
    for i in 0..d {
        for k in 0..d {
            if b.degree(k) == g.mul(t, b.degree(i)) {
                lvar[i * d + k] = Some(vars.len());
                vars.push(i * d + k);
            }
        }
    }
    for i in 0..d {
        for k in 0..d {
            if b.degree(k) == g.mul(b.degree(i), t) {
                rvar[i * d + k] = Some(vars.len());
                vars.push(d * d + i * d + k);
            }
        }
    }
    let nv = vars.len();
    let mut eqs = SpanBuilder::new(nv, f);
    let coef = |i: usize, j: usize, n: usize| -> Scalar { a.product(i, j).map(|v| v.get(n)).unwrap_or_else(|| f.zero()) };
    let lv = |k: usize, i: usize| lvar[i * d + k];
    let rv = |k: usize, i: usize| rvar[i * d + k];
    let push = |terms: Vec<(usize, Scalar)>, eqs: &mut SpanBuilder| {
        let v = Vector::from_terms(nv, f, terms);
        if !v.is_zero() {
            eqs.insert(&v);
        }
    };
    for i in 0..d {
        for j in 0..d {
            for n in 0..d {
                if eqs.is_full() {
                    break;
                }
                // L(b_i b_j) - L(b_i) b_j, coordinate n
                let mut t1 = Vec::new();
                // R(b_i b_j) - b_i R(b_j)
                let mut t2 = Vec::new();
                // R(b_i) b_j - b_i L(b_j)
                let mut t3 = Vec::new();
                if let Some(p) = a.product(i, j) {
                    for (m, c) in p.entries() {
                        if let Some(x) = lv(n, *m) {
                            t1.push((x, c.clone()));
                        }
                        if let Some(x) = rv(n, *m) {
                            t2.push((x, c.clone()));
                        }
                    }
                }
                for k in 0..d {
                    let ckj = coef(k, j, n);
                    let cik = coef(i, k, n);
                    if !ckj.is_zero() {
                        if let Some(x) = lv(k, i) {
                            t1.push((x, ckj.neg()));
                        }
                        if let Some(x) = rv(k, i) {
                            t3.push((x, ckj.clone()));
                        }
                    }
                    if !cik.is_zero() {
                        if let Some(x) = rv(k, j) {
                            t2.push((x, cik.neg()));
                        }
                        if let Some(x) = lv(k, j) {
                            t3.push((x, cik.neg()));
                        }
                    }
                }
                push(t1, &mut eqs);
                push(t2, &mut eqs);
                push(t3, &mut eqs);
            }
        }
    }
    let sol = eqs.finish().annihilator();
    Subspace::span_of(2 * d * d, f, sol.rows().iter().map(|r| r.reindexed(2 * d * d, |x| vars[x])))
}

/// `𝔐_t(B)` for every `t`.
pub fn graded_multipliers(b: &GradedAlgebra) -> GradedMultiplierAlgebra {
    let components = b.group().elements().map(|t| multipliers_of_degree(b, t)).collect();
    GradedMultiplierAlgebra { dim: b.dim(), components }
}

/// Structural facts about the graded multiplier algebra and `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierFacts {
    pub closed_under_products: bool,
    pub mu_graded_homomorphism: bool,
    pub mu_image_ideal: bool,
    pub mu_injective: bool,
}

pub fn multiplier_facts(b: &GradedAlgebra, m: &GradedMultiplierAlgebra) -> MultiplierFacts {
    let g = b.group();
    let d = b.dim();
    let closed_under_products = g.elements().all(|s| {
        let bs = m.basis(s);
        g.elements().all(|t| {
            let bt = m.basis(t);
            bs.iter().all(|x| bt.iter().all(|y| m.contains(g.mul(s, t), &x.compose(y))))
        })
    });
    let mus: Vec<Multiplier> = (0..d).map(|i| Multiplier::of_element(b, &b.basis_vector(i))).collect();
    let mu_of = |v: &Vector| Multiplier::of_element(b, v);
    let mut mu_graded_homomorphism = (0..d).all(|i| m.contains(b.degree(i), &mus[i]));
    for i in 0..d {
        for j in 0..d {
            let prod = b.multiply(&b.basis_vector(i), &b.basis_vector(j));
            mu_graded_homomorphism &= mu_of(&prod) == mus[i].compose(&mus[j]);
        }
    }
    let mu_image_ideal = g.elements().all(|t| {
        m.basis(t).iter().all(|w| {
            (0..d).all(|i| {
                let bi = b.basis_vector(i);
                w.compose(&mus[i]) == mu_of(&w.l.apply(&bi)) && mus[i].compose(w) == mu_of(&w.r.apply(&bi))
            })
        })
    });
    let image = Subspace::span_of(2 * d * d, b.field(), mus.iter().map(Multiplier::to_coordinates));
    MultiplierFacts { closed_under_products, mu_graded_homomorphism, mu_image_ideal, mu_injective: image.rank() == d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::group::FiniteGroup;

    fn q() -> Field {
        Field::Rationals
    }

    fn kc2() -> GradedAlgebra {
        let e = |i| Vector::unit(2, i, q());
        let a = Algebra::from_products(2, q(), vec![(0, 0, e(0)), (0, 1, e(1)), (1, 0, e(1)), (1, 1, e(0))]).unwrap();
        GradedAlgebra::new(a, FiniteGroup::cyclic(2), vec![0, 1]).unwrap()
    }

    #[test]
    fn group_algebra_multipliers() {
        let b = kc2();
        let m = graded_multipliers(&b);
        assert_eq!(m.total_dim(), 2);
        assert!(m.contains(0, &Multiplier::identity(2, q())));
        let facts = multiplier_facts(&b, &m);
        assert!(facts.closed_under_products && facts.mu_graded_homomorphism && facts.mu_image_ideal && facts.mu_injective);
    }

    #[test]
    fn zero_product_line() {
        let b = GradedAlgebra::trivially_graded(Algebra::zero_product(1, q()), FiniteGroup::cyclic(1));
        let m = graded_multipliers(&b);
        // L and R are arbitrary scalars
        assert_eq!(m.total_dim(), 2);
        assert!(!multiplier_facts(&b, &m).mu_injective);
    }

    #[test]
    fn coordinates_round_trip() {
        let b = kc2();
        let w = Multiplier::of_element(&b, &Vector::from_i64(2, q(), &[1, 3]));
        assert_eq!(Multiplier::from_coordinates(2, &w.to_coordinates()), w);
        assert!(w.check(&b).is_ok());
        assert!(Multiplier::of_element(&b, &b.basis_vector(1)).has_degree(&b, 1));
    }
}
