//! Property tests over fields, subspaces, generators and serialization.

use graded_morita::document::{parse_document, Document, Object};
use graded_morita::fixtures::{self, Bounds};
use graded_morita::linalg::{Field, Subspace, Vector};
use graded_morita::suite::seed_group;
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(101).unwrap()), Just(Field::prime(7).unwrap())]
}

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 0..=count)
}

fn span(field: Field, dim: usize, rows: &[Vec<i64>]) -> Subspace {
    Subspace::span_of(dim, field, rows.iter().map(|r| Vector::from_i64(dim, field, r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(field in fields(), a in (-50i64..50, 1i64..7), b in (-50i64..50, 1i64..7), c in -50i64..50) {
        let (x, y, z) = (field.ratio(a.0, a.1), field.ratio(b.0, b.1), field.from_i64(c));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.add(&field.zero()), x.clone());
        prop_assert_eq!(x.mul(&field.one()), x.clone());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv()).is_one());
            prop_assert_eq!(y.div(&x).mul(&x), y.clone());
        }
        prop_assert_eq!(field.parse(&x.to_text()).unwrap(), x);
    }

    #[test]
    fn subspace_dimension_identities(field in fields(), u in vectors(5, 4), v in vectors(5, 4)) {
        let (su, sv) = (span(field, 5, &u), span(field, 5, &v));
        let sum = su.sum(&sv).unwrap();
        let cap = su.intersect(&sv).unwrap();
        prop_assert_eq!(sum.rank() + cap.rank(), su.rank() + sv.rank());
        prop_assert!(cap.is_subspace_of(&su) && cap.is_subspace_of(&sv));
        prop_assert!(su.is_subspace_of(&sum) && sv.is_subspace_of(&sum));
        prop_assert_eq!(su.annihilator().rank() + su.rank(), 5);
        prop_assert!(su.rank() <= u.len());
        for r in &u {
            prop_assert!(su.has(&Vector::from_i64(5, field, r)));
        }
        prop_assert_eq!(su.sum(&su).unwrap(), su.clone());
        prop_assert_eq!(su.intersect(&su).unwrap(), su);
    }

    #[test]
    fn generated_algebras_are_valid_and_deterministic(seed in 0u64..10_000) {
        let g = seed_group(seed);
        let b = fixtures::random_graded_algebra(seed, &g, Bounds::default(), Field::Rationals);
        prop_assert!(b.dim() >= 1 && b.dim() <= Bounds::default().max_dim);
        prop_assert!(b.algebra().associativity_failure().is_none());
        prop_assert_eq!(&b, &fixtures::random_graded_algebra(seed, &g, Bounds::default(), Field::Rationals));
        if b.is_strongly_graded() {
            prop_assert!(b.is_partially_strongly_graded());
        }
        if b.is_partially_strongly_graded() {
            prop_assert!(b.is_idempotent_graded());
        }
    }

    #[test]
    fn documents_round_trip_bit_exact(seed in 0u64..10_000, field in fields()) {
        let g = seed_group(seed);
        let b = fixtures::random_graded_algebra(seed, &g, Bounds::default(), field);
        let (res, _) = fixtures::random_product_partial_action(seed, &g, Bounds::default(), field);
        let ctx = fixtures::random_context(seed, &g, Bounds::default(), field);
        let doc = Document::new(field, g)
            .with("B", Object::Algebra { algebra: b, labels: None })
            .with("alpha", Object::Restriction(res))
            .with("M", Object::Context(ctx));
        let text = doc.to_json();
        let back = parse_document(&text, None).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }
}
