use proptest::prelude::*;

use qfla::derivations::is_half_derivation;
use qfla::io::{export_algebra, export_product, import_algebra, import_product};
use qfla::linalg::{int, rat};
use qfla::tpa::{sweep_seed, variants};
use qfla::{
    check_associative, check_poisson_leibniz, check_transposed_leibniz, instantiate, make_algebra,
    multiplication_operator, sample_parameters, solve_derivation_space, CommutativeProduct,
    DerivationProblem, FamilyId, LieAlgebra, Matrix, Rational,
};

fn small_ids() -> Vec<FamilyId> {
    vec![
        FamilyId::g1n1(5).unwrap(),
        FamilyId::g1n1(7).unwrap(),
        FamilyId::g2n1(5).unwrap(),
        FamilyId::g2n1(6).unwrap(),
        FamilyId::g3n1(7).unwrap(),
        FamilyId::g3n1(8).unwrap(),
        FamilyId::g1_7(),
    ]
}

/// Tables that hold for every admissible parameter value.
fn sound_variant_ids() -> Vec<FamilyId> {
    vec![
        FamilyId::g1n1(5).unwrap(),
        FamilyId::g1n1(7).unwrap(),
        FamilyId::g1n1(9).unwrap(),
        FamilyId::g2n1(6).unwrap(),
        FamilyId::g3n1(7).unwrap(),
        FamilyId::g3n1(8).unwrap(),
        FamilyId::g1_7(),
    ]
}

fn product_strategy(dim: usize) -> impl Strategy<Value = CommutativeProduct> {
    prop::collection::vec((1..=dim, 1..=dim, 1..=dim, -4i64..=4, 1i64..=3), 0..8).prop_map(
        move |entries| {
            CommutativeProduct::from_entries(
                dim,
                entries
                    .into_iter()
                    .map(|(i, j, k, p, q)| (i, j, k, rat(p, q))),
            )
            .unwrap()
        },
    )
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), dim)
        .prop_map(|xs| xs.into_iter().map(|(p, q)| rat(p, q)).collect())
}

#[test]
fn trivial_product_is_compatible_with_every_catalog_algebra() {
    for id in FamilyId::grid(11) {
        let alg = make_algebra(id);
        let zero = CommutativeProduct::trivial(alg.dim());
        assert!(check_associative(&zero).passed());
        assert!(check_transposed_leibniz(&alg, &zero).unwrap().passed());
        assert!(check_poisson_leibniz(&alg, &zero).unwrap().passed());
    }
}

#[test]
fn solved_basis_maps_are_half_derivations() {
    for id in FamilyId::grid(11) {
        let alg = make_algebra(id);
        let space = solve_derivation_space(&DerivationProblem::half(&alg));
        for map in space.basis_maps() {
            assert!(is_half_derivation(&alg, &map).unwrap(), "{id}");
        }
    }
}

#[test]
fn every_variant_samples_within_its_constraints() {
    for id in FamilyId::grid(11) {
        for v in variants(id) {
            for s in 0..5 {
                let a = sample_parameters(&v, sweep_seed(1, s), 5).unwrap();
                let prod = instantiate(&v, &a).unwrap();
                assert_eq!(prod.dim(), id.n());
            }
        }
    }
}

#[test]
fn catalog_exports_round_trip() {
    for id in FamilyId::grid(12) {
        let alg = make_algebra(id);
        let back = import_algebra(&export_algebra(&alg)).unwrap();
        assert!(back.warnings.is_empty());
        assert_eq!(back.algebra, alg);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn abelian_algebra_accepts_any_product(prod in product_strategy(4)) {
        let alg = LieAlgebra::abelian(4);
        prop_assert!(check_transposed_leibniz(&alg, &prod).unwrap().passed());
        prop_assert!(check_poisson_leibniz(&alg, &prod).unwrap().passed());
    }

    #[test]
    fn product_is_commutative_and_bilinear(
        prod in product_strategy(4),
        x in vector(4),
        y in vector(4),
        z in vector(4),
        c in (-6i64..=6, 1i64..=5),
    ) {
        let c = rat(c.0, c.1);
        prop_assert_eq!(prod.multiply(&x, &y).unwrap(), prod.multiply(&y, &x).unwrap());
        let xz: Vec<Rational> = x.iter().zip(&z).map(|(a, b)| a * &c + b).collect();
        let lhs = prod.multiply(&xz, &y).unwrap();
        let rhs: Vec<Rational> = prod
            .multiply(&x, &y)
            .unwrap()
            .iter()
            .zip(prod.multiply(&z, &y).unwrap())
            .map(|(a, b)| a * &c + b)
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_export_round_trips(prod in product_strategy(5)) {
        prop_assert_eq!(import_product(&export_product(&prod)).unwrap(), prod);
    }

    #[test]
    fn sound_tables_pass_for_random_seeds(idx in 0usize..7, seed in any::<u64>()) {
        let id = sound_variant_ids()[idx];
        let alg = make_algebra(id);
        for v in variants(id) {
            let a = sample_parameters(&v, seed, 7).unwrap();
            let prod = instantiate(&v, &a).unwrap();
            prop_assert!(check_associative(&prod).passed(), "{}", v.id());
            prop_assert!(check_transposed_leibniz(&alg, &prod).unwrap().passed(), "{}", v.id());
            for i in 0..alg.dim() {
                let op = multiplication_operator(&prod, i).unwrap();
                prop_assert!(is_half_derivation(&alg, &op).unwrap(), "{} L_{}", v.id(), i + 1);
            }
        }
    }

    #[test]
    fn half_derivation_spaces_contain_scaled_identity(idx in 0usize..7, c in (-9i64..=9, 1i64..=9)) {
        let alg = make_algebra(small_ids()[idx]);
        let space = solve_derivation_space(&DerivationProblem::half(&alg));
        let mut m = Matrix::identity(alg.dim());
        for i in 0..alg.dim() {
            m[(i, i)] = rat(c.0, c.1);
        }
        prop_assert!(space.contains(&m).unwrap());
    }

    #[test]
    fn sampling_is_deterministic(idx in 0usize..7, seed in any::<u64>(), bound in 1u32..9) {
        for v in variants(small_ids()[idx]) {
            let a = sample_parameters(&v, seed, bound).unwrap();
            prop_assert_eq!(&a, &sample_parameters(&v, seed, bound).unwrap());
            let b = int(i64::from(bound));
            for x in a.values.values() {
                prop_assert!(x.numer() <= b.numer() && &-x.numer() <= b.numer());
            }
        }
    }
}
