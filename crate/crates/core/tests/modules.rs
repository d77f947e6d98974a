mod common;

use cartan_pentads::constructions::{from_semisimple, weight_from_coroot_values, FiniteCartanData};
use cartan_pentads::modules::{module_pairing, negative_extension, positive_extension};
use cartan_pentads::{fixtures, rational, Direction, Error, GradedAlgebra, GradedModule, Rational};
use common::*;
use proptest::prelude::*;

fn sl2() -> GradedAlgebra<Rational> {
    let p = fixtures::by_name("sl2").unwrap().load().unwrap().pentad;
    GradedAlgebra::build(&p, 2).unwrap()
}

#[test]
fn sl2_strings() {
    let alg = sl2();
    for m in 0..6i64 {
        let pos = positive_extension(&alg, &[rational(-m, 1)], 8).unwrap();
        assert_eq!(pos.total_dim(), Some(sl2_lowest_weight_dim(-m)));
        assert!(pos.verify_relations() && pos.check_transitivity());
        let neg = negative_extension(&alg, &[rational(m, 1)], 8).unwrap();
        assert_eq!(neg.total_dim(), Some(sl2_lowest_weight_dim(-m)));
        assert!(neg.verify_relations());
    }
}

#[test]
fn positive_weights_never_terminate() {
    let module = positive_extension(&sl2(), &[rational(1, 2)], 5).unwrap();
    assert!(!module.terminated());
    assert_eq!(module.total_dim(), None);
    assert!(module.dims().iter().all(|&(_, d)| d == 1));
}

#[test]
fn sl3_fundamental_and_adjoint() {
    let data: FiniteCartanData<Rational> = FiniteCartanData::of_type("A", 2).unwrap();
    let alg = GradedAlgebra::build(&from_semisimple(&data).unwrap(), 2).unwrap();
    for (n, expected) in [(vec![1, 0], 3), (vec![1, 1], 8), (vec![2, 0], 6), (vec![0, 0], 1)] {
        let w = weight_from_coroot_values(&data, &n).unwrap();
        let module = positive_extension(&alg, &w, 8).unwrap();
        assert_eq!(module.total_dim(), Some(expected), "{n:?}");
        assert!(module.verify_relations());
    }
}

#[test]
fn pairing_is_nondegenerate() {
    let data: FiniteCartanData<Rational> = FiniteCartanData::of_type("B", 2).unwrap();
    let alg = GradedAlgebra::build(&from_semisimple(&data).unwrap(), 2).unwrap();
    let w = weight_from_coroot_values(&data, &[0, 1]).unwrap();
    let neg_w: Vec<Rational> = w.iter().map(|x| -x.clone()).collect();
    let pos = positive_extension(&alg, &w, 6).unwrap();
    let neg = negative_extension(&alg, &neg_w, 6).unwrap();
    assert_eq!(pos.total_dim(), Some(4));
    let pairing = module_pairing(&pos, &neg).unwrap();
    for (m, q) in pairing.iter().enumerate() {
        assert_eq!(q.rank(), pos.dim(m as i64), "degree {m}");
    }
    assert!(matches!(module_pairing(&pos, &pos), Err(Error::WeightMismatch(_))));
    let other = negative_extension(&alg, &w, 6).unwrap();
    assert!(matches!(module_pairing(&pos, &other), Err(Error::WeightMismatch(_))));
}

#[test]
fn input_errors() {
    let alg = sl2();
    assert!(matches!(
        GradedModule::extension(&alg, &[], Direction::Positive, 2),
        Err(Error::DimensionMismatch(_))
    ));
    assert!(matches!(
        positive_extension(&alg, &vec![rational(0, 1); 2], 2),
        Err(Error::DimensionMismatch(_))
    ));
    assert_eq!(
        positive_extension(&alg, &[rational(0, 1)], 13).err(),
        Some(Error::TruncationLimit { requested: 13, cap: 12 })
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn direct_sums_add(a in -4i64..3, b in -4i64..3, c in -3i64..2, negative: bool) {
        let alg = GradedAlgebra::build(&fixtures::by_name("sl3_first").unwrap().load().unwrap().pentad, 2).unwrap();
        let dir = if negative { Direction::Negative } else { Direction::Positive };
        let u = vec![rational(a, 1), rational(b, 1)];
        let v = vec![rational(c, 1), rational(a, 2)];
        let ext = |ws: &[Vec<Rational>]| GradedModule::extension(&alg, ws, dir, 4).unwrap();
        let (x, y, sum) = (ext(std::slice::from_ref(&u)), ext(std::slice::from_ref(&v)), ext(&[u, v]));
        for (m, d) in sum.dims() {
            prop_assert_eq!(d, x.dim(m) + y.dim(m));
        }
        prop_assert!(sum.verify_relations());
    }
}
