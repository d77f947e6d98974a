mod common;

use cartan_pentads::pentad::{cartan_equivalent, direct_sum, shuffle_columns};
use cartan_pentads::{rational, Error, GradedAlgebra, QMatrix, QPentad};
use common::*;
use proptest::prelude::*;

fn random_pentad(seed: u64, r: usize, n: usize) -> QPentad {
    let mut rng = rng(seed);
    let a = loop {
        let m = random_matrix(&mut rng, r, r);
        if m.is_invertible() {
            break m;
        }
    };
    let d = random_int_matrix(&mut rng, r, n, 3);
    QPentad::with_diagonal(a, d, (0..n).map(|_| nonzero_rational(&mut rng)).collect()).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut pi: Vec<usize> = (1..=n).collect();
    let mut rng = rng(seed);
    for i in (1..n).rev() {
        pi.swap(i, rand::Rng::gen_range(&mut rng, 0..=i));
    }
    pi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn annihilator_and_image_add_up(seed: u64, r in 1usize..5, n in 1usize..5) {
        let rep = random_pentad(seed, r, n).analyze();
        prop_assert_eq!(rep.ann_dim + rep.phi_image_dim, r);
    }

    #[test]
    fn fewer_rows_than_columns_is_never_regular(seed: u64, r in 1usize..4, extra in 1usize..3) {
        let p = random_pentad(seed, r, r + extra);
        prop_assert!(!p.analyze().regular);
    }

    #[test]
    fn phi_identities_hold(seed: u64, r in 1usize..5, n in 1usize..5) {
        prop_assert!(random_pentad(seed, r, n).phi_pairing_identity_check());
    }

    #[test]
    fn direct_sum_is_block_diagonal(s1: u64, s2: u64, r1 in 1usize..4, n1 in 1usize..4, r2 in 1usize..4, n2 in 1usize..4) {
        let (p, q) = (random_pentad(s1, r1, n1), random_pentad(s2, r2, n2));
        let c = direct_sum(&p, &q).cartan_matrix().matrix;
        let expected = QMatrix::block_diag(&p.cartan_matrix().matrix, &q.cartan_matrix().matrix);
        prop_assert_eq!(c, expected);
    }

    #[test]
    fn shuffled_pentads_are_equivalent(seed: u64, n in 1usize..5, pseed: u64) {
        let p = random_pentad(seed, n, n);
        prop_assume!(p.d().rank() == n);
        let mut rng = rng(seed ^ 0xa5a5);
        let gamma = QMatrix::diag(&(0..n).map(|_| nonzero_rational(&mut rng)).collect::<Vec<_>>());
        let q = shuffle_columns(&p, &shuffled(n, pseed), &gamma).unwrap();
        let witness = cartan_equivalent(&q.cartan_matrix(), &p.cartan_matrix()).unwrap();
        prop_assert!(witness.is_some());
    }

    #[test]
    fn shuffling_preserves_dimensions(seed: u64, n in 1usize..3, pseed: u64) {
        let p = random_pentad(seed, n, n);
        let mut rng = rng(seed ^ 0x5a5a);
        let gamma = QMatrix::diag(&(0..n).map(|_| nonzero_rational(&mut rng)).collect::<Vec<_>>());
        let q = shuffle_columns(&p, &shuffled(n, pseed), &gamma).unwrap();
        let dims = |x: &QPentad| GradedAlgebra::build(x, 3).unwrap().dims();
        prop_assert_eq!(dims(&p), dims(&q));
    }
}

#[test]
fn validation_errors() {
    let one = QMatrix::identity(1);
    assert_eq!(
        QPentad::new(QMatrix::zeros(1, 1), one.clone(), one.clone()),
        Err(Error::SingularA)
    );
    assert_eq!(
        QPentad::new(
            QMatrix::identity(2),
            QMatrix::zeros(2, 2),
            QMatrix::from_ints(&[&[1, 1], &[0, 1]])
        ),
        Err(Error::NonDiagonalGamma)
    );
    assert_eq!(
        QPentad::with_diagonal(one.clone(), one.clone(), vec![rational(0, 1)]),
        Err(Error::SingularGamma)
    );
    assert!(matches!(
        QPentad::new(QMatrix::identity(2), one.clone(), one.clone()),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn non_equivalent_matrices_are_rejected() {
    let a2 = cartan_pentads::CartanMatrix::new(QMatrix::from_ints(&[&[2, -1], &[-1, 2]]));
    let b2 = cartan_pentads::CartanMatrix::new(QMatrix::from_ints(&[&[2, -1], &[-2, 2]]));
    assert_eq!(cartan_equivalent(&a2, &b2).unwrap(), None);
    let c2 = cartan_pentads::CartanMatrix::new(QMatrix::from_ints(&[&[2, -2], &[-1, 2]]));
    let w = cartan_equivalent(&b2, &c2).unwrap().unwrap();
    assert_eq!(w.permutation, vec![2, 1]);
    let big = cartan_pentads::CartanMatrix::new(QMatrix::identity(11));
    assert!(matches!(
        cartan_equivalent(&big, &big),
        Err(Error::SearchTooLarge { .. })
    ));
}

#[test]
fn affine_pentad_report() {
    let p = cartan_pentads::fixtures::by_name("affine_a1")
        .unwrap()
        .load()
        .unwrap()
        .pentad;
    let rep = p.analyze();
    assert!(!rep.regular);
    assert_eq!((rep.rank_d, rep.ann_dim), (2, 1));
    assert!(!rep.transitive);
}
