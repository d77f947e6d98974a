//! The acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cartan_pentads::constructions::{self, FiniteCartanData};
use cartan_pentads::modules::{positive_extension, GradedModule};
use cartan_pentads::{fixtures, rational, Direction, GradedAlgebra, QMatrix, QPentad, Rational, Sampling};
use common::*;
use num_traits::Zero;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> QPentad {
    fixtures::by_name(name)
        .expect("fixture")
        .load()
        .expect("fixture parses")
        .pentad
}

fn build(p: &QPentad, n: usize) -> Result<GradedAlgebra<Rational>, String> {
    GradedAlgebra::build(p, n).map_err(|e| e.to_string())
}

fn cartan_reproduction() -> Outcome {
    let a2 = QMatrix::from_ints(&[&[2, -1], &[-1, 2]]);
    let affine = QMatrix::from_ints(&[&[2, -2], &[-2, 2]]);
    for (name, expected) in [
        ("sl3_first", &a2),
        ("sl3_second", &a2),
        ("loop_sl2", &affine),
        ("affine_a1", &affine),
    ] {
        let c = fixture(name).cartan_matrix().matrix;
        ensure!(&c == expected, "{name}: got {c}");
    }
    Ok(())
}

fn sl3_structure() -> Outcome {
    for name in ["sl3_first", "sl3_second"] {
        let rep = build(&fixture(name), 4)?
            .structure_report()
            .map_err(|e| e.to_string())?;
        let dims: Vec<usize> = (-3..=3).map(|k| dims_map(&rep.dims)[&k]).collect();
        ensure!(dims == [0, 1, 2, 2, 2, 1, 0], "{name}: dims {dims:?}");
        ensure!(
            rep.finite && rep.total_dim == Some(8),
            "{name}: total {:?}",
            rep.total_dim
        );
    }
    Ok(())
}

fn counterexample_pair() -> Outcome {
    let first = build(&fixture("commutative_pair"), 2)?;
    let second = build(&fixture("noncommutative_pair"), 2)?;
    for (name, alg) in [("first", &first), ("second", &second)] {
        let total = alg.structure_report().map_err(|e| e.to_string())?.total_dim;
        ensure!(total == Some(4), "{name}: total {total:?}");
    }
    ensure!(
        first.cartan_matrix().matrix == second.cartan_matrix().matrix,
        "Cartan matrices differ"
    );
    for j in -1..=1 {
        for m in -1..=1 {
            for x in 0..first.dim(j) {
                if let Some(ad) = first.ad(j, m, x) {
                    ensure!(ad.is_zero(), "first: nonzero ad on V_{m} for x in V_{j}");
                }
            }
        }
    }
    let ef = second.bracket_basis(1, 0, -1, 0).ok_or("no [e,f]")?;
    ensure!(ef.iter().any(|c| !c.is_zero()), "second: [e,f] = 0");
    let he = second.bracket_basis(0, 0, 1, 0).ok_or("no [h,e]")?;
    ensure!(he == vec![rational(2, 1)], "second: [h,e] = {he:?}");
    // h′ = [e,f] acts on e through C = 0.
    let h_prime_e = second.bracket(0, &ef, 1, &[rational(1, 1)]).ok_or("no [h′,e]")?;
    ensure!(h_prime_e.iter().all(Zero::is_zero), "second: [[e,f],e] = {h_prime_e:?}");
    Ok(())
}

fn regular_decomposition() -> Outcome {
    let mut rng = rng(0x5eed_0004);
    for case in 0..20 {
        let n = 1 + case % 3;
        let r = n + (case / 3) % 2;
        let p = random_regular_symmetric_pentad(&mut rng, r, n);
        let alg = build(&p, 5)?;
        let rep = alg.structure_report().map_err(|e| e.to_string())?;
        ensure!(
            rep.center_dim_0 == r - n,
            "case {case}: center {} for r={r}, n={n}",
            rep.center_dim_0
        );
        let g = build(
            &constructions::from_contragredient(&p.cartan_matrix().matrix).map_err(|e| e.to_string())?,
            5,
        )?;
        for k in (-5..=5).filter(|&k| k != 0) {
            ensure!(
                alg.dim(k) == g.dim(k),
                "case {case}: degree {k}: {} vs {}",
                alg.dim(k),
                g.dim(k)
            );
        }
        ensure!(alg.dim(0) == g.dim(0) + r - n, "case {case}: degree 0");
    }
    Ok(())
}

fn loop_growth() -> Outcome {
    let alg = build(&fixture("loop_sl2"), 5)?;
    let oracle = loop_sl2_oracle(5);
    let got: Vec<usize> = (1..=5).map(|k| alg.dim(k)).collect();
    ensure!(got == [2, 1, 2, 1, 2], "positive dims {got:?}");
    for k in -5..=5 {
        let mut weights: Vec<i64> = alg
            .component(k)
            .ok_or(format!("missing V_{k}"))?
            .weights
            .iter()
            .map(|w| w[0].to_integer().try_into().unwrap())
            .collect();
        weights.sort();
        ensure!(
            weights == oracle[&k],
            "degree {k}: weights {weights:?} vs {:?}",
            oracle[&k]
        );
    }
    let rep = alg.structure_report().map_err(|e| e.to_string())?;
    ensure!(rep.truncated && !rep.finite, "loop reported finite");
    Ok(())
}

fn affine_center() -> Outcome {
    let p = fixture("affine_a1");
    let alg = build(&p, 4)?;
    let rep = alg.structure_report().map_err(|e| e.to_string())?;
    let kernel = p.d().transpose().kernel_basis().len();
    ensure!(kernel == 1, "ker ᵗD has dim {kernel}");
    ensure!(rep.center_dim_0 == kernel, "center {}", rep.center_dim_0);
    ensure!(alg.joint_kernel_dim(0) == 1, "joint kernel {}", alg.joint_kernel_dim(0));
    ensure!(alg.verify_invariant_form() == Ok(true), "invariant form fails");
    Ok(())
}

fn gl3_family() -> Outcome {
    let a2 = FiniteCartanData::of_type("A", 2).map_err(|e| e.to_string())?;
    let fam = constructions::cs_family(&a2, &[1, 0], &rational(0, 1)).map_err(|e| e.to_string())?;
    ensure!(fam.singular_at == rational(2, 3), "singular at {:?}", fam.singular_at);
    for s in [
        rational(2, 3),
        rational(0, 1),
        rational(1, 1),
        rational(2, 1),
        rational(-5, 7),
    ] {
        let c = constructions::cs_family(&a2, &[1, 0], &s).map_err(|e| e.to_string())?;
        let singular = c.matrix.determinant().map_err(|e| e.to_string())?.is_zero();
        ensure!(singular == (s == rational(2, 3)), "s = {s}: singular = {singular}");
    }
    for (s, total) in [(rational(2, 1), 15), (rational(1, 1), 21)] {
        let (p, c) = constructions::cs_family_pentad(&a2, &[1, 0], &s).map_err(|e| e.to_string())?;
        let oracle = height_dims(&c.matrix);
        ensure!(oracle.values().sum::<usize>() == total, "s = {s}: oracle total");
        let rep = build(&p, 8)?.structure_report().map_err(|e| e.to_string())?;
        ensure!(
            rep.finite && rep.total_dim == Some(total),
            "s = {s}: total {:?}",
            rep.total_dim
        );
        for (k, d) in rep.dims {
            ensure!(oracle.get(&k).copied().unwrap_or(0) == d, "s = {s}: degree {k}");
        }
    }
    Ok(())
}

fn block_formula() -> Outcome {
    let mut rng = rng(0x5eed_0008);
    for case in 0..50 {
        let n = 1 + case % 3;
        let k = 1 + case % 2;
        let p = random_regular_symmetric_pentad(&mut rng, n, n);
        let lambda = random_matrix(&mut rng, n, k);
        let a_tilde = random_symmetric_invertible(&mut rng, k);
        let (_, c) = constructions::scalar_augmented_embedding(&p, &lambda, &a_tilde).map_err(|e| e.to_string())?;
        let expected = block_formula_entrywise(&p, &lambda, &a_tilde);
        ensure!(c.matrix.to_rows() == expected, "case {case}: mismatch");
    }
    Ok(())
}

fn check_algebra(label: &str, alg: &GradedAlgebra<Rational>) -> Outcome {
    ensure!(alg.verify_jacobi(Sampling::All), "{label}: Jacobi");
    ensure!(alg.verify_invariant_form() == Ok(true), "{label}: invariant form");
    ensure!(alg.pairings_nondegenerate(), "{label}: degenerate pairing");
    Ok(())
}

fn property_suites() -> Outcome {
    for f in fixtures::ALL {
        check_algebra(
            f.name,
            &build(&f.load().map_err(|e| e.to_string())?.pentad, f.max_degree)?,
        )?;
    }
    let mut rng = rng(0x5eed_0009);
    for case in 0..20 {
        let n = 1 + case % 3;
        let r = 1 + (case / 3) % 3;
        let p = random_symmetric_pentad(&mut rng, r, n);
        check_algebra(&format!("fuzz case {case}"), &build(&p, 4)?)?;
    }
    Ok(())
}

fn module_extensions() -> Outcome {
    let sl2 = build(&fixture("sl2"), 2)?;
    for m in 0..=3i64 {
        let module = positive_extension(&sl2, &[rational(-m, 1)], 6).map_err(|e| e.to_string())?;
        let expected = sl2_lowest_weight_dim(-m);
        ensure!(
            module.total_dim() == Some(expected),
            "m = {m}: {:?} vs {expected}",
            module.total_dim()
        );
        ensure!(module.verify_relations(), "m = {m}: relations");
    }
    let sl3 = build(&fixture("sl3_first"), 2)?;
    let cases: [(&GradedAlgebra<Rational>, Vec<Rational>, Vec<Rational>); 2] = [
        (&sl2, vec![rational(-1, 1)], vec![rational(-3, 1)]),
        (
            &sl3,
            vec![rational(-1, 1), rational(0, 1)],
            vec![rational(-1, 1), rational(-1, 1)],
        ),
    ];
    for (alg, u, v) in cases {
        for dir in [Direction::Positive, Direction::Negative] {
            let ext = |ws: &[Vec<Rational>]| GradedModule::extension(alg, ws, dir, 6).map_err(|e| e.to_string());
            let both = [u.clone(), v.clone()];
            let (a, b, sum) = (ext(&both[..1])?, ext(&both[1..])?, ext(&both)?);
            for (m, d) in sum.dims() {
                ensure!(
                    d == a.dim(m) + b.dim(m),
                    "{dir:?}: degree {m}: {d} vs {} + {}",
                    a.dim(m),
                    b.dim(m)
                );
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Cartan-matrix reproduction", cartan_reproduction),
        ("sl3 structure", sl3_structure),
        ("non-regular counterexample pair", counterexample_pair),
        (
            "center plus contragredient part on fuzzed regular pentads",
            regular_decomposition,
        ),
        ("loop growth", loop_growth),
        ("affine center", affine_center),
        ("gl3 family", gl3_family),
        ("block-formula identity", block_formula),
        ("property suites", property_suites),
        ("module extensions", module_extensions),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
