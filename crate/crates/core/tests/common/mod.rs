//! Independent oracles and random inputs shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cartan_pentads::{rational, QMatrix, QPentad, Rational};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn small_rational(rng: &mut TestRng) -> Rational {
    rational(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut TestRng) -> Rational {
    loop {
        let q = small_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_matrix(rng: &mut TestRng, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| small_rational(rng)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_int_matrix(rng: &mut TestRng, rows: usize, cols: usize, bound: i64) -> QMatrix {
    QMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| rational(rng.gen_range(-bound..=bound), 1)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_symmetric_invertible(rng: &mut TestRng, k: usize) -> QMatrix {
    loop {
        let mut m = random_matrix(rng, k, k);
        for i in 0..k {
            for j in 0..i {
                let v = m.get(i, j).clone();
                m.set(j, i, v);
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_symmetric_pentad(rng: &mut TestRng, r: usize, n: usize) -> QPentad {
    let a = random_symmetric_invertible(rng, r);
    let d = random_int_matrix(rng, r, n, 3);
    let gamma = (0..n).map(|_| nonzero_rational(rng)).collect();
    QPentad::with_diagonal(a, d, gamma).unwrap()
}

/// A symmetric pentad with invertible Cartan matrix.
pub fn random_regular_symmetric_pentad(rng: &mut TestRng, r: usize, n: usize) -> QPentad {
    loop {
        let p = random_symmetric_pentad(rng, r, n);
        if p.cartan_matrix().is_invertible() {
            return p;
        }
    }
}

/// Degree multiplicities and weights of `ℂ[t, t⁻¹] ⊗ sl₂` graded so that
/// `x` and `t·y` have degree 1: `t^a ⊗ X_c` (`c = 1, 0, −1` for `x, h, y`)
/// sits in degree `2a + c` with weight `2c`.
pub fn loop_sl2_oracle(max_degree: i64) -> BTreeMap<i64, Vec<i64>> {
    let mut out: BTreeMap<i64, Vec<i64>> = (-max_degree..=max_degree).map(|k| (k, Vec::new())).collect();
    let span = max_degree + 1;
    for a in -span..=span {
        for c in -1..=1i64 {
            let degree = 2 * a + c;
            if degree.abs() <= max_degree {
                out.get_mut(&degree).unwrap().push(2 * c);
            }
        }
    }
    for w in out.values_mut() {
        w.sort();
    }
    out
}

/// Dimension of the irreducible sl₂-module of lowest weight `λ ∈ ℤ_{≤0}`,
/// from the Verma module: `f·e^j v = −j(λ + j − 1)·e^{j−1} v`, and the first
/// `j ≥ 1` with vanishing coefficient is a singular vector.
pub fn sl2_lowest_weight_dim(lambda: i64) -> usize {
    assert!(lambda <= 0);
    let mut j = 1;
    loop {
        if -j * (lambda + j - 1) == 0 {
            return j as usize;
        }
        j += 1;
    }
}

/// Positive roots of a finite-type Cartan matrix, by closing α-strings.
/// Rows are rescaled so that the diagonal is 2; they must then be integral.
/// Each root is a coefficient vector in the simple roots.
pub fn positive_roots(c: &QMatrix) -> Vec<Vec<i64>> {
    let n = c.rows();
    let a: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let scale = rational(2, 1) / c.get(i, i).clone();
            (0..n)
                .map(|j| {
                    let v = c.get(i, j).clone() * scale.clone();
                    assert!(v.is_integer(), "not a generalized Cartan matrix");
                    v.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let mut roots: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots.into_iter().collect()
}

/// `dim V_k` for the principal gradation of a finite-type algebra.
pub fn height_dims(c: &QMatrix) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::from([(0, c.rows())]);
    for root in positive_roots(c) {
        let h: i64 = root.iter().sum();
        *out.entry(h).or_default() += 1;
        *out.entry(-h).or_default() += 1;
    }
    out
}

/// `( C  Γ·ᵗD·A·Λ ; ᵗΛ·A·D  Ã + ᵗΛ·A·Λ )` entrywise from the raw matrices.
pub fn block_formula_entrywise(p: &QPentad, lambda: &QMatrix, a_tilde: &QMatrix) -> Vec<Vec<Rational>> {
    let (r, n, k) = (p.r(), p.n(), lambda.cols());
    let a = p.a();
    let g = p.gamma();
    // u_i^T A v_j for columns u_i of U, v_j of V.
    let form = |u: &dyn Fn(usize) -> Rational, v: &dyn Fn(usize) -> Rational| {
        let mut s = Rational::zero();
        for x in 0..r {
            for y in 0..r {
                s += u(x) * a.get(x, y).clone() * v(y);
            }
        }
        s
    };
    let size = n + k;
    let mut out = vec![vec![Rational::zero(); size]; size];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let left = |x: usize| {
                if i < n {
                    p.d().get(x, i).clone()
                } else {
                    lambda.get(x, i - n).clone()
                }
            };
            let right = |x: usize| {
                if j < n {
                    p.d().get(x, j).clone()
                } else {
                    lambda.get(x, j - n).clone()
                }
            };
            let coeff = if i < n { g[i].clone() } else { Rational::one() };
            let extra = if i >= n && j >= n {
                a_tilde.get(i - n, j - n).clone()
            } else {
                Rational::zero()
            };
            *entry = coeff * form(&left, &right) + extra;
        }
    }
    out
}

pub fn dims_map(dims: &[(i64, usize)]) -> BTreeMap<i64, usize> {
    dims.iter().copied().collect()
}

pub fn abs_sum(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| a + b)
}
