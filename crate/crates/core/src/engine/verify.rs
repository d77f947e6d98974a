//! Self-checks of a built algebra. None of these can fail on a correct
//! engine; a failure points at a bug or a corrupted table.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Which triples [`GradedAlgebra::verify_jacobi`] looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    All,
    Random { count: usize, seed: u64 },
}

impl<T: Scalar> GradedAlgebra<T> {
    fn range(&self) -> std::ops::RangeInclusive<i64> {
        let n = self.max_degree() as i64;
        -n..=n
    }

    /// Checks antisymmetry and the Jacobi identity on basis vectors.
    ///
    /// With [`Sampling::All`] this uses the operator form
    /// `ad [x, y] = ad x ∘ ad y − ad y ∘ ad x` on every `V_m` where all four
    /// degrees stay in range, which covers every in-range triple.
    pub fn verify_jacobi(&self, samples: Sampling) -> bool {
        match samples {
            Sampling::All => self.jacobi_all(),
            Sampling::Random { count, seed } => self.jacobi_sampled(count, seed),
        }
    }

    fn jacobi_all(&self) -> bool {
        let pairs: Vec<(i64, usize, i64)> = self
            .range()
            .flat_map(|j| {
                let dim = self.dim(j);
                self.range().flat_map(move |k| (0..dim).map(move |x| (j, x, k)))
            })
            .filter(|&(j, _, k)| self.in_range(j + k))
            .collect();
        pairs.into_par_iter().all(|(j, x, k)| {
            (0..self.dim(k)).all(|y| {
                let xy = self.bracket_basis(j, x, k, y).expect("in range");
                let yx = self.bracket_basis(k, y, j, x).expect("in range");
                if xy.iter().zip(&yx).any(|(a, b)| a.clone() + b.clone() != T::zero()) {
                    return false;
                }
                self.range()
                    .filter(|&m| self.in_range(m + j) && self.in_range(m + k) && self.in_range(m + j + k))
                    .all(|m| {
                        let lhs = combine(
                            self.ad_all(j + k, m).expect("in range"),
                            &xy,
                            self.dim(m + j + k),
                            self.dim(m),
                        );
                        let ax = self.ad(j, m + k, x).expect("in range");
                        let ay = self.ad(k, m, y).expect("in range");
                        let ay2 = self.ad(k, m + j, y).expect("in range");
                        let ax2 = self.ad(j, m, x).expect("in range");
                        let rhs = ax.mul(ay).and_then(|p| p.sub(&ay2.mul(ax2)?)).expect("shapes");
                        lhs == rhs
                    })
            })
        })
    }

    fn jacobi_sampled(&self, count: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.max_degree() as i64;
        let mut checked = 0;
        let mut attempts = 0;
        while checked < count && attempts < count * 50 {
            attempts += 1;
            let (a, b, c) = (rng.gen_range(-n..=n), rng.gen_range(-n..=n), rng.gen_range(-n..=n));
            if [b + c, a + b, a + c, a + b + c].iter().any(|&d| !self.in_range(d)) {
                continue;
            }
            let (da, db, dc) = (self.dim(a), self.dim(b), self.dim(c));
            if da == 0 || db == 0 || dc == 0 {
                continue;
            }
            let x = unit(da, rng.gen_range(0..da));
            let y = unit(db, rng.gen_range(0..db));
            let z = unit(dc, rng.gen_range(0..dc));
            let br = |j, u: &[T], k, v: &[T]| self.bracket(j, u, k, v).expect("in range");
            let lhs = br(a, &x, b + c, &br(b, &y, c, &z));
            let r1 = br(a + b, &br(a, &x, b, &y), c, &z);
            let r2 = br(b, &y, a + c, &br(a, &x, c, &z));
            if lhs
                .iter()
                .zip(r1.iter().zip(&r2))
                .any(|(l, (p, q))| *l != p.clone() + q.clone())
            {
                return false;
            }
            checked += 1;
        }
        true
    }

    /// Checks `B([x, y], z) = B(x, [y, z])` on all in-range basis triples and
    /// that every pairing `V_k × V_{−k}` is non-degenerate.
    pub fn verify_invariant_form(&self) -> Result<bool> {
        if !self.pentad().is_symmetric() {
            return Err(Error::AsymmetricPentad);
        }
        Ok(self.pairings_nondegenerate() && self.form_invariant())
    }

    /// Whether each `V_k × V_{−k}` pairing is square of full rank.
    pub fn pairings_nondegenerate(&self) -> bool {
        (0..=self.max_degree() as i64).all(|k| {
            let p = self.pairing(k).expect("in range");
            p.rows() == p.cols() && p.rank() == p.rows()
        })
    }

    fn form_invariant(&self) -> bool {
        let triples: Vec<(i64, usize, i64)> = self
            .range()
            .flat_map(|j| {
                let dim = self.dim(j);
                self.range().flat_map(move |i| (0..dim).map(move |y| (j, y, i)))
            })
            .filter(|&(j, _, i)| self.in_range(i + j))
            .collect();
        triples.into_par_iter().all(|(j, y, i)| {
            // −ᵗ(ad y|V_i) · G_{i+j} = G_i · ad y|V_{−i−j}
            let left = self.ad(j, i, y).expect("in range").transpose();
            let left = left.mul(&self.pairing(i + j).expect("in range")).expect("shapes");
            let right = self
                .pairing(i)
                .expect("in range")
                .mul(self.ad(j, -i - j, y).expect("in range"))
                .expect("shapes");
            left.add(&right).expect("shapes").is_zero()
        })
    }

    /// `V_{k+1} = [V_1, V_k]` and `V_{−k−1} = [V_{−1}, V_{−k}]` for
    /// `1 ≤ k < N`.
    pub fn check_generation(&self) -> bool {
        let n = self.pentad().n();
        (1..self.max_degree() as i64).all(|k| {
            let up: Vec<Matrix<T>> = (0..n).map(|i| self.ad_e(k, i).expect("in range").clone()).collect();
            let down: Vec<Matrix<T>> = (0..n).map(|i| self.ad_f(-k, i).expect("in range").clone()).collect();
            hstack(&up).rank() == self.dim(k + 1) && hstack(&down).rank() == self.dim(-k - 1)
        })
    }

    /// The evaluation maps `V_k → Hom(V_{∓1}, V_{k∓1})` are injective for
    /// `|k| ≥ 2`.
    pub fn check_transitivity(&self) -> bool {
        let n = self.pentad().n();
        (2..=self.max_degree() as i64).all(|k| {
            let up: Vec<Matrix<T>> = (0..n).map(|j| self.ad_f(k, j).expect("in range").clone()).collect();
            let down: Vec<Matrix<T>> = (0..n).map(|j| self.ad_e(-k, j).expect("in range").clone()).collect();
            vstack(&up).rank() == self.dim(k) && vstack(&down).rank() == self.dim(-k)
        })
    }

    /// Every nonzero structure constant `[x, y] ∋ z` has
    /// `wt z = wt x + wt y`.
    pub fn check_weight_additivity(&self) -> bool {
        self.range().all(|j| {
            self.range().filter(|m| self.in_range(j + m)).all(|m| {
                let wx = &self.component(j).expect("in range").weights;
                let wy = &self.component(m).expect("in range").weights;
                let wz = &self.component(j + m).expect("in range").weights;
                self.ad_all(j, m).expect("in range").iter().enumerate().all(|(x, t)| {
                    (0..t.rows()).all(|z| {
                        (0..t.cols()).all(|y| {
                            t.get(z, y).is_zero()
                                || wz[z]
                                    .iter()
                                    .zip(wx[x].iter().zip(&wy[y]))
                                    .all(|(c, (a, b))| *c == a.clone() + b.clone())
                        })
                    })
                })
            })
        })
    }
}

fn unit<T: Scalar>(dim: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); dim];
    v[i] = T::one();
    v
}

/// `Σ_z c_z · tables[z]`, as a `rows × cols` matrix.
fn combine<T: Scalar>(tables: &[Matrix<T>], coeffs: &[T], rows: usize, cols: usize) -> Matrix<T> {
    tables
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(Matrix::zeros(rows, cols), |acc, (t, c)| {
            acc.add(&t.scale(c)).expect("shapes")
        })
}

fn hstack<T: Scalar>(blocks: &[Matrix<T>]) -> Matrix<T> {
    Matrix::block_compose(&[blocks.to_vec()]).expect("equal row counts")
}

fn vstack<T: Scalar>(blocks: &[Matrix<T>]) -> Matrix<T> {
    let grid: Vec<Vec<Matrix<T>>> = blocks.iter().map(|b| vec![b.clone()]).collect();
    Matrix::block_compose(&grid).expect("equal column counts")
}
