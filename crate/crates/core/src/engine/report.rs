//! Structure reports and the prehomogeneity witness.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GradedAlgebra;
use crate::constructions;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pentad::CartanMatrix;
use crate::scalar::Scalar;

/// Attached to every report: what the comparisons below do and do not show.
pub const CERTIFICATION_NOTE: &str = "isomorphisms up to gradation are certified only through \
     gradation-insensitive invariants (dimensions, weights, center dimensions); no explicit maps are built";

/// A root space: the basis vectors of one degree sharing one weight.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSpace<T> {
    pub degree: i64,
    pub weight: Vec<T>,
    pub mult: usize,
}

/// Comparison of a regular pentad's algebra with `G(C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    /// `r − n`, the dimension of the central `gl_1` summand.
    pub center_dim: usize,
    /// Dimensions of `G(C)` built to the same truncation degree.
    pub contragredient_dims: Vec<(i64, usize)>,
    /// Dimensions agree for `k ≠ 0` and differ by `r − n` at `k = 0`.
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport<T> {
    pub max_degree: usize,
    pub dims: Vec<(i64, usize)>,
    /// `V_N = 0` and `V_{−N} = 0`, so nothing lies beyond the truncation.
    pub finite: bool,
    pub total_dim: Option<usize>,
    /// Sum of the computed dimensions; a lower bound when not finite.
    pub computed_dim: usize,
    pub truncated: bool,
    /// Joint kernel of `ad e_j`, `ad f_j` on `V_0`, which is `ker ᵗD`.
    pub center_dim_0: usize,
    /// Joint kernel dimensions on `V_m` for `|m| < N`.
    pub joint_kernel_dims: Vec<(i64, usize)>,
    pub roots: Vec<RootSpace<T>>,
    pub decomposition: Option<Decomposition>,
    pub note: &'static str,
}

impl<T: Scalar> GradedAlgebra<T> {
    pub fn structure_report(&self) -> Result<StructureReport<T>> {
        let top = self.max_degree() as i64;
        if (-top..=top).any(|k| self.component(k).is_none()) {
            return Err(Error::NotFullyExtended);
        }
        let dims = self.dims();
        let finite = self.dim(top) == 0 && self.dim(-top) == 0;
        let computed_dim: usize = dims.iter().map(|(_, d)| d).sum();
        let joint_kernel_dims: Vec<(i64, usize)> = (1 - top..top).map(|m| (m, self.joint_kernel_dim(m))).collect();
        let center_dim_0 = self.joint_kernel_dim(0);

        let mut roots = Vec::new();
        for k in (-top..=top).filter(|&k| k != 0) {
            let mut by_weight: BTreeMap<&Vec<T>, usize> = BTreeMap::new();
            for w in &self.component(k).expect("in range").weights {
                *by_weight.entry(w).or_default() += 1;
            }
            roots.extend(by_weight.into_iter().map(|(w, mult)| RootSpace {
                degree: k,
                weight: w.clone(),
                mult,
            }));
        }

        let decomposition = self.decomposition()?;
        Ok(StructureReport {
            max_degree: self.max_degree(),
            dims,
            finite,
            total_dim: finite.then_some(computed_dim),
            computed_dim,
            truncated: !finite,
            center_dim_0,
            joint_kernel_dims,
            roots,
            decomposition,
            note: CERTIFICATION_NOTE,
        })
    }

    /// `dim {x ∈ V_m : [e_j, x] = [f_j, x] = 0 for all j}`.
    pub fn joint_kernel_dim(&self, m: i64) -> usize {
        let n = self.pentad().n();
        let mut blocks: Vec<Vec<Matrix<T>>> = Vec::new();
        for i in 0..n {
            if let Some(e) = self.ad_e(m, i) {
                blocks.push(vec![e.clone()]);
            }
            if let Some(f) = self.ad_f(m, i) {
                blocks.push(vec![f.clone()]);
            }
        }
        let dim = self.dim(m);
        if blocks.is_empty() {
            return dim;
        }
        dim - Matrix::block_compose(&blocks).expect("equal column counts").rank()
    }

    fn decomposition(&self) -> Result<Option<Decomposition>> {
        let p = self.pentad();
        let c = p.cartan_matrix();
        if !c.is_invertible() {
            return Ok(None);
        }
        let g = constructions::from_contragredient(&c.matrix)?;
        let other = GradedAlgebra::build_local_part(&g).extend_with_cap(self.max_degree(), self.max_degree())?;
        let center_dim = p.r() - p.n();
        let contragredient_dims = other.dims();
        let matches =
            self.dims()
                .iter()
                .zip(&contragredient_dims)
                .all(|(&(k, a), &(_, b))| if k == 0 { a == b + center_dim } else { a == b });
        Ok(Some(Decomposition {
            center_dim,
            contragredient_dims,
            matches,
        }))
    }

    /// Looks for `x = Σ c_j e_j ∈ V_1` with `ad x : V_{−1} → V_0` injective.
    ///
    /// The all-ones vector is tried first, then `trials` random vectors with
    /// entries `p/q`, `|p| ≤ 5`, `1 ≤ q ≤ 5`.
    pub fn prehomogeneity_witness(&self, trials: usize, seed: u64) -> Option<Vec<T>> {
        let n = self.pentad().n();
        let h = self.h_vectors();
        let r = self.pentad().r();
        // [x, f_j] = c_j h_j
        let injective = |c: &[T]| {
            let cols: Vec<Vec<T>> = (0..n)
                .map(|j| h[j].iter().map(|v| v.clone() * c[j].clone()).collect())
                .collect();
            Matrix::from_columns(r, &cols).expect("h vectors have length r").rank() == n
        };
        let ones = vec![T::one(); n];
        if injective(&ones) {
            return Some(ones);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials).find_map(|_| {
            let c: Vec<T> = (0..n)
                .map(|_| T::from_int(rng.gen_range(-5..=5)) / T::from_int(rng.gen_range(1..=5)))
                .collect();
            injective(&c).then_some(c)
        })
    }

    pub fn cartan_matrix(&self) -> CartanMatrix<T> {
        self.pentad().cartan_matrix()
    }
}
