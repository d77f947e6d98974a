//! Positive and negative extensions of diagonal `𝔥^r`-modules.
//!
//! The positive extension of a base `U_0` (a direct sum of weight lines) is
//! the graded module `U_0 ⊕ U_1 ⊕ …` with `U_{m+1}` the image of
//! `V_1 ⊗ U_m` in `Hom(V_{−1}, U_m)`. With a one-dimensional base of weight
//! `λ` this is the lowest weight module `V_λ`; the negative extension of a
//! weight `λ` is the highest weight module `V^λ`. The step is the same one
//! the algebra is grown with, so only `h_i` and the columns of `D` enter.

use std::collections::BTreeMap;

use crate::engine::{grow, GradedAlgebra, GrowInput, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{dot, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Positive,
    Negative,
}

impl Direction {
    fn sign(self) -> i64 {
        match self {
            Direction::Positive => 1,
            Direction::Negative => -1,
        }
    }
}

/// A truncated positive or negative extension.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule<T> {
    direction: Direction,
    max_degree: usize,
    base_weights: Vec<Vec<T>>,
    h: Vec<Vec<T>>,
    /// Weights per degree.
    weights: BTreeMap<i64, Vec<Vec<T>>>,
    /// `(i, b)` per basis vector: it is `g_i · b`.
    provenance: BTreeMap<i64, Vec<(usize, usize)>>,
    /// `e_i : U_m → U_{m+1}`, keyed by `m`.
    act_e: BTreeMap<i64, Vec<Matrix<T>>>,
    /// `f_i : U_m → U_{m−1}`, keyed by `m`.
    act_f: BTreeMap<i64, Vec<Matrix<T>>>,
}

impl<T: Scalar> GradedModule<T> {
    /// Extends the diagonal module with the given base weights (ε-coordinates)
    /// to degrees `0..=N` (or `−N..=0`).
    pub fn extension(
        alg: &GradedAlgebra<T>,
        base_weights: &[Vec<T>],
        direction: Direction,
        to_degree: usize,
    ) -> Result<Self> {
        if to_degree > DEFAULT_DEGREE_CAP {
            return Err(Error::TruncationLimit {
                requested: to_degree,
                cap: DEFAULT_DEGREE_CAP,
            });
        }
        let p = alg.pentad();
        if base_weights.is_empty() {
            return Err(Error::DimensionMismatch("the base module must not be zero".into()));
        }
        if let Some(w) = base_weights.iter().find(|w| w.len() != p.r()) {
            return Err(Error::DimensionMismatch(format!(
                "weight of length {} for r = {}",
                w.len(),
                p.r()
            )));
        }
        let cols: Vec<Vec<T>> = (0..p.n()).map(|j| p.column(j)).collect();
        let s = direction.sign();
        let mut module = Self {
            direction,
            max_degree: to_degree,
            base_weights: base_weights.to_vec(),
            h: alg.h_vectors().to_vec(),
            weights: BTreeMap::from([(0, base_weights.to_vec())]),
            provenance: BTreeMap::from([(0, Vec::new())]),
            act_e: BTreeMap::new(),
            act_f: BTreeMap::new(),
        };
        for k in 0..to_degree as i64 {
            let m = s * k;
            let (outward_map, inward_map) = match direction {
                Direction::Positive => (&module.act_e, &module.act_f),
                Direction::Negative => (&module.act_f, &module.act_e),
            };
            let step = grow(&GrowInput {
                sign: s,
                weights: &module.weights[&m],
                inward: inward_map.get(&m).map(Vec::as_slice),
                outward_prev: outward_map.get(&(m - s)).map(Vec::as_slice),
                h: &module.h,
                d_cols: &cols,
            });
            module.weights.insert(m + s, step.weights);
            module.provenance.insert(m + s, step.provenance);
            let (outward_map, inward_map) = match direction {
                Direction::Positive => (&mut module.act_e, &mut module.act_f),
                Direction::Negative => (&mut module.act_f, &mut module.act_e),
            };
            outward_map.insert(m, step.outward);
            inward_map.insert(m + s, step.inward);
        }
        Ok(module)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn base_weights(&self) -> &[Vec<T>] {
        &self.base_weights
    }

    pub fn weights(&self, m: i64) -> Option<&[Vec<T>]> {
        self.weights.get(&m).map(Vec::as_slice)
    }

    pub fn dim(&self, m: i64) -> usize {
        self.weights.get(&m).map_or(0, Vec::len)
    }

    /// `(m, dim U_m)` in increasing degree.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.weights.iter().map(|(&m, w)| (m, w.len())).collect()
    }

    /// Whether the outermost computed component vanished.
    pub fn terminated(&self) -> bool {
        self.dim(self.direction.sign() * self.max_degree as i64) == 0
    }

    pub fn total_dim(&self) -> Option<usize> {
        self.terminated().then(|| self.weights.values().map(Vec::len).sum())
    }

    /// `e_i : U_m → U_{m+1}`.
    pub fn act_e(&self, m: i64, i: usize) -> Option<&Matrix<T>> {
        self.act_e.get(&m).map(|v| &v[i])
    }

    /// `f_i : U_m → U_{m−1}`.
    pub fn act_f(&self, m: i64, i: usize) -> Option<&Matrix<T>> {
        self.act_f.get(&m).map(|v| &v[i])
    }

    /// Checks `e_i f_j − f_j e_i = δ_ij h_i` on every `U_m` where both
    /// composites are defined (a missing map counts as zero only at the
    /// closed end of the module).
    pub fn verify_relations(&self) -> bool {
        let n = self.h.len();
        let s = self.direction.sign();
        (0..self.max_degree as i64).map(|k| s * k).all(|m| {
            let dim = self.dim(m);
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let ef = match (self.act_f(m, j), self.act_e(m - 1, i)) {
                        (Some(f), Some(e)) => e.mul(f).expect("shapes"),
                        _ => Matrix::zeros(dim, dim),
                    };
                    let fe = match (self.act_e(m, i), self.act_f(m + 1, j)) {
                        (Some(e), Some(f)) => f.mul(e).expect("shapes"),
                        _ => Matrix::zeros(dim, dim),
                    };
                    let mut want = Matrix::zeros(dim, dim);
                    if i == j {
                        for (t, w) in self.weights[&m].iter().enumerate() {
                            want.set(t, t, dot(&self.h[i], w));
                        }
                    }
                    ef.sub(&fe).expect("shapes") == want
                })
            })
        })
    }

    /// `U_{m±1} → Hom(V_{∓1}, U_m)` is injective for every computed step.
    pub fn check_transitivity(&self) -> bool {
        let n = self.h.len();
        let s = self.direction.sign();
        (1..=self.max_degree as i64).map(|k| s * k).all(|m| {
            let inward: Vec<Vec<Matrix<T>>> = (0..n)
                .map(|j| {
                    vec![match self.direction {
                        Direction::Positive => self.act_f(m, j),
                        Direction::Negative => self.act_e(m, j),
                    }
                    .expect("computed")
                    .clone()]
                })
                .collect();
            Matrix::block_compose(&inward).expect("equal widths").rank() == self.dim(m)
        })
    }
}

/// `V_λ` as the positive extension of one weight line.
pub fn positive_extension<T: Scalar>(
    alg: &GradedAlgebra<T>,
    weight: &[T],
    to_degree: usize,
) -> Result<GradedModule<T>> {
    GradedModule::extension(alg, &[weight.to_vec()], Direction::Positive, to_degree)
}

/// `V^λ` as the negative extension of one weight line.
pub fn negative_extension<T: Scalar>(
    alg: &GradedAlgebra<T>,
    weight: &[T],
    to_degree: usize,
) -> Result<GradedModule<T>> {
    GradedModule::extension(alg, &[weight.to_vec()], Direction::Negative, to_degree)
}

/// The invariant pairing `U_m × U′_{−m}` between a positive extension and a
/// negative one with opposite base weights, normalized by
/// `⟨v_λ, v^{−λ}⟩ = 1` and extended by `⟨e_i · b, ψ⟩ = −⟨b, e_i · ψ⟩`.
///
/// Entry `m` of the result has rows indexed by `U_m`.
pub fn module_pairing<T: Scalar>(pos: &GradedModule<T>, neg: &GradedModule<T>) -> Result<Vec<Matrix<T>>> {
    if pos.direction != Direction::Positive || neg.direction != Direction::Negative {
        return Err(Error::WeightMismatch(
            "expected a positive and a negative extension".into(),
        ));
    }
    let opposite = pos.base_weights.len() == neg.base_weights.len()
        && pos
            .base_weights
            .iter()
            .zip(&neg.base_weights)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.clone() + y.clone() == T::zero()));
    if !opposite {
        return Err(Error::WeightMismatch(format!(
            "{:?} vs {:?}",
            pos.base_weights, neg.base_weights
        )));
    }
    if pos.max_degree != neg.max_degree {
        return Err(Error::DimensionMismatch(
            "modules are truncated at different degrees".into(),
        ));
    }
    let mut out = vec![Matrix::identity(pos.base_weights.len())];
    for m in 0..pos.max_degree as i64 {
        let prev = &out[m as usize];
        let rows = &pos.provenance[&(m + 1)];
        let mut next = Matrix::zeros(rows.len(), neg.dim(-m - 1));
        for (x, &(i, b)) in rows.iter().enumerate() {
            let e = neg.act_e(-m - 1, i).expect("computed");
            for (c, v) in e.transpose().mul_vec(prev.row(b)).into_iter().enumerate() {
                if !v.is_zero() {
                    next.set(x, c, -v);
                }
            }
        }
        out.push(next);
    }
    Ok(out)
}
