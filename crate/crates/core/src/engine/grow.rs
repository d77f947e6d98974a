//! One step of the transitive extension, shared by the algebra and by the
//! weight modules.
//!
//! Given the outermost component `W_K` (degree `K`, side `s = ±1`), the next
//! component `W_{K+s}` is the span of the candidates `g_i · b` (`g_i = e_i`
//! for `s = +1`, `f_i` for `s = −1`, `b` a basis vector of `W_K`), realised
//! inside `Hom(V_{−s}, W_K)` through
//!
//! ```text
//! g′_j · (g_i · b) = δ_ij · (−s) · (h_i · wt b) · b + g_i · (g′_j · b)
//! ```
//!
//! where `g′_j` is the opposite generator. Candidates of different weights
//! are independent, so each weight block is reduced on its own.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::linalg::Matrix;
use crate::scalar::{dot, mul, Scalar};

pub(crate) struct GrowInput<'a, T> {
    /// `+1` when growing upwards, `−1` when growing downwards.
    pub sign: i64,
    /// Weights of the basis of `W_K`.
    pub weights: &'a [Vec<T>],
    /// `g′_j : W_K → W_{K−s}`, absent when `W_{K−s}` is zero.
    pub inward: Option<&'a [Matrix<T>]>,
    /// `g_i : W_{K−s} → W_K`, paired with `inward`.
    pub outward_prev: Option<&'a [Matrix<T>]>,
    /// `h_i` in ε-coordinates.
    pub h: &'a [Vec<T>],
    /// Columns of `D`.
    pub d_cols: &'a [Vec<T>],
}

pub(crate) struct GrowOutput<T> {
    pub weights: Vec<Vec<T>>,
    /// `(i, b)`: the new basis vector is `g_i · b`.
    pub provenance: Vec<(usize, usize)>,
    /// `g_i : W_K → W_{K+s}` for each `i`.
    pub outward: Vec<Matrix<T>>,
    /// `g′_j : W_{K+s} → W_K` for each `j`.
    pub inward: Vec<Matrix<T>>,
}

struct Block<T> {
    weight: Vec<T>,
    /// Candidate indices `i · dim + b`, increasing.
    candidates: Vec<usize>,
    /// Positions (within `candidates`) of the selected ones.
    selected: Vec<usize>,
    /// Coordinates of every candidate against the selected ones.
    coords: Vec<Vec<T>>,
}

pub(crate) fn grow<T: Scalar>(input: &GrowInput<'_, T>) -> GrowOutput<T> {
    let n = input.d_cols.len();
    let dim = input.weights.len();
    let s = T::from_int(input.sign);

    // g_i ∘ g′_j on W_K, for all i, j.
    let products: Vec<Vec<Option<Matrix<T>>>> = match (input.outward_prev, input.inward) {
        (Some(out), Some(inn)) => (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| Some(out[i].mul(&inn[j]).expect("compatible shapes")))
                    .collect()
            })
            .collect(),
        _ => vec![vec![None; n]; n],
    };
    // (h_i · wt b) for each i and b.
    let h_dot: Vec<Vec<T>> = input
        .h
        .iter()
        .map(|h| input.weights.iter().map(|w| dot(h, w)).collect())
        .collect();

    // Slice j of the Hom-vector of candidate (i, b), as a vector in W_K.
    let slice = |i: usize, b: usize, j: usize| -> Vec<T> {
        let mut v = match &products[i][j] {
            Some(m) => m.column(b),
            None => vec![T::zero(); dim],
        };
        if i == j {
            let c = -mul(&s, &h_dot[i][b]);
            v[b] = v[b].clone() + c;
        }
        v
    };

    let shifted =
        |w: &[T], col: &[T], sign: &T| -> Vec<T> { w.iter().zip(col).map(|(a, c)| a.clone() + mul(sign, c)).collect() };

    let mut by_weight: BTreeMap<Vec<T>, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        for (b, w) in input.weights.iter().enumerate() {
            by_weight
                .entry(shifted(w, &input.d_cols[i], &s))
                .or_default()
                .push(i * dim + b);
        }
    }
    let mut index_of_weight: HashMap<&[T], Vec<usize>> = HashMap::new();
    for (t, w) in input.weights.iter().enumerate() {
        index_of_weight.entry(w.as_slice()).or_default().push(t);
    }

    let neg_s = -s.clone();
    let blocks: Vec<Block<T>> = by_weight
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(weight, candidates)| {
            // Only coordinates (j, t) with wt t = weight − s·d_j can be nonzero.
            let rows: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| {
                    let target = shifted(&weight, &input.d_cols[j], &neg_s);
                    index_of_weight
                        .get(target.as_slice())
                        .into_iter()
                        .flatten()
                        .map(move |&t| (j, t))
                })
                .collect();
            let mut m = Matrix::zeros(rows.len(), candidates.len());
            for (c, &cand) in candidates.iter().enumerate() {
                let (i, b) = (cand / dim, cand % dim);
                let slices: Vec<Option<Vec<T>>> = {
                    let mut cache = vec![None; n];
                    for &(j, _) in &rows {
                        if cache[j].is_none() {
                            cache[j] = Some(slice(i, b, j));
                        }
                    }
                    cache
                };
                for (row, &(j, t)) in rows.iter().enumerate() {
                    let v = &slices[j].as_ref().expect("filled above")[t];
                    if !v.is_zero() {
                        m.set(row, c, v.clone());
                    }
                }
            }
            let (r, pivots) = m.rref();
            let coords = (0..candidates.len())
                .map(|c| (0..pivots.len()).map(|row| r.get(row, c).clone()).collect())
                .collect();
            Block {
                weight,
                candidates,
                selected: pivots,
                coords,
            }
        })
        .collect();

    let new_dim: usize = blocks.iter().map(|b| b.selected.len()).sum();
    let mut weights = Vec::with_capacity(new_dim);
    let mut provenance = Vec::with_capacity(new_dim);
    let mut outward = vec![Matrix::zeros(new_dim, dim); n];
    let mut inward = vec![Matrix::zeros(dim, new_dim); n];
    let mut offset = 0;
    for block in &blocks {
        for &p in &block.selected {
            let cand = block.candidates[p];
            let (i, b) = (cand / dim, cand % dim);
            let x = weights.len();
            weights.push(block.weight.clone());
            provenance.push((i, b));
            for (j, inw) in inward.iter_mut().enumerate() {
                for (t, v) in slice(i, b, j).into_iter().enumerate() {
                    if !v.is_zero() {
                        inw.set(t, x, v);
                    }
                }
            }
        }
        for (c, &cand) in block.candidates.iter().enumerate() {
            let (i, b) = (cand / dim, cand % dim);
            for (k, v) in block.coords[c].iter().enumerate() {
                if !v.is_zero() {
                    outward[i].set(offset + k, b, v.clone());
                }
            }
        }
        offset += block.selected.len();
    }
    GrowOutput {
        weights,
        provenance,
        outward,
        inward,
    }
}
