//! The graded Lie algebra `L(r, n; A, D, Γ) = ⊕ V_k`, truncated to
//! `|k| ≤ N`.
//!
//! `V_0 = 𝔥^r` with basis `ε_1, …, ε_r`, `V_1` has basis `e_j` of weight
//! `d_j` (column `j` of `D`) and `V_{−1}` has basis `f_j` of weight `−d_j`.
//! Deeper components are grown by the transitive extension: `V_{k+1}` is the
//! image of `V_1 ⊗ V_k` in `Hom(V_{−1}, V_k)`, and the negative side mirrors
//! it. Every basis vector of `V_{±(k+1)}` is one of the brackets
//! `[e_i, b]` (resp. `[f_i, b]`), picked greedily in `(i, b)` order, and each
//! component is sorted by weight.
//!
//! All bracket tables and the invariant pairing are computed when the algebra
//! is built; a [`GradedAlgebra`] is immutable afterwards.

mod grow;
mod report;
mod tables;
mod verify;

use std::collections::BTreeMap;

pub(crate) use grow::{grow, GrowInput};
pub use report::{Decomposition, RootSpace, StructureReport, CERTIFICATION_NOTE};
pub use verify::Sampling;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pentad::Pentad;
use crate::scalar::Scalar;

/// Truncation degree used when none is given.
pub const DEFAULT_MAX_DEGREE: usize = 6;
/// Largest truncation degree [`GradedAlgebra::extend`] accepts by default.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// How a basis vector of a component was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `ε_k` in `V_0`.
    Cartan(usize),
    /// `e_j` in `V_1` or `f_j` in `V_{−1}`.
    Generator(usize),
    /// `[e_i, b]` (positive side) or `[f_i, b]` (negative side) with `b` the
    /// `source`-th basis vector one degree closer to zero.
    Bracket { generator: usize, source: usize },
}

/// One homogeneous component `V_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Component<T> {
    pub degree: i64,
    pub weights: Vec<Vec<T>>,
    pub provenance: Vec<Provenance>,
}

impl<T> Component<T> {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// The part of the construction that [`GradedAlgebra::extend`] grows; the
/// derived tables are recomputed from it.
#[derive(Clone, Debug)]
struct Skeleton<T> {
    top: usize,
    components: BTreeMap<i64, Component<T>>,
    /// `ad e_i : V_m → V_{m+1}`, keyed by `m`.
    ad_e: BTreeMap<i64, Vec<Matrix<T>>>,
    /// `ad f_i : V_m → V_{m−1}`, keyed by `m`.
    ad_f: BTreeMap<i64, Vec<Matrix<T>>>,
}

/// `L(r, n; A, D, Γ)` truncated to `|k| ≤ N`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<T> {
    pentad: Pentad<T>,
    h: Vec<Vec<T>>,
    skeleton: Skeleton<T>,
    /// `ad(x) : V_m → V_{m+j}` for every basis vector `x` of `V_j`, stored at
    /// `[j + N][m + N]`, `None` when `m + j` is out of range.
    ad: Vec<Vec<Option<Vec<Matrix<T>>>>>,
    /// `B : V_k × V_{−k}` for `k = 0..=N`, rows indexed by `V_k`.
    pairing: Vec<Matrix<T>>,
}

impl<T: Scalar> GradedAlgebra<T> {
    /// `V_{−1} ⊕ V_0 ⊕ V_1` with the brackets fixed by the pentad.
    pub fn build_local_part(p: &Pentad<T>) -> Self {
        let (r, n) = (p.r(), p.n());
        let h = p.phi_map_vectors();
        let d = p.d();
        let cols: Vec<Vec<T>> = (0..n).map(|j| p.column(j)).collect();
        let neg = |v: &[T]| v.iter().map(|x| -x.clone()).collect::<Vec<T>>();

        let mut components = BTreeMap::new();
        components.insert(
            0,
            Component {
                degree: 0,
                weights: vec![vec![T::zero(); r]; r],
                provenance: (0..r).map(Provenance::Cartan).collect(),
            },
        );
        components.insert(
            1,
            Component {
                degree: 1,
                weights: cols.clone(),
                provenance: (0..n).map(Provenance::Generator).collect(),
            },
        );
        components.insert(
            -1,
            Component {
                degree: -1,
                weights: cols.iter().map(|c| neg(c)).collect(),
                provenance: (0..n).map(Provenance::Generator).collect(),
            },
        );

        // [e_i, ε_k] = −d_ki e_i and [f_i, ε_k] = d_ki f_i.
        let mut e0 = Vec::with_capacity(n);
        let mut f0 = Vec::with_capacity(n);
        // [e_i, f_j] = δ_ij h_i and [f_i, e_j] = −δ_ij h_i.
        let mut em1 = Vec::with_capacity(n);
        let mut f1 = Vec::with_capacity(n);
        for (i, hi) in h.iter().enumerate() {
            let mut e = Matrix::zeros(n, r);
            let mut f = Matrix::zeros(n, r);
            for k in 0..r {
                e.set(i, k, -d.get(k, i).clone());
                f.set(i, k, d.get(k, i).clone());
            }
            e0.push(e);
            f0.push(f);
            let mut up = Matrix::zeros(r, n);
            let mut down = Matrix::zeros(r, n);
            for (k, v) in hi.iter().enumerate() {
                up.set(k, i, v.clone());
                down.set(k, i, -v.clone());
            }
            em1.push(up);
            f1.push(down);
        }
        let skeleton = Skeleton {
            top: 1,
            components,
            ad_e: BTreeMap::from([(0, e0), (-1, em1)]),
            ad_f: BTreeMap::from([(0, f0), (1, f1)]),
        };
        Self::seal(p.clone(), h, skeleton)
    }

    /// Builds the algebra up to degree `max_degree` (at least 1) under the
    /// default cap.
    pub fn build(p: &Pentad<T>, max_degree: usize) -> Result<Self> {
        Self::build_local_part(p).extend(max_degree)
    }

    pub fn extend(&self, to_degree: usize) -> Result<Self> {
        self.extend_with_cap(to_degree, DEFAULT_DEGREE_CAP)
    }

    /// Grows both sides until `|k| ≤ to_degree`.
    pub fn extend_with_cap(&self, to_degree: usize, cap: usize) -> Result<Self> {
        if to_degree > cap {
            return Err(Error::TruncationLimit {
                requested: to_degree,
                cap,
            });
        }
        let mut sk = self.skeleton.clone();
        if to_degree < sk.top {
            return Err(Error::DimensionMismatch(format!(
                "cannot extend an algebra of degree {} down to {to_degree}",
                sk.top
            )));
        }
        let cols: Vec<Vec<T>> = (0..self.pentad.n()).map(|j| self.pentad.column(j)).collect();
        while sk.top < to_degree {
            let k = sk.top as i64;
            let (up, down) = rayon::join(
                || {
                    grow(&GrowInput {
                        sign: 1,
                        weights: &sk.components[&k].weights,
                        inward: sk.ad_f.get(&k).map(Vec::as_slice),
                        outward_prev: sk.ad_e.get(&(k - 1)).map(Vec::as_slice),
                        h: &self.h,
                        d_cols: &cols,
                    })
                },
                || {
                    grow(&GrowInput {
                        sign: -1,
                        weights: &sk.components[&-k].weights,
                        inward: sk.ad_e.get(&-k).map(Vec::as_slice),
                        outward_prev: sk.ad_f.get(&(1 - k)).map(Vec::as_slice),
                        h: &self.h,
                        d_cols: &cols,
                    })
                },
            );
            let bracket = |(generator, source)| Provenance::Bracket { generator, source };
            sk.components.insert(
                k + 1,
                Component {
                    degree: k + 1,
                    weights: up.weights,
                    provenance: up.provenance.into_iter().map(bracket).collect(),
                },
            );
            sk.components.insert(
                -k - 1,
                Component {
                    degree: -k - 1,
                    weights: down.weights,
                    provenance: down.provenance.into_iter().map(bracket).collect(),
                },
            );
            sk.ad_e.insert(k, up.outward);
            sk.ad_f.insert(k + 1, up.inward);
            sk.ad_f.insert(-k, down.outward);
            sk.ad_e.insert(-k - 1, down.inward);
            sk.top += 1;
        }
        Ok(Self::seal(self.pentad.clone(), self.h.clone(), sk))
    }

    fn seal(pentad: Pentad<T>, h: Vec<Vec<T>>, skeleton: Skeleton<T>) -> Self {
        let ad = tables::adjoint_tables(&skeleton);
        let pairing = tables::pairing_tables(&pentad, &skeleton);
        Self {
            pentad,
            h,
            skeleton,
            ad,
            pairing,
        }
    }

    pub fn pentad(&self) -> &Pentad<T> {
        &self.pentad
    }

    /// The truncation degree `N`.
    pub fn max_degree(&self) -> usize {
        self.skeleton.top
    }

    pub fn h_vectors(&self) -> &[Vec<T>] {
        &self.h
    }

    fn in_range(&self, k: i64) -> bool {
        k.unsigned_abs() as usize <= self.skeleton.top
    }

    pub fn component(&self, k: i64) -> Option<&Component<T>> {
        self.skeleton.components.get(&k)
    }

    /// `dim V_k`, zero outside the truncation.
    pub fn dim(&self, k: i64) -> usize {
        self.component(k).map_or(0, Component::dim)
    }

    /// `(k, dim V_k)` for `k = −N..=N`.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.skeleton.components.iter().map(|(&k, c)| (k, c.dim())).collect()
    }

    /// `ad e_i : V_m → V_{m+1}`.
    pub fn ad_e(&self, m: i64, i: usize) -> Option<&Matrix<T>> {
        self.skeleton.ad_e.get(&m).map(|v| &v[i])
    }

    /// `ad f_i : V_m → V_{m−1}`.
    pub fn ad_f(&self, m: i64, i: usize) -> Option<&Matrix<T>> {
        self.skeleton.ad_f.get(&m).map(|v| &v[i])
    }

    /// `ad(x) : V_m → V_{m+j}` for the `x`-th basis vector of `V_j`.
    pub fn ad(&self, j: i64, m: i64, x: usize) -> Option<&Matrix<T>> {
        self.ad_all(j, m).map(|v| &v[x])
    }

    pub(crate) fn ad_all(&self, j: i64, m: i64) -> Option<&[Matrix<T>]> {
        if !self.in_range(j) || !self.in_range(m) {
            return None;
        }
        let n = self.skeleton.top as i64;
        self.ad[(j + n) as usize][(m + n) as usize].as_deref()
    }

    /// Coordinates in `V_{j+k}` of the bracket of two basis vectors.
    pub fn bracket_basis(&self, j: i64, x: usize, k: i64, y: usize) -> Option<Vec<T>> {
        self.ad(j, k, x).map(|m| m.column(y))
    }

    /// `[x, y]` for `x ∈ V_j`, `y ∈ V_k` given in coordinates.
    pub fn bracket(&self, j: i64, x: &[T], k: i64, y: &[T]) -> Option<Vec<T>> {
        let tables = self.ad_all(j, k)?;
        let mut out = vec![T::zero(); self.dim(j + k)];
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(tables[a].mul_vec(y)) {
                *o = o.clone() + c.clone() * v;
            }
        }
        Some(out)
    }

    /// The invariant pairing `V_k × V_{−k}` (rows indexed by `V_k`).
    pub fn pairing(&self, k: i64) -> Option<Matrix<T>> {
        if !self.in_range(k) {
            return None;
        }
        let p = &self.pairing[k.unsigned_abs() as usize];
        Some(if k >= 0 { p.clone() } else { p.transpose() })
    }

    /// A copy with one structure constant of `[e_1, f_1]` perturbed. Used to
    /// check that the verification suites notice a broken table.
    #[doc(hidden)]
    pub fn with_corrupted_bracket(mut self) -> Self {
        let n = self.skeleton.top;
        if let Some(tables) = self.ad[n + 1][n - 1].as_mut() {
            let m = &mut tables[0];
            if m.rows() > 0 && m.cols() > 0 {
                let v = m.get(0, 0).clone() + T::one();
                m.set(0, 0, v);
            }
        }
        self
    }
}
