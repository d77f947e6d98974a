//! Pentads of Cartan type and the diagnostics computed from their matrices.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{dot, mul, Scalar};

/// Largest `n` accepted by the permutation search in [`cartan_equivalent`].
pub const EQUIVALENCE_SEARCH_LIMIT: usize = 10;

/// `P(r, n; A, D, Γ)`: `A` is `r×r` invertible, `D` is `r×n`, and
/// `Γ = diag(γ_1, …, γ_n)` has no zero on its diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Pentad<T> {
    a: Matrix<T>,
    d: Matrix<T>,
    gamma: Vec<T>,
}

/// A Cartan matrix together with a short note on where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanMatrix<T> {
    pub matrix: Matrix<T>,
    pub source: Option<String>,
}

impl<T: Scalar> CartanMatrix<T> {
    pub fn new(matrix: Matrix<T>) -> Self {
        Self { matrix, source: None }
    }

    pub fn with_source(matrix: Matrix<T>, source: impl Into<String>) -> Self {
        Self {
            matrix,
            source: Some(source.into()),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }
}

/// Everything [`Pentad::analyze`] derives from the defining matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct PentadReport<T> {
    pub cartan: CartanMatrix<T>,
    pub regular: bool,
    pub rank_d: usize,
    pub ann_dim: usize,
    pub phi_image_dim: usize,
    pub transitive: bool,
    pub symmetric: bool,
    pub h_vectors: Vec<Vec<T>>,
}

/// Witness of `C = Γ̃ · ᵗE_π · C′ · E_π`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness<T> {
    /// Diagonal of `Γ̃`.
    pub gamma: Vec<T>,
    /// `π` in one-line notation on `1..=n`.
    pub permutation: Vec<usize>,
}

impl<T: Scalar> Pentad<T> {
    /// Validates and builds a pentad from a full `Γ` matrix.
    pub fn new(a: Matrix<T>, d: Matrix<T>, gamma: Matrix<T>) -> Result<Self> {
        if !gamma.is_diagonal() {
            return Err(Error::NonDiagonalGamma);
        }
        Self::with_diagonal(a, d, gamma.diagonal())
    }

    /// Builds a pentad from the diagonal of `Γ`.
    pub fn with_diagonal(a: Matrix<T>, d: Matrix<T>, gamma: Vec<T>) -> Result<Self> {
        let (r, n) = (d.rows(), d.cols());
        if r == 0 || n == 0 {
            return Err(Error::EmptyPentad);
        }
        if a.rows() != r || a.cols() != r {
            return Err(Error::DimensionMismatch(format!(
                "A is {}x{} but D has {r} rows",
                a.rows(),
                a.cols()
            )));
        }
        if gamma.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "Gamma has {} diagonal entries but D has {n} columns",
                gamma.len()
            )));
        }
        if gamma.iter().any(T::is_zero) {
            return Err(Error::SingularGamma);
        }
        if !a.is_invertible() {
            return Err(Error::SingularA);
        }
        Ok(Self { a, d, gamma })
    }

    pub fn r(&self) -> usize {
        self.d.rows()
    }

    pub fn n(&self) -> usize {
        self.d.cols()
    }

    pub fn a(&self) -> &Matrix<T> {
        &self.a
    }

    pub fn d(&self) -> &Matrix<T> {
        &self.d
    }

    pub fn gamma(&self) -> &[T] {
        &self.gamma
    }

    pub fn gamma_matrix(&self) -> Matrix<T> {
        Matrix::diag(&self.gamma)
    }

    /// Whether `A = ᵗA`.
    pub fn is_symmetric(&self) -> bool {
        self.a.is_symmetric()
    }

    /// Column `j` of `D`, the weight of `e_j`.
    pub fn column(&self, j: usize) -> Vec<T> {
        self.d.column(j)
    }

    /// `C(A, D, Γ) = Γ · ᵗD · A · D`.
    pub fn cartan_matrix(&self) -> CartanMatrix<T> {
        let c = self
            .gamma_matrix()
            .mul(&self.d.transpose())
            .and_then(|m| m.mul(&self.a))
            .and_then(|m| m.mul(&self.d))
            .expect("pentad dimensions are validated on construction");
        CartanMatrix::new(c)
    }

    /// `h_i = γ_i · ᵗA · d_i` in ε-coordinates, one vector per column of `D`.
    pub fn phi_map_vectors(&self) -> Vec<Vec<T>> {
        let at = self.a.transpose();
        (0..self.n())
            .map(|i| {
                at.mul_vec(&self.d.column(i))
                    .iter()
                    .map(|v| mul(v, &self.gamma[i]))
                    .collect()
            })
            .collect()
    }

    /// `B_A(x, y) = ᵗx · ᵗA⁻¹ · y` on `𝔥^r`.
    pub fn b_a_matrix(&self) -> Matrix<T> {
        self.a.transpose().inverse().expect("A is invertible")
    }

    pub fn analyze(&self) -> PentadReport<T> {
        let cartan = self.cartan_matrix();
        let rank_d = self.d.rank();
        let zero_column = (0..self.n()).any(|j| self.d.column(j).iter().all(T::is_zero));
        PentadReport {
            regular: cartan.is_invertible(),
            cartan,
            rank_d,
            ann_dim: self.r() - rank_d,
            phi_image_dim: rank_d,
            transitive: rank_d == self.r() && !zero_column,
            symmetric: self.is_symmetric(),
            h_vectors: self.phi_map_vectors(),
        }
    }

    /// Checks `[h_i, e_j] = C_ij e_j`, `[h_i, f_j] = −C_ij f_j` and
    /// `B_A(h_i, h_j) = γ_j C_ij` for all `i, j`.
    pub fn phi_pairing_identity_check(&self) -> bool {
        let c = self.cartan_matrix().matrix;
        let h = self.phi_map_vectors();
        let b = self.b_a_matrix();
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let dj = self.d.column(j);
                // ε_k acts on e_j by d_kj and on f_j by −d_kj.
                let on_e = dot(&h[i], &dj);
                let neg: Vec<T> = dj.iter().map(|v| -v.clone()).collect();
                let on_f = dot(&h[i], &neg);
                let form = dot(&h[i], &b.mul_vec(&h[j]));
                on_e == *c.get(i, j) && on_f == -c.get(i, j).clone() && form == mul(&self.gamma[j], c.get(i, j))
            })
        })
    }
}

/// `P(r+r′, n+n′; A⊕A′, D⊕D′, Γ⊕Γ′)`.
pub fn direct_sum<T: Scalar>(p: &Pentad<T>, q: &Pentad<T>) -> Pentad<T> {
    let mut gamma = p.gamma.clone();
    gamma.extend(q.gamma.iter().cloned());
    Pentad {
        a: Matrix::block_diag(&p.a, &q.a),
        d: Matrix::block_diag(&p.d, &q.d),
        gamma,
    }
}

/// `P(r, n; A, D · E_π, Γ′)`.
pub fn shuffle_columns<T: Scalar>(p: &Pentad<T>, pi: &[usize], new_gamma: &Matrix<T>) -> Result<Pentad<T>> {
    if pi.len() != p.n() {
        return Err(Error::NotAPermutation(p.n()));
    }
    let e = Matrix::permutation_matrix(pi)?;
    if !new_gamma.is_diagonal() {
        return Err(Error::NonDiagonalGamma);
    }
    if new_gamma.rows() != p.n() {
        return Err(Error::DimensionMismatch(format!(
            "new Gamma is {}x{}, expected {n}x{n}",
            new_gamma.rows(),
            new_gamma.cols(),
            n = p.n()
        )));
    }
    Pentad::new(p.a.clone(), p.d.mul(&e)?, new_gamma.clone())
}

/// Searches for `π` and an invertible diagonal `Γ̃` with
/// `C1 = Γ̃ · ᵗE_π · C2 · E_π`.
///
/// Returns `Ok(None)` when no such pair exists. All `n!` permutations are
/// tried, so `n` is limited to [`EQUIVALENCE_SEARCH_LIMIT`].
pub fn cartan_equivalent<T: Scalar>(
    c1: &CartanMatrix<T>,
    c2: &CartanMatrix<T>,
) -> Result<Option<EquivalenceWitness<T>>> {
    let (x, y) = (&c1.matrix, &c2.matrix);
    if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
        return Err(Error::SizeMismatch(x.rows(), y.rows()));
    }
    let n = x.rows();
    if n > EQUIVALENCE_SEARCH_LIMIT {
        return Err(Error::SearchTooLarge {
            n,
            limit: EQUIVALENCE_SEARCH_LIMIT,
        });
    }
    for perm in (0..n).permutations(n) {
        // (ᵗE_π C2 E_π)_ij = C2[π⁻¹(i), π⁻¹(j)]
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        if let Some(gamma) = row_scaling(x, y, &inv) {
            return Ok(Some(EquivalenceWitness {
                gamma,
                permutation: perm.iter().map(|p| p + 1).collect(),
            }));
        }
    }
    Ok(None)
}

/// Nonzero `g` with `x_ij = g_i · y[inv(i), inv(j)]`, if one exists.
fn row_scaling<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>, inv: &[usize]) -> Option<Vec<T>> {
    let n = x.rows();
    let mut gamma = Vec::with_capacity(n);
    for i in 0..n {
        let src = |j: usize| y.get(inv[i], inv[j]);
        let g = match (0..n).find(|&j| !src(j).is_zero()) {
            Some(j) => x.get(i, j).clone() / src(j).clone(),
            None => T::one(),
        };
        if g.is_zero() || (0..n).any(|j| *x.get(i, j) != mul(&g, src(j))) {
            return None;
        }
        gamma.push(g);
    }
    Some(gamma)
}
