//! Builders for pentads attached to contragredient, semisimple and reductive
//! data, weight appending, and the scalar-augmented embeddings.
//!
//! Root norms use `(α, α) = 2` for long roots.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pentad::{CartanMatrix, Pentad};
use crate::scalar::Scalar;

/// A finite-type Cartan matrix `X` with the norms `(α_i, α_i)` of its simple
/// roots.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteCartanData<T> {
    x: Matrix<T>,
    root_norms: Vec<T>,
}

impl<T: Scalar> FiniteCartanData<T> {
    /// Checks that `X · Γ` is symmetric for `Γ = diag(2 / (α_i, α_i))`, that
    /// the diagonal of `X` is 2 and that off-diagonal entries are `≤ 0`.
    pub fn new(x: Matrix<T>, root_norms: Vec<T>) -> Result<Self> {
        let l = x.rows();
        if !x.is_square() || root_norms.len() != l {
            return Err(Error::DimensionMismatch(format!(
                "X is {}x{} with {} root norms",
                x.rows(),
                x.cols(),
                root_norms.len()
            )));
        }
        if root_norms.iter().any(|v| *v <= T::zero()) {
            return Err(Error::NotSymmetrizable);
        }
        let two = T::from_int(2);
        let shape_ok = (0..l).all(|i| {
            (0..l).all(|j| {
                if i == j {
                    *x.get(i, j) == two
                } else {
                    *x.get(i, j) <= T::zero()
                }
            })
        });
        let data = Self { x, root_norms };
        if !shape_ok || !data.symmetrized().is_symmetric() {
            return Err(Error::NotSymmetrizable);
        }
        Ok(data)
    }

    /// Builds `X` from the Gram matrix of the simple roots:
    /// `X_ij = 2 (α_i, α_j) / (α_i, α_i)`.
    pub fn from_gram(gram: &Matrix<T>) -> Result<Self> {
        let l = gram.rows();
        let norms = gram.diagonal();
        let mut x = Matrix::zeros(l, l);
        for (i, norm) in norms.iter().enumerate() {
            for j in 0..l {
                x.set(i, j, T::from_int(2) * gram.get(i, j).clone() / norm.clone());
            }
        }
        Self::new(x, norms)
    }

    /// Type `A_l`, `B_l`, `C_l`, `D_l`, `E_6..8`, `F_4` or `G_2`, with
    /// Bourbaki numbering.
    pub fn of_type(kind: &str, rank: usize) -> Result<Self> {
        let unknown = || Error::UnknownCartanType(format!("{kind}{rank}"));
        let l = rank;
        let mut g = Matrix::<T>::zeros(l, l);
        let int = T::from_int;
        let half = || T::one() / int(2);
        let link = |g: &mut Matrix<T>, i: usize, j: usize, v: T| {
            g.set(i, j, v.clone());
            g.set(j, i, v);
        };
        match kind.to_ascii_uppercase().as_str() {
            "A" if l >= 1 => {
                for i in 0..l {
                    g.set(i, i, int(2));
                }
                for i in 1..l {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            "B" if l >= 2 => {
                for i in 0..l {
                    g.set(i, i, int(2));
                }
                g.set(l - 1, l - 1, int(1));
                for i in 1..l {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            "C" if l >= 2 => {
                for i in 0..l - 1 {
                    g.set(i, i, int(1));
                }
                g.set(l - 1, l - 1, int(2));
                for i in 1..l - 1 {
                    link(&mut g, i - 1, i, -half());
                }
                link(&mut g, l - 2, l - 1, int(-1));
            }
            "D" if l >= 3 => {
                for i in 0..l {
                    g.set(i, i, int(2));
                }
                for i in 1..l - 1 {
                    link(&mut g, i - 1, i, int(-1));
                }
                link(&mut g, l - 3, l - 1, int(-1));
            }
            "E" if (6..=8).contains(&l) => {
                for i in 0..l {
                    g.set(i, i, int(2));
                }
                // 1-3-4-5-6-(7-8), with 2 attached to 4
                link(&mut g, 0, 2, int(-1));
                link(&mut g, 1, 3, int(-1));
                for i in 3..l {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            "F" if l == 4 => {
                for (i, v) in [2, 2, 1, 1].into_iter().enumerate() {
                    g.set(i, i, int(v));
                }
                link(&mut g, 0, 1, int(-1));
                link(&mut g, 1, 2, int(-1));
                link(&mut g, 2, 3, -half());
            }
            "G" if l == 2 => {
                g.set(0, 0, int(2) / int(3));
                g.set(1, 1, int(2));
                link(&mut g, 0, 1, int(-1));
            }
            _ => return Err(unknown()),
        }
        Self::from_gram(&g)
    }

    pub fn rank(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix<T> {
        &self.x
    }

    pub fn root_norms(&self) -> &[T] {
        &self.root_norms
    }

    /// Diagonal of `Γ = diag(2 / (α_i, α_i))`.
    pub fn symmetrizer(&self) -> Vec<T> {
        self.root_norms.iter().map(|v| T::from_int(2) / v.clone()).collect()
    }

    /// `X′ = X · Γ`.
    pub fn symmetrized(&self) -> Matrix<T> {
        self.x.mul(&Matrix::diag(&self.symmetrizer())).expect("square")
    }
}

/// `P(l, l; X, I_l, I_l)`, whose Cartan matrix is `X`.
pub fn from_contragredient<T: Scalar>(x: &Matrix<T>) -> Result<Pentad<T>> {
    if !x.is_invertible() {
        return Err(Error::SingularInput);
    }
    let l = x.rows();
    Pentad::new(x.clone(), Matrix::identity(l), Matrix::identity(l))
}

/// `P(l, l; (X′)⁻¹, X, Γ)`, whose Cartan matrix is `X` and whose `h_i` is
/// `ε_i`.
pub fn from_semisimple<T: Scalar>(data: &FiniteCartanData<T>) -> Result<Pentad<T>> {
    let a = data.symmetrized().inverse().map_err(|_| Error::SingularInput)?;
    Pentad::with_diagonal(a, data.x.clone(), data.symmetrizer())
}

/// `P(k+l, l; diag(A_Z, (X′)⁻¹), (O; X), Γ)`: `gl_1^k ⊕ L(X)`.
pub fn from_reductive<T: Scalar>(k: usize, data: &FiniteCartanData<T>, a_z: &Matrix<T>) -> Result<Pentad<T>> {
    check_form_block(a_z, k)?;
    let l = data.rank();
    let a = Matrix::block_diag(a_z, &data.symmetrized().inverse().map_err(|_| Error::SingularInput)?);
    let d = Matrix::block_compose(&[vec![Matrix::zeros(k, l)], vec![data.x.clone()]])?;
    Pentad::with_diagonal(a, d, data.symmetrizer())
}

fn check_form_block<T: Scalar>(m: &Matrix<T>, k: usize) -> Result<()> {
    if m.rows() != k || m.cols() != k {
        return Err(Error::DimensionMismatch(format!(
            "expected a {k}x{k} block, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_symmetric() {
        return Err(Error::AsymmetricInputs);
    }
    if !m.is_invertible() {
        return Err(Error::SingularInput);
    }
    Ok(())
}

/// `P(r, n+k; A, (D | Λ), diag(Γ, I_k))` for a weight table `Λ` whose
/// column `j` lists `λ_j(ε_1), …, λ_j(ε_r)`.
pub fn chain_append_weights<T: Scalar>(p: &Pentad<T>, weights: &Matrix<T>) -> Result<Pentad<T>> {
    if !p.is_symmetric() {
        return Err(Error::AsymmetricPentad);
    }
    if weights.rows() != p.r() {
        return Err(Error::DimensionMismatch(format!(
            "weight table has {} rows, r = {}",
            weights.rows(),
            p.r()
        )));
    }
    let d = Matrix::block_compose(&[vec![p.d().clone(), weights.clone()]])?;
    let mut gamma = p.gamma().to_vec();
    gamma.extend(std::iter::repeat_n(T::one(), weights.cols()));
    Pentad::with_diagonal(p.a().clone(), d, gamma)
}

/// `P(r+k, r+k; diag(Ã, A), (O I_k; D Λ), diag(Γ, I_k))` for a regular,
/// symmetric `p` with `r = n`, together with its Cartan matrix.
pub fn scalar_augmented_embedding<T: Scalar>(
    p: &Pentad<T>,
    weights: &Matrix<T>,
    a_tilde: &Matrix<T>,
) -> Result<(Pentad<T>, CartanMatrix<T>)> {
    if p.r() != p.n() || !p.cartan_matrix().is_invertible() {
        return Err(Error::NotRegular);
    }
    if !p.is_symmetric() || !a_tilde.is_symmetric() {
        return Err(Error::AsymmetricInputs);
    }
    let k = weights.cols();
    if weights.rows() != p.r() {
        return Err(Error::DimensionMismatch(format!(
            "weight table has {} rows, r = {}",
            weights.rows(),
            p.r()
        )));
    }
    check_form_block(a_tilde, k)?;
    let q = augmented_pentad(p, weights, a_tilde)?;
    let c = q.cartan_matrix();
    debug_assert_eq!(c.matrix, scalar_augmented_block_formula(p, weights, a_tilde)?);
    Ok((q, CartanMatrix::with_source(c.matrix, "scalar-augmented embedding")))
}

fn augmented_pentad<T: Scalar>(p: &Pentad<T>, weights: &Matrix<T>, a_top: &Matrix<T>) -> Result<Pentad<T>> {
    let (r, n, k) = (p.r(), p.n(), weights.cols());
    let a = Matrix::block_diag(a_top, p.a());
    let d = Matrix::block_compose(&[
        vec![Matrix::zeros(k, n), Matrix::identity(k)],
        vec![p.d().clone(), weights.clone()],
    ])?;
    debug_assert_eq!(d.rows(), r + k);
    let mut gamma = p.gamma().to_vec();
    gamma.extend(std::iter::repeat_n(T::one(), k));
    Pentad::with_diagonal(a, d, gamma)
}

/// `( C  Γ·ᵗD·A·Λ ; ᵗΛ·A·D  Ã + ᵗΛ·A·Λ )`, computed blockwise.
pub fn scalar_augmented_block_formula<T: Scalar>(
    p: &Pentad<T>,
    weights: &Matrix<T>,
    a_tilde: &Matrix<T>,
) -> Result<Matrix<T>> {
    let (a, d, l) = (p.a(), p.d(), weights);
    let c = p.cartan_matrix().matrix;
    let top_right = p.gamma_matrix().mul(&d.transpose())?.mul(a)?.mul(l)?;
    let bottom_left = l.transpose().mul(a)?.mul(d)?;
    let bottom_right = a_tilde.add(&l.transpose().mul(a)?.mul(l)?)?;
    Matrix::block_compose(&[vec![c, top_right], vec![bottom_left, bottom_right]])
}

/// `(Λ) = −N` for a table of nonnegative integers `n_ij` (`l` rows).
fn lowest_weight_table<T: Scalar>(n_table: &[Vec<i64>]) -> Result<Matrix<T>> {
    if n_table.iter().flatten().any(|&v| v < 0) {
        return Err(Error::NegativeWeightEntry);
    }
    Matrix::from_rows(
        n_table
            .iter()
            .map(|row| row.iter().map(|&v| T::from_int(-v)).collect())
            .collect(),
    )
}

/// The pentad
/// `P(k+l, k+l; diag(A_Z, (X′)⁻¹), (O I_k; X (Λ)), diag(Γ, I_k))` attached to
/// `gl_1^k ⊕ L(X)` acting on `k` irreducible modules with lowest weights
/// `Λ_j(h_{α_i}) = −n_ij`, with its Cartan matrix
/// `( X  (Λ) ; ᵗ(Λ)·Γ⁻¹  A_Z + ᵗ(Λ)·Γ⁻¹·X⁻¹·(Λ) )`.
pub fn reductive_rep_embedding<T: Scalar>(
    data: &FiniteCartanData<T>,
    n_table: &[Vec<i64>],
    a_z: &Matrix<T>,
) -> Result<(Pentad<T>, CartanMatrix<T>)> {
    if n_table.len() != data.rank() {
        return Err(Error::DimensionMismatch(format!(
            "weight table has {} rows, rank is {}",
            n_table.len(),
            data.rank()
        )));
    }
    let lambda = lowest_weight_table(n_table)?;
    check_form_block(a_z, lambda.cols())?;
    let base = from_semisimple(data)?;
    let q = augmented_pentad(&base, &lambda, a_z)?;
    let c = q.cartan_matrix();
    debug_assert_eq!(c.matrix, reductive_block_formula(data, &lambda, a_z)?);
    Ok((
        q,
        CartanMatrix::with_source(c.matrix, "reductive representation embedding"),
    ))
}

fn reductive_block_formula<T: Scalar>(
    data: &FiniteCartanData<T>,
    lambda: &Matrix<T>,
    a_z: &Matrix<T>,
) -> Result<Matrix<T>> {
    let x = data.x();
    let g_inv = Matrix::diag(
        &data
            .root_norms
            .iter()
            .map(|v| v.clone() / T::from_int(2))
            .collect::<Vec<_>>(),
    );
    let lt_g = lambda.transpose().mul(&g_inv)?;
    let corner = a_z.add(&lt_g.mul(&x.inverse().map_err(|_| Error::SingularInput)?)?.mul(lambda)?)?;
    Matrix::block_compose(&[vec![x.clone(), lambda.clone()], vec![lt_g, corner]])
}

/// `C_s` with its determinant and the value of `s` where it vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct CsFamily<T> {
    pub matrix: Matrix<T>,
    pub det: T,
    /// `det C_s = det X · (s − s*)`, so `s*` is the only excluded value.
    pub singular_at: T,
}

/// `C_s = ( X  −n ; −n_i (α_i, α_i)/2  s )`.
pub fn cs_family<T: Scalar>(data: &FiniteCartanData<T>, n_vec: &[i64], s: &T) -> Result<CsFamily<T>> {
    let l = data.rank();
    if n_vec.len() != l {
        return Err(Error::DimensionMismatch(format!(
            "{} entries for rank {l}",
            n_vec.len()
        )));
    }
    let two = T::from_int(2);
    if n_vec.iter().any(|&v| v < 0) {
        return Err(Error::NegativeWeightEntry);
    }
    let u = Matrix::column_vector(n_vec.iter().map(|&v| T::from_int(-v)).collect());
    let v = Matrix::from_rows(vec![n_vec
        .iter()
        .zip(&data.root_norms)
        .map(|(&n, a)| -(T::from_int(n) * a.clone()) / two.clone())
        .collect()])?;
    let matrix = Matrix::block_compose(&[
        vec![data.x.clone(), u.clone()],
        vec![v.clone(), Matrix::from_rows(vec![vec![s.clone()]])?],
    ])?;
    let x_inv = data.x.inverse().map_err(|_| Error::SingularInput)?;
    let singular_at = v.mul(&x_inv)?.mul(&u)?.get(0, 0).clone();
    let det = matrix.determinant()?;
    Ok(CsFamily {
        matrix,
        det,
        singular_at,
    })
}

/// The regular pentad whose Cartan matrix is `C_s`, built by
/// [`reductive_rep_embedding`] with `A_Z = (s − s*)`.
pub fn cs_family_pentad<T: Scalar>(
    data: &FiniteCartanData<T>,
    n_vec: &[i64],
    s: &T,
) -> Result<(Pentad<T>, CartanMatrix<T>)> {
    let fam = cs_family(data, n_vec, s)?;
    let a_z = Matrix::from_rows(vec![vec![s.clone() - fam.singular_at]])?;
    let n_table: Vec<Vec<i64>> = n_vec.iter().map(|&v| vec![v]).collect();
    let (p, c) = reductive_rep_embedding(data, &n_table, &a_z)?;
    debug_assert_eq!(c.matrix, fam.matrix);
    Ok((p, CartanMatrix::with_source(c.matrix, "C_s family")))
}

/// ε-coordinates of the weight with `λ(h_{α_i}) = −n_i` for the pentad of
/// [`from_semisimple`], whose `ε_i` is `h_{α_i}`.
pub fn weight_from_coroot_values<T: Scalar>(data: &FiniteCartanData<T>, n_vec: &[i64]) -> Result<Vec<T>> {
    if n_vec.len() != data.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} entries for rank {}",
            n_vec.len(),
            data.rank()
        )));
    }
    Ok(n_vec.iter().map(|&v| T::from_int(-v)).collect())
}
