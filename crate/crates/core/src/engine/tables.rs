//! Adjoint actions of every basis vector and the invariant pairing, both
//! derived from the generator tables through the provenance of each basis
//! vector.

use rayon::prelude::*;

use super::{Provenance, Skeleton};
use crate::linalg::Matrix;
use crate::pentad::Pentad;
use crate::scalar::Scalar;

/// `ad(x)` on every `V_m` with `m + deg x` in range. For `x = [e_i, b]`,
/// `ad(x) = ad(e_i) ad(b) − ad(b) ad(e_i)`, and likewise with `f_i`.
pub(super) fn adjoint_tables<T: Scalar>(sk: &Skeleton<T>) -> Vec<Vec<Option<Vec<Matrix<T>>>>> {
    let top = sk.top as i64;
    let idx = |k: i64| (k + top) as usize;
    let span = 2 * sk.top + 1;
    let mut ad: Vec<Vec<Option<Vec<Matrix<T>>>>> = vec![vec![None; span]; span];

    let r = sk.components[&0].dim();
    for m in -top..=top {
        let weights = &sk.components[&m].weights;
        ad[idx(0)][idx(m)] = Some(
            (0..r)
                .map(|k| Matrix::diag(&weights.iter().map(|w| w[k].clone()).collect::<Vec<_>>()))
                .collect(),
        );
        if m < top {
            ad[idx(1)][idx(m)] = Some(sk.ad_e[&m].clone());
        }
        if m > -top {
            ad[idx(-1)][idx(m)] = Some(sk.ad_f[&m].clone());
        }
    }

    for depth in 2..=top {
        for sign in [1i64, -1] {
            let j = sign * depth;
            let inner = j - sign;
            let provenance = &sk.components[&j].provenance;
            let gen_tables = if sign > 0 { &sk.ad_e } else { &sk.ad_f };
            let rows: Vec<(usize, Vec<Matrix<T>>)> = (-top..=top)
                .filter(|m| (m + j).abs() <= top)
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|m| {
                    let inner_here = ad[idx(inner)][idx(m)].as_ref().expect("inner range");
                    let inner_next = ad[idx(inner)][idx(m + sign)].as_ref().expect("inner range");
                    let tables = provenance
                        .iter()
                        .map(|p| {
                            let Provenance::Bracket {
                                generator: i,
                                source: b,
                            } = *p
                            else {
                                unreachable!("components beyond degree one are built from brackets")
                            };
                            let g_outer = &gen_tables[&(m + inner)][i];
                            let g_here = &gen_tables[&m][i];
                            g_outer
                                .mul(&inner_here[b])
                                .and_then(|left| Ok((left, inner_next[b].mul(g_here)?)))
                                .and_then(|(left, right)| left.sub(&right))
                                .expect("compatible shapes")
                        })
                        .collect();
                    (idx(m), tables)
                })
                .collect();
            for (mi, tables) in rows {
                ad[idx(j)][mi] = Some(tables);
            }
        }
    }
    ad
}

/// `P_0 = ᵗA⁻¹`, `P_1 = Γ`, and
/// `P_{k+1}([e_i, b], φ) = −P_k(b, [e_i, φ])`.
pub(super) fn pairing_tables<T: Scalar>(p: &Pentad<T>, sk: &Skeleton<T>) -> Vec<Matrix<T>> {
    let mut out = vec![p.b_a_matrix(), p.gamma_matrix()];
    for k in 1..sk.top as i64 {
        let prev = &out[k as usize];
        let comp = &sk.components[&(k + 1)];
        let cols = sk.components[&(-k - 1)].dim();
        let mut next = Matrix::zeros(comp.dim(), cols);
        for (x, prov) in comp.provenance.iter().enumerate() {
            let Provenance::Bracket {
                generator: i,
                source: b,
            } = *prov
            else {
                unreachable!("components beyond degree one are built from brackets")
            };
            // row b of P_k times ad e_i : V_{−k−1} → V_{−k}
            let e = &sk.ad_e[&(-k - 1)][i];
            let row = e.transpose().mul_vec(prev.row(b));
            for (c, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    next.set(x, c, -v);
                }
            }
        }
        out.push(next);
    }
    out
}
