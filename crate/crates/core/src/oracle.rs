//! Graded pieces of an ideal by plain linear algebra.
//!
//! `[I]_j` is spanned by the products `m * g` over generators `g` and
//! monomials `m` of degree `j - deg g`; its dimension is the rank of that
//! coefficient matrix. Nothing here uses Gröbner bases, so these values
//! serve as an independent check on the engine.

use std::collections::HashMap;

use crate::field::Field;
use crate::monomial::{count_of_degree, Monomial};
use crate::poly::Polynomial;

/// Sparse echelon basis of `[I]_j`, pivots at the revlex-largest monomial.
struct SparseEchelon<F: Field> {
    /// pivot column -> row, each row sorted by column with the pivot first
    rows: HashMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> SparseEchelon<F> {
    fn new() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }

    fn insert(&mut self, mut v: Vec<(usize, F)>) -> bool {
        loop {
            let Some((p, c)) = v.first().cloned() else { return false };
            let Some(r) = self.rows.get(&p) else {
                let inv = c.inv();
                for e in v.iter_mut() {
                    e.1 *= &inv;
                }
                self.rows.insert(p, v);
                return true;
            };
            v = axpy(&v, &c, r);
        }
    }
}

/// `v - c * r`, both sorted by column; the leading entry cancels.
fn axpy<F: Field>(v: &[(usize, F)], c: &F, r: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(v.len() + r.len());
    let (mut i, mut k) = (0, 0);
    while i < v.len() || k < r.len() {
        if k == r.len() || (i < v.len() && v[i].0 < r[k].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || r[k].0 < v[i].0 {
            out.push((r[k].0, -(r[k].1.clone() * c)));
            k += 1;
        } else {
            let x = v[i].1.clone() - r[k].1.clone() * c;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

/// Basis of `[I]_j` in echelon form, as polynomials.
pub fn graded_piece_basis<F: Field>(nvars: usize, gens: &[Polynomial<F>], j: u32) -> Vec<Polynomial<F>> {
    let ech = echelon(nvars, gens, j);
    let monos = Monomial::all_of_degree(nvars, j);
    let mut keys: Vec<&usize> = ech.rows.keys().collect();
    keys.sort();
    keys.into_iter()
        .map(|p| Polynomial::from_terms(nvars, ech.rows[p].iter().map(|(c, x)| (monos[*c], x.clone())).collect()))
        .collect()
}

fn echelon<F: Field>(nvars: usize, gens: &[Polynomial<F>], j: u32) -> SparseEchelon<F> {
    // columns: monomials of degree j, largest first
    let monos = Monomial::all_of_degree(nvars, j);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut ech = SparseEchelon::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > j {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, j - dg) {
            let mut row: Vec<(usize, F)> = g.terms().iter().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect();
            row.sort_by_key(|e| e.0);
            ech.insert(row);
        }
        if ech.rows.len() == monos.len() {
            break;
        }
    }
    ech
}

/// `dim_K [I]_j`.
pub fn graded_piece_dim<F: Field>(nvars: usize, gens: &[Polynomial<F>], j: u32) -> u64 {
    echelon(nvars, gens, j).rows.len() as u64
}

/// `dim_K [R/I]_j`, by linear algebra only.
pub fn oracle_hilbert_function<F: Field>(nvars: usize, gens: &[Polynomial<F>], j: i64) -> u64 {
    if j < 0 {
        return 0;
    }
    count_of_degree(nvars, j) - graded_piece_dim(nvars, gens, j as u32)
}

/// Do the two generating sets span the same graded pieces in degrees `0..=top`?
pub fn same_pieces_through<F: Field>(nvars: usize, a: &[Polynomial<F>], b: &[Polynomial<F>], top: u32) -> bool {
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    (0..=top).all(|j| {
        let s = graded_piece_dim(nvars, &both, j);
        graded_piece_dim(nvars, a, j) == s && graded_piece_dim(nvars, b, j) == s
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn binary_example() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let g = vec![x.pow(2), x.mul(&y), y.pow(3)];
        let v: Vec<u64> = (0..5).map(|j| oracle_hilbert_function(2, &g, j)).collect();
        assert_eq!(v, vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn twisted_cubic_pieces() {
        let n = 4;
        let x = |i| P::var(n, i);
        let g = vec![
            x(0).mul(&x(2)).sub(&x(1).mul(&x(1))),
            x(0).mul(&x(3)).sub(&x(1).mul(&x(2))),
            x(1).mul(&x(3)).sub(&x(2).mul(&x(2))),
        ];
        let v: Vec<u64> = (0..6).map(|j| oracle_hilbert_function(n, &g, j)).collect();
        assert_eq!(v, vec![1, 4, 7, 10, 13, 16]);
        assert_eq!(graded_piece_basis(n, &g, 2).len(), 3);
    }
}
