//! Minimal graded free resolutions via iterated Schreyer syzygies.

use crate::betti::BettiTable;
use crate::field::Field;
use crate::ideal::GradedIdeal;
use crate::poly::Polynomial;

/// Matrix of polynomials stored by columns: `cols[c][r]`.
pub type PolyMatrix<F> = Vec<Vec<Polynomial<F>>>;

/// A graded free resolution `0 <- R/I <- F_0 <- F_1 <- ... <- F_L <- 0` with `F_0 = R`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    nvars: usize,
    /// `twists[k]` lists the degrees of the basis of `F_k`.
    twists: Vec<Vec<i32>>,
    /// `maps[k]` is `d_{k+1}: F_{k+1} -> F_k`.
    maps: Vec<PolyMatrix<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn twists(&self, k: usize) -> &[i32] {
        self.twists.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn rank(&self, k: usize) -> usize {
        self.twists(k).len()
    }

    /// The differential `d_k: F_k -> F_{k-1}` (columns indexed by `F_k`), for `k >= 1`.
    pub fn map(&self, k: usize) -> Option<&PolyMatrix<F>> {
        if k == 0 {
            return None;
        }
        self.maps.get(k - 1)
    }

    /// Betti table of the ideal: `F_{i+1}` gives row `i`.
    pub fn betti(&self) -> BettiTable {
        let mut b = BettiTable::new();
        for (k, tw) in self.twists.iter().enumerate().skip(1) {
            for &t in tw {
                b.add(k - 1, t, 1);
            }
        }
        b
    }

    /// Check `d_k ∘ d_{k+1} = 0` and homogeneity of every entry.
    pub fn is_complex(&self) -> bool {
        for k in 1..=self.maps.len() {
            let d = &self.maps[k - 1];
            for (c, col) in d.iter().enumerate() {
                for (r, e) in col.iter().enumerate() {
                    if let Some(deg) = e.degree() {
                        if !e.is_homogeneous() || deg as i32 != self.twists[k][c] - self.twists[k - 1][r] {
                            return false;
                        }
                    }
                }
            }
            if k < self.maps.len() {
                let next = &self.maps[k];
                for col in next {
                    for r in 0..self.twists[k - 1].len() {
                        let mut s = Polynomial::zero(self.nvars);
                        for (j, e) in col.iter().enumerate() {
                            if !e.is_zero() && !d[j][r].is_zero() {
                                s = s.add(&d[j][r].mul(e));
                            }
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Does any differential contain a nonzero constant?
    pub fn has_unit_entries(&self) -> bool {
        self.maps.iter().flatten().flatten().any(|e| e.degree() == Some(0))
    }
}

/// Resolution of `R/I` from Schreyer frames; not minimal.
pub fn schreyer_resolution<F: Field>(i: &GradedIdeal<F>) -> Resolution<F> {
    let n = i.nvars();
    let mut twists = vec![vec![0]];
    let mut maps = Vec::new();
    let gb = i.groebner().clone();
    if gb.is_empty() {
        return Resolution { nvars: n, twists, maps };
    }
    twists.push(gb.elements().iter().map(|e| e.degree(gb.order()).unwrap()).collect());
    maps.push(gb.elements().iter().map(|e| vec![e.component(n, 0)]).collect());
    let mut cur = gb;
    loop {
        let syz = cur.syzygies();
        if syz.is_empty() {
            break;
        }
        let rank = cur.len();
        twists.push(syz.elements().iter().map(|e| e.degree(syz.order()).unwrap()).collect());
        maps.push(syz.elements().iter().map(|e| e.to_components(n, rank)).collect());
        cur = syz;
    }
    Resolution { nvars: n, twists, maps }
}

/// Minimal graded free resolution of `R/I`.
pub fn free_resolution<F: Field>(i: &GradedIdeal<F>) -> Resolution<F> {
    let mut r = schreyer_resolution(i);
    minimalize(&mut r);
    r
}

/// Cancel unit entries, last differential first.
pub fn minimalize<F: Field>(res: &mut Resolution<F>) {
    let Resolution { twists, maps, .. } = res;
    for k in (0..maps.len()).rev() {
        loop {
            let Some((r, c)) = find_unit(&maps[k], &twists[k + 1], &twists[k]) else { break };
            let u_inv = maps[k][c][r].terms()[0].1.inv();
            let pivot = maps[k][c].clone();
            for j in 0..maps[k].len() {
                if j == c || maps[k][j][r].is_zero() {
                    continue;
                }
                let lam = maps[k][j][r].scale(&u_inv);
                let col = &mut maps[k][j];
                for (row, p) in pivot.iter().enumerate() {
                    if !p.is_zero() {
                        col[row] = col[row].sub(&lam.mul(p));
                    }
                }
                debug_assert!(col[r].is_zero());
            }
            maps[k].remove(c);
            for col in maps[k].iter_mut() {
                col.remove(r);
            }
            if k + 1 < maps.len() {
                // in the basis e_j - λ_j e_c the e_c coordinate of a syzygy is
                // forced to vanish, and the other coordinates are unchanged
                for col in maps[k + 1].iter_mut() {
                    col.remove(c);
                }
            }
            if k >= 1 {
                maps[k - 1].remove(r);
            }
            twists[k + 1].remove(c);
            twists[k].remove(r);
        }
    }
    while maps.last().is_some_and(|m| m.is_empty()) {
        maps.pop();
        twists.pop();
    }
}

fn find_unit<F: Field>(m: &PolyMatrix<F>, col_tw: &[i32], row_tw: &[i32]) -> Option<(usize, usize)> {
    for (c, col) in m.iter().enumerate() {
        for (r, e) in col.iter().enumerate() {
            if col_tw[c] == row_tw[r] && !e.is_zero() {
                return Some((r, c));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn koszul_shape() {
        let n = 4;
        let i = GradedIdeal::new(n, vec![P::var(n, 0), P::var(n, 1)]).unwrap();
        let r = free_resolution(&i);
        assert_eq!(r.length(), 2);
        assert_eq!(r.twists(1), &[1, 1]);
        assert_eq!(r.twists(2), &[2]);
        assert!(r.is_complex());
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
        let n = 4;
        let x = |i| P::var(n, i);
        let g = vec![
            x(0).mul(&x(2)).sub(&x(1).mul(&x(1))),
            x(0).mul(&x(3)).sub(&x(1).mul(&x(2))),
            x(1).mul(&x(3)).sub(&x(2).mul(&x(2))),
        ];
        let i = GradedIdeal::new(n, g).unwrap();
        let r = free_resolution(&i);
        assert!(r.is_complex());
        assert!(!r.has_unit_entries());
        let b = r.betti();
        assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 2, 3), (1, 3, 2)]);
    }

    #[test]
    fn cancellation_with_dependent_syzygy_row() {
        // the syzygy rows of a cancelled generator need not vanish before the basis change
        let input = crate::construct::random_input::<Rational>(5, 4, 0, 540000).unwrap();
        let i = crate::construct::construct_curve(&input).unwrap();
        let r = free_resolution(&i);
        assert!(r.is_complex());
        assert!(!r.has_unit_entries());
        assert_eq!(trim(r.betti().hilbert_numerator()), trim(i.hilbert_numerator()));
    }

    fn trim(mut v: Vec<i64>) -> Vec<i64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}
