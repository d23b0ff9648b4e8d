//! Combinatorics of monomial ideals: Hilbert series, stability, and two
//! independent routes to graded Betti numbers.

use std::collections::BTreeMap;
use std::fmt;

use crate::betti::{trim, BettiTable};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::linalg::Matrix;
use crate::monomial::{binomial, Monomial};

/// A monomial ideal given by its minimal generators, sorted descending in revlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Drop generators divisible by others; sort descending.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Self {
        Self::new(nvars, gens.iter().map(|e| Monomial::from_exponents(e)).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sum with another monomial ideal.
    pub fn add(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend_from_slice(&o.gens);
        MonomialIdeal::new(self.nvars, g)
    }

    /// `I : m`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        let g = self.gens.iter().map(|g| g.div(&g.gcd(m)).unwrap()).collect();
        MonomialIdeal::new(self.nvars, g)
    }

    /// Minimal generators grouped by degree.
    pub fn generator_degrees(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    /// Numerator `N(t)` of the Hilbert series of `R/I` over `(1-t)^nvars`;
    /// index `k` holds the coefficient of `t^k`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        numerator(self.gens.clone())
    }

    /// `dim_K (R/I)_j`.
    pub fn hilbert_function(&self, j: i64) -> u64 {
        hilbert_from_numerator(&self.hilbert_numerator(), self.nvars, j)
    }

    /// Count standard monomials of degree `j` directly; slow, used as a check.
    pub fn count_standard(&self, j: u32) -> u64 {
        Monomial::all_of_degree(self.nvars, j).iter().filter(|m| !self.contains(m)).count() as u64
    }

    /// Strongly stable: `x_i u / x_j ∈ I` for each generator `u`, each `x_j | u`, each `i < j`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..self.nvars).filter(|&j| u.exp(j) > 0).all(|j| {
                let w = u.div(&Monomial::var(self.nvars, j, 1)).unwrap();
                (0..j).all(|i| self.contains(&w.mul(&Monomial::var(self.nvars, i, 1))))
            })
        })
    }

    /// Stable in the Eliahou–Kervaire sense: exchanges only at the largest index.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let Some(m) = u.max_var() else { return true };
            let w = u.div(&Monomial::var(self.nvars, m, 1)).unwrap();
            (0..m).all(|i| self.contains(&w.mul(&Monomial::var(self.nvars, i, 1))))
        })
    }

    /// Betti numbers of a stable ideal by the Eliahou–Kervaire formula.
    pub fn ek_betti(&self) -> Result<BettiTable> {
        if !self.is_stable() {
            return Err(Error::NotStable);
        }
        let mut b = BettiTable::new();
        for u in &self.gens {
            let m = u.max_var().unwrap_or(0) as i64;
            for i in 0..=m {
                b.add(i as usize, (i + u.degree() as i64) as i32, binomial(m, i));
            }
        }
        Ok(b)
    }

    /// Betti numbers from reduced homology of upper Koszul complexes.
    ///
    /// Works for every monomial ideal; used as an oracle.
    pub fn hochster_betti(&self) -> BettiTable {
        let mut out = BettiTable::new();
        if self.gens.is_empty() {
            return out;
        }
        let n = self.nvars;
        let mut join = Monomial::one(n);
        for g in &self.gens {
            join = join.lcm(g);
        }
        let bound: Vec<u32> = (0..n).map(|i| join.exp(i)).collect();
        let mut b = vec![0u32; n];
        loop {
            let mb = Monomial::from_exponents(&b);
            if self.in_lcm_lattice(&mb) {
                for (i, r) in self.koszul_homology(&mb) {
                    out.add(i, mb.degree() as i32, r);
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                if b[k] < bound[k] {
                    b[k] += 1;
                    break;
                }
                b[k] = 0;
                k += 1;
            }
        }
    }

    /// Is `b` the lcm of the generators dividing it?
    fn in_lcm_lattice(&self, b: &Monomial) -> bool {
        let mut l: Option<Monomial> = None;
        for g in self.gens.iter().filter(|g| g.divides(b)) {
            l = Some(l.map_or(*g, |x| x.lcm(g)));
        }
        l == Some(*b)
    }

    /// `(i, dim H̃_{i-1}(K^b))` for the nonzero homology groups.
    fn koszul_homology(&self, b: &Monomial) -> Vec<(usize, u64)> {
        let n = self.nvars;
        let supp: Vec<usize> = b.support().collect();
        let s = supp.len();
        // faces of K^b as bitmasks over `supp`, bucketed by size
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
        for mask in 0u32..(1 << s) {
            let mut e: Vec<u32> = (0..n).map(|i| b.exp(i)).collect();
            for (k, &v) in supp.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    e[v] -= 1;
                }
            }
            if self.contains(&Monomial::from_exponents(&e)) {
                faces[mask.count_ones() as usize].push(mask);
            }
        }
        // rank of the boundary from size-k faces to size-(k-1) faces
        let rank = |k: usize| -> usize {
            if k == 0 || k > s || faces[k].is_empty() || faces[k - 1].is_empty() {
                return 0;
            }
            let idx: BTreeMap<u32, usize> = faces[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let mut m = Matrix::<Rational>::zeros(faces[k - 1].len(), faces[k].len());
            for (c, &f) in faces[k].iter().enumerate() {
                let mut sign = 1i64;
                for v in 0..s {
                    if f >> v & 1 == 1 {
                        if let Some(&r) = idx.get(&(f & !(1 << v))) {
                            m[(r, c)] = Rational::from_i64(sign);
                        }
                        sign = -sign;
                    }
                }
            }
            m.rank()
        };
        let ranks: Vec<usize> = (0..=s + 1).map(rank).collect();
        let mut out = Vec::new();
        for k in 0..=s {
            // size-k faces have dimension k-1, contributing to β_{k}
            let h = faces[k].len() as i64 - ranks[k] as i64 - ranks[k + 1] as i64;
            if h > 0 {
                out.push((k, h as u64));
            }
        }
        out
    }
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support().count() > 1).collect();
    if mixed.is_empty() {
        // pure powers of distinct variables: a complete intersection
        let mut out = vec![1i64];
        for g in &gens {
            out = poly_mul(&out, &one_minus_t_pow(g.degree() as usize));
        }
        return out;
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in &mixed {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let v = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let e = mixed.iter().map(|g| g.exp(v)).filter(|&x| x > 0).min().unwrap();
    let p = Monomial::var(n, v, e);

    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p)).unwrap()).collect();
    let a = numerator(plus);
    let b = numerator(colon);
    let mut out = a;
    let shift = e as usize;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (k, c) in b.iter().enumerate() {
        out[k + shift] += c;
    }
    trim(&mut out);
    out
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] = 1;
    v[d] -= 1;
    v
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Evaluate the Hilbert function encoded by `N(t)/(1-t)^nvars` at `j`.
pub fn hilbert_from_numerator(num: &[i64], nvars: usize, j: i64) -> u64 {
    let mut s: i64 = 0;
    for (k, c) in num.iter().enumerate() {
        let d = j - k as i64;
        if d >= 0 {
            s += c * binomial(d + nvars as i64 - 1, nvars as i64 - 1) as i64;
        }
    }
    debug_assert!(s >= 0);
    s.max(0) as u64
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, g)
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]).hilbert_numerator(), vec![1, 0, -2, 0, 1]);
        assert_eq!(MonomialIdeal::zero(3).hilbert_numerator(), vec![1]);
        assert_eq!(ideal(3, &[&[1, 0, 0]]).hilbert_numerator(), vec![1, -1]);
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let hf: Vec<u64> = (0..4).map(|j| i.hilbert_function(j)).collect();
        assert_eq!(hf, vec![1, 2, 1, 0]);
    }

    #[test]
    fn stability() {
        assert!(ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 4, 0, 0], &[0, 3, 1, 0]]).is_strongly_stable());
        assert!(!ideal(2, &[&[0, 2]]).is_strongly_stable());
    }

    #[test]
    fn ek_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 4, 0]]);
        let b = i.ek_betti().unwrap();
        assert_eq!(b.get(0, 2), 2);
        assert_eq!(b.get(0, 4), 1);
        assert_eq!(b.get(1, 3), 1);
        assert_eq!(b.get(1, 5), 1);
        assert_eq!(b.entries().count(), 4);
        assert_eq!(b, i.hochster_betti());

        let j = ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 4, 0, 0], &[0, 3, 1, 0]]);
        let bj = j.ek_betti().unwrap();
        assert_eq!(bj.get(0, 4), 2);
        assert_eq!(bj.get(1, 5), 3);
        assert_eq!(bj.get(2, 6), 1);
        assert_eq!(bj, j.hochster_betti());

        let x = ideal(3, &[&[1, 0, 0]]);
        let bx = x.ek_betti().unwrap();
        assert_eq!(bx.entries().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        assert!(ideal(2, &[&[0, 2]]).ek_betti().is_err());
    }

    #[test]
    fn hochster_triangle() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let b = t.hochster_betti();
        assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 2, 3), (1, 3, 2)]);
        let p = ideal(3, &[&[1, 2, 0]]);
        assert_eq!(p.hochster_betti().entries().collect::<Vec<_>>(), vec![(0, 3, 1)]);
    }

    #[test]
    fn numerator_matches_betti() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(t.hochster_betti().hilbert_numerator(), t.hilbert_numerator());
    }

    #[test]
    fn hilbert_matches_count() {
        let i = ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 4, 0, 0], &[0, 3, 1, 0]]);
        for j in 0..8 {
            assert_eq!(i.hilbert_function(j as i64), i.count_standard(j));
        }
    }
}
