//! Dense exponent vectors and the degree-refined reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of ring variables (`x_0 .. x_9`).
pub const MAX_VARS: usize = 10;

/// A monomial `x_0^{a_0} ... x_{k-1}^{a_{k-1}}` in a ring with `k` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    /// The monomial `1`.
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, degree: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    /// `x_i^e`.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars);
        let mut m = Monomial::one(nvars);
        m.exps[i] = e as u16;
        m.degree = e;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Index of the largest variable index occurring, or `None` for `1`.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.nvars()).rev().find(|&i| self.exps[i] > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars()).filter(move |&i| self.exps[i] > 0)
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, o.nvars);
        let mut r = *self;
        for i in 0..self.nvars() {
            r.exps[i] += o.exps[i];
        }
        r.degree += o.degree;
        r
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        if self.degree > o.degree {
            return false;
        }
        (0..self.nvars()).all(|i| self.exps[i] <= o.exps[i])
    }

    /// `self / o`, if `o` divides `self`.
    #[inline]
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        let mut r = *self;
        for i in 0..self.nvars() {
            r.exps[i] -= o.exps[i];
        }
        r.degree -= o.degree;
        Some(r)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        r.degree = 0;
        for i in 0..self.nvars() {
            r.exps[i] = r.exps[i].max(o.exps[i]);
            r.degree += r.exps[i] as u32;
        }
        r
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        r.degree = 0;
        for i in 0..self.nvars() {
            r.exps[i] = r.exps[i].min(o.exps[i]);
            r.degree += r.exps[i] as u32;
        }
        r
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        (0..self.nvars()).all(|i| self.exps[i] == 0 || o.exps[i] == 0)
    }

    /// Same exponents read in a ring with `nvars` variables (extra ones zero).
    pub fn with_nvars(&self, nvars: usize) -> Monomial {
        let mut r = Monomial::one(nvars);
        for i in 0..nvars.min(self.nvars()) {
            r.exps[i] = self.exps[i];
            r.degree += self.exps[i] as u32;
        }
        assert_eq!(r.degree, self.degree, "dropping a variable that occurs");
        r
    }

    /// Rename variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut r = Monomial::one(self.nvars());
        for i in 0..self.nvars() {
            r.exps[perm[i]] = self.exps[i];
        }
        r.degree = self.degree;
        r
    }

    /// Bitmask of occurring variables, for quick divisibility rejection.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut m = 0;
        for i in 0..self.nvars() {
            if self.exps[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Degree-refined reverse lexicographic comparison.
    ///
    /// `a > b` iff the last non-zero entry of `(a - b, sum(b - a))` is
    /// negative: higher degree wins, and at equal degree the monomial with
    /// the smaller exponent in the last differing variable is larger.
    #[inline]
    pub fn cmp_revlex(&self, o: &Monomial) -> Ordering {
        debug_assert_eq!(self.nvars, o.nvars);
        if self.degree != o.degree {
            return self.degree.cmp(&o.degree);
        }
        for i in (0..self.nvars()).rev() {
            if self.exps[i] != o.exps[i] {
                return o.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    /// All monomials of degree `d` in `nvars` variables, descending in revlex.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one(nvars);
        fn rec(i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            let n = cur.nvars();
            if i + 1 == n {
                cur.exps[i] = left as u16;
                cur.degree += left;
                out.push(*cur);
                cur.degree -= left;
                cur.exps[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur.exps[i] = e as u16;
                cur.degree += e;
                rec(i + 1, left - e, cur, out);
                cur.degree -= e;
            }
            cur.exps[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp_revlex(a));
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_revlex(other)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.nvars() {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_of_degree(nvars: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if nvars == 0 {
        return u64::from(d == 0);
    }
    binomial(d + nvars as i64 - 1, nvars as i64 - 1)
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn revlex_examples() {
        // x0^2 > x0*x1
        assert_eq!(m(&[2, 0, 0, 0]).cmp_revlex(&m(&[1, 1, 0, 0])), Ordering::Greater);
        // x0 > x1
        assert_eq!(m(&[1, 0, 0, 0]).cmp_revlex(&m(&[0, 1, 0, 0])), Ordering::Greater);
        // x0^2 > x0
        assert_eq!(m(&[2, 0, 0, 0]).cmp_revlex(&m(&[1, 0, 0, 0])), Ordering::Greater);
        // x1^2 > x0*x2 in revlex (differs from lex)
        assert_eq!(m(&[0, 2, 0]).cmp_revlex(&m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        let all = Monomial::all_of_degree(4, 3);
        assert_eq!(all.len(), 20);
        assert_eq!(count_of_degree(4, 3), 20);
        assert_eq!(all[0], m(&[3, 0, 0, 0]));
        assert_eq!(*all.last().unwrap(), m(&[0, 0, 0, 3]));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 4).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn revlex_is_a_monomial_order(a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(a.cmp_revlex(&b), b.cmp_revlex(&a).reverse());
            if a > b && b > c {
                prop_assert!(a > c);
            }
            if a > b {
                prop_assert!(a.mul(&c) > b.mul(&c));
            }
            if a.cmp_revlex(&b) == Ordering::Equal {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn lcm_gcd_divisibility(a in mono(), b in mono()) {
            let l = a.lcm(&b);
            let g = a.gcd(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(l.mul(&g), a.mul(&b));
        }
    }
}
