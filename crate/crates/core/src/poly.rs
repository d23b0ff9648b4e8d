//! Multivariate polynomials with terms kept in descending revlex order.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{is_negative, Field, Rational};
use crate::monomial::Monomial;

/// A polynomial over `F` in a fixed number of variables.
///
/// Terms are strictly descending in revlex and carry no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            Polynomial::zero(nvars)
        } else {
            Polynomial { nvars, terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i, 1))
    }

    /// Canonicalise an arbitrary term list.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_revlex(&a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, terms: out }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree of the leading term (the maximal degree, since revlex is graded).
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| m.cmp_revlex(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    fn check_ring(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            Err(Error::RingMismatch(self.nvars, o.nvars))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, o.nvars, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match a.0.cmp_revlex(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b.0, if negate { -b.1.clone() } else { b.1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a.1.clone() - &b.1 } else { a.1.clone() + &b.1 };
                    if !c.is_zero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().map(|(m, c)| (*m, if negate { -c.clone() } else { c.clone() })));
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c)).collect() }
    }

    /// Multiply by `c * m`; monomial multiplication preserves the order.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c)).collect() }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        Ok(self.mul(o))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "ring mismatch");
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Largest power of `x_i` dividing every term.
    pub fn var_content(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).min().unwrap_or(0)
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.div(m)?, c.clone()));
        }
        Some(Polynomial { nvars: self.nvars, terms })
    }

    /// Rename variables by `perm` (`x_i -> x_{perm[i]}`).
    pub fn permute(&self, perm: &[usize]) -> Self {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect())
    }

    /// Re-read the polynomial in a ring with `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.with_nvars(nvars), c.clone())).collect())
    }

    /// Substitute `x_i -> images[i]` for every variable.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let maxdeg: Vec<u32> =
            (0..self.nvars).map(|i| self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)).collect();
        let mut powers: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(self.nvars);
        for (i, img) in images.iter().enumerate() {
            let mut ps = vec![Polynomial::one(target_vars)];
            for k in 1..=maxdeg[i] as usize {
                let next = ps[k - 1].mul(img);
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut acc = Polynomial::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_vars, c.clone());
            for i in 0..self.nvars {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Apply the linear change `x_i -> sum_j g[i][j] x_j`.
    pub fn change_coordinates(&self, g: &[Vec<F>]) -> Self {
        let n = self.nvars;
        let images: Vec<Polynomial<F>> = (0..n)
            .map(|i| {
                Polynomial::from_terms(n, (0..n).map(|j| (Monomial::var(n, j, 1), g[i][j].clone())).collect())
            })
            .collect();
        self.substitute(&images)
    }
}

impl Polynomial<Rational> {
    /// Scale to a primitive polynomial with integer coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        let mut scale = Rational::new(den, num);
        if self.terms[0].1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Zp32003;
    use proptest::prelude::*;

    type Q = Polynomial<Rational>;

    fn x(n: usize, i: usize) -> Q {
        Q::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let p = x(4, 0).add(&x(4, 1)).mul(&x(4, 0).sub(&x(4, 1)));
        let expected = x(4, 0).pow(2).sub(&x(4, 1).pow(2));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn identity_and_shift() {
        let f = x(4, 0).mul(&x(4, 2).pow(3)).sub(&x(4, 1).pow(3).mul(&x(4, 3)));
        assert_eq!(f.mul(&Q::one(4)), f);
        let g = f.mul(&x(4, 2));
        assert_eq!(g.to_string(), "x0*x2^4 - x1^3*x2*x3");
        assert!(g.is_homogeneous());
        assert_eq!(g.degree(), Some(5));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        assert!(x(3, 0).checked_mul(&x(4, 0)).is_err());
    }

    #[test]
    fn coordinate_change_swaps() {
        let n = 3;
        let mut g = vec![vec![Rational::zero(); n]; n];
        g[0][1] = Rational::one();
        g[1][0] = Rational::one();
        g[2][2] = Rational::one();
        assert_eq!(x(n, 0).mul(&x(n, 2)).change_coordinates(&g), x(n, 1).mul(&x(n, 2)));
    }

    fn hom_poly<F: Field>(deg: u32) -> impl Strategy<Value = Polynomial<F>> {
        prop::collection::vec((prop::collection::vec(0u32..=deg, 3), -5i64..=5), 1..5).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .map(|(mut e, c)| {
                    let s: u32 = e.iter().sum();
                    // pad into the last variable so every term has degree `deg`
                    if s <= deg {
                        e.push(deg - s);
                    } else {
                        e = vec![0, 0, 0, deg];
                    }
                    (Monomial::from_exponents(&e), F::from_i64(c))
                })
                .collect();
            Polynomial::from_terms(4, terms)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_rational(a in hom_poly::<Rational>(2), b in hom_poly::<Rational>(1), c in hom_poly::<Rational>(2)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&c).mul(&b), a.mul(&b).add(&c.mul(&b)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert!(a.mul(&b).is_homogeneous());
        }

        #[test]
        fn ring_axioms_prime(a in hom_poly::<Zp32003>(2), b in hom_poly::<Zp32003>(1), c in hom_poly::<Zp32003>(2)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&c).mul(&b), a.mul(&b).add(&c.mul(&b)));
            prop_assert_eq!(a.sub(&a), Polynomial::zero(4));
        }
    }
}
