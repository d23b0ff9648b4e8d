//! Homogeneous ideals with a lazily computed reduced Gröbner basis.

use std::fmt;
use std::sync::OnceLock;


use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::RowSpace;
use crate::module::{FreeModuleElement, ModuleOrder};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;

#[derive(Clone)]
pub struct GradedIdeal<F: Field> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

pub(crate) fn to_element<F: Field>(ord: &ModuleOrder, p: &Polynomial<F>) -> FreeModuleElement<F> {
    FreeModuleElement::from_components(ord, std::slice::from_ref(p))
}

impl<F: Field> GradedIdeal<F> {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(nvars, g.nvars()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal { nvars, gens, gb: OnceLock::new() })
    }

    pub(crate) fn with_basis(nvars: usize, gb: GroebnerBasis<F>) -> Self {
        let gens = gb.elements().iter().map(|e| e.component(nvars, 0)).collect();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        GradedIdeal { nvars, gens, gb: cell }
    }

    pub fn from_monomials(m: &MonomialIdeal) -> Self {
        let gens = m.generators().iter().map(|g| Polynomial::monomial(*g)).collect();
        GradedIdeal { nvars: m.nvars(), gens, gb: OnceLock::new() }
    }

    /// The zero ideal.
    pub fn zero(nvars: usize) -> Self {
        GradedIdeal { nvars, gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis in degree reverse lexicographic order.
    pub fn groebner(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| {
            let ord = ModuleOrder::ring(self.nvars);
            let v: Vec<_> = self.gens.iter().map(|g| to_element(&ord, g)).collect();
            buchberger(ord, &v)
        })
    }

    pub fn groebner_polynomials(&self) -> Vec<Polynomial<F>> {
        self.groebner().elements().iter().map(|e| e.component(self.nvars, 0)).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.groebner().leading_terms().into_iter().map(|t| t.mono).collect())
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let gb = self.groebner();
        gb.normal_form(&to_element(gb.order(), f)).component(self.nvars, 0)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &GradedIdeal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (reduced bases are unique).
    pub fn same_ideal(&self, other: &GradedIdeal<F>) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        let mut a = self.groebner_polynomials();
        let mut b = other.groebner_polynomials();
        let key = |p: &Polynomial<F>| std::cmp::Reverse(*p.leading_monomial().unwrap());
        a.sort_by_key(key);
        b.sort_by_key(key);
        a == b
    }

    pub fn hilbert_numerator(&self) -> Vec<i64> {
        self.initial_ideal().hilbert_numerator()
    }

    /// `dim_K (R/I)_j` by counting standard monomials.
    pub fn hilbert_function(&self, j: i64) -> u64 {
        self.initial_ideal().hilbert_function(j)
    }

    /// `dim_K [I]_1`.
    pub fn linear_forms_dim(&self) -> usize {
        self.groebner().elements().iter().filter(|g| g.leading_term().unwrap().mono.degree() == 1).count()
    }

    pub fn sum(&self, other: &GradedIdeal<F>) -> GradedIdeal<F> {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        GradedIdeal { nvars: self.nvars, gens: g, gb: OnceLock::new() }
    }

    /// A minimal homogeneous generating set, chosen among the given generators.
    pub fn minimal_generators(&self) -> Vec<Polynomial<F>> {
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.degree().unwrap());
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        let mut k = 0;
        while k < gens.len() {
            let d = gens[k].degree().unwrap();
            let mut end = k;
            while end < gens.len() && gens[end].degree().unwrap() == d {
                end += 1;
            }
            let lower = GradedIdeal { nvars: self.nvars, gens: kept.clone(), gb: OnceLock::new() };
            let basis = Monomial::all_of_degree(self.nvars, d);
            let col = |m: &Monomial| basis.binary_search_by(|b| m.cmp(b)).unwrap();
            let mut space = RowSpace::new(basis.len());
            for g in &gens[k..end] {
                let r = if lower.is_zero() { g.clone() } else { lower.normal_form(g) };
                let mut v = vec![F::zero(); basis.len()];
                for (m, c) in r.terms() {
                    v[col(m)] = c.clone();
                }
                if space.insert(v) {
                    kept.push(g.clone());
                }
            }
            k = end;
        }
        kept
    }

    /// Minimal generator count by degree.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.minimal_generators().iter().map(|g| g.degree().unwrap()).collect();
        d.sort();
        d
    }
}

impl<F: Field> fmt::Display for GradedIdeal<F> {
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

impl<F: Field> fmt::Debug for GradedIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn v(n: usize, i: usize) -> Polynomial<Rational> {
        Polynomial::var(n, i)
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let n = 3;
        let i = GradedIdeal::new(n, vec![v(n, 0), v(n, 0).mul(&v(n, 1)), v(n, 1).mul(&v(n, 2)), v(n, 1)]).unwrap();
        assert_eq!(i.generator_degrees(), vec![1, 1]);
        assert_eq!(i.linear_forms_dim(), 2);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let n = 3;
        let f = v(n, 0).mul(&v(n, 1)).add(&v(n, 2));
        assert!(matches!(GradedIdeal::new(n, vec![f]), Err(Error::NotHomogeneous(_))));
    }
}
