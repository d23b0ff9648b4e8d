//! Graded free modules `R(-t_0) ⊕ ... ⊕ R(-t_{r-1})`, their term orders and elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;


use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// A module term `m * e_comp`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mono: Monomial,
    pub comp: u32,
}

impl Term {
    pub fn new(mono: Monomial, comp: usize) -> Self {
        Term { mono, comp: comp as u32 }
    }

    #[inline]
    pub fn divides(&self, o: &Term) -> bool {
        self.comp == o.comp && self.mono.divides(&o.mono)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Total degree (with twists), then revlex on the monomial, then smaller
    /// component index first.
    Top,
    /// Terms in components `< block` dominate all others; `Top` inside each block.
    Elimination { block: usize },
    /// Order induced by a Gröbner basis of the previous module: `m e_i` is
    /// compared through `m * lead[i]` (degree shifted by `offset[i]`), ties
    /// broken by `rank` (smaller rank is larger).
    Schreyer { lead: Vec<Monomial>, offset: Vec<i32>, rank: Vec<u32> },
}

/// A term order on a graded free module of fixed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    nvars: usize,
    twists: Vec<i32>,
    kind: OrderKind,
}

impl ModuleOrder {
    /// Degree revlex on the polynomial ring itself (rank one, twist zero).
    pub fn ring(nvars: usize) -> Arc<Self> {
        Arc::new(ModuleOrder { nvars, twists: vec![0], kind: OrderKind::Top })
    }

    pub fn top(nvars: usize, twists: Vec<i32>) -> Arc<Self> {
        Arc::new(ModuleOrder { nvars, twists, kind: OrderKind::Top })
    }

    pub fn elimination(nvars: usize, twists: Vec<i32>, block: usize) -> Arc<Self> {
        Arc::new(ModuleOrder { nvars, twists, kind: OrderKind::Elimination { block } })
    }

    pub fn schreyer(nvars: usize, lead: Vec<Monomial>, offset: Vec<i32>, rank: Vec<u32>) -> Arc<Self> {
        let twists = lead.iter().zip(&offset).map(|(l, o)| l.degree() as i32 + o).collect();
        Arc::new(ModuleOrder { nvars, twists, kind: OrderKind::Schreyer { lead, offset, rank } })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Degrees of the basis elements `e_i`.
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    #[inline]
    pub fn degree(&self, t: &Term) -> i32 {
        t.mono.degree() as i32 + self.twists[t.comp as usize]
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match &self.kind {
            OrderKind::Top => self.cmp_top(a, b),
            OrderKind::Elimination { block } => {
                let ba = (a.comp as usize) < *block;
                let bb = (b.comp as usize) < *block;
                ba.cmp(&bb).then_with(|| self.cmp_top(a, b))
            }
            OrderKind::Schreyer { lead, offset, rank } => {
                let (ia, ib) = (a.comp as usize, b.comp as usize);
                let ma = a.mono.mul(&lead[ia]);
                let mb = b.mono.mul(&lead[ib]);
                let da = ma.degree() as i32 + offset[ia];
                let db = mb.degree() as i32 + offset[ib];
                da.cmp(&db).then_with(|| ma.cmp_revlex(&mb)).then_with(|| rank[ib].cmp(&rank[ia]))
            }
        }
    }

    #[inline]
    fn cmp_top(&self, a: &Term, b: &Term) -> Ordering {
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| a.mono.cmp_revlex(&b.mono))
            .then_with(|| b.comp.cmp(&a.comp))
    }
}

/// An element of a graded free module; terms strictly descending in the
/// module order it was built for.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleElement<F: Field> {
    terms: Vec<(Term, F)>,
}

impl<F: Field> FreeModuleElement<F> {
    pub fn zero() -> Self {
        FreeModuleElement { terms: Vec::new() }
    }

    pub fn from_terms(order: &ModuleOrder, mut terms: Vec<(Term, F)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Term, F)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        FreeModuleElement { terms: out }
    }

    /// Basis vector `e_i`.
    pub fn basis(order: &ModuleOrder, i: usize) -> Self {
        FreeModuleElement { terms: vec![(Term::new(Monomial::one(order.nvars()), i), F::one())] }
    }

    pub fn from_components(order: &ModuleOrder, comps: &[Polynomial<F>]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((Term::new(*m, i), c.clone()));
            }
        }
        Self::from_terms(order, terms)
    }

    /// Dense component vector of length `rank`.
    pub fn to_components(&self, nvars: usize, rank: usize) -> Vec<Polynomial<F>> {
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); rank];
        for (t, c) in &self.terms {
            buckets[t.comp as usize].push((t.mono, c.clone()));
        }
        buckets.into_iter().map(|b| Polynomial::from_terms(nvars, b)).collect()
    }

    pub fn component(&self, nvars: usize, i: usize) -> Polynomial<F> {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().filter(|(t, _)| t.comp as usize == i).map(|(t, c)| (t.mono, c.clone())).collect(),
        )
    }

    #[inline]
    pub fn terms(&self) -> &[(Term, F)] {
        &self.terms
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

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Degree of the leading term; equals every term's degree when homogeneous.
    pub fn degree(&self, order: &ModuleOrder) -> Option<i32> {
        self.leading_term().map(|t| order.degree(t))
    }

    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        match self.terms.first() {
            None => true,
            Some((t, _)) => {
                let d = order.degree(t);
                self.terms.iter().all(|(s, _)| order.degree(s) == d)
            }
        }
    }

    /// Largest component index touched, plus one.
    pub fn support_rank(&self) -> usize {
        self.terms.iter().map(|(t, _)| t.comp as usize + 1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeModuleElement { terms: self.terms.iter().map(|(t, a)| (*t, a.clone() * c)).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        FreeModuleElement {
            terms: self.terms.iter().map(|(t, a)| (Term { mono: t.mono.mul(m), comp: t.comp }, a.clone() * c)).collect(),
        }
    }

    /// `self + c * m * other`, merged in `order`.
    pub fn add_scaled(&self, order: &ModuleOrder, c: &F, m: &Monomial, other: &Self) -> Self {
        self.add_scaled_from(order, 0, c, m, other, 0)
    }

    /// Merge `self[from..]` with `(c*m*other)[skip..]`; prefix terms of `self`
    /// before `from` are dropped.
    pub(crate) fn add_scaled_from(
        &self,
        order: &ModuleOrder,
        from: usize,
        c: &F,
        m: &Monomial,
        other: &Self,
        skip: usize,
    ) -> Self {
        let a = &self.terms[from..];
        let b = &other.terms[skip..];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut bt = b.first().map(|(t, _)| Term { mono: t.mono.mul(m), comp: t.comp });
        while i < a.len() {
            let Some(tb) = bt else { break };
            match order.cmp(&a[i].0, &tb) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((tb, b[j].1.clone() * c));
                    j += 1;
                    bt = b.get(j).map(|(t, _)| Term { mono: t.mono.mul(m), comp: t.comp });
                }
                Ordering::Equal => {
                    let mut v = b[j].1.clone() * c;
                    v += &a[i].1;
                    if !v.is_zero() {
                        out.push((tb, v));
                    }
                    i += 1;
                    j += 1;
                    bt = b.get(j).map(|(t, _)| Term { mono: t.mono.mul(m), comp: t.comp });
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        while j < b.len() {
            let (t, v) = &b[j];
            out.push((Term { mono: t.mono.mul(m), comp: t.comp }, v.clone() * c));
            j += 1;
        }
        FreeModuleElement { terms: out }
    }

    pub fn add(&self, order: &ModuleOrder, other: &Self) -> Self {
        self.add_scaled(order, &F::one(), &Monomial::one(order.nvars()), other)
    }

    pub fn sub(&self, order: &ModuleOrder, other: &Self) -> Self {
        self.add_scaled(order, &-F::one(), &Monomial::one(order.nvars()), other)
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, order: &ModuleOrder, p: &Polynomial<F>) -> Self {
        let mut acc = Self::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(order, c, m, self);
        }
        acc
    }

    /// Re-sort into another order on a module of the same rank.
    pub fn reorder(&self, order: &ModuleOrder) -> Self {
        Self::from_terms(order, self.terms.clone())
    }

    /// Drop the leading `k` terms.
    pub(crate) fn truncate_front(&mut self, k: usize) {
        self.terms.drain(..k);
    }

    pub(crate) fn push_term(&mut self, t: Term, c: F) {
        self.terms.push((t, c));
    }
}

impl<F: Field> fmt::Debug for FreeModuleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}*e{}", t.mono, t.comp)?;
        }
        Ok(())
    }
}

/// Image of a module element under `e_i -> images[i]`, with images living in
/// a module ordered by `target`.
pub fn apply_map<F: Field>(
    target: &ModuleOrder,
    images: &[FreeModuleElement<F>],
    v: &FreeModuleElement<F>,
) -> FreeModuleElement<F> {
    let mut acc = FreeModuleElement::zero();
    for (t, c) in v.terms() {
        acc = acc.add_scaled(target, c, &t.mono, &images[t.comp as usize]);
    }
    acc
}
