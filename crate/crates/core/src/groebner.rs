//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Ideals are the rank-one case. Pairs are processed degree by degree (the
//! normal strategy for homogeneous input) and pruned with the Gebauer–Möller
//! criteria; the coprimality criterion is only applied in rank one, where it
//! is valid.

use std::cmp::Ordering;
use std::sync::Arc;


use crate::field::Field;
use crate::module::{FreeModuleElement, ModuleOrder, OrderKind, Term};
use crate::monomial::Monomial;

/// A Gröbner basis together with the order it was computed for.
///
/// Bases produced by [`buchberger`] are reduced and monic. Bases produced by
/// [`GroebnerBasis::syzygies`] are monic but not tail-reduced.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: Arc<ModuleOrder>,
    elements: Vec<FreeModuleElement<F>>,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    degree: i32,
}

struct Reducers {
    leads: Vec<(Term, u32, usize)>,
}

impl Reducers {
    fn new() -> Self {
        Reducers { leads: Vec::new() }
    }

    fn push(&mut self, t: Term, idx: usize) {
        self.leads.push((t, t.mono.support_mask(), idx));
    }

    fn remove(&mut self, idx: usize) {
        self.leads.retain(|l| l.2 != idx);
    }

    #[inline]
    fn find(&self, t: &Term) -> Option<usize> {
        let mask = t.mono.support_mask();
        self.leads
            .iter()
            .find(|(l, lm, _)| l.comp == t.comp && lm & !mask == 0 && l.mono.divides(&t.mono))
            .map(|l| l.2)
    }
}

/// Full reduction of `f` by the monic elements `basis` (indexed through `reducers`).
fn reduce_full<F: Field>(
    order: &ModuleOrder,
    f: FreeModuleElement<F>,
    basis: &[FreeModuleElement<F>],
    reducers: &Reducers,
    mut record: Option<&mut Vec<(usize, Monomial, F)>>,
) -> FreeModuleElement<F> {
    let mut p = f;
    let mut rem = FreeModuleElement::zero();
    let mut pos = 0;
    while pos < p.len() {
        let (t, c) = p.terms()[pos].clone();
        if let Some(k) = reducers.find(&t) {
            let g = &basis[k];
            let lt = g.leading_term().unwrap();
            let m = t.mono.div(&lt.mono).unwrap();
            let coef = -c.clone();
            if let Some(rec) = record.as_deref_mut() {
                rec.push((k, m, c));
            }
            p = p.add_scaled_from(order, pos + 1, &coef, &m, g, 1);
            pos = 0;
        } else {
            rem.push_term(t, c);
            pos += 1;
            // keep p short: move the processed prefix out occasionally
            if pos > 64 {
                p.truncate_front(pos);
                pos = 0;
            }
        }
    }
    rem
}

/// Reduce only while the leading term is reducible.
fn reduce_top<F: Field>(
    order: &ModuleOrder,
    f: FreeModuleElement<F>,
    basis: &[FreeModuleElement<F>],
    reducers: &Reducers,
) -> FreeModuleElement<F> {
    let mut p = f;
    while let Some((t, c)) = p.terms().first().cloned() {
        let Some(k) = reducers.find(&t) else { break };
        let g = &basis[k];
        let m = t.mono.div(&g.leading_term().unwrap().mono).unwrap();
        p = p.add_scaled_from(order, 1, &-c, &m, g, 1);
    }
    p
}

fn spoly<F: Field>(order: &ModuleOrder, f: &FreeModuleElement<F>, g: &FreeModuleElement<F>, lcm: &Term) -> FreeModuleElement<F> {
    let uf = lcm.mono.div(&f.leading_term().unwrap().mono).unwrap();
    let ug = lcm.mono.div(&g.leading_term().unwrap().mono).unwrap();
    // both monic: the leading terms cancel
    let a = f.mul_term(&uf, &F::one());
    a.add_scaled_from(order, 1, &-F::one(), &ug, g, 1)
}

fn lcm_term(a: &Term, b: &Term) -> Term {
    Term { mono: a.mono.lcm(&b.mono), comp: a.comp }
}

/// Gebauer–Möller update after adding `basis[h]`.
fn update<F: Field>(
    order: &ModuleOrder,
    basis: &[FreeModuleElement<F>],
    active: &mut [bool],
    reducers: &mut Reducers,
    pairs: &mut Vec<Pair>,
    h: usize,
) {
    let rank_one = order.rank() == 1;
    let lh = *basis[h].leading_term().unwrap();
    let mut cands: Vec<Pair> = (0..h)
        .filter(|&g| active[g] && basis[g].leading_term().unwrap().comp == lh.comp)
        .map(|g| {
            let lcm = lcm_term(basis[g].leading_term().unwrap(), &lh);
            Pair { i: g, j: h, lcm, degree: order.degree(&lcm) }
        })
        .collect();
    let coprime = |p: &Pair| rank_one && basis[p.i].leading_term().unwrap().mono.is_coprime(&lh.mono);

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = cands.pop() {
        let dominated = cands.iter().chain(kept.iter()).any(|q| q.lcm.mono.divides(&p.lcm.mono));
        if coprime(&p) || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !coprime(p));

    // old pairs made redundant by h
    pairs.retain(|p| {
        if p.lcm.comp != lh.comp || !lh.mono.divides(&p.lcm.mono) {
            return true;
        }
        let li = lcm_term(basis[p.i].leading_term().unwrap(), &lh);
        let lj = lcm_term(basis[p.j].leading_term().unwrap(), &lh);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(kept);

    for g in 0..h {
        if active[g] && lh.divides(basis[g].leading_term().unwrap()) {
            active[g] = false;
            reducers.remove(g);
        }
    }
    active[h] = true;
    reducers.push(lh, h);
}

/// Reduced Gröbner basis of the submodule generated by `gens` (homogeneous).
pub fn buchberger<F: Field>(order: Arc<ModuleOrder>, gens: &[FreeModuleElement<F>]) -> GroebnerBasis<F> {
    let mut pending: Vec<FreeModuleElement<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    pending.sort_by_key(|g| std::cmp::Reverse(g.degree(&order).unwrap()));

    let mut basis: Vec<FreeModuleElement<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut reducers = Reducers::new();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let pd = pairs.iter().map(|p| p.degree).min();
        let gd = pending.last().map(|g| g.degree(&order).unwrap());
        let deg = match (pd, gd) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut todo: Vec<FreeModuleElement<F>> = Vec::new();
        let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| p.degree == deg);
        pairs = later;
        let mut now = now;
        now.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        for p in &now {
            todo.push(spoly(&order, &basis[p.i], &basis[p.j], &p.lcm));
        }
        while pending.last().map(|g| g.degree(&order).unwrap()) == Some(deg) {
            todo.push(pending.pop().unwrap());
        }
        for f in todo {
            let r = reduce_full(&order, f, &basis, &reducers, None);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            basis.push(r);
            active.push(false);
            let h = basis.len() - 1;
            update(&order, &basis, &mut active, &mut reducers, &mut pairs, h);
        }
    }

    // inter-reduce the surviving elements
    let mut elems: Vec<FreeModuleElement<F>> =
        basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    let mut out = Vec::with_capacity(elems.len());
    for k in 0..elems.len() {
        let mut reds = Reducers::new();
        for (l, g) in elems.iter().enumerate() {
            if l != k {
                reds.push(*g.leading_term().unwrap(), l);
            }
        }
        let g = std::mem::replace(&mut elems[k], FreeModuleElement::zero());
        let lead = (g.terms()[0].0, g.terms()[0].1.clone());
        let mut tail = g.clone();
        tail.truncate_front(1);
        let tail = reduce_full(&order, tail, &elems, &reds, None);
        let mut red = FreeModuleElement::zero();
        red.push_term(lead.0, lead.1);
        for (t, c) in tail.terms() {
            red.push_term(*t, c.clone());
        }
        elems[k] = red.clone();
        out.push(red);
    }
    GroebnerBasis::from_parts(order, out)
}

impl<F: Field> GroebnerBasis<F> {
    /// Wrap elements already known to form a Gröbner basis.
    pub(crate) fn from_parts(order: Arc<ModuleOrder>, mut elements: Vec<FreeModuleElement<F>>) -> Self {
        // component first, then lex-descending lead monomials: the indexing
        // that keeps Schreyer resolutions within the Hilbert syzygy bound
        elements.sort_by(|a, b| {
            let (ta, tb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
            ta.comp.cmp(&tb.comp).then_with(|| lex_cmp(&tb.mono, &ta.mono)).then_with(|| order.cmp(tb, ta))
        });
        GroebnerBasis { order, elements }
    }

    pub fn order(&self) -> &Arc<ModuleOrder> {
        &self.order
    }

    pub fn elements(&self) -> &[FreeModuleElement<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.elements.iter().map(|g| *g.leading_term().unwrap()).collect()
    }

    fn reducers(&self) -> Reducers {
        let mut r = Reducers::new();
        for (i, g) in self.elements.iter().enumerate() {
            r.push(*g.leading_term().unwrap(), i);
        }
        r
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &FreeModuleElement<F>) -> FreeModuleElement<F> {
        reduce_full(&self.order, f.clone(), &self.elements, &self.reducers(), None)
    }

    /// Leading-term-only reduction.
    pub fn top_reduce(&self, f: &FreeModuleElement<F>) -> FreeModuleElement<F> {
        reduce_top(&self.order, f.clone(), &self.elements, &self.reducers())
    }

    pub fn contains(&self, f: &FreeModuleElement<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Division with quotients: returns `(q, r)` with `f = sum q_k m_k g_k + r`
    /// where each quotient entry is `(k, m_k, coefficient)`.
    pub fn divide(&self, f: &FreeModuleElement<F>) -> (Vec<(usize, Monomial, F)>, FreeModuleElement<F>) {
        let mut rec = Vec::new();
        let r = reduce_full(&self.order, f.clone(), &self.elements, &self.reducers(), Some(&mut rec));
        (rec, r)
    }

    /// Schreyer order on the free module with one basis element per basis element of `self`.
    pub fn schreyer_order(&self) -> Arc<ModuleOrder> {
        let m = self.elements.len();
        let mut lead = Vec::with_capacity(m);
        let mut offset = Vec::with_capacity(m);
        let mut keys: Vec<(u32, usize)> = Vec::with_capacity(m);
        for (i, g) in self.elements.iter().enumerate() {
            let t = g.leading_term().unwrap();
            let p = t.comp as usize;
            match self.order.kind() {
                OrderKind::Top => {
                    lead.push(t.mono);
                    offset.push(self.order.twists()[p]);
                    keys.push((p as u32, i));
                }
                OrderKind::Schreyer { lead: pl, offset: po, rank: pr } => {
                    lead.push(t.mono.mul(&pl[p]));
                    offset.push(po[p]);
                    keys.push((pr[p], i));
                }
                OrderKind::Elimination { .. } => panic!("Schreyer order over an elimination order"),
            }
        }
        let mut idx: Vec<usize> = (0..m).collect();
        idx.sort_by_key(|&i| keys[i]);
        let mut rank = vec![0u32; m];
        for (r, &i) in idx.iter().enumerate() {
            rank[i] = r as u32;
        }
        ModuleOrder::schreyer(self.order.nvars(), lead, offset, rank)
    }

    /// Gröbner basis of the first syzygy module of the basis elements, in the
    /// Schreyer order, built from the reductions of S-pairs.
    pub fn syzygies(&self) -> GroebnerBasis<F> {
        let sorder = self.schreyer_order();
        let reducers = self.reducers();
        let mut out = Vec::new();
        let m = self.elements.len();
        for i in 0..m {
            let ti = *self.elements[i].leading_term().unwrap();
            // candidate lead monomials lcm / lt_i for j > i, same component
            let mut cands: Vec<(Monomial, usize)> = Vec::new();
            for j in i + 1..m {
                let tj = self.elements[j].leading_term().unwrap();
                if tj.comp != ti.comp {
                    continue;
                }
                let u = ti.mono.lcm(&tj.mono).div(&ti.mono).unwrap();
                cands.push((u, j));
            }
            cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.1.cmp(&b.1)));
            let mut minimal: Vec<(Monomial, usize)> = Vec::new();
            for (u, j) in cands {
                if minimal.iter().any(|(v, _)| v.divides(&u)) {
                    continue;
                }
                minimal.push((u, j));
            }
            for (u, j) in minimal {
                let tj = self.elements[j].leading_term().unwrap();
                let lcm = Term { mono: ti.mono.lcm(&tj.mono), comp: ti.comp };
                let uj = lcm.mono.div(&tj.mono).unwrap();
                let s = spoly(&self.order, &self.elements[i], &self.elements[j], &lcm);
                let mut rec = Vec::new();
                let r = reduce_full(&self.order, s, &self.elements, &reducers, Some(&mut rec));
                debug_assert!(r.is_zero(), "S-pair of a Gröbner basis did not reduce to zero");
                let mut terms = vec![(Term::new(u, i), F::one()), (Term::new(uj, j), -F::one())];
                for (k, mk, c) in rec {
                    terms.push((Term::new(mk, k), -c));
                }
                let syz = FreeModuleElement::from_terms(&sorder, terms);
                debug_assert_eq!(syz.leading_term(), Some(&Term::new(u, i)));
                out.push(syz);
            }
        }
        GroebnerBasis::from_parts(sorder, out)
    }
}

/// Lexicographic comparison with `x_0` most significant.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for i in 0..a.nvars() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Is `v` zero?  Used by tests that multiply syzygies out.
pub fn is_zero_combination<F: Field>(
    order: &ModuleOrder,
    images: &[FreeModuleElement<F>],
    coeffs: &FreeModuleElement<F>,
) -> bool {
    crate::module::apply_map(order, images, coeffs).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::Polynomial;

    type Q = Polynomial<Rational>;

    fn gb(gens: &[Q]) -> GroebnerBasis<Rational> {
        let n = gens[0].nvars();
        let ord = ModuleOrder::ring(n);
        let v: Vec<_> = gens.iter().map(|g| FreeModuleElement::from_components(&ord, &[g.clone()])).collect();
        buchberger(ord, &v)
    }

    fn polys(g: &GroebnerBasis<Rational>) -> Vec<String> {
        let mut v: Vec<String> = g.elements().iter().map(|e| e.component(g.order().nvars(), 0).to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn hand_s_pair_example() {
        let n = 3;
        let x = |i| Q::var(n, i);
        let f1 = x(0).pow(2).sub(&x(1).mul(&x(2)));
        let f2 = x(0).mul(&x(1));
        let g = gb(&[f1, f2]);
        assert_eq!(polys(&g), vec!["x0*x1", "x0^2 - x1*x2", "x1^2*x2"]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let n = 3;
        let x = |i| Q::var(n, i);
        let g = gb(&[x(0).pow(2), x(0).mul(&x(1)), x(1).pow(3)]);
        assert_eq!(polys(&g), vec!["x0*x1", "x0^2", "x1^3"]);
    }

    #[test]
    fn normal_form_examples() {
        let n = 3;
        let x = |i| Q::var(n, i);
        let g = gb(&[x(0).pow(2).sub(&x(1).mul(&x(2)))]);
        let ord = g.order().clone();
        let nf = g.normal_form(&FreeModuleElement::from_components(&ord, &[x(0).pow(2)]));
        assert_eq!(nf.component(n, 0), x(1).mul(&x(2)));
        let g2 = gb(&[x(0), x(1)]);
        let f = FreeModuleElement::from_components(&ord, &[x(2).pow(2)]);
        assert_eq!(g2.normal_form(&f), f);
        let member = FreeModuleElement::from_components(&ord, &[x(0).mul(&x(2)).add(&x(1).pow(2))]);
        assert!(g2.contains(&member));
    }

    #[test]
    fn koszul_syzygy() {
        let n = 2;
        let g = gb(&[Q::var(n, 0), Q::var(n, 1)]);
        let syz = g.syzygies();
        assert_eq!(syz.len(), 1);
        let comps = syz.elements()[0].to_components(n, 2);
        // basis sorted lex-descending: x0 first
        assert_eq!(comps, vec![Q::var(n, 1), Q::var(n, 0).neg()]);
        let images = g.elements().to_vec();
        assert!(is_zero_combination(g.order(), &images, &syz.elements()[0]));
    }

    #[test]
    fn stable_ideal_syzygy_degrees() {
        let n = 3;
        let x = |i| Q::var(n, i);
        let g = gb(&[x(0).pow(2), x(0).mul(&x(1)), x(1).pow(3)]);
        let syz = g.syzygies();
        let mut degs: Vec<i32> = syz.elements().iter().map(|s| s.degree(syz.order()).unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![3, 4]);
        assert!(g.elements()[..1].len() == 1);
        let single = gb(&[x(0).pow(2)]);
        assert!(single.syzygies().is_empty());
    }
}
