//! Curves from pairs of binary forms, and the explicit catalog ideals.
//!
//! With `S = K[x_0, x_1]`, `I_D = (x_2^{d-1}, x_3, ..., x_n)` and forms
//! `f_1, ..., f_{n-2}, f` in `S`, the map `α: I_D -> S(a+n-4)` sends
//! `x_2^{d-1} -> f` and `x_i -> f_{i-2}`; its kernel is the ideal of a curve
//! of degree `d` and genus `C(d-2,2) - (n-3) - a` whose Rao module is
//! `(S/(f_1, ..., f_{n-2}, f))(a+n-4)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::CurveSpec;
use crate::ideal::GradedIdeal;
use crate::linalg::RowSpace;
use crate::module::{FreeModuleElement, ModuleOrder};
use crate::monomial::Monomial;
use crate::ops::kernel_of_map;
use crate::poly::Polynomial;

/// Data for the construction: binary forms live in two variables `x_0, x_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionInput<F: Field> {
    pub n: usize,
    pub d: u32,
    pub a: u32,
    /// `f_1, ..., f_{n-2}`, each of degree `a + n - 3`.
    pub fs: Vec<Polynomial<F>>,
    /// Degree `d + a + n - 5`, or zero.
    pub f: Polynomial<F>,
}

fn binary_coefficients<F: Field>(p: &Polynomial<F>, deg: u32) -> Vec<F> {
    let mut v = vec![F::zero(); deg as usize + 1];
    for (m, c) in p.terms() {
        v[m.exp(1) as usize] = c.clone();
    }
    v
}

/// Is `(forms)` primary to `(x_0, x_1)` in `K[x_0, x_1]`?
fn has_finite_colength<F: Field>(forms: &[Polynomial<F>]) -> bool {
    let gens: Vec<_> = forms.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Ok(j) = GradedIdeal::new(2, gens) else { return false };
    let init = j.initial_ideal();
    let pure = |v: usize| init.generators().iter().any(|m| m.support_mask() & !(1 << v) == 0);
    pure(0) && pure(1)
}

impl<F: Field> ConstructionInput<F> {
    /// `C(d-2,2) - (n-3) - a`; this is `g_max - a` except for `d = 2`, where it is one more.
    pub fn genus(&self) -> i64 {
        let d = self.d as i64;
        (d - 2) * (d - 3) / 2 - (self.n as i64 - 3) - self.a as i64
    }

    /// Check the degree, independence and finite-length conditions.
    pub fn validate(&self) -> Result<()> {
        let (n, d, a) = (self.n, self.d, self.a);
        if n < 3 {
            return Err(Error::BadConstruction(format!("n = {n} < 3")));
        }
        if d < 2 {
            return Err(Error::BadConstruction(format!("d = {d} < 2")));
        }
        if d == 2 && a == 0 {
            return Err(Error::BadConstruction("d = 2 needs a > 0".into()));
        }
        if d + a + n as u32 <= 5 {
            return Err(Error::BadConstruction("deg f = d + a + n - 5 must be positive".into()));
        }
        if self.fs.len() != n - 2 {
            return Err(Error::BadConstruction(format!("expected {} forms f_i, got {}", n - 2, self.fs.len())));
        }
        let e = a + n as u32 - 3;
        for (k, p) in self.fs.iter().enumerate() {
            if p.nvars() != 2 {
                return Err(Error::RingMismatch(2, p.nvars()));
            }
            if p.is_zero() || !p.is_homogeneous() || p.degree() != Some(e) {
                return Err(Error::BadConstruction(format!("f_{} = {p} is not a form of degree {e}", k + 1)));
            }
        }
        if self.f.nvars() != 2 {
            return Err(Error::RingMismatch(2, self.f.nvars()));
        }
        let ef = d + a + n as u32 - 5;
        if !self.f.is_zero() && (!self.f.is_homogeneous() || self.f.degree() != Some(ef)) {
            return Err(Error::BadConstruction(format!("f = {} is not a form of degree {ef}", self.f)));
        }
        let mut space = RowSpace::new(e as usize + 1);
        for p in &self.fs {
            if !space.insert(binary_coefficients(p, e)) {
                return Err(Error::Degenerate);
            }
        }
        let mut all = self.fs.clone();
        all.push(self.f.clone());
        if !has_finite_colength(&all) {
            return Err(Error::BadConstruction("gcd(f_1, ..., f_{n-2}, f) is not 1".into()));
        }
        Ok(())
    }

    /// The forms `f_1, ..., f_{n-2}, f` (with `f` possibly zero).
    pub fn rao_forms(&self) -> Vec<Polynomial<F>> {
        let mut v = self.fs.clone();
        v.push(self.f.clone());
        v
    }
}

/// `I_C = ker(α)` as an ideal in `n + 1` variables, with minimal generators.
pub fn construct_curve<F: Field>(input: &ConstructionInput<F>) -> Result<GradedIdeal<F>> {
    input.validate()?;
    let (n, d, a) = (input.n, input.d, input.a as i32);
    let nv = n + 1;
    let shift = a + n as i32 - 4;
    let target = ModuleOrder::top(nv, vec![-shift]);
    let mut gens = vec![Polynomial::monomial(Monomial::var(nv, 2, d - 1))];
    gens.extend((3..=n).map(|i| Polynomial::var(nv, i)));
    let mut images = vec![input.f.with_nvars(nv)];
    images.extend(input.fs.iter().map(|p| p.with_nvars(nv)));
    let mut twists: Vec<i32> = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
    for i in 2..=n {
        images.push(Polynomial::var(nv, i));
        twists.push(1 - shift);
    }
    let elems: Vec<FreeModuleElement<F>> =
        images.iter().map(|p| FreeModuleElement::from_components(&target, std::slice::from_ref(p))).collect();
    let ker = kernel_of_map(&target, &elems, &twists)?;
    let mut out = Vec::new();
    for c in ker {
        let mut s = Polynomial::zero(nv);
        for (ck, g) in c.iter().zip(&gens) {
            if !ck.is_zero() {
                s = s.add(&ck.mul(g));
            }
        }
        if !s.is_zero() {
            out.push(s);
        }
    }
    let i = GradedIdeal::new(nv, out)?;
    GradedIdeal::new(nv, i.minimal_generators())
}

fn mono<F: Field>(nv: usize, e: &[(usize, u32)]) -> Polynomial<F> {
    let mut ex = vec![0u32; nv];
    for &(i, k) in e {
        ex[i] += k;
    }
    Polynomial::monomial(Monomial::from_exponents(&ex))
}

/// `x_0 x_i + x_1 x_{i+1}` for `from <= i <= n - 1`.
fn scroll_forms<F: Field>(nv: usize, n: usize, from: usize) -> Vec<Polynomial<F>> {
    (from..n).map(|i| mono::<F>(nv, &[(0, 1), (i, 1)]).add(&mono(nv, &[(1, 1), (i + 1, 1)]))).collect()
}

/// Degree of `h` for the catalog curve of genus `g`, see [`CurveSpec::construction_a`].
pub fn construction_a(n: usize, d: u32, g: i64) -> Result<u32> {
    Ok(CurveSpec::new(n, d, g)?.construction_a() as u32)
}

/// The extremal curve `(x_2^{d-1}, x_3..x_n)(x_2..x_n) + (x_0^a x_2^{d-1} + x_1^{d+a-2} x_3, x_0 x_i + x_1 x_{i+1})`.
pub fn catalog_extremal<F: Field>(n: usize, d: u32, g: i64) -> Result<GradedIdeal<F>> {
    let a = construction_a(n, d, g)?;
    let nv = n + 1;
    let mut left = vec![Monomial::var(nv, 2, d - 1)];
    left.extend((3..=n).map(|i| Monomial::var(nv, i, 1)));
    let mut prods: Vec<Monomial> = Vec::new();
    for l in &left {
        for i in 2..=n {
            let m = l.mul(&Monomial::var(nv, i, 1));
            if !prods.contains(&m) {
                prods.push(m);
            }
        }
    }
    let mut gens: Vec<Polynomial<F>> = prods.into_iter().map(Polynomial::monomial).collect();
    gens.push(mono::<F>(nv, &[(0, a), (2, d - 1)]).add(&mono(nv, &[(1, d + a - 2), (3, 1)])));
    gens.extend(scroll_forms(nv, n, 3));
    let i = GradedIdeal::new(nv, gens)?;
    GradedIdeal::new(nv, i.minimal_generators())
}

/// The construction data behind [`catalog_extremal`]:
/// `f_k = (-1)^k x_0^{a+k-1} x_1^{n-2-k}` and `f = x_1^{d+a+n-5}`.
pub fn catalog_input<F: Field>(n: usize, d: u32, g: i64) -> Result<ConstructionInput<F>> {
    let a = construction_a(n, d, g)?;
    let fs = (1..=n - 2)
        .map(|k| {
            let sign = if k % 2 == 0 { F::one() } else { -F::one() };
            mono::<F>(2, &[(0, a + k as u32 - 1), (1, (n - 2 - k) as u32)]).scale(&sign)
        })
        .collect();
    let f = mono(2, &[(1, d + a + n as u32 - 5)]);
    Ok(ConstructionInput { n, d, a, fs, f })
}

/// `(x_2..x_n)^2 + (x_0^{a+1} x_3 + x_1^{a+1} x_4, x_0 x_i + x_1 x_{i+1} | 4 <= i <= n-1)`,
/// a twisted family of cubics whose gin is the alternate one.
pub fn catalog_d3_alternate<F: Field>(n: usize, a: u32) -> Result<GradedIdeal<F>> {
    if n < 5 || a < 1 {
        return Err(Error::Inadmissible(format!("alternate cubic catalog needs n >= 5, a >= 1 (got n={n}, a={a})")));
    }
    let nv = n + 1;
    let mut gens = Vec::new();
    for i in 2..=n {
        for j in i..=n {
            gens.push(mono::<F>(nv, &[(i, 1), (j, 1)]));
        }
    }
    gens.push(mono::<F>(nv, &[(0, a + 1), (3, 1)]).add(&mono(nv, &[(1, a + 1), (4, 1)])));
    gens.extend(scroll_forms(nv, n, 4));
    GradedIdeal::new(nv, gens)
}

/// Construction data for a non-extremal curve with `h^1 = ρ` for `j <= 1`
/// but `h^1(2) < ρ(2)`.
///
/// Writing `a + n - 3 = k(n-3) + ε` with `0 <= ε < n-3`, the forms are
/// `x_0^{a+n-3}` and `x_0^{ik} x_1^{(n-3-i)k+ε}` for `0 <= i <= n-4`, with `f = 0`.
pub fn nonextremal_input<F: Field>(n: usize, a: u32, d: u32) -> Result<ConstructionInput<F>> {
    if n < 4 || a == 0 || d < 4 {
        return Err(Error::Inadmissible(format!("non-extremal catalog needs n >= 4, a > 0, d >= 4 (got {n}, {a}, {d})")));
    }
    let e = a + n as u32 - 3;
    let m = n as u32 - 3;
    let (k, eps) = (e / m, e % m);
    let mut fs = vec![mono::<F>(2, &[(0, e)])];
    for i in 0..m {
        fs.push(mono(2, &[(0, i * k), (1, (m - i) * k + eps)]));
    }
    let input = ConstructionInput { n, d, a, fs, f: Polynomial::zero(2) };
    input.validate()?;
    Ok(input)
}

pub fn catalog_nonextremal<F: Field>(n: usize, a: u32, d: u32) -> Result<(GradedIdeal<F>, ConstructionInput<F>)> {
    let input = nonextremal_input(n, a, d)?;
    Ok((construct_curve(&input)?, input))
}

fn random_form<F: Field>(rng: &mut ChaCha8Rng, deg: u32, bound: i64) -> Polynomial<F> {
    let terms = (0..=deg)
        .map(|k| (Monomial::from_exponents(&[deg - k, k]), F::from_i64(rng.gen_range(-bound..=bound))))
        .collect();
    Polynomial::from_terms(2, terms)
}

/// A random admissible input; `f` is zero with probability 1/5.
pub fn random_input<F: Field>(n: usize, d: u32, a: u32, seed: u64) -> Result<ConstructionInput<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let fs = (0..n - 2).map(|_| random_form(&mut rng, a + n as u32 - 3, 3)).collect();
        let f = if rng.gen_range(0..5) == 0 {
            Polynomial::zero(2)
        } else {
            random_form(&mut rng, d + a + n as u32 - 5, 3)
        };
        let input = ConstructionInput { n, d, a, fs, f };
        match input.validate() {
            Ok(()) => return Ok(input),
            Err(Error::Degenerate) | Err(Error::BadConstruction(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::BadConstruction(format!("no admissible random input for n={n}, d={d}, a={a}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn rejects_dependent_forms() {
        let x0 = P::var(2, 0);
        let input = ConstructionInput { n: 4, d: 3, a: 0, fs: vec![x0.clone(), x0.clone()], f: P::var(2, 1).pow(2) };
        assert!(matches!(input.validate(), Err(Error::Degenerate)));
    }

    #[test]
    fn rejects_common_factor() {
        let x0 = P::var(2, 0);
        let input = ConstructionInput { n: 3, d: 4, a: 1, fs: vec![x0.clone()], f: x0.pow(3) };
        assert!(matches!(input.validate(), Err(Error::BadConstruction(_))));
        let input = ConstructionInput { n: 3, d: 4, a: 1, fs: vec![x0.clone()], f: P::zero(2) };
        assert!(input.validate().is_err());
    }

    #[test]
    fn rejects_wrong_degree() {
        let input = ConstructionInput { n: 3, d: 4, a: 1, fs: vec![P::var(2, 0).pow(2)], f: P::var(2, 1).pow(3) };
        assert!(matches!(input.validate(), Err(Error::BadConstruction(_))));
    }

    #[test]
    fn construction_matches_catalog() {
        for (n, d, g) in [(3, 4, 0), (4, 4, -1), (4, 3, -1), (3, 3, 0), (5, 4, -1)] {
            let input = catalog_input::<Rational>(n, d, g).unwrap();
            let c = construct_curve(&input).unwrap();
            let e = catalog_extremal::<Rational>(n, d, g).unwrap();
            assert!(c.same_ideal(&e), "({n},{d},{g}): {c} vs {e}");
        }
    }

    #[test]
    fn nonextremal_forms() {
        let i = nonextremal_input::<Rational>(4, 1, 4).unwrap();
        assert_eq!(i.fs, vec![mono(2, &[(0, 2)]), mono(2, &[(1, 2)])]);
        let i = nonextremal_input::<Rational>(5, 2, 4).unwrap();
        assert_eq!(i.fs.len(), 3);
    }
}
