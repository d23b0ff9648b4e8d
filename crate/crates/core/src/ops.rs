//! Ideal operations: intersection, quotients, saturation, coordinate
//! changes, kernels of module maps and generic initial ideals.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::buchberger;
use crate::ideal::{to_element, GradedIdeal};
use crate::linalg::Matrix;
use crate::module::{FreeModuleElement, ModuleOrder, Term};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;

/// Default bound `B` for random matrix entries in `[-B, B]`.
pub const GIN_ENTRY_BOUND: i64 = 50;
/// Number of seed pairs tried before [`gin`] gives up.
pub const GIN_ATTEMPTS: usize = 4;

fn check_ring<F: Field>(a: &GradedIdeal<F>, b: &GradedIdeal<F>) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch(a.nvars(), b.nvars()));
    }
    Ok(())
}

/// Elements of the submodule of `R^2` generated by `gens` whose first
/// component vanishes, read off the second component.
///
/// The first component is eliminated: the result generates
/// `{ h : (0, h) ∈ <gens> }`.
fn eliminate_first<F: Field>(nvars: usize, twists: [i32; 2], gens: Vec<[Polynomial<F>; 2]>) -> GradedIdeal<F> {
    let ord = ModuleOrder::elimination(nvars, twists.to_vec(), 1);
    let v: Vec<FreeModuleElement<F>> = gens.iter().map(|g| FreeModuleElement::from_components(&ord, g)).collect();
    let gb = buchberger(ord, &v);
    let out: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.leading_term().unwrap().comp == 1)
        .map(|e| e.component(nvars, 1))
        .collect();
    let ring = ModuleOrder::ring(nvars);
    let elems: Vec<FreeModuleElement<F>> = out.iter().map(|p| to_element(&ring, p)).collect();
    // the block-1 part of an elimination basis is a reduced basis of the result
    GradedIdeal::with_basis(nvars, crate::groebner::GroebnerBasis::from_parts(ring, elems))
}

/// `I ∩ J`.
pub fn intersect<F: Field>(i: &GradedIdeal<F>, j: &GradedIdeal<F>) -> Result<GradedIdeal<F>> {
    check_ring(i, j)?;
    let n = i.nvars();
    if i.is_zero() || j.is_zero() {
        return Ok(GradedIdeal::zero(n));
    }
    let mut gens = Vec::new();
    for f in i.generators() {
        gens.push([f.clone(), f.clone()]);
    }
    for g in j.generators() {
        gens.push([g.clone(), Polynomial::zero(n)]);
    }
    Ok(eliminate_first(n, [0, 0], gens))
}

/// `I : (f)` for a single homogeneous polynomial.
pub fn quotient_by<F: Field>(i: &GradedIdeal<F>, f: &Polynomial<F>) -> Result<GradedIdeal<F>> {
    let n = i.nvars();
    if f.is_zero() {
        return Ok(GradedIdeal::new(n, vec![Polynomial::one(n)])?);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    let mut gens = vec![[f.clone(), Polynomial::one(n)]];
    for g in i.generators() {
        gens.push([g.clone(), Polynomial::zero(n)]);
    }
    let d = f.degree().unwrap() as i32;
    Ok(eliminate_first(n, [0, d], gens))
}

/// `I : J`.
pub fn quotient<F: Field>(i: &GradedIdeal<F>, j: &GradedIdeal<F>) -> Result<GradedIdeal<F>> {
    check_ring(i, j)?;
    let mut acc: Option<GradedIdeal<F>> = None;
    for g in j.generators() {
        let q = quotient_by(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| GradedIdeal::new(i.nvars(), vec![Polynomial::one(i.nvars())]).unwrap()))
}

/// `I : x_v^∞`, read off a revlex basis with `x_v` moved to the last position.
pub fn saturate_by_variable<F: Field>(i: &GradedIdeal<F>, v: usize) -> GradedIdeal<F> {
    let n = i.nvars();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(v, n - 1);
    let moved = GradedIdeal::new(n, i.generators().iter().map(|g| g.permute(&perm)).collect()).unwrap();
    let gens: Vec<Polynomial<F>> = moved
        .groebner_polynomials()
        .into_iter()
        .map(|g| {
            let e = g.var_content(n - 1);
            g.div_monomial(&Monomial::var(n, n - 1, e)).unwrap().permute(&perm)
        })
        .collect();
    GradedIdeal::new(n, gens).unwrap()
}

/// Saturation with respect to the irrelevant ideal, as `∩_v (I : x_v^∞)`.
pub fn saturate<F: Field>(i: &GradedIdeal<F>) -> GradedIdeal<F> {
    let n = i.nvars();
    let mut acc: Option<GradedIdeal<F>> = None;
    for v in 0..n {
        let s = saturate_by_variable(i, v);
        if s.contains(&Polynomial::one(n)) {
            continue;
        }
        acc = Some(match acc {
            None => s,
            Some(a) if a.contains_ideal(&s) => s,
            Some(a) if s.contains_ideal(&a) => a,
            Some(a) => intersect(&a, &s).unwrap(),
        });
    }
    // all colon ideals are the unit ideal: I is m-primary
    acc.unwrap_or_else(|| GradedIdeal::new(n, vec![Polynomial::one(n)]).unwrap())
}

pub fn is_saturated<F: Field>(i: &GradedIdeal<F>) -> bool {
    i.contains_ideal(&saturate(i))
}

/// Substitute `x_i -> sum_j g[i][j] x_j` in every generator.
pub fn change_coordinates<F: Field>(i: &GradedIdeal<F>, g: &[Vec<F>]) -> Result<GradedIdeal<F>> {
    let n = i.nvars();
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::RingMismatch(n, g.len()));
    }
    if Matrix::from_rows(g.to_vec()).determinant().is_zero() {
        return Err(Error::SingularMatrix);
    }
    GradedIdeal::new(n, i.generators().iter().map(|p| p.change_coordinates(g)).collect())
}

/// Invertible `n x n` matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix<F: Field>(n: usize, seed: u64, bound: i64) -> Vec<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g: Vec<Vec<F>> =
            (0..n).map(|_| (0..n).map(|_| F::from_i64(rng.gen_range(-bound..=bound))).collect()).collect();
        if !Matrix::from_rows(g.clone()).determinant().is_zero() {
            return g;
        }
    }
}

/// A generic initial ideal together with the two seeds that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gin {
    pub ideal: MonomialIdeal,
    pub seeds: [u64; 2],
}

/// Initial ideal in coordinates drawn from `seed`.
pub fn initial_in_random_coordinates<F: Field>(i: &GradedIdeal<F>, seed: u64, bound: i64) -> MonomialIdeal {
    let g = random_matrix::<F>(i.nvars(), seed, bound);
    change_coordinates(i, &g).expect("random matrix is invertible").initial_ideal()
}

/// Generic initial ideal with respect to revlex.
///
/// Two independently seeded coordinate changes must give the same strongly
/// stable initial ideal; otherwise fresh seeds are drawn.
pub fn gin<F: Field>(i: &GradedIdeal<F>, seed: u64) -> Result<Gin> {
    gin_with_bound(i, seed, GIN_ENTRY_BOUND)
}

pub fn gin_with_bound<F: Field>(i: &GradedIdeal<F>, seed: u64, bound: i64) -> Result<Gin> {
    for attempt in 0..GIN_ATTEMPTS as u64 {
        let s1 = seed.wrapping_add(2 * attempt);
        let s2 = s1.wrapping_add(1);
        let a = initial_in_random_coordinates(i, s1, bound);
        if !a.is_strongly_stable() {
            continue;
        }
        let b = initial_in_random_coordinates(i, s2, bound);
        if a == b {
            return Ok(Gin { ideal: a, seeds: [s1, s2] });
        }
    }
    Err(Error::GinDisagreement(GIN_ATTEMPTS))
}

/// Generators of the kernel of the map `R^r -> target` sending `e_k` to `images[k]`.
///
/// `source_twists[k]` is the degree of `e_k`; it must equal the degree of
/// `images[k]` whenever that image is nonzero. Kernel elements are returned
/// as coefficient vectors of length `r`.
pub fn kernel_of_map<F: Field>(
    target: &Arc<ModuleOrder>,
    images: &[FreeModuleElement<F>],
    source_twists: &[i32],
) -> Result<Vec<Vec<Polynomial<F>>>> {
    let n = target.nvars();
    let m = target.rank();
    let r = images.len();
    assert_eq!(source_twists.len(), r);
    for (k, v) in images.iter().enumerate() {
        if !v.is_homogeneous(target) {
            return Err(Error::NotHomogeneous(format!("{v:?}")));
        }
        if let Some(d) = v.degree(target) {
            if d != source_twists[k] {
                return Err(Error::NotHomogeneous(format!("image {k} has degree {d}, expected {}", source_twists[k])));
            }
        }
    }
    let mut twists = target.twists().to_vec();
    twists.extend_from_slice(source_twists);
    let ord = ModuleOrder::elimination(n, twists, m);
    let gens: Vec<FreeModuleElement<F>> = images
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let mut terms: Vec<(Term, F)> = v.terms().to_vec();
            terms.push((Term::new(Monomial::one(n), m + k), F::one()));
            FreeModuleElement::from_terms(&ord, terms)
        })
        .collect();
    let gb = buchberger(ord, &gens);
    Ok(gb
        .elements()
        .iter()
        .filter(|e| e.leading_term().unwrap().comp as usize >= m)
        .map(|e| (0..r).map(|k| e.component(n, m + k)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num_traits::{One, Zero};

    type P = Polynomial<Rational>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn ideal(n: usize, g: Vec<P>) -> GradedIdeal<Rational> {
        GradedIdeal::new(n, g).unwrap()
    }

    #[test]
    fn intersections() {
        let n = 3;
        let a = ideal(n, vec![x(n, 0)]);
        let b = ideal(n, vec![x(n, 1)]);
        assert!(intersect(&a, &b).unwrap().same_ideal(&ideal(n, vec![x(n, 0).mul(&x(n, 1))])));
        let c = ideal(n, vec![x(n, 0), x(n, 1)]);
        let d = ideal(n, vec![x(n, 2)]);
        let e = ideal(n, vec![x(n, 0).mul(&x(n, 2)), x(n, 1).mul(&x(n, 2))]);
        assert!(intersect(&c, &d).unwrap().same_ideal(&e));
        assert!(intersect(&c, &c).unwrap().same_ideal(&c));
    }

    #[test]
    fn quotients() {
        let n = 3;
        let i = ideal(n, vec![x(n, 0).mul(&x(n, 1))]);
        assert!(quotient(&i, &ideal(n, vec![x(n, 0)])).unwrap().same_ideal(&ideal(n, vec![x(n, 1)])));
        let unit = ideal(n, vec![P::one(n)]);
        assert!(quotient(&i, &unit).unwrap().same_ideal(&i));
        let j = ideal(n, vec![x(n, 0).pow(2), x(n, 0).mul(&x(n, 1))]);
        let q = quotient(&j, &ideal(n, vec![x(n, 0)])).unwrap();
        assert!(q.same_ideal(&ideal(n, vec![x(n, 0), x(n, 1)])));
    }

    #[test]
    fn saturation() {
        let n = 4;
        let m: Vec<P> = (0..n).map(|i| x(n, 0).mul(&x(n, i))).collect();
        let s = saturate(&ideal(n, m));
        assert!(s.same_ideal(&ideal(n, vec![x(n, 0)])));
        assert!(saturate(&s).same_ideal(&s));
        assert!(is_saturated(&s));
    }

    #[test]
    fn coordinates() {
        let n = 2;
        let i = ideal(n, vec![x(n, 0)]);
        let id = vec![vec![Rational::one(), Rational::zero()], vec![Rational::zero(), Rational::one()]];
        assert!(change_coordinates(&i, &id).unwrap().same_ideal(&i));
        let sw = vec![vec![Rational::zero(), Rational::one()], vec![Rational::one(), Rational::zero()]];
        assert!(change_coordinates(&i, &sw).unwrap().same_ideal(&ideal(n, vec![x(n, 1)])));
        let sing = vec![vec![Rational::one(), Rational::one()], vec![Rational::one(), Rational::one()]];
        assert_eq!(change_coordinates(&i, &sing).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn gin_of_binary_quadric() {
        let n = 2;
        let g = gin(&ideal(n, vec![x(n, 0).mul(&x(n, 1))]), 7).unwrap();
        assert_eq!(g.ideal, MonomialIdeal::from_exponents(2, &[&[2, 0]]));
    }

    #[test]
    fn koszul_kernel() {
        let n = 2;
        let ring = ModuleOrder::ring(n);
        let imgs = vec![to_element(&ring, &x(n, 0)), to_element(&ring, &x(n, 1))];
        let k = kernel_of_map(&ring, &imgs, &[1, 1]).unwrap();
        assert_eq!(k.len(), 1);
        let s = &k[0];
        assert!(s[0].mul(&x(n, 0)).add(&s[1].mul(&x(n, 1))).is_zero());
        assert_eq!(s[0].degree(), Some(1));
        // zero map: everything is in the kernel
        let z = kernel_of_map::<Rational>(&ring, &[FreeModuleElement::zero(), FreeModuleElement::zero()], &[1, 1]).unwrap();
        assert_eq!(z.len(), 2);
    }
}
