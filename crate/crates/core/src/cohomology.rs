//! Invariants of a curve read off its ideal: the Hilbert function and
//! polynomial, `h^1` and `h^2` of the ideal sheaf via local duality on the
//! minimal free resolution, the Hartshorne–Rao module with its module
//! structure, hyperplane sections and planar subcurves.
//!
//! For a saturated curve ideal in `R = K[x_0..x_n]` with `N = n + 1`,
//! `H^1(I_C(j))` is dual to `Ext^n(R/I, R)_{-j-N}` and `H^2(I_C(j))` to
//! `Ext^{n-1}(R/I, R)_{-j-N}`; both come from the dual of the minimal
//! resolution, one degree at a time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::ideal::GradedIdeal;
use crate::linalg::{Matrix, RowSpace};
use crate::module::{FreeModuleElement, ModuleOrder, Term};
use crate::monomial::{binomial, Monomial};
use crate::monomial_ideal::{hilbert_from_numerator, MonomialIdeal};
use crate::ops::saturate;
use crate::poly::Polynomial;
use crate::resolution::{free_resolution, Resolution};

/// Attempts made by [`hyperplane_section`] before giving up.
pub const HYPERPLANE_ATTEMPTS: usize = 8;

/// `N(t) / (1 - t)`, if `N(1) = 0`.
fn divide_one_minus_t(num: &[i64]) -> Option<Vec<i64>> {
    if num.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut out = Vec::with_capacity(num.len().saturating_sub(1));
    let mut acc = 0;
    for c in &num[..num.len() - 1] {
        acc += c;
        out.push(acc);
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    if out.is_empty() {
        out.push(0);
    }
    Some(out)
}

/// Krull dimension `k` and `Q(t)` with `H(t) = Q(t) / (1-t)^k`, from a
/// numerator over `(1-t)^nvars`.
pub fn reduce_numerator(num: &[i64], nvars: usize) -> (usize, Vec<i64>) {
    let mut q = num.to_vec();
    let mut k = nvars;
    while k > 0 && !(q.len() == 1 && q[0] == 0) {
        match divide_one_minus_t(&q) {
            Some(r) => {
                q = r;
                k -= 1;
            }
            None => break,
        }
    }
    (k, q)
}

/// Multiplicity and arithmetic genus of a one-dimensional scheme from its reduced numerator.
fn degree_genus(q: &[i64]) -> (i64, i64) {
    let e: i64 = q.iter().sum();
    let dq: i64 = q.iter().enumerate().map(|(k, c)| k as i64 * c).sum();
    (e, 1 - e + dq)
}

/// Hilbert function of `R/I` on a window together with the Hilbert polynomial `d j - g + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub window: (i64, i64),
    pub dims: Vec<u64>,
    /// Numerator of the Hilbert series over `(1-t)^N`.
    pub numerator: Vec<i64>,
    /// Regularity of the ideal, from its minimal resolution.
    pub regularity: i32,
    pub degree: i64,
    pub genus: i64,
}

impl HilbertTable {
    pub fn value(&self, j: i64) -> Option<u64> {
        if j < self.window.0 || j > self.window.1 {
            return None;
        }
        Some(self.dims[(j - self.window.0) as usize])
    }

    pub fn polynomial(&self, j: i64) -> i64 {
        self.degree * j - self.genus + 1
    }
}

/// Hilbert table of a curve ideal; computes the minimal resolution.
pub fn hilbert_table<F: Field>(i: &GradedIdeal<F>, window: (i64, i64)) -> Result<HilbertTable> {
    hilbert_table_with(i, &free_resolution(i), window)
}

/// Hilbert table using a known minimal resolution of `R/I`.
pub fn hilbert_table_with<F: Field>(i: &GradedIdeal<F>, res: &Resolution<F>, window: (i64, i64)) -> Result<HilbertTable> {
    let nv = i.nvars();
    let init = i.initial_ideal();
    let numerator = init.hilbert_numerator();
    let betti = res.betti();
    if betti.hilbert_numerator() != numerator {
        return Err(Error::Invariant("Hilbert numerator from the resolution differs from the initial ideal".into()));
    }
    let (dim, q) = reduce_numerator(&numerator, nv);
    if dim != 2 {
        return Err(Error::NotACurve(format!("R/I has Krull dimension {dim}")));
    }
    let (degree, genus) = degree_genus(&q);
    let regularity = betti.regularity().unwrap_or(0);
    let p = |j: i64| degree * j - genus + 1;
    let checks = 3.max(nv as i64);
    for j in regularity as i64 + 1..=regularity as i64 + checks {
        if init.hilbert_function(j) as i64 != p(j) {
            return Err(Error::Invariant(format!("Hilbert function and polynomial disagree at j = {j} beyond regularity")));
        }
    }
    let dims = (window.0..=window.1).map(|j| init.hilbert_function(j)).collect();
    Ok(HilbertTable { window, dims, numerator, regularity, degree, genus })
}

/// `coker(d_k^T: F_{k-1}^* -> F_k^*)` with a Gröbner basis of the image.
struct DualCokernel<F: Field> {
    nvars: usize,
    /// Degrees of the basis of `F_k^*`.
    shifts: Vec<i32>,
    gb: GroebnerBasis<F>,
    init: Vec<MonomialIdeal>,
    numerators: Vec<Vec<i64>>,
}

impl<F: Field> DualCokernel<F> {
    fn new(res: &Resolution<F>, k: usize) -> Option<Self> {
        let tw = res.twists(k);
        if tw.is_empty() || k == 0 {
            return None;
        }
        let nv = res.nvars();
        let shifts: Vec<i32> = tw.iter().map(|t| -t).collect();
        let ord = ModuleOrder::top(nv, shifts.clone());
        let d = res.map(k).unwrap();
        let gens: Vec<FreeModuleElement<F>> = (0..res.rank(k - 1))
            .map(|r| {
                let row: Vec<Polynomial<F>> = d.iter().map(|col| col[r].clone()).collect();
                FreeModuleElement::from_components(&ord, &row)
            })
            .filter(|e| !e.is_zero())
            .collect();
        let gb = buchberger(ord, &gens);
        let mut lead: Vec<Vec<Monomial>> = vec![Vec::new(); shifts.len()];
        for t in gb.leading_terms() {
            lead[t.comp as usize].push(t.mono);
        }
        let init: Vec<MonomialIdeal> = lead.into_iter().map(|g| MonomialIdeal::new(nv, g)).collect();
        let numerators = init.iter().map(|m| m.hilbert_numerator()).collect();
        Some(DualCokernel { nvars: nv, shifts, gb, init, numerators })
    }

    fn dim(&self, e: i64) -> u64 {
        self.shifts
            .iter()
            .zip(&self.numerators)
            .map(|(&s, num)| hilbert_from_numerator(num, self.nvars, e - s as i64))
            .sum()
    }

    fn free_dim(&self, e: i64) -> u64 {
        let n = self.nvars as i64;
        self.shifts.iter().map(|&s| if e >= s as i64 { binomial(e - s as i64 + n - 1, n - 1) } else { 0 }).sum()
    }

    /// Hilbert series as `(offset, coefficients)` when the cokernel has finite length.
    fn finite_series(&self) -> Option<(i64, Vec<i64>)> {
        let lo = *self.shifts.iter().min()? as i64;
        let mut num: Vec<i64> = Vec::new();
        for (&s, nc) in self.shifts.iter().zip(&self.numerators) {
            let off = (s as i64 - lo) as usize;
            if num.len() < off + nc.len() {
                num.resize(off + nc.len(), 0);
            }
            for (k, c) in nc.iter().enumerate() {
                num[off + k] += c;
            }
        }
        let (dim, q) = reduce_numerator(&num, self.nvars);
        (dim == 0 || q == [0]).then_some((lo, q))
    }

    /// Standard terms of degree `e`, the basis of the cokernel in that degree.
    fn basis(&self, e: i64) -> Vec<Term> {
        let mut out = Vec::new();
        for (c, &s) in self.shifts.iter().enumerate() {
            let deg = e - s as i64;
            if deg < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(self.nvars, deg as u32) {
                if !self.init[c].contains(&m) {
                    out.push(Term::new(m, c));
                }
            }
        }
        out
    }

    /// Matrix of `x_i: E_e -> E_{e+1}` in the standard bases.
    fn multiplication(&self, src: &[Term], dst: &[Term], i: usize) -> Matrix<F> {
        let ord = self.gb.order();
        let x = Monomial::var(self.nvars, i, 1);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (col, t) in src.iter().enumerate() {
            let v = FreeModuleElement::from_terms(ord, vec![(Term::new(t.mono.mul(&x), t.comp as usize), F::one())]);
            let r = self.gb.normal_form(&v);
            for (rt, c) in r.terms() {
                let row = dst.iter().position(|d| d == rt).expect("normal form outside the standard basis");
                m[(row, col)] = c.clone();
            }
        }
        m
    }
}

/// A graded module of finite length over `K[x_0..x_{N-1}]`, stored degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLengthModule<F: Field> {
    nvars: usize,
    j_min: i64,
    dims: Vec<usize>,
    /// `mult[k][i]` is `x_i: M_{j_min+k} -> M_{j_min+k+1}`.
    mult: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> FiniteLengthModule<F> {
    pub fn zero(nvars: usize) -> Self {
        FiniteLengthModule { nvars, j_min: 0, dims: Vec::new(), mult: Vec::new() }
    }

    /// Assemble from dimensions and multiplication matrices; sizes are checked.
    pub fn new(nvars: usize, j_min: i64, dims: Vec<usize>, mult: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        if mult.len() + 1 != dims.len().max(1) {
            return Err(Error::Invariant("multiplication maps do not match degrees".into()));
        }
        for (k, ms) in mult.iter().enumerate() {
            if ms.len() != nvars || ms.iter().any(|m| m.rows() != dims[k + 1] || m.cols() != dims[k]) {
                return Err(Error::Invariant(format!("bad multiplication matrix at block {k}")));
            }
        }
        let mut m = FiniteLengthModule { nvars, j_min, dims, mult };
        m.trim();
        Ok(m)
    }

    fn trim(&mut self) {
        while self.dims.last() == Some(&0) {
            self.dims.pop();
            self.mult.pop();
        }
        while self.dims.first() == Some(&0) {
            self.dims.remove(0);
            if !self.mult.is_empty() {
                self.mult.remove(0);
            }
            self.j_min += 1;
        }
        if self.dims.is_empty() {
            self.mult.clear();
            self.j_min = 0;
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Smallest and largest degree with a nonzero piece.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.dims.is_empty() {
            None
        } else {
            Some((self.j_min, self.j_min + self.dims.len() as i64 - 1))
        }
    }

    pub fn dim(&self, j: i64) -> usize {
        let k = j - self.j_min;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of `x_i: M_j -> M_{j+1}` (rows index `M_{j+1}`).
    pub fn multiplication(&self, i: usize, j: i64) -> Matrix<F> {
        let k = j - self.j_min;
        if k >= 0 && (k as usize) < self.mult.len() {
            return self.mult[k as usize][i].clone();
        }
        Matrix::zeros(self.dim(j + 1), self.dim(j))
    }

    /// `x_i x_k = x_k x_i` on every piece.
    pub fn commutes(&self) -> bool {
        let Some((lo, hi)) = self.support() else { return true };
        for j in lo..hi - 1 {
            for a in 0..self.nvars {
                for b in a + 1..self.nvars {
                    let ab = self.multiplication(b, j + 1).mul(&self.multiplication(a, j));
                    let ba = self.multiplication(a, j + 1).mul(&self.multiplication(b, j));
                    if ab != ba {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of minimal generators: `Σ_j dim M_j - rank(M_{j-1}^N -> M_j)`.
    pub fn generator_count(&self) -> usize {
        let Some((lo, hi)) = self.support() else { return 0 };
        let mut count = 0;
        for j in lo..=hi {
            let (dst, src) = (self.dim(j), self.dim(j - 1));
            let mut m = Matrix::zeros(dst, src * self.nvars);
            if src > 0 {
                for i in 0..self.nvars {
                    let a = self.multiplication(i, j - 1);
                    for r in 0..dst {
                        for c in 0..src {
                            m[(r, i * src + c)] = a[(r, c)].clone();
                        }
                    }
                }
            }
            count += dst - m.rank();
        }
        count
    }

    /// Matrix of the monomial `w_1 ... w_k` (variables in order) from `M_j` to `M_{j+k}`.
    fn monomial_action(&self, vars: &[usize], j: i64) -> Matrix<F> {
        let mut acc = Matrix::identity(self.dim(j));
        for (step, &v) in vars.iter().enumerate() {
            acc = self.multiplication(v, j + step as i64).mul(&acc);
        }
        acc
    }

    /// Degrees of the minimal generators of `Ann(M)`; `[0]` for the zero module.
    pub fn annihilator_degrees(&self) -> Vec<u32> {
        let Some((lo, hi)) = self.support() else { return vec![0] };
        let n = self.nvars;
        // linear forms killing M
        let mut rows: Vec<Vec<F>> = Vec::new();
        for j in lo..hi {
            let ms: Vec<Matrix<F>> = (0..n).map(|i| self.multiplication(i, j)).collect();
            for r in 0..self.dim(j + 1) {
                for c in 0..self.dim(j) {
                    rows.push(ms.iter().map(|m| m[(r, c)].clone()).collect());
                }
            }
        }
        let lin = if rows.is_empty() { (0..n).map(|i| unit_vector::<F>(n, i)).collect() } else { Matrix::from_rows(rows).kernel() };
        let mut degrees = vec![1; lin.len()];
        let mut lm = Matrix::from_rows(if lin.is_empty() { vec![vec![F::zero(); n]] } else { lin.clone() });
        let pivots = if lin.is_empty() { Vec::new() } else { lm.rref() };
        let w: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if w.is_empty() {
            return degrees;
        }
        let width = hi - lo;
        let mut prev_basis: Vec<Vec<F>> = Vec::new();
        let mut prev_monos: Vec<Monomial> = Monomial::all_of_degree(w.len(), 1);
        for k in 2..=(width + 1) as u32 {
            let monos = Monomial::all_of_degree(w.len(), k);
            let index = |m: &Monomial| monos.binary_search_by(|b| m.cmp(b)).unwrap();
            let cols: Vec<Vec<F>> = monos
                .iter()
                .map(|m| {
                    let mut vars = Vec::with_capacity(k as usize);
                    for (t, &wv) in w.iter().enumerate() {
                        vars.extend(std::iter::repeat_n(wv, m.exp(t) as usize));
                    }
                    let mut flat = Vec::new();
                    for j in lo..=hi - k as i64 {
                        let a = self.monomial_action(&vars, j);
                        for r in 0..a.rows() {
                            flat.extend_from_slice(a.row(r));
                        }
                    }
                    flat
                })
                .collect();
            let ann = if cols[0].is_empty() {
                (0..monos.len()).map(|c| unit_vector::<F>(monos.len(), c)).collect()
            } else {
                Matrix::from_rows(cols).transpose().kernel()
            };
            let mut span = RowSpace::new(monos.len());
            for a in &prev_basis {
                for t in 0..w.len() {
                    let x = Monomial::var(w.len(), t, 1);
                    let mut v = vec![F::zero(); monos.len()];
                    for (c, m) in prev_monos.iter().enumerate() {
                        if !a[c].is_zero() {
                            v[index(&m.mul(&x))] = a[c].clone();
                        }
                    }
                    span.insert(v);
                }
            }
            let new = ann.len() - span.dim();
            degrees.extend(std::iter::repeat_n(k, new));
            prev_basis = ann;
            prev_monos = monos;
        }
        degrees
    }
}

fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Local cohomology of a saturated curve ideal, from the dual of its minimal resolution.
pub struct LocalCohomology<F: Field> {
    nvars: usize,
    /// `coker(d_n^T)`, i.e. `Ext^n(R/I, R)`.
    top: Option<DualCokernel<F>>,
    /// `coker(d_{n-1}^T)`.
    next: Option<DualCokernel<F>>,
}

impl<F: Field> LocalCohomology<F> {
    pub fn new(res: &Resolution<F>) -> Result<Self> {
        let nv = res.nvars();
        let n = nv - 1;
        if res.length() > n {
            return Err(Error::NotSaturated);
        }
        Ok(LocalCohomology { nvars: nv, top: DualCokernel::new(res, n), next: DualCokernel::new(res, n - 1) })
    }

    fn e(&self, j: i64) -> i64 {
        -j - self.nvars as i64
    }

    /// `h^1(I_C(j))`.
    pub fn h1(&self, j: i64) -> i64 {
        self.top.as_ref().map_or(0, |t| t.dim(self.e(j)) as i64)
    }

    /// `h^2(I_C(j))`.
    pub fn h2(&self, j: i64) -> i64 {
        let e = self.e(j);
        let Some(next) = &self.next else { return 0 };
        let (c_top, f_top) = self.top.as_ref().map_or((0, 0), |t| (t.dim(e) as i64, t.free_dim(e) as i64));
        next.dim(e) as i64 + c_top - f_top
    }

    /// The Hartshorne–Rao module `⊕_j H^1(I_C(j))`, dual to `Ext^n(R/I, R)`.
    pub fn rao_module(&self) -> Result<FiniteLengthModule<F>> {
        let nv = self.nvars;
        let Some(top) = &self.top else { return Ok(FiniteLengthModule::zero(nv)) };
        let Some((lo, series)) = top.finite_series() else {
            return Err(Error::NotACurve("Ext^n(R/I, R) has infinite length".into()));
        };
        if series.len() == 1 && series[0] == 0 {
            return Ok(FiniteLengthModule::zero(nv));
        }
        let hi = lo + series.len() as i64 - 1;
        let bases: Vec<Vec<Term>> = (lo..=hi).map(|e| top.basis(e)).collect();
        for (k, b) in bases.iter().enumerate() {
            if b.len() as i64 != series[k] {
                return Err(Error::Invariant("standard basis size differs from the Hilbert series".into()));
            }
        }
        // M_j = E_{-j-N}^∨: M's degree order reverses E's
        let j_min = -hi - nv as i64;
        let dims: Vec<usize> = bases.iter().rev().map(|b| b.len()).collect();
        let mut mult = Vec::new();
        for k in 0..dims.len().saturating_sub(1) {
            // M_{j_min+k} -> M_{j_min+k+1} is dual to x_i: E_{e-1} -> E_e with e = hi - k
            let e_idx = (hi - k as i64 - lo) as usize;
            let src = &bases[e_idx - 1];
            let dst = &bases[e_idx];
            mult.push((0..nv).map(|i| top.multiplication(src, dst, i).transpose()).collect());
        }
        FiniteLengthModule::new(nv, j_min, dims, mult)
    }
}

/// `h^1`, `h^2` and the Rao module of a curve over a window, with the
/// Riemann–Roch identity `h_C(j) - p_C(j) = -h^1(j) + h^2(j)` checked at every degree.
#[derive(Clone, Debug)]
pub struct CurveCohomology<F: Field> {
    pub hilbert: HilbertTable,
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
    pub rao: FiniteLengthModule<F>,
}

pub fn curve_cohomology<F: Field>(
    i: &GradedIdeal<F>,
    res: &Resolution<F>,
    window: (i64, i64),
) -> Result<CurveCohomology<F>> {
    let hilbert = hilbert_table_with(i, res, window)?;
    let lc = LocalCohomology::new(res)?;
    let rao = lc.rao_module()?;
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for j in window.0..=window.1 {
        let a = lc.h1(j);
        if a != rao.dim(j) as i64 {
            return Err(Error::Invariant(format!("h1({j}) = {a} but the Rao module has dimension {}", rao.dim(j))));
        }
        let b = lc.h2(j);
        let lhs = hilbert.value(j).unwrap() as i64 - hilbert.polynomial(j);
        if lhs != b - a {
            return Err(Error::Invariant(format!("Riemann-Roch fails at j = {j}: h_C - p_C = {lhs}, h2 - h1 = {}", b - a)));
        }
        h1.push(a);
        h2.push(b);
    }
    Ok(CurveCohomology { hilbert, h1, h2, rao })
}

/// The Rao module of a saturated curve ideal.
pub fn deficiency_module<F: Field>(i: &GradedIdeal<F>) -> Result<FiniteLengthModule<F>> {
    let res = free_resolution(i);
    hilbert_table_with(i, &res, (0, 0))?;
    LocalCohomology::new(&res)?.rao_module()
}

/// `h^2(I_C(j))` over a window, Riemann–Roch checked.
pub fn h2_table<F: Field>(i: &GradedIdeal<F>, window: (i64, i64)) -> Result<Vec<i64>> {
    let res = free_resolution(i);
    Ok(curve_cohomology(i, &res, window)?.h2)
}

/// Intersection with a hyperplane, as an ideal in `n` variables.
#[derive(Clone, Debug)]
pub struct HyperplaneSection<F: Field> {
    /// Coefficients of the linear form; the last one is nonzero.
    pub form: Vec<F>,
    /// Seed the form was drawn from, if random.
    pub seed: Option<u64>,
    pub ideal: GradedIdeal<F>,
}

impl<F: Field> HyperplaneSection<F> {
    pub fn hilbert_function(&self, j: i64) -> u64 {
        self.ideal.hilbert_function(j)
    }
}

/// Section by `l = Σ form[k] x_k`, which must be a nonzerodivisor on `R/I`.
pub fn hyperplane_section_with<F: Field>(i: &GradedIdeal<F>, form: &[F]) -> Result<HyperplaneSection<F>> {
    let nv = i.nvars();
    if form.len() != nv {
        return Err(Error::RingMismatch(nv, form.len()));
    }
    let last = form[nv - 1].clone();
    if last.is_zero() {
        return Err(Error::Inadmissible("the linear form must involve the last variable".into()));
    }
    let m = nv - 1;
    // x_{n} = -(1/c_n) Σ_{k<n} c_k x_k
    let scale = -last.inv();
    let mut images: Vec<Polynomial<F>> = (0..m).map(|k| Polynomial::var(m, k)).collect();
    images.push(Polynomial::from_terms(
        m,
        (0..m).map(|k| (Monomial::var(m, k, 1), form[k].clone() * &scale)).collect(),
    ));
    let gens = i.generators().iter().map(|g| g.substitute(&images)).collect();
    let cut = GradedIdeal::new(m, gens)?;
    if cut.hilbert_numerator() != i.hilbert_numerator() {
        return Err(Error::Inadmissible("the linear form is a zero divisor".into()));
    }
    Ok(HyperplaneSection { form: form.to_vec(), seed: None, ideal: saturate(&cut) })
}

/// Random linear form with entries in `[-50, 50]`, redrawn while it is a zero divisor.
pub fn hyperplane_section<F: Field>(i: &GradedIdeal<F>, seed: u64) -> Result<HyperplaneSection<F>> {
    let nv = i.nvars();
    for attempt in 0..HYPERPLANE_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let form: Vec<F> = (0..nv).map(|_| F::from_i64(rng.gen_range(-50..=50))).collect();
        match hyperplane_section_with(i, &form) {
            Ok(mut h) => {
                h.seed = Some(s);
                return Ok(h);
            }
            Err(Error::Inadmissible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::HyperplaneExhausted(HYPERPLANE_ATTEMPTS))
}

/// Outcome of intersecting a curve with a plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarCheck {
    /// Degree of the curve.
    pub curve_degree: i64,
    /// Krull dimension of `R/sat(I + plane)`.
    pub dimension: usize,
    /// Multiplicity of `R/sat(I + plane)`.
    pub multiplicity: i64,
    /// Whether the intersection is one-dimensional of degree `d - 1`.
    pub holds: bool,
}

/// Does the plane `{l_1 = ... = l_{n-2} = 0}` contain a subcurve of degree `d - 1`?
pub fn planar_subcurve_check<F: Field>(i: &GradedIdeal<F>, plane: &[Polynomial<F>]) -> Result<PlanarCheck> {
    let nv = i.nvars();
    if plane.len() + 3 != nv {
        return Err(Error::Inadmissible(format!("a plane needs {} linear forms", nv - 3)));
    }
    let mut space = RowSpace::new(nv);
    for l in plane {
        if l.nvars() != nv || l.degree() != Some(1) || !l.is_homogeneous() {
            return Err(Error::Inadmissible(format!("{l} is not a linear form")));
        }
        let v = (0..nv).map(|k| l.coefficient(&Monomial::var(nv, k, 1))).collect();
        if !space.insert(v) {
            return Err(Error::Inadmissible("dependent plane forms".into()));
        }
    }
    let (cdim, cq) = reduce_numerator(&i.hilbert_numerator(), nv);
    if cdim != 2 {
        return Err(Error::NotACurve(format!("R/I has Krull dimension {cdim}")));
    }
    let curve_degree = degree_genus(&cq).0;
    let j = saturate(&i.sum(&GradedIdeal::new(nv, plane.to_vec())?));
    let (dimension, q) = reduce_numerator(&j.hilbert_numerator(), nv);
    let multiplicity = q.iter().sum();
    let holds = dimension == 2 && multiplicity == curve_degree - 1;
    Ok(PlanarCheck { curve_degree, dimension, multiplicity, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog_extremal;
    use crate::field::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn numerator_reduction() {
        // twisted cubic: 1 - 3t^2 + 2t^3 over (1-t)^4 = (1 + 2t)/(1-t)^2
        let (k, q) = reduce_numerator(&[1, 0, -3, 2], 4);
        assert_eq!((k, q.clone()), (2, vec![1, 2]));
        assert_eq!(degree_genus(&q), (3, 0));
        assert_eq!(reduce_numerator(&[1], 3), (3, vec![1]));
    }

    #[test]
    fn line_and_plane_curve() {
        let n = 4;
        let line = GradedIdeal::new(n, vec![P::var(n, 2), P::var(n, 3)]).unwrap();
        let h = hilbert_table(&line, (0, 3)).unwrap();
        assert_eq!((h.degree, h.genus), (1, 0));
        assert_eq!(h.dims, vec![1, 2, 3, 4]);
        let quartic = GradedIdeal::new(n, vec![P::var(n, 2).pow(4), P::var(n, 3)]).unwrap();
        let h = hilbert_table(&quartic, (0, 0)).unwrap();
        assert_eq!((h.degree, h.genus), (4, 3));
        assert!(deficiency_module(&quartic).unwrap().is_zero());
    }

    #[test]
    fn rao_module_of_catalog_quartic() {
        let i = catalog_extremal::<Rational>(3, 4, 0).unwrap();
        let m = deficiency_module(&i).unwrap();
        assert_eq!(m.support(), Some((0, 2)));
        assert_eq!((0..=2).map(|j| m.dim(j)).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert!(m.commutes());
        assert_eq!(m.generator_count(), 1);
        // Ann = (x_2, x_3, x_0, x_1^3) up to coordinates: two more linear forms
        assert_eq!(m.annihilator_degrees(), vec![1, 1, 1, 3]);
        let res = free_resolution(&i);
        let c = curve_cohomology(&i, &res, (-3, 6)).unwrap();
        assert_eq!(c.h2, vec![11, 7, 3, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!((c.hilbert.degree, c.hilbert.genus), (4, 0));
    }

    #[test]
    fn section_of_catalog_quartic() {
        let i = catalog_extremal::<Rational>(3, 4, 0).unwrap();
        let h = hyperplane_section(&i, 7).unwrap();
        let v: Vec<u64> = (0..6).map(|j| h.hilbert_function(j)).collect();
        assert_eq!(v, vec![1, 3, 4, 4, 4, 4]);
    }

    #[test]
    fn unsaturated_is_rejected() {
        let n = 4;
        let x = |i| P::var(n, i);
        let i = GradedIdeal::new(n, vec![x(2), x(3), x(0).mul(&x(0)), x(0).mul(&x(1))]).unwrap();
        let res = free_resolution(&i);
        assert!(matches!(LocalCohomology::new(&res), Err(Error::NotSaturated)));
    }
}
