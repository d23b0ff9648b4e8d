//! Closed-form data for extremal curves: genus bound, the bound functions
//! for `h^1` and `h^2`, and the expected gin, Rao module and Betti table.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::monomial::{binomial, Monomial};
use crate::monomial_ideal::MonomialIdeal;

/// Ambient dimension `n`, degree `d` and arithmetic genus `g` of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveSpec {
    pub n: usize,
    pub d: u32,
    pub g: i64,
}

fn c2(x: i64) -> i64 {
    binomial(x, 2) as i64
}

/// Maximal genus of a non-degenerate curve of degree `d` in `P^n`.
pub fn g_max(n: usize, d: u32) -> Result<i64> {
    if n < 3 {
        return Err(Error::Inadmissible(format!("n = {n} < 3")));
    }
    match d {
        0 | 1 => Err(Error::Inadmissible(format!("d = {d} < 2"))),
        2 => Ok(2 - n as i64),
        _ => Ok(c2(d as i64 - 2) - (n as i64 - 3)),
    }
}

impl CurveSpec {
    pub fn new(n: usize, d: u32, g: i64) -> Result<Self> {
        let gm = g_max(n, d)?;
        if g > gm {
            return Err(Error::Inadmissible(format!("g = {g} exceeds g_max({n},{d}) = {gm}")));
        }
        Ok(CurveSpec { n, d, g })
    }

    /// The spec with `g = g_max - a`.
    pub fn from_a(n: usize, d: u32, a: i64) -> Result<Self> {
        if a < 0 {
            return Err(Error::Inadmissible(format!("a = {a} < 0")));
        }
        Self::new(n, d, g_max(n, d)? - a)
    }

    /// `a = g_max - g`.
    pub fn a(&self) -> i64 {
        g_max(self.n, self.d).unwrap() - self.g
    }

    /// Degree of `h` in the construction that realizes this genus:
    /// `C(d-2,2) - (n-3) - g`, which is `a` for `d >= 3` and `a + 1` for `d = 2`.
    pub fn construction_a(&self) -> i64 {
        let d = self.d as i64;
        c2(d - 2) - (self.n as i64 - 3) - self.g
    }

    /// Default verification window `[g - C(d-2,2) - 2, C(d-1,2) - g + 2]`.
    pub fn window(&self) -> (i64, i64) {
        let d = self.d as i64;
        (self.g - c2(d - 2) - 2, c2(d - 1) - self.g + 2)
    }

    pub fn rho(&self, j: i64) -> i64 {
        rho_ex(self.n, self.d, self.g, j).unwrap()
    }

    /// `μ(j)`, or `None` where it is not specified (`d = 2`, `j < 0`).
    pub fn mu(&self, j: i64) -> Option<i64> {
        mu_ex(self.n, self.d, self.g, j).ok()
    }
}

/// Value of a piecewise function; all branches whose range contains `j` must agree.
fn piecewise(j: i64, branches: &[(Option<i64>, Option<i64>, i64)]) -> Result<i64> {
    let mut val: Option<i64> = None;
    for &(lo, hi, v) in branches {
        if lo.is_none_or(|l| l <= j) && hi.is_none_or(|h| j <= h) {
            match val {
                None => val = Some(v),
                Some(w) if w != v => {
                    return Err(Error::Invariant(format!("branches disagree at j = {j}: {w} vs {v}")));
                }
                _ => {}
            }
        }
    }
    val.ok_or_else(|| Error::Invariant(format!("no branch covers j = {j}")))
}

/// Upper bound for `h^1(I_C(j))`.
pub fn rho_ex(n: usize, d: u32, g: i64, j: i64) -> Result<i64> {
    let spec = CurveSpec::new(n, d, g)?;
    let (n, d) = (spec.n as i64, spec.d as i64);
    if d == 2 {
        let top = -g - (n - 3);
        return piecewise(j, &[(None, Some(g), 0), (Some(g), Some(0), -g + j), (Some(1), Some(top), top - j), (Some(top), None, 0)]);
    }
    let a = c2(d - 2) - g;
    let b = c2(d - 1) - g - (n - 3);
    piecewise(
        j,
        &[
            (None, Some(-a), 0),
            (Some(-a), Some(0), a + j),
            (Some(1), Some(d - 2), a - (n - 3)),
            (Some(d - 2), Some(b), b - j),
            (Some(b), None, 0),
        ],
    )
}

/// Upper bound for `h^2(I_C(j))`; for `d = 2` only `j >= 0` is specified.
pub fn mu_ex(n: usize, d: u32, g: i64, j: i64) -> Result<i64> {
    let spec = CurveSpec::new(n, d, g)?;
    let d = spec.d as i64;
    if d == 2 {
        if j >= 0 {
            return Ok(0);
        }
        return Err(Error::Inadmissible("mu is unspecified for d = 2 and j < 0".into()));
    }
    let s = c2(d - 2);
    piecewise(
        j,
        &[
            (Some(d - 3), None, 0),
            (Some(0), Some(d - 2), c2(d - 2 - j)),
            (Some(g - s), Some(-1), s - (d - 1) * j - 1),
            (None, Some(g - s - 1), g - 1 - d * j),
        ],
    )
}

/// Rows `rho(j)` and `mu(j)` over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundProfile {
    pub j_min: i64,
    pub j_max: i64,
    pub rho: Vec<i64>,
    pub mu: Vec<Option<i64>>,
}

impl BoundProfile {
    pub fn new(spec: &CurveSpec, window: (i64, i64)) -> Self {
        let (lo, hi) = window;
        BoundProfile {
            j_min: lo,
            j_max: hi,
            rho: (lo..=hi).map(|j| spec.rho(j)).collect(),
            mu: (lo..=hi).map(|j| spec.mu(j)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GinVariant {
    Primary,
    /// The second ideal allowed for `d = 3`, `a >= 1`, `n >= 4`.
    D3Alternate,
}

fn var(nv: usize, i: usize, e: u32) -> Monomial {
    Monomial::var(nv, i, e)
}

/// `(x_0..x_{k-1}) * (x_0..x_{m-1})` as monomials.
fn product_block(nv: usize, k: usize, m: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..m {
            out.push(var(nv, i, 1).mul(&var(nv, j, 1)));
        }
    }
    out
}

/// Generic initial ideal of an extremal curve with the given invariants.
pub fn expected_gin(spec: &CurveSpec, variant: GinVariant) -> Result<MonomialIdeal> {
    let (n, d, a) = (spec.n, spec.d, spec.a());
    if d < 3 {
        return Err(Error::Inadmissible("expected gin needs d >= 3".into()));
    }
    let nv = n + 1;
    let a = a as u32;
    let mut g = Vec::new();
    match variant {
        GinVariant::Primary => {
            if n >= 4 {
                g.extend(product_block(nv, n - 3, n));
            }
            g.push(var(nv, n - 3, 2));
            g.push(var(nv, n - 3, 1).mul(&var(nv, n - 2, 1)));
            g.push(var(nv, n - 2, d));
            g.push(var(nv, n - 2, d - 1).mul(&var(nv, n - 1, a)));
        }
        GinVariant::D3Alternate => {
            if !(d == 3 && a >= 1 && n >= 4) {
                return Err(Error::Inadmissible("the alternate gin needs d = 3, a >= 1, n >= 4".into()));
            }
            if n >= 5 {
                g.extend(product_block(nv, n - 4, n));
            }
            for j in 0..=n - 2 {
                g.push(var(nv, n - 4, 1).mul(&var(nv, j, 1)));
            }
            g.push(var(nv, n - 3, 2));
            g.push(var(nv, n - 3, 1).mul(&var(nv, n - 2, 1)));
            g.push(var(nv, n - 2, 2));
            g.push(var(nv, n - 4, 1).mul(&var(nv, n - 1, a + 1)));
        }
    }
    Ok(MonomialIdeal::new(nv, g))
}

/// Whether the Rao module structure theorem applies (it excludes `d = 3, a > 0, n >= 4`).
pub fn rao_structure_applies(spec: &CurveSpec) -> bool {
    spec.d >= 3 && !(spec.d == 3 && spec.a() > 0 && spec.n >= 4)
}

/// Two-variable data of the Rao module `(S/(h (x,y)^{n-3}, f))(shift)` of an extremal curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RaoPresentation {
    /// `deg h`, see [`CurveSpec::construction_a`].
    pub h_degree: u32,
    /// `deg f = C(d-1,2) - g`.
    pub f_degree: u32,
    pub exponent: u32,
    /// `C(d-2,2) - g - 1 = deg h + n - 4`.
    pub shift: i64,
}

impl RaoPresentation {
    pub fn new(spec: &CurveSpec) -> Self {
        let d = spec.d as i64;
        RaoPresentation {
            h_degree: spec.construction_a() as u32,
            f_degree: (c2(d - 1) - spec.g) as u32,
            exponent: spec.n as u32 - 3,
            shift: c2(d - 2) - spec.g - 1,
        }
    }

    /// Minimal generator degrees of `(x_2, ..., x_n) + h (x,y)^e + (f)`, the
    /// annihilator in `K[x_0..x_n]`; `[0]` for the unit ideal.
    pub fn annihilator_degrees(&self, n: usize) -> Vec<u32> {
        let (a, e) = (self.h_degree, self.exponent);
        if a + e == 0 {
            return vec![0];
        }
        let mut out = vec![1; n - 1];
        out.extend(std::iter::repeat_n(a + e, e as usize + 1));
        // with h = 1, f already lies in (x,y)^e
        if a > 0 {
            out.push(self.f_degree);
        }
        out.sort();
        out
    }

    /// `dim [S/(h (x,y)^e, f)]_{j + shift}` for coprime `h`, `f`.
    ///
    /// Uses `J : f = (h)` for `J = h (x,y)^e`, so the value does not depend
    /// on the particular forms.
    pub fn dim(&self, j: i64) -> i64 {
        let k = j + self.shift;
        let (a, e, df) = (self.h_degree as i64, self.exponent as i64, self.f_degree as i64);
        let pos = |x: i64| x.max(0);
        let j_k = if k - a >= e { k - a + 1 } else { 0 };
        pos(k + 1) - j_k - pos(k - df + 1) + pos(k - df - a + 1)
    }
}

/// Hilbert function of the Rao module predicted by the structure theorem.
pub fn expected_rao_hf(spec: &CurveSpec, j: i64) -> Result<i64> {
    if !rao_structure_applies(spec) {
        return Err(Error::Inadmissible(format!(
            "Rao module structure not asserted for n={}, d={}, a={}",
            spec.n,
            spec.d,
            spec.a()
        )));
    }
    let v = RaoPresentation::new(spec).dim(j);
    let r = spec.rho(j);
    if v != r {
        return Err(Error::Invariant(format!("Rao dimension {v} differs from rho = {r} at j = {j}")));
    }
    Ok(v)
}

/// Degrees of the minimal generators of the annihilator of the Rao module,
/// when the structure theorem pins them down.
///
/// `Some(vec![0])` stands for the unit ideal (zero module).
pub fn expected_annihilator_degrees(spec: &CurveSpec) -> Option<Vec<u32>> {
    rao_structure_applies(spec).then(|| RaoPresentation::new(spec).annihilator_degrees(spec.n))
}

/// Expected number of minimal generators of the Rao module.
pub fn expected_rao_generators(spec: &CurveSpec) -> usize {
    if spec.n == 3 && spec.a() == 0 && spec.d >= 3 {
        0
    } else {
        1
    }
}

/// Integers `α_i, α'_i, β_i, γ_i` for `1 <= i <= n`.
pub fn alpha(n: i64, i: i64) -> i64 {
    (n - 3) * binomial(n, i) as i64 + binomial(n - 1, i) as i64 - binomial(n - 2, i + 1) as i64
}

pub fn alpha_prime(n: i64, i: i64) -> i64 {
    alpha(n, i) - binomial(n - 2, i - 2) as i64
}

pub fn beta(n: i64, i: i64) -> i64 {
    binomial(n - 2, i - 1) as i64
}

pub fn gamma(n: i64, i: i64) -> i64 {
    binomial(n - 1, i - 1) as i64
}

/// Whether the minimal resolution of an extremal curve is given in closed form
/// (`d >= 5`, or `d = 4` with `a > 0`).
pub fn closed_form_betti_applies(spec: &CurveSpec) -> bool {
    spec.d >= 5 || (spec.d == 4 && spec.a() > 0)
}

/// Closed-form Betti table of an extremal curve, ideal-indexed.
///
/// `F_i` (with `F_1` the generators) becomes row `i - 1`. For `a = 0` the
/// summands `β_i` and `γ_i` are replaced by `C(n-2, i-1)` copies of
/// `R(-i-d+2)`, the contribution of `x_{n-2}^{d-1}`.
pub fn expected_betti(spec: &CurveSpec) -> Result<BettiTable> {
    if !closed_form_betti_applies(spec) {
        return Err(Error::Inadmissible("closed-form Betti table needs d >= 5, or d = 4 and a > 0".into()));
    }
    let (n, d, a) = (spec.n as i64, spec.d as i64, spec.a());
    let mut b = BettiTable::new();
    for i in 1..=n {
        let row = (i - 1) as usize;
        b.add(row, (i + 1) as i32, alpha(n, i) as u64);
        if a > 0 {
            b.add(row, (i + d - 1) as i32, beta(n, i) as u64);
            b.add(row, (i + d + a - 2) as i32, gamma(n, i) as u64);
        } else {
            b.add(row, (i + d - 2) as i32, beta(n, i) as u64);
        }
    }
    let ek = expected_gin(spec, GinVariant::Primary)?.ek_betti()?;
    if ek != b {
        return Err(Error::Invariant("closed-form Betti table differs from Eliahou-Kervaire".into()));
    }
    Ok(b)
}

/// Betti table of the expected gin (defined for every `d >= 3`).
pub fn expected_gin_betti(spec: &CurveSpec, variant: GinVariant) -> Result<BettiTable> {
    expected_gin(spec, variant)?.ek_betti()
}
