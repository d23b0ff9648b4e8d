//! Full analysis of a curve ideal against the extremal-curve predictions.

use crate::betti::BettiTable;
use crate::cohomology::{curve_cohomology, hilbert_table_with, hyperplane_section, HilbertTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::{
    closed_form_betti_applies, expected_annihilator_degrees, expected_betti, expected_gin, expected_rao_generators,
    expected_rao_hf, rao_structure_applies, CurveSpec, GinVariant,
};
use crate::ideal::GradedIdeal;
use crate::monomial_ideal::MonomialIdeal;
use crate::ops::gin;
use crate::resolution::free_resolution;

/// Knobs for [`verify_extremal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Seed for the gin and the hyperplane section.
    pub seed: u64,
    /// Override the default window.
    pub window: Option<(i64, i64)>,
    pub compute_gin: bool,
    pub compute_section: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 1, window: None, compute_gin: true, compute_section: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Extremal,
    NotExtremal,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Extremal => "extremal",
            Verdict::NotExtremal => "not_extremal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinReport {
    pub ideal: MonomialIdeal,
    pub seeds: [u64; 2],
    /// Admissible gins when the curve is extremal with `d >= 3`.
    pub expected: Vec<MonomialIdeal>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub computed: BettiTable,
    pub expected: Option<BettiTable>,
    pub matches_expected: Option<bool>,
    /// Betti table of the gin, compared when the closed form applies.
    pub gin: Option<BettiTable>,
    pub matches_gin: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaoReport {
    /// Dimensions over the report window.
    pub dims: Vec<i64>,
    pub support: Option<(i64, i64)>,
    pub expected_dims: Option<Vec<i64>>,
    pub generator_count: usize,
    pub expected_generator_count: Option<usize>,
    pub annihilator_degrees: Vec<u32>,
    pub expected_annihilator_degrees: Option<Vec<u32>>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub seed: u64,
    /// Coefficients of the linear form, as decimal strings.
    pub form: Vec<String>,
    /// `h_Γ(j)` for `0 <= j <= d + 1`.
    pub hilbert: Vec<u64>,
    pub expected: Option<Vec<u64>>,
    pub matches: Option<bool>,
}

/// Everything computed about one curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub spec: CurveSpec,
    pub a: i64,
    pub window: (i64, i64),
    pub hilbert: HilbertTable,
    pub h1: Vec<i64>,
    pub rho: Vec<i64>,
    pub h1_match: Vec<bool>,
    pub first_h1_failure: Option<i64>,
    pub h2: Vec<i64>,
    pub mu: Vec<Option<i64>>,
    pub h2_match: Option<bool>,
    pub gin: Option<GinReport>,
    pub betti: BettiReport,
    pub rao: RaoReport,
    pub section: Option<SectionReport>,
    pub verdict: Verdict,
    /// Failed assertions that the theory guarantees; nonempty means a bug or a bad input.
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl CurveReport {
    pub fn is_extremal(&self) -> bool {
        self.verdict == Verdict::Extremal
    }
}

/// Analyze a saturated non-degenerate curve ideal and compare with the
/// extremal predictions.
pub fn verify_extremal<F: Field>(i: &GradedIdeal<F>, opts: &VerifyOptions) -> Result<CurveReport> {
    let nv = i.nvars();
    if nv < 4 {
        return Err(Error::Inadmissible(format!("need n >= 3, got a ring with {nv} variables")));
    }
    let n = nv - 1;
    if i.linear_forms_dim() > 0 {
        return Err(Error::Degenerate);
    }
    let res = free_resolution(i);
    if res.length() > n {
        return Err(Error::NotSaturated);
    }
    let probe = hilbert_table_with(i, &res, (0, 0))?;
    if probe.degree < 2 {
        return Err(Error::NotACurve(format!("degree {} < 2", probe.degree)));
    }
    let spec = CurveSpec::new(n, probe.degree as u32, probe.genus)?;
    let a = spec.a();
    let window = opts.window.unwrap_or_else(|| spec.window());
    let coh = curve_cohomology(i, &res, window)?;
    let mut violations = Vec::new();
    let mut warnings = Vec::new();

    let js: Vec<i64> = (window.0..=window.1).collect();
    let rho: Vec<i64> = js.iter().map(|&j| spec.rho(j)).collect();
    let h1_match: Vec<bool> = coh.h1.iter().zip(&rho).map(|(h, r)| h == r).collect();
    let first_h1_failure = js.iter().zip(&h1_match).find(|(_, m)| !**m).map(|(j, _)| *j);
    for (k, &j) in js.iter().enumerate() {
        if coh.h1[k] > rho[k] {
            violations.push(format!("h1({j}) = {} exceeds rho = {}", coh.h1[k], rho[k]));
        }
    }
    if let Some((lo, hi)) = coh.rao.support() {
        for j in (lo..=hi).filter(|j| *j < window.0 || *j > window.1) {
            if coh.rao.dim(j) as i64 > spec.rho(j) {
                violations.push(format!("h1({j}) = {} exceeds rho outside the window", coh.rao.dim(j)));
            }
        }
    }
    let extremal = first_h1_failure.is_none()
        && coh.rao.support().is_none_or(|(lo, hi)| (lo..=hi).all(|j| coh.rao.dim(j) as i64 == spec.rho(j)));
    let verdict = if extremal { Verdict::Extremal } else { Verdict::NotExtremal };

    let mu: Vec<Option<i64>> = js.iter().map(|&j| spec.mu(j)).collect();
    let h2_match = extremal.then(|| coh.h2.iter().zip(&mu).all(|(h, m)| m.is_none_or(|m| *h == m)));
    if h2_match == Some(false) {
        violations.push("h2 differs from mu on an extremal curve".into());
    }
    if spec.d == 2 {
        warnings.push("mu is unspecified for d = 2 and j < 0; only j >= 0 is compared".into());
    }

    let d3_pair = spec.d == 3 && a >= 1 && n >= 4;
    let gin_report = if opts.compute_gin {
        match gin(i, opts.seed) {
            Ok(g) => {
                let expected = if extremal && spec.d >= 3 {
                    let mut v = vec![expected_gin(&spec, GinVariant::Primary)?];
                    if d3_pair {
                        v.push(expected_gin(&spec, GinVariant::D3Alternate)?);
                    }
                    v
                } else {
                    Vec::new()
                };
                let matches = (!expected.is_empty()).then(|| expected.contains(&g.ideal));
                if matches == Some(false) {
                    violations.push(format!("gin {} is not among the expected ideals", g.ideal));
                }
                if !g.ideal.is_strongly_stable() {
                    violations.push("gin is not strongly stable".into());
                }
                Some(GinReport { ideal: g.ideal, seeds: g.seeds, expected, matches })
            }
            Err(Error::GinDisagreement(k)) => {
                warnings.push(format!("gin: initial ideals disagreed in all {k} attempts"));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    if d3_pair && extremal {
        warnings.push("d = 3, a > 0, n >= 4: the gin may be either of two ideals".into());
    }

    let computed = res.betti();
    let closed = extremal && closed_form_betti_applies(&spec);
    let expected = if closed { Some(expected_betti(&spec)?) } else { None };
    let matches_expected = expected.as_ref().map(|e| *e == computed);
    if matches_expected == Some(false) {
        violations.push("Betti table differs from the closed form".into());
    }
    let gin_betti = match &gin_report {
        Some(g) if g.ideal.is_stable() => Some(g.ideal.ek_betti()?),
        _ => None,
    };
    let matches_gin = if closed { gin_betti.as_ref().map(|b| *b == computed) } else { None };
    if matches_gin == Some(false) {
        violations.push("Betti table differs from that of the gin".into());
    }
    if closed && a == 0 {
        warnings.push("a = 0: no summand R(-d-a-n+2) at the last step, unlike the literal closed form".into());
    }
    let betti = BettiReport { computed, expected, matches_expected, gin: gin_betti, matches_gin };

    let dims: Vec<i64> = js.iter().map(|&j| coh.rao.dim(j) as i64).collect();
    let expected_dims = if !extremal {
        None
    } else if rao_structure_applies(&spec) {
        Some(js.iter().map(|&j| expected_rao_hf(&spec, j)).collect::<Result<Vec<_>>>()?)
    } else {
        Some(rho.clone())
    };
    let generator_count = coh.rao.generator_count();
    let expected_generator_count = extremal.then(|| expected_rao_generators(&spec));
    let annihilator_degrees = coh.rao.annihilator_degrees();
    let expected_ann = if extremal { expected_annihilator_degrees(&spec) } else { None };
    let rao_ok = expected_dims.as_ref().map(|e| *e == dims).unwrap_or(true)
        && expected_generator_count.is_none_or(|c| c == generator_count)
        && expected_ann.as_ref().is_none_or(|e| *e == annihilator_degrees);
    let rao_matches = extremal.then_some(rao_ok);
    if rao_matches == Some(false) {
        violations.push("Rao module differs from the structure theorem".into());
    }
    if spec.n == 3 && a == 0 && spec.d >= 3 {
        warnings.push("n = 3, a = 0: the Rao module is zero, so it has no generator".into());
    }
    let rao = RaoReport {
        dims,
        support: coh.rao.support(),
        expected_dims,
        generator_count,
        expected_generator_count,
        annihilator_degrees,
        expected_annihilator_degrees: expected_ann,
        matches: rao_matches,
    };

    let section = if opts.compute_section {
        let h = hyperplane_section(i, opts.seed)?;
        let d = spec.d as i64;
        let hilbert: Vec<u64> = (0..=d + 1).map(|j| h.hilbert_function(j)).collect();
        let expected = (extremal && spec.d >= 3)
            .then(|| (0..=d + 1).map(|j| if j == 0 { 1 } else { (j + 2).min(d) as u64 }).collect::<Vec<u64>>());
        let matches = expected.as_ref().map(|e| *e == hilbert);
        if matches == Some(false) {
            violations.push("hyperplane section Hilbert function differs from min(j+2, d)".into());
        }
        Some(SectionReport {
            seed: h.seed.unwrap_or(opts.seed),
            form: h.form.iter().map(|c| c.to_string()).collect(),
            hilbert,
            expected,
            matches,
        })
    } else {
        None
    };

    Ok(CurveReport {
        spec,
        a,
        window,
        hilbert: coh.hilbert,
        h1: coh.h1,
        rho,
        h1_match,
        first_h1_failure,
        h2: coh.h2,
        mu,
        h2_match,
        gin: gin_report,
        betti,
        rao,
        section,
        verdict,
        violations,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{catalog_extremal, catalog_nonextremal};
    use crate::field::Rational;

    #[test]
    fn catalog_quartic_is_extremal() {
        let i = catalog_extremal::<Rational>(3, 4, 0).unwrap();
        let r = verify_extremal(&i, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Extremal);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.gin.as_ref().unwrap().matches, Some(true));
        assert_eq!(r.betti.matches_expected, Some(true));
        assert_eq!(r.rao.matches, Some(true));
    }

    #[test]
    fn nonextremal_fails_at_two() {
        let (i, _) = catalog_nonextremal::<Rational>(4, 1, 4).unwrap();
        let opts = VerifyOptions { compute_gin: false, ..Default::default() };
        let r = verify_extremal(&i, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::NotExtremal);
        assert_eq!(r.first_h1_failure, Some(2));
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}
