//! Independent oracles and the property sweeps behind `spinwhit verify`.
//!
//! The oracles here do not share code with the engines they check: the Weyl
//! dimension formula against GT enumeration, <lambda, lambda + 2 rho> against
//! the Casimir matrix, the product prod(u^2 - Lambda_i^2) against the
//! closed-form vanishing cases.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{HalfInt, Rational};
use crate::catalog::{
    irreducibles, kspectrum_box, kspectrum_enumerate, length, minimal_k_type, ps_parameters, rho_compact,
    validate_inf_char, InfCharacter, IrrLabel,
};
use crate::error::{Error, Result};
use crate::gt::{branch, dimension, enumerate_patterns, validate_pattern, GTPattern, PatternRows, SpinWeight};
use crate::lie::{coeff_a, radicand, shift_indices, Representation};
use crate::radial::{
    central_scalar, central_zero_cases, embedding_ode, injectivity_case, injectivity_certificate, u_value,
    DiscreteSeries, Injectivity,
};
use crate::whittaker::{
    candidate_factors, classify_gamma, derive_socle, restriction_contains, satisfied_conditions, socle_filtration,
    two_step_contains, unique_submodule, GammaCondition,
};

/// rho for so(r): n - p + 1/2 (r = 2n+1) or n - p (r = 2n).
pub fn rho(r: usize) -> Vec<Rational> {
    let n = (r / 2) as i64;
    (1..=n)
        .map(|p| {
            let v = Rational::from_integer((n - p).into());
            if r % 2 == 1 {
                v + Rational::new(1.into(), 2.into())
            } else {
                v
            }
        })
        .collect()
}

/// Weyl dimension formula for Spin(r).
pub fn weyl_dimension(lambda: &SpinWeight) -> Rational {
    let r = lambda.r;
    let rho = rho(r);
    let l: Vec<Rational> = lambda.entries.iter().zip(&rho).map(|(x, p)| x.to_rational() + p).collect();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= &l[i] * &l[i] - &l[j] * &l[j];
            den *= &rho[i] * &rho[i] - &rho[j] * &rho[j];
        }
        if r % 2 == 1 {
            num *= &l[i];
            den *= &rho[i];
        }
    }
    num / den
}

/// -<lambda, lambda + 2 rho>: the scalar of sum_{p>q} A_{p,q}^2 with real
/// skew generators.
pub fn casimir_oracle(lambda: &SpinWeight) -> Rational {
    let rho = rho(lambda.r);
    let s = lambda.entries.iter().zip(&rho).fold(Rational::zero(), |acc, (x, p)| {
        let x = x.to_rational();
        acc + &x * (&x + p + p)
    });
    -s
}

/// Dominant Spin(r) weights with |entries| <= bound, both integrality
/// classes, lexicographic.
pub fn dominant_weights(r: usize, bound: HalfInt) -> Vec<SpinWeight> {
    let m = r / 2;
    let b = bound.twice();
    let mut out = Vec::new();
    for parity in [0i64, 1] {
        let vals: Vec<i64> = (-b..=b).filter(|t| t.rem_euclid(2) == parity).collect();
        let mut cur = Vec::with_capacity(m);
        weights_rec(r, m, &vals, &mut cur, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn weights_rec(r: usize, m: usize, vals: &[i64], cur: &mut Vec<i64>, out: &mut Vec<SpinWeight>) {
    if cur.len() == m {
        if let Ok(w) = SpinWeight::from_twice(r, cur) {
            out.push(w);
        }
        return;
    }
    for &v in vals {
        cur.push(v);
        weights_rec(r, m, vals, cur, out);
        cur.pop();
    }
}

/// Valid infinitesimal characters of Spin(r,1) with |entries| <= bound.
pub fn inf_chars(r: usize, bound: HalfInt) -> Vec<InfCharacter> {
    let want = if r % 2 == 0 { r / 2 } else { r / 2 + 1 };
    let b = bound.twice();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(r: usize, want: usize, b: i64, cur: &mut Vec<i64>, out: &mut Vec<InfCharacter>) {
        if cur.len() == want {
            let e: Vec<HalfInt> = cur.iter().map(|&t| HalfInt::from_twice(t)).collect();
            if let Ok(l) = validate_inf_char(r, &e) {
                out.push(l);
            }
            return;
        }
        let hi = cur.last().map_or(b, |&x| x - 2);
        let mut t = hi;
        while t >= -b {
            cur.push(t);
            rec(r, want, b, cur, out);
            cur.pop();
            t -= 2;
        }
        // the first entry fixes the class; later ones step by integers
        if cur.is_empty() && hi - 1 >= -b {
            let mut t = hi - 1;
            while t >= -b {
                cur.push(t);
                rec(r, want, b, cur, out);
                cur.pop();
                t -= 2;
            }
        }
    }
    rec(r, want, b, &mut cur, &mut out);
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}

/// Dominant Spin(r-2) weights gamma with |gamma_p| <= bound: the sweep range
/// for Whittaker parameters.
pub fn gamma_range(lam: &InfCharacter, bound: HalfInt) -> Vec<SpinWeight> {
    dominant_weights(lam.r - 2, bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Gt,
    Lie,
    Catalog,
    Whittaker,
    Radial,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gt" => Suite::Gt,
            "lie" => Suite::Lie,
            "catalog" => Suite::Catalog,
            "whittaker" => Suite::Whittaker,
            "radial" => Suite::Radial,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Gt => "gt",
            Suite::Lie => "lie",
            Suite::Catalog => "catalog",
            Suite::Whittaker => "whittaker",
            Suite::Radial => "radial",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), ..Default::default() }
    }

    /// Records one check; `Err` from the engine counts as a failure.
    pub fn check(&mut self, name: &str, res: Result<bool>, detail: impl FnOnce() -> String) {
        self.checks += 1;
        match res {
            Ok(true) => {}
            Ok(false) => self.failures.push(Failure { check: name.into(), detail: detail() }),
            Err(e) => self.failures.push(Failure { check: name.into(), detail: format!("{}: {e}", detail()) }),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_rank: usize,
    /// Bound on |entries| of K-types (gt, lie) or of Lambda (catalog, whittaker, radial).
    pub max_entry: HalfInt,
}

impl Bounds {
    pub fn default_for(suite: Suite) -> Bounds {
        let (max_rank, twice) = match suite {
            Suite::Gt => (7, 4),
            Suite::Lie => (6, 3),
            Suite::Catalog | Suite::Whittaker => (7, 7),
            Suite::Radial => (6, 9),
            Suite::All => (6, 3),
        };
        Bounds { max_rank, max_entry: HalfInt::from_twice(twice) }
    }
}

pub fn run(suite: Suite, bounds: Bounds) -> VerifyReport {
    let suites = match suite {
        Suite::All => vec![Suite::Gt, Suite::Lie, Suite::Catalog, Suite::Whittaker, Suite::Radial],
        s => vec![s],
    };
    let reports = suites
        .into_iter()
        .map(|s| match s {
            Suite::Gt => gt_suite(bounds),
            Suite::Lie => lie_suite(bounds),
            Suite::Catalog => catalog_suite(bounds),
            Suite::Whittaker => whittaker_suite(bounds),
            Suite::Radial => radial_suite(bounds),
            Suite::All => unreachable!(),
        })
        .collect();
    VerifyReport { suites: reports }
}

pub fn gt_suite(b: Bounds) -> SuiteReport {
    let mut rep = SuiteReport::new("gt");
    for r in 2..=b.max_rank {
        for lam in dominant_weights(r, b.max_entry) {
            let weyl = weyl_dimension(&lam);
            rep.check("weyl_dimension", Ok(weyl == Rational::from_integer(dimension(&lam).into())), || {
                format!("Spin({r}) {lam}: Weyl {weyl}, GT {}", dimension(&lam))
            });
            if r >= 3 {
                let sum = branch(&lam).map(|bs| bs.iter().map(dimension).sum::<u64>());
                rep.check("branching_sum", sum.map(|s| s == dimension(&lam)), || format!("Spin({r}) {lam}"));
            }
            if dimension(&lam) <= 400 {
                let pats = enumerate_patterns(&lam);
                let ok = pats.iter().all(|p| validate_pattern(&p.rows).unwrap_or(false));
                rep.check("patterns_valid", Ok(ok), || format!("Spin({r}) {lam}"));
            }
        }
    }
    rep
}

pub fn lie_checks(rep: &mut SuiteReport, lam: &SpinWeight) {
    let r = lam.r;
    let mut rp = Representation::new(lam);
    let tag = || format!("Spin({r}) {lam}");
    let mut gens = Vec::new();
    for p in 2..=r {
        for q in 1..p {
            match rp.generator(p, q) {
                Ok(g) => {
                    rep.check("skew", Ok(g.is_skew_hermitian()), || format!("{} A_{{{p},{q}}}", tag()));
                    gens.push((p, q));
                }
                Err(e) => rep.check("generator", Err(e), tag),
            }
        }
    }
    let idx: Vec<usize> = (1..=r).collect();
    for &p in &idx {
        for &q in &idx {
            for &s in &idx {
                if p == q || q == s || p == s {
                    continue;
                }
                let res = (|| -> Result<bool> {
                    let a = rp.signed_generator(p, q)?;
                    let b = rp.signed_generator(q, s)?;
                    let c = rp.signed_generator(p, s)?;
                    Ok(a.commutator(&b) == c)
                })();
                rep.check("bracket", res, || format!("{} [A_{p}{q}, A_{q}{s}]", tag()));
            }
        }
    }
    for (i, &(p, q)) in gens.iter().enumerate() {
        for &(s, t) in &gens[i + 1..] {
            if p == s || p == t || q == s || q == t {
                continue;
            }
            let res = (|| -> Result<bool> {
                let a = rp.generator(p, q)?.clone();
                let b = rp.generator(s, t)?.clone();
                Ok(a.commutator(&b).is_zero())
            })();
            rep.check("disjoint_commute", res, || format!("{} A_{p}{q}, A_{s}{t}", tag()));
        }
    }
    let cas = rp.casimir_matrix().map(|m| m.as_scalar().and_then(|c| c.as_rational()));
    let want = casimir_oracle(lam);
    rep.check("casimir", cas.map(|c| c == Some(want.clone())), || format!("{}: want {want}", tag()));
}

/// coeff_a vanishes exactly on invalid shifts (j != 0), and radicand signs
/// are as expected on valid shifts.
pub fn coefficient_checks(rep: &mut SuiteReport, lam: &SpinWeight) {
    let r = lam.r;
    for q in enumerate_patterns(lam) {
        for level in 1..r.saturating_sub(1) {
            for j in shift_indices(level) {
                let c = coeff_a(level, j, &q);
                if j != 0 {
                    let valid = q.shifted(level, j).is_valid();
                    rep.check("vanishing_iff_invalid", c.map(|c| c.is_zero() != valid), || {
                        format!("{lam} {q:?} level {level} j {j}")
                    });
                    if valid {
                        let ok = radicand(&q, level, j, false)
                            .map_or(false, |(s, rad)| s == 0 || rad >= Rational::zero());
                        rep.check("radicand_nonnegative", Ok(ok), || format!("{lam} {q:?} level {level} j {j}"));
                    }
                } else {
                    let i = level / 2;
                    let below = q.row(level - 1).expect("row below")[i - 1];
                    let above = q.row(level + 1).expect("row above")[i];
                    let want_zero = below == HalfInt::ZERO || above == HalfInt::ZERO;
                    rep.check("vanishing_j0", c.map(|c| c.is_zero() == want_zero), || {
                        format!("{lam} {q:?} level {level}")
                    });
                    let ok = radicand(&q, level, 0, false).map_or(false, |(_, rad)| rad <= Rational::zero());
                    rep.check("radicand_j0_nonpositive", Ok(ok), || format!("{lam} {q:?} level {level}"));
                }
            }
        }
    }
}

pub fn lie_suite(b: Bounds) -> SuiteReport {
    let mut rep = SuiteReport::new("lie");
    for r in 3..=b.max_rank {
        for lam in dominant_weights(r, b.max_entry) {
            lie_checks(&mut rep, &lam);
        }
    }
    for r in 3..=b.max_rank {
        for lam in dominant_weights(r, b.max_entry.max(HalfInt::from_int(2))) {
            coefficient_checks(&mut rep, &lam);
        }
    }
    rep
}

fn sample_inf_chars(r: usize, bound: HalfInt) -> Vec<InfCharacter> {
    inf_chars(r, bound)
}

pub fn catalog_suite(b: Bounds) -> SuiteReport {
    let mut rep = SuiteReport::new("catalog");
    for r in 3..=b.max_rank {
        let rc = rho_compact(r);
        let ro = rho(r);
        rep.check("rho_compact", Ok(rc.iter().zip(&ro).all(|(a, b)| a.to_rational() == *b)), || format!("r = {r}"));
        for lam in sample_inf_chars(r, b.max_entry) {
            let cap = lam.max_entry() + 2;
            let labels = irreducibles(&lam);
            let mut seen: Vec<(IrrLabel, Vec<SpinWeight>)> = Vec::new();
            for &(label, len) in &labels {
                rep.check("length", length(&lam, label).map(|l| l == len), || format!("{lam} {label}"));
                let ks = kspectrum_enumerate(&lam, label, cap);
                let mk = minimal_k_type(&lam, label);
                let ok = match (&ks, &mk) {
                    (Ok(ks), Ok(mk)) => kspectrum_box(&lam, label).map(|bx| bx.contains(mk)).unwrap_or(false)
                        && ks.iter().all(|k| k.is_dominant()),
                    _ => false,
                };
                rep.check("minimal_k_type_in_box", Ok(ok), || format!("{lam} {label}"));
                if let Ok(ks) = ks {
                    seen.push((label, ks));
                }
            }
            // distinct irreducibles have disjoint K-spectra
            for (i, (a, ka)) in seen.iter().enumerate() {
                for (bl, kb) in &seen[i + 1..] {
                    let disjoint = ka.iter().all(|x| !kb.contains(x));
                    rep.check("kspectra_disjoint", Ok(disjoint), || format!("{lam} {a} {bl}"));
                }
            }
            let m = if lam.is_even() { lam.n() } else { lam.n() + 1 };
            for i in 1..=m {
                rep.check("ps_parameters", ps_parameters(&lam, i).map(|(mu, _)| mu.is_dominant()), || {
                    format!("{lam} i = {i}")
                });
            }
        }
    }
    rep
}

/// Everything checked for one (Lambda, gamma): exclusivity, the stated
/// diagram's shape, derivation agreement, and K-type containment.
pub fn whittaker_checks(rep: &mut SuiteReport, lam: &InfCharacter, gamma: &SpinWeight, derive: bool) {
    let tag_s = || format!("{lam} gamma = {gamma}");
    let tags = satisfied_conditions(lam, gamma);
    rep.check("exclusive", tags.as_ref().map(|t| t.len() <= 1).map_err(Clone::clone), tag_s);
    let Ok(tag) = classify_gamma(lam, gamma) else { return };
    let diagram = match socle_filtration(lam, gamma) {
        Ok(d) => d,
        Err(e) => return rep.check("socle_filtration", Err(e), tag_s),
    };
    if tag == GammaCondition::Zero {
        rep.check("zero_module", Ok(diagram.is_none()), tag_s);
    }
    if let Some(d) = &diagram {
        let sub = unique_submodule(lam, gamma);
        rep.check("socle_is_submodule", sub.map(|s| d.layers[0] == vec![s]), tag_s);
        let once = d.labels().iter().filter(|&&x| x == d.layers[0][0]).count() == 1;
        rep.check("socle_multiplicity_one", Ok(once), tag_s);
        let parity = d.arrows.iter().all(|&(u, l)| {
            let (a, b) = (length(lam, u).unwrap_or(0), length(lam, l).unwrap_or(0));
            a.abs_diff(b) % 2 == 1
        });
        rep.check("arrow_parity", Ok(parity), tag_s);
        if let Ok(cands) = candidate_factors(lam, gamma) {
            let same: Vec<IrrLabel> = cands.iter().copied().collect();
            let mut labels = d.labels();
            labels.sort();
            rep.check("candidates_are_diagram", Ok(labels == same), tag_s);
            let cap = lam.max_entry() + 2;
            for c in cands {
                let res = kspectrum_enumerate(lam, c, cap).and_then(|ks| {
                    for k in ks {
                        if !two_step_contains(&k, gamma)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                });
                rep.check("k_type_containment", res, || format!("{} factor {c}", tag_s()));
            }
        }
        if let GammaCondition::Even0i(i) | GammaCondition::Odd0i(i) = tag {
            let res = restriction_contains(lam, i, gamma)
                .and_then(|a| restriction_contains(lam, i - 1, gamma).map(|b| a && b));
            rep.check("restriction_consistency", res, tag_s);
        }
    }
    if derive {
        let res = derive_socle(lam, gamma).map(|(d, t)| d == diagram && t.agrees_with_statement);
        rep.check("derive_agrees", res, tag_s);
    }
}

pub fn whittaker_suite(b: Bounds) -> SuiteReport {
    let mut rep = SuiteReport::new("whittaker");
    for r in 4..=b.max_rank {
        for lam in sample_inf_chars(r, b.max_entry) {
            let bound = lam.max_entry() + 1;
            for g in gamma_range(&lam, bound) {
                whittaker_checks(&mut rep, &lam, &g, true);
            }
        }
    }
    rep
}

pub fn radial_suite(b: Bounds) -> SuiteReport {
    let mut rep = SuiteReport::new("radial");
    for r in 4..=b.max_rank {
        let n = (r / 2) as i64;
        for lam in sample_inf_chars(r, b.max_entry) {
            let cap = lam.max_entry() + 2;
            for (label, _) in irreducibles(&lam) {
                let Ok(ks) = kspectrum_enumerate(&lam, label, cap) else { continue };
                for kt in ks {
                    for k in (-n..=n).filter(|&k| k != 0) {
                        let res = central_zero_cases(&lam, &kt, k).and_then(|(z, _)| {
                            let u = u_value(r, &kt, k)?;
                            Ok(z == central_scalar(&lam, u).is_zero())
                        });
                        rep.check("central_cases", res, || format!("{lam} {kt} k = {k}"));
                    }
                }
            }
        }
    }
    // injectivity certificates on small K-types
    for r in 4..=b.max_rank.min(6) {
        let n = (r / 2) as i64;
        for kt in dominant_weights(r, HalfInt::from_int(3)) {
            for g in dominant_weights(r - 2, HalfInt::from_int(3)) {
                for k in (-n..=n).filter(|&k| k != 0) {
                    if injectivity_case(&kt, &g, k).is_none() {
                        continue;
                    }
                    let res = injectivity_certificate(&kt, &g, k).map(|c| matches!(c, Injectivity::Certified { .. }));
                    rep.check("injectivity", res, || format!("{kt} {g} k = {k}"));
                }
            }
        }
    }
    // embedding ODE against the Even0 / Even1 tags
    for r in [4usize, 6].into_iter().filter(|&r| r <= b.max_rank) {
        for lam in sample_inf_chars(r, b.max_entry.min(HalfInt::from_twice(7))) {
            for g in gamma_range(&lam, lam.max_entry() + 1) {
                embedding_checks(&mut rep, &lam, &g);
            }
        }
    }
    rep
}

/// Where the embedding lemma applies (gamma occurs in delta_{0,n},
/// gamma_{n-1} != 0 and Q_0 exists for the minimal K-type), the ODE admits a moderate solution for pi_0 exactly
/// on Even0 and for pi_1 exactly on Even1.
pub fn embedding_checks(rep: &mut SuiteReport, lam: &InfCharacter, g: &SpinWeight) {
    let n = lam.n();
    if g.entries[n - 2] == HalfInt::ZERO || !restriction_contains(lam, n, g).unwrap_or(false) {
        return;
    }
    let Ok(tag) = classify_gamma(lam, g) else { return };
    for (label, which, want) in
        [(IrrLabel::Pi0, DiscreteSeries::Pi0, GammaCondition::Even0), (IrrLabel::Pi1, DiscreteSeries::Pi1, GammaCondition::Even1)]
    {
        let Ok(mk) = minimal_k_type(lam, label) else { continue };
        let res = match embedding_ode(&mk, g, which) {
            Err(Error::Domain(_)) => continue,
            r => r.map(|ode| ode.admits_moderate_solution == (tag == want)),
        };
        rep.check("embedding_ode", res, || format!("{lam} {g} {label}"));
    }
}

/// A GT pattern's rows as a plain list, for reports.
pub fn pattern_rows(p: &GTPattern) -> Vec<Vec<String>> {
    p.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_examples() {
        let w = |r: usize, t: &[i64]| SpinWeight::from_twice(r, t).unwrap();
        assert_eq!(weyl_dimension(&w(3, &[2])), Rational::from_integer(3.into()));
        assert_eq!(weyl_dimension(&w(4, &[2, 0])), Rational::from_integer(4.into()));
        assert_eq!(weyl_dimension(&w(5, &[1, 1])), Rational::from_integer(4.into()));
        assert_eq!(weyl_dimension(&w(6, &[2, 0, 0])), Rational::from_integer(6.into()));
        assert_eq!(weyl_dimension(&w(7, &[2, 0, 0])), Rational::from_integer(7.into()));
        assert_eq!(weyl_dimension(&w(7, &[1, 1, 1])), Rational::from_integer(8.into()));
        assert_eq!(casimir_oracle(&w(3, &[2])), Rational::from_integer((-2).into()));
    }

    #[test]
    fn weight_enumeration() {
        let ws = dominant_weights(4, HalfInt::ONE);
        // (0,0) (1,-1) (1,0) (1,1) and (1/2,+-1/2)
        assert_eq!(ws.len(), 6);
        assert_eq!(dominant_weights(3, HalfInt::ONE).len(), 3);
        assert_eq!(dominant_weights(2, HalfInt::ZERO).len(), 1);
        let ls = inf_chars(4, HalfInt::from_twice(5));
        assert!(ls.iter().any(|l| l.entries == vec![HalfInt::from_twice(5), HalfInt::from_twice(1)]));
        assert!(ls.iter().all(|l| validate_inf_char(4, &l.entries).is_ok()));
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds { max_rank: 5, max_entry: HalfInt::ONE };
        for s in [Suite::Gt, Suite::Lie, Suite::Catalog] {
            let rep = run(s, b);
            assert!(rep.passed(), "{rep:#?}");
        }
        let rep = run(Suite::Whittaker, Bounds { max_rank: 5, max_entry: HalfInt::from_twice(5) });
        assert!(rep.passed(), "{rep:#?}");
        assert!(rep.suites[0].checks > 0);
    }
}
