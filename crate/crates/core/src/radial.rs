//! K-type shift operators as matrices of first-order radial operators
//! A*D + B + C*(i xi/a), with D = a d/da and xi > 0 kept formal.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{rat_int, Gauss, HalfInt, Rational};
use crate::catalog::InfCharacter;
use crate::error::{shape, Error, Result};
use crate::gt::{dualize, enumerate_partial, PartialGTPattern, PatternRows, SpinWeight};
use crate::lie::{coeff_generic, radicand, shift_indices};

#[derive(Clone, Default, PartialEq, Eq)]
pub struct RadialCoeff {
    /// coefficient of D = a d/da
    pub d: Gauss,
    /// constant term
    pub c: Gauss,
    /// coefficient of i xi / a
    pub x: Gauss,
}

impl RadialCoeff {
    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.c.is_zero() && self.x.is_zero()
    }
}

impl fmt::Display for RadialCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*Da + ({}) + ({})*(i xi/a)", self.d, self.c, self.x)
    }
}

impl fmt::Debug for RadialCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rows indexed by `target`, columns by `source`.
#[derive(Clone, Debug)]
pub struct RadialOpMatrix {
    pub r: usize,
    pub k: i64,
    pub source: Vec<PartialGTPattern>,
    pub target: Vec<PartialGTPattern>,
    pub entries: BTreeMap<(usize, usize), RadialCoeff>,
}

impl RadialOpMatrix {
    pub fn get(&self, t: usize, s: usize) -> RadialCoeff {
        self.entries.get(&(t, s)).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty() || self.target.is_empty()
    }
}

fn sign_of(x: i64) -> i64 {
    x.signum()
}

/// Index actually used in the formulas: (-1)^n k when r = 2n and |k| = n.
pub fn internal_index(r: usize, k: i64) -> i64 {
    let n = (r / 2) as i64;
    if r % 2 == 0 && k.abs() == n && n % 2 == 1 {
        -k
    } else {
        k
    }
}

fn check_k(r: usize, k: i64) -> Result<()> {
    let n = (r / 2) as i64;
    let ok = k.abs() <= n && (k != 0 || r % 2 == 1);
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("shift index {k} not admissible for r = {r}")))
    }
}

/// Top-level coefficient with the product over the missing row r dropped.
/// This rescales each P_k by one nonzero constant.
fn reduced_top(p: &PartialGTPattern, kk: i64) -> Result<Gauss> {
    match radicand(p, p.top_level(), kk, true) {
        Some((sign, rad)) => Ok(Gauss::signed_sqrt(sign, &rad)),
        None => Err(Error::Consistency(format!("zero denominator in top coefficient at {p:?}, k={kk}"))),
    }
}

/// The shift operator P_k : lambda -> lambda + eps_k on Hom_M(V_lambda, V_gamma).
///
/// The i xi/a coefficient is read off as the commutator of the D-term map
/// with A_{r,r-1}; for even r it coincides with the usual ratio form
/// (see `x_ratio_form`).
pub fn shift_matrix(lambda: &SpinWeight, gamma: &SpinWeight, k: i64) -> Result<RadialOpMatrix> {
    let r = lambda.r;
    check_k(r, k)?;
    let source = enumerate_partial(lambda, gamma)?;
    let shifted = lambda.shifted(k);
    let target = if shifted.is_dominant() { enumerate_partial(&shifted, gamma)? } else { Vec::new() };
    let mut out = RadialOpMatrix { r, k, source, target, entries: BTreeMap::new() };
    if out.is_empty() {
        return Ok(out);
    }
    let n = (r / 2) as i64;
    let kk = internal_index(r, k);
    let top = r - 1;
    let mid = r - 2;
    let offset = if r % 2 == 0 { n - 1 } else { n };
    let tidx: HashMap<&PartialGTPattern, usize> = out.target.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut entries: BTreeMap<(usize, usize), RadialCoeff> = BTreeMap::new();
    for (s, src) in out.source.iter().enumerate() {
        let up = src.shifted(top, kk);
        let up_valid = up.is_valid();
        let red_s = if up_valid { Some(reduced_top(src, kk)?) } else { None };
        if let (Some(t), Some(red)) = (tidx.get(&up), &red_s) {
            let a = -red;
            let cst = HalfInt::from_int(offset) - src.l(top, kk);
            let e = entries.entry((*t, s)).or_default();
            e.d += &a;
            e.c += &a.scale(&cst.to_rational());
        }
        for j in shift_indices(mid) {
            let q = src.shifted(mid, j);
            let tq = q.shifted(top, kk);
            let Some(&t) = tidx.get(&tq) else { continue };
            let mut x = Gauss::zero();
            if q.is_valid() {
                let a_mid = coeff_generic(src, mid, j)?;
                if !a_mid.is_zero() {
                    x += &(reduced_top(&q, kk)? * a_mid);
                }
            }
            if let Some(red) = &red_s {
                let a_mid_up = coeff_generic(&up, mid, j)?;
                if !a_mid_up.is_zero() {
                    x = x - a_mid_up * red;
                }
            }
            if !x.is_zero() {
                entries.entry((t, s)).or_default().x += &x;
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    out.entries = entries;
    Ok(out)
}

/// Ratio form of the i xi/a coefficient for r = 2n, for the term moving
/// column `src` through sigma_{r-2,j} then sigma_{r-1,k}:
/// a_{r-2,j}(S) a_{r-1,k}(Q) / (l_{r-2,j}(S) - l_{r-1,k}(Q)) with Q = sigma_{r-2,j} S,
/// or, when that is degenerate, a_{r-2,j}(sigma_{r-1,k} S) a_{r-1,k}(S) / (l_{r-2,j}(S) - l_{r-1,k}(S) - 1).
/// Returns `None` when both forms are degenerate.
pub fn x_ratio_form(src: &PartialGTPattern, j: i64, k: i64) -> Result<Option<Gauss>> {
    let r = src.r;
    let kk = internal_index(r, k);
    let (top, mid) = (r - 1, r - 2);
    let q = src.shifted(mid, j);
    if q.is_valid() {
        let den = src.l(mid, j) - q.l(top, kk);
        if den != HalfInt::ZERO {
            let a = coeff_generic(src, mid, j)? * reduced_top(&q, kk)?;
            return Ok(Some(a.scale(&(Rational::one() / den.to_rational()))));
        }
    }
    let up = src.shifted(top, kk);
    if up.is_valid() {
        let den = src.l(mid, j) - src.l(top, kk) - 1;
        if den != HalfInt::ZERO {
            let a = coeff_generic(&up, mid, j)? * reduced_top(src, kk)?;
            return Ok(Some(a.scale(&(Rational::one() / den.to_rational()))));
        }
    }
    Ok(None)
}

/// u_k: l_{2n-1,k}(lambda*) + 1/2 for r = 2n, l_{2n,k}(lambda) for r = 2n+1.
pub fn u_value(r: usize, lambda: &SpinWeight, k: i64) -> Result<HalfInt> {
    if k == 0 {
        return Err(Error::Domain("u_k needs k != 0".into()));
    }
    check_k(r, k)?;
    let n = (r / 2) as i64;
    let kk = internal_index(r, k);
    let a = kk.abs();
    if r % 2 == 0 {
        let top = dualize(lambda).entries;
        let v = top[a as usize - 1] + (n - a);
        Ok(if kk > 0 { v } else { -v } + HalfInt::HALF)
    } else {
        let v = lambda.entries[a as usize - 1] + (n + 1 - a);
        Ok(if kk > 0 { v } else { -v + 1 })
    }
}

/// prod_{i=1}^{floor((r+1)/2)} (u^2 - Lambda_i^2).
pub fn central_scalar(lam: &InfCharacter, u: HalfInt) -> Rational {
    let u = u.to_rational();
    let m = (lam.r + 1) / 2;
    lam.entries[..m].iter().fold(Rational::one(), |acc, x| {
        let l = x.to_rational();
        acc * (&u * &u - &l * &l)
    })
}

/// Which closed-form vanishing condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentralCase {
    /// r = 2n, 0 < k < n: lambda_k = Lambda_i - n + k - 1/2
    One,
    /// r = 2n, -n < k < 0: lambda_|k| = Lambda_i - n + |k| + 1/2
    Two,
    /// r = 2n, k = n: lambda_n = +-Lambda_i - 1/2
    PlusN,
    /// r = 2n, k = -n: lambda_n = +-Lambda_i + 1/2
    MinusN,
    /// r = 2n+1, k > 0: lambda_k = Lambda_i - n + k - 1 (i <= n) or |Lambda_{n+1}| - n + k - 1
    Three,
    /// r = 2n+1, k < 0: lambda_|k| = Lambda_i - n + |k| (i <= n) or |Lambda_{n+1}| - n + |k|
    Four,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralZero {
    pub case: CentralCase,
    /// index i of the matching Lambda_i
    pub i: usize,
}

/// Closed-form case matcher; independent of `central_scalar`.
pub fn central_case_match(lam: &InfCharacter, lambda: &SpinWeight, k: i64) -> Result<Option<CentralZero>> {
    check_k(lam.r, k)?;
    if k == 0 {
        return Err(Error::Domain("central cases need k != 0".into()));
    }
    let n = lam.n() as i64;
    let a = k.unsigned_abs() as usize;
    let lk = lambda.entries[a - 1];
    let ai = a as i64;
    let half = HalfInt::HALF;
    let find = |case: CentralCase, pred: &dyn Fn(HalfInt, usize) -> bool, upto: usize| {
        (1..=upto).find(|&i| pred(lam.get(i), i)).map(|i| CentralZero { case, i })
    };
    Ok(if lam.is_even() {
        let m = lam.n();
        if k == n {
            find(CentralCase::PlusN, &|l, _| lk == l - half || lk == -l - half, m)
        } else if k == -n {
            find(CentralCase::MinusN, &|l, _| lk == l + half || lk == -l + half, m)
        } else if k > 0 {
            find(CentralCase::One, &|l, _| lk == l - n + ai - half, m)
        } else {
            find(CentralCase::Two, &|l, _| lk == l - n + ai + half, m)
        }
    } else {
        let m = lam.n() + 1;
        let last = lam.n() + 1;
        let eff = |l: HalfInt, i: usize| if i == last { l.abs() } else { l };
        if k > 0 {
            find(CentralCase::Three, &|l, i| lk == eff(l, i) - n + ai - 1, m)
        } else {
            find(CentralCase::Four, &|l, i| lk == eff(l, i) - n + ai, m)
        }
    })
}

/// Whether chi_Lambda(C_{r+1}(u_k)) vanishes, with the matched closed-form case.
/// The product and the case matcher must agree.
pub fn central_zero_cases(lam: &InfCharacter, lambda: &SpinWeight, k: i64) -> Result<(bool, Option<CentralZero>)> {
    let u = u_value(lam.r, lambda, k)?;
    let zero = central_scalar(lam, u).is_zero();
    let case = central_case_match(lam, lambda, k)?;
    if zero != case.is_some() {
        return Err(Error::Consistency(format!(
            "central scalar zero = {zero} but closed-form case = {case:?} at lambda = {lambda}, k = {k}"
        )));
    }
    Ok((zero, case))
}

/// Pfaffian scalar for r = 2n+1: (-1)^{n+1} prod Lambda_i. The sign is a
/// normalization choice; only vanishing is used elsewhere.
pub fn pfaffian_scalar(lam: &InfCharacter) -> Result<Rational> {
    if lam.is_even() {
        return Err(Error::Domain("Pfaffian scalar needs odd r".into()));
    }
    if lam.entries.len() != lam.n() + 1 {
        return shape("Lambda has the wrong number of entries");
    }
    let prod = lam.entries.iter().fold(Rational::one(), |a, x| a * x.to_rational());
    Ok(if lam.n() % 2 == 0 { -prod } else { prod })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Injectivity {
    /// Injectivity case (1)-(6) and the order in which columns were eliminated.
    Certified { case: u8, pivots: Vec<usize> },
    NotApplicable,
}

/// Which injectivity case (1)-(6) applies to (lambda, gamma, k), if any.
pub fn injectivity_case(lambda: &SpinWeight, gamma: &SpinWeight, k: i64) -> Option<u8> {
    let r = lambda.r;
    let n = (r / 2) as i64;
    let lam = &lambda.entries;
    let g = &gamma.entries;
    let a = k.unsigned_abs() as usize;
    if r % 2 == 0 {
        let sgn_n = if n % 2 == 0 { 1 } else { -1 };
        if (2..n).contains(&k) && g[a - 2] > lam[a - 1] {
            return Some(1);
        }
        if (2..n).contains(&-k) && g[a - 2] < lam[a - 1] {
            return Some(2);
        }
        if n >= 2 {
            let ls = dualize(lambda).entries[n as usize - 1];
            let gs = dualize(gamma).entries[n as usize - 2];
            if ls > HalfInt::ZERO && ls > gs.abs() && k == -sgn_n * n {
                return Some(3);
            }
            if ls < HalfInt::ZERO && -ls > g[n as usize - 2].abs() && k == sgn_n * n {
                return Some(4);
            }
        }
    } else {
        if (2..=n).contains(&k) && g[a - 2] > lam[a - 1] {
            return Some(5);
        }
        if (2..=n).contains(&-k) && g[a - 2] < lam[a - 1] {
            return Some(6);
        }
    }
    None
}

/// Greedy triangular elimination of P_k c = 0. A column is eliminated when
/// some row has, outside already eliminated columns, a single entry with no
/// D part and a nonzero (constant, i xi/a) part: (B + i C xi/a) c = 0 forces c = 0.
/// Returns the elimination order; complete iff its length is the source size.
pub fn eliminate(m: &RadialOpMatrix) -> Vec<usize> {
    let ns = m.source.len();
    let mut rows: Vec<Vec<(usize, &RadialCoeff)>> = vec![Vec::new(); m.target.len()];
    for ((t, s), e) in &m.entries {
        rows[*t].push((*s, e));
    }
    let mut done: BTreeSet<usize> = BTreeSet::new();
    let mut order = Vec::new();
    loop {
        let mut progress = false;
        for row in &rows {
            let live: Vec<&(usize, &RadialCoeff)> = row.iter().filter(|(s, _)| !done.contains(s)).collect();
            if let [(s, e)] = live.as_slice() {
                if e.d.is_zero() && !(e.c.is_zero() && e.x.is_zero()) {
                    done.insert(*s);
                    order.push(*s);
                    progress = true;
                }
            }
        }
        if !progress || done.len() == ns {
            break;
        }
    }
    order
}

pub fn injectivity_certificate(lambda: &SpinWeight, gamma: &SpinWeight, k: i64) -> Result<Injectivity> {
    let Some(case) = injectivity_case(lambda, gamma, k) else {
        return Ok(Injectivity::NotApplicable);
    };
    let m = shift_matrix(lambda, gamma, k)?;
    if m.source.is_empty() {
        return Ok(Injectivity::Certified { case, pivots: Vec::new() });
    }
    let order = eliminate(&m);
    if order.len() != m.source.len() {
        return Err(Error::Consistency(format!(
            "injectivity case ({case}) matched at lambda = {lambda}, gamma = {gamma}, k = {k} but elimination stalled after {} of {} columns",
            order.len(),
            m.source.len()
        )));
    }
    Ok(Injectivity::Certified { case, pivots: order })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiscreteSeries {
    Pi0,
    Pi1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingOde {
    /// c(a) = const * a^{-exponent} * exp(sign * xi / a)
    pub exponent: HalfInt,
    pub sign: i64,
    pub admits_moderate_solution: bool,
}

/// The ODE (D + K + s xi/a) c = 0 satisfied by the lowest coefficient of an
/// embedding of a discrete series with minimal K-type lambda; xi > 0 so a
/// moderate solution as a -> 0+ exists iff s < 0. Needs the extreme pattern
/// Q_0 (middle row gamma_1, ..., gamma_{n-2}, |gamma_{n-1}|) in the basis.
pub fn embedding_ode(lambda: &SpinWeight, gamma: &SpinWeight, which: DiscreteSeries) -> Result<EmbeddingOde> {
    let r = lambda.r;
    if r % 2 == 1 || r < 4 {
        return Err(Error::Domain("the discrete series embedding needs r = 2n >= 4".into()));
    }
    let n = r / 2;
    let g_last = gamma.entries[n - 2];
    if g_last == HalfInt::ZERO {
        return Err(Error::Domain("gamma_{n-1} = 0: no discrete series embedding criterion".into()));
    }
    let mut q0 = gamma.entries.clone();
    q0[n - 2] = g_last.abs();
    if !enumerate_partial(lambda, gamma)?.iter().any(|p| p.mid == q0) {
        return Err(Error::Domain(format!("no pattern with middle row {q0:?} between {lambda} and {gamma}")));
    }
    let lam = &lambda.entries;
    let lam_sum = match which {
        DiscreteSeries::Pi0 => lam.iter().fold(HalfInt::ZERO, |a, &x| a + x),
        DiscreteSeries::Pi1 => lam[..n - 1].iter().fold(HalfInt::ZERO, |a, &x| a + x) - lam[n - 1],
    };
    let g_sum = gamma.entries[..n - 2].iter().fold(HalfInt::ZERO, |a, &x| a + x);
    let exponent = HalfInt::from_int(n as i64 - 1) + lam_sum - g_sum - g_last.abs();
    let sign = match which {
        DiscreteSeries::Pi0 => -sign_of(g_last.twice()),
        DiscreteSeries::Pi1 => sign_of(g_last.twice()),
    };
    Ok(EmbeddingOde { exponent, sign, admits_moderate_solution: sign < 0 })
}

/// Second-order entry: sum of coeff * X^e D^d in normal order, X = i xi/a.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct RadialPoly {
    pub terms: BTreeMap<(u8, u8), Gauss>,
}

impl RadialPoly {
    pub fn from_coeff(c: &RadialCoeff) -> Self {
        let mut p = RadialPoly::default();
        p.add_term(0, 1, &c.d);
        p.add_term(0, 0, &c.c);
        p.add_term(1, 0, &c.x);
        p
    }

    fn add_term(&mut self, e: u8, d: u8, v: &Gauss) {
        if v.is_zero() {
            return;
        }
        let slot = self.terms.entry((e, d)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.terms.remove(&(e, d));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product using D X^f = X^f (D - f), since D(1/a) = -(1/a).
    pub fn compose(&self, o: &RadialPoly) -> RadialPoly {
        let mut out = RadialPoly::default();
        for (&(e, d), a) in &self.terms {
            for (&(f, g), b) in &o.terms {
                // X^e D^d X^f D^g = X^{e+f} (D - f)^d D^g
                let ab = a * b;
                for t in 0..=d {
                    let binom = binomial(d as i64, t as i64);
                    let c = rat_int(binom) * pow_int(-(f as i64), (d - t) as u32);
                    out.add_term(e + f, t + g, &ab.scale(&c));
                }
            }
        }
        out
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn pow_int(b: i64, e: u32) -> Rational {
    rat_int(b.pow(e))
}

impl fmt::Display for RadialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(e, d), v)| {
                let mut s = format!("({v})");
                if e > 0 {
                    s.push_str(&format!("*(i xi/a)^{e}"));
                }
                if d > 0 {
                    s.push_str(&format!("*Da^{d}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for RadialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct RadialPolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), RadialPoly>,
}

/// P o Q; needs Q's target basis to be P's source basis.
pub fn compose(p: &RadialOpMatrix, q: &RadialOpMatrix) -> Result<RadialPolyMatrix> {
    if p.source != q.target {
        return shape("compose: target basis of the right factor differs from source basis of the left factor");
    }
    let mut by_row: BTreeMap<usize, Vec<(usize, RadialPoly)>> = BTreeMap::new();
    for (&(m, s), b) in &q.entries {
        by_row.entry(m).or_default().push((s, RadialPoly::from_coeff(b)));
    }
    let mut entries: BTreeMap<(usize, usize), RadialPoly> = BTreeMap::new();
    for (&(t, m), a) in &p.entries {
        let pa = RadialPoly::from_coeff(a);
        for (s, pb) in by_row.get(&m).into_iter().flatten() {
            let prod = pa.compose(pb);
            let slot = entries.entry((t, *s)).or_default();
            for (&(e, d), v) in &prod.terms {
                slot.add_term(e, d, v);
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(RadialPolyMatrix { rows: p.target.len(), cols: q.source.len(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, SqrtRatSum};
    use crate::catalog::{kspectrum_box, minimal_k_type, validate_inf_char, IrrLabel};
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn w(r: usize, v: &[i64]) -> SpinWeight {
        SpinWeight::from_ints(r, v).unwrap()
    }

    fn lam(r: usize, twice: &[i64]) -> InfCharacter {
        let e: Vec<HalfInt> = twice.iter().map(|&t| h(t)).collect();
        validate_inf_char(r, &e).unwrap()
    }

    /// Dominant weights of Spin(r) with |entries| <= bound.
    fn weights(r: usize, bound: i64) -> Vec<SpinWeight> {
        let m = r / 2;
        let mut out = Vec::new();
        for parity in [0, 1] {
            let vals: Vec<i64> = (-2 * bound..=2 * bound).filter(|t| t.rem_euclid(2) == parity).collect();
            let mut cur = vec![0usize; m];
            loop {
                let tw: Vec<i64> = cur.iter().map(|&i| vals[i]).collect();
                if let Ok(s) = SpinWeight::from_twice(r, &tw) {
                    out.push(s);
                }
                let mut p = 0;
                while p < m {
                    cur[p] += 1;
                    if cur[p] < vals.len() {
                        break;
                    }
                    cur[p] = 0;
                    p += 1;
                }
                if p == m {
                    break;
                }
            }
            if m == 0 {
                break;
            }
        }
        out
    }

    #[test]
    fn u_value_examples() {
        assert_eq!(u_value(5, &w(5, &[2, 1]), 1).unwrap(), h(8));
        assert_eq!(u_value(5, &w(5, &[2, 1]), -1).unwrap(), h(-6));
        assert_eq!(internal_index(4, 2), 2);
        assert_eq!(internal_index(6, 3), -3);
        assert_eq!(u_value(4, &w(4, &[1, 1]), 2).unwrap(), h(3));
        assert!(u_value(4, &w(4, &[1, 1]), 0).is_err());
        assert!(u_value(4, &w(4, &[1, 1]), 3).is_err());
    }

    #[test]
    fn central_scalar_examples() {
        let l = lam(4, &[5, 1]);
        assert!(central_scalar(&l, h(5)).is_zero());
        assert_eq!(central_scalar(&l, h(3)), rat_int(-8));
        assert!(central_scalar(&l, h(-1)).is_zero());
    }

    #[test]
    fn central_zero_examples() {
        let l = lam(4, &[5, 1]);
        let (z, c) = central_zero_cases(&l, &w(4, &[1, 0]), 1).unwrap();
        assert!(z);
        assert_eq!(c.unwrap().case, CentralCase::One);
        let l5 = lam(5, &[4, 2, 0]);
        let (z, c) = central_zero_cases(&l5, &w(5, &[0, 0]), 1).unwrap();
        assert!(z);
        assert_eq!(c.unwrap().case, CentralCase::Three);
        let (z, c) = central_zero_cases(&l, &w(4, &[9, 7]), 1).unwrap();
        assert!(!z && c.is_none());
    }

    #[test]
    fn central_cases_agree_with_product() {
        for (r, tw) in [(4, vec![5, 1]), (4, vec![7, 3]), (5, vec![6, 4, 2]), (5, vec![4, 2, 0]), (6, vec![7, 3, 1])] {
            let l = lam(r, &tw);
            let n = (r / 2) as i64;
            for lw in weights(r, 4) {
                for k in (-n..=n).filter(|&k| k != 0) {
                    central_zero_cases(&l, &lw, k).unwrap();
                }
            }
        }
    }

    #[test]
    fn pfaffian_examples() {
        assert_eq!(pfaffian_scalar(&lam(5, &[6, 4, 2])).unwrap(), rat_int(-6));
        assert!(pfaffian_scalar(&lam(5, &[4, 2, 0])).unwrap().is_zero());
        let bad = InfCharacter { r: 5, entries: vec![h(4), h(2)], zero_last_entry: false };
        assert!(matches!(pfaffian_scalar(&bad), Err(Error::Shape(_))));
        assert!(pfaffian_scalar(&lam(4, &[5, 1])).is_err());
    }

    #[test]
    fn injectivity_examples() {
        let c = injectivity_certificate(&w(6, &[3, 1, 0]), &w(4, &[2, 0]), 2).unwrap();
        assert!(matches!(c, Injectivity::Certified { case: 1, .. }), "{c:?}");
        let c = injectivity_certificate(&w(5, &[2, 2]), &w(3, &[1]), -2).unwrap();
        assert!(matches!(c, Injectivity::Certified { case: 6, .. }), "{c:?}");
        let c = injectivity_certificate(&w(6, &[3, 1, 0]), &w(4, &[1, 0]), 2).unwrap();
        assert_eq!(c, Injectivity::NotApplicable);
    }

    #[test]
    fn empty_and_small_matrices() {
        // gamma does not occur in lambda
        let m = shift_matrix(&w(4, &[1, 1]), &w(2, &[3]), 1).unwrap();
        assert!(m.is_empty() && m.entries.is_empty());
        let m = shift_matrix(&w(4, &[1, 1]), &w(2, &[1]), -2).unwrap();
        assert_eq!((m.source.len(), m.target.len()), (1, 1));
        let e = m.get(0, 0);
        assert!(!e.d.is_zero());
        // B = A * (offset - l_{3,-2}(Q)) with offset n - 1 = 1
        let l = m.source[0].l(3, -2);
        let want = e.d.scale(&(HalfInt::ONE - l).to_rational());
        assert!((e.c.clone() - want).is_zero());
        // r = 3: M is trivial, so the basis is all of V_lambda
        let m = shift_matrix(&w(3, &[1]), &SpinWeight::zero(1), 1).unwrap();
        assert_eq!((m.source.len(), m.target.len()), (3, 5));
        assert!(shift_matrix(&w(4, &[1, 1]), &w(2, &[1]), 0).is_err());
    }

    #[test]
    fn ratio_form_matches_commutator_form() {
        let mut checked = 0;
        for r in [4usize, 6] {
            let n = (r / 2) as i64;
            for lw in weights(r, 2) {
                for g in weights(r - 2, 2) {
                    for k in (-n..=n).filter(|&k| k != 0) {
                        let m = shift_matrix(&lw, &g, k).unwrap();
                        if m.is_empty() {
                            continue;
                        }
                        let kk = internal_index(r, k);
                        for (s, src) in m.source.iter().enumerate() {
                            for j in shift_indices(r - 2) {
                                let tq = src.shifted(r - 2, j).shifted(r - 1, kk);
                                let Some(t) = m.target.iter().position(|p| *p == tq) else { continue };
                                let got = m.get(t, s).x;
                                match x_ratio_form(src, j, k).unwrap() {
                                    Some(v) => assert!((got - v).is_zero(), "r={r} {lw} {g} k={k} j={j}"),
                                    None => assert!(got.is_zero()),
                                }
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn embedding_examples() {
        let (l0, l1) = (w(4, &[2, 1]), w(4, &[2, -1]));
        let e = embedding_ode(&l0, &w(2, &[1]), DiscreteSeries::Pi0).unwrap();
        assert_eq!((e.exponent, e.sign, e.admits_moderate_solution), (h(6), -1, true));
        assert!(!embedding_ode(&l0, &w(2, &[-1]), DiscreteSeries::Pi0).unwrap().admits_moderate_solution);
        let e = embedding_ode(&l1, &w(2, &[-1]), DiscreteSeries::Pi1).unwrap();
        assert_eq!((e.exponent, e.sign, e.admits_moderate_solution), (h(6), -1, true));
        assert!(embedding_ode(&l0, &w(2, &[0]), DiscreteSeries::Pi0).is_err());
        assert!(embedding_ode(&w(5, &[2, 1]), &w(3, &[1]), DiscreteSeries::Pi0).is_err());
    }

    fn cplx(g: &Gauss) -> Complex64 {
        let (re, im) = g.to_f64_pair();
        Complex64::new(re, im)
    }

    /// Numerically eliminates every column but the one whose middle row is
    /// (gamma_1, ..., |gamma_{n-1}|) from the system {P_k c = 0 : lambda + eps_k
    /// dominant and outside the K-spectrum}, returning (B/A, C'/A) of the
    /// resulting scalar ODE (A D + B + C' xi/a) c = 0.
    fn extracted_ode(lambda: &SpinWeight, gamma: &SpinWeight, label: IrrLabel, l: &InfCharacter) -> Vec<(f64, f64)> {
        let r = lambda.r;
        let n = (r / 2) as i64;
        let bx = kspectrum_box(l, label).unwrap();
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        let mut src = Vec::new();
        for k in (-n..=n).filter(|&k| k != 0) {
            let next = lambda.shifted(k);
            if !next.is_dominant() || bx.contains(&next) {
                continue;
            }
            let m = shift_matrix(lambda, gamma, k).unwrap();
            src = m.source.clone();
            let nn = src.len();
            for t in 0..m.target.len() {
                let mut row = vec![Complex64::new(0.0, 0.0); 3 * nn];
                for s in 0..nn {
                    let e = m.get(t, s);
                    row[s] += cplx(&e.d);
                    row[nn + s] += cplx(&e.c);
                    row[2 * nn + s] += cplx(&e.x) * Complex64::i();
                }
                rows.push(row);
            }
        }
        let nn = src.len();
        let mut q0 = gamma.entries.clone();
        let last = q0.len() - 1;
        q0[last] = q0[last].abs();
        let i0 = src.iter().position(|p| p.mid == q0).expect("extreme column");
        let others: Vec<usize> = (0..3 * nn).filter(|c| c % nn != i0).collect();
        let nr = rows.len();
        let dim = nr.max(others.len());
        // B = E_others^T, padded square so the SVD yields a full basis
        let b = DMatrix::from_fn(dim, nr, |i, j| if i < others.len() { rows[j][others[i]] } else { Complex64::new(0.0, 0.0) });
        let svd = b.svd(false, true);
        let vt = svd.v_t.unwrap();
        let mut out = Vec::new();
        for (idx, sv) in svd.singular_values.iter().enumerate() {
            if *sv > 1e-9 {
                continue;
            }
            let y: Vec<Complex64> = vt.row(idx).iter().map(|z| z.conj()).collect();
            let comb = |c: usize| (0..nr).map(|j| y[j] * rows[j][c]).sum::<Complex64>();
            let (d, c, x) = (comb(i0), comb(nn + i0), comb(2 * nn + i0));
            if d.norm() > 1e-9 {
                let (cd, xd) = (c / d, x / d);
                assert!(cd.im.abs() < 1e-8 && xd.im.abs() < 1e-8, "{cd} {xd}");
                out.push((cd.re, xd.re));
            }
        }
        out
    }

    #[test]
    fn ode_recovered_from_shift_matrices() {
        let cases = [
            (lam(4, &[5, 1]), IrrLabel::Pi0, DiscreteSeries::Pi0, w(2, &[1])),
            (lam(4, &[5, 1]), IrrLabel::Pi0, DiscreteSeries::Pi0, w(2, &[2])),
            (lam(4, &[5, 1]), IrrLabel::Pi1, DiscreteSeries::Pi1, w(2, &[-1])),
            (lam(4, &[5, 1]), IrrLabel::Pi1, DiscreteSeries::Pi1, w(2, &[-2])),
            (lam(6, &[7, 3, 1]), IrrLabel::Pi0, DiscreteSeries::Pi0, w(4, &[1, 1])),
            (lam(6, &[7, 3, 1]), IrrLabel::Pi0, DiscreteSeries::Pi0, w(4, &[1, -1])),
            (lam(6, &[7, 3, 1]), IrrLabel::Pi1, DiscreteSeries::Pi1, w(4, &[1, -1])),
        ];
        for (l, label, which, g) in cases {
            let mk = minimal_k_type(&l, label).unwrap();
            let ode = embedding_ode(&mk, &g, which).unwrap();
            let got = extracted_ode(&mk, &g, label, &l);
            assert!(!got.is_empty(), "{label} {g}");
            for (k, s) in got {
                assert!((k - ode.exponent.to_f64()).abs() < 1e-8, "{label} {g}: K {k} vs {}", ode.exponent);
                assert!((s - ode.sign as f64).abs() < 1e-8, "{label} {g}: s {s} vs {}", ode.sign);
            }
        }
    }

    #[test]
    fn compose_rules() {
        let d = RadialCoeff { d: Gauss::real(SqrtRatSum::one()), ..Default::default() };
        let x = RadialCoeff { x: Gauss::real(SqrtRatSum::one()), ..Default::default() };
        let p = RadialPoly::from_coeff(&d).compose(&RadialPoly::from_coeff(&x));
        let mut want = BTreeMap::new();
        want.insert((1u8, 1u8), Gauss::real(SqrtRatSum::one()));
        want.insert((1u8, 0u8), Gauss::real(SqrtRatSum::from_rational(rat(-1, 1))));
        assert_eq!(p.terms, want);

        let up = shift_matrix(&w(3, &[1]), &SpinWeight::zero(1), 1).unwrap();
        let down = shift_matrix(&w(3, &[2]), &SpinWeight::zero(1), -1).unwrap();
        let c = compose(&down, &up).unwrap();
        assert_eq!((c.rows, c.cols), (3, 3));
        for s in 0..3 {
            assert!(c.entries[&(s, s)].terms.contains_key(&(0, 2)));
        }
        assert!(compose(&up, &up).is_err());
    }
}
