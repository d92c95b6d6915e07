//! Irreducible Harish-Chandra modules of Spin(r,1) at a regular integral
//! infinitesimal character: labels, lengths, principal series data and
//! K-spectra.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::HalfInt;
use crate::error::{Error, Result};
use crate::gt::SpinWeight;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InfCharacter {
    pub r: usize,
    pub entries: Vec<HalfInt>,
    /// Odd r with Lambda_{n+1} = 0.
    pub zero_last_entry: bool,
}

impl InfCharacter {
    pub fn n(&self) -> usize {
        self.r / 2
    }

    pub fn is_even(&self) -> bool {
        self.r % 2 == 0
    }

    /// Lambda_p, 1-based.
    pub fn get(&self, p: usize) -> HalfInt {
        self.entries[p - 1]
    }

    /// Lambda_p with Lambda_0 = +infinity as `None`.
    fn upper(&self, p: usize) -> Option<HalfInt> {
        (p > 0).then(|| self.get(p))
    }

    pub fn max_entry(&self) -> HalfInt {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for InfCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

pub fn validate_inf_char(r: usize, entries: &[HalfInt]) -> Result<InfCharacter> {
    let fail = |clause: String| Err(Error::Validation { clause });
    if r < 3 {
        return fail(format!("r = {r}: need r >= 3"));
    }
    let n = r / 2;
    let want = if r % 2 == 0 { n } else { n + 1 };
    if entries.len() != want {
        return Err(Error::Shape(format!(
            "Spin({r},1) needs {want} entries in Lambda, got {}",
            entries.len()
        )));
    }
    let diffs = if r % 2 == 0 { n - 1 } else { n };
    for p in 1..=diffs {
        let d = entries[p - 1] - entries[p];
        if !d.is_integer() || d <= HalfInt::ZERO {
            return fail(format!("Lambda_{p} - Lambda_{} = {d} is not a positive integer", p + 1));
        }
    }
    let mut zero_last_entry = false;
    if r % 2 == 0 {
        if entries[n - 1] <= HalfInt::ZERO {
            return fail(format!("Lambda_{n} = {} is not positive", entries[n - 1]));
        }
    } else {
        let s = entries[n - 1] + entries[n];
        if !s.is_integer() || s <= HalfInt::ZERO {
            return fail(format!("Lambda_{n} + Lambda_{} = {s} is not a positive integer", n + 1));
        }
        zero_last_entry = entries[n] == HalfInt::ZERO;
    }
    Ok(InfCharacter { r, entries: entries.to_vec(), zero_last_entry })
}

/// pi_0 < pbar_{0,1} < ... < pbar_{0,m} < pi_1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrLabel {
    Pi0,
    PBar(usize),
    Pi1,
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Pi0 => write!(f, "pi0"),
            IrrLabel::Pi1 => write!(f, "pi1"),
            IrrLabel::PBar(i) => write!(f, "pbar{i}"),
        }
    }
}

impl fmt::Debug for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IrrLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi0" => Ok(IrrLabel::Pi0),
            "pi1" => Ok(IrrLabel::Pi1),
            _ => s
                .strip_prefix("pbar")
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .map(IrrLabel::PBar)
                .ok_or_else(|| Error::Parse(format!("unknown label {s:?} (pi0, pi1, pbar<i>)"))),
        }
    }
}

impl Serialize for IrrLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IrrLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn max_pbar(lam: &InfCharacter) -> usize {
    if lam.is_even() {
        lam.n()
    } else {
        lam.n() + 1
    }
}

pub fn check_label(lam: &InfCharacter, label: IrrLabel) -> Result<()> {
    match label {
        IrrLabel::Pi0 | IrrLabel::Pi1 if !lam.is_even() => {
            Err(Error::Domain(format!("{label} exists only for even r (r = {})", lam.r)))
        }
        IrrLabel::PBar(i) if i == 0 || i > max_pbar(lam) => {
            Err(Error::Domain(format!("{label} out of range for r = {}", lam.r)))
        }
        _ => Ok(()),
    }
}

pub fn length(lam: &InfCharacter, label: IrrLabel) -> Result<usize> {
    check_label(lam, label)?;
    Ok(match label {
        IrrLabel::Pi0 | IrrLabel::Pi1 => 0,
        IrrLabel::PBar(i) => lam.n() + 1 - i,
    })
}

/// All irreducibles with their lengths, in label order.
pub fn irreducibles(lam: &InfCharacter) -> Vec<(IrrLabel, usize)> {
    let mut out = Vec::new();
    if lam.is_even() {
        out.push(IrrLabel::Pi0);
    }
    out.extend((1..=max_pbar(lam)).map(IrrLabel::PBar));
    if lam.is_even() {
        out.push(IrrLabel::Pi1);
    }
    out.into_iter().map(|l| (l, length(lam, l).expect("listed label"))).collect()
}

/// (mu_{0,i}, nu_{0,i}): mu is Lambda without Lambda_i, minus rho_m; nu = Lambda_i.
pub fn ps_parameters(lam: &InfCharacter, i: usize) -> Result<(SpinWeight, HalfInt)> {
    if i == 0 || i > max_pbar(lam) {
        return Err(Error::Domain(format!("principal series index {i} out of range")));
    }
    let n = lam.n() as i64;
    let rest: Vec<HalfInt> = (1..=lam.entries.len()).filter(|&p| p != i).map(|p| lam.get(p)).collect();
    let mu: Vec<HalfInt> = rest
        .iter()
        .enumerate()
        .map(|(idx, &x)| {
            let p = idx as i64 + 1;
            // rho_m: n - p - 1/2 for r = 2n, n - p for r = 2n+1
            if lam.is_even() {
                x - HalfInt::from_twice(2 * (n - p) - 1)
            } else {
                x - (n - p)
            }
        })
        .collect();
    let mu = SpinWeight::new(lam.r - 1, mu).map_err(|e| Error::Consistency(format!("mu_{{0,{i}}}: {e}")))?;
    Ok((mu, lam.get(i)))
}

/// Closed interval with step 1; `hi = None` is unbounded above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: HalfInt,
    pub hi: Option<HalfInt>,
}

impl Interval {
    fn new(lo: HalfInt, hi: Option<HalfInt>) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        x >= self.lo && self.hi.map_or(true, |h| x <= h) && x.same_class(self.lo)
    }
}

/// K-spectrum of an irreducible as a product of intervals, one per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBox {
    pub r: usize,
    pub coords: Vec<Interval>,
}

impl KBox {
    pub fn contains(&self, lambda: &SpinWeight) -> bool {
        lambda.r == self.r
            && lambda.entries.len() == self.coords.len()
            && lambda.is_dominant()
            && self.coords.iter().zip(&lambda.entries).all(|(iv, &x)| iv.contains(x))
    }

    /// Dominant members with lambda_1 <= cap, lexicographic.
    pub fn enumerate(&self, cap: HalfInt) -> Vec<SpinWeight> {
        let mut ranges: Vec<Vec<HalfInt>> = Vec::new();
        for (p, iv) in self.coords.iter().enumerate() {
            let hi = match (iv.hi, p) {
                (Some(h), _) => h,
                (None, 0) => cap,
                (None, _) => {
                    // bounded by lambda_{p-1} <= lambda_1 <= cap anyway
                    cap
                }
            };
            let mut v = Vec::new();
            let mut x = iv.lo;
            while x <= hi {
                v.push(x);
                x += 1;
            }
            ranges.push(v);
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(ranges.len());
        product(&ranges, &mut cur, &mut |e: &[HalfInt]| {
            if e.first().map_or(true, |&x| x <= cap) {
                let w = SpinWeight { r: self.r, entries: e.to_vec() };
                if w.is_dominant() {
                    out.push(w);
                }
            }
        });
        out.sort();
        out
    }
}

fn product(ranges: &[Vec<HalfInt>], cur: &mut Vec<HalfInt>, f: &mut dyn FnMut(&[HalfInt])) {
    if cur.len() == ranges.len() {
        f(cur);
        return;
    }
    for &x in &ranges[cur.len()] {
        cur.push(x);
        product(ranges, cur, f);
        cur.pop();
    }
}

pub fn kspectrum_box(lam: &InfCharacter, label: IrrLabel) -> Result<KBox> {
    check_label(lam, label)?;
    let n = lam.n();
    let ni = n as i64;
    let half = HalfInt::HALF;
    let mut coords = Vec::with_capacity(n);
    // shift helpers: Lambda_q - n + p (+- 1/2)
    let base = |q: usize, p: usize| lam.get(q) - ni + p as i64;
    if lam.is_even() {
        // first type: [Lambda_p - n + p + 1/2, Lambda_{p-1} - n + p - 1/2]
        let first = |p: usize| {
            Interval::new(base(p, p) + half, lam.upper(p - 1).map(|u| u - ni + p as i64 - half))
        };
        // second type: [Lambda_{p+1} - n + p + 1/2, Lambda_p - n + p - 1/2]
        let second = |p: usize| Interval::new(base(p + 1, p) + half, Some(base(p, p) - half));
        match label {
            IrrLabel::Pi0 => coords.extend((1..=n).map(first)),
            IrrLabel::Pi1 => {
                coords.extend((1..n).map(first));
                coords.push(Interval::new(-lam.get(n - 1) + half, Some(-lam.get(n) - half)));
            }
            IrrLabel::PBar(i) => {
                for p in 1..n {
                    coords.push(if p < i { first(p) } else { second(p) });
                }
                let b = lam.get(n) - half;
                coords.push(Interval::new(-b, Some(b)));
            }
        }
    } else {
        let IrrLabel::PBar(i) = label else { unreachable!("checked above") };
        // first type: [Lambda_p - n + p, Lambda_{p-1} - n + p - 1]
        let first = |p: usize| Interval::new(base(p, p), lam.upper(p - 1).map(|u| u - ni + p as i64 - 1));
        let second = |p: usize| Interval::new(base(p + 1, p), Some(base(p, p) - 1));
        for p in 1..=n {
            if p < i {
                coords.push(first(p));
            } else if p < n {
                coords.push(second(p));
            } else {
                coords.push(Interval::new(lam.get(n + 1).abs(), Some(lam.get(n) - 1)));
            }
        }
    }
    Ok(KBox { r: lam.r, coords })
}

pub fn kspectrum_contains(lam: &InfCharacter, label: IrrLabel, lambda: &SpinWeight) -> Result<bool> {
    Ok(kspectrum_box(lam, label)?.contains(lambda))
}

pub fn kspectrum_enumerate(lam: &InfCharacter, label: IrrLabel, cap: HalfInt) -> Result<Vec<SpinWeight>> {
    Ok(kspectrum_box(lam, label)?.enumerate(cap))
}

/// rho_c for so(r): n - p (r = 2n) or n - p + 1/2 (r = 2n+1).
pub fn rho_compact(r: usize) -> Vec<HalfInt> {
    let n = r / 2;
    (1..=n)
        .map(|p| {
            let v = HalfInt::from_int((n - p) as i64);
            if r % 2 == 0 {
                v
            } else {
                v + HalfInt::HALF
            }
        })
        .collect()
}

fn norm_sq_twice(lambda: &SpinWeight, rho: &[HalfInt]) -> i64 {
    lambda
        .entries
        .iter()
        .zip(rho)
        .map(|(&x, &p)| {
            let t = (x + p + p).twice();
            t * t
        })
        .sum()
}

/// Box element minimizing |lambda + 2 rho_c|. Ties (only possible for a
/// half-integral last coordinate of a symmetric interval) go to the
/// lexicographically smallest weight.
pub fn minimal_k_type(lam: &InfCharacter, label: IrrLabel) -> Result<SpinWeight> {
    let bx = kspectrum_box(lam, label)?;
    let cap = bx.coords[0].lo + 2;
    let rho = rho_compact(lam.r);
    bx.enumerate(cap)
        .into_iter()
        .min_by(|a, b| norm_sq_twice(a, &rho).cmp(&norm_sq_twice(b, &rho)).then(a.cmp(b)))
        .ok_or_else(|| Error::Consistency(format!("empty K-spectrum for {label}")))
}

/// Layered diagram; `layers[0]` is the socle, arrows go (upper, lower).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleDiagram {
    pub layers: Vec<Vec<IrrLabel>>,
    pub arrows: Vec<(IrrLabel, IrrLabel)>,
}

impl SocleDiagram {
    /// Layers sorted, every label of a layer joined to every label of the layer below.
    pub fn complete(layers: Vec<Vec<IrrLabel>>) -> Self {
        let layers: Vec<Vec<IrrLabel>> = layers
            .into_iter()
            .map(|mut l| {
                l.sort();
                l
            })
            .collect();
        let mut arrows = Vec::new();
        for w in layers.windows(2) {
            for &u in &w[1] {
                for &l in &w[0] {
                    arrows.push((u, l));
                }
            }
        }
        SocleDiagram { layers, arrows }.normalized()
    }

    /// Sorted layers and arrows; arrows ordered by the layer of their lower end.
    pub fn normalized(mut self) -> Self {
        for l in &mut self.layers {
            l.sort();
        }
        let layer_of = |x: IrrLabel| self.layers.iter().position(|l| l.contains(&x)).unwrap_or(usize::MAX);
        let set: BTreeSet<(usize, IrrLabel, IrrLabel)> =
            self.arrows.iter().map(|&(u, l)| (layer_of(l), u, l)).collect();
        let arrows = set.into_iter().map(|(_, u, l)| (u, l)).collect();
        SocleDiagram { layers: self.layers, arrows }
    }

    pub fn labels(&self) -> Vec<IrrLabel> {
        self.layers.iter().flatten().copied().collect()
    }

    /// DOT digraph with node and edge statements only.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for (idx, layer) in self.layers.iter().enumerate() {
            for l in layer {
                s.push_str(&format!("  {l} [label=\"{l}\", layer=\"{}\"];\n", idx + 1));
            }
        }
        for (u, l) in &self.arrows {
            s.push_str(&format!("  {u} -> {l};\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn ps_socle(lam: &InfCharacter, i: usize) -> Result<SocleDiagram> {
    let m = max_pbar(lam);
    if i == 0 || i > m {
        return Err(Error::Domain(format!("principal series index {i} out of range")));
    }
    let n = lam.n();
    let layers = if lam.is_even() {
        if i < n {
            vec![vec![IrrLabel::PBar(i)], vec![IrrLabel::PBar(i + 1)]]
        } else {
            vec![vec![IrrLabel::PBar(n)], vec![IrrLabel::Pi0, IrrLabel::Pi1]]
        }
    } else if i <= n {
        vec![vec![IrrLabel::PBar(i)], vec![IrrLabel::PBar(i + 1)]]
    } else {
        vec![vec![IrrLabel::PBar(n + 1)]]
    };
    Ok(SocleDiagram::complete(layers))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn lam4() -> InfCharacter {
        validate_inf_char(4, &[h(5), h(1)]).unwrap()
    }

    fn w(r: usize, v: &[i64]) -> SpinWeight {
        SpinWeight::from_ints(r, v).unwrap()
    }

    #[test]
    fn validation() {
        assert!(validate_inf_char(4, &[h(3), h(3)]).is_err());
        let e = validate_inf_char(4, &[h(3), h(3)]).unwrap_err();
        assert!(matches!(e, Error::Validation { .. }), "{e}");
        assert!(validate_inf_char(5, &[h(6), h(4), h(2)]).is_ok());
        assert!(validate_inf_char(5, &[h(6), h(4), h(-2)]).is_ok());
        assert!(matches!(validate_inf_char(5, &[h(4), h(2)]), Err(Error::Shape(_))));
        assert!(validate_inf_char(5, &[h(4), h(2), h(0)]).unwrap().zero_last_entry);
        assert!(validate_inf_char(5, &[h(4), h(2), h(-2)]).is_err());
        assert!(validate_inf_char(4, &[h(4), h(0)]).is_err());
    }

    #[test]
    fn lengths() {
        use IrrLabel::*;
        assert_eq!(irreducibles(&lam4()), vec![(Pi0, 0), (PBar(1), 2), (PBar(2), 1), (Pi1, 0)]);
        let l5 = validate_inf_char(5, &[h(4), h(2), h(0)]).unwrap();
        assert_eq!(irreducibles(&l5), vec![(PBar(1), 2), (PBar(2), 1), (PBar(3), 0)]);
        let l3 = validate_inf_char(3, &[h(2), h(0)]).unwrap();
        assert_eq!(irreducibles(&l3), vec![(PBar(1), 1), (PBar(2), 0)]);
    }

    #[test]
    fn ps_parameter_examples() {
        let (mu, nu) = ps_parameters(&lam4(), 1).unwrap();
        assert_eq!(mu, w(3, &[0]));
        assert_eq!(nu, h(5));
        let (mu, nu) = ps_parameters(&lam4(), 2).unwrap();
        assert_eq!(mu, w(3, &[2]));
        assert_eq!(nu, h(1));
        let l5 = validate_inf_char(5, &[h(4), h(2), h(0)]).unwrap();
        let (mu, nu) = ps_parameters(&l5, 3).unwrap();
        assert_eq!(mu, w(4, &[1, 1]));
        assert_eq!(nu, h(0));
    }

    #[test]
    fn kspectrum_r4() {
        use IrrLabel::*;
        let l = lam4();
        assert!(kspectrum_contains(&l, Pi0, &w(4, &[2, 1])).unwrap());
        assert!(!kspectrum_contains(&l, Pi0, &w(4, &[1, 1])).unwrap());
        assert!(kspectrum_contains(&l, PBar(2), &w(4, &[2, 0])).unwrap());
        assert!(!kspectrum_contains(&l, Pi1, &w(4, &[2, 1])).unwrap());
        assert!(kspectrum_contains(&l, Pi1, &w(4, &[2, -1])).unwrap());
        assert_eq!(kspectrum_enumerate(&l, PBar(1), h(20)).unwrap(), vec![w(4, &[0, 0]), w(4, &[1, 0])]);
        let pb2 = kspectrum_enumerate(&l, PBar(2), h(20)).unwrap();
        assert_eq!(pb2.len(), 9);
        assert_eq!(pb2[0], w(4, &[2, 0]));
        assert_eq!(kspectrum_enumerate(&l, Pi0, h(4)).unwrap(), vec![w(4, &[2, 1]), w(4, &[2, 2])]);
        assert_eq!(minimal_k_type(&l, Pi0).unwrap(), w(4, &[2, 1]));
        assert_eq!(minimal_k_type(&l, Pi1).unwrap(), w(4, &[2, -1]));
        assert_eq!(minimal_k_type(&l, PBar(2)).unwrap(), w(4, &[2, 0]));
        // wrong integrality class is rejected
        assert!(!kspectrum_contains(&l, PBar(1), &SpinWeight::from_twice(4, &[1, 1]).unwrap()).unwrap());
    }

    #[test]
    fn kspectrum_odd_top() {
        let l5 = validate_inf_char(5, &[h(4), h(2), h(0)]).unwrap();
        let v = kspectrum_enumerate(&l5, IrrLabel::PBar(3), h(6)).unwrap();
        // lambda_1 >= 1, lambda_2 = 1
        assert_eq!(v.first(), Some(&w(5, &[1, 1])));
        assert!(v.iter().all(|x| x.entries[1] == HalfInt::from_int(1)));
    }

    #[test]
    fn ps_socle_shapes() {
        use IrrLabel::*;
        assert_eq!(ps_socle(&lam4(), 2).unwrap().layers, vec![vec![PBar(2)], vec![Pi0, Pi1]]);
        assert_eq!(ps_socle(&lam4(), 1).unwrap().layers, vec![vec![PBar(1)], vec![PBar(2)]]);
        let l5 = validate_inf_char(5, &[h(4), h(2), h(0)]).unwrap();
        assert_eq!(ps_socle(&l5, 3).unwrap().layers, vec![vec![PBar(3)]]);
    }

    #[test]
    fn label_wire_names() {
        for l in [IrrLabel::Pi0, IrrLabel::Pi1, IrrLabel::PBar(3)] {
            assert_eq!(l.to_string().parse::<IrrLabel>().unwrap(), l);
        }
        assert!("pbar0".parse::<IrrLabel>().is_err());
    }
}
