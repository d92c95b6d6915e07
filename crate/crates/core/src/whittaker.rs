//! Standard Whittaker modules I(eta, Lambda, sigma_gamma): which gamma give a
//! nonzero module, the socle filtration in closed form, and an independent
//! derivation of that filtration from the lower-level ingredients.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::HalfInt;
use crate::catalog::{
    irreducibles, kspectrum_box, kspectrum_enumerate, length, minimal_k_type, ps_parameters, InfCharacter, IrrLabel,
    SocleDiagram,
};
use crate::error::{Error, Result};
use crate::gt::{branch, SpinWeight};
use crate::radial::{embedding_ode, injectivity_certificate, DiscreteSeries, Injectivity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GammaCondition {
    Even0,
    Even1,
    Even0i(usize),
    Odd0i(usize),
    /// No condition holds; the module is zero.
    Zero,
}

impl fmt::Display for GammaCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaCondition::Even0 => write!(f, "even0"),
            GammaCondition::Even1 => write!(f, "even1"),
            GammaCondition::Even0i(i) => write!(f, "even0i({i})"),
            GammaCondition::Odd0i(i) => write!(f, "odd0i({i})"),
            GammaCondition::Zero => write!(f, "none"),
        }
    }
}

fn check_gamma(lam: &InfCharacter, gamma: &SpinWeight) -> Result<()> {
    if gamma.r + 2 != lam.r {
        return Err(Error::Shape(format!("gamma must be a Spin({}) weight, got Spin({})", lam.r - 2, gamma.r)));
    }
    if gamma.entries.len() != (lam.r - 2) / 2 || !gamma.is_dominant() {
        return Err(Error::Domain(format!("gamma = {gamma} is not a dominant Spin({}) weight", lam.r - 2)));
    }
    Ok(())
}

/// lo <= x <= hi with x - lo integral.
fn within(x: HalfInt, lo: HalfInt, hi: HalfInt) -> bool {
    lo <= x && x <= hi && x.same_class(lo)
}

fn condition_holds(lam: &InfCharacter, g: &[HalfInt], tag: GammaCondition) -> bool {
    let n = lam.n() as i64;
    let l = |p: usize| lam.get(p);
    let half = HalfInt::HALF;
    let gp = |p: usize| g[p - 1];
    let pi = |p: usize| p as i64;
    let nn = lam.n();
    match tag {
        GammaCondition::Even0 | GammaCondition::Even1 | GammaCondition::Even0i(_) => {
            // first-type line: Lambda_{p+1} - n + p + 3/2 <= gamma_p <= Lambda_p - n + p + 1/2
            let first = |p: usize| within(gp(p), l(p + 1) - n + pi(p) + 1 + half, l(p) - n + pi(p) + half);
            let second = |p: usize| within(gp(p), l(p + 2) - n + pi(p) + 1 + half, l(p + 1) - n + pi(p) + half);
            let last = g[nn - 2];
            match tag {
                GammaCondition::Even0 => {
                    (1..nn - 1).all(first) && within(last, l(nn) + half, l(nn - 1) - half)
                }
                GammaCondition::Even1 => {
                    (1..nn - 1).all(first) && within(last, -l(nn - 1) + half, -l(nn) - half)
                }
                GammaCondition::Even0i(i) => {
                    let b = l(nn) - half;
                    (2..=nn).contains(&i)
                        && (1..=i.saturating_sub(2)).all(first)
                        && (i - 1..=nn.saturating_sub(2)).all(second)
                        && within(last, -b, b)
                }
                _ => unreachable!(),
            }
        }
        GammaCondition::Odd0i(i) => {
            if !(2..=nn + 1).contains(&i) {
                return false;
            }
            let first = |p: usize| within(gp(p), l(p + 1) - n + pi(p) + 1, l(p) - n + pi(p));
            let second = |p: usize| within(gp(p), l(p + 2) - n + pi(p) + 1, l(p + 1) - n + pi(p));
            let lo_last = (1..=i.saturating_sub(2)).all(first) && (i - 1..=nn.saturating_sub(2)).all(second);
            let tail = i > nn || within(g[nn - 2], l(nn + 1).abs(), l(nn) - 1);
            lo_last && tail
        }
        GammaCondition::Zero => false,
    }
}

fn all_tags(lam: &InfCharacter) -> Vec<GammaCondition> {
    let n = lam.n();
    if lam.is_even() {
        let mut v = vec![GammaCondition::Even0, GammaCondition::Even1];
        v.extend((2..=n).map(GammaCondition::Even0i));
        v
    } else {
        (2..=n + 1).map(GammaCondition::Odd0i).collect()
    }
}

/// Every condition satisfied by gamma (at most one for valid input).
pub fn satisfied_conditions(lam: &InfCharacter, gamma: &SpinWeight) -> Result<Vec<GammaCondition>> {
    check_gamma(lam, gamma)?;
    Ok(all_tags(lam).into_iter().filter(|&t| condition_holds(lam, &gamma.entries, t)).collect())
}

pub fn classify_gamma(lam: &InfCharacter, gamma: &SpinWeight) -> Result<GammaCondition> {
    let tags = satisfied_conditions(lam, gamma)?;
    match tags.as_slice() {
        [] => Ok(GammaCondition::Zero),
        [t] => Ok(*t),
        _ => Err(Error::Consistency(format!("gamma = {gamma} satisfies several conditions: {tags:?}"))),
    }
}

fn diagram_layers(lam: &InfCharacter, tag: GammaCondition) -> Option<Vec<Vec<IrrLabel>>> {
    use IrrLabel::*;
    let n = lam.n();
    Some(match tag {
        GammaCondition::Even0 => vec![vec![Pi0], vec![PBar(n)], vec![Pi1]],
        GammaCondition::Even1 => vec![vec![Pi1], vec![PBar(n)], vec![Pi0]],
        GammaCondition::Even0i(i) if i < n => vec![vec![PBar(i)], vec![PBar(i - 1), PBar(i + 1)]],
        GammaCondition::Even0i(_) => vec![vec![PBar(n)], vec![Pi0, PBar(n - 1), Pi1]],
        GammaCondition::Odd0i(i) if i <= n => vec![vec![PBar(i)], vec![PBar(i - 1), PBar(i + 1)]],
        GammaCondition::Odd0i(_) => vec![vec![PBar(n + 1)], vec![PBar(n)]],
        GammaCondition::Zero => return None,
    })
}

/// The closed-form socle filtration; `None` when the module is zero.
pub fn socle_filtration(lam: &InfCharacter, gamma: &SpinWeight) -> Result<Option<SocleDiagram>> {
    let tag = classify_gamma(lam, gamma)?;
    Ok(diagram_layers(lam, tag).map(SocleDiagram::complete))
}

pub fn unique_submodule(lam: &InfCharacter, gamma: &SpinWeight) -> Result<IrrLabel> {
    match classify_gamma(lam, gamma)? {
        GammaCondition::Even0 => Ok(IrrLabel::Pi0),
        GammaCondition::Even1 => Ok(IrrLabel::Pi1),
        GammaCondition::Even0i(i) | GammaCondition::Odd0i(i) => Ok(IrrLabel::PBar(i)),
        GammaCondition::Zero => Err(Error::Domain("the module is zero".into())),
    }
}

pub fn candidate_factors(lam: &InfCharacter, gamma: &SpinWeight) -> Result<BTreeSet<IrrLabel>> {
    let tag = classify_gamma(lam, gamma)?;
    diagram_layers(lam, tag)
        .map(|l| l.into_iter().flatten().collect())
        .ok_or_else(|| Error::Domain("the module is zero".into()))
}

/// Whether sigma_gamma occurs in delta_{0,k} restricted to M^eta, by
/// branching mu_{0,k} from Spin(r-1) to Spin(r-2).
pub fn restriction_contains(lam: &InfCharacter, k: usize, gamma: &SpinWeight) -> Result<bool> {
    check_gamma(lam, gamma)?;
    let (mu, _) = ps_parameters(lam, k)?;
    Ok(branch(&mu)?.contains(gamma))
}

/// Whether gamma occurs in the two-step restriction of lambda to Spin(r-2).
pub fn two_step_contains(lambda: &SpinWeight, gamma: &SpinWeight) -> Result<bool> {
    for mid in branch(lambda)? {
        if mid.r < 3 {
            if mid.entries == gamma.entries {
                return Ok(true);
            }
            continue;
        }
        if branch(&mid)?.contains(gamma) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Cases of the zero-shift lemma: no g-action maps `from` onto `to`.
pub fn zero_shift_case(lam: &InfCharacter, tag: GammaCondition, from: IrrLabel, to: IrrLabel) -> Option<u8> {
    use IrrLabel::*;
    let n = lam.n();
    if from == to {
        return Some(1);
    }
    let adj = |i: usize, j: usize| i.abs_diff(j) == 1;
    match (tag, from, to) {
        (GammaCondition::Even0, Pi0, PBar(i)) if i == n => Some(2),
        (GammaCondition::Even0, PBar(i), Pi1) if i == n => Some(3),
        (GammaCondition::Even1, Pi1, PBar(i)) if i == n => Some(4),
        (GammaCondition::Even1, PBar(i), Pi0) if i == n => Some(5),
        (GammaCondition::Even0i(i), PBar(a), PBar(b)) if i < n && a == i && adj(a, b) => Some(6),
        (GammaCondition::Even0i(i), PBar(a), other) if i == n && a == n => match other {
            PBar(b) if b + 1 == n => Some(7),
            Pi0 | Pi1 => Some(7),
            _ => None,
        },
        (GammaCondition::Odd0i(i), PBar(a), PBar(b)) if i <= n && a == i && adj(a, b) => Some(8),
        (GammaCondition::Odd0i(i), PBar(a), PBar(b)) if i == n + 1 && a == n + 1 && b == n => Some(9),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ShiftVerdict {
    /// A zero-shift lemma case applies.
    Excluded { case: u8 },
    /// No K-type of `from` is one step away from a K-type of `to`.
    NotAdjacent,
    /// Adjacent K-types with an injective shift operator.
    Certified { lambda: SpinWeight, k: i64, case: u8 },
    /// Adjacent K-types, but no injectivity certificate; treated as possible.
    Unknown { lambda: SpinWeight, k: i64 },
}

impl ShiftVerdict {
    pub fn possible(&self) -> bool {
        matches!(self, ShiftVerdict::Certified { .. } | ShiftVerdict::Unknown { .. })
    }
}

fn kcap(lam: &InfCharacter) -> HalfInt {
    lam.max_entry() + 2
}

pub fn zero_shift_possible(
    lam: &InfCharacter,
    gamma: &SpinWeight,
    from: IrrLabel,
    to: IrrLabel,
) -> Result<ShiftVerdict> {
    let tag = classify_gamma(lam, gamma)?;
    let cands = candidate_factors(lam, gamma)?;
    if !cands.contains(&from) || !cands.contains(&to) {
        return Err(Error::Domain(format!("{from} -> {to}: labels must be candidate factors {cands:?}")));
    }
    if let Some(case) = zero_shift_case(lam, tag, from, to) {
        return Ok(ShiftVerdict::Excluded { case });
    }
    let to_box = kspectrum_box(lam, to)?;
    let n = lam.n() as i64;
    let mut first_unknown = None;
    for lambda in kspectrum_enumerate(lam, from, kcap(lam))? {
        for k in (-n..=n).filter(|&k| k != 0) {
            let next = lambda.shifted(k);
            if !to_box.contains(&next) || !two_step_contains(&next, gamma)? || !two_step_contains(&lambda, gamma)? {
                continue;
            }
            match injectivity_certificate(&lambda, gamma, k)? {
                Injectivity::Certified { case, .. } => return Ok(ShiftVerdict::Certified { lambda, k, case }),
                Injectivity::NotApplicable => {
                    first_unknown.get_or_insert((lambda.clone(), k));
                }
            }
        }
    }
    Ok(match first_unknown {
        Some((lambda, k)) => ShiftVerdict::Unknown { lambda, k },
        None => ShiftVerdict::NotAdjacent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftFact {
    pub from: IrrLabel,
    pub to: IrrLabel,
    pub layer: usize,
    pub verdict: ShiftVerdict,
    pub source: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DerivationTrace {
    pub socle_step: Vec<String>,
    pub candidate_step: Vec<String>,
    pub parity_layers: Vec<String>,
    pub exclusion_facts: Vec<ShiftFact>,
    pub arrow_facts: Vec<ShiftFact>,
    pub multiplicity_facts: Vec<String>,
    pub agrees_with_statement: bool,
}

impl DerivationTrace {
    pub fn exclusion_cases(&self) -> Vec<u8> {
        self.exclusion_facts
            .iter()
            .filter_map(|f| match f.verdict {
                ShiftVerdict::Excluded { case } => Some(case),
                _ => None,
            })
            .collect()
    }
}

fn derived_socle(lam: &InfCharacter, gamma: &SpinWeight, trace: &mut DerivationTrace) -> Result<Option<IrrLabel>> {
    let n = lam.n();
    let top = if lam.is_even() { n } else { n + 1 };
    let mut found = Vec::new();
    for i in 2..=top {
        let a = restriction_contains(lam, i, gamma)?;
        let b = restriction_contains(lam, i - 1, gamma)?;
        trace.socle_step.push(format!(
            "restriction_contains: gamma in delta_{{0,{i}}} = {a}, in delta_{{0,{}}} = {b}",
            i - 1
        ));
        if a && b {
            found.push(IrrLabel::PBar(i));
        }
    }
    match found.as_slice() {
        [one] => {
            trace.socle_step.push(format!("unique submodule (multiplicity one): {one}"));
            return Ok(Some(*one));
        }
        [] => {}
        _ => return Err(Error::Consistency(format!("several principal series submodules {found:?}"))),
    }
    if !lam.is_even() || !restriction_contains(lam, n, gamma)? || gamma.entries[n - 2] == HalfInt::ZERO {
        trace.socle_step.push("no submodule: the module is zero".into());
        return Ok(None);
    }
    let mut admits = Vec::new();
    for (label, which) in [(IrrLabel::Pi0, DiscreteSeries::Pi0), (IrrLabel::Pi1, DiscreteSeries::Pi1)] {
        let mk = minimal_k_type(lam, label)?;
        let ode = embedding_ode(&mk, gamma, which)?;
        trace.socle_step.push(format!(
            "embedding_ode({label}, minimal K-type {mk}): exponent {}, sign {}, moderate = {}",
            ode.exponent, ode.sign, ode.admits_moderate_solution
        ));
        if ode.admits_moderate_solution {
            admits.push(label);
        }
    }
    match admits.as_slice() {
        [one] => Ok(Some(*one)),
        _ => Err(Error::Consistency(format!("discrete series embedding ambiguous: {admits:?}"))),
    }
}

/// Labels all of whose K-types (below the cap) contain gamma after two restrictions.
pub fn derived_candidates(lam: &InfCharacter, gamma: &SpinWeight) -> Result<BTreeSet<IrrLabel>> {
    let mut out = BTreeSet::new();
    for (label, _) in irreducibles(lam) {
        let ks = kspectrum_enumerate(lam, label, kcap(lam))?;
        let mut all = !ks.is_empty();
        for k in &ks {
            if !two_step_contains(k, gamma)? {
                all = false;
                break;
            }
        }
        if all {
            out.insert(label);
        }
    }
    Ok(out)
}

/// Rebuilds the socle filtration from: the submodule criterion, candidate
/// factors by K-type containment, lengths with alternating parity, the
/// zero-shift lemma and K-type adjacency.
pub fn derive_socle(lam: &InfCharacter, gamma: &SpinWeight) -> Result<(Option<SocleDiagram>, DerivationTrace)> {
    let mut trace = DerivationTrace::default();
    let tag = classify_gamma(lam, gamma)?;
    let socle = derived_socle(lam, gamma, &mut trace)?;
    let Some(socle) = socle else {
        if tag != GammaCondition::Zero {
            return Err(Error::Consistency(format!("derived zero module but gamma satisfies {tag}")));
        }
        trace.agrees_with_statement = true;
        return Ok((None, trace));
    };
    let stated_sub = unique_submodule(lam, gamma)?;
    if stated_sub != socle {
        return Err(Error::Consistency(format!("derived socle {socle} but the stated submodule is {stated_sub}")));
    }

    let cands = derived_candidates(lam, gamma)?;
    trace.candidate_step.push(format!("K-type containment gives candidates {cands:?}"));
    let stated = candidate_factors(lam, gamma)?;
    if cands != stated {
        return Err(Error::Consistency(format!("derived candidates {cands:?} differ from stated {stated:?}")));
    }
    trace.multiplicity_facts.push(format!("{socle} occurs once (multiplicity one of the submodule)"));
    trace.multiplicity_facts.push("each candidate occurs at least once (taken as an axiom)".into());
    trace.multiplicity_facts.push("non-socle factors occur once (taken as an axiom)".into());

    let mut layers: Vec<Vec<IrrLabel>> = vec![vec![socle]];
    let mut placed: BTreeSet<IrrLabel> = [socle].into();
    let mut arrows = Vec::new();
    let mut parity = length(lam, socle)? % 2;
    trace.parity_layers.push(format!("layer 1: {socle} (length parity {parity})"));
    loop {
        parity ^= 1;
        let layer_no = layers.len() + 1;
        let below = layers.last().expect("nonempty").clone();
        let mut next = Vec::new();
        for &cand in &cands {
            if length(lam, cand)? % 2 != parity {
                continue;
            }
            let mut joins = Vec::new();
            for &lower in &below {
                let verdict = zero_shift_possible(lam, gamma, cand, lower)?;
                let fact = ShiftFact { from: cand, to: lower, layer: layer_no, verdict: verdict.clone(), source: "zero_shift_possible" };
                match verdict {
                    ShiftVerdict::Excluded { .. } => trace.exclusion_facts.push(fact),
                    v if v.possible() => {
                        joins.push(lower);
                        trace.arrow_facts.push(fact);
                    }
                    _ => trace.arrow_facts.push(fact),
                }
            }
            if joins.is_empty() {
                continue;
            }
            if placed.contains(&cand) {
                return Err(Error::Consistency(format!(
                    "{cand} would occur twice (layer {layer_no}), contradicting multiplicity one"
                )));
            }
            next.push(cand);
            arrows.extend(joins.into_iter().map(|l| (cand, l)));
        }
        if next.is_empty() {
            trace.parity_layers.push(format!("layer {layer_no}: empty, filtration ends"));
            break;
        }
        trace.parity_layers.push(format!("layer {layer_no}: {next:?} (length parity {parity})"));
        placed.extend(next.iter().copied());
        layers.push(next);
    }
    if placed != cands {
        return Err(Error::Consistency(format!("candidates {cands:?} not all placed: {placed:?}")));
    }
    let diagram = SocleDiagram { layers, arrows }.normalized();
    let statement = socle_filtration(lam, gamma)?;
    trace.agrees_with_statement = statement.as_ref() == Some(&diagram);
    Ok((Some(diagram), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::validate_inf_char;
    use IrrLabel::*;

    fn lam(r: usize, twice: &[i64]) -> InfCharacter {
        let e: Vec<HalfInt> = twice.iter().map(|&t| HalfInt::from_twice(t)).collect();
        validate_inf_char(r, &e).unwrap()
    }

    fn g(r: usize, v: &[i64]) -> SpinWeight {
        SpinWeight::from_ints(r, v).unwrap()
    }

    #[test]
    fn classify_examples() {
        let l = lam(4, &[5, 1]);
        assert_eq!(classify_gamma(&l, &g(2, &[1])).unwrap(), GammaCondition::Even0);
        assert_eq!(classify_gamma(&l, &g(2, &[2])).unwrap(), GammaCondition::Even0);
        assert_eq!(classify_gamma(&l, &g(2, &[-1])).unwrap(), GammaCondition::Even1);
        assert_eq!(classify_gamma(&l, &g(2, &[0])).unwrap(), GammaCondition::Even0i(2));
        assert_eq!(classify_gamma(&l, &g(2, &[-3])).unwrap(), GammaCondition::Zero);
        let l7 = lam(7, &[6, 4, 2, 0]);
        assert_eq!(classify_gamma(&l7, &g(5, &[1, 0])).unwrap(), GammaCondition::Odd0i(3));
        assert_eq!(classify_gamma(&l7, &g(5, &[1, 1])).unwrap(), GammaCondition::Odd0i(4));
        let l6 = lam(6, &[7, 3, 1]);
        assert_eq!(classify_gamma(&l6, &g(4, &[0, 0])).unwrap(), GammaCondition::Even0i(2));
        let l3 = lam(3, &[4, 2]);
        assert_eq!(classify_gamma(&l3, &SpinWeight::zero(1)).unwrap(), GammaCondition::Odd0i(2));
    }

    #[test]
    fn socle_examples() {
        let l = lam(4, &[5, 1]);
        let d = socle_filtration(&l, &g(2, &[1])).unwrap().unwrap();
        assert_eq!(d.layers, vec![vec![Pi0], vec![PBar(2)], vec![Pi1]]);
        assert_eq!(d.arrows, vec![(PBar(2), Pi0), (Pi1, PBar(2))]);
        let d = socle_filtration(&l, &g(2, &[0])).unwrap().unwrap();
        assert_eq!(d.layers, vec![vec![PBar(2)], vec![Pi0, PBar(1), Pi1]]);
        let l7 = lam(7, &[6, 4, 2, 0]);
        let d = socle_filtration(&l7, &g(5, &[1, 1])).unwrap().unwrap();
        assert_eq!(d.layers, vec![vec![PBar(4)], vec![PBar(3)]]);
        assert!(socle_filtration(&l, &g(2, &[7])).unwrap().is_none());
    }

    #[test]
    fn submodule_and_candidates() {
        let l = lam(4, &[5, 1]);
        assert_eq!(unique_submodule(&l, &g(2, &[1])).unwrap(), Pi0);
        assert_eq!(unique_submodule(&l, &g(2, &[-1])).unwrap(), Pi1);
        assert_eq!(candidate_factors(&l, &g(2, &[1])).unwrap(), [Pi0, Pi1, PBar(2)].into());
        assert_eq!(candidate_factors(&l, &g(2, &[0])).unwrap(), [PBar(1), PBar(2), Pi0, Pi1].into());
        let l6 = lam(6, &[7, 3, 1]);
        assert_eq!(unique_submodule(&l6, &g(4, &[0, 0])).unwrap(), PBar(2));
    }

    #[test]
    fn restriction_examples() {
        let l = lam(4, &[5, 1]);
        assert!(restriction_contains(&l, 2, &g(2, &[1])).unwrap());
        assert!(!restriction_contains(&l, 1, &g(2, &[1])).unwrap());
    }

    #[test]
    fn zero_shift_examples() {
        let l = lam(4, &[5, 1]);
        let gm = g(2, &[1]);
        assert_eq!(zero_shift_possible(&l, &gm, Pi0, PBar(2)).unwrap(), ShiftVerdict::Excluded { case: 2 });
        assert_eq!(zero_shift_possible(&l, &gm, Pi0, Pi0).unwrap(), ShiftVerdict::Excluded { case: 1 });
        assert!(zero_shift_possible(&l, &gm, Pi1, PBar(2)).unwrap().possible());
        assert!(zero_shift_possible(&l, &gm, PBar(1), Pi0).is_err());
    }

    #[test]
    fn derive_r4() {
        let l = lam(4, &[5, 1]);
        let (d, t) = derive_socle(&l, &g(2, &[1])).unwrap();
        assert!(t.agrees_with_statement, "{t:#?}");
        assert_eq!(d.unwrap().layers.len(), 3);
        assert!(t.exclusion_cases().contains(&3));
        let (d, t) = derive_socle(&l, &g(2, &[-1])).unwrap();
        assert!(t.agrees_with_statement);
        assert_eq!(d.unwrap().layers[0], vec![Pi1]);
        assert!(t.exclusion_cases().contains(&5));
        let (d, t) = derive_socle(&l, &g(2, &[0])).unwrap();
        assert!(t.agrees_with_statement, "{t:#?}");
        let d = d.unwrap();
        let lens: Vec<Vec<usize>> =
            d.layers.iter().map(|ly| ly.iter().map(|&x| length(&l, x).unwrap()).collect()).collect();
        assert_eq!(lens, vec![vec![1], vec![0, 2, 0]]);
    }
}
