use proptest::prelude::*;

use spinwhit::catalog::{irreducibles, length, minimal_k_type, validate_inf_char, InfCharacter, IrrLabel};
use spinwhit::gt::{branch, dimension, dualize};
use spinwhit::verify::dominant_weights;
use spinwhit::whittaker::{
    classify_gamma, derive_socle, restriction_contains, satisfied_conditions, socle_filtration, unique_submodule,
    GammaCondition,
};
use spinwhit::{HalfInt, SpinWeight};

/// Regular integral Lambda built from a bottom entry and positive integer gaps.
fn inf_char() -> impl Strategy<Value = InfCharacter> {
    (4usize..=7, any::<bool>(), -1i64..3, prop::collection::vec(1i64..4, 3)).prop_filter_map(
        "valid Lambda",
        |(r, half, bottom, gaps)| {
            let n = r / 2;
            let len = if r % 2 == 0 { n } else { n + 1 };
            let mut tw = vec![0i64; len];
            tw[len - 1] = 2 * bottom + i64::from(half);
            for p in (0..len - 1).rev() {
                tw[p] = tw[p + 1] + 2 * gaps[p];
            }
            let e: Vec<HalfInt> = tw.iter().map(|&t| HalfInt::from_twice(t)).collect();
            validate_inf_char(r, &e).ok()
        },
    )
}

fn with_gamma() -> impl Strategy<Value = (InfCharacter, SpinWeight)> {
    inf_char().prop_flat_map(|l| {
        let gs = dominant_weights(l.r - 2, l.max_entry() + 1);
        (Just(l), prop::sample::select(gs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn at_most_one_condition((l, g) in with_gamma()) {
        prop_assert!(satisfied_conditions(&l, &g).unwrap().len() <= 1);
    }

    #[test]
    fn derivation_matches_statement((l, g) in with_gamma()) {
        let (d, trace) = derive_socle(&l, &g).unwrap();
        prop_assert_eq!(d, socle_filtration(&l, &g).unwrap());
        prop_assert!(trace.agrees_with_statement);
    }

    #[test]
    fn socle_once_and_arrows_change_parity((l, g) in with_gamma()) {
        if let Some(d) = socle_filtration(&l, &g).unwrap() {
            let sub = unique_submodule(&l, &g).unwrap();
            prop_assert_eq!(&d.layers[0], &vec![sub]);
            prop_assert_eq!(d.labels().iter().filter(|&&x| x == sub).count(), 1);
            for (u, lo) in &d.arrows {
                let diff = length(&l, *u).unwrap().abs_diff(length(&l, *lo).unwrap());
                prop_assert_eq!(diff % 2, 1);
            }
        }
    }

    #[test]
    fn principal_series_submodule_iff_both_restrictions((l, g) in with_gamma()) {
        let top = if l.is_even() { l.n() } else { l.n() + 1 };
        let tag = classify_gamma(&l, &g).unwrap();
        for i in 2..=top {
            let both = restriction_contains(&l, i, &g).unwrap() && restriction_contains(&l, i - 1, &g).unwrap();
            let is_sub = matches!(tag, GammaCondition::Even0i(j) | GammaCondition::Odd0i(j) if j == i);
            prop_assert_eq!(both, is_sub, "i = {}", i);
        }
    }

    #[test]
    fn minimal_k_types_lie_in_distinct_spectra(l in inf_char()) {
        let mks: Vec<(IrrLabel, SpinWeight)> =
            irreducibles(&l).into_iter().map(|(x, _)| (x, minimal_k_type(&l, x).unwrap())).collect();
        for (i, (a, ka)) in mks.iter().enumerate() {
            for (b, kb) in &mks[i + 1..] {
                prop_assert_ne!(ka, kb, "{} {}", a, b);
            }
        }
    }

    #[test]
    fn dualize_is_an_involution(l in inf_char()) {
        let w = minimal_k_type(&l, IrrLabel::PBar(1)).unwrap();
        prop_assert_eq!(dualize(&dualize(&w)), w.clone());
        prop_assert_eq!(branch(&w).unwrap().iter().map(dimension).sum::<u64>(), dimension(&w));
    }
}
