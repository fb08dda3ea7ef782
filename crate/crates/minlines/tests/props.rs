//! Property tests: word-level invariants under randomized inputs, plus the
//! exhaustive commutation-invariance and random-lift checks.

use minlines::rootsys::{Root, RootSystem};
use minlines::schubert::FlagSpace;
use minlines::weyl::{self, ParabolicSet, WeylElement, Word};
use minlines::{bottsam, cli, perrin, Error};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::sync::Arc;

fn sys(s: &str) -> Arc<RootSystem> {
    RootSystem::parse(s).unwrap()
}

fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn beta_sequence_invariants(word in letters(4, 7)) {
        let a4 = sys("A4");
        let (w, reduced) = WeylElement::from_word(&a4, &Word(word.clone())).unwrap();
        prop_assume!(reduced);
        let space = FlagSpace::new(&a4, ParabolicSet::new()).unwrap();
        let x = bottsam::BSVariety::new(space, Word(word)).unwrap();
        let betas = bottsam::beta_sequence(&x);

        // Distinct positive roots, equal as a set to the inversions of the
        // inverse.
        let as_set: BTreeSet<Root> = betas.iter().cloned().collect();
        prop_assert_eq!(as_set.len(), betas.len());
        prop_assert!(betas.iter().all(Root::is_positive));
        let inv_set: BTreeSet<Root> = w.inverse().inversion_set().into_iter().collect();
        prop_assert_eq!(as_set, inv_set);

        // Coefficientwise sum against the rho defect.
        let mut total = Root::zero(4);
        for b in &betas {
            total = total.add(b);
        }
        prop_assert_eq!(a4.root_to_weight(&total).0, bottsam::rho_defect(&x));

        // The line criterion is internally cross-checked against the Picard
        // degrees on every call.
        for j in 1..=x.len() {
            bottsam::is_line_bs(&x, j).unwrap();
        }
    }

    #[test]
    fn group_identities(u in letters(4, 6), v in letters(4, 6)) {
        let d4 = sys("D4");
        let (a, _) = WeylElement::from_word(&d4, &Word(u)).unwrap();
        let (b, _) = WeylElement::from_word(&d4, &Word(v)).unwrap();
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.inverse(), b.inverse().mul(&a.inverse()).unwrap());
        prop_assert_eq!(a.length(), a.inverse().length());
        prop_assert!(a.bruhat_leq(&a));
        // Lengths subadditive and congruent mod 2.
        prop_assert!(ab.length() <= a.length() + b.length());
        prop_assert_eq!((a.length() + b.length()) % 2, ab.length() % 2);
    }

    #[test]
    fn word_round_trip(word in letters(5, 8)) {
        let a5 = sys("A5");
        let (w, _) = WeylElement::from_word(&a5, &Word(word)).unwrap();
        let printed = w.reduced_word().to_string();
        let reparsed = Word::parse(&printed, 5).unwrap();
        let (w2, reduced) = WeylElement::from_word(&a5, &reparsed).unwrap();
        prop_assert!(reduced);
        prop_assert_eq!(w, w2);
    }

    #[test]
    fn reflections_preserve_roots(idx in 0usize..12, i in 0usize..4) {
        let d4 = sys("D4");
        let beta = d4.positive_roots()[idx].clone();
        let image = d4.reflect_simple(i, &beta);
        prop_assert!(d4.is_root(&image));
        let cv = d4.coroot(&beta);
        prop_assert_eq!(cv.height() > 0, beta.is_positive());
    }
}

/// Peak data is an invariant of the element, not of the chosen reduced word:
/// every reduced word of a minuscule element yields the same number of peaks
/// and the same set of peak colors.
#[test]
fn peak_set_commutation_invariance() {
    for (ty, nodes) in [("A4", vec![1, 2, 3, 4]), ("D5", vec![1, 4, 5])] {
        let s = sys(ty);
        for &node in &nodes {
            for w in cli::minuscule_elements(&s, node - 1).unwrap() {
                let mut reference: Option<(usize, BTreeSet<usize>)> = None;
                for word in w.all_reduced_words() {
                    let q = perrin::build_quiver(&s, &word).unwrap();
                    let colors: BTreeSet<usize> =
                        q.peaks.iter().map(|&p| q.color(p)).collect();
                    let data = (q.peaks.len(), colors);
                    match &reference {
                        None => reference = Some(data),
                        Some(r) => assert_eq!(
                            *r, data,
                            "{ty} node {node}, element {}",
                            w.reduced_word()
                        ),
                    }
                }
            }
        }
    }
}

/// The greedy lift reaches the highest root and satisfies the inner-product
/// property (asserted inside `minimal_lift`) on random positive roots.
#[test]
fn minimal_lift_random_roots() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let systems: Vec<Arc<RootSystem>> = ["A5", "D5", "E6", "E7"]
        .iter()
        .map(|t| sys(t))
        .collect();
    for _ in 0..200 {
        let s = &systems[rng.gen_range(0..systems.len())];
        let roots = s.positive_roots();
        let gamma = roots[rng.gen_range(0..roots.len())].clone();
        let v = perrin::minimal_lift(s, &gamma).unwrap();
        assert_eq!(v.act(&gamma), s.highest_root().unwrap());
        // Minimality: no strictly shorter prefix reaches the top, since each
        // greedy step raises the height by exactly one.
        let h_top = s.coroot(&s.highest_root().unwrap()).height();
        let h = s.coroot(&gamma).height();
        assert_eq!(v.length() as i64, h_top - h);
    }
}

#[test]
fn enumeration_cap_is_enforced() {
    let a5 = sys("A5");
    let all: ParabolicSet = (0..5).collect();
    assert!(matches!(
        weyl::enumerate_parabolic(&a5, &all, 10),
        Err(Error::EnumerationCap(10))
    ));
    assert!(weyl::enumerate_parabolic(&a5, &all, 720).is_ok());
}

/// Every reduced word of every minuscule element in the sweep types has a
/// monotone gamma sequence (asserted inside `gamma_sequence`).
#[test]
fn gamma_monotone_everywhere() {
    for (ty, node) in [("A4", 2usize), ("D4", 1usize)] {
        let s = sys(ty);
        for w in cli::minuscule_elements(&s, node - 1).unwrap() {
            for word in w.all_reduced_words() {
                perrin::gamma_sequence(&s, &word).unwrap();
            }
        }
    }
}
