//! Bott-Samelson varieties presented by reduced words: the associated root
//! sequence, intersection numbers against the standard Picard basis,
//! anticanonical degrees of the coordinate curves, and minimality tests.
//!
//! All curve/bundle indices in this module are 1-based, matching the usual
//! labelling of the word letters `i_1 .. i_l`.

use crate::rootsys::{Coroot, Root};
use crate::schubert::FlagSpace;
use crate::weyl::{WeylElement, Word};
use crate::{Error, Result};
use serde::Serialize;

/// A Bott-Samelson variety, determined by a reduced word whose product is a
/// minimal coset representative for the parabolic of `space`.
#[derive(Clone)]
pub struct BSVariety {
    pub space: FlagSpace,
    pub word: Word,
    pub product: WeylElement,
}

impl BSVariety {
    pub fn new(space: FlagSpace, word: Word) -> Result<Self> {
        let (product, reduced) = WeylElement::from_word(&space.system, &word)?;
        if !reduced {
            return Err(Error::NotReduced);
        }
        if !product.is_min_coset_rep(&space.levi) {
            return Err(Error::NotMinimalCosetRep);
        }
        Ok(BSVariety {
            space,
            word,
            product,
        })
    }

    pub fn len(&self) -> usize {
        self.word.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.0.is_empty()
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.len() {
            return Err(Error::BadIndex(j));
        }
        Ok(())
    }

    /// `s_{i_b} s_{i_{b-1}} ... s_{i_a}(alpha_{i_j})`, applied innermost-first
    /// from position `a` up to `b` (1-based, inclusive; empty when a > b).
    fn chain_image(&self, j: usize, a: usize, b: usize) -> Root {
        let sys = &self.space.system;
        let mut r = Root::simple(sys.rank(), self.word.0[j - 1]);
        for t in a..=b {
            r = sys.reflect_simple(self.word.0[t - 1], &r);
        }
        r
    }
}

/// The roots `beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`; as a set this is
/// the inversion set of the inverse of the product.
pub fn beta_sequence(x: &BSVariety) -> Vec<Root> {
    (1..=x.len())
        .map(|j| {
            let sys = &x.space.system;
            let mut r = Root::simple(sys.rank(), x.word.0[j - 1]);
            for t in (1..j).rev() {
                r = sys.reflect_simple(x.word.0[t - 1], &r);
            }
            r
        })
        .collect()
}

/// Degree of the k-th basis line bundle on the j-th coordinate curve: the
/// coefficient of `alpha_{i_k}` in the coroot `s_{i_k} ... s_{i_{j+1}}
/// (alpha_{i_j})^vee`; zero when j > k, one when j = k.
pub fn pic_degree(x: &BSVariety, k: usize, j: usize) -> Result<i64> {
    x.check_index(j)?;
    x.check_index(k)?;
    if j > k {
        return Ok(0);
    }
    let r = x.chain_image(j, j + 1, k);
    Ok(x.space.system.coroot(&r).0[x.word.0[k - 1]])
}

/// Anticanonical degree of the j-th coordinate curve:
/// `he(s_{i_l} ... s_{i_{j+1}}(alpha_{i_j})^vee) + 1`. Always at least 2,
/// with equality exactly on the minimal curves.
pub fn anticanonical_degree_bs(x: &BSVariety, j: usize) -> Result<i64> {
    x.check_index(j)?;
    let r = x.chain_image(j, j + 1, x.len());
    Ok(x.space.system.coroot(&r).height() + 1)
}

/// Whether the j-th coordinate curve maps to a line: the letter `i_j` must
/// commute with every later letter (so always true for j = l). Cross-checked
/// against the vanishing of all later Picard degrees.
pub fn is_line_bs(x: &BSVariety, j: usize) -> Result<bool> {
    x.check_index(j)?;
    let cartan = x.space.system.cartan();
    let ij = x.word.0[j - 1];
    let by_commutation = x.word.0[j..]
        .iter()
        .all(|&it| it == ij || cartan[ij][it] == 0);
    let by_degrees = (j + 1..=x.len()).try_fold(true, |acc, k| {
        Ok::<bool, Error>(acc && pic_degree(x, k, j)? == 0)
    })?;
    if by_commutation != by_degrees {
        return Err(Error::Internal(format!(
            "line criteria disagree at position {j}"
        )));
    }
    Ok(by_commutation)
}

/// A coordinate curve whose image in G/P is a minimal rational curve, with
/// the simple root its suffix image lands on.
#[derive(Debug, Clone, Serialize)]
pub struct MinimalBSCurve {
    pub j: usize,
    /// 0-based index of the simple target root.
    pub target: usize,
}

fn as_simple(r: &Root) -> Option<usize> {
    let mut support = r.0.iter().enumerate().filter(|&(_, &c)| c != 0);
    match (support.next(), support.next()) {
        (Some((i, &1)), None) => Some(i),
        _ => None,
    }
}

/// The positions j whose suffix image `s_{i_l} ... s_{i_{j+1}}(alpha_{i_j})`
/// is a simple root, each with that root. Verifies the exchange identity
/// `w = s_{i_1} ... (drop j) ... s_{i_l} s_k` and that the targets are
/// exactly the simple roots sent negative by the product.
pub fn minimal_curves_bs(x: &BSVariety) -> Result<Vec<MinimalBSCurve>> {
    let sys = &x.space.system;
    let mut out = Vec::new();
    for j in 1..=x.len() {
        let img = x.chain_image(j, j + 1, x.len());
        let Some(k) = as_simple(&img) else { continue };
        let mut letters: Vec<usize> = x
            .word
            .0
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != j - 1)
            .map(|(_, &i)| i)
            .collect();
        letters.push(k);
        let (dropped, _) = WeylElement::from_word(sys, &Word(letters))?;
        if dropped != x.product {
            return Err(Error::Internal(format!(
                "exchange identity fails at position {j}"
            )));
        }
        out.push(MinimalBSCurve { j, target: k });
    }
    let targets: std::collections::BTreeSet<usize> =
        out.iter().map(|c| c.target).collect();
    let descents: std::collections::BTreeSet<usize> = (0..sys.rank())
        .filter(|&a| x.product.act(&Root::simple(sys.rank(), a)).is_negative())
        .collect();
    if targets != descents {
        return Err(Error::Internal(
            "minimal-curve targets differ from the negative simple images".into(),
        ));
    }
    Ok(out)
}

/// `rho - w(rho)` in fundamental-weight coordinates; the sum of the
/// beta-sequence converts to the same weight.
pub fn rho_defect(x: &BSVariety) -> Vec<i64> {
    let sys = &x.space.system;
    let winv = x.product.inverse();
    (0..sys.rank())
        .map(|i| {
            let cv: Coroot = sys.coroot(&winv.act(&Root::simple(sys.rank(), i)));
            1 - cv.height()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::weyl::ParabolicSet;
    use std::sync::Arc;

    fn bs(sys: &Arc<RootSystem>, levi: &[usize], word: &str) -> BSVariety {
        let space = FlagSpace::new(sys, levi.iter().copied().collect()).unwrap();
        let w = Word::parse(word, sys.rank()).unwrap();
        BSVariety::new(space, w).unwrap()
    }

    fn full(sys: &Arc<RootSystem>, word: &str) -> BSVariety {
        let space = FlagSpace::new(sys, ParabolicSet::new()).unwrap();
        BSVariety::new(space, Word::parse(word, sys.rank()).unwrap()).unwrap()
    }

    #[test]
    fn rejects_bad_words() {
        let a3 = RootSystem::parse("A3").unwrap();
        let space = FlagSpace::new(&a3, ParabolicSet::new()).unwrap();
        let w = Word::parse("1 1", 3).unwrap();
        assert!(matches!(
            BSVariety::new(space.clone(), w),
            Err(Error::NotReduced)
        ));
        // Product not a minimal representative for the parabolic.
        let space = FlagSpace::new(&a3, [0usize].into_iter().collect()).unwrap();
        let w = Word::parse("2 1", 3).unwrap();
        assert!(matches!(
            BSVariety::new(space, w),
            Err(Error::NotMinimalCosetRep)
        ));
    }

    #[test]
    fn beta_sequences() {
        let a3 = RootSystem::parse("A3").unwrap();
        let x = bs(&a3, &[0, 2], "1 3 2");
        assert_eq!(
            beta_sequence(&x),
            vec![
                Root(vec![1, 0, 0]),
                Root(vec![0, 0, 1]),
                Root(vec![1, 1, 1]),
            ]
        );

        let x = full(&a3, "2");
        assert_eq!(beta_sequence(&x), vec![Root(vec![0, 1, 0])]);

        let a4 = RootSystem::parse("A4").unwrap();
        let x = bs(&a4, &[0, 2, 3], "2 1 4 3 2");
        assert_eq!(
            beta_sequence(&x),
            vec![
                Root(vec![0, 1, 0, 0]),
                Root(vec![1, 1, 0, 0]),
                Root(vec![0, 0, 0, 1]),
                Root(vec![0, 1, 1, 1]),
                Root(vec![1, 1, 1, 1]),
            ]
        );

        // As a set, the sequence is the inversion set of the inverse.
        let inv = x.product.inverse();
        let mut from_inv = inv.inversion_set();
        let mut seq = beta_sequence(&x);
        from_inv.sort();
        seq.sort();
        assert_eq!(seq, from_inv);
    }

    #[test]
    fn beta_sum_is_rho_defect() {
        let a4 = RootSystem::parse("A4").unwrap();
        for word in ["2 1 4 3 2", "1 3 2", "4", "1 2 3 4"] {
            let x = full(&a4, word);
            let mut total = Root::zero(5);
            for b in beta_sequence(&x) {
                total = total.add(&b);
            }
            assert_eq!(a4.root_to_weight(&total).0, rho_defect(&x));
        }
    }

    #[test]
    fn pic_degrees() {
        let a3 = RootSystem::parse("A3").unwrap();
        let x = bs(&a3, &[0, 2], "1 3 2");
        for j in 1..=3 {
            assert_eq!(pic_degree(&x, j, j).unwrap(), 1);
            for k in 1..j {
                assert_eq!(pic_degree(&x, k, j).unwrap(), 0);
            }
        }
        // Coefficient of alpha_2 in (alpha_1+alpha_2+alpha_3)^vee.
        assert_eq!(pic_degree(&x, 3, 1).unwrap(), 1);
        assert!(pic_degree(&x, 0, 1).is_err());
        assert!(pic_degree(&x, 1, 4).is_err());
    }

    #[test]
    fn anticanonical_degrees() {
        let a3 = RootSystem::parse("A3").unwrap();
        let x = bs(&a3, &[0, 2], "1 3 2");
        assert_eq!(anticanonical_degree_bs(&x, 1).unwrap(), 3);
        assert_eq!(anticanonical_degree_bs(&x, 2).unwrap(), 3);
        assert_eq!(anticanonical_degree_bs(&x, 3).unwrap(), 2);
        assert!(anticanonical_degree_bs(&x, 4).is_err());
    }

    #[test]
    fn line_tests() {
        let a3 = RootSystem::parse("A3").unwrap();
        let x = bs(&a3, &[0, 2], "1 3 2");
        assert!(!is_line_bs(&x, 1).unwrap());
        assert!(!is_line_bs(&x, 2).unwrap());
        assert!(is_line_bs(&x, 3).unwrap());

        let a4 = RootSystem::parse("A4").unwrap();
        let x = full(&a4, "1 4 2");
        assert!(is_line_bs(&x, 2).unwrap());
        assert!(!is_line_bs(&x, 1).unwrap());
    }

    #[test]
    fn minimal_curves() {
        let a3 = RootSystem::parse("A3").unwrap();
        let x = bs(&a3, &[0, 2], "1 3 2");
        let min = minimal_curves_bs(&x).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].j, 3);
        assert_eq!(min[0].target, 1);

        let a4 = RootSystem::parse("A4").unwrap();
        let x = bs(&a4, &[0, 2, 3], "2 1 4 3 2");
        let min = minimal_curves_bs(&x).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].j, 5);
        assert_eq!(min[0].target, 1);

        // The last position is always minimal, targeting its own letter.
        let x = full(&a4, "1 2 3 4");
        let min = minimal_curves_bs(&x).unwrap();
        assert!(min.iter().any(|c| c.j == 4 && c.target == 3));
    }
}
