//! T-stable curves, line-bundle and anticanonical degrees, line families,
//! covering criteria and smoothness tests on Schubert varieties in G/P.

use crate::rootsys::{Component, Root, RootSystem, Weight};
use crate::weyl::{ParabolicSet, WeylElement};
use crate::{enum_cap, Error, Result};
use serde::Serialize;
use std::sync::Arc;

/// A flag space G/P_I, named by the ambient root system and the Levi set I.
#[derive(Clone)]
pub struct FlagSpace {
    pub system: Arc<RootSystem>,
    pub levi: ParabolicSet,
}

impl FlagSpace {
    pub fn new(system: &Arc<RootSystem>, levi: ParabolicSet) -> Result<Self> {
        if let Some(&i) = levi.iter().find(|&&i| i >= system.rank()) {
            return Err(Error::BadIndex(i));
        }
        Ok(FlagSpace {
            system: system.clone(),
            levi,
        })
    }

    /// The maximal parabolic omitting only `node`.
    pub fn maximal(system: &Arc<RootSystem>, node: usize) -> Result<Self> {
        if node >= system.rank() {
            return Err(Error::BadIndex(node));
        }
        Self::new(system, (0..system.rank()).filter(|&i| i != node).collect())
    }

    /// The unique node outside the Levi, when the parabolic is maximal.
    pub fn node(&self) -> Result<usize> {
        let outside: Vec<usize> = (0..self.system.rank())
            .filter(|i| !self.levi.contains(i))
            .collect();
        match outside.as_slice() {
            [a] => Ok(*a),
            _ => Err(Error::NotMaximalParabolic),
        }
    }

    /// Whether P is maximal at a node carrying a minuscule fundamental weight.
    pub fn is_minuscule(&self) -> bool {
        self.node()
            .and_then(|a| self.system.is_minuscule_weight(a))
            .unwrap_or(false)
    }

    /// `varpi_I`: sum of the fundamental weights outside the Levi.
    pub fn varpi(&self) -> Weight {
        Weight(
            (0..self.system.rank())
                .map(|i| i64::from(!self.levi.contains(&i)))
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.system.num_positive_roots() - self.system.positive_roots_of(&self.levi).len()
    }
}

/// A Schubert variety X(w) in a fixed flag space; `w` is the minimal coset
/// representative and `dim X(w) = l(w)`.
#[derive(Clone)]
pub struct SchubertVariety {
    pub space: FlagSpace,
    pub w: WeylElement,
}

impl SchubertVariety {
    pub fn new(space: FlagSpace, w: WeylElement) -> Result<Self> {
        if !w.is_min_coset_rep(&space.levi) {
            return Err(Error::NotMinimalCosetRep);
        }
        Ok(SchubertVariety { space, w })
    }

    pub fn dimension(&self) -> usize {
        self.w.length()
    }
}

/// The T-stable curve `C_{w,beta}` through the fixed point `wx`, with
/// `beta in w(R^+ \ R^+_I)`.
#[derive(Clone)]
pub struct TStableCurve {
    pub w: WeylElement,
    pub beta: Root,
}

impl TStableCurve {
    /// `w^{-1}(beta)`, the direction of the curve at the base chamber.
    fn pulled_back(&self) -> Root {
        self.w.inverse().act(&self.beta)
    }
}

/// The T-stable curves in G/P through the fixed point `wx`: one per
/// `beta in w(R^+ \ R^+_I)`.
pub fn t_curves_through_flag(space: &FlagSpace, w: &WeylElement) -> Result<Vec<TStableCurve>> {
    if !w.is_min_coset_rep(&space.levi) {
        return Err(Error::NotMinimalCosetRep);
    }
    let levi_roots = space.system.positive_roots_of(&space.levi);
    Ok(space
        .system
        .positive_roots()
        .iter()
        .filter(|r| !levi_roots.contains(r))
        .map(|r| TStableCurve {
            w: w.clone(),
            beta: w.act(r),
        })
        .collect())
}

/// The T-stable curves in X(w) through `wx`: the `C_{w,beta}` with
/// `beta in w(R^+) \cap R^-`; there are exactly `l(w)` of them.
pub fn t_curves_through_schubert(x: &SchubertVariety) -> Vec<TStableCurve> {
    let mut curves: Vec<TStableCurve> = x
        .space
        .system
        .positive_roots()
        .iter()
        .map(|r| x.w.act(r))
        .filter(|img| img.is_negative())
        .map(|beta| TStableCurve {
            w: x.w.clone(),
            beta,
        })
        .collect();
    curves.sort_by_key(|c| c.beta.neg().0.clone());
    curves
}

/// Degree of the line bundle L(lambda) on the curve:
/// `<lambda, w^{-1}(beta^vee)>`. `lambda` must be supported outside the Levi.
pub fn curve_degree(space: &FlagSpace, curve: &TStableCurve, lambda: &Weight) -> Result<i64> {
    if lambda.support().iter().any(|i| space.levi.contains(i)) {
        return Err(Error::WeightMeetsLevi);
    }
    let dir = curve.pulled_back();
    Ok(lambda.pairing(&space.system.coroot(&dir)))
}

/// Anticanonical degree `-K_{G/P} . C`, by the height formula
/// `he(w^{-1}(beta^vee)) + he(w_{0,I} w^{-1}(beta^vee))`; cross-checked in
/// tests against `<2(rho - rho_I), w^{-1}(beta^vee)>`.
pub fn anticanonical_degree(space: &FlagSpace, curve: &TStableCurve) -> i64 {
    let sys = &space.system;
    let dir = curve.pulled_back();
    let w0i = WeylElement::longest_element(sys, &space.levi);
    sys.coroot(&dir).height() + sys.coroot(&w0i.act(&dir)).height()
}

/// The independent route to the same number, via the canonical class
/// `L(-2(rho - rho_I))`.
pub fn anticanonical_degree_canonical(space: &FlagSpace, curve: &TStableCurve) -> i64 {
    let sys = &space.system;
    let dir = curve.pulled_back();
    let cv = sys.coroot(&dir);
    let two_rho = Weight(vec![2; sys.rank()]);
    two_rho.pairing(&cv) - sys.two_rho_of(&space.levi).pairing(&cv)
}

/// Whether X(w) is covered by G-translates of the Schubert line at `alpha`:
/// the criterion is `w(alpha) in R^-`.
pub fn covered_by_schubert_line(x: &SchubertVariety, alpha: usize) -> Result<bool> {
    if x.space.levi.contains(&alpha) {
        return Err(Error::RootInLevi);
    }
    if alpha >= x.space.system.rank() {
        return Err(Error::BadIndex(alpha));
    }
    Ok(x.w
        .act(&Root::simple(x.space.system.rank(), alpha))
        .is_negative())
}

/// Report on the space of lines through a point of G/P^alpha.
#[derive(Debug, Clone, Serialize)]
pub struct LineSpaceReport {
    /// `#(R^+_I \ R^+_{I cap alpha-perp})`.
    pub dimension: i64,
    /// `he(w_{0,I}(alpha^vee)) - 1`; always equals `dimension`.
    pub height_dimension: i64,
    /// Levi set of the stabilizer of the Schubert line: `I cap alpha-perp`.
    pub stabilizer_levi: Vec<usize>,
    /// Dynkin types of the Levi `L_I`, in Bourbaki-index order.
    pub levi_type: Vec<Component>,
    /// Homogeneous-space label of the line space, for the minuscule rows of
    /// the classification table.
    pub label: Option<String>,
}

/// The classification-table label for the lines through a point of the
/// minuscule space `(family, rank)/alpha_node` (0-based node).
fn minuscule_line_label(sys: &RootSystem, node: usize) -> Option<String> {
    use crate::rootsys::Family;
    if !sys.is_irreducible() {
        return None;
    }
    let t = sys.components()[0];
    let n = t.rank;
    let m = node + 1;
    match t.family {
        Family::A => Some(format!("(P^{})* x P^{}", m - 1, n - m)),
        Family::D if m == 1 => Some(format!("Q^{}", 2 * n - 4)),
        Family::D if m == n - 1 || m == n => Some(format!("G(2,{n})")),
        Family::E if n == 6 && (m == 1 || m == 6) => Some("S^10".to_string()),
        Family::E if n == 7 && m == 7 => Some("X^16".to_string()),
        _ => None,
    }
}

/// Lines through a point of G/P^alpha for a long simple root `alpha`
/// (Levi orbit of the Schubert line). Errors when `alpha` is short.
pub fn lines_through_point_space(space: &FlagSpace) -> Result<LineSpaceReport> {
    let sys = &space.system;
    if !sys.is_irreducible() {
        return Err(Error::Reducible);
    }
    let alpha = space.node()?;
    if !sys.is_long_simple(alpha) {
        return Err(Error::ShortRoot(alpha));
    }
    let perp = sys.perp_of_simple(alpha);
    let stab: ParabolicSet = space.levi.intersection(&perp).copied().collect();
    let dimension =
        (sys.positive_roots_of(&space.levi).len() - sys.positive_roots_of(&stab).len()) as i64;
    let w0i = WeylElement::longest_element(sys, &space.levi);
    let img = w0i.act(&Root::simple(sys.rank(), alpha));
    let height_dimension = sys.coroot(&img).height() - 1;
    if dimension != height_dimension {
        return Err(Error::Internal(format!(
            "line-space dimension mismatch: {dimension} vs {height_dimension}"
        )));
    }
    Ok(LineSpaceReport {
        dimension,
        height_dimension,
        stabilizer_levi: stab.iter().copied().collect(),
        levi_type: sys.classify_subset(&space.levi)?,
        label: minuscule_line_label(sys, alpha),
    })
}

/// One maximal family of lines on X(w) through `wx`, named by its
/// representative `v in W_I` (minimal mod `W_{I cap alpha-perp}`).
#[derive(Clone)]
pub struct LineFamilyReport {
    pub v: WeylElement,
    pub dimension: usize,
}

/// The families of lines on a minuscule Schubert variety through `wx`:
/// Bruhat-maximal `v in W_I / W_{I cap alpha-perp}` with `wv(alpha) in R^-`.
pub fn line_families_on_schubert(x: &SchubertVariety) -> Result<Vec<LineFamilyReport>> {
    let sys = &x.space.system;
    if !x.space.is_minuscule() {
        return Err(Error::NotMinuscule);
    }
    let alpha = x.space.node()?;
    let alpha_root = Root::simple(sys.rank(), alpha);
    let perp = sys.perp_of_simple(alpha);
    let stab: ParabolicSet = x.space.levi.intersection(&perp).copied().collect();
    // Minimal representatives of W_I / W_{I cap alpha-perp}: enumerate W_I and
    // filter; sizes here are Levi-sized, well under the cap.
    let wi = crate::weyl::enumerate_parabolic(sys, &x.space.levi, enum_cap())?;
    let reps: Vec<WeylElement> = wi
        .into_iter()
        .filter(|v| v.is_min_coset_rep(&stab))
        .collect();
    let hit: Vec<WeylElement> = reps
        .into_iter()
        .filter(|v| x.w.act(&v.act(&alpha_root)).is_negative())
        .collect();
    if hit.is_empty() && !x.w.is_identity() {
        return Err(Error::Internal(
            "nonempty Schubert variety with no line family".into(),
        ));
    }
    let mut maximal: Vec<WeylElement> = hit
        .iter()
        .filter(|v| hit.iter().all(|u| *v == u || !v.bruhat_leq(u)))
        .cloned()
        .collect();
    maximal.sort_by_key(|v| (v.length(), v.reduced_word().0));
    Ok(maximal
        .into_iter()
        .map(|v| LineFamilyReport {
            dimension: v.length(),
            v,
        })
        .collect())
}

/// Smoothness of a minuscule Schubert variety: `Supp(w)` contained in `I_w`.
pub fn is_smooth_minuscule(x: &SchubertVariety) -> Result<bool> {
    if !x.w.is_minuscule()? {
        return Err(Error::NotMinuscule);
    }
    Ok(x.w.support().is_subset(&x.w.i_lower()))
}
