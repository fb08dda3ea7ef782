//! Weyl group elements, reduced words, Bruhat order, coset representatives,
//! and the parabolic invariants Supp(w), I^w, I_w and w-perp.
//!
//! An element is stored as the table of images of the simple roots; this is
//! faithful and composes without word growth. Reduced words are recovered on
//! demand by greedy descent extraction.

use crate::rootsys::{Coroot, Root, RootSystem};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

/// A word in the simple reflections; letters are 0-based internally and
/// rendered 1-based (Bourbaki) in text and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parse whitespace- or comma-separated 1-based letters, e.g. "2 1 4 3 2".
    pub fn parse(s: &str, rank: usize) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok.parse().map_err(|_| Error::ParseWord(s.to_string()))?;
            if v == 0 || v > rank {
                return Err(Error::BadIndex(v));
            }
            letters.push(v - 1);
        }
        Ok(Word(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One-based rendering, space-separated.
    pub fn display(&self) -> String {
        self.0
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// A subset of the simple roots (0-based indices).
pub type ParabolicSet = BTreeSet<usize>;

#[derive(Clone)]
pub struct WeylElement {
    system: Arc<RootSystem>,
    /// Image of each simple root.
    images: Vec<Root>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{}]", self.reduced_word())
    }
}

impl WeylElement {
    pub fn identity(system: &Arc<RootSystem>) -> Self {
        let images = (0..system.rank())
            .map(|i| Root::simple(system.rank(), i))
            .collect();
        WeylElement {
            system: system.clone(),
            images,
            length: 0,
        }
    }

    pub fn simple_reflection(system: &Arc<RootSystem>, i: usize) -> Result<Self> {
        if i >= system.rank() {
            return Err(Error::BadIndex(i));
        }
        Ok(Self::identity(system).mul_simple_right(i))
    }

    /// The reflection through an arbitrary root.
    pub fn reflection(system: &Arc<RootSystem>, beta: &Root) -> Result<Self> {
        if !system.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        let images: Vec<Root> = (0..system.rank())
            .map(|i| system.reflect_by(beta, &Root::simple(system.rank(), i)))
            .collect();
        Ok(Self::from_images(system.clone(), images))
    }

    fn from_images(system: Arc<RootSystem>, images: Vec<Root>) -> Self {
        let length = system
            .positive_roots()
            .iter()
            .filter(|r| {
                let img: Root = Self::act_images(&images, r);
                img.is_negative()
            })
            .count();
        WeylElement {
            system,
            images,
            length,
        }
    }

    fn act_images(images: &[Root], beta: &Root) -> Root {
        let rank = images[0].0.len();
        let mut out = vec![0i64; rank];
        for (c, img) in beta.0.iter().zip(images) {
            if *c != 0 {
                for (o, v) in out.iter_mut().zip(&img.0) {
                    *o += c * v;
                }
            }
        }
        Root(out)
    }

    /// Evaluate a word; the flag reports whether the word is reduced.
    pub fn from_word(system: &Arc<RootSystem>, word: &Word) -> Result<(Self, bool)> {
        let mut w = Self::identity(system);
        for &i in &word.0 {
            if i >= system.rank() {
                return Err(Error::BadIndex(i));
            }
            w = w.mul_simple_right(i);
        }
        let reduced = w.length == word.len();
        Ok((w, reduced))
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn act(&self, beta: &Root) -> Root {
        Self::act_images(&self.images, beta)
    }

    /// Action on a coroot: `w(beta^vee) = (w(beta))^vee`.
    pub fn act_coroot(&self, bv: &Coroot) -> Coroot {
        // Recover the root with that coroot: in any system the map beta ->
        // beta^vee is a bijection on roots, implemented by dualizing twice.
        let beta = self.system.coroot(&Root(bv.0.clone()));
        let img = self.act(&Root(beta.0));
        self.system.coroot(&img)
    }

    pub fn same_system(&self, other: &WeylElement) -> bool {
        Arc::ptr_eq(&self.system, &other.system) || *self.system == *other.system
    }

    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        if !self.same_system(other) {
            return Err(Error::MixedSystems);
        }
        let images = other.images.iter().map(|r| self.act(r)).collect();
        Ok(Self::from_images(self.system.clone(), images))
    }

    fn mul_simple_right(&self, i: usize) -> WeylElement {
        // (w s_i)(alpha_j) = w(s_i(alpha_j)).
        let images = (0..self.system.rank())
            .map(|j| {
                let si = self
                    .system
                    .reflect_simple(i, &Root::simple(self.system.rank(), j));
                self.act(&si)
            })
            .collect();
        Self::from_images(self.system.clone(), images)
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = Self::identity(&self.system);
        let mut w = self.clone();
        // Peel right descents of w; the reversed word evaluates the inverse.
        while !w.is_identity() {
            let i = w.right_descents().next().expect("nonidentity has a descent");
            w = w.mul_simple_right(i);
            inv = inv.mul_simple_right(i);
        }
        inv
    }

    /// Indices i with `w(alpha_i)` negative, ascending.
    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.system.rank()).filter(move |&i| self.images[i].is_negative())
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.images[i].is_negative()
    }

    /// Positive roots sent negative; size equals the length.
    pub fn inversion_set(&self) -> Vec<Root> {
        self.system
            .positive_roots()
            .iter()
            .filter(|r| self.act(r).is_negative())
            .cloned()
            .collect()
    }

    /// The lexicographically least reduced word, by greedy left-descent
    /// extraction.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length);
        let mut winv = self.inverse();
        // Left descents of w are right descents of w^{-1}.
        while !winv.is_identity() {
            let i = winv.right_descents().next().expect("descent exists");
            letters.push(i);
            winv = winv.mul_simple_right(i);
        }
        Word(letters)
    }

    /// Letters occurring in any (equivalently every) reduced word.
    pub fn support(&self) -> ParabolicSet {
        let mut supp = ParabolicSet::new();
        for r in self.inversion_set() {
            supp.extend(r.support());
        }
        supp
    }

    /// Bruhat comparison by the greedy leftmost-subword algorithm against a
    /// fixed reduced word of `w`.
    pub fn bruhat_leq(&self, w: &WeylElement) -> bool {
        if self.length > w.length {
            return false;
        }
        // Track v^{-1} only: s_a v < v iff v^{-1}(alpha_a) is negative, and
        // (s_a v)^{-1} = v^{-1} s_a.
        let mut vinv = self.inverse();
        for &a in &w.reduced_word().0 {
            if vinv.is_right_descent(a) {
                vinv = vinv.mul_simple_right(a);
            }
        }
        vinv.is_identity()
    }

    /// The minimal-length representative of `w W_I`.
    pub fn min_coset_rep(&self, levi: &ParabolicSet) -> WeylElement {
        let mut w = self.clone();
        loop {
            match levi.iter().copied().find(|&i| w.is_right_descent(i)) {
                Some(i) => w = w.mul_simple_right(i),
                None => return w,
            }
        }
    }

    /// Whether `w(alpha) in R^+` for all `alpha in I`, i.e. `w in W^I`.
    pub fn is_min_coset_rep(&self, levi: &ParabolicSet) -> bool {
        levi.iter().all(|&i| self.images[i].is_positive())
    }

    /// The longest element of the parabolic subgroup `W_I`.
    pub fn longest_element(system: &Arc<RootSystem>, levi: &ParabolicSet) -> WeylElement {
        let mut w = Self::identity(system);
        loop {
            match levi.iter().copied().find(|&i| !w.is_right_descent(i)) {
                Some(i) => w = w.mul_simple_right(i),
                None => return w,
            }
        }
    }

    /// `I^w = {alpha in S : w(alpha) in R^+}`.
    pub fn i_upper(&self) -> ParabolicSet {
        (0..self.system.rank())
            .filter(|&i| self.images[i].is_positive())
            .collect()
    }

    /// `I_w = {alpha : s_alpha w <= w}` for the (non-strict) Bruhat order on
    /// `W/W_{I^w}`.
    pub fn i_lower(&self) -> ParabolicSet {
        let iw = self.i_upper();
        (0..self.system.rank())
            .filter(|&a| {
                let sa = WeylElement::simple_reflection(&self.system, a).expect("valid");
                let saw = sa.mul(self).expect("same system").min_coset_rep(&iw);
                saw.bruhat_leq(&self.min_coset_rep(&iw))
            })
            .collect()
    }

    /// Simple roots whose reflection commutes with this element.
    pub fn perp(&self) -> ParabolicSet {
        (0..self.system.rank())
            .filter(|&a| {
                let sa = WeylElement::simple_reflection(&self.system, a).expect("valid");
                sa.mul(self).expect("same") == self.mul(&sa).expect("same")
            })
            .collect()
    }

    pub fn parabolic_invariants(&self) -> (ParabolicSet, ParabolicSet, ParabolicSet) {
        (self.i_upper(), self.i_lower(), self.perp())
    }

    /// True iff the element has a unique descent `alpha` with `varpi_alpha`
    /// minuscule. Requires an irreducible simply-laced system.
    pub fn is_minuscule(&self) -> Result<bool> {
        if !self.system.is_irreducible() {
            return Err(Error::Reducible);
        }
        if !self.system.is_simply_laced() {
            return Err(Error::NotSimplyLaced);
        }
        let descents: Vec<usize> = (0..self.system.rank())
            .filter(|&i| self.images[i].is_negative())
            .collect();
        match descents.as_slice() {
            [a] => self.system.is_minuscule_weight(*a),
            _ => Ok(false),
        }
    }

    /// The unique simple descent node of a minuscule element.
    pub fn minuscule_node(&self) -> Result<usize> {
        if !self.is_minuscule()? {
            return Err(Error::NotMinuscule);
        }
        Ok(self.right_descents().next().expect("has a descent"))
    }

    /// All reduced words, by recursion over right descents.
    pub fn all_reduced_words(&self) -> Vec<Word> {
        if self.is_identity() {
            return vec![Word::empty()];
        }
        let mut out = Vec::new();
        for i in self.right_descents().collect::<Vec<_>>() {
            let shorter = self.mul_simple_right(i);
            for mut word in shorter.all_reduced_words() {
                word.0.push(i);
                out.push(word);
            }
        }
        out
    }
}

/// Enumerate the parabolic subgroup `W_I` (all of `W` when `I = S`), erroring
/// beyond `cap` elements.
pub fn enumerate_parabolic(
    system: &Arc<RootSystem>,
    levi: &ParabolicSet,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = WeylElement::identity(system);
    seen.insert(id.clone());
    queue.push_back(id);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        out.push(w.clone());
        if out.len() + queue.len() > cap {
            return Err(Error::EnumerationCap(cap));
        }
        for &i in levi {
            let next = w.mul_simple_right(i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Enumerate the minimal coset representatives `W^I`, in BFS (length) order.
pub fn enumerate_min_reps(
    system: &Arc<RootSystem>,
    levi: &ParabolicSet,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = WeylElement::identity(system);
    seen.insert(id.clone());
    queue.push_back(id);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        out.push(w.clone());
        if out.len() + queue.len() > cap {
            return Err(Error::EnumerationCap(cap));
        }
        for i in 0..system.rank() {
            let sa = WeylElement::simple_reflection(system, i)?;
            let next = sa.mul(&w)?;
            if next.length() == w.length() + 1
                && next.is_min_coset_rep(levi)
                && seen.insert(next.clone())
            {
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}
