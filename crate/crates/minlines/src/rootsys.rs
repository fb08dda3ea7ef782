//! Cartan and root-system arithmetic for the crystallographic types, with
//! Bourbaki Chap. VI numbering of the simple roots (see
//! `docs/bourbaki-numbering.md` for the conventions shipped with this repo).
//!
//! Roots are dense integer vectors over the simple-root basis; coroots are
//! integer vectors over the simple coroots; weights are integer vectors over
//! the fundamental weights. Everything is immutable after construction, so a
//! [`RootSystem`] behind an `Arc` may be shared freely across threads.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Dynkin type, e.g. `A4` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Parse a single family-letter-plus-rank token, case-insensitively.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        DynkinType::new(fam, rank)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root, stored as integer coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.neg().is_positive()
    }

    /// Simple roots with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Coefficientwise comparison (the dominance order on the root lattice).
    pub fn dominance_leq(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A coroot, stored over the simple coroots. For simply-laced types the
/// coordinates coincide with those of the corresponding root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coroot(pub Vec<i64>);

impl Coroot {
    /// Sum of coordinates over simple coroots; equals the pairing with rho.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// A weight, stored over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn pairing(&self, cv: &Coroot) -> i64 {
        self.0.iter().zip(&cv.0).map(|(a, b)| a * b).sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A connected component of an induced subdiagram, classified and numbered.
///
/// `nodes[k]` is the ambient Bourbaki index of the component's own node k+1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub dtype: DynkinType,
    pub nodes: Vec<usize>,
}

/// A root system, possibly reducible (block-diagonal Cartan matrix).
#[derive(Debug)]
pub struct RootSystem {
    components: Vec<DynkinType>,
    /// Range of simple-root indices per component.
    blocks: Vec<std::ops::Range<usize>>,
    rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    /// Squared length `(alpha_i, alpha_i)`, normalized so long roots in each
    /// component have value 2 (scaled to keep integers: B uses (2,..,2,1)).
    dlen: Vec<i64>,
    positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

fn cartan_matrix(t: DynkinType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = t.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    let dlen;
    match t.family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            dlen = vec![2; n];
        }
        Family::B => {
            // alpha_n is the short root.
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            dlen = d;
        }
        Family::C => {
            // alpha_n is the long root.
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            dlen = d;
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
            dlen = vec![2; n];
        }
        Family::E => {
            // Bourbaki: branch node alpha_4 carries alpha_2; path 1-3-4-5-...
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
            dlen = vec![2; n];
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            link(0, 1);
            link(2, 3);
            c[1][2] = -1;
            c[2][1] = -2;
            dlen = vec![2, 2, 1, 1];
        }
        Family::G => {
            // alpha_1 short, alpha_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
            dlen = vec![2, 6];
        }
    }
    (c, dlen)
}

impl RootSystem {
    /// Build the root system of a product of irreducible types. Positive
    /// roots are generated from the simple roots by closure under simple
    /// reflections and listed in (height, lex) order.
    pub fn build(components: &[DynkinType]) -> Result<Arc<RootSystem>> {
        if components.is_empty() {
            return Err(Error::ParseType(String::new()));
        }
        let rank: usize = components.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut dlen = vec![0i64; rank];
        let mut blocks = Vec::new();
        let mut off = 0;
        for &t in components {
            let (c, d) = cartan_matrix(t);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[off + i][off + j] = c[i][j];
                }
                dlen[off + i] = d[i];
            }
            blocks.push(off..off + t.rank);
            off += t.rank;
        }

        let mut sys = RootSystem {
            components: components.to_vec(),
            blocks,
            rank,
            cartan,
            dlen,
            positive_roots: Vec::new(),
            index: HashMap::new(),
        };

        // Orbit closure: every root is W-conjugate to a simple root.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
        for r in &queue {
            seen.insert(r.0.clone());
        }
        while let Some(beta) = queue.pop() {
            for i in 0..rank {
                let img = sys.reflect_simple(i, &beta);
                if seen.insert(img.0.clone()) {
                    queue.push(img);
                }
            }
        }
        let mut positives: Vec<Root> = seen
            .into_iter()
            .map(Root)
            .filter(|r| r.is_positive())
            .collect();
        positives.sort_by_key(|r| (r.0.iter().sum::<i64>(), r.0.clone()));

        let expected: usize = components.iter().map(|t| t.num_positive_roots()).sum();
        if positives.len() != expected {
            return Err(Error::Internal(format!(
                "generated {} positive roots, expected {}",
                positives.len(),
                expected
            )));
        }
        for (k, r) in positives.iter().enumerate() {
            sys.index.insert(r.0.clone(), k);
        }
        sys.positive_roots = positives;
        Ok(Arc::new(sys))
    }

    pub fn simple_type(t: DynkinType) -> Result<Arc<RootSystem>> {
        Self::build(&[t])
    }

    /// Parse `A4` or a product such as `A2xA1` (case-insensitive).
    pub fn parse(s: &str) -> Result<Arc<RootSystem>> {
        let parts: Vec<DynkinType> = s
            .split(['x', 'X'])
            .map(DynkinType::parse)
            .collect::<Result<_>>()?;
        Self::build(&parts)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[DynkinType] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_simply_laced(&self) -> bool {
        self.components.iter().all(|t| t.is_simply_laced())
    }

    pub fn type_string(&self) -> String {
        self.components
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        if i < self.rank {
            Ok(Root::simple(self.rank, i))
        } else {
            Err(Error::BadIndex(i))
        }
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.0) || self.index.contains_key(&r.neg().0)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `<beta, alpha_i^vee>`.
    pub fn pair_with_simple_coroot(&self, beta: &Root, i: usize) -> i64 {
        self.cartan[i]
            .iter()
            .zip(&beta.0)
            .map(|(c, b)| c * b)
            .sum()
    }

    /// The bilinear pairing `<beta, cv>` of a root with a coroot.
    pub fn pairing(&self, beta: &Root, cv: &Coroot) -> i64 {
        (0..self.rank)
            .map(|j| cv.0[j] * self.pair_with_simple_coroot(beta, j))
            .sum()
    }

    /// Simple reflection `s_i` acting on the root lattice.
    pub fn reflect_simple(&self, i: usize, beta: &Root) -> Root {
        let p = self.pair_with_simple_coroot(beta, i);
        let mut v = beta.0.clone();
        v[i] -= p;
        Root(v)
    }

    /// Reflection through an arbitrary root.
    pub fn reflect_by(&self, beta: &Root, gamma: &Root) -> Root {
        let bv = self.coroot(beta);
        let p = self.pairing(gamma, &bv);
        Root(
            gamma
                .0
                .iter()
                .zip(&beta.0)
                .map(|(g, b)| g - p * b)
                .collect(),
        )
    }

    /// `(beta, beta)` in the scale fixed by `dlen`.
    fn norm2(&self, beta: &Root) -> i64 {
        let s: i64 = (0..self.rank)
            .map(|i| beta.0[i] * self.dlen[i] * self.pair_with_simple_coroot(beta, i))
            .sum();
        debug_assert!(s % 2 == 0);
        s / 2
    }

    /// The coroot `beta^vee = 2 beta / (beta, beta)` over simple coroots.
    pub fn coroot(&self, beta: &Root) -> Coroot {
        let nb = self.norm2(beta);
        Coroot(
            (0..self.rank)
                .map(|i| {
                    let num = beta.0[i] * self.dlen[i];
                    debug_assert!(num % nb == 0);
                    num / nb
                })
                .collect(),
        )
    }

    pub fn height_of_root(&self, beta: &Root) -> i64 {
        self.coroot(beta).height()
    }

    /// The dominance-maximal element of `R^+`; irreducible systems only.
    pub fn highest_root(&self) -> Result<Root> {
        if !self.is_irreducible() {
            return Err(Error::Reducible);
        }
        let mut best = self.positive_roots.last().unwrap().clone();
        for r in &self.positive_roots {
            if best.dominance_leq(r) {
                best = r.clone();
            }
        }
        // Uniqueness of the maximum.
        debug_assert!(self.positive_roots.iter().all(|r| r.dominance_leq(&best)));
        Ok(best)
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        if i < self.rank {
            let mut v = vec![0; self.rank];
            v[i] = 1;
            Ok(Weight(v))
        } else {
            Err(Error::BadIndex(i))
        }
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// `2 rho_I`: the sum of the positive roots of the Levi on `I`, in weight
    /// coordinates. (`rho_I` itself is only half-integral outside `I`.)
    pub fn two_rho_of(&self, subset: &BTreeSet<usize>) -> Weight {
        let mut total = vec![0i64; self.rank];
        for beta in self.positive_roots_of(subset) {
            for (t, c) in total.iter_mut().zip(&self.root_to_weight(&beta).0) {
                *t += c;
            }
        }
        Weight(total)
    }

    /// Weight coordinates of a root: `<beta, alpha_j^vee>` per j.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| self.pair_with_simple_coroot(beta, j))
                .collect(),
        )
    }

    /// Whether the fundamental weight at node `i` is minuscule, i.e. its
    /// pairing with every positive coroot is at most 1.
    pub fn is_minuscule_weight(&self, i: usize) -> Result<bool> {
        if i >= self.rank {
            return Err(Error::BadIndex(i));
        }
        Ok(self
            .positive_roots
            .iter()
            .all(|beta| self.coroot(beta).0[i] <= 1))
    }

    /// Positive roots of the parabolic subsystem on `subset`.
    pub fn positive_roots_of(&self, subset: &BTreeSet<usize>) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.support().is_subset(subset))
            .cloned()
            .collect()
    }

    /// Simple roots orthogonal to `alpha_i`.
    pub fn perp_of_simple(&self, i: usize) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|&j| j != i && self.cartan[i][j] == 0)
            .collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Connected components of the subdiagram induced on `subset`.
    pub fn diagram_components(&self, subset: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut remaining: BTreeSet<usize> = subset.clone();
        let mut comps = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                let nbrs: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| self.adjacent(v, u))
                    .collect();
                for u in nbrs {
                    remaining.remove(&u);
                    comp.insert(u);
                    stack.push(u);
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Classify the induced subdiagram on `subset` into irreducible types,
    /// with each component's nodes listed in its own Bourbaki order.
    /// Components are listed in order of their least ambient index.
    pub fn classify_subset(&self, subset: &BTreeSet<usize>) -> Result<Vec<Component>> {
        let mut out = Vec::new();
        for comp in self.diagram_components(subset) {
            out.push(self.classify_component(&comp)?);
        }
        Ok(out)
    }

    fn classify_component(&self, comp: &BTreeSet<usize>) -> Result<Component> {
        let nodes: Vec<usize> = comp.iter().copied().collect();
        let n = nodes.len();
        let deg = |v: usize| -> usize { nodes.iter().filter(|&&u| self.adjacent(v, u)).count() };
        let multi_edge = nodes.iter().any(|&i| {
            nodes
                .iter()
                .any(|&j| i != j && self.cartan[i][j] * self.cartan[j][i] > 1)
        });
        if multi_edge {
            return self.classify_non_simply_laced(&nodes);
        }
        let branch: Vec<usize> = nodes.iter().copied().filter(|&v| deg(v) >= 3).collect();
        if branch.len() > 1 || branch.first().map(|&v| deg(v)) > Some(3) {
            return Err(Error::Internal("unrecognized diagram shape".into()));
        }
        if branch.is_empty() {
            // A path: type A, numbered from the endpoint with smaller index.
            if n == 1 {
                return Ok(Component {
                    dtype: DynkinType::new(Family::A, 1)?,
                    nodes,
                });
            }
            let ends: Vec<usize> = nodes.iter().copied().filter(|&v| deg(v) == 1).collect();
            let start = *ends.iter().min().unwrap();
            let path = self.walk_path(&nodes, start);
            return Ok(Component {
                dtype: DynkinType::new(Family::A, n)?,
                nodes: path,
            });
        }
        let b = branch[0];
        // Legs from the branch node, as node lists excluding b.
        let mut legs: Vec<Vec<usize>> = nodes
            .iter()
            .copied()
            .filter(|&v| self.adjacent(v, b))
            .map(|first| {
                let mut leg = vec![first];
                let mut prev = b;
                let mut cur = first;
                loop {
                    let next: Vec<usize> = nodes
                        .iter()
                        .copied()
                        .filter(|&u| u != prev && self.adjacent(cur, u))
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [u] => {
                            leg.push(*u);
                            prev = cur;
                            cur = *u;
                        }
                        _ => unreachable!("degree checked above"),
                    }
                }
                leg
            })
            .collect();
        legs.sort_by_key(|l| (l.len(), l[0]));
        let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
        match lens.as_slice() {
            [1, 1, _] => {
                // Type D: long leg reversed is alpha_1..alpha_{n-3}, then the
                // branch node, then the two short legs (smaller index first).
                let mut order: Vec<usize> = legs[2].iter().rev().copied().collect();
                order.push(b);
                let (u, v) = (legs[0][0], legs[1][0]);
                order.push(u.min(v));
                order.push(u.max(v));
                Ok(Component {
                    dtype: DynkinType::new(Family::D, n)?,
                    nodes: order,
                })
            }
            [1, 2, k] if (2..=4).contains(k) => {
                // Type E: alpha_2 is the length-1 leg; the length-2 leg is
                // (alpha_3 adjacent to branch, alpha_1); the long leg follows.
                let mut order = vec![legs[1][1], legs[0][0], legs[1][0], b];
                order.extend(&legs[2]);
                Ok(Component {
                    dtype: DynkinType::new(Family::E, n)?,
                    nodes: order,
                })
            }
            _ => Err(Error::Internal("unrecognized diagram shape".into())),
        }
    }

    fn classify_non_simply_laced(&self, nodes: &[usize]) -> Result<Component> {
        let n = nodes.len();
        // All such subdiagrams are paths containing one multiple edge.
        let deg = |v: usize| -> usize { nodes.iter().filter(|&&u| self.adjacent(v, u)).count() };
        if nodes.iter().any(|&v| deg(v) > 2) {
            return Err(Error::Internal("unrecognized diagram shape".into()));
        }
        let triple = nodes.iter().any(|&i| {
            nodes
                .iter()
                .any(|&j| i != j && self.cartan[i][j] * self.cartan[j][i] == 3)
        });
        if triple {
            let mut order = nodes.to_vec();
            // alpha_1 short.
            order.sort_by_key(|&v| std::cmp::Reverse(self.dlen[v]));
            return Ok(Component {
                dtype: DynkinType::new(Family::G, 2)?,
                nodes: order,
            });
        }
        let ends: Vec<usize> = nodes.iter().copied().filter(|&v| deg(v) <= 1).collect();
        let longest = self.dlen[*nodes
            .iter()
            .max_by_key(|&&v| self.dlen[v])
            .unwrap()];
        let short_count = nodes.iter().filter(|&&v| self.dlen[v] < longest).count();
        if short_count == 1 {
            // B_n: short root last.
            let short = *nodes.iter().find(|&&v| self.dlen[v] < longest).unwrap();
            let start = ends.iter().copied().find(|&v| v != short).unwrap();
            Ok(Component {
                dtype: DynkinType::new(Family::B, n)?,
                nodes: self.walk_path(nodes, start),
            })
        } else if short_count == n - 1 {
            // C_n: long root last.
            let long = *nodes.iter().find(|&&v| self.dlen[v] == longest).unwrap();
            let start = ends.iter().copied().find(|&v| v != long).unwrap();
            Ok(Component {
                dtype: DynkinType::new(Family::C, n)?,
                nodes: self.walk_path(nodes, start),
            })
        } else if n == 4 && short_count == 2 {
            // F4: long pair first.
            let start = ends
                .iter()
                .copied()
                .find(|&v| self.dlen[v] == longest)
                .unwrap();
            Ok(Component {
                dtype: DynkinType::new(Family::F, 4)?,
                nodes: self.walk_path(nodes, start),
            })
        } else {
            Err(Error::Internal("unrecognized diagram shape".into()))
        }
    }

    fn walk_path(&self, nodes: &[usize], start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < nodes.len() {
            let next = nodes
                .iter()
                .copied()
                .find(|&u| u != prev && u != cur && self.adjacent(cur, u))
                .expect("path is connected");
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    }

    /// Whether `alpha_i` is long within its component.
    pub fn is_long_simple(&self, i: usize) -> bool {
        let block = self
            .blocks
            .iter()
            .find(|b| b.contains(&i))
            .expect("index in range");
        let max = block.clone().map(|j| self.dlen[j]).max().unwrap();
        self.dlen[i] == max
    }

    /// Build the root system on the subdiagram induced by `subset`, together
    /// with the map from new simple-root indices to ambient ones.
    pub fn subsystem(&self, subset: &BTreeSet<usize>) -> Result<(Arc<RootSystem>, Vec<usize>)> {
        let comps = self.classify_subset(subset)?;
        let types: Vec<DynkinType> = comps.iter().map(|c| c.dtype).collect();
        let map: Vec<usize> = comps.iter().flat_map(|c| c.nodes.iter().copied()).collect();
        let sub = RootSystem::build(&types)?;
        Ok((sub, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> Arc<RootSystem> {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(DynkinType::parse("A0").is_err());
        assert!(DynkinType::parse("B1").is_err());
        assert!(DynkinType::parse("D2").is_err());
        assert!(DynkinType::parse("E9").is_err());
        assert!(DynkinType::parse("F3").is_err());
        assert!(DynkinType::parse("G3").is_err());
        assert!(DynkinType::parse("e7").is_ok());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(sys("A1").num_positive_roots(), 1);
        assert_eq!(sys("A3").num_positive_roots(), 6);
        assert_eq!(sys("B3").num_positive_roots(), 9);
        assert_eq!(sys("C4").num_positive_roots(), 16);
        assert_eq!(sys("D4").num_positive_roots(), 12);
        assert_eq!(sys("D5").num_positive_roots(), 20);
        assert_eq!(sys("E6").num_positive_roots(), 36);
        assert_eq!(sys("E7").num_positive_roots(), 63);
        assert_eq!(sys("F4").num_positive_roots(), 24);
        assert_eq!(sys("G2").num_positive_roots(), 6);
        assert_eq!(sys("A2xA1").num_positive_roots(), 4);
    }

    #[test]
    fn a3_contains_full_sum() {
        let r = sys("A3");
        assert!(r.is_root(&Root(vec![1, 1, 1])));
        assert!(!r.is_root(&Root(vec![1, 0, 1])));
    }

    #[test]
    fn pairing_examples_a3() {
        let r = sys("A3");
        let a1 = r.simple_root(0).unwrap();
        let a2 = r.simple_root(1).unwrap();
        let a2v = r.coroot(&a2);
        assert_eq!(r.pairing(&a2, &a2v), 2);
        assert_eq!(r.pairing(&a1, &a2v), -1);
        assert_eq!(r.pairing(&Root(vec![1, 1, 1]), &a2v), 0);
    }

    #[test]
    fn heights() {
        let a3 = sys("A3");
        assert_eq!(a3.coroot(&a3.simple_root(1).unwrap()).height(), 1);
        assert_eq!(a3.coroot(&Root(vec![1, 1, 1])).height(), 3);
        let e7 = sys("E7");
        let theta = e7.highest_root().unwrap();
        assert_eq!(e7.coroot(&theta).height(), 17);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(sys("A1").highest_root().unwrap(), Root(vec![1]));
        assert_eq!(sys("A3").highest_root().unwrap(), Root(vec![1, 1, 1]));
        assert_eq!(sys("D4").highest_root().unwrap(), Root(vec![1, 2, 1, 1]));
        assert!(sys("A1xA1").highest_root().is_err());
    }

    #[test]
    fn minuscule_weights() {
        let a4 = sys("A4");
        assert!(a4.is_minuscule_weight(1).unwrap());
        let e7 = sys("E7");
        assert!(e7.is_minuscule_weight(6).unwrap());
        assert!(!e7.is_minuscule_weight(0).unwrap());
        let d5 = sys("D5");
        assert!(d5.is_minuscule_weight(0).unwrap());
        assert!(!d5.is_minuscule_weight(2).unwrap());
        assert!(d5.is_minuscule_weight(4).unwrap());
    }

    #[test]
    fn simple_reflection_permutes_roots() {
        for name in ["A3", "B3", "D4", "F4", "G2"] {
            let r = sys(name);
            for beta in r.positive_roots() {
                for i in 0..r.rank() {
                    let img = r.reflect_simple(i, beta);
                    if beta == &r.simple_root(i).unwrap() {
                        assert_eq!(img, beta.neg());
                    } else {
                        assert!(r.is_root(&img), "{name}: s_{i}({beta}) not a root");
                    }
                }
            }
        }
    }

    #[test]
    fn two_rho_is_sum_of_positive_roots() {
        for name in ["A4", "B3", "C3", "D5", "E6", "F4", "G2"] {
            let r = sys(name);
            let mut total = vec![0i64; r.rank()];
            for beta in r.positive_roots() {
                let wc = r.root_to_weight(beta);
                for (t, c) in total.iter_mut().zip(&wc.0) {
                    *t += c;
                }
            }
            assert_eq!(total, vec![2; r.rank()], "type {name}");
        }
    }

    #[test]
    fn reflection_height_step_simply_laced() {
        let r = sys("D4");
        for beta in r.positive_roots() {
            let bv = r.coroot(beta);
            for i in 0..r.rank() {
                let img = r.reflect_simple(i, beta);
                let ai = r.simple_root(i).unwrap();
                assert_eq!(
                    r.coroot(&img).height(),
                    bv.height() - r.pairing(&ai, &bv)
                );
            }
        }
    }

    #[test]
    fn coroot_matches_root_when_simply_laced() {
        let r = sys("E6");
        for beta in r.positive_roots() {
            assert_eq!(r.coroot(beta).0, beta.0);
        }
    }

    #[test]
    fn classify_levis() {
        let a4 = sys("A4");
        let comps = a4
            .classify_subset(&[0usize, 2, 3].into_iter().collect())
            .unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].dtype, DynkinType::parse("A1").unwrap());
        assert_eq!(comps[1].dtype, DynkinType::parse("A2").unwrap());

        let e7 = sys("E7");
        let all_but_last: BTreeSet<usize> = (0..6).collect();
        let comps = e7.classify_subset(&all_but_last).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].dtype, DynkinType::parse("E6").unwrap());

        let d5 = sys("D5");
        let comps = d5.classify_subset(&(1..5).collect()).unwrap();
        assert_eq!(comps[0].dtype, DynkinType::parse("D4").unwrap());
    }

    #[test]
    fn subsystem_roundtrip() {
        let a4 = sys("A4");
        let (sub, map) = a4.subsystem(&[1usize, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(sub.type_string(), "A3");
        assert_eq!(map, vec![1, 2, 3]);
    }
}
