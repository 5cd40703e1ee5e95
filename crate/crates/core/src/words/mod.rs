//! Elements of a Coxeter group and the word problem.
//!
//! Every [`Element`] is stored as its ShortLex-least reduced word. The word
//! problem rests on the classical braid-move criterion: two reduced words represent the same
//! element iff they are connected by braid moves, and a word is reduced iff
//! no braid-equivalent word contains a repeated letter. [`CoxeterGroup`]
//! memoizes, for every element it has seen, the complete braid class of its
//! reduced words. Descents, products and normal forms are read off that
//! class. The cache never changes results; inserts are idempotent.

mod ball;
mod braid;
mod coset;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::subset::GeneratorSubset;

pub use coset::DoubleCosetDecomposition;

/// A group element in ShortLex normal form.
///
/// Ordering is ShortLex: by length, then lexicographically by generator index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element(Box<[u8]>);

impl Element {
    pub fn identity() -> Self {
        Element(Box::new([]))
    }

    /// Generator indices of the normal-form word.
    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// The length `l(w)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Generators appearing in the reduced word. This is the smallest `X`
    /// with `w` in `W_X`.
    pub fn support(&self) -> GeneratorSubset {
        self.letters().collect()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Resource limits for enumerations and searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements produced by a ball or subgroup enumeration.
    pub ball_cap: usize,
    /// Maximum number of states visited by groupoid and witness searches.
    pub search_cap: usize,
    /// Maximum group order accepted by whole-group brute-force oracles.
    pub group_order_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { ball_cap: 1_000_000, search_cap: 100_000, group_order_cap: 10_000 }
    }
}

/// Braid class of one element. `class[0]` is the normal form.
struct Node {
    class: Box<[Box<[u8]>]>,
    left: GeneratorSubset,
    right: GeneratorSubset,
    right_mul: Box<[OnceLock<Element>]>,
    left_mul: Box<[OnceLock<Element>]>,
}

/// A Coxeter group given by its graph, together with the word-problem cache.
pub struct CoxeterGroup {
    graph: CoxeterGraph,
    limits: Limits,
    nodes: RwLock<HashMap<Box<[u8]>, Arc<Node>>>,
    pub(crate) conjugations: crate::parabolic::ConjugationCache,
}

impl CoxeterGroup {
    pub fn new(graph: CoxeterGraph) -> Self {
        Self::with_limits(graph, Limits::default())
    }

    pub fn with_limits(graph: CoxeterGraph, limits: Limits) -> Self {
        CoxeterGroup {
            graph,
            limits,
            nodes: RwLock::new(HashMap::new()),
            conjugations: Default::default(),
        }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn generator(&self, s: usize) -> Element {
        Element(Box::new([s as u8]))
    }

    fn node(&self, w: &Element) -> Arc<Node> {
        if let Some(node) = self.nodes.read().unwrap().get(&w.0) {
            return Arc::clone(node);
        }
        let class = braid::closure(&self.graph, vec![w.0.to_vec()]);
        self.insert(class).1
    }

    fn insert(&self, mut class: Vec<Vec<u8>>) -> (Element, Arc<Node>) {
        class.sort_unstable();
        class.dedup();
        let key: Box<[u8]> = class[0].clone().into_boxed_slice();
        if let Some(node) = self.nodes.read().unwrap().get(&key) {
            return (Element(key), Arc::clone(node));
        }
        let n = self.rank();
        let left = class.iter().filter_map(|u| u.first()).map(|&l| l as usize).collect();
        let right = class.iter().filter_map(|u| u.last()).map(|&l| l as usize).collect();
        let node = Arc::new(Node {
            class: class.into_iter().map(Vec::into_boxed_slice).collect(),
            left,
            right,
            right_mul: (0..n).map(|_| OnceLock::new()).collect(),
            left_mul: (0..n).map(|_| OnceLock::new()).collect(),
        });
        let mut nodes = self.nodes.write().unwrap();
        let stored = nodes.entry(key.clone()).or_insert(node);
        (Element(key), Arc::clone(stored))
    }

    /// Number of elements whose braid class is currently cached.
    pub fn cached_elements(&self) -> usize {
        self.nodes.read().unwrap().len()
    }

    /// All reduced words of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &Element) -> Vec<Vec<usize>> {
        self.node(w)
            .class
            .iter()
            .map(|u| u.iter().map(|&l| l as usize).collect())
            .collect()
    }

    /// `w * s`.
    pub fn mul_gen(&self, w: &Element, s: usize) -> Element {
        let node = self.node(w);
        if let Some(done) = node.right_mul[s].get() {
            return done.clone();
        }
        let class = if node.right.contains(s) {
            node.class
                .iter()
                .filter(|u| u.last() == Some(&(s as u8)))
                .map(|u| u[..u.len() - 1].to_vec())
                .collect()
        } else {
            let seeds = node
                .class
                .iter()
                .map(|u| {
                    let mut v = u.to_vec();
                    v.push(s as u8);
                    v
                })
                .collect();
            braid::closure(&self.graph, seeds)
        };
        let (result, _) = self.insert(class);
        node.right_mul[s].get_or_init(|| result).clone()
    }

    /// `s * w`.
    pub fn gen_mul(&self, s: usize, w: &Element) -> Element {
        let node = self.node(w);
        if let Some(done) = node.left_mul[s].get() {
            return done.clone();
        }
        let class = if node.left.contains(s) {
            node.class
                .iter()
                .filter(|u| u.first() == Some(&(s as u8)))
                .map(|u| u[1..].to_vec())
                .collect()
        } else {
            let seeds = node
                .class
                .iter()
                .map(|u| {
                    let mut v = Vec::with_capacity(u.len() + 1);
                    v.push(s as u8);
                    v.extend_from_slice(u);
                    v
                })
                .collect();
            braid::closure(&self.graph, seeds)
        };
        let (result, _) = self.insert(class);
        node.left_mul[s].get_or_init(|| result).clone()
    }

    /// Normal form of the product of `letters`.
    pub fn normal_form(&self, letters: &[usize]) -> Result<Element> {
        for &s in letters {
            self.graph.check_index(s)?;
        }
        Ok(letters
            .iter()
            .fold(Element::identity(), |w, &s| self.mul_gen(&w, s)))
    }

    pub fn product(&self, a: &Element, b: &Element) -> Element {
        b.letters().fold(a.clone(), |w, s| self.mul_gen(&w, s))
    }

    /// Product of several elements, left to right.
    pub fn product_all<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        factors
            .into_iter()
            .fold(Element::identity(), |acc, f| self.product(&acc, f))
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let node = self.node(w);
        let class = node
            .class
            .iter()
            .map(|u| u.iter().rev().copied().collect())
            .collect();
        self.insert(class).0
    }

    /// `w * v * w^-1`.
    pub fn conjugate(&self, w: &Element, v: &Element) -> Element {
        let wv = self.product(w, v);
        self.product(&wv, &self.inverse(w))
    }

    /// If `w s w^-1` is a generator, returns it.
    pub fn conjugate_generator(&self, w: &Element, s: usize) -> Option<usize> {
        let c = self.conjugate(w, &self.generator(s));
        (c.length() == 1).then(|| c.word()[0] as usize)
    }

    /// Left descents `{s : l(sw) < l(w)}` or right descents `{s : l(ws) < l(w)}`.
    pub fn descents(&self, w: &Element, side: Side) -> GeneratorSubset {
        let node = self.node(w);
        match side {
            Side::Left => node.left,
            Side::Right => node.right,
        }
    }

    pub fn is_in_parabolic(&self, w: &Element, x: GeneratorSubset) -> bool {
        w.support().is_subset(x)
    }

    /// Longest element of the finite parabolic subgroup `W_x`, by greedy
    /// ascent on the right.
    pub fn longest_element(&self, x: GeneratorSubset) -> Result<Element> {
        if !x.is_subset(self.graph.generators()) {
            return Err(Error::InvalidGeneratorIndex {
                index: (x - self.graph.generators()).first().unwrap_or(0),
                rank: self.rank(),
            });
        }
        if !self.graph.is_finite_type(x) {
            return Err(Error::InfiniteType(self.graph.format_subset(x)));
        }
        let mut w = Element::identity();
        while let Some(s) = (x - self.descents(&w, Side::Right)).first() {
            w = self.mul_gen(&w, s);
        }
        Ok(w)
    }

    /// Parses whitespace-separated generator names; `e` alone is the identity
    /// unless some generator is itself named `e`.
    pub fn parse_word(&self, text: &str) -> Result<Element> {
        let letters = self.parse_letters(text)?;
        self.normal_form(&letters)
    }

    pub fn parse_letters(&self, text: &str) -> Result<Vec<usize>> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["e"] && self.graph.index_of("e").is_none() {
            return Ok(Vec::new());
        }
        tokens
            .into_iter()
            .map(|tok| {
                self.graph
                    .index_of(tok)
                    .ok_or_else(|| Error::UnknownGenerator(tok.to_string()))
            })
            .collect()
    }

    /// Generator names separated by spaces, or `e` for the identity.
    pub fn format_word(&self, w: &Element) -> String {
        if w.is_identity() {
            return "e".to_string();
        }
        w.letters()
            .map(|s| self.graph.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGroup")
            .field("graph", &self.graph)
            .field("limits", &self.limits)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
#[path = "../../tests/common/perm.rs"]
mod perm;
