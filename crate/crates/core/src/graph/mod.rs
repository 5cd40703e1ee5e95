//! Coxeter matrices and their graphs.
//!
//! A [`CoxeterGraph`] owns the generator names and the full symmetric label
//! matrix. Generator order is fixed at construction: it is the order used for
//! bitmask positions in [`GeneratorSubset`] and for ShortLex comparisons of
//! words.

mod analysis;
mod classify;
mod parse;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::subset::{GeneratorSubset, MAX_RANK};

pub use analysis::ParabolicAnalysis;
pub use classify::{ComponentType, CoxeterType};

/// An entry `m(s,t)` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    /// Whether the pair is joined by an edge of the Coxeter graph (`m >= 3`).
    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m >= 3,
            Label::Infinite => true,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => serializer.serialize_u32(*m),
            Label::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    names: Vec<String>,
    labels: Vec<Label>,
    // adjacency[s] = generators t with m(s,t) >= 3
    adjacency: Vec<GeneratorSubset>,
}

impl CoxeterGraph {
    /// Builds a graph from generator names and the off-diagonal labels.
    /// Pairs that are not listed get `m = 2`.
    pub fn new<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Label)>,
    {
        let n = names.len();
        if n > MAX_RANK {
            return Err(ParseError::TooManyGenerators { count: n, max: MAX_RANK }.into());
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(ParseError::DuplicateVertex { line: 1, name: name.clone() }.into());
            }
        }
        let mut labels = vec![Label::Finite(2); n * n];
        for i in 0..n {
            labels[i * n + i] = Label::Finite(1);
        }
        let mut graph = CoxeterGraph {
            names,
            labels,
            adjacency: vec![GeneratorSubset::EMPTY; n],
        };
        for (s, t, m) in edges {
            for i in [s, t] {
                if i >= n {
                    return Err(Error::InvalidGeneratorIndex { index: i, rank: n });
                }
            }
            if s == t {
                return Err(ParseError::SelfLabel { line: 0, name: graph.names[s].clone() }.into());
            }
            if let Label::Finite(v) = m {
                if v < 2 {
                    return Err(ParseError::LabelTooSmall { line: 0, label: v as u64 }.into());
                }
            }
            graph.set(s, t, m);
        }
        Ok(graph)
    }

    /// Parses the text graph format: a line of vertex names followed by
    /// `s t m` lines, where `m` is an integer `>= 2` or `inf`.
    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_graph(text)
    }

    fn set(&mut self, s: usize, t: usize, m: Label) {
        let n = self.rank();
        self.labels[s * n + t] = m;
        self.labels[t * n + s] = m;
        if m.is_edge() {
            self.adjacency[s].insert(t);
            self.adjacency[t].insert(s);
        } else {
            self.adjacency[s].remove(t);
            self.adjacency[t].remove(s);
        }
    }

    /// A copy of this graph with one label replaced.
    pub fn with_label(&self, s: usize, t: usize, m: Label) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..self.rank() {
            for b in a + 1..self.rank() {
                edges.push((a, b, self.label(a, b)));
            }
        }
        edges.push((s, t, m));
        CoxeterGraph::new(self.names.clone(), edges)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.labels[s * self.rank() + t]
    }

    /// Neighbours of `s` in the Coxeter graph.
    pub fn neighbors(&self, s: usize) -> GeneratorSubset {
        self.adjacency[s]
    }

    pub fn generators(&self) -> GeneratorSubset {
        GeneratorSubset::full(self.rank())
    }

    /// Labels `m(s,t)` with `s < t` that differ from 2.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        (0..self.rank()).flat_map(move |s| {
            (s + 1..self.rank()).filter_map(move |t| {
                let m = self.label(s, t);
                (m != Label::Finite(2)).then_some((s, t, m))
            })
        })
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.rank() {
            Ok(())
        } else {
            Err(Error::InvalidGeneratorIndex { index, rank: self.rank() })
        }
    }

    /// Parses a comma-separated list of generator names. An empty string, or
    /// `{}`, is the empty subset.
    pub fn parse_subset(&self, text: &str) -> Result<GeneratorSubset> {
        let text = text.trim();
        if text.is_empty() || text == "{}" {
            return Ok(GeneratorSubset::EMPTY);
        }
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                self.index_of(tok).ok_or_else(|| Error::UnknownGenerator(tok.to_string()))
            })
            .collect()
    }

    /// Comma-separated generator names, in generator order.
    pub fn format_subset(&self, x: GeneratorSubset) -> String {
        x.iter().map(|i| self.names[i].as_str()).collect::<Vec<_>>().join(",")
    }

    /// Renders the text graph format; `parse` reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut out = self.names.join(" ");
        out.push('\n');
        for (s, t, m) in self.edges() {
            out.push_str(&format!("{} {} {}\n", self.names[s], self.names[t], m));
        }
        out
    }
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGraph")
            .field("generators", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
