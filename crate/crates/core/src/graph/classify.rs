//! Finite-type recognition for connected Coxeter graphs.
//!
//! A connected graph generates a finite group exactly when it is one of the
//! templates A_n, B_n, D_n, E_6..8, F_4, H_3, H_4 or I_2(m). Matching is done
//! on the labeled tree shape, so it is independent of vertex names.

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::GeneratorSubset;

use super::{CoxeterGraph, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral group of order `2m`, used for `m = 5` and `m >= 6`.
    I2(u32),
    Infinite,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => f.write_str("E6"),
            CoxeterType::E7 => f.write_str("E7"),
            CoxeterType::E8 => f.write_str("E8"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::H3 => f.write_str("H3"),
            CoxeterType::H4 => f.write_str("H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::Infinite => f.write_str("infinite"),
        }
    }
}

/// Type, rank and group order of an irreducible parabolic subgroup.
/// `order` is `None` for infinite type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentType {
    pub kind: CoxeterType,
    pub rank: usize,
    pub order: Option<BigUint>,
}

impl ComponentType {
    fn finite(kind: CoxeterType, rank: usize) -> Self {
        let order = Some(finite_order(kind));
        ComponentType { kind, rank, order }
    }

    fn infinite(rank: usize) -> Self {
        ComponentType { kind: CoxeterType::Infinite, rank, order: None }
    }

    pub fn is_finite(&self) -> bool {
        self.order.is_some()
    }
}

impl Serialize for ComponentType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ComponentType", 3)?;
        st.serialize_field("kind", &self.kind.to_string())?;
        st.serialize_field("rank", &self.rank)?;
        match &self.order {
            Some(order) => st.serialize_field("order", &order.to_string())?,
            None => st.serialize_field("order", "inf")?,
        }
        st.end()
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Standard order formulas for the finite irreducible types.
pub fn finite_order(kind: CoxeterType) -> BigUint {
    match kind {
        CoxeterType::A(n) => factorial(n + 1),
        CoxeterType::B(n) => (BigUint::from(1u32) << n) * factorial(n),
        CoxeterType::D(n) => (BigUint::from(1u32) << (n - 1)) * factorial(n),
        CoxeterType::E6 => BigUint::from(51_840u32),
        CoxeterType::E7 => BigUint::from(2_903_040u32),
        CoxeterType::E8 => BigUint::from(696_729_600u32),
        CoxeterType::F4 => BigUint::from(1_152u32),
        CoxeterType::H3 => BigUint::from(120u32),
        CoxeterType::H4 => BigUint::from(14_400u32),
        CoxeterType::I2(m) => BigUint::from(2 * m as u64),
        CoxeterType::Infinite => panic!("infinite type has no finite order"),
    }
}

impl CoxeterGraph {
    /// Connected components of the subgraph induced on `x`, ordered by their
    /// smallest member.
    pub fn connected_components(&self, x: GeneratorSubset) -> Vec<GeneratorSubset> {
        let mut remaining = x;
        let mut parts = Vec::new();
        while let Some(start) = remaining.first() {
            let mut part = GeneratorSubset::singleton(start);
            let mut frontier = part;
            while !frontier.is_empty() {
                let mut next = GeneratorSubset::EMPTY;
                for s in frontier {
                    next = next | (self.neighbors(s) & x);
                }
                frontier = next - part;
                part = part | frontier;
            }
            remaining = remaining - part;
            parts.push(part);
        }
        parts
    }

    /// Classifies the parabolic subgroup on a connected subset.
    ///
    /// The empty subset is the trivial group, reported as `A0` with order 1.
    pub fn classify_component(&self, x: GeneratorSubset) -> Result<ComponentType> {
        if self.connected_components(x).len() > 1 {
            return Err(Error::Disconnected(self.format_subset(x)));
        }
        Ok(classify_connected(self, x))
    }

    /// Whether every irreducible component of `W_x` is finite.
    pub fn is_finite_type(&self, x: GeneratorSubset) -> bool {
        self.connected_components(x)
            .into_iter()
            .all(|c| classify_connected(self, c).is_finite())
    }

    /// Components of `x` paired with their types.
    pub fn classify_subset(&self, x: GeneratorSubset) -> Vec<(GeneratorSubset, ComponentType)> {
        self.connected_components(x)
            .into_iter()
            .map(|c| (c, classify_connected(self, c)))
            .collect()
    }
}

fn classify_connected(g: &CoxeterGraph, x: GeneratorSubset) -> ComponentType {
    let n = x.len();
    let vertices: Vec<usize> = x.iter().collect();
    match n {
        0 => return ComponentType::finite(CoxeterType::A(0), 0),
        1 => return ComponentType::finite(CoxeterType::A(1), 1),
        2 => {
            return match g.label(vertices[0], vertices[1]) {
                Label::Infinite => ComponentType::infinite(2),
                Label::Finite(3) => ComponentType::finite(CoxeterType::A(2), 2),
                Label::Finite(4) => ComponentType::finite(CoxeterType::B(2), 2),
                Label::Finite(m) => ComponentType::finite(CoxeterType::I2(m), 2),
            }
        }
        _ => {}
    }

    // Edges inside x with their labels; a finite type must be a tree.
    let mut edges = Vec::new();
    for (i, &s) in vertices.iter().enumerate() {
        for &t in &vertices[i + 1..] {
            let m = g.label(s, t);
            if m.is_edge() {
                edges.push((s, t, m));
            }
        }
    }
    if edges.len() != n - 1 {
        return ComponentType::infinite(n);
    }
    let degree = |v: usize| (g.neighbors(v) & x).len();

    let mut heavy = edges.iter().filter(|(_, _, m)| *m != Label::Finite(3));
    let heavy_edge = heavy.next().copied();
    if heavy.next().is_some() {
        return ComponentType::infinite(n);
    }
    let branch: Vec<usize> = vertices.iter().copied().filter(|&v| degree(v) >= 3).collect();

    match heavy_edge {
        None => {
            if branch.is_empty() {
                return ComponentType::finite(CoxeterType::A(n), n);
            }
            if branch.len() > 1 || degree(branch[0]) > 3 {
                return ComponentType::infinite(n);
            }
            let centre = branch[0];
            let mut arms: Vec<usize> = (g.neighbors(centre) & x)
                .iter()
                .map(|start| arm_length(g, x, centre, start))
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => ComponentType::finite(CoxeterType::D(n), n),
                (1, 2, 2) => ComponentType::finite(CoxeterType::E6, n),
                (1, 2, 3) => ComponentType::finite(CoxeterType::E7, n),
                (1, 2, 4) => ComponentType::finite(CoxeterType::E8, n),
                _ => ComponentType::infinite(n),
            }
        }
        Some((s, t, m)) => {
            if !branch.is_empty() {
                return ComponentType::infinite(n);
            }
            let at_end = degree(s) == 1 || degree(t) == 1;
            match m {
                Label::Finite(4) if at_end => ComponentType::finite(CoxeterType::B(n), n),
                Label::Finite(4) if n == 4 => ComponentType::finite(CoxeterType::F4, n),
                Label::Finite(5) if at_end && n == 3 => ComponentType::finite(CoxeterType::H3, n),
                Label::Finite(5) if at_end && n == 4 => ComponentType::finite(CoxeterType::H4, n),
                _ => ComponentType::infinite(n),
            }
        }
    }
}

/// Number of vertices on the path that leaves `centre` through `start`.
fn arm_length(g: &CoxeterGraph, x: GeneratorSubset, centre: usize, start: usize) -> usize {
    let mut prev = centre;
    let mut cur = start;
    let mut len = 1;
    loop {
        let next = (g.neighbors(cur) & x).without(prev).first();
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
                len += 1;
            }
            None => return len,
        }
    }
}
