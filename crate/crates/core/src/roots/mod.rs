//! The canonical (geometric) representation of a Coxeter group.
//!
//! `W` acts on the real vector space with basis `{e_s}` through
//! `s(x) = x - 2 B(x, e_s) e_s`, where `B(e_s, e_t) = -cos(π / m(s,t))` and
//! `B(e_s, e_t) = -1` when `m(s,t) = ∞`. Every root `w(e_s)` has coordinates
//! of a single sign, and `l(ws) > l(w)` exactly when `w(e_s)` is positive.
//! That gives a length and descent oracle that shares no code with the braid
//! machinery in [`crate::words`].
//!
//! Arithmetic is exact. Labels must lie in `{2, 3, 4, 5, 6, ∞}`; other finite
//! labels are rejected with [`Error::UnsupportedLabel`] and callers fall back
//! to the word-based routines.

mod scalar;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Label};
use crate::subset::GeneratorSubset;
use crate::words::{CoxeterGroup, Element, Side};

pub use scalar::Scalar;

/// A vector `Σ a_s e_s`, stored densely in generator order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(Vec<Scalar>);

impl Root {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Root(coords)
    }

    pub fn is_simple(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (s, c) = nonzero.next()?;
        (nonzero.next().is_none() && *c == Scalar::one()).then_some(s)
    }

    fn negated(&self) -> Root {
        Root(self.0.iter().cloned().map(|c| -c).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Whether every label of the graph is in the exactly supported set.
pub fn labels_supported(graph: &CoxeterGraph) -> bool {
    graph.edges().all(|(_, _, m)| match m {
        Label::Finite(m) => (2..=6).contains(&m),
        Label::Infinite => true,
    })
}

/// The bilinear form of a Coxeter graph together with the reflection action.
#[derive(Clone, Debug)]
pub struct CanonicalRepresentation {
    rank: usize,
    form: Vec<Scalar>,
}

impl CanonicalRepresentation {
    pub fn new(graph: &CoxeterGraph) -> Result<Self> {
        let n = graph.rank();
        let mut form = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let entry = match graph.label(s, t) {
                    Label::Infinite => Scalar::rational(-1, 1),
                    Label::Finite(m) => {
                        -Scalar::cos_pi_over(m).ok_or_else(|| Error::UnsupportedLabel(m.to_string()))?
                    }
                };
                form.push(entry);
            }
        }
        Ok(CanonicalRepresentation { rank: n, form })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `B(e_s, e_t)`.
    pub fn form_entry(&self, s: usize, t: usize) -> &Scalar {
        &self.form[s * self.rank + t]
    }

    pub fn simple_root(&self, s: usize) -> Root {
        let mut coords = vec![Scalar::zero(); self.rank];
        coords[s] = Scalar::one();
        Root(coords)
    }

    pub fn bilinear_form(&self, r1: &Root, r2: &Root) -> Scalar {
        let mut acc = Scalar::zero();
        for (s, a) in r1.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in r2.0.iter().enumerate() {
                let entry = self.form_entry(s, t);
                if b.is_zero() || entry.is_zero() {
                    continue;
                }
                acc = acc + &(a * b) * entry;
            }
        }
        acc
    }

    /// `B(x, e_s)`.
    fn pair_with_simple(&self, x: &Root, s: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (t, a) in x.0.iter().enumerate() {
            let entry = self.form_entry(t, s);
            if !a.is_zero() && !entry.is_zero() {
                acc = acc + a * entry;
            }
        }
        acc
    }

    /// `s(x) = x - 2 B(x, e_s) e_s`.
    pub fn reflect(&self, s: usize, x: &Root) -> Root {
        let b = self.pair_with_simple(x, s);
        let mut out = x.clone();
        out.0[s] = out.0[s].add_scaled(-2, &b);
        out
    }

    /// `w(x)`, applying the letters of `w` from right to left.
    pub fn act(&self, w: &Element, x: &Root) -> Root {
        self.act_letters(&w.letters().collect::<Vec<_>>(), x)
    }

    pub fn act_letters(&self, letters: &[usize], x: &Root) -> Root {
        letters.iter().rev().fold(x.clone(), |acc, &s| self.reflect(s, &acc))
    }

    /// Sign of a root: `true` if all coordinates are `>= 0`, `false` if all are
    /// `<= 0`. Mixed signs (or the zero vector) mean the input is not a root.
    pub fn is_positive(&self, r: &Root) -> Result<bool> {
        let mut pos = false;
        let mut neg = false;
        for c in &r.0 {
            match c.signum() {
                std::cmp::Ordering::Greater => pos = true,
                std::cmp::Ordering::Less => neg = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        match (pos, neg) {
            (true, false) => Ok(true),
            (false, true) => Ok(false),
            _ => Err(Error::NotARoot),
        }
    }

    /// `l(ws) < l(w)`, decided by the sign of `w(e_s)`.
    pub fn root_descent(&self, w: &Element, s: usize) -> Result<bool> {
        Ok(!self.is_positive(&self.act(w, &self.simple_root(s)))?)
    }

    /// Length of the element represented by an arbitrary word.
    ///
    /// Tracks the images `w(e_t)` of all simple roots and strips a right
    /// descent (a generator `s` with `w(e_s) < 0`) until none is left; an
    /// element without right descents is the identity.
    pub fn root_length(&self, letters: &[usize]) -> Result<usize> {
        let mut images = ImageFrame::identity(self);
        for &s in letters {
            if s >= self.rank {
                return Err(Error::InvalidGeneratorIndex { index: s, rank: self.rank });
            }
            images.right_multiply(self, s);
        }
        let mut length = 0;
        while let Some(s) = images.first_descent(self)? {
            images.right_multiply(self, s);
            length += 1;
            assert!(length <= letters.len(), "root length exceeded word length");
        }
        Ok(length)
    }

    /// `X'` with `w(E_x) = E_X'`, computed directly on roots.
    pub fn simple_image_set(&self, w: &Element, x: GeneratorSubset) -> Option<GeneratorSubset> {
        x.iter()
            .map(|s| self.act(w, &self.simple_root(s)).is_simple())
            .collect()
    }

    /// Positive roots reachable from the simple roots by at most `depth`
    /// reflections, each paired with its reflection `r = w s w^-1` when the
    /// root is `w(e_s)`.
    ///
    /// Output order is breadth-first: depth 0 is `e_s` paired with `s` in
    /// generator order; a root at depth `d + 1` is `s(α)` for the first root
    /// `α` at depth `d` (and smallest `s`) that reaches it.
    pub fn positive_roots_up_to_depth(&self, group: &CoxeterGroup, depth: usize) -> Result<Vec<(Root, Element)>> {
        if group.rank() != self.rank {
            return Err(Error::RankMismatch(group.rank(), self.rank));
        }
        let cap = group.limits().ball_cap;
        let mut seen: HashMap<Root, usize> = HashMap::new();
        let mut out: Vec<(Root, Element)> = Vec::new();
        for s in 0..self.rank {
            let root = self.simple_root(s);
            seen.insert(root.clone(), out.len());
            out.push((root, group.generator(s)));
        }
        let mut frontier = 0..out.len();
        for _ in 0..depth {
            let start = out.len();
            for i in frontier.clone() {
                for s in 0..self.rank {
                    let image = self.reflect(s, &out[i].0);
                    if !self.is_positive(&image)? || seen.contains_key(&image) {
                        continue;
                    }
                    let gen = group.generator(s);
                    let reflection = group.product_all([&gen, &out[i].1, &gen]);
                    seen.insert(image.clone(), out.len());
                    out.push((image, reflection));
                    if out.len() > cap {
                        return Err(Error::BudgetExceeded { what: "root enumeration", limit: cap });
                    }
                }
            }
            if out.len() == start {
                break;
            }
            frontier = start..out.len();
        }
        Ok(out)
    }
}

/// Images `w(e_t)` of all simple roots under a running element `w`.
struct ImageFrame(Vec<Root>);

impl ImageFrame {
    fn identity(rep: &CanonicalRepresentation) -> Self {
        ImageFrame((0..rep.rank).map(|s| rep.simple_root(s)).collect())
    }

    /// `w <- w s`, using `(ws)(e_t) = w(e_t) - 2 B(e_t, e_s) w(e_s)`.
    fn right_multiply(&mut self, rep: &CanonicalRepresentation, s: usize) {
        let ws = self.0[s].clone();
        for t in 0..rep.rank {
            if t == s {
                self.0[t] = ws.negated();
                continue;
            }
            let b = rep.form_entry(t, s);
            if b.is_zero() {
                continue;
            }
            let coeff = b.add_scaled(1, b);
            let updated = self.0[t]
                .0
                .iter()
                .zip(&ws.0)
                .map(|(a, c)| if c.is_zero() { a.clone() } else { a - &(&coeff * c) })
                .collect();
            self.0[t] = Root(updated);
        }
    }

    fn first_descent(&self, rep: &CanonicalRepresentation) -> Result<Option<usize>> {
        for (s, image) in self.0.iter().enumerate() {
            if !rep.is_positive(image)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
}

impl CoxeterGroup {
    /// `X'` with `w(E_x) = E_X'`, if it exists, via the length criterion:
    /// for every `s` in `x`, `l(ws) > l(w)` and `w s w^-1` is a generator.
    /// Works for every label.
    pub fn simple_image_set(&self, w: &Element, x: GeneratorSubset) -> Option<GeneratorSubset> {
        if !(self.descents(w, Side::Right) & x).is_empty() {
            return None;
        }
        x.iter().map(|s| self.conjugate_generator(w, s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn setup(text: &str) -> (CoxeterGroup, CanonicalRepresentation) {
        let graph = CoxeterGraph::parse(text).unwrap();
        let rep = CanonicalRepresentation::new(&graph).unwrap();
        (CoxeterGroup::new(graph), rep)
    }

    fn coords(r: &Root) -> Vec<String> {
        r.coords().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn form_entries() {
        let (_, rep) = setup("a b c\na b inf\nb c 3\n");
        assert_eq!(rep.form_entry(0, 0), &Scalar::one());
        assert_eq!(rep.form_entry(0, 2), &Scalar::zero());
        assert_eq!(rep.form_entry(0, 1), &Scalar::rational(-1, 1));
        assert_eq!(rep.form_entry(1, 2), &Scalar::rational(-1, 2));
        let e = |s| rep.simple_root(s);
        assert_eq!(rep.bilinear_form(&e(0), &e(1)), rep.bilinear_form(&e(1), &e(0)));
    }

    #[test]
    fn unsupported_label() {
        let graph = CoxeterGraph::parse("a b\na b 7\n").unwrap();
        assert!(matches!(CanonicalRepresentation::new(&graph), Err(Error::UnsupportedLabel(_))));
        assert!(!labels_supported(&graph));
    }

    #[test]
    fn reflections() {
        let (g, rep) = setup("a b c\na b inf\n");
        let a = g.generator(0);
        assert_eq!(coords(&rep.act(&a, &rep.simple_root(0))), ["-1", "0", "0"]);
        assert_eq!(rep.act(&g.generator(2), &rep.simple_root(0)), rep.simple_root(0));
        // m_ab = ∞: a(e_b) = e_b + 2 e_a
        let image = rep.act(&a, &rep.simple_root(1));
        assert_eq!(coords(&image), ["2", "1", "0"]);
        assert_eq!(rep.is_positive(&image), Ok(true));
        assert_eq!(rep.act(&a, &image), rep.simple_root(1));
    }

    #[test]
    fn positivity() {
        let (_, rep) = setup("a b\na b 3\n");
        assert_eq!(rep.is_positive(&rep.simple_root(0)), Ok(true));
        assert_eq!(rep.is_positive(&rep.simple_root(0).negated()), Ok(false));
        let mixed = Root::from_coords(vec![Scalar::one(), Scalar::rational(-1, 1)]);
        assert_eq!(rep.is_positive(&mixed), Err(Error::NotARoot));
    }

    #[test]
    fn descents_and_lengths() {
        let (g1, rep1) = setup("a b\na b 3\n");
        assert_eq!(rep1.root_descent(&Element::identity(), 0), Ok(false));
        let w0 = g1.parse_word("a b a").unwrap();
        assert_eq!(rep1.root_descent(&w0, 0), Ok(true));
        let (g2, rep2) = setup("a b\na b inf\n");
        let ab = g2.parse_word("a b").unwrap();
        // (ab)(e_b) = a(-e_b) = -(e_b + 2e_a)
        assert_eq!(coords(&rep2.act(&ab, &rep2.simple_root(1))), ["-2", "-1"]);
        assert_eq!(rep2.root_descent(&ab, 1), Ok(true));
        assert_eq!(rep2.root_length(&[0, 1]), Ok(2));
        assert_eq!(rep1.root_length(&[0, 1, 0, 1]), Ok(2));
        assert_eq!(rep1.root_length(&[0, 0]), Ok(0));
        assert_eq!(rep1.root_length(&[]), Ok(0));
    }

    #[test]
    fn root_length_agrees_with_braid_length_h3() {
        let (g, rep) = setup("a b c\na b 5\nb c 3\n");
        for w in g.ball(15).unwrap() {
            let letters: Vec<usize> = w.letters().collect();
            assert_eq!(rep.root_length(&letters).unwrap(), w.length());
        }
    }

    #[test]
    fn a2_positive_roots() {
        let (g, rep) = setup("a b\na b 3\n");
        let roots = rep.positive_roots_up_to_depth(&g, 10).unwrap();
        assert_eq!(roots.len(), 3);
        let mut refl: Vec<String> = roots.iter().map(|(_, r)| g.format_word(r)).collect();
        refl.sort();
        assert_eq!(refl, ["a", "a b a", "b"]);
        let depth0 = rep.positive_roots_up_to_depth(&g, 0).unwrap();
        assert_eq!(depth0.len(), 2);
        assert_eq!(g.format_word(&depth0[1].1), "b");
    }

    #[test]
    fn reflections_are_injective() {
        let (g, rep) = setup("a b c\na b inf\n");
        let roots = rep.positive_roots_up_to_depth(&g, 2).unwrap();
        let mut refl: Vec<&Element> = roots.iter().map(|(_, r)| r).collect();
        let n = refl.len();
        refl.sort();
        refl.dedup();
        assert_eq!(refl.len(), n);
        for (root, r) in &roots {
            // r_α acts on α as -α
            assert_eq!(rep.act(r, root), root.negated());
        }
    }

    #[test]
    fn simple_image_examples() {
        let (g, rep) = setup("a b\na b 3\n");
        let a = GeneratorSubset::singleton(0);
        assert_eq!(g.simple_image_set(&Element::identity(), a), Some(a));
        let ab = g.parse_word("a b").unwrap();
        assert_eq!(g.simple_image_set(&ab, a), Some(GeneratorSubset::singleton(1)));
        assert_eq!(rep.simple_image_set(&ab, a), Some(GeneratorSubset::singleton(1)));
        assert_eq!(g.simple_image_set(&g.generator(0), a), None);
        assert_eq!(rep.simple_image_set(&g.generator(0), a), None);
    }

    #[test]
    fn form_is_invariant() {
        let (g, rep) = setup("a b c\na b inf\nb c 4\n");
        let e: Vec<Root> = (0..3).map(|s| rep.simple_root(s)).collect();
        for w in g.ball(6).unwrap() {
            for r1 in &e {
                for r2 in &e {
                    let lhs = rep.bilinear_form(&rep.act(&w, r1), &rep.act(&w, r2));
                    assert_eq!(lhs, rep.bilinear_form(r1, r2));
                }
                let image = rep.act(&w, r1);
                assert!(rep.is_positive(&image).is_ok());
                assert_eq!(rep.bilinear_form(&image, &image).signum(), Ordering::Greater);
            }
        }
    }
}
