use serde::Serialize;

use crate::subset::GeneratorSubset;

use super::{CoxeterGroup, Element, Side};

/// `w = u * v * u_prime` with `u` in `W_X`, `u_prime` in `W_X'`, `v` the
/// minimal element of `W_X w W_X'`, and lengths adding up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCosetDecomposition {
    pub u: Element,
    pub v: Element,
    pub u_prime: Element,
}

impl CoxeterGroup {
    /// Strips descents until `v` has no left descent in `x` and no right
    /// descent in `x_prime`.
    ///
    /// Each round removes the smallest left descent lying in `x`, then the
    /// smallest right descent lying in `x_prime`. Every strip shortens the
    /// element by one, so the lengths of `u`, `v` and `u_prime` add up to
    /// `l(w)`.
    pub fn double_coset_decompose(
        &self,
        w: &Element,
        x: GeneratorSubset,
        x_prime: GeneratorSubset,
    ) -> DoubleCosetDecomposition {
        let mut v = w.clone();
        let mut left = Vec::new();
        let mut right = Vec::new();
        loop {
            let mut changed = false;
            if let Some(s) = (self.descents(&v, Side::Left) & x).first() {
                v = self.gen_mul(s, &v);
                left.push(s);
                changed = true;
            }
            if let Some(s) = (self.descents(&v, Side::Right) & x_prime).first() {
                v = self.mul_gen(&v, s);
                right.push(s);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        right.reverse();
        let u = left.iter().fold(Element::identity(), |acc, &s| self.mul_gen(&acc, s));
        let u_prime = right.iter().fold(Element::identity(), |acc, &s| self.mul_gen(&acc, s));
        debug_assert_eq!(u.length() + v.length() + u_prime.length(), w.length());
        DoubleCosetDecomposition { u, v, u_prime }
    }

    /// `(v, u)` with `w = v * u`, `u` in `W_x` and `v` minimal in `w W_x`.
    pub fn right_coset_decompose(&self, w: &Element, x: GeneratorSubset) -> (Element, Element) {
        let d = self.double_coset_decompose(w, GeneratorSubset::EMPTY, x);
        (d.v, d.u_prime)
    }

    /// Whether `w` has no left descent in `x` and no right descent in `x_prime`.
    pub fn is_reduced_for(&self, w: &Element, x: GeneratorSubset, x_prime: GeneratorSubset) -> bool {
        (self.descents(w, Side::Left) & x).is_empty() && (self.descents(w, Side::Right) & x_prime).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CoxeterGraph;

    fn group(text: &str) -> CoxeterGroup {
        CoxeterGroup::new(CoxeterGraph::parse(text).unwrap())
    }

    #[test]
    fn a2_example() {
        let g = group("a b\na b 3\n");
        let w = g.parse_word("a b a").unwrap();
        let d = g.double_coset_decompose(&w, GeneratorSubset::singleton(0), GeneratorSubset::singleton(1));
        assert_eq!(g.format_word(&d.u), "a");
        assert_eq!(g.format_word(&d.v), "b a");
        assert!(d.u_prime.is_identity());
        // the double coset W_a (aba) W_b, enumerated: {aba, ba}
        let mut coset = Vec::new();
        for u in ["e", "a"] {
            for up in ["e", "b"] {
                let x = g.product_all([&g.parse_word(u).unwrap(), &w, &g.parse_word(up).unwrap()]);
                coset.push(g.format_word(&x));
            }
        }
        coset.sort();
        coset.dedup();
        assert_eq!(coset, ["a b a", "b a"]);
    }

    #[test]
    fn trivial_cases() {
        let g = group("a b c\na b inf\nb c 3\n");
        let w = g.parse_word("c a b c").unwrap();
        let d = g.double_coset_decompose(&w, GeneratorSubset::EMPTY, GeneratorSubset::EMPTY);
        assert_eq!(d.v, w);
        assert!(d.u.is_identity() && d.u_prime.is_identity());
        let d = g.double_coset_decompose(&crate::Element::identity(), g.graph().generators(), g.graph().generators());
        assert!(d.u.is_identity() && d.v.is_identity() && d.u_prime.is_identity());
    }

    #[test]
    fn factors_multiply_back() {
        let g = group("a b c\na b 4\nb c 3\n");
        let x = g.graph().parse_subset("a,b").unwrap();
        let xp = g.graph().parse_subset("b,c").unwrap();
        for w in g.ball(9).unwrap() {
            let d = g.double_coset_decompose(&w, x, xp);
            assert_eq!(g.product_all([&d.u, &d.v, &d.u_prime]), w);
            assert_eq!(d.u.length() + d.v.length() + d.u_prime.length(), w.length());
            assert!(g.is_reduced_for(&d.v, x, xp));
            assert!(g.is_in_parabolic(&d.u, x) && g.is_in_parabolic(&d.u_prime, xp));
        }
    }
}
