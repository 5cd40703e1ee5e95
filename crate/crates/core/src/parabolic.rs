//! Commensurators, normalizers and quasi-centralizers of standard parabolic
//! subgroups, along with the conjugation groupoid that underlies them.

use std::collections::{HashMap, VecDeque};
use std::sync::RwLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::GeneratorSubset;
use crate::words::{CoxeterGroup, Element, Side};

/// The conjugate `u W_Y u^-1`. `conjugator` is kept minimal in its coset
/// `u W_Y`, so equal subgroups given by equal `(u W_Y, Y)` print identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicDescriptor {
    pub conjugator: Element,
    pub core: GeneratorSubset,
}

/// `c(t, X) = w_{Y0} w_{X0}`, where `Y0` is the component of `t` in the graph
/// on `{t} ∪ X` and `X0 = Y0 \ {t}`. It maps the simple roots of `X` onto
/// those of `next`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryConjugation {
    pub t: usize,
    pub x: GeneratorSubset,
    pub c: Element,
    pub next: GeneratorSubset,
}

/// A chain of elementary conjugations from `steps[0].x` to the last `next`,
/// with `w = c_{n-1} ... c_1 c_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationWitness {
    pub steps: Vec<ElementaryConjugation>,
    pub w: Element,
}

#[derive(Default)]
pub(crate) struct ConjugationCache(RwLock<HashMap<(GeneratorSubset, usize), Option<ElementaryConjugation>>>);

impl ConjugationWitness {
    /// Replays the chain: consecutive steps must link up, every step must be a
    /// genuine elementary conjugation, the product must equal `w`, and `w`
    /// must carry the simple roots of `from` onto those of `to`.
    pub fn replay(&self, group: &CoxeterGroup, from: GeneratorSubset, to: GeneratorSubset) -> Result<(), String> {
        let mut current = from;
        let mut product = Element::identity();
        for (i, step) in self.steps.iter().enumerate() {
            if step.x != current {
                return Err(format!("step {i} starts at {:?}, expected {:?}", step.x, current));
            }
            let fresh = group
                .elementary_conjugation(step.x, step.t)
                .map_err(|e| format!("step {i}: {e}"))?;
            if fresh != *step {
                return Err(format!("step {i} does not match c(t, X)"));
            }
            if group.simple_image_set(&step.c, step.x) != Some(step.next) {
                return Err(format!("step {i}: c does not map E_X onto E_next"));
            }
            product = group.product(&step.c, &product);
            current = step.next;
        }
        if current != to {
            return Err(format!("chain ends at {current:?}, expected {to:?}"));
        }
        if product != self.w {
            return Err("product of steps differs from w".to_string());
        }
        if group.simple_image_set(&self.w, from) != Some(to) {
            return Err("w does not map E_from onto E_to".to_string());
        }
        Ok(())
    }
}

impl CoxeterGroup {
    /// `W_x ∩ w W_x' w^-1`, as `u0 W_Y u0^-1`.
    ///
    /// With `w = u0 v u0'` and `v` minimal in `W_x w W_x'`, the intersection
    /// is `u0 W_Y u0^-1` where `Y = x ∩ v x' v^-1`.
    pub fn intersect_parabolic_conjugate(
        &self,
        x: GeneratorSubset,
        x_prime: GeneratorSubset,
        w: &Element,
    ) -> ParabolicDescriptor {
        let d = self.double_coset_decompose(w, x, x_prime);
        let core = x_prime
            .iter()
            .filter_map(|s| self.conjugate_generator(&d.v, s))
            .filter(|&s| x.contains(s))
            .collect();
        let (conjugator, _) = self.right_coset_decompose(&d.u, core);
        ParabolicDescriptor { conjugator, core }
    }

    /// Elements of `u W_Y u^-1`, sorted ShortLex. `W_Y` must be finite.
    pub fn descriptor_elements(&self, desc: &ParabolicDescriptor) -> Result<Vec<Element>> {
        let cap = self.limits().group_order_cap;
        let inv = self.inverse(&desc.conjugator);
        let mut out: Vec<Element> = self
            .subgroup_elements(desc.core, cap)?
            .iter()
            .map(|y| self.product_all([&desc.conjugator, y, &inv]))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Generators of the quasi-center of `(W_x, x)`: the longest element of
    /// each finite irreducible component. Infinite components contribute
    /// nothing.
    pub fn quasi_center(&self, x: GeneratorSubset) -> Vec<Element> {
        self.graph()
            .classify_subset(x)
            .into_iter()
            .filter(|(_, ty)| ty.is_finite())
            .map(|(part, _)| self.longest_element(part).expect("finite component"))
            .collect()
    }

    /// Whether `w` normalizes `W_x`.
    pub fn normalizer_membership(&self, x: GeneratorSubset, w: &Element) -> bool {
        self.normalizer_decompose(x, w).is_some()
    }

    /// For `w` in `N(W_x)`, returns `(v, u)` with `w = v u`, `u` in `W_x`,
    /// `v x v^-1 = x` and `l(vs) > l(v)` for all `s` in `x`. Returns `None`
    /// when `w` does not normalize `W_x`.
    pub fn normalizer_decompose(&self, x: GeneratorSubset, w: &Element) -> Option<(Element, Element)> {
        let (v, u) = self.right_coset_decompose(w, x);
        (self.simple_image_set(&v, x) == Some(x)).then_some((v, u))
    }

    /// `Y` with `{w : w x w^-1 = x} = W_Y`, valid when every irreducible
    /// component of `W_x` is infinite.
    pub fn quasi_centralizer(&self, x: GeneratorSubset) -> Result<GeneratorSubset> {
        let (x0, _) = self.graph().decompose_subset(x);
        if !x0.is_empty() {
            return Err(Error::HasFiniteComponent(self.graph().format_subset(x)));
        }
        Ok(self.graph().perpendicular_set(x))
    }

    /// Whether `w` commensurates `W_x`.
    ///
    /// Takes `v` minimal in `W_x w W_x` and checks that it permutes the
    /// simple roots of the infinite part of `x`. This is decided in finitely
    /// many steps even though finite-index conditions in infinite groups are
    /// not directly checkable.
    pub fn commensurator_membership(&self, x: GeneratorSubset, w: &Element) -> bool {
        let (_, xinf) = self.graph().decompose_subset(x);
        let v = self.double_coset_decompose(w, x, x).v;
        self.simple_image_set(&v, xinf) == Some(xinf)
    }

    fn component_of(&self, x: GeneratorSubset, t: usize) -> GeneratorSubset {
        self.graph()
            .connected_components(x.with(t))
            .into_iter()
            .find(|part| part.contains(t))
            .expect("t lies in some component")
    }

    fn check_outside(&self, x: GeneratorSubset, t: usize) -> Result<()> {
        self.graph().check_index(t)?;
        if x.contains(t) {
            return Err(Error::GeneratorInSubset {
                t: self.graph().name(t).to_string(),
                x: self.graph().format_subset(x),
            });
        }
        Ok(())
    }

    /// Whether the component of `t` in the graph on `{t} ∪ x` is of finite type.
    pub fn is_admissible(&self, x: GeneratorSubset, t: usize) -> Result<bool> {
        self.check_outside(x, t)?;
        Ok(self.graph().is_finite_type(self.component_of(x, t)))
    }

    pub fn elementary_conjugation(&self, x: GeneratorSubset, t: usize) -> Result<ElementaryConjugation> {
        self.check_outside(x, t)?;
        if let Some(hit) = self.conjugations.0.read().unwrap().get(&(x, t)) {
            return hit.clone().ok_or_else(|| self.not_admissible(x, t));
        }
        let y0 = self.component_of(x, t);
        let result = if self.graph().is_finite_type(y0) {
            let wy = self.longest_element(y0)?;
            let wx = self.longest_element(y0.without(t))?;
            let c = self.product(&wy, &wx);
            debug_assert!((self.descents(&c, Side::Right) & x).is_empty());
            let next = self
                .simple_image_set(&c, x)
                .expect("c(t, X) permutes simple roots into {t} ∪ X");
            Some(ElementaryConjugation { t, x, c, next })
        } else {
            None
        };
        self.conjugations
            .0
            .write()
            .unwrap()
            .entry((x, t))
            .or_insert_with(|| result.clone());
        result.ok_or_else(|| self.not_admissible(x, t))
    }

    fn not_admissible(&self, x: GeneratorSubset, t: usize) -> Error {
        Error::NotAdmissible {
            t: self.graph().name(t).to_string(),
            x: self.graph().format_subset(x),
        }
    }

    /// Elementary conjugations leaving `x`, by increasing `t`.
    pub fn conjugations_from(&self, x: GeneratorSubset) -> Vec<ElementaryConjugation> {
        (self.graph().generators() - x)
            .iter()
            .filter_map(|t| self.elementary_conjugation(x, t).ok())
            .collect()
    }

    /// Shortest chain of elementary conjugations from `x` to `x_prime`, found
    /// by breadth-first search over subsets of `S` (smallest `t` first).
    pub fn conjugation_witness(
        &self,
        x: GeneratorSubset,
        x_prime: GeneratorSubset,
    ) -> Result<Option<ConjugationWitness>> {
        let cap = self.limits().search_cap;
        let mut parent: HashMap<GeneratorSubset, Option<ElementaryConjugation>> = HashMap::new();
        parent.insert(x, None);
        let mut queue = VecDeque::from([x]);
        while let Some(current) = queue.pop_front() {
            if current == x_prime {
                let mut steps = Vec::new();
                let mut at = current;
                while let Some(Some(step)) = parent.get(&at) {
                    at = step.x;
                    steps.push(step.clone());
                }
                steps.reverse();
                let w = steps
                    .iter()
                    .fold(Element::identity(), |acc, step| self.product(&step.c, &acc));
                return Ok(Some(ConjugationWitness { steps, w }));
            }
            for step in self.conjugations_from(current) {
                if !parent.contains_key(&step.next) {
                    if parent.len() >= cap {
                        return Err(Error::BudgetExceeded { what: "conjugation groupoid search", limit: cap });
                    }
                    queue.push_back(step.next);
                    parent.insert(step.next, Some(step));
                }
            }
        }
        Ok(None)
    }

    /// Factors `w` into elementary conjugations starting from `x`, when `w`
    /// maps the simple roots of `x` onto simple roots.
    ///
    /// Each step peels off a rightmost factor `c(t, X_i)` with
    /// `l(w) = l(w c^-1) + l(c)`. Returns `None` when `w(E_x)` is not a set of
    /// simple roots.
    pub fn factor_witness(&self, x: GeneratorSubset, w: &Element) -> Result<Option<ConjugationWitness>> {
        let Some(target) = self.simple_image_set(w, x) else {
            return Ok(None);
        };
        let cap = self.limits().search_cap;
        let mut remaining = w.clone();
        let mut current = x;
        let mut steps: Vec<ElementaryConjugation> = Vec::new();
        let mut explored = 0usize;
        while !remaining.is_identity() {
            let mut found = None;
            for step in self.conjugations_from(current) {
                explored += 1;
                if explored > cap {
                    return Err(Error::BudgetExceeded { what: "witness factorization", limit: cap });
                }
                let rest = self.product(&remaining, &self.inverse(&step.c));
                if rest.length() + step.c.length() == remaining.length() {
                    found = Some((step, rest));
                    break;
                }
            }
            let Some((step, rest)) = found else {
                return Ok(None);
            };
            current = step.next;
            remaining = rest;
            steps.push(step);
        }
        debug_assert_eq!(current, target);
        Ok(Some(ConjugationWitness { steps, w: w.clone() }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CoxeterGraph;

    fn group(text: &str) -> CoxeterGroup {
        CoxeterGroup::new(CoxeterGraph::parse(text).unwrap())
    }

    const G1: &str = "a b\na b 3\n";
    const G2: &str = "a b\na b inf\n";
    const G3: &str = "a b c\na b inf\nb c 3\n";
    const G4: &str = "a b c\na b inf\n";
    const G5: &str = "a b c\na b 3\nb c 3\n";

    fn set(g: &CoxeterGroup, names: &str) -> GeneratorSubset {
        g.graph().parse_subset(names).unwrap()
    }

    fn w(g: &CoxeterGroup, text: &str) -> Element {
        g.parse_word(text).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let g5 = group(G5);
        let d = g5.intersect_parabolic_conjugate(set(&g5, "a,b"), set(&g5, "b,c"), &Element::identity());
        assert!(d.conjugator.is_identity());
        assert_eq!(d.core, set(&g5, "b"));

        let g1 = group(G1);
        let d = g1.intersect_parabolic_conjugate(set(&g1, "a"), set(&g1, "b"), &w(&g1, "a b a"));
        // W_a ∩ (aba) W_b (aba) = {e, a}, enumerated in the order-6 group
        assert_eq!(d.core, set(&g1, "a"));
        assert!(d.conjugator.is_identity());
        let elems: Vec<String> = g1.descriptor_elements(&d).unwrap().iter().map(|e| g1.format_word(e)).collect();
        assert_eq!(elems, ["e", "a"]);
    }

    #[test]
    fn quasi_center_examples() {
        let g1 = group(G1);
        let qz: Vec<String> = g1.quasi_center(set(&g1, "a,b")).iter().map(|e| g1.format_word(e)).collect();
        assert_eq!(qz, ["a b a"]);
        let g2 = group(G2);
        assert!(g2.quasi_center(set(&g2, "a,b")).is_empty());
        let g4 = group(G4);
        let qz: Vec<String> = g4.quasi_center(set(&g4, "a,b,c")).iter().map(|e| g4.format_word(e)).collect();
        assert_eq!(qz, ["c"]);
    }

    #[test]
    fn normalizer_examples() {
        let g4 = group(G4);
        let (v, u) = g4.normalizer_decompose(set(&g4, "a,b"), &w(&g4, "c")).unwrap();
        assert_eq!(g4.format_word(&v), "c");
        assert!(u.is_identity());
        let g3 = group(G3);
        assert!(!g3.normalizer_membership(set(&g3, "a,b"), &w(&g3, "c")));
        // c b c^-1 has length 3
        assert_eq!(g3.conjugate(&w(&g3, "c"), &w(&g3, "b")).length(), 3);
        let (v, u) = g3.normalizer_decompose(set(&g3, "a,b"), &Element::identity()).unwrap();
        assert!(v.is_identity() && u.is_identity());
    }

    #[test]
    fn quasi_centralizer_examples() {
        let g4 = group(G4);
        assert_eq!(g4.quasi_centralizer(set(&g4, "a,b")), Ok(set(&g4, "c")));
        let g3 = group(G3);
        assert_eq!(g3.quasi_centralizer(set(&g3, "a,b")), Ok(GeneratorSubset::EMPTY));
        let g1 = group(G1);
        assert!(matches!(g1.quasi_centralizer(set(&g1, "a,b")), Err(Error::HasFiniteComponent(_))));
    }

    #[test]
    fn commensurator_examples() {
        let g1 = group(G1);
        for e in g1.ball(3).unwrap() {
            assert!(g1.commensurator_membership(set(&g1, "a"), &e));
        }
        let g3 = group(G3);
        assert!(!g3.commensurator_membership(set(&g3, "a,b"), &w(&g3, "c")));
        let g4 = group(G4);
        assert!(g4.commensurator_membership(set(&g4, "a,b"), &w(&g4, "c a b")));
    }

    #[test]
    fn admissibility_examples() {
        let g4 = group(G4);
        let step = g4.elementary_conjugation(set(&g4, "a,b"), 2).unwrap();
        assert_eq!(g4.format_word(&step.c), "c");
        assert_eq!(step.next, set(&g4, "a,b"));

        let g3 = group(G3);
        assert_eq!(g3.is_admissible(set(&g3, "a,b"), 2), Ok(false));
        assert!(matches!(g3.elementary_conjugation(set(&g3, "a,b"), 2), Err(Error::NotAdmissible { .. })));
        assert!(matches!(g3.is_admissible(set(&g3, "a,b"), 0), Err(Error::GeneratorInSubset { .. })));

        let g1 = group(G1);
        let step = g1.elementary_conjugation(set(&g1, "a"), 1).unwrap();
        assert_eq!(g1.format_word(&step.c), "a b");
        assert_eq!(step.next, set(&g1, "b"));
    }

    #[test]
    fn witness_examples() {
        let g1 = group(G1);
        let wit = g1.conjugation_witness(set(&g1, "a"), set(&g1, "a")).unwrap().unwrap();
        assert!(wit.steps.is_empty() && wit.w.is_identity());
        let wit = g1.conjugation_witness(set(&g1, "a"), set(&g1, "b")).unwrap().unwrap();
        assert_eq!(wit.steps.len(), 1);
        assert_eq!(wit.steps[0].t, 1);
        assert_eq!(g1.format_word(&wit.w), "a b");
        wit.replay(&g1, set(&g1, "a"), set(&g1, "b")).unwrap();

        let g3 = group(G3);
        assert_eq!(g3.conjugation_witness(set(&g3, "a,b"), set(&g3, "b,c")).unwrap(), None);
        assert!(g3.conjugations_from(set(&g3, "a,b")).is_empty());
    }

    #[test]
    fn factor_witness_examples() {
        let g1 = group(G1);
        let wit = g1.factor_witness(set(&g1, "a"), &Element::identity()).unwrap().unwrap();
        assert!(wit.steps.is_empty());
        let wit = g1.factor_witness(set(&g1, "a"), &w(&g1, "a b")).unwrap().unwrap();
        assert_eq!(wit.steps.len(), 1);
        assert_eq!(g1.format_word(&wit.steps[0].c), "a b");
        assert_eq!(g1.factor_witness(set(&g1, "a"), &w(&g1, "a")).unwrap(), None);

        let g4 = group(G4);
        let wit = g4.factor_witness(set(&g4, "a,b"), &w(&g4, "c")).unwrap().unwrap();
        assert_eq!(wit.steps.len(), 1);
        assert_eq!(wit.steps[0].t, 2);
        assert_eq!(g4.format_word(&wit.steps[0].c), "c");
        wit.replay(&g4, set(&g4, "a,b"), set(&g4, "a,b")).unwrap();
    }

    #[test]
    fn replay_catches_tampering() {
        let g1 = group(G1);
        let mut wit = g1.conjugation_witness(set(&g1, "a"), set(&g1, "b")).unwrap().unwrap();
        assert!(wit.replay(&g1, set(&g1, "a"), set(&g1, "a")).is_err());
        wit.w = w(&g1, "b a");
        assert!(wit.replay(&g1, set(&g1, "a"), set(&g1, "b")).is_err());
    }

    #[test]
    fn factor_witness_covers_a3_ball() {
        let g5 = group(G5);
        for x in g5.graph().generators().subsets() {
            for e in g5.ball(6).unwrap() {
                match g5.factor_witness(x, &e).unwrap() {
                    Some(wit) => {
                        let to = g5.simple_image_set(&e, x).unwrap();
                        wit.replay(&g5, x, to).unwrap();
                    }
                    None => assert_eq!(g5.simple_image_set(&e, x), None),
                }
            }
        }
    }
}
