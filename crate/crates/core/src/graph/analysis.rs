use serde::Serialize;

use crate::subset::GeneratorSubset;

use super::{ComponentType, CoxeterGraph};

/// Splitting of a parabolic subgroup `W_X` into its finite part `X0` and its
/// infinite part `Xinf`, with the resulting commensurator `W_{Yinf ∪ Xinf}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicAnalysis {
    pub subset: GeneratorSubset,
    pub components: Vec<(GeneratorSubset, ComponentType)>,
    pub x0: GeneratorSubset,
    pub xinf: GeneratorSubset,
    pub yinf: GeneratorSubset,
    pub commensurator: GeneratorSubset,
    pub self_commensurating: bool,
}

impl CoxeterGraph {
    /// Returns `(X0, Xinf)`: the unions of the finite and of the infinite
    /// irreducible components of `x`.
    pub fn decompose_subset(&self, x: GeneratorSubset) -> (GeneratorSubset, GeneratorSubset) {
        let mut x0 = GeneratorSubset::EMPTY;
        let mut xinf = GeneratorSubset::EMPTY;
        for (part, ty) in self.classify_subset(x) {
            if ty.is_finite() {
                x0 = x0 | part;
            } else {
                xinf = xinf | part;
            }
        }
        (x0, xinf)
    }

    /// Generators `t` with `m(s,t) = 2` for every `s` in `x`.
    ///
    /// Members of `x` never qualify since `m(s,s) = 1`; the empty set yields
    /// every generator.
    pub fn perpendicular_set(&self, x: GeneratorSubset) -> GeneratorSubset {
        self.generators()
            .iter()
            .filter(|&t| {
                x.iter()
                    .all(|s| self.label(s, t) == super::Label::Finite(2))
            })
            .collect()
    }

    pub fn analyze_parabolic(&self, x: GeneratorSubset) -> ParabolicAnalysis {
        let components = self.classify_subset(x);
        let (x0, xinf) = self.decompose_subset(x);
        let yinf = self.perpendicular_set(xinf);
        ParabolicAnalysis {
            subset: x,
            components,
            x0,
            xinf,
            yinf,
            commensurator: yinf | xinf,
            self_commensurating: x0 == yinf,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(text: &str) -> CoxeterGraph {
        CoxeterGraph::parse(text).unwrap()
    }

    fn set(g: &CoxeterGraph, names: &str) -> GeneratorSubset {
        g.parse_subset(names).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let g4 = graph("a b c\na b inf\n");
        assert_eq!(g4.decompose_subset(g4.generators()), (set(&g4, "c"), set(&g4, "a,b")));
        let g1 = graph("a b\na b 3\n");
        assert_eq!(g1.decompose_subset(g1.generators()), (set(&g1, "a,b"), GeneratorSubset::EMPTY));
        assert_eq!(
            g1.decompose_subset(GeneratorSubset::EMPTY),
            (GeneratorSubset::EMPTY, GeneratorSubset::EMPTY)
        );
    }

    #[test]
    fn perpendicular_examples() {
        let g4 = graph("a b c\na b inf\n");
        assert_eq!(g4.perpendicular_set(set(&g4, "a,b")), set(&g4, "c"));
        let g3 = graph("a b c\na b inf\nb c 3\n");
        assert_eq!(g3.perpendicular_set(set(&g3, "a,b")), GeneratorSubset::EMPTY);
        assert_eq!(g3.perpendicular_set(GeneratorSubset::EMPTY), g3.generators());
    }

    #[test]
    fn analyze_examples() {
        let g3 = graph("a b c\na b inf\nb c 3\n");
        let an = g3.analyze_parabolic(set(&g3, "a,b"));
        assert_eq!(an.xinf, set(&g3, "a,b"));
        assert_eq!(an.yinf, GeneratorSubset::EMPTY);
        assert_eq!(an.commensurator, set(&g3, "a,b"));
        assert!(an.self_commensurating);

        let g1 = graph("a b\na b 3\n");
        let an = g1.analyze_parabolic(set(&g1, "a"));
        assert_eq!(an.xinf, GeneratorSubset::EMPTY);
        assert_eq!(an.commensurator, g1.generators());
        assert!(!an.self_commensurating);

        let g4 = graph("a b c\na b inf\n");
        assert_eq!(g4.analyze_parabolic(set(&g4, "a,b")).commensurator, g4.generators());
    }

    fn arb_graph() -> impl Strategy<Value = CoxeterGraph> {
        (2usize..=6).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(
                prop_oneof![4 => Just(2u32), 3 => Just(3), 1 => Just(4), 1 => Just(5), 1 => Just(0)],
                pairs,
            )
            .prop_map(move |labels| {
                let names = (0..n).map(|i| format!("g{i}")).collect();
                let mut edges = Vec::new();
                let mut k = 0;
                for s in 0..n {
                    for t in s + 1..n {
                        let m = match labels[k] {
                            0 => super::super::Label::Infinite,
                            m => super::super::Label::Finite(m),
                        };
                        edges.push((s, t, m));
                        k += 1;
                    }
                }
                CoxeterGraph::new(names, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn decomposition_partitions_into_whole_components(g in arb_graph(), bits in any::<u64>()) {
            let x = GeneratorSubset::from_bits(bits) & g.generators();
            let (x0, xinf) = g.decompose_subset(x);
            prop_assert!(x0.is_disjoint(xinf));
            prop_assert_eq!(x0 | xinf, x);
            for part in g.connected_components(x) {
                prop_assert!(part.is_subset(x0) || part.is_subset(xinf));
            }
        }

        #[test]
        fn perpendicular_is_antitone(g in arb_graph(), a in any::<u64>(), b in any::<u64>()) {
            let x = GeneratorSubset::from_bits(a) & g.generators();
            let bigger = x | (GeneratorSubset::from_bits(b) & g.generators());
            prop_assert!(g.perpendicular_set(bigger).is_subset(g.perpendicular_set(x)));
        }

        #[test]
        fn commensurator_contains_infinite_part(g in arb_graph(), bits in any::<u64>()) {
            let x = GeneratorSubset::from_bits(bits) & g.generators();
            let an = g.analyze_parabolic(x);
            prop_assert!(an.xinf.is_subset(an.commensurator));
            prop_assert_eq!(an.commensurator, an.yinf | an.xinf);
            prop_assert_eq!(x.is_subset(an.commensurator), an.x0.is_subset(an.yinf));
            if an.self_commensurating {
                prop_assert_eq!(an.commensurator, x);
            }
        }

        #[test]
        fn empty_subset_commensurator_is_everything(g in arb_graph()) {
            prop_assert_eq!(g.analyze_parabolic(GeneratorSubset::EMPTY).commensurator, g.generators());
        }

        #[test]
        fn classification_ignores_names(g in arb_graph(), rot in 0usize..6) {
            // rotate generator order and compare component types
            let n = g.rank();
            let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
            let names = perm.iter().map(|&i| g.name(i).to_string()).collect();
            let edges = g.edges().map(|(s, t, m)| {
                (perm.iter().position(|&p| p == s).unwrap(), perm.iter().position(|&p| p == t).unwrap(), m)
            });
            let h = CoxeterGraph::new(names, edges.collect::<Vec<_>>()).unwrap();
            let mut a: Vec<_> = g.classify_subset(g.generators()).into_iter().map(|(_, t)| t.kind.to_string()).collect();
            let mut b: Vec<_> = h.classify_subset(h.generators()).into_iter().map(|(_, t)| t.kind.to_string()).collect();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }
    }
}
