use std::collections::HashSet;

use crate::graph::CoxeterGraph;

/// Closes a set of reduced words under braid moves
/// `sts... = tst...` (both sides of length `m(s,t)`, `m` finite).
///
/// All seeds must be reduced words of one and the same element; the result is
/// then that element's full set of reduced words.
pub(super) fn closure(graph: &CoxeterGraph, seeds: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(seeds.len() * 2);
    let mut stack = Vec::with_capacity(seeds.len());
    for seed in seeds {
        if seen.insert(seed.clone()) {
            stack.push(seed);
        }
    }
    while let Some(word) = stack.pop() {
        for i in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            debug_assert_ne!(a, b, "braid closure seeded with a non-reduced word");
            let Some(m) = graph.label(a as usize, b as usize).finite() else {
                continue;
            };
            let m = m as usize;
            if i + m > word.len() {
                continue;
            }
            let alternates = word[i..i + m]
                .iter()
                .enumerate()
                .all(|(k, &l)| l == if k % 2 == 0 { a } else { b });
            if !alternates {
                continue;
            }
            let mut moved = word.clone();
            for (k, l) in moved[i..i + m].iter_mut().enumerate() {
                *l = if k % 2 == 0 { b } else { a };
            }
            if seen.insert(moved.clone()) {
                stack.push(moved);
            }
        }
    }
    seen.into_iter().collect()
}
