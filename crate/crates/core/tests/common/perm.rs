//! Permutation models of small finite Coxeter groups, used as an independent
//! oracle for normal forms and group orders.

#![allow(dead_code)]

use std::collections::HashMap;

pub type Perm = Vec<usize>;

pub struct PermGroup {
    gens: Vec<Perm>,
    // permutation -> ShortLex-least word
    words: HashMap<Perm, Vec<usize>>,
}

fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

impl PermGroup {
    /// Breadth-first search processing words in ShortLex order, so the first
    /// word to reach a permutation is its ShortLex-least word.
    pub fn new(gens: Vec<Perm>) -> Self {
        let degree = gens[0].len();
        let id: Perm = (0..degree).collect();
        let mut words = HashMap::new();
        words.insert(id.clone(), Vec::new());
        let mut level = vec![(id, Vec::new())];
        while !level.is_empty() {
            let mut next = Vec::new();
            for (p, word) in &level {
                for (s, g) in gens.iter().enumerate() {
                    let q = compose(p, g);
                    if !words.contains_key(&q) {
                        let mut w: Vec<usize> = word.clone();
                        w.push(s);
                        words.insert(q.clone(), w.clone());
                        next.push((q, w));
                    }
                }
            }
            level = next;
        }
        PermGroup { gens, words }
    }

    /// Type A_n as S_{n+1} with adjacent transpositions.
    pub fn symmetric(n: usize) -> Self {
        let gens = (0..n)
            .map(|i| {
                let mut p: Perm = (0..=n).collect();
                p.swap(i, i + 1);
                p
            })
            .collect();
        Self::new(gens)
    }

    /// Type B_n as signed permutations on points `0..n` (positive) and
    /// `n..2n` (negative). Generator 0 negates the first coordinate, generator
    /// `i > 0` swaps coordinates `i-1` and `i`; so `m(0,1) = 4`.
    pub fn hyperoctahedral(n: usize) -> Self {
        let mut gens = Vec::new();
        let mut flip: Perm = (0..2 * n).collect();
        flip.swap(0, n);
        gens.push(flip);
        for i in 1..n {
            let mut p: Perm = (0..2 * n).collect();
            p.swap(i - 1, i);
            p.swap(n + i - 1, n + i);
            gens.push(p);
        }
        Self::new(gens)
    }

    /// Dihedral group I_2(m) acting on the vertices of an m-gon.
    pub fn dihedral(m: usize) -> Self {
        let a: Perm = (0..m).map(|i| (m - i) % m).collect();
        let b: Perm = (0..m).map(|i| (m + 1 - i) % m).collect();
        Self::new(vec![a, b])
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn perm_of(&self, letters: &[usize]) -> Perm {
        let degree = self.gens[0].len();
        letters
            .iter()
            .fold((0..degree).collect(), |acc: Perm, &s| compose(&acc, &self.gens[s]))
    }

    pub fn min_word(&self, letters: &[usize]) -> Vec<usize> {
        self.words[&self.perm_of(letters)].clone()
    }

    /// ShortLex-least words of every element, sorted ShortLex.
    pub fn all_words(&self) -> Vec<Vec<usize>> {
        let mut all: Vec<_> = self.words.values().cloned().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    pub fn length(&self, letters: &[usize]) -> usize {
        self.min_word(letters).len()
    }
}
