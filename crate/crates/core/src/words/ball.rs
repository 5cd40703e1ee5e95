use crate::error::{Error, Result};
use crate::subset::GeneratorSubset;

use super::{CoxeterGroup, Element, Side};

impl CoxeterGroup {
    /// All elements of length at most `radius`, each once, in ShortLex order.
    pub fn ball(&self, radius: usize) -> Result<Vec<Element>> {
        self.ball_in(self.graph().generators(), radius)
    }

    /// Elements of the parabolic subgroup `W_x` of length at most `radius`.
    /// Lengths in `W_x` agree with lengths in `W`.
    pub fn ball_in(&self, x: GeneratorSubset, radius: usize) -> Result<Vec<Element>> {
        let mut out = vec![Element::identity()];
        let mut level = vec![Element::identity()];
        for _ in 0..radius {
            level = self.next_level(&level, x);
            if level.is_empty() {
                break;
            }
            if out.len() + level.len() > self.limits().ball_cap {
                return Err(Error::BudgetExceeded { what: "ball enumeration", limit: self.limits().ball_cap });
            }
            out.extend(level.iter().cloned());
        }
        Ok(out)
    }

    /// Sizes of the spheres of radius `0..=radius`.
    pub fn sphere_sizes(&self, radius: usize) -> Result<Vec<usize>> {
        let mut sizes = vec![1];
        let mut level = vec![Element::identity()];
        let mut total = 1;
        for _ in 0..radius {
            level = self.next_level(&level, self.graph().generators());
            total += level.len();
            if total > self.limits().ball_cap {
                return Err(Error::BudgetExceeded { what: "ball enumeration", limit: self.limits().ball_cap });
            }
            sizes.push(level.len());
        }
        Ok(sizes)
    }

    /// Every element of the finite parabolic subgroup `W_x`, in ShortLex order.
    /// Fails once more than `cap` elements have been produced.
    pub fn subgroup_elements(&self, x: GeneratorSubset, cap: usize) -> Result<Vec<Element>> {
        let mut out = vec![Element::identity()];
        let mut level = vec![Element::identity()];
        while !level.is_empty() {
            level = self.next_level(&level, x);
            out.extend(level.iter().cloned());
            if out.len() > cap {
                return Err(Error::BudgetExceeded { what: "subgroup enumeration", limit: cap });
            }
        }
        Ok(out)
    }

    fn next_level(&self, level: &[Element], x: GeneratorSubset) -> Vec<Element> {
        let mut next = Vec::new();
        for w in level {
            for s in x - self.descents(w, Side::Right) {
                next.push(self.mul_gen(w, s));
            }
        }
        next.sort_unstable();
        next.dedup();
        next
    }
}
