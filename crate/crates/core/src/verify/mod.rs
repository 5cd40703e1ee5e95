//! Brute-force oracles and the cross-check suites built on them.
//!
//! Every check compares a library operation against a second computation
//! that does not call it: group elements are enumerated and multiplied
//! directly, subgroup membership is decided by support, and lengths by root
//! signs. A check produces a [`CheckReport`] listing every mismatch.
//!
//! Ball laws take two groups. The oracle side is always evaluated in the
//! true group; the formula side is evaluated in a second group that is
//! normally the same one, but may be built from a perturbed graph to make
//! sure a wrong formula is caught (negative controls).

mod suite;

pub use suite::{run_suite, CheckSpec, Config, LawKind};

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::CanonicalRepresentation;
use crate::subset::GeneratorSubset;
use crate::words::{CoxeterGroup, Element};

/// One mismatch between the two sides of a check. `element` is a word in
/// the generator names of the checked graph, so the case can be replayed
/// from the record alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub element: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check_name: String,
    pub graph_name: String,
    pub subset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<usize>,
    pub elements_checked: usize,
    pub failures: Vec<Counterexample>,
}

impl CheckReport {
    fn new(check_name: &str, graph_name: &str, subset: String) -> Self {
        CheckReport {
            check_name: check_name.to_string(),
            graph_name: graph_name.to_string(),
            subset,
            radius: None,
            group_order: None,
            elements_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, element: String, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.failures.push(Counterexample { element, expected: expected.to_string(), actual: actual.to_string() });
    }
}

/// The laws checked element by element on a ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Law {
    Commensurator,
    Normalizer,
    QuasiCentralizer,
    DualLength,
    Lemma31Uniqueness,
}

impl Law {
    pub const ALL: [Law; 5] =
        [Law::Commensurator, Law::Normalizer, Law::QuasiCentralizer, Law::DualLength, Law::Lemma31Uniqueness];

    pub fn name(self) -> &'static str {
        match self {
            Law::Commensurator => "commensurator",
            Law::Normalizer => "normalizer",
            Law::QuasiCentralizer => "quasiCentralizer",
            Law::DualLength => "dualLength",
            Law::Lemma31Uniqueness => "lemma31Uniqueness",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Law::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| format!("unknown law `{s}`"))
    }
}

fn format_set(group: &CoxeterGroup, x: GeneratorSubset) -> String {
    format!("{{{}}}", group.graph().format_subset(x))
}

fn format_bool(b: bool) -> &'static str {
    if b {
        "member"
    } else {
        "non-member"
    }
}

fn check_rank(oracle: &CoxeterGroup, formula: &CoxeterGroup) -> Result<()> {
    if oracle.rank() != formula.rank() {
        return Err(Error::RankMismatch(oracle.rank(), formula.rank()));
    }
    Ok(())
}

fn check_subset(group: &CoxeterGroup, x: GeneratorSubset) -> Result<()> {
    if let Some(s) = (x - group.graph().generators()).first() {
        return Err(Error::InvalidGeneratorIndex { index: s, rank: group.rank() });
    }
    Ok(())
}

/// Every element of the whole (finite) group, within the configured order cap.
fn whole_group(group: &CoxeterGroup) -> Result<Vec<Element>> {
    group.subgroup_elements(group.graph().generators(), group.limits().group_order_cap)
}

/// `{ h : h ∈ W_x and w^-1 h w ∈ W_x' }`, by running through the elements of
/// `W_x` and testing the support of each conjugate.
pub fn brute_force_intersection(
    group: &CoxeterGroup,
    x: GeneratorSubset,
    x_prime: GeneratorSubset,
    w: &Element,
) -> Result<BTreeSet<Element>> {
    whole_group(group)?;
    let w_inv = group.inverse(w);
    let mut out = BTreeSet::new();
    for h in group.subgroup_elements(x, group.limits().group_order_cap)? {
        if group.product_all([&w_inv, &h, w]).support().is_subset(x_prime) {
            out.insert(h);
        }
    }
    Ok(out)
}

/// Whether `w s w^-1` and `w^-1 s w` lie in `W_x` for every `s ∈ x`, i.e.
/// whether `w W_x w^-1 = W_x`.
pub fn normalizes_directly(group: &CoxeterGroup, x: GeneratorSubset, w: &Element) -> bool {
    let w_inv = group.inverse(w);
    x.iter().all(|s| {
        let s = group.generator(s);
        group.product_all([w, &s, &w_inv]).support().is_subset(x)
            && group.product_all([&w_inv, &s, w]).support().is_subset(x)
    })
}

/// Whether conjugation by `w` permutes the generators in `x`.
pub fn permutes_directly(group: &CoxeterGroup, x: GeneratorSubset, w: &Element) -> bool {
    let w_inv = group.inverse(w);
    let image: HashSet<Element> = x.iter().map(|s| group.product_all([w, &group.generator(s), &w_inv])).collect();
    image.len() == x.len() && image.iter().all(|g| g.length() == 1 && x.contains(g.word()[0] as usize))
}

/// Evaluates `law` on every element of the radius-`radius` ball of `oracle`.
///
/// Ball elements are words of the oracle group; the formula side re-reduces
/// them in `formula`, which must have the same rank (pass the same group
/// twice for an ordinary check).
pub fn ball_check(
    oracle: &CoxeterGroup,
    formula: &CoxeterGroup,
    graph_name: &str,
    x: GeneratorSubset,
    radius: usize,
    law: Law,
) -> Result<CheckReport> {
    check_rank(oracle, formula)?;
    check_subset(oracle, x)?;
    let mut report = CheckReport::new(law.name(), graph_name, format_set(oracle, x));
    report.radius = Some(radius);
    let ball = oracle.ball(radius)?;
    report.elements_checked = ball.len();
    let name = |w: &Element| oracle.format_word(w);
    let to_formula = |w: &Element| formula.normal_form(&w.letters().collect::<Vec<_>>());

    match law {
        Law::Commensurator => {
            let closed_form = formula.graph().analyze_parabolic(x).commensurator;
            for w in &ball {
                let expected = oracle.commensurator_membership(x, w);
                let actual = w.support().is_subset(closed_form);
                if expected != actual {
                    report.fail(name(w), format_bool(expected), format_bool(actual));
                }
            }
        }
        Law::Normalizer => {
            for w in &ball {
                let expected = normalizes_directly(oracle, x, w);
                let wf = to_formula(w)?;
                let decomposition = formula.normalizer_decompose(x, &wf);
                if expected != decomposition.is_some() {
                    report.fail(name(w), format_bool(expected), format_bool(decomposition.is_some()));
                    continue;
                }
                if let Some((v, u)) = decomposition {
                    if let Err(problem) = check_normalizer_decomposition(formula, x, &wf, &v, &u) {
                        report.fail(name(w), "valid decomposition w = v u", problem);
                    }
                }
            }
        }
        Law::QuasiCentralizer => {
            let (x0, _) = oracle.graph().decompose_subset(x);
            if !x0.is_empty() {
                return Err(Error::HasFiniteComponent(oracle.graph().format_subset(x)));
            }
            let y = formula.quasi_centralizer(x)?;
            for w in &ball {
                let expected = permutes_directly(oracle, x, w);
                let actual = w.support().is_subset(y);
                if expected != actual {
                    report.fail(name(w), format_bool(expected), format_bool(actual));
                }
            }
        }
        Law::DualLength => {
            let rep = CanonicalRepresentation::new(formula.graph())?;
            for w in &ball {
                let letters: Vec<usize> = w.letters().collect();
                let actual = rep.root_length(&letters)?;
                if w.length() != actual {
                    report.fail(name(w), w.length(), actual);
                }
            }
        }
        Law::Lemma31Uniqueness => {
            let subgroup = oracle.ball_in(x, radius)?;
            for w in &ball {
                let (min_len, minima) = brute_force_double_coset_minima(oracle, &subgroup, x, x, w);
                let d = formula.double_coset_decompose(&to_formula(w)?, x, x);
                let v = oracle.normal_form(&d.v.letters().collect::<Vec<_>>())?;
                let expected = format!("unique minimum of length {min_len}");
                if minima.len() != 1 {
                    report.fail(name(w), expected, format!("{} minima of length {min_len}", minima.len()));
                } else if v != minima[0] {
                    report.fail(name(w), oracle.format_word(&minima[0]), oracle.format_word(&v));
                }
            }
        }
    }
    Ok(report)
}

/// Checks the decomposition returned for a normalizer member:
/// `w = v u`, `u ∈ W_x`, `v x v^-1 = x`, `l(vs) > l(v)` for `s ∈ x`, and,
/// when `w` itself permutes `x`, `u x u^-1 = x`.
fn check_normalizer_decomposition(
    group: &CoxeterGroup,
    x: GeneratorSubset,
    w: &Element,
    v: &Element,
    u: &Element,
) -> Result<(), String> {
    if group.product(v, u) != *w {
        return Err("v u differs from w".into());
    }
    if !u.support().is_subset(x) {
        return Err(format!("u = {} lies outside W_x", group.format_word(u)));
    }
    if !permutes_directly(group, x, v) {
        return Err(format!("v = {} does not permute x", group.format_word(v)));
    }
    if let Some(s) = x.iter().find(|&s| group.mul_gen(v, s).length() < v.length()) {
        return Err(format!("l(v {}) < l(v)", group.graph().name(s)));
    }
    if permutes_directly(group, x, w) && !permutes_directly(group, x, u) {
        return Err(format!("w permutes x but u = {} does not", group.format_word(u)));
    }
    Ok(())
}

/// The minimal-length elements of `A w B` with `A`, `B` given by their
/// elements (`subgroup` for both sides; only those inside `x`, `x_prime`).
fn brute_force_double_coset_minima(
    group: &CoxeterGroup,
    subgroup: &[Element],
    x: GeneratorSubset,
    x_prime: GeneratorSubset,
    w: &Element,
) -> (usize, Vec<Element>) {
    let left: Vec<&Element> = subgroup.iter().filter(|a| a.support().is_subset(x)).collect();
    let right: Vec<&Element> = subgroup.iter().filter(|b| b.support().is_subset(x_prime)).collect();
    let mut min_len = usize::MAX;
    let mut minima = BTreeSet::new();
    for a in &left {
        let aw = group.product(a, w);
        for b in &right {
            let c = group.product(&aw, b);
            if c.length() < min_len {
                min_len = c.length();
                minima.clear();
            }
            if c.length() == min_len {
                minima.insert(c);
            }
        }
    }
    (min_len, minima.into_iter().collect())
}

/// Compares the descriptor of `W_x ∩ w W_x' w^-1` with the brute-force
/// intersection for every `x`, `x'` and every `w` in a finite group.
pub fn intersection_check(group: &CoxeterGroup, graph_name: &str) -> Result<CheckReport> {
    let elements = whole_group(group)?;
    let mut report = CheckReport::new("intersection", graph_name, "*".into());
    report.group_order = Some(elements.len());
    for x in group.graph().generators().subsets() {
        for x_prime in group.graph().generators().subsets() {
            for w in &elements {
                report.elements_checked += 1;
                let expected = brute_force_intersection(group, x, x_prime, w)?;
                let desc = group.intersect_parabolic_conjugate(x, x_prime, w);
                let actual: BTreeSet<Element> = group.descriptor_elements(&desc)?.into_iter().collect();
                if expected != actual {
                    report.fail(
                        format!("{} with x={}, x'={}", group.format_word(w), format_set(group, x), format_set(group, x_prime)),
                        format_elements(group, &expected),
                        format_elements(group, &actual),
                    );
                }
            }
        }
    }
    Ok(report)
}

fn format_elements(group: &CoxeterGroup, set: &BTreeSet<Element>) -> String {
    let words: Vec<String> = set.iter().map(|w| group.format_word(w)).collect();
    format!("[{}]", words.join("; "))
}

/// For every `x`, `x'` and every double coset `W_x w W_x'` of a finite group:
/// exactly one element of minimal length, found by the decomposition, with
/// `l(w) = l(u) + l(v) + l(u')`.
pub fn double_coset_check(group: &CoxeterGroup, graph_name: &str) -> Result<CheckReport> {
    let elements = whole_group(group)?;
    let mut report = CheckReport::new("lemma31Uniqueness", graph_name, "*".into());
    report.group_order = Some(elements.len());
    for x in group.graph().generators().subsets() {
        for x_prime in group.graph().generators().subsets() {
            let mut seen: HashSet<Element> = HashSet::new();
            for w in &elements {
                report.elements_checked += 1;
                let context = || {
                    format!("{} with x={}, x'={}", group.format_word(w), format_set(group, x), format_set(group, x_prime))
                };
                let d = group.double_coset_decompose(w, x, x_prime);
                if group.product_all([&d.u, &d.v, &d.u_prime]) != *w
                    || d.u.length() + d.v.length() + d.u_prime.length() != w.length()
                    || !d.u.support().is_subset(x)
                    || !d.u_prime.support().is_subset(x_prime)
                {
                    report.fail(context(), "w = u v u' with additive lengths", "invalid decomposition");
                    continue;
                }
                if !seen.insert(d.v.clone()) {
                    continue;
                }
                // first visit of this double coset: enumerate it completely
                let (min_len, minima) = brute_force_double_coset_minima(group, &elements, x, x_prime, w);
                if minima.len() != 1 {
                    report.fail(context(), "unique minimum", format!("{} minima of length {min_len}", minima.len()));
                } else if minima[0] != d.v {
                    report.fail(context(), group.format_word(&minima[0]), group.format_word(&d.v));
                }
            }
        }
    }
    Ok(report)
}

/// Properties of the longest element of a finite-type `W_x`: an involution
/// that permutes `x` by conjugation, with `l(w w0) = l(w0 w) = l(w0) - l(w)`
/// for every `w ∈ W_x`.
pub fn longest_element_check(group: &CoxeterGroup, graph_name: &str, x: GeneratorSubset) -> Result<CheckReport> {
    check_subset(group, x)?;
    let mut report = CheckReport::new("longestElement", graph_name, format_set(group, x));
    let w0 = group.longest_element(x)?;
    let elements = group.subgroup_elements(x, group.limits().group_order_cap)?;
    report.group_order = Some(elements.len());
    let w0_name = group.format_word(&w0);
    if !group.product(&w0, &w0).is_identity() {
        report.fail(w0_name.clone(), "w0^2 = e", "w0^2 != e");
    }
    if !permutes_directly(group, x, &w0) {
        report.fail(w0_name.clone(), "w0 x w0 = x", "w0 does not permute x");
    }
    let max_len = elements.iter().map(Element::length).max().unwrap_or(0);
    if w0.length() != max_len {
        report.fail(w0_name, max_len, w0.length());
    }
    for w in &elements {
        report.elements_checked += 1;
        let expected = w0.length() - w.length().min(w0.length());
        for (side, actual) in [("w w0", group.product(w, &w0).length()), ("w0 w", group.product(&w0, w).length())] {
            if actual != expected {
                report.fail(group.format_word(w), format!("l({side}) = {expected}"), actual);
            }
        }
    }
    Ok(report)
}

/// Whole-group enumeration order against the order read off the
/// classification table.
pub fn order_check(group: &CoxeterGroup, graph_name: &str) -> Result<CheckReport> {
    let all = group.graph().generators();
    let mut report = CheckReport::new("order", graph_name, format_set(group, all));
    let mut expected = num_bigint::BigUint::from(1u32);
    for (part, ty) in group.graph().classify_subset(all) {
        match ty.order {
            Some(order) => expected *= order,
            None => return Err(Error::InfiniteType(group.graph().format_subset(part))),
        }
    }
    let elements = whole_group(group)?;
    report.group_order = Some(elements.len());
    report.elements_checked = elements.len();
    if num_bigint::BigUint::from(elements.len()) != expected {
        report.fail("e".into(), expected, elements.len());
    }
    Ok(report)
}

/// Replays conjugation witnesses: one from `x` to every reachable subset,
/// and a factorization of every ball element that maps the simple roots of
/// `x` onto simple roots. When `x` has no finite component, every step must
/// be a single generator commuting with `x`.
pub fn witness_check(group: &CoxeterGroup, graph_name: &str, x: GeneratorSubset, radius: usize) -> Result<CheckReport> {
    check_subset(group, x)?;
    let mut report = CheckReport::new("witness", graph_name, format_set(group, x));
    report.radius = Some(radius);
    let infinite_only = group.graph().decompose_subset(x).0.is_empty();
    let perp = group.graph().perpendicular_set(x);
    let single_commuting = |w: &crate::parabolic::ConjugationWitness| {
        w.steps.iter().all(|step| step.c == group.generator(step.t) && perp.contains(step.t) && step.next == step.x)
    };

    for target in group.graph().generators().subsets() {
        if target.len() != x.len() {
            continue;
        }
        report.elements_checked += 1;
        if let Some(witness) = group.conjugation_witness(x, target)? {
            let label = format!("chain {} -> {}", format_set(group, x), format_set(group, target));
            if let Err(problem) = witness.replay(group, x, target) {
                report.fail(label, "replayable chain", problem);
            } else if infinite_only && !single_commuting(&witness) {
                report.fail(label, "single commuting generators", "other step");
            }
        }
    }

    for w in group.ball(radius)? {
        report.elements_checked += 1;
        let image = group.simple_image_set(&w, x);
        match (group.factor_witness(x, &w)?, image) {
            (None, None) => {}
            (None, Some(target)) => report.fail(group.format_word(&w), format_set(group, target), "no factorization"),
            (Some(_), None) => report.fail(group.format_word(&w), "no factorization", "factorization"),
            (Some(witness), Some(target)) => {
                if let Err(problem) = witness.replay(group, x, target) {
                    report.fail(group.format_word(&w), "replayable factorization", problem);
                } else if infinite_only && target == x && !single_commuting(&witness) {
                    report.fail(group.format_word(&w), "single commuting generators", "other step");
                }
            }
        }
    }
    Ok(report)
}

/// Number of cosets `w W_y` met by the elements of `W_x` of length at most
/// `r`, for `r = 0..=radius`.
///
/// Only weak evidence that `W_y` has infinite index in `W_x`.
pub fn growth_probe(group: &CoxeterGroup, x: GeneratorSubset, y: GeneratorSubset, radius: usize) -> Result<Vec<usize>> {
    check_subset(group, x)?;
    let (x0, _) = group.graph().decompose_subset(x);
    if x.is_empty() || !x0.is_empty() {
        return Err(Error::HasFiniteComponent(group.graph().format_subset(x)));
    }
    if !y.is_subset(x) || y == x {
        return Err(Error::InvalidTarget {
            target: group.graph().format_subset(y),
            x: group.graph().format_subset(x),
        });
    }
    let mut counts = Vec::with_capacity(radius + 1);
    let mut cosets: HashSet<Element> = HashSet::new();
    let elements = group.ball_in(x, radius)?;
    let mut i = 0;
    for r in 0..=radius {
        while i < elements.len() && elements[i].length() <= r {
            cosets.insert(group.right_coset_decompose(&elements[i], y).0);
            i += 1;
        }
        counts.push(cosets.len());
    }
    Ok(counts)
}

/// Runs [`growth_probe`] and reports a failure unless the counts are
/// nondecreasing and strictly increase at three radii or more.
pub fn growth_check(
    group: &CoxeterGroup,
    graph_name: &str,
    x: GeneratorSubset,
    y: GeneratorSubset,
    radius: usize,
) -> Result<CheckReport> {
    let counts = growth_probe(group, x, y, radius)?;
    let mut report =
        CheckReport::new("growth", graph_name, format!("{} over {}", format_set(group, x), format_set(group, y)));
    report.radius = Some(radius);
    report.elements_checked = counts.len();
    let increases = counts.windows(2).filter(|p| p[1] > p[0]).count();
    let monotone = counts.windows(2).all(|p| p[1] >= p[0]);
    if !monotone || increases < 3 {
        report.fail(format!("{counts:?}"), "nondecreasing with >= 3 increases", format!("{increases} increases"));
    }
    Ok(report)
}
