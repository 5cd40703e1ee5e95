use std::collections::BTreeSet;
use std::path::Path;

use coxeter_core::verify::{
    self, ball_check, brute_force_intersection, growth_probe, run_suite, Config, Law, LawKind,
};
use coxeter_core::{CoxeterGraph, CoxeterGroup, Error, GeneratorSubset};

const G1: &str = "a b\na b 3\n";
const G2: &str = "a b\na b inf\n";
const G3: &str = "a b c\na b inf\nb c 3\n";
const G4: &str = "a b c\na b inf\n";
const G5: &str = "a b c\na b 3\nb c 3\n";

fn group(text: &str) -> CoxeterGroup {
    CoxeterGroup::new(CoxeterGraph::parse(text).unwrap())
}

fn set(g: &CoxeterGroup, names: &str) -> GeneratorSubset {
    g.graph().parse_subset(names).unwrap()
}

#[test]
fn identity_intersection_is_the_meet() {
    let g = group(G5);
    for x in g.graph().generators().subsets() {
        for y in g.graph().generators().subsets() {
            let got = brute_force_intersection(&g, x, y, &g.parse_word("e").unwrap()).unwrap();
            let expected: BTreeSet<_> = g.subgroup_elements(x & y, 100).unwrap().into_iter().collect();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn intersection_example_in_a2() {
    // aba W_b aba = W_a, so W_a ∩ aba W_b aba = W_a
    let g = group(G1);
    let w = g.parse_word("a b a").unwrap();
    let got = brute_force_intersection(&g, set(&g, "a"), set(&g, "b"), &w).unwrap();
    let words: Vec<String> = got.iter().map(|e| g.format_word(e)).collect();
    assert_eq!(words, ["e", "a"]);
    let desc = g.intersect_parabolic_conjugate(set(&g, "a"), set(&g, "b"), &w);
    assert_eq!(g.descriptor_elements(&desc).unwrap().into_iter().collect::<BTreeSet<_>>(), got);
}

#[test]
fn intersection_refuses_infinite_groups() {
    let g = group(G2);
    let err = brute_force_intersection(&g, set(&g, "a"), set(&g, "b"), &g.parse_word("a").unwrap());
    assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
}

#[test]
fn ball_law_examples() {
    let g3 = group(G3);
    let report = ball_check(&g3, &g3, "G3", set(&g3, "a,b"), 8, Law::Commensurator).unwrap();
    assert!(report.passed());
    assert_eq!(report.radius, Some(8));
    let g4 = group(G4);
    assert!(ball_check(&g4, &g4, "G4", set(&g4, "a,b"), 8, Law::QuasiCentralizer).unwrap().passed());
    for law in Law::ALL {
        let report = ball_check(&g4, &g4, "G4", GeneratorSubset::EMPTY, 0, law).unwrap();
        assert!(report.passed());
        assert_eq!(report.elements_checked, 1);
    }
}

#[test]
fn quasi_centralizer_law_needs_infinite_subset() {
    let g = group(G4);
    assert!(matches!(
        ball_check(&g, &g, "G4", set(&g, "c"), 2, Law::QuasiCentralizer),
        Err(Error::HasFiniteComponent(_))
    ));
}

#[test]
fn perturbed_formula_is_caught() {
    let g4 = group(G4);
    let bad = CoxeterGroup::new(g4.graph().with_label(0, 2, coxeter_core::Label::Finite(3)).unwrap());
    let report = ball_check(&g4, &bad, "G4", set(&g4, "a,b"), 3, Law::Commensurator).unwrap();
    assert!(report.failures.iter().any(|f| f.element == "c" && f.expected == "member" && f.actual == "non-member"));
}

#[test]
fn growth_examples() {
    let g2 = group(G2);
    assert_eq!(growth_probe(&g2, set(&g2, "a,b"), GeneratorSubset::EMPTY, 3).unwrap(), [1, 3, 5, 7]);
    assert_eq!(growth_probe(&g2, set(&g2, "a,b"), GeneratorSubset::EMPTY, 0).unwrap(), [1]);
    let g3 = group(G3);
    // cosets w W_a are represented by the alternating words ending in b
    assert_eq!(growth_probe(&g3, set(&g3, "a,b"), set(&g3, "a"), 8).unwrap(), [1, 2, 3, 4, 5, 6, 7, 8, 9]);
    assert!(verify::growth_check(&g3, "G3", set(&g3, "a,b"), set(&g3, "a"), 8).unwrap().passed());
    // too few radii to see three increases
    assert!(!verify::growth_check(&g3, "G3", set(&g3, "a,b"), set(&g3, "a"), 2).unwrap().passed());
    assert!(growth_probe(&g3, set(&g3, "a,b"), set(&g3, "a,b"), 3).is_err());
    assert!(growth_probe(&g3, set(&g3, "b,c"), GeneratorSubset::EMPTY, 3).is_err());
}

#[test]
fn finite_checks_pass_on_a3() {
    let g = group(G5);
    assert!(verify::intersection_check(&g, "G5").unwrap().passed());
    assert!(verify::double_coset_check(&g, "G5").unwrap().passed());
    let order = verify::order_check(&g, "G5").unwrap();
    assert_eq!(order.group_order, Some(24));
    assert!(order.passed());
    assert!(verify::longest_element_check(&g, "G5", g.graph().generators()).unwrap().passed());
    assert!(verify::witness_check(&g, "G5", set(&g, "a"), 4).unwrap().passed());
}

#[test]
fn reports_serialize_in_camel_case() {
    let g = group(G1);
    let report = ball_check(&g, &g, "G1", set(&g, "a"), 1, Law::Normalizer).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["checkName"], "normalizer");
    assert_eq!(json["graphName"], "G1");
    assert_eq!(json["subset"], "{a}");
    assert_eq!(json["elementsChecked"], 3);
    assert!(json.get("groupOrder").is_none());
}

#[test]
fn config_parsing() {
    let dir = tempfile_dir();
    std::fs::write(dir.join("g.cox"), G4).unwrap();
    let config = Config::parse(
        "limits ball=5000\ngraph G g.cox\nperturb H G a c 3\ncheck commensurator G * radius=2 formula=H # trailing\n\
         check growth G a,b target={} radius=4\n",
        &dir,
    )
    .unwrap();
    assert_eq!(config.limits.ball_cap, 5000);
    assert_eq!(config.graphs.len(), 2);
    assert_eq!(config.checks[0].kind, LawKind::Ball(Law::Commensurator));
    assert_eq!(config.checks[0].formula.as_deref(), Some("H"));
    assert_eq!(config.checks[1].kind, LawKind::Growth);
    let reports = run_suite(&config).unwrap();
    // `*` expands to the eight subsets, in bit order, then the growth report
    assert_eq!(reports.len(), 9);
    assert_eq!(reports[0].subset, "{}");
    assert_eq!(reports[8].check_name, "growth");
    assert!(reports[..8].iter().any(|r| !r.passed()));

    for (text, line) in [
        ("graph G g.cox\ncheck commensurator G *\n", 2),
        ("check commensurator G * radius=1\n", 1),
        ("graph G g.cox\ncheck nonsense G * radius=1\n", 2),
        ("graph G g.cox\ncheck order G a\n", 2),
        ("graph G g.cox\ngraph G g.cox\n", 2),
        ("\n\nfrobnicate\n", 3),
        ("graph G g.cox\nperturb H G a z 3\n", 2),
        ("graph G g.cox\ncheck commensurator G q radius=1\n", 2),
    ] {
        match Config::parse(text, &dir) {
            Err(Error::Config { line: l, .. }) => assert_eq!(l, line, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(matches!(Config::parse("graph G missing.cox\n", &dir), Err(Error::Io(_))));
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("coxeter-verify-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn empty_config() {
    assert!(run_suite(&Config::parse("", Path::new(".")).unwrap()).unwrap().is_empty());
}
