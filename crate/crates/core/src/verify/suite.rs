//! The config-driven matrix of checks.
//!
//! A config is a line-oriented text file:
//!
//! ```text
//! # comment
//! limits ball=1000000 search=100000 order=10000
//! graph G3 g3.cox
//! perturb G3bad G3 b c 2
//! check commensurator G3 * radius=8
//! check dualLength G3 * radius=8 formula=G3bad
//! check growth G3 a,b target=a radius=8
//! ```
//!
//! `graph` paths are relative to the config file. `perturb` defines a new
//! graph by changing one label of an earlier one. Each `check` line names a
//! law, a graph and a subset: `*` expands to every admissible subset, `{}`
//! is the empty subset. Reports come back in config order, with `*`
//! expanded in increasing bit order.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Label};
use crate::subset::GeneratorSubset;
use crate::words::{CoxeterGroup, Limits};

use super::{CheckReport, Law};

/// Everything a `check` line can ask for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawKind {
    /// An element-by-element law on a ball.
    Ball(Law),
    /// Descriptor against brute-force intersection, whole finite group.
    Intersection,
    /// Unique minimal double coset elements, whole finite group.
    DoubleCosets,
    LongestElement,
    Order,
    Witness,
    Growth,
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::Ball(law) => law.name(),
            LawKind::Intersection => "intersection",
            LawKind::DoubleCosets => "doubleCosets",
            LawKind::LongestElement => "longestElement",
            LawKind::Order => "order",
            LawKind::Witness => "witness",
            LawKind::Growth => "growth",
        }
    }

    fn needs_radius(self) -> bool {
        matches!(self, LawKind::Ball(_) | LawKind::Witness | LawKind::Growth)
    }

    fn whole_group(self) -> bool {
        matches!(self, LawKind::Intersection | LawKind::DoubleCosets | LawKind::Order)
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "intersection" => LawKind::Intersection,
            "doubleCosets" => LawKind::DoubleCosets,
            "longestElement" => LawKind::LongestElement,
            "order" => LawKind::Order,
            "witness" => LawKind::Witness,
            "growth" => LawKind::Growth,
            other => LawKind::Ball(other.parse()?),
        })
    }
}

/// One `check` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub line: usize,
    pub kind: LawKind,
    pub graph: String,
    /// `None` stands for `*`.
    pub subset: Option<GeneratorSubset>,
    pub radius: usize,
    /// Graph used for the formula side of ball laws; defaults to `graph`.
    pub formula: Option<String>,
    pub target: GeneratorSubset,
}

#[derive(Clone, Debug, Default)]
pub struct Config {
    pub limits: Limits,
    /// Named graphs in definition order.
    pub graphs: Vec<(String, CoxeterGraph)>,
    pub checks: Vec<CheckSpec>,
}

fn config_error(line: usize, message: impl Into<String>) -> Error {
    Error::Config { line, message: message.into() }
}

impl Config {
    /// Reads a config file; graph paths are resolved against its directory.
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn parse(text: &str, base_dir: &Path) -> Result<Config> {
        let mut config = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let fields: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = fields.split_first() else {
                continue;
            };
            match keyword {
                "limits" => config.parse_limits(line, args)?,
                "graph" => {
                    let [name, path] = args else {
                        return Err(config_error(line, "expected `graph NAME PATH`"));
                    };
                    let path = base_dir.join(path);
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    let graph = CoxeterGraph::parse(&text)
                        .map_err(|e| config_error(line, format!("{}: {e}", path.display())))?;
                    config.define(line, name, graph)?;
                }
                "perturb" => {
                    let [name, base, s, t, m] = args else {
                        return Err(config_error(line, "expected `perturb NAME BASE s t m`"));
                    };
                    let base = config.graph(line, base)?;
                    let index = |v: &str| base.index_of(v).ok_or_else(|| config_error(line, format!("unknown generator `{v}`")));
                    let (s, t) = (index(s)?, index(t)?);
                    let label = match *m {
                        "inf" => Label::Infinite,
                        m => Label::Finite(m.parse().map_err(|_| config_error(line, format!("bad label `{m}`")))?),
                    };
                    let graph = base.with_label(s, t, label).map_err(|e| config_error(line, e.to_string()))?;
                    config.define(line, name, graph)?;
                }
                "check" => {
                    let spec = config.parse_check(line, args)?;
                    config.checks.push(spec);
                }
                other => return Err(config_error(line, format!("unknown directive `{other}`"))),
            }
        }
        Ok(config)
    }

    fn define(&mut self, line: usize, name: &str, graph: CoxeterGraph) -> Result<()> {
        if self.graphs.iter().any(|(n, _)| n == name) {
            return Err(config_error(line, format!("graph `{name}` defined twice")));
        }
        self.graphs.push((name.to_string(), graph));
        Ok(())
    }

    fn graph(&self, line: usize, name: &str) -> Result<&CoxeterGraph> {
        self.graphs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| config_error(line, format!("unknown graph `{name}`")))
    }

    fn parse_limits(&mut self, line: usize, args: &[&str]) -> Result<()> {
        for arg in args {
            let (key, value) = arg.split_once('=').ok_or_else(|| config_error(line, format!("expected key=value, found `{arg}`")))?;
            let value: usize = value.parse().map_err(|_| config_error(line, format!("bad number `{value}`")))?;
            match key {
                "ball" => self.limits.ball_cap = value,
                "search" => self.limits.search_cap = value,
                "order" => self.limits.group_order_cap = value,
                _ => return Err(config_error(line, format!("unknown limit `{key}`"))),
            }
        }
        Ok(())
    }

    fn parse_check(&self, line: usize, args: &[&str]) -> Result<CheckSpec> {
        let [kind, graph_name, subset, options @ ..] = args else {
            return Err(config_error(line, "expected `check LAW GRAPH SUBSET [key=value ...]`"));
        };
        let kind: LawKind = kind.parse().map_err(|e: String| config_error(line, e))?;
        let graph = self.graph(line, graph_name)?;
        let parse_subset = |text: &str| graph.parse_subset(text).map_err(|e| config_error(line, e.to_string()));
        let subset = match *subset {
            "*" => None,
            text => Some(parse_subset(text)?),
        };
        let mut spec = CheckSpec {
            line,
            kind,
            graph: graph_name.to_string(),
            subset,
            radius: 0,
            formula: None,
            target: GeneratorSubset::EMPTY,
        };
        let mut has_radius = false;
        for option in options {
            let (key, value) =
                option.split_once('=').ok_or_else(|| config_error(line, format!("expected key=value, found `{option}`")))?;
            match key {
                "radius" => {
                    spec.radius = value.parse().map_err(|_| config_error(line, format!("bad radius `{value}`")))?;
                    has_radius = true;
                }
                "formula" => {
                    let formula = self.graph(line, value)?;
                    if formula.rank() != graph.rank() {
                        return Err(config_error(line, format!("`{value}` and `{graph_name}` differ in rank")));
                    }
                    spec.formula = Some(value.to_string());
                }
                "target" => spec.target = parse_subset(value)?,
                _ => return Err(config_error(line, format!("unknown option `{key}`"))),
            }
        }
        if kind.needs_radius() && !has_radius {
            return Err(config_error(line, format!("`{kind}` needs radius=N")));
        }
        if kind.whole_group() && spec.subset.is_some() {
            return Err(config_error(line, format!("`{kind}` runs over every subset; use `*`")));
        }
        if spec.formula.is_some() && !matches!(kind, LawKind::Ball(_)) {
            return Err(config_error(line, "formula= applies to ball laws only"));
        }
        if kind == LawKind::Growth && spec.subset.is_none() {
            return Err(config_error(line, "growth needs an explicit subset"));
        }
        Ok(spec)
    }
}

/// One unit of work after `*` expansion.
struct Cell<'a> {
    spec: &'a CheckSpec,
    subset: GeneratorSubset,
}

/// Subsets a `*` expands to for the given check.
fn expand(graph: &CoxeterGraph, kind: LawKind) -> Vec<GeneratorSubset> {
    let all: Vec<GeneratorSubset> = graph.generators().subsets().collect();
    match kind {
        LawKind::Ball(Law::QuasiCentralizer) => {
            all.into_iter().filter(|&x| graph.decompose_subset(x).0.is_empty()).collect()
        }
        LawKind::LongestElement => all.into_iter().filter(|&x| graph.is_finite_type(x)).collect(),
        LawKind::Intersection | LawKind::DoubleCosets | LawKind::Order => vec![graph.generators()],
        _ => all,
    }
}

/// Runs every check of `config`, in parallel across cells, and returns the
/// reports in config order.
pub fn run_suite(config: &Config) -> Result<Vec<CheckReport>> {
    let groups: HashMap<&str, Arc<CoxeterGroup>> = config
        .graphs
        .iter()
        .map(|(name, graph)| (name.as_str(), Arc::new(CoxeterGroup::with_limits(graph.clone(), config.limits))))
        .collect();
    let cells: Vec<Cell> = config
        .checks
        .iter()
        .flat_map(|spec| {
            let graph = groups[spec.graph.as_str()].graph();
            let subsets = match spec.subset {
                Some(x) => vec![x],
                None => expand(graph, spec.kind),
            };
            subsets.into_iter().map(move |subset| Cell { spec, subset })
        })
        .collect();
    cells
        .par_iter()
        .map(|cell| {
            let spec = cell.spec;
            let group = &groups[spec.graph.as_str()];
            let x = cell.subset;
            let name = spec.graph.as_str();
            match spec.kind {
                LawKind::Ball(law) => {
                    let formula = &groups[spec.formula.as_deref().unwrap_or(name)];
                    let mut report = super::ball_check(group, formula, name, x, spec.radius, law)?;
                    if let Some(formula) = &spec.formula {
                        report.graph_name = format!("{name} (formula from {formula})");
                    }
                    Ok(report)
                }
                LawKind::Intersection => super::intersection_check(group, name),
                LawKind::DoubleCosets => super::double_coset_check(group, name),
                LawKind::LongestElement => super::longest_element_check(group, name, x),
                LawKind::Order => super::order_check(group, name),
                LawKind::Witness => super::witness_check(group, name, x, spec.radius),
                LawKind::Growth => super::growth_check(group, name, x, spec.target, spec.radius),
            }
        })
        .collect()
}
