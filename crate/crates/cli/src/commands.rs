use std::io::Write;
use std::path::Path;

use coxeter_core::verify::{self, Config};
use coxeter_core::{ComponentType, CoxeterGraph, CoxeterGroup, Element, Error, GeneratorSubset, Limits};
use serde_json::{json, Value};

use crate::{Budgets, Command, Failure};

pub const SCHEMA_VERSION: u32 = 1;

/// What a command produced: echoed inputs, a JSON result and its text rendering.
struct Output {
    inputs: Value,
    result: Value,
    text: String,
}

fn load_group(path: &Path, limits: Limits) -> Result<CoxeterGroup, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(CoxeterGroup::with_limits(CoxeterGraph::parse(&text)?, limits))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn angle(g: &CoxeterGroup, x: GeneratorSubset) -> String {
    format!("<{}>", g.graph().format_subset(x))
}

fn braces(g: &CoxeterGroup, x: GeneratorSubset) -> String {
    format!("{{{}}}", g.graph().format_subset(x))
}

fn word_result(g: &CoxeterGroup, w: &Element) -> (Value, String) {
    let word = g.format_word(w);
    (json!({ "word": word, "length": w.length() }), format!("{word} (length {})", w.length()))
}

fn component_json(g: &CoxeterGroup, part: GeneratorSubset, ty: &ComponentType) -> Value {
    json!({
        "generators": g.graph().format_subset(part),
        "type": ty.kind.to_string(),
        "rank": ty.rank,
        "order": ty.order.as_ref().map_or("inf".to_string(), |o| o.to_string()),
    })
}

fn component_text(g: &CoxeterGroup, part: GeneratorSubset, ty: &ComponentType) -> String {
    match &ty.order {
        Some(order) => format!("component {}: {} (order {order})", braces(g, part), ty.kind),
        None => format!("component {}: infinite", braces(g, part)),
    }
}

pub fn run(command: Command, as_json: bool, limits: Limits, budgets: Budgets) -> Result<(), Failure> {
    let (name, graph_path, graph_text, output) = match command {
        Command::Verify { config } => return run_verify(&config, budgets),
        Command::Analyze { graph, subset } => {
            let g = load_group(&graph, limits)?;
            let out = analyze(&g, &subset)?;
            ("analyze", graph, g.graph().to_text(), out)
        }
        Command::Classify { graph, subset } => {
            let g = load_group(&graph, limits)?;
            let out = classify(&g, subset.as_deref())?;
            ("classify", graph, g.graph().to_text(), out)
        }
        Command::Reduce { graph, word } => {
            let g = load_group(&graph, limits)?;
            let (result, text) = word_result(&g, &g.parse_word(&word)?);
            ("reduce", graph, g.graph().to_text(), Output { inputs: json!({ "word": word }), result, text })
        }
        Command::Prod { graph, words } => {
            let g = load_group(&graph, limits)?;
            let factors = words.iter().map(|w| g.parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            let (result, text) = word_result(&g, &g.product_all(&factors));
            ("prod", graph, g.graph().to_text(), Output { inputs: json!({ "words": words }), result, text })
        }
        Command::Inv { graph, word } => {
            let g = load_group(&graph, limits)?;
            let (result, text) = word_result(&g, &g.inverse(&g.parse_word(&word)?));
            ("inv", graph, g.graph().to_text(), Output { inputs: json!({ "word": word }), result, text })
        }
        Command::Longest { graph, subset } => {
            let g = load_group(&graph, limits)?;
            let x = g.graph().parse_subset(&subset)?;
            let (result, text) = word_result(&g, &g.longest_element(x)?);
            ("longest", graph, g.graph().to_text(), Output { inputs: json!({ "subset": g.graph().format_subset(x) }), result, text })
        }
        Command::Coset { graph, word, left, right } => {
            let g = load_group(&graph, limits)?;
            let out = coset(&g, &word, &left, &right)?;
            ("coset", graph, g.graph().to_text(), out)
        }
        Command::Intersect { graph, word, left, right } => {
            let g = load_group(&graph, limits)?;
            let out = intersect(&g, &word, &left, &right)?;
            ("intersect", graph, g.graph().to_text(), out)
        }
        Command::Member { graph, word, subset } => {
            let g = load_group(&graph, limits)?;
            let out = member(&g, &word, &subset)?;
            ("member", graph, g.graph().to_text(), out)
        }
        Command::Witness { graph, from, to, word } => {
            let g = load_group(&graph, limits)?;
            let out = witness(&g, &from, to.as_deref(), word.as_deref())?;
            ("witness", graph, g.graph().to_text(), out)
        }
        Command::Ball { graph, radius, subset, elements } => {
            let g = load_group(&graph, limits)?;
            let out = ball(&g, radius, subset.as_deref(), elements)?;
            ("ball", graph, g.graph().to_text(), out)
        }
        Command::Growth { graph, subset, target, radius } => {
            let g = load_group(&graph, limits)?;
            let out = growth(&g, &subset, &target, radius)?;
            ("growth", graph, g.graph().to_text(), out)
        }
    };
    if as_json {
        let envelope = json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": name,
            "graph": { "path": graph_path.display().to_string(), "text": graph_text },
            "inputs": output.inputs,
            "result": output.result,
        });
        print_line(&serde_json::to_string_pretty(&envelope).expect("serializable"));
    } else {
        print_line(&output.text);
    }
    Ok(())
}

/// Prints one line; a closed stdout (say, output piped into `head`) is not
/// an error. Returns whether the line was written.
fn print_line(line: &str) -> bool {
    writeln!(std::io::stdout().lock(), "{line}").is_ok()
}

fn analyze(g: &CoxeterGroup, subset: &str) -> Result<Output, Error> {
    let graph = g.graph();
    let x = graph.parse_subset(subset)?;
    let an = graph.analyze_parabolic(x);
    let quasi_center: Vec<String> = g.quasi_center(x).iter().map(|w| g.format_word(w)).collect();
    let quasi_centralizer = g.quasi_centralizer(x).ok();

    let mut lines: Vec<String> = an.components.iter().map(|(part, ty)| component_text(g, *part, ty)).collect();
    lines.push(format!("X0 = {}", angle(g, an.x0)));
    lines.push(format!("Xinf = {}", angle(g, an.xinf)));
    lines.push(format!("Yinf = {}", angle(g, an.yinf)));
    lines.push(format!("commensurator = {}", angle(g, an.commensurator)));
    lines.push(format!("self-commensurating: {}", yes_no(an.self_commensurating)));
    lines.push(format!("quasi-center = <{}>", quasi_center.join("; ")));
    lines.push(match quasi_centralizer {
        Some(y) => format!("quasi-centralizer = {}", angle(g, y)),
        None => "quasi-centralizer: no closed form (X has finite components)".to_string(),
    });

    Ok(Output {
        inputs: json!({ "subset": graph.format_subset(x) }),
        result: json!({
            "components": an.components.iter().map(|(p, t)| component_json(g, *p, t)).collect::<Vec<_>>(),
            "x0": graph.format_subset(an.x0),
            "xinf": graph.format_subset(an.xinf),
            "yinf": graph.format_subset(an.yinf),
            "commensurator": graph.format_subset(an.commensurator),
            "selfCommensurating": an.self_commensurating,
            "quasiCenter": quasi_center,
            "quasiCentralizer": quasi_centralizer.map(|y| graph.format_subset(y)),
        }),
        text: lines.join("\n"),
    })
}

fn classify(g: &CoxeterGroup, subset: Option<&str>) -> Result<Output, Error> {
    let x = match subset {
        Some(text) => g.graph().parse_subset(text)?,
        None => g.graph().generators(),
    };
    let components = g.graph().classify_subset(x);
    let finite = components.iter().all(|(_, ty)| ty.is_finite());
    let mut lines: Vec<String> = components.iter().map(|(p, t)| component_text(g, *p, t)).collect();
    lines.push(format!("finite: {}", yes_no(finite)));
    Ok(Output {
        inputs: json!({ "subset": g.graph().format_subset(x) }),
        result: json!({
            "components": components.iter().map(|(p, t)| component_json(g, *p, t)).collect::<Vec<_>>(),
            "finite": finite,
        }),
        text: lines.join("\n"),
    })
}

fn coset(g: &CoxeterGroup, word: &str, left: &str, right: &str) -> Result<Output, Error> {
    let w = g.parse_word(word)?;
    let x = g.graph().parse_subset(left)?;
    let x_prime = g.graph().parse_subset(right)?;
    let d = g.double_coset_decompose(&w, x, x_prime);
    let (u, v, u_prime) = (g.format_word(&d.u), g.format_word(&d.v), g.format_word(&d.u_prime));
    Ok(Output {
        inputs: json!({ "word": word, "left": g.graph().format_subset(x), "right": g.graph().format_subset(x_prime) }),
        text: format!("u={u}, v={v}, u'={u_prime}"),
        result: json!({ "u": u, "v": v, "uPrime": u_prime }),
    })
}

fn intersect(g: &CoxeterGroup, word: &str, left: &str, right: &str) -> Result<Output, Error> {
    let w = g.parse_word(word)?;
    let x = g.graph().parse_subset(left)?;
    let x_prime = g.graph().parse_subset(right)?;
    let desc = g.intersect_parabolic_conjugate(x, x_prime, &w);
    let conjugator = g.format_word(&desc.conjugator);
    let elements = if g.graph().is_finite_type(desc.core) {
        Some(g.descriptor_elements(&desc)?.iter().map(|e| g.format_word(e)).collect::<Vec<_>>())
    } else {
        None
    };
    let mut text = format!("u0 = {conjugator}\nY = {}", angle(g, desc.core));
    match &elements {
        Some(elems) => text.push_str(&format!("\norder = {}\nelements = {}", elems.len(), elems.join("; "))),
        None => text.push_str("\norder = inf"),
    }
    Ok(Output {
        inputs: json!({ "word": word, "left": g.graph().format_subset(x), "right": g.graph().format_subset(x_prime) }),
        result: json!({
            "conjugator": conjugator,
            "core": g.graph().format_subset(desc.core),
            "order": elements.as_ref().map(Vec::len),
            "elements": elements,
        }),
        text,
    })
}

fn member(g: &CoxeterGroup, word: &str, subset: &str) -> Result<Output, Error> {
    let w = g.parse_word(word)?;
    let x = g.graph().parse_subset(subset)?;
    let commensurator = g.commensurator_membership(x, &w);
    let normalizer = g.normalizer_decompose(x, &w);
    let quasi_centralizer = verify::permutes_directly(g, x, &w);
    let decomposition = normalizer.as_ref().map(|(v, u)| (g.format_word(v), g.format_word(u)));
    let mut lines = vec![format!("commensurator: {}", yes_no(commensurator))];
    lines.push(match &decomposition {
        Some((v, u)) => format!("normalizer: yes (v={v}, u={u})"),
        None => "normalizer: no".to_string(),
    });
    lines.push(format!("quasi-centralizer: {}", yes_no(quasi_centralizer)));
    Ok(Output {
        inputs: json!({ "word": word, "subset": g.graph().format_subset(x) }),
        result: json!({
            "commensurator": commensurator,
            "normalizer": decomposition.is_some(),
            "normalizerDecomposition": decomposition.map(|(v, u)| json!({ "v": v, "u": u })),
            "quasiCentralizer": quasi_centralizer,
        }),
        text: lines.join("\n"),
    })
}

fn witness(g: &CoxeterGroup, from: &str, to: Option<&str>, word: Option<&str>) -> Result<Output, Error> {
    let x = g.graph().parse_subset(from)?;
    let (witness, target, inputs) = match (to, word) {
        (Some(to), _) => {
            let target = g.graph().parse_subset(to)?;
            let inputs = json!({ "from": g.graph().format_subset(x), "to": g.graph().format_subset(target) });
            (g.conjugation_witness(x, target)?, Some(target), inputs)
        }
        (None, Some(word)) => {
            let w = g.parse_word(word)?;
            let inputs = json!({ "from": g.graph().format_subset(x), "word": word });
            (g.factor_witness(x, &w)?, g.simple_image_set(&w, x), inputs)
        }
        (None, None) => unreachable!("clap requires --to or --word"),
    };
    let Some(witness) = witness else {
        return Ok(Output { inputs, result: Value::Null, text: "no witness".to_string() });
    };
    let mut lines = Vec::new();
    let mut steps = Vec::new();
    for (i, step) in witness.steps.iter().enumerate() {
        let t = g.graph().name(step.t);
        let c = g.format_word(&step.c);
        lines.push(format!("step {}: t={t}, {} -> {}, c={c}", i + 1, braces(g, step.x), braces(g, step.next)));
        steps.push(json!({
            "t": t,
            "from": g.graph().format_subset(step.x),
            "to": g.graph().format_subset(step.next),
            "c": c,
        }));
    }
    let w = g.format_word(&witness.w);
    lines.push(format!("w = {w} (length {})", witness.w.length()));
    Ok(Output {
        inputs,
        result: json!({
            "steps": steps,
            "w": w,
            "target": target.map(|t| g.graph().format_subset(t)),
        }),
        text: lines.join("\n"),
    })
}

fn ball(g: &CoxeterGroup, radius: usize, subset: Option<&str>, list: bool) -> Result<Output, Error> {
    let x = match subset {
        Some(text) => g.graph().parse_subset(text)?,
        None => g.graph().generators(),
    };
    let elements = g.ball_in(x, radius)?;
    let mut sizes = vec![0usize; radius + 1];
    for w in &elements {
        sizes[w.length()] += 1;
    }
    let mut lines: Vec<String> = sizes.iter().enumerate().map(|(r, n)| format!("radius {r}: {n}")).collect();
    lines.push(format!("total: {}", elements.len()));
    let words: Vec<String> = elements.iter().map(|w| g.format_word(w)).collect();
    if list {
        lines.extend(words.iter().cloned());
    }
    Ok(Output {
        inputs: json!({ "radius": radius, "subset": g.graph().format_subset(x) }),
        result: json!({
            "sphereSizes": sizes,
            "total": elements.len(),
            "elements": list.then_some(words),
        }),
        text: lines.join("\n"),
    })
}

fn growth(g: &CoxeterGroup, subset: &str, target: &str, radius: usize) -> Result<Output, Error> {
    let x = g.graph().parse_subset(subset)?;
    let y = g.graph().parse_subset(target)?;
    let counts = verify::growth_probe(g, x, y, radius)?;
    let lines: Vec<String> = counts.iter().enumerate().map(|(r, n)| format!("radius {r}: {n}")).collect();
    Ok(Output {
        inputs: json!({
            "subset": g.graph().format_subset(x),
            "target": g.graph().format_subset(y),
            "radius": radius,
        }),
        result: json!({ "counts": counts }),
        text: lines.join("\n"),
    })
}

fn run_verify(path: &Path, budgets: Budgets) -> Result<(), Failure> {
    let mut config = Config::load(path)?;
    config.limits = budgets.apply(config.limits);
    let reports = verify::run_suite(&config)?;
    let failing = reports.iter().filter(|r| !r.passed()).count();
    for report in &reports {
        if !print_line(&serde_json::to_string(report).expect("serializable")) {
            break;
        }
    }
    eprintln!("{} reports, {failing} failing", reports.len());
    if failing > 0 {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}
