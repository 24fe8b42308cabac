use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use setdec::graph::{build_graph, verify_axioms, Axiom, Closure, CrystalGraph};
use setdec::sqrt::{is_sqrt_highest, sigma_prime, sqrt_op, sqrt_queer_i_op, sqrt_queer_op, t_highest, SqrtCrystal};
use setdec::sv::{sv_op, sv_queer_op, sv_queer_star_op, SvCrystal};
use setdec::symfunc::{
    character, check_ikeda, g_expand, gp_expand, product_expand, BasisKind, Expansion, IkedaOutcome, TruncPoly,
};
use setdec::tableau::{enumerate_family, FamilyId};
use setdec::word::{DecTabCrystal, Direction, Label, Mode};
use setdec::{SetTableau, StrictPartition};

use crate::report::{Outcome, Report};
use crate::{
    ApplyArgs, CharArgs, Command, Conjecture, ConjectureArgs, EnumerateArgs, ExpandArgs, GraphArgs, GraphSpec, OpName,
    Ops, ProductArgs, ProductKind, Scope, VerifyArgs,
};

type CmdResult = Result<Report, String>;

pub fn run(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Enumerate(a) => enumerate(a),
        Command::Apply(a) => apply(a),
        Command::Char(a) => char_poly(a),
        Command::Graph(a) => graph(a),
        Command::Verify(a) => verify(a),
        Command::Conjecture(a) => conjecture(a),
        Command::Expand(a) => expand(a),
        Command::Product(a) => product(a),
    }
}

fn parts(shape: &StrictPartition) -> Vec<u32> {
    shape.parts().to_vec()
}

/// Scope stamp; warns when `n` is too small for the shape to have fillings.
fn scope(s: &Scope, degree: Option<usize>) -> Map<String, Value> {
    if s.n < s.shape.len() {
        eprintln!("warning: n = {} is less than the length of {}; the family is empty", s.n, s.shape);
    }
    let mut m = Map::new();
    m.insert("shape".into(), json!(parts(&s.shape)));
    m.insert("n".into(), json!(s.n));
    m.insert("degree".into(), json!(degree));
    m
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Degree bound for a family: fixed for single-valued ones.
fn family_degree(family: FamilyId, shape: &StrictPartition, max_degree: Option<usize>) -> usize {
    if family.is_set_valued() {
        max_degree.unwrap_or(shape.size() + 2)
    } else {
        shape.size()
    }
}

fn enumerate(a: &EnumerateArgs) -> CmdResult {
    let degree = family_degree(a.family, &a.scope.shape, a.max_degree);
    let mut params = scope(&a.scope, Some(degree));
    params.insert("family".into(), json!(a.family.name()));
    let members = enumerate_family(a.family, &a.scope.shape, a.scope.n as u32, degree);
    let mut r = Report::new("enumerate", Value::Object(params));
    r.result = if a.list {
        json!({"count": members.len(), "tableaux": members.iter().map(ToString::to_string).collect::<Vec<_>>()})
    } else {
        json!({"count": members.len()})
    };
    writeln!(r.text, "{}", members.len()).unwrap();
    if a.list {
        for t in &members {
            writeln!(r.text, "{t}").unwrap();
        }
    }
    Ok(r)
}

fn apply(a: &ApplyArgs) -> CmdResult {
    let t = SetTableau::from_json(&read(&a.tableau)?).map_err(|e| e.to_string())?;
    let n = a.n.unwrap_or_else(|| (a.i + 1).max(t.max_value() as usize));
    let i = a.i;
    let out = match a.op {
        OpName::E | OpName::F => {
            let dir = if a.op == OpName::E { Direction::Raise } else { Direction::Lower };
            sv_op(&t, i, dir)
        }
        OpName::Ebar | OpName::Fbar => {
            let dir = if a.op == OpName::Ebar { Direction::Raise } else { Direction::Lower };
            if t.is_multiset() {
                sv_queer_star_op(&t, dir)
            } else {
                sv_queer_op(&t, dir)
            }
        }
        OpName::EPrime | OpName::FPrime => {
            let dir = if a.op == OpName::EPrime { Direction::Raise } else { Direction::Lower };
            sqrt_op(&t, i, dir)
        }
        OpName::EbarPrime | OpName::FbarPrime => {
            let dir = if a.op == OpName::EbarPrime { Direction::Raise } else { Direction::Lower };
            if i == 1 {
                sqrt_queer_op(&t, dir)
            } else {
                sqrt_queer_i_op(&t, n, i, dir)
            }
        }
        OpName::SigmaPrime => sigma_prime(&t, n, i).map(Some),
    }
    .map_err(|e| e.to_string())?;
    let op = a.op.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let params = json!({
        "op": op,
        "i": i,
        "n": n,
        "tableau": t.to_string(),
        "shape": parts(t.shape()),
        "degree": t.degree(),
    });
    let mut r = Report::new("apply", params);
    match &out {
        Some(u) => {
            r.result = json!({"tableau": u.to_string(), "json": serde_json::from_str::<Value>(&u.to_json()).unwrap()});
            writeln!(r.text, "{u}\n{}", u.to_json()).unwrap();
        }
        None => {
            r.result = Value::Null;
            r.text.push_str("null\n");
        }
    }
    Ok(r)
}

fn char_poly(a: &CharArgs) -> CmdResult {
    let mut params = scope(&a.scope, Some(a.degree));
    params.insert("family".into(), json!(a.family.name()));
    let n = a.scope.n;
    let weights = enumerate_family(a.family, &a.scope.shape, n as u32, a.degree)
        .into_iter()
        .map(|t| t.content(n).into_iter().map(i64::from).collect());
    let poly = character(weights, n, a.degree);
    let mut r = Report::new("char", Value::Object(params));
    r.result = poly.to_json_value();
    writeln!(r.text, "{poly}").unwrap();
    Ok(r)
}

/// The crystal a graph command runs on.
enum Chosen {
    DecTab(DecTabCrystal),
    Sv(SvCrystal),
    Sqrt(SqrtCrystal),
}

fn graph_params(spec: &GraphSpec, degree: usize) -> Map<String, Value> {
    let mut params = scope(&spec.scope, Some(degree));
    params.insert("family".into(), json!(spec.family.name()));
    params.insert("ops".into(), json!(if spec.ops == Ops::Sqrt { "sqrt" } else { "classical" }));
    params.insert("q".into(), json!(spec.q));
    params
}

/// Builds the graph; sqrt graphs are saturated to the degree bound.
fn build(spec: &GraphSpec) -> Result<(Chosen, CrystalGraph<SetTableau>, usize), String> {
    let (shape, n) = (spec.scope.shape.clone(), spec.scope.n);
    let degree = family_degree(spec.family, &shape, spec.max_degree);
    let err = |e: setdec::CrystalError| e.to_string();
    let (chosen, g) = match (spec.family, spec.ops) {
        (FamilyId::DecTab, Ops::Classical) => {
            let c = DecTabCrystal::new(shape, n);
            let g = build_graph(&c, c.elements(), Closure::Closed).map_err(err)?;
            (Chosen::DecTab(c), g)
        }
        (FamilyId::SetDecTab, Ops::Classical) => {
            let c = SvCrystal::new(shape, n);
            let g = build_graph(&c, c.elements(degree), Closure::Closed).map_err(err)?;
            (Chosen::Sv(c), g)
        }
        (FamilyId::SetDecTab, Ops::Sqrt) => {
            let c = SqrtCrystal::new(shape, n);
            let keep = |t: &SetTableau| t.degree() <= degree;
            let g = build_graph(&c, c.elements_up_to(degree), Closure::Saturate { keep: &keep, max_vertices: 1 << 22 })
                .map_err(err)?;
            (Chosen::Sqrt(c), g)
        }
        (fam, ops) => {
            return Err(format!("no {} crystal on {fam}; use dectab or setdectab (sqrt needs setdectab)", ops_name(ops)))
        }
    };
    Ok((chosen, g, degree))
}

fn ops_name(ops: Ops) -> &'static str {
    match ops {
        Ops::Classical => "classical",
        Ops::Sqrt => "sqrt",
    }
}

fn graph(a: &GraphArgs) -> CmdResult {
    let (_, mut g, degree) = build(&a.spec)?;
    if !a.spec.q {
        g.edges.retain(|e| e.label != Label::Bar);
        g.mode = if g.mode.is_sqrt() { Mode::SqrtGl } else { Mode::Gl };
    }
    let dot = g.to_dot();
    let mut params = graph_params(&a.spec, degree);
    if let Some(path) = &a.out {
        fs::write(path, &dot).map_err(|e| format!("{}: {e}", path.display()))?;
        params.insert("out".into(), json!(path.display().to_string()));
    }
    let mut r = Report::new("graph", Value::Object(params));
    r.result = g.to_json_value();
    match &a.out {
        Some(_) => writeln!(r.text, "{} vertices, {} edges, {} truncated", g.len(), g.edges.len(), g.truncated).unwrap(),
        None => r.text = dot,
    }
    Ok(r)
}

fn verify(a: &VerifyArgs) -> CmdResult {
    let (chosen, g, degree) = build(&a.spec)?;
    let axiom: Axiom = a.axioms;
    let violations = match &chosen {
        Chosen::DecTab(c) => verify_axioms(c, &g, axiom),
        Chosen::Sv(c) => verify_axioms(c, &g, axiom),
        Chosen::Sqrt(c) => verify_axioms(c, &g, axiom),
    };
    let mut params = graph_params(&a.spec, degree);
    params.insert("axioms".into(), json!(axiom.name()));
    let mut r = Report::new("verify", Value::Object(params));
    r.outcome = if violations.is_empty() { Outcome::Pass } else { Outcome::Fail };
    r.witnesses = violations.iter().map(|v| format!("{}: {} ({})", v.axiom, v.witnesses.join(" "), v.detail)).collect();
    r.result = json!({"vertices": g.len(), "edges": g.edges.len(), "violations": violations});
    writeln!(r.text, "{}: {} violations on {} vertices", axiom, violations.len(), g.len()).unwrap();
    for w in &r.witnesses {
        writeln!(r.text, "{w}").unwrap();
    }
    Ok(r)
}

fn conjecture(a: &ConjectureArgs) -> CmdResult {
    let (shape, n, d) = (&a.scope.shape, a.scope.n, a.degree);
    let mut params = scope(&a.scope, Some(d));
    let name = match a.which {
        Conjecture::Ikeda => "ikeda",
        Conjecture::Connected => "connected",
        Conjecture::UniqueHighest => "unique-highest",
    };
    params.insert("conjecture".into(), json!(name));
    let mut r;
    match a.which {
        Conjecture::Ikeda => {
            r = Report::new("conjecture", Value::Object(params));
            match check_ikeda(shape, n, d) {
                IkedaOutcome::Pass => {}
                IkedaOutcome::Differs { exponent, sigma, gp } => {
                    r.witnesses.push(format!("x^{exponent:?}: sigma {sigma}, GP {gp}"));
                }
            }
        }
        Conjecture::Connected => {
            let bound = d + 1;
            params.insert("saturation_degree".into(), json!(bound));
            r = Report::new("conjecture", Value::Object(params));
            let c = SqrtCrystal::new(shape.clone(), n);
            let keep = |t: &SetTableau| t.degree() <= bound;
            let g = build_graph(&c, c.elements_up_to(bound), Closure::Saturate { keep: &keep, max_vertices: 1 << 22 })
                .map_err(|e| e.to_string())?;
            let comp = g
                .index_of(&t_highest(shape))
                .and_then(|root| g.components().into_iter().find(|comp| comp.contains(&root)))
                .unwrap_or_default();
            let low: Vec<usize> = (0..g.len()).filter(|&v| g.elem(v).degree() <= d).collect();
            r.witnesses = low
                .iter()
                .filter(|v| comp.binary_search(v).is_err())
                .map(|&v| g.vertices[v].key.clone())
                .collect();
            r.result = json!({"elements": low.len()});
        }
        Conjecture::UniqueHighest => {
            r = Report::new("conjecture", Value::Object(params));
            let c = SqrtCrystal::new(shape.clone(), n);
            let top = t_highest(shape);
            let highest: Vec<SetTableau> = c.elements_up_to(d).into_iter().filter(|t| is_sqrt_highest(t, n)).collect();
            r.witnesses = highest.iter().filter(|t| **t != top).map(ToString::to_string).collect();
            if top.degree() <= d && !highest.contains(&top) {
                r.witnesses.push(format!("{top} is not highest"));
            }
            r.result = json!({"highest": highest.iter().map(ToString::to_string).collect::<Vec<_>>()});
        }
    }
    r.outcome = if r.witnesses.is_empty() { Outcome::Pass } else { Outcome::Fail };
    writeln!(r.text, "{name} ({}) n={n} degree<={d}: {}", parts_text(shape), if r.witnesses.is_empty() { "pass" } else { "fail" })
        .unwrap();
    for w in &r.witnesses {
        writeln!(r.text, "{w}").unwrap();
    }
    Ok(r)
}

fn parts_text(shape: &StrictPartition) -> String {
    shape.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn expansion_json(e: &Expansion) -> Value {
    let coeffs: Map<String, Value> = e
        .coeffs
        .iter()
        .map(|(nu, c)| (nu.iter().map(u32::to_string).collect::<Vec<_>>().join(","), json!(c.to_string())))
        .collect();
    json!({"coefficients": coeffs, "integral": e.is_integral(), "residual": e.residual.to_json_value()})
}

fn expand(a: &ExpandArgs) -> CmdResult {
    let text = read(&a.input)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", a.input.display()))?;
    let f = TruncPoly::from_json_value(&v, a.degree).map_err(|e| e.to_string())?;
    if let Some(n) = a.n {
        if n != f.n() {
            return Err(format!("--n {n} but the input has {} variables", f.n()));
        }
    }
    let basis = if a.g { "G" } else { "GP" };
    let e = if a.g { g_expand(&f) } else { gp_expand(&f) }.map_err(|e| e.to_string())?;
    let params = json!({"basis": basis, "input": a.input.display().to_string(), "n": f.n(), "degree": a.degree});
    let mut r = Report::new("expand", params);
    r.result = expansion_json(&e);
    if e.residual.is_zero() {
        r.outcome = Outcome::Pass;
    } else {
        r.outcome = Outcome::Fail;
        r.witnesses.push(format!("residual {}", e.residual));
    }
    writeln!(r.text, "{e}").unwrap();
    Ok(r)
}

fn product(a: &ProductArgs) -> CmdResult {
    let kind = match a.kind {
        ProductKind::G => BasisKind::G,
        ProductKind::GP => BasisKind::GP,
    };
    let e = product_expand(kind, &a.lhs.0, &a.rhs.0, a.n, a.degree).map_err(|e| e.to_string())?;
    let params = json!({"kind": kind.name(), "lhs": a.lhs.0, "rhs": a.rhs.0, "n": a.n, "degree": a.degree});
    let mut r = Report::new("product", params);
    r.result = expansion_json(&e);
    writeln!(r.text, "{e}").unwrap();
    Ok(r)
}
