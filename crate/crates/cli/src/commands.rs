use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use coxwork::aci::{self, AciVerdict, FiniteActionGroup, SemidirectElement};
use coxwork::classify::{self, leading_minors};
use coxwork::coxsystem::format_set;
use coxwork::essential::{self, PinfVerdict, RootClass};
use coxwork::fixedpoint::{self, FixedLabel, FixedPointError};
use coxwork::scalar::Field;
use coxwork::witness::{self, RowReport};
use coxwork::words::{format_word, parse_word, GroupElement, InfiniteCertificate, Order};
use coxwork::{CoxeterSystem, Element, Geometry, GraphAutomorphism, Label, Root, TrigScalar};

use crate::report::Report;
use crate::{Cli, SystemArg, Verb};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain(e: impl fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

struct Ctx {
    approx: bool,
}

impl Ctx {
    fn scalar(&self, x: &TrigScalar) -> Value {
        if self.approx {
            json!({"exact": x.to_string(), "approx": format!("{:.12}", x.to_f64())})
        } else {
            Value::String(x.to_string())
        }
    }

    fn scalar_text(&self, x: &TrigScalar) -> String {
        if self.approx {
            format!("{x} (~{:.12})", x.to_f64())
        } else {
            x.to_string()
        }
    }

    fn root(&self, r: &Root) -> Value {
        Value::Array(r.coords.iter().map(|x| self.scalar(x)).collect())
    }

    fn root_text(&self, r: &Root) -> String {
        let parts: Vec<String> = r.coords.iter().map(|x| self.scalar_text(x)).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn load_system(arg: &SystemArg) -> Result<CoxeterSystem, CliError> {
    let text = match std::fs::read_to_string(&arg.system) {
        Ok(t) => t,
        Err(e) => match witness::embedded_system(&arg.system) {
            Some(t) => t.to_string(),
            None => return Err(usage(format!("cannot read system {:?}: {e}", arg.system))),
        },
    };
    CoxeterSystem::parse(&text).map_err(|e| usage(format!("{}: {e}", arg.system)))
}

fn geometry(sys: &CoxeterSystem) -> Result<Arc<Geometry>, CliError> {
    Geometry::new(sys).map(Arc::new).map_err(domain)
}

fn parse_word_arg(text: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let t = text.trim();
    if t == "e" || t.is_empty() {
        return Ok(Vec::new());
    }
    parse_word(t, rank).map_err(usage)
}

fn parse_subset(text: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = if inner.trim().is_empty() {
        Vec::new()
    } else {
        parse_word(inner, rank).map_err(usage)?
    };
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn parse_tau(sys: &CoxeterSystem, text: &str) -> Result<GraphAutomorphism, CliError> {
    GraphAutomorphism::parse(sys, text).map_err(usage)
}

fn load_action(sys: &CoxeterSystem, path: Option<&Path>, cap: usize) -> Result<FiniteActionGroup, CliError> {
    let gens = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            aci::parse_action(sys, &text).map_err(|e| usage(format!("{}: {e}", p.display())))?
        }
        None => Vec::new(),
    };
    FiniteActionGroup::closure(sys.rank(), &gens, cap).map_err(domain)
}

fn set_value(set: &[usize]) -> Value {
    Value::Array(set.iter().map(|s| json!(s + 1)).collect())
}

fn word_value(w: &[usize]) -> Value {
    Value::String(format_word(w))
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Ctx { approx: cli.approx };
    match &cli.verb {
        Verb::Components(sys) => components(sys),
        Verb::Classify(sys) => classify(&ctx, sys),
        Verb::Roots { sys, depth } => roots(&ctx, sys, *depth),
        Verb::Length { sys, word } => length(&ctx, sys, word),
        Verb::Reduce { sys, word } => reduce(sys, word),
        Verb::Longest { sys, subset } => longest(sys, subset.as_deref()),
        Verb::Order { sys, word, cap } => order(&ctx, sys, word, *cap),
        Verb::Fixed { sys, tau, cap } => fixed(sys, tau, *cap),
        Verb::FiniteIndex { sys, tau } => finite_index(sys, tau),
        Verb::Essential { sys, word, depth, cap } => essential_verb(&ctx, sys, word, *depth, *cap),
        Verb::Aci {
            sys,
            action,
            query,
            radius,
            target,
            cap,
        } => aci_verb(sys, action.as_deref(), query.as_deref(), *radius, *target, *cap),
        Verb::VerifyTables { table } => verify_tables(&ctx, *table),
        Verb::Oracle { sys, action, cap } => oracle(sys, action.as_deref(), *cap),
    }
}

fn components(arg: &SystemArg) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let mut r = Report::new("components");
    r.input("system", arg.system.clone());
    let parts = sys.components().parts;
    for p in &parts {
        r.line(format!("component {}", format_set(p)));
    }
    r.result = json!({"components": parts.iter().map(|p| set_value(p)).collect::<Vec<_>>()});
    Ok(r)
}

fn classify(ctx: &Ctx, arg: &SystemArg) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let mut r = Report::new("classify");
    r.input("system", arg.system.clone());
    let tags = classify::classify_system::<TrigScalar>(&sys).map_err(domain)?;
    let mut result = Vec::new();
    let mut certs = Vec::new();
    for (part, tag) in &tags {
        r.line(format!("component {}: {tag}", format_set(part)));
        result.push(json!({
            "vertices": set_value(part),
            "kind": format!("{:?}", tag.kind),
            "name": tag.name,
        }));
        let (gram, _) = geo.parabolic_restrict(part);
        certs.push(json!({
            "vertices": set_value(part),
            "leading_minors": leading_minors(&gram).iter().map(|m| ctx.scalar(m)).collect::<Vec<_>>(),
        }));
    }
    r.result = json!({"components": result});
    r.certificates = json!({"gram": certs});
    Ok(r)
}

fn roots(ctx: &Ctx, arg: &SystemArg, depth: usize) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let mut r = Report::new("roots");
    r.input("system", arg.system.clone());
    r.input("depth", depth);
    let e = geo.enumerate_roots(depth);
    let mut list = Vec::new();
    for (root, level) in e.roots.iter().zip(&e.levels) {
        r.line(format!("{level}: {}", ctx.root_text(root)));
        list.push(json!({"coords": ctx.root(root), "level": level}));
    }
    r.line(format!(
        "{} positive roots{}",
        e.roots.len(),
        if e.closed { ", enumeration closed" } else { "" }
    ));
    if !e.closed {
        r.line(format!("not closed at depth {depth}"));
        r.undecided.push(json!({"closed": format!("not closed at depth {depth}")}));
    }
    r.result = json!({"roots": list, "count": e.roots.len(), "closed": e.closed});
    Ok(r)
}

fn element(sys: &CoxeterSystem, geo: &Arc<Geometry>, word: &str) -> Result<Element, CliError> {
    let w = parse_word_arg(word, sys.rank())?;
    GroupElement::from_word(geo, &w).map_err(usage)
}

fn length(ctx: &Ctx, arg: &SystemArg, word: &str) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let w = element(&sys, &geo, word)?;
    let mut r = Report::new("length");
    r.input("system", arg.system.clone());
    r.input("word", word);
    r.line(format!("length {}", w.length()));
    let inv = w.inversion_set();
    r.result = json!({"length": w.length(), "reduced": word_value(w.word())});
    r.certificates = json!({"inversion_set": inv.iter().map(|x| ctx.root(x)).collect::<Vec<_>>()});
    Ok(r)
}

fn reduce(arg: &SystemArg, word: &str) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let w = element(&sys, &geo, word)?;
    let mut r = Report::new("reduce");
    r.input("system", arg.system.clone());
    r.input("word", word);
    r.line(format_word(w.word()));
    r.result = json!({"reduced": word_value(w.word()), "length": w.length()});
    Ok(r)
}

fn longest(arg: &SystemArg, subset: Option<&str>) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let set = match subset {
        Some(s) => parse_subset(s, sys.rank())?,
        None => (0..sys.rank()).collect(),
    };
    let mut r = Report::new("longest");
    r.input("system", arg.system.clone());
    r.input("subset", format_set(&set));
    let w0 = GroupElement::longest_element(&geo, &set).map_err(domain)?;
    r.line(format!("w0{} = {} (length {})", format_set(&set), format_word(w0.word()), w0.length()));
    r.result = json!({"word": word_value(w0.word()), "length": w0.length()});
    Ok(r)
}

fn order(ctx: &Ctx, arg: &SystemArg, word: &str, cap: u64) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let w = element(&sys, &geo, word)?;
    let mut r = Report::new("order");
    r.input("system", arg.system.clone());
    r.input("word", word);
    r.input("cap", cap);
    match w.order_of(cap) {
        Order::Finite(m) => {
            r.line(format!("order {m}"));
            r.result = json!({"order": m.to_string()});
        }
        Order::Infinite(cert) => {
            r.line("order inf");
            r.result = json!({"order": "inf"});
            r.certificates = match cert {
                InfiniteCertificate::Unipotent { power } => {
                    r.line(format!("certificate: (w^{power} - 1)^rank = 0 with w^{power} != 1"));
                    json!({"unipotent_power": power})
                }
                InfiniteCertificate::TraceExceedsRank { power, trace } => {
                    r.line(format!("certificate: |tr(w^{power})| = |{}| > rank", ctx.scalar_text(&trace)));
                    json!({"trace_power": power, "trace": ctx.scalar(&trace)})
                }
            };
        }
        Order::Undecided(c) => {
            r.line(format!("order undecided within cap {c}"));
            r.result = json!({"order": "undecided"});
            r.undecided.push(json!({"order": format!("cap {c}")}));
        }
    }
    Ok(r)
}

fn label_text(l: &FixedLabel) -> String {
    match l {
        FixedLabel::Decided(Label::Infinite) => "inf".into(),
        FixedLabel::Decided(Label::Finite(m)) => m.to_string(),
        FixedLabel::Undecided(_) => "undecided".into(),
    }
}

fn fixed(arg: &SystemArg, tau: &str, cap: u64) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let t = parse_tau(&sys, tau)?;
    let mut r = Report::new("fixed");
    r.input("system", arg.system.clone());
    r.input("tau", t.to_string());
    r.input("cap", cap);
    let pres = match fixedpoint::fixed_system(&geo, &t, cap) {
        Ok(p) => p,
        Err(e @ FixedPointError::FullSubgraph { .. }) => {
            r.line(format!("full-subgraph law violated: {e}"));
            r.result = json!({"full_subgraph_law": false});
            r.certificates = json!({"violation": e.to_string()});
            r.exit = 1;
            return Ok(r);
        }
        Err(e) => return Err(domain(e)),
    };
    let mut gens = Vec::new();
    for (orbit, g) in pres.orbits.iter().zip(&pres.generators) {
        match g {
            Some(w) => {
                r.line(format!("orbit {}: w0 = {}", format_set(orbit), format_word(w.word())));
                gens.push(json!({"orbit": set_value(orbit), "generator": word_value(w.word())}));
            }
            None => {
                r.line(format!("orbit {}: infinite type, no generator", format_set(orbit)));
                gens.push(json!({"orbit": set_value(orbit), "generator": Value::Null}));
            }
        }
    }
    let fin = pres.finite_orbits();
    let matrix: Vec<Vec<String>> = (0..fin.len())
        .map(|a| (0..fin.len()).map(|b| label_text(&pres.labels[a][b])).collect())
        .collect();
    for row in &matrix {
        r.line(format!("[{}]", row.join(" ")));
    }
    for a in 0..fin.len() {
        for b in a + 1..fin.len() {
            if let FixedLabel::Undecided(c) = pres.labels[a][b] {
                r.undecided.push(json!({
                    "label": [set_value(&pres.orbits[fin[a]]), set_value(&pres.orbits[fin[b]])],
                    "cap": c,
                }));
            }
        }
    }
    r.result = json!({"generators": gens, "coxeter_matrix": matrix});
    r.certificates = json!({"full_subgraph_law": true, "generators_fixed": true});
    Ok(r)
}

fn finite_index(arg: &SystemArg, tau: &str) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let t = parse_tau(&sys, tau)?;
    let mut r = Report::new("finite-index");
    r.input("system", arg.system.clone());
    r.input("tau", t.to_string());
    let verdict = fixedpoint::finite_index_fixed::<TrigScalar>(&sys, &t).map_err(domain)?;
    let mut certs = Vec::new();
    for (part, tag) in classify::classify_system::<TrigScalar>(&sys).map_err(domain)? {
        if !tag.is_finite() {
            certs.push(json!({
                "component": set_value(&part),
                "type": tag.to_string(),
                "fixed_pointwise": t.fixes_pointwise(&part),
            }));
        }
    }
    r.line(format!("finite index: {verdict}"));
    r.result = json!({"finite_index": verdict});
    r.certificates = json!({"infinite_components": certs});
    Ok(r)
}

fn essential_verb(ctx: &Ctx, arg: &SystemArg, word: &str, depth: usize, cap: u64) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let w = element(&sys, &geo, word)?;
    let mut r = Report::new("essential");
    r.input("system", arg.system.clone());
    r.input("word", word);
    r.input("depth", depth);
    r.input("cap", cap);
    let found = essential::odd_reflections(&w, depth, cap);
    r.line(format!(
        "{} roots examined: {} odd, {} undecided",
        found.examined,
        found.odd.len(),
        found.undecided.len()
    ));
    for u in &found.undecided {
        r.undecided.push(json!({"root": ctx.root(u), "class": format!("undecided within cap {cap}")}));
    }
    let odd_json: Vec<Value> = found
        .odd
        .iter()
        .map(|g| match essential::classify_root(&w, g, cap) {
            RootClass::Odd { minus, plus } => {
                json!({"root": ctx.root(g), "minus_infinity": minus.symbol().to_string(), "plus_infinity": plus.symbol().to_string()})
            }
            _ => json!({"root": ctx.root(g)}),
        })
        .collect();
    match essential::pinf_generates(&w, depth, cap) {
        Ok(PinfVerdict::Yes { derivations, .. }) => {
            r.line("odd reflections generate W: yes");
            r.result = json!({"odd_roots": odd_json, "odd_reflections_generate": "yes"});
            r.certificates = json!({"derivations": derivations.iter().map(|d| json!({
                "simple": d.simple + 1,
                "base": d.base,
                "reflectors": d.reflectors,
            })).collect::<Vec<_>>()});
        }
        Ok(PinfVerdict::Undecided { missing, .. }) => {
            r.line(format!("odd reflections generate W: undecided (missing {})", format_set(&missing)));
            r.result = json!({"odd_roots": odd_json, "odd_reflections_generate": "undecided"});
            r.undecided.push(json!({"missing_simple_roots": set_value(&missing)}));
        }
        Err(e) => {
            r.line(format!("generation test not applicable: {e}"));
            r.result = json!({"odd_roots": odd_json, "odd_reflections_generate": Value::Null, "reason": e.to_string()});
        }
    }
    Ok(r)
}

fn parse_query(
    sys: &CoxeterSystem,
    geo: &Arc<Geometry>,
    group: &FiniteActionGroup,
    q: &str,
) -> Result<SemidirectElement<TrigScalar>, CliError> {
    let (w, g) = q
        .split_once(';')
        .ok_or_else(|| usage(format!("query {q:?}: expected \"w-word ; g-index\"")))?;
    let w = element(sys, geo, w)?;
    let g: usize = g.trim().parse().map_err(|_| usage(format!("query {q:?}: bad group index")))?;
    if g >= group.order() {
        return Err(usage(format!("group index {g} out of range (|G| = {})", group.order())));
    }
    Ok(SemidirectElement::new(w, g))
}

fn aci_verb(
    arg: &SystemArg,
    action: Option<&Path>,
    query: Option<&str>,
    radius: usize,
    target: usize,
    cap: usize,
) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let group = load_action(&sys, action, cap)?;
    let mut r = Report::new("aci");
    r.input("system", arg.system.clone());
    r.input("action", action.map(|p| p.display().to_string()));
    r.input("query", query);
    r.input("radius", radius);
    r.input("target", target);
    r.input("cap", cap);
    let report = aci::aci_subgroup::<TrigScalar>(&sys, &group).map_err(domain)?;
    let elements: Vec<String> = group.elements.iter().map(|g| g.to_string()).collect();
    let g_rho: Vec<String> = report.g_rho.iter().map(|&i| elements[i].clone()).collect();
    r.line(format!("|G| = {}", group.order()));
    let o_rho = if report.o_rho.is_empty() { "none".to_string() } else { aci::format_components(&report.o_rho) };
    r.line(format!("O_rho: {o_rho}"));
    r.line(format!("G_rho: {}", if g_rho.is_empty() { "none".to_string() } else { g_rho.join(" ") }));
    let mut result = Map::new();
    result.insert("group".into(), json!(elements));
    result.insert("o_rho".into(), json!(report.o_rho.iter().map(|p| set_value(p)).collect::<Vec<_>>()));
    result.insert("g_rho".into(), json!(g_rho));
    if let Some(q) = query {
        let x = parse_query(&sys, &geo, &group, q)?;
        let verdict = aci::is_aci_involution::<TrigScalar>(&sys, &group, &x).map_err(domain)?;
        r.line(verdict.to_string());
        result.insert("verdict".into(), json!(verdict.to_string()));
        if let AciVerdict::NotAci(_) = verdict {
            let growth = aci::conjugate_growth(&geo, &group, &x, target, radius);
            r.line(format!(
                "growth: {} distinct conjugates within radius {} (target {target}, radius cap {radius})",
                growth.count, growth.radius
            ));
            r.certificates = json!({"growth": {
                "count": growth.count,
                "radius": growth.radius,
                "reached": growth.reached,
            }});
            if !growth.reached {
                r.undecided.push(json!({"growth": format!("{} conjugates by radius {radius}", growth.count)}));
            }
        }
    }
    r.result = Value::Object(result);
    Ok(r)
}

fn row_json(ctx: &Ctx, rep: &RowReport) -> Value {
    json!({
        "row": rep.row,
        "tau": rep.tau,
        "passed": rep.passed(),
        "c": rep.c.as_ref().map(|c| ctx.scalar(c)),
        "clauses": rep.clauses.iter().map(|c| json!({"id": c.id, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
    })
}

fn verify_tables(ctx: &Ctx, table: Option<u8>) -> Result<Report, CliError> {
    let mut r = Report::new("verify-tables");
    r.input("table", table.map(|t| t.to_string()).unwrap_or_else(|| "all".into()));
    let mut rows = Vec::new();
    if table != Some(2) {
        rows.extend(witness::table1_rows());
    }
    if table != Some(1) {
        rows.extend(witness::table2_rows());
    }
    let mut out = Vec::new();
    let (mut passed, mut failed) = (0, 0);
    for row in &rows {
        let reports = witness::verify_row(row).map_err(domain)?;
        for rep in &reports {
            let c = rep.c.as_ref().map(|c| format!(" c = {}", ctx.scalar_text(c))).unwrap_or_default();
            r.line(format!("{rep}{c}"));
            if rep.passed() {
                passed += 1;
            } else {
                failed += 1;
            }
            out.push(row_json(ctx, rep));
        }
    }
    r.line(format!("{passed} passed, {failed} failed"));
    r.result = json!({"rows": out, "passed": passed, "failed": failed});
    if failed > 0 {
        r.exit = 1;
    }
    Ok(r)
}

fn oracle(arg: &SystemArg, action: Option<&Path>, cap: usize) -> Result<Report, CliError> {
    let sys = load_system(arg)?;
    let geo = geometry(&sys)?;
    let group = load_action(&sys, action, aci::DEFAULT_GROUP_CAP)?;
    let mut r = Report::new("oracle");
    r.input("system", arg.system.clone());
    r.input("action", action.map(|p| p.display().to_string()));
    r.input("cap", cap);
    let bf = aci::brute_force_aci_finite(&geo, &group, cap).map_err(domain)?;
    let agrees = bf.agrees();
    r.line(format!(
        "involutions: {}, generated: {}, predicted: {}, agree: {agrees}",
        bf.involutions.len(),
        bf.generated.len(),
        bf.predicted.len()
    ));
    r.result = json!({
        "involutions": bf.involutions.len(),
        "generated": bf.generated.len(),
        "predicted": bf.predicted.len(),
        "agree": agrees,
    });
    if !agrees {
        r.exit = 1;
    }
    Ok(r)
}
