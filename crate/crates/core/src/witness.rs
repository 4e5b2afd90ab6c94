//! Witness rows for the affine and compact hyperbolic cases: roots `beta`,
//! `gamma` and a subspace `V'` certifying that `w = s_beta s_gamma` has
//! infinite order with `<w> & <tau(w)> = 1`. Rows ship as data files and
//! are checked clause by clause, exactly.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::classify::{classify_component, ComponentKind};
use crate::coxsystem::{CoxeterSystem, GraphAutomorphism};
use crate::exactreal::{QuadScalar, TrigScalar};
use crate::geom::{Geometry, Root};
use crate::linalg::{rank_of, Matrix};
use crate::scalar::{Field, Sign};
use crate::words::{parse_word, GroupElement};
use num_traits::{One, Zero};

type T = TrigScalar;

macro_rules! embedded_systems {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/systems/", $name, ".cox")))),*]
    };
}

const SYSTEMS: &[(&str, &str)] = embedded_systems!(
    "affine_A2", "affine_A3", "affine_A4", "affine_A5", "affine_B3", "affine_B4", "affine_B5",
    "affine_C2", "affine_C3", "affine_C4", "affine_C5", "affine_D4", "affine_D5", "affine_E6",
    "affine_E7", "hyper_X1", "hyper_X2_3_4", "hyper_X2_4_3", "hyper_X3_4_3_3", "hyper_Y1",
    "hyper_Y2", "hyper_Y3_5", "hyper_Y4_5", "hyper_Y5", "hyper_Y6_5_5",
);

pub const TABLE1: &str = include_str!("../data/table1.rows");
pub const TABLE2: &str = include_str!("../data/table2.rows");

/// Text of a shipped system file, by name without extension.
pub fn embedded_system(name: &str) -> Option<&'static str> {
    SYSTEMS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn embedded_system_names() -> Vec<&'static str> {
    SYSTEMS.iter().map(|(n, _)| *n).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown system {name:?}")]
    UnknownSystem { line: usize, name: String },
    #[error("row {0}: gamma is not determined: {1}")]
    Gamma(String, String),
    #[error("row {0}: no qualifying automorphism")]
    NoAutomorphism(String),
    #[error("pairing <beta,gamma> = {0} is not < -1")]
    NotHyperbolicPair(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauSpec {
    /// Every non-identity automorphism.
    All,
    /// Every automorphism moving the given generator (0-indexed).
    Moves(usize),
    Explicit(GraphAutomorphism),
}

#[derive(Clone, Debug, PartialEq)]
pub enum GammaSpec {
    Coords(Vec<T>),
    /// `s_word . alpha_s`.
    Word { word: Vec<usize>, alpha: usize },
    /// Highest root of the finite parabolic on `S \ {s}`.
    Highest(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum VPrime {
    /// Simple roots spanning `V'` (0-indexed).
    Basis(Vec<usize>),
    /// A functional spanning `Ann(V')`, over the dual basis.
    Ann(Vec<T>),
}

#[derive(Clone, Debug)]
pub struct WitnessRow {
    pub name: String,
    pub system_name: String,
    pub system: CoxeterSystem,
    pub tau: TauSpec,
    pub beta: Root<T>,
    pub gamma_spec: GammaSpec,
    pub vprime: VPrime,
}

fn parse_coords(text: &str, rank: usize, line: usize) -> Result<Vec<T>, WitnessError> {
    let coords: Result<Vec<T>, _> = text.split_whitespace().map(T::parse).collect();
    let coords = coords.map_err(|e| WitnessError::Syntax {
        line,
        message: e.to_string(),
    })?;
    if coords.len() != rank {
        return Err(WitnessError::Syntax {
            line,
            message: format!("expected {rank} coordinates, found {}", coords.len()),
        });
    }
    Ok(coords)
}

fn parse_index(text: &str, rank: usize, line: usize) -> Result<usize, WitnessError> {
    match text.trim().parse::<usize>() {
        Ok(i) if i >= 1 && i <= rank => Ok(i - 1),
        _ => Err(WitnessError::Syntax {
            line,
            message: format!("bad generator index {text:?}"),
        }),
    }
}

/// Parse rows; `lookup` resolves a system name to `.cox` text.
pub fn parse_rows(text: &str, lookup: impl Fn(&str) -> Option<String>) -> Result<Vec<WitnessRow>, WitnessError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| WitnessError::Syntax { line, message };
        let mut fields = std::collections::BTreeMap::new();
        for part in content.split(';') {
            let part = part.trim();
            let (key, value) = part.split_once(' ').unwrap_or((part, ""));
            if fields.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(syntax(format!("field {key:?} repeated")));
            }
        }
        let get = |k: &str| fields.get(k).cloned().ok_or_else(|| syntax(format!("missing field {k:?}")));
        let name = get("row")?;
        let system_name = get("system")?;
        let sys_text = lookup(&system_name).ok_or(WitnessError::UnknownSystem {
            line,
            name: system_name.clone(),
        })?;
        let system = CoxeterSystem::parse(&sys_text).map_err(|e| syntax(e.to_string()))?;
        let rank = system.rank();
        let tau_text = get("tau")?;
        let tau = if tau_text == "all" {
            TauSpec::All
        } else if let Some(i) = tau_text.strip_prefix("moves ") {
            TauSpec::Moves(parse_index(i, rank, line)?)
        } else {
            TauSpec::Explicit(GraphAutomorphism::parse(&system, &tau_text).map_err(|e| syntax(e.to_string()))?)
        };
        let beta = Root::new(parse_coords(&get("beta")?, rank, line)?);
        let gamma_text = get("gamma")?;
        let gamma_spec = if let Some(rest) = gamma_text.strip_prefix("word ") {
            let (word, alpha) = rest
                .split_once(". alpha")
                .ok_or_else(|| syntax("expected `word <letters> . alpha <i>`".to_string()))?;
            GammaSpec::Word {
                word: parse_word(word, rank).map_err(|e| syntax(e.to_string()))?,
                alpha: parse_index(alpha, rank, line)?,
            }
        } else if let Some(i) = gamma_text.strip_prefix("highest ") {
            GammaSpec::Highest(parse_index(i, rank, line)?)
        } else {
            GammaSpec::Coords(parse_coords(&gamma_text, rank, line)?)
        };
        let vp_text = get("vprime")?;
        let vprime = if let Some(rest) = vp_text.strip_prefix("ann") {
            VPrime::Ann(parse_coords(rest, rank, line)?)
        } else if let Some(rest) = vp_text.strip_prefix("basis") {
            let idx: Result<Vec<usize>, _> = rest.split_whitespace().map(|i| parse_index(i, rank, line)).collect();
            VPrime::Basis(idx?)
        } else {
            return Err(syntax(format!("bad vprime {vp_text:?}")));
        };
        rows.push(WitnessRow {
            name,
            system_name,
            system,
            tau,
            beta,
            gamma_spec,
            vprime,
        });
    }
    Ok(rows)
}

fn embedded_lookup(name: &str) -> Option<String> {
    embedded_system(name).map(str::to_string)
}

pub fn table1_rows() -> Vec<WitnessRow> {
    parse_rows(TABLE1, embedded_lookup).expect("shipped table parses")
}

pub fn table2_rows() -> Vec<WitnessRow> {
    parse_rows(TABLE2, embedded_lookup).expect("shipped table parses")
}

/// The dominant root of the finite parabolic on `subset`, as a vector of
/// the full rank.
pub fn highest_root(geo: &Geometry<T>, subset: &[usize]) -> Option<Root<T>> {
    let sub = geo.system().restrict(subset);
    let sub_geo = Geometry::<T>::new(&sub).ok()?;
    let all = sub_geo.enumerate_roots(1000);
    if !all.closed {
        return None;
    }
    let dominant: Vec<&Root<T>> = all
        .roots
        .iter()
        .filter(|r| (0..sub.rank()).all(|s| !sub_geo.pairing_simple(s, &r.coords).is_negative()))
        .collect();
    if dominant.len() != 1 {
        return None;
    }
    let mut coords = vec![T::zero(); geo.rank()];
    for (k, &s) in subset.iter().enumerate() {
        coords[s] = dominant[0].coords[k].clone();
    }
    Some(Root::new(coords))
}

impl WitnessRow {
    pub fn geometry(&self) -> Arc<Geometry<T>> {
        Arc::new(Geometry::new(&self.system).expect("trig scalars represent every label"))
    }

    pub fn gamma(&self, geo: &Geometry<T>) -> Result<Root<T>, WitnessError> {
        match &self.gamma_spec {
            GammaSpec::Coords(c) => Ok(Root::new(c.clone())),
            GammaSpec::Word { word, alpha } => {
                let mut v = Root::<T>::simple(geo.rank(), *alpha).coords;
                for &s in word.iter().rev() {
                    v = geo.simple_reflect(s, &v);
                }
                Ok(Root::new(v))
            }
            GammaSpec::Highest(s) => {
                let subset: Vec<usize> = (0..geo.rank()).filter(|t| t != s).collect();
                highest_root(geo, &subset)
                    .ok_or_else(|| WitnessError::Gamma(self.name.clone(), "parabolic has no unique highest root".into()))
            }
        }
    }

    /// Automorphisms the row is to be checked against.
    pub fn automorphisms(&self) -> Vec<GraphAutomorphism> {
        match &self.tau {
            TauSpec::Explicit(t) => vec![t.clone()],
            TauSpec::All => self.system.automorphisms().into_iter().filter(|t| !t.is_identity()).collect(),
            TauSpec::Moves(i) => self
                .system
                .automorphisms()
                .into_iter()
                .filter(|t| t.apply(*i) != *i)
                .collect(),
        }
    }

    pub fn with_tau(&self, tau: GraphAutomorphism) -> WitnessRow {
        WitnessRow {
            tau: TauSpec::Explicit(tau),
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub row: String,
    pub tau: String,
    pub clauses: Vec<Clause>,
    /// `<beta, gamma>`.
    pub c: Option<T>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.clauses.iter().filter(|c| !c.passed).map(|c| c.id).collect()
    }

    fn push(&mut self, id: &'static str, passed: bool, detail: impl Into<String>) {
        self.clauses.push(Clause {
            id,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{} tau={}: {verdict}", self.row, self.tau)?;
        for c in self.clauses.iter().filter(|c| !c.passed) {
            write!(f, " [{}: {}]", c.id, c.detail)?;
        }
        Ok(())
    }
}

fn render_vec(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn permute(tau: &GraphAutomorphism, v: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); v.len()];
    for (i, x) in v.iter().enumerate() {
        out[tau.apply(i)] = x.clone();
    }
    out
}

/// Nonzero vectors `u`, `v` proportional.
fn proportional(u: &[T], v: &[T]) -> bool {
    rank_of(&[u.to_vec(), v.to_vec()]) < 2
}

/// Certify positivity of a root by descending to a simple root.
fn root_clause(report: &mut RowReport, geo: &Geometry<T>, label: &str, r: &Root<T>) -> bool {
    match geo.descend_to_simple(r, 10_000) {
        Ok((word, s)) => {
            let id = if label == "beta" { "beta-root" } else { "gamma-root" };
            report.push(id, true, format!("{label} = s[{}] alpha_{}", crate::words::format_word(&word), s + 1));
            true
        }
        Err(e) => {
            let id = if label == "beta" { "beta-root" } else { "gamma-root" };
            report.push(id, false, e.to_string());
            false
        }
    }
}

fn classification_clause(report: &mut RowReport, sys: &CoxeterSystem, want: ComponentKind) {
    let all: Vec<usize> = (0..sys.rank()).collect();
    match classify_component::<T>(sys, &all) {
        Ok(tag) if tag.kind == want => report.push("type", true, tag.to_string()),
        Ok(tag) => report.push("type", false, format!("classified {tag}")),
        Err(e) => report.push("type", false, e.to_string()),
    }
}

fn tau_clause(report: &mut RowReport, sys: &CoxeterSystem, tau: &GraphAutomorphism) -> bool {
    let ok = GraphAutomorphism::new(sys, tau.images().to_vec()).is_ok();
    report.push("tau", ok, if ok { "automorphism" } else { "not an automorphism" });
    ok
}

/// Affine clauses (a)-(e) for one automorphism.
pub fn verify_affine_row(row: &WitnessRow, tau: &GraphAutomorphism) -> RowReport {
    let geo = row.geometry();
    let mut report = RowReport {
        row: row.name.clone(),
        tau: tau.to_string(),
        clauses: Vec::new(),
        c: None,
    };
    classification_clause(&mut report, &row.system, ComponentKind::Affine);
    if !tau_clause(&mut report, &row.system, tau) {
        return report;
    }
    let gamma = match row.gamma(&geo) {
        Ok(g) => g,
        Err(e) => {
            report.push("gamma-root", false, e.to_string());
            return report;
        }
    };
    let beta = &row.beta;
    root_clause(&mut report, &geo, "beta", beta);
    root_clause(&mut report, &geo, "gamma", &gamma);
    let n = geo.rank();

    // (a)
    let c = geo.pairing(&beta.coords, &gamma.coords);
    report.push("a", c == T::integer(-1), format!("<beta,gamma> = {c}"));
    report.c = Some(c);

    // (b)
    let null: Vec<T> = (0..n).map(|i| beta.coords[i].clone() + &gamma.coords[i]).collect();
    let bad: Vec<usize> = (0..n).filter(|&s| !geo.pairing_simple(s, &null).is_zero()).collect();
    report.push(
        "b",
        bad.is_empty(),
        if bad.is_empty() {
            format!("beta+gamma = {} is radical", render_vec(&null))
        } else {
            format!("<beta+gamma, alpha_s> != 0 for s in {:?}", bad.iter().map(|s| s + 1).collect::<Vec<_>>())
        },
    );

    // (c)
    let pair_beta: Vec<T> = (0..n).map(|s| geo.pairing_simple(s, &beta.coords)).collect();
    let f = match &row.vprime {
        VPrime::Ann(f) => f.clone(),
        VPrime::Basis(_) => {
            report.push("c", false, "affine rows need an annihilating functional");
            return report;
        }
    };
    let f_nonzero = f.iter().any(|x| !x.is_zero());
    let prop = f_nonzero && proportional(&f, &pair_beta);
    report.push(
        "c",
        prop,
        format!("f = {}, <beta,.> = {}", render_vec(&f), render_vec(&pair_beta)),
    );

    // (d)
    let tf = permute(tau, &f);
    let moved = f_nonzero && !proportional(&f, &tf);
    report.push("d", moved, format!("tau(f) = {}", render_vec(&tf)));

    // (e)
    let w = geo.reflection_matrix(&beta.coords).mul(&geo.reflection_matrix(&gamma.coords));
    let mut v = beta.coords.clone();
    let mut bad_k = None;
    for k in 1..=10i64 {
        v = w.apply(&v);
        let want: Vec<T> = (0..n)
            .map(|i| T::integer(2 * k + 1) * &beta.coords[i] + T::integer(2 * k) * &gamma.coords[i])
            .collect();
        if v != want || v == beta.coords {
            bad_k = Some(k);
            break;
        }
    }
    report.push(
        "e",
        bad_k.is_none(),
        match bad_k {
            None => "w^k beta = (2k+1) beta + 2k gamma for k = 1..10".to_string(),
            Some(k) => format!("orbit formula fails at k = {k}"),
        },
    );
    report
}

/// Eigen-data of `s_beta s_gamma` for `c = <beta,gamma> < -1`, in
/// `Q(...)[sqrt(c^2 - 1)]`.
#[derive(Clone, Debug)]
pub struct EigenWitness {
    pub c: T,
    pub lambda_plus: QuadScalar<T>,
    pub lambda_minus: QuadScalar<T>,
    pub v_plus: Vec<QuadScalar<T>>,
    pub v_minus: Vec<QuadScalar<T>>,
}

pub fn eigen_witness(geo: &Geometry<T>, beta: &Root<T>, gamma: &Root<T>) -> Result<EigenWitness, WitnessError> {
    let c = geo.pairing(&beta.coords, &gamma.coords);
    if !(c.clone() + T::one()).is_negative() {
        return Err(WitnessError::NotHyperbolicPair(c.to_string()));
    }
    let d = c.clone() * &c - T::one();
    let two_c2_m1 = T::integer(2) * &c * &c - T::one();
    let two_c = T::integer(2) * &c;
    let lambda_plus = QuadScalar::new(two_c2_m1.clone(), -two_c.clone(), d.clone());
    let lambda_minus = QuadScalar::new(two_c2_m1, two_c, d.clone());
    let vec = |sign: i64| -> Vec<QuadScalar<T>> {
        (0..beta.coords.len())
            .map(|i| {
                let a = -(c.clone() * &beta.coords[i]) + &gamma.coords[i];
                let b = T::integer(sign) * &beta.coords[i];
                QuadScalar::new(a, b, d.clone())
            })
            .collect()
    };
    Ok(EigenWitness {
        v_plus: vec(1),
        v_minus: vec(-1),
        c,
        lambda_plus,
        lambda_minus,
    })
}

fn apply_quad(m: &Matrix<T>, v: &[QuadScalar<T>]) -> Vec<QuadScalar<T>> {
    let d = v[0].radicand().cloned().expect("radicand set");
    let a: Vec<T> = v.iter().map(|x| x.a.clone()).collect();
    let b: Vec<T> = v.iter().map(|x| x.b.clone()).collect();
    m.apply(&a)
        .into_iter()
        .zip(m.apply(&b))
        .map(|(x, y)| QuadScalar::new(x, y, d.clone()))
        .collect()
}

impl EigenWitness {
    /// `lambda+ lambda- = 1`, `lambda+ + lambda- = 4c^2 - 2`, and
    /// `w v = lambda v` for both signs, with `w = s_beta s_gamma`.
    pub fn check(&self, w: &Matrix<T>) -> Vec<(&'static str, bool)> {
        let d = self.lambda_plus.radicand().cloned().expect("radicand set");
        let one = QuadScalar::new(T::one(), T::zero(), d.clone());
        let sum = QuadScalar::new(T::integer(4) * &self.c * &self.c - T::integer(2), T::zero(), d);
        let scaled = |l: &QuadScalar<T>, v: &[QuadScalar<T>]| -> Vec<QuadScalar<T>> {
            v.iter().map(|x| l.clone() * x.clone()).collect()
        };
        vec![
            ("product", self.lambda_plus.clone() * self.lambda_minus.clone() == one),
            ("sum", self.lambda_plus.clone() + self.lambda_minus.clone() == sum),
            ("v+", apply_quad(w, &self.v_plus) == scaled(&self.lambda_plus, &self.v_plus)),
            ("v-", apply_quad(w, &self.v_minus) == scaled(&self.lambda_minus, &self.v_minus)),
            ("|lambda| != 1", (self.c.clone() * &self.c - T::one()).sign() == Sign::Positive),
        ]
    }
}

/// Compact hyperbolic clauses (a)-(e) for one automorphism.
pub fn verify_hyperbolic_row(row: &WitnessRow, tau: &GraphAutomorphism) -> RowReport {
    let geo = row.geometry();
    let mut report = RowReport {
        row: row.name.clone(),
        tau: tau.to_string(),
        clauses: Vec::new(),
        c: None,
    };
    classification_clause(&mut report, &row.system, ComponentKind::CompactHyperbolic);
    if !tau_clause(&mut report, &row.system, tau) {
        return report;
    }
    let gamma = match row.gamma(&geo) {
        Ok(g) => g,
        Err(e) => {
            report.push("gamma-root", false, e.to_string());
            return report;
        }
    };
    let beta = &row.beta;
    root_clause(&mut report, &geo, "beta", beta);
    root_clause(&mut report, &geo, "gamma", &gamma);
    let n = geo.rank();

    // (a)
    let c = geo.pairing(&beta.coords, &gamma.coords);
    let below = (c.clone() + T::one()).is_negative();
    report.push("a", below, format!("c = {c}"));
    report.c = Some(c.clone());

    // (b), (c)
    let basis = match &row.vprime {
        VPrime::Basis(b) => b.clone(),
        VPrime::Ann(_) => {
            report.push("b", false, "hyperbolic rows need a basis of V'");
            return report;
        }
    };
    let bad: Vec<usize> = basis
        .iter()
        .copied()
        .filter(|&s| !geo.pairing_simple(s, &beta.coords).is_zero() || !geo.pairing_simple(s, &gamma.coords).is_zero())
        .collect();
    report.push(
        "b",
        bad.is_empty(),
        if bad.is_empty() {
            "V' is orthogonal to beta and gamma".to_string()
        } else {
            format!("not orthogonal: {:?}", bad.iter().map(|s| s + 1).collect::<Vec<_>>())
        },
    );
    let mut distinct = basis.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let codim = n as i64 - distinct.len() as i64;
    report.push("c", codim == 3 && distinct.len() == basis.len(), format!("codim V' = {codim}"));

    // (d)
    let tb = permute(tau, &beta.coords);
    let tg = permute(tau, &gamma.coords);
    let r = rank_of(&[beta.coords.clone(), gamma.coords.clone(), tb, tg]);
    report.push("d", r > 2, format!("rank of beta, gamma, tau(beta), tau(gamma) = {r}"));

    // (e)
    match eigen_witness(&geo, beta, &gamma) {
        Ok(ew) => {
            let w = geo.reflection_matrix(&beta.coords).mul(&geo.reflection_matrix(&gamma.coords));
            let failed: Vec<&str> = ew.check(&w).into_iter().filter(|(_, ok)| !ok).map(|(id, _)| id).collect();
            report.push(
                "e",
                failed.is_empty(),
                if failed.is_empty() {
                    format!("lambda+ = {}, lambda- = {}", ew.lambda_plus, ew.lambda_minus)
                } else {
                    format!("failed identities: {failed:?}")
                },
            );
        }
        Err(e) => report.push("e", false, e.to_string()),
    }
    report
}

/// Check a row against every qualifying automorphism.
pub fn verify_row(row: &WitnessRow) -> Result<Vec<RowReport>, WitnessError> {
    let taus = row.automorphisms();
    if taus.is_empty() {
        return Err(WitnessError::NoAutomorphism(row.name.clone()));
    }
    let affine = matches!(row.vprime, VPrime::Ann(_));
    Ok(taus
        .iter()
        .map(|t| {
            if affine {
                verify_affine_row(row, t)
            } else {
                verify_hyperbolic_row(row, t)
            }
        })
        .collect())
}

/// `span{beta1, gamma1} != span{beta2, gamma2}` for pairs with pairing
/// below `-1`.
pub fn certify_trivial_intersection(
    geo: &Geometry<T>,
    first: (&Root<T>, &Root<T>),
    second: (&Root<T>, &Root<T>),
) -> Result<bool, WitnessError> {
    for (b, g) in [first, second] {
        let c = geo.pairing(&b.coords, &g.coords);
        if !(c.clone() + T::one()).is_negative() {
            return Err(WitnessError::NotHyperbolicPair(c.to_string()));
        }
    }
    let r = rank_of(&[
        first.0.coords.clone(),
        first.1.coords.clone(),
        second.0.coords.clone(),
        second.1.coords.clone(),
    ]);
    Ok(r > 2)
}

/// Affine analogue: the fixed hyperplanes differ iff `f` and `tau(f)` are
/// not proportional.
pub fn certify_trivial_intersection_affine(f: &[T], tau: &GraphAutomorphism) -> bool {
    f.iter().any(|x| !x.is_zero()) && !proportional(f, &permute(tau, f))
}

/// `s_beta s_gamma` as a group element.
pub fn witness_element(geo: &Arc<Geometry<T>>, beta: &Root<T>, gamma: &Root<T>) -> GroupElement<T> {
    crate::essential::reflection_product(geo, &[beta.clone(), gamma.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(table: &[WitnessRow], name: &str) -> WitnessRow {
        table.iter().find(|r| r.name == name).unwrap().clone()
    }

    #[test]
    fn shipped_tables_parse() {
        assert_eq!(table1_rows().len(), 15);
        assert_eq!(table2_rows().len(), 10);
    }

    #[test]
    fn a2_row() {
        let r = row(&table1_rows(), "A~2");
        let taus = r.automorphisms();
        assert!(!taus.is_empty());
        for t in &taus {
            let rep = verify_affine_row(&r, t);
            assert!(rep.passed(), "{rep}");
        }
        let rep = verify_affine_row(&r, &GraphAutomorphism::identity(3));
        assert_eq!(rep.failed(), vec!["d"]);
    }

    #[test]
    fn x3_row() {
        let r = row(&table2_rows(), "X3(4,3,3)");
        let reps = verify_row(&r).unwrap();
        assert!(reps.iter().all(|x| x.passed()), "{:?}", reps);
        let c = reps[0].c.clone().unwrap();
        assert_eq!(c, T::parse("-1/2 - sqrt(2)/2").unwrap());
        let rep = verify_hyperbolic_row(&r, &GraphAutomorphism::identity(3));
        assert_eq!(rep.failed(), vec!["d"]);
    }

    #[test]
    fn y6_pairing() {
        let r = row(&table2_rows(), "Y6(5,5)");
        let geo = r.geometry();
        let gamma = r.gamma(&geo).unwrap();
        let c = geo.pairing(&r.beta.coords, &gamma.coords);
        let cos5 = T::cos_pi_frac(1, 5).unwrap();
        assert_eq!(c, -(T::integer(2) * &cos5 * &cos5));
    }

    #[test]
    fn highest_root_a2() {
        let g = Geometry::<T>::new(&CoxeterSystem::parse("rank 3\nedge 1 2 3").unwrap()).unwrap();
        let h = highest_root(&g, &[0, 1]).unwrap();
        assert_eq!(h.coords, vec![T::one(), T::one(), T::zero()]);
    }

    #[test]
    fn intersection_certificates() {
        let r = row(&table2_rows(), "X3(4,3,3)");
        let geo = r.geometry();
        let g = r.gamma(&geo).unwrap();
        let tau = r.automorphisms()[0].clone();
        let tb = Root::new(permute(&tau, &r.beta.coords));
        let tg = Root::new(permute(&tau, &g.coords));
        assert!(certify_trivial_intersection(&geo, (&r.beta, &g), (&tb, &tg)).unwrap());
        assert!(!certify_trivial_intersection(&geo, (&r.beta, &g), (&r.beta, &g)).unwrap());
        let a1 = Root::<T>::simple(3, 0);
        assert!(certify_trivial_intersection(&geo, (&a1, &a1), (&r.beta, &g)).is_err());
    }
}
