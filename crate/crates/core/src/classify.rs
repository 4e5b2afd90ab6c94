//! Finite / affine / compact hyperbolic recognition of irreducible
//! components, by catalog match cross-checked with exact definiteness.

use std::fmt;

use thiserror::Error;

use crate::coxsystem::{format_set, CoxeterSystem, Label};
use crate::geom::{GeomError, Geometry, GramForm};
use crate::linalg::Matrix;
use crate::scalar::{CoxeterScalar, Field, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Finite,
    Affine,
    CompactHyperbolic,
    OtherInfinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentTag {
    pub kind: ComponentKind,
    /// Catalog name, absent for `OtherInfinite`.
    pub name: Option<String>,
}

impl ComponentTag {
    pub fn is_finite(&self) -> bool {
        self.kind == ComponentKind::Finite
    }
}

impl fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ComponentKind::Finite => "Finite",
            ComponentKind::Affine => "Affine",
            ComponentKind::CompactHyperbolic => "CompactHyperbolic",
            ComponentKind::OtherInfinite => return f.write_str("OtherInfinite"),
        };
        write!(f, "{kind}({})", self.name.as_deref().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} is not a connected component")]
    NotConnected(String),
    #[error("classification disagreement on {part}: {detail}")]
    Inconsistent { part: String, detail: String },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// All leading principal minors positive. Symmetric elimination without
/// pivoting: the `k`-th pivot is the ratio of consecutive leading minors.
pub fn is_positive_definite<T: Field>(gram: &GramForm<T>) -> bool {
    let n = gram.rows();
    let mut a = gram.clone();
    for k in 0..n {
        let pivot = a[(k, k)].clone();
        if pivot.sign() != Sign::Positive {
            return false;
        }
        let inv = pivot.inverse().expect("positive pivot");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() * &inv;
            for j in k..n {
                let v = f.clone() * &a[(k, j)];
                let slot = &mut a[(i, j)];
                *slot = std::mem::replace(slot, T::zero()) - v;
            }
        }
    }
    true
}

/// Leading principal minors, in order.
pub fn leading_minors<T: Field>(gram: &GramForm<T>) -> Vec<T> {
    (1..=gram.rows())
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            gram.submatrix(&idx, &idx).det()
        })
        .collect()
}

/// Every principal minor nonnegative (all `2^n - 1` of them).
pub fn is_positive_semidefinite<T: Field>(gram: &GramForm<T>) -> bool {
    let n = gram.rows();
    assert!(n < 24, "principal-minor test is exponential");
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        gram.submatrix(&idx, &idx).det().sign() != Sign::Negative
    })
}

pub fn radical_dimension<T: Field>(gram: &GramForm<T>) -> usize {
    gram.rows() - gram.rank()
}

/// Every proper principal sub-form (dropping one generator suffices)
/// positive definite.
fn proper_subforms_definite<T: Field>(gram: &GramForm<T>) -> bool {
    let n = gram.rows();
    (0..n).all(|drop| {
        let idx: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
        is_positive_definite(&gram.submatrix(&idx, &idx))
    })
}

// ---------------------------------------------------------------- catalog

#[derive(Clone, Copy, Debug)]
enum Spec {
    Fixed(Label),
    Param(usize),
}

/// A labelled graph on `0..rank` (catalog numbering minus one) whose
/// parameter labels are read off the matched system.
struct Pattern {
    kind: ComponentKind,
    rank: usize,
    edges: Vec<(usize, usize, Spec)>,
    params: usize,
    name: Box<dyn Fn(&[u32]) -> String>,
    accept: fn(&[u32]) -> bool,
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

fn plain(letter: &str, n: usize) -> String {
    format!("{letter}{}", subscript(n))
}

fn tilde(letter: &str, n: usize) -> String {
    // precomposed where Unicode has one
    let head = if letter == "A" { "Ã".to_string() } else { format!("{letter}\u{303}") };
    format!("{head}{}", subscript(n))
}

fn path(from: usize, to: usize) -> Vec<(usize, usize, Spec)> {
    (from..to).map(|i| (i, i + 1, three())).collect()
}

fn three() -> Spec {
    Spec::Fixed(Label::Finite(3))
}

fn lab(m: u32) -> Spec {
    Spec::Fixed(Label::Finite(m))
}

fn set_label(edges: &mut [(usize, usize, Spec)], a: usize, b: usize, spec: Spec) {
    for e in edges.iter_mut() {
        if (e.0, e.1) == (a, b) || (e.0, e.1) == (b, a) {
            e.2 = spec;
            return;
        }
    }
    panic!("no edge {a}-{b}");
}

fn fixed(kind: ComponentKind, rank: usize, edges: Vec<(usize, usize, Spec)>, name: String) -> Pattern {
    Pattern {
        kind,
        rank,
        edges,
        params: 0,
        name: Box::new(move |_| name.clone()),
        accept: |_| true,
    }
}

fn finite_patterns(r: usize) -> Vec<Pattern> {
    use ComponentKind::Finite;
    let mut out = Vec::new();
    // A_r
    out.push(fixed(Finite, r, path(0, r - 1), plain("A", r)));
    if r >= 3 {
        let mut e = path(0, r - 1);
        set_label(&mut e, r - 2, r - 1, lab(4));
        out.push(fixed(Finite, r, e, plain("B", r)));
    }
    if r >= 4 {
        // D_r: path 0..r-2 plus r-3 -- r-1
        let mut e = path(0, r - 2);
        e.push((r - 3, r - 1, three()));
        out.push(fixed(Finite, r, e, plain("D", r)));
    }
    if (6..=8).contains(&r) {
        // E_r: path 0..r-2, branch at 2
        let mut e = path(0, r - 2);
        e.push((2, r - 1, three()));
        out.push(fixed(Finite, r, e, plain("E", r)));
    }
    if r == 4 {
        let mut e = path(0, 3);
        set_label(&mut e, 1, 2, lab(4));
        out.push(fixed(Finite, 4, e, "F₄".to_string()));
    }
    if r == 3 || r == 4 {
        let mut e = path(0, r - 1);
        set_label(&mut e, 0, 1, lab(5));
        out.push(fixed(Finite, r, e, plain("H", r)));
    }
    if r == 2 {
        out.push(Pattern {
            kind: Finite,
            rank: 2,
            edges: vec![(0, 1, Spec::Param(0))],
            params: 1,
            name: Box::new(|p| match p[0] {
                3 => "A₂".to_string(),
                4 => "B₂".to_string(),
                6 => "G₂".to_string(),
                m => format!("I₂({m})"),
            }),
            accept: |_| true,
        });
    }
    out
}

fn affine_patterns(r: usize) -> Vec<Pattern> {
    use ComponentKind::Affine;
    let n = r - 1;
    let mut out = Vec::new();
    if n == 1 {
        out.push(fixed(
            Affine,
            2,
            vec![(0, 1, Spec::Fixed(Label::Infinite))],
            tilde("A", 1),
        ));
        return out;
    }
    // Ã_n: path 1..n, n+1 joined to 1 and n
    let mut e = path(0, n - 1);
    e.push((0, n, three()));
    e.push((n - 1, n, three()));
    out.push(fixed(Affine, r, e, tilde("A", n)));
    if n >= 3 {
        // B̃_n: 1-3, 2-3, path 3..n+1, label 4 on n-(n+1)
        let mut e = vec![(0, 2, three()), (1, 2, three())];
        e.extend(path(2, n));
        set_label(&mut e, n - 1, n, lab(4));
        out.push(fixed(Affine, r, e, tilde("B", n)));
    }
    {
        // C̃_n: path with 4 at both ends
        let mut e = path(0, n);
        set_label(&mut e, 0, 1, lab(4));
        set_label(&mut e, n - 1, n, lab(4));
        out.push(fixed(Affine, r, e, tilde("C", n)));
    }
    if n >= 4 {
        // D̃_n: 1-3, 2-3, path 3..n-1, (n-1)-n, (n-1)-(n+1)
        let mut e = vec![(0, 2, three()), (1, 2, three())];
        e.extend(path(2, n - 2));
        e.push((n - 2, n - 1, three()));
        e.push((n - 2, n, three()));
        out.push(fixed(Affine, r, e, tilde("D", n)));
    }
    match n {
        6 => {
            let mut e = path(0, 4);
            e.push((2, 5, three()));
            e.push((5, 6, three()));
            out.push(fixed(Affine, r, e, tilde("E", 6)));
        }
        7 => {
            let mut e = path(0, 6);
            e.push((3, 7, three()));
            out.push(fixed(Affine, r, e, tilde("E", 7)));
        }
        8 => {
            let mut e = path(0, 7);
            e.push((2, 8, three()));
            out.push(fixed(Affine, r, e, tilde("E", 8)));
        }
        4 => {
            let mut e = path(0, 4);
            set_label(&mut e, 1, 2, lab(4));
            out.push(fixed(Affine, r, e, tilde("F", 4)));
        }
        2 => {
            let mut e = path(0, 2);
            set_label(&mut e, 0, 1, lab(6));
            out.push(fixed(Affine, r, e, tilde("G", 2)));
        }
        _ => {}
    }
    out
}

fn hyperbolic_patterns(r: usize) -> Vec<Pattern> {
    use ComponentKind::CompactHyperbolic as H;
    let p = Spec::Param;
    let mut out = Vec::new();
    let with_params = |rank: usize,
                       edges: Vec<(usize, usize, Spec)>,
                       params: usize,
                       label: &'static str,
                       accept: fn(&[u32]) -> bool| Pattern {
        kind: H,
        rank,
        edges,
        params,
        name: Box::new(move |ps: &[u32]| {
            let inner: Vec<String> = ps.iter().map(|m| m.to_string()).collect();
            format!("{label}({})", inner.join(","))
        }),
        accept,
    };
    match r {
        3 => {
            out.push(with_params(
                3,
                vec![(0, 1, p(0)), (1, 2, p(1)), (0, 2, p(2))],
                3,
                "X₃",
                |m| m != [3, 3, 3],
            ));
            out.push(with_params(
                3,
                vec![(0, 1, p(0)), (1, 2, p(1))],
                2,
                "Y₆",
                |m| m[1] <= m[0] && m[0] >= 5 && m != [5, 3] && m != [6, 3],
            ));
        }
        4 => {
            out.push(with_params(
                4,
                vec![(0, 3, p(0)), (1, 2, p(1)), (0, 1, three()), (2, 3, three())],
                2,
                "X₂",
                |m| m.iter().all(|&x| x <= 5) && m != [3, 3],
            ));
            out.push(fixed(
                H,
                4,
                vec![(0, 1, lab(5)), (1, 2, three()), (1, 3, three())],
                "Y₁".to_string(),
            ));
            out.push(with_params(
                4,
                vec![(0, 1, lab(5)), (1, 2, three()), (2, 3, p(0))],
                1,
                "Y₄",
                |m| m[0] == 4 || m[0] == 5,
            ));
            out.push(fixed(
                H,
                4,
                vec![(0, 1, three()), (1, 2, lab(5)), (2, 3, three())],
                "Y₅".to_string(),
            ));
        }
        5 => {
            let mut e = path(0, 4);
            e.push((0, 4, lab(4)));
            out.push(fixed(H, 5, e, "X₁".to_string()));
            out.push(fixed(
                H,
                5,
                vec![(0, 1, lab(5)), (1, 2, three()), (2, 3, three()), (2, 4, three())],
                "Y₂".to_string(),
            ));
            out.push(with_params(
                5,
                vec![(0, 1, lab(5)), (1, 2, three()), (2, 3, three()), (3, 4, p(0))],
                1,
                "Y₃",
                |m| (3..=5).contains(&m[0]),
            ));
        }
        _ => {}
    }
    out
}

/// Catalog instances of each type at concrete ranks/parameters, as systems
/// in catalog numbering. Used by tests and the CLI.
pub mod catalog {
    use super::*;

    fn build(rank: usize, edges: &[(usize, usize, Label)]) -> CoxeterSystem {
        let mut sys = CoxeterSystem::new(rank);
        for &(i, j, m) in edges {
            sys.set_label(i, j, m);
        }
        sys
    }

    fn instantiate(p: &Pattern, params: &[u32]) -> CoxeterSystem {
        let edges: Vec<(usize, usize, Label)> = p
            .edges
            .iter()
            .map(|&(i, j, s)| match s {
                Spec::Fixed(l) => (i, j, l),
                Spec::Param(k) => (i, j, Label::Finite(params[k])),
            })
            .collect();
        build(p.rank, &edges)
    }

    fn find(patterns: Vec<Pattern>, name: &str, params: &[u32]) -> Option<CoxeterSystem> {
        patterns
            .into_iter()
            .find(|p| p.params == params.len() && (p.name)(params) == name && (p.accept)(params))
            .map(|p| instantiate(&p, params))
    }

    /// Finite type by letter and rank, e.g. `("B", 3)`; `I` takes `m` as rank
    /// argument. `B2`, `C2` and `G2` are the dihedral types.
    pub fn finite(letter: &str, n: usize) -> Option<CoxeterSystem> {
        let dihedral = match (letter, n) {
            ("I", m) => Some(m as u32),
            ("B", 2) | ("C", 2) => Some(4),
            ("G", 2) => Some(6),
            _ => None,
        };
        if let Some(m) = dihedral {
            return Some(build(2, &[(0, 1, Label::Finite(m))]));
        }
        let name = if letter == "F" { "F₄".to_string() } else { plain(letter, n) };
        find(finite_patterns(n), &name, &[])
    }

    /// Affine type by letter and `n` (rank `n + 1`).
    pub fn affine(letter: &str, n: usize) -> Option<CoxeterSystem> {
        find(affine_patterns(n + 1), &tilde(letter, n), &[])
    }

    /// Compact hyperbolic type by catalog name (`"X1"`, `"X2"`, ..., `"Y6"`)
    /// and parameters.
    pub fn hyperbolic(name: &str, params: &[u32]) -> Option<CoxeterSystem> {
        let (pretty, rank) = match name {
            "X1" => ("X₁", 5),
            "X2" => ("X₂", 4),
            "X3" => ("X₃", 3),
            "Y1" => ("Y₁", 4),
            "Y2" => ("Y₂", 5),
            "Y3" => ("Y₃", 5),
            "Y4" => ("Y₄", 4),
            "Y5" => ("Y₅", 4),
            "Y6" => ("Y₆", 3),
            _ => return None,
        };
        let full = if params.is_empty() {
            pretty.to_string()
        } else {
            let inner: Vec<String> = params.iter().map(|m| m.to_string()).collect();
            format!("{pretty}({})", inner.join(","))
        };
        find(hyperbolic_patterns(rank), &full, params)
    }

    /// Every affine type with `n <= max_n`, as `(name, system)`.
    pub fn all_affine(max_n: usize) -> Vec<(String, CoxeterSystem)> {
        let mut out = Vec::new();
        for n in 1..=max_n.max(8) {
            if n > max_n && !(6..=8).contains(&n) {
                continue;
            }
            for p in affine_patterns(n + 1) {
                let name = (p.name)(&[]);
                let is_exceptional = name.starts_with('E') || name.starts_with('F') || name.starts_with('G');
                if n <= max_n || is_exceptional {
                    out.push((name, instantiate(&p, &[])));
                }
            }
        }
        out
    }

    /// Every compact hyperbolic type at its smallest parameters.
    pub fn all_hyperbolic_smallest() -> Vec<(String, CoxeterSystem)> {
        let list: [(&str, &[u32]); 9] = [
            ("X1", &[]),
            ("X2", &[4, 3]),
            ("X3", &[4, 3, 3]),
            ("Y1", &[]),
            ("Y2", &[]),
            ("Y3", &[3]),
            ("Y4", &[4]),
            ("Y5", &[]),
            ("Y6", &[5, 4]),
        ];
        list.iter()
            .map(|(n, ps)| {
                let sys = hyperbolic(n, ps).expect("catalog entry");
                let tag_name = match hyperbolic_patterns(sys.rank())
                    .into_iter()
                    .find(|p| p.params == ps.len() && (p.accept)(ps) && instantiate(p, ps) == sys)
                {
                    Some(p) => (p.name)(ps),
                    None => n.to_string(),
                };
                (tag_name, sys)
            })
            .collect()
    }
}

/// Try to map pattern vertex `k` onto system vertices, extending `image`.
fn match_pattern(
    p: &Pattern,
    sys: &CoxeterSystem,
    verts: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    params: &mut Vec<Option<u32>>,
    found: &mut Vec<Vec<u32>>,
) {
    let k = image.len();
    if k == p.rank {
        let ps: Vec<u32> = params.iter().map(|x| x.expect("every parameter used")).collect();
        if (p.accept)(&ps) && !found.contains(&ps) {
            found.push(ps);
        }
        return;
    }
    'next: for (vi, &v) in verts.iter().enumerate() {
        if used[vi] {
            continue;
        }
        let saved = params.clone();
        for (j, &u) in image.iter().enumerate() {
            let actual = sys.label(u, v);
            let spec = p
                .edges
                .iter()
                .find(|e| (e.0, e.1) == (j, k) || (e.0, e.1) == (k, j))
                .map(|e| e.2);
            let ok = match spec {
                None => actual == Label::Finite(2),
                Some(Spec::Fixed(l)) => actual == l,
                Some(Spec::Param(q)) => match actual {
                    Label::Finite(m) if m >= 3 => match params[q] {
                        None => {
                            params[q] = Some(m);
                            true
                        }
                        Some(x) => x == m,
                    },
                    _ => false,
                },
            };
            if !ok {
                *params = saved;
                continue 'next;
            }
        }
        used[vi] = true;
        image.push(v);
        match_pattern(p, sys, verts, image, used, params, found);
        image.pop();
        used[vi] = false;
        *params = saved;
    }
}

fn catalog_match(sys: &CoxeterSystem, part: &[usize]) -> Option<(ComponentKind, String)> {
    let r = part.len();
    let mut patterns = finite_patterns(r);
    if r >= 2 {
        patterns.extend(affine_patterns(r));
    }
    patterns.extend(hyperbolic_patterns(r));
    for p in &patterns {
        let mut found = Vec::new();
        match_pattern(
            p,
            sys,
            part,
            &mut Vec::new(),
            &mut vec![false; r],
            &mut vec![None; p.params],
            &mut found,
        );
        if let Some(best) = found.iter().max() {
            return Some((p.kind.clone(), (p.name)(best)));
        }
    }
    None
}

/// Classify a connected component; catalog and definiteness must agree.
pub fn classify_component<T: CoxeterScalar>(sys: &CoxeterSystem, part: &[usize]) -> Result<ComponentTag, ClassifyError> {
    if part.is_empty() || !sys.is_connected(part) {
        return Err(ClassifyError::NotConnected(format_set(part)));
    }
    let sub = sys.restrict(part);
    let geo = Geometry::<T>::new(&sub)?;
    let gram = geo.gram();
    let pd = is_positive_definite(gram);
    let matched = catalog_match(sys, part);
    let inconsistent = |detail: String| ClassifyError::Inconsistent {
        part: format_set(part),
        detail,
    };
    match (pd, matched) {
        (true, Some((ComponentKind::Finite, name))) => Ok(ComponentTag {
            kind: ComponentKind::Finite,
            name: Some(name),
        }),
        (true, other) => Err(inconsistent(format!("positive definite but catalog says {other:?}"))),
        (false, Some((ComponentKind::Finite, name))) => {
            Err(inconsistent(format!("catalog says {name} but form is not positive definite")))
        }
        (false, Some((ComponentKind::Affine, name))) => {
            if is_positive_semidefinite(gram) && radical_dimension(gram) == 1 {
                Ok(ComponentTag {
                    kind: ComponentKind::Affine,
                    name: Some(name),
                })
            } else {
                Err(inconsistent(format!("{name} form is not semidefinite with 1-dimensional radical")))
            }
        }
        (false, Some((ComponentKind::CompactHyperbolic, name))) => {
            if radical_dimension(gram) == 0 && proper_subforms_definite(gram) {
                Ok(ComponentTag {
                    kind: ComponentKind::CompactHyperbolic,
                    name: Some(name),
                })
            } else {
                Err(inconsistent(format!("{name} form fails the hyperbolic conditions")))
            }
        }
        (false, Some((ComponentKind::OtherInfinite, _))) => unreachable!("no such patterns"),
        (false, None) => {
            // the definiteness side must not recognise a minimal type either
            if proper_subforms_definite(gram) {
                let affine = is_positive_semidefinite(gram) && radical_dimension(gram) == 1;
                let hyperbolic = radical_dimension(gram) == 0;
                if affine || hyperbolic {
                    return Err(inconsistent(
                        "minimal non-finite form missing from the catalog".to_string(),
                    ));
                }
            }
            Ok(ComponentTag {
                kind: ComponentKind::OtherInfinite,
                name: None,
            })
        }
    }
}

/// Infinite, and every proper subset spans a positive definite sub-form.
pub fn is_minimal_nonfinite<T: CoxeterScalar>(sys: &CoxeterSystem, part: &[usize]) -> Result<bool, ClassifyError> {
    if part.is_empty() || !sys.is_connected(part) {
        return Err(ClassifyError::NotConnected(format_set(part)));
    }
    let geo = Geometry::<T>::new(&sys.restrict(part))?;
    let gram = geo.gram();
    Ok(!is_positive_definite(gram) && proper_subforms_definite(gram))
}

/// Components of `sys` with their tags.
pub fn classify_system<T: CoxeterScalar>(sys: &CoxeterSystem) -> Result<Vec<(Vec<usize>, ComponentTag)>, ClassifyError> {
    sys.components()
        .parts
        .into_iter()
        .map(|part| {
            let tag = classify_component::<T>(sys, &part)?;
            Ok((part, tag))
        })
        .collect()
}

/// Whether the standard parabolic on `subset` is finite.
pub fn is_finite_type<T: CoxeterScalar>(sys: &CoxeterSystem, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return true;
    }
    let geo = Geometry::<T>::new(&sys.restrict(subset)).expect("representable labels");
    is_positive_definite(geo.gram())
}

#[allow(dead_code)]
fn as_matrix<T: Field>(m: &GramForm<T>) -> &Matrix<T> {
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactreal::TrigScalar;

    type T = TrigScalar;

    fn tag(text: &str) -> ComponentTag {
        let sys = CoxeterSystem::parse(text).unwrap();
        let part: Vec<usize> = (0..sys.rank()).collect();
        classify_component::<T>(&sys, &part).unwrap()
    }

    #[test]
    fn definiteness_examples() {
        let g = |t: &str| Geometry::<T>::new(&CoxeterSystem::parse(t).unwrap()).unwrap().gram().clone();
        assert!(is_positive_definite(&g("rank 2\nedge 1 2 3")));
        assert!(!is_positive_definite(&g("rank 2\nedge 1 2 inf")));
        let x3 = g("rank 3\nedge 1 2 4\nedge 2 3 3\nedge 1 3 3");
        assert!(!is_positive_definite(&x3));
        assert!(!is_positive_semidefinite(&x3));
        assert_eq!(radical_dimension(&x3), 0);
    }

    #[test]
    fn component_examples() {
        assert_eq!(tag("rank 3\nedge 1 2 3\nedge 2 3 3").to_string(), "Finite(A₃)");
        assert_eq!(
            tag("rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").to_string(),
            "Affine(Ã₂)"
        );
        assert_eq!(
            tag("rank 3\nedge 1 2 4\nedge 2 3 3\nedge 1 3 3").to_string(),
            "CompactHyperbolic(X₃(4,3,3))"
        );
        assert_eq!(tag("rank 2\nedge 1 2 6").to_string(), "Finite(G₂)");
        assert_eq!(tag("rank 2\nedge 1 2 7").to_string(), "Finite(I₂(7))");
        assert_eq!(tag("rank 3\nedge 1 2 inf\nedge 2 3 inf").kind, ComponentKind::OtherInfinite);
    }

    #[test]
    fn minimal_nonfinite() {
        let a2t = CoxeterSystem::parse("rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
        assert!(is_minimal_nonfinite::<T>(&a2t, &[0, 1, 2]).unwrap());
        let a3 = CoxeterSystem::parse("rank 3\nedge 1 2 3\nedge 2 3 3").unwrap();
        assert!(!is_minimal_nonfinite::<T>(&a3, &[0, 1, 2]).unwrap());
        let split = a2t.disjoint_union(&CoxeterSystem::new(1));
        assert!(is_minimal_nonfinite::<T>(&split, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(catalog::finite("D", 4).unwrap().rank(), 4);
        assert_eq!(catalog::affine("E", 8).unwrap().rank(), 9);
        assert!(catalog::hyperbolic("X2", &[3, 3]).is_none());
        assert!(catalog::hyperbolic("Y6", &[6, 3]).is_none());
        assert!(catalog::hyperbolic("Y6", &[5, 5]).is_some());
    }
}
