//! Coxeter matrices, graphs, graph automorphisms and the `.cox` format.
//!
//! Generators are 0-indexed in the API and 1-indexed in every text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn is_edge(self) -> bool {
        !matches!(self, Label::Finite(m) if m <= 2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate edge {i}-{j}")]
    DuplicateEdge { line: usize, i: usize, j: usize },
    #[error("line {line}: edge label {label} is below 3")]
    LabelTooSmall { line: usize, label: u32 },
    #[error("generator {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("not a graph automorphism: m({i},{j}) = {expected} but m({si},{sj}) = {found}")]
    NotAutomorphism {
        i: usize,
        j: usize,
        si: usize,
        sj: usize,
        expected: Label,
        found: Label,
    },
}

/// Rank plus the labels `m(i,j) >= 3` (absent pairs commute).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    rank: usize,
    edges: BTreeMap<(usize, usize), Label>,
}

impl CoxeterSystem {
    pub fn new(rank: usize) -> CoxeterSystem {
        CoxeterSystem {
            rank,
            edges: BTreeMap::new(),
        }
    }

    /// Builder form of [`CoxeterSystem::set_label`].
    pub fn with(mut self, i: usize, j: usize, label: Label) -> CoxeterSystem {
        self.set_label(i, j, label);
        self
    }

    pub fn set_label(&mut self, i: usize, j: usize, label: Label) {
        assert!(i < self.rank && j < self.rank && i != j, "bad edge {i}-{j}");
        let key = (i.min(j), i.max(j));
        if label.is_edge() {
            self.edges.insert(key, label);
        } else {
            assert_eq!(label, Label::Finite(2), "label must be at least 2");
            self.edges.remove(&key);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        if i == j {
            return Label::Finite(1);
        }
        self.edges
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(Label::Finite(2))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains_key(&(i.min(j), i.max(j)))
    }

    /// Edges `(i, j, m)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// lcm of the finite labels, at least 2.
    pub fn modulus(&self) -> u32 {
        self.edges
            .values()
            .filter_map(|l| match l {
                Label::Finite(m) => Some(*m),
                Label::Infinite => None,
            })
            .fold(2u32, |acc, m| acc.lcm(&m))
    }

    pub fn parse(text: &str) -> Result<CoxeterSystem, CoxError> {
        let mut rank: Option<usize> = None;
        let mut pending: Vec<(usize, usize, usize, Label)> = Vec::new();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let syntax = |message: &str| CoxError::Syntax {
                line,
                message: message.to_string(),
            };
            let number = |w: &str| -> Result<usize, CoxError> {
                w.parse::<usize>()
                    .map_err(|_| syntax(&format!("expected a number, found {w:?}")))
            };
            match words[0] {
                "rank" => {
                    if words.len() != 2 {
                        return Err(syntax("expected `rank <n>`"));
                    }
                    if rank.is_some() {
                        return Err(syntax("rank given twice"));
                    }
                    let n = number(words[1])?;
                    if n == 0 {
                        return Err(syntax("rank must be positive"));
                    }
                    rank = Some(n);
                }
                "edge" => {
                    if words.len() != 4 {
                        return Err(syntax("expected `edge <i> <j> <m|inf>`"));
                    }
                    let i = number(words[1])?;
                    let j = number(words[2])?;
                    if i == j || i == 0 || j == 0 {
                        return Err(syntax("edge endpoints must be distinct positive indices"));
                    }
                    let label = if words[3] == "inf" {
                        Label::Infinite
                    } else {
                        let m = words[3]
                            .parse::<u32>()
                            .map_err(|_| syntax(&format!("bad label {:?}", words[3])))?;
                        if m < 3 {
                            return Err(CoxError::LabelTooSmall { line, label: m });
                        }
                        Label::Finite(m)
                    };
                    if !seen.insert((i.min(j), i.max(j))) {
                        return Err(CoxError::DuplicateEdge {
                            line,
                            i: i.min(j),
                            j: i.max(j),
                        });
                    }
                    pending.push((line, i, j, label));
                }
                other => return Err(syntax(&format!("unknown directive {other:?}"))),
            }
        }
        let rank = rank.ok_or(CoxError::Syntax {
            line: 0,
            message: "missing `rank` line".to_string(),
        })?;
        let mut sys = CoxeterSystem::new(rank);
        for (line, i, j, label) in pending {
            for k in [i, j] {
                if k > rank {
                    return Err(CoxError::Syntax {
                        line,
                        message: format!("generator {k} exceeds rank {rank}"),
                    });
                }
            }
            sys.set_label(i - 1, j - 1, label);
        }
        Ok(sys)
    }

    pub fn to_cox_text(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        for (i, j, m) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", i + 1, j + 1, m));
        }
        out
    }

    /// Connected components of the Coxeter graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> ComponentDecomposition {
        self.components_of(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Components of the full subgraph on `subset`.
    pub fn components_of(&self, subset: &[usize]) -> ComponentDecomposition {
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut parts = Vec::new();
        for &start in &inside {
            if !seen.insert(start) {
                continue;
            }
            let mut part = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &inside {
                    if self.adjacent(v, u) && seen.insert(u) {
                        part.push(u);
                        stack.push(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        ComponentDecomposition { parts }
    }

    pub fn is_connected(&self, subset: &[usize]) -> bool {
        self.components_of(subset).parts.len() <= 1
    }

    /// Standard parabolic subsystem on `subset`, renumbered in the given
    /// order.
    pub fn restrict(&self, subset: &[usize]) -> CoxeterSystem {
        let mut sys = CoxeterSystem::new(subset.len());
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate().skip(a + 1) {
                let m = self.label(i, j);
                if m.is_edge() {
                    sys.set_label(a, b, m);
                }
            }
        }
        sys
    }

    /// Disjoint union; `other`'s generators are shifted by `self.rank()`.
    pub fn disjoint_union(&self, other: &CoxeterSystem) -> CoxeterSystem {
        let mut sys = CoxeterSystem::new(self.rank + other.rank);
        for (i, j, m) in self.edges() {
            sys.set_label(i, j, m);
        }
        for (i, j, m) in other.edges() {
            sys.set_label(i + self.rank, j + self.rank, m);
        }
        sys
    }

    /// Every label-preserving permutation, identity first.
    pub fn automorphisms(&self) -> Vec<GraphAutomorphism> {
        let n = self.rank;
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut image, &mut used, &mut out);
        out.sort_by_key(|g| !g.is_identity());
        out
    }

    fn extend_automorphism(
        &self,
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<GraphAutomorphism>,
    ) {
        if k == self.rank {
            out.push(GraphAutomorphism { perm: image.clone() });
            return;
        }
        for t in 0..self.rank {
            if used[t] {
                continue;
            }
            if (0..k).all(|i| self.label(i, k) == self.label(image[i], t)) {
                image[k] = t;
                used[t] = true;
                self.extend_automorphism(k + 1, image, used, out);
                used[t] = false;
            }
        }
        image[k] = usize::MAX;
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}", self.rank)?;
        for (i, j, m) in self.edges() {
            write!(f, ", {}-{}:{}", i + 1, j + 1, m)?;
        }
        Ok(())
    }
}

/// Connected components of a Coxeter graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub parts: Vec<Vec<usize>>,
}

impl ComponentDecomposition {
    /// Index of the part containing generator `s`.
    pub fn part_of(&self, s: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&s))
    }
}

/// Render a generator set 1-indexed, e.g. `{1,2,3}`.
pub fn format_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|s| (s + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Permutation of the generators. Composition follows functions:
/// `(a.compose(b)).apply(i) == a.apply(b.apply(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphAutomorphism {
    perm: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn identity(n: usize) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: (0..n).collect(),
        }
    }

    /// Validate `perm` (0-indexed images) against the labels of `sys`.
    pub fn new(sys: &CoxeterSystem, perm: Vec<usize>) -> Result<GraphAutomorphism, CoxError> {
        let n = sys.rank();
        if perm.len() != n {
            return Err(CoxError::BadPermutation(format!(
                "length {} for rank {n}",
                perm.len()
            )));
        }
        let mut hit = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(CoxError::BadPermutation(format!("{perm:?}")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let expected = sys.label(i, j);
                let found = sys.label(perm[i], perm[j]);
                if expected != found {
                    return Err(CoxError::NotAutomorphism {
                        i: i + 1,
                        j: j + 1,
                        si: perm[i] + 1,
                        sj: perm[j] + 1,
                        expected,
                        found,
                    });
                }
            }
        }
        Ok(GraphAutomorphism { perm })
    }

    /// Parse disjoint cycles such as `(1 3)(2 4)`; `()` or `id` is the
    /// identity.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<GraphAutomorphism, CoxError> {
        let n = sys.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let t = text.trim();
        if t == "id" || t.is_empty() {
            return Ok(GraphAutomorphism { perm });
        }
        let bad = || CoxError::BadPermutation(text.to_string());
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let cycle: Vec<usize> = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            for &c in &cycle {
                if c == 0 || c > n {
                    return Err(CoxError::IndexOutOfRange { index: c, rank: n });
                }
                if std::mem::replace(&mut moved[c - 1], true) {
                    return Err(bad());
                }
            }
            for (k, &c) in cycle.iter().enumerate() {
                perm[c - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            rest = open[close + 1..].trim_start();
        }
        GraphAutomorphism::new(sys, perm)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        GraphAutomorphism { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Whether every point of `set` is fixed.
    pub fn fixes_pointwise(&self, set: &[usize]) -> bool {
        set.iter().all(|&i| self.perm[i] == i)
    }

    /// Cycle decomposition (the `<tau>`-orbits on generators), each cycle
    /// sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.perm[i];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

impl fmt::Display for GraphAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let n = self.perm.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.perm[i];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        Ok(())
    }
}

pub fn orbits_on_generators(tau: &GraphAutomorphism) -> Vec<Vec<usize>> {
    tau.orbits()
}

/// The graph `tau\Gamma`: orbits as vertices, joined when some members are
/// adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub orbits: Vec<Vec<usize>>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl QuotientGraph {
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.orbits.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if !seen[u] && self.adjacent(u, v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn quotient_graph(sys: &CoxeterSystem, tau: &GraphAutomorphism) -> QuotientGraph {
    let orbits = tau.orbits();
    let mut edges = BTreeSet::new();
    for a in 0..orbits.len() {
        for b in a + 1..orbits.len() {
            let joined = orbits[a]
                .iter()
                .any(|&i| orbits[b].iter().any(|&j| sys.adjacent(i, j)));
            if joined {
                edges.insert((a, b));
            }
        }
    }
    QuotientGraph { orbits, edges }
}

/// Orbits of the group generated by `generators` on the components of
/// `sys`, as lists of component indices.
pub fn component_orbits(sys: &CoxeterSystem, generators: &[GraphAutomorphism]) -> Vec<Vec<usize>> {
    let comps = sys.components();
    let k = comps.parts.len();
    // union-find over components
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for g in generators {
        for (c, part) in comps.parts.iter().enumerate() {
            let target = comps.part_of(g.apply(part[0])).expect("image lies in a part");
            let (a, b) = (find(&mut parent, c), find(&mut parent, target));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in 0..k {
        let r = find(&mut parent, c);
        groups.entry(r).or_default().push(c);
    }
    groups.into_values().collect()
}
