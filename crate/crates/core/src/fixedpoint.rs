//! Fixed-point subgroups of graph automorphisms: Steinberg generators,
//! the Coxeter structure on them, and the finite-index criterion.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::classify::{classify_component, classify_system, is_finite_type, ClassifyError, ComponentTag};
use crate::coxsystem::{format_set, quotient_graph, CoxeterSystem, GraphAutomorphism, Label};
use crate::geom::Geometry;
use crate::linalg::Matrix;
use crate::scalar::ExactScalar;
use crate::words::{GroupElement, Order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixedPointError {
    #[error("orbits {a} and {b}: generators commute = {commute}, adjacent in quotient graph = {adjacent}")]
    FullSubgraph {
        a: String,
        b: String,
        commute: bool,
        adjacent: bool,
    },
    #[error("generator for orbit {0} is not fixed by the automorphism")]
    NotFixed(String),
    #[error("word letter {0} out of range")]
    BadLetter(usize),
    #[error("label between orbits {0} and {1} undecided within cap")]
    Undecided(String, String),
    #[error("word is not reduced over the fixed-point generators")]
    NotReduced,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Label of `Gamma^tau`: a Coxeter label or an order undecided within cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedLabel {
    Decided(Label),
    Undecided(u64),
}

impl fmt::Display for FixedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLabel::Decided(l) => write!(f, "{l}"),
            FixedLabel::Undecided(cap) => write!(f, "undecided(cap {cap})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FixedPointPresentation<T> {
    pub orbits: Vec<Vec<usize>>,
    /// `w_0(I)` for finite-type orbits, `None` otherwise.
    pub generators: Vec<Option<GroupElement<T>>>,
    /// Labels between finite-type orbits, indexed like `finite_orbits()`;
    /// empty until [`fixed_system`] fills it.
    pub labels: Vec<Vec<FixedLabel>>,
}

impl<T: ExactScalar> FixedPointPresentation<T> {
    /// Indices of orbits that carry a generator.
    pub fn finite_orbits(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&i| self.generators[i].is_some()).collect()
    }

    pub fn skipped_orbits(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&i| self.generators[i].is_none()).collect()
    }

    /// Coxeter matrix of `Gamma^tau` over the finite orbits; `None` if a
    /// label is undecided or labels have not been computed.
    pub fn coxeter_system(&self) -> Option<CoxeterSystem> {
        let k = self.finite_orbits().len();
        if self.labels.len() != k {
            return None;
        }
        let mut sys = CoxeterSystem::new(k);
        for i in 0..k {
            for j in i + 1..k {
                match self.labels[i][j] {
                    FixedLabel::Decided(l) => sys.set_label(i, j, l),
                    FixedLabel::Undecided(_) => return None,
                }
            }
        }
        Some(sys)
    }

    /// Coxeter matrix entries, `0` for infinity and undecided.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let k = self.labels.len();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            return 1;
                        }
                        match self.labels[i][j] {
                            FixedLabel::Decided(Label::Finite(m)) => m,
                            _ => 0,
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// `tau(w)`: relabel the letters of `w`.
pub fn apply_automorphism<T: ExactScalar>(tau: &GraphAutomorphism, w: &GroupElement<T>) -> GroupElement<T> {
    let word: Vec<usize> = w.word().iter().map(|&s| tau.apply(s)).collect();
    GroupElement::from_word(w.geometry(), &word).expect("automorphism preserves rank")
}

/// `tau(M) = P M P^-1` with `P alpha_s = alpha_{tau(s)}`.
pub fn permute_matrix<T: ExactScalar>(tau: &GraphAutomorphism, m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows();
    let inv = tau.inverse();
    Matrix::from_fn(n, n, |i, j| m[(inv.apply(i), inv.apply(j))].clone())
}

pub fn steinberg_generators<T: ExactScalar>(geo: &Arc<Geometry<T>>, tau: &GraphAutomorphism) -> Result<FixedPointPresentation<T>, FixedPointError> {
    let sys = geo.system();
    let orbits = tau.orbits();
    let mut generators = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        if is_finite_type::<T>(sys, orbit) {
            let w0 = GroupElement::longest_element(geo, orbit).expect("finite type checked");
            if permute_matrix(tau, w0.matrix()) != *w0.matrix() {
                return Err(FixedPointError::NotFixed(format_set(orbit)));
            }
            generators.push(Some(w0));
        } else {
            generators.push(None);
        }
    }
    Ok(FixedPointPresentation {
        orbits,
        generators,
        labels: Vec::new(),
    })
}

/// Steinberg generators plus the labels of `Gamma^tau`, with the
/// full-subgraph law checked for every pair of finite-type orbits.
pub fn fixed_system<T: ExactScalar>(geo: &Arc<Geometry<T>>, tau: &GraphAutomorphism, cap: u64) -> Result<FixedPointPresentation<T>, FixedPointError> {
    let mut pres = steinberg_generators(geo, tau)?;
    let quotient = quotient_graph(geo.system(), tau);
    let fin = pres.finite_orbits();
    let k = fin.len();
    let mut labels = vec![vec![FixedLabel::Decided(Label::Finite(1)); k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let (i, j) = (fin[a], fin[b]);
            let wi = pres.generators[i].as_ref().unwrap();
            let wj = pres.generators[j].as_ref().unwrap();
            let prod = wi.mul(wj);
            let commute = prod == wj.mul(wi);
            let adjacent = quotient.adjacent(i, j);
            if commute == adjacent {
                return Err(FixedPointError::FullSubgraph {
                    a: format_set(&pres.orbits[i]),
                    b: format_set(&pres.orbits[j]),
                    commute,
                    adjacent,
                });
            }
            let label = match prod.order_of(cap) {
                Order::Finite(m) => FixedLabel::Decided(Label::Finite(m as u32)),
                Order::Infinite(_) => FixedLabel::Decided(Label::Infinite),
                Order::Undecided(c) => FixedLabel::Undecided(c),
            };
            labels[a][b] = label;
            labels[b][a] = label;
        }
    }
    pres.labels = labels;
    Ok(pres)
}

/// Finite rank: `W^tau` has finite index iff `tau` is the identity on every
/// infinite irreducible component.
pub fn finite_index_fixed<T: ExactScalar>(sys: &CoxeterSystem, tau: &GraphAutomorphism) -> Result<bool, FixedPointError> {
    for (part, tag) in classify_system::<T>(sys)? {
        if !tag.is_finite() && !tau.fixes_pointwise(&part) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    /// Concatenated reduced words of the `w_0(I_i)` (0-indexed letters of S).
    pub s_word: Vec<usize>,
    pub expected_length: usize,
    pub length: usize,
    pub support: Vec<usize>,
    pub orbit_union: Vec<usize>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.length == self.expected_length && self.support == self.orbit_union
    }
}

/// `word` is over the finite orbits of `pres` (indices into
/// `finite_orbits()`). Checks that the concatenation of reduced words of
/// the letters is reduced over `S` and that its support is the union of the
/// orbits involved.
pub fn reduced_word_compatibility_check<T: ExactScalar>(
    geo: &Arc<Geometry<T>>,
    pres: &FixedPointPresentation<T>,
    word: &[usize],
) -> Result<CompatibilityReport, FixedPointError> {
    let fin = pres.finite_orbits();
    if let Some(&bad) = word.iter().find(|&&a| a >= fin.len()) {
        return Err(FixedPointError::BadLetter(bad));
    }
    // the word must be reduced in the Coxeter system on the orbits
    if let Some(fixed) = pres.coxeter_system() {
        if let Ok(g) = Geometry::<T>::new(&fixed) {
            let g = Arc::new(g);
            let e = GroupElement::from_word(&g, word).expect("letters checked");
            if e.length() != word.len() {
                return Err(FixedPointError::NotReduced);
            }
        }
    }
    let mut s_word = Vec::new();
    let mut orbit_union = Vec::new();
    for &a in word {
        let orbit = fin[a];
        let w0 = pres.generators[orbit].as_ref().unwrap();
        s_word.extend_from_slice(w0.word());
        orbit_union.extend_from_slice(&pres.orbits[orbit]);
    }
    orbit_union.sort_unstable();
    orbit_union.dedup();
    let product = GroupElement::from_word(geo, &s_word).expect("letters in range");
    Ok(CompatibilityReport {
        expected_length: s_word.len(),
        length: product.length(),
        support: product.support(),
        orbit_union,
        s_word,
    })
}

/// First `k` in `1..=k_max` with `u^k w tau(u)^-k = w`, if any.
pub fn displacement_failure<T: ExactScalar>(
    tau: &GraphAutomorphism,
    w: &GroupElement<T>,
    u: &GroupElement<T>,
    k_max: i64,
) -> Option<i64> {
    let tu = apply_automorphism(tau, u);
    (1..=k_max).find(|&k| u.pow(k).mul(w).mul(&tu.pow(-k)) == *w)
}

/// Whether `Gamma^tau` is connected, and its classification when every
/// component is in the catalog.
pub fn fixed_graph_summary<T: ExactScalar>(pres: &FixedPointPresentation<T>) -> Option<(bool, Vec<ComponentTag>)> {
    let sys = pres.coxeter_system()?;
    let all: Vec<usize> = (0..sys.rank()).collect();
    let connected = sys.rank() == 0 || sys.is_connected(&all);
    let tags = sys
        .components()
        .parts
        .iter()
        .filter_map(|p| classify_component::<T>(&sys, p).ok())
        .collect();
    Some((connected, tags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactreal::TrigScalar;

    type T = TrigScalar;

    fn setup(text: &str, tau: &str) -> (Arc<Geometry<T>>, GraphAutomorphism) {
        let sys = CoxeterSystem::parse(text).unwrap();
        let tau = GraphAutomorphism::parse(&sys, tau).unwrap();
        (Arc::new(Geometry::new(&sys).unwrap()), tau)
    }

    const A3: &str = "rank 3\nedge 1 2 3\nedge 2 3 3";
    const A2A2: &str = "rank 4\nedge 1 2 3\nedge 3 4 3";

    #[test]
    fn a3_flip() {
        let (g, tau) = setup(A3, "(1 3)");
        let pres = fixed_system(&g, &tau, 50).unwrap();
        assert_eq!(pres.orbits, vec![vec![0, 2], vec![1]]);
        let words: Vec<&[usize]> = pres.generators.iter().map(|w| w.as_ref().unwrap().word()).collect();
        assert_eq!(words, vec![&[0, 2][..], &[1][..]]);
        assert_eq!(pres.coxeter_matrix(), vec![vec![1, 4], vec![4, 1]]);
        let report = reduced_word_compatibility_check(&g, &pres, &[0, 1]).unwrap();
        assert!(report.passed());
        assert_eq!(report.length, 3);
        assert_eq!(report.support, vec![0, 1, 2]);
    }

    #[test]
    fn a2a2_swap() {
        let (g, tau) = setup(A2A2, "(1 3)(2 4)");
        let pres = fixed_system(&g, &tau, 50).unwrap();
        assert_eq!(pres.orbits, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(pres.coxeter_system().unwrap(), CoxeterSystem::parse("rank 2\nedge 1 2 3").unwrap());
        let report = reduced_word_compatibility_check(&g, &pres, &[0, 1, 0]).unwrap();
        assert!(report.passed());
        assert_eq!(report.length, 6);
        assert!(finite_index_fixed::<T>(g.system(), &tau).unwrap());
    }

    #[test]
    fn affine_cases() {
        let (g, tau) = setup("rank 2\nedge 1 2 inf", "(1 2)");
        let pres = steinberg_generators(&g, &tau).unwrap();
        assert!(pres.finite_orbits().is_empty());
        assert!(!finite_index_fixed::<T>(g.system(), &tau).unwrap());
        let (g, rot) = setup("rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3", "(1 2 3)");
        assert!(!finite_index_fixed::<T>(g.system(), &rot).unwrap());
        assert!(finite_index_fixed::<T>(g.system(), &GraphAutomorphism::identity(3)).unwrap());
    }

    #[test]
    fn identity_gives_original() {
        let (g, id) = setup(A3, "id");
        let pres = fixed_system(&g, &id, 50).unwrap();
        assert_eq!(pres.coxeter_system().unwrap(), *g.system());
    }

    #[test]
    fn displacement() {
        let (g, tau) = setup("rank 3\nedge 1 2 inf\nedge 1 3 3\nedge 2 3 3", "(1 2)");
        let w = GroupElement::generator(&g, 2);
        assert_eq!(apply_automorphism(&tau, &w), w);
        let u = GroupElement::from_word(&g, &[1, 0]).unwrap();
        assert_eq!(displacement_failure(&tau, &w, &u, 20), None);
    }
}
