//! Almost central involutions in `W x| G` for a finite group `G` of graph
//! automorphisms.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::classify::{classify_system, ClassifyError};
use crate::coxsystem::{format_set, CoxeterSystem, GraphAutomorphism};
use crate::fixedpoint::apply_automorphism;
use crate::geom::Geometry;
use crate::scalar::ExactScalar;
use crate::words::GroupElement;

pub const DEFAULT_GROUP_CAP: usize = 1000;
pub const DEFAULT_ENUMERATION_CAP: usize = 10000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AciError {
    #[error("group closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("element is not an involution: {0}")]
    NotInvolution(String),
    #[error("W x| G exceeds the enumeration cap {0}")]
    EnumerationCap(usize),
    #[error("system is not of finite type")]
    NotFinite,
    #[error("action index {0} out of range")]
    BadIndex(usize),
    #[error("automorphism rank {0} does not match system rank {1}")]
    RankMismatch(usize, usize),
    #[error("action file line {line}: {reason}")]
    Action { line: usize, reason: String },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Closure of a set of automorphisms, identity at index 0, with its
/// multiplication table: `table[a][b]` is the index of `a o b`.
#[derive(Clone, Debug)]
pub struct FiniteActionGroup {
    pub elements: Vec<GraphAutomorphism>,
    pub table: Vec<Vec<usize>>,
    /// Indices of the generators used for the closure.
    pub generators: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteActionGroup {
    pub fn closure(rank: usize, generators: &[GraphAutomorphism], cap: usize) -> Result<FiniteActionGroup, AciError> {
        if let Some(g) = generators.iter().find(|g| g.rank() != rank) {
            return Err(AciError::RankMismatch(g.rank(), rank));
        }
        let mut elements = vec![GraphAutomorphism::identity(rank)];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(elements[0].images().to_vec(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for g in generators {
                let c = elements[a].compose(g);
                if !index.contains_key(c.images()) {
                    if elements.len() == cap {
                        return Err(AciError::GroupTooLarge(cap));
                    }
                    index.insert(c.images().to_vec(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(c);
                }
            }
        }
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[a.compose(b).images()]).collect())
            .collect();
        let n = elements.len();
        let inverses = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).unwrap()).collect();
        let gens = generators.iter().map(|g| index[g.images()]).collect();
        Ok(FiniteActionGroup {
            elements,
            table,
            generators: gens,
            inverses,
        })
    }

    pub fn trivial(rank: usize) -> FiniteActionGroup {
        FiniteActionGroup::closure(rank, &[], 1).expect("identity only")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, g: &GraphAutomorphism) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }

    pub fn is_involution(&self, a: usize) -> bool {
        a != 0 && self.mul(a, a) == 0
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        h.contains(&0) && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, self.inverse(b)))))
    }

    /// Elements commuting with every member of `x`.
    pub fn centralizer(&self, x: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| x.iter().all(|&a| self.mul(g, a) == self.mul(a, g)))
            .collect()
    }

    /// Subgroup generated by `x`.
    pub fn generated(&self, x: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for &g in x {
                let c = self.mul(a, g);
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
        (0..self.order()).filter(|&a| seen[a]).collect()
    }

    /// Normal closure of `x`.
    pub fn normal_closure(&self, x: &[usize]) -> Vec<usize> {
        let conj: Vec<usize> = (0..self.order())
            .flat_map(|g| x.iter().map(move |&a| (g, a)))
            .map(|(g, a)| self.mul(self.mul(g, a), self.inverse(g)))
            .collect();
        self.generated(&conj)
    }

    /// Intersection of the conjugates of `h`.
    pub fn core(&self, h: &[usize]) -> Result<Vec<usize>, AciError> {
        if !self.is_subgroup(h) {
            return Err(AciError::NotSubgroup);
        }
        Ok(h.iter()
            .copied()
            .filter(|&a| (0..self.order()).all(|g| h.contains(&self.mul(self.mul(self.inverse(g), a), g))))
            .collect())
    }

    pub fn index(&self, h: &[usize]) -> Result<usize, AciError> {
        if !self.is_subgroup(h) {
            return Err(AciError::NotSubgroup);
        }
        Ok(self.order() / h.len())
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        h.iter()
            .all(|&a| (0..self.order()).all(|g| h.contains(&self.mul(self.mul(g, a), self.inverse(g)))))
    }
}

/// `(w, g)` with `(w,g)(w',g') = (w rho_g(w'), g g')`.
#[derive(Clone, Debug)]
pub struct SemidirectElement<T> {
    pub w: GroupElement<T>,
    pub g: usize,
}

impl<T: ExactScalar> PartialEq for SemidirectElement<T> {
    fn eq(&self, other: &SemidirectElement<T>) -> bool {
        self.g == other.g && self.w == other.w
    }
}

impl<T: ExactScalar> Eq for SemidirectElement<T> {}

impl<T: ExactScalar> std::hash::Hash for SemidirectElement<T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.w.hash(state);
        self.g.hash(state);
    }
}

impl<T: ExactScalar> SemidirectElement<T> {
    pub fn new(w: GroupElement<T>, g: usize) -> SemidirectElement<T> {
        SemidirectElement { w, g }
    }

    pub fn identity(geo: &Arc<Geometry<T>>) -> SemidirectElement<T> {
        SemidirectElement::new(GroupElement::identity(geo), 0)
    }

    pub fn mul(&self, other: &SemidirectElement<T>, group: &FiniteActionGroup) -> SemidirectElement<T> {
        let moved = apply_automorphism(&group.elements[self.g], &other.w);
        SemidirectElement::new(self.w.mul(&moved), group.mul(self.g, other.g))
    }

    pub fn inverse(&self, group: &FiniteActionGroup) -> SemidirectElement<T> {
        let gi = group.inverse(self.g);
        SemidirectElement::new(apply_automorphism(&group.elements[gi], &self.w.inverse()), gi)
    }

    pub fn is_identity(&self) -> bool {
        self.g == 0 && self.w.is_identity()
    }

    /// `x^2 = 1` and `x != 1`, via `g^2 = 1` and `rho_g(w) = w^-1`.
    pub fn is_involution(&self, group: &FiniteActionGroup) -> bool {
        !self.is_identity()
            && group.mul(self.g, self.g) == 0
            && apply_automorphism(&group.elements[self.g], &self.w) == self.w.inverse()
    }

    pub fn display(&self, group: &FiniteActionGroup) -> String {
        format!("({} ; {})", self.w, group.elements[self.g])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotAciReason {
    /// `supp(w)` meets a component outside `O_rho`.
    WClause,
    /// `g` is neither trivial nor in `G_rho`.
    GClause,
}

impl fmt::Display for NotAciReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAciReason::WClause => f.write_str("w \u{2209} W(O_\u{3c1})"),
            NotAciReason::GClause => f.write_str("g \u{2209} G_\u{3c1} \u{222a} {1}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AciVerdict {
    Aci,
    NotAci(NotAciReason),
}

impl fmt::Display for AciVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AciVerdict::Aci => f.write_str("ACI"),
            AciVerdict::NotAci(r) => write!(f, "NotACI: {r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AciReport {
    /// Finite-type components lying in finite orbits (all of them, `G`
    /// being finite).
    pub o_rho: Vec<Vec<usize>>,
    /// Indices into the group.
    pub g_rho: Vec<usize>,
    /// Generators of `<ACI>`: simple reflections of `O_rho` and `G_rho`.
    pub reflections: Vec<usize>,
}

impl AciReport {
    pub fn o_rho_union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.o_rho.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Involutions of `G` acting trivially on every infinite-type component.
pub fn g_rho<T: ExactScalar>(sys: &CoxeterSystem, group: &FiniteActionGroup) -> Result<Vec<usize>, AciError> {
    let infinite: Vec<Vec<usize>> = classify_system::<T>(sys)?
        .into_iter()
        .filter(|(_, tag)| !tag.is_finite())
        .map(|(p, _)| p)
        .collect();
    Ok((0..group.order())
        .filter(|&h| group.is_involution(h))
        .filter(|&h| infinite.iter().all(|p| group.elements[h].fixes_pointwise(p)))
        .collect())
}

pub fn aci_subgroup<T: ExactScalar>(sys: &CoxeterSystem, group: &FiniteActionGroup) -> Result<AciReport, AciError> {
    let o_rho: Vec<Vec<usize>> = classify_system::<T>(sys)?
        .into_iter()
        .filter(|(_, tag)| tag.is_finite())
        .map(|(p, _)| p)
        .collect();
    let g_rho = g_rho::<T>(sys, group)?;
    let mut reflections: Vec<usize> = o_rho.iter().flatten().copied().collect();
    reflections.sort_unstable();
    Ok(AciReport {
        o_rho,
        g_rho,
        reflections,
    })
}

pub fn is_aci_involution<T: ExactScalar>(
    sys: &CoxeterSystem,
    group: &FiniteActionGroup,
    x: &SemidirectElement<T>,
) -> Result<AciVerdict, AciError> {
    if x.g >= group.order() {
        return Err(AciError::BadIndex(x.g));
    }
    if !x.is_involution(group) {
        return Err(AciError::NotInvolution(x.display(group)));
    }
    let report = aci_subgroup::<T>(sys, group)?;
    let allowed = report.o_rho_union();
    if !x.w.support().iter().all(|s| allowed.contains(s)) {
        return Ok(AciVerdict::NotAci(NotAciReason::WClause));
    }
    if x.g != 0 && !report.g_rho.contains(&x.g) {
        return Ok(AciVerdict::NotAci(NotAciReason::GClause));
    }
    Ok(AciVerdict::Aci)
}

/// Elements of a finite `W`, breadth-first by length.
pub fn enumerate_finite_group<T: ExactScalar>(geo: &Arc<Geometry<T>>, cap: usize) -> Result<Vec<GroupElement<T>>, AciError> {
    let mut seen: HashSet<GroupElement<T>> = HashSet::new();
    let id = GroupElement::identity(geo);
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in 0..geo.rank() {
            let v = w.mul_generator(s);
            if seen.insert(v.clone()) {
                if out.len() == cap {
                    return Err(AciError::EnumerationCap(cap));
                }
                out.push(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct BruteForceAci<T> {
    pub involutions: Vec<SemidirectElement<T>>,
    pub generated: HashSet<SemidirectElement<T>>,
    /// `W(O_rho) x| <G_rho>`, enumerated.
    pub predicted: HashSet<SemidirectElement<T>>,
}

impl<T: ExactScalar> BruteForceAci<T> {
    pub fn agrees(&self) -> bool {
        self.generated == self.predicted
    }
}

/// For finite `W`: every involution of `W x| G` is almost central; compare
/// the subgroup they generate with the predicted description.
pub fn brute_force_aci_finite<T: ExactScalar>(
    geo: &Arc<Geometry<T>>,
    group: &FiniteActionGroup,
    cap: usize,
) -> Result<BruteForceAci<T>, AciError> {
    let sys = geo.system();
    let all: Vec<usize> = (0..sys.rank()).collect();
    if !crate::classify::is_finite_type::<T>(sys, &all) {
        return Err(AciError::NotFinite);
    }
    let w_elems = enumerate_finite_group(geo, cap)?;
    if w_elems.len() * group.order() > cap {
        return Err(AciError::EnumerationCap(cap));
    }
    let involutions: Vec<SemidirectElement<T>> = w_elems
        .iter()
        .flat_map(|w| (0..group.order()).map(move |g| SemidirectElement::new(w.clone(), g)))
        .filter(|x| x.is_involution(group))
        .collect();
    let mut generated: HashSet<SemidirectElement<T>> = HashSet::new();
    let id = SemidirectElement::identity(geo);
    generated.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for y in &involutions {
            let z = x.mul(y, group);
            if generated.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    let report = aci_subgroup::<T>(sys, group)?;
    let allowed = report.o_rho_union();
    let g_sub = group.generated(&report.g_rho);
    let predicted = w_elems
        .iter()
        .filter(|w| w.support().iter().all(|s| allowed.contains(s)))
        .flat_map(|w| g_sub.iter().map(move |&g| SemidirectElement::new(w.clone(), g)))
        .collect();
    Ok(BruteForceAci {
        involutions,
        generated,
        predicted,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthCount {
    pub count: usize,
    pub radius: usize,
    pub reached: bool,
}

/// Distinct conjugates `y x y^-1` over the ball of radius `radius` in the
/// generators `S` and the generators of `G`, stopping at `target`.
pub fn conjugate_growth<T: ExactScalar>(
    geo: &Arc<Geometry<T>>,
    group: &FiniteActionGroup,
    x: &SemidirectElement<T>,
    target: usize,
    radius: usize,
) -> GrowthCount {
    let mut gens: Vec<SemidirectElement<T>> = (0..geo.rank())
        .map(|s| SemidirectElement::new(GroupElement::generator(geo, s), 0))
        .collect();
    gens.extend(
        group
            .generators
            .iter()
            .filter(|&&g| g != 0)
            .map(|&g| SemidirectElement::new(GroupElement::identity(geo), g)),
    );
    let mut ball: HashSet<SemidirectElement<T>> = HashSet::new();
    let mut conjugates: HashSet<SemidirectElement<T>> = HashSet::new();
    let id = SemidirectElement::identity(geo);
    ball.insert(id.clone());
    conjugates.insert(x.clone());
    let mut frontier = vec![id];
    let mut r = 0;
    while conjugates.len() < target && r < radius && !frontier.is_empty() {
        r += 1;
        let mut next = Vec::new();
        for y in &frontier {
            for g in &gens {
                let z = y.mul(g, group);
                if ball.insert(z.clone()) {
                    let c = z.mul(x, group).mul(&z.inverse(group), group);
                    conjugates.insert(c);
                    next.push(z);
                    if conjugates.len() >= target {
                        return GrowthCount {
                            count: conjugates.len(),
                            radius: r,
                            reached: true,
                        };
                    }
                }
            }
        }
        frontier = next;
    }
    GrowthCount {
        count: conjugates.len(),
        radius: r,
        reached: conjugates.len() >= target,
    }
}

/// Parse an action file: lines `gen (1 2)(3 4)`, `#` comments and blank
/// lines ignored.
pub fn parse_action(sys: &CoxeterSystem, text: &str) -> Result<Vec<GraphAutomorphism>, AciError> {
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(rest) = line.strip_prefix("gen") else {
            return Err(AciError::Action {
                line: i + 1,
                reason: format!("expected `gen <cycles>`, got {line:?}"),
            });
        };
        let g = GraphAutomorphism::parse(sys, rest).map_err(|e| AciError::Action {
            line: i + 1,
            reason: e.to_string(),
        })?;
        gens.push(g);
    }
    Ok(gens)
}

/// Render an orbit list like `{1,2} {3}`.
pub fn format_components(parts: &[Vec<usize>]) -> String {
    parts.iter().map(|p| format_set(p)).collect::<Vec<_>>().join(" ")
}
