//! Sign sequences of roots under powers of an element, odd roots, and
//! certificates that the odd reflections generate `W`.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::classify::{classify_component, ClassifyError};
use crate::geom::{Geometry, Root};
use crate::linalg::rank_of;
use crate::scalar::{ExactScalar, Field, Sign};
use crate::words::GroupElement;

pub const DEFAULT_CAP: u64 = 200;
pub const DEFAULT_DEPTH: usize = 8;
/// Consecutive strictly monotone steps required before a limit sign is
/// accepted.
pub const DEFAULT_STABLE_STEPS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EssentialError {
    #[error("system is reducible")]
    Reducible,
    #[error("system is of finite type")]
    FiniteType,
    #[error("expected {expected} roots, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSequence {
    pub window: i64,
    /// `signs[n + window]` is the sign of `w^n . gamma`.
    pub signs: Vec<Sign>,
}

impl SignSequence {
    pub fn at(&self, n: i64) -> Sign {
        self.signs[(n + self.window) as usize]
    }

    pub fn sign_changes(&self) -> usize {
        self.signs.windows(2).filter(|p| p[0] != p[1]).count()
    }
}

impl std::fmt::Display for SignSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    Periodic(u64),
    /// Limit signs at `-inf` and `+inf`, which differ.
    Odd { minus: Sign, plus: Sign },
    EvenNonperiodic { limit: Sign },
    Undecided(u64),
}

impl RootClass {
    pub fn is_odd(&self) -> bool {
        matches!(self, RootClass::Odd { .. })
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, RootClass::Undecided(_))
    }
}

pub fn sign_sequence<T: ExactScalar>(w: &GroupElement<T>, gamma: &Root<T>, window: i64) -> SignSequence {
    let n = window.max(0) as usize;
    let winv = w.inverse();
    let mut forward = vec![gamma.sign()];
    let mut v = gamma.coords.clone();
    for _ in 0..n {
        v = w.act(&v);
        forward.push(Root::new(v.clone()).sign());
    }
    let mut backward = Vec::with_capacity(n);
    let mut v = gamma.coords.clone();
    for _ in 0..n {
        v = winv.act(&v);
        backward.push(Root::new(v.clone()).sign());
    }
    backward.reverse();
    backward.extend(forward);
    SignSequence {
        window: n as i64,
        signs: backward,
    }
}

fn coordinate_sum<T: Field>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, x| acc + x)
}

/// Iterate `x . gamma` until the sign has held with strictly monotone
/// coordinate sum for `stable` steps; `None` if `cap` runs out first.
/// Also reports an exact return to `gamma`.
enum Walk {
    Returned(u64),
    Limit(Sign),
    Open,
}

fn walk<T: ExactScalar>(x: &GroupElement<T>, gamma: &Root<T>, cap: u64, stable: usize) -> Walk {
    let mut v = gamma.coords.clone();
    let mut prev_sign = gamma.sign();
    let mut prev_sum = coordinate_sum(&v);
    let mut run = 0usize;
    for k in 1..=cap {
        v = x.act(&v);
        if v == gamma.coords {
            return Walk::Returned(k);
        }
        let sign = Root::new(v.clone()).sign();
        let sum = coordinate_sum(&v);
        let step = (sum.clone() - &prev_sum).sign();
        if sign == prev_sign && step == sign && sign != Sign::Zero {
            run += 1;
        } else {
            run = 0;
        }
        if run >= stable {
            return Walk::Limit(sign);
        }
        prev_sign = sign;
        prev_sum = sum;
    }
    Walk::Open
}

pub fn classify_root<T: ExactScalar>(w: &GroupElement<T>, gamma: &Root<T>, cap: u64) -> RootClass {
    classify_root_with(w, gamma, cap, DEFAULT_STABLE_STEPS)
}

pub fn classify_root_with<T: ExactScalar>(w: &GroupElement<T>, gamma: &Root<T>, cap: u64, stable: usize) -> RootClass {
    let plus = match walk(w, gamma, cap, stable) {
        Walk::Returned(p) => return RootClass::Periodic(p),
        Walk::Limit(s) => s,
        Walk::Open => return RootClass::Undecided(cap),
    };
    let minus = match walk(&w.inverse(), gamma, cap, stable) {
        Walk::Returned(p) => return RootClass::Periodic(p),
        Walk::Limit(s) => s,
        Walk::Open => return RootClass::Undecided(cap),
    };
    if plus != minus {
        RootClass::Odd { minus, plus }
    } else {
        RootClass::EvenNonperiodic { limit: plus }
    }
}

#[derive(Clone, Debug)]
pub struct OddRoots<T> {
    pub odd: Vec<Root<T>>,
    /// Enumerated roots whose class was not decided within the cap.
    pub undecided: Vec<Root<T>>,
    pub examined: usize,
}

/// Odd roots among the positive roots of depth at most `depth`.
pub fn odd_reflections<T: ExactScalar>(w: &GroupElement<T>, depth: usize, cap: u64) -> OddRoots<T> {
    let roots = w.geometry().enumerate_roots(depth).roots;
    let mut odd = Vec::new();
    let mut undecided = Vec::new();
    for r in &roots {
        match classify_root(w, r, cap) {
            RootClass::Odd { .. } => odd.push(r.clone()),
            RootClass::Undecided(_) => undecided.push(r.clone()),
            _ => {}
        }
    }
    OddRoots {
        odd,
        undecided,
        examined: roots.len(),
    }
}

/// `alpha_s = +-(s_{reflectors[0]} ... s_{reflectors[k-1]}) . odd[base]`,
/// indices into the odd-root list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRootDerivation {
    pub simple: usize,
    pub base: usize,
    pub reflectors: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum PinfVerdict<T> {
    Yes {
        odd: Vec<Root<T>>,
        derivations: Vec<SimpleRootDerivation>,
    },
    Undecided {
        odd_count: usize,
        undecided_count: usize,
        missing: Vec<usize>,
    },
}

impl<T> PinfVerdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, PinfVerdict::Yes { .. })
    }
}

fn positive_rep<T: Field>(v: Vec<T>) -> Vec<T> {
    let r = Root::new(v);
    if r.is_negative() {
        r.neg().coords
    } else {
        r.coords
    }
}

/// Whether the odd reflections of `w` generate `W`, certified by reaching
/// every simple root from odd roots through at most `depth` reflections in
/// odd roots.
pub fn pinf_generates<T: ExactScalar>(w: &GroupElement<T>, depth: usize, cap: u64) -> Result<PinfVerdict<T>, EssentialError> {
    let geo: &Arc<Geometry<T>> = w.geometry();
    let sys = geo.system();
    if !sys.is_connected(&(0..sys.rank()).collect::<Vec<_>>()) {
        return Err(EssentialError::Reducible);
    }
    let all: Vec<usize> = (0..sys.rank()).collect();
    if classify_component::<T>(sys, &all)?.is_finite() {
        return Err(EssentialError::FiniteType);
    }
    let found = odd_reflections(w, depth, cap);
    let odd = found.odd;
    let n = geo.rank();
    // root -> (base, reflectors applied, first applied last)
    let mut reached: HashMap<Vec<T>, (usize, Vec<usize>)> = HashMap::new();
    let mut frontier: Vec<Vec<T>> = Vec::new();
    for (i, r) in odd.iter().enumerate() {
        if reached.insert(r.coords.clone(), (i, Vec::new())).is_none() {
            frontier.push(r.coords.clone());
        }
    }
    let simple_done = |reached: &HashMap<Vec<T>, (usize, Vec<usize>)>| {
        (0..n).all(|s| reached.contains_key(&Root::<T>::simple(n, s).coords))
    };
    let mut level = 0;
    while !simple_done(&reached) && level < depth && !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for v in &frontier {
            let (base, path) = reached[v].clone();
            for (j, g) in odd.iter().enumerate() {
                let img = positive_rep(geo.reflect(&g.coords, v));
                if !reached.contains_key(&img) {
                    let mut p = vec![j];
                    p.extend(path.iter().copied());
                    reached.insert(img.clone(), (base, p));
                    next.push(img);
                }
            }
        }
        frontier = next;
    }
    let missing: Vec<usize> = (0..n)
        .filter(|&s| !reached.contains_key(&Root::<T>::simple(n, s).coords))
        .collect();
    if !missing.is_empty() {
        return Ok(PinfVerdict::Undecided {
            odd_count: odd.len(),
            undecided_count: found.undecided.len(),
            missing,
        });
    }
    let derivations = (0..n)
        .map(|s| {
            let (base, reflectors) = reached[&Root::<T>::simple(n, s).coords].clone();
            SimpleRootDerivation {
                simple: s,
                base,
                reflectors,
            }
        })
        .collect();
    Ok(PinfVerdict::Yes { odd, derivations })
}

/// Replay a derivation: the resulting vector is `+-alpha_s`.
pub fn check_derivation<T: ExactScalar>(geo: &Geometry<T>, odd: &[Root<T>], d: &SimpleRootDerivation) -> bool {
    let mut v = odd[d.base].coords.clone();
    for &j in d.reflectors.iter().rev() {
        v = geo.reflect(&odd[j].coords, &v);
    }
    positive_rep(v) == Root::<T>::simple(geo.rank(), d.simple).coords
}

/// Linear independence of `roots` (exactly `rank` of them); when true the
/// product of their reflections has full standard parabolic closure.
pub fn essential_by_independence<T: ExactScalar>(geo: &Geometry<T>, roots: &[Root<T>]) -> Result<bool, EssentialError> {
    if roots.len() != geo.rank() {
        return Err(EssentialError::WrongCount {
            expected: geo.rank(),
            got: roots.len(),
        });
    }
    let vecs: Vec<Vec<T>> = roots.iter().map(|r| r.coords.clone()).collect();
    Ok(rank_of(&vecs) == geo.rank())
}

/// `s_{roots[0]} ... s_{roots[k-1]}` as a group element.
pub fn reflection_product<T: ExactScalar>(geo: &Arc<Geometry<T>>, roots: &[Root<T>]) -> GroupElement<T> {
    let mut m = crate::linalg::Matrix::identity(geo.rank());
    for r in roots {
        m = m.mul(&geo.reflection_matrix(&r.coords));
    }
    GroupElement::from_matrix(geo, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxsystem::CoxeterSystem;
    use crate::exactreal::TrigScalar;

    type T = TrigScalar;

    fn geo(text: &str) -> Arc<Geometry<T>> {
        Arc::new(Geometry::new(&CoxeterSystem::parse(text).unwrap()).unwrap())
    }

    const A1T: &str = "rank 2\nedge 1 2 inf";
    const A2T: &str = "rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3";

    #[test]
    fn sign_sequence_examples() {
        let g = geo(A1T);
        let w = GroupElement::from_word(&g, &[0, 1]).unwrap();
        let seq = sign_sequence(&w, &Root::simple(2, 0), 6);
        for n in -6..=6 {
            let want = if n < 0 { Sign::Negative } else { Sign::Positive };
            assert_eq!(seq.at(n), want, "n = {n}");
        }
        assert_eq!(seq.sign_changes(), 1);
        let a2 = geo("rank 2\nedge 1 2 3");
        let w = GroupElement::from_word(&a2, &[0, 1]).unwrap();
        let seq = sign_sequence(&w, &Root::simple(2, 0), 6);
        for n in -3..=3 {
            assert_eq!(seq.at(n), seq.at(n + 3));
        }
    }

    #[test]
    fn classify_examples() {
        let a2 = geo("rank 2\nedge 1 2 3");
        let w = GroupElement::from_word(&a2, &[0, 1]).unwrap();
        assert_eq!(classify_root(&w, &Root::simple(2, 0), 50), RootClass::Periodic(3));
        let g = geo(A1T);
        let w = GroupElement::from_word(&g, &[0, 1]).unwrap();
        assert_eq!(
            classify_root(&w, &Root::simple(2, 0), 50),
            RootClass::Odd {
                minus: Sign::Negative,
                plus: Sign::Positive
            }
        );
        let g = geo(A2T);
        let c = GroupElement::from_word(&g, &[0, 1, 2]).unwrap();
        assert!(classify_root(&c, &Root::simple(3, 0), 50).is_odd());
    }

    #[test]
    fn odd_and_pinf() {
        let g = geo(A1T);
        let w = GroupElement::from_word(&g, &[0, 1]).unwrap();
        let found = odd_reflections(&w, 4, 200);
        assert_eq!(found.odd.len(), found.examined);
        assert!(pinf_generates(&w, 8, 200).unwrap().is_yes());

        let g = geo(A2T);
        let c = GroupElement::from_word(&g, &[0, 1, 2]).unwrap();
        match pinf_generates(&c, 8, 200).unwrap() {
            PinfVerdict::Yes { odd, derivations } => {
                assert!(derivations.iter().all(|d| check_derivation(&g, &odd, d)));
            }
            other => panic!("{other:?}"),
        }
        let s1 = GroupElement::generator(&g, 0);
        match pinf_generates(&s1, 8, 200).unwrap() {
            PinfVerdict::Undecided { odd_count, .. } => assert_eq!(odd_count, 0),
            other => panic!("{other:?}"),
        }
        let id = GroupElement::identity(&g);
        assert!(odd_reflections(&id, 3, 50).odd.is_empty());
        let a2 = geo("rank 2\nedge 1 2 3");
        assert_eq!(
            pinf_generates(&GroupElement::identity(&a2), 3, 50).unwrap_err(),
            EssentialError::FiniteType
        );
    }

    #[test]
    fn independence_examples() {
        let g = geo(A1T);
        let a1 = Root::<T>::simple(2, 0);
        let a2 = Root::<T>::simple(2, 1);
        assert!(essential_by_independence(&g, &[a1.clone(), a2.clone()]).unwrap());
        let mixed = Root::new(vec![T::integer(2), T::integer(1)]);
        assert!(essential_by_independence(&g, &[a1.clone(), mixed]).unwrap());
        assert!(!essential_by_independence(&g, &[a1.clone(), a1.clone()]).unwrap());
        assert!(essential_by_independence(&g, &[a1]).is_err());
    }
}
