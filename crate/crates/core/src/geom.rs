//! Geometric representation: the bilinear form, simple reflections, roots.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::coxsystem::{CoxeterSystem, Label};
use crate::linalg::{dot, Matrix};
use crate::scalar::{CoxeterScalar, ExactScalar, Field, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("scalar type cannot represent cos(pi/{0})")]
    Unrepresentable(u32),
    #[error("vector is not a root: {0}")]
    NotARoot(String),
}

/// Matrix of `<alpha_s, alpha_t>`.
pub type GramForm<T> = Matrix<T>;

/// Coordinates over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root<T> {
    pub coords: Vec<T>,
}

impl<T: Field> Root<T> {
    pub fn new(coords: Vec<T>) -> Root<T> {
        Root { coords }
    }

    pub fn simple(rank: usize, s: usize) -> Root<T> {
        let mut coords = vec![T::zero(); rank];
        coords[s] = T::one();
        Root { coords }
    }

    /// `Positive` if all coordinates are `>= 0`, `Negative` if all `<= 0`,
    /// `Zero` for the zero vector or mixed signs.
    pub fn sign(&self) -> Sign {
        let mut seen = Sign::Zero;
        for c in &self.coords {
            match c.sign() {
                Sign::Zero => {}
                s if seen == Sign::Zero => seen = s,
                s if s != seen => return Sign::Zero,
                _ => {}
            }
        }
        seen
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| !self.coords[i].is_zero())
            .collect()
    }

    pub fn neg(&self) -> Root<T> {
        Root {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Sum of coordinates.
    pub fn height(&self) -> T {
        self.coords.iter().fold(T::zero(), |acc, c| acc + c)
    }
}

impl<T: CoxeterScalar> fmt::Display for Root<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.render()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<T: fmt::Debug> fmt::Debug for Root<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

/// A Coxeter system with its form and generator matrices.
#[derive(Clone, Debug)]
pub struct Geometry<T> {
    sys: CoxeterSystem,
    modulus: u32,
    gram: GramForm<T>,
    generators: Vec<Matrix<T>>,
}

/// `<alpha_s, alpha_t>` for label `m`.
pub fn form_entry<T: CoxeterScalar>(label: Label, modulus: u32) -> Result<T, GeomError> {
    match label {
        Label::Finite(1) => Ok(T::one()),
        Label::Finite(m) => T::cos_pi(1, m, modulus)
            .map(|c| -c)
            .ok_or(GeomError::Unrepresentable(m)),
        Label::Infinite => Ok(-T::one()),
    }
}

impl<T: CoxeterScalar> Geometry<T> {
    pub fn new(sys: &CoxeterSystem) -> Result<Geometry<T>, GeomError> {
        let n = sys.rank();
        let modulus = sys.modulus();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(form_entry::<T>(sys.label(i, j), modulus)?);
            }
            rows.push(row);
        }
        let gram = Matrix::from_rows(rows);
        let generators = (0..n)
            .map(|s| {
                let mut m = Matrix::identity(n);
                for t in 0..n {
                    let two_g = gram[(s, t)].clone() + &gram[(s, t)];
                    let slot = &mut m[(s, t)];
                    *slot = std::mem::replace(slot, T::zero()) - two_g;
                }
                m
            })
            .collect();
        Ok(Geometry {
            sys: sys.clone(),
            modulus,
            gram,
            generators,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn gram(&self) -> &GramForm<T> {
        &self.gram
    }

    /// Matrix of the simple reflection `s`: identity with row `s` replaced
    /// by `e_s - 2 G_s`.
    pub fn generator(&self, s: usize) -> &Matrix<T> {
        &self.generators[s]
    }

    pub fn pairing(&self, u: &[T], v: &[T]) -> T {
        dot(u, &self.gram.apply(v))
    }

    /// `<alpha_s, v>`.
    pub fn pairing_simple(&self, s: usize, v: &[T]) -> T {
        dot(self.gram.row(s), v)
    }

    /// `s_gamma . v = v - 2<gamma, v> gamma`.
    pub fn reflect(&self, gamma: &[T], v: &[T]) -> Vec<T> {
        let p = self.pairing(gamma, v);
        let two_p = p.clone() + &p;
        v.iter()
            .zip(gamma)
            .map(|(x, g)| x.clone() - two_p.clone() * g)
            .collect()
    }

    /// `s . v`, touching only coordinate `s`.
    pub fn simple_reflect(&self, s: usize, v: &[T]) -> Vec<T> {
        let p = self.pairing_simple(s, v);
        let mut out = v.to_vec();
        out[s] = out[s].clone() - p.clone() - p;
        out
    }

    /// Matrix of the reflection along a unit vector `gamma`.
    pub fn reflection_matrix(&self, gamma: &[T]) -> Matrix<T> {
        let n = self.rank();
        let g_gamma = self.gram.apply(gamma);
        Matrix::from_fn(n, n, |i, j| {
            let delta = if i == j { T::one() } else { T::zero() };
            let t = gamma[i].clone() * &g_gamma[j];
            delta - t.clone() - t
        })
    }

    /// Sub-form on `subset` with the coordinate embedding.
    pub fn parabolic_restrict(&self, subset: &[usize]) -> (GramForm<T>, Vec<usize>) {
        (self.gram.submatrix(subset, subset), subset.to_vec())
    }

    /// Inversion set of the element given by a reduced word: the roots
    /// `s_n ... s_{i+1} . alpha_{s_i}`.
    pub fn inversion_set(&self, reduced_word: &[usize]) -> Vec<Root<T>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(reduced_word.len());
        for i in 0..reduced_word.len() {
            let mut v = Root::<T>::simple(n, reduced_word[i]).coords;
            for &s in &reduced_word[i + 1..] {
                v = self.simple_reflect(s, &v);
            }
            out.push(Root::new(v));
        }
        out
    }

    /// Certify that `gamma` is a positive root: repeatedly apply a simple
    /// reflection that strictly lowers it until a simple root remains.
    /// Returns `(word, s)` with `gamma = s_word[0] ... s_word[k-1] . alpha_s`.
    pub fn descend_to_simple(&self, gamma: &Root<T>, max_steps: usize) -> Result<(Vec<usize>, usize), GeomError> {
        let fail = |why: &str| GeomError::NotARoot(format!("{gamma}: {why}"));
        if self.pairing(&gamma.coords, &gamma.coords) != T::one() {
            return Err(fail("not a unit vector"));
        }
        let mut v = gamma.clone();
        let mut word = Vec::new();
        for _ in 0..=max_steps {
            if !v.is_positive() {
                return Err(fail("reached a vector that is not sign-coherent positive"));
            }
            let supp = v.support();
            if supp.len() == 1 && v.coords[supp[0]].is_one() {
                return Ok((word, supp[0]));
            }
            let s = (0..self.rank())
                .find(|&s| self.pairing_simple(s, &v.coords).is_positive())
                .ok_or_else(|| fail("no descent"))?;
            v = Root::new(self.simple_reflect(s, &v.coords));
            word.push(s);
        }
        Err(fail("step cap exhausted"))
    }
}

/// Positive roots reached from the simple roots by at most `depth` simple
/// reflections, in breadth-first order.
#[derive(Clone, Debug)]
pub struct RootEnumeration<T> {
    pub roots: Vec<Root<T>>,
    /// Breadth-first level at which each root was first reached.
    pub levels: Vec<usize>,
    /// True if a level produced no new roots (the whole positive system).
    pub closed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthStatus {
    Reached,
    Closed,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitGrowth {
    pub count: usize,
    pub status: GrowthStatus,
    pub levels: usize,
}

impl<T: ExactScalar> Geometry<T> {
    pub fn enumerate_roots(&self, depth: usize) -> RootEnumeration<T> {
        let n = self.rank();
        let mut seen: HashSet<Vec<T>> = HashSet::new();
        let mut roots = Vec::new();
        let mut levels = Vec::new();
        let mut frontier = Vec::new();
        for s in 0..n {
            let r = Root::<T>::simple(n, s);
            seen.insert(r.coords.clone());
            roots.push(r.clone());
            levels.push(0);
            frontier.push(r);
        }
        let mut closed = false;
        for level in 1..=depth {
            let mut next = Vec::new();
            for r in &frontier {
                for s in 0..n {
                    let v = self.simple_reflect(s, &r.coords);
                    if v == r.coords {
                        continue;
                    }
                    let img = Root::new(v);
                    if !img.is_positive() {
                        continue;
                    }
                    if seen.insert(img.coords.clone()) {
                        roots.push(img.clone());
                        levels.push(level);
                        next.push(img);
                    }
                }
            }
            if next.is_empty() {
                closed = true;
                break;
            }
            frontier = next;
        }
        if depth == 0 && n == 0 {
            closed = true;
        }
        RootEnumeration {
            roots,
            levels,
            closed,
        }
    }

    /// Size of `W . gamma` (negative roots included) explored breadth-first
    /// until `target` distinct roots or `max_levels` levels.
    pub fn root_orbit_growth(&self, gamma: &Root<T>, target: usize, max_levels: usize) -> OrbitGrowth {
        let n = self.rank();
        let mut seen: HashSet<Vec<T>> = HashSet::new();
        seen.insert(gamma.coords.clone());
        let mut queue = VecDeque::from([(gamma.coords.clone(), 0usize)]);
        let mut deepest = 0;
        while let Some((v, level)) = queue.pop_front() {
            if seen.len() >= target {
                return OrbitGrowth {
                    count: seen.len(),
                    status: GrowthStatus::Reached,
                    levels: deepest,
                };
            }
            if level == max_levels {
                continue;
            }
            for s in 0..n {
                let w = self.simple_reflect(s, &v);
                if seen.insert(w.clone()) {
                    deepest = deepest.max(level + 1);
                    queue.push_back((w, level + 1));
                    if seen.len() >= target {
                        return OrbitGrowth {
                            count: seen.len(),
                            status: GrowthStatus::Reached,
                            levels: deepest,
                        };
                    }
                }
            }
        }
        let closed_early = deepest < max_levels;
        OrbitGrowth {
            count: seen.len(),
            status: if closed_early {
                GrowthStatus::Closed
            } else {
                GrowthStatus::Undecided
            },
            levels: deepest,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactreal::TrigScalar;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type T = TrigScalar;

    fn geo(text: &str) -> Geometry<T> {
        Geometry::new(&CoxeterSystem::parse(text).unwrap()).unwrap()
    }

    fn int(n: i64) -> T {
        T::integer(n)
    }

    #[test]
    fn gram_examples() {
        let a2 = geo("rank 2\nedge 1 2 3");
        let half = T::rational(&BigRational::new(BigInt::from(-1), BigInt::from(2)), 1);
        assert_eq!(a2.gram()[(0, 1)], half);
        let b2 = geo("rank 2\nedge 1 2 4");
        let c = b2.gram()[(0, 1)].clone();
        assert_eq!(&c * &c, T::rational(&BigRational::new(1.into(), 2.into()), 1));
        assert!(c.is_negative());
        let a1t = geo("rank 2\nedge 1 2 inf");
        assert_eq!(a1t.gram()[(0, 1)], int(-1));
        assert_eq!(a1t.gram()[(1, 1)], T::one());
    }

    #[test]
    fn reflect_examples() {
        let a1t = geo("rank 2\nedge 1 2 inf");
        let a1 = Root::<T>::simple(2, 0).coords;
        let a2 = Root::<T>::simple(2, 1).coords;
        assert_eq!(a1t.reflect(&a1, &a1), vec![int(-1), T::zero()]);
        assert_eq!(a1t.reflect(&a1, &a2), vec![int(2), int(1)]);
        let v = vec![int(3), int(-7)];
        let g = vec![int(2), int(1)];
        assert_eq!(a1t.reflect(&g, &a1t.reflect(&g, &v)), v);
    }

    #[test]
    fn enumeration_examples() {
        let a2 = geo("rank 2\nedge 1 2 3");
        let e = a2.enumerate_roots(3);
        assert_eq!(e.roots.len(), 3);
        assert!(e.closed);
        assert!(e.roots.contains(&Root::new(vec![T::one(), T::one()])));
        assert_eq!(geo("rank 2\nedge 1 2 4").enumerate_roots(4).roots.len(), 4);
        let a1t = geo("rank 2\nedge 1 2 inf");
        let e = a1t.enumerate_roots(1);
        assert_eq!(e.roots.len(), 4);
        assert!(!e.closed);
        assert!(e.roots.contains(&Root::new(vec![int(2), int(1)])));
        assert!(e.roots.contains(&Root::new(vec![int(1), int(2)])));
        // each further level adds two roots
        assert_eq!(a1t.enumerate_roots(3).roots.len(), 8);
    }

    #[test]
    fn orbit_growth_examples() {
        let a1t = geo("rank 2\nedge 1 2 inf");
        let g = a1t.root_orbit_growth(&Root::simple(2, 0), 50, 200);
        assert_eq!((g.count, g.status), (50, GrowthStatus::Reached));
        let a2 = geo("rank 2\nedge 1 2 3");
        let g = a2.root_orbit_growth(&Root::simple(2, 0), 10, 200);
        assert_eq!((g.count, g.status), (6, GrowthStatus::Closed));
        let a2t = geo("rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3");
        let g = a2t.root_orbit_growth(&Root::simple(3, 0), 100, 200);
        assert_eq!((g.count, g.status), (100, GrowthStatus::Reached));
    }

    #[test]
    fn descend_certifies_roots() {
        let a1t = geo("rank 2\nedge 1 2 inf");
        let (word, s) = a1t.descend_to_simple(&Root::new(vec![int(3), int(2)]), 100).unwrap();
        let mut v = Root::<T>::simple(2, s).coords;
        for &t in word.iter().rev() {
            v = a1t.simple_reflect(t, &v);
        }
        assert_eq!(v, vec![int(3), int(2)]);
        assert!(a1t.descend_to_simple(&Root::new(vec![int(1), int(1)]), 100).is_err());
    }

    #[test]
    fn restrict_examples() {
        let a3 = geo("rank 3\nedge 1 2 3\nedge 2 3 3");
        let (g, emb) = a3.parabolic_restrict(&[0, 1]);
        assert_eq!(g, geo("rank 2\nedge 1 2 3").gram().clone());
        assert_eq!(emb, vec![0, 1]);
        let b2 = geo("rank 2\nedge 1 2 4");
        assert_eq!(b2.parabolic_restrict(&[0]).0[(0, 0)], T::one());
    }
}
