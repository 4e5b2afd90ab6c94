//! Group elements as exact matrices with canonical reduced words.
//!
//! The canonical word of `w` is its lexicographically smallest reduced word:
//! the first letter is the smallest left descent of `w`, and so on.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::classify::is_positive_definite;
use crate::coxsystem::{CoxeterSystem, Label};
use crate::geom::{Geometry, Root};
use crate::linalg::Matrix;
use crate::scalar::{CoxeterScalar, ExactScalar, Field, Ring, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("bad word {0:?}")]
    Syntax(String),
    #[error("standard parabolic on {0} is not of finite type")]
    NonFiniteType(String),
}

/// Parse a 1-indexed word like `"1 2 1"` into 0-indexed letters.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>, WordError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| {
            let i: usize = w.parse().map_err(|_| WordError::Syntax(text.to_string()))?;
            if i == 0 || i > rank {
                Err(WordError::IndexOutOfRange { index: i, rank })
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Render a 0-indexed word 1-indexed, `"e"` when empty.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `m . s`: right multiplication by a simple reflection, in place.
/// Only columns change: column `j` gains `-2 G[s][j]` times column `s`.
pub(crate) fn right_mul_generator<T: CoxeterScalar>(geo: &Geometry<T>, m: &mut Matrix<T>, s: usize) {
    let n = geo.rank();
    let col_s = m.column(s);
    for j in 0..n {
        let g = &geo.gram()[(s, j)];
        if j == s || g.is_zero() {
            continue;
        }
        let f = -(g.clone() + g);
        for i in 0..n {
            if col_s[i].is_zero() {
                continue;
            }
            let v = col_s[i].clone() * &f;
            let slot = &mut m[(i, j)];
            *slot = std::mem::replace(slot, T::zero()) + v;
        }
    }
    for (i, c) in col_s.into_iter().enumerate() {
        m[(i, s)] = -c;
    }
}

pub(crate) fn matrix_of_word<T: CoxeterScalar>(geo: &Geometry<T>, word: &[usize]) -> Matrix<T> {
    let mut m = Matrix::identity(geo.rank());
    for &s in word {
        right_mul_generator(geo, &mut m, s);
    }
    m
}

/// Whether column `s` (that is, `w . alpha_s`) is negative.
fn column_negative<T: Field>(m: &Matrix<T>, s: usize) -> bool {
    (0..m.rows())
        .map(|i| m[(i, s)].sign())
        .find(|&x| x != Sign::Zero)
        == Some(Sign::Negative)
}

/// Reduced word by stripping right descents, smallest index first;
/// the result is read left to right.
fn strip_right_descents<T: CoxeterScalar>(geo: &Geometry<T>, m: &Matrix<T>) -> Vec<usize> {
    let mut cur = m.clone();
    let mut rev = Vec::new();
    let n = geo.rank();
    while let Some(s) = (0..n).find(|&s| column_negative(&cur, s)) {
        right_mul_generator(geo, &mut cur, s);
        rev.push(s);
    }
    rev.reverse();
    rev
}

/// Element of `W` acting on `V`; column `j` of `matrix` is `w . alpha_j`.
#[derive(Clone)]
pub struct GroupElement<T> {
    geo: Arc<Geometry<T>>,
    matrix: Matrix<T>,
    word: Vec<usize>,
}

/// Outcome of [`GroupElement::order_of`].
#[derive(Clone, Debug, PartialEq)]
pub enum Order<T> {
    Finite(u64),
    Infinite(InfiniteCertificate<T>),
    Undecided(u64),
}

/// Sound evidence of infinite order.
#[derive(Clone, Debug, PartialEq)]
pub enum InfiniteCertificate<T> {
    /// `w^power != 1` and `(w^power - 1)^rank = 0`: a nontrivial unipotent.
    Unipotent { power: u64 },
    /// `|tr(w^power)| > rank`, impossible for a finite-order element whose
    /// eigenvalues are roots of unity.
    TraceExceedsRank { power: u64, trace: T },
}

impl<T> Order<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Order::Infinite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(*k),
            _ => None,
        }
    }
}

impl<T: ExactScalar> GroupElement<T> {
    pub fn identity(geo: &Arc<Geometry<T>>) -> GroupElement<T> {
        GroupElement {
            geo: geo.clone(),
            matrix: Matrix::identity(geo.rank()),
            word: Vec::new(),
        }
    }

    pub fn generator(geo: &Arc<Geometry<T>>, s: usize) -> GroupElement<T> {
        GroupElement {
            geo: geo.clone(),
            matrix: geo.generator(s).clone(),
            word: vec![s],
        }
    }

    /// Product of the 0-indexed letters of `word`.
    pub fn from_word(geo: &Arc<Geometry<T>>, word: &[usize]) -> Result<GroupElement<T>, WordError> {
        let rank = geo.rank();
        if let Some(&bad) = word.iter().find(|&&s| s >= rank) {
            return Err(WordError::IndexOutOfRange {
                index: bad + 1,
                rank,
            });
        }
        Ok(GroupElement::from_matrix(geo, matrix_of_word(geo, word)))
    }

    /// Wrap a matrix known to represent an element of `W`.
    pub fn from_matrix(geo: &Arc<Geometry<T>>, matrix: Matrix<T>) -> GroupElement<T> {
        let any_word = strip_right_descents(geo, &matrix);
        // canonical word = smallest right descents of the inverse, in order
        let inv_word: Vec<usize> = any_word.iter().rev().copied().collect();
        let inverse = matrix_of_word(geo, &inv_word);
        let canonical = {
            let mut cur = inverse;
            let mut out = Vec::with_capacity(any_word.len());
            let n = geo.rank();
            while let Some(s) = (0..n).find(|&s| column_negative(&cur, s)) {
                right_mul_generator(geo, &mut cur, s);
                out.push(s);
            }
            out
        };
        GroupElement {
            geo: geo.clone(),
            matrix,
            word: canonical,
        }
    }

    pub fn geometry(&self) -> &Arc<Geometry<T>> {
        &self.geo
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// Canonical reduced word (0-indexed).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn mul(&self, other: &GroupElement<T>) -> GroupElement<T> {
        let mut m = self.matrix.clone();
        for &s in &other.word {
            right_mul_generator(&self.geo, &mut m, s);
        }
        GroupElement::from_matrix(&self.geo, m)
    }

    pub fn mul_generator(&self, s: usize) -> GroupElement<T> {
        let mut m = self.matrix.clone();
        right_mul_generator(&self.geo, &mut m, s);
        GroupElement::from_matrix(&self.geo, m)
    }

    pub fn inverse(&self) -> GroupElement<T> {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        GroupElement::from_matrix(&self.geo, matrix_of_word(&self.geo, &rev))
    }

    /// `x w x^-1`.
    pub fn conjugate_by(&self, x: &GroupElement<T>) -> GroupElement<T> {
        x.mul(self).mul(&x.inverse())
    }

    pub fn pow(&self, k: i64) -> GroupElement<T> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        GroupElement::from_matrix(&self.geo, base.matrix.pow(k.unsigned_abs()))
    }

    pub fn act(&self, v: &[T]) -> Vec<T> {
        self.matrix.apply(v)
    }

    pub fn act_root(&self, r: &Root<T>) -> Root<T> {
        Root::new(self.act(&r.coords))
    }

    /// `l(ws) < l(w)`.
    pub fn is_right_descent(&self, s: usize) -> bool {
        column_negative(&self.matrix, s)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.geo.rank())
            .filter(|&s| self.is_right_descent(s))
            .collect()
    }

    /// Letters of the reduced word, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.word.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn inversion_set(&self) -> Vec<Root<T>> {
        self.geo.inversion_set(&self.word)
    }

    /// Finite order, or a sound certificate of infinite order, within `cap`
    /// powers.
    pub fn order_of(&self, cap: u64) -> Order<T> {
        let n = self.geo.rank();
        let rank = T::from_integer(n as i64);
        let mut power = Matrix::identity(n);
        for k in 1..=cap {
            for &s in &self.word {
                right_mul_generator(&self.geo, &mut power, s);
            }
            if power.is_identity() {
                return Order::Finite(k);
            }
            let tr = power.trace();
            if (tr.clone() - &rank).is_positive() || (tr.clone() + &rank).is_negative() {
                return Order::Infinite(InfiniteCertificate::TraceExceedsRank { power: k, trace: tr });
            }
            if tr == rank {
                let nil = power.sub(&Matrix::identity(n));
                let mut acc = nil.clone();
                for _ in 1..n {
                    acc = acc.mul(&nil);
                }
                if acc.data_is_zero() {
                    return Order::Infinite(InfiniteCertificate::Unipotent { power: k });
                }
            }
        }
        Order::Undecided(cap)
    }

    /// `(w^I, w_I)` with `w = w^I w_I`, `w_I` in `W_I`, and `w^I` having no
    /// right descent in `I`.
    pub fn parabolic_decompose(&self, subset: &[usize]) -> (GroupElement<T>, GroupElement<T>) {
        let mut cur = self.matrix.clone();
        let mut stripped = Vec::new();
        while let Some(&s) = subset.iter().find(|&&s| column_negative(&cur, s)) {
            right_mul_generator(&self.geo, &mut cur, s);
            stripped.push(s);
        }
        stripped.reverse();
        let outer = GroupElement::from_matrix(&self.geo, cur);
        let inner = GroupElement::from_word(&self.geo, &stripped).expect("letters in range");
        debug_assert!(subset.iter().all(|&s| !outer.is_right_descent(s)));
        (outer, inner)
    }

    /// Longest element of the finite standard parabolic `W_I`.
    pub fn longest_element(geo: &Arc<Geometry<T>>, subset: &[usize]) -> Result<GroupElement<T>, WordError> {
        let (sub, _) = geo.parabolic_restrict(subset);
        if !is_positive_definite(&sub) {
            return Err(WordError::NonFiniteType(crate::coxsystem::format_set(subset)));
        }
        let mut m = Matrix::identity(geo.rank());
        while let Some(&s) = subset.iter().find(|&&s| !column_negative(&m, s)) {
            right_mul_generator(geo, &mut m, s);
        }
        let w = GroupElement::from_matrix(geo, m);
        // w . alpha_s = -alpha_{s'} for s in I, and w is an involution
        for &s in subset {
            let col = w.matrix.column(s);
            let supp: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
            assert!(
                supp.len() == 1 && subset.contains(&supp[0]) && (col[supp[0]].clone() + T::one()).is_zero(),
                "longest element does not map Pi_I to -Pi_I"
            );
        }
        assert!(w.matrix.mul(&w.matrix).is_identity(), "longest element is not an involution");
        Ok(w)
    }
}

trait ZeroMatrix {
    fn data_is_zero(&self) -> bool;
}

impl<T: Ring> ZeroMatrix for Matrix<T> {
    fn data_is_zero(&self) -> bool {
        (0..self.rows()).all(|i| self.row(i).iter().all(|x| x.is_zero()))
    }
}

impl<T: ExactScalar> PartialEq for GroupElement<T> {
    fn eq(&self, other: &GroupElement<T>) -> bool {
        self.matrix == other.matrix
    }
}

impl<T: ExactScalar> Eq for GroupElement<T> {}

impl<T: ExactScalar> Hash for GroupElement<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl<T> fmt::Debug for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", format_word(&self.word))
    }
}

impl<T> fmt::Display for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

/// The supersystem built by pairing generators with new `inf`-partners
/// while the leading subsystems are degenerate. Original generators keep
/// their indices; added generators follow. Returns the system and, for each
/// added generator, its partner.
pub fn nondegenerate_extension<T: ExactScalar>(sys: &CoxeterSystem) -> (CoxeterSystem, Vec<(usize, usize)>) {
    let n = sys.rank();
    let mut added: Vec<usize> = Vec::new();
    for k in 0..n {
        let total = n + added.len();
        let mut ext = CoxeterSystem::new(total);
        for (i, j, m) in sys.edges() {
            ext.set_label(i, j, m);
        }
        for (a, &partner) in added.iter().enumerate() {
            ext.set_label(partner, n + a, Label::Infinite);
        }
        // I_k: original s_0..s_k plus partners added so far
        let mut subset: Vec<usize> = (0..=k).collect();
        subset.extend((0..added.len()).map(|a| n + a));
        let geo = Geometry::<T>::new(&ext).expect("scalar supports labels");
        let (g, _) = geo.parabolic_restrict(&subset);
        if g.det().is_zero() {
            added.push(k);
        }
    }
    let mut ext = CoxeterSystem::new(n + added.len());
    for (i, j, m) in sys.edges() {
        ext.set_label(i, j, m);
    }
    for (a, &partner) in added.iter().enumerate() {
        ext.set_label(partner, n + a, Label::Infinite);
    }
    let pairs = added.iter().enumerate().map(|(a, &p)| (p, n + a)).collect();
    (ext, pairs)
}
