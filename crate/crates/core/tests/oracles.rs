//! Checks against computations that do not go through the library's own
//! algorithms: permutations for type A, closed forms, brute-force word
//! enumeration and hand-rolled rational determinants.

mod common;

use std::collections::HashSet;

use common::*;
use coxwork::classify::{catalog, classify_component, ComponentKind};
use coxwork::geom::GrowthStatus;
use coxwork::scalar::{CoxeterScalar, Field, Ring};
use coxwork::words::{GroupElement, Order};
use coxwork::{CoxeterSystem, Label, Root, TrigScalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use rand::Rng;

type T = TrigScalar;

fn int(n: i64) -> T {
    T::integer(n)
}

fn cos(k: u32, n: u32) -> T {
    T::cos_pi_frac(k, n).unwrap()
}

fn root(coords: &[i64]) -> Root {
    Root::new(coords.iter().map(|&c| int(c)).collect())
}

// ---- type A as permutations -------------------------------------------

fn permutation(rank: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=rank).collect();
    for &s in word {
        // right multiplication by the transposition (s s+1)
        p.swap(s, s + 1);
    }
    p
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

fn cycle_lcm(p: &[usize]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut l = 1u64;
    for i in 0..p.len() {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len > 0 {
            l = l.lcm(&len);
        }
    }
    l
}

#[test]
fn type_a_matches_permutations() {
    let mut r = rng(1);
    for n in 1..=5 {
        let sys = catalog::finite("A", n).unwrap();
        let geo = geometry(&sys);
        let letters: Vec<usize> = (0..n).collect();
        let mut seen: Vec<(Vec<usize>, Elem)> = Vec::new();
        for _ in 0..200 {
            let word = random_word(&mut r, &letters, 4 * n);
            let w = GroupElement::from_word(&geo, &word).unwrap();
            let p = permutation(n, &word);
            assert_eq!(w.length(), inversions(&p), "A{n} {word:?}");
            assert_eq!(w.order_of(100), Order::Finite(cycle_lcm(&p)), "A{n} {word:?}");
            for (q, v) in &seen {
                assert_eq!(*q == p, *v == w, "A{n}: equality disagrees with permutations");
            }
            if seen.len() < 40 {
                seen.push((p, w));
            }
        }
    }
}

// ---- root and group counts --------------------------------------------

fn positive_root_count(sys: &CoxeterSystem) -> usize {
    let e = geometry(sys).enumerate_roots(200);
    assert!(e.closed);
    e.roots.len()
}

#[test]
fn positive_root_counts() {
    for n in 1..=6 {
        assert_eq!(positive_root_count(&catalog::finite("A", n).unwrap()), n * (n + 1) / 2, "A{n}");
    }
    for n in 2..=5 {
        assert_eq!(positive_root_count(&catalog::finite("B", n).unwrap()), n * n, "B{n}");
    }
    for n in 4..=6 {
        assert_eq!(positive_root_count(&catalog::finite("D", n).unwrap()), n * (n - 1), "D{n}");
    }
    assert_eq!(positive_root_count(&catalog::finite("E", 6).unwrap()), 36);
    assert_eq!(positive_root_count(&catalog::finite("F", 4).unwrap()), 24);
    assert_eq!(positive_root_count(&catalog::finite("H", 3).unwrap()), 15);
    assert_eq!(positive_root_count(&catalog::finite("H", 4).unwrap()), 60);
    for m in 3..=12 {
        assert_eq!(positive_root_count(&catalog::finite("I", m).unwrap()), m, "I2({m})");
    }
}

#[test]
fn longest_element_length_is_root_count() {
    for (name, sys) in finite_catalog().into_iter().filter(|(_, s)| s.rank() <= 5) {
        let geo = geometry(&sys);
        let all: Vec<usize> = (0..sys.rank()).collect();
        let w0 = GroupElement::longest_element(&geo, &all).unwrap();
        assert_eq!(w0.length(), positive_root_count(&sys), "{name}");
        assert!(w0.inversion_set().iter().all(|r| r.is_positive()));
    }
}

#[test]
fn finite_group_orders() {
    use coxwork::aci::enumerate_finite_group;
    let cases = [
        (catalog::finite("A", 3).unwrap(), 24),
        (catalog::finite("B", 3).unwrap(), 48),
        (catalog::finite("H", 3).unwrap(), 120),
        (catalog::finite("D", 4).unwrap(), 192),
        (catalog::finite("I", 7).unwrap(), 14),
    ];
    for (sys, order) in cases {
        let geo = geometry(&sys);
        assert_eq!(enumerate_finite_group(&geo, 10_000).unwrap().len(), order, "{sys}");
    }
}

// ---- dihedral closed forms --------------------------------------------

#[test]
fn dihedral_rotation_trace_and_order() {
    for m in 3..=12u32 {
        let sys = catalog::finite("I", m as usize).unwrap();
        let geo = geometry(&sys);
        let rot = GroupElement::from_word(&geo, &[0, 1]).unwrap();
        // trace of a rotation by 2*pi/m in the plane
        let expected = T::cos_pi_frac(2, m).unwrap() * int(2);
        assert_eq!(rot.matrix().trace(), expected, "I2({m})");
        assert_eq!(rot.order_of(50), Order::Finite(m as u64));
    }
}

// ---- the infinite dihedral group --------------------------------------

#[test]
fn affine_a1_closed_form_orbit() {
    let geo = geometry(&catalog::affine("A", 1).unwrap());
    let w = GroupElement::from_word(&geo, &[0, 1]).unwrap();
    let beta = root(&[1, 0]);
    for k in -10i64..=10 {
        let img = w.pow(k).act_root(&beta);
        assert_eq!(img, root(&[2 * k + 1, 2 * k]), "k = {k}");
    }
    // positive roots: (k+1, k) and (k, k+1)
    let e = geo.enumerate_roots(9);
    assert!(!e.closed);
    let got: HashSet<Vec<T>> = e.roots.iter().map(|r| r.coords.clone()).collect();
    let mut expected = HashSet::new();
    for k in 0..=9 {
        expected.insert(root(&[k + 1, k]).coords);
        expected.insert(root(&[k, k + 1]).coords);
    }
    assert_eq!(got, expected);
    let growth = geo.root_orbit_growth(&beta, 50, 200);
    assert_eq!(growth.status, GrowthStatus::Reached);
    assert_eq!(growth.count, 50);
}

#[test]
fn affine_a1_reflection_and_order() {
    let geo = geometry(&catalog::affine("A", 1).unwrap());
    assert_eq!(geo.reflect(&root(&[1, 0]).coords, &root(&[0, 1]).coords), root(&[2, 1]).coords);
    let w = GroupElement::from_word(&geo, &[0, 1]).unwrap();
    assert!(w.order_of(100).is_infinite());
}

// ---- canonical words by brute force -----------------------------------

fn all_words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn canonical_word_is_lex_smallest_reduced_word() {
    let mut r = rng(3);
    for sys in [catalog::finite("A", 3).unwrap(), catalog::finite("B", 3).unwrap(), catalog::affine("A", 2).unwrap()] {
        let geo = geometry(&sys);
        let n = sys.rank();
        let letters: Vec<usize> = (0..n).collect();
        for _ in 0..25 {
            let w = random_element(&geo, &mut r, &letters, 6);
            let reduced: Vec<Vec<usize>> = all_words(n, w.length())
                .into_iter()
                .filter(|word| GroupElement::from_word(&geo, word).unwrap() == w)
                .collect();
            assert!(!reduced.is_empty());
            assert_eq!(w.word(), reduced.iter().min().unwrap().as_slice(), "{sys}");
        }
    }
    let a2 = geometry(&catalog::finite("A", 2).unwrap());
    assert_eq!(GroupElement::from_word(&a2, &[1, 0, 1]).unwrap().word(), &[0, 1, 0]);
    let b2 = geometry(&catalog::finite("B", 2).unwrap());
    let all = [0, 1];
    assert_eq!(GroupElement::longest_element(&b2, &all).unwrap().word(), &[0, 1, 0, 1]);
}

// ---- parabolic decomposition by scanning the coset --------------------

#[test]
fn parabolic_decomposition_minimises_the_coset() {
    use coxwork::aci::enumerate_finite_group;
    let mut r = rng(4);
    for sys in [catalog::finite("A", 3).unwrap(), catalog::finite("B", 3).unwrap(), catalog::affine("A", 2).unwrap()] {
        let geo = geometry(&sys);
        let n = sys.rank();
        let letters: Vec<usize> = (0..n).collect();
        for _ in 0..20 {
            let w = random_element(&geo, &mut r, &letters, 8);
            let subset = random_subset(&mut r, n);
            if subset.len() == n && !sys.components().parts.iter().all(|_| coxwork::classify::is_finite_type::<T>(&sys, &subset)) {
                continue;
            }
            if !coxwork::classify::is_finite_type::<T>(&sys, &subset) {
                continue;
            }
            let sub = sys.restrict(&subset);
            let sub_elems = enumerate_finite_group(&geometry(&sub), 10_000).unwrap();
            let coset: Vec<Elem> = sub_elems
                .iter()
                .map(|v| {
                    let word: Vec<usize> = v.word().iter().map(|&i| subset[i]).collect();
                    w.mul(&GroupElement::from_word(&geo, &word).unwrap().inverse())
                })
                .collect();
            let min_len = coset.iter().map(|u| u.length()).min().unwrap();
            let minimal: Vec<&Elem> = coset.iter().filter(|u| u.length() == min_len).collect();
            assert_eq!(minimal.len(), 1, "unique minimal coset representative");
            let (outer, inner) = w.parabolic_decompose(&subset);
            assert_eq!(&outer, minimal[0]);
            assert_eq!(outer.mul(&inner), w);
        }
    }
}

// ---- definiteness with rational Gram matrices -------------------------
trait RationalSign {
    fn is_positive_q(&self) -> bool;
    fn is_negative_q(&self) -> bool;
}

impl RationalSign for BigRational {
    fn is_positive_q(&self) -> bool {
        Signed::is_positive(self)
    }

    fn is_negative_q(&self) -> bool {
        Signed::is_negative(self)
    }
}


fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..n {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..n {
                let v = m[c][k].clone() * f.clone();
                m[r][k] -= v;
            }
        }
    }
    d
}

fn minor(g: &[Vec<BigRational>], idx: &[usize]) -> BigRational {
    det(idx.iter().map(|&i| idx.iter().map(|&j| g[i][j].clone()).collect()).collect())
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

/// Rank-`n` system with labels drawn from {2, 3, inf}, whose Gram matrix is
/// rational.
fn random_rational_system(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> (CoxeterSystem, Vec<Vec<BigRational>>) {
    let mut sys = CoxeterSystem::new(n);
    let mut g = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        g[i][i] = BigRational::one();
        for j in i + 1..n {
            let (label, entry) = match r.gen_range(0..6) {
                0 | 1 | 2 => (Label::Finite(2), BigRational::zero()),
                3 | 4 => (Label::Finite(3), q(-1, 2)),
                _ => (Label::Infinite, q(-1, 1)),
            };
            sys.set_label(i, j, label);
            g[i][j] = entry.clone();
            g[j][i] = entry;
        }
    }
    (sys, g)
}

#[test]
fn classification_agrees_with_rational_minors() {
    let mut r = rng(5);
    let mut kinds: HashSet<String> = HashSet::new();
    let mut tested = 0;
    while tested < 400 {
        let n = r.gen_range(1..=5);
        let (sys, g) = random_rational_system(&mut r, n);
        let all: Vec<usize> = (0..n).collect();
        if !sys.is_connected(&all) {
            continue;
        }
        let tag = classify_component::<T>(&sys, &all).unwrap();
        let pd = (1..=n).all(|k| minor(&g, &(0..k).collect::<Vec<_>>()).is_positive_q());
        let psd = subsets(n).all(|s| !minor(&g, &s).is_negative_q());
        let full = minor(&g, &all);
        let proper_pd = subsets(n).filter(|s| s.len() < n).all(|s| minor(&g, &s).is_positive_q());
        let expected = if pd {
            ComponentKind::Finite
        } else if psd && full.is_zero() {
            ComponentKind::Affine
        } else if !full.is_zero() && proper_pd {
            ComponentKind::CompactHyperbolic
        } else {
            ComponentKind::OtherInfinite
        };
        assert_eq!(tag.kind, expected, "{sys}");
        kinds.insert(format!("{:?}", tag.kind));
        tested += 1;
    }
    // compact hyperbolic types need a label >= 4, so they never appear here
    assert_eq!(kinds.len(), 3, "kinds sampled: {kinds:?}");
}

#[test]
fn x3_form_is_indefinite_and_nondegenerate() {
    use coxwork::classify::{is_positive_definite, is_positive_semidefinite};
    let geo = geometry(&catalog::hyperbolic("X3", &[4, 3, 3]).unwrap());
    assert!(!is_positive_definite(geo.gram()));
    assert!(!is_positive_semidefinite(geo.gram()));
    assert!(!geo.gram().det().is_zero());
}

// ---- exact scalars ----------------------------------------------------

#[test]
fn golden_ratio_minimal_polynomial() {
    let phi = cos(1, 5) * int(2);
    assert_eq!(phi.clone() * phi.clone(), phi.clone() + int(1));
    let psi = cos(2, 5) * int(2);
    assert_eq!(phi * psi, int(1));
}

#[test]
fn cosines_match_floating_point() {
    for n in 1..=24u32 {
        for k in 0..=2 * n {
            let c = cos(k, n);
            let f = (k as f64 * std::f64::consts::PI / n as f64).cos();
            assert!((c.to_f64() - f).abs() < 1e-12, "cos({k}pi/{n})");
        }
    }
}

#[test]
fn x3_pairing_is_below_minus_one() {
    let c = T::from_rational(&q(-1, 2)) - cos(1, 4);
    assert!(c.is_negative());
    assert!((c.clone() + int(1)).is_negative());
    assert_eq!(c.render(), "-1/2-cos(pi/4)");
}

#[test]
fn change_modulus_round_trip() {
    let x = cos(1, 4) * int(2);
    let lifted = x.change_modulus(20).unwrap();
    assert_eq!(lifted, cos(5, 20) * int(2));
    assert_eq!(lifted, x);
}
