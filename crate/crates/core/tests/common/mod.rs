#![allow(dead_code)]

use std::sync::Arc;

use coxwork::classify::catalog;
use coxwork::words::GroupElement;
use coxwork::{CoxeterSystem, Geometry, TrigScalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Elem = GroupElement<TrigScalar>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn geometry(sys: &CoxeterSystem) -> Arc<Geometry> {
    Arc::new(Geometry::new(sys).expect("geometry"))
}

pub fn finite_catalog() -> Vec<(String, CoxeterSystem)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("A{n}"), catalog::finite("A", n).unwrap()));
    }
    for n in 2..=5 {
        out.push((format!("B{n}"), catalog::finite("B", n).unwrap()));
    }
    for n in 4..=5 {
        out.push((format!("D{n}"), catalog::finite("D", n).unwrap()));
    }
    out.push(("F4".into(), catalog::finite("F", 4).unwrap()));
    out.push(("H3".into(), catalog::finite("H", 3).unwrap()));
    out.push(("H4".into(), catalog::finite("H", 4).unwrap()));
    for m in 2..=8 {
        out.push((format!("I2({m})"), catalog::finite("I", m).unwrap()));
    }
    out
}

/// Finite, affine and compact hyperbolic catalog entries of rank at most
/// `max_rank`, plus a few reducible systems.
pub fn catalog_upto_rank(max_rank: usize) -> Vec<(String, CoxeterSystem)> {
    let mut out: Vec<(String, CoxeterSystem)> = finite_catalog();
    out.extend(catalog::all_affine(max_rank));
    out.extend(catalog::all_hyperbolic_smallest());
    let a1 = catalog::finite("A", 1).unwrap();
    let a2 = catalog::finite("A", 2).unwrap();
    let aff1 = catalog::affine("A", 1).unwrap();
    out.push(("A1xA1".into(), a1.disjoint_union(&a1)));
    out.push(("A2xA2".into(), a2.disjoint_union(&a2)));
    out.push(("A1xA1xA1xA1".into(), a1.disjoint_union(&a1).disjoint_union(&a1).disjoint_union(&a1)));
    out.push(("A~1xA1".into(), aff1.disjoint_union(&a1)));
    out.push(("A~1xA~1".into(), aff1.disjoint_union(&aff1)));
    out.retain(|(_, s)| s.rank() <= max_rank);
    out
}

pub fn random_word(rng: &mut ChaCha8Rng, letters: &[usize], max_len: usize) -> Vec<usize> {
    if letters.is_empty() {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

pub fn random_element(geo: &Arc<Geometry>, rng: &mut ChaCha8Rng, letters: &[usize], max_len: usize) -> Elem {
    GroupElement::from_word(geo, &random_word(rng, letters, max_len)).expect("letters in range")
}

/// A random subset of `0..n`, each element kept with probability 1/2.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}
