//! Seeded generators for randomized test suites.
//!
//! `random_poset(n, density, seed)` draws from a ChaCha8 stream seeded with
//! `seed`. For every pair `i < j` in lexicographic order one Bernoulli
//! trial with probability `density` decides whether the edge `i < j` is
//! added; the poset is the transitive closure of the sampled edges, with
//! labels `"0".."n-1"`. When `largest_component` is set the result is
//! restricted to its largest connected component (ties go to the component
//! with the smallest element) and relabeled `"0"..`.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::map::MonotoneMap;
use crate::poset::{numeric_labels, FinitePoset};
use crate::set::ElemSet;

pub fn random_poset(n: usize, density: f64, seed: u64, largest_component: bool) -> Result<FinitePoset> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!("density {density} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    let p = FinitePoset::from_index_covers(numeric_labels(n), &edges)?;
    if !largest_component {
        return Ok(p);
    }
    let comps = p.connected_components(&p.full_set());
    let best = comps
        .iter()
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c.first())))
        .expect("non-empty poset has a component");
    let sub = p.induced_subposet(best)?;
    sub.relabeled(numeric_labels(sub.len()))
}

/// A random monotone map `source -> target` with
/// `images[x] ∈ allowed[x]`, found by randomized backtracking. `None` when no
/// such map exists.
pub fn random_monotone_map_within<R: Rng + ?Sized>(
    source: &Arc<FinitePoset>,
    target: &Arc<FinitePoset>,
    allowed: &[ElemSet],
    rng: &mut R,
) -> Option<MonotoneMap> {
    let order = source.linear_extension();
    let mut images = vec![usize::MAX; source.len()];
    if assign(source, target, allowed, &order, 0, &mut images, rng) {
        Some(MonotoneMap::new_unchecked(source.clone(), target.clone(), images))
    } else {
        None
    }
}

/// A random monotone map with no restriction on images.
pub fn random_monotone_map<R: Rng + ?Sized>(
    source: &Arc<FinitePoset>,
    target: &Arc<FinitePoset>,
    rng: &mut R,
) -> MonotoneMap {
    let allowed = vec![target.full_set(); source.len()];
    random_monotone_map_within(source, target, &allowed, rng).expect("constant maps always exist")
}

/// A random monotone map `g` with `f <= g` pointwise.
pub fn random_map_above<R: Rng + ?Sized>(f: &MonotoneMap, rng: &mut R) -> MonotoneMap {
    let target = f.target();
    let allowed: Vec<ElemSet> = f.images().iter().map(|&y| target.up_set(y).clone()).collect();
    random_monotone_map_within(f.source(), target, &allowed, rng).expect("f itself qualifies")
}

/// A random fixed-point-free endomap, if the poset admits one.
pub fn random_fixed_point_free_map<R: Rng + ?Sized>(space: &Arc<FinitePoset>, rng: &mut R) -> Option<MonotoneMap> {
    let allowed: Vec<ElemSet> = (0..space.len()).map(|x| space.comparability_set(x).complement()).collect();
    random_monotone_map_within(space, space, &allowed, rng)
}

fn assign<R: Rng + ?Sized>(
    source: &FinitePoset,
    target: &FinitePoset,
    allowed: &[ElemSet],
    order: &[usize],
    depth: usize,
    images: &mut [usize],
    rng: &mut R,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut domain = allowed[x].clone();
    for &y in source.lower_covers(x) {
        domain.intersect_with(target.up_set(images[y]));
    }
    let mut options = domain.to_vec();
    options.shuffle(rng);
    for v in options {
        images[x] = v;
        if assign(source, target, allowed, order, depth + 1, images, rng) {
            return true;
        }
    }
    images[x] = usize::MAX;
    false
}
