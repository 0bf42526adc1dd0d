//! Order isomorphism by invariant partitioning followed by backtracking.

use std::collections::HashMap;

use crate::poset::FinitePoset;

/// Per-element invariant preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Invariant {
    level: usize,
    colevel: usize,
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn invariants(p: &FinitePoset) -> Vec<Invariant> {
    let levels = p.levels();
    let colevels = p.opposite().levels();
    (0..p.len())
        .map(|x| Invariant {
            level: levels[x],
            colevel: colevels[x],
            down: p.down_set(x).len(),
            up: p.up_set(x).len(),
            lower_covers: p.lower_covers(x).len(),
            upper_covers: p.upper_covers(x).len(),
        })
        .collect()
}

/// Returns `phi` with `x <= y` iff `phi[x] <= phi[y]`, if one exists.
///
/// The search is deterministic for fixed element orderings of both inputs.
pub fn find_isomorphism(x: &FinitePoset, y: &FinitePoset) -> Option<Vec<usize>> {
    let n = x.len();
    if n != y.len() || x.covers().len() != y.covers().len() {
        return None;
    }
    let inv_x = invariants(x);
    let inv_y = invariants(y);
    let mut classes: HashMap<Invariant, Vec<usize>> = HashMap::new();
    for (b, inv) in inv_y.iter().enumerate() {
        classes.entry(*inv).or_default().push(b);
    }
    let mut counts: HashMap<Invariant, usize> = HashMap::new();
    for inv in &inv_x {
        *counts.entry(*inv).or_default() += 1;
    }
    for (inv, c) in &counts {
        if classes.get(inv).map_or(0, Vec::len) != *c {
            return None;
        }
    }

    let order = search_order(x, &inv_x, &counts);
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let candidates: Vec<&[usize]> = order.iter().map(|&a| classes[&inv_x[a]].as_slice()).collect();
    if extend(x, y, &order, &candidates, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

pub fn are_isomorphic(x: &FinitePoset, y: &FinitePoset) -> bool {
    find_isomorphism(x, y).is_some()
}

/// Rarest invariant first, then greedily the element most entangled with
/// what is already placed.
fn search_order(x: &FinitePoset, inv: &[Invariant], counts: &HashMap<Invariant, usize>) -> Vec<usize> {
    let n = x.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&a| !placed[a])
            .min_by_key(|&a| (std::cmp::Reverse(links[a]), counts[&inv[a]], a))
            .expect("unplaced element exists");
        placed[next] = true;
        order.push(next);
        for b in x.comparability_set(next).iter() {
            links[b] += 1;
        }
    }
    order
}

fn extend(
    x: &FinitePoset,
    y: &FinitePoset,
    order: &[usize],
    candidates: &[&[usize]],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let a = order[depth];
    for &b in candidates[depth] {
        if used[b] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&c| {
            let d = phi[c];
            x.leq(a, c) == y.leq(b, d) && x.leq(c, a) == y.leq(d, b)
        });
        if !consistent {
            continue;
        }
        phi[a] = b;
        used[b] = true;
        if extend(x, y, order, candidates, depth + 1, phi, used) {
            return true;
        }
        used[b] = false;
        phi[a] = usize::MAX;
    }
    false
}

/// Checks that `phi` is an order isomorphism from `x` onto `y`.
pub fn is_isomorphism(x: &FinitePoset, y: &FinitePoset, phi: &[usize]) -> bool {
    let n = x.len();
    if y.len() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &b in phi {
        if b >= n || seen[b] {
            return false;
        }
        seen[b] = true;
    }
    (0..n).all(|a| (0..n).all(|c| x.leq(a, c) == y.leq(phi[a], phi[c])))
}
