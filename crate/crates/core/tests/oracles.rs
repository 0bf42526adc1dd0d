//! Library results against brute-force reimplementations that share no code
//! with the library beyond reading `leq`, `covers` and `len`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use fintop::cspace::{family_members, min_containing, CSpace, Side};
use fintop::fpp::count_endomaps;
use fintop::homotopy::{core_set, is_dbp_retract, is_ubp_retract};
use fintop::iso::are_isomorphic;
use fintop::random::random_poset;
use fintop::{catalog, ElemSet, FinitePoset};

type Rel = Vec<Vec<bool>>;

fn samples(max_n: usize, count: u64) -> Vec<FinitePoset> {
    let densities = [0.15, 0.3, 0.45, 0.6];
    (0..count)
        .map(|seed| {
            let n = 1 + (seed as usize * 7) % max_n;
            random_poset(n, densities[seed as usize % densities.len()], 1000 + seed, seed % 3 != 0).unwrap()
        })
        .collect()
}

fn relation(p: &FinitePoset) -> Rel {
    let n = p.len();
    (0..n).map(|x| (0..n).map(|y| p.leq(x, y)).collect()).collect()
}

/// Reachability along cover edges by depth-first search.
fn closure_of_covers(n: usize, covers: &[(usize, usize)]) -> Rel {
    let mut rel = vec![vec![false; n]; n];
    for start in 0..n {
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if rel[start][v] {
                continue;
            }
            rel[start][v] = true;
            stack.extend(covers.iter().filter(|&&(a, _)| a == v).map(|&(_, b)| b));
        }
    }
    rel
}

fn naive_covers(rel: &Rel) -> Vec<(usize, usize)> {
    let n = rel.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let lt = x != y && rel[x][y];
            if lt && !(0..n).any(|z| z != x && z != y && rel[x][z] && rel[z][y]) {
                out.push((x, y));
            }
        }
    }
    out
}

fn naive_components(rel: &Rel, s: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = BTreeSet::new();
    for &start in s {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in s {
                if (rel[v][w] || rel[w][v]) && seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort();
        out.insert(comp);
    }
    out
}

/// 𝒰(X) straight from the definition: every non-empty subset of the
/// maximal elements, its common lower set, then components.
fn naive_u_family(rel: &Rel) -> BTreeSet<Vec<usize>> {
    let n = rel.len();
    let mxl: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| y == x || !rel[x][y])).collect();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << mxl.len()) {
        let common: Vec<usize> = (0..n)
            .filter(|&y| (0..mxl.len()).all(|i| mask & (1 << i) == 0 || rel[y][mxl[i]]))
            .collect();
        out.extend(naive_components(rel, &common));
    }
    out
}

fn transpose(rel: &Rel) -> Rel {
    let n = rel.len();
    (0..n).map(|x| (0..n).map(|y| rel[y][x]).collect()).collect()
}

fn is_monotone(rel: &Rel, f: &[usize]) -> bool {
    let n = rel.len();
    (0..n).all(|x| (0..n).all(|y| !rel[x][y] || rel[f[x]][f[y]]))
}

/// (all maps, fixed-point-free maps) by trying all n^n functions.
fn naive_endomap_counts(rel: &Rel) -> (u64, u64) {
    let n = rel.len();
    let mut f = vec![0usize; n];
    let (mut all, mut free) = (0, 0);
    loop {
        if is_monotone(rel, &f) {
            all += 1;
            if f.iter().enumerate().all(|(x, &y)| x != y) {
                free += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return (all, free);
            }
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn naive_isomorphic(a: &Rel, b: &Rel) -> bool {
    let n = a.len();
    n == b.len() && permutations(n).iter().any(|p| (0..n).all(|x| (0..n).all(|y| a[x][y] == b[p[x]][p[y]])))
}

/// Down (or up) beat point inside the subspace given by a bitmask.
fn is_beat_in(rel: &Rel, mask: u32, x: usize, down: bool) -> bool {
    let n = rel.len();
    let inside = |y: usize| mask & (1 << y) != 0;
    let below = |a: usize, b: usize| if down { rel[a][b] } else { rel[b][a] };
    let hat: Vec<usize> = (0..n).filter(|&y| inside(y) && y != x && below(y, x)).collect();
    hat.iter().any(|&m| hat.iter().all(|&y| below(y, m)))
}

/// Subspaces reachable from X by removing down (or up) beat points one at a time.
fn reachable_by_removal(rel: &Rel, down: bool) -> HashSet<u32> {
    let n = rel.len();
    let full = (1u32 << n) - 1;
    let mut seen = HashSet::from([full]);
    let mut queue = VecDeque::from([full]);
    while let Some(mask) = queue.pop_front() {
        for x in 0..n {
            if mask & (1 << x) != 0 && is_beat_in(rel, mask, x, down) {
                let next = mask & !(1 << x);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

fn set_from_mask(n: usize, mask: u32) -> ElemSet {
    ElemSet::from_indices(n, (0..n).filter(|&x| mask & (1 << x) != 0))
}

#[test]
fn order_and_covers_match_closure_oracle() {
    for p in samples(12, 120) {
        let rel = relation(&p);
        assert_eq!(rel, closure_of_covers(p.len(), p.covers()));
        assert_eq!(p.covers(), naive_covers(&rel).as_slice());
    }
}

#[test]
fn components_match_bfs_oracle() {
    for (i, p) in samples(10, 80).into_iter().enumerate() {
        let rel = relation(&p);
        let n = p.len();
        let s: Vec<usize> = (0..n).filter(|&x| (x + i) % 3 != 0).collect();
        let got: BTreeSet<Vec<usize>> = p
            .connected_components(&ElemSet::from_indices(n, s.iter().copied()))
            .iter()
            .map(|c| c.to_vec())
            .collect();
        assert_eq!(got, naive_components(&rel, &s));
    }
}

#[test]
fn families_match_definition() {
    for p in samples(9, 150) {
        let rel = relation(&p);
        let u: BTreeSet<Vec<usize>> = family_members(&p, Side::U).iter().map(|s| s.to_vec()).collect();
        assert_eq!(u, naive_u_family(&rel));
        let f: BTreeSet<Vec<usize>> = family_members(&p, Side::F).iter().map(|s| s.to_vec()).collect();
        assert_eq!(f, naive_u_family(&transpose(&rel)));
    }
}

#[test]
fn c_space_order_matches_definition() {
    for p in samples(8, 80) {
        let c = CSpace::c_space(&Arc::new(p));
        for (i, a) in c.regions().iter().enumerate() {
            for (j, b) in c.regions().iter().enumerate() {
                let sa: BTreeSet<usize> = a.members.iter().collect();
                let sb: BTreeSet<usize> = b.members.iter().collect();
                let expected = match (a.side, b.side) {
                    (Side::U, Side::U) => sa.is_subset(&sb),
                    (Side::F, Side::F) => sb.is_subset(&sa),
                    (Side::F, Side::U) => !sa.is_disjoint(&sb),
                    (Side::U, Side::F) => i == j,
                };
                assert_eq!(c.order().leq(i, j), expected);
            }
        }
    }
}

#[test]
fn min_containing_is_the_minimum_superset() {
    for p in samples(7, 60) {
        let rel = relation(&p);
        let n = p.len();
        let family: Vec<Vec<usize>> = naive_u_family(&rel).into_iter().collect();
        for mask in 1u32..(1 << n) {
            let b: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
            if naive_components(&rel, &b).len() != 1 {
                continue;
            }
            let supers: Vec<&Vec<usize>> = family.iter().filter(|c| b.iter().all(|x| c.contains(x))).collect();
            let minimum = supers.iter().find(|c| supers.iter().all(|d| c.iter().all(|x| d.contains(x))));
            let got = min_containing(&p, &set_from_mask(n, mask), Side::U).unwrap();
            assert_eq!(got.map(|r| r.members.to_vec()), minimum.map(|c| (*c).clone()));
        }
    }
}

#[test]
fn endomap_counts_match_exhaustive_enumeration() {
    let x = Arc::new(catalog::ex_easy());
    let (all, free) = naive_endomap_counts(&relation(&x));
    assert!(free > 0);
    assert_eq!(count_endomaps(&x, false), all);
    assert_eq!(count_endomaps(&x, true), free);
    for p in samples(6, 60) {
        let (all, free) = naive_endomap_counts(&relation(&p));
        let p = Arc::new(p);
        assert_eq!(count_endomaps(&p, false), all);
        assert_eq!(count_endomaps(&p, true), free);
    }
}

#[test]
fn bp_retracts_match_stepwise_removal() {
    for p in samples(7, 60) {
        let rel = relation(&p);
        let n = p.len();
        let down = reachable_by_removal(&rel, true);
        let up = reachable_by_removal(&rel, false);
        let p = Arc::new(p);
        for mask in 1u32..(1 << n) {
            let a = set_from_mask(n, mask);
            assert_eq!(is_dbp_retract(&p, &a).unwrap().is_some(), down.contains(&mask), "dbp {mask:b}");
            assert_eq!(is_ubp_retract(&p, &a).unwrap().is_some(), up.contains(&mask), "ubp {mask:b}");
        }
    }
}

#[test]
fn core_is_reached_and_has_no_beat_points() {
    for p in samples(7, 60) {
        let rel = relation(&p);
        let n = p.len();
        let core = core_set(&p);
        let mask = core.iter().fold(0u32, |m, x| m | (1 << x));
        assert!((0..n).filter(|&x| mask & (1 << x) != 0).all(|x| !is_beat_in(&rel, mask, x, true)
            && !is_beat_in(&rel, mask, x, false)));
    }
}

#[test]
fn isomorphism_matches_permutation_search() {
    let pool = samples(6, 90);
    for a in &pool {
        for b in pool.iter().filter(|b| b.len() == a.len()).take(6) {
            assert_eq!(are_isomorphic(a, b), naive_isomorphic(&relation(a), &relation(b)));
        }
    }
}
