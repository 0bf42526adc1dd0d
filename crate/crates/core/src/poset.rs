//! Finite posets, read as finite T0-spaces.
//!
//! The order is stored densely: row `x` of `down` is the minimal open set
//! `U_x = {y : y <= x}` and row `x` of `up` is the closure `F_x = {y : y >= x}`.
//! The Hasse diagram is always re-derived from the order, so redundant cover
//! edges passed to a constructor are dropped.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::ElemSet;

#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    down: Vec<ElemSet>,
    up: Vec<ElemSet>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from element labels and cover pairs `(x, y)` meaning `x < y`.
    ///
    /// The order is the reflexive-transitive closure of the pairs. Fails on
    /// duplicate labels, unknown labels and cycles.
    pub fn new<L, C>(labels: &[L], covers: &[(C, C)]) -> Result<Self>
    where
        L: AsRef<str>,
        C: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let a = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let b = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            pairs.push((a, b));
        }
        Self::from_index_covers(labels, &pairs)
    }

    /// Same as [`FinitePoset::new`] with covers given as index pairs.
    pub fn from_index_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut down: Vec<ElemSet> = (0..n).map(|x| ElemSet::singleton(n, x)).collect();
        for &(a, b) in covers {
            if a >= n {
                return Err(Error::ImageOutOfRange(a));
            }
            if b >= n {
                return Err(Error::ImageOutOfRange(b));
            }
            down[b].insert(a);
        }
        Self::close(labels, down)
    }

    /// Builds a poset from an arbitrary relation, taking its reflexive-transitive
    /// closure; `leq(x, y)` declares `x <= y`.
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let down = (0..n)
            .map(|y| ElemSet::from_indices(n, (0..n).filter(|&x| x == y || leq(x, y))))
            .collect();
        Self::close(labels, down)
    }

    /// Builds the poset whose minimal open sets are the given rows. The rows
    /// are closed transitively, so they only need to generate the order.
    pub fn from_down_sets(labels: Vec<String>, down: Vec<ElemSet>) -> Result<Self> {
        let n = labels.len();
        if down.len() != n {
            return Err(Error::MapArity { expected: n, found: down.len() });
        }
        let mut rows = Vec::with_capacity(n);
        for (x, mut row) in down.into_iter().enumerate() {
            if row.universe() != n {
                return Err(Error::UniverseMismatch { expected: n, found: row.universe() });
            }
            row.insert(x);
            rows.push(row);
        }
        Self::close(labels, rows)
    }

    fn close(labels: Vec<String>, mut down: Vec<ElemSet>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let index = build_index(&labels)?;
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = down[k].clone();
            for row in down.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    return Err(Error::Cycle(labels[y].clone(), labels[x].clone()));
                }
            }
        }
        let mut up = vec![ElemSet::empty(n); n];
        for (x, row) in down.iter().enumerate() {
            for y in row.iter() {
                up[y].insert(x);
            }
        }
        let mut covers = Vec::new();
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for y in 0..n {
            let mut hat = down[y].clone();
            hat.remove(y);
            for x in hat.iter() {
                // x is covered by y iff nothing of U^_y lies strictly above x
                if up[x].intersection(&hat).len() == 1 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        for &(x, y) in &covers {
            upper_covers[x].push(y);
            lower_covers[y].push(x);
        }
        Ok(FinitePoset { labels, index, down, up, covers, lower_covers, upper_covers })
    }

    /// The `n`-element chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_index_covers(numeric_labels(n), &covers)
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_index_covers(numeric_labels(n), &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Looks up a set of labels.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn set_labels(&self, s: &ElemSet) -> Vec<&str> {
        s.iter().map(|x| self.label(x)).collect()
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// Fails unless `s` is a subset of this poset's elements.
    pub fn check_set(&self, s: &ElemSet) -> Result<()> {
        if s.universe() != self.len() {
            return Err(Error::UniverseMismatch { expected: self.len(), found: s.universe() });
        }
        Ok(())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `U_x`, the minimal open set of `x`.
    pub fn down_set(&self, x: usize) -> &ElemSet {
        &self.down[x]
    }

    /// `F_x`, the closure of `x`.
    pub fn up_set(&self, x: usize) -> &ElemSet {
        &self.up[x]
    }

    /// `U_x` or, when `punctured`, `U_x - {x}`.
    pub fn down_set_of(&self, x: usize, punctured: bool) -> ElemSet {
        let mut s = self.down[x].clone();
        if punctured {
            s.remove(x);
        }
        s
    }

    /// `F_x` or, when `punctured`, `F_x - {x}`.
    pub fn up_set_of(&self, x: usize, punctured: bool) -> ElemSet {
        let mut s = self.up[x].clone();
        if punctured {
            s.remove(x);
        }
        s
    }

    pub fn comparability_set(&self, x: usize) -> ElemSet {
        self.down[x].union(&self.up[x])
    }

    /// Hasse diagram edges `(x, y)` with `x` covered by `y`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn maximal(&self) -> ElemSet {
        ElemSet::from_indices(self.len(), (0..self.len()).filter(|&x| self.up[x].len() == 1))
    }

    pub fn minimal(&self) -> ElemSet {
        ElemSet::from_indices(self.len(), (0..self.len()).filter(|&x| self.down[x].len() == 1))
    }

    /// `(mxl, mnl)`.
    pub fn extremes(&self) -> (ElemSet, ElemSet) {
        (self.maximal(), self.minimal())
    }

    /// The maximum of `s`, if `s` has one.
    pub fn max_of(&self, s: &ElemSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(&self.down[m]))
    }

    /// The minimum of `s`, if `s` has one.
    pub fn min_of(&self, s: &ElemSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(&self.up[m]))
    }

    pub fn maximum(&self) -> Option<usize> {
        self.max_of(&self.full_set())
    }

    pub fn minimum(&self) -> Option<usize> {
        self.min_of(&self.full_set())
    }

    pub fn down_closure(&self, s: &ElemSet) -> ElemSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn up_closure(&self, s: &ElemSet) -> ElemSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            out.union_with(&self.up[x]);
        }
        out
    }

    /// Open subsets are exactly the down-closed ones.
    pub fn is_open(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    /// Closed subsets are exactly the up-closed ones.
    pub fn is_closed(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Partition of `s` into components of the comparability graph restricted
    /// to `s`, ordered by smallest element.
    pub fn connected_components(&self, s: &ElemSet) -> Vec<ElemSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut comp = ElemSet::singleton(self.len(), seed);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.empty_set();
                for x in frontier.iter() {
                    next.union_with(&self.comparability_set(x));
                }
                next.intersect_with(s);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected_subset(&self, s: &ElemSet) -> bool {
        !s.is_empty() && self.connected_components(s).len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&self.full_set())
    }

    /// Same elements, reversed order.
    pub fn opposite(&self) -> FinitePoset {
        let swapped: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        FinitePoset::from_index_covers(self.labels.clone(), &swapped)
            .expect("reversing a partial order gives a partial order")
    }

    /// The subspace on `s`. Element `i` of the result is the `i`-th smallest
    /// index of `s`; covers are recomputed inside the subspace.
    pub fn induced_subposet(&self, s: &ElemSet) -> Result<FinitePoset> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let members = s.to_vec();
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        FinitePoset::from_relation(labels, |i, j| self.leq(members[i], members[j]))
    }

    /// Copy of the poset with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<FinitePoset> {
        if labels.len() != self.len() {
            return Err(Error::MapArity { expected: self.len(), found: labels.len() });
        }
        let index = build_index(&labels)?;
        Ok(FinitePoset { labels, index, ..self.clone() })
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have level 0).
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0; self.len()];
        for x in self.linear_extension() {
            level[x] = self.lower_covers[x].iter().map(|&y| level[y] + 1).max().unwrap_or(0);
        }
        level
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    pub fn height(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("FinitePoset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// Labels `"0", "1", ..`.
pub fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}
