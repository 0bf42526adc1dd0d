//! Order-preserving (continuous) maps between finite posets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::set::ElemSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    images: Vec<usize>,
}

impl MonotoneMap {
    /// Checks totality and monotonicity. Monotonicity along covers suffices.
    pub fn new(source: Arc<FinitePoset>, target: Arc<FinitePoset>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::MapArity { expected: source.len(), found: images.len() });
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.len()) {
            return Err(Error::ImageOutOfRange(bad));
        }
        for &(x, y) in source.covers() {
            if !target.leq(images[x], images[y]) {
                return Err(Error::NotMonotone(source.label(x).into(), source.label(y).into()));
            }
        }
        Ok(MonotoneMap { source, target, images })
    }

    /// Skips the monotonicity check; used by searches that only generate
    /// monotone assignments.
    pub(crate) fn new_unchecked(source: Arc<FinitePoset>, target: Arc<FinitePoset>, images: Vec<usize>) -> Self {
        debug_assert_eq!(images.len(), source.len());
        MonotoneMap { source, target, images }
    }

    pub fn identity(space: Arc<FinitePoset>) -> Self {
        let images = (0..space.len()).collect();
        MonotoneMap { source: space.clone(), target: space, images }
    }

    pub fn constant(source: Arc<FinitePoset>, target: Arc<FinitePoset>, value: usize) -> Result<Self> {
        let images = vec![value; source.len()];
        Self::new(source, target, images)
    }

    /// Maps labels to labels.
    pub fn from_labels<S: AsRef<str>>(
        source: Arc<FinitePoset>,
        target: Arc<FinitePoset>,
        table: &[(S, S)],
    ) -> Result<Self> {
        let mut images = vec![None; source.len()];
        for (a, b) in table {
            images[source.index_of(a.as_ref())?] = Some(target.index_of(b.as_ref())?);
        }
        let found = images.iter().filter(|i| i.is_some()).count();
        let images: Option<Vec<usize>> = images.into_iter().collect();
        let images = images.ok_or(Error::MapArity { expected: source.len(), found })?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<FinitePoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinitePoset> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn image_of(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.target.len(), s.iter().map(|x| self.images[x]))
    }

    pub fn is_endomap(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) || self.source == self.target
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonotoneMap) -> Result<MonotoneMap> {
        if !(Arc::ptr_eq(&inner.target, &self.source) || *inner.target == *self.source) {
            return Err(Error::NotComposable);
        }
        let images = inner.images.iter().map(|&y| self.images[y]).collect();
        Ok(MonotoneMap { source: inner.source.clone(), target: self.target.clone(), images })
    }

    /// Fixed points of an endomap.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len()).filter(|&x| self.images[x] == x).collect()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(x, &y)| x == y)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = ElemSet::empty(self.target.len());
        for &y in &self.images {
            if seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// Pointwise `self <= other`.
    pub fn pointwise_leq(&self, other: &MonotoneMap) -> bool {
        self.images.len() == other.images.len()
            && self.images.iter().zip(&other.images).all(|(&a, &b)| self.target.leq(a, b))
    }

    /// True if the map is an order isomorphism (bijective, preserves and reflects order).
    pub fn is_isomorphism(&self) -> bool {
        if !self.is_bijective() {
            return false;
        }
        let n = self.source.len();
        (0..n).all(|x| {
            (0..n).all(|y| self.source.leq(x, y) == self.target.leq(self.images[x], self.images[y]))
        })
    }

    /// Inverse of a bijection, checked to be monotone.
    pub fn inverse(&self) -> Option<MonotoneMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        MonotoneMap::new(self.target.clone(), self.source.clone(), inv).ok()
    }
}
