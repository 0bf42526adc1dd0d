//! Beat points, cores and bp-retracts.
//!
//! `x` is a down beat point when `U_x - {x}` has a maximum and an up beat
//! point when `F_x - {x}` has a minimum. Removing a beat point is a strong
//! deformation retraction, so the core (what remains once no beat point is
//! left) determines the homotopy type. `homotopy_equivalent` relies on the
//! classical fact that the core is unique up to isomorphism.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::iso::find_isomorphism;
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BeatKind {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BeatPoint {
    pub element: usize,
    pub kind: BeatKind,
    /// `max(U_x - {x})` for a down beat point, `min(F_x - {x})` for an up one.
    pub witness: usize,
}

/// Beat point test of `x` inside the subspace `within ⊆ X`.
fn beat_in(x_space: &FinitePoset, within: &ElemSet, x: usize, kind: BeatKind) -> Option<usize> {
    let mut hat = match kind {
        BeatKind::Down => x_space.down_set(x).intersection(within),
        BeatKind::Up => x_space.up_set(x).intersection(within),
    };
    hat.remove(x);
    if hat.is_empty() {
        return None;
    }
    match kind {
        BeatKind::Down => x_space.max_of(&hat),
        BeatKind::Up => x_space.min_of(&hat),
    }
}

/// All beat points, ordered by element and down before up.
pub fn find_beat_points(x: &FinitePoset) -> Vec<BeatPoint> {
    beat_points_within(x, &x.full_set())
}

/// Beat points of the subspace `within`, in ambient indices.
pub fn beat_points_within(x: &FinitePoset, within: &ElemSet) -> Vec<BeatPoint> {
    let mut out = Vec::new();
    for e in within.iter() {
        for kind in [BeatKind::Down, BeatKind::Up] {
            if let Some(witness) = beat_in(x, within, e, kind) {
                out.push(BeatPoint { element: e, kind, witness });
            }
        }
    }
    out
}

/// Removes beat points one at a time (lowest index first, a down beat point
/// before an up beat point at the same index) until none is left, and
/// returns the surviving elements.
pub fn core_set(x: &FinitePoset) -> ElemSet {
    let mut keep = x.full_set();
    'outer: loop {
        for e in keep.to_vec() {
            for kind in [BeatKind::Down, BeatKind::Up] {
                if beat_in(x, &keep, e, kind).is_some() {
                    keep.remove(e);
                    continue 'outer;
                }
            }
        }
        return keep;
    }
}

/// The core as a subspace (elements keep their labels).
pub fn core(x: &FinitePoset) -> FinitePoset {
    x.induced_subposet(&core_set(x)).expect("a core is never empty")
}

pub fn is_contractible(x: &FinitePoset) -> bool {
    core_set(x).len() == 1
}

pub fn homotopy_equivalent(x: &FinitePoset, y: &FinitePoset) -> bool {
    find_isomorphism(&core(x), &core(y)).is_some()
}

/// A bp-retraction `r: X -> A` together with the inclusion `i: A -> X`.
#[derive(Clone, Debug)]
pub struct Retraction {
    /// Ambient indices of `A`, in increasing order; element `k` of the
    /// subspace is `members[k]`.
    pub members: Vec<usize>,
    pub subspace: Arc<FinitePoset>,
    pub retraction: MonotoneMap,
    pub inclusion: MonotoneMap,
}

impl Retraction {
    /// `i ∘ r : X -> X`, i.e. the idempotent with image `A`.
    pub fn idempotent(&self) -> MonotoneMap {
        self.inclusion.compose(&self.retraction).expect("r and i compose")
    }

    pub fn member_set(&self) -> ElemSet {
        ElemSet::from_indices(self.inclusion.target().len(), self.members.iter().copied())
    }
}

/// `A` is a dbp-retract iff `U_x ∩ A` has a maximum for all `x`; the
/// retraction is `r(x) = max(U_x ∩ A)`.
pub fn is_dbp_retract(x: &Arc<FinitePoset>, a: &ElemSet) -> Result<Option<Retraction>> {
    bp_retract(x, a, BeatKind::Down)
}

/// Dual of [`is_dbp_retract`]: `r(x) = min(F_x ∩ A)`.
pub fn is_ubp_retract(x: &Arc<FinitePoset>, a: &ElemSet) -> Result<Option<Retraction>> {
    bp_retract(x, a, BeatKind::Up)
}

fn bp_retract(x: &Arc<FinitePoset>, a: &ElemSet, kind: BeatKind) -> Result<Option<Retraction>> {
    x.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let members = a.to_vec();
    let mut position = vec![usize::MAX; x.len()];
    for (k, &m) in members.iter().enumerate() {
        position[m] = k;
    }
    let mut images = Vec::with_capacity(x.len());
    for e in 0..x.len() {
        let (cone, pick) = match kind {
            BeatKind::Down => {
                let cone = x.down_set(e).intersection(a);
                let pick = x.max_of(&cone);
                (cone, pick)
            }
            BeatKind::Up => {
                let cone = x.up_set(e).intersection(a);
                let pick = x.min_of(&cone);
                (cone, pick)
            }
        };
        match pick {
            Some(m) if !cone.is_empty() => images.push(position[m]),
            _ => return Ok(None),
        }
    }
    let subspace = Arc::new(x.induced_subposet(a)?);
    let retraction = MonotoneMap::new(x.clone(), subspace.clone(), images)
        .expect("max(U_x ∩ A) is monotone in x");
    let inclusion = MonotoneMap::new(subspace.clone(), x.clone(), members.clone())
        .expect("inclusions are monotone");
    Ok(Some(Retraction { members, subspace, retraction, inclusion }))
}
