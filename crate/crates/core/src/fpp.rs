//! The fixed point property.
//!
//! Ground truth is an exhaustive backtracking search for fixed-point-free
//! monotone self-maps. A map with `f(x)` comparable to `x` for some `x` has a
//! fixed point, so a fixed-point-free search may restrict `f(x)` to the
//! points incomparable to `x`; images are also forward-checked so that every
//! unassigned point above `x` keeps a candidate above `f(x)`.

use std::sync::Arc;

use crate::cspace::{c_f, c_u, min_containing, CSpace, Family, Region, Side};
use crate::error::{Error, Result};
use crate::homotopy::is_contractible;
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

struct Frame {
    candidates: Vec<usize>,
    next: usize,
    domains: Vec<ElemSet>,
}

/// All monotone self-maps of a poset, in a fixed order: points are assigned
/// along a linear extension and candidate images in increasing index.
pub struct Endomaps {
    space: Arc<FinitePoset>,
    order: Vec<usize>,
    stack: Vec<Frame>,
    images: Vec<usize>,
    nodes: u64,
}

impl Endomaps {
    pub fn new(space: &Arc<FinitePoset>, fixed_point_free_only: bool) -> Self {
        let n = space.len();
        let allowed: Vec<ElemSet> = if fixed_point_free_only {
            (0..n).map(|x| space.comparability_set(x).complement()).collect()
        } else {
            vec![space.full_set(); n]
        };
        Self::within(space, allowed)
    }

    /// Maps with `f(x) ∈ allowed[x]`.
    pub fn within(space: &Arc<FinitePoset>, allowed: Vec<ElemSet>) -> Self {
        let n = space.len();
        let mut order = space.linear_extension();
        order.sort_by_key(|&x| (space.down_set(x).len(), x));
        let mut stack = Vec::new();
        if allowed.iter().all(|d| !d.is_empty()) {
            stack.push(Frame { candidates: allowed[order[0]].to_vec(), next: 0, domains: allowed });
        }
        Endomaps { space: space.clone(), order, stack, images: vec![usize::MAX; n], nodes: 0 }
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}

impl Iterator for Endomaps {
    type Item = MonotoneMap;

    fn next(&mut self) -> Option<MonotoneMap> {
        let n = self.order.len();
        loop {
            let depth = self.stack.len().checked_sub(1)?;
            let frame = self.stack.last_mut().expect("non-empty stack");
            if frame.next == frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let v = frame.candidates[frame.next];
            frame.next += 1;
            self.nodes += 1;
            let x = self.order[depth];
            let above_v = self.space.up_set(v);
            let mut domains = frame.domains.clone();
            let mut dead = false;
            for y in self.space.up_set(x).iter().filter(|&y| y != x) {
                domains[y].intersect_with(above_v);
                if domains[y].is_empty() {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.images[x] = v;
            if depth + 1 == n {
                return Some(MonotoneMap::new_unchecked(self.space.clone(), self.space.clone(), self.images.clone()));
            }
            let candidates = domains[self.order[depth + 1]].to_vec();
            self.stack.push(Frame { candidates, next: 0, domains });
        }
    }
}

pub fn enumerate_endomaps(space: &Arc<FinitePoset>, fixed_point_free_only: bool) -> Endomaps {
    Endomaps::new(space, fixed_point_free_only)
}

pub fn count_endomaps(space: &Arc<FinitePoset>, fixed_point_free_only: bool) -> u64 {
    enumerate_endomaps(space, fixed_point_free_only).count() as u64
}

/// The first fixed-point-free self-map in search order, with the node count.
pub fn find_fixed_point_free(space: &Arc<FinitePoset>) -> (Option<MonotoneMap>, u64) {
    let mut search = Endomaps::new(space, true);
    let found = search.next();
    (found, search.nodes())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    HasFpp,
    LacksFpp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// The full strategy cascade.
    #[default]
    Auto,
    /// Exhaustive search only.
    Brute,
    /// Cheap sufficient conditions and the 𝒞-criterion; fails with
    /// [`Error::Inconclusive`] when none applies.
    Criterion,
}

#[derive(Clone, Debug)]
pub enum Evidence {
    MaxOrMin,
    Contractible,
    CCriterion {
        family: Family,
        space: Box<FppCertificate>,
        regions: Vec<(Region, FppCertificate)>,
    },
    BruteForceExhausted { nodes: u64 },
    Witness(MonotoneMap),
}

#[derive(Clone, Debug)]
pub struct FppCertificate {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl FppCertificate {
    fn has(evidence: Evidence) -> Self {
        FppCertificate { verdict: Verdict::HasFpp, evidence }
    }

    fn lacks(witness: MonotoneMap) -> Self {
        FppCertificate { verdict: Verdict::LacksFpp, evidence: Evidence::Witness(witness) }
    }

    pub fn has_fpp(&self) -> bool {
        self.verdict == Verdict::HasFpp
    }

    pub fn witness(&self) -> Option<&MonotoneMap> {
        match &self.evidence {
            Evidence::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// A fixed-point-free map of a disconnected space: the first component goes
/// to a point of the second, everything else to a point of the first.
fn disconnected_witness(x: &Arc<FinitePoset>) -> Option<MonotoneMap> {
    let comps = x.connected_components(&x.full_set());
    if comps.len() < 2 {
        return None;
    }
    let p0 = comps[0].first().expect("components are non-empty");
    let p1 = comps[1].first().expect("components are non-empty");
    let images = (0..x.len()).map(|e| if comps[0].contains(e) { p1 } else { p0 }).collect();
    Some(MonotoneMap::new(x.clone(), x.clone(), images).expect("locally constant maps are monotone"))
}

fn brute(x: &Arc<FinitePoset>) -> FppCertificate {
    match find_fixed_point_free(x) {
        (Some(w), _) => FppCertificate::lacks(w),
        (None, nodes) => FppCertificate::has(Evidence::BruteForceExhausted { nodes }),
    }
}

/// Steps that need no recursion: connectivity, extremes, contractibility.
fn quick(x: &Arc<FinitePoset>) -> Option<FppCertificate> {
    if let Some(w) = disconnected_witness(x) {
        return Some(FppCertificate::lacks(w));
    }
    if x.maximum().is_some() || x.minimum().is_some() {
        return Some(FppCertificate::has(Evidence::MaxOrMin));
    }
    if is_contractible(x) {
        return Some(FppCertificate::has(Evidence::Contractible));
    }
    None
}

fn basic(x: &Arc<FinitePoset>) -> FppCertificate {
    quick(x).unwrap_or_else(|| brute(x))
}

/// The 𝒞-criterion: X has the FPP if the chosen family has it and so does
/// each of its regions. Sub-checks never nest the criterion.
fn criterion(x: &Arc<FinitePoset>) -> Option<FppCertificate> {
    'family: for family in [Family::U, Family::F, Family::C] {
        let cs = CSpace::build(x, family);
        if family == Family::C && cs.has_overlap() {
            continue;
        }
        let space = basic(cs.order());
        if !space.has_fpp() {
            continue;
        }
        let mut regions = Vec::with_capacity(cs.len());
        for r in cs.regions() {
            let sub = Arc::new(x.induced_subposet(&r.members).expect("regions are non-empty"));
            let cert = basic(&sub);
            if !cert.has_fpp() {
                continue 'family;
            }
            regions.push((r.clone(), cert));
        }
        return Some(FppCertificate::has(Evidence::CCriterion { family, space: Box::new(space), regions }));
    }
    None
}

pub fn has_fpp(x: &Arc<FinitePoset>, method: Method) -> Result<FppCertificate> {
    match method {
        Method::Brute => Ok(brute(x)),
        Method::Auto => Ok(quick(x).or_else(|| criterion(x)).unwrap_or_else(|| brute(x))),
        Method::Criterion => quick(x).or_else(|| criterion(x)).ok_or(Error::Inconclusive),
    }
}

/// `Some(n)` if `X` is a `2n`-crown.
pub fn crown_order(x: &FinitePoset) -> Option<usize> {
    let (mxl, mnl) = x.extremes();
    if mxl.intersects(&mnl) || mxl.len() + mnl.len() != x.len() || mxl.len() != mnl.len() || mxl.len() < 2 {
        return None;
    }
    // a connected two-level poset whose comparability graph is 2-regular is one cycle
    if (0..x.len()).all(|e| x.comparability_set(e).len() == 3) && x.is_connected() {
        Some(mxl.len())
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrownReport {
    pub order: usize,
    pub bijective: u64,
    pub non_bijective: u64,
    /// Non-bijective self-maps without a fixed point.
    pub violations: u64,
}

/// Exhaustively checks that every non-bijective self-map of a crown has a fixed point.
pub fn check_crown_lemma(x: &Arc<FinitePoset>) -> Result<CrownReport> {
    let order = crown_order(x).ok_or(Error::NotACrown)?;
    let mut report = CrownReport { order, bijective: 0, non_bijective: 0, violations: 0 };
    for f in enumerate_endomaps(x, false) {
        if f.is_bijective() {
            report.bijective += 1;
        } else {
            report.non_bijective += 1;
            if !f.has_fixed_point() {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct LiftingReport {
    pub fixed_points: Vec<usize>,
    pub u_fixed: Vec<Region>,
    pub f_fixed: Vec<Region>,
    /// A fixed point of `f` yields fixed regions on both sides, and for each
    /// fixed `x` both `C_U(x)` and `C_F(x)` lie inside their images.
    pub holds: bool,
}

pub fn check_fixed_point_lifting(f: &MonotoneMap) -> Result<LiftingReport> {
    if !f.is_endomap() {
        return Err(Error::NotComposable);
    }
    let x = f.source();
    let fixed_regions = |family: Family| -> Result<Vec<Region>> {
        let cs = CSpace::build(x, family);
        let side = if family == Family::U { Side::U } else { Side::F };
        let mut out = Vec::new();
        for r in cs.regions() {
            let img = min_containing(x, &f.image_of(&r.members), side)?.expect("images of regions are bounded");
            if img == *r {
                out.push(r.clone());
            }
        }
        Ok(out)
    };
    let fixed_points = f.fixed_points();
    let u_fixed = fixed_regions(Family::U)?;
    let f_fixed = fixed_regions(Family::F)?;
    let grows = |e: usize, side: Side| -> Result<bool> {
        let start = if side == Side::U { c_u(x, e) } else { c_f(x, e) };
        let img = min_containing(x, &f.image_of(&start), side)?.expect("images of regions are bounded");
        Ok(start.is_subset(&img.members))
    };
    let mut holds = fixed_points.is_empty() || (!u_fixed.is_empty() && !f_fixed.is_empty());
    for &e in &fixed_points {
        holds &= grows(e, Side::U)? && grows(e, Side::F)?;
    }
    Ok(LiftingReport { fixed_points, u_fixed, f_fixed, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub fixed_point_free_maps: u64,
    /// Fixed-point-free maps with `f(block) ≠ block`.
    pub violations: u64,
}

/// Exhaustively checks that every fixed-point-free self-map maps `block` onto itself.
pub fn check_block_preserved(x: &Arc<FinitePoset>, block: &ElemSet) -> Result<BlockReport> {
    x.check_set(block)?;
    let mut report = BlockReport { fixed_point_free_maps: 0, violations: 0 };
    for f in enumerate_endomaps(x, true) {
        report.fixed_point_free_maps += 1;
        if f.image_of(block) != *block {
            report.violations += 1;
        }
    }
    Ok(report)
}
