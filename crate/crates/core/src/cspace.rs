//! The families 𝒰(X), ℱ(X) and the space 𝒞(X), with their induced maps.
//!
//! For a non-empty `A ⊆ mxl[X]` let `U_A` be the intersection of the minimal
//! open sets `U_a`, `a ∈ A`. The regions of 𝒰(X) are the connected
//! components of the non-empty `U_A`; ℱ(X) is the dual family built from
//! closures of minimal elements. 𝒞(X) is the disjoint union of both, ordered
//! by inclusion on 𝒰, reverse inclusion on ℱ, and `F ≤ U` whenever an
//! ℱ-region meets a 𝒰-region.
//!
//! Regions are tagged with their side, so a set that belongs to both
//! families appears twice in 𝒞(X); [`CSpace::has_overlap`] reports it.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homotopy::{is_ubp_retract, Retraction};
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    U,
    F,
}

impl Side {
    pub fn tag(self) -> &'static str {
        match self {
            Side::U => "U",
            Side::F => "F",
        }
    }
}

/// Which of 𝒰(X), ℱ(X), 𝒞(X) a [`CSpace`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    U,
    F,
    C,
}

/// A connected subset of the ambient space tagged by the family it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region {
    pub side: Side,
    pub members: ElemSet,
}

impl Region {
    pub fn new(side: Side, members: ElemSet) -> Self {
        Region { side, members }
    }

    /// The order of 𝒞(X) on tagged regions.
    pub fn leq(&self, other: &Region) -> bool {
        match (self.side, other.side) {
            (Side::U, Side::U) => self.members.is_subset(&other.members),
            (Side::F, Side::F) => other.members.is_subset(&self.members),
            (Side::F, Side::U) => self.members.intersects(&other.members),
            (Side::U, Side::F) => false,
        }
    }
}

/// `U_A`, the intersection of the minimal open sets of `A`.
pub fn intersect_minimal_opens(x: &FinitePoset, a: &ElemSet) -> Result<ElemSet> {
    intersect_rows(x, a, Side::U)
}

/// `F_A`, the intersection of the closures of `A`.
pub fn intersect_closures(x: &FinitePoset, a: &ElemSet) -> Result<ElemSet> {
    intersect_rows(x, a, Side::F)
}

fn intersect_rows(x: &FinitePoset, a: &ElemSet, side: Side) -> Result<ElemSet> {
    x.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut out = x.full_set();
    for e in a.iter() {
        out.intersect_with(row(x, e, side));
    }
    Ok(out)
}

fn row(x: &FinitePoset, e: usize, side: Side) -> &ElemSet {
    match side {
        Side::U => x.down_set(e),
        Side::F => x.up_set(e),
    }
}

fn generators(x: &FinitePoset, side: Side) -> ElemSet {
    match side {
        Side::U => x.maximal(),
        Side::F => x.minimal(),
    }
}

/// `B♯ = {a ∈ mxl[X] : B ⊆ U_a}`.
pub fn sharp(x: &FinitePoset, b: &ElemSet) -> Result<ElemSet> {
    sharp_flat(x, b, Side::U)
}

/// `B♭ = {a ∈ mnl[X] : B ⊆ F_a}`.
pub fn flat(x: &FinitePoset, b: &ElemSet) -> Result<ElemSet> {
    sharp_flat(x, b, Side::F)
}

fn sharp_flat(x: &FinitePoset, b: &ElemSet, side: Side) -> Result<ElemSet> {
    x.check_set(b)?;
    if b.is_empty() {
        return Err(Error::EmptySubset);
    }
    let gens = generators(x, side);
    Ok(ElemSet::from_indices(x.len(), gens.iter().filter(|&a| b.is_subset(row(x, a, side)))))
}

/// Member sets of 𝒰(X) (side `U`) or ℱ(X) (side `F`), deduplicated and
/// sorted by member list.
pub fn family_members(x: &FinitePoset, side: Side) -> Vec<ElemSet> {
    let gens = generators(x, side).to_vec();
    let mut intersections = BTreeSet::new();
    // supersets of a generator set with empty intersection are empty too
    fn walk(
        x: &FinitePoset,
        side: Side,
        gens: &[usize],
        start: usize,
        current: &ElemSet,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        for i in start..gens.len() {
            let next = current.intersection(row(x, gens[i], side));
            if next.is_empty() {
                continue;
            }
            walk(x, side, gens, i + 1, &next, out);
            out.insert(next.to_vec());
        }
    }
    walk(x, side, &gens, 0, &x.full_set(), &mut intersections);
    let mut regions = BTreeSet::new();
    for members in intersections {
        let set = ElemSet::from_indices(x.len(), members);
        for comp in x.connected_components(&set) {
            regions.insert(comp.to_vec());
        }
    }
    regions.into_iter().map(|m| ElemSet::from_indices(x.len(), m)).collect()
}

/// The minimum region of 𝒰(X) containing `B` (side `U`), or the maximum
/// region of ℱ(X) containing `B` (side `F`). It is the component of
/// `U_{B♯}` (resp. `F_{B♭}`) through `B`, and `None` when `B♯` (`B♭`) is empty.
pub fn min_containing(x: &FinitePoset, b: &ElemSet, side: Side) -> Result<Option<Region>> {
    x.check_set(b)?;
    if b.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !x.is_connected_subset(b) {
        return Err(Error::DisconnectedSubset);
    }
    let gens = sharp_flat(x, b, side)?;
    if gens.is_empty() {
        return Ok(None);
    }
    let hull = intersect_rows(x, &gens, side)?;
    let comp = x
        .connected_components(&hull)
        .into_iter()
        .find(|c| b.is_subset(c))
        .expect("a connected B lies in one component of its hull");
    Ok(Some(Region::new(side, comp)))
}

/// `C_U(x) = min{C ∈ 𝒰(X) : x ∈ C}`.
pub fn c_u(x: &FinitePoset, e: usize) -> ElemSet {
    min_containing(x, &ElemSet::singleton(x.len(), e), Side::U)
        .expect("singletons are connected")
        .expect("every element lies below a maximal element")
        .members
}

/// `C_F(x) = max{C ∈ ℱ(X) : x ∈ C}`.
pub fn c_f(x: &FinitePoset, e: usize) -> ElemSet {
    min_containing(x, &ElemSet::singleton(x.len(), e), Side::F)
        .expect("singletons are connected")
        .expect("every element lies above a minimal element")
        .members
}

/// 𝒰(X), ℱ(X) or 𝒞(X) as a poset of regions.
#[derive(Clone, Debug)]
pub struct CSpace {
    ambient: Arc<FinitePoset>,
    family: Family,
    regions: Vec<Region>,
    lookup: HashMap<Region, usize>,
    order: Arc<FinitePoset>,
    overlap: bool,
}

impl CSpace {
    pub fn u_family(x: &Arc<FinitePoset>) -> CSpace {
        let regions = family_members(x, Side::U).into_iter().map(|m| Region::new(Side::U, m)).collect();
        Self::assemble(x.clone(), Family::U, regions)
    }

    pub fn f_family(x: &Arc<FinitePoset>) -> CSpace {
        let regions = family_members(x, Side::F).into_iter().map(|m| Region::new(Side::F, m)).collect();
        Self::assemble(x.clone(), Family::F, regions)
    }

    pub fn c_space(x: &Arc<FinitePoset>) -> CSpace {
        let mut regions: Vec<Region> =
            family_members(x, Side::U).into_iter().map(|m| Region::new(Side::U, m)).collect();
        regions.extend(family_members(x, Side::F).into_iter().map(|m| Region::new(Side::F, m)));
        Self::assemble(x.clone(), Family::C, regions)
    }

    pub fn build(x: &Arc<FinitePoset>, family: Family) -> CSpace {
        match family {
            Family::U => Self::u_family(x),
            Family::F => Self::f_family(x),
            Family::C => Self::c_space(x),
        }
    }

    fn assemble(ambient: Arc<FinitePoset>, family: Family, regions: Vec<Region>) -> CSpace {
        let lookup: HashMap<Region, usize> = regions.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let u_sets: BTreeSet<&ElemSet> =
            regions.iter().filter(|r| r.side == Side::U).map(|r| &r.members).collect();
        let overlap = regions.iter().any(|r| r.side == Side::F && u_sets.contains(&r.members));
        let labels = regions.iter().map(|r| region_label(&ambient, r)).collect();
        let order = FinitePoset::from_relation(labels, |i, j| regions[i].leq(&regions[j]))
            .expect("the region order is a partial order");
        CSpace { ambient, family, regions, lookup, order: Arc::new(order), overlap }
    }

    pub fn ambient(&self) -> &Arc<FinitePoset> {
        &self.ambient
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, i: usize) -> &Region {
        &self.regions[i]
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    /// The regions as a poset; element `i` is region `i`.
    pub fn order(&self) -> &Arc<FinitePoset> {
        &self.order
    }

    pub fn index_of(&self, region: &Region) -> Option<usize> {
        self.lookup.get(region).copied()
    }

    pub fn find(&self, side: Side, members: &ElemSet) -> Option<usize> {
        self.index_of(&Region::new(side, members.clone()))
    }

    /// Whether some set lies in both 𝒰(X) and ℱ(X). Only meaningful for 𝒞(X).
    pub fn has_overlap(&self) -> bool {
        self.overlap
    }

    pub fn label(&self, i: usize) -> &str {
        self.order.label(i)
    }

    /// Regions of one side, as indices.
    pub fn side_indices(&self, side: Side) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.regions[i].side == side).collect()
    }
}

/// `U{a,b,c}` / `F{a,b,c}` with members in index order.
pub fn region_label(ambient: &FinitePoset, r: &Region) -> String {
    let names: Vec<&str> = r.members.iter().map(|e| ambient.label(e)).collect();
    format!("{}{{{}}}", r.side.tag(), names.join(","))
}

/// `𝒰(f)`, `ℱ(f)` or `𝒞(f)` together with the spaces it runs between.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: CSpace,
    pub target: CSpace,
    pub map: MonotoneMap,
}

/// `𝒰(f)(C) = min{D ∈ 𝒰(Y) : f(C) ⊆ D}`, `ℱ(f)(C) = max{D ∈ ℱ(Y) : f(C) ⊆ D}`,
/// and `𝒞(f)` acting by side. `𝒞(f)` needs 𝒰(X) and ℱ(X) to be disjoint.
pub fn induced_map(f: &MonotoneMap, family: Family) -> Result<InducedMap> {
    let source = CSpace::build(f.source(), family);
    let target = if f.is_endomap() && Arc::ptr_eq(f.source(), f.target()) {
        source.clone()
    } else {
        CSpace::build(f.target(), family)
    };
    let map = induced_between(f, &source, &target)?;
    Ok(InducedMap { source, target, map })
}

/// The induced map between precomputed region spaces of `f`'s source and target.
pub fn induced_between(f: &MonotoneMap, source: &CSpace, target: &CSpace) -> Result<MonotoneMap> {
    if source.family != target.family {
        return Err(Error::NotComposable);
    }
    if **source.ambient() != **f.source() || **target.ambient() != **f.target() {
        return Err(Error::NotComposable);
    }
    if source.family == Family::C && source.has_overlap() {
        return Err(Error::OverlappingFamilies);
    }
    let y = f.target();
    let mut images = Vec::with_capacity(source.len());
    for r in source.regions() {
        let img = f.image_of(&r.members);
        let d = min_containing(y, &img, r.side)?.expect("images of regions have a bounding region");
        images.push(target.index_of(&d).expect("the bounding region belongs to the target family"));
    }
    MonotoneMap::new(source.order().clone(), target.order().clone(), images)
}

/// `X' = {max C : C ∈ 𝒰(X)}` with the mutually inverse isomorphisms
/// `φ(C) = max C` and `ψ(z) = U_z`.
#[derive(Clone, Debug)]
pub struct XPrime {
    pub members: ElemSet,
    /// `φ : 𝒰(X) -> X'` (subspace indexing as in [`Retraction::members`]).
    pub phi: MonotoneMap,
    /// `ψ : X' -> 𝒰(X)`.
    pub psi: MonotoneMap,
    /// `X'` as an ubp-retract of `X`.
    pub retract: Retraction,
}

/// Returns `None` unless every region of 𝒰(X) has a maximum.
pub fn x_prime(x: &Arc<FinitePoset>) -> Option<XPrime> {
    let u = CSpace::u_family(x);
    let maxima: Option<Vec<usize>> = u.regions().iter().map(|r| x.max_of(&r.members)).collect();
    let maxima = maxima?;
    let members = ElemSet::from_indices(x.len(), maxima.iter().copied());
    let retract = is_ubp_retract(x, &members).ok()??;
    let position = |e: usize| retract.members.binary_search(&e).expect("maximum lies in X'");
    let phi_images = maxima.iter().map(|&m| position(m)).collect();
    let phi = MonotoneMap::new(u.order().clone(), retract.subspace.clone(), phi_images).ok()?;
    let psi_images: Option<Vec<usize>> = retract.members.iter().map(|&z| u.find(Side::U, x.down_set(z))).collect();
    let psi = MonotoneMap::new(retract.subspace.clone(), u.order().clone(), psi_images?).ok()?;
    Some(XPrime { members, phi, psi, retract })
}

/// The isomorphism `𝒰(𝒰(X)) ≅ 𝒰(X)`, `φ(D) = max D`, `ψ(C) = U_C`.
#[derive(Clone, Debug)]
pub struct Idempotence {
    pub base: CSpace,
    pub double: CSpace,
    pub phi: MonotoneMap,
    pub psi: MonotoneMap,
}

/// Builds both maps; `None` if some `D ∈ 𝒰(𝒰(X))` has no maximum or a
/// `U_C` is missing from `𝒰(𝒰(X))`.
pub fn idempotence(x: &Arc<FinitePoset>) -> Option<Idempotence> {
    let base = CSpace::u_family(x);
    let double = CSpace::u_family(base.order());
    let p = base.order();
    let phi_images: Option<Vec<usize>> = double.regions().iter().map(|d| p.max_of(&d.members)).collect();
    let phi = MonotoneMap::new(double.order().clone(), p.clone(), phi_images?).ok()?;
    let psi_images: Option<Vec<usize>> = (0..base.len()).map(|c| double.find(Side::U, p.down_set(c))).collect();
    let psi = MonotoneMap::new(p.clone(), double.order().clone(), psi_images?).ok()?;
    Some(Idempotence { base, double, phi, psi })
}

/// The topology generated by 𝒰(X) compared with its image in 𝒰(X).
#[derive(Clone, Debug)]
pub struct KolmogorovReport {
    /// `C_U(x)` as a region index of 𝒰(X), for each `x`.
    pub cu: Vec<usize>,
    /// Classes of the Kolmogorov quotient, ordered by smallest element.
    pub classes: Vec<ElemSet>,
    pub class_of: Vec<usize>,
    /// `[x] ↦ C_U(x)`.
    pub embedding: Vec<usize>,
    /// The specialization preorder computed from basic open sets agrees with
    /// `C_U(x) ⊆ C_U(y)`.
    pub preorders_agree: bool,
    pub injective: bool,
    pub order_embedding: bool,
}

pub fn kolmogorov_comparison(x: &Arc<FinitePoset>) -> KolmogorovReport {
    let u = CSpace::u_family(x);
    let n = x.len();
    let cu: Vec<usize> = (0..n)
        .map(|e| u.find(Side::U, &c_u(x, e)).expect("C_U(x) is a region"))
        .collect();
    // minimal open neighbourhood of y in the generated topology
    let neighbourhood: Vec<ElemSet> = (0..n)
        .map(|y| {
            let mut nb = x.full_set();
            for r in u.regions().iter().filter(|r| r.members.contains(y)) {
                nb.intersect_with(&r.members);
            }
            nb
        })
        .collect();
    let below = |a: usize, b: usize| neighbourhood[b].contains(a);
    let region_sub = |a: usize, b: usize| u.region(cu[a]).members.is_subset(&u.region(cu[b]).members);
    let preorders_agree = (0..n).all(|a| (0..n).all(|b| below(a, b) == region_sub(a, b)));

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<ElemSet> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let class = ElemSet::from_indices(n, (0..n).filter(|&b| below(a, b) && below(b, a)));
        for b in class.iter() {
            class_of[b] = classes.len();
        }
        classes.push(class);
    }
    let embedding: Vec<usize> = classes.iter().map(|c| cu[c.first().expect("classes are non-empty")]).collect();
    let injective = embedding.iter().collect::<BTreeSet<_>>().len() == embedding.len();
    let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
    let order_embedding = reps.iter().all(|&a| {
        reps.iter()
            .all(|&b| below(a, b) == u.order().leq(embedding[class_of[a]], embedding[class_of[b]]))
    });
    KolmogorovReport { cu, classes, class_of, embedding, preorders_agree, injective, order_embedding }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(p: FinitePoset) -> Arc<FinitePoset> {
        Arc::new(p)
    }

    fn ex_easy() -> Arc<FinitePoset> {
        arc(FinitePoset::new(
            &["0", "1", "2", "3", "4"],
            &[("0", "2"), ("0", "3"), ("0", "4"), ("1", "3"), ("1", "4")],
        )
        .unwrap())
    }

    fn ex2() -> Arc<FinitePoset> {
        arc(FinitePoset::new(
            &["0", "1", "2", "3", "4", "5"],
            &[("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5")],
        )
        .unwrap())
    }

    fn sets(v: &[ElemSet]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn intersections() {
        let x = ex_easy();
        assert_eq!(intersect_minimal_opens(&x, &x.set_of(&["3", "4"]).unwrap()).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(intersect_minimal_opens(&x, &x.set_of(&["3"]).unwrap()).unwrap(), *x.down_set(3));
        assert_eq!(intersect_closures(&x, &x.set_of(&["0", "1"]).unwrap()).unwrap().to_vec(), vec![3, 4]);
        assert_eq!(intersect_minimal_opens(&x, &x.empty_set()), Err(Error::EmptySubset));
    }

    #[test]
    fn sharp_and_flat() {
        let x = ex_easy();
        assert_eq!(sharp(&x, &x.set_of(&["0"]).unwrap()).unwrap().to_vec(), vec![2, 3, 4]);
        assert_eq!(sharp(&x, &x.set_of(&["3"]).unwrap()).unwrap().to_vec(), vec![3]);
        assert_eq!(sharp(&x, &x.set_of(&["0", "1"]).unwrap()).unwrap().to_vec(), vec![3, 4]);
        assert_eq!(flat(&x, &x.set_of(&["3"]).unwrap()).unwrap().to_vec(), vec![0, 1]);
        assert!(sharp(&x, &x.set_of(&["2", "3"]).unwrap()).unwrap().is_empty());
        assert_eq!(sharp(&x, &x.empty_set()), Err(Error::EmptySubset));
    }

    #[test]
    fn u_family_of_ex_easy() {
        let x = ex_easy();
        let u = family_members(&x, Side::U);
        assert_eq!(sets(&u), vec![vec![0], vec![0, 1, 3], vec![0, 1, 4], vec![0, 2], vec![1]]);
        let f = family_members(&x, Side::F);
        assert_eq!(sets(&f), vec![vec![0, 2, 3, 4], vec![1, 3, 4], vec![3], vec![4]]);
    }

    #[test]
    fn maximum_collapses_u_family() {
        let chain = arc(FinitePoset::chain(4).unwrap());
        let u = CSpace::u_family(&chain);
        assert_eq!(u.len(), 1);
        assert_eq!(u.region(0).members, chain.full_set());
    }

    #[test]
    fn overlap_on_discrete_two_points() {
        let d = arc(FinitePoset::antichain(2).unwrap());
        let c = CSpace::c_space(&d);
        assert!(c.has_overlap());
        assert_eq!(c.len(), 4);
        assert_eq!(sets(&family_members(&d, Side::U)), vec![vec![0], vec![1]]);
        assert_eq!(sets(&family_members(&d, Side::F)), vec![vec![0], vec![1]]);
        let id = MonotoneMap::identity(d.clone());
        assert_eq!(induced_map(&id, Family::C).unwrap_err(), Error::OverlappingFamilies);
        assert!(induced_map(&id, Family::U).is_ok());
    }

    #[test]
    fn min_containing_cases() {
        let x = ex_easy();
        let r = min_containing(&x, &x.set_of(&["0"]).unwrap(), Side::U).unwrap().unwrap();
        assert_eq!(r.members.to_vec(), vec![0]);
        let r = min_containing(&x, x.down_set(3), Side::U).unwrap().unwrap();
        assert_eq!(r.members, *x.down_set(3));
        assert_eq!(
            min_containing(&x, &x.set_of(&["0", "1"]).unwrap(), Side::U),
            Err(Error::DisconnectedSubset)
        );
        assert_eq!(min_containing(&x, &x.empty_set(), Side::U), Err(Error::EmptySubset));
        // {2,3} is connected only through 0
        let none = min_containing(&x, &x.set_of(&["0", "2", "3"]).unwrap(), Side::U).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn identity_induces_identity() {
        let x = ex_easy();
        for fam in [Family::U, Family::F, Family::C] {
            let ind = induced_map(&MonotoneMap::identity(x.clone()), fam).unwrap();
            assert_eq!(ind.map, MonotoneMap::identity(ind.source.order().clone()));
        }
    }

    #[test]
    fn ex2_u_family_and_swap() {
        let x = ex2();
        let u = CSpace::u_family(&x);
        assert_eq!(u.len(), 3);
        let bottom = u.order().minimum().unwrap();
        assert_eq!(u.region(bottom).members.to_vec(), vec![0, 1, 2, 3]);
        let f = MonotoneMap::new(x.clone(), x.clone(), vec![1, 0, 3, 2, 5, 4]).unwrap();
        let uf = induced_map(&f, Family::U).unwrap();
        assert_eq!(uf.map.apply(bottom), bottom);
    }

    #[test]
    fn kolmogorov_of_ex2() {
        let x = ex2();
        let k = kolmogorov_comparison(&x);
        assert_eq!(k.classes.len(), 3);
        assert_eq!(sets(&k.classes), vec![vec![0, 1, 2, 3], vec![4], vec![5]]);
        assert!(k.injective && k.order_embedding && k.preorders_agree);
        let u = CSpace::u_family(&x);
        let mut image = k.embedding.clone();
        image.sort();
        assert_eq!(image, (0..u.len()).collect::<Vec<_>>());

        let single = arc(FinitePoset::chain(1).unwrap());
        assert_eq!(kolmogorov_comparison(&single).classes.len(), 1);
    }

    #[test]
    fn x_prime_of_chain_and_ex_easy() {
        let chain = arc(FinitePoset::chain(3).unwrap());
        let xp = x_prime(&chain).unwrap();
        assert_eq!(xp.members.to_vec(), vec![2]);
        let x = ex_easy();
        let xp = x_prime(&x).unwrap();
        assert_eq!(xp.members, x.full_set());
        assert!(xp.phi.is_isomorphism());
        assert_eq!(xp.psi.compose(&xp.phi).unwrap(), MonotoneMap::identity(CSpace::u_family(&x).order().clone()));
        // ex2: {0,1,2,3} has no maximum
        assert!(x_prime(&ex2()).is_none());
    }

    #[test]
    fn idempotence_of_ex_easy() {
        let iso = idempotence(&ex_easy()).unwrap();
        assert!(iso.phi.is_isomorphism());
        assert_eq!(iso.phi.compose(&iso.psi).unwrap(), MonotoneMap::identity(iso.base.order().clone()));
    }
}
