//! Structural laws that hold for every finite poset, as executable checks.
//!
//! Each law takes a poset and a random stream (for laws quantified over
//! maps) and reports the first violation it finds.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::cspace::{
    idempotence, induced_between, intersect_closures, intersect_minimal_opens, kolmogorov_comparison,
    sharp, flat, x_prime, CSpace, Side,
};
use crate::fpp::{check_fixed_point_lifting, has_fpp, Method};
use crate::grothendieck::verify_integral_identities;
use crate::homotopy::{core, find_beat_points, is_dbp_retract, is_ubp_retract, BeatKind, Retraction};
use crate::iso::are_isomorphic;
use crate::map::MonotoneMap;
use crate::poset::{numeric_labels, FinitePoset};
use crate::random::{random_fixed_point_free_map, random_map_above, random_monotone_map};
use crate::set::ElemSet;

pub type Outcome = std::result::Result<(), String>;
pub type Law = fn(&Arc<FinitePoset>, &mut ChaCha8Rng) -> Outcome;

/// Random maps drawn per poset by the map-quantified laws.
const MAP_SAMPLES: usize = 4;

pub const LAWS: &[(&str, Law)] = &[
    ("c-op-duality", c_op_duality),
    ("c-extremes", c_extremes),
    ("regions-open-closed", regions_open_closed),
    ("regions-are-hull-components", regions_are_hull_components),
    ("overlap-forces-extremes", overlap_forces_extremes),
    ("homeomorphisms-induce-isomorphisms", homeomorphisms_induce_isomorphisms),
    ("monotonicity", monotonicity),
    ("lax-functoriality", lax_functoriality),
    ("fixed-point-lifting", fixed_point_lifting),
    ("fpp-homotopy-invariance", fpp_homotopy_invariance),
    ("fpp-certificate-soundness", fpp_certificate_soundness),
    ("region-fixed-point-criteria", region_fixed_point_criteria),
    ("no-up-beat-points-in-u", no_up_beat_points_in_u),
    ("idempotence", idempotence_law),
    ("components-of-u-b", components_of_u_b),
    ("x-prime", x_prime_law),
    ("kolmogorov-embedding", kolmogorov_embedding),
    ("integral-identities", integral_identities),
    ("bp-retract-laws", bp_retract_laws),
    ("down-beat-point-propagation", down_beat_point_propagation),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `𝒞(X^op)` is `𝒞(X)^op` with tags swapped.
pub fn c_op_duality(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    let op = CSpace::c_space(&Arc::new(x.opposite()));
    ensure(c.len() == op.len(), || format!("|C(X)| = {} but |C(X^op)| = {}", c.len(), op.len()))?;
    let mut w = Vec::with_capacity(c.len());
    for r in c.regions() {
        let side = if r.side == Side::U { Side::F } else { Side::U };
        w.push(op.find(side, &r.members).ok_or_else(|| format!("{:?} has no dual in C(X^op)", r))?);
    }
    for i in 0..c.len() {
        for j in 0..c.len() {
            ensure(c.order().leq(i, j) == op.order().leq(w[j], w[i]), || {
                format!("order of {} and {} not reversed", c.label(i), c.label(j))
            })?;
        }
    }
    Ok(())
}

/// `mxl 𝒞(X) = {U_a : a ∈ mxl X}` and `mnl 𝒞(X) = {F_a : a ∈ mnl X}`.
pub fn c_extremes(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    let expected_max: Option<BTreeSet<usize>> = x.maximal().iter().map(|a| c.find(Side::U, x.down_set(a))).collect();
    let expected_min: Option<BTreeSet<usize>> = x.minimal().iter().map(|a| c.find(Side::F, x.up_set(a))).collect();
    let got_max: BTreeSet<usize> = c.order().maximal().iter().collect();
    let got_min: BTreeSet<usize> = c.order().minimal().iter().collect();
    ensure(expected_max == Some(got_max), || "maximal elements of C(X) are not the U_a".into())?;
    ensure(expected_min == Some(got_min), || "minimal elements of C(X) are not the F_a".into())
}

pub fn regions_open_closed(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    for (i, r) in c.regions().iter().enumerate() {
        let shaped = match r.side {
            Side::U => x.is_open(&r.members),
            Side::F => x.is_closed(&r.members),
        };
        ensure(!r.members.is_empty() && x.is_connected_subset(&r.members) && shaped, || {
            format!("{} is empty, disconnected, or not open/closed", c.label(i))
        })?;
    }
    Ok(())
}

/// Each region is a component of `U_{B♯}` (resp. `F_{B♭}`) for `B` itself.
pub fn regions_are_hull_components(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    for (i, r) in c.regions().iter().enumerate() {
        let hull = match r.side {
            Side::U => intersect_minimal_opens(x, &sharp(x, &r.members).map_err(err)?),
            Side::F => intersect_closures(x, &flat(x, &r.members).map_err(err)?),
        }
        .map_err(|e| format!("{}: {e}", c.label(i)))?;
        ensure(x.connected_components(&hull).contains(&r.members), || {
            format!("{} is not a component of its hull", c.label(i))
        })?;
    }
    Ok(())
}

/// A connected space whose families share a set has a maximum and a
/// minimum, and then both families are `{X}`.
pub fn overlap_forces_extremes(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    if !c.has_overlap() || !x.is_connected() {
        return Ok(());
    }
    ensure(x.maximum().is_some() && x.minimum().is_some(), || "overlap without maximum and minimum".into())?;
    ensure(c.len() == 2 && c.regions().iter().all(|r| r.members == x.full_set()), || {
        "overlap but the families are not {X}".into()
    })
}

fn permuted_copy(x: &FinitePoset, perm: &[usize]) -> FinitePoset {
    let covers: Vec<(usize, usize)> = x.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    FinitePoset::from_index_covers(numeric_labels(x.len()), &covers).expect("a relabelled poset is a poset")
}

/// For a homeomorphism `f`, `𝒰(f)(C) = f(C)`, `ℱ(f)(C) = f(C)` and both are isomorphisms.
pub fn homeomorphisms_induce_isomorphisms(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Outcome {
    let mut perm: Vec<usize> = (0..x.len()).collect();
    perm.shuffle(rng);
    let y = Arc::new(permuted_copy(x, &perm));
    let f = MonotoneMap::new(x.clone(), y.clone(), perm).map_err(err)?;
    for (src, tgt) in [(CSpace::u_family(x), CSpace::u_family(&y)), (CSpace::f_family(x), CSpace::f_family(&y))] {
        let m = induced_between(&f, &src, &tgt).map_err(err)?;
        ensure(m.is_isomorphism(), || "induced map of a homeomorphism is not an isomorphism".into())?;
        for (i, r) in src.regions().iter().enumerate() {
            ensure(tgt.region(m.apply(i)).members == f.image_of(&r.members), || {
                format!("induced image of {} is not f(C)", src.label(i))
            })?;
        }
    }
    Ok(())
}

/// `f ≤ g` implies `𝒰(f) ≤ 𝒰(g)`, `ℱ(f) ≤ ℱ(g)`, and `𝒞(f) ≤ 𝒞(g)` without overlap.
pub fn monotonicity(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Outcome {
    let spaces = [CSpace::u_family(x), CSpace::f_family(x), CSpace::c_space(x)];
    for _ in 0..MAP_SAMPLES {
        let f = random_monotone_map(x, x, rng);
        let g = random_map_above(&f, rng);
        for cs in &spaces {
            if cs.family() == crate::cspace::Family::C && cs.has_overlap() {
                continue;
            }
            let uf = induced_between(&f, cs, cs).map_err(err)?;
            let ug = induced_between(&g, cs, cs).map_err(err)?;
            ensure(uf.pointwise_leq(&ug), || {
                format!("f <= g but induced maps not ordered ({:?}): f={:?} g={:?}", cs.family(), f.images(), g.images())
            })?;
        }
    }
    Ok(())
}

/// `𝒰(fg) ≤ 𝒰(f)𝒰(g)` and `ℱ(fg) ≥ ℱ(f)ℱ(g)`.
pub fn lax_functoriality(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Outcome {
    let u = CSpace::u_family(x);
    let fam = CSpace::f_family(x);
    for _ in 0..MAP_SAMPLES {
        let f = random_monotone_map(x, x, rng);
        let g = random_monotone_map(x, x, rng);
        let fg = f.compose(&g).map_err(err)?;
        let ind = |h: &MonotoneMap, cs: &CSpace| induced_between(h, cs, cs).map_err(err);
        let ufug = ind(&f, &u)?.compose(&ind(&g, &u)?).map_err(err)?;
        ensure(ind(&fg, &u)?.pointwise_leq(&ufug), || {
            format!("U(fg) <= U(f)U(g) fails for f={:?} g={:?}", f.images(), g.images())
        })?;
        let ffg_ = ind(&f, &fam)?.compose(&ind(&g, &fam)?).map_err(err)?;
        ensure(ffg_.pointwise_leq(&ind(&fg, &fam)?), || {
            format!("F(fg) >= F(f)F(g) fails for f={:?} g={:?}", f.images(), g.images())
        })?;
    }
    Ok(())
}

/// A fixed point of `f` gives fixed regions of `𝒰(f)` and `ℱ(f)`.
pub fn fixed_point_lifting(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Outcome {
    let mut maps: Vec<MonotoneMap> = (0..MAP_SAMPLES).map(|_| random_monotone_map(x, x, rng)).collect();
    maps.extend(x.maximal().iter().map(|a| MonotoneMap::constant(x.clone(), x.clone(), a).unwrap()));
    for f in maps {
        let report = check_fixed_point_lifting(&f).map_err(err)?;
        ensure(report.holds, || format!("lifting fails for f={:?}", f.images()))?;
    }
    Ok(())
}

pub fn fpp_homotopy_invariance(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let a = has_fpp(x, Method::Brute).map_err(err)?;
    let b = has_fpp(&Arc::new(core(x)), Method::Brute).map_err(err)?;
    ensure(a.verdict == b.verdict, || format!("X: {:?}, core(X): {:?}", a.verdict, b.verdict))
}

/// The strategy cascade agrees with exhaustive search; witnesses are genuine.
pub fn fpp_certificate_soundness(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let auto = has_fpp(x, Method::Auto).map_err(err)?;
    let brute = has_fpp(x, Method::Brute).map_err(err)?;
    ensure(auto.verdict == brute.verdict, || format!("auto {:?} vs brute {:?}", auto.evidence, brute.verdict))?;
    if let Some(w) = auto.witness() {
        let checked = MonotoneMap::new(x.clone(), x.clone(), w.images().to_vec()).map_err(err)?;
        ensure(!checked.has_fixed_point(), || "witness has a fixed point".into())?;
    }
    Ok(())
}

/// The sufficient conditions for a fixed point stated in terms of regions
/// and punctured minimal open sets. Fixed-point-free maps must never satisfy
/// their hypotheses.
pub fn region_fixed_point_criteria(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Outcome {
    let subspace_fpp = |s: &ElemSet| -> bool {
        !s.is_empty() && has_fpp(&Arc::new(x.induced_subposet(s).unwrap()), Method::Brute).unwrap().has_fpp()
    };
    let u = CSpace::u_family(x);
    let fam = CSpace::f_family(x);
    let u_fpp: Vec<bool> = u.regions().iter().map(|r| subspace_fpp(&r.members)).collect();
    let f_fpp: Vec<bool> = fam.regions().iter().map(|r| subspace_fpp(&r.members)).collect();
    let down_hat_fpp: Vec<bool> = (0..x.len()).map(|e| subspace_fpp(&x.down_set_of(e, true))).collect();
    let up_hat_fpp: Vec<bool> = (0..x.len()).map(|e| subspace_fpp(&x.up_set_of(e, true))).collect();

    let mut maps: Vec<MonotoneMap> = (0..MAP_SAMPLES).map(|_| random_monotone_map(x, x, rng)).collect();
    maps.extend(random_fixed_point_free_map(x, rng));
    for f in maps {
        if f.has_fixed_point() {
            continue;
        }
        let uf = induced_between(&f, &u, &u).map_err(err)?;
        let ff = induced_between(&f, &fam, &fam).map_err(err)?;
        for c in 0..u.len() {
            ensure(!(u_fpp[c] && u.order().leq(uf.apply(c), c)), || {
                format!("U(f)(C) <= C with C = {} having the FPP, yet f = {:?} is fixed-point free", u.label(c), f.images())
            })?;
        }
        for c in 0..fam.len() {
            ensure(!(f_fpp[c] && fam.order().leq(c, ff.apply(c))), || {
                format!("F(f)(C) >= C with C = {} having the FPP, yet f = {:?} is fixed-point free", fam.label(c), f.images())
            })?;
        }
        for a in x.maximal().iter() {
            let ua = u.find(Side::U, x.down_set(a)).expect("U_a is a region");
            ensure(!(0..u.len()).any(|c| u.order().leq(c, ua) && uf.apply(c) == ua), || {
                format!("U(f)(C) = U_{} for some C <= U_a, yet f = {:?} is fixed-point free", x.label(a), f.images())
            })?;
        }
        for a in x.minimal().iter() {
            let fa = fam.find(Side::F, x.up_set(a)).expect("F_a is a region");
            ensure(!(0..fam.len()).any(|c| fam.order().leq(fa, c) && ff.apply(c) == fa), || {
                format!("F(f)(C) = F_{} for some C >= F_a, yet f = {:?} is fixed-point free", x.label(a), f.images())
            })?;
        }
        for e in 0..x.len() {
            let dh = x.down_set_of(e, true);
            ensure(!(down_hat_fpp[e] && f.image_of(&dh).is_subset(x.down_set(e))), || {
                format!("f(U^_{0}) in U_{0} with U^_{0} having the FPP, yet f is fixed-point free", x.label(e))
            })?;
            let uh = x.up_set_of(e, true);
            ensure(!(up_hat_fpp[e] && f.image_of(&uh).is_subset(x.up_set(e))), || {
                format!("f(F^_{0}) in F_{0} with F^_{0} having the FPP, yet f is fixed-point free", x.label(e))
            })?;
        }
    }
    Ok(())
}

pub fn no_up_beat_points_in_u(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let u = CSpace::u_family(x);
    ensure(find_beat_points(u.order()).iter().all(|b| b.kind == BeatKind::Down), || {
        "U(X) has an up beat point".into()
    })?;
    let f = CSpace::f_family(x);
    ensure(find_beat_points(f.order()).iter().all(|b| b.kind == BeatKind::Up), || {
        "F(X) has a down beat point".into()
    })
}

pub fn idempotence_law(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let iso = idempotence(x).ok_or("max D or U_C undefined for some region")?;
    ensure(iso.phi.is_isomorphism(), || "D -> max D is not an isomorphism".into())?;
    ensure(
        iso.psi.compose(&iso.phi).map_err(err)? == MonotoneMap::identity(iso.double.order().clone())
            && iso.phi.compose(&iso.psi).map_err(err)? == MonotoneMap::identity(iso.base.order().clone()),
        || "phi and psi are not mutually inverse".into(),
    )?;
    ensure(are_isomorphic(iso.double.order(), iso.base.order()), || "isomorphism search disagrees".into())
}

/// Components of `U_B` inside 𝒰(X) are the down-sets of the components of `U_A` in X.
pub fn components_of_u_b(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let u = CSpace::u_family(x);
    let p = u.order();
    let tops = p.maximal().to_vec();
    let limit = 1u64 << tops.len().min(6);
    for mask in 1..limit {
        let b: Vec<usize> = (0..tops.len()).filter(|&i| mask & (1 << i) != 0).map(|i| tops[i]).collect();
        let a = ElemSet::from_indices(
            x.len(),
            b.iter().map(|&t| x.max_of(&u.region(t).members).expect("U_a has maximum a")),
        );
        let mut ub = p.full_set();
        for &t in &b {
            ub.intersect_with(p.down_set(t));
        }
        let got: BTreeSet<Vec<usize>> = p.connected_components(&ub).iter().map(|c| c.to_vec()).collect();
        let ua = intersect_minimal_opens(x, &a).map_err(err)?;
        let mut expected = BTreeSet::new();
        for m in x.connected_components(&ua) {
            let idx = u.find(Side::U, &m).ok_or("component of U_A missing from U(X)")?;
            expected.insert(p.down_set(idx).to_vec());
        }
        ensure(got == expected, || format!("components of U_B differ for B = {b:?}"))?;
    }
    Ok(())
}

pub fn x_prime_law(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let u = CSpace::u_family(x);
    let all_have_max = u.regions().iter().all(|r| x.max_of(&r.members).is_some());
    match x_prime(x) {
        None => ensure(!all_have_max, || "every region has a maximum but X' was not built".into()),
        Some(xp) => ensure(
            xp.phi.is_isomorphism()
                && xp.psi.compose(&xp.phi).map_err(err)? == MonotoneMap::identity(u.order().clone()),
            || "U(X) -> X' is not an isomorphism".into(),
        ),
    }
}

pub fn kolmogorov_embedding(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let k = kolmogorov_comparison(x);
    ensure(k.preorders_agree && k.injective && k.order_embedding, || format!("{k:?}"))
}

pub fn integral_identities(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let report = verify_integral_identities(x);
    ensure(report.all_pass(), || format!("{report:?}"))
}

fn removal_retracts(x: &Arc<FinitePoset>) -> Vec<(BeatKind, Retraction)> {
    let mut out = Vec::new();
    for bp in find_beat_points(x) {
        let mut a = x.full_set();
        a.remove(bp.element);
        let r = match bp.kind {
            BeatKind::Down => is_dbp_retract(x, &a),
            BeatKind::Up => is_ubp_retract(x, &a),
        };
        out.push((bp.kind, r.unwrap().expect("removing a beat point is a bp-retraction")));
    }
    for kind in [BeatKind::Down, BeatKind::Up] {
        // strip beat points of one kind until none remain
        let mut keep = x.full_set();
        loop {
            let sub = x.induced_subposet(&keep).unwrap();
            let members = keep.to_vec();
            let Some(bp) = find_beat_points(&sub).into_iter().find(|b| b.kind == kind) else { break };
            keep.remove(members[bp.element]);
        }
        let r = match kind {
            BeatKind::Down => is_dbp_retract(x, &keep),
            BeatKind::Up => is_ubp_retract(x, &keep),
        };
        out.push((kind, r.unwrap().expect("iterated removal is a bp-retraction")));
    }
    out
}

/// Regions under bp-retractions: `r(C) = C ∩ A`, and the behaviour of
/// `𝒰(r)`, `ℱ(r)` under the hypotheses on extremes.
pub fn bp_retract_laws(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let c = CSpace::c_space(x);
    let u = CSpace::u_family(x);
    let fam = CSpace::f_family(x);
    for (kind, ret) in removal_retracts(x) {
        let a_set = ret.member_set();
        let ir = ret.idempotent();
        let sub = &ret.subspace;
        let to_sub = |s: &ElemSet| {
            ElemSet::from_indices(sub.len(), s.iter().map(|e| ret.members.binary_search(&e).expect("element of A")))
        };
        let tag = format!("A = {:?} ({kind:?})", sub.labels());
        for r in c.regions() {
            ensure(ir.image_of(&r.members) == r.members.intersection(&a_set), || format!("r(C) != C ∩ A, {tag}"))?;
        }
        let mxl_in = x.maximal().is_subset(&a_set);
        let mnl_in = x.minimal().is_subset(&a_set);
        let u_a = CSpace::u_family(sub);
        let f_a = CSpace::f_family(sub);
        let ur = induced_between(&ret.retraction, &u, &u_a).map_err(err)?;
        let ui = induced_between(&ret.inclusion, &u_a, &u).map_err(err)?;
        let fr = induced_between(&ret.retraction, &fam, &f_a).map_err(err)?;
        let fi = induced_between(&ret.inclusion, &f_a, &fam).map_err(err)?;
        if mxl_in {
            for (i, r) in u.regions().iter().enumerate() {
                let cut = to_sub(&r.members.intersection(&a_set));
                ensure(u_a.find(Side::U, &cut).is_some(), || format!("C ∩ A not in U(A), {tag}"))?;
                ensure(u_a.region(ur.apply(i)).members == cut, || format!("U(r)(C) != r(C), {tag}"))?;
            }
            ensure(ur.compose(&ui).unwrap() == MonotoneMap::identity(u_a.order().clone()), || {
                format!("U(r)U(i) != id, {tag}")
            })?;
        }
        if mnl_in {
            for (i, r) in fam.regions().iter().enumerate() {
                let cut = to_sub(&r.members.intersection(&a_set));
                ensure(f_a.find(Side::F, &cut).is_some(), || format!("C ∩ A not in F(A), {tag}"))?;
                ensure(f_a.region(fr.apply(i)).members == cut, || format!("F(r)(C) != r(C), {tag}"))?;
            }
            ensure(fr.compose(&fi).unwrap() == MonotoneMap::identity(f_a.order().clone()), || {
                format!("F(r)F(i) != id, {tag}")
            })?;
        }
        let id_u = MonotoneMap::identity(u.order().clone());
        let id_f = MonotoneMap::identity(fam.order().clone());
        match kind {
            BeatKind::Up => {
                ensure(ur.is_isomorphism(), || format!("U(r) not an isomorphism, {tag}"))?;
                if mnl_in {
                    ensure(id_f.pointwise_leq(&fi.compose(&fr).unwrap()), || format!("F(i)F(r) >= id fails, {tag}"))?;
                }
            }
            BeatKind::Down => {
                ensure(fr.is_isomorphism(), || format!("F(r) not an isomorphism, {tag}"))?;
                if mxl_in {
                    ensure(ui.compose(&ur).unwrap().pointwise_leq(&id_u), || format!("U(i)U(r) <= id fails, {tag}"))?;
                }
            }
        }
    }
    Ok(())
}

/// Removing a maximal down beat point `a` with `b = max U^_a`.
pub fn down_beat_point_propagation(x: &Arc<FinitePoset>, _: &mut ChaCha8Rng) -> Outcome {
    let u = CSpace::u_family(x);
    for bp in find_beat_points(x) {
        let a = bp.element;
        if bp.kind != BeatKind::Down || !x.maximal().contains(a) {
            continue;
        }
        let mut rest = x.full_set();
        rest.remove(a);
        let members = rest.to_vec();
        let sub = Arc::new(x.induced_subposet(&rest).map_err(err)?);
        let b_local = members.binary_search(&bp.witness).unwrap();
        let u_sub = CSpace::u_family(&sub);
        let ua = u.find(Side::U, x.down_set(a)).expect("U_a is a region");
        if sub.maximal().contains(b_local) {
            ensure(are_isomorphic(u.order(), u_sub.order()), || {
                format!("U(X) and U(X - {{{}}}) not isomorphic", x.label(a))
            })?;
            continue;
        }
        ensure(
            find_beat_points(u.order()).iter().any(|q| q.element == ua && q.kind == BeatKind::Down),
            || format!("U_{} is not a down beat point of U(X)", x.label(a)),
        )?;
        let mut without = u.order().full_set();
        without.remove(ua);
        let reduced = Arc::new(u.order().induced_subposet(&without).map_err(err)?);
        let kept = without.to_vec();
        let mut inner = ElemSet::empty(reduced.len());
        for r in u_sub.regions() {
            let ambient = ElemSet::from_indices(x.len(), r.members.iter().map(|e| members[e]));
            let idx = u.find(Side::U, &ambient).ok_or("U(X - {a}) is not inside U(X)")?;
            inner.insert(kept.binary_search(&idx).map_err(|_| "U(X - {a}) meets U_a".to_string())?);
        }
        ensure(matches!(is_ubp_retract(&reduced, &inner), Ok(Some(_))), || {
            format!("U(X - {{{}}}) is not an ubp-retract of U(X) - {{U_a}}", x.label(a))
        })?;
    }
    Ok(())
}

/// Runs every law; returns `(name, message)` for each failure.
pub fn check_all(x: &Arc<FinitePoset>, rng: &mut ChaCha8Rng) -> Vec<(&'static str, String)> {
    LAWS.iter().filter_map(|(name, law)| law(x, rng).err().map(|m| (*name, m))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::SeedableRng;

    #[test]
    fn catalog_spaces_satisfy_all_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["ex-easy", "ex-nonfunctorial", "ex-2", "ex-fig3", "ex-fig4", "lemma-A"] {
            let x = Arc::new(catalog::by_name(name, &[]).unwrap());
            assert_eq!(check_all(&x, &mut rng), vec![], "{name}");
        }
    }

    #[test]
    fn discrete_spaces_satisfy_all_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 1..4 {
            let x = Arc::new(FinitePoset::antichain(n).unwrap());
            assert_eq!(check_all(&x, &mut rng), vec![]);
        }
    }
}
