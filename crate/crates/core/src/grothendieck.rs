//! The Grothendieck construction of the inclusion diagram `C ↦ C` on 𝒰(X).
//!
//! Elements are pairs `(C, x)` with `C ∈ 𝒰(X)` and `x ∈ C`, ordered by
//! `(C, x) ≤ (D, y)` iff `C ⊆ D` and `x ≤ y`. It comes with `ρ(C, x) = x`,
//! `ι(x) = (C_U(x), x)` and `q(C, x) = C`.

use std::sync::Arc;

use crate::cspace::{c_u, idempotence, induced_between, CSpace, Side};
use crate::homotopy::{homotopy_equivalent, is_dbp_retract};
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

#[derive(Clone, Debug)]
pub struct Integral {
    pub base: CSpace,
    /// `(region index in base, element)` for each element of the poset.
    pub pairs: Vec<(usize, usize)>,
    pub poset: Arc<FinitePoset>,
}

impl Integral {
    pub fn index_of(&self, region: usize, element: usize) -> Option<usize> {
        self.pairs.binary_search(&(region, element)).ok()
    }
}

pub fn build_integral(x: &Arc<FinitePoset>) -> Integral {
    let base = CSpace::u_family(x);
    let pairs: Vec<(usize, usize)> =
        (0..base.len()).flat_map(|c| base.region(c).members.iter().map(move |e| (c, e))).collect();
    let labels = pairs.iter().map(|&(c, e)| format!("({},{})", base.label(c), x.label(e))).collect();
    let leq = |i: usize, j: usize| {
        let ((c, e), (d, f)) = (pairs[i], pairs[j]);
        base.order().leq(c, d) && x.leq(e, f)
    };
    let poset = FinitePoset::from_relation(labels, leq).expect("the pair order is a partial order");
    Integral { base, pairs, poset: Arc::new(poset) }
}

#[derive(Clone, Debug)]
pub struct StructureMaps {
    pub rho: MonotoneMap,
    pub iota: MonotoneMap,
    pub q: MonotoneMap,
}

pub fn structure_maps(x: &Arc<FinitePoset>, integral: &Integral) -> StructureMaps {
    let p = &integral.poset;
    let rho = integral.pairs.iter().map(|&(_, e)| e).collect();
    let iota = (0..x.len())
        .map(|e| {
            let c = integral.base.find(Side::U, &c_u(x, e)).expect("C_U(x) is a region");
            integral.index_of(c, e).expect("x lies in C_U(x)")
        })
        .collect();
    let q = integral.pairs.iter().map(|&(c, _)| c).collect();
    StructureMaps {
        rho: MonotoneMap::new(p.clone(), x.clone(), rho).expect("rho is monotone"),
        iota: MonotoneMap::new(x.clone(), p.clone(), iota).expect("iota is monotone"),
        q: MonotoneMap::new(p.clone(), integral.base.order().clone(), q).expect("q is monotone"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralReport {
    pub size: usize,
    /// `|∫| = Σ |C|` and its maximal elements are the `(U_a, a)`.
    pub shape_ok: bool,
    /// `ρι = id` and `ιρ ≤ id`.
    pub retraction_ok: bool,
    /// `ι(X)` is a dbp-retract.
    pub dbp_retract: bool,
    /// `𝒰(ι)` is an isomorphism with inverse `𝒰(ρ)`.
    pub u_iota_iso: bool,
    /// `𝒰(ι)(C) = {(D, x) : D ⊆ C}`.
    pub u_iota_tilde: bool,
    /// `φ ∘ 𝒰(q) = 𝒰(ρ)`.
    pub triangle_commutes: bool,
    /// `X` and `∫` have isomorphic cores.
    pub homotopy_equivalent: bool,
    /// `q` is onto and the preorder it induces on 𝒰(X) is the order of 𝒰(X).
    pub quotient_ok: bool,
}

impl IntegralReport {
    pub fn all_pass(&self) -> bool {
        self.shape_ok
            && self.retraction_ok
            && self.dbp_retract
            && self.u_iota_iso
            && self.u_iota_tilde
            && self.triangle_commutes
            && self.homotopy_equivalent
            && self.quotient_ok
    }
}

pub fn verify_integral_identities(x: &Arc<FinitePoset>) -> IntegralReport {
    let integral = build_integral(x);
    let maps = structure_maps(x, &integral);
    let p = &integral.poset;
    let base = &integral.base;

    let total: usize = base.regions().iter().map(|r| r.members.len()).sum();
    let expected_top: Vec<usize> = x
        .maximal()
        .iter()
        .map(|a| integral.index_of(base.find(Side::U, x.down_set(a)).expect("U_a is a region"), a).unwrap())
        .collect();
    let shape_ok = total == p.len() && p.maximal().to_vec() == {
        let mut t = expected_top;
        t.sort();
        t
    };

    let rho_iota = maps.rho.compose(&maps.iota).expect("composable");
    let iota_rho = maps.iota.compose(&maps.rho).expect("composable");
    let retraction_ok =
        rho_iota == MonotoneMap::identity(x.clone()) && iota_rho.pointwise_leq(&MonotoneMap::identity(p.clone()));

    let image = ElemSet::from_indices(p.len(), maps.iota.images().iter().copied());
    let dbp_retract = matches!(is_dbp_retract(p, &image), Ok(Some(_)));

    let upper = CSpace::u_family(p);
    let u_iota = induced_between(&maps.iota, base, &upper).expect("iota induces a map");
    let u_rho = induced_between(&maps.rho, &upper, base).expect("rho induces a map");
    let u_iota_iso = u_iota.is_isomorphism()
        && u_rho.compose(&u_iota).unwrap() == MonotoneMap::identity(base.order().clone())
        && u_iota.compose(&u_rho).unwrap() == MonotoneMap::identity(upper.order().clone());

    let u_iota_tilde = (0..base.len()).all(|c| {
        let tilde = ElemSet::from_indices(
            p.len(),
            (0..p.len()).filter(|&i| base.order().leq(integral.pairs[i].0, c)),
        );
        upper.region(u_iota.apply(c)).members == tilde
    });

    let triangle_commutes = match idempotence(x) {
        Some(iso) => match induced_between(&maps.q, &upper, &iso.double) {
            Ok(u_q) => (0..upper.len()).all(|d| iso.phi.apply(u_q.apply(d)) == u_rho.apply(d)),
            Err(_) => false,
        },
        None => false,
    };

    let homotopy_equivalent = homotopy_equivalent(x, p);

    let quotient_ok = {
        let m = base.len();
        let onto = ElemSet::from_indices(m, maps.q.images().iter().copied()).len() == m;
        let mut rel = vec![ElemSet::empty(m); m];
        for c in 0..m {
            rel[c].insert(c);
        }
        for &(a, b) in p.covers() {
            rel[maps.q.apply(b)].insert(maps.q.apply(a));
        }
        // transitive closure, rows are down-sets
        for k in 0..m {
            for c in 0..m {
                if rel[c].contains(k) {
                    let row = rel[k].clone();
                    rel[c].union_with(&row);
                }
            }
        }
        onto && (0..m).all(|c| rel[c] == *base.order().down_set(c))
    };

    IntegralReport {
        size: p.len(),
        shape_ok,
        retraction_ok,
        dbp_retract,
        u_iota_iso,
        u_iota_tilde,
        triangle_commutes,
        homotopy_equivalent,
        quotient_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ex_easy_integral() {
        let x = Arc::new(catalog::ex_easy());
        let integral = build_integral(&x);
        assert_eq!(integral.poset.len(), 10);
        let maps = structure_maps(&x, &integral);
        let (c, e) = integral.pairs[maps.iota.apply(0)];
        assert_eq!((integral.base.region(c).members.to_vec(), e), (vec![0], 0));
        let report = verify_integral_identities(&x);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn chain_integral_is_the_chain() {
        let x = Arc::new(FinitePoset::chain(3).unwrap());
        let integral = build_integral(&x);
        assert!(crate::iso::are_isomorphic(&integral.poset, &x));
        let maps = structure_maps(&x, &integral);
        assert!(maps.rho.is_bijective() && maps.iota.is_bijective());
        assert!(verify_integral_identities(&x).all_pass());
    }

    #[test]
    fn singleton() {
        let x = Arc::new(FinitePoset::chain(1).unwrap());
        assert_eq!(verify_integral_identities(&x).size, 1);
    }

    #[test]
    fn labels_name_the_pair() {
        let x = Arc::new(catalog::ex_easy());
        let integral = build_integral(&x);
        assert!(integral.poset.labels().iter().any(|l| l == "(U{0,1,3},3)"));
    }
}
