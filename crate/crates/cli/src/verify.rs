//! The reproduction suite: twelve checks of published values and laws,
//! each with a time budget.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fintop::catalog;
use fintop::cspace::{induced_between, induced_map, CSpace, Family, Side};
use fintop::fpp::{check_block_preserved, check_crown_lemma, has_fpp, Method, Verdict};
use fintop::homotopy::{homotopy_equivalent, is_contractible, is_dbp_retract};
use fintop::iso::are_isomorphic;
use fintop::random::random_poset;
use fintop::{laws, ElemSet, FinitePoset};

pub const DEFAULT_SEED: u64 = 1729;
pub const PROPERTY_SAMPLES: u64 = 500;

type Check = fn(u64) -> std::result::Result<String, String>;

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({:.2?}, limit {:?}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed,
            self.limit,
            self.detail
        )
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "C(X) of ex-easy", limit: secs(1), check: c_of_ex_easy },
        Criterion { id: 2, title: "non-functoriality of U", limit: secs(1), check: non_functoriality },
        Criterion { id: 3, title: "ex-2 swap lifts to fixed regions", limit: secs(1), check: ex_2 },
        Criterion { id: 4, title: "fixed point verdicts by exhaustive search", limit: secs(60 * 16), check: fpp_verdicts },
        Criterion { id: 5, title: "C(P343_1) is homotopy equivalent to P3323", limit: secs(10), check: c_of_p343 },
        Criterion { id: 6, title: "U and F families of P3323", limit: secs(5), check: p3323_families },
        Criterion { id: 7, title: "U(Xnk) shape and regions A-F", limit: secs(30), check: xnk_shape },
        Criterion { id: 8, title: "#A = 2n-3 > n-k+2 >= #B", limit: secs(30), check: xnk_cardinalities },
        Criterion { id: 9, title: "crown lemma", limit: secs(60), check: crown_lemma },
        Criterion { id: 10, title: "lemma spaces preserve {3,4,5}", limit: secs(10), check: lemma_blocks },
        Criterion { id: 11, title: "property suite on random connected posets", limit: secs(300), check: property_suite },
        Criterion { id: 12, title: "bp-retract counterexamples", limit: secs(1), check: bp_counterexamples },
    ]
}

pub fn run(c: &Criterion, seed: u64) -> Outcome {
    let start = Instant::now();
    let result = (c.check)(seed);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > c.limit {
        passed = false;
        detail = format!("over the time limit; {detail}");
    }
    Outcome { id: c.id, title: c.title, passed, detail, elapsed, limit: c.limit }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    criteria().iter().map(|c| run(c, seed)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: fintop::Error) -> String {
    e.to_string()
}

fn set(n: usize, items: &[usize]) -> ElemSet {
    ElemSet::from_indices(n, items.iter().copied())
}

fn side_members(c: &CSpace, side: Side) -> BTreeSet<Vec<usize>> {
    c.regions().iter().filter(|r| r.side == side).map(|r| r.members.to_vec()).collect()
}

fn c_of_ex_easy(_: u64) -> std::result::Result<String, String> {
    let c = CSpace::c_space(&Arc::new(catalog::ex_easy()));
    let u: BTreeSet<Vec<usize>> = [vec![0, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0], vec![1]].into();
    let f: BTreeSet<Vec<usize>> = [vec![0, 2, 3, 4], vec![1, 3, 4], vec![3], vec![4]].into();
    ensure(c.len() == 9, || format!("{} regions", c.len()))?;
    ensure(side_members(&c, Side::U) == u, || format!("U-regions {:?}", side_members(&c, Side::U)))?;
    ensure(side_members(&c, Side::F) == f, || format!("F-regions {:?}", side_members(&c, Side::F)))?;
    let drawn: BTreeSet<(&str, &str)> = [
        ("U{0}", "U{0,2}"),
        ("U{0}", "U{0,1,3}"),
        ("U{0}", "U{0,1,4}"),
        ("U{1}", "U{0,1,3}"),
        ("U{1}", "U{0,1,4}"),
        ("F{0,2,3,4}", "F{3}"),
        ("F{0,2,3,4}", "F{4}"),
        ("F{1,3,4}", "F{3}"),
        ("F{1,3,4}", "F{4}"),
        ("F{0,2,3,4}", "U{0}"),
        ("F{1,3,4}", "U{1}"),
        ("F{3}", "U{0,1,3}"),
        ("F{4}", "U{0,1,4}"),
    ]
    .into();
    let covers: BTreeSet<(&str, &str)> = c.order().covers().iter().map(|&(a, b)| (c.label(a), c.label(b))).collect();
    ensure(covers == drawn, || format!("covers {covers:?}"))?;
    Ok("9 regions and 13 covers as drawn".into())
}

fn non_functoriality(_: u64) -> std::result::Result<String, String> {
    let x = Arc::new(catalog::ex_nonfunctorial());
    let (f, g) = catalog::nonfunctorial_maps(&x);
    let uf = induced_map(&f, Family::U).map_err(err)?;
    let ug = induced_map(&g, Family::U).map_err(err)?;
    let ufg = induced_map(&f.compose(&g).map_err(err)?, Family::U).map_err(err)?;
    let u = &uf.source;
    let two = u.find(Side::U, &set(5, &[2])).ok_or("{2} is not a region")?;
    let lhs = u.region(uf.map.apply(ug.map.apply(two))).members.to_vec();
    let rhs = u.region(ufg.map.apply(two)).members.to_vec();
    ensure(lhs == vec![0, 1, 2, 3] && rhs == vec![2], || format!("U(f)U(g)({{2}}) = {lhs:?}, U(fg)({{2}}) = {rhs:?}"))?;
    Ok(format!("U(f)U(g)({{2}}) = {lhs:?}, U(fg)({{2}}) = {rhs:?}"))
}

fn ex_2(_: u64) -> std::result::Result<String, String> {
    let x = Arc::new(catalog::ex_2());
    let swap = catalog::ex_2_swap(&x);
    let uf = induced_map(&swap, Family::U).map_err(err)?;
    let ff = induced_map(&swap, Family::F).map_err(err)?;
    ensure(uf.source.len() == 3, || format!("U(X) has {} regions", uf.source.len()))?;
    ensure(uf.source.order().minimum().is_some(), || "U(X) has no minimum".into())?;
    ensure(!swap.has_fixed_point(), || "the swap has a fixed point".into())?;
    ensure(uf.map.has_fixed_point(), || "U(f) is fixed-point-free".into())?;
    ensure(ff.map.has_fixed_point(), || "F(f) is fixed-point-free".into())?;
    Ok(format!(
        "U(f) fixes {} of 3 regions, F(f) fixes {} of {}",
        uf.map.fixed_points().len(),
        ff.map.fixed_points().len(),
        ff.source.len()
    ))
}

fn fpp_verdicts(_: u64) -> std::result::Result<String, String> {
    let mut instances: Vec<(String, FinitePoset, Verdict)> = vec![
        ("P3323".into(), catalog::p3323(), Verdict::HasFpp),
        ("P343_1".into(), catalog::p343_1(), Verdict::HasFpp),
        ("P343_2".into(), catalog::p343_2(), Verdict::HasFpp),
    ];
    for n in 4..=6 {
        for k in 2..n {
            instances.push((format!("X{n},{k}"), catalog::xnk(n, k).map_err(err)?, Verdict::HasFpp));
        }
    }
    for n in 2..=5 {
        instances.push((format!("crown{}", 2 * n), catalog::crown(n).map_err(err)?, Verdict::LacksFpp));
    }
    let mut slowest = Duration::ZERO;
    for (name, p, expected) in instances.iter() {
        let x = Arc::new(p.clone());
        let start = Instant::now();
        let cert = has_fpp(&x, Method::Brute).map_err(err)?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed <= secs(60), || format!("{name} took {elapsed:.2?}"))?;
        ensure(cert.verdict == *expected, || format!("{name}: {:?}", cert.verdict))?;
        if *expected == Verdict::LacksFpp {
            let w = cert.witness().ok_or_else(|| format!("{name}: no witness"))?;
            ensure(!w.has_fixed_point(), || format!("{name}: witness has a fixed point"))?;
        }
    }
    Ok(format!("{} instances, slowest {slowest:.2?}", instances.len()))
}

fn c_of_p343(_: u64) -> std::result::Result<String, String> {
    let c = CSpace::c_space(&Arc::new(catalog::p343_1()));
    ensure(homotopy_equivalent(c.order(), &catalog::p3323()), || "cores differ".into())?;
    Ok(format!("C(P343_1) has {} regions; cores isomorphic", c.len()))
}

fn p3323_families(_: u64) -> std::result::Result<String, String> {
    let x = Arc::new(catalog::p3323());
    let u = CSpace::u_family(&x);
    let f = CSpace::f_family(&x);
    ensure(u.len() == 7 && f.len() == 7, || format!("{} and {} regions", u.len(), f.len()))?;
    let min = u.order().minimum().map(|i| u.region(i).members.to_vec());
    ensure(min == Some(vec![0, 1, 2, 4, 5]), || format!("minimum of U: {min:?}"))?;
    let max = f.order().maximum().map(|i| f.region(i).members.to_vec());
    ensure(max == Some(vec![6, 7, 8, 9, 10]), || format!("maximum of F: {max:?}"))?;
    for (name, cs, odd) in [("U", &u, vec![0, 1, 2, 3, 4, 5]), ("F", &f, vec![3, 6, 7, 8, 9, 10])] {
        for r in cs.regions() {
            let contractible = is_contractible(&x.induced_subposet(&r.members).map_err(err)?);
            let expected = r.members.to_vec() != odd;
            ensure(contractible == expected, || format!("{name}-region {:?} contractible = {contractible}", r.members.to_vec()))?;
        }
    }
    Ok("7 + 7 regions, one non-contractible region on each side".into())
}

const XNK_SHAPES: [(usize, usize); 6] = [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 3)];

fn xnk_shape(_: u64) -> std::result::Result<String, String> {
    let shape = catalog::xnk_u_shape();
    for (n, k) in XNK_SHAPES {
        let start = Instant::now();
        let x = Arc::new(catalog::xnk(n, k).map_err(err)?);
        let u = CSpace::u_family(&x);
        ensure(are_isomorphic(u.order(), &shape), || format!("U(X{n},{k}) has the wrong shape"))?;
        let tops: BTreeSet<Vec<usize>> = x.maximal().iter().map(|a| x.down_set(a).to_vec()).collect();
        let rest: BTreeSet<Vec<usize>> =
            u.regions().iter().map(|r| r.members.to_vec()).filter(|m| !tops.contains(m)).collect();
        let expected: BTreeSet<Vec<usize>> = catalog::xnk_regions(n, k).map_err(err)?.iter().map(|s| s.to_vec()).collect();
        ensure(rest == expected, || format!("X{n},{k}: regions {rest:?}, expected {expected:?}"))?;
        ensure(start.elapsed() <= secs(5), || format!("X{n},{k} took {:.2?}", start.elapsed()))?;
    }
    Ok(format!("{} spaces match", XNK_SHAPES.len()))
}

fn xnk_cardinalities(_: u64) -> std::result::Result<String, String> {
    let mut count = 0;
    for n in 4..=8 {
        for k in 2..n {
            let x = Arc::new(catalog::xnk(n, k).map_err(err)?);
            let u = CSpace::u_family(&x);
            let [a, b, ..] = catalog::xnk_regions(n, k).map_err(err)?;
            for r in [&a, &b] {
                ensure(u.find(Side::U, r).is_some(), || format!("X{n},{k}: {:?} is not a region", r.to_vec()))?;
            }
            let (a, b) = (a.len(), b.len());
            ensure(a == 2 * n - 3 && a > n - k + 2 && n - k + 2 >= b, || format!("X{n},{k}: #A = {a}, #B = {b}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs (n, k) with 4 <= n <= 8"))
}

fn crown_lemma(_: u64) -> std::result::Result<String, String> {
    let mut parts = Vec::new();
    for n in 2..=4 {
        let c = Arc::new(catalog::crown(n).map_err(err)?);
        let report = check_crown_lemma(&c).map_err(err)?;
        ensure(report.violations == 0, || format!("{} fixed-point-free non-bijections on the {}-crown", report.violations, 2 * n))?;
        parts.push(format!("{}-crown: {} non-bijective maps", 2 * n, report.non_bijective));
    }
    Ok(parts.join(", "))
}

fn lemma_blocks(_: u64) -> std::result::Result<String, String> {
    let mut parts = Vec::new();
    for (name, p) in [("lemma-A", catalog::lemma_a()), ("lemma-B", catalog::lemma_b())] {
        let x = Arc::new(p);
        let report = check_block_preserved(&x, &set(x.len(), &[3, 4, 5])).map_err(err)?;
        ensure(report.violations == 0, || format!("{name}: {} violations", report.violations))?;
        parts.push(format!("{name}: {} fixed-point-free maps", report.fixed_point_free_maps));
    }
    Ok(parts.join(", "))
}

fn property_suite(seed: u64) -> std::result::Result<String, String> {
    let densities = [0.15, 0.3, 0.45, 0.6, 0.8];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..PROPERTY_SAMPLES {
        let n = 2 + (i as usize % 7);
        let density = densities[(i / 7) as usize % densities.len()];
        let x = Arc::new(random_poset(n, density, seed.wrapping_add(i), true).map_err(err)?);
        let failures = laws::check_all(&x, &mut rng);
        if let Some((law, why)) = failures.first() {
            return Err(format!("sample {i} (covers {:?}): {law}: {why}", x.covers()));
        }
    }
    Ok(format!("{PROPERTY_SAMPLES} posets x {} laws, seed {seed}", laws::LAWS.len()))
}

fn bp_counterexamples(_: u64) -> std::result::Result<String, String> {
    let x = Arc::new(catalog::ex_fig3());
    let mut rest = x.full_set();
    rest.remove(4);
    let r = is_dbp_retract(&x, &rest).map_err(err)?.ok_or("X - {4} is not a dbp-retract")?;
    let u = CSpace::u_family(&x);
    let ua = CSpace::u_family(&r.subspace);
    let ur = induced_between(&r.retraction, &u, &ua).map_err(err)?;
    let c = u.find(Side::U, &set(5, &[0, 2, 4])).ok_or("{0,2,4} is not a region")?;
    let image: Vec<usize> = ua.region(ur.apply(c)).members.iter().map(|e| r.members[e]).collect();
    let plain = r.idempotent().image_of(&set(5, &[0, 2, 4])).to_vec();
    ensure(image == vec![0, 1, 2, 3] && image != plain, || format!("U(r)({{0,2,4}}) = {image:?}, r({{0,2,4}}) = {plain:?}"))?;

    let y = catalog::ex_fig4();
    let mut rest = y.full_set();
    rest.remove(1);
    let uy = CSpace::u_family(&Arc::new(y.clone()));
    let uy1 = CSpace::u_family(&Arc::new(y.induced_subposet(&rest).map_err(err)?));
    ensure(!are_isomorphic(uy.order(), uy1.order()), || "U(X) and U(X - {1}) are isomorphic".into())?;
    Ok(format!(
        "U(r)({{0,2,4}}) = {image:?} vs r({{0,2,4}}) = {plain:?}; |U(X)| = {}, |U(X - {{1}})| = {}",
        uy.len(),
        uy1.len()
    ))
}
