//! Plain-text reports printed by the subcommands.

use std::fmt::Write;
use std::sync::Arc;

use fintop::fpp::{Evidence, FppCertificate, Verdict};
use fintop::grothendieck::{build_integral, verify_integral_identities};
use fintop::homotopy::{find_beat_points, is_contractible, BeatKind};
use fintop::{cspace::region_label, CSpace, Family, FinitePoset, MonotoneMap};

fn labels(p: &FinitePoset, s: &fintop::ElemSet) -> String {
    p.set_labels(s).join(" ")
}

pub fn info(name: &str, p: &FinitePoset) -> String {
    let mut out = String::new();
    if !name.is_empty() {
        writeln!(out, "name: {name}").unwrap();
    }
    writeln!(out, "elements: {}", p.len()).unwrap();
    writeln!(out, "covers: {}", p.covers().len()).unwrap();
    writeln!(out, "height: {}", p.height()).unwrap();
    writeln!(out, "maximal: {}", labels(p, &p.maximal())).unwrap();
    writeln!(out, "minimal: {}", labels(p, &p.minimal())).unwrap();
    writeln!(out, "connected: {}", p.is_connected()).unwrap();
    let beats: Vec<String> = find_beat_points(p)
        .iter()
        .map(|b| {
            let kind = match b.kind {
                BeatKind::Down => "down",
                BeatKind::Up => "up",
            };
            format!("{} ({kind}, via {})", p.label(b.element), p.label(b.witness))
        })
        .collect();
    writeln!(out, "beat points: {}", if beats.is_empty() { "none".to_string() } else { beats.join(", ") }).unwrap();
    writeln!(out, "contractible: {}", is_contractible(p)).unwrap();
    out
}

pub fn family_name(family: Family) -> &'static str {
    match family {
        Family::U => "U",
        Family::F => "F",
        Family::C => "C",
    }
}

/// Regions with their side tags, then the covers between them.
pub fn cspace(c: &CSpace) -> String {
    let mut out = String::new();
    writeln!(out, "{}(X): {} regions", family_name(c.family()), c.len()).unwrap();
    if c.has_overlap() {
        writeln!(out, "warning: the U- and F-families share a subset").unwrap();
    }
    for r in c.regions() {
        writeln!(out, "  {}", region_label(c.ambient(), r)).unwrap();
    }
    writeln!(out, "covers:").unwrap();
    for &(a, b) in c.order().covers() {
        writeln!(out, "  {} < {}", c.label(a), c.label(b)).unwrap();
    }
    out
}

pub fn map(f: &MonotoneMap) -> String {
    let (s, t) = (f.source(), f.target());
    (0..s.len()).map(|x| format!("{}->{}", s.label(x), t.label(f.apply(x)))).collect::<Vec<_>>().join(" ")
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::HasFpp => "has the fixed point property",
        Verdict::LacksFpp => "lacks the fixed point property",
    }
}

fn certificate_into(out: &mut String, cert: &FppCertificate, depth: usize) {
    let pad = "  ".repeat(depth);
    let reason = match &cert.evidence {
        Evidence::MaxOrMin => "it has a maximum or a minimum".to_string(),
        Evidence::Contractible => "it is contractible".to_string(),
        Evidence::BruteForceExhausted { nodes } => {
            format!("no fixed-point-free monotone map exists ({nodes} search nodes)")
        }
        Evidence::Witness(w) => format!("fixed-point-free map {}", map(w)),
        Evidence::CCriterion { family, .. } => {
            format!("{}(X) and all of its regions have the fixed point property", family_name(*family))
        }
    };
    writeln!(out, "{pad}{}: {reason}", verdict(cert.verdict)).unwrap();
    if let Evidence::CCriterion { family, space, regions } = &cert.evidence {
        writeln!(out, "{pad}  {}(X):", family_name(*family)).unwrap();
        certificate_into(out, space, depth + 2);
        for (r, sub) in regions {
            let members: Vec<String> = r.members.iter().map(|e| e.to_string()).collect();
            writeln!(out, "{pad}  region {}{{{}}}:", r.side.tag(), members.join(",")).unwrap();
            certificate_into(out, sub, depth + 2);
        }
    }
}

pub fn certificate(cert: &FppCertificate) -> String {
    let mut out = String::new();
    certificate_into(&mut out, cert, 0);
    out
}

pub fn grothendieck(x: &Arc<FinitePoset>) -> String {
    let integral = build_integral(x);
    let report = verify_integral_identities(x);
    let mut out = String::new();
    writeln!(out, "elements: {}", integral.poset.len()).unwrap();
    writeln!(out, "  {}", integral.poset.labels().join(" ")).unwrap();
    writeln!(out, "covers:").unwrap();
    for &(a, b) in integral.poset.covers() {
        writeln!(out, "  {} < {}", integral.poset.label(a), integral.poset.label(b)).unwrap();
    }
    let checks = [
        ("size and maximal elements", report.shape_ok),
        ("rho iota = id, iota rho <= id", report.retraction_ok),
        ("iota(X) is a dbp-retract", report.dbp_retract),
        ("U(iota) is an isomorphism", report.u_iota_iso),
        ("U(iota)(C) = {(D,x) : D in C}", report.u_iota_tilde),
        ("phi U(q) = U(rho)", report.triangle_commutes),
        ("homotopy equivalent to X", report.homotopy_equivalent),
        ("q is a quotient onto U(X)", report.quotient_ok),
    ];
    writeln!(out, "checks:").unwrap();
    for (name, ok) in checks {
        writeln!(out, "  {} {name}", if ok { "ok  " } else { "FAIL" }).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fintop::catalog;
    use fintop::fpp::{has_fpp, Method};

    #[test]
    fn info_lists_beat_points() {
        let text = info("ex-easy", &catalog::ex_easy());
        assert!(text.contains("elements: 5\n"));
        assert!(text.contains("beat points: 2 (down, via 0)"));
        assert!(text.contains("contractible: false"));
    }

    #[test]
    fn witness_is_printed() {
        let c = Arc::new(catalog::crown(3).unwrap());
        let text = certificate(&has_fpp(&c, Method::Brute).unwrap());
        assert!(text.starts_with("lacks the fixed point property: fixed-point-free map 1->"));
    }

    #[test]
    fn integral_report_passes_on_ex_easy() {
        let text = grothendieck(&Arc::new(catalog::ex_easy()));
        assert!(text.contains("elements: 10"));
        assert!(!text.contains("FAIL"));
    }
}
