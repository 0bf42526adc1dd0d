//! Named example spaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::MonotoneMap;
use crate::poset::{numeric_labels, FinitePoset};
use crate::set::ElemSet;

/// Catalog ids understood by [`by_name`].
pub const NAMES: &[&str] = &[
    "ex-easy",
    "ex-nonfunctorial",
    "ex-2",
    "ex-fig3",
    "ex-fig4",
    "ex-step1",
    "lemma-A",
    "lemma-B",
    "P3323",
    "P343_1",
    "P343_2",
    "crown",
    "Xnk",
];

fn numeric(n: usize, covers: &[(usize, usize)]) -> FinitePoset {
    FinitePoset::from_index_covers(numeric_labels(n), covers).expect("catalog spaces are posets")
}

pub fn ex_easy() -> FinitePoset {
    numeric(5, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)])
}

pub fn ex_nonfunctorial() -> FinitePoset {
    numeric(5, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)])
}

/// The pair `(f, g)` on [`ex_nonfunctorial`] with `𝒰(fg) ≠ 𝒰(f)𝒰(g)`.
pub fn nonfunctorial_maps(x: &Arc<FinitePoset>) -> (MonotoneMap, MonotoneMap) {
    let f = MonotoneMap::new(x.clone(), x.clone(), vec![2, 3, 3, 3, 3]).expect("f is monotone");
    let g = MonotoneMap::constant(x.clone(), x.clone(), 0).expect("constants are monotone");
    (f, g)
}

pub fn ex_2() -> FinitePoset {
    numeric(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)])
}

/// `0↔1, 2↔3, 4↔5` on [`ex_2`].
pub fn ex_2_swap(x: &Arc<FinitePoset>) -> MonotoneMap {
    MonotoneMap::new(x.clone(), x.clone(), vec![1, 0, 3, 2, 5, 4]).expect("the swap is monotone")
}

pub fn ex_fig3() -> FinitePoset {
    numeric(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)])
}

pub fn ex_fig4() -> FinitePoset {
    numeric(5, &[(0, 1), (0, 2), (1, 3), (1, 4)])
}

/// The twelve-point space obtained from 𝒞(P343_1) after removing the
/// minimal 𝒰-regions and maximal ℱ-regions; label `a` is a down beat point.
pub fn ex_step1() -> FinitePoset {
    let labels = ["0", "1", "2", "3", "4", "5", "9", "10", "a", "12", "13", "14"];
    let covers = [
        ("0", "3"),
        ("0", "4"),
        ("1", "3"),
        ("1", "5"),
        ("2", "4"),
        ("2", "5"),
        ("3", "9"),
        ("5", "9"),
        ("5", "10"),
        ("3", "10"),
        ("4", "a"),
        ("9", "12"),
        ("9", "13"),
        ("10", "12"),
        ("10", "14"),
        ("a", "13"),
        ("a", "14"),
    ];
    FinitePoset::new(&labels, &covers).expect("catalog spaces are posets")
}

pub fn lemma_a() -> FinitePoset {
    numeric(
        9,
        &[(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (3, 7), (4, 6), (4, 8), (5, 7), (5, 8)],
    )
}

pub fn lemma_b() -> FinitePoset {
    numeric(
        9,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 6),
            (3, 7),
            (4, 6),
            (4, 8),
            (5, 7),
            (5, 8),
        ],
    )
}

pub fn p3323() -> FinitePoset {
    numeric(
        11,
        &[
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 8),
            (3, 10),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 8),
            (6, 9),
            (7, 9),
            (7, 10),
        ],
    )
}

const P343_BOTTOM: [(usize, usize); 10] =
    [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 6), (1, 7), (2, 5), (2, 6), (2, 7)];

pub fn p343_1() -> FinitePoset {
    let mut covers = P343_BOTTOM.to_vec();
    covers.extend([(3, 8), (4, 8), (6, 8), (7, 8), (3, 9), (5, 9), (7, 9), (4, 10), (5, 10), (6, 10)]);
    numeric(11, &covers)
}

pub fn p343_2() -> FinitePoset {
    let mut covers = P343_BOTTOM.to_vec();
    covers.extend([(3, 8), (4, 8), (6, 8), (3, 9), (5, 9), (6, 9), (7, 9), (4, 10), (5, 10), (7, 10)]);
    numeric(11, &covers)
}

/// The `2n`-crown with lower points `1..n` and upper points `n+1..2n`.
/// Upper point `j` sits over lower points `j-1` and `j+1`, clamped at the ends.
pub fn crown(n: usize) -> Result<FinitePoset> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("crown order {n} < 2")));
    }
    let labels = (1..=2 * n).map(|i| i.to_string()).collect();
    let mut covers = Vec::with_capacity(2 * n);
    for (c1, c2) in crown_pairs(n) {
        let j = covers.len() / 2;
        covers.push((c1, n + j));
        covers.push((c2, n + j));
    }
    FinitePoset::from_index_covers(labels, &covers)
}

/// Lower neighbours (0-based) of each upper crown point.
fn crown_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|j| match j {
            0 => (0, 1),
            j if j == n - 1 => (n - 2, n - 1),
            j => (j - 1, j + 1),
        })
        .collect()
}

fn check_xnk(n: usize, k: usize) -> Result<()> {
    if n < 4 || k < 2 || k > n - 1 {
        return Err(Error::InvalidParameter(format!("X_{{n,k}} needs n >= 4 and 2 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

/// Indices in [`xnk`]: `c_j` is `j-1`, `b_j` is `n+j-1`, `a_i` is `2n+i-1`.
pub struct XnkIndex {
    pub n: usize,
}

impl XnkIndex {
    pub fn c(&self, j: usize) -> usize {
        j - 1
    }
    pub fn b(&self, j: usize) -> usize {
        self.n + j - 1
    }
    pub fn a(&self, i: usize) -> usize {
        2 * self.n + i - 1
    }
}

/// `X_{n,k}`, built from its minimal open sets.
pub fn xnk(n: usize, k: usize) -> Result<FinitePoset> {
    check_xnk(n, k)?;
    let ix = XnkIndex { n };
    let size = 2 * n + 3;
    let mut labels: Vec<String> = (1..=n).map(|j| format!("c{j}")).collect();
    labels.extend((1..=n).map(|j| format!("b{j}")));
    labels.extend((1..=3).map(|i| format!("a{i}")));

    let mut down = vec![ElemSet::empty(size); size];
    for j in 1..=n {
        down[ix.c(j)].insert(ix.c(j));
    }
    for (j, (c1, c2)) in crown_pairs(n).into_iter().enumerate() {
        let b = ix.b(j + 1);
        down[b] = ElemSet::from_indices(size, [b, c1, c2]);
    }
    let all_c = 1..=n;
    let a1 = (1..n).map(|j| ix.b(j)).chain(all_c.clone().map(|j| ix.c(j)));
    let a2 = (1..=n).filter(|&j| j != n - 1).map(|j| ix.b(j)).chain(all_c.map(|j| ix.c(j)));
    let a3 = (k..=n).map(|j| ix.b(j)).chain((k - 1..=n).map(|j| ix.c(j)));
    for (i, members) in [a1.collect::<Vec<_>>(), a2.collect(), a3.collect()].into_iter().enumerate() {
        let a = ix.a(i + 1);
        down[a] = ElemSet::from_indices(size, members.into_iter().chain([a]));
    }
    FinitePoset::from_down_sets(labels, down)
}

/// The six non-top regions `A..F` of 𝒰(X_{n,k}), in that order.
pub fn xnk_regions(n: usize, k: usize) -> Result<[ElemSet; 6]> {
    check_xnk(n, k)?;
    let ix = XnkIndex { n };
    let size = 2 * n + 3;
    let par = |j: usize| j % 2 == n % 2;
    let set = |bs: Vec<usize>, cs: Vec<usize>| {
        ElemSet::from_indices(size, bs.into_iter().map(|j| ix.b(j)).chain(cs.into_iter().map(|j| ix.c(j))))
    };
    let a = set((1..=n - 2).collect(), (1..n).collect());
    let b = set((k..=n).filter(|&j| !par(j)).collect(), (k - 1..=n).filter(|&j| par(j)).collect());
    let mut c_lower: Vec<usize> = (k - 1..=n).filter(|&j| !par(j)).collect();
    c_lower.push(n);
    let c = set((k..=n).filter(|&j| par(j)).collect(), c_lower);
    let d = set(
        (k..=n.saturating_sub(3)).filter(|&j| !par(j)).collect(),
        (k - 1..=n - 2).filter(|&j| par(j)).collect(),
    );
    let e = set((k..=n - 2).filter(|&j| par(j)).collect(), (k - 1..n).filter(|&j| !par(j)).collect());
    let f = set(vec![], vec![n]);
    Ok([a, b, c, d, e, f])
}

/// The shape of 𝒰(X_{n,k}): three tops `Ua1, Ua2, Ua3` over `A, B, C`, which
/// lie over `D, E, F`. Indices: `0..3` = `D, E, F`, `3..6` = `A, B, C`, `6..9`
/// = tops.
pub fn xnk_u_shape() -> FinitePoset {
    let labels = ["D", "E", "F", "A", "B", "C", "Ua1", "Ua2", "Ua3"];
    let covers = [
        ("D", "A"),
        ("D", "B"),
        ("E", "A"),
        ("E", "C"),
        ("F", "B"),
        ("F", "C"),
        ("A", "Ua1"),
        ("A", "Ua2"),
        ("B", "Ua1"),
        ("B", "Ua3"),
        ("C", "Ua2"),
        ("C", "Ua3"),
    ];
    FinitePoset::new(&labels, &covers).expect("catalog spaces are posets")
}

/// Looks up a catalog space. `crown` takes `n`; `Xnk` takes `n k`.
pub fn by_name(name: &str, params: &[usize]) -> Result<FinitePoset> {
    let arity = match name {
        "crown" => 1,
        "Xnk" => 2,
        _ => 0,
    };
    if params.len() != arity {
        return Err(Error::InvalidParameter(format!("{name} takes {arity} parameter(s), got {}", params.len())));
    }
    Ok(match name {
        "ex-easy" => ex_easy(),
        "ex-nonfunctorial" => ex_nonfunctorial(),
        "ex-2" => ex_2(),
        "ex-fig3" => ex_fig3(),
        "ex-fig4" => ex_fig4(),
        "ex-step1" => ex_step1(),
        "lemma-A" => lemma_a(),
        "lemma-B" => lemma_b(),
        "P3323" => p3323(),
        "P343_1" => p343_1(),
        "P343_2" => p343_2(),
        "crown" => crown(params[0])?,
        "Xnk" => xnk(params[0], params[1])?,
        other => return Err(Error::InvalidParameter(format!("unknown catalog id {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn sizes() {
        let expected = [
            ("ex-easy", 5, 5),
            ("ex-nonfunctorial", 5, 5),
            ("ex-2", 6, 8),
            ("ex-fig3", 5, 5),
            ("ex-fig4", 5, 4),
            ("ex-step1", 12, 17),
            ("lemma-A", 9, 12),
            ("lemma-B", 9, 14),
            ("P3323", 11, 16),
            ("P343_1", 11, 20),
            ("P343_2", 11, 20),
        ];
        for (name, n, c) in expected {
            let p = by_name(name, &[]).unwrap();
            assert_eq!((p.len(), p.covers().len()), (n, c), "{name}");
        }
    }

    #[test]
    fn crowns() {
        let k22 = FinitePoset::from_index_covers(numeric_labels(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(are_isomorphic(&crown(2).unwrap(), &k22));
        for n in 2..7 {
            let c = crown(n).unwrap();
            assert_eq!(c.covers().len(), 2 * n);
            assert!(c.is_connected());
            assert!((0..2 * n).all(|x| c.comparability_set(x).len() == 3));
        }
        assert!(crown(1).is_err());
    }

    #[test]
    fn xnk_shape() {
        let x = xnk(4, 2).unwrap();
        assert_eq!(x.len(), 11);
        assert_eq!(x.set_labels(&x.maximal()), vec!["a1", "a2", "a3"]);
        assert_eq!(x.set_labels(&x.minimal()), vec!["c1", "c2", "c3", "c4"]);
        let ix = XnkIndex { n: 4 };
        assert_eq!(x.down_set(ix.a(3)).len(), 1 + 3 + 4);
        assert!(xnk(3, 2).is_err());
        assert!(xnk(5, 5).is_err());
        assert!(xnk(5, 1).is_err());
        assert!(by_name("Xnk", &[4]).is_err());
        assert!(by_name("nope", &[]).is_err());
    }

    #[test]
    fn xnk_shape_is_lemma_a() {
        assert!(are_isomorphic(&xnk_u_shape(), &lemma_a()));
    }
}
