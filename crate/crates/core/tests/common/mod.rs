//! Shared brute-force oracles and group lists for the integration tests.

#![allow(dead_code)]

use group_terwilliger::catalog::*;
use group_terwilliger::group::{cyclic, FiniteGroup};
use group_terwilliger::linalg::Rat;
use group_terwilliger::scheme::GroupScheme;
use num_traits::Zero;

pub const MAX: usize = 512;

/// Every group of order at most 24 the catalog can build, duplicates allowed.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=24).map(cyclic).collect();
    for orders in [
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![3, 3],
        vec![2, 6],
        vec![2, 2, 4],
        vec![2, 8],
        vec![4, 4],
        vec![2, 2, 2, 2],
        vec![2, 10],
        vec![2, 2, 6],
        vec![2, 12],
    ] {
        out.push(abelian(&orders, MAX).unwrap());
    }
    for n in 3..=12 {
        out.push(dihedral(n, MAX).unwrap());
    }
    out.push(symmetric(3, MAX).unwrap());
    out.push(symmetric(4, MAX).unwrap());
    out.push(quaternion8());
    out.push(dihedral8());
    for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
        out.push(frobenius_field_group(p, r, MAX).unwrap());
    }
    for (m, k, r) in [(3, 4, 2), (5, 4, 2), (5, 4, 3), (7, 3, 2), (4, 2, 3), (8, 2, 3), (8, 2, 5), (3, 8, 2)] {
        out.push(metacyclic(m, k, r, MAX).unwrap());
    }
    out
}

/// `p_ij^k` from the relation definition: for every pair `(x, y)` count the
/// `w` with `(x, w)` in `R_i` and `(w, y)` in `R_j`, where `(x, y)` is in `R_k`
/// iff `y x^-1` lies in class `k`. Every pair in `R_k` must give the same count.
pub fn brute_force_tensor(g: &FiniteGroup, class_of: &[usize], r: usize) -> Vec<Vec<Vec<u64>>> {
    let n = g.order();
    let rel = |x: usize, y: usize| class_of[g.mul(y, g.inv(x))];
    let mut p: Vec<Vec<Vec<Option<u64>>>> = vec![vec![vec![None; r]; r]; r];
    for x in 0..n {
        for y in 0..n {
            let k = rel(x, y);
            let mut counts = vec![vec![0u64; r]; r];
            for w in 0..n {
                counts[rel(x, w)][rel(w, y)] += 1;
            }
            for i in 0..r {
                for j in 0..r {
                    match p[i][j][k] {
                        None => p[i][j][k] = Some(counts[i][j]),
                        Some(prev) => assert_eq!(prev, counts[i][j], "relation count depends on the pair"),
                    }
                }
            }
        }
    }
    p.into_iter()
        .map(|a| a.into_iter().map(|b| b.into_iter().map(|c| c.unwrap()).collect()).collect())
        .collect()
}

pub fn class_index(s: &GroupScheme) -> Vec<usize> {
    (0..s.order()).map(|x| s.partition().class_of(x)).collect()
}

/// Rank by plain Gaussian elimination on a row list, no shared code with the library.
pub fn naive_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() / pivot.clone();
                for cc in c..cols {
                    let v = m[rank][cc].clone() * f.clone();
                    m[r][cc] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn naive_in_span(rows: &[Vec<Rat>], v: &[Rat]) -> bool {
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    naive_rank(&with) == naive_rank(rows)
}

/// Library class indices in the reference labelling:
/// `C0 = {e}`, `C1` the class of the central involution of Q8, `C2 = H \ {e}`,
/// `C3`, `C4`, `C5` the classes of `ab`, `a`, `b`.
pub fn reference_labels(s: &GroupScheme) -> [usize; 6] {
    let (_, k, _) = three2_q8_parts();
    let q = &k.group;
    let gen = |s_idx: usize| {
        (0..q.order())
            .find(|&x| k.parent[x] == Some((q.identity(), s_idx)))
            .unwrap()
    };
    let (a, b) = (gen(0), gen(1));
    let c = q.mul(a, a);
    let ab = q.mul(a, b);
    let element = |h: usize, kk: usize| h * q.order() + kk;
    let class = |x: usize| s.partition().class_of(x);
    [
        class(element(0, q.identity())),
        class(element(0, c)),
        class(element(1, q.identity())),
        class(element(0, ab)),
        class(element(0, a)),
        class(element(0, b)),
    ]
}

/// `C_i C_j` for `i <= j` as coefficients on `C_0..C_5`.
pub const REFERENCE_TABLE: [(usize, usize, [u64; 6]); 21] = [
    (0, 0, [1, 0, 0, 0, 0, 0]),
    (0, 1, [0, 1, 0, 0, 0, 0]),
    (0, 2, [0, 0, 1, 0, 0, 0]),
    (0, 3, [0, 0, 0, 1, 0, 0]),
    (0, 4, [0, 0, 0, 0, 1, 0]),
    (0, 5, [0, 0, 0, 0, 0, 1]),
    (1, 1, [9, 0, 9, 0, 0, 0]),
    (1, 2, [0, 8, 0, 0, 0, 0]),
    (1, 3, [0, 0, 0, 9, 0, 0]),
    (1, 4, [0, 0, 0, 0, 9, 0]),
    (1, 5, [0, 0, 0, 0, 0, 9]),
    (2, 2, [8, 0, 7, 0, 0, 0]),
    (2, 3, [0, 0, 0, 8, 0, 0]),
    (2, 4, [0, 0, 0, 0, 8, 0]),
    (2, 5, [0, 0, 0, 0, 0, 8]),
    (3, 3, [18, 18, 18, 0, 0, 0]),
    (3, 4, [0, 0, 0, 0, 0, 18]),
    (3, 5, [0, 0, 0, 0, 18, 0]),
    (4, 4, [18, 18, 18, 0, 0, 0]),
    (4, 5, [0, 0, 0, 18, 0, 0]),
    (5, 5, [18, 18, 18, 0, 0, 0]),
];

