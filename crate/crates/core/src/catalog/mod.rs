//! Concrete groups used throughout: the Frobenius groups of finite fields,
//! the order-72 group `(Z3 x Z3) ⋊ Q8`, the two extraspecial groups of order
//! `p^3`, and a few small families for experiments.

mod field;
mod spec;

pub use field::{is_prime, make_field, FieldSpec};
pub use spec::GroupSpec;

use crate::error::{Error, Result};
use crate::group::{
    cyclic, direct_product, group_from_permutations_bounded, semidirect_product, FiniteGroup,
    PermutationClosure,
};

fn check_order(n: usize, max_order: usize) -> Result<()> {
    if n > max_order {
        return Err(Error::ClosureLimitExceeded {
            reached: n,
            max: max_order,
        });
    }
    Ok(())
}

fn odd_prime(p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::PreconditionUnmet("an odd prime is required".into()));
    }
    Ok(p as usize)
}

/// The additive group of the field, indexed like the field elements.
pub fn additive_group(field: &FieldSpec) -> FiniteGroup {
    let q = field.size();
    let mul = (0..q * q).map(|ab| field.add(ab / q, ab % q)).collect();
    FiniteGroup::from_flat(q, mul, format!("Z{}^{}", field.p, field.r))
        .expect("field addition is a group")
}

/// `F_q ⋊ F_q^*` with `k` acting as multiplication by `g^k`, `q = p^r`.
/// Elements are `h * (q - 1) + k` for field element `h` and exponent `k`.
pub fn frobenius_field_group(p: u64, r: u32, max_order: usize) -> Result<FiniteGroup> {
    let field = make_field(p, r, max_order)?;
    let q = field.size();
    check_order(q * (q - 1), max_order)?;
    let h = additive_group(&field);
    let k = cyclic(q - 1);
    let mut action = Vec::with_capacity(q - 1);
    let mut scalar = 1usize;
    for _ in 0..q - 1 {
        action.push((0..q).map(|x| field.mul(scalar, x)).collect::<Vec<_>>());
        scalar = field.mul(scalar, field.generator);
    }
    Ok(semidirect_product(&h, &k, &action, max_order)?.with_label(format!("F{q}:F{q}*")))
}

/// Ingredients of `(Z3 x Z3) ⋊ Q8`: the normal subgroup `H` (element
/// `3a + b` is the vector `x^a y^b`), `Q8` as permutations of `H`, and the
/// action table indexed by `Q8` elements. `Q8` is generated by `a` (index 1)
/// and `b` (index 2) with `x^a = x y^2, y^a = x^2 y^2, x^b = y, y^b = x^2`.
pub fn three2_q8_parts() -> (FiniteGroup, PermutationClosure, Vec<Vec<usize>>) {
    let h = direct_product(&cyclic(3), &cyclic(3), 9).expect("order 9");
    let linear = |m: [[usize; 2]; 2]| -> Vec<usize> {
        (0..9)
            .map(|v| {
                let (a, b) = (v / 3, v % 3);
                let na = (m[0][0] * a + m[0][1] * b) % 3;
                let nb = (m[1][0] * a + m[1][1] * b) % 3;
                3 * na + nb
            })
            .collect()
    };
    // columns are the images of x = (1,0) and y = (0,1)
    let gen_a = linear([[1, 2], [2, 2]]);
    let gen_b = linear([[0, 2], [1, 0]]);
    let k = group_from_permutations_bounded(&[gen_a, gen_b], 8).expect("Q8 has order 8");
    let action = k.perms.clone();
    (h, k, action)
}

pub fn three2_q8() -> FiniteGroup {
    let (h, k, action) = three2_q8_parts();
    semidirect_product(&h, &k.group, &action, 72)
        .expect("Q8 acts by automorphisms")
        .with_label("(Z3xZ3):Q8")
}

pub fn quaternion8() -> FiniteGroup {
    three2_q8_parts().1.group.with_label("Q8")
}

pub fn dihedral8() -> FiniteGroup {
    dihedral(4, 8).expect("order 8").with_label("D8")
}

/// Upper unitriangular 3x3 matrices over `F_p`; `(a, b, c)` is stored at
/// `a p^2 + b p + c` and multiplies as `(a+a', b+b', c+c'+ab')`.
pub fn heisenberg(p: u64, max_order: usize) -> Result<FiniteGroup> {
    let p = odd_prime(p)?;
    let n = p * p * p;
    check_order(n, max_order)?;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b, c) = split(x);
        for y in 0..n {
            let (a2, b2, c2) = split(y);
            mul.push(((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p);
        }
    }
    FiniteGroup::from_flat(n, mul, format!("Heis({p})"))
}

/// `Z_{p^2} ⋊ Z_p` with the generator acting by `h -> (1 + p) h`.
pub fn extraspecial_exp_p2(p: u64, max_order: usize) -> Result<FiniteGroup> {
    let p = odd_prime(p)?;
    check_order(p * p * p, max_order)?;
    Ok(metacyclic(p * p, p, 1 + p, max_order)?.with_label(format!("{p}^(1+2)_-")))
}

/// `Z_m ⋊ Z_k` with the generator of `Z_k` acting by `h -> r h`.
pub fn metacyclic(m: usize, k: usize, r: usize, max_order: usize) -> Result<FiniteGroup> {
    if m == 0 || k == 0 {
        return Err(Error::PreconditionUnmet("cyclic factors must be nontrivial".into()));
    }
    check_order(m * k, max_order)?;
    let mut action = Vec::with_capacity(k);
    let mut scalar = 1 % m;
    for _ in 0..k {
        action.push((0..m).map(|x| x * scalar % m).collect::<Vec<_>>());
        scalar = scalar * (r % m) % m;
    }
    if scalar != 1 % m {
        return Err(Error::ActionNotHomomorphism { k1: k - 1, k2: 1 });
    }
    Ok(semidirect_product(&cyclic(m), &cyclic(k), &action, max_order)?
        .with_label(format!("Z{m}:Z{k}")))
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::PreconditionUnmet("dihedral groups need n >= 3".into()));
    }
    check_order(2 * n, max_order)?;
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    Ok(group_from_permutations_bounded(&[rotation, reflection], max_order)?
        .group
        .with_label(format!("D{}", 2 * n)))
}

pub fn symmetric(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::PreconditionUnmet("symmetric groups need n >= 1".into()));
    }
    let order = (1..=n).try_fold(1usize, |acc, i| acc.checked_mul(i));
    if order.is_none_or(|o| o > max_order) {
        return Err(Error::ClosureLimitExceeded {
            reached: order.unwrap_or(usize::MAX),
            max: max_order,
        });
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    if n > 1 {
        swap.swap(0, 1);
    }
    Ok(group_from_permutations_bounded(&[cycle, swap], max_order)?
        .group
        .with_label(format!("S{n}")))
}

/// Direct product of cyclic groups, first factor most significant.
pub fn abelian(orders: &[usize], max_order: usize) -> Result<FiniteGroup> {
    if orders.contains(&0) {
        return Err(Error::PreconditionUnmet("cyclic factors must have order >= 1".into()));
    }
    let total = orders.iter().try_fold(1usize, |acc, &o| acc.checked_mul(o));
    check_order(total.unwrap_or(usize::MAX), max_order)?;
    let mut g = cyclic(1);
    for (i, &o) in orders.iter().enumerate() {
        g = if i == 0 {
            cyclic(o)
        } else {
            direct_product(&g, &cyclic(o), max_order)?
        };
    }
    let label = if orders.is_empty() {
        "1".to_string()
    } else {
        orders.iter().map(|o| format!("Z{o}")).collect::<Vec<_>>().join("x")
    };
    Ok(g.with_label(label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, conjugacy_classes, derived_subgroup, DEFAULT_MAX_ORDER};

    const M: usize = DEFAULT_MAX_ORDER;

    #[test]
    fn frobenius_orders() {
        for (p, r, n) in [(2, 1, 2), (2, 2, 12), (3, 1, 6), (3, 2, 72), (5, 1, 20), (2, 3, 56)] {
            let g = frobenius_field_group(p, r, M).unwrap();
            assert_eq!(g.order(), n);
            g.verify_axioms().unwrap();
        }
    }

    #[test]
    fn frobenius_classes() {
        // q - 1 nonidentity translations form one class; q - 2 more of size q
        let g = frobenius_field_group(3, 2, M).unwrap();
        let sizes = conjugacy_classes(&g).sizes();
        assert_eq!(sizes.len(), 9);
        assert_eq!(sizes.iter().filter(|&&s| s == 9).count(), 7);
        assert_eq!(sizes.iter().filter(|&&s| s == 8).count(), 1);
    }

    #[test]
    fn three2_q8_shape() {
        let g = three2_q8();
        assert_eq!(g.order(), 72);
        g.verify_axioms().unwrap();
        assert_eq!(conjugacy_classes(&g).sizes(), vec![1, 8, 9, 18, 18, 18]);
        assert_eq!(derived_subgroup(&g).order(), 18);
        assert!(center(&g).is_trivial());
    }

    #[test]
    fn q8_and_d8() {
        let q = quaternion8();
        assert_eq!(q.element_order_profile(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        let d = dihedral8();
        assert_eq!(d.element_order_profile(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        // generator images along the BFS order
        let (_, k, _) = three2_q8_parts();
        assert_eq!(k.group.element_order(1), 4);
        assert_eq!(k.group.element_order(2), 4);
        assert_eq!(k.group.mul(1, 1), k.group.mul(2, 2));
    }

    #[test]
    fn extraspecial_pair() {
        for p in [3u64, 5] {
            let h = heisenberg(p, M).unwrap();
            let e = extraspecial_exp_p2(p, M).unwrap();
            let pu = p as usize;
            for g in [&h, &e] {
                assert_eq!(g.order(), pu.pow(3));
                assert_eq!(center(g).order(), pu);
                assert_eq!(derived_subgroup(g).order(), pu);
                assert_eq!(conjugacy_classes(g).len(), pu * pu + pu - 1);
            }
            assert_eq!(*h.element_order_profile().last().unwrap(), pu);
            assert_eq!(*e.element_order_profile().last().unwrap(), pu * pu);
        }
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(heisenberg(4, M), Err(Error::NotPrime(4)));
        assert!(matches!(heisenberg(2, M), Err(Error::PreconditionUnmet(_))));
        assert!(matches!(heisenberg(11, M), Err(Error::ClosureLimitExceeded { .. })));
        assert!(matches!(metacyclic(5, 3, 2, M), Err(Error::ActionNotHomomorphism { .. })));
    }

    #[test]
    fn small_families() {
        assert_eq!(symmetric(4, M).unwrap().order(), 24);
        assert_eq!(dihedral(5, M).unwrap().order(), 10);
        let dic = metacyclic(3, 4, 2, M).unwrap();
        assert_eq!(dic.order(), 12);
        assert!(!dic.is_abelian());
        let a = abelian(&[2, 3], M).unwrap();
        assert!(a.is_abelian());
        assert_eq!(a.element_order_profile().last(), Some(&6));
        assert_eq!(abelian(&[], M).unwrap().order(), 1);
    }
}
