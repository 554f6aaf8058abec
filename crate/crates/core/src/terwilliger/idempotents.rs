use num_traits::{One, Zero};
use serde::Serialize;

use super::block::{BlockMatrix, ClassLayout};
use crate::error::{Error, Result};
use crate::group::derived_subgroup;
use crate::linalg::rat::rat;
use crate::linalg::{Rat, RatMatrix};
use crate::scheme::GroupScheme;

/// `e_V`: block diagonal with every entry of the `(C_i, C_i)` block `1/|C_i|`.
pub fn primary_idempotent_blocks(layout: &ClassLayout) -> BlockMatrix {
    let mut m = BlockMatrix::zero();
    for i in 0..layout.class_count() {
        let s = layout.size(i);
        m.set_block(i, i, RatMatrix::from_fn(s, s, |_, _| rat(1, s as i64)));
    }
    m
}

pub fn primary_idempotent(scheme: &GroupScheme) -> RatMatrix {
    let layout = ClassLayout::new(scheme.partition());
    primary_idempotent_blocks(&layout).to_dense(&layout)
}

/// `B_i`: zero outside the `(C_i, C_i)` block, which has 1 on the diagonal
/// and `-1/(|C_i| - 1)` elsewhere.
pub fn frobenius_b(scheme: &GroupScheme, i: usize) -> Result<RatMatrix> {
    if i >= scheme.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: scheme.rank(),
        });
    }
    let class = scheme.partition().class(i);
    let s = class.len();
    if s < 2 {
        return Err(Error::SingletonClass { class: i });
    }
    let off = rat(-1, s as i64 - 1);
    let n = scheme.order();
    let mut m = RatMatrix::zeros(n, n);
    for &x in class {
        for &y in class {
            m.set(x, y, if x == y { Rat::one() } else { off.clone() });
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiple {
    Plus,
    Minus,
    Zero,
    Other,
}

fn classify_multiple(m: &RatMatrix, b: &RatMatrix) -> Multiple {
    if m.is_zero() {
        Multiple::Zero
    } else if m == b {
        Multiple::Plus
    } else if *m == -b {
        Multiple::Minus
    } else {
        Multiple::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductOutcome {
    pub k: usize,
    pub expected: Multiple,
    pub observed: Multiple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusIdealReport {
    pub class: usize,
    /// `A_k B_i` against `B_i` for `k = 0`, `-B_i` for `C_k = G' \ {e}`, zero otherwise.
    pub products: Vec<ProductOutcome>,
    pub symmetric: bool,
    /// `E_j^* B_i` is `B_i` or zero for every `j`.
    pub dual_absorbs: bool,
    /// `B_i^2 = (1 + 1/(|C_i| - 1)) B_i`.
    pub square_law: bool,
    /// `((|C_i| - 1)/|C_i|) B_i` is idempotent.
    pub scaled_idempotent: bool,
    pub zero_row_sums: bool,
}

impl FrobeniusIdealReport {
    pub fn passed(&self) -> bool {
        self.products.iter().all(|p| p.expected == p.observed)
            && self.symmetric
            && self.dual_absorbs
            && self.square_law
            && self.scaled_idempotent
            && self.zero_row_sums
    }
}

pub fn verify_frobenius_ideal(scheme: &GroupScheme, i: usize) -> Result<FrobeniusIdealReport> {
    let b = frobenius_b(scheme, i)?;
    let s = scheme.class_sizes()[i] as i64;
    let g = scheme.group();
    let derived = derived_subgroup(g);
    let mut derived_punctured: Vec<usize> =
        derived.members().iter().copied().filter(|&x| x != g.identity()).collect();
    derived_punctured.sort_unstable();

    let mut products = Vec::with_capacity(scheme.rank());
    for k in 0..scheme.rank() {
        let expected = if k == 0 {
            Multiple::Plus
        } else if scheme.partition().class(k) == derived_punctured.as_slice() {
            Multiple::Minus
        } else {
            Multiple::Zero
        };
        let observed = classify_multiple(&scheme.adjacency_matrix(k)?.matmul(&b), &b);
        products.push(ProductOutcome { k, expected, observed });
    }

    let mut dual_absorbs = true;
    for j in 0..scheme.rank() {
        let p = scheme.dual_idempotent(j)?.matmul(&b);
        dual_absorbs &= matches!(classify_multiple(&p, &b), Multiple::Plus | Multiple::Zero);
    }
    let square = b.matmul(&b);
    let square_law = square == b.scale(&(Rat::one() + rat(1, s - 1)));
    let scaled = b.scale(&rat(s - 1, s));
    let scaled_idempotent = scaled.matmul(&scaled) == scaled;
    let zero_row_sums = (0..b.rows()).all(|r| b.row(r).iter().fold(Rat::zero(), |a, x| a + x).is_zero());
    Ok(FrobeniusIdealReport {
        class: i,
        products,
        symmetric: b.transpose() == b,
        dual_absorbs,
        square_law,
        scaled_idempotent,
        zero_row_sums,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::frobenius_field_group;
    use crate::group::cyclic;
    use crate::scheme::build_scheme;

    #[test]
    fn primary_small_cases() {
        assert_eq!(primary_idempotent(&build_scheme(&cyclic(1))), RatMatrix::identity(1));
        assert_eq!(primary_idempotent(&build_scheme(&cyclic(2))), RatMatrix::identity(2));
    }

    #[test]
    fn order_six_b() {
        let s = build_scheme(&frobenius_field_group(3, 1, 64).unwrap());
        // class 2 holds the three involutions
        let b = frobenius_b(&s, 2).unwrap();
        let x = s.partition().class(2)[0];
        let y = s.partition().class(2)[1];
        assert_eq!(b.get(x, x), &Rat::one());
        assert_eq!(b.get(x, y), &rat(-1, 2));
        let report = verify_frobenius_ideal(&s, 2).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.products[1].observed, Multiple::Minus);
        assert_eq!(frobenius_b(&s, 0), Err(Error::SingletonClass { class: 0 }));
        assert!(matches!(frobenius_b(&s, 3), Err(Error::IndexOutOfRange { .. })));
    }
}
