//! Univariate rational polynomials: the Krylov minimal polynomial of a
//! matrix and extraction of rational roots.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::echelon::EchelonBasis;
use super::matrix::RatMatrix;
use super::rat::Rat;

/// Polynomial in `t` with coefficients stored lowest degree first; never has
/// a zero leading coefficient (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![Rat::one()])
    }

    /// `t - root`
    pub fn linear(root: &Rat) -> Self {
        Poly::new(vec![-root.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * dc;
            }
            quot[shift] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        let id = RatMatrix::identity(n);
        for c in self.coeffs.iter().rev() {
            acc = &acc.matmul(m) + &id.scale(c);
        }
        acc
    }

    /// `p(M) v` without forming `p(M)`.
    pub fn apply_to_vector(&self, m: &RatMatrix, v: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = m.mul_vec(&acc);
            if !c.is_zero() {
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += c * x;
                }
            }
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Minimal polynomial of `w` under `op`, found from the first linear
/// dependence in the Krylov sequence `w, op w, op^2 w, ...`.
fn local_min_poly(op: &RatMatrix, w: &[Rat]) -> Poly {
    let n = op.rows();
    // Augmented rows [op^i w | e_i] record which combination produced each row.
    let width = n + n + 1;
    let mut basis = EchelonBasis::new(width);
    let mut current = w.to_vec();
    for k in 0..=n {
        let mut aug = current.clone();
        aug.resize(width, Rat::zero());
        let residue = basis.reduce(&aug).expect("augmented width");
        if residue[..n].iter().all(Zero::is_zero) {
            // op^k w = sum alpha_i op^i w with residue tail = -alpha.
            let mut coeffs: Vec<Rat> = residue[n..n + k].to_vec();
            coeffs.push(Rat::one());
            return Poly::new(coeffs);
        }
        aug[n + k] = Rat::one();
        basis.insert(aug).expect("augmented width");
        current = op.mul_vec(&current);
    }
    unreachable!("Krylov sequence in dimension {n} must become dependent within {n} steps")
}

/// Least-degree monic polynomial annihilating a square matrix.
///
/// Start vectors are the standard basis vectors in order; each contributes
/// the minimal polynomial of whatever the running product has not yet killed.
pub fn min_poly(op: &RatMatrix) -> Poly {
    assert!(op.is_square(), "min_poly needs a square matrix");
    let n = op.rows();
    let mut acc = Poly::one();
    for k in 0..n {
        if acc.degree() == Some(n) {
            break;
        }
        let mut e = vec![Rat::zero(); n];
        e[k] = Rat::one();
        let w = acc.apply_to_vector(op, &e);
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        acc = acc.mul(&local_min_poly(op, &w));
    }
    acc
}

/// Distinct rational roots of a polynomial and what is left after dividing
/// them (with multiplicity) out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    pub roots: Vec<Rat>,
    /// Monic cofactor with no rational roots.
    pub residual: Poly,
    /// False when the candidate search hit its budget; roots may then be missing.
    pub exhaustive: bool,
}

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
const NUMERATOR_SCAN_LIMIT: u64 = 200_000;
const CANDIDATE_BUDGET: usize = 2_000_000;

/// Prime factorization by trial division; a cofactor left above the trial
/// limit is reported as a single factor.
fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigInt, cap: &BigInt, budget: usize) -> Option<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for d in &divs {
            let mut x = d.clone();
            for _ in 0..=e {
                if &x > cap {
                    break;
                }
                next.push(x.clone());
                x *= &p;
            }
        }
        if next.len() > budget {
            return None;
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Integer coefficients of a positive multiple of `p` with content 1.
fn primitive_integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let den_lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|l| l.sign() == Sign::Minus) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// Upper bound on the modulus of every root (Fujiwara), rounded up to a power of two.
fn root_bound(a: &[BigInt]) -> BigInt {
    let n = a.len() - 1;
    let lead_bits = a[n].bits() as i64;
    let mut exp = 0i64;
    for k in 1..=n {
        let c = &a[n - k];
        if c.is_zero() {
            continue;
        }
        let diff = c.bits() as i64 - lead_bits + 1;
        let e = if diff <= 0 { 0 } else { (diff + k as i64 - 1) / k as i64 };
        exp = exp.max(e);
    }
    BigInt::one() << (exp + 1) as usize
}

/// Rational roots by the rational-root theorem on the integer-cleared
/// polynomial: a root `a/b` in lowest terms has `b | lead` and `a | constant`,
/// and every root is bounded in modulus, which prunes the candidates.
pub fn rational_roots(poly: &Poly) -> RationalRoots {
    let mut residual = poly.monic();
    let mut roots: Vec<Rat> = Vec::new();
    let mut exhaustive = true;
    if residual.is_zero() {
        return RationalRoots {
            roots,
            residual,
            exhaustive,
        };
    }

    let deflate = |residual: &mut Poly, r: &Rat, roots: &mut Vec<Rat>| {
        let lin = Poly::linear(r);
        loop {
            let (q, rem) = residual.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            *residual = q;
        }
        roots.push(r.clone());
    };

    if residual.coeffs.first().is_some_and(Zero::is_zero) {
        deflate(&mut residual, &Rat::zero(), &mut roots);
    }

    'search: while residual.degree().is_some_and(|d| d >= 1) {
        let a = primitive_integer_coeffs(&residual);
        let n = a.len() - 1;
        let lead = a[n].abs();
        let constant = a[0].abs();
        let bound = root_bound(&a);
        let Some(dens) = divisors(&lead, &lead, CANDIDATE_BUDGET) else {
            exhaustive = false;
            break;
        };
        let mut budget = CANDIDATE_BUDGET;
        for b in &dens {
            let num_cap = &bound * b;
            let nums: Vec<BigInt> = match num_cap.to_u64() {
                Some(cap) if cap <= NUMERATOR_SCAN_LIMIT => (1..=cap)
                    .map(BigInt::from)
                    .filter(|x| (&constant % x).is_zero())
                    .collect(),
                _ => match divisors(&constant, &num_cap, budget) {
                    Some(d) => d,
                    None => {
                        exhaustive = false;
                        break 'search;
                    }
                },
            };
            for num in nums {
                if budget == 0 {
                    exhaustive = false;
                    break 'search;
                }
                budget -= 1;
                if !num.gcd(b).is_one() {
                    continue;
                }
                for cand in [
                    Rat::new(num.clone(), b.clone()),
                    Rat::new(-num.clone(), b.clone()),
                ] {
                    if residual.eval(&cand).is_zero() {
                        deflate(&mut residual, &cand, &mut roots);
                        continue 'search;
                    }
                }
            }
        }
        break;
    }
    roots.sort();
    RationalRoots {
        roots,
        residual,
        exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&RatMatrix::identity(3)), p(&[-1, 1]));
        assert_eq!(min_poly(&RatMatrix::zeros(2, 2)), p(&[0, 1]));
        let d = RatMatrix::diagonal(&[int(1), int(2)]);
        assert_eq!(min_poly(&d), p(&[2, -3, 1]));
    }

    #[test]
    fn min_poly_of_nilpotent_jordan_block() {
        let mut j = RatMatrix::zeros(3, 3);
        j.set(0, 1, int(1));
        j.set(1, 2, int(1));
        assert_eq!(min_poly(&j), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn min_poly_annihilates() {
        let m = RatMatrix::from_fn(4, 4, |r, c| rat((r * 3 + c * c) as i64 % 5 - 2, 1 + c as i64));
        let mp = min_poly(&m);
        assert!(mp.eval_matrix(&m).is_zero());
        assert!(mp.degree().unwrap() <= 4);
    }

    #[test]
    fn rational_root_examples() {
        let r = rational_roots(&p(&[2, -3, 1]));
        assert_eq!(r.roots, vec![int(1), int(2)]);
        assert_eq!(r.residual, Poly::one());

        let r = rational_roots(&p(&[1, 0, 1]));
        assert!(r.roots.is_empty());
        assert_eq!(r.residual, p(&[1, 0, 1]));

        let r = rational_roots(&p(&[0, -1, 1]));
        assert_eq!(r.roots, vec![int(0), int(1)]);
    }

    #[test]
    fn fractional_roots_and_multiplicity() {
        // (2t - 1)^2 (3t + 4) (t^2 - 2)
        let f = p(&[-1, 2])
            .mul(&p(&[-1, 2]))
            .mul(&p(&[4, 3]))
            .mul(&p(&[-2, 0, 1]));
        let r = rational_roots(&f);
        assert_eq!(r.roots, vec![rat(-4, 3), rat(1, 2)]);
        assert_eq!(r.residual, p(&[-2, 0, 1]));
        assert!(r.exhaustive);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -3, 1]).to_string(), "t^2 - 3t + 2");
        assert_eq!(Poly::new(vec![rat(-1, 2), int(0), int(-1)]).to_string(), "-t^2 - 1/2");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, 0, -3, 2, 1]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().map_or(true, |d| d < 2));
        let back = q.mul(&b);
        let sum = Poly::new(
            (0..5)
                .map(|i| {
                    back.coeffs().get(i).cloned().unwrap_or_default()
                        + r.coeffs().get(i).cloned().unwrap_or_default()
                })
                .collect(),
        );
        assert_eq!(sum, a);
    }
}
