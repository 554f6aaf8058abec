//! Prime-power finite fields `GF(p^r)` as polynomials over `Z_p` modulo a
//! fixed irreducible. Elements are indexed by their base-`p` coefficient
//! encoding `c0 + c1 p + ... + c(r-1) p^(r-1)`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub r: u32,
    /// Monic irreducible of degree `r`, lowest coefficient first (length `r + 1`).
    pub modulus: Vec<u64>,
    /// Index of an element of multiplicative order `p^r - 1`.
    pub generator: usize,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_pow(m[dm], p - 2, p);
    while a.len() > dm {
        let shift = a.len() - 1 - dm;
        let c = a[a.len() - 1] * lead_inv % p;
        for (k, &mc) in m.iter().enumerate() {
            a[shift + k] = (a[shift + k] + p - c * mc % p) % p;
        }
        a = trim(a);
    }
    a
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn decode(mut idx: usize, p: u64, len: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(idx as u64 % p);
        idx /= p as usize;
    }
    v
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let r = m.len() - 1;
    for deg in 1..=r / 2 {
        for lower in 0..(p as usize).pow(deg as u32) {
            let mut d = decode(lower, p, deg);
            d.push(1);
            if poly_mod(m, &d, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.r)
    }

    fn decode(&self, idx: usize) -> Vec<u64> {
        decode(idx, self.p, self.r as usize)
    }

    fn encode(&self, coeffs: &[u64]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.r as usize];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        let mut red = poly_mod(&prod, &self.modulus, self.p);
        red.resize(self.r as usize, 0);
        self.encode(&red)
    }

    pub fn multiplicative_order(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }
}

/// `GF(p^r)` with the least monic irreducible of degree `r` having a nonzero
/// constant term (least in the base-`p` encoding of its lower coefficients),
/// and the least multiplicative generator.
pub fn make_field(p: u64, r: u32, max_size: usize) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::PreconditionUnmet("field degree must be at least 1".into()));
    }
    let size = (p as usize)
        .checked_pow(r)
        .filter(|&s| s <= max_size)
        .ok_or(Error::ClosureLimitExceeded {
            reached: (p as usize).saturating_pow(r),
            max: max_size,
        })?;
    let modulus = (0..size)
        .map(|lower| {
            let mut m = decode(lower, p, r as usize);
            m.push(1);
            m
        })
        .find(|m| m[0] != 0 && is_irreducible(m, p))
        .ok_or_else(|| Error::InternalInconsistency(format!("no irreducible of degree {r} mod {p}")))?;
    let mut field = FieldSpec {
        p,
        r,
        modulus,
        generator: 1,
    };
    field.generator = (1..size)
        .find(|&a| field.multiplicative_order(a) == Some(size - 1))
        .ok_or_else(|| Error::InternalInconsistency("no multiplicative generator".into()))?;
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_two() {
        let f = make_field(2, 1, 512).unwrap();
        assert_eq!(f.modulus, vec![1, 1]);
        assert_eq!(f.generator, 1);
    }

    #[test]
    fn four_elements() {
        let f = make_field(2, 2, 512).unwrap();
        assert_eq!(f.modulus, vec![1, 1, 1]);
        assert_eq!(f.multiplicative_order(f.generator), Some(3));
    }

    #[test]
    fn nine_elements() {
        let f = make_field(3, 2, 512).unwrap();
        assert_eq!(f.size(), 9);
        assert_eq!(f.multiplicative_order(f.generator), Some(8));
        // exhaustive: no zero divisors
        for a in 1..9 {
            for b in 1..9 {
                assert_ne!(f.mul(a, b), 0);
            }
        }
    }

    #[test]
    fn field_axioms_gf8() {
        let f = make_field(2, 3, 512).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1, 512), Err(Error::NotPrime(4)));
        assert!(matches!(make_field(2, 10, 512), Err(Error::ClosureLimitExceeded { .. })));
    }
}
