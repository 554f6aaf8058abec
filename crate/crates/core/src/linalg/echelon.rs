use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use super::rat::Rat;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient_dim` held as rows in reduced row-echelon form.
///
/// Every row has a leading 1 in its pivot column and zeros in all other rows'
/// pivot columns; rows are kept sorted by pivot. Span membership and
/// coordinates are then read off directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    ambient_dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBasis {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn reduce_in_place(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v[p..].iter_mut().zip(&row[p..]) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    /// Residue of `v` after elimination against the basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(v)?;
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        Ok(w)
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` over the basis rows, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inserts `v`, keeping the rows reduced. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> Result<bool> {
        self.check_len(&v)?;
        self.reduce_in_place(&mut v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        if !v[q].is_one() {
            let inv = v[q].recip();
            for x in v[q..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in &mut self.rows {
            if row[q].is_zero() {
                continue;
            }
            let f = row[q].clone();
            for (x, r) in row[q..].iter_mut().zip(&v[q..]) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        Ok(true)
    }

    /// Basis of `{x : r . x = 0 for every row r}`.
    pub fn null_space(&self) -> EchelonBasis {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = EchelonBasis::new(self.ambient_dim);
        for free in (0..self.ambient_dim).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rat::zero(); self.ambient_dim];
            x[free] = Rat::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    x[p] = -row[free].clone();
                }
            }
            out.insert(x).expect("length matches ambient dimension");
        }
        out
    }
}

/// Functional form of [`EchelonBasis::insert`].
pub fn rref_insert(mut basis: EchelonBasis, v: Vec<Rat>) -> Result<(EchelonBasis, bool)> {
    let was_new = basis.insert(v)?;
    Ok((basis, was_new))
}

/// Basis of the null space `{x : A x = 0}`.
pub fn solve_homogeneous(a: &RatMatrix) -> EchelonBasis {
    let mut rows = EchelonBasis::new(a.cols());
    for r in 0..a.rows() {
        rows.insert(a.row(r).to_vec()).expect("row length equals column count");
    }
    rows.null_space()
}
