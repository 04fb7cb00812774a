//! Dense exact linear algebra over the rationals: reduced row-echelon
//! subspaces, kernels and images.

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

pub type Vector = Vec<Rational>;

/// A row matrix, one `Vec` per row.
pub type Matrix = Vec<Vec<Rational>>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn scale(v: &[Rational], c: &Rational) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vector {
    m.iter().map(|row| rational::dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zero_vector(cols);
            for k in 0..inner {
                add_scaled(&mut out, &row[k], &b[k]);
            }
            out
        })
        .collect()
}

pub fn transpose(m: &[Vec<Rational>], cols: usize) -> Matrix {
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Scales `v` so that its first nonzero entry is 1. Returns the factor used.
pub fn normalize_leading(v: &mut [Rational]) -> Option<Rational> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    let factor = lead.recip();
    for x in v.iter_mut() {
        *x *= &factor;
    }
    Some(factor)
}

/// A subspace of `Q^cols` held as a matrix in reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1 and each pivot column
/// is zero in all other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    cols: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(cols: usize) -> Self {
        let mut out = Self::new(cols);
        for i in 0..cols {
            out.rows.push(unit_vector(cols, i));
            out.pivots.push(i);
        }
        out
    }

    pub fn from_vectors<I>(cols: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut out = Self::new(cols);
        for v in vectors {
            out.insert(v);
        }
        out
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                add_scaled(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if self.is_full() {
            return true;
        }
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the spanning set. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(&v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let c = -row[pivot].clone();
                add_scaled(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, v);
        self.pivots.insert(at, pivot);
        true
    }

    pub fn contains_space(&self, other: &Rref) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_space(&self, other: &Rref) -> bool {
        self.rank() == other.rank() && self.contains_space(other)
    }

    /// Span of `self` and `other`.
    pub fn sum(&self, other: &Rref) -> Rref {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r.clone());
        }
        out
    }

    /// Standard basis vectors at the non-pivot columns. Their classes form a
    /// canonical basis of the quotient `Q^cols / self`.
    pub fn complement_basis(&self) -> Vec<Vector> {
        (0..self.cols)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .map(|c| unit_vector(self.cols, c))
            .collect()
    }
}

/// Kernel of the linear map `x -> m x`, where `m` has `cols` columns.
pub fn kernel(m: &[Vec<Rational>], cols: usize) -> Rref {
    let rows = Rref::from_vectors(cols, m.iter().cloned());
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| rows.pivots.binary_search(c).is_err()) {
        let mut x = unit_vector(cols, free);
        for (row, &p) in rows.rows.iter().zip(&rows.pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(x);
    }
    Rref::from_vectors(cols, basis)
}

/// Column space of `m` (a matrix with `cols` columns and `m.len()` rows).
pub fn image(m: &[Vec<Rational>], cols: usize) -> Rref {
    Rref::from_vectors(m.len(), transpose(m, cols))
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector(n, i));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let c = -row[col].clone();
                add_scaled(row, &c, &pivot_row);
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    Rref::from_vectors(cols, m.iter().cloned()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn insert_tracks_rank_and_rref_shape() {
        let mut r = Rref::new(3);
        assert!(r.insert(v(&[0, 2, 4])));
        assert!(r.insert(v(&[1, 1, 1])));
        assert!(!r.insert(v(&[2, 4, 6])));
        assert_eq!(r.rank(), 2);
        assert_eq!(r.pivots(), &[0, 1]);
        assert_eq!(r.rows()[0], v(&[1, 0, -1]));
        assert_eq!(r.rows()[1], v(&[0, 1, 2]));
        assert!(r.contains(&v(&[3, 1, -1])));
        assert!(!r.contains(&v(&[0, 0, 1])));
        assert_eq!(r.complement_basis(), vec![v(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_and_image_dimensions_add_up() {
        let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6])];
        let k = kernel(&m, 3);
        assert_eq!(k.rank(), 2);
        for row in k.rows() {
            assert!(is_zero(&mat_vec(&m, row)));
        }
        assert_eq!(image(&m, 3).rank(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![v(&[2, 1]), v(&[1, 1])];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), vec![v(&[1, 0]), v(&[0, 1])]);
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn same_space_ignores_spanning_set() {
        let a = Rref::from_vectors(2, vec![v(&[1, 1])]);
        let b = Rref::from_vectors(2, vec![vec![frac(1, 3), frac(1, 3)]]);
        assert!(a.same_space(&b));
        assert!(!a.same_space(&Rref::full(2)));
    }
}
