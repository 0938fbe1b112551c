//! Dense frame-indexed arrays.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::rational::Rational;
use crate::ring::RingElement;

/// A rank-`r` array over a `dim`-dimensional frame, stored row-major.
/// Indices are zero-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrameTensor<T> {
    dim: usize,
    rank: usize,
    data: Vec<T>,
}

impl<T> FrameTensor<T> {
    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let len = dim.pow(rank as u32);
        let mut data = Vec::with_capacity(len);
        let mut idx = vec![0usize; rank];
        for _ in 0..len {
            data.push(f(&idx));
            for slot in idx.iter_mut().rev() {
                *slot += 1;
                if *slot < dim {
                    break;
                }
                *slot = 0;
            }
        }
        FrameTensor { dim, rank, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "tensor rank");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "frame index {i} out of range");
            acc * self.dim + i
        })
    }

    pub fn values(&self) -> &[T] {
        &self.data
    }

    /// Every multi-index in storage order, paired with its entry.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &T)> {
        let (dim, rank) = (self.dim, self.rank);
        self.data.iter().enumerate().map(move |(mut n, v)| {
            let mut idx = vec![0; rank];
            for slot in idx.iter_mut().rev() {
                *slot = n % dim;
                n /= dim;
            }
            (idx, v)
        })
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> FrameTensor<U> {
        FrameTensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> Index<&[usize]> for FrameTensor<T> {
    type Output = T;
    fn index(&self, idx: &[usize]) -> &T {
        &self.data[self.offset(idx)]
    }
}

impl<T> IndexMut<&[usize]> for FrameTensor<T> {
    fn index_mut(&mut self, idx: &[usize]) -> &mut T {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

impl<T, const R: usize> Index<[usize; R]> for FrameTensor<T> {
    type Output = T;
    fn index(&self, idx: [usize; R]) -> &T {
        &self.data[self.offset(&idx)]
    }
}

impl<T, const R: usize> IndexMut<[usize; R]> for FrameTensor<T> {
    fn index_mut(&mut self, idx: [usize; R]) -> &mut T {
        let o = self.offset(&idx);
        &mut self.data[o]
    }
}

impl FrameTensor<Rational> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Self::from_fn(dim, rank, |_| Rational::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, 2, |i| {
            if i[0] == i[1] {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Lifts constant entries into the coefficient ring.
    pub fn to_ring(&self, nvars: usize) -> FrameTensor<RingElement> {
        self.map(|c| RingElement::constant(nvars, c.clone()))
    }

    /// First index where the rank-2 tensor is not symmetric.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        asymmetry(self)
    }
}

impl FrameTensor<RingElement> {
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElement::is_zero)
    }

    /// All entries constant.
    pub fn to_constant(&self) -> Option<FrameTensor<Rational>> {
        let data = self
            .data
            .iter()
            .map(RingElement::constant_value)
            .collect::<Option<Vec<_>>>()?;
        Some(FrameTensor {
            dim: self.dim,
            rank: self.rank,
            data,
        })
    }

    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        asymmetry(self)
    }
}

fn asymmetry<T: PartialEq>(t: &FrameTensor<T>) -> Option<(usize, usize)> {
    assert_eq!(t.rank, 2, "symmetry check needs a rank-2 tensor");
    for i in 0..t.dim {
        for j in i + 1..t.dim {
            if t[[i, j]] != t[[j, i]] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(m: &FrameTensor<Rational>) -> Option<FrameTensor<Rational>> {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m[[i, j]].clone()).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip()?;
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                a[r][j] -= &x;
                inv[r][j] -= &y;
            }
        }
    }
    Some(FrameTensor::from_fn(n, 2, |i| inv[i[0]][i[1]].clone()))
}

/// Exact determinant by fraction-based elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            let pivot_row = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(pivot_row).skip(col) {
                *x -= &(&p * &f);
            }
        }
    }
    det
}
