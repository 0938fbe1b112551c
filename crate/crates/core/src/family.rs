//! Built-in frame families.

use alloc::format;

use crate::manifold::ManifoldSpec;
use crate::rational::Rational;
use crate::tensor::FrameTensor;

/// `φ(e_k) = e_{k+n}`, `φ(e_{k+n}) = -e_k`, `φ(e_{2n+1}) = 0`.
pub fn paired_phi(n: usize) -> FrameTensor<Rational> {
    let mut phi = FrameTensor::zeros(2 * n + 1, 2);
    for k in 0..n {
        phi[[k + n, k]] = Rational::one();
        phi[[k, k + n]] = -Rational::one();
    }
    phi
}

/// The warped product `ℝ ×_{e^t} ℝ^{2n}` with orthonormal frame
/// `[e_i, e_{2n+1}] = e_i` for `i ≤ 2n`, paired `φ` and `ξ = e_{2n+1}`.
/// This is Kenmotsu of constant curvature `-1`; `n = 2` is the
/// five-dimensional worked example.
pub fn kenmotsu_warped(n: usize) -> ManifoldSpec {
    assert!(n >= 1);
    let dim = 2 * n + 1;
    let last = dim - 1;
    let mut c = FrameTensor::zeros(dim, 3);
    for i in 0..last {
        c[[i, last, i]] = Rational::one();
        c[[last, i, i]] = -Rational::one();
    }
    ManifoldSpec::new(
        format!("kenmotsu-warped-{dim}d"),
        c,
        FrameTensor::identity(dim),
        paired_phi(n),
        last,
    )
    .expect("warped family is structurally valid")
}

/// Flat `ℝ^{2n+1}` with the coordinate frame and the paired `φ`.
pub fn abelian_flat(n: usize) -> ManifoldSpec {
    assert!(n >= 1);
    let dim = 2 * n + 1;
    ManifoldSpec::new(
        format!("abelian-flat-{dim}d"),
        FrameTensor::zeros(dim, 3),
        FrameTensor::identity(dim),
        paired_phi(n),
        dim - 1,
    )
    .expect("abelian frame is structurally valid")
}
