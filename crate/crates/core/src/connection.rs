//! Levi-Civita connection of a frame with constant structure constants.

use alloc::vec::Vec;

use crate::manifold::ManifoldSpec;
use crate::rational::Rational;
use crate::tensor::FrameTensor;

/// `∇_{e_i} e_j = Σ_k gamma[[i, j, k]] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectionCoeffs {
    gamma: FrameTensor<Rational>,
}

/// Koszul formula. The frame metric is constant, so the derivative terms
/// vanish and
/// `2 g(∇_X Y, Z) = -g(X, [Y,Z]) - g(Y, [X,Z]) + g(Z, [X,Y])`.
pub fn levi_civita(spec: &ManifoldSpec) -> ConnectionCoeffs {
    let n = spec.dim();
    let c = spec.brackets();
    let g = spec.metric();
    let ginv = spec.metric_inv();
    // C(i,j,l) = g([e_i, e_j], e_l)
    let lowered = FrameTensor::from_fn(n, 3, |x| {
        (0..n)
            .map(|k| &c[[x[0], x[1], k]] * &g[[k, x[2]]])
            .sum::<Rational>()
    });
    let half = Rational::new(1, 2);
    let first_kind = FrameTensor::from_fn(n, 3, |x| {
        let (i, j, l) = (x[0], x[1], x[2]);
        let s = &lowered[[i, j, l]] - &lowered[[j, l, i]] - &lowered[[i, l, j]];
        &s * &half
    });
    let gamma = FrameTensor::from_fn(n, 3, |x| {
        (0..n)
            .map(|l| &first_kind[[x[0], x[1], l]] * &ginv[[l, x[2]]])
            .sum()
    });
    ConnectionCoeffs { gamma }
}

impl ConnectionCoeffs {
    pub fn gamma(&self) -> &FrameTensor<Rational> {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `∇_{e_i} v` for a constant-component vector `v`.
    pub fn nabla(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| &v[j] * &self.gamma[[i, j, k]])
                    .sum()
            })
            .collect()
    }

    /// First `(i, j, k)` where `Γ_ij^k - Γ_ji^k ≠ c_ij^k`.
    pub fn torsion_defect(&self, spec: &ManifoldSpec) -> Option<[usize; 3]> {
        let n = spec.dim();
        let c = spec.brackets();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if &self.gamma[[i, j, k]] - &self.gamma[[j, i, k]] != c[[i, j, k]] {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// First `(i, j, k)` where `e_i g(e_j, e_k) = g(∇_i e_j, e_k) + g(e_j, ∇_i e_k)`
    /// fails; the left side is zero for a constant frame metric.
    pub fn metric_defect(&self, spec: &ManifoldSpec) -> Option<[usize; 3]> {
        let n = spec.dim();
        let g = spec.metric();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s: Rational = (0..n)
                        .map(|l| {
                            &self.gamma[[i, j, l]] * &g[[l, k]] + &self.gamma[[i, k, l]] * &g[[j, l]]
                        })
                        .sum();
                    if !s.is_zero() {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// The Levi-Civita connection is unique, so the pairing holds exactly
    /// when both defining properties hold.
    pub fn belongs_to(&self, spec: &ManifoldSpec) -> bool {
        self.dim() == spec.dim()
            && self.torsion_defect(spec).is_none()
            && self.metric_defect(spec).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::rational::q;

    fn component(conn: &ConnectionCoeffs, i: usize, j: usize) -> Vec<Rational> {
        (0..conn.dim()).map(|k| conn.gamma()[[i, j, k]].clone()).collect()
    }

    fn e(n: usize, i: usize, c: i64) -> Vec<Rational> {
        (0..n).map(|k| if k == i { q(c, 1) } else { q(0, 1) }).collect()
    }

    #[test]
    fn example_connection_table() {
        let spec = family::kenmotsu_warped(2);
        let conn = levi_civita(&spec);
        for i in 0..4 {
            assert_eq!(component(&conn, i, i), e(5, 4, -1));
            assert_eq!(component(&conn, i, 4), e(5, i, 1));
            for j in 0..4 {
                if j != i {
                    assert!(component(&conn, i, j).iter().all(Rational::is_zero));
                }
            }
        }
        for j in 0..5 {
            assert!(component(&conn, 4, j).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn abelian_frame_is_flat() {
        let conn = levi_civita(&family::abelian_flat(1));
        assert!(conn.gamma().values().iter().all(Rational::is_zero));
    }

    #[test]
    fn three_dimensional_member_by_hand() {
        // [e1,e3] = e1, [e2,e3] = e2. Koszul:
        // 2g(∇_1 e1, e3) = -g(e1,[e1,e3]) - g(e1,[e1,e3]) + 0 = -2
        // 2g(∇_1 e3, e1) = -g(e1,[e3,e1]) - g(e3,[e1,e1]) + g(e1,[e1,e3]) = 2
        let conn = levi_civita(&family::kenmotsu_warped(1));
        assert_eq!(component(&conn, 0, 0), e(3, 2, -1));
        assert_eq!(component(&conn, 0, 2), e(3, 0, 1));
    }

    #[test]
    fn invariants_on_family() {
        for spec in [family::kenmotsu_warped(1), family::kenmotsu_warped(3), family::abelian_flat(2)] {
            let conn = levi_civita(&spec);
            assert_eq!(conn.torsion_defect(&spec), None);
            assert_eq!(conn.metric_defect(&spec), None);
        }
    }
}
