//! Riemann, Ricci and *-Ricci curvature, the W₂ and Q tensors, Einstein
//! type classification, and the identity suites that hold on every
//! Levi-Civita frame and on every Kenmotsu frame.
//!
//! Convention: `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]}Z` and
//! `S(Y,Z) = tr(X ↦ R(X,Y)Z)`, so hyperbolic space has `S = -(N-1)g`.

use alloc::vec;
use alloc::vec::Vec;

use crate::connection::ConnectionCoeffs;
use crate::error::{Error, Result};
use crate::manifold::{validate_kenmotsu, Check, ManifoldSpec};
use crate::rational::Rational;
use crate::soliton::decompose_g_eta;
use crate::tensor::FrameTensor;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvatureBundle {
    /// `[i, j, k, l]`: `e_l` component of `R(e_i, e_j)e_k`.
    pub riemann: FrameTensor<Rational>,
    /// `[i, j, k, l] = g(R(e_i, e_j)e_k, e_l)`.
    pub riemann_lowered: FrameTensor<Rational>,
    pub ricci: FrameTensor<Rational>,
    pub scalar: Rational,
    /// Computed from the trace definition, valid on any almost-contact frame.
    pub star_ricci: FrameTensor<Rational>,
    pub star_scalar: Rational,
}

impl CurvatureBundle {
    pub fn compute(spec: &ManifoldSpec, conn: &ConnectionCoeffs) -> Self {
        let riemann = riemann(spec, conn);
        let riemann_lowered = lower(spec, &riemann);
        let (ricci, scalar) = ricci_and_scalar(spec, &riemann);
        let star_ricci = star_ricci_direct(spec, &riemann);
        let star_scalar = spec.trace(&star_ricci);
        CurvatureBundle {
            riemann,
            riemann_lowered,
            ricci,
            scalar,
            star_ricci,
            star_scalar,
        }
    }
}

pub fn riemann(spec: &ManifoldSpec, conn: &ConnectionCoeffs) -> FrameTensor<Rational> {
    let n = spec.dim();
    let gam = conn.gamma();
    let c = spec.brackets();
    FrameTensor::from_fn(n, 4, |x| {
        let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
        let mut s = Rational::zero();
        for m in 0..n {
            if !gam[[j, k, m]].is_zero() {
                s += &gam[[j, k, m]] * &gam[[i, m, l]];
            }
            if !gam[[i, k, m]].is_zero() {
                s -= &(&gam[[i, k, m]] * &gam[[j, m, l]]);
            }
            if !c[[i, j, m]].is_zero() {
                s -= &(&c[[i, j, m]] * &gam[[m, k, l]]);
            }
        }
        s
    })
}

fn lower(spec: &ManifoldSpec, riemann: &FrameTensor<Rational>) -> FrameTensor<Rational> {
    let n = spec.dim();
    let g = spec.metric();
    FrameTensor::from_fn(n, 4, |x| {
        (0..n)
            .map(|m| &riemann[[x[0], x[1], x[2], m]] * &g[[m, x[3]]])
            .sum()
    })
}

/// `S(e_j, e_k) = Σ_i R(e_i, e_j)e_k |_i` and `r = tr_g S`.
pub fn ricci_and_scalar(
    spec: &ManifoldSpec,
    riemann: &FrameTensor<Rational>,
) -> (FrameTensor<Rational>, Rational) {
    let n = spec.dim();
    let ricci = FrameTensor::from_fn(n, 2, |x| (0..n).map(|i| riemann[[i, x[0], x[1], i]].clone()).sum());
    let scalar = spec.trace(&ricci);
    (ricci, scalar)
}

/// `S*(X,Y) = ½ tr(Z ↦ φ R(X, φY) Z)`.
pub fn star_ricci_direct(spec: &ManifoldSpec, riemann: &FrameTensor<Rational>) -> FrameTensor<Rational> {
    let n = spec.dim();
    let phi = spec.phi();
    let half = Rational::new(1, 2);
    FrameTensor::from_fn(n, 2, |x| {
        let (a, b) = (x[0], x[1]);
        let mut s = Rational::zero();
        for p in 0..n {
            let pb = &phi[[p, b]];
            if pb.is_zero() {
                continue;
            }
            for m in 0..n {
                for l in 0..n {
                    let r = &riemann[[a, p, m, l]];
                    if r.is_zero() || phi[[m, l]].is_zero() {
                        continue;
                    }
                    s += &(&(pb * r) * &phi[[m, l]]);
                }
            }
        }
        &s * &half
    })
}

/// `S* = S + (2n-1)g + η⊗η`, the closed form on Kenmotsu frames.
pub fn star_ricci_kenmotsu(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    ricci: &FrameTensor<Rational>,
) -> Result<FrameTensor<Rational>> {
    if !validate_kenmotsu(spec, conn)?.is_kenmotsu {
        return Err(Error::NotKenmotsu(spec.name().into()));
    }
    let coeff = Rational::from_int(2 * spec.n() as i64 - 1);
    let g = spec.metric();
    Ok(FrameTensor::from_fn(spec.dim(), 2, |x| {
        &ricci[[x[0], x[1]]] + &(&coeff * &g[[x[0], x[1]]]) + spec.eta(x[0]) * spec.eta(x[1])
    }))
}

/// `(∇_{e_a} R)(e_b, e_c)e_d`, component `l`, as `[a, b, c, d, l]`.
pub fn covariant_riemann(
    conn: &ConnectionCoeffs,
    riemann: &FrameTensor<Rational>,
) -> FrameTensor<Rational> {
    let n = conn.dim();
    let gam = conn.gamma();
    FrameTensor::from_fn(n, 5, |x| {
        let (a, b, c, d, l) = (x[0], x[1], x[2], x[3], x[4]);
        let mut s = Rational::zero();
        for m in 0..n {
            if !gam[[a, m, l]].is_zero() {
                s += &riemann[[b, c, d, m]] * &gam[[a, m, l]];
            }
            if !gam[[a, b, m]].is_zero() {
                s -= &(&gam[[a, b, m]] * &riemann[[m, c, d, l]]);
            }
            if !gam[[a, c, m]].is_zero() {
                s -= &(&gam[[a, c, m]] * &riemann[[b, m, d, l]]);
            }
            if !gam[[a, d, m]].is_zero() {
                s -= &(&gam[[a, d, m]] * &riemann[[b, c, m, l]]);
            }
        }
        s
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct W2Curvature {
    pub tensor: FrameTensor<Rational>,
    pub is_flat: bool,
    /// When flat: whether `S = r/(2n+1)·g` holds, as flatness forces.
    pub einstein_consequence: Option<bool>,
}

/// `W₂(X,Y,Z,W) = R̀(X,Y,Z,W) + 1/(2n)[g(X,Z)S(Y,W) - g(Y,Z)S(X,W)]`.
pub fn w2_tensor(spec: &ManifoldSpec, bundle: &CurvatureBundle) -> W2Curvature {
    let n = spec.dim();
    let g = spec.metric();
    let s = &bundle.ricci;
    let inv = Rational::new(1, 2 * spec.n() as i64);
    let tensor = FrameTensor::from_fn(n, 4, |x| {
        let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
        let bracket = &g[[i, k]] * &s[[j, l]] - &g[[j, k]] * &s[[i, l]];
        &bundle.riemann_lowered[[i, j, k, l]] + &(&inv * &bracket)
    });
    let is_flat = tensor.is_zero();
    let einstein_consequence = is_flat.then(|| {
        let f = &bundle.scalar / &Rational::from_int(n as i64);
        is_multiple_of_metric(spec, s, &f)
    });
    W2Curvature {
        tensor,
        is_flat,
        einstein_consequence,
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QCurvature {
    pub psi: Rational,
    /// Lowered: `g(Q(e_i, e_j)e_k, e_l)`.
    pub tensor: FrameTensor<Rational>,
    pub is_flat: bool,
    /// When flat: whether `S = ψ·g` holds, as flatness forces.
    pub einstein_consequence: Option<bool>,
}

/// `Q(X,Y)Z = R(X,Y)Z - ψ/(2n)[g(Y,Z)X - g(X,Z)Y]`, lowered.
pub fn q_tensor(spec: &ManifoldSpec, bundle: &CurvatureBundle, psi: &Rational) -> QCurvature {
    let n = spec.dim();
    let g = spec.metric();
    let f = psi / &Rational::from_int(2 * spec.n() as i64);
    let tensor = FrameTensor::from_fn(n, 4, |x| {
        let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
        let bracket = &g[[j, k]] * &g[[i, l]] - &g[[i, k]] * &g[[j, l]];
        &bundle.riemann_lowered[[i, j, k, l]] - &(&f * &bracket)
    });
    let is_flat = tensor.is_zero();
    let einstein_consequence = is_flat.then(|| is_multiple_of_metric(spec, &bundle.ricci, psi));
    QCurvature {
        psi: psi.clone(),
        tensor,
        is_flat,
        einstein_consequence,
    }
}

/// The unique constant `ψ` that makes `Q` vanish, if any. Flatness forces
/// `S = ψg`, so the candidate comes from the Einstein constant.
pub fn solve_q_flat_psi(spec: &ManifoldSpec, bundle: &CurvatureBundle) -> Option<Rational> {
    match einstein_classify(spec, &bundle.ricci) {
        EinsteinClass::Einstein { lambda } => q_tensor(spec, bundle, &lambda).is_flat.then_some(lambda),
        _ => None,
    }
}

fn is_multiple_of_metric(spec: &ManifoldSpec, t: &FrameTensor<Rational>, f: &Rational) -> bool {
    let g = spec.metric();
    t.entries().all(|(idx, v)| *v == f * &g[&idx[..]])
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EinsteinClass {
    /// `T = λg`.
    Einstein { lambda: Rational },
    /// `T = λg + C η⊗η` with `C ≠ 0`.
    EtaEinstein { lambda: Rational, c: Rational },
    Neither,
}

/// Classifies a symmetric constant 2-tensor against `span{g, η⊗η}`.
pub fn einstein_classify(spec: &ManifoldSpec, t: &FrameTensor<Rational>) -> EinsteinClass {
    if t.asymmetry().is_some() {
        return EinsteinClass::Neither;
    }
    let d = decompose_g_eta(spec, &t.to_ring(spec.dim())).expect("symmetric");
    let (Some(a), Some(b)) = (d.g_coeff.constant_value(), d.eta_coeff.constant_value()) else {
        return EinsteinClass::Neither;
    };
    if !d.remainder.is_zero() {
        EinsteinClass::Neither
    } else if b.is_zero() {
        EinsteinClass::Einstein { lambda: a }
    } else {
        EinsteinClass::EtaEinstein { lambda: a, c: b }
    }
}

fn first_failure_4(n: usize, mut ok: impl FnMut(usize, usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if !ok(i, j, k, l) {
                        return Some(vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

/// Identities that hold for the Levi-Civita connection of any frame.
pub fn structural_identities(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
) -> Vec<Check> {
    let n = spec.dim();
    let rl = &bundle.riemann_lowered;
    let mut checks = vec![
        Check::run(
            "torsion-free",
            "∇_X Y - ∇_Y X = [X, Y]",
            conn.torsion_defect(spec).map(|x| x.to_vec()),
        ),
        Check::run(
            "metric-compatible",
            "X g(Y, Z) = g(∇_X Y, Z) + g(Y, ∇_X Z)",
            conn.metric_defect(spec).map(|x| x.to_vec()),
        ),
        Check::run(
            "riemann-skew-first-pair",
            "R̀(X,Y,Z,W) = -R̀(Y,X,Z,W)",
            first_failure_4(n, |i, j, k, l| rl[[i, j, k, l]] == -&rl[[j, i, k, l]]),
        ),
        Check::run(
            "riemann-skew-second-pair",
            "R̀(X,Y,Z,W) = -R̀(X,Y,W,Z)",
            first_failure_4(n, |i, j, k, l| rl[[i, j, k, l]] == -&rl[[i, j, l, k]]),
        ),
        Check::run(
            "riemann-pair-symmetry",
            "R̀(X,Y,Z,W) = R̀(Z,W,X,Y)",
            first_failure_4(n, |i, j, k, l| rl[[i, j, k, l]] == rl[[k, l, i, j]]),
        ),
        Check::run(
            "bianchi-first",
            "R̀(X,Y,Z,W) + R̀(Y,Z,X,W) + R̀(Z,X,Y,W) = 0",
            first_failure_4(n, |i, j, k, l| {
                (&rl[[i, j, k, l]] + &rl[[j, k, i, l]] + &rl[[k, i, j, l]]).is_zero()
            }),
        ),
    ];
    let dr = covariant_riemann(conn, &bundle.riemann);
    let mut second = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in 0..n {
                    for l in 0..n {
                        let s = &dr[[a, b, c, d, l]] + &dr[[b, c, a, d, l]] + &dr[[c, a, b, d, l]];
                        if !s.is_zero() {
                            second = Some(vec![a, b, c, d, l]);
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::run(
        "bianchi-second",
        "(∇_X R)(Y,Z) + (∇_Y R)(Z,X) + (∇_Z R)(X,Y) = 0",
        second,
    ));
    checks.push(Check::run(
        "ricci-symmetric",
        "S(X, Y) = S(Y, X)",
        bundle.ricci.asymmetry().map(|(i, j)| vec![i, j]),
    ));
    checks
}

/// Curvature identities that every Kenmotsu frame satisfies.
pub fn kenmotsu_identities(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
) -> Vec<Check> {
    let n = spec.dim();
    let xi = spec.xi();
    let g = spec.metric();
    let r = &bundle.riemann;
    let s = &bundle.ricci;
    let eta = spec.eta_covector();
    let two_n = Rational::from_int(2 * spec.n() as i64);
    let delta = |a: usize, b: usize| if a == b { Rational::one() } else { Rational::zero() };
    let mut checks = Vec::new();

    checks.push(Check::run(
        "eta-of-curvature",
        "η(R(X,Y)Z) = g(X,Z)η(Y) - g(Y,Z)η(X)",
        first_failure_4(n, |i, j, k, _| {
            let lhs: Rational = (0..n).map(|l| &r[[i, j, k, l]] * &eta[l]).sum();
            lhs == &g[[i, k]] * &eta[j] - &g[[j, k]] * &eta[i]
        }),
    ));
    checks.push(Check::run(
        "curvature-on-xi",
        "R(X,Y)ξ = η(X)Y - η(Y)X",
        first_failure_4(n, |i, j, l, _| {
            let _ = l;
            r[[i, j, xi, l]] == &eta[i] * &delta(j, l) - &eta[j] * &delta(i, l)
        }),
    ));
    checks.push(Check::run(
        "curvature-xi-slot",
        "R(X,ξ)Y = g(X,Y)ξ - η(Y)X",
        first_failure_4(n, |i, j, l, _| {
            r[[i, xi, j, l]] == &g[[i, j]] * &delta(xi, l) - &eta[j] * &delta(i, l)
        }),
    ));
    checks.push(Check::run(
        "ricci-on-xi",
        "S(X, ξ) = -2n η(X)",
        (0..n)
            .find(|&i| s[[i, xi]] != -(&two_n * &eta[i]))
            .map(|i| vec![i]),
    ));
    let phi = spec.phi();
    checks.push(Check::run(
        "ricci-phi-invariance",
        "S(φX, φY) = S(X,Y) + 2n η(X)η(Y)",
        first_failure_4(n, |i, j, _, _| {
            let mut lhs = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    if !phi[[a, i]].is_zero() && !phi[[b, j]].is_zero() {
                        lhs += &(&(&phi[[a, i]] * &phi[[b, j]]) * &s[[a, b]]);
                    }
                }
            }
            lhs == &s[[i, j]] + &(&two_n * &(&eta[i] * &eta[j]))
        }),
    ));
    let xi_v = spec.basis(xi);
    let nabla_xi: Vec<Vec<Rational>> = (0..n).map(|i| conn.nabla(i, &xi_v)).collect();
    checks.push(Check::run(
        "lie-xi-metric",
        "(L_ξ g)(X,Y) = 2[g(X,Y) - η(X)η(Y)]",
        first_failure_4(n, |i, j, _, _| {
            let lhs = spec.inner(&nabla_xi[i], &spec.basis(j)) + spec.inner(&spec.basis(i), &nabla_xi[j]);
            lhs == Rational::from_int(2) * (&g[[i, j]] - &(&eta[i] * &eta[j]))
        }),
    ));
    let closed = star_ricci_kenmotsu(spec, conn, s);
    checks.push(Check::run(
        "star-ricci-routes-agree",
        "½ tr(Z ↦ φR(X,φY)Z) = S(X,Y) + (2n-1)g(X,Y) + η(X)η(Y)",
        match &closed {
            Ok(t) => t
                .entries()
                .find(|(idx, v)| bundle.star_ricci[&idx[..]] != **v)
                .map(|(idx, _)| idx),
            Err(_) => Some(vec![]),
        },
    ));
    let nsq = Rational::from_int(4 * (spec.n() * spec.n()) as i64);
    checks.push(Check::run(
        "star-scalar-shift",
        "r* = r + 4n²",
        (bundle.star_scalar != &bundle.scalar + &nsq).then(Vec::new),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::levi_civita;
    use crate::family;
    use crate::rational::q;

    fn bundle(spec: &ManifoldSpec) -> (ConnectionCoeffs, CurvatureBundle) {
        let conn = levi_civita(spec);
        let b = CurvatureBundle::compute(spec, &conn);
        (conn, b)
    }

    /// Closed-form oracle for constant sectional curvature `k`:
    /// `R(X,Y)Z = k[g(Y,Z)X - g(X,Z)Y]` in an orthonormal frame.
    fn constant_curvature(n: usize, k: i64) -> FrameTensor<Rational> {
        let d = |a: usize, b: usize| if a == b { 1 } else { 0 };
        FrameTensor::from_fn(n, 4, |x| {
            let (i, j, c, l) = (x[0], x[1], x[2], x[3]);
            Rational::from_int(k * (d(j, c) * d(i, l) - d(i, c) * d(j, l)))
        })
    }

    #[test]
    fn example_matches_hyperbolic_closed_form() {
        let spec = family::kenmotsu_warped(2);
        let (_, b) = bundle(&spec);
        assert_eq!(b.riemann, constant_curvature(5, -1));
        // R(e1,e5)e5 = -e1, R(e3,e4)e4 = -e3
        assert_eq!(b.riemann[[0, 4, 4, 0]], q(-1, 1));
        assert_eq!(b.riemann[[2, 3, 3, 2]], q(-1, 1));
    }

    #[test]
    fn flat_frame_has_no_curvature() {
        let spec = family::abelian_flat(1);
        let (_, b) = bundle(&spec);
        assert!(b.riemann.is_zero());
        assert!(b.ricci.is_zero());
        assert!(b.scalar.is_zero());
        assert!(b.star_ricci.is_zero());
        assert_eq!(einstein_classify(&spec, &b.ricci), EinsteinClass::Einstein { lambda: q(0, 1) });
        assert!(w2_tensor(&spec, &b).is_flat);
        assert!(q_tensor(&spec, &b, &q(0, 1)).is_flat);
    }

    #[test]
    fn example_ricci_and_star_ricci() {
        let spec = family::kenmotsu_warped(2);
        let (conn, b) = bundle(&spec);
        assert_eq!(b.ricci, FrameTensor::identity(5).map(|x| x * &q(-4, 1)));
        assert_eq!(b.scalar, q(-20, 1));
        let mut expected = FrameTensor::identity(5).map(|x| -x);
        expected[[4, 4]] = q(0, 1);
        assert_eq!(b.star_ricci, expected);
        assert_eq!(b.star_scalar, q(-4, 1));
        assert_eq!(star_ricci_kenmotsu(&spec, &conn, &b.ricci).unwrap(), expected);
        assert_eq!(&b.star_scalar - &b.scalar, q(16, 1));
    }

    #[test]
    fn three_dimensional_member_scalars() {
        let spec = family::kenmotsu_warped(1);
        let (conn, b) = bundle(&spec);
        assert_eq!(b.scalar, q(-6, 1));
        assert_eq!(b.star_scalar, q(-2, 1));
        assert_eq!(spec.trace(&star_ricci_kenmotsu(&spec, &conn, &b.ricci).unwrap()), q(-2, 1));
    }

    #[test]
    fn closed_form_rejected_off_kenmotsu() {
        let spec = family::abelian_flat(1);
        let (conn, b) = bundle(&spec);
        assert!(matches!(
            star_ricci_kenmotsu(&spec, &conn, &b.ricci),
            Err(Error::NotKenmotsu(_))
        ));
    }

    #[test]
    fn w2_and_q_on_the_example() {
        let spec = family::kenmotsu_warped(2);
        let (_, b) = bundle(&spec);
        let w2 = w2_tensor(&spec, &b);
        assert!(w2.is_flat);
        assert_eq!(w2.einstein_consequence, Some(true));
        let qf = q_tensor(&spec, &b, &q(-4, 1));
        assert!(qf.is_flat);
        assert_eq!(qf.einstein_consequence, Some(true));
        let q0 = q_tensor(&spec, &b, &q(0, 1));
        assert!(!q0.is_flat);
        assert_eq!(q0.tensor, b.riemann_lowered);
        assert_eq!(solve_q_flat_psi(&spec, &b), Some(q(-4, 1)));
    }

    #[test]
    fn einstein_classes_on_the_example() {
        let spec = family::kenmotsu_warped(2);
        let (_, b) = bundle(&spec);
        assert_eq!(einstein_classify(&spec, &b.ricci), EinsteinClass::Einstein { lambda: q(-4, 1) });
        assert_eq!(
            einstein_classify(&spec, &b.star_ricci),
            EinsteinClass::EtaEinstein { lambda: q(-1, 1), c: q(1, 1) }
        );
    }

    #[test]
    fn star_coefficients_follow_closed_form_on_family() {
        for n in [1usize, 3] {
            let spec = family::kenmotsu_warped(n);
            let (_, b) = bundle(&spec);
            let EinsteinClass::Einstein { lambda } = einstein_classify(&spec, &b.ricci) else {
                panic!("family member should be Einstein");
            };
            let expected = EinsteinClass::EtaEinstein {
                lambda: &lambda + &Rational::from_int(2 * n as i64 - 1),
                c: q(1, 1),
            };
            assert_eq!(einstein_classify(&spec, &b.star_ricci), expected);
        }
    }

    #[test]
    fn identity_suites_hold_on_family() {
        for spec in [family::kenmotsu_warped(1), family::kenmotsu_warped(2), family::kenmotsu_warped(3)] {
            let (conn, b) = bundle(&spec);
            for c in structural_identities(&spec, &conn, &b)
                .iter()
                .chain(&kenmotsu_identities(&spec, &conn, &b))
            {
                assert!(c.passed, "{}: {} failed at {:?}", spec.name(), c.id, c.witness);
            }
        }
    }
}
