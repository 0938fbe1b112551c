//! Ricci-Bourguignon type soliton equations: decomposition against
//! `{g, η⊗η}`, trace solving for the soliton constants, exact verification
//! and sign classification.
//!
//! The three equations, written as `LHS = RHS`:
//! - RB: `L_z g + 2S = 2(Ω + ωr)g`
//! - *-RB: `L_z g + 2S* = 2(Ω + ωr*)g`
//! - η-RB: `L_z g + 2S = 2(Λ + ωr)g + 2μ η⊗η`

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::connection::ConnectionCoeffs;
use crate::curvature::CurvatureBundle;
use crate::error::{Error, Result};
use crate::fields::{lie_derivative_metric, VectorField};
use crate::manifold::ManifoldSpec;
use crate::rational::Rational;
use crate::ring::RingElement;
use crate::tensor::FrameTensor;

/// `T = a·g + b·η⊗η + E` with `tr_g E = 0` and `E(ξ, ξ) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GEtaDecomposition {
    pub g_coeff: RingElement,
    pub eta_coeff: RingElement,
    pub remainder: FrameTensor<RingElement>,
}

impl GEtaDecomposition {
    pub fn is_exact(&self) -> bool {
        self.remainder.is_zero()
    }

    pub fn reassemble(&self, spec: &ManifoldSpec) -> FrameTensor<RingElement> {
        let g = spec.metric();
        let ee = spec.eta_eta();
        FrameTensor::from_fn(spec.dim(), 2, |x| {
            let (i, j) = (x[0], x[1]);
            &(&(&self.g_coeff * &g[[i, j]]) + &(&self.eta_coeff * &ee[[i, j]])) + &self.remainder[[i, j]]
        })
    }
}

pub fn decompose_g_eta(spec: &ManifoldSpec, t: &FrameTensor<RingElement>) -> Result<GEtaDecomposition> {
    if t.rank() != 2 || t.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            left: t.dim(),
            right: spec.dim(),
        });
    }
    if let Some((i, j)) = t.asymmetry() {
        return Err(Error::NotSymmetric(i + 1, j + 1));
    }
    // With s = g(ξ,ξ): tr T = N a + s b and T(ξ,ξ) = s a + s² b.
    let xi = spec.xi();
    let s = spec.metric()[[xi, xi]].clone();
    let nn = Rational::from_int(spec.dim() as i64);
    let tr = spec.trace(t);
    let txx = &t[[xi, xi]];
    let denom = &s * &(&nn - &Rational::one());
    let a = (&tr.scale(&s) - txx).scale(&denom.recip().expect("dim >= 3 and s > 0"));
    let b = (&tr - &a.scale(&nn)).scale(&s.recip().expect("s > 0"));
    let g = spec.metric();
    let ee = spec.eta_eta();
    let remainder = FrameTensor::from_fn(spec.dim(), 2, |x| {
        let (i, j) = (x[0], x[1]);
        &(&t[[i, j]] - &(&a * &g[[i, j]])) - &(&b * &ee[[i, j]])
    });
    Ok(GEtaDecomposition {
        g_coeff: a,
        eta_coeff: b,
        remainder,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolitonKind {
    Rb,
    StarRb,
    EtaRb,
}

impl SolitonKind {
    pub fn label(self) -> &'static str {
        match self {
            SolitonKind::Rb => "rb",
            SolitonKind::StarRb => "star-rb",
            SolitonKind::EtaRb => "eta-rb",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolitonParams {
    Omega(Rational),
    Eta { lambda: Rational, mu: Rational },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolitonProblem {
    pub kind: SolitonKind,
    pub field: VectorField,
    pub omega: Rational,
    /// Present in verify mode, absent in solve mode.
    pub params: Option<SolitonParams>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolitonClass {
    Compressing,
    Balancing,
    Enlarging,
    Indeterminate,
}

impl SolitonClass {
    pub fn label(self) -> &'static str {
        match self {
            SolitonClass::Compressing => "compressing",
            SolitonClass::Balancing => "balancing",
            SolitonClass::Enlarging => "enlarging",
            SolitonClass::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for SolitonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_soliton(value: &Rational) -> SolitonClass {
    match value.signum() {
        Ordering::Greater => SolitonClass::Compressing,
        Ordering::Equal => SolitonClass::Balancing,
        Ordering::Less => SolitonClass::Enlarging,
    }
}

/// Sign classification of a possibly non-constant soliton constant.
pub fn classify_ring(value: &RingElement) -> SolitonClass {
    value
        .constant_value()
        .map_or(SolitonClass::Indeterminate, |c| classify_soliton(&c))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolitonReport {
    pub kind: SolitonKind,
    pub field: String,
    pub omega: Rational,
    /// Ω, or `(Λ, μ)` for η-RB; solved or as supplied.
    pub params: SolitonParams,
    pub solved: bool,
    pub lhs: FrameTensor<RingElement>,
    /// `LHS - RHS`.
    pub residual: FrameTensor<RingElement>,
    pub residual_trace: RingElement,
    pub residual_is_zero: bool,
    pub trace_satisfied: bool,
    pub classification: SolitonClass,
    pub notes: Vec<String>,
}

/// `L_z g + 2T` with `T = S*` for *-RB and `T = S` otherwise.
pub fn soliton_lhs(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
    kind: SolitonKind,
    field: &VectorField,
) -> Result<FrameTensor<RingElement>> {
    let l = lie_derivative_metric(spec, conn, field)?;
    let t = match kind {
        SolitonKind::StarRb => &bundle.star_ricci,
        SolitonKind::Rb | SolitonKind::EtaRb => &bundle.ricci,
    };
    let two = Rational::from_int(2);
    Ok(FrameTensor::from_fn(spec.dim(), 2, |x| {
        let v = &t[[x[0], x[1]]] * &two;
        &l[[x[0], x[1]]] + &RingElement::constant(spec.dim(), v)
    }))
}

fn scalar_for(bundle: &CurvatureBundle, kind: SolitonKind) -> &Rational {
    match kind {
        SolitonKind::StarRb => &bundle.star_scalar,
        SolitonKind::Rb | SolitonKind::EtaRb => &bundle.scalar,
    }
}

/// `LHS - RHS` for given (possibly ring-valued) parameters.
pub fn residual_with(
    spec: &ManifoldSpec,
    bundle: &CurvatureBundle,
    kind: SolitonKind,
    lhs: &FrameTensor<RingElement>,
    omega: &Rational,
    constant: &RingElement,
    mu: Option<&RingElement>,
) -> FrameTensor<RingElement> {
    let n = spec.dim();
    let g = spec.metric();
    let ee = spec.eta_eta();
    let wr = RingElement::constant(n, omega * scalar_for(bundle, kind));
    let coeff = (constant + &wr).scale(&Rational::from_int(2));
    let mu2 = mu.map(|m| m.scale(&Rational::from_int(2)));
    FrameTensor::from_fn(n, 2, |x| {
        let (i, j) = (x[0], x[1]);
        let mut r = &lhs[[i, j]] - &(&coeff * &g[[i, j]]);
        if let Some(m) = &mu2 {
            r = &r - &(m * &ee[[i, j]]);
        }
        r
    })
}

/// The trace-solved soliton constant as a ring element:
/// `Ω = tr(LHS)/(2N) - ωr` (RB, *-RB). For η-RB returns `Λ`, with `μ`
/// from the decomposition of `LHS`.
pub fn solve_params_ring(
    spec: &ManifoldSpec,
    bundle: &CurvatureBundle,
    kind: SolitonKind,
    lhs: &FrameTensor<RingElement>,
    omega: &Rational,
) -> Result<(RingElement, Option<RingElement>, GEtaDecomposition)> {
    let n = spec.dim();
    let wr = RingElement::constant(n, omega * scalar_for(bundle, kind));
    let d = decompose_g_eta(spec, lhs)?;
    match kind {
        SolitonKind::Rb | SolitonKind::StarRb => {
            let two_n = Rational::from_int(2 * n as i64);
            let c = &spec.trace(lhs).scale(&two_n.recip().expect("nonzero")) - &wr;
            Ok((c, None, d))
        }
        SolitonKind::EtaRb => {
            let half = Rational::new(1, 2);
            let lambda = &d.g_coeff.scale(&half) - &wr;
            let mu = d.eta_coeff.scale(&half);
            Ok((lambda, Some(mu), d))
        }
    }
}

fn constant_or(e: &RingElement, what: &str) -> Result<Rational> {
    e.constant_value()
        .ok_or_else(|| Error::NonConstantSolution(format!("{what} = {e} is not constant")))
}

fn degeneracy_note(spec: &ManifoldSpec, omega: &Rational) -> Option<String> {
    let wn = omega * &Rational::from_int(spec.dim() as i64);
    wn.is_one().then(|| {
        String::from("ω(2n+1) = 1: the solenoidal criterion divides by 1 - ω(2n+1) and is inapplicable")
    })
}

/// Solves the trace of the chosen equation for its constant(s) and reports
/// whether the full tensor equation then holds.
pub fn soliton_solve_trace(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
    problem: &SolitonProblem,
) -> Result<SolitonReport> {
    if problem.params.is_some() {
        return Err(Error::ParamsMismatch("solve mode takes no parameters"));
    }
    let lhs = soliton_lhs(spec, conn, bundle, problem.kind, &problem.field)?;
    let (c, mu, d) = solve_params_ring(spec, bundle, problem.kind, &lhs, &problem.omega)?;
    let mut notes = Vec::new();
    let params = match problem.kind {
        SolitonKind::Rb | SolitonKind::StarRb => SolitonParams::Omega(constant_or(&c, "Ω")?),
        SolitonKind::EtaRb => {
            let lambda = constant_or(&c, "Λ")?;
            let mu = constant_or(mu.as_ref().expect("η-RB has μ"), "μ")?;
            if !d.is_exact() {
                notes.push(String::from(
                    "L_z g + 2S is not in span{g, η⊗η}; Λ and μ fit the trace and the (ξ,ξ) slot only",
                ));
            }
            SolitonParams::Eta { lambda, mu }
        }
    };
    notes.extend(degeneracy_note(spec, &problem.omega));
    finish(spec, bundle, problem, lhs, params, true, notes)
}

/// Evaluates the chosen equation exactly at supplied parameters.
pub fn soliton_verify(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
    problem: &SolitonProblem,
) -> Result<SolitonReport> {
    let params = problem
        .params
        .clone()
        .ok_or(Error::ParamsMismatch("verify mode needs parameters"))?;
    match (problem.kind, &params) {
        (SolitonKind::EtaRb, SolitonParams::Eta { .. }) => {}
        (SolitonKind::Rb | SolitonKind::StarRb, SolitonParams::Omega(_)) => {}
        (SolitonKind::EtaRb, _) => return Err(Error::ParamsMismatch("eta-rb takes Λ and μ")),
        _ => return Err(Error::ParamsMismatch("rb and star-rb take Ω")),
    }
    let lhs = soliton_lhs(spec, conn, bundle, problem.kind, &problem.field)?;
    let mut notes = Vec::new();
    notes.extend(degeneracy_note(spec, &problem.omega));
    finish(spec, bundle, problem, lhs, params, false, notes)
}

/// Solves when no parameters are given, verifies otherwise.
pub fn evaluate(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    bundle: &CurvatureBundle,
    problem: &SolitonProblem,
) -> Result<SolitonReport> {
    if problem.params.is_some() {
        soliton_verify(spec, conn, bundle, problem)
    } else {
        soliton_solve_trace(spec, conn, bundle, problem)
    }
}

fn finish(
    spec: &ManifoldSpec,
    bundle: &CurvatureBundle,
    problem: &SolitonProblem,
    lhs: FrameTensor<RingElement>,
    params: SolitonParams,
    solved: bool,
    notes: Vec<String>,
) -> Result<SolitonReport> {
    let n = spec.dim();
    let (constant, mu, class) = match &params {
        SolitonParams::Omega(o) => (o.clone(), None, classify_soliton(o)),
        SolitonParams::Eta { lambda, mu } => (lambda.clone(), Some(mu.clone()), classify_soliton(lambda)),
    };
    let mu = mu.map(|m| RingElement::constant(n, m));
    let residual = residual_with(
        spec,
        bundle,
        problem.kind,
        &lhs,
        &problem.omega,
        &RingElement::constant(n, constant),
        mu.as_ref(),
    );
    let residual_trace = spec.trace(&residual);
    Ok(SolitonReport {
        kind: problem.kind,
        field: problem.field.name().into(),
        omega: problem.omega.clone(),
        params,
        solved,
        lhs,
        residual_is_zero: residual.is_zero(),
        trace_satisfied: residual_trace.is_zero(),
        residual,
        residual_trace,
        classification: class,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::levi_civita;
    use crate::family;
    use crate::rational::q;

    struct Setup {
        spec: ManifoldSpec,
        conn: ConnectionCoeffs,
        bundle: CurvatureBundle,
    }

    fn setup(spec: ManifoldSpec) -> Setup {
        let conn = levi_civita(&spec);
        let bundle = CurvatureBundle::compute(&spec, &conn);
        Setup { spec, conn, bundle }
    }

    fn example_z(spec: &ManifoldSpec) -> VectorField {
        let comps = ["y1*exp(y5)", "y2*exp(y5)", "y3*exp(y5)", "y4*exp(y5)", "1"]
            .iter()
            .map(|s| RingElement::parse(5, s).unwrap())
            .collect();
        VectorField::new(spec, "z", comps).unwrap()
    }

    fn problem(kind: SolitonKind, field: VectorField, omega: Rational) -> SolitonProblem {
        SolitonProblem {
            kind,
            field,
            omega,
            params: None,
        }
    }

    fn omega_of(r: &SolitonReport) -> Rational {
        match &r.params {
            SolitonParams::Omega(o) => o.clone(),
            SolitonParams::Eta { .. } => panic!("expected Ω"),
        }
    }

    #[test]
    fn decomposition_examples() {
        let s = setup(family::kenmotsu_warped(2));
        let g = s.spec.metric().to_ring(5);
        let d = decompose_g_eta(&s.spec, &g).unwrap();
        assert_eq!(d.g_coeff, RingElement::one(5));
        assert!(d.eta_coeff.is_zero() && d.is_exact());

        let d = decompose_g_eta(&s.spec, &s.bundle.ricci.to_ring(5)).unwrap();
        assert_eq!(d.g_coeff, RingElement::constant(5, q(-4, 1)));
        assert!(d.eta_coeff.is_zero() && d.is_exact());

        let lhs = soliton_lhs(&s.spec, &s.conn, &s.bundle, SolitonKind::StarRb, &example_z(&s.spec)).unwrap();
        let d = decompose_g_eta(&s.spec, &lhs).unwrap();
        assert_eq!(d.g_coeff, RingElement::constant(5, q(2, 1)));
        assert_eq!(d.eta_coeff, RingElement::constant(5, q(-2, 1)));
        assert!(d.is_exact());
    }

    #[test]
    fn decomposition_rejects_asymmetric() {
        let s = setup(family::kenmotsu_warped(1));
        let mut t = FrameTensor::zeros(3, 2);
        t[[0, 1]] = q(1, 1);
        assert_eq!(decompose_g_eta(&s.spec, &t.to_ring(3)), Err(Error::NotSymmetric(1, 2)));
    }

    #[test]
    fn star_rb_on_the_example() {
        let s = setup(family::kenmotsu_warped(2));
        for (w, expected, class) in [
            (q(0, 1), q(4, 5), SolitonClass::Compressing),
            (q(1, 1), q(24, 5), SolitonClass::Compressing),
            (q(-2, 1), q(-36, 5), SolitonClass::Enlarging),
        ] {
            let r = soliton_solve_trace(
                &s.spec,
                &s.conn,
                &s.bundle,
                &problem(SolitonKind::StarRb, example_z(&s.spec), w),
            )
            .unwrap();
            assert_eq!(omega_of(&r), expected);
            assert_eq!(r.classification, class);
            assert!(r.trace_satisfied);
            assert!(!r.residual_is_zero);
        }
        let r = soliton_solve_trace(
            &s.spec,
            &s.conn,
            &s.bundle,
            &problem(SolitonKind::StarRb, example_z(&s.spec), q(1, 1)),
        )
        .unwrap();
        let mut expected = FrameTensor::identity(5).map(|x| x * &q(2, 5));
        expected[[4, 4]] = q(-8, 5);
        assert_eq!(r.residual, expected.to_ring(5));
    }

    #[test]
    fn verify_mode_matches_solve_mode() {
        let s = setup(family::kenmotsu_warped(2));
        let mut p = problem(SolitonKind::StarRb, example_z(&s.spec), q(1, 1));
        p.params = Some(SolitonParams::Omega(q(24, 5)));
        let r = soliton_verify(&s.spec, &s.conn, &s.bundle, &p).unwrap();
        assert!(r.trace_satisfied && !r.residual_is_zero);
        p.params = Some(SolitonParams::Omega(q(5, 1)));
        let r = soliton_verify(&s.spec, &s.conn, &s.bundle, &p).unwrap();
        assert!(!r.trace_satisfied);
        p.params = Some(SolitonParams::Eta { lambda: q(0, 1), mu: q(0, 1) });
        assert!(matches!(
            soliton_verify(&s.spec, &s.conn, &s.bundle, &p),
            Err(Error::ParamsMismatch(_))
        ));
    }

    #[test]
    fn eta_rb_is_exact_on_the_example() {
        let s = setup(family::kenmotsu_warped(2));
        let w = q(1, 1);
        let r = soliton_solve_trace(
            &s.spec,
            &s.conn,
            &s.bundle,
            &problem(SolitonKind::EtaRb, example_z(&s.spec), w.clone()),
        )
        .unwrap();
        let SolitonParams::Eta { lambda, mu } = &r.params else { panic!() };
        assert_eq!(mu, &q(-2, 1));
        // 2Λ + 2ωr = -4 with r = -20
        assert_eq!(&(lambda + &(&w * &q(-20, 1))) * &q(2, 1), q(-4, 1));
        assert!(r.residual_is_zero && r.trace_satisfied);

        let mut p = problem(SolitonKind::EtaRb, example_z(&s.spec), w);
        p.params = Some(SolitonParams::Eta { lambda: lambda.clone(), mu: mu.clone() });
        assert!(soliton_verify(&s.spec, &s.conn, &s.bundle, &p).unwrap().residual_is_zero);
    }

    #[test]
    fn flat_zero_field_is_exact() {
        let s = setup(family::abelian_flat(1));
        let mut p = problem(SolitonKind::Rb, VectorField::zero(&s.spec), q(7, 3));
        p.params = Some(SolitonParams::Omega(q(0, 1)));
        let r = soliton_verify(&s.spec, &s.conn, &s.bundle, &p).unwrap();
        assert!(r.residual_is_zero && r.trace_satisfied);
        assert_eq!(r.classification, SolitonClass::Balancing);
    }

    #[test]
    fn reeb_soliton_constant() {
        for n in 1..=3usize {
            let s = setup(family::kenmotsu_warped(n));
            let nsq = Rational::from_int(4 * (n * n) as i64);
            for w in [q(0, 1), q(1, 2), q(-3, 1)] {
                let r = soliton_solve_trace(
                    &s.spec,
                    &s.conn,
                    &s.bundle,
                    &problem(SolitonKind::StarRb, VectorField::reeb(&s.spec), w.clone()),
                )
                .unwrap();
                assert_eq!(omega_of(&r), -(&w * &(&nsq + &s.bundle.scalar)));
                assert!(r.residual_is_zero);
            }
        }
    }

    #[test]
    fn non_constant_trace_is_rejected() {
        let s = setup(family::kenmotsu_warped(2));
        let f = VectorField::new(
            &s.spec,
            "c",
            ["0", "0", "0", "0", "exp(y5)"]
                .iter()
                .map(|x| RingElement::parse(5, x).unwrap())
                .collect(),
        )
        .unwrap();
        let err = soliton_solve_trace(&s.spec, &s.conn, &s.bundle, &problem(SolitonKind::Rb, f, q(0, 1)));
        assert!(matches!(err, Err(Error::NonConstantSolution(_))));
    }

    #[test]
    fn classification_signs() {
        assert_eq!(classify_soliton(&q(24, 5)), SolitonClass::Compressing);
        assert_eq!(classify_soliton(&q(0, 1)), SolitonClass::Balancing);
        assert_eq!(classify_soliton(&q(-1, 1)), SolitonClass::Enlarging);
    }
}
