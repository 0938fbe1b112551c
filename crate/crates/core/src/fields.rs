//! Vector fields with ring-valued frame components: covariant derivative,
//! divergence, Lie derivative of the metric, conformal-Killing detection
//! and torse-forming decomposition.

use alloc::string::String;
use alloc::vec::Vec;

use crate::connection::ConnectionCoeffs;
use crate::error::{Error, Result};
use crate::manifold::ManifoldSpec;
use crate::rational::Rational;
use crate::ring::RingElement;
use crate::tensor::FrameTensor;

/// `z = Σ_i f_i e_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    name: String,
    components: Vec<RingElement>,
    declared_gradient: bool,
}

impl VectorField {
    pub fn new(spec: &ManifoldSpec, name: impl Into<String>, components: Vec<RingElement>) -> Result<Self> {
        let name = name.into();
        if components.len() != spec.dim() {
            return Err(Error::FieldShape {
                name,
                found: components.len(),
                dim: spec.dim(),
            });
        }
        if let Some(c) = components.iter().find(|c| c.nvars() != spec.dim()) {
            return Err(Error::DimensionMismatch {
                left: c.nvars(),
                right: spec.dim(),
            });
        }
        Ok(VectorField {
            name,
            components,
            declared_gradient: false,
        })
    }

    pub fn constant(spec: &ManifoldSpec, name: impl Into<String>, v: &[Rational]) -> Result<Self> {
        let comps = v.iter().map(|c| RingElement::constant(spec.dim(), c.clone())).collect();
        Self::new(spec, name, comps)
    }

    pub fn zero(spec: &ManifoldSpec) -> Self {
        Self::constant(spec, "zero", &alloc::vec![Rational::zero(); spec.dim()]).expect("shape matches")
    }

    /// The Reeb field `ξ`.
    pub fn reeb(spec: &ManifoldSpec) -> Self {
        Self::constant(spec, "xi", &spec.basis(spec.xi())).expect("shape matches")
    }

    /// Marks the field as the gradient of some potential. Not verified.
    pub fn with_declared_gradient(mut self, flag: bool) -> Self {
        self.declared_gradient = flag;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[RingElement] {
        &self.components
    }

    pub fn declared_gradient(&self) -> bool {
        self.declared_gradient
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RingElement::is_zero)
    }

    /// Whether this field has the same components as `ξ`.
    pub fn is_reeb(&self, spec: &ManifoldSpec) -> bool {
        self.components == Self::reeb(spec).components
    }
}

fn check_dim(spec: &ManifoldSpec, conn: &ConnectionCoeffs, z: &VectorField) -> Result<()> {
    if conn.dim() != spec.dim() {
        return Err(Error::MismatchedConnection);
    }
    if z.dim() != spec.dim() {
        return Err(Error::FieldShape {
            name: z.name.clone(),
            found: z.dim(),
            dim: spec.dim(),
        });
    }
    Ok(())
}

/// Frame components of `∇_{e_i} z = Σ_j [e_i(f_j) + Σ_k f_k Γ_ik^j] e_j`.
pub fn covariant_derivative(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    i: usize,
    z: &VectorField,
) -> Result<Vec<RingElement>> {
    check_dim(spec, conn, z)?;
    if i >= spec.dim() {
        return Err(Error::IndexOutOfRange {
            index: i + 1,
            dim: spec.dim(),
        });
    }
    let n = spec.dim();
    let gam = conn.gamma();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = spec.apply_derivation(i, &z.components[j])?;
        for k in 0..n {
            let g = &gam[[i, k, j]];
            if !g.is_zero() && !z.components[k].is_zero() {
                acc = &acc + &(&z.components[k] * g);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// `D[i][j]`: the `e_j` component of `∇_{e_i} z`.
pub fn nabla_matrix(spec: &ManifoldSpec, conn: &ConnectionCoeffs, z: &VectorField) -> Result<Vec<Vec<RingElement>>> {
    (0..spec.dim()).map(|i| covariant_derivative(spec, conn, i, z)).collect()
}

/// `div z = tr(X ↦ ∇_X z)`.
pub fn divergence(spec: &ManifoldSpec, conn: &ConnectionCoeffs, z: &VectorField) -> Result<RingElement> {
    let d = nabla_matrix(spec, conn, z)?;
    Ok(d.iter()
        .enumerate()
        .fold(RingElement::zero(spec.dim()), |acc, (i, row)| &acc + &row[i]))
}

/// `(L_z g)(e_i, e_j) = g(∇_i z, e_j) + g(e_i, ∇_j z)`.
pub fn lie_derivative_metric(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    z: &VectorField,
) -> Result<FrameTensor<RingElement>> {
    let d = nabla_matrix(spec, conn, z)?;
    Ok(lie_from_nabla(spec, &d))
}

fn lie_from_nabla(spec: &ManifoldSpec, d: &[Vec<RingElement>]) -> FrameTensor<RingElement> {
    let n = spec.dim();
    let g = spec.metric();
    FrameTensor::from_fn(n, 2, |x| {
        let (i, j) = (x[0], x[1]);
        let mut acc = RingElement::zero(n);
        for l in 0..n {
            if !g[[l, j]].is_zero() {
                acc = &acc + &(&d[i][l] * &g[[l, j]]);
            }
            if !g[[i, l]].is_zero() {
                acc = &acc + &(&d[j][l] * &g[[i, l]]);
            }
        }
        acc
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConformalClass {
    NotConformal,
    /// `L_z g = 2σg` with `σ` non-constant.
    Proper { sigma: RingElement },
    /// `σ` a nonzero constant.
    ProperHomothetic { sigma: Rational },
    Killing,
}

impl ConformalClass {
    pub fn label(&self) -> &'static str {
        match self {
            ConformalClass::NotConformal => "not conformal Killing",
            ConformalClass::Proper { .. } => "proper conformal Killing",
            ConformalClass::ProperHomothetic { .. } => "proper homothetic",
            ConformalClass::Killing => "Killing",
        }
    }

    /// The conformal factor, when there is one.
    pub fn sigma(&self, nvars: usize) -> Option<RingElement> {
        match self {
            ConformalClass::NotConformal => None,
            ConformalClass::Proper { sigma } => Some(sigma.clone()),
            ConformalClass::ProperHomothetic { sigma } => Some(RingElement::constant(nvars, sigma.clone())),
            ConformalClass::Killing => Some(RingElement::zero(nvars)),
        }
    }

    pub fn is_homothetic(&self) -> bool {
        matches!(self, ConformalClass::ProperHomothetic { .. } | ConformalClass::Killing)
    }
}

pub fn conformal_killing_classify(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    z: &VectorField,
) -> Result<ConformalClass> {
    let l = lie_derivative_metric(spec, conn, z)?;
    Ok(conformal_from_lie(spec, &l))
}

pub(crate) fn conformal_from_lie(spec: &ManifoldSpec, l: &FrameTensor<RingElement>) -> ConformalClass {
    let g = spec.metric();
    // g is positive definite, so g(e_1, e_1) ≠ 0 fixes the candidate factor
    let two_g00 = &g[[0, 0]] * &Rational::from_int(2);
    let sigma = l[[0, 0]].scale(&two_g00.recip().expect("positive"));
    let two_sigma = sigma.scale(&Rational::from_int(2));
    if l.entries().any(|(idx, v)| *v != &two_sigma * &g[&idx[..]]) {
        return ConformalClass::NotConformal;
    }
    match sigma.constant_value() {
        Some(c) if c.is_zero() => ConformalClass::Killing,
        Some(c) => ConformalClass::ProperHomothetic { sigma: c },
        None => ConformalClass::Proper { sigma },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorseSubclass {
    Parallel,
    Concurrent,
    Concircular,
    Recurrent,
    Torqued,
    Generic,
    None,
}

impl TorseSubclass {
    pub fn label(self) -> &'static str {
        match self {
            TorseSubclass::Parallel => "parallel",
            TorseSubclass::Concurrent => "concurrent",
            TorseSubclass::Concircular => "concircular",
            TorseSubclass::Recurrent => "recurrent",
            TorseSubclass::Torqued => "torqued",
            TorseSubclass::Generic => "generic",
            TorseSubclass::None => "none",
        }
    }

    /// `γ ≡ 0`; parallel and concurrent fields are concircular too.
    pub fn is_concircular(self) -> bool {
        matches!(
            self,
            TorseSubclass::Parallel | TorseSubclass::Concurrent | TorseSubclass::Concircular
        )
    }
}

/// Solution of `∇_X ϱ = ΨX + γ(X)ϱ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorseFormingReport {
    pub is_torse_forming: bool,
    pub psi: Option<RingElement>,
    /// `γ(e_i)`.
    pub gamma: Option<Vec<RingElement>>,
    pub gamma_of_rho: Option<RingElement>,
    pub subclass: TorseSubclass,
}

impl TorseFormingReport {
    fn none() -> Self {
        TorseFormingReport {
            is_torse_forming: false,
            psi: None,
            gamma: None,
            gamma_of_rho: None,
            subclass: TorseSubclass::None,
        }
    }
}

/// Solves `D[i][j] = Ψδ_ij + γ_i ϱ^j` for `Ψ` and `γ` over the ring.
///
/// With at least three frame directions every `γ_i` is pinned either by an
/// off-diagonal equation or, once `Ψ` is known, by the diagonal one, so the
/// solution is unique whenever it exists.
pub fn torse_forming_decompose(
    spec: &ManifoldSpec,
    conn: &ConnectionCoeffs,
    rho: &VectorField,
) -> Result<TorseFormingReport> {
    check_dim(spec, conn, rho)?;
    if rho.is_zero() {
        return Err(Error::VanishingField);
    }
    let d = nabla_matrix(spec, conn, rho)?;
    Ok(solve_torse(spec.dim(), &d, rho.components()))
}

fn solve_torse(n: usize, d: &[Vec<RingElement>], rho: &[RingElement]) -> TorseFormingReport {
    let mut gamma: Vec<Option<RingElement>> = alloc::vec![None; n];
    for (i, slot) in gamma.iter_mut().enumerate() {
        if let Some(j) = (0..n).find(|&j| j != i && !rho[j].is_zero()) {
            match d[i][j].exact_div(&rho[j]) {
                Some(q) => *slot = Some(q),
                None => return TorseFormingReport::none(),
            }
        }
    }
    let Some(k) = gamma.iter().position(Option::is_some) else {
        return TorseFormingReport::none();
    };
    let psi = &d[k][k] - &(gamma[k].as_ref().expect("set") * &rho[k]);
    for i in 0..n {
        if gamma[i].is_none() {
            let rest = &d[i][i] - &psi;
            match rest.exact_div(&rho[i]) {
                Some(q) => gamma[i] = Some(q),
                None => return TorseFormingReport::none(),
            }
        }
    }
    let gamma: Vec<RingElement> = gamma.into_iter().map(|g| g.expect("all solved")).collect();
    for i in 0..n {
        for j in 0..n {
            let mut rhs = &gamma[i] * &rho[j];
            if i == j {
                rhs = &rhs + &psi;
            }
            if d[i][j] != rhs {
                return TorseFormingReport::none();
            }
        }
    }
    let gamma_of_rho = gamma
        .iter()
        .zip(rho)
        .fold(RingElement::zero(rho[0].nvars()), |acc, (g, r)| &acc + &(g * r));
    let gamma_zero = gamma.iter().all(RingElement::is_zero);
    let subclass = if gamma_zero && psi.is_zero() {
        TorseSubclass::Parallel
    } else if gamma_zero && psi.constant_value().is_some_and(|c| c.is_one()) {
        TorseSubclass::Concurrent
    } else if gamma_zero {
        TorseSubclass::Concircular
    } else if psi.is_zero() {
        TorseSubclass::Recurrent
    } else if gamma_of_rho.is_zero() {
        TorseSubclass::Torqued
    } else {
        TorseSubclass::Generic
    };
    TorseFormingReport {
        is_torse_forming: true,
        psi: Some(psi),
        gamma: Some(gamma),
        gamma_of_rho: Some(gamma_of_rho),
        subclass,
    }
}

/// Everything the reports need about one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldAnalysis {
    pub name: String,
    pub nabla: Vec<Vec<RingElement>>,
    pub divergence: RingElement,
    pub lie_metric: FrameTensor<RingElement>,
    pub conformal: ConformalClass,
    /// `None` for the zero field.
    pub torse_forming: Option<TorseFormingReport>,
    pub declared_gradient: bool,
}

pub fn analyze_field(spec: &ManifoldSpec, conn: &ConnectionCoeffs, z: &VectorField) -> Result<FieldAnalysis> {
    check_dim(spec, conn, z)?;
    let nabla = nabla_matrix(spec, conn, z)?;
    let divergence = (0..spec.dim()).fold(RingElement::zero(spec.dim()), |acc, i| &acc + &nabla[i][i]);
    let lie_metric = lie_from_nabla(spec, &nabla);
    let conformal = conformal_from_lie(spec, &lie_metric);
    let torse_forming = (!z.is_zero()).then(|| solve_torse(spec.dim(), &nabla, z.components()));
    Ok(FieldAnalysis {
        name: z.name().into(),
        nabla,
        divergence,
        lie_metric,
        conformal,
        torse_forming,
        declared_gradient: z.declared_gradient(),
    })
}
