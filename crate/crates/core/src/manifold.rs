//! Homogeneous almost-contact metric manifolds described by constant frame
//! data, and validation of the almost-contact and Kenmotsu axioms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::connection::ConnectionCoeffs;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::RingElement;
use crate::tensor::{determinant, invert, FrameTensor};

/// Frame data `(e_1..e_N, [·,·], g, φ, ξ)` with constant structure
/// constants and constant frame metric.
///
/// Internally all indices are zero-based; the 1-based convention of
/// documents and reports is applied at the edges only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifoldSpec {
    name: String,
    dim: usize,
    brackets: FrameTensor<Rational>,
    metric: FrameTensor<Rational>,
    metric_inv: FrameTensor<Rational>,
    phi: FrameTensor<Rational>,
    xi: usize,
    warping: Option<Vec<i64>>,
}

fn idx1(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| format!("{}", i + 1)).collect();
    format!("({})", parts.join(", "))
}

impl ManifoldSpec {
    /// Builds a spec and enforces the structural invariants: odd dimension
    /// at least 3, bracket antisymmetry, the Jacobi identity, a symmetric
    /// positive-definite metric and `ξ` in range.
    ///
    /// `brackets[[i, j, k]]` is the `e_k` coefficient of `[e_i, e_j]`;
    /// `phi[[k, j]]` is the `e_k` coefficient of `φ(e_j)`.
    pub fn new(
        name: impl Into<String>,
        brackets: FrameTensor<Rational>,
        metric: FrameTensor<Rational>,
        phi: FrameTensor<Rational>,
        xi: usize,
    ) -> Result<Self> {
        let dim = brackets.dim();
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        if dim < 3 || dim.is_multiple_of(2) {
            return invalid(format!("dimension {dim} is not an odd integer >= 3"));
        }
        if brackets.rank() != 3 {
            return invalid(format!("structure constants have rank {}", brackets.rank()));
        }
        for (what, t) in [("metric", &metric), ("phi", &phi)] {
            if t.rank() != 2 || t.dim() != dim {
                return invalid(format!("{what} is not a {dim}x{dim} matrix"));
            }
        }
        if xi >= dim {
            return invalid(format!("xi index {} out of range 1..={dim}", xi + 1));
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if brackets[[i, j, k]] != -&brackets[[j, i, k]] {
                        return invalid(format!(
                            "bracket antisymmetry fails at {}",
                            idx1(&[i, j, k])
                        ));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                for l in j + 1..dim {
                    for k in 0..dim {
                        let s: Rational = (0..dim)
                            .map(|m| {
                                &brackets[[i, j, m]] * &brackets[[m, l, k]]
                                    + &brackets[[j, l, m]] * &brackets[[m, i, k]]
                                    + &brackets[[l, i, m]] * &brackets[[m, j, k]]
                            })
                            .sum();
                        if !s.is_zero() {
                            return invalid(format!(
                                "Jacobi identity fails for {} in component {}",
                                idx1(&[i, j, l]),
                                k + 1
                            ));
                        }
                    }
                }
            }
        }
        if let Some((i, j)) = metric.asymmetry() {
            return invalid(format!("metric is not symmetric at {}", idx1(&[i, j])));
        }
        for size in 1..=dim {
            let minor: Vec<Vec<Rational>> = (0..size)
                .map(|i| (0..size).map(|j| metric[[i, j]].clone()).collect())
                .collect();
            if !determinant(&minor).is_positive() {
                return invalid(format!(
                    "metric is not positive definite (leading minor of order {size})"
                ));
            }
        }
        let metric_inv = invert(&metric).ok_or(Error::SingularMetric)?;
        let warping = infer_warping(&brackets);
        Ok(ManifoldSpec {
            name: name.into(),
            dim,
            brackets,
            metric,
            metric_inv,
            phi,
            xi,
            warping,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n` in `dim = 2n + 1`.
    pub fn n(&self) -> usize {
        (self.dim - 1) / 2
    }

    pub fn brackets(&self) -> &FrameTensor<Rational> {
        &self.brackets
    }

    pub fn metric(&self) -> &FrameTensor<Rational> {
        &self.metric
    }

    pub fn metric_inv(&self) -> &FrameTensor<Rational> {
        &self.metric_inv
    }

    pub fn phi(&self) -> &FrameTensor<Rational> {
        &self.phi
    }

    /// Zero-based frame index of `ξ`.
    pub fn xi(&self) -> usize {
        self.xi
    }

    /// Warping weights `w_i` of the coordinate realization
    /// `e_i = exp(w_i·yN) ∂/∂y_i`, when the brackets admit one.
    pub fn warping(&self) -> Option<&[i64]> {
        self.warping.as_deref()
    }

    pub fn is_orthonormal(&self) -> bool {
        self.metric == FrameTensor::identity(self.dim)
    }

    /// `η(e_i) = g(e_i, ξ)`.
    pub fn eta(&self, i: usize) -> &Rational {
        &self.metric[[i, self.xi]]
    }

    /// `η` as a covector.
    pub fn eta_covector(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.eta(i).clone()).collect()
    }

    /// Frame components of `e_i`.
    pub fn basis(&self, i: usize) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| if k == i { Rational::one() } else { Rational::zero() })
            .collect()
    }

    pub fn apply_phi(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| (0..self.dim).map(|j| &self.phi[[k, j]] * &v[j]).sum())
            .collect()
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += &(ui * &self.metric[[i, j]]) * vj;
            }
        }
        s
    }

    pub fn eta_of(&self, v: &[Rational]) -> Rational {
        (0..self.dim).map(|i| self.eta(i) * &v[i]).sum()
    }

    /// `η ⊗ η` as a rank-2 tensor.
    pub fn eta_eta(&self) -> FrameTensor<Rational> {
        FrameTensor::from_fn(self.dim, 2, |i| self.eta(i[0]) * self.eta(i[1]))
    }

    /// `g`-trace of a rank-2 tensor.
    pub fn trace<T>(&self, t: &FrameTensor<T>) -> T
    where
        T: Clone,
        for<'a> &'a T: core::ops::Mul<&'a Rational, Output = T>,
        T: core::ops::Add<Output = T>,
    {
        let mut acc: Option<T> = None;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let gij = &self.metric_inv[[i, j]];
                if gij.is_zero() {
                    continue;
                }
                let term = &t[[i, j]] * gij;
                acc = Some(match acc {
                    None => term,
                    Some(a) => a + term,
                });
            }
        }
        acc.unwrap_or_else(|| &t[[0, 0]] * &Rational::zero())
    }

    /// The frame derivation `e_i(f)`, zero-based `i`.
    ///
    /// With warping weights `w`, `e_i(f) = exp(w_i·yN)·∂f/∂y_i`. Constants
    /// are killed by every derivation whether or not a realization exists.
    pub fn apply_derivation(&self, i: usize, f: &RingElement) -> Result<RingElement> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                dim: self.dim,
            });
        }
        if f.nvars() != self.dim {
            return Err(Error::DimensionMismatch {
                left: f.nvars(),
                right: self.dim,
            });
        }
        if f.is_constant() {
            return Ok(RingElement::zero(self.dim));
        }
        let w = self
            .warping
            .as_ref()
            .ok_or_else(|| Error::NoRealization(self.name.clone()))?;
        Ok(f.partial(i)?.mul_exp(w[i]))
    }
}

/// A diagonal realization `e_i = exp(w_i·yN)∂_i`, `e_N = ∂_N` has brackets
/// `[e_i, e_N] = -w_i e_i` and all others zero. Returns the weights when
/// the structure constants have exactly that shape with integer entries.
fn infer_warping(c: &FrameTensor<Rational>) -> Option<Vec<i64>> {
    let n = c.dim();
    let last = n - 1;
    let mut w = vec![0i64; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = &c[[i, j, k]];
                let expected_free = !(j == last && i == k && i != last)
                    && !(i == last && j == k && j != last);
                if expected_free && !v.is_zero() {
                    return None;
                }
            }
        }
    }
    for (i, slot) in w.iter_mut().enumerate().take(last) {
        *slot = -c[[i, last, i]].to_i64()?;
    }
    Some(w)
}

/// One axiom check. `witness` is the first failing 1-based index tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub(crate) fn run(
        id: &'static str,
        statement: &'static str,
        first_failure: Option<Vec<usize>>,
    ) -> Self {
        Check {
            id,
            statement,
            passed: first_failure.is_none(),
            witness: first_failure.map(|v| v.into_iter().map(|i| i + 1).collect()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub is_almost_contact: bool,
    pub is_kenmotsu: bool,
}

impl ValidationReport {
    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn first_failure_2(dim: usize, mut ok: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    for i in 0..dim {
        for j in 0..dim {
            if !ok(i, j) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

fn almost_contact_checks(spec: &ManifoldSpec) -> Vec<Check> {
    let n = spec.dim;
    let xi = spec.basis(spec.xi);
    let phi_e: Vec<Vec<Rational>> = (0..n).map(|j| spec.apply_phi(&spec.basis(j))).collect();
    let phi2_e: Vec<Vec<Rational>> = phi_e.iter().map(|v| spec.apply_phi(v)).collect();
    let mut checks = Vec::new();

    checks.push(Check::run(
        "phi-squared",
        "φ²X = -X + η(X)ξ",
        first_failure_2(n, |j, k| {
            let expected = -&spec.basis(j)[k] + spec.eta(j) * &xi[k];
            phi2_e[j][k] == expected
        }),
    ));
    checks.push(Check::run(
        "eta-phi",
        "η(φX) = 0",
        (0..n).find(|&j| !spec.eta_of(&phi_e[j]).is_zero()).map(|j| vec![j]),
    ));
    checks.push(Check::run(
        "phi-xi",
        "φξ = 0",
        phi_e[spec.xi]
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| vec![spec.xi, k]),
    ));
    checks.push(Check::run(
        "eta-xi",
        "η(ξ) = 1",
        (!spec.eta(spec.xi).is_one()).then(|| vec![spec.xi]),
    ));
    checks.push(Check::run(
        "phi-isometry",
        "g(φX, φY) = g(X, Y) - η(X)η(Y)",
        first_failure_2(n, |i, j| {
            spec.inner(&phi_e[i], &phi_e[j]) == &spec.metric[[i, j]] - &(spec.eta(i) * spec.eta(j))
        }),
    ));
    checks.push(Check::run(
        "phi-skew",
        "g(X, φY) = -g(φX, Y)",
        first_failure_2(n, |i, j| {
            spec.inner(&spec.basis(i), &phi_e[j]) == -spec.inner(&phi_e[i], &spec.basis(j))
        }),
    ));
    checks
}

/// Checks the almost-contact metric axioms on all frame indices.
pub fn validate_almost_contact(spec: &ManifoldSpec) -> ValidationReport {
    let checks = almost_contact_checks(spec);
    let ok = checks.iter().all(|c| c.passed);
    ValidationReport {
        checks,
        is_almost_contact: ok,
        is_kenmotsu: false,
    }
}

/// Almost-contact axioms plus the Kenmotsu conditions on `∇φ` and `∇ξ`, and
/// the consequence `(∇_X η)Y = g(X,Y) - η(X)η(Y)`.
pub fn validate_kenmotsu(spec: &ManifoldSpec, conn: &ConnectionCoeffs) -> Result<ValidationReport> {
    if !conn.belongs_to(spec) {
        return Err(Error::MismatchedConnection);
    }
    let n = spec.dim;
    let mut checks = almost_contact_checks(spec);
    let almost_contact = checks.iter().all(|c| c.passed);
    let xi = spec.basis(spec.xi);

    let nabla_phi = first_failure_2(n, |i, j| {
        let ei = spec.basis(i);
        let ej = spec.basis(j);
        // (∇_X φ)Y = ∇_X(φY) - φ(∇_X Y)
        let lhs: Vec<Rational> = {
            let a = conn.nabla(i, &spec.apply_phi(&ej));
            let b = spec.apply_phi(&conn.nabla(i, &ej));
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        };
        let g_x_phiy = spec.inner(&ei, &spec.apply_phi(&ej));
        let phi_x = spec.apply_phi(&ei);
        (0..n).all(|k| lhs[k] == -(&g_x_phiy * &xi[k]) - spec.eta(j) * &phi_x[k])
    });
    checks.push(Check::run(
        "nabla-phi",
        "(∇_X φ)Y = -g(X, φY)ξ - η(Y)φX",
        nabla_phi,
    ));

    let nabla_xi = first_failure_2(n, |i, k| {
        let lhs = conn.nabla(i, &xi);
        lhs[k] == &spec.basis(i)[k] - &(spec.eta(i) * &xi[k])
    });
    checks.push(Check::run("nabla-xi", "∇_X ξ = X - η(X)ξ", nabla_xi));

    let nabla_eta = first_failure_2(n, |i, j| {
        // (∇_X η)Y = X(η(Y)) - η(∇_X Y), and η(e_j) is constant
        let lhs = -spec.eta_of(&conn.nabla(i, &spec.basis(j)));
        lhs == &spec.metric[[i, j]] - &(spec.eta(i) * spec.eta(j))
    });
    checks.push(Check::run(
        "nabla-eta",
        "(∇_X η)Y = g(X, Y) - η(X)η(Y)",
        nabla_eta,
    ));

    let kenmotsu = almost_contact && checks.iter().all(|c| c.passed);
    Ok(ValidationReport {
        checks,
        is_almost_contact: almost_contact,
        is_kenmotsu: kenmotsu,
    })
}
