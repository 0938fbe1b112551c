//! Strategies for random frames and ring tensors, shared by the
//! property tests and the acceptance suite.

#![allow(dead_code)]

use kenmotsu_core::rational::q;
use kenmotsu_core::tensor::invert;
use kenmotsu_core::{family, FrameTensor, ManifoldSpec, Monomial, Rational, RingElement};
use proptest::prelude::*;

pub fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

/// `[e_i, e_N] = e_i + Σ_k D_ki e_k` with `D = [[A, -B], [B, A]]`, `A` skew
/// and `B` symmetric, so `D` is skew and commutes with the paired `φ`.
pub fn kenmotsu_twisted(n: usize) -> impl Strategy<Value = ManifoldSpec> {
    let m = n * n;
    (prop::collection::vec(-2i64..=2, m), prop::collection::vec(-2i64..=2, m)).prop_map(move |(a, b)| {
        let dim = 2 * n + 1;
        let last = dim - 1;
        let at = |i: usize, j: usize| -> i64 {
            match i.cmp(&j) {
                std::cmp::Ordering::Less => a[i * n + j],
                std::cmp::Ordering::Greater => -a[j * n + i],
                std::cmp::Ordering::Equal => 0,
            }
        };
        let bt = |i: usize, j: usize| -> i64 { b[i.min(j) * n + i.max(j)] };
        let d = |k: usize, i: usize| -> i64 {
            let (bk, bi) = (k / n, i / n);
            let (k0, i0) = (k % n, i % n);
            match (bk, bi) {
                (0, 0) | (1, 1) => at(k0, i0),
                (0, 1) => -bt(k0, i0),
                _ => bt(k0, i0),
            }
        };
        let mut c = FrameTensor::zeros(dim, 3);
        for i in 0..last {
            for k in 0..last {
                let v = Rational::from_int(d(k, i) + i64::from(k == i));
                c[[i, last, k]] = v.clone();
                c[[last, i, k]] = -v;
            }
        }
        ManifoldSpec::new("twisted", c, FrameTensor::identity(dim), family::paired_phi(n), last).unwrap()
    })
}

/// `[e_i, e_N] = Σ_k M_ki e_k` for arbitrary `M`: almost contact, rarely
/// Kenmotsu.
pub fn semidirect(n: usize) -> impl Strategy<Value = ManifoldSpec> {
    let dim = 2 * n + 1;
    prop::collection::vec(-2i64..=2, (dim - 1) * (dim - 1)).prop_map(move |m| {
        let last = dim - 1;
        let mut c = FrameTensor::zeros(dim, 3);
        for i in 0..last {
            for k in 0..last {
                let v = Rational::from_int(m[k * last + i]);
                c[[i, last, k]] = v.clone();
                c[[last, i, k]] = -v;
            }
        }
        ManifoldSpec::new("semidirect", c, FrameTensor::identity(dim), family::paired_phi(n), last).unwrap()
    })
}

/// Re-expresses `spec` in the frame `f_a = Σ_b P_ba e_b`, keeping `f_N = ξ`.
pub fn change_basis(spec: &ManifoldSpec, entries: &[i64]) -> Option<ManifoldSpec> {
    let dim = spec.dim();
    let last = dim - 1;
    let mut p = FrameTensor::zeros(dim, 2);
    for b in 0..dim {
        for a in 0..last {
            p[[b, a]] = Rational::from_int(entries[b * dim + a] + i64::from(a == b));
        }
    }
    p[[last, last]] = Rational::one();
    let pinv = invert(&p)?;
    let c = spec.brackets();
    let mut c2 = FrameTensor::zeros(dim, 3);
    for a in 0..dim {
        for b in 0..dim {
            // [f_a, f_b] in the old frame
            let mut old = vec![Rational::zero(); dim];
            for i in 0..dim {
                for j in 0..dim {
                    let w = &p[[i, a]] * &p[[j, b]];
                    if w.is_zero() {
                        continue;
                    }
                    for (m, o) in old.iter_mut().enumerate() {
                        *o += &w * &c[[i, j, m]];
                    }
                }
            }
            for k in 0..dim {
                c2[[a, b, k]] = (0..dim).map(|m| &pinv[[k, m]] * &old[m]).sum();
            }
        }
    }
    let g = spec.metric();
    let g2 = FrameTensor::from_fn(dim, 2, |x| {
        let mut s = Rational::zero();
        for i in 0..dim {
            for j in 0..dim {
                s += &(&p[[i, x[0]]] * &g[[i, j]]) * &p[[j, x[1]]];
            }
        }
        s
    });
    let phi = spec.phi();
    let phi2 = FrameTensor::from_fn(dim, 2, |x| {
        let mut s = Rational::zero();
        for m in 0..dim {
            for j in 0..dim {
                s += &(&pinv[[x[0], m]] * &phi[[m, j]]) * &p[[j, x[1]]];
            }
        }
        s
    });
    Some(ManifoldSpec::new("rebased", c2, g2, phi2, last).expect("a basis change preserves validity"))
}

pub fn any_kenmotsu() -> impl Strategy<Value = ManifoldSpec> {
    prop_oneof![
        3 => (1usize..=2).prop_flat_map(kenmotsu_twisted),
        1 => Just(family::kenmotsu_warped(3)),
    ]
}

pub fn rebased_kenmotsu() -> impl Strategy<Value = ManifoldSpec> {
    (1usize..=2)
        .prop_flat_map(|n| {
            let dim = 2 * n + 1;
            (kenmotsu_twisted(n), prop::collection::vec(-1i64..=1, dim * dim))
        })
        .prop_filter_map("singular basis change", |(spec, p)| change_basis(&spec, &p))
}

pub fn ring_element(nvars: usize) -> impl Strategy<Value = RingElement> {
    prop::collection::vec(
        (small(), prop::collection::vec(0u32..=2, nvars), -2i64..=2),
        0..=4,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(RingElement::zero(nvars), |acc, (c, exps, w)| {
            let m = Monomial { exps, exp_weight: w };
            &acc + &RingElement::term(nvars, c, m)
        })
    })
}

pub fn symmetric_ring_tensor(dim: usize) -> impl Strategy<Value = FrameTensor<RingElement>> {
    prop::collection::vec(ring_element(dim), dim * (dim + 1) / 2).prop_map(move |upper| {
        let idx = |i: usize, j: usize| {
            let (a, b) = (i.min(j), i.max(j));
            a * dim - a * (a + 1) / 2 + b
        };
        FrameTensor::from_fn(dim, 2, |x| upper[idx(x[0], x[1])].clone())
    })
}
