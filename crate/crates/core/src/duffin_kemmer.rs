//! The classical 4-dimensional Duffin-Kemmer baseline.
//!
//! A concrete spin-0 (5x5) representation: with basis labels {0,1,2,3,*},
//! `beta^mu = E_{mu,*} + eta^{mu mu} E_{*,mu}` for the metric
//! `eta = diag(1,-1,-1,-1)`. The family satisfies the cubic relations
//!
//! ```text
//! beta^(mu beta^nu beta^lambda) =
//!     2 { g^{mu nu} beta^lambda + g^{lambda mu} beta^nu + g^{lambda nu} beta^mu }
//! ```
//!
//! and the identity `(p.beta)^3 = g(p,p) (p.beta)`: the degree-3, rank-2
//! counterpart of the quartic delta-matrix algebra, checked by the same
//! engine.

use std::sync::LazyLock;

use num_traits::Zero;

use crate::algebra;
use crate::error::{Error, Result};
use crate::matrix::MatrixCN;
use crate::scalar::{rat_int, GaussianRational, Rational};

/// The pseudoeuclidean metric diag(1, -1, -1, -1).
#[derive(Clone, Copy, Debug, Default)]
pub struct MinkowskiMetric;

impl MinkowskiMetric {
    pub fn component(&self, mu: usize, nu: usize) -> Rational {
        if mu != nu {
            return Rational::zero();
        }
        rat_int(if mu == 0 { 1 } else { -1 })
    }

    /// `g(q, q) = q0^2 - q1^2 - q2^2 - q3^2`.
    pub fn norm(&self, q: &[Rational; 4]) -> Rational {
        &q[0] * &q[0] - &q[1] * &q[1] - &q[2] * &q[2] - &q[3] * &q[3]
    }
}

/// The four 5x5 spin-0 Duffin-Kemmer matrices.
#[derive(Clone, Debug)]
pub struct DkBetaFamily {
    betas: [MatrixCN; 4],
}

impl DkBetaFamily {
    pub fn standard() -> &'static DkBetaFamily {
        static FAMILY: LazyLock<DkBetaFamily> = LazyLock::new(|| {
            let metric = MinkowskiMetric;
            let betas = std::array::from_fn(|mu| {
                let mut m = MatrixCN::zeros(5, 5);
                m.set(mu, 4, GaussianRational::one());
                m.set(
                    4,
                    mu,
                    GaussianRational::from_rational(metric.component(mu, mu)),
                );
                m
            });
            DkBetaFamily { betas }
        });
        &FAMILY
    }

    pub fn matrix(&self, mu: usize) -> Result<&MatrixCN> {
        self.betas.get(mu).ok_or_else(|| Error::IndexOutOfRange {
            context: format!("beta index {mu} must lie in 0..=3"),
        })
    }

    pub fn all(&self) -> &[MatrixCN; 4] {
        &self.betas
    }
}

/// The matrix `beta^mu`.
pub fn beta_matrix(mu: usize) -> Result<MatrixCN> {
    DkBetaFamily::standard().matrix(mu).cloned()
}

/// Exact check of the Duffin-Kemmer relation at one index triple: the
/// 6-term symmetrized product against twice the metric combination.
pub fn check_dk_relation(mu: usize, nu: usize, lam: usize) -> Result<bool> {
    for &idx in &[mu, nu, lam] {
        if idx > 3 {
            return Err(Error::IndexOutOfRange {
                context: format!("beta index {idx} must lie in 0..=3"),
            });
        }
    }
    let family = DkBetaFamily::standard().all();
    let lhs = algebra::symmetrized_product(family, &[mu, nu, lam]);
    let metric = MinkowskiMetric;
    let rhs = algebra::symmetrized_identity_rhs(
        family,
        &[mu, nu, lam],
        |others| metric.component(others[0], others[1]),
        2,
    );
    Ok(lhs == rhs)
}

/// Exact check of `(p.beta)^3 = g(p,p) (p.beta)` for a rational 4-momentum.
pub fn dk_cubic_check(q: &[Rational; 4]) -> bool {
    let x = algebra::linear_combination(DkBetaFamily::standard().all(), q);
    algebra::annihilating_polynomial_holds(&x, 3, &MinkowskiMetric.norm(q))
}
