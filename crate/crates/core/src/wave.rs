//! The 3-spinor wave equation in momentum space.
//!
//! The quadratic system couples a spinor `i` and a co-spinor `beta` through
//! the momentum matrix `P` and its cofactors:
//!
//! ```text
//! P^{rs} beta_s = M i^r,        P_{rs} i^r = M^2 beta_s .
//! ```
//!
//! Introducing the six auxiliary variables `xi` (antisymmetric combinations
//! `P^{rs} i^t - P^{ts} i^r` divided by `M`) lets the system be rewritten as
//! a single eigenvalue problem `X(p) Psi = M Psi` for the 12-component
//! column `Psi = (i, beta, xi)` and the momentum-linear operator
//! `X(p) = sum_A p_A delta^A`. This module builds `Psi`, evaluates exact
//! residuals of both forms, computes exact solution bases, and constructs
//! the mass-shell projector `(X^3 + M X^2 + M^2 X) / (3 M^3)`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::delta::assemble_linear;
use crate::error::{Error, Result};
use crate::finsler::{cubic_form, Momentum9};
use crate::matrix::MatrixCN;
use crate::scalar::{format_rational, GaussianRational, Rational};
use crate::trispinor_map::{cofactor_form, momentum_to_matrix, HermitianP};

/// An undotted rank-one 3-spinor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spinor3(pub [GaussianRational; 3]);

/// A dotted rank-one 3-spinor (conjugate representation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoSpinor3(pub [GaussianRational; 3]);

/// The six auxiliary variables of the linearization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiVector6(pub [GaussianRational; 6]);

/// The 12-component column `(i^1,i^2,i^3, beta_1,beta_2,beta_3, xi_1..xi_6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveFunction12(pub [GaussianRational; 12]);

impl Spinor3 {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| GaussianRational::zero()))
    }

    pub fn basis(k: usize) -> Self {
        assert!(k < 3);
        let mut s = Self::zero();
        s.0[k] = GaussianRational::one();
        s
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self(std::array::from_fn(|k| &self.0[k] * c))
    }
}

impl CoSpinor3 {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| GaussianRational::zero()))
    }

    pub fn basis(k: usize) -> Self {
        assert!(k < 3);
        let mut s = Self::zero();
        s.0[k] = GaussianRational::one();
        s
    }
}

impl XiVector6 {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| GaussianRational::zero()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self(std::array::from_fn(|k| &self.0[k] * c))
    }
}

impl WaveFunction12 {
    pub fn to_column(&self) -> MatrixCN {
        MatrixCN::column(self.0.to_vec())
    }

    pub fn from_column(m: &MatrixCN) -> Self {
        assert_eq!((m.rows(), m.cols()), (12, 1), "wave function column must be 12x1");
        Self(std::array::from_fn(|k| m.get(k, 0).clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }
}

impl Serialize for WaveFunction12 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(12))?;
        for c in &self.0 {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// The 9-mass: a real rational scalar. Nonzero wherever it divides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mass(Rational);

impl Mass {
    pub fn new(m: Rational) -> Self {
        Self(m)
    }

    pub fn from_int(m: i64) -> Self {
        Self(crate::scalar::rat_int(m))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn cubed(&self) -> Rational {
        &(&self.0 * &self.0) * &self.0
    }
}

/// The auxiliary variables from `P`, `i`, and a nonzero mass:
/// `xi = (antisymmetric P-combinations of i) / M`.
pub fn xi_from(p: &HermitianP, i: &Spinor3, m: &Mass) -> Result<XiVector6> {
    if m.is_zero() {
        return Err(Error::ZeroMass);
    }
    let inv_m = Rational::one() / m.value();
    let e = |r: usize, s: usize| p.entry(r, s);
    let iv = &i.0;
    let pair = |top: &GaussianRational, bot: &GaussianRational, a: usize, b: usize| {
        (&(top * &iv[a]) - &(bot * &iv[b])).scale(&inv_m)
    };
    Ok(XiVector6([
        pair(e(1, 0), e(0, 0), 0, 1),
        pair(e(2, 0), e(0, 0), 0, 2),
        pair(e(2, 0), e(1, 0), 1, 2),
        pair(e(1, 1), e(0, 1), 0, 1),
        pair(e(2, 1), e(0, 1), 0, 2),
        pair(e(2, 1), e(1, 1), 1, 2),
    ]))
}

/// Concatenate the three sectors into the 12-component column.
pub fn assemble_psi(i: &Spinor3, b: &CoSpinor3, xi: &XiVector6) -> WaveFunction12 {
    let mut out: [GaussianRational; 12] = std::array::from_fn(|_| GaussianRational::zero());
    out[..3].clone_from_slice(&i.0);
    out[3..6].clone_from_slice(&b.0);
    out[6..].clone_from_slice(&xi.0);
    WaveFunction12(out)
}

/// Split a wave function back into `(i, beta, xi)`.
pub fn disassemble_psi(psi: &WaveFunction12) -> (Spinor3, CoSpinor3, XiVector6) {
    let p = &psi.0;
    (
        Spinor3(std::array::from_fn(|k| p[k].clone())),
        CoSpinor3(std::array::from_fn(|k| p[3 + k].clone())),
        XiVector6(std::array::from_fn(|k| p[6 + k].clone())),
    )
}

/// Residuals of the quadratic system:
/// `(P beta - M i, cofactor-contraction of i - M^2 beta)`.
/// Both vanish exactly iff `(i, beta)` solves the system at `(p, M)`.
pub fn quadratic_residual(
    p: &Momentum9,
    i: &Spinor3,
    b: &CoSpinor3,
    m: &Mass,
) -> ([GaussianRational; 3], [GaussianRational; 3]) {
    let hp = momentum_to_matrix(p);
    let mass = GaussianRational::from_rational(m.value().clone());
    let mass_sq = &mass * &mass;
    let cof = cofactor_form(&hp);

    let upper: [GaussianRational; 3] = std::array::from_fn(|r| {
        let mut acc = GaussianRational::zero();
        for s in 0..3 {
            acc += &(hp.entry(r, s) * &b.0[s]);
        }
        &acc - &(&mass * &i.0[r])
    });
    // sum_r C[r][s] i^r, contracted over the undotted index
    let lower: [GaussianRational; 3] = std::array::from_fn(|s| {
        let mut acc = GaussianRational::zero();
        for r in 0..3 {
            acc += &(cof.get(r, s) * &i.0[r]);
        }
        &acc - &(&mass_sq * &b.0[s])
    });
    (upper, lower)
}

/// Residual of the momentum-linear form: `(X(p) - M I) psi`.
pub fn linear_residual(p: &Momentum9, psi: &WaveFunction12, m: &Mass) -> [GaussianRational; 12] {
    let x = assemble_linear(p);
    let mass = GaussianRational::from_rational(m.value().clone());
    let out = x.mul(&psi.to_column());
    std::array::from_fn(|k| out.get(k, 0) - &(&mass * &psi.0[k]))
}

/// Residual of the beta-recovery relations that close the linearization:
/// zero exactly when the lower half of the quadratic system holds.
/// Identically equal to (lower quadratic residual) / M once `xi` comes from
/// [`xi_from`].
pub fn beta_recovery_residual(
    p: &HermitianP,
    xi: &XiVector6,
    b: &CoSpinor3,
    m: &Mass,
) -> [GaussianRational; 3] {
    let e = |r: usize, s: usize| p.entry(r, s);
    let x = &xi.0;
    let mass = GaussianRational::from_rational(m.value().clone());
    [
        &(&(&(e(2, 2) * &x[3]) - &(e(1, 2) * &x[4])) + &(e(0, 2) * &x[5])) - &(&mass * &b.0[0]),
        &(&(&(-e(2, 2) * &x[0]) + &(e(1, 2) * &x[1])) - &(e(0, 2) * &x[2])) - &(&mass * &b.0[1]),
        &(&(&(-e(2, 0) * &x[3]) + &(e(1, 0) * &x[4])) - &(e(0, 0) * &x[5])) - &(&mass * &b.0[2]),
    ]
}

/// Exact basis of solutions of `(X(p) - M I) psi = 0`, in the canonical
/// echelon normalization. `M = 0` is allowed here: the result is then the
/// kernel of `X(p)`.
pub fn solution_space(p: &Momentum9, m: &Mass) -> Vec<WaveFunction12> {
    let x = assemble_linear(p);
    let mass = GaussianRational::from_rational(m.value().clone());
    let shifted = x.sub(&MatrixCN::identity(12).scale(&mass));
    shifted
        .nullspace()
        .into_iter()
        .map(|col| WaveFunction12::from_column(&col))
        .collect()
}

/// The mass-shell projector `Pi = (X^3 + M X^2 + M^2 X) / (3 M^3)`.
///
/// Requires `M != 0` and the on-shell condition `G(p,p,p) = M^3`; then
/// `Pi^2 = Pi`, `X Pi = M Pi`, and the column space of `Pi` is exactly the
/// eigenspace of `X` at `M`. The two complex eigenvalues never appear:
/// the projector is a rational polynomial in `X`.
pub fn mass_shell_projector(p: &Momentum9, m: &Mass) -> Result<MatrixCN> {
    if m.is_zero() {
        return Err(Error::ZeroMass);
    }
    let g = cubic_form(p);
    let m3 = m.cubed();
    if g != m3 {
        return Err(Error::OffShell {
            cubic: format_rational(&g),
            mass_cubed: format_rational(&m3),
        });
    }
    let x = assemble_linear(p);
    let three_m3 = crate::scalar::rat_int(3) * &m3;
    let coeff = |num: Rational| GaussianRational::from_rational(num / &three_m3);
    // (m^2 x + m x^2 + x^3) / (3 m^3)
    let coeffs = [
        GaussianRational::zero(),
        coeff(m.value() * m.value()),
        coeff(m.value().clone()),
        coeff(Rational::one()),
    ];
    x.poly_eval(&coeffs)
}

/// Complete an 8-entry momentum prefix to an exact on-shell momentum by
/// solving the p8-linear equation `G(p,p,p) = M^3`. Returns `None` when the
/// pseudoeuclidean square of the first four entries vanishes (then p8 drops
/// out of the cubic form).
pub fn complete_on_shell(prefix: &[Rational; 8], m: &Mass) -> Option<Momentum9> {
    let mut p = Momentum9::zero();
    for (k, v) in prefix.iter().enumerate() {
        p.0[k] = v.clone();
    }
    let q = &prefix[0] * &prefix[0]
        - &prefix[1] * &prefix[1]
        - &prefix[2] * &prefix[2]
        - &prefix[3] * &prefix[3];
    if q.is_zero() {
        return None;
    }
    // with p8 = 0 the cubic form evaluates the p8-free remainder
    let remainder = cubic_form(&p);
    p.0[8] = (m.cubed() - remainder) / q;
    Some(p)
}

/// Deterministic seeded on-shell instance: integer draws in [-9, 9] for the
/// first eight components, resampled until the p8 coefficient is nonzero,
/// then p8 solved exactly. Requires `M != 0`.
pub fn on_shell_momentum(seed: u64, m: &Mass) -> Result<Momentum9> {
    if m.is_zero() {
        return Err(Error::ZeroMass);
    }
    const MAX_ATTEMPTS: u32 = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let prefix: [Rational; 8] =
            std::array::from_fn(|_| crate::scalar::rat_int(rng.gen_range(-9..=9)));
        if let Some(p) = complete_on_shell(&prefix, m) {
            return Ok(p);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: MAX_ATTEMPTS,
    })
}
