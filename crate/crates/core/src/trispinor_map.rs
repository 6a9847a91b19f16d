//! The linear bijection between real 9-momenta and Hermitian 3x3 matrices,
//! and the SL(3,C) action on momenta it induces.
//!
//! A momentum `p` maps to
//!
//! ```text
//!     | p0+p3    p1-i p2   p4-i p5 |
//! P = | p1+i p2  p0-p3     p6-i p7 |
//!     | p4+i p5  p6+i p7   p8      |
//! ```
//!
//! which is Hermitian, and `det P` equals the cubic form of `p`. Conjugation
//! `P -> A P A~` (dagger) by a unimodular `A` preserves the determinant, so
//! the pulled-back action on momenta preserves the cubic form: SL(3,C) maps
//! homomorphically into the isometries of the cubic metric.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finsler::{cubic_form, Momentum9};
use crate::matrix::MatrixCN;
use crate::scalar::{rat, GaussianRational, Rational};

/// A validated Hermitian 3x3 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianP {
    m: MatrixCN,
}

impl HermitianP {
    /// Validate and wrap. Rejects non-3x3 shapes and any entry pair that
    /// breaks `m = m~`, naming the offending pair.
    pub fn new(m: MatrixCN) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::DimensionMismatch {
                context: format!("Hermitian momentum matrix must be 3x3, got {}x{}", m.rows(), m.cols()),
            });
        }
        for r in 0..3 {
            for s in r..3 {
                let conj = m.get(s, r).conj();
                if m.get(r, s) != &conj {
                    return Err(Error::NotHermitian {
                        row: r,
                        col: s,
                        value: m.get(r, s).to_string(),
                        conjugate: conj.to_string(),
                    });
                }
            }
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &MatrixCN {
        &self.m
    }

    /// Entry with 0-based row (undotted) and column (dotted) indices.
    pub fn entry(&self, r: usize, s: usize) -> &GaussianRational {
        self.m.get(r, s)
    }
}

/// An element of SL(3,C): a complex 3x3 matrix with determinant exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unimodular3 {
    a: MatrixCN,
}

impl Unimodular3 {
    pub fn new(a: MatrixCN) -> Result<Self> {
        if a.rows() != 3 || a.cols() != 3 {
            return Err(Error::DimensionMismatch {
                context: format!("SL(3,C) element must be 3x3, got {}x{}", a.rows(), a.cols()),
            });
        }
        let det = a.det()?;
        if det != GaussianRational::one() {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(Self { a })
    }

    pub fn identity() -> Self {
        Self {
            a: MatrixCN::identity(3),
        }
    }

    pub fn matrix(&self) -> &MatrixCN {
        &self.a
    }

    /// Group composition; determinants multiply so no revalidation needed.
    pub fn compose(&self, rhs: &Unimodular3) -> Unimodular3 {
        Unimodular3 {
            a: self.a.mul(&rhs.a),
        }
    }
}

/// Map a 9-momentum to its Hermitian matrix.
pub fn momentum_to_matrix(p: &Momentum9) -> HermitianP {
    let real = |r: &Rational| GaussianRational::from_rational(r.clone());
    let complex = |re: &Rational, im: &Rational| GaussianRational::new(re.clone(), im.clone());
    let neg = |r: &Rational| -r.clone();

    let rows = vec![
        vec![
            real(&(&p[0] + &p[3])),
            complex(&p[1], &neg(&p[2])),
            complex(&p[4], &neg(&p[5])),
        ],
        vec![
            complex(&p[1], &p[2]),
            real(&(&p[0] - &p[3])),
            complex(&p[6], &neg(&p[7])),
        ],
        vec![
            complex(&p[4], &p[5]),
            complex(&p[6], &p[7]),
            real(&p[8]),
        ],
    ];
    let m = MatrixCN::from_rows(rows).expect("fixed 3x3 shape");
    HermitianP::new(m).expect("the momentum map is Hermitian by construction")
}

/// Invert the momentum map. Total on `HermitianP` since the map is a linear
/// bijection onto Hermitian matrices.
pub fn matrix_to_momentum(p: &HermitianP) -> Momentum9 {
    let m = &p.m;
    let half = rat(1, 2);
    let d0 = &m.get(0, 0).re;
    let d1 = &m.get(1, 1).re;
    Momentum9([
        (d0 + d1) * &half,
        m.get(1, 0).re.clone(),
        m.get(1, 0).im.clone(),
        (d0 - d1) * &half,
        m.get(2, 0).re.clone(),
        m.get(2, 0).im.clone(),
        m.get(2, 1).re.clone(),
        m.get(2, 1).im.clone(),
        m.get(2, 2).re.clone(),
    ])
}

/// The cofactor matrix `C` with `C[r][s]` the cofactor of entry `(r,s)`.
/// Contracting over the second (dotted) index gives
/// `sum_s P[r][s] C[t][s] = det(P) [r == t]`, i.e. `P C^T = det(P) I`.
pub fn cofactor_form(p: &HermitianP) -> MatrixCN {
    p.m.adjugate().expect("3x3 is square").transpose()
}

/// Exact check of the determinant identity `det P(p) = G(p,p,p)`.
pub fn verify_det_identity(p: &Momentum9) -> bool {
    let det = momentum_to_matrix(p).matrix().det().expect("3x3 is square");
    det == GaussianRational::from_rational(cubic_form(p))
}

/// A deterministic pseudo-random SL(3,C) element: the product of `steps`
/// elementary shears `I + c E_{jk}` (`j != k`, `c` a small Gaussian integer
/// from the seeded stream). Shears keep the determinant exactly 1 with no
/// division, so entries stay Gaussian integers.
pub fn random_unimodular(seed: u64, steps: u32) -> Unimodular3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let off_diagonal = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let mut acc = MatrixCN::identity(3);
    for _ in 0..steps {
        let (j, k) = off_diagonal[rng.gen_range(0..off_diagonal.len())];
        let c = GaussianRational::from_ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let mut shear = MatrixCN::identity(3);
        shear.set(j, k, c);
        acc = acc.mul(&shear);
    }
    Unimodular3 { a: acc }
}

/// Push a momentum through `P -> A P A~` and pull back. The cubic form of
/// the result equals the cubic form of the input, exactly.
pub fn sl3_transform(a: &Unimodular3, p: &Momentum9) -> Momentum9 {
    let conjugated = a.a.mul(momentum_to_matrix(p).matrix()).mul(&a.a.dagger());
    let hermitian = HermitianP::new(conjugated).expect("A P A~ is Hermitian for Hermitian P");
    matrix_to_momentum(&hermitian)
}
