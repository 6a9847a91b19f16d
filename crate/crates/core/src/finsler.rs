//! The cubic form on 9-dimensional momentum space.
//!
//! The scalar cube of a real 9-momentum `p` is
//!
//! ```text
//! G(p,p,p) = (p0^2 - p1^2 - p2^2 - p3^2) p8
//!          - (p4^2 + p5^2 + p6^2 + p7^2) p0
//!          + 2 (p4 p6 + p5 p7) p1
//!          + 2 (p5 p6 - p4 p7) p2
//!          + (p4^2 + p5^2 - p6^2 - p7^2) p3
//! ```
//!
//! and the totally symmetric tensor `G^{ABC}` carries each monomial
//! coefficient divided by the number of distinct orderings of its index
//! multiset, so that the contraction over all ordered index triples
//! reproduces the polynomial. Restricting to `p = (q0,q1,q2,q3,0,...,0,1)`
//! collapses the cube to the pseudoeuclidean square `q0^2-q1^2-q2^2-q3^2`.

use std::collections::BTreeMap;
use std::ops::{Add, Index};
use std::sync::LazyLock;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, rat, Rational};

/// A real 9-momentum with exact rational entries, indexed `A = 0..=8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Momentum9(pub [Rational; 9]);

impl Momentum9 {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| Rational::zero()))
    }

    /// The basis momentum `e_A`.
    pub fn basis(a: usize) -> Self {
        assert!(a < 9, "momentum index {a} out of range");
        let mut p = Self::zero();
        p.0[a] = Rational::one();
        p
    }

    pub fn from_ints(v: [i64; 9]) -> Self {
        Self(std::array::from_fn(|k| crate::scalar::rat_int(v[k])))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.0.iter()
    }
}

impl Index<usize> for Momentum9 {
    type Output = Rational;
    fn index(&self, a: usize) -> &Rational {
        &self.0[a]
    }
}

impl<'b> Add<&'b Momentum9> for &Momentum9 {
    type Output = Momentum9;
    fn add(self, rhs: &'b Momentum9) -> Momentum9 {
        Momentum9(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Serialize for Momentum9 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(9))?;
        for r in &self.0 {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Momentum9 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        if raw.len() != 9 {
            return Err(serde::de::Error::custom(format!(
                "expected 9 momentum components, got {}",
                raw.len()
            )));
        }
        let mut p = Momentum9::zero();
        for (k, s) in raw.iter().enumerate() {
            p.0[k] = parse_rational(s).map_err(serde::de::Error::custom)?;
        }
        Ok(p)
    }
}

/// Totally symmetric rank-3 coefficient tensor, stored sparsely by sorted
/// index triple. Lookups symmetrize.
#[derive(Clone, Debug)]
pub struct CubicTensor {
    components: BTreeMap<(usize, usize, usize), Rational>,
}

impl CubicTensor {
    /// The coefficient tensor of the cubic form: monomial coefficient over
    /// the number of distinct orderings of the index multiset.
    pub fn standard() -> &'static CubicTensor {
        static TENSOR: LazyLock<CubicTensor> = LazyLock::new(|| {
            // (A, B, C) sorted, value = coefficient / orderings
            let table: [(usize, usize, usize, i64, i64); 16] = [
                (0, 0, 8, 1, 3),
                (1, 1, 8, -1, 3),
                (2, 2, 8, -1, 3),
                (3, 3, 8, -1, 3),
                (0, 4, 4, -1, 3),
                (0, 5, 5, -1, 3),
                (0, 6, 6, -1, 3),
                (0, 7, 7, -1, 3),
                (1, 4, 6, 1, 3),
                (1, 5, 7, 1, 3),
                (2, 4, 7, -1, 3),
                (2, 5, 6, 1, 3),
                (3, 4, 4, 1, 3),
                (3, 5, 5, 1, 3),
                (3, 6, 6, -1, 3),
                (3, 7, 7, -1, 3),
            ];
            let mut components = BTreeMap::new();
            for (a, b, c, num, den) in table {
                components.insert((a, b, c), rat(num, den));
            }
            CubicTensor { components }
        });
        &TENSOR
    }

    /// Symmetrized component lookup; zero for any triple without a stored
    /// entry.
    pub fn component(&self, a: usize, b: usize, c: usize) -> Result<Rational> {
        if a > 8 || b > 8 || c > 8 {
            return Err(Error::IndexOutOfRange {
                context: format!("tensor indices ({a},{b},{c}) must lie in 0..=8"),
            });
        }
        let mut key = [a, b, c];
        key.sort_unstable();
        Ok(self
            .components
            .get(&(key[0], key[1], key[2]))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Iterate stored (sorted) triples with their components.
    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.components.iter()
    }
}

/// The scalar cube of `p`, evaluated directly from the defining polynomial.
pub fn cubic_form(p: &Momentum9) -> Rational {
    let sq = |k: usize| &p[k] * &p[k];
    let lorentz = sq(0) - sq(1) - sq(2) - sq(3);
    let radial = sq(4) + sq(5) + sq(6) + sq(7);
    let cross1 = &p[4] * &p[6] + &p[5] * &p[7];
    let cross2 = &p[5] * &p[6] - &p[4] * &p[7];
    let axial = sq(4) + sq(5) - sq(6) - sq(7);
    lorentz * &p[8] - radial * &p[0]
        + rat(2, 1) * cross1 * &p[1]
        + rat(2, 1) * cross2 * &p[2]
        + axial * &p[3]
}

fn distinct_orderings(t: &[usize; 3]) -> Vec<[usize; 3]> {
    let [a, b, c] = *t;
    if a == b && b == c {
        vec![[a, a, a]]
    } else if a == b {
        vec![[a, a, c], [a, c, a], [c, a, a]]
    } else if b == c {
        vec![[a, b, b], [b, a, b], [b, b, a]]
    } else {
        vec![
            [a, b, c],
            [a, c, b],
            [b, a, c],
            [b, c, a],
            [c, a, b],
            [c, b, a],
        ]
    }
}

/// The symmetric trilinear form `G(p, q, r)`, contracted against the stored
/// tensor. Symmetric in its arguments; `trilinear_form(p,p,p) = cubic_form(p)`.
pub fn trilinear_form(p: &Momentum9, q: &Momentum9, r: &Momentum9) -> Rational {
    let mut acc = Rational::zero();
    for (&(a, b, c), g) in CubicTensor::standard().stored() {
        for [x, y, z] in distinct_orderings(&[a, b, c]) {
            acc += g * &p[x] * &q[y] * &r[z];
        }
    }
    acc
}

/// Symmetric tensor component `G^{ABC}` of the standard tensor.
pub fn tensor_component(a: usize, b: usize, c: usize) -> Result<Rational> {
    CubicTensor::standard().component(a, b, c)
}

/// Embed a 4-vector as `p = (q0,q1,q2,q3,0,0,0,0,1)` and return the pair
/// (cubic form of the embedding, pseudoeuclidean square of `q`). The two
/// agree identically.
pub fn minkowski_reduction(q: &[Rational; 4]) -> (Rational, Rational) {
    let mut p = Momentum9::zero();
    p.0[..4].clone_from_slice(q);
    p.0[8] = Rational::one();
    let square = &q[0] * &q[0] - &q[1] * &q[1] - &q[2] * &q[2] - &q[3] * &q[3];
    (cubic_form(&p), square)
}
