//! Generic drivers for annihilating-polynomial and symmetrized-product
//! identities.
//!
//! Two matrix families in this crate satisfy identities of the same shape:
//! the nine 12x12 delta matrices obey a quartic relation against a rank-3
//! symmetric form, and the classical 5x5 Duffin-Kemmer matrices obey a cubic
//! relation against a rank-2 metric. One engine serves both; only the family,
//! the form, the degree, and the combinatorial factor differ.

use itertools::Itertools;
use num_traits::Zero;

use crate::matrix::MatrixCN;
use crate::scalar::{GaussianRational, Rational};

/// The weighted combination `sum_k w_k M_k` of a matrix family.
pub fn linear_combination(family: &[MatrixCN], weights: &[Rational]) -> MatrixCN {
    assert_eq!(
        family.len(),
        weights.len(),
        "one weight per family member"
    );
    let mut acc = MatrixCN::zeros(family[0].rows(), family[0].cols());
    for (m, w) in family.iter().zip(weights) {
        acc.add_scaled_assign(m, &GaussianRational::from_rational(w.clone()));
    }
    acc
}

/// Exact check of `x^degree = value * x`.
pub fn annihilating_polynomial_holds(x: &MatrixCN, degree: u32, value: &Rational) -> bool {
    let lhs = x.pow(degree).expect("square by construction");
    let rhs = x.scale(&GaussianRational::from_rational(value.clone()));
    lhs == rhs
}

/// Sum over all permutations of positions of the ordered product
/// `M_{i_1} ... M_{i_k}`. Repeated indices still contribute one term per
/// permutation of positions, so a k-index call always sums k! products.
pub fn symmetrized_product(family: &[MatrixCN], indices: &[usize]) -> MatrixCN {
    let n = family[0].rows();
    let mut acc = MatrixCN::zeros(n, n);
    for perm in indices.iter().permutations(indices.len()) {
        let mut prod: Option<MatrixCN> = None;
        for &&idx in &perm {
            prod = Some(match prod {
                None => family[idx].clone(),
                Some(p) => p.mul(&family[idx]),
            });
        }
        acc = acc.add(&prod.expect("at least one index"));
    }
    acc
}

/// The closed form the symmetrized product should equal:
/// `factor * sum_k form(indices \ k) * M_{indices[k]}`, where `indices \ k`
/// drops position k.
pub fn symmetrized_identity_rhs(
    family: &[MatrixCN],
    indices: &[usize],
    form: impl Fn(&[usize]) -> Rational,
    factor: i64,
) -> MatrixCN {
    let n = family[0].rows();
    let factor = crate::scalar::rat_int(factor);
    let mut acc = MatrixCN::zeros(n, n);
    for k in 0..indices.len() {
        let others: Vec<usize> = indices
            .iter()
            .enumerate()
            .filter_map(|(j, &idx)| (j != k).then_some(idx))
            .collect();
        let w = form(&others) * &factor;
        if w.is_zero() {
            continue;
        }
        acc = acc.add(&family[indices[k]].scale(&GaussianRational::from_rational(w)));
    }
    acc
}
