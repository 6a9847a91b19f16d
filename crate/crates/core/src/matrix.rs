//! Exact dense matrices over the Gaussian rationals.
//!
//! Sizes in this crate stay tiny (at most 12x12), so everything is dense and
//! exact: Bareiss-style fraction-free elimination for determinants, exact
//! Gauss-Jordan for inverses and echelon forms, and a deterministic reduced
//! column-echelon normalization for nullspace bases so solver output is
//! reproducible across implementations.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Dense row-major matrix of exact complex rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixCN {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl MatrixCN {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                context: "ragged rows".into(),
            });
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// An n x 1 column vector.
    pub fn column(entries: Vec<GaussianRational>) -> Self {
        let rows = entries.len();
        Self { rows, cols: 1, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, s| self.get(r, s) * c)
    }

    /// Matrix product. Panics on a dimension mismatch; the fallible surface
    /// of this crate is on `det`/`adjugate`/`poly_eval`, not plumbing.
    pub fn mul(&self, rhs: &MatrixCN) -> MatrixCN {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = MatrixCN::zeros(self.rows, rhs.cols);
        // ikj order with zero skipping: the delta matrices and their products
        // are extremely sparse, and skipping zeros avoids almost all bigint work.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &MatrixCN) -> MatrixCN {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        let mut out = self.clone();
        for (o, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *o += b;
        }
        out
    }

    /// `self += w * rhs` with zero skipping; the workhorse of the sparse
    /// family combinations.
    pub fn add_scaled_assign(&mut self, rhs: &MatrixCN, w: &GaussianRational) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        if w.is_zero() {
            return;
        }
        for (o, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                *o += &(b * w);
            }
        }
    }

    pub fn sub(&self, rhs: &MatrixCN) -> MatrixCN {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        let mut out = self.clone();
        for (o, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *o -= b;
        }
        out
    }

    /// Exact determinant by Bareiss-style elimination with row pivoting.
    pub fn det(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(GaussianRational::one());
        }
        let mut a = self.clone();
        let mut negated = false;
        let mut prev = GaussianRational::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        negated = !negated;
                    }
                    None => return Ok(GaussianRational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                    a.set(i, j, &num / &prev);
                }
                a.set(i, k, GaussianRational::zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negated { -d } else { d })
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<MatrixCN> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = MatrixCN::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, &(a.get(col, j).clone()) / &p);
                inv.set(col, j, &(inv.get(col, j).clone()) / &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let av = a.get(r, j) - &(&factor * a.get(col, j));
                    a.set(r, j, av);
                    let iv = inv.get(r, j) - &(&factor * inv.get(col, j));
                    inv.set(r, j, iv);
                }
            }
        }
        Some(inv)
    }

    /// Exact adjugate: `m * adj(m) = adj(m) * m = det(m) * I`.
    pub fn adjugate(&self) -> Result<MatrixCN> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        if n == 1 {
            return Ok(MatrixCN::identity(1));
        }
        let d = self.det()?;
        if !d.is_zero() {
            // adj = det * inv on the invertible branch; cofactors otherwise.
            let inv = self.inverse().expect("nonzero determinant implies invertible");
            return Ok(inv.scale(&d));
        }
        let mut adj = MatrixCN::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j).det()?;
                let sign = if (i + j) % 2 == 0 { minor } else { -minor };
                adj.set(j, i, sign);
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> MatrixCN {
        let n = self.rows;
        MatrixCN::from_fn(n - 1, n - 1, |r, c| {
            let rr = if r < skip_row { r } else { r + 1 };
            let cc = if c < skip_col { c } else { c + 1 };
            self.get(rr, cc).clone()
        })
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (MatrixCN, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let pivot = a.get(row, col).clone();
            for j in col..a.cols {
                a.set(row, j, &(a.get(row, j).clone()) / &pivot);
            }
            for r in 0..a.rows {
                if r == row || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in col..a.cols {
                    let v = a.get(r, j) - &(&factor * a.get(row, j));
                    a.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of `{v : m v = 0}` as column vectors, in reduced column
    /// echelon normal form (leading entry of each vector is 1, column order
    /// by leading row, leading rows zeroed in the other vectors). The empty
    /// list means a trivial kernel.
    pub fn nullspace(&self) -> Vec<MatrixCN> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis: Vec<Vec<GaussianRational>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (t, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(t, f);
            }
            basis.push(v);
        }
        canonicalize_columns(&mut basis);
        basis.into_iter().map(MatrixCN::column).collect()
    }

    /// Exact Horner evaluation of `sum coeffs[k] * m^k`, with `m^0 = I`.
    pub fn poly_eval(&self, coeffs: &[GaussianRational]) -> Result<MatrixCN> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut acc = MatrixCN::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self);
            for k in 0..n {
                let v = acc.get(k, k) + c;
                acc.set(k, k, v);
            }
        }
        Ok(acc)
    }

    /// `m^k` by repeated exact multiplication.
    pub fn pow(&self, k: u32) -> Result<MatrixCN> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = MatrixCN::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }
}

/// Bring a set of column vectors into reduced column echelon form in place.
/// This is the canonical representative of the subspace they span.
fn canonicalize_columns(cols: &mut [Vec<GaussianRational>]) {
    if cols.is_empty() {
        return;
    }
    let n = cols[0].len();
    let k = cols.len();
    let mut next = 0;
    for row in 0..n {
        if next == k {
            break;
        }
        let Some(j) = (next..k).find(|&j| !cols[j][row].is_zero()) else {
            continue;
        };
        cols.swap(next, j);
        let lead = cols[next][row].clone();
        for v in cols[next].iter_mut() {
            *v = &*v / &lead;
        }
        let pivot_col = cols[next].clone();
        for (jj, col) in cols.iter_mut().enumerate() {
            if jj == next || col[row].is_zero() {
                continue;
            }
            let factor = col[row].clone();
            for (dst, pv) in col.iter_mut().zip(&pivot_col) {
                *dst = &*dst - &(&factor * pv);
            }
        }
        next += 1;
    }
}

/// Free-function spelling of [`MatrixCN::poly_eval`].
pub fn eval_matrix_poly(coeffs: &[GaussianRational], m: &MatrixCN) -> Result<MatrixCN> {
    m.poly_eval(coeffs)
}

impl Index<(usize, usize)> for MatrixCN {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        self.get(r, c)
    }
}

impl<'b> Add<&'b MatrixCN> for &MatrixCN {
    type Output = MatrixCN;
    fn add(self, rhs: &'b MatrixCN) -> MatrixCN {
        MatrixCN::add(self, rhs)
    }
}

impl<'b> Sub<&'b MatrixCN> for &MatrixCN {
    type Output = MatrixCN;
    fn sub(self, rhs: &'b MatrixCN) -> MatrixCN {
        MatrixCN::sub(self, rhs)
    }
}

impl<'b> Mul<&'b MatrixCN> for &MatrixCN {
    type Output = MatrixCN;
    fn mul(self, rhs: &'b MatrixCN) -> MatrixCN {
        MatrixCN::mul(self, rhs)
    }
}

impl Neg for &MatrixCN {
    type Output = MatrixCN;
    fn neg(self) -> MatrixCN {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl fmt::Debug for MatrixCN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixCN {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for MatrixCN {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MatrixCN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let parsed: std::result::Result<Vec<Vec<GaussianRational>>, _> = rows
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.parse()).collect())
            .collect();
        MatrixCN::from_rows(parsed.map_err(serde::de::Error::custom)?)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, Rational};
    use proptest::prelude::*;

    fn from_ints(rows: &[&[i64]]) -> MatrixCN {
        MatrixCN::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn diag(vals: &[Rational]) -> MatrixCN {
        let n = vals.len();
        MatrixCN::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::from_rational(vals[r].clone())
            } else {
                GaussianRational::zero()
            }
        })
    }

    /// Independent determinant oracle: Leibniz expansion over all
    /// permutations. Only usable for small n, which is the point.
    fn det_leibniz(m: &MatrixCN) -> GaussianRational {
        use itertools::Itertools;
        let n = m.rows();
        let mut acc = GaussianRational::zero();
        for perm in (0..n).permutations(n) {
            let mut term = GaussianRational::one();
            for (r, &c) in perm.iter().enumerate() {
                term = &term * m.get(r, c);
            }
            // permutation parity by counting inversions
            let mut inversions = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    #[test]
    fn det_of_identity_is_one() {
        assert_eq!(
            MatrixCN::identity(3).det().unwrap(),
            GaussianRational::one()
        );
    }

    #[test]
    fn det_of_diagonal_is_product() {
        let m = diag(&[rat_int(2), rat_int(3), rat(1, 2)]);
        assert_eq!(m.det().unwrap(), GaussianRational::from_int(3));
    }

    #[test]
    fn det_of_rank_deficient_matrix_is_zero() {
        // the Hermitian image of (1,1,0,0,0,0,0,0,1)
        let m = from_ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn det_rejects_non_square() {
        let m = MatrixCN::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 })));
        assert!(m.adjugate().is_err());
        assert!(m.poly_eval(&[GaussianRational::one()]).is_err());
    }

    #[test]
    fn adjugate_of_identity_and_diagonal() {
        assert_eq!(
            MatrixCN::identity(3).adjugate().unwrap(),
            MatrixCN::identity(3)
        );
        let m = diag(&[rat_int(2), rat_int(3), rat_int(5)]);
        let expected = diag(&[rat_int(15), rat_int(10), rat_int(6)]);
        assert_eq!(m.adjugate().unwrap(), expected);
        // adj(k I) = k^{n-1} I
        let twice = MatrixCN::identity(3).scale(&GaussianRational::from_int(2));
        assert_eq!(
            twice.adjugate().unwrap(),
            MatrixCN::identity(3).scale(&GaussianRational::from_int(4))
        );
    }

    #[test]
    fn adjugate_of_singular_matrices() {
        // rank n-1: adjugate is nonzero and m * adj = 0
        let m = from_ints(&[&[1, 2], &[2, 4]]);
        let adj = m.adjugate().unwrap();
        assert!(!adj.is_zero());
        assert!(m.mul(&adj).is_zero());
        // rank <= n-2: adjugate vanishes identically
        let flat = from_ints(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 9]]);
        assert!(flat.adjugate().unwrap().is_zero());
    }

    #[test]
    fn nullspace_examples() {
        assert!(MatrixCN::identity(3).nullspace().is_empty());

        let zero_basis = MatrixCN::zeros(3, 3).nullspace();
        assert_eq!(zero_basis.len(), 3);
        for (k, v) in zero_basis.iter().enumerate() {
            let mut e = MatrixCN::zeros(3, 1);
            e.set(k, 0, GaussianRational::one());
            assert_eq!(v, &e);
        }

        let m = from_ints(&[&[1, 1], &[0, 0]]);
        let basis = m.nullspace();
        assert_eq!(basis.len(), 1);
        // normalized so the leading entry is 1
        assert_eq!(basis[0].get(0, 0), &GaussianRational::one());
        assert_eq!(basis[0].get(1, 0), &GaussianRational::from_int(-1));
    }

    #[test]
    fn nullspace_normalization_is_scale_invariant() {
        let a = from_ints(&[&[1, 1], &[0, 0]]);
        let b = from_ints(&[&[7, 7], &[0, 0]]);
        assert_eq!(a.nullspace(), b.nullspace());
    }

    #[test]
    fn poly_eval_basics() {
        let m = from_ints(&[&[1, 2], &[3, 4]]);
        let x = m.poly_eval(&[GaussianRational::zero(), GaussianRational::one()]).unwrap();
        assert_eq!(x, m);
        let c = GaussianRational::from_ints(2, 1);
        let konst = m.poly_eval(std::slice::from_ref(&c)).unwrap();
        assert_eq!(konst, MatrixCN::identity(2).scale(&c));
        assert!(m.poly_eval(&[]).unwrap().is_zero());
    }

    fn arb_entry() -> impl Strategy<Value = GaussianRational> {
        (-4i64..=4, -4i64..=4).prop_map(|(re, im)| GaussianRational::from_ints(re, im))
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = MatrixCN> {
        proptest::collection::vec(arb_entry(), n * n).prop_map(move |v| {
            let mut m = MatrixCN::zeros(n, n);
            for (k, e) in v.into_iter().enumerate() {
                m.set(k / n, k % n, e);
            }
            m
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn bareiss_matches_leibniz(n in 1usize..=4, seedless in arb_matrix(4)) {
            let m = MatrixCN::from_fn(n, n, |r, c| seedless.get(r, c).clone());
            prop_assert_eq!(m.det().unwrap(), det_leibniz(&m));
        }

        #[test]
        fn adjugate_identity_holds(n in 1usize..=4, raw in arb_matrix(4)) {
            let m = MatrixCN::from_fn(n, n, |r, c| raw.get(r, c).clone());
            let adj = m.adjugate().unwrap();
            let d = m.det().unwrap();
            let scaled = MatrixCN::identity(n).scale(&d);
            prop_assert_eq!(m.mul(&adj), scaled.clone());
            prop_assert_eq!(adj.mul(&m), scaled);
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
            let lhs = a.mul(&b).det().unwrap();
            let rhs = &a.det().unwrap() * &b.det().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rank_nullity_accounts_for_all_columns(rows in 1usize..=4, cols in 1usize..=4, raw in arb_matrix(4)) {
            let m = MatrixCN::from_fn(rows, cols, |r, c| raw.get(r, c).clone());
            let null = m.nullspace();
            prop_assert_eq!(m.rank() + null.len(), cols);
            for v in &null {
                prop_assert!(m.mul(v).is_zero());
            }
        }

        #[test]
        fn dagger_is_involutive_and_conjugates_det(m in arb_matrix(3)) {
            prop_assert_eq!(m.dagger().dagger(), m.clone());
            prop_assert_eq!(m.dagger().det().unwrap(), m.det().unwrap().conj());
        }
    }

    #[test]
    fn adjugate_identity_holds_at_full_size() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2 {
            let m = MatrixCN::from_fn(12, 12, |_, _| {
                GaussianRational::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
            });
            let adj = m.adjugate().unwrap();
            let d = m.det().unwrap();
            let scaled = MatrixCN::identity(12).scale(&d);
            assert_eq!(m.mul(&adj), scaled);
            assert_eq!(adj.mul(&m), scaled);
            assert_eq!(m.rank() + m.nullspace().len(), 12);
        }
    }
}
