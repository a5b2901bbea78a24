//! Exact rational linear algebra: a small dense matrix type for solving and
//! row reduction, and symmetric matrices with the quadratic-form toolkit —
//! signatures (two independent routes), congruence diagonalization, kernel
//! vectors and generalized inverses.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{parse_rational, rat_i, rational_to_string, Rational};
use crate::unipoly::UniPoly;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("kernel has dimension {0} (expected at most 1)")]
    CorankTooHigh(usize),
    #[error("dimension mismatch")]
    Dimension,
    #[error("matrix is singular")]
    Singular,
    #[error("bad matrix literal: {0}")]
    Parse(String),
}

/// Dense rational matrix. Row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &other[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &v[k];
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot = (r..self.rows).find(|&i| !self[(i, c)].is_zero());
            let Some(p) = pivot else { continue };
            for j in 0..self.cols {
                let tmp = self[(p, j)].clone();
                self[(p, j)] = self[(r, j)].clone();
                self[(r, j)] = tmp;
            }
            let inv = Rational::one() / self[(r, c)].clone();
            for j in 0..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in 0..self.cols {
                        let v = &self[(i, j)] - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// RREF together with the row-operation matrix: returns (R, E, pivots)
    /// with E * self = R.
    pub fn rref_with_transform(&self) -> (Mat, Mat, Vec<usize>) {
        let mut aug = Mat::from_fn(self.rows, self.cols + self.rows, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else if j - self.cols == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        // restrict pivoting to the original columns
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !aug[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..aug.cols {
                let tmp = aug[(p, j)].clone();
                aug[(p, j)] = aug[(r, j)].clone();
                aug[(r, j)] = tmp;
            }
            let inv = Rational::one() / aug[(r, c)].clone();
            for j in 0..aug.cols {
                let v = &aug[(r, j)] * &inv;
                aug[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !aug[(i, c)].is_zero() {
                    let f = aug[(i, c)].clone();
                    for j in 0..aug.cols {
                        let v = &aug[(i, j)] - &f * &aug[(r, j)];
                        aug[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rref = Mat::from_fn(self.rows, self.cols, |i, j| aug[(i, j)].clone());
        let e = Mat::from_fn(self.rows, self.rows, |i, j| aug[(i, j + self.cols)].clone());
        (rref, e, pivots)
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`; `None` when inconsistent (least-norm is not
    /// attempted; any solution is returned when underdetermined).
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let pivot = (c..n).find(|&i| !m[(i, c)].is_zero());
            let Some(p) = pivot else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(c, j)].clone();
                    m[(c, j)] = tmp;
                }
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = Rational::one() / m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                (0..self.cols)
                    .map(|j| rational_to_string(&self[(i, j)]))
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Signature (p, n, z) of a real symmetric matrix: counts of positive,
/// negative and zero eigenvalues. Invariant under congruence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature {
            positive,
            negative,
            zero,
        }
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    /// Global-sign normalization: flip so that positive >= negative.
    pub fn normalized(&self) -> Self {
        if self.positive >= self.negative {
            *self
        } else {
            Signature {
                positive: self.negative,
                negative: self.positive,
                zero: self.zero,
            }
        }
    }

    pub fn corank(&self) -> usize {
        self.zero
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.positive == 0 || self.negative == 0)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Symmetric matrix with exact rational entries (packed upper triangle).
#[derive(Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>, // upper triangle, row by row
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![Rational::zero(); n * (n + 1) / 2],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn diagonal_i64(diag: &[i64]) -> Self {
        Self::diagonal(&diag.iter().map(|&d| rat_i(d)).collect::<Vec<_>>())
    }

    /// Validates symmetry.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::Dimension);
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, rows[i][j].clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let as_rat: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat_i(x)).collect())
            .collect();
        Self::from_rows(&as_rat).expect("symmetric integer literal")
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let k = self.idx(i, j);
        self.entries[k] = v;
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `a * self + b * other`, the pencil combination.
    pub fn pencil(&self, a: &Rational, other: &Self, b: &Rational) -> Self {
        self.scale(a).add(&other.scale(b))
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat_i(-1))
    }

    /// Quadratic form x^T M x.
    pub fn quad_form(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.n);
        let mut acc = Rational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += self.get(i, j) * &x[i] * &x[j];
            }
        }
        acc
    }

    /// Congruence transform T^T M T.
    pub fn congruence(&self, t: &Mat) -> Result<Self, MatrixError> {
        if t.rows != self.n {
            return Err(MatrixError::Dimension);
        }
        let prod = t.transpose().mul(&self.to_mat()).mul(t);
        let rows: Vec<Vec<Rational>> = (0..prod.rows).map(|i| prod.row(i)).collect();
        Self::from_rows(&rows)
    }

    pub fn det(&self) -> Rational {
        self.to_mat().det()
    }

    pub fn rank(&self) -> usize {
        self.to_mat().rank()
    }

    /// Characteristic polynomial det(xI - M) by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        let m = self.to_mat();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut nk = Mat::identity(n);
        for k in 1..=n {
            nk = m.mul(&nk);
            let mut tr = Rational::zero();
            for i in 0..n {
                tr += &nk[(i, i)];
            }
            let c = -tr / rat_i(k as i64);
            coeffs[n - k] = c.clone();
            for i in 0..n {
                nk[(i, i)] = &nk[(i, i)] + &c;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Signature from the characteristic polynomial: all eigenvalues of a
    /// symmetric matrix are real, so Descartes' rule applied to the
    /// coefficient sequence is exact.
    pub fn signature(&self) -> Signature {
        let cp = self.char_poly();
        signature_from_char_poly_coeffs(&cp.0)
    }

    /// Signature read off a congruence diagonalization; `signature` and this
    /// must always agree.
    pub fn signature_via_congruence(&self) -> Signature {
        let (_, diag) = self.congruence_diagonalize();
        let mut sig = Signature::new(0, 0, 0);
        for d in &diag {
            if d.is_zero() {
                sig.zero += 1;
            } else if d.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
        }
        sig
    }

    /// Returns invertible T and the diagonal of D with T^T M T = D.
    pub fn congruence_diagonalize(&self) -> (Mat, Vec<Rational>) {
        let n = self.n;
        let mut w = self.to_mat();
        let mut t = Mat::identity(n);

        // column operation col_dst += f * col_src, applied congruently
        fn col_op(w: &mut Mat, t: &mut Mat, dst: usize, src: usize, f: &Rational) {
            let n = w.rows;
            for i in 0..n {
                let v = &w[(i, dst)] + f * &w[(i, src)];
                w[(i, dst)] = v;
            }
            for j in 0..n {
                let v = &w[(dst, j)] + f * &w[(src, j)];
                w[(dst, j)] = v;
            }
            for i in 0..n {
                let v = &t[(i, dst)] + f * &t[(i, src)];
                t[(i, dst)] = v;
            }
        }

        fn col_swap(w: &mut Mat, t: &mut Mat, a: usize, b: usize) {
            let n = w.rows;
            for i in 0..n {
                let tmp = w[(i, a)].clone();
                w[(i, a)] = w[(i, b)].clone();
                w[(i, b)] = tmp;
            }
            for j in 0..n {
                let tmp = w[(a, j)].clone();
                w[(a, j)] = w[(b, j)].clone();
                w[(b, j)] = tmp;
            }
            for i in 0..n {
                let tmp = t[(i, a)].clone();
                t[(i, a)] = t[(i, b)].clone();
                t[(i, b)] = tmp;
            }
        }

        for k in 0..n {
            if w[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !w[(j, j)].is_zero()) {
                    col_swap(&mut w, &mut t, k, j);
                } else {
                    // all remaining diagonal entries vanish; bring in an
                    // off-diagonal entry, if any
                    let mut found = None;
                    'outer: for i in k..n {
                        for j in i + 1..n {
                            if !w[(i, j)].is_zero() {
                                found = Some((i, j));
                                break 'outer;
                            }
                        }
                    }
                    match found {
                        None => break, // remaining block is zero
                        Some((i, j)) => {
                            let one = Rational::one();
                            col_op(&mut w, &mut t, i, j, &one); // diag at i becomes 2*w_ij
                            if i != k {
                                col_swap(&mut w, &mut t, k, i);
                            }
                        }
                    }
                }
            }
            let pivot = w[(k, k)].clone();
            if pivot.is_zero() {
                continue;
            }
            for j in k + 1..n {
                if w[(k, j)].is_zero() {
                    continue;
                }
                let f = -&w[(k, j)] / &pivot;
                col_op(&mut w, &mut t, j, k, &f);
            }
        }
        let diag = (0..n).map(|i| w[(i, i)].clone()).collect();
        (t, diag)
    }

    /// Exact spanning vector of the kernel when the corank is 1; `None` for
    /// nonsingular input; corank >= 2 is reported as an error. The vector is
    /// scaled to coprime integer entries.
    pub fn kernel_vector(&self) -> Result<Option<Vec<Rational>>, MatrixError> {
        let basis = self.to_mat().kernel_basis();
        match basis.len() {
            0 => Ok(None),
            1 => Ok(Some(primitive_vector(&basis[0]))),
            k => Err(MatrixError::CorankTooHigh(k)),
        }
    }

    /// A generalized inverse G with M G M = M, via congruence
    /// diagonalization: G = T D^+ T^T.
    pub fn generalized_inverse(&self) -> SymMatrix {
        let (t, diag) = self.congruence_diagonalize();
        let dplus = Mat::from_fn(self.n, self.n, |i, j| {
            if i == j && !diag[i].is_zero() {
                Rational::one() / diag[i].clone()
            } else {
                Rational::zero()
            }
        });
        let g = t.mul(&dplus).mul(&t.transpose());
        let rows: Vec<Vec<Rational>> = (0..self.n).map(|i| g.row(i)).collect();
        Self::from_rows(&rows).expect("G is symmetric by construction")
    }

    /// Row-major `p/q` strings, the serialized matrix format.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| rational_to_string(self.get(i, j)))
                    .collect()
            })
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self, MatrixError> {
        let parsed: Result<Vec<Vec<Rational>>, _> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s).map_err(|e| MatrixError::Parse(e.to_string())))
                    .collect()
            })
            .collect();
        Self::from_rows(&parsed?)
    }

    /// Parse a flat row-major list like `1,0,0,0,1,...` (n*n entries).
    pub fn parse_flat(text: &str) -> Result<Self, MatrixError> {
        let vals: Result<Vec<Rational>, _> = text
            .split(|c| c == ',' || c == ' ' || c == ';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_rational(s).map_err(|e| MatrixError::Parse(e.to_string())))
            .collect();
        let vals = vals?;
        let n = (1..=40).find(|&n| n * n == vals.len()).ok_or_else(|| {
            MatrixError::Parse(format!("{} entries is not a square matrix", vals.len()))
        })?;
        let rows: Vec<Vec<Rational>> = vals.chunks(n).map(|c| c.to_vec()).collect();
        Self::from_rows(&rows)
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix{:?}", self.to_string_rows())
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        Self::from_string_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Scale to coprime integer entries with the first nonzero entry positive.
pub fn primitive_vector(v: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut denom_lcm = BigInt::one();
    for c in v {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in v {
        num_gcd = num_gcd.gcd((c * Rational::from(denom_lcm.clone())).numer());
    }
    if num_gcd.is_zero() {
        return v.to_vec();
    }
    let mut factor = Rational::new(denom_lcm, num_gcd);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if (first * &factor).is_negative() {
            factor = -factor;
        }
    }
    v.iter().map(|c| c * &factor).collect()
}

/// Descartes sign count for a characteristic polynomial all of whose roots
/// are real (ascending coefficients).
pub fn signature_from_char_poly_coeffs(coeffs: &[Rational]) -> Signature {
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest: Vec<&Rational> = coeffs[zero..].iter().filter(|c| !c.is_zero()).collect();
    let mut variations = 0usize;
    for w in rest.windows(2) {
        if w[0].is_positive() != w[1].is_positive() {
            variations += 1;
        }
    }
    let n = coeffs.len() - 1;
    Signature {
        positive: variations,
        negative: n - zero - variations,
        zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn signature_identity() {
        let m = SymMatrix::identity(3);
        assert_eq!(m.signature(), Signature::new(3, 0, 0));
    }

    #[test]
    fn signature_paper_center() {
        // the (2,1) projection center, in both printed scalings
        let half = SymMatrix::from_rows(&[
            vec![rat_i(0), rat_i(0), rat(-1, 2)],
            vec![rat_i(0), rat_i(2), rat_i(0)],
            vec![rat(-1, 2), rat_i(0), rat_i(0)],
        ])
        .unwrap();
        assert_eq!(half.signature(), Signature::new(2, 1, 0));
        let full = SymMatrix::from_i64_rows(&[&[0, 0, -1], &[0, 2, 0], &[-1, 0, 0]]);
        assert_eq!(full.signature(), Signature::new(2, 1, 0));
    }

    #[test]
    fn signature_pencil_member() {
        let m = SymMatrix::diagonal_i64(&[2, -1, 0, -1, -1]);
        assert_eq!(m.signature(), Signature::new(1, 3, 1));
        assert_eq!(m.signature().normalized(), Signature::new(3, 1, 1));
    }

    #[test]
    fn congruence_diagonalize_diag_input() {
        let m = SymMatrix::diagonal_i64(&[3, -2, 0]);
        let (t, d) = m.congruence_diagonalize();
        assert_eq!(t, Mat::identity(3));
        assert_eq!(d, vec![rat_i(3), rat_i(-2), rat_i(0)]);
    }

    #[test]
    fn congruence_diagonalize_hyperbolic() {
        let m = SymMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let (t, d) = m.congruence_diagonalize();
        let dm = m.congruence(&t).unwrap();
        for i in 0..2 {
            assert_eq!(dm.get(i, i), &d[i]);
            for j in i + 1..2 {
                assert!(dm.get(i, j).is_zero());
            }
        }
        let pos = d.iter().filter(|x| x.is_positive()).count();
        let neg = d.iter().filter(|x| x.is_negative()).count();
        assert_eq!((pos, neg), (1, 1));
    }

    #[test]
    fn kernel_vector_cases() {
        let m = SymMatrix::diagonal_i64(&[1, 1, 0]);
        assert_eq!(
            m.kernel_vector().unwrap(),
            Some(vec![rat_i(0), rat_i(0), rat_i(1)])
        );
        assert_eq!(SymMatrix::identity(3).kernel_vector().unwrap(), None);
        let m2 = SymMatrix::diagonal_i64(&[1, 0, 0]);
        assert!(matches!(
            m2.kernel_vector(),
            Err(MatrixError::CorankTooHigh(2))
        ));
    }

    #[test]
    fn kernel_vector_pencil_member() {
        // diag(3,0,1,-2,-1): the (2,2,1) member of a quadric pencil
        let m = SymMatrix::diagonal_i64(&[3, 0, 1, -2, -1]);
        assert_eq!(m.signature(), Signature::new(2, 2, 1));
        assert_eq!(
            m.kernel_vector().unwrap(),
            Some(vec![rat_i(0), rat_i(1), rat_i(0), rat_i(0), rat_i(0)])
        );
    }

    #[test]
    fn generalized_inverse_property() {
        let m = SymMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 0]]);
        let g = m.generalized_inverse();
        let mm = m.to_mat();
        let prod = mm.mul(&g.to_mat()).mul(&mm);
        assert_eq!(prod, mm);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_rows(vec![
            vec![rat_i(2), rat_i(1)],
            vec![rat_i(1), rat_i(3)],
        ]);
        let x = m.solve(&[rat_i(5), rat_i(10)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat_i(5), rat_i(10)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(m.det(), rat_i(5));
    }
}
