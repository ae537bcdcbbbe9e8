//! Exact rational scalars and the linear algebra every other module is built on.
//!
//! A [`Mat`] with `rows × cols` shape is a linear map from a `cols`-dimensional
//! space to a `rows`-dimensional one (column-vector convention). Storage is
//! row-major and sparse: almost every structure map in this crate is a
//! permutation, a structure-constant table or a Kronecker product of such,
//! so only nonzero entries are kept.
//!
//! Tensor convention: the basis of `V ⊗ W` is ordered with the `V` index
//! major and the `W` index minor, so `e_i ⊗ f_j` sits at `i * dim W + j`.
//! [`kron`] and [`braid`] are the only places that know this.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// An exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Non-canonical input such as `"2/4"` is normalized.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinAlgError> {
    let t = s.trim();
    let bad = || LinAlgError::BadScalar(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no exact factorization: target does not lie in the image")]
    NoExactFactorization,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
}

/// Dense-semantics matrix with sparse row storage. Each row holds
/// `(column, value)` pairs sorted by column with no explicit zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for r in self.to_rows() {
                let cells: Vec<String> = r.iter().map(format_scalar).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
        } else {
            writeln!(f, "  <{} nonzeros>", self.nnz())?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Scalar::one())]).collect();
        Mat { rows: n, cols: n, data }
    }

    /// Builds from dense rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let data = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix rows");
                r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Mat { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Builds from a row-major entry list of length `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut it = entries.into_iter();
        let dense = (0..rows).map(|_| it.by_ref().take(cols).collect()).collect();
        Ok(Self::from_rows_with_cols(dense, cols))
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_at(r, c, &v);
        }
        m
    }

    pub fn column(v: Vec<Scalar>) -> Self {
        Self::from_rows_with_cols(v.into_iter().map(|x| vec![x]).collect(), 1)
    }

    /// The 1×1 matrix holding `x`.
    pub fn scalar(x: Scalar) -> Self {
        Self::from_rows(vec![vec![x]])
    }

    pub fn basis_vector(n: usize, i: usize) -> Self {
        let mut m = Mat::zeros(n, 1);
        m.set(i, 0, Scalar::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row_entries(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match self.data[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (c, v));
                }
            }
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    /// Row-major entries, zeros included.
    pub fn entries(&self) -> Vec<Scalar> {
        self.to_rows().into_iter().flatten().collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|row| {
                let mut dense = vec![Scalar::zero(); self.cols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Mat) -> Result<Mat, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::Shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); rhs.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; rhs.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                    }
                    acc[*j] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = std::mem::replace(&mut acc[j], Scalar::zero());
                mark[j] = false;
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            touched.clear();
            data.push(out);
        }
        Ok(Mat { rows: self.rows, cols: rhs.cols, data })
    }

    /// `self · rhs`, panicking on a shape mismatch. For internal use where
    /// shapes are fixed by construction.
    pub fn dot(&self, rhs: &Mat) -> Mat {
        self.mul(rhs).expect("shape mismatch in internal composite")
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat, LinAlgError> {
        self.combine(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat, LinAlgError> {
        self.combine(rhs, |a, b| a - b)
    }

    fn combine(&self, rhs: &Mat, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Mat, LinAlgError> {
        if self.shape() != rhs.shape() {
            return Err(LinAlgError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = Scalar::zero();
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let (mut i, mut j) = (0, 0);
                let mut out = Vec::with_capacity(a.len().max(b.len()));
                while i < a.len() || j < b.len() {
                    let (c, v) = match (a.get(i), b.get(j)) {
                        (Some((ca, va)), Some((cb, _))) if ca < cb => {
                            i += 1;
                            (*ca, op(va, &zero))
                        }
                        (Some((ca, _)), Some((cb, vb))) if cb < ca => {
                            j += 1;
                            (*cb, op(&zero, vb))
                        }
                        (Some((ca, va)), Some((_, vb))) => {
                            i += 1;
                            j += 1;
                            (*ca, op(va, vb))
                        }
                        (Some((ca, va)), None) => {
                            i += 1;
                            (*ca, op(va, &zero))
                        }
                        (None, Some((cb, vb))) => {
                            j += 1;
                            (*cb, op(&zero, vb))
                        }
                        (None, None) => unreachable!(),
                    };
                    if !v.is_zero() {
                        out.push((c, v));
                    }
                }
                out
            })
            .collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        if k.is_zero() {
            return Mat::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * k)).collect())
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        if self.cols != other.cols {
            return Err(LinAlgError::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `self` left of `other`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::Shape("hstack row mismatch".into()));
        }
        let off = self.cols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(c, v)| (c + off, v.clone())));
                r
            })
            .collect();
        Ok(Mat { rows: self.rows, cols: self.cols + other.cols, data })
    }

    /// Rows `start..start+len`.
    pub fn row_block(&self, start: usize, len: usize) -> Mat {
        Mat { rows: len, cols: self.cols, data: self.data[start..start + len].to_vec() }
    }

    /// Columns `start..start+len`.
    pub fn col_block(&self, start: usize, len: usize) -> Mat {
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| *c >= start && *c < start + len)
                    .map(|(c, v)| (c - start, v.clone()))
                    .collect()
            })
            .collect();
        Mat { rows: self.rows, cols: len, data }
    }

    pub fn rank(&self) -> usize {
        rref(&self.to_rows(), self.cols).1.len()
    }

    /// The single entry of a 1×1 matrix.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.shape() == (1, 1)).then(|| self.get(0, 0))
    }

    /// First coordinate where `self` and `other` differ, with both values.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize, Scalar, Scalar)> {
        if self.shape() != other.shape() {
            return None;
        }
        for r in 0..self.rows {
            if self.data[r] != other.data[r] {
                let diff = Mat { rows: 1, cols: self.cols, data: vec![self.data[r].clone()] }
                    .sub(&Mat { rows: 1, cols: self.cols, data: vec![other.data[r].clone()] })
                    .ok()?;
                let c = diff.data[0][0].0;
                return Some((r, c, self.get(r, c), other.get(r, c)));
            }
        }
        None
    }

    /// Compact inverse of a square invertible matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() || self.rank() != self.rows {
            return None;
        }
        solve_factor(self, &Mat::identity(self.rows)).ok()
    }
}

/// Gauss–Jordan elimination on dense rows with first-nonzero pivoting.
/// Returns the reduced rows (nonzero rows only) and the pivot columns.
fn rref(rows: &[Vec<Scalar>], cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the null space of `m` as the columns of a `cols × k` matrix,
/// `k = cols − rank(m)`. The basis is canonical: its transpose is in reduced
/// row echelon form.
pub fn kernel(m: &Mat) -> Mat {
    let n = m.cols();
    let (red, pivots) = rref(&m.to_rows(), n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    let (canon, _) = rref(&basis, n);
    Mat::from_rows_with_cols(canon, n).transpose().reshape_empty(n)
}

impl Mat {
    // A 0-row transpose loses the row count; restore it.
    fn reshape_empty(mut self, rows: usize) -> Mat {
        if self.data.is_empty() && self.rows == 0 {
            self.rows = rows;
            self.data = vec![Vec::new(); rows];
        }
        self
    }
}

/// Solves `through · u = target` exactly. `through` must have full column
/// rank, which makes `u` unique.
pub fn solve_factor(through: &Mat, target: &Mat) -> Result<Mat, LinAlgError> {
    if through.rows() != target.rows() {
        return Err(LinAlgError::Shape(format!(
            "factoring a {}-row target through a {}-row map",
            target.rows(),
            through.rows()
        )));
    }
    let k = through.cols();
    let aug = through.hstack(target)?;
    let (red, pivots) = rref(&aug.to_rows(), aug.cols());
    if pivots.iter().any(|&p| p >= k) {
        return Err(LinAlgError::NoExactFactorization);
    }
    if pivots.len() != k {
        return Err(LinAlgError::Shape("factoring map is not of full column rank".into()));
    }
    let rows = red.into_iter().map(|r| r[k..].to_vec()).collect();
    Ok(Mat::from_rows_with_cols(rows, target.cols()))
}

/// Kronecker product under the left-major tensor convention.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = Vec::with_capacity(rows);
    for ra in &a.data {
        for rb in &b.data {
            let mut row = Vec::with_capacity(ra.len() * rb.len());
            for (ca, va) in ra {
                for (cb, vb) in rb {
                    row.push((ca * b.cols + cb, va * vb));
                }
            }
            data.push(row);
        }
    }
    Mat { rows, cols, data }
}

/// Kronecker product of a list; the empty list gives the 1×1 identity.
pub fn kron_all(ms: &[&Mat]) -> Mat {
    ms.iter().fold(Mat::identity(1), |acc, m| kron(&acc, m))
}

/// The braiding of the base, `V ⊗ W → W ⊗ V` with `dim V = dim_a`,
/// `dim W = dim_b`. The base is symmetric, so this is its own inverse up to
/// swapping the arguments; [`braid_inv`] is kept as a separate entry point.
pub fn braid(dim_a: usize, dim_b: usize) -> Mat {
    let n = dim_a * dim_b;
    let mut m = Mat::zeros(n, n);
    for i in 0..dim_a {
        for j in 0..dim_b {
            m.set(j * dim_a + i, i * dim_b + j, Scalar::one());
        }
    }
    m
}

/// Inverse braiding `W ⊗ V → V ⊗ W`, the inverse of `braid(dim_a, dim_b)`.
pub fn braid_inv(dim_a: usize, dim_b: usize) -> Mat {
    braid(dim_b, dim_a)
}

/// Splits an idempotent `e = section · retraction` with
/// `retraction · section = id`. The section's columns are the echelonized
/// column space of `e`.
pub fn split_idempotent(e: &Mat) -> Result<(Mat, Mat), LinAlgError> {
    if !e.is_square() {
        return Err(LinAlgError::Shape("idempotent must be square".into()));
    }
    if e.dot(e) != *e {
        return Err(LinAlgError::NotIdempotent);
    }
    let n = e.rows();
    let (colspace, _) = rref(&e.transpose().to_rows(), n);
    let section = Mat::from_rows_with_cols(colspace, n).transpose().reshape_empty(n);
    let retraction = if section.cols() == 0 {
        Mat::zeros(0, n)
    } else {
        solve_factor(&section, e)?
    };
    Ok((retraction, section))
}

/// Identity on an `n`-dimensional space; short alias used throughout.
pub fn eye(n: usize) -> Mat {
    Mat::identity(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(kernel(&Mat::zeros(2, 2)), eye(2));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = kernel(&eye(3));
        assert_eq!(k.shape(), (3, 0));
    }

    #[test]
    fn kernel_of_row_one_one() {
        // hand reduction: x + y = 0 → span (1, -1)
        let k = kernel(&Mat::from_i64(&[&[1, 1]]));
        assert_eq!(k, Mat::from_i64(&[&[1], &[-1]]));
    }

    #[test]
    fn solve_factor_cases() {
        let m = Mat::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(solve_factor(&eye(2), &m).unwrap(), m);
        let through = Mat::from_i64(&[&[1], &[0]]);
        assert_eq!(
            solve_factor(&through, &Mat::from_i64(&[&[5], &[0]])).unwrap(),
            Mat::from_i64(&[&[5]])
        );
        assert_eq!(
            solve_factor(&through, &Mat::from_i64(&[&[0], &[1]])),
            Err(LinAlgError::NoExactFactorization)
        );
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Mat::from_i64(&[&[2]]), &Mat::from_i64(&[&[3]])), Mat::from_i64(&[&[6]]));
        assert_eq!(kron(&eye(2), &eye(3)), eye(6));
        let k = kron(&Mat::from_i64(&[&[1, 0], &[0, 0]]), &Mat::from_i64(&[&[0, 1], &[0, 0]]));
        let mut expect = Mat::zeros(4, 4);
        expect.set(0, 1, int(1));
        assert_eq!(k, expect);
    }

    #[test]
    fn split_idempotent_examples() {
        for n in 0..4 {
            let (r, s) = split_idempotent(&eye(n)).unwrap();
            assert_eq!(r.rows(), n);
            assert_eq!(s.dot(&r), eye(n));
            let (r, s) = split_idempotent(&Mat::zeros(n, n)).unwrap();
            assert_eq!((r.rows(), s.cols()), (0, 0));
        }
        let e = Mat::from_i64(&[&[1, 1], &[0, 0]]);
        assert_eq!(e.dot(&e), e);
        let (r, s) = split_idempotent(&e).unwrap();
        assert_eq!(s.dot(&r), e);
        assert_eq!(r.dot(&s), eye(1));
        assert_eq!(split_idempotent(&Mat::from_i64(&[&[2]])), Err(LinAlgError::NotIdempotent));
    }

    #[test]
    fn braid_examples() {
        assert_eq!(braid(1, 3), eye(3));
        assert_eq!(braid(2, 2).dot(&braid(2, 2)), eye(4));
        // every basis pair of k^2 ⊗ k^3
        for i in 0..2 {
            for j in 0..3 {
                let v = Mat::basis_vector(2, i);
                let w = Mat::basis_vector(3, j);
                assert_eq!(braid(2, 3).dot(&kron(&v, &w)), kron(&w, &v));
            }
        }
        assert_eq!(braid_inv(2, 3).dot(&braid(2, 3)), eye(6));
    }

    #[test]
    fn scalar_parsing_normalizes() {
        assert_eq!(parse_scalar("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(parse_scalar("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(format_scalar(&frac(6, 3)), "2");
        assert_eq!(format_scalar(&frac(-1, 2)), "-1/2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn sparse_set_and_add() {
        let mut m = Mat::zeros(2, 2);
        m.set(0, 1, int(3));
        m.add_at(0, 1, &int(-3));
        assert!(m.is_zero());
        let a = Mat::from_i64(&[&[1, 0], &[0, 2]]);
        let b = Mat::from_i64(&[&[0, 5], &[0, -2]]);
        assert_eq!(a.add(&b).unwrap(), Mat::from_i64(&[&[1, 5], &[0, 0]]));
        assert_eq!(a.first_difference(&b), Some((0, 0, int(1), int(0))));
    }
}
