//! Exact linear algebra over `Q` and the Gaussian rationals `Q(i)`.
//!
//! Every routine here is generic over [`Field`], so the same reduction code
//! serves rational automorphism matrices and complex weight vectors.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rationals.
pub type Q = BigRational;
/// Gaussian rationals `a + b i` with `a, b` in `Q`.
pub type QI = Complex<BigRational>;

/// Exact commutative field used by the reduction routines.
pub trait Field:
    Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Div<Output = T> + Neg<Output = T>
{
}

/// Field with an embedding of the integers, used for structure constants.
pub trait Scalar: Field {
    fn from_i64(n: i64) -> Self;
}

impl Scalar for Q {
    fn from_i64(n: i64) -> Self {
        q(n)
    }
}

impl Scalar for QI {
    fn from_i64(n: i64) -> Self {
        to_qi(&q(n))
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(re: Q, im: Q) -> QI {
    Complex::new(re, im)
}

pub fn to_qi(x: &Q) -> QI {
    Complex::new(x.clone(), Q::zero())
}

pub fn lift(v: &[Q]) -> Vec<QI> {
    v.iter().map(to_qi).collect()
}

/// Real and imaginary parts of a complex vector.
pub fn split(v: &[QI]) -> (Vec<Q>, Vec<Q>) {
    (v.iter().map(|z| z.re.clone()).collect(), v.iter().map(|z| z.im.clone()).collect())
}

/// Returns the rational vector if every imaginary part vanishes.
pub fn real_part_if_real(v: &[QI]) -> Option<Vec<Q>> {
    if v.iter().all(|z| z.im.is_zero()) {
        Some(v.iter().map(|z| z.re.clone()).collect())
    } else {
        None
    }
}

/// Exact integer value of a rational, if integral and in `i64` range.
pub fn as_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vec<F: Field>(c: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| if x.is_zero() { F::zero() } else { c.clone() * x.clone() }).collect()
}

/// `acc += c * v`, skipping zero entries of `v`.
pub fn axpy<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + c.clone() * x.clone();
        }
    }
}

/// Least common multiple of the denominators of a rational vector.
pub fn denominator_lcm(v: &[Q]) -> BigInt {
    let mut l = BigInt::one();
    for x in v {
        let d = x.denom();
        let g = num_integer::Integer::gcd(&l, d);
        l = &l / &g * d;
    }
    l
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn sub_scalar_identity(&self, c: &F) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let cur = m.get(i, i).clone();
            m.set(i, i, cur - c.clone());
        }
        m
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self.row_vecs(), self.cols).1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (rows, pivots) = rref(self.row_vecs(), self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in rows.iter().zip(&pivots) {
                    if !r[f].is_zero() {
                        v[p] = -r[f].clone();
                    }
                }
                v
            })
            .collect()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Coefficients `c_0, ..., c_n` of `det(x I - self)`, lowest degree first.
    /// Exact reduction to upper Hessenberg form followed by the Hessenberg
    /// determinant recurrence.
    pub fn char_poly(&self) -> Vec<F> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(p) = (k + 1..n).find(|&i| !h.get(i, k).is_zero()) else { continue };
            if p != k + 1 {
                for j in 0..n {
                    let (a, b) = (h.get(p, j).clone(), h.get(k + 1, j).clone());
                    h.set(p, j, b);
                    h.set(k + 1, j, a);
                }
                for i in 0..n {
                    let (a, b) = (h.get(i, p).clone(), h.get(i, k + 1).clone());
                    h.set(i, p, b);
                    h.set(i, k + 1, a);
                }
            }
            let piv = h.get(k + 1, k).clone();
            for i in k + 2..n {
                if h.get(i, k).is_zero() {
                    continue;
                }
                let f = h.get(i, k).clone() / piv.clone();
                // Row i -= f row (k+1), then column (k+1) += f column i.
                for j in 0..n {
                    let v = h.get(i, j).clone() - f.clone() * h.get(k + 1, j).clone();
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = h.get(r, k + 1).clone() + f.clone() * h.get(r, i).clone();
                    h.set(r, k + 1, v);
                }
            }
        }
        // polys[m] = det(x I - H[..m, ..m]).
        let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
        for m in 1..=n {
            let k = m - 1;
            let prev = &polys[k];
            let mut next = vec![F::zero(); m + 1];
            for (d, c) in prev.iter().enumerate() {
                next[d + 1] = next[d + 1].clone() + c.clone();
                next[d] = next[d].clone() - h.get(k, k).clone() * c.clone();
            }
            let mut sub = F::one();
            for i in (0..k).rev() {
                sub = sub * h.get(i + 1, i).clone();
                if sub.is_zero() {
                    break;
                }
                let coef = h.get(i, k).clone() * sub.clone();
                if coef.is_zero() {
                    continue;
                }
                for (d, c) in polys[i].iter().enumerate() {
                    next[d] = next[d].clone() - coef.clone() * c.clone();
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let (rows, pivots) = rref(aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_rows(&rows.iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>()))
    }
}

/// Reduced row echelon form of `rows` restricted to the first `ncols`
/// columns used for pivoting. Returns nonzero rows and their pivot columns.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        if inv != F::one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let prow = rows[r].clone();
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] = row[j].clone() - f.clone() * prow[j].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Subspace of `F^n` stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Span<F> {
    pub ambient: usize,
    pub basis: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn zero(ambient: usize) -> Self {
        Span { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, Matrix::<F>::identity(ambient).row_vecs())
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let (basis, pivots) = rref(vectors, ambient);
        Span { ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            axpy(&mut rest, &-ci.clone(), b);
        }
        is_zero_vec(&rest).then_some(c)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_span(&self, other: &Span<F>) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn combine(&self, c: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            axpy(&mut v, ci, b);
        }
        v
    }

    pub fn sum(&self, other: &Span<F>) -> Span<F> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Span::from_vectors(self.ambient, vs)
    }

    pub fn intersect(&self, other: &Span<F>) -> Span<F> {
        if self.dim() == 0 || other.dim() == 0 {
            return Span::zero(self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0 and keep sum a_i u_i.
        let k = self.dim();
        let mut cols: Vec<Vec<F>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_cols(&cols, self.ambient);
        let vecs = m.kernel().into_iter().map(|z| self.combine(&z[..k])).collect();
        Span::from_vectors(self.ambient, vecs)
    }
}

/// Sylvester signature `(positive, negative, zero)` of a symmetric rational matrix.
pub fn signature(m: &Matrix<Q>) -> (usize, usize, usize) {
    assert_eq!(m.rows, m.cols, "signature of non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let diag = active.iter().copied().find(|&i| !a.get(i, i).is_zero());
        let p = match diag {
            Some(p) => p,
            None => {
                // Zero diagonal: find an off-diagonal pair and mix it into a diagonal entry.
                let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !a.get(i, j).is_zero());
                let Some((i, j)) = pair else { break };
                // Replace row/col i by row/col i + row/col j.
                for k in 0..n {
                    let v = a.get(i, k).clone() + a.get(j, k).clone();
                    a.set(i, k, v);
                }
                for k in 0..n {
                    let v = a.get(k, i).clone() + a.get(k, j).clone();
                    a.set(k, i, v);
                }
                i
            }
        };
        let d = a.get(p, p).clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f = a.get(i, p).clone() / d.clone();
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let v = a.get(i, j).clone() - f.clone() * a.get(p, j).clone();
                a.set(i, j, v);
            }
        }
    }
    (pos, neg, n - pos - neg)
}

/// Sparse matrix with sorted `(column, value)` rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub n: usize,
    pub rows: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn identity(n: usize) -> Self {
        SparseMatrix { n, rows: (0..n).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn from_dense(m: &Matrix<Q>) -> Self {
        assert_eq!(m.rows, m.cols, "sparse matrices are square");
        let rows = (0..m.rows).map(|i| m.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()).collect();
        SparseMatrix { n: m.rows, rows }
    }

    pub fn to_dense(&self) -> Matrix<Q> {
        let mut m = Matrix::zeros(self.n, self.n);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].iter().find(|(c, _)| *c == j).map_or_else(Q::zero, |(_, x)| x.clone())
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n, other.n, "shape mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: Vec<(usize, Q)> = Vec::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        let v = a * b;
                        match acc.binary_search_by_key(j, |e| e.0) {
                            Ok(pos) => acc[pos].1 += v,
                            Err(pos) => acc.insert(pos, (*j, v)),
                        }
                    }
                }
                acc.retain(|(_, x)| !x.is_zero());
                acc
            })
            .collect();
        SparseMatrix { n: self.n, rows }
    }

    /// Image of a column vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.rows.iter().map(|r| r.iter().filter(|(j, _)| !v[*j].is_zero()).fold(Q::zero(), |acc, (j, x)| acc + x * &v[*j])).collect()
    }

    /// Image of the `j`-th standard basis vector, as a sparse column.
    pub fn column(&self, j: usize) -> Vec<(usize, Q)> {
        self.rows.iter().enumerate().filter_map(|(i, r)| r.iter().find(|(c, _)| *c == j).map(|(_, x)| (i, x.clone()))).collect()
    }

    pub fn columns(&self) -> Vec<Vec<(usize, Q)>> {
        let mut cols = vec![Vec::new(); self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                cols[*j].push((i, x.clone()));
            }
        }
        cols
    }

    pub fn trace(&self) -> Q {
        (0..self.n).map(|i| self.get(i, i)).fold(Q::zero(), |a, b| a + b)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    /// Dense rows of `self - I`.
    pub fn minus_identity_rows(&self) -> Vec<Vec<Q>> {
        (0..self.n)
            .map(|i| {
                let mut row = vec![Q::zero(); self.n];
                for (j, x) in &self.rows[i] {
                    row[*j] = x.clone();
                }
                row[i] -= Q::one();
                row
            })
            .collect()
    }
}

/// Nearest Gaussian integer to a floating-point complex number.
pub fn round_gaussian(re: f64, im: f64) -> QI {
    qi(q(re.round() as i64), q(im.round() as i64))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Human-readable rational: `3`, `-1/2`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_qi(z: &QI) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => fmt_q(&z.re),
        (true, false) => format!("{}i", fmt_q(&z.im)),
        (false, false) => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!("{}{}{}i", fmt_q(&z.re), sign, fmt_q(&z.im.abs()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&a.apply(v)));
        }
        assert_eq!(a.rank() + k.len(), 4);
    }

    #[test]
    fn char_poly_satisfies_cayley_hamilton() {
        assert_eq!(m(&[&[2, -1], &[-1, 2]]).char_poly(), vec![q(3), q(-4), q(1)]);
        let a = m(&[&[0, 3, 1, -2], &[1, 0, 0, 5], &[4, -1, 2, 0], &[0, 0, 7, 1]]);
        let c = a.char_poly();
        assert_eq!(c[3], -a.trace());
        let mut acc = Matrix::<Q>::zeros(4, 4);
        let mut pow = Matrix::<Q>::identity(4);
        for coef in &c {
            for i in 0..4 {
                for j in 0..4 {
                    let v = acc.get(i, j).clone() + coef.clone() * pow.get(i, j).clone();
                    acc.set(i, j, v);
                }
            }
            pow = pow.mul(&a);
        }
        assert!(acc.is_zero());
        let nil = m(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        assert_eq!(nil.char_poly(), vec![q(0), q(0), q(0), q(1)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn span_intersection_dimension() {
        let u = Span::from_vectors(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let w = Span::from_vectors(3, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
        let i = u.intersect(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q(0), q(5), q(0)]));
        assert_eq!(u.sum(&w).dim(), 3);
    }

    #[test]
    fn signature_of_indefinite_forms() {
        assert_eq!(signature(&m(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(signature(&m(&[&[2, -1], &[-1, 2]])), (2, 0, 0));
        assert_eq!(signature(&m(&[&[-1, 0, 0], &[0, 0, 0], &[0, 0, 3]])), (1, 1, 1));
    }

    #[test]
    fn complex_kernel() {
        let i = qi(q(0), q(1));
        let a = Matrix::from_rows(&[vec![i.clone(), to_qi(&q(1))], vec![to_qi(&q(-1)), i.clone()]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.apply(&k[0])));
    }

    #[test]
    fn sparse_product_matches_dense() {
        let a = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        let b = m(&[&[1, 0, 2], &[0, 3, 0], &[0, 0, 1]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.trace(), q(-1));
    }
}
