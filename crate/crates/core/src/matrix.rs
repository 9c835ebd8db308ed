//! Dense matrices over an [`InvolutiveRing`] and incremental row echelon forms.

use thiserror::Error;

use crate::rings::InvolutiveRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not invertible over the ring")]
    NotInvertible,
    #[error("pivot {0} is nonzero but not invertible; echelon forms need a field")]
    NotAField(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<E> {
        self.data
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<R: InvolutiveRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity<R: InvolutiveRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let (zero, one) = (ring.zero(), ring.one());
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn is_identity<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> bool {
        self.is_square() && *self == Self::identity(ring, self.rows)
    }

    pub fn is_diagonal<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || ring.is_zero(self.get(i, j))))
    }

    pub fn add<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| ring.sub(a, b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> Self {
        self.map(|x| ring.neg(x))
    }

    pub fn scale<R: InvolutiveRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(|x| ring.mul(c, x))
    }

    /// Apply `θ` to every entry.
    pub fn theta<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> Self {
        self.map(|x| ring.theta(x))
    }

    /// Product skipping zero entries of the left factor; the matrices
    /// produced by root elements are sparse.
    pub fn mul<R: InvolutiveRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                let row = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    if !ring.is_zero(b) {
                        *d = ring.add(d, &ring.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<R: InvolutiveRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !ring.is_zero(a) && !ring.is_zero(b))
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect()
    }

    pub fn pow<R: InvolutiveRing<Elem = E>>(&self, ring: &R, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(ring, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            base = base.mul(ring, &base);
            e >>= 1;
        }
        acc
    }

    /// Gauss-Jordan elimination choosing invertible pivots. Succeeds for
    /// every invertible matrix over a field or a local ring such as `F[t]/(t^k)`.
    pub fn inverse<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(ring, n);
        for col in 0..n {
            let (p, pinv) = (col..n)
                .find_map(|r| ring.inverse(a.get(r, col)).map(|x| (r, x)))
                .ok_or(MatrixError::NotInvertible)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            a.scale_row(ring, col, &pinv);
            inv.scale_row(ring, col, &pinv);
            for r in 0..n {
                if r != col && !ring.is_zero(a.get(r, col)) {
                    let f = a.get(r, col).clone();
                    a.axpy_row(ring, r, col, &f);
                    inv.axpy_row(ring, r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by elimination with invertible pivots; `None` if some
    /// column has no invertible candidate while still being nonzero.
    pub fn determinant<R: InvolutiveRing<Elem = E>>(&self, ring: &R) -> Option<E> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = ring.one();
        for col in 0..n {
            match (col..n).find_map(|r| ring.inverse(a.get(r, col)).map(|x| (r, x))) {
                Some((p, pinv)) => {
                    if p != col {
                        a.swap_rows(p, col);
                        det = ring.neg(&det);
                    }
                    det = ring.mul(&det, a.get(col, col));
                    a.scale_row(ring, col, &pinv);
                    for r in col + 1..n {
                        if !ring.is_zero(a.get(r, col)) {
                            let f = a.get(r, col).clone();
                            a.axpy_row(ring, r, col, &f);
                        }
                    }
                }
                None if (col..n).all(|r| ring.is_zero(a.get(r, col))) => return Some(ring.zero()),
                None => return None,
            }
        }
        Some(det)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row<R: InvolutiveRing<Elem = E>>(&mut self, ring: &R, i: usize, c: &E) {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = ring.mul(c, x);
        }
    }

    /// `row[dst] -= f * row[src]`.
    fn axpy_row<R: InvolutiveRing<Elem = E>>(&mut self, ring: &R, dst: usize, src: usize, f: &E) {
        for c in 0..self.cols {
            let s = &self.data[src * self.cols + c];
            if !ring.is_zero(s) {
                let v = ring.sub(&self.data[dst * self.cols + c], &ring.mul(f, s));
                self.data[dst * self.cols + c] = v;
            }
        }
    }
}

/// A row echelon basis of a subspace of `K^len`, grown one vector at a time.
///
/// Rows are stored sparsely and normalised to 1 at their pivot. Each new row
/// is reduced against all earlier ones, which keeps later pivots clear of
/// earlier pivot columns so reduction can proceed in insertion order.
#[derive(Debug, Clone)]
pub struct RowEchelon<R: InvolutiveRing> {
    ring: R,
    len: usize,
    rows: Vec<Vec<(usize, R::Elem)>>,
    pivots: Vec<usize>,
}

impl<R: InvolutiveRing> RowEchelon<R> {
    pub fn new(ring: R, len: usize) -> Self {
        Self { ring, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Reduce `v` against the current basis in place.
    pub fn reduce(&self, v: &mut [R::Elem]) {
        let ring = &self.ring;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if ring.is_zero(&v[p]) {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in row {
                v[*j] = ring.sub(&v[*j], &ring.mul(&f, x));
            }
        }
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.ring.is_zero(x))
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[R::Elem]) -> Result<bool, MatrixError> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let ring = &self.ring;
        let Some(p) = w.iter().position(|x| !ring.is_zero(x)) else {
            return Ok(false);
        };
        let inv = ring.inverse(&w[p]).ok_or_else(|| MatrixError::NotAField(ring.format(&w[p])))?;
        let row: Vec<(usize, R::Elem)> =
            w.iter().enumerate().skip(p).filter(|(_, x)| !ring.is_zero(x)).map(|(j, x)| (j, ring.mul(&inv, x))).collect();
        self.rows.push(row);
        self.pivots.push(p);
        Ok(true)
    }

    /// Dense copies of the basis rows.
    pub fn basis(&self) -> Vec<Vec<R::Elem>> {
        self.rows
            .iter()
            .map(|row| {
                let mut v = vec![self.ring.zero(); self.len];
                for (j, x) in row {
                    v[*j] = x.clone();
                }
                v
            })
            .collect()
    }
}

/// Rank over a field.
pub fn rank<R: InvolutiveRing>(ring: &R, m: &Matrix<R::Elem>) -> Result<usize, MatrixError> {
    let mut ech = RowEchelon::new(ring.clone(), m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i))?;
    }
    Ok(ech.dimension())
}
