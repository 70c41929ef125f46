//! Dense exact matrices: Smith normal form, Hermite-style echelon form, rank
//! and determinant over any [`EuclideanScalar`].

use std::fmt;

use crate::scalar::{EuclideanScalar, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    let cell = &mut out[(i, j)];
                    *cell = cell.clone() + prod;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![T::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = o.clone() + a.clone() * self[(i, j)].clone();
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self[(source, j)].clone();
            if !v.is_zero() {
                let cell = &mut self[(target, j)];
                *cell = cell.clone() + factor.clone() * v;
            }
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, source)].clone();
            if !v.is_zero() {
                let cell = &mut self[(i, target)];
                *cell = cell.clone() + factor.clone() * v;
            }
        }
    }

    fn scale_row(&mut self, i: usize, factor: &T) {
        for j in 0..self.cols {
            let cell = &mut self[(i, j)];
            *cell = cell.clone() * factor.clone();
        }
    }

    fn scale_col(&mut self, j: usize, factor: &T) {
        for i in 0..self.rows {
            let cell = &mut self[(i, j)];
            *cell = cell.clone() * factor.clone();
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U * A * V = D` with `D` diagonal, `d_i | d_{i+1}`, and `U`, `V` invertible
/// over the base ring. The inverses are tracked alongside.
#[derive(Clone, Debug)]
pub struct SnfResult<T: Scalar> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: EuclideanScalar> SnfResult<T> {
    /// Non-zero diagonal entries in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form over a Euclidean domain.
pub fn smith_normal_form<T: EuclideanScalar>(a: &Matrix<T>) -> SnfResult<T> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut v_inv = Matrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            // smallest non-zero entry of the trailing block
            let mut best: Option<(usize, usize, u128)> = None;
            for i in t..m {
                for j in t..n {
                    let s = d[(i, j)].size();
                    if s != 0 && best.map_or(true, |(_, _, b)| s < b) {
                        best = Some((i, j, s));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let pivot = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = d[(i, t)].div_rem_euclid(&pivot);
                let neg_q = -q.clone();
                d.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                u_inv.add_col_multiple(t, i, &q);
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = d[(t, j)].div_rem_euclid(&pivot);
                let neg_q = -q.clone();
                d.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                v_inv.add_row_multiple(t, j, &q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !d[(i, j)].div_rem_euclid(&pivot).1.is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                    u_inv.add_col_multiple(i, t, &-one);
                }
                None => break,
            }
        }
        if t < m && t < n && !d[(t, t)].is_zero() {
            let unit = d[(t, t)].normalizing_unit();
            if !unit.is_one() {
                let inv = unit.unit_inverse().expect("normalizing unit is a unit");
                d.scale_row(t, &unit);
                u.scale_row(t, &unit);
                u_inv.scale_col(t, &inv);
            }
        }
    }
    SnfResult {
        d,
        u,
        v,
        u_inv,
        v_inv,
    }
}

/// Reduced echelon form of a set of row vectors under invertible row
/// operations (Hermite normal form over the integers, reduced row echelon
/// form over a field). Columns are processed left to right.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// Non-zero rows, each with its pivot column; pivot columns increase.
    pub rows: Vec<(usize, Vec<T>)>,
    pub ncols: usize,
}

impl<T: EuclideanScalar> Echelon<T> {
    pub fn new(input: &[Vec<T>], ncols: usize) -> Self {
        let mut work: Vec<Vec<T>> = input
            .iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        let mut rows: Vec<(usize, Vec<T>)> = Vec::new();
        for col in 0..ncols {
            // gcd-combine all remaining rows with a non-zero entry in `col`
            loop {
                let mut best: Option<(usize, u128)> = None;
                for (idx, r) in work.iter().enumerate() {
                    let s = r[col].size();
                    if s != 0 && best.map_or(true, |(_, b)| s < b) {
                        best = Some((idx, s));
                    }
                }
                let Some((bi, _)) = best else { break };
                let pivot_row = work[bi].clone();
                let pivot = pivot_row[col].clone();
                let mut remaining = false;
                for (idx, r) in work.iter_mut().enumerate() {
                    if idx == bi || r[col].is_zero() {
                        continue;
                    }
                    let (q, rem) = r[col].div_rem_euclid(&pivot);
                    for (x, p) in r.iter_mut().zip(&pivot_row) {
                        *x = x.clone() - q.clone() * p.clone();
                    }
                    remaining |= !rem.is_zero();
                }
                if remaining {
                    continue;
                }
                let mut row = work.swap_remove(bi);
                let unit = row[col].normalizing_unit();
                for x in row.iter_mut() {
                    *x = x.clone() * unit.clone();
                }
                rows.push((col, row));
                work.retain(|r| r.iter().any(|x| !x.is_zero()));
                break;
            }
        }
        let mut ech = Echelon { rows, ncols };
        ech.reduce_above();
        ech
    }

    fn reduce_above(&mut self) {
        for k in 0..self.rows.len() {
            let (col, pivot_row) = self.rows[k].clone();
            let pivot = pivot_row[col].clone();
            for prev in 0..k {
                let r = &mut self.rows[prev].1;
                if r[col].is_zero() {
                    continue;
                }
                let (q, _) = r[col].div_rem_euclid(&pivot);
                if q.is_zero() {
                    continue;
                }
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - q.clone() * p.clone();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    /// True when every pivot is a unit, i.e. the non-pivot columns form a
    /// basis of the quotient module.
    pub fn unit_pivots(&self) -> bool {
        self.rows.iter().all(|(c, r)| r[*c].is_unit())
    }

    /// Reduces `v` modulo the row span, assuming unit pivots. The result is
    /// supported on non-pivot columns.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (col, row) in &self.rows {
            if out[*col].is_zero() {
                continue;
            }
            let inv = row[*col]
                .unit_inverse()
                .expect("reduce requires unit pivots");
            let q = out[*col].clone() * inv;
            for (x, p) in out.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * p.clone();
            }
        }
        out
    }
}

/// Rank over a field.
pub fn rank<T: EuclideanScalar>(rows: &[Vec<T>], ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

/// Determinant by unimodular row reduction to triangular form.
pub fn determinant<T: EuclideanScalar>(a: &Matrix<T>) -> T {
    assert_eq!(a.nrows(), a.ncols(), "determinant of a non-square matrix");
    let n = a.nrows();
    let mut m = a.clone();
    let mut sign = T::one();
    for c in 0..n {
        loop {
            let mut best: Option<(usize, u128)> = None;
            for r in c..n {
                let s = m[(r, c)].size();
                if s != 0 && best.map_or(true, |(_, b)| s < b) {
                    best = Some((r, s));
                }
            }
            let Some((br, _)) = best else {
                return T::zero();
            };
            if br != c {
                m.swap_rows(br, c);
                sign = -sign;
            }
            let pivot = m[(c, c)].clone();
            let mut clean = true;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let (q, rem) = m[(r, c)].div_rem_euclid(&pivot);
                m.add_row_multiple(r, c, &-q);
                clean &= rem.is_zero();
            }
            if clean {
                break;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * m[(i, i)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use num_bigint::BigInt;

    #[test]
    fn snf_of_zero_and_scalars() {
        let z: Matrix<i64> = Matrix::zeros(2, 2);
        let s = smith_normal_form(&z);
        assert!(s.d.is_zero());
        let a = Matrix::<i64>::from_i64_rows(&[vec![2]]);
        assert_eq!(smith_normal_form(&a).d[(0, 0)], 2);
    }

    #[test]
    fn snf_hand_example() {
        // det = -8, gcd of entries = 2, so diag(2, 4)
        let a = Matrix::<i64>::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), vec![2, 4]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(2));
        assert_eq!(s.v.mul(&s.v_inv), Matrix::identity(2));
    }

    #[test]
    fn snf_empty_matrices() {
        let a: Matrix<i64> = Matrix::zeros(0, 3);
        let s = smith_normal_form(&a);
        assert_eq!(s.v.nrows(), 3);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn echelon_over_gf2() {
        let rows = vec![
            vec![Gf2::ONE, Gf2::ONE, Gf2::ZERO],
            vec![Gf2::ZERO, Gf2::ONE, Gf2::ONE],
            vec![Gf2::ONE, Gf2::ZERO, Gf2::ONE],
        ];
        let e = Echelon::new(&rows, 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_columns(), vec![0, 1]);
    }

    #[test]
    fn hermite_reduces_gcd() {
        let rows = vec![vec![4i64, 1], vec![6, 0]];
        let e = Echelon::new(&rows, 2);
        assert_eq!(e.rows[0].1[0], 2);
        assert!(!e.unit_pivots());
    }

    #[test]
    fn determinants() {
        let a = Matrix::<i64>::from_i64_rows(&[vec![1, 0], vec![1, 5]]);
        assert_eq!(determinant(&a), 5);
        let b = Matrix::<BigInt>::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&b), BigInt::from(-1));
        let c = Matrix::<i64>::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(determinant(&c), 0);
    }
}
