//! Exact linear algebra: matrices over a field (rank, kernel, solve, inverse,
//! determinant) and matrices of polynomials (exact determinants via cofactor
//! expansion for small sizes, fraction-free elimination above that).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::MultiPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct FieldMatrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    entries: Vec<F::Elem>,
}

/// Output of [`FieldMatrix::rank_kernel_solve`].
#[derive(Clone, Debug)]
pub struct LinSolve<F: Field> {
    pub rank: usize,
    pub kernel: Vec<Vec<F::Elem>>,
    pub solution: Option<Vec<F::Elem>>,
}

impl<F: Field> FieldMatrix<F> {
    pub fn zero(field: F, nrows: usize, ncols: usize) -> Self {
        let entries = vec![field.zero(); nrows * ncols];
        FieldMatrix { field, nrows, ncols, entries }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch { detail: "ragged rows".into() });
            }
        }
        Ok(FieldMatrix { field, nrows, ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(field: F, nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                entries.push(f(i, j));
            }
        }
        FieldMatrix { field, nrows, ncols, entries }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.ncols, self.nrows, |i, j| self.at(j, i).clone())
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                detail: format!("vector length {} vs {} columns", v.len(), self.ncols),
            });
        }
        Ok((0..self.nrows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.ncols {
                    acc = self.field.add(&acc, &self.field.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect())
    }

    pub fn mul_mat(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch {
                detail: format!("{}x{} times {}x{}", self.nrows, self.ncols, other.nrows, other.ncols),
            });
        }
        Ok(Self::from_fn(self.field.clone(), self.nrows, other.ncols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.ncols {
                acc = self.field.add(&acc, &self.field.mul(self.at(i, k), other.at(k, j)));
            }
            acc
        }))
    }

    /// Row echelon reduction in place; returns pivot columns and the column
    /// permutation-free row operations are also applied to `rhs` when given.
    fn echelon(&mut self, mut rhs: Option<&mut Vec<F::Elem>>) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.nrows {
                break;
            }
            let Some(p) = (row..self.nrows).find(|&i| !f.is_zero(self.at(i, col))) else {
                continue;
            };
            if p != row {
                for j in 0..self.ncols {
                    self.entries.swap(row * self.ncols + j, p * self.ncols + j);
                }
                if let Some(r) = rhs.as_deref_mut() {
                    r.swap(row, p);
                }
            }
            let inv = f.inv(self.at(row, col)).unwrap();
            for j in col..self.ncols {
                let v = f.mul(self.at(row, j), &inv);
                self.set(row, j, v);
            }
            if let Some(r) = rhs.as_deref_mut() {
                r[row] = f.mul(&r[row], &inv);
            }
            for i in 0..self.nrows {
                if i != row && !f.is_zero(self.at(i, col)) {
                    let factor = self.at(i, col).clone();
                    for j in col..self.ncols {
                        let v = f.sub(self.at(i, j), &f.mul(&factor, self.at(row, j)));
                        self.set(i, j, v);
                    }
                    if let Some(r) = rhs.as_deref_mut() {
                        r[i] = f.sub(&r[i], &f.mul(&factor, &r[row]));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon(None).len()
    }

    /// Basis of the right kernel; `cols - rank` vectors.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.echelon(None);
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.ncols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Exact rank, kernel basis, and (when `b` is given and the system is
    /// consistent) one solution of `M x = b`. An inconsistent system is an
    /// error distinct from a dimension mismatch.
    pub fn rank_kernel_solve(&self, b: Option<&[F::Elem]>) -> Result<LinSolve<F>> {
        let f = self.field.clone();
        if let Some(b) = b {
            if b.len() != self.nrows {
                return Err(Error::DimensionMismatch {
                    detail: format!("rhs length {} vs {} rows", b.len(), self.nrows),
                });
            }
        }
        let mut m = self.clone();
        let mut rhs = b.map(|b| b.to_vec());
        let pivots = m.echelon(rhs.as_mut());
        let rank = pivots.len();
        let kernel = self.kernel();
        let solution = match rhs {
            None => None,
            Some(r) => {
                for i in rank..self.nrows {
                    if !f.is_zero(&r[i]) {
                        return Err(Error::InconsistentSystem);
                    }
                }
                let mut x = vec![f.zero(); self.ncols];
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = r[row].clone();
                }
                Some(x)
            }
        };
        Ok(LinSolve { rank, kernel, solution })
    }

    pub fn solve(&self, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
        Ok(self.rank_kernel_solve(Some(b))?.solution.unwrap())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquare { rows: self.nrows, cols: self.ncols });
        }
        let f = self.field.clone();
        let n = self.nrows;
        // augmented [self | I], reduce, read off the right block
        let mut aug = Self::zero(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.echelon(None);
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(f, n, n, |i, j| aug.at(i, n + j).clone()))
    }

    pub fn det(&self) -> Result<F::Elem> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquare { rows: self.nrows, cols: self.ncols });
        }
        let f = self.field.clone();
        let n = self.nrows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !f.is_zero(m.at(i, col))) else {
                return Ok(f.zero());
            };
            if p != col {
                for j in 0..n {
                    m.entries.swap(col * n + j, p * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.at(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).unwrap();
            for i in (col + 1)..n {
                if !f.is_zero(m.at(i, col)) {
                    let factor = f.mul(m.at(i, col), &inv);
                    for j in col..n {
                        let v = f.sub(m.at(i, j), &f.mul(&factor, m.at(col, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(det)
    }
}

/// `Some(lambda)` with `a = lambda * b` as vectors; both-zero gives 1.
pub fn vec_proportional<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<F::Elem> {
    if a.len() != b.len() {
        return None;
    }
    let a_zero = a.iter().all(|x| field.is_zero(x));
    let b_zero = b.iter().all(|x| field.is_zero(x));
    if a_zero && b_zero {
        return Some(field.one());
    }
    if a_zero || b_zero {
        return None;
    }
    let k = b.iter().position(|x| !field.is_zero(x)).unwrap();
    if field.is_zero(&a[k]) {
        return None;
    }
    let lambda = field.div(&a[k], &b[k]).unwrap();
    for i in 0..a.len() {
        if a[i] != field.mul(&lambda, &b[i]) {
            return None;
        }
    }
    Some(lambda)
}

/// Rectangular matrix of polynomials sharing variable count and field.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<F: Field> {
    nrows: usize,
    ncols: usize,
    entries: Vec<MultiPoly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(rows: Vec<Vec<MultiPoly<F>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if nrows == 0 || ncols == 0 {
            return Err(Error::DimensionMismatch { detail: "empty matrix".into() });
        }
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch { detail: "ragged rows".into() });
            }
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        let nv = entries[0].nvars();
        let fld = entries[0].field().clone();
        for e in &entries {
            if e.nvars() != nv {
                return Err(Error::VarCountMismatch { left: nv, right: e.nvars() });
            }
            if *e.field() != fld {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(PolyMatrix { nrows, ncols, entries })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly<F> {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly<F>) {
        self.entries[i * self.ncols + j] = v;
    }

    fn zero_poly(&self) -> MultiPoly<F> {
        MultiPoly::zero(self.entries[0].field().clone(), self.entries[0].nvars())
    }

    /// Exact determinant. Cofactor expansion up to 5x5 (the Hessians that
    /// dominate the workload), fraction-free Gaussian elimination above that
    /// to avoid intermediate blowup.
    pub fn det(&self) -> Result<MultiPoly<F>> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquare { rows: self.nrows, cols: self.ncols });
        }
        if self.nrows <= 5 {
            Ok(self.det_cofactor(&(0..self.ncols).collect::<Vec<_>>(), &(0..self.nrows).collect::<Vec<_>>()))
        } else {
            self.det_bareiss()
        }
    }

    fn det_cofactor(&self, cols: &[usize], rows: &[usize]) -> MultiPoly<F> {
        if rows.len() == 1 {
            return self.at(rows[0], cols[0]).clone();
        }
        let mut acc = self.zero_poly();
        let rest: Vec<usize> = rows[1..].to_vec();
        for (k, &c) in cols.iter().enumerate() {
            let e = self.at(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_cofactor(&sub_cols, &rest);
            let signed = e.mul(&minor).expect("compatible entries");
            acc = if k % 2 == 0 {
                acc.add(&signed).expect("compatible entries")
            } else {
                acc.sub(&signed).expect("compatible entries")
            };
        }
        acc
    }

    fn det_bareiss(&self) -> Result<MultiPoly<F>> {
        let n = self.nrows;
        let field = self.entries[0].field().clone();
        let nvars = self.entries[0].nvars();
        let mut m = self.clone();
        let one = MultiPoly::constant(field.clone(), nvars, field.one());
        let mut prev = one;
        let mut sign_flip = false;
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = ((k + 1)..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return Ok(self.zero_poly());
                };
                for j in 0..n {
                    let a = m.at(k, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(k, j, b);
                    m.set(p, j, a);
                }
                sign_flip = !sign_flip;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = m
                        .at(k, k)
                        .mul(m.at(i, j))?
                        .sub(&m.at(i, k).mul(m.at(k, j))?)?;
                    let q = num.div_exact(&prev).expect("Bareiss division is exact");
                    m.set(i, j, q);
                }
            }
            for i in (k + 1)..n {
                m.set(i, k, self.zero_poly());
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        Ok(if sign_flip { d.neg() } else { d })
    }
}
