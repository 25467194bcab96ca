//! Dense exact matrices, reduced row-echelon forms and canonical subspaces.
//!
//! Every tensor space in the crate is indexed with the Kronecker convention:
//! `e_i ⊗ e_j` sits at `i * dim_b + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from row-major data; lengths must agree.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "matrix data has {} entries, expected {rows}x{cols}",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| !field.owns(s)) {
            return Err(Error::input(format!("scalar {bad} is not in {field}")));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from explicit rows of equal length.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::input(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Matrix::from_vec(field, n, cols, data)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Kronecker product; `e_i ⊗ e_j` maps to index `i * b.dim + j`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(k, l);
                        if !x.is_zero() {
                            out.data[(i * b.rows + k) * cols + j * b.cols + l] = a * x;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form together with the pivot columns.
    /// Pivots are chosen leftmost-first, scanning rows top-down.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][col].inv().expect("pivot is non-zero");
            if !inv.is_one() {
                for x in rows[next][col..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = rows[next].clone();
            let support: Vec<usize> = (col..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for &c in &support {
                    let delta = &factor * &pivot_row[c];
                    row[c] -= &delta;
                }
            }
            pivots.push(col);
            next += 1;
        }
        let data = rows.into_iter().flatten().collect();
        (
            Matrix {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// The right null space `{v : self · v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut vectors = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            vectors.push(v);
        }
        Subspace::span(self.field, self.cols, &vectors)
    }

    /// One exact solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (r, br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.data[r * (self.cols + 1) + c] = self.get(r, c).clone();
            }
            aug.data[r * (self.cols + 1) + self.cols] = br.clone();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// A subspace of `field^ambient`, stored as a canonical rref basis.
/// Equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// The span of the given vectors (each of length `ambient`).
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec()).expect("vector length");
        Subspace::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let basis = Matrix {
            field: m.field,
            rows: k,
            cols: m.cols,
            data: r.data[..k * m.cols].to_vec(),
        };
        Subspace { ambient: m.cols, basis }
    }

    pub fn field(&self) -> Field {
        self.basis.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::input(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Linear equations cutting out the subspace: `v ∈ self ⟺ C·v = 0`.
    pub fn equations(&self) -> Matrix {
        let perp = self.basis.kernel();
        perp.basis.clone()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if self.is_full() {
            return true;
        }
        self.equations().mul_vec(v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        if other.is_full() || self.is_zero() {
            return true;
        }
        let eq = other.equations();
        (0..self.dim()).all(|r| eq.mul_vec(self.basis.row(r)).iter().all(Scalar::is_zero))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let m = Matrix::vstack(self.field(), self.ambient, &[self.basis.clone(), other.basis.clone()]);
        Ok(Subspace::row_space(&m))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let eq = Matrix::vstack(self.field(), self.ambient, &[self.equations(), other.equations()]);
        Ok(eq.kernel())
    }

    /// The image `op(self)` as a subspace of `op`'s codomain.
    pub fn image(&self, op: &Matrix) -> Subspace {
        assert_eq!(op.cols, self.ambient, "operator domain mismatch");
        let vecs: Vec<Vec<Scalar>> = (0..self.dim()).map(|r| op.mul_vec(self.basis.row(r))).collect();
        Subspace::span(self.field(), op.rows, &vecs)
    }

    /// The preimage `op⁻¹(self)` inside `op`'s domain.
    pub fn preimage(&self, op: &Matrix) -> Subspace {
        assert_eq!(op.rows, self.ambient, "operator codomain mismatch");
        self.equations().mul(op).kernel()
    }
}

/// Builds `e_k` of the given length.
pub fn unit_vector(field: Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Tensor product of two coordinate vectors under the Kronecker convention.
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(Scalar::field).unwrap_or(Field::Rational);
    let mut out = vec![field.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

/// Renders a vector as `[a, b, c]` with exact scalars.
pub fn format_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity() {
        let i = Matrix::identity(q(), 3);
        assert_eq!(i.rref(), i);
    }

    #[test]
    fn rref_mod_two() {
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, 0]]);
        assert_eq!(m.rref(), Matrix::identity(f2, 2));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::zeros(q(), 2, 2).kernel().is_full());
        assert!(Matrix::identity(q(), 2).kernel().is_zero());
        let k = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).kernel();
        let expected = Subspace::span(q(), 2, &[vec![q().from_i64(-2), q().from_i64(1)]]);
        assert_eq!(k, expected);
        assert_eq!(k.basis().row(0), &[q().one(), q().frac(-1, 2)]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q().from_i64(3), q().frac(-1, 2)];
        assert_eq!(Matrix::identity(q(), 2).solve(&b).unwrap(), Some(b.clone()));
        let under = Matrix::from_i64(q(), &[&[1, 1]]);
        let x = under.solve(&[q().from_i64(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], q().from_i64(2));
        let inconsistent = Matrix::from_i64(q(), &[&[1], &[1]]);
        assert_eq!(inconsistent.solve(&[q().zero(), q().one()]).unwrap(), None);
        assert!(inconsistent.solve(&[q().zero()]).is_err());
    }

    #[test]
    fn subspace_lattice_examples() {
        let e1 = Subspace::span(q(), 2, &[unit_vector(q(), 2, 0)]);
        let e2 = Subspace::span(q(), 2, &[unit_vector(q(), 2, 1)]);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.sum(&Subspace::zero(q(), 3)).is_err());
    }

    #[test]
    fn kron_examples() {
        let i2 = Matrix::identity(q(), 2);
        assert_eq!(i2.kron(&i2), Matrix::identity(q(), 4));
        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        let v: Vec<Scalar> = (1..=4).map(|x| q().from_i64(x)).collect();
        let w = swap.kron(&i2).mul_vec(&v);
        let expected: Vec<Scalar> = [3, 4, 1, 2].iter().map(|&x| q().from_i64(x)).collect();
        assert_eq!(w, expected);
    }

    #[test]
    fn kron_acts_on_simple_tensors() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[0, -1]]);
        let b = Matrix::from_i64(q(), &[&[3, 0, 1], &[1, 1, 0], &[0, 2, -2]]);
        let v = vec![q().from_i64(2), q().from_i64(-1)];
        let w = vec![q().from_i64(1), q().frac(1, 2), q().from_i64(3)];
        let lhs = a.kron(&b).mul_vec(&kron_vec(&v, &w));
        let rhs = kron_vec(&a.mul_vec(&v), &b.mul_vec(&w));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn preimage_and_image() {
        // projection onto the first coordinate of Q^2
        let p = Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]);
        let e1 = Subspace::span(q(), 2, &[unit_vector(q(), 2, 0)]);
        assert_eq!(Subspace::full(q(), 2).image(&p), e1);
        assert!(Subspace::zero(q(), 2).preimage(&p).dim() == 1);
        assert!(e1.preimage(&p).is_full());
    }
}
