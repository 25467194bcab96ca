//! Coalgebra, bialgebra and Hopf structure on top of [`Algebra`], plus
//! arithmetic in tensor powers `H^{⊗k}`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{format_vec, kron_vec, unit_vector, Matrix, Subspace};
use crate::report::Violation;

/// `Δ(e_i)` as an `n²`-vector (Kronecker order) and `ε` as `n` scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    comult: Vec<Vec<Scalar>>,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(dim: usize, comult: Vec<Vec<Scalar>>, counit: Vec<Scalar>) -> Result<Coalgebra> {
        if comult.len() != dim || comult.iter().any(|d| d.len() != dim * dim) {
            return Err(Error::input(format!(
                "comultiplication must give {dim} vectors of length {}",
                dim * dim
            )));
        }
        if counit.len() != dim {
            return Err(Error::input(format!(
                "counit has length {}, expected {dim}",
                counit.len()
            )));
        }
        Ok(Coalgebra { dim, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self, i: usize) -> &[Scalar] {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }
}

/// An element of `H^{⊗arity}` with Kronecker-ordered coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub arity: usize,
    pub coeffs: Vec<Scalar>,
}

impl TensorElement {
    pub fn new(arity: usize, coeffs: Vec<Scalar>) -> TensorElement {
        TensorElement { arity, coeffs }
    }

    /// Sparse construction from `(multi-index, coefficient)` pairs.
    pub fn from_terms(field: Field, dim: usize, arity: usize, terms: &[(Vec<usize>, Scalar)]) -> TensorElement {
        let mut coeffs = vec![field.zero(); dim.pow(arity as u32)];
        for (idx, c) in terms {
            assert_eq!(idx.len(), arity);
            coeffs[flat_index(idx, dim)] += c;
        }
        TensorElement { arity, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Non-zero `(flat index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, other.arity);
        TensorElement::new(
            self.arity,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        TensorElement::new(self.arity, self.coeffs.iter().map(|a| a * s).collect())
    }
}

pub fn flat_index(digits: &[usize], dim: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * dim + d)
}

pub fn digits_of(mut idx: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut d = vec![0; arity];
    for slot in d.iter_mut().rev() {
        *slot = idx % dim;
        idx /= dim;
    }
    d
}

/// A Hopf algebra: algebra, coalgebra and antipode (`S[k][j]` is the
/// coefficient of `e_k` in `S(e_j)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
}

/// Which integrals: left (`ht = ε(h)t`) or right (`th = ε(h)t`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralSide {
    Left,
    Right,
}

/// An integral with non-zero counit value, certifying separability over the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralWitness {
    pub side: IntegralSide,
    pub t: Vec<Scalar>,
    pub eps_t: Scalar,
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra, computing the antipode. A supplied antipode
    /// must agree with the computed one.
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: Option<Matrix>) -> Result<HopfAlgebra> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::input("algebra and coalgebra dimensions differ"));
        }
        let computed = compute_antipode(&algebra, &coalgebra)?;
        if let Some(given) = antipode {
            if given != computed {
                return Err(Error::input("supplied antipode does not satisfy the antipode law"));
            }
        }
        Ok(HopfAlgebra {
            algebra,
            coalgebra,
            antipode: computed,
        })
    }

    /// Assembles without computing anything; use [`HopfAlgebra::verify`].
    pub fn from_parts(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::input("Hopf data dimensions disagree"));
        }
        Ok(HopfAlgebra {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalgebra.counit()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (a, b) in x.iter().zip(self.counit()) {
            s.add_mul(a, b);
        }
        s
    }

    pub fn comult(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, d) in out.iter_mut().zip(self.coalgebra.comult(i)) {
                o.add_mul(c, d);
            }
        }
        out
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }

    /// Replaces the algebra labels (structure constants unchanged).
    pub fn with_labels(mut self, labels: Vec<String>) -> HopfAlgebra {
        self.algebra = self.algebra.with_labels(labels);
        self
    }

    /// Bialgebra axioms: coassociativity, counit laws, multiplicativity of
    /// `Δ` and `ε`, and `Δ(1) = 1⊗1`, `ε(1) = 1`.
    pub fn verify_bialgebra(&self) -> Vec<Violation> {
        let n = self.dim();
        let f = self.field();
        let label = |i: usize| self.algebra.label(i);
        let mut out = Vec::new();
        for i in 0..n {
            let d = TensorElement::new(2, self.coalgebra.comult(i).to_vec());
            let left = self.comult_at(&d, 0);
            let right = self.comult_at(&d, 1);
            if left != right {
                out.push(Violation::new(
                    "coassociativity",
                    label(i),
                    format_vec(&left.coeffs),
                    format_vec(&right.coeffs),
                ));
            }
            let e = unit_vector(f, n, i);
            let l = self.counit_at(&d, 0).coeffs;
            if l != e {
                out.push(Violation::new("left counit", label(i), format_vec(&l), format_vec(&e)));
            }
            let r = self.counit_at(&d, 1).coeffs;
            if r != e {
                out.push(Violation::new("right counit", label(i), format_vec(&r), format_vec(&e)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ei = unit_vector(f, n, i);
                let ej = unit_vector(f, n, j);
                let prod = self.algebra.product(&ei, &ej);
                let lhs = self.comult(&prod);
                let rhs = self
                    .tensor_product(
                        &TensorElement::new(2, self.coalgebra.comult(i).to_vec()),
                        &TensorElement::new(2, self.coalgebra.comult(j).to_vec()),
                    )
                    .coeffs;
                if lhs != rhs {
                    out.push(Violation::new(
                        "comultiplication multiplicative",
                        format!("({},{})", label(i), label(j)),
                        format_vec(&lhs),
                        format_vec(&rhs),
                    ));
                }
                let el = self.eps(&prod);
                let er = &self.counit()[i] * &self.counit()[j];
                if el != er {
                    out.push(Violation::new(
                        "counit multiplicative",
                        format!("({},{})", label(i), label(j)),
                        el.to_string(),
                        er.to_string(),
                    ));
                }
            }
        }
        let d1 = self.comult(self.unit());
        let one2 = kron_vec(self.unit(), self.unit());
        if d1 != one2 {
            out.push(Violation::new(
                "comultiplication unital",
                "1",
                format_vec(&d1),
                format_vec(&one2),
            ));
        }
        let e1 = self.eps(self.unit());
        if !e1.is_one() {
            out.push(Violation::new("counit unital", "1", e1.to_string(), "1"));
        }
        out
    }

    /// `Σ S(h₁)h₂ = ε(h)1 = Σ h₁S(h₂)` on the basis.
    pub fn verify_antipode(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            let d = TensorElement::new(2, self.coalgebra.comult(i).to_vec());
            let target: Vec<Scalar> = self.unit().iter().map(|u| u * &self.counit()[i]).collect();
            let left = self.contract(&self.map_at(&d, 0, &self.antipode));
            if left != target {
                out.push(Violation::new(
                    "antipode S(h1)h2",
                    self.algebra.label(i),
                    format_vec(&left),
                    format_vec(&target),
                ));
            }
            let right = self.contract(&self.map_at(&d, 1, &self.antipode));
            if right != target {
                out.push(Violation::new(
                    "antipode h1S(h2)",
                    self.algebra.label(i),
                    format_vec(&right),
                    format_vec(&target),
                ));
            }
        }
        out
    }

    /// Algebra axioms, bialgebra axioms and the antipode law together.
    pub fn verify(&self) -> Vec<Violation> {
        let mut v = self.algebra.verify();
        v.extend(self.verify_bialgebra());
        v.extend(self.verify_antipode());
        v
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        !x.iter().all(Scalar::is_zero) && self.comult(x) == kron_vec(x, x)
    }

    /// Left or right integrals as a subspace.
    pub fn integrals(&self, side: IntegralSide) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let id = Matrix::identity(f, n);
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| {
                let e = unit_vector(f, n, i);
                let op = match side {
                    IntegralSide::Left => self.algebra.left_matrix(&e),
                    IntegralSide::Right => self.algebra.right_matrix(&e),
                };
                op.sub(&id.scale(&self.counit()[i]))
            })
            .collect();
        Matrix::vstack(f, n, &blocks).kernel()
    }

    /// An integral (left first, then right) whose counit value is non-zero.
    pub fn separability_witness(&self) -> Option<IntegralWitness> {
        for side in [IntegralSide::Left, IntegralSide::Right] {
            for t in self.integrals(side).basis_vectors() {
                let eps_t = self.eps(&t);
                if !eps_t.is_zero() {
                    return Some(IntegralWitness { side, t, eps_t });
                }
            }
        }
        None
    }

    /// Separable over the field, i.e. semisimple.
    pub fn is_separable(&self) -> bool {
        self.separability_witness().is_some()
    }

    /// The dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> Result<HopfAlgebra> {
        let n = self.dim();
        let f = self.field();
        let algebra = Algebra::from_products(f, n, self.counit().to_vec(), None, |i, j| {
            (0..n).map(|k| self.coalgebra.comult(k)[i * n + j].clone()).collect()
        })?;
        let comult = (0..n)
            .map(|k| {
                let mut d = vec![f.zero(); n * n];
                for i in 0..n {
                    for j in 0..n {
                        d[i * n + j] = self.algebra.structure_constant(i, j, k).clone();
                    }
                }
                d
            })
            .collect();
        let coalgebra = Coalgebra::new(n, comult, self.unit().to_vec())?;
        let labels = self
            .algebra
            .labels()
            .map(|l| l.iter().map(|s| format!("{s}*")).collect());
        let algebra = match labels {
            Some(l) => algebra.with_labels(l),
            None => algebra,
        };
        HopfAlgebra::from_parts(algebra, coalgebra, self.antipode.transpose())
    }

    pub fn is_cosemisimple(&self) -> Result<bool> {
        Ok(self.dual()?.is_separable())
    }

    pub fn antipode_is_bijective(&self) -> bool {
        self.antipode.rank() == self.dim()
    }

    // ---- tensor powers ----

    pub fn tensor_one(&self, arity: usize) -> TensorElement {
        let mut v = self.unit().to_vec();
        for _ in 1..arity {
            v = kron_vec(&v, self.unit());
        }
        TensorElement::new(arity, v)
    }

    fn check_tensor(&self, x: &TensorElement, arity: usize) -> Result<()> {
        if x.arity != arity || x.coeffs.len() != self.dim().pow(arity as u32) {
            return Err(Error::input(format!(
                "tensor of arity {} with {} coefficients does not live in H^(x{arity})",
                x.arity,
                x.coeffs.len()
            )));
        }
        Ok(())
    }

    /// Componentwise product in `H^{⊗k}`.
    pub fn tensor_mul(&self, arity: usize, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        self.check_tensor(x, arity)?;
        self.check_tensor(y, arity)?;
        Ok(self.tensor_product(x, y))
    }

    pub(crate) fn tensor_product(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let n = self.dim();
        let k = x.arity;
        let mut out = vec![self.field().zero(); x.coeffs.len()];
        for (ix, a) in x.support() {
            let dx = digits_of(ix, n, k);
            for (iy, b) in y.support() {
                let dy = digits_of(iy, n, k);
                let factors: Vec<&[(usize, Scalar)]> =
                    (0..k).map(|p| self.algebra.basis_product(dx[p], dy[p])).collect();
                if factors.iter().any(|f| f.is_empty()) {
                    continue;
                }
                let ab = a * b;
                expand_product(&factors, 0, 0, ab, n, &mut out);
            }
        }
        TensorElement::new(k, out)
    }

    /// Two-sided inverse in `H^{⊗k}`, solved exactly and checked on both sides.
    pub fn tensor_invert(&self, arity: usize, x: &TensorElement) -> Result<TensorElement> {
        self.check_tensor(x, arity)?;
        let size = x.coeffs.len();
        let f = self.field();
        let cols: Vec<Vec<Scalar>> = (0..size)
            .map(|b| {
                self.tensor_product(x, &TensorElement::new(arity, unit_vector(f, size, b)))
                    .coeffs
            })
            .collect();
        let lx = Matrix::from_columns(f, size, &cols);
        let one = self.tensor_one(arity);
        let y = lx.solve(&one.coeffs)?.ok_or(Error::NotInvertible)?;
        let y = TensorElement::new(arity, y);
        if self.tensor_product(&y, x) != one {
            return Err(Error::NotInvertible);
        }
        Ok(y)
    }

    /// Applies `Δ` to tensor position `pos` (arity grows by one).
    pub fn comult_at(&self, x: &TensorElement, pos: usize) -> TensorElement {
        let n = self.dim();
        self.replace_at(x, pos, 2, |i| self.coalgebra.comult(i).to_vec(), n)
    }

    /// Applies `ε` to tensor position `pos` (arity shrinks by one).
    pub fn counit_at(&self, x: &TensorElement, pos: usize) -> TensorElement {
        let n = self.dim();
        self.replace_at(x, pos, 0, |i| vec![self.counit()[i].clone()], n)
    }

    /// Inserts `1` as a new tensor factor at position `pos`.
    pub fn insert_unit_at(&self, x: &TensorElement, pos: usize) -> TensorElement {
        let n = self.dim();
        let f = self.field();
        let k = x.arity;
        let mut out = vec![f.zero(); n.pow(k as u32 + 1)];
        for (ix, a) in x.support() {
            let d = digits_of(ix, n, k);
            for (u, c) in self.unit().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut nd = d.clone();
                nd.insert(pos, u);
                out[flat_index(&nd, n)].add_mul(a, c);
            }
        }
        TensorElement::new(k + 1, out)
    }

    /// Applies a linear map `H → H` to position `pos`.
    pub fn map_at(&self, x: &TensorElement, pos: usize, m: &Matrix) -> TensorElement {
        let n = self.dim();
        self.replace_at(x, pos, 1, |i| m.column(i), n)
    }

    /// The flip `τ(a⊗b) = b⊗a`.
    pub fn flip(&self, x: &TensorElement) -> TensorElement {
        assert_eq!(x.arity, 2);
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (ix, a) in x.support() {
            out[(ix % n) * n + ix / n] = a.clone();
        }
        TensorElement::new(2, out)
    }

    /// Multiplies the factors of a tensor of arity 2 together.
    pub fn contract(&self, x: &TensorElement) -> Vec<Scalar> {
        assert_eq!(x.arity, 2);
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for (ix, a) in x.support() {
            for (k, c) in self.algebra.basis_product(ix / n, ix % n) {
                out[*k].add_mul(a, c);
            }
        }
        out
    }

    /// Replaces the factor at `pos` by the arity-`width` tensor `f(i)`.
    fn replace_at(
        &self,
        x: &TensorElement,
        pos: usize,
        width: usize,
        f: impl Fn(usize) -> Vec<Scalar>,
        n: usize,
    ) -> TensorElement {
        let k = x.arity;
        assert!(pos < k, "tensor position out of range");
        let new_arity = k - 1 + width;
        let mut out = vec![self.field().zero(); n.pow(new_arity as u32)];
        for (ix, a) in x.support() {
            let d = digits_of(ix, n, k);
            let img = f(d[pos]);
            for (j, c) in img.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut nd: Vec<usize> = d[..pos].to_vec();
                nd.extend(digits_of(j, n, width));
                nd.extend_from_slice(&d[pos + 1..]);
                out[flat_index(&nd, n)].add_mul(a, c);
            }
        }
        TensorElement::new(new_arity, out)
    }
}

fn expand_product(factors: &[&[(usize, Scalar)]], pos: usize, idx: usize, coeff: Scalar, n: usize, out: &mut [Scalar]) {
    if pos == factors.len() {
        out[idx] += &coeff;
        return;
    }
    for (k, c) in factors[pos] {
        expand_product(factors, pos + 1, idx * n + k, &coeff * c, n, out);
    }
}

/// Solves the convolution identities for the unique antipode.
pub fn compute_antipode(algebra: &Algebra, coalgebra: &Coalgebra) -> Result<Matrix> {
    let n = algebra.dim();
    let f = algebra.field();
    // unknown s[k][a] at column k * n + a; rows (i, m) for both identities
    let mut sys = Matrix::zeros(f, 2 * n * n, n * n);
    let mut rhs = vec![f.zero(); 2 * n * n];
    for i in 0..n {
        let d = coalgebra.comult(i);
        for (ab, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for k in 0..n {
                // S(e_a) e_b
                for (m, s) in algebra.basis_product(k, b) {
                    let row = i * n + m;
                    let mut v = sys.get(row, k * n + a).clone();
                    v.add_mul(c, s);
                    sys.set(row, k * n + a, v);
                }
                // e_a S(e_b)
                for (m, s) in algebra.basis_product(a, k) {
                    let row = n * n + i * n + m;
                    let mut v = sys.get(row, k * n + b).clone();
                    v.add_mul(c, s);
                    sys.set(row, k * n + b, v);
                }
            }
        }
        for m in 0..n {
            let t = &coalgebra.counit()[i] * &algebra.unit()[m];
            rhs[i * n + m] = t.clone();
            rhs[n * n + i * n + m] = t;
        }
    }
    let sol = sys.solve(&rhs)?.ok_or(Error::NoAntipode)?;
    Matrix::from_vec(f, n, n, sol)
}
