//! Finite-dimensional associative unital algebras given by structure constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{format_vec, is_zero_vec, unit_vector, Matrix, Subspace};
use crate::random::{self, SeededRng};
use crate::report::Violation;

/// Which multiplications an ideal (or a regular representation) refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// An algebra with basis `e_0 … e_{n-1}` and `e_i e_j = Σ_k mult[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    labels: Option<Vec<String>>,
    sparse: Vec<Vec<(usize, Scalar)>>,
}

/// A subspace together with the multiplications it is claimed to absorb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub space: Subspace,
    pub side: Side,
}

impl Algebra {
    /// Wraps dense structure constants (`mult` has `dim³` entries, indexed
    /// `(i * dim + j) * dim + k`). Axioms are checked by [`Algebra::verify`].
    pub fn new(
        field: Field,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Algebra> {
        if mult.len() != dim * dim * dim {
            return Err(Error::input(format!(
                "structure constants have {} entries, expected {}",
                mult.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::input(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(Error::input(format!("{} labels for dimension {dim}", l.len())));
            }
        }
        if let Some(bad) = mult.iter().chain(&unit).find(|s| !field.owns(s)) {
            return Err(Error::input(format!("scalar {bad} is not in {field}")));
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &mult[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra {
            field,
            dim,
            mult,
            unit,
            labels,
            sparse,
        })
    }

    /// Builds an algebra from a closure returning `e_i e_j` as a coordinate vector.
    pub fn from_products(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Algebra> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::input(format!("product e_{i} e_{j} has wrong length")));
                }
                mult.extend(p);
            }
        }
        Algebra::new(field, dim, mult, unit, labels)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.mult
    }

    /// Non-zero terms of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field, self.dim, i)
    }

    fn check_element(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::input(format!(
                "element has length {}, algebra has dimension {}",
                x.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Bilinear product of two elements.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.product(x, y))
    }

    /// Product without dimension checks (callers guarantee lengths).
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    /// Lists every failing associativity triple and unit law.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(&self.basis_element(i), &self.basis_element(j));
                for k in 0..n {
                    let ek = self.basis_element(k);
                    let lhs = self.product(&ij, &ek);
                    let jk = self.product(&self.basis_element(j), &ek);
                    let rhs = self.product(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "associativity",
                            format!("({},{},{})", self.label(i), self.label(j), self.label(k)),
                            format_vec(&lhs),
                            format_vec(&rhs),
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_element(i);
            let left = self.product(&self.unit, &e);
            if left != e {
                out.push(Violation::new(
                    "left unit",
                    self.label(i),
                    format_vec(&left),
                    format_vec(&e),
                ));
            }
            let right = self.product(&e, &self.unit);
            if right != e {
                out.push(Violation::new(
                    "right unit",
                    self.label(i),
                    format_vec(&right),
                    format_vec(&e),
                ));
            }
        }
        out
    }

    /// Matrix of `L_x` (`y ↦ xy`).
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(x, &self.basis_element(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `R_x` (`y ↦ yx`).
    pub fn right_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(&self.basis_element(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn regular_representation(&self, x: &[Scalar], side: Side) -> Result<Matrix> {
        self.check_element(x)?;
        match side {
            Side::Left => Ok(self.left_matrix(x)),
            Side::Right => Ok(self.right_matrix(x)),
            Side::TwoSided => Err(Error::input("regular representation needs a side")),
        }
    }

    /// `L_{e_i}` for every basis element.
    pub fn left_basis_ops(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.left_matrix(&self.basis_element(i)))
            .collect()
    }

    pub fn right_basis_ops(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.right_matrix(&self.basis_element(i)))
            .collect()
    }

    /// The multiplication operators an ideal of the given side must absorb.
    pub fn ideal_ops(&self, side: Side) -> Vec<Matrix> {
        match side {
            Side::Left => self.left_basis_ops(),
            Side::Right => self.right_basis_ops(),
            Side::TwoSided => {
                let mut ops = self.left_basis_ops();
                ops.extend(self.right_basis_ops());
                ops
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `Z(A) = {x : xy = yx ∀y}`.
    pub fn center(&self) -> Subspace {
        let blocks: Vec<Matrix> = (0..self.dim)
            .map(|j| {
                let e = self.basis_element(j);
                self.right_matrix(&e).sub(&self.left_matrix(&e))
            })
            .collect();
        Matrix::vstack(self.field, self.dim, &blocks).kernel()
    }

    /// Gram matrix of `(x, y) ↦ trace(L_x L_y)` on the basis.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim;
        // trace(L_{e_i} L_{e_j}) = trace(L_{e_i e_j}) = Σ_k c_ij^k trace(L_{e_k})
        let traces: Vec<Scalar> = (0..n)
            .map(|k| {
                let mut t = self.field.zero();
                for j in 0..n {
                    t += self.structure_constant(k, j, j);
                }
                t
            })
            .collect();
        let mut g = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = self.field.zero();
                for (k, c) in self.basis_product(i, j) {
                    s.add_mul(c, &traces[*k]);
                }
                g.set(i, j, s);
            }
        }
        g
    }

    /// The Jacobson radical (largest nilpotent two-sided ideal).
    ///
    /// Uses the trace-form criterion over `Q` or `F_p` with `p > dim`, and an
    /// exhaustive search over all elements when `p^dim <= 4096`.
    pub fn jacobson_radical(&self) -> Result<Subspace> {
        match self.field {
            Field::Rational => Ok(self.trace_form().kernel()),
            Field::Prime { p } if p > self.dim as u64 => Ok(self.trace_form().kernel()),
            Field::Prime { p } => {
                if !fallback_supported(p, self.dim) {
                    return Err(Error::UnsupportedCharacteristic { p, dim: self.dim });
                }
                let vectors = all_vectors(self.field, self.dim);
                self.nilpotent_ideal_search(vectors)
            }
        }
    }

    /// Sum of the two-sided ideals generated by those candidates whose ideal
    /// is nilpotent. Over a finite field with every element as a candidate
    /// this is exactly the radical.
    pub fn nilpotent_ideal_search(&self, candidates: impl IntoIterator<Item = Vec<Scalar>>) -> Result<Subspace> {
        let ops = self.ideal_ops(Side::TwoSided);
        let mut acc = Subspace::zero(self.field, self.dim);
        for v in candidates {
            if is_zero_vec(&v) || acc.contains(&v) {
                continue;
            }
            let ideal = operator_closure(self.dim, &Subspace::span(self.field, self.dim, &[v]), &ops)?;
            if self.nilpotency_index(&ideal).is_some() {
                acc = acc.sum(&ideal)?;
            }
        }
        Ok(acc)
    }

    pub fn is_semiprime(&self) -> Result<bool> {
        Ok(self.jacobson_radical()?.is_zero())
    }

    /// `span{xy : x ∈ u, y ∈ v}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                vecs.push(self.product(&x, &y));
            }
        }
        Subspace::span(self.field, self.dim, &vecs)
    }

    /// Smallest `k` with `I^k = 0`, or `None` when the powers stabilise first.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Option<usize> {
        if ideal.is_zero() {
            return Some(1);
        }
        let mut power = ideal.clone();
        for k in 2..=self.dim + 1 {
            let next = self.product_space(&power, ideal);
            if next.is_zero() {
                return Some(k);
            }
            if next == power {
                return None;
            }
            power = next;
        }
        None
    }

    /// Checks that `space` absorbs the multiplications named by `side`.
    pub fn is_ideal(&self, space: &Subspace, side: Side) -> bool {
        self.ideal_ops(side)
            .iter()
            .all(|op| space.image(op).is_subspace_of(space))
    }

    pub fn ideal(&self, space: Subspace, side: Side) -> Result<IdealBasis> {
        if space.ambient_dim() != self.dim {
            return Err(Error::input("ideal lives in a different ambient space"));
        }
        if !self.is_ideal(&space, side) {
            return Err(Error::input(format!("subspace is not a {side:?} ideal")));
        }
        Ok(IdealBasis { space, side })
    }

    /// `{x : x v = 0 for every v in the ideal}`.
    pub fn left_annihilator(&self, ideal: &IdealBasis) -> Subspace {
        self.left_annihilator_of(&ideal.space)
    }

    pub fn left_annihilator_of(&self, space: &Subspace) -> Subspace {
        if space.is_zero() {
            return Subspace::full(self.field, self.dim);
        }
        let blocks: Vec<Matrix> = space.basis_vectors().iter().map(|v| self.right_matrix(v)).collect();
        Matrix::vstack(self.field, self.dim, &blocks).kernel()
    }

    /// Whether `sub` is a subalgebra containing the unit.
    pub fn is_unital_subalgebra(&self, sub: &Subspace) -> bool {
        sub.contains(&self.unit) && self.product_space(sub, sub).is_subspace_of(sub)
    }

    /// Structure constants of a unital subalgebra in the coordinates of its
    /// canonical basis.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<Algebra> {
        if !self.is_unital_subalgebra(sub) {
            return Err(Error::input("subspace is not a unital subalgebra"));
        }
        let basis = sub.basis_vectors();
        let coords = sub.basis().transpose();
        let solve = |v: &[Scalar]| -> Result<Vec<Scalar>> {
            coords
                .solve(v)?
                .ok_or_else(|| Error::internal("product escaped the subalgebra"))
        };
        let k = basis.len();
        let mut mult = Vec::with_capacity(k * k * k);
        for x in &basis {
            for y in &basis {
                mult.extend(solve(&self.product(x, y))?);
            }
        }
        let unit = solve(&self.unit)?;
        Algebra::new(self.field, k, mult, unit, None)
    }

    /// The quotient by a two-sided ideal, on the standard basis vectors that
    /// are not pivots of the ideal's canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Algebra> {
        if !self.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::input("quotient needs a two-sided ideal"));
        }
        let (_, pivots) = ideal.basis().rref_with_pivots();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let reduce = |v: &[Scalar]| -> Vec<Scalar> {
            let mut v = v.to_vec();
            for (row, &pc) in pivots.iter().enumerate() {
                if v[pc].is_zero() {
                    continue;
                }
                let f = v[pc].clone();
                let r = ideal.basis().row(row);
                for (c, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        v[c] -= &(&f * x);
                    }
                }
            }
            keep.iter().map(|&c| v[c].clone()).collect()
        };
        let k = keep.len();
        let mut mult = Vec::with_capacity(k * k * k);
        for &i in &keep {
            for &j in &keep {
                mult.extend(reduce(&self.product(&self.basis_element(i), &self.basis_element(j))));
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&i| l[i].clone()).collect());
        Algebra::new(self.field, k, mult, reduce(&self.unit), labels)
    }

    /// Probes von Neumann regularity of a commutative unital subalgebra: every
    /// spanning vector and `samples` random elements `x` must admit `y` in
    /// `sub` with `xyx = x`. The structural route (sub semiprime) is computed
    /// alongside.
    pub fn von_neumann_regular_check(&self, sub: &Subspace, samples: usize, seed: u64) -> Result<RegularityReport> {
        if !self.is_unital_subalgebra(sub) {
            return Err(Error::input("subspace is not a unital subalgebra"));
        }
        let basis = sub.basis_vectors();
        for x in &basis {
            for y in &basis {
                if self.product(x, y) != self.product(y, x) {
                    return Err(Error::input("subalgebra is not commutative"));
                }
            }
        }
        let mut rng: SeededRng = random::rng(seed);
        let mut probes = basis.clone();
        for _ in 0..samples {
            let c = random::dense_vector(self.field, basis.len(), 3, &mut rng);
            let mut x = self.zero_element();
            for (ci, b) in c.iter().zip(&basis) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    xi.add_mul(ci, bi);
                }
            }
            probes.push(x);
        }
        let mut failures = Vec::new();
        for x in &probes {
            // x (Σ c_k b_k) x = x
            let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| self.product(&self.product(x, b), x)).collect();
            let m = Matrix::from_columns(self.field, self.dim, &cols);
            if m.solve(x)?.is_none() {
                failures.push(x.clone());
            }
        }
        let regular = failures.is_empty();
        let semiprime = self.subalgebra(sub)?.is_semiprime()?;
        Ok(RegularityReport {
            regular,
            semiprime,
            probes: probes.len(),
            failures,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// Every probe had a quasi-inverse.
    pub regular: bool,
    /// The subalgebra has zero radical.
    pub semiprime: bool,
    pub probes: usize,
    pub failures: Vec<Vec<Scalar>>,
}

impl RegularityReport {
    pub fn routes_agree(&self) -> bool {
        self.regular == self.semiprime
    }
}

/// Whether the exhaustive radical search is admissible for `F_p^dim`.
pub fn fallback_supported(p: u64, dim: usize) -> bool {
    let mut size: u64 = 1;
    for _ in 0..dim {
        size = size.saturating_mul(p);
        if size > 4096 {
            return false;
        }
    }
    true
}

/// Every vector of `F_p^n` in lexicographic order.
pub fn all_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let p = field.characteristic() as i64;
    assert!(p > 0, "enumeration needs a finite field");
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![field.zero(); n];
            for slot in v.iter_mut().rev() {
                *slot = field.from_i64((idx % p as usize) as i64);
                idx /= p as usize;
            }
            v
        })
        .collect()
}

/// Smallest subspace containing `seed` and stable under every operator.
pub fn operator_closure(ambient: usize, seed: &Subspace, ops: &[Matrix]) -> Result<Subspace> {
    if seed.ambient_dim() != ambient || ops.iter().any(|m| m.rows() != ambient || m.cols() != ambient) {
        return Err(Error::input("operator closure: dimension mismatch"));
    }
    let mut current = seed.clone();
    for _ in 0..=ambient + 1 {
        let mut next = current.clone();
        for op in ops {
            next = next.sum(&current.image(op))?;
        }
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::internal("operator closure did not reach a fixed point"))
}

/// Largest subspace of `container` mapped into itself by every operator.
pub fn largest_stable_subspace(container: &Subspace, ops: &[Matrix]) -> Result<Subspace> {
    let ambient = container.ambient_dim();
    if ops.iter().any(|m| m.rows() != ambient || m.cols() != ambient) {
        return Err(Error::input("stable subspace: dimension mismatch"));
    }
    let mut current = container.clone();
    for _ in 0..=ambient + 1 {
        if current.is_zero() {
            return Ok(current);
        }
        let eq = current.equations();
        let mut blocks = vec![eq.clone()];
        blocks.extend(ops.iter().map(|op| eq.mul(op)));
        let next = Matrix::vstack(current.field(), ambient, &blocks).kernel();
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::internal("stable subspace iteration did not reach a fixed point"))
}

/// `x - y` rendered for violation reports.
#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    /// Q[C2] on basis {1, g}.
    fn qc2(field: Field) -> Algebra {
        Algebra::from_products(field, 2, unit_vector(field, 2, 0), None, |i, j| {
            unit_vector(field, 2, (i + j) % 2)
        })
        .unwrap()
    }

    /// Q[x]/(x^2) on basis {1, x}.
    fn dual_numbers() -> Algebra {
        Algebra::from_products(q(), 2, unit_vector(q(), 2, 0), None, |i, j| {
            if i + j >= 2 {
                vec![q().zero(), q().zero()]
            } else {
                unit_vector(q(), 2, i + j)
            }
        })
        .unwrap()
    }

    /// Q^n with coordinatewise multiplication.
    fn diagonal(n: usize) -> Algebra {
        Algebra::from_products(q(), n, vec![q().one(); n], None, |i, j| {
            if i == j {
                unit_vector(q(), n, i)
            } else {
                vec![q().zero(); n]
            }
        })
        .unwrap()
    }

    fn matrix_algebra_2() -> Algebra {
        // basis E11, E12, E21, E22 ; E_ab E_cd = δ_bc E_ad
        let idx = |a: usize, b: usize| a * 2 + b;
        Algebra::from_products(
            q(),
            4,
            {
                let mut u = vec![q().zero(); 4];
                u[idx(0, 0)] = q().one();
                u[idx(1, 1)] = q().one();
                u
            },
            None,
            |i, j| {
                let (a, b) = (i / 2, i % 2);
                let (c, d) = (j / 2, j % 2);
                if b == c {
                    unit_vector(q(), 4, idx(a, d))
                } else {
                    vec![q().zero(); 4]
                }
            },
        )
        .unwrap()
    }

    #[test]
    fn verify_examples() {
        assert!(qc2(q()).verify().is_empty());
        let one = Algebra::new(q(), 1, vec![q().one()], vec![q().one()], None).unwrap();
        assert!(one.verify().is_empty());
        // e1 e1 = e2 with junk products involving e2
        let junk = Algebra::from_products(q(), 3, unit_vector(q(), 3, 0), None, |i, j| match (i, j) {
            (0, k) | (k, 0) => unit_vector(q(), 3, k),
            (1, 1) => unit_vector(q(), 3, 2),
            (2, 1) => vec![q().from_i64(1), q().from_i64(-1), q().from_i64(2)],
            (1, 2) => vec![q().zero(), q().one(), q().zero()],
            _ => vec![q().from_i64(3), q().zero(), q().one()],
        })
        .unwrap();
        assert!(!junk.verify().is_empty());
    }

    #[test]
    fn mul_examples() {
        let a = qc2(q());
        let g = a.basis_element(1);
        assert_eq!(a.mul(&g, &g).unwrap(), a.basis_element(0));
        let x = vec![q().frac(1, 3), q().from_i64(-2)];
        assert_eq!(a.mul(a.unit(), &x).unwrap(), x);
        let d = dual_numbers();
        assert_eq!(
            d.mul(&d.basis_element(1), &d.basis_element(1)).unwrap(),
            d.zero_element()
        );
        assert!(a.mul(&[q().one()], &g).is_err());
    }

    #[test]
    fn regular_representation_examples() {
        let a = qc2(q());
        assert_eq!(a.left_matrix(a.unit()), Matrix::identity(q(), 2));
        assert_eq!(
            a.left_matrix(&a.basis_element(1)),
            Matrix::from_i64(q(), &[&[0, 1], &[1, 0]])
        );
        let m = matrix_algebra_2();
        let x = vec![q().from_i64(1), q().from_i64(2), q().from_i64(-1), q().from_i64(3)];
        let y = vec![q().from_i64(0), q().frac(1, 2), q().from_i64(4), q().from_i64(1)];
        let xy = m.product(&x, &y);
        assert_eq!(m.left_matrix(&xy), m.left_matrix(&x).mul(&m.left_matrix(&y)));
        assert_eq!(m.right_matrix(&xy), m.right_matrix(&y).mul(&m.right_matrix(&x)));
    }

    #[test]
    fn radical_examples() {
        assert!(qc2(q()).jacobson_radical().unwrap().is_zero());
        let d = dual_numbers();
        let rad = d.jacobson_radical().unwrap();
        assert_eq!(rad, Subspace::span(q(), 2, &[d.basis_element(1)]));
        let f2 = Field::prime(2).unwrap();
        let rad2 = qc2(f2).jacobson_radical().unwrap();
        assert_eq!(rad2.dim(), 1);
        assert!(rad2.contains(&[f2.one(), f2.one()]));
        assert!(qc2(q()).is_semiprime().unwrap());
        assert!(!d.is_semiprime().unwrap());
        assert!(!qc2(f2).is_semiprime().unwrap());
    }

    #[test]
    fn exhaustive_search_agrees_with_trace_form_for_large_p() {
        let f3 = Field::prime(3).unwrap();
        let a = qc2(f3);
        let exhaustive = a.nilpotent_ideal_search(all_vectors(f3, 2)).unwrap();
        assert_eq!(exhaustive, a.jacobson_radical().unwrap());
        assert!(exhaustive.is_zero());
    }

    #[test]
    fn unsupported_characteristic() {
        let f2 = Field::prime(2).unwrap();
        let n = 13;
        let a = Algebra::from_products(f2, n, vec![f2.one(); n], None, |i, j| {
            if i == j {
                unit_vector(f2, n, i)
            } else {
                vec![f2.zero(); n]
            }
        })
        .unwrap();
        assert_eq!(
            a.jacobson_radical(),
            Err(Error::UnsupportedCharacteristic { p: 2, dim: 13 })
        );
    }

    #[test]
    fn closure_examples() {
        let a = diagonal(3);
        assert!(operator_closure(3, &Subspace::zero(q(), 3), &a.left_basis_ops())
            .unwrap()
            .is_zero());
        assert!(operator_closure(3, &Subspace::full(q(), 3), &a.left_basis_ops())
            .unwrap()
            .is_full());
        let swap = Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let mut ops = a.ideal_ops(Side::TwoSided);
        ops.push(swap);
        let seed = Subspace::span(q(), 3, &[a.basis_element(0)]);
        let closed = operator_closure(3, &seed, &ops).unwrap();
        assert_eq!(
            closed,
            Subspace::span(q(), 3, &[a.basis_element(0), a.basis_element(1)])
        );
    }

    #[test]
    fn stable_subspace_examples() {
        assert!(largest_stable_subspace(&Subspace::zero(q(), 2), &[]).unwrap().is_zero());
        let c = Subspace::span(q(), 2, &[vec![q().one(), q().from_i64(3)]]);
        assert_eq!(largest_stable_subspace(&c, &[]).unwrap(), c);
        let f2 = Field::prime(2).unwrap();
        let a = qc2(f2);
        let c = Subspace::span(f2, 2, &[vec![f2.one(), f2.one()]]);
        assert_eq!(largest_stable_subspace(&c, &a.ideal_ops(Side::TwoSided)).unwrap(), c);
    }

    #[test]
    fn annihilator_examples() {
        let a = diagonal(3);
        let full = a.ideal(Subspace::full(q(), 3), Side::TwoSided).unwrap();
        assert!(a.left_annihilator(&full).is_zero());
        let i = a
            .ideal(
                Subspace::span(q(), 3, &[a.basis_element(0), a.basis_element(1)]),
                Side::TwoSided,
            )
            .unwrap();
        assert_eq!(a.left_annihilator(&i), Subspace::span(q(), 3, &[a.basis_element(2)]));
        let zero = a.ideal(Subspace::zero(q(), 3), Side::TwoSided).unwrap();
        assert!(a.left_annihilator(&zero).is_full());
    }

    #[test]
    fn center_examples() {
        assert!(diagonal(3).center().is_full());
        let m = matrix_algebra_2();
        let z = m.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(m.unit()));
    }

    #[test]
    fn regularity_examples() {
        let a = diagonal(2);
        let scalars = Subspace::span(q(), 2, &[a.unit().to_vec()]);
        let r = a.von_neumann_regular_check(&scalars, 5, 1).unwrap();
        assert!(r.regular && r.semiprime);
        let r = a.von_neumann_regular_check(&Subspace::full(q(), 2), 5, 1).unwrap();
        assert!(r.regular && r.semiprime);
        let d = dual_numbers();
        let r = d.von_neumann_regular_check(&Subspace::full(q(), 2), 5, 1).unwrap();
        assert!(!r.regular && !r.semiprime);
        assert!(r.failures.contains(&d.basis_element(1)));
        let m = matrix_algebra_2();
        assert!(m.von_neumann_regular_check(&Subspace::full(q(), 4), 1, 1).is_err());
    }

    #[test]
    fn quotient_by_radical_is_semiprime() {
        let d = dual_numbers();
        let rad = d.jacobson_radical().unwrap();
        let quo = d.quotient(&rad).unwrap();
        assert_eq!(quo.dim(), 1);
        assert!(quo.verify().is_empty());
        assert!(quo.is_semiprime().unwrap());
    }

    #[test]
    fn nilpotency_index_of_radical() {
        let d = dual_numbers();
        assert_eq!(d.nilpotency_index(&d.jacobson_radical().unwrap()), Some(2));
        assert_eq!(d.nilpotency_index(&Subspace::full(q(), 2)), None);
    }
}
