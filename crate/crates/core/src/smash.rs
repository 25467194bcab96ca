//! The smash product `A#H`, its separability idempotent and the theorem
//! checks that run on it.

use serde_json::json;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::IntegralSide;
use crate::linalg::{format_vec, unit_vector, Matrix, Subspace};
use crate::module_algebra::HModuleAlgebra;
use crate::report::{Report, Violation};

/// `A#H` on the basis `a_i#h_j`, index `i*m + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashProduct {
    base: HModuleAlgebra,
    algebra: Algebra,
    embed_a: Matrix,
    embed_h: Matrix,
}

impl SmashProduct {
    /// Structure constants from `(a#h)(b#g) = Σ a(h₁·b) # h₂g`.
    #[allow(clippy::needless_range_loop)]
    pub fn build(ma: HModuleAlgebra) -> Result<SmashProduct> {
        let f = ma.field();
        let (n, m) = (ma.algebra().dim(), ma.hopf().dim());
        let a = ma.algebra();
        let h = ma.hopf().algebra();
        // images h_x · a_k
        let acted: Vec<Vec<Vec<Scalar>>> = (0..m)
            .map(|x| (0..n).map(|k| ma.action()[x].column(k)).collect())
            .collect();
        let dim = n * m;
        let mut mult = vec![f.zero(); dim * dim * dim];
        for i in 0..n {
            for j in 0..m {
                let delta = ma.hopf().coalgebra().comult(j);
                let terms: Vec<(usize, usize, &Scalar)> = delta
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(xy, c)| (xy / m, xy % m, c))
                    .collect();
                for k in 0..n {
                    // a_i (h_x · a_k) for each term h_x ⊗ h_y of Δ(h_j)
                    let lefts: Vec<(usize, &Scalar, Vec<Scalar>)> = terms
                        .iter()
                        .map(|&(x, y, c)| (y, c, a.product(&a.basis_element(i), &acted[x][k])))
                        .collect();
                    for l in 0..m {
                        let row = ((i * m + j) * dim + k * m + l) * dim;
                        for (y, c, left) in &lefts {
                            for (p, lp) in left.iter().enumerate() {
                                if lp.is_zero() {
                                    continue;
                                }
                                let coeff = *c * lp;
                                for (q, hq) in h.basis_product(*y, l) {
                                    mult[row + p * m + q].add_mul(&coeff, hq);
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit: Vec<Scalar> = crate::linalg::kron_vec(a.unit(), h.unit());
        let labels = (0..dim)
            .map(|k| format!("{}#{}", a.label(k / m), h.label(k % m)))
            .collect();
        let algebra = Algebra::new(f, dim, mult, unit, Some(labels))?;
        let embed_a = Matrix::from_columns(
            f,
            dim,
            &(0..n)
                .map(|i| crate::linalg::kron_vec(&a.basis_element(i), h.unit()))
                .collect::<Vec<_>>(),
        );
        let embed_h = Matrix::from_columns(
            f,
            dim,
            &(0..m)
                .map(|j| crate::linalg::kron_vec(a.unit(), &h.basis_element(j)))
                .collect::<Vec<_>>(),
        );
        Ok(SmashProduct {
            base: ma,
            algebra,
            embed_a,
            embed_h,
        })
    }

    pub fn base(&self) -> &HModuleAlgebra {
        &self.base
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn embed_a(&self) -> &Matrix {
        &self.embed_a
    }

    pub fn embed_h(&self) -> &Matrix {
        &self.embed_h
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    fn a_dim(&self) -> usize {
        self.base.algebra().dim()
    }

    fn h_dim(&self) -> usize {
        self.base.hopf().dim()
    }

    /// `a # h` for arbitrary `a ∈ A`, `h ∈ H`.
    pub fn pure(&self, a: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        crate::linalg::kron_vec(a, h)
    }

    /// Algebra axioms of `A#H`, the embeddings and `(a#1)(1#h) = a#h`.
    pub fn verify(&self) -> Vec<Violation> {
        let mut out = self.algebra.verify();
        let (n, m) = (self.a_dim(), self.h_dim());
        let f = self.field();
        let a = self.base.algebra();
        let h = self.base.hopf().algebra();
        for i in 0..n {
            for k in 0..n {
                let lhs = self.algebra.product(&self.embed_a.column(i), &self.embed_a.column(k));
                let rhs = self
                    .embed_a
                    .mul_vec(&a.product(&a.basis_element(i), &a.basis_element(k)));
                if lhs != rhs {
                    out.push(Violation::new(
                        "A embedding",
                        format!("({},{})", a.label(i), a.label(k)),
                        format_vec(&lhs),
                        format_vec(&rhs),
                    ));
                }
            }
        }
        for j in 0..m {
            for l in 0..m {
                let lhs = self.algebra.product(&self.embed_h.column(j), &self.embed_h.column(l));
                let rhs = self
                    .embed_h
                    .mul_vec(&h.product(&h.basis_element(j), &h.basis_element(l)));
                if lhs != rhs {
                    out.push(Violation::new(
                        "H embedding",
                        format!("({},{})", h.label(j), h.label(l)),
                        format_vec(&lhs),
                        format_vec(&rhs),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..m {
                let lhs = self.algebra.product(&self.embed_a.column(i), &self.embed_h.column(j));
                let rhs = unit_vector(f, n * m, i * m + j);
                if lhs != rhs {
                    out.push(Violation::new(
                        "(a#1)(1#h) = a#h",
                        format!("{}#{}", a.label(i), h.label(j)),
                        format_vec(&lhs),
                        format_vec(&rhs),
                    ));
                }
            }
        }
        out
    }

    pub fn radical(&self) -> Result<Subspace> {
        self.algebra.jacobson_radical()
    }

    pub fn is_semiprime(&self) -> Result<bool> {
        self.algebra.is_semiprime()
    }

    /// The quotient `(A#H) ⊗_A (A#H)` in normal form.
    pub fn bimodule_tensor(&self) -> BimoduleTensor<'_> {
        BimoduleTensor { smash: self }
    }

    /// `ω = Σ (1#S(t₁)) ⊗ (z#t₂)` for a right integral `t` with `ε(t) ≠ 0`
    /// and `z = ε(t)⁻¹ 1_A`; a left integral `t` is replaced by `S(t)`.
    pub fn separability_idempotent(&self) -> Result<Vec<Scalar>> {
        let hopf = self.base.hopf();
        let w = hopf.separability_witness().ok_or(Error::NoSeparabilityWitness)?;
        let t = match w.side {
            IntegralSide::Right => w.t,
            IntegralSide::Left => hopf.apply_antipode(&w.t),
        };
        let inv = w.eps_t.inv().ok_or_else(|| Error::internal("ε(t) not invertible"))?;
        let z: Vec<Scalar> = self.base.algebra().unit().iter().map(|u| u * &inv).collect();
        let m = self.h_dim();
        let delta = hopf.comult(&t);
        let one_a = self.base.algebra().unit().to_vec();
        let bt = self.bimodule_tensor();
        let mut omega = vec![self.field().zero(); bt.dim()];
        for (xy, c) in delta.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s_t1 = hopf.apply_antipode(&unit_vector(self.field(), m, xy / m));
            let left = self.pure(&one_a, &s_t1);
            let right = self.pure(&z, &unit_vector(self.field(), m, xy % m));
            for (o, v) in omega.iter_mut().zip(&bt.project_pure(&left, &right)) {
                o.add_mul(c, v);
            }
        }
        Ok(omega)
    }

    /// Checks `μ̄(ω) = 1#1` and that `ω` commutes with every `a#1` and `1#h`.
    pub fn verify_separability(&self, omega: &[Scalar]) -> Vec<Violation> {
        let bt = self.bimodule_tensor();
        let mut out = Vec::new();
        let mu = bt.multiply(omega);
        if mu != self.algebra.unit() {
            out.push(Violation::new(
                "mu(omega) = 1#1",
                "omega",
                format_vec(&mu),
                format_vec(self.algebra.unit()),
            ));
        }
        let gens = columns(&self.embed_a)
            .map(|c| (format!("{}#1", self.base.algebra().label(c.0)), c.1))
            .chain(columns(&self.embed_h).map(|c| (format!("1#{}", self.base.hopf().algebra().label(c.0)), c.1)));
        for (label, g) in gens {
            let lhs = bt.left_act(&g, omega);
            let rhs = bt.right_act(omega, &g);
            if lhs != rhs {
                out.push(Violation::new(
                    "x omega = omega x",
                    label,
                    format_vec(&lhs),
                    format_vec(&rhs),
                ));
            }
        }
        out
    }

    /// Maschke-type check: `A` semisimple and `ε(t) ≠ 0` should give `A#H` semisimple.
    pub fn maschke_check(&self) -> Result<MaschkeOutcome> {
        let a_semisimple = self.base.algebra().is_semiprime()?;
        let witness = self.base.hopf().separability_witness().is_some();
        let radical = self.radical()?;
        let smash_semisimple = radical.is_zero();
        Ok(MaschkeOutcome {
            a_semisimple,
            witness,
            smash_semisimple,
            radical,
        })
    }

    /// For a left integral `t`: `a ↦ a#t` is injective and commutes with the
    /// generators, and `t·I` is a non-zero subspace of `I ∩ A^H` for sampled
    /// H-stable left ideals `I` whenever `A#H` is semiprime.
    pub fn integral_map_check(&self, samples: usize, seed: u64) -> Result<IntegralMapOutcome> {
        let f = self.field();
        let (n, m) = (self.a_dim(), self.h_dim());
        let hopf = self.base.hopf();
        let t = hopf
            .integrals(IntegralSide::Left)
            .basis_vectors()
            .into_iter()
            .next()
            .ok_or_else(|| Error::internal("no non-zero left integral"))?;
        let phi = Matrix::from_columns(
            f,
            n * m,
            &(0..n).map(|i| self.pure(&unit_vector(f, n, i), &t)).collect::<Vec<_>>(),
        );
        let injective = phi.rank() == n;
        let mut violations = Vec::new();
        // generators a_i#1 act on A by left multiplication, 1#h_j by the action
        let a = self.base.algebra();
        let gens = columns(&self.embed_a)
            .map(|(i, g)| (format!("{}#1", a.label(i)), g, a.left_matrix(&a.basis_element(i))))
            .chain(columns(&self.embed_h).map(|(j, g)| {
                (
                    format!("1#{}", hopf.algebra().label(j)),
                    g,
                    self.base.action()[j].clone(),
                )
            }));
        for (label, g, act) in gens {
            let lhs = self.algebra.left_matrix(&g).mul(&phi);
            let rhs = phi.mul(&act);
            if lhs != rhs {
                violations.push(Violation::new(
                    "a -> a#t is A#H-linear",
                    label,
                    format!("{lhs:?}"),
                    format!("{rhs:?}"),
                ));
            }
        }
        if !injective {
            violations.push(Violation::new(
                "a -> a#t is injective",
                "rank",
                phi.rank().to_string(),
                n.to_string(),
            ));
        }
        let smash_semiprime = self.is_semiprime()?;
        let mut ideals_checked = 0;
        if smash_semiprime {
            let t_act = self.base.action_of(&t);
            let inv = self.base.invariants()?;
            for ideal in self.base.sample_left_ideals(samples, seed)? {
                if ideal.is_zero() {
                    continue;
                }
                ideals_checked += 1;
                let ti = ideal.image(&t_act);
                let fixed = ideal.intersect(&inv)?;
                let loc = format!("I = span{}", format_subspace(&ideal));
                if ti.is_zero() {
                    violations.push(Violation::new("t.I != 0", loc.clone(), "0", "non-zero"));
                }
                if !ti.is_subspace_of(&fixed) {
                    violations.push(Violation::new(
                        "t.I in I^H",
                        loc,
                        format_subspace(&ti),
                        format_subspace(&fixed),
                    ));
                }
            }
        }
        Ok(IntegralMapOutcome {
            injective,
            smash_semiprime,
            ideals_checked,
            integral: t,
            violations,
        })
    }
}

fn format_subspace(s: &Subspace) -> String {
    let vs: Vec<String> = s.basis_vectors().iter().map(|v| format_vec(v)).collect();
    format!("{{{}}}", vs.join(", "))
}

fn columns(m: &Matrix) -> impl Iterator<Item = (usize, Vec<Scalar>)> + '_ {
    (0..m.cols()).map(move |c| (c, m.column(c)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaschkeOutcome {
    pub a_semisimple: bool,
    pub witness: bool,
    pub smash_semisimple: bool,
    pub radical: Subspace,
}

impl MaschkeOutcome {
    pub fn hypotheses_hold(&self) -> bool {
        self.a_semisimple && self.witness
    }

    /// True hypotheses with a false conclusion.
    pub fn violated(&self) -> bool {
        self.hypotheses_hold() && !self.smash_semisimple
    }

    pub fn report(&self, instance: &str) -> Report {
        let mut r = Report::new("maschke", instance);
        r.hypothesis("A_semisimple", self.a_semisimple);
        r.hypothesis("eps_t_nonzero", self.witness);
        r.conclusion = json!({ "smash_semisimple": self.smash_semisimple, "radical_dim": self.radical.dim() });
        if self.violated() {
            r.push_violation(Violation::new(
                "A#H semisimple",
                instance,
                "radical dim ".to_string() + &self.radical.dim().to_string(),
                "0",
            ));
        } else if !self.hypotheses_hold() {
            r.mark_vacuous();
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralMapOutcome {
    pub injective: bool,
    pub smash_semiprime: bool,
    pub ideals_checked: usize,
    pub integral: Vec<Scalar>,
    pub violations: Vec<Violation>,
}

/// `(A#H) ⊗_A (A#H)` realised as `(A#H) ⊗ H`. Since `A#H` is free as a left
/// `A`-module on `1#h_j`, `x ⊗ (b#h) ↦ x(b#1) ⊗ h` is an isomorphism from
/// the quotient; coordinates are indexed `q*m + j`.
#[derive(Debug, Clone, Copy)]
pub struct BimoduleTensor<'a> {
    smash: &'a SmashProduct,
}

impl BimoduleTensor<'_> {
    pub fn dim(&self) -> usize {
        self.smash.algebra.dim() * self.smash.h_dim()
    }

    fn t_dim(&self) -> usize {
        self.smash.algebra.dim()
    }

    /// Image of `x ⊗ y` for arbitrary `x, y ∈ A#H`.
    pub fn project_pure(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.smash.field();
        let (n, m) = (self.smash.a_dim(), self.smash.h_dim());
        let mut out = vec![f.zero(); self.dim()];
        for i in 0..n {
            for j in 0..m {
                let c = &y[i * m + j];
                if c.is_zero() {
                    continue;
                }
                let xa = self.smash.algebra.product(x, &self.smash.embed_a.column(i));
                for (q, v) in xa.iter().enumerate() {
                    if !v.is_zero() {
                        out[q * m + j].add_mul(c, v);
                    }
                }
            }
        }
        out
    }

    /// Image of an element of `(A#H) ⊗ (A#H)` given in Kronecker coordinates.
    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        let d = self.t_dim();
        let f = self.smash.field();
        let mut out = vec![f.zero(); self.dim()];
        for (idx, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = self.project_pure(&unit_vector(f, d, idx / d), &unit_vector(f, d, idx % d));
            for (o, v) in out.iter_mut().zip(&img) {
                o.add_mul(c, v);
            }
        }
        out
    }

    /// `x ⊗ h ↦ x ⊗ (1#h)` in Kronecker coordinates.
    pub fn section(&self, w: &[Scalar]) -> Vec<Scalar> {
        let d = self.t_dim();
        let m = self.smash.h_dim();
        let f = self.smash.field();
        let mut out = vec![f.zero(); d * d];
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (q, j) = (idx / m, idx % m);
            for (r, v) in self.smash.embed_h.column(j).iter().enumerate() {
                if !v.is_zero() {
                    out[q * d + r].add_mul(c, v);
                }
            }
        }
        out
    }

    /// `μ̄(x ⊗ h) = x(1#h)`.
    pub fn multiply(&self, w: &[Scalar]) -> Vec<Scalar> {
        let d = self.t_dim();
        let m = self.smash.h_dim();
        let f = self.smash.field();
        let mut out = vec![f.zero(); d];
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self
                .smash
                .algebra
                .product(&unit_vector(f, d, idx / m), &self.smash.embed_h.column(idx % m));
            for (o, v) in out.iter_mut().zip(&p) {
                o.add_mul(c, v);
            }
        }
        out
    }

    /// `y · w`, acting on the left tensor factor.
    pub fn left_act(&self, y: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let d = self.t_dim();
        let m = self.smash.h_dim();
        let f = self.smash.field();
        let mut out = vec![f.zero(); self.dim()];
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let yx = self.smash.algebra.product(y, &unit_vector(f, d, idx / m));
            for (q, v) in yx.iter().enumerate() {
                if !v.is_zero() {
                    out[q * m + idx % m].add_mul(c, v);
                }
            }
        }
        out
    }

    /// `w · y`, acting on the right tensor factor.
    pub fn right_act(&self, w: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.t_dim();
        let m = self.smash.h_dim();
        let f = self.smash.field();
        let mut out = vec![f.zero(); self.dim()];
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let hy = self.smash.algebra.product(&self.smash.embed_h.column(idx % m), y);
            let img = self.project_pure(&unit_vector(f, d, idx / m), &hy);
            for (o, v) in out.iter_mut().zip(&img) {
                o.add_mul(c, v);
            }
        }
        out
    }

    /// Relations `x(a#1) ⊗ y − x ⊗ (a#1)y` not killed by the projection,
    /// together with failures of projection ∘ section = id.
    pub fn certify(&self) -> Vec<Violation> {
        let d = self.t_dim();
        let f = self.smash.field();
        let mut out = Vec::new();
        for i in 0..self.smash.a_dim() {
            let a = self.smash.embed_a.column(i);
            for x in 0..d {
                let ex = unit_vector(f, d, x);
                let xa = self.smash.algebra.product(&ex, &a);
                for y in 0..d {
                    let ey = unit_vector(f, d, y);
                    let ay = self.smash.algebra.product(&a, &ey);
                    let lhs = self.project_pure(&xa, &ey);
                    let rhs = self.project_pure(&ex, &ay);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "relation in kernel",
                            format!("({x},{i},{y})"),
                            format_vec(&lhs),
                            format_vec(&rhs),
                        ));
                    }
                }
            }
        }
        for k in 0..self.dim() {
            let w = unit_vector(f, self.dim(), k);
            let back = self.project(&self.section(&w));
            if back != w {
                out.push(Violation::new(
                    "projection after section",
                    k.to_string(),
                    format_vec(&back),
                    format_vec(&w),
                ));
            }
        }
        out
    }

    /// The relations subspace of `(A#H) ⊗ (A#H)`, built explicitly.
    pub fn explicit_relations(&self) -> Subspace {
        let d = self.t_dim();
        let f = self.smash.field();
        let mut gens = Vec::new();
        for i in 0..self.smash.a_dim() {
            let a = self.smash.embed_a.column(i);
            for x in 0..d {
                let ex = unit_vector(f, d, x);
                let xa = self.smash.algebra.product(&ex, &a);
                for y in 0..d {
                    let ey = unit_vector(f, d, y);
                    let ay = self.smash.algebra.product(&a, &ey);
                    let r =
                        crate::linalg::vec_sub(&crate::linalg::kron_vec(&xa, &ey), &crate::linalg::kron_vec(&ex, &ay));
                    if r.iter().any(|s| !s.is_zero()) {
                        gens.push(r);
                    }
                }
            }
        }
        Subspace::span(f, d * d, &gens)
    }

    /// The projection as a matrix on Kronecker coordinates.
    pub fn projection_matrix(&self) -> Matrix {
        let d = self.t_dim();
        let f = self.smash.field();
        let cols: Vec<Vec<Scalar>> = (0..d * d).map(|k| self.project(&unit_vector(f, d * d, k))).collect();
        Matrix::from_columns(f, self.dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupTable};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn swap_smash_is_a_matrix_algebra() {
        let s = SmashProduct::build(catalog::swap_action(q(), 2).unwrap()).unwrap();
        assert_eq!(s.algebra().dim(), 4);
        assert!(s.verify().is_empty());
        assert!(s.is_semiprime().unwrap());
        assert_eq!(s.algebra().center().dim(), 1);
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let ma = catalog::dual_numbers_trivial(q()).unwrap();
        let s = SmashProduct::build(ma.clone()).unwrap();
        assert!(s.verify().is_empty());
        let a = ma.algebra();
        let h = ma.hopf().algebra();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let lhs = s
                            .algebra()
                            .product(&unit_vector(q(), 4, i * 2 + j), &unit_vector(q(), 4, k * 2 + l));
                        let rhs = crate::linalg::kron_vec(
                            &a.product(&a.basis_element(i), &a.basis_element(k)),
                            &h.product(&h.basis_element(j), &h.basis_element(l)),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        let rad = s.radical().unwrap();
        assert!(rad.contains(&unit_vector(q(), 4, 2)) && rad.contains(&unit_vector(q(), 4, 3)));
    }

    #[test]
    fn f2_control_is_not_semiprime() {
        let s = SmashProduct::build(catalog::f2_trivial().unwrap()).unwrap();
        let f2 = s.field();
        assert_eq!(s.radical().unwrap(), Subspace::span(f2, 2, &[vec![f2.one(), f2.one()]]));
        assert_eq!(s.separability_idempotent(), Err(Error::NoSeparabilityWitness));
    }

    #[test]
    fn s3_set_smash_is_semiprime() {
        let s = SmashProduct::build(catalog::s3_natural_action(q()).unwrap()).unwrap();
        assert_eq!(s.algebra().dim(), 18);
        assert!(s.is_semiprime().unwrap());
    }

    #[test]
    fn normal_form_matches_explicit_quotient() {
        for ma in [
            catalog::swap_action(q(), 2).unwrap(),
            catalog::dual_numbers_trivial(q()).unwrap(),
            catalog::regular_module_algebra(q(), &GroupTable::cyclic(2)).unwrap(),
            catalog::sweedler_dual_numbers(q()).unwrap(),
        ] {
            let s = SmashProduct::build(ma).unwrap();
            let bt = s.bimodule_tensor();
            assert!(bt.certify().is_empty());
            let d = s.algebra().dim();
            let rel = bt.explicit_relations();
            assert_eq!(d * d - rel.dim(), bt.dim());
            assert_eq!(bt.projection_matrix().kernel(), rel);
        }
    }

    #[test]
    fn separability_idempotent_trivial_example() {
        let h = catalog::group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        let ma = HModuleAlgebra::trivial(h, catalog::field_algebra(q())).unwrap();
        let s = SmashProduct::build(ma).unwrap();
        let omega = s.separability_idempotent().unwrap();
        let half = q().frac(1, 2);
        let e = |k| unit_vector(q(), 2, k);
        let expected = crate::linalg::vec_add(
            &s.bimodule_tensor()
                .project_pure(&e(0), &crate::linalg::vec_scale(&e(0), &half)),
            &s.bimodule_tensor()
                .project_pure(&e(1), &crate::linalg::vec_scale(&e(1), &half)),
        );
        assert_eq!(omega, expected);
        assert!(s.verify_separability(&omega).is_empty());
        assert_eq!(s.bimodule_tensor().multiply(&omega), s.algebra().unit());
    }

    #[test]
    fn separability_on_catalog_pairs() {
        for ma in [
            catalog::swap_action(q(), 3).unwrap(),
            catalog::s3_natural_action(q()).unwrap(),
            catalog::regular_module_algebra(q(), &GroupTable::cyclic(3)).unwrap(),
        ] {
            let s = SmashProduct::build(ma).unwrap();
            let omega = s.separability_idempotent().unwrap();
            assert!(s.verify_separability(&omega).is_empty());
        }
    }

    #[test]
    fn corrupted_omega_is_detected() {
        let s = SmashProduct::build(catalog::swap_action(q(), 2).unwrap()).unwrap();
        let zero = vec![q().zero(); s.bimodule_tensor().dim()];
        let v = s.verify_separability(&zero);
        assert!(v.iter().any(|x| x.check == "mu(omega) = 1#1"));
        let mut omega = s.separability_idempotent().unwrap();
        omega[1] = &omega[1] + &q().one();
        assert!(!s.verify_separability(&omega).is_empty());
    }

    #[test]
    fn maschke_examples() {
        let s = SmashProduct::build(catalog::swap_action(q(), 2).unwrap()).unwrap();
        let o = s.maschke_check().unwrap();
        assert!(o.hypotheses_hold() && o.smash_semisimple && !o.violated());
        let o = SmashProduct::build(catalog::dual_numbers_trivial(q()).unwrap())
            .unwrap()
            .maschke_check()
            .unwrap();
        assert!(!o.a_semisimple && !o.smash_semisimple);
        assert_eq!(o.report("x").status, crate::report::Status::Vacuous);
        let o = SmashProduct::build(catalog::f2_trivial().unwrap())
            .unwrap()
            .maschke_check()
            .unwrap();
        assert!(!o.witness && !o.smash_semisimple && !o.violated());
    }

    #[test]
    fn integral_map_examples() {
        let s = SmashProduct::build(catalog::swap_action(q(), 2).unwrap()).unwrap();
        let o = s.integral_map_check(10, 5).unwrap();
        assert!(o.injective && o.smash_semiprime && o.violations.is_empty());
        assert!(o.ideals_checked > 0);
        let t_act = s.base().action_of(&o.integral);
        assert!(!Subspace::full(q(), 2).image(&t_act).is_zero());
        let s = SmashProduct::build(catalog::s3_natural_action(q()).unwrap()).unwrap();
        assert!(s.integral_map_check(10, 5).unwrap().violations.is_empty());
    }
}
