//! Left `H`-module algebras: axioms, invariants, `H`-stable ideals and the
//! checks built on them.

use crate::algebra::{largest_stable_subspace, operator_closure, Algebra, IdealBasis, Side};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{format_vec, unit_vector, Matrix, Subspace};
use crate::random;
use crate::report::Violation;

/// An algebra `A` with action matrices `ρ_j = h_j · (−)` for each basis
/// element `h_j` of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModuleAlgebra {
    hopf: HopfAlgebra,
    algebra: Algebra,
    action: Vec<Matrix>,
}

/// An ideal that absorbs both multiplications (per its side) and the `H`-action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableIdeal {
    pub ideal: IdealBasis,
    pub h_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSemiprimeOutcome {
    pub semiprime: bool,
    /// Largest nilpotent `H`-stable ideal (zero when `semiprime`).
    pub witness: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialityReport {
    pub annihilator_zero: bool,
    pub annihilator: Subspace,
    pub essential: bool,
    pub probes: usize,
    /// First probe whose cyclic submodule misses the ideal.
    pub escaping_probe: Option<Vec<Scalar>>,
}

impl EssentialityReport {
    /// (a) and (b) must coincide for an `H`-semiprime module algebra.
    pub fn consistent(&self) -> bool {
        self.annihilator_zero == self.essential
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractReport {
    pub ideals_checked: usize,
    pub counterexamples: Vec<Subspace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndIsoReport {
    pub endomorphism_dim: usize,
    pub invariants_dim: usize,
    /// `R_u` for invariant `u` commutes with the generators and `u ↦ R_u` is injective.
    pub right_multiplications_embed: bool,
}

impl EndIsoReport {
    pub fn holds(&self) -> bool {
        self.endomorphism_dim == self.invariants_dim && self.right_multiplications_embed
    }
}

impl HModuleAlgebra {
    pub fn new(hopf: HopfAlgebra, algebra: Algebra, action: Vec<Matrix>) -> Result<HModuleAlgebra> {
        if hopf.field() != algebra.field() {
            return Err(Error::input(
                "Hopf algebra and module algebra live over different fields",
            ));
        }
        if action.len() != hopf.dim() {
            return Err(Error::input(format!(
                "{} action matrices for a Hopf algebra of dimension {}",
                action.len(),
                hopf.dim()
            )));
        }
        let n = algebra.dim();
        if action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::input(format!("action matrices must be {n}x{n}")));
        }
        Ok(HModuleAlgebra { hopf, algebra, action })
    }

    /// The trivial action `h · a = ε(h) a`.
    pub fn trivial(hopf: HopfAlgebra, algebra: Algebra) -> Result<HModuleAlgebra> {
        let id = Matrix::identity(algebra.field(), algebra.dim());
        let action = hopf.counit().iter().map(|e| id.scale(e)).collect();
        HModuleAlgebra::new(hopf, algebra, action)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// Matrix of `h · (−)` for an arbitrary `h ∈ H`.
    pub fn action_of(&self, h: &[Scalar]) -> Matrix {
        let n = self.algebra.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (c, rho) in h.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&rho.scale(c));
            }
        }
        m
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Result<Vec<Scalar>> {
        if h.len() != self.hopf.dim() || a.len() != self.algebra.dim() {
            return Err(Error::input("act: element dimensions do not match"));
        }
        Ok(self.action_of(h).mul_vec(a))
    }

    /// Module axioms, measuring and unit action.
    pub fn verify(&self) -> Vec<Violation> {
        let f = self.field();
        let m = self.hopf.dim();
        let n = self.algebra.dim();
        let hl = |i: usize| self.hopf.algebra().label(i);
        let al = |i: usize| self.algebra.label(i);
        let mut out = Vec::new();

        let one = self.action_of(self.hopf.unit());
        if one != Matrix::identity(f, n) {
            out.push(Violation::new(
                "unit acts as identity",
                "1_H",
                format!("{one:?}"),
                "identity",
            ));
        }
        for i in 0..m {
            for j in 0..m {
                let prod = self
                    .hopf
                    .algebra()
                    .product(&unit_vector(f, m, i), &unit_vector(f, m, j));
                let lhs = self.action_of(&prod);
                let rhs = self.action[i].mul(&self.action[j]);
                if lhs != rhs {
                    out.push(Violation::new(
                        "module action",
                        format!("({},{})", hl(i), hl(j)),
                        format!("{lhs:?}"),
                        format!("{rhs:?}"),
                    ));
                }
            }
        }
        for i in 0..m {
            let delta = self.hopf.coalgebra().comult(i);
            for p in 0..n {
                let ap = unit_vector(f, n, p);
                for q in 0..n {
                    let aq = unit_vector(f, n, q);
                    let lhs = self.action[i].mul_vec(&self.algebra.product(&ap, &aq));
                    let mut rhs = vec![f.zero(); n];
                    for (xy, c) in delta.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let prod = self
                            .algebra
                            .product(&self.action[xy / m].mul_vec(&ap), &self.action[xy % m].mul_vec(&aq));
                        for (r, v) in rhs.iter_mut().zip(&prod) {
                            r.add_mul(c, v);
                        }
                    }
                    if lhs != rhs {
                        out.push(Violation::new(
                            "measuring",
                            format!("{}.({} {})", hl(i), al(p), al(q)),
                            format_vec(&lhs),
                            format_vec(&rhs),
                        ));
                    }
                }
            }
            let lhs = self.action[i].mul_vec(self.algebra.unit());
            let rhs: Vec<Scalar> = self.algebra.unit().iter().map(|u| u * &self.hopf.counit()[i]).collect();
            if lhs != rhs {
                out.push(Violation::new(
                    "unit action",
                    format!("{}.1_A", hl(i)),
                    format_vec(&lhs),
                    format_vec(&rhs),
                ));
            }
        }
        out
    }

    /// Component checks plus [`HModuleAlgebra::verify`].
    pub fn verify_all(&self) -> Vec<Violation> {
        let mut v = self.hopf.verify();
        v.extend(self.algebra.verify());
        v.extend(self.verify());
        v
    }

    /// `A^H = {a : h·a = ε(h)a}`, checked to be a unital subalgebra.
    pub fn invariants(&self) -> Result<Subspace> {
        let f = self.field();
        let n = self.algebra.dim();
        let id = Matrix::identity(f, n);
        let blocks: Vec<Matrix> = self
            .action
            .iter()
            .zip(self.hopf.counit())
            .map(|(rho, e)| rho.sub(&id.scale(e)))
            .collect();
        let inv = Matrix::vstack(f, n, &blocks).kernel();
        if !self.algebra.is_unital_subalgebra(&inv) {
            return Err(Error::internal("invariants are not a unital subalgebra"));
        }
        Ok(inv)
    }

    /// `Z(A)^H = Z(A) ∩ A^H`.
    pub fn central_invariants(&self) -> Result<Subspace> {
        self.algebra.center().intersect(&self.invariants()?)
    }

    /// The generators of `M_H(A)` relevant for ideals of the given side.
    pub fn stable_ops(&self, side: Side) -> Vec<Matrix> {
        let mut ops = self.algebra.ideal_ops(side);
        ops.extend(self.action.iter().cloned());
        ops
    }

    pub fn is_stable(&self, space: &Subspace, side: Side) -> bool {
        self.stable_ops(side)
            .iter()
            .all(|op| space.image(op).is_subspace_of(space))
    }

    /// The `H`-stable ideal of the given side generated by `seed`.
    pub fn h_stable_closure(&self, seed: &Subspace, side: Side) -> Result<StableIdeal> {
        let space = operator_closure(self.algebra.dim(), seed, &self.stable_ops(side))?;
        let h_stable = self.is_stable(&space, side);
        if !h_stable {
            return Err(Error::internal("closure is not H-stable"));
        }
        Ok(StableIdeal {
            ideal: IdealBasis { space, side },
            h_stable,
        })
    }

    /// Wraps an existing subspace after checking stability.
    pub fn stable_ideal(&self, space: Subspace, side: Side) -> Result<StableIdeal> {
        if !self.is_stable(&space, side) {
            return Err(Error::input("subspace is not an H-stable ideal"));
        }
        Ok(StableIdeal {
            ideal: IdealBasis { space, side },
            h_stable: true,
        })
    }

    /// No non-zero nilpotent `H`-stable ideal. The witness is the largest
    /// operator-stable subspace of the radical.
    pub fn is_h_semiprime(&self) -> Result<HSemiprimeOutcome> {
        let rad = self.algebra.jacobson_radical()?;
        let witness = largest_stable_subspace(&rad, &self.stable_ops(Side::TwoSided))?;
        Ok(HSemiprimeOutcome {
            semiprime: witness.is_zero(),
            witness,
        })
    }

    /// Compares `l.ann(I) = 0` with essentiality of `I`, probing cyclic
    /// submodules generated by the standard basis and `probes` random vectors.
    pub fn essentiality_check(&self, ideal: &StableIdeal, probes: usize, seed: u64) -> Result<EssentialityReport> {
        if !self.is_h_semiprime()?.semiprime {
            return Err(Error::input("module algebra is not H-semiprime"));
        }
        let space = &ideal.ideal.space;
        if ideal.ideal.side != Side::TwoSided || !self.is_stable(space, Side::TwoSided) {
            return Err(Error::input("ideal is not an H-stable two-sided ideal"));
        }
        let annihilator = self.algebra.left_annihilator(&ideal.ideal);
        let f = self.field();
        let n = self.algebra.dim();
        let mut rng = random::rng(seed);
        let mut vectors: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(f, n, k)).collect();
        vectors.extend((0..probes).map(|_| random::sparse_vector(f, n, &mut rng)));
        let mut escaping_probe = None;
        for x in &vectors {
            let cyclic = self.h_stable_closure(&Subspace::span(f, n, std::slice::from_ref(x)), Side::TwoSided)?;
            if cyclic.ideal.space.intersect(space)?.is_zero() {
                escaping_probe = Some(x.clone());
                break;
            }
        }
        Ok(EssentialityReport {
            annihilator_zero: annihilator.is_zero(),
            annihilator,
            essential: escaping_probe.is_none(),
            probes: vectors.len(),
            escaping_probe,
        })
    }

    /// Samples `H`-stable left ideals generated by single vectors and reports
    /// those without non-zero invariants.
    pub fn retractability_check(&self, samples: usize, seed: u64) -> Result<RetractReport> {
        let inv = self.invariants()?;
        let mut counterexamples = Vec::new();
        let mut checked = 0;
        for ideal in self.sample_left_ideals(samples, seed)? {
            if ideal.is_zero() {
                continue;
            }
            checked += 1;
            if ideal.intersect(&inv)?.is_zero() {
                counterexamples.push(ideal);
            }
        }
        Ok(RetractReport {
            ideals_checked: checked,
            counterexamples,
        })
    }

    /// `H`-stable left ideals generated by each standard basis vector and by
    /// `samples` seeded random vectors (duplicates removed, order kept).
    pub fn sample_left_ideals(&self, samples: usize, seed: u64) -> Result<Vec<Subspace>> {
        let f = self.field();
        let n = self.algebra.dim();
        let mut rng = random::rng(seed);
        let mut gens: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(f, n, k)).collect();
        gens.extend((0..samples).map(|_| random::sparse_vector(f, n, &mut rng)));
        let mut out: Vec<Subspace> = Vec::new();
        for g in gens {
            let i = self
                .h_stable_closure(&Subspace::span(f, n, &[g]), Side::Left)?
                .ideal
                .space;
            if !out.contains(&i) {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// `dim End_{A#H}(A)` against `dim A^H`.
    pub fn end_iso_check(&self) -> Result<EndIsoReport> {
        let f = self.field();
        let n = self.algebra.dim();
        let mut gens = self.algebra.left_basis_ops();
        gens.extend(self.action.iter().cloned());
        let sys = commutant_system(f, n, &gens);
        let ends = sys.kernel();
        let inv = self.invariants()?;
        let mut vecs = Vec::new();
        let mut commute = true;
        for u in inv.basis_vectors() {
            let ru = self.algebra.right_matrix(&u);
            let flat = ru.entries().to_vec();
            commute &= ends.contains(&flat);
            vecs.push(flat);
        }
        let injective = Subspace::span(f, n * n, &vecs).dim() == inv.dim();
        Ok(EndIsoReport {
            endomorphism_dim: ends.dim(),
            invariants_dim: inv.dim(),
            right_multiplications_embed: commute && injective,
        })
    }
}

/// Linear system in the row-major entries of `φ` expressing `φM = Mφ` for
/// every generator `M`.
fn commutant_system(f: Field, n: usize, gens: &[Matrix]) -> Matrix {
    let mut sys = Matrix::zeros(f, gens.len() * n * n, n * n);
    for (g, m) in gens.iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                let row = g * n * n + r * n + c;
                for k in 0..n {
                    // + φ[r][k] M[k][c]
                    let a = m.get(k, c);
                    if !a.is_zero() {
                        let v = sys.get(row, r * n + k) + a;
                        sys.set(row, r * n + k, v);
                    }
                    // - M[r][k] φ[k][c]
                    let b = m.get(r, k);
                    if !b.is_zero() {
                        let v = sys.get(row, k * n + c) - b;
                        sys.set(row, k * n + c, v);
                    }
                }
            }
        }
    }
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupTable};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn trivial_action_is_valid() {
        let h = catalog::group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        let ma = HModuleAlgebra::trivial(h, catalog::matrix_algebra(q(), 2)).unwrap();
        assert!(ma.verify().is_empty());
        assert!(ma.invariants().unwrap().is_full());
        let zi = ma.central_invariants().unwrap();
        assert_eq!(zi.dim(), 1);
        assert!(zi.contains(ma.algebra().unit()));
    }

    #[test]
    fn swap_action_examples() {
        let ma = catalog::swap_action(q(), 2).unwrap();
        assert!(ma.verify().is_empty());
        let g = unit_vector(q(), 2, 1);
        let v = vec![q().from_i64(3), q().from_i64(-1)];
        assert_eq!(ma.act(&g, &v).unwrap(), vec![q().from_i64(-1), q().from_i64(3)]);
        assert_eq!(ma.act(ma.hopf().unit(), &v).unwrap(), v);
        let inv = ma.invariants().unwrap();
        assert_eq!(inv, Subspace::span(q(), 2, &[vec![q().one(), q().one()]]));
        assert_eq!(ma.central_invariants().unwrap(), inv);
    }

    #[test]
    fn corrupted_unit_action_is_reported() {
        let ma = catalog::swap_action(q(), 2).unwrap();
        let mut action = ma.action().to_vec();
        action[1] = Matrix::from_i64(q(), &[&[0, 1], &[2, 0]]);
        let bad = HModuleAlgebra::new(ma.hopf().clone(), ma.algebra().clone(), action).unwrap();
        assert!(bad.verify().iter().any(|v| v.check == "unit action"));
    }

    #[test]
    fn dual_group_action_examples() {
        let ma = catalog::regular_module_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        assert!(ma.verify().is_empty());
        let p_g = unit_vector(q(), 2, 1);
        assert_eq!(ma.act(&p_g, &unit_vector(q(), 2, 1)).unwrap(), unit_vector(q(), 2, 1));
        assert_eq!(ma.act(&p_g, &unit_vector(q(), 2, 0)).unwrap(), vec![q().zero(); 2]);
        assert_eq!(
            ma.invariants().unwrap(),
            Subspace::span(q(), 2, &[unit_vector(q(), 2, 0)])
        );
    }

    #[test]
    fn closure_examples() {
        let ma = catalog::swap_action(q(), 3).unwrap();
        let e = |k| unit_vector(q(), 3, k);
        let full = ma.h_stable_closure(&Subspace::full(q(), 3), Side::TwoSided).unwrap();
        assert!(full.ideal.space.is_full());
        let c = ma
            .h_stable_closure(&Subspace::span(q(), 3, &[e(0)]), Side::TwoSided)
            .unwrap();
        assert_eq!(c.ideal.space, Subspace::span(q(), 3, &[e(0), e(1)]));
        let c3 = ma
            .h_stable_closure(&Subspace::span(q(), 3, &[e(2)]), Side::TwoSided)
            .unwrap();
        assert_eq!(c3.ideal.space, Subspace::span(q(), 3, &[e(2)]));
    }

    #[test]
    fn h_semiprime_examples() {
        assert!(
            catalog::swap_action(q(), 2)
                .unwrap()
                .is_h_semiprime()
                .unwrap()
                .semiprime
        );
        let ctrl = catalog::dual_numbers_trivial(q()).unwrap();
        let out = ctrl.is_h_semiprime().unwrap();
        assert!(!out.semiprime);
        assert_eq!(out.witness, Subspace::span(q(), 2, &[unit_vector(q(), 2, 1)]));
        // Sweedler's algebra moves the radical of Q[u]/(u^2) onto the unit
        let sw = catalog::sweedler_dual_numbers(q()).unwrap();
        assert!(sw.verify().is_empty());
        assert!(sw.is_h_semiprime().unwrap().semiprime);
    }

    #[test]
    fn essentiality_examples() {
        let ma = catalog::swap_action(q(), 3).unwrap();
        let full = ma.stable_ideal(Subspace::full(q(), 3), Side::TwoSided).unwrap();
        let r = ma.essentiality_check(&full, 10, 1).unwrap();
        assert!(r.annihilator_zero && r.essential);
        let e = |k| unit_vector(q(), 3, k);
        let i12 = ma
            .stable_ideal(Subspace::span(q(), 3, &[e(0), e(1)]), Side::TwoSided)
            .unwrap();
        let r = ma.essentiality_check(&i12, 10, 1).unwrap();
        assert!(!r.annihilator_zero && !r.essential);
        assert_eq!(r.annihilator, Subspace::span(q(), 3, &[e(2)]));
        assert_eq!(r.escaping_probe, Some(e(2)));
        let swap2 = catalog::swap_action(q(), 2).unwrap();
        let full2 = swap2.stable_ideal(Subspace::full(q(), 2), Side::TwoSided).unwrap();
        assert!(swap2.essentiality_check(&full2, 10, 1).unwrap().consistent());
        let ctrl = catalog::dual_numbers_trivial(q()).unwrap();
        let full = ctrl.stable_ideal(Subspace::full(q(), 2), Side::TwoSided).unwrap();
        assert!(ctrl.essentiality_check(&full, 5, 1).is_err());
    }

    #[test]
    fn retractability_examples() {
        let ma = catalog::swap_action(q(), 2).unwrap();
        let r = ma.retractability_check(20, 3).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(r.ideals_checked > 0);
        let f2 = Field::prime(2).unwrap();
        let ctrl = catalog::f2_trivial().unwrap();
        assert_eq!(ctrl.field(), f2);
        assert!(ctrl.retractability_check(5, 3).unwrap().counterexamples.is_empty());
    }

    #[test]
    fn end_iso_examples() {
        let h = catalog::group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        let triv = HModuleAlgebra::trivial(h, catalog::field_algebra(q())).unwrap();
        let r = triv.end_iso_check().unwrap();
        assert_eq!((r.endomorphism_dim, r.invariants_dim), (1, 1));
        let r = catalog::swap_action(q(), 2).unwrap().end_iso_check().unwrap();
        assert_eq!((r.endomorphism_dim, r.invariants_dim), (1, 1));
        assert!(r.holds());
        let r = catalog::regular_module_algebra(q(), &GroupTable::cyclic(2))
            .unwrap()
            .end_iso_check()
            .unwrap();
        assert_eq!((r.endomorphism_dim, r.invariants_dim), (1, 1));
    }
}
