//! Drinfeld twists: the cocycle and counit conditions, twisted Hopf and
//! module algebras, round trips, triangular structures and a grid search.

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::catalog::GroupTable;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Coalgebra, HopfAlgebra, TensorElement};
use crate::linalg::{format_vec, unit_vector};
use crate::module_algebra::HModuleAlgebra;
use crate::report::Violation;
use crate::smash::SmashProduct;

/// A twist `J` together with its two-sided inverse `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldTwist {
    j: TensorElement,
    q: TensorElement,
}

impl DrinfeldTwist {
    /// Pairs `j` with `q` without any check. Used to feed deliberately
    /// broken data to the verifiers.
    pub fn new_unchecked(j: TensorElement, q: TensorElement) -> DrinfeldTwist {
        DrinfeldTwist { j, q }
    }

    pub fn trivial(h: &HopfAlgebra) -> DrinfeldTwist {
        DrinfeldTwist {
            j: h.tensor_one(2),
            q: h.tensor_one(2),
        }
    }

    pub fn j(&self) -> &TensorElement {
        &self.j
    }

    pub fn q(&self) -> &TensorElement {
        &self.q
    }

    /// `Q` viewed as a twist (for `H^J`).
    pub fn inverse(&self) -> DrinfeldTwist {
        DrinfeldTwist {
            j: self.q.clone(),
            q: self.j.clone(),
        }
    }
}

/// Outcome of checking a candidate twist or R-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Checked<T> {
    Valid(T),
    Invalid(Vec<Violation>),
}

impl<T> Checked<T> {
    pub fn valid(self) -> Option<T> {
        match self {
            Checked::Valid(t) => Some(t),
            Checked::Invalid(_) => None,
        }
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Checked::Valid(_) => &[],
            Checked::Invalid(v) => v,
        }
    }
}

fn render(t: &TensorElement) -> String {
    format_vec(&t.coeffs)
}

fn check_arity2(h: &HopfAlgebra, x: &TensorElement) -> Result<()> {
    if x.arity != 2 || x.coeffs.len() != h.dim() * h.dim() {
        return Err(Error::input("expected an element of H⊗H"));
    }
    if x.coeffs.iter().any(|s| s.field() != h.field()) {
        return Err(Error::input("tensor coefficients live in a different field"));
    }
    Ok(())
}

/// Checks `(ε⊗1)(J) = 1 = (1⊗ε)(J)` and
/// `(J⊗1)(Δ⊗1)(J) = (1⊗J)(1⊗Δ)(J)`, then inverts `J`.
pub fn verify_twist(h: &HopfAlgebra, j: &TensorElement) -> Result<Checked<DrinfeldTwist>> {
    check_arity2(h, j)?;
    let mut out = Vec::new();
    let one = h.unit().to_vec();
    for (pos, name) in [(0, "(eps x 1)(J) = 1"), (1, "(1 x eps)(J) = 1")] {
        let c = h.counit_at(j, pos).coeffs;
        if c != one {
            out.push(Violation::new(name, "J", format_vec(&c), format_vec(&one)));
        }
    }
    let lhs = h.tensor_product(&h.insert_unit_at(j, 2), &h.comult_at(j, 0));
    let rhs = h.tensor_product(&h.insert_unit_at(j, 0), &h.comult_at(j, 1));
    if lhs != rhs {
        out.push(Violation::new("twist cocycle", "H^(x3)", render(&lhs), render(&rhs)));
    }
    if !out.is_empty() {
        return Ok(Checked::Invalid(out));
    }
    let q = h.tensor_invert(2, j)?;
    Ok(Checked::Valid(DrinfeldTwist { j: j.clone(), q }))
}

/// `U = Σ J¹S(J²)` and `U⁻¹ = Σ S(Q¹)Q²`, with `UU⁻¹ = U⁻¹U = 1` checked.
pub fn drinfeld_element(h: &HopfAlgebra, t: &DrinfeldTwist) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let u = h.contract(&h.map_at(&t.j, 1, h.antipode()));
    let u_inv = h.contract(&h.map_at(&t.q, 0, h.antipode()));
    let a = h.algebra();
    if a.product(&u, &u_inv) != h.unit() || a.product(&u_inv, &u) != h.unit() {
        return Err(Error::NotInvertible);
    }
    Ok((u, u_inv))
}

/// `H^J`: same algebra and counit, `Δ^J = JΔQ`, `S^J(h) = U S(h) U⁻¹`.
pub fn twist_hopf(h: &HopfAlgebra, t: &DrinfeldTwist) -> Result<HopfAlgebra> {
    let n = h.dim();
    let f = h.field();
    let comult = (0..n)
        .map(|i| {
            let d = TensorElement::new(2, h.coalgebra().comult(i).to_vec());
            h.tensor_product(&h.tensor_product(&t.j, &d), &t.q).coeffs
        })
        .collect();
    let coalgebra = Coalgebra::new(n, comult, h.counit().to_vec())?;
    let (u, u_inv) = drinfeld_element(h, t)?;
    let a = h.algebra();
    let s = a.left_matrix(&u).mul(&a.right_matrix(&u_inv)).mul(h.antipode());
    let out = HopfAlgebra::from_parts(a.clone(), coalgebra, s)?;
    if let Some(v) = out.verify().first() {
        return Err(Error::internal(format!(
            "twisted Hopf algebra fails {} at {}",
            v.check, v.location
        )));
    }
    if f != out.field() {
        return Err(Error::internal("field changed under twisting"));
    }
    Ok(out)
}

/// `μ^J(a⊗b) = Σ (Q¹·a)(Q²·b)` as structure constants.
pub fn twisted_multiplication(ma: &HModuleAlgebra, q: &TensorElement) -> Result<Algebra> {
    let a = ma.algebra();
    let n = a.dim();
    let m = ma.hopf().dim();
    let f = ma.field();
    let terms: Vec<(usize, usize, &Scalar)> = q.support().map(|(xy, c)| (xy / m, xy % m, c)).collect();
    let acted: Vec<Vec<Vec<Scalar>>> = (0..m)
        .map(|x| (0..n).map(|k| ma.action()[x].column(k)).collect())
        .collect();
    let labels = a.labels().map(|l| l.to_vec());
    Algebra::from_products(f, n, a.unit().to_vec(), labels, |p, r| {
        let mut out = vec![f.zero(); n];
        for &(x, y, c) in &terms {
            let prod = a.product(&acted[x][p], &acted[y][r]);
            for (o, v) in out.iter_mut().zip(&prod) {
                o.add_mul(c, v);
            }
        }
        out
    })
}

/// `A^J` as an `H^J`-module algebra with the same action matrices.
pub fn twist_module_algebra(ma: &HModuleAlgebra, t: &DrinfeldTwist) -> Result<HModuleAlgebra> {
    let hj = twist_hopf(ma.hopf(), t)?;
    let aj = twisted_multiplication(ma, &t.q)?;
    let out = HModuleAlgebra::new(hj, aj, ma.action().to_vec())?;
    if let Some(v) = out.verify_all().first() {
        return Err(Error::internal(format!(
            "twisted module algebra fails {} at {}",
            v.check, v.location
        )));
    }
    Ok(out)
}

/// `ab = Σ (J¹·a) ·_J (J²·b)` on all basis pairs.
pub fn verify_twist_relation(ma: &HModuleAlgebra, t: &DrinfeldTwist) -> Result<Vec<Violation>> {
    let a = ma.algebra();
    let aj = twisted_multiplication(ma, &t.q)?;
    let n = a.dim();
    let m = ma.hopf().dim();
    let f = ma.field();
    let mut out = Vec::new();
    for p in 0..n {
        for r in 0..n {
            let (ep, er) = (unit_vector(f, n, p), unit_vector(f, n, r));
            let lhs = a.product(&ep, &er);
            let mut rhs = vec![f.zero(); n];
            for (xy, c) in t.j.support() {
                let prod = aj.product(&ma.action()[xy / m].mul_vec(&ep), &ma.action()[xy % m].mul_vec(&er));
                for (o, v) in rhs.iter_mut().zip(&prod) {
                    o.add_mul(c, v);
                }
            }
            if lhs != rhs {
                out.push(Violation::new(
                    "ab = sum (J1.a) *_J (J2.b)",
                    format!("({},{})", a.label(p), a.label(r)),
                    format_vec(&lhs),
                    format_vec(&rhs),
                ));
            }
        }
    }
    Ok(out)
}

/// `Q` is a twist for `H^J`, and twisting back by `Q` restores `H` (and
/// `A` when given) exactly.
pub fn inverse_twist_check(h: &HopfAlgebra, ma: Option<&HModuleAlgebra>, t: &DrinfeldTwist) -> Result<Vec<Violation>> {
    let hj = twist_hopf(h, t)?;
    let mut out = Vec::new();
    let back = match verify_twist(&hj, &t.q)? {
        Checked::Invalid(v) => {
            out.extend(v.into_iter().map(|mut x| {
                x.location = format!("Q over H^J: {}", x.location);
                x
            }));
            return Ok(out);
        }
        Checked::Valid(back) => back,
    };
    let hh = twist_hopf(&hj, &back)?;
    if hh.coalgebra() != h.coalgebra() {
        out.push(Violation::new("(H^J)^Q = H", "comultiplication", "differs", "equal"));
    }
    if hh.antipode() != h.antipode() {
        out.push(Violation::new(
            "(H^J)^Q = H",
            "antipode",
            format!("{:?}", hh.antipode()),
            format!("{:?}", h.antipode()),
        ));
    }
    if let Some(ma) = ma {
        let aj = twist_module_algebra(ma, t)?;
        let aa = twist_module_algebra(&aj, &back)?;
        if aa.algebra().structure_constants() != ma.algebra().structure_constants() {
            out.push(Violation::new("(A^J)^Q = A", "multiplication", "differs", "equal"));
        }
    }
    Ok(out)
}

/// A verified triangular structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularStructure {
    pub r: TensorElement,
    pub r_inv: TensorElement,
}

/// Checks the four triangularity axioms for `R`.
pub fn verify_triangular(h: &HopfAlgebra, r: &TensorElement) -> Result<Checked<TriangularStructure>> {
    check_arity2(h, r)?;
    let r_inv = h.tensor_invert(2, r)?;
    let r12 = h.insert_unit_at(r, 2);
    let r13 = h.insert_unit_at(r, 1);
    let r23 = h.insert_unit_at(r, 0);
    let mut out = Vec::new();
    let lhs = h.comult_at(r, 0);
    let rhs = h.tensor_product(&r13, &r23);
    if lhs != rhs {
        out.push(Violation::new("(D x 1)R = R13 R23", "R", render(&lhs), render(&rhs)));
    }
    let lhs = h.comult_at(r, 1);
    let rhs = h.tensor_product(&r13, &r12);
    if lhs != rhs {
        out.push(Violation::new("(1 x D)R = R13 R12", "R", render(&lhs), render(&rhs)));
    }
    for i in 0..h.dim() {
        let d = TensorElement::new(2, h.coalgebra().comult(i).to_vec());
        let lhs = h.tensor_product(&h.flip(&d), r);
        let rhs = h.tensor_product(r, &d);
        if lhs != rhs {
            out.push(Violation::new(
                "D^cop R = R D",
                h.algebra().label(i),
                render(&lhs),
                render(&rhs),
            ));
        }
    }
    let tau = h.flip(r);
    if tau != r_inv {
        out.push(Violation::new("R^-1 = tau(R)", "R", render(&r_inv), render(&tau)));
    }
    if out.is_empty() {
        Ok(Checked::Valid(TriangularStructure { r: r.clone(), r_inv }))
    } else {
        Ok(Checked::Invalid(out))
    }
}

/// The four semiprimeness values compared under twisting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferOutcome {
    pub h_semiprime: bool,
    pub h_semiprime_twisted: bool,
    pub smash_semiprime: bool,
    pub smash_semiprime_twisted: bool,
    pub smash_radical_dim: usize,
    pub smash_radical_dim_twisted: usize,
    pub smash_center_dim: usize,
    pub smash_center_dim_twisted: usize,
}

impl TransferOutcome {
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.h_semiprime != self.h_semiprime_twisted {
            out.push(Violation::new(
                "H-semiprime transfers",
                "A vs A^J",
                self.h_semiprime.to_string(),
                self.h_semiprime_twisted.to_string(),
            ));
        }
        if self.smash_semiprime != self.smash_semiprime_twisted
            || self.smash_radical_dim != self.smash_radical_dim_twisted
        {
            out.push(Violation::new(
                "smash radical dimension",
                "A#H vs A^J#H^J",
                self.smash_radical_dim.to_string(),
                self.smash_radical_dim_twisted.to_string(),
            ));
        }
        if self.smash_center_dim != self.smash_center_dim_twisted {
            out.push(Violation::new(
                "smash center dimension",
                "A#H vs A^J#H^J",
                self.smash_center_dim.to_string(),
                self.smash_center_dim_twisted.to_string(),
            ));
        }
        out
    }
}

pub fn semiprime_transfer_check(ma: &HModuleAlgebra, t: &DrinfeldTwist) -> Result<TransferOutcome> {
    let aj = twist_module_algebra(ma, t)?;
    let s = SmashProduct::build(ma.clone())?;
    let sj = SmashProduct::build(aj.clone())?;
    let (r, rj) = (s.radical()?, sj.radical()?);
    Ok(TransferOutcome {
        h_semiprime: ma.is_h_semiprime()?.semiprime,
        h_semiprime_twisted: aj.is_h_semiprime()?.semiprime,
        smash_semiprime: r.is_zero(),
        smash_semiprime_twisted: rj.is_zero(),
        smash_radical_dim: r.dim(),
        smash_radical_dim_twisted: rj.dim(),
        smash_center_dim: s.algebra().center().dim(),
        smash_center_dim_twisted: sj.algebra().center().dim(),
    })
}

/// The group when every basis element of `h` is grouplike and the basis is
/// closed under multiplication.
pub fn grouplike_basis(h: &HopfAlgebra) -> Option<GroupTable> {
    let n = h.dim();
    let f = h.field();
    let a = h.algebra();
    if !(0..n).all(|i| h.is_grouplike(&unit_vector(f, n, i))) {
        return None;
    }
    let mut table = vec![vec![0; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            match a.basis_product(i, j) {
                [(k, c)] if c.is_one() => *cell = *k,
                _ => return None,
            }
        }
    }
    let labels = (0..n).map(|i| a.label(i)).collect();
    GroupTable::new("G", table, labels).ok()
}

/// Results of the grid search.
#[derive(Debug, Clone)]
pub struct TwistSearch {
    pub group_order: usize,
    pub grid: Vec<Scalar>,
    /// Number of free coefficient choices enumerated.
    pub candidates: u64,
    /// Candidates passing the counit conditions inside the grid.
    pub counit_admissible: u64,
    /// Candidates passing the integer cocycle prefilter.
    pub prefilter_hits: u64,
    /// Candidates certified from scratch by [`verify_twist`], in enumeration order.
    pub twists: Vec<DrinfeldTwist>,
}

impl TwistSearch {
    pub fn nontrivial(&self) -> impl Iterator<Item = &DrinfeldTwist> {
        self.twists
            .iter()
            .filter(|t| t.j.coeffs.iter().filter(|c| !c.is_zero()).count() > 1)
    }
}

/// Parses a grid like `"0,1,-1,1/2,-1/2"`.
pub fn parse_grid(field: Field, spec: &str) -> Result<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let s = field.parse(part)?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(Error::input("empty grid"));
    }
    Ok(out)
}

pub fn default_grid(field: Field) -> Vec<Scalar> {
    vec![
        field.zero(),
        field.one(),
        field.from_i64(-1),
        field.frac(1, 2),
        field.frac(-1, 2),
    ]
}

/// Searches twists `J = Σ c_{gh} g⊗h` on a group algebra over `Q` with every
/// coefficient in `grid`. The coefficients with `g, h ≠ e` are enumerated;
/// the rest are forced by the counit conditions and must land in the grid.
/// Survivors of an integer cocycle test are certified exactly.
pub fn twist_search(h: &HopfAlgebra, grid: &[Scalar]) -> Result<TwistSearch> {
    if h.field() != Field::Rational {
        return Err(Error::input("twist search runs over Q"));
    }
    let g = grouplike_basis(h).ok_or_else(|| Error::input("twist search needs a basis of grouplikes"))?;
    let n = g.order();
    // common denominator so that every grid value is an integer multiple of 1/den
    let mut den = num_bigint::BigInt::one();
    for s in grid {
        if let Scalar::Rational(r) = s {
            den = num_integer::lcm(den, r.denom().clone());
        }
    }
    let scaled: Vec<i64> = grid
        .iter()
        .map(|s| match s {
            Scalar::Rational(r) => (r.numer() * (&den / r.denom())).to_i64(),
            _ => None,
        })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::input("grid values too large"))?;
    let den = den.to_i64().ok_or_else(|| Error::input("grid denominator too large"))?;
    let free: Vec<(usize, usize)> = (0..n)
        .filter(|&a| a != g.identity())
        .flat_map(|a| (0..n).filter(|&b| b != g.identity()).map(move |b| (a, b)))
        .collect();
    let k = free.len() as u32;
    let base = scaled.len() as u64;
    let candidates = base
        .checked_pow(k)
        .ok_or_else(|| Error::input("grid search space too large"))?;
    let e = g.identity();
    let admissible = std::sync::atomic::AtomicU64::new(0);

    let hits: Vec<Vec<i64>> = (0..candidates)
        .into_par_iter()
        .filter_map(|code| {
            let mut d = vec![0i64; n * n];
            let mut c = code;
            for &(a, b) in &free {
                d[a * n + b] = scaled[(c % base) as usize];
                c /= base;
            }
            // (1⊗ε)J = 1 forces the row sums, (ε⊗1)J = 1 the column sums
            for a in (0..n).filter(|&a| a != e) {
                d[a * n + e] = -(0..n).filter(|&b| b != e).map(|b| d[a * n + b]).sum::<i64>();
            }
            for b in (0..n).filter(|&b| b != e) {
                d[e * n + b] = -(0..n).filter(|&a| a != e).map(|a| d[a * n + b]).sum::<i64>();
            }
            d[e * n + e] = den - (0..n).filter(|&a| a != e).map(|a| d[a * n + e]).sum::<i64>();
            let in_grid = |v: i64| scaled.contains(&v);
            if !(0..n).all(|x| in_grid(d[x * n + e]) && in_grid(d[e * n + x])) {
                return None;
            }
            admissible.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            integer_cocycle(&g, &d).then_some(d)
        })
        .collect();

    let f = h.field();
    let mut twists = Vec::new();
    for d in &hits {
        let coeffs = d.iter().map(|&v| f.frac(v, den)).collect();
        if let Checked::Valid(t) = verify_twist(h, &TensorElement::new(2, coeffs))? {
            twists.push(t);
        }
    }
    Ok(TwistSearch {
        group_order: n,
        grid: grid.to_vec(),
        candidates,
        counit_admissible: admissible.into_inner(),
        prefilter_hits: hits.len() as u64,
        twists,
    })
}

/// `(J⊗1)(Δ⊗1)J = (1⊗J)(1⊗Δ)J` for `J = Σ d_{gh} g⊗h` on a group basis.
fn integer_cocycle(g: &GroupTable, d: &[i64]) -> bool {
    let n = g.order();
    let mut lhs = vec![0i64; n * n * n];
    let mut rhs = vec![0i64; n * n * n];
    let support: Vec<(usize, usize, i64)> = (0..n * n)
        .filter(|&i| d[i] != 0)
        .map(|i| (i / n, i % n, d[i]))
        .collect();
    for &(a, b, x) in &support {
        for &(p, q, y) in &support {
            // (a⊗b⊗1)(p⊗p⊗q) and (1⊗a⊗b)(p⊗q⊗q)
            lhs[(g.mul(a, p) * n + g.mul(b, p)) * n + q] += x * y;
            rhs[(p * n + g.mul(a, q)) * n + g.mul(b, q)] += x * y;
        }
    }
    lhs == rhs
}

/// Is `J` (as a coefficient vector) the identity `1⊗1`?
pub fn is_trivial(h: &HopfAlgebra, t: &DrinfeldTwist) -> bool {
    t.j == h.tensor_one(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> Field {
        Field::Rational
    }

    fn c2() -> HopfAlgebra {
        catalog::group_algebra(q(), &GroupTable::cyclic(2)).unwrap()
    }

    fn klein() -> HopfAlgebra {
        catalog::group_algebra(q(), &GroupTable::klein()).unwrap()
    }

    /// `½(1⊗1 + a⊗1 + 1⊗b − a⊗b)` on `C2×C2` with basis `1, a, b, ab`.
    fn known_twist() -> TensorElement {
        let half = q().frac(1, 2);
        TensorElement::from_terms(
            q(),
            4,
            2,
            &[
                (vec![0, 0], half.clone()),
                (vec![1, 0], half.clone()),
                (vec![0, 2], half.clone()),
                (vec![1, 2], -half),
            ],
        )
    }

    #[test]
    fn trivial_twist() {
        let h = c2();
        let t = verify_twist(&h, &h.tensor_one(2)).unwrap().valid().unwrap();
        let hj = twist_hopf(&h, &t).unwrap();
        assert_eq!(hj, h);
        let ma = catalog::swap_action(q(), 2).unwrap();
        let aj = twist_module_algebra(&ma, &t).unwrap();
        assert_eq!(aj.algebra(), ma.algebra());
        assert!(verify_twist_relation(&ma, &t).unwrap().is_empty());
        assert!(inverse_twist_check(&h, Some(&ma), &t).unwrap().is_empty());
        let o = semiprime_transfer_check(&ma, &t).unwrap();
        assert!(o.violations().is_empty());
    }

    #[test]
    fn counit_condition_failure() {
        let h = c2();
        let gg = TensorElement::from_terms(q(), 2, 2, &[(vec![1, 1], q().one())]);
        let v = verify_twist(&h, &gg).unwrap();
        assert!(v.violations().iter().any(|x| x.check == "(eps x 1)(J) = 1"));
    }

    #[test]
    fn known_klein_twist() {
        let h = klein();
        let j = known_twist();
        let t = verify_twist(&h, &j).unwrap().valid().unwrap();
        assert_eq!(t.q(), &j);
        let hj = twist_hopf(&h, &t).unwrap();
        assert!(hj.verify().is_empty());
        // H is commutative, so Δ^J = Δ; the twist shows up in A^J only
        assert_eq!(hj.coalgebra(), h.coalgebra());
        assert_eq!(hj.is_separable(), h.is_separable());
        let ma = catalog::translation_action(q(), &GroupTable::klein()).unwrap();
        let aj = twist_module_algebra(&ma, &t).unwrap();
        assert!(aj.verify().is_empty());
        assert_eq!(aj.algebra().unit(), ma.algebra().unit());
        assert!(!aj.algebra().is_commutative());
        assert!(verify_twist_relation(&ma, &t).unwrap().is_empty());
        assert!(inverse_twist_check(&h, Some(&ma), &t).unwrap().is_empty());
        assert!(semiprime_transfer_check(&ma, &t).unwrap().violations().is_empty());
    }

    #[test]
    fn corrupted_twist_breaks_relation() {
        let h = klein();
        let t = verify_twist(&h, &known_twist()).unwrap().valid().unwrap();
        let mut j = t.j().clone();
        j.coeffs[5] = &j.coeffs[5] + &q().one();
        let bad = DrinfeldTwist::new_unchecked(j, t.q().clone());
        let ma = catalog::translation_action(q(), &GroupTable::klein()).unwrap();
        assert!(!verify_twist_relation(&ma, &bad).unwrap().is_empty());
    }

    #[test]
    fn triangular_examples() {
        let h = c2();
        let one = h.tensor_one(2);
        let s = verify_triangular(&h, &one).unwrap().valid().unwrap();
        assert_eq!(h.tensor_product(&h.flip(&s.r), &s.r), one);
        let sw = catalog::sweedler_h4(q()).unwrap();
        let v = verify_triangular(&sw, &sw.tensor_one(2)).unwrap();
        let viol = v.violations();
        assert!(!viol.is_empty());
        assert!(viol.iter().all(|x| x.check == "D^cop R = R D"));
        assert!(viol.iter().any(|x| x.location == "x"));
        let nil = TensorElement::from_terms(q(), 2, 2, &[(vec![0, 0], q().one()), (vec![1, 1], q().one())]);
        assert_eq!(verify_triangular(&h, &nil), Err(Error::NotInvertible));
    }

    #[test]
    fn grid_search_on_c2() {
        let h = c2();
        let s = twist_search(&h, &default_grid(q())).unwrap();
        assert_eq!(s.candidates, 5);
        assert!(s.twists.iter().any(|t| is_trivial(&h, t)));
        for t in &s.twists {
            assert!(verify_twist(&h, t.j()).unwrap().valid().is_some());
        }
    }

    #[test]
    fn grid_search_rejects_non_group_bases() {
        let sw = catalog::sweedler_h4(q()).unwrap();
        assert!(twist_search(&sw, &default_grid(q())).is_err());
    }

    #[test]
    fn integer_prefilter_agrees_with_exact_check() {
        let g = GroupTable::klein();
        let h = klein();
        // (2 × known twist)
        let mut d = vec![0i64; 16];
        d[0] = 1;
        d[4] = 1;
        d[2] = 1;
        d[6] = -1;
        assert!(integer_cocycle(&g, &d));
        assert!(verify_twist(&h, &known_twist()).unwrap().valid().is_some());
        // 1⊗1 + a⊗a
        let mut d = vec![0i64; 16];
        d[0] = 1;
        d[5] = 1;
        assert!(!integer_cocycle(&g, &d));
    }
}
