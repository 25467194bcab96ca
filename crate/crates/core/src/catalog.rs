//! Standard instances, built from group tables on every call.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::linalg::{unit_vector, Matrix};
use crate::module_algebra::HModuleAlgebra;
use crate::report::Violation;

/// A finite group as a multiplication table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::input("group table must be a square table of indices"));
        }
        if labels.len() != n {
            return Err(Error::input("one label per group element required"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::input(format!("group table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::input("group table has no identity"))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or_else(|| Error::input(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            name: name.into(),
            table,
            identity,
            inverse,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        GroupTable::new(format!("C{n}"), table, labels).expect("cyclic table is a group")
    }

    /// `C2×C2` with elements `1, a, b, ab` (bitwise xor on indices).
    pub fn klein() -> GroupTable {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        GroupTable::new("C2xC2", table, labels).expect("klein table is a group")
    }

    /// `S3` as permutations of `{0,1,2}` composed right to left.
    pub fn s3() -> GroupTable {
        let perms = s3_permutations();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
        GroupTable::new("S3", table, labels).expect("S3 table is a group")
    }

    pub fn parse(name: &str) -> Result<GroupTable> {
        match name {
            "C2" => Ok(GroupTable::cyclic(2)),
            "C3" => Ok(GroupTable::cyclic(3)),
            "C4" => Ok(GroupTable::cyclic(4)),
            "C2xC2" => Ok(GroupTable::klein()),
            "S3" => Ok(GroupTable::s3()),
            _ => Err(Error::input(format!(
                "unknown group '{name}' (expected C2, C3, C4, C2xC2 or S3)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// The six permutations of `{0,1,2}`, identity first.
pub fn s3_permutations() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

fn ensure_valid(what: &str, violations: Vec<Violation>) -> Result<()> {
    match violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::internal(format!(
            "catalog {what} failed verification: {} at {}",
            v.check, v.location
        ))),
    }
}

fn label_vec(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

/// `k` as a one-dimensional algebra.
pub fn field_algebra(field: Field) -> Algebra {
    diagonal_algebra(field, 1)
}

/// `k^n` with coordinatewise multiplication.
pub fn diagonal_algebra(field: Field, n: usize) -> Algebra {
    Algebra::from_products(field, n, vec![field.one(); n], None, |i, j| {
        if i == j {
            unit_vector(field, n, i)
        } else {
            vec![field.zero(); n]
        }
    })
    .expect("diagonal algebra data is well formed")
}

/// `M_n(k)` with matrix units `E_ij` at index `i*n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let d = n * n;
    let unit = (0..d)
        .map(|k| if k / n == k % n { field.one() } else { field.zero() })
        .collect();
    let labels = (0..d).map(|k| format!("E{}{}", k / n, k % n)).collect();
    Algebra::from_products(field, d, unit, Some(labels), |a, b| {
        if a % n == b / n {
            unit_vector(field, d, (a / n) * n + b % n)
        } else {
            vec![field.zero(); d]
        }
    })
    .expect("matrix algebra data is well formed")
}

/// `k[x]/(x^2)` with basis `1, x`.
pub fn dual_numbers(field: Field) -> Algebra {
    let z = field.zero();
    Algebra::from_products(
        field,
        2,
        vec![field.one(), z.clone()],
        Some(label_vec(&["1", "x"])),
        |i, j| {
            if i + j < 2 {
                unit_vector(field, 2, i + j)
            } else {
                vec![z.clone(), z.clone()]
            }
        },
    )
    .expect("dual numbers data is well formed")
}

/// `k[G]` as an algebra.
pub fn group_ring(field: Field, g: &GroupTable) -> Algebra {
    let n = g.order();
    Algebra::from_products(
        field,
        n,
        unit_vector(field, n, g.identity()),
        Some(g.labels().to_vec()),
        |a, b| unit_vector(field, n, g.mul(a, b)),
    )
    .expect("group ring data is well formed")
}

/// `k[G]` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, g: &GroupTable) -> Result<HopfAlgebra> {
    let n = g.order();
    let algebra = group_ring(field, g);
    let comult = (0..n).map(|x| unit_vector(field, n * n, x * n + x)).collect();
    let coalgebra = Coalgebra::new(n, comult, vec![field.one(); n])?;
    let antipode = Matrix::from_columns(
        field,
        n,
        &(0..n).map(|x| unit_vector(field, n, g.inverse(x))).collect::<Vec<_>>(),
    );
    let h = HopfAlgebra::new(algebra, coalgebra, Some(antipode))?;
    ensure_valid(&format!("{}[{}]", field.name(), g.name()), h.verify())?;
    Ok(h)
}

/// `k^G`: orthogonal idempotents `p_g`, `Δ(p_g) = Σ_{xy=g} p_x⊗p_y`.
pub fn dual_group_algebra(field: Field, g: &GroupTable) -> Result<HopfAlgebra> {
    let n = g.order();
    let labels: Vec<String> = g.labels().iter().map(|l| format!("p_{l}")).collect();
    let algebra = Algebra::from_products(field, n, vec![field.one(); n], Some(labels), |a, b| {
        if a == b {
            unit_vector(field, n, a)
        } else {
            vec![field.zero(); n]
        }
    })?;
    let mut comult = vec![vec![field.zero(); n * n]; n];
    for x in 0..n {
        for y in 0..n {
            comult[g.mul(x, y)][x * n + y] = field.one();
        }
    }
    let counit = unit_vector(field, n, g.identity());
    let coalgebra = Coalgebra::new(n, comult, counit)?;
    let h = HopfAlgebra::new(algebra, coalgebra, None)?;
    ensure_valid(&format!("{}^{}", field.name(), g.name()), h.verify())?;
    Ok(h)
}

/// Sweedler's four-dimensional algebra on `1, g, x, gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::input("Sweedler's algebra needs characteristic other than 2"));
    }
    // index 2b + a holds g^a x^b
    let idx = |a: usize, b: usize| 2 * b + a;
    let algebra = Algebra::from_products(
        field,
        4,
        unit_vector(field, 4, 0),
        Some(label_vec(&["1", "g", "x", "gx"])),
        |i, j| {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d >= 2 {
                return vec![field.zero(); 4];
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            let mut v = vec![field.zero(); 4];
            v[idx((a + c) % 2, b + d)] = field.from_i64(sign);
            v
        },
    )?;
    let t = |terms: &[(usize, usize)]| {
        let mut v = vec![field.zero(); 16];
        for &(l, r) in terms {
            v[l * 4 + r] = field.one();
        }
        v
    };
    let comult = vec![t(&[(0, 0)]), t(&[(1, 1)]), t(&[(2, 0), (1, 2)]), t(&[(3, 1), (0, 3)])];
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let h = HopfAlgebra::new(algebra, Coalgebra::new(4, comult, counit)?, None)?;
    ensure_valid("sweedler4", h.verify())?;
    Ok(h)
}

fn ensure_module(what: &str, ma: HModuleAlgebra) -> Result<HModuleAlgebra> {
    ensure_valid(what, ma.verify_all())?;
    Ok(ma)
}

/// `k^set_size` with `k[G]` permuting coordinates; `action[g][i]` is the image of `i`.
pub fn permutation_module_algebra(
    field: Field,
    g: &GroupTable,
    set_size: usize,
    action: &[Vec<usize>],
) -> Result<HModuleAlgebra> {
    if action.len() != g.order() {
        return Err(Error::input("one permutation per group element required"));
    }
    for p in action {
        let mut seen = vec![false; set_size];
        if p.len() != set_size
            || p.iter()
                .any(|&i| i >= set_size || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::input("action entries must be permutations of the set"));
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let ab = g.mul(a, b);
            if (0..set_size).any(|i| action[ab][i] != action[a][action[b][i]]) {
                return Err(Error::input(format!("action is not a homomorphism at ({a},{b})")));
            }
        }
    }
    let hopf = group_algebra(field, g)?;
    let mats = action
        .iter()
        .map(|p| {
            Matrix::from_columns(
                field,
                set_size,
                &p.iter().map(|&i| unit_vector(field, set_size, i)).collect::<Vec<_>>(),
            )
        })
        .collect();
    let ma = HModuleAlgebra::new(hopf, diagonal_algebra(field, set_size), mats)?;
    ensure_module(&format!("{}^{}-set", field.name(), g.name()), ma)
}

/// `C2` swapping the first two coordinates of `k^n`.
pub fn swap_action(field: Field, n: usize) -> Result<HModuleAlgebra> {
    if n < 2 {
        return Err(Error::input("swap action needs at least two coordinates"));
    }
    let id: Vec<usize> = (0..n).collect();
    let mut swap = id.clone();
    swap.swap(0, 1);
    permutation_module_algebra(field, &GroupTable::cyclic(2), n, &[id, swap])
}

/// `G` acting on `k^G` by left translation.
pub fn translation_action(field: Field, g: &GroupTable) -> Result<HModuleAlgebra> {
    let n = g.order();
    let action: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|x| g.mul(a, x)).collect()).collect();
    permutation_module_algebra(field, g, n, &action)
}

/// `S3` permuting the coordinates of `k^3`.
pub fn s3_natural_action(field: Field) -> Result<HModuleAlgebra> {
    let action: Vec<Vec<usize>> = s3_permutations().iter().map(|p| p.to_vec()).collect();
    permutation_module_algebra(field, &GroupTable::s3(), 3, &action)
}

/// `k[G]` graded by `G` as a `k^G`-module algebra: `p_g · e_h = δ_{g,h} e_h`.
pub fn regular_module_algebra(field: Field, g: &GroupTable) -> Result<HModuleAlgebra> {
    let n = g.order();
    let hopf = dual_group_algebra(field, g)?;
    let mats = (0..n)
        .map(|a| {
            let mut m = Matrix::zeros(field, n, n);
            m.set(a, a, field.one());
            m
        })
        .collect();
    let ma = HModuleAlgebra::new(hopf, group_ring(field, g), mats)?;
    ensure_module(
        &format!("{}[{}] over {}^{}", field.name(), g.name(), field.name(), g.name()),
        ma,
    )
}

/// Sweedler's algebra on `k[u]/(u^2)`: `g·u = −u`, `x·u = 1`, `x·1 = 0`.
pub fn sweedler_dual_numbers(field: Field) -> Result<HModuleAlgebra> {
    let hopf = sweedler_h4(field)?;
    let g = Matrix::from_i64(field, &[&[1, 0], &[0, -1]]);
    let x = Matrix::from_i64(field, &[&[0, 1], &[0, 0]]);
    let gx = g.mul(&x);
    let mats = vec![Matrix::identity(field, 2), g, x, gx];
    let a = dual_numbers(field).with_labels(label_vec(&["1", "u"]));
    ensure_module("sweedler on dual numbers", HModuleAlgebra::new(hopf, a, mats)?)
}

/// `k[x]/(x^2)` with the trivial `k[C2]`-action.
pub fn dual_numbers_trivial(field: Field) -> Result<HModuleAlgebra> {
    let hopf = group_algebra(field, &GroupTable::cyclic(2))?;
    ensure_module(
        "trivial dual numbers",
        HModuleAlgebra::trivial(hopf, dual_numbers(field))?,
    )
}

/// `F2` with the trivial `F2[C2]`-action.
pub fn f2_trivial() -> Result<HModuleAlgebra> {
    let f2 = Field::prime(2)?;
    let hopf = group_algebra(f2, &GroupTable::cyclic(2))?;
    ensure_module("F2 trivial", HModuleAlgebra::trivial(hopf, field_algebra(f2))?)
}

/// Trivial `k[C2]`-action on the given algebra.
pub fn trivial_c2(algebra: Algebra) -> Result<HModuleAlgebra> {
    let hopf = group_algebra(algebra.field(), &GroupTable::cyclic(2))?;
    ensure_module("trivial C2 action", HModuleAlgebra::trivial(hopf, algebra)?)
}

/// Expected failure of a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlTag {
    /// `A` has a nilpotent `H`-stable ideal, so neither `A` nor `A#H` is semiprime.
    AlgebraNotSemiprime,
    /// `H` is not semisimple and `A#H` is not semiprime.
    HopfNotSemisimple,
}

/// Instances whose smash products must be reported as not semiprime.
pub fn negative_controls(field: Field) -> Result<Vec<(String, HModuleAlgebra, ControlTag)>> {
    Ok(vec![
        (
            "ma:dual-numbers-trivial".into(),
            dual_numbers_trivial(field)?,
            ControlTag::AlgebraNotSemiprime,
        ),
        ("ma:F2-trivial".into(), f2_trivial()?, ControlTag::HopfNotSemisimple),
    ])
}

/// Anything a catalog name can refer to.
#[derive(Debug, Clone)]
pub enum Entry {
    Algebra(Algebra),
    Hopf(HopfAlgebra),
    ModuleAlgebra(HModuleAlgebra),
}

impl Entry {
    /// The underlying algebra (for Hopf algebras, the algebra part).
    pub fn algebra(&self) -> &Algebra {
        match self {
            Entry::Algebra(a) => a,
            Entry::Hopf(h) => h.algebra(),
            Entry::ModuleAlgebra(m) => m.algebra(),
        }
    }
}

/// Canonical names, in listing order. Names without a field prefix take the
/// field from the caller.
pub fn names() -> Vec<String> {
    let mut out = Vec::new();
    for g in ["C2", "C3", "C4", "C2xC2", "S3"] {
        out.push(format!("group:Q[{g}]"));
    }
    for g in ["C2", "C3", "C4", "C2xC2", "S3"] {
        out.push(format!("hopf:Q^{g}"));
    }
    out.push("hopf:F2[C2]".into());
    out.push("hopf:F2^C2".into());
    out.push("hopf:sweedler4".into());
    out.extend(
        [
            "alg:k",
            "alg:M2",
            "alg:dual-numbers",
            "ma:swap2",
            "ma:swap3",
            "ma:s3-set",
            "ma:c3-set",
            "ma:c22-set",
            "ma:dualgroup-C2",
            "ma:dualgroup-C3",
            "ma:dualgroup-S3",
            "ma:trivial-Q",
            "ma:trivial-M2",
            "ma:sweedler-dual-numbers",
            "ma:dual-numbers-trivial",
            "ma:F2-trivial",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    out
}

/// Splits `"Q[S3]"` or `"F5^C2"` into a field, a group and whether the dual is meant.
fn parse_group_spec(spec: &str) -> Result<(Field, GroupTable, bool)> {
    if let Some((f, rest)) = spec.split_once('[') {
        let g = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::input(format!("missing ']' in '{spec}'")))?;
        return Ok((Field::from_name(f)?, GroupTable::parse(g)?, false));
    }
    if let Some((f, g)) = spec.split_once('^') {
        return Ok((Field::from_name(f)?, GroupTable::parse(g)?, true));
    }
    Err(Error::input(format!(
        "cannot parse group spec '{spec}' (expected like Q[S3] or Q^C2)"
    )))
}

/// Resolves a `kind:name` catalog name. `field` is used by names that do
/// not fix their own field.
pub fn lookup(name: &str, field: Field) -> Result<Entry> {
    let (kind, rest) = name
        .split_once(':')
        .ok_or_else(|| Error::input(format!("catalog name '{name}' must look like kind:name")))?;
    match kind {
        "group" | "hopf" | "dual" => {
            if kind == "hopf" && rest == "sweedler4" {
                return Ok(Entry::Hopf(sweedler_h4(field)?));
            }
            let (f, g, dual) = parse_group_spec(rest)?;
            let h = if dual {
                dual_group_algebra(f, &g)?
            } else {
                group_algebra(f, &g)?
            };
            Ok(Entry::Hopf(h))
        }
        "alg" => match rest {
            "k" => Ok(Entry::Algebra(field_algebra(field))),
            "M2" => Ok(Entry::Algebra(matrix_algebra(field, 2))),
            "dual-numbers" => Ok(Entry::Algebra(dual_numbers(field))),
            _ => Err(Error::input(format!("unknown catalog algebra '{name}'"))),
        },
        "ma" => {
            let ma = match rest {
                "swap2" => swap_action(field, 2)?,
                "swap3" => swap_action(field, 3)?,
                "s3-set" => s3_natural_action(field)?,
                "c3-set" => translation_action(field, &GroupTable::cyclic(3))?,
                "c22-set" => translation_action(field, &GroupTable::klein())?,
                "trivial-Q" => trivial_c2(field_algebra(field))?,
                "trivial-M2" => trivial_c2(matrix_algebra(field, 2))?,
                "sweedler-dual-numbers" => sweedler_dual_numbers(field)?,
                "dual-numbers-trivial" => dual_numbers_trivial(field)?,
                "F2-trivial" => f2_trivial()?,
                other => match other.strip_prefix("dualgroup-") {
                    Some(g) => regular_module_algebra(field, &GroupTable::parse(g)?)?,
                    None => return Err(Error::input(format!("unknown catalog module algebra '{name}'"))),
                },
            };
            Ok(Entry::ModuleAlgebra(ma))
        }
        _ => Err(Error::input(format!("unknown catalog kind '{kind}' in '{name}'"))),
    }
}

/// Every catalog Hopf algebra over `ℚ` (and the characteristic-2 ones).
pub fn hopf_instances() -> Result<Vec<(String, HopfAlgebra)>> {
    let mut out = Vec::new();
    for name in names()
        .into_iter()
        .filter(|n| n.starts_with("group:") || n.starts_with("hopf:"))
    {
        if let Entry::Hopf(h) = lookup(&name, Field::Rational)? {
            out.push((name, h));
        }
    }
    Ok(out)
}

/// Every catalog module algebra over `ℚ` (plus the `F2` control).
pub fn module_algebra_instances() -> Result<Vec<(String, HModuleAlgebra)>> {
    let mut out = Vec::new();
    for name in names().into_iter().filter(|n| n.starts_with("ma:")) {
        if let Entry::ModuleAlgebra(m) = lookup(&name, Field::Rational)? {
            out.push((name, m));
        }
    }
    Ok(out)
}

/// Sum of all group elements in `k[G]` coordinates.
pub fn group_sum(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.one(); n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::IntegralSide;
    use crate::linalg::Subspace;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn group_tables_are_groups() {
        for name in ["C2", "C3", "C4", "C2xC2", "S3"] {
            let g = GroupTable::parse(name).unwrap();
            assert_eq!(g.name(), name);
        }
        assert!(!GroupTable::s3().is_abelian());
        assert!(GroupTable::klein().is_abelian());
        let bad = GroupTable::new("x", vec![vec![0, 0], vec![0, 1]], label_vec(&["a", "b"]));
        assert!(bad.is_err());
    }

    #[test]
    fn group_algebra_examples() {
        let h = group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        let w = h.separability_witness().unwrap();
        assert_eq!(w.eps_t, q().from_i64(2));
        let s3 = group_algebra(q(), &GroupTable::s3()).unwrap();
        assert_eq!(s3.separability_witness().unwrap().eps_t, q().from_i64(6));
        assert!(s3.algebra().is_semiprime().unwrap());
        assert_eq!(s3.algebra().center().dim(), 3);
        let f2 = group_algebra(Field::prime(2).unwrap(), &GroupTable::cyclic(2)).unwrap();
        assert!(!f2.algebra().is_semiprime().unwrap());
    }

    #[test]
    fn group_integrals_are_the_group_sum() {
        for name in ["C2", "C3", "C4", "C2xC2", "S3"] {
            let g = GroupTable::parse(name).unwrap();
            let h = group_algebra(q(), &g).unwrap();
            let sum = Subspace::span(q(), g.order(), &[group_sum(q(), g.order())]);
            assert_eq!(h.integrals(IntegralSide::Left), sum);
            assert_eq!(h.integrals(IntegralSide::Right), sum);
        }
    }

    #[test]
    fn dual_group_matches_dual_of_group_algebra() {
        for name in ["C2", "C3", "C2xC2", "S3"] {
            let g = GroupTable::parse(name).unwrap();
            let d = group_algebra(q(), &g).unwrap().dual().unwrap();
            let c = dual_group_algebra(q(), &g).unwrap();
            assert_eq!(d.algebra().structure_constants(), c.algebra().structure_constants());
            assert_eq!(d.coalgebra(), c.coalgebra());
            assert_eq!(d.antipode(), c.antipode());
        }
    }

    #[test]
    fn dual_group_semisimplicity() {
        let h = dual_group_algebra(q(), &GroupTable::cyclic(2)).unwrap();
        assert!(h.is_separable() && h.is_cosemisimple().unwrap());
        let f2 = dual_group_algebra(Field::prime(2).unwrap(), &GroupTable::cyclic(2)).unwrap();
        assert!(f2.algebra().is_semiprime().unwrap());
        assert!(!f2.is_cosemisimple().unwrap());
    }

    #[test]
    fn sweedler_is_a_foil() {
        let h = sweedler_h4(q()).unwrap();
        assert!(!h.is_separable());
        assert!(!h.is_cosemisimple().unwrap());
        assert!(sweedler_h4(Field::prime(2).unwrap()).is_err());
        assert!(sweedler_h4(Field::prime(3).unwrap()).is_ok());
    }

    #[test]
    fn permutation_actions() {
        assert!(s3_natural_action(q()).unwrap().verify().is_empty());
        let id = vec![0, 1];
        let bad = permutation_module_algebra(q(), &GroupTable::cyclic(3), 2, &[id.clone(), vec![1, 0], id]);
        assert!(bad.is_err());
    }

    #[test]
    fn regular_module_algebra_invariants() {
        for name in ["C2", "C3", "S3"] {
            let g = GroupTable::parse(name).unwrap();
            let ma = regular_module_algebra(q(), &g).unwrap();
            let e = Subspace::span(q(), g.order(), &[unit_vector(q(), g.order(), g.identity())]);
            assert_eq!(ma.invariants().unwrap(), e);
        }
    }

    #[test]
    fn controls_are_well_formed() {
        for (_, ma, _) in negative_controls(q()).unwrap() {
            assert!(ma.verify_all().is_empty());
        }
    }

    #[test]
    fn every_name_resolves() {
        for name in names() {
            lookup(&name, q()).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(lookup("group:Q[C5]", q()).is_err());
        assert!(lookup("nonsense", q()).is_err());
        assert!(matches!(lookup("hopf:F2[C2]", q()).unwrap(), Entry::Hopf(h) if h.field() == Field::prime(2).unwrap()));
    }
}
