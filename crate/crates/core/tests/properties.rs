//! Randomized invariants of the exact kernel.

use proptest::prelude::*;
use smashprime::algebra::Algebra;
use smashprime::catalog::{self, GroupTable};
use smashprime::hopf::{Coalgebra, HopfAlgebra};
use smashprime::linalg::unit_vector;
use smashprime::report::{Report, Status, Violation};
use smashprime::smash::SmashProduct;
use smashprime::{random, suites, Field, Matrix, Scalar, Subspace};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(101).unwrap()),
    ]
}

fn scalar(f: Field, num: i64, den: i64) -> Scalar {
    match f {
        Field::Rational => f.frac(num, den),
        _ => f.from_i64(num),
    }
}

fn matrix(f: Field, rows: usize, cols: usize, data: &[(i64, i64)]) -> Matrix {
    let v = data.iter().take(rows * cols).map(|&(n, d)| scalar(f, n, d)).collect();
    Matrix::from_vec(f, rows, cols, v).unwrap()
}

fn entries(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, 1i64..=4), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in fields(), xs in entries(3)) {
        let [a, b, c] = [0, 1, 2].map(|i| scalar(f, xs[i].0, xs[i].1));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a + &(-&a)).is_zero());
        match a.inv() {
            Some(i) => prop_assert!((&a * &i).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(
        f in fields(), rows in 1usize..5, cols in 1usize..5, data in entries(16)
    ) {
        let m = matrix(f, rows, cols, &data);
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_recovers_consistent_systems(
        f in fields(), rows in 1usize..5, cols in 1usize..5, data in entries(16), x in entries(4)
    ) {
        let m = matrix(f, rows, cols, &data);
        let x0: Vec<Scalar> = x.iter().take(cols).map(|&(n, d)| scalar(f, n, d)).collect();
        let b = m.mul_vec(&x0);
        let sol = m.solve(&b).unwrap();
        prop_assert!(sol.is_some());
        prop_assert_eq!(m.mul_vec(&sol.unwrap()), b);
    }

    #[test]
    fn grassmann_formula(f in fields(), n in 1usize..5, u in entries(12), v in entries(12), ku in 0usize..4, kv in 0usize..4) {
        let vecs = |data: &[(i64, i64)], k: usize| -> Vec<Vec<Scalar>> {
            (0..k).map(|i| (0..n).map(|j| { let (a, b) = data[(i * n + j) % data.len()]; scalar(f, a, b) }).collect()).collect()
        };
        let us = Subspace::span(f, n, &vecs(&u, ku));
        let vs = Subspace::span(f, n, &vecs(&v, kv));
        let sum = us.sum(&vs).unwrap();
        let cap = us.intersect(&vs).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), us.dim() + vs.dim());
        prop_assert!(cap.is_subspace_of(&us) && cap.is_subspace_of(&vs));
        prop_assert!(us.is_subspace_of(&sum) && vs.is_subspace_of(&sum));
    }

    #[test]
    fn kron_mixed_product(f in fields(), d in entries(16)) {
        let a = matrix(f, 2, 2, &d[0..4]);
        let b = matrix(f, 2, 2, &d[4..8]);
        let c = matrix(f, 2, 2, &d[8..12]);
        let e = matrix(f, 2, 2, &d[12..16]);
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&e)), a.mul(&c).kron(&b.mul(&e)));
    }

    #[test]
    fn left_regular_representation_is_multiplicative(seed in any::<u64>(), dim in 1usize..4, xs in entries(6)) {
        let mut rng = random::rng(seed);
        let (_, a) = suites::random_associative_algebra(&mut rng, Field::Rational, dim).unwrap();
        let x: Vec<Scalar> = xs[..dim].iter().map(|&(n, d)| scalar(Field::Rational, n, d)).collect();
        let y: Vec<Scalar> = xs[3..3 + dim].iter().map(|&(n, d)| scalar(Field::Rational, n, d)).collect();
        let xy = a.product(&x, &y);
        prop_assert_eq!(a.left_matrix(&xy), a.left_matrix(&x).mul(&a.left_matrix(&y)));
        prop_assert_eq!(a.right_matrix(&xy), a.right_matrix(&y).mul(&a.right_matrix(&x)));
    }

    #[test]
    fn report_round_trip(
        cmd in "[a-z-]{1,12}", inst in "\\PC{0,16}", seed in proptest::option::of(any::<u64>()),
        check in "\\PC{0,10}", lhs in "\\PC{0,10}", fail in any::<bool>(), vacuous in any::<bool>()
    ) {
        let mut r = Report::new(cmd, inst);
        r.seed = seed;
        r.hypothesis("h", fail);
        r.conclusion = serde_json::json!({ "x": lhs.clone() });
        if fail {
            r.push_violation(Violation::new(check, "loc", lhs, "rhs"));
        } else if vacuous {
            r.mark_vacuous();
        }
        prop_assert_eq!(r.status == Status::Fail, !r.violations.is_empty());
        let line = r.to_json_line();
        let back = Report::from_json_line(&line).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(back.to_json_line(), line);
    }
}

/// Relabels a Hopf algebra along the permutation `p` (new index `p[i]` for
/// old index `i`).
fn permuted(h: &HopfAlgebra, p: &[usize]) -> HopfAlgebra {
    let n = h.dim();
    let f = h.field();
    let a = h.algebra();
    let mut mult = vec![f.zero(); n * n * n];
    let mut unit = vec![f.zero(); n];
    let mut counit = vec![f.zero(); n];
    let mut comult = vec![vec![f.zero(); n * n]; n];
    for i in 0..n {
        unit[p[i]] = a.unit()[i].clone();
        counit[p[i]] = h.counit()[i].clone();
        for j in 0..n {
            for k in 0..n {
                mult[(p[i] * n + p[j]) * n + p[k]] = a.structure_constant(i, j, k).clone();
                comult[p[i]][p[j] * n + p[k]] = h.coalgebra().comult(i)[j * n + k].clone();
            }
        }
    }
    let alg = Algebra::new(f, n, mult, unit, None).unwrap();
    HopfAlgebra::new(alg, Coalgebra::new(n, comult, counit).unwrap(), None).unwrap()
}

fn hopf_catalog() -> Vec<HopfAlgebra> {
    let mut out: Vec<HopfAlgebra> = catalog::hopf_instances().unwrap().into_iter().map(|(_, h)| h).collect();
    out.push(catalog::sweedler_h4(Field::prime(3).unwrap()).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn antipode_is_permutation_equivariant(which in 0usize..16, perm_seed in any::<u64>()) {
        let hs = hopf_catalog();
        let h = &hs[which % hs.len()];
        let n = h.dim();
        let mut p: Vec<usize> = (0..n).collect();
        let mut rng = random::rng(perm_seed);
        rand::seq::SliceRandom::shuffle(p.as_mut_slice(), &mut rng);
        let hp = permuted(h, &p);
        prop_assert!(hp.verify().is_empty());
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(hp.antipode().get(p[i], p[j]), h.antipode().get(i, j));
            }
        }
    }

    #[test]
    fn measuring_on_random_elements(which in 0usize..32, xs in entries(16)) {
        let mas = catalog::module_algebra_instances().unwrap();
        let (_, ma) = &mas[which % mas.len()];
        let f = ma.field();
        let (n, m) = (ma.algebra().dim(), ma.hopf().dim());
        let pick = |off: usize, len: usize| -> Vec<Scalar> {
            (0..len).map(|i| { let (a, b) = xs[(off + i) % xs.len()]; scalar(f, a, b) }).collect()
        };
        let (a, b, h) = (pick(0, n), pick(5, n), pick(10, m));
        let lhs = ma.act(&h, &ma.algebra().product(&a, &b)).unwrap();
        let mut rhs = vec![f.zero(); n];
        for (xy, c) in ma.hopf().comult(&h).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let h1 = unit_vector(f, m, xy / m);
            let h2 = unit_vector(f, m, xy % m);
            let prod = ma.algebra().product(&ma.act(&h1, &a).unwrap(), &ma.act(&h2, &b).unwrap());
            for (r, v) in rhs.iter_mut().zip(&prod) {
                r.add_mul(c, v);
            }
        }
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_smash_products_are_associative(seed in any::<u64>()) {
        for (name, ma) in suites::random_module_algebras(seed, 3).unwrap() {
            let s = SmashProduct::build(ma).unwrap();
            prop_assert!(s.verify().is_empty(), "{}", name);
            prop_assert!(s.bimodule_tensor().certify().is_empty(), "{}", name);
        }
    }

    #[test]
    fn group_orders_and_integrals(which in 0usize..5) {
        let name = ["C2", "C3", "C4", "C2xC2", "S3"][which];
        let g = GroupTable::parse(name).unwrap();
        let h = catalog::group_algebra(Field::Rational, &g).unwrap();
        let w = h.separability_witness().unwrap();
        prop_assert_eq!(w.eps_t, Field::Rational.from_i64(g.order() as i64));
    }
}
