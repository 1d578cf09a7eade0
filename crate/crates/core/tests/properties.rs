mod common;

use common::fixture;
use hgkit::catalog::transitive_groups;
use hgkit::descent::{Descent, GroupAlgebraElement};
use hgkit::field::FieldElement;
use hgkit::hopf::{count_structures, is_hopf_galois, verify_structure};
use hgkit::lattice::{stable_subgroup_records, transitivity_check, Transitivity};
use hgkit::linalg::{self, Q};
use hgkit::{ExtensionDatum, PermGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_transitive() -> Vec<&'static PermGroup> {
    [3, 4, 5, 6]
        .iter()
        .flat_map(|&d| transitive_groups(d).unwrap())
        .filter_map(|e| e.group())
        .filter(|g| g.order() <= 72)
        .collect()
}

fn rat(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn combination(basis: &[GroupAlgebraElement], c: &[(i64, i64)], d: usize) -> GroupAlgebraElement {
    let len = basis[0].to_vector().len();
    let mut v = vec![rat(0, 1); len];
    for (b, &(n, m)) in basis.iter().zip(c) {
        for (x, y) in v.iter_mut().zip(b.to_vector()) {
            *x += rat(n, m) * y;
        }
    }
    GroupAlgebraElement::from_vector(&v, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn structures_are_regular_and_lattice_is_compatible(i in 0usize..64) {
        let groups = small_transitive();
        let g = groups[i % groups.len()];
        let e = ExtensionDatum::from_transitive(g).unwrap();
        let report = count_structures(&e).unwrap();
        prop_assert_eq!(report.total, report.structures.len());
        prop_assert_eq!(report.total > 0, is_hopf_galois(&e).unwrap().verdict.is_hopf_galois());
        for s in &report.structures {
            prop_assert!(verify_structure(&e, &s.n).is_ok());
            for r in stable_subgroup_records(s, &e).unwrap() {
                prop_assert_eq!(r.corresponding_subgroup.order(), e.subgroup().order() * r.subgroup.order());
                prop_assert!(e.lambda_of(e.subgroup()).is_subgroup_of(&r.corresponding_subgroup));
            }
        }
    }

    #[test]
    fn towers_through_subgroups_of_the_stabilizer(i in 0usize..64, j in 0usize..64) {
        let groups = small_transitive();
        let g = groups[i % groups.len()];
        let e = ExtensionDatum::from_transitive(g).unwrap();
        let subs = e.subgroup().all_subgroups().unwrap();
        let h = &subs[j % subs.len()];
        prop_assume!(!h.is_trivial() && h != e.subgroup());
        let t = transitivity_check(&e, h).unwrap();
        prop_assert_ne!(t, Transitivity::Violated);
    }

    #[test]
    fn action_is_linear_and_multiplicative(
        which in 0usize..3,
        a in proptest::collection::vec((-5i64..6, 1i64..4), 4),
        b in proptest::collection::vec((-5i64..6, 1i64..4), 4),
    ) {
        let name = ["cbrt2", "biquadratic", "quartic_radical"][which];
        let (p, e) = fixture(name);
        let structures = count_structures(&e).unwrap().structures;
        let s = &structures[0];
        let dsc = Descent::new(&p, &e, s).unwrap();
        let basis = &dsc.hopf_algebra_basis().basis;
        let d = dsc.d();
        let ha = combination(basis, &a, d);
        let hb = combination(basis, &b, d);
        let sum = GroupAlgebraElement::from_vector(
            &ha.to_vector().iter().zip(hb.to_vector()).map(|(x, y)| x + y).collect::<Vec<_>>(),
            d,
        );
        let ma = dsc.hopf_action_matrix(&ha).unwrap();
        let mb = dsc.hopf_action_matrix(&hb).unwrap();
        let ms = dsc.hopf_action_matrix(&sum).unwrap();
        let added: Vec<Vec<Q>> = ma.iter().zip(&mb).map(|(r, t)| r.iter().zip(t).map(|(x, y)| x + y).collect()).collect();
        prop_assert_eq!(ms, added);
        let prod = dsc.hopf_action_matrix(&dsc.multiply(&ha, &hb)).unwrap();
        prop_assert_eq!(prod, linalg::mat_mul(&ma, &mb));
    }

    #[test]
    fn automorphisms_respect_multiplication(
        which in 0usize..3,
        x in proptest::collection::vec(-4i64..5, 8),
        y in proptest::collection::vec(-4i64..5, 8),
    ) {
        let name = ["cbrt2", "biquadratic", "quartic_radical"][which];
        let (p, e) = fixture(name);
        let f = p.field();
        let n = f.degree();
        let fx = FieldElement { coeffs: x[..n].iter().map(|&v| rat(v, 1)).collect() };
        let fy = FieldElement { coeffs: y[..n].iter().map(|&v| rat(v, 1)).collect() };
        for g in e.group().elements() {
            prop_assert_eq!(p.apply(g, &f.mul(&fx, &fy)), f.mul(&p.apply(g, &fx), &p.apply(g, &fy)));
        }
        if !fx.is_zero() {
            let inv = f.inverse(&fx).unwrap();
            prop_assert_eq!(f.mul(&fx, &inv), f.one());
        }
    }
}
