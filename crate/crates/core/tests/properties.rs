use kahler_core::construct::{
    albanese_transport, build_mu, graph_subgroup, semidirect_mul, FiniteGroup, S3Element, SemidirectElement,
};
use kahler_core::exact::{charpoly, companion, rank, snf, FgAbelianGroup, IntMatrix, IntPolynomial};
use kahler_core::galois::{certify_irreducible, certify_symmetric_group, cycle_type_mod_p, Certification, Reduction};
use kahler_core::hom::{check_even_rank, realize_free_hom, verify_plan, AbelianHom, Parity};
use kahler_core::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |e| {
        IntMatrix::new(rows, cols, e.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn any_matrix(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| matrix(r, c, bound))
}

fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    (1..=max_deg).prop_flat_map(move |d| {
        prop::collection::vec(-bound..=bound, d).prop_map(|mut c| {
            c.push(1);
            IntPolynomial::from_i64(&c)
        })
    })
}

fn vec_of(k: usize, bound: i64) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-bound..=bound, k).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn semidirect(k: usize) -> impl Strategy<Value = SemidirectElement> {
    (vec_of(k, 9), vec_of(k, 9), vec_of(k, 9), 0..6usize)
        .prop_map(|(a, b, c, s)| SemidirectElement::new([a, b, c], S3Element::ALL[s]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_reproduces_and_divides(a in any_matrix(6, 20)) {
        let s = snf(&a);
        prop_assert!(s.verify(&a));
        prop_assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        prop_assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        let nz = s.nonzero_diag();
        for w in nz.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(s.diag.iter().all(|d| d >= &BigInt::zero()));
    }

    #[test]
    fn rank_is_transpose_invariant(a in any_matrix(6, 3)) {
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn companion_charpoly_roundtrip(p in monic(8, 50)) {
        prop_assert_eq!(charpoly(&companion(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn cayley_hamilton(a in (1..=6usize).prop_flat_map(|n| matrix(n, n, 30))) {
        let p = charpoly(&a).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(a.rows()));
        prop_assert!(a.eval_poly(&p).unwrap().is_zero());
    }

    #[test]
    fn cycle_type_parts_sum_to_degree(p in monic(8, 20), qi in 0..10usize) {
        let q = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29][qi];
        if let Reduction::Unramified(ct) = cycle_type_mod_p(&p, q).unwrap() {
            prop_assert_eq!(ct.parts.iter().sum::<usize>(), p.degree().unwrap());
            prop_assert!(ct.parts.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn certificates_reverify(p in monic(6, 5)) {
        if let Certification::Certified(c) = certify_irreducible(&p, 200).unwrap() {
            prop_assert!(c.verify(&p));
        }
        if let Certification::Certified(c) = certify_symmetric_group(&p, 200).unwrap() {
            prop_assert!(c.verify(&p));
        }
    }

    #[test]
    fn semidirect_is_associative(x in semidirect(2), y in semidirect(2), z in semidirect(2)) {
        let l = semidirect_mul(&semidirect_mul(&x, &y).unwrap(), &z).unwrap();
        let r = semidirect_mul(&x, &semidirect_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(semidirect_mul(&x, &x.inverse()).unwrap(), SemidirectElement::identity(2));
    }

    #[test]
    fn mu_is_a_homomorphism(m in matrix(2, 2, 9), x in vec_of(4, 20), y in vec_of(4, 20)) {
        let mu = build_mu(&m).unwrap();
        let sum: Vec<BigInt> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let lhs = mu.apply(&sum).unwrap();
        let rhs = semidirect_mul(&mu.apply(&x).unwrap(), &mu.apply(&y).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(lhs.twist.is_identity());
        prop_assert_eq!(lhs.flat_translation(), mu.translation_matrix().mul_vec(&sum).unwrap());
    }

    #[test]
    fn transport_recovers_matrix(m in prop_oneof![matrix(2, 2, 20), matrix(4, 4, 20)]) {
        let t = albanese_transport(&m).unwrap();
        prop_assert_eq!(&t.composite, &m);
        prop_assert!(t.model.decomposition_holds().unwrap());
        prop_assert!(t.model.sigma_is_fixed());
    }

    #[test]
    fn graph_index_is_target_order(n in 1..=12usize, gens in prop::collection::vec(0..1000usize, 0..4)) {
        let c = FiniteGroup::cyclic(n).unwrap();
        let h2: Vec<usize> = gens.iter().map(|g| g % n).collect();
        let g = graph_subgroup(&FgAbelianGroup::free(h2.len()), &c, &h2).unwrap();
        prop_assert_eq!(g.index, n);
    }

    #[test]
    fn even_rank_homs_are_realized(a in matrix(4, 2, 5), b in matrix(2, 4, 5), pad in 0..2usize) {
        // a * b has rank <= 2; padding a zero row pair keeps the target even.
        let mut m = a.mul(&b).unwrap();
        if pad == 1 {
            m = m.vstack(&IntMatrix::zeros(2, 4)).unwrap();
        }
        let f = AbelianHom::free(&m);
        let report = check_even_rank(&f).unwrap();
        match realize_free_hom(&f) {
            Ok(plan) => {
                prop_assert_eq!(report.parity, Parity::Even);
                prop_assert!(verify_plan(&plan, &f).unwrap());
                let d = &plan.basis_change;
                prop_assert_eq!(d.u_inv.mul(&d.d).unwrap().mul(&d.v_inv).unwrap(), m);
                let degree: BigInt = d.nonzero_diag().iter().product();
                prop_assert!(degree >= BigInt::one());
            }
            Err(Error::OddRankObstruction { image, .. }) => {
                prop_assert_eq!(report.parity, Parity::Odd);
                prop_assert_eq!(image, 1);
            }
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }
}
