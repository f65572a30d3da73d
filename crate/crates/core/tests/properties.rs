mod common;

use proptest::prelude::*;

use stresslab::algebra::{
    artinian_reduction, artinian_reduction_with_order, hochster_betti, koszul_betti, socle_dims, Variant,
};
use stresslab::builder::Builder;
use stresslab::complex::SimplicialComplex;
use stresslab::exactla::{kernel_basis, rat, rref, subspace_equal, QMatrix};
use stresslab::homology::ChainComplexQ;
use stresslab::stress::{
    balancing_residuals, reconstruct_from_squarefree, squarefree_part, stress_space, stress_space_direct,
};
use stresslab::verify::{verify_row_transfer, Instance, Status};

fn matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
            .prop_map(move |rows| QMatrix::from_rows(c, rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()))
    })
}

/// Random complexes on up to 8 vertices, given by facets.
fn complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(1u32..=8, 1..5), 1..8).prop_map(|sets| {
        let facets: Vec<Vec<u32>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let used: std::collections::BTreeSet<u32> = facets.iter().flatten().copied().collect();
        let relabel: std::collections::BTreeMap<u32, u32> = used.iter().enumerate().map(|(i, v)| (*v, i as u32 + 1)).collect();
        let facets: Vec<Vec<u32>> = facets.iter().map(|f| f.iter().map(|v| relabel[v]).collect()).collect();
        SimplicialComplex::from_facets(used.len(), &facets).unwrap()
    })
}

/// Builder spheres with at most 12 vertices.
fn sphere() -> impl Strategy<Value = Builder> {
    prop_oneof![
        (3usize..=6).prop_flat_map(|d| (Just(d), d + 1..=(d + 4).min(12))).prop_map(|(d, n)| Builder::Cyclic { d, n }),
        (3usize..=6).prop_flat_map(|d| (Just(d), d + 1..=10)).prop_map(|(d, n)| Builder::Stacked { d, n }),
        (3usize..=6).prop_map(|d| Builder::Cross { d }),
        (2usize..=6).prop_map(|d| Builder::Simplex { d }),
        (6usize..=8, 0usize..=2, 0u64..1000).prop_map(|(n, stack, seed)| Builder::Random { d: 4, n, stack, seed }),
        (1usize..=3, 1usize..=3, 0u64..50).prop_map(|(k, l, seed)| Builder::JoinSimplices { k, l, seed }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(m.rank() + kernel_basis(&m).dim(), m.cols());
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let once = rref(&m);
        let twice = rref(&once.reduced);
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivot_cols, twice.pivot_cols);
    }

    #[test]
    fn kernel_is_annihilated(m in matrix()) {
        for v in kernel_basis(&m).basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn boundary_squares_to_zero(c in complex()) {
        let cc = ChainComplexQ::new(&c);
        for k in 1..=cc.top_dim() {
            let p = cc.boundary(k - 1).unwrap().mul(cc.boundary(k).unwrap()).unwrap();
            prop_assert!(p.is_zero());
        }
    }

    #[test]
    fn missing_faces_are_first_syzygies(c in complex()) {
        let t = hochster_betti(&c).unwrap();
        let v = c.fgm_vectors();
        for k in 0..=c.n_vertices() {
            prop_assert_eq!(t.get(1, k + 1), v.m(k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dehn_sommerville(b in sphere()) {
        let ec = common::build(&b);
        let v = ec.complex.fgm_vectors();
        let d = ec.d();
        prop_assert_eq!(v.h.iter().sum::<i64>(), v.f[d]);
        for i in 0..=d {
            prop_assert_eq!(v.h[i], v.h[d - i], "{}", b);
        }
    }

    #[test]
    fn betti_symmetry(b in sphere()) {
        let ec = common::build(&b);
        let (n, d) = (ec.n(), ec.d());
        let t = hochster_betti(&ec.complex).unwrap();
        for ((i, j), x) in t.entries() {
            prop_assert!(i <= n - d && j <= n);
            prop_assert_eq!(t.get(n - d - i, n - j), x, "{} at ({}, {})", b, i, j);
        }
    }

    #[test]
    fn row_transfer(b in sphere()) {
        let cert = verify_row_transfer(&Instance::new(b.clone()).unwrap()).unwrap();
        prop_assert_eq!(cert.status, Status::Verified, "{}: {:?}", b, cert.witness);
    }

    #[test]
    fn two_stresses_balance_and_round_trip(b in sphere()) {
        let ec = common::build(&b);
        let s2 = stress_space(&ec, 2);
        for lam in s2.vectors() {
            let w = squarefree_part(&s2, &lam);
            for (_, r) in balancing_residuals(&w, &ec) {
                prop_assert!(r.iter().all(|x| *x == rat(0)));
            }
            prop_assert_eq!(reconstruct_from_squarefree(&w, &ec).unwrap(), lam);
        }
    }

    #[test]
    fn stress_route_matches_literal_kernel(b in sphere(), i in 1usize..=3) {
        let ec = common::build(&b);
        prop_assume!(ec.n() <= 10);
        let fast = stress_space(&ec, i);
        let slow = stress_space_direct(&ec, i);
        prop_assert!(subspace_equal(&fast.space, &slow.space).unwrap());
    }

    #[test]
    fn reduction_ignores_column_order(b in sphere(), seed in 0u64..1000) {
        let ec = common::build(&b);
        let mut order: Vec<usize> = (0..ec.n()).collect();
        // deterministic shuffle from the seed
        let n = order.len();
        for k in (1..n).rev() {
            let j = ((seed.wrapping_mul(6364136223846793005).wrapping_add(k as u64)) >> 33) as usize % (k + 1);
            order.swap(k, j);
        }
        let a = artinian_reduction(&ec, Variant::ThetaEll).unwrap();
        let b2 = artinian_reduction_with_order(&ec, Variant::ThetaEll, &order).unwrap();
        prop_assert_eq!(a.hilbert_function(), b2.hilbert_function());
        prop_assert_eq!(socle_dims(&a), socle_dims(&b2));
        prop_assert_eq!(koszul_betti(&a), koszul_betti(&b2));
    }
}
