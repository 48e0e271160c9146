//! Cohomology functors against brute-force rank arithmetic, the spectral
//! first page, and the Chevalley-Eilenberg test model.

mod common;

use bcforge_core::complex::{BigradedComplex, CohomologyTable, Theory};
use bcforge_core::matrix::Matrix;
use bcforge_core::models;
use bcforge_core::synthetic;
use common::{iwasawa_spec, oracle_dim_intersection, oracle_dim_sum, oracle_kernel_basis, oracle_rank};
use std::collections::BTreeMap;

#[test]
fn zero_complex_has_trivial_everything() {
    let c = BigradedComplex::empty();
    assert!(c.validate().is_empty());
    assert_eq!(c.h_delbar(0, 0).dimension, 0);
    assert_eq!(c.h_del(1, 2).dimension, 0);
    assert_eq!(c.h_de_rham(0).dimension, 0);
    assert_eq!(c.h_bott_chern(0, 0).dimension, 0);
    assert_eq!(c.h_aeppli(0, 0).dimension, 0);
    assert_eq!(c.h_pure_type(0, 0), 0);
    assert_eq!(c.frolicher_e1(0, 0), 0);
    assert!(c.satisfies_ddbar_lemma().unwrap());
}

#[test]
fn single_generator_at_origin() {
    let mut labels = BTreeMap::new();
    labels.insert((0, 0), vec!["1".to_string()]);
    let c = BigradedComplex::new(labels, BTreeMap::new(), BTreeMap::new(), None);
    assert!(c.validate().is_empty());
    assert_eq!(c.h_de_rham(0).dimension, 1);
    assert_eq!(c.h_bott_chern(0, 0).dimension, 1);
    // In a pd-dimension-0 complex (0,0) is also the top bidegree.
    assert_eq!(c.h_aeppli(0, 0).dimension, 1);
    assert_eq!(c.h_pure_type(0, 0), 1);
}

#[test]
fn validate_reports_broken_anticommutation() {
    // Two generators with ∂ and ∂̄ both mapping onto the same target
    // without the sign cancellation.
    let mut labels = BTreeMap::new();
    labels.insert((0, 0), vec!["a".into()]);
    labels.insert((1, 0), vec!["b".into()]);
    labels.insert((0, 1), vec!["c".into()]);
    labels.insert((1, 1), vec!["e".into()]);
    let one = || Matrix::identity(1);
    let mut del = BTreeMap::new();
    let mut delbar = BTreeMap::new();
    del.insert((0, 0), one());
    delbar.insert((0, 0), one());
    del.insert((0, 1), one());
    delbar.insert((1, 0), one()); // should be −1 for anticommutation
    let c = BigradedComplex::new(labels, del, delbar, None);
    let violations = c.validate();
    assert!(violations.iter().any(|v| v.identity.contains("∂∂̄ + ∂̄∂") && v.bidegree == (0, 0)));
}

/// Brute-force dimensions of all functors from the independent rank oracle.
fn brute_force_check(c: &BigradedComplex) {
    for (p, q) in c.extended_support() {
        let dim = c.dim(p, q);
        // Row and column cohomology.
        let h_del = dim - oracle_rank(&c.del(p, q)) - oracle_rank(&c.del(p - 1, q));
        assert_eq!(c.h_del(p, q).dimension, h_del, "h_del at ({p},{q})");
        let h_delbar = dim - oracle_rank(&c.delbar(p, q)) - oracle_rank(&c.delbar(p, q - 1));
        assert_eq!(c.h_delbar(p, q).dimension, h_delbar, "h_delbar at ({p},{q})");
        // Bott-Chern: ker ∂ ∩ ker ∂̄ = kernel of the stacked matrix.
        let stacked = c.del(p, q).vstack(&c.delbar(p, q));
        let zz = dim - oracle_rank(&stacked);
        let bb = oracle_rank(&c.del_delbar(p - 1, q - 1));
        assert_eq!(c.h_bott_chern(p, q).dimension, zz - bb, "h_bc at ({p},{q})");
        // Aeppli.
        let ka = dim - oracle_rank(&c.del_delbar(p, q));
        let ba = oracle_dim_sum(&c.del(p - 1, q), &c.delbar(p, q - 1));
        assert_eq!(c.h_aeppli(p, q).dimension, ka - ba, "h_aeppli at ({p},{q})");
        // Pure type: embed the stacked kernel into Tot and intersect with
        // the image of d.
        let k = p + q;
        let kernel = oracle_kernel_basis(&stacked);
        let tot = c.tot_dim(k);
        let mut kmat = Matrix::zero(tot, kernel.len());
        for (j, v) in kernel.iter().enumerate() {
            let e = c.embed_in_tot(p, q, v);
            for (i, x) in e.into_iter().enumerate() {
                kmat.set(i, j, x);
            }
        }
        let pure = kernel.len() - oracle_dim_intersection(&kmat, &c.d_tot(k - 1));
        assert_eq!(c.h_pure_type(p, q), pure, "h_pure at ({p},{q})");
    }
    // de Rham via ranks of the total differentials.
    for k in c.total_degree_range() {
        let b = c.tot_dim(k) - oracle_rank(&c.d_tot(k)) - oracle_rank(&c.d_tot(k - 1));
        assert_eq!(c.betti(k), b, "betti at {k}");
    }
}

#[test]
fn functors_match_brute_force_on_random_complexes() {
    for seed in 0..25u64 {
        let c = synthetic::random_complex(seed);
        assert!(c.validate().is_empty(), "seed {seed}");
        brute_force_check(&c);
    }
}

#[test]
fn functors_match_brute_force_on_presets() {
    for name in ["nakamura-cs-case2", "nakamura-cp-caseB", "nakamura-cs-case3-Agamma"] {
        let m = models::preset(name).unwrap().build().unwrap();
        brute_force_check(m.complex());
    }
}

#[test]
fn e1_page_equals_column_cohomology() {
    for seed in 0..15u64 {
        let c = synthetic::random_complex(seed + 300);
        for (p, q) in c.extended_support() {
            assert_eq!(
                c.frolicher_e1(p, q),
                c.h_delbar(p, q).dimension,
                "seed {seed} at ({p},{q})"
            );
        }
    }
    for name in models::preset_names() {
        let m = models::preset(name).unwrap().build().unwrap();
        let c = m.complex();
        for (p, q) in c.support() {
            assert_eq!(c.frolicher_e1(p, q), c.h_delbar(p, q).dimension, "{name} ({p},{q})");
        }
    }
}

#[test]
fn conjugation_symmetry_on_presets() {
    for name in models::preset_names() {
        let m = models::preset(name).unwrap().build().unwrap();
        let c = m.complex();
        assert!(c.has_conjugation(), "{name} should be conjugation-closed");
        for (p, q) in c.support() {
            assert_eq!(c.h_del(p, q).dimension, c.h_delbar(q, p).dimension, "{name}");
            assert_eq!(
                c.h_bott_chern(p, q).dimension,
                c.h_bott_chern(q, p).dimension,
                "{name}"
            );
            assert_eq!(c.h_aeppli(p, q).dimension, c.h_aeppli(q, p).dimension, "{name}");
        }
    }
}

#[test]
fn frolicher_inequality_chain_on_presets() {
    for name in models::preset_names() {
        let m = models::preset(name).unwrap().build().unwrap();
        let c = m.complex();
        let table = CohomologyTable::compute(
            c,
            &[Theory::Del, Theory::Delbar, Theory::BottChern, Theory::Aeppli, Theory::DeRham],
        )
        .unwrap();
        for k in c.total_degree_range() {
            let bc_a = table.total(Theory::BottChern, k).unwrap() + table.total(Theory::Aeppli, k).unwrap();
            let dol = table.total(Theory::Del, k).unwrap() + table.total(Theory::Delbar, k).unwrap();
            let b2 = 2 * c.betti(k);
            assert!(bc_a >= dol && dol >= b2, "{name} degree {k}: {bc_a} ≥ {dol} ≥ {b2}");
        }
    }
}

#[test]
fn bott_chern_at_corners_is_plain_intersection() {
    // At bidegrees with no incoming ∂∂̄ the quotient is the full kernel
    // intersection.
    let m = models::preset("nakamura-cs-case1").unwrap().build().unwrap();
    let c = m.complex();
    for (p, q) in c.support() {
        if c.dim(p - 1, q - 1) == 0 {
            let z = c.del(p, q).kernel().intersection(&c.delbar(p, q).kernel());
            assert_eq!(c.h_bott_chern(p, q).dimension, z.dim());
        }
    }
}

#[test]
fn representatives_are_independent_cocycles() {
    let m = models::preset("nakamura-cs-case1").unwrap().build().unwrap();
    let c = m.complex();
    for (p, q) in c.support() {
        let res = c.h_bott_chern(p, q);
        assert_eq!(res.representatives.dim(), res.dimension);
        for v in res.representatives.basis_vectors() {
            assert!(c.del(p, q).mul_vec(&v).iter().all(|x| x.is_zero()));
            assert!(c.delbar(p, q).mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        // No representative class is a boundary.
        let bnd = c.del_delbar(p - 1, q - 1).column_space();
        assert_eq!(res.representatives.intersection(&bnd).dim(), 0);
    }
}

#[test]
fn iwasawa_model_cohomology() {
    let spec = iwasawa_spec();
    let m = spec.build().unwrap();
    let c = m.complex();
    assert!(c.validate().is_empty());
    // Betti numbers of the Iwasawa manifold.
    let betti: Vec<usize> = (0..=6).map(|k| c.betti(k)).collect();
    assert_eq!(betti, vec![1, 4, 8, 10, 8, 4, 1]);
    // Hodge numbers in degree one.
    assert_eq!(c.h_delbar(1, 0).dimension, 3);
    assert_eq!(c.h_delbar(0, 1).dimension, 2);
    assert_eq!(c.h_del(1, 0).dimension, 2);
    assert_eq!(c.h_del(0, 1).dimension, 3);
    // Bott-Chern in degree one: the two closed holomorphic forms.
    assert_eq!(c.h_bott_chern(1, 0).dimension, 2);
    assert_eq!(c.h_bott_chern(0, 1).dimension, 2);
    // The Iwasawa manifold does not satisfy the ∂∂̄-lemma.
    assert!(!c.satisfies_ddbar_lemma().unwrap());
    brute_force_check(c);
}

#[test]
fn table_totals_sum_antidiagonals() {
    let m = models::preset("nakamura-cs-case2").unwrap().build().unwrap();
    let table = CohomologyTable::compute(m.complex(), &Theory::all()).unwrap();
    for k in 0..=6i64 {
        let total: usize = table.bigraded[&Theory::BottChern]
            .iter()
            .filter(|(&(p, q), _)| p + q == k)
            .map(|(_, &d)| d)
            .sum();
        assert_eq!(table.total(Theory::BottChern, k), Some(total));
    }
    // ddbar degrees recorded for the middle degrees.
    assert_eq!(table.ddbar.get(&2), Some(&4));
    assert_eq!(table.ddbar.get(&3), Some(&8));
}

#[test]
fn pure_type_sums_recover_betti_numbers_on_presets() {
    // The de Rham cohomology of every preset decomposes into pure-type
    // pieces: the antidiagonal sums of the subquotient dimensions equal
    // the Betti numbers.
    for name in ["nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3", "nakamura-cp-caseB"] {
        let m = models::preset(name).unwrap().build().unwrap();
        let c = m.complex();
        for k in c.total_degree_range() {
            let sum: usize = (0..=k.max(0))
                .map(|p| c.h_pure_type(p, k - p))
                .sum();
            assert_eq!(sum, c.betti(k), "{name} degree {k}");
        }
    }
}

#[test]
fn total_differential_squares_to_zero_iff_valid() {
    for seed in 40..50u64 {
        let c = synthetic::random_complex(seed);
        assert!(c.validate().is_empty());
        for k in c.total_degree_range() {
            assert!(c.d_tot(k + 1).mul(&c.d_tot(k)).is_zero(), "seed {seed} k={k}");
        }
    }
    // Conversely the broken complex has d² ≠ 0 on Tot.
    let mut labels = BTreeMap::new();
    labels.insert((0, 0), vec!["a".into()]);
    labels.insert((1, 0), vec!["b".into()]);
    labels.insert((0, 1), vec!["c".into()]);
    labels.insert((1, 1), vec!["e".into()]);
    let one = || Matrix::identity(1);
    let mut del = BTreeMap::new();
    let mut delbar = BTreeMap::new();
    del.insert((0, 0), one());
    delbar.insert((0, 0), one());
    del.insert((0, 1), one());
    delbar.insert((1, 0), one());
    let broken = BigradedComplex::new(labels, del, delbar, None);
    assert!(!broken.validate().is_empty());
    assert!(!broken.d_tot(1).mul(&broken.d_tot(0)).is_zero());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// The first spectral page always reproduces column cohomology.
        #[test]
        fn e1_identification(seed in 0u64..10_000) {
            let c = synthetic::random_complex(seed);
            for (p, q) in c.extended_support() {
                prop_assert_eq!(c.frolicher_e1(p, q), c.h_delbar(p, q).dimension);
            }
        }

        /// The inequality chain between the five theories holds degreewise
        /// on every valid instance.
        #[test]
        fn inequality_chain(seed in 0u64..10_000) {
            let c = synthetic::random_complex(seed);
            for k in c.total_degree_range() {
                let mut bc_a = 0usize;
                let mut dol = 0usize;
                for (p, q) in c.extended_support() {
                    if p + q != k {
                        continue;
                    }
                    bc_a += c.h_bott_chern(p, q).dimension + c.h_aeppli(p, q).dimension;
                    dol += c.h_del(p, q).dimension + c.h_delbar(p, q).dimension;
                }
                let b2 = 2 * c.betti(k);
                prop_assert!(bc_a >= dol && dol >= b2);
            }
        }

        /// ∂∂̄ degrees are nonnegative on every valid instance.
        #[test]
        fn ddbar_degrees_nonnegative(seed in 0u64..10_000) {
            let c = synthetic::random_complex(seed);
            prop_assert!(c.ddbar_degrees().is_ok());
        }
    }
}

/// Rebuilds a complex with every bidegree shifted; all functors must be
/// shift-equivariant, which exercises negative bidegrees throughout.
#[test]
fn functors_are_shift_equivariant() {
    for seed in 0..8u64 {
        let c = synthetic::random_complex(seed + 900);
        let (dp, dq) = (-2i64, -3i64);
        let mut labels = BTreeMap::new();
        let mut del = BTreeMap::new();
        let mut delbar = BTreeMap::new();
        for (p, q) in c.support() {
            labels.insert((p + dp, q + dq), c.labels_at(p, q).to_vec());
            del.insert((p + dp, q + dq), c.del(p, q));
            delbar.insert((p + dp, q + dq), c.delbar(p, q));
        }
        let shifted = BigradedComplex::new(labels, del, delbar, None);
        assert!(shifted.validate().is_empty(), "seed {seed}");
        for (p, q) in c.extended_support() {
            assert_eq!(
                c.h_bott_chern(p, q).dimension,
                shifted.h_bott_chern(p + dp, q + dq).dimension,
                "bc seed {seed} ({p},{q})"
            );
            assert_eq!(
                c.h_aeppli(p, q).dimension,
                shifted.h_aeppli(p + dp, q + dq).dimension
            );
            assert_eq!(c.h_pure_type(p, q), shifted.h_pure_type(p + dp, q + dq));
            assert_eq!(c.frolicher_e1(p, q), shifted.frolicher_e1(p + dp, q + dq));
        }
        for k in c.total_degree_range() {
            assert_eq!(c.betti(k), shifted.betti(k + dp + dq), "dr seed {seed} k={k}");
        }
    }
}

/// Deep fuzz, opt-in: `cargo test -- --ignored`.
#[test]
#[ignore = "long-running fuzz; run explicitly"]
fn deep_fuzz_functors_against_brute_force() {
    for seed in 0..300u64 {
        let c = synthetic::random_complex(seed * 7 + 3);
        assert!(c.validate().is_empty(), "seed {seed}");
        brute_force_check(&c);
    }
}
