//! Acceptance suite: one test per shipped criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them; an assertion failure
//! marks the criterion failed either way).

mod common;

use bcforge_core::complex::BigradedComplex;
use bcforge_core::hodge::LaplacianKind;
use bcforge_core::models::{self, reference, star_closure_check};
use bcforge_core::scalar::Scalar;
use bcforge_core::synthetic;
use common::random_vector;

const MAIN_PRESETS: [&str; 5] = [
    "nakamura-cs-case1",
    "nakamura-cs-case2",
    "nakamura-cs-case3",
    "nakamura-cp-caseA",
    "nakamura-cp-caseB",
];

fn pass(criterion: &str, detail: &str) {
    println!("ACCEPTANCE {criterion}: PASS ({detail})");
}

fn quotient_dim(c: &BigradedComplex, kind: LaplacianKind, p: i64, q: i64) -> usize {
    match kind {
        LaplacianKind::Del => c.h_del(p, q).dimension,
        LaplacianKind::Delbar => c.h_delbar(p, q).dimension,
        LaplacianKind::BottChern => c.h_bott_chern(p, q).dimension,
        LaplacianKind::Aeppli => c.h_aeppli(p, q).dimension,
        LaplacianKind::DeRham => c.betti(p + q),
    }
}

#[test]
fn criterion_01_golden_de_rham() {
    for name in models::preset_names() {
        let built = models::preset(name).unwrap().build().unwrap();
        let want = reference::reference_for(name).unwrap().de_rham;
        let got: Vec<usize> = (0..=6).map(|k| built.complex().betti(k)).collect();
        assert_eq!(got, want.to_vec(), "{name}");
    }
    pass("criterion 01 golden de Rham", "10 presets, exact Betti columns");
}

#[test]
fn criterion_02_golden_bott_chern_tables() {
    for name in ["nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3"] {
        let built = models::preset(name).unwrap().build().unwrap();
        let want = reference::reference_for(name).unwrap().bott_chern.unwrap();
        for (idx, &(p, q)) in reference::BIDEGREES_3.iter().enumerate() {
            assert_eq!(
                built.complex().h_bott_chern(p, q).dimension,
                want[idx],
                "{name} at ({p},{q})"
            );
        }
    }
    // Spot values called out explicitly.
    let c1 = models::preset("nakamura-cs-case1").unwrap().build().unwrap();
    assert_eq!(c1.complex().h_bott_chern(1, 1).dimension, 7);
    assert_eq!(c1.complex().h_bott_chern(2, 2).dimension, 11);
    assert_eq!(c1.complex().h_bott_chern(3, 2).dimension, 5);
    let c2 = models::preset("nakamura-cs-case2").unwrap().build().unwrap();
    assert_eq!(c2.complex().h_bott_chern(2, 1).dimension, 5);
    assert_eq!(c2.complex().h_bott_chern(2, 2).dimension, 7);
    pass("criterion 02 golden Bott-Chern", "three 16-entry columns, exact");
}

#[test]
fn criterion_03_golden_dolbeault_tables() {
    for name in MAIN_PRESETS {
        let built = models::preset(name).unwrap().build().unwrap();
        let want = reference::reference_for(name).unwrap().delbar.unwrap();
        for (idx, &(p, q)) in reference::BIDEGREES_3.iter().enumerate() {
            assert_eq!(
                built.complex().h_delbar(p, q).dimension,
                want[idx],
                "{name} at ({p},{q})"
            );
        }
    }
    let c1 = models::preset("nakamura-cs-case1").unwrap().build().unwrap();
    assert_eq!(c1.complex().h_delbar(1, 1).dimension, 9);
    let c2 = models::preset("nakamura-cs-case2").unwrap().build().unwrap();
    assert_eq!(c2.complex().h_delbar(1, 1).dimension, 5);
    let c3 = models::preset("nakamura-cs-case3").unwrap().build().unwrap();
    assert_eq!(c3.complex().h_delbar(2, 1).dimension, 3);
    pass("criterion 03 golden Dolbeault", "five 16-entry columns, exact");
}

#[test]
fn criterion_04_golden_parallelizable_bott_chern() {
    let case_a = models::preset("nakamura-cp-caseA").unwrap().build().unwrap();
    let case1 = models::preset("nakamura-cs-case1").unwrap().build().unwrap();
    for &(p, q) in reference::BIDEGREES_3.iter() {
        assert_eq!(
            case_a.complex().h_bott_chern(p, q).dimension,
            case1.complex().h_bott_chern(p, q).dimension,
            "case (a) vs case 1 at ({p},{q})"
        );
    }
    let case_b = models::preset("nakamura-cp-caseB").unwrap().build().unwrap();
    let want = reference::reference_for("nakamura-cp-caseB").unwrap().bott_chern.unwrap();
    for (idx, &(p, q)) in reference::BIDEGREES_3.iter().enumerate() {
        assert_eq!(case_b.complex().h_bott_chern(p, q).dimension, want[idx]);
    }
    assert_eq!(case_b.complex().h_bott_chern(1, 1).dimension, 1);
    assert_eq!(case_b.complex().h_bott_chern(2, 2).dimension, 5);
    assert_eq!(case_b.complex().h_bott_chern(3, 2).dimension, 3);
    pass("criterion 04 parallelizable Bott-Chern", "case (a) = case 1; case (b) exact");
}

#[test]
fn criterion_05_ddbar_degrees() {
    for name in MAIN_PRESETS {
        let built = models::preset(name).unwrap().build().unwrap();
        let reference = reference::reference_for(name).unwrap();
        let degrees = built.complex().ddbar_degrees().unwrap();
        for k in 1..=5i64 {
            assert_eq!(
                degrees.get(&k).copied().unwrap_or(0),
                reference.ddbar[(k - 1) as usize],
                "{name} at k={k}"
            );
        }
        assert_eq!(
            built.complex().satisfies_ddbar_lemma().unwrap(),
            reference.satisfies_ddbar,
            "{name}"
        );
    }
    // Among the five models, exactly the third solvable case satisfies it.
    let satisfied: Vec<&str> = MAIN_PRESETS
        .iter()
        .copied()
        .filter(|name| {
            models::preset(name)
                .unwrap()
                .build()
                .unwrap()
                .complex()
                .satisfies_ddbar_lemma()
                .unwrap()
        })
        .collect();
    assert_eq!(satisfied, vec!["nakamura-cs-case3"]);
    pass("criterion 05 ∂∂̄ degrees", "all five degree vectors exact, lemma verdicts exact");
}

#[test]
fn criterion_06_laplacian_oracle_equivalence() {
    let mut instances = 0usize;
    let mut bidegrees_checked = 0usize;
    // All presets.
    for name in models::preset_names() {
        let m = models::preset(name).unwrap().build().unwrap();
        let c = m.complex();
        for kind in [
            LaplacianKind::Del,
            LaplacianKind::Delbar,
            LaplacianKind::BottChern,
            LaplacianKind::Aeppli,
        ] {
            let blocks = m.paired.laplacian_blocks(kind);
            for (p, q) in c.support() {
                assert_eq!(
                    blocks.get(&(p, q)).map_or(0, |b| b.kernel().dim()),
                    quotient_dim(c, kind, p, q),
                    "{name} {kind:?} at ({p},{q})"
                );
                bidegrees_checked += 1;
            }
        }
        for k in c.total_degree_range() {
            assert_eq!(
                m.paired.laplacian_kernel_dim(LaplacianKind::DeRham, k, 0),
                c.betti(k),
                "{name} Δ at {k}"
            );
        }
        instances += 1;
    }
    // 100 seeded random paired complexes.
    for seed in 0..100u64 {
        let m = synthetic::random_paired_model(seed);
        let c = m.complex();
        for kind in [
            LaplacianKind::Del,
            LaplacianKind::Delbar,
            LaplacianKind::BottChern,
            LaplacianKind::Aeppli,
        ] {
            let blocks = m.paired.laplacian_blocks(kind);
            for (p, q) in c.support() {
                assert_eq!(
                    blocks.get(&(p, q)).map_or(0, |b| b.kernel().dim()),
                    quotient_dim(c, kind, p, q),
                    "seed {seed} {kind:?} at ({p},{q})"
                );
                bidegrees_checked += 1;
            }
        }
        for k in c.total_degree_range() {
            assert_eq!(
                m.paired.laplacian_kernel_dim(LaplacianKind::DeRham, k, 0),
                c.betti(k),
                "seed {seed} Δ at {k}"
            );
        }
        instances += 1;
    }
    pass(
        "criterion 06 Laplacian oracle equivalence",
        &format!("{instances} instances, {bidegrees_checked} kernel/quotient comparisons, exact"),
    );
}

#[test]
fn criterion_07_star_duality() {
    let mut pairs = 0usize;
    for name in models::preset_names() {
        let m = models::preset(name).unwrap().build().unwrap();
        assert!(m.paired.star_duality_check().is_empty(), "{name}");
        let n = m.paired.pd_dim();
        let c = m.complex();
        for (p, q) in c.support() {
            assert_eq!(
                c.h_bott_chern(p, q).dimension,
                c.h_aeppli(n - p, n - q).dimension,
                "{name} at ({p},{q})"
            );
            pairs += 1;
        }
    }
    pass("criterion 07 star duality", &format!("{pairs} bidegree pairs, exhaustive"));
}

#[test]
fn criterion_08_transfer_theorems() {
    // Surjectivity under the three hypotheses, on constructed instances.
    let mut surjective_instances = 0usize;
    for seed in 0..100u64 {
        let base = synthetic::random_complex(seed);
        let (ambient, map) = synthetic::adjoin_acyclic_squares(&base, seed + 10_000, 1 + (seed % 3) as usize);
        assert!(map.check_map().is_empty(), "seed {seed}");
        assert!(map.rows_quasi_iso() && map.cols_quasi_iso(), "seed {seed}");
        for (p, q) in ambient.support() {
            assert!(map.condition3_surjective(p, q), "seed {seed} at ({p},{q})");
            let induced = map.induced_bc_map(p, q).unwrap();
            assert!(induced.surjective, "seed {seed}: BC not surjective at ({p},{q})");
        }
        // Total-cohomology bijectivity whenever columns are quasi-isomorphic.
        for k in ambient.total_degree_range() {
            assert!(
                map.induced_total_map(k).unwrap().bijective(),
                "seed {seed}: total map not bijective at {k}"
            );
        }
        surjective_instances += 1;
    }
    // Injectivity for star-closed paired sub-complexes.
    let mut injective_instances = 0usize;
    for seed in 0..100u64 {
        let spec = synthetic::random_paired_model_spec(seed + 20_000);
        let model = spec.build().unwrap();
        let (sub, incl) = synthetic::random_star_closed_submodel(&model, &spec, seed);
        assert!(star_closure_check(&sub, &spec), "seed {seed}");
        for (p, q) in model.complex().support() {
            let induced = incl.induced_bc_map(p, q).unwrap();
            assert!(induced.injective, "seed {seed}: BC not injective at ({p},{q})");
        }
        injective_instances += 1;
    }
    pass(
        "criterion 08 transfer theorems",
        &format!(
            "{surjective_instances} surjectivity + {injective_instances} injectivity instances, zero counterexamples"
        ),
    );
}

#[test]
fn criterion_09_rule_table_agreement() {
    let mut tables = 0usize;
    for name in models::preset_names() {
        let built = models::preset(name).unwrap().build().unwrap();
        let expected = reference::expected_generators(name).unwrap();
        let diff = reference::generator_table_diff(&built, &expected);
        assert!(diff.is_empty(), "{name}: {diff:?}");
        tables += 1;
    }
    pass(
        "criterion 09 rule/table agreement",
        &format!("{tables} generator tables reproduced as exact labeled sets"),
    );
}

#[test]
fn criterion_10_splitting_identity() {
    let mut done = 0usize;
    let mut seed = 0u64;
    while done < 50 {
        seed += 1;
        let base = synthetic::random_complex(seed + 30_000);
        let (ambient, map) = synthetic::adjoin_acyclic_squares(&base, seed + 31_000, 2);
        for (p, q) in base.support().collect::<Vec<_>>() {
            if done >= 50 {
                break;
            }
            if base.dim(p, q) == 0 {
                continue;
            }
            let c_vec = random_vector(seed * 13 + 5, base.dim(p, q));
            let hat = random_vector(seed * 13 + 6, ambient.dim(p, q - 1));
            let j_c = map.block(p, q).mul_vec(&c_vec);
            let db_hat = ambient.delbar(p, q - 1).mul_vec(&hat);
            let phi: Vec<Scalar> = j_c.iter().zip(&db_hat).map(|(a, b)| a + b).collect();
            let split = map.split_modulo_delbar(p, q, &phi).expect("admissible");
            // φ̃ lies in the sub-complex image and the identity is exact.
            assert_eq!(split.phi_tilde, map.block(p, q).mul_vec(&split.phi_tilde_sub));
            let recon: Vec<Scalar> = split
                .phi_tilde
                .iter()
                .zip(ambient.delbar(p, q - 1).mul_vec(&split.phi_hat))
                .map(|(a, b)| a + &b)
                .collect();
            assert_eq!(phi, recon, "seed {seed} at ({p},{q})");
            done += 1;
        }
    }
    pass("criterion 10 splitting identity", &format!("{done} admissible inputs, exact"));
}
