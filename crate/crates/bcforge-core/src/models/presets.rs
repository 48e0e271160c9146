//! Shipped model presets: the completely-solvable and complex-parallelizable
//! Nakamura solvmanifolds, in the lattice cases that change the trivial
//! character set, plus the invariant sub-models (`-Agamma` variants).
//!
//! Which characters restrict trivially to the lattice depends on the
//! imaginary part `b` of the lattice generator: the completely-solvable
//! cases are `b ∈ 2πZ`, `b ∈ π+2πZ`, and `b ∉ πZ`; the parallelizable cases
//! are `b, d ∈ πZ` and its complement. The presets encode those outcomes as
//! finite trivial-weight lists.

use super::{FormType, GeneratorSpec, ModelSpec, OneForm, Weight};
use crate::scalar::Scalar;

fn w2(re_a: (i64, i64), im_a: (i64, i64), re_b: (i64, i64), im_b: (i64, i64)) -> Weight {
    vec![
        Scalar::from_parts(re_a.0, re_a.1, im_a.0, im_a.1),
        Scalar::from_parts(re_b.0, re_b.1, im_b.0, im_b.1),
    ]
}

/// Integer weight pair (u, v) for `e^{u·z1 + v·z̄1}`.
fn wi(u: i64, v: i64) -> Weight {
    w2((u, 1), (0, 1), (v, 1), (0, 1))
}

/// Half-integer weight pair (u/2, v/2).
fn wh(u: i64, v: i64) -> Weight {
    w2((u, 2), (0, 1), (v, 2), (0, 1))
}

fn nakamura_frame() -> Vec<OneForm> {
    let names = ["dz1", "dz2", "dz3", "dz̄1", "dz̄2", "dz̄3"];
    names
        .iter()
        .enumerate()
        .map(|(i, n)| OneForm {
            name: n.to_string(),
            form_type: if i < 3 { FormType::Holo } else { FormType::Anti },
            partner: (i + 3) % 6,
            differential: Vec::new(),
        })
        .collect()
}

fn cs_trivial(case: u8) -> Vec<Weight> {
    // Queried characters are e^{c·(z̄1−z1)/2}; triviality depends on the case.
    match case {
        1 => (-2..=2).map(|c| wh(-c, c)).collect(),
        2 => [-2i64, 0, 2].iter().map(|&c| wh(-c, c)).collect(),
        3 => vec![wi(0, 0)],
        _ => unreachable!(),
    }
}

fn cp_trivial(case: u8) -> Vec<Weight> {
    match case {
        1 => vec![wi(0, 0), wi(1, -1), wi(-1, 1)],
        2 => vec![wi(0, 0)],
        _ => unreachable!(),
    }
}

fn cs_spec(case: u8, a_gamma: bool) -> ModelSpec {
    let alpha = vec![wh(1, 1), wh(-1, -1)];
    let beta = vec![wh(-1, 1), wh(1, -1)];
    let gamma = beta.clone();
    let generators = if a_gamma {
        GeneratorSpec::AGamma {
            oneform_weights: vec![wi(0, 0), wh(1, 1), wh(-1, -1), wi(0, 0), wh(1, 1), wh(-1, -1)],
        }
    } else {
        GeneratorSpec::CGamma {
            linear_pairs: 1,
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
        }
    };
    let suffix = if a_gamma { "-Agamma" } else { "" };
    ModelSpec {
        name: format!("nakamura-cs-case{case}{suffix}"),
        pd_dim: 3,
        oneforms: nakamura_frame(),
        coordinates: vec![0, 3],
        characters: {
            let mut c = alpha;
            c.extend(beta);
            c.extend(gamma);
            c
        },
        trivial_weights: cs_trivial(case),
        generators,
    }
}

fn cp_spec(case: u8, a_gamma: bool) -> ModelSpec {
    let alpha = vec![wi(0, 0), wi(1, 0), wi(-1, 0)];
    let generators = if a_gamma {
        GeneratorSpec::AGamma {
            oneform_weights: vec![wi(0, 0), wi(1, 0), wi(-1, 0), wi(0, 0), wi(0, 1), wi(0, -1)],
        }
    } else {
        GeneratorSpec::CpCGamma {
            alpha: alpha.clone(),
        }
    };
    let tag = if case == 1 { "A" } else { "B" };
    let suffix = if a_gamma { "-Agamma" } else { "" };
    ModelSpec {
        name: format!("nakamura-cp-case{tag}{suffix}"),
        pd_dim: 3,
        oneforms: nakamura_frame(),
        coordinates: vec![0, 3],
        characters: alpha,
        trivial_weights: cp_trivial(case),
        generators,
    }
}

pub fn preset_names() -> Vec<&'static str> {
    vec![
        "nakamura-cs-case1",
        "nakamura-cs-case2",
        "nakamura-cs-case3",
        "nakamura-cp-caseA",
        "nakamura-cp-caseB",
        "nakamura-cs-case1-Agamma",
        "nakamura-cs-case2-Agamma",
        "nakamura-cs-case3-Agamma",
        "nakamura-cp-caseA-Agamma",
        "nakamura-cp-caseB-Agamma",
    ]
}

pub fn preset(name: &str) -> Result<ModelSpec, super::ModelError> {
    let spec = match name {
        "nakamura-cs-case1" => cs_spec(1, false),
        "nakamura-cs-case2" => cs_spec(2, false),
        "nakamura-cs-case3" => cs_spec(3, false),
        "nakamura-cs-case1-Agamma" => cs_spec(1, true),
        "nakamura-cs-case2-Agamma" => cs_spec(2, true),
        "nakamura-cs-case3-Agamma" => cs_spec(3, true),
        "nakamura-cp-caseA" => cp_spec(1, false),
        "nakamura-cp-caseB" => cp_spec(2, false),
        "nakamura-cp-caseA-Agamma" => cp_spec(1, true),
        "nakamura-cp-caseB-Agamma" => cp_spec(2, true),
        _ => return Err(super::ModelError::UnknownPreset(name.to_string())),
    };
    Ok(spec)
}

/// The splitting-type `B` sub-complex of a completely-solvable case, used
/// for sub-complex comparisons.
pub fn cs_b_gamma_spec(case: u8) -> ModelSpec {
    let mut spec = cs_spec(case, false);
    spec.name = format!("nakamura-cs-case{case}-Bgamma");
    if let GeneratorSpec::CGamma {
        linear_pairs,
        alpha,
        beta,
        gamma,
    } = spec.generators
    {
        spec.generators = GeneratorSpec::BGamma {
            linear_pairs,
            alpha,
            beta,
            gamma,
        };
    }
    spec
}

/// The `∧(frame) ⊗ B` sub-complex of a complex-parallelizable case.
pub fn cp_b_gamma_spec(case: u8) -> ModelSpec {
    let mut spec = cp_spec(case, false);
    let tag = if case == 1 { "A" } else { "B" };
    spec.name = format!("nakamura-cp-case{tag}-Bgamma");
    if let GeneratorSpec::CpCGamma { alpha } = spec.generators {
        spec.generators = GeneratorSpec::CpBGamma { alpha };
    }
    spec
}
