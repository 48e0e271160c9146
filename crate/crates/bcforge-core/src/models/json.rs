//! The `modelspec-v1` JSON document format, mirroring [`ModelSpec`]
//! field-for-field. Weights serialize as `[re_num, re_den, im_num, im_den]`
//! quadruples per coordinate.

use super::{FormType, Generator, GeneratorSpec, ModelError, ModelSpec, OneForm, Weight};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "modelspec-v1";

type Quad = [i64; 4];

fn scalar_to_quad(s: &Scalar) -> Result<Quad, ModelError> {
    let to_i64 = |b: &BigInt| -> Result<i64, ModelError> {
        i64::try_from(b.clone()).map_err(|_| ModelError::Json("coefficient exceeds i64".into()))
    };
    Ok([
        to_i64(s.re.numer())?,
        to_i64(s.re.denom())?,
        to_i64(s.im.numer())?,
        to_i64(s.im.denom())?,
    ])
}

fn quad_to_scalar(q: &Quad) -> Result<Scalar, ModelError> {
    if q[1] == 0 || q[3] == 0 {
        return Err(ModelError::Json("zero denominator in coefficient".into()));
    }
    Ok(Scalar::new(
        BigRational::new(BigInt::from(q[0]), BigInt::from(q[1])),
        BigRational::new(BigInt::from(q[2]), BigInt::from(q[3])),
    ))
}

fn weight_to_quads(w: &Weight) -> Result<Vec<Quad>, ModelError> {
    w.iter().map(scalar_to_quad).collect()
}

fn quads_to_weight(q: &[Quad]) -> Result<Weight, ModelError> {
    q.iter().map(quad_to_scalar).collect()
}

#[derive(Serialize, Deserialize)]
struct OneFormDoc {
    name: String,
    #[serde(rename = "type")]
    form_type: String,
    partner: usize,
    #[serde(default)]
    differential: Vec<StructureTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct StructureTermDoc {
    coeff: Quad,
    forms: [usize; 2],
}

#[derive(Serialize, Deserialize)]
struct GeneratorDoc {
    weight: Vec<Quad>,
    hol: Vec<usize>,
    anti: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorSpecDoc {
    Explicit {
        explicit: Vec<GeneratorDoc>,
    },
    Rule {
        rule: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        linear_pairs: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Vec<Vec<Quad>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<Vec<Vec<Quad>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gamma: Option<Vec<Vec<Quad>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        oneform_weights: Option<Vec<Vec<Quad>>>,
    },
}

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    schema: String,
    name: String,
    pd_dim: i64,
    oneforms: Vec<OneFormDoc>,
    coordinates: Vec<usize>,
    #[serde(default)]
    characters: Vec<Vec<Quad>>,
    trivial_weights: Vec<Vec<Quad>>,
    generators: GeneratorSpecDoc,
}

pub fn model_to_json(spec: &ModelSpec) -> Result<String, ModelError> {
    let weights = |ws: &[Weight]| -> Result<Vec<Vec<Quad>>, ModelError> {
        ws.iter().map(weight_to_quads).collect()
    };
    let generators = match &spec.generators {
        GeneratorSpec::Explicit(gens) => GeneratorSpecDoc::Explicit {
            explicit: gens
                .iter()
                .map(|g| {
                    Ok(GeneratorDoc {
                        weight: weight_to_quads(&g.weight)?,
                        hol: g.hol.clone(),
                        anti: g.anti.clone(),
                    })
                })
                .collect::<Result<_, ModelError>>()?,
        },
        GeneratorSpec::AGamma { oneform_weights } => GeneratorSpecDoc::Rule {
            rule: "a-gamma".into(),
            linear_pairs: None,
            alpha: None,
            beta: None,
            gamma: None,
            oneform_weights: Some(weights(oneform_weights)?),
        },
        GeneratorSpec::BGamma {
            linear_pairs,
            alpha,
            beta,
            gamma,
        } => GeneratorSpecDoc::Rule {
            rule: "b-gamma".into(),
            linear_pairs: Some(*linear_pairs),
            alpha: Some(weights(alpha)?),
            beta: Some(weights(beta)?),
            gamma: Some(weights(gamma)?),
            oneform_weights: None,
        },
        GeneratorSpec::CGamma {
            linear_pairs,
            alpha,
            beta,
            gamma,
        } => GeneratorSpecDoc::Rule {
            rule: "c-gamma".into(),
            linear_pairs: Some(*linear_pairs),
            alpha: Some(weights(alpha)?),
            beta: Some(weights(beta)?),
            gamma: Some(weights(gamma)?),
            oneform_weights: None,
        },
        GeneratorSpec::CpBGamma { alpha } => GeneratorSpecDoc::Rule {
            rule: "cp-b-gamma".into(),
            linear_pairs: None,
            alpha: Some(weights(alpha)?),
            beta: None,
            gamma: None,
            oneform_weights: None,
        },
        GeneratorSpec::CpCGamma { alpha } => GeneratorSpecDoc::Rule {
            rule: "cp-c-gamma".into(),
            linear_pairs: None,
            alpha: Some(weights(alpha)?),
            beta: None,
            gamma: None,
            oneform_weights: None,
        },
    };
    let doc = ModelDoc {
        schema: SCHEMA.into(),
        name: spec.name.clone(),
        pd_dim: spec.pd_dim,
        oneforms: spec
            .oneforms
            .iter()
            .map(|f| {
                Ok(OneFormDoc {
                    name: f.name.clone(),
                    form_type: match f.form_type {
                        FormType::Holo => "holo".into(),
                        FormType::Anti => "anti".into(),
                    },
                    partner: f.partner,
                    differential: f
                        .differential
                        .iter()
                        .map(|(c, a, b)| {
                            Ok(StructureTermDoc {
                                coeff: scalar_to_quad(c)?,
                                forms: [*a, *b],
                            })
                        })
                        .collect::<Result<_, ModelError>>()?,
                })
            })
            .collect::<Result<_, ModelError>>()?,
        coordinates: spec.coordinates.clone(),
        characters: weights(&spec.characters)?,
        trivial_weights: weights(&spec.trivial_weights)?,
        generators,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| ModelError::Json(e.to_string()))
}

pub fn model_from_json(text: &str) -> Result<ModelSpec, ModelError> {
    let doc: ModelDoc =
        serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(ModelError::Json(format!(
            "unsupported schema `{}` (expected `{SCHEMA}`)",
            doc.schema
        )));
    }
    let weights = |ws: &[Vec<Quad>]| -> Result<Vec<Weight>, ModelError> {
        ws.iter().map(|w| quads_to_weight(w)).collect()
    };
    let generators = match doc.generators {
        GeneratorSpecDoc::Explicit { explicit } => GeneratorSpec::Explicit(
            explicit
                .iter()
                .map(|g| {
                    Ok(Generator {
                        weight: quads_to_weight(&g.weight)?,
                        hol: g.hol.clone(),
                        anti: g.anti.clone(),
                    })
                })
                .collect::<Result<_, ModelError>>()?,
        ),
        GeneratorSpecDoc::Rule {
            rule,
            linear_pairs,
            alpha,
            beta,
            gamma,
            oneform_weights,
        } => {
            let need = |o: Option<Vec<Vec<Quad>>>, what: &str| -> Result<Vec<Weight>, ModelError> {
                weights(&o.ok_or_else(|| ModelError::Json(format!("rule `{rule}` needs `{what}`")))?)
            };
            match rule.as_str() {
                "a-gamma" => GeneratorSpec::AGamma {
                    oneform_weights: need(oneform_weights, "oneform_weights")?,
                },
                "b-gamma" => GeneratorSpec::BGamma {
                    linear_pairs: linear_pairs
                        .ok_or_else(|| ModelError::Json("rule `b-gamma` needs `linear_pairs`".into()))?,
                    alpha: need(alpha, "alpha")?,
                    beta: need(beta, "beta")?,
                    gamma: need(gamma, "gamma")?,
                },
                "c-gamma" => GeneratorSpec::CGamma {
                    linear_pairs: linear_pairs
                        .ok_or_else(|| ModelError::Json("rule `c-gamma` needs `linear_pairs`".into()))?,
                    alpha: need(alpha, "alpha")?,
                    beta: need(beta, "beta")?,
                    gamma: need(gamma, "gamma")?,
                },
                "cp-b-gamma" => GeneratorSpec::CpBGamma {
                    alpha: need(alpha, "alpha")?,
                },
                "cp-c-gamma" => GeneratorSpec::CpCGamma {
                    alpha: need(alpha, "alpha")?,
                },
                other => return Err(ModelError::Json(format!("unknown rule `{other}`"))),
            }
        }
    };
    Ok(ModelSpec {
        name: doc.name,
        pd_dim: doc.pd_dim,
        oneforms: doc
            .oneforms
            .iter()
            .map(|f| {
                Ok(OneForm {
                    name: f.name.clone(),
                    form_type: match f.form_type.as_str() {
                        "holo" => FormType::Holo,
                        "anti" => FormType::Anti,
                        other => {
                            return Err(ModelError::Json(format!("unknown form type `{other}`")))
                        }
                    },
                    partner: f.partner,
                    differential: f
                        .differential
                        .iter()
                        .map(|t| Ok((quad_to_scalar(&t.coeff)?, t.forms[0], t.forms[1])))
                        .collect::<Result<_, ModelError>>()?,
                })
            })
            .collect::<Result<_, ModelError>>()?,
        coordinates: doc.coordinates,
        characters: weights(&doc.characters)?,
        trivial_weights: weights(&doc.trivial_weights)?,
        generators,
    })
}
