//! Declarative model descriptions and the builder that turns them into
//! bigraded complexes with pairing and conjugation.
//!
//! A model is generated by monomials `e^{w·ζ} · ω_I ∧ ω̄_K`: a character
//! weight vector `w` over the flagged coordinate one-forms together with a
//! wedge monomial in the declared one-forms. The differential of a
//! generator combines the character derivative `Σ w_c dζ_c ∧ (·)` with the
//! structure expressions `d(ω_j) = Σ c · ω_a ∧ ω_b` of its factors; for the
//! solvmanifold presets all structure expressions vanish and every
//! differential flows through the weights.
//!
//! Generator sets come either as explicit lists or from one of five rules
//! (`a-gamma`, `b-gamma`, `c-gamma`, `cp-b-gamma`, `cp-c-gamma`) driven by
//! per-index character weights. Whether a character restricts trivially to
//! the lattice is not decided arithmetically: the finite `trivial_weights`
//! list supplies the answers, one per relevant weight.

mod json;
mod presets;
pub mod reference;

pub use json::{model_from_json, model_to_json};
pub use presets::{cp_b_gamma_spec, cs_b_gamma_spec, preset, preset_names};

use crate::complex::{Bidegree, BigradedComplex};
use crate::hodge::PairedComplex;
use crate::matrix::Matrix;
use crate::morphisms::ComplexMap;
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// (1,0)-forms are holomorphic, (0,1)-forms antiholomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormType {
    Holo,
    Anti,
}

/// One declared generator one-form of the model frame.
#[derive(Clone, Debug)]
pub struct OneForm {
    pub name: String,
    pub form_type: FormType,
    /// Index of the conjugate partner in the one-form list.
    pub partner: usize,
    /// Structure expression `d(self) = Σ coeff · ω_a ∧ ω_b`.
    pub differential: Vec<(Scalar, usize, usize)>,
}

/// A character weight vector, one entry per flagged coordinate.
pub type Weight = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Generator {
    pub weight: Weight,
    /// Holomorphic one-form indices, ascending.
    pub hol: Vec<usize>,
    /// Antiholomorphic one-form indices, ascending.
    pub anti: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum GeneratorSpec {
    Explicit(Vec<Generator>),
    /// Invariant-form rule: plain monomials `ω_S` kept when the product of
    /// the per-one-form characters over `S` restricts trivially.
    AGamma { oneform_weights: Vec<Weight> },
    /// Splitting-type rule over `linear_pairs` coordinate pairs and the
    /// remaining nilpotent pairs with characters `α_j` and unitary parts
    /// `β_j`, `γ_j`.
    BGamma {
        linear_pairs: usize,
        alpha: Vec<Weight>,
        beta: Vec<Weight>,
        gamma: Vec<Weight>,
    },
    /// `b-gamma` plus its conjugate.
    CGamma {
        linear_pairs: usize,
        alpha: Vec<Weight>,
        beta: Vec<Weight>,
        gamma: Vec<Weight>,
    },
    /// Complex-parallelizable rule: `∧^p(frame) ⊗ B^q` with per-index
    /// holomorphic characters `α_i`.
    CpBGamma { alpha: Vec<Weight> },
    /// `cp-b-gamma` plus its conjugate.
    CpCGamma { alpha: Vec<Weight> },
}

#[derive(Clone, Debug)]
pub struct ModelSpec {
    pub name: String,
    /// PD-dimension: the complex dimension `n`; one-forms number `2n`.
    pub pd_dim: i64,
    pub oneforms: Vec<OneForm>,
    /// Indices of one-forms flagged as exact coordinate differentials; the
    /// flagged forms carry the character derivatives and must be d-closed.
    pub coordinates: Vec<usize>,
    /// The character weights the model mentions (informational).
    pub characters: Vec<Weight>,
    /// Finite set of weights whose characters restrict trivially to the
    /// lattice; must be closed under negation and conjugation-swap.
    pub trivial_weights: Vec<Weight>,
    pub generators: GeneratorSpec,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("model `{0}`: {1}")]
    BadSpec(String, String),
    #[error("model `{name}`: differential of `{generator}` leaves the generator set (missing `{missing}`)")]
    NotClosed {
        name: String,
        generator: String,
        missing: String,
    },
    #[error("model `{0}`: built complex fails validation: {1}")]
    Invalid(String, String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("sub-complex generator `{0}` does not resolve in the ambient model")]
    Unresolvable(String),
    #[error("model json: {0}")]
    Json(String),
}

/// A built model: the paired complex plus its labeled generators.
#[derive(Clone)]
pub struct BuiltModel {
    pub name: String,
    pub paired: PairedComplex,
    pub generators: BTreeMap<Bidegree, Vec<Generator>>,
    /// Positions of the flagged coordinates inside the one-form list.
    pub coordinates: Vec<usize>,
    oneform_names: Vec<String>,
    hol_positions: BTreeMap<usize, usize>,
    anti_positions: BTreeMap<usize, usize>,
}

// ----- weight helpers -----

pub fn weight_zero(len: usize) -> Weight {
    vec![Scalar::zero(); len]
}

pub fn weight_add(a: &Weight, b: &Weight) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn weight_neg(a: &Weight) -> Weight {
    a.iter().map(|x| -x).collect()
}

pub fn weight_is_zero(a: &Weight) -> bool {
    a.iter().all(Scalar::is_zero)
}

impl ModelSpec {
    fn hol_indices(&self) -> Vec<usize> {
        (0..self.oneforms.len())
            .filter(|&i| self.oneforms[i].form_type == FormType::Holo)
            .collect()
    }

    fn anti_indices(&self) -> Vec<usize> {
        (0..self.oneforms.len())
            .filter(|&i| self.oneforms[i].form_type == FormType::Anti)
            .collect()
    }

    /// Conjugation-swap of a weight: the character `e^{Σ w_c ζ_c}` maps to
    /// `e^{Σ conj(w_c) ζ̄_c}`, permuting coordinates to their partners.
    pub fn weight_conj(&self, w: &Weight) -> Weight {
        let mut out = weight_zero(self.coordinates.len());
        for (pos, &of) in self.coordinates.iter().enumerate() {
            let partner = self.oneforms[of].partner;
            let ppos = self
                .coordinates
                .iter()
                .position(|&c| c == partner)
                .expect("coordinates not closed under conjugation");
            out[ppos] = w[pos].conj();
        }
        out
    }

    pub fn is_trivial(&self, w: &Weight) -> bool {
        self.trivial_weights.iter().any(|t| t == w)
    }

    fn check(&self) -> Result<(), ModelError> {
        let bad = |msg: String| Err(ModelError::BadSpec(self.name.clone(), msg));
        let n = self.oneforms.len();
        if n as i64 != 2 * self.pd_dim {
            return bad(format!("expected {} one-forms, found {n}", 2 * self.pd_dim));
        }
        for (i, f) in self.oneforms.iter().enumerate() {
            if f.partner >= n || self.oneforms[f.partner].partner != i {
                return bad(format!("conjugate partner of `{}` is not an involution", f.name));
            }
            if i != f.partner && self.oneforms[f.partner].form_type == f.form_type {
                return bad(format!("`{}` and its partner share a bidegree type", f.name));
            }
            for &(_, a, b) in &f.differential {
                if a >= n || b >= n {
                    return bad(format!("structure expression of `{}` references a missing form", f.name));
                }
            }
        }
        for &c in &self.coordinates {
            if c >= n {
                return bad("flagged coordinate index out of range".into());
            }
            if !self.oneforms[c].differential.is_empty() {
                return bad(format!(
                    "flagged coordinate `{}` must be d-closed",
                    self.oneforms[c].name
                ));
            }
            if !self.coordinates.contains(&self.oneforms[c].partner) {
                return bad("flagged coordinates must be closed under conjugation".into());
            }
        }
        for w in &self.trivial_weights {
            if w.len() != self.coordinates.len() {
                return bad("trivial weight length mismatch".into());
            }
            if !self.trivial_weights.contains(&weight_neg(w)) {
                return bad("trivial weights not closed under negation".into());
            }
            if !self.trivial_weights.contains(&self.weight_conj(w)) {
                return bad("trivial weights not closed under conjugation-swap".into());
            }
        }
        Ok(())
    }

    /// Expands the generator rule into the explicit generator set.
    fn expand_generators(&self) -> Result<BTreeSet<Generator>, ModelError> {
        let bad = |msg: String| Err(ModelError::BadSpec(self.name.clone(), msg));
        let hol = self.hol_indices();
        let wlen = self.coordinates.len();
        let mut out = BTreeSet::new();
        match &self.generators {
            GeneratorSpec::Explicit(gens) => {
                for g in gens {
                    if g.weight.len() != wlen {
                        return bad("explicit generator weight length mismatch".into());
                    }
                    let mut g = g.clone();
                    g.hol.sort_unstable();
                    g.anti.sort_unstable();
                    out.insert(g);
                }
            }
            GeneratorSpec::AGamma { oneform_weights } => {
                if oneform_weights.len() != self.oneforms.len() {
                    return bad("a-gamma needs one weight per one-form".into());
                }
                for mask in 0u64..(1 << self.oneforms.len()) {
                    let mut w = weight_zero(wlen);
                    let mut hs = Vec::new();
                    let mut as_ = Vec::new();
                    for (i, ow) in oneform_weights.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            w = weight_add(&w, ow);
                            match self.oneforms[i].form_type {
                                FormType::Holo => hs.push(i),
                                FormType::Anti => as_.push(i),
                            }
                        }
                    }
                    if self.is_trivial(&w) {
                        out.insert(Generator {
                            weight: weight_zero(wlen),
                            hol: hs,
                            anti: as_,
                        });
                    }
                }
            }
            GeneratorSpec::BGamma {
                linear_pairs,
                alpha,
                beta,
                gamma,
            }
            | GeneratorSpec::CGamma {
                linear_pairs,
                alpha,
                beta,
                gamma,
            } => {
                let conj_too = matches!(self.generators, GeneratorSpec::CGamma { .. });
                let m = hol.len() - linear_pairs;
                if alpha.len() != m || beta.len() != m || gamma.len() != m {
                    return bad("b/c-gamma needs α, β, γ for every nilpotent index".into());
                }
                let lin_hol = &hol[..*linear_pairs];
                let nil_hol = &hol[*linear_pairs..];
                for i_mask in 0u64..(1 << linear_pairs) {
                    for j_mask in 0u64..(1 << m) {
                        for k_mask in 0u64..(1 << linear_pairs) {
                            for l_mask in 0u64..(1 << m) {
                                let mut cond = weight_zero(wlen);
                                let mut w = weight_zero(wlen);
                                let mut hs = Vec::new();
                                let mut as_ = Vec::new();
                                for (t, &f) in lin_hol.iter().enumerate() {
                                    if i_mask >> t & 1 == 1 {
                                        hs.push(f);
                                    }
                                    if k_mask >> t & 1 == 1 {
                                        as_.push(self.oneforms[f].partner);
                                    }
                                }
                                for (t, &f) in nil_hol.iter().enumerate() {
                                    if j_mask >> t & 1 == 1 {
                                        hs.push(f);
                                        cond = weight_add(&cond, &beta[t]);
                                        w = weight_add(&w, &weight_add(&beta[t], &weight_neg(&alpha[t])));
                                    }
                                    if l_mask >> t & 1 == 1 {
                                        as_.push(self.oneforms[f].partner);
                                        cond = weight_add(&cond, &gamma[t]);
                                        let abar = self.weight_conj(&alpha[t]);
                                        w = weight_add(&w, &weight_add(&gamma[t], &weight_neg(&abar)));
                                    }
                                }
                                if self.is_trivial(&cond) {
                                    hs.sort_unstable();
                                    as_.sort_unstable();
                                    let g = Generator {
                                        weight: w,
                                        hol: hs,
                                        anti: as_,
                                    };
                                    if conj_too {
                                        out.insert(self.conj_generator(&g));
                                    }
                                    out.insert(g);
                                }
                            }
                        }
                    }
                }
            }
            GeneratorSpec::CpBGamma { alpha } | GeneratorSpec::CpCGamma { alpha } => {
                let conj_too = matches!(self.generators, GeneratorSpec::CpCGamma { .. });
                if alpha.len() != hol.len() {
                    return bad("cp rules need one α per holomorphic one-form".into());
                }
                let nh = hol.len();
                for i_mask in 0u64..(1 << nh) {
                    for k_mask in 0u64..(1 << nh) {
                        let mut cond = weight_zero(wlen);
                        let mut w = weight_zero(wlen);
                        let mut hs = Vec::new();
                        let mut as_ = Vec::new();
                        for (t, &f) in hol.iter().enumerate() {
                            if i_mask >> t & 1 == 1 {
                                hs.push(f);
                                w = weight_add(&w, &weight_neg(&alpha[t]));
                            }
                            if k_mask >> t & 1 == 1 {
                                as_.push(self.oneforms[f].partner);
                                w = weight_add(&w, &weight_neg(&alpha[t]));
                                let abar = self.weight_conj(&alpha[t]);
                                cond = weight_add(&cond, &weight_add(&abar, &weight_neg(&alpha[t])));
                            }
                        }
                        if self.is_trivial(&cond) {
                            hs.sort_unstable();
                            as_.sort_unstable();
                            let g = Generator {
                                weight: w,
                                hol: hs,
                                anti: as_,
                            };
                            if conj_too {
                                out.insert(self.conj_generator(&g));
                            }
                            out.insert(g);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Conjugate of a generator as a labeled monomial (sign dropped: only
    /// the generated set matters here).
    fn conj_generator(&self, g: &Generator) -> Generator {
        let mut hol = Vec::new();
        let mut anti = Vec::new();
        for &i in &g.hol {
            anti.push(self.oneforms[i].partner);
        }
        for &k in &g.anti {
            hol.push(self.oneforms[k].partner);
        }
        hol.sort_unstable();
        anti.sort_unstable();
        Generator {
            weight: self.weight_conj(&g.weight),
            hol,
            anti,
        }
    }

    /// Builds the complex, its pairing, and conjugation when available.
    pub fn build(&self) -> Result<BuiltModel, ModelError> {
        self.check()?;
        let gens = self.expand_generators()?;
        build_from_generators(self, gens)
    }
}

// ----- wedge-word machinery -----

/// Canonical rank of a one-form: holomorphic forms first, then
/// antiholomorphic, each class ordered by position within the class.
fn rank_of(spec: &ModelSpec, idx: usize) -> (u8, usize) {
    let class = match spec.oneforms[idx].form_type {
        FormType::Holo => 0u8,
        FormType::Anti => 1u8,
    };
    let pos = (0..idx)
        .filter(|&i| spec.oneforms[i].form_type == spec.oneforms[idx].form_type)
        .count();
    (class, pos)
}

/// Sorts a word of distinct one-form indices into canonical order and
/// returns the permutation sign; `None` when an index repeats.
fn normalize_word(spec: &ModelSpec, word: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v: Vec<usize> = word.to_vec();
    {
        let mut seen = BTreeSet::new();
        for &i in &v {
            if !seen.insert(i) {
                return None;
            }
        }
    }
    // Bubble sort to count transpositions; words have at most 2n entries.
    let mut sign = 1i64;
    let n = v.len();
    for i in 0..n {
        for j in 0..n.saturating_sub(i + 1) {
            if rank_of(spec, v[j]) > rank_of(spec, v[j + 1]) {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((v, sign))
}

fn word_of(g: &Generator) -> Vec<usize> {
    let mut w = g.hol.clone();
    w.extend_from_slice(&g.anti);
    w
}

fn generator_from_word(spec: &ModelSpec, weight: Weight, word: &[usize]) -> Generator {
    let mut hol = Vec::new();
    let mut anti = Vec::new();
    for &i in word {
        match spec.oneforms[i].form_type {
            FormType::Holo => hol.push(i),
            FormType::Anti => anti.push(i),
        }
    }
    Generator { weight, hol, anti }
}

/// Formal differential of a generator: character terms plus structure
/// terms, each normalized to a canonical monomial with sign.
fn differential_terms(spec: &ModelSpec, g: &Generator) -> Vec<(Scalar, Generator)> {
    let word = word_of(g);
    let mut out = Vec::new();
    // Character part: Σ w_c dζ_c ∧ (monomial).
    for (pos, &coord) in spec.coordinates.iter().enumerate() {
        let c = &g.weight[pos];
        if c.is_zero() {
            continue;
        }
        let mut new_word = vec![coord];
        new_word.extend_from_slice(&word);
        if let Some((canon, sign)) = normalize_word(spec, &new_word) {
            let coeff = c * &Scalar::from_int(sign);
            out.push((coeff, generator_from_word(spec, g.weight.clone(), &canon)));
        }
    }
    // Structure part: Leibniz over the factors.
    for (t, &f) in word.iter().enumerate() {
        let leibniz = if t % 2 == 0 { 1i64 } else { -1i64 };
        for &(ref c, a, b) in &spec.oneforms[f].differential {
            let mut new_word: Vec<usize> = Vec::with_capacity(word.len() + 1);
            new_word.extend_from_slice(&word[..t]);
            new_word.push(a);
            new_word.push(b);
            new_word.extend_from_slice(&word[t + 1..]);
            if let Some((canon, sign)) = normalize_word(spec, &new_word) {
                let coeff = c * &Scalar::from_int(leibniz * sign);
                out.push((coeff, generator_from_word(spec, g.weight.clone(), &canon)));
            }
        }
    }
    // Merge duplicate targets.
    let mut merged: BTreeMap<Generator, Scalar> = BTreeMap::new();
    for (c, g) in out {
        let e = merged.entry(g).or_insert_with(Scalar::zero);
        *e += &c;
    }
    merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(g, c)| (c, g))
        .collect()
}

fn build_from_generators(
    spec: &ModelSpec,
    gens: BTreeSet<Generator>,
) -> Result<BuiltModel, ModelError> {
    let hol = spec.hol_indices();
    let anti = spec.anti_indices();
    let hol_positions: BTreeMap<usize, usize> =
        hol.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let anti_positions: BTreeMap<usize, usize> =
        anti.iter().enumerate().map(|(p, &i)| (i, p)).collect();

    let mut by_bidegree: BTreeMap<Bidegree, Vec<Generator>> = BTreeMap::new();
    for g in gens {
        by_bidegree
            .entry((g.hol.len() as i64, g.anti.len() as i64))
            .or_default()
            .push(g);
    }
    for v in by_bidegree.values_mut() {
        v.sort();
    }
    let index_of = |g: &Generator| -> Option<(Bidegree, usize)> {
        let bd = (g.hol.len() as i64, g.anti.len() as i64);
        let v = by_bidegree.get(&bd)?;
        v.binary_search(g).ok().map(|i| (bd, i))
    };

    let oneform_names: Vec<String> = spec.oneforms.iter().map(|f| f.name.clone()).collect();
    let render = |g: &Generator| {
        render_label(
            g,
            spec,
            &hol_positions,
            &anti_positions,
        )
    };

    let mut labels: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for (&bd, v) in &by_bidegree {
        labels.insert(bd, v.iter().map(render).collect());
    }

    let mut del: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    let mut delbar: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    for (&(p, q), v) in &by_bidegree {
        let dim_up = by_bidegree.get(&(p + 1, q)).map_or(0, Vec::len);
        let dim_right = by_bidegree.get(&(p, q + 1)).map_or(0, Vec::len);
        let mut m_del = Matrix::zero(dim_up, v.len());
        let mut m_delbar = Matrix::zero(dim_right, v.len());
        for (j, g) in v.iter().enumerate() {
            for (coeff, tgt) in differential_terms(spec, g) {
                let tbd = (tgt.hol.len() as i64, tgt.anti.len() as i64);
                let Some((_, i)) = index_of(&tgt) else {
                    return Err(ModelError::NotClosed {
                        name: spec.name.clone(),
                        generator: render(g),
                        missing: render(&tgt),
                    });
                };
                if tbd == (p + 1, q) {
                    m_del.set(i, j, m_del.get(i, j) + &coeff);
                } else if tbd == (p, q + 1) {
                    m_delbar.set(i, j, m_delbar.get(i, j) + &coeff);
                } else {
                    return Err(ModelError::BadSpec(
                        spec.name.clone(),
                        format!("differential term of `{}` lands at ({},{})", render(g), tbd.0, tbd.1),
                    ));
                }
            }
        }
        del.insert((p, q), m_del);
        delbar.insert((p, q), m_delbar);
    }

    // Conjugation, when the generator set is closed under it.
    let conj_closed = by_bidegree.values().flatten().all(|g| {
        let cg = spec.conj_generator(g);
        index_of(&cg).is_some()
    });
    let conj = if conj_closed {
        let mut maps = BTreeMap::new();
        for (&(p, q), v) in &by_bidegree {
            let dim_t = by_bidegree.get(&(q, p)).map_or(0, Vec::len);
            let mut m = Matrix::zero(dim_t, v.len());
            for (j, g) in v.iter().enumerate() {
                let cg = spec.conj_generator(g);
                // Sign: conjugation maps the word to partner forms, then
                // normalizes.
                let new_word: Vec<usize> = word_of(g)
                    .iter()
                    .map(|&i| spec.oneforms[i].partner)
                    .collect();
                let (_, sign) = normalize_word(spec, &new_word)
                    .expect("conjugate word has repeats");
                let (_, i) = index_of(&cg).unwrap();
                m.set(i, j, Scalar::from_int(sign));
            }
            maps.insert((p, q), m);
        }
        Some(maps)
    } else {
        None
    };

    let complex = BigradedComplex::new(labels, del, delbar, conj);
    let violations = complex.validate();
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(ModelError::Invalid(spec.name.clone(), msgs.join("; ")));
    }

    // Pairing into the top monomial: the wedge of complementary monomials
    // with cancelling weights, read off with its permutation sign.
    let n = spec.pd_dim;
    let full_word: Vec<usize> = (0..spec.oneforms.len()).collect();
    let mut pairing: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    for (&(p, q), v) in &by_bidegree {
        let dual = by_bidegree
            .get(&(n - p, n - q))
            .map_or(&[] as &[Generator], |v| v.as_slice());
        let mut m = Matrix::zero(v.len(), dual.len());
        for (i, g) in v.iter().enumerate() {
            for (j, h) in dual.iter().enumerate() {
                if !weight_is_zero(&weight_add(&g.weight, &h.weight)) {
                    continue;
                }
                let mut word = word_of(g);
                word.extend(word_of(h));
                if let Some((canon, sign)) = normalize_word(spec, &word) {
                    if canon == full_word {
                        m.set(i, j, Scalar::from_int(sign));
                    }
                }
            }
        }
        pairing.insert((p, q), m);
    }

    let paired = PairedComplex::new(complex, n, pairing);
    Ok(BuiltModel {
        name: spec.name.clone(),
        paired,
        generators: by_bidegree,
        coordinates: spec.coordinates.clone(),
        oneform_names,
        hol_positions,
        anti_positions,
    })
}

// ----- labels -----

/// Canonical label grammar: `weight-part '*' 'dz_{' indices ',' barred '}'`
/// with the weight part omitted when trivial and `1` for the scalar
/// generator. Holomorphic indices render as digits, antiholomorphic ones
/// with a combining overline, both ascending.
fn render_label(
    g: &Generator,
    spec: &ModelSpec,
    hol_positions: &BTreeMap<usize, usize>,
    anti_positions: &BTreeMap<usize, usize>,
) -> String {
    let weight_part = render_weight(spec, &g.weight);
    if g.hol.is_empty() && g.anti.is_empty() {
        return if weight_part.is_empty() {
            "1".to_string()
        } else {
            format!("{weight_part}*1")
        };
    }
    let mut hs = String::new();
    for &i in &g.hol {
        hs.push_str(&(hol_positions[&i] + 1).to_string());
    }
    let mut as_ = String::new();
    for &k in &g.anti {
        as_.push_str(&(anti_positions[&k] + 1).to_string());
        as_.push('\u{0304}');
    }
    let form = format!("dz_{{{hs},{as_}}}");
    if weight_part.is_empty() {
        form
    } else {
        format!("{weight_part}*{form}")
    }
}

fn render_weight(spec: &ModelSpec, w: &Weight) -> String {
    if weight_is_zero(w) {
        return String::new();
    }
    let mut terms = String::new();
    for (pos, &coord) in spec.coordinates.iter().enumerate() {
        let c = &w[pos];
        if c.is_zero() {
            continue;
        }
        let sym = coordinate_symbol(&spec.oneforms[coord].name);
        let cs = c.to_string();
        let rendered = if cs == "1" {
            sym
        } else if cs == "-1" {
            format!("-{sym}")
        } else if c.im.is_zero() || c.re.is_zero() {
            format!("{cs}{sym}")
        } else {
            format!("({cs}){sym}")
        };
        if !terms.is_empty() && !rendered.starts_with('-') {
            terms.push('+');
        }
        terms.push_str(&rendered);
    }
    format!("e^{{{terms}}}")
}

/// `dz1 → z1`, `dz̄1 → z̄1`; other names pass through.
fn coordinate_symbol(name: &str) -> String {
    name.strip_prefix('d').unwrap_or(name).to_string()
}

impl BuiltModel {
    pub fn complex(&self) -> &BigradedComplex {
        self.paired.base()
    }

    pub fn label_of(&self, g: &Generator, spec_like: &ModelSpec) -> String {
        render_label(g, spec_like, &self.hol_positions, &self.anti_positions)
    }

    pub fn labels_at(&self, p: i64, q: i64) -> &[String] {
        self.complex().labels_at(p, q)
    }

    pub fn oneform_names(&self) -> &[String] {
        &self.oneform_names
    }

    /// Position of a generator inside its bidegree block.
    pub fn generator_index(&self, g: &Generator) -> Option<(Bidegree, usize)> {
        let bd = (g.hol.len() as i64, g.anti.len() as i64);
        let v = self.generators.get(&bd)?;
        v.binary_search(g).ok().map(|i| (bd, i))
    }
}

/// Star closure of the generator set: every generator must have its
/// complementary partner with opposite weight in the set. This is the
/// combinatorial shadow of closure under the conjugate-linear star and is
/// exactly what the unimodularity relation on weights guarantees for the
/// rule-built models.
pub fn star_closure_check(bm: &BuiltModel, spec: &ModelSpec) -> bool {
    let hol = spec.hol_indices();
    let anti = spec.anti_indices();
    for v in bm.generators.values() {
        for g in v {
            let comp_hol: Vec<usize> = hol.iter().copied().filter(|i| !g.hol.contains(i)).collect();
            let comp_anti: Vec<usize> =
                anti.iter().copied().filter(|k| !g.anti.contains(k)).collect();
            let partner = Generator {
                weight: weight_neg(&g.weight),
                hol: comp_hol,
                anti: comp_anti,
            };
            if bm.generator_index(&partner).is_none() {
                return false;
            }
        }
    }
    true
}

/// Inclusion of one built model into another by resolving each sub
/// generator to an identical ambient generator (same weight, same
/// monomial).
pub fn subcomplex_inclusion(sub: &BuiltModel, ambient: &BuiltModel) -> Result<ComplexMap, ModelError> {
    let mut blocks: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    for (&bd, v) in &sub.generators {
        let mut m = Matrix::zero(ambient.complex().dim(bd.0, bd.1), v.len());
        for (j, g) in v.iter().enumerate() {
            let Some((abd, i)) = ambient.generator_index(g) else {
                let label = &sub.complex().labels_at(bd.0, bd.1)[j];
                return Err(ModelError::Unresolvable(label.clone()));
            };
            debug_assert_eq!(abd, bd);
            m.set(i, j, Scalar::one());
        }
        blocks.insert(bd, m);
    }
    Ok(ComplexMap {
        source: sub.complex().clone(),
        target: ambient.complex().clone(),
        blocks,
        inclusion: true,
    })
}
