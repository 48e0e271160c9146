//! Seeded generators of valid instances for property testing.
//!
//! Uniform sampling of valid double complexes is hard, so instances are
//! assembled from pieces that are valid by construction: corner generators
//! (both differentials vanish), horizontal and vertical dominoes, and
//! acyclic squares `(x, ∂x, ∂̄x, ∂∂̄x)`, optionally scrambled by an exact
//! change of basis at every bidegree. Paired instances come from random
//! character data fed through the splitting-type and parallelizable model
//! rules, which guarantees star-closed generator sets.

use crate::complex::{Bidegree, BigradedComplex};
use crate::matrix::Matrix;
use crate::models::{
    subcomplex_inclusion, BuiltModel, FormType, Generator, GeneratorSpec, ModelSpec, OneForm,
    Weight,
};
use crate::morphisms::ComplexMap;
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let re = rng.gen_range(-2i64..=2);
    let im = if rng.gen_bool(0.3) {
        rng.gen_range(-1i64..=1)
    } else {
        0
    };
    Scalar::from_parts(re, 1, im, 1)
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = small_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random invertible matrix built from elementary operations.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n == 0 {
        return m;
    }
    for _ in 0..(2 * n) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        // row_i += c · row_j
        let c = nonzero_scalar(rng);
        for k in 0..n {
            let v = m.get(i, k) + &(&c * m.get(j, k));
            m.set(i, k, v);
        }
    }
    m
}

/// Pieces of a free double complex.
enum Piece {
    Corner(Bidegree),
    HDomino(Bidegree),
    VDomino(Bidegree),
    Square(Bidegree),
}

struct FreeComplexBuilder {
    dims: BTreeMap<Bidegree, usize>,
    /// (source bidegree, source slot, target slot, coefficient) per block.
    del_entries: Vec<(Bidegree, usize, usize, Scalar)>,
    delbar_entries: Vec<(Bidegree, usize, usize, Scalar)>,
}

impl FreeComplexBuilder {
    fn new() -> Self {
        FreeComplexBuilder {
            dims: BTreeMap::new(),
            del_entries: Vec::new(),
            delbar_entries: Vec::new(),
        }
    }

    fn slot(&mut self, bd: Bidegree) -> usize {
        let e = self.dims.entry(bd).or_insert(0);
        let s = *e;
        *e += 1;
        s
    }

    fn add_piece(&mut self, piece: Piece) {
        match piece {
            Piece::Corner(bd) => {
                self.slot(bd);
            }
            Piece::HDomino((p, q)) => {
                let a = self.slot((p, q));
                let b = self.slot((p + 1, q));
                self.del_entries.push(((p, q), a, b, Scalar::one()));
            }
            Piece::VDomino((p, q)) => {
                let a = self.slot((p, q));
                let b = self.slot((p, q + 1));
                self.delbar_entries.push(((p, q), a, b, Scalar::one()));
            }
            Piece::Square((p, q)) => {
                // a at (p,q), b = ∂a, c = ∂̄a, e with ∂c = e, ∂̄b = −e.
                let a = self.slot((p, q));
                let b = self.slot((p + 1, q));
                let c = self.slot((p, q + 1));
                let e = self.slot((p + 1, q + 1));
                self.del_entries.push(((p, q), a, b, Scalar::one()));
                self.delbar_entries.push(((p, q), a, c, Scalar::one()));
                self.del_entries.push(((p, q + 1), c, e, Scalar::one()));
                self.delbar_entries
                    .push(((p + 1, q), b, e, -Scalar::one()));
            }
        }
    }

    fn finish(self, labels_prefix: &str) -> BigradedComplex {
        let mut labels = BTreeMap::new();
        for (&bd, &d) in &self.dims {
            labels.insert(
                bd,
                (0..d)
                    .map(|i| format!("{labels_prefix}({},{})#{i}", bd.0, bd.1))
                    .collect(),
            );
        }
        let dim = |bd: Bidegree| self.dims.get(&bd).copied().unwrap_or(0);
        let mut del: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
        let mut delbar: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
        for (&bd, &d) in &self.dims {
            del.insert(bd, Matrix::zero(dim((bd.0 + 1, bd.1)), d));
            delbar.insert(bd, Matrix::zero(dim((bd.0, bd.1 + 1)), d));
        }
        for (bd, src, dst, c) in self.del_entries {
            let m = del.get_mut(&bd).unwrap();
            m.set(dst, src, c);
        }
        for (bd, src, dst, c) in self.delbar_entries {
            let m = delbar.get_mut(&bd).unwrap();
            m.set(dst, src, c);
        }
        BigradedComplex::new(labels, del, delbar, None)
    }
}

/// Conjugates all differentials by random invertible maps per bidegree.
/// The result is isomorphic to the input, with scrambled coordinates.
pub fn scramble(c: &BigradedComplex, seed: u64) -> (BigradedComplex, BTreeMap<Bidegree, Matrix>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base_change: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    for (p, q) in c.support() {
        base_change.insert((p, q), random_invertible(&mut rng, c.dim(p, q)));
    }
    let change = |bd: Bidegree| -> Matrix {
        base_change
            .get(&bd)
            .cloned()
            .unwrap_or_else(|| Matrix::identity(0))
    };
    let mut labels = BTreeMap::new();
    let mut del = BTreeMap::new();
    let mut delbar = BTreeMap::new();
    for (p, q) in c.support() {
        labels.insert((p, q), c.labels_at(p, q).to_vec());
        let inv = change((p, q)).inverse().unwrap();
        del.insert((p, q), change((p + 1, q)).mul(&c.del(p, q)).mul(&inv));
        delbar.insert((p, q), change((p, q + 1)).mul(&c.delbar(p, q)).mul(&inv));
    }
    (BigradedComplex::new(labels, del, delbar, None), base_change)
}

/// A random valid double complex assembled from corners, dominoes, and
/// squares, then scrambled.
pub fn random_complex(seed: u64) -> BigradedComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = FreeComplexBuilder::new();
    let pieces = rng.gen_range(4..10);
    for _ in 0..pieces {
        let p = rng.gen_range(0..3);
        let q = rng.gen_range(0..3);
        match rng.gen_range(0..4) {
            0 => b.add_piece(Piece::Corner((p, q))),
            1 => b.add_piece(Piece::HDomino((p, q))),
            2 => b.add_piece(Piece::VDomino((p, q))),
            _ => b.add_piece(Piece::Square((p, q))),
        }
    }
    let raw = b.finish("g");
    scramble(&raw, seed.wrapping_add(1)).0
}

/// Extends `base` by freely adjoined acyclic squares and scrambles the
/// ambient coordinates. Returns the ambient together with the inclusion of
/// `base`, which is a chain map with quasi-isomorphic rows and columns.
pub fn adjoin_acyclic_squares(
    base: &BigradedComplex,
    seed: u64,
    count: usize,
) -> (BigradedComplex, ComplexMap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dims: BTreeMap<Bidegree, usize> = BTreeMap::new();
    for (p, q) in base.support() {
        dims.insert((p, q), base.dim(p, q));
    }
    // Square anchors stay inside (or near) the base support box.
    let (pmin, pmax, qmin, qmax) = base.bidegree_bounds().unwrap_or((0, 1, 0, 1));
    let mut extra = FreeComplexBuilder::new();
    for _ in 0..count {
        let p = rng.gen_range(pmin..=pmax.max(pmin));
        let q = rng.gen_range(qmin..=qmax.max(qmin));
        extra.add_piece(Piece::Square((p, q)));
    }
    let squares = extra.finish("sq");

    // Direct sum of base and squares.
    let mut labels = BTreeMap::new();
    let mut del = BTreeMap::new();
    let mut delbar = BTreeMap::new();
    let mut support: BTreeSet<Bidegree> = base.support().collect();
    support.extend(squares.support());
    let dim_sum =
        |bd: Bidegree| -> usize { base.dim(bd.0, bd.1) + squares.dim(bd.0, bd.1) };
    for &(p, q) in &support {
        let mut l: Vec<String> = base.labels_at(p, q).to_vec();
        l.extend(squares.labels_at(p, q).iter().cloned());
        labels.insert((p, q), l);
        let block = |mb: Matrix, ms: Matrix| -> Matrix {
            let rows = mb.rows() + ms.rows();
            let cols = mb.cols() + ms.cols();
            let mut m = Matrix::zero(rows, cols);
            for i in 0..mb.rows() {
                for j in 0..mb.cols() {
                    m.set(i, j, mb.get(i, j).clone());
                }
            }
            for i in 0..ms.rows() {
                for j in 0..ms.cols() {
                    m.set(mb.rows() + i, mb.cols() + j, ms.get(i, j).clone());
                }
            }
            m
        };
        del.insert((p, q), block(base.del(p, q), squares.del(p, q)));
        delbar.insert((p, q), block(base.delbar(p, q), squares.delbar(p, q)));
    }
    let ambient = BigradedComplex::new(labels, del, delbar, None);
    let (scrambled, change) = scramble(&ambient, seed.wrapping_add(7));

    let mut blocks = BTreeMap::new();
    for (p, q) in base.support() {
        let d = base.dim(p, q);
        let total = dim_sum((p, q));
        let mut incl = Matrix::zero(total, d);
        for i in 0..d {
            incl.set(i, i, Scalar::one());
        }
        let p_change = change.get(&(p, q)).cloned().unwrap_or_else(|| Matrix::identity(total));
        blocks.insert((p, q), p_change.mul(&incl));
    }
    let map = ComplexMap {
        source: base.clone(),
        target: scrambled.clone(),
        blocks,
        inclusion: true,
    };
    (scrambled, map)
}

fn wpair(u: Scalar, v: Scalar) -> Weight {
    vec![u, v]
}

fn unitary_part_beta(alpha: &Weight) -> Weight {
    // α = (u, v) ↦ β = (−conj(v), v): unitary with α·β⁻¹ holomorphic.
    wpair(-alpha[1].conj(), alpha[1].clone())
}

fn unitary_part_gamma(alpha: &Weight) -> Weight {
    // α = (u, v) ↦ γ = (−u, conj(u)): unitary with conj-swap(α)·γ⁻¹ holomorphic.
    wpair(-alpha[0].clone(), alpha[0].conj())
}

fn frame(n: usize) -> Vec<OneForm> {
    (0..2 * n)
        .map(|i| OneForm {
            name: if i < n {
                format!("dz{}", i + 1)
            } else {
                format!("dz̄{}", i - n + 1)
            },
            form_type: if i < n { FormType::Holo } else { FormType::Anti },
            partner: (i + n) % (2 * n),
            differential: Vec::new(),
        })
        .collect()
}

/// Closes a weight set under negation and conjugation-swap.
fn close_weight_set(spec_coords: usize, seed_weights: Vec<Weight>, conj: impl Fn(&Weight) -> Weight) -> Vec<Weight> {
    let mut set: BTreeSet<Weight> = BTreeSet::new();
    set.insert(vec![Scalar::zero(); spec_coords]);
    let mut queue = seed_weights;
    while let Some(w) = queue.pop() {
        if set.insert(w.clone()) {
            queue.push(w.iter().map(|x| -x).collect());
            queue.push(conj(&w));
        }
    }
    set.into_iter().collect()
}

/// A random paired model built from the splitting-type or parallelizable
/// rule with random character data. Character sums are balanced so the
/// generator set is star-closed, hence the pairing is nondegenerate.
pub fn random_paired_model(seed: u64) -> BuiltModel {
    random_paired_model_spec(seed)
        .build()
        .expect("random paired model must build")
}

/// The deterministic spec behind [`random_paired_model`].
pub fn random_paired_model_spec(seed: u64) -> ModelSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.5) {
        // Splitting type: one linear pair, two nilpotent pairs with
        // α₂ = −conj-swap(α₁).
        let u = Scalar::from_parts(rng.gen_range(-1i64..=1), 1, rng.gen_range(0i64..=1), 1);
        let v = Scalar::from_parts(rng.gen_range(-1i64..=1), 1, 0, 1);
        let a1 = wpair(u, v);
        let a2 = wpair(-a1[1].conj(), -a1[0].conj());
        let alpha = vec![a1, a2];
        let beta: Vec<Weight> = alpha.iter().map(unitary_part_beta).collect();
        let gamma: Vec<Weight> = alpha.iter().map(unitary_part_gamma).collect();
        let mut spec = ModelSpec {
            name: format!("random-splitting-{seed}"),
            pd_dim: 3,
            oneforms: frame(3),
            coordinates: vec![0, 3],
            characters: alpha.clone(),
            trivial_weights: Vec::new(),
            generators: GeneratorSpec::CGamma {
                linear_pairs: 1,
                alpha,
                beta: beta.clone(),
                gamma: gamma.clone(),
            },
        };
        // Trivial set: some random products of the unitary parts.
        let mut seeds = Vec::new();
        for _ in 0..rng.gen_range(0..2) {
            let b = &beta[rng.gen_range(0..2)];
            let g = &gamma[rng.gen_range(0..2)];
            seeds.push(vec![&b[0] + &g[0], &b[1] + &g[1]]);
        }
        let conj = {
            let spec_ref = spec.clone();
            move |w: &Weight| spec_ref.weight_conj(w)
        };
        spec.trivial_weights = close_weight_set(2, seeds, conj);
        spec
    } else {
        // Complex-parallelizable: α₁ = 0 on the flagged direction, the
        // remaining characters holomorphic and summing to zero.
        let u = Scalar::from_parts(rng.gen_range(-2i64..=2).max(1), 1, rng.gen_range(0i64..=1), 1);
        let alpha = vec![
            wpair(Scalar::zero(), Scalar::zero()),
            wpair(u.clone(), Scalar::zero()),
            wpair(-&u, Scalar::zero()),
        ];
        let mut spec = ModelSpec {
            name: format!("random-parallelizable-{seed}"),
            pd_dim: 3,
            oneforms: frame(3),
            coordinates: vec![0, 3],
            characters: alpha.clone(),
            trivial_weights: Vec::new(),
            generators: GeneratorSpec::CpCGamma { alpha: alpha.clone() },
        };
        let mut seeds = Vec::new();
        if rng.gen_bool(0.5) {
            // Make e^{conj-swap(α₂) − α₂} trivial, enlarging the model.
            let a = &alpha[1];
            let abar = spec.weight_conj(a);
            seeds.push(vec![&abar[0] - &a[0], &abar[1] - &a[1]]);
        }
        let conj = {
            let spec_ref = spec.clone();
            move |w: &Weight| spec_ref.weight_conj(w)
        };
        spec.trivial_weights = close_weight_set(2, seeds, conj);
        spec
    }
}

/// Closes a generator subset of `model` under differential targets and
/// star partners, always keeping the bottom and top generators.
fn close_generator_set(
    model: &BuiltModel,
    spec: &ModelSpec,
    mut chosen: BTreeSet<Generator>,
) -> BTreeSet<Generator> {
    let hol_all: Vec<usize> = (0..spec.oneforms.len())
        .filter(|&i| spec.oneforms[i].form_type == FormType::Holo)
        .collect();
    let anti_all: Vec<usize> = (0..spec.oneforms.len())
        .filter(|&i| spec.oneforms[i].form_type == FormType::Anti)
        .collect();
    let zero_w = vec![Scalar::zero(); spec.coordinates.len()];
    chosen.insert(Generator {
        weight: zero_w.clone(),
        hol: Vec::new(),
        anti: Vec::new(),
    });
    chosen.insert(Generator {
        weight: zero_w,
        hol: hol_all.clone(),
        anti: anti_all.clone(),
    });
    loop {
        let mut added = false;
        let current: Vec<Generator> = chosen.iter().cloned().collect();
        for g in &current {
            // Differential closure, using the ambient matrices.
            if let Some((bd, j)) = model.generator_index(g) {
                let (p, q) = bd;
                for (block, tbd) in [
                    (model.complex().del(p, q), (p + 1, q)),
                    (model.complex().delbar(p, q), (p, q + 1)),
                ] {
                    for i in 0..block.rows() {
                        if !block.get(i, j).is_zero() {
                            let tgt = model.generators[&tbd][i].clone();
                            added |= chosen.insert(tgt);
                        }
                    }
                }
            }
            // Star closure.
            let comp = Generator {
                weight: g.weight.iter().map(|x| -x).collect(),
                hol: hol_all.iter().copied().filter(|i| !g.hol.contains(i)).collect(),
                anti: anti_all.iter().copied().filter(|k| !g.anti.contains(k)).collect(),
            };
            if model.generator_index(&comp).is_some() {
                added |= chosen.insert(comp);
            }
        }
        if !added {
            break;
        }
    }
    chosen
}

/// A random star-closed, differential-closed sub-model of `model`,
/// containing the bottom and top generators, together with its inclusion.
pub fn random_star_closed_submodel(
    model: &BuiltModel,
    spec: &ModelSpec,
    seed: u64,
) -> (BuiltModel, ComplexMap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: BTreeSet<Generator> = BTreeSet::new();
    for g in model.generators.values().flatten() {
        if rng.gen_bool(0.4) {
            chosen.insert(g.clone());
        }
    }
    let chosen = close_generator_set(model, spec, chosen);
    let sub_spec = ModelSpec {
        name: format!("{}-sub{seed}", spec.name),
        generators: GeneratorSpec::Explicit(chosen.into_iter().collect()),
        ..spec.clone()
    };
    let sub = sub_spec.build().expect("closed subset must build");
    let incl = subcomplex_inclusion(&sub, model).expect("inclusion resolves");
    (sub, incl)
}

/// A star-closed sub-model of `ambient` containing everything in `inner`
/// plus a random closed slice of ambient generators.
pub fn star_closed_between(
    inner: &BuiltModel,
    ambient: &BuiltModel,
    ambient_spec: &ModelSpec,
    seed: u64,
) -> BuiltModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: BTreeSet<Generator> = inner
        .generators
        .values()
        .flat_map(|v| v.iter().cloned())
        .collect();
    for g in ambient.generators.values().flatten() {
        if rng.gen_bool(0.3) {
            chosen.insert(g.clone());
        }
    }
    let chosen = close_generator_set(ambient, ambient_spec, chosen);
    let mid_spec = ModelSpec {
        name: format!("{}-mid{seed}", ambient_spec.name),
        generators: GeneratorSpec::Explicit(chosen.into_iter().collect()),
        ..ambient_spec.clone()
    };
    mid_spec.build().expect("closed subset must build")
}
