//! Maps of double complexes: hypothesis checkers and conclusion verifiers
//! for the sub-complex transfer results, plus the constructive splitting
//! solver used in their proofs.

use crate::complex::{Bidegree, BigradedComplex, Theory};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A bidegree-preserving map between two bounded double complexes,
/// commuting with both differentials. `blocks` sends source coordinates to
/// target coordinates at each bidegree.
#[derive(Clone)]
pub struct ComplexMap {
    pub source: BigradedComplex,
    pub target: BigradedComplex,
    pub blocks: BTreeMap<Bidegree, Matrix>,
    /// When set, every block must additionally be injective.
    pub inclusion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapViolation {
    pub bidegree: Bidegree,
    pub identity: String,
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({}, {}): {}", self.bidegree.0, self.bidegree.1, self.identity)
    }
}

#[derive(Debug, Error)]
pub enum MapError {
    #[error("induced map not well defined at ({0}, {1}): {2}")]
    NotWellDefined(i64, i64, String),
    #[error("splitting precondition violated: ∂̄φ does not lie in the sub-complex")]
    SplitPrecondition,
    #[error("splitting failed despite quasi-isomorphism hypothesis: {0}")]
    SplitUnsolvable(String),
}

/// Induced map on a cohomology, expressed on the canonical representative
/// bases, with rank-derived injectivity and surjectivity flags.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub matrix: Matrix,
    pub injective: bool,
    pub surjective: bool,
}

impl InducedMap {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Result of splitting `φ = φ̃ + ∂̄φ̂` along a sub-complex inclusion.
#[derive(Clone, Debug)]
pub struct Splitting {
    /// Coordinates of `φ̃` in the sub-complex at `(p,q)`.
    pub phi_tilde_sub: Vec<Scalar>,
    /// The same `φ̃` pushed into ambient coordinates.
    pub phi_tilde: Vec<Scalar>,
    /// `φ̂` in ambient coordinates at `(p,q−1)`.
    pub phi_hat: Vec<Scalar>,
}

impl ComplexMap {
    pub fn identity(c: &BigradedComplex) -> Self {
        let mut blocks = BTreeMap::new();
        for (p, q) in c.support() {
            blocks.insert((p, q), Matrix::identity(c.dim(p, q)));
        }
        ComplexMap {
            source: c.clone(),
            target: c.clone(),
            blocks,
            inclusion: true,
        }
    }

    pub fn block(&self, p: i64, q: i64) -> Matrix {
        match self.blocks.get(&(p, q)) {
            Some(m) => m.clone(),
            None => Matrix::zero(self.target.dim(p, q), self.source.dim(p, q)),
        }
    }

    fn joint_support(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.source.support().chain(self.target.support()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Blockwise chain-map identities; empty when the data is a morphism of
    /// double complexes (and injective where flagged as an inclusion).
    pub fn check_map(&self) -> Vec<MapViolation> {
        let mut out = Vec::new();
        for (p, q) in self.joint_support() {
            let b = self.block(p, q);
            if (b.rows(), b.cols()) != (self.target.dim(p, q), self.source.dim(p, q)) {
                out.push(MapViolation {
                    bidegree: (p, q),
                    identity: "block shape mismatch".into(),
                });
                continue;
            }
            let del_then_map = self.block(p + 1, q).mul(&self.source.del(p, q));
            let map_then_del = self.target.del(p, q).mul(&b);
            if del_then_map != map_then_del {
                out.push(MapViolation {
                    bidegree: (p, q),
                    identity: "does not commute with ∂".into(),
                });
            }
            let delbar_then_map = self.block(p, q + 1).mul(&self.source.delbar(p, q));
            let map_then_delbar = self.target.delbar(p, q).mul(&b);
            if delbar_then_map != map_then_delbar {
                out.push(MapViolation {
                    bidegree: (p, q),
                    identity: "does not commute with ∂̄".into(),
                });
            }
            if self.inclusion && b.rank() != self.source.dim(p, q) {
                out.push(MapViolation {
                    bidegree: (p, q),
                    identity: "inclusion block is not injective".into(),
                });
            }
        }
        out
    }

    /// Generic induced map on a quotient `cocycles/boundaries` computed at
    /// one bidegree. Verifies well-definedness: images of source cocycles
    /// must be target cocycles and images of source boundaries must be
    /// target boundaries.
    fn induced_quotient_map(
        &self,
        p: i64,
        q: i64,
        src_z: Subspace,
        src_b: Subspace,
        tgt_z: Subspace,
        tgt_b: Subspace,
    ) -> Result<InducedMap, MapError> {
        let block = self.block(p, q);
        let src_reps = src_z.complement_of(&src_b);
        let tgt_reps = tgt_z.complement_of(&tgt_b);
        if !tgt_b.contains(&src_b.map_through(&block)) {
            return Err(MapError::NotWellDefined(
                p,
                q,
                "source boundaries do not land in target boundaries".into(),
            ));
        }
        let src_dim = src_reps.dim();
        let tgt_dim = tgt_reps.dim();
        let mut m = Matrix::zero(tgt_dim, src_dim);
        for (j, rep) in src_reps.basis_vectors().iter().enumerate() {
            let img = block.mul_vec(rep);
            if !tgt_z.contains_vec(&img) {
                return Err(MapError::NotWellDefined(
                    p,
                    q,
                    "image of a cocycle representative is not a cocycle".into(),
                ));
            }
            // Express the class: img = tgt_b·a + tgt_reps·c.
            let combined = tgt_b.basis().hstack(tgt_reps.basis());
            let coeffs = combined.solve(&img).ok_or_else(|| {
                MapError::NotWellDefined(p, q, "image class not expressible in target".into())
            })?;
            for i in 0..tgt_dim {
                m.set(i, j, coeffs[tgt_b.dim() + i].clone());
            }
        }
        let rank = m.rank();
        Ok(InducedMap {
            injective: rank == src_dim,
            surjective: rank == tgt_dim,
            matrix: m,
        })
    }

    /// Induced map on Bott-Chern cohomology at `(p,q)`.
    pub fn induced_bc_map(&self, p: i64, q: i64) -> Result<InducedMap, MapError> {
        let sz = self
            .source
            .del(p, q)
            .kernel()
            .intersection(&self.source.delbar(p, q).kernel());
        let sb = self.source.del_delbar(p - 1, q - 1).column_space();
        let tz = self
            .target
            .del(p, q)
            .kernel()
            .intersection(&self.target.delbar(p, q).kernel());
        let tb = self.target.del_delbar(p - 1, q - 1).column_space();
        self.induced_quotient_map(p, q, sz, sb, tz, tb)
    }

    /// Induced map on a bigraded theory at `(p,q)`.
    pub fn induced_map(&self, theory: Theory, p: i64, q: i64) -> Result<InducedMap, MapError> {
        match theory {
            Theory::BottChern => self.induced_bc_map(p, q),
            Theory::Del => self.induced_quotient_map(
                p,
                q,
                self.source.del(p, q).kernel(),
                self.source.del(p - 1, q).column_space(),
                self.target.del(p, q).kernel(),
                self.target.del(p - 1, q).column_space(),
            ),
            Theory::Delbar | Theory::E1 => self.induced_quotient_map(
                p,
                q,
                self.source.delbar(p, q).kernel(),
                self.source.delbar(p, q - 1).column_space(),
                self.target.delbar(p, q).kernel(),
                self.target.delbar(p, q - 1).column_space(),
            ),
            Theory::Aeppli => self.induced_quotient_map(
                p,
                q,
                self.source.del_delbar(p, q).kernel(),
                self.source
                    .del(p - 1, q)
                    .column_space()
                    .sum(&self.source.delbar(p, q - 1).column_space()),
                self.target.del_delbar(p, q).kernel(),
                self.target
                    .del(p - 1, q)
                    .column_space()
                    .sum(&self.target.delbar(p, q - 1).column_space()),
            ),
            Theory::PureType => {
                let surj = self.condition3_surjective(p, q);
                let inj = self.pure_type_injective(p, q);
                Ok(InducedMap {
                    matrix: Matrix::zero(0, 0),
                    injective: inj,
                    surjective: surj,
                })
            }
            Theory::DeRham => self.induced_total_map(p + q),
        }
    }

    /// Block of the induced map on total complexes `Tot^k(src) → Tot^k(tgt)`.
    pub fn tot_block(&self, k: i64) -> Matrix {
        let src = self.source.tot_layout(k);
        let dst = self.target.tot_layout(k);
        let mut m = Matrix::zero(self.target.tot_dim(k), self.source.tot_dim(k));
        for &((p, q), soff, sdim) in &src {
            let Some(&(_, toff, _)) = dst.iter().find(|&&(b, _, _)| b == (p, q)) else {
                continue;
            };
            let b = self.block(p, q);
            for i in 0..b.rows() {
                for j in 0..sdim {
                    let v = b.get(i, j);
                    if !v.is_zero() {
                        m.set(toff + i, soff + j, v.clone());
                    }
                }
            }
        }
        m
    }

    /// Induced map on total (de Rham) cohomology in degree `k`.
    pub fn induced_total_map(&self, k: i64) -> Result<InducedMap, MapError> {
        let sz = self.source.d_tot(k).kernel();
        let sb = self.source.d_tot(k - 1).column_space();
        let tz = self.target.d_tot(k).kernel();
        let tb = self.target.d_tot(k - 1).column_space();
        let block = self.tot_block(k);
        let src_reps = sz.complement_of(&sb);
        let tgt_reps = tz.complement_of(&tb);
        if !tb.contains(&sb.map_through(&block)) {
            return Err(MapError::NotWellDefined(k, 0, "boundary image escapes".into()));
        }
        let mut m = Matrix::zero(tgt_reps.dim(), src_reps.dim());
        for (j, rep) in src_reps.basis_vectors().iter().enumerate() {
            let img = block.mul_vec(rep);
            if !tz.contains_vec(&img) {
                return Err(MapError::NotWellDefined(k, 0, "cocycle image not closed".into()));
            }
            let combined = tb.basis().hstack(tgt_reps.basis());
            let coeffs = combined
                .solve(&img)
                .ok_or_else(|| MapError::NotWellDefined(k, 0, "class not expressible".into()))?;
            for i in 0..tgt_reps.dim() {
                m.set(i, j, coeffs[tb.dim() + i].clone());
            }
        }
        let rank = m.rank();
        Ok(InducedMap {
            injective: rank == src_reps.dim(),
            surjective: rank == tgt_reps.dim(),
            matrix: m,
        })
    }

    /// True when the induced maps on row (`∂`) cohomology are bijective at
    /// every bidegree.
    pub fn rows_quasi_iso(&self) -> bool {
        self.joint_support().into_iter().all(|(p, q)| {
            self.induced_map(Theory::Del, p, q)
                .map(|m| m.bijective())
                .unwrap_or(false)
        })
    }

    /// True when the induced maps on column (`∂̄`) cohomology are bijective
    /// at every bidegree.
    pub fn cols_quasi_iso(&self) -> bool {
        self.joint_support().into_iter().all(|(p, q)| {
            self.induced_map(Theory::Delbar, p, q)
                .map(|m| m.bijective())
                .unwrap_or(false)
        })
    }

    /// Surjectivity of the induced map on pure-type de Rham subquotients at
    /// `(p,q)`: the image of `ker d ∩ C^{p,q}` together with the ambient
    /// d-boundaries must cover `ker d ∩ A^{p,q}`.
    pub fn condition3_surjective(&self, p: i64, q: i64) -> bool {
        let k = p + q;
        let src_pure = self.source.pure_closed_in_tot(p, q);
        let tgt_pure = self.target.pure_closed_in_tot(p, q);
        let tgt_exact = self.target.d_tot(k - 1).column_space();
        let img = src_pure.map_through(&self.tot_block(k));
        let covered = img.sum(&tgt_pure.intersection(&tgt_exact));
        covered.contains(&tgt_pure)
    }

    fn pure_type_injective(&self, p: i64, q: i64) -> bool {
        // Classes of source pure cocycles that die in the target quotient
        // must already die in the source quotient.
        let k = p + q;
        let src_pure = self.source.pure_closed_in_tot(p, q);
        let src_exact = self.source.d_tot(k - 1).column_space();
        let tgt_exact = self.target.d_tot(k - 1).column_space();
        let block = self.tot_block(k);
        let src_dim = src_pure.dim() - src_pure.intersection(&src_exact).dim();
        let img = src_pure.map_through(&block);
        let img_alive = img.dim() - img.intersection(&tgt_exact).dim();
        // Injective iff no extra collapsing happens beyond the source's own.
        let collapsed_at_source = src_pure.dim() - src_dim;
        let collapsed_at_target = src_pure.dim() - img_alive;
        collapsed_at_source == collapsed_at_target
    }

    /// Constructive splitting along an inclusion `C ↪ A` whose columns are
    /// quasi-isomorphic: given `φ ∈ A^{p,q}` with `∂̄φ ∈ C^{p,q+1}`, produce
    /// `φ̃ ∈ C^{p,q}` and `φ̂ ∈ A^{p,q−1}` with `φ = φ̃ + ∂̄φ̂`, exactly.
    pub fn split_modulo_delbar(&self, p: i64, q: i64, phi: &[Scalar]) -> Result<Splitting, MapError> {
        assert_eq!(phi.len(), self.target.dim(p, q), "φ has wrong length");
        let delbar_phi = self.target.delbar(p, q).mul_vec(phi);
        // Pull ∂̄φ back into sub-complex coordinates.
        let up_block = self.block(p, q + 1);
        let Some(delbar_phi_sub) = up_block.solve(&delbar_phi) else {
            return Err(MapError::SplitPrecondition);
        };
        // Step 1: ∂̄φ is exact in the sub-complex (injectivity on H^{q+1}).
        let c1 = self
            .source
            .delbar(p, q)
            .solve(&delbar_phi_sub)
            .ok_or_else(|| MapError::SplitUnsolvable("∂̄φ not ∂̄-exact in the sub-complex".into()))?;
        // Step 2: φ − j(c1) is ∂̄-closed; write it as j(c2) + ∂̄φ̂
        // (surjectivity on H^q).
        let block = self.block(p, q);
        let j_c1 = block.mul_vec(&c1);
        let residue: Vec<Scalar> = phi.iter().zip(&j_c1).map(|(a, b)| a - b).collect();
        let closed_sub = self.source.delbar(p, q).kernel();
        let mut closed_in_ambient = Matrix::zero(self.target.dim(p, q), closed_sub.dim());
        for (j, v) in closed_sub.basis_vectors().iter().enumerate() {
            let img = block.mul_vec(v);
            for (i, x) in img.into_iter().enumerate() {
                closed_in_ambient.set(i, j, x);
            }
        }
        let delbar_prev = self.target.delbar(p, q - 1);
        let system = closed_in_ambient.hstack(&delbar_prev);
        let sol = system
            .solve(&residue)
            .ok_or_else(|| MapError::SplitUnsolvable("residue class not hit from the sub-complex".into()))?;
        let (coeffs_closed, coeffs_hat) = sol.split_at(closed_sub.dim());
        // φ̃ = c1 + c2 in sub coordinates.
        let mut phi_tilde_sub = c1.clone();
        for (j, v) in closed_sub.basis_vectors().iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                let add = &coeffs_closed[j] * x;
                phi_tilde_sub[i] = &phi_tilde_sub[i] + &add;
            }
        }
        let phi_tilde = block.mul_vec(&phi_tilde_sub);
        let phi_hat = coeffs_hat.to_vec();
        // The defining identity must hold exactly.
        let delbar_hat = delbar_prev.mul_vec(&phi_hat);
        for i in 0..phi.len() {
            let rhs = &phi_tilde[i] + &delbar_hat[i];
            if phi[i] != rhs {
                return Err(MapError::SplitUnsolvable("reconstruction identity failed".into()));
            }
        }
        Ok(Splitting {
            phi_tilde_sub,
            phi_tilde,
            phi_hat,
        })
    }
}
