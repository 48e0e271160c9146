//! Poincaré-duality pairings, the conjugate-linear star, adjoints, and the
//! Laplacian-kernel oracles.
//!
//! A [`PairedComplex`] equips a bounded double complex with a wedge pairing
//! `A^{p,q} × A^{n−p,n−q} → C` into a one-dimensional top piece. The stored
//! basis is declared orthonormal, so inner products are coordinatewise and
//! the adjoint of a differential is its conjugate transpose. The star is the
//! conjugate-linear map determined by `α ∧ star(β) = ⟨α, β⟩ · v`; with the
//! orthonormal declaration its matrix is the inverse of the pairing matrix.
//!
//! Conjugate-linear maps are stored as a plain matrix applied after
//! entrywise conjugation of coordinates: `F(x) = M · conj(x)`. Composition
//! rules used throughout: for conjugate-linear `F = (M)` and `G = (N)`,
//! `F∘G` is linear with matrix `M · conj(N)`; for linear `L`, `L∘F` is
//! conjugate-linear with matrix `L · M`, and `F∘L` with matrix `M · conj(L)`.

use crate::complex::{Bidegree, BigradedComplex};
use crate::matrix::Matrix;
use crate::scalar::{inner, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LaplacianKind {
    /// `[d, d*]` acting on the total complex.
    DeRham,
    /// `[∂, ∂*]`.
    Del,
    /// `[∂̄, ∂̄*]`.
    Delbar,
    /// The fourth-order Bott-Chern operator.
    BottChern,
    /// The fourth-order Aeppli operator.
    Aeppli,
}

impl LaplacianKind {
    pub fn all() -> [LaplacianKind; 5] {
        [
            LaplacianKind::DeRham,
            LaplacianKind::Del,
            LaplacianKind::Delbar,
            LaplacianKind::BottChern,
            LaplacianKind::Aeppli,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Differential {
    Del,
    Delbar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdViolation {
    pub bidegree: Bidegree,
    pub axiom: String,
}

impl fmt::Display for PdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({}, {}): {}", self.bidegree.0, self.bidegree.1, self.axiom)
    }
}

#[derive(Debug, Error)]
pub enum HodgeError {
    #[error("adjoint mismatch at ({0}, {1}): conjugate-transpose and star routes disagree")]
    AdjointMismatch(i64, i64),
    #[error("star undefined at ({0}, {1}): pairing block is not invertible")]
    StarUndefined(i64, i64),
}

#[derive(Clone)]
pub struct PairedComplex {
    base: BigradedComplex,
    pd_dim: i64,
    pairing: BTreeMap<Bidegree, Matrix>,
    star: BTreeMap<Bidegree, Matrix>,
}

/// An internal bidegree-shifted block operator on a bigraded space.
#[derive(Clone)]
struct Op {
    shift: (i64, i64),
    blocks: BTreeMap<Bidegree, Matrix>,
}

impl PairedComplex {
    /// Wraps a complex with its pairing matrices `P^{p,q}` (rows indexed by
    /// `A^{p,q}`, columns by `A^{n−p,n−q}`). Star blocks are derived where
    /// the pairing block is invertible; missing blocks surface later as
    /// axiom violations or `StarUndefined` errors.
    pub fn new(base: BigradedComplex, pd_dim: i64, pairing: BTreeMap<Bidegree, Matrix>) -> Self {
        let mut star = BTreeMap::new();
        for (&(p, q), m) in &pairing {
            if m.rows() == m.cols() {
                if let Some(inv) = m.inverse() {
                    star.insert((p, q), inv);
                }
            }
        }
        PairedComplex {
            base,
            pd_dim,
            pairing,
            star,
        }
    }

    pub fn base(&self) -> &BigradedComplex {
        &self.base
    }

    pub fn pd_dim(&self) -> i64 {
        self.pd_dim
    }

    pub fn pairing(&self, p: i64, q: i64) -> Matrix {
        match self.pairing.get(&(p, q)) {
            Some(m) => m.clone(),
            None => Matrix::zero(
                self.base.dim(p, q),
                self.base.dim(self.pd_dim - p, self.pd_dim - q),
            ),
        }
    }

    /// Matrix part of the conjugate-linear star `(p,q) → (n−p,n−q)`.
    pub fn star_matrix(&self, p: i64, q: i64) -> Result<Matrix, HodgeError> {
        if self.base.dim(p, q) == 0 {
            return Ok(Matrix::zero(
                self.base.dim(self.pd_dim - p, self.pd_dim - q),
                0,
            ));
        }
        self.star
            .get(&(p, q))
            .cloned()
            .ok_or(HodgeError::StarUndefined(p, q))
    }

    /// Checks the four pairing axioms plus star well-definedness.
    pub fn check_pd_axioms(&self) -> Vec<PdViolation> {
        let mut out = Vec::new();
        let n = self.pd_dim;
        let mut push = |bd: Bidegree, axiom: &str| {
            out.push(PdViolation {
                bidegree: bd,
                axiom: axiom.to_string(),
            })
        };
        for (p, q) in self.base.support() {
            if p < 0 || q < 0 || p > n || q > n {
                push((p, q), "support outside [0,n]^2");
            }
        }
        if self.base.dim(0, 0) != 1 {
            push((0, 0), "bottom piece is not one-dimensional");
        }
        if self.base.dim(n, n) != 1 {
            push((n, n), "top piece is not one-dimensional");
        }
        for (p, q) in self.base.support() {
            let m = self.pairing(p, q);
            let want = (self.base.dim(p, q), self.base.dim(n - p, n - q));
            if (m.rows(), m.cols()) != want {
                push((p, q), "pairing block shape mismatch");
                continue;
            }
            if m.rows() != m.cols() || m.inverse().is_none() {
                push((p, q), "pairing block is degenerate");
            }
        }
        // d vanishes in total degrees 0 and 2n-1.
        if self.base.tot_dim(0) > 0 && !self.base.d_tot(0).is_zero() {
            push((0, 0), "d(Tot^0) ≠ 0");
        }
        let top = 2 * n - 1;
        if self.base.tot_dim(top) > 0 && !self.base.d_tot(top).is_zero() {
            push((n, n - 1), "d(Tot^{2n-1}) ≠ 0");
        }
        out
    }

    fn op_del(&self) -> Op {
        self.op_from(|p, q| self.base.del(p, q), (1, 0))
    }

    fn op_delbar(&self) -> Op {
        self.op_from(|p, q| self.base.delbar(p, q), (0, 1))
    }

    fn op_from(&self, f: impl Fn(i64, i64) -> Matrix, shift: (i64, i64)) -> Op {
        let mut blocks = BTreeMap::new();
        for (p, q) in self.op_box() {
            blocks.insert((p, q), f(p, q));
        }
        Op { shift, blocks }
    }

    fn op_box(&self) -> Vec<Bidegree> {
        let Some((pmin, pmax, qmin, qmax)) = self.base.bidegree_bounds() else {
            return Vec::new();
        };
        let mut v = Vec::new();
        for p in (pmin - 2)..=(pmax + 2) {
            for q in (qmin - 2)..=(qmax + 2) {
                v.push((p, q));
            }
        }
        v
    }

    fn op_block(&self, op: &Op, p: i64, q: i64) -> Matrix {
        match op.blocks.get(&(p, q)) {
            Some(m) => m.clone(),
            None => Matrix::zero(
                self.base.dim(p + op.shift.0, q + op.shift.1),
                self.base.dim(p, q),
            ),
        }
    }

    /// `outer ∘ inner` as block operators.
    fn op_compose(&self, outer: &Op, inner_op: &Op) -> Op {
        let shift = (outer.shift.0 + inner_op.shift.0, outer.shift.1 + inner_op.shift.1);
        let mut blocks = BTreeMap::new();
        for (p, q) in self.op_box() {
            let first = self.op_block(inner_op, p, q);
            let second = self.op_block(outer, p + inner_op.shift.0, q + inner_op.shift.1);
            blocks.insert((p, q), second.mul(&first));
        }
        Op { shift, blocks }
    }

    fn op_adjoint(&self, op: &Op) -> Op {
        let shift = (-op.shift.0, -op.shift.1);
        let mut blocks = BTreeMap::new();
        for (p, q) in self.op_box() {
            let fwd = self.op_block(op, p + shift.0, q + shift.1);
            blocks.insert((p, q), fwd.conjugate_transpose());
        }
        Op { shift, blocks }
    }

    fn op_add(&self, a: &Op, b: &Op) -> Op {
        assert_eq!(a.shift, b.shift);
        let mut blocks = BTreeMap::new();
        for (p, q) in self.op_box() {
            blocks.insert((p, q), self.op_block(a, p, q).add(&self.op_block(b, p, q)));
        }
        Op {
            shift: a.shift,
            blocks,
        }
    }

    /// Adjoint of `∂` or `∂̄` at `(p,q)`, computed both as the conjugate
    /// transpose of the differential block and as `−star∘D∘star` through the
    /// stored star maps. The two must agree; disagreement means the pairing
    /// is inconsistent with the orthonormal-basis declaration.
    pub fn adjoint(&self, which: Differential, p: i64, q: i64) -> Result<Matrix, HodgeError> {
        let n = self.pd_dim;
        let (block_in, block_star_src): (Matrix, Matrix) = match which {
            Differential::Del => (self.base.del(p - 1, q), self.base.del(n - p, n - q)),
            Differential::Delbar => (self.base.delbar(p, q - 1), self.base.delbar(n - p, n - q)),
        };
        let route_transpose = block_in.conjugate_transpose();
        // −star ∘ D ∘ star, expanded with the conjugate-linear composition
        // rules: x ↦ −S_out · conj(D) · conj(S_in) · x.
        let s_in = self.star_matrix(p, q)?;
        let (tp, tq) = match which {
            Differential::Del => (n - p + 1, n - q),
            Differential::Delbar => (n - p, n - q + 1),
        };
        let s_out = self.star_matrix(tp, tq)?;
        let route_star = s_out.mul(&block_star_src.conj()).mul(&s_in.conj()).neg();
        if route_transpose != route_star {
            return Err(HodgeError::AdjointMismatch(p, q));
        }
        Ok(route_transpose)
    }

    /// All blocks of a bigraded Laplacian at once. Panics on `DeRham`,
    /// which acts on total degrees rather than bidegrees.
    pub fn laplacian_blocks(&self, kind: LaplacianKind) -> BTreeMap<Bidegree, Matrix> {
        let op = match kind {
            LaplacianKind::DeRham => panic!("DeRham Laplacian has no bigraded blocks"),
            LaplacianKind::Del => {
                let d = self.op_del();
                let ds = self.op_adjoint(&d);
                self.op_add(&self.op_compose(&ds, &d), &self.op_compose(&d, &ds))
            }
            LaplacianKind::Delbar => {
                let d = self.op_delbar();
                let ds = self.op_adjoint(&d);
                self.op_add(&self.op_compose(&ds, &d), &self.op_compose(&d, &ds))
            }
            LaplacianKind::BottChern => {
                let del = self.op_del();
                let delbar = self.op_delbar();
                let del_s = self.op_adjoint(&del);
                let delbar_s = self.op_adjoint(&delbar);
                let dd = self.op_compose(&del, &delbar); // ∂∂̄
                let dd_s = self.op_adjoint(&dd);
                let mixed = self.op_compose(&delbar_s, &del); // ∂̄*∂
                let mixed_s = self.op_adjoint(&mixed);
                let mut l = self.op_compose(&dd, &dd_s);
                l = self.op_add(&l, &self.op_compose(&dd_s, &dd));
                l = self.op_add(&l, &self.op_compose(&mixed, &mixed_s));
                l = self.op_add(&l, &self.op_compose(&mixed_s, &mixed));
                l = self.op_add(&l, &self.op_compose(&delbar_s, &delbar));
                l = self.op_add(&l, &self.op_compose(&del_s, &del));
                l
            }
            LaplacianKind::Aeppli => {
                let del = self.op_del();
                let delbar = self.op_delbar();
                let del_s = self.op_adjoint(&del);
                let delbar_s = self.op_adjoint(&delbar);
                let dd = self.op_compose(&del, &delbar);
                let dd_s = self.op_adjoint(&dd);
                let mixed = self.op_compose(&delbar, &del_s); // ∂̄∂*
                let mixed_s = self.op_adjoint(&mixed);
                let mut l = self.op_compose(&del, &del_s);
                l = self.op_add(&l, &self.op_compose(&delbar, &delbar_s));
                l = self.op_add(&l, &self.op_compose(&dd_s, &dd));
                l = self.op_add(&l, &self.op_compose(&dd, &dd_s));
                l = self.op_add(&l, &self.op_compose(&mixed_s, &mixed));
                l = self.op_add(&l, &self.op_compose(&mixed, &mixed_s));
                l
            }
        };
        op.blocks
    }

    /// The assembled Laplacian block at `(p,q)` (bidegree-preserving).
    /// For `DeRham` the operator acts on `Tot^{p+q}` and the returned matrix
    /// is the full total-degree block.
    pub fn laplacian_matrix(&self, kind: LaplacianKind, p: i64, q: i64) -> Matrix {
        match kind {
            LaplacianKind::DeRham => {
                let k = p + q;
                let d_k = self.base.d_tot(k);
                let d_prev = self.base.d_tot(k - 1);
                d_k.conjugate_transpose()
                    .mul(&d_k)
                    .add(&d_prev.mul(&d_prev.conjugate_transpose()))
            }
            _ => self
                .laplacian_blocks(kind)
                .get(&(p, q))
                .cloned()
                .unwrap_or_else(|| {
                    let d = self.base.dim(p, q);
                    Matrix::zero(d, d)
                }),
        }
    }

    /// Kernel dimension of the chosen Laplacian. For the bigraded kinds the
    /// operator is restricted to `A^{p,q}`; for `DeRham` it acts on the whole
    /// of `Tot^{p+q}`.
    pub fn laplacian_kernel_dim(&self, kind: LaplacianKind, p: i64, q: i64) -> usize {
        self.laplacian_matrix(kind, p, q).kernel().dim()
    }

    /// `ker L ∩ im L = 0` together with `dim ker + dim im = dim`, i.e. the
    /// space splits as kernel plus image.
    pub fn check_harmonic_decomposition(&self, kind: LaplacianKind, p: i64, q: i64) -> bool {
        harmonic_decomposition_holds(&self.laplacian_matrix(kind, p, q))
    }

    /// Mismatches of the star duality: pairs where `h_BC^{p,q}` differs from
    /// `h_A^{n−p,n−q}`, or where the star fails to intertwine the Bott-Chern
    /// and Aeppli Laplacians as matrices.
    pub fn star_duality_check(&self) -> Vec<DualityMismatch> {
        let n = self.pd_dim;
        let mut out = Vec::new();
        let bc_blocks = self.laplacian_blocks(LaplacianKind::BottChern);
        let a_blocks = self.laplacian_blocks(LaplacianKind::Aeppli);
        let block = |m: &BTreeMap<Bidegree, Matrix>, p: i64, q: i64| -> Matrix {
            m.get(&(p, q)).cloned().unwrap_or_else(|| {
                let d = self.base.dim(p, q);
                Matrix::zero(d, d)
            })
        };
        for (p, q) in self.base.support() {
            let bc = self.base.h_bott_chern(p, q).dimension;
            let ae = self.base.h_aeppli(n - p, n - q).dimension;
            if bc != ae {
                out.push(DualityMismatch {
                    bidegree: (p, q),
                    h_bc: bc,
                    h_aeppli_dual: ae,
                    intertwining_failed: false,
                });
                continue;
            }
            // star ∘ Δ_BC = Δ_A ∘ star as conjugate-linear maps:
            // S · conj(L_BC) = L_A · S blockwise.
            let Ok(s) = self.star_matrix(p, q) else {
                out.push(DualityMismatch {
                    bidegree: (p, q),
                    h_bc: bc,
                    h_aeppli_dual: ae,
                    intertwining_failed: true,
                });
                continue;
            };
            let l_bc = block(&bc_blocks, p, q);
            let l_a = block(&a_blocks, n - p, n - q);
            if s.mul(&l_bc.conj()) != l_a.mul(&s) {
                out.push(DualityMismatch {
                    bidegree: (p, q),
                    h_bc: bc,
                    h_aeppli_dual: ae,
                    intertwining_failed: true,
                });
            }
        }
        out
    }

    /// Exact evaluation of `⟨Δ̃^BC x, x⟩` as the sum of the six squared
    /// norms from its defining expansion; used as a self-check.
    pub fn bc_energy_identity_holds(&self, p: i64, q: i64, x: &[Scalar]) -> bool {
        let lap = self.laplacian_matrix(LaplacianKind::BottChern, p, q);
        let lhs = inner(&lap.mul_vec(x), x);
        let del = self.base.del(p, q);
        let delbar = self.base.delbar(p, q);
        let dd = self.base.del_delbar(p, q);
        let dd_star_in = self.base.del_delbar(p - 1, q - 1).conjugate_transpose();
        let mixed = self
            .base
            .delbar(p + 1, q - 1)
            .conjugate_transpose()
            .mul(&self.base.del(p, q)); // ∂̄*∂ at (p,q)
        let mixed_other = self
            .base
            .del(p - 1, q + 1)
            .conjugate_transpose()
            .mul(&self.base.delbar(p, q)); // ∂*∂̄ at (p,q)
        let norms = [
            dd_star_in.mul_vec(x),
            dd.mul_vec(x),
            mixed_other.mul_vec(x),
            mixed.mul_vec(x),
            delbar.mul_vec(x),
            del.mul_vec(x),
        ];
        let mut rhs = Scalar::zero();
        for v in &norms {
            rhs += &inner(v, v);
        }
        lhs == rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityMismatch {
    pub bidegree: Bidegree,
    pub h_bc: usize,
    pub h_aeppli_dual: usize,
    pub intertwining_failed: bool,
}

/// Kernel-image splitting test for a square operator block.
pub fn harmonic_decomposition_holds(m: &Matrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let ker = m.kernel();
    let im = m.column_space();
    ker.intersection(&im).dim() == 0 && ker.dim() + im.dim() == m.cols()
}
