//! The bracket map [f,g] of a finite-dimensional unitary representation, the
//! cyclic isometry into L²(K), cyclicity tests, and the embedding of H_ρ into
//! a regular-representation model on K × Z_m.

use crate::error::{Error, Result};
use crate::fourier::{fourier, inverse_fourier, FourierCoefficients, GroupFunction};
use crate::group::{FiniteGroup, SubgroupEmbedding};
use crate::linalg::{
    cr, hermitian_eigenvalues, orthonormal_span, psd_sqrt_pinv, rank_from_eigenvalues,
    residual_outside_span, C64, CMat, CVec,
};
use crate::repr::{IrrepTable, UnitaryRep};
use crate::tol::Tolerances;
use rand::Rng;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct RepVector {
    rep: Arc<UnitaryRep>,
    coords: CVec,
}

impl RepVector {
    pub fn new(rep: Arc<UnitaryRep>, coords: CVec) -> Result<Self> {
        if coords.len() != rep.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates in a representation of dimension {}",
                coords.len(),
                rep.dim()
            )));
        }
        Ok(RepVector { rep, coords })
    }

    pub fn from_slice(rep: Arc<UnitaryRep>, coords: &[C64]) -> Result<Self> {
        Self::new(rep, CVec::from_column_slice(coords))
    }

    pub fn zero(rep: Arc<UnitaryRep>) -> Self {
        let dim = rep.dim();
        RepVector {
            rep,
            coords: CVec::zeros(dim),
        }
    }

    pub fn random(rep: Arc<UnitaryRep>, rng: &mut impl Rng) -> Self {
        let coords = CVec::from_fn(rep.dim(), |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        RepVector { rep, coords }
    }

    pub fn rep(&self) -> &Arc<UnitaryRep> {
        &self.rep
    }

    pub fn coords(&self) -> &CVec {
        &self.coords
    }

    /// ρ(ξ)·f.
    pub fn translate(&self, xi: usize) -> RepVector {
        RepVector {
            rep: self.rep.clone(),
            coords: self.rep.mat(xi) * &self.coords,
        }
    }

    /// ⟨self, other⟩, linear in self.
    pub fn inner(&self, other: &RepVector) -> Result<C64> {
        self.check_same_rep(other)?;
        Ok(other.coords.dotc(&self.coords))
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.norm_squared()
    }

    pub fn scaled(&self, by: C64) -> RepVector {
        RepVector {
            rep: self.rep.clone(),
            coords: &self.coords * by,
        }
    }

    pub fn plus(&self, other: &RepVector) -> Result<RepVector> {
        self.check_same_rep(other)?;
        Ok(RepVector {
            rep: self.rep.clone(),
            coords: &self.coords + &other.coords,
        })
    }

    /// Apply a matrix in coordinates (e.g. a projection or frame operator).
    pub fn mapped(&self, m: &CMat) -> Result<RepVector> {
        if m.ncols() != self.coords.len() || m.nrows() != self.coords.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} matrix applied to a vector of length {}",
                m.nrows(),
                m.ncols(),
                self.coords.len()
            )));
        }
        Ok(RepVector {
            rep: self.rep.clone(),
            coords: m * &self.coords,
        })
    }

    pub(crate) fn check_same_rep(&self, other: &RepVector) -> Result<()> {
        if !Arc::ptr_eq(&self.rep, &other.rep) && {
            self.rep.group() != other.rep.group()
                || self.rep.dim() != other.rep.dim()
                || self
                    .rep
                    .matrices()
                    .iter()
                    .zip(other.rep.matrices().iter())
                    .any(|(a, b)| a != b)
        } {
            return Err(Error::RepMismatch(
                "vectors live in different representations".into(),
            ));
        }
        Ok(())
    }
}

/// Matrix with columns ρ(ξ)f, ξ running over K.
pub fn orbit_matrix(f: &RepVector) -> CMat {
    let group = f.rep().group();
    let dim = f.rep().dim();
    let n = group.order();
    let mut m = CMat::zeros(dim, n);
    for xi in group.elements() {
        m.set_column(xi, &(f.rep().mat(xi) * f.coords()));
    }
    m
}

/// Orthonormal basis of the cyclic subspace ⟨f⟩ = span{ρ(ξ)f}.
pub fn cyclic_span(f: &RepVector, tol: &Tolerances) -> Result<CMat> {
    orthonormal_span(&orbit_matrix(f), tol.rank)
}

/// (V_g f)(ξ) = ⟨f, ρ(ξ)g⟩.
pub fn matrix_element(f: &RepVector, g: &RepVector) -> Result<GroupFunction> {
    f.check_same_rep(g)?;
    let group = f.rep().group();
    let values = group
        .elements()
        .map(|xi| (f.rep().mat(xi) * g.coords()).dotc(f.coords()))
        .collect();
    GroupFunction::new(group.clone(), values)
}

#[derive(Clone, Debug)]
pub struct BracketValue {
    table: Arc<IrrepTable>,
    blocks: Vec<CMat>,
}

impl BracketValue {
    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn block(&self, pi: usize) -> &CMat {
        &self.blocks[pi]
    }

    pub fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    pub fn as_fourier(&self) -> Result<FourierCoefficients> {
        FourierCoefficients::new(self.table.clone(), self.blocks.clone())
    }

    /// Eigenvalues of every block, sorted ascending per block.
    pub fn eigenvalues(&self) -> Result<Vec<Vec<f64>>> {
        self.blocks.iter().map(hermitian_eigenvalues).collect()
    }
}

/// [f,g](π) = (V_g f)^(π), the Fourier transform of ξ ↦ ⟨f, ρ(ξ)g⟩.
pub fn bracket(f: &RepVector, g: &RepVector, table: &Arc<IrrepTable>) -> Result<BracketValue> {
    if f.rep().group() != table.group() {
        return Err(Error::GroupMismatch(
            "representation and irrep table are over different groups".into(),
        ));
    }
    let me = matrix_element(f, g)?;
    let coeffs = fourier(&me, table)?;
    Ok(BracketValue {
        table: table.clone(),
        blocks: coeffs.blocks().to_vec(),
    })
}

/// T_f g ∈ L²(K), via (T_f g)^(π) = ([f,f](π)^{1/2})†·[g,f](π).
/// Rejects g outside the cyclic subspace ⟨f⟩.
pub fn cyclic_isometry_image(
    g: &RepVector,
    f: &RepVector,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<GroupFunction> {
    let span = cyclic_span(f, tol)?;
    let g_norm = g.coords().norm();
    if g_norm > 0.0 {
        let residual = residual_outside_span(&span, g.coords()) / g_norm;
        if residual > tol.membership {
            return Err(Error::NotInCyclicSpan { residual });
        }
    }
    let bff = bracket(f, f, table)?;
    let bgf = bracket(g, f, table)?;
    let blocks = bff
        .blocks()
        .iter()
        .zip(bgf.blocks().iter())
        .map(|(ff, gf)| Ok(psd_sqrt_pinv(ff, tol.rank)? * gf))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = FourierCoefficients::new(table.clone(), blocks)?;
    Ok(inverse_fourier(&coeffs))
}

#[derive(Clone, Debug)]
pub struct CyclicityReport {
    pub is_cyclic: bool,
    /// rank [f,f](π) per table entry.
    pub bracket_ranks: Vec<usize>,
    /// mult(π̄, ρ) per table entry, aligned with bracket_ranks.
    pub contragredient_multiplicities: Vec<usize>,
    /// Σ_π d_π · rank [f,f](π).
    pub span_dim: usize,
    pub rep_dim: usize,
}

/// f is cyclic iff rank [f,f](π) = mult(π̄, ρ) for every π.
pub fn is_cyclic(f: &RepVector, table: &Arc<IrrepTable>, tol: &Tolerances) -> Result<CyclicityReport> {
    let b = bracket(f, f, table)?;
    let spectra = b.eigenvalues()?;
    let global_max = spectra
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    let bracket_ranks: Vec<usize> = spectra
        .iter()
        .map(|eigs| rank_from_eigenvalues(eigs, tol.rank * global_max))
        .collect();
    let mults = table.multiplicities(f.rep())?;
    let contragredient_multiplicities: Vec<usize> = (0..table.n_irreps())
        .map(|pi| mults[table.contragredient_of(pi)])
        .collect();
    let span_dim: usize = bracket_ranks
        .iter()
        .enumerate()
        .map(|(pi, r)| table.dim(pi) * r)
        .sum();
    let is_cyclic = bracket_ranks == contragredient_multiplicities;
    Ok(CyclicityReport {
        is_cyclic,
        bracket_ranks,
        contragredient_multiplicities,
        span_dim,
        rep_dim: f.rep().dim(),
    })
}

#[derive(Clone, Debug)]
pub struct RegularModelEmbedding {
    pub generators: Vec<RepVector>,
    /// K × Z_m with (ξ, c) ↦ ξ·m + c.
    pub model_group: Arc<FiniteGroup>,
    /// The copy of K inside the model group.
    pub model_subgroup: SubgroupEmbedding,
    /// (|K|·m) × dim matrix of the isometry, rows indexed by model elements.
    pub matrix: CMat,
}

impl RegularModelEmbedding {
    pub fn apply(&self, f: &RepVector) -> CVec {
        &self.matrix * f.coords()
    }

    pub fn copies(&self) -> usize {
        self.generators.len()
    }
}

/// Split H_ρ into orthogonal cyclic subspaces by greedy generator selection,
/// and assemble the isometry H_ρ → L²(K × Z_m) built from the per-generator
/// cyclic isometries. The image intertwines ρ with left K-translation.
pub fn embed_into_regular_model(
    rep: &Arc<UnitaryRep>,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<RegularModelEmbedding> {
    let dim = rep.dim();
    let group = rep.group().clone();
    let mut residual = CMat::identity(dim, dim);
    let mut generators: Vec<RepVector> = Vec::new();
    let mut spans: Vec<CMat> = Vec::new();
    let mut covered = 0usize;
    while covered < dim {
        // largest-norm column of the residual projector, earliest index on ties
        let (mut best_k, mut best_norm) = (0usize, -1.0f64);
        for k in 0..dim {
            let norm = residual.column(k).norm();
            if norm > best_norm + 1e-12 {
                best_k = k;
                best_norm = norm;
            }
        }
        if best_norm <= tol.rank.sqrt() {
            return Err(Error::Numeric(
                "residual projector vanished before the space was covered".into(),
            ));
        }
        let f = RepVector::new(rep.clone(), CVec::from(residual.column(best_k)))?;
        let span = cyclic_span(&f, tol)?;
        covered += span.ncols();
        let projector = &span * span.adjoint();
        residual -= &projector;
        generators.push(f);
        spans.push(span);
    }
    let m = generators.len();
    let z_m = FiniteGroup::cyclic(m)?;
    let model_group = FiniteGroup::product(&group, &z_m)?;
    let members: Vec<usize> = group.elements().map(|xi| xi * m).collect();
    let model_subgroup = SubgroupEmbedding::new(model_group.clone(), &members)?;
    let k_order = group.order();
    let mut matrix = CMat::zeros(k_order * m, dim);
    for col in 0..dim {
        let mut e = CVec::zeros(dim);
        e[col] = cr(1.0);
        for (c, (f_c, span_c)) in generators.iter().zip(spans.iter()).enumerate() {
            let projected = span_c * (span_c.adjoint() * &e);
            let g_c = RepVector::new(rep.clone(), projected)?;
            let h_c = cyclic_isometry_image(&g_c, f_c, table, tol)?;
            for xi in 0..k_order {
                matrix[(xi * m + c, col)] = h_c.value(xi);
            }
        }
    }
    Ok(RegularModelEmbedding {
        generators,
        model_group,
        model_subgroup,
        matrix,
    })
}
