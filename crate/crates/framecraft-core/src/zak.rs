//! The Zak transform for a pair K ≤ G, range functions classifying the
//! K-invariant subspaces of L²(G), canonical irreducible decompositions, and
//! frame bounds for systems of K-translates.
//!
//! L²(G) carries the weight 1/|K| per point of G (with counting measure on
//! K\G), so that ξ ↦ ξ·τ(Kx) is a measure-space isomorphism and the Zak
//! transform is unitary with the same normalization the Fourier layer uses
//! on L²(K).

use crate::error::{Error, Result};
use crate::fourier::{fourier, inverse_fourier, FourierCoefficients, GroupFunction};
use crate::frame::{report_from_spectra, FrameReport};
use crate::group::CosetDecomposition;
use crate::group::FiniteGroup;
use crate::linalg::{
    cr, hermitian_eigenvalues, orthonormal_span, residual_outside_span, svd, C64, CMat, CVec,
};
use crate::repr::IrrepTable;
use crate::tol::Tolerances;
use std::sync::Arc;

/// L²(G) for the pair (G, K): the parent group together with the coset
/// decomposition that fixes the cross section τ.
#[derive(Clone, Debug)]
pub struct LtwoG {
    decomposition: Arc<CosetDecomposition>,
}

impl LtwoG {
    pub fn new(decomposition: CosetDecomposition) -> Self {
        LtwoG {
            decomposition: Arc::new(decomposition),
        }
    }

    pub fn decomposition(&self) -> &Arc<CosetDecomposition> {
        &self.decomposition
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        self.decomposition.parent()
    }

    /// The subgroup K as a group in its own right.
    pub fn subgroup(&self) -> &Arc<FiniteGroup> {
        self.decomposition.embedding().induced()
    }

    pub fn n_cosets(&self) -> usize {
        self.decomposition.n_cosets()
    }

    fn check_parent_function(&self, f: &GroupFunction) -> Result<()> {
        if f.group() != self.parent() {
            return Err(Error::GroupMismatch(
                "the function does not live on the parent group".into(),
            ));
        }
        Ok(())
    }

    /// ⟨f,g⟩ = (1/|K|)·Σ_{x∈G} f(x)·conj(g(x)).
    pub fn inner_product(&self, f: &GroupFunction, g: &GroupFunction) -> Result<C64> {
        self.check_parent_function(f)?;
        self.check_parent_function(g)?;
        let k = self.subgroup().order() as f64;
        let dot: C64 = self
            .parent()
            .elements()
            .map(|x| f.value(x) * g.value(x).conj())
            .sum();
        Ok(dot / cr(k))
    }

    pub fn norm_sq(&self, f: &GroupFunction) -> Result<f64> {
        Ok(self.inner_product(f, f)?.re)
    }

    /// Restriction f_{Kx}(ξ) = f(ξ·τ(Kx)) as a function on K.
    pub fn restriction(&self, f: &GroupFunction, coset: usize) -> Result<GroupFunction> {
        self.check_parent_function(f)?;
        let emb = self.decomposition.embedding();
        let tau = self.decomposition.representative(coset);
        let values = (0..emb.subgroup_order())
            .map(|k| f.value(self.parent().mul(emb.parent_of(k), tau)))
            .collect();
        GroupFunction::new(self.subgroup().clone(), values)
    }

    /// Write g ∈ G as ξ·τ(Kx): returns (k-index of ξ, coset index of Kx).
    pub fn decompose_element(&self, g: usize) -> (usize, usize) {
        let coset = self.decomposition.coset_of(g);
        let tau = self.decomposition.representative(coset);
        let xi = self.parent().mul(g, self.parent().inv(tau));
        let k = self
            .decomposition
            .embedding()
            .k_index_of(xi)
            .expect("coset decomposition is exact");
        (k, coset)
    }
}

/// Operator-valued Zak coefficients: per irrep π of K a block of shape
/// (|K\G|·d_π) × d_π, rows grouped by coset then H_π-coordinate, whose rows
/// at coset Kx are the Fourier block (f_{Kx})^(π).
#[derive(Clone, Debug)]
pub struct ZakCoefficients {
    decomposition: Arc<CosetDecomposition>,
    table: Arc<IrrepTable>,
    blocks: Vec<CMat>,
}

impl ZakCoefficients {
    pub fn new(
        decomposition: Arc<CosetDecomposition>,
        table: Arc<IrrepTable>,
        blocks: Vec<CMat>,
    ) -> Result<Self> {
        if table.group() != decomposition.embedding().induced() {
            return Err(Error::GroupMismatch(
                "the irrep table is not over the subgroup".into(),
            ));
        }
        if blocks.len() != table.n_irreps() {
            return Err(Error::SizeMismatch(format!(
                "{} blocks for {} irreps",
                blocks.len(),
                table.n_irreps()
            )));
        }
        let n_c = decomposition.n_cosets();
        for (pi, b) in blocks.iter().enumerate() {
            let d = table.dim(pi);
            if b.nrows() != n_c * d || b.ncols() != d {
                return Err(Error::ShapeMismatch(format!(
                    "block {pi} is {}×{}, expected {}×{d}",
                    b.nrows(),
                    b.ncols(),
                    n_c * d
                )));
            }
        }
        Ok(ZakCoefficients {
            decomposition,
            table,
            blocks,
        })
    }

    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn decomposition(&self) -> &Arc<CosetDecomposition> {
        &self.decomposition
    }

    pub fn block(&self, pi: usize) -> &CMat {
        &self.blocks[pi]
    }

    pub fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    /// The d_π×d_π slice of block π belonging to one coset.
    pub fn coset_slice(&self, pi: usize, coset: usize) -> CMat {
        let d = self.table.dim(pi);
        self.blocks[pi].rows(coset * d, d).into_owned()
    }

    /// Σ_π d_π·‖(Zf)(π)‖²_HS, which unitarity equates with ‖f‖²_{L²(G)}.
    pub fn energy(&self) -> f64 {
        self.blocks
            .iter()
            .enumerate()
            .map(|(pi, b)| self.table.dim(pi) as f64 * crate::linalg::hs_norm_sq(b))
            .sum()
    }
}

/// Zak transform of f ∈ L²(G): stack the Fourier blocks of the coset
/// restrictions f_{Kx}.
pub fn zak(f: &GroupFunction, ctx: &LtwoG, table: &Arc<IrrepTable>) -> Result<ZakCoefficients> {
    ctx.check_parent_function(f)?;
    if table.group() != ctx.subgroup() {
        return Err(Error::GroupMismatch(
            "the irrep table is not over the subgroup".into(),
        ));
    }
    let n_c = ctx.n_cosets();
    let mut blocks: Vec<CMat> = (0..table.n_irreps())
        .map(|pi| CMat::zeros(n_c * table.dim(pi), table.dim(pi)))
        .collect();
    for c in 0..n_c {
        let fc = ctx.restriction(f, c)?;
        let coeffs = fourier(&fc, table)?;
        for (pi, block) in blocks.iter_mut().enumerate() {
            let d = table.dim(pi);
            block.rows_mut(c * d, d).copy_from(coeffs.block(pi));
        }
    }
    ZakCoefficients::new(ctx.decomposition().clone(), table.clone(), blocks)
}

/// Reassemble f from its Zak coefficients: per coset, Fourier-invert the
/// corresponding row slices and transport back along the cross section.
pub fn inverse_zak(z: &ZakCoefficients) -> Result<GroupFunction> {
    let decomposition = z.decomposition();
    let parent = decomposition.parent();
    let emb = decomposition.embedding();
    let mut values = vec![C64::new(0.0, 0.0); parent.order()];
    for c in 0..decomposition.n_cosets() {
        let slices = (0..z.table().n_irreps())
            .map(|pi| z.coset_slice(pi, c))
            .collect();
        let coeffs = FourierCoefficients::new(z.table().clone(), slices)?;
        let fc = inverse_fourier(&coeffs);
        let tau = decomposition.representative(c);
        for k in 0..emb.subgroup_order() {
            values[parent.mul(emb.parent_of(k), tau)] = fc.value(k);
        }
    }
    GroupFunction::new(parent.clone(), values)
}

/// A measurable field of subspaces J(π) ⊆ C^{ambient(π)}, stored as
/// orthonormal-column matrices, one per irrep of K.
#[derive(Clone, Debug)]
pub struct RangeFunction {
    table: Arc<IrrepTable>,
    fibers: Vec<CMat>,
}

impl RangeFunction {
    pub fn new(table: Arc<IrrepTable>, fibers: Vec<CMat>, tol: &Tolerances) -> Result<Self> {
        if fibers.len() != table.n_irreps() {
            return Err(Error::SizeMismatch(format!(
                "{} fibers for {} irreps",
                fibers.len(),
                table.n_irreps()
            )));
        }
        for (pi, q) in fibers.iter().enumerate() {
            if q.ncols() > q.nrows() {
                return Err(Error::ShapeMismatch(format!(
                    "fiber {pi} has {} columns in ambient dimension {}",
                    q.ncols(),
                    q.nrows()
                )));
            }
            if crate::linalg::unitary_deviation(q) > tol.numeric {
                return Err(Error::InvalidInput(format!(
                    "fiber {pi} does not have orthonormal columns"
                )));
            }
        }
        Ok(RangeFunction { table, fibers })
    }

    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn fiber(&self, pi: usize) -> &CMat {
        &self.fibers[pi]
    }

    pub fn fibers(&self) -> &[CMat] {
        &self.fibers
    }

    /// dim J(π) per irrep.
    pub fn fiber_dims(&self) -> Vec<usize> {
        self.fibers.iter().map(|q| q.ncols()).collect()
    }

    /// dim V_J = Σ_π d_π·dim J(π).
    pub fn total_dim(&self) -> usize {
        self.fibers
            .iter()
            .enumerate()
            .map(|(pi, q)| self.table.dim(pi) * q.ncols())
            .sum()
    }

    /// The pointwise orthogonal complement J'(π) = J(π)^⊥.
    pub fn complement(&self) -> Result<RangeFunction> {
        let fibers = self
            .fibers
            .iter()
            .map(|q| {
                let n = q.nrows();
                let residual = CMat::identity(n, n) - q * q.adjoint();
                // residual is a projector: singular values are 1 or 0
                orthonormal_span(&residual, 0.5)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RangeFunction {
            table: self.table.clone(),
            fibers,
        })
    }
}

/// J(π) = span{ ran (Zf)(π) : f in the family }.
pub fn generated_range_function(
    family: &[GroupFunction],
    ctx: &LtwoG,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<RangeFunction> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let transforms = family
        .iter()
        .map(|f| zak(f, ctx, table))
        .collect::<Result<Vec<_>>>()?;
    let n_c = ctx.n_cosets();
    let mut fibers = Vec::with_capacity(table.n_irreps());
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        let mut stacked = CMat::zeros(n_c * d, d * family.len());
        for (j, z) in transforms.iter().enumerate() {
            stacked.columns_mut(j * d, d).copy_from(z.block(pi));
        }
        fibers.push(orthonormal_span(&stacked, tol.rank)?);
    }
    Ok(RangeFunction {
        table: table.clone(),
        fibers,
    })
}

#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub is_member: bool,
    /// Largest distance of a Zak column from its fiber.
    pub max_residual: f64,
    /// First irrep at which the containment fails.
    pub violating_irrep: Option<usize>,
}

/// Does f lie in V_J, i.e. is every column of (Zf)(π) inside J(π)?
pub fn membership(
    f: &GroupFunction,
    j: &RangeFunction,
    ctx: &LtwoG,
    tol: &Tolerances,
) -> Result<MembershipReport> {
    let z = zak(f, ctx, j.table())?;
    let mut max_residual = 0.0f64;
    let mut scale = 0.0f64;
    let mut violating_irrep = None;
    for pi in 0..j.table().n_irreps() {
        let block = z.block(pi);
        if block.nrows() != j.fiber(pi).nrows() {
            return Err(Error::ShapeMismatch(format!(
                "fiber {pi} ambient dimension {} does not match the Zak block height {}",
                j.fiber(pi).nrows(),
                block.nrows()
            )));
        }
        for col in 0..block.ncols() {
            let v = CVec::from(block.column(col));
            scale = scale.max(v.norm());
            let r = residual_outside_span(j.fiber(pi), &v);
            if r > max_residual {
                max_residual = r;
            }
            if violating_irrep.is_none() && r > tol.numeric * (1.0 + scale) {
                violating_irrep = Some(pi);
            }
        }
    }
    let is_member = max_residual <= tol.numeric * (1.0 + scale);
    Ok(MembershipReport {
        is_member,
        max_residual,
        violating_irrep: if is_member { None } else { violating_irrep },
    })
}

/// One irreducible K-invariant subspace of V_J: d_π orthonormal functions
/// built from a single fiber basis column, carrying the contragredient of π
/// under left K-translation.
#[derive(Clone, Debug)]
pub struct IrreducibleComponent {
    /// Index of the fiber irrep that produced the component.
    pub irrep_index: usize,
    pub fiber_column: usize,
    pub dim: usize,
    /// Orthonormal basis of the component inside L²(G).
    pub basis: Vec<GroupFunction>,
    /// Table index of the irrep equivalent to the left-translation action on
    /// the component (the contragredient of `irrep_index`).
    pub carries: usize,
}

/// Decompose V_J into irreducible K-invariant subspaces: one component per
/// (π, orthonormal basis vector F of J(π)), with basis functions
/// φ_j = Z⁻¹(F·e_j^T/√d_π placed at π).
pub fn canonical_decomposition(
    j: &RangeFunction,
    ctx: &LtwoG,
) -> Result<Vec<IrreducibleComponent>> {
    let table = j.table();
    if table.group() != ctx.subgroup() {
        return Err(Error::GroupMismatch(
            "the range function is not over the subgroup".into(),
        ));
    }
    let n_c = ctx.n_cosets();
    for pi in 0..table.n_irreps() {
        if j.fiber(pi).nrows() != n_c * table.dim(pi) {
            return Err(Error::ShapeMismatch(format!(
                "fiber {pi} has ambient dimension {}, expected {}",
                j.fiber(pi).nrows(),
                n_c * table.dim(pi)
            )));
        }
    }
    let mut components = Vec::new();
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        let scale = cr(1.0 / (d as f64).sqrt());
        for col in 0..j.fiber(pi).ncols() {
            let f_col = j.fiber(pi).column(col);
            let mut basis = Vec::with_capacity(d);
            for jj in 0..d {
                let blocks: Vec<CMat> = (0..table.n_irreps())
                    .map(|sigma| {
                        let ds = table.dim(sigma);
                        let mut b = CMat::zeros(n_c * ds, ds);
                        if sigma == pi {
                            b.column_mut(jj).copy_from(&(&f_col * scale));
                        }
                        b
                    })
                    .collect();
                let z = ZakCoefficients::new(
                    ctx.decomposition().clone(),
                    table.clone(),
                    blocks,
                )?;
                basis.push(inverse_zak(&z)?);
            }
            components.push(IrreducibleComponent {
                irrep_index: pi,
                fiber_column: col,
                dim: d,
                basis,
                carries: table.contragredient_of(pi),
            });
        }
    }
    Ok(components)
}

/// Frame bounds of the translate system {L_ξ f : ξ ∈ K, f in the family}
/// for its closed span, fiber by fiber: per π the vectors (Zf)(π)e_i form a
/// finite system in J(π) whose frame operator's extreme nonzero eigenvalues
/// give the bounds; overall A is the min lower bound, B the max upper.
pub fn translates_frame_bounds(
    family: &[GroupFunction],
    ctx: &LtwoG,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<FrameReport> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let transforms = family
        .iter()
        .map(|f| zak(f, ctx, table))
        .collect::<Result<Vec<_>>>()?;
    let n_c = ctx.n_cosets();
    let mut spectra = Vec::with_capacity(table.n_irreps());
    let mut dims = Vec::with_capacity(table.n_irreps());
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        let ambient = n_c * d;
        let mut s = CMat::zeros(ambient, ambient);
        for z in &transforms {
            s.gemm(cr(1.0), z.block(pi), &z.block(pi).adjoint(), cr(1.0));
        }
        spectra.push(hermitian_eigenvalues(&s)?);
        dims.push(d);
    }
    let card_k = ctx.subgroup().order();
    let mut report = report_from_spectra(spectra, &dims, card_k, None, tol);
    report.is_frame_for_whole_space = Some(report.span_dim == ctx.parent().order());
    Ok(report)
}

/// Brute-force Gramian of the translate system with the 1/|K| weight:
/// entry ((f,ξ),(g,η)) = (1/|K|)·⟨L_η g, L_ξ f⟩_{L²(G)}, rows indexed by
/// family member then subgroup element (row = f_index·|K| + ξ).
pub fn translates_gramian_oracle(family: &[GroupFunction], ctx: &LtwoG) -> Result<CMat> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let emb = ctx.decomposition().embedding();
    let k = emb.subgroup_order();
    let mut translated = Vec::with_capacity(family.len() * k);
    for f in family {
        ctx.check_parent_function(f)?;
        for kk in 0..k {
            translated.push(f.left_translate(emb.parent_of(kk)));
        }
    }
    let n = translated.len();
    let mut g = CMat::zeros(n, n);
    for row in 0..n {
        for col in 0..n {
            g[(row, col)] =
                ctx.inner_product(&translated[col], &translated[row])? / cr(k as f64);
        }
    }
    Ok(g)
}

/// Per-fiber singular values of every Zak block, each list descending:
/// invariant under the choice of cross section.
pub fn fiber_singular_values(z: &ZakCoefficients) -> Result<Vec<Vec<f64>>> {
    z.blocks().iter().map(|b| Ok(svd(b)?.sigma)).collect()
}
