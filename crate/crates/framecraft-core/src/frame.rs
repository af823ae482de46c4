//! Frame analysis for a single orbit {ρ(ξ)f}: bounds from bracket
//! eigenvalues, the block-diagonalized Gramian with a brute-force oracle,
//! frame operator and canonical duals, the per-isotypical-component
//! decomposition of the analysis, and the 2-transitive tightness criterion.

use crate::bracket::{bracket, is_cyclic, orbit_matrix, RepVector};
use crate::error::{Error, Result};
use crate::group::GroupAction;
use crate::linalg::{
    cr, hermitian_eigenvalues, rank_from_eigenvalues, C64, CMat,
};
use crate::repr::{IrrepTable, UnitaryRep};
use crate::tol::Tolerances;
use std::sync::Arc;

/// Frame verdict for one generating system. Continuous quantities use the
/// 1/|K| normalization; discrete ones are card(K) times the continuous.
/// `per_pi_eigenvalues` is aligned with the irrep table order, each list
/// ascending; `tolerance` is the relative gap used for the tightness flags.
#[derive(Clone, Debug)]
pub struct FrameReport {
    pub span_dim: usize,
    pub is_frame: bool,
    pub is_tight: bool,
    pub is_parseval_continuous: bool,
    pub continuous_bounds: Option<(f64, f64)>,
    pub discrete_bounds: Option<(f64, f64)>,
    pub per_pi_eigenvalues: Vec<Vec<f64>>,
    pub tolerance: f64,
    /// Whether the system spans (hence frames) the ambient space, where the
    /// producing operation defines one; `None` when not applicable.
    pub is_frame_for_whole_space: Option<bool>,
}

/// Assemble a report from per-π spectra of fiber operators. `dims` carries
/// the weight d_π each fiber contributes to the span dimension.
pub(crate) fn report_from_spectra(
    per_pi_eigenvalues: Vec<Vec<f64>>,
    dims: &[usize],
    card_k: usize,
    is_frame_for_whole_space: Option<bool>,
    tol: &Tolerances,
) -> FrameReport {
    let global_max = per_pi_eigenvalues
        .iter()
        .flatten()
        .fold(0.0f64, |a, &x| a.max(x.abs()));
    let thresh = tol.rank * global_max;
    let span_dim: usize = per_pi_eigenvalues
        .iter()
        .zip(dims.iter())
        .map(|(eigs, &d)| d * rank_from_eigenvalues(eigs, thresh))
        .sum();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &e in per_pi_eigenvalues.iter().flatten() {
        if e.abs() > thresh {
            lo = lo.min(e);
            hi = hi.max(e);
        }
    }
    let continuous_bounds = (span_dim > 0).then_some((lo, hi));
    let discrete_bounds =
        continuous_bounds.map(|(a, b)| (card_k as f64 * a, card_k as f64 * b));
    let is_tight = continuous_bounds
        .map(|(a, b)| (b - a).abs() <= tol.tight * b.abs())
        .unwrap_or(false);
    let is_parseval_continuous = is_tight
        && continuous_bounds
            .map(|(a, b)| (a - 1.0).abs() <= tol.tight && (b - 1.0).abs() <= tol.tight)
            .unwrap_or(false);
    FrameReport {
        span_dim,
        // a finite orbit always frames its own closed span
        is_frame: true,
        is_tight,
        is_parseval_continuous,
        continuous_bounds,
        discrete_bounds,
        per_pi_eigenvalues,
        tolerance: tol.tight,
        is_frame_for_whole_space,
    }
}

/// Frame bounds of {ρ(ξ)f} for its span ⟨f⟩, read off the eigenvalues of the
/// bracket blocks [f,f](π). The whole-space flag is the cyclicity verdict.
pub fn frame_bounds_single(
    f: &RepVector,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<FrameReport> {
    let spectra = bracket(f, f, table)?.eigenvalues()?;
    let dims: Vec<usize> = (0..table.n_irreps()).map(|i| table.dim(i)).collect();
    let whole = is_cyclic(f, table, tol)?.is_cyclic;
    Ok(report_from_spectra(
        spectra,
        &dims,
        f.rep().group().order(),
        Some(whole),
        tol,
    ))
}

/// The Gramian compressed to blocks: for each π the matrix of
/// A ↦ [f,f](π)·A on B(H_π), over an orthonormal basis for the inner
/// product d_π·tr(B*A). Row-major flattening makes this [f,f](π) ⊗ I_{d_π}.
#[derive(Clone, Debug)]
pub struct GramianBlocks {
    table: Arc<IrrepTable>,
    blocks: Vec<CMat>,
}

impl GramianBlocks {
    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn block(&self, pi: usize) -> &CMat {
        &self.blocks[pi]
    }

    pub fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    /// Eigenvalues of all blocks pooled: the full Gramian spectrum.
    pub fn pooled_eigenvalues(&self) -> Result<Vec<f64>> {
        let mut all = Vec::new();
        for b in &self.blocks {
            all.extend(hermitian_eigenvalues(b)?);
        }
        all.sort_by(f64::total_cmp);
        Ok(all)
    }
}

pub fn gramian_blocks(f: &RepVector, table: &Arc<IrrepTable>) -> Result<GramianBlocks> {
    let b = bracket(f, f, table)?;
    let blocks = b
        .blocks()
        .iter()
        .enumerate()
        .map(|(pi, m)| m.kronecker(&CMat::identity(table.dim(pi), table.dim(pi))))
        .collect();
    Ok(GramianBlocks {
        table: table.clone(),
        blocks,
    })
}

/// Brute-force continuous Gramian kernel G[ξ][η] = (1/|K|)·⟨ρ(η)f, ρ(ξ)f⟩.
pub fn gramian_oracle(f: &RepVector) -> CMat {
    let o = orbit_matrix(f);
    let k = f.rep().group().order();
    let mut g = CMat::zeros(k, k);
    g.gemm(cr(1.0 / k as f64), &o.adjoint(), &o, cr(0.0));
    g
}

/// Continuous frame operator S = (1/|K|)·Σ_ξ ρ(ξ)f (ρ(ξ)f)*.
pub fn frame_operator(f: &RepVector) -> CMat {
    let o = orbit_matrix(f);
    let k = f.rep().group().order() as f64;
    let dim = f.rep().dim();
    let mut s = CMat::zeros(dim, dim);
    s.gemm(cr(1.0 / k), &o, &o.adjoint(), cr(0.0));
    s
}

/// S⁻¹f with S inverted on ⟨f⟩ (rank-truncated pseudoinverse, zero outside).
pub fn canonical_dual(f: &RepVector, tol: &Tolerances) -> Result<RepVector> {
    let s = frame_operator(f);
    f.mapped(&crate::linalg::psd_pinv(&s, tol.rank)?)
}

/// S^{−1/2}f, the generator of the canonical Parseval frame on ⟨f⟩.
pub fn canonical_tight(f: &RepVector, tol: &Tolerances) -> Result<RepVector> {
    let s = frame_operator(f);
    f.mapped(&crate::linalg::psd_sqrt_pinv(&s, tol.rank)?)
}

/// Per-isotypical-component frame analysis with a cross-check against the
/// global report: the orbit of P_π f frames its component M_π ∩ ⟨f⟩ with
/// bounds inside the global ones, extremes attained.
#[derive(Clone, Debug)]
pub struct IsotypicalCheck {
    pub per_pi: Vec<FrameReport>,
    pub global: FrameReport,
    pub consistent: bool,
}

pub fn isotypical_frame_check(
    f: &RepVector,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<IsotypicalCheck> {
    let global = frame_bounds_single(f, table, tol)?;
    let mults = table.multiplicities(f.rep())?;
    let dims: Vec<usize> = (0..table.n_irreps()).map(|i| table.dim(i)).collect();
    let card_k = f.rep().group().order();
    let mut component_spectra = Vec::with_capacity(table.n_irreps());
    for pi in 0..table.n_irreps() {
        let p = table.isotypical_projection(f.rep(), pi)?;
        let g = f.mapped(&p)?;
        component_spectra.push(bracket(&g, &g, table)?.eigenvalues()?);
    }
    // rank decisions share one scale across components, so that a component
    // that is numerical dust relative to f does not masquerade as a frame
    let overall_max = component_spectra
        .iter()
        .flatten()
        .flatten()
        .fold(0.0f64, |a, &x| a.max(x.abs()));
    let noise = tol.rank * overall_max;
    let mut per_pi = Vec::with_capacity(table.n_irreps());
    for (pi, mut spectra) in component_spectra.into_iter().enumerate() {
        for e in spectra.iter_mut().flatten() {
            if e.abs() <= noise {
                *e = 0.0;
            }
        }
        // the orbit of P_π f spans all of M_π exactly when the rank of its
        // bracket at π̄ reaches mult(π, ρ)
        let rank = rank_from_eigenvalues(&spectra[table.contragredient_of(pi)], noise);
        let whole = rank == mults[pi];
        per_pi.push(report_from_spectra(
            spectra,
            &dims,
            card_k,
            Some(whole),
            tol,
        ));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut any = false;
    for r in &per_pi {
        if let Some((a, b)) = r.continuous_bounds {
            any = true;
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    let bounds_consistent = match (global.continuous_bounds, any) {
        (Some((ga, gb)), true) => {
            let scale = gb.abs().max(1.0);
            (ga - lo).abs() <= tol.numeric * scale && (gb - hi).abs() <= tol.numeric * scale
        }
        (None, false) => true,
        _ => false,
    };
    let whole_consistent = global.is_frame_for_whole_space
        == Some(
            per_pi
                .iter()
                .all(|r| r.is_frame_for_whole_space == Some(true)),
        );
    Ok(IsotypicalCheck {
        per_pi,
        global,
        consistent: bounds_consistent && whole_consistent,
    })
}

/// Verdict of the doubly-transitive tightness test |Σ_x f_x|² = Σ_x |f_x|²
/// together with the spectral cross-check on the permutation representation.
#[derive(Clone, Debug)]
pub struct TwoTransitiveReport {
    /// |Σ_x f_x|².
    pub sum_abs_sq: f64,
    /// Σ_x |f_x|² (counting norm on ℓ²(X)).
    pub norm_sq: f64,
    /// The criterion verdict: orbit is a tight frame for all of ℓ²(X).
    pub criterion_tight: bool,
    pub span_dim: usize,
    pub continuous_bounds: Option<(f64, f64)>,
    pub discrete_bounds: Option<(f64, f64)>,
    /// Tightness according to the frame-operator spectrum: full span and
    /// equal extreme eigenvalues.
    pub spectrum_tight: bool,
    pub consistent: bool,
}

pub fn two_transitive_tightness(
    action: &GroupAction,
    f: &[C64],
    tol: &Tolerances,
) -> Result<TwoTransitiveReport> {
    if !action.is_two_transitive() {
        return Err(Error::NotTwoTransitive);
    }
    let n = action.set_size();
    if f.len() != n {
        return Err(Error::SizeMismatch(format!(
            "{} vector entries for an action on {n} points",
            f.len()
        )));
    }
    let sum: C64 = f.iter().sum();
    let sum_abs_sq = sum.norm_sqr();
    let norm_sq: f64 = f.iter().map(|z| z.norm_sqr()).sum();
    let criterion_tight = (sum_abs_sq - norm_sq).abs() <= tol.tight * norm_sq.max(1.0);
    // cross-check on the permutation representation
    let rep = Arc::new(UnitaryRep::from_action(action)?);
    let fv = RepVector::from_slice(rep, f)?;
    let s = frame_operator(&fv);
    let eigs = hermitian_eigenvalues(&s)?;
    let global_max = eigs.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let thresh = tol.rank * global_max;
    let span_dim = rank_from_eigenvalues(&eigs, thresh);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &e in &eigs {
        if e.abs() > thresh {
            lo = lo.min(e);
            hi = hi.max(e);
        }
    }
    let card_k = action.group().order() as f64;
    let continuous_bounds = (span_dim > 0).then_some((lo, hi));
    let discrete_bounds = continuous_bounds.map(|(a, b)| (card_k * a, card_k * b));
    let spectrum_tight = span_dim == n
        && continuous_bounds
            .map(|(a, b)| (b - a).abs() <= tol.tight * b.abs())
            .unwrap_or(false);
    Ok(TwoTransitiveReport {
        sum_abs_sq,
        norm_sq,
        criterion_tight,
        span_dim,
        continuous_bounds,
        discrete_bounds,
        spectrum_tight,
        consistent: criterion_tight == spectrum_tight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{inverse_fourier, FourierCoefficients};
    use crate::group::GroupSpec;
    use crate::linalg::{c, max_abs, spectra_match};
    use crate::repr::{builtin_irrep_table, DihedralBasis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn four_dim_d3() -> (Arc<UnitaryRep>, Arc<IrrepTable>) {
        let (group, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let s3 = 3.0f64.sqrt();
        let a = CMat::from_row_slice(
            4,
            4,
            &[
                c(0.25, 0.0),
                c(0.0, s3 / 4.0),
                c(-0.75, 0.0),
                c(0.0, s3 / 4.0),
                c(0.0, s3 / 4.0),
                c(0.25, 0.0),
                c(0.0, s3 / 4.0),
                c(-0.75, 0.0),
                c(-0.75, 0.0),
                c(0.0, s3 / 4.0),
                c(0.25, 0.0),
                c(0.0, s3 / 4.0),
                c(0.0, s3 / 4.0),
                c(-0.75, 0.0),
                c(0.0, s3 / 4.0),
                c(0.25, 0.0),
            ],
        );
        let b = CMat::from_row_slice(
            4,
            4,
            &[
                c(0.5, 0.0),
                c(0.5, 0.0),
                c(0.5, 0.0),
                c(-0.5, 0.0),
                c(0.5, 0.0),
                c(-0.5, 0.0),
                c(-0.5, 0.0),
                c(-0.5, 0.0),
                c(0.5, 0.0),
                c(-0.5, 0.0),
                c(0.5, 0.0),
                c(0.5, 0.0),
                c(-0.5, 0.0),
                c(-0.5, 0.0),
                c(0.5, 0.0),
                c(-0.5, 0.0),
            ],
        );
        let rep = UnitaryRep::from_generators(group, 4, &[(1, a), (3, b)]).unwrap();
        (Arc::new(rep), table)
    }

    fn paper_vector(rep: &Arc<UnitaryRep>) -> RepVector {
        RepVector::from_slice(
            rep.clone(),
            &[c(3.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap()
    }

    #[test]
    fn known_bounds_from_bracket_eigenvalues() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let r = frame_bounds_single(&f, &table, &Tolerances::default()).unwrap();
        let (a, b) = r.continuous_bounds.unwrap();
        assert!((a - 2.0).abs() < 1e-9 && (b - 4.0).abs() < 1e-9);
        let (da, db) = r.discrete_bounds.unwrap();
        assert!((da - 12.0).abs() < 1e-9 && (db - 24.0).abs() < 1e-9);
        assert_eq!(r.span_dim, 4);
        assert!(r.is_frame);
        assert!(!r.is_tight);
        assert!(!r.is_parseval_continuous);
        assert_eq!(r.is_frame_for_whole_space, Some(true));
        assert!(spectra_match(&r.per_pi_eigenvalues[0], &[4.0], 1e-9));
        assert!(spectra_match(&r.per_pi_eigenvalues[1], &[4.0], 1e-9));
        assert!(spectra_match(&r.per_pi_eigenvalues[2], &[0.0, 2.0], 1e-9));
    }

    #[test]
    fn irreducible_orbit_is_tight_with_norm_over_dim_bound() {
        let (_, table) = builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let rep = Arc::new(table.irrep(2).clone());
        let f = RepVector::from_slice(rep, &[c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        let r = frame_bounds_single(&f, &table, &Tolerances::default()).unwrap();
        assert!(r.is_tight);
        assert!(r.is_parseval_continuous); // ‖f‖²/d = 2/2 = 1
        let (a, b) = r.continuous_bounds.unwrap();
        assert!((a - 1.0).abs() < 1e-10 && (b - 1.0).abs() < 1e-10);
        assert_eq!(r.is_frame_for_whole_space, Some(true));
    }

    #[test]
    fn zero_vector_gets_the_zero_span_convention() {
        let (rep, table) = four_dim_d3();
        let f = RepVector::zero(rep);
        let r = frame_bounds_single(&f, &table, &Tolerances::default()).unwrap();
        assert_eq!(r.span_dim, 0);
        assert!(r.continuous_bounds.is_none() && r.discrete_bounds.is_none());
        assert!(r.is_frame);
        assert!(!r.is_tight && !r.is_parseval_continuous);
        assert_eq!(r.is_frame_for_whole_space, Some(false));
    }

    #[test]
    fn oracle_spectrum_matches_block_spectrum() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let blocks = gramian_blocks(&f, &table).unwrap();
        let total: usize = blocks.blocks().iter().map(|b| b.nrows()).sum();
        assert_eq!(total, 6); // Σ d_π² = |K|
        for b in blocks.blocks() {
            assert!(max_abs(&(b - b.adjoint())) < 1e-12);
        }
        let pooled = blocks.pooled_eigenvalues().unwrap();
        assert!(spectra_match(&pooled, &[0.0, 0.0, 2.0, 2.0, 4.0, 4.0], 1e-9));
        let oracle = gramian_oracle(&f);
        assert!(max_abs(&(&oracle - oracle.adjoint())) < 1e-12);
        let oracle_eigs = hermitian_eigenvalues(&oracle).unwrap();
        assert!(spectra_match(&oracle_eigs, &pooled, 1e-8));
    }

    #[test]
    fn oracle_spectrum_matches_blocks_for_random_vectors() {
        let (rep, table) = four_dim_d3();
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..5 {
            let f = RepVector::random(rep.clone(), &mut rng);
            let pooled = gramian_blocks(&f, &table)
                .unwrap()
                .pooled_eigenvalues()
                .unwrap();
            let oracle_eigs = hermitian_eigenvalues(&gramian_oracle(&f)).unwrap();
            assert!(spectra_match(&oracle_eigs, &pooled, 1e-8));
        }
    }

    #[test]
    fn parseval_generator_has_projection_gramian() {
        // regular representation of Z₃; keep the trivial and first characters
        let (group, table) =
            builtin_irrep_table(&GroupSpec::Cyclic(3), DihedralBasis::Complex).unwrap();
        let blocks = vec![
            CMat::identity(1, 1),
            CMat::identity(1, 1),
            CMat::zeros(1, 1),
        ];
        let h = inverse_fourier(&FourierCoefficients::new(table.clone(), blocks).unwrap());
        let rep = Arc::new(UnitaryRep::left_regular(group.clone()).unwrap());
        // as a convolution (integral) operator the plain projection function
        // already idempotes: G_h∘G_h = G_h with the 1/|K| measure
        let hv = RepVector::from_slice(rep.clone(), h.values()).unwrap();
        let g_h = gramian_oracle(&hv);
        assert!(max_abs(&(&g_h * &g_h / cr(3.0) - &g_h)) < 1e-10);
        // scaling to unit continuous bound makes the matrix itself idempotent
        let fv = RepVector::from_slice(
            rep,
            &h.values().iter().map(|z| z / cr(3.0f64.sqrt())).collect::<Vec<_>>(),
        )
        .unwrap();
        let g = gramian_oracle(&fv);
        assert!(max_abs(&(&g * &g - &g)) < 1e-10);
        assert!(max_abs(&(&g - g.adjoint())) < 1e-12);
        let r = frame_bounds_single(&fv, &table, &Tolerances::default()).unwrap();
        assert!(r.is_parseval_continuous);
        assert_eq!(r.span_dim, 2);
    }

    #[test]
    fn trivial_group_gramian_is_the_squared_modulus() {
        let (group, table) =
            builtin_irrep_table(&GroupSpec::Cyclic(1), DihedralBasis::Complex).unwrap();
        let rep = Arc::new(UnitaryRep::left_regular(group).unwrap());
        let f = RepVector::from_slice(rep, &[c(3.0, 4.0)]).unwrap();
        let g = gramian_oracle(&f);
        assert_eq!(g.nrows(), 1);
        assert!((g[(0, 0)] - cr(25.0)).norm() < 1e-12);
        let blocks = gramian_blocks(&f, &table).unwrap();
        assert!((blocks.block(0)[(0, 0)] - cr(25.0)).norm() < 1e-12);
    }

    #[test]
    fn frame_operator_commutes_and_has_the_gramian_spectrum() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let s = frame_operator(&f);
        for xi in rep.group().elements() {
            let comm = &s * rep.mat(xi) - rep.mat(xi) * &s;
            assert!(max_abs(&comm) < 1e-9);
        }
        let eigs = hermitian_eigenvalues(&s).unwrap();
        assert!(spectra_match(&eigs, &[2.0, 2.0, 4.0, 4.0], 1e-9));
        // bracket identity: [Sg,h](π) = [f,h](π)·[g,f](π)
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let g = RepVector::random(rep.clone(), &mut rng);
        let h = RepVector::random(rep, &mut rng);
        let sg = g.mapped(&s).unwrap();
        let lhs = bracket(&sg, &h, &table).unwrap();
        let bfh = bracket(&f, &h, &table).unwrap();
        let bgf = bracket(&g, &f, &table).unwrap();
        for pi in 0..3 {
            let want = bfh.block(pi) * bgf.block(pi);
            assert!(max_abs(&(lhs.block(pi) - want)) < 1e-9);
        }
    }

    #[test]
    fn canonical_dual_reconstructs() {
        let (rep, _table) = four_dim_d3();
        let f = paper_vector(&rep);
        let tol = Tolerances::default();
        let d = canonical_dual(&f, &tol).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let g = RepVector::random(rep.clone(), &mut rng);
        let k = rep.group().order() as f64;
        let mut recon = RepVector::zero(rep.clone());
        for xi in rep.group().elements() {
            let coeff = g.inner(&d.translate(xi)).unwrap();
            recon = recon.plus(&f.translate(xi).scaled(coeff / cr(k))).unwrap();
        }
        let diff = recon.plus(&g.scaled(cr(-1.0))).unwrap();
        assert!(diff.norm_sq().sqrt() < 1e-9);
    }

    #[test]
    fn canonical_tight_generator_is_parseval() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let tol = Tolerances::default();
        let t = canonical_tight(&f, &tol).unwrap();
        let r = frame_bounds_single(&t, &table, &tol).unwrap();
        assert_eq!(r.span_dim, 4);
        assert!(r.is_parseval_continuous);
        let (a, b) = r.continuous_bounds.unwrap();
        assert!((a - 1.0).abs() < 1e-8 && (b - 1.0).abs() < 1e-8);
    }

    #[test]
    fn isotypical_components_bracket_the_global_bounds() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let chk = isotypical_frame_check(&f, &table, &Tolerances::default()).unwrap();
        assert!(chk.consistent);
        let want = [(4.0, 4.0), (4.0, 4.0), (2.0, 2.0)];
        for (r, (wa, wb)) in chk.per_pi.iter().zip(want) {
            let (a, b) = r.continuous_bounds.unwrap();
            assert!((a - wa).abs() < 1e-9 && (b - wb).abs() < 1e-9);
            assert!(r.is_tight);
            assert_eq!(r.is_frame_for_whole_space, Some(true));
        }
        let (ga, gb) = chk.global.continuous_bounds.unwrap();
        assert!((ga - 2.0).abs() < 1e-9 && (gb - 4.0).abs() < 1e-9);
    }

    #[test]
    fn single_component_vector_fails_whole_space_but_stays_consistent() {
        let (rep, table) = four_dim_d3();
        let f = paper_vector(&rep);
        let p = table.isotypical_projection(&rep, 2).unwrap();
        let g = f.mapped(&p).unwrap();
        let chk = isotypical_frame_check(&g, &table, &Tolerances::default()).unwrap();
        assert_eq!(chk.global.is_frame_for_whole_space, Some(false));
        assert!(chk.consistent);
        assert_eq!(chk.per_pi[0].is_frame_for_whole_space, Some(false));
        assert_eq!(chk.per_pi[2].is_frame_for_whole_space, Some(true));
    }

    #[test]
    fn multiplicity_free_equal_ratios_give_a_tight_frame() {
        let (_, table) = builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let rep = Arc::new(table.irrep(0).direct_sum(table.irrep(2)).unwrap());
        // ‖P_π₁f‖²/1 = 1 and ‖P_π₃f‖²/2 = 1
        let f = RepVector::from_slice(
            rep,
            &[cr(1.0), cr(2.0f64.sqrt()), cr(0.0)],
        )
        .unwrap();
        let r = frame_bounds_single(&f, &table, &Tolerances::default()).unwrap();
        assert!(r.is_tight);
        assert!(r.is_parseval_continuous);
        assert_eq!(r.is_frame_for_whole_space, Some(true));
    }

    #[test]
    fn two_point_tight_example() {
        let action = GroupAction::natural_symmetric(2).unwrap();
        let r = two_transitive_tightness(&action, &[cr(2.0), cr(0.0)], &Tolerances::default())
            .unwrap();
        assert!(r.criterion_tight && r.spectrum_tight && r.consistent);
        let (a, b) = r.continuous_bounds.unwrap();
        assert!((a - 2.0).abs() < 1e-10 && (b - 2.0).abs() < 1e-10);
        let (da, db) = r.discrete_bounds.unwrap();
        assert!((da - 4.0).abs() < 1e-10 && (db - 4.0).abs() < 1e-10);
    }

    #[test]
    fn three_point_tight_example() {
        let action = GroupAction::natural_symmetric(3).unwrap();
        let s3 = 3.0f64.sqrt();
        let f = [cr(1.0 + s3), cr(1.0 - s3), cr(1.0)];
        let r = two_transitive_tightness(&action, &f, &Tolerances::default()).unwrap();
        assert!(r.criterion_tight && r.spectrum_tight && r.consistent);
        assert!((r.sum_abs_sq - 9.0).abs() < 1e-10);
        assert!((r.norm_sq - 9.0).abs() < 1e-10);
        let (a, b) = r.continuous_bounds.unwrap();
        assert!((a - 3.0).abs() < 1e-9 && (b - 3.0).abs() < 1e-9);
        let (_, db) = r.discrete_bounds.unwrap();
        assert!((db - 18.0).abs() < 1e-9);
        assert_eq!(r.span_dim, 3);
    }

    #[test]
    fn all_ones_is_not_tight_beyond_one_point() {
        let action = GroupAction::natural_symmetric(3).unwrap();
        let f = [cr(1.0), cr(1.0), cr(1.0)];
        let r = two_transitive_tightness(&action, &f, &Tolerances::default()).unwrap();
        assert!(!r.criterion_tight);
        assert!(!r.spectrum_tight);
        assert!(r.consistent);
        assert_eq!(r.span_dim, 1);
    }

    #[test]
    fn non_two_transitive_actions_are_rejected() {
        let group = crate::group::FiniteGroup::cyclic(3).unwrap();
        let action = GroupAction::left_translation(group).unwrap();
        match two_transitive_tightness(&action, &[cr(1.0), cr(0.0), cr(0.0)], &Tolerances::default())
        {
            Err(Error::NotTwoTransitive) => {}
            other => panic!("expected NotTwoTransitive, got {other:?}"),
        }
    }
}
