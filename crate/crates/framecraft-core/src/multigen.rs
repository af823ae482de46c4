//! Multi-generator group frames: the column/row matrix view of a generating
//! family, Riesz bounds of the rows, the frame/Riesz duality between columns
//! and rows, per-isotypical verification, and the canonical decomposition of
//! an invariant subspace described by a range function over the fibers
//! C^{m_π}.
//!
//! The representation is given abstractly as H_ρ = ⊕_π H_π^{⊕m_π}; the j-th
//! generator's π-component is an m_π-tuple of vectors in H_π, arranged as the
//! columns of a d_π×m_π matrix. Only finite generator families are treated;
//! the direct-integral variant is out of scope.

use crate::bracket::RepVector;
use crate::error::{Error, Result};
use crate::frame::{report_from_spectra, FrameReport};
use crate::linalg::{
    cr, hermitian_eigenvalues, orthonormal_span, rank_from_eigenvalues, residual_outside_span,
    C64, CMat, CVec,
};
use crate::repr::{IrrepTable, UnitaryRep};
use crate::tol::Tolerances;
use crate::zak::RangeFunction;
use std::sync::Arc;

/// A finite family of generators for H_ρ = ⊕_π H_π^{⊕m_π}, stored as one
/// d_π×m_π matrix per generator and irrep whose column i is f^π_{i,j}.
#[derive(Clone, Debug)]
pub struct MultiGenSpec {
    table: Arc<IrrepTable>,
    multiplicities: Vec<usize>,
    generators: Vec<Vec<CMat>>,
}

impl MultiGenSpec {
    pub fn new(
        table: Arc<IrrepTable>,
        multiplicities: Vec<usize>,
        generators: Vec<Vec<CMat>>,
    ) -> Result<Self> {
        if multiplicities.len() != table.n_irreps() {
            return Err(Error::SizeMismatch(format!(
                "{} multiplicities for {} irreps",
                multiplicities.len(),
                table.n_irreps()
            )));
        }
        for (j, gen) in generators.iter().enumerate() {
            if gen.len() != table.n_irreps() {
                return Err(Error::SizeMismatch(format!(
                    "generator {j} supplies {} components for {} irreps",
                    gen.len(),
                    table.n_irreps()
                )));
            }
            for (pi, m) in gen.iter().enumerate() {
                if m.nrows() != table.dim(pi) || m.ncols() != multiplicities[pi] {
                    return Err(Error::ShapeMismatch(format!(
                        "generator {j} has a {}×{} component at irrep {} (want {}×{})",
                        m.nrows(),
                        m.ncols(),
                        table.name(pi),
                        table.dim(pi),
                        multiplicities[pi]
                    )));
                }
            }
        }
        Ok(MultiGenSpec {
            table,
            multiplicities,
            generators,
        })
    }

    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    /// The d_π×m_π component matrix of generator j at irrep π.
    pub fn component(&self, j: usize, pi: usize) -> &CMat {
        &self.generators[j][pi]
    }

    /// dim H_ρ = Σ_π d_π·m_π.
    pub fn dim(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(pi, &m)| m * self.table.dim(pi))
            .sum()
    }

    /// Every generator scaled by the same constant.
    pub fn scaled(&self, by: C64) -> MultiGenSpec {
        MultiGenSpec {
            table: self.table.clone(),
            multiplicities: self.multiplicities.clone(),
            generators: self
                .generators
                .iter()
                .map(|gen| gen.iter().map(|m| m * by).collect())
                .collect(),
        }
    }

    fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.multiplicities.len());
        let mut base = 0;
        for (pi, &m) in self.multiplicities.iter().enumerate() {
            offsets.push(base);
            base += m * self.table.dim(pi);
        }
        offsets
    }
}

/// Riesz data for the rows of one matrix A(π): the Gram form's eigenvalues
/// and the extreme bounds d_π·A, d_π·B.
#[derive(Clone, Debug)]
pub struct RieszRow {
    /// Eigenvalues of Q[i][i'] = Σ_j ⟨f^π_{i',j}, f^π_{i,j}⟩, ascending.
    pub gram_eigenvalues: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
    /// Rows linearly independent (lower eigenvalue above the rank cutoff).
    pub independent: bool,
}

#[derive(Clone, Debug)]
pub struct RieszReport {
    /// One entry per irrep; None where the fiber is empty (m_π = 0, or the
    /// supplied range function has a zero fiber).
    pub per_pi: Vec<Option<RieszRow>>,
    /// Frame report for the orbit of the generators, continuous bounds
    /// (min_π lower/d_π, max_π upper/d_π) over nonzero eigenvalues; the
    /// whole-space flag refers to H_ρ, or to V_J when a range function was
    /// supplied.
    pub overall: FrameReport,
    /// Rows of every A(π) are square-summable. Automatic for a finite
    /// generator family; recorded for the bookkeeping of the duality
    /// statement.
    pub rows_square_summable: bool,
}

/// The Hermitian form Q of the rows of A(π), so that c*Qc equals
/// Σ_j ‖Σ_i c_i f^π_{i,j}‖².
fn row_gram(spec: &MultiGenSpec, pi: usize) -> CMat {
    let m = spec.multiplicities()[pi];
    let mut q = CMat::zeros(m, m);
    for j in 0..spec.n_generators() {
        let f = spec.component(j, pi);
        q.gemm(cr(1.0), &f.adjoint(), f, cr(1.0));
    }
    q
}

/// Riesz bounds of the rows of A(π), restricted to a fiber subspace when one
/// is given (orthonormal columns in C^{m_π}); the full fiber otherwise.
pub fn riesz_row_bounds(
    spec: &MultiGenSpec,
    pi: usize,
    j_fiber: Option<&CMat>,
    tol: &Tolerances,
) -> Result<RieszRow> {
    let m = spec.multiplicities()[pi];
    if m == 0 {
        return Err(Error::InvalidInput(format!(
            "irrep {} has multiplicity zero",
            spec.table().name(pi)
        )));
    }
    let q = row_gram(spec, pi);
    let restricted = match j_fiber {
        Some(w) => {
            if w.nrows() != m {
                return Err(Error::ShapeMismatch(format!(
                    "fiber subspace has {} rows in a fiber of dimension {m}",
                    w.nrows()
                )));
            }
            if w.ncols() == 0 {
                return Err(Error::InvalidInput(format!(
                    "empty fiber subspace at irrep {}",
                    spec.table().name(pi)
                )));
            }
            w.adjoint() * &q * w
        }
        None => q,
    };
    let gram_eigenvalues = hermitian_eigenvalues(&restricted)?;
    let lower = gram_eigenvalues[0];
    let upper = gram_eigenvalues[gram_eigenvalues.len() - 1];
    Ok(RieszRow {
        independent: lower > tol.rank * upper,
        gram_eigenvalues,
        lower,
        upper,
    })
}

fn check_generators_in_vj(spec: &MultiGenSpec, j: &RangeFunction, tol: &Tolerances) -> Result<()> {
    for pi in 0..spec.table().n_irreps() {
        if j.fiber(pi).nrows() != spec.multiplicities()[pi] {
            return Err(Error::ShapeMismatch(format!(
                "range function fiber {} lives in dimension {} instead of {}",
                spec.table().name(pi),
                j.fiber(pi).nrows(),
                spec.multiplicities()[pi]
            )));
        }
    }
    for gen in 0..spec.n_generators() {
        for pi in 0..spec.table().n_irreps() {
            let f = spec.component(gen, pi);
            let scale = f.norm();
            if scale == 0.0 {
                continue;
            }
            // the analysis rows of the component are the columns of F*
            let rows = f.adjoint();
            let mut residual_sq = 0.0;
            for t in 0..rows.ncols() {
                let col: CVec = rows.column(t).into_owned();
                residual_sq += residual_outside_span(j.fiber(pi), &col).powi(2);
            }
            let residual = residual_sq.sqrt() / scale;
            if residual > tol.membership {
                return Err(Error::GeneratorsOutsideVJ {
                    generator: gen,
                    irrep: spec.table().name(pi).to_string(),
                    residual,
                });
            }
        }
    }
    Ok(())
}

/// Frame bounds of the orbit {ρ(ξ)f_j} from the Riesz data of the rows: the
/// orbit is a continuous frame for H_ρ (or V_J) with bounds A, B exactly when
/// every A(π) has independent rows with extreme Gram eigenvalues in
/// [d_π·A, d_π·B].
pub fn multigen_frame_bounds(
    spec: &MultiGenSpec,
    j: Option<&RangeFunction>,
    tol: &Tolerances,
) -> Result<RieszReport> {
    if let Some(j) = j {
        check_generators_in_vj(spec, j, tol)?;
    }
    let table = spec.table();
    let card_k = table.group().order();
    let mut per_pi = Vec::with_capacity(table.n_irreps());
    let mut spectra = Vec::with_capacity(table.n_irreps());
    let mut dims = Vec::with_capacity(table.n_irreps());
    let mut target_dim = 0;
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        dims.push(d);
        let fiber = j.map(|j| j.fiber(pi));
        let eff = match fiber {
            Some(w) => w.ncols(),
            None => spec.multiplicities()[pi],
        };
        if eff == 0 {
            per_pi.push(None);
            spectra.push(Vec::new());
            continue;
        }
        target_dim += d * eff;
        let row = riesz_row_bounds(spec, pi, fiber, tol)?;
        spectra.push(
            row.gram_eigenvalues
                .iter()
                .map(|e| e / d as f64)
                .collect(),
        );
        per_pi.push(Some(row));
    }
    let mut overall = report_from_spectra(spectra, &dims, card_k, None, tol);
    overall.is_frame_for_whole_space = Some(overall.span_dim == target_dim);
    Ok(RieszReport {
        per_pi,
        overall,
        rows_square_summable: true,
    })
}

/// ρ = ⊕_π π^{⊕m_π} in explicit coordinates, together with the generators as
/// vectors in those coordinates. Coordinates are grouped irrep, then copy,
/// then the d_π basis directions of the copy.
pub fn assemble_rep(spec: &MultiGenSpec) -> Result<(Arc<UnitaryRep>, Vec<RepVector>)> {
    let table = spec.table();
    let group = table.group().clone();
    let n = spec.dim();
    if n == 0 {
        return Err(Error::InvalidInput(
            "all multiplicities are zero; there is no space to represent".into(),
        ));
    }
    let offsets = spec.offsets();
    let mats = group
        .elements()
        .map(|xi| {
            let mut m = CMat::zeros(n, n);
            for pi in 0..table.n_irreps() {
                let d = table.dim(pi);
                let block = table.irrep(pi).mat(xi);
                for copy in 0..spec.multiplicities()[pi] {
                    let at = offsets[pi] + copy * d;
                    m.view_mut((at, at), (d, d)).copy_from(block);
                }
            }
            m
        })
        .collect();
    let rep = Arc::new(UnitaryRep::new(group, mats)?);
    let vectors = (0..spec.n_generators())
        .map(|gen| {
            let mut coords = CVec::zeros(n);
            for pi in 0..table.n_irreps() {
                let d = table.dim(pi);
                let f = spec.component(gen, pi);
                for copy in 0..spec.multiplicities()[pi] {
                    for t in 0..d {
                        coords[offsets[pi] + copy * d + t] = f[(t, copy)];
                    }
                }
            }
            RepVector::new(rep.clone(), coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rep, vectors))
}

/// Brute-force Gramian of the full orbit {ρ(ξ)f_j} in continuous
/// normalization: entry ((j,ξ),(j',η)) = (1/card K)·⟨ρ(η)f_{j'}, ρ(ξ)f_j⟩,
/// rows indexed j·card(K)+ξ. Its nonzero spectrum cross-validates the
/// Riesz-side bounds.
pub fn multigen_gramian_oracle(spec: &MultiGenSpec) -> Result<CMat> {
    let (_, vectors) = assemble_rep(spec)?;
    let k = spec.table().group().order();
    let n = spec.dim();
    let mut orbit = CMat::zeros(n, vectors.len() * k);
    for (j, f) in vectors.iter().enumerate() {
        for xi in 0..k {
            orbit.column_mut(j * k + xi).copy_from(f.translate(xi).coords());
        }
    }
    let mut gram = CMat::zeros(vectors.len() * k, vectors.len() * k);
    gram.gemm(cr(1.0 / k as f64), &orbit.adjoint(), &orbit, cr(0.0));
    Ok(gram)
}

/// Per-isotypical frame reports and their consistency with the overall one.
#[derive(Clone, Debug)]
pub struct MultiGenIsotypical {
    /// One report per irrep for the orbit projected to M_π = H_π^{⊕m_π};
    /// None where m_π = 0.
    pub per_pi: Vec<Option<FrameReport>>,
    pub overall: FrameReport,
    /// Overall bounds equal the min/max of the per-component bounds and the
    /// whole-space verdicts agree.
    pub consistent: bool,
}

/// The orbit frames each isotypical component M_π separately, with bounds
/// read from that component's rows alone; bounds for H_ρ are the worst case
/// over components.
pub fn multigen_isotypical_check(spec: &MultiGenSpec, tol: &Tolerances) -> Result<MultiGenIsotypical> {
    let overall_report = multigen_frame_bounds(spec, None, tol)?;
    let table = spec.table();
    let card_k = table.group().order();

    // one shared noise floor across components, as in the single-generator
    // isotypical analysis: a component that is numerical dust must not rank
    // against its own maximum
    let mut spectra: Vec<Vec<f64>> = Vec::with_capacity(table.n_irreps());
    for pi in 0..table.n_irreps() {
        if spec.multiplicities()[pi] == 0 {
            spectra.push(Vec::new());
        } else {
            let d = table.dim(pi) as f64;
            let q = row_gram(spec, pi);
            spectra.push(hermitian_eigenvalues(&q)?.iter().map(|e| e / d).collect());
        }
    }
    let overall_max = spectra
        .iter()
        .flatten()
        .fold(0.0f64, |acc, e| acc.max(e.abs()));
    let noise = tol.rank * overall_max;
    for s in spectra.iter_mut() {
        for e in s.iter_mut() {
            if e.abs() <= noise {
                *e = 0.0;
            }
        }
    }

    let mut per_pi = Vec::with_capacity(table.n_irreps());
    for pi in 0..table.n_irreps() {
        let m = spec.multiplicities()[pi];
        if m == 0 {
            per_pi.push(None);
            continue;
        }
        let spectrum = spectra[pi].clone();
        let whole = rank_from_eigenvalues(&spectrum, noise) == m;
        let report = report_from_spectra(
            vec![spectrum],
            &[table.dim(pi)],
            card_k,
            Some(whole),
            tol,
        );
        per_pi.push(Some(report));
    }

    let overall = overall_report.overall;
    let comp_bounds: Vec<(f64, f64)> = per_pi
        .iter()
        .flatten()
        .filter_map(|r| r.continuous_bounds)
        .collect();
    let scale = overall
        .continuous_bounds
        .map_or(1.0, |(_, b)| b.abs().max(1.0));
    let bounds_agree = match (overall.continuous_bounds, comp_bounds.is_empty()) {
        (None, true) => true,
        (Some((a, b)), false) => {
            let lo = comp_bounds.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
            let hi = comp_bounds.iter().map(|p| p.1).fold(0.0f64, f64::max);
            (a - lo).abs() <= tol.numeric * scale && (b - hi).abs() <= tol.numeric * scale
        }
        _ => false,
    };
    let whole_agree = overall.is_frame_for_whole_space
        == Some(
            per_pi
                .iter()
                .flatten()
                .all(|r| r.is_frame_for_whole_space == Some(true)),
        );
    Ok(MultiGenIsotypical {
        per_pi,
        overall,
        consistent: bounds_agree && whole_agree,
    })
}

/// One irreducible invariant subspace of ⊕_π H_π^{⊕m_π} per (π, fiber basis
/// vector): the space of tuples (conj(e_i)·h)_i with h ∈ H_π.
#[derive(Clone, Debug)]
pub struct GeneralComponent {
    pub irrep_index: usize,
    pub fiber_column: usize,
    pub dim: usize,
    /// Orthonormal basis in the coordinates of `assemble_rep`.
    pub basis: Vec<CVec>,
    /// The basis carries π itself: coefficients of ρ(ξ) on it are π(ξ)
    /// entrywise (the analysis map is conjugate-linear).
    pub carries: usize,
}

/// Decompose V_J ⊂ ⊕_π H_π^{⊕m_π} into irreducible invariant subspaces, one
/// per orthonormal basis vector of each fiber J(π). Every decomposition of
/// V_J into irreducibles arises this way from some choice of fiber bases.
pub fn canonical_decomposition_general(
    multiplicities: &[usize],
    j: &RangeFunction,
) -> Result<Vec<GeneralComponent>> {
    let table = j.table();
    if multiplicities.len() != table.n_irreps() {
        return Err(Error::SizeMismatch(format!(
            "{} multiplicities for {} irreps",
            multiplicities.len(),
            table.n_irreps()
        )));
    }
    let mut offsets = Vec::with_capacity(multiplicities.len());
    let mut total = 0;
    for (pi, &m) in multiplicities.iter().enumerate() {
        if j.fiber(pi).nrows() != m {
            return Err(Error::ShapeMismatch(format!(
                "range function fiber {} lives in dimension {} instead of {m}",
                table.name(pi),
                j.fiber(pi).nrows()
            )));
        }
        offsets.push(total);
        total += m * table.dim(pi);
    }
    let mut components = Vec::new();
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        let m = multiplicities[pi];
        let fiber = j.fiber(pi);
        for col in 0..fiber.ncols() {
            let basis = (0..d)
                .map(|t| {
                    let mut v = CVec::zeros(total);
                    for i in 0..m {
                        v[offsets[pi] + i * d + t] = fiber[(i, col)].conj();
                    }
                    v
                })
                .collect();
            components.push(GeneralComponent {
                irrep_index: pi,
                fiber_column: col,
                dim: d,
                basis,
                carries: pi,
            });
        }
    }
    Ok(components)
}

/// Express vectors of a concrete representation as a MultiGenSpec by
/// decomposing H_ρ into explicit irreducible copies with matrix-unit
/// averaging: E_{j1} = d_π·∫ conj(π_{j1}(ξ))ρ(ξ)dξ maps an orthonormal basis
/// {v_k} of ran E_{11} to the j-th basis vectors of m_π aligned copies of
/// H_π, and the components of f are ⟨f, E_{j1}v_k⟩.
pub fn multigen_from_vectors(
    vectors: &[RepVector],
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<MultiGenSpec> {
    let first = vectors.first().ok_or(Error::EmptyFamily)?;
    for v in &vectors[1..] {
        first.check_same_rep(v)?;
    }
    let rep = first.rep();
    let group = table.group();
    if rep.group() != group {
        return Err(Error::GroupMismatch(
            "the vectors are not over the table's group".into(),
        ));
    }
    let mults = table.multiplicities(rep)?;
    let n = rep.dim();
    let k = group.order() as f64;
    let mut generators: Vec<Vec<CMat>> = vec![Vec::with_capacity(table.n_irreps()); vectors.len()];
    for pi in 0..table.n_irreps() {
        let d = table.dim(pi);
        let m = mults[pi];
        if m == 0 {
            for gen in generators.iter_mut() {
                gen.push(CMat::zeros(d, 0));
            }
            continue;
        }
        // matrix units E_{j1} over the first column of π
        let units: Vec<CMat> = (0..d)
            .map(|row| {
                let mut e = CMat::zeros(n, n);
                for xi in group.elements() {
                    let w = table.irrep(pi).mat(xi)[(row, 0)].conj() * cr(d as f64 / k);
                    e += rep.mat(xi) * w;
                }
                e
            })
            .collect();
        let copies = orthonormal_span(&units[0], tol.rank)?;
        if copies.ncols() != m {
            return Err(Error::Numeric(format!(
                "matrix-unit projector rank {} disagrees with multiplicity {m} at irrep {}",
                copies.ncols(),
                table.name(pi)
            )));
        }
        let mut bases: Vec<Vec<CVec>> = Vec::with_capacity(m);
        for copy in 0..m {
            let v: CVec = copies.column(copy).into_owned();
            bases.push(units.iter().map(|e| e * &v).collect());
        }
        for (gen, f) in generators.iter_mut().zip(vectors.iter()) {
            let mut comp = CMat::zeros(d, m);
            for (copy, basis) in bases.iter().enumerate() {
                for (row, u) in basis.iter().enumerate() {
                    comp[(row, copy)] = u.dotc(f.coords());
                }
            }
            gen.push(comp);
        }
    }
    MultiGenSpec::new(table.clone(), mults, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::frame_bounds_single;
    use crate::group::GroupSpec;
    use crate::linalg::{c, max_abs, spectra_match};
    use crate::repr::{builtin_irrep_table, DihedralBasis};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_component(d: usize, m: usize, rng: &mut impl Rng) -> CMat {
        CMat::from_fn(d, m, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    fn random_spec(
        table: &Arc<IrrepTable>,
        mults: &[usize],
        n_gen: usize,
        rng: &mut impl Rng,
    ) -> MultiGenSpec {
        let generators = (0..n_gen)
            .map(|_| {
                (0..table.n_irreps())
                    .map(|pi| random_component(table.dim(pi), mults[pi], rng))
                    .collect()
            })
            .collect();
        MultiGenSpec::new(table.clone(), mults.to_vec(), generators).unwrap()
    }

    fn oracle_extremes(spec: &MultiGenSpec, tol: &Tolerances) -> (usize, Option<(f64, f64)>) {
        let gram = multigen_gramian_oracle(spec).unwrap();
        let eigs = hermitian_eigenvalues(&gram).unwrap();
        let max = eigs.iter().fold(0.0f64, |a, e| a.max(e.abs()));
        let nonzero: Vec<f64> = eigs
            .iter()
            .copied()
            .filter(|e| e.abs() > tol.rank * max)
            .collect();
        let rank = nonzero.len();
        if rank == 0 {
            return (0, None);
        }
        let lo = nonzero.iter().fold(f64::INFINITY, |a, &e| a.min(e));
        let hi = nonzero.iter().fold(0.0f64, |a, &e| a.max(e));
        (rank, Some((lo, hi)))
    }

    #[test]
    fn quadratic_form_matches_brute_force_row_combinations() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mults = [1, 0, 2];
        let spec = random_spec(&table, &mults, 3, &mut rng);
        for pi in [0usize, 2] {
            let m = mults[pi];
            let q = row_gram(&spec, pi);
            let cvec = CVec::from_fn(m, |_, _| {
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            // Σ_j ‖Σ_i c_i f^π_{i,j}‖² by hand
            let mut brute = 0.0;
            for j in 0..spec.n_generators() {
                let f = spec.component(j, pi);
                let combo = f * &cvec;
                brute += combo.norm_squared();
            }
            let through_q = (cvec.dotc(&(&q * &cvec))).re;
            assert!((brute - through_q).abs() < 1e-10 * (1.0 + brute));
        }
    }

    #[test]
    fn single_generator_on_one_irreducible_copy_is_tight() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[0, 0, 1], 1, &mut rng);
        let f = spec.component(0, 2);
        let norm_sq = f.norm_squared();
        let row = riesz_row_bounds(&spec, 2, None, &tol).unwrap();
        assert!((row.lower - norm_sq).abs() < 1e-12 * (1.0 + norm_sq));
        assert!((row.upper - norm_sq).abs() < 1e-12 * (1.0 + norm_sq));
        assert!(row.independent);
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        assert!(report.overall.is_tight);
        assert_eq!(report.overall.is_frame_for_whole_space, Some(true));
        let (a, b) = report.overall.continuous_bounds.unwrap();
        assert!((a - norm_sq / 2.0).abs() < 1e-10 * (1.0 + norm_sq));
        assert!((b - norm_sq / 2.0).abs() < 1e-10 * (1.0 + norm_sq));
    }

    #[test]
    fn orthogonal_rows_of_common_norm_give_a_tight_frame() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let tol = Tolerances::default();
        let bound = 1.7f64;
        // two generators; rows of each A(π) orthogonal with norm √(d_π·bound)
        let zeros = |d: usize, m: usize| CMat::zeros(d, m);
        let mut gen1 = vec![zeros(1, 1), zeros(1, 1), zeros(2, 2)];
        let mut gen2 = vec![zeros(1, 1), zeros(1, 1), zeros(2, 2)];
        gen1[0][(0, 0)] = cr(bound.sqrt());
        gen2[1][(0, 0)] = cr(bound.sqrt());
        let s = (2.0 * bound).sqrt();
        gen1[2][(0, 0)] = cr(s); // row 1 lives in generator 1
        gen2[2][(1, 1)] = cr(s); // row 2 lives in generator 2
        let spec =
            MultiGenSpec::new(table.clone(), vec![1, 1, 2], vec![gen1, gen2]).unwrap();
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        assert!(report.overall.is_tight);
        assert_eq!(report.overall.is_frame_for_whole_space, Some(true));
        let (a, b) = report.overall.continuous_bounds.unwrap();
        assert!((a - bound).abs() < 1e-10);
        assert!((b - bound).abs() < 1e-10);
        assert_eq!(report.overall.span_dim, 6);
    }

    #[test]
    fn dependent_rows_are_flagged_and_do_not_frame_the_whole_space() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let tol = Tolerances::default();
        // m_π₃ = 2 with second row twice the first in every generator
        let generators: Vec<Vec<CMat>> = (0..2)
            .map(|_| {
                let mut comp = CMat::zeros(2, 2);
                let col = CVec::from_fn(2, |_, _| {
                    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                });
                comp.column_mut(0).copy_from(&col);
                comp.column_mut(1).copy_from(&(&col * cr(2.0)));
                vec![CMat::zeros(1, 0), CMat::zeros(1, 0), comp]
            })
            .collect();
        let spec = MultiGenSpec::new(table.clone(), vec![0, 0, 2], generators).unwrap();
        let row = riesz_row_bounds(&spec, 2, None, &tol).unwrap();
        assert!(!row.independent);
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        assert_eq!(report.overall.is_frame_for_whole_space, Some(false));
        assert_eq!(report.overall.span_dim, 2); // one independent row, d_π = 2
        let (rank, _) = oracle_extremes(&spec, &tol);
        assert_eq!(rank, 2);
    }

    #[test]
    fn known_vector_reproduces_the_single_generator_bounds() {
        let (group, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let i3 = c(0.0, 3.0f64.sqrt());
        let a = CMat::from_row_slice(
            4,
            4,
            &[
                cr(1.0), i3, cr(-3.0), i3,
                i3, cr(1.0), i3, cr(-3.0),
                cr(-3.0), i3, cr(1.0), i3,
                i3, cr(-3.0), i3, cr(1.0),
            ],
        ) * cr(0.25);
        let b = CMat::from_row_slice(
            4,
            4,
            &[
                cr(1.0), cr(1.0), cr(1.0), cr(-1.0),
                cr(1.0), cr(-1.0), cr(-1.0), cr(-1.0),
                cr(1.0), cr(-1.0), cr(1.0), cr(1.0),
                cr(-1.0), cr(-1.0), cr(1.0), cr(-1.0),
            ],
        ) * cr(0.5);
        let rep =
            Arc::new(UnitaryRep::from_generators(group.clone(), 4, &[(1, a), (3, b)]).unwrap());
        let f = RepVector::from_slice(rep.clone(), &[cr(3.0), cr(1.0), cr(-1.0), cr(1.0)])
            .unwrap();
        let tol = Tolerances::default();
        let spec = multigen_from_vectors(std::slice::from_ref(&f), &table, &tol).unwrap();
        assert_eq!(spec.multiplicities(), &[1, 1, 1]);
        assert_eq!(spec.dim(), 4);
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        let (a_lo, b_hi) = report.overall.continuous_bounds.unwrap();
        assert!((a_lo - 2.0).abs() < 1e-9);
        assert!((b_hi - 4.0).abs() < 1e-9);
        let (da, db) = report.overall.discrete_bounds.unwrap();
        assert!((da - 12.0).abs() < 1e-8);
        assert!((db - 24.0).abs() < 1e-8);
        assert_eq!(report.overall.is_frame_for_whole_space, Some(true));
        // agrees with the direct bracket analysis of (ρ, f)
        let direct = frame_bounds_single(&f, &table, &tol).unwrap();
        let (xa, xb) = direct.continuous_bounds.unwrap();
        assert!((a_lo - xa).abs() < 1e-8 && (b_hi - xb).abs() < 1e-8);
        assert_eq!(report.overall.span_dim, direct.span_dim);
        // and with the orbit Gramian of the assembled model
        let (rank, bounds) = oracle_extremes(&spec, &tol);
        let (oa, ob) = bounds.unwrap();
        assert_eq!(rank, 4);
        assert!((oa - 2.0).abs() < 1e-8 && (ob - 4.0).abs() < 1e-8);
    }

    #[test]
    fn trivial_group_duality_is_matrix_duality() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Cyclic(1), DihedralBasis::Complex).unwrap();
        // columns of [[1,0,1],[0,1,1]] as three generators in C²
        let cols = [[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]];
        let generators = cols
            .iter()
            .map(|col| vec![CMat::from_fn(1, 2, |_, i| cr(col[i]))])
            .collect();
        let spec = MultiGenSpec::new(table, vec![2], generators).unwrap();
        let tol = Tolerances::default();
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        let (a, b) = report.overall.continuous_bounds.unwrap();
        assert!((a - 1.0).abs() < 1e-10 && (b - 3.0).abs() < 1e-10);
        assert_eq!(report.overall.is_frame_for_whole_space, Some(true));
        let (rank, bounds) = oracle_extremes(&spec, &tol);
        let (oa, ob) = bounds.unwrap();
        assert_eq!(rank, 2);
        assert!((oa - 1.0).abs() < 1e-10 && (ob - 3.0).abs() < 1e-10);
    }

    #[test]
    fn zero_generator_contributes_nothing() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Symmetric(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let tol = Tolerances::default();
        let one = random_spec(&table, &[1, 1, 2], 1, &mut rng);
        let mut generators = vec![(0..table.n_irreps())
            .map(|pi| one.component(0, pi).clone())
            .collect::<Vec<_>>()];
        generators.push(
            (0..table.n_irreps())
                .map(|pi| CMat::zeros(table.dim(pi), one.multiplicities()[pi]))
                .collect(),
        );
        let padded =
            MultiGenSpec::new(table.clone(), one.multiplicities().to_vec(), generators).unwrap();
        let r1 = multigen_frame_bounds(&one, None, &tol).unwrap();
        let r2 = multigen_frame_bounds(&padded, None, &tol).unwrap();
        match (r1.overall.continuous_bounds, r2.overall.continuous_bounds) {
            (Some((a1, b1)), Some((a2, b2))) => {
                assert!((a1 - a2).abs() < 1e-12 && (b1 - b2).abs() < 1e-12);
            }
            (o1, o2) => assert_eq!(o1, o2),
        }
        assert_eq!(r1.overall.span_dim, r2.overall.span_dim);
    }

    #[test]
    fn random_specs_agree_with_the_orbit_gramian_oracle() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let cases = [
            (GroupSpec::Cyclic(4), vec![1, 0, 2, 1]),
            (GroupSpec::Dihedral(3), vec![1, 1, 2]),
            (GroupSpec::Dihedral(4), vec![0, 1, 0, 0, 2]),
            (GroupSpec::Symmetric(3), vec![1, 0, 1]),
        ];
        for (spec_id, mults) in &cases {
            let (_, table) = builtin_irrep_table(spec_id, DihedralBasis::Complex).unwrap();
            for n_gen in 1..=3 {
                let spec = random_spec(&table, mults, n_gen, &mut rng);
                let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
                let (rank, bounds) = oracle_extremes(&spec, &tol);
                assert_eq!(report.overall.span_dim, rank);
                let (a, b) = report.overall.continuous_bounds.unwrap();
                let (oa, ob) = bounds.unwrap();
                let scale = ob.max(1.0);
                assert!((a - oa).abs() < 1e-8 * scale, "{a} vs {oa}");
                assert!((b - ob).abs() < 1e-8 * scale, "{b} vs {ob}");
                assert_eq!(
                    report.overall.is_frame_for_whole_space,
                    Some(rank == spec.dim())
                );
            }
        }
    }

    #[test]
    fn pooled_eigenvalues_match_the_oracle_spectrum() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[1, 1, 2], 2, &mut rng);
        let report = multigen_frame_bounds(&spec, None, &tol).unwrap();
        let mut pooled = Vec::new();
        for (pi, s) in report.overall.per_pi_eigenvalues.iter().enumerate() {
            for &e in s {
                pooled.extend(std::iter::repeat(e).take(table.dim(pi)));
            }
        }
        let gram = multigen_gramian_oracle(&spec).unwrap();
        let mut oracle = hermitian_eigenvalues(&gram).unwrap();
        // the oracle has |I|·card(K) = 12 slots for 6 dimensions: pad pooled
        oracle.retain(|e| e.abs() > 1e-12);
        pooled.retain(|e| e.abs() > 1e-12);
        assert!(spectra_match(&pooled, &oracle, 1e-8));
    }

    #[test]
    fn scaling_all_generators_scales_the_bounds_quadratically() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(4), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[1, 0, 1, 0, 2], 2, &mut rng);
        let t = c(0.6, -1.1);
        let scaled = spec.scaled(t);
        let r1 = multigen_frame_bounds(&spec, None, &tol).unwrap();
        let r2 = multigen_frame_bounds(&scaled, None, &tol).unwrap();
        let (a1, b1) = r1.overall.continuous_bounds.unwrap();
        let (a2, b2) = r2.overall.continuous_bounds.unwrap();
        let factor = t.norm_sqr();
        assert!((a2 - factor * a1).abs() < 1e-10 * factor * a1.abs().max(1.0));
        assert!((b2 - factor * b1).abs() < 1e-10 * factor * b1.abs().max(1.0));
    }

    #[test]
    fn isotypical_components_bracket_the_overall_bounds() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(4), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[1, 0, 2, 0, 1], 2, &mut rng);
        let chk = multigen_isotypical_check(&spec, &tol).unwrap();
        assert!(chk.consistent);
        let (a, b) = chk.overall.continuous_bounds.unwrap();
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for r in chk.per_pi.iter().flatten() {
            let (ca, cb) = r.continuous_bounds.unwrap();
            lo = lo.min(ca);
            hi = hi.max(cb);
        }
        assert!((a - lo).abs() < 1e-10 * (1.0 + hi));
        assert!((b - hi).abs() < 1e-10 * (1.0 + hi));
    }

    #[test]
    fn one_component_spec_matches_its_isotypical_report() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[0, 0, 2], 2, &mut rng);
        let chk = multigen_isotypical_check(&spec, &tol).unwrap();
        assert!(chk.consistent);
        let only = chk.per_pi[2].as_ref().unwrap();
        assert_eq!(only.continuous_bounds, chk.overall.continuous_bounds);
        assert_eq!(only.span_dim, chk.overall.span_dim);
    }

    #[test]
    fn deficient_component_fails_its_verdict_and_the_overall_one() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let tol = Tolerances::default();
        // healthy at the sign character, rank-deficient at the 2-dim irrep
        let mut comp = CMat::zeros(2, 2);
        comp.column_mut(0).copy_from(&CVec::from_fn(2, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        }));
        let generators = vec![vec![
            CMat::zeros(1, 0),
            random_component(1, 1, &mut rng),
            comp,
        ]];
        let spec = MultiGenSpec::new(table.clone(), vec![0, 1, 2], generators).unwrap();
        let chk = multigen_isotypical_check(&spec, &tol).unwrap();
        assert!(chk.consistent);
        assert_eq!(
            chk.per_pi[2].as_ref().unwrap().is_frame_for_whole_space,
            Some(false)
        );
        assert_eq!(
            chk.per_pi[1].as_ref().unwrap().is_frame_for_whole_space,
            Some(true)
        );
        assert_eq!(chk.overall.is_frame_for_whole_space, Some(false));
    }

    #[test]
    fn restricted_range_function_bounds_and_membership() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let tol = Tolerances::default();
        // m_π₃ = 2; J(π₃) = first copy only
        let f1 = CVec::from_fn(2, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let mut inside = CMat::zeros(2, 2);
        inside.column_mut(0).copy_from(&f1);
        let spec = MultiGenSpec::new(
            table.clone(),
            vec![0, 0, 2],
            vec![vec![CMat::zeros(1, 0), CMat::zeros(1, 0), inside]],
        )
        .unwrap();
        let fibers = vec![
            CMat::zeros(0, 0),
            CMat::zeros(0, 0),
            CMat::from_fn(2, 1, |i, _| if i == 0 { cr(1.0) } else { cr(0.0) }),
        ];
        let j = RangeFunction::new(table.clone(), fibers, &tol).unwrap();
        let report = multigen_frame_bounds(&spec, Some(&j), &tol).unwrap();
        let norm_sq = f1.norm_squared();
        let (a, b) = report.overall.continuous_bounds.unwrap();
        assert!((a - norm_sq / 2.0).abs() < 1e-10 * (1.0 + norm_sq));
        assert!((b - norm_sq / 2.0).abs() < 1e-10 * (1.0 + norm_sq));
        // frame for all of V_J (dim 2), though not for H_ρ (dim 4)
        assert_eq!(report.overall.span_dim, 2);
        assert_eq!(report.overall.is_frame_for_whole_space, Some(true));

        // a generator leaking into the second copy is rejected
        let mut outside = CMat::zeros(2, 2);
        outside.column_mut(0).copy_from(&f1);
        outside[(0, 1)] = cr(0.5);
        let bad = MultiGenSpec::new(
            table.clone(),
            vec![0, 0, 2],
            vec![vec![CMat::zeros(1, 0), CMat::zeros(1, 0), outside]],
        )
        .unwrap();
        match multigen_frame_bounds(&bad, Some(&j), &tol) {
            Err(Error::GeneratorsOutsideVJ { generator: 0, .. }) => {}
            other => panic!("expected GeneratorsOutsideVJ, got {other:?}"),
        }
    }

    #[test]
    fn canonical_components_are_orthonormal_invariant_and_carry_their_irrep() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let tol = Tolerances::default();
        let mults = vec![1, 1, 2];
        let fibers = vec![
            CMat::identity(1, 1),
            CMat::identity(1, 1),
            CMat::identity(2, 2),
        ];
        let j = RangeFunction::new(table.clone(), fibers, &tol).unwrap();
        let comps = canonical_decomposition_general(&mults, &j).unwrap();
        assert_eq!(comps.len(), 4);
        let total: usize = comps.iter().map(|c| c.dim).sum();
        assert_eq!(total, 6);
        // representation to act with
        let spec = MultiGenSpec::new(
            table.clone(),
            mults.clone(),
            vec![vec![
                CMat::zeros(1, 1),
                CMat::zeros(1, 1),
                CMat::zeros(2, 2),
            ]],
        )
        .unwrap();
        let (rep, _) = assemble_rep(&spec).unwrap();
        // orthonormality across all basis vectors of all components
        let all: Vec<&CVec> = comps.iter().flat_map(|c| c.basis.iter()).collect();
        for (s, v) in all.iter().enumerate() {
            for (t, w) in all.iter().enumerate() {
                let want = if s == t { 1.0 } else { 0.0 };
                assert!((w.dotc(v) - cr(want)).norm() < 1e-12);
            }
        }
        for comp in &comps {
            assert_eq!(comp.carries, comp.irrep_index);
            let d = comp.dim;
            let pi_rep = table.irrep(comp.irrep_index);
            for xi in 0..6 {
                for t in 0..d {
                    let moved = rep.mat(xi) * &comp.basis[t];
                    // coefficients on the component's own basis are π(ξ)
                    let mut back = CVec::zeros(moved.len());
                    for s in 0..d {
                        let coeff = comp.basis[s].dotc(&moved);
                        assert!(
                            (coeff - pi_rep.mat(xi)[(s, t)]).norm() < 1e-9,
                            "irrep {} coefficient mismatch",
                            comp.irrep_index
                        );
                        back += &comp.basis[s] * coeff;
                    }
                    assert!((moved - back).norm() < 1e-9); // invariance
                }
            }
        }
    }

    #[test]
    fn alternative_fiber_bases_give_different_but_valid_decompositions() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let tol = Tolerances::default();
        let mults = vec![0, 0, 2];
        let standard = RangeFunction::new(
            table.clone(),
            vec![CMat::zeros(0, 0), CMat::zeros(0, 0), CMat::identity(2, 2)],
            &tol,
        )
        .unwrap();
        let h = 1.0 / 2.0f64.sqrt();
        let rotated = RangeFunction::new(
            table.clone(),
            vec![
                CMat::zeros(0, 0),
                CMat::zeros(0, 0),
                CMat::from_row_slice(2, 2, &[cr(h), cr(h), cr(h), cr(-h)]),
            ],
            &tol,
        )
        .unwrap();
        let c1 = canonical_decomposition_general(&mults, &standard).unwrap();
        let c2 = canonical_decomposition_general(&mults, &rotated).unwrap();
        assert_eq!(c1.len(), 2);
        assert_eq!(c2.len(), 2);
        assert_eq!(c1[0].dim, c2[0].dim);
        // same total space, different subspace families
        let q1 = CMat::from_columns(&c1[0].basis);
        let v = &c2[0].basis[0];
        let residual = residual_outside_span(&q1, v);
        assert!(residual > 0.5, "rotated component should leave the span");
    }

    #[test]
    fn empty_range_function_decomposes_into_nothing() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Cyclic(3), DihedralBasis::Complex).unwrap();
        let tol = Tolerances::default();
        let j = RangeFunction::new(
            table.clone(),
            vec![CMat::zeros(1, 0), CMat::zeros(1, 0), CMat::zeros(1, 0)],
            &tol,
        )
        .unwrap();
        let comps = canonical_decomposition_general(&[1, 1, 1], &j).unwrap();
        assert!(comps.is_empty());
    }

    #[test]
    fn model_assembly_round_trips_through_vector_decomposition() {
        let (group, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let tol = Tolerances::default();
        let spec = random_spec(&table, &[1, 0, 2], 2, &mut rng);
        let (rep, vectors) = assemble_rep(&spec).unwrap();
        assert_eq!(rep.dim(), 5);
        assert_eq!(rep.group(), &group);
        let back = multigen_from_vectors(&vectors, &table, &tol).unwrap();
        assert_eq!(back.multiplicities(), spec.multiplicities());
        // bounds are basis-independent even though the component coordinates
        // may differ by a unitary change of copies
        let r1 = multigen_frame_bounds(&spec, None, &tol).unwrap();
        let r2 = multigen_frame_bounds(&back, None, &tol).unwrap();
        let (a1, b1) = r1.overall.continuous_bounds.unwrap();
        let (a2, b2) = r2.overall.continuous_bounds.unwrap();
        let scale = b1.max(1.0);
        assert!((a1 - a2).abs() < 1e-8 * scale);
        assert!((b1 - b2).abs() < 1e-8 * scale);
        assert_eq!(r1.overall.span_dim, r2.overall.span_dim);
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Cyclic(3), DihedralBasis::Complex).unwrap();
        assert!(MultiGenSpec::new(table.clone(), vec![1, 1], vec![]).is_err());
        let bad_component = vec![vec![
            CMat::zeros(2, 1), // d should be 1
            CMat::zeros(1, 1),
            CMat::zeros(1, 1),
        ]];
        assert!(MultiGenSpec::new(table.clone(), vec![1, 1, 1], bad_component).is_err());
        let spec = MultiGenSpec::new(
            table.clone(),
            vec![0, 1, 1],
            vec![vec![CMat::zeros(1, 0), CMat::zeros(1, 1), CMat::zeros(1, 1)]],
        )
        .unwrap();
        assert!(riesz_row_bounds(&spec, 0, None, &Tolerances::default()).is_err());
    }

    #[test]
    fn max_abs_sanity_for_assembled_representations() {
        // the assembled matrices are block-diagonal copies of the irreps
        let (_, table) =
            builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap();
        let spec = MultiGenSpec::new(
            table.clone(),
            vec![0, 1, 1],
            vec![vec![CMat::zeros(1, 0), CMat::zeros(1, 1), CMat::zeros(2, 1)]],
        )
        .unwrap();
        let (rep, _) = assemble_rep(&spec).unwrap();
        for xi in 0..6 {
            let m = rep.mat(xi);
            assert!((m[(0, 0)] - table.irrep(1).mat(xi)[(0, 0)]).norm() < 1e-14);
            let mut block = CMat::zeros(2, 2);
            block.copy_from(&m.view((1, 1), (2, 2)));
            assert!(max_abs(&(block - table.irrep(2).mat(xi))) < 1e-14);
        }
    }
}
