//! Frame synthesis: Parseval generators from rank selections, harmonic
//! frames by row deletion from the matrix-element table, the existence gate
//! for K-frames of a given representation, and generators for tight
//! permutation frames on doubly transitive actions.

use crate::error::{Error, Result};
use crate::fourier::{inverse_fourier, FourierCoefficients, GroupFunction};
use crate::linalg::{cr, C64, CMat, CVec};
use crate::repr::{IrrepTable, UnitaryRep};
use crate::tol::Tolerances;
use std::sync::Arc;

/// How many rows to keep per irrep: r_π ∈ [0, d_π].
#[derive(Clone, Debug)]
pub struct RankSelection {
    table: Arc<IrrepTable>,
    ranks: Vec<usize>,
}

impl RankSelection {
    pub fn new(table: Arc<IrrepTable>, ranks: Vec<usize>) -> Result<Self> {
        if ranks.len() != table.n_irreps() {
            return Err(Error::SizeMismatch(format!(
                "{} ranks for {} irreps",
                ranks.len(),
                table.n_irreps()
            )));
        }
        for (pi, &r) in ranks.iter().enumerate() {
            if r > table.dim(pi) {
                return Err(Error::InvalidInput(format!(
                    "rank {r} exceeds the dimension {} of irrep {}",
                    table.dim(pi),
                    table.name(pi)
                )));
            }
        }
        Ok(RankSelection { table, ranks })
    }

    /// r_π = d_π everywhere.
    pub fn full(table: Arc<IrrepTable>) -> Self {
        let ranks = (0..table.n_irreps()).map(|pi| table.dim(pi)).collect();
        RankSelection { table, ranks }
    }

    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// N = Σ_π r_π·d_π, the length of the harmonic frame vectors.
    pub fn total_rows(&self) -> usize {
        self.ranks
            .iter()
            .enumerate()
            .map(|(pi, &r)| r * self.table.dim(pi))
            .sum()
    }
}

/// The projection function f ∈ L²(K) with f̂(π) equal to the orthogonal
/// projection onto the first r_π basis vectors of H_π. Its K-translates form
/// a continuous Parseval frame for their span.
pub fn parseval_generator(selection: &RankSelection) -> Result<GroupFunction> {
    let table = selection.table();
    let blocks = (0..table.n_irreps())
        .map(|pi| {
            let d = table.dim(pi);
            let r = selection.ranks()[pi];
            CMat::from_fn(d, d, |i, j| if i == j && i < r { cr(1.0) } else { cr(0.0) })
        })
        .collect();
    Ok(inverse_fourier(&FourierCoefficients::new(
        table.clone(),
        blocks,
    )?))
}

/// A harmonic frame: |K| vectors in C^N with components √d_π·π_{i,j}(ξ) over
/// the kept rows i < r_π, grouped by irrep then row then column.
#[derive(Clone, Debug)]
pub struct FrameMatrix {
    table: Arc<IrrepTable>,
    vectors: Vec<CVec>,
    rows_kept: Vec<usize>,
    basis: String,
}

impl FrameMatrix {
    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn vectors(&self) -> &[CVec] {
        &self.vectors
    }

    pub fn vector(&self, xi: usize) -> &CVec {
        &self.vectors[xi]
    }

    pub fn n_vectors(&self) -> usize {
        self.vectors.len()
    }

    /// Vector length N = Σ r_π·d_π.
    pub fn dim(&self) -> usize {
        self.vectors.first().map_or(0, |v| v.len())
    }

    pub fn rows_kept(&self) -> &[usize] {
        &self.rows_kept
    }

    pub fn basis(&self) -> &str {
        &self.basis
    }

    /// N×|K| matrix with the frame vectors as columns, group order on columns.
    pub fn as_matrix(&self) -> CMat {
        CMat::from_columns(&self.vectors)
    }

    /// Max-norm deviation of (1/|K|)·Σ_ξ v_ξ v_ξ* from the identity on C^N.
    pub fn parseval_deviation(&self) -> f64 {
        let n = self.dim();
        let m = self.as_matrix();
        let mut s = CMat::zeros(n, n);
        s.gemm(
            cr(1.0 / self.n_vectors() as f64),
            &m,
            &m.adjoint(),
            cr(0.0),
        );
        crate::linalg::max_abs(&(s - CMat::identity(n, n)))
    }

    /// Largest imaginary part across all components (0 for real bases).
    pub fn max_imaginary(&self) -> f64 {
        self.vectors
            .iter()
            .flat_map(|v| v.iter())
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }
}

/// Delete rows from the scaled matrix-element table: keep rows i < r_π of
/// √d_π·π(ξ) for each irrep. The columns over ξ ∈ K form a continuous
/// Parseval frame for C^N (discrete tight bound card(K)).
pub fn harmonic_frame(selection: &RankSelection) -> Result<FrameMatrix> {
    let table = selection.table();
    let n = selection.total_rows();
    if n == 0 {
        return Err(Error::EmptySelection);
    }
    let group = table.group();
    let mut vectors = Vec::with_capacity(group.order());
    for xi in group.elements() {
        let mut v = CVec::zeros(n);
        let mut offset = 0;
        for pi in 0..table.n_irreps() {
            let d = table.dim(pi);
            let r = selection.ranks()[pi];
            let scale = cr((d as f64).sqrt());
            let mat = table.irrep(pi).mat(xi);
            for i in 0..r {
                for j in 0..d {
                    v[offset + i * d + j] = scale * mat[(i, j)];
                }
            }
            offset += r * d;
        }
        vectors.push(v);
    }
    Ok(FrameMatrix {
        table: table.clone(),
        vectors,
        rows_kept: selection.ranks().to_vec(),
        basis: table.basis_name().to_string(),
    })
}

#[derive(Clone, Debug)]
pub struct IrrepMultiplicity {
    pub name: String,
    pub multiplicity: usize,
    pub dim: usize,
}

/// Existence verdict for a Parseval K-frame of H_ρ, with the witness
/// generator when one exists.
#[derive(Clone, Debug)]
pub struct KFrameVerdict {
    pub admits: bool,
    pub per_irrep: Vec<IrrepMultiplicity>,
    /// Projection function with f̂(π) of rank mult(π̄, ρ); its translates
    /// form a Parseval frame for a K-invariant space equivalent to H_ρ.
    pub generator: Option<GroupFunction>,
}

/// H_ρ admits a Parseval K-frame iff mult(π, ρ) ≤ d_π for every π.
pub fn admits_k_frame(rep: &UnitaryRep, table: &Arc<IrrepTable>) -> Result<KFrameVerdict> {
    let mults = table.multiplicities(rep)?;
    let per_irrep = (0..table.n_irreps())
        .map(|pi| IrrepMultiplicity {
            name: table.name(pi).to_string(),
            multiplicity: mults[pi],
            dim: table.dim(pi),
        })
        .collect();
    let admits = (0..table.n_irreps()).all(|pi| mults[pi] <= table.dim(pi));
    let generator = if admits {
        let ranks = (0..table.n_irreps())
            .map(|pi| mults[table.contragredient_of(pi)])
            .collect();
        let selection = RankSelection::new(table.clone(), ranks)?;
        Some(parseval_generator(&selection)?)
    } else {
        None
    };
    Ok(KFrameVerdict {
        admits,
        per_irrep,
        generator,
    })
}

/// Generator of a tight permutation frame on n points: f = 1 + ψ with
/// Σψ = 0 and ψ rescaled to ‖ψ‖² = n²−n, so that |Σf|² = ‖f‖² = n².
/// Defaults to ψ ∝ (1,−1,0,…,0). The n! vectors obtained by permuting the
/// entries of f form a tight frame for C^n.
pub fn permutation_frame_generator(
    n: usize,
    psi: Option<&[C64]>,
    tol: &Tolerances,
) -> Result<Vec<C64>> {
    if n == 0 {
        return Err(Error::InvalidInput("no points to act on".into()));
    }
    if n == 1 {
        if psi.is_some() {
            return Err(Error::BadPsi(
                "one point admits no nonzero mean-zero perturbation".into(),
            ));
        }
        return Ok(vec![cr(1.0)]);
    }
    let raw: Vec<C64> = match psi {
        Some(values) => {
            if values.len() != n {
                return Err(Error::SizeMismatch(format!(
                    "psi has {} entries for {n} points",
                    values.len()
                )));
            }
            values.to_vec()
        }
        None => {
            let mut v = vec![cr(0.0); n];
            v[0] = cr(1.0);
            v[1] = cr(-1.0);
            v
        }
    };
    let norm_sq: f64 = raw.iter().map(|z| z.norm_sqr()).sum();
    if norm_sq == 0.0 {
        return Err(Error::BadPsi("psi must be nonzero".into()));
    }
    let sum: C64 = raw.iter().sum();
    if sum.norm() > tol.numeric * (1.0 + norm_sq.sqrt()) {
        return Err(Error::BadPsi(format!(
            "psi entries sum to {sum} instead of zero"
        )));
    }
    let target = (n * n - n) as f64;
    let scale = cr((target / norm_sq).sqrt());
    Ok(raw.iter().map(|z| cr(1.0) + z * scale).collect())
}
