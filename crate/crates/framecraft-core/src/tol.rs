//! Centralized numeric tolerances.
//!
//! Everything here assumes double precision and group orders up to a few
//! hundred, where accumulated rounding stays well below 1e-12 per entry for
//! the dense O(|K|) sums used throughout.

/// Max-norm deviation allowed in `M*M - I` for a matrix to count as unitary.
pub const TOL_UNITARY: f64 = 1e-10;

/// Tolerance for character arithmetic: irreducibility (`<χ,χ> = 1`),
/// orthogonality, and integer multiplicity rounding.
pub const TOL_CHAR: f64 = 1e-8;

/// General-purpose comparison tolerance for computed matrices/vectors,
/// relative to max-norm scale.
pub const TOL_NUMERIC: f64 = 1e-9;

/// Relative rank cutoff: singular values (or eigenvalues, on squared scale)
/// below `TOL_RANK * largest` are treated as zero.
pub const TOL_RANK: f64 = 1e-10;

/// Relative gap under which the two frame bounds count as equal (tight).
pub const TOL_TIGHT: f64 = 1e-8;

/// Tolerance for comparing sorted spectra as multisets.
pub const TOL_SPEC: f64 = 1e-8;

/// Relative residual under which a vector counts as a member of a span.
pub const TOL_MEMBERSHIP: f64 = 1e-8;

/// Scale of the PSD acceptance threshold (see [`Tolerances::psd`]).
pub const TOL_PSD_SCALE: f64 = 1e-9;

/// PSD acceptance threshold scales with the dominant eigenvalue so that a
/// tiny negative eigenvalue of a large matrix is not misread as a failure.
pub fn tol_psd(max_eig_magnitude: f64) -> f64 {
    TOL_PSD_SCALE * (1.0 + max_eig_magnitude.abs())
}

/// Runtime-adjustable subset of the tolerances. CLI flags feed overrides in
/// here; library callers can pass `Tolerances::default()`.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub unitary: f64,
    pub character: f64,
    pub numeric: f64,
    pub rank: f64,
    pub tight: f64,
    pub spectrum: f64,
    pub membership: f64,
    pub psd_scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            unitary: TOL_UNITARY,
            character: TOL_CHAR,
            numeric: TOL_NUMERIC,
            rank: TOL_RANK,
            tight: TOL_TIGHT,
            spectrum: TOL_SPEC,
            membership: TOL_MEMBERSHIP,
            psd_scale: TOL_PSD_SCALE,
        }
    }
}

impl Tolerances {
    pub fn psd(&self, max_eig_magnitude: f64) -> f64 {
        self.psd_scale * (1.0 + max_eig_magnitude.abs())
    }
}
