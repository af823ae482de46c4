//! L²(K) with normalized Haar measure (|K| = 1): inner products, convolution
//! and involution, the operator-valued Fourier transform and its inverse, and
//! functions of positive type.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{cr, hermitian_eigenvalues, hs_norm_sq, C64, CMat};
use crate::repr::IrrepTable;
use crate::tol::Tolerances;
use rand::Rng;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct GroupFunction {
    group: Arc<FiniteGroup>,
    values: Vec<C64>,
}

impl GroupFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<C64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::SizeMismatch(format!(
                "{} values for a group of order {}",
                values.len(),
                group.order()
            )));
        }
        Ok(GroupFunction { group, values })
    }

    pub fn zeros(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        GroupFunction {
            group,
            values: vec![cr(0.0); n],
        }
    }

    pub fn constant(group: Arc<FiniteGroup>, value: C64) -> Self {
        let n = group.order();
        GroupFunction {
            group,
            values: vec![value; n],
        }
    }

    /// |K|·δ_g — the convolution unit when g is the identity.
    pub fn scaled_delta(group: Arc<FiniteGroup>, g: usize) -> Self {
        let n = group.order();
        let mut values = vec![cr(0.0); n];
        values[g] = cr(n as f64);
        GroupFunction { group, values }
    }

    pub fn random(group: Arc<FiniteGroup>, rng: &mut impl Rng) -> Self {
        let values = (0..group.order())
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        GroupFunction { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value(&self, g: usize) -> C64 {
        self.values[g]
    }

    pub fn set(&mut self, g: usize, v: C64) {
        self.values[g] = v;
    }

    fn check_same_group(&self, other: &GroupFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                "functions live on different groups".into(),
            ));
        }
        Ok(())
    }

    /// ⟨f, g⟩ = (1/|K|)·Σ_ξ f(ξ)·conj(g(ξ)).
    pub fn inner_product(&self, other: &GroupFunction) -> Result<C64> {
        self.check_same_group(other)?;
        let s: C64 = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(s / cr(self.group.order() as f64))
    }

    pub fn norm_sq(&self) -> f64 {
        let s: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        s / self.group.order() as f64
    }

    /// (f * g)(ξ) = (1/|K|)·Σ_η f(η)·g(η⁻¹ξ).
    pub fn convolve(&self, other: &GroupFunction) -> Result<GroupFunction> {
        self.check_same_group(other)?;
        let k = &self.group;
        let n = k.order();
        let values = (0..n)
            .map(|xi| {
                let s: C64 = (0..n)
                    .map(|eta| self.values[eta] * other.values[k.mul(k.inv(eta), xi)])
                    .sum();
                s / cr(n as f64)
            })
            .collect();
        Ok(GroupFunction {
            group: self.group.clone(),
            values,
        })
    }

    /// (f*)(ξ) = conj(f(ξ⁻¹)).
    pub fn involution(&self) -> GroupFunction {
        let k = &self.group;
        let values = k.elements().map(|xi| self.values[k.inv(xi)].conj()).collect();
        GroupFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// (L_ξ f)(η) = f(ξ⁻¹·η).
    pub fn left_translate(&self, xi: usize) -> GroupFunction {
        let k = &self.group;
        let inv = k.inv(xi);
        let values = k.elements().map(|eta| self.values[k.mul(inv, eta)]).collect();
        GroupFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// (R_ξ f)(η) = f(η·ξ).
    pub fn right_translate(&self, xi: usize) -> GroupFunction {
        let k = &self.group;
        let values = k.elements().map(|eta| self.values[k.mul(eta, xi)]).collect();
        GroupFunction {
            group: self.group.clone(),
            values,
        }
    }

    pub fn scaled(&self, by: C64) -> GroupFunction {
        GroupFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * by).collect(),
        }
    }

    pub fn plus(&self, other: &GroupFunction) -> Result<GroupFunction> {
        self.check_same_group(other)?;
        Ok(GroupFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct FourierCoefficients {
    table: Arc<IrrepTable>,
    blocks: Vec<CMat>,
}

impl FourierCoefficients {
    pub fn new(table: Arc<IrrepTable>, blocks: Vec<CMat>) -> Result<Self> {
        if blocks.len() != table.n_irreps() {
            return Err(Error::SizeMismatch(format!(
                "{} blocks for {} irreps",
                blocks.len(),
                table.n_irreps()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            let d = table.dim(i);
            if b.nrows() != d || b.ncols() != d {
                return Err(Error::ShapeMismatch(format!(
                    "block for {} is {}×{}, expected {d}×{d}",
                    table.name(i),
                    b.nrows(),
                    b.ncols()
                )));
            }
        }
        Ok(FourierCoefficients { table, blocks })
    }

    pub fn table(&self) -> &Arc<IrrepTable> {
        &self.table
    }

    pub fn block(&self, pi: usize) -> &CMat {
        &self.blocks[pi]
    }

    pub fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    /// Σ_π d_π·‖f̂(π)‖²_HS — equals ‖f‖² by Plancherel.
    pub fn plancherel_energy(&self) -> f64 {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| self.table.dim(i) as f64 * hs_norm_sq(b))
            .sum()
    }
}

/// f̂(π) = (1/|K|)·Σ_ξ f(ξ)·π(ξ⁻¹).
pub fn fourier(f: &GroupFunction, table: &Arc<IrrepTable>) -> Result<FourierCoefficients> {
    if f.group() != table.group() {
        return Err(Error::GroupMismatch(
            "function and irrep table are over different groups".into(),
        ));
    }
    let k = table.group();
    let n = k.order() as f64;
    let blocks = (0..table.n_irreps())
        .map(|pi| {
            let rep = table.irrep(pi);
            let d = rep.dim();
            let mut b = CMat::zeros(d, d);
            for xi in k.elements() {
                b += rep.mat(k.inv(xi)) * (f.value(xi) / cr(n));
            }
            b
        })
        .collect();
    FourierCoefficients::new(table.clone(), blocks)
}

/// f(ξ) = Σ_π d_π·tr(f̂(π)·π(ξ)).
pub fn inverse_fourier(coeffs: &FourierCoefficients) -> GroupFunction {
    let table = coeffs.table();
    let k = table.group();
    let values = k
        .elements()
        .map(|xi| {
            (0..table.n_irreps())
                .map(|pi| {
                    let prod = coeffs.block(pi) * table.irrep(pi).mat(xi);
                    let tr: C64 = prod.diagonal().sum();
                    tr * cr(table.dim(pi) as f64)
                })
                .sum()
        })
        .collect();
    GroupFunction::new(k.clone(), values).expect("dimensions agree by construction")
}

#[derive(Clone, Debug)]
pub struct PositiveTypeReport {
    pub is_positive_type: bool,
    /// ‖f − f*‖_max over the group.
    pub involution_deviation: f64,
    /// Worst (most negative) eigenvalue across all Fourier blocks.
    pub min_eigenvalue: f64,
    /// Name of the irrep violating PSD-ness, when one exists.
    pub violating_irrep: Option<String>,
}

/// Positive type ⇔ f = f* and every Fourier block is PSD.
pub fn is_positive_type(
    f: &GroupFunction,
    table: &Arc<IrrepTable>,
    tol: &Tolerances,
) -> Result<PositiveTypeReport> {
    let finv = f.involution();
    let involution_deviation = f
        .values()
        .iter()
        .zip(finv.values().iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    let coeffs = fourier(f, table)?;
    let mut min_eigenvalue = f64::INFINITY;
    let mut violating_irrep = None;
    let mut max_eig_seen = 0.0f64;
    let mut spectra = Vec::new();
    for pi in 0..table.n_irreps() {
        let eigs = hermitian_eigenvalues(coeffs.block(pi))?;
        if let Some(&top) = eigs.last() {
            max_eig_seen = max_eig_seen.max(top.abs());
        }
        spectra.push(eigs);
    }
    let psd_slack = tol.psd(max_eig_seen);
    for (pi, eigs) in spectra.iter().enumerate() {
        if let Some(&low) = eigs.first() {
            if low < min_eigenvalue {
                min_eigenvalue = low;
            }
            if low < -psd_slack && violating_irrep.is_none() {
                violating_irrep = Some(table.name(pi).to_string());
            }
        }
    }
    if min_eigenvalue == f64::INFINITY {
        min_eigenvalue = 0.0;
    }
    let hermitian_ok = involution_deviation <= tol.numeric;
    Ok(PositiveTypeReport {
        is_positive_type: hermitian_ok && violating_irrep.is_none(),
        involution_deviation,
        min_eigenvalue,
        violating_irrep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::linalg::{c, max_abs};
    use crate::repr::{builtin_irrep_table, DihedralBasis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn d3() -> (Arc<FiniteGroup>, Arc<IrrepTable>) {
        builtin_irrep_table(&GroupSpec::Dihedral(3), DihedralBasis::Complex).unwrap()
    }

    #[test]
    fn inner_product_normalization() {
        let group = FiniteGroup::cyclic(2).unwrap();
        let ones = GroupFunction::constant(group.clone(), cr(1.0));
        assert!((ones.inner_product(&ones).unwrap() - cr(1.0)).norm() < 1e-15);
        let f = GroupFunction::new(group, vec![cr(1.0), cr(0.0)]).unwrap();
        assert!((f.inner_product(&f).unwrap() - cr(0.5)).norm() < 1e-15);
    }

    #[test]
    fn distinct_cyclic_characters_are_orthogonal() {
        let (_, table) = builtin_irrep_table(&GroupSpec::Cyclic(3), DihedralBasis::Complex).unwrap();
        let chi1 = GroupFunction::new(
            table.group().clone(),
            table.irrep(1).character().values.clone(),
        )
        .unwrap();
        let chi2 = GroupFunction::new(
            table.group().clone(),
            table.irrep(2).character().values.clone(),
        )
        .unwrap();
        assert!(chi1.inner_product(&chi2).unwrap().norm() < 1e-15);
    }

    #[test]
    fn scaled_delta_is_the_convolution_unit() {
        let (group, _) = d3();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = GroupFunction::random(group.clone(), &mut rng);
        let unit = GroupFunction::scaled_delta(group, 0);
        let conv = f.convolve(&unit).unwrap();
        for g in 0..6 {
            assert!((conv.value(g) - f.value(g)).norm() < 1e-12);
        }
        let conv = unit.convolve(&f).unwrap();
        for g in 0..6 {
            assert!((conv.value(g) - f.value(g)).norm() < 1e-12);
        }
    }

    #[test]
    fn involution_fixes_real_symmetric_functions() {
        let (group, _) = d3();
        // class function: value depends only on conjugacy class, real
        let values: Vec<C64> = group
            .elements()
            .map(|g| cr(group.conjugacy_class(g)[0] as f64))
            .collect();
        let f = GroupFunction::new(group, values).unwrap();
        let g = f.involution();
        for (a, b) in f.values().iter().zip(g.values().iter()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn convolution_theorem_on_random_functions() {
        let (group, table) = d3();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = GroupFunction::random(group.clone(), &mut rng);
        let g = GroupFunction::random(group, &mut rng);
        let lhs = fourier(&f.convolve(&g).unwrap(), &table).unwrap();
        let fh = fourier(&f, &table).unwrap();
        let gh = fourier(&g, &table).unwrap();
        for pi in 0..table.n_irreps() {
            let want = gh.block(pi) * fh.block(pi);
            assert!(max_abs(&(lhs.block(pi) - want)) < 1e-12);
        }
        // involution theorem
        let fsh = fourier(&f.involution(), &table).unwrap();
        for pi in 0..table.n_irreps() {
            assert!(max_abs(&(fsh.block(pi) - fh.block(pi).adjoint())) < 1e-12);
        }
    }

    #[test]
    fn fourier_of_constants_and_deltas() {
        let (group, table) = d3();
        let ones = GroupFunction::constant(group.clone(), cr(1.0));
        let coeffs = fourier(&ones, &table).unwrap();
        assert!((coeffs.block(0)[(0, 0)] - cr(1.0)).norm() < 1e-12);
        assert!(max_abs(coeffs.block(1)) < 1e-12);
        assert!(max_abs(coeffs.block(2)) < 1e-12);

        let delta = GroupFunction::scaled_delta(group, 0);
        let coeffs = fourier(&delta, &table).unwrap();
        for pi in 0..3 {
            let d = table.dim(pi);
            assert!(max_abs(&(coeffs.block(pi) - CMat::identity(d, d))) < 1e-12);
        }
    }

    #[test]
    fn z2_indicator_transform() {
        let (group, table) = builtin_irrep_table(&GroupSpec::Cyclic(2), DihedralBasis::Complex).unwrap();
        let f = GroupFunction::new(group, vec![cr(1.0), cr(0.0)]).unwrap();
        let coeffs = fourier(&f, &table).unwrap();
        assert!((coeffs.block(0)[(0, 0)] - cr(0.5)).norm() < 1e-15);
        assert!((coeffs.block(1)[(0, 0)] - cr(0.5)).norm() < 1e-15);
    }

    #[test]
    fn round_trip_and_plancherel() {
        let (group, table) = d3();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = GroupFunction::random(group, &mut rng);
        let coeffs = fourier(&f, &table).unwrap();
        let back = inverse_fourier(&coeffs);
        for g in 0..6 {
            assert!((back.value(g) - f.value(g)).norm() < 1e-12);
        }
        assert!((coeffs.plancherel_energy() - f.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn translation_covariance() {
        let (group, table) = d3();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = GroupFunction::random(group.clone(), &mut rng);
        let fh = fourier(&f, &table).unwrap();
        for xi in group.elements() {
            let lh = fourier(&f.left_translate(xi), &table).unwrap();
            let rh = fourier(&f.right_translate(xi), &table).unwrap();
            for pi in 0..table.n_irreps() {
                let rep = table.irrep(pi);
                let want_l = fh.block(pi) * rep.mat(group.inv(xi));
                let want_r = rep.mat(xi) * fh.block(pi);
                assert!(max_abs(&(lh.block(pi) - want_l)) < 1e-12);
                assert!(max_abs(&(rh.block(pi) - want_r)) < 1e-12);
            }
        }
    }

    #[test]
    fn positive_type_detection() {
        let (group, table) = d3();
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = GroupFunction::random(group.clone(), &mut rng);
        let f = g.convolve(&g.involution()).unwrap();
        let report = is_positive_type(&f, &table, &tol).unwrap();
        assert!(report.is_positive_type, "{report:?}");

        let ones = GroupFunction::constant(group.clone(), cr(1.0));
        assert!(is_positive_type(&ones, &table, &tol).unwrap().is_positive_type);

        // −χ for a nontrivial irrep: blocks −(1/d)·I ≺ 0
        let neg_char = GroupFunction::new(
            group,
            table.irrep(2).character().values.iter().map(|v| -v).collect(),
        )
        .unwrap();
        let report = is_positive_type(&neg_char, &table, &tol).unwrap();
        assert!(!report.is_positive_type);
        assert_eq!(report.violating_irrep.as_deref(), Some("pi3"));
        assert!(report.min_eigenvalue < -0.4);
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let (group, _) = d3();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let f = GroupFunction::constant(group, cr(1.0));
        let g = GroupFunction::constant(z2, cr(1.0));
        assert!(f.inner_product(&g).is_err());
        assert!(f.convolve(&g).is_err());
        let h = GroupFunction::new(f.group().clone(), vec![c(1.0, 0.0); 6]).unwrap();
        assert!(f.plus(&h).is_ok());
    }
}
