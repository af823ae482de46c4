//! Unitary representations as explicit per-element matrices: validation,
//! characters, multiplicities, contragredients, isotypical projections, and
//! built-in validated irrep tables for common groups.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAction, GroupSpec};
use crate::linalg::{c, cr, max_abs, C64, CMat};
use crate::tol::Tolerances;
use std::f64::consts::TAU;
use std::sync::Arc;

/// Homomorphism checking is exhaustive up to this order, generator-based above.
const EXHAUSTIVE_HOM_BOUND: usize = 64;

#[derive(Clone, Debug)]
pub struct RepReport {
    pub dim: usize,
    pub group_order: usize,
    pub identity_deviation: f64,
    pub max_unitarity_deviation: f64,
    pub max_homomorphism_deviation: f64,
    pub homomorphism_pairs_checked: usize,
    pub exhaustive: bool,
    pub violations: Vec<String>,
}

impl RepReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Greedy generating set: walk elements in index order, keeping those not
/// already generated.
pub(crate) fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    reached[group.identity()] = true;
    let mut count = 1usize;
    for x in 0..n {
        if reached[x] {
            continue;
        }
        gens.push(x);
        // close under right multiplication by the generators so far
        let mut frontier: Vec<usize> = (0..n).filter(|&y| reached[y]).collect();
        while let Some(y) = frontier.pop() {
            for &g in &gens {
                let z = group.mul(y, g);
                if !std::mem::replace(&mut reached[z], true) {
                    count += 1;
                    frontier.push(z);
                }
            }
        }
        if count == n {
            break;
        }
    }
    gens
}

/// Check the representation invariants on raw matrices; shape problems are
/// hard errors, everything else lands in the report.
pub fn validate_rep_matrices(
    group: &FiniteGroup,
    mats: &[CMat],
    tol: &Tolerances,
) -> Result<RepReport> {
    let n = group.order();
    if mats.len() != n {
        return Err(Error::SizeMismatch(format!(
            "{} matrices for a group of order {n}",
            mats.len()
        )));
    }
    let dim = mats[0].nrows();
    if dim == 0 {
        return Err(Error::DimensionMismatch("zero-dimensional representation".into()));
    }
    for (g, m) in mats.iter().enumerate() {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix for element {g} is {}×{}, expected {dim}×{dim}",
                m.nrows(),
                m.ncols()
            )));
        }
    }
    let eye = CMat::identity(dim, dim);
    let identity_deviation = max_abs(&(&mats[group.identity()] - &eye));
    let max_unitarity_deviation = mats
        .iter()
        .map(|m| max_abs(&(m.adjoint() * m - &eye)))
        .fold(0.0f64, f64::max);
    let (pairs, exhaustive): (Vec<(usize, usize)>, bool) = if n <= EXHAUSTIVE_HOM_BOUND {
        let mut v = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                v.push((g, h));
            }
        }
        (v, true)
    } else {
        let gens = greedy_generators(group);
        let mut v = Vec::with_capacity(n * gens.len());
        for g in 0..n {
            for &s in &gens {
                v.push((g, s));
            }
        }
        (v, false)
    };
    let mut max_hom = 0.0f64;
    for &(g, h) in &pairs {
        let dev = max_abs(&(&mats[group.mul(g, h)] - &mats[g] * &mats[h]));
        if dev > max_hom {
            max_hom = dev;
        }
    }
    let mut violations = Vec::new();
    if identity_deviation > tol.unitary {
        violations.push(format!(
            "identity matrix deviates from I by {identity_deviation:.3e}"
        ));
    }
    if max_unitarity_deviation > tol.unitary {
        violations.push(format!(
            "worst ‖M*M − I‖_max = {max_unitarity_deviation:.3e} exceeds {:.1e}",
            tol.unitary
        ));
    }
    if max_hom > tol.unitary {
        violations.push(format!(
            "worst ‖M[g·h] − M[g]M[h]‖_max = {max_hom:.3e} exceeds {:.1e}",
            tol.unitary
        ));
    }
    Ok(RepReport {
        dim,
        group_order: n,
        identity_deviation,
        max_unitarity_deviation,
        max_homomorphism_deviation: max_hom,
        homomorphism_pairs_checked: pairs.len(),
        exhaustive,
        violations,
    })
}

#[derive(Clone, Debug)]
pub struct UnitaryRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    mats: Arc<Vec<CMat>>,
}

impl UnitaryRep {
    pub fn new(group: Arc<FiniteGroup>, mats: Vec<CMat>) -> Result<Self> {
        Self::new_with(group, mats, &Tolerances::default())
    }

    pub fn new_with(group: Arc<FiniteGroup>, mats: Vec<CMat>, tol: &Tolerances) -> Result<Self> {
        let report = validate_rep_matrices(&group, &mats, tol)?;
        if !report.is_valid() {
            return Err(Error::InvalidRep(report.violations.join("; ")));
        }
        Ok(UnitaryRep {
            dim: report.dim,
            group,
            mats: Arc::new(mats),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mat(&self, g: usize) -> &CMat {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.mats
    }

    pub fn character(&self) -> Character {
        Character {
            values: self.mats.iter().map(|m| m.diagonal().sum()).collect(),
        }
    }

    /// Entrywise conjugate — the contragredient of a unitary representation.
    pub fn conjugate(&self) -> Result<UnitaryRep> {
        let mats = self.mats.iter().map(|m| m.map(|z| z.conj())).collect();
        UnitaryRep::new(self.group.clone(), mats)
    }

    pub fn direct_sum(&self, other: &UnitaryRep) -> Result<UnitaryRep> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("the inputs are over different groups".into()));
        }
        let (da, db) = (self.dim, other.dim);
        let mats = self
            .mats
            .iter()
            .zip(other.mats.iter())
            .map(|(a, b)| {
                let mut m = CMat::zeros(da + db, da + db);
                m.view_mut((0, 0), (da, da)).copy_from(a);
                m.view_mut((da, da), (db, db)).copy_from(b);
                m
            })
            .collect();
        UnitaryRep::new(self.group.clone(), mats)
    }

    /// ρ(g) = permutation matrix of the action: ρ(g)·e_y = e_{g·y}.
    pub fn from_action(action: &GroupAction) -> Result<UnitaryRep> {
        let n = action.set_size();
        let mats = action
            .group()
            .elements()
            .map(|g| CMat::from_fn(n, n, |x, y| if action.apply(g, y) == x { cr(1.0) } else { cr(0.0) }))
            .collect();
        UnitaryRep::new(action.group().clone(), mats)
    }

    pub fn left_regular(group: Arc<FiniteGroup>) -> Result<UnitaryRep> {
        let action = GroupAction::left_translation(group)?;
        UnitaryRep::from_action(&action)
    }

    /// Extend generator images to every element by closing words, then
    /// validate the result in full.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        dim: usize,
        images: &[(usize, CMat)],
    ) -> Result<UnitaryRep> {
        for (g, m) in images {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "image of generator {g} is {}×{}, expected {dim}×{dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let n = group.order();
        let mut mats: Vec<Option<CMat>> = vec![None; n];
        mats[group.identity()] = Some(CMat::identity(dim, dim));
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            let mx = mats[x].clone().unwrap();
            for (g, mg) in images {
                let y = group.mul(x, *g);
                if mats[y].is_none() {
                    mats[y] = Some(&mx * mg);
                    frontier.push(y);
                }
            }
        }
        let mats: Vec<CMat> = mats
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidInput("generators do not generate the group".into()))?;
        UnitaryRep::new(group, mats)
    }

    /// Outer tensor product on the direct product group, (g,h) ↦ A(g)⊗B(h),
    /// with the product indexed as i·|H| + j.
    pub fn outer_tensor(
        product_group: Arc<FiniteGroup>,
        a: &UnitaryRep,
        b: &UnitaryRep,
    ) -> Result<UnitaryRep> {
        let (ng, nh) = (a.group.order(), b.group.order());
        if product_group.order() != ng * nh {
            return Err(Error::GroupMismatch("the inputs are over different groups".into()));
        }
        let mut mats = Vec::with_capacity(ng * nh);
        for i in 0..ng {
            for j in 0..nh {
                mats.push(a.mat(i).kronecker(b.mat(j)));
            }
        }
        UnitaryRep::new(product_group, mats)
    }
}

#[derive(Clone, Debug)]
pub struct Character {
    pub values: Vec<C64>,
}

impl Character {
    /// ⟨χ₁, χ₂⟩ = (1/|K|)·Σ_ξ χ₁(ξ)·conj(χ₂(ξ)).
    pub fn inner(&self, other: &Character) -> C64 {
        let n = self.values.len();
        let s: C64 = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a * b.conj())
            .sum();
        s / cr(n as f64)
    }

    /// χ(e) = dim and constancy on conjugacy classes.
    pub fn validate(&self, group: &FiniteGroup, dim: usize, tol: &Tolerances) -> Vec<String> {
        let mut violations = Vec::new();
        if self.values.len() != group.order() {
            violations.push("character length differs from group order".into());
            return violations;
        }
        let at_e = self.values[group.identity()];
        if (at_e - cr(dim as f64)).norm() > tol.character {
            violations.push(format!("χ(identity) = {at_e} but dim = {dim}"));
        }
        for x in group.elements() {
            let class = group.conjugacy_class(x);
            let v = self.values[class[0]];
            for &y in &class {
                if (self.values[y] - v).norm() > tol.character {
                    violations.push(format!(
                        "character is not constant on the conjugacy class of {x}"
                    ));
                    break;
                }
            }
        }
        violations.dedup();
        violations
    }
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub n_irreps: usize,
    pub dims: Vec<usize>,
    pub sum_dim_sq: usize,
    pub group_order: usize,
    pub max_orthogonality_deviation: f64,
    pub violations: Vec<String>,
}

impl TableReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Table-level invariants over already-validated representations.
pub fn validate_irrep_table(
    group: &FiniteGroup,
    irreps: &[UnitaryRep],
    names: &[String],
    tol: &Tolerances,
) -> TableReport {
    let mut violations = Vec::new();
    if names.len() != irreps.len() {
        violations.push(format!(
            "{} names for {} representations",
            names.len(),
            irreps.len()
        ));
    }
    let mut sorted_names: Vec<&String> = names.iter().collect();
    sorted_names.sort();
    sorted_names.dedup();
    if sorted_names.len() != names.len() {
        violations.push("duplicate names".into());
    }
    for (i, rep) in irreps.iter().enumerate() {
        if rep.group().as_ref() != group {
            violations.push(format!("representation {i} is over a different group"));
        }
    }
    let chars: Vec<Character> = irreps.iter().map(|r| r.character()).collect();
    for (i, (rep, ch)) in irreps.iter().zip(chars.iter()).enumerate() {
        for v in ch.validate(group, rep.dim(), tol) {
            violations.push(format!("representation {i}: {v}"));
        }
    }
    let mut max_dev = 0.0f64;
    for i in 0..irreps.len() {
        for j in 0..irreps.len() {
            let want = if i == j { cr(1.0) } else { cr(0.0) };
            let dev = (chars[i].inner(&chars[j]) - want).norm();
            if dev > max_dev {
                max_dev = dev;
            }
            if dev > tol.character {
                violations.push(if i == j {
                    format!("entry {i} is not irreducible: ⟨χ,χ⟩ deviates by {dev:.3e}")
                } else {
                    format!("entries {i},{j} are equivalent: ⟨χᵢ,χⱼ⟩ deviates by {dev:.3e}")
                });
            }
        }
    }
    let dims: Vec<usize> = irreps.iter().map(|r| r.dim()).collect();
    let sum_dim_sq: usize = dims.iter().map(|d| d * d).sum();
    if sum_dim_sq != group.order() {
        violations.push(format!(
            "Σ d² = {sum_dim_sq} but the group has order {}",
            group.order()
        ));
    }
    TableReport {
        n_irreps: irreps.len(),
        dims,
        sum_dim_sq,
        group_order: group.order(),
        max_orthogonality_deviation: max_dev,
        violations,
    }
}

#[derive(Clone, Debug)]
pub struct IrrepTable {
    group: Arc<FiniteGroup>,
    irreps: Vec<UnitaryRep>,
    names: Vec<String>,
    contragredient_of: Vec<usize>,
    basis_name: String,
}

impl IrrepTable {
    pub fn new(
        group: Arc<FiniteGroup>,
        irreps: Vec<UnitaryRep>,
        names: Vec<String>,
        basis_name: impl Into<String>,
    ) -> Result<Self> {
        let tol = Tolerances::default();
        let report = validate_irrep_table(&group, &irreps, &names, &tol);
        if !report.is_valid() {
            return Err(Error::InvalidTable(report.violations.join("; ")));
        }
        let chars: Vec<Character> = irreps.iter().map(|r| r.character()).collect();
        let mut contragredient_of = Vec::with_capacity(irreps.len());
        for (i, ch) in chars.iter().enumerate() {
            let conj = Character {
                values: ch.values.iter().map(|z| z.conj()).collect(),
            };
            let mut found = None;
            for (j, other) in chars.iter().enumerate() {
                let dev = other
                    .values
                    .iter()
                    .zip(conj.values.iter())
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0f64, f64::max);
                if dev <= tol.character {
                    found = Some(j);
                    break;
                }
            }
            let j = found.ok_or_else(|| {
                Error::InvalidTable(format!(
                    "no entry matches the conjugate character of entry {i}"
                ))
            })?;
            contragredient_of.push(j);
        }
        Ok(IrrepTable {
            group,
            irreps,
            names,
            contragredient_of,
            basis_name: basis_name.into(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn irrep(&self, i: usize) -> &UnitaryRep {
        &self.irreps[i]
    }

    pub fn irreps(&self) -> &[UnitaryRep] {
        &self.irreps
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self, i: usize) -> usize {
        self.irreps[i].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim()).collect()
    }

    pub fn contragredient_of(&self, i: usize) -> usize {
        self.contragredient_of[i]
    }

    pub fn basis_name(&self) -> &str {
        &self.basis_name
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// mult(π, ρ) = ⟨χ_ρ, χ_π⟩ for each table entry, rounded to integers.
    pub fn multiplicities(&self, rep: &UnitaryRep) -> Result<Vec<usize>> {
        if rep.group() != &self.group {
            return Err(Error::GroupMismatch("the inputs are over different groups".into()));
        }
        let tol = Tolerances::default();
        let chi_rho = rep.character();
        let mut mults = Vec::with_capacity(self.irreps.len());
        for (i, pi) in self.irreps.iter().enumerate() {
            let val = chi_rho.inner(&pi.character());
            let rounded = val.re.round();
            let slack = tol.character * (1.0 + rep.dim() as f64);
            if val.im.abs() > slack || (val.re - rounded).abs() > slack || rounded < 0.0 {
                return Err(Error::NonIntegerMultiplicity {
                    irrep: self.names[i].clone(),
                    value: val.re,
                });
            }
            mults.push(rounded as usize);
        }
        let total: usize = mults
            .iter()
            .zip(self.irreps.iter())
            .map(|(m, pi)| m * pi.dim())
            .sum();
        if total != rep.dim() {
            return Err(Error::InvalidRep(format!(
                "Σ d_π·mult = {total} but the representation has dimension {}",
                rep.dim()
            )));
        }
        Ok(mults)
    }

    /// P_π = d_π·(1/|K|)·Σ_ξ conj(χ_π(ξ))·ρ(ξ).
    pub fn isotypical_projection(&self, rep: &UnitaryRep, pi: usize) -> Result<CMat> {
        if rep.group() != &self.group {
            return Err(Error::GroupMismatch("the inputs are over different groups".into()));
        }
        let n = self.group.order();
        let d_pi = self.irreps[pi].dim() as f64;
        let chi = self.irreps[pi].character();
        let mut p = CMat::zeros(rep.dim(), rep.dim());
        for xi in self.group.elements() {
            p += rep.mat(xi) * (chi.values[xi].conj() * cr(d_pi / n as f64));
        }
        Ok(p)
    }
}

/// Which concrete basis the 2-dimensional dihedral irreps use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralBasis {
    /// π_h(a) = diag(ω^h, ω^{−h}) with ω = e^{2πi/n}.
    Complex,
    /// π_h(a) = rotation by 2πh/n, π_h(b) = diag(1, −1).
    RealRotation,
}

impl DihedralBasis {
    pub fn label(&self) -> &'static str {
        match self {
            DihedralBasis::Complex => "complex",
            DihedralBasis::RealRotation => "real-rotation",
        }
    }
}

fn root_of_unity(num: i64, den: usize) -> C64 {
    let r = num.rem_euclid(den as i64);
    let angle = TAU * r as f64 / den as f64;
    c(angle.cos(), angle.sin())
}

fn one_dim(values: Vec<C64>) -> Vec<CMat> {
    values
        .into_iter()
        .map(|v| CMat::from_element(1, 1, v))
        .collect()
}

fn cyclic_table(n: usize) -> Result<(Arc<FiniteGroup>, Vec<Vec<CMat>>, Vec<String>)> {
    let group = FiniteGroup::cyclic(n)?;
    let mut reps = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    for j in 0..n {
        let values: Vec<C64> = (0..n).map(|k| root_of_unity((j * k) as i64, n)).collect();
        reps.push(one_dim(values));
        names.push(format!("chi{j}"));
    }
    Ok((group, reps, names))
}

fn dihedral_table(
    n: usize,
    basis: DihedralBasis,
) -> Result<(Arc<FiniteGroup>, Vec<Vec<CMat>>, Vec<String>)> {
    let group = FiniteGroup::dihedral(n)?;
    let order = 2 * n;
    let mut reps: Vec<Vec<CMat>> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    // element indices: aⁱ ↦ i, aⁱb ↦ n + i
    let split = |g: usize| if g < n { (g, false) } else { (g - n, true) };
    reps.push(one_dim(vec![cr(1.0); order]));
    names.push("pi1".into());
    reps.push(one_dim(
        (0..order)
            .map(|g| if split(g).1 { cr(-1.0) } else { cr(1.0) })
            .collect(),
    ));
    names.push("pi2".into());
    let mut next = 3usize;
    if n % 2 == 0 {
        for sign_on_b in [false, true] {
            reps.push(one_dim(
                (0..order)
                    .map(|g| {
                        let (i, flip) = split(g);
                        let v = if i % 2 == 0 { 1.0 } else { -1.0 };
                        cr(if flip && sign_on_b { -v } else { v })
                    })
                    .collect(),
            ));
            names.push(format!("pi{next}"));
            next += 1;
        }
    }
    let two_dim_count = if n % 2 == 0 { n / 2 - 1 } else { (n - 1) / 2 };
    for h in 1..=two_dim_count {
        let mats: Vec<CMat> = (0..order)
            .map(|g| {
                let (i, flip) = split(g);
                match basis {
                    DihedralBasis::Complex => {
                        let w = root_of_unity((h * i) as i64, n);
                        if flip {
                            CMat::from_row_slice(2, 2, &[cr(0.0), w, w.conj(), cr(0.0)])
                        } else {
                            CMat::from_row_slice(2, 2, &[w, cr(0.0), cr(0.0), w.conj()])
                        }
                    }
                    DihedralBasis::RealRotation => {
                        let angle = TAU * ((h * i) % n) as f64 / n as f64;
                        let (s, co) = angle.sin_cos();
                        if flip {
                            CMat::from_row_slice(2, 2, &[cr(co), cr(s), cr(s), cr(-co)])
                        } else {
                            CMat::from_row_slice(2, 2, &[cr(co), cr(-s), cr(s), cr(co)])
                        }
                    }
                }
            })
            .collect();
        reps.push(mats);
        names.push(format!("pi{next}"));
        next += 1;
    }
    Ok((group, reps, names))
}

/// Orthonormal basis of the sum-zero subspace of Rⁿ, as columns.
fn sum_zero_basis(n: usize) -> CMat {
    let mut b = CMat::zeros(n, n - 1);
    for j in 0..n - 1 {
        // (1, …, 1, −(j+1), 0, …, 0)/√((j+1)(j+2))
        let norm = ((j + 1) as f64 * (j + 2) as f64).sqrt();
        for i in 0..=j {
            b[(i, j)] = cr(1.0 / norm);
        }
        b[(j + 1, j)] = cr(-((j + 1) as f64) / norm);
    }
    b
}

fn perm_matrix(perm: &[usize]) -> CMat {
    let n = perm.len();
    CMat::from_fn(n, n, |x, y| if perm[y] == x { cr(1.0) } else { cr(0.0) })
}

fn perm_sign(perm: &[usize]) -> f64 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Standard (n−1)-dimensional matrices Bᵀ·P_σ·B over the sum-zero subspace.
fn standard_rep_mats(perms: &[Vec<usize>]) -> Vec<CMat> {
    let n = perms[0].len();
    let b = sum_zero_basis(n);
    perms
        .iter()
        .map(|p| b.transpose() * perm_matrix(p) * &b)
        .collect()
}

fn symmetric_table(n: usize) -> Result<(Arc<FiniteGroup>, Vec<Vec<CMat>>, Vec<String>)> {
    let group = FiniteGroup::symmetric(n)?;
    let perms = crate::group::all_permutations(n);
    let order = perms.len();
    match n {
        1 => Ok((group, vec![one_dim(vec![cr(1.0)])], vec!["triv".into()])),
        2 => Ok((
            group,
            vec![
                one_dim(vec![cr(1.0); 2]),
                one_dim(perms.iter().map(|p| cr(perm_sign(p))).collect()),
            ],
            vec!["triv".into(), "sgn".into()],
        )),
        3 => {
            let std2 = standard_rep_mats(&perms);
            Ok((
                group,
                vec![
                    one_dim(vec![cr(1.0); order]),
                    one_dim(perms.iter().map(|p| cr(perm_sign(p))).collect()),
                    std2,
                ],
                vec!["triv".into(), "sgn".into(), "std2".into()],
            ))
        }
        4 => {
            let std3 = standard_rep_mats(&perms);
            let sgn: Vec<f64> = perms.iter().map(|p| perm_sign(p)).collect();
            let sgnstd3: Vec<CMat> = std3
                .iter()
                .zip(sgn.iter())
                .map(|(m, s)| m * cr(*s))
                .collect();
            // The three pairings of {0,1,2,3}, indexed by the partner of 0;
            // σ permutes them, and the induced 3-point permutation feeds the
            // 2-dimensional standard matrices.
            let partner_action = |p: &[usize]| -> Vec<usize> {
                (0..3usize)
                    .map(|k| {
                        let pairs = match k {
                            0 => [[0, 1], [2, 3]],
                            1 => [[0, 2], [1, 3]],
                            _ => [[0, 3], [1, 2]],
                        };
                        let imgs = [
                            [p[pairs[0][0]], p[pairs[0][1]]],
                            [p[pairs[1][0]], p[pairs[1][1]]],
                        ];
                        let block = if imgs[0].contains(&0) { imgs[0] } else { imgs[1] };
                        let partner = if block[0] == 0 { block[1] } else { block[0] };
                        partner - 1
                    })
                    .collect()
            };
            let b3 = sum_zero_basis(3);
            let pair2: Vec<CMat> = perms
                .iter()
                .map(|p| {
                    let q = partner_action(p);
                    b3.transpose() * perm_matrix(&q) * &b3
                })
                .collect();
            Ok((
                group,
                vec![
                    one_dim(vec![cr(1.0); order]),
                    one_dim(sgn.iter().map(|s| cr(*s)).collect()),
                    pair2,
                    std3,
                    sgnstd3,
                ],
                vec![
                    "triv".into(),
                    "sgn".into(),
                    "pair2".into(),
                    "std3".into(),
                    "sgnstd3".into(),
                ],
            ))
        }
        _ => Err(Error::UnsupportedGroup(format!(
            "no built-in irrep table for symmetric:{n}"
        ))),
    }
}

fn spec_has_dihedral(spec: &GroupSpec) -> bool {
    match spec {
        GroupSpec::Dihedral(_) => true,
        GroupSpec::Product(l, r) => spec_has_dihedral(l) || spec_has_dihedral(r),
        _ => false,
    }
}

fn builtin_raw(
    spec: &GroupSpec,
    basis: DihedralBasis,
) -> Result<(Arc<FiniteGroup>, Vec<Vec<CMat>>, Vec<String>)> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic_table(*n),
        GroupSpec::Dihedral(n) => dihedral_table(*n, basis),
        GroupSpec::Symmetric(n) => symmetric_table(*n),
        GroupSpec::Product(l, r) => {
            let (gl, rl, nl) = builtin_raw(l, basis)?;
            let (gr, rr, nr) = builtin_raw(r, basis)?;
            let group = FiniteGroup::product(&gl, &gr)?;
            let (ol, or_) = (gl.order(), gr.order());
            let mut reps = Vec::with_capacity(rl.len() * rr.len());
            let mut names = Vec::with_capacity(rl.len() * rr.len());
            for (ml, name_l) in rl.iter().zip(nl.iter()) {
                for (mr, name_r) in rr.iter().zip(nr.iter()) {
                    let mut mats = Vec::with_capacity(ol * or_);
                    for i in 0..ol {
                        for j in 0..or_ {
                            mats.push(ml[i].kronecker(&mr[j]));
                        }
                    }
                    reps.push(mats);
                    names.push(format!("{name_l}|{name_r}"));
                }
            }
            Ok((group, reps, names))
        }
    }
}

/// Carry an irrep table across an isomorphism: given a table over `b` and an
/// index map `iso: a → b`, produce the same irreps expressed over `a`
/// (matrix at x is the source matrix at iso[x]). The result is revalidated
/// in full, so an incorrect map cannot slip through.
pub fn transported_table(
    source: &IrrepTable,
    group: Arc<FiniteGroup>,
    iso: &[usize],
) -> Result<Arc<IrrepTable>> {
    if iso.len() != group.order() || group.order() != source.group().order() {
        return Err(Error::SizeMismatch(format!(
            "isomorphism of length {} between groups of orders {} and {}",
            iso.len(),
            group.order(),
            source.group().order()
        )));
    }
    let irreps = (0..source.n_irreps())
        .map(|pi| {
            let mats = (0..group.order())
                .map(|x| source.irrep(pi).mat(iso[x]).clone())
                .collect();
            UnitaryRep::new(group.clone(), mats)
        })
        .collect::<Result<Vec<_>>>()?;
    let table = IrrepTable::new(
        group,
        irreps,
        source.names().to_vec(),
        source.basis_name(),
    )?;
    Ok(Arc::new(table))
}

/// Build and fully validate the irrep table of a supported group spec.
/// Supported: cyclic:n, dihedral:n, symmetric:n for n ≤ 4, and products.
pub fn builtin_irrep_table(
    spec: &GroupSpec,
    basis: DihedralBasis,
) -> Result<(Arc<FiniteGroup>, Arc<IrrepTable>)> {
    let (group, raw, names) = builtin_raw(spec, basis)?;
    let irreps = raw
        .into_iter()
        .map(|mats| UnitaryRep::new(group.clone(), mats))
        .collect::<Result<Vec<_>>>()?;
    let basis_name = if spec_has_dihedral(spec) {
        basis.label()
    } else {
        "default"
    };
    let table = IrrepTable::new(group.clone(), irreps, names, basis_name)?;
    Ok((group, Arc::new(table)))
}
