#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use framecraft_core::linalg::{c, max_abs};
use framecraft_core::{
    builtin_irrep_table, C64, CMat, CVec, DihedralBasis, FiniteGroup, GroupFunction, GroupSpec,
    IrrepTable, RepVector, Tolerances, UnitaryRep,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn builtin(spec: &str) -> (Arc<FiniteGroup>, Arc<IrrepTable>) {
    builtin_irrep_table(&GroupSpec::parse(spec).unwrap(), DihedralBasis::Complex).unwrap()
}

pub fn builtin_real(spec: &str) -> (Arc<FiniteGroup>, Arc<IrrepTable>) {
    builtin_irrep_table(&GroupSpec::parse(spec).unwrap(), DihedralBasis::RealRotation).unwrap()
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn random_fn(group: &Arc<FiniteGroup>, rng: &mut impl Rng) -> GroupFunction {
    GroupFunction::random(group.clone(), rng)
}

pub fn random_vec(dim: usize, rng: &mut impl Rng) -> CVec {
    CVec::from_iterator(
        dim,
        (0..dim).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
    )
}

pub fn random_rep_vector(rep: &Arc<UnitaryRep>, rng: &mut impl Rng) -> RepVector {
    RepVector::random(rep.clone(), rng)
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut impl Rng) -> CMat {
    CMat::from_fn(rows, cols, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

pub fn mat_deviation(a: &CMat, b: &CMat) -> f64 {
    max_abs(&(a - b))
}

pub fn values_deviation(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// The five small groups the randomized suites sweep over.
pub fn small_groups() -> Vec<(&'static str, Arc<FiniteGroup>, Arc<IrrepTable>)> {
    ["cyclic:6", "dihedral:3", "dihedral:4", "symmetric:3", "symmetric:4"]
        .into_iter()
        .map(|name| {
            let (g, t) = builtin(name);
            (name, g, t)
        })
        .collect()
}
