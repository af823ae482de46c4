//! Construction-side guarantees: harmonic frames really are Parseval,
//! projection-valued generators satisfy the classification identities, the
//! existence verdict round-trips through an assembled representation, and
//! the doubly-transitive construction is exhaustive up to scaling.

mod common;

use std::sync::Arc;

use common::{builtin_real, random_fn, rng, small_groups, tol, values_deviation};
use framecraft_core::linalg::{c, cr, hermitian_eigenvalues, max_abs};
use framecraft_core::{
    admits_k_frame, bracket, fourier, frame_bounds_single, harmonic_frame, is_positive_type,
    parseval_generator, two_transitive_tightness, CMat, GroupAction, RankSelection, RepVector,
    UnitaryRep, C64,
};
use proptest::prelude::*;
use rand::Rng;

fn random_ranks(dims: &[usize], rng: &mut impl Rng) -> Vec<usize> {
    loop {
        let ranks: Vec<usize> = dims.iter().map(|&d| rng.gen_range(0..=d)).collect();
        if ranks.iter().any(|&r| r > 0) {
            return ranks;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 16,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn harmonic_frames_resolve_the_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, group, table) in small_groups() {
            let dims: Vec<usize> = (0..table.n_irreps()).map(|pi| table.dim(pi)).collect();
            let ranks = random_ranks(&dims, &mut r);
            let selection = RankSelection::new(table.clone(), ranks).unwrap();
            let frame = harmonic_frame(&selection).unwrap();
            let n = frame.dim();
            let mut resolved = CMat::zeros(n, n);
            for v in frame.vectors() {
                resolved += v * v.adjoint();
            }
            resolved /= cr(group.order() as f64);
            let dev = max_abs(&(resolved - CMat::identity(n, n)));
            prop_assert!(dev < 1e-9, "deviation {dev}");
        }
    }

    #[test]
    fn parseval_generators_are_self_adjoint_idempotents(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, group, table) in small_groups() {
            let dims: Vec<usize> = (0..table.n_irreps()).map(|pi| table.dim(pi)).collect();
            let ranks = random_ranks(&dims, &mut r);
            let selection = RankSelection::new(table.clone(), ranks.clone()).unwrap();
            let f = parseval_generator(&selection).unwrap();
            prop_assert!(values_deviation(f.values(), f.involution().values()) < 1e-10);
            let ff = f.convolve(&f).unwrap();
            prop_assert!(values_deviation(f.values(), ff.values()) < 1e-10);
            prop_assert!(is_positive_type(&f, &table, &tol()).unwrap().is_positive_type);

            // Its orbit under left translation is a continuous Parseval
            // frame for its span. The coordinate model of L²(K) carries
            // |K|·⟨·,·⟩_{L²}, so the generator picks up 1/√|K|.
            let rep = Arc::new(UnitaryRep::left_regular(group.clone()).unwrap());
            let scale = cr(1.0 / (group.order() as f64).sqrt());
            let coords: Vec<C64> = f.values().iter().map(|v| v * scale).collect();
            let vector = RepVector::from_slice(rep, &coords).unwrap();
            let report = frame_bounds_single(&vector, &table, &tol()).unwrap();
            prop_assert!(report.is_parseval_continuous);
            let expected_span: usize =
                ranks.iter().zip(&dims).map(|(r, d)| r * d).sum();
            prop_assert_eq!(report.span_dim, expected_span);
        }
    }

    #[test]
    fn rank_selections_round_trip_through_the_existence_verdict(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, _, table) in small_groups() {
            let dims: Vec<usize> = (0..table.n_irreps()).map(|pi| table.dim(pi)).collect();
            let ranks = random_ranks(&dims, &mut r);
            // ρ = ⊕_π π^{⊕r_π}: multiplicities within irrep dimensions by
            // construction, so a Parseval orbit must exist
            let mut rep: Option<UnitaryRep> = None;
            for (pi, &k) in ranks.iter().enumerate() {
                for _ in 0..k {
                    rep = Some(match rep {
                        None => table.irrep(pi).clone(),
                        Some(prev) => prev.direct_sum(table.irrep(pi)).unwrap(),
                    });
                }
            }
            let rep = rep.unwrap();
            let verdict = admits_k_frame(&rep, &table).unwrap();
            prop_assert!(verdict.admits);
            for entry in &verdict.per_irrep {
                prop_assert!(entry.multiplicity <= entry.dim);
            }
            // the witness generator has idempotent Hermitian bracket blocks
            let g = verdict.generator.unwrap();
            let coeffs = fourier(&g, &table).unwrap();
            for pi in 0..table.n_irreps() {
                let b = coeffs.block(pi);
                prop_assert!(max_abs(&(b - b.adjoint())) < 1e-8);
                prop_assert!(max_abs(&(b * b - b)) < 1e-8);
            }
        }
    }

    #[test]
    fn overloaded_multiplicities_are_rejected(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, _, table) in small_groups() {
            // (d_π + 1) copies of some irrep can never carry a Parseval orbit
            let pi = r.gen_range(0..table.n_irreps());
            let mut rep = table.irrep(pi).clone();
            for _ in 0..table.dim(pi) {
                rep = rep.direct_sum(table.irrep(pi)).unwrap();
            }
            let verdict = admits_k_frame(&rep, &table).unwrap();
            prop_assert!(!verdict.admits);
            prop_assert!(verdict.generator.is_none());
        }
    }

    #[test]
    fn transitive_construction_reaches_every_tight_vector(seed in any::<u64>()) {
        let mut r = rng(seed);
        for n in 2..=4usize {
            let action = GroupAction::natural_symmetric(n).unwrap();
            // sample a tight vector: f = c·(1 + ψ) with Σψ = 0, |ψ|² = n²−n
            let mut psi: Vec<C64> = (0..n)
                .map(|_| c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
                .collect();
            let mean: C64 = psi.iter().sum::<C64>() / cr(n as f64);
            for v in psi.iter_mut() {
                *v -= mean;
            }
            let norm_sq: f64 = psi.iter().map(|v| v.norm_sqr()).sum();
            prop_assume!(norm_sq > 1e-6);
            let lift = ((n * n - n) as f64 / norm_sq).sqrt();
            let scale = c(r.gen_range(0.1..2.0), r.gen_range(-1.0..1.0));
            let f: Vec<C64> = psi
                .iter()
                .map(|v| (c(1.0, 0.0) + v * lift) * scale)
                .collect();
            let report = two_transitive_tightness(&action, &f, &tol()).unwrap();
            prop_assert!(report.criterion_tight && report.spectrum_tight);

            // …and conversely, recover the decomposition from f alone
            let c_rec: C64 = f.iter().sum::<C64>() / cr(n as f64);
            prop_assert!(c_rec.norm() > 1e-8);
            let psi_rec: Vec<C64> = f.iter().map(|v| v / c_rec - c(1.0, 0.0)).collect();
            let mean_rec: C64 = psi_rec.iter().sum();
            prop_assert!(mean_rec.norm() < 1e-8);
            let rec_norm: f64 = psi_rec.iter().map(|v| v.norm_sqr()).sum();
            prop_assert!((rec_norm - (n * n - n) as f64).abs() < 1e-6);
        }
    }
}

#[test]
fn real_basis_harmonic_frames_have_real_entries() {
    let (_, table) = builtin_real("dihedral:4");
    let dims: Vec<usize> = (0..table.n_irreps()).map(|pi| table.dim(pi)).collect();
    let selection = RankSelection::new(table, dims).unwrap();
    let frame = harmonic_frame(&selection).unwrap();
    assert!(frame.max_imaginary() < 1e-12);
    assert!(frame.parseval_deviation() < 1e-10);
}

#[test]
fn full_rank_selection_spans_the_regular_dimension() {
    for (_, group, table) in small_groups() {
        let selection = RankSelection::full(table.clone());
        let frame = harmonic_frame(&selection).unwrap();
        assert_eq!(frame.n_vectors(), group.order());
        assert_eq!(frame.dim(), group.order());
        // Peter–Weyl: the full selection is an orthogonal |K|×|K| system
        let g = bracket_free_gram(&frame);
        let dev = max_abs(&(&g / cr(group.order() as f64) - CMat::identity(g.nrows(), g.ncols())));
        assert!(dev < 1e-10);
    }
}

fn bracket_free_gram(frame: &framecraft_core::FrameMatrix) -> CMat {
    let m = frame.as_matrix();
    &m * m.adjoint()
}

/// Mean-zero perturbations are required: a nonzero mean breaks tightness
/// and the constructor refuses it.
#[test]
fn biased_perturbations_are_rejected() {
    use framecraft_core::{permutation_frame_generator, Error};
    let psi = [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
    match permutation_frame_generator(3, Some(&psi), &tol()) {
        Err(Error::BadPsi(_)) => {}
        other => panic!("expected BadPsi, got {other:?}"),
    }
}

#[test]
fn random_function_is_generically_not_positive_type() {
    let (_, group, table) = &small_groups()[1];
    let f = random_fn(group, &mut rng(11));
    let report = is_positive_type(&f, table, &tol()).unwrap();
    assert!(!report.is_positive_type);
}
