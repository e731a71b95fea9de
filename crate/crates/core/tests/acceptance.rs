//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured quantity, its tolerance and the runtime budget.

#![allow(clippy::needless_range_loop)]

mod common;

use std::time::Instant;

use dirac_sidharth::algebra::{
    build_gamma_set, clifford_residual, gamma5_product_residual, hermiticity_pattern_residual,
    parity_gamma5_residual, vdot, CMat2, Representation,
};
use dirac_sidharth::dispersion::{energy_branches, energy_squared, group_velocity, ModelParams};
use dirac_sidharth::evolution::{
    build_mode_hamiltonian, build_propagator_cache, init_gaussian_packet, run_evolution,
    EvolutionConfig, MomentumGrid1D, Projection,
};
use dirac_sidharth::plane_wave::{
    chi_from_phi, chi_series_partial, effective_hamiltonian_h, parity_residual_and_bound,
    positive_energy_solution, residual, solve_phi, MomentumVector, Sign, SignConvention,
};
use dirac_sidharth::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    name: &'static str,
    limit: f64,
    start: Instant,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(name: &'static str, limit: f64) -> Self {
        Self {
            name,
            limit,
            start: Instant::now(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        self.checks.push((detail, ok));
    }

    fn finish(self) {
        let elapsed = self.start.elapsed().as_secs_f64();
        let all_ok = self.checks.iter().all(|(_, ok)| *ok);
        let in_time = elapsed < self.limit;
        let status = if all_ok && in_time { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {} ({elapsed:.2}s, limit {}s)",
            self.name, self.limit
        );
        for (detail, ok) in &self.checks {
            if !ok {
                println!("    failed: {detail}");
            }
        }
        for (detail, ok) in &self.checks {
            assert!(ok, "{}: {detail}", self.name);
        }
        assert!(
            in_time,
            "{}: runtime {elapsed:.2}s exceeds {}s",
            self.name, self.limit
        );
    }
}

fn params(m: f64, alpha: f64, ell: f64) -> ModelParams {
    ModelParams::new(m, alpha, ell).unwrap()
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn random_convention(rng: &mut impl Rng) -> SignConvention {
    if rng.gen_bool(0.5) {
        SignConvention::Positive
    } else {
        SignConvention::Negative
    }
}

#[test]
fn criterion_1_gamma_algebra_suite() {
    let mut criterion = Criterion::new("criterion 1: gamma-algebra suite", 1.0);
    for rep in [Representation::Dirac, Representation::Weyl] {
        let set = build_gamma_set(rep);
        for (label, value) in [
            ("clifford", clifford_residual(&set)),
            ("gamma5 product", gamma5_product_residual(&set)),
            ("hermiticity", hermiticity_pattern_residual(&set)),
            ("parity anticommutation", parity_gamma5_residual(&set)),
        ] {
            criterion.check(
                value <= 1e-12,
                format!("{label} residual {value:.3e} > 1e-12 in {rep}"),
            );
        }
    }
    criterion.finish();
}

#[test]
fn criterion_2_h_squared_identity_sweep() {
    let mut criterion = Criterion::new("criterion 2: h² = E²·I over 1000 random tuples", 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ead);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let pr = params(
            rng.gen_range(0.0..3.0),
            rng.gen_range(0.0..2.0),
            rng.gen_range(0.01..0.3),
        );
        let p = rng.gen_range(0.0..5.0);
        let h = effective_hamiltonian_h(&pr, p, random_sign(&mut rng), random_convention(&mut rng));
        let expected = CMat2::identity() * energy_squared(&pr, p);
        worst = worst.max((h * h).max_abs_diff(&expected));
    }
    criterion.check(worst <= 1e-12, format!("worst residual {worst:.3e} > 1e-12"));
    criterion.finish();
}

#[test]
fn criterion_3_positive_energy_solutions_sweep() {
    let mut criterion = Criterion::new(
        "criterion 3: ‖Ψ₊‖ = 1 and ‖M·U‖ ≤ 1e-10 over 1000 random tuples",
        5.0,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15c);
    let gammas = build_gamma_set(Representation::Dirac);
    let mut worst_norm = 0.0f64;
    let mut worst_residual = 0.0f64;
    for _ in 0..1000 {
        let pr = params(
            rng.gen_range(1e-3..3.0),
            rng.gen_range(0.0..2.0),
            rng.gen_range(0.01..0.3),
        );
        let p: f64 = rng.gen_range(1e-3..5.0);
        let cos_theta: f64 = rng.gen_range(-1.0..1.0);
        let azimuth: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
        let pvec = MomentumVector::new([
            p * sin_theta * azimuth.cos(),
            p * sin_theta * azimuth.sin(),
            p * cos_theta,
        ])
        .unwrap();
        let sol = positive_energy_solution(
            &pr,
            &pvec,
            random_sign(&mut rng),
            random_convention(&mut rng),
        )
        .unwrap();
        worst_norm = worst_norm.max((sol.norm() - 1.0).abs());
        worst_residual = worst_residual.max(residual(&sol, &pr, &gammas).unwrap());
    }
    criterion.check(
        worst_norm <= 1e-12,
        format!("worst norm deviation {worst_norm:.3e} > 1e-12"),
    );
    criterion.check(
        worst_residual <= 1e-10,
        format!("worst momentum-space residual {worst_residual:.3e} > 1e-10"),
    );
    criterion.finish();
}

#[test]
fn criterion_4_alpha_zero_oracle_equivalence() {
    let mut criterion = Criterion::new(
        "criterion 4: α = 0 evolution matches independent standard-Dirac evolver",
        60.0,
    );
    let mass = 1.0;
    let (n_modes, box_length) = (4096usize, 256.0);
    let (p0, width) = (2.0, 0.2);
    let (dt, n_steps, stride) = (0.005, 2000usize, 20usize);

    let config = EvolutionConfig {
        params: params(mass, 0.0, 0.1),
        convention: SignConvention::default(),
        n_modes,
        box_length,
        p0,
        width,
        spin: Sign::Plus,
        projection: Projection::PositiveBranch,
        dt,
        n_steps,
        sample_stride: stride,
        snapshot_stride: n_steps,
    };
    let run = run_evolution(&config).unwrap();
    assert_eq!(run.snapshots.len(), 2);

    let mut oracle = common::OracleEvolver::gaussian_packet(
        mass, n_modes, box_length, p0, width, 1.0, true,
    );

    let mut initial_diff = 0.0f64;
    for (ours, theirs) in run.snapshots[0].amplitudes.iter().zip(&oracle.amplitudes) {
        for (a, b) in ours.iter().zip(theirs) {
            initial_diff = initial_diff.max((a - b).norm());
        }
    }
    criterion.check(
        initial_diff <= 1e-10,
        format!("initial per-mode amplitude difference {initial_diff:.3e} > 1e-10"),
    );

    let mut oracle_x = vec![common::unwrap_x(None, oracle.x_centroid(), box_length)];
    let mut prev = Some(oracle_x[0]);
    for step in 1..=n_steps {
        oracle.step(dt);
        if step % stride == 0 {
            let x = common::unwrap_x(prev, oracle.x_centroid(), box_length);
            oracle_x.push(x);
            prev = Some(x);
        }
    }

    let mut final_diff = 0.0f64;
    for (ours, theirs) in run.snapshots[1].amplitudes.iter().zip(&oracle.amplitudes) {
        for (a, b) in ours.iter().zip(theirs) {
            final_diff = final_diff.max((a - b).norm());
        }
    }
    criterion.check(
        final_diff <= 1e-10,
        format!("final per-mode amplitude difference {final_diff:.3e} > 1e-10 after {n_steps} steps"),
    );

    assert_eq!(run.series.x_centroid.len(), oracle_x.len());
    let mut x_diff = 0.0f64;
    for (a, b) in run.series.x_centroid.iter().zip(&oracle_x) {
        x_diff = x_diff.max((a - b).abs());
    }
    criterion.check(
        x_diff <= 1e-8,
        format!("x-centroid series difference {x_diff:.3e} > 1e-8"),
    );
    criterion.finish();
}

#[test]
fn criterion_5_dispersion_dynamics_consistency() {
    let mut criterion = Criterion::new(
        "criterion 5: mode eigenvalues on the dispersion surface; transport at dE/dp",
        60.0,
    );
    let pr = params(1.0, 1.0, 0.1);
    let grid = MomentumGrid1D::new(4096, 256.0).unwrap();
    let gammas = build_gamma_set(Representation::Dirac);
    let cache = build_propagator_cache(&pr, &grid, &gammas, SignConvention::default()).unwrap();

    let mut worst_eig = 0.0f64;
    let mut worst_action = 0.0f64;
    for (k, &p) in grid.momenta().iter().enumerate() {
        let (e, _) = energy_branches(&pr, p.abs());
        let lam = cache.eigenvalues()[k];
        for (i, expected) in [e, e, -e, -e].iter().enumerate() {
            worst_eig = worst_eig.max((lam[i] - expected).abs() / (1.0 + e));
        }
        let h = build_mode_hamiltonian(&pr, p, &gammas, SignConvention::default());
        let v = &cache.eigenvectors()[k];
        for col in 0..4 {
            let mut column = [C64::new(0.0, 0.0); 4];
            for r in 0..4 {
                column[r] = v.entries[r][col];
            }
            let hv = h.mul_vec(&column);
            let mut action = 0.0f64;
            for r in 0..4 {
                action = action.max((hv[r] - column[r] * lam[col]).norm());
            }
            worst_action = worst_action.max(action / (1.0 + e));
        }
    }
    criterion.check(
        worst_eig <= 1e-10,
        format!("worst relative eigenvalue error {worst_eig:.3e} > 1e-10"),
    );
    criterion.check(
        worst_action <= 1e-10,
        format!("worst relative eigen-residual {worst_action:.3e} > 1e-10"),
    );

    // transport: width = 0.1·p0
    let config = EvolutionConfig {
        params: pr,
        convention: SignConvention::default(),
        n_modes: 4096,
        box_length: 256.0,
        p0: 2.0,
        width: 0.2,
        spin: Sign::Plus,
        projection: Projection::PositiveBranch,
        dt: 0.01,
        n_steps: 1500,
        sample_stride: 50,
        snapshot_stride: 0,
    };
    let run = run_evolution(&config).unwrap();
    let series = &run.series;
    let measured = (series.x_centroid.last().unwrap() - series.x_centroid[0])
        / (series.times.last().unwrap() - series.times[0]);

    let state = init_gaussian_packet(
        &pr,
        &grid,
        config.p0,
        config.width,
        config.spin,
        config.projection,
        config.convention,
    )
    .unwrap();
    let weights: Vec<f64> = state.amplitudes().iter().map(|a| vdot(a, a).re).collect();
    let expected: f64 = grid
        .momenta()
        .iter()
        .zip(&weights)
        .map(|(&p, &w)| w * group_velocity(&pr, p.abs()).unwrap() * p.signum())
        .sum::<f64>()
        / weights.iter().sum::<f64>();
    let rel = ((measured - expected) / expected).abs();
    println!("    centroid velocity {measured:.8} vs envelope-weighted dE/dp {expected:.8}");
    criterion.check(
        rel <= 0.01,
        format!("centroid velocity {measured:.6} vs envelope-weighted dE/dp {expected:.6} (rel {rel:.3e} > 1%)"),
    );
    criterion.finish();
}

#[test]
fn criterion_6_series_resummation() {
    let mut criterion = Criterion::new(
        "criterion 6: series truncation error shrinks at the predicted geometric ratio",
        1.0,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e0);
    let mut worst_rel = 0.0f64;
    for _ in 0..20 {
        let m = rng.gen_range(0.5..2.0);
        let alpha = rng.gen_range(0.25..1.5);
        let ell = rng.gen_range(0.05..0.2);
        let pr = params(m, alpha, ell);
        let target_ratio: f64 = rng.gen_range(0.08..0.85);
        let p = (target_ratio * m / pr.beta()).sqrt();
        let pvec = MomentumVector::new([0.0, 0.0, p]).unwrap();
        let (e, _) = energy_branches(&pr, p);
        let phi = solve_phi(&pr, p, Sign::Plus, Sign::Plus, SignConvention::default()).unwrap();
        let closed = chi_from_phi(&pr, &pvec, e, &phi, SignConvention::default()).unwrap();
        let closed_norm =
            (closed[0].norm_sqr() + closed[1].norm_sqr()).sqrt();

        let error_at = |k: usize| -> f64 {
            let partial =
                chi_series_partial(&pr, &pvec, e, &phi, k, SignConvention::default()).unwrap();
            ((partial[0] - closed[0]).norm_sqr() + (partial[1] - closed[1]).norm_sqr()).sqrt()
        };
        let mut measured = Vec::new();
        for k in 2..14 {
            let (e0, e1) = (error_at(k), error_at(k + 1));
            if e0 > 1e-10 * closed_norm && e1 > 1e-12 * closed_norm {
                measured.push(e1 / e0);
            }
        }
        assert!(measured.len() >= 3, "too few usable truncation errors");
        let mean = measured.iter().sum::<f64>() / measured.len() as f64;
        let rel = ((mean - target_ratio) / target_ratio).abs();
        worst_rel = worst_rel.max(rel);
        criterion.check(
            rel <= 0.05,
            format!("measured ratio {mean:.4} vs |κ|p²/m = {target_ratio:.4} (rel {rel:.3e})"),
        );
    }
    println!("    worst ratio deviation: {worst_rel:.3e}");
    criterion.finish();
}

#[test]
fn criterion_7_parity_breaking() {
    let mut criterion = Criterion::new(
        "criterion 7: parity residual zero at α = 0, bounded below for α > 0",
        5.0,
    );
    let gammas = build_gamma_set(Representation::Dirac);
    let sweep = [0.25, 0.5, 1.0, 2.0, 4.0];

    let free = params(1.0, 0.0, 0.1);
    for &p in &sweep {
        let pvec = MomentumVector::new([0.0, 0.0, p]).unwrap();
        for spin in [Sign::Plus, Sign::Minus] {
            let sol =
                positive_energy_solution(&free, &pvec, spin, SignConvention::default()).unwrap();
            let (r, _) = parity_residual_and_bound(&sol, &free, &gammas).unwrap();
            criterion.check(
                r <= 1e-10,
                format!("α=0, p={p}, spin {spin}: parity residual {r:.3e} > 1e-10"),
            );
        }
    }

    for &alpha in &[0.5, 1.0, 2.0] {
        let pr = params(1.0, alpha, 0.1);
        for &p in &sweep {
            let pvec = MomentumVector::new([0.0, 0.0, p]).unwrap();
            for spin in [Sign::Plus, Sign::Minus] {
                let sol =
                    positive_energy_solution(&pr, &pvec, spin, SignConvention::default()).unwrap();
                let (r, bound) = parity_residual_and_bound(&sol, &pr, &gammas).unwrap();
                criterion.check(
                    bound > 0.0 && r >= 0.9 * bound,
                    format!("α={alpha}, p={p}, spin {spin}: residual {r:.3e} below 0.9·bound {bound:.3e}"),
                );
            }
        }
    }
    criterion.finish();
}

#[test]
fn criterion_8_unitarity_and_conservation() {
    let mut criterion = Criterion::new(
        "criterion 8: norm and ⟨H⟩ drift over 10⁴ exact-propagator steps",
        120.0,
    );
    let config = EvolutionConfig {
        params: params(1.0, 1.0, 0.1),
        convention: SignConvention::default(),
        n_modes: 1024,
        box_length: 64.0,
        p0: 2.0,
        width: 0.2,
        spin: Sign::Plus,
        projection: Projection::None,
        dt: 0.002,
        n_steps: 10_000,
        sample_stride: 500,
        snapshot_stride: 0,
    };
    let run = run_evolution(&config).unwrap();
    let series = &run.series;
    let norm_drift = series
        .norm
        .iter()
        .map(|n| (n - series.norm[0]).abs())
        .fold(0.0f64, f64::max);
    let energy_drift = series
        .energy
        .iter()
        .map(|e| ((e - series.energy[0]) / series.energy[0]).abs())
        .fold(0.0f64, f64::max);
    criterion.check(
        norm_drift <= 1e-9,
        format!("norm drift {norm_drift:.3e} > 1e-9"),
    );
    criterion.check(
        energy_drift <= 1e-10,
        format!("relative energy drift {energy_drift:.3e} > 1e-10"),
    );
    criterion.finish();
}

#[test]
fn criterion_9_zitterbewegung_frequency() {
    let mut criterion = Criterion::new(
        "criterion 9: unprojected packet oscillates at 2E(p0), cross-validated at α = 0",
        60.0,
    );
    let (n_modes, box_length) = (2048usize, 256.0);
    let (p0, width) = (2.0, 0.05);
    let (dt, n_steps) = (0.02, 2048usize);

    let base = EvolutionConfig {
        params: params(1.0, 1.0, 0.1),
        convention: SignConvention::default(),
        n_modes,
        box_length,
        p0,
        width,
        spin: Sign::Plus,
        projection: Projection::None,
        dt,
        n_steps,
        sample_stride: 1,
        snapshot_stride: 0,
    };

    for alpha in [1.0, 0.0] {
        let config = EvolutionConfig {
            params: params(1.0, alpha, 0.1),
            ..base.clone()
        };
        let run = run_evolution(&config).unwrap();
        let expected = 2.0 * energy_branches(&config.params, p0).0;
        let measured =
            common::dominant_frequency(&run.series.times, &run.series.x_centroid, 1.0);
        let rel = ((measured - expected) / expected).abs();
        println!("    α={alpha}: dominant frequency {measured:.5}, 2E(p0) = {expected:.5}");
        criterion.check(
            rel <= 0.05,
            format!("α={alpha}: dominant frequency {measured:.4} vs 2E(p0) = {expected:.4} (rel {rel:.3e})"),
        );

        if alpha == 0.0 {
            let mut oracle = common::OracleEvolver::gaussian_packet(
                1.0, n_modes, box_length, p0, width, 1.0, false,
            );
            let mut prev = None;
            let mut oracle_x = Vec::with_capacity(n_steps + 1);
            let x0 = common::unwrap_x(prev, oracle.x_centroid(), box_length);
            oracle_x.push(x0);
            prev = Some(x0);
            for _ in 0..n_steps {
                oracle.step(dt);
                let x = common::unwrap_x(prev, oracle.x_centroid(), box_length);
                oracle_x.push(x);
                prev = Some(x);
            }
            let mut x_diff = 0.0f64;
            for (a, b) in run.series.x_centroid.iter().zip(&oracle_x) {
                x_diff = x_diff.max((a - b).abs());
            }
            criterion.check(
                x_diff <= 1e-8,
                format!("α=0 x-centroid vs oracle evolver differs by {x_diff:.3e} > 1e-8"),
            );
        }
    }
    criterion.finish();
}
