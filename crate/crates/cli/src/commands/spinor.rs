use clap::Args;
use dirac_sidharth::algebra::{
    build_gamma_set, dirac_weyl_transform, tensor2, vdot, vnorm, vsub, CMat2, Representation,
};
use dirac_sidharth::dispersion::{energy_branches, energy_squared, ModelParams};
use dirac_sidharth::plane_wave::{
    all_solutions, chi_from_phi, chi_series_partial, effective_hamiltonian_h, helicity_spinor,
    kg_sidharth_symbol, momentum_space_hamiltonian, parity_residual_and_bound,
    positive_energy_solution, residual, solve_phi, system_residual, MomentumVector,
    PlaneWaveSolution, Sign, SignConvention, TwoSpinorPair,
};
use dirac_sidharth::{C64, Error};

use super::{ConventionArg, SignArg, UnitsArg};
use crate::report::VerificationReport;
use crate::{emit, CliError, Format, GlobalOpts};

#[derive(Args)]
pub struct BuildArgs {
    /// Mass (natural units, or m_e under --units electron-cgs)
    #[arg(long)]
    pub m: f64,
    /// Dimensionless correction strength α ≥ 0
    #[arg(long)]
    pub alpha: f64,
    /// Fundamental length ℓ > 0 (natural units, or cm under electron-cgs)
    #[arg(long)]
    pub ell: f64,
    /// Momentum: one value (along ẑ) or three comma-separated components
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    /// Requested helicity eigenvalue
    #[arg(long, value_enum)]
    pub spin: SignArg,
    /// Energy branch
    #[arg(long, value_enum, default_value = "plus")]
    pub branch: SignArg,
    #[arg(long, value_enum, default_value = "dirac")]
    pub representation: RepresentationArg,
    #[arg(long, value_enum, default_value = "positive")]
    pub sign_convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = UnitsArg::Natural)]
    pub units: UnitsArg,
}

#[derive(Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
pub enum RepresentationArg {
    Dirac,
    Weyl,
}

impl From<RepresentationArg> for Representation {
    fn from(r: RepresentationArg) -> Representation {
        match r {
            RepresentationArg::Dirac => Representation::Dirac,
            RepresentationArg::Weyl => Representation::Weyl,
        }
    }
}

fn momentum_from_arg(p: &str) -> Result<MomentumVector, Error> {
    let parts: Vec<f64> = p
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Error::Usage(format!("--p: {e}")))?;
    let z_axis = [0.0, 0.0, 1.0];
    match parts.as_slice() {
        [pz] => MomentumVector::with_axis([0.0, 0.0, *pz], z_axis),
        [px, py, pz] => MomentumVector::with_axis([*px, *py, *pz], z_axis),
        _ => Err(Error::Usage(
            "--p takes one value (along ẑ) or three comma-separated components".into(),
        )),
    }
}

pub fn build(global: &GlobalOpts, args: &BuildArgs) -> Result<bool, CliError> {
    let params = ModelParams::new(args.m, args.alpha, args.units.length_to_natural(args.ell))?;
    let pvec = momentum_from_arg(&args.p)?;
    let convention: SignConvention = args.sign_convention.into();
    let representation: Representation = args.representation.into();

    let u = helicity_spinor(&pvec.direction(), args.spin.into())?;
    let phi = solve_phi(
        &params,
        pvec.magnitude(),
        u.epsilon_spin,
        args.branch.into(),
        convention,
    )?;
    let mut components = tensor2(&phi, &u.u);
    if representation == Representation::Weyl {
        components = dirac_weyl_transform().mul_vec(&components);
    }
    let sol = PlaneWaveSolution {
        components,
        energy: energy_branches(&params, pvec.magnitude()).0,
        branch: args.branch.into(),
        spin: u.epsilon_spin,
        representation,
        convention,
        momentum: pvec,
    };
    let gammas = build_gamma_set(representation);
    let res = residual(&sol, &params, &gammas)?;
    let tolerance = 1e-10 * global.tolerance_scale;

    let document = serde_json::json!({
        "components": sol.components.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>(),
        "E": sol.energy,
        "branch": sol.branch.to_string(),
        "spin": sol.spin.to_string(),
        "representation": sol.representation.to_string(),
        "sign_convention": sol.convention.to_string(),
        "p": pvec.components(),
        "norm": sol.norm(),
        "residual": res,
        "residual_tolerance": tolerance,
    });
    emit(
        global,
        "spinor.json",
        &format!("{}\n", serde_json::to_string_pretty(&document).expect("json")),
    )?;
    Ok(res <= tolerance)
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "positive")]
    pub sign_convention: ConventionArg,
}

/// Invariant suite over a fixed parameter grid; residuals are aggregated as
/// the worst case per check.
pub fn verify(global: &GlobalOpts, args: &VerifyArgs) -> Result<bool, CliError> {
    let convention: SignConvention = args.sign_convention.into();
    let scale = global.tolerance_scale;
    let gammas = build_gamma_set(Representation::Dirac);
    let weyl_gammas = build_gamma_set(Representation::Weyl);
    let transform = dirac_weyl_transform();

    let masses = [0.5, 1.0, 2.0];
    let alphas = [0.0, 0.5, 1.5];
    let ells = [0.05, 0.15];
    let momenta = [0.0, 0.5, 2.0, 4.0];
    let inv_sqrt3 = 1.0 / 3.0f64.sqrt();
    let directions = [
        [0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0],
        [inv_sqrt3, inv_sqrt3, inv_sqrt3],
        [1e-5, -1e-5, -(1.0f64 - 2e-10).sqrt()],
    ];

    let mut h_squared = 0.0f64;
    let mut norm_dev = 0.0f64;
    let mut momentum_residual = 0.0f64;
    let mut gram_dev = 0.0f64;
    let mut eigen_action = 0.0f64;
    let mut weyl_consistency = 0.0f64;
    let mut system_res = 0.0f64;
    let mut series_dev = 0.0f64;
    let mut parity_free = 0.0f64;
    let mut parity_margin = f64::INFINITY;
    let mut kgs = 0.0f64;

    for &m in &masses {
        for &alpha in &alphas {
            for &ell in &ells {
                let params = ModelParams::new(m, alpha, ell).expect("valid grid point");
                for &p in &momenta {
                    for spin in [Sign::Plus, Sign::Minus] {
                        let h = effective_hamiltonian_h(&params, p, spin, convention);
                        let target = CMat2::identity() * energy_squared(&params, p);
                        h_squared = h_squared.max((h * h).max_abs_diff(&target));
                    }
                    let (e, _) = energy_branches(&params, p);
                    kgs = kgs.max(kg_sidharth_symbol(&params, p, e).abs() / (e * e));

                    for dir in &directions {
                        let pvec =
                            MomentumVector::with_axis([p * dir[0], p * dir[1], p * dir[2]], *dir)
                                .expect("unit directions");
                        for spin in [Sign::Plus, Sign::Minus] {
                            let sol = positive_energy_solution(&params, &pvec, spin, convention)?;
                            norm_dev = norm_dev.max((sol.norm() - 1.0).abs());
                            momentum_residual =
                                momentum_residual.max(residual(&sol, &params, &gammas)?);
                        }

                        let sols = all_solutions(&params, &pvec, &gammas, convention)?;
                        for a in 0..4 {
                            for b in 0..4 {
                                let g = vdot(&sols[a].components, &sols[b].components);
                                let expected = if a == b { 1.0 } else { 0.0 };
                                gram_dev = gram_dev.max((g - C64::new(expected, 0.0)).norm());
                            }
                        }
                        let h4 = momentum_space_hamiltonian(
                            &params,
                            &pvec,
                            Representation::Dirac,
                            convention,
                        );
                        for sol in &sols {
                            let hv = h4.mul_vec(&sol.components);
                            let lam = sol.branch.value() * sol.energy;
                            let mut worst = 0.0f64;
                            for r in 0..4 {
                                worst = worst.max((hv[r] - sol.components[r] * lam).norm());
                            }
                            eigen_action = eigen_action.max(worst / (1.0 + sol.energy));
                        }
                        let weyl_sols = all_solutions(&params, &pvec, &weyl_gammas, convention)?;
                        for (d, w) in sols.iter().zip(&weyl_sols) {
                            weyl_consistency = weyl_consistency.max(vnorm(&vsub(
                                &transform.mul_vec(&d.components),
                                &w.components,
                            )));
                        }

                        // χ–φ system on an arbitrary right-handed spinor
                        let phi = [C64::new(0.6, -0.3), C64::new(0.1, 0.7)];
                        let chi = chi_from_phi(&params, &pvec, e, &phi, convention)?;
                        let (r1, r2) = system_residual(
                            &TwoSpinorPair { chi, phi },
                            &params,
                            &pvec,
                            e,
                            convention,
                        );
                        system_res = system_res.max(r1).max(r2);

                        if p > 0.0 {
                            let sol = positive_energy_solution(
                                &params,
                                &pvec,
                                Sign::Plus,
                                convention,
                            )?;
                            let (r, bound) =
                                parity_residual_and_bound(&sol, &params, &gammas)?;
                            if alpha == 0.0 {
                                parity_free = parity_free.max(r);
                            } else {
                                parity_margin = parity_margin.min(r - 0.9 * bound);
                            }
                        }
                    }

                    // series ratio inside the convergence domain
                    let ratio = params.beta() * p * p / m;
                    if alpha > 0.0 && p > 0.0 && (0.05..0.9).contains(&ratio) {
                        let pvec = MomentumVector::new([0.0, 0.0, p]).expect("nonzero");
                        let phi = solve_phi(&params, p, Sign::Plus, Sign::Plus, convention)?;
                        let closed = chi_from_phi(&params, &pvec, e, &phi, convention)?;
                        let err = |k: usize| -> Result<f64, CliError> {
                            let partial =
                                chi_series_partial(&params, &pvec, e, &phi, k, convention)?;
                            Ok(vnorm(&vsub(&partial, &closed)))
                        };
                        let (e4, e5) = (err(4)?, err(5)?);
                        if e4 > 1e-10 {
                            series_dev = series_dev.max(((e5 / e4) - ratio).abs() / ratio);
                        }
                    }
                }
            }
        }
    }

    let mut report = VerificationReport::new();
    report.push_max("h_squared_identity", h_squared, 1e-12 * scale);
    report.push_max("solution_norm", norm_dev, 1e-12 * scale);
    report.push_max("momentum_space_residual", momentum_residual, 1e-10 * scale);
    report.push_max("mode_basis_orthonormality", gram_dev, 1e-12 * scale);
    report.push_max("mode_basis_eigen_action", eigen_action, 1e-10 * scale);
    report.push_max("weyl_dirac_transform", weyl_consistency, 1e-12 * scale);
    report.push_max("chi_phi_system_residual", system_res, 1e-10 * scale);
    report.push_max("series_ratio_deviation", series_dev, 5e-2 * scale);
    report.push_max("parity_residual_alpha0", parity_free, 1e-10 * scale);
    report.push_min("parity_bound_margin", parity_margin, 0.0);
    report.push_max("kgs_symbol_on_shell", kgs, 1e-12 * scale);

    let report = report.finalize();
    match global.format {
        Format::Csv => emit(global, "spinor_verify.csv", &report.to_csv())?,
        Format::Json => emit(global, "spinor_verify.json", &report.to_json())?,
    }
    Ok(report.all_pass())
}
