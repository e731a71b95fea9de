use clap::ValueEnum;
use dirac_sidharth::algebra::{
    apply_similarity, build_gamma_set, clifford_residual, dirac_weyl_transform,
    gamma5_product_residual, hermiticity_pattern_residual, parity_gamma5_residual, pauli, CMat4,
    GammaSet, Representation,
};

use crate::report::VerificationReport;
use crate::{emit, CliError, Format, GlobalOpts};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum CorruptTarget {
    Gamma0,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma5,
}

fn corrupt_set(set: &mut GammaSet, target: CorruptTarget) {
    let slot = match target {
        CorruptTarget::Gamma0 => &mut set.gamma0,
        CorruptTarget::Gamma1 => &mut set.gamma1,
        CorruptTarget::Gamma2 => &mut set.gamma2,
        CorruptTarget::Gamma3 => &mut set.gamma3,
        CorruptTarget::Gamma5 => &mut set.gamma5,
    };
    *slot = CMat4::zeros();
}

/// γʲ block form [[0, σʲ], [−σʲ, 0]] assembled entrywise.
fn block_form(j: usize) -> CMat4 {
    let s = pauli(j).expect("index in range");
    let mut m = CMat4::zeros();
    for r in 0..2 {
        for c in 0..2 {
            m.entries[r][c + 2] = s.entries[r][c];
            m.entries[r + 2][c] = -s.entries[r][c];
        }
    }
    m
}

pub fn verify(global: &GlobalOpts, corrupt: Option<CorruptTarget>) -> Result<bool, CliError> {
    let tol = 1e-12 * global.tolerance_scale;
    let mut report = VerificationReport::new();

    let t = dirac_weyl_transform();
    report.push_max("transform_unitarity", t.unitarity_residual(), tol);
    report.push_max(
        "transform_involution",
        (t * t).max_abs_diff(&CMat4::identity()),
        tol,
    );

    let mut sets = Vec::new();
    for rep in [Representation::Dirac, Representation::Weyl] {
        let mut set = build_gamma_set(rep);
        if let Some(target) = corrupt {
            corrupt_set(&mut set, target);
        }
        report.push_max(format!("{rep}_clifford"), clifford_residual(&set), tol);
        report.push_max(
            format!("{rep}_gamma5_product"),
            gamma5_product_residual(&set),
            tol,
        );
        report.push_max(
            format!("{rep}_hermiticity_pattern"),
            hermiticity_pattern_residual(&set),
            tol,
        );
        report.push_max(
            format!("{rep}_parity_anticommutation"),
            parity_gamma5_residual(&set),
            tol,
        );
        sets.push(set);
    }

    // the Dirac γʲ are block matrices [[0, σʲ], [−σʲ, 0]]
    let mut block_residual = 0.0f64;
    for j in 1..4 {
        block_residual = block_residual.max(sets[0].gamma(j).max_abs_diff(&block_form(j)));
    }
    report.push_max("dirac_block_form", block_residual, tol);

    // the stored Weyl set is the similarity image of the Dirac set
    let image = apply_similarity(&sets[0], &t)?;
    let mut weyl_residual = image.gamma5.max_abs_diff(&sets[1].gamma5);
    for mu in 0..4 {
        weyl_residual = weyl_residual.max(image.gamma(mu).max_abs_diff(sets[1].gamma(mu)));
    }
    report.push_max("weyl_similarity_consistency", weyl_residual, tol);

    let report = report.finalize();
    match global.format {
        Format::Csv => emit(global, "gamma_verify.csv", &report.to_csv())?,
        Format::Json => emit(global, "gamma_verify.json", &report.to_json())?,
    }
    Ok(report.all_pass())
}
