use clap::Args;
use dirac_sidharth::dispersion::{energy_branches, energy_squared, group_velocity, ModelParams};
use dirac_sidharth::Error;

use super::UnitsArg;
use crate::{emit, CliError, GlobalOpts};

#[derive(Args)]
pub struct TableArgs {
    /// Mass (natural units, or m_e under --units electron-cgs)
    #[arg(long)]
    pub m: f64,
    /// Dimensionless correction strength α ≥ 0
    #[arg(long)]
    pub alpha: f64,
    /// Fundamental length ℓ > 0 (natural units, or cm under electron-cgs)
    #[arg(long)]
    pub ell: f64,
    /// Smallest momentum magnitude of the grid (≥ 0)
    #[arg(long)]
    pub p_min: f64,
    /// Largest momentum magnitude of the grid
    #[arg(long)]
    pub p_max: f64,
    /// Number of grid rows (≥ 1)
    #[arg(long)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = UnitsArg::Natural)]
    pub units: UnitsArg,
}

pub fn table(global: &GlobalOpts, args: &TableArgs) -> Result<bool, CliError> {
    if args.count == 0 {
        return Err(Error::Usage("count must be ≥ 1".into()).into());
    }
    if !(args.p_min.is_finite() && args.p_max.is_finite()) || args.p_min < 0.0 {
        return Err(Error::Usage("momentum grid bounds must be finite and ≥ 0".into()).into());
    }
    if args.p_min > args.p_max {
        return Err(Error::Usage(format!(
            "p_min {} exceeds p_max {}",
            args.p_min, args.p_max
        ))
        .into());
    }
    let params = ModelParams::new(args.m, args.alpha, args.units.length_to_natural(args.ell))?;

    let mut out = String::from("p,E_plus,E_minus,v_group,E2\n");
    for i in 0..args.count {
        let p = if args.count == 1 {
            args.p_min
        } else {
            args.p_min + (args.p_max - args.p_min) * i as f64 / (args.count - 1) as f64
        };
        let (e_plus, e_minus) = energy_branches(&params, p);
        let v = group_velocity(&params, p)?;
        let e2 = energy_squared(&params, p);
        out.push_str(&format!(
            "{p:.16e},{e_plus:.16e},{e_minus:.16e},{v:.16e},{e2:.16e}\n"
        ));
    }
    emit(global, "dispersion.csv", &out)?;
    Ok(true)
}
