use std::path::{Path, PathBuf};

use dirac_sidharth::evolution::{run_evolution, MomentumGrid1D};

use crate::config::parse_run_config;
use crate::{CliError, GlobalOpts};

pub fn run(global: &GlobalOpts, config_path: &Path) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(config_path)?;
    let config = parse_run_config(&text).map_err(CliError::Config)?;
    let result = run_evolution(&config)?;

    let dir: PathBuf = global.output_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;

    let series = &result.series;
    let mut out = String::from("t,norm,x,p,energy\n");
    for i in 0..series.len() {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            series.times[i], series.norm[i], series.x_centroid[i], series.p_centroid[i],
            series.energy[i]
        ));
    }
    std::fs::write(dir.join("observables.csv"), out)?;

    let grid = MomentumGrid1D::new(config.n_modes, config.box_length)
        .expect("config already validated");
    let n = config.n_modes as i64;
    for snapshot in &result.snapshots {
        let mut out = String::from("k,p_k,re0,im0,re1,im1,re2,im2,re3,im3\n");
        for (j, mode) in snapshot.amplitudes.iter().enumerate() {
            let k = if (j as i64) < n / 2 { j as i64 } else { j as i64 - n };
            out.push_str(&format!("{k},{:.16e}", grid.momenta()[j]));
            for c in mode {
                out.push_str(&format!(",{:.16e},{:.16e}", c.re, c.im));
            }
            out.push('\n');
        }
        std::fs::write(dir.join(format!("snapshot_{}.csv", snapshot.time)), out)?;
    }
    Ok(true)
}
