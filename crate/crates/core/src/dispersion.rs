//! The Snyder-modified energy-momentum relation and the physical length
//! scales that motivate it.
//!
//! In natural units (ħ = c = 1) the relation reads
//! E² = p² + m² + α·ℓ²·p⁴, and the correction enters every first-order
//! expression only through the coupling β = √α·ℓ.

use crate::{Error, Result};

/// Physical parameters of the model in natural units.
///
/// `m` and `alpha` may be zero (massless particle, vanishing correction);
/// `ell` must be positive. α and ℓ are stored separately even though the
/// equation terms depend only on β = √α·ℓ, because the Snyder energy scale
/// needs them separately.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    mass: f64,
    alpha: f64,
    ell: f64,
}

impl ModelParams {
    pub fn new(mass: f64, alpha: f64, ell: f64) -> Result<Self> {
        if !mass.is_finite() || mass < 0.0 {
            return Err(Error::Validation(format!("mass must be ≥ 0, got {mass}")));
        }
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::Validation(format!("alpha must be ≥ 0, got {alpha}")));
        }
        if !ell.is_finite() || ell <= 0.0 {
            return Err(Error::Validation(format!("ell must be > 0, got {ell}")));
        }
        Ok(Self { mass, alpha, ell })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Correction coupling β = √α·ℓ.
    pub fn beta(&self) -> f64 {
        self.alpha.sqrt() * self.ell
    }
}

/// The quoted length scales, in centimetres, plus the constants they come
/// from. Data for documentation and the hierarchy check, not physics input.
#[derive(Clone, Copy, Debug)]
pub struct ScaleCatalog {
    pub ell_planck_cm: f64,
    pub ell_lhc_cm: f64,
    /// Classical electron radius e²/(m_e c²); representative value, the
    /// defining relation is a proportionality.
    pub ell_compton_cm: f64,
    pub grav_constant_cgs: f64,
    pub electron_charge_esu: f64,
    pub electron_mass_g: f64,
}

impl Default for ScaleCatalog {
    fn default() -> Self {
        Self {
            ell_planck_cm: 1.6e-33,
            ell_lhc_cm: 2e-18,
            ell_compton_cm: 1e-12,
            grav_constant_cgs: 6.674e-8,
            electron_charge_esu: 4.80320425e-10,
            electron_mass_g: 9.1093837015e-28,
        }
    }
}

/// Energy scale ε = ħc/(√α·ℓ) associated with the fundamental length.
pub fn snyder_energy(params: &ModelParams) -> Result<f64> {
    if params.alpha == 0.0 {
        return Err(Error::Domain(
            "no Snyder scale at alpha = 0; correction term vanishes".into(),
        ));
    }
    Ok(1.0 / (params.alpha.sqrt() * params.ell))
}

/// E²(p) = p² + m² + α·ℓ²·p⁴ for p ≥ 0.
pub fn energy_squared(params: &ModelParams, p: f64) -> f64 {
    let p2 = p * p;
    p2 + params.mass * params.mass + params.alpha * params.ell * params.ell * p2 * p2
}

/// Positive and negative energy branches (E₊, −E₊).
pub fn energy_branches(params: &ModelParams, p: f64) -> (f64, f64) {
    let e = energy_squared(params, p).sqrt();
    (e, -e)
}

/// Group velocity dE₊/dp = (p + 2αℓ²p³)/E₊.
///
/// May exceed 1 at large p; that is a genuine feature of the modified
/// relation and is reported, not clamped.
pub fn group_velocity(params: &ModelParams, p: f64) -> Result<f64> {
    let (e_plus, _) = energy_branches(params, p);
    if e_plus == 0.0 {
        return Err(Error::Domain(
            "group velocity undefined at E = 0 (massless particle at rest)".into(),
        ));
    }
    Ok((p + 2.0 * params.alpha * params.ell * params.ell * p * p * p) / e_plus)
}

/// True iff ℓ_p < ℓ_LHC < ℓ_c strictly.
pub fn scale_hierarchy_holds(catalog: &ScaleCatalog) -> Result<bool> {
    for (name, value) in [
        ("ell_planck_cm", catalog.ell_planck_cm),
        ("ell_lhc_cm", catalog.ell_lhc_cm),
        ("ell_compton_cm", catalog.ell_compton_cm),
    ] {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Validation(format!("{name} must be > 0, got {value}")));
        }
    }
    Ok(catalog.ell_planck_cm < catalog.ell_lhc_cm && catalog.ell_lhc_cm < catalog.ell_compton_cm)
}
