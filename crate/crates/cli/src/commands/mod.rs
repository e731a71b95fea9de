pub mod dispersion;
pub mod evolve;
pub mod gamma;
pub mod spinor;

use clap::ValueEnum;
use dirac_sidharth::plane_wave::{Sign, SignConvention};

/// Reduced electron Compton wavelength ħ/(m_e c) in centimetres, the length
/// unit of the electron-cgs preset.
pub const ELECTRON_COMPTON_REDUCED_CM: f64 = 3.8615926796e-11;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    /// ħ = c = 1; all inputs already dimensionless-consistent
    Natural,
    /// masses in m_e, momenta in m_e·c, lengths in centimetres
    ElectronCgs,
}

impl UnitsArg {
    /// Convert an input length to natural units.
    pub fn length_to_natural(self, ell: f64) -> f64 {
        match self {
            UnitsArg::Natural => ell,
            UnitsArg::ElectronCgs => ell / ELECTRON_COMPTON_REDUCED_CM,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Positive,
    Negative,
}

impl From<ConventionArg> for SignConvention {
    fn from(c: ConventionArg) -> SignConvention {
        match c {
            ConventionArg::Positive => SignConvention::Positive,
            ConventionArg::Negative => SignConvention::Negative,
        }
    }
}
