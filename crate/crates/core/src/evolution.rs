//! Exact spectral time evolution of 1D spinor wavepackets.
//!
//! The equation is diagonal in momentum, so a periodic box with a uniform
//! momentum grid admits exact per-mode propagation: each mode evolves under
//! the 4×4 Hermitian mode Hamiltonian through its eigendecomposition,
//! ψ_k ← V_k·diag(e^{−iλdt})·V_k†·ψ_k. There is no splitting error and no
//! stability bound on dt; the p⁴ correction term would make finite
//! differences stiff but costs nothing here.
//!
//! Per-mode work is embarrassingly parallel; propagation parallelises across
//! modes and every observable reduction uses pairwise summation with a fixed
//! order, so single-threaded and parallel execution produce bit-identical
//! results.

use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::algebra::{build_gamma_set, tensor2, vdot, CMat4, GammaSet, Representation};
use crate::dispersion::{energy_branches, ModelParams};
use crate::numeric::{gaussian_tail, pairwise_sum, pairwise_sum_c64};
use crate::plane_wave::{
    helicity_spinor, momentum_space_hamiltonian, phi_eigenvector, MomentumVector, Sign,
    SignConvention,
};
use crate::{C64, Error, Result};

const X_AXIS: [f64; 3] = [1.0, 0.0, 0.0];

/// Uniform momentum grid of a periodic box: p_k = 2πk/L for k in the
/// symmetric integer range with a single Nyquist mode, stored in FFT index
/// order (k = j for j < N/2, k = j − N otherwise).
#[derive(Clone, Debug)]
pub struct MomentumGrid1D {
    n_modes: usize,
    box_length: f64,
    momenta: Vec<f64>,
}

impl MomentumGrid1D {
    pub fn new(n_modes: usize, box_length: f64) -> Result<Self> {
        if n_modes < 8 || !n_modes.is_power_of_two() {
            return Err(Error::Validation(format!(
                "n_modes must be a power of two ≥ 8, got {n_modes}"
            )));
        }
        if !box_length.is_finite() || box_length <= 0.0 {
            return Err(Error::Validation(format!(
                "box_length must be > 0, got {box_length}"
            )));
        }
        let dp = 2.0 * std::f64::consts::PI / box_length;
        let n = n_modes as i64;
        let momenta = (0..n)
            .map(|j| {
                let k = if j < n / 2 { j } else { j - n };
                k as f64 * dp
            })
            .collect();
        Ok(Self {
            n_modes,
            box_length,
            momenta,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn box_length(&self) -> f64 {
        self.box_length
    }

    pub fn momenta(&self) -> &[f64] {
        &self.momenta
    }

    /// Momentum spacing 2π/L.
    pub fn dp(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.box_length
    }

    /// Covered momentum interval [−π·N/L, (N/2 − 1)·2π/L].
    pub fn coverage(&self) -> (f64, f64) {
        let dp = self.dp();
        let half = (self.n_modes / 2) as f64;
        (-half * dp, (half - 1.0) * dp)
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.n_modes == other.n_modes && self.box_length == other.box_length
    }
}

/// Momentum-space spinor wavepacket: one 4-component amplitude per mode.
/// The Dirac representation is used throughout the evolution layer.
#[derive(Clone, Debug)]
pub struct SpinorField {
    amplitudes: Vec<[C64; 4]>,
    grid: MomentumGrid1D,
    time: f64,
}

impl SpinorField {
    pub fn amplitudes(&self) -> &[[C64; 4]] {
        &self.amplitudes
    }

    pub fn grid(&self) -> &MomentumGrid1D {
        &self.grid
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Total norm Σ_k ‖ψ_k‖².
    pub fn norm(&self) -> f64 {
        let terms: Vec<f64> = self
            .amplitudes
            .iter()
            .map(|a| vdot(a, a).re)
            .collect();
        pairwise_sum(&terms)
    }
}

/// Per-mode eigendecompositions of the mode Hamiltonian, used for exact
/// time stepping. Eigenvalues are ordered (+E, +E, −E, −E).
#[derive(Clone, Debug)]
pub struct PropagatorCache {
    grid: MomentumGrid1D,
    eigenvectors: Vec<CMat4>,
    eigenvalues: Vec<[f64; 4]>,
}

impl PropagatorCache {
    pub fn grid(&self) -> &MomentumGrid1D {
        &self.grid
    }

    pub fn eigenvectors(&self) -> &[CMat4] {
        &self.eigenvectors
    }

    pub fn eigenvalues(&self) -> &[[f64; 4]] {
        &self.eigenvalues
    }
}

/// 4×4 mode Hamiltonian for signed momentum p along x¹:
/// H(p) = p·σ¹⊗σ¹ + m·σ³⊗σ⁰ − κp²·σ²⊗σ⁰. The σ¹⊗σ¹ term is odd in p while
/// the correction term is even — the parity asymmetry of the equation.
pub fn build_mode_hamiltonian(
    params: &ModelParams,
    p: f64,
    gammas: &GammaSet,
    convention: SignConvention,
) -> CMat4 {
    let pvec = MomentumVector::along(X_AXIS, p).expect("fixed unit axis");
    momentum_space_hamiltonian(params, &pvec, gammas.representation, convention)
}

/// Diagonalize every mode Hamiltonian analytically: the eigenvectors are
/// tensor products φ_±⊗u_ς with u_ς the σ¹ eigenvectors, which fixes the
/// phase and rotation freedom of the doubly degenerate eigenspaces
/// deterministically. Each decomposition is verified to reconstruct H.
pub fn build_propagator_cache(
    params: &ModelParams,
    grid: &MomentumGrid1D,
    gammas: &GammaSet,
    convention: SignConvention,
) -> Result<PropagatorCache> {
    let t = crate::algebra::dirac_weyl_transform();
    let u_plus = helicity_spinor(&X_AXIS, Sign::Plus)?.u;
    let u_minus = helicity_spinor(&X_AXIS, Sign::Minus)?.u;
    let kappa = convention.coupling(params.beta());
    let m = params.mass();

    let modes: Vec<(CMat4, [f64; 4])> = grid
        .momenta()
        .par_iter()
        .map(|&p| {
            let e = energy_branches(params, p.abs()).0;
            if e == 0.0 {
                return (CMat4::identity(), [0.0; 4]);
            }
            let mut v = CMat4::zeros();
            for (col, (branch, sign, u)) in [
                (Sign::Plus, 1.0, &u_plus),
                (Sign::Plus, -1.0, &u_minus),
                (Sign::Minus, 1.0, &u_plus),
                (Sign::Minus, -1.0, &u_minus),
            ]
            .iter()
            .enumerate()
            {
                let phi = phi_eigenvector(sign * p, kappa * p * p, m, e, *branch);
                let column = tensor2(&phi, u);
                let column = if gammas.representation == Representation::Weyl {
                    t.mul_vec(&column)
                } else {
                    column
                };
                for r in 0..4 {
                    v.entries[r][col] = column[r];
                }
            }
            (v, [e, e, -e, -e])
        })
        .collect();

    for (k, (v, lam)) in modes.iter().enumerate() {
        let h = build_mode_hamiltonian(params, grid.momenta()[k], gammas, convention);
        let mut d = CMat4::zeros();
        for i in 0..4 {
            d.entries[i][i] = C64::new(lam[i], 0.0);
        }
        let recon = *v * d * v.adjoint();
        let res = recon.max_abs_diff(&h);
        if res > 1e-11 {
            return Err(Error::Numeric(format!(
                "eigendecomposition of mode {k} failed to reconstruct H (residual {res:.3e})"
            )));
        }
    }

    let (eigenvectors, eigenvalues) = modes.into_iter().unzip();
    Ok(PropagatorCache {
        grid: grid.clone(),
        eigenvectors,
        eigenvalues,
    })
}

fn step_mode(v: &CMat4, lam: &[f64; 4], dt: f64, psi: &mut [C64; 4]) {
    let mut a = [C64::new(0.0, 0.0); 4];
    for i in 0..4 {
        let mut acc = C64::new(0.0, 0.0);
        for r in 0..4 {
            acc += v.entries[r][i].conj() * psi[r];
        }
        a[i] = acc * C64::from_polar(1.0, -lam[i] * dt);
    }
    for r in 0..4 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..4 {
            acc += v.entries[r][i] * a[i];
        }
        psi[r] = acc;
    }
}

/// Advance a state by dt in place: ψ_k ← V_k·diag(e^{−iλdt})·V_k†·ψ_k.
pub fn propagate_in_place(state: &mut SpinorField, dt: f64, cache: &PropagatorCache) -> Result<()> {
    if !state.grid.compatible(&cache.grid) {
        return Err(Error::Usage(
            "state and propagator cache were built on different grids".into(),
        ));
    }
    let evecs = &cache.eigenvectors;
    let evals = &cache.eigenvalues;
    state
        .amplitudes
        .par_iter_mut()
        .enumerate()
        .for_each(|(k, psi)| step_mode(&evecs[k], &evals[k], dt, psi));
    state.time += dt;
    Ok(())
}

/// Advance a state by dt, returning the new state. Exactly unitary per mode
/// up to roundoff; composes additively in dt.
pub fn propagate(state: &SpinorField, dt: f64, cache: &PropagatorCache) -> Result<SpinorField> {
    let mut out = state.clone();
    propagate_in_place(&mut out, dt, cache)?;
    Ok(out)
}

/// Branch content of the initial packet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Every mode lies in the +E eigenspace of its mode Hamiltonian.
    PositiveBranch,
    /// Fixed rest-frame spinor per mode; superposes both branches.
    None,
}

impl std::fmt::Display for Projection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Projection::PositiveBranch => write!(f, "positive-branch"),
            Projection::None => write!(f, "none"),
        }
    }
}

/// Gaussian momentum envelope (std `width` in |amplitude|²) times a per-mode
/// spinor, normalized to total norm 1. The spin axis is x̂, matching the
/// propagation direction.
pub fn init_gaussian_packet(
    params: &ModelParams,
    grid: &MomentumGrid1D,
    p0: f64,
    width: f64,
    spin: Sign,
    projection: Projection,
    convention: SignConvention,
) -> Result<SpinorField> {
    if !width.is_finite() || width <= 0.0 {
        return Err(Error::Validation(format!("width must be > 0, got {width}")));
    }
    let (lo, hi) = grid.coverage();
    let tail = gaussian_tail((hi - p0) / width) + gaussian_tail((p0 - lo) / width);
    if tail > 1e-8 {
        return Err(Error::Validation(format!(
            "envelope tail mass {tail:.3e} beyond the grid exceeds 1e-8; \
             enlarge the grid or narrow the packet"
        )));
    }
    if params.mass() == 0.0 && projection == Projection::PositiveBranch {
        return Err(Error::Domain(
            "positive-branch projection undefined for massless packets (E = 0 at p = 0)".into(),
        ));
    }
    let u = helicity_spinor(&X_AXIS, spin)?;
    let kappa = convention.coupling(params.beta());
    let rest = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];

    let amplitudes: Vec<[C64; 4]> = grid
        .momenta()
        .iter()
        .map(|&p| {
            let envelope = (-(p - p0) * (p - p0) / (4.0 * width * width)).exp();
            let phi = match projection {
                Projection::PositiveBranch => {
                    let e = energy_branches(params, p.abs()).0;
                    phi_eigenvector(
                        u.epsilon_spin.value() * p,
                        kappa * p * p,
                        params.mass(),
                        e,
                        Sign::Plus,
                    )
                }
                Projection::None => rest,
            };
            let mut mode = tensor2(&phi, &u.u);
            for e in mode.iter_mut() {
                *e *= envelope;
            }
            mode
        })
        .collect();

    let mut state = SpinorField {
        amplitudes,
        grid: grid.clone(),
        time: 0.0,
    };
    let norm = state.norm();
    if norm <= 0.0 {
        return Err(Error::Validation("packet envelope vanished on the grid".into()));
    }
    let scale = 1.0 / norm.sqrt();
    for a in state.amplitudes.iter_mut() {
        for e in a.iter_mut() {
            *e *= scale;
        }
    }
    Ok(state)
}

/// Instantaneous packet observables.
#[derive(Clone, Copy, Debug)]
pub struct Observables {
    /// Σ_k ‖ψ_k‖².
    pub norm: f64,
    /// Circular mean of the position density, principal value in [0, L).
    pub x_centroid: f64,
    pub p_centroid: f64,
    pub energy: f64,
}

/// Compute norm, centroids and energy of a state (Dirac representation).
///
/// The position density comes from an inverse discrete Fourier transform per
/// spinor component; on a periodic box the centroid is the circular mean,
/// reported here as a principal value.
pub fn observables(
    state: &SpinorField,
    params: &ModelParams,
    convention: SignConvention,
) -> Result<Observables> {
    let norm_terms: Vec<f64> = state.amplitudes.iter().map(|a| vdot(a, a).re).collect();
    let norm = pairwise_sum(&norm_terms);
    if norm <= 0.0 {
        return Err(Error::Domain("observables undefined for a zero-norm state".into()));
    }

    let momenta = state.grid.momenta();
    let p_terms: Vec<f64> = momenta
        .iter()
        .zip(&norm_terms)
        .map(|(&p, &w)| p * w)
        .collect();
    let p_centroid = pairwise_sum(&p_terms) / norm;

    let gammas = build_gamma_set(Representation::Dirac);
    let e_terms: Vec<f64> = state
        .amplitudes
        .iter()
        .zip(momenta)
        .map(|(a, &p)| {
            let h = build_mode_hamiltonian(params, p, &gammas, convention);
            vdot(a, &h.mul_vec(a)).re
        })
        .collect();
    let energy = pairwise_sum(&e_terms) / norm;

    let n = state.grid.n_modes();
    let mut density = vec![0.0f64; n];
    let mut planner = FftPlanner::<f64>::new();
    let ifft = planner.plan_fft_inverse(n);
    let mut buf = vec![C64::new(0.0, 0.0); n];
    for component in 0..4 {
        for (j, a) in state.amplitudes.iter().enumerate() {
            buf[j] = a[component];
        }
        ifft.process(&mut buf);
        for (rho, b) in density.iter_mut().zip(&buf) {
            *rho += b.norm_sqr();
        }
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let ring_terms: Vec<C64> = density
        .iter()
        .enumerate()
        .map(|(j, &rho)| C64::from_polar(rho, two_pi * j as f64 / n as f64))
        .collect();
    let z = pairwise_sum_c64(&ring_terms);
    let length = state.grid.box_length();
    let mut x_centroid = z.arg() / two_pi * length;
    if x_centroid < 0.0 {
        x_centroid += length;
    }

    Ok(Observables {
        norm,
        x_centroid,
        p_centroid,
        energy,
    })
}

/// Full description of an evolution run.
#[derive(Clone, Debug)]
pub struct EvolutionConfig {
    pub params: ModelParams,
    pub convention: SignConvention,
    pub n_modes: usize,
    pub box_length: f64,
    pub p0: f64,
    pub width: f64,
    pub spin: Sign,
    pub projection: Projection,
    pub dt: f64,
    pub n_steps: usize,
    /// Observables are recorded at step 0, every `sample_stride` steps, and
    /// at the final step.
    pub sample_stride: usize,
    /// Per-mode amplitude snapshots every `snapshot_stride` steps; 0 disables.
    pub snapshot_stride: usize,
}

impl EvolutionConfig {
    fn validate(&self) -> Result<()> {
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return Err(Error::Validation(format!("dt must be > 0, got {}", self.dt)));
        }
        if self.n_steps == 0 {
            return Err(Error::Validation("n_steps must be ≥ 1".into()));
        }
        if self.sample_stride == 0 {
            return Err(Error::Validation("sample_stride must be ≥ 1".into()));
        }
        Ok(())
    }
}

/// Sampled time series of packet observables; `x_centroid` is unwrapped
/// against the previous sample so it is continuous across box boundaries.
#[derive(Clone, Debug, Default)]
pub struct ObservableSeries {
    pub times: Vec<f64>,
    pub norm: Vec<f64>,
    pub x_centroid: Vec<f64>,
    pub p_centroid: Vec<f64>,
    pub energy: Vec<f64>,
}

impl ObservableSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Momentum-space amplitudes captured at one sample time.
#[derive(Clone, Debug)]
pub struct Snapshot {
    pub time: f64,
    pub amplitudes: Vec<[C64; 4]>,
}

#[derive(Clone, Debug)]
pub struct EvolutionRun {
    pub series: ObservableSeries,
    pub snapshots: Vec<Snapshot>,
}

/// Run a configured evolution: build grid, cache and packet, step with the
/// exact per-mode propagator, record observables and optional snapshots.
/// Deterministic: identical configs produce identical output bit for bit.
pub fn run_evolution(config: &EvolutionConfig) -> Result<EvolutionRun> {
    config.validate()?;
    let grid = MomentumGrid1D::new(config.n_modes, config.box_length)?;
    let gammas = build_gamma_set(Representation::Dirac);
    let cache = build_propagator_cache(&config.params, &grid, &gammas, config.convention)?;
    let mut state = init_gaussian_packet(
        &config.params,
        &grid,
        config.p0,
        config.width,
        config.spin,
        config.projection,
        config.convention,
    )?;

    // One step operator per mode: the same V·diag(e^{−iλdt})·V† as
    // `propagate`, composed once since dt is constant over the run.
    let step_ops: Vec<CMat4> = cache
        .eigenvectors
        .iter()
        .zip(&cache.eigenvalues)
        .map(|(v, lam)| {
            let mut d = CMat4::zeros();
            for i in 0..4 {
                d.entries[i][i] = C64::from_polar(1.0, -lam[i] * config.dt);
            }
            *v * d * v.adjoint()
        })
        .collect();

    let mut series = ObservableSeries::default();
    let mut snapshots = Vec::new();
    let half = config.box_length / 2.0;
    let mut prev_x: Option<f64> = None;

    let record = |state: &SpinorField,
                      step: usize,
                      series: &mut ObservableSeries,
                      prev_x: &mut Option<f64>|
     -> Result<()> {
        let obs = observables(state, &config.params, config.convention)?;
        let x = match *prev_x {
            // anchor the first sample in (−L/2, L/2]
            None => {
                if obs.x_centroid > half {
                    obs.x_centroid - config.box_length
                } else {
                    obs.x_centroid
                }
            }
            Some(prev) => {
                let mut x = obs.x_centroid;
                x -= config.box_length * ((x - prev) / config.box_length).round();
                x
            }
        };
        *prev_x = Some(x);
        series.times.push(step as f64 * config.dt);
        series.norm.push(obs.norm);
        series.x_centroid.push(x);
        series.p_centroid.push(obs.p_centroid);
        series.energy.push(obs.energy);
        Ok(())
    };

    record(&state, 0, &mut series, &mut prev_x)?;
    if config.snapshot_stride > 0 {
        snapshots.push(Snapshot {
            time: 0.0,
            amplitudes: state.amplitudes.clone(),
        });
    }

    for step in 1..=config.n_steps {
        state
            .amplitudes
            .par_iter_mut()
            .enumerate()
            .for_each(|(k, psi)| {
                *psi = step_ops[k].mul_vec(psi);
            });
        state.time = step as f64 * config.dt;

        if step % config.sample_stride == 0 || step == config.n_steps {
            record(&state, step, &mut series, &mut prev_x)?;
        }
        if config.snapshot_stride > 0 && step % config.snapshot_stride == 0 {
            snapshots.push(Snapshot {
                time: state.time,
                amplitudes: state.amplitudes.clone(),
            });
        }
    }

    Ok(EvolutionRun { series, snapshots })
}
