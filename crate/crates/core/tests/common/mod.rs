//! Shared test support: an independently implemented standard-Dirac spectral
//! evolver used as the α = 0 oracle, plus small signal-analysis helpers.
//!
//! The oracle deliberately avoids every code path of the library under test:
//! hard-coded 4×4 Hamiltonian entries, the Euler closed form
//! exp(−iHt) = cos(Et)·I − i·sin(Et)/E·H instead of an eigendecomposition,
//! plain summation instead of pairwise, and a momentum-space shift
//! correlation instead of an FFT for the position centroid.

#![allow(dead_code)]

use num_complex::Complex64 as C64;

/// Standard (α = 0) Dirac spectral evolver on a periodic 1D box.
pub struct OracleEvolver {
    pub mass: f64,
    pub n_modes: usize,
    pub box_length: f64,
    pub momenta: Vec<f64>,
    pub amplitudes: Vec<[C64; 4]>,
}

/// σ¹ eigenvectors used as the fixed spin content along x̂.
fn spin_vector(sign: f64) -> [C64; 2] {
    let s = 1.0 / std::f64::consts::SQRT_2;
    if sign > 0.0 {
        [C64::new(s, 0.0), C64::new(s, 0.0)]
    } else {
        [C64::new(-s, 0.0), C64::new(s, 0.0)]
    }
}

/// H(p)·ψ with H = [[m,0,0,p],[0,m,p,0],[0,p,−m,0],[p,0,0,−m]], the
/// standard Dirac mode Hamiltonian for motion along x¹ in the Dirac
/// representation, written out entry by entry.
fn apply_h(m: f64, p: f64, psi: &[C64; 4]) -> [C64; 4] {
    [
        psi[0] * m + psi[3] * p,
        psi[1] * m + psi[2] * p,
        psi[1] * p - psi[2] * m,
        psi[0] * p - psi[3] * m,
    ]
}

impl OracleEvolver {
    /// Gaussian packet with the same envelope and spinor conventions the
    /// library documents, built from textbook formulas.
    pub fn gaussian_packet(
        mass: f64,
        n_modes: usize,
        box_length: f64,
        p0: f64,
        width: f64,
        spin_sign: f64,
        positive_projection: bool,
    ) -> Self {
        let dp = 2.0 * std::f64::consts::PI / box_length;
        let n = n_modes as i64;
        let momenta: Vec<f64> = (0..n)
            .map(|j| {
                let k = if j < n / 2 { j } else { j - n };
                k as f64 * dp
            })
            .collect();
        let u = spin_vector(spin_sign);
        let mut amplitudes: Vec<[C64; 4]> = momenta
            .iter()
            .map(|&p| {
                let envelope = (-(p - p0) * (p - p0) / (4.0 * width * width)).exp();
                let mode: [C64; 4] = if positive_projection {
                    // u_std(p) = √((E+m)/2E)·(χ, σ¹p/(E+m)·χ) with σ¹χ = ±χ
                    let e = (p * p + mass * mass).sqrt();
                    let norm = ((e + mass) / (2.0 * e)).sqrt();
                    let lower = spin_sign * p / (e + mass);
                    [
                        u[0] * norm,
                        u[1] * norm,
                        u[0] * (lower * norm),
                        u[1] * (lower * norm),
                    ]
                } else {
                    [u[0], u[1], C64::new(0.0, 0.0), C64::new(0.0, 0.0)]
                };
                [
                    mode[0] * envelope,
                    mode[1] * envelope,
                    mode[2] * envelope,
                    mode[3] * envelope,
                ]
            })
            .collect();
        let total: f64 = amplitudes
            .iter()
            .map(|a| a.iter().map(|x| x.norm_sqr()).sum::<f64>())
            .sum();
        let scale = 1.0 / total.sqrt();
        for a in amplitudes.iter_mut() {
            for x in a.iter_mut() {
                *x *= scale;
            }
        }
        Self {
            mass,
            n_modes,
            box_length,
            momenta,
            amplitudes,
        }
    }

    /// One exact step per mode: ψ ← cos(E dt)ψ − i·sin(E dt)/E·Hψ.
    pub fn step(&mut self, dt: f64) {
        let m = self.mass;
        for (k, psi) in self.amplitudes.iter_mut().enumerate() {
            let p = self.momenta[k];
            let e = (p * p + m * m).sqrt();
            if e == 0.0 {
                continue;
            }
            let (c, s) = ((e * dt).cos(), (e * dt).sin());
            let h_psi = apply_h(m, p, psi);
            let factor = C64::new(0.0, -s / e);
            for r in 0..4 {
                psi[r] = psi[r] * c + h_psi[r] * factor;
            }
        }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.iter().map(|x| x.norm_sqr()).sum::<f64>())
            .sum()
    }

    /// Position centroid (principal value in [0, L)) via the momentum-space
    /// shift correlation: ⟨e^{2πix/L}⟩ = Σ_{k,c} ψ*[k+1][c]·ψ[k][c], since
    /// multiplication by e^{2πix/L} shifts every mode up by one.
    pub fn x_centroid(&self) -> f64 {
        let n = self.n_modes;
        let mut z = C64::new(0.0, 0.0);
        for k in 0..n {
            let next = (k + 1) % n;
            for c in 0..4 {
                z += self.amplitudes[next][c].conj() * self.amplitudes[k][c];
            }
        }
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut x = z.arg() / two_pi * self.box_length;
        if x < 0.0 {
            x += self.box_length;
        }
        x
    }
}

/// Unwrap a periodic sample against the previous one; the first sample is
/// anchored in (−L/2, L/2].
pub fn unwrap_x(prev: Option<f64>, principal: f64, box_length: f64) -> f64 {
    match prev {
        None => {
            if principal > box_length / 2.0 {
                principal - box_length
            } else {
                principal
            }
        }
        Some(p) => principal - box_length * ((principal - p) / box_length).round(),
    }
}

/// Least-squares line fit, returning (slope, intercept).
pub fn linear_fit(ts: &[f64], xs: &[f64]) -> (f64, f64) {
    let n = ts.len() as f64;
    let mean_t = ts.iter().sum::<f64>() / n;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (t, x) in ts.iter().zip(xs) {
        num += (t - mean_t) * (x - mean_x);
        den += (t - mean_t) * (t - mean_t);
    }
    let slope = num / den;
    (slope, mean_x - slope * mean_t)
}

/// Dominant angular frequency of a uniformly sampled signal: detrend with a
/// least-squares line, apply a Hann window, scan the DFT magnitude above
/// `omega_min` and refine the peak bin with parabolic interpolation.
pub fn dominant_frequency(ts: &[f64], xs: &[f64], omega_min: f64) -> f64 {
    let n = xs.len();
    let dt = ts[1] - ts[0];
    let (slope, intercept) = linear_fit(ts, xs);
    let windowed: Vec<f64> = xs
        .iter()
        .zip(ts)
        .enumerate()
        .map(|(j, (x, t))| {
            let hann = 0.5
                * (1.0
                    - (2.0 * std::f64::consts::PI * j as f64 / (n as f64 - 1.0)).cos());
            (x - slope * t - intercept) * hann
        })
        .collect();

    let mut magnitudes = vec![0.0f64; n / 2 + 1];
    for (j, mag) in magnitudes.iter_mut().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for (k, w) in windowed.iter().enumerate() {
            let phase = -2.0 * std::f64::consts::PI * (j * k) as f64 / n as f64;
            acc += C64::from_polar(*w, phase);
        }
        *mag = acc.norm();
    }

    let domega = 2.0 * std::f64::consts::PI / (n as f64 * dt);
    let j_min = (omega_min / domega).ceil() as usize;
    let peak = (j_min..n / 2)
        .max_by(|&a, &b| magnitudes[a].total_cmp(&magnitudes[b]))
        .expect("spectrum has bins above omega_min");
    // parabolic refinement on the magnitude spectrum
    let (m_prev, m_peak, m_next) = (
        magnitudes[peak - 1],
        magnitudes[peak],
        magnitudes[peak + 1],
    );
    let denom = m_prev - 2.0 * m_peak + m_next;
    let delta = if denom.abs() > 1e-300 {
        0.5 * (m_prev - m_next) / denom
    } else {
        0.0
    };
    (peak as f64 + delta) * domega
}
