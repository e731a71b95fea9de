//! Pauli matrices, Kronecker products and gamma-matrix representations.
//!
//! The gamma matrices are built literally from tensor products of Pauli
//! matrices: γ⁰ = σ³⊗σ⁰, γʲ = iσ²⊗σʲ, γ⁵ = σ¹⊗σ⁰ in the Dirac
//! representation; the Weyl representation is obtained by conjugating with
//! the involution T = (σ³+σ¹)⊗σ⁰/√2. Residual functions quantify how well a
//! set satisfies the Clifford relations {γ^μ, γ^ν} = 2η^{μν}I₄ with metric
//! η = diag(1,−1,−1,−1).

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::{C64, Error, Result};

/// Absolute tolerance for the exact algebraic identities of this module.
/// Every matrix entry involved is O(1), so an absolute tolerance is adequate.
pub const ALGEBRA_TOL: f64 = 1e-12;

macro_rules! impl_cmat {
    ($name:ident, $n:expr) => {
        #[derive(Clone, Copy, Debug, PartialEq)]
        pub struct $name {
            pub entries: [[C64; $n]; $n],
        }

        impl $name {
            pub const DIM: usize = $n;

            pub fn zeros() -> Self {
                Self {
                    entries: [[C64::new(0.0, 0.0); $n]; $n],
                }
            }

            pub fn identity() -> Self {
                let mut m = Self::zeros();
                for k in 0..$n {
                    m.entries[k][k] = C64::new(1.0, 0.0);
                }
                m
            }

            /// Build from real entries (the common case for σ¹, σ³, metric factors).
            pub fn from_real(rows: [[f64; $n]; $n]) -> Self {
                let mut m = Self::zeros();
                for r in 0..$n {
                    for c in 0..$n {
                        m.entries[r][c] = C64::new(rows[r][c], 0.0);
                    }
                }
                m
            }

            pub fn adjoint(&self) -> Self {
                let mut m = Self::zeros();
                for r in 0..$n {
                    for c in 0..$n {
                        m.entries[r][c] = self.entries[c][r].conj();
                    }
                }
                m
            }

            pub fn scale(&self, s: C64) -> Self {
                let mut m = *self;
                for row in m.entries.iter_mut() {
                    for e in row.iter_mut() {
                        *e *= s;
                    }
                }
                m
            }

            /// Largest entry modulus.
            pub fn max_abs(&self) -> f64 {
                self.entries
                    .iter()
                    .flatten()
                    .map(|e| e.norm())
                    .fold(0.0, f64::max)
            }

            /// Largest entrywise difference |self − other|.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                (*self - *other).max_abs()
            }

            /// max |A − A†|; zero iff Hermitian.
            pub fn hermiticity_residual(&self) -> f64 {
                self.max_abs_diff(&self.adjoint())
            }

            /// max |A·A† − I|; zero iff unitary.
            pub fn unitarity_residual(&self) -> f64 {
                (*self * self.adjoint()).max_abs_diff(&Self::identity())
            }

            pub fn mul_vec(&self, v: &[C64; $n]) -> [C64; $n] {
                let mut out = [C64::new(0.0, 0.0); $n];
                for r in 0..$n {
                    let mut acc = C64::new(0.0, 0.0);
                    for c in 0..$n {
                        acc += self.entries[r][c] * v[c];
                    }
                    out[r] = acc;
                }
                out
            }
        }

        impl Index<(usize, usize)> for $name {
            type Output = C64;
            fn index(&self, (r, c): (usize, usize)) -> &C64 {
                &self.entries[r][c]
            }
        }

        impl IndexMut<(usize, usize)> for $name {
            fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
                &mut self.entries[r][c]
            }
        }

        impl Add for $name {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                let mut m = self;
                for r in 0..$n {
                    for c in 0..$n {
                        m.entries[r][c] += rhs.entries[r][c];
                    }
                }
                m
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                let mut m = self;
                for r in 0..$n {
                    for c in 0..$n {
                        m.entries[r][c] -= rhs.entries[r][c];
                    }
                }
                m
            }
        }

        impl Neg for $name {
            type Output = Self;
            fn neg(self) -> Self {
                self.scale(C64::new(-1.0, 0.0))
            }
        }

        impl Mul for $name {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                let mut m = Self::zeros();
                for r in 0..$n {
                    for c in 0..$n {
                        let mut acc = C64::new(0.0, 0.0);
                        for k in 0..$n {
                            acc += self.entries[r][k] * rhs.entries[k][c];
                        }
                        m.entries[r][c] = acc;
                    }
                }
                m
            }
        }

        impl Mul<C64> for $name {
            type Output = Self;
            fn mul(self, rhs: C64) -> Self {
                self.scale(rhs)
            }
        }

        impl Mul<f64> for $name {
            type Output = Self;
            fn mul(self, rhs: f64) -> Self {
                self.scale(C64::new(rhs, 0.0))
            }
        }
    };
}

impl_cmat!(CMat2, 2);
impl_cmat!(CMat4, 4);

impl CMat4 {
    /// Determinant via partial-pivot LU. Used by verification code to check
    /// that the momentum-space operator is singular exactly on shell.
    pub fn det(&self) -> C64 {
        let mut a = self.entries;
        let mut det = C64::new(1.0, 0.0);
        for col in 0..4 {
            let (pivot, pmax) = (col..4)
                .map(|r| (r, a[r][col].norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pmax == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for r in col + 1..4 {
                let f = a[r][col] / a[col][col];
                for c in col..4 {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        det
    }
}

// --- complex vector helpers -------------------------------------------------

pub fn vdot<const N: usize>(a: &[C64; N], b: &[C64; N]) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..N {
        acc += a[k].conj() * b[k];
    }
    acc
}

pub fn vnorm<const N: usize>(v: &[C64; N]) -> f64 {
    vdot(v, v).re.sqrt()
}

pub fn vscale<const N: usize>(v: &[C64; N], s: C64) -> [C64; N] {
    let mut out = *v;
    for e in out.iter_mut() {
        *e *= s;
    }
    out
}

pub fn vsub<const N: usize>(a: &[C64; N], b: &[C64; N]) -> [C64; N] {
    let mut out = *a;
    for k in 0..N {
        out[k] -= b[k];
    }
    out
}

/// Tensor product of two 2-spinors, (a⊗b)[2i+j] = a[i]·b[j], consistent with
/// the block layout of [`kron`]: (A⊗B)(a⊗b) = (Aa)⊗(Bb).
pub fn tensor2(a: &[C64; 2], b: &[C64; 2]) -> [C64; 4] {
    [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
}

/// Rotate a vector by a global phase so its first non-vanishing component is
/// real and positive. Components below 1e-10·‖v‖ count as vanishing.
pub fn fix_global_phase<const N: usize>(v: &[C64; N]) -> [C64; N] {
    let norm = vnorm(v);
    if norm == 0.0 {
        return *v;
    }
    for e in v.iter() {
        if e.norm() > 1e-10 * norm {
            return vscale(v, e.conj() / e.norm());
        }
    }
    *v
}

// --- Pauli matrices and Kronecker product -----------------------------------

pub(crate) fn sigma(k: usize) -> CMat2 {
    let i = C64::new(0.0, 1.0);
    match k {
        0 => CMat2::from_real([[1.0, 0.0], [0.0, 1.0]]),
        1 => CMat2::from_real([[0.0, 1.0], [1.0, 0.0]]),
        2 => {
            let mut m = CMat2::zeros();
            m[(0, 1)] = -i;
            m[(1, 0)] = i;
            m
        }
        3 => CMat2::from_real([[1.0, 0.0], [0.0, -1.0]]),
        _ => unreachable!("sigma index checked by caller"),
    }
}

/// Pauli matrix σ^k; σ⁰ is the 2×2 identity.
pub fn pauli(k: usize) -> Result<CMat2> {
    if k > 3 {
        return Err(Error::Usage(format!("pauli index {k} outside 0..=3")));
    }
    Ok(sigma(k))
}

/// Kronecker product with block layout [[a₀₀·b, a₀₁·b], [a₁₀·b, a₁₁·b]].
pub fn kron(a: &CMat2, b: &CMat2) -> CMat4 {
    let mut m = CMat4::zeros();
    for ar in 0..2 {
        for ac in 0..2 {
            for br in 0..2 {
                for bc in 0..2 {
                    m.entries[2 * ar + br][2 * ac + bc] = a.entries[ar][ac] * b.entries[br][bc];
                }
            }
        }
    }
    m
}

/// σ⃗·n⃗ for a real 3-vector n.
pub fn sigma_dot(n: &[f64; 3]) -> CMat2 {
    sigma(1) * n[0] + sigma(2) * n[1] + sigma(3) * n[2]
}

// --- gamma sets --------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Dirac,
    Weyl,
}

impl std::fmt::Display for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Representation::Dirac => write!(f, "dirac"),
            Representation::Weyl => write!(f, "weyl"),
        }
    }
}

/// The four gamma matrices plus γ⁵ in a tagged representation.
#[derive(Clone, Copy, Debug)]
pub struct GammaSet {
    pub gamma0: CMat4,
    pub gamma1: CMat4,
    pub gamma2: CMat4,
    pub gamma3: CMat4,
    pub gamma5: CMat4,
    pub representation: Representation,
}

/// Metric signature diag(1,−1,−1,−1). The Dirac set below only satisfies the
/// Clifford relations with this signature.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

impl GammaSet {
    pub fn gamma(&self, mu: usize) -> &CMat4 {
        match mu {
            0 => &self.gamma0,
            1 => &self.gamma1,
            2 => &self.gamma2,
            3 => &self.gamma3,
            _ => panic!("gamma index {mu} outside 0..=3"),
        }
    }

    pub fn gamma_mut(&mut self, mu: usize) -> &mut CMat4 {
        match mu {
            0 => &mut self.gamma0,
            1 => &mut self.gamma1,
            2 => &mut self.gamma2,
            3 => &mut self.gamma3,
            _ => panic!("gamma index {mu} outside 0..=3"),
        }
    }
}

/// Construct the gamma set in the requested representation.
///
/// The Dirac set is built from the defining tensor products; the Weyl set is
/// the similarity image under [`dirac_weyl_transform`], so the two sets are
/// consistent with the χ–φ component convention by construction.
pub fn build_gamma_set(representation: Representation) -> GammaSet {
    let i = C64::new(0.0, 1.0);
    let dirac = GammaSet {
        gamma0: kron(&sigma(3), &sigma(0)),
        gamma1: kron(&sigma(2), &sigma(1)) * i,
        gamma2: kron(&sigma(2), &sigma(2)) * i,
        gamma3: kron(&sigma(2), &sigma(3)) * i,
        gamma5: kron(&sigma(1), &sigma(0)),
        representation: Representation::Dirac,
    };
    match representation {
        Representation::Dirac => dirac,
        Representation::Weyl => {
            let t = dirac_weyl_transform();
            let mut weyl = apply_similarity(&dirac, &t).expect("transform is unitary");
            weyl.representation = Representation::Weyl;
            weyl
        }
    }
}

/// T = (σ³+σ¹)⊗σ⁰/√2: Hermitian, unitary, T² = I₄. Maps the Weyl-stacked
/// spinor (χ, φ) to the Dirac-stacked (χ+φ, χ−φ)/√2 and conjugates gamma
/// matrices between the two representations.
pub fn dirac_weyl_transform() -> CMat4 {
    let s = sigma(3) + sigma(1);
    kron(&s, &sigma(0)) * (1.0 / std::f64::consts::SQRT_2)
}

/// Conjugate every matrix of the set by a unitary t: γ → t·γ·t†.
/// The representation tag is left unchanged; the caller owns relabelling.
pub fn apply_similarity(set: &GammaSet, t: &CMat4) -> Result<GammaSet> {
    let res = t.unitarity_residual();
    if res > ALGEBRA_TOL {
        return Err(Error::Validation(format!(
            "similarity transform is not unitary (residual {res:.3e})"
        )));
    }
    let td = t.adjoint();
    let conj = |g: &CMat4| *t * *g * td;
    Ok(GammaSet {
        gamma0: conj(&set.gamma0),
        gamma1: conj(&set.gamma1),
        gamma2: conj(&set.gamma2),
        gamma3: conj(&set.gamma3),
        gamma5: conj(&set.gamma5),
        representation: set.representation,
    })
}

/// max over μ,ν of the entrywise residual |{γ^μ, γ^ν} − 2η^{μν}·I₄|.
pub fn clifford_residual(set: &GammaSet) -> f64 {
    let id = CMat4::identity();
    let mut worst: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let anti = *set.gamma(mu) * *set.gamma(nu) + *set.gamma(nu) * *set.gamma(mu);
            let expected = id * (2.0 * if mu == nu { METRIC[mu] } else { 0.0 });
            worst = worst.max(anti.max_abs_diff(&expected));
        }
    }
    worst
}

/// Entrywise residual |iγ⁰γ¹γ²γ³ − γ⁵|.
pub fn gamma5_product_residual(set: &GammaSet) -> f64 {
    let product =
        (set.gamma0 * set.gamma1 * set.gamma2 * set.gamma3).scale(C64::new(0.0, 1.0));
    product.max_abs_diff(&set.gamma5)
}

/// Worst violation of the Hermiticity pattern γ⁰† = γ⁰, (γʲ)† = −γʲ,
/// (γ⁵)† = γ⁵.
pub fn hermiticity_pattern_residual(set: &GammaSet) -> f64 {
    let mut worst = set.gamma0.hermiticity_residual();
    for mu in 1..4 {
        worst = worst.max(set.gamma(mu).adjoint().max_abs_diff(&-*set.gamma(mu)));
    }
    worst.max(set.gamma5.hermiticity_residual())
}

/// Entrywise max of |γ⁰γ⁵ + γ⁵γ⁰|.
///
/// The matrix part of the parity operator (Pψ)(t, x⃗) = γ⁰ψ(t, −x⃗) is γ⁰,
/// so this residual is the algebraic content of Pγ⁵ = −γ⁵P: a zero value
/// means the γ⁵ correction term flips sign under reflections.
pub fn parity_gamma5_residual(set: &GammaSet) -> f64 {
    (set.gamma0 * set.gamma5 + set.gamma5 * set.gamma0).max_abs()
}
