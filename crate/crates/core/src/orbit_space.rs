//! Floating-point model of `g* = (u(n) ⋉ h_n)*`.
//!
//! Skew-Hermitian elements `U` of `u(n)` are stored through their Hermitian
//! representative `S` with `U = iS`, so `K`-orbits in `u(n)*` are classified
//! by sorted real spectra.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_len, Error, Result};
use crate::linalg::{CMatrix, C64};
use crate::oracle::eigen::hermitian_eigenvalues;
use crate::weights::DominantWeight;

pub const TOL_HERMITIAN: f64 = 1e-10;
pub const TOL_UNITARY: f64 = 1e-10;
pub const TOL_MEMBERSHIP: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector(pub Vec<C64>);

impl ComplexVector {
    pub fn zeros(n: usize) -> Self {
        ComplexVector(vec![C64::new(0.0, 0.0); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `⟨self, other⟩ = Σ conj(self_j) other_j`.
    pub fn inner(&self, other: &ComplexVector) -> C64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    fn axpy(&self, a: f64, other: &ComplexVector) -> ComplexVector {
        ComplexVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y * a).collect())
    }
}

impl From<Vec<C64>> for ComplexVector {
    fn from(v: Vec<C64>) -> Self {
        ComplexVector(v)
    }
}

/// Hermitian matrix `S`, standing for the skew-Hermitian `iS`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.is_hermitian(TOL_HERMITIAN) {
            Ok(HermitianMatrix(m.hermitian_part()))
        } else {
            Err(Error::DimensionMismatch("matrix is not Hermitian".into()))
        }
    }

    /// Projects onto the Hermitian part; used for results of exact-in-theory
    /// formulas that pick up rounding.
    pub(crate) fn symmetrized(m: CMatrix) -> Self {
        HermitianMatrix(m.hermitian_part())
    }

    pub fn diagonal(d: &[f64]) -> Self {
        HermitianMatrix(CMatrix::from_real_diagonal(d))
    }

    /// `diag(λ)`, the representative attached to a weight.
    pub fn from_weight(lambda: &DominantWeight) -> Self {
        let d: Vec<f64> = lambda.entries().iter().map(|&x| x as f64).collect();
        Self::diagonal(&d)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.0)
    }
}

/// A point `(U, u, x)` of `g*`, with `U = iS`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm {
    pub s: HermitianMatrix,
    pub u: ComplexVector,
    pub x: f64,
}

impl LinearForm {
    pub fn new(s: HermitianMatrix, u: ComplexVector, x: f64) -> Result<Self> {
        check_len(s.n(), u.n())?;
        Ok(LinearForm { s, u, x })
    }

    /// The generic form `(diag(λ), 0, α)`.
    pub fn generic(lambda: &DominantWeight, alpha: f64) -> Self {
        LinearForm {
            s: HermitianMatrix::from_weight(lambda),
            u: ComplexVector::zeros(lambda.n()),
            x: alpha,
        }
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }
}

/// An element `(k, z, t)` of `U(n) ⋉ H_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub k: CMatrix,
    pub z: ComplexVector,
    pub t: f64,
}

impl GroupElement {
    pub fn new(k: CMatrix, z: ComplexVector, t: f64) -> Result<Self> {
        check_len(k.n(), z.n())?;
        if !k.is_unitary(TOL_UNITARY) {
            return Err(Error::DimensionMismatch("k is not unitary".into()));
        }
        Ok(GroupElement { k, z, t })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            k: CMatrix::identity(n),
            z: ComplexVector::zeros(n),
            t: 0.0,
        }
    }

    /// `(k,z,t)·(k',z',t') = (kk', z + kz', t + t' − ½ Im⟨z, kz'⟩)`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        check_len(self.z.n(), other.z.n())?;
        let kz = ComplexVector(self.k.mul_vec(other.z.as_slice()));
        let t = self.t + other.t - 0.5 * self.z.inner(&kz).im;
        Ok(GroupElement {
            k: &self.k * &other.k,
            z: self.z.axpy(1.0, &kz),
            t,
        })
    }
}

/// Hermitian representative of `z × w`: `S(z, w) = ½(w z* + z w*)`.
pub fn cross_product(z: &ComplexVector, w: &ComplexVector) -> Result<HermitianMatrix> {
    check_len(z.n(), w.n())?;
    let a = CMatrix::outer(w.as_slice(), z.as_slice());
    let b = CMatrix::outer(z.as_slice(), w.as_slice());
    Ok(HermitianMatrix::symmetrized((&a + &b).scale(0.5)))
}

/// `z ↦ z z*`, the representative of `A ↦ z*(Az)`.
pub fn moment_map(z: &ComplexVector) -> HermitianMatrix {
    HermitianMatrix(CMatrix::outer(z.as_slice(), z.as_slice()))
}

/// `Ad*(k,z,t)(U,u,x) = (kUk* + z×(ku) + (x/2) z×z, ku + xz, x)`.
pub fn coadjoint_action(g: &GroupElement, phi: &LinearForm) -> Result<LinearForm> {
    let n = phi.n();
    if g.k.n() != n || g.z.n() != n || phi.s.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "group element acts on C^{}, form lives over C^{n}",
            g.z.n()
        )));
    }
    let ku = ComplexVector(g.k.mul_vec(phi.u.as_slice()));
    let conj = &(&g.k * phi.s.matrix()) * &g.k.adjoint();
    let cross = cross_product(&g.z, &ku)?;
    let zz = moment_map(&g.z);
    let s = &(&conj + cross.matrix()) + &zz.matrix().scale(phi.x / 2.0);
    Ok(LinearForm {
        s: HermitianMatrix::symmetrized(s),
        u: ku.axpy(phi.x, &g.z),
        x: phi.x,
    })
}

/// Orbit invariant of a generic form: `(spec↓(S − uu*/(2x)), x)`.
pub fn generic_orbit_invariant(phi: &LinearForm) -> Result<(Vec<f64>, f64)> {
    if phi.x == 0.0 {
        return Err(Error::ZeroCentralParameter);
    }
    let uu = CMatrix::outer(phi.u.as_slice(), phi.u.as_slice());
    let reduced = phi.s.matrix() - &uu.scale(1.0 / (2.0 * phi.x));
    let spec = hermitian_eigenvalues(&reduced.hermitian_part())?;
    Ok((spec, phi.x))
}

/// Whether `S` lies on the `U(n)`-orbit of `diag(μ)`: sorted spectra agree
/// entrywise within `tol`, scaled by `max(1, max|S_ij|)`.
pub fn k_orbit_contains(s: &HermitianMatrix, mu: &DominantWeight, tol: f64) -> bool {
    if s.n() != mu.n() {
        return false;
    }
    let scale = s.matrix().max_abs().max(1.0);
    match s.eigenvalues() {
        Ok(spec) => spec
            .iter()
            .zip(mu.entries())
            .all(|(a, &b)| (a - b as f64).abs() <= tol * scale),
        Err(_) => false,
    }
}

#[derive(Serialize, Deserialize)]
struct LinearFormWire {
    #[serde(rename = "S")]
    s: Vec<[f64; 2]>,
    u: Vec<[f64; 2]>,
    x: f64,
}

fn to_pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn from_pairs(v: &[[f64; 2]]) -> Vec<C64> {
    v.iter().map(|p| C64::new(p[0], p[1])).collect()
}

/// `S` is written row-major as `n²` `[re, im]` pairs.
impl Serialize for LinearForm {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> std::result::Result<Se::Ok, Se::Error> {
        LinearFormWire {
            s: to_pairs(self.s.matrix().as_slice()),
            u: to_pairs(self.u.as_slice()),
            x: self.x,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = LinearFormWire::deserialize(deserializer)?;
        let n = wire.u.len();
        let s = CMatrix::from_row_major(n, from_pairs(&wire.s))
            .ok_or_else(|| D::Error::custom(format!("S must have {} entries", n * n)))?;
        let s = HermitianMatrix::new(s).map_err(D::Error::custom)?;
        LinearForm::new(s, ComplexVector(from_pairs(&wire.u)), wire.x).map_err(D::Error::custom)
    }
}
