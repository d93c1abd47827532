//! Poincaré–Lefschetz duality `D(x) = x ⌢ O_M`.

use std::sync::Arc;

use crate::complex::SimplicialPair;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::homology::{GradedBasis, HomologyClass, PairHomology};
use crate::linalg::Matrix;
use crate::orientation::{fundamental_class, OrientedFundamentalClass};

use super::cap::{cap, CohomologyClass};

/// The target manifold with its homology, fundamental class and duality matrices.
#[derive(Clone, Debug)]
pub struct DualityData {
    manifold: Arc<SimplicialPair>,
    homology: PairHomology,
    orientation: OrientedFundamentalClass,
    fundamental: HomologyClass,
    /// `d[k]` is `D : H^{n-k}(M, ∂M) -> H_k(M)` in dual/homology coordinates.
    d: Vec<Matrix>,
    d_inv: Vec<Matrix>,
}

impl DualityData {
    pub fn new(manifold: Arc<SimplicialPair>, field: FieldSpec) -> Result<Self, Error> {
        let orientation = fundamental_class(manifold.clone())?;
        let homology = PairHomology::new(manifold.clone(), field)?;
        let n = orientation.degree();
        let fundamental =
            HomologyClass::from_cycle(homology.relative.clone(), n, &orientation.chain(field))?;
        let mut d = Vec::with_capacity(n + 1);
        let mut d_inv = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let rel = &homology.relative;
            let cols = (0..rel.betti((n - k) as isize))
                .map(|j| {
                    let x = CohomologyClass::dual_basis_element(rel.clone(), n - k, j);
                    cap(&x, &fundamental, &homology.absolute).map(|c| c.coords().to_vec())
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::from_columns(field, homology.absolute.betti(k as isize), &cols);
            let inv = m.inverse().ok_or(Error::DualitySingular(k))?;
            d.push(m);
            d_inv.push(inv);
        }
        Ok(DualityData {
            manifold,
            homology,
            orientation,
            fundamental,
            d,
            d_inv,
        })
    }

    pub fn manifold(&self) -> &Arc<SimplicialPair> {
        &self.manifold
    }

    pub fn field(&self) -> FieldSpec {
        self.homology.absolute.field()
    }

    pub fn dim(&self) -> usize {
        self.orientation.degree()
    }

    /// `H(M, ∂M)`.
    pub fn relative(&self) -> &Arc<GradedBasis> {
        &self.homology.relative
    }

    /// `H(M)`.
    pub fn absolute(&self) -> &Arc<GradedBasis> {
        &self.homology.absolute
    }

    pub fn homology(&self) -> &PairHomology {
        &self.homology
    }

    pub fn orientation(&self) -> &OrientedFundamentalClass {
        &self.orientation
    }

    /// `O_M ∈ H_n(M, ∂M)`.
    pub fn fundamental_class(&self) -> &HomologyClass {
        &self.fundamental
    }

    /// Matrix of `D : H^{n-k}(M, ∂M) -> H_k(M)`.
    pub fn matrix(&self, k: usize) -> &Matrix {
        &self.d[k]
    }

    pub fn inverse_matrix(&self, k: usize) -> &Matrix {
        &self.d_inv[k]
    }

    /// `D(ξ) = ξ ⌢ O_M`, from the stored matrices.
    pub fn apply(&self, xi: &CohomologyClass) -> Result<HomologyClass, Error> {
        if !xi.basis().same_as(self.relative()) {
            return Err(Error::BasisMismatch(
                "duality takes classes of H^*(M, ∂M)".into(),
            ));
        }
        let n = self.dim();
        let k = n
            .checked_sub(xi.degree())
            .ok_or_else(|| Error::DegreeMismatch(format!("degree {} exceeds {n}", xi.degree())))?;
        let coords = self.d[k].mul_vec(xi.coords())?;
        HomologyClass::new(self.absolute().clone(), k as isize, coords)
    }

    /// `D^{-1}(x) ∈ H^{n-k}(M, ∂M)` for `x ∈ H_k(M)`.
    pub fn inverse(&self, x: &HomologyClass) -> Result<CohomologyClass, Error> {
        if !x.basis().same_as(self.absolute()) {
            return Err(Error::BasisMismatch(
                "inverse duality takes classes of H_*(M)".into(),
            ));
        }
        let n = self.dim() as isize;
        if x.degree() < 0 || x.degree() > n {
            return Err(Error::DegreeMismatch(format!(
                "degree {} outside 0..={n}",
                x.degree()
            )));
        }
        let k = x.degree() as usize;
        let coords = self.d_inv[k].mul_vec(x.coords())?;
        CohomologyClass::from_coords(self.relative().clone(), self.dim() - k, coords)
    }
}

/// `Ō_M ∈ H^n(M, ∂M)` with `⟨Ō_M, O_M⟩ = 1`.
pub fn dual_fundamental_cocycle(dd: &DualityData) -> CohomologyClass {
    let n = dd.dim();
    let o = dd.fundamental_class().coords();
    // H_n(M, ∂M) is one-dimensional for a connected oriented manifold
    let c = o[0].inv().expect("fundamental class is nonzero");
    let mut coords: Vec<Scalar> = vec![dd.field().zero(); o.len()];
    coords[0] = c;
    CohomologyClass::from_coords(dd.relative().clone(), n, coords).expect("degree n dual basis")
}

/// Augmentation `ε(Σ c_v v) = Σ c_v` of a degree-0 class: its coefficient on `[pt]`
/// when the complex is connected.
pub fn point_coefficient(class: &HomologyClass) -> Scalar {
    let field = class.basis().field();
    if class.degree() != 0 {
        return field.zero();
    }
    class
        .representative()
        .iter()
        .fold(field.zero(), |acc, c| &acc + c)
}
