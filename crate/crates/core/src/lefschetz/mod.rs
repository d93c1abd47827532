//! Transfers, Lefschetz classes and the Lefschetz homomorphism `Λ_fg`.

mod cap;
mod checks;
mod duality;
mod report;

use std::sync::Arc;

use crate::complex::SimplicialMap;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::homology::{
    compose, cross_product, homology, induced_map, GradedMap, HomologyClass, PairHomology,
};
use crate::linalg::Matrix;
use crate::product::{product_pair, ProductComplex};

pub use cap::{cap, CohomologyClass};
pub use checks::{
    check_naturality, check_naturality2, check_naturality_transfer, check_symmetry, ClassCheck,
    IdentityReport,
};
pub use duality::{dual_fundamental_cocycle, point_coefficient, DualityData};
pub use report::{lefschetz_full, LefschetzEntry, LefschetzReport};

/// Homology of a source pair `(X, A)` together with duality data for `(M, ∂M)`.
#[derive(Clone, Debug)]
pub struct Setting {
    pub source: PairHomology,
    pub duality: Arc<DualityData>,
}

impl Setting {
    pub fn new(map: &SimplicialMap, field: FieldSpec) -> Result<Self, Error> {
        let duality = Arc::new(DualityData::new(map.target().clone(), field)?);
        Setting::with_duality(map, duality)
    }

    pub fn with_duality(map: &SimplicialMap, duality: Arc<DualityData>) -> Result<Self, Error> {
        let source = PairHomology::new(map.source().clone(), duality.field())?;
        Ok(Setting { source, duality })
    }

    /// `Λ_fg(z)`.
    pub fn lambda(
        &self,
        f: &SimplicialMap,
        g: &SimplicialMap,
        z: &HomologyClass,
    ) -> Result<HomologyClass, Error> {
        lefschetz_homomorphism(f, g, z, &self.source, &self.duality)
    }

    /// `Λ_fg` on every basis class of `H(X, A)`, degree by degree.
    pub fn lambda_all(
        &self,
        f: &SimplicialMap,
        g: &SimplicialMap,
    ) -> Result<Vec<HomologyClass>, Error> {
        let rel = &self.source.relative;
        let mut out = Vec::new();
        for (k, &b) in rel.betti_numbers().iter().enumerate() {
            for j in 0..b {
                let z = HomologyClass::basis_element(rel.clone(), k, j);
                out.push(self.lambda(f, g, &z)?);
            }
        }
        Ok(out)
    }
}

fn check_target(f: &SimplicialMap, dd: &DualityData) -> Result<(), Error> {
    if f.target().as_ref() != dd.manifold().as_ref() {
        return Err(Error::BasisMismatch(
            "map does not land in the duality manifold".into(),
        ));
    }
    Ok(())
}

/// `f_!^z(x) = f^* D^{-1}(x) ⌢ z`, a map `H(M) -> H(X)` of degree `|z| - n`.
pub fn transfer(
    f: &SimplicialMap,
    z: &HomologyClass,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<GradedMap, Error> {
    check_target(f, dd)?;
    if !z.basis().same_as(&source.relative) {
        return Err(Error::BasisMismatch("z must be a class of H(X, A)".into()));
    }
    let n = dd.dim() as isize;
    let m = z.degree() - n;
    let field = dd.field();
    let abs_m = dd.absolute();
    let mut blocks = Vec::new();
    for (k, &b) in abs_m.betti_numbers().iter().enumerate() {
        let rows = source.absolute.betti(k as isize + m);
        if k as isize + m < 0 {
            blocks.push(Matrix::zeros(field, rows, b));
            continue;
        }
        let mut cols = Vec::with_capacity(b);
        for j in 0..b {
            let x = HomologyClass::basis_element(abs_m.clone(), k, j);
            let xi = dd.inverse(&x)?.pullback(f, &source.relative)?;
            cols.push(cap(&xi, z, &source.absolute)?.coords().to_vec());
        }
        blocks.push(Matrix::from_columns(field, rows, &cols));
    }
    GradedMap::from_blocks(abs_m.clone(), source.absolute.clone(), m, blocks)
}

/// `L(h) = Σ_k (-1)^{k(k+m)} Σ_j x_j^k ⌢ h(a_j^k) ∈ H_m(M)`.
pub fn lefschetz_class(h: &GradedMap, dd: &DualityData) -> Result<HomologyClass, Error> {
    let abs_m = dd.absolute();
    if !h.source().same_as(abs_m) || !h.target().same_as(abs_m) {
        return Err(Error::BasisMismatch(
            "L(h) needs an endomorphism of H(M)".into(),
        ));
    }
    let m = h.degree();
    let mut total = HomologyClass::zero(abs_m.clone(), m);
    if m < 0 {
        return Ok(total);
    }
    let field = dd.field();
    for (k, &b) in abs_m.betti_numbers().iter().enumerate() {
        let sign = field.sign(k * (k + m as usize));
        for j in 0..b {
            let image = h.apply(&HomologyClass::basis_element(abs_m.clone(), k, j))?;
            if image.is_zero() {
                continue;
            }
            let x = CohomologyClass::dual_basis_element(abs_m.clone(), k, j);
            let term = cap(&x, &image, abs_m)?;
            total = total.add(&term.scaled(&sign))?;
        }
    }
    Ok(total)
}

/// `Λ_fg(z) = L(g_* f_!^z) ∈ H_{|z|-n}(M)`.
pub fn lefschetz_homomorphism(
    f: &SimplicialMap,
    g: &SimplicialMap,
    z: &HomologyClass,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<HomologyClass, Error> {
    check_target(g, dd)?;
    let shriek = transfer(f, z, source, dd)?;
    let push = induced_map(g, &source.absolute, dd.absolute())?;
    lefschetz_class(&compose(&push, &shriek)?, dd)
}

/// Whether `f_* : H_n(X, A) -> H_n(M, ∂M)` is nonzero.
pub fn condition_a(
    f: &SimplicialMap,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<bool, Error> {
    check_target(f, dd)?;
    let fs = induced_map(f, &source.relative, dd.relative())?;
    Ok(!fs.block(dd.dim() as isize).is_zero())
}

/// `⟨Ō_M, ψ_*(z)⟩` for `z ∈ H_n(X)`.
pub fn wong_pairing(
    psi: &SimplicialMap,
    z: &HomologyClass,
    dd: &DualityData,
) -> Result<Scalar, Error> {
    check_target(psi, dd)?;
    if !psi.source().is_absolute() {
        return Err(Error::Hypothesis(
            "the pairing formula needs A empty".into(),
        ));
    }
    if z.degree() != dd.dim() as isize {
        return Err(Error::DegreeMismatch(format!(
            "z has degree {}, the manifold has dimension {}",
            z.degree(),
            dd.dim()
        )));
    }
    let pushed = induced_map(psi, z.basis(), dd.relative())?.apply(z)?;
    dual_fundamental_cocycle(dd).evaluate(&pushed)
}

/// `g_*(f^*(Ō_M) ⌢ z)` for `|z| = 2n`.
pub fn degree2n_value(
    f: &SimplicialMap,
    g: &SimplicialMap,
    z: &HomologyClass,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<HomologyClass, Error> {
    check_target(f, dd)?;
    check_target(g, dd)?;
    let n = dd.dim();
    if z.degree() != 2 * n as isize {
        return Err(Error::DegreeMismatch(format!(
            "z has degree {}, expected {}",
            z.degree(),
            2 * n
        )));
    }
    if !z.basis().same_as(&source.relative) {
        return Err(Error::BasisMismatch("z must be a class of H(X, A)".into()));
    }
    let xi = dual_fundamental_cocycle(dd).pullback(f, &source.relative)?;
    let capped = cap(&xi, z, &source.absolute)?;
    induced_map(g, &source.absolute, dd.absolute())?.apply(&capped)
}

/// `L(g_u)` with `g_u(x) = (-1)^{(n-|x|)|u|} g_*(u × x)`, for `g : Y × (M, ∂M) -> (M, ∂M)`.
///
/// `source` is the homology of `product.pair()`, the pair `g` is defined on.
pub fn parametrized_knill(
    g: &SimplicialMap,
    u: &HomologyClass,
    product: &ProductComplex,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<HomologyClass, Error> {
    check_target(g, dd)?;
    if g.source().as_ref() != product.pair().as_ref()
        || product.second().as_ref() != dd.manifold().as_ref()
    {
        return Err(Error::BasisMismatch(
            "g must be defined on Y × (M, ∂M)".into(),
        ));
    }
    if !product.first().is_absolute() {
        return Err(Error::Hypothesis(
            "the parameter space Y must be absolute".into(),
        ));
    }
    if !source.relative.pair().as_ref().eq(product.pair().as_ref()) {
        return Err(Error::BasisMismatch(
            "source homology is not the product's".into(),
        ));
    }
    let field = dd.field();
    let n = dd.dim();
    let du = u.degree();
    let abs_m = dd.absolute();
    let gs = induced_map(g, &source.absolute, abs_m)?;
    let abs_product = product_pair(product.first().clone(), abs_m.pair().clone());
    let mut blocks = Vec::new();
    for (k, &b) in abs_m.betti_numbers().iter().enumerate() {
        let sign = field.sign((n - k) * du.max(0) as usize);
        let cols = (0..b)
            .map(|j| {
                let x = HomologyClass::basis_element(abs_m.clone(), k, j);
                let ux = cross_product(u, &x, &abs_product, &source.absolute)?;
                Ok(gs.apply(&ux)?.scaled(&sign).coords().to_vec())
            })
            .collect::<Result<Vec<_>, Error>>()?;
        blocks.push(Matrix::from_columns(
            field,
            abs_m.betti(k as isize + du),
            &cols,
        ));
    }
    let gu = GradedMap::from_blocks(abs_m.clone(), abs_m.clone(), du, blocks)?;
    lefschetz_class(&gu, dd)
}

/// `u × O_M` in `H(Y × M, Y × ∂M)`.
pub fn cross_fundamental(
    u: &HomologyClass,
    product: &ProductComplex,
    source: &PairHomology,
    dd: &DualityData,
) -> Result<HomologyClass, Error> {
    cross_product(u, dd.fundamental_class(), product, &source.relative)
}

/// Homology of `Y` for use as the parameter of [`parametrized_knill`].
pub fn parameter_homology(
    product: &ProductComplex,
    field: FieldSpec,
) -> Result<Arc<crate::homology::GradedBasis>, Error> {
    Ok(Arc::new(homology(product.first().clone(), field)?))
}

#[cfg(test)]
mod tests;
