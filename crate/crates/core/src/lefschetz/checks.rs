//! Two-sided identities of `Λ`, evaluated on every basis class.

use std::sync::Arc;

use serde::Serialize;

use crate::complex::SimplicialMap;
use crate::error::Error;
use crate::field::Scalar;
use crate::homology::{compose, induced_map, GradedMap, HomologyClass};

use super::{DualityData, Setting};

fn fractions<S: serde::Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Scalar::to_fraction_string))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassCheck {
    pub degree: usize,
    pub index: usize,
    #[serde(serialize_with = "fractions")]
    pub lhs: Vec<Scalar>,
    #[serde(serialize_with = "fractions")]
    pub rhs: Vec<Scalar>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub checks: Vec<ClassCheck>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }

    fn new(identity: &str) -> Self {
        IdentityReport {
            identity: identity.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, degree: usize, index: usize, lhs: &HomologyClass, rhs: &HomologyClass) {
        self.checks.push(ClassCheck {
            degree,
            index,
            lhs: lhs.coords().to_vec(),
            rhs: rhs.coords().to_vec(),
            equal: lhs == rhs,
        });
    }
}

fn each_basis_class(
    setting: &Setting,
    mut visit: impl FnMut(usize, usize, &HomologyClass) -> Result<(), Error>,
) -> Result<(), Error> {
    let rel = &setting.source.relative;
    for (k, &b) in rel.betti_numbers().iter().enumerate() {
        for j in 0..b {
            visit(k, j, &HomologyClass::basis_element(rel.clone(), k, j))?;
        }
    }
    Ok(())
}

/// `Λ_fg(z) = (-1)^n Λ_gf(z)`; needs `∂M = ∅`.
pub fn check_symmetry(
    f: &SimplicialMap,
    g: &SimplicialMap,
    setting: &Setting,
) -> Result<IdentityReport, Error> {
    let dd = &setting.duality;
    if !dd.manifold().is_absolute() {
        return Err(Error::Hypothesis("symmetry needs a closed manifold".into()));
    }
    let sign = dd.field().sign(dd.dim());
    let mut report = IdentityReport::new("symmetry");
    each_basis_class(setting, |k, j, z| {
        let lhs = setting.lambda(f, g, z)?;
        let rhs = setting.lambda(g, f, z)?.scaled(&sign);
        report.push(k, j, &lhs, &rhs);
        Ok(())
    })?;
    Ok(report)
}

/// `Λ_{fh,gh} = Λ_fg h_*` for `h : (X', A') -> (X, A)`.
pub fn check_naturality(
    f: &SimplicialMap,
    g: &SimplicialMap,
    h: &SimplicialMap,
    dd: &Arc<DualityData>,
) -> Result<IdentityReport, Error> {
    let base = Setting::with_duality(f, dd.clone())?;
    let fh = f.compose(h)?;
    let gh = g.compose(h)?;
    let pulled = Setting::with_duality(&fh, dd.clone())?;
    let hs = induced_map(h, &pulled.source.relative, &base.source.relative)?;
    let mut report = IdentityReport::new("naturality");
    each_basis_class(&pulled, |k, j, z| {
        let lhs = pulled.lambda(&fh, &gh, z)?;
        let rhs = base.lambda(f, g, &hs.apply(z)?)?;
        report.push(k, j, &lhs, &rhs);
        Ok(())
    })?;
    Ok(report)
}

/// `Λ_{fh,gh} τ = k · Λ_fg` for a partial transfer `τ : H(X, A) -> H(X', A')`
/// of `h : (X', A') -> (X, A)`, i.e. `h_* τ = k · Id`.
pub fn check_naturality_transfer(
    f: &SimplicialMap,
    g: &SimplicialMap,
    h: &SimplicialMap,
    tau: &GradedMap,
    k: &Scalar,
    dd: &Arc<DualityData>,
) -> Result<IdentityReport, Error> {
    let base = Setting::with_duality(f, dd.clone())?;
    let fh = f.compose(h)?;
    let gh = g.compose(h)?;
    let pulled = Setting::with_duality(&fh, dd.clone())?;
    if tau.degree() != 0
        || !tau.source().same_as(&base.source.relative)
        || !tau.target().same_as(&pulled.source.relative)
    {
        return Err(Error::Hypothesis(
            "tau must be a degree-0 map H(X, A) -> H(X', A')".into(),
        ));
    }
    let hs = induced_map(h, &pulled.source.relative, &base.source.relative)?;
    let trace = GradedMap::identity(base.source.relative.clone()).scaled(k);
    if compose(&hs, tau)? != trace {
        return Err(Error::Hypothesis(format!(
            "h_* tau is not {k} times the identity"
        )));
    }
    let mut report = IdentityReport::new("naturality with transfer");
    each_basis_class(&base, |d, j, z| {
        let lhs = pulled.lambda(&fh, &gh, &tau.apply(z)?)?;
        let rhs = base.lambda(f, g, z)?.scaled(k);
        report.push(d, j, &lhs, &rhs);
        Ok(())
    })?;
    Ok(report)
}

/// `k_* Λ_fg = Λ_{f'g'} h_*` for `h : (X, A) -> (X', A')`, an orientation
/// preserving simplicial isomorphism `k : M -> M'`, and `f' h = k f`, `g' h = k g`.
#[allow(clippy::too_many_arguments)]
pub fn check_naturality2(
    f: &SimplicialMap,
    g: &SimplicialMap,
    h: &SimplicialMap,
    k: &SimplicialMap,
    f2: &SimplicialMap,
    g2: &SimplicialMap,
    dd: &Arc<DualityData>,
    dd2: &Arc<DualityData>,
) -> Result<IdentityReport, Error> {
    if k.inverse().is_none() {
        return Err(Error::Hypothesis(
            "k is not a simplicial isomorphism".into(),
        ));
    }
    if f2.compose(h)?.images() != k.compose(f)?.images()
        || g2.compose(h)?.images() != k.compose(g)?.images()
    {
        return Err(Error::Hypothesis(
            "f' h = k f and g' h = k g must hold".into(),
        ));
    }
    let ks_rel = induced_map(k, dd.relative(), dd2.relative())?;
    if ks_rel.apply(dd.fundamental_class())?.coords() != dd2.fundamental_class().coords() {
        return Err(Error::Hypothesis(
            "k does not preserve the orientation".into(),
        ));
    }
    let base = Setting::with_duality(f, dd.clone())?;
    let image = Setting::with_duality(f2, dd2.clone())?;
    let hs = induced_map(h, &base.source.relative, &image.source.relative)?;
    let ks = induced_map(k, dd.absolute(), dd2.absolute())?;
    let mut report = IdentityReport::new("naturality II");
    each_basis_class(&base, |d, j, z| {
        let lhs = ks.apply(&base.lambda(f, g, z)?)?;
        let rhs = image.lambda(f2, g2, &hs.apply(z)?)?;
        report.push(d, j, &lhs, &rhs);
        Ok(())
    })?;
    Ok(report)
}
