//! Cohomology classes and the chain-level cap product.

use std::sync::Arc;

use crate::complex::SimplicialMap;
use crate::error::Error;
use crate::field::Scalar;
use crate::homology::{check_map_bases, GradedBasis, HomologyClass};

/// Sign of `ξ ⌢ σ` for `ξ` of degree `p` and a `(p+q)`-simplex `σ`.
///
/// `ξ ⌢ σ = (-1)^{pq} ξ(back p-face of σ) · (front q-face of σ)`. On homology
/// this agrees with the front-face convention `ξ(front) · back` without sign.
fn cap_sign_is_odd(p: usize, q: usize) -> bool {
    (p * q) % 2 == 1
}

/// A class of `H^k(P, Q)` with a cocycle representative vanishing on `Q`.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    basis: Arc<GradedBasis>,
    degree: usize,
    cochain: Vec<Scalar>,
    coords: Vec<Scalar>,
}

impl PartialEq for CohomologyClass {
    fn eq(&self, other: &Self) -> bool {
        self.basis.same_as(&other.basis)
            && self.degree == other.degree
            && self.coords == other.coords
    }
}

impl CohomologyClass {
    /// `Σ c_j x_j^k` in the dual basis of `basis`.
    pub fn from_coords(
        basis: Arc<GradedBasis>,
        k: usize,
        coords: Vec<Scalar>,
    ) -> Result<Self, Error> {
        if coords.len() != basis.betti(k as isize) {
            return Err(Error::DimensionMismatch(format!(
                "{} dual coordinates in degree {k}, Betti number {}",
                coords.len(),
                basis.betti(k as isize)
            )));
        }
        let cochain = basis.cocycles(k).mul_vec(&coords)?;
        Ok(CohomologyClass {
            basis,
            degree: k,
            cochain,
            coords,
        })
    }

    /// The dual basis element `x_j^k`.
    pub fn dual_basis_element(basis: Arc<GradedBasis>, k: usize, j: usize) -> Self {
        let field = basis.field();
        let mut c = vec![field.zero(); basis.betti(k as isize)];
        c[j] = field.one();
        CohomologyClass::from_coords(basis, k, c).expect("index within Betti number")
    }

    /// Class of a relative cocycle, given on the relative generators of degree `k`.
    pub fn from_cocycle(
        basis: Arc<GradedBasis>,
        k: usize,
        cochain: Vec<Scalar>,
    ) -> Result<Self, Error> {
        let chains = basis.chains();
        if cochain.len() != chains.rank_of(k) {
            return Err(Error::DimensionMismatch(format!(
                "cochain of length {} in degree {k}",
                cochain.len()
            )));
        }
        let coboundary = chains.boundary(k + 1).transpose().mul_vec(&cochain)?;
        if !coboundary.iter().all(Scalar::is_zero) {
            return Err(Error::NotACycle(k));
        }
        let reps = basis.representatives(k);
        let coords = reps.transpose().mul_vec(&cochain)?;
        Ok(CohomologyClass {
            basis,
            degree: k,
            cochain,
            coords,
        })
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cochain(&self) -> &[Scalar] {
        &self.cochain
    }

    /// Coordinates in the dual basis `{x_j^k}`.
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Kronecker pairing `⟨ξ, z⟩`.
    pub fn evaluate(&self, z: &HomologyClass) -> Result<Scalar, Error> {
        if !z.basis().same_as(&self.basis) || z.degree() != self.degree as isize {
            return Err(Error::DegreeMismatch(format!(
                "pairing a degree-{} cocycle with a degree-{} class",
                self.degree,
                z.degree()
            )));
        }
        Ok(dot(&self.cochain, &z.representative()))
    }

    /// `f^*ξ` on `source`, where `(f^#ξ)(σ) = ξ(f_#σ)`.
    pub fn pullback(
        &self,
        f: &SimplicialMap,
        source: &Arc<GradedBasis>,
    ) -> Result<CohomologyClass, Error> {
        check_map_bases(f, source, &self.basis)?;
        let field = source.field();
        let k = self.degree;
        let target = self.basis.chains();
        let cochain: Vec<Scalar> = source
            .chains()
            .basis(k)
            .iter()
            .map(|s| match f.push_simplex(s) {
                Some((t, odd)) => match target.position_of(&t) {
                    Some(i) if odd => -&self.cochain[i],
                    Some(i) => self.cochain[i].clone(),
                    None => field.zero(),
                },
                None => field.zero(),
            })
            .collect();
        CohomologyClass::from_cocycle(source.clone(), k, cochain)
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let field = a.first().or(b.first()).map(Scalar::field);
    let Some(field) = field else {
        // both empty: the pairing of trivial groups
        return crate::field::FieldSpec::Rationals.zero();
    };
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(field.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `ξ ⌢ z : H^p(P, Q) ⊗ H_{p+q}(P, Q) -> H_q(P)`, with the result expressed in `out`.
pub fn cap(
    xi: &CohomologyClass,
    z: &HomologyClass,
    out: &Arc<GradedBasis>,
) -> Result<HomologyClass, Error> {
    if !xi.basis.same_as(z.basis()) {
        return Err(Error::BasisMismatch(
            "cap of classes on different pairs".into(),
        ));
    }
    if out.pair().total() != xi.basis.pair().total() || !out.pair().is_absolute() {
        return Err(Error::BasisMismatch(
            "cap products land in the absolute homology of the same complex".into(),
        ));
    }
    let p = xi.degree;
    let total = z.degree();
    if total < p as isize {
        return Err(Error::DegreeMismatch(format!(
            "cap of a degree-{p} class with a degree-{total} class"
        )));
    }
    let q = (total as usize) - p;
    let field = out.field();
    let chain = z.representative();
    let src = z.basis().chains();
    let mut acc = vec![field.zero(); out.chains().rank_of(q)];
    for (sigma, c) in src.basis(p + q).iter().zip(&chain) {
        if c.is_zero() {
            continue;
        }
        let Some(bi) = src.position_of(&sigma.back(p)) else {
            continue;
        };
        let w = &xi.cochain[bi];
        if w.is_zero() {
            continue;
        }
        let fi = out
            .chains()
            .position_of(&sigma.front(q))
            .expect("faces of simplices are simplices");
        let term = c * w;
        acc[fi] = if cap_sign_is_odd(p, q) {
            &acc[fi] - &term
        } else {
            &acc[fi] + &term
        };
    }
    HomologyClass::from_cycle(out.clone(), q, &acc)
}
