//! Coherent orientation of a pseudo-manifold and its fundamental class.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::complex::{boundary_subcomplex, Simplex, SimplicialPair};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};

/// `O_M` as a signed sum of the top simplices of `(M, ∂M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFundamentalClass {
    manifold: Arc<SimplicialPair>,
    degree: usize,
    signs: Vec<i8>,
}

impl OrientedFundamentalClass {
    pub fn manifold(&self) -> &Arc<SimplicialPair> {
        &self.manifold
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `±1` per top simplex, in the complex's simplex order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Coefficient vector over the top simplices.
    pub fn chain(&self, field: FieldSpec) -> Vec<Scalar> {
        self.signs
            .iter()
            .map(|&s| field.from_i64(s as i64))
            .collect()
    }

    /// Sign of `top` in the class, if it is a top simplex.
    pub fn sign_of(&self, top: &Simplex) -> Option<i8> {
        let i = self.manifold.total().index_of(top)?;
        (top.dim() == self.degree).then(|| self.signs[i])
    }
}

/// Incidence number `[σ : σ∖v_i] = (-1)^i`.
fn incidence(i: usize) -> i8 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Orients every top simplex coherently, starting from the lexicographically
/// smallest one with its ascending vertex order.
pub fn fundamental_class(m: Arc<SimplicialPair>) -> Result<OrientedFundamentalClass, Error> {
    let total = m.total();
    let n = total.dim().ok_or(Error::Empty)?;
    let tops = total.simplices(n);

    let mut in_top = vec![Vec::<bool>::new(); n];
    for (k, flags) in in_top.iter_mut().enumerate() {
        *flags = vec![false; total.count(k)];
    }
    for t in tops {
        for f in t.all_faces() {
            if f.dim() < n {
                in_top[f.dim()][total.index_of(&f).unwrap()] = true;
            }
        }
    }
    for (k, flags) in in_top.iter().enumerate() {
        if let Some(i) = flags.iter().position(|&b| !b) {
            if n == 0 {
                return Err(Error::Disconnected);
            }
            return Err(Error::NotPure(total.simplices(k)[i].clone()));
        }
    }

    let boundary = boundary_subcomplex(total)?;
    if &boundary != m.sub() {
        return Err(Error::BoundaryMismatch);
    }

    // codimension-one face -> (top simplex, position of the dropped vertex)
    let mut cofaces: Vec<Vec<(usize, usize)>> =
        vec![Vec::new(); if n > 0 { total.count(n - 1) } else { 0 }];
    if n > 0 {
        for (ti, t) in tops.iter().enumerate() {
            for i in 0..=n {
                let f = t.face(i).unwrap();
                cofaces[total.index_of(&f).unwrap()].push((ti, i));
            }
        }
    }

    let mut signs = vec![0i8; tops.len()];
    signs[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(ti) = queue.pop_front() {
        if n == 0 {
            break;
        }
        let t = &tops[ti];
        for i in 0..=n {
            let f = t.face(i).unwrap();
            let fi = total.index_of(&f).unwrap();
            for &(other, j) in &cofaces[fi] {
                if other == ti {
                    continue;
                }
                // the shared face must cancel in the boundary
                let want = -signs[ti] * incidence(i) * incidence(j);
                match signs[other] {
                    0 => {
                        signs[other] = want;
                        queue.push_back(other);
                    }
                    s if s != want => return Err(Error::NonOrientable(f)),
                    _ => {}
                }
            }
        }
    }
    if signs.contains(&0) {
        return Err(Error::Disconnected);
    }

    Ok(OrientedFundamentalClass {
        manifold: m,
        degree: n,
        signs,
    })
}
