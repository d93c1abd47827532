//! Ordered (staircase) triangulation of a product of complexes.
//!
//! The vertex `(u, w)` of `X × Y` gets id `u * |V(Y)| + w`. A simplex of the
//! product is a chain `(u_0, w_0) <= ... <= (u_d, w_d)` that is strictly
//! increasing and whose coordinates span simplices of `X` and `Y`. The top
//! simplices over `σ × τ` are the monotone lattice paths through the
//! `(dim σ + 1) × (dim τ + 1)` grid.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::complex::{Simplex, SimplicialComplex, SimplicialMap, SimplicialPair};
use crate::error::Error;

/// A monotone lattice path from `(0,0)` to `(p,q)` and the sign of the
/// corresponding `(p,q)`-shuffle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub steps: Vec<(usize, usize)>,
    pub odd: bool,
}

/// All `(p,q)`-shuffles, in lexicographic order of their step sequences
/// (first-factor steps before second-factor steps).
pub fn staircases(p: usize, q: usize) -> Vec<Staircase> {
    fn go(
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        path: &mut Vec<(usize, usize)>,
        inv: usize,
        out: &mut Vec<Staircase>,
    ) {
        if i == p && j == q {
            out.push(Staircase {
                steps: path.clone(),
                odd: inv % 2 == 1,
            });
            return;
        }
        if i < p {
            path.push((i + 1, j));
            // a first-factor step crosses every second-factor step already taken
            go(i + 1, j, p, q, path, inv + j, out);
            path.pop();
        }
        if j < q {
            path.push((i, j + 1));
            go(i, j + 1, p, q, path, inv, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path = vec![(0, 0)];
    go(0, 0, p, q, &mut path, 0, &mut out);
    out
}

/// A product pair `(X, A) × (Y, B) = (X × Y, X × B ∪ A × Y)` with its projections.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    first: Arc<SimplicialPair>,
    second: Arc<SimplicialPair>,
    pair: Arc<SimplicialPair>,
    proj_first: SimplicialMap,
    proj_second: SimplicialMap,
}

impl ProductComplex {
    pub fn first(&self) -> &Arc<SimplicialPair> {
        &self.first
    }

    pub fn second(&self) -> &Arc<SimplicialPair> {
        &self.second
    }

    pub fn pair(&self) -> &Arc<SimplicialPair> {
        &self.pair
    }

    pub fn proj_first(&self) -> &SimplicialMap {
        &self.proj_first
    }

    pub fn proj_second(&self) -> &SimplicialMap {
        &self.proj_second
    }

    pub fn vertex(&self, u: usize, w: usize) -> usize {
        u * self.second.total().vertex_count() + w
    }

    /// Staircase simplex of `σ × τ` along `path`.
    pub fn staircase_simplex(&self, sigma: &Simplex, tau: &Simplex, path: &Staircase) -> Simplex {
        let v = path
            .steps
            .iter()
            .map(|&(i, j)| self.vertex(sigma.vertices()[i], tau.vertices()[j]))
            .collect();
        Simplex::from_sorted(v)
    }

    /// Inclusion of the fiber `{u} × Y`.
    pub fn fiber_inclusion(&self, u: usize) -> Result<SimplicialMap, Error> {
        let images = (0..self.second.total().vertex_count())
            .map(|w| self.vertex(u, w))
            .collect();
        SimplicialMap::new(
            Arc::new(self.second.to_absolute()),
            Arc::new(self.pair.to_absolute()),
            images,
        )
    }
}

fn product_simplices(x: &SimplicialComplex, y: &SimplicialComplex, ny: usize) -> BTreeSet<Simplex> {
    let mut set = BTreeSet::new();
    for sigma in x.facets() {
        for tau in y.facets() {
            for path in staircases(sigma.dim(), tau.dim()) {
                let v: Vec<usize> = path
                    .steps
                    .iter()
                    .map(|&(i, j)| sigma.vertices()[i] * ny + tau.vertices()[j])
                    .collect();
                set.extend(Simplex::from_sorted(v).all_faces());
            }
        }
    }
    set
}

fn complex_from(vc: usize, set: BTreeSet<Simplex>) -> SimplicialComplex {
    let list: Vec<Vec<usize>> = set.into_iter().map(|s| s.vertices().to_vec()).collect();
    SimplicialComplex::from_simplices(vc, &list).expect("product is closed under faces")
}

/// `(X × Y, pr_X, pr_Y)` for absolute complexes.
pub fn product_complex(x: &SimplicialComplex, y: &SimplicialComplex) -> ProductComplex {
    product_pair(
        Arc::new(SimplicialPair::absolute(x.clone())),
        Arc::new(SimplicialPair::absolute(y.clone())),
    )
}

/// `(X, A) × (Y, B)`.
pub fn product_pair(first: Arc<SimplicialPair>, second: Arc<SimplicialPair>) -> ProductComplex {
    let nx = first.total().vertex_count();
    let ny = second.total().vertex_count();
    let vc = nx * ny;
    let total = complex_from(vc, product_simplices(first.total(), second.total(), ny));
    let mut sub = product_simplices(first.total(), second.sub(), ny);
    sub.extend(product_simplices(first.sub(), second.total(), ny));
    let sub = complex_from(vc, sub);
    let pair = Arc::new(SimplicialPair::new(total, sub).expect("sub-products lie in the product"));

    // onto (X, X) when the other factor has a subcomplex, since X × B need not land in A
    let onto = |factor: &Arc<SimplicialPair>, other: &Arc<SimplicialPair>| {
        if other.is_absolute() {
            factor.clone()
        } else {
            let t = factor.total().clone();
            Arc::new(
                SimplicialPair::new(t.clone(), t).expect("a complex is a subcomplex of itself"),
            )
        }
    };
    let proj_first = SimplicialMap::new(
        pair.clone(),
        onto(&first, &second),
        (0..vc).map(|v| v / ny.max(1)).collect(),
    )
    .expect("projection is simplicial");
    let proj_second = SimplicialMap::new(
        pair.clone(),
        onto(&second, &first),
        (0..vc).map(|v| v % ny.max(1)).collect(),
    )
    .expect("projection is simplicial");
    ProductComplex {
        first,
        second,
        pair,
        proj_first,
        proj_second,
    }
}
