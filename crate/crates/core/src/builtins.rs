//! Small triangulations shipped with the crate.

use std::sync::Arc;

use crate::complex::{boundary_subcomplex, SimplicialComplex, SimplicialMap, SimplicialPair};
use crate::error::Error;
use crate::product::{product_complex, ProductComplex};

/// Names accepted by [`pair`], in a fixed order.
pub const NAMES: &[&str] = &[
    "point", "c3", "circle", "c6", "interval", "disk", "s2", "s3", "torus", "genus2",
];

/// Names accepted by [`map`].
pub const MAP_NAMES: &[&str] = &["torus-proj1", "torus-proj2", "double-wrap"];

fn manifold(c: SimplicialComplex) -> SimplicialPair {
    let sub = boundary_subcomplex(&c).expect("builtins are pseudo-manifolds");
    SimplicialPair::new(c, sub).expect("the boundary is a subcomplex")
}

pub fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
    SimplicialComplex::from_facets(n, &edges).expect("cycle graph")
}

/// Boundary of the `d`-simplex on vertices `0..=d`.
pub fn sphere(d: usize) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..=d)
        .map(|skip| (0..=d).filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::from_facets(d + 1, &facets).expect("boundary of a simplex")
}

/// `C_3 × C_3` with both projections.
pub fn torus() -> ProductComplex {
    let c = cycle(3);
    product_complex(&c, &c)
}

/// Connected sum of two copies of the 9-vertex torus along a triangle.
pub fn genus2() -> SimplicialComplex {
    let t = torus();
    let tris = t.pair().total().facets();
    let removed = tris[0].clone();
    let glued = removed.vertices();
    let mut relabel = [0; 9];
    let mut next = 9;
    for (v, slot) in relabel.iter_mut().enumerate() {
        *slot = match glued.iter().position(|&g| g == v) {
            Some(i) => glued[i],
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for s in tris.iter().filter(|s| **s != removed) {
        facets.push(s.vertices().to_vec());
        facets.push(s.vertices().iter().map(|&v| relabel[v]).collect());
    }
    SimplicialComplex::from_facets(next, &facets).expect("connected sum")
}

/// A builtin pair; manifolds come with their boundary as the subcomplex.
pub fn pair(name: &str) -> Result<SimplicialPair, Error> {
    let c = match name {
        "point" => SimplicialComplex::from_facets(1, &[[0]])?,
        "c3" | "circle" => cycle(3),
        "c6" => cycle(6),
        "interval" => SimplicialComplex::from_facets(3, &[[0, 1], [1, 2]])?,
        "disk" => SimplicialComplex::from_facets(3, &[[0, 1, 2]])?,
        "s2" => sphere(3),
        "s3" => sphere(4),
        "torus" => return Ok(torus().pair().as_ref().clone()),
        "genus2" => genus2(),
        _ => return Err(Error::Parse(format!("unknown builtin complex '{name}'"))),
    };
    Ok(manifold(c))
}

/// A builtin map between builtin pairs.
pub fn map(name: &str) -> Result<SimplicialMap, Error> {
    match name {
        "torus-proj1" => Ok(reframed(torus().proj_first(), "c3")),
        "torus-proj2" => Ok(reframed(torus().proj_second(), "c3")),
        "double-wrap" => {
            let c6 = Arc::new(pair("c6")?);
            let c3 = Arc::new(pair("c3")?);
            SimplicialMap::new(c6, c3, (0..6).map(|i| i % 3).collect())
        }
        _ => Err(Error::Parse(format!("unknown builtin map '{name}'"))),
    }
}

fn reframed(m: &SimplicialMap, target: &str) -> SimplicialMap {
    let target = Arc::new(pair(target).expect("builtin"));
    m.reframe(m.source().clone(), target)
        .expect("same complexes")
}
