//! Exact geometric coincidence search.
//!
//! Target vertices are embedded as standard basis vectors, so two points of the
//! realization of `M` agree exactly when their barycentric coordinate vectors
//! agree. For a source simplex `σ = [v_0..v_d]` a coincidence inside `σ` is a
//! point `λ >= 0`, `Σλ = 1` with `Σ λ_i e_{f(v_i)} = Σ λ_i e_{g(v_i)}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialMap};
use crate::error::Error;
use crate::feasibility::{linear_feasibility, Feasibility};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoincidenceVerdict {
    /// `f(x) = g(x)` at the point of `simplex` with the given barycentric coordinates.
    Witness {
        simplex: Simplex,
        barycentric: Vec<Scalar>,
        in_subcomplex: bool,
    },
    /// Every source simplex was checked and none contains a coincidence.
    Disjoint { simplices_checked: usize },
}

impl CoincidenceVerdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, CoincidenceVerdict::Witness { .. })
    }
}

#[derive(Serialize)]
struct VerdictDoc<'a> {
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplex: Option<&'a Simplex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    barycentric: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_subcomplex: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplices_checked: Option<usize>,
}

impl Serialize for CoincidenceVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let doc = match self {
            CoincidenceVerdict::Witness {
                simplex,
                barycentric,
                in_subcomplex,
            } => VerdictDoc {
                status: "witness",
                simplex: Some(simplex),
                barycentric: Some(barycentric.iter().map(Scalar::to_fraction_string).collect()),
                in_subcomplex: Some(*in_subcomplex),
                simplices_checked: None,
            },
            CoincidenceVerdict::Disjoint { simplices_checked } => VerdictDoc {
                status: "disjoint-certificate",
                simplex: None,
                barycentric: None,
                in_subcomplex: None,
                simplices_checked: Some(*simplices_checked),
            },
        };
        doc.serialize(s)
    }
}

fn same_domain(f: &SimplicialMap, g: &SimplicialMap) -> Result<(), Error> {
    if f.source().total() != g.source().total() || f.target().total() != g.target().total() {
        return Err(Error::BasisMismatch(
            "maps must share source and target".into(),
        ));
    }
    Ok(())
}

/// Point of `σ` where `f` and `g` agree, if any.
pub fn coincidence_in_simplex(
    f: &SimplicialMap,
    g: &SimplicialMap,
    simplex: &Simplex,
) -> Result<Option<Vec<Scalar>>, Error> {
    let q = FieldSpec::Rationals;
    let verts = simplex.vertices();
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in verts {
        let next = rows.len();
        rows.entry(f.images()[v]).or_insert(next);
        let next = rows.len();
        rows.entry(g.images()[v]).or_insert(next);
    }
    let r = rows.len();
    let mut eq = Matrix::zeros(q, r + 1, verts.len());
    for (i, &v) in verts.iter().enumerate() {
        let fr = rows[&f.images()[v]];
        let gr = rows[&g.images()[v]];
        eq[(fr, i)] = &eq[(fr, i)] + &q.one();
        eq[(gr, i)] = &eq[(gr, i)] - &q.one();
        eq[(r, i)] = q.one();
    }
    let mut b = vec![q.zero(); r + 1];
    b[r] = q.one();
    let nonneg: Vec<usize> = (0..verts.len()).collect();
    Ok(match linear_feasibility(&eq, &b, &nonneg)? {
        Feasibility::Point(x) => Some(x),
        Feasibility::Infeasible => None,
    })
}

/// Searches source simplices in (dimension, lexicographic) order and returns
/// the first coincidence, or a certificate that there is none.
pub fn coincidence_witness(
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<CoincidenceVerdict, Error> {
    same_domain(f, g)?;
    let source = f.source();
    let mut checked = 0;
    for s in source.total().iter() {
        checked += 1;
        if let Some(barycentric) = coincidence_in_simplex(f, g, s)? {
            return Ok(CoincidenceVerdict::Witness {
                simplex: s.clone(),
                barycentric,
                in_subcomplex: source.sub().contains(s),
            });
        }
    }
    Ok(CoincidenceVerdict::Disjoint {
        simplices_checked: checked,
    })
}

/// Image of the point with barycentric coordinates `lambda` on `simplex`,
/// as a coordinate vector on the target vertices.
pub fn affine_image(map: &SimplicialMap, simplex: &Simplex, lambda: &[Scalar]) -> Vec<Scalar> {
    let q = FieldSpec::Rationals;
    let mut out = vec![q.zero(); map.target().total().vertex_count()];
    for (&v, l) in simplex.vertices().iter().zip(lambda) {
        let w = map.images()[v];
        out[w] = &out[w] + l;
    }
    out
}

/// Checks a witness by substitution.
pub fn verify_witness(
    f: &SimplicialMap,
    g: &SimplicialMap,
    simplex: &Simplex,
    lambda: &[Scalar],
) -> bool {
    let q = FieldSpec::Rationals;
    lambda.len() == simplex.vertices().len()
        && lambda.iter().all(|l| l.signum().is_some_and(|s| s >= 0))
        && lambda.iter().fold(q.zero(), |acc, l| &acc + l) == q.one()
        && affine_image(f, simplex, lambda) == affine_image(g, simplex, lambda)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::complex::{SimplicialComplex, SimplicialPair};

    fn circle(n: usize) -> Arc<SimplicialPair> {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Arc::new(SimplicialPair::absolute(
            SimplicialComplex::from_facets(n, &edges).unwrap(),
        ))
    }

    #[test]
    fn equal_maps_meet_at_first_vertex() {
        let c = circle(3);
        let id = SimplicialMap::identity(c);
        match coincidence_witness(&id, &id).unwrap() {
            CoincidenceVerdict::Witness {
                simplex,
                barycentric,
                ..
            } => {
                assert_eq!(simplex.vertices(), &[0]);
                assert!(verify_witness(&id, &id, &simplex, &barycentric));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn constants_at_distinct_vertices_are_disjoint() {
        let pts = Arc::new(SimplicialPair::absolute(
            SimplicialComplex::from_facets(2, &[[0], [1]]).unwrap(),
        ));
        let f = SimplicialMap::constant(pts.clone(), pts.clone(), 0).unwrap();
        let g = SimplicialMap::constant(pts.clone(), pts, 1).unwrap();
        assert_eq!(
            coincidence_witness(&f, &g).unwrap(),
            CoincidenceVerdict::Disjoint {
                simplices_checked: 2
            }
        );
    }

    #[test]
    fn antipodal_rotation_on_hexagon() {
        let c6 = circle(6);
        let id = SimplicialMap::identity(c6.clone());
        let rot =
            SimplicialMap::new(c6.clone(), c6, (0..6).map(|i| (i + 3) % 6).collect()).unwrap();
        assert_eq!(
            coincidence_witness(&id, &rot).unwrap(),
            CoincidenceVerdict::Disjoint {
                simplices_checked: 12
            }
        );
    }

    #[test]
    fn coincidence_in_edge_interior() {
        // f = id and g = reflection 0<->1 on an edge meet at the midpoint
        let e = Arc::new(SimplicialPair::absolute(
            SimplicialComplex::from_facets(2, &[[0, 1]]).unwrap(),
        ));
        let id = SimplicialMap::identity(e.clone());
        let flip = SimplicialMap::new(e.clone(), e, vec![1, 0]).unwrap();
        match coincidence_witness(&id, &flip).unwrap() {
            CoincidenceVerdict::Witness {
                simplex,
                barycentric,
                ..
            } => {
                assert_eq!(simplex.vertices(), &[0, 1]);
                let half = Scalar::parse_in(FieldSpec::Rationals, "1/2").unwrap();
                assert_eq!(barycentric, vec![half.clone(), half]);
                assert!(verify_witness(&id, &flip, &simplex, &barycentric));
            }
            v => panic!("{v:?}"),
        }
    }
}
