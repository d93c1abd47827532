//! Abstract simplicial complexes, pairs of complexes and simplicial maps.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A simplex, stored as its strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts the vertices; rejects empty input and repeated vertices.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, Error> {
        vertices.sort_unstable();
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// Builds from vertices already known to be strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]) && !vertices.is_empty());
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one face obtained by dropping vertex `i`.
    pub fn face(&self, i: usize) -> Option<Simplex> {
        if self.0.len() < 2 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Simplex(v))
    }

    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).filter_map(|i| self.face(i))
    }

    /// Front face `[v_0, ..., v_k]`.
    pub fn front(&self, k: usize) -> Simplex {
        Simplex(self.0[..=k].to_vec())
    }

    /// Back face `[v_{d-k}, ..., v_d]`.
    pub fn back(&self, k: usize) -> Simplex {
        let d = self.dim();
        Simplex(self.0[d - k..].to_vec())
    }

    /// Every nonempty face, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite abstract simplicial complex on vertex ids `0..vertex_count`.
///
/// Simplices are grouped by dimension and kept in lexicographic order; that
/// order is the basis order of every chain group built from the complex.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("facets", &self.facets())
            .finish()
    }
}

impl SimplicialComplex {
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            simplices: Vec::new(),
            index: Vec::new(),
        }
    }

    fn from_set(vertex_count: usize, set: BTreeSet<Simplex>) -> Self {
        let mut simplices: Vec<Vec<Simplex>> = Vec::new();
        for s in set {
            let d = s.dim();
            if simplices.len() <= d {
                simplices.resize_with(d + 1, Vec::new);
            }
            simplices[d].push(s);
        }
        let index = simplices
            .iter()
            .map(|level| {
                level
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        SimplicialComplex {
            vertex_count,
            simplices,
            index,
        }
    }

    fn check_simplex(vertex_count: usize, raw: &[usize]) -> Result<Simplex, Error> {
        let s = Simplex::new(raw.to_vec())?;
        if s.vertices().iter().any(|&v| v >= vertex_count) {
            return Err(Error::InvalidSimplex(raw.to_vec()));
        }
        Ok(s)
    }

    /// The smallest complex containing the given facets.
    pub fn from_facets<V: AsRef<[usize]>>(
        vertex_count: usize,
        facets: &[V],
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for f in facets {
            let s = Self::check_simplex(vertex_count, f.as_ref())?;
            set.extend(s.all_faces());
        }
        Ok(Self::from_set(vertex_count, set))
    }

    /// Builds from an explicit simplex list, which must already be closed under faces.
    pub fn from_simplices<V: AsRef<[usize]>>(
        vertex_count: usize,
        list: &[V],
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for raw in list {
            set.insert(Self::check_simplex(vertex_count, raw.as_ref())?);
        }
        for s in &set {
            if let Some(face) = s.faces().find(|f| !set.contains(f)) {
                return Err(Error::MissingFace {
                    simplex: s.clone(),
                    face,
                });
            }
        }
        Ok(Self::from_set(vertex_count, set))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Top dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// All simplices in (dimension, lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    /// Maximal simplices, in (dimension, lexicographic) order.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut cofaces: BTreeSet<Simplex> = BTreeSet::new();
        for level in self.simplices.iter().skip(1) {
            for s in level {
                cofaces.extend(s.faces());
            }
        }
        let mut out = Vec::new();
        for s in self.iter() {
            if !cofaces.contains(s) && covered.insert(s) {
                out.push(s.clone());
            }
        }
        out
    }

    /// Alternating simplex count.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, level)| {
                if k % 2 == 0 {
                    level.len() as i64
                } else {
                    -(level.len() as i64)
                }
            })
            .sum()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> Result<(), Error> {
        match self.iter().find(|s| !other.contains(s)) {
            Some(s) => Err(Error::NotInTotal(s.clone())),
            None => Ok(()),
        }
    }
}

/// A complex `X` together with a subcomplex `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self, Error> {
        if total.vertex_count() != sub.vertex_count() {
            return Err(Error::DimensionMismatch(
                "pair complexes disagree on vertex count".into(),
            ));
        }
        sub.is_subcomplex_of(&total)?;
        Ok(SimplicialPair { total, sub })
    }

    /// `(X, ∅)`.
    pub fn absolute(total: SimplicialComplex) -> Self {
        let sub = SimplicialComplex::empty(total.vertex_count());
        SimplicialPair { total, sub }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn is_absolute(&self) -> bool {
        self.sub.is_empty()
    }

    /// The same total complex with an empty subcomplex.
    pub fn to_absolute(&self) -> SimplicialPair {
        SimplicialPair::absolute(self.total.clone())
    }

    /// Simplices of `X` not in `A` in degree `k`, in basis order.
    pub fn relative_simplices(&self, k: usize) -> impl Iterator<Item = &Simplex> {
        self.total
            .simplices(k)
            .iter()
            .filter(|s| !self.sub.contains(s))
    }
}

/// Checks that both simplex lists are closed under faces and that every
/// simplex of `sub` belongs to `total`. Reports the first violation.
pub fn validate<V: AsRef<[usize]>>(
    vertex_count: usize,
    total: &[V],
    sub: &[V],
) -> Result<SimplicialPair, Error> {
    let t = SimplicialComplex::from_simplices(vertex_count, total)?;
    let mut set = BTreeSet::new();
    for raw in sub {
        let s = Simplex::new(raw.as_ref().to_vec())?;
        if !t.contains(&s) {
            return Err(Error::NotInTotal(s));
        }
        set.insert(s);
    }
    let s = SimplicialComplex::from_simplices(
        vertex_count,
        &set.iter()
            .map(|s| s.vertices().to_vec())
            .collect::<Vec<_>>(),
    )?;
    SimplicialPair::new(t, s)
}

/// A vertex map that sends simplices onto (possibly lower-dimensional) simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<SimplicialPair>,
    target: Arc<SimplicialPair>,
    images: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(
        source: Arc<SimplicialPair>,
        target: Arc<SimplicialPair>,
        images: Vec<usize>,
    ) -> Result<Self, Error> {
        if images.len() != source.total().vertex_count() {
            return Err(Error::ImageLength {
                got: images.len(),
                expected: source.total().vertex_count(),
            });
        }
        if let Some(&v) = images.iter().find(|&&v| v >= target.total().vertex_count()) {
            return Err(Error::InvalidSimplex(vec![v]));
        }
        let map = SimplicialMap {
            source,
            target,
            images,
        };
        for s in map.source.total().iter() {
            let image = map.image(s);
            if !map.target.total().contains(&image) {
                return Err(Error::NotSimplicial {
                    simplex: s.clone(),
                    image,
                });
            }
        }
        for s in map.source.sub().iter() {
            let image = map.image(s);
            if !map.target.sub().contains(&image) {
                return Err(Error::NotAPairMap {
                    simplex: s.clone(),
                    image,
                });
            }
        }
        Ok(map)
    }

    pub fn identity(pair: Arc<SimplicialPair>) -> Self {
        let images = (0..pair.total().vertex_count()).collect();
        SimplicialMap {
            source: pair.clone(),
            target: pair,
            images,
        }
    }

    pub fn constant(
        source: Arc<SimplicialPair>,
        target: Arc<SimplicialPair>,
        vertex: usize,
    ) -> Result<Self, Error> {
        let images = vec![vertex; source.total().vertex_count()];
        SimplicialMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<SimplicialPair> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialPair> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image simplex (vertex set of the image, deduplicated).
    pub fn image(&self, s: &Simplex) -> Simplex {
        let mut v: Vec<usize> = s.vertices().iter().map(|&u| self.images[u]).collect();
        v.sort_unstable();
        v.dedup();
        Simplex::from_sorted(v)
    }

    /// Chain-level image of an oriented simplex: the target simplex and the
    /// sign of the sorting permutation, or `None` when the simplex collapses.
    pub fn push_simplex(&self, s: &Simplex) -> Option<(Simplex, bool)> {
        let mut v: Vec<usize> = s.vertices().iter().map(|&u| self.images[u]).collect();
        let mut odd = false;
        // insertion sort, tracking the parity of swaps
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Simplex::from_sorted(v), odd))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SimplicialMap) -> Result<SimplicialMap, Error> {
        if inner.target.total() != self.source.total() {
            return Err(Error::BasisMismatch(
                "composition: inner target differs from outer source".into(),
            ));
        }
        let images = inner.images.iter().map(|&v| self.images[v]).collect();
        SimplicialMap::new(inner.source.clone(), self.target.clone(), images)
    }

    /// Same vertex map with a different (compatible) source or target pair.
    pub fn reframe(
        &self,
        source: Arc<SimplicialPair>,
        target: Arc<SimplicialPair>,
    ) -> Result<SimplicialMap, Error> {
        SimplicialMap::new(source, target, self.images.clone())
    }

    /// Bijective on vertices with an inverse that is also simplicial.
    pub fn inverse(&self) -> Option<SimplicialMap> {
        let n = self.target.total().vertex_count();
        if self.images.len() != n {
            return None;
        }
        let mut inv = vec![usize::MAX; n];
        for (v, &w) in self.images.iter().enumerate() {
            if inv[w] != usize::MAX {
                return None;
            }
            inv[w] = v;
        }
        SimplicialMap::new(self.target.clone(), self.source.clone(), inv).ok()
    }
}

/// `∂M`: the closure of the codimension-one faces lying in exactly one top simplex.
pub fn boundary_subcomplex(m: &SimplicialComplex) -> Result<SimplicialComplex, Error> {
    let Some(n) = m.dim() else {
        return Ok(SimplicialComplex::empty(m.vertex_count()));
    };
    if n == 0 {
        return Ok(SimplicialComplex::empty(m.vertex_count()));
    }
    let mut cofaces = vec![0usize; m.count(n - 1)];
    for s in m.simplices(n) {
        for f in s.faces() {
            let i = m.index_of(&f).expect("closed under faces");
            cofaces[i] += 1;
        }
    }
    if let Some(i) = cofaces.iter().position(|&c| c >= 3) {
        return Err(Error::NotPseudoManifold(m.simplices(n - 1)[i].clone()));
    }
    let facets: Vec<Vec<usize>> = m
        .simplices(n - 1)
        .iter()
        .zip(&cofaces)
        .filter(|(_, &c)| c == 1)
        .map(|(s, _)| s.vertices().to_vec())
        .collect();
    SimplicialComplex::from_facets(m.vertex_count(), &facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap()
    }

    #[test]
    fn simplex_normalizes() {
        assert_eq!(Simplex::new(vec![2, 0, 1]).unwrap().vertices(), &[0, 1, 2]);
        assert!(Simplex::new(vec![]).is_err());
        assert!(Simplex::new(vec![1, 1]).is_err());
        let s = Simplex::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(s.front(1).vertices(), &[0, 1]);
        assert_eq!(s.back(2).vertices(), &[1, 2, 3]);
    }

    #[test]
    fn closure_counts() {
        let t = triangle();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (3, 3, 1));
        assert_eq!(t.euler_characteristic(), 1);
        assert_eq!(t.facets(), vec![Simplex::new(vec![0, 1, 2]).unwrap()]);
    }

    #[test]
    fn validate_reports_missing_face() {
        let full: Vec<Vec<usize>> = vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 1, 2],
        ];
        assert!(validate(3, &full, &[]).is_ok());
        let missing: Vec<Vec<usize>> = full.iter().filter(|s| **s != vec![0, 1]).cloned().collect();
        match validate(3, &missing, &[]) {
            Err(Error::MissingFace { face, .. }) => assert_eq!(face.vertices(), &[0, 1]),
            other => panic!("unexpected {other:?}"),
        }
        match validate(4, &full, &[vec![3]]) {
            Err(Error::NotInTotal(s)) => assert_eq!(s.vertices(), &[3]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn boundary_examples() {
        let s2 = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
            .unwrap();
        assert!(boundary_subcomplex(&s2).unwrap().is_empty());

        let path = SimplicialComplex::from_facets(3, &[[0, 1], [1, 2]]).unwrap();
        let b = boundary_subcomplex(&path).unwrap();
        assert_eq!(b.simplices(0).len(), 2);
        assert_eq!(
            b.facets(),
            vec![
                Simplex::new(vec![0]).unwrap(),
                Simplex::new(vec![2]).unwrap()
            ]
        );

        let b = boundary_subcomplex(&triangle()).unwrap();
        assert_eq!(b.count(1), 3);
        assert_eq!(b.dim(), Some(1));

        let book = SimplicialComplex::from_facets(5, &[[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(matches!(
            boundary_subcomplex(&book),
            Err(Error::NotPseudoManifold(_))
        ));
    }

    #[test]
    fn maps_check_simpliciality_and_pairs() {
        let c3 = Arc::new(SimplicialPair::absolute(
            SimplicialComplex::from_facets(3, &[[0, 1], [1, 2], [0, 2]]).unwrap(),
        ));
        let path = SimplicialComplex::from_facets(4, &[[0, 1], [1, 2], [2, 3]]).unwrap();
        let path = Arc::new(SimplicialPair::absolute(path));
        // 0 and 3 are not adjacent in the path
        assert!(matches!(
            SimplicialMap::new(c3.clone(), path.clone(), vec![0, 1, 3]),
            Err(Error::NotSimplicial { .. })
        ));
        let ok = SimplicialMap::new(c3.clone(), path, vec![0, 1, 1]).unwrap();
        assert_eq!(ok.push_simplex(&Simplex::new(vec![1, 2]).unwrap()), None);

        let rot = SimplicialMap::new(c3.clone(), c3.clone(), vec![1, 2, 0]).unwrap();
        let (img, odd) = rot
            .push_simplex(&Simplex::new(vec![1, 2]).unwrap())
            .unwrap();
        assert_eq!(img.vertices(), &[0, 2]);
        assert!(odd);
        let back = rot.inverse().unwrap();
        assert_eq!(back.compose(&rot).unwrap(), SimplicialMap::identity(c3));
    }
}
