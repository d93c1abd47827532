//! Simplicial (co)homology of pairs over a field.
//!
//! Chains of `(X, A)` are supported on the simplices of `X` not in `A`, taken
//! in the complex's (dimension, lexicographic) order. Relative cochains are the
//! cochains of `X` vanishing on `A`, which on this basis are just vectors of
//! the same length.

use std::sync::Arc;

use crate::complex::{Simplex, SimplicialMap, SimplicialPair};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::product::{staircases, ProductComplex};

/// Relative chain complex with its boundary matrices.
#[derive(Clone, Debug)]
pub struct ChainComplexRep {
    pair: Arc<SimplicialPair>,
    field: FieldSpec,
    basis: Vec<Vec<Simplex>>,
    position: Vec<Vec<Option<usize>>>,
    /// `boundaries[k]` is `∂_k : C_k -> C_{k-1}`, for `k` in `0..=top+1`.
    boundaries: Vec<Matrix>,
}

impl ChainComplexRep {
    pub fn new(pair: Arc<SimplicialPair>, field: FieldSpec) -> Self {
        let top = pair.total().dim().map_or(0, |d| d + 1);
        let mut basis = Vec::with_capacity(top);
        let mut position = Vec::with_capacity(top);
        for k in 0..top {
            let all = pair.total().simplices(k);
            let mut pos = vec![None; all.len()];
            let mut b = Vec::new();
            for (i, s) in all.iter().enumerate() {
                if !pair.sub().contains(s) {
                    pos[i] = Some(b.len());
                    b.push(s.clone());
                }
            }
            basis.push(b);
            position.push(pos);
        }
        let mut chains = ChainComplexRep {
            pair,
            field,
            basis,
            position,
            boundaries: Vec::new(),
        };
        let mut boundaries = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let rows = if k == 0 { 0 } else { chains.rank_of(k - 1) };
            let mut d = Matrix::zeros(field, rows, chains.rank_of(k));
            if k > 0 {
                for (c, s) in chains.basis(k).iter().enumerate() {
                    for i in 0..=k {
                        let face = s.face(i).expect("positive dimension");
                        if let Some(r) = chains.position_of(&face) {
                            d[(r, c)] = field.sign(i);
                        }
                    }
                }
            }
            boundaries.push(d);
        }
        chains.boundaries = boundaries;
        chains
    }

    pub fn pair(&self) -> &Arc<SimplicialPair> {
        &self.pair
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of chain-group generators in degree `k`.
    pub fn rank_of(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn basis(&self, k: usize) -> &[Simplex] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    /// Position of `s` among the relative generators; `None` if `s` is in `A` or absent.
    pub fn position_of(&self, s: &Simplex) -> Option<usize> {
        let i = self.pair.total().index_of(s)?;
        self.position[s.dim()][i]
    }

    /// `∂_k`; a zero matrix of the right shape above the top dimension.
    pub fn boundary(&self, k: usize) -> Matrix {
        match self.boundaries.get(k) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.field, self.rank_of(k - 1), 0),
        }
    }

    pub fn top(&self) -> Option<usize> {
        self.basis.len().checked_sub(1)
    }

    pub fn is_cycle(&self, k: usize, chain: &[Scalar]) -> Result<bool, Error> {
        if chain.len() != self.rank_of(k) {
            return Err(Error::DimensionMismatch(format!(
                "chain of length {} in degree {k} with {} generators",
                chain.len(),
                self.rank_of(k)
            )));
        }
        Ok(self.boundary(k).mul_vec(chain)?.iter().all(Scalar::is_zero))
    }
}

/// Homology basis with cycle representatives and dual cocycles, per degree.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    chains: ChainComplexRep,
    reps: Vec<Matrix>,
    cocycles: Vec<Matrix>,
    /// `[representatives | boundaries]`, the system solved by [`coords`].
    systems: Vec<Matrix>,
}

impl GradedBasis {
    pub fn pair(&self) -> &Arc<SimplicialPair> {
        self.chains.pair()
    }

    pub fn field(&self) -> FieldSpec {
        self.chains.field()
    }

    pub fn chains(&self) -> &ChainComplexRep {
        &self.chains
    }

    pub fn top(&self) -> Option<usize> {
        self.chains.top()
    }

    pub fn betti(&self, k: isize) -> usize {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.reps.get(k))
            .map_or(0, Matrix::cols)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.reps.iter().map(Matrix::cols).collect()
    }

    /// Cycle representatives `a_j^k` as columns.
    pub fn representatives(&self, k: usize) -> &Matrix {
        &self.reps[k]
    }

    /// Dual cocycles `x_j^k` as columns: `⟨x_i^k, a_j^k⟩ = δ_ij`, `δx_i^k = 0`.
    pub fn cocycles(&self, k: usize) -> &Matrix {
        &self.cocycles[k]
    }

    /// Same pair and field, hence the same deterministic basis.
    pub fn same_as(&self, other: &GradedBasis) -> bool {
        std::ptr::eq(self, other) || (self.field() == other.field() && self.pair() == other.pair())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti_numbers()
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `H_*(X, A; R)` with deterministic representatives.
pub fn homology(pair: Arc<SimplicialPair>, field: FieldSpec) -> Result<GradedBasis, Error> {
    let chains = ChainComplexRep::new(pair, field);
    let levels = chains.top().map_or(0, |t| t + 1);
    let mut reps = Vec::with_capacity(levels);
    let mut cocycles = Vec::with_capacity(levels);
    let mut systems = Vec::with_capacity(levels);
    for k in 0..levels {
        let cycles = chains.boundary(k).kernel_basis();
        let bounds = chains.boundary(k + 1);
        let joint = bounds.hstack(&cycles)?;
        let chosen: Vec<usize> = joint
            .rref()
            .pivots
            .into_iter()
            .filter(|&c| c >= bounds.cols())
            .collect();
        let a = joint.select_columns(&chosen);

        // x with x^T ∂_{k+1} = 0 and x^T a_j = δ_ij
        let constraints = bounds.transpose().vstack(&a.transpose())?;
        let beta = a.cols();
        let mut duals = Vec::with_capacity(beta);
        for j in 0..beta {
            let mut rhs = vec![field.zero(); bounds.cols() + beta];
            rhs[bounds.cols() + j] = field.one();
            let x = constraints
                .solve(&rhs)?
                .expect("representatives are independent modulo boundaries");
            duals.push(x);
        }
        cocycles.push(Matrix::from_columns(field, chains.rank_of(k), &duals));
        systems.push(a.hstack(&bounds)?);
        reps.push(a);
    }
    Ok(GradedBasis {
        chains,
        reps,
        cocycles,
        systems,
    })
}

/// Coordinates of a relative `k`-cycle in the homology basis.
pub fn coords(basis: &GradedBasis, k: usize, cycle: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    if !basis.chains.is_cycle(k, cycle)? {
        return Err(Error::NotACycle(k));
    }
    let Some(system) = basis.systems.get(k) else {
        return Ok(Vec::new());
    };
    let x = system
        .solve(cycle)?
        .expect("every cycle is a combination of representatives and boundaries");
    Ok(x[..basis.betti(k as isize)].to_vec())
}

/// Absolute and relative homology of one pair.
#[derive(Clone, Debug)]
pub struct PairHomology {
    pub relative: Arc<GradedBasis>,
    pub absolute: Arc<GradedBasis>,
}

impl PairHomology {
    pub fn new(pair: Arc<SimplicialPair>, field: FieldSpec) -> Result<Self, Error> {
        let relative = Arc::new(homology(pair.clone(), field)?);
        let absolute = if pair.is_absolute() {
            relative.clone()
        } else {
            Arc::new(homology(Arc::new(pair.to_absolute()), field)?)
        };
        Ok(PairHomology { relative, absolute })
    }
}

/// An element of `H_k` of some pair, as coordinates in its [`GradedBasis`].
#[derive(Clone, Debug)]
pub struct HomologyClass {
    basis: Arc<GradedBasis>,
    degree: isize,
    coords: Vec<Scalar>,
}

impl PartialEq for HomologyClass {
    fn eq(&self, other: &Self) -> bool {
        self.basis.same_as(&other.basis)
            && self.degree == other.degree
            && self.coords == other.coords
    }
}

impl HomologyClass {
    pub fn new(basis: Arc<GradedBasis>, degree: isize, coords: Vec<Scalar>) -> Result<Self, Error> {
        if coords.len() != basis.betti(degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a degree-{degree} class, Betti number {}",
                coords.len(),
                basis.betti(degree)
            )));
        }
        Ok(HomologyClass {
            basis,
            degree,
            coords,
        })
    }

    pub fn zero(basis: Arc<GradedBasis>, degree: isize) -> Self {
        let n = basis.betti(degree);
        let coords = vec![basis.field().zero(); n];
        HomologyClass {
            basis,
            degree,
            coords,
        }
    }

    /// The basis element `a_j^k`.
    pub fn basis_element(basis: Arc<GradedBasis>, k: usize, j: usize) -> Self {
        let mut c = HomologyClass::zero(basis, k as isize);
        c.coords[j] = c.basis.field().one();
        c
    }

    /// Class of a relative cycle.
    pub fn from_cycle(basis: Arc<GradedBasis>, k: usize, cycle: &[Scalar]) -> Result<Self, Error> {
        let coords = coords(&basis, k, cycle)?;
        Ok(HomologyClass {
            basis,
            degree: k as isize,
            coords,
        })
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// `Σ c_j a_j^k` as a relative chain; empty outside the chain range.
    pub fn representative(&self) -> Vec<Scalar> {
        match usize::try_from(self.degree) {
            Ok(k) if k < self.basis.reps.len() => self.basis.reps[k]
                .mul_vec(&self.coords)
                .expect("coordinate length matches"),
            _ => Vec::new(),
        }
    }

    pub fn scaled(&self, s: &Scalar) -> HomologyClass {
        HomologyClass {
            basis: self.basis.clone(),
            degree: self.degree,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &HomologyClass) -> Result<HomologyClass, Error> {
        if !self.basis.same_as(&other.basis) || self.degree != other.degree {
            return Err(Error::BasisMismatch(
                "sum of classes from different groups".into(),
            ));
        }
        Ok(HomologyClass {
            basis: self.basis.clone(),
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Coordinates rescaled into `other`'s identical basis (no-op on the numbers).
    pub fn in_basis(&self, other: &Arc<GradedBasis>) -> Result<HomologyClass, Error> {
        if !self.basis.same_as(other) {
            return Err(Error::BasisMismatch(
                "classes live on different pairs".into(),
            ));
        }
        Ok(HomologyClass {
            basis: other.clone(),
            degree: self.degree,
            coords: self.coords.clone(),
        })
    }
}

/// A graded linear map `H_k(source) -> H_{k+degree}(target)`.
#[derive(Clone, Debug)]
pub struct GradedMap {
    source: Arc<GradedBasis>,
    target: Arc<GradedBasis>,
    degree: isize,
    /// One block per source degree `0..=top`, shaped `β_{k+m}(target) × β_k(source)`.
    blocks: Vec<Matrix>,
}

impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && self.degree == other.degree
            && self.blocks == other.blocks
    }
}

impl GradedMap {
    pub fn from_blocks(
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        degree: isize,
        blocks: Vec<Matrix>,
    ) -> Result<Self, Error> {
        let levels = source.betti_numbers().len();
        if blocks.len() != levels {
            return Err(Error::DimensionMismatch(format!(
                "{} blocks for {levels} source degrees",
                blocks.len()
            )));
        }
        for (k, b) in blocks.iter().enumerate() {
            let rows = target.betti(k as isize + degree);
            if b.rows() != rows || b.cols() != source.betti(k as isize) {
                return Err(Error::DimensionMismatch(format!(
                    "block {k} is {}x{}, expected {rows}x{}",
                    b.rows(),
                    b.cols(),
                    source.betti(k as isize)
                )));
            }
        }
        Ok(GradedMap {
            source,
            target,
            degree,
            blocks,
        })
    }

    pub fn zero(source: Arc<GradedBasis>, target: Arc<GradedBasis>, degree: isize) -> Self {
        let field = source.field();
        let blocks = (0..source.betti_numbers().len())
            .map(|k| {
                Matrix::zeros(
                    field,
                    target.betti(k as isize + degree),
                    source.betti(k as isize),
                )
            })
            .collect();
        GradedMap {
            source,
            target,
            degree,
            blocks,
        }
    }

    pub fn identity(basis: Arc<GradedBasis>) -> Self {
        let field = basis.field();
        let blocks = basis
            .betti_numbers()
            .into_iter()
            .map(|b| Matrix::identity(field, b))
            .collect();
        GradedMap {
            source: basis.clone(),
            target: basis,
            degree: 0,
            blocks,
        }
    }

    pub fn source(&self) -> &Arc<GradedBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedBasis> {
        &self.target
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    /// Matrix of `H_k(source) -> H_{k+m}(target)`, zero-shaped outside the source range.
    pub fn block(&self, k: isize) -> Matrix {
        match usize::try_from(k).ok().and_then(|k| self.blocks.get(k)) {
            Some(b) => b.clone(),
            None => Matrix::zeros(
                self.source.field(),
                self.target.betti(k + self.degree),
                self.source.betti(k),
            ),
        }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn scaled(&self, s: &Scalar) -> GradedMap {
        GradedMap {
            blocks: self.blocks.iter().map(|b| b.scaled(s)).collect(),
            ..self.clone()
        }
    }

    pub fn apply(&self, class: &HomologyClass) -> Result<HomologyClass, Error> {
        if !class.basis.same_as(&self.source) {
            return Err(Error::BasisMismatch(
                "class does not live on the map's source".into(),
            ));
        }
        let coords = self.block(class.degree).mul_vec(&class.coords)?;
        HomologyClass::new(self.target.clone(), class.degree + self.degree, coords)
    }
}

/// `outer ∘ inner`.
pub fn compose(outer: &GradedMap, inner: &GradedMap) -> Result<GradedMap, Error> {
    if !inner.target.same_as(&outer.source) {
        return Err(Error::BasisMismatch(
            "inner target basis differs from outer source basis".into(),
        ));
    }
    let blocks = (0..inner.source.betti_numbers().len())
        .map(|k| {
            let k = k as isize;
            outer.block(k + inner.degree).mul(&inner.block(k))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedMap {
        source: inner.source.clone(),
        target: outer.target.clone(),
        degree: inner.degree + outer.degree,
        blocks,
    })
}

/// `f_#` on relative `k`-chains between the given chain complexes.
pub fn push_chain(
    f: &SimplicialMap,
    source: &ChainComplexRep,
    target: &ChainComplexRep,
    k: usize,
    chain: &[Scalar],
) -> Vec<Scalar> {
    let field = source.field();
    let mut out = vec![field.zero(); target.rank_of(k)];
    for (s, c) in source.basis(k).iter().zip(chain) {
        if c.is_zero() {
            continue;
        }
        if let Some((t, odd)) = f.push_simplex(s) {
            if let Some(i) = target.position_of(&t) {
                out[i] = if odd { &out[i] - c } else { &out[i] + c };
            }
        }
    }
    out
}

pub(crate) fn check_map_bases(
    f: &SimplicialMap,
    source: &GradedBasis,
    target: &GradedBasis,
) -> Result<(), Error> {
    if source.field() != target.field() {
        return Err(Error::BasisMismatch("bases over different fields".into()));
    }
    if source.pair().total() != f.source().total() {
        return Err(Error::BasisMismatch(
            "source basis is not on the map's source".into(),
        ));
    }
    if target.pair().total() != f.target().total() {
        return Err(Error::BasisMismatch(
            "target basis is not on the map's target".into(),
        ));
    }
    for s in source.pair().sub().iter() {
        let image = f.image(s);
        if !target.pair().sub().contains(&image) {
            return Err(Error::NotAPairMap {
                simplex: s.clone(),
                image,
            });
        }
    }
    Ok(())
}

/// `f_*` in every degree.
pub fn induced_map(
    f: &SimplicialMap,
    source: &Arc<GradedBasis>,
    target: &Arc<GradedBasis>,
) -> Result<GradedMap, Error> {
    check_map_bases(f, source, target)?;
    let field = source.field();
    let mut blocks = Vec::new();
    for k in 0..source.betti_numbers().len() {
        let reps = source.representatives(k);
        let mut cols = Vec::with_capacity(reps.cols());
        for j in 0..reps.cols() {
            let image = push_chain(f, source.chains(), target.chains(), k, &reps.column(j));
            cols.push(coords(target, k, &image)?);
        }
        blocks.push(Matrix::from_columns(field, target.betti(k as isize), &cols));
    }
    GradedMap::from_blocks(source.clone(), target.clone(), 0, blocks)
}

/// Chain-level shuffle product of a relative `p`-chain on the first factor and
/// a relative `q`-chain on the second.
#[allow(clippy::too_many_arguments)]
pub fn cross_chain(
    a: &ChainComplexRep,
    p: usize,
    a_chain: &[Scalar],
    b: &ChainComplexRep,
    q: usize,
    b_chain: &[Scalar],
    product: &ProductComplex,
    out: &ChainComplexRep,
) -> Vec<Scalar> {
    let field = out.field();
    let mut acc = vec![field.zero(); out.rank_of(p + q)];
    let paths = staircases(p, q);
    for (sigma, ca) in a.basis(p).iter().zip(a_chain) {
        if ca.is_zero() {
            continue;
        }
        for (tau, cb) in b.basis(q).iter().zip(b_chain) {
            if cb.is_zero() {
                continue;
            }
            let coeff = ca * cb;
            for path in &paths {
                let s = product.staircase_simplex(sigma, tau, path);
                if let Some(i) = out.position_of(&s) {
                    acc[i] = if path.odd {
                        &acc[i] - &coeff
                    } else {
                        &acc[i] + &coeff
                    };
                }
            }
        }
    }
    acc
}

/// `a × b` in the homology of the product pair.
pub fn cross_product(
    a: &HomologyClass,
    b: &HomologyClass,
    product: &ProductComplex,
    out: &Arc<GradedBasis>,
) -> Result<HomologyClass, Error> {
    if a.basis.pair() != product.first() || b.basis.pair() != product.second() {
        return Err(Error::BasisMismatch(
            "factors do not match the product".into(),
        ));
    }
    if out.pair().total() != product.pair().total() {
        return Err(Error::BasisMismatch(
            "output basis is not on the product".into(),
        ));
    }
    let degree = a.degree + b.degree;
    let (Ok(p), Ok(q)) = (usize::try_from(a.degree), usize::try_from(b.degree)) else {
        return Ok(HomologyClass::zero(out.clone(), degree));
    };
    if a.coords.is_empty() || b.coords.is_empty() {
        return Ok(HomologyClass::zero(out.clone(), degree));
    }
    let chain = cross_chain(
        a.basis.chains(),
        p,
        &a.representative(),
        b.basis.chains(),
        q,
        &b.representative(),
        product,
        out.chains(),
    );
    HomologyClass::from_cycle(out.clone(), p + q, &chain)
}
