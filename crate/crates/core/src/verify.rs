//! Seeded invariant suite over the builtin corpus and random simplicial maps.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::builtins;
use crate::complex::{Simplex, SimplicialMap, SimplicialPair};
use crate::document::ComplexDocument;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::homology::{compose, induced_map, GradedMap, HomologyClass};
use crate::lefschetz::{
    check_naturality, check_naturality2, check_naturality_transfer, check_symmetry, condition_a,
    cross_fundamental, degree2n_value, dual_fundamental_cocycle, lefschetz_class,
    parameter_homology, parametrized_knill, point_coefficient, transfer, wong_pairing, DualityData,
    IdentityReport, Setting,
};
use crate::oracle::{coincidence_witness, CoincidenceVerdict};
use crate::product::{product_pair, ProductComplex};

const Q: FieldSpec = FieldSpec::Rationals;

pub const DEFAULT_TRIALS: usize = 60;

/// Suite names, in report order.
pub const SUITES: &[&str] = &[
    "calibration",
    "duality",
    "symmetry",
    "naturality",
    "naturality-transfer",
    "naturality-ii",
    "transfer-trace",
    "triviality",
    "cond-a",
    "coincidence-soundness",
    "degree-2n",
    "knill",
    "wong",
    "sphere-triviality",
];

/// A named manifold pair with its expected Euler characteristic, when closed.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub pair: Arc<SimplicialPair>,
    pub euler: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn builtin() -> Self {
        let euler = |name: &str| match name {
            "point" => Some(1),
            "c3" | "c6" | "torus" | "s3" => Some(0),
            "s2" => Some(2),
            "genus2" => Some(-2),
            _ => None,
        };
        let entries = [
            "point", "c3", "c6", "interval", "disk", "s2", "s3", "torus", "genus2",
        ]
        .iter()
        .map(|&name| CorpusEntry {
            name: name.into(),
            pair: Arc::new(builtins::pair(name).expect("builtin")),
            euler: euler(name),
        })
        .collect();
        Corpus { entries }
    }

    /// The builtin corpus with entries replaced or added by `docs`, matched by name.
    pub fn with_documents(docs: &[ComplexDocument]) -> Result<Self, Error> {
        let mut corpus = Corpus::builtin();
        for doc in docs {
            let pair = Arc::new(doc.to_pair()?);
            match corpus.entries.iter_mut().find(|e| e.name == doc.name) {
                Some(e) => e.pair = pair,
                None => corpus.entries.push(CorpusEntry {
                    name: doc.name.clone(),
                    pair,
                    euler: None,
                }),
            }
        }
        Ok(corpus)
    }

    pub fn get(&self, name: &str) -> Option<&Arc<SimplicialPair>> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.pair)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn failed_suites(&self) -> Vec<&'static str> {
        self.suites
            .iter()
            .filter(|s| !s.passed())
            .map(|s| s.name)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "verify seed={} trials={}", self.seed, self.trials)?;
        for s in &self.suites {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {} ({} cases)", s.name, s.cases)?;
            for f in s.failures.iter().take(10) {
                writeln!(out, "    {f}")?;
            }
            if s.failures.len() > 10 {
                writeln!(out, "    ... {} more", s.failures.len() - 10)?;
            }
        }
        let failed = self.failed_suites().len();
        if failed == 0 {
            writeln!(out, "all {} suites passed", self.suites.len())
        } else {
            writeln!(out, "{failed} of {} suites failed", self.suites.len())
        }
    }
}

struct Tally {
    suites: Vec<SuiteResult>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            suites: SUITES
                .iter()
                .map(|&name| SuiteResult {
                    name,
                    cases: 0,
                    failures: Vec::new(),
                })
                .collect(),
        }
    }

    fn slot(&mut self, suite: &str) -> &mut SuiteResult {
        self.suites
            .iter_mut()
            .find(|s| s.name == suite)
            .expect("known suite")
    }

    fn record(&mut self, suite: &str, case: &str, outcome: Result<bool, Error>) {
        let slot = self.slot(suite);
        slot.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => slot.failures.push(format!("{suite}: {case}")),
            Err(e) => slot.failures.push(format!("{suite}: {case}: {e}")),
        }
    }

    fn identity(&mut self, suite: &str, case: &str, outcome: Result<IdentityReport, Error>) {
        self.record(suite, case, outcome.map(|r| r.holds()));
    }
}

/// Simplices of `pair` grouped by their largest vertex.
fn by_last_vertex(pair: &SimplicialPair) -> Vec<Vec<Simplex>> {
    let mut out = vec![Vec::new(); pair.total().vertex_count()];
    for s in pair.total().iter() {
        out[*s.vertices().last().expect("nonempty")].push(s.clone());
    }
    out
}

/// A uniformly seeded simplicial map of pairs, built vertex by vertex and
/// restarted whenever some vertex has no admissible image.
pub fn random_simplicial_map(
    rng: &mut impl Rng,
    source: &Arc<SimplicialPair>,
    target: &Arc<SimplicialPair>,
) -> Option<SimplicialMap> {
    let groups = by_last_vertex(source);
    let nt = target.total().vertex_count();
    if nt == 0 {
        return SimplicialMap::new(source.clone(), target.clone(), Vec::new()).ok();
    }
    let mut order: Vec<usize> = (0..nt).collect();
    'attempt: for _ in 0..200 {
        let mut images: Vec<usize> = Vec::with_capacity(groups.len());
        for group in &groups {
            order.shuffle(rng);
            let choice = order.iter().copied().find(|&w| {
                group.iter().all(|s| {
                    let mut img: Vec<usize> = s
                        .vertices()
                        .iter()
                        .map(|&u| images.get(u).copied().unwrap_or(w))
                        .collect();
                    img.sort_unstable();
                    img.dedup();
                    let img = Simplex::new(img).expect("nonempty");
                    target.total().contains(&img)
                        && (!source.sub().contains(s) || target.sub().contains(&img))
                })
            });
            match choice {
                Some(w) => images.push(w),
                None => continue 'attempt,
            }
        }
        return SimplicialMap::new(source.clone(), target.clone(), images).ok();
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Simplicial automorphisms of `pair`: all of them for at most seven vertices,
/// otherwise the product maps `σ × τ` and factor swaps of a `3 × 3` grid.
fn automorphisms(pair: &Arc<SimplicialPair>) -> Vec<SimplicialMap> {
    let n = pair.total().vertex_count();
    let candidates: Vec<Vec<usize>> = if n <= 7 {
        permutations(n)
    } else if n == 9 {
        let s3 = permutations(3);
        let mut out = Vec::new();
        for a in &s3 {
            for b in &s3 {
                out.push((0..9).map(|v| 3 * a[v / 3] + b[v % 3]).collect());
                out.push((0..9).map(|v| 3 * b[v % 3] + a[v / 3]).collect());
            }
        }
        out
    } else {
        vec![(0..n).collect()]
    };
    candidates
        .into_iter()
        .filter_map(|images| SimplicialMap::new(pair.clone(), pair.clone(), images).ok())
        .filter(|m| m.inverse().is_some())
        .collect()
}

fn orientation_preserving(dd: &DualityData, k: &SimplicialMap) -> bool {
    induced_map(k, dd.relative(), dd.relative())
        .and_then(|ks| ks.apply(dd.fundamental_class()))
        .is_ok_and(|o| o == *dd.fundamental_class())
}

/// A constant map onto a vertex of `∂M` (or vertex 0 when `M` is closed).
fn trivial_map(
    source: &Arc<SimplicialPair>,
    target: &Arc<SimplicialPair>,
) -> Option<SimplicialMap> {
    let v = target
        .sub()
        .simplices(0)
        .first()
        .map_or(0, |s| s.vertices()[0]);
    SimplicialMap::constant(source.clone(), target.clone(), v).ok()
}

struct Setup {
    label: String,
    setting: Setting,
    source_autos: Vec<SimplicialMap>,
    target_autos: Vec<SimplicialMap>,
}

impl Setup {
    fn new(
        label: &str,
        source: &Arc<SimplicialPair>,
        dd: &Arc<DualityData>,
    ) -> Result<Self, Error> {
        let probe = SimplicialMap::new(
            source.clone(),
            dd.manifold().clone(),
            vec![0; source.total().vertex_count()],
        );
        let setting = match probe {
            Ok(m) => Setting::with_duality(&m, dd.clone())?,
            Err(_) => Setting {
                source: crate::homology::PairHomology::new(source.clone(), dd.field())?,
                duality: dd.clone(),
            },
        };
        Ok(Setup {
            label: label.into(),
            setting,
            source_autos: automorphisms(source),
            target_autos: automorphisms(dd.manifold())
                .into_iter()
                .filter(|k| orientation_preserving(dd, k))
                .collect(),
        })
    }

    fn source(&self) -> &Arc<SimplicialPair> {
        self.setting.source.relative.pair()
    }

    fn target(&self) -> &Arc<SimplicialPair> {
        self.setting.duality.manifold()
    }

    fn n(&self) -> usize {
        self.setting.duality.dim()
    }
}

fn lambdas(
    setting: &Setting,
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<Vec<(usize, HomologyClass)>, Error> {
    let rel = &setting.source.relative;
    let mut out = Vec::new();
    for (k, &b) in rel.betti_numbers().iter().enumerate() {
        for j in 0..b {
            let z = HomologyClass::basis_element(rel.clone(), k, j);
            out.push((k, setting.lambda(f, g, &z)?));
        }
    }
    Ok(out)
}

fn soundness(
    tally: &mut Tally,
    case: &str,
    f: &SimplicialMap,
    g: &SimplicialMap,
    values: &[(usize, HomologyClass)],
) {
    if values.iter().all(|(_, v)| v.is_zero()) {
        tally.record("coincidence-soundness", case, Ok(true));
        return;
    }
    let outcome =
        coincidence_witness(f, g).map(|v| matches!(v, CoincidenceVerdict::Witness { .. }));
    tally.record("coincidence-soundness", case, outcome);
}

fn calibration_and_duality(tally: &mut Tally, corpus: &Corpus) {
    let f5 = FieldSpec::prime(5).expect("5 is prime");
    for entry in &corpus.entries {
        for field in [Q, f5] {
            let case = format!("{} over {field}", entry.name);
            let dd = match DualityData::new(entry.pair.clone(), field) {
                Ok(dd) => dd,
                Err(e) => {
                    tally.record("duality", &case, Err(e));
                    continue;
                }
            };
            let pt = dd
                .apply(&dual_fundamental_cocycle(&dd))
                .map(|c| point_coefficient(&c).is_one());
            tally.record("duality", &case, pt);
            if !entry.pair.is_absolute() {
                continue;
            }
            let chi = entry.pair.total().euler_characteristic();
            let expected = entry.euler.unwrap_or(chi);
            let outcome =
                lefschetz_class(&GradedMap::identity(dd.absolute().clone()), &dd).map(|l| {
                    let value = point_coefficient(&l);
                    value == field.from_i64(chi) && value == field.from_i64(expected)
                });
            let case = format!("{case}: L(Id) = chi = {expected}");
            tally.record("calibration", &case, outcome);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn trial(
    tally: &mut Tally,
    rng: &mut ChaCha8Rng,
    t: usize,
    setup: &Setup,
    circle: &Setting,
    wrap: &SimplicialMap,
    tau: &GradedMap,
    wrap_trace: &crate::field::Scalar,
) {
    let (Some(f), Some(g)) = (
        random_simplicial_map(rng, setup.source(), setup.target()),
        random_simplicial_map(rng, setup.source(), setup.target()),
    ) else {
        tally.record(
            "triviality",
            &format!("trial {t} on {}", setup.label),
            Ok(false),
        );
        return;
    };
    let case = format!(
        "trial {t} on {} f={:?} g={:?}",
        setup.label,
        f.images(),
        g.images()
    );
    let s = &setup.setting;
    let dd = &s.duality;
    let n = setup.n();

    let values = match lambdas(s, &f, &g) {
        Ok(v) => v,
        Err(e) => {
            tally.record("triviality", &case, Err(e));
            return;
        }
    };
    let outside = values
        .iter()
        .all(|(k, v)| (n..=2 * n).contains(k) || v.is_zero());
    tally.record(
        "triviality",
        &format!("{case}: degrees outside n..2n"),
        Ok(outside),
    );
    soundness(tally, &case, &f, &g, &values);
    if setup.label.starts_with("s3") {
        tally.record(
            "sphere-triviality",
            &case,
            Ok(values.iter().all(|(_, v)| v.is_zero())),
        );
    }

    match lambdas(s, &f, &f) {
        Ok(same) => {
            let ok = same.iter().all(|(k, v)| *k == n || v.is_zero());
            tally.record("triviality", &format!("{case}: f = g off degree n"), Ok(ok));
            soundness(tally, &case, &f, &f, &same);
        }
        Err(e) => tally.record("triviality", &case, Err(e)),
    }

    if let Some(c) = trivial_map(setup.source(), setup.target()) {
        match lambdas(s, &f, &c) {
            Ok(vals) => {
                let ok = vals.iter().all(|(k, v)| *k == n || v.is_zero());
                tally.record(
                    "triviality",
                    &format!("{case}: constant g off degree n"),
                    Ok(ok),
                );
                soundness(tally, &case, &f, &c, &vals);
                match condition_a(&f, &s.source, dd) {
                    Ok(true) => {
                        let hit = vals.iter().any(|(k, v)| *k == n && !v.is_zero());
                        tally.record("cond-a", &case, Ok(hit));
                    }
                    Ok(false) => {}
                    Err(e) => tally.record("cond-a", &case, Err(e)),
                }
            }
            Err(e) => tally.record("triviality", &case, Err(e)),
        }
    }

    if setup.target().is_absolute() {
        tally.identity("symmetry", &case, check_symmetry(&f, &g, s));
    }

    if let Some(h) = random_simplicial_map(rng, setup.source(), setup.source()) {
        let c = format!("{case} h={:?}", h.images());
        tally.identity("naturality", &c, check_naturality(&f, &g, &h, dd));
    }

    if let (Some(k), Some(h)) = (
        setup.target_autos.choose(rng),
        setup.source_autos.choose(rng),
    ) {
        let h_inv = h.inverse().expect("automorphism");
        let twisted = |m: &SimplicialMap| k.compose(m).and_then(|km| km.compose(&h_inv));
        let c = format!("{case} k={:?} h={:?}", k.images(), h.images());
        let outcome = twisted(&f)
            .and_then(|f2| Ok((f2, twisted(&g)?)))
            .and_then(|(f2, g2)| check_naturality2(&f, &g, h, k, &f2, &g2, dd, dd));
        tally.identity("naturality-ii", &c, outcome);
    }

    let rel = &s.source.relative;
    let inv_o = dd.fundamental_class().coords()[0].inv().expect("nonzero");
    match induced_map(&f, rel, dd.relative()) {
        Ok(fs) => {
            for j in 0..rel.betti(n as isize) {
                let z = HomologyClass::basis_element(rel.clone(), n, j);
                let outcome = fs.apply(&z).and_then(|img| {
                    let k = img.coords()[0].clone() * inv_o.clone();
                    let shriek = transfer(&f, &z, &s.source, dd)?;
                    let push = induced_map(&f, &s.source.absolute, dd.absolute())?;
                    let id = GradedMap::identity(dd.absolute().clone()).scaled(&k);
                    Ok(compose(&push, &shriek)? == id)
                });
                tally.record("transfer-trace", &format!("{case} z=a[{n}]_{j}"), outcome);
            }
        }
        Err(e) => tally.record("transfer-trace", &case, Err(e)),
    }

    for j in 0..rel.betti(2 * n as isize) {
        let z = HomologyClass::basis_element(rel.clone(), 2 * n, j);
        let outcome = degree2n_value(&f, &g, &z, &s.source, dd)
            .and_then(|lhs| Ok(lhs == s.lambda(&f, &g, &z)?));
        tally.record("degree-2n", &format!("{case} z=a[{}]_{j}", 2 * n), outcome);
    }

    // Λ_{fh,gh} τ = k Λ_fg with h the double wrap and τ its transfer along O_C6
    let circle_source = circle.source.relative.pair();
    if let (Some(f1), Some(g1)) = (
        random_simplicial_map(rng, circle_source, setup.target()),
        random_simplicial_map(rng, circle_source, setup.target()),
    ) {
        let c = format!(
            "C3 -> {} f={:?} g={:?}",
            setup.label,
            f1.images(),
            g1.images()
        );
        tally.identity(
            "naturality-transfer",
            &c,
            check_naturality_transfer(&f1, &g1, wrap, tau, wrap_trace, dd),
        );
    }
}

fn knill_trial(
    tally: &mut Tally,
    rng: &mut ChaCha8Rng,
    t: usize,
    product: &ProductComplex,
    setting: &Setting,
) {
    let dd = &setting.duality;
    let Some(g) = random_simplicial_map(rng, product.pair(), dd.manifold()) else {
        return;
    };
    let hy = match parameter_homology(product, dd.field()) {
        Ok(h) => h,
        Err(e) => return tally.record("knill", "parameter homology", Err(e)),
    };
    let p = product.proj_second();
    for (k, &b) in hy.betti_numbers().iter().enumerate() {
        for j in 0..b {
            let u = HomologyClass::basis_element(hy.clone(), k, j);
            let case = format!("trial {t} g={:?} u=a[{k}]_{j}", g.images());
            let outcome = cross_fundamental(&u, product, &setting.source, dd).and_then(|uo| {
                let lhs = setting.lambda(p, &g, &uo)?;
                let rhs = parametrized_knill(&g, &u, product, &setting.source, dd)?;
                Ok(lhs == rhs)
            });
            tally.record("knill", &case, outcome);
        }
    }
}

fn wong_trial(tally: &mut Tally, rng: &mut ChaCha8Rng, t: usize, setting: &Setting) {
    // C3 as Z/3: with g constant at c, ψ = f·g⁻¹ is f followed by rotation by -c
    let dd = &setting.duality;
    let target = dd.manifold();
    let source = setting.source.relative.pair();
    let Some(f) = random_simplicial_map(rng, source, target) else {
        return;
    };
    let c = rng.gen_range(0..3);
    let case = format!("trial {t} f={:?} c={c}", f.images());
    let outcome = (|| {
        let g = SimplicialMap::constant(source.clone(), target.clone(), c)?;
        let rot = SimplicialMap::new(
            target.clone(),
            target.clone(),
            (0..3).map(|v| (v + 3 - c) % 3).collect(),
        )?;
        let psi = rot.compose(&f)?;
        let rel = &setting.source.relative;
        let mut ok = true;
        for j in 0..rel.betti(1) {
            let z = HomologyClass::basis_element(rel.clone(), 1, j);
            let lambda = point_coefficient(&setting.lambda(&f, &g, &z)?);
            ok &= lambda == wong_pairing(&psi, &z, dd)?;
        }
        Ok(ok)
    })();
    tally.record("wong", &case, outcome);
}

fn setup_in(corpus: &Corpus, tally: &mut Tally, source: &str, target: &str) -> Option<Setup> {
    let label = format!("{source}->{target}");
    let (Some(x), Some(m)) = (corpus.get(source), corpus.get(target)) else {
        tally.record(
            "duality",
            &format!("{label}: missing corpus entry"),
            Ok(false),
        );
        return None;
    };
    let built = DualityData::new(m.clone(), Q).and_then(|dd| Setup::new(&label, x, &Arc::new(dd)));
    match built {
        Ok(s) => Some(s),
        Err(e) => {
            tally.record("duality", &label, Err(e));
            None
        }
    }
}

/// Runs every suite on `corpus` plus `trials` seeded random map pairs.
pub fn verify_with(corpus: &Corpus, seed: u64, trials: usize) -> VerifyReport {
    let mut tally = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    calibration_and_duality(&mut tally, corpus);

    let pairs = [
        ("torus", "c3"),
        ("c6", "c3"),
        ("c3", "c3"),
        ("s2", "s2"),
        ("s3", "s2"),
        ("interval", "interval"),
    ];
    let setups: Vec<Setup> = pairs
        .iter()
        .filter_map(|(x, m)| setup_in(corpus, &mut tally, x, m))
        .collect();

    let fixed = (|| -> Result<_, Error> {
        let wrap = builtins::map("double-wrap")?;
        let c3 = wrap.target().clone();
        let dd = Arc::new(DualityData::new(c3.clone(), Q)?);
        let circle = Setting::with_duality(&SimplicialMap::identity(c3), dd.clone())?;
        let wrapped = Setting::with_duality(&wrap, dd.clone())?;
        let w = HomologyClass::basis_element(wrapped.source.relative.clone(), 1, 0);
        let tau = transfer(&wrap, &w, &wrapped.source, &dd)?;
        let image = induced_map(&wrap, &wrapped.source.absolute, dd.absolute())?.apply(&w)?;
        let trace =
            image.coords()[0].clone() * dd.fundamental_class().coords()[0].inv().expect("nonzero");
        let knill = [("c3", "c3"), ("interval", "c3"), ("c3", "interval")]
            .iter()
            .map(|&(y, m)| {
                let y = Arc::new(builtins::pair(y)?.to_absolute());
                let m = Arc::new(builtins::pair(m)?);
                let product = product_pair(y, m.clone());
                let dd = Arc::new(DualityData::new(m, Q)?);
                let setting = Setting::with_duality(product.proj_second(), dd)?;
                Ok((product, setting))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok((wrap, circle, wrapped, tau, trace, knill))
    })();
    let (wrap, circle, wrapped, tau, trace, knill) = match fixed {
        Ok(v) => v,
        Err(e) => {
            tally.record("naturality-transfer", "fixed instances", Err(e));
            return VerifyReport {
                seed,
                trials,
                suites: tally.suites,
            };
        }
    };

    for t in 0..trials {
        if !setups.is_empty() {
            let setup = &setups[t % setups.len()];
            trial(&mut tally, &mut rng, t, setup, &circle, &wrap, &tau, &trace);
        }
        let (product, setting) = &knill[t % knill.len()];
        knill_trial(&mut tally, &mut rng, t, product, setting);
        let wong = if t % 2 == 0 { &circle } else { &wrapped };
        wong_trial(&mut tally, &mut rng, t, wong);
    }

    // builtin instances that run even with zero trials
    let id = SimplicialMap::identity(circle.duality.manifold().clone());
    for (name, f, s) in [("identity", &id, &circle), ("double wrap", &wrap, &wrapped)] {
        let g =
            SimplicialMap::constant(f.source().clone(), f.target().clone(), 0).expect("vertex 0");
        let z = HomologyClass::basis_element(s.source.relative.clone(), 1, 0);
        let outcome = s
            .lambda(f, &g, &z)
            .and_then(|l| Ok(point_coefficient(&l) == wong_pairing(f, &z, &s.duality)?));
        tally.record("wong", &format!("psi = {name}"), outcome);
    }
    if let Some(setup) = setups.iter().find(|s| s.label == "torus->c3") {
        let p = builtins::map("torus-proj2");
        let outcome = p.and_then(|p| {
            let c = SimplicialMap::constant(p.source().clone(), p.target().clone(), 0)?;
            let a = condition_a(&p, &setup.setting.source, &setup.setting.duality)?;
            let values = lambdas(&setup.setting, &p, &c)?;
            soundness(&mut tally, "torus projection vs constant", &p, &c, &values);
            Ok(a && values.iter().any(|(k, v)| *k == 1 && !v.is_zero()))
        });
        tally.record("cond-a", "torus projection vs constant", outcome);
    }
    for (product, setting) in &knill {
        knill_trial_fixed(&mut tally, product, setting);
    }

    VerifyReport {
        seed,
        trials,
        suites: tally.suites,
    }
}

fn knill_trial_fixed(tally: &mut Tally, product: &ProductComplex, setting: &Setting) {
    let dd = &setting.duality;
    let Ok(hy) = parameter_homology(product, dd.field()) else {
        return;
    };
    let p = product.proj_second();
    for (k, &b) in hy.betti_numbers().iter().enumerate() {
        for j in 0..b {
            let u = HomologyClass::basis_element(hy.clone(), k, j);
            let outcome = cross_fundamental(&u, product, &setting.source, dd).and_then(|uo| {
                Ok(setting.lambda(p, p, &uo)?
                    == parametrized_knill(p, &u, product, &setting.source, dd)?)
            });
            tally.record("knill", &format!("g = p, u=a[{k}]_{j}"), outcome);
        }
    }
}

/// [`verify_with`] on the builtin corpus.
pub fn verify(seed: u64, trials: usize) -> VerifyReport {
    verify_with(&Corpus::builtin(), seed, trials)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_maps_are_simplicial() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let torus = Arc::new(builtins::pair("torus").unwrap());
        let s2 = Arc::new(builtins::pair("s2").unwrap());
        let interval = Arc::new(builtins::pair("interval").unwrap());
        for _ in 0..20 {
            random_simplicial_map(&mut rng, &torus, &s2).unwrap();
            let m = random_simplicial_map(&mut rng, &interval, &interval).unwrap();
            assert!([0, 2].contains(&m.images()[0]) && [0, 2].contains(&m.images()[2]));
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(
            automorphisms(&Arc::new(builtins::pair("s2").unwrap())).len(),
            24
        );
        assert_eq!(
            automorphisms(&Arc::new(builtins::pair("c6").unwrap())).len(),
            12
        );
        // identity, factor swap, simultaneous reversal, and both
        assert_eq!(
            automorphisms(&Arc::new(builtins::pair("torus").unwrap())).len(),
            4
        );
    }

    #[test]
    fn zero_trials_pass() {
        let r = verify(1, 0);
        assert!(r.passed(), "{r}");
        assert!(r.suite("calibration").unwrap().cases >= 6);
    }

    #[test]
    fn corrupted_fixture_names_the_invariant() {
        let mut corpus = Corpus::builtin();
        let s2 = corpus.entries.iter_mut().find(|e| e.name == "s2").unwrap();
        s2.euler = Some(3);
        let r = verify_with(&corpus, 1, 0);
        assert_eq!(r.failed_suites(), vec!["calibration"]);

        let mut corpus = Corpus::builtin();
        let torus = corpus
            .entries
            .iter_mut()
            .find(|e| e.name == "torus")
            .unwrap();
        // drop one triangle: a surface with boundary posing as a closed one
        let facets: Vec<Vec<usize>> = torus.pair.total().facets()[1..]
            .iter()
            .map(|s| s.vertices().to_vec())
            .collect();
        let broken = crate::SimplicialComplex::from_facets(9, &facets).unwrap();
        torus.pair = Arc::new(SimplicialPair::absolute(broken));
        let r = verify_with(&corpus, 1, 0);
        assert!(r.failed_suites().contains(&"duality"));
    }
}
