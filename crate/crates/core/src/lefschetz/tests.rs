use super::*;
use crate::builtins;
use crate::complex::SimplicialPair;
use crate::product::product_pair;

const Q: FieldSpec = FieldSpec::Rationals;

fn arc(name: &str) -> Arc<SimplicialPair> {
    Arc::new(builtins::pair(name).unwrap())
}

fn duality(name: &str) -> Arc<DualityData> {
    Arc::new(DualityData::new(arc(name), Q).unwrap())
}

fn int(v: i64) -> Scalar {
    Q.from_i64(v)
}

fn identity_class(dd: &DualityData) -> HomologyClass {
    lefschetz_class(&GradedMap::identity(dd.absolute().clone()), dd).unwrap()
}

#[test]
fn calibration_matches_euler_characteristic() {
    for name in ["point", "c3", "s2", "torus", "s3", "genus2"] {
        let dd = duality(name);
        let l = identity_class(&dd);
        let chi = dd.manifold().total().euler_characteristic();
        assert_eq!(l.degree(), 0);
        assert_eq!(point_coefficient(&l), int(chi), "{name}");
    }
}

#[test]
fn duality_is_invertible() {
    for name in builtins::NAMES {
        for field in [Q, FieldSpec::prime(5).unwrap()] {
            DualityData::new(arc(name), field).unwrap();
        }
    }
    let t = duality("torus");
    assert_eq!((t.matrix(1).rows(), t.matrix(1).cols()), (2, 2));
    let i = duality("interval");
    assert_eq!((i.matrix(0).rows(), i.matrix(0).cols()), (1, 1));
}

#[test]
fn dual_fundamental_class() {
    for name in ["c3", "s2", "torus", "interval", "disk"] {
        let dd = duality(name);
        let o = dual_fundamental_cocycle(&dd);
        assert_eq!(o.evaluate(dd.fundamental_class()).unwrap(), Q.one());
        let pt = dd.apply(&o).unwrap();
        assert_eq!(point_coefficient(&pt), Q.one(), "{name}");
    }
}

#[test]
fn cap_with_degree_zero_unit_is_identity() {
    let dd = duality("torus");
    let abs = dd.absolute();
    let one = CohomologyClass::dual_basis_element(abs.clone(), 0, 0);
    for j in 0..2 {
        let a = HomologyClass::basis_element(abs.clone(), 1, j);
        assert_eq!(cap(&one, &a, abs).unwrap(), a);
    }
    let a = HomologyClass::basis_element(abs.clone(), 1, 0);
    let x = CohomologyClass::dual_basis_element(abs.clone(), 1, 0);
    assert_eq!(point_coefficient(&cap(&x, &a, abs).unwrap()), Q.one());
    let high = CohomologyClass::dual_basis_element(abs.clone(), 2, 0);
    assert!(matches!(cap(&high, &a, abs), Err(Error::DegreeMismatch(_))));
}

#[test]
fn transfer_of_identity_along_fundamental_class() {
    for name in ["c3", "s2", "torus", "interval"] {
        let dd = duality(name);
        let id = SimplicialMap::identity(dd.manifold().clone());
        let s = Setting::with_duality(&id, dd.clone()).unwrap();
        let t = transfer(&id, dd.fundamental_class(), &s.source, &dd).unwrap();
        assert_eq!(t, GradedMap::identity(dd.absolute().clone()), "{name}");
        let zero = HomologyClass::zero(s.source.relative.clone(), dd.dim() as isize);
        assert!(transfer(&id, &zero, &s.source, &dd).unwrap().is_zero());
    }
}

#[test]
fn torus_projection_transfers() {
    let dd = duality("c3");
    let p = builtins::map("torus-proj2").unwrap();
    let s = Setting::with_duality(&p, dd.clone()).unwrap();
    let ps = induced_map(&p, &s.source.absolute, dd.absolute()).unwrap();

    // z = O_T²: degree one, and p_* p_!^z = 0 because p_* z lies in H_2(S¹) = 0
    let o = HomologyClass::basis_element(s.source.relative.clone(), 2, 0);
    let t = transfer(&p, &o, &s.source, &dd).unwrap();
    assert_eq!(t.degree(), 1);
    assert!(!t.is_zero());
    assert!(compose(&ps, &t).unwrap().is_zero());

    // degree-one z with p_* z = k·O_S¹: p_* p_!^z = k·Id
    let inv_o = dd.fundamental_class().coords()[0].inv().unwrap();
    let mut traces = Vec::new();
    for j in 0..2 {
        let z = HomologyClass::basis_element(s.source.relative.clone(), 1, j);
        let k = ps.apply(&z).unwrap().coords()[0].clone() * inv_o.clone();
        let t = transfer(&p, &z, &s.source, &dd).unwrap();
        assert_eq!(t.degree(), 0);
        assert_eq!(
            compose(&ps, &t).unwrap(),
            GradedMap::identity(dd.absolute().clone()).scaled(&k)
        );
        traces.push(k);
    }
    assert!(traces.iter().any(|k| k.is_one() || (-k).is_one()));
}

#[test]
fn lefschetz_class_examples() {
    let dd = duality("s2");
    assert_eq!(point_coefficient(&identity_class(&dd)), int(2));
    assert!(identity_class(&duality("torus")).is_zero());
    let zero = GradedMap::zero(dd.absolute().clone(), dd.absolute().clone(), 0);
    assert!(lefschetz_class(&zero, &dd).unwrap().is_zero());
    let down = GradedMap::zero(dd.absolute().clone(), dd.absolute().clone(), -1);
    assert_eq!(lefschetz_class(&down, &dd).unwrap().degree(), -1);
}

#[test]
fn identity_pair_on_closed_manifolds() {
    for (name, chi) in [("s2", 2), ("c3", 0), ("torus", 0)] {
        let dd = duality(name);
        let id = SimplicialMap::identity(dd.manifold().clone());
        let report = lefschetz_full(&id, &id, Q, false).unwrap();
        // the basis class a satisfies O = o·a, so Λ(a) = χ/o
        let o = dd.fundamental_class().coords()[0].clone();
        for e in &report.entries {
            if e.degree == dd.dim() {
                assert_eq!(e.point_coefficient, int(chi) * o.inv().unwrap());
            } else {
                assert!(e.is_zero());
            }
        }
        assert!(report.condition_a);
    }
}

#[test]
fn torus_projection_against_constant() {
    let p = builtins::map("torus-proj2").unwrap();
    let g = SimplicialMap::constant(p.source().clone(), p.target().clone(), 0).unwrap();
    let report = lefschetz_full(&p, &g, Q, true).unwrap();
    assert!(report.condition_a);
    assert!(report.oracle.as_ref().unwrap().is_witness());
    let nonzero: Vec<_> = report.entries.iter().filter(|e| !e.is_zero()).collect();
    assert!(!nonzero.is_empty());
    assert!(nonzero.iter().all(|e| e.degree == 1));
    assert!(nonzero
        .iter()
        .all(|e| e.point_coefficient == int(1) || e.point_coefficient == int(-1)));
}

#[test]
fn sphere_maps_have_zero_lambda() {
    let s3 = arc("s3");
    let s2 = arc("s2");
    let f = SimplicialMap::new(s3.clone(), s2.clone(), vec![0, 1, 2, 2, 2]).unwrap();
    let g = SimplicialMap::new(s3, s2, vec![1, 2, 3, 3, 1]).unwrap();
    assert!(!lefschetz_full(&f, &g, Q, false).unwrap().is_nonzero());
}

#[test]
fn empty_source_gives_empty_report() {
    let empty = Arc::new(SimplicialPair::absolute(crate::SimplicialComplex::empty(0)));
    let f = SimplicialMap::new(empty, arc("c3"), vec![]).unwrap();
    let report = lefschetz_full(&f, &f, Q, true).unwrap();
    assert!(report.entries.is_empty());
    assert!(!report.condition_a);
}

#[test]
fn condition_a_examples() {
    let dd = duality("c3");
    let id = SimplicialMap::identity(dd.manifold().clone());
    let s = Setting::with_duality(&id, dd.clone()).unwrap();
    assert!(condition_a(&id, &s.source, &dd).unwrap());
    let c = SimplicialMap::constant(id.source().clone(), id.target().clone(), 1).unwrap();
    assert!(!condition_a(&c, &s.source, &dd).unwrap());
}

#[test]
fn wong_pairing_examples() {
    let dd = duality("c3");
    let id = SimplicialMap::identity(dd.manifold().clone());
    let o = dd.fundamental_class().clone();
    assert_eq!(wong_pairing(&id, &o, &dd).unwrap(), int(1));
    let c = SimplicialMap::constant(id.source().clone(), id.target().clone(), 0).unwrap();
    assert!(wong_pairing(&c, &o, &dd).unwrap().is_zero());
    let wrap = builtins::map("double-wrap").unwrap();
    let c6 = Arc::new(crate::homology::homology(wrap.source().clone(), Q).unwrap());
    let o6 = HomologyClass::basis_element(c6, 1, 0);
    assert_eq!(
        wong_pairing(&wrap, &o6, &dd)
            .unwrap()
            .signum()
            .map(i32::abs),
        Some(1)
    );
    let v = wong_pairing(&wrap, &o6, &dd).unwrap();
    assert!(v == int(2) || v == int(-2));
}

#[test]
fn wong_formula_with_psi_equal_to_f_over_g() {
    // with these conventions Λ_fg(z) = ⟨Ō, (f·g⁻¹)_* z⟩; for g constant at the unit, ψ = f
    let dd = duality("c3");
    let wrap = builtins::map("double-wrap").unwrap();
    let id = SimplicialMap::identity(dd.manifold().clone());
    for f in [id, wrap] {
        let g = SimplicialMap::constant(f.source().clone(), f.target().clone(), 0).unwrap();
        let s = Setting::with_duality(&f, dd.clone()).unwrap();
        let z = HomologyClass::basis_element(s.source.relative.clone(), 1, 0);
        let lambda = point_coefficient(&s.lambda(&f, &g, &z).unwrap());
        assert_eq!(lambda, wong_pairing(&f, &z, &dd).unwrap());
        assert!(!lambda.is_zero());
    }
}

#[test]
fn wong_inverse_quotient_differs_by_sign() {
    // ψ = g·f⁻¹ with f = id and g constant is the inversion x ↦ -x on C3
    let dd = duality("c3");
    let id = SimplicialMap::identity(dd.manifold().clone());
    let g = SimplicialMap::constant(id.source().clone(), id.target().clone(), 0).unwrap();
    let inversion =
        SimplicialMap::new(id.source().clone(), id.target().clone(), vec![0, 2, 1]).unwrap();
    let s = Setting::with_duality(&id, dd.clone()).unwrap();
    let z = dd.fundamental_class();
    let lambda = point_coefficient(&s.lambda(&id, &g, z).unwrap());
    assert_eq!(lambda, -wong_pairing(&inversion, z, &dd).unwrap());
}

#[test]
fn top_degree_formula_agrees() {
    let dd = duality("c3");
    let p = builtins::map("torus-proj2").unwrap();
    let s = Setting::with_duality(&p, dd.clone()).unwrap();
    let o = HomologyClass::basis_element(s.source.relative.clone(), 2, 0);
    for images in [
        vec![0; 9],
        (0..9).map(|v| v / 3).collect(),
        (0..9).map(|v| v % 3).collect(),
    ] {
        let g = SimplicialMap::new(p.source().clone(), p.target().clone(), images).unwrap();
        assert_eq!(
            degree2n_value(&p, &g, &o, &s.source, &dd).unwrap(),
            s.lambda(&p, &g, &o).unwrap()
        );
    }
    let zero = HomologyClass::zero(s.source.relative.clone(), 2);
    assert!(degree2n_value(&p, &p, &zero, &s.source, &dd)
        .unwrap()
        .is_zero());
}

fn knill_setup(y: &str, m: &str) -> (ProductComplex, Setting, Arc<DualityData>) {
    let dd = duality(m);
    let product = product_pair(Arc::new(arc(y).to_absolute()), dd.manifold().clone());
    let p = product.proj_second().clone();
    let s = Setting::with_duality(&p, dd.clone()).unwrap();
    (product, s, dd)
}

#[test]
fn parametrized_knill_matches_lambda() {
    for (y, m) in [
        ("c3", "c3"),
        ("c3", "s2"),
        ("interval", "c3"),
        ("c3", "interval"),
        ("point", "torus"),
    ] {
        let (product, s, dd) = knill_setup(y, m);
        let p = product.proj_second();
        let hy = parameter_homology(&product, Q).unwrap();
        let vc = product.pair().total().vertex_count();
        let nm = dd.manifold().total().vertex_count();
        let maps = [
            p.clone(),
            SimplicialMap::constant(product.pair().clone(), dd.manifold().clone(), 0)
                .unwrap_or(p.clone()),
            product
                .proj_first()
                .reframe(product.pair().clone(), dd.manifold().clone())
                .unwrap_or(p.clone()),
            SimplicialMap::new(
                product.pair().clone(),
                dd.manifold().clone(),
                (0..vc).map(|v| (v / nm + v % nm) % nm).collect(),
            )
            .unwrap_or(p.clone()),
        ];
        for g in &maps {
            for (k, &b) in hy.betti_numbers().iter().enumerate() {
                for j in 0..b {
                    let u = HomologyClass::basis_element(hy.clone(), k, j);
                    let lhs = s
                        .lambda(
                            p,
                            g,
                            &cross_fundamental(&u, &product, &s.source, &dd).unwrap(),
                        )
                        .unwrap();
                    let rhs = parametrized_knill(g, &u, &product, &s.source, &dd).unwrap();
                    assert_eq!(lhs, rhs, "{y} x {m}, u = a[{k}]_{j}, g = {:?}", g.images());
                }
            }
        }
    }
}

#[test]
fn knill_with_first_projection_on_circles() {
    // g(y, x) = y on C3 × C3: L(g_u) = -u for the degree-one generator u
    let (product, s, dd) = knill_setup("c3", "c3");
    let g = product
        .proj_first()
        .reframe(product.pair().clone(), dd.manifold().clone())
        .unwrap();
    let hy = parameter_homology(&product, Q).unwrap();
    let u = HomologyClass::basis_element(hy, 1, 0);
    let l = parametrized_knill(&g, &u, &product, &s.source, &dd).unwrap();
    let ua = HomologyClass::new(dd.absolute().clone(), 1, u.coords().to_vec()).unwrap();
    assert_eq!(l, ua.scaled(&int(-1)));
}

#[test]
fn symmetry_and_naturality_examples() {
    let dd = duality("c3");
    let id = SimplicialMap::identity(dd.manifold().clone());
    let s = Setting::with_duality(&id, dd.clone()).unwrap();
    let rot = SimplicialMap::new(id.source().clone(), id.target().clone(), vec![1, 2, 0]).unwrap();
    assert!(check_symmetry(&id, &rot, &s).unwrap().holds());
    // odd n forces Λ_ff = 0
    for l in s.lambda_all(&rot, &rot).unwrap() {
        assert!(l.is_zero());
    }
    assert!(check_naturality(&id, &rot, &id, &dd).unwrap().holds());
    let wrap = builtins::map("double-wrap").unwrap();
    assert!(check_naturality(&id, &rot, &wrap, &dd).unwrap().holds());

    let interval = duality("interval");
    let iid = SimplicialMap::identity(interval.manifold().clone());
    let si = Setting::with_duality(&iid, interval.clone()).unwrap();
    assert!(matches!(
        check_symmetry(&iid, &iid, &si),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn naturality_with_partial_transfer() {
    let dd = duality("c3");
    let wrap = builtins::map("double-wrap").unwrap();
    let id = SimplicialMap::identity(dd.manifold().clone());
    let rot = SimplicialMap::new(id.source().clone(), id.target().clone(), vec![1, 2, 0]).unwrap();
    let c = SimplicialMap::constant(id.source().clone(), id.target().clone(), 0).unwrap();
    let ws = Setting::with_duality(&wrap, dd.clone()).unwrap();
    let w = HomologyClass::basis_element(ws.source.relative.clone(), 1, 0);
    let tau = transfer(&wrap, &w, &ws.source, &dd).unwrap();
    let ks = induced_map(&wrap, &ws.source.absolute, dd.absolute())
        .unwrap()
        .apply(&w)
        .unwrap();
    let k = ks.coords()[0].clone() * dd.fundamental_class().coords()[0].inv().unwrap();
    for (f, g) in [(&id, &c), (&rot, &id), (&id, &id)] {
        assert!(check_naturality_transfer(f, g, &wrap, &tau, &k, &dd)
            .unwrap()
            .holds());
    }
    let wrong = k.clone() + Q.one();
    assert!(matches!(
        check_naturality_transfer(&id, &c, &wrap, &tau, &wrong, &dd),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn naturality_two_needs_orientation_preserving_k() {
    let dd = duality("s2");
    let id = SimplicialMap::identity(dd.manifold().clone());
    let src = id.source().clone();
    let even = SimplicialMap::new(src.clone(), src.clone(), vec![1, 2, 0, 3]).unwrap();
    let odd = SimplicialMap::new(src.clone(), src.clone(), vec![1, 0, 2, 3]).unwrap();
    let f = SimplicialMap::new(src.clone(), src.clone(), vec![0, 1, 2, 2]).unwrap();
    let g = id.clone();
    let f2 = even.compose(&f).unwrap();
    let g2 = even.compose(&g).unwrap();
    assert!(check_naturality2(&f, &g, &id, &even, &f2, &g2, &dd, &dd)
        .unwrap()
        .holds());
    let f3 = odd.compose(&f).unwrap();
    let g3 = odd.compose(&g).unwrap();
    assert!(matches!(
        check_naturality2(&f, &g, &id, &odd, &f3, &g3, &dd, &dd),
        Err(Error::Hypothesis(_))
    ));
    assert!(matches!(
        check_naturality2(&f, &g, &id, &even, &f, &g2, &dd, &dd),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn prime_field_agrees_on_small_values() {
    let f5 = FieldSpec::prime(5).unwrap();
    let dd = Arc::new(DualityData::new(arc("s2"), f5).unwrap());
    let l = lefschetz_class(&GradedMap::identity(dd.absolute().clone()), &dd).unwrap();
    assert_eq!(point_coefficient(&l), f5.from_i64(2));
}

#[test]
fn point_manifold() {
    let dd = duality("point");
    assert_eq!(dd.dim(), 0);
    let x = arc("c3");
    let f = SimplicialMap::constant(x, dd.manifold().clone(), 0).unwrap();
    let report = lefschetz_full(&f, &f, Q, true).unwrap();
    assert_eq!(report.entries.len(), 1);
    assert_eq!(report.entries[0].point_coefficient, int(1));
}
