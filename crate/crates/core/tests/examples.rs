use std::sync::Arc;

use lefschetz::builtins;
use lefschetz::homology::HomologyClass;
use lefschetz::lefschetz::{
    lefschetz_class, lefschetz_full, point_coefficient, wong_pairing, DualityData, Setting,
};
use lefschetz::oracle::coincidence_witness;
use lefschetz::{Error, FieldSpec, GradedMap, SimplicialMap, SimplicialPair};

const Q: FieldSpec = FieldSpec::Rationals;

fn arc(name: &str) -> Arc<SimplicialPair> {
    Arc::new(builtins::pair(name).unwrap())
}

#[test]
fn identity_trace_is_euler_characteristic() {
    for (name, chi) in [
        ("point", 1),
        ("c3", 0),
        ("s2", 2),
        ("torus", 0),
        ("s3", 0),
        ("genus2", -2),
    ] {
        let dd = DualityData::new(arc(name), Q).unwrap();
        let l = lefschetz_class(&GradedMap::identity(dd.absolute().clone()), &dd).unwrap();
        assert_eq!(l.degree(), 0);
        assert_eq!(point_coefficient(&l), Q.from_i64(chi), "{name}");
    }
}

#[test]
fn duality_over_q_and_f5() {
    for name in builtins::NAMES {
        for field in [Q, FieldSpec::prime(5).unwrap()] {
            assert!(
                DualityData::new(arc(name), field).is_ok(),
                "{name} over {field}"
            );
        }
    }
}

#[test]
fn disk_without_boundary_is_rejected() {
    let disk = builtins::pair("disk").unwrap();
    let pair = Arc::new(disk.to_absolute());
    assert!(matches!(
        DualityData::new(pair, Q),
        Err(Error::BoundaryMismatch)
    ));
}

#[test]
fn torus_projection_meets_constant() {
    let torus = builtins::torus();
    let p = torus.proj_second().clone();
    let g = SimplicialMap::constant(torus.pair().clone(), arc("c3"), 0).unwrap();
    let report = lefschetz_full(&p, &g, Q, true).unwrap();
    assert!(report.condition_a);
    assert!(report.entries.iter().any(|e| e.degree == 1 && !e.is_zero()));
    assert!(report.oracle.unwrap().is_witness());
}

#[test]
fn vanishing_lambda_does_not_exclude_coincidences() {
    let torus = arc("torus");
    let id = SimplicialMap::identity(torus.clone());
    let report = lefschetz_full(&id, &id, Q, true).unwrap();
    assert!(!report.is_nonzero());
    assert!(report.oracle.unwrap().is_witness());
}

#[test]
fn wong_on_circles() {
    let c3 = arc("c3");
    let dd = Arc::new(DualityData::new(c3.clone(), Q).unwrap());
    let id = SimplicialMap::identity(c3.clone());
    let k = SimplicialMap::constant(c3.clone(), c3.clone(), 0).unwrap();
    let s = Setting::with_duality(&id, dd.clone()).unwrap();
    let z = HomologyClass::basis_element(s.source.relative.clone(), 1, 0);
    let lhs = point_coefficient(&s.lambda(&id, &k, &z).unwrap());
    assert_eq!(lhs, wong_pairing(&id, &z, &dd).unwrap());

    let wrap = builtins::map("double-wrap").unwrap();
    let c6 = wrap.source().clone();
    let k6 = SimplicialMap::constant(c6, c3, 0).unwrap();
    let s = Setting::with_duality(&wrap, dd.clone()).unwrap();
    let z = HomologyClass::basis_element(s.source.relative.clone(), 1, 0);
    let lhs = point_coefficient(&s.lambda(&wrap, &k6, &z).unwrap());
    assert_eq!(lhs, wong_pairing(&wrap, &z, &dd).unwrap());
    assert_eq!(lhs.to_i64().map(i64::abs), Some(2));
}

#[test]
fn equal_maps_coincide_everywhere() {
    let s2 = arc("s2");
    let c = SimplicialMap::constant(s2.clone(), s2, 1).unwrap();
    assert!(coincidence_witness(&c, &c).unwrap().is_witness());
}
