use std::process::{Command, ExitCode};
use std::sync::Arc;

use lefschetz::builtins;
use lefschetz::homology::HomologyClass;
use lefschetz::lefschetz::{
    lefschetz_class, lefschetz_full, point_coefficient, wong_pairing, DualityData, Setting,
};
use lefschetz::oracle::{verify_witness, CoincidenceVerdict};
use lefschetz::verify::{verify, VerifyReport};
use lefschetz::{Error, FieldSpec, GradedMap, SimplicialMap, SimplicialPair};

const Q: FieldSpec = FieldSpec::Rationals;

type Check = Result<String, String>;

fn arc(name: &str) -> Arc<SimplicialPair> {
    Arc::new(builtins::pair(name).unwrap())
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .output()
        .unwrap()
}

fn err(e: Error) -> String {
    e.to_string()
}

fn calibration() -> Check {
    let expected = [
        ("point", 1),
        ("c3", 0),
        ("s2", 2),
        ("torus", 0),
        ("s3", 0),
        ("genus2", -2),
    ];
    for (name, chi) in expected {
        let dd = DualityData::new(arc(name), Q).map_err(err)?;
        let counted = dd.manifold().total().euler_characteristic();
        let l = lefschetz_class(&GradedMap::identity(dd.absolute().clone()), &dd).map_err(err)?;
        let got = point_coefficient(&l);
        if counted != chi || got != Q.from_i64(chi) || l.degree() != 0 {
            return Err(format!(
                "{name}: L(Id) = {got}[pt], counted chi = {counted}, expected {chi}"
            ));
        }
    }
    Ok("L(Id) = chi[pt] on 6 manifolds".into())
}

fn duality() -> Check {
    let mut n = 0;
    for name in builtins::NAMES {
        for field in [Q, FieldSpec::prime(5).unwrap()] {
            DualityData::new(arc(name), field).map_err(|e| format!("{name} over {field}: {e}"))?;
            n += 1;
        }
    }
    let dir = std::env::temp_dir().join(format!("lefschetz-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("open-disk.json");
    std::fs::write(
        &path,
        r#"{"name": "disk", "vertex_count": 3, "facets": [[0, 1, 2]]}"#,
    )
    .map_err(|e| e.to_string())?;
    let code = bin(&[
        "lefschetz",
        "builtin:c3",
        path.to_str().unwrap(),
        "id",
        "const:0",
    ])
    .status
    .code();
    std::fs::remove_dir_all(&dir).ok();
    if code != Some(3) {
        return Err(format!("bad target exited with {code:?}, expected 3"));
    }
    Ok(format!(
        "D invertible in {n} (pair, field) cases; bad target exits 3"
    ))
}

fn torus_claim() -> Check {
    let torus = builtins::torus();
    let p = torus.proj_second().clone();
    let g = SimplicialMap::constant(torus.pair().clone(), arc("c3"), 0).map_err(err)?;
    let report = lefschetz_full(&p, &g, Q, true).map_err(err)?;
    if !report.condition_a {
        return Err("condition (A) false".into());
    }
    if !report.entries.iter().any(|e| e.degree == 1 && !e.is_zero()) {
        return Err("Lambda vanishes on H_1".into());
    }
    match report.oracle {
        Some(CoincidenceVerdict::Witness {
            simplex,
            barycentric,
            ..
        }) if verify_witness(&p, &g, &simplex, &barycentric) => {
            Ok(format!("Lambda nonzero on H_1, witness in {simplex:?}"))
        }
        other => Err(format!("oracle gave {other:?}")),
    }
}

fn suites(report: &VerifyReport, names: &[&str], min_cases: usize) -> Check {
    let mut parts = Vec::new();
    for name in names {
        let s = report.suite(name).ok_or(format!("missing suite {name}"))?;
        if !s.passed() {
            return Err(format!("{name}: {}", s.failures.join("; ")));
        }
        if s.cases < min_cases {
            return Err(format!("{name}: only {} cases", s.cases));
        }
        parts.push(format!("{name} {}", s.cases));
    }
    Ok(parts.join(", "))
}

fn soundness(report: &VerifyReport) -> Check {
    let summary = suites(report, &["coincidence-soundness"], 50)?;
    let torus = arc("torus");
    let id = SimplicialMap::identity(torus);
    let r = lefschetz_full(&id, &id, Q, true).map_err(err)?;
    match r.oracle {
        Some(v) if v.is_witness() && !r.is_nonzero() => Ok(format!(
            "{summary}; f = g = Id on T2 has Lambda = 0 and coincides"
        )),
        _ => Err("converse example not reproduced".into()),
    }
}

fn wong() -> Check {
    let c3 = arc("c3");
    let dd = Arc::new(DualityData::new(c3.clone(), Q).map_err(err)?);
    let id = SimplicialMap::identity(c3.clone());
    let wrap = builtins::map("double-wrap").map_err(err)?;
    let cases = [
        (
            "psi = id",
            id.clone(),
            SimplicialMap::constant(c3.clone(), c3.clone(), 0).map_err(err)?,
            id,
        ),
        (
            "psi = double-wrap",
            wrap.clone(),
            SimplicialMap::constant(wrap.source().clone(), c3.clone(), 0).map_err(err)?,
            wrap,
        ),
    ];
    let mut parts = Vec::new();
    for (label, f, g, psi) in cases {
        let s = Setting::with_duality(&f, dd.clone()).map_err(err)?;
        let z = HomologyClass::basis_element(s.source.relative.clone(), 1, 0);
        let lhs = point_coefficient(&s.lambda(&f, &g, &z).map_err(err)?);
        let rhs = wong_pairing(&psi, &z, &dd).map_err(err)?;
        if lhs != rhs {
            return Err(format!("{label}: [pt] coefficient {lhs} vs pairing {rhs}"));
        }
        parts.push(format!("{label}: {lhs}"));
    }
    Ok(parts.join(", "))
}

fn determinism() -> Check {
    let a = bin(&["verify", "--seed", "42"]);
    let b = bin(&["verify", "--seed", "42"]);
    if a.status.code() != Some(0) {
        return Err(format!("verify exited with {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let report = verify(42, 60);
    let identities = [
        "symmetry",
        "naturality",
        "naturality-transfer",
        "naturality-ii",
        "transfer-trace",
        "triviality",
        "degree-2n",
        "knill",
    ];
    let results: Vec<(&str, Check)> = vec![
        ("calibration", calibration()),
        ("duality", duality()),
        ("torus coincidence", torus_claim()),
        (
            "sphere triviality",
            suites(&report, &["sphere-triviality"], 10),
        ),
        (
            "identity suite",
            suites(&report, &identities, 1).and_then(|s| {
                if report.trials >= 50 {
                    Ok(format!("{} random pairs; {s}", report.trials))
                } else {
                    Err(format!("only {} trials", report.trials))
                }
            }),
        ),
        ("soundness", soundness(&report)),
        (
            "wong",
            wong().and_then(|w| suites(&report, &["wong"], 1).map(|s| format!("{w}; {s}"))),
        ),
        ("determinism", determinism()),
    ];
    let mut ok = true;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(detail) => {
                ok = false;
                println!("criterion {}: FAIL {name} ({detail})", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
