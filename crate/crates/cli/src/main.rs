mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lefschetz::document::ComplexDocument;
use lefschetz::homology::{homology, HomologyClass};
use lefschetz::lefschetz::{
    cross_fundamental, lefschetz_full, parameter_homology, parametrized_knill, point_coefficient,
    transfer, wong_pairing, DualityData, Setting,
};
use lefschetz::oracle::coincidence_witness;
use lefschetz::orientation::fundamental_class;
use lefschetz::product::product_pair;
use lefschetz::verify::{verify_with, Corpus, DEFAULT_TRIALS};
use lefschetz::{Error, FieldSpec, Matrix, Scalar, SimplicialPair};

use input::{load_map, load_pair};

/// Lefschetz coincidence homomorphisms of simplicial maps into triangulated manifolds.
///
/// Complexes are `builtin:<name>` or JSON documents; maps are `id`,
/// `const:<vertex>`, `builtin:<name>` or JSON documents.
#[derive(Parser)]
#[command(name = "lefschetz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Coefficient field: `q` or `p:<prime>`.
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    /// Also write a machine-readable report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and fundamental-class status of a pair.
    Homology {
        complex: String,
        #[command(flatten)]
        common: Common,
    },
    /// Λ_fg on a basis of H(X, A), degrees n..2n.
    Lefschetz {
        x: String,
        m: String,
        f: String,
        g: String,
        /// Search for an exact coincidence point (q only).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The transfer f_!^z for z a basis class of H(X, A).
    Transfer {
        x: String,
        m: String,
        f: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Compares the [pt] coefficient of Λ_fg(z) with ⟨Ō_M, ψ_*(z)⟩ on H_n(X).
    Wong {
        x: String,
        m: String,
        f: String,
        g: String,
        psi: String,
        #[command(flatten)]
        common: Common,
    },
    /// Λ_pg(u × O_M) against L(g_u) for g : Y × M -> M and every basis class u of H(Y).
    Knill {
        y: String,
        m: String,
        g: String,
        #[command(flatten)]
        common: Common,
    },
    /// Exact coincidence search for f, g : X -> M.
    Witness {
        x: String,
        m: String,
        f: String,
        g: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Runs the seeded invariant suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// JSON array of complex documents replacing or extending the builtin corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidField(_)
        | Error::InvalidSimplex(_)
        | Error::MissingFace { .. }
        | Error::NotInTotal(_)
        | Error::NotSimplicial { .. }
        | Error::NotAPairMap { .. }
        | Error::ImageLength { .. } => 2,
        Error::NotPseudoManifold(_)
        | Error::NotPure(_)
        | Error::BoundaryMismatch
        | Error::NonOrientable(_)
        | Error::Disconnected
        | Error::Empty
        | Error::DualitySingular(_) => 3,
        _ => 1,
    }
}

fn write_json(path: &Option<PathBuf>, value: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, format!("{value}\n"))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn fractions(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_fraction_string).collect()
}

fn rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| fractions(m.row(r))).collect()
}

fn tuple(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn target(
    spec: &str,
    field: FieldSpec,
) -> Result<(Arc<SimplicialPair>, Arc<DualityData>), Failure> {
    let (_, m) = load_pair(spec)?;
    let dd = Arc::new(DualityData::new(m.clone(), field)?);
    Ok((m, dd))
}

fn cmd_homology(spec: &str, common: &Common) -> Result<(), Failure> {
    let (name, pair) = load_pair(spec)?;
    let basis = homology(pair.clone(), common.field)?;
    let betti = basis.betti_numbers();
    let status = match fundamental_class(pair.clone()) {
        Ok(o) => format!("orientable, n = {}", o.degree()),
        Err(Error::NonOrientable(_)) => "non-orientable".into(),
        Err(Error::NotPseudoManifold(_)) => "not a pseudo-manifold".into(),
        Err(e) => format!("no fundamental class: {e}"),
    };
    let chi = pair.total().euler_characteristic();
    let mut out = String::new();
    writeln!(out, "complex: {name}").ok();
    writeln!(out, "field: {}", common.field).ok();
    let shown: Vec<String> = betti.iter().map(usize::to_string).collect();
    writeln!(out, "betti: ({})", shown.join(", ")).ok();
    writeln!(out, "euler characteristic: {chi}").ok();
    writeln!(out, "fundamental class: {status}").ok();
    print!("{out}");
    let doc = json!({
        "complex": name,
        "field": common.field.to_string(),
        "betti": betti,
        "euler_characteristic": chi,
        "fundamental_class": status,
    });
    write_json(
        &common.json,
        &serde_json::to_string_pretty(&doc).expect("json"),
    )
}

fn cmd_lefschetz(
    x: &str,
    m: &str,
    f: &str,
    g: &str,
    oracle: bool,
    common: &Common,
) -> Result<(), Failure> {
    let (_, xp) = load_pair(x)?;
    let (_, mp) = load_pair(m)?;
    let f = load_map(f, &xp, &mp)?;
    let g = load_map(g, &xp, &mp)?;
    let report = lefschetz_full(&f, &g, common.field, oracle)?;
    print!("{report}");
    write_json(&common.json, &report.to_json())
}

fn cmd_transfer(
    x: &str,
    m: &str,
    f: &str,
    degree: usize,
    index: usize,
    common: &Common,
) -> Result<(), Failure> {
    let (_, xp) = load_pair(x)?;
    let (mp, dd) = target(m, common.field)?;
    let f = load_map(f, &xp, &mp)?;
    let setting = Setting::with_duality(&f, dd.clone())?;
    let rel = &setting.source.relative;
    if index >= rel.betti(degree as isize) {
        return Err(Error::Parse(format!(
            "H_{degree}(X, A) has dimension {}, no basis class {index}",
            rel.betti(degree as isize)
        ))
        .into());
    }
    let z = HomologyClass::basis_element(rel.clone(), degree, index);
    let t = transfer(&f, &z, &setting.source, &dd)?;
    let mut out = String::new();
    writeln!(
        out,
        "transfer along a[{degree}]_{index}: degree {}",
        t.degree()
    )
    .ok();
    let mut blocks = Vec::new();
    for (k, b) in t.blocks().iter().enumerate() {
        let to = k as isize + t.degree();
        writeln!(out, "H_{k}(M) -> H_{to}(X): {}x{}", b.rows(), b.cols()).ok();
        for r in 0..b.rows() {
            writeln!(out, "  {}", tuple(b.row(r))).ok();
        }
        blocks.push(json!({"from": k, "to": to, "rows": rows(b)}));
    }
    print!("{out}");
    let doc = json!({"field": common.field.to_string(), "degree": t.degree(), "blocks": blocks});
    write_json(
        &common.json,
        &serde_json::to_string_pretty(&doc).expect("json"),
    )
}

fn cmd_wong(x: &str, m: &str, f: &str, g: &str, psi: &str, common: &Common) -> Result<(), Failure> {
    let (_, xp) = load_pair(x)?;
    let (mp, dd) = target(m, common.field)?;
    let f = load_map(f, &xp, &mp)?;
    let g = load_map(g, &xp, &mp)?;
    let psi = load_map(psi, &xp, &mp)?;
    let setting = Setting::with_duality(&f, dd.clone())?;
    let rel = &setting.source.relative;
    let n = dd.dim();
    let mut out = String::new();
    let mut rows = Vec::new();
    for j in 0..rel.betti(n as isize) {
        let z = HomologyClass::basis_element(rel.clone(), n, j);
        let lambda = point_coefficient(&setting.lambda(&f, &g, &z)?);
        let pairing = wong_pairing(&psi, &z, &dd)?;
        let equal = lambda == pairing;
        writeln!(
            out,
            "a[{n}]_{j}: Lambda [pt] = {lambda}, <O, psi_* z> = {pairing}, equal: {equal}"
        )
        .ok();
        rows.push(json!({
            "index": j,
            "lambda_point": lambda.to_fraction_string(),
            "pairing": pairing.to_fraction_string(),
            "equal": equal,
        }));
    }
    print!("{out}");
    let doc = json!({"field": common.field.to_string(), "n": n, "classes": rows});
    write_json(
        &common.json,
        &serde_json::to_string_pretty(&doc).expect("json"),
    )
}

fn cmd_knill(y: &str, m: &str, g: &str, common: &Common) -> Result<(), Failure> {
    let (_, yp) = load_pair(y)?;
    let (mp, dd) = target(m, common.field)?;
    let product = product_pair(Arc::new(yp.to_absolute()), mp.clone());
    let g = load_map(g, product.pair(), &mp)?;
    let setting = Setting::with_duality(&g, dd.clone())?;
    let hy = parameter_homology(&product, common.field)?;
    let p = product.proj_second();
    let mut out = String::new();
    let mut rows = Vec::new();
    for (k, &b) in hy.betti_numbers().iter().enumerate() {
        for j in 0..b {
            let u = HomologyClass::basis_element(hy.clone(), k, j);
            let uo = cross_fundamental(&u, &product, &setting.source, &dd)?;
            let lhs = setting.lambda(p, &g, &uo)?;
            let rhs = parametrized_knill(&g, &u, &product, &setting.source, &dd)?;
            let equal = lhs == rhs;
            writeln!(
                out,
                "u = a[{k}]_{j}: Lambda_pg(u x O) = {}, L(g_u) = {}, equal: {equal}",
                tuple(lhs.coords()),
                tuple(rhs.coords())
            )
            .ok();
            rows.push(json!({
                "degree": k,
                "index": j,
                "lambda": fractions(lhs.coords()),
                "trace": fractions(rhs.coords()),
                "equal": equal,
            }));
        }
    }
    print!("{out}");
    let doc = json!({"field": common.field.to_string(), "classes": rows});
    write_json(
        &common.json,
        &serde_json::to_string_pretty(&doc).expect("json"),
    )
}

fn cmd_witness(x: &str, m: &str, f: &str, g: &str, json: &Option<PathBuf>) -> Result<(), Failure> {
    let (_, xp) = load_pair(x)?;
    let (_, mp) = load_pair(m)?;
    let f = load_map(f, &xp, &mp)?;
    let g = load_map(g, &xp, &mp)?;
    let verdict = coincidence_witness(&f, &g)?;
    let text = serde_json::to_string_pretty(&verdict).expect("json");
    println!("{text}");
    write_json(json, &text)
}

fn cmd_verify(
    seed: u64,
    trials: usize,
    corpus: &Option<PathBuf>,
    json: &Option<PathBuf>,
) -> Result<(), Failure> {
    let corpus = match corpus {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let docs: Vec<ComplexDocument> = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Corpus::with_documents(&docs)?
        }
        None => Corpus::builtin(),
    };
    let report = verify_with(&corpus, seed, trials);
    print!("{report}");
    write_json(json, &report.to_json())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Homology { complex, common } => cmd_homology(complex, common),
        Command::Lefschetz {
            x,
            m,
            f,
            g,
            oracle,
            common,
        } => cmd_lefschetz(x, m, f, g, *oracle, common),
        Command::Transfer {
            x,
            m,
            f,
            degree,
            index,
            common,
        } => cmd_transfer(x, m, f, *degree, *index, common),
        Command::Wong {
            x,
            m,
            f,
            g,
            psi,
            common,
        } => cmd_wong(x, m, f, g, psi, common),
        Command::Knill { y, m, g, common } => cmd_knill(y, m, g, common),
        Command::Witness { x, m, f, g, json } => cmd_witness(x, m, f, g, json),
        Command::Verify {
            seed,
            trials,
            corpus,
            json,
        } => cmd_verify(*seed, *trials, corpus, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
