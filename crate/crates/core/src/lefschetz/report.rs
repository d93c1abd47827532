use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::complex::SimplicialMap;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::homology::HomologyClass;
use crate::oracle::{coincidence_witness, CoincidenceVerdict};

use super::{condition_a, point_coefficient, DualityData, Setting};

fn fractions<S: serde::Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Scalar::to_fraction_string))
}

fn fraction<S: serde::Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_fraction_string())
}

fn display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `Λ_fg(z)` for one basis class `z = a_index^degree` of `H(X, A)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LefschetzEntry {
    pub degree: usize,
    pub index: usize,
    /// Degree of the value, `|z| - n`.
    pub m: isize,
    /// Coordinates of `Λ_fg(z)` in the homology basis of `H_m(M)`.
    #[serde(serialize_with = "fractions")]
    pub value: Vec<Scalar>,
    /// Coefficient on `[pt]` when `m = 0`.
    #[serde(serialize_with = "fraction")]
    pub point_coefficient: Scalar,
}

impl LefschetzEntry {
    pub fn is_zero(&self) -> bool {
        self.value.iter().all(Scalar::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LefschetzReport {
    #[serde(serialize_with = "display")]
    pub field: FieldSpec,
    /// Dimension of the target manifold.
    pub n: usize,
    pub source_betti: Vec<usize>,
    pub target_betti: Vec<usize>,
    pub entries: Vec<LefschetzEntry>,
    pub condition_a: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<CoincidenceVerdict>,
    pub warnings: Vec<String>,
}

impl LefschetzReport {
    pub fn is_nonzero(&self) -> bool {
        self.entries.iter().any(|e| !e.is_zero())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn join(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for LefschetzReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "field: {}", self.field)?;
        writeln!(out, "target dimension n = {}", self.n)?;
        writeln!(out, "betti(X, A) = {:?}", self.source_betti)?;
        writeln!(out, "betti(M) = {:?}", self.target_betti)?;
        if self.entries.is_empty() {
            writeln!(out, "no classes of H(X, A) in degrees n..2n")?;
        }
        for e in &self.entries {
            write!(
                out,
                "Lambda(a[{}]_{}) in H_{}(M) = {}",
                e.degree,
                e.index,
                e.m,
                join(&e.value)
            )?;
            if e.m == 0 {
                write!(out, "  [pt] coefficient {}", e.point_coefficient)?;
            }
            writeln!(out)?;
        }
        writeln!(out, "condition (A): {}", self.condition_a)?;
        match &self.oracle {
            Some(CoincidenceVerdict::Witness {
                simplex,
                barycentric,
                in_subcomplex,
            }) => {
                writeln!(
                    out,
                    "oracle: coincidence in {simplex} at {}",
                    join(barycentric)
                )?;
                if *in_subcomplex {
                    writeln!(out, "oracle: the witness lies in A")?;
                }
            }
            Some(CoincidenceVerdict::Disjoint { simplices_checked }) => {
                writeln!(
                    out,
                    "oracle: no coincidence ({simplices_checked} simplices checked)"
                )?;
            }
            None => {}
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        Ok(())
    }
}

/// `Λ_fg` on every basis class of `H(X, A)` in degrees `n..=2n`, with the
/// condition (A) flag and, over `Q` when requested, the oracle verdict.
pub fn lefschetz_full(
    f: &SimplicialMap,
    g: &SimplicialMap,
    field: FieldSpec,
    oracle: bool,
) -> Result<LefschetzReport, Error> {
    if f.source().as_ref() != g.source().as_ref() || f.target().as_ref() != g.target().as_ref() {
        return Err(Error::BasisMismatch(
            "f and g must share source and target".into(),
        ));
    }
    let dd = Arc::new(DualityData::new(f.target().clone(), field)?);
    let setting = Setting::with_duality(f, dd.clone())?;
    report_in(&setting, f, g, oracle)
}

pub(crate) fn report_in(
    setting: &Setting,
    f: &SimplicialMap,
    g: &SimplicialMap,
    oracle: bool,
) -> Result<LefschetzReport, Error> {
    let dd = &setting.duality;
    let rel = &setting.source.relative;
    let n = dd.dim();
    let field = dd.field();
    let mut entries = Vec::new();
    for k in n..=2 * n {
        for j in 0..rel.betti(k as isize) {
            let z = HomologyClass::basis_element(rel.clone(), k, j);
            let value = setting.lambda(f, g, &z)?;
            entries.push(LefschetzEntry {
                degree: k,
                index: j,
                m: value.degree(),
                point_coefficient: point_coefficient(&value),
                value: value.coords().to_vec(),
            });
        }
    }
    let mut warnings = Vec::new();
    let verdict = match (oracle, field.is_rational()) {
        (true, true) => {
            let v = coincidence_witness(f, g)?;
            if let CoincidenceVerdict::Witness {
                in_subcomplex: true,
                ..
            } = v
            {
                warnings.push(
                    "the first coincidence found lies in A; the coincidence conclusion concerns X \\ A".into(),
                );
            }
            Some(v)
        }
        (true, false) => {
            warnings.push("the coincidence oracle runs over q only".into());
            None
        }
        _ => None,
    };
    Ok(LefschetzReport {
        field,
        n,
        source_betti: rel.betti_numbers(),
        target_betti: dd.absolute().betti_numbers(),
        entries,
        condition_a: condition_a(f, &setting.source, dd)?,
        oracle: verdict,
        warnings,
    })
}
