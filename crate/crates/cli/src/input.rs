use std::fs;
use std::sync::Arc;

use lefschetz::builtins;
use lefschetz::document::{ComplexDocument, MapDocument};
use lefschetz::{Error, SimplicialMap, SimplicialPair};

/// A complex given as `builtin:<name>` or a path to a JSON document.
pub fn load_pair(spec: &str) -> Result<(String, Arc<SimplicialPair>), Error> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok((name.into(), Arc::new(builtins::pair(name)?)));
    }
    let text = read(spec)?;
    let doc = ComplexDocument::parse(&text).map_err(|e| located(spec, e))?;
    Ok((
        doc.name.clone(),
        Arc::new(doc.to_pair().map_err(|e| located(spec, e))?),
    ))
}

/// A map given as `id`, `const:<vertex>`, `builtin:<name>` or a path to a JSON document.
pub fn load_map(
    spec: &str,
    source: &Arc<SimplicialPair>,
    target: &Arc<SimplicialPair>,
) -> Result<SimplicialMap, Error> {
    if spec == "id" {
        let images = (0..source.total().vertex_count()).collect();
        return SimplicialMap::new(source.clone(), target.clone(), images);
    }
    if let Some(v) = spec.strip_prefix("const:") {
        let v: usize = v
            .parse()
            .map_err(|_| Error::Parse(format!("'{spec}': expected const:<vertex>")))?;
        return SimplicialMap::constant(source.clone(), target.clone(), v);
    }
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtins::map(name)?.reframe(source.clone(), target.clone());
    }
    let text = read(spec)?;
    let doc = MapDocument::parse(&text).map_err(|e| located(spec, e))?;
    doc.to_map(source.clone(), target.clone())
        .map_err(|e| located(spec, e))
}

fn read(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn located(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{path}: {msg}")),
        other => other,
    }
}
