//! JSON documents for complexes, pairs and maps.
//!
//! ```json
//! {"name": "interval", "vertex_count": 3, "facets": [[0, 1], [1, 2]], "subcomplex": [[0], [2]]}
//! {"source": "c6", "target": "c3", "images": [0, 1, 2, 0, 1, 2]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SimplicialMap, SimplicialPair};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subcomplex: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub source: String,
    pub target: String,
    pub images: Vec<usize>,
}

fn parse_json<'a, T: Deserialize<'a>>(what: &str, text: &'a str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json("complex document", text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_pair(&self) -> Result<SimplicialPair, Error> {
        let total = SimplicialComplex::from_facets(self.vertex_count, &self.facets)?;
        let sub = match &self.subcomplex {
            Some(facets) => SimplicialComplex::from_facets(self.vertex_count, facets)?,
            None => SimplicialComplex::empty(self.vertex_count),
        };
        SimplicialPair::new(total, sub)
    }

    pub fn from_pair(name: &str, pair: &SimplicialPair) -> Self {
        let facets = |c: &SimplicialComplex| -> Vec<Vec<usize>> {
            c.facets().iter().map(|s| s.vertices().to_vec()).collect()
        };
        ComplexDocument {
            name: name.into(),
            vertex_count: pair.total().vertex_count(),
            facets: facets(pair.total()),
            subcomplex: (!pair.is_absolute()).then(|| facets(pair.sub())),
        }
    }
}

impl MapDocument {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json("map document", text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_map(
        &self,
        source: Arc<SimplicialPair>,
        target: Arc<SimplicialPair>,
    ) -> Result<SimplicialMap, Error> {
        SimplicialMap::new(source, target, self.images.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use proptest::prelude::*;

    #[test]
    fn builtins_round_trip() {
        for name in builtins::NAMES {
            let pair = builtins::pair(name).unwrap();
            let doc = ComplexDocument::from_pair(name, &pair);
            let again = ComplexDocument::parse(&doc.to_json()).unwrap();
            assert_eq!(again, doc);
            assert_eq!(again.to_pair().unwrap(), pair);
        }
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(ComplexDocument::parse("{"), Err(Error::Parse(_))));
        let unknown = r#"{"name":"x","vertex_count":1,"facets":[[0]],"extra":1}"#;
        assert!(ComplexDocument::parse(unknown).is_err());
        let bad = r#"{"name":"x","vertex_count":2,"facets":[[0,5]]}"#;
        assert!(ComplexDocument::parse(bad).unwrap().to_pair().is_err());
        let outside = r#"{"name":"x","vertex_count":3,"facets":[[0,1]],"subcomplex":[[2]]}"#;
        assert!(ComplexDocument::parse(outside).unwrap().to_pair().is_err());
    }

    #[test]
    fn map_document() {
        let text = r#"{"source": "c6", "target": "c3", "images": [0, 1, 2, 0, 1, 2]}"#;
        let doc = MapDocument::parse(text).unwrap();
        let c6 = Arc::new(builtins::pair("c6").unwrap());
        let c3 = Arc::new(builtins::pair("c3").unwrap());
        assert_eq!(
            doc.to_map(c6, c3).unwrap(),
            builtins::map("double-wrap").unwrap()
        );
        assert_eq!(MapDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    proptest! {
        #[test]
        fn complex_documents_round_trip(
            name in "[a-z0-9_-]{0,12}",
            facets in prop::collection::vec(prop::collection::vec(0usize..8, 1..4), 0..6),
            sub in prop::option::of(prop::collection::vec(prop::collection::vec(0usize..8, 1..3), 0..3)),
        ) {
            let doc = ComplexDocument { name, vertex_count: 8, facets, subcomplex: sub };
            let again = ComplexDocument::parse(&doc.to_json()).unwrap();
            prop_assert_eq!(again, doc);
        }

        #[test]
        fn map_documents_round_trip(images in prop::collection::vec(0usize..100, 0..20)) {
            let doc = MapDocument { source: "a".into(), target: "b".into(), images };
            prop_assert_eq!(MapDocument::parse(&doc.to_json()).unwrap(), doc);
        }
    }
}
