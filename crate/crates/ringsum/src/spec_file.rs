//! Ring-spec files: UTF-8 JSON objects with keys `name`, `orders`,
//! `products` (an `r x r` array of length-`r` coefficient arrays),
//! `commutative` and an optional `unit`.
//!
//! Coefficients must already be reduced; out-of-range values are rejected.

use std::fs;
use std::path::Path;

use ringsum_core::ring::RingSpec;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub name: String,
    pub orders: Vec<u64>,
    pub products: Vec<Vec<Vec<u64>>>,
    pub commutative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<u64>>,
}

impl SpecFile {
    /// Structural checks only; see [`load`] for a validated spec.
    pub fn into_spec(self) -> Result<RingSpec> {
        Ok(RingSpec::new(
            self.name,
            self.orders,
            self.products,
            self.commutative,
            self.unit,
        )?)
    }
}

impl From<&RingSpec> for SpecFile {
    fn from(spec: &RingSpec) -> Self {
        SpecFile {
            name: spec.name().to_string(),
            orders: spec.orders().to_vec(),
            products: spec.products().to_vec(),
            commutative: spec.commutative(),
            unit: spec.unit().map(|u| u.into_coeffs()),
        }
    }
}

pub fn parse(text: &str, path: &Path) -> Result<SpecFile> {
    serde_json::from_str(text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a spec without checking the ring laws.
pub fn load_unvalidated(path: &Path) -> Result<RingSpec> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, path)?.into_spec()
}

/// Reads a spec and rejects it unless every ring law holds.
pub fn load(path: &Path) -> Result<RingSpec> {
    Ok(load_unvalidated(path)?.validated()?)
}

pub fn to_json(spec: &RingSpec) -> String {
    serde_json::to_string(&SpecFile::from(spec)).expect("spec serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringsum_core::ring::builtin::{gaussian, null_ring};

    #[test]
    fn round_trip() {
        for spec in [gaussian(3).unwrap(), null_ring(2).unwrap()] {
            let text = to_json(&spec);
            let back = parse(&text, Path::new("mem")).unwrap().into_spec().unwrap();
            assert_eq!(back, spec);
        }
        assert_eq!(
            to_json(&null_ring(2).unwrap()),
            r#"{"name":"Null(2)","orders":[2],"products":[[[0]]],"commutative":true}"#
        );
    }

    #[test]
    fn rejects_bad_input() {
        let p = Path::new("mem");
        let unreduced = r#"{"name":"x","orders":[3],"products":[[[3]]],"commutative":true}"#;
        assert!(matches!(
            parse(unreduced, p).unwrap().into_spec(),
            Err(Error::Core(ringsum_core::Error::Unreduced { .. }))
        ));
        let extra = r#"{"name":"x","orders":[3],"products":[[[1]]],"commutative":true,"zz":1}"#;
        assert!(matches!(parse(extra, p), Err(Error::Json { .. })));
        let negative = r#"{"name":"x","orders":[3],"products":[[[-1]]],"commutative":true}"#;
        assert!(parse(negative, p).is_err());
    }
}
