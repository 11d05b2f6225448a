//! Small JSON file formats shared by the command-line tool and the demo.
//!
//! Matrices (`{"n", "rows"}`), measures (`{"atoms"}`) and certificates have
//! their own types next to the code that uses them; this module adds the
//! remaining input formats and file loading.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::polycore::rational::serde_rational_vec;
use crate::polycore::{Poly, Rational};
use crate::{Error, Result};

/// A polynomial in the monomial basis, lowest degree first:
/// `{"poly": ["1", "0", "-1/2"]}`. Other keys are ignored, so a certificate
/// file is also accepted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(with = "serde_rational_vec")]
    pub poly: Vec<Rational>,
}

impl PolyJson {
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.poly.clone())
    }
}

/// Samples `(x, f(x))` of a function on `(0, ∞)`: `{"samples": [[x, fx], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplesJson {
    pub samples: Vec<(f64, f64)>,
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_file<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}
