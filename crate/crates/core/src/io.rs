//! JSON shapes shared by the library and the command line: graphs on disk,
//! exact rationals as `{"num", "den"}` strings, spectra as value/mult lists.

use std::path::Path;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ExactPolynomial;
use crate::graph::{make_family, Graph};
use crate::numeric::{Spectrum, SpectrumEntry};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(x: &BigRational) -> Self {
        Self {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

pub(crate) fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    RationalJson::from(x).serialize(s)
}

/// Ascending coefficients.
pub fn poly_json(p: &ExactPolynomial) -> Vec<RationalJson> {
    p.coeffs().iter().map(RationalJson::from).collect()
}

pub fn spectrum_json(values: &[f64]) -> Vec<SpectrumEntry> {
    Spectrum::from_values(values).entries().to_vec()
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Graph::from_json(&text)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, g.to_json() + "\n").map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A graph argument: an existing file, otherwise a family spec such as
/// `cycle:4`. A `complement:` prefix takes the complement of the rest.
pub fn graph_arg(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if let Some(inner) = arg.strip_prefix("complement:") {
        Ok(graph_arg(inner)?.complement())
    } else if path.exists() {
        read_graph(path)
    } else {
        make_family(arg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q_frac;

    #[test]
    fn rational_shape() {
        let v = serde_json::to_value(RationalJson::from(&q_frac(-3, 6))).unwrap();
        assert_eq!(v, serde_json::json!({"num": "-1", "den": "2"}));
        let p = ExactPolynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(poly_json(&p).len(), 3);
    }

    #[test]
    fn graph_roundtrip_and_family_fallback() {
        let dir = std::env::temp_dir().join(format!("subspec-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c5.json");
        let g = make_family("cycle:5").unwrap();
        write_graph(&path, &g).unwrap();
        assert_eq!(graph_arg(path.to_str().unwrap()).unwrap(), g);
        assert_eq!(graph_arg("cycle:5").unwrap(), g);
        assert_eq!(graph_arg("complement:cycle:5").unwrap(), g.complement());
        assert!(graph_arg("no_such_family").is_err());
        assert!(matches!(
            read_graph(&dir.join("missing.json")),
            Err(Error::Io { .. })
        ));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
