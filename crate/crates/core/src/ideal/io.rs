use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{MonomialIdeal, Ring};
use crate::error::{Error, Result};

/// `{"ring": ["x1", ...], "generators": [[e1, ..., en], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub ring: Vec<String>,
    pub generators: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            ring: i.ring().vars().to_vec(),
            generators: i
                .generators()
                .iter()
                .map(|g| g.exps().iter().map(|&e| e as u32).collect())
                .collect(),
        }
    }
}

impl TryFrom<&IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: &IdealJson) -> Result<Self> {
        let ring: Arc<Ring> = Ring::new(j.ring.iter().cloned())?;
        MonomialIdeal::from_exponents(ring, &j.generators)
    }
}

impl MonomialIdeal {
    pub fn to_json(&self) -> IdealJson {
        IdealJson::from(self)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: IdealJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MonomialIdeal::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_minimalization_on_read() {
        let text = r#"{"ring":["x","y"],"generators":[[2,0],[1,1],[3,0]]}"#;
        let i = MonomialIdeal::from_json_str(text).unwrap();
        assert_eq!(i.render(), "(x^2, x*y)");
        let back = serde_json::to_string(&i.to_json()).unwrap();
        assert_eq!(MonomialIdeal::from_json_str(&back).unwrap(), i);
        assert!(MonomialIdeal::from_json_str(r#"{"ring":["x","x"],"generators":[]}"#).is_err());
        assert!(MonomialIdeal::from_json_str(r#"{"ring":["x"],"generators":[[70000]]}"#).is_err());
    }
}
