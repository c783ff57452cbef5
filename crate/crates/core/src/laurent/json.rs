use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::{var_names, LaurentPoly};
use crate::scalar::Scalar;

/// Wire form of a polynomial: coefficients as `"p/q"` strings and
/// exponents in half-units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp2: Vec<i32>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn to_json(&self, prefix: &str) -> PolyJson {
        PolyJson {
            vars: var_names(self.arity(), prefix),
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp2: e.clone(),
                })
                .collect(),
        }
    }
}

impl<C: Scalar + FromStr> LaurentPoly<C> {
    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let arity = j.vars.len();
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let c = C::from_str(&t.coeff)
                    .map_err(|_| Error::Invalid(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp2.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(arity, terms)
    }
}
