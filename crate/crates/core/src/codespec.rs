//! JSON description of a cyclic code over R_{e,q}.
//!
//! ```json
//! {"p": 5, "m": 1, "e": 2, "n": 6, "g": [[1, 4], [1, 2, 2, 1]], "M": [[1, 4], [1, 1]], "label": "lcd"}
//! ```
//!
//! Coefficients are descending. Prime-subfield entries may be integers; any
//! entry may be a string such as `"w^5"`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::graymap::GrayMatrix;
use crate::poly::Poly;
use crate::ring::{Ring, RootOrder};
use crate::ring_cyclic::RingCyclicCode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    pub fn of(field: &Field, a: Gf) -> Coeff {
        if field.in_prime_subfield(a) {
            Coeff::Int(a.index() as i64)
        } else {
            Coeff::Text(field.format(a))
        }
    }

    pub fn resolve(&self, field: &Field) -> Result<Gf> {
        match self {
            Coeff::Int(v) => Ok(field.from_int(*v)),
            Coeff::Text(s) => field.parse(s),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(v) => write!(f, "{v}"),
            Coeff::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootOrderSpec {
    Canonical,
    FactorConstant,
    Explicit(Vec<Coeff>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub m: u32,
    pub e: usize,
    pub n: usize,
    pub g: Vec<Vec<Coeff>>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub gray_matrix: Option<Vec<Vec<Coeff>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Descending modulus of F_{p^m}; the built-in default when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_order: Option<RootOrderSpec>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_any_gamma: bool,
}

fn one() -> u32 {
    1
}

impl CodeSpec {
    pub fn from_json(s: &str) -> Result<CodeSpec> {
        serde_json::from_str(s).map_err(|e| Error::BadSpec(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<CodeSpec> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::BadSpec(format!("{}: {e}", path.display())))?;
        CodeSpec::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn field(&self) -> Result<Field> {
        Field::new(self.p, self.m, self.modulus.as_deref())
    }

    pub fn ring(&self) -> Result<Ring> {
        let field = self.field()?;
        let order = match &self.root_order {
            None | Some(RootOrderSpec::Canonical) => RootOrder::Canonical,
            Some(RootOrderSpec::FactorConstant) => RootOrder::FactorConstant,
            Some(RootOrderSpec::Explicit(roots)) => {
                RootOrder::Explicit(roots.iter().map(|c| c.resolve(&field)).collect::<Result<_>>()?)
            }
        };
        Ring::with_order(&field, self.e, order)
    }

    pub fn components(&self, field: &Field) -> Result<Vec<Poly>> {
        self.g
            .iter()
            .map(|c| Ok(Poly::from_desc(field, &c.iter().map(|x| x.resolve(field)).collect::<Result<Vec<_>>>()?)))
            .collect()
    }

    pub fn build(&self) -> Result<RingCyclicCode> {
        let ring = self.ring()?;
        let code = RingCyclicCode::build(&ring, self.n, &self.components(ring.field())?)?;
        match &self.gray_matrix {
            None => Ok(code),
            Some(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.resolve(ring.field())).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                code.with_gray_matrix(GrayMatrix::validate(&ring, rows, self.allow_any_gamma)?)
            }
        }
    }

    /// Spec reproducing `code`, with its Gray matrix when one is attached.
    pub fn from_code(code: &RingCyclicCode, label: Option<String>) -> CodeSpec {
        let ring = code.ring();
        let f = ring.field();
        let coeffs = |v: &[Gf]| v.iter().map(|&a| Coeff::of(f, a)).collect::<Vec<_>>();
        let root_order = match ring.order() {
            RootOrder::Canonical => None,
            RootOrder::FactorConstant => Some(RootOrderSpec::FactorConstant),
            RootOrder::Explicit(r) => Some(RootOrderSpec::Explicit(coeffs(r))),
        };
        let modulus = (f.m() > 1).then(|| f.modulus().iter().map(|&c| c as i64).collect());
        CodeSpec {
            p: f.p() as u64,
            m: f.m(),
            e: ring.e(),
            n: code.n(),
            g: code.comps().iter().map(|g| coeffs(&g.desc())).collect(),
            gray_matrix: code.gray_matrix().map(|m| m.rows().iter().map(|r| coeffs(r)).collect()),
            label,
            modulus,
            root_order,
            allow_any_gamma: code.gray_matrix().is_some_and(|m| !m.gamma_condition_holds()),
        }
    }
}
