use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CurlyElement, Mono, SymElement, Tens2Element, WedgeMono};
use crate::error::Error;
use crate::kernel::Rational;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymTermJson {
    pub c: Rational,
    pub m: Vec<u16>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymJson {
    pub n: usize,
    pub grade: u32,
    pub terms: Vec<SymTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tens2TermJson {
    pub c: Rational,
    pub m1: Vec<u16>,
    pub m2: Vec<u16>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tens2Json {
    pub n: usize,
    pub grade: [u32; 2],
    pub terms: Vec<Tens2TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurlyTermJson {
    pub c: Rational,
    pub w: Vec<u16>,
    pub m: Vec<u16>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurlyJson {
    pub n: usize,
    pub grade: [u32; 2],
    pub terms: Vec<CurlyTermJson>,
}

impl From<&SymElement> for SymJson {
    fn from(f: &SymElement) -> Self {
        SymJson {
            n: f.n(),
            grade: f.grade(),
            terms: f
                .terms()
                .map(|(m, c)| SymTermJson {
                    c: c.clone(),
                    m: m.exps().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymJson> for SymElement {
    type Error = Error;
    fn try_from(j: SymJson) -> Result<Self, Error> {
        SymElement::from_terms(j.n, j.grade, j.terms.into_iter().map(|t| (Mono::new(&t.m), t.c)))
    }
}

impl From<&Tens2Element> for Tens2Json {
    fn from(x: &Tens2Element) -> Self {
        let (a, b) = x.grade();
        Tens2Json {
            n: x.n(),
            grade: [a, b],
            terms: x
                .terms()
                .map(|((m1, m2), c)| Tens2TermJson {
                    c: c.clone(),
                    m1: m1.exps().to_vec(),
                    m2: m2.exps().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<Tens2Json> for Tens2Element {
    type Error = Error;
    fn try_from(j: Tens2Json) -> Result<Self, Error> {
        Tens2Element::from_terms(
            j.n,
            (j.grade[0], j.grade[1]),
            j.terms
                .into_iter()
                .map(|t| ((Mono::new(&t.m1), Mono::new(&t.m2)), t.c)),
        )
    }
}

impl From<&CurlyElement> for CurlyJson {
    fn from(x: &CurlyElement) -> Self {
        let (a, b) = x.grade();
        CurlyJson {
            n: x.n(),
            grade: [a, b],
            terms: x
                .terms()
                .map(|((w, m), c)| CurlyTermJson {
                    c: c.clone(),
                    w: w.wexps().to_vec(),
                    m: m.exps().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<CurlyJson> for CurlyElement {
    type Error = Error;
    fn try_from(j: CurlyJson) -> Result<Self, Error> {
        CurlyElement::from_terms(
            j.n,
            (j.grade[0], j.grade[1]),
            j.terms
                .into_iter()
                .map(|t| ((WedgeMono::from_exps(&t.w), Mono::new(&t.m)), t.c)),
        )
    }
}

macro_rules! serde_via {
    ($ty:ty, $json:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                <$json>::from(self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let j = <$json>::deserialize(d)?;
                <$ty>::try_from(j).map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via!(SymElement, SymJson);
serde_via!(Tens2Element, Tens2Json);
serde_via!(CurlyElement, CurlyJson);
