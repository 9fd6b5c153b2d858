//! Single-operation requests used by the golden-file fixtures.

use brill_core::brill::{bbar, brill_b, e_map, girard_terms, pi_dd, q_map, qbar, GirardTerm};
use brill_core::{CurlyElement, Error, SymElement, Tens2Element};
use serde::{Deserialize, Serialize};

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Request {
    Polarize { f: SymElement, j: u32 },
    EMap { f: SymElement, j: u32 },
    QMap { f: SymElement, d: u32 },
    Qbar { fs: Vec<SymElement> },
    Bbar { fs: Vec<SymElement> },
    Brill { f: SymElement },
    Pi { t: Tens2Element },
    Girard { k: u32, d: u32 },
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Response {
    Tens2(Tens2Element),
    Curly(CurlyElement),
    Girard(Vec<GirardTerm>),
}

pub fn evaluate(req: &Request) -> Result<Response, Error> {
    Ok(match req {
        Request::Polarize { f, j } => Response::Tens2(f.polarize(*j)?),
        Request::EMap { f, j } => Response::Tens2(e_map(f, *j)?),
        Request::QMap { f, d } => Response::Tens2(q_map(f, *d)?),
        Request::Qbar { fs } => Response::Tens2(qbar(fs)?),
        Request::Bbar { fs } => Response::Curly(bbar(fs)?),
        Request::Brill { f } => Response::Curly(brill_b(f)?),
        Request::Pi { t } => Response::Curly(pi_dd(t)?),
        Request::Girard { k, d } => Response::Girard(girard_terms(*k, *d)),
    })
}
