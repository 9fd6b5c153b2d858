use serde::Serialize;

use super::brill_b;
use crate::error::{Error, Result};
use crate::kernel::{binomial, mpoly::MPolyTerm, MPoly};
use crate::polyspace::{wedge_len, Mono, SymElement, WedgeMono};

/// One coordinate of `𝔅(f)` for a general `f = Σ c_α e^α`: a polynomial of
/// degree `d + 1` in the coefficients `c_α`.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation {
    pub wedge: WedgeMono,
    pub mono: Mono,
    pub poly: MPoly,
}

/// The general form `Σ c_α e^α` of degree `d`; variable `i` of the returned
/// coefficients is `c_α` for the `i`-th monomial of the returned list.
pub fn general_form(d: u32, n: usize) -> (Vec<Mono>, SymElement<MPoly>) {
    let monos = Mono::all(n, d);
    let f = SymElement::from_terms(
        n,
        d,
        monos.iter().enumerate().map(|(i, m)| (m.clone(), MPoly::var(i))),
    )
    .expect("monomials have degree d");
    (monos, f)
}

/// Upper bound on the number of coefficient terms in the output:
/// `dim S^d(∧²V) · dim S^{d²-d}V · dim S^{d+1}(coefficient space)`.
pub fn estimate_symbolic_terms(d: u32, n: usize) -> u128 {
    let dim_sym = |k: u64, m: u64| binomial(k + m - 1, m);
    let coeffs = dim_sym(n as u64, d as u64);
    let total = dim_sym(wedge_len(n) as u64, d as u64)
        * dim_sym(n as u64, (d * d - d) as u64)
        * dim_sym(coeffs.try_into().unwrap_or(u64::MAX), d as u64 + 1);
    total.try_into().unwrap_or(u128::MAX)
}

/// Brill's equations for `Ch_d(V)`, `dim V = n`: the nonzero coordinates of
/// `𝔅` evaluated on the general form, in canonical coordinate order.
pub fn symbolic_brill(d: u32, n: usize, term_cap: u128) -> Result<Vec<Equation>> {
    if d < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "symbolic generation needs d ≥ 2 and n ≥ 2, got d = {d}, n = {n}"
        )));
    }
    let estimate = estimate_symbolic_terms(d, n);
    if estimate > term_cap {
        return Err(Error::CapExceeded {
            what: "symbolic Brill equations",
            estimate,
            cap: term_cap,
        });
    }
    let (_, f) = general_form(d, n);
    let b = brill_b(&f)?;
    Ok(b.into_terms()
        .into_iter()
        .map(|((wedge, mono), poly)| Equation { wedge, mono, poly })
        .collect())
}

#[derive(Serialize)]
pub struct CoordinateJson {
    pub w: Vec<u16>,
    pub m: Vec<u16>,
}

#[derive(Serialize)]
pub struct EquationJson {
    pub coordinate: CoordinateJson,
    pub poly: Vec<MPolyTerm>,
}

/// Serialised form of [`symbolic_brill`]'s output.
#[derive(Serialize)]
pub struct SymbolicJson {
    pub d: u32,
    pub n: usize,
    pub equations: Vec<EquationJson>,
}

impl SymbolicJson {
    pub fn new(d: u32, n: usize, eqs: &[Equation]) -> Self {
        SymbolicJson {
            d,
            n,
            equations: eqs
                .iter()
                .map(|e| EquationJson {
                    coordinate: CoordinateJson {
                        w: e.wedge.wexps().to_vec(),
                        m: e.mono.exps().to_vec(),
                    },
                    poly: e.poly.to_terms(),
                })
                .collect(),
        }
    }
}
