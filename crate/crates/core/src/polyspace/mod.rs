//! The graded spaces `S^m V`, `S^a V ⊗ S^b V` and `S^d(∧²V) ⊗ S^m V` over a
//! basis `e_1..e_n`, with products, polarization and a canonical JSON form.

mod elements;
mod json;
mod mono;
mod parse;

pub use elements::{CurlyElement, SymElement, Tens2Element};
pub use json::{CurlyJson, SymJson, Tens2Json};
pub use mono::{pair_index, pair_of, wedge_len, wedge_of, Mono, WedgeMono};

pub(crate) use elements::accumulate;

use crate::error::Result;
use crate::kernel::Coeff;

pub fn sym_mul<R: Coeff>(f: &SymElement<R>, g: &SymElement<R>) -> Result<SymElement<R>> {
    f.mul(g)
}

pub fn tens_mul<R: Coeff>(x: &Tens2Element<R>, y: &Tens2Element<R>) -> Result<Tens2Element<R>> {
    x.mul(y)
}

pub fn polarize_element<R: Coeff>(f: &SymElement<R>, j: u32) -> Result<Tens2Element<R>> {
    f.polarize(j)
}
