//! Brill's pipeline: `E_j`, the Girard combination `Q_d`, the projection
//! `π_{d,d}`, Brill's map `𝔅(f) = (π_{d,d} ⊗ Id)(f ⊗ Q_d(f))`, and the complete
//! polarizations `Q̄_d` and `𝔅̄`.

mod closed;
mod girard;
mod pi;
mod plethysm;
mod polarize;
mod qmap;
mod symbolic;

pub use closed::{bbar_vj_closed, first_part_closed, second_part_closed, vj, vj_factors};
pub use girard::{eval_girard, girard_terms, GirardTerm};
pub use pi::{pi_dd, pi_monomials, pi_tensor};
pub use plethysm::PlethysmVector;
pub use polarize::polarize_map;
pub use qmap::{e_map, q_map, q_map_via_e};
pub use symbolic::{
    estimate_symbolic_terms, general_form, symbolic_brill, Equation, SymbolicJson,
};

use crate::error::{Error, Result};
use crate::kernel::{Coeff, Rational};
use crate::polyspace::{CurlyElement, SymElement, Tens2Element};

/// Brill's map `𝔅(f) = (π_{d,d} ⊗ Id)(f ⊗ Q_d(f)) ∈ S^d(∧²V) ⊗ S^{d²-d}V`
/// for `f ∈ S^dV`. It vanishes exactly on products of linear forms.
pub fn brill_b<R: Coeff>(f: &SymElement<R>) -> Result<CurlyElement<R>> {
    let d = f.grade();
    if d == 0 {
        return Err(Error::InvalidArgument("Brill's map needs d ≥ 1".into()));
    }
    if f.n() < 2 {
        return Err(Error::InvalidArgument("Brill's map needs dim V ≥ 2".into()));
    }
    let q = q_map(f, d)?;
    pi_tensor(f, &q)
}

fn common_grade<R: Coeff>(fs: &[SymElement<R>]) -> Result<u32> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty argument list".into()))?;
    for f in fs {
        if f.n() != first.n() {
            return Err(Error::DimensionMismatch {
                expected: first.n(),
                found: f.n(),
            });
        }
        if f.grade() != first.grade() {
            return Err(Error::grade(first.grade(), f.grade()));
        }
    }
    Ok(first.grade())
}

/// `Q̄_d(f_1 ⋯ f_d)`, the complete polarization of `Q_d`.
pub fn qbar<R: Coeff>(fs: &[SymElement<R>]) -> Result<Tens2Element<R>> {
    let d = common_grade(fs)?;
    if fs.len() != d as usize {
        return Err(Error::InvalidArgument(format!(
            "Q̄_d takes d = {d} arguments, got {}",
            fs.len()
        )));
    }
    polarize_map(fs, |f| q_map(f, d))
}

/// `𝔅̄(f_1 ⋯ f_{d+1}) = 1/(d+1) Σ_i (π_{d,d} ⊗ Id)(f_i ⊗ Q̄_d(f_1 ⋯ f̂_i ⋯ f_{d+1}))`.
pub fn bbar<R: Coeff>(fs: &[SymElement<R>]) -> Result<CurlyElement<R>> {
    let d = common_grade(fs)?;
    if fs.len() != d as usize + 1 {
        return Err(Error::InvalidArgument(format!(
            "𝔅̄ takes d + 1 = {} arguments, got {}",
            d + 1,
            fs.len()
        )));
    }
    let n = fs[0].n();
    let mut out = CurlyElement::zero(n, (d, d * d - d));
    let mut seen: Vec<&SymElement<R>> = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        if seen.contains(&f) {
            continue;
        }
        seen.push(f);
        let copies = fs.iter().filter(|g| *g == f).count();
        let rest: Vec<SymElement<R>> = fs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let q = qbar(&rest)?;
        let part = pi_tensor(f, &q)?;
        out += &part.scaled(&Rational::new(copies as i64, d as i64 + 1)?);
    }
    Ok(out)
}

/// `𝔅̄` extended linearly to a combination of basis products.
pub fn bbar_plethysm(v: &PlethysmVector) -> Result<CurlyElement> {
    let d = v.d();
    if v.k() != d + 1 {
        return Err(Error::grade(d + 1, v.k()));
    }
    let mut out = CurlyElement::zero(v.n(), (d, d * d - d));
    for (factors, c) in v.terms() {
        let fs = PlethysmVector::factor_elements(factors);
        out += &bbar(&fs)?.scaled(c);
    }
    Ok(out)
}

/// `Q̄_d(f^{d-1} g)` through the directional-derivative expansion of the
/// Girard form: one `g` substituted into each polarization slot, plus the
/// trailing-power term.
pub fn qbar_power_form<R: Coeff>(f: &SymElement<R>, g: &SymElement<R>, d: u32) -> Result<Tens2Element<R>> {
    if f.grade() != d || g.grade() != d {
        return Err(Error::grade(d, (f.grade(), g.grade())));
    }
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            found: g.n(),
        });
    }
    let n = f.n();
    let fp: Vec<Tens2Element<R>> = (1..=d).map(|j| f.polarize(j)).collect::<Result<_>>()?;
    let gp: Vec<Tens2Element<R>> = (1..=d).map(|j| g.polarize(j)).collect::<Result<_>>()?;
    let dq = Rational::from(d);
    let mut out = Tens2Element::zero(n, (d, d * d - d));
    for term in girard_terms(d, d) {
        let len = term.length();
        let tail = f.pow(d - len);
        for (s, &is) in term.multidegree.iter().enumerate() {
            if is == 0 {
                continue;
            }
            let mut prod = gp[s].clone();
            for (j, &ij) in term.multidegree.iter().enumerate() {
                let power = if j == s { ij - 1 } else { ij };
                if power > 0 {
                    prod = prod.mul(&fp[j].pow(power))?;
                }
            }
            let c = &term.coeff * &Rational::from(is).checked_div(&dq)?;
            out += &prod.mul_second(&tail)?.scaled(&c);
        }
        if len < d {
            let mut prod = Tens2Element::one(n);
            for (j, &ij) in term.multidegree.iter().enumerate() {
                if ij > 0 {
                    prod = prod.mul(&fp[j].pow(ij))?;
                }
            }
            let trailing = f.pow(d - len - 1).mul(g)?;
            let c = &term.coeff * &Rational::from(d - len).checked_div(&dq)?;
            out += &prod.mul_second(&trailing)?.scaled(&c);
        }
    }
    Ok(out)
}
