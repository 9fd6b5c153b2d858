//! Closed-form evaluations of `𝔅̄` on the weight vectors
//! `v_j = (e_1^{d-1} e_2)^d · (e_1^{d-j} e_3^j)`, kept apart from the generic
//! pipeline so the two can be compared.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{binomial, factorial, Rational};
use crate::polyspace::{CurlyElement, Mono, SymElement, WedgeMono};

const N: usize = 3;

fn check(d: u32, j: u32) -> Result<()> {
    if d < 2 || j > d {
        return Err(Error::InvalidArgument(format!(
            "closed forms need d ≥ 2 and 0 ≤ j ≤ d, got d = {d}, j = {j}"
        )));
    }
    Ok(())
}

fn mono(a: u32, b: u32, c: u32) -> Mono {
    Mono::new(&[a as u16, b as u16, c as u16])
}

/// `(e1∧e2)^a (e1∧e3)^b (e2∧e3)^c`
fn wedge(a: u32, b: u32, c: u32) -> WedgeMono {
    WedgeMono::from_exps(&[a as u16, b as u16, c as u16])
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn binom(n: u32, k: u32) -> Rational {
    Rational::from_int(binomial(n as u64, k as u64))
}

/// The two factors `f = e_1^{d-1} e_2` and `g = e_1^{d-j} e_3^j` of `v_j`.
pub fn vj_factors(d: u32, j: u32) -> (SymElement, SymElement) {
    (
        SymElement::monomial(mono(d - 1, 1, 0), Rational::one()),
        SymElement::monomial(mono(d - j, 0, j), Rational::one()),
    )
}

/// `v_j` as the list of its `d + 1` factors.
pub fn vj(d: u32, j: u32) -> Vec<SymElement> {
    let (f, g) = vj_factors(d, j);
    let mut out = vec![f; d as usize];
    out.push(g);
    out
}

/// `(π_{d,d} ⊗ Id)((e_1^{d-j} e_3^j) ⊗ Q_d(e_1^{d-1} e_2))` in closed form:
/// `d! (e1∧e2)^{d-j} (e3∧e2)^j ⊗ e_1^{d²-d}`, plus
/// `(d-1) d! (e3∧e1)^d ⊗ e_1^{d²-2d} e_2^d` when `j = d`.
pub fn first_part_closed(d: u32, j: u32) -> Result<CurlyElement> {
    check(d, j)?;
    let m = d * d - d;
    let mut out = CurlyElement::zero(N, (d, m));
    let df = factorial(d as u64);
    // (e3∧e2)^j = (-1)^j (e2∧e3)^j
    out.add_term((wedge(d - j, 0, j), mono(m, 0, 0)), &df * &sign(j as i64));
    if j == d {
        let c = &(&df * &Rational::from(d - 1)) * &sign(d as i64);
        out.add_term((wedge(0, d, 0), mono(m - d, d, 0)), c);
    }
    Ok(out)
}

/// `(π_{d,d} ⊗ Id)((e_1^{d-1} e_2) ⊗ Q̄_d((e_1^{d-1} e_2)^{d-1} · (e_1^{d-j} e_3^j)))`
/// in closed form.
pub fn second_part_closed(d: u32, j: u32) -> Result<CurlyElement> {
    check(d, j)?;
    let m = d * d - d;
    let mut out = CurlyElement::zero(N, (d, m));
    let dm1 = factorial(d as u64 - 1);
    let one_minus_j = Rational::from(1 - j as i64);
    for s in 0..=j.min(d - 1) {
        let c = &(&(&sign(s as i64 - 1) * &binom(j, s)) * &one_minus_j) * &dm1;
        out.add_term((wedge(d - s, s, 0), mono(m - j, s, j - s)), c);
    }
    for s in 1..=j {
        let c = &(&(&sign(s as i64 - 1) * &binom(j, s)) * &Rational::from(s)) * &dm1;
        out.add_term((wedge(d - s, s - 1, 1), mono(m - j + 1, s - 1, j - s)), c);
    }
    Ok(out)
}

/// Closed form of `𝔅̄(v_j)` as a three-term sum over the canonical basis.
pub fn bbar_vj_closed(d: u32, j: u32) -> Result<CurlyElement> {
    check(d, j)?;
    let m = d * d - d;
    let pre = factorial(d as u64).checked_div(&Rational::from(d + 1))?;
    let mut out = CurlyElement::zero(N, (d, m));
    out.add_term((wedge(d - j, 0, j), mono(m, 0, 0)), &pre * &sign(j as i64));
    let one_minus_j = Rational::from(1 - j as i64);
    for s in 0..=j {
        let c = &(&(&sign(s as i64 - 1) * &binom(j, s)) * &one_minus_j) * &pre;
        out.add_term((wedge(d - s, s, 0), mono(m - j, s, j - s)), c);
    }
    for s in 1..=j {
        let c = &(&(&sign(s as i64 - 1) * &binom(j, s)) * &Rational::from(s)) * &pre;
        out.add_term((wedge(d - s, s - 1, 1), mono(m - j + 1, s - 1, j - s)), c);
    }
    debug_assert!(out.terms().all(|(_, c)| !c.is_zero()));
    Ok(out)
}
