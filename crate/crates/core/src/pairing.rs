//! The unitary-invariant pairing on `S^d(∧²ℂ³) ⊗ S^{d²-d}ℂ³` and the test
//! deciding which Pieri components `S_{(d²-j,d,j)}ℂ³` lie in the image of `𝔅̄`.
//!
//! Distinct canonical monomials are treated as orthogonal; a monomial
//! `(e_1∧e_2)^{a_1}(e_1∧e_3)^{a_2}(e_2∧e_3)^{a_3} ⊗ e^b` has squared norm
//! `2^{-d} · a!/d! · b!/m!`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::brill::{bbar, vj};
use crate::error::{Error, Result};
use crate::kernel::{factorial, factorial_int, Rational};
use crate::polyspace::{CurlyElement, Mono, WedgeMono};
use crate::rep::hwv_tilde;

/// `⟨𝔅̄(v_j), ṽ_j⟩` for a given `(d, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingValue {
    pub d: u32,
    pub j: u32,
    pub value: Rational,
}

fn norm_sq(w: &WedgeMono, m: &Mono) -> Rational {
    let d = w.degree();
    let deg_m = m.degree();
    let num: Rational = w
        .wexps()
        .iter()
        .chain(m.exps())
        .map(|&a| factorial(u64::from(a)))
        .product();
    let den = Rational::from(2).pow(d) * factorial(u64::from(d)) * factorial(u64::from(deg_m));
    num.checked_div(&den).expect("factorials are nonzero")
}

fn check_three(w: &WedgeMono, m: &Mono) -> Result<()> {
    if w.wexps().len() != 3 || m.n() != 3 {
        return Err(Error::InvalidArgument("the pairing is defined for dim V = 3".into()));
    }
    Ok(())
}

/// Squared norm of the basis monomial `w ⊗ m` of `S^d(∧²ℂ³) ⊗ S^{d²-d}ℂ³`.
pub fn mono_norm_sq(w: &WedgeMono, m: &Mono, d: u32) -> Result<Rational> {
    check_three(w, m)?;
    if w.degree() != d || m.degree() != d * d - d {
        return Err(Error::grade((d, d * d - d), (w.degree(), m.degree())));
    }
    Ok(norm_sq(w, m))
}

/// `⟨x, y⟩` by the diagonal rule on canonical monomials.
pub fn inner(x: &CurlyElement, y: &CurlyElement) -> Result<Rational> {
    if x.grade() != y.grade() {
        return Err(Error::grade(x.grade(), y.grade()));
    }
    if x.n() != 3 || y.n() != 3 {
        return Err(Error::InvalidArgument("the pairing is defined for dim V = 3".into()));
    }
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let mut acc = Rational::zero();
    for ((w, m), c) in small.terms() {
        if let Some(c2) = large.coeff(w, m) {
            acc += &(c * c2 * norm_sq(w, m));
        }
    }
    Ok(acc)
}

fn check_dj(d: u32, j: u32) -> Result<()> {
    if d < 2 || j > d {
        return Err(Error::InvalidArgument(format!(
            "need d ≥ 2 and j ≤ d, got d = {d}, j = {j}"
        )));
    }
    Ok(())
}

/// `⟨𝔅̄(v_j), ṽ_j⟩` with `𝔅̄(v_j)` evaluated by the generic polarization path.
pub fn pairing_generic(d: u32, j: u32) -> Result<PairingValue> {
    check_dj(d, j)?;
    let b = bbar(&vj(d, j))?;
    let value = inner(&b, &hwv_tilde(d, j)?)?;
    Ok(PairingValue { d, j, value })
}

/// `⟨𝔅̄(v_j), ṽ_j⟩` from its three-term closed form.
pub fn pairing_closed_form(d: u32, j: u32) -> Result<PairingValue> {
    check_dj(d, j)?;
    let f = |n: u32| factorial_int(u64::from(n));
    let (d2, jf) = (d * d - d, f(j));
    let jj = &jf * &jf;
    let mut sum = num_bigint::BigInt::zero();
    for t in 0..=j {
        sum += &jj * (i64::from(j) - 1) * f(d - t) * f(d2 - j) / f(j - t);
    }
    for t in 0..j {
        sum += &jj * f(d - t - 1) * f(d2 - j + 1) / f(j - t - 1);
    }
    let last = f(d - j) * &jf * f(d2);
    if j % 2 == 0 {
        sum += last;
    } else {
        sum -= last;
    }
    let den = Rational::from(2).pow(d) * Rational::from(d + 1) * factorial(u64::from(d2));
    let value = Rational::from(sum).checked_div(&den)?;
    Ok(PairingValue { d, j, value })
}

/// For each `j = 0..=d`, whether `S_{(d²-j,d,j)}V` lies in the image of `𝔅̄`.
pub fn image_pattern(d: u32) -> Vec<(u32, bool)> {
    (0..=d).map(|j| (j, j >= 2 && (d, j) != (3, 3))).collect()
}

/// Orthogonal projection of `x` on the line through `ṽ_j`: returns `c` with
/// projection `c · ṽ_j`.
pub fn project_on_hwv(x: &CurlyElement, d: u32, j: u32) -> Result<Rational> {
    let v = hwv_tilde(d, j)?;
    inner(x, &v)?.checked_div(&inner(&v, &v)?)
}

/// One row of the pairing table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingRow {
    pub d: u32,
    pub j: u32,
    pub closed_form: Rational,
    pub generic: Option<Rational>,
    pub in_image: bool,
}

impl PairingRow {
    /// Whether every computed value vanishes exactly when the component is
    /// outside the image.
    pub fn pattern_matches(&self) -> bool {
        let ok = |v: &Rational| v.is_zero() != self.in_image;
        ok(&self.closed_form) && self.generic.as_ref().map_or(true, ok)
    }
}

/// Pairing rows for `d` in `ds`, evaluating the generic path only for
/// `d ≤ max_generic_d`. Rows are computed in parallel and returned in
/// `(d, j)` order.
pub fn pairing_table(ds: impl IntoIterator<Item = u32>, max_generic_d: u32) -> Result<Vec<PairingRow>> {
    let cells: Vec<(u32, u32, bool)> = ds
        .into_iter()
        .flat_map(|d| image_pattern(d).into_iter().map(move |(j, b)| (d, j, b)))
        .collect();
    cells
        .par_iter()
        .map(|&(d, j, in_image)| {
            let generic = if d <= max_generic_d {
                Some(pairing_generic(d, j)?.value)
            } else {
                None
            };
            Ok(PairingRow {
                d,
                j,
                closed_form: pairing_closed_form(d, j)?.value,
                generic,
                in_image,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::polyspace::CurlyElement;
    use crate::rep::weight_basis_curly;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn monomial_norms() {
        for d in 2..=6u32 {
            let w = WedgeMono::from_pairs(3, &[(0, 1, d as u16)]);
            let m = Mono::new(&[(d * d - d) as u16, 0, 0]);
            assert_eq!(mono_norm_sq(&w, &m, d).unwrap(), Rational::one().checked_div(&Rational::from(2).pow(d)).unwrap());
        }
        let w = WedgeMono::from_pairs(3, &[(0, 1, 1), (0, 2, 1)]);
        assert_eq!(mono_norm_sq(&w, &Mono::new(&[0, 1, 1]), 2).unwrap(), q(1, 16));
        let w = WedgeMono::from_pairs(3, &[(0, 1, 2)]);
        assert_eq!(mono_norm_sq(&w, &Mono::new(&[0, 0, 2]), 2).unwrap(), q(1, 4));
        assert!(mono_norm_sq(&w, &Mono::new(&[0, 0, 3]), 2).is_err());
    }

    #[test]
    fn inner_products_of_hwvs() {
        for d in 2..=5u32 {
            let v0 = hwv_tilde(d, 0).unwrap();
            assert_eq!(inner(&v0, &v0).unwrap(), Rational::one().checked_div(&Rational::from(2).pow(d)).unwrap());
            for j in 0..=d {
                let vj = hwv_tilde(d, j).unwrap();
                assert!(!inner(&vj, &vj).unwrap().is_zero());
                for k in 0..j {
                    assert!(inner(&vj, &hwv_tilde(d, k).unwrap()).unwrap().is_zero());
                }
            }
        }
        let a = CurlyElement::parse(3, (2, 2), "w12^2@e1^2").unwrap();
        let b = CurlyElement::parse(3, (2, 2), "w13^2@e2^2").unwrap();
        assert!(inner(&a, &b).unwrap().is_zero());
        assert!(inner(&a, &CurlyElement::parse(3, (2, 1), "w12^2@e1").unwrap()).is_err());
    }

    #[test]
    fn closed_form_zero_pattern() {
        for d in 2..=8 {
            for (j, in_image) in image_pattern(d) {
                let v = pairing_closed_form(d, j).unwrap().value;
                assert_eq!(!v.is_zero(), in_image, "d = {d}, j = {j}: {v}");
            }
        }
        // 1728 + 2592 - 4320
        assert!(pairing_closed_form(3, 3).unwrap().value.is_zero());
    }

    #[test]
    fn generic_pairing_pattern_and_closed_form() {
        for d in 2..=3 {
            for (j, in_image) in image_pattern(d) {
                let g = pairing_generic(d, j).unwrap().value;
                assert_eq!(!g.is_zero(), in_image, "d = {d}, j = {j}: {g}");
                assert_eq!(g, pairing_closed_form(d, j).unwrap().value, "d = {d}, j = {j}");
            }
        }
    }

    #[test]
    fn projection_on_highest_weight_line() {
        for d in 2..=3 {
            for j in 0..=d {
                let b = bbar(&vj(d, j)).unwrap();
                let basis = weight_basis_curly(d, j).unwrap();
                assert!(b.terms().all(|(k, _)| basis.contains(k)));
                let c = project_on_hwv(&b, d, j).unwrap();
                let v = hwv_tilde(d, j).unwrap();
                let residual = b.clone() - v.scaled(&c);
                assert!(inner(&residual, &v).unwrap().is_zero());
                assert_eq!(c.is_zero(), pairing_generic(d, j).unwrap().value.is_zero());
            }
        }
    }

    #[test]
    fn table_rows_are_ordered() {
        let rows = pairing_table(2..=3, 2).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.d, r.j)).collect();
        assert_eq!(keys, [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)]);
        assert!(rows.iter().all(PairingRow::pattern_matches));
        assert!(rows[3].generic.is_none());
    }
}
