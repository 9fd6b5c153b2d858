use std::collections::BTreeMap;

use rayon::prelude::*;

use super::raise::{raise_curly_monomial, raise_plethysm_monomial};
use super::weight::{GLWeight, Partition, Weighted};
use crate::error::{Error, Result};
use crate::kernel::{binomial, kernel_basis, RatMatrix, Rational};
use crate::polyspace::{wedge_len, CurlyElement, Mono, WedgeMono};

/// The raising operators `E^1_2`, `E^2_3` of `GL_3` as 0-based pairs.
const RAISING: [(usize, usize); 2] = [(0, 1), (1, 2)];

fn check_dj(d: u32, j: u32) -> Result<()> {
    if j > d || j > d * d - d {
        return Err(Error::InvalidArgument(format!(
            "need j ≤ min(d, d²-d), got j = {j}, d = {d}"
        )));
    }
    Ok(())
}

/// `(e_1∧e_2)^{d+s-j-t} (e_1∧e_3)^t (e_2∧e_3)^{j-s} ⊗ e_1^{d²-d-s} e_2^t e_3^{s-t}`
fn family_monomial(d: u32, j: u32, s: u32, t: u32) -> (WedgeMono, Mono) {
    let w = WedgeMono::from_exps(&[(d + s - j - t) as u16, t as u16, (j - s) as u16]);
    let m = Mono::new(&[(d * d - d - s) as u16, t as u16, (s - t) as u16]);
    (w, m)
}

/// Monomial basis of the weight-`(d²-j, d, j)` space of
/// `S^d(∧²ℂ³) ⊗ S^{d²-d}ℂ³`, indexed by `0 ≤ t ≤ s ≤ j` in lexicographic order.
pub fn weight_basis_curly(d: u32, j: u32) -> Result<Vec<(WedgeMono, Mono)>> {
    check_dj(d, j)?;
    Ok((0..=j)
        .flat_map(|s| (0..=s).map(move |t| family_monomial(d, j, s, t)))
        .collect())
}

/// The highest weight vector of weight `(d²-j, d, j)`:
/// `Σ_{s ≤ j} Σ_{t ≤ s} (-1)^t C(j,s) C(s,t)` times the basis monomial `(s, t)`.
pub fn hwv_tilde(d: u32, j: u32) -> Result<CurlyElement> {
    check_dj(d, j)?;
    let mut out = CurlyElement::zero(3, (d, d * d - d));
    for s in 0..=j {
        for t in 0..=s {
            let mut c = Rational::from(binomial(j as u64, s as u64) * binomial(s as u64, t as u64));
            if t % 2 == 1 {
                c = -c;
            }
            out.add_term(family_monomial(d, j, s, t), c);
        }
    }
    Ok(out)
}

/// Every monomial of `S^d(∧²ℂ³) ⊗ S^mℂ³` of the given weight, in canonical order.
pub fn curly_weight_space(d: u32, m: u32, weight: &GLWeight) -> Vec<(WedgeMono, Mono)> {
    let mut out = Vec::new();
    if weight.n() != 3 || weight.total() != i64::from(2 * d + m) {
        return out;
    }
    for wm in Mono::all(wedge_len(3), d) {
        let w = WedgeMono::from_exps(wm.exps());
        let rest: Vec<i64> = weight.0.iter().zip(&w.weight().0).map(|(a, b)| a - b).collect();
        if rest.iter().all(|&x| x >= 0) {
            let exps: Vec<u16> = rest.iter().map(|&x| x as u16).collect();
            out.push((w, Mono::new(&exps)));
        }
    }
    out.sort();
    out
}

/// Joint kernel of `E^1_2` and `E^2_3` on the span of `basis`, as vectors of
/// coordinates with respect to `basis`.
fn raising_kernel<K, F>(basis: &[K], images: F) -> Vec<Vec<Rational>>
where
    K: Ord + Clone + Send + Sync,
    F: Fn(&K, usize, usize) -> Vec<(K, Rational)> + Sync,
{
    let columns: Vec<Vec<((usize, K), Rational)>> = basis
        .par_iter()
        .map(|b| {
            RAISING
                .iter()
                .enumerate()
                .flat_map(|(op, &(i, j))| images(b, i, j).into_iter().map(move |(k, c)| ((op, k), c)))
                .collect()
        })
        .collect();
    let mut row_of: BTreeMap<&(usize, K), usize> = BTreeMap::new();
    for col in &columns {
        for (key, _) in col {
            row_of.entry(key).or_insert(0);
        }
    }
    for (r, slot) in row_of.values_mut().enumerate() {
        *slot = r;
    }
    let mut m = RatMatrix::zeros(row_of.len(), basis.len());
    for (c, col) in columns.iter().enumerate() {
        for (key, v) in col {
            let r = row_of[key];
            let cur = m.get(r, c).clone();
            m.set(r, c, &cur + v);
        }
    }
    kernel_basis(&m)
}

/// Highest weight vectors in the span of the given monomials of
/// `S^d(∧²ℂ³) ⊗ S^mℂ³`: a basis of the joint kernel of the raising operators.
pub fn highest_weight_vectors(d: u32, m: u32, basis: &[(WedgeMono, Mono)]) -> Vec<CurlyElement> {
    raising_kernel(basis, |k, i, j| raise_curly_monomial(k, 3, i, j))
        .into_iter()
        .map(|v| {
            let mut e = CurlyElement::zero(3, (d, m));
            for (k, c) in basis.iter().zip(v) {
                e.add_term(k.clone(), c);
            }
            e
        })
        .collect()
}

/// Monomial basis of the weight-`λ` space of `S^k(S^dℂ³)`: sorted `k`-element
/// multisets of degree-`d` monomials whose weights add to `λ`.
pub fn plethysm_weight_basis(lambda: &Partition, k: u32, d: u32) -> Result<Vec<Vec<Mono>>> {
    let target = plethysm_target(lambda, k, d)?;
    let monos = Mono::all(3, d);
    let mut out = Vec::new();
    walk_multisets(&monos, &target, k, d, &mut |f| out.push(f.to_vec()));
    Ok(out)
}

fn plethysm_target(lambda: &Partition, k: u32, d: u32) -> Result<[i64; 3]> {
    if lambda.len() > 3 {
        return Err(Error::InvalidArgument(format!("{lambda} has more than 3 parts")));
    }
    if lambda.size() != k * d {
        return Err(Error::InvalidArgument(format!(
            "|λ| = {} but k·d = {}",
            lambda.size(),
            k * d
        )));
    }
    Ok(lambda.padded::<3>().map(i64::from))
}

fn walk_multisets(monos: &[Mono], target: &[i64; 3], k: u32, d: u32, visit: &mut dyn FnMut(&[Mono])) {
    fn rec(
        monos: &[Mono],
        start: usize,
        left: u32,
        d: u32,
        rest: [i64; 3],
        cur: &mut Vec<Mono>,
        visit: &mut dyn FnMut(&[Mono]),
    ) {
        if left == 0 {
            if rest == [0; 3] {
                visit(cur);
            }
            return;
        }
        let reach = i64::from(left * d);
        if rest.iter().any(|&r| r < 0 || r > reach) {
            return;
        }
        for idx in start..monos.len() {
            let e = monos[idx].exps();
            let next = [rest[0] - i64::from(e[0]), rest[1] - i64::from(e[1]), rest[2] - i64::from(e[2])];
            if next.iter().any(|&r| r < 0) {
                continue;
            }
            cur.push(monos[idx].clone());
            rec(monos, idx, left - 1, d, next, cur, visit);
            cur.pop();
        }
    }
    rec(monos, 0, k, d, *target, &mut Vec::new(), visit);
}

/// Multiplicity of `S_λℂ³` in `S^k(S^dℂ³)`: the dimension of the space of
/// highest weight vectors of weight `λ`. Fails when the weight space has more
/// than `column_cap` basis vectors.
pub fn multiplicity(lambda: &Partition, k: u32, d: u32, column_cap: usize) -> Result<usize> {
    let target = plethysm_target(lambda, k, d)?;
    let monos = Mono::all(3, d);
    let mut count: u128 = 0;
    walk_multisets(&monos, &target, k, d, &mut |_| count += 1);
    if count > column_cap as u128 {
        return Err(Error::CapExceeded {
            what: "weight-space basis size",
            estimate: count,
            cap: column_cap as u128,
        });
    }
    let basis = plethysm_weight_basis(lambda, k, d)?;
    if basis.is_empty() {
        return Ok(0);
    }
    Ok(raising_kernel(&basis, |f, i, j| raise_plethysm_monomial(f, i, j)).len())
}
