use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::kernel::{factorial_int, Coeff, Rational};
use crate::polyspace::{wedge_len, wedge_of, CurlyElement, Mono, SymElement, Tens2Element, WedgeMono};

/// `π_{d,d}(e^a ⊗ e^b)` as a list of wedge monomials with integer coefficients.
///
/// Rather than summing over all `d!` permutations, assignments are grouped by
/// their letter-count table `N[u][v]` (how many letters `e_u` of the left factor
/// meet a letter `e_v` of the right factor). A table with zero diagonal is hit by
/// `∏ a_u! ∏ b_v! / ∏ N[u][v]!` permutations, each contributing
/// `∏ (e_u ∧ e_v)^{N[u][v]}`.
pub fn pi_monomials(a: &Mono, b: &Mono) -> Vec<(WedgeMono, Rational)> {
    let n = a.n();
    let mut out = Vec::new();
    let mut table = vec![0u16; n * n];
    let mut col_left: Vec<u16> = b.exps().to_vec();
    let scale: num_bigint::BigInt = a
        .exps()
        .iter()
        .chain(b.exps())
        .map(|&x| factorial_int(x as u64))
        .product();
    fill_rows(a.exps(), 0, 0, &mut col_left, &mut table, n, &mut |t| {
        let mut w = WedgeMono::one(n);
        let mut negative = false;
        let mut denom = num_bigint::BigInt::from(1);
        for u in 0..n {
            for v in 0..n {
                let k = t[u * n + v];
                if k == 0 {
                    continue;
                }
                let (idx, neg) = wedge_of(n, u, v).expect("diagonal is empty");
                w.0[idx] += k;
                negative ^= neg && k % 2 == 1;
                denom *= factorial_int(k as u64);
            }
        }
        let count = &scale / denom;
        let c = Rational::from_int(if negative { -count } else { count });
        out.push((w, c));
    });
    // distinct tables can land on the same wedge monomial
    let mut merged: Vec<(WedgeMono, Rational)> = Vec::new();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    for (w, c) in out {
        match merged.last_mut() {
            Some((lw, lc)) if *lw == w => *lc += &c,
            _ => merged.push((w, c)),
        }
    }
    merged.retain(|(_, c)| !num_traits::Zero::is_zero(c));
    merged
}

/// Fills row `u` of the count table, column by column, never using the diagonal.
fn fill_rows(
    rows: &[u16],
    u: usize,
    v: usize,
    col_left: &mut [u16],
    table: &mut [u16],
    n: usize,
    emit: &mut impl FnMut(&[u16]),
) {
    if u == n {
        if col_left.iter().all(|&c| c == 0) {
            emit(table);
        }
        return;
    }
    let placed: u16 = table[u * n..u * n + v].iter().sum();
    let left = rows[u] - placed;
    if v == n {
        if left == 0 {
            fill_rows(rows, u + 1, 0, col_left, table, n, emit);
        }
        return;
    }
    if u == v {
        fill_rows(rows, u, v + 1, col_left, table, n, emit);
        return;
    }
    for k in 0..=left.min(col_left[v]) {
        table[u * n + v] = k;
        col_left[v] -= k;
        fill_rows(rows, u, v + 1, col_left, table, n, emit);
        col_left[v] += k;
    }
    table[u * n + v] = 0;
}

/// `π_{d,d} : S^dV ⊗ S^dV → S^d(∧²V)`, with the image placed in
/// `S^d(∧²V) ⊗ S^0V`.
pub fn pi_dd<R: Coeff>(t: &Tens2Element<R>) -> Result<CurlyElement<R>> {
    let (a, b) = t.grade();
    if a != b {
        return Err(Error::grade((a, a), (a, b)));
    }
    let n = t.n();
    let mut out = CurlyElement::zero(n, (a, 0));
    for ((x, y), c) in t.terms() {
        for (w, k) in pi_monomials(x, y) {
            out.add_term((w, Mono::one(n)), c.scaled(&k));
        }
    }
    Ok(out)
}

/// `(π_{d,d} ⊗ Id)(f ⊗ t)` for `f ∈ S^dV` and `t ∈ S^dV ⊗ S^mV`.
pub fn pi_tensor<R: Coeff>(f: &SymElement<R>, t: &Tens2Element<R>) -> Result<CurlyElement<R>> {
    let d = f.grade();
    let (a, m) = t.grade();
    if a != d {
        return Err(Error::grade(d, a));
    }
    if f.n() != t.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            found: t.n(),
        });
    }
    let n = f.n();
    debug_assert!(wedge_len(n) > 0 || f.is_zero() || d == 0);
    let mut acc: FxHashMap<(WedgeMono, Mono), R> = FxHashMap::default();
    for (h, rest) in t.by_first_slot() {
        for (x, cx) in f.terms() {
            for (w, k) in pi_monomials(x, h) {
                let left = cx.scaled(&k);
                for &(r, cr) in &rest {
                    let c = left.clone() * cr;
                    match acc.get_mut(&(w.clone(), (*r).clone())) {
                        Some(v) => *v += &c,
                        None => {
                            acc.insert((w.clone(), (*r).clone()), c);
                        }
                    }
                }
            }
        }
    }
    let mut out = CurlyElement::zero(n, (d, m));
    for (k, c) in acc {
        out.add_term(k, c);
    }
    Ok(out)
}
