use num_bigint::BigInt;
use serde::Serialize;

use crate::kernel::{factorial_int, Rational};

/// One monomial `coeff · e_1^{i_1} ⋯ e_d^{i_d}` of the power sum `p_k`
/// written in the elementary symmetric functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirardTerm {
    /// `(i_1, ..., i_d)` with `i_1 + 2 i_2 + ... + d i_d = k`.
    pub multidegree: Vec<u32>,
    pub coeff: Rational,
}

impl GirardTerm {
    /// `i_1 + ... + i_d`
    pub fn length(&self) -> u32 {
        self.multidegree.iter().sum()
    }
}

/// Newton–Girard expansion of `p_k` in `e_1, ..., e_d`:
/// `Σ k (-1)^{k+Σi} (Σi - 1)! / (i_1! ⋯ i_d!) e_1^{i_1} ⋯ e_d^{i_d}`.
///
/// Terms are listed with `i_1` descending, then `i_2` descending, and so on.
pub fn girard_terms(k: u32, d: u32) -> Vec<GirardTerm> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; d as usize];
    enumerate(k, 0, &mut cur, &mut out);
    out.into_iter()
        .map(|multidegree| {
            let len: u32 = multidegree.iter().sum();
            let denom: BigInt = multidegree
                .iter()
                .map(|&i| factorial_int(i as u64))
                .product();
            let sign = if (k + len) % 2 == 0 { 1 } else { -1 };
            let numer = BigInt::from(sign * k as i64) * factorial_int(len as u64 - 1);
            GirardTerm {
                multidegree,
                coeff: Rational::new(numer, denom).expect("nonzero denominator"),
            }
        })
        .collect()
}

fn enumerate(left: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let weight = pos as u32 + 1;
    for i in (0..=left / weight).rev() {
        cur[pos] = i;
        enumerate(left - i * weight, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

/// Evaluates `p_k` through the Girard expansion at the elementary symmetric
/// values `es = [e_1, ..., e_d]`.
pub fn eval_girard(k: u32, es: &[Rational]) -> Rational {
    girard_terms(k, es.len() as u32)
        .into_iter()
        .map(|t| {
            t.multidegree
                .iter()
                .zip(es)
                .fold(t.coeff.clone(), |acc, (&i, e)| acc * e.pow(i))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(k: u32, d: u32) -> Vec<(Vec<u32>, Rational)> {
        girard_terms(k, d)
            .into_iter()
            .map(|t| (t.multidegree, t.coeff))
            .collect()
    }

    #[test]
    fn p2_and_p3() {
        // p_2 = e_1^2 - 2 e_2
        assert_eq!(
            terms(2, 2),
            vec![(vec![2, 0], Rational::from(1)), (vec![0, 1], Rational::from(-2))]
        );
        // p_3 = e_1^3 - 3 e_1 e_2 + 3 e_3
        assert_eq!(
            terms(3, 3),
            vec![
                (vec![3, 0, 0], Rational::from(1)),
                (vec![1, 1, 0], Rational::from(-3)),
                (vec![0, 0, 1], Rational::from(3)),
            ]
        );
        assert_eq!(terms(1, 4), vec![(vec![1, 0, 0, 0], Rational::from(1))]);
    }

    #[test]
    fn matches_power_sums_of_roots() {
        // oracle: p_k computed directly from roots vs. the expansion in e_j(roots)
        let roots: Vec<Rational> = [2, -1, 3, 5, -4].iter().map(|&x| Rational::from(x)).collect();
        let d = roots.len();
        let mut es = vec![Rational::from(0); d];
        for mask in 1u32..(1 << d) {
            let prod: Rational = (0..d)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| roots[i].clone())
                .product();
            es[mask.count_ones() as usize - 1] += &prod;
        }
        for k in 1..=8 {
            let direct: Rational = roots.iter().map(|r| r.pow(k)).sum();
            assert_eq!(eval_girard(k, &es), direct, "k = {k}");
        }
    }
}
