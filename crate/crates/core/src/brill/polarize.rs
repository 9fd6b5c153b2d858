use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{binomial, factorial_int, Rational, Vector};

/// Complete polarization of a homogeneous degree-`k` polynomial map `p`,
/// evaluated at `inputs = (w_1, ..., w_k)`:
///
/// `P̄(w_1, ..., w_k) = (1/k!) Σ_{∅ ≠ I ⊆ [k]} (-1)^{k-|I|} P(Σ_{i∈I} w_i)`.
///
/// Equal inputs are merged first, so `p` runs once per distinct subset sum
/// (`∏ (m_i + 1) - 1` times for input multiplicities `m_i`). The evaluations
/// run in parallel and are combined in a fixed order.
pub fn polarize_map<W, T, P>(inputs: &[W], p: P) -> Result<T>
where
    W: Vector + PartialEq,
    T: Vector,
    P: Fn(&W) -> Result<T> + Sync,
{
    let k = inputs.len();
    if k == 0 {
        return Err(Error::InvalidArgument("polarization of zero inputs".into()));
    }
    let mut distinct: Vec<(&W, u32)> = Vec::new();
    for w in inputs {
        match distinct.iter_mut().find(|(x, _)| *x == w) {
            Some((_, m)) => *m += 1,
            None => distinct.push((w, 1)),
        }
    }

    let mut choices: Vec<Vec<u32>> = vec![Vec::new()];
    for &(_, m) in &distinct {
        choices = choices
            .into_iter()
            .flat_map(|c| {
                (0..=m).map(move |i| {
                    let mut c = c.clone();
                    c.push(i);
                    c
                })
            })
            .collect();
    }
    choices.retain(|c| c.iter().any(|&i| i > 0));

    let evaluated: Vec<(Rational, T)> = choices
        .par_iter()
        .map(|c| {
            let mut sum: Option<W> = None;
            for (&(w, _), &i) in distinct.iter().zip(c) {
                if i == 0 {
                    continue;
                }
                let coef = Rational::from(i);
                match &mut sum {
                    Some(s) => s.axpy(&coef, w),
                    None => {
                        let mut s = w.clone();
                        s.scale(&coef);
                        sum = Some(s);
                    }
                }
            }
            let size: u32 = c.iter().sum();
            let mult: BigInt = distinct
                .iter()
                .zip(c)
                .map(|(&(_, m), &i)| binomial(m as u64, i as u64))
                .product();
            let sign = if (k as u32 - size) % 2 == 0 { mult } else { -mult };
            let value = p(sum.as_ref().expect("nonempty subset"))?;
            Ok((Rational::from_int(sign), value))
        })
        .collect::<Result<_>>()?;

    let norm = Rational::new(BigInt::one(), factorial_int(k as u64))?;
    let mut iter = evaluated.into_iter();
    let (c0, mut acc) = iter.next().expect("at least one subset");
    acc.scale(&c0);
    for (c, v) in iter {
        acc.axpy(&c, &v);
    }
    acc.scale(&norm);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    /// `a_1 e_1 + a_2 e_2 ↦ (a_1², a_1² + a_2²)`
    fn p(w: &Vec<Rational>) -> Result<Vec<Rational>> {
        let a1 = w[0].clone() * &w[0];
        let a2 = w[1].clone() * &w[1];
        Ok(vec![a1.clone(), a1 + a2])
    }

    #[test]
    fn quadratic_map_example() {
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        let on_e1e1 = polarize_map(&[e1.clone(), e1.clone()], p).unwrap();
        let on_e1e2 = polarize_map(&[e1.clone(), e2.clone()], p).unwrap();
        let on_e2e2 = polarize_map(&[e2.clone(), e2.clone()], p).unwrap();
        assert_eq!(on_e1e1, v(&[1, 1]));
        assert_eq!(on_e1e2, v(&[0, 0]));
        assert_eq!(on_e2e2, v(&[0, 1]));
        // extend linearly to a e_1^2 + b e_1 e_2 + c e_2^2
        let (a, b, c) = (Rational::from(7), Rational::from(-3), Rational::from(5));
        let mut total = on_e1e1.clone();
        total.scale(&a);
        total.axpy(&b, &on_e1e2);
        total.axpy(&c, &on_e2e2);
        assert_eq!(total, vec![a.clone(), a + c]);
        // general bilinear value (a_1 a_3, a_1 a_3 + a_2 a_4)
        let got = polarize_map(&[v(&[2, 3]), v(&[5, -7])], p).unwrap();
        assert_eq!(got, v(&[10, 10 - 21]));
    }

    #[test]
    fn diagonal_restriction() {
        let w = v(&[3, -2]);
        for k in 1..5 {
            let cubic = |x: &Vec<Rational>| -> Result<Vec<Rational>> {
                let s = x[0].clone() + x[1].clone() * &Rational::from(2);
                Ok(vec![s.pow(k as u32), x[1].pow(k as u32)])
            };
            let inputs = vec![w.clone(); k];
            assert_eq!(polarize_map(&inputs, cubic).unwrap(), cubic(&w).unwrap());
        }
    }

    #[test]
    fn linear_map_is_its_own_polarization() {
        let lin = |x: &Vec<Rational>| -> Result<Rational> { Ok(x[0].clone() * &Rational::from(3) - x[1].clone()) };
        let w = v(&[4, 9]);
        assert_eq!(polarize_map(&[w.clone()], lin).unwrap(), lin(&w).unwrap());
    }
}
