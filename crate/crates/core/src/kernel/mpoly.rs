use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_traits::{One, Zero};
use serde::Serialize;

use super::{Coeff, Rational};

/// Sparse polynomial over the rationals in variables `x_0, x_1, ...`.
///
/// Exponent vectors carry no trailing zeros, so polynomials in different
/// numbers of variables interoperate and the constant monomial is `[]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u16>, Rational>,
}

fn trim(mut e: Vec<u16>) -> Vec<u16> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exps(a: &[u16], b: &[u16]) -> Vec<u16> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

#[derive(Serialize)]
pub struct MPolyTerm {
    pub c: Rational,
    pub exps: Vec<u16>,
}

impl MPoly {
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        MPoly::monomial(e, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MPoly::monomial(Vec::new(), c)
    }

    pub fn monomial(exps: Vec<u16>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = trim(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    /// Substitutes `values[i]` for `x_i`.
    pub fn substitute<R: Coeff>(&self, values: &[R]) -> R {
        let mut out = R::zero();
        for (exps, c) in &self.terms {
            let mut t = R::from_rational(c);
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t = t * &values[i];
                }
            }
            out += &t;
        }
        out
    }

    /// Terms in canonical (lexicographic) order for serialisation.
    pub fn to_terms(&self) -> Vec<MPolyTerm> {
        self.terms
            .iter()
            .map(|(e, c)| MPolyTerm {
                c: c.clone(),
                exps: e.clone(),
            })
            .collect()
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl<'a> Mul<&'a MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Vec<u16>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(add_exps(ea, eb)).or_insert_with(Rational::zero) += &(ca * cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Coeff for MPoly {
    fn from_rational(r: &Rational) -> Self {
        MPoly::constant(r.clone())
    }

    fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MPoly::zero();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= r;
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &k) in e.iter().enumerate().filter(|(_, &k)| k > 0) {
                write!(f, "*x{v}^{k}")?;
            }
        }
        Ok(())
    }
}
