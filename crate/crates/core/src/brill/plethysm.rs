use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::Rational;
use crate::polyspace::{accumulate, Mono, SymElement};

/// Formal linear combination of products `m_1 · m_2 ⋯ m_k` of degree-`d`
/// monomials: an element of `S^k(S^dV)` in its monomial basis.
///
/// Each key is the sorted list of its `k` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethysmVector {
    n: usize,
    k: u32,
    d: u32,
    terms: BTreeMap<Vec<Mono>, Rational>,
}

impl PlethysmVector {
    pub fn zero(n: usize, k: u32, d: u32) -> Self {
        PlethysmVector {
            n,
            k,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(factors: Vec<Mono>, c: Rational) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
        let mut out = PlethysmVector::zero(first.n(), factors.len() as u32, first.degree());
        out.add_term(factors, c)?;
        Ok(out)
    }

    pub fn add_term(&mut self, mut factors: Vec<Mono>, c: Rational) -> Result<()> {
        if factors.len() as u32 != self.k {
            return Err(Error::grade(self.k, factors.len()));
        }
        for m in &factors {
            if m.n() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: m.n(),
                });
            }
            if m.degree() != self.d {
                return Err(Error::grade(self.d, m.degree()));
            }
        }
        factors.sort();
        accumulate(&mut self.terms, factors, c);
        Ok(())
    }

    /// Adds a product already known to have `k` factors of degree `d`.
    pub(crate) fn add_unchecked(&mut self, mut factors: Vec<Mono>, c: Rational) {
        factors.sort();
        accumulate(&mut self.terms, factors, c);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of factors per product.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Degree of each factor.
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[Mono]) -> Rational {
        let mut key = factors.to_vec();
        key.sort();
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Factors of a basis product as elements of `S^dV`.
    pub fn factor_elements(factors: &[Mono]) -> Vec<SymElement> {
        factors
            .iter()
            .map(|m| SymElement::monomial(m.clone(), Rational::from(1)))
            .collect()
    }
}
