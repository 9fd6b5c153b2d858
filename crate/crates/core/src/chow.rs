//! Products of linear forms, seeded sampling of Chow and generic points, and
//! the membership predicate `𝔅(f) = 0`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::brill::brill_b;
use crate::error::{Error, Result};
use crate::kernel::Rational;
use crate::polyspace::{Mono, SymElement};

/// Inclusive range of the integer coefficients drawn by [`sample`].
pub const SAMPLE_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

/// `d` linear forms on `V = ℂ^n`, each a coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFormList {
    n: usize,
    forms: Vec<Vec<i64>>,
}

impl LinearFormList {
    pub fn new(n: usize, forms: Vec<Vec<i64>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::InvalidArgument("need at least one linear form".into()));
        }
        if let Some(bad) = forms.iter().find(|l| l.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(LinearFormList { n, forms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[Vec<i64>] {
        &self.forms
    }

    pub fn d(&self) -> u32 {
        self.forms.len() as u32
    }
}

/// The expanded product `l_1 ⋯ l_d`.
pub fn expand_product(ls: &LinearFormList) -> SymElement {
    ls.forms.iter().fold(SymElement::one(ls.n), |acc, l| {
        let coeffs: Vec<Rational> = l.iter().map(|&c| Rational::from(c)).collect();
        acc.mul(&SymElement::linear(&coeffs))
            .expect("factors share the ambient dimension")
    })
}

/// Whether `𝔅(f) = 0`, i.e. `[f]` lies on the Chow variety of products of
/// linear forms.
pub fn is_brill_zero(f: &SymElement) -> Result<bool> {
    Ok(brill_b(f)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    /// A product of `d` random linear forms.
    Chow,
    /// A form with independent random coefficients.
    Generic,
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleKind::Chow => "chow",
            SampleKind::Generic => "generic",
        })
    }
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chow" => Ok(SampleKind::Chow),
            "generic" => Ok(SampleKind::Generic),
            _ => Err(Error::Parse(format!("unknown sample kind {s:?}"))),
        }
    }
}

/// Random linear forms with coefficients in [`SAMPLE_RANGE`].
pub fn sample_linear_forms(seed: u64, d: u32, n: usize) -> LinearFormList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forms = (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(SAMPLE_RANGE)).collect())
        .collect();
    LinearFormList { n, forms }
}

/// Deterministic pseudo-random element of `S^dℂ^n` of the requested kind.
pub fn sample(seed: u64, d: u32, n: usize, kind: SampleKind) -> SymElement {
    match kind {
        SampleKind::Chow => expand_product(&sample_linear_forms(seed, d, n)),
        SampleKind::Generic => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let terms: Vec<(Mono, Rational)> = Mono::all(n, d)
                .into_iter()
                .map(|m| (m, Rational::from(rng.gen_range(SAMPLE_RANGE))))
                .collect();
            SymElement::from_terms(n, d, terms).expect("monomials have degree d")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize, d: u32, s: &str) -> SymElement {
        SymElement::parse(n, d, s).unwrap()
    }

    #[test]
    fn products() {
        let p = |forms: Vec<Vec<i64>>| expand_product(&LinearFormList::new(3, forms).unwrap());
        assert_eq!(p(vec![vec![1, 0, 0], vec![0, 1, 0]]), sym(3, 2, "e1*e2"));
        assert_eq!(p(vec![vec![1, 1, 0], vec![1, -1, 0]]), sym(3, 2, "e1^2 - e2^2"));
        assert_eq!(p(vec![vec![1, 0, 0]; 4]), sym(3, 4, "e1^4"));
        assert!(p(vec![vec![1, 2, 3], vec![0, 0, 0]]).is_zero());
        assert!(LinearFormList::new(3, vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn membership() {
        assert!(!is_brill_zero(&sym(3, 2, "e1*e2 + e3^2")).unwrap());
        assert!(!is_brill_zero(&sym(3, 3, "e1^3 + e2^3 + e3^3")).unwrap());
        for seed in 0..10 {
            for d in 2..=3 {
                let f = sample(seed, d, 3, SampleKind::Chow);
                assert!(is_brill_zero(&f).unwrap(), "seed {seed}, d = {d}");
                let scaled = f.scaled(&Rational::new(-5, 3).unwrap());
                assert!(is_brill_zero(&scaled).unwrap());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        for kind in [SampleKind::Chow, SampleKind::Generic] {
            assert_eq!(sample(42, 3, 3, kind), sample(42, 3, 3, kind));
        }
        assert_ne!(sample(1, 3, 3, SampleKind::Generic), sample(2, 3, 3, SampleKind::Generic));
        assert_eq!("chow".parse::<SampleKind>().unwrap(), SampleKind::Chow);
        assert!("other".parse::<SampleKind>().is_err());
    }

    #[test]
    fn generic_cubics_are_rarely_products() {
        let misses = (0..100)
            .filter(|&seed| !is_brill_zero(&sample(seed, 3, 3, SampleKind::Generic)).unwrap())
            .count();
        assert!(misses >= 95, "{misses}");
    }
}
