use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyspace::{pair_of, CurlyElement, Mono, SymElement, WedgeMono};
use crate::kernel::Coeff;

/// Weight `(a_1, ..., a_n)` of a vector under the diagonal torus of `GL(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GLWeight(pub Vec<i64>);

impl GLWeight {
    pub fn zero(n: usize) -> Self {
        GLWeight(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &GLWeight) -> GLWeight {
        GLWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The weight of `E^i_j` (0-based): `ε_i - ε_j`.
    pub fn root(n: usize, i: usize, j: usize) -> GLWeight {
        let mut w = GLWeight::zero(n);
        w.0[i] += 1;
        w.0[j] -= 1;
        w
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<&Partition> for GLWeight {
    fn from(p: &Partition) -> Self {
        GLWeight(p.parts().iter().map(|&x| i64::from(x)).collect())
    }
}

/// Weakly decreasing sequence of positive integers; trailing zeros are
/// dropped, so `(4,2,0)` and `(4,2)` are the same partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_parts_unchecked(parts.to_vec()))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The parts padded with zeros to length `N`. Panics if there are more
    /// than `N` parts.
    pub fn padded<const N: usize>(&self) -> [u32; N] {
        assert!(self.len() <= N, "{self} has more than {N} parts");
        let mut out = [0; N];
        out[..self.len()].copy_from_slice(&self.0);
        out
    }

    /// All partitions of `size` with at most `max_len` parts, in decreasing
    /// lexicographic order.
    pub fn all(size: u32, max_len: usize) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,2"`, `"(4,2,0)"` or `"4 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(de)?;
        Partition::new(&parts).map_err(serde::de::Error::custom)
    }
}

/// Monomials whose torus weight is their exponent tally.
pub trait Weighted {
    fn weight(&self) -> GLWeight;
}

impl Weighted for Mono {
    fn weight(&self) -> GLWeight {
        GLWeight(self.exps().iter().map(|&a| i64::from(a)).collect())
    }
}

impl Weighted for WedgeMono {
    /// Each letter `e_i ∧ e_j` contributes 1 to both `a_i` and `a_j`.
    fn weight(&self) -> GLWeight {
        let n = self.n();
        let mut w = GLWeight::zero(n);
        for (idx, &p) in self.wexps().iter().enumerate() {
            let (i, j) = pair_of(n, idx);
            w.0[i] += i64::from(p);
            w.0[j] += i64::from(p);
        }
        w
    }
}

impl Weighted for (WedgeMono, Mono) {
    fn weight(&self) -> GLWeight {
        self.0.weight().add(&self.1.weight())
    }
}

impl Weighted for [Mono] {
    fn weight(&self) -> GLWeight {
        let n = self.first().map_or(0, Mono::n);
        self.iter().fold(GLWeight::zero(n), |acc, m| acc.add(&m.weight()))
    }
}

impl Weighted for Vec<Mono> {
    fn weight(&self) -> GLWeight {
        self.as_slice().weight()
    }
}

pub fn weight_of<T: Weighted + ?Sized>(x: &T) -> GLWeight {
    x.weight()
}

impl<R: Coeff> SymElement<R> {
    /// The common weight of all terms, if this is a nonzero weight vector.
    pub fn weight(&self) -> Option<GLWeight> {
        common_weight(self.terms().map(|(m, _)| m.weight()))
    }
}

impl<R: Coeff> CurlyElement<R> {
    /// The common weight of all terms, if this is a nonzero weight vector.
    pub fn weight(&self) -> Option<GLWeight> {
        common_weight(self.terms().map(|(k, _)| k.weight()))
    }
}

fn common_weight(mut ws: impl Iterator<Item = GLWeight>) -> Option<GLWeight> {
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}
