use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::Zero;
use rustc_hash::FxHashMap;

use super::mono::{wedge_len, Mono, WedgeMono};
use crate::error::{Error, Result};
use crate::kernel::{binomial, Coeff, Rational, Vector};

pub(crate) fn accumulate<K: Ord, R: Coeff>(map: &mut BTreeMap<K, R>, key: K, c: R) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn collect_sorted<K: Ord + std::hash::Hash + Eq, R: Coeff>(acc: FxHashMap<K, R>) -> BTreeMap<K, R> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn check_n(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Methods shared by every sparse graded element.
macro_rules! sparse_common {
    ($ty:ident, $key:ty, $grade:ty) => {
        impl<R: Coeff> $ty<R> {
            pub fn zero(n: usize, grade: $grade) -> Self {
                $ty {
                    n,
                    grade,
                    terms: BTreeMap::new(),
                }
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn grade(&self) -> $grade {
                self.grade
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            /// Terms in canonical order.
            pub fn terms(&self) -> impl Iterator<Item = (&$key, &R)> {
                self.terms.iter()
            }

            pub fn into_terms(self) -> BTreeMap<$key, R> {
                self.terms
            }

            pub fn add_term(&mut self, key: $key, c: R) {
                accumulate(&mut self.terms, key, c);
            }

            pub fn scaled(&self, c: &Rational) -> Self {
                if c.is_zero() {
                    return Self::zero(self.n, self.grade);
                }
                let terms = self
                    .terms
                    .iter()
                    .map(|(k, v)| (k.clone(), v.scaled(c)))
                    .collect();
                $ty {
                    n: self.n,
                    grade: self.grade,
                    terms,
                }
            }

            pub fn scaled_by(&self, c: &R) -> Self {
                let mut out = Self::zero(self.n, self.grade);
                for (k, v) in &self.terms {
                    out.add_term(k.clone(), v.clone() * c);
                }
                out
            }

            pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> $ty<S> {
                $ty {
                    n: self.n,
                    grade: self.grade,
                    terms: self
                        .terms
                        .iter()
                        .map(|(k, v)| (k.clone(), f(v)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect(),
                }
            }

            pub fn try_add(&self, other: &Self) -> Result<Self> {
                check_n(self.n, other.n)?;
                if self.grade != other.grade {
                    return Err(Error::grade(self.grade, other.grade));
                }
                let mut out = self.clone();
                for (k, v) in &other.terms {
                    out.add_term(k.clone(), v.clone());
                }
                Ok(out)
            }
        }

        impl<'a, R: Coeff> AddAssign<&'a $ty<R>> for $ty<R> {
            fn add_assign(&mut self, other: &$ty<R>) {
                assert!(
                    self.n == other.n && (self.grade == other.grade || other.is_zero()),
                    "adding elements of different spaces"
                );
                for (k, v) in &other.terms {
                    self.add_term(k.clone(), v.clone());
                }
            }
        }

        impl<R: Coeff> Add for $ty<R> {
            type Output = $ty<R>;
            fn add(mut self, other: $ty<R>) -> $ty<R> {
                self += &other;
                self
            }
        }

        impl<R: Coeff> Neg for $ty<R> {
            type Output = $ty<R>;
            fn neg(self) -> $ty<R> {
                $ty {
                    n: self.n,
                    grade: self.grade,
                    terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
                }
            }
        }

        impl<R: Coeff> Sub for $ty<R> {
            type Output = $ty<R>;
            fn sub(self, other: $ty<R>) -> $ty<R> {
                self + (-other)
            }
        }

        impl<R: Coeff> Vector for $ty<R> {
            fn axpy(&mut self, c: &Rational, x: &Self) {
                assert!(self.n == x.n && self.grade == x.grade);
                for (k, v) in &x.terms {
                    self.add_term(k.clone(), v.scaled(c));
                }
            }

            fn scale(&mut self, c: &Rational) {
                *self = self.scaled(c);
            }

            fn is_zero_vector(&self) -> bool {
                self.is_zero()
            }
        }
    };
}

/// Sparse element of `S^m V` in the monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElement<R = Rational> {
    n: usize,
    grade: u32,
    terms: BTreeMap<Mono, R>,
}

sparse_common!(SymElement, Mono, u32);

impl<R: Coeff> SymElement<R> {
    pub fn from_terms(n: usize, grade: u32, terms: impl IntoIterator<Item = (Mono, R)>) -> Result<Self> {
        let mut out = Self::zero(n, grade);
        for (m, c) in terms {
            check_n(n, m.n())?;
            if m.degree() != grade {
                return Err(Error::grade(grade, m.degree()));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn monomial(m: Mono, c: R) -> Self {
        let mut out = Self::zero(m.n(), m.degree());
        out.add_term(m, c);
        out
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Mono::one(n), R::one())
    }

    /// The linear form `Σ c_i e_i`.
    pub fn linear(coeffs: &[R]) -> Self {
        let n = coeffs.len();
        let mut out = Self::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(Mono::var(n, i), c.clone());
        }
        out
    }

    pub fn coeff(&self, m: &Mono) -> Option<&R> {
        self.terms.get(m)
    }

    /// Ordinary polynomial product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_n(self.n, other.n)?;
        let mut acc: FxHashMap<Mono, R> = FxHashMap::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.clone() * cb;
                match acc.get_mut(&a.mul(b)) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(a.mul(b), c);
                    }
                }
            }
        }
        Ok(SymElement {
            n: self.n,
            grade: self.grade + other.grade,
            terms: collect_sorted(acc),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same n");
        }
        out
    }

    /// The `j`-th polarization `f_{j,δ-j} ∈ S^jV ⊗ S^{δ-j}V`, without the
    /// `1/C(δ,j)` normalization: `e^α ↦ Σ_{β ≤ α, |β| = j} ∏ C(α_i, β_i) e^β ⊗ e^{α-β}`.
    pub fn polarize(&self, j: u32) -> Result<Tens2Element<R>> {
        if j > self.grade {
            return Err(Error::InvalidArgument(format!(
                "polarization index {j} exceeds degree {}",
                self.grade
            )));
        }
        let mut out = Tens2Element::zero(self.n, (j, self.grade - j));
        let mut beta = vec![0u16; self.n];
        for (m, c) in &self.terms {
            sub_monomials(m.exps(), j as u16, 0, &mut beta, &mut |b| {
                let b = Mono::new(b);
                let rest = m.div(&b).expect("sub-monomial divides");
                let mult: num_bigint::BigInt = m
                    .exps()
                    .iter()
                    .zip(b.exps())
                    .map(|(&a, &bb)| binomial(a as u64, bb as u64))
                    .product();
                out.add_term((b, rest), c.scaled(&Rational::from_int(mult)));
            });
        }
        Ok(out)
    }
}

fn sub_monomials(alpha: &[u16], left: u16, i: usize, beta: &mut Vec<u16>, f: &mut impl FnMut(&[u16])) {
    if i == alpha.len() {
        if left == 0 {
            f(beta);
        }
        return;
    }
    let rest: u16 = alpha[i + 1..].iter().sum();
    let lo = left.saturating_sub(rest);
    for b in lo..=alpha[i].min(left) {
        beta[i] = b;
        sub_monomials(alpha, left - b, i + 1, beta, f);
    }
    beta[i] = 0;
}

/// Sparse element of `S^a V ⊗ S^b V`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tens2Element<R = Rational> {
    n: usize,
    grade: (u32, u32),
    terms: BTreeMap<(Mono, Mono), R>,
}

sparse_common!(Tens2Element, (Mono, Mono), (u32, u32));

impl<R: Coeff> Tens2Element<R> {
    pub fn from_terms(
        n: usize,
        grade: (u32, u32),
        terms: impl IntoIterator<Item = ((Mono, Mono), R)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n, grade);
        for ((a, b), c) in terms {
            check_n(n, a.n())?;
            check_n(n, b.n())?;
            if (a.degree(), b.degree()) != grade {
                return Err(Error::grade(grade, (a.degree(), b.degree())));
            }
            out.add_term((a, b), c);
        }
        Ok(out)
    }

    /// `1 ⊗ 1`
    pub fn one(n: usize) -> Self {
        let mut out = Self::zero(n, (0, 0));
        out.add_term((Mono::one(n), Mono::one(n)), R::one());
        out
    }

    /// `f ⊗ g`
    pub fn tensor(f: &SymElement<R>, g: &SymElement<R>) -> Result<Self> {
        check_n(f.n, g.n)?;
        let mut out = Self::zero(f.n, (f.grade, g.grade));
        for (a, ca) in &f.terms {
            for (b, cb) in &g.terms {
                out.add_term((a.clone(), b.clone()), ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn coeff(&self, a: &Mono, b: &Mono) -> Option<&R> {
        self.terms.get(&(a.clone(), b.clone()))
    }

    /// Slotwise product `(a⊗b)·(c⊗d) = ac ⊗ bd`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_n(self.n, other.n)?;
        let mut acc: FxHashMap<(Mono, Mono), R> = FxHashMap::default();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let key = (a.mul(c), b.mul(d));
                let c = c1.clone() * c2;
                match acc.get_mut(&key) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        Ok(Tens2Element {
            n: self.n,
            grade: (self.grade.0 + other.grade.0, self.grade.1 + other.grade.1),
            terms: collect_sorted(acc),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same n");
        }
        out
    }

    /// `x · (1 ⊗ g)`
    pub fn mul_second(&self, g: &SymElement<R>) -> Result<Self> {
        let one = SymElement::one(self.n);
        self.mul(&Tens2Element::tensor(&one, g)?)
    }

    /// Image under the product map `S^aV ⊗ S^bV → S^{a+b}V`.
    pub fn collapse(&self) -> SymElement<R> {
        let mut out = SymElement::zero(self.n, self.grade.0 + self.grade.1);
        for ((a, b), c) in &self.terms {
            out.add_term(a.mul(b), c.clone());
        }
        out
    }

    /// Terms grouped by their first-slot monomial: `Σ_h h ⊗ R_h`.
    pub fn by_first_slot(&self) -> BTreeMap<&Mono, Vec<(&Mono, &R)>> {
        let mut out: BTreeMap<&Mono, Vec<(&Mono, &R)>> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(a).or_default().push((b, c));
        }
        out
    }
}

/// Sparse element of `S^d(∧²V) ⊗ S^m V`.
#[derive(Clone, PartialEq, Eq)]
pub struct CurlyElement<R = Rational> {
    n: usize,
    grade: (u32, u32),
    terms: BTreeMap<(WedgeMono, Mono), R>,
}

sparse_common!(CurlyElement, (WedgeMono, Mono), (u32, u32));

impl<R: Coeff> CurlyElement<R> {
    pub fn from_terms(
        n: usize,
        grade: (u32, u32),
        terms: impl IntoIterator<Item = ((WedgeMono, Mono), R)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n, grade);
        for ((w, m), c) in terms {
            check_n(wedge_len(n), w.wexps().len())?;
            check_n(n, m.n())?;
            if (w.degree(), m.degree()) != grade {
                return Err(Error::grade(grade, (w.degree(), m.degree())));
            }
            out.add_term((w, m), c);
        }
        Ok(out)
    }

    pub fn coeff(&self, w: &WedgeMono, m: &Mono) -> Option<&R> {
        self.terms.get(&(w.clone(), m.clone()))
    }
}

fn fmt_terms<'a, K: 'a, R: Coeff + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a R)>,
    key: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut any = false;
    for (k, c) in terms {
        if any {
            write!(f, " + ")?;
        }
        any = true;
        write!(f, "({c:?})*{}", key(k))?;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

impl<R: Coeff> fmt::Debug for SymElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |m| m.to_string())
    }
}

impl<R: Coeff> fmt::Debug for Tens2Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |(a, b)| format!("{a}⊗{b}"))
    }
}

impl<R: Coeff> fmt::Debug for CurlyElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |(w, m)| format!("{w}⊗{m}"))
    }
}
