use std::collections::HashMap;

use super::girard::girard_terms;
use crate::error::{Error, Result};
use crate::kernel::Coeff;
use crate::polyspace::{SymElement, Tens2Element};

/// `E_j(f) = f_{j,δ-j} · (1 ⊗ f^{j-1})`, zero when `j > δ`.
pub fn e_map<R: Coeff>(f: &SymElement<R>, j: u32) -> Result<Tens2Element<R>> {
    let delta = f.grade();
    if delta == 0 {
        return Err(Error::InvalidArgument("E_j needs a form of positive degree".into()));
    }
    let grade = (j, j * (delta - 1));
    if j > delta {
        return Ok(Tens2Element::zero(f.n(), grade));
    }
    if j == 0 {
        return Ok(Tens2Element::one(f.n()));
    }
    f.polarize(j)?.mul_second(&f.pow(j - 1))
}

/// Lazily built powers of a fixed base.
struct Powers<T> {
    cache: HashMap<u32, T>,
}

impl<T: Clone> Powers<T> {
    fn new(one: T) -> Self {
        let mut cache = HashMap::new();
        cache.insert(0, one);
        Powers { cache }
    }

    fn get(&mut self, k: u32, mul: impl Fn(&T) -> T) -> T {
        let mut top = (0..=k).rev().find(|i| self.cache.contains_key(i)).unwrap_or(0);
        while top < k {
            let next = mul(&self.cache[&top]);
            top += 1;
            self.cache.insert(top, next);
        }
        self.cache[&k].clone()
    }
}

/// `Q_{d,δ}(f)` through the expanded Girard form
/// `Σ c_i (∏_j f_{j,δ-j}^{i_j}) · (1 ⊗ f^{d - Σi})`.
pub fn q_map<R: Coeff>(f: &SymElement<R>, d: u32) -> Result<Tens2Element<R>> {
    let delta = f.grade();
    if delta == 0 || d == 0 {
        return Err(Error::InvalidArgument("Q_d needs d ≥ 1 and deg f ≥ 1".into()));
    }
    let n = f.n();
    let polar: Vec<Option<Tens2Element<R>>> = (1..=d)
        .map(|j| (j <= delta).then(|| f.polarize(j)).transpose())
        .collect::<Result<_>>()?;
    let mut polar_pows: Vec<Powers<Tens2Element<R>>> =
        (0..d).map(|_| Powers::new(Tens2Element::one(n))).collect();
    let mut f_pows = Powers::new(SymElement::one(n));

    let mut out = Tens2Element::zero(n, (d, d * (delta - 1)));
    'terms: for term in girard_terms(d, d) {
        let mut prod = Tens2Element::one(n);
        for (idx, &i) in term.multidegree.iter().enumerate() {
            if i == 0 {
                continue;
            }
            let Some(p) = &polar[idx] else {
                continue 'terms;
            };
            let pw = polar_pows[idx].get(i, |x| x.mul(p).expect("same n"));
            prod = prod.mul(&pw)?;
        }
        let rest = f_pows.get(d - term.length(), |x| x.mul(f).expect("same n"));
        out += &prod.mul_second(&rest)?.scaled(&term.coeff);
    }
    Ok(out)
}

/// `Q_{d,δ}(f) = 𝒫_d(E_1(f), ..., E_d(f))`, substituting the `E_j` directly.
/// Independent route used to cross-check [`q_map`].
pub fn q_map_via_e<R: Coeff>(f: &SymElement<R>, d: u32) -> Result<Tens2Element<R>> {
    let delta = f.grade();
    if delta == 0 || d == 0 {
        return Err(Error::InvalidArgument("Q_d needs d ≥ 1 and deg f ≥ 1".into()));
    }
    let n = f.n();
    let es: Vec<Tens2Element<R>> = (1..=d).map(|j| e_map(f, j)).collect::<Result<_>>()?;
    let mut out = Tens2Element::zero(n, (d, d * (delta - 1)));
    for term in girard_terms(d, d) {
        let mut prod = Tens2Element::one(n);
        for (e, &i) in es.iter().zip(&term.multidegree) {
            for _ in 0..i {
                prod = prod.mul(e)?;
            }
        }
        if prod.is_zero() {
            continue;
        }
        out += &prod.scaled(&term.coeff);
    }
    Ok(out)
}
