use crate::brill::PlethysmVector;
use crate::kernel::{Coeff, Rational};
use crate::polyspace::{pair_of, wedge_of, CurlyElement, Mono, SymElement, WedgeMono};

/// The Lie algebra action of `E^i_j` (0-based indices), the derivation that
/// replaces one `e_j` by `e_i`. It raises for `i < j` and lowers for `i > j`;
/// `E^i_i` multiplies a monomial by its `i`-th weight.
pub trait Raise: Sized {
    fn raise(&self, i: usize, j: usize) -> Self;
}

fn raise_mono(m: &Mono, i: usize, j: usize) -> Option<(Mono, u16)> {
    let a = m.exps()[j];
    if a == 0 {
        return None;
    }
    let mut out = m.clone();
    out.0[j] -= 1;
    out.0[i] += 1;
    Some((out, a))
}

/// `E^i_j` on a wedge monomial as a list of `(monomial, signed multiplicity)`.
fn raise_wedge(w: &WedgeMono, n: usize, i: usize, j: usize) -> Vec<(WedgeMono, i64)> {
    let mut out = Vec::new();
    for (idx, &p) in w.wexps().iter().enumerate() {
        if p == 0 {
            continue;
        }
        let (u, v) = pair_of(n, idx);
        let images = [(u == j).then(|| wedge_of(n, i, v)), (v == j).then(|| wedge_of(n, u, i))];
        for (new_idx, negative) in images.into_iter().flatten().flatten() {
            let mut nw = w.clone();
            nw.0[idx] -= 1;
            nw.0[new_idx] += 1;
            let c = i64::from(p);
            out.push((nw, if negative { -c } else { c }));
        }
    }
    out
}

impl<R: Coeff> Raise for SymElement<R> {
    fn raise(&self, i: usize, j: usize) -> Self {
        let mut out = SymElement::zero(self.n(), self.grade());
        for (m, c) in self.terms() {
            if let Some((nm, a)) = raise_mono(m, i, j) {
                out.add_term(nm, c.scaled(&Rational::from(a)));
            }
        }
        out
    }
}

impl<R: Coeff> Raise for CurlyElement<R> {
    fn raise(&self, i: usize, j: usize) -> Self {
        let n = self.n();
        let mut out = CurlyElement::zero(n, self.grade());
        for ((w, m), c) in self.terms() {
            for (nw, k) in raise_wedge(w, n, i, j) {
                out.add_term((nw, m.clone()), c.scaled(&Rational::from(k)));
            }
            if let Some((nm, a)) = raise_mono(m, i, j) {
                out.add_term((w.clone(), nm), c.scaled(&Rational::from(a)));
            }
        }
        out
    }
}

impl Raise for PlethysmVector {
    fn raise(&self, i: usize, j: usize) -> Self {
        let mut out = PlethysmVector::zero(self.n(), self.k(), self.d());
        for (factors, c) in self.terms() {
            for (pos, m) in factors.iter().enumerate() {
                if let Some((nm, a)) = raise_mono(m, i, j) {
                    let mut nf = factors.clone();
                    nf[pos] = nm;
                    out.add_unchecked(nf, c * &Rational::from(a));
                }
            }
        }
        out
    }
}

/// Images of a single basis monomial, used to assemble raising matrices.
pub(crate) fn raise_curly_monomial(
    key: &(WedgeMono, Mono),
    n: usize,
    i: usize,
    j: usize,
) -> Vec<((WedgeMono, Mono), Rational)> {
    let (w, m) = key;
    let mut out: Vec<_> = raise_wedge(w, n, i, j)
        .into_iter()
        .map(|(nw, k)| ((nw, m.clone()), Rational::from(k)))
        .collect();
    if let Some((nm, a)) = raise_mono(m, i, j) {
        out.push(((w.clone(), nm), Rational::from(a)));
    }
    out
}

pub(crate) fn raise_plethysm_monomial(
    factors: &[Mono],
    i: usize,
    j: usize,
) -> Vec<(Vec<Mono>, Rational)> {
    let mut out = Vec::new();
    for (pos, m) in factors.iter().enumerate() {
        if let Some((nm, a)) = raise_mono(m, i, j) {
            let mut nf = factors.to_vec();
            nf[pos] = nm;
            nf.sort();
            out.push((nf, Rational::from(a)));
        }
    }
    out
}
