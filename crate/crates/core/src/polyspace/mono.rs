use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u16; 4]>;

fn leading_first(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// Monomial `e_1^{a_1} ... e_n^{a_n}` of `S^m V`.
///
/// Ordered graded-lexicographically with `e_1 > e_2 > ...`, leading monomial
/// first, so that a `BTreeMap<Mono, _>` iterates in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub(crate) Exps);

impl Mono {
    pub fn new(exps: &[u16]) -> Self {
        Mono(Exps::from_slice(exps))
    }

    pub fn one(n: usize) -> Self {
        Mono(smallvec::smallvec![0; n])
    }

    /// The basis vector `e_i` (0-based index).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Mono::one(n);
        m.0[i] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Mono {
        Mono(self.0.iter().map(|&a| a * k as u16).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Exps>>()
            .map(Mono)
    }

    /// Basis letters with multiplicity, e.g. `e_1^2 e_3 -> [0, 0, 2]`.
    pub fn letters(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat(i).take(a as usize))
            .collect()
    }

    /// All monomials of degree `m` in `n` variables, in canonical order.
    pub fn all(n: usize, m: u32) -> Vec<Mono> {
        fn rec(n: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Mono>) {
            if cur.len() + 1 == n {
                cur.push(left as u16);
                out.push(Mono::new(cur));
                cur.pop();
                return;
            }
            for a in (0..=left).rev() {
                cur.push(a as u16);
                rec(n, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if m == 0 {
                out.push(Mono::one(0));
            }
            return out;
        }
        rec(n, m, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        leading_first(&self.0, &other.0)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate().filter(|(_, &a)| a > 0) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "e{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of wedge letters `e_i ∧ e_j` (i < j) for `dim V = n`.
pub fn wedge_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in the order (1,2) < (1,3) < ... < (2,3) < ...
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_of(n: usize, idx: usize) -> (usize, usize) {
    let mut k = idx;
    for i in 0..n {
        let row = n - i - 1;
        if k < row {
            return (i, i + 1 + k);
        }
        k -= row;
    }
    panic!("pair index {idx} out of range for n = {n}")
}

/// Monomial `∏ (e_i ∧ e_j)^{w_ij}` of `S^d(∧²V)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WedgeMono(pub(crate) Exps);

impl WedgeMono {
    pub fn one(n: usize) -> Self {
        WedgeMono(smallvec::smallvec![0; wedge_len(n)])
    }

    pub fn from_exps(wexps: &[u16]) -> Self {
        WedgeMono(Exps::from_slice(wexps))
    }

    /// `(e_{i+1} ∧ e_{j+1})` for 0-based `i < j`.
    pub fn letter(n: usize, i: usize, j: usize) -> Self {
        let mut w = WedgeMono::one(n);
        w.0[pair_index(n, i, j)] = 1;
        w
    }

    /// Builds a wedge monomial from `(i, j, power)` triples with 0-based `i < j`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, u16)]) -> Self {
        let mut w = WedgeMono::one(n);
        for &(i, j, p) in pairs {
            w.0[pair_index(n, i, j)] += p;
        }
        w
    }

    pub fn wexps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn mul(&self, other: &WedgeMono) -> WedgeMono {
        WedgeMono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Dimension of `V` this monomial lives over.
    pub fn n(&self) -> usize {
        let len = self.0.len();
        (0..).find(|&n| wedge_len(n) >= len).unwrap_or(0).max(2)
    }
}

impl Ord for WedgeMono {
    fn cmp(&self, other: &Self) -> Ordering {
        leading_first(&self.0, &other.0)
    }
}

impl PartialOrd for WedgeMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WedgeMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut first = true;
        for (idx, &a) in self.0.iter().enumerate().filter(|(_, &a)| a > 0) {
            let (i, j) = pair_of(n, idx);
            write!(f, "(e{}∧e{})", i + 1, j + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WedgeMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_u ∧ e_v` (0-based) in the canonical wedge basis: `None` when `u == v`,
/// otherwise the pair index and whether the sign is negative.
pub fn wedge_of(n: usize, u: usize, v: usize) -> Option<(usize, bool)> {
    match u.cmp(&v) {
        Ordering::Equal => None,
        Ordering::Less => Some((pair_index(n, u, v), false)),
        Ordering::Greater => Some((pair_index(n, v, u), true)),
    }
}
