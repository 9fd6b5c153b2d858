//! Compact text notation for elements, used by tests and the CLI:
//! `"e1^2*e2 - 1/2*e3^3"`, `"2*e1*e3 @ e2*e3"` (or `⊗`) and `"w12^2*w13 @ e1^2"`
//! where `wij` is the wedge letter `e_i ∧ e_j`.

use num_traits::One;

use super::{pair_index, CurlyElement, Mono, SymElement, Tens2Element, WedgeMono};
use crate::error::{Error, Result};
use crate::kernel::Rational;

fn bad(s: &str) -> Error {
    Error::Parse(format!("cannot parse term {s:?}"))
}

fn split_terms(s: &str) -> Result<Vec<(Rational, String)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.replace('⊗', "@").replace('\u{2212}', "-");
    if s == "0" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            out.push((negative, std::mem::take(&mut cur)));
            negative = ch == '-';
        } else if ch == '-' {
            negative = !negative;
        } else if ch != '+' {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(bad(&s));
    }
    out.push((negative, cur));
    out.into_iter()
        .map(|(neg, body)| {
            let (coeff, rest) = leading_coeff(&body)?;
            Ok((if neg { -coeff } else { coeff }, rest))
        })
        .collect()
}

fn leading_coeff(body: &str) -> Result<(Rational, String)> {
    let first = body.split(['*', '@']).next().unwrap_or_default();
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        let c: Rational = first.parse()?;
        let rest = body[first.len()..].trim_start_matches('*').to_string();
        let rest = if rest.is_empty() || rest.starts_with('@') {
            format!("1{rest}")
        } else {
            rest
        };
        Ok((c, rest))
    } else {
        Ok((Rational::one(), body.to_string()))
    }
}

fn factor(f: &str) -> Result<(char, Vec<usize>, u16)> {
    let (base, pow) = match f.split_once('^') {
        Some((b, p)) => (b, p.parse::<u16>().map_err(|_| bad(f))?),
        None => (f, 1),
    };
    let mut chars = base.chars();
    let kind = chars.next().ok_or_else(|| bad(f))?;
    let digits: Vec<usize> = chars
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| bad(f))?;
    Ok((kind, digits, pow))
}

fn parse_mono(n: usize, s: &str) -> Result<Mono> {
    let mut exps = vec![0u16; n];
    for f in s.split('*').filter(|f| *f != "1") {
        match factor(f)? {
            ('e', idx, p) if idx.len() == 1 && (1..=n).contains(&idx[0]) => exps[idx[0] - 1] += p,
            _ => return Err(bad(s)),
        }
    }
    Ok(Mono::new(&exps))
}

fn parse_wedge(n: usize, s: &str) -> Result<WedgeMono> {
    let mut w = WedgeMono::one(n);
    for f in s.split('*').filter(|f| *f != "1") {
        match factor(f)? {
            ('w', idx, p) if idx.len() == 2 && 1 <= idx[0] && idx[0] < idx[1] && idx[1] <= n => {
                w.0[pair_index(n, idx[0] - 1, idx[1] - 1)] += p;
            }
            _ => return Err(bad(s)),
        }
    }
    Ok(w)
}

impl SymElement {
    /// Parses e.g. `"e1^2*e2 - 3*e3^3"`; `grade` is needed for the empty sum.
    pub fn parse(n: usize, grade: u32, s: &str) -> Result<Self> {
        let terms = split_terms(s)?
            .into_iter()
            .map(|(c, body)| Ok((parse_mono(n, &body)?, c)))
            .collect::<Result<Vec<_>>>()?;
        SymElement::from_terms(n, grade, terms)
    }
}

impl Tens2Element {
    pub fn parse(n: usize, grade: (u32, u32), s: &str) -> Result<Self> {
        let terms = split_terms(s)?
            .into_iter()
            .map(|(c, body)| {
                let (a, b) = body.split_once('@').ok_or_else(|| bad(&body))?;
                Ok(((parse_mono(n, a)?, parse_mono(n, b)?), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Tens2Element::from_terms(n, grade, terms)
    }
}

impl CurlyElement {
    pub fn parse(n: usize, grade: (u32, u32), s: &str) -> Result<Self> {
        let terms = split_terms(s)?
            .into_iter()
            .map(|(c, body)| {
                let (a, b) = body.split_once('@').ok_or_else(|| bad(&body))?;
                Ok(((parse_wedge(n, a)?, parse_mono(n, b)?), c))
            })
            .collect::<Result<Vec<_>>>()?;
        CurlyElement::from_terms(n, grade, terms)
    }
}
