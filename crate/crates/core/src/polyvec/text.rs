//! Plain-text rendering of polynomials and fields.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! field  := "0" | term (("+" | "-") term)*      with a leading "-" allowed
//! term   := [coef "*"] [mono] "d/dx" INDEX       (coef and mono not both empty
//!                                                 unless the term is d/dxK)
//! mono   := var ("*" var)*
//! var    := "x" INDEX ["^" EXP]
//! coef   := INT ["/" INT]
//! ```
//!
//! Polynomials use the same `term` rule without the `d/dx` suffix.
//! Terms print by component, then descending graded-lex order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::VectorField;
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

fn render_mono(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", k + 1)),
            _ => parts.push(format!("x{}^{}", k + 1, e)),
        }
    }
    parts.join("*")
}

/// Appends one signed term; `suffix` is `""` or `" d/dxK"`.
fn push_term(out: &mut String, m: &Monomial, c: &BigRational, suffix: &str) {
    let neg = c.is_negative();
    let a = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mono = render_mono(m);
    let unit = a.is_one();
    if !unit || (mono.is_empty() && suffix.is_empty()) {
        write!(out, "{a}").unwrap();
        if !mono.is_empty() {
            out.push('*');
        }
    }
    out.push_str(&mono);
    if !suffix.is_empty() && (!mono.is_empty() || !unit) {
        out.push(' ');
    }
    out.push_str(suffix.trim_start());
}

pub fn render_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        push_term(&mut out, m, c, "");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_field(x: &VectorField) -> String {
    let mut out = String::new();
    for (j, c) in x.components().iter().enumerate() {
        let suffix = format!(" d/dx{}", j + 1);
        for (m, a) in c.terms().rev() {
            push_term(&mut out, m, a, &suffix);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if ch == '+' || ch == '-' {
            if i > 0 {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    terms.push((neg, cur));
    Ok(terms)
}

fn parse_index(s: &str, n: usize) -> Result<usize> {
    let k: usize = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad variable index {s:?}")))?;
    if k == 0 || k > n {
        return Err(Error::Parse(format!("variable index {k} out of range 1..={n}")));
    }
    Ok(k - 1)
}

fn parse_coef(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_monomial_term(s: &str, n: usize) -> Result<(Monomial, BigRational)> {
    let mut exps = vec![0u32; n];
    let mut coef = BigRational::one();
    if s.is_empty() {
        return Ok((Monomial(exps), coef));
    }
    for (i, f) in s.split('*').enumerate() {
        if let Some(rest) = f.strip_prefix('x') {
            let (idx, e) = match rest.split_once('^') {
                Some((a, b)) => (
                    a,
                    b.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?,
                ),
                None => (rest, 1),
            };
            exps[parse_index(idx, n)?] += e;
        } else if i == 0 {
            coef = parse_coef(f)?;
        } else {
            return Err(Error::Parse(format!("unexpected factor {f:?}")));
        }
    }
    Ok((Monomial(exps), coef))
}

pub fn parse_poly(s: &str, n: usize) -> Result<Poly> {
    let mut p = Poly::zero(n);
    for (neg, t) in split_terms(s)? {
        let (m, c) = parse_monomial_term(&t, n)?;
        p.add_term(m, if neg { -c } else { c });
    }
    Ok(p)
}

pub fn parse_field(s: &str, n: usize) -> Result<VectorField> {
    if s.trim() == "0" {
        return Ok(VectorField::zero(n));
    }
    let mut comps = vec![Poly::zero(n); n];
    for (neg, t) in split_terms(s)? {
        let pos = t
            .find("d/dx")
            .ok_or_else(|| Error::Parse(format!("term {t:?} has no d/dx")))?;
        let j = parse_index(&t[pos + 4..], n)?;
        let head = t[..pos].strip_suffix('*').unwrap_or(&t[..pos]);
        let (m, c) = parse_monomial_term(head, n)?;
        comps[j].add_term(m, if neg { -c } else { c });
    }
    VectorField::new(comps)
}
