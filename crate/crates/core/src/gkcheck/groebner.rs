//! Buchberger's algorithm over `Q` with the Gebauer–Möller criteria.
//!
//! The order is graded reverse lexicographic with respect to a positive
//! grading (the weights `p`), which keeps every S-polynomial of a
//! quasi-homogeneous ideal homogeneous. Any monomial order decides
//! zero-dimensionality and the staircase size, so the grading is free.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::polyvec::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    exps: Vec<u32>,
    coef: BigRational,
}

/// A polynomial as terms sorted by decreasing order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<Term>,
}

#[derive(Clone, Debug)]
struct Order {
    grading: Vec<i64>,
}

impl Order {
    fn wdeg(&self, e: &[u32]) -> i64 {
        e.iter().zip(&self.grading).map(|(&a, &w)| a as i64 * w).sum()
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.wdeg(a).cmp(&self.wdeg(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        for k in (0..a.len()).rev() {
            match a[k].cmp(&b[k]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl GPoly {
    fn from_poly(p: &Poly, ord: &Order) -> GPoly {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                exps: m.0.clone(),
                coef: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.exps, &a.exps));
        GPoly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u32] {
        &self.terms[0].exps
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].coef.clone();
        if lc.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coef /= &lc;
        }
    }

    /// `self − c · x^shift · g`, merging sorted term lists.
    fn sub_mul(&self, c: &BigRational, shift: &[u32], g: &GPoly, ord: &Order) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|t| Term {
            exps: t.exps.iter().zip(shift).map(|(a, b)| a + b).collect(),
            coef: -(c * &t.coef),
        });
        let mut next_g = gi.next();
        loop {
            match (self.terms.get(i), next_g.as_ref()) {
                (None, None) => break,
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_g.take().unwrap());
                    next_g = gi.next();
                }
                (Some(a), Some(b)) => match ord.cmp(&a.exps, &b.exps) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next_g.take().unwrap());
                        next_g = gi.next();
                    }
                    Ordering::Equal => {
                        let s = &a.coef + &b.coef;
                        if !s.is_zero() {
                            out.push(Term {
                                exps: a.exps.clone(),
                                coef: s,
                            });
                        }
                        i += 1;
                        next_g = gi.next();
                    }
                },
            }
        }
        GPoly { terms: out }
    }
}

/// Outcome of a budgeted computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbOutcome {
    Done(Vec<Vec<u32>>),
    BudgetExceeded,
}

struct State<'a> {
    ord: &'a Order,
    polys: Vec<GPoly>,
    active: Vec<bool>,
    pairs: Vec<(usize, usize, Vec<u32>)>,
    steps: u64,
    budget: u64,
}

impl State<'_> {
    fn active_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.polys.len()).filter(|&i| self.active[i])
    }

    /// Full normal form; `None` on budget overrun.
    fn normal_form(&mut self, mut f: GPoly) -> Option<GPoly> {
        let mut done: Vec<Term> = Vec::new();
        while !f.is_zero() {
            let lt = f.terms[0].clone();
            let red = self
                .active_ids()
                .find(|&i| divides(self.polys[i].lm(), &lt.exps));
            match red {
                Some(i) => {
                    self.steps += 1;
                    if self.steps > self.budget {
                        return None;
                    }
                    let g = &self.polys[i];
                    let shift: Vec<u32> = lt.exps.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                    let c = &lt.coef / &g.terms[0].coef;
                    f = f.sub_mul(&c, &shift, g, self.ord);
                }
                None => {
                    done.push(lt);
                    f.terms.remove(0);
                }
            }
        }
        Some(GPoly { terms: done })
    }

    fn spoly(&self, i: usize, j: usize, l: &[u32]) -> GPoly {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let sf: Vec<u32> = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
        let sg: Vec<u32> = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
        let zero = GPoly { terms: vec![] };
        let a = zero.sub_mul(&-BigRational::one(), &sf, f, self.ord);
        a.sub_mul(&(&f.terms[0].coef / &g.terms[0].coef), &sg, g, self.ord)
    }

    fn update(&mut self, h: GPoly) {
        let hid = self.polys.len();
        let hlm = h.lm().to_vec();
        self.polys.push(h);
        self.active.push(true);
        let cands: Vec<(usize, Vec<u32>, bool)> = (0..hid)
            .filter(|&g| self.active[g])
            .map(|g| {
                let glm = self.polys[g].lm();
                (g, lcm(&hlm, glm), coprime(&hlm, glm))
            })
            .collect();
        // Keep a pair unless another candidate's lcm properly divides its lcm;
        // among equal lcms keep one (preferring a coprime one).
        let mut kept: Vec<(usize, Vec<u32>, bool)> = Vec::new();
        for (idx, (g, l, cp)) in cands.iter().enumerate() {
            let dominated = cands.iter().enumerate().any(|(jdx, (_, l2, cp2))| {
                if jdx == idx {
                    return false;
                }
                if l2 == l {
                    (*cp2 && !*cp) || (*cp2 == *cp && jdx < idx)
                } else {
                    divides(l2, l)
                }
            });
            if !dominated {
                kept.push((*g, l.clone(), *cp));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|(a, b, l)| {
            !(divides(&hlm, l)
                && lcm(polys[*a].lm(), &hlm) != *l
                && lcm(polys[*b].lm(), &hlm) != *l)
        });
        for (g, l, cp) in kept {
            if !cp {
                self.pairs.push((g, hid, l));
            }
        }
        for g in 0..hid {
            if self.active[g] && divides(&hlm, self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }
}

/// Leading monomials of a minimal Gröbner basis of the ideal generated by
/// `gens`, under graded reverse lex for `grading`. The budget counts
/// reduction steps.
pub fn leading_monomials(gens: &[Poly], grading: &[i64], budget: u64) -> GbOutcome {
    let ord = Order {
        grading: grading.to_vec(),
    };
    let mut st = State {
        ord: &ord,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        steps: 0,
        budget,
    };
    let mut inputs: Vec<GPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| GPoly::from_poly(p, &ord))
        .collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for f in inputs {
        let Some(mut h) = st.normal_form(f) else {
            return GbOutcome::BudgetExceeded;
        };
        if !h.is_zero() {
            h.make_monic();
            st.update(h);
        }
    }
    while !st.pairs.is_empty() {
        let best = (0..st.pairs.len())
            .min_by(|&a, &b| {
                ord.cmp(&st.pairs[a].2, &st.pairs[b].2)
                    .then_with(|| (st.pairs[a].0, st.pairs[a].1).cmp(&(st.pairs[b].0, st.pairs[b].1)))
            })
            .unwrap();
        let (i, j, l) = st.pairs.swap_remove(best);
        let s = st.spoly(i, j, &l);
        let Some(mut h) = st.normal_form(s) else {
            return GbOutcome::BudgetExceeded;
        };
        if !h.is_zero() {
            h.make_monic();
            st.update(h);
        }
    }
    let mut lms: Vec<Vec<u32>> = st.active_ids().map(|i| st.polys[i].lm().to_vec()).collect();
    lms.sort();
    lms.dedup();
    GbOutcome::Done(lms)
}

/// The leading-exponent staircase: for each variable the smallest pure
/// power among the leading monomials, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    pub leading_monomials: Vec<Vec<u32>>,
    pub pure_powers: Vec<Option<u32>>,
}

impl Staircase {
    pub fn new(mut leading_monomials: Vec<Vec<u32>>) -> Self {
        leading_monomials.sort();
        leading_monomials.dedup();
        let n = leading_monomials.first().map_or(0, Vec::len);
        let pure_powers = (0..n)
            .map(|k| {
                leading_monomials
                    .iter()
                    .filter(|m| m.iter().enumerate().all(|(i, &e)| i == k || e == 0))
                    .map(|m| m[k])
                    .min()
            })
            .collect();
        Staircase {
            leading_monomials,
            pure_powers,
        }
    }

    pub fn is_zero_dimensional(&self) -> bool {
        !self.pure_powers.is_empty() && self.pure_powers.iter().all(Option::is_some)
    }

    /// Number of standard monomials, i.e. the dimension of the quotient.
    pub fn quotient_dim(&self) -> Option<u64> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let bounds: Vec<u32> = self.pure_powers.iter().map(|p| p.unwrap()).collect();
        let n = bounds.len();
        let mut count = 0u64;
        let mut e = vec![0u32; n];
        fn go(k: usize, e: &mut Vec<u32>, bounds: &[u32], lms: &[Vec<u32>], count: &mut u64) {
            if k == e.len() {
                *count += 1;
                return;
            }
            for v in 0..bounds[k] {
                e[k] = v;
                // Only the prefix is fixed; a divisor must have zero tail.
                let blocked = lms.iter().any(|m| {
                    m[k + 1..].iter().all(|&x| x == 0) && divides(&m[..=k], &e[..=k])
                });
                if blocked {
                    break;
                }
                go(k + 1, e, bounds, lms, count);
            }
            e[k] = 0;
        }
        go(0, &mut e, &bounds, &self.leading_monomials, &mut count);
        Some(count)
    }
}
